//! Finite groups as validated semigroups: subgroup enumeration, intervals,
//! setwise products, cosets, duals, direct products, and a zoo of small
//! group builders used throughout the tests and the CLI.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::semigroup::{ElementId, FiniteSemigroup};

/// Default refusal bound for subgroup enumeration.
pub const DEFAULT_SUBGROUP_BOUND: usize = 24;

/// A group: a semigroup with a two-sided identity and two-sided inverses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    carrier: FiniteSemigroup,
    identity: ElementId,
    inverse: Vec<ElementId>,
}

/// A subgroup, stored as its full member set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup {
    members: BTreeSet<ElementId>,
}

impl Subgroup {
    pub fn members(&self) -> &BTreeSet<ElementId> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, g: ElementId) -> bool {
        self.members.contains(&g)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }
}

impl FiniteGroup {
    /// Group validation: needs a two-sided identity and a two-sided inverse
    /// for every element.
    pub fn from_semigroup(carrier: FiniteSemigroup) -> Result<Self> {
        let special = carrier.special_elements();
        let identity = special
            .identity
            .ok_or_else(|| Error::NotAGroup("no two-sided identity".into()))?;
        let mut inverse = Vec::with_capacity(carrier.order());
        for a in carrier.elements() {
            let inv = carrier
                .elements()
                .find(|&b| carrier.mul(a, b) == identity && carrier.mul(b, a) == identity);
            match inv {
                Some(b) => inverse.push(b),
                None => {
                    return Err(Error::NotAGroup(format!(
                        "element {a} has no two-sided inverse"
                    )))
                }
            }
        }
        Ok(FiniteGroup {
            carrier,
            identity,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.carrier.order()
    }

    pub fn carrier(&self) -> &FiniteSemigroup {
        &self.carrier
    }

    pub fn identity(&self) -> ElementId {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.carrier.mul(a, b)
    }

    pub fn inverse(&self, a: ElementId) -> ElementId {
        self.inverse[a]
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        self.carrier.elements()
    }

    /// Validates a member set as a subgroup.
    pub fn subgroup(&self, members: impl IntoIterator<Item = ElementId>) -> Result<Subgroup> {
        let members: BTreeSet<ElementId> = members.into_iter().collect();
        if members.iter().any(|&m| m >= self.order()) {
            return Err(Error::NotAGroup("member out of range".into()));
        }
        if !members.contains(&self.identity) {
            return Err(Error::NotAGroup(
                "subgroup must contain the identity".into(),
            ));
        }
        for &a in &members {
            if !members.contains(&self.inverse(a)) {
                return Err(Error::NotAGroup(format!(
                    "subgroup not closed under inverse of {a}"
                )));
            }
            for &b in &members {
                if !members.contains(&self.mul(a, b)) {
                    return Err(Error::NotAGroup(format!(
                        "subgroup not closed under {a}*{b}"
                    )));
                }
            }
        }
        Ok(Subgroup { members })
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            members: BTreeSet::from([self.identity]),
        }
    }

    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup {
            members: self.elements().collect(),
        }
    }

    /// Subgroup generated by a set of elements. In a finite group, closure
    /// under products alone already yields inverses.
    pub fn subgroup_generated(&self, gens: &[ElementId]) -> Subgroup {
        let mut members = BTreeSet::from([self.identity]);
        let mut queue: Vec<ElementId> = Vec::new();
        for &g in gens {
            if members.insert(g) {
                queue.push(g);
            }
        }
        while let Some(x) = queue.pop() {
            let snapshot: Vec<ElementId> = members.iter().copied().collect();
            for y in snapshot {
                for p in [self.mul(x, y), self.mul(y, x)] {
                    if members.insert(p) {
                        queue.push(p);
                    }
                }
            }
        }
        Subgroup { members }
    }

    /// Every subgroup, via cyclic and two-generator seeds saturated under
    /// binary join. Complete because each subgroup is an iterated join of
    /// cyclic subgroups. Sorted by (size, members).
    pub fn all_subgroups(&self) -> Result<Vec<Subgroup>> {
        self.all_subgroups_bounded(DEFAULT_SUBGROUP_BOUND)
    }

    pub fn all_subgroups_bounded(&self, bound: usize) -> Result<Vec<Subgroup>> {
        let n = self.order();
        if n > bound {
            return Err(Error::BoundExceeded { order: n, bound });
        }
        let mut found: BTreeSet<Subgroup> = BTreeSet::new();
        found.insert(self.trivial_subgroup());
        for a in self.elements() {
            found.insert(self.subgroup_generated(&[a]));
            for b in a + 1..n {
                found.insert(self.subgroup_generated(&[a, b]));
            }
        }
        let mut frontier: Vec<Subgroup> = found.iter().cloned().collect();
        while let Some(h) = frontier.pop() {
            let snapshot: Vec<Subgroup> = found.iter().cloned().collect();
            for k in snapshot {
                if h.is_subgroup_of(&k) || k.is_subgroup_of(&h) {
                    continue;
                }
                let gens: Vec<ElementId> =
                    h.members.iter().chain(k.members.iter()).copied().collect();
                let join = self.subgroup_generated(&gens);
                if found.insert(join.clone()) {
                    frontier.push(join);
                }
            }
        }
        let mut out: Vec<Subgroup> = found.into_iter().collect();
        out.sort_by_key(|h| (h.len(), h.members.clone()));
        Ok(out)
    }

    /// All subgroups `K` with `h ⊆ K ⊆ G`.
    pub fn interval_above(&self, h: &Subgroup) -> Result<Vec<Subgroup>> {
        self.interval_above_bounded(h, DEFAULT_SUBGROUP_BOUND)
    }

    pub fn interval_above_bounded(&self, h: &Subgroup, bound: usize) -> Result<Vec<Subgroup>> {
        Ok(self
            .all_subgroups_bounded(bound)?
            .into_iter()
            .filter(|k| h.is_subgroup_of(k))
            .collect())
    }

    /// Setwise products `HK` and `KH` and whether they coincide.
    pub fn product_commutes(&self, h: &Subgroup, k: &Subgroup) -> SetProductCheck {
        let product = |x: &Subgroup, y: &Subgroup| -> BTreeSet<ElementId> {
            let mut out = BTreeSet::new();
            for &a in &x.members {
                for &b in &y.members {
                    out.insert(self.mul(a, b));
                }
            }
            out
        };
        let hk = product(h, k);
        let kh = product(k, h);
        SetProductCheck {
            commutes: hk == kh,
            hk,
            kh,
        }
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.elements().all(|g| {
            h.members
                .iter()
                .all(|&x| h.contains(self.mul(self.mul(g, x), self.inverse(g))))
        })
    }

    /// Right cosets `Hg`, sorted by smallest member.
    pub fn right_cosets(&self, h: &Subgroup) -> Vec<BTreeSet<ElementId>> {
        let mut cosets: BTreeSet<BTreeSet<ElementId>> = BTreeSet::new();
        for g in self.elements() {
            cosets.insert(h.members.iter().map(|&x| self.mul(x, g)).collect());
        }
        let mut out: Vec<BTreeSet<ElementId>> = cosets.into_iter().collect();
        out.sort_by_key(|c| *c.first().expect("cosets are non-empty"));
        out
    }

    /// The dual group: same carrier, reversed multiplication.
    pub fn dual(&self) -> FiniteGroup {
        FiniteGroup {
            carrier: self.carrier.transpose(),
            identity: self.identity,
            inverse: self.inverse.clone(),
        }
    }

    /// Direct product with pair `(a, b)` stored at id `a * other.order() + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let n1 = self.order();
        let n2 = other.order();
        let n = n1 * n2;
        let mut table = vec![0; n * n];
        for a1 in 0..n1 {
            for a2 in 0..n2 {
                for b1 in 0..n1 {
                    for b2 in 0..n2 {
                        let a = a1 * n2 + a2;
                        let b = b1 * n2 + b2;
                        table[a * n + b] = self.mul(a1, b1) * n2 + other.mul(a2, b2);
                    }
                }
            }
        }
        let carrier = FiniteSemigroup::from_flat(n, table).expect("product of groups");
        FiniteGroup::from_semigroup(carrier).expect("product of groups is a group")
    }

    /// Id of the pair `(a, b)` inside `self.direct_product(other)`.
    pub fn pair_id(&self, other: &FiniteGroup, a: ElementId, b: ElementId) -> ElementId {
        debug_assert!(a < self.order() && b < other.order());
        a * other.order() + b
    }
}

/// Result of comparing the setwise products `HK` and `KH`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetProductCheck {
    pub commutes: bool,
    pub hk: BTreeSet<ElementId>,
    pub kh: BTreeSet<ElementId>,
}

// ---------------------------------------------------------------------------
// Builders for the small groups the tests and CLI examples lean on.
// ---------------------------------------------------------------------------

/// Z_n with identity 0.
pub fn cyclic_group(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let table: Vec<usize> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a + b) % n))
        .collect();
    FiniteGroup::from_semigroup(FiniteSemigroup::from_flat(n, table).unwrap()).unwrap()
}

pub fn klein_group() -> FiniteGroup {
    cyclic_group(2).direct_product(&cyclic_group(2))
}

/// S_n for n <= 4, with permutations of `0..n` listed lexicographically (so
/// the identity permutation has id 0) and `(p * q)(x) = p(q(x))`.
pub fn symmetric_group(n: usize) -> FiniteGroup {
    assert!(
        (1..=4).contains(&n),
        "symmetric group builder supports n <= 4"
    );
    let perms = permutations(n);
    let order = perms.len();
    let index_of = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
    let mut table = vec![0; order * order];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            let composed: Vec<usize> = (0..n).map(|x| p[q[x]]).collect();
            table[i * order + j] = index_of(&composed);
        }
    }
    FiniteGroup::from_semigroup(FiniteSemigroup::from_flat(order, table).unwrap()).unwrap()
}

/// A_n for n <= 4: the even permutations of S_n, re-indexed.
pub fn alternating_group(n: usize) -> FiniteGroup {
    let sym = symmetric_group(n);
    let perms = permutations(n);
    let even: BTreeSet<usize> = (0..perms.len())
        .filter(|&i| parity(&perms[i]) == 0)
        .collect();
    let carrier = sym
        .carrier()
        .induced(&even)
        .expect("even permutations are closed");
    FiniteGroup::from_semigroup(carrier).expect("alternating group")
}

/// Dihedral group of order 2n: rotations `r^i` at ids `0..n`, reflections
/// `s r^i` at ids `n..2n`.
pub fn dihedral_group(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let order = 2 * n;
    let mut table = vec![0; order * order];
    let rot = |i: usize| i % n;
    let refl = |i: usize| n + i % n;
    for i in 0..n {
        for j in 0..n {
            table[i * order + j] = rot(i + j);
            table[i * order + (n + j)] = refl(n + j - i); // r^i (s r^j) = s r^(j-i)
            table[(n + i) * order + j] = refl(i + j); // (s r^i) r^j = s r^(i+j)
            table[(n + i) * order + (n + j)] = rot(n + j - i); // (s r^i)(s r^j) = r^(j-i)
        }
    }
    FiniteGroup::from_semigroup(FiniteSemigroup::from_flat(order, table).unwrap()).unwrap()
}

/// The quaternion group, elements ordered 1, -1, i, -i, j, -j, k, -k.
pub fn quaternion_group() -> FiniteGroup {
    // axes: 0 = 1, 1 = i, 2 = j, 3 = k; entry = (axis, sign flip)
    const AXIS_MUL: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let id = |axis: usize, neg: bool| axis * 2 + neg as usize;
    let mut table = vec![0; 64];
    for a_axis in 0..4 {
        for a_neg in [false, true] {
            for b_axis in 0..4 {
                for b_neg in [false, true] {
                    let (axis, flip) = AXIS_MUL[a_axis][b_axis];
                    let neg = a_neg ^ b_neg ^ flip;
                    table[id(a_axis, a_neg) * 8 + id(b_axis, b_neg)] = id(axis, neg);
                }
            }
        }
    }
    FiniteGroup::from_semigroup(FiniteSemigroup::from_flat(8, table).unwrap()).unwrap()
}

/// Dicyclic group of order 4n: `a^i` at ids `0..2n`, `a^i b` at `2n..4n`,
/// with `b^2 = a^n` and `b a = a^(-1) b`.
pub fn dicyclic_group(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let m = 2 * n;
    let order = 4 * n;
    let mut table = vec![0; order * order];
    for i in 0..m {
        for j in 0..m {
            table[i * order + j] = (i + j) % m;
            table[i * order + (m + j)] = m + (i + j) % m; // a^i (a^j b)
            table[(m + i) * order + j] = m + (m + i - j % m) % m; // (a^i b) a^j = a^(i-j) b
            table[(m + i) * order + (m + j)] = (m + i - j % m + n) % m; // (a^i b)(a^j b) = a^(i-j+n)
        }
    }
    FiniteGroup::from_semigroup(FiniteSemigroup::from_flat(order, table).unwrap()).unwrap()
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v);
                rec(n, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

fn parity(p: &[usize]) -> usize {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2
}
