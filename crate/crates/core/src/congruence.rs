//! Congruences of a finite semigroup: generation from pair sets, full
//! lattice enumeration, relation composition, and the permutability check.
//!
//! A congruence is an equivalence compatible with multiplication on both
//! sides. It is stored as a canonical [`Partition`], so congruence equality
//! is vector equality. The lattice is enumerated as the join closure of the
//! principal congruences, which is complete because every congruence is the
//! join of the principal congruences it contains.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::partition::{Partition, UnionFind};
use crate::semigroup::{ElementId, FiniteSemigroup};

/// Upper bound on the congruence lattice size before enumeration refuses.
pub const DEFAULT_LATTICE_BOUND: usize = 100_000;

/// A two-sided congruence of a fixed semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    classes: Partition,
}

impl Congruence {
    pub fn identity(s: &FiniteSemigroup) -> Self {
        Congruence {
            classes: Partition::identity(s.order()),
        }
    }

    pub fn universal(s: &FiniteSemigroup) -> Self {
        Congruence {
            classes: Partition::universal(s.order()),
        }
    }

    /// Wraps a partition after checking two-sided compatibility.
    pub fn from_partition(s: &FiniteSemigroup, classes: Partition) -> Result<Self> {
        if classes.len() != s.order() {
            return Err(Error::SubjectMismatch {
                left: classes.len(),
                right: s.order(),
            });
        }
        if !is_compatible(s, &classes) {
            return Err(Error::InternalInconsistency(
                "partition is not compatible with multiplication".into(),
            ));
        }
        Ok(Congruence { classes })
    }

    pub fn subject_order(&self) -> usize {
        self.classes.len()
    }

    pub fn partition(&self) -> &Partition {
        &self.classes
    }

    /// Smallest member of `a`'s class.
    pub fn rep(&self, a: ElementId) -> ElementId {
        self.classes.rep(a)
    }

    pub fn same(&self, a: ElementId, b: ElementId) -> bool {
        self.classes.same(a, b)
    }

    pub fn class_vector(&self) -> &[usize] {
        self.classes.as_slice()
    }

    pub fn classes(&self) -> Vec<Vec<ElementId>> {
        self.classes.classes()
    }

    pub fn class_count(&self) -> usize {
        self.classes.class_count()
    }

    pub fn is_identity(&self) -> bool {
        self.classes.is_identity()
    }

    pub fn is_universal(&self) -> bool {
        self.classes.is_universal()
    }

    pub fn refines(&self, other: &Congruence) -> bool {
        self.classes.refines(&other.classes)
    }

    /// Lattice join. The transitive closure of the union of two congruences
    /// is again compatible, so the equivalence join suffices.
    pub fn join(&self, s: &FiniteSemigroup, other: &Congruence) -> Congruence {
        let joined = self.classes.join(&other.classes);
        debug_assert!(is_compatible(s, &joined));
        Congruence { classes: joined }
    }
}

/// Two-sided compatibility test for a partition.
pub fn is_compatible(s: &FiniteSemigroup, p: &Partition) -> bool {
    let n = s.order();
    for a in 0..n {
        let ra = p.rep(a);
        if ra == a {
            continue;
        }
        for t in 0..n {
            if !p.same(s.mul(t, a), s.mul(t, ra)) || !p.same(s.mul(a, t), s.mul(ra, t)) {
                return false;
            }
        }
    }
    true
}

/// Least congruence containing all the given pairs.
///
/// Union-find over the elements with a worklist of merges: when classes of
/// `(a, b)` merge, the pairs `(ta, tb)` and `(at, bt)` are enqueued for every
/// `t`, and the closure terminates at the fixpoint.
pub fn congruence_closure(s: &FiniteSemigroup, pairs: &[(ElementId, ElementId)]) -> Congruence {
    let n = s.order();
    let mut uf = UnionFind::new(n);
    let mut queue: VecDeque<(usize, usize)> = pairs.iter().copied().collect();
    while let Some((a, b)) = queue.pop_front() {
        if !uf.union(a, b) {
            continue;
        }
        for t in 0..n {
            queue.push_back((s.mul(t, a), s.mul(t, b)));
            queue.push_back((s.mul(a, t), s.mul(b, t)));
        }
    }
    let classes = uf.into_partition();
    debug_assert!(is_compatible(s, &classes));
    Congruence { classes }
}

/// The complete congruence lattice, enumerated as the join closure of the
/// principal congruences plus the identity. Returned in a deterministic
/// order: descending lexicographic on the class vector, which places the
/// identity first and the universal congruence last.
pub fn all_congruences(s: &FiniteSemigroup) -> Result<Vec<Congruence>> {
    all_congruences_bounded(s, DEFAULT_LATTICE_BOUND)
}

/// As [`all_congruences`] but refusing once more than `bound` congruences
/// have been found.
pub fn all_congruences_bounded(s: &FiniteSemigroup, bound: usize) -> Result<Vec<Congruence>> {
    let n = s.order();
    let mut seen: HashSet<Congruence> = HashSet::new();
    let mut found: Vec<Congruence> = Vec::new();
    let mut push = |c: Congruence, found: &mut Vec<Congruence>| -> Result<()> {
        if seen.insert(c.clone()) {
            found.push(c);
            if found.len() > bound {
                return Err(Error::LatticeBound { bound });
            }
        }
        Ok(())
    };

    push(Congruence::identity(s), &mut found)?;
    for a in 0..n {
        for b in a + 1..n {
            push(congruence_closure(s, &[(a, b)]), &mut found)?;
        }
    }
    // Close under pairwise joins.
    let mut frontier = 0;
    while frontier < found.len() {
        let current = found[frontier].clone();
        frontier += 1;
        for i in 0..found.len() {
            let j = current.join(s, &found[i]);
            push(j, &mut found)?;
        }
    }
    found.sort_by(|a, b| b.class_vector().cmp(a.class_vector()));
    Ok(found)
}

/// A composed relation `alpha . beta` on `0..order`.
///
/// Membership of `(a, b)` only depends on the class of `a` in `alpha` and the
/// class of `b` in `beta`, so the relation is materialized as an incidence
/// matrix over class pairs rather than as `order^2` pairs.
#[derive(Debug, Clone)]
pub struct Relation {
    order: usize,
    left_class: Vec<usize>,
    right_class: Vec<usize>,
    right_count: usize,
    matrix: Vec<bool>,
}

impl Relation {
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn contains(&self, a: ElementId, b: ElementId) -> bool {
        self.matrix[self.left_class[a] * self.right_count + self.right_class[b]]
    }

    /// Expands to the full pair set; intended for small carriers.
    pub fn pairs(&self) -> std::collections::BTreeSet<(ElementId, ElementId)> {
        let mut out = std::collections::BTreeSet::new();
        for a in 0..self.order {
            for b in 0..self.order {
                if self.contains(a, b) {
                    out.insert((a, b));
                }
            }
        }
        out
    }
}

impl PartialEq for Relation {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && (0..self.order)
                .all(|a| (0..self.order).all(|b| self.contains(a, b) == other.contains(a, b)))
    }
}
impl Eq for Relation {}

/// Composition of two partitions viewed as relations:
/// `(a, b)` is in the result iff some `x` satisfies `a p x` and `x q b`,
/// i.e. iff the `p`-class of `a` meets the `q`-class of `b`.
pub fn compose_partitions(p: &Partition, q: &Partition) -> Result<Relation> {
    if p.len() != q.len() {
        return Err(Error::SubjectMismatch {
            left: p.len(),
            right: q.len(),
        });
    }
    let n = p.len();
    let dense = |part: &Partition| -> (Vec<usize>, usize) {
        let mut index = vec![usize::MAX; n];
        let mut count = 0;
        let out = (0..n)
            .map(|a| {
                let r = part.rep(a);
                if index[r] == usize::MAX {
                    index[r] = count;
                    count += 1;
                }
                index[r]
            })
            .collect();
        (out, count)
    };
    let (left_class, left_count) = dense(p);
    let (right_class, right_count) = dense(q);
    let mut matrix = vec![false; left_count * right_count];
    for x in 0..n {
        matrix[left_class[x] * right_count + right_class[x]] = true;
    }
    Ok(Relation {
        order: n,
        left_class,
        right_class,
        right_count,
        matrix,
    })
}

/// `alpha . beta` as a relation.
pub fn compose(alpha: &Congruence, beta: &Congruence) -> Result<Relation> {
    compose_partitions(alpha.partition(), beta.partition())
}

/// Outcome of a commutation test between two congruences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommuteCheck {
    pub commutes: bool,
    /// A pair in the symmetric difference of the two compositions.
    pub witness: Option<(ElementId, ElementId)>,
}

fn commute_partitions(p: &Partition, q: &Partition) -> Result<CommuteCheck> {
    let pq = compose_partitions(p, q)?;
    let qp = compose_partitions(q, p)?;
    let n = p.len();
    // Prefer a witness on the p.q side; fall back to the q.p side.
    let mut reversed = None;
    for a in 0..n {
        for b in 0..n {
            match (pq.contains(a, b), qp.contains(a, b)) {
                (true, false) => {
                    return Ok(CommuteCheck {
                        commutes: false,
                        witness: Some((a, b)),
                    })
                }
                (false, true) if reversed.is_none() => reversed = Some((a, b)),
                _ => {}
            }
        }
    }
    match reversed {
        Some(w) => Ok(CommuteCheck {
            commutes: false,
            witness: Some(w),
        }),
        None => Ok(CommuteCheck {
            commutes: true,
            witness: None,
        }),
    }
}

/// Do `alpha . beta` and `beta . alpha` coincide as pair sets?
pub fn commutes(alpha: &Congruence, beta: &Congruence) -> Result<CommuteCheck> {
    commute_partitions(alpha.partition(), beta.partition())
}

/// Why a semigroup failed the permutability test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutabilityWitness {
    pub alpha: Congruence,
    pub beta: Congruence,
    /// A pair contained in `alpha . beta` but not in `beta . alpha`.
    pub pair: (ElementId, ElementId),
}

/// Result of the permutability decision over the whole congruence lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutabilityReport {
    pub permutable: bool,
    pub witness: Option<PermutabilityWitness>,
    pub lattice_size: usize,
}

/// Decides whether every pair of congruences commutes. Scans the unordered
/// pairs of the deterministically ordered lattice and reports the first
/// failure, oriented so that the witness pair lies in `alpha . beta` only.
pub fn is_permutable(s: &FiniteSemigroup) -> Result<PermutabilityReport> {
    is_permutable_bounded(s, DEFAULT_LATTICE_BOUND)
}

pub fn is_permutable_bounded(s: &FiniteSemigroup, bound: usize) -> Result<PermutabilityReport> {
    let lattice = all_congruences_bounded(s, bound)?;
    for i in 0..lattice.len() {
        for j in i + 1..lattice.len() {
            let (alpha, beta) = (&lattice[i], &lattice[j]);
            let pq = compose(alpha, beta)?;
            let qp = compose(beta, alpha)?;
            let n = s.order();
            let mut fwd = None;
            let mut rev = None;
            'scan: for a in 0..n {
                for b in 0..n {
                    match (pq.contains(a, b), qp.contains(a, b)) {
                        (true, false) => {
                            fwd = Some((a, b));
                            break 'scan;
                        }
                        (false, true) if rev.is_none() => rev = Some((a, b)),
                        _ => {}
                    }
                }
            }
            let witness = match (fwd, rev) {
                (Some(pair), _) => Some(PermutabilityWitness {
                    alpha: alpha.clone(),
                    beta: beta.clone(),
                    pair,
                }),
                // The difference showed up on the beta . alpha side only;
                // swap roles so the reported pair is in alpha . beta.
                (None, Some(pair)) => Some(PermutabilityWitness {
                    alpha: beta.clone(),
                    beta: alpha.clone(),
                    pair,
                }),
                (None, None) => None,
            };
            if let Some(w) = witness {
                debug_assert!(compose(&w.alpha, &w.beta)?.contains(w.pair.0, w.pair.1));
                debug_assert!(!compose(&w.beta, &w.alpha)?.contains(w.pair.0, w.pair.1));
                return Ok(PermutabilityReport {
                    permutable: false,
                    witness: Some(w),
                    lattice_size: lattice.len(),
                });
            }
        }
    }
    Ok(PermutabilityReport {
        permutable: true,
        witness: None,
        lattice_size: lattice.len(),
    })
}

/// The quotient semigroup. Classes are indexed by their representatives in
/// ascending order; the product of classes is the class of any representative
/// product, which is well defined by compatibility.
pub fn quotient(s: &FiniteSemigroup, alpha: &Congruence) -> FiniteSemigroup {
    assert_eq!(
        alpha.subject_order(),
        s.order(),
        "congruence of a different semigroup"
    );
    let classes = alpha.classes();
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let index_of = |x: usize| reps.binary_search(&alpha.rep(x)).expect("rep present");
    let m = reps.len();
    let mut table = vec![0; m * m];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            table[i * m + j] = index_of(s.mul(a, b));
        }
    }
    FiniteSemigroup::from_flat(m, table).expect("quotient of a semigroup is a semigroup")
}
