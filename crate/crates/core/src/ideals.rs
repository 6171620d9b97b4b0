//! Ideals, Green's relations, kernel, Rees quotients, and the
//! nil/nilpotent/archimedean/completely-simple predicates.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::semigroup::{ElementId, FiniteSemigroup};

/// A two-sided ideal of a fixed semigroup.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IdealSet {
    subject_order: usize,
    members: BTreeSet<ElementId>,
}

impl IdealSet {
    /// Validates that `members` is a non-empty two-sided ideal.
    pub fn new(s: &FiniteSemigroup, members: BTreeSet<ElementId>) -> Result<Self> {
        if members.is_empty() || members.iter().any(|&m| m >= s.order()) {
            return Err(Error::NotAnIdeal);
        }
        for &a in &members {
            for t in s.elements() {
                if !members.contains(&s.mul(t, a)) || !members.contains(&s.mul(a, t)) {
                    return Err(Error::NotAnIdeal);
                }
            }
        }
        Ok(IdealSet {
            subject_order: s.order(),
            members,
        })
    }

    pub fn members(&self) -> &BTreeSet<ElementId> {
        &self.members
    }

    pub fn subject_order(&self) -> usize {
        self.subject_order
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires non-empty
    }

    pub fn contains(&self, a: ElementId) -> bool {
        self.members.contains(&a)
    }

    pub fn is_proper(&self) -> bool {
        self.members.len() < self.subject_order
    }
}

/// The principal ideal `{a} ∪ Sa ∪ aS ∪ SaS`, computed without adjoining an
/// identity element.
pub fn principal_ideal(s: &FiniteSemigroup, a: ElementId) -> IdealSet {
    let mut members = BTreeSet::from([a]);
    let mut a_s = BTreeSet::new();
    for t in s.elements() {
        members.insert(s.mul(t, a));
        members.insert(s.mul(a, t));
        a_s.insert(s.mul(a, t));
    }
    for t in s.elements() {
        for &x in &a_s {
            members.insert(s.mul(t, x));
        }
    }
    IdealSet {
        subject_order: s.order(),
        members,
    }
}

/// All two-sided ideals together with the chain verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealCollection {
    /// Sorted by (size, members).
    pub ideals: Vec<IdealSet>,
    /// Totally ordered by inclusion?
    pub is_chain: bool,
}

/// Computes every ideal as a union of principal ideals (every ideal is the
/// union of the principal ideals of its elements), closing under pairwise
/// union.
pub fn all_ideals(s: &FiniteSemigroup) -> IdealCollection {
    let principals: BTreeSet<BTreeSet<ElementId>> = s
        .elements()
        .map(|a| principal_ideal(s, a).members)
        .collect();
    let mut found: BTreeSet<BTreeSet<ElementId>> = principals.clone();
    let mut frontier: Vec<BTreeSet<ElementId>> = found.iter().cloned().collect();
    while let Some(cur) = frontier.pop() {
        for p in &principals {
            if p.is_subset(&cur) {
                continue;
            }
            let union: BTreeSet<ElementId> = cur.union(p).copied().collect();
            if found.insert(union.clone()) {
                frontier.push(union);
            }
        }
    }
    let mut ideals: Vec<IdealSet> = found
        .into_iter()
        .map(|members| IdealSet {
            subject_order: s.order(),
            members,
        })
        .collect();
    ideals.sort_by_key(|i| (i.members.len(), i.members.clone()));
    let is_chain = ideals.iter().enumerate().all(|(k, a)| {
        ideals[k + 1..]
            .iter()
            .all(|b| a.members.is_subset(&b.members) || b.members.is_subset(&a.members))
    });
    IdealCollection { ideals, is_chain }
}

/// Green's relations as partitions of the element set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreenStructure {
    pub r: Partition,
    pub l: Partition,
    pub j: Partition,
    pub h: Partition,
}

/// `a R b` iff `{a} ∪ aS = {b} ∪ bS`; `L` dually; `J` via principal ideals;
/// `H = R ∧ L`.
pub fn green(s: &FiniteSemigroup) -> GreenStructure {
    let n = s.order();
    let right_ideal = |a: ElementId| -> BTreeSet<ElementId> {
        let mut set = BTreeSet::from([a]);
        set.extend(s.elements().map(|t| s.mul(a, t)));
        set
    };
    let left_ideal = |a: ElementId| -> BTreeSet<ElementId> {
        let mut set = BTreeSet::from([a]);
        set.extend(s.elements().map(|t| s.mul(t, a)));
        set
    };
    let partition_by = |key: &dyn Fn(ElementId) -> BTreeSet<ElementId>| -> Partition {
        let keys: Vec<BTreeSet<ElementId>> = (0..n).map(key).collect();
        let mut assign = vec![0usize; n];
        for a in 0..n {
            assign[a] = keys.iter().position(|k| *k == keys[a]).expect("present");
        }
        Partition::from_assignment(&assign)
    };
    let r = partition_by(&right_ideal);
    let l = partition_by(&left_ideal);
    let j = partition_by(&|a| principal_ideal(s, a).members);
    let h = r.meet(&l);
    GreenStructure { r, l, j, h }
}

/// The kernel: the minimum two-sided ideal, which is the inclusion-minimal
/// principal ideal.
pub fn kernel(s: &FiniteSemigroup) -> IdealSet {
    let smallest = s
        .elements()
        .map(|a| principal_ideal(s, a))
        .min_by_key(|i| (i.members.len(), i.members.clone()))
        .expect("non-empty semigroup");
    debug_assert!(s
        .elements()
        .all(|a| smallest.members.is_subset(&principal_ideal(s, a).members)));
    smallest
}

/// Collapses the ideal to a single zero. Elements are the non-ideal elements
/// in their original order followed by the collapsed zero.
pub fn rees_quotient(s: &FiniteSemigroup, ideal: &IdealSet) -> Result<FiniteSemigroup> {
    if ideal.subject_order != s.order() {
        return Err(Error::NotAnIdeal);
    }
    let rest: Vec<ElementId> = s.elements().filter(|a| !ideal.contains(*a)).collect();
    let m = rest.len() + 1;
    let zero = m - 1;
    let index_of = |x: ElementId| -> usize {
        if ideal.contains(x) {
            zero
        } else {
            rest.binary_search(&x).expect("present")
        }
    };
    let mut table = vec![zero; m * m];
    for (i, &a) in rest.iter().enumerate() {
        for (j, &b) in rest.iter().enumerate() {
            table[i * m + j] = index_of(s.mul(a, b));
        }
    }
    // rows and columns of the collapsed zero stay at zero
    FiniteSemigroup::from_flat(m, table)
}

/// Nil/nilpotency data for a semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilpotencyProfile {
    pub has_zero: bool,
    /// Every element has a power equal to zero.
    pub is_nil: bool,
    /// Some power of the whole semigroup is `{0}`.
    pub is_nilpotent: bool,
    /// Least `m` with `S^m = {0}` when nilpotent.
    pub degree: Option<usize>,
    /// The strictly descending chain `S, S^2, ...` up to its stable tail
    /// (ending at `{0}` exactly when nilpotent).
    pub layers: Vec<BTreeSet<ElementId>>,
}

pub fn nilpotency_profile(s: &FiniteSemigroup) -> NilpotencyProfile {
    let special = s.special_elements();
    let has_zero = special.zero.is_some();
    let is_nil = match special.zero {
        Some(z) => s.elements().all(|a| s.power_set(a).contains(&z)),
        None => false,
    };
    let full: BTreeSet<ElementId> = s.elements().collect();
    let mut layers = vec![full.clone()];
    loop {
        let last = layers.last().unwrap();
        let next = s.product_of_sets(last, &full);
        if next == *last {
            break;
        }
        layers.push(next);
    }
    let stable = layers.last().unwrap();
    let is_nilpotent = match special.zero {
        Some(z) => stable.len() == 1 && stable.contains(&z),
        None => false,
    };
    let degree = is_nilpotent.then_some(layers.len());
    debug_assert!(
        !is_nil || is_nilpotent,
        "finite nil semigroups are nilpotent"
    );
    NilpotencyProfile {
        has_zero,
        is_nil,
        is_nilpotent,
        degree,
        layers,
    }
}

/// Archimedean test: for all `a, b`, some power of `a` (exponent at most the
/// order) lies in `SbS`. Note the bare `SbS`, not the variant with an
/// adjoined identity; see [`is_archimedean_unital`] for that one.
pub fn is_archimedean(s: &FiniteSemigroup) -> bool {
    archimedean_by(s, |b| {
        let full: BTreeSet<ElementId> = s.elements().collect();
        let b_set = BTreeSet::from([b]);
        let bs = s.product_of_sets(&b_set, &full);
        s.product_of_sets(&full, &bs)
    })
}

/// Archimedean test against `S¹bS¹`, i.e. the full principal ideal of `b`.
pub fn is_archimedean_unital(s: &FiniteSemigroup) -> bool {
    archimedean_by(s, |b| principal_ideal(s, b).members)
}

fn archimedean_by(
    s: &FiniteSemigroup,
    ideal_of: impl Fn(ElementId) -> BTreeSet<ElementId>,
) -> bool {
    let ideals: Vec<BTreeSet<ElementId>> = s.elements().map(ideal_of).collect();
    s.elements().all(|a| {
        let powers = s.power_set(a);
        ideals
            .iter()
            .all(|sbs| powers.iter().any(|p| sbs.contains(p)))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimplicityFlags {
    pub is_simple: bool,
    pub is_completely_simple: bool,
}

/// Simple iff every principal ideal is everything. Finite simple semigroups
/// are completely simple; the idempotent existence that implies is
/// cross-checked here.
pub fn simplicity_flags(s: &FiniteSemigroup) -> SimplicityFlags {
    let is_simple = s
        .elements()
        .all(|a| principal_ideal(s, a).members.len() == s.order());
    if is_simple {
        debug_assert!(!s.special_elements().idempotents.is_empty());
    }
    SimplicityFlags {
        is_simple,
        is_completely_simple: is_simple,
    }
}
