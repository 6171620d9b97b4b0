//! Right actions of a finite group on a finite point set: orbits,
//! stabilizers, action congruences, and the Galois correspondence between
//! the congruence lattice of a transitive action and the subgroup interval
//! above a point stabilizer.

use std::collections::BTreeSet;

use crate::congruence::{compose_partitions, Relation};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::partition::{Partition, UnionFind};
use crate::semigroup::ElementId;

/// Default refusal bound for action-congruence enumeration.
pub const DEFAULT_GSET_LATTICE_BOUND: usize = 100_000;

/// A right G-set: `points x group -> points` with `x . e = x` and
/// `(x . g) . h = x . (g h)`.
#[derive(Debug, Clone)]
pub struct GSet {
    group: FiniteGroup,
    points: usize,
    action: Vec<usize>, // action[x * |G| + g]
}

impl GSet {
    /// Validates the action axioms.
    pub fn new(group: FiniteGroup, points: usize, rows: &[Vec<usize>]) -> Result<Self> {
        if points == 0 {
            return Err(Error::Shape("a G-set needs at least one point".into()));
        }
        if rows.len() != points || rows.iter().any(|r| r.len() != group.order()) {
            return Err(Error::Shape(format!(
                "action table must be {points} rows of {} entries",
                group.order()
            )));
        }
        if rows.iter().flatten().any(|&p| p >= points) {
            return Err(Error::Shape("action image out of range".into()));
        }
        let action: Vec<usize> = rows.iter().flatten().copied().collect();
        let gset = GSet {
            group,
            points,
            action,
        };
        let e = gset.group.identity();
        for x in 0..points {
            if gset.act(x, e) != x {
                return Err(Error::Shape(format!("identity moves point {x}")));
            }
        }
        for x in 0..points {
            for g in gset.group.elements() {
                for h in gset.group.elements() {
                    if gset.act(gset.act(x, g), h) != gset.act(x, gset.group.mul(g, h)) {
                        return Err(Error::Shape(format!(
                            "action is not compatible at point {x} and pair ({g}, {h})"
                        )));
                    }
                }
            }
        }
        Ok(gset)
    }

    /// The action of `group` on the right cosets of `h` by right
    /// translation; points are cosets ordered by smallest member.
    pub fn coset_action(group: &FiniteGroup, h: &Subgroup) -> GSet {
        let cosets = group.right_cosets(h);
        let index_of = |set: &BTreeSet<ElementId>| {
            cosets
                .iter()
                .position(|c| c == set)
                .expect("coset is listed")
        };
        let rows: Vec<Vec<usize>> = cosets
            .iter()
            .map(|coset| {
                group
                    .elements()
                    .map(|g| {
                        let image: BTreeSet<ElementId> =
                            coset.iter().map(|&m| group.mul(m, g)).collect();
                        index_of(&image)
                    })
                    .collect()
            })
            .collect();
        GSet::new(group.clone(), cosets.len(), &rows).expect("coset action is a G-set")
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn points(&self) -> usize {
        self.points
    }

    #[inline]
    pub fn act(&self, x: usize, g: ElementId) -> usize {
        self.action[x * self.group.order() + g]
    }

    pub fn orbits(&self) -> Partition {
        let mut uf = UnionFind::new(self.points);
        for x in 0..self.points {
            for g in self.group.elements() {
                uf.union(x, self.act(x, g));
            }
        }
        uf.into_partition()
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().is_universal()
    }

    pub fn stabilizer(&self, x: usize) -> Subgroup {
        self.group
            .subgroup(self.group.elements().filter(|&g| self.act(x, g) == x))
            .expect("stabilizers are subgroups")
    }
}

/// An action-compatible equivalence on the points of a G-set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GSetCongruence {
    classes: Partition,
}

impl GSetCongruence {
    pub fn partition(&self) -> &Partition {
        &self.classes
    }

    pub fn class_vector(&self) -> &[usize] {
        self.classes.as_slice()
    }

    pub fn same(&self, x: usize, y: usize) -> bool {
        self.classes.same(x, y)
    }

    pub fn refines(&self, other: &GSetCongruence) -> bool {
        self.classes.refines(&other.classes)
    }

    pub fn is_identity(&self) -> bool {
        self.classes.is_identity()
    }

    pub fn from_partition(x: &GSet, classes: Partition) -> Result<Self> {
        if classes.len() != x.points() {
            return Err(Error::SubjectMismatch {
                left: classes.len(),
                right: x.points(),
            });
        }
        if !is_action_compatible(x, &classes) {
            return Err(Error::InternalInconsistency(
                "partition is not compatible with the action".into(),
            ));
        }
        Ok(GSetCongruence { classes })
    }
}

pub fn is_action_compatible(x: &GSet, p: &Partition) -> bool {
    (0..x.points()).all(|a| {
        let r = p.rep(a);
        r == a || x.group.elements().all(|g| p.same(x.act(a, g), x.act(r, g)))
    })
}

/// Least action congruence containing the given point pairs.
pub fn gset_congruence_closure(x: &GSet, pairs: &[(usize, usize)]) -> GSetCongruence {
    let mut uf = UnionFind::new(x.points());
    let mut queue: Vec<(usize, usize)> = pairs.to_vec();
    while let Some((a, b)) = queue.pop() {
        if !uf.union(a, b) {
            continue;
        }
        for g in x.group.elements() {
            queue.push((x.act(a, g), x.act(b, g)));
        }
    }
    let classes = uf.into_partition();
    debug_assert!(is_action_compatible(x, &classes));
    GSetCongruence { classes }
}

/// The full congruence lattice of the action, by principal closures and
/// join saturation; same engine as for semigroup congruences with one-sided
/// compatibility. Ordered with the identity first.
pub fn all_gset_congruences(x: &GSet) -> Result<Vec<GSetCongruence>> {
    all_gset_congruences_bounded(x, DEFAULT_GSET_LATTICE_BOUND)
}

pub fn all_gset_congruences_bounded(x: &GSet, bound: usize) -> Result<Vec<GSetCongruence>> {
    let m = x.points();
    let mut seen: BTreeSet<GSetCongruence> = BTreeSet::new();
    let mut found: Vec<GSetCongruence> = Vec::new();
    let mut push = |c: GSetCongruence, found: &mut Vec<GSetCongruence>| -> Result<()> {
        if seen.insert(c.clone()) {
            found.push(c);
            if found.len() > bound {
                return Err(Error::LatticeBound { bound });
            }
        }
        Ok(())
    };
    push(
        GSetCongruence {
            classes: Partition::identity(m),
        },
        &mut found,
    )?;
    for a in 0..m {
        for b in a + 1..m {
            push(gset_congruence_closure(x, &[(a, b)]), &mut found)?;
        }
    }
    let mut frontier = 0;
    while frontier < found.len() {
        let current = found[frontier].clone();
        frontier += 1;
        for i in 0..found.len() {
            let joined = current.classes.join(&found[i].classes);
            debug_assert!(is_action_compatible(x, &joined));
            push(GSetCongruence { classes: joined }, &mut found)?;
        }
    }
    found.sort_by(|a, b| b.class_vector().cmp(a.class_vector()));
    Ok(found)
}

/// The subgroup `{g : (base . g) ~ base}` attached to an action congruence
/// of a transitive G-set.
pub fn subgroup_of_congruence(x: &GSet, base: usize, alpha: &GSetCongruence) -> Result<Subgroup> {
    if !x.is_transitive() {
        return Err(Error::NotTransitive);
    }
    x.group
        .subgroup(
            x.group
                .elements()
                .filter(|&g| alpha.same(x.act(base, g), base)),
        )
        .map_err(|_| Error::InternalInconsistency("congruence subgroup must be a subgroup".into()))
}

/// The action congruence attached to a subgroup containing the stabilizer
/// of the base point: two points are related iff they are reached from the
/// base by group elements in the same right coset of `h`.
pub fn congruence_of_subgroup(x: &GSet, base: usize, h: &Subgroup) -> Result<GSetCongruence> {
    if !x.is_transitive() {
        return Err(Error::NotTransitive);
    }
    if !x.stabilizer(base).is_subgroup_of(h) {
        return Err(Error::StabilizerNotContained);
    }
    // For each point pick one group element reaching it, then key points by
    // the coset of that element; containment of the stabilizer makes the
    // class independent of the choice.
    let mut reach = vec![usize::MAX; x.points()];
    for g in x.group.elements() {
        let y = x.act(base, g);
        if reach[y] == usize::MAX {
            reach[y] = g;
        }
    }
    let coset_key = |g: ElementId| -> usize {
        // smallest member of the right coset h g
        h.members()
            .iter()
            .map(|&m| x.group.mul(m, g))
            .min()
            .expect("non-empty")
    };
    let assign: Vec<usize> = (0..x.points()).map(|y| coset_key(reach[y])).collect();
    let classes = Partition::from_assignment(&assign);
    debug_assert!(is_action_compatible(x, &classes));
    Ok(GSetCongruence { classes })
}

/// Composition of two action congruences as relations on the points.
pub fn compose_gset(alpha: &GSetCongruence, beta: &GSetCongruence) -> Result<Relation> {
    compose_partitions(alpha.partition(), beta.partition())
}

/// Both sides of the commutation equivalence for a pair of action
/// congruences on a transitive G-set: whether the congruences commute as
/// relations, and whether their attached subgroups commute setwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CommutationCheck {
    pub congruences_commute: bool,
    pub subgroups_commute: bool,
}

pub fn commutation_check(
    x: &GSet,
    base: usize,
    alpha: &GSetCongruence,
    beta: &GSetCongruence,
) -> Result<CommutationCheck> {
    if !x.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let ab = compose_gset(alpha, beta)?;
    let ba = compose_gset(beta, alpha)?;
    let congruences_commute = ab == ba;
    let ha = subgroup_of_congruence(x, base, alpha)?;
    let hb = subgroup_of_congruence(x, base, beta)?;
    let subgroups_commute = x.group.product_commutes(&ha, &hb).commutes;
    Ok(CommutationCheck {
        congruences_commute,
        subgroups_commute,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic_group, symmetric_group};

    fn trivial_action(points: usize) -> GSet {
        let rows: Vec<Vec<usize>> = (0..points).map(|x| vec![x]).collect();
        GSet::new(cyclic_group(1), points, &rows).unwrap()
    }

    #[test]
    fn validation_rejects_bad_actions() {
        let z2 = cyclic_group(2);
        // identity must fix every point
        assert!(GSet::new(z2.clone(), 2, &[vec![1, 0], vec![0, 1]]).is_err());
        // compatibility: x.(g g) must equal (x.g).g
        assert!(GSet::new(z2.clone(), 3, &[vec![0, 1], vec![1, 2], vec![2, 0]]).is_err());
        assert!(GSet::new(z2, 2, &[vec![0, 1], vec![1, 9]]).is_err());
    }

    #[test]
    fn coset_action_is_transitive() {
        let z4 = cyclic_group(4);
        let x = GSet::coset_action(&z4, &z4.subgroup([0, 2]).unwrap());
        assert_eq!(x.points(), 2);
        assert!(x.is_transitive());
    }

    #[test]
    fn orbit_counts() {
        let z2 = cyclic_group(2);
        // disjoint union of two regular orbits
        let x = GSet::new(z2, 4, &[vec![0, 1], vec![1, 0], vec![2, 3], vec![3, 2]]).unwrap();
        assert_eq!(x.orbits().class_count(), 2);
        assert!(!x.is_transitive());
        assert_eq!(trivial_action(3).orbits().class_count(), 3);
    }

    #[test]
    fn stabilizers() {
        let s3 = symmetric_group(3);
        // point 0 of the coset space G/H is H itself (it contains the
        // identity, hence has the smallest member)
        for h in s3.all_subgroups().unwrap() {
            let x = GSet::coset_action(&s3, &h);
            assert_eq!(x.stabilizer(0), h);
        }
        // regular action: trivial stabilizers
        let regular = GSet::coset_action(&s3, &s3.trivial_subgroup());
        for p in 0..regular.points() {
            assert_eq!(regular.stabilizer(p).len(), 1);
        }
        // trivial action: full stabilizer
        let t = trivial_action(3);
        assert_eq!(t.stabilizer(1), cyclic_group(1).full_subgroup());
    }

    #[test]
    fn congruence_lattices() {
        // trivial group on 3 points: all 5 partitions are congruences
        assert_eq!(all_gset_congruences(&trivial_action(3)).unwrap().len(), 5);
        // regular action of Z4: one congruence per subgroup
        let z4 = cyclic_group(4);
        let regular = GSet::coset_action(&z4, &z4.trivial_subgroup());
        assert_eq!(all_gset_congruences(&regular).unwrap().len(), 3);
    }

    #[test]
    fn congruence_bound_is_enforced() {
        // every partition is a congruence of the trivial action
        let x = trivial_action(4);
        assert_eq!(
            all_gset_congruences_bounded(&x, 3),
            Err(crate::error::Error::LatticeBound { bound: 3 })
        );
        assert_eq!(all_gset_congruences(&x).unwrap().len(), 15);
    }

    #[test]
    fn galois_maps_are_inverse_on_z4() {
        let z4 = cyclic_group(4);
        let x = GSet::coset_action(&z4, &z4.trivial_subgroup());
        let congruences = all_gset_congruences(&x).unwrap();
        for alpha in &congruences {
            let h = subgroup_of_congruence(&x, 0, alpha).unwrap();
            let back = congruence_of_subgroup(&x, 0, &h).unwrap();
            assert_eq!(&back, alpha);
        }
        for h in z4.all_subgroups().unwrap() {
            let alpha = congruence_of_subgroup(&x, 0, &h).unwrap();
            assert_eq!(subgroup_of_congruence(&x, 0, &alpha).unwrap(), h);
        }
    }

    #[test]
    fn identity_congruence_maps_to_stabilizer() {
        let s3 = symmetric_group(3);
        let h = s3
            .all_subgroups()
            .unwrap()
            .into_iter()
            .find(|h| h.len() == 2)
            .unwrap();
        let x = GSet::coset_action(&s3, &h);
        let identity = GSetCongruence {
            classes: Partition::identity(x.points()),
        };
        assert_eq!(subgroup_of_congruence(&x, 0, &identity).unwrap(), h);
        let universal = GSetCongruence {
            classes: Partition::universal(x.points()),
        };
        assert_eq!(
            subgroup_of_congruence(&x, 0, &universal).unwrap(),
            s3.full_subgroup()
        );
        assert_eq!(congruence_of_subgroup(&x, 0, &h).unwrap(), identity);
    }

    #[test]
    fn psi_requires_stabilizer_containment() {
        let s3 = symmetric_group(3);
        let h = s3
            .all_subgroups()
            .unwrap()
            .into_iter()
            .find(|h| h.len() == 3)
            .unwrap();
        let x = GSet::coset_action(&s3, &h);
        let small = s3.trivial_subgroup();
        assert_eq!(
            congruence_of_subgroup(&x, 0, &small),
            Err(Error::StabilizerNotContained)
        );
    }

    #[test]
    fn maps_require_transitivity() {
        let z2 = cyclic_group(2);
        let x = GSet::new(z2, 4, &[vec![0, 1], vec![1, 0], vec![2, 3], vec![3, 2]]).unwrap();
        let identity = GSetCongruence {
            classes: Partition::identity(4),
        };
        assert_eq!(
            subgroup_of_congruence(&x, 0, &identity),
            Err(Error::NotTransitive)
        );
    }

    #[test]
    fn commutation_check_on_s3_regular() {
        let s3 = symmetric_group(3);
        let x = GSet::coset_action(&s3, &s3.trivial_subgroup());
        let order2: Vec<Subgroup> = s3
            .all_subgroups()
            .unwrap()
            .into_iter()
            .filter(|h| h.len() == 2)
            .collect();
        let alpha = congruence_of_subgroup(&x, 0, &order2[0]).unwrap();
        let beta = congruence_of_subgroup(&x, 0, &order2[1]).unwrap();
        let check = commutation_check(&x, 0, &alpha, &beta).unwrap();
        assert!(!check.congruences_commute);
        assert!(!check.subgroups_commute);
        // a congruence always commutes with itself
        let check = commutation_check(&x, 0, &alpha, &alpha).unwrap();
        assert!(check.congruences_commute && check.subgroups_commute);
    }

    #[test]
    fn abelian_actions_always_commute() {
        let z6 = cyclic_group(6);
        let x = GSet::coset_action(&z6, &z6.trivial_subgroup());
        let congruences = all_gset_congruences(&x).unwrap();
        for a in &congruences {
            for b in &congruences {
                let check = commutation_check(&x, 0, a, b).unwrap();
                assert!(check.congruences_commute && check.subgroups_commute);
            }
        }
    }
}
