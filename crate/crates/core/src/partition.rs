//! Canonical partitions of `0..n` and a small union-find.
//!
//! A partition is stored as the vector `class_of` with `class_of[a]` the
//! smallest member of `a`'s class. Equality of partitions is then plain
//! vector equality.

use std::collections::BTreeMap;

/// Union-find whose roots are always the minimum of their class, so the
/// extracted representative vector is canonical for free.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if the two classes were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    pub fn into_partition(mut self) -> Partition {
        let n = self.parent.len();
        let class_of = (0..n).map(|x| self.find(x)).collect();
        Partition { class_of }
    }
}

/// An equivalence relation on `0..n` in canonical representative form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    class_of: Vec<usize>,
}

impl Partition {
    pub fn identity(n: usize) -> Self {
        Partition {
            class_of: (0..n).collect(),
        }
    }

    pub fn universal(n: usize) -> Self {
        assert!(n > 0);
        Partition {
            class_of: vec![0; n],
        }
    }

    /// Builds from an arbitrary labeling: two indices are equivalent iff they
    /// carry the same label. Representatives are canonicalized to minima.
    pub fn from_assignment(assign: &[usize]) -> Self {
        let mut first: BTreeMap<usize, usize> = BTreeMap::new();
        let mut class_of = vec![0; assign.len()];
        for (i, &v) in assign.iter().enumerate() {
            let rep = *first.entry(v).or_insert(i);
            class_of[i] = rep;
        }
        Partition { class_of }
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    #[inline]
    pub fn rep(&self, a: usize) -> usize {
        self.class_of[a]
    }

    #[inline]
    pub fn same(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.class_of
    }

    pub fn class_count(&self) -> usize {
        self.class_of
            .iter()
            .enumerate()
            .filter(|&(i, &r)| i == r)
            .count()
    }

    /// Classes listed by ascending representative, members ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut map: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, &r) in self.class_of.iter().enumerate() {
            map.entry(r).or_default().push(i);
        }
        map.into_values().collect()
    }

    pub fn class_members(&self, a: usize) -> Vec<usize> {
        let r = self.rep(a);
        (0..self.len()).filter(|&x| self.rep(x) == r).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.class_of.iter().enumerate().all(|(i, &r)| i == r)
    }

    pub fn is_universal(&self) -> bool {
        self.class_of.iter().all(|&r| r == 0)
    }

    /// True iff every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        assert_eq!(self.len(), other.len());
        (0..self.len()).all(|a| other.same(a, self.rep(a)))
    }

    /// Join in the lattice of equivalences (transitive closure of the union).
    pub fn join(&self, other: &Partition) -> Partition {
        assert_eq!(self.len(), other.len());
        let mut uf = UnionFind::new(self.len());
        for a in 0..self.len() {
            uf.union(a, self.rep(a));
            uf.union(a, other.rep(a));
        }
        uf.into_partition()
    }

    /// Meet: classes are the intersections of classes.
    pub fn meet(&self, other: &Partition) -> Partition {
        assert_eq!(self.len(), other.len());
        let mut first: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let class_of = (0..self.len())
            .map(|a| *first.entry((self.rep(a), other.rep(a))).or_insert(a))
            .collect();
        Partition { class_of }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_from_assignment() {
        let p = Partition::from_assignment(&[7, 3, 7, 3, 1]);
        assert_eq!(p.as_slice(), &[0, 1, 0, 1, 4]);
        assert_eq!(p.class_count(), 3);
        assert!(p.same(0, 2) && !p.same(0, 1));
    }

    #[test]
    fn reps_are_self_canonical() {
        let p = Partition::from_assignment(&[5, 5, 2, 2, 5]);
        for a in 0..p.len() {
            assert_eq!(p.rep(p.rep(a)), p.rep(a));
        }
    }

    #[test]
    fn join_and_meet() {
        let p = Partition::from_assignment(&[0, 0, 1, 1]);
        let q = Partition::from_assignment(&[0, 1, 1, 2]);
        assert!(p.join(&q).is_universal());
        assert_eq!(p.meet(&q).as_slice(), &[0, 1, 2, 3]);
        assert!(p.meet(&q).refines(&p));
        assert!(p.refines(&p.join(&q)));
    }

    #[test]
    fn union_find_min_roots() {
        let mut uf = UnionFind::new(5);
        uf.union(4, 2);
        uf.union(2, 3);
        let p = uf.into_partition();
        assert_eq!(p.as_slice(), &[0, 1, 2, 2, 2]);
    }
}
