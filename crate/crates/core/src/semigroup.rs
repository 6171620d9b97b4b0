//! Finite semigroups as validated dense Cayley tables.
//!
//! Elements are the integers `0..order`; the table stores `a * b` at row `a`,
//! column `b`. Construction checks associativity exhaustively, so every
//! [`FiniteSemigroup`] value is a genuine semigroup. All values are immutable
//! after construction and all operations are pure.

use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

/// Index of an element of a [`FiniteSemigroup`]; always in `[0, order)`.
pub type ElementId = usize;

/// Which absorbing element [`FiniteSemigroup::adjoin`] adds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Adjoined {
    Identity,
    Zero,
}

/// A finite semigroup given by its full multiplication table.
#[derive(Clone)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<ElementId>, // row-major: table[a * order + b] = a * b
    labels: Option<Vec<String>>,
}

// Labels are display metadata only; equality and hashing look at the table.
impl PartialEq for FiniteSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}
impl Eq for FiniteSemigroup {}

impl Hash for FiniteSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.table.hash(state);
    }
}

impl PartialOrd for FiniteSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for FiniteSemigroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.order, &self.table).cmp(&(other.order, &other.table))
    }
}

impl fmt::Debug for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiniteSemigroup(order={}, table={:?})",
            self.order, self.table
        )
    }
}

impl fmt::Display for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in 0..self.order {
            for b in 0..self.order {
                if b > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.mul(a, b))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FiniteSemigroup {
    /// Validates an `order x order` table given as rows and builds the
    /// semigroup. Fails with a witness triple if the table is not associative.
    pub fn new(order: usize, rows: &[Vec<usize>]) -> Result<Self> {
        if rows.len() != order {
            return Err(Error::Shape(format!(
                "expected {order} rows, found {}",
                rows.len()
            )));
        }
        let mut flat = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            flat.extend_from_slice(row);
        }
        Self::from_flat(order, flat)
    }

    /// Validates a row-major flat table and builds the semigroup.
    pub fn from_flat(order: usize, table: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Shape("order must be positive".into()));
        }
        if table.len() != order * order {
            return Err(Error::Shape(format!(
                "expected {} entries, found {}",
                order * order,
                table.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= order) {
            return Err(Error::Shape(format!(
                "entry {bad} out of range for order {order}"
            )));
        }
        let s = FiniteSemigroup {
            order,
            table,
            labels: None,
        };
        // Exhaustive associativity scan; the first violating triple in
        // lexicographic order is the witness.
        for a in 0..order {
            for b in 0..order {
                let ab = s.mul(a, b);
                for c in 0..order {
                    if s.mul(ab, c) != s.mul(a, s.mul(b, c)) {
                        return Err(Error::NonAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(s)
    }

    /// Attaches display labels (one per element).
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::Shape(format!(
                "expected {} labels, found {}",
                self.order,
                labels.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.order
    }

    /// The product `a * b`.
    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.table[a * self.order + b]
    }

    pub fn table(&self) -> &[ElementId] {
        &self.table
    }

    pub fn row(&self, a: ElementId) -> &[ElementId] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of `a`, falling back to its id.
    pub fn label(&self, a: ElementId) -> String {
        match &self.labels {
            Some(ls) => ls[a].clone(),
            None => a.to_string(),
        }
    }

    /// `a^k` for `k >= 1`.
    pub fn power(&self, a: ElementId, k: usize) -> ElementId {
        assert!(k >= 1, "power exponent must be at least 1");
        let mut acc = a;
        for _ in 1..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// The set `{a^k : k >= 1}`. The power sequence cycles within `order`
    /// steps, so exponents up to `order` suffice.
    pub fn power_set(&self, a: ElementId) -> BTreeSet<ElementId> {
        let mut out = BTreeSet::new();
        let mut cur = a;
        while out.insert(cur) {
            cur = self.mul(cur, a);
        }
        out
    }

    /// Zero, identity, idempotents, and one-sided identities of the table.
    pub fn special_elements(&self) -> SpecialElements {
        let n = self.order;
        let mut idempotents = BTreeSet::new();
        let mut left_identities = BTreeSet::new();
        let mut right_identities = BTreeSet::new();
        let mut zero = None;
        for e in 0..n {
            if self.mul(e, e) == e {
                idempotents.insert(e);
            }
            if (0..n).all(|s| self.mul(e, s) == s) {
                left_identities.insert(e);
            }
            if (0..n).all(|s| self.mul(s, e) == s) {
                right_identities.insert(e);
            }
            if (0..n).all(|s| self.mul(e, s) == e && self.mul(s, e) == e) {
                zero = Some(e); // at most one such element exists
            }
        }
        let identity = left_identities
            .intersection(&right_identities)
            .next()
            .copied();
        SpecialElements {
            zero,
            identity,
            idempotents,
            left_identities,
            right_identities,
        }
    }

    /// Adjoins a fresh two-sided identity or zero as element `order`.
    /// The adjoin is unconditional even if such an element already exists.
    pub fn adjoin(&self, kind: Adjoined) -> FiniteSemigroup {
        let n = self.order;
        let m = n + 1;
        let mut table = vec![0; m * m];
        for a in 0..n {
            for b in 0..n {
                table[a * m + b] = self.mul(a, b);
            }
        }
        for x in 0..m {
            let (row_val, col_val) = match kind {
                Adjoined::Identity => (x, x),
                Adjoined::Zero => (n, n),
            };
            table[n * m + x] = row_val;
            table[x * m + n] = col_val;
        }
        let labels = self.labels.as_ref().map(|ls| {
            let mut ls = ls.clone();
            ls.push(match kind {
                Adjoined::Identity => "1".to_string(),
                Adjoined::Zero => "0".to_string(),
            });
            ls
        });
        let s = FiniteSemigroup {
            order: m,
            table,
            labels,
        };
        debug_assert!(FiniteSemigroup::from_flat(m, s.table.clone()).is_ok());
        s
    }

    /// Least subset containing `gens` and closed under products.
    pub fn generated_subsemigroup(&self, gens: &[ElementId]) -> BTreeSet<ElementId> {
        assert!(!gens.is_empty(), "generator set must be non-empty");
        assert!(
            gens.iter().all(|&g| g < self.order),
            "generator out of range"
        );
        let mut set: BTreeSet<ElementId> = gens.iter().copied().collect();
        let mut queue: Vec<ElementId> = set.iter().copied().collect();
        while let Some(x) = queue.pop() {
            let members: Vec<ElementId> = set.iter().copied().collect();
            for y in members {
                for p in [self.mul(x, y), self.mul(y, x)] {
                    if set.insert(p) {
                        queue.push(p);
                    }
                }
            }
        }
        set
    }

    /// The smallest element generating the whole semigroup, if one exists.
    pub fn monogenic_generator(&self) -> Option<ElementId> {
        (0..self.order).find(|&a| self.generated_subsemigroup(&[a]).len() == self.order)
    }

    /// Re-indexes a product-closed subset as a semigroup of its own.
    /// Element `i` of the result is the `i`-th smallest member of `subset`.
    pub fn induced(&self, subset: &BTreeSet<ElementId>) -> Result<FiniteSemigroup> {
        if subset.is_empty() {
            return Err(Error::Shape("induced subset must be non-empty".into()));
        }
        let members: Vec<ElementId> = subset.iter().copied().collect();
        let index_of = |x: ElementId| members.binary_search(&x).ok();
        let m = members.len();
        let mut table = vec![0; m * m];
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                match index_of(self.mul(a, b)) {
                    Some(k) => table[i * m + j] = k,
                    None => return Err(Error::NotClosed),
                }
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|ls| members.iter().map(|&x| ls[x].clone()).collect());
        Ok(FiniteSemigroup {
            order: m,
            table,
            labels,
        })
    }

    /// The dual semigroup: `a * b` here is `b * a` there.
    pub fn transpose(&self) -> FiniteSemigroup {
        let n = self.order;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = self.mul(b, a);
            }
        }
        FiniteSemigroup {
            order: n,
            table,
            labels: self.labels.clone(),
        }
    }

    /// Applies a relabeling permutation: element `a` becomes `perm[a]`.
    pub fn relabeled(&self, perm: &[usize]) -> FiniteSemigroup {
        let n = self.order;
        assert_eq!(perm.len(), n);
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        FiniteSemigroup {
            order: n,
            table,
            labels: None,
        }
    }

    /// Checks whether `map` is an isomorphism from `self` onto `other`.
    pub fn is_isomorphic_by(&self, other: &FiniteSemigroup, map: &[usize]) -> bool {
        if self.order != other.order || map.len() != self.order {
            return false;
        }
        let mut seen = vec![false; self.order];
        for &m in map {
            if m >= self.order || seen[m] {
                return false;
            }
            seen[m] = true;
        }
        self.elements().all(|a| {
            self.elements()
                .all(|b| map[self.mul(a, b)] == other.mul(map[a], map[b]))
        })
    }

    /// `{a * b : a in lhs, b in rhs}`.
    pub fn product_of_sets(
        &self,
        lhs: &BTreeSet<ElementId>,
        rhs: &BTreeSet<ElementId>,
    ) -> BTreeSet<ElementId> {
        let mut out = BTreeSet::new();
        for &a in lhs {
            for &b in rhs {
                out.insert(self.mul(a, b));
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Every element idempotent.
    pub fn is_band(&self) -> bool {
        (0..self.order).all(|a| self.mul(a, a) == a)
    }

    /// Commutative band.
    pub fn is_semilattice(&self) -> bool {
        self.is_band() && self.is_commutative()
    }

    /// If every product equals one fixed element, returns that element.
    pub fn null_zero(&self) -> Option<ElementId> {
        let z = self.mul(0, 0);
        for a in 0..self.order {
            for b in 0..self.order {
                if self.mul(a, b) != z {
                    return None;
                }
            }
        }
        Some(z)
    }
}

/// Distinguished elements of a semigroup, as reported by
/// [`FiniteSemigroup::special_elements`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialElements {
    pub zero: Option<ElementId>,
    pub identity: Option<ElementId>,
    pub idempotents: BTreeSet<ElementId>,
    pub left_identities: BTreeSet<ElementId>,
    pub right_identities: BTreeSet<ElementId>,
}
