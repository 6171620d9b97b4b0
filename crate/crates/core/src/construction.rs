//! Declarative builders (cyclic nilpotent, group with zero, Rees matrix,
//! coset null extension and friends) and the structure checks that compare a
//! semigroup's permutability against subgroup-interval commutation
//! conditions.

use std::collections::BTreeSet;

use crate::congruence;
use crate::decomposition::putcha_decomposition;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup, DEFAULT_SUBGROUP_BOUND};
use crate::ideals;
use crate::semigroup::{Adjoined, ElementId, FiniteSemigroup};

/// Which side the group translates the coset part on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
}

/// Recipe for the coset null extension: the group `G`, the coset space of
/// `subgroup` as a null part, and an absorbing zero.
#[derive(Debug, Clone)]
pub struct CosetExtensionSpec {
    pub group: FiniteGroup,
    pub subgroup: Subgroup,
    pub side: Side,
}

/// Builds the coset null extension.
///
/// Element layout (normative, so tables are reproducible): the group block
/// on ids `0..|G|`, then one id per coset ordered by smallest member, then
/// the zero last. For `Side::Right` products are: group products inside the
/// group block; every product with right factor outside the group block is
/// the zero; a coset translated by a group element on the right moves to the
/// translated coset. `Side::Left` is the mirror image.
pub fn construct1(spec: &CosetExtensionSpec) -> FiniteSemigroup {
    match spec.side {
        Side::Right => build_right_extension(&spec.group, &spec.subgroup),
        Side::Left => build_right_extension(&spec.group.dual(), &spec.subgroup).transpose(),
    }
}

fn build_right_extension(group: &FiniteGroup, subgroup: &Subgroup) -> FiniteSemigroup {
    let g_order = group.order();
    let cosets = group.right_cosets(subgroup);
    let n = g_order + cosets.len() + 1;
    let zero = n - 1;
    // coset index of each group element
    let mut coset_of = vec![0usize; g_order];
    for (idx, coset) in cosets.iter().enumerate() {
        for &m in coset {
            coset_of[m] = idx;
        }
    }
    let mut table = vec![zero; n * n]; // default: products fall to the zero
    for a in 0..g_order {
        for b in 0..g_order {
            table[a * n + b] = group.mul(a, b);
        }
    }
    for (idx, coset) in cosets.iter().enumerate() {
        let member = *coset.first().expect("cosets are non-empty");
        for b in 0..g_order {
            table[(g_order + idx) * n + b] = g_order + coset_of[group.mul(member, b)];
        }
    }
    let mut labels: Vec<String> = (0..g_order).map(|a| group.carrier().label(a)).collect();
    labels.extend(cosets.iter().map(|c| format!("c{}", c.first().unwrap())));
    labels.push("0".to_string());
    FiniteSemigroup::from_flat(n, table)
        .expect("coset extension is associative")
        .with_labels(labels)
        .expect("one label per element")
}

/// Outcome of checking `HK = KH` over a subgroup interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalCondition {
    pub holds: bool,
    pub failing_pair: Option<(Subgroup, Subgroup)>,
    pub interval_size: usize,
}

/// Checks that all pairs of subgroups between `lower` and the whole group
/// commute setwise.
pub fn interval_commutation_condition(
    group: &FiniteGroup,
    lower: &Subgroup,
) -> Result<IntervalCondition> {
    interval_commutation_condition_bounded(group, lower, DEFAULT_SUBGROUP_BOUND.max(group.order()))
}

pub fn interval_commutation_condition_bounded(
    group: &FiniteGroup,
    lower: &Subgroup,
    bound: usize,
) -> Result<IntervalCondition> {
    let interval = group.interval_above_bounded(lower, bound)?;
    for (idx, h) in interval.iter().enumerate() {
        for k in &interval[idx + 1..] {
            if !group.product_commutes(h, k).commutes {
                return Ok(IntervalCondition {
                    holds: false,
                    failing_pair: Some((h.clone(), k.clone())),
                    interval_size: interval.len(),
                });
            }
        }
    }
    Ok(IntervalCondition {
        holds: true,
        failing_pair: None,
        interval_size: interval.len(),
    })
}

/// The monogenic nilpotent semigroup `x, x^2, ..., x^(n-1), 0` with
/// `x^n = 0`; `n = 1` yields the trivial semigroup.
pub fn cyclic_nilpotent(n: usize) -> FiniteSemigroup {
    assert!(n >= 1);
    let zero = n - 1;
    let mut table = vec![zero; n * n];
    for i in 0..n.saturating_sub(1) {
        for j in 0..n - 1 {
            // id i holds x^(i+1); the product x^(i+j+2) survives iff its
            // exponent is below n
            if i + j + 2 < n {
                table[i * n + j] = i + j + 1;
            }
        }
    }
    FiniteSemigroup::from_flat(n, table).expect("cyclic nilpotent table")
}

/// The group with an absorbing zero adjoined.
pub fn group_with_zero(group: &FiniteGroup) -> FiniteSemigroup {
    group.carrier().adjoin(Adjoined::Zero)
}

/// Recipe for a Rees matrix semigroup over a group with sandwich matrix `P`
/// (rows indexed by `J`, columns by `I`).
#[derive(Debug, Clone)]
pub struct ReesMatrixSpec {
    pub group: FiniteGroup,
    pub i_size: usize,
    pub j_size: usize,
    /// `j_size` rows of `i_size` group element ids.
    pub sandwich: Vec<Vec<ElementId>>,
}

impl ReesMatrixSpec {
    pub fn new(
        group: FiniteGroup,
        i_size: usize,
        j_size: usize,
        sandwich: Vec<Vec<ElementId>>,
    ) -> Result<Self> {
        if i_size == 0 || j_size == 0 {
            return Err(Error::Shape(
                "Rees matrix dimensions must be positive".into(),
            ));
        }
        if sandwich.len() != j_size || sandwich.iter().any(|row| row.len() != i_size) {
            return Err(Error::Shape(format!(
                "sandwich matrix must be {j_size} rows of {i_size} entries"
            )));
        }
        if sandwich.iter().flatten().any(|&p| p >= group.order()) {
            return Err(Error::Shape("sandwich entry is not a group element".into()));
        }
        Ok(ReesMatrixSpec {
            group,
            i_size,
            j_size,
            sandwich,
        })
    }

    /// Id of the triple `(i, g, j)`.
    pub fn element_id(&self, i: usize, g: ElementId, j: usize) -> ElementId {
        (i * self.group.order() + g) * self.j_size + j
    }

    pub fn order(&self) -> usize {
        self.i_size * self.group.order() * self.j_size
    }
}

/// Builds the Rees matrix semigroup: triples `(i, g, j)` with product
/// `(i, g, j)(k, h, l) = (i, g * P[j][k] * h, l)`.
pub fn rees_matrix(spec: &ReesMatrixSpec) -> FiniteSemigroup {
    let n = spec.order();
    let g = &spec.group;
    let mut table = vec![0; n * n];
    for i in 0..spec.i_size {
        for x in 0..g.order() {
            for j in 0..spec.j_size {
                let a = spec.element_id(i, x, j);
                for k in 0..spec.i_size {
                    for y in 0..g.order() {
                        for l in 0..spec.j_size {
                            let b = spec.element_id(k, y, l);
                            let product = g.mul(g.mul(x, spec.sandwich[j][k]), y);
                            table[a * n + b] = spec.element_id(i, product, l);
                        }
                    }
                }
            }
        }
    }
    FiniteSemigroup::from_flat(n, table).expect("sandwich products are associative")
}

/// A Rees matrix coordinatization of a completely simple semigroup.
#[derive(Debug, Clone)]
pub struct ReesDecomposition {
    pub spec: ReesMatrixSpec,
    /// `iso[id in rees_matrix(&spec)] = element of the original semigroup`;
    /// verified to be an isomorphism.
    pub iso: Vec<ElementId>,
}

/// Coordinatizes a completely simple semigroup as a Rees matrix semigroup.
///
/// The structure group is the maximal subgroup at the smallest idempotent
/// `e`; `I` runs over the R-classes and `J` over the L-classes, with `e`'s
/// classes first and the rest ordered by smallest member. Representatives
/// are adjusted so the first row and first column of the sandwich matrix are
/// the identity.
pub fn rees_decompose(s: &FiniteSemigroup) -> Result<ReesDecomposition> {
    if !ideals::simplicity_flags(s).is_completely_simple {
        return Err(Error::NotCompletelySimple);
    }
    let e =
        *s.special_elements().idempotents.first().ok_or_else(|| {
            Error::InternalInconsistency("finite semigroup has an idempotent".into())
        })?;
    let greens = ideals::green(s);

    // the maximal subgroup at e
    let h_members: BTreeSet<ElementId> = s
        .elements()
        .filter(|&x| greens.r.same(x, e) && greens.l.same(x, e))
        .collect();
    let h_sorted: Vec<ElementId> = h_members.iter().copied().collect();
    let group = FiniteGroup::from_semigroup(s.induced(&h_members)?).map_err(|_| {
        Error::InternalInconsistency(
            "H-class of an idempotent in a completely simple semigroup".into(),
        )
    })?;
    let local = |x: ElementId| -> Result<ElementId> {
        h_sorted
            .binary_search(&x)
            .map_err(|_| Error::InternalInconsistency("product left the structure group".into()))
    };
    // group inverse acting on global element ids
    let inv_global = |x: ElementId| -> Result<ElementId> { Ok(h_sorted[group.inverse(local(x)?)]) };

    // R-classes (I) and L-classes (J) with e's class first
    let order_classes = |p: &crate::partition::Partition| -> Vec<Vec<ElementId>> {
        let mut classes = p.classes();
        let e_pos = classes
            .iter()
            .position(|c| c.contains(&e))
            .expect("e somewhere");
        classes.swap(0, e_pos);
        classes[1..].sort_by_key(|c| c[0]);
        classes
    };
    let r_classes = order_classes(&greens.r);
    let l_classes = order_classes(&greens.l);

    // representatives: row reps in R_i ∩ L_e, column reps in R_e ∩ L_j,
    // then normalized so the first sandwich row and column are the identity
    let mut row_reps = Vec::with_capacity(r_classes.len());
    for class in &r_classes {
        let raw = *class
            .iter()
            .find(|&&x| greens.l.same(x, e))
            .ok_or_else(|| Error::InternalInconsistency("egg-box cell is non-empty".into()))?;
        row_reps.push(s.mul(raw, inv_global(s.mul(e, raw))?));
    }
    let mut col_reps = Vec::with_capacity(l_classes.len());
    for class in &l_classes {
        let raw = *class
            .iter()
            .find(|&&x| greens.r.same(x, e))
            .ok_or_else(|| Error::InternalInconsistency("egg-box cell is non-empty".into()))?;
        col_reps.push(s.mul(inv_global(s.mul(raw, e))?, raw));
    }

    let mut sandwich = vec![vec![0; r_classes.len()]; l_classes.len()];
    for (j, &b) in col_reps.iter().enumerate() {
        for (i, &a) in row_reps.iter().enumerate() {
            sandwich[j][i] = local(s.mul(b, a))?;
        }
    }
    let spec = ReesMatrixSpec::new(group, r_classes.len(), l_classes.len(), sandwich)?;

    let mut iso = vec![0; spec.order()];
    for (i, &a) in row_reps.iter().enumerate() {
        for (g_local, &g_global) in h_sorted.iter().enumerate() {
            for (j, &b) in col_reps.iter().enumerate() {
                iso[spec.element_id(i, g_local, j)] = s.mul(s.mul(a, g_global), b);
            }
        }
    }
    let rebuilt = rees_matrix(&spec);
    if !rebuilt.is_isomorphic_by(s, &iso) {
        return Err(Error::InternalInconsistency(
            "Rees coordinatization did not verify as an isomorphism".into(),
        ));
    }
    debug_assert!(spec.sandwich[0].iter().all(|&p| p == spec.group.identity()));
    debug_assert!(spec
        .sandwich
        .iter()
        .all(|row| row[0] == spec.group.identity()));
    Ok(ReesDecomposition { spec, iso })
}

// ---------------------------------------------------------------------------
// Structure checks: group-over-null and group-over-nilpotent shapes.
// ---------------------------------------------------------------------------

/// Report for a semigroup that is a semilattice of a group and a non-trivial
/// null part with a one-sided identity.
#[derive(Debug, Clone)]
pub struct GroupNullReport {
    pub side: Side,
    /// Global element ids of the group block, ascending (local group id ->
    /// global element).
    pub group_members: Vec<ElementId>,
    pub group: FiniteGroup,
    /// Global ids of the null part (zero included).
    pub null_part: Vec<ElementId>,
    /// Stabilizer of the smallest non-zero null element, in local group ids.
    pub stabilizer: Subgroup,
    pub condition: IntervalCondition,
    pub permutable: bool,
    /// The headline equivalence: interval condition iff permutable.
    pub agrees: bool,
}

/// Shape check for "group over a null part with one-sided identity":
/// verifies the semigroup splits as a semilattice of a group `G` and a null
/// semigroup `N` with the identity of `G` a right (or, mirrored, left)
/// identity, all products into `N` collapsing to the zero, and `G` acting
/// transitively on the non-zero part of `N`. On success compares the
/// subgroup-interval commutation condition at the stabilizer with the actual
/// permutability of the semigroup.
pub fn check_group_null_semilattice(s: &FiniteSemigroup) -> Result<GroupNullReport> {
    match check_group_null_one_side(s, Side::Right) {
        Ok(report) => Ok(report),
        Err(Error::ShapeMismatch(right_msg)) => {
            let transposed = s.transpose();
            match check_group_null_one_side(&transposed, Side::Left) {
                Ok(report) => Ok(report),
                Err(Error::ShapeMismatch(left_msg)) => Err(Error::ShapeMismatch(format!(
                    "right-sided: {right_msg}; left-sided: {left_msg}"
                ))),
                Err(other) => Err(other),
            }
        }
        Err(other) => Err(other),
    }
}

/// Right-sided check; for `Side::Left` the caller passes the transposed
/// semigroup, and every quantity below reads correctly in mirrored terms.
fn check_group_null_one_side(s: &FiniteSemigroup, side: Side) -> Result<GroupNullReport> {
    let parts = two_component_group_split(s)?;
    let TwoComponentSplit {
        group,
        group_members,
        lower,
    } = parts;
    if lower.len() < 2 {
        return Err(Error::ShapeMismatch("null part must be non-trivial".into()));
    }
    let zero = s
        .special_elements()
        .zero
        .ok_or_else(|| Error::ShapeMismatch("no zero element".into()))?;
    if !lower.contains(&zero) {
        return Err(Error::ShapeMismatch(
            "zero must lie in the lower component".into(),
        ));
    }
    for &a in &lower {
        for t in s.elements() {
            if s.mul(t, a) != zero {
                return Err(Error::ShapeMismatch(
                    "products with right factor in the null part must be the zero".into(),
                ));
            }
        }
    }
    let identity_global = group_members[group.identity()];
    if !s.elements().all(|x| s.mul(x, identity_global) == x) {
        return Err(Error::ShapeMismatch(
            "group identity is not a right identity of the whole semigroup".into(),
        ));
    }
    let starred: BTreeSet<ElementId> = lower.iter().copied().filter(|&a| a != zero).collect();
    for &a in &starred {
        let orbit: BTreeSet<ElementId> = group_members.iter().map(|&g| s.mul(a, g)).collect();
        if orbit != starred {
            return Err(Error::ShapeMismatch(
                "group does not act transitively on the non-zero null part".into(),
            ));
        }
    }
    let base = *starred.first().expect("non-trivial null part");
    let stabilizer =
        group.subgroup((0..group.order()).filter(|&g| s.mul(base, group_members[g]) == base))?;
    let condition = interval_commutation_condition(&group, &stabilizer)?;
    let permutable = congruence::is_permutable(s)?.permutable;
    Ok(GroupNullReport {
        side,
        agrees: condition.holds == permutable,
        group_members,
        group,
        null_part: lower.iter().copied().collect(),
        stabilizer,
        condition,
        permutable,
    })
}

struct TwoComponentSplit {
    group: FiniteGroup,
    /// local group id -> global element id
    group_members: Vec<ElementId>,
    lower: BTreeSet<ElementId>,
}

/// Requires exactly two semilattice components with the upper one a group.
fn two_component_group_split(s: &FiniteSemigroup) -> Result<TwoComponentSplit> {
    let decomposition = putcha_decomposition(s);
    if decomposition.components.len() != 2 {
        return Err(Error::ShapeMismatch(format!(
            "expected 2 semilattice components, found {}",
            decomposition.components.len()
        )));
    }
    let quotient_zero = decomposition
        .quotient
        .special_elements()
        .zero
        .expect("two-element semilattice has a zero");
    let lower = decomposition.components[quotient_zero].clone();
    let upper = decomposition.components[1 - quotient_zero].clone();
    let upper_sub = s.induced(&upper).expect("component is closed");
    let group = FiniteGroup::from_semigroup(upper_sub)
        .map_err(|_| Error::ShapeMismatch("upper component is not a group".into()))?;
    Ok(TwoComponentSplit {
        group,
        group_members: upper.iter().copied().collect(),
        lower,
    })
}

/// Per-layer record of the group-over-nilpotent check.
#[derive(Debug, Clone)]
pub struct LayerCheck {
    /// Power index `i` of the layer `N^i - N^(i+1)`.
    pub index: usize,
    pub representative: ElementId,
    pub layer: BTreeSet<ElementId>,
    /// Does the two-sided orbit `G a G` of the representative cover the
    /// whole layer?
    pub orbit_covers_layer: bool,
    /// Stabilizer of the representative inside `dual(G) x G` (pair ids).
    pub stabilizer: Subgroup,
    pub interval_commutes: bool,
    pub failing_pair: Option<(Subgroup, Subgroup)>,
}

/// Report for a semigroup that is a semilattice of a group and a nilpotent
/// part whose identity is two-sided.
#[derive(Debug, Clone)]
pub struct GroupNilpotentReport {
    pub group_members: Vec<ElementId>,
    pub group: FiniteGroup,
    pub nilpotent_part: Vec<ElementId>,
    /// Nilpotency degree of the lower component.
    pub degree: usize,
    pub layers: Vec<LayerCheck>,
    /// All layers covered and all intervals commuting.
    pub verdict: bool,
    pub permutable: bool,
    pub agrees: bool,
}

/// Shape check for "group over a nilpotent part with two-sided identity".
///
/// Splits the semigroup into a group `G` and a nilpotent component `N`,
/// requires the identity of `G` to be a two-sided identity of the whole
/// semigroup, and then per power layer `N^i - N^(i+1)` checks that the
/// two-sided `G`-orbit of a representative covers the layer and that all
/// subgroups of `dual(G) x G` above the representative's stabilizer commute
/// pairwise. A trivial nilpotent part (degree 1) has no layers and the
/// verdict is vacuously true.
pub fn check_group_nilpotent_semilattice(s: &FiniteSemigroup) -> Result<GroupNilpotentReport> {
    check_group_nilpotent_with(s, None)
}

/// As [`check_group_nilpotent_semilattice`] with explicit layer
/// representatives (one per layer, in layer order).
pub fn check_group_nilpotent_semilattice_with_reps(
    s: &FiniteSemigroup,
    reps: &[ElementId],
) -> Result<GroupNilpotentReport> {
    check_group_nilpotent_with(s, Some(reps))
}

fn check_group_nilpotent_with(
    s: &FiniteSemigroup,
    chosen_reps: Option<&[ElementId]>,
) -> Result<GroupNilpotentReport> {
    let TwoComponentSplit {
        group,
        group_members,
        lower,
    } = two_component_group_split(s)?;
    let identity_global = group_members[group.identity()];
    let two_sided = s
        .elements()
        .all(|x| s.mul(x, identity_global) == x && s.mul(identity_global, x) == x);
    if !two_sided {
        return Err(Error::ShapeMismatch(
            "group identity is not a two-sided identity of the whole semigroup".into(),
        ));
    }
    let lower_sub = s.induced(&lower).expect("component is closed");
    let profile = ideals::nilpotency_profile(&lower_sub);
    let degree = profile
        .degree
        .ok_or_else(|| Error::ShapeMismatch("lower component is not nilpotent".into()))?;

    // Power chain of the lower component inside the ambient semigroup.
    let mut powers: Vec<BTreeSet<ElementId>> = vec![lower.clone()];
    for _ in 1..degree {
        let next = s.product_of_sets(powers.last().unwrap(), &lower);
        powers.push(next);
    }
    debug_assert_eq!(powers.len(), degree);
    debug_assert_eq!(powers.last().unwrap().len(), 1);

    let pair_group = group.dual().direct_product(&group);
    let g_order = group.order();
    let mut layers = Vec::new();
    for i in 1..degree {
        let layer: BTreeSet<ElementId> = powers[i - 1].difference(&powers[i]).copied().collect();
        let representative = match chosen_reps {
            Some(reps) => {
                let r = *reps.get(i - 1).ok_or_else(|| {
                    Error::ShapeMismatch(format!("missing representative for layer {i}"))
                })?;
                if !layer.contains(&r) {
                    return Err(Error::ShapeMismatch(format!(
                        "representative {r} is not in layer {i}"
                    )));
                }
                r
            }
            None => *layer.first().expect("layers are non-empty"),
        };
        let mut orbit = BTreeSet::new();
        for &g in &group_members {
            for &h in &group_members {
                orbit.insert(s.mul(s.mul(g, representative), h));
            }
        }
        let orbit_covers_layer = orbit == layer;
        // stabilizer of the representative under a . (g, h) = g a h
        let stab_members = (0..g_order)
            .flat_map(|g| (0..g_order).map(move |h| (g, h)))
            .filter(|&(g, h)| {
                s.mul(s.mul(group_members[g], representative), group_members[h]) == representative
            });
        let stabilizer =
            pair_group.subgroup(stab_members.map(|(g, h)| group.pair_id(&group, g, h)))?;
        let condition = interval_commutation_condition_bounded(
            &pair_group,
            &stabilizer,
            pair_group.order().max(DEFAULT_SUBGROUP_BOUND),
        )?;
        layers.push(LayerCheck {
            index: i,
            representative,
            layer,
            orbit_covers_layer,
            stabilizer,
            interval_commutes: condition.holds,
            failing_pair: condition.failing_pair,
        });
    }
    let verdict = layers
        .iter()
        .all(|l| l.orbit_covers_layer && l.interval_commutes);
    let permutable = congruence::is_permutable(s)?.permutable;
    Ok(GroupNilpotentReport {
        group_members,
        group,
        nilpotent_part: lower.iter().copied().collect(),
        degree,
        layers,
        verdict,
        permutable,
        agrees: verdict == permutable,
    })
}

// ---------------------------------------------------------------------------
// Builder family for the group-over-nilpotent shape.
// ---------------------------------------------------------------------------

/// The group `G` adjoined above a cyclic nilpotent part it fixes pointwise;
/// the identity of `G` is a two-sided identity of the result.
pub fn group_over_cyclic_nilpotent(group: &FiniteGroup, nil_order: usize) -> FiniteSemigroup {
    assert!(nil_order >= 1);
    let g_order = group.order();
    let nil = cyclic_nilpotent(nil_order);
    let n = g_order + nil_order;
    let mut table = vec![0; n * n];
    for a in 0..g_order {
        for b in 0..g_order {
            table[a * n + b] = group.mul(a, b);
        }
    }
    for x in 0..nil_order {
        for b in 0..g_order {
            table[(g_order + x) * n + b] = g_order + x;
            table[b * n + (g_order + x)] = g_order + x;
        }
        for y in 0..nil_order {
            table[(g_order + x) * n + (g_order + y)] = g_order + nil.mul(x, y);
        }
    }
    FiniteSemigroup::from_flat(n, table).expect("pointwise-fixed extension is associative")
}

/// The group `G` adjoined above a coset space it translates on one side
/// only, fixing it pointwise on the other, with coset products collapsing to
/// an adjoined zero. The identity of `G` is a two-sided identity of the
/// result, so this lands in the group-over-nilpotent shape while its
/// stabilizers trace out the full subgroup interval above `subgroup`.
pub fn group_over_one_sided_cosets(
    group: &FiniteGroup,
    subgroup: &Subgroup,
    side: Side,
) -> FiniteSemigroup {
    let g_order = group.order();
    // right cosets for right translation, left cosets (as right cosets of
    // the dual) for left translation
    let acting = match side {
        Side::Right => group.clone(),
        Side::Left => group.dual(),
    };
    let cosets = acting.right_cosets(subgroup);
    let n = g_order + cosets.len() + 1;
    let zero = n - 1;
    let mut coset_of = vec![0usize; g_order];
    for (idx, coset) in cosets.iter().enumerate() {
        for &m in coset {
            coset_of[m] = idx;
        }
    }
    let mut table = vec![zero; n * n];
    for a in 0..g_order {
        for b in 0..g_order {
            table[a * n + b] = group.mul(a, b);
        }
    }
    for (idx, coset) in cosets.iter().enumerate() {
        let member = *coset.first().expect("non-empty");
        for b in 0..g_order {
            let translated = g_order + coset_of[acting.mul(member, b)];
            match side {
                Side::Right => {
                    table[(g_order + idx) * n + b] = translated;
                    table[b * n + (g_order + idx)] = g_order + idx;
                }
                Side::Left => {
                    table[b * n + (g_order + idx)] = translated;
                    table[(g_order + idx) * n + b] = g_order + idx;
                }
            }
        }
    }
    FiniteSemigroup::from_flat(n, table).expect("one-sided coset extension is associative")
}

/// The group `G` adjoined above the coset space of a normal subgroup, acted
/// on by two-sided translation, with all products of cosets collapsing to an
/// adjoined zero.
pub fn group_over_normal_cosets(group: &FiniteGroup, normal: &Subgroup) -> Result<FiniteSemigroup> {
    if !group.is_normal(normal) {
        return Err(Error::ShapeMismatch(
            "two-sided coset translation needs a normal subgroup".into(),
        ));
    }
    let g_order = group.order();
    let cosets = group.right_cosets(normal);
    let n = g_order + cosets.len() + 1;
    let zero = n - 1;
    let mut coset_of = vec![0usize; g_order];
    for (idx, coset) in cosets.iter().enumerate() {
        for &m in coset {
            coset_of[m] = idx;
        }
    }
    let mut table = vec![zero; n * n];
    for a in 0..g_order {
        for b in 0..g_order {
            table[a * n + b] = group.mul(a, b);
        }
    }
    for (idx, coset) in cosets.iter().enumerate() {
        let member = *coset.first().expect("non-empty");
        for b in 0..g_order {
            table[(g_order + idx) * n + b] = g_order + coset_of[group.mul(member, b)];
            table[b * n + (g_order + idx)] = g_order + coset_of[group.mul(b, member)];
        }
    }
    FiniteSemigroup::from_flat(n, table)
}
