//! Smallest semilattice congruence, archimedean components, and the shape
//! classification of finite permutable semigroups.

use std::collections::BTreeSet;

use crate::congruence::{self, Congruence, PermutabilityReport};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::ideals;
use crate::semigroup::{ElementId, FiniteSemigroup};

/// Decomposition of a semigroup over its smallest semilattice congruence.
#[derive(Debug, Clone)]
pub struct SemilatticeDecomposition {
    pub congruence: Congruence,
    /// Component element sets, by ascending representative.
    pub components: Vec<BTreeSet<ElementId>>,
    /// The quotient semigroup; always a semilattice.
    pub quotient: FiniteSemigroup,
    /// True iff every component is archimedean, i.e. the semigroup is a
    /// semilattice of archimedean semigroups.
    pub all_archimedean: bool,
}

/// The least congruence whose quotient is a semilattice: generated by all
/// pairs `(a, a^2)` and `(ab, ba)`. Any congruence with semilattice quotient
/// must contain these pairs, and the quotient by their closure is already
/// idempotent and commutative, hence minimality.
pub fn smallest_semilattice_congruence(s: &FiniteSemigroup) -> Congruence {
    let mut pairs = Vec::new();
    for a in s.elements() {
        pairs.push((a, s.mul(a, a)));
        for b in a + 1..s.order() {
            pairs.push((s.mul(a, b), s.mul(b, a)));
        }
    }
    let eta = congruence::congruence_closure(s, &pairs);
    debug_assert!(congruence::quotient(s, &eta).is_semilattice());
    eta
}

/// Splits the semigroup into the classes of the smallest semilattice
/// congruence and tests each class for being archimedean.
pub fn putcha_decomposition(s: &FiniteSemigroup) -> SemilatticeDecomposition {
    let congruence = smallest_semilattice_congruence(s);
    let components: Vec<BTreeSet<ElementId>> = congruence
        .classes()
        .into_iter()
        .map(|c| c.into_iter().collect())
        .collect();
    let quotient = congruence::quotient(s, &congruence);
    let all_archimedean = components.iter().all(|c| {
        let sub = s
            .induced(c)
            .expect("semilattice congruence classes are subsemigroups");
        ideals::is_archimedean(&sub)
    });
    SemilatticeDecomposition {
        congruence,
        components,
        quotient,
        all_archimedean,
    }
}

/// Kind of the upper component of a two-component decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UpperKind {
    Group,
    CompletelySimpleNonGroup,
}

/// Structure of the lower component when the upper one is a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LowerCase {
    /// The lower component is itself completely simple (this covers the
    /// group-with-zero case, where it is a single point).
    CompletelySimple,
    /// Null component, the group identity is a right identity of the whole
    /// semigroup, and every product with a right factor in the component is
    /// the zero.
    NullRight,
    /// Mirror image of `NullRight`.
    NullLeft,
    /// Nilpotent component with the group identity a two-sided identity.
    NilpotentWithIdentity,
    /// The lower component has a non-trivial proper kernel. Recognized and
    /// reported, not decomposed further.
    NontrivialKernelExtension { kernel: BTreeSet<ElementId> },
    /// The upper component is not a group, so the finer case split above
    /// does not apply; the lower component is an ideal extension of its
    /// kernel by a nilpotent semigroup.
    UnresolvedNonGroupUpper,
}

/// Shape verdict for one semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassificationCase {
    NotPermutable,
    NotPutcha {
        /// A component that is not archimedean.
        component: BTreeSet<ElementId>,
    },
    /// Archimedean and monogenic nilpotent.
    ArchCyclicNilpotent {
        generator: ElementId,
        degree: usize,
    },
    /// Archimedean and completely simple.
    ArchCompletelySimple,
    /// Semilattice of two archimedean components.
    TwoComponent {
        upper_kind: UpperKind,
        lower_case: LowerCase,
        upper: BTreeSet<ElementId>,
        lower: BTreeSet<ElementId>,
    },
}

#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub case: ClassificationCase,
    pub permutability: PermutabilityReport,
    pub components: Vec<BTreeSet<ElementId>>,
}

/// Classifies a finite semigroup along the permutable/putcha pipeline.
///
/// The archimedean dichotomy (monogenic nilpotent vs completely simple) and
/// the two-component case split are structural facts for permutable inputs;
/// if the input violates them the function fails loudly with
/// [`Error::InternalInconsistency`] instead of guessing.
pub fn classify(s: &FiniteSemigroup) -> Result<ClassificationReport> {
    let permutability = congruence::is_permutable(s)?;
    let decomposition = putcha_decomposition(s);
    let components = decomposition.components.clone();

    if !permutability.permutable {
        return Ok(ClassificationReport {
            case: ClassificationCase::NotPermutable,
            permutability,
            components,
        });
    }
    if !decomposition.all_archimedean {
        let witness = decomposition
            .components
            .iter()
            .find(|c| {
                let sub = s.induced(c).expect("component is a subsemigroup");
                !ideals::is_archimedean(&sub)
            })
            .expect("some component is not archimedean")
            .clone();
        return Ok(ClassificationReport {
            case: ClassificationCase::NotPutcha { component: witness },
            permutability,
            components,
        });
    }

    match decomposition.components.len() {
        1 => {
            let monogenic = s.monogenic_generator();
            let profile = ideals::nilpotency_profile(s);
            let flags = ideals::simplicity_flags(s);
            let cyclic_nilpotent = monogenic.is_some() && profile.is_nilpotent;
            // Exactly one side of the dichotomy holds for order >= 2; the
            // trivial semigroup is both and is reported as cyclic nilpotent.
            if cyclic_nilpotent && flags.is_completely_simple && s.order() > 1 {
                return Err(Error::InternalInconsistency(
                    "archimedean component is both cyclic nilpotent and completely simple".into(),
                ));
            }
            let case = if cyclic_nilpotent {
                ClassificationCase::ArchCyclicNilpotent {
                    generator: monogenic.expect("checked"),
                    degree: profile.degree.expect("nilpotent"),
                }
            } else if flags.is_completely_simple {
                ClassificationCase::ArchCompletelySimple
            } else {
                return Err(Error::InternalInconsistency(
                    "archimedean permutable semigroup fits neither dichotomy arm".into(),
                ));
            };
            Ok(ClassificationReport {
                case,
                permutability,
                components,
            })
        }
        2 => {
            let case = classify_two_components(s, &decomposition)?;
            Ok(ClassificationReport {
                case,
                permutability,
                components,
            })
        }
        n => Err(Error::InternalInconsistency(format!(
            "permutable semigroup decomposed into {n} archimedean components; \
             a permutable semilattice has at most 2 elements"
        ))),
    }
}

fn classify_two_components(
    s: &FiniteSemigroup,
    decomposition: &SemilatticeDecomposition,
) -> Result<ClassificationCase> {
    // The quotient is a two-element semilattice; its zero indexes the lower
    // component (the one absorbing products).
    let quotient_zero = decomposition
        .quotient
        .special_elements()
        .zero
        .ok_or_else(|| Error::InternalInconsistency("two-chain quotient has a zero".into()))?;
    let lower = decomposition.components[quotient_zero].clone();
    let upper = decomposition.components[1 - quotient_zero].clone();

    let upper_sub = s.induced(&upper).expect("component is a subsemigroup");
    let lower_sub = s.induced(&lower).expect("component is a subsemigroup");
    let upper_members: Vec<ElementId> = upper.iter().copied().collect();

    let upper_group = FiniteGroup::from_semigroup(upper_sub).ok();
    let upper_kind = match &upper_group {
        Some(_) => UpperKind::Group,
        None => UpperKind::CompletelySimpleNonGroup,
    };
    if upper_kind == UpperKind::CompletelySimpleNonGroup {
        let flags = ideals::simplicity_flags(&s.induced(&upper).expect("subsemigroup"));
        if !flags.is_completely_simple {
            return Err(Error::InternalInconsistency(
                "upper component of a permutable two-component semigroup must be completely simple"
                    .into(),
            ));
        }
        return Ok(ClassificationCase::TwoComponent {
            upper_kind,
            lower_case: LowerCase::UnresolvedNonGroupUpper,
            upper,
            lower,
        });
    }
    let group = upper_group.expect("checked");
    // Identity of the upper group as an element of s.
    let identity = upper_members[group.identity()];

    let lower_flags = ideals::simplicity_flags(&lower_sub);
    if lower_flags.is_completely_simple {
        return Ok(ClassificationCase::TwoComponent {
            upper_kind,
            lower_case: LowerCase::CompletelySimple,
            upper,
            lower,
        });
    }

    // The kernel of the lower component is an ideal of the whole semigroup.
    let lower_kernel_local = ideals::kernel(&lower_sub);
    let lower_members: Vec<ElementId> = lower.iter().copied().collect();
    let kernel_global: BTreeSet<ElementId> = lower_kernel_local
        .members()
        .iter()
        .map(|&i| lower_members[i])
        .collect();
    let kernel_ideal = ideals::IdealSet::new(s, kernel_global.clone()).map_err(|_| {
        Error::InternalInconsistency(
            "kernel of the lower component is an ideal of the whole".into(),
        )
    })?;
    let collapsed = ideals::rees_quotient(s, &kernel_ideal)?;
    // Position of the group identity inside the collapsed semigroup: the
    // non-kernel elements keep their relative order.
    let identity_in_collapsed = s
        .elements()
        .filter(|a| !kernel_ideal.contains(*a))
        .position(|a| a == identity)
        .ok_or_else(|| {
            Error::InternalInconsistency("group identity fell into the collapsed kernel".into())
        })?;
    let right_identity = collapsed
        .elements()
        .all(|x| collapsed.mul(x, identity_in_collapsed) == x);
    let left_identity = collapsed
        .elements()
        .all(|x| collapsed.mul(identity_in_collapsed, x) == x);

    let lower_case = match (left_identity, right_identity) {
        (true, true) => {
            if kernel_global.len() == 1 {
                LowerCase::NilpotentWithIdentity
            } else {
                LowerCase::NontrivialKernelExtension {
                    kernel: kernel_global,
                }
            }
        }
        (false, true) => {
            // Permutability forces the kernel to be trivial and all products
            // into the component to collapse to the zero.
            expect_one_sided_null(s, &lower, &kernel_global, true)?;
            LowerCase::NullRight
        }
        (true, false) => {
            expect_one_sided_null(s, &lower, &kernel_global, false)?;
            LowerCase::NullLeft
        }
        (false, false) => {
            return Err(Error::InternalInconsistency(
                "group identity is not even a one-sided identity of the collapsed semigroup".into(),
            ))
        }
    };
    Ok(ClassificationCase::TwoComponent {
        upper_kind,
        lower_case,
        upper,
        lower,
    })
}

/// Sanity of the one-sided null cases: trivial kernel, null lower component,
/// and `SN = {0}` (resp. `NS = {0}`).
fn expect_one_sided_null(
    s: &FiniteSemigroup,
    lower: &BTreeSet<ElementId>,
    kernel: &BTreeSet<ElementId>,
    right: bool,
) -> Result<()> {
    if kernel.len() != 1 {
        return Err(Error::InternalInconsistency(
            "one-sided identity case must have a trivial kernel".into(),
        ));
    }
    let zero = *kernel.iter().next().expect("non-empty");
    for &a in lower {
        for t in s.elements() {
            let p = if right { s.mul(t, a) } else { s.mul(a, t) };
            if p != zero {
                return Err(Error::InternalInconsistency(
                    "one-sided null case: products into the lower component must hit the zero"
                        .into(),
                ));
            }
        }
    }
    Ok(())
}
