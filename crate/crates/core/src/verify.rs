//! The registry of named census predicates. Each one states a structural
//! property of finite semigroups that the census driver checks exhaustively
//! over small orders; the expected failure count is always zero.

use crate::congruence;
use crate::enumeration::NamedPredicate;
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::ideals;
use crate::semigroup::FiniteSemigroup;

/// All predicates the census knows by name.
pub fn standard_predicates() -> &'static [NamedPredicate] {
    &[
        NamedPredicate {
            name: "lemma2",
            description: "ideals of a permutable semigroup form a chain",
            check: ideal_chain_when_permutable,
        },
        NamedPredicate {
            name: "lemma3",
            description: "a nil semigroup is permutable iff its ideals form a chain",
            check: nil_permutable_iff_chain,
        },
        NamedPredicate {
            name: "lemma4",
            description: "a permutable semigroup with a proper ideal has no non-trivial group image, and neither does the ideal",
            check: no_group_image_over_proper_ideal,
        },
        NamedPredicate {
            name: "lemma5",
            description: "each ideal of a permutable semigroup sits inside one congruence class or is a union of classes",
            check: ideals_saturated_by_congruences,
        },
        NamedPredicate {
            name: "lemma7",
            description: "every quotient of a permutable semigroup is permutable",
            check: quotients_stay_permutable,
        },
        NamedPredicate {
            name: "lemma8",
            description: "a semilattice is permutable iff it has at most two elements",
            check: semilattice_permutable_iff_small,
        },
        NamedPredicate {
            name: "lemma9",
            description: "every finite nil semigroup is nilpotent",
            check: nil_implies_nilpotent,
        },
        NamedPredicate {
            name: "lemma10",
            description: "a finite semigroup is archimedean iff collapsing its kernel leaves a nilpotent semigroup",
            check: archimedean_iff_kernel_extension,
        },
        NamedPredicate {
            name: "theorem1",
            description: "archimedean permutable = cyclic nilpotent or permutable completely simple (both only when trivial)",
            check: archimedean_permutable_dichotomy,
        },
        NamedPredicate {
            name: "kernel_cs",
            description: "the kernel is completely simple",
            check: kernel_is_completely_simple,
        },
        NamedPredicate {
            name: "green",
            description: "Green's relations satisfy H = R meet L and J = R join L",
            check: green_structure_consistent,
        },
    ]
}

fn ideal_chain_when_permutable(s: &FiniteSemigroup) -> Result<bool> {
    if !congruence::is_permutable(s)?.permutable {
        return Ok(true);
    }
    Ok(ideals::all_ideals(s).is_chain)
}

fn nil_permutable_iff_chain(s: &FiniteSemigroup) -> Result<bool> {
    if !ideals::nilpotency_profile(s).is_nil {
        return Ok(true);
    }
    let permutable = congruence::is_permutable(s)?.permutable;
    Ok(permutable == ideals::all_ideals(s).is_chain)
}

fn has_nontrivial_group_image(s: &FiniteSemigroup) -> Result<bool> {
    for alpha in congruence::all_congruences(s)? {
        if alpha.class_count() > 1 {
            let q = congruence::quotient(s, &alpha);
            if FiniteGroup::from_semigroup(q).is_ok() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn no_group_image_over_proper_ideal(s: &FiniteSemigroup) -> Result<bool> {
    if !congruence::is_permutable(s)?.permutable {
        return Ok(true);
    }
    let collection = ideals::all_ideals(s);
    let proper: Vec<_> = collection.ideals.iter().filter(|i| i.is_proper()).collect();
    if proper.is_empty() {
        return Ok(true);
    }
    if has_nontrivial_group_image(s)? {
        return Ok(false);
    }
    for ideal in proper {
        let sub = s
            .induced(ideal.members())
            .expect("ideals are subsemigroups");
        if has_nontrivial_group_image(&sub)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn ideals_saturated_by_congruences(s: &FiniteSemigroup) -> Result<bool> {
    if !congruence::is_permutable(s)?.permutable {
        return Ok(true);
    }
    let lattice = congruence::all_congruences(s)?;
    for ideal in ideals::all_ideals(s).ideals {
        for alpha in &lattice {
            let reps: std::collections::BTreeSet<usize> =
                ideal.members().iter().map(|&a| alpha.rep(a)).collect();
            let inside_one_class = reps.len() == 1;
            let union_of_classes = ideal.members().iter().all(|&a| {
                alpha
                    .partition()
                    .class_members(a)
                    .iter()
                    .all(|x| ideal.contains(*x))
            });
            if !inside_one_class && !union_of_classes {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn quotients_stay_permutable(s: &FiniteSemigroup) -> Result<bool> {
    if !congruence::is_permutable(s)?.permutable {
        return Ok(true);
    }
    for alpha in congruence::all_congruences(s)? {
        let q = congruence::quotient(s, &alpha);
        if !congruence::is_permutable(&q)?.permutable {
            return Ok(false);
        }
    }
    Ok(true)
}

fn semilattice_permutable_iff_small(s: &FiniteSemigroup) -> Result<bool> {
    if !s.is_semilattice() {
        return Ok(true);
    }
    let permutable = congruence::is_permutable(s)?.permutable;
    Ok(permutable == (s.order() <= 2))
}

fn nil_implies_nilpotent(s: &FiniteSemigroup) -> Result<bool> {
    let profile = ideals::nilpotency_profile(s);
    Ok(!profile.is_nil || profile.is_nilpotent)
}

fn archimedean_iff_kernel_extension(s: &FiniteSemigroup) -> Result<bool> {
    let collapsed = ideals::rees_quotient(s, &ideals::kernel(s))?;
    let arch = ideals::is_archimedean(s);
    Ok(arch == ideals::nilpotency_profile(&collapsed).is_nilpotent)
}

fn archimedean_permutable_dichotomy(s: &FiniteSemigroup) -> Result<bool> {
    let arch_permutable = ideals::is_archimedean(s) && congruence::is_permutable(s)?.permutable;
    let cyclic_nilpotent =
        s.monogenic_generator().is_some() && ideals::nilpotency_profile(s).is_nilpotent;
    let completely_simple = ideals::simplicity_flags(s).is_completely_simple;
    // forward: the dichotomy, exclusive except for the trivial semigroup
    if arch_permutable {
        if !cyclic_nilpotent && !completely_simple {
            return Ok(false);
        }
        if cyclic_nilpotent && completely_simple && s.order() > 1 {
            return Ok(false);
        }
    }
    // converse: each arm is archimedean permutable
    if cyclic_nilpotent && !arch_permutable {
        return Ok(false);
    }
    if completely_simple && congruence::is_permutable(s)?.permutable && !arch_permutable {
        return Ok(false);
    }
    Ok(true)
}

fn kernel_is_completely_simple(s: &FiniteSemigroup) -> Result<bool> {
    let k = ideals::kernel(s);
    let sub = s.induced(k.members()).expect("ideals are subsemigroups");
    Ok(ideals::simplicity_flags(&sub).is_completely_simple)
}

fn green_structure_consistent(s: &FiniteSemigroup) -> Result<bool> {
    let g = ideals::green(s);
    let meet_ok = g.h == g.r.meet(&g.l);
    let join_ok = g.j == g.r.join(&g.l);
    let refine_ok =
        g.h.refines(&g.r) && g.h.refines(&g.l) && g.r.refines(&g.j) && g.l.refines(&g.j);
    Ok(meet_ok && join_ok && refine_ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::cyclic_nilpotent;

    #[test]
    fn predicates_hold_on_spot_examples() {
        let chain3 =
            FiniteSemigroup::new(3, &[vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 2]]).unwrap();
        let null3 = FiniteSemigroup::new(3, &[vec![2; 3], vec![2; 3], vec![2; 3]]).unwrap();
        for p in standard_predicates() {
            for s in [&chain3, &null3, &cyclic_nilpotent(4)] {
                assert!(
                    (p.check)(s).unwrap(),
                    "{} failed on a known-good table",
                    p.name
                );
            }
        }
    }

    #[test]
    fn names_are_unique() {
        let mut names: Vec<_> = standard_predicates().iter().map(|p| p.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), standard_predicates().len());
    }
}
