#![forbid(unsafe_code)]

//! Finite semigroups over dense Cayley tables.
//!
//! The crate decides congruence permutability, computes semilattice
//! decompositions into archimedean components and classifies the resulting
//! shapes, handles Rees matrix structure for completely simple semigroups,
//! provides group/G-set machinery including the Galois correspondence
//! between coset congruences and subgroup intervals, and exhaustively
//! enumerates associative tables of small order for census-style
//! verification.
//!
//! ```
//! use permsg::{congruence, FiniteSemigroup};
//!
//! // the three-element chain semilattice, product = min
//! let chain = FiniteSemigroup::new(
//!     3,
//!     &[vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 2]],
//! )?;
//! let report = congruence::is_permutable(&chain)?;
//! assert!(!report.permutable);
//! let witness = report.witness.unwrap();
//! assert_eq!(witness.pair, (2, 0)); // in alpha.beta but not beta.alpha
//! # Ok::<(), permsg::Error>(())
//! ```

pub mod congruence;
pub mod construction;
pub mod decomposition;
pub mod enumeration;
pub mod error;
pub mod group;
pub mod gset;
pub mod ideals;
pub mod partition;
pub mod semigroup;
pub mod sgp;
pub mod verify;

pub use congruence::{
    all_congruences, all_congruences_bounded, commutes, compose, congruence_closure, is_permutable,
    quotient, CommuteCheck, Congruence, PermutabilityReport, PermutabilityWitness, Relation,
    DEFAULT_LATTICE_BOUND,
};
pub use construction::{
    check_group_nilpotent_semilattice, check_group_null_semilattice, construct1, cyclic_nilpotent,
    group_over_cyclic_nilpotent, group_over_normal_cosets, group_over_one_sided_cosets,
    group_with_zero, interval_commutation_condition, rees_decompose, rees_matrix,
    CosetExtensionSpec, GroupNilpotentReport, GroupNullReport, IntervalCondition,
    ReesDecomposition, ReesMatrixSpec, Side,
};
pub use decomposition::{
    classify, putcha_decomposition, smallest_semilattice_congruence, ClassificationCase,
    ClassificationReport, LowerCase, SemilatticeDecomposition, UpperKind,
};
pub use enumeration::{
    canonical_form, canonical_representatives, census_verify, enumerate_associative,
    enumerate_associative_parallel, find_isomorphism, for_each_associative, CanonicalMode,
    CensusConfig, CensusReport, NamedPredicate, MAX_EXHAUSTIVE_ORDER,
};
pub use error::{Error, Result};
pub use group::{FiniteGroup, Subgroup};
pub use gset::{
    all_gset_congruences, all_gset_congruences_bounded, commutation_check, compose_gset,
    congruence_of_subgroup, gset_congruence_closure, subgroup_of_congruence, CommutationCheck,
    GSet, GSetCongruence,
};
pub use ideals::{
    all_ideals, green, is_archimedean, kernel, nilpotency_profile, principal_ideal, rees_quotient,
    simplicity_flags, GreenStructure, IdealSet, NilpotencyProfile,
};
pub use partition::Partition;
pub use semigroup::{Adjoined, ElementId, FiniteSemigroup, SpecialElements};
