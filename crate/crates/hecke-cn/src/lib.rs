//! Exact-arithmetic combinatorics for the representation theory of affine
//! Hecke algebras of type C_n with unequal parameters `(-1, q^m, q)`.
//!
//! Everything is computed over exact rationals; there is no floating point
//! anywhere in the crate. The main entry points are:
//!
//! - [`rational::Rat`]: exact `p/q` scalars, parsed from `"p/q"` strings
//! - [`partition::Partition`] / [`partition::Bipartition`]: integer partitions
//!   and the bipartition labels of hyperoctahedral group representations
//! - [`tableau::ETableau`]: a partition filled by the e-function
//!   `e(row, col) = m + col - row`, with hook decomposition, folding to the
//!   distinguished (open-orbit) marked partition, extremities, and the
//!   central-character multiset
//! - [`marked::MarkedPartition`]: segments with markings, the orderings
//!   `dominates` / `precedes` / `nested`, marking saturation, orbit equality,
//!   stabilizer dimensions and orbit enumeration
//! - [`ds`]: the discrete-series algorithm `sigma -> ds(sigma)` (peel,
//!   assemble, mark), the one-hook closed form, ladders, the sgn-containment
//!   criteria, minimality predicates, and deformation profiles
//! - [`poset`]: closure-order generation via spadesuit moves and
//!   mark-removal edges, with DOT and JSON export
//! - [`spin`]: defect calculus on partitions of `ell`, the map
//!   `sigma -> O_sigma`, and the two Springer-type algorithms with
//!   cross-validation
//! - [`tempered`]: GL-tempered segments, tempered parameters at generic `m`,
//!   enumeration, and the Casselman classification predicate
//! - [`checks`]: the named property suites used by the CLI `check` command
//!   and by the acceptance tests

pub mod checks;
pub mod ds;
pub mod marked;
pub mod par;
pub mod partition;
pub mod poset;
pub mod rational;
pub mod segment;
pub mod spin;
pub mod tableau;
pub mod tempered;

pub use ds::{
    assemble, deformation_profile, ds, ds_contains_sgn, extremity_repetition_test, hook_components,
    is_negative_ladder, is_positive_ladder, ladder_threshold_check, mark, minimality_predicates,
    negative_ladder, one_hook_oracle, peel, positive_ladder, sgn_condition_extremities,
    sgn_condition_support, w_structure_if_ladder, ComponentSign, DeformationProfile, LadderForce,
    PeelResult, PeelSide, PeelStep, PredicateReport, WStructure,
};
pub use marked::{enumerate_mp, enumerate_mp_capped, MarkedPartition, MarkedSegment};
pub use partition::{Bipartition, BoxPos, Partition};
pub use poset::{build_poset, closure_leq, spadesuit_moves, MoveKind, OrbitPoset};
pub use rational::{is_generic, Rat};
pub use segment::{Coset, Segment};
pub use spin::{
    cross_validate, cuspidal_part, enumerate_distinguished, expected_params, ls_rho, orbit_defect,
    part_defect, sigma_to_orbit, slooten_bipartition, CrossValidationReport, SpinOrbit,
};
pub use tableau::{extremities, CentralCharacter, ETableau, Hook};
pub use tempered::{
    casselman_classify, enumerate_tempered, gl_tempered_segments, tempered_parameter,
    TemperedParameter, Temperedness,
};

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("non-generic parameter m = {0} (m must not be a half-integer)")]
    NonGeneric(Rat),
    #[error("box ({row},{col}) lies outside the shape")]
    BoxOutsideShape { row: u32, col: u32 },
    #[error("segments belong to different weight cosets")]
    CosetMismatch,
    #[error("marked partitions are not adapted to the same central character")]
    CharacterMismatch,
    #[error("operation requires an unmarked partition")]
    MarkedInput,
    #[error("size cap exceeded: {size} > {cap}")]
    CapExceeded { size: u32, cap: u32 },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("property violation: {0}")]
    Violation(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
