//! Combinatorics of face lattices with two flag orbits.
//!
//! The crate models abstract polytopes as ranked face lattices, enumerates
//! their flags and adjacency involutions, computes the full combinatorial
//! automorphism group by propagation, and classifies two-orbit inputs by
//! extracting distinguished generators and matching their Coxeter matrix
//! against the two finite diagrams that occur. The tiling side covers the
//! planar valence enumeration, finite torus quotients of the four two-orbit
//! tilings, and the exact patch-growth arithmetic that rules out the
//! remaining spatial candidates.
//!
//! Everything is exact: incidence combinatorics, permutation orders, big
//! integers, and rationals. No coordinates or floating point anywhere.

pub mod catalog;
pub mod classify;
pub mod error;
pub mod flags;
pub mod iso;
pub mod json;
pub mod lattice;
pub mod orbits;
pub mod tiling;

pub use catalog::{make, rectify, CatalogKey};
pub use classify::{
    angle_sum_check, classify, coxeter_matrix, distinguished_generators, AngleCountInput,
    Classification, CoxeterMatrix, DiagramType, DistinguishedGenerators, RefutationReport,
    Verdict,
};
pub use error::{Error, Result};
pub use flags::{chains_of_cotype, Chain, FlagGraph, FlagId};
pub use iso::{are_isomorphic, Isomorphism};
pub use json::{from_json, to_json};
pub use lattice::{
    FaceId, FaceLattice, FaceRecord, LatticeBuilder, Rank, ValidationReport, Violation,
};
pub use orbits::{
    automorphism_group, chain_orbit_count, check_two_orbit_lemmas, modified_schlafli,
    orbit_report, Automorphism, AutomorphismGroup, LemmaReport, ModifiedSchlafli, OrbitReport,
};
