//! Tiling-side machinery: the planar valence enumeration, the patch-growth
//! recurrence with its exact closed form, and finite torus quotients of the
//! four two-orbit tilings.

pub mod growth;
pub mod planar;
pub mod quadint;
pub mod quotient;

pub use growth::{
    growth_closed_form, growth_step, normality_crossing, patch_total_by_recurrence, GrowthState,
};
pub use planar::{
    solve_planar_tile_transitive, solve_planar_vertex_transitive, PlanarKind, PlanarSolution,
};
pub use quadint::QuadIntZ14;
pub use quotient::{
    analyze_quotient, build_torus_quotient, hexagonal_torus, smallest_valid_quotient,
    TorusFamily, TorusQuotient, PERIOD_CAP,
};
