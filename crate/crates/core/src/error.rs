use thiserror::Error;

/// Errors produced by lattice construction and the operations on top of it.
///
/// Axiom violations found by [`crate::FaceLattice::validate`] are *not*
/// errors; they are collected in a [`crate::ValidationReport`]. The variants
/// here are conditions under which an operation cannot produce a result at
/// all.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("lattice has no faces")]
    EmptyLattice,

    #[error("duplicate face id {0:?}")]
    DuplicateFaceId(String),

    #[error("cover references unknown face id {0:?}")]
    UnknownFaceId(String),

    #[error("face index {0} out of bounds")]
    FaceIndexOutOfBounds(u32),

    #[error("cover relation contains a cycle; order queries are undefined")]
    CyclicCovers,

    #[error("faces {lower:?} and {upper:?} are not incident")]
    NotIncident { lower: String, upper: String },

    #[error("adjacency rank {rank} outside 0..{limit}")]
    RankOutOfRange { rank: i32, limit: i32 },

    #[error("rank {0} unsupported here (expected {1})")]
    UnsupportedRank(i32, i32),

    #[error(
        "interval {lower:?} < {upper:?} has {count} middle faces, expected 2; \
         flag adjacency is undefined"
    )]
    BrokenDiamond {
        lower: String,
        upper: String,
        count: usize,
    },

    #[error("flag graph is disconnected ({components} components)")]
    DisconnectedFlags { components: usize },

    #[error("lattice fails validation: {0}")]
    InvalidLattice(String),

    #[error("operation requires a two-orbit lattice, found {orbits} flag orbits")]
    NotTwoOrbit { orbits: usize },

    #[error(
        "input is not facet-intransitive (class 2_{{{class}}}); \
         apply the operation to the dual instead"
    )]
    NotFacetIntransitive { class: String },

    #[error(
        "base flag is inappropriate: its rank-{position} section is a {found}-gon, \
         expected the smaller size {expected}; use the (d-1)-adjacent flag instead"
    )]
    InappropriateBaseFlag {
        position: i32,
        found: usize,
        expected: usize,
    },

    #[error("two-orbit class 2_{{{class}}} omits interior rank {rank}: impossible for polytopes")]
    InteriorRankMissing { class: String, rank: i32 },

    #[error("Coxeter matrix {summary} matches no finite two-orbit diagram")]
    DiagramMismatch { summary: String },

    #[error("no {size}-gon faces in the vertex figure")]
    ConeSizeAbsent { size: usize },

    #[error("parameter out of range: {0}")]
    Parameter(String),

    #[error("torus period {period} below the minimum {min} for family {family}")]
    PeriodTooSmall {
        family: String,
        period: u32,
        min: u32,
    },

    #[error("no valid torus quotient for family {family} with period <= {cap}")]
    NoValidQuotient { family: String, cap: u32 },

    #[error("internal invariant failed: {0}")]
    Internal(String),

    #[error("malformed lattice JSON: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
