//! The shared JSON face-lattice format.
//!
//! ```json
//! {
//!   "covers": [["least", "v0"], ["v0", "e0"]],
//!   "faces": [{"id": "least", "rank": -1}, {"id": "v0", "rank": 0}],
//!   "rank": 1
//! }
//! ```
//!
//! Improper faces may be omitted on input (they are synthesized on load) but
//! are always present on output. Output is canonical: keys in sorted order,
//! faces sorted by `(rank, id)`, covers sorted lexicographically, so equal
//! lattices serialize byte-identically.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{FaceLattice, FaceRecord, Rank};

#[derive(Debug, Serialize, Deserialize)]
struct LatticeDoc {
    covers: Vec<(String, String)>,
    faces: Vec<FaceDoc>,
    rank: Rank,
}

#[derive(Debug, Serialize, Deserialize)]
struct FaceDoc {
    id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    rank: Rank,
}

/// Parses a lattice from its JSON form, synthesizing missing improper faces.
pub fn from_json(text: &str) -> Result<FaceLattice> {
    let doc: LatticeDoc = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    let faces = doc
        .faces
        .into_iter()
        .map(|f| FaceRecord {
            id: f.id,
            rank: f.rank,
            label: f.label,
        })
        .collect();
    FaceLattice::from_named(doc.rank, faces, doc.covers)
}

/// Serializes a lattice canonically.
pub fn to_json(lattice: &FaceLattice) -> String {
    let faces = lattice
        .faces()
        .iter()
        .map(|f| FaceDoc {
            id: f.id.clone(),
            label: f.label.clone(),
            rank: f.rank,
        })
        .collect();
    let mut covers: Vec<(String, String)> = lattice
        .covers()
        .iter()
        .map(|&(lo, hi)| {
            (
                lattice.face(lo).id.clone(),
                lattice.face(hi).id.clone(),
            )
        })
        .collect();
    covers.sort_unstable();
    let doc = LatticeDoc {
        covers,
        faces,
        rank: lattice.rank(),
    };
    serde_json::to_string_pretty(&doc).expect("lattice serialization cannot fail")
}
