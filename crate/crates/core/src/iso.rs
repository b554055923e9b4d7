//! Lattice isomorphism by flag propagation.
//!
//! Two valid lattices are isomorphic exactly when their flag graphs admit a
//! color-preserving isomorphism, so the search fixes a base flag of the first
//! lattice and propagates it against candidate flags of the second. The base
//! flag is anchored at a face whose `(rank, degree)` signature class carries
//! the fewest flags, which prunes the candidate set on non-uniform inputs.

use std::collections::HashMap;

use crate::error::Result;
use crate::flags::{FlagGraph, FlagId};
use crate::lattice::{FaceId, FaceLattice, Rank};

/// A rank- and order-preserving bijection between two lattices, recorded as
/// id pairs sorted by the first lattice's face order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    map: Vec<FaceId>,
    pairs: Vec<(String, String)>,
}

impl Isomorphism {
    /// Image of a face of the first lattice.
    pub fn image(&self, face: FaceId) -> FaceId {
        self.map[face as usize]
    }

    pub fn pairs(&self) -> &[(String, String)] {
        &self.pairs
    }
}

type Signature = (Rank, usize, usize);

fn signature(lattice: &FaceLattice, face: FaceId) -> Signature {
    (
        lattice.face(face).rank,
        lattice.below(face).len(),
        lattice.above(face).len(),
    )
}

/// Searches for an isomorphism between two valid lattices.
///
/// Returns the face bijection if one exists, `None` otherwise.
pub fn are_isomorphic(left: &FaceLattice, right: &FaceLattice) -> Result<Option<Isomorphism>> {
    if left.rank() != right.rank()
        || left.face_count() != right.face_count()
        || left.covers().len() != right.covers().len()
    {
        return Ok(None);
    }
    for r in -1..=left.rank() {
        if left.rank_size(r) != right.rank_size(r) {
            return Ok(None);
        }
    }

    let lg = FlagGraph::build(left)?;
    let rg = FlagGraph::build(right)?;
    if lg.flag_count() != rg.flag_count() {
        return Ok(None);
    }

    // Flags through each signature class, on both sides.
    let left_classes = class_flag_counts(left, &lg);
    let right_classes = class_flag_counts(right, &rg);
    if left_classes != right_classes {
        return Ok(None);
    }

    // Anchor at the class with the fewest flags through it.
    let (&anchor_sig, _) = left_classes
        .iter()
        .min_by_key(|(sig, &count)| (count, *sig))
        .expect("nonempty lattice has at least one signature class");
    let anchor_rank = anchor_sig.0;
    let slot = (anchor_rank + 1) as usize;

    let base = lg
        .flags()
        .find(|&f| signature(left, lg.flag(f)[slot]) == anchor_sig)
        .expect("anchor class is nonempty");
    let candidates: Vec<FlagId> = rg
        .flags()
        .filter(|&f| signature(right, rg.flag(f)[slot]) == anchor_sig)
        .collect();

    // Spanning tree of the left flag graph, rooted at the base flag.
    let n = lg.flag_count();
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![0 as FlagId; n];
    let mut color = vec![0u8; n];
    let mut seen = vec![false; n];
    seen[base as usize] = true;
    order.push(base);
    let mut head = 0;
    while head < order.len() {
        let f = order[head];
        head += 1;
        for c in 0..lg.color_count() {
            let g = lg.adjacent_unchecked(f, c);
            if !seen[g as usize] {
                seen[g as usize] = true;
                parent[g as usize] = f;
                color[g as usize] = c as u8;
                order.push(g);
            }
        }
    }

    let mut image = vec![0 as FlagId; n];
    'candidates: for target in candidates {
        image[base as usize] = target;
        for &f in &order[1..] {
            image[f as usize] = rg.adjacent_unchecked(
                image[parent[f as usize] as usize],
                color[f as usize] as usize,
            );
        }
        for f in 0..n as FlagId {
            for c in 0..lg.color_count() {
                if image[lg.adjacent_unchecked(f, c) as usize]
                    != rg.adjacent_unchecked(image[f as usize], c)
                {
                    continue 'candidates;
                }
            }
        }
        return Ok(Some(face_bijection(left, right, &lg, &rg, &image)));
    }
    Ok(None)
}

fn class_flag_counts(lattice: &FaceLattice, graph: &FlagGraph) -> HashMap<Signature, usize> {
    let mut counts = HashMap::new();
    for f in graph.flags() {
        for &face in graph.flag(f) {
            *counts.entry(signature(lattice, face)).or_insert(0) += 1;
        }
    }
    counts
}

fn face_bijection(
    left: &FaceLattice,
    right: &FaceLattice,
    lg: &FlagGraph,
    rg: &FlagGraph,
    image: &[FlagId],
) -> Isomorphism {
    let map: Vec<FaceId> = (0..left.face_count() as FaceId)
        .map(|face| {
            let flag = rg.flag(image[lg.rep_flag(face) as usize]);
            flag[lg.face_slot(face)]
        })
        .collect();
    debug_assert!(left
        .covers()
        .iter()
        .all(|&(lo, hi)| right.is_le(map[lo as usize], map[hi as usize]).unwrap_or(false)));
    let pairs = map
        .iter()
        .enumerate()
        .map(|(f, &g)| {
            (
                left.face(f as FaceId).id.clone(),
                right.face(g).id.clone(),
            )
        })
        .collect();
    Isomorphism { map, pairs }
}
