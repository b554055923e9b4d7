//! Flags (maximal chains) and their i-adjacency involutions.
//!
//! Every flag of a rank-`d` lattice is a chain with one face of each rank
//! `-1..=d`, stored rank-indexed. By the diamond condition each flag has a
//! unique `i`-adjacent flag for `0 <= i <= d-1`; [`FlagGraph`] precomputes all
//! of these involutions once, since the orbit machinery performs millions of
//! adjacency lookups.

use crate::error::{Error, Result};
use crate::lattice::{FaceId, FaceLattice, Rank};

/// Index of a flag within a [`FlagGraph`]. Flags are numbered in
/// lexicographic order of their face arrays.
pub type FlagId = u32;

/// The flag graph of a validated lattice: all flags plus, for each rank
/// `0..d`, the total fixed-point-free involution sending a flag to its
/// i-adjacent flag. Immutable once built.
pub struct FlagGraph {
    rank: Rank,
    flags: Vec<Vec<FaceId>>,
    adjacency: Vec<Vec<FlagId>>,
    face_rep: Vec<FlagId>,
    face_slot: Vec<u8>,
}

impl std::fmt::Debug for FlagGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FlagGraph")
            .field("rank", &self.rank)
            .field("flags", &self.flags.len())
            .finish()
    }
}

/// A chain: pairwise incident faces, at most one per rank.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chain {
    /// Faces in ascending rank order.
    pub faces: Vec<FaceId>,
}

impl Chain {
    /// The type of the chain: the set of ranks present.
    pub fn ranks(&self, lattice: &FaceLattice) -> Vec<Rank> {
        self.faces.iter().map(|&f| lattice.face(f).rank).collect()
    }
}

impl FlagGraph {
    /// Enumerates all flags of `lattice` and precomputes the adjacency
    /// involutions. The lattice is expected to be valid; gradedness or
    /// diamond failures discovered along the way are reported as errors
    /// naming the offending faces.
    pub fn build(lattice: &FaceLattice) -> Result<FlagGraph> {
        let d = lattice.rank();
        let least = lattice.least()?;
        let greatest = lattice.greatest()?;
        let expected_len = (d + 2) as usize;

        let mut flags = Vec::new();
        let mut stack = vec![least];
        enumerate_chains(lattice, &mut stack, greatest, expected_len, &mut flags)?;
        flags.sort_unstable();

        let n = flags.len();
        let colors = d.max(0) as usize;
        let mut adjacency = vec![vec![0 as FlagId; n]; colors];
        let mut probe: Vec<FaceId> = Vec::new();
        for (i, color_map) in adjacency.iter_mut().enumerate() {
            let slot = i + 1;
            for (fi, flag) in flags.iter().enumerate() {
                let middles = lattice.middles(flag[slot - 1], flag[slot + 1]);
                if middles.len() != 2 {
                    return Err(Error::BrokenDiamond {
                        lower: lattice.face(flag[slot - 1]).id.clone(),
                        upper: lattice.face(flag[slot + 1]).id.clone(),
                        count: middles.len(),
                    });
                }
                let other = if middles[0] == flag[slot] {
                    middles[1]
                } else {
                    middles[0]
                };
                probe.clear();
                probe.extend_from_slice(flag);
                probe[slot] = other;
                let target = flags
                    .binary_search_by(|f| f.as_slice().cmp(probe.as_slice()))
                    .map_err(|_| {
                        Error::Internal(format!(
                            "adjacent flag of flag {fi} at rank {i} not enumerated"
                        ))
                    })?;
                color_map[fi] = target as FlagId;
            }
        }

        let mut face_rep = vec![0 as FlagId; lattice.face_count()];
        let mut face_slot = vec![0u8; lattice.face_count()];
        let mut seen = vec![false; lattice.face_count()];
        for (fi, flag) in flags.iter().enumerate() {
            for (slot, &face) in flag.iter().enumerate() {
                if !seen[face as usize] {
                    seen[face as usize] = true;
                    face_rep[face as usize] = fi as FlagId;
                    face_slot[face as usize] = slot as u8;
                }
            }
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidLattice(format!(
                "face {:?} lies on no flag",
                lattice.face(missing as FaceId).id
            )));
        }

        let graph = FlagGraph {
            rank: d,
            flags,
            adjacency,
            face_rep,
            face_slot,
        };
        let components = graph.component_count();
        if components != 1 {
            return Err(Error::DisconnectedFlags { components });
        }
        Ok(graph)
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn flag_count(&self) -> usize {
        self.flags.len()
    }

    /// Number of faces of the underlying lattice.
    pub fn face_count(&self) -> usize {
        self.face_rep.len()
    }

    /// Number of adjacency colors, i.e. `max(d, 0)`.
    pub fn color_count(&self) -> usize {
        self.adjacency.len()
    }

    /// The faces of a flag, indexed by rank slot (`rank + 1`).
    pub fn flag(&self, f: FlagId) -> &[FaceId] {
        &self.flags[f as usize]
    }

    pub fn flags(&self) -> impl Iterator<Item = FlagId> {
        0..self.flags.len() as FlagId
    }

    /// The unique flag differing from `f` exactly in its rank-`i` face.
    pub fn adjacent(&self, f: FlagId, i: Rank) -> Result<FlagId> {
        if i < 0 || i as usize >= self.adjacency.len() {
            return Err(Error::RankOutOfRange {
                rank: i,
                limit: self.adjacency.len() as Rank,
            });
        }
        Ok(self.adjacency[i as usize][f as usize])
    }

    /// Unchecked adjacency lookup for hot loops.
    #[inline]
    pub fn adjacent_unchecked(&self, f: FlagId, color: usize) -> FlagId {
        self.adjacency[color][f as usize]
    }

    /// A flag containing the given face.
    pub fn rep_flag(&self, face: FaceId) -> FlagId {
        self.face_rep[face as usize]
    }

    /// The slot (`rank + 1`) at which `face` sits inside any flag.
    pub fn face_slot(&self, face: FaceId) -> usize {
        self.face_slot[face as usize] as usize
    }

    /// Size of the polygonal section swept by the two adjacency colors
    /// `i` and `j = i + 1` through the given flag: half the orbit of the
    /// flag under the dihedral pair of involutions.
    pub fn section_size(&self, flag: FlagId, lower_color: usize, upper_color: usize) -> usize {
        let mut len = 0usize;
        let mut current = flag;
        loop {
            current = self.adjacent_unchecked(current, lower_color);
            current = self.adjacent_unchecked(current, upper_color);
            len += 1;
            if current == flag {
                return len;
            }
        }
    }

    fn component_count(&self) -> usize {
        let n = self.flags.len();
        let mut seen = vec![false; n];
        let mut components = 0;
        let mut queue = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            queue.push(start as FlagId);
            while let Some(f) = queue.pop() {
                for color in 0..self.adjacency.len() {
                    let g = self.adjacent_unchecked(f, color);
                    if !seen[g as usize] {
                        seen[g as usize] = true;
                        queue.push(g);
                    }
                }
            }
        }
        components
    }
}

fn enumerate_chains(
    lattice: &FaceLattice,
    stack: &mut Vec<FaceId>,
    greatest: FaceId,
    expected_len: usize,
    out: &mut Vec<Vec<FaceId>>,
) -> Result<()> {
    let top = *stack.last().unwrap();
    if top == greatest {
        if stack.len() != expected_len {
            return Err(Error::InvalidLattice(format!(
                "maximal chain through {:?} has {} faces, expected {}",
                lattice.face(stack[0]).id,
                stack.len(),
                expected_len
            )));
        }
        out.push(stack.clone());
        return Ok(());
    }
    if stack.len() >= expected_len {
        return Err(Error::InvalidLattice(format!(
            "chain through {:?} exceeds the lattice rank",
            lattice.face(top).id
        )));
    }
    for &next in lattice.above(top) {
        stack.push(next);
        enumerate_chains(lattice, stack, greatest, expected_len, out)?;
        stack.pop();
    }
    Ok(())
}

/// All chains containing exactly one face of each rank *not* in `omitted`.
///
/// `omitted` may include the improper ranks -1 and `d`. With `omitted` empty
/// this enumerates the flags themselves.
pub fn chains_of_cotype(lattice: &FaceLattice, omitted: &[Rank]) -> Result<Vec<Chain>> {
    let d = lattice.rank();
    let ranks: Vec<Rank> = (-1..=d).filter(|r| !omitted.contains(r)).collect();
    let mut out = Vec::new();
    if ranks.is_empty() {
        out.push(Chain { faces: Vec::new() });
        return Ok(out);
    }
    let mut stack = Vec::with_capacity(ranks.len());
    extend_cotype_chain(lattice, &ranks, &mut stack, &mut out)?;
    Ok(out)
}

fn extend_cotype_chain(
    lattice: &FaceLattice,
    ranks: &[Rank],
    stack: &mut Vec<FaceId>,
    out: &mut Vec<Chain>,
) -> Result<()> {
    let depth = stack.len();
    if depth == ranks.len() {
        out.push(Chain {
            faces: stack.clone(),
        });
        return Ok(());
    }
    for face in lattice.rank_faces(ranks[depth]) {
        if match stack.last() {
            Some(&prev) => lattice.is_le(prev, face)?,
            None => true,
        } {
            stack.push(face);
            extend_cotype_chain(lattice, ranks, stack, out)?;
            stack.pop();
        }
    }
    Ok(())
}
