//! Exhaustive enumeration of the alternating planar valence equations.
//!
//! Around every vertex of a normal plane tiling with constant valence `j`,
//! the incident tile sizes `k_1..k_j` satisfy `sum (k_i - 2)/k_i = 2`; dually
//! the valences around a tile of constant size satisfy the same equation. In
//! the two-orbit setting the cycle alternates between two values, `j` is
//! even, and every term is at least 1/3, so the equation is empty as soon as
//! `j/3 > 2`. The enumeration below carries that bound internally, which
//! makes the emptiness for high valences an exhaustion rather than a cutoff.

use num_rational::Ratio;

/// Which transitivity produced a solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlanarKind {
    /// Constant vertex valence; the cycle lists tile sizes around a vertex.
    VertexTransitive,
    /// Constant tile size; the cycle lists vertex valences around a tile.
    TileTransitive,
}

/// One solution of the alternating valence equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarSolution {
    pub kind: PlanarKind,
    /// Vertex valence (vertex case) or tile size (tile case).
    pub around: u32,
    /// The full alternating cycle, e.g. `[3, 6, 3, 6]`.
    pub cycle: Vec<u32>,
    /// True when the cycle alternates two distinct values.
    pub two_orbit: bool,
}

impl PlanarSolution {
    /// Renders the cycle in the conventional compact notation, e.g.
    /// `(3.6.3.6)` or `[3^6]`.
    pub fn cycle_label(&self) -> String {
        let (open, close) = match self.kind {
            PlanarKind::VertexTransitive => ('(', ')'),
            PlanarKind::TileTransitive => ('[', ']'),
        };
        let body = if self.two_orbit {
            self.cycle
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(".")
        } else {
            format!("{}^{}", self.cycle[0], self.cycle.len())
        };
        format!("{open}{body}{close}")
    }
}

/// All alternating solutions `(a, b)^(j/2)` of `sum (k_i - 2)/k_i = 2`.
///
/// The outer loop stops exactly when even the all-triangle cycle overshoots:
/// `j * (1/3) > 2`. Within a valence, `a` ranges while the best case
/// `b = a` does not overshoot. Everything is exact rational arithmetic.
fn alternating_solutions(kind: PlanarKind) -> Vec<PlanarSolution> {
    let term = |k: u32| Ratio::new(k as i64 - 2, k as i64);
    let two = Ratio::from_integer(2);
    let mut out = Vec::new();
    let mut j = 4u32;
    while term(3) * Ratio::from_integer(j as i64) <= two {
        let per_pair = two * Ratio::new(2, j as i64);
        let mut a = 3u32;
        while term(a) * Ratio::from_integer(2) <= per_pair {
            let rest = per_pair - term(a);
            // Solve (b - 2)/b = rest, i.e. b = 2 / (1 - rest).
            let one = Ratio::from_integer(1);
            if rest > Ratio::from_integer(0) && rest < one {
                let b = Ratio::from_integer(2) / (one - rest);
                if b.is_integer() {
                    let b = *b.numer() as u32;
                    if b >= a {
                        let mut cycle = Vec::with_capacity(j as usize);
                        for _ in 0..j / 2 {
                            cycle.push(a);
                            cycle.push(b);
                        }
                        out.push(PlanarSolution {
                            kind,
                            around: j,
                            cycle,
                            two_orbit: a != b,
                        });
                    }
                }
            }
            a += 1;
        }
        j += 2;
    }
    out
}

/// Solutions with a common vertex valence: the tile sizes around a vertex.
pub fn solve_planar_vertex_transitive() -> Vec<PlanarSolution> {
    alternating_solutions(PlanarKind::VertexTransitive)
}

/// Solutions with a common tile size: the vertex valences around a tile.
pub fn solve_planar_tile_transitive() -> Vec<PlanarSolution> {
    alternating_solutions(PlanarKind::TileTransitive)
}
