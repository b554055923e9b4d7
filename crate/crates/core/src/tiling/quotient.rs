//! Finite torus quotients of the four two-orbit tilings, built from
//! fundamental domains translated over a k x k (x k) torus, for orbit
//! analysis at desk scale.
//!
//! Small periods can identify faces that should be distinct, so every built
//! quotient is passed through the axiom checker; [`smallest_valid_quotient`]
//! retries upward to a small cap and records which period was used.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::flags::FlagGraph;
use crate::lattice::{FaceLattice, LatticeBuilder, Rank};
use crate::orbits::{automorphism_group, orbit_report, OrbitReport};

/// The four quotient families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TorusFamily {
    /// Alternating triangles and hexagons, four around each vertex.
    Trihexagonal,
    /// Rhombi, three and six around alternate vertices: the dual of the
    /// trihexagonal family.
    Rhombille,
    /// Alternating tetrahedra and octahedra.
    TetOct,
    /// Rhombic dodecahedra: the dual of the tetrahedral-octahedral family.
    RhombicDodecahedral,
}

impl TorusFamily {
    pub fn all() -> [TorusFamily; 4] {
        [
            TorusFamily::Trihexagonal,
            TorusFamily::Rhombille,
            TorusFamily::TetOct,
            TorusFamily::RhombicDodecahedral,
        ]
    }

    /// Rank of the quotient lattice: 3 for the planar families, 4 for the
    /// spatial ones.
    pub fn rank(self) -> Rank {
        match self {
            TorusFamily::Trihexagonal | TorusFamily::Rhombille => 3,
            TorusFamily::TetOct | TorusFamily::RhombicDodecahedral => 4,
        }
    }

    /// Smallest period attempted: below this the identifications are
    /// degenerate by construction.
    pub fn min_period(self) -> u32 {
        match self.rank() {
            3 => 3,
            _ => 2,
        }
    }

    /// Expected two-orbit class of the infinite tiling, for reporting.
    pub fn expected_class(self) -> &'static [Rank] {
        match self {
            TorusFamily::Trihexagonal => &[0, 1],
            TorusFamily::Rhombille => &[1, 2],
            TorusFamily::TetOct => &[0, 1, 2],
            TorusFamily::RhombicDodecahedral => &[1, 2, 3],
        }
    }

    /// Expected modified Schläfli entries of the infinite tiling.
    pub fn expected_symbol(self) -> Vec<Vec<usize>> {
        match self {
            TorusFamily::Trihexagonal => vec![vec![3, 6], vec![4]],
            TorusFamily::Rhombille => vec![vec![4], vec![3, 6]],
            TorusFamily::TetOct => vec![vec![3], vec![3, 4], vec![4]],
            TorusFamily::RhombicDodecahedral => vec![vec![4], vec![3, 4], vec![3]],
        }
    }
}

impl fmt::Display for TorusFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorusFamily::Trihexagonal => write!(f, "trihexagonal"),
            TorusFamily::Rhombille => write!(f, "rhombille"),
            TorusFamily::TetOct => write!(f, "tet-oct"),
            TorusFamily::RhombicDodecahedral => write!(f, "rhombic-dodecahedral"),
        }
    }
}

impl FromStr for TorusFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trihexagonal" => Ok(TorusFamily::Trihexagonal),
            "rhombille" => Ok(TorusFamily::Rhombille),
            "tet-oct" => Ok(TorusFamily::TetOct),
            "rhombic-dodecahedral" => Ok(TorusFamily::RhombicDodecahedral),
            _ => Err(Error::Parameter(format!("unknown tiling family {s:?}"))),
        }
    }
}

/// A validated finite quotient.
#[derive(Debug, Clone)]
pub struct TorusQuotient {
    pub lattice: FaceLattice,
    pub family: TorusFamily,
    pub period: u32,
}

/// Builds the quotient with the exact period `k` and validates it.
pub fn build_torus_quotient(family: TorusFamily, period: u32) -> Result<TorusQuotient> {
    if period < family.min_period() {
        return Err(Error::PeriodTooSmall {
            family: family.to_string(),
            period,
            min: family.min_period(),
        });
    }
    let lattice = match family {
        TorusFamily::Trihexagonal => trihexagonal_torus(period)?,
        TorusFamily::Rhombille => trihexagonal_torus(period)?.dual()?,
        TorusFamily::TetOct => tet_oct_torus(period)?,
        TorusFamily::RhombicDodecahedral => tet_oct_torus(period)?.dual()?,
    };
    let validation = lattice.validate();
    if !validation.is_valid() {
        return Err(Error::InvalidLattice(format!(
            "{family} quotient at period {period}: {}",
            validation.violated_axioms().join(", ")
        )));
    }
    Ok(TorusQuotient {
        lattice,
        family,
        period,
    })
}

/// Retry cap for [`smallest_valid_quotient`].
pub const PERIOD_CAP: u32 = 4;

/// The smallest valid quotient with period at most [`PERIOD_CAP`].
pub fn smallest_valid_quotient(family: TorusFamily) -> Result<TorusQuotient> {
    for period in family.min_period()..=PERIOD_CAP {
        match build_torus_quotient(family, period) {
            Ok(q) => return Ok(q),
            Err(Error::InvalidLattice(_)) => continue,
            Err(other) => return Err(other),
        }
    }
    Err(Error::NoValidQuotient {
        family: family.to_string(),
        cap: PERIOD_CAP,
    })
}

/// Full orbit analysis of a quotient.
pub fn analyze_quotient(quotient: &TorusQuotient) -> Result<OrbitReport> {
    let graph = FlagGraph::build(&quotient.lattice)?;
    let group = automorphism_group(&graph);
    orbit_report(&quotient.lattice, &graph, &group)
}

/// The quotient of the regular tiling by hexagons, three around each vertex,
/// over a k x k torus. Used to cross-check rectification against the
/// independently built trihexagonal quotient.
pub fn hexagonal_torus(period: u32) -> Result<FaceLattice> {
    if period < 3 {
        return Err(Error::PeriodTooSmall {
            family: "hexagonal".into(),
            period,
            min: 3,
        });
    }
    let k = period as i64;
    let cell = |x: i64, y: i64| -> usize { (x.rem_euclid(k) * k + y.rem_euclid(k)) as usize };
    let cells = (k * k) as usize;
    let mut b = LatticeBuilder::new(3);

    // Two vertices per cell (the two triangle classes of the dual triangular
    // lattice), three edges per cell, one hexagon per cell.
    let up: Vec<usize> = (0..cells).map(|_| b.face(0)).collect();
    let down: Vec<usize> = (0..cells).map(|_| b.face(0)).collect();
    let mut edge = vec![[0usize; 3]; cells];
    for x in 0..k {
        for y in 0..k {
            let e0 = b.face(1);
            b.cover(up[cell(x, y)], e0);
            b.cover(down[cell(x, y)], e0);
            let e1 = b.face(1);
            b.cover(up[cell(x, y)], e1);
            b.cover(down[cell(x - 1, y)], e1);
            let e2 = b.face(1);
            b.cover(up[cell(x, y)], e2);
            b.cover(down[cell(x, y - 1)], e2);
            edge[cell(x, y)] = [e0, e1, e2];
        }
    }
    for x in 0..k {
        for y in 0..k {
            let hex = b.face(2);
            for e in [
                edge[cell(x - 1, y)][0],
                edge[cell(x, y - 1)][0],
                edge[cell(x, y)][1],
                edge[cell(x, y - 1)][1],
                edge[cell(x, y)][2],
                edge[cell(x - 1, y)][2],
            ] {
                b.cover(e, hex);
            }
        }
    }
    b.build()
}

/// The trihexagonal quotient, built natively: three vertices per cell (the
/// edge midpoints of the hexagonal tiling), six edges per cell, and three
/// faces per cell (two triangle classes and one hexagon).
fn trihexagonal_torus(period: u32) -> Result<FaceLattice> {
    let k = period as i64;
    let cell = |x: i64, y: i64| -> usize { (x.rem_euclid(k) * k + y.rem_euclid(k)) as usize };
    let cells = (k * k) as usize;
    let mut b = LatticeBuilder::new(3);

    let m0: Vec<usize> = (0..cells).map(|_| b.face(0)).collect();
    let m1: Vec<usize> = (0..cells).map(|_| b.face(0)).collect();
    let m2: Vec<usize> = (0..cells).map(|_| b.face(0)).collect();

    // Edges come in six classes per cell: three around the "up" triangle of
    // the cell and three around the "down" triangle.
    let mut up_edges = vec![[0usize; 3]; cells];
    let mut down_edges = vec![[0usize; 3]; cells];
    for x in 0..k {
        for y in 0..k {
            let c = cell(x, y);
            let ab = b.face(1);
            b.cover(m0[c], ab);
            b.cover(m1[c], ab);
            let bc = b.face(1);
            b.cover(m1[c], bc);
            b.cover(m2[c], bc);
            let ca = b.face(1);
            b.cover(m2[c], ca);
            b.cover(m0[c], ca);
            up_edges[c] = [ab, bc, ca];

            let d1 = b.face(1);
            b.cover(m0[c], d1);
            b.cover(m1[cell(x + 1, y)], d1);
            let d2 = b.face(1);
            b.cover(m1[cell(x + 1, y)], d2);
            b.cover(m2[cell(x, y + 1)], d2);
            let d3 = b.face(1);
            b.cover(m2[cell(x, y + 1)], d3);
            b.cover(m0[c], d3);
            down_edges[c] = [d1, d2, d3];
        }
    }
    for x in 0..k {
        for y in 0..k {
            let c = cell(x, y);
            let up_triangle = b.face(2);
            for e in up_edges[c] {
                b.cover(e, up_triangle);
            }
            let down_triangle = b.face(2);
            for e in down_edges[c] {
                b.cover(e, down_triangle);
            }
            let hexagon = b.face(2);
            for e in [
                up_edges[c][1],
                up_edges[cell(x - 1, y)][2],
                up_edges[cell(x, y - 1)][0],
                down_edges[cell(x - 1, y)][0],
                down_edges[cell(x, y - 1)][2],
                down_edges[cell(x - 1, y - 1)][1],
            ] {
                b.cover(e, hexagon);
            }
        }
    }
    b.build()
}

/// The tetrahedral-octahedral quotient over a 2k-periodic integer grid:
/// vertices are the even-coordinate-sum points, one tetrahedron sits in each
/// unit cube (its four even corners), one octahedron around each odd point
/// (its six even neighbors), and the 2-faces are the triangles they share.
fn tet_oct_torus(period: u32) -> Result<FaceLattice> {
    let span = 2 * period as i64;
    let wrap = |v: [i64; 3]| -> [i64; 3] {
        [
            v[0].rem_euclid(span),
            v[1].rem_euclid(span),
            v[2].rem_euclid(span),
        ]
    };
    let mut b = LatticeBuilder::new(4);

    let mut vertices: BTreeMap<[i64; 3], usize> = BTreeMap::new();
    let mut odd_points: Vec<[i64; 3]> = Vec::new();
    for x in 0..span {
        for y in 0..span {
            for z in 0..span {
                if (x + y + z) % 2 == 0 {
                    vertices.insert([x, y, z], b.face(0));
                } else {
                    odd_points.push([x, y, z]);
                }
            }
        }
    }

    let mut edges: BTreeMap<([i64; 3], [i64; 3]), usize> = BTreeMap::new();
    let mut triangles: BTreeMap<[[i64; 3]; 3], usize> = BTreeMap::new();
    let axes: [[i64; 3]; 3] = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];

    let mut edge_of = |b: &mut LatticeBuilder,
                       vertices: &BTreeMap<[i64; 3], usize>,
                       mut p: [i64; 3],
                       mut q: [i64; 3]|
     -> usize {
        if p > q {
            std::mem::swap(&mut p, &mut q);
        }
        *edges.entry((p, q)).or_insert_with(|| {
            let e = b.face(1);
            b.cover(vertices[&p], e);
            b.cover(vertices[&q], e);
            e
        })
    };

    // Triangles: for each odd point, one triangle per sign triple.
    for &q in &odd_points {
        for signs in 0..8u32 {
            let corner: Vec<[i64; 3]> = (0..3)
                .map(|axis| {
                    let s: i64 = if signs >> axis & 1 == 1 { 1 } else { -1 };
                    wrap([
                        q[0] + s * axes[axis][0],
                        q[1] + s * axes[axis][1],
                        q[2] + s * axes[axis][2],
                    ])
                })
                .collect();
            let mut key = [corner[0], corner[1], corner[2]];
            key.sort_unstable();
            triangles.entry(key).or_insert_with(|| {
                let t = b.face(2);
                for i in 0..3 {
                    let e = edge_of(&mut b, &vertices, key[i], key[(i + 1) % 3]);
                    b.cover(e, t);
                }
                t
            });
        }
    }

    // Octahedra: the six even neighbors of each odd point.
    for &q in &odd_points {
        let tile = b.face(3);
        for signs in 0..8u32 {
            let corner: Vec<[i64; 3]> = (0..3)
                .map(|axis| {
                    let s: i64 = if signs >> axis & 1 == 1 { 1 } else { -1 };
                    wrap([
                        q[0] + s * axes[axis][0],
                        q[1] + s * axes[axis][1],
                        q[2] + s * axes[axis][2],
                    ])
                })
                .collect();
            let mut key = [corner[0], corner[1], corner[2]];
            key.sort_unstable();
            b.cover(triangles[&key], tile);
        }
    }

    // Tetrahedra: the four even corners of each unit cube.
    for x in 0..span {
        for y in 0..span {
            for z in 0..span {
                let mut even_corners: Vec<[i64; 3]> = Vec::with_capacity(4);
                for dx in 0..2 {
                    for dy in 0..2 {
                        for dz in 0..2 {
                            let p = wrap([x + dx, y + dy, z + dz]);
                            if (x + dx + y + dy + z + dz) % 2 == 0 {
                                even_corners.push(p);
                            }
                        }
                    }
                }
                debug_assert_eq!(even_corners.len(), 4);
                let tile = b.face(3);
                for skip in 0..4 {
                    let mut key = [[0i64; 3]; 3];
                    let mut w = 0;
                    for (i, &c) in even_corners.iter().enumerate() {
                        if i != skip {
                            key[w] = c;
                            w += 1;
                        }
                    }
                    key.sort_unstable();
                    let t = *triangles.get(&key).ok_or_else(|| {
                        Error::Internal("tetrahedron face missing from triangle table".into())
                    })?;
                    b.cover(t, tile);
                }
            }
        }
    }

    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hexagonal_torus_counts() {
        let hex = hexagonal_torus(3).unwrap();
        assert_eq!(hex.proper_face_counts(), vec![18, 27, 9]);
        assert!(hex.validate().is_valid());
    }

    #[test]
    fn trihexagonal_counts() {
        let q = build_torus_quotient(TorusFamily::Trihexagonal, 3).unwrap();
        assert_eq!(q.lattice.proper_face_counts(), vec![27, 54, 27]);
        let graph = FlagGraph::build(&q.lattice).unwrap();
        assert_eq!(graph.flag_count(), 216);
    }

    #[test]
    fn rhombille_is_the_dual() {
        let q = build_torus_quotient(TorusFamily::Rhombille, 3).unwrap();
        assert_eq!(q.lattice.proper_face_counts(), vec![27, 54, 27]);
        // Dual counts of the trihexagonal quotient: 2-faces split 18 + 9 on
        // one side, vertices on the other.
        let tri = build_torus_quotient(TorusFamily::Trihexagonal, 3).unwrap();
        assert_eq!(
            q.lattice.rank_size(0),
            tri.lattice.rank_size(2),
        );
    }

    #[test]
    fn tet_oct_counts() {
        let q = build_torus_quotient(TorusFamily::TetOct, 2).unwrap();
        assert_eq!(q.lattice.rank_size(0), 32);
        assert_eq!(q.lattice.rank_size(3), 96);
        assert_eq!(q.lattice.rank_size(1), 192);
        assert_eq!(q.lattice.rank_size(2), 256);
    }

    #[test]
    fn period_below_minimum_rejected() {
        assert!(matches!(
            build_torus_quotient(TorusFamily::Trihexagonal, 2),
            Err(Error::PeriodTooSmall { .. })
        ));
        assert!(matches!(
            build_torus_quotient(TorusFamily::TetOct, 1),
            Err(Error::PeriodTooSmall { .. })
        ));
    }
}
