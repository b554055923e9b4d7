//! Constructors for the named lattices: polygons, simplices, cubes,
//! cross-polytopes, the Platonic solids, the two quasiregular polyhedra and
//! their duals, plus the rectification operation that produces them.
//!
//! Everything here is purely combinatorial. The families are built from
//! subsets and sign vectors; the icosahedron comes from an explicit triangle
//! table; the remaining solids are derived by rectification and duality.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::{FaceLattice, LatticeBuilder};

/// Keys of the built-in catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CatalogKey {
    Polygon(u32),
    Simplex(u32),
    Cube(u32),
    Cross(u32),
    Tetrahedron,
    Octahedron,
    Icosahedron,
    Dodecahedron,
    Cuboctahedron,
    Icosidodecahedron,
    RhombicDodecahedron,
    RhombicTriacontahedron,
}

impl fmt::Display for CatalogKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogKey::Polygon(n) => write!(f, "polygon({n})"),
            CatalogKey::Simplex(d) => write!(f, "simplex({d})"),
            CatalogKey::Cube(d) => write!(f, "cube({d})"),
            CatalogKey::Cross(d) => write!(f, "cross({d})"),
            CatalogKey::Tetrahedron => write!(f, "tetrahedron"),
            CatalogKey::Octahedron => write!(f, "octahedron"),
            CatalogKey::Icosahedron => write!(f, "icosahedron"),
            CatalogKey::Dodecahedron => write!(f, "dodecahedron"),
            CatalogKey::Cuboctahedron => write!(f, "cuboctahedron"),
            CatalogKey::Icosidodecahedron => write!(f, "icosidodecahedron"),
            CatalogKey::RhombicDodecahedron => write!(f, "rhombic-dodecahedron"),
            CatalogKey::RhombicTriacontahedron => write!(f, "rhombic-triacontahedron"),
        }
    }
}

impl FromStr for CatalogKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_param = |s: &str, name: &str| -> Result<u32> {
            let inner = s
                .strip_prefix(name)
                .and_then(|r| r.strip_prefix('('))
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| Error::Parameter(format!("cannot parse catalog key {s:?}")))?;
            inner
                .parse()
                .map_err(|_| Error::Parameter(format!("bad parameter in {s:?}")))
        };
        match s {
            "tetrahedron" => Ok(CatalogKey::Tetrahedron),
            "octahedron" => Ok(CatalogKey::Octahedron),
            "icosahedron" => Ok(CatalogKey::Icosahedron),
            "dodecahedron" => Ok(CatalogKey::Dodecahedron),
            "cuboctahedron" => Ok(CatalogKey::Cuboctahedron),
            "icosidodecahedron" => Ok(CatalogKey::Icosidodecahedron),
            "rhombic-dodecahedron" => Ok(CatalogKey::RhombicDodecahedron),
            "rhombic-triacontahedron" => Ok(CatalogKey::RhombicTriacontahedron),
            _ if s.starts_with("polygon") => Ok(CatalogKey::Polygon(parse_param(s, "polygon")?)),
            _ if s.starts_with("simplex") => Ok(CatalogKey::Simplex(parse_param(s, "simplex")?)),
            _ if s.starts_with("cube") => Ok(CatalogKey::Cube(parse_param(s, "cube")?)),
            _ if s.starts_with("cross") => Ok(CatalogKey::Cross(parse_param(s, "cross")?)),
            _ => Err(Error::Parameter(format!("unknown catalog key {s:?}"))),
        }
    }
}

/// All parameterless keys plus small members of the families, for listings.
pub fn standard_keys() -> Vec<CatalogKey> {
    let mut keys = vec![
        CatalogKey::Tetrahedron,
        CatalogKey::Octahedron,
        CatalogKey::Icosahedron,
        CatalogKey::Dodecahedron,
        CatalogKey::Cuboctahedron,
        CatalogKey::Icosidodecahedron,
        CatalogKey::RhombicDodecahedron,
        CatalogKey::RhombicTriacontahedron,
    ];
    for n in 3..=8 {
        keys.push(CatalogKey::Polygon(n));
    }
    for d in 2..=5 {
        keys.push(CatalogKey::Simplex(d));
        keys.push(CatalogKey::Cube(d));
        keys.push(CatalogKey::Cross(d));
    }
    keys
}

/// Builds the lattice for a catalog key. Every output passes validation.
pub fn make(key: CatalogKey) -> Result<FaceLattice> {
    match key {
        CatalogKey::Polygon(n) => polygon(n),
        CatalogKey::Simplex(d) => simplex(d),
        CatalogKey::Cube(d) => cube(d),
        CatalogKey::Cross(d) => cross(d),
        CatalogKey::Tetrahedron => simplex(3),
        CatalogKey::Octahedron => cross(3),
        CatalogKey::Icosahedron => icosahedron(),
        CatalogKey::Dodecahedron => icosahedron()?.dual(),
        CatalogKey::Cuboctahedron => rectify(&cube(3)?),
        CatalogKey::Icosidodecahedron => rectify(&icosahedron()?.dual()?),
        CatalogKey::RhombicDodecahedron => rectify(&cube(3)?)?.dual(),
        CatalogKey::RhombicTriacontahedron => rectify(&icosahedron()?.dual()?)?.dual(),
    }
}

fn polygon(n: u32) -> Result<FaceLattice> {
    if n < 3 {
        return Err(Error::Parameter(format!("polygon needs n >= 3, got {n}")));
    }
    let mut b = LatticeBuilder::new(2);
    let verts: Vec<usize> = (0..n).map(|_| b.face(0)).collect();
    for i in 0..n as usize {
        let e = b.face(1);
        b.cover(verts[i], e);
        b.cover(verts[(i + 1) % n as usize], e);
    }
    b.build()
}

fn simplex(d: u32) -> Result<FaceLattice> {
    if !(1..=12).contains(&d) {
        return Err(Error::Parameter(format!("simplex needs 1 <= d <= 12, got {d}")));
    }
    let points = d + 1;
    let mut b = LatticeBuilder::new(d as i32);
    // One face per subset of the vertex set; the empty set is the least face.
    let mut handles = vec![0usize; 1 << points];
    for mask in 0..(1u32 << points) {
        handles[mask as usize] = b.face(mask.count_ones() as i32 - 1);
    }
    for mask in 1..(1u32 << points) {
        for v in 0..points {
            if mask >> v & 1 == 1 {
                b.cover(handles[(mask ^ (1 << v)) as usize], handles[mask as usize]);
            }
        }
    }
    b.build()
}

fn cube(d: u32) -> Result<FaceLattice> {
    if !(1..=8).contains(&d) {
        return Err(Error::Parameter(format!("cube needs 1 <= d <= 8, got {d}")));
    }
    // Faces are sign vectors over {-, +, *}; the rank is the number of stars.
    let mut b = LatticeBuilder::new(d as i32);
    let total = 3usize.pow(d);
    let mut handles = vec![0usize; total];
    let mut digits = vec![0u8; d as usize];
    for (code, handle) in handles.iter_mut().enumerate() {
        decode_base3(code, &mut digits);
        let stars = digits.iter().filter(|&&x| x == 2).count();
        *handle = b.face(stars as i32);
    }
    for code in 0..total {
        decode_base3(code, &mut digits);
        for (pos, &digit) in digits.iter().enumerate() {
            if digit == 2 {
                let step = 3usize.pow(pos as u32);
                // Fixing the starred axis to either sign gives a lower cover.
                b.cover(handles[code - 2 * step], handles[code]);
                b.cover(handles[code - step], handles[code]);
            }
        }
    }
    b.build()
}

fn decode_base3(mut code: usize, digits: &mut [u8]) {
    for d in digits.iter_mut() {
        *d = (code % 3) as u8;
        code /= 3;
    }
}

fn cross(d: u32) -> Result<FaceLattice> {
    if !(1..=8).contains(&d) {
        return Err(Error::Parameter(format!("cross needs 1 <= d <= 8, got {d}")));
    }
    // Faces are partial sign vectors: a face of rank k assigns a sign to k+1
    // axes. The empty assignment is the least face; the greatest face is
    // synthesized by the builder.
    let mut b = LatticeBuilder::new(d as i32);
    let mut handles: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for support in 0u32..(1 << d) {
        for signs in 0u32..(1 << d) {
            if signs & !support != 0 {
                continue;
            }
            let rank = support.count_ones() as i32 - 1;
            let handle = b.face(rank);
            handles.insert((support, signs), handle);
            for axis in 0..d {
                if support >> axis & 1 == 1 {
                    let smaller = (support ^ (1 << axis), signs & !(1 << axis));
                    b.cover(handles[&smaller], handle);
                }
            }
        }
    }
    b.build()
}

/// Triangle table of the icosahedron: an upper cap around vertex 0, an
/// antiprismatic band, and a lower cap around vertex 11.
const ICOSAHEDRON_TRIANGLES: [[u32; 3]; 20] = [
    [0, 1, 2],
    [0, 2, 3],
    [0, 3, 4],
    [0, 4, 5],
    [0, 5, 1],
    [1, 2, 6],
    [2, 3, 7],
    [3, 4, 8],
    [4, 5, 9],
    [5, 1, 10],
    [2, 6, 7],
    [3, 7, 8],
    [4, 8, 9],
    [5, 9, 10],
    [1, 10, 6],
    [6, 7, 11],
    [7, 8, 11],
    [8, 9, 11],
    [9, 10, 11],
    [10, 6, 11],
];

fn icosahedron() -> Result<FaceLattice> {
    triangulated_polyhedron(12, &ICOSAHEDRON_TRIANGLES)
}

/// Rank-3 lattice from a triangle list: edges are the vertex pairs occurring
/// inside triangles.
fn triangulated_polyhedron(vertex_count: u32, triangles: &[[u32; 3]]) -> Result<FaceLattice> {
    let mut b = LatticeBuilder::new(3);
    let verts: Vec<usize> = (0..vertex_count).map(|_| b.face(0)).collect();
    let mut edges: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for tri in triangles {
        for i in 0..3 {
            let (mut x, mut y) = (tri[i], tri[(i + 1) % 3]);
            if x > y {
                std::mem::swap(&mut x, &mut y);
            }
            edges.entry((x, y)).or_insert_with(|| {
                let e = b.face(1);
                b.cover(verts[x as usize], e);
                b.cover(verts[y as usize], e);
                e
            });
        }
    }
    for tri in triangles {
        let f = b.face(2);
        for i in 0..3 {
            let (mut x, mut y) = (tri[i], tri[(i + 1) % 3]);
            if x > y {
                std::mem::swap(&mut x, &mut y);
            }
            b.cover(edges[&(x, y)], f);
        }
    }
    b.build()
}

/// Rectifies a valid rank-3 lattice.
///
/// New vertices are the old edges; new 2-faces come in two families, one per
/// old vertex and one per old 2-face; new edges are the incident (vertex,
/// 2-face) pairs of the input, each joining the midpoints of the two old
/// edges shared by the pair.
pub fn rectify(lattice: &FaceLattice) -> Result<FaceLattice> {
    if lattice.rank() != 3 {
        return Err(Error::UnsupportedRank(lattice.rank(), 3));
    }
    let validation = lattice.validate();
    if !validation.is_valid() {
        return Err(Error::InvalidLattice(
            validation.violated_axioms().join(", "),
        ));
    }

    let mut b = LatticeBuilder::new(3);
    let mut midpoint = BTreeMap::new();
    for e in lattice.rank_faces(1) {
        midpoint.insert(e, b.face(0));
    }
    let mut vertex_face = BTreeMap::new();
    for v in lattice.rank_faces(0) {
        vertex_face.insert(v, b.face(2));
    }
    let mut face_face = BTreeMap::new();
    for f in lattice.rank_faces(2) {
        face_face.insert(f, b.face(2));
    }
    // Incident (vertex, 2-face) pairs, each discovered through both of its
    // shared edges.
    let mut pairs = std::collections::BTreeSet::new();
    for f in lattice.rank_faces(2) {
        for &e in lattice.below(f) {
            for &v in lattice.below(e) {
                pairs.insert((v, f));
            }
        }
    }
    for (v, f) in pairs {
        let shared = lattice.middles(v, f);
        if shared.len() != 2 {
            return Err(Error::BrokenDiamond {
                lower: lattice.face(v).id.clone(),
                upper: lattice.face(f).id.clone(),
                count: shared.len(),
            });
        }
        let edge = b.face(1);
        for e in shared {
            b.cover(midpoint[&e], edge);
        }
        b.cover(edge, vertex_face[&v]);
        b.cover(edge, face_face[&f]);
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn icosahedron_table_is_coherent() {
        let ico = icosahedron().unwrap();
        assert_eq!(ico.proper_face_counts(), vec![12, 30, 20]);
        assert!(ico.validate().is_valid());
        // Every vertex in five triangles.
        for v in ico.rank_faces(0) {
            assert_eq!(ico.above(v).len(), 5);
        }
    }

    #[test]
    fn polygon_and_families() {
        assert_eq!(
            make(CatalogKey::Polygon(6)).unwrap().proper_face_counts(),
            vec![6, 6]
        );
        assert_eq!(
            make(CatalogKey::Simplex(3)).unwrap().proper_face_counts(),
            vec![4, 6, 4]
        );
        assert_eq!(
            make(CatalogKey::Cube(3)).unwrap().proper_face_counts(),
            vec![8, 12, 6]
        );
        assert_eq!(
            make(CatalogKey::Cross(3)).unwrap().proper_face_counts(),
            vec![6, 12, 8]
        );
        assert_eq!(
            make(CatalogKey::Cube(4)).unwrap().proper_face_counts(),
            vec![16, 32, 24, 8]
        );
    }

    #[test]
    fn parameters_out_of_range() {
        assert!(make(CatalogKey::Polygon(2)).is_err());
        assert!(make(CatalogKey::Simplex(0)).is_err());
        assert!(make(CatalogKey::Cube(0)).is_err());
    }

    #[test]
    fn cuboctahedron_counts() {
        let c = make(CatalogKey::Cuboctahedron).unwrap();
        assert_eq!(c.proper_face_counts(), vec![12, 24, 14]);
        assert!(c.validate().is_valid());
    }

    #[test]
    fn icosidodecahedron_counts() {
        let c = make(CatalogKey::Icosidodecahedron).unwrap();
        assert_eq!(c.proper_face_counts(), vec![30, 60, 32]);
        assert!(c.validate().is_valid());
    }

    #[test]
    fn rectify_rejects_wrong_rank() {
        let square = make(CatalogKey::Polygon(4)).unwrap();
        assert!(matches!(
            rectify(&square),
            Err(Error::UnsupportedRank(2, 3))
        ));
    }

    #[test]
    fn keys_round_trip_through_strings() {
        for key in standard_keys() {
            let text = key.to_string();
            assert_eq!(text.parse::<CatalogKey>().unwrap(), key);
        }
    }
}
