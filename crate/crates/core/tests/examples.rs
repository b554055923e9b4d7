//! Cross-module checks with independently computed expected values.

use twoorbit::*;

/// Flag count of a rank-3 lattice by the polygon sum: every flag picks a
/// 2-face and one of its 2 * sides (vertex, edge) corners.
fn flag_count_by_polygon_sum(lattice: &FaceLattice) -> usize {
    lattice
        .rank_faces(2)
        .map(|f| 2 * lattice.below(f).len())
        .sum()
}

#[test]
fn flag_counts_match_the_polygon_sum() {
    for (key, expected) in [
        (CatalogKey::Cuboctahedron, 8 * 6 + 6 * 8),
        (CatalogKey::Icosidodecahedron, 20 * 6 + 12 * 10),
        (CatalogKey::Cube(3), 6 * 8),
        (CatalogKey::Icosahedron, 20 * 6),
    ] {
        let lattice = make(key).unwrap();
        assert_eq!(flag_count_by_polygon_sum(&lattice), expected, "{key} oracle");
        let graph = FlagGraph::build(&lattice).unwrap();
        assert_eq!(graph.flag_count(), expected, "{key} enumeration");
    }
}

#[test]
fn five_cube_is_regular() {
    let lattice = make(CatalogKey::Cube(5)).unwrap();
    assert!(lattice.validate().is_valid());
    let graph = FlagGraph::build(&lattice).unwrap();
    // 2^d vertex choices, d! orders of axis collapse.
    let expected = 32 * 120;
    assert_eq!(graph.flag_count(), expected);
    let group = automorphism_group(&graph);
    assert_eq!(group.order(), expected);
    let report = orbit_report(&lattice, &graph, &group).unwrap();
    assert_eq!(report.orbit_count, 1);
}

#[test]
fn four_cube_group_order() {
    let lattice = make(CatalogKey::Cube(4)).unwrap();
    let graph = FlagGraph::build(&lattice).unwrap();
    assert_eq!(graph.flag_count(), 384);
    assert_eq!(automorphism_group(&graph).order(), 384);
}

#[test]
fn cuboctahedron_two_faces_alternate_across_two_adjacency() {
    // Flags whose 2-face is a triangle flip to a square 2-face under the
    // rank-2 adjacency, and conversely: each edge borders one of each.
    let lattice = make(CatalogKey::Cuboctahedron).unwrap();
    let graph = FlagGraph::build(&lattice).unwrap();
    let sides = |flag: FlagId| {
        let face = graph.flag(flag)[3];
        lattice.below(face).len()
    };
    for f in graph.flags() {
        let here = sides(f);
        let there = sides(graph.adjacent(f, 2).unwrap());
        assert!(matches!(
            (here, there),
            (3, 4) | (4, 3)
        ));
    }
}

#[test]
fn even_polygons_are_combinatorially_one_orbit() {
    for n in [4u32, 6, 8, 10] {
        let lattice = make(CatalogKey::Polygon(2 * n)).unwrap();
        let graph = FlagGraph::build(&lattice).unwrap();
        let group = automorphism_group(&graph);
        let report = orbit_report(&lattice, &graph, &group).unwrap();
        assert_eq!(report.orbit_count, 1, "2n-gon with n = {n}");
    }
}

/// Brute-force automorphism count for lattices whose faces are determined
/// by their vertex sets: try every permutation of the vertices and keep
/// those under which the image of every face's vertex set is again the
/// vertex set of a face of the same rank. Independent of the flag
/// propagation engine.
fn brute_force_automorphism_count(lattice: &FaceLattice) -> usize {
    let vertices: Vec<FaceId> = lattice.rank_faces(0).collect();
    let n = vertices.len();
    let vertex_pos: std::collections::HashMap<FaceId, usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();

    // Vertex set of every face, and a lookup from (rank, vertex set).
    let mut face_sets: Vec<Vec<usize>> = Vec::with_capacity(lattice.face_count());
    let mut by_set: std::collections::HashMap<(Rank, Vec<usize>), FaceId> =
        std::collections::HashMap::new();
    for f in 0..lattice.face_count() as FaceId {
        let mut set: Vec<usize> = vertices
            .iter()
            .filter(|&&v| lattice.is_le(v, f).unwrap())
            .map(|v| vertex_pos[v])
            .collect();
        set.sort_unstable();
        face_sets.push(set.clone());
        by_set.insert((lattice.face(f).rank, set), f);
    }

    let mut perm: Vec<usize> = (0..n).collect();
    let mut count = 0usize;
    permute(&mut perm, 0, &mut |p| {
        let ok = (0..lattice.face_count() as FaceId).all(|f| {
            let mut image: Vec<usize> = face_sets[f as usize].iter().map(|&v| p[v]).collect();
            image.sort_unstable();
            by_set.contains_key(&(lattice.face(f).rank, image))
        });
        if ok {
            count += 1;
        }
    });
    count
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

#[test]
fn propagation_agrees_with_brute_force_on_small_objects() {
    for (key, expected) in [
        (CatalogKey::Polygon(3), 6),
        (CatalogKey::Polygon(4), 8),
        (CatalogKey::Polygon(5), 10),
        (CatalogKey::Simplex(3), 24),
        (CatalogKey::Cube(3), 48),
        (CatalogKey::Octahedron, 48),
    ] {
        let lattice = make(key).unwrap();
        let brute = brute_force_automorphism_count(&lattice);
        assert_eq!(brute, expected, "{key} brute force");
        let graph = FlagGraph::build(&lattice).unwrap();
        assert_eq!(automorphism_group(&graph).order(), brute, "{key} propagation");
    }
}

#[test]
fn quotient_duality_complements_the_class() {
    use twoorbit::tiling::{analyze_quotient, build_torus_quotient, TorusFamily};
    let primal = build_torus_quotient(TorusFamily::TetOct, 2).unwrap();
    let dual = build_torus_quotient(TorusFamily::RhombicDodecahedral, 2).unwrap();
    let p = analyze_quotient(&primal).unwrap();
    let d = analyze_quotient(&dual).unwrap();
    assert_eq!(p.orbit_count, 2);
    assert_eq!(d.orbit_count, 2);
    let complement: Vec<Rank> = p
        .class_ranks
        .unwrap()
        .iter()
        .map(|&i| primal.lattice.rank() - 1 - i)
        .rev()
        .collect();
    assert_eq!(d.class_ranks, Some(complement));
}
