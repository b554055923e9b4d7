//! Classification of two-orbit lattices: distinguished generators, the
//! Coxeter matrix they satisfy, diagram matching, and the exact angle-count
//! refutation of the two self-dual rank-4 candidate types.

use std::fmt;

use num_rational::Ratio;

use crate::catalog::{make, CatalogKey};
use crate::error::{Error, Result};
use crate::flags::{FlagGraph, FlagId};
use crate::iso::{are_isomorphic, Isomorphism};
use crate::lattice::{FaceLattice, Rank};
use crate::orbits::{automorphism_group, orbit_report, AutomorphismGroup, OrbitReport};

/// Node labels of the generator diagram: the ranks `0..=d-2` plus the extra
/// node `z` for the generator acting through the adjacent facet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoxNode {
    Rank(Rank),
    Extra,
}

impl fmt::Display for CoxNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxNode::Rank(r) => write!(f, "{r}"),
            CoxNode::Extra => write!(f, "z"),
        }
    }
}

/// Orders of all pairwise products of the distinguished generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    pub nodes: Vec<CoxNode>,
    /// Symmetric, with 1 on the diagonal.
    pub orders: Vec<Vec<usize>>,
}

impl CoxeterMatrix {
    pub fn order(&self, i: usize, j: usize) -> usize {
        self.orders[i][j]
    }

    /// Compact rendering such as `m(0,1)=3 m(0,z)=4 m(1,z)=2`.
    pub fn summary(&self) -> String {
        let mut parts = Vec::new();
        for i in 0..self.nodes.len() {
            for j in i + 1..self.nodes.len() {
                parts.push(format!(
                    "m({},{})={}",
                    self.nodes[i], self.nodes[j], self.orders[i][j]
                ));
            }
        }
        parts.join(" ")
    }
}

/// The distinguished generators of a facet-intransitive two-orbit lattice,
/// indexed into the ambient automorphism group.
#[derive(Debug, Clone)]
pub struct DistinguishedGenerators {
    pub base_flag: FlagId,
    /// For each `i` in `0..=d-2`, the unique element carrying the base flag
    /// to its i-adjacent flag.
    pub rank_swaps: Vec<usize>,
    /// The element carrying the base flag across the adjacent facet: to the
    /// flag reached by the adjacency word (d-1, d-2, d-1).
    pub cross_swap: usize,
}

impl DistinguishedGenerators {
    pub fn all(&self) -> Vec<usize> {
        let mut v = self.rank_swaps.clone();
        v.push(self.cross_swap);
        v
    }
}

/// The two finite diagrams a facet-intransitive two-orbit polyhedron can
/// realize.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramType {
    B3,
    H3,
}

impl DiagramType {
    /// Abstract group order of the diagram. |B3| = 48 and |H3| = 120 among
    /// the finite reflection groups; the permutation closure recomputes the
    /// same number independently.
    pub fn group_order(self) -> usize {
        match self {
            DiagramType::B3 => 48,
            DiagramType::H3 => 120,
        }
    }

    /// The facet-intransitive polyhedron realizing the diagram.
    pub fn polyhedron(self) -> CatalogKey {
        match self {
            DiagramType::B3 => CatalogKey::Cuboctahedron,
            DiagramType::H3 => CatalogKey::Icosidodecahedron,
        }
    }

    /// Its dual, the vertex-intransitive polyhedron.
    pub fn dual_polyhedron(self) -> CatalogKey {
        match self {
            DiagramType::B3 => CatalogKey::RhombicDodecahedron,
            DiagramType::H3 => CatalogKey::RhombicTriacontahedron,
        }
    }
}

impl fmt::Display for DiagramType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramType::B3 => write!(f, "B3"),
            DiagramType::H3 => write!(f, "H3"),
        }
    }
}

/// Input to the exact angle-count check: a vertex figure, the common 2-face
/// size of the ambient lattice, and the size of the vertex-figure faces that
/// group the 2-faces at a vertex into cones.
#[derive(Debug, Clone)]
pub struct AngleCountInput {
    pub vertex_figure: FaceLattice,
    pub two_face_size: usize,
    pub cone_face_size: usize,
}

/// Outcome of the angle-count check, in exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefutationReport {
    /// Edge count of the vertex figure: 2-faces at each vertex of the
    /// ambient lattice.
    pub vertex_figure_edges: usize,
    /// Size of the ambient 2-faces.
    pub two_face_size: usize,
    /// Size of the vertex-figure faces that group the 2-faces into cones.
    pub cone_face_size: usize,
    /// `f_2 / f_0` of the ambient lattice: edge count over 2-face size.
    pub face_vertex_ratio: Ratio<i64>,
    /// Number of cone-size faces of the vertex figure: the 2-faces at a
    /// vertex split into this many cones, each with angle total below a full
    /// turn.
    pub cone_count: usize,
    /// Whether the totals contradict: the global angle sum forces
    /// `ratio * f_0` full turns, the cones allow strictly fewer than
    /// `cone_count * f_0`.
    pub contradiction: bool,
}

impl fmt::Display for RefutationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "each vertex lies in {} {}-gonal 2-faces, so f2/f0 = {}; \
             they split into {} cones of {}-gon type: {}",
            self.vertex_figure_edges,
            self.two_face_size,
            self.face_vertex_ratio,
            self.cone_count,
            self.cone_face_size,
            if self.contradiction {
                "contradiction (the exact angle total meets or exceeds the strict cone bound)"
            } else {
                "no contradiction"
            }
        )
    }
}

/// Verdict of [`classify`].
#[derive(Debug, Clone)]
pub enum Verdict {
    /// The automorphism group has `orbit_count` != 2 flag orbits.
    NotTwoOrbit { orbit_count: usize },
    /// Facet-intransitive: matched a finite diagram and the witness maps the
    /// input onto the corresponding catalog polyhedron.
    FacetIntransitive {
        diagram: DiagramType,
        matrix: CoxeterMatrix,
        witness: Isomorphism,
    },
    /// Vertex-intransitive: the dual matched `dual_diagram`; the witness maps
    /// the input onto the dual catalog polyhedron.
    VertexIntransitive {
        dual_diagram: DiagramType,
        witness: Isomorphism,
    },
    /// Rank-4 fully transitive case: no such lattice bounds a convex
    /// polytope; the exact angle count refutes it from the vertex figure.
    Rank4Exceptional { refutation: RefutationReport },
}

impl Verdict {
    pub fn outcome_label(&self) -> String {
        match self {
            Verdict::NotTwoOrbit { orbit_count } => format!("not-two-orbit (k={orbit_count})"),
            Verdict::FacetIntransitive { diagram, .. } => match diagram {
                DiagramType::B3 => "cuboctahedron-type (B3)".into(),
                DiagramType::H3 => "icosidodecahedron-type (H3)".into(),
            },
            Verdict::VertexIntransitive { dual_diagram, .. } => match dual_diagram {
                DiagramType::B3 => "rhombic-dodecahedron-type (dual of B3)".into(),
                DiagramType::H3 => "rhombic-triacontahedron-type (dual of H3)".into(),
            },
            Verdict::Rank4Exceptional { refutation } => {
                if refutation.contradiction {
                    "rank-4-exceptional (refuted)".into()
                } else {
                    "rank-4-exceptional (unrefuted, exploratory)".into()
                }
            }
        }
    }
}

/// A verdict together with the orbit analysis it rests on.
#[derive(Debug, Clone)]
pub struct Classification {
    pub verdict: Verdict,
    pub report: OrbitReport,
}

/// Extracts the distinguished generators with respect to the given base flag.
///
/// The input must be two-orbit and facet-intransitive (class ranks
/// `0..=d-2`), and the base flag must be appropriate: its section at symbol
/// position `d-2` realizes the smaller of the two sizes there. An
/// inappropriate flag yields an error advising the (d-1)-adjacent flag.
pub fn distinguished_generators(
    graph: &FlagGraph,
    group: &AutomorphismGroup,
    report: &OrbitReport,
    base: FlagId,
) -> Result<DistinguishedGenerators> {
    let d = graph.rank();
    if report.orbit_count != 2 {
        return Err(Error::NotTwoOrbit {
            orbits: report.orbit_count,
        });
    }
    let missing = report.missing_ranks();
    if missing != vec![d - 1] {
        return Err(Error::NotFacetIntransitive {
            class: report
                .class_ranks
                .as_ref()
                .map(|c| {
                    c.iter()
                        .map(|r| r.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .unwrap_or_default(),
        });
    }
    if d < 3 {
        return Err(Error::UnsupportedRank(d, 3));
    }

    let stacked = report.symbol.position(d - 2);
    if stacked.len() != 2 {
        return Err(Error::Internal(format!(
            "facet-intransitive input must stack exactly two sizes at position {}, found {:?}",
            d - 2,
            stacked
        )));
    }
    let (small, large) = (stacked[0], stacked[1]);
    let found = graph.section_size(base, (d - 3) as usize, (d - 2) as usize);
    if found != small {
        if found != large {
            return Err(Error::Internal(format!(
                "base flag section has {found} sides, expected {small} or {large}"
            )));
        }
        return Err(Error::InappropriateBaseFlag {
            position: d - 2,
            found,
            expected: small,
        });
    }

    let mut rank_swaps = Vec::with_capacity((d - 1) as usize);
    for i in 0..=(d - 2) {
        let target = graph.adjacent(base, i)?;
        let element = group.element_carrying(graph, base, target).ok_or_else(|| {
            Error::Internal(format!("no automorphism carries the base flag at rank {i}"))
        })?;
        rank_swaps.push(element);
    }
    let across = graph.adjacent(
        graph.adjacent(graph.adjacent(base, d - 1)?, d - 2)?,
        d - 1,
    )?;
    let cross_swap = group
        .element_carrying(graph, base, across)
        .ok_or_else(|| Error::Internal("no automorphism crosses the adjacent facet".into()))?;

    let gens = DistinguishedGenerators {
        base_flag: base,
        rank_swaps,
        cross_swap,
    };
    for &element in &gens.all() {
        if group.product_order(graph, element, element) != 1 {
            return Err(Error::Internal("distinguished generator is not an involution".into()));
        }
    }
    let closure = group.closure_order(graph, &gens.all());
    if closure != group.order() {
        return Err(Error::Internal(format!(
            "distinguished generators close to order {closure}, group has order {}",
            group.order()
        )));
    }
    Ok(gens)
}

/// Computes the Coxeter matrix of the distinguished generators and verifies
/// it against the generator diagram: a path `0 - 1 - ... - (d-2)` labeled by
/// the symbol, a second edge from node `d-3` to the extra node `z` labeled
/// with the larger stacked size, the edge `(d-2, z)` labeled `p_{d-1}/2`, and
/// order 2 everywhere else.
pub fn coxeter_matrix(
    graph: &FlagGraph,
    group: &AutomorphismGroup,
    gens: &DistinguishedGenerators,
    report: &OrbitReport,
) -> Result<CoxeterMatrix> {
    let d = graph.rank();
    let elements = gens.all();
    let mut nodes: Vec<CoxNode> = (0..=(d - 2)).map(CoxNode::Rank).collect();
    nodes.push(CoxNode::Extra);
    let n = nodes.len();
    let mut orders = vec![vec![1usize; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let m = group.product_order(graph, elements[i], elements[j]);
            orders[i][j] = m;
            orders[j][i] = m;
        }
    }
    let matrix = CoxeterMatrix { nodes, orders };

    // Diagram verification.
    let z = n - 1;
    let stacked = report.symbol.position(d - 2);
    let (small, large) = (stacked[0], *stacked.last().unwrap());
    let check = |claim: bool, what: String| -> Result<()> {
        if claim {
            Ok(())
        } else {
            Err(Error::Internal(format!("generator diagram violated: {what}")))
        }
    };
    for i in 1..=(d - 3) {
        let expected = report.symbol.position(i);
        check(
            expected.len() == 1 && matrix.order((i - 1) as usize, i as usize) == expected[0],
            format!("tail edge ({},{})", i - 1, i),
        )?;
    }
    check(
        matrix.order((d - 3) as usize, (d - 2) as usize) == small,
        format!("edge ({},{}) should carry the smaller size {small}", d - 3, d - 2),
    )?;
    check(
        matrix.order((d - 3) as usize, z) == large,
        format!("edge ({},z) should carry the larger size {large}", d - 3),
    )?;
    let last = report.symbol.position(d - 1);
    check(
        last.len() == 1 && last[0].is_multiple_of(2) && matrix.order((d - 2) as usize, z) == last[0] / 2,
        format!("edge ({},z) should carry half of {last:?}", d - 2),
    )?;
    for i in 0..n {
        for j in i + 2..n {
            // The only non-consecutive diagram edge is (d-3, z).
            let is_edge = j == z && i as Rank == d - 3;
            if !is_edge {
                check(
                    matrix.order(i, j) == 2,
                    format!("nodes {} and {} are not joined", matrix.nodes[i], matrix.nodes[j]),
                )?;
            }
        }
    }
    Ok(matrix)
}

/// Exact angle-count check.
///
/// With every 2-face a `two_face_size`-gon, the total interior angle over all
/// incident (vertex, 2-face) pairs is a full turn per 2-face, i.e.
/// `ratio = edges(VF)/two_face_size` turns per vertex. The 2-faces at a
/// vertex partition into one cone per `cone_face_size`-gon face of the vertex
/// figure, and each cone's angles total strictly less than a full turn. A
/// contradiction arises exactly when `ratio >= cone_count`.
pub fn angle_sum_check(input: &AngleCountInput) -> Result<RefutationReport> {
    let vf = &input.vertex_figure;
    let validation = vf.validate();
    if !validation.is_valid() {
        return Err(Error::InvalidLattice(format!(
            "vertex figure: {}",
            validation
                .violated_axioms()
                .join(", ")
        )));
    }
    if input.two_face_size == 0 {
        return Err(Error::Parameter("two-face size must be positive".into()));
    }
    let edges = vf.rank_size(1);
    // Polygon faces of the vertex figure: its rank-2 faces. For a rank-2
    // figure the improper top face is the only polygon and counts as itself.
    let cone_count = vf
        .rank_faces(2)
        .filter(|&f| vf.below(f).len() == input.cone_face_size)
        .count();
    if cone_count == 0 {
        return Err(Error::ConeSizeAbsent {
            size: input.cone_face_size,
        });
    }
    let ratio = Ratio::new(edges as i64, input.two_face_size as i64);
    Ok(RefutationReport {
        vertex_figure_edges: edges,
        two_face_size: input.two_face_size,
        cone_face_size: input.cone_face_size,
        face_vertex_ratio: ratio,
        cone_count,
        contradiction: ratio >= Ratio::from_integer(cone_count as i64),
    })
}

/// Full classification pipeline for a lattice.
pub fn classify(lattice: &FaceLattice) -> Result<Classification> {
    let validation = lattice.validate();
    if !validation.is_valid() {
        return Err(Error::InvalidLattice(
            validation.violated_axioms().join(", "),
        ));
    }
    let graph = FlagGraph::build(lattice)?;
    let group = automorphism_group(&graph);
    let report = orbit_report(lattice, &graph, &group)?;
    if report.orbit_count != 2 {
        return Ok(Classification {
            verdict: Verdict::NotTwoOrbit {
                orbit_count: report.orbit_count,
            },
            report,
        });
    }
    let d = lattice.rank();
    let missing = report.missing_ranks();

    if missing == vec![d - 1] {
        let (diagram, matrix, _) = match_facet_intransitive(&graph, &group, &report)?;
        let witness = are_isomorphic(lattice, &make(diagram.polyhedron())?)?.ok_or_else(|| {
            Error::Internal(format!(
                "diagram {diagram} matched but no isomorphism onto its polyhedron exists"
            ))
        })?;
        return Ok(Classification {
            verdict: Verdict::FacetIntransitive {
                diagram,
                matrix,
                witness,
            },
            report,
        });
    }

    if missing == vec![0] {
        let dual = lattice.dual()?;
        let dual_graph = FlagGraph::build(&dual)?;
        let dual_group = automorphism_group(&dual_graph);
        let dual_report = orbit_report(&dual, &dual_graph, &dual_group)?;
        let (dual_diagram, _, _) =
            match_facet_intransitive(&dual_graph, &dual_group, &dual_report)?;
        let witness = are_isomorphic(lattice, &make(dual_diagram.dual_polyhedron())?)?
            .ok_or_else(|| {
                Error::Internal(format!(
                    "dual matched {dual_diagram} but no isomorphism onto its dual polyhedron exists"
                ))
            })?;
        return Ok(Classification {
            verdict: Verdict::VertexIntransitive {
                dual_diagram,
                witness,
            },
            report,
        });
    }

    if d == 4 && missing == vec![0, 3] {
        // Fully transitive rank-4 candidates: argue from the vertex figure.
        let vertex = lattice
            .rank_faces(0)
            .next()
            .ok_or_else(|| Error::Internal("rank-4 lattice without vertices".into()))?;
        let vertex_figure = lattice.vertex_figure(vertex)?;
        let two_face = single_size(&report, 1)?;
        let cone = *report.symbol.position(2).last().unwrap();
        let refutation = angle_sum_check(&AngleCountInput {
            vertex_figure,
            two_face_size: two_face,
            cone_face_size: cone,
        })?;
        return Ok(Classification {
            verdict: Verdict::Rank4Exceptional { refutation },
            report,
        });
    }

    let class = report
        .class_ranks
        .as_ref()
        .map(|c| {
            c.iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .unwrap_or_default();
    match missing.iter().find(|&&j| j != 0 && j != d - 1) {
        Some(&interior) => Err(Error::InteriorRankMissing {
            class,
            rank: interior,
        }),
        None => Err(Error::DiagramMismatch {
            summary: format!("class 2_{{{class}}} omits ranks {missing:?} at rank {d}"),
        }),
    }
}

fn single_size(report: &OrbitReport, position: Rank) -> Result<usize> {
    let sizes = report.symbol.position(position);
    if sizes.len() == 1 {
        Ok(sizes[0])
    } else {
        Err(Error::Internal(format!(
            "symbol position {position} expected single-valued, found {sizes:?}"
        )))
    }
}

/// Shared facet-intransitive matching: appropriate base flag, generators,
/// matrix, diagram identification, and the group-order consistency check.
fn match_facet_intransitive(
    graph: &FlagGraph,
    group: &AutomorphismGroup,
    report: &OrbitReport,
) -> Result<(DiagramType, CoxeterMatrix, DistinguishedGenerators)> {
    let d = graph.rank();
    let base = appropriate_base_flag(graph, report)?;
    let gens = distinguished_generators(graph, group, report, base)?;
    let matrix = coxeter_matrix(graph, group, &gens, report)?;
    if d != 3 {
        return Err(Error::DiagramMismatch {
            summary: matrix.summary(),
        });
    }
    let key = (matrix.order(0, 1), matrix.order(0, 2), matrix.order(1, 2));
    let diagram = match key {
        (3, 4, 2) => DiagramType::B3,
        (3, 5, 2) => DiagramType::H3,
        _ => {
            return Err(Error::DiagramMismatch {
                summary: matrix.summary(),
            })
        }
    };
    if group.order() != diagram.group_order() {
        return Err(Error::DiagramMismatch {
            summary: format!(
                "{} with group order {} instead of {}",
                matrix.summary(),
                group.order(),
                diagram.group_order()
            ),
        });
    }
    Ok((diagram, matrix, gens))
}

/// Picks an appropriate base flag: flag 0 if its section at position `d-2`
/// has the smaller stacked size, otherwise its (d-1)-adjacent flag.
pub fn appropriate_base_flag(graph: &FlagGraph, report: &OrbitReport) -> Result<FlagId> {
    let d = graph.rank();
    if d < 3 {
        return Err(Error::UnsupportedRank(d, 3));
    }
    let stacked = report.symbol.position(d - 2);
    if stacked.is_empty() {
        return Err(Error::Internal("empty symbol position".into()));
    }
    let small = stacked[0];
    let candidate: FlagId = 0;
    if graph.section_size(candidate, (d - 3) as usize, (d - 2) as usize) == small {
        return Ok(candidate);
    }
    let flipped = graph.adjacent(candidate, d - 1)?;
    if graph.section_size(flipped, (d - 3) as usize, (d - 2) as usize) == small {
        return Ok(flipped);
    }
    Err(Error::Internal(
        "neither the least flag nor its facet-adjacent flag is appropriate".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flags::FlagGraph;
    use crate::orbits::automorphism_group;

    fn setup(
        key: CatalogKey,
    ) -> (
        FaceLattice,
        FlagGraph,
        crate::orbits::AutomorphismGroup,
        OrbitReport,
    ) {
        let l = make(key).unwrap();
        let g = FlagGraph::build(&l).unwrap();
        let gamma = automorphism_group(&g);
        let report = crate::orbits::orbit_report(&l, &g, &gamma).unwrap();
        (l, g, gamma, report)
    }

    #[test]
    fn cuboctahedron_generators_close_to_the_full_group() {
        let (_, g, gamma, report) = setup(CatalogKey::Cuboctahedron);
        let base = appropriate_base_flag(&g, &report).unwrap();
        let gens = distinguished_generators(&g, &gamma, &report, base).unwrap();
        assert_eq!(gens.rank_swaps.len(), 2);
        assert_eq!(gamma.closure_order(&g, &gens.all()), 48);
    }

    #[test]
    fn icosidodecahedron_generators_close_to_the_full_group() {
        let (_, g, gamma, report) = setup(CatalogKey::Icosidodecahedron);
        let base = appropriate_base_flag(&g, &report).unwrap();
        let gens = distinguished_generators(&g, &gamma, &report, base).unwrap();
        assert_eq!(gamma.closure_order(&g, &gens.all()), 120);
    }

    #[test]
    fn inappropriate_base_flag_advises_the_flip() {
        let (_, g, gamma, report) = setup(CatalogKey::Cuboctahedron);
        let good = appropriate_base_flag(&g, &report).unwrap();
        let bad = g.adjacent(good, 2).unwrap();
        match distinguished_generators(&g, &gamma, &report, bad) {
            Err(Error::InappropriateBaseFlag {
                found, expected, ..
            }) => {
                assert_eq!(found, 4);
                assert_eq!(expected, 3);
            }
            other => panic!("expected the inappropriate-flag error, got {other:?}"),
        }
    }

    #[test]
    fn generator_extraction_rejects_vertex_intransitive_inputs() {
        let (_, g, gamma, report) = setup(CatalogKey::RhombicDodecahedron);
        assert!(matches!(
            distinguished_generators(&g, &gamma, &report, 0),
            Err(Error::NotFacetIntransitive { .. })
        ));
    }

    #[test]
    fn coxeter_matrices_match_the_two_diagrams() {
        for (key, expected) in [
            (CatalogKey::Cuboctahedron, (3, 4, 2)),
            (CatalogKey::Icosidodecahedron, (3, 5, 2)),
        ] {
            let (_, g, gamma, report) = setup(key);
            let base = appropriate_base_flag(&g, &report).unwrap();
            let gens = distinguished_generators(&g, &gamma, &report, base).unwrap();
            let matrix = coxeter_matrix(&g, &gamma, &gens, &report).unwrap();
            assert_eq!(
                (matrix.order(0, 1), matrix.order(0, 2), matrix.order(1, 2)),
                expected,
                "{key}"
            );
            assert_eq!(matrix.nodes.len(), 3);
            // Involutions on the diagonal.
            assert!(matrix.orders.iter().enumerate().all(|(i, row)| row[i] == 1));
        }
    }

    #[test]
    fn icosidodecahedron_angle_count() {
        let report = angle_sum_check(&AngleCountInput {
            vertex_figure: make(CatalogKey::Icosidodecahedron).unwrap(),
            two_face_size: 4,
            cone_face_size: 5,
        })
        .unwrap();
        assert_eq!(report.vertex_figure_edges, 60);
        assert_eq!(report.face_vertex_ratio, Ratio::from_integer(15));
        assert_eq!(report.cone_count, 12);
        assert!(report.contradiction);
    }

    #[test]
    fn square_vertex_figure_is_exploratory() {
        // A rank-2 vertex figure: the improper polygon is the only 4-gon.
        let report = angle_sum_check(&AngleCountInput {
            vertex_figure: make(CatalogKey::Polygon(4)).unwrap(),
            two_face_size: 4,
            cone_face_size: 4,
        })
        .unwrap();
        assert_eq!(report.face_vertex_ratio, Ratio::from_integer(1));
        assert_eq!(report.cone_count, 1);
        // Equality trips the strict bound, exactly as in the ambient rule.
        assert!(report.contradiction);
    }

    #[test]
    fn absent_cone_size_is_an_argument_error() {
        let result = angle_sum_check(&AngleCountInput {
            vertex_figure: make(CatalogKey::Cuboctahedron).unwrap(),
            two_face_size: 4,
            cone_face_size: 7,
        });
        assert!(matches!(result, Err(Error::ConeSizeAbsent { size: 7 })));
    }

    #[test]
    fn classify_names_dual_outcomes_for_duals() {
        let cubocta = classify(&make(CatalogKey::Cuboctahedron).unwrap()).unwrap();
        let rhombic = classify(&make(CatalogKey::RhombicDodecahedron).unwrap()).unwrap();
        match (&cubocta.verdict, &rhombic.verdict) {
            (
                Verdict::FacetIntransitive { diagram, .. },
                Verdict::VertexIntransitive { dual_diagram, .. },
            ) => assert_eq!(diagram, dual_diagram),
            other => panic!("unexpected verdict pair {other:?}"),
        }
    }

    #[test]
    fn classify_rejects_invalid_lattices() {
        let broken = FaceLattice::from_records(
            0,
            vec![crate::lattice::FaceRecord::new("only", -1)],
            vec![],
        )
        .unwrap();
        assert!(matches!(
            classify(&broken),
            Err(Error::InvalidLattice(_))
        ));
    }

    #[test]
    fn verdict_labels() {
        let c = classify(&make(CatalogKey::Icosidodecahedron).unwrap()).unwrap();
        assert_eq!(c.verdict.outcome_label(), "icosidodecahedron-type (H3)");
        let t = classify(&make(CatalogKey::Tetrahedron).unwrap()).unwrap();
        assert_eq!(t.verdict.outcome_label(), "not-two-orbit (k=1)");
    }

    #[test]
    fn rank_4_quotients_match_no_finite_diagram() {
        // A two-orbit torus quotient is not sphere-like; the generator
        // diagram still verifies (the tail orders, both branch labels, and
        // order 2 off the diagram), but no finite match exists at rank 4.
        use crate::tiling::{build_torus_quotient, TorusFamily};
        let tile_side = build_torus_quotient(TorusFamily::TetOct, 2).unwrap();
        assert!(matches!(
            classify(&tile_side.lattice),
            Err(Error::DiagramMismatch { .. })
        ));
        // The vertex-intransitive dual reaches the same conclusion through
        // its dual.
        let vertex_side = build_torus_quotient(TorusFamily::RhombicDodecahedral, 2).unwrap();
        assert!(matches!(
            classify(&vertex_side.lattice),
            Err(Error::DiagramMismatch { .. })
        ));
    }
}
