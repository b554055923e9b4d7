//! Report rendering. Text reports are line-oriented and deterministic; JSON
//! reports keep keys in sorted order so byte-for-byte golden comparisons
//! work.

use num_bigint::BigUint;
use num_rational::BigRational;
use serde::Serialize;
use twoorbit::tiling::{GrowthState, PlanarSolution, TorusQuotient};
use twoorbit::{
    automorphism_group, orbit_report, Classification, Error, FaceLattice, FlagGraph, OrbitReport,
    Verdict,
};

fn emit<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serialization")
    );
}

fn face_counts(lattice: &FaceLattice) -> Vec<usize> {
    lattice.proper_face_counts()
}

#[derive(Serialize)]
struct ValidateReport {
    faces_by_rank: Vec<usize>,
    object: String,
    rank: i32,
    valid: bool,
    violations: Vec<String>,
}

pub fn validate(name: &str, lattice: &FaceLattice, json: bool) -> bool {
    let result = lattice.validate();
    if json {
        emit(&ValidateReport {
            faces_by_rank: face_counts(lattice),
            object: name.to_string(),
            rank: lattice.rank(),
            valid: result.is_valid(),
            violations: result.violations.iter().map(|v| v.to_string()).collect(),
        });
    } else {
        println!("object: {name}");
        println!("rank: {}", lattice.rank());
        println!("faces by rank: {:?}", face_counts(lattice));
        if result.is_valid() {
            println!("all axioms hold");
        } else {
            println!("{} violation(s):", result.violations.len());
            for v in &result.violations {
                println!("  [{}] {v}", v.axiom());
            }
        }
    }
    result.is_valid()
}

#[derive(Serialize)]
struct AnalyzeReport {
    class: Option<String>,
    faces_by_rank: Vec<usize>,
    flag_count: usize,
    flag_orbits: usize,
    group_order: usize,
    object: String,
    rank: i32,
    symbol: String,
    transitive_ranks: Vec<i32>,
}

fn transitive_ranks(report: &OrbitReport) -> Vec<i32> {
    report
        .transitivity
        .iter()
        .enumerate()
        .filter(|(_, &t)| t)
        .map(|(i, _)| i as i32)
        .collect()
}

pub fn analyze(name: &str, lattice: &FaceLattice, json: bool) -> Result<(), Error> {
    let validation = lattice.validate();
    if !validation.is_valid() {
        return Err(Error::InvalidLattice(
            validation.violated_axioms().join(", "),
        ));
    }
    let graph = FlagGraph::build(lattice)?;
    let group = automorphism_group(&graph);
    let report = orbit_report(lattice, &graph, &group)?;
    if json {
        emit(&AnalyzeReport {
            class: report.class_ranks.as_ref().map(|_| report.class_label()),
            faces_by_rank: face_counts(lattice),
            flag_count: report.flag_count,
            flag_orbits: report.orbit_count,
            group_order: report.group_order,
            object: name.to_string(),
            rank: lattice.rank(),
            symbol: report.symbol.to_string(),
            transitive_ranks: transitive_ranks(&report),
        });
    } else {
        println!("object: {name}");
        println!("rank: {}", lattice.rank());
        println!("faces by rank: {:?}", face_counts(lattice));
        println!("flags: {}", report.flag_count);
        println!("automorphism group order: {}", report.group_order);
        println!("flag orbits: {}", report.orbit_count);
        if report.orbit_count == 2 {
            println!("class: {}", report.class_label());
        }
        println!("transitive on ranks: {:?}", transitive_ranks(&report));
        if lattice.rank() >= 2 {
            println!("symbol: {}", report.symbol);
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct ClassifyReport {
    class: Option<String>,
    coxeter: Option<String>,
    expected_group_order: Option<usize>,
    group_order: usize,
    object: String,
    outcome: String,
    refutation: Option<String>,
    symbol: String,
    witness_size: Option<usize>,
}

pub fn classification(name: &str, classification: &Classification, json: bool) {
    let report = &classification.report;
    let verdict = &classification.verdict;
    let (coxeter, expected_order, witness_size, refutation) = match verdict {
        Verdict::FacetIntransitive {
            matrix, witness, diagram,
        } => (
            Some(matrix.summary()),
            Some(diagram.group_order()),
            Some(witness.pairs().len()),
            None,
        ),
        Verdict::VertexIntransitive {
            witness,
            dual_diagram,
        } => (
            None,
            Some(dual_diagram.group_order()),
            Some(witness.pairs().len()),
            None,
        ),
        Verdict::Rank4Exceptional { refutation } => {
            (None, None, None, Some(refutation.to_string()))
        }
        Verdict::NotTwoOrbit { .. } => (None, None, None, None),
    };
    if json {
        emit(&ClassifyReport {
            class: report.class_ranks.as_ref().map(|_| report.class_label()),
            coxeter: coxeter.clone(),
            expected_group_order: expected_order,
            group_order: report.group_order,
            object: name.to_string(),
            outcome: verdict.outcome_label(),
            refutation: refutation.clone(),
            symbol: report.symbol.to_string(),
            witness_size,
        });
        return;
    }
    println!("object: {name}");
    println!("verdict: {}", verdict.outcome_label());
    if report.orbit_count == 2 {
        println!("class: {}", report.class_label());
    }
    if !report.symbol.entries.is_empty() {
        println!("symbol: {}", report.symbol);
    }
    println!("automorphism group order: {}", report.group_order);
    if let Some(orders) = coxeter {
        println!("coxeter orders: {orders}");
    }
    if let Some(expected) = expected_order {
        println!("expected order for this diagram: {expected}");
    }
    if let Some(size) = witness_size {
        println!("witness: isomorphism onto the catalog polyhedron ({size} faces matched)");
    }
    if let Some(r) = refutation {
        println!("refutation: {r}");
    }
}

#[derive(Serialize)]
struct PlanarReportEntry {
    cycle: String,
    two_orbit: bool,
}

#[derive(Serialize)]
struct PlanarReport {
    tile_transitive: Vec<PlanarReportEntry>,
    vertex_transitive: Vec<PlanarReportEntry>,
}

pub fn planar(vertex: &[PlanarSolution], tile: &[PlanarSolution], json: bool) {
    let entry = |s: &PlanarSolution| PlanarReportEntry {
        cycle: s.cycle_label(),
        two_orbit: s.two_orbit,
    };
    if json {
        emit(&PlanarReport {
            tile_transitive: tile.iter().map(entry).collect(),
            vertex_transitive: vertex.iter().map(entry).collect(),
        });
        return;
    }
    println!("vertex-transitive solutions (tile sizes around a vertex):");
    for s in vertex {
        println!(
            "  {} {}",
            s.cycle_label(),
            if s.two_orbit { "two-orbit" } else { "regular" }
        );
    }
    println!("tile-transitive solutions (vertex valences around a tile):");
    for s in tile {
        println!(
            "  {} {}",
            s.cycle_label(),
            if s.two_orbit { "two-orbit" } else { "regular" }
        );
    }
}

#[derive(Serialize)]
struct GrowthReport {
    boundary_total: String,
    closed_form_total: String,
    n: u64,
    one_face_tiles: String,
    patch_total: String,
    three_face_tiles: String,
    two_face_tiles: String,
}

pub fn growth(state: &GrowthState, patch_total: &BigUint, closed: &BigUint, json: bool) {
    if json {
        emit(&GrowthReport {
            boundary_total: state.boundary_total().to_string(),
            closed_form_total: closed.to_string(),
            n: state.n,
            one_face_tiles: state.one_face.to_string(),
            patch_total: patch_total.to_string(),
            three_face_tiles: state.three_face.to_string(),
            two_face_tiles: state.two_face.to_string(),
        });
        return;
    }
    println!("patch n = {}", state.n);
    println!(
        "a={} b={} c={} total={}",
        state.one_face, state.two_face, state.three_face, patch_total
    );
    println!(
        "closed form total: {closed} ({})",
        if closed == patch_total {
            "matches recurrence"
        } else {
            "MISMATCH against recurrence"
        }
    );
}

#[derive(Serialize)]
struct CrossingReport {
    circumradius: String,
    crossing_n: u64,
    inradius: String,
}

pub fn crossing(u: &BigRational, big_u: &BigRational, n: u64, json: bool) {
    if json {
        emit(&CrossingReport {
            circumradius: big_u.to_string(),
            crossing_n: n,
            inradius: u.to_string(),
        });
        return;
    }
    println!("inradius u = {u}, circumradius U = {big_u}");
    println!("patch totals exceed the (2nU)^3/u^3 volume bound first at n = {n}");
}

#[derive(Serialize)]
struct QuotientReport {
    analysis: Option<QuotientAnalysis>,
    faces_by_rank: Vec<usize>,
    family: String,
    period: u32,
    rank: i32,
    valid: bool,
}

#[derive(Serialize)]
struct QuotientAnalysis {
    class: Option<String>,
    expected_class: String,
    expected_symbol: String,
    flag_orbits: usize,
    group_order: usize,
    symbol: String,
}

fn expected_class_label(family: twoorbit::tiling::TorusFamily) -> String {
    let ranks: Vec<String> = family
        .expected_class()
        .iter()
        .map(|r| r.to_string())
        .collect();
    format!("2_{{{}}}", ranks.join(","))
}

fn expected_symbol_label(family: twoorbit::tiling::TorusFamily) -> String {
    let entries: Vec<String> = family
        .expected_symbol()
        .iter()
        .map(|sizes| {
            sizes
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join("|")
        })
        .collect();
    format!("{{{}}}", entries.join(","))
}

pub fn quotient(quotient: &TorusQuotient, analysis: Option<&OrbitReport>, json: bool) {
    let lattice = &quotient.lattice;
    if json {
        emit(&QuotientReport {
            analysis: analysis.map(|report| QuotientAnalysis {
                class: report.class_ranks.as_ref().map(|_| report.class_label()),
                expected_class: expected_class_label(quotient.family),
                expected_symbol: expected_symbol_label(quotient.family),
                flag_orbits: report.orbit_count,
                group_order: report.group_order,
                symbol: report.symbol.to_string(),
            }),
            faces_by_rank: face_counts(lattice),
            family: quotient.family.to_string(),
            period: quotient.period,
            rank: lattice.rank(),
            valid: true,
        });
        return;
    }
    println!("family: {}", quotient.family);
    println!("period: {}", quotient.period);
    println!("rank: {}", lattice.rank());
    println!("faces by rank: {:?}", face_counts(lattice));
    println!("all axioms hold");
    if let Some(report) = analysis {
        println!("flags: {}", report.flag_count);
        println!("automorphism group order: {}", report.group_order);
        println!("flag orbits: {}", report.orbit_count);
        if report.orbit_count == 2 {
            println!("class: {}", report.class_label());
        }
        println!("symbol: {}", report.symbol);
        println!(
            "expected for the infinite tiling: class {}, symbol {}",
            expected_class_label(quotient.family),
            expected_symbol_label(quotient.family)
        );
    }
}
