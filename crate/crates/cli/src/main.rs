//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on domain errors (invalid lattice, wrong
//! class, unreadable input), 2 on usage errors. All output is deterministic;
//! JSON reports carry keys in sorted order so they can serve as golden
//! files.

mod report;

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use twoorbit::tiling::{
    analyze_quotient, build_torus_quotient, growth_closed_form, growth_step,
    normality_crossing, solve_planar_tile_transitive, solve_planar_vertex_transitive,
    GrowthState, TorusFamily,
};
use twoorbit::{classify, make, CatalogKey, Error, FaceLattice};

#[derive(Parser)]
#[command(
    name = "twoorbit",
    about = "Face lattices, flag orbits, and the classification of two-orbit polyhedra and tilings",
    version
)]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check the lattice axioms and list every violation.
    Validate(InputArgs),
    /// Orbit analysis: automorphism group order, flag orbits, class, symbol.
    Analyze(InputArgs),
    /// Classify a lattice against the two-orbit families.
    Classify(InputArgs),
    /// Catalog operations.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Tiling computations.
    #[command(subcommand)]
    Tiling(TilingCommand),
}

#[derive(Args)]
struct InputArgs {
    /// Path of a JSON face-lattice file.
    #[arg(conflicts_with = "catalog", required_unless_present = "catalog")]
    path: Option<String>,

    /// Use a catalog object instead of a file, e.g. `cuboctahedron` or
    /// `cube(4)`.
    #[arg(long)]
    catalog: Option<String>,
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Print the JSON lattice of a catalog object.
    Emit {
        /// Catalog key, e.g. `icosahedron`, `polygon(6)`, `cross(4)`.
        key: String,
    },
    /// List the standard catalog keys.
    List,
}

#[derive(Subcommand)]
enum TilingCommand {
    /// Enumerate the alternating planar valence equations.
    SolvePlanar,
    /// Patch-growth census and totals for the order-5 cubic tiling.
    Growth {
        /// Patch index (1 is the initial twenty-tile patch).
        #[arg(long)]
        n: u64,
    },
    /// Smallest patch whose tile count defeats the normal-tiling volume
    /// bound for tiles of inradius u and circumradius U.
    Crossing {
        /// Inradius (integer or a/b rational).
        #[arg(long = "u")]
        inradius: String,
        /// Circumradius (integer or a/b rational).
        #[arg(long = "U")]
        circumradius: String,
    },
    /// Build a torus quotient of one of the four two-orbit tilings.
    Quotient {
        /// Family: trihexagonal, rhombille, tet-oct, rhombic-dodecahedral.
        #[arg(long)]
        family: String,
        /// Period of the quotient torus.
        #[arg(long)]
        k: u32,
        /// Also run the full orbit analysis.
        #[arg(long)]
        analyze: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(RunError::Domain(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(RunError::Invalid) => ExitCode::from(1),
    }
}

enum RunError {
    /// A domain error with a message for stderr.
    Domain(String),
    /// The report itself tells the story (validation failures).
    Invalid,
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        RunError::Domain(e.to_string())
    }
}

fn run(cli: &Cli) -> Result<(), RunError> {
    match &cli.command {
        Command::Validate(input) => {
            let (name, lattice) = load(input)?;
            let valid = report::validate(&name, &lattice, cli.format == Format::Json);
            if valid {
                Ok(())
            } else {
                Err(RunError::Invalid)
            }
        }
        Command::Analyze(input) => {
            let (name, lattice) = load(input)?;
            report::analyze(&name, &lattice, cli.format == Format::Json).map_err(RunError::from)
        }
        Command::Classify(input) => {
            let (name, lattice) = load(input)?;
            let classification = classify(&lattice)?;
            report::classification(&name, &classification, cli.format == Format::Json);
            Ok(())
        }
        Command::Catalog(CatalogCommand::Emit { key }) => {
            let key = parse_key(key)?;
            let lattice = make(key)?;
            println!("{}", twoorbit::to_json(&lattice));
            Ok(())
        }
        Command::Catalog(CatalogCommand::List) => {
            for key in twoorbit::catalog::standard_keys() {
                println!("{key}");
            }
            Ok(())
        }
        Command::Tiling(TilingCommand::SolvePlanar) => {
            report::planar(
                &solve_planar_vertex_transitive(),
                &solve_planar_tile_transitive(),
                cli.format == Format::Json,
            );
            Ok(())
        }
        Command::Tiling(TilingCommand::Growth { n }) => {
            if *n < 1 {
                return Err(RunError::Domain("patch index starts at 1".into()));
            }
            let mut state = GrowthState::initial();
            let mut total = state.boundary_total();
            for _ in 1..*n {
                state = growth_step(&state);
                total += state.boundary_total();
            }
            let closed = growth_closed_form(*n)?;
            report::growth(&state, &total, &closed, cli.format == Format::Json);
            Ok(())
        }
        Command::Tiling(TilingCommand::Crossing {
            inradius,
            circumradius,
        }) => {
            let u = parse_rational(inradius)?;
            let big_u = parse_rational(circumradius)?;
            let n = normality_crossing(&u, &big_u)?;
            report::crossing(&u, &big_u, n, cli.format == Format::Json);
            Ok(())
        }
        Command::Tiling(TilingCommand::Quotient { family, k, analyze }) => {
            let family: TorusFamily = family
                .parse()
                .map_err(|e: Error| RunError::Domain(e.to_string()))?;
            let quotient = build_torus_quotient(family, *k)?;
            let analysis = if *analyze {
                Some(analyze_quotient(&quotient)?)
            } else {
                None
            };
            report::quotient(&quotient, analysis.as_ref(), cli.format == Format::Json);
            Ok(())
        }
    }
}

fn load(input: &InputArgs) -> Result<(String, FaceLattice), RunError> {
    if let Some(key) = &input.catalog {
        let key = parse_key(key)?;
        return Ok((key.to_string(), make(key)?));
    }
    let path = input.path.as_ref().expect("clap enforces presence");
    let text = std::fs::read_to_string(path)
        .map_err(|e| RunError::Domain(format!("cannot read {path:?}: {e}")))?;
    let lattice =
        twoorbit::from_json(&text).map_err(|e| RunError::Domain(format!("{path}: {e}")))?;
    Ok((path.clone(), lattice))
}

fn parse_key(text: &str) -> Result<CatalogKey, RunError> {
    CatalogKey::from_str(text).map_err(|e| RunError::Domain(e.to_string()))
}

fn parse_rational(text: &str) -> Result<BigRational, RunError> {
    let bad = |_| RunError::Domain(format!("cannot parse rational {text:?}"));
    match text.split_once('/') {
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().map_err(bad)?;
            let d: BigInt = den.trim().parse().map_err(bad)?;
            if d == BigInt::from(0) {
                return Err(RunError::Domain("zero denominator".into()));
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = text.trim().parse().map_err(bad)?;
            Ok(BigRational::from_integer(n))
        }
    }
}
