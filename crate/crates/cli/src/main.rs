use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use coxeter_ehrhart::egf::StructureKind;
use coxeter_ehrhart::oracle::DEFAULT_MAX_BOX;
use coxeter_ehrhart::tables::Table;
use coxeter_ehrhart::RootFamily;
use coxeter_ehrhart_cli::commands::{self, CommandError, Options, Route, Variant};
use coxeter_ehrhart_cli::ResultDocument;

/// Ehrhart quasipolynomials of Coxeter permutahedra and almost-integral zonotopes.
///
/// Systems are given by family and number of coordinates: `A 3` is the rank-2
/// system A_2 in R^3, while `B 3`, `C 3` and `D 3` have rank 3.
#[derive(Parser, Debug)]
#[command(name = "coxeter-ehrhart", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Check evaluations against a brute-force lattice-point count.
    #[arg(long, global = true)]
    verify: bool,
    /// Largest bounding box, in candidate points, the brute-force counter will scan.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_BOX as u64)]
    max_box: u64,
    /// Truncation order of power series (defaults to the largest n needed).
    #[arg(long, global = true)]
    order: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    Standard,
    Integral,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RouteArg {
    Forest,
    Generic,
    Egf,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Standard => Variant::Standard,
            VariantArg::Integral => Variant::Integral,
        }
    }
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Self {
        match r {
            RouteArg::Forest => Route::Forest,
            RouteArg::Generic => Route::Generic,
            RouteArg::Egf => Route::Egf,
        }
    }
}

fn parse_family(s: &str) -> Result<RootFamily, String> {
    s.parse().map_err(|e: coxeter_ehrhart::Error| e.to_string())
}

fn parse_table(s: &str) -> Result<Table, String> {
    s.parse().map_err(|e: coxeter_ehrhart::Error| e.to_string())
}

fn parse_kind(s: &str) -> Result<StructureKind, String> {
    s.parse().map_err(|e: coxeter_ehrhart::Error| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ehrhart (quasi)polynomial of a Coxeter permutahedron.
    Ehrhart {
        #[arg(value_parser = parse_family)]
        family: RootFamily,
        /// Number of coordinates.
        n: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::Standard)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = RouteArg::Forest)]
        route: RouteArg,
        /// Dilation factors to evaluate, comma separated.
        #[arg(long = "t", value_delimiter = ',')]
        t: Vec<u64>,
    },
    /// Recompute a published table and compare row by row.
    Tables {
        /// table1 (integral) or table2 (standard, non-integral).
        #[arg(value_parser = parse_table)]
        which: Table,
    },
    /// Ehrhart quasipolynomial of an almost-integral zonotope read from a JSON file.
    Zonotope {
        input: String,
        #[arg(long = "t", value_delimiter = ',')]
        t: Vec<u64>,
    },
    /// Counts of labeled connected structures from their generating functions.
    Sequences {
        /// tree, pseudotree, signed_tree, signed_halfedge_tree, signed_loop_tree or signed_pseudotree.
        #[arg(value_parser = parse_kind)]
        kind: StructureKind,
        nmax: usize,
    },
    /// Number of lattice points in one dilate.
    Count {
        #[arg(value_parser = parse_family)]
        family: RootFamily,
        n: usize,
        #[arg(long = "t")]
        t: u64,
        #[arg(long, value_enum, default_value_t = VariantArg::Standard)]
        variant: VariantArg,
        /// Also count by scanning the bounding box.
        #[arg(long)]
        oracle: bool,
    },
    /// List the positive roots and the standard shift.
    Roots {
        #[arg(value_parser = parse_family)]
        family: RootFamily,
        n: usize,
    },
}

fn run(cli: &Cli) -> Result<ResultDocument, CommandError> {
    let opts = Options { verify: cli.verify, max_box: u128::from(cli.max_box), order: cli.order };
    match &cli.command {
        Command::Ehrhart { family, n, variant, route, t } => {
            commands::ehrhart(*family, *n, (*variant).into(), (*route).into(), t, &opts)
        }
        Command::Tables { which } => commands::tables(*which),
        Command::Zonotope { input, t } => {
            let text = fs::read_to_string(input).map_err(|e| CommandError::Input(format!("{input}: {e}")))?;
            commands::zonotope(input, &text, t, &opts)
        }
        Command::Sequences { kind, nmax } => commands::sequences(*kind, *nmax, &opts),
        Command::Count { family, n, t, variant, oracle } => {
            commands::count(*family, *n, (*variant).into(), *t, *oracle, &opts)
        }
        Command::Roots { family, n } => commands::roots(*family, *n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(doc) => {
            let text = match cli.format {
                Format::Human => doc.to_human(),
                Format::Json => doc.to_json(),
                Format::Csv => doc.to_csv(),
            };
            print!("{text}");
            if doc.agreement == Some(false) {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
