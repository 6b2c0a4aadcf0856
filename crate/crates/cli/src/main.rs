mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use tutte::catalog::{self, Verdict};
use tutte::engines::{DcOptions, Engine, DEFAULT_BUDGET_NODES};
use tutte::{BiPoly, Error};

use input::{EngineArg, InputArgs, Inputs};

const EXIT_FAILURE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_MISMATCH: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "tutte", version, about = "Exact Tutte polynomials of matroids and graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Args, Debug)]
struct RunArgs {
    /// Engine for matroid, graph and matrix inputs
    #[arg(long, value_enum, default_value = "dc")]
    engine: EngineArg,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads (default: available parallelism)
    #[arg(long)]
    threads: Option<usize>,
    /// Recursion budget for deletion-contraction
    #[arg(long, default_value_t = DEFAULT_BUDGET_NODES)]
    budget_nodes: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the Tutte polynomial
    Compute {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Evaluate the Tutte polynomial at a rational point
    Eval {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        run: RunArgs,
        /// x as an integer or p/q
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        /// y as an integer or p/q
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Browse and verify the catalog of named matroids
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// List all entries
    List {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Show one entry
    Show {
        name: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Recompute entries along every path; `all` verifies the whole catalog
    Verify {
        name: String,
        /// Engines to run on each recipe
        #[arg(long = "engine", value_enum, default_values = ["subset", "dc"])]
        engines: Vec<EngineArg>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET_NODES)]
        budget_nodes: u64,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::UnknownEntry(_) => EXIT_PARSE,
        Error::ResourceBudgetExceeded(_)
        | Error::SizeBudgetExceeded(_)
        | Error::GroundSetTooLarge { .. }
        | Error::GraphTooLarge { .. } => EXIT_BUDGET,
        _ => EXIT_FAILURE,
    }
}

fn set_threads(threads: Option<usize>) -> Result<(), Error> {
    if let Some(t) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Error::InvalidParameters(e.to_string()))?;
    }
    Ok(())
}

fn render(t: &BiPoly, format: Format) -> String {
    match format {
        Format::Text => t.to_text(),
        Format::Json => t.to_json(),
        Format::Latex => t.to_latex(),
    }
}

fn parse_rational(s: &str) -> Result<BigRational, Error> {
    s.trim()
        .parse::<BigRational>()
        .map_err(|e| Error::Parse(format!("invalid rational {s:?}: {e}")))
}

fn polynomial(input: &InputArgs, run: &RunArgs) -> Result<BiPoly, Error> {
    set_threads(run.threads)?;
    Inputs {
        args: input,
        engine: run.engine.into(),
        opts: DcOptions {
            budget_nodes: run.budget_nodes,
            ..DcOptions::default()
        },
    }
    .polynomial()
}

fn catalog_cmd(action: CatalogAction) -> Result<u8, Error> {
    match action {
        CatalogAction::List { format } => {
            if format == Format::Json {
                println!("{}", catalog::to_json());
            } else {
                for e in catalog::entries() {
                    let m = e.build()?;
                    println!(
                        "{:<14} n={:<3} r={:<2} {}",
                        e.name,
                        m.ground_size(),
                        m.full_rank(),
                        e.description
                    );
                }
            }
            Ok(0)
        }
        CatalogAction::Show { name, format } => {
            let e = catalog::lookup(&name)?;
            if format == Format::Json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&e.to_json_value()).expect("entry serializes")
                );
                return Ok(0);
            }
            println!("name:        {}", e.name);
            println!("description: {}", e.description);
            println!("recipe:      {}", e.recipe.to_json());
            for alt in &e.alternative_recipes {
                println!("alternative: {}", alt.to_json());
            }
            for f in &e.formulas {
                println!("formula:     {}", f.label());
            }
            println!("polynomial:  {}", e.ground_truth.to_text());
            println!("provenance:  {}", e.provenance.join("; "));
            let f = &e.flags;
            println!(
                "flags:       self_dual={} sparse_paving={} paving={} fields={}",
                f.self_dual,
                f.sparse_paving,
                f.paving,
                f.representable_fields.as_deref().unwrap_or("unknown")
            );
            if let Some(note) = &e.erratum {
                println!("erratum:     {note}");
            }
            Ok(0)
        }
        CatalogAction::Verify {
            name,
            engines,
            format,
            threads,
            budget_nodes,
        } => {
            set_threads(threads)?;
            let engines: Vec<Engine> = engines.into_iter().map(Engine::from).collect();
            let opts = DcOptions {
                budget_nodes,
                ..DcOptions::default()
            };
            let selected: Vec<&catalog::CatalogEntry> = if name.eq_ignore_ascii_case("all") {
                catalog::entries().iter().collect()
            } else {
                vec![catalog::lookup(&name)?]
            };
            let reports: Vec<catalog::VerifyReport> = selected
                .iter()
                .map(|e| catalog::verify_entry(e, &engines, &opts))
                .collect();
            if format == Format::Json {
                println!("{}", serde_json::to_string_pretty(&reports).expect("reports serialize"));
            } else {
                for r in &reports {
                    match r.verdict {
                        Verdict::Pass => println!("{}: PASS across {} paths", r.name, r.successful_paths()),
                        _ => print!("{}", r.to_text()),
                    }
                }
            }
            let mismatches = reports
                .iter()
                .filter(|r| r.verdict == Verdict::ErratumCandidate)
                .count();
            if reports.len() > 1 {
                let passed = reports.iter().filter(|r| r.verdict == Verdict::Pass).count();
                eprintln!(
                    "{passed}/{} entries pass, {mismatches} erratum candidates",
                    reports.len()
                );
            }
            Ok(if mismatches > 0 { EXIT_MISMATCH } else { 0 })
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Compute { input, run } => {
            let t = polynomial(&input, &run)?;
            println!("{}", render(&t, run.format));
            Ok(0)
        }
        Command::Eval { input, run, x, y } => {
            let (x0, y0) = (parse_rational(&x)?, parse_rational(&y)?);
            let t = polynomial(&input, &run)?;
            let v = t.eval(&x0, &y0);
            match run.format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({ "x": x0.to_string(), "y": y0.to_string(), "value": v.to_string() })
                ),
                Format::Latex if !v.is_integer() => println!("\\frac{{{}}}{{{}}}", v.numer(), v.denom()),
                _ => println!("{v}"),
            }
            Ok(0)
        }
        Command::Catalog { action } => catalog_cmd(action),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
