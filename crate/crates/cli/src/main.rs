use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use yoneda_cps::decide::{self, Side};
use yoneda_cps::ext::{self, ExtClass};
use yoneda_cps::leading::{leading_words, parse_polynomial_input};
use yoneda_cps::oracle;
use yoneda_cps::walks::{self, is_decomposable, Walk};
use yoneda_cps::{parse_presentation, CpsGraph, Presentation};

const CAP_VAR: &str = "YONEDA_CPS_MAX_WALK_CAP";

#[derive(Parser, Debug)]
#[command(name = "yoneda-cps", version, about = "Yoneda algebras of monomial algebras via the CPS graph")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full report: dimensions, finite generation, Noetherianity.
    Analyze(Input),
    /// The CPS graph.
    Graph {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Anchored-walk basis of Ext^i for i up to the given degree.
    ExtBasis {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        max_degree: usize,
    },
    /// Yoneda product of two classes, each given as a walk like `[c,ab,cd]` or `0`.
    Multiply {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
    },
    /// Is Ext finitely generated?
    DecideFg(Input),
    /// Is Ext Noetherian on the given side?
    DecideNoetherian {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        side: Side,
    },
    /// Hilbert series of Ext: bigraded table and rational form.
    Series {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 10)]
        truncate: usize,
    },
    /// Compare walk counts with Betti numbers of a minimal resolution.
    Validate {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = oracle::DEFAULT_MAX_I)]
        max_i: usize,
        #[arg(long, default_value_t = oracle::DEFAULT_MAX_J)]
        max_j: usize,
        /// Characteristic of the coefficient field (a prime).
        #[arg(long = "char", default_value_t = 2)]
        field_char: u32,
    },
}

#[derive(clap::Args, Debug)]
struct Input {
    /// JSON presentation; `-` or absent reads standard input.
    path: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Dot,
    Json,
}

/// A loaded presentation, with the leading-word caveat when it came from
/// polynomial input.
struct Loaded {
    graph: CpsGraph,
    caveat: Option<&'static str>,
}

fn load(input: &Input) -> anyhow::Result<Loaded> {
    let source = match input.path.as_deref() {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?
        }
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading standard input")?;
            s
        }
    };
    let is_polynomial = serde_json::from_str::<Value>(&source)
        .map(|v| v.get("polynomials").is_some())
        .unwrap_or(false);
    let (presentation, caveat): (Presentation, _) = if is_polynomial {
        let input = parse_polynomial_input(&source)?;
        let report = leading_words(input.alphabet, &input.polynomials, &input.order)?;
        eprintln!("warning: leading words taken as relations; {}", report.caveat);
        (report.presentation, Some(report.caveat))
    } else {
        (parse_presentation(&source)?, None)
    };
    Ok(Loaded {
        graph: CpsGraph::from_presentation(presentation),
        caveat,
    })
}

fn walk_cap() -> anyhow::Result<usize> {
    match std::env::var(CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("{CAP_VAR} must be a non-negative integer, got {v:?}")),
        Err(_) => Ok(walks::DEFAULT_WALK_CAP),
    }
}

/// `[c, ab, cd]`, `["c","ab"]`, `c,ab` or `0`.
fn parse_class(g: &CpsGraph, s: &str) -> anyhow::Result<Option<ExtClass>> {
    let t = s.trim();
    if t == "0" {
        return Ok(None);
    }
    let inner = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')).unwrap_or(t);
    let words: Vec<&str> = inner
        .split(',')
        .map(|w| w.trim().trim_matches('"'))
        .filter(|w| !w.is_empty())
        .collect();
    if words.is_empty() {
        bail!("empty walk {s:?}");
    }
    let walk = Walk::from_display(g, &words)?;
    Ok(Some(ExtClass::from_walk(g, &walk)?))
}

fn print_json(v: &impl serde::Serialize) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v)?;
    writeln!(out)?;
    Ok(())
}

/// Exit status of a command that ran to completion.
enum Outcome {
    Ok,
    Mismatch,
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    if let Some(n) = cli.jobs {
        if n == 0 {
            bail!("--jobs must be at least 1");
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    match cli.command {
        Command::Analyze(input) => {
            let loaded = load(&input)?;
            eprintln!("analyzing graph with {} vertices", loaded.graph.vertex_count());
            let mut report = decide::analyze_graph(&loaded.graph)?;
            if let Some(c) = loaded.caveat {
                report.notes.push(format!("relations are leading words: {c}"));
            }
            print_json(&report)?;
        }
        Command::Graph { input, format } => {
            let g = load(&input)?.graph;
            match format {
                Format::Dot => print!("{}", g.to_dot()),
                Format::Json => print_json(&json!({ "graph": g.to_export(), "params": g.params() }))?,
            }
        }
        Command::ExtBasis { input, max_degree } => {
            let g = load(&input)?.graph;
            let cap = walk_cap()?;
            let mut classes = vec![json!({ "walk": [], "i": 0, "j": 0, "indecomposable": false })];
            if max_degree > 0 {
                let layers = walks::enumerate_anchored(&g, max_degree - 1, cap)?;
                for w in layers.into_iter().flatten() {
                    let indecomposable = w.is_empty() || !is_decomposable(&g, &w)?;
                    let c = ExtClass::new(w).to_export(&g);
                    classes.push(json!({ "walk": c.walk, "i": c.i, "j": c.j, "indecomposable": indecomposable }));
                }
            }
            eprintln!("{} basis classes", classes.len());
            print_json(&json!({ "max_degree": max_degree, "classes": classes }))?;
        }
        Command::Multiply { input, left, right } => {
            let g = load(&input)?.graph;
            let product = match (parse_class(&g, &left)?, parse_class(&g, &right)?) {
                (Some(p), Some(q)) => ext::yoneda_mul(&g, &p, &q)?,
                _ => None,
            };
            match product {
                Some(c) => print_json(&c.to_export(&g))?,
                None => println!("0"),
            }
        }
        Command::DecideFg(input) => {
            let g = load(&input)?.graph;
            print_json(&decide::finitely_generated(&g)?)?;
        }
        Command::DecideNoetherian { input, side } => {
            let g = load(&input)?.graph;
            print_json(&decide::noetherian(&g, side))?;
        }
        Command::Series { input, truncate } => {
            let g = load(&input)?.graph;
            let table = ext::poincare_table(&g, truncate);
            let totals: Vec<String> = ext::series_coefficients(&g, truncate).iter().map(ToString::to_string).collect();
            print_json(&json!({
                "truncate": truncate,
                "table": table.to_export(),
                "totals": totals,
                "rational": ext::hilbert_series(&g).to_export(),
            }))?;
        }
        Command::Validate { input, max_i, max_j, field_char } => {
            if field_char < 2 || (2..field_char).take_while(|d| d * d <= field_char).any(|d| field_char % d == 0) {
                bail!("--char must be a prime, got {field_char}");
            }
            let g = load(&input)?.graph;
            eprintln!("resolving over GF({field_char}) up to i = {max_i}, j = {max_j}");
            let table = oracle::minimal_resolution(g.ideal(), field_char, max_i, max_j);
            let mismatches = oracle::cross_validate(&g, &table);
            print_json(&json!({ "max_i": max_i, "max_j": max_j, "field_char": field_char, "mismatches": mismatches }))?;
            if !mismatches.is_empty() {
                eprintln!("{} mismatches", mismatches.len());
                return Ok(Outcome::Mismatch);
            }
        }
    }
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            let internal = e
                .downcast_ref::<yoneda_cps::Error>()
                .is_some_and(|e| !e.is_input_error());
            ExitCode::from(if internal { 2 } else { 1 })
        }
    }
}
