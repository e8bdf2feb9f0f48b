use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lh_core::basis::{btilde, certify, flatten};
use lh_core::determinant::delta_l;
use lh_core::ideal::{punctured_ideal, tanisaki_dual_generators, tanisaki_e_generators, IdealPresentation};
use lh_core::linalg::{diagram_space, y_free_closure};
use lh_core::operators::{apply, apply_on_subset, oracle_apply, oracle_apply_on_subset};
use lh_core::partition::parse_cell;
use lh_core::symmetric::{sym_poly, SymKind};
use lh_core::verify::{run_suite, Suite, VerifyOptions};
use lh_core::{Context, Error, LatticeDiagram, Partition};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "lh", version, about = "Lattice diagram determinants, their derivative spaces and vanishing ideals")]
struct Cli {
    /// Indent JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<String>,
    /// Report elapsed time (on stderr, and per report for `verify`).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct DiagramArgs {
    /// Partition such as 3,1.
    #[arg(long)]
    mu: Option<String>,
    /// Cell i,j removed from the partition.
    #[arg(long)]
    hole: Option<String>,
    /// Explicit cell list "(p,q);(p,q);...", kept in the given order.
    #[arg(long, alias = "diagram")]
    cells: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    H,
    E,
}

#[derive(Subcommand)]
enum Command {
    /// Print the determinant of a diagram.
    Delta(DiagramArgs),
    /// Apply a symmetric operator combinatorially and by differentiation.
    Apply {
        #[command(flatten)]
        diagram: DiagramArgs,
        /// p:k, e:k, h:k or s:λ (e.g. s:2,1).
        #[arg(long)]
        op: String,
        /// Restrict the operator to these 1-based variables.
        #[arg(long)]
        vars: Option<String>,
    },
    /// List ideal generators.
    Ideal {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        hole: Option<String>,
        #[arg(long, value_enum, default_value = "h")]
        form: Form,
    },
    /// Dimensions of the derivative space of a diagram.
    Space {
        #[command(flatten)]
        diagram: DiagramArgs,
        /// Only the y-free component.
        #[arg(long)]
        y_free: bool,
    },
    /// Hilbert function of the quotient by an ideal.
    Hilbert {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        hole: Option<String>,
        #[arg(long, value_enum, default_value = "h")]
        form: Form,
    },
    /// The independent set built from slid standard tableaux.
    Basis {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        hole: String,
        /// Certify independence and spanning against the derivative space.
        #[arg(long)]
        check: bool,
    },
    /// Run a verification suite and emit one JSON report per instance.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        /// Worker threads; output order never depends on it.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::QuotientNotFinite { .. } | Error::Certification(_) => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

struct Outcome {
    text: String,
    pass: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli);
    if cli.timing {
        eprintln!("elapsed: {} ms", start.elapsed().as_millis());
    }
    match result {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => fs::write(path, &out.text),
                None => io::stdout().write_all(out.text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(EXIT_USAGE);
            }
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAIL)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}

fn degree_cap() -> Result<Option<usize>, Failure> {
    match std::env::var("LH_DEGREE_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Failure::Usage(format!("LH_DEGREE_CAP must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

fn render(v: &Value, pretty: bool) -> String {
    let mut s = if pretty { serde_json::to_string_pretty(v) } else { serde_json::to_string(v) }.expect("serializable");
    s.push('\n');
    s
}

fn single(v: Value, pretty: bool) -> Outcome {
    Outcome { text: render(&v, pretty), pass: true }
}

fn partition(s: &str) -> Result<Partition, Failure> {
    Ok(s.parse::<Partition>()?)
}

fn hole(s: &Option<String>) -> Result<Option<(usize, usize)>, Failure> {
    s.as_deref().map(parse_cell).transpose().map_err(Failure::from)
}

fn diagram(args: &DiagramArgs) -> Result<LatticeDiagram, Failure> {
    match (&args.mu, &args.cells) {
        (Some(_), Some(_)) => Err(Failure::Usage("give either --mu or --cells, not both".into())),
        (None, None) => Err(Failure::Usage("a diagram is required: --mu [--hole] or --cells".into())),
        (None, Some(cells)) => {
            if args.hole.is_some() {
                return Err(Failure::Usage("--hole needs --mu".into()));
            }
            let d: LatticeDiagram = cells.parse()?;
            if d.is_empty() {
                return Err(Failure::Usage("empty diagram".into()));
            }
            Ok(d)
        }
        (Some(mu), None) => {
            let mu = partition(mu)?;
            match hole(&args.hole)? {
                Some((i, j)) => Ok(mu.remove_cell(i, j)?),
                None => Ok(mu.ferrers()),
            }
        }
    }
}

fn rule(op: &SymKind) -> &'static str {
    match op {
        SymKind::Power(_) => "p_k: one cell moves down k rows",
        SymKind::Elementary(_) => "e_k: k distinct cells each move down one row",
        SymKind::Complete(_) => "h_k: holes of the complement move up",
        SymKind::Schur(_) => "s_lambda: column-strict tableaux, columns right to left",
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let pretty = cli.pretty;
    match &cli.command {
        Command::Delta(args) => {
            let l = diagram(args)?;
            let ctx = Context::new(l.len());
            let p = delta_l(ctx, &l)?;
            Ok(single(json!({ "diagram": l.to_string(), "display": p.to_string(), "polynomial": p }), pretty))
        }
        Command::Apply { diagram: args, op, vars } => {
            let l = diagram(args)?;
            let ctx = Context::new(l.len());
            let kind: SymKind = op.parse()?;
            let value = match vars {
                None => {
                    let all: Vec<usize> = (0..ctx.n()).collect();
                    let combinatorial = apply(&l, &kind)?;
                    let oracle = oracle_apply(ctx, &sym_poly(ctx, &kind, &all)?, &l)?;
                    let agree = combinatorial.to_polynomial(ctx)? == oracle;
                    json!({
                        "op": kind.to_string(),
                        "rule": rule(&kind),
                        "diagram": l.to_string(),
                        "combinatorial": combinatorial,
                        "oracle": oracle,
                        "oracle_display": oracle.to_string(),
                        "agree": agree,
                    })
                }
                Some(vs) => {
                    let s = parse_vars(vs)?;
                    let combinatorial = apply_on_subset(ctx, &l, &kind, &s)?;
                    let oracle = oracle_apply_on_subset(ctx, &l, &kind, &s)?;
                    let agree = combinatorial.to_polynomial(ctx)? == oracle;
                    json!({
                        "op": kind.to_string(),
                        "rule": "Laplace blocks along the chosen variables",
                        "diagram": l.to_string(),
                        "vars": s.iter().map(|v| v + 1).collect::<Vec<_>>(),
                        "combinatorial": combinatorial,
                        "oracle": oracle,
                        "oracle_display": oracle.to_string(),
                        "agree": agree,
                    })
                }
            };
            let pass = value["agree"] == json!(true);
            Ok(Outcome { text: render(&value, pretty), pass })
        }
        Command::Ideal { mu, hole: h, form } => {
            let ideal = ideal(mu, h, *form)?;
            Ok(single(serde_json::to_value(&ideal).expect("serializable"), pretty))
        }
        Command::Space { diagram: args, y_free } => {
            let l = diagram(args)?;
            let ctx = Context::new(l.len());
            let space = if *y_free { y_free_closure(ctx, &l)? } else { diagram_space(ctx, &l)? };
            let table: Vec<[usize; 3]> =
                space.bigraded_dims().into_iter().map(|((a, b), d)| [a as usize, b as usize, d]).collect();
            Ok(single(
                json!({
                    "diagram": l.to_string(),
                    "y_free": y_free,
                    "dim": space.dim(),
                    "bigraded": table,
                    "x_degree_dims": space.x_degree_dims(),
                }),
                pretty,
            ))
        }
        Command::Hilbert { mu, hole: h, form } => {
            let ideal = ideal(mu, h, *form)?;
            let graded = ideal.graded(degree_cap()?)?;
            Ok(single(
                json!({
                    "mu": mu,
                    "hole": h,
                    "hilbert_function": graded.hilbert_function(),
                    "quotient_dim": graded.quotient_dim(),
                }),
                pretty,
            ))
        }
        Command::Basis { mu, hole: h, check } => {
            let mu_p = partition(mu)?;
            let (i, j) = parse_cell(h)?;
            let parts = btilde(&mu_p, i, j)?;
            let mut value = json!({ "mu": mu, "hole": [i, j], "parts": parts });
            let mut pass = true;
            if *check {
                let ctx = Context::new(mu_p.size() - 1);
                let space = y_free_closure(ctx, &mu_p.remove_cell(i, j)?)?;
                let cert = certify(ctx, flatten(&parts), &space);
                pass = cert.is_basis();
                value["certificate"] = serde_json::to_value(&cert).expect("serializable");
                value["is_basis"] = json!(pass);
            }
            Ok(Outcome { text: render(&value, pretty), pass })
        }
        Command::Verify { suite, n_max, jobs } => {
            let opts = VerifyOptions { n_max: *n_max, jobs: (*jobs).max(1), degree_cap: degree_cap()?, timing: cli.timing };
            let reports = run_suite(*suite, &opts)?;
            let mut text = String::new();
            for r in &reports {
                text.push_str(&render(&serde_json::to_value(r).expect("serializable"), pretty));
            }
            Ok(Outcome { text, pass: reports.iter().all(|r| r.pass) })
        }
    }
}

fn parse_vars(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|t| match t.trim().parse::<usize>() {
            Ok(v) if v >= 1 => Ok(v - 1),
            _ => Err(Failure::Usage(format!("malformed --vars {s:?}; expected 1-based indices such as 1,3"))),
        })
        .collect()
}

fn ideal(mu: &str, h: &Option<String>, form: Form) -> Result<IdealPresentation, Failure> {
    let mu = partition(mu)?;
    match (hole(h)?, form) {
        (None, Form::H) => Ok(tanisaki_dual_generators(&mu)?),
        (None, Form::E) => Ok(tanisaki_e_generators(&mu)?),
        (Some((i, j)), Form::H) => Ok(punctured_ideal(&mu, i, j)?),
        (Some(_), Form::E) => Err(Failure::Usage("--form e applies only without --hole".into())),
    }
}
