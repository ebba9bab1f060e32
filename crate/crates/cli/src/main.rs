use std::fs::File;
use std::io::BufWriter;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use idcode::bounds::evaluate_bounds_with_budget;
use idcode::solver::budget_from_env;
use idcode::{
    best_construction, gamma_id, gamma_tid, generate, parity_shift_code, support_complement_code,
    survey_trees, verify_identifying, verify_td_identifying, ConstructionError, Execution, Family,
    Graph, Method, SolveError, SurveyError, SurveyOptions, VertexSet,
};
use serde_json::{json, Value};

const EXIT_INVALID: u8 = 1;
const EXIT_PRECONDITION: u8 = 2;
const EXIT_PARSE: u8 = 3;
const EXIT_BUDGET: u8 = 4;

/// Identifying codes: verify, solve, construct, generate, bound and survey.
#[derive(Parser)]
#[command(name = "idcode", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a code against a graph.
    Verify {
        file: PathBuf,
        /// Comma-separated vertex ids.
        #[arg(long)]
        code: String,
        /// Also require total domination.
        #[arg(long)]
        total: bool,
    },
    /// Compute the minimum code size exactly.
    Solve {
        file: PathBuf,
        #[arg(long)]
        total: bool,
    },
    /// Build a code with a polynomial construction.
    Construct {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        method: ConstructMethod,
    },
    /// Print a family member as an edge list; `gen corona K FAMILY PARAMS...`
    /// builds the K-corona of another family.
    Gen {
        family: String,
        params: Vec<String>,
    },
    /// Evaluate every bound on a graph.
    Bounds {
        file: PathBuf,
        #[arg(long)]
        exact: bool,
    },
    /// Exhaustive surveys.
    Survey {
        #[command(subcommand)]
        what: SurveyCommand,
    },
}

#[derive(Subcommand)]
enum SurveyCommand {
    /// Every tree of order 3 to N.
    Trees {
        #[arg(long = "max-n")]
        max_n: usize,
        /// CSV output path.
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructMethod {
    ParityShift,
    SupportComplement,
    Auto,
}

struct Failure {
    code: u8,
    message: String,
    report: Option<Value>,
}

impl Failure {
    fn new(code: u8, message: impl ToString) -> Self {
        Failure { code, message: message.to_string(), report: None }
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    Graph::parse_edge_list(&text).map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn parse_code(text: &str, n: usize) -> Result<VertexSet, Failure> {
    let mut code = VertexSet::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let v: usize = part
            .parse()
            .map_err(|_| Failure::new(EXIT_PARSE, format!("bad vertex id {part:?}")))?;
        if v >= n {
            return Err(Failure::new(EXIT_PARSE, format!("vertex {v} out of range for n={n}")));
        }
        code.insert(v);
    }
    Ok(code)
}

fn solve_failure(e: SolveError) -> Failure {
    match e {
        SolveError::BudgetExceeded { ref best, nodes } => Failure {
            code: EXIT_BUDGET,
            message: e.to_string(),
            report: Some(json!({ "best": best, "nodes_explored": nodes, "proven": false })),
        },
        other => Failure::new(EXIT_PRECONDITION, other),
    }
}

fn construction_failure(e: ConstructionError) -> Failure {
    match e {
        ConstructionError::Solver(s) => solve_failure(s),
        e if e.is_precondition() => Failure::new(EXIT_PRECONDITION, e),
        e => Failure::new(EXIT_INVALID, e),
    }
}

fn method_name(m: Method) -> Value {
    serde_json::to_value(m).expect("method serialises")
}

fn parse_params(params: &[String]) -> Result<Vec<usize>, Failure> {
    params
        .iter()
        .map(|p| p.parse().map_err(|_| Failure::new(EXIT_PARSE, format!("bad parameter {p:?}"))))
        .collect()
}

fn family_from(name: &str, params: &[String]) -> Result<Family, Failure> {
    if name == "corona" {
        let [k, inner, rest @ ..] = params else {
            return Err(Failure::new(EXIT_PARSE, "usage: gen corona K FAMILY PARAMS..."));
        };
        let k = parse_params(std::slice::from_ref(k))?[0];
        let inner = family_from(inner, rest)?;
        let inner = generate(&inner).map_err(|e| Failure::new(EXIT_PRECONDITION, e))?;
        return Ok(Family::Corona { inner: Box::new(inner), k });
    }
    Family::parse(name, &parse_params(params)?).map_err(|e| match e {
        idcode::GenError::UnknownFamily(_) => Failure::new(EXIT_PARSE, e),
        e => Failure::new(EXIT_PRECONDITION, e),
    })
}

fn run(cli: Cli) -> Result<String, Failure> {
    let budget = Some(budget_from_env());
    match cli.command {
        Command::Verify { file, code, total } => {
            let g = read_graph(&file)?;
            let code = parse_code(&code, g.n())?;
            let cert = if total { verify_td_identifying(&g, &code) } else { verify_identifying(&g, &code) };
            let report = serde_json::to_value(&cert).expect("certificate serialises");
            if cert.is_valid() {
                Ok(report.to_string())
            } else {
                Err(Failure { code: EXIT_INVALID, message: "code is not valid".into(), report: Some(report) })
            }
        }
        Command::Solve { file, total } => {
            let g = read_graph(&file)?;
            let r = if total { gamma_tid(&g, budget) } else { gamma_id(&g, budget) }.map_err(solve_failure)?;
            Ok(json!({
                "total": total,
                "value": r.value,
                "witness": r.witness,
                "nodes_explored": r.nodes_explored,
            })
            .to_string())
        }
        Command::Construct { file, method } => {
            let g = read_graph(&file)?;
            let (used, code, trace) = match method {
                ConstructMethod::ParityShift => {
                    let p = parity_shift_code(&g).map_err(construction_failure)?;
                    let trace = json!({ "even": p.even, "odd": p.odd });
                    (Method::ParityShift, p.code, trace)
                }
                ConstructMethod::SupportComplement => {
                    let c = support_complement_code(&g).map_err(construction_failure)?;
                    (Method::SupportComplement, c, Value::Null)
                }
                ConstructMethod::Auto => {
                    let (m, c) = best_construction(&g).map_err(construction_failure)?;
                    (m, c, Value::Null)
                }
            };
            let cert = if used == Method::SupportComplement {
                verify_td_identifying(&g, &code)
            } else {
                verify_identifying(&g, &code)
            };
            let report = json!({
                "method": method_name(used),
                "size": code.len(),
                "code": code,
                "verdict": cert.verdict,
                "trace": trace,
            });
            if cert.is_valid() {
                Ok(report.to_string())
            } else {
                Err(Failure { code: EXIT_INVALID, message: "construction is not valid".into(), report: Some(report) })
            }
        }
        Command::Gen { family, params } => {
            let f = family_from(&family, &params)?;
            let g = generate(&f).map_err(|e| Failure::new(EXIT_PRECONDITION, e))?;
            Ok(g.to_edge_list_string().trim_end().to_string())
        }
        Command::Bounds { file, exact } => {
            let g = read_graph(&file)?;
            Ok(evaluate_bounds_with_budget(&g, exact, budget).to_json().to_string())
        }
        Command::Survey { what: SurveyCommand::Trees { max_n, out, sequential } } => {
            let file = File::create(&out)
                .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", out.display())))?;
            let opts = SurveyOptions {
                exec: if sequential { Execution::Sequential } else { Execution::default() },
                budget,
                ..SurveyOptions::up_to(max_n)
            };
            match survey_trees(opts, BufWriter::new(file)) {
                Ok(summary) => Ok(serde_json::to_string(&summary).expect("summary serialises")),
                Err(SurveyError::Solver(e)) => Err(solve_failure(e)),
                Err(e @ SurveyError::Gen(_)) => Err(Failure::new(EXIT_PRECONDITION, e)),
                Err(e @ SurveyError::Io(_)) => Err(Failure::new(EXIT_PARSE, e)),
                Err(e) => Err(Failure::new(EXIT_INVALID, e)),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_PARSE } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            if let Some(report) = f.report {
                println!("{report}");
            }
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
