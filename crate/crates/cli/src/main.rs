//! `pathfactor`: analyze graphs for path-factor existence, coveredness and
//! uniformity; evaluate the sufficient-condition hypotheses; validate the
//! criteria against brute force; reproduce the sharpness constructions.
//!
//! Exit codes: 0 = verdict computed, 1 = input error,
//! 2 = internal inconsistency (criterion vs oracle), 3 = budget exhausted.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use pathfactor_core::criteria::{
    covered_check_bruteforce, covered_check_criterion, is_uniform, CriteriaError, UniformRoute,
};
use pathfactor_core::factor::{find_p3_factor, SearchOptions};
use pathfactor_core::families;
use pathfactor_core::formats::{parse_edge_list, parse_graph6, to_graph6};
use pathfactor_core::graph::Graph;
use pathfactor_core::harness::{
    self, remark1_demo, remark2_demo, validate, DemoMode, GraphScope, HarnessError, TheoremSpec,
};
use pathfactor_core::params::{
    check_thm13_hypothesis, check_thm14_hypothesis, edge_connectivity_at_least,
    independence_number, min_degree, vertex_connectivity, Thm14Params,
};
use pathfactor_core::rational::ExactRational;

#[derive(Parser)]
#[command(name = "pathfactor", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Analyze graphs from a file: parameters, factor existence,
    /// coveredness, uniformity. One JSON object per graph.
    Analyze {
        /// Input path, or `-` for stdin.
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Auto)]
        format: Format,
        /// Node budget for the factor searches (omit for unlimited).
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Evaluate a theorem hypothesis on one graph.
    Check {
        #[command(subcommand)]
        which: CheckCmd,
    },
    /// Validate a theorem over an exhaustive or random graph scope.
    Validate {
        theorem: TheoremName,
        /// Largest order (exhaustive mode) or top of the random range.
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        /// Bottom of the random range (defaults to nmax).
        #[arg(long)]
        nmin: Option<usize>,
        /// Sample COUNT random graphs per order instead of exhausting.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge probability for random mode, as a fraction.
        #[arg(long, default_value = "1/2")]
        p: String,
        /// k parameter (thm14).
        #[arg(long)]
        k: Option<usize>,
        /// γ parameter (thm14), as a fraction in [1/3, 1].
        #[arg(long)]
        gamma: Option<String>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Reproduce a sharpness construction and assert its identities.
    Demo {
        #[command(subcommand)]
        which: DemoCmd,
    },
    /// Generate a graph and print it as graph6.
    Gen {
        #[command(subcommand)]
        which: GenCmd,
    },
}

#[derive(Subcommand)]
enum CheckCmd {
    /// 2-edge-connectivity and the minimum-degree bound.
    Thm13 { input: String },
    /// Connectivity, order and neighborhood bounds for given k, γ.
    Thm14 {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        gamma: String,
        input: String,
    },
}

#[derive(Subcommand)]
enum DemoCmd {
    Remark1 {
        #[arg(long, default_value_t = 0)]
        t: usize,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
    },
    Remark2 {
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
    },
}

#[derive(Subcommand)]
enum GenCmd {
    Remark1 {
        #[arg(long, default_value_t = 0)]
        t: usize,
    },
    Remark2 {
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// A standard family: `complete:N`, `path:N`, `cycle:N`,
    /// `bipartite:M,N`, or `copies:M,<spec>`.
    Family { spec: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Auto,
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremName {
    Thm11,
    Thm12,
    Thm13,
    Thm14,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Auto,
    Full,
    WitnessOnly,
}

impl From<Mode> for DemoMode {
    fn from(m: Mode) -> DemoMode {
        match m {
            Mode::Auto => DemoMode::Auto,
            Mode::Full => DemoMode::Full,
            Mode::WitnessOnly => DemoMode::WitnessOnly,
        }
    }
}

enum CliError {
    /// Bad input or parameters → exit 1.
    Input(String),
    /// Criterion/oracle disagreement or failed construction identity → exit 2.
    Inconsistent(String),
    /// A node budget ran out → exit 3.
    Budget(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Inconsistent(_) => 2,
            CliError::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Inconsistent(m) | CliError::Budget(m) => m,
        }
    }
}

impl From<CriteriaError> for CliError {
    fn from(e: CriteriaError) -> Self {
        match e {
            CriteriaError::BudgetExhausted { .. } => CliError::Budget(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<HarnessError> for CliError {
    fn from(e: HarnessError) -> Self {
        match e {
            HarnessError::Inconsistent(m) => CliError::Inconsistent(m),
            HarnessError::Criteria(CriteriaError::BudgetExhausted { .. }) => {
                CliError::Budget(e.to_string())
            }
            other => CliError::Input(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::Analyze {
            input,
            format,
            budget,
        } => {
            for g in read_graphs(&input, format)? {
                let report = analyze(&g, budget)?;
                println!("{report}");
            }
            Ok(())
        }
        Cmd::Check { which } => {
            let report = match which {
                CheckCmd::Thm13 { input } => {
                    let g = read_one_graph(&input)?;
                    let report = check_thm13_hypothesis(&g);
                    json!({
                        "schema_version": harness::SCHEMA_VERSION,
                        "graph6": to_graph6(&g),
                        "report": report,
                    })
                }
                CheckCmd::Thm14 { k, gamma, input } => {
                    let g = read_one_graph(&input)?;
                    let params = parse_thm14_params(k, &gamma)?;
                    let report = check_thm14_hypothesis(&g, &params);
                    json!({
                        "schema_version": harness::SCHEMA_VERSION,
                        "graph6": to_graph6(&g),
                        "k": k,
                        "gamma": params.gamma(),
                        "b": params.b(),
                        "report": report,
                    })
                }
            };
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            Ok(())
        }
        Cmd::Validate {
            theorem,
            nmax,
            nmin,
            random,
            seed,
            p,
            k,
            gamma,
            budget,
        } => {
            let spec = match theorem {
                TheoremName::Thm11 => TheoremSpec::Thm11,
                TheoremName::Thm12 => TheoremSpec::Thm12,
                TheoremName::Thm13 => TheoremSpec::Thm13,
                TheoremName::Thm14 => {
                    let k = k.ok_or_else(|| CliError::Input("thm14 needs --k".into()))?;
                    let gamma =
                        gamma.ok_or_else(|| CliError::Input("thm14 needs --gamma".into()))?;
                    TheoremSpec::Thm14(parse_thm14_params(k, &gamma)?)
                }
            };
            let scope = match random {
                None => {
                    if matches!(spec, TheoremSpec::Thm12) {
                        GraphScope::ExhaustiveConnected { n_max: nmax }
                    } else {
                        GraphScope::ExhaustiveAll { n_max: nmax }
                    }
                }
                Some(per_n) => {
                    let (edge_num, edge_den) = parse_probability(&p)?;
                    GraphScope::Random {
                        n_min: nmin.unwrap_or(nmax),
                        n_max: nmax,
                        per_n,
                        edge_num,
                        edge_den,
                        seed,
                        connected_only: matches!(spec, TheoremSpec::Thm12),
                    }
                }
            };
            let report = validate(&spec, &scope, budget)?;
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            if !report.passed {
                return Err(CliError::Inconsistent(format!(
                    "{} counterexamples, {} disagreements",
                    report.counterexamples.len(),
                    report.disagreements.len()
                )));
            }
            if report.budget_exhausted > 0 {
                return Err(CliError::Budget(format!(
                    "{} graphs hit the node budget",
                    report.budget_exhausted
                )));
            }
            Ok(())
        }
        Cmd::Demo { which } => {
            let report = match which {
                DemoCmd::Remark1 { t, mode } => {
                    serde_json::to_value(remark1_demo(t, mode.into())?).unwrap()
                }
                DemoCmd::Remark2 { k, mode } => {
                    serde_json::to_value(remark2_demo(k, mode.into())?).unwrap()
                }
            };
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            Ok(())
        }
        Cmd::Gen { which } => {
            let g = match which {
                GenCmd::Remark1 { t } => {
                    families::remark1_graph(t).map_err(|e| CliError::Input(e.to_string()))?
                }
                GenCmd::Remark2 { k } => {
                    families::remark2_graph(k).map_err(|e| CliError::Input(e.to_string()))?
                }
                GenCmd::Family { spec } => parse_family_spec(&spec)?,
            };
            println!("{}", to_graph6(&g));
            Ok(())
        }
    }
}

// ---------------------------------------------------------------------------
// Input handling
// ---------------------------------------------------------------------------

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(PathBuf::from(path))
            .map_err(|e| CliError::Input(format!("{path}: {e}")))
    }
}

/// graph6 bytes are all ≥ 63 (')'..'~'), so a line starting with a digit
/// can only be the `n m` header of an edge list.
fn sniff_format(text: &str) -> Format {
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        return if line.as_bytes()[0].is_ascii_digit() {
            Format::Edgelist
        } else {
            Format::Graph6
        };
    }
    Format::Graph6
}

fn read_graphs(path: &str, format: Format) -> Result<Vec<Graph>, CliError> {
    let text = read_input(path)?;
    let format = match format {
        Format::Auto => sniff_format(&text),
        other => other,
    };
    match format {
        Format::Edgelist => {
            let g = parse_edge_list(&text).map_err(|e| CliError::Input(e.to_string()))?;
            Ok(vec![g])
        }
        _ => {
            let mut graphs = Vec::new();
            for (i, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let g = parse_graph6(line)
                    .map_err(|e| CliError::Input(format!("line {}: {e}", i + 1)))?;
                graphs.push(g);
            }
            if graphs.is_empty() {
                return Err(CliError::Input("no graphs in input".into()));
            }
            Ok(graphs)
        }
    }
}

fn read_one_graph(path: &str) -> Result<Graph, CliError> {
    let graphs = read_graphs(path, Format::Auto)?;
    if graphs.len() > 1 {
        return Err(CliError::Input(format!(
            "expected one graph, found {}",
            graphs.len()
        )));
    }
    Ok(graphs.into_iter().next().unwrap())
}

fn parse_probability(text: &str) -> Result<(u32, u32), CliError> {
    let r: ExactRational = text
        .parse()
        .map_err(|e: pathfactor_core::RationalError| CliError::Input(e.to_string()))?;
    if r < ExactRational::ZERO || r > ExactRational::ONE {
        return Err(CliError::Input(format!("probability {r} outside [0, 1]")));
    }
    Ok((r.num() as u32, r.den() as u32))
}

fn parse_thm14_params(k: usize, gamma: &str) -> Result<Thm14Params, CliError> {
    let gamma: ExactRational = gamma
        .parse()
        .map_err(|e: pathfactor_core::RationalError| CliError::Input(e.to_string()))?;
    Thm14Params::new(k, gamma).map_err(|e| CliError::Input(e.to_string()))
}

fn parse_family_spec(spec: &str) -> Result<Graph, CliError> {
    let bad = |msg: &str| CliError::Input(format!("family spec {spec:?}: {msg}"));
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| bad("expected `kind:params`"))?;
    let num = |s: &str| -> Result<usize, CliError> {
        s.trim().parse().map_err(|_| bad("bad number"))
    };
    let result = match kind {
        "complete" => families::complete(num(rest)?),
        "path" => families::path(num(rest)?),
        "cycle" => families::cycle(num(rest)?),
        "bipartite" => {
            let (m, n) = rest.split_once(',').ok_or_else(|| bad("expected `M,N`"))?;
            families::complete_bipartite(num(m)?, num(n)?)
        }
        "copies" => {
            let (m, base) = rest
                .split_once(',')
                .ok_or_else(|| bad("expected `M,<spec>`"))?;
            let base = parse_family_spec(base)?;
            families::copies(num(m)?, &base)
        }
        other => return Err(bad(&format!("unknown kind {other:?}"))),
    };
    result.map_err(|e| CliError::Input(e.to_string()))
}

// ---------------------------------------------------------------------------
// Analysis report
// ---------------------------------------------------------------------------

fn analyze(g: &Graph, budget: Option<u64>) -> Result<String, CliError> {
    let n = g.n();
    let (alpha, alpha_set) = independence_number(g);
    let kappa = if n >= 2 {
        Some(vertex_connectivity(g).expect("n ≥ 2"))
    } else {
        None
    };

    let opts = SearchOptions {
        node_budget: budget,
        ..SearchOptions::default()
    };
    let factor = find_p3_factor(g, &opts).map_err(|e| match e {
        pathfactor_core::FactorError::BudgetExhausted { .. } => CliError::Budget(e.to_string()),
        other => CliError::Input(other.to_string()),
    })?;
    let kaneko = pathfactor_core::kaneko_check(g);

    let (covered, covered_witness) = if g.is_connected() {
        let verdict = covered_check_criterion(g).expect("connected");
        let witness = verdict
            .witness
            .as_ref()
            .map(|w| json!({"x": w.x, "sun_count": w.sun_count, "bound": w.bound, "epsilon": w.epsilon}));
        (verdict.holds, witness)
    } else {
        let verdict = covered_check_bruteforce(g, budget)?;
        (verdict.covered, verdict.failure.map(|f| json!(f)))
    };

    let (uniform, uniform_edge) = match is_uniform(g, UniformRoute::Auto, budget) {
        Ok(v) => (Some(v.uniform), v.witness_edge),
        Err(CriteriaError::Edgeless) => (None, None),
        Err(e) => return Err(e.into()),
    };

    let report = json!({
        "schema_version": harness::SCHEMA_VERSION,
        "graph6": to_graph6(g),
        "n": n,
        "m": g.edge_count(),
        "delta": min_degree(g),
        "alpha": alpha,
        "kappa": kappa,
        "two_edge_connected": edge_connectivity_at_least(g, 2),
        "has_p3_factor": factor.is_some(),
        "covered": covered,
        "uniform": uniform,
        "witnesses": {
            "alpha_set": alpha_set,
            "p3_factor": factor.as_ref().map(|f| f.paths()),
            "kaneko_witness": kaneko.witness.as_ref().map(|w| json!({
                "x": w.x, "sun_count": w.sun_count, "bound": w.bound,
            })),
            "not_covered": covered_witness,
            "nonuniform_edge": uniform_edge,
            "uniform_note": if uniform.is_none() {
                Some("edgeless graph: uniformity undefined")
            } else {
                None
            },
        },
    });
    Ok(report.to_string())
}
