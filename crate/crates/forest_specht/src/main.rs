//! Command-line front end: volume, schurfun, specht, tableaux, gen, check.
//!
//! Outputs are compact JSON on stdout (`--pretty` switches to aligned
//! text). Exit codes: 0 success, 1 domain failure, 2 usage error.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use forest_specht::checks::{self, CheckConfig, Scope};
use forest_specht::diagram::{diagram_to_graph, graph_to_diagram, Diagram};
use forest_specht::graph::{BipartiteGraph, Color};
use forest_specht::symfunc::{exp_specialize, principal_specialize, s_forest, schur_coeffs};
use forest_specht::tableaux;
use forest_specht::volume;
use forest_specht::{generate, specht, Caps};

#[derive(Parser)]
#[command(name = "forest-specht", version, about = "Exact matching-polytope volumes, Specht/Schur modules, and tableaux for bipartite forests")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Human-oriented output instead of compact JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// JSON config file with engine caps (same field names as the flags).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Largest diagram accepted by the Specht rank engine.
    #[arg(long, global = true)]
    specht_n_max: Option<usize>,
    /// Largest edge count accepted by the Ehrhart route.
    #[arg(long, global = true)]
    ehrhart_n_max: Option<usize>,
    /// Cap on `N^n` for tensor spans.
    #[arg(long, global = true)]
    tensor_point_cap: Option<u128>,
    /// Cap on `|C| * |R|` for symmetrizer expansion.
    #[arg(long, global = true)]
    symmetrizer_term_cap: Option<u128>,
    /// Primary modular-rank prime.
    #[arg(long, global = true)]
    prime: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Apm,
    Leaf,
    Ehrhart,
    Labelings,
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    H,
    S,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Path,
    Star,
    Caterpillar,
    #[value(name = "random-forest")]
    RandomForest,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckScope {
    Small,
    Full,
}

#[derive(Subcommand)]
enum Cmd {
    /// Normalized volume of the matching polytope of a forest.
    Volume {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "apm")]
        method: Method,
        /// Compute all four routes and print a cross-check table.
        #[arg(long)]
        all: bool,
    },
    /// The forest symmetric function, in the h or Schur basis.
    Schurfun {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "s")]
        basis: Basis,
        /// Evaluate the principal specialization at N ones.
        #[arg(long, value_name = "N")]
        principal: Option<u32>,
        /// Evaluate the exponential specialization.
        #[arg(long)]
        exp: bool,
    },
    /// Specht module invariants of a graph or diagram.
    Specht {
        /// Graph JSON or diagram ASCII file.
        input: PathBuf,
        #[arg(long)]
        character: bool,
        #[arg(long)]
        decompose: bool,
        /// Also span the tensor-space Schur module with N variables.
        #[arg(long, value_name = "N")]
        tensor: Option<u32>,
    },
    /// Semistandard and standard tableaux of a forest diagram.
    Tableaux {
        input: PathBuf,
        /// Label bound N for semistandard enumeration.
        #[arg(long, value_name = "N")]
        n_labels: Option<u32>,
        /// Enumerate standard tableaux instead.
        #[arg(long)]
        standard: bool,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        count: bool,
        /// Print content statistics (the generating function).
        #[arg(long)]
        content: bool,
    },
    /// Deterministic graph generators; prints graph JSON.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        /// Size parameters: edges for path/star/random-forest,
        /// `spine legs` for caterpillar.
        params: Vec<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Center color for stars.
        #[arg(long, value_enum, default_value = "white")]
        center: CliColor,
    },
    /// Run the consolidated identity cross-check suite.
    Check {
        #[arg(long, value_enum, default_value = "small")]
        scope: CheckScope,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Corrupt one volume on purpose; the suite must fail.
        #[arg(long)]
        inject_fault: bool,
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CliColor {
    White,
    Black,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn caps_from(cli: &Cli) -> forest_specht::Result<Caps> {
    let mut caps = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            serde_json::from_str(&text)?
        }
        None => Caps::default(),
    };
    if let Some(v) = cli.specht_n_max {
        caps.specht_n_max = v;
    }
    if let Some(v) = cli.ehrhart_n_max {
        caps.ehrhart_n_max = v;
    }
    if let Some(v) = cli.tensor_point_cap {
        caps.tensor_point_cap = v;
    }
    if let Some(v) = cli.symmetrizer_term_cap {
        caps.symmetrizer_term_cap = v;
    }
    if let Some(v) = cli.prime {
        caps.prime = v;
    }
    Ok(caps)
}

/// Graph from a JSON file, or from a diagram ASCII file.
fn load_graph(path: &PathBuf) -> forest_specht::Result<BipartiteGraph> {
    let text = std::fs::read_to_string(path)?;
    if text.trim_start().starts_with('{') {
        BipartiteGraph::from_json_str(&text)
    } else {
        diagram_to_graph(&Diagram::parse_ascii(&text)?)
    }
}

fn load_diagram(path: &PathBuf) -> forest_specht::Result<Diagram> {
    let text = std::fs::read_to_string(path)?;
    if text.trim_start().starts_with('{') {
        Ok(graph_to_diagram(&BipartiteGraph::from_json_str(&text)?))
    } else {
        Diagram::parse_ascii(&text)
    }
}

fn bigint_json(v: &BigInt) -> Value {
    use num_traits::ToPrimitive;
    match v.to_i64() {
        Some(n) => json!(n),
        None => json!(v.to_string()),
    }
}

fn map_json(entries: impl IntoIterator<Item = (String, BigInt)>) -> Value {
    let m: BTreeMap<String, Value> = entries
        .into_iter()
        .map(|(k, v)| (k, bigint_json(&v)))
        .collect();
    Value::Object(m.into_iter().collect())
}

fn content_key(content: &[u32]) -> String {
    let inner: Vec<String> = content.iter().map(|c| c.to_string()).collect();
    format!("[{}]", inner.join(","))
}

fn emit(value: &Value, pretty: bool) {
    if pretty {
        println!("{}", serde_json::to_string_pretty(value).expect("serialize"));
    } else {
        println!("{}", serde_json::to_string(value).expect("serialize"));
    }
}

fn run(cli: &Cli) -> forest_specht::Result<ExitCode> {
    let caps = caps_from(cli)?;
    match &cli.cmd {
        Cmd::Volume { input, method, all } => {
            let g = load_graph(input)?;
            if *all {
                let apm = volume::v_apm(&g)?;
                let leaf = volume::v_leaf(&g)?;
                let ehrhart = volume::v_ehrhart_with(&g, &caps)?;
                let labelings = volume::count_standard_labelings(&g)?;
                if cli.pretty {
                    println!("apm       {apm}");
                    println!("leaf      {leaf}");
                    println!("ehrhart   {ehrhart}");
                    println!("labelings {labelings}");
                    let ok = apm == leaf && apm == ehrhart && apm == labelings;
                    println!("agree     {ok}");
                } else {
                    let v = json!({
                        "apm": bigint_json(&apm),
                        "leaf": bigint_json(&leaf),
                        "ehrhart": bigint_json(&ehrhart),
                        "labelings": bigint_json(&labelings),
                    });
                    emit(&v, false);
                }
            } else {
                let v = match method {
                    Method::Apm => volume::v_apm(&g)?,
                    Method::Leaf => volume::v_leaf(&g)?,
                    Method::Ehrhart => volume::v_ehrhart_with(&g, &caps)?,
                    Method::Labelings => volume::count_standard_labelings(&g)?,
                };
                println!("{v}");
            }
        }
        Cmd::Schurfun {
            input,
            basis,
            principal,
            exp,
        } => {
            let g = load_graph(input)?;
            let s = s_forest(&g)?;
            if let Some(n) = principal {
                let v = principal_specialize(&s, *n)?;
                println!("{v}");
                return Ok(ExitCode::SUCCESS);
            }
            if *exp {
                let r = exp_specialize(&s);
                emit(&json!(r.to_string()), cli.pretty);
                return Ok(ExitCode::SUCCESS);
            }
            let value = match basis {
                Basis::H => map_json(
                    s.terms()
                        .map(|(mu, c)| (mu.to_string(), c.clone())),
                ),
                Basis::S => {
                    let se = schur_coeffs(&g)?;
                    map_json(se.terms().map(|(l, c)| (l.to_string(), c.clone())))
                }
            };
            emit(&value, cli.pretty);
        }
        Cmd::Specht {
            input,
            character,
            decompose,
            tensor,
        } => {
            let d = load_diagram(input)?;
            if let Some(n_vars) = tensor {
                let rep = specht::schur_tensor_span_with(&d, *n_vars, &caps)?;
                let v = json!({
                    "N": rep.n_vars,
                    "dimension": bigint_json(&rep.dimension),
                    "character": map_json(
                        rep.character
                            .iter()
                            .map(|(content, m)| (content_key(content), m.clone()))
                    ),
                });
                emit(&v, cli.pretty);
                return Ok(ExitCode::SUCCESS);
            }
            let mut obj = serde_json::Map::new();
            if *character || *decompose {
                let report = specht::specht_report(&d, &caps)?;
                obj.insert("dimension".into(), bigint_json(&report.dimension));
                if *character {
                    obj.insert(
                        "character".into(),
                        map_json(
                            report
                                .character
                                .values()
                                .map(|(rho, v)| (rho.to_string(), v.clone())),
                        ),
                    );
                }
                if *decompose {
                    obj.insert(
                        "decomposition".into(),
                        map_json(
                            report
                                .decomposition
                                .terms()
                                .map(|(l, c)| (l.to_string(), c.clone())),
                        ),
                    );
                }
            } else {
                let dim = specht::specht_dim_with(&d, &caps)?;
                obj.insert("dimension".into(), bigint_json(&dim));
            }
            emit(&Value::Object(obj), cli.pretty);
        }
        Cmd::Tableaux {
            input,
            n_labels,
            standard,
            list,
            count,
            content,
        } => {
            let d = load_diagram(input)?;
            let tabs = if *standard {
                tableaux::standard_tableaux(&d)?
            } else {
                let n = n_labels.ok_or_else(|| {
                    forest_specht::Error::InvalidParam(
                        "--n-labels N is required unless --standard is given".into(),
                    )
                })?;
                tableaux::ssyt_enumerate(&d, n)?
            };
            let mut obj = serde_json::Map::new();
            obj.insert("count".into(), json!(tabs.len()));
            if *content {
                let mut stats: BTreeMap<String, BigInt> = BTreeMap::new();
                let nl = n_labels.unwrap_or(d.len() as u32);
                for t in &tabs {
                    let mut c = vec![0u32; nl as usize];
                    for &v in t.values() {
                        c[v as usize - 1] += 1;
                    }
                    *stats.entry(content_key(&c)).or_insert_with(|| BigInt::from(0)) += 1;
                }
                obj.insert("content".into(), map_json(stats));
            }
            if *list {
                let rendered: Vec<Value> = tabs
                    .iter()
                    .map(|t| {
                        Value::Array(
                            t.iter()
                                .map(|(&(r, c), &v)| json!([[r, c], v]))
                                .collect(),
                        )
                    })
                    .collect();
                obj.insert("tableaux".into(), Value::Array(rendered));
            }
            let _ = count;
            emit(&Value::Object(obj), cli.pretty);
        }
        Cmd::Gen {
            kind,
            params,
            seed,
            center,
        } => {
            let need = |k: usize| -> forest_specht::Result<()> {
                if params.len() < k {
                    return Err(forest_specht::Error::InvalidParam(format!(
                        "expected {k} size parameter(s)"
                    )));
                }
                Ok(())
            };
            let g = match kind {
                GenKind::Path => {
                    need(1)?;
                    generate::path(params[0].max(1))
                }
                GenKind::Star => {
                    need(1)?;
                    let color = match center {
                        CliColor::White => Color::White,
                        CliColor::Black => Color::Black,
                    };
                    generate::star(params[0].max(1), color)
                }
                GenKind::Caterpillar => {
                    need(2)?;
                    generate::caterpillar(params[0].max(1), params[1])
                }
                GenKind::RandomForest => {
                    need(1)?;
                    generate::random_forest(params[0].max(1), *seed)
                }
            };
            println!("{}", g.to_json_string());
        }
        Cmd::Check {
            scope,
            seed,
            inject_fault,
            threads,
        } => {
            let mut cfg = CheckConfig::new(
                match scope {
                    CheckScope::Small => Scope::Small,
                    CheckScope::Full => Scope::Full,
                },
                *seed,
            );
            cfg.inject_fault = *inject_fault;
            cfg.caps = caps;
            if let Some(t) = threads {
                cfg.threads = (*t).max(1);
            }
            let report = checks::run_checks(&cfg);
            if cli.pretty {
                println!(
                    "scope {} seed {}: {} families, {} passed, {} failed",
                    report.scope, report.seed, report.families, report.passed, report.failed
                );
                for f in report.failures() {
                    println!(
                        "FAIL {} [{}]: left={} right={}",
                        f.identity, f.instance, f.left, f.right
                    );
                }
            } else if report.all_passed() {
                // Full report on success; failures-only stays readable.
                let v = serde_json::to_value(&report)?;
                emit(&v, false);
            } else {
                let v = json!({
                    "scope": report.scope,
                    "seed": report.seed,
                    "families": report.families,
                    "passed": report.passed,
                    "failed": report.failed,
                    "failures": report.failures(),
                });
                emit(&v, false);
            }
            if !report.all_passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
