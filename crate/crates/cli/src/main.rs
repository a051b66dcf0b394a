//! `dhecc`: recognition, eccentricities, bounds, centers and certificates
//! of distance-hereditary graphs from the command line.
//!
//! Reports are pretty-printed JSON with a top-level `schema` field. Exit
//! codes: 0 ok, 1 an audit found violations, 2 usage, parse or input error
//! (reported as JSON on stderr).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use dhecc::audit::{audit_corpus, audit_graph, AuditOptions, InstanceAudit};
use dhecc::builders::{self, build_named, KindWeights, NamedGraph};
use dhecc::center::classify_center_with;
use dhecc::certificates::{verify_diameter_certificate, verify_radius_certificate, verify_tight_upper};
use dhecc::ecc_exact::{run_shadow, run_with_root};
use dhecc::extremal::{ecc_bounds_from_pair, mutually_distant_pair};
use dhecc::io::{parse_graph, write_graph};
use dhecc::pruning::build_pruning_sequence;
use dhecc::{all_pairs_ecc_oracle, Error, Graph};

const SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(name = "dhecc", version, about = "Eccentricities and centers of distance-hereditary graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// DH verdict and the layered pruning sequence
    Recognize {
        #[command(flatten)]
        input: Input,
        /// Root of the BFS layering (default 0)
        #[arg(long, default_value_t = 0)]
        root: usize,
        /// Also print the sequence in the line-oriented text format
        #[arg(long)]
        text: bool,
    },
    /// All eccentricities via the pruning sequence
    Ecc {
        #[command(flatten)]
        input: Input,
        /// Re-check every backward phase against brute force (slow)
        #[arg(long)]
        shadow: bool,
    },
    /// All eccentricities via one BFS per vertex
    EccOracle {
        #[command(flatten)]
        input: Input,
    },
    /// Mutually distant pair and per-vertex eccentricity intervals
    Bounds {
        #[command(flatten)]
        input: Input,
        /// Start vertex of the furthest-vertex sweeps
        #[arg(long, default_value_t = 0)]
        start: usize,
    },
    /// Center, C1 and the center classification
    Center {
        #[command(flatten)]
        input: Input,
    },
    /// Radius, diameter and tight-upper certificate verdicts
    Certify {
        #[command(flatten)]
        input: Input,
    },
    /// Full invariant sweep over one graph or a generated corpus
    Audit {
        #[command(flatten)]
        input: Input,
        /// Corpus size; with a generator, `--n` becomes the maximum size
        #[arg(long)]
        count: Option<usize>,
        /// Include shadow-mode checks
        #[arg(long)]
        shadow: bool,
    },
    /// Random DH graph as an edge list
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Pendant, true-twin and false-twin probabilities
        #[arg(long, value_parser = parse_weights, default_value = "0.4,0.3,0.3")]
        weights: KindWeights,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Wall-clock medians of `ecc` and `ecc-oracle` on generated graphs
    Bench {
        /// Comma-separated sizes
        #[arg(long, value_delimiter = ',', default_value = "1000,10000")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_parser = parse_weights, default_value = "0.4,0.3,0.3")]
        weights: KindWeights,
        /// Skip the oracle above this size
        #[arg(long, default_value_t = 10_000)]
        oracle_max: usize,
        #[arg(long, default_value_t = 5)]
        runs: usize,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

/// Exactly one of a file, a named graph or a generator.
#[derive(Args)]
struct Input {
    /// Edge-list file (`-` for stdin)
    #[arg(long, short, conflicts_with_all = ["named", "n"])]
    input: Option<PathBuf>,
    /// Named graph: house, gem, domino, cycle:K, path:K, clique:K, fig5:L, fig7-demo
    #[arg(long, conflicts_with = "n")]
    named: Option<String>,
    /// Generate a random DH graph on this many vertices
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_parser = parse_weights, default_value = "0.4,0.3,0.3")]
    weights: KindWeights,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

fn parse_weights(s: &str) -> Result<KindWeights, String> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|_| format!("bad weight `{p}`")))
        .collect::<Result<_, _>>()?;
    if parts.len() != 3 {
        return Err("expected three weights: pendant,true-twin,false-twin".into());
    }
    KindWeights::new(parts[0], parts[1], parts[2]).map_err(|e| e.to_string())
}

/// A failure that ends the run with a JSON error on stderr.
struct Failure {
    kind: String,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            kind: e.kind().into(),
            message: e.to_string(),
        }
    }
}

fn io_failure(path: &std::path::Path, e: std::io::Error) -> Failure {
    Failure {
        kind: "IoError".into(),
        message: format!("{}: {e}", path.display()),
    }
}

struct Loaded {
    graph: Graph,
    source: Value,
    seed: Option<u64>,
}

impl Input {
    fn load(&self) -> Result<Loaded, Failure> {
        if let Some(path) = &self.input {
            let text = if path.as_os_str() == "-" {
                std::io::read_to_string(std::io::stdin()).map_err(|e| io_failure(path, e))?
            } else {
                fs::read_to_string(path).map_err(|e| io_failure(path, e))?
            };
            return Ok(Loaded {
                graph: parse_graph(&text)?,
                source: json!({ "kind": "file", "path": path.display().to_string() }),
                seed: None,
            });
        }
        if let Some(name) = &self.named {
            let named: NamedGraph = name.parse()?;
            return Ok(Loaded {
                graph: build_named(named)?,
                source: json!({ "kind": "named", "name": named.to_string() }),
                seed: None,
            });
        }
        if let Some(n) = self.n {
            let (graph, _) = builders::random_dh(n, self.seed, self.weights)?;
            return Ok(Loaded {
                graph,
                source: json!({ "kind": "generator", "n": n, "weights": self.weights }),
                seed: Some(self.seed),
            });
        }
        Err(Failure {
            kind: "UsageError".into(),
            message: "one of --input, --named or --n is required".into(),
        })
    }
}

/// Top-level report envelope.
fn envelope(command: &str, loaded: &Loaded, body: Value) -> Value {
    let mut out = json!({
        "schema": SCHEMA,
        "command": command,
        "input": loaded.source,
        "seed": loaded.seed,
        "n": loaded.graph.n(),
        "m": loaded.graph.m(),
    });
    merge(&mut out, body);
    out
}

fn merge(into: &mut Value, body: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, body) {
        a.extend(b);
    }
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| io_failure(path, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json(output: &Option<PathBuf>, v: &Value) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(v).expect("json");
    text.push('\n');
    emit(output, &text)
}

fn median_ms(runs: usize, mut f: impl FnMut()) -> f64 {
    let mut times: Vec<f64> = (0..runs.max(1))
        .map(|_| {
            let t = Instant::now();
            f();
            t.elapsed().as_secs_f64() * 1e3
        })
        .collect();
    times.sort_by(f64::total_cmp);
    times[times.len() / 2]
}

fn audit_summary(audits: &[InstanceAudit]) -> Value {
    let mut totals: Vec<(&str, usize, usize)> = Vec::new();
    for a in audits {
        for c in &a.checks {
            match totals.iter_mut().find(|t| t.0 == c.name) {
                Some(t) => {
                    t.1 += c.checked;
                    t.2 += c.violations.len();
                }
                None => totals.push((c.name, c.checked, c.violations.len())),
            }
        }
    }
    let checks: Vec<Value> = totals
        .iter()
        .map(|(name, checked, violations)| json!({ "name": name, "checked": checked, "violations": violations }))
        .collect();
    let instances: Vec<Value> = audits
        .iter()
        .map(|a| {
            json!({
                "index": a.index,
                "seed": a.seed,
                "n": a.n,
                "m": a.m,
                "rad": a.rad,
                "diam": a.diam,
                "classification": a.classification,
                "unimodality_breaks": a.unimodality_breaks.len(),
                "violations": a.violation_count(),
            })
        })
        .collect();
    let failing: Vec<&InstanceAudit> = audits.iter().filter(|a| !a.passed()).collect();
    let breaks: Vec<Value> = audits
        .iter()
        .filter(|a| !a.unimodality_breaks.is_empty())
        .map(|a| json!({ "index": a.index, "seed": a.seed, "breaks": a.unimodality_breaks }))
        .collect();
    json!({
        "pass": failing.is_empty(),
        "violations": audits.iter().map(InstanceAudit::violation_count).sum::<usize>(),
        "checks": checks,
        "unimodality_breaks": breaks,
        "instances": instances,
        "failing": failing,
    })
}

/// Runs one command; `Ok(true)` means the report contains violations.
fn run(cmd: Command) -> Result<bool, Failure> {
    match cmd {
        Command::Recognize { input, root, text } => {
            let l = input.load()?;
            let body = match build_pruning_sequence(&l.graph, root) {
                Ok(seq) => {
                    let mut b = json!({ "distance_hereditary": true, "root": root, "sequence": seq });
                    if text {
                        merge(&mut b, json!({ "sequence_text": seq.to_text() }));
                    }
                    b
                }
                Err(e @ Error::NotDistanceHereditary { layer, remaining }) => json!({
                    "distance_hereditary": false,
                    "root": root,
                    "stalled": { "layer": layer, "remaining": remaining, "message": e.to_string() },
                }),
                Err(e) => return Err(e.into()),
            };
            emit_json(&input.output, &envelope("recognize", &l, body))?;
            Ok(false)
        }
        Command::Ecc { input, shadow } => {
            let l = input.load()?;
            let (run, report) = if shadow {
                let (r, s) = run_shadow(&l.graph, None)?;
                (r, Some(s))
            } else {
                (run_with_root(&l.graph, None)?, None)
            };
            let bad = report.as_ref().is_some_and(|s| !s.mismatches.is_empty());
            let body = json!({
                "root": run.root,
                "marker_y": run.marker_y,
                "marker_z": run.marker_z,
                "table": run.table,
                "shadow": report,
            });
            emit_json(&input.output, &envelope("ecc", &l, body))?;
            Ok(bad)
        }
        Command::EccOracle { input } => {
            let l = input.load()?;
            let t = all_pairs_ecc_oracle(&l.graph)?;
            emit_json(&input.output, &envelope("ecc-oracle", &l, json!({ "table": t })))?;
            Ok(false)
        }
        Command::Bounds { input, start } => {
            let l = input.load()?;
            let pair = mutually_distant_pair(&l.graph, start)?;
            let bounds = ecc_bounds_from_pair(&l.graph, &pair);
            let body = json!({ "start": start, "pair": pair, "bounds": bounds, "exact": bounds.exact() });
            emit_json(&input.output, &envelope("bounds", &l, body))?;
            Ok(false)
        }
        Command::Center { input } => {
            let l = input.load()?;
            let t = run_with_root(&l.graph, None)?.table;
            let rep = classify_center_with(&l.graph, &t);
            emit_json(&input.output, &envelope("center", &l, json!({ "center": rep })))?;
            Ok(false)
        }
        Command::Certify { input } => {
            let l = input.load()?;
            let g = &l.graph;
            let t = run_with_root(g, None)?.table;
            let r = verify_radius_certificate(g, &t.diametral, &t)?;
            let d = verify_diameter_certificate(g, &t.center, &t)?;
            let c1 = verify_tight_upper(g, &t.within(1), &t)?;
            let body = json!({
                "rad": t.rad,
                "diam": t.diam,
                "radius": r,
                "diameter": d,
                "tight_upper": c1,
            });
            emit_json(&input.output, &envelope("certify", &l, body))?;
            Ok(false)
        }
        Command::Audit { input, count, shadow } => {
            let opts = AuditOptions {
                shadow,
                seed: input.seed,
                ..AuditOptions::default()
            };
            let (value, bad) = match (count, input.n) {
                (Some(count), Some(max_n)) => {
                    let c = builders::corpus(count, max_n, input.seed)?;
                    let audits = audit_corpus(&c, &opts)?;
                    let mut v = json!({
                        "schema": SCHEMA,
                        "command": "audit",
                        "input": { "kind": "corpus", "count": count, "max_n": max_n },
                        "seed": input.seed,
                        "options": opts,
                    });
                    merge(&mut v, audit_summary(&audits));
                    (v, audits.iter().any(|a| !a.passed()))
                }
                (Some(_), None) => {
                    return Err(Failure {
                        kind: "UsageError".into(),
                        message: "--count needs --n (the maximum corpus graph size)".into(),
                    })
                }
                (None, _) => {
                    let l = input.load()?;
                    let a = audit_graph(&l.graph, 0, l.seed, &opts)?;
                    let bad = !a.passed();
                    let body = json!({ "options": opts, "pass": !bad, "audit": a });
                    (envelope("audit", &l, body), bad)
                }
            };
            emit_json(&input.output, &value)?;
            Ok(bad)
        }
        Command::Gen { n, seed, weights, output } => {
            let (g, _) = builders::random_dh(n, seed, weights)?;
            let header = format!(
                "# dhecc gen n={n} seed={seed} weights={},{},{}\n",
                weights.pendant, weights.true_twin, weights.false_twin
            );
            emit(&output, &(header + &write_graph(&g)))?;
            Ok(false)
        }
        Command::Bench { sizes, seed, weights, oracle_max, runs, output } => {
            let mut rows = Vec::new();
            for &n in &sizes {
                let (g, _) = builders::random_dh(n, seed, weights)?;
                let mut table = None;
                let ecc_ms = median_ms(runs, || table = Some(run_with_root(&g, None).map(|r| r.table)));
                let table = table.expect("at least one run")?;
                let oracle_ms = if n <= oracle_max {
                    let mut agree = true;
                    let ms = median_ms(runs, || agree &= all_pairs_ecc_oracle(&g).as_ref() == Ok(&table));
                    Some((ms, agree))
                } else {
                    None
                };
                rows.push(json!({
                    "n": n,
                    "m": g.m(),
                    "ecc_ms": ecc_ms,
                    "oracle_ms": oracle_ms.map(|o| o.0),
                    "oracle_agrees": oracle_ms.map(|o| o.1),
                }));
            }
            let v = json!({
                "schema": SCHEMA,
                "command": "bench",
                "seed": seed,
                "weights": weights,
                "runs": runs,
                "threads": rayon::current_num_threads(),
                "results": rows,
            });
            emit_json(&output, &v)?;
            Ok(false)
        }
    }
}

fn fail(f: &Failure) -> ExitCode {
    let v = json!({ "schema": SCHEMA, "error": { "kind": f.kind, "message": f.message } });
    eprintln!("{}", serde_json::to_string(&v).expect("json"));
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            return fail(&Failure {
                kind: "UsageError".into(),
                message: e.render().to_string().trim_end().into(),
            })
        }
    };
    match run(cli.command) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(f) => fail(&f),
    }
}
