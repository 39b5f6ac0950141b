//! Command-line front end.
//!
//! [`dispatch`] runs one parsed command and returns its exit status and
//! output instead of printing, so the binary and the tests share one path.
//!
//! Exit codes: 0 success, 2 invalid input or domain error (including an
//! invalid score sequence under `scores check`), 3 a constant-κ search proved
//! that no witness exists, 4 the search ran out of budget.

mod render;

use std::fs;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::dominance::{classify, distance_matrix};
use crate::error::Error;
use crate::flows::{even_partition, k4_dichotomy, selection_flow, total_flows};
use crate::generate::{all_tournaments_with_override, nonisomorphic_representatives, random_tournament, Seed};
use crate::io::TournamentDoc;
use crate::paths::{
    count_complete_paths, cyclic_triples_count, cyclic_triples_extremal, max_cyclic_triples, redei_path,
    transitive_triples_count, triple_count,
};
use crate::psel::{constant_kappa_precheck, kappa, search_constant_kappa_counted, SubsetSelection, DEFAULT_BUDGET};
use crate::scores::{landau_violation, realize, scores, ScoreSequence};

pub use render::export_graphviz;

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_PROVEN_NONE: i32 = 3;
pub const EXIT_INCONCLUSIVE: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Human,
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "tourney", version, about = "Tournaments as weak selections: scores, kings, paths, triples, flows")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Human)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a seeded random tournament.
    Gen {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Enumerate every labelled tournament on n vertices (n ≤ 6).
    Enum {
        n: usize,
        /// Permit n = 7 (2^21 tournaments).
        #[arg(long)]
        allow_large: bool,
        /// Emit one canonical representative per isomorphism class instead.
        #[arg(long)]
        classes: bool,
    },
    /// Score sequences.
    #[command(subcommand)]
    Scores(ScoresCommand),
    /// Emperor, kings, slaves, serfs and the distance matrix.
    Analyze(InputArg),
    /// A complete path, optionally with the exact number of them.
    Path {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        count: bool,
    },
    /// Transitive and cyclic triple counts.
    Triples {
        /// Tournament document; omit when using --extremal.
        #[arg(required_unless_present = "extremal")]
        input: Option<String>,
        /// Exhaustively maximize cyclic triples over all tournaments of this order.
        #[arg(long, conflicts_with = "input")]
        extremal: Option<usize>,
    },
    /// Total flows of the selection flow, zero-sum check, partitions.
    Flow(InputArg),
    /// Selections on p-element subsets.
    #[command(subcommand)]
    Kappa(KappaCommand),
    /// Graphviz export.
    Export(InputArg),
}

#[derive(Debug, Args)]
pub struct InputArg {
    /// Tournament document path, or `-` for standard input.
    pub input: String,
}

#[derive(Debug, Subcommand)]
pub enum ScoresCommand {
    /// Check Landau's condition; exit 0 when valid, 2 when not.
    Check {
        /// Inline sequence such as `0,1,2,3`, a file holding one, or `-`.
        sequence: String,
    },
    /// Build a tournament with the given score sequence.
    Realize { sequence: String },
}

#[derive(Debug, Subcommand)]
pub enum KappaCommand {
    /// Search for a selection with constant κ.
    Search {
        m: usize,
        p: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// κ profile and minimizer set of a selection document.
    Profile { input: String },
}

/// Exit status plus everything destined for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    name: &'static str,
    message: String,
    code: i32,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded(_) => EXIT_INCONCLUSIVE,
            _ => EXIT_INVALID,
        };
        Failure { name: e.name(), message: e.to_string(), code }
    }
}

/// A successful report: human text, structured value, exit code.
struct Report {
    human: String,
    structured: Value,
    code: i32,
}

impl Report {
    fn ok(human: String, structured: Value) -> Self {
        Report { human, structured, code: EXIT_OK }
    }
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String, Failure> {
    let io_failure = |e: std::io::Error| Failure {
        name: "IoError",
        message: format!("IoError: {path}: {e}"),
        code: EXIT_INVALID,
    };
    if path == "-" {
        let mut buf = String::new();
        stdin.read_to_string(&mut buf).map_err(io_failure)?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(io_failure)
    }
}

fn read_tournament(path: &str, stdin: &mut dyn Read) -> Result<TournamentDoc, Failure> {
    Ok(TournamentDoc::parse(&read_input(path, stdin)?)?)
}

/// Inline sequence unless the argument is `-` or names an existing file.
fn read_sequence(arg: &str, stdin: &mut dyn Read) -> Result<ScoreSequence, Failure> {
    let src = if arg == "-" || std::path::Path::new(arg).is_file() {
        read_input(arg, stdin)?
    } else {
        arg.to_string()
    };
    let line = src.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
    Ok(line.parse::<ScoreSequence>()?)
}

fn with_schema(mut v: Value) -> Value {
    if let Value::Object(map) = &mut v {
        map.insert("schema_version".into(), json!(SCHEMA_VERSION));
    }
    v
}

fn tournament_value(doc: &TournamentDoc) -> Value {
    serde_json::to_value(doc.to_structured()).expect("plain data serializes")
}

pub fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    let format = cli.format;
    match run(&cli.command, stdin) {
        Ok(report) => {
            let stdout = match format {
                Format::Human => report.human,
                Format::Structured => format!("{}\n", with_schema(report.structured)),
            };
            Outcome { code: report.code, stdout, stderr: String::new() }
        }
        Err(f) => match format {
            Format::Human => Outcome { code: f.code, stdout: String::new(), stderr: format!("error: {}\n", f.message) },
            Format::Structured => {
                let v = with_schema(json!({ "error": { "name": f.name, "message": f.message } }));
                Outcome { code: f.code, stdout: format!("{v}\n"), stderr: String::new() }
            }
        },
    }
}

fn run(command: &Command, stdin: &mut dyn Read) -> Result<Report, Failure> {
    match command {
        Command::Gen { n, seed } => {
            let doc = TournamentDoc::new(random_tournament(*n, Seed(*seed))?);
            Ok(Report::ok(doc.to_text(), tournament_value(&doc)))
        }
        Command::Enum { n, allow_large, classes } => {
            let list: Vec<TournamentDoc> = if *classes {
                nonisomorphic_representatives(*n)?.into_iter().map(TournamentDoc::new).collect()
            } else {
                all_tournaments_with_override(*n, *allow_large)?.map(TournamentDoc::new).collect()
            };
            let human = list.iter().map(TournamentDoc::to_text).collect::<Vec<_>>().join("\n");
            let structured = json!({
                "n": n,
                "count": list.len(),
                "tournaments": list.iter().map(tournament_value).collect::<Vec<_>>(),
            });
            Ok(Report::ok(human, structured))
        }
        Command::Scores(ScoresCommand::Check { sequence }) => {
            let seq = match read_sequence(sequence, stdin) {
                Ok(seq) => seq,
                Err(f) if f.name == "InvalidScore" => {
                    let reason = f.message.trim_start_matches("InvalidScore: ").to_string();
                    return Ok(Report {
                        human: format!("invalid: {reason}\n"),
                        structured: json!({ "sequence": sequence, "valid": false, "reason": reason }),
                        code: EXIT_INVALID,
                    });
                }
                Err(f) => return Err(f),
            };
            Ok(match landau_violation(&seq) {
                None => Report::ok(
                    "valid\n".into(),
                    json!({ "sequence": seq.to_string(), "valid": true, "reason": null }),
                ),
                Some(v) => Report {
                    human: format!("invalid: {v}\n"),
                    structured: json!({ "sequence": seq.to_string(), "valid": false, "reason": v.to_string() }),
                    code: EXIT_INVALID,
                },
            })
        }
        Command::Scores(ScoresCommand::Realize { sequence }) => {
            let seq = read_sequence(sequence, stdin)?;
            let doc = TournamentDoc::new(realize(&seq)?);
            Ok(Report::ok(doc.to_text(), tournament_value(&doc)))
        }
        Command::Analyze(InputArg { input }) => {
            let doc = read_tournament(input, stdin)?;
            let report = classify(&doc.tournament);
            let human = render::dominance(&doc, &report);
            let structured = json!({
                "n": doc.tournament.n(),
                "emperor": report.emperor,
                "kings": report.kings,
                "king": report.king(),
                "slaves": report.slaves,
                "serfs": report.serfs,
                "scores": scores(&doc.tournament),
                "distances": render::distance_rows(&distance_matrix(&doc.tournament)),
            });
            Ok(Report::ok(human, structured))
        }
        Command::Path { input, count } => {
            let doc = read_tournament(&input.input, stdin)?;
            let path = redei_path(&doc.tournament);
            let total = if *count { Some(count_complete_paths(&doc.tournament)?) } else { None };
            let mut human = format!("path {}\n", render::join(path.order()));
            if let Some(c) = total {
                human.push_str(&format!("count {c}\n"));
            }
            Ok(Report::ok(human, json!({ "path": path.order(), "count": total })))
        }
        Command::Triples { input, extremal } => match (input, extremal) {
            (_, Some(n)) => {
                let formula = max_cyclic_triples(*n)?;
                let (max, witness) = cyclic_triples_extremal(*n)?;
                let doc = TournamentDoc::new(witness);
                let human = format!(
                    "n {n}\nformula_max {formula}\nexhaustive_max {max}\nwitness\n{}",
                    doc.to_text()
                );
                let structured = json!({
                    "n": n,
                    "formula_max": formula,
                    "exhaustive_max": max,
                    "witness": tournament_value(&doc),
                });
                Ok(Report::ok(human, structured))
            }
            (Some(path), None) => {
                let doc = read_tournament(path, stdin)?;
                let t = &doc.tournament;
                let (tt, ct, total) = (transitive_triples_count(t), cyclic_triples_count(t), triple_count(t.n()));
                let max = max_cyclic_triples(t.n())?;
                let human = format!("transitive {tt}\ncyclic     {ct}\ntotal      {total}\nmax_cyclic {max}\n");
                let structured = json!({
                    "transitive": tt,
                    "cyclic": ct,
                    "total": total,
                    "conserved": tt + ct == total,
                    "max_cyclic": max,
                });
                Ok(Report::ok(human, structured))
            }
            (None, None) => unreachable!("clap requires an input or --extremal"),
        },
        Command::Flow(InputArg { input }) => {
            let doc = read_tournament(input, stdin)?;
            let t = &doc.tournament;
            let flow = selection_flow(t);
            let phi = total_flows(flow.flow());
            let sum: i64 = phi.iter().sum();
            let partition = if t.n() % 2 == 0 && t.n() >= 4 { Some(even_partition(t)?) } else { None };
            let k4 = if t.n() == 4 { Some(k4_dichotomy(&flow)?) } else { None };
            let mut human = format!("phi {}\nsum {sum}\n", render::join(&phi));
            if let Some((a, b)) = &partition {
                human.push_str(&format!("A   {}\nB   {}\n", render::join(a), render::join(b)));
            }
            if let Some(case) = k4 {
                human.push_str(&format!("k4  {case:?}\n"));
            }
            let structured = json!({
                "phi": phi,
                "sum": sum,
                "partition": partition.map(|(a, b)| json!({ "a": a, "b": b })),
                "k4": k4,
            });
            Ok(Report::ok(human, structured))
        }
        Command::Kappa(KappaCommand::Search { m, p, budget }) => {
            let verdict = constant_kappa_precheck(*m, *p)?;
            let (found, nodes) = match search_constant_kappa_counted(*m, *p, *budget) {
                Ok(r) => r,
                Err(Error::BudgetExceeded(b)) => {
                    return Ok(Report {
                        human: format!("precheck {verdict:?}\ninconclusive: budget of {b} nodes exhausted\n"),
                        structured: json!({
                            "m": m, "p": p, "precheck": verdict, "outcome": "inconclusive", "budget": b,
                        }),
                        code: EXIT_INCONCLUSIVE,
                    })
                }
                Err(e) => return Err(e.into()),
            };
            Ok(match found {
                Some(sel) => {
                    let k = kappa(&sel);
                    Report::ok(
                        format!(
                            "precheck {verdict:?}\nfound after {nodes} nodes\nkappa {}\n{}",
                            render::join(&k.counts),
                            sel.to_text()
                        ),
                        json!({
                            "m": m, "p": p, "precheck": verdict, "outcome": "found", "nodes": nodes,
                            "kappa": k.counts,
                            "witness": sel.entries().map(|(s, x)| json!({ "subset": s, "choice": x })).collect::<Vec<_>>(),
                        }),
                    )
                }
                None => Report {
                    human: format!("precheck {verdict:?}\nnone: search exhausted after {nodes} nodes\n"),
                    structured: json!({ "m": m, "p": p, "precheck": verdict, "outcome": "none", "nodes": nodes }),
                    code: EXIT_PROVEN_NONE,
                },
            })
        }
        Command::Kappa(KappaCommand::Profile { input }) => {
            let sel = SubsetSelection::from_text(&read_input(input, stdin)?)?;
            let k = kappa(&sel);
            let human = format!(
                "m {} p {}\nkappa     {}\nconstant  {}\nminimizers {}\n",
                sel.m(),
                sel.p(),
                render::join(&k.counts),
                k.is_constant(),
                render::join(&k.minimizers())
            );
            let structured = json!({
                "m": sel.m(), "p": sel.p(), "kappa": k.counts, "constant": k.is_constant(),
                "minimizers": k.minimizers(),
            });
            Ok(Report::ok(human, structured))
        }
        Command::Export(InputArg { input }) => {
            let doc = read_tournament(input, stdin)?;
            let dot = export_graphviz(&doc);
            Ok(Report::ok(dot.clone(), json!({ "dot": dot })))
        }
    }
}
