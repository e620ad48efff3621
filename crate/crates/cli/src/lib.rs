//! Command dispatcher for the `spectough` binary.
//!
//! [`run`] never prints or exits; it returns the exit code and both output
//! streams so the binary and the tests share one code path.

use std::fmt::Write as _;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use spectough::spectra::{full_spectrum, spectral_radius};
use spectough::toughness::{bipartite_toughness, toughness, variation_toughness, BipartiteKind, Toughness};
use spectough::verify::{
    bounds::SLACK_TOL, brouwer_margin, check_bound, check_graph_against_theorem, check_lemma_comparison,
    reproduce_remark, rotation_experiment, search_counterexamples, sweep, Bound, Lemma, LemmaParams, Status,
    TheoremId, Winner,
};
use spectough::{build_family, parse_graph, serialize_graph, Error, FamilySpec, Graph, GraphFormat};

/// Exit code for a successful run.
pub const EXIT_OK: i32 = 0;
/// Exit code for usage, parse and parameter errors.
pub const EXIT_USAGE: i32 = 1;
/// Exit code when a check produces a mathematical finding.
pub const EXIT_FINDING: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "spectough", version, about = "Graph toughness and spectral radius toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Spectral radius by power iteration.
    Rho {
        #[command(flatten)]
        input: Input,
        /// Residual tolerance.
        #[arg(long, default_value_t = spectough::spectra::DEFAULT_TOL)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// All adjacency eigenvalues, largest first.
    Spectrum {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Exact toughness by cut enumeration.
    Tough {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = ToughKind::Chvatal)]
        kind: ToughKind,
        #[arg(long)]
        json: bool,
    },
    /// Build an extremal graph and print it.
    Construct {
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum)]
        family: FamilyName,
        /// Output format.
        #[arg(long, default_value = "edge-list")]
        format: GraphFormat,
        #[arg(long)]
        json: bool,
    },
    /// Compare the spectral radius with the n/m/δ upper bounds.
    Bounds {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = BoundName::All)]
        bound: BoundName,
        #[arg(long)]
        json: bool,
    },
    /// Spectral comparison between two join graphs.
    Lemma {
        #[arg(long, value_enum)]
        lemma: LemmaName,
        /// Run the whole parameter grid instead of one instance.
        #[arg(long)]
        sweep: bool,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        /// Clique sizes n_1,...,n_t for L31.
        #[arg(long, value_delimiter = ',')]
        parts: Vec<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Move the edges between T and S2 over to S1.
    Rotate {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',', required = true)]
        s1: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        s2: Vec<usize>,
        #[arg(long = "t-set", value_delimiter = ',', required = true)]
        t_set: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Toughness of a regular graph against d/λ − 1.
    Brouwer {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Classify a graph under one of the toughness theorems.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        theorem: TheoremName,
        #[arg(long)]
        json: bool,
    },
    /// Random search for graphs contradicting a theorem.
    Search {
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum)]
        theorem: TheoremName,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// The two bipartite candidates at (r, n) = (3, 38), (10, 270), (10, 402).
    Remark {
        #[arg(long)]
        json: bool,
    },
}

/// Where a graph comes from: a file, stdin, or a named family.
#[derive(Args, Debug)]
struct Input {
    /// Graph file, or `-` for stdin.
    #[arg(long = "in", value_name = "FILE", conflicts_with = "family")]
    input: Option<String>,
    /// Input format.
    #[arg(long, default_value = "edge-list")]
    format: GraphFormat,
    /// Build the graph from an extremal family instead of reading it.
    #[arg(long, value_enum)]
    family: Option<FamilyName>,
    #[command(flatten)]
    params: Params,
}

/// Family and theorem parameters.
#[derive(Args, Debug, Default)]
struct Params {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    tau: Option<usize>,
    #[arg(long = "tau-inv")]
    tau_inv: Option<usize>,
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long = "r-inv")]
    r_inv: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FamilyName {
    ToughInt,
    ToughFracDelta,
    BipIntDiv,
    BipIntNondivA,
    BipIntNondivB,
    BipFrac,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum TheoremName {
    #[value(name = "t11-i")]
    T11I,
    #[value(name = "t11-ii")]
    T11Ii,
    #[value(name = "t12-i")]
    T12I,
    #[value(name = "t12-ii")]
    T12Ii,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ToughKind {
    Chvatal,
    Variation,
    BipartiteT,
    BipartiteTau,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum BoundName {
    Hong,
    Nosal,
    Degree,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum LemmaName {
    L31,
    L43,
    L44,
}

/// Failure inside a command: usage problems map to exit 1.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

type CmdResult = std::result::Result<(i32, String), Failure>;

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandOutcome {
                    exit_code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CommandOutcome {
                    exit_code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok((exit_code, stdout)) => CommandOutcome {
            exit_code,
            stdout,
            stderr: String::new(),
        },
        Err(Failure(msg)) => CommandOutcome {
            exit_code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn dispatch(command: Command) -> CmdResult {
    match command {
        Command::Rho { input, tol, json } => {
            let g = input.load()?;
            let r = spectral_radius(&g, tol)?;
            if json {
                #[derive(Serialize)]
                struct Out {
                    rho: f64,
                    iterations: usize,
                    residual: f64,
                }
                return emit_json(&Out {
                    rho: r.radius,
                    iterations: r.iterations,
                    residual: r.residual,
                });
            }
            Ok((EXIT_OK, format!("{:.9}\n", r.radius)))
        }
        Command::Spectrum { input, json } => {
            let spectrum = full_spectrum(&input.load()?)?;
            if json {
                return emit_json(&spectrum);
            }
            Ok((EXIT_OK, spectrum.iter().map(|x| format!("{x:.9}\n")).collect()))
        }
        Command::Tough { input, kind, json } => {
            let g = input.load()?;
            let t = match kind {
                ToughKind::Chvatal => toughness(&g)?,
                ToughKind::Variation => variation_toughness(&g)?,
                ToughKind::BipartiteT | ToughKind::BipartiteTau => {
                    let sides = input.sides(&g)?;
                    let k = if kind == ToughKind::BipartiteT {
                        BipartiteKind::TB
                    } else {
                        BipartiteKind::TauB
                    };
                    bipartite_toughness(&g, &sides, k)?
                }
            };
            tough_output(&t, json)
        }
        Command::Construct {
            params,
            family,
            format,
            json,
        } => {
            let f = build_family(family_spec(family, &params)?)?;
            if json {
                #[derive(Serialize)]
                struct Out {
                    family: String,
                    n: usize,
                    m: usize,
                    graph: String,
                    partition: Vec<Vec<usize>>,
                }
                return emit_json(&Out {
                    family: f.spec.to_string(),
                    n: f.graph.n(),
                    m: f.graph.m(),
                    graph: serialize_graph(&f.graph, format),
                    partition: f.partition,
                });
            }
            Ok((EXIT_OK, format!("{}\n", serialize_graph(&f.graph, format))))
        }
        Command::Bounds { input, bound, json } => {
            let g = input.load()?;
            let chosen: Vec<Bound> = match bound {
                BoundName::Hong => vec![Bound::Hong],
                BoundName::Nosal => vec![Bound::Nosal],
                BoundName::Degree => vec![Bound::Degree],
                BoundName::All => Bound::ALL.to_vec(),
            };
            let mut reports = Vec::new();
            let mut skipped = Vec::new();
            for b in chosen {
                match check_bound(&g, b) {
                    Ok(r) => reports.push(r),
                    // with --bound all, inapplicable bounds are skipped
                    Err(e) if bound == BoundName::All => skipped.push(format!("{b}: {e}")),
                    Err(e) => return Err(e.into()),
                }
            }
            let code = if reports.iter().any(|r| r.slack < SLACK_TOL) {
                EXIT_FINDING
            } else {
                EXIT_OK
            };
            if json {
                return emit_json(&reports).map(|(_, s)| (code, s));
            }
            let mut out = String::new();
            for r in &reports {
                let _ = writeln!(
                    out,
                    "{:<7} rho = {:.9}  bound = {:.9}  slack = {:.3e}  equality = {}",
                    r.bound.to_string(),
                    r.lhs,
                    r.rhs,
                    r.slack,
                    r.equality_case
                );
            }
            for s in skipped {
                let _ = writeln!(out, "skipped {s}");
            }
            Ok((code, out))
        }
        Command::Lemma {
            lemma,
            sweep: do_sweep,
            s,
            t,
            p,
            parts,
            k,
            n,
            json,
        } => {
            let lemma = match lemma {
                LemmaName::L31 => Lemma::L31,
                LemmaName::L43 => Lemma::L43,
                LemmaName::L44 => Lemma::L44,
            };
            let reports = if do_sweep {
                sweep(lemma)?
            } else {
                let params = match lemma {
                    Lemma::L31 => LemmaParams::L31 {
                        s: need(s, "s")?,
                        t: t.unwrap_or(parts.len()),
                        p: need(p, "p")?,
                        parts,
                    },
                    Lemma::L43 => LemmaParams::L43 {
                        k: need(k, "k")?,
                        n: need(n, "n")?,
                    },
                    Lemma::L44 => LemmaParams::L44 {
                        n: need(n, "n")?,
                        s: need(s, "s")?,
                    },
                };
                vec![check_lemma_comparison(&params)?]
            };
            let code = if reports.iter().all(|r| r.holds) {
                EXIT_OK
            } else {
                EXIT_FINDING
            };
            if json {
                return emit_json(&reports).map(|(_, s)| (code, s));
            }
            let mut out = String::new();
            for r in &reports {
                let _ = writeln!(
                    out,
                    "{}  left = {:.9}  right = {:.9}  margin = {:.3e}  {}",
                    r.params,
                    r.rho_left,
                    r.rho_right,
                    r.margin,
                    if r.holds { "holds" } else { "FAILS" }
                );
            }
            if do_sweep {
                let failing = reports.iter().filter(|r| !r.holds).count();
                let _ = writeln!(out, "{} tuples, {} failing", reports.len(), failing);
            }
            Ok((code, out))
        }
        Command::Rotate {
            input,
            s1,
            s2,
            t_set,
            json,
        } => {
            let g = input.load()?;
            let r = rotation_experiment(&g, &s1, &s2, &t_set)?;
            let code = if r.condition_holds() && r.rho_after <= r.rho_before {
                EXIT_FINDING
            } else {
                EXIT_OK
            };
            if json {
                return emit_json(&r).map(|(_, s)| (code, s));
            }
            let out = format!(
                "rho before = {:.9}\nrho after  = {:.9}\nperron sum S1 = {:.9}\nperron sum S2 = {:.9}\n",
                r.rho_before, r.rho_after, r.perron_sums.0, r.perron_sums.1
            );
            Ok((code, out))
        }
        Command::Brouwer { input, json } => {
            let r = brouwer_margin(&input.load()?)?;
            let code = if r.margin > 0.0 { EXIT_OK } else { EXIT_FINDING };
            if json {
                return emit_json(&r).map(|(_, s)| (code, s));
            }
            let out = format!(
                "t = {}\nd = {}\nlambda = {:.9}\nmargin = {:.9}\n",
                r.t, r.d, r.lambda, r.margin
            );
            Ok((code, out))
        }
        Command::Verify { input, theorem, json } => {
            let g = input.load()?;
            let t = theorem_id(theorem, &input.params)?;
            let v = check_graph_against_theorem(&g, t)?;
            let code = if v.status == Status::Counterexample {
                EXIT_FINDING
            } else {
                EXIT_OK
            };
            if json {
                return emit_json(&v).map(|(_, s)| (code, s));
            }
            let mut out = format!(
                "{t}\nstatus = {}\nrho = {:.9}\nthreshold = {:.9}\n",
                v.status, v.rho, v.threshold
            );
            if let Some(w) = &v.witness {
                let _ = writeln!(out, "witness = {:?} ({} components, ratio {})", w.cut, w.components, w.ratio);
            }
            Ok((code, out))
        }
        Command::Search {
            params,
            theorem,
            samples,
            seed,
            json,
        } => {
            let t = theorem_id(theorem, &params)?;
            let report = search_counterexamples(t, samples, seed)?;
            let code = if report.counterexamples.is_empty() {
                EXIT_OK
            } else {
                EXIT_FINDING
            };
            if json {
                return emit_json(&report).map(|(_, s)| (code, s));
            }
            let mut out = format!(
                "{t} seed = {seed}\nchecked = {}  rejected = {}\n",
                report.checked, report.rejected
            );
            for status in Status::ALL {
                let _ = writeln!(out, "{:<20} {}", status.to_string(), report.count(status));
            }
            for c in &report.counterexamples {
                let _ = writeln!(out, "counterexample rho = {:.9} threshold = {:.9}", c.rho, c.threshold);
                if let Some(w) = &c.witness {
                    let _ = writeln!(out, "  cut {:?} leaves {} components", w.cut, w.components);
                }
                let _ = writeln!(out, "{}", c.graph);
            }
            Ok((code, out))
        }
        Command::Remark { json } => {
            let rows = reproduce_remark()?;
            if json {
                return emit_json(&rows);
            }
            let mut out = String::from("   r     n        rho_A        rho_B  winner\n");
            for row in rows {
                let winner = match row.winner {
                    Winner::A => "A",
                    Winner::B => "B",
                };
                let _ = writeln!(
                    out,
                    "{:>4} {:>5} {:>12.6} {:>12.6}  {winner}",
                    row.r, row.n, row.rho_a, row.rho_b
                );
            }
            Ok((EXIT_OK, out))
        }
    }
}

impl Input {
    fn load(&self) -> std::result::Result<Graph, Failure> {
        if let Some(family) = self.family {
            return Ok(build_family(family_spec(family, &self.params)?)?.graph);
        }
        let text = match self.input.as_deref() {
            None => return Err(Failure("a graph is required: pass --in FILE, --in - or --family".into())),
            Some("-") => {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| Failure(format!("reading stdin: {e}")))?;
                buf
            }
            Some(path) => std::fs::read_to_string(path).map_err(|e| Failure(format!("reading {path}: {e}")))?,
        };
        Ok(parse_graph(&text, self.format)?)
    }

    /// Sides of a bipartite input: the family's own labelling when built from
    /// a family, otherwise the 2-colouring of the graph.
    fn sides(&self, g: &Graph) -> std::result::Result<spectough::SidePartition, Failure> {
        if let Some(family) = self.family {
            if let Some(sides) = build_family(family_spec(family, &self.params)?)?.sides {
                return Ok(sides);
            }
        }
        Ok(g.bipartition().ok_or(Error::NotBipartite)?)
    }
}

fn need(value: Option<usize>, flag: &str) -> std::result::Result<usize, Failure> {
    value.ok_or_else(|| Failure(format!("missing --{flag}")))
}

fn family_spec(family: FamilyName, p: &Params) -> std::result::Result<FamilySpec, Failure> {
    let n = need(p.n, "n")?;
    Ok(match family {
        FamilyName::ToughInt => FamilySpec::ToughInt {
            n,
            tau: need(p.tau, "tau")?,
        },
        FamilyName::ToughFracDelta => FamilySpec::ToughFracDelta {
            n,
            tau_inv: need(p.tau_inv, "tau-inv")?,
            delta: need(p.delta, "delta")?,
        },
        FamilyName::BipIntDiv => FamilySpec::BipIntDiv { n, r: need(p.r, "r")? },
        FamilyName::BipIntNondivA => FamilySpec::BipIntNondivA { n, r: need(p.r, "r")? },
        FamilyName::BipIntNondivB => FamilySpec::BipIntNondivB { n, r: need(p.r, "r")? },
        FamilyName::BipFrac => FamilySpec::BipFrac {
            n,
            r_inv: need(p.r_inv, "r-inv")?,
        },
    })
}

fn theorem_id(theorem: TheoremName, p: &Params) -> std::result::Result<TheoremId, Failure> {
    let n = need(p.n, "n")?;
    Ok(match theorem {
        TheoremName::T11I => TheoremId::T11I {
            n,
            tau: need(p.tau, "tau")?,
        },
        TheoremName::T11Ii => TheoremId::T11II {
            n,
            tau_inv: need(p.tau_inv, "tau-inv")?,
            delta: need(p.delta, "delta")?,
        },
        TheoremName::T12I => TheoremId::T12I { n, r: need(p.r, "r")? },
        TheoremName::T12Ii => TheoremId::T12II {
            n,
            r_inv: need(p.r_inv, "r-inv")?,
        },
    })
}

fn tough_output(t: &Toughness, json: bool) -> CmdResult {
    if json {
        #[derive(Serialize)]
        struct Out<'a> {
            value: spectough::ExactRatio,
            witness: &'a Option<spectough::CutWitness>,
        }
        return emit_json(&Out {
            value: t.value,
            witness: &t.witness,
        });
    }
    let mut out = format!("value = {}\n", t.value);
    if let Some(w) = &t.witness {
        let cut: Vec<String> = w.cut.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "cut = {}", cut.join(" "));
        let _ = writeln!(out, "components = {}", w.components);
        if let Some(side) = w.side {
            let _ = writeln!(out, "side = {side:?}");
        }
    }
    Ok((EXIT_OK, out))
}

fn emit_json<T: Serialize>(value: &T) -> CmdResult {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure(format!("serialising output: {e}")))?;
    Ok((EXIT_OK, text + "\n"))
}
