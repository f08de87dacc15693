use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use oddballoon::ballooning::{odd_balloon, BalloonSpec};
use oddballoon::battery::{run_battery, BatteryOptions};
use oddballoon::constructions::{certify_free, verify_lower_bound, CertifyOptions, Mode, Verdict};
use oddballoon::cracking::{apex_skeleton, crack_family, cracking_family, decomposition_family_bruteforce, Decomposition, DecompositionParams};
use oddballoon::extremal::{exact_ex, f_oracle, Constraints, SearchJob, SearchResult};
use oddballoon::formulas::{predict_chi4, predict_ex_balloon, predict_ex_decomposition};
use oddballoon::graph::family::family_from_graph6_lines;
use oddballoon::graph::named::{self, cycle, matching, path, star};
use oddballoon::graph::params::{chromatic_number, independent_covering_number, is_bipartite};
use oddballoon::graph::{graph6, Graph};
use oddballoon::GraphFamily;

#[derive(Parser)]
#[command(name = "oddballoon", version, about = "Odd-balloonings, cracking families and Turán-number checks")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Structured JSON output where a command also has a line format.
    #[arg(long, global = true)]
    json: bool,
    /// Emit graphs as Graphviz DOT instead of graph6.
    #[arg(long, global = true)]
    dot: bool,
    /// Treat indeterminate (budget-limited) results as failures.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named graph: complete|empty|star|path|cycle|matching K, turan N R,
    /// bipartite S T, wheel|fan|book|friendship K, petersen.
    Gen {
        kind: String,
        params: Vec<usize>,
    },
    /// Odd-balloon a skeleton.
    Balloon {
        #[command(flatten)]
        skeleton: SkeletonArg,
        /// Cycle length used for every edge.
        #[arg(long, default_value_t = 5)]
        length: usize,
        /// Per-edge lengths as `g6 ; edge u,v = l ; ...`, JSON, or a file holding either.
        #[arg(long, conflicts_with = "length")]
        spec: Option<String>,
    },
    /// All crackings of an independent set, C(F, U).
    Crack {
        #[command(flatten)]
        skeleton: SkeletonArg,
        /// Comma-separated vertices of U.
        #[arg(long, value_delimiter = ',')]
        set: Vec<usize>,
    },
    /// The cracking family C(F) over all independent sets.
    CrackAll {
        #[command(flatten)]
        skeleton: SkeletonArg,
    },
    /// Brute-force decomposition family of an odd-ballooning.
    Decompose {
        #[command(flatten)]
        skeleton: SkeletonArg,
        /// Cycle length used to balloon the skeleton.
        #[arg(long, default_value_t = 5)]
        length: usize,
        #[arg(long, default_value_t = 2)]
        r: usize,
        /// Default: the order of the ballooned graph.
        #[arg(long)]
        t_max: Option<usize>,
        #[arg(long, default_value_t = 6)]
        size_cap: usize,
        /// Only examine candidates with this many edges, `lo..hi` or a single value.
        #[arg(long)]
        edges: Option<String>,
        #[arg(long, env = "ODDBALLOON_BUDGET", default_value_t = 100_000_000)]
        budget: u64,
    },
    /// Predicted extremal construction and edge count.
    Predict {
        #[command(flatten)]
        f_bullet: FBulletArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = PredictMode::Balloon)]
        mode: PredictMode,
        /// Shortest cycle length of the ballooning.
        #[arg(long, default_value_t = 5)]
        length: usize,
        /// Treat predictions as established from this n on.
        #[arg(long)]
        trust_from: Option<usize>,
        /// Skeleton F, checked for χ(F) >= 4 in chi4 mode.
        #[arg(long)]
        skeleton: Option<String>,
    },
    /// Certify a host free of every member of a family.
    CheckFree {
        #[arg(long)]
        host: String,
        /// File of graph6 lines, or comma-separated graph6 strings.
        #[arg(long)]
        family: String,
        #[arg(long, env = "ODDBALLOON_BUDGET", default_value_t = 100_000_000)]
        budget: u64,
        /// Settle bipartite hosts against all-non-bipartite families by parity.
        #[arg(long)]
        parity: bool,
    },
    /// Exact ex(n, family) by exhaustive search.
    SearchEx {
        #[arg(long)]
        n: usize,
        /// File of graph6 lines, or comma-separated graph6 strings.
        #[arg(long)]
        forbid: String,
        /// Print the extremal graphs.
        #[arg(long)]
        witnesses: bool,
        /// Cap on candidate graphs examined.
        #[arg(long)]
        budget: Option<u64>,
        /// Allow n above the exhaustive limit.
        #[arg(long)]
        i_understand: bool,
    },
    /// Exact max edges with ν <= nu and Δ <= delta by exhaustive search.
    FOracle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        nu: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        witnesses: bool,
    },
    /// Run the verification battery, or one lower-bound check with --fbullet and --n.
    Verify {
        #[arg(long)]
        quick: bool,
        #[arg(long, env = "ODDBALLOON_BUDGET", default_value_t = 100_000_000)]
        budget: u64,
        #[command(flatten)]
        f_bullet: FBulletArg,
        #[arg(long, requires = "f_bullet")]
        n: Option<usize>,
        /// Also write the JSON report to this file.
        #[arg(long)]
        report: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value_t = LowerMode::Decomposition)]
        mode: LowerMode,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum NamedFamily {
    Wheel,
    Fan,
    Book,
    Friendship,
}

impl NamedFamily {
    /// `F•` of the skeleton `K_1 ∇ F•`.
    fn f_bullet(self, k: usize) -> Result<Graph> {
        Ok(match self {
            NamedFamily::Wheel => cycle(2 * k)?,
            NamedFamily::Fan => path(k + 1)?,
            NamedFamily::Book => star(k + 1)?,
            NamedFamily::Friendship => matching(k)?,
        })
    }
}

#[derive(Args)]
struct SkeletonArg {
    /// graph6 string or file.
    #[arg(long)]
    skeleton: Option<String>,
    #[arg(long, value_enum, requires = "k")]
    family: Option<NamedFamily>,
    #[arg(long)]
    k: Option<usize>,
}

impl SkeletonArg {
    fn resolve(&self) -> Result<Graph> {
        match (&self.skeleton, self.family) {
            (Some(s), _) => read_graph(s),
            (None, Some(f)) => Ok(apex_skeleton(&f.f_bullet(self.k.unwrap_or(2))?)?),
            (None, None) => bail!("give --skeleton or --family with --k"),
        }
    }
}

#[derive(Args)]
#[group(id = "f_bullet", multiple = true)]
struct FBulletArg {
    /// F• as a graph6 string or file.
    #[arg(long)]
    fbullet: Option<String>,
    #[arg(long = "family", value_enum)]
    fb_family: Option<NamedFamily>,
    #[arg(long = "k")]
    fb_k: Option<usize>,
}

impl FBulletArg {
    fn resolve(&self) -> Result<Option<Graph>> {
        match (&self.fbullet, self.fb_family) {
            (Some(s), _) => Ok(Some(read_graph(s)?)),
            (None, Some(f)) => Ok(Some(f.f_bullet(self.fb_k.ok_or_else(|| anyhow!("--family needs --k"))?)?)),
            (None, None) => Ok(None),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PredictMode {
    Balloon,
    Decomposition,
    Chi4,
}

#[derive(Clone, Copy, ValueEnum)]
enum LowerMode {
    Balloon,
    Decomposition,
}

/// A graph6 string, or a file whose first non-comment line is one.
fn read_graph(arg: &str) -> Result<Graph> {
    if Path::new(arg).is_file() {
        let text = fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?;
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'))
            .ok_or_else(|| anyhow!("{arg} holds no graph"))?;
        return graph6::decode(line).with_context(|| format!("decoding {arg}"));
    }
    graph6::decode(arg).with_context(|| format!("`{arg}` is neither a file nor a valid graph6 string"))
}

fn read_family(arg: &str) -> Result<GraphFamily> {
    let text = if Path::new(arg).is_file() {
        fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?
    } else {
        arg.split(',').collect::<Vec<_>>().join("\n")
    };
    Ok(family_from_graph6_lines(&text)?)
}

fn parse_range(s: &str) -> Result<(usize, usize)> {
    let parse = |t: &str| t.trim().parse::<usize>().with_context(|| format!("bad edge count `{t}`"));
    match s.split_once("..") {
        Some((lo, hi)) => Ok((parse(lo)?, parse(hi.trim_start_matches('='))?)),
        None => {
            let v = parse(s)?;
            Ok((v, v))
        }
    }
}

struct Out {
    json: bool,
    dot: bool,
    w: io::StdoutLock<'static>,
}

impl Out {
    fn graph(&mut self, g: &Graph, name: &str) -> Result<()> {
        if self.dot {
            write!(self.w, "{}", g.to_dot(name))?;
        } else {
            writeln!(self.w, "{g}")?;
        }
        Ok(())
    }

    fn family(&mut self, fam: &GraphFamily) -> Result<()> {
        if self.json {
            let members: Vec<_> = fam
                .entries()
                .map(|(form, g)| {
                    let bip = is_bipartite(g);
                    json!({
                        "graph6": g.to_string(),
                        "canonical_form": form.to_hex(),
                        "vertices": g.n(),
                        "edges": g.edge_count(),
                        "bipartite": bip,
                        "q": if bip { independent_covering_number(g).ok() } else { None },
                    })
                })
                .collect();
            return self.value(&json!({ "size": fam.len(), "members": members }));
        }
        for (i, g) in fam.iter().enumerate() {
            self.graph(g, &format!("member{i}"))?;
        }
        Ok(())
    }

    fn value(&mut self, v: &serde_json::Value) -> Result<()> {
        writeln!(self.w, "{}", serde_json::to_string_pretty(v)?)?;
        Ok(())
    }

    fn search(&mut self, r: &SearchResult, witnesses: bool) -> Result<()> {
        if self.json || !witnesses {
            let mut v = serde_json::to_value(r)?;
            if !witnesses {
                v.as_object_mut().expect("object").remove("witnesses");
            }
            return self.value(&v);
        }
        writeln!(self.w, "# optimum {} (exhaustive: {})", r.optimum, r.exhaustive)?;
        self.family(&r.witnesses)
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global()?;
    }
    let mut out = Out { json: cli.json, dot: cli.dot, w: io::stdout().lock() };
    match cli.command {
        Command::Gen { kind, params } => {
            let p = |i: usize| params.get(i).copied().ok_or_else(|| anyhow!("`{kind}` needs {} parameter(s)", i + 1));
            let g = match kind.as_str() {
                "complete" => named::complete(p(0)?)?,
                "empty" => named::empty(p(0)?)?,
                "star" => named::star(p(0)?)?,
                "path" => named::path(p(0)?)?,
                "cycle" => named::cycle(p(0)?)?,
                "matching" => named::matching(p(0)?)?,
                "turan" => named::turan(p(0)?, p(1)?)?,
                "bipartite" => named::complete_bipartite(p(0)?, p(1)?)?,
                "wheel" => named::wheel(p(0)?)?,
                "fan" => named::fan(p(0)?)?,
                "book" => named::book(p(0)?)?,
                "friendship" => named::friendship(p(0)?)?,
                "petersen" => named::petersen(),
                other => bail!("unknown graph kind `{other}`"),
            };
            out.graph(&g, &kind)?;
        }
        Command::Balloon { skeleton, length, spec } => {
            let spec = match spec {
                Some(s) => {
                    let text = if Path::new(&s).is_file() { fs::read_to_string(&s)? } else { s };
                    BalloonSpec::parse(&text)?
                }
                None => BalloonSpec::uniform(skeleton.resolve()?, length)?,
            };
            let b = odd_balloon(&spec)?;
            if out.json {
                out.value(&json!({
                    "graph6": b.graph.to_string(),
                    "vertices": b.graph.n(),
                    "edges": b.graph.edge_count(),
                    "spec": spec.to_json(),
                    "cycles": b.cycles.iter().map(|(e, c)| json!({ "edge": e, "cycle": c })).collect::<Vec<_>>(),
                }))?;
            } else {
                if !spec.long_cycles() {
                    eprintln!("warning: cycle lengths below 5 are outside the regime of the predictions");
                }
                out.graph(&b.graph, "balloon")?;
            }
        }
        Command::Crack { skeleton, set } => out.family(&crack_family(&skeleton.resolve()?, &set)?)?,
        Command::CrackAll { skeleton } => out.family(&cracking_family(&skeleton.resolve()?)?)?,
        Command::Decompose { skeleton, length, r, t_max, size_cap, edges, budget } => {
            let fo = odd_balloon(&BalloonSpec::uniform(skeleton.resolve()?, length)?)?.graph;
            let mut p = DecompositionParams::new(&fo, r, size_cap);
            if let Some(t) = t_max {
                p.t_max = t;
            }
            p.budget = Some(budget);
            p.edge_range = edges.as_deref().map(parse_range).transpose()?;
            match decomposition_family_bruteforce(&fo, &p)? {
                Decomposition::Complete { family, members, candidates } => {
                    if out.json {
                        let info: Vec<_> = members
                            .iter()
                            .map(|m| json!({ "graph6": m.graph.to_string(), "t": m.t, "at_size_cap": m.at_size_cap }))
                            .collect();
                        out.value(&json!({ "outcome": "complete", "candidates": candidates, "members": info }))?;
                    } else {
                        if members.iter().any(|m| m.at_size_cap) {
                            eprintln!("note: some members have exactly --size-cap vertices; larger members were not examined");
                        }
                        out.family(&family)?;
                    }
                }
                Decomposition::Indeterminate { candidate, budget } => {
                    let msg = format!("indeterminate: budget {budget} exhausted while testing {candidate}");
                    if out.json {
                        out.value(&json!({ "outcome": "indeterminate", "candidate": candidate.to_string(), "budget": budget }))?;
                    } else {
                        eprintln!("{msg}");
                    }
                    return Ok(ExitCode::from(3));
                }
            }
        }
        Command::Predict { f_bullet, n, mode, length, trust_from, skeleton } => {
            let prediction = match mode {
                PredictMode::Chi4 => {
                    if let Some(s) = skeleton {
                        let chi = chromatic_number(&read_graph(&s)?)?;
                        if chi < 4 {
                            eprintln!("warning: χ(F) = {chi}; the symbolic prediction assumes χ(F) >= 4");
                        }
                    }
                    predict_chi4(n)
                }
                _ => {
                    let fb = f_bullet.resolve()?.ok_or_else(|| anyhow!("give --fbullet or --family with --k"))?;
                    match mode {
                        PredictMode::Balloon => predict_ex_balloon(&fb, n, length)?,
                        _ => predict_ex_decomposition(&fb, n)?,
                    }
                }
            };
            out.value(&serde_json::to_value(prediction.trusted_from(trust_from))?)?;
        }
        Command::CheckFree { host, family, budget, parity } => {
            let host = read_graph(&host)?;
            let fam = read_family(&family)?;
            let cert = certify_free(&host, &fam, CertifyOptions { budget: Some(budget), parity_shortcut: parity });
            if out.json {
                out.value(&serde_json::to_value(&cert)?)?;
            } else {
                match &cert.verdict {
                    Verdict::Free => writeln!(out.w, "free ({} nodes{})", cert.stats.nodes, if cert.by_parity { ", by parity" } else { "" })?,
                    Verdict::Contains { member, embedding } => writeln!(out.w, "contains {member} at {embedding:?}")?,
                    Verdict::Indeterminate { budget } => writeln!(out.w, "indeterminate (budget {budget})")?,
                }
            }
            if cli.strict && matches!(cert.verdict, Verdict::Indeterminate { .. }) {
                return Ok(ExitCode::from(3));
            }
        }
        Command::SearchEx { n, forbid, witnesses, budget, i_understand } => {
            let mut job = SearchJob::new(n, Constraints::forbid(read_family(&forbid)?));
            job.collect_witnesses = witnesses;
            job.budget = budget;
            job.allow_large = i_understand;
            let r = exact_ex(&job)?;
            out.search(&r, witnesses)?;
            if cli.strict && !r.exhaustive {
                return Ok(ExitCode::from(3));
            }
        }
        Command::FOracle { n, nu, delta, witnesses } => {
            let r = f_oracle(n, nu, delta)?;
            out.search(&r, witnesses)?;
        }
        Command::Verify { quick, budget, f_bullet, n, mode, report: report_path } => {
            if let Some(fb) = f_bullet.resolve()? {
                let n = n.ok_or_else(|| anyhow!("--fbullet needs --n"))?;
                let mode = match mode {
                    LowerMode::Balloon => Mode::Balloon,
                    LowerMode::Decomposition => Mode::Decomposition,
                };
                let report = verify_lower_bound(&fb, n, mode, CertifyOptions { budget: Some(budget), parity_shortcut: false })?;
                out.value(&serde_json::to_value(&report)?)?;
                return Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE });
            }
            let report = run_battery(BatteryOptions { quick, budget: Some(budget) });
            if let Some(path) = report_path {
                fs::write(&path, serde_json::to_string_pretty(&report)?).with_context(|| format!("writing {}", path.display()))?;
            }
            if out.json {
                out.value(&serde_json::to_value(&report)?)?;
            } else {
                write!(out.w, "{}", report.render_text())?;
            }
            return Ok(if report.passed(cli.strict) { ExitCode::SUCCESS } else { ExitCode::FAILURE });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
