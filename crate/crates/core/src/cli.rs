//! The `safesep` command-line front end and its graph document format.
//!
//! ```text
//! # comment
//! n=5
//! w 1 1 1 1 1
//! e 0 1
//! e 1 2
//! set A 0
//! set B 4
//! ```
//!
//! `n=` comes first. Edges are written `e u v` with `u < v`. Named sets can
//! be passed to `--A`/`--B` by name instead of by ids.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::oracle::{random_ab, random_close_query, Family, GeneratorSpec, Oracle};
use crate::{
    close_to, close_to_with, find_asteroidal_triple, min_safe_separator, min_weight_st_separator, Mode,
    QueryInstance, Result, SafeSeparatorAnswer, SepError, VertexSet, WeightedGraph,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_NONE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_PARSE: i32 = 65;
pub const EXIT_NOINPUT: i32 = 66;
pub const EXIT_INTERNAL: i32 = 70;

/// A parsed graph file: the graph plus its named vertex sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: WeightedGraph,
    pub sets: BTreeMap<String, VertexSet>,
}

fn parse_err(line: usize, message: impl Into<String>) -> SepError {
    SepError::Parse { line, message: message.into() }
}

fn parse_num<T: std::str::FromStr>(tok: &str, line: usize) -> Result<T> {
    tok.parse().map_err(|_| parse_err(line, format!("expected a non-negative integer, found `{tok}`")))
}

impl GraphDocument {
    pub fn new(graph: WeightedGraph) -> Self {
        GraphDocument { graph, sets: BTreeMap::new() }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut weights: Option<Vec<u64>> = None;
        let mut edges: Vec<(usize, usize, usize)> = Vec::new();
        let mut sets = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if let Some(rest) = content.strip_prefix("n=") {
                if n.is_some() {
                    return Err(parse_err(line, "repeated `n=` header"));
                }
                n = Some(parse_num(rest.trim(), line)?);
                continue;
            }
            let Some(count) = n else {
                return Err(parse_err(line, "`n=` header must come first"));
            };
            let mut toks = content.split_whitespace();
            match toks.next() {
                Some("w") => {
                    if weights.is_some() {
                        return Err(parse_err(line, "repeated weight line"));
                    }
                    let ws = toks.map(|t| parse_num::<u64>(t, line)).collect::<Result<Vec<_>>>()?;
                    if ws.len() != count {
                        return Err(parse_err(line, format!("expected {count} weights, found {}", ws.len())));
                    }
                    if ws.contains(&0) {
                        return Err(parse_err(line, "weights must be >= 1"));
                    }
                    weights = Some(ws);
                }
                Some("e") => {
                    let ends = toks.map(|t| parse_num::<usize>(t, line)).collect::<Result<Vec<_>>>()?;
                    let [u, v] = ends[..] else {
                        return Err(parse_err(line, "edge lines hold exactly two ids"));
                    };
                    if u == v {
                        return Err(parse_err(line, format!("self-loop at {u}")));
                    }
                    if u > v {
                        return Err(parse_err(line, format!("edge endpoints must be ascending, found {u} {v}")));
                    }
                    if v >= count {
                        return Err(parse_err(line, format!("vertex {v} out of range")));
                    }
                    edges.push((u, v, line));
                }
                Some("set") => {
                    let name = toks.next().ok_or_else(|| parse_err(line, "set needs a name"))?;
                    let ids = toks.map(|t| parse_num::<usize>(t, line)).collect::<Result<Vec<_>>>()?;
                    if let Some(&bad) = ids.iter().find(|&&v| v >= count) {
                        return Err(parse_err(line, format!("vertex {bad} out of range")));
                    }
                    if sets.insert(name.to_string(), ids.into_iter().collect()).is_some() {
                        return Err(parse_err(line, format!("set `{name}` defined twice")));
                    }
                }
                Some(other) => return Err(parse_err(line, format!("unknown directive `{other}`"))),
                None => unreachable!("blank lines are skipped"),
            }
        }
        let n = n.ok_or_else(|| parse_err(0, "missing `n=` header"))?;
        let mut graph = WeightedGraph::new(weights.unwrap_or_else(|| vec![1; n]))
            .map_err(|e| parse_err(0, e.to_string()))?;
        for (u, v, line) in edges {
            if graph.has_edge(u, v) {
                return Err(parse_err(line, format!("duplicate edge {u} {v}")));
            }
            graph.add_edge(u, v).map_err(|e| parse_err(line, e.to_string()))?;
        }
        Ok(GraphDocument { graph, sets })
    }

    /// Resolves a named set, or a comma/space separated id list.
    pub fn resolve_set(&self, text: &str) -> Result<VertexSet> {
        if let Some(set) = self.sets.get(text.trim()) {
            return Ok(set.clone());
        }
        let ids = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| SepError::InvalidArgument(format!("`{text}` is neither a set name nor an id list")))
            })
            .collect::<Result<VertexSet>>()?;
        self.graph.check_set(&ids)?;
        Ok(ids)
    }
}

impl fmt::Display for GraphDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = &self.graph;
        writeln!(f, "n={}", g.vertex_count())?;
        write!(f, "w")?;
        for w in g.weights() {
            write!(f, " {w}")?;
        }
        writeln!(f)?;
        for (u, v) in g.edges() {
            writeln!(f, "e {u} {v}")?;
        }
        for (name, set) in &self.sets {
            write!(f, "set {name}")?;
            for v in set {
                write!(f, " {v}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Parser, Debug)]
#[command(name = "safesep", version, about = "Minimum-weight safe separators in AT-free graphs")]
struct Cli {
    /// Emit a single JSON document instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report an asteroidal triple, or confirm the graph is AT-free.
    CheckAtfree { file: String },
    /// Minimum-weight safe A,B-separator.
    MinSafeSep {
        file: String,
        #[arg(long = "A")]
        a: String,
        #[arg(long = "B")]
        b: String,
        #[arg(long, conflicts_with = "verified")]
        fast: bool,
        #[arg(long)]
        verified: bool,
    },
    /// Minimal s,t-separators close to sA.
    CloseTo {
        file: String,
        #[command(flatten)]
        st: Terminals,
        #[arg(long = "A", default_value = "")]
        a: String,
    },
    /// Minimum-weight s,t vertex separator.
    MinSep {
        file: String,
        #[command(flatten)]
        st: Terminals,
    },
    /// All minimal s,t-separators by subset enumeration.
    EnumMinimal {
        file: String,
        #[command(flatten)]
        st: Terminals,
    },
    /// Print a random AT-free graph document.
    Gen {
        #[arg(long, value_enum)]
        family: GenFamily,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        wmax: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare the algorithms against the brute-force oracles on seeded instances.
    Verify {
        #[arg(long, default_value_t = 100)]
        seeds: u64,
        #[arg(long, default_value_t = 8)]
        n: usize,
    },
}

#[derive(Args, Debug)]
struct Terminals {
    #[arg(long)]
    s: usize,
    #[arg(long)]
    t: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum GenFamily {
    Interval,
    Reject,
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Reply {
    code: i32,
    text: String,
    json: Value,
}

fn exit_code(err: &SepError) -> i32 {
    match err {
        SepError::InvalidArgument(_) | SepError::CapExceeded { .. } => EXIT_USAGE,
        SepError::Parse { .. } => EXIT_PARSE,
        SepError::NoSeparator(_) => EXIT_NONE,
        SepError::NotAtFree(_) => EXIT_FALSE,
        SepError::Internal(_) => EXIT_INTERNAL,
    }
}

fn set_json(s: &VertexSet) -> Value {
    json!(s.to_vec())
}

fn list(s: &VertexSet) -> String {
    s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// Runs one command line (including the program name) and captures its
/// output instead of printing it.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let started = Instant::now();
    let result = match &cli.command {
        Command::Gen { family, n, wmax, seed } => return gen(*family, *n, *wmax, *seed),
        Command::Verify { seeds, n } => verify(*seeds, *n),
        other => load_and_run(other),
    };
    let runtime_ms = started.elapsed().as_millis() as u64;
    match result {
        Ok(Reply { code, text, mut json }) => {
            if cli.json {
                json["runtime_ms"] = json!(runtime_ms);
                Outcome { code, stdout: format!("{json}\n"), stderr: String::new() }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            }
        }
        Err(err) => {
            let code = exit_code(&err);
            let (stdout, stderr) = match &err {
                SepError::NotAtFree(triple) => {
                    let text = format!("not AT-free: asteroidal triple {} {} {}\n", triple[0], triple[1], triple[2]);
                    if cli.json {
                        let doc = json!({"status": "not-at-free", "triple": triple, "runtime_ms": runtime_ms});
                        (format!("{doc}\n"), String::new())
                    } else {
                        (text, String::new())
                    }
                }
                SepError::NoSeparator(_) if cli.json => {
                    (format!("{}\n", json!({"status": "none", "runtime_ms": runtime_ms})), String::new())
                }
                SepError::NoSeparator(_) => ("none\n".to_string(), String::new()),
                _ if cli.json => {
                    let doc = json!({"status": "error", "message": err.to_string(), "runtime_ms": runtime_ms});
                    (format!("{doc}\n"), String::new())
                }
                _ => (String::new(), format!("error: {err}\n")),
            };
            Outcome { code, stdout, stderr }
        }
    }
}

fn load_and_run(cmd: &Command) -> Result<Reply> {
    let file = match cmd {
        Command::CheckAtfree { file }
        | Command::MinSafeSep { file, .. }
        | Command::CloseTo { file, .. }
        | Command::MinSep { file, .. }
        | Command::EnumMinimal { file, .. } => file,
        Command::Gen { .. } | Command::Verify { .. } => unreachable!("handled by the caller"),
    };
    let text = match std::fs::read_to_string(file) {
        Ok(text) => text,
        Err(e) => {
            return Ok(Reply {
                code: EXIT_NOINPUT,
                text: String::new(),
                json: json!({"status": "error", "message": format!("cannot read {file}: {e}")}),
            })
            .map(|r| Reply { text: format!("cannot read {file}: {e}\n"), ..r })
        }
    };
    let doc = GraphDocument::parse(&text)?;
    let g = &doc.graph;
    match cmd {
        Command::CheckAtfree { .. } => Ok(match find_asteroidal_triple(g) {
            None => Reply { code: EXIT_OK, text: "AT-free\n".into(), json: json!({"status": "at-free"}) },
            Some(w) => {
                let [a, b, c] = w.triple;
                let mut text = format!("not AT-free: asteroidal triple {a} {b} {c}\n");
                for p in &w.paths {
                    let ids: Vec<String> = p.iter().map(|v| v.to_string()).collect();
                    text.push_str(&format!("path {}\n", ids.join(" ")));
                }
                Reply {
                    code: EXIT_FALSE,
                    text,
                    json: json!({"status": "not-at-free", "triple": w.triple, "paths": w.paths}),
                }
            }
        }),
        Command::MinSafeSep { a, b, verified, .. } => {
            let q = QueryInstance::new(g.clone(), doc.resolve_set(a)?, doc.resolve_set(b)?)?;
            let mode = if *verified { Mode::Verified } else { Mode::Fast };
            Ok(answer_reply(&min_safe_separator(&q, mode)?))
        }
        Command::CloseTo { st, a, .. } => {
            let a = doc.resolve_set(a)?;
            let report = close_to_with(g, st.s, st.t, &a, Mode::Fast)?;
            debug_assert_eq!(report.family, close_to(g, st.s, st.t, &a)?);
            Ok(family_reply(report.family.as_slice()))
        }
        Command::MinSep { st, .. } => {
            let (separator, weight) = min_weight_st_separator(g, st.s, st.t)?;
            Ok(answer_reply(&SafeSeparatorAnswer::Found { separator, weight }))
        }
        Command::EnumMinimal { st, .. } => {
            let fam = Oracle::from_env().enumerate_minimal_st_separators(g, st.s, st.t)?;
            Ok(family_reply(fam.as_slice()))
        }
        Command::Gen { .. } | Command::Verify { .. } => unreachable!("handled by the caller"),
    }
}

fn answer_reply(ans: &SafeSeparatorAnswer) -> Reply {
    match ans {
        SafeSeparatorAnswer::None => Reply { code: EXIT_NONE, text: "none\n".into(), json: json!({"status": "none"}) },
        SafeSeparatorAnswer::Found { separator, weight } => Reply {
            code: EXIT_OK,
            text: format!("separator {}\nweight {weight}\n", list(separator)),
            json: json!({"status": "ok", "separator": set_json(separator), "weight": weight}),
        },
    }
}

fn family_reply(members: &[VertexSet]) -> Reply {
    let mut text = String::new();
    for m in members {
        text.push_str(&format!("separator {}\n", list(m)));
    }
    text.push_str(&format!("count {}\n", members.len()));
    let family: Vec<Value> = members.iter().map(set_json).collect();
    let status = if members.is_empty() { "none" } else { "ok" };
    Reply {
        code: if members.is_empty() { EXIT_NONE } else { EXIT_OK },
        text,
        json: json!({"status": status, "family": family}),
    }
}

fn gen(family: GenFamily, n: usize, wmax: u64, seed: u64) -> Outcome {
    let family = match family {
        GenFamily::Interval => Family::Interval,
        GenFamily::Reject => Family::RejectionAtFree,
    };
    match GeneratorSpec::new(family, n, wmax, seed).generate() {
        Ok(g) => Outcome { code: EXIT_OK, stdout: GraphDocument::new(g).to_string(), stderr: String::new() },
        Err(e) => Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

/// Outcome of checking one seeded instance against the oracles.
#[derive(Debug, Default, Clone, Copy)]
struct Tally {
    checked: u64,
    mismatches: u64,
}

impl std::ops::Add for Tally {
    type Output = Tally;
    fn add(self, o: Tally) -> Tally {
        Tally { checked: self.checked + o.checked, mismatches: self.mismatches + o.mismatches }
    }
}

fn verify_seed(seed: u64, n: usize, oracle: Oracle) -> Result<Tally> {
    let family = if seed % 2 == 1 && n <= 12 { Family::RejectionAtFree } else { Family::Interval };
    let g = GeneratorSpec::new(family, n, 10, seed).generate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut tally = Tally::default();
    if let Some((a, b)) = random_ab(&g, &mut rng, 3) {
        let q = QueryInstance::new(g.clone(), a.clone(), b.clone())?;
        let ours = min_safe_separator(&q, Mode::Verified)?;
        let truth = oracle.min_safe_brute(&g, &a, &b)?;
        tally.checked += 1;
        tally.mismatches += u64::from(ours.weight() != truth.weight());
    }
    if let Some((s, t, a)) = random_close_query(&g, &mut rng, 3) {
        let ours = close_to_with(&g, s, t, &a, Mode::Verified)?.family;
        let truth = oracle.close_family_brute(&g, s, t, &a)?;
        tally.checked += 1;
        tally.mismatches += u64::from(ours != truth);
    }
    Ok(tally)
}

fn verify(seeds: u64, n: usize) -> Result<Reply> {
    if n == 0 {
        return Err(SepError::InvalidArgument("--n must be >= 1".into()));
    }
    let oracle = Oracle::from_env();
    let tally = (0..seeds)
        .into_par_iter()
        .map(|seed| verify_seed(seed, n, oracle))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(Tally::default(), |a, b| a + b);
    let code = if tally.mismatches == 0 { EXIT_OK } else { EXIT_FALSE };
    Ok(Reply {
        code,
        text: format!("checked {} mismatches {}\n", tally.checked, tally.mismatches),
        json: json!({
            "status": if code == EXIT_OK { "ok" } else { "mismatch" },
            "checked": tally.checked,
            "mismatches": tally.mismatches,
        }),
    })
}
