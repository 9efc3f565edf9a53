//! The `structcode` command line. Every command prints one JSON payload on standard output
//! (compact unless `--pretty`), except `marker stream-decode`, which prints decoded facts as
//! graph-file lines as soon as they are settled.
//!
//! Exit codes: 0 success or true, 1 checked false, 2 usage, parse or I/O error, 3 precondition
//! violation.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::backforth::{
    bf_equiv_literal, interval_equiv, lg_certify, lg_concat_certify, phi_pair, phi_tuple, BfSolver, Verdict,
};
use crate::codings::{daisy_decode, daisy_encode, shuffle_build, shuffle_build_set, shuffle_decode, ShuffleFragment};
use crate::dyadic::{ColorOrderMap, Dyadic};
use crate::error::{Error, Result};
use crate::fslin::{
    apply_first_coord_map, block_members, block_of, fs_compare, fs_enumerate, fs_member, fragment_signature,
    mentions, min_length_in_interval, random_member, shape, shape_formulas, shift_tuple, FSElement, Side,
};
use crate::interp::{builtin_int_in_nat, check_interpretation, check_marker, trivial_interp, InterpretationSpec};
use crate::marker::{marker_decode, marker_decoder_formulas, marker_encode, InputFact, StreamDecoder};
use crate::structure::{Digraph, FinLinOrder, Signature, Structure, UGraph};

/// Version of the JSON payload layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "structcode", version, about = "Coding constructions between countable structures")]
struct Cli {
    /// Indent the JSON payload.
    #[arg(long, global = true)]
    pretty: bool,
    /// Seed for every random choice.
    #[arg(long, global = true, env = "STRUCTCODE_SEED", default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Marker's embedding of digraphs in graphs.
    #[command(subcommand)]
    Marker(MarkerCmd),
    /// The Friedman–Stanley ordering L(G).
    #[command(subcommand)]
    Fs(FsCmd),
    /// Back-and-forth relations and their formulas.
    #[command(subcommand)]
    Bnf(BnfCmd),
    /// Effective interpretations on finite carriers.
    #[command(subcommand)]
    Interp(InterpCmd),
    /// Daisy graphs coding a set.
    #[command(subcommand)]
    Daisy(DaisyCmd),
    /// Finite fragments of shuffle sums.
    #[command(subcommand)]
    Shuffle(ShuffleCmd),
}

#[derive(Debug, Subcommand)]
enum MarkerCmd {
    /// Encode a digraph file as a graph.
    Encode {
        input: PathBuf,
        /// Include the role of every output vertex.
        #[arg(long)]
        tags: bool,
        /// Also write the graph in graph-file format.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Decode a graph file back to a digraph.
    Decode { input: PathBuf },
    /// Decode facts read one per line from standard input.
    StreamDecode,
    /// Print the three decoder formulas.
    Formulas,
}

#[derive(Debug, Args)]
struct GraphArg {
    /// Digraph file defining L(G).
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Debug, Args)]
struct Bounds {
    #[arg(long, default_value_t = 1)]
    max_half_len: usize,
    #[arg(long, default_value_t = 3)]
    max_exponent: u32,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Debug, Subcommand)]
enum FsCmd {
    /// Membership of an element given as a JSON term array.
    Member {
        #[command(flatten)]
        g: GraphArg,
        element: String,
    },
    /// Compare two elements.
    Compare { x: String, y: String },
    /// The tuple of vertices an element mentions.
    Mentions { element: String },
    /// The block of an element: its type index and position, and its members.
    Block {
        #[command(flatten)]
        g: GraphArg,
        element: String,
    },
    /// Least length of a member strictly between two members, with a witness.
    Minlen {
        #[command(flatten)]
        g: GraphArg,
        x: String,
        y: String,
    },
    /// Shape of a tuple of members.
    Shape {
        #[command(flatten)]
        g: GraphArg,
        elements: Vec<String>,
        /// Also print the Σ and Π shape formulas.
        #[arg(long)]
        formulas: bool,
    },
    /// Enumerate a finite fragment of L(G).
    Enumerate {
        #[command(flatten)]
        g: GraphArg,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Shift a tuple past a separator.
    Shift {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        separator: String,
        #[arg(long, value_enum, default_value = "right")]
        side: SideArg,
        elements: Vec<String>,
    },
    /// Apply the first-coordinate automorphism extending `--map a=b,...`.
    Automorph {
        #[arg(long)]
        map: String,
        elements: Vec<String>,
    },
    /// A seeded random member.
    Random {
        #[command(flatten)]
        g: GraphArg,
        #[command(flatten)]
        bounds: Bounds,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Certify γ-equivalence of two tuples given as JSON arrays of elements.
    Certify {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        gamma: u32,
        left: String,
        right: String,
    },
    /// Certify equivalence of concatenations `b1 b2` and `c1 c2`.
    CertifyConcat {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        gamma: u32,
        b1: String,
        b2: String,
        c1: String,
        c2: String,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SigArg {
    Digraph,
    Order,
}

#[derive(Debug, Subcommand)]
enum BnfCmd {
    /// Decide whether two tuples are γ-equivalent.
    Equiv {
        #[arg(long)]
        gamma: u32,
        a: PathBuf,
        b: PathBuf,
        /// Comma-separated element ids.
        #[arg(long, default_value = "")]
        tuple_a: String,
        #[arg(long, default_value = "")]
        tuple_b: String,
        #[arg(long)]
        bound: Option<usize>,
        /// Use the literal definition with moves of at most this length.
        #[arg(long)]
        literal: Option<usize>,
    },
    /// The formula defining the γ-class of a tuple.
    Formula {
        #[arg(long)]
        gamma: u32,
        structure: PathBuf,
        #[arg(long, default_value = "")]
        tuple: String,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// The formula expressing γ-equivalence of two m-tuples.
    Pair {
        #[arg(long)]
        gamma: u32,
        #[arg(long)]
        arity: usize,
        #[arg(long, value_enum, default_value = "digraph")]
        signature: SigArg,
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
    /// Interval-wise equivalence of increasing tuples of linear orders.
    Interval {
        #[arg(long)]
        gamma: u32,
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value = "")]
        tuple_a: String,
        #[arg(long, default_value = "")]
        tuple_b: String,
    },
}

#[derive(Debug, Subcommand)]
enum InterpCmd {
    /// Check an interpretation spec on a carrier against a target.
    Check {
        #[arg(long)]
        carrier: PathBuf,
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        target: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_arity: usize,
    },
    /// The built-in interpretation of ℤ in ℕ on the window of size n.
    Int {
        #[arg(long, default_value_t = 20)]
        n: u64,
    },
    /// The identity interpretation of a target in a carrier of the same size.
    Trivial {
        #[arg(long)]
        carrier: PathBuf,
        #[arg(long)]
        target: PathBuf,
    },
    /// Marker's decoding as an interpretation, checked on one digraph.
    Marker {
        #[command(flatten)]
        g: GraphArg,
    },
}

#[derive(Debug, Subcommand)]
enum DaisyCmd {
    /// Build the daisy of a set below a bound.
    Encode {
        /// Comma-separated members.
        #[arg(long, default_value = "")]
        set: String,
        #[arg(long)]
        bound: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Read a set back from a daisy graph file.
    Decode { input: PathBuf },
}

#[derive(Debug, Subcommand)]
enum ShuffleCmd {
    /// Build a fragment from labels, or from a set with `--set` and `--bound`.
    Build {
        #[arg(long)]
        resolution: u32,
        #[arg(long)]
        labels: Option<String>,
        #[arg(long)]
        omega: bool,
        #[arg(long)]
        set: Option<String>,
        #[arg(long)]
        bound: Option<u64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Decode a fragment file, keeping index points up to `--resolution`.
    Decode {
        input: PathBuf,
        #[arg(long)]
        resolution: Option<u32>,
    },
}

/// What a command produced.
enum Output {
    Json(i32, Value),
    Done,
}

fn ok(v: Value) -> Output {
    Output::Json(0, v)
}

fn verdict(holds: bool, v: Value) -> Output {
    Output::Json(if holds { 0 } else { 1 }, v)
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Io(_) | Error::UnboundVariable(_) | Error::Malformed(_) => 2,
        _ => 3,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse(_) => "parse",
        Error::Io(_) => "io",
        Error::Precondition(_) => "precondition",
        Error::Domain(_) => "domain",
        Error::Order(_) => "order",
        Error::Constraint(_) => "constraint",
        Error::Unsupported(_) => "unsupported",
        Error::UnboundVariable(_) => "unbound_variable",
        Error::Signature(_) => "signature",
        Error::Malformed(_) => "malformed",
        Error::Refused(_) => "refused",
        Error::Resolution(_) => "resolution",
        Error::TooLarge(_) => "too_large",
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn load_digraph(path: &Path) -> Result<Digraph> {
    Digraph::parse(&read(path)?)
}

fn element(text: &str) -> Result<FSElement> {
    FSElement::parse_json(text)
}

fn elements(texts: &[String]) -> Result<Vec<FSElement>> {
    texts.iter().map(|t| element(t)).collect()
}

fn tuple_json(text: &str) -> Result<Vec<FSElement>> {
    let v: Vec<Value> = serde_json::from_str(text).map_err(|e| Error::Parse(format!("tuple: {e}")))?;
    v.iter().map(|x| element(&x.to_string())).collect()
}

fn ids(text: &str) -> Result<Vec<u64>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| Error::Parse(format!("`{s}` is not a natural number"))))
        .collect()
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("payload types serialize")
}

fn prefix_of(set: &str, bound: u64) -> Result<Vec<bool>> {
    let members: BTreeSet<u64> = ids(set)?.into_iter().collect();
    Ok((0..bound).map(|n| members.contains(&n)).collect())
}

fn marker(cmd: MarkerCmd, stdin: &mut dyn BufRead, stdout: &mut dyn Write) -> Result<Output> {
    match cmd {
        MarkerCmd::Encode { input, tags, output } => {
            let out = marker_encode(&load_digraph(&input)?)?;
            if let Some(p) = output {
                write_file(&p, &out.graph.to_text())?;
            }
            let mut v = json!({ "graph": to_value(&out.graph) });
            if tags {
                v["roles"] = to_value(&out.roles);
            }
            Ok(ok(v))
        }
        MarkerCmd::Decode { input } => {
            let h = UGraph::parse(&read(&input)?)?;
            Ok(ok(json!({ "digraph": to_value(&marker_decode(&h)?) })))
        }
        MarkerCmd::StreamDecode => {
            let mut dec = StreamDecoder::new();
            for line in stdin.lines() {
                let line = line?;
                if let Some(fact) = InputFact::parse_line(&line)? {
                    for d in dec.push(fact) {
                        writeln!(stdout, "{}", d.to_line())?;
                    }
                }
            }
            Ok(Output::Done)
        }
        MarkerCmd::Formulas => {
            let (b, sq, pent) = marker_decoder_formulas();
            Ok(ok(json!({
                "base": b.to_string(),
                "edge": sq.to_string(),
                "non_edge": pent.to_string(),
            })))
        }
    }
}

fn fs(cmd: FsCmd, seed: u64) -> Result<Output> {
    match cmd {
        FsCmd::Member { g, element: e } => {
            let m = fs_member(&load_digraph(&g.graph)?, &element(&e)?)?;
            Ok(verdict(m, json!({ "member": m })))
        }
        FsCmd::Compare { x, y } => {
            let ord = fs_compare(&element(&x)?, &element(&y)?);
            let s = match ord {
                std::cmp::Ordering::Less => "less",
                std::cmp::Ordering::Equal => "equal",
                std::cmp::Ordering::Greater => "greater",
            };
            Ok(ok(json!({ "order": s })))
        }
        FsCmd::Mentions { element: e } => Ok(ok(json!({ "mentions": mentions(&element(&e)?) }))),
        FsCmd::Block { g, element: e } => {
            let (g, x) = (load_digraph(&g.graph)?, element(&e)?);
            let (m, k) = block_of(&g, &x)?;
            Ok(ok(json!({ "type_index": m, "position": k, "members": to_value(&block_members(&g, &x)?) })))
        }
        FsCmd::Minlen { g, x, y } => {
            let (k, w) = min_length_in_interval(&load_digraph(&g.graph)?, &element(&x)?, &element(&y)?)?;
            Ok(ok(json!({ "half_length": k, "witness": to_value(&w) })))
        }
        FsCmd::Shape { g, elements: es, formulas } => {
            let s = shape(&load_digraph(&g.graph)?, &elements(&es)?)?;
            let mut v = json!({ "shape": to_value(&s) });
            if formulas {
                let f = shape_formulas(&s)?;
                v["sigma"] = json!({ "class": f.sigma.class().to_string(), "formula": f.sigma.to_string() });
                v["pi"] = json!({ "class": f.pi.class().to_string(), "formula": f.pi.to_string() });
            }
            Ok(ok(v))
        }
        FsCmd::Enumerate { g, bounds } => {
            let frag = fs_enumerate(&load_digraph(&g.graph)?, bounds.max_half_len, bounds.max_exponent)?;
            Ok(ok(json!({
                "count": frag.len(),
                "block_sizes": fragment_signature(&frag),
                "elements": to_value(&frag),
            })))
        }
        FsCmd::Shift { g, separator, side, elements: es } => {
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            let s = shift_tuple(&load_digraph(&g.graph)?, &elements(&es)?, &element(&separator)?, side)?;
            Ok(ok(to_value(&s)))
        }
        FsCmd::Automorph { map, elements: es } => {
            let mut pairs = Vec::new();
            for item in map.split(',').filter(|s| !s.trim().is_empty()) {
                let (a, b) = item
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("`{item}` is not of the form a=b")))?;
                pairs.push((a.trim().parse::<Dyadic>()?, b.trim().parse::<Dyadic>()?));
            }
            let mut f = ColorOrderMap::new(pairs)?;
            let images = elements(&es)?
                .iter()
                .map(|x| apply_first_coord_map(&mut f, x))
                .collect::<Result<Vec<_>>>()?;
            Ok(ok(json!({ "images": to_value(&images) })))
        }
        FsCmd::Random { g, bounds, count } => {
            let g = load_digraph(&g.graph)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let xs = (0..count)
                .map(|_| random_member(&g, &mut rng, bounds.max_half_len, bounds.max_exponent))
                .collect::<Result<Vec<_>>>()?;
            Ok(ok(json!({ "seed": seed, "elements": to_value(&xs) })))
        }
        FsCmd::Certify { g, gamma, left, right } => {
            let c = lg_certify(&load_digraph(&g.graph)?, &tuple_json(&left)?, &tuple_json(&right)?, gamma)?;
            Ok(certificate(c))
        }
        FsCmd::CertifyConcat { g, gamma, b1, b2, c1, c2 } => {
            let (b1, b2, c1, c2) = (tuple_json(&b1)?, tuple_json(&b2)?, tuple_json(&c1)?, tuple_json(&c2)?);
            let c = lg_concat_certify(&load_digraph(&g.graph)?, (&b1, &b2), (&c1, &c2), gamma)?;
            Ok(certificate(c))
        }
    }
}

fn certificate(c: crate::backforth::Certificate) -> Output {
    let code = match c.verdict {
        Verdict::Equivalent => 0,
        Verdict::Distinguished => 1,
        Verdict::Unknown => 3,
    };
    Output::Json(code, to_value(&c))
}

fn bnf(cmd: BnfCmd) -> Result<Output> {
    match cmd {
        BnfCmd::Equiv { gamma, a, b, tuple_a, tuple_b, bound, literal } => {
            let (a, b) = (Structure::parse(&read(&a)?)?, Structure::parse(&read(&b)?)?);
            let ta = a.elements_of(&ids(&tuple_a)?)?;
            let tb = b.elements_of(&ids(&tuple_b)?)?;
            if let Some(move_len) = literal {
                let e = bf_equiv_literal(&a, &ta, &b, &tb, gamma, move_len)?;
                return Ok(verdict(e, json!({ "equivalent": e, "gamma": gamma, "literal": move_len })));
            }
            let bound = bound.unwrap_or(a.size().max(b.size()));
            let mv = BfSolver::new(&a, &b, bound)?.explain(&ta, &tb, gamma)?;
            let e = mv.is_none();
            let mut v = json!({ "equivalent": e, "gamma": gamma, "bound": bound });
            if let Some(mv) = mv {
                let labels: Vec<u64> = mv
                    .elements
                    .iter()
                    .map(|&i| match mv.side {
                        crate::backforth::MoveSide::Left => a.label(i as usize),
                        crate::backforth::MoveSide::Right => b.label(i as usize),
                    })
                    .collect();
                v["move"] = json!({ "side": to_value(&mv.side), "elements": labels });
            }
            Ok(verdict(e, v))
        }
        BnfCmd::Formula { gamma, structure, tuple, bound } => {
            let a = Structure::parse(&read(&structure)?)?;
            let t = a.elements_of(&ids(&tuple)?)?;
            let f = phi_tuple(&a, &t, gamma, bound.unwrap_or(a.size()))?;
            Ok(ok(json!({ "class": f.class().to_string(), "formula": f.to_string() })))
        }
        BnfCmd::Pair { gamma, arity, signature, bound } => {
            let sig = match signature {
                SigArg::Digraph => Signature::digraph(),
                SigArg::Order => Signature::order(),
            };
            let f = phi_pair(&sig, arity, gamma, bound);
            Ok(ok(json!({ "class": f.class().to_string(), "formula": f.to_string() })))
        }
        BnfCmd::Interval { gamma, a, b, tuple_a, tuple_b } => {
            let (a, b) = (FinLinOrder::parse(&read(&a)?)?, FinLinOrder::parse(&read(&b)?)?);
            let r = interval_equiv(&a, &ids(&tuple_a)?, &b, &ids(&tuple_b)?, gamma)?;
            Ok(verdict(r.equivalent, to_value(&r)))
        }
    }
}

fn interp(cmd: InterpCmd) -> Result<Output> {
    let report = match cmd {
        InterpCmd::Check { carrier, spec, target, max_arity } => {
            let b = Structure::parse(&read(&carrier)?)?;
            let spec = InterpretationSpec::parse(&read(&spec)?)?;
            let target = Structure::parse(&read(&target)?)?;
            check_interpretation(&b, &spec, &target, max_arity)?
        }
        InterpCmd::Int { n } => {
            let (b, spec, target) = builtin_int_in_nat(n)?;
            check_interpretation(&b, &spec, &target, spec.max_arity)?
        }
        InterpCmd::Trivial { carrier, target } => {
            let b = Structure::parse(&read(&carrier)?)?;
            let a = Structure::parse(&read(&target)?)?;
            trivial_interp(&a, &b)?.1
        }
        InterpCmd::Marker { g } => check_marker(&load_digraph(&g.graph)?)?,
    };
    Ok(verdict(report.passed, to_value(&report)))
}

fn daisy(cmd: DaisyCmd) -> Result<Output> {
    match cmd {
        DaisyCmd::Encode { set, bound, output } => {
            let g = daisy_encode(&prefix_of(&set, bound)?, bound)?;
            if let Some(p) = output {
                write_file(&p, &g.to_text())?;
            }
            Ok(ok(json!({ "graph": to_value(&g) })))
        }
        DaisyCmd::Decode { input } => {
            let d = daisy_decode(&UGraph::parse(&read(&input)?)?)?;
            let set: Vec<usize> = d.prefix.iter().enumerate().filter(|(_, m)| **m).map(|(n, _)| n).collect();
            Ok(ok(json!({ "bound": d.prefix.len(), "set": set, "daisy": to_value(&d) })))
        }
    }
}

fn shuffle(cmd: ShuffleCmd) -> Result<Output> {
    match cmd {
        ShuffleCmd::Build { resolution, labels, omega, set, bound, output } => {
            let f = match (labels, set) {
                (Some(l), None) => shuffle_build(&ids(&l)?.into_iter().collect(), omega, resolution)?,
                (None, Some(s)) => {
                    let bound = bound.ok_or_else(|| Error::pre("--set needs --bound"))?;
                    shuffle_build_set(&prefix_of(&s, bound)?, bound, resolution)?
                }
                _ => return Err(Error::pre("give exactly one of --labels and --set")),
            };
            let text = f.to_text();
            if let Some(p) = output {
                write_file(&p, &text)?;
            }
            Ok(ok(json!({
                "blocks": f.blocks.len(),
                "elements": f.order().len(),
                "omega_prefix": f.omega_prefix,
                "fragment": text,
            })))
        }
        ShuffleCmd::Decode { input, resolution } => {
            let mut f = ShuffleFragment::parse(&read(&input)?)?;
            if let Some(r) = resolution {
                f.blocks.retain(|b| b.index.exponent() <= r);
            }
            let r = shuffle_decode(&f)?;
            let mut v = to_value(&r);
            v["members"] = to_value(&r.members());
            Ok(ok(v))
        }
    }
}

fn render(v: &Value, pretty: bool) -> String {
    let body = if pretty {
        serde_json::to_string_pretty(v)
    } else {
        serde_json::to_string(v)
    };
    body.expect("values serialize")
}

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(argv: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let pretty = cli.pretty;
    let result = match cli.command {
        Command::Marker(c) => marker(c, stdin, stdout),
        Command::Fs(c) => fs(c, cli.seed),
        Command::Bnf(c) => bnf(c),
        Command::Interp(c) => interp(c),
        Command::Daisy(c) => daisy(c),
        Command::Shuffle(c) => shuffle(c),
    };
    match result {
        Ok(Output::Done) => 0,
        Ok(Output::Json(code, mut v)) => {
            if let Value::Object(m) = &mut v {
                m.insert("schema".into(), json!(SCHEMA_VERSION));
            }
            let _ = writeln!(stdout, "{}", render(&v, pretty));
            code
        }
        Err(e) => {
            let v = json!({ "schema": SCHEMA_VERSION, "error": { "kind": error_kind(&e), "message": e.to_string() } });
            let _ = writeln!(stdout, "{}", render(&v, pretty));
            let _ = writeln!(stderr, "structcode: {e}");
            exit_code(&e)
        }
    }
}
