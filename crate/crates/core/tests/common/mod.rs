#![allow(dead_code)]

use std::path::{Path, PathBuf};

use structcode::cli;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub stdin: &'static str,
    pub code: i32,
}

const fn case(name: &'static str, args: &'static [&'static str], code: i32) -> Case {
    Case { name, args, stdin: "", code }
}

/// Command lines whose output is pinned under `tests/golden`. `@` stands for the data directory.
pub const CASES: &[Case] = &[
    case("fs_member", &["fs", "member", "--graph", "@/g.struct", r#"["3/4",0]"#], 0),
    case("fs_member_no", &["fs", "member", "--graph", "@/g.struct", r#"["1/2",0]"#], 1),
    case("fs_compare", &["fs", "compare", r#"["1/2","5/8","3/4",1]"#, r#"["3/4",0]"#], 0),
    case("fs_mentions", &["fs", "mentions", r#"["1/8","1/2","5/8",0]"#], 0),
    case("fs_block", &["fs", "block", "--graph", "@/g.struct", r#"["1/4","1/8","3/8",1]"#], 0),
    case("fs_minlen", &["fs", "minlen", "--graph", "@/g.struct", r#"["1/4","1/8","3/8",0]"#, r#"["3/4",0]"#], 0),
    case(
        "fs_shape",
        &["fs", "shape", "--formulas", "--graph", "@/g.struct", r#"["3/4",0]"#, r#"["1/4","1/8","3/8",1]"#],
        0,
    ),
    case("fs_enumerate", &["fs", "enumerate", "--graph", "@/g.struct", "--max-half-len", "1", "--max-exponent", "3"], 0),
    case(
        "fs_shift",
        &["fs", "shift", "--graph", "@/g.struct", "--separator", r#"["3/4",0]"#, r#"["1/4","1/8","3/8",1]"#],
        0,
    ),
    case("fs_automorph", &["fs", "automorph", "--map", "1/4=5/8", r#"["1/4","1/8","3/8",1]"#], 0),
    case("fs_random", &["--seed", "7", "fs", "random", "--graph", "@/g.struct", "--count", "3", "--max-half-len", "2"], 0),
    case(
        "fs_certify",
        &["fs", "certify", "--gamma", "2", "--graph", "@/g.struct", r#"[["1/4","1/8","3/8",1]]"#, r#"[["5/8","1/8","3/8",1]]"#],
        0,
    ),
    case("bnf_equiv", &["bnf", "equiv", "--gamma", "1", "@/chain2.struct", "@/chain3.struct"], 1),
    case("bnf_equiv_tuple", &["bnf", "equiv", "--gamma", "2", "@/chain3.struct", "@/chain3.struct", "--tuple-a", "1", "--tuple-b", "1"], 0),
    case("bnf_equiv_literal", &["bnf", "equiv", "--gamma", "1", "@/chain2.struct", "@/chain2.struct", "--literal", "2"], 0),
    case("bnf_formula", &["bnf", "formula", "--gamma", "1", "@/chain2.struct", "--tuple", "0"], 0),
    case("bnf_pair", &["bnf", "pair", "--gamma", "1", "--arity", "1", "--signature", "order", "--bound", "1"], 0),
    case(
        "bnf_interval",
        &["bnf", "interval", "--gamma", "1", "@/chain6.struct", "@/chain6.struct", "--tuple-a", "1,3", "--tuple-b", "1,4"],
        1,
    ),
    case("interp_check", &["interp", "check", "--carrier", "@/cycle3.graph", "--spec", "@/identity.sexp", "--target", "@/cycle3.graph", "--max-arity", "1"], 0),
    case("interp_int", &["interp", "int", "--n", "3"], 0),
    case("interp_trivial", &["interp", "trivial", "--carrier", "@/path3.graph", "--target", "@/g.struct"], 0),
    case("interp_marker", &["interp", "marker", "--graph", "@/path3.graph"], 0),
    case("marker_encode", &["marker", "encode", "--tags", "@/g.struct"], 0),
    case("marker_decode", &["marker", "decode", "@/path3.enc"], 0),
    case("marker_formulas", &["marker", "formulas"], 0),
    Case {
        name: "marker_stream",
        args: &["marker", "stream-decode"],
        stdin: "v 0\nv 1\nv 2\nv 3\ne 0 1\ne 1 2\ne 0 2\ne 0 3\n",
        code: 0,
    },
    case("marker_missing", &["marker", "encode", "@/missing.graph"], 2),
    case("daisy_encode", &["daisy", "encode", "--set", "1", "--bound", "3"], 0),
    case("daisy_decode", &["daisy", "decode", "@/daisy.graph"], 0),
    case("shuffle_build", &["shuffle", "build", "--labels", "2,5", "--omega", "--resolution", "4"], 0),
    case("shuffle_too_coarse", &["shuffle", "build", "--labels", "2,5", "--omega", "--resolution", "3"], 3),
    case("shuffle_decode", &["shuffle", "decode", "@/shuffle.frag"], 0),
    case("shuffle_decode_coarse", &["shuffle", "decode", "@/shuffle.frag", "--resolution", "5"], 0),
    case("pretty", &["--pretty", "fs", "mentions", r#"["1/8","1/2","5/8",0]"#], 0),
    case("unknown_command", &["frobnicate"], 2),
];

pub fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data")
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Runs a case in process; returns the exit code and standard output with the data directory
/// replaced by `@`.
pub fn run_case(c: &Case) -> (i32, String) {
    let data = data_dir();
    let data = data.to_str().expect("utf-8 path");
    let mut argv = vec!["structcode".to_string()];
    argv.extend(c.args.iter().map(|a| a.replace('@', data)));
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(argv, &mut c.stdin.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).expect("utf-8 output").replace(data, "@"))
}

/// Compares every case with its golden file; with `STRUCTCODE_BLESS` set, rewrites the files
/// instead. Returns the names of mismatching cases.
pub fn check_goldens() -> Vec<String> {
    let bless = std::env::var_os("STRUCTCODE_BLESS").is_some();
    let mut bad = Vec::new();
    for c in CASES {
        let (code, out) = run_case(c);
        let path = golden_dir().join(format!("{}.out", c.name));
        if bless {
            std::fs::write(&path, &out).expect("golden file writable");
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_default();
        if code != c.code || out != expected {
            bad.push(format!("{} (exit {code}, expected {})", c.name, c.code));
        }
    }
    bad
}
