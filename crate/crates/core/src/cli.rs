//! The `evoalg` command line: algebra files, DOT output and subcommand dispatch.
//!
//! An algebra file holds one algebra in a natural basis:
//!
//! ```text
//! # the 2-dimensional chain
//! field Q
//! dim 2
//! row 0 1
//! row 0 0
//! ```
//!
//! Row i lists the coordinates of eᵢ². `field` is `Q`, `Qi` or `GF <p>`.

use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use crate::classify::{self, Classification};
use crate::error::{Error, Result};
use crate::evolution::{EvolutionAlgebra, Verdict, WeightedGraph};
use crate::exactfield::{FieldDescriptor, FieldElement};
use crate::families::{self, FamilySpec};
use crate::linalg::Matrix;
use crate::oracle::{self, SearchBudget};

pub const USAGE: &str = "\
usage: evoalg <command> [args]

commands:
  type FILE                 type vector of the upper annihilating series
  series FILE               annihilators and U blocks
  classify FILE             canonical label (dimension <= 5)
  iso FILE1 FILE2 [--oracle exhaustive|randomized] [--trials N] [--seed S]
                            compare labels and look for an isomorphism
  family --kind ub|ubg|ubfg|ubu --b LIST [--f LIST] [--g LIST] [--u LIST] [--field F]
                            print an algebra file for a parametric family
  dot FILE                  graph in DOT format
  decompose FILE            decomposability verdict and witness ideals

LIST is comma-separated; F is Q, Qi or GF<p> (default Q).
";

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Significant lines as (line number, column of first token, tokens with columns).
fn tokenize(text: &str) -> Vec<(usize, Vec<(usize, &str)>)> {
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut toks = Vec::new();
        let mut start = None;
        for (c, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(c),
                (true, Some(s)) => {
                    toks.push((s + 1, &line[s..c]));
                    start = None;
                }
                _ => {}
            }
        }
        if !toks.is_empty() {
            out.push((k + 1, toks));
        }
    }
    out
}

fn parse_field_words(words: &[(usize, &str)], line: usize) -> Result<FieldDescriptor> {
    match words {
        [(_, "Q")] => Ok(FieldDescriptor::rationals()),
        [(_, "Qi")] => Ok(FieldDescriptor::gaussian()),
        [(_, "GF"), (c, p)] => {
            let p: u64 = p.parse().map_err(|_| syntax(line, *c, format!("`{p}` is not a modulus")))?;
            FieldDescriptor::prime(p)
        }
        [(c, w), ..] => Err(syntax(line, *c, format!("expected Q, Qi or GF <p>, found `{w}`"))),
        [] => Err(syntax(line, 1, "missing field name")),
    }
}

/// `Q`, `Qi`, `GF <p>` or `GF<p>`.
pub fn parse_field(text: &str) -> Result<FieldDescriptor> {
    let t = text.trim();
    match t.strip_prefix("GF") {
        Some(p) => parse_field_words(&[(1, "GF"), (3, p.trim())], 1),
        None => parse_field_words(&[(1, t)], 1),
    }
}

pub fn parse_algebra(text: &str) -> Result<EvolutionAlgebra> {
    let lines = tokenize(text);
    let mut it = lines.iter();
    let Some((ln, toks)) = it.next() else {
        return Err(syntax(1, 1, "empty file"));
    };
    if toks[0].1 != "field" {
        return Err(syntax(*ln, toks[0].0, "expected `field`"));
    }
    let field = parse_field_words(&toks[1..], *ln)?;
    let Some((ln, toks)) = it.next() else {
        return Err(syntax(ln + 1, 1, "missing `dim` line"));
    };
    let n: usize = match toks.as_slice() {
        [(_, "dim"), (c, n)] => n.parse().map_err(|_| syntax(*ln, *c, format!("`{n}` is not a dimension")))?,
        _ => return Err(syntax(*ln, toks[0].0, "expected `dim <n>`")),
    };
    if n == 0 {
        return Err(Error::Domain("dimension must be at least 1".into()));
    }
    let mut data = Vec::with_capacity(n * n);
    let mut rows = 0;
    let mut last = *ln;
    for (ln, toks) in it {
        last = *ln;
        if toks[0].1 != "row" {
            return Err(syntax(*ln, toks[0].0, "expected `row`"));
        }
        if rows == n {
            return Err(syntax(*ln, toks[0].0, format!("more than {n} rows")));
        }
        if toks.len() != n + 1 {
            return Err(syntax(*ln, toks[0].0, format!("a row needs {n} entries, found {}", toks.len() - 1)));
        }
        for &(c, t) in &toks[1..] {
            data.push(FieldElement::parse(t, field).map_err(|e| match e {
                Error::Syntax { message, .. } => syntax(*ln, c, message),
                other => other,
            })?);
        }
        rows += 1;
    }
    if rows < n {
        return Err(syntax(last + 1, 1, format!("expected {n} rows, found {rows}")));
    }
    EvolutionAlgebra::from_matrix(Matrix::new(field, n, n, data)?)
}

pub fn parse_algebra_file(path: impl AsRef<Path>) -> Result<EvolutionAlgebra> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))?;
    parse_algebra(&text)
}

pub fn write_algebra(e: &EvolutionAlgebra) -> String {
    let mut s = format!("field {}\ndim {}\n", e.field(), e.dim());
    for i in 0..e.dim() {
        let row: Vec<String> = e.structure().row(i).iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "row {}", row.join(" "));
    }
    s
}

/// Weight-1 edges carry no label.
pub fn emit_dot(g: &WeightedGraph) -> String {
    let mut s = String::from("digraph E {\n");
    for v in 0..g.vertex_count {
        let _ = writeln!(s, "  {v};");
    }
    let mut edges: Vec<&(usize, usize, FieldElement)> = g.edges.iter().collect();
    edges.sort_by_key(|e| (e.0, e.1));
    for (i, j, w) in edges {
        if w.is_one() {
            let _ = writeln!(s, "  {i} -> {j};");
        } else {
            let _ = writeln!(s, "  {i} -> {j} [label=\"{w}\"];");
        }
    }
    s.push_str("}\n");
    s
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = std::result::Result<String, Failure>;

/// Runs one command; `args` excludes the program name. Returns the exit code.
pub fn dispatch(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match run(args) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}\n\n{USAGE}");
            2
        }
    }
}

fn run(args: &[String]) -> Outcome {
    let Some((cmd, rest)) = args.split_first() else {
        return Err(Failure::Usage("missing command".into()));
    };
    let file = |k: usize| -> std::result::Result<EvolutionAlgebra, Failure> {
        match rest.get(k) {
            Some(p) if !p.starts_with("--") => Ok(parse_algebra_file(p)?),
            _ => Err(Failure::Usage(format!("`{cmd}` needs a file argument"))),
        }
    };
    let exact_args = |n: usize| {
        if rest.len() == n {
            Ok(())
        } else {
            Err(Failure::Usage(format!("`{cmd}` takes {n} argument(s)")))
        }
    };
    match cmd.as_str() {
        "type" => {
            exact_args(1)?;
            let s = file(0)?.upper_series();
            Ok(if s.nilpotent { format!("{}\n", bracket(&s.type_vector)) } else { "NOT NILPOTENT\n".into() })
        }
        "series" => {
            exact_args(1)?;
            series_report(&file(0)?)
        }
        "classify" => {
            exact_args(1)?;
            let c = classify::classify(&file(0)?)?;
            let mut s = format!("{c}\n");
            if let Classification::Indecomposable { witness_available: false, .. } = c {
                s.push_str("witness: unavailable over this field\n");
            }
            Ok(s)
        }
        "iso" => iso_report(file(0)?, file(1)?, &rest[2..]),
        "family" => family_report(rest),
        "dot" => {
            exact_args(1)?;
            Ok(emit_dot(&file(0)?.graph()))
        }
        "decompose" => {
            exact_args(1)?;
            decompose_report(&file(0)?)
        }
        "help" | "--help" | "-h" => Ok(USAGE.into()),
        other => Err(Failure::Usage(format!("unknown command `{other}`"))),
    }
}

fn bracket(v: &[usize]) -> String {
    let s: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", s.join(","))
}

fn series_report(e: &EvolutionAlgebra) -> Outcome {
    let s = e.upper_series();
    let mut out = String::new();
    for (k, (sub, block)) in s.chain.iter().zip(&s.blocks).enumerate() {
        let idx: Vec<String> = block.iter().map(|i| format!("e{i}")).collect();
        let _ = writeln!(out, "ann^{} = {sub}", k + 1);
        let _ = writeln!(out, "U{} = {{{}}}", k + 1, idx.join(", "));
    }
    if s.nilpotent {
        let _ = writeln!(out, "type {}", bracket(&s.type_vector));
    } else {
        out.push_str("NOT NILPOTENT\n");
    }
    Ok(out)
}

fn decompose_report(e: &EvolutionAlgebra) -> Outcome {
    let mut out = String::new();
    match e.decomposability_check() {
        Verdict::Decomposable { rule, witness } => {
            let _ = writeln!(out, "decomposable ({rule:?})");
            if let Some((i, j)) = witness {
                let _ = writeln!(out, "I = {i}\nJ = {j}");
            }
        }
        Verdict::Indecomposable(rule) => {
            let _ = writeln!(out, "indecomposable ({rule:?})");
        }
        Verdict::Unknown => {
            out.push_str("unknown\n");
            // the classification table settles nilpotent algebras of small dimension
            if let Ok(c) = classify::classify(e) {
                let _ = writeln!(out, "classification: {c}");
            }
        }
    }
    Ok(out)
}

/// `--name value` pairs; every name must be in `allowed`.
fn options<'a>(args: &'a [String], allowed: &[&str]) -> std::result::Result<Vec<(&'a str, &'a str)>, Failure> {
    let mut out = Vec::new();
    let mut it = args.iter();
    while let Some(a) = it.next() {
        let name = a
            .strip_prefix("--")
            .filter(|n| allowed.contains(n))
            .ok_or_else(|| Failure::Usage(format!("unexpected argument `{a}`")))?;
        let v = it.next().ok_or_else(|| Failure::Usage(format!("`--{name}` needs a value")))?;
        out.push((name, v.as_str()));
    }
    Ok(out)
}

fn get<'a>(opts: &[(&str, &'a str)], name: &str) -> Option<&'a str> {
    opts.iter().rev().find(|(n, _)| *n == name).map(|(_, v)| *v)
}

fn number(opts: &[(&str, &str)], name: &str, default: u64) -> std::result::Result<u64, Failure> {
    match get(opts, name) {
        None => Ok(default),
        Some(v) => v.parse().map_err(|_| Failure::Usage(format!("`--{name}` expects an integer"))),
    }
}

fn iso_report(e1: EvolutionAlgebra, e2: EvolutionAlgebra, rest: &[String]) -> Outcome {
    let opts = options(rest, &["oracle", "trials", "seed"])?;
    let budget = match get(&opts, "oracle") {
        None => None,
        Some("exhaustive") => Some(SearchBudget::exhaustive()),
        Some("randomized") => Some(SearchBudget::randomized(number(&opts, "trials", 10_000)?, number(&opts, "seed", 0)?)),
        Some(o) => return Err(Failure::Usage(format!("unknown oracle `{o}`"))),
    };
    if e1.field() != e2.field() {
        return Err(Error::MixedFields.into());
    }
    let mut out = String::new();
    let c1 = classify::classify(&e1);
    let c2 = classify::classify(&e2);
    let same = match (&c1, &c2) {
        (Ok(a), Ok(b)) => {
            let _ = writeln!(out, "label 1: {a}\nlabel 2: {b}");
            let same = a == b;
            out.push_str(if same { "labels equal\n" } else { "labels differ\n" });
            Some(same)
        }
        (a, b) => {
            for (k, c) in [(1, a), (2, b)] {
                match c {
                    Ok(c) => writeln!(out, "label {k}: {c}"),
                    Err(e) => writeln!(out, "label {k}: unavailable ({e})"),
                }
                .ok();
            }
            None
        }
    };
    let witness = match budget {
        Some(b) => {
            let found = oracle::search_iso(&e1, &e2, b)?;
            if found.is_none() {
                out.push_str(match b.mode {
                    oracle::SearchMode::Exhaustive => "oracle: not isomorphic over this field\n",
                    oracle::SearchMode::Randomized => "oracle: no witness found (not a proof of non-isomorphism)\n",
                });
            }
            found
        }
        None if same == Some(true) => match classify::witness_isomorphism(&e1, &e2) {
            Ok(w) => w,
            Err(Error::SqrtUnavailable(m)) => {
                let _ = writeln!(out, "witness: unavailable ({m})");
                None
            }
            Err(e) => return Err(e.into()),
        },
        None if same.is_none() => {
            return Err(Failure::Usage("labels are unavailable; pass --oracle to search directly".into()))
        }
        None => None,
    };
    if let Some(m) = witness {
        let _ = write!(out, "witness:\n{m}");
    }
    Ok(out)
}

fn family_report(rest: &[String]) -> Outcome {
    let opts = options(rest, &["kind", "b", "f", "g", "u", "field"])?;
    let field = match get(&opts, "field") {
        None => FieldDescriptor::rationals(),
        Some(f) => parse_field(f)?,
    };
    let list = |name: &str| -> std::result::Result<Option<Vec<FieldElement>>, Failure> {
        match get(&opts, name) {
            None => Ok(None),
            Some(v) => Ok(Some(
                v.split(',').map(|t| FieldElement::parse(t, field)).collect::<Result<_>>()?,
            )),
        }
    };
    let need = |name: &str| -> std::result::Result<Vec<FieldElement>, Failure> {
        list(name)?.ok_or_else(|| Failure::Usage(format!("this family needs `--{name}`")))
    };
    let kind = get(&opts, "kind").ok_or_else(|| Failure::Usage("`family` needs `--kind`".into()))?;
    let spec = match kind {
        "ub" => FamilySpec::ub(need("b")?)?,
        "ubg" => FamilySpec::ubg(need("b")?, need("g")?)?,
        "ubfg" => FamilySpec::ubfg(need("b")?, need("f")?, need("g")?)?,
        "ubu" => FamilySpec::ubu(need("b")?, need("u")?)?,
        k => return Err(Failure::Usage(format!("unknown family kind `{k}`"))),
    };
    Ok(write_algebra(&families::build(&spec)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = dispatch(&args, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn parses_the_two_dimensional_chain() {
        let e = parse_algebra("field Q\ndim 2\nrow 0 1\nrow 0 0\n").unwrap();
        assert_eq!(e.upper_series().type_vector, vec![1, 1]);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# chain\n\nfield Qi   # gaussian\ndim 1\n\nrow 0\n";
        assert_eq!(write_algebra(&parse_algebra(text).unwrap()), "field Qi\ndim 1\nrow 0\n");
    }

    #[test]
    fn dim_zero_is_rejected() {
        assert!(matches!(parse_algebra("field Q\ndim 0\n"), Err(Error::Domain(_))));
    }

    #[test]
    fn characteristic_two_is_a_domain_error() {
        assert!(matches!(parse_algebra("field GF 2\ndim 1\nrow 0\n"), Err(Error::Domain(_))));
    }

    #[test]
    fn i_in_a_prime_field_points_at_the_entry() {
        match parse_algebra("field GF 13\ndim 2\nrow 0 1\nrow i 0\n") {
            Err(Error::Syntax { line, column, message }) => {
                assert_eq!((line, column), (4, 5));
                assert!(message.contains("residue"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn short_rows_and_missing_rows() {
        assert!(matches!(parse_algebra("field Q\ndim 2\nrow 0\nrow 0 0\n"), Err(Error::Syntax { line: 3, .. })));
        assert!(matches!(parse_algebra("field Q\ndim 2\nrow 0 0\n"), Err(Error::Syntax { line: 4, .. })));
    }

    #[test]
    fn round_trip_normalizes_spacing() {
        let text = "field  GF 13\ndim 2\nrow   0  14\nrow 0 0 # end\n";
        let once = write_algebra(&parse_algebra(text).unwrap());
        assert_eq!(once, "field GF 13\ndim 2\nrow 0 1\nrow 0 0\n");
        assert_eq!(write_algebra(&parse_algebra(&once).unwrap()), once);
    }

    #[test]
    fn dot_omits_unit_weights() {
        let f = FieldDescriptor::gaussian();
        let g = WeightedGraph {
            vertex_count: 4,
            edges: vec![(1, 3, f.i().unwrap()), (1, 2, f.one())],
        };
        assert_eq!(emit_dot(&g), "digraph E {\n  0;\n  1;\n  2;\n  3;\n  1 -> 2;\n  1 -> 3 [label=\"i\"];\n}\n");
        let lone = WeightedGraph { vertex_count: 1, edges: vec![] };
        assert_eq!(emit_dot(&lone), "digraph E {\n  0;\n}\n");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&[]).0, 2);
        assert_eq!(run_args(&["frobnicate"]).0, 2);
        assert_eq!(run_args(&["type"]).0, 2);
        assert_eq!(run_args(&["family", "--kind", "ub", "--bogus", "1"]).0, 2);
    }

    #[test]
    fn missing_file_exits_one() {
        let (code, _, err) = run_args(&["type", "/nonexistent/algebra.txt"]);
        assert_eq!(code, 1);
        assert!(err.contains("cannot read"));
    }

    #[test]
    fn family_writes_an_algebra_file() {
        let (code, out, _) = run_args(&["family", "--kind", "ub", "--b", "1,1"]);
        assert_eq!(code, 0);
        let e = parse_algebra(&out).unwrap();
        assert_eq!(e.dim(), 3);
        assert_eq!(e.upper_series().type_vector, vec![1, 2]);
    }
}
