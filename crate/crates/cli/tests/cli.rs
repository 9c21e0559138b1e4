use std::path::PathBuf;
use std::process::Command;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn evoalg(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_evoalg")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn type_of_the_four_chain() {
    let (code, out, _) = evoalg(&["type", &fixture("chain4.alg")]);
    assert_eq!((code, out.as_str()), (0, "[1,1,1,1]\n"));
}

#[test]
fn type_reports_non_nilpotent_input() {
    let (code, out, _) = evoalg(&["type", &fixture("idempotent.alg")]);
    assert_eq!((code, out.as_str()), (0, "NOT NILPOTENT\n"));
}

#[test]
fn classify_of_non_nilpotent_input_is_a_domain_error() {
    assert_eq!(evoalg(&["classify", &fixture("idempotent.alg")]).0, 1);
}

#[test]
fn series_lists_each_block() {
    let (code, out, _) = evoalg(&["series", &fixture("chain4.alg")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("ann^1 = span{(0,0,0,1)}\nU1 = {e3}\n"));
    assert!(out.ends_with("U4 = {e0}\ntype [1,1,1,1]\n"));
}

#[test]
fn anharmonic_partners_classify_alike() {
    let (c1, l1, _) = evoalg(&["classify", &fixture("anharmonic4.alg")]);
    let (c2, l2, _) = evoalg(&["classify", &fixture("anharmonic10.alg")]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(l1, "d5:[1,1,3]:v3(4)\n");
    assert_eq!(l1, l2);
}

#[test]
fn iso_with_equal_labels_prints_a_witness() {
    let (code, out, _) = evoalg(&["iso", &fixture("anharmonic4.alg"), &fixture("anharmonic10.alg")]);
    assert_eq!(code, 0);
    assert!(out.contains("labels equal\nwitness:\n"));
}

#[test]
fn iso_between_the_dim3_canonical_algebras() {
    let (code, out, _) = evoalg(&["iso", &fixture("fan3.alg"), &fixture("chain3.alg")]);
    assert_eq!(code, 0);
    assert!(out.contains("labels differ"));
    assert!(!out.contains("witness"));
}

#[test]
fn iso_with_oracles() {
    let a = fixture("chain3_gf3.alg");
    let b = fixture("chain3_gf3_scaled.alg");
    let (code, out, _) = evoalg(&["iso", &a, &b, "--oracle", "exhaustive"]);
    assert_eq!(code, 0);
    assert!(out.contains("witness:\n[1 0 0]\n[0 2 0]\n[0 0 1]\n"));
    let (code, out, _) = evoalg(&["iso", &a, &b, "--oracle", "randomized", "--trials", "20", "--seed", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("witness:"));
    let (code, _, _) = evoalg(&["iso", &a, &b, "--oracle", "psychic"]);
    assert_eq!(code, 2);
    // the oracle only runs over prime fields
    assert_eq!(evoalg(&["iso", &fixture("fan3.alg"), &fixture("chain3.alg"), "--oracle", "exhaustive"]).0, 1);
}

#[test]
fn dot_output_is_stable() {
    let (code, out, _) = evoalg(&["dot", &fixture("weighted.alg")]);
    assert_eq!(code, 0);
    assert_eq!(out, "digraph E {\n  0;\n  1;\n  2;\n  3;\n  0 -> 1;\n  0 -> 2 [label=\"i\"];\n  1 -> 3;\n  2 -> 3;\n}\n");
    assert_eq!(evoalg(&["dot", &fixture("weighted.alg")]).1, out);
}

#[test]
fn decompose_prints_witness_ideals() {
    let (code, out, _) = evoalg(&["decompose", &fixture("split4.alg")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("decomposable"));
    assert!(out.contains("I = span{") && out.contains("J = span{"));
    let (_, out, _) = evoalg(&["classify", &fixture("split4.alg")]);
    assert_eq!(out, "decomposed d2:[1,1]:v1 + d2:[1,1]:v1\n");
}

#[test]
fn family_output_parses_back() {
    let (code, out, _) = evoalg(&["family", "--kind", "ubg", "--b", "1,2", "--g", "0,1", "--field", "GF13"]);
    assert_eq!(code, 0);
    assert_eq!(out, "field GF 13\ndim 4\nrow 0 0 1 0\nrow 0 0 2 2\nrow 0 0 0 1\nrow 0 0 0 0\n");
    let parsed = evoalg::cli::parse_algebra(&out).unwrap();
    assert_eq!(evoalg::cli::write_algebra(&parsed), out);
}

#[test]
fn fixtures_round_trip_through_the_writer() {
    let dir: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures"].iter().collect();
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let e = evoalg::cli::parse_algebra_file(&path).unwrap();
        let once = evoalg::cli::write_algebra(&e);
        let twice = evoalg::cli::write_algebra(&evoalg::cli::parse_algebra(&once).unwrap());
        assert_eq!(once, twice, "{}", path.display());
    }
}

#[test]
fn usage_errors() {
    assert_eq!(evoalg(&[]).0, 2);
    assert_eq!(evoalg(&["launch"]).0, 2);
    assert_eq!(evoalg(&["dot"]).0, 2);
    assert_eq!(evoalg(&["family", "--kind", "xyz", "--b", "1"]).0, 2);
    let (code, _, err) = evoalg(&["type", "missing.alg"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"));
}
