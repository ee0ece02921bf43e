//! The command line, driven in-process.

use std::path::PathBuf;

use cablekit::cli::run;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn book(name: &str) -> String {
    root().join("examples/books").join(name).display().to_string()
}

fn cablekit(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("cablekit").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = cablekit(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

fn golden(name: &str, actual: &str) {
    let path = root().join("tests/golden").join(name);
    if std::env::var_os("CABLEKIT_BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, want, "golden file {name}");
}

fn tmp(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("cablekit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p.display().to_string()
}

#[test]
fn slopes() {
    assert_eq!(ok(&["slopes", "exceptional", "-1/3"]), "[-1/2, -1]\n");
    assert_eq!(ok(&["slopes", "path", "0", "5/3"]), "[0, 1, 3/2, 5/3]\n");
    assert_eq!(ok(&["slopes", "ncf", "-2/7"]).trim(), "[-4, -2]");
    assert_eq!(ok(&["--json", "slopes", "exceptional", "-1/3"]), "[\n  \"-1/2\",\n  \"-1/1\"\n]\n");
}

#[test]
fn torus_knot() {
    let out = ok(&["torus-knot", "8", "1", "2", "1"]);
    assert!(out.contains("euler characteristic: -2"));
    assert!(out.contains("order: 4 (wrap 2)"));
    let (code, _, err) = cablekit(&["torus-knot", "5", "2", "0", "1"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn classify() {
    let out = ok(&["classify", "--book", &book("trefoil.json"), "--cable", "2,3"]);
    assert!(out.starts_with("kind: SameContact"));
    let json = ok(&["--json", "classify", "--book", &book("sigma_3_-1.json"), "--cable", "3,-2"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["kind"], "Overtwisted");
    assert_eq!(v["per_component_signs"][0], "Negative");
}

#[test]
fn resolution_golden() {
    let left = book("left_trefoil.json");
    let surgered = ok(&["--json", "surgery", "--book", &left, "--coefficient", "-5"]);
    let path = tmp("surgered.json", &surgered);
    let resolved = ok(&["--json", "resolve", "--book", &path, "--l", "0"]);
    golden("resolve_left_trefoil_-5.json", &resolved);
    let summary = ok(&["resolve", "--book", &path, "--l", "0"]);
    assert!(summary.starts_with("genus 1, 5 boundary components"));
}

#[test]
fn monodromy_and_obstruction_golden() {
    golden("obstruction_1_3.txt", &ok(&["obstruction", "--p", "1", "--to", "3"]));
    let out = ok(&["monodromy", "--book", &book("trefoil.json"), "--cable", "2,2"]);
    golden("monodromy_trefoil_2_2.txt", &out);
    let json = ok(&["--json", "monodromy", "--book", &book("trefoil.json"), "--cable", "2,1"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert!(v["factorization"].as_str().unwrap().starts_with("D_nb2^-1 ∘ D_nb1^-1"));
}

#[test]
fn outputs_feed_consumers() {
    let json = ok(&["--json", "monodromy", "--book", &book("trefoil.json"), "--cable", "2,1"]);
    let path = tmp("monodromy.json", &json);
    let v = ok(&["--json", "verify-word", "--word", &path, "--system", "cable_p2_g1", "--against", &path]);
    let v: serde_json::Value = serde_json::from_str(&v).unwrap();
    assert_eq!(v["equal"], true);
    // the page of a monodromy result is a book
    let page = ok(&["cable-page", "--book", &path, "--cable", "1,1"]);
    assert!(page.starts_with("genus 2, 1 boundary components"));

    let log = ok(&["--json", "replay-script", "cable_stabilization"]);
    let path = tmp("log.json", &log);
    let v = ok(&["--json", "verify-word", "--word", &path, "--system", "cable22_closure"]);
    assert!(v.contains("\"letters\": 6"));
}

#[test]
fn verify_word_relations() {
    let out = ok(&[
        "verify-word",
        "--word",
        "c1 c2 c1 c2 c1 c2 c1 c2 c1 c2 c1 c2",
        "--system",
        "chain_g1",
        "--against",
        "bd",
    ]);
    assert!(out.contains("equal on homology: true"));
    let out = ok(&["verify-word", "--word", "c1 c2 c3 c1 c2 c3 c1 c2 c3 c1 c2 c3", "--system", "chain_g1_b0"]);
    assert!(out.contains("identity on homology: true"));
}

#[test]
fn cobordism() {
    let out = ok(&["compose-cobordism", "--phi1", "c1 c2", "--phi2", "c1'", "--page", "connected", "--genus", "1"]);
    assert!(out.starts_with("word: D_d3 ∘ D_d2 ∘ D_d1 ∘ D_c5^-1 ∘ D_c1 ∘ D_c2"));
    assert!(out.contains("homology checked: true"));
}

#[test]
fn exit_codes() {
    assert_eq!(cablekit(&["no-such-command"]).0, 2);
    assert_eq!(cablekit(&["classify", "--book", "/nonexistent.json", "--cable", "2,1"]).0, 2);
    assert_eq!(cablekit(&["classify", "--book", &book("trefoil.json"), "--cable", "2"]).0, 2);
    assert_eq!(cablekit(&["verify-word", "--word", "zz", "--system", "torus"]).0, 2);
    assert_eq!(cablekit(&["obstruction", "--p", "0"]).0, 2);
    let (code, out, _) = cablekit(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("replay-script"));
}

#[test]
fn deterministic() {
    let args = ["--json", "replay-script", "positive_refactorization"];
    assert_eq!(ok(&args), ok(&args));
    let args = ["--json", "monodromy", "--book", &book("two_boundary_torus.json"), "--cable", "3,2"];
    let a = ok(&args);
    assert_eq!(a, ok(&args));
}
