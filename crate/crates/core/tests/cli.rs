use std::io::Write;
use std::process::{Command, Output};

use modlattice::io::GroupSpec;
use modlattice::verify::SuiteRun;
use modlattice::{catalog, cli};

fn modlattice(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modlattice")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_reports_profile() {
    let o = modlattice(&["classify", "S3", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["nearly_nilpotent"], true);
    assert_eq!(v["nilpotent"], false);
    assert_eq!(v["residual_u_order"], 1);

    let o = modlattice(&["classify", "catalog:A4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["supersoluble"], false);
    assert_eq!(v["residual_u_order"], 4);

    let o = modlattice(&["classify", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for key in ["abelian", "nilpotent", "supersoluble", "strongly_supersoluble", "nearly_nilpotent"] {
        assert_eq!(v[key], true, "{key}");
    }
}

#[test]
fn lattice_node_counts() {
    for (name, nodes) in [("Q8", 6), ("C7", 2), ("S4", 30)] {
        let o = modlattice(&["lattice", name, "--format", "json"]);
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v.as_array().unwrap().len(), nodes, "{name}");
        let dot = stdout(&modlattice(&["lattice", name, "--format", "dot"]));
        assert!(dot.starts_with("digraph"));
        assert_eq!(dot.matches("label=").count(), nodes, "{name}");
    }
    let o = modlattice(&["lattice", "A4", "--n", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
}

#[test]
fn census_of_a4() {
    let o = modlattice(&["census", "A4"]);
    assert!(stdout(&o).contains("min_n_all_modular=3"));
    let o = modlattice(&["census", "A4", "--n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 1);
    assert_eq!(v["rows"][0]["count"], 4);
}

#[test]
fn verify_suites() {
    let o = modlattice(&["verify", "--suite", "all", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("fail=0"));

    let o = modlattice(&["verify", "--suite", "sharpness", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let run: SuiteRun = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(run.reports.len(), 2);
    assert!(run.reports.iter().all(|r| r.witnesses.iter().any(|w| w.starts_with("narrative"))));
    let again = serde_json::to_string_pretty(&run).unwrap() + "\n";
    assert_eq!(again, stdout(&o));

    let o = modlattice(&["verify", "--suite", "ThmA", "--group", "S4", "--group", "catalog:D8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| !l.contains("Lem")));
}

#[test]
fn group_files() {
    let dir = std::env::temp_dir().join(format!("modlattice-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("q8.json");
    let spec = GroupSpec::of_group(&catalog::construct("Q8").unwrap());
    std::fs::write(&good, serde_json::to_string(&spec).unwrap()).unwrap();
    let o = modlattice(&["lattice", good.to_str().unwrap(), "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 6);

    let bad = dir.join("bad.json");
    let mut f = std::fs::File::create(&bad).unwrap();
    writeln!(f, r#"{{"name": "x", "kind": "cayley", "table": [[0, 1], [1, 1]]}}"#).unwrap();
    let o = modlattice(&["classify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a group"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| modlattice(args).status.code();
    assert_eq!(code(&["classify"]), Some(1));
    assert_eq!(code(&["frobnicate"]), Some(1));
    assert_eq!(code(&["lattice", "S3", "--n", "0"]), Some(1));
    assert_eq!(code(&["verify", "--suite", "Thm9"]), Some(1));
    assert_eq!(code(&["classify", "NoSuchGroup"]), Some(2));
    assert_eq!(code(&["classify", "S5", "--max-order", "60"]), Some(2));
    assert_eq!(code(&["classify", "/no/such/file.json"]), Some(2));
    assert_eq!(code(&["--help"]), Some(0));
}

#[test]
fn in_process_runner() {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(["modlattice", "census", "S3", "--format", "json"], &mut out, &mut err);
    assert_eq!(code, cli::EXIT_OK);
    assert!(err.is_empty());
    let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(v["min_n_all_modular"], 1);

    let code = cli::run(["modlattice", "catalog", "--format", "json"], &mut out, &mut err);
    assert_eq!(code, cli::EXIT_OK);
}
