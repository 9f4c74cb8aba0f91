use std::process::{Command, Output};

use octoverify::{Report, Status};

fn octoverify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_octoverify"))
        .args(args)
        .env_remove("OCTOVERIFY_OUT")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn verify_prints_json_by_default() {
    let o = octoverify(&["verify", "--suite", "octonions"]);
    assert_eq!(code(&o), 0);
    let report = Report::from_json(&stdout(&o)).unwrap();
    assert_eq!(report.suite, "octonions");
    assert!(report.results.iter().all(|r| r.status == Status::Pass));
    let progress = String::from_utf8_lossy(&o.stderr);
    assert!(progress.contains("suite octonions:"), "{progress}");
}

#[test]
fn verify_writes_to_out_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nested/report.md");
    let o = octoverify(&["verify", "--suite", "magic", "--format", "md", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let md = std::fs::read_to_string(path).unwrap();
    assert!(md.contains("| magic_entry_HH | eq:26 |"));
    assert!(md.contains("0 fail, 1 flagged"));
}

#[test]
fn verify_honors_output_directory_variable() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_octoverify"))
        .args(["verify", "--suite", "weyl"])
        .env("OCTOVERIFY_OUT", dir.path())
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(dir.path().join("octoverify-weyl.json")).unwrap();
    let report = Report::from_json(&text).unwrap();
    assert!(report.results.iter().any(|r| r.check_id == "euler_E6_D5" && r.actual == "27"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "--suite", "nope"][..],
        &["verify", "--format", "xml"],
        &["table", "periodic"],
        &["decompose", "--algebra", "Q7", "--hw", "adjoint"],
        &["decompose", "--algebra", "D5", "--hw", "1,x,0,0,0"],
        &["decompose", "--algebra", "D5", "--hw", "spinor16", "--power", "17"],
        &["frobnicate"],
    ] {
        let o = octoverify(args);
        assert_eq!(code(&o), 2, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn engine_errors_exit_3() {
    let o = octoverify(&["branch", "--from", "E6", "--to", "A2", "--hw", "adjoint"]);
    assert_eq!(code(&o), 3, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(!o.stderr.is_empty());
}

#[test]
fn tables() {
    let o = octoverify(&["table", "sugra-triplet"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("44 − 128 + 84"), "{text}");
    for cell in ["44", "128", "84"] {
        assert!(text.contains(cell));
    }

    let magic = stdout(&octoverify(&["table", "magic-square"]));
    assert!(magic.contains("248") && magic.contains("so(12)"));

    let spheres = stdout(&octoverify(&["table", "spheres"]));
    assert!(spheres.contains("S³×̃S⁷×̃S¹¹"), "{spheres}");

    let t35 = stdout(&octoverify(&["table", "table35"]));
    for col in ["SU(16)", "Spin(10)", "O(9)", "O(8)"] {
        assert!(t35.contains(col));
    }
    assert!(t35.contains("3696 + 672") || t35.contains("3696+672"), "{t35}");
}

#[test]
fn decompose_examples() {
    let o = octoverify(&["decompose", "--algebra", "D5", "--preset", "spinor16", "--power", "5", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dim"], "4368");
    let dims: Vec<i64> = v["result"]["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["dim"].as_i64().unwrap())
        .collect();
    assert_eq!(dims.iter().sum::<i64>(), 4368);
    assert!(dims.contains(&3696) && dims.contains(&672));

    let o = octoverify(&["decompose", "--algebra", "D5", "--hw", "spinor16", "--power", "3", "--branch-to", "B4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("432 + 128") || stdout(&o).contains("432+128"));

    let o = octoverify(&["decompose", "--algebra", "D5", "--hw", "spinor16", "--power", "0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dim"], "1");
}

#[test]
fn branch_subcommand() {
    let o = octoverify(&["branch", "--from", "B4", "--to", "D4", "--hw", "graviton", "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dim"], "44");
}
