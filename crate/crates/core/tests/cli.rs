use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn path(dir: &str, name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join(dir)
        .join(name)
}

fn mingen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mingen"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = mingen(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(path("golden", name)).unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn table_matches_golden() {
    assert_eq!(stdout(&["table"]), golden("table.txt"));
    assert_eq!(
        stdout(&["table", "--n-max", "20", "--k-max", "10"]),
        golden("table.txt")
    );
}

#[test]
fn table_json_cells() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["table", "--format", "json"])).unwrap();
    assert!(v["rows"][0].as_array().unwrap().iter().all(|x| x == 1));
    assert_eq!(v["rows"][4][18], 10);
    assert_eq!(v["rows"][7][13], 11);
}

#[test]
fn split_native_matches_golden() {
    let input = path("data", "two_customers.json");
    assert_eq!(
        stdout(&["split", s(&input), "-"]),
        golden("two_customers.expanded.json")
    );

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("e.json");
    let summary = stdout(&["split", s(&input), s(&out)]);
    assert!(
        summary.starts_with("8 copies from 2 customers (bound 12)"),
        "{summary}"
    );
    assert_eq!(
        std::fs::read_to_string(out).unwrap(),
        golden("two_customers.expanded.json")
    );
}

#[test]
fn split_tsplib_matches_golden() {
    let input = path("data", "toy-n6.vrp");
    assert_eq!(
        stdout(&["split", s(&input), "-", "--tsplib", "--k", "3"]),
        golden("toy-n6.expanded.json")
    );
    assert_eq!(
        mingen(&["split", s(&input), "-", "--tsplib"]).status.code(),
        Some(2)
    );
}

#[test]
fn split_with_one_fulfiller_copies_customers() {
    let input = path("data", "two_customers.json");
    let v: serde_json::Value = serde_json::from_str(&stdout(&["split", s(&input), "-", "--k", "1"])).unwrap();
    let copies = v["copies"].as_array().unwrap();
    let customers = v["customers"].as_array().unwrap();
    assert_eq!(copies.len(), customers.len());
    for (copy, customer) in copies.iter().zip(customers) {
        assert_eq!(copy["parent_id"], customer["id"]);
        assert_eq!(copy["demand"], customer["demand"]);
        assert_eq!(copy["attrs"], customer["attrs"]);
    }
}

#[test]
fn recover_matches_golden() {
    let expanded = path("golden", "two_customers.expanded.json");
    let assignment = path("data", "assignment.json");
    assert_eq!(
        stdout(&["recover", s(&expanded), s(&assignment)]),
        golden("recover.txt")
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&[
        "recover",
        s(&expanded),
        s(&assignment),
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(
        v[0],
        serde_json::json!({"customer": "A", "fulfiller": "f1", "amount": 5})
    );
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"k": 2, "customers": [{"id": "A", "demand": 0}]}"#).unwrap();
    assert_eq!(mingen(&["split", s(&bad), "-"]).status.code(), Some(2));
    assert_eq!(
        mingen(&["split", "/nonexistent/file.json", "-"]).status.code(),
        Some(2)
    );

    let expanded = path("golden", "two_customers.expanded.json");
    std::fs::write(&bad, r#"[{"copy_id": "A#1", "fulfiller": "f1", "amount": 3}]"#).unwrap();
    let out = mingen(&["recover", s(&expanded), s(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unassigned"));
}

#[test]
fn structured_outputs_parse_back() {
    use mingen::oracle::VerificationReport;
    use mingen::{GenerationPlan, Partition};

    let v: serde_json::Value = serde_json::from_str(&stdout(&["gen", "9", "3", "--format", "json"])).unwrap();
    let mu: Partition = serde_json::from_value(v["parts"].clone()).unwrap();
    assert_eq!(mu.to_string(), "3 2 2 1 1");

    let text = stdout(&["verify", "3", "2", "2", "1", "1", "--k", "3", "--format", "json"]);
    let report: VerificationReport = serde_json::from_str(&text).unwrap();
    assert!(report.passed());
    assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", text);

    let text = stdout(&[
        "witness", "3", "2", "2", "1", "1", "--target", "4", "3", "2", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let plan: GenerationPlan = serde_json::from_value(v["plan"].clone()).unwrap();
    assert_eq!(plan.to_string(), "4 = 3+1; 3 = 2+1; 2 = 2");
}

#[test]
fn exit_codes() {
    assert_eq!(
        mingen(&["verify", "3", "3", "3", "--n", "9", "--k", "3"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        mingen(&["verify", "5", "--n", "9", "--k", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        mingen(&["witness", "3", "1", "--target", "2", "2"]).status.code(),
        Some(1)
    );
    assert_eq!(
        mingen(&[
            "verify",
            "1",
            "1",
            "1",
            "1",
            "1",
            "1",
            "--k",
            "3",
            "--mode",
            "exact",
            "--max-nodes",
            "2"
        ])
        .status
        .code(),
        Some(3)
    );
    assert_eq!(mingen(&["size", "5"]).status.code(), Some(2));
}
