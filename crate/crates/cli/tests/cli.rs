use std::process::{Command, Output};

use cpl_core::VerificationReport;
use serde_json::Value;

fn cpl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cpl"))
        .args(args)
        .env_remove("CPL_MAX_ORDER")
        .output()
        .expect("cpl runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn verify_theorem_a_on_s3() {
    let out = cpl(&["verify", "--theorem", "A", "--group", "S3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "verify");
    assert_eq!(v["reports"][0]["cases_checked"], 9);
    assert_eq!(v["reports"][0]["verdict"], "pass");
}

#[test]
fn reports_round_trip() {
    let out = cpl(&["verify", "--theorem", "B", "--group", "D4", "--group", "S4"]);
    let v = json(&out);
    let reports: Vec<VerificationReport> = serde_json::from_value(v["reports"].clone()).unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(serde_json::to_value(&reports).unwrap(), v["reports"]);
    assert_eq!(reports[1].verdict, cpl_core::Verdict::Skipped);
}

#[test]
fn reproduce_example_2_2_m_6() {
    let out = cpl(&["reproduce", "--example", "2.2", "--m", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["reports"][0]["extremal"]["section_order"], 6.0);
    assert_eq!(v["reports"][0]["group_spec"], "D4 x ES(3,+)");
}

#[test]
fn eta_with_inverse() {
    let out = cpl(&["eta", "--group", "AGL1(5)", "--rep-order", "5", "--with-inverse"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["data"]["eta"], 2);
}

#[test]
fn usage_and_ingestion_errors_exit_2() {
    assert_eq!(cpl(&["info", "D4 x Q8 x"]).status.code(), Some(2));
    assert_eq!(cpl(&["info", "A5"]).status.code(), Some(2));
    assert_eq!(cpl(&["verify", "--theorem", "A"]).status.code(), Some(2));
    assert_eq!(cpl(&["bogus"]).status.code(), Some(2));
    assert_eq!(cpl(&["verify", "--theorem", "A", "--from", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(cpl(&["info", "S8"]).status.code(), Some(2));
    assert_eq!(cpl(&["info", "S5", "--max-order", "100"]).status.code(), Some(2));
}

#[test]
fn guard_env_var() {
    let out = Command::new(env!("CARGO_BIN_EXE_cpl"))
        .args(["info", "S4"])
        .env("CPL_MAX_ORDER", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn planted_violations_exit_1() {
    let cfg = <cpl_cli::RunConfig as clap::Parser>::try_parse_from(["cpl", "verify", "--theorem", "A", "--group", "S3"]).unwrap();
    let mut env = cpl_cli::execute(&cfg).unwrap();
    assert_eq!(env.exit_code(), 0);
    let zero = cpl_core::harness::BoundFn::new("0", |_| 0);
    let g = cpl_core::parse_group_spec("S3").unwrap().group;
    env.reports = vec![cpl_core::harness::verify_transfer_theorem(&g, &zero).unwrap()];
    assert_eq!(env.exit_code(), 1);
}

#[test]
fn generator_file_ingestion() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gens.json");
    std::fs::write(
        &path,
        r#"[{"name": "S3 by hand", "degree": 3, "generators": [[1,0,2],[1,2,0]]},
            {"name": "C4", "degree": 4, "generators": [[1,2,3,0]]}]"#,
    )
    .unwrap();
    let out = cpl(&["verify", "--theorem", "T4.2", "--from", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["reports"][0]["group_spec"], "S3 by hand");
    assert_eq!(v["reports"].as_array().unwrap().len(), 2);

    std::fs::write(&path, r#"{"name": "bad", "degree": 3, "generators": [[0,0,1]]}"#).unwrap();
    assert_eq!(cpl(&["verify", "--theorem", "A", "--from", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn output_file_and_formats_agree() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let args = ["verify", "--theorem", "ETA_PGROUP", "--group", "D4"];
    let out = cpl(&[&args[..], &["--output", path.to_str().unwrap()]].concat());
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();

    let text = String::from_utf8(cpl(&[&args[..], &["--format", "text"]].concat()).stdout).unwrap();
    let lookup = |key: &str| {
        text.lines()
            .find_map(|l| l.strip_prefix(&format!("{key} = ")))
            .unwrap()
            .to_string()
    };
    assert_eq!(lookup("reports.0.cases_checked"), v["reports"][0]["cases_checked"].to_string());
    assert_eq!(lookup("reports.0.extremal.min_slack"), v["reports"][0]["extremal"]["min_slack"].to_string());
    assert_eq!(lookup("reports.0.extremal.max_eta"), v["reports"][0]["extremal"]["max_eta"].to_string());

    let csv = String::from_utf8(cpl(&[&args[..], &["--format", "csv"]].concat()).stdout).unwrap();
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    let i = header.iter().position(|h| *h == "cases_checked").unwrap();
    assert_eq!(row[i], v["reports"][0]["cases_checked"].to_string());
}

#[test]
fn scans_emit_jsonl_records() {
    let out = cpl(&["scan", "--question", "open4", "--group", "wr(C2,2)", "--group", "wr(wr(C2,2),2)", "--format", "jsonl"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let recs: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(recs.iter().any(|r| r["group_spec"] == "wr(wr(C2,2),2)" && r["minimal_m"] == 2 && r["tight"] == true));

    let out = cpl(&["scan", "--question", "conjecture", "--group", "S4", "--group", "S5"]);
    let v = json(&out);
    assert!(v["data"]["best_fit"].is_array());
    assert!(v["data"]["notes"][0].as_str().unwrap().contains("not solvable"));
}

#[test]
fn info_and_classes() {
    let v = json(&cpl(&["info", "wr(wr(C2,2),2)"]));
    assert_eq!(v["data"]["order"], 128);
    let v = json(&cpl(&["classes", "S4"]));
    let sizes: Vec<u64> = v["data"]["classes"].as_array().unwrap().iter().map(|c| c["size"].as_u64().unwrap()).collect();
    assert_eq!(sizes.iter().sum::<u64>(), 24);
    assert_eq!(sizes.len(), 5);
}
