use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn siltlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_siltlab"))
        .args(args)
        .env_remove("SILTLAB_BUDGET")
        .output()
        .expect("binary runs")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("JSON on stdout")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("siltlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn semistable_regular_module() {
    let m = scratch("regular11.json");
    std::fs::write(&m, r#"{"dim":[1,1],"matrices":{"a":[["1"]],"b":[["0"]]}}"#).unwrap();
    let o = siltlab(&["semistable", "--theta", "-1,1", "--module", m.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["semistable"], true);
    assert_eq!(r["theta_of_module"], "0");
    assert!(r["basis"].as_str().unwrap().contains("[P_1]"));
}

#[test]
fn mutate_a_gives_t1() {
    let o = siltlab(&["mutate", "--silting", "A", "--summand", "1", "--dir", "left"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["result"]["g_vector"], serde_json::json!([-1, 3]));
    let gs: Vec<Value> = r["result"]["summands"].as_array().unwrap().iter().map(|s| s["g_vector"].clone()).collect();
    assert_eq!(gs, vec![serde_json::json!([0, 1]), serde_json::json!([-1, 2])]);
}

#[test]
fn mutation_output_feeds_back_in() {
    let first = scratch("t1.json");
    let o = siltlab(&["mutate", "--silting", "A", "--summand", "1"]);
    let r = json(&o);
    std::fs::write(&first, serde_json::to_string(&r["complex"]).unwrap()).unwrap();
    let o = siltlab(&["mutate", "--silting", first.to_str().unwrap(), "--summand", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["result"]["g_vector"], serde_json::json!([-3, 5]));
}

#[test]
fn fan_reports_and_budget_exit() {
    let o = siltlab(&["--algebra", "linear:2", "fan"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["chamber_count"], 5);
    let o = siltlab(&["fan", "--chambers", "4"]);
    assert_eq!(o.status.code(), Some(2));
    let r = json(&o);
    assert_eq!(r["chamber_count"], 4);
    assert_eq!(r["complete"], false);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let a = siltlab(&["fan", "--chambers", "6"]);
    let b = siltlab(&["fan", "--chambers", "6"]);
    assert_eq!(a.stdout, b.stdout);
    let svg = scratch("fan.svg");
    let s = svg.to_str().unwrap();
    siltlab(&["--format", "svg", "--out", s, "fan", "--chambers", "6"]);
    let first = (std::fs::read(&svg).unwrap(), std::fs::read(svg.with_extension("json")).unwrap());
    siltlab(&["--format", "svg", "--out", s, "fan", "--chambers", "6"]);
    assert_eq!(first.0, std::fs::read(&svg).unwrap());
    assert_eq!(first.1, std::fs::read(svg.with_extension("json")).unwrap());
    let report: Value = serde_json::from_slice(&first.1).unwrap();
    assert!(report["picture"]["chambers"].as_array().unwrap().len() == 6);
}

#[test]
fn usage_errors_exit_with_two() {
    let o = siltlab(&["--algebra", "linear:3", "--format", "svg", "--out", "/tmp/never.svg", "fan"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("two vertices"));
    assert_eq!(siltlab(&["semistable", "--theta", "1,x", "--module", "nope.json"]).status.code(), Some(2));
    assert_eq!(siltlab(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn chain_colimit_records_stabilization() {
    let out = scratch("report.json");
    let o = siltlab(&[
        "chain-colimit",
        "--chain",
        "auto:kronecker:8",
        "--theta",
        "-1,1",
        "--dim-bound",
        "3,3",
        "--out",
        out.to_str().unwrap(),
    ]);
    // the default growth cap stops the diagram early, the torsion comparison still runs
    assert_eq!(o.status.code(), Some(2));
    let r: Value = serde_json::from_slice(&std::fs::read(&out).unwrap()).unwrap();
    assert_eq!(r["holds"], true);
    assert_eq!(r["stages_built"], 3);
    assert_eq!(r["limit"]["sandwich"], true);
    assert_eq!(r["limit"]["stabilization_stage"], 3);
    assert_eq!(r["mittag_leffler"]["all_surjective"], true);

    let o = siltlab(&["chain-colimit", "--chain", "auto:kronecker:3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["stages"].as_array().unwrap().len(), 3);
}

#[test]
fn bongartz_of_a_shifted_projective() {
    let o = siltlab(&["bongartz", "--complex", "P1[1]", "--steps", "4", "--dim-bound", "2,2"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["holds"], true);
    assert_eq!(r["in_chamber"], serde_json::json!([true, true, true, true]));
}
