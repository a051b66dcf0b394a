use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn dhecc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dhecc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn stderr_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).expect("stderr is json")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn fig5_file() -> PathBuf {
    // built by hand from the definition: cliques u, v, cross edges u_i v_j
    // (i != j), pendants x_i on u_i and y_i on v_i
    let l = 3;
    let mut text = String::from("# fig5, l = 3\n");
    for i in 0..l {
        for j in 0..l {
            if i < j {
                text += &format!("{i} {j}\n{} {}\n", l + i, l + j);
            }
            if i != j {
                text += &format!("{i} {}\n", l + j);
            }
        }
        text += &format!("{i} {}\n{} {}\n", 2 * l + i, l + i, 3 * l + i);
    }
    temp_file("fig5.txt", &text)
}

#[test]
fn ecc_on_fig5_file() {
    let path = fig5_file();
    let out = dhecc(&["ecc", "-i", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["seed"], Value::Null);
    assert_eq!(v["table"]["rad"], 3);
    assert_eq!(v["table"]["diam"], 4);
    assert_eq!(v["table"]["center"], serde_json::json!([0, 1, 2, 3, 4, 5]));

    let oracle = json(&dhecc(&["ecc-oracle", "-i", path.to_str().unwrap()]));
    assert_eq!(oracle["table"], v["table"]);
}

#[test]
fn recognize_verdict_is_data() {
    let out = dhecc(&["recognize", "--named", "cycle:5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["distance_hereditary"], false);

    let out = dhecc(&["recognize", "--named", "fig5:4", "--text"]);
    let v = json(&out);
    assert_eq!(v["distance_hereditary"], true);
    assert_eq!(v["sequence"]["steps"].as_array().unwrap().len(), 15);
    assert!(v["sequence_text"].as_str().unwrap().starts_with("# pruning n=16 root=0"));
}

#[test]
fn errors_are_json_with_exit_2() {
    let path = temp_file("loop.txt", "p 3 2\n0 1\n1 1\n");
    let out = dhecc(&["ecc", "-i", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let e = stderr_json(&out);
    assert_eq!(e["error"]["kind"], "SelfLoop");
    assert!(e["error"]["message"].as_str().unwrap().contains("line 3"));

    let path = temp_file("split.txt", "0 1\n2 3\n");
    let out = dhecc(&["center", "-i", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["error"]["kind"], "DisconnectedGraph");

    let out = dhecc(&["ecc", "--named", "house"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["error"]["kind"], "NotDistanceHereditary");

    let out = dhecc(&["ecc", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["error"]["kind"], "UsageError");

    let out = dhecc(&["ecc", "--named", "gem", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));

    let out = dhecc(&["ecc"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn corpus_audit_passes() {
    let out = dhecc(&["audit", "--n", "200", "--count", "100", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["violations"], 0);
    assert_eq!(v["seed"], 7);
    assert_eq!(v["instances"].as_array().unwrap().len(), 100);
}

#[test]
fn single_graph_audit_with_shadow() {
    let out = dhecc(&["audit", "--named", "fig7-demo", "--shadow"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["pass"], true);
    let checks = v["audit"]["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["name"] == "shadow"));
}

#[test]
fn output_is_reproducible() {
    let args = ["bounds", "--n", "60", "--seed", "11", "--start", "3"];
    let a = dhecc(&args);
    let b = dhecc(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["seed"], 11);
    assert_eq!(v["pair"]["trace"][0], 3);
}

#[test]
fn generated_graph_round_trips_through_a_file() {
    let out = dhecc(&["gen", "--n", "40", "--seed", "5", "--weights", "0.5,0.25,0.25"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("# dhecc gen n=40 seed=5"));
    let path = temp_file("gen40.txt", &text);
    let file = json(&dhecc(&["ecc", "-i", path.to_str().unwrap()]));
    let direct = json(&dhecc(&["ecc", "--n", "40", "--seed", "5", "--weights", "0.5,0.25,0.25"]));
    assert_eq!(file["table"], direct["table"]);
    let oracle = json(&dhecc(&["ecc-oracle", "-i", path.to_str().unwrap()]));
    assert_eq!(file["table"], oracle["table"]);
}

#[test]
fn certify_and_center() {
    let v = json(&dhecc(&["certify", "--named", "fig5:3"]));
    for k in ["radius", "diameter", "tight_upper"] {
        assert_eq!(v[k]["pass"], true, "{k}");
    }
    let c = json(&dhecc(&["center", "--named", "fig5:3"]));
    assert_eq!(c["center"]["classification"], "cograph");
    assert_eq!(c["center"]["rad"], 3);
}

#[test]
fn bench_reports_medians() {
    let out = dhecc(&["bench", "--sizes", "50,100", "--runs", "3"]);
    assert!(out.status.success());
    let v = json(&out);
    let rows = v["results"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r["oracle_agrees"] == true));
}
