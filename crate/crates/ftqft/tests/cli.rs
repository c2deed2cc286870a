use std::io::Write;

use ftqft::cli::run;
use serde_json::Value;

const DATA: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data");

fn data(name: &str) -> String {
    format!("{DATA}/{name}")
}

fn result(args: &[&str]) -> Value {
    let (code, out, err) = run(std::iter::once("ftqft").chain(args.iter().copied()));
    assert_eq!(code, 0, "{args:?}: {err}");
    let report: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["version"], env!("CARGO_PKG_VERSION"));
    report["result"].clone()
}

#[test]
fn s3_genus_two() {
    let r = result(&["tqft", "z", "--dim", "2", "--genus", "2", "--group", &data("s3.json")]);
    assert_eq!(r["z"], "81");
    assert_eq!(r["agree"], true);
}

#[test]
fn z2_doubles() {
    let plain = result(&["verlinde", "--group", &data("z2.json")]);
    let semion = result(&["verlinde", "--group", &data("z2.json"), "--omega", &data("z2_semion.json")]);
    assert_eq!(plain["rank"], 4);
    assert_eq!(semion["rank"], 4);
    assert_eq!(plain["t_orders"], serde_json::json!([1, 1, 1, 2]));
    assert_ne!(plain["t_orders"], semion["t_orders"]);
}

#[test]
fn natural_action_and_cosets_agree() {
    let mut cosets = tempfile::NamedTempFile::new().unwrap();
    write!(cosets, r#"{{"kind": "cosets", "subgroup": ["(1 2)"]}}"#).unwrap();
    let path = cosets.path().to_str().unwrap();
    let a = result(&["frobenius", "--group", &data("s3.json"), "--gset", path]);
    let b = result(&["frobenius", "--group", &data("s3.json"), "--gset", &data("s3_points.json")]);
    assert_eq!(a["dimension"], b["dimension"]);
    assert_eq!(a["z_genus_0_to_3"], b["z_genus_0_to_3"]);
}

#[test]
fn one_dimensional_sign_character() {
    let r = result(&[
        "tqft",
        "z",
        "--dim",
        "1",
        "--group",
        &data("s3.json"),
        "--gset",
        &data("s3_points.json"),
        "--cocycle",
        &data("s3_sign_1d.json"),
    ]);
    assert_eq!(r["hilbert_dimension"], 0);
    assert_eq!(r["z_circle_display"], "0");
}

#[test]
fn anomaly_in_four_dimensions() {
    let r = result(&["anomaly", "--dim", "4"]);
    assert_eq!(r["source_theory"], "K");
    assert_eq!(r["target_group"], "H²(T;ℤ)");
}

#[test]
fn csv_carries_metadata() {
    let (code, out, _) = run(["ftqft", "chartable", "--group", &data("s3.json"), "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("# tool: ftqft"));
    assert!(out.contains("sha256="));
    assert!(out.contains("X.3,2,2,-1,0"));
}

#[test]
fn exit_codes() {
    let mut bad = tempfile::NamedTempFile::new().unwrap();
    write!(bad, "{{ not json").unwrap();
    let bad = bad.path().to_str().unwrap().to_string();
    assert_eq!(run(["ftqft", "group", "info", "--group", &bad]).0, 1);
    assert_eq!(run(["ftqft", "anomaly"]).0, 1);
    assert_eq!(run(["ftqft", "anomaly", "--dim", "0"]).0, 2);
    assert_eq!(run(["ftqft", "rs-verify", "--dim", "40"]).0, 2);
    let tiny = run([
        "ftqft",
        "tqft",
        "z",
        "--dim",
        "2",
        "--genus",
        "1",
        "--group",
        &data("s3.json"),
        "--presentation",
        &data("torus3.json"),
        "--max-work",
        "5",
    ]);
    assert_eq!(tiny.0, 3, "{}", tiny.2);
}

#[test]
fn help_is_not_an_error() {
    let (code, out, _) = run(["ftqft", "--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verlinde"));
}
