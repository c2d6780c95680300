use std::io::Write;
use std::process::{Command, Output, Stdio};

const F9: &str = "p=3,m=2,mod=1,0,1";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewcyc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = run(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn field_check_lists_automorphisms() {
    let v = json(&["field", "check", "--field", F9]);
    assert_eq!(v["order"], 9);
    assert_eq!(v["automorphisms"][0]["order"], 2);
    assert_eq!(v["automorphisms"][0]["fixed_field_order"], 3);
}

#[test]
fn factor_counts() {
    let v = json(&["factor", "--field", F9, "--n", "5"]);
    assert_eq!(v["count_fq"], "4");
    assert_eq!(v["count_r"], "64");
    assert_eq!(v["factors"].as_array().unwrap().len(), 2);
    let v = json(&["factor", "--field", F9, "--n", "1"]);
    assert_eq!(v["count_fq"], "2");
    assert_eq!(v["count_r"], "8");
}

#[test]
fn factor_rejects_non_coprime_length() {
    let o = run(&["factor", "--field", F9, "--n", "4"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn malformed_field_is_config_error() {
    let o = run(&["factor", "--field", "p=4,m=1", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["factor", "--field", "p=3,m=2,mod=1,0,2", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn build_reports_size() {
    let v = json(&[
        "code", "build", "--field", F9, "--n", "5", "--g1", "x-1", "--g2", "1", "--g3", "1",
    ]);
    assert_eq!(v["size"], "9^14");
    assert_eq!(v["log_q_size"], 14);
}

#[test]
fn non_divisor_is_rejected() {
    let o = run(&[
        "code", "build", "--field", F9, "--n", "5", "--g1", "x^2+1", "--g2", "1", "--g3", "1",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn dual_of_full_code_is_zero() {
    let v = json(&[
        "code", "dual", "--field", F9, "--n", "3", "--g1", "1", "--g2", "1", "--g3", "1",
    ]);
    assert_eq!(v["log_q_size"], 0);
    assert_eq!(v["dual"]["g1"], "[2,0] + x^3");
}

#[test]
fn self_dual_example() {
    let v = json(&[
        "code", "dual", "--field", F9, "--n", "2", "--g1", "x-[0,1]", "--g2", "x-[0,1]", "--g3",
        "x-[0,1]",
    ]);
    assert_eq!(v["dual"]["g1"], v["code"]["g1"]);
    assert_eq!(v["dual"]["g3"], v["code"]["g3"]);
}

#[test]
fn distance_of_single_component_code() {
    let v = json(&[
        "code", "distance", "--field", F9, "--n", "2", "--g1", "x-[0,1]", "--g2", "x^2-1", "--g3",
        "x^2-1",
    ]);
    assert_eq!(v["min_lee_distance"], 2);
    assert_eq!(v["gray_enumeration"], 2);
}

#[test]
fn idempotent_is_verified() {
    let v = json(&[
        "code",
        "idempotent",
        "--field",
        F9,
        "--n",
        "5",
        "--g1",
        "x-1",
        "--g2",
        "1",
        "--g3",
        "x^4+x^3+x^2+x+1",
    ]);
    assert_eq!(v["verified"], true);
    assert_eq!(v["components"][1], "[1,0]");
}

#[test]
fn gray_image_of_word() {
    let v = json(&[
        "code", "gray", "--field", F9, "--n", "1", "--g1", "1", "--g2", "1", "--g3", "1", "--word",
        "1|1|1",
    ]);
    assert_eq!(v["image"], "[1,0];[0,0];[1,0]");
    assert_eq!(v["lee_weight"], 2);
}

#[test]
fn census_tables() {
    let v = json(&["census", "--field", F9, "--n", "1"]);
    assert_eq!(v["rows"].as_array().unwrap().len(), 8);
    let v = json(&["census", "--field", F9, "--n", "5"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 64);
    let full = rows
        .iter()
        .find(|r| r["g1"] == "[1,0]" && r["g2"] == "[1,0]" && r["g3"] == "[1,0]");
    let full = full.expect("full code listed");
    assert_eq!(full["size"], "9^15");
    assert_eq!(full["distance"], 1);
}

#[test]
fn census_table_bound() {
    let o = run(&["census", "--field", F9, "--n", "5", "--table-bound", "10"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn code_description_round_trip() {
    let v = json(&[
        "code", "build", "--field", F9, "--n", "2", "--g1", "x-[0,1]", "--g2", "x^2-1", "--g3",
        "x^2-1",
    ]);
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(v["code"].to_string().as_bytes()).unwrap();
    let path = file.path().to_str().unwrap();
    let member = run(&[
        "code",
        "contains",
        "--code",
        path,
        "--word",
        "[0,2]|0|[0,1];1|0|2",
    ]);
    assert_eq!(stdout(&member).trim(), "true");
    let other = run(&["code", "contains", "--code", path, "--word", "1|0|0;0|0|0"]);
    assert_eq!(stdout(&other).trim(), "false");

    let mut child = Command::new(env!("CARGO_BIN_EXE_skewcyc"))
        .args([
            "code",
            "contains",
            "--code",
            "-",
            "--word",
            "[0,2]|0|[0,1];1|0|2",
        ])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(v["code"].to_string().as_bytes())
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o).trim(), "true");
}

#[test]
fn verify_matrix_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(br#"[{"p":3,"m":1,"mod":[0,1],"i":1,"n":2,"seed":7}]"#)
        .unwrap();
    let o = run(&[
        "verify",
        "--matrix",
        file.path().to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    let lines: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert!(!lines.is_empty());
    assert!(lines.iter().all(|l| l["pass"] == true));
    assert!(lines.iter().any(|l| l["claim"] == "Thm4.5"));
}

#[test]
fn verify_with_broken_inputs_fails() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(br#"[{"p":3,"m":2,"mod":[1,0,1],"i":1,"n":3}]"#)
        .unwrap();
    let path = file.path().to_str().unwrap();
    let o = run(&["verify", "--matrix", path]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["verify", "--matrix", path, "--inject-broken"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn verify_rejects_bad_matrix() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(br#"[{"p":3,"m":2,"mod":[1,0,2],"i":1,"n":3}]"#)
        .unwrap();
    let o = run(&["verify", "--matrix", file.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}
