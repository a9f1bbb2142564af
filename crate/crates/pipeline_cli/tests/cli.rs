use std::process::Command;

fn orbicheck(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_orbicheck")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

#[test]
fn dimension_pass_and_fail_codes() {
    let (code, out) = orbicheck(&["--json", "dimension", "--dimv1", "120", "--d0", "102", "--d13", "0", "--d23", "0"]);
    assert_eq!(code, 0, "{out}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["steps"][0]["computed"], "312");
    let (code, _) = orbicheck(&["dimension", "--dimv1", "312", "--d0", "0", "--d13", "0", "--d23", "0"]);
    assert_eq!(code, 1);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(orbicheck(&["tables", "--which", "nope"]).0, 2);
    assert_eq!(orbicheck(&["lattice", "--name", "e6_4", "--isometry", "sigma2"]).0, 2);
    assert_eq!(orbicheck(&["--trunc", "0", "tables"]).0, 2);
    assert_eq!(orbicheck(&["twist-bound", "--case", "/nonexistent/case.json"]).0, 2);
}

#[test]
fn twist_bound_json_is_stable() {
    let a = orbicheck(&["--json", "twist-bound", "--case", "e6g2"]);
    let b = orbicheck(&["--json", "twist-bound", "--case", "e6g2"]);
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
}

#[test]
fn candidates_order3_filter() {
    let (code, out) = orbicheck(&["--json", "candidates", "--dim", "312", "--ratio", "12", "--fixed", "E6,3 A2,1^3"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("E6,1"));
}
