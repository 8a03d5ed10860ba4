use std::process::{Command, Output};

fn corrpade(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_corrpade"))
        .args(args)
        .env_remove("CORRPADE_PRECISION")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn row<'a>(csv: &'a str, scheme: &str, n: usize) -> Vec<&'a str> {
    csv.lines()
        .map(|l| l.split(',').collect::<Vec<_>>())
        .find(|c| c[1] == scheme && c[2] == n.to_string())
        .unwrap_or_else(|| panic!("no {scheme} row {n}"))
}

#[test]
fn list_names_every_builtin() {
    let o = corrpade(&["list"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for id in ["quartic_oscillator", "scattering", "schwinger", "hard_sphere", "membrane", "bose_o2"] {
        assert!(text.lines().any(|l| l.starts_with(id)), "{id} missing");
    }
}

#[test]
fn run_csv_has_header_and_rows_per_order() {
    let o = corrpade(&["run", "--problem", "quartic", "--scheme", "both", "--max-order", "4"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().next().unwrap(), "problem,scheme,n,amplitude,valid,percent_error");
    // standard 1..=4 and corrected 0..=4
    assert_eq!(text.lines().count(), 1 + 4 + 5);
    assert!(row(&text, "standard", 2)[3].starts_with("0.759147"));
    assert!(row(&text, "corrected", 3)[3].starts_with("0.587104"));
}

#[test]
fn scattering_final_row() {
    let o = corrpade(&["run", "-p", "scattering", "--scheme", "corrected", "--max-order", "25"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let last = row(&text, "corrected", 25);
    assert!(last[3].starts_with("0.213013"));
    assert!(last[5].starts_with("1.7064"));
}

#[test]
fn minimal_run_is_a_single_control_row() {
    let o = corrpade(&["run", "-p", "mittag_leffler", "--scheme", "corrected", "--max-order", "0"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 2);
    let prec = corrpade::num::bits_for_digits(60);
    let a0 = corrpade::corpus::control_for("mittag_leffler", prec).unwrap().amplitude().unwrap();
    assert_eq!(row(&text, "corrected", 0)[3], corrpade::num::format_sig(&a0, corrpade::report::OUTPUT_DIGITS));
}

#[test]
fn output_is_byte_identical_across_runs_and_file_matches_stdout() {
    let args = ["run", "-p", "debye", "-p", "wilson_loop", "--max-order", "8", "--format", "json"];
    let a = corrpade(&args);
    let b = corrpade(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let path = std::env::temp_dir().join(format!("corrpade-cli-{}.json", std::process::id()));
    let mut with_out = args.to_vec();
    let p = path.to_str().unwrap();
    with_out.extend(["--out", p]);
    assert!(corrpade(&with_out).status.success());
    assert_eq!(std::fs::read(&path).unwrap(), a.stdout);
    std::fs::remove_file(path).ok();
}

#[test]
fn json_and_csv_agree() {
    let csv = stdout(&corrpade(&["run", "-p", "correlation", "--max-order", "5"]));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&corrpade(&["run", "-p", "correlation", "--max-order", "5", "--format", "json"])))
            .unwrap();
    let recs = json["records"].as_array().unwrap();
    let lines: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(lines.len(), recs.len());
    for (l, r) in lines.iter().zip(recs) {
        let c: Vec<&str> = l.split(',').collect();
        assert_eq!(c[3], r["amplitude"].as_str().unwrap());
        assert_eq!(c[5], r["percent_error"].as_str().unwrap_or(""));
    }
}

#[test]
fn precision_env_var_is_honoured() {
    let o = Command::new(env!("CARGO_BIN_EXE_corrpade"))
        .args(["run", "-p", "debye", "--max-order", "2"])
        .env("CORRPADE_PRECISION", "12")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("invalid_config"));
}

#[test]
fn unknown_problem_is_a_json_error() {
    let o = corrpade(&["run", "-p", "no_such_problem"]);
    assert_eq!(o.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_str(String::from_utf8_lossy(&o.stderr).trim()).unwrap();
    assert_eq!(err["error"], "unknown_problem");
}

#[test]
fn insufficient_coefficients_is_a_json_error() {
    let o = corrpade(&["run", "-p", "schwinger", "--max-order", "12"]);
    assert_eq!(o.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_str(String::from_utf8_lossy(&o.stderr).trim()).unwrap();
    assert_eq!(err["error"], "insufficient_coefficients");
}

#[test]
fn problem_file_adds_user_problems() {
    let path = std::env::temp_dir().join(format!("corrpade-problems-{}.json", std::process::id()));
    std::fs::write(
        &path,
        r#"{"id": "geometric", "coefficients": [1, -1, 1, -1, 1, -1], "s": -1, "exact": 1,
            "control": {"kind": "root", "k": 1}}"#,
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let listed = stdout(&corrpade(&["list", "--problem-file", p]));
    assert!(listed.lines().any(|l| l.starts_with("geometric")));
    let o = corrpade(&["run", "-p", "geometric", "--problem-file", p, "--scheme", "corrected", "--max-order", "2"]);
    std::fs::remove_file(&path).ok();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    // 1/(1+x) is its own one-term root control
    assert!(row(&stdout(&o), "corrected", 2)[3].starts_with("1"));
}

#[test]
fn verify_only_runs_the_selected_criterion() {
    let o = corrpade(&["verify", "--only", "hard_sphere"]);
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS") || l.starts_with("FAIL")).count(), 1);
    assert!(text.starts_with("PASS [5] hard_sphere"));
    assert!(o.status.success());
}

#[test]
fn verify_exit_status_reflects_failures() {
    let o = corrpade(&["verify", "--only", "schwinger"]);
    let text = stdout(&o);
    let passed = text.starts_with("PASS");
    assert_eq!(o.status.success(), passed);
    assert_eq!(corrpade(&["verify", "--only", "nonsense"]).status.code(), Some(2));
}
