use std::process::{Command, Output};

use congrlab_cli::ReportLine;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_congrlab"))
        .args(args)
        .env_remove("CONGRLAB_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_emits_one_line_per_prime() {
    let o = run(&["verify", "--checks", "wolst_h", "--p-min", "5", "--p-max", "97"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    // 23 primes lie in [5, 97].
    assert_eq!(lines.len(), 23);
    for l in lines {
        assert!(l.starts_with("{\"check\":\"wolst_h\",\"p\":"));
        let r: ReportLine = serde_json::from_str(l).unwrap();
        assert!(r.pass && r.lhs < r.modulus && r.rhs < r.modulus);
        assert_eq!(r.status, "proven");
        assert!(r.a.is_none());
    }
}

#[test]
fn jsonl_keys_in_schema_order() {
    let o = run(&["verify", "--checks", "thm11_a", "--p-min", "5", "--p-max", "5", "--a-set", "1/2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        r#"{"check":"thm11_a","p":5,"a":"1/2","modulus":25,"lhs":3,"rhs":3,"pass":true,"status":"proven"}"#
    );
}

#[test]
fn csv_output() {
    let o = run(&["verify", "--checks", "cor11_10,lehmer_26", "--p-min", "5", "--p-max", "5", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "check,p,a,modulus,lhs,rhs,pass,status\n\
         cor11_10,5,,25,3,14,false,recorded\n\
         lehmer_26,5,,25,13,13,true,proven\n"
    );
}

#[test]
fn recorded_and_conjecture_results_do_not_fail_the_run() {
    let o = run(&["verify", "--checks", "cor11_10", "--p-min", "5", "--p-max", "60"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"pass\":false"));

    let o = run(&["verify", "--checks", "conj_122,conj_123", "--p-min", "5", "--p-max", "50"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| l.ends_with("\"status\":\"conjecture\"}")));
}

#[test]
fn conjectures_are_opt_in_for_all() {
    let base = ["verify", "--checks", "all", "--p-min", "5", "--p-max", "11"];
    let without = stdout(&run(&base));
    assert!(!without.contains("\"conjecture\""));
    let mut with = base.to_vec();
    with.push("--include-conjectures");
    let with = stdout(&run(&with));
    assert!(with.contains("\"check\":\"conj_121\""));
    assert!(with.lines().count() > without.lines().count());
}

#[test]
fn output_is_identical_across_worker_counts() {
    let base = ["verify", "--include-conjectures", "--p-min", "5", "--p-max", "80"];
    let reference = run(&base);
    assert_eq!(reference.status.code(), Some(0));
    for jobs in ["2", "4"] {
        let mut args = base.to_vec();
        args.extend(["--jobs", jobs]);
        assert_eq!(run(&args).stdout, reference.stdout, "jobs = {jobs}");
    }
    let env = Command::new(env!("CARGO_BIN_EXE_congrlab"))
        .args(base)
        .env("CONGRLAB_JOBS", "3")
        .output()
        .unwrap();
    assert_eq!(env.stdout, reference.stdout);
}

#[test]
fn every_line_round_trips() {
    let o = run(&["verify", "--p-min", "5", "--p-max", "30", "--include-conjectures"]);
    for l in stdout(&o).lines() {
        let r: ReportLine = serde_json::from_str(l).unwrap();
        assert!(r.lhs < r.modulus && r.rhs < r.modulus);
        assert_eq!(serde_json::to_string(&r).unwrap(), l);
    }
}

#[test]
fn report_can_go_to_a_file() {
    let dir = std::env::temp_dir().join(format!("congrlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.txt");
    let o = run(&[
        "verify", "--checks", "rv_16", "--p-min", "5", "--p-max", "13", "--format", "table",
        "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 5);
    assert!(text.lines().next().unwrap().starts_with("check"));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["verify", "--p-min", "4", "--p-max", "3"][..],
        &["verify", "--p-min", "3", "--p-max", "20"],
        &["verify", "--p-min", "5", "--p-max", "10001"],
        &["verify", "--checks", "no_such_check", "--p-max", "7"],
        &["verify", "--jobs", "0", "--p-max", "7"],
        &["verify", "--a-set", "1/0", "--p-max", "7"],
        &["verify", "--format", "xml"],
        &["search", "--target", "euler-quarter", "--p-max", "3"],
        &["eval", "--p", "5", "--exp", "2", "--weight", "h"],
        &["eval", "--p", "9", "--exp", "1", "--family", "cb2", "--weight", "h"],
        &["eval", "--p", "5", "--exp", "9", "--family", "cb2", "--weight", "h"],
        &["oracle", "--p", "4", "--exp", "1"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn searches_reproduce_known_lists() {
    let o = run(&["search", "--target", "euler-quarter", "--p-max", "1100"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1019\n");
    let o = run(&["search", "--target", "bernoulli-third", "--p-max", "2000"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "");
}

#[test]
fn eval_spot_values() {
    let o = run(&["eval", "--p", "5", "--exp", "2", "--family", "cb2", "--weight", "h2"]);
    assert_eq!(stdout(&o).trim(), "14 (mod 25)");
    let o = run(&["eval", "--p", "5", "--exp", "1", "--a", "1/2", "--weight", "h-over-k"]);
    assert_eq!(stdout(&o).trim(), "1 (mod 5)");
    let o = run(&["eval", "--p", "5", "--exp", "1", "--a", "1/3", "--weight", "h2-over-2k1"]);
    assert_eq!(stdout(&o).trim(), "1 (mod 5)");
}

#[test]
fn identities_and_oracle_succeed() {
    let o = run(&["identities", "--max-size", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 7);
    let o = run(&["oracle", "--p", "11", "--exp", "2", "--a", "3/7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("MISMATCH"));
}
