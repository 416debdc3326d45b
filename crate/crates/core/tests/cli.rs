use std::process::{Command, Output};

fn nyldon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nyldon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn factor_and_conjugate() {
    let o = nyldon(&["factor", "10001011010101"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1000 1011010101\n");

    let o = nyldon(&["conjugate", "10001011010101"]);
    assert_eq!(stdout(&o), "10110101011000\n");
}

#[test]
fn periodic_word_exits_one() {
    let o = nyldon(&["conjugate", "0101"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("periodic"));
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(nyldon(&["factor", "012"]).status.code(), Some(2));
    assert_eq!(nyldon(&["factor", ""]).status.code(), Some(2));
    assert_eq!(nyldon(&["--alphabet", "1", "factor", "0"]).status.code(), Some(2));
    assert_eq!(nyldon(&["is-member", "01", "--policy", "colex"]).status.code(), Some(2));
}

#[test]
fn enumerate_counts() {
    let o = nyldon(&["enumerate", "--max-len", "7"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let words: Vec<&str> = text.split_whitespace().filter(|t| t.bytes().all(|b| b == b'0' || b == b'1')).collect();
    assert_eq!(words.len(), 41);
    assert!(words.contains(&"1001110"));
}

#[test]
fn verify_hall_is_json() {
    let o = nyldon(&["verify-hall", "--policy", "lex", "--max-len", "6"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["is_right_hall"], true);
    assert_eq!(v["is_left_hall"], false);
}

#[test]
fn selftest_runs_quick_criteria() {
    let o = nyldon(&["selftest", "1", "2", "9"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(), 3);
}

#[test]
fn jobs_do_not_change_output() {
    let one = nyldon(&["--jobs", "1", "power-scan", "--max-len", "9"]);
    let four = nyldon(&["--jobs", "4", "power-scan", "--max-len", "9"]);
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
}
