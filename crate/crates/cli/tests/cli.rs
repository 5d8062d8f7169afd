use std::process::Command;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_square7")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn exit_codes() {
    let (code, out) = run(&["verify", "3c3", "-q"]);
    assert_eq!(code, 0);
    assert!(out.contains("VERDICT all-extendable"));
    assert!(out.contains("STATS precolorings=15 "));

    let (code, out) = run(&["verify", "3c3", "-k", "3", "-q", "--max-attempts", "1"]);
    assert_eq!(code, 1);
    assert!(out.contains("CEX 0 0 1 2 1 2"));

    assert_eq!(run(&["verify", "3q3"]).0, 2);
    assert_eq!(run(&["verify-all", "--only", "3c7"]).0, 2);
    assert_eq!(run(&["discharge-check", "--drop-rule", "9c9"]).0, 2);
}

#[test]
fn discharge_check_reports() {
    let (code, out) = run(&["discharge-check"]);
    assert_eq!(code, 0);
    assert!(out.contains("L=8 without adjacent 4- faces min_charge=1/3"));
    assert!(out.lines().last().unwrap().contains("PASS"));
    let (code, out) = run(&["discharge-check", "--drop-rule", "5c5*5"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL"));
}

#[test]
fn graph_commands() {
    let dir = std::env::temp_dir().join(format!("square7-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let c5 = dir.join("c5.graph");
    std::fs::write(&c5, "5\n0 1\n0 4\n1 2\n2 3\n3 4\n").unwrap();
    let (code, out) = run(&["chi", c5.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "3");
    let (code, out) = run(&["square", c5.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.split_whitespace().count() == 2).count(), 10);
    std::fs::remove_dir_all(&dir).unwrap();
}
