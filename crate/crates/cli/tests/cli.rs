use std::path::PathBuf;
use std::process::{Command, Output};

fn tubular(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tubular"))
        .args(args)
        .env_remove("TUBULAR_MAX_HEIGHT")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("tubular-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn classify() {
    let o = tubular(&["classify", "0,0,1,0,1,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "real Schur root 0:1\n");
    assert_eq!(
        stdout(&tubular(&["classify", "0,0,1,1,1,1"])),
        "isotropic Schur root h_0\n"
    );
    assert_eq!(stdout(&tubular(&["classify", "2,0,0,0,0,0"])), "neither\n");
    assert_eq!(stdout(&tubular(&["classify", "-1,0,0,0,0,0"])), "real Schur root 0:i\n");
    assert_eq!(tubular(&["classify", "1,2,3"]).status.code(), Some(2));
}

#[test]
fn compat_reports_rule() {
    let o = tubular(&["compat", "0:1", "0:-1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "incompatible (same slope, x = −y)\n");
    assert!(stdout(&tubular(&["compat", "0:1", "2:1"])).starts_with("compatible ("));
    assert_eq!(tubular(&["compat", "0:1", "0:q"]).status.code(), Some(2));
}

#[test]
fn roots_json() {
    let o = tubular(&["roots", "--max-height", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], "tubular.roots/v1");
    assert_eq!(v["roots"].as_array().unwrap().len(), 32);
    assert_eq!(stdout(&tubular(&["roots", "--max-height", "1"])).lines().count(), 16);
}

#[test]
fn arcs() {
    assert_eq!(stdout(&tubular(&["arc", "intersect", "7/4:+", "0:-"])), "3\n");
    assert_eq!(stdout(&tubular(&["arc", "intersect", "0:+", "inf:+"])), "0\n");
    for (slope, which) in [("7/4", "+"), ("-2/3", "-"), ("-1", "j")] {
        let path = scratch(&format!("arc{}.svg", which.len() + slope.len()));
        let o = tubular(&["arc", "render", slope, which, "-o", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        assert!(std::fs::read_to_string(&path).unwrap().starts_with("<svg"));
    }
    let o = tubular(&["arc", "render", "1/2", "+", "-o", "/nonexistent-dir/x.svg"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn quiver_commands() {
    let o = tubular(&["quiver", "verify", "e7"]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "OK (order=rl)\n".to_string()));
    let o = tubular(&["quiver", "verify", "e6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL"));
    assert!(stdout(&tubular(&["quiver", "verify", "d4-class"])).starts_with("OK (class size 4"));
    let o = tubular(&["quiver", "mutate", "--fixture", "bt_sphere", "--seq", "1,1"]);
    assert_eq!(
        stdout(&o),
        "n=6\n0 0 1 1 -1 -1\n0 0 1 1 -1 -1\n-1 -1 0 0 1 1\n-1 -1 0 0 1 1\n1 1 -1 -1 0 0\n1 1 -1 -1 0 0\n"
    );
    assert_eq!(
        tubular(&["quiver", "mutate", "--fixture", "bt_sphere", "--seq", "7"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(tubular(&["quiver", "verify", "d5"]).status.code(), Some(2));
}

#[test]
fn exchange_explore() {
    let o = tubular(&["exchange", "explore", "--depth", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], "tubular.exchange-graph/v1");
    assert_eq!(v["nodes"].as_array().unwrap().len(), 7);
    assert_eq!(v["edges"].as_array().unwrap().len(), 6);
    let dot = stdout(&tubular(&["exchange", "explore", "--depth", "2"]));
    assert!(dot.starts_with("graph exchange {"));
    assert_eq!(dot, stdout(&tubular(&["exchange", "explore", "--depth", "2"])));
}

#[test]
fn exhausted_search_exit_code() {
    let o = Command::new(env!("CARGO_BIN_EXE_tubular"))
        .args(["exchange", "explore", "--depth", "1"])
        .env("TUBULAR_MAX_HEIGHT", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = tubular(&["exchange", "explore", "--depth", "1", "--height", "2"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn usage_errors() {
    assert_eq!(tubular(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(tubular(&["roots"]).status.code(), Some(2));
}

#[test]
fn selftest_reports_every_criterion() {
    let o = tubular(&["selftest"]);
    let out = stdout(&o);
    assert_eq!(
        out.lines()
            .filter(|l| l.starts_with("[PASS]") || l.starts_with("[FAIL]"))
            .count(),
        10
    );
    // The E6 sequence does not close, so the conjunction is false.
    assert_eq!(o.status.code(), Some(1));
    assert!(out.contains("9/10 criteria pass"));
}
