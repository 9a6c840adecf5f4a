use std::path::PathBuf;
use std::process::{Command, Output};

fn g2cells(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2cells"))
        .args(args)
        .env_remove("G2CELLS_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = g2cells(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("g2cells-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn reduce_and_length() {
    assert_eq!(stdout(&["reduce", "ss"]), "e 0\n");
    assert_eq!(stdout(&["reduce", "121212"]), "121212 6\n");
    assert_eq!(stdout(&["reduce", "ststst"]), "121212 6\n");
    assert_eq!(stdout(&["length", "tstsrtstsr"]), "10\n");
    assert_eq!(
        stdout(&["reduce", "--format", "json", "ss"]),
        "{\"length\":0,\"word\":\"\"}\n"
    );
}

#[test]
fn bruhat() {
    assert_eq!(stdout(&["bruhat", "1", "121212"]), "true\n");
    assert_eq!(stdout(&["bruhat", "0", "121212"]), "false\n");
}

#[test]
fn kl_polynomials_and_mu() {
    assert_eq!(stdout(&["klpoly", "1", "121212"]), "1\n");
    assert_eq!(stdout(&["klpoly", "0", "1"]), "0\n");
    assert_eq!(stdout(&["klpoly", "", "0121210121212"]), "q+1\n");
    assert_eq!(stdout(&["mu", "", "1"]), "1\n");
    assert_eq!(stdout(&["mu", "1", ""]), "0\n");
}

#[test]
fn products() {
    assert_eq!(
        stdout(&["cproduct", "121212", "121212"]),
        "([2]^6-4[2]^4+3[2]^2)*C[121212]\n"
    );
    assert_eq!(
        stdout(&["cproduct", "121212", "0121212"]),
        "[2]*C[121021021212] + ([2]^5-3[2]^3+[2])*C[121212]\n"
    );
    assert_eq!(stdout(&["cproduct", "", "121212"]), "C[121212]\n");
}

#[test]
fn cells() {
    assert_eq!(stdout(&["cell", "121212"]), "(e,(0,0),e)\n");
    assert_eq!(stdout(&["cell", "s"]), "none\n");
    assert_eq!(stdout(&["cell", "0121212"]), "(ststs,(0,0),e)\n");
}

#[test]
fn representation_products() {
    assert_eq!(
        stdout(&["repmult", "(1,0)", "(1,0)"]),
        "(2,0) mult 1 dim 27\n(1,0) mult 1 dim 7\n(0,1) mult 1 dim 14\n(0,0) mult 1 dim 1\n"
    );
}

#[test]
fn delta_table_is_deterministic_across_jobs() {
    let one = stdout(&["delta-table", "--format", "csv", "--jobs", "1"]);
    let four = stdout(&["delta-table", "--format", "csv", "--jobs", "4"]);
    assert_eq!(one, four);
    let lines: Vec<&str> = one.lines().collect();
    assert!(lines[0].starts_with("# g2cells "));
    assert_eq!(
        lines[1],
        "u_index,u_word,d_u,uprime_index,uprime_word,d_uprime,delta_0,delta_xa,delta_xb,class"
    );
    assert_eq!(lines.len(), 2 + 144);
    assert!(lines.contains(&"1,e,e,10,ststs,r,1,0,0,U1"));

    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["delta-table", "--format", "json"])).unwrap();
    assert_eq!(json["rows"].as_array().unwrap().len(), 144);
    let latex = stdout(&["delta-table", "--format", "latex"]);
    assert!(latex.contains("\\begin{tabular}"));
}

#[test]
fn mu_table_reaches_three() {
    let out = stdout(&["mu-table", "--bound-a", "1", "--bound-b", "1"]);
    assert!(out.contains("# pairs 2304 max mu 3"));
}

#[test]
fn exit_codes() {
    let parse = g2cells(&["reduce", "abc"]);
    assert_eq!(parse.status.code(), Some(2));
    let resource = g2cells(&["--max-length", "5", "klpoly", "", "121212"]);
    assert_eq!(resource.status.code(), Some(3));
    let bad_format = g2cells(&["--format", "xml", "reduce", "1"]);
    assert_eq!(bad_format.status.code(), Some(2));
}

#[test]
fn cache_lifecycle() {
    let dir = scratch("cache");
    let path = dir.join("kl.cache");
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&["--cache", p, "klpoly", "", "0121210121212"]), "q+1\n");
    assert!(path.exists());
    let info = stdout(&["--cache", p, "cache", "info"]);
    assert!(info.contains("columns"), "{info}");
    // A warm cache gives the same answer.
    assert_eq!(stdout(&["--cache", p, "klpoly", "", "0121210121212"]), "q+1\n");
    let via_env = Command::new(env!("CARGO_BIN_EXE_g2cells"))
        .args(["cache", "info"])
        .env("G2CELLS_CACHE", p)
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(via_env.stdout).unwrap(), info);
    stdout(&["--cache", p, "cache", "clear"]);
    assert!(!path.exists());

    std::fs::write(&path, "#g2cells-klcache v0\n").unwrap();
    let stale = g2cells(&["--cache", p, "klpoly", "", "1"]);
    assert_eq!(stale.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&stale.stderr).contains("version"));
}
