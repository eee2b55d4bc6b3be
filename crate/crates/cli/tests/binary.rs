use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn lietrace(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lietrace"))
        .args(args)
        .env_remove("LIETRACE_SERIES_ORDER_CAP")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn job(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("jobs")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn bundled_jobs_succeed() {
    for name in [
        "hattori_sweep.json",
        "sl2r_trace.json",
        "su21_trace.json",
        "su21_verify.json",
        "ahat_cp2.json",
        "todd_cp2_cp3.json",
    ] {
        let o = lietrace(&["run", &job(name)], None);
        assert_eq!(
            o.status.code(),
            Some(0),
            "{name}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
    }
}

#[test]
fn table_output() {
    let o = lietrace(&["run", &job("sl2r_trace.json")], None);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert!(lines
        .next()
        .unwrap()
        .starts_with("mu  dim_V  formal_degree"));
    lines.next();
    let cells: Vec<&str> = lines.next().unwrap().split_whitespace().collect();
    assert_eq!(cells, ["3", "1", "3", "-3", "-3", "true"]);
}

#[test]
fn stdin_job_and_quiet_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    let doc = r#"{"kind":"genus","genus":"todd","dims":[3],"twists":["0"]}"#;
    let o = lietrace(
        &["--quiet", "--csv", path.to_str().unwrap(), "run", "-"],
        Some(doc),
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "genus,dims,twists,value\ntodd,3,0,1\n"
    );
}

#[test]
fn sweep_subcommand() {
    let o = lietrace(&["sweep", "--nmax", "4"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("vanishing: PASS (10 of 10 zero)"));
}

#[test]
fn verify_subcommand() {
    let o = lietrace(&["verify", "--rank-max", "2", "--weight-max", "2"], None);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let text = stdout(&o);
    assert!(text.contains("factorization: PASS (150)"), "{text}");
    assert!(text.contains("scale_invariance: PASS"));
}

#[test]
fn exit_codes() {
    let schema = lietrace(
        &["run", "-"],
        Some(r#"{"kind":"trace","cartan":[[2,0],[0,2]]}"#),
    );
    assert_eq!(schema.status.code(), Some(2));
    let parse = lietrace(&["run", "-"], Some("{not json"));
    assert_eq!(parse.status.code(), Some(2));
    let usage = lietrace(&["frobnicate"], None);
    assert_eq!(usage.status.code(), Some(2));
    let domain = lietrace(
        &["run", "-"],
        Some(
            r#"{"kind":"trace","cartan":[[2,-1],[-1,2]],"noncompact_simple":[2],"weight":["-1","0"]}"#,
        ),
    );
    assert_eq!(domain.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&domain.stderr).contains("weight"));
    let missing = lietrace(&["run", "/nonexistent/job.json"], None);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn order_cap_from_environment() {
    let run = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_lietrace"))
            .args(["sweep", "--nmax", "6"])
            .env("LIETRACE_SERIES_ORDER_CAP", cap)
            .output()
            .unwrap()
    };
    assert_eq!(run("6").status.code(), Some(0));
    assert_eq!(run("5").status.code(), Some(1));
    assert_eq!(run("lots").status.code(), Some(2));
}
