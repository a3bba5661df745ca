use std::path::Path;
use std::process::{Command, Output};

fn evenspan(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_evenspan"));
    cmd.args(args);
    match stdin {
        None => cmd.output().unwrap(),
        Some(text) => {
            use std::io::Write;
            use std::process::Stdio;
            let mut child = cmd
                .stdin(Stdio::piped())
                .stdout(Stdio::piped())
                .stderr(Stdio::piped())
                .spawn()
                .unwrap();
            child
                .stdin
                .take()
                .unwrap()
                .write_all(text.as_bytes())
                .unwrap();
            child.wait_with_output().unwrap()
        }
    }
}

fn stdout(o: &Output) -> &str {
    std::str::from_utf8(&o.stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn c4_certificate() {
    let o = evenspan(
        &["solve", "--input", "-", "--w", "0", "--lambda", "0"],
        Some("4 4\n0 1\n1 2\n2 3\n3 0\n"),
    );
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o), "{\"status\":\"no_solution\",\"reason\":\"regular_bipartite\",\"r\":2,\"coloring\":[0,1,0,1]}\n");
    assert!(o.stderr.is_empty());
}

#[test]
fn k4_solve_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    for w in 0..4 {
        for lambda in ["0", "1"] {
            let w = w.to_string();
            let o = evenspan(
                &["solve", "--input", &graph, "--w", &w, "--lambda", lambda],
                None,
            );
            assert_eq!(o.status.code(), Some(0));
            let tree = write(dir.path(), "tree.json", stdout(&o));
            let v = evenspan(&["verify", "--input", &graph, "--tree", &tree], None);
            assert_eq!(v.status.code(), Some(0), "{}", stdout(&v));
        }
    }
}

#[test]
fn gen_round_trips_through_solve() {
    let dir = tempfile::tempdir().unwrap();
    let gen = [
        "gen",
        "--gen",
        "bridged_chain",
        "--n",
        "40",
        "--blocks",
        "4",
        "--seed",
        "5",
    ];
    let a = evenspan(&gen, None);
    let b = evenspan(&gen, None);
    assert_eq!(a.stdout, b.stdout);
    let graph = write(dir.path(), "g.json", stdout(&a));
    let from_file = evenspan(
        &["solve", "--input", &graph, "--w", "3", "--lambda", "1"],
        None,
    );
    let inline = evenspan(
        &[
            "solve",
            "--gen",
            "bridged_chain",
            "--n",
            "40",
            "--blocks",
            "4",
            "--seed",
            "5",
            "--w",
            "3",
            "--lambda",
            "1",
        ],
        None,
    );
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(from_file.stdout, inline.stdout);
    let edgelist = evenspan(&["gen", "--input", &graph, "--format", "edgelist"], None);
    let reparsed = write(dir.path(), "g.txt", stdout(&edgelist));
    let back = evenspan(&["gen", "--input", &reparsed], None);
    assert_eq!(back.stdout, a.stdout);
}

#[test]
fn output_formats() {
    let base = [
        "solve", "--gen", "theta", "--n", "8", "--seed", "2", "--w", "0", "--lambda", "0",
        "--format",
    ];
    let dot = evenspan(&[&base[..], &["dot"]].concat(), None);
    assert!(stdout(&dot).starts_with("graph evenspan {"));
    assert!(stdout(&dot).contains("style=bold"));
    let list = evenspan(&[&base[..], &["edgelist"]].concat(), None);
    assert!(stdout(&list).starts_with("8 7\n"));
    assert_eq!(stdout(&list).lines().count(), 8);
}

#[test]
fn error_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let disconnected = write(dir.path(), "d.txt", "4 2\n0 1\n2 3\n");
    let o = evenspan(
        &[
            "solve",
            "--input",
            &disconnected,
            "--w",
            "0",
            "--lambda",
            "0",
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(3));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error: "));
    let o = evenspan(
        &["solve", "--input", "-", "--w", "0", "--lambda", "0"],
        Some("garbage"),
    );
    assert_eq!(o.status.code(), Some(3));
    let o = evenspan(
        &["gen", "--gen", "random_regular", "--n", "5", "--r", "3"],
        None,
    );
    assert_eq!(o.status.code(), Some(3));
    let bad_tree = write(
        dir.path(),
        "t.json",
        "{\"edges\":[[0,1]],\"types\":[0,1],\"w\":0,\"lambda\":0}",
    );
    let graph = write(dir.path(), "g.txt", "2 2\n0 1\n0 1\n");
    assert_eq!(
        evenspan(&["verify", "--input", &graph, "--tree", &bad_tree], None)
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn verify_reports_first_violation() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let tree = write(
        dir.path(),
        "t.json",
        "{\"edges\":[[0,1],[1,2],[2,3]],\"types\":[0,1,0,1],\"w\":0,\"lambda\":0}",
    );
    let o = evenspan(&["verify", "--input", &graph, "--tree", &tree], None);
    assert_eq!(o.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(stdout(&o)).unwrap();
    assert_eq!(report["passed"], false);
    assert_eq!(report["first_violation"]["condition"], "weakly_even");
    let unknown = write(
        dir.path(),
        "u.json",
        "{\"edges\":[[0,0]],\"types\":[0,1,0,1],\"w\":0,\"lambda\":0}",
    );
    assert_eq!(
        evenspan(&["verify", "--input", &graph, "--tree", &unknown], None)
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn oracle_and_bench() {
    let o = evenspan(
        &[
            "oracle",
            "--gen",
            "random_connected",
            "--n",
            "6",
            "--m",
            "8",
            "--seed",
            "1",
            "--w",
            "0",
            "--lambda",
            "1",
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    let verdict: serde_json::Value = serde_json::from_str(stdout(&o)).unwrap();
    assert_eq!(verdict["exists"], true);
    let b = evenspan(
        &["bench", "--sizes", "50", "--reps", "2", "--jobs", "2"],
        None,
    );
    assert_eq!(b.status.code(), Some(0));
    let text = stdout(&b);
    assert!(text.lines().next().unwrap().starts_with("kind"));
    assert_eq!(text.lines().count(), 3);
}

#[test]
fn verbose_logs_go_to_stderr() {
    let o = evenspan(
        &[
            "-vv", "solve", "--gen", "theta", "--n", "9", "--w", "0", "--lambda", "0",
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("graph: 9 vertices"));
    assert!(stdout(&o).starts_with("{\"edges\":"));
}
