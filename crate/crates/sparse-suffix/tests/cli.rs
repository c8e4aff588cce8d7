//! End-to-end tests of the command-line interface: formats, exit codes,
//! error messages, and determinism.

use std::fs;
use std::path::{Path, PathBuf};

use sparse_suffix::cli::run_with_io;

struct Run {
    code: i32,
    stdout: Vec<u8>,
    stderr: Vec<u8>,
}

fn cli(args: &[&str]) -> Run {
    let mut argv = vec!["sparse-suffix"];
    argv.extend_from_slice(args);
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let code = run_with_io(argv, &mut stdout, &mut stderr);
    Run {
        code,
        stdout,
        stderr,
    }
}

fn write_file(dir: &Path, name: &str, contents: &[u8]) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

#[test]
fn build_sa_text_format() {
    let dir = tempfile::tempdir().unwrap();
    let text = write_file(dir.path(), "banana.txt", b"banana");
    let run = cli(&[
        "build-sa",
        "--text",
        text.to_str().unwrap(),
        "--positions",
        "1,3,5",
    ]);
    assert_eq!(
        run.code,
        0,
        "stderr: {}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(run.stdout, b"1 -\n5 0\n3 2\n");
}

#[test]
fn build_sa_csv_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let text = write_file(dir.path(), "banana.txt", b"banana");
    let run = cli(&[
        "build-sa",
        "--text",
        text.to_str().unwrap(),
        "--positions",
        "1,3,5",
        "--format",
        "csv",
    ]);
    assert_eq!(run.code, 0);
    assert_eq!(run.stdout, b"rank,pos,lcp_prev\n0,1,\n1,5,0\n2,3,2\n");

    let run = cli(&[
        "build-sa",
        "--text",
        text.to_str().unwrap(),
        "--positions",
        "1,3,5",
        "--format",
        "json",
    ]);
    assert_eq!(run.code, 0);
    let v: serde_json::Value = serde_json::from_slice(&run.stdout).unwrap();
    assert_eq!(v["sa"], serde_json::json!([1, 5, 3]));
    assert_eq!(v["adj_lcp"], serde_json::json!([0, 2]));
    assert_eq!(v["n"], 6);
}

#[test]
fn build_sa_empty_positions() {
    let dir = tempfile::tempdir().unwrap();
    let text = write_file(dir.path(), "banana.txt", b"banana");
    let run = cli(&[
        "build-sa",
        "--text",
        text.to_str().unwrap(),
        "--positions",
        "",
    ]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.is_empty());
}

#[test]
fn build_sa_position_out_of_range() {
    let dir = tempfile::tempdir().unwrap();
    let text = write_file(dir.path(), "banana.txt", b"banana");
    let run = cli(&[
        "build-sa",
        "--text",
        text.to_str().unwrap(),
        "--positions",
        "1,7",
    ]);
    assert_eq!(run.code, 1);
    let msg = String::from_utf8_lossy(&run.stderr);
    assert!(msg.contains("position 7 out of range [1,6]"), "got: {msg}");
}

#[test]
fn build_sa_duplicate_position_names_line() {
    let dir = tempfile::tempdir().unwrap();
    let text = write_file(dir.path(), "banana.txt", b"banana");
    let positions = write_file(dir.path(), "positions.txt", b"1\n3\n3\n");
    let run = cli(&[
        "build-sa",
        "--text",
        text.to_str().unwrap(),
        "--positions",
        positions.to_str().unwrap(),
    ]);
    assert_eq!(run.code, 1);
    let msg = String::from_utf8_lossy(&run.stderr);
    assert!(msg.contains("positions line 3"), "got: {msg}");
    assert!(msg.contains("duplicate position 3"), "got: {msg}");
}

#[test]
fn build_sa_zero_based() {
    let dir = tempfile::tempdir().unwrap();
    let text = write_file(dir.path(), "banana.txt", b"banana");
    let run = cli(&[
        "build-sa",
        "--text",
        text.to_str().unwrap(),
        "--positions",
        "0,2,4",
        "--zero-based",
    ]);
    assert_eq!(run.code, 0);
    assert_eq!(run.stdout, b"0 -\n4 0\n2 2\n");

    // out of range reports the external convention
    let run = cli(&[
        "build-sa",
        "--text",
        text.to_str().unwrap(),
        "--positions",
        "6",
        "--zero-based",
    ]);
    assert_eq!(run.code, 1);
    assert!(String::from_utf8_lossy(&run.stderr).contains("position 6 out of range [0,5]"));
}

#[test]
fn build_sa_missing_text_file_is_io_error() {
    let run = cli(&[
        "build-sa",
        "--text",
        "/nonexistent/book.txt",
        "--positions",
        "1",
    ]);
    assert_eq!(run.code, 2);
}

#[test]
fn build_sa_random_positions_spec() {
    let dir = tempfile::tempdir().unwrap();
    let text = write_file(dir.path(), "text.txt", &vec![b'x'; 1000]);
    let a = cli(&[
        "build-sa",
        "--text",
        text.to_str().unwrap(),
        "--positions",
        "random:20",
        "--seed",
        "5",
    ]);
    assert_eq!(a.code, 0);
    assert_eq!(
        a.stdout
            .split(|&b| b == b'\n')
            .filter(|l| !l.is_empty())
            .count(),
        20
    );
}

#[test]
fn build_tree_json_structure() {
    let dir = tempfile::tempdir().unwrap();
    let text = write_file(dir.path(), "banana.txt", b"banana");
    let run = cli(&[
        "build-tree",
        "--text",
        text.to_str().unwrap(),
        "--positions",
        "1,3,5",
        "--format",
        "json",
    ]);
    assert_eq!(run.code, 0);
    let v: serde_json::Value = serde_json::from_slice(&run.stdout).unwrap();
    assert_eq!(v["b"], 3);
    let root = &v["root"];
    assert_eq!(root["length"], 0);
    let children = root["children"].as_array().unwrap();
    assert_eq!(children.len(), 2);
    // leaf 1 under the first edge; internal length-2 node with leaves 5, 3
    assert_eq!(children[0]["child"]["leaf_pos"], 1);
    let mid = &children[1]["child"];
    assert_eq!(mid["length"], 2);
    let grandchildren = mid["children"].as_array().unwrap();
    assert_eq!(grandchildren[0]["child"]["leaf_pos"], 5);
    assert_eq!(grandchildren[1]["child"]["leaf_pos"], 3);
}

#[test]
fn build_tree_dot_has_all_leaves() {
    let dir = tempfile::tempdir().unwrap();
    let text = write_file(dir.path(), "banana.txt", b"banana");
    let run = cli(&[
        "build-tree",
        "--text",
        text.to_str().unwrap(),
        "--positions",
        "1,3,5",
        "--format",
        "dot",
    ]);
    assert_eq!(run.code, 0);
    let dot = String::from_utf8(run.stdout).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("shape=box").count(), 3);
}

#[test]
fn build_tree_single_position() {
    let dir = tempfile::tempdir().unwrap();
    let text = write_file(dir.path(), "banana.txt", b"banana");
    let run = cli(&[
        "build-tree",
        "--text",
        text.to_str().unwrap(),
        "--positions",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(run.code, 0);
    let v: serde_json::Value = serde_json::from_slice(&run.stdout).unwrap();
    assert_eq!(v["root"]["children"].as_array().unwrap().len(), 1);
}

#[test]
fn lcp_command() {
    let dir = tempfile::tempdir().unwrap();
    let text = write_file(dir.path(), "banana.txt", b"banana");
    let pairs = write_file(dir.path(), "pairs.txt", b"2 4\n1 1\n");
    let run = cli(&[
        "lcp",
        "--text",
        text.to_str().unwrap(),
        "--pairs",
        pairs.to_str().unwrap(),
    ]);
    assert_eq!(run.code, 0);
    assert_eq!(run.stdout, b"3\n6\n");

    let text = write_file(dir.path(), "mississippi.txt", b"mississippi");
    let pairs = write_file(dir.path(), "pairs2.txt", b"2 5\n");
    let run = cli(&[
        "lcp",
        "--text",
        text.to_str().unwrap(),
        "--pairs",
        pairs.to_str().unwrap(),
    ]);
    assert_eq!(run.code, 0);
    assert_eq!(run.stdout, b"4\n");
}

#[test]
fn lcp_malformed_line_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let text = write_file(dir.path(), "banana.txt", b"banana");
    let pairs = write_file(dir.path(), "pairs.txt", b"2 4\n3 x\n");
    let run = cli(&[
        "lcp",
        "--text",
        text.to_str().unwrap(),
        "--pairs",
        pairs.to_str().unwrap(),
    ]);
    assert_eq!(run.code, 1);
    assert!(String::from_utf8_lossy(&run.stderr).contains("pairs line 2"));
}

#[test]
fn verify_agrees_on_desk_input() {
    let dir = tempfile::tempdir().unwrap();
    let text = write_file(dir.path(), "text.txt", b"abracadabra abracadabra");
    let pairs = write_file(dir.path(), "pairs.txt", b"1 13\n2 4\n5 5\n");
    let run = cli(&[
        "verify",
        "--text",
        text.to_str().unwrap(),
        "--positions",
        "1,2,3,5,8,13,21",
        "--pairs",
        pairs.to_str().unwrap(),
    ]);
    assert_eq!(
        run.code,
        0,
        "stderr: {}",
        String::from_utf8_lossy(&run.stderr)
    );
    let report = String::from_utf8(run.stdout).unwrap();
    assert!(report.contains("ok: 3 pairs match the oracle"));
    assert!(report.contains("ok: suffix array of 7 positions"));
    assert!(report.contains("ok: suffix tree with 7 leaves"));
}

#[test]
fn verify_tiny_prime_reports_divergence() {
    // with p = 3 and sigma = 256 (256 = 1 mod 3), a fingerprint is the byte
    // sum mod 3, so the length-8 probe at (1, 9) collides and the reported
    // LCP comes out wrong; the pair really differs at the first character
    let dir = tempfile::tempdir().unwrap();
    let text = write_file(dir.path(), "text.txt", b"abxxxxxxbaxxxxxx");
    let pairs = write_file(dir.path(), "pairs.txt", b"1 9\n1 1\n2 2\n3 3\n");
    let run = cli(&[
        "verify",
        "--text",
        text.to_str().unwrap(),
        "--pairs",
        pairs.to_str().unwrap(),
        "--debug-tiny-prime",
    ]);
    assert_eq!(
        run.code,
        3,
        "stdout: {}",
        String::from_utf8_lossy(&run.stdout)
    );
    assert!(String::from_utf8_lossy(&run.stdout).contains("divergence at pair 0"));
}

#[test]
fn verify_oracle_guard_refuses_big_instances() {
    let dir = tempfile::tempdir().unwrap();
    let text = write_file(dir.path(), "big.txt", &vec![b'a'; 200_001]);
    let run = cli(&[
        "verify",
        "--text",
        text.to_str().unwrap(),
        "--positions",
        "random:501",
    ]);
    assert_eq!(run.code, 1);
    assert!(String::from_utf8_lossy(&run.stderr).contains("oracle refused"));
}

#[test]
fn verify_needs_something_to_check() {
    let dir = tempfile::tempdir().unwrap();
    let text = write_file(dir.path(), "text.txt", b"abc");
    let run = cli(&["verify", "--text", text.to_str().unwrap()]);
    assert_eq!(run.code, 1);
}

#[test]
fn bench_grid_shape_and_space() {
    let run = cli(&[
        "bench",
        "--grid-n",
        "1024,2048",
        "--grid-b",
        "64",
        "--grid-alpha",
        "2",
    ]);
    assert_eq!(
        run.code,
        0,
        "stderr: {}",
        String::from_utf8_lossy(&run.stderr)
    );
    let csv = String::from_utf8(run.stdout).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "n,b,alpha,rounds,wall_ms,peak_aux_words");
    assert_eq!(lines.len(), 3);
    // peak words stay within 5% while n doubles
    let peak = |line: &str| line.split(',').nth(5).unwrap().parse::<f64>().unwrap();
    let (a, b) = (peak(lines[1]), peak(lines[2]));
    assert!((a - b).abs() / a.min(b) < 0.05, "peaks {a} vs {b}");
}

#[test]
fn bench_alpha_cuts_rounds() {
    let run = cli(&[
        "bench",
        "--grid-n",
        "4096",
        "--grid-b",
        "64",
        "--grid-alpha",
        "2,16",
    ]);
    assert_eq!(run.code, 0);
    let csv = String::from_utf8(run.stdout).unwrap();
    let rounds: Vec<usize> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(3).unwrap().parse().unwrap())
        .collect();
    assert!(
        rounds[1] < rounds[0],
        "alpha=16 should need fewer rounds: {rounds:?}"
    );
}

#[test]
fn bench_singleton_runs_no_rounds() {
    let run = cli(&[
        "bench",
        "--grid-n",
        "1024",
        "--grid-b",
        "1",
        "--grid-alpha",
        "2",
    ]);
    assert_eq!(run.code, 0);
    let csv = String::from_utf8(run.stdout).unwrap();
    let row = csv.lines().nth(1).unwrap();
    assert_eq!(row.split(',').nth(3).unwrap(), "0");
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let text = write_file(dir.path(), "banana.txt", b"banana");
    let out = dir.path().join("sa.txt");
    let run = cli(&[
        "build-sa",
        "--text",
        text.to_str().unwrap(),
        "--positions",
        "1,3,5",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.is_empty());
    assert_eq!(fs::read(&out).unwrap(), b"1 -\n5 0\n3 2\n");
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let text = write_file(
        dir.path(),
        "text.txt",
        b"the quick brown fox jumps over the lazy dog",
    );
    let pairs = write_file(dir.path(), "pairs.txt", b"1 5\n2 2\n7 40\n");

    for args in [
        vec!["build-sa", "--positions", "random:12", "--seed", "3"],
        vec![
            "build-tree",
            "--positions",
            "1,5,11,17,29",
            "--format",
            "json",
        ],
        vec!["lcp", "--pairs", "PAIRS"],
        vec!["verify", "--positions", "1,2,3", "--pairs", "PAIRS"],
    ] {
        let mut full = vec![args[0], "--text", text.to_str().unwrap()];
        for a in &args[1..] {
            full.push(if *a == "PAIRS" {
                pairs.to_str().unwrap()
            } else {
                a
            });
        }
        let first = cli(&full);
        let second = cli(&full);
        assert_eq!(
            first.code,
            0,
            "{args:?}: {}",
            String::from_utf8_lossy(&first.stderr)
        );
        assert_eq!(
            first.stdout, second.stdout,
            "nondeterministic output for {args:?}"
        );
    }

    // bench is deterministic in every column except wall time
    let bench_args = [
        "bench", "--grid-n", "512,1024", "--grid-b", "16", "--seed", "9",
    ];
    let strip_wall = |raw: &[u8]| -> Vec<String> {
        String::from_utf8(raw.to_vec())
            .unwrap()
            .lines()
            .map(|l| {
                let mut cols: Vec<&str> = l.split(',').collect();
                if cols.len() == 6 {
                    cols.remove(4);
                }
                cols.join(",")
            })
            .collect()
    };
    let first = cli(&bench_args);
    let second = cli(&bench_args);
    assert_eq!(first.code, 0);
    assert_eq!(strip_wall(&first.stdout), strip_wall(&second.stdout));
}

#[test]
fn help_and_bad_flags() {
    let run = cli(&["--help"]);
    assert_eq!(run.code, 0);
    assert!(String::from_utf8_lossy(&run.stdout).contains("build-sa"));

    let run = cli(&["build-sa", "--no-such-flag"]);
    assert_eq!(run.code, 1);
}

#[test]
fn alpha_and_reps_validation() {
    let dir = tempfile::tempdir().unwrap();
    let text = write_file(dir.path(), "t.txt", b"banana");
    let run = cli(&[
        "build-sa",
        "--text",
        text.to_str().unwrap(),
        "--positions",
        "1",
        "--alpha",
        "1",
    ]);
    assert_eq!(run.code, 1);
    let run = cli(&[
        "build-sa",
        "--text",
        text.to_str().unwrap(),
        "--positions",
        "1",
        "--reps",
        "0",
    ]);
    assert_eq!(run.code, 1);
}
