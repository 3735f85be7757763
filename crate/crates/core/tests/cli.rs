use std::process::{Command, Output};

fn ulrich(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ulrich")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_verdicts_and_exit_codes() {
    let o = ulrich(&["check", "5|3,-1,-2,-4|-5"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("ULRICH"), "{s}");
    assert!(s.contains("N=9"));
    assert_eq!(s.lines().filter(|l| l.trim_start().starts_with("t=")).count(), 9);

    let o = ulrich(&["check", "3|1|-2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("non-integral"));

    let o = ulrich(&["check", "1,2|0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("decreasing"));
}

#[test]
fn check_json_has_schema() {
    let o = ulrich(&["--json", "check", "2|1|-2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["ulrich"], true);
    assert_eq!(v["schedule"].as_array().unwrap().len(), 3);
}

#[test]
fn diagrams() {
    let s = stdout(&ulrich(&["diagram", "2|1|-2"]));
    assert_eq!(s.lines().count(), 5);
    assert_eq!(s.matches("[x]").count(), 3);

    let s = stdout(&ulrich(&["diagram", "7|2,1,0|-1,-9"]));
    assert_eq!(s.lines().count(), 13);

    let s = stdout(&ulrich(&["diagram", "17,1|0|-3,-7,-9,-11,-15", "--svg"]));
    assert_eq!(s.matches(r#"<g class="row""#).count(), 19);

    let o = ulrich(&["diagram", "2|1|-2", "--velocities", "2,0,-2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = ulrich(&["diagram", "2|1|-2", "--velocities", "2,1,0"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn enumerate_records() {
    let o = ulrich(&["enumerate", "--type", "1,3,1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(s.lines().count(), 8);
    for line in s.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["type"], serde_json::json!([1, 3, 1]));
        assert_eq!(v["canonical"], true);
        assert_eq!(v["n_dim"], 7);
        assert_eq!(v["schema"], 1);
    }

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.jsonl");
    let o = ulrich(&["enumerate", "--type", "2,2,2", "--records", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let recs = ulrich_core::search::read_records(std::io::BufReader::new(
        std::fs::File::open(&path).unwrap(),
    ))
    .unwrap();
    assert_eq!(recs.len(), 2);

    let o = ulrich(&["enumerate", "--type", "2,6,2", "--max-nodes", "5"]);
    assert_eq!(o.status.code(), Some(3));
    let o = ulrich(&["enumerate", "--type", "1,0,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn families() {
    let o = ulrich(&["family", "--name", "elongated", "--params", "1,2"]);
    assert_eq!(stdout(&o).trim(), "12,8|7,6,1,-4,-5|-8");
    let o = ulrich(&["family", "--name", "p-u", "--params", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let plain = stdout(&o);
    let o = ulrich(&["family", "--name", "p-u", "--params", "2", "--mirror"]);
    let mirrored: ulrich_core::BlockedPartition = stdout(&o).trim().parse().unwrap();
    let p: ulrich_core::BlockedPartition = plain.trim().parse().unwrap();
    assert_eq!(mirrored, p.symmetric());
    let o = ulrich(&["family", "--name", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&ulrich(&["family", "--list"])).contains("p-u"));
}

#[test]
fn verify_suites() {
    let o = ulrich(&["verify", "--suite", "conjecture", "--max-sum", "9"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS (0 found"));

    let o = ulrich(&["verify", "--suite", "conjecture", "--max-sum", "11"]);
    assert_eq!(o.status.code(), Some(2), "needs --long-run");

    let dir = tempfile::tempdir().unwrap();
    let ck = dir.path().join("ck.jsonl");
    let man = dir.path().join("manifest.json");
    let args = [
        "verify",
        "--suite",
        "multistep",
        "--max-length",
        "6",
        "--checkpoint",
        ck.to_str().unwrap(),
        "--manifest",
        man.to_str().unwrap(),
    ];
    assert_eq!(ulrich(&args).status.code(), Some(0));
    let again = stdout(&ulrich(&args));
    assert!(again.contains("resumed"));
    let m: serde_json::Value = serde_json::from_slice(&std::fs::read(&man).unwrap()).unwrap();
    assert_eq!(m["schema"], 1);
    assert_eq!(m["types"].as_array().unwrap().len(), 1 + 5 + 16);
    assert!(m["git_describe"].is_string());
}

#[test]
fn analyze() {
    let o = ulrich(&["analyze", "7|2,1,0|-1,-9"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("greedy word"));
    let o = ulrich(&["--json", "analyze", "6,2|1|-2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["sumset"]["kind"], "decomposed");
    let o = ulrich(&["analyze", "10,4|3,0|-2"]);
    assert_eq!(o.status.code(), Some(1));
    let o = ulrich(&["analyze", "1|0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn geometry() {
    let s = stdout(&ulrich(&["geometry", "degree", "--flag", "1,5:6", "--weights", "1,1"]));
    assert!(s.contains("degree = 252"), "{s}");
    let s = stdout(&ulrich(&["geometry", "rank", "--lambda", "6|5,2,2,1|1"]));
    assert!(s.contains("rank = 70"));
    let s = stdout(&ulrich(&["geometry", "h0", "--lambda", "6|5,2,2,1|1"]));
    assert!(s.contains("h0 = 17640"));
    let s = stdout(&ulrich(&["geometry", "dimension", "--flag", "1,5:6"]));
    assert!(s.contains("dimension = 9"));
    let o = ulrich(&["--json", "geometry", "cohomology", "--lambda", "6|5,2,2,1|1", "--twist", "3"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["cohomology"]["kind"], "vanishes");
    let o = ulrich(&["geometry", "ulrich-check", "--lambda", "6|5,2,2,1|1"]);
    assert_eq!(o.status.code(), Some(0));
    let o = ulrich(&["geometry", "ulrich-check", "--lambda", "0|0|0"]);
    assert_eq!(o.status.code(), Some(1));
    let o = ulrich(&["geometry", "rank", "--flag", "1,5:6"]);
    assert_eq!(o.status.code(), Some(2));
    let o = ulrich(&["geometry", "rank", "--flag", "1,2:6", "--lambda", "6|5,2,2,1|1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn diagram_boxes_agree_with_check() {
    for p in ["5|3,-1,-2,-4|-5", "10,4|3,0|-2", "4|3,0|-2,-8", "8,6|5,0|-2", "3|1|-2"] {
        let d: serde_json::Value =
            serde_json::from_slice(&ulrich(&["--json", "diagram", p]).stdout).unwrap();
        let n = d["dimension"].as_u64().unwrap();
        let singly = d["rows"]
            .as_array()
            .unwrap()
            .iter()
            .filter(|r| {
                let t = r["t"].as_u64().unwrap();
                let boxes = r["cells"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .filter(|c| c["blocks"].as_array().unwrap().len() > 1)
                    .count();
                (1..=n).contains(&t) && boxes == 1
            })
            .count() as u64;
        let ulrich_ok = ulrich(&["check", p]).status.code() == Some(0);
        assert_eq!(singly == n, ulrich_ok, "{p}");
    }
}
