mod golden;

use std::fs;

use golden::{cases, check, fixtures, run};

#[test]
fn golden_cases() {
    let failures: Vec<String> = cases().iter().filter_map(|c| check(c).err()).collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn help_and_version_exit_zero() {
    for args in [["--help"].as_slice(), &["--version"], &["verify", "--help"]] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert!(!out.stdout.is_empty());
    }
    assert_eq!(run(&[]).status.code(), Some(64));
}

#[test]
fn parse_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.edges");
    fs::write(&bad, "3\n0 1\n1 7\n").unwrap();
    let out = run(&["gamma", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn disconnected_input_is_a_domain_error() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("two.edges");
    fs::write(&g, "4\n0 1\n2 3\n").unwrap();
    let out = run(&["gamma", "--d", "1", "--p", "0", g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("connected"));
}

#[test]
fn verify_reports_identical_across_shards() {
    let cfg = fixtures().join("small.cfg");
    let dirs: Vec<_> = ["1", "8"]
        .iter()
        .map(|shards| {
            let dir = tempfile::tempdir().unwrap();
            let out = run(&[
                "verify",
                "--config",
                cfg.to_str().unwrap(),
                "--shards",
                shards,
                "--out",
                dir.path().to_str().unwrap(),
            ]);
            assert_eq!(out.status.code(), Some(0));
            dir
        })
        .collect();
    let names = |d: &tempfile::TempDir| {
        let mut v: Vec<_> = fs::read_dir(d.path())
            .unwrap()
            .map(|e| e.unwrap().file_name())
            .collect();
        v.sort();
        v
    };
    assert_eq!(names(&dirs[0]), names(&dirs[1]));
    assert_eq!(names(&dirs[0]).len(), 3);
    for name in names(&dirs[0]) {
        let a = fs::read(dirs[0].path().join(&name)).unwrap();
        let b = fs::read(dirs[1].path().join(&name)).unwrap();
        assert_eq!(a, b, "{name:?}");
    }
}

#[test]
fn conjecture_json_report() {
    let out = run(&["conjecture", "--d", "2", "--n-max", "6", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["check"], "conjecture");
    assert_eq!(v["controls"][0]["confirmed"], true);
}

#[test]
fn enumerate_shard_flag() {
    let whole = run(&["enumerate", "--kind", "trees", "--n", "9"]);
    let mut joined: Vec<String> = (0..3)
        .flat_map(|i| {
            let spec = format!("{i}/3");
            let out = run(&["enumerate", "--kind", "trees", "--n", "9", "--shard", &spec]);
            String::from_utf8(out.stdout)
                .unwrap()
                .lines()
                .map(str::to_owned)
                .collect::<Vec<_>>()
        })
        .collect();
    joined.sort();
    let expected: Vec<String> = String::from_utf8(whole.stdout)
        .unwrap()
        .lines()
        .map(str::to_owned)
        .collect();
    assert_eq!(joined, expected);
    assert_eq!(expected.len(), 47);
    assert_eq!(
        run(&["enumerate", "--kind", "trees", "--n", "9", "--shard", "3/3"])
            .status
            .code(),
        Some(64)
    );
}
