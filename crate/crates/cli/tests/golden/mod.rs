//! Golden CLI cases listed in `fixtures/cases.tsv`; expected stdout lives in
//! `fixtures/<name>.out`. Set `UPDATE_GOLDENS=1` to rewrite the outputs.
#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub struct Case {
    pub name: String,
    pub args: Vec<String>,
    pub status: i32,
}

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_distdom"))
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn cases() -> Vec<Case> {
    let dir = fixtures();
    let text = fs::read_to_string(dir.join("cases.tsv")).expect("case list");
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|line| {
            let cols: Vec<&str> = line.split('\t').collect();
            assert_eq!(cols.len(), 3, "malformed case line {line:?}");
            Case {
                name: cols[0].to_string(),
                args: cols[1]
                    .split_whitespace()
                    .map(|a| a.replace("FIXTURES", dir.to_str().unwrap()))
                    .collect(),
                status: cols[2].parse().expect("exit status"),
            }
        })
        .collect()
}

/// Runs one case; `Err` describes the first mismatch.
pub fn check(case: &Case) -> Result<(), String> {
    let args: Vec<&str> = case.args.iter().map(String::as_str).collect();
    let out = run(&args);
    let status = out.status.code().unwrap_or(-1);
    if status != case.status {
        return Err(format!(
            "{}: exit {status}, expected {}; stderr: {}",
            case.name,
            case.status,
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    let path = fixtures().join(format!("{}.out", case.name));
    if std::env::var_os("UPDATE_GOLDENS").is_some() {
        fs::write(&path, &out.stdout).unwrap();
        return Ok(());
    }
    let expected = fs::read(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected != out.stdout {
        return Err(format!(
            "{}: stdout differs\n--- expected\n{}--- actual\n{}",
            case.name,
            String::from_utf8_lossy(&expected),
            String::from_utf8_lossy(&out.stdout)
        ));
    }
    Ok(())
}
