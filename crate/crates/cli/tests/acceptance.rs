//! Runs the acceptance suite through the binary, twice, and prints one
//! line per criterion. Criterion 10 requires the two reports to be
//! byte-identical.

use std::process::Command;

use serde_json::Value;

fn run() -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_coalglab"))
        .args(["acceptance", "--format", "json"])
        .env_remove("COALGLAB_BUDGET")
        .output()
        .expect("binary runs");
    if !out.stderr.is_empty() {
        eprint!("{}", String::from_utf8_lossy(&out.stderr));
    }
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn main() {
    let (code, first) = run();
    let (_, second) = run();
    let report: Value = serde_json::from_slice(&first).expect("report is JSON");
    let criteria = report["criteria"].as_array().expect("criteria array");
    let mut failed = 0;
    for c in criteria {
        let id = c["id"].as_u64().unwrap();
        let mut passed = c["passed"].as_bool().unwrap();
        if id == 10 {
            passed &= first == second;
        }
        if !passed {
            failed += 1;
        }
        println!(
            "criterion {id}: {} ({})",
            if passed { "PASS" } else { "FAIL" },
            c["summary"].as_str().unwrap_or("")
        );
        if !passed {
            for d in c["details"].as_array().into_iter().flatten() {
                println!("    {}", d.as_str().unwrap_or(""));
            }
        }
    }
    if criteria.len() != 10 {
        println!("expected 10 criteria, report has {}", criteria.len());
        failed += 1;
    }
    if failed > 0 || code != 0 {
        println!("acceptance: {failed} criteria failed (exit code {code})");
        std::process::exit(1);
    }
    println!("acceptance: all 10 criteria passed");
}
