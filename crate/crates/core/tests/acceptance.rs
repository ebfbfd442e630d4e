//! Acceptance criteria 1-9, one line per criterion, oracle checks included.
//! Exits non-zero if any criterion fails.

use std::process::ExitCode;

use squeeze_net::verify::{self, CheckResult, Status};

fn main() -> ExitCode {
    let mut results: Vec<CheckResult> = vec![
        verify::criterion_1(),
        verify::criterion_2(),
        verify::criterion_3(),
        verify::criterion_4(),
        verify::criterion_5(),
        verify::criterion_6(true),
    ];
    results.extend(verify::criterion_7(true));
    results.push(verify::criterion_8());
    results.push(verify::criterion_9());

    println!("acceptance: {} checks", results.len());
    for r in &results {
        println!("{r}");
    }
    let failed: Vec<&str> = results
        .iter()
        .filter(|r| r.status == Status::Fail)
        .map(|r| r.id.as_str())
        .collect();
    if failed.is_empty() {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing criteria {}", failed.join(", "));
        ExitCode::FAILURE
    }
}
