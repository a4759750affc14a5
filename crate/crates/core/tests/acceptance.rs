use std::process::ExitCode;

use affine_clusters::suite;

fn main() -> ExitCode {
    let mut failed = Vec::new();
    for id in 1..=10 {
        let o = suite::run(id);
        println!("{}", o.line());
        if !o.passed {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 10 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing criteria {failed:?}");
        ExitCode::FAILURE
    }
}
