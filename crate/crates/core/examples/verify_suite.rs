// A reduced run of the oracle suite, printed as the JSON report.

use qcorr::verify::{run, VerifyConfig};

pub fn run_example() -> qcorr::Result<()> {
    let report = run(&VerifyConfig { grid: 5, x_states: 10, ..VerifyConfig::default() })?;
    for check in &report.checks {
        println!(
            "{:<28} max deviation {:.2e} (tolerance {:.0e}) over {} states: {}",
            check.measure,
            check.max_abs_deviation,
            check.tolerance,
            check.states,
            if check.passed { "ok" } else { "FAILED" },
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> qcorr::Result<()> {
    run_example()
}
