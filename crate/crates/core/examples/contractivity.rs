// Distances between two states never grow under a channel. The phase flip
// is scanned only on [0, 1/2], where its contraction factor is monotone.

use qcorr::dynamics::{contractivity_scan, monotone_grid};
use qcorr::sampling::{random_correlation_vector, seeded_rng, DEFAULT_SEED};
use qcorr::ChannelKind;

pub fn run_example() -> qcorr::Result<()> {
    let mut rng = seeded_rng(DEFAULT_SEED);
    let pairs: Vec<_> =
        (0..20).map(|_| (random_correlation_vector(&mut rng), random_correlation_vector(&mut rng))).collect();
    for kind in ChannelKind::ALL {
        let grid = monotone_grid(kind, 41);
        let report = contractivity_scan(kind, &pairs, &grid)?;
        println!(
            "{kind:>5} on [{:.1}, {:.1}]: max step increase hs {:+.2e}, trace {:+.2e}, violations {}",
            grid[0],
            grid[grid.len() - 1],
            report.max_increase_hs,
            report.max_increase_trace,
            report.violations,
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> qcorr::Result<()> {
    run_example()
}
