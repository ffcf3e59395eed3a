// Under the depolarizing channel every component shrinks by the same
// factor, so the ordering of the moduli never changes: no discord kinks,
// and the curve ends at p = 1 − √(1/1.62).

use qcorr::dynamics::{d_vs_e_curve, run_trajectory, DEFAULT_SAMPLES};
use qcorr::report::relation_rows;
use qcorr::{ChannelKind, CorrelationVector, Norm};

pub fn run_example() -> qcorr::Result<()> {
    let r0 = CorrelationVector::new(0.65, 0.59, -0.38)?;
    let traj = run_trajectory(ChannelKind::Depolarizing, &r0, 1.0, DEFAULT_SAMPLES)?;
    println!("expected sudden death {:.8}", 1.0 - (1.0f64 / 1.62).sqrt());
    for norm in [Norm::HilbertSchmidt, Norm::Trace] {
        let curve = d_vs_e_curve(&traj, norm)?;
        let rows = relation_rows(&traj, norm)?;
        let worst = rows.iter().map(|r| (r.discord - r.discord_relation).abs()).fold(0.0, f64::max);
        let (first, last) = (curve.points[0], curve.points[curve.points.len() - 1]);
        println!(
            "{norm}: {} kinks, sudden death {:.8}, (E, D) from ({:.6}, {:.6}) to ({:.1}, {:.6}), max |D - D(E)| = {worst:.1e}",
            curve.kinks.len(),
            curve.sudden_death.unwrap_or(f64::NAN),
            first.entanglement,
            first.discord,
            last.entanglement,
            last.discord,
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> qcorr::Result<()> {
    run_example()
}
