// Discord against entanglement under phase damping for the state
// (0.65, 0.59, −0.38): two trace-norm kinks, one Hilbert-Schmidt kink, and
// a common sudden death at 1 − 1/√2.

use qcorr::dynamics::{d_vs_e_curve, run_trajectory, DEFAULT_SAMPLES};
use qcorr::relations::{critical_times, RelationCase};
use qcorr::report::relation_rows;
use qcorr::{ChannelKind, CorrelationVector, Norm};

pub fn run_example() -> qcorr::Result<()> {
    let r0 = CorrelationVector::new(0.65, 0.59, -0.38)?;
    let traj = run_trajectory(ChannelKind::PhaseDamping, &r0, 1.0, DEFAULT_SAMPLES)?;

    for norm in [Norm::HilbertSchmidt, Norm::Trace] {
        let analytic = critical_times(&RelationCase::new(ChannelKind::PhaseDamping, norm, r0))?;
        let curve = d_vs_e_curve(&traj, norm)?;
        println!("{norm}: kinks detected {:?}", curve.kinks);
        println!("{norm}: kinks analytic {:?}", analytic.sudden_changes);
        println!("{norm}: sudden death {:?} (analytic {:?})", curve.sudden_death, analytic.sudden_death);

        let rows = relation_rows(&traj, norm)?;
        let worst = rows.iter().map(|r| (r.discord - r.discord_relation).abs()).fold(0.0, f64::max);
        println!("{norm}: {} samples, max |D - D(E)| = {worst:.1e}", rows.len());
        for row in rows.iter().step_by(50) {
            println!("  p = {:.3}  E = {:.5}  D = {:.5}  {}", row.p, row.entanglement, row.discord, row.branch);
        }
        println!();
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> qcorr::Result<()> {
    run_example()
}
