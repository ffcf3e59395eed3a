// A non-Bell-diagonal X state under phase damping: populations stay put,
// coherences decay, and the concurrence dies at a finite parameter.

use qcorr::dynamics::run_x_trajectory;
use qcorr::linalg::C64;
use qcorr::{ChannelKind, XState};

pub fn run_example() -> qcorr::Result<()> {
    let x0 = XState::new([0.4, 0.1, 0.15, 0.35], C64::new(0.25, 0.1), C64::new(0.1, 0.06))?;
    let traj = run_x_trajectory(ChannelKind::PhaseDamping, &x0, 1.0, 201)?;
    for s in traj.samples.iter().step_by(20) {
        println!(
            "p = {:.2}  |e| = {:.4}  |f| = {:.4}  C = {:.5}",
            s.p,
            s.state.e().norm(),
            s.state.f().norm(),
            s.concurrence
        );
    }
    println!("sudden death at {:?}", traj.sudden_death);
    Ok(())
}

#[allow(dead_code)]
fn main() -> qcorr::Result<()> {
    run_example()
}
