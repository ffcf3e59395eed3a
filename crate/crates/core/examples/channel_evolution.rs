// Each channel scales a subset of the correlation components. The closed
// form is compared with the Kraus maps applied to the density matrix.

use qcorr::channels::{evolved_vector, kraus_for};
use qcorr::states::{bd_to_density, density_to_bd};
use qcorr::{ChannelKind, CorrelationVector};

pub fn run_example() -> qcorr::Result<()> {
    let r0 = CorrelationVector::new(0.65, 0.59, -0.38)?;
    println!("initial {r0}");
    for kind in ChannelKind::ALL {
        let scaled: Vec<String> =
            (0..3).filter(|&k| kind.scaled_components()[k]).map(|k| format!("r{}", k + 1)).collect();
        println!("\n{kind}: scales {}", scaled.join(", "));
        for p in [0.1, 0.3, 0.5] {
            let analytic = evolved_vector(kind, &r0, p)?;
            let map = kraus_for(kind, p)?;
            let numeric = density_to_bd(&map.apply_local_pair(&bd_to_density(&r0)))?;
            let gap = analytic.distance_sq(&numeric).sqrt();
            println!("  p = {p:.1}  q = {:.4}  r = {analytic}  |analytic - kraus| = {gap:.1e}", kind.scale_factor(p));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> qcorr::Result<()> {
    run_example()
}
