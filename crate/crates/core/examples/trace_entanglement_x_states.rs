// For an X state the nearest separable X state with the same populations
// sits at trace distance equal to the concurrence. A brute-force search,
// the clamped-coherence candidate and Wootters' formula all agree.

use qcorr::oracles::{clamped_separable_candidate, closest_separable_trace_xfamily, trace_norm};
use qcorr::quantifiers::{concurrence_x, wootters_concurrence};
use qcorr::sampling::{random_entangled_x_state, seeded_rng, DEFAULT_SEED};

pub fn run_example() -> qcorr::Result<()> {
    let mut rng = seeded_rng(DEFAULT_SEED);
    println!("{:>10} {:>10} {:>10} {:>10} {:>7}", "C", "search", "clamped", "wootters", "evals");
    for _ in 0..8 {
        let x = random_entangled_x_state(&mut rng, 1e-3);
        let c = concurrence_x(&x);
        let search = closest_separable_trace_xfamily(&x)?;
        let candidate = clamped_separable_candidate(&x);
        let clamped = trace_norm(&(x.to_matrix() - candidate.to_xstate(&x).to_matrix()))?;
        let wootters = wootters_concurrence(&x.to_density())?;
        println!(
            "{:>10.6} {:>10.6} {:>10.6} {:>10.6} {:>7}  ({})",
            c.value,
            search.distance,
            clamped,
            wootters,
            search.evaluations,
            c.branch.map_or("none".into(), |b| b.to_string()),
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> qcorr::Result<()> {
    run_example()
}
