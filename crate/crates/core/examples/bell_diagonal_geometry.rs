// Regions of the Bell-diagonal tetrahedron and the closed-form quantifiers
// at a few landmark points.

use qcorr::quantifiers::{concurrence_x, hs_discord, hs_entanglement, trace_discord};
use qcorr::states::{bd_to_density, bd_to_xstate, classify_region};
use qcorr::CorrelationVector;

pub fn run_example() -> qcorr::Result<()> {
    let points = [
        ("singlet vertex", [-1.0, -1.0, -1.0]),
        ("sample state", [0.65, 0.59, -0.38]),
        ("octahedron face", [0.4, 0.3, -0.3]),
        ("on an axis", [0.0, 0.0, 0.6]),
        ("maximally mixed", [0.0, 0.0, 0.0]),
    ];
    println!("{:<16} {:>24}  {:<22} {:>8} {:>8} {:>8} {:>8}", "", "r", "region", "D_hs", "E_hs", "D_tr", "C");
    for (label, r) in points {
        let r = CorrelationVector::from_array(r)?;
        let x = bd_to_xstate(&r);
        println!(
            "{label:<16} {:>24}  {:<22} {:>8.5} {:>8.5} {:>8.5} {:>8.5}",
            r.to_string(),
            format!("{:?}", classify_region(&r)),
            hs_discord(&r).value,
            hs_entanglement(&r).value,
            trace_discord(&r).value,
            concurrence_x(&x).value,
        );
    }

    let r = CorrelationVector::new(0.65, 0.59, -0.38)?;
    let rho = bd_to_density(&r);
    println!("\nspectrum of the sample state: {:?}", rho.eigenvalues()?);
    println!("PPT: {}", rho.is_ppt()?);

    match CorrelationVector::new(1.0, 1.0, 1.0) {
        Err(e) => println!("(1, 1, 1) rejected: {e}"),
        Ok(_) => unreachable!("outside the tetrahedron"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> qcorr::Result<()> {
    run_example()
}
