//! Closed-form geometric discord and entanglement.
//!
//! Hilbert-Schmidt quantities are squared Euclidean distances in
//! correlation space. For Bell-diagonal operators `‖ρ−σ‖₂² = |Δr|²/4`, so
//! operator-space comparisons multiply by 4. Trace-norm quantities use
//! `‖A‖₁ = Σ|λ_i|` with no ½ in front, which makes the trace-norm
//! entanglement of an X state coincide with its concurrence.

use std::fmt;

use nalgebra::linalg::{SymmetricEigen, SVD};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Mat4};
use crate::states::{CorrelationVector, DensityMatrix, XState};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Measure {
    HsDiscord,
    HsEntanglement,
    TraceDiscord,
    TraceEntanglement,
    Concurrence,
}

/// Which piece of a piecewise formula produced a value.
///
/// `D1..D3` name the Hilbert-Schmidt discord term `D_i = r_j² + r_k²`
/// (distance to axis `i`). `M1..M3` name the component whose modulus is the
/// intermediate one, which is the trace-norm discord. `C1` is the `|e|−√(bc)`
/// concurrence term and `C2` the `|f|−√(ad)` term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    D1,
    D2,
    D3,
    M1,
    M2,
    M3,
    C1,
    C2,
}

impl Branch {
    pub(crate) fn hs(axis: usize) -> Self {
        [Branch::D1, Branch::D2, Branch::D3][axis]
    }

    pub(crate) fn mid(axis: usize) -> Self {
        [Branch::M1, Branch::M2, Branch::M3][axis]
    }

    /// Zero-based component index for the `D` and `M` families.
    pub fn axis(self) -> Option<usize> {
        match self {
            Branch::D1 | Branch::M1 => Some(0),
            Branch::D2 | Branch::M2 => Some(1),
            Branch::D3 | Branch::M3 => Some(2),
            Branch::C1 | Branch::C2 => None,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuantifierValue {
    pub measure: Measure,
    pub value: f64,
    pub branch: Option<Branch>,
}

/// The three candidate terms `D_i = Σ_{j≠i} r_j²`.
pub fn hs_discord_terms(r: &CorrelationVector) -> [f64; 3] {
    let sq = r.components().map(|x| x * x);
    [sq[1] + sq[2], sq[0] + sq[2], sq[0] + sq[1]]
}

/// Squared distance to the nearest coordinate axis. Ties go to the lowest
/// index.
pub fn hs_discord(r: &CorrelationVector) -> QuantifierValue {
    let terms = hs_discord_terms(r);
    let mut best = 0;
    for i in 1..3 {
        if terms[i] < terms[best] {
            best = i;
        }
    }
    QuantifierValue { measure: Measure::HsDiscord, value: terms[best], branch: Some(Branch::hs(best)) }
}

/// Squared distance from `(|r₁|,|r₂|,|r₃|)` to the octahedron face
/// `z₁+z₂+z₃ = 1`; zero inside the octahedron.
pub fn hs_entanglement(r: &CorrelationVector) -> QuantifierValue {
    let excess = r.l1_norm() - 1.0;
    let value = if excess > 0.0 { excess * excess / 3.0 } else { 0.0 };
    QuantifierValue { measure: Measure::HsEntanglement, value, branch: None }
}

/// Component indices sorted by modulus, ties broken by index.
pub(crate) fn modulus_order(r: &CorrelationVector) -> [usize; 3] {
    let a = r.abs();
    let mut idx = [0, 1, 2];
    idx.sort_by(|&i, &j| a[i].total_cmp(&a[j]).then(i.cmp(&j)));
    idx
}

/// Intermediate modulus of the correlation components.
pub fn trace_discord(r: &CorrelationVector) -> QuantifierValue {
    let mid = modulus_order(r)[1];
    QuantifierValue { measure: Measure::TraceDiscord, value: r.abs()[mid], branch: Some(Branch::mid(mid)) }
}

/// `2·max(|e|−√(bc), |f|−√(ad))` before clamping at zero. Positive exactly
/// when the state is entangled.
pub fn concurrence_margin(x: &XState) -> f64 {
    let (first, second) = concurrence_terms(x);
    2.0 * first.max(second)
}

fn concurrence_terms(x: &XState) -> (f64, f64) {
    (x.e().norm() - x.sqrt_bc(), x.f().norm() - x.sqrt_ad())
}

/// `C = 2·max(0, |e|−√(bc), |f|−√(ad))`.
pub fn concurrence_x(x: &XState) -> QuantifierValue {
    let (first, second) = concurrence_terms(x);
    let (value, branch) = if first <= 0.0 && second <= 0.0 {
        (0.0, None)
    } else if first >= second {
        (2.0 * first, Some(Branch::C1))
    } else {
        (2.0 * second, Some(Branch::C2))
    };
    QuantifierValue { measure: Measure::Concurrence, value, branch }
}

/// Trace distance to the closest separable X state with the same
/// populations, which equals the concurrence.
pub fn trace_entanglement(x: &XState) -> QuantifierValue {
    QuantifierValue { measure: Measure::TraceEntanglement, ..concurrence_x(x) }
}

/// Eigenvalues at or below this are treated as exact zeros when taking the
/// square root of `ρ`; otherwise rounding noise of order 1e-17 would turn
/// into 1e-9 errors in `√ρ`.
const SQRT_CUTOFF: f64 = 1e-13;

/// Wootters concurrence `max(0, λ₁−λ₂−λ₃−λ₄)`, with `λ_i` the decreasing
/// square roots of the eigenvalues of `ρ (σ₂⊗σ₂) ρ* (σ₂⊗σ₂)`.
///
/// The `λ_i` are obtained as singular values of `√ρ (σ₂⊗σ₂) √ρ*`, which
/// avoids a square root of possibly tiny eigenvalues at the end.
pub fn wootters_concurrence(rho: &DensityMatrix) -> Result<f64> {
    let eig = SymmetricEigen::try_new(*rho.matrix(), 1e-15, 10_000)
        .ok_or(Error::NumericalFailure("eigensolve of rho did not converge"))?;
    let sqrt_vals = eig.eigenvalues.map(|l| if l > SQRT_CUTOFF { l.sqrt() } else { 0.0 });
    let v = eig.eigenvectors;
    let sqrt_rho: Mat4 = v * Mat4::from_diagonal(&sqrt_vals.map(|s| linalg::c(s, 0.0))) * v.adjoint();
    let yy = linalg::pauli_pair(2);
    let product = sqrt_rho * yy * sqrt_rho.conjugate();
    let svd = SVD::try_new(product, false, false, 1e-15, 10_000)
        .ok_or(Error::NumericalFailure("singular value decomposition did not converge"))?;
    let mut lambda: Vec<f64> = svd.singular_values.iter().copied().collect();
    lambda.sort_by(|a, b| b.total_cmp(a));
    Ok((lambda[0] - lambda[1] - lambda[2] - lambda[3]).max(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::c;
    use crate::states::{bd_to_density, bd_to_xstate, classify_region, Region};

    fn sample_state() -> CorrelationVector {
        CorrelationVector::new(0.65, 0.59, -0.38).unwrap()
    }

    fn v(r1: f64, r2: f64, r3: f64) -> CorrelationVector {
        CorrelationVector::new(r1, r2, r3).unwrap()
    }

    #[test]
    fn hs_discord_examples() {
        let q = hs_discord(&v(0.3, 0.0, 0.0));
        assert_eq!((q.value, q.branch), (0.0, Some(Branch::D1)));

        let q = hs_discord(&sample_state());
        assert!((q.value - 0.4925).abs() < 1e-15);
        assert_eq!(q.branch, Some(Branch::D1));

        let q = hs_discord(&v(1.0, 1.0, -1.0));
        assert_eq!((q.value, q.branch), (2.0, Some(Branch::D1)));
    }

    #[test]
    fn hs_entanglement_examples() {
        assert_eq!(hs_entanglement(&v(0.2, 0.2, 0.2)).value, 0.0);
        assert!((hs_entanglement(&sample_state()).value - 0.62f64.powi(2) / 3.0).abs() < 1e-15);
        assert!((hs_entanglement(&sample_state()).value - 0.128133).abs() < 1e-6);
        assert!((hs_entanglement(&v(1.0, 1.0, -1.0)).value - 4.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn trace_discord_examples() {
        assert_eq!(trace_discord(&v(0.3, 0.0, 0.0)).value, 0.0);
        let q = trace_discord(&sample_state());
        assert_eq!((q.value, q.branch), (0.59, Some(Branch::M2)));
        assert_eq!(trace_discord(&v(1.0, 1.0, -1.0)).value, 1.0);
    }

    #[test]
    fn concurrence_examples() {
        let mixed = XState::new([0.25; 4], c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        assert_eq!(concurrence_x(&mixed).value, 0.0);
        assert_eq!(concurrence_x(&mixed).branch, None);

        let bell = XState::new([0.0, 0.5, 0.5, 0.0], c(0.0, 0.0), c(0.5, 0.0)).unwrap();
        let q = concurrence_x(&bell);
        assert_eq!((q.value, q.branch), (1.0, Some(Branch::C2)));
        assert_eq!(trace_entanglement(&bell).value, 1.0);
        assert_eq!(trace_entanglement(&bell).measure, Measure::TraceEntanglement);

        let q = concurrence_x(&bd_to_xstate(&sample_state()));
        assert!((q.value - 0.31).abs() < 1e-15);
        assert_eq!(q.branch, Some(Branch::C2));

        // |e| ≤ √(bc), |f| ≤ √(ad)
        let sep = XState::new([0.3, 0.2, 0.2, 0.3], c(0.1, 0.1), c(0.0, -0.2)).unwrap();
        assert_eq!(trace_entanglement(&sep).value, 0.0);
    }

    #[test]
    fn wootters_examples() {
        assert!(wootters_concurrence(&DensityMatrix::maximally_mixed()).unwrap().abs() < 1e-14);
        for r in [[1.0, -1.0, 1.0], [1.0, 1.0, -1.0], [-1.0, -1.0, -1.0]] {
            let rho = bd_to_density(&CorrelationVector::from_array(r).unwrap());
            assert!((wootters_concurrence(&rho).unwrap() - 1.0).abs() < 1e-12, "{r:?}");
        }
        let w = wootters_concurrence(&bd_to_density(&sample_state())).unwrap();
        assert!((w - concurrence_x(&bd_to_xstate(&sample_state())).value).abs() < 1e-10);
    }

    #[test]
    fn wootters_handles_complex_coherences() {
        let x = XState::new([0.1, 0.4, 0.3, 0.2], c(0.05, -0.1), c(0.0, 0.3)).unwrap();
        let w = wootters_concurrence(&x.to_density()).unwrap();
        assert!((w - concurrence_x(&x).value).abs() < 1e-10);
        assert!(concurrence_x(&x).value > 0.0);
    }

    #[test]
    fn r3_sign_selects_concurrence_branch() {
        let up = concurrence_x(&bd_to_xstate(&v(0.65, -0.59, 0.38)));
        assert_eq!(up.branch, Some(Branch::C1));
        let down = concurrence_x(&bd_to_xstate(&sample_state()));
        assert_eq!(down.branch, Some(Branch::C2));
    }

    #[test]
    fn zero_sets_agree_on_grid() {
        let n = 9;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let g = |t: usize| -1.0 + 2.0 * t as f64 / (n - 1) as f64;
                    let Ok(r) = CorrelationVector::new(g(i), g(j), g(k)) else { continue };
                    let region = classify_region(&r);
                    let ent_hs = hs_entanglement(&r).value > 0.0;
                    let ent_tr = trace_entanglement(&bd_to_xstate(&r)).value > 0.0;
                    assert_eq!(ent_hs, region == Region::Entangled, "{r}");
                    assert_eq!(ent_tr, ent_hs, "{r}");
                    let classical = region == Region::Classical;
                    assert_eq!(hs_discord(&r).value == 0.0, classical, "{r}");
                    assert_eq!(trace_discord(&r).value == 0.0, classical, "{r}");
                    let w = wootters_concurrence(&bd_to_density(&r)).unwrap();
                    assert!((w - concurrence_x(&bd_to_xstate(&r)).value).abs() < 1e-10, "{r}");
                }
            }
        }
    }

    #[test]
    fn symmetric_under_signs_and_permutations() {
        let base = [0.5, -0.3, 0.45];
        let r = CorrelationVector::from_array(base).unwrap();
        let reference = [hs_discord(&r).value, hs_entanglement(&r).value, trace_discord(&r).value];
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        for perm in perms {
            for signs in BELL_SIGNS {
                let comps = [0, 1, 2].map(|k| signs[k] * base[perm[k]]);
                let Ok(s) = CorrelationVector::from_array(comps) else { continue };
                let got = [hs_discord(&s).value, hs_entanglement(&s).value, trace_discord(&s).value];
                for (a, b) in got.iter().zip(reference) {
                    assert!((a - b).abs() < 1e-15);
                }
                // concurrence is a function of the Bell eigenvalues only
                let cr = concurrence_x(&bd_to_xstate(&r)).value;
                assert!((concurrence_x(&bd_to_xstate(&s)).value - cr).abs() < 1e-15);
            }
        }
    }

    // sign flips that keep a vector inside the tetrahedron (two at a time)
    const BELL_SIGNS: [[f64; 3]; 4] = [[1.0, 1.0, 1.0], [-1.0, -1.0, 1.0], [-1.0, 1.0, -1.0], [1.0, -1.0, -1.0]];
}
