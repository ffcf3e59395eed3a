//! Brute-force nearest-state searches that serve as independent checks on
//! the closed forms in [`crate::quantifiers`].
//!
//! None of these routines use the closed forms. Distances are evaluated on
//! the operator difference (eigenvalues or Frobenius norm) wherever a
//! matrix route exists.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::linalg::{self, Mat4, C64};
use crate::states::{bd_to_density, CorrelationVector, XState, PSD_TOLERANCE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Norm {
    #[serde(rename = "hs")]
    HilbertSchmidt,
    #[serde(rename = "trace")]
    Trace,
}

impl std::fmt::Display for Norm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Norm::HilbertSchmidt => "hs",
            Norm::Trace => "trace",
        })
    }
}

/// Coherences of a candidate separable X state sharing the reference
/// populations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparableXCandidate {
    pub e_prime: C64,
    pub f_prime: C64,
}

impl SeparableXCandidate {
    /// `|e′|, |f′| ≤ min(√(ad), √(bc))`: physical and PPT at once.
    pub fn is_feasible_for(&self, x: &XState) -> bool {
        let bound = x.sqrt_ad().min(x.sqrt_bc()) + PSD_TOLERANCE;
        self.e_prime.norm() <= bound && self.f_prime.norm() <= bound
    }

    pub fn to_xstate(&self, reference: &XState) -> XState {
        reference.with_coherences(self.e_prime, self.f_prime)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Minimizer {
    Correlation(CorrelationVector),
    SeparableX(SeparableXCandidate),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleResult {
    pub minimizer: Minimizer,
    pub distance: f64,
    pub evaluations: usize,
}

/// Schatten-1 norm `Σ|λ_i|` of a Hermitian matrix.
pub fn trace_norm(delta: &Mat4) -> Result<f64> {
    Ok(linalg::hermitian_eigenvalues(delta)?.iter().map(|l| l.abs()).sum())
}

/// Hilbert-Schmidt distance between Bell-diagonal states, reported in
/// correlation-space units (`4‖ρ−σ‖₂²`).
pub fn hs_distance(r: &CorrelationVector, s: &CorrelationVector) -> f64 {
    4.0 * linalg::frobenius_sq(&(bd_to_density(r).matrix() - bd_to_density(s).matrix()))
}

pub fn trace_distance(r: &CorrelationVector, s: &CorrelationVector) -> Result<f64> {
    trace_norm(&(bd_to_density(r).matrix() - bd_to_density(s).matrix()))
}

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for the minimum of a unimodal `f` on `[lo, hi]`.
/// Returns `(argmin, min, evaluations)`.
fn golden_section<F>(mut f: F, mut lo: f64, mut hi: f64, tol: f64) -> Result<(f64, f64, usize)>
where
    F: FnMut(f64) -> Result<f64>,
{
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let (mut f1, mut f2) = (f(x1)?, f(x2)?);
    let mut evals = 2;
    while hi - lo > tol {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2)?;
        }
        evals += 1;
    }
    Ok(if f1 <= f2 { (x1, f1, evals) } else { (x2, f2, evals) })
}

const AXIS_GRID_STEP: f64 = 1e-3;
const AXIS_REFINE_TOL: f64 = 1e-8;

/// Nearest zero-discord Bell-diagonal state, searched along the three
/// coordinate axes `t·ê_i`, `t ∈ [−1, 1]`: a 1e-3 grid followed by
/// golden-section refinement to 1e-8.
pub fn closest_classical(r: &CorrelationVector, norm: Norm) -> Result<OracleResult> {
    let distance = |s: &CorrelationVector| -> Result<f64> {
        match norm {
            Norm::HilbertSchmidt => Ok(hs_distance(r, s)),
            Norm::Trace => trace_distance(r, s),
        }
    };
    let on_axis = |axis: usize, t: f64| {
        let mut comps = [0.0; 3];
        comps[axis] = t.clamp(-1.0, 1.0);
        CorrelationVector::new_unchecked(comps)
    };

    let steps = (2.0 / AXIS_GRID_STEP).round() as usize;
    let mut evaluations = 0;
    let mut best: Option<(f64, CorrelationVector)> = None;
    for axis in 0..3 {
        let mut grid_best = (f64::INFINITY, 0.0);
        for i in 0..=steps {
            let t = -1.0 + i as f64 * AXIS_GRID_STEP;
            let d = distance(&on_axis(axis, t))?;
            evaluations += 1;
            if d < grid_best.0 {
                grid_best = (d, t);
            }
        }
        let lo = (grid_best.1 - AXIS_GRID_STEP).max(-1.0);
        let hi = (grid_best.1 + AXIS_GRID_STEP).min(1.0);
        let (t, d, n) = golden_section(|t| distance(&on_axis(axis, t)), lo, hi, AXIS_REFINE_TOL)?;
        evaluations += n;
        let (d, t) = if d <= grid_best.0 { (d, t) } else { grid_best };
        if best.is_none_or(|(bd, _)| d < bd) {
            best = Some((d, on_axis(axis, t)));
        }
    }
    let (distance, minimizer) = best.expect("three axes searched");
    Ok(OracleResult { minimizer: Minimizer::Correlation(minimizer), distance, evaluations })
}

/// Euclidean projection of a non-negative point onto `{z ≥ 0, Σz ≤ 1}`.
fn project_onto_corner_simplex(y: [f64; 3]) -> [f64; 3] {
    if y.iter().sum::<f64>() <= 1.0 {
        return y;
    }
    // projection onto the face Σz = 1, z ≥ 0 (sort-and-threshold)
    let mut sorted = y;
    sorted.sort_by(|a, b| b.total_cmp(a));
    let mut cumulative = 0.0;
    let mut theta = 0.0;
    for (k, &u) in sorted.iter().enumerate() {
        cumulative += u;
        let candidate = (cumulative - 1.0) / (k + 1) as f64;
        if u - candidate > 0.0 {
            theta = candidate;
        }
    }
    y.map(|v| (v - theta).max(0.0))
}

/// Nearest separable Bell-diagonal state in Hilbert-Schmidt distance, by
/// projecting `(|r₁|,|r₂|,|r₃|)` onto the positive corner of the
/// octahedron and restoring the signs.
pub fn closest_separable_hs(r: &CorrelationVector) -> OracleResult {
    let comps = r.components();
    let z = project_onto_corner_simplex(r.abs());
    let nearest = CorrelationVector::new_unchecked([0, 1, 2].map(|k| z[k].copysign(comps[k])));
    OracleResult { minimizer: Minimizer::Correlation(nearest), distance: hs_distance(r, &nearest), evaluations: 1 }
}

const X_GRID: usize = 200;
const X_REFINE_TOL: f64 = 1e-7;

/// Nearest separable X state with the same populations in trace distance.
///
/// Coherence phases follow those of `x`; the moduli `(|e′|, |f′|)` are
/// searched on a 200×200 grid over the feasible square and then refined by
/// compass search down to a 1e-7 step.
pub fn closest_separable_trace_xfamily(x: &XState) -> Result<OracleResult> {
    let bound = x.sqrt_ad().min(x.sqrt_bc());
    let phase = |z: C64| if z.norm() > 0.0 { z / z.norm() } else { C64::new(1.0, 0.0) };
    let (pe, pf) = (phase(x.e()), phase(x.f()));
    let target = x.to_matrix();
    let candidate = |em: f64, fm: f64| SeparableXCandidate {
        e_prime: pe * em.clamp(0.0, bound),
        f_prime: pf * fm.clamp(0.0, bound),
    };
    let mut evaluations = 0;
    let mut objective = |em: f64, fm: f64| -> Result<f64> {
        evaluations += 1;
        trace_norm(&(target - candidate(em, fm).to_xstate(x).to_matrix()))
    };

    let cell = bound / (X_GRID - 1) as f64;
    let mut best = (f64::INFINITY, 0.0, 0.0);
    for i in 0..X_GRID {
        for j in 0..X_GRID {
            let (em, fm) = (i as f64 * cell, j as f64 * cell);
            let d = objective(em, fm)?;
            if d < best.0 {
                best = (d, em, fm);
            }
        }
    }

    let mut step = cell;
    while step > X_REFINE_TOL {
        let mut improved = false;
        for (de, df) in [(step, 0.0), (-step, 0.0), (0.0, step), (0.0, -step)] {
            let (em, fm) = ((best.1 + de).clamp(0.0, bound), (best.2 + df).clamp(0.0, bound));
            let d = objective(em, fm)?;
            if d < best.0 {
                best = (d, em, fm);
                improved = true;
            }
        }
        if !improved {
            step /= 2.0;
        }
    }

    Ok(OracleResult { minimizer: Minimizer::SeparableX(candidate(best.1, best.2)), distance: best.0, evaluations })
}

/// Closed-form minimizer of the same-population problem: clamp the
/// dominant coherence to `min(√(ad), √(bc))` and keep the other one.
pub fn clamped_separable_candidate(x: &XState) -> SeparableXCandidate {
    let bound = x.sqrt_ad().min(x.sqrt_bc());
    let clamp = |z: C64| if z.norm() > bound { z * (bound / z.norm()) } else { z };
    SeparableXCandidate { e_prime: clamp(x.e()), f_prime: clamp(x.f()) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::c;
    use crate::quantifiers::{concurrence_x, hs_discord, hs_entanglement, trace_discord};
    use crate::states::{bd_to_xstate, DensityMatrix};

    fn sample_state() -> CorrelationVector {
        CorrelationVector::new(0.65, 0.59, -0.38).unwrap()
    }

    #[test]
    fn trace_norm_examples() {
        assert_eq!(trace_norm(&Mat4::zeros()).unwrap(), 0.0);
        let mut m = Mat4::zeros();
        m[(0, 0)] = c(0.5, 0.0);
        m[(1, 1)] = c(-0.5, 0.0);
        assert!((trace_norm(&m).unwrap() - 1.0).abs() < 1e-15);
        let bell = bd_to_density(&CorrelationVector::new(1.0, -1.0, 1.0).unwrap());
        let delta = bell.matrix() - DensityMatrix::maximally_mixed().matrix();
        assert!((trace_norm(&delta).unwrap() - 1.5).abs() < 1e-14);
    }

    #[test]
    fn golden_section_finds_parabola_minimum() {
        let (x, fx, _) = golden_section(|x| Ok((x - 0.3).powi(2)), -1.0, 1.0, 1e-10).unwrap();
        assert!((x - 0.3).abs() < 1e-9);
        assert!(fx < 1e-18);
    }

    #[test]
    fn classical_oracle_examples() {
        let r = CorrelationVector::new(0.3, 0.0, 0.0).unwrap();
        let res = closest_classical(&r, Norm::HilbertSchmidt).unwrap();
        assert!(res.distance < 1e-15);
        let Minimizer::Correlation(m) = res.minimizer else { panic!() };
        assert!(m.distance_sq(&r) < 1e-15);

        let hs = closest_classical(&sample_state(), Norm::HilbertSchmidt).unwrap();
        assert!((hs.distance - 0.4925).abs() < 1e-6);
        assert!((hs.distance - hs_discord(&sample_state()).value).abs() < 1e-6);

        let tr = closest_classical(&sample_state(), Norm::Trace).unwrap();
        assert!((tr.distance - 0.59).abs() < 1e-4);
        assert!((tr.distance - trace_discord(&sample_state()).value).abs() < 1e-4);
        assert!(tr.evaluations > 6000);
    }

    #[test]
    fn separable_hs_oracle_examples() {
        let inside = CorrelationVector::new(0.2, 0.2, 0.2).unwrap();
        assert!(closest_separable_hs(&inside).distance < 1e-15);
        let res = closest_separable_hs(&sample_state());
        assert!((res.distance - 0.62f64.powi(2) / 3.0).abs() < 1e-8);
        assert!((res.distance - hs_entanglement(&sample_state()).value).abs() < 1e-8);
        let vertex = CorrelationVector::new(1.0, 1.0, -1.0).unwrap();
        assert!((closest_separable_hs(&vertex).distance - 4.0 / 3.0).abs() < 1e-8);
        let Minimizer::Correlation(m) = res.minimizer else { panic!() };
        assert!(m.l1_norm() <= 1.0 + 1e-12);
    }

    #[test]
    fn corner_projection_clips_to_edges_when_needed() {
        // far off the face: only the largest coordinate survives
        assert_eq!(project_onto_corner_simplex([3.0, 0.1, 0.0]), [1.0, 0.0, 0.0]);
        let z = project_onto_corner_simplex([0.9, 0.6, 0.0]);
        assert!((z[0] - 0.65).abs() < 1e-15 && (z[1] - 0.35).abs() < 1e-15 && z[2] == 0.0);
    }

    #[test]
    fn xfamily_oracle_examples() {
        let sep = XState::new([0.3, 0.2, 0.2, 0.3], c(0.1, 0.0), c(0.0, -0.2)).unwrap();
        assert!(closest_separable_trace_xfamily(&sep).unwrap().distance < 1e-6);

        let bell = XState::new([0.0, 0.5, 0.5, 0.0], c(0.0, 0.0), c(0.5, 0.0)).unwrap();
        assert!((closest_separable_trace_xfamily(&bell).unwrap().distance - 1.0).abs() < 1e-12);

        let x = bd_to_xstate(&sample_state());
        let res = closest_separable_trace_xfamily(&x).unwrap();
        assert!((res.distance - 0.31).abs() < 1e-4);
        let Minimizer::SeparableX(cand) = res.minimizer else { panic!() };
        assert!(cand.is_feasible_for(&x));
    }

    #[test]
    fn clamped_candidate_attains_concurrence() {
        let x = XState::new([0.1, 0.4, 0.3, 0.2], c(0.05, -0.1), c(0.0, 0.3)).unwrap();
        let cand = clamped_separable_candidate(&x);
        assert!(cand.is_feasible_for(&x));
        let d = trace_norm(&(x.to_matrix() - cand.to_xstate(&x).to_matrix())).unwrap();
        assert!((d - concurrence_x(&x).value).abs() < 1e-12);
        let oracle = closest_separable_trace_xfamily(&x).unwrap();
        assert!((oracle.distance - d).abs() < 1e-4);
    }
}
