//! Seeded state generators and the regular grid used by the checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

use crate::linalg::C64;
use crate::relations::ORDERING_TOLERANCE;
use crate::states::{CorrelationVector, XState, BELL_SIGN_PATTERNS, PSD_TOLERANCE};

pub const DEFAULT_SEED: u64 = 42;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Physical points of the `n³` grid on `[−1, 1]³`, in lexicographic order.
pub fn correlation_grid(n: usize) -> Vec<CorrelationVector> {
    if n < 2 {
        return vec![CorrelationVector::maximally_mixed()];
    }
    let coord = |i: usize| -1.0 + 2.0 * i as f64 / (n - 1) as f64;
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if let Ok(r) = CorrelationVector::new(coord(i), coord(j), coord(k)) {
                    out.push(r);
                }
            }
        }
    }
    out
}

/// Flat Dirichlet weights on the probability simplex of dimension `N`.
fn simplex_point<const N: usize, R: Rng>(rng: &mut R) -> [f64; N] {
    let mut w = [0.0; N];
    for x in &mut w {
        // exponential variates; 1 - u avoids ln(0)
        *x = -(1.0 - rng.random::<f64>()).ln();
    }
    let total: f64 = w.iter().sum();
    w.map(|x| x / total)
}

/// Uniform point of the tetrahedron, as a mixture of the four Bell vertices.
pub fn random_correlation_vector<R: Rng>(rng: &mut R) -> CorrelationVector {
    let w: [f64; 4] = simplex_point(rng);
    let mut r = [0.0; 3];
    for (wk, s) in w.iter().zip(BELL_SIGN_PATTERNS) {
        for j in 0..3 {
            r[j] += wk * s[j];
        }
    }
    CorrelationVector::from_array(r).expect("convex mixture of vertices is physical")
}

/// Entangled Bell-diagonal state whose moduli are separated by more than
/// `min_gap`.
pub fn random_strict_entangled_vector<R: Rng>(rng: &mut R, min_gap: f64) -> CorrelationVector {
    let gap = min_gap.max(ORDERING_TOLERANCE);
    loop {
        let r = random_correlation_vector(rng);
        let mut a = r.abs();
        a.sort_by(f64::total_cmp);
        if r.l1_norm() > 1.0 + gap && a[1] - a[0] > gap && a[2] - a[1] > gap {
            return r;
        }
    }
}

fn random_coherence<R: Rng>(rng: &mut R, radius: f64) -> C64 {
    // uniform over the disk of the given radius
    let modulus = radius * rng.random::<f64>().sqrt();
    C64::from_polar(modulus, TAU * rng.random::<f64>())
}

/// X state with flat-Dirichlet populations and coherences uniform in their
/// positivity disks `|e| ≤ √(ad)`, `|f| ≤ √(bc)`.
pub fn random_x_state<R: Rng>(rng: &mut R) -> XState {
    let diag: [f64; 4] = simplex_point(rng);
    let ad = (diag[0] * diag[3]).sqrt();
    let bc = (diag[1] * diag[2]).sqrt();
    // a hair inside the disk so validation never trips on rounding
    let shrink = 1.0 - 4.0 * PSD_TOLERANCE;
    let e = random_coherence(rng, ad * shrink);
    let f = random_coherence(rng, bc * shrink);
    XState::new(diag, e, f).expect("sampled inside the positivity disks")
}

/// Rejection-samples [`random_x_state`] until the concurrence margin is at
/// least `min_margin`.
pub fn random_entangled_x_state<R: Rng>(rng: &mut R, min_margin: f64) -> XState {
    loop {
        let x = random_x_state(rng);
        if crate::quantifiers::concurrence_margin(&x) > min_margin {
            return x;
        }
    }
}
