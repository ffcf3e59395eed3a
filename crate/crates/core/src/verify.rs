//! Closed forms checked against the numerical oracles.
//!
//! Each check walks a list of states, compares a closed-form quantity with
//! an independent computation and keeps the worst deviation. States are
//! processed in parallel but results are folded in input order, so reports
//! are identical for a given seed regardless of thread count.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::oracles::{self, Norm};
use crate::quantifiers;
use crate::sampling;
use crate::states::{CorrelationVector, XState};

pub const HS_CLASSICAL_TOLERANCE: f64 = 1e-6;
pub const HS_SEPARABLE_TOLERANCE: f64 = 1e-8;
pub const TRACE_CLASSICAL_TOLERANCE: f64 = 1e-4;
pub const TRACE_SEPARABLE_TOLERANCE: f64 = 1e-4;
pub const CLAMPED_CANDIDATE_TOLERANCE: f64 = 1e-12;
pub const WOOTTERS_TOLERANCE: f64 = 1e-10;

/// Offset added to the closed-form Hilbert-Schmidt discord in mutation
/// mode, large enough that the check must fail.
const MUTATION_OFFSET: f64 = 1e-3;

/// Entangled X samples must clear this concurrence margin.
const ENTANGLED_MARGIN: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum StateRef {
    Correlation(CorrelationVector),
    X(XState),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub measure: String,
    pub max_abs_deviation: f64,
    pub worst_case_state: Option<StateRef>,
    pub evaluations: usize,
    pub states: usize,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub grid: usize,
    pub checks: Vec<CheckReport>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub grid: usize,
    /// Number of entangled X states for the trace-entanglement checks; the
    /// Wootters comparison uses ten times as many unconstrained ones.
    pub x_states: usize,
    /// Extra X state appended to the trace-entanglement checks.
    pub extra_x_state: Option<XState>,
    pub mutate: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { seed: sampling::DEFAULT_SEED, grid: 9, x_states: 200, extra_x_state: None, mutate: false }
    }
}

/// Folds per-state `(deviation, evaluations)` pairs; the first state with
/// the largest deviation is reported.
fn fold<S: Copy>(
    measure: &str,
    tolerance: f64,
    states: &[S],
    results: Vec<(f64, usize)>,
    wrap: impl Fn(S) -> StateRef,
) -> CheckReport {
    let mut worst: Option<(f64, usize)> = None;
    let mut evaluations = 0;
    for (i, &(dev, n)) in results.iter().enumerate() {
        evaluations += n;
        // NaN deviations count as worst
        if worst.is_none_or(|(w, _)| dev > w || (dev.is_nan() && !w.is_nan())) {
            worst = Some((dev, i));
        }
    }
    let max_abs_deviation = worst.map_or(0.0, |(w, _)| w);
    CheckReport {
        measure: measure.to_string(),
        max_abs_deviation,
        worst_case_state: worst.map(|(_, i)| wrap(states[i])),
        evaluations,
        states: states.len(),
        tolerance,
        passed: max_abs_deviation <= tolerance,
    }
}

fn classical_check(states: &[CorrelationVector], norm: Norm, offset: f64) -> Result<CheckReport> {
    let results = states
        .par_iter()
        .map(|r| {
            let oracle = oracles::closest_classical(r, norm)?;
            let closed = match norm {
                Norm::HilbertSchmidt => quantifiers::hs_discord(r).value + offset,
                Norm::Trace => quantifiers::trace_discord(r).value,
            };
            Ok(((closed - oracle.distance).abs(), oracle.evaluations))
        })
        .collect::<Result<Vec<_>>>()?;
    let (measure, tol) = match norm {
        Norm::HilbertSchmidt => ("hs_discord", HS_CLASSICAL_TOLERANCE),
        Norm::Trace => ("trace_discord", TRACE_CLASSICAL_TOLERANCE),
    };
    Ok(fold(measure, tol, states, results, StateRef::Correlation))
}

/// Closed-form discord against the nearest point on the coordinate axes.
pub fn check_classical(states: &[CorrelationVector], norm: Norm) -> Result<CheckReport> {
    classical_check(states, norm, 0.0)
}

/// `(Σ|r|−1)²/3` against the projection onto the octahedron.
pub fn check_separable_hs(states: &[CorrelationVector]) -> CheckReport {
    let results = states
        .par_iter()
        .map(|r| {
            let oracle = oracles::closest_separable_hs(r);
            ((quantifiers::hs_entanglement(r).value - oracle.distance).abs(), oracle.evaluations)
        })
        .collect();
    fold("hs_entanglement", HS_SEPARABLE_TOLERANCE, states, results, StateRef::Correlation)
}

/// Concurrence against a grid-and-refine search over separable X states
/// with the same populations.
pub fn check_separable_trace(states: &[XState]) -> Result<CheckReport> {
    let results = states
        .par_iter()
        .map(|x| {
            let oracle = oracles::closest_separable_trace_xfamily(x)?;
            Ok(((quantifiers::trace_entanglement(x).value - oracle.distance).abs(), oracle.evaluations))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(fold("trace_entanglement", TRACE_SEPARABLE_TOLERANCE, states, results, StateRef::X))
}

/// Concurrence against the trace distance to the clamped-coherence
/// candidate, which must also be feasible.
pub fn check_clamped_candidate(states: &[XState]) -> Result<CheckReport> {
    let results = states
        .par_iter()
        .map(|x| {
            let candidate = oracles::clamped_separable_candidate(x);
            if !candidate.is_feasible_for(x) {
                return Ok((f64::INFINITY, 1));
            }
            let d = oracles::trace_norm(&(x.to_matrix() - candidate.to_xstate(x).to_matrix()))?;
            Ok(((quantifiers::trace_entanglement(x).value - d).abs(), 1))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(fold("trace_entanglement_clamped", CLAMPED_CANDIDATE_TOLERANCE, states, results, StateRef::X))
}

/// Closed-form X-state concurrence against the general Wootters formula.
pub fn check_wootters(states: &[XState]) -> Result<CheckReport> {
    let results = states
        .par_iter()
        .map(|x| {
            let w = quantifiers::wootters_concurrence(&x.to_density())?;
            Ok(((quantifiers::concurrence_x(x).value - w).abs(), 1))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(fold("concurrence_wootters", WOOTTERS_TOLERANCE, states, results, StateRef::X))
}

/// Runs every check with states drawn from `config.seed`.
pub fn run(config: &VerifyConfig) -> Result<VerifyReport> {
    let grid = sampling::correlation_grid(config.grid);
    let mut rng = sampling::seeded_rng(config.seed);
    let mut entangled: Vec<XState> =
        (0..config.x_states).map(|_| sampling::random_entangled_x_state(&mut rng, ENTANGLED_MARGIN)).collect();
    entangled.extend(config.extra_x_state);
    let mut generic: Vec<XState> = (0..10 * config.x_states).map(|_| sampling::random_x_state(&mut rng)).collect();
    generic.extend(config.extra_x_state);

    let offset = if config.mutate { MUTATION_OFFSET } else { 0.0 };
    let checks = vec![
        classical_check(&grid, Norm::HilbertSchmidt, offset)?,
        check_separable_hs(&grid),
        classical_check(&grid, Norm::Trace, 0.0)?,
        check_separable_trace(&entangled)?,
        check_clamped_candidate(&entangled)?,
        check_wootters(&generic)?,
    ];
    let passed = checks.iter().all(|c| c.passed);
    Ok(VerifyReport { seed: config.seed, grid: config.grid, checks, passed })
}
