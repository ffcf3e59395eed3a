//! Direct discord-versus-entanglement relations along a channel trajectory,
//! together with the analytic sudden-change and sudden-death parameters.
//!
//! Every channel here multiplies a subset of the correlation components by a
//! common factor `q(p)` and leaves the rest alone. Along such a line the
//! entanglement is an affine function of `q` inside its validity window, so
//! `q` can be recovered from the entanglement and substituted into the
//! active discord branch.
//!
//! Hilbert-Schmidt, with scaled set `S` and fixed set `F`:
//!
//! ```text
//! √(3E) = q·Σ_S|r_s| + Σ_F|r_f| − 1
//! D_i   = Σ_{j≠i} r_j² s_j(q)²
//! ```
//!
//! Trace norm, with `σ` the Bell sign pattern selected by the concurrence
//! branch (`C1`: `σ = (sgn(r₁−r₂), −sgn(r₁−r₂), +1)`, `C2`:
//! `σ = (sgn(r₁+r₂), sgn(r₁+r₂), −1)`):
//!
//! ```text
//! 2C + 1 = q·σ_S·r_S + σ_F·r_F
//! D      = |r_m| s_m(q)       (m the intermediate component)
//! ```
//!
//! For phase damping these reduce to the familiar
//! `D = (2C + |1±r₃|)/|r₂±r₁| · |r_j|` and
//! `D_i = |r_j|²((√(3E) − |r₃| + 1)/(|r₁|+|r₂|))² + |r₃|²`; for the
//! depolarizing channel to `D = |r_int|(2C+1)/(|r₁±r₂| ∓ r₃)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::channels::{self, ChannelKind};
use crate::error::{Error, Result};
use crate::oracles::Norm;
use crate::quantifiers::{self, Branch};
use crate::states::{bd_to_xstate, CorrelationVector};

/// Two moduli closer than this count as tied.
pub const ORDERING_TOLERANCE: f64 = 1e-12;

/// Slack on window edges and on branch activity checks.
const WINDOW_SLACK: f64 = 1e-12;

/// Component indices sorted by increasing modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModulusOrdering(pub [usize; 3]);

impl fmt::Display for ModulusOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0.map(|i| i + 1);
        write!(f, "|r{a}|<|r{b}|<|r{c}|")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RelationCase {
    pub channel: ChannelKind,
    pub norm: Norm,
    pub ordering: ModulusOrdering,
    pub initial: CorrelationVector,
}

impl RelationCase {
    /// Ties in the ordering are allowed here; routines whose case analysis
    /// needs a strict ordering reject them.
    pub fn new(channel: ChannelKind, norm: Norm, initial: CorrelationVector) -> Self {
        let ordering = ModulusOrdering(quantifiers::modulus_order(&initial));
        Self { channel, norm, ordering, initial }
    }

    /// Fails with `DegenerateOrdering` if two moduli are tied.
    pub fn require_strict(&self) -> Result<()> {
        let a = self.initial.abs();
        let [lo, mid, hi] = self.ordering.0;
        for (i, j) in [(lo, mid), (mid, hi)] {
            if (a[j] - a[i]).abs() <= ORDERING_TOLERANCE {
                return Err(Error::DegenerateOrdering { first: i.min(j) + 1, second: i.max(j) + 1 });
            }
        }
        Ok(())
    }

    pub fn is_strict(&self) -> bool {
        self.require_strict().is_ok()
    }

    fn is_entangled(&self) -> bool {
        self.initial.l1_norm() > 1.0
    }

    fn scaled(&self) -> [bool; 3] {
        self.channel.scaled_components()
    }

    fn evolved(&self, p: f64) -> CorrelationVector {
        channels::evolve_unchecked(self.channel, &self.initial, p)
    }

    /// All parameters `p ∈ (0, 1)` at which the channel's scale factor
    /// equals `q`. Two of them for the phase flip, which is not monotone.
    fn parameters_for_scale(&self, q: f64) -> Vec<f64> {
        if !(q > 0.0 && q < 1.0) {
            return Vec::new();
        }
        let p = self.channel.parameter_for_scale(q);
        match self.channel {
            ChannelKind::PhaseFlip => vec![p, 1.0 - p],
            _ => vec![p],
        }
    }

    /// Scale factor at which the entanglement of this norm reaches zero.
    fn death_scale(&self) -> Option<f64> {
        if !self.is_entangled() {
            return None;
        }
        let r = self.initial.components();
        let scaled = self.scaled();
        let weights = match self.norm {
            Norm::HilbertSchmidt => self.initial.abs(),
            Norm::Trace => {
                let branch = quantifiers::concurrence_x(&bd_to_xstate(&self.initial)).branch?;
                let sigma = sign_pattern(branch, &self.initial);
                [0, 1, 2].map(|k| sigma[k] * r[k])
            }
        };
        let (mut moving, mut fixed) = (0.0, 0.0);
        for k in 0..3 {
            if scaled[k] {
                moving += weights[k];
            } else {
                fixed += weights[k];
            }
        }
        Some((1.0 - fixed) / moving)
    }
}

/// Bell sign pattern `σ` whose eigenvalue `(1 + σ·r)/4` carries the
/// entanglement, for the given concurrence branch.
fn sign_pattern(branch: Branch, r: &CorrelationVector) -> [f64; 3] {
    let [r1, r2, _] = r.components();
    match branch {
        Branch::C1 => {
            let s = if r1 - r2 >= 0.0 { 1.0 } else { -1.0 };
            [s, -s, 1.0]
        }
        _ => {
            let s = if r1 + r2 >= 0.0 { 1.0 } else { -1.0 };
            [s, s, -1.0]
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct CriticalTimes {
    pub sudden_changes: Vec<f64>,
    pub sudden_death: Option<f64>,
}

/// Analytic sudden-change parameters of the discord and the sudden-death
/// parameter of the entanglement for the case's norm.
///
/// A sudden change occurs whenever a shrinking component crosses a fixed
/// one in modulus, at `q = |r_f|/|r_s|`. Under the Hilbert-Schmidt norm only
/// the crossing of the largest modulus matters (it decides the nearest
/// axis); under the trace norm every crossing moves the intermediate value.
/// Sudden death, when the initial state is entangled, sits where the
/// entanglement's affine form in `q` hits zero.
pub fn critical_times(case: &RelationCase) -> Result<CriticalTimes> {
    case.require_strict()?;
    let a = case.initial.abs();
    let scaled = case.scaled();
    let [_, _, largest] = case.ordering.0;

    let mut crossings = Vec::new();
    for f in (0..3).filter(|&k| !scaled[k]) {
        for s in (0..3).filter(|&k| scaled[k] && a[k] > a[f]) {
            let relevant = match case.norm {
                Norm::HilbertSchmidt => s == largest,
                Norm::Trace => true,
            };
            if relevant {
                crossings.extend(case.parameters_for_scale(a[f] / a[s]));
            }
        }
    }
    crossings.sort_by(f64::total_cmp);

    let sudden_death = case.death_scale().and_then(|q| case.parameters_for_scale(q).first().copied());
    Ok(CriticalTimes { sudden_changes: crossings, sudden_death })
}

/// Sudden-death parameter alone; fails for separable initial states.
pub fn sudden_death_time(case: &RelationCase) -> Result<f64> {
    if !case.is_entangled() {
        return Err(Error::NotEntangled);
    }
    case.death_scale()
        .and_then(|q| case.parameters_for_scale(q).first().copied())
        .ok_or_else(|| Error::WindowViolation("entanglement does not vanish for p < 1".into()))
}

fn check_window(case: &RelationCase, p: f64) -> Result<()> {
    let end = sudden_death_time(case)?;
    if !(-WINDOW_SLACK..=end + WINDOW_SLACK).contains(&p) {
        return Err(Error::WindowViolation(format!("p = {p} outside [0, {end}]")));
    }
    Ok(())
}

/// Recovers the scale factor from `(value − fixed)/moving`, falling back to
/// zero if nothing moves.
fn scale_from(value: f64, fixed: f64, moving: f64) -> f64 {
    if moving == 0.0 {
        0.0
    } else {
        (value - fixed) / moving
    }
}

/// Hilbert-Schmidt discord recovered from the Hilbert-Schmidt entanglement
/// `entanglement` at parameter `p`, on the supplied discord branch `D_i`.
pub fn hs_discord_from_entanglement(
    case: &RelationCase,
    p: f64,
    entanglement: f64,
    branch: Option<Branch>,
) -> Result<f64> {
    let branch = branch.ok_or(Error::BranchUnknown)?;
    let axis = match branch {
        Branch::D1 | Branch::D2 | Branch::D3 => branch.axis().expect("D branch has an axis"),
        other => return Err(Error::WindowViolation(format!("{other} is not a Hilbert-Schmidt discord branch"))),
    };
    check_window(case, p)?;
    let terms = quantifiers::hs_discord_terms(&case.evolved(p.clamp(0.0, 1.0)));
    let min = terms.iter().copied().fold(f64::INFINITY, f64::min);
    if terms[axis] - min > WINDOW_SLACK {
        return Err(Error::WindowViolation(format!("branch {branch} is not active at p = {p}")));
    }

    let a = case.initial.abs();
    let scaled = case.scaled();
    let moving: f64 = (0..3).filter(|&k| scaled[k]).map(|k| a[k]).sum();
    let fixed: f64 = (0..3).filter(|&k| !scaled[k]).map(|k| a[k]).sum();
    let q = scale_from((3.0 * entanglement.max(0.0)).sqrt() + 1.0, fixed, moving);
    Ok((0..3)
        .filter(|&k| k != axis)
        .map(|k| {
            let s = if scaled[k] { q } else { 1.0 };
            (a[k] * s).powi(2)
        })
        .sum())
}

/// Trace-norm discord recovered from the concurrence `concurrence` at
/// parameter `p`. `discord_branch` names the intermediate component
/// (`M1..M3`) and `concurrence_branch` the winning concurrence term.
pub fn trace_discord_from_concurrence(
    case: &RelationCase,
    p: f64,
    concurrence: f64,
    discord_branch: Option<Branch>,
    concurrence_branch: Option<Branch>,
) -> Result<f64> {
    let (discord_branch, concurrence_branch) = match (discord_branch, concurrence_branch) {
        (Some(d), Some(c)) => (d, c),
        _ => return Err(Error::BranchUnknown),
    };
    let mid = match discord_branch {
        Branch::M1 | Branch::M2 | Branch::M3 => discord_branch.axis().expect("M branch has an axis"),
        other => return Err(Error::WindowViolation(format!("{other} is not a trace discord branch"))),
    };
    if !matches!(concurrence_branch, Branch::C1 | Branch::C2) {
        return Err(Error::WindowViolation(format!("{concurrence_branch} is not a concurrence branch")));
    }
    check_window(case, p)?;
    let initial_branch = quantifiers::concurrence_x(&bd_to_xstate(&case.initial)).branch;
    if initial_branch != Some(concurrence_branch) {
        return Err(Error::WindowViolation(format!(
            "concurrence branch {concurrence_branch} is not active along this trajectory"
        )));
    }
    let evolved = case.evolved(p.clamp(0.0, 1.0)).abs();
    let median = quantifiers::trace_discord(&case.evolved(p.clamp(0.0, 1.0))).value;
    if (evolved[mid] - median).abs() > WINDOW_SLACK {
        return Err(Error::WindowViolation(format!("branch {discord_branch} is not active at p = {p}")));
    }

    let r = case.initial.components();
    let sigma = sign_pattern(concurrence_branch, &case.initial);
    let scaled = case.scaled();
    let moving: f64 = (0..3).filter(|&k| scaled[k]).map(|k| sigma[k] * r[k]).sum();
    let fixed: f64 = (0..3).filter(|&k| !scaled[k]).map(|k| sigma[k] * r[k]).sum();
    let q = scale_from(2.0 * concurrence.max(0.0) + 1.0, fixed, moving);
    Ok(r[mid].abs() * if scaled[mid] { q } else { 1.0 })
}

/// Trace-norm discord under phase damping, evaluated piece by piece from the
/// ordering of the initial moduli:
///
/// * `|r₃|` largest: `D = |r_m|(1−p)²` with `m` the larger of `|r₁|, |r₂|`;
/// * `|r_a| < |r₃| < |r_b|`: `|r₃|` until `p_b = 1−√(|r₃|/|r_b|)`, then
///   `|r_b|(1−p)²`;
/// * `|r₃|` smallest, `|r_a| < |r_b|`: `|r_a|(1−p)²` until `p_a`, then `|r₃|`
///   until `p_b`, then `|r_b|(1−p)²`.
pub fn piecewise_discord_pd_trace(p: f64, r0: &CorrelationVector) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::OutOfRange { name: "p", value: p });
    }
    let case = RelationCase::new(ChannelKind::PhaseDamping, Norm::Trace, *r0);
    case.require_strict()?;
    let a = r0.abs();
    let q = (1.0 - p).powi(2);
    let crossing = |k: usize| 1.0 - (a[2] / a[k]).sqrt();
    let (lower, upper) = if a[0] < a[1] { (0, 1) } else { (1, 0) };
    let value = match case.ordering.0 {
        [_, _, 2] => a[upper] * q,
        [_, 2, _] => {
            if p < crossing(upper) {
                a[2]
            } else {
                a[upper] * q
            }
        }
        _ => {
            if p < crossing(lower) {
                a[lower] * q
            } else if p < crossing(upper) {
                a[2]
            } else {
                a[upper] * q
            }
        }
    };
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::evolved_vector;
    use crate::quantifiers::{concurrence_x, hs_discord, hs_entanglement, trace_discord};

    fn sample_state() -> CorrelationVector {
        CorrelationVector::new(0.65, 0.59, -0.38).unwrap()
    }

    fn case(channel: ChannelKind, norm: Norm, r: CorrelationVector) -> RelationCase {
        RelationCase::new(channel, norm, r)
    }

    #[test]
    fn sample_state_critical_times() {
        let tr = critical_times(&case(ChannelKind::PhaseDamping, Norm::Trace, sample_state())).unwrap();
        let p_i = 1.0 - (0.38f64 / 0.59).sqrt();
        let p_ii = 1.0 - (0.38f64 / 0.65).sqrt();
        assert_eq!(tr.sudden_changes.len(), 2);
        assert!((tr.sudden_changes[0] - p_i).abs() < 1e-15);
        assert!((tr.sudden_changes[1] - p_ii).abs() < 1e-15);
        assert!((tr.sudden_changes[0] - 0.19746).abs() < 1e-5);
        assert!((tr.sudden_changes[1] - 0.23540).abs() < 1e-5);
        let death = tr.sudden_death.unwrap();
        assert!((death - (1.0 - 0.5f64.sqrt())).abs() < 1e-15);

        let hs = critical_times(&case(ChannelKind::PhaseDamping, Norm::HilbertSchmidt, sample_state())).unwrap();
        assert_eq!(hs.sudden_changes.len(), 1);
        assert!((hs.sudden_changes[0] - p_ii).abs() < 1e-15);
        assert!((hs.sudden_death.unwrap() - death).abs() < 1e-12);
    }

    #[test]
    fn depolarizing_has_no_sudden_changes() {
        for norm in [Norm::HilbertSchmidt, Norm::Trace] {
            let t = critical_times(&case(ChannelKind::Depolarizing, norm, sample_state())).unwrap();
            assert!(t.sudden_changes.is_empty());
            assert!((t.sudden_death.unwrap() - (1.0 - (1.0f64 / 1.62).sqrt())).abs() < 1e-12);
        }
    }

    #[test]
    fn phase_damping_ordering_cases() {
        let hs = |r: [f64; 3]| {
            critical_times(&case(
                ChannelKind::PhaseDamping,
                Norm::HilbertSchmidt,
                CorrelationVector::from_array(r).unwrap(),
            ))
            .unwrap()
            .sudden_changes
        };
        let tr = |r: [f64; 3]| {
            critical_times(&case(ChannelKind::PhaseDamping, Norm::Trace, CorrelationVector::from_array(r).unwrap()))
                .unwrap()
                .sudden_changes
        };
        // |r1|,|r2| < |r3|
        assert!(hs([0.3, -0.2, 0.6]).is_empty());
        assert!(tr([0.3, -0.2, 0.6]).is_empty());
        // |r1| < |r3| < |r2|: p23 = p_I
        let p23 = 1.0 - (0.4f64 / 0.7).sqrt();
        assert_eq!(hs([0.2, 0.7, -0.4]), vec![p23]);
        assert_eq!(tr([0.2, 0.7, -0.4]), vec![p23]);
    }

    #[test]
    fn degenerate_and_separable_cases() {
        let tie = CorrelationVector::new(1.0, 1.0, -1.0).unwrap();
        assert!(matches!(
            critical_times(&case(ChannelKind::PhaseDamping, Norm::Trace, tie)),
            Err(Error::DegenerateOrdering { .. })
        ));
        let sep = CorrelationVector::new(0.2, 0.1, 0.05).unwrap();
        let c = case(ChannelKind::PhaseDamping, Norm::HilbertSchmidt, sep);
        assert_eq!(critical_times(&c).unwrap().sudden_death, None);
        assert_eq!(sudden_death_time(&c), Err(Error::NotEntangled));
        assert!(matches!(piecewise_discord_pd_trace(0.1, &tie), Err(Error::DegenerateOrdering { .. })));
    }

    #[test]
    fn hs_relation_examples() {
        let c = case(ChannelKind::PhaseDamping, Norm::HilbertSchmidt, sample_state());
        let e0 = hs_entanglement(&sample_state()).value;
        let d = hs_discord_from_entanglement(&c, 0.0, e0, Some(Branch::D1)).unwrap();
        assert!((d - 0.4925).abs() < 1e-12);

        let p_sd = sudden_death_time(&c).unwrap();
        let at_death = evolved_vector(ChannelKind::PhaseDamping, &sample_state(), p_sd).unwrap();
        let d = hs_discord_from_entanglement(&c, p_sd, 0.0, hs_discord(&at_death).branch).unwrap();
        assert!((d - hs_discord(&at_death).value).abs() < 1e-12);

        let vertex = CorrelationVector::new(1.0, 1.0, -1.0).unwrap();
        let c = case(ChannelKind::Depolarizing, Norm::HilbertSchmidt, vertex);
        let d = hs_discord_from_entanglement(&c, 0.0, 4.0 / 3.0, Some(Branch::D1)).unwrap();
        assert!((d - 2.0).abs() < 1e-12);
    }

    #[test]
    fn hs_relation_matches_printed_phase_damping_form() {
        let c = case(ChannelKind::PhaseDamping, Norm::HilbertSchmidt, sample_state());
        let [a1, a2, a3] = sample_state().abs();
        for i in 0..=29 {
            let p = i as f64 * 0.01;
            let r = evolved_vector(ChannelKind::PhaseDamping, &sample_state(), p).unwrap();
            let e = hs_entanglement(&r).value;
            let factor = ((3.0 * e).sqrt() - a3 + 1.0) / (a1 + a2);
            let printed = match hs_discord(&r).branch.unwrap() {
                Branch::D1 => a2 * a2 * factor * factor + a3 * a3,
                Branch::D3 => (a1 * a1 + a2 * a2) * factor * factor,
                other => panic!("unexpected {other}"),
            };
            let ours = hs_discord_from_entanglement(&c, p, e, hs_discord(&r).branch).unwrap();
            assert!((ours - printed).abs() < 1e-12);
        }
    }

    #[test]
    fn trace_relation_examples() {
        let c = case(ChannelKind::PhaseDamping, Norm::Trace, sample_state());
        let d = trace_discord_from_concurrence(&c, 0.0, 0.31, Some(Branch::M2), Some(Branch::C2)).unwrap();
        assert!((d - 0.59).abs() < 1e-12);
        // printed form with the (r1 + r2, 1 + r3) pairing
        assert!((d - (2.0 * 0.31 + (1.0f64 - 0.38).abs()) / (0.65f64 + 0.59).abs() * 0.59).abs() < 1e-12);

        let c = case(ChannelKind::Depolarizing, Norm::Trace, sample_state());
        let d = trace_discord_from_concurrence(&c, 0.0, 0.31, Some(Branch::M2), Some(Branch::C2)).unwrap();
        assert!((d - 0.59 * (2.0 * 0.31 + 1.0) / (1.24 + 0.38)).abs() < 1e-12);
        assert!((d - 0.59).abs() < 1e-12);

        let c = case(ChannelKind::PhaseDamping, Norm::Trace, sample_state());
        let p_sd = sudden_death_time(&c).unwrap();
        let at_death = evolved_vector(ChannelKind::PhaseDamping, &sample_state(), p_sd).unwrap();
        let direct = trace_discord(&at_death);
        let d = trace_discord_from_concurrence(&c, p_sd, 0.0, direct.branch, Some(Branch::C2)).unwrap();
        assert!((d - direct.value).abs() < 1e-12);
    }

    #[test]
    fn relation_errors() {
        let c = case(ChannelKind::PhaseDamping, Norm::HilbertSchmidt, sample_state());
        assert_eq!(hs_discord_from_entanglement(&c, 0.0, 0.1, None), Err(Error::BranchUnknown));
        assert!(matches!(hs_discord_from_entanglement(&c, 0.5, 0.0, Some(Branch::D3)), Err(Error::WindowViolation(_))));
        // D3 is not active at p = 0
        assert!(matches!(
            hs_discord_from_entanglement(&c, 0.0, 0.128, Some(Branch::D3)),
            Err(Error::WindowViolation(_))
        ));
        let c = case(ChannelKind::PhaseDamping, Norm::Trace, sample_state());
        assert_eq!(trace_discord_from_concurrence(&c, 0.0, 0.31, Some(Branch::M2), None), Err(Error::BranchUnknown));
        assert!(matches!(
            trace_discord_from_concurrence(&c, 0.0, 0.31, Some(Branch::M2), Some(Branch::C1)),
            Err(Error::WindowViolation(_))
        ));
        let sep = case(ChannelKind::PhaseDamping, Norm::Trace, CorrelationVector::new(0.2, 0.1, 0.05).unwrap());
        assert_eq!(
            trace_discord_from_concurrence(&sep, 0.0, 0.0, Some(Branch::M2), Some(Branch::C1)),
            Err(Error::NotEntangled)
        );
    }

    #[test]
    fn piecewise_pd_trace_examples() {
        let d = piecewise_discord_pd_trace(0.1, &sample_state()).unwrap();
        assert!((d - 0.4779).abs() < 1e-12);
        assert_eq!(piecewise_discord_pd_trace(0.21, &sample_state()).unwrap(), 0.38);
        assert!((piecewise_discord_pd_trace(0.3, &sample_state()).unwrap() - 0.3185).abs() < 1e-12);
        for i in 0..=1000 {
            let p = i as f64 / 1000.0;
            let direct = trace_discord(&evolved_vector(ChannelKind::PhaseDamping, &sample_state(), p).unwrap()).value;
            assert!((piecewise_discord_pd_trace(p, &sample_state()).unwrap() - direct).abs() < 1e-15, "p={p}");
        }
    }

    #[test]
    fn cross_norm_alignment_and_death_coincidence() {
        let r = CorrelationVector::new(-0.5, 0.7, 0.3).unwrap();
        let hs = critical_times(&case(ChannelKind::PhaseDamping, Norm::HilbertSchmidt, r)).unwrap();
        let tr = critical_times(&case(ChannelKind::PhaseDamping, Norm::Trace, r)).unwrap();
        // |r3| < |r1| < |r2|: trace sees both crossings, HS only the one of r2
        assert_eq!(tr.sudden_changes.len(), 2);
        assert_eq!(hs.sudden_changes.len(), 1);
        assert!((tr.sudden_changes[1] - hs.sudden_changes[0]).abs() < 1e-12);
        assert!((tr.sudden_death.unwrap() - hs.sudden_death.unwrap()).abs() < 1e-12);
        assert_eq!(concurrence_x(&bd_to_xstate(&r)).branch, Some(Branch::C1));
    }

    #[test]
    fn bit_flip_mirrors_phase_damping_under_index_swap() {
        let r = sample_state();
        let c = r.components();
        let swapped13 = CorrelationVector::from_array([c[2], c[1], c[0]]).unwrap();
        let swapped23 = CorrelationVector::from_array([c[0], c[2], c[1]]).unwrap();
        for norm in [Norm::HilbertSchmidt, Norm::Trace] {
            let pd13 = critical_times(&case(ChannelKind::PhaseDamping, norm, swapped13)).unwrap();
            let bf = critical_times(&case(ChannelKind::BitFlip, norm, r)).unwrap();
            assert_eq!(pd13.sudden_changes.len(), bf.sudden_changes.len());
            for (a, b) in pd13.sudden_changes.iter().zip(&bf.sudden_changes) {
                assert!((a - b).abs() < 1e-15);
            }
            assert!((pd13.sudden_death.unwrap() - bf.sudden_death.unwrap()).abs() < 1e-12);

            let pd23 = critical_times(&case(ChannelKind::PhaseDamping, norm, swapped23)).unwrap();
            let bpf = critical_times(&case(ChannelKind::BitPhaseFlip, norm, r)).unwrap();
            assert_eq!(pd23.sudden_changes, bpf.sudden_changes);
        }
    }

    #[test]
    fn phase_flip_events_are_mirrored() {
        let t = critical_times(&case(ChannelKind::PhaseFlip, Norm::HilbertSchmidt, sample_state())).unwrap();
        assert_eq!(t.sudden_changes.len(), 2);
        assert!((t.sudden_changes[0] + t.sudden_changes[1] - 1.0).abs() < 1e-15);
        let q = (0.38f64 / 0.65).sqrt();
        assert!((t.sudden_changes[0] - (1.0 - q) / 2.0).abs() < 1e-15);
        assert!((t.sudden_death.unwrap() - (1.0 - 0.5f64.sqrt()) / 2.0).abs() < 1e-12);
    }
}
