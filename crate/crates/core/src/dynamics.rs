//! Trajectories over the channel parameter, numerical event detection, and
//! contractivity monitoring.

use serde::{Deserialize, Serialize};

use crate::channels::{self, kraus_for, ChannelKind};
use crate::error::{Error, Result};
use crate::linalg;
use crate::oracles::{self, Norm};
use crate::quantifiers::{self, Branch};
use crate::relations::{self, RelationCase};
use crate::states::{bd_to_density, bd_to_xstate, CorrelationVector, XState};

pub const DEFAULT_SAMPLES: usize = 1001;

/// Concurrence values at or below this count as zero when sampling.
pub const DEATH_TOLERANCE: f64 = 1e-10;

/// Branch values closer than this are tied.
const TIE_TOLERANCE: f64 = 1e-12;

/// Bisection stops once the bracket is narrower than this.
const BISECTION_WIDTH: f64 = 1e-13;

/// Detected events closer than this to an analytic value get paired with it.
const MATCH_WINDOW: f64 = 1e-4;

pub const CONTRACTIVITY_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    pub p: f64,
    pub r: CorrelationVector,
    pub e_hs: f64,
    pub d_hs: f64,
    pub concurrence: f64,
    pub d_tr: f64,
    pub branch_hs: Branch,
    pub branch_tr: Branch,
    pub branch_concurrence: Option<Branch>,
}

impl Sample {
    fn at(channel: ChannelKind, initial: &CorrelationVector, p: f64) -> Self {
        let r = channels::evolve_unchecked(channel, initial, p);
        let hs = quantifiers::hs_discord(&r);
        let tr = quantifiers::trace_discord(&r);
        let conc = quantifiers::concurrence_x(&bd_to_xstate(&r));
        Sample {
            p,
            r,
            e_hs: quantifiers::hs_entanglement(&r).value,
            d_hs: hs.value,
            concurrence: conc.value,
            d_tr: tr.value,
            branch_hs: hs.branch.expect("hs discord always has a branch"),
            branch_tr: tr.branch.expect("trace discord always has a branch"),
            branch_concurrence: conc.branch,
        }
    }

    pub fn entanglement(&self, norm: Norm) -> f64 {
        match norm {
            Norm::HilbertSchmidt => self.e_hs,
            Norm::Trace => self.concurrence,
        }
    }

    pub fn discord(&self, norm: Norm) -> f64 {
        match norm {
            Norm::HilbertSchmidt => self.d_hs,
            Norm::Trace => self.d_tr,
        }
    }

    pub fn discord_branch(&self, norm: Norm) -> Branch {
        match norm {
            Norm::HilbertSchmidt => self.branch_hs,
            Norm::Trace => self.branch_tr,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EventKind {
    SuddenChangeDiscord,
    SuddenDeathEntanglement,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EventRecord {
    pub kind: EventKind,
    pub norm: Norm,
    pub p_detected: f64,
    pub p_analytic: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trajectory {
    pub channel: ChannelKind,
    pub initial: CorrelationVector,
    pub p_max: f64,
    pub samples: Vec<Sample>,
    pub events: Vec<EventRecord>,
}

impl Trajectory {
    pub fn events_of(&self, kind: EventKind, norm: Norm) -> impl Iterator<Item = &EventRecord> {
        self.events.iter().filter(move |e| e.kind == kind && e.norm == norm)
    }

    pub fn sudden_changes(&self, norm: Norm) -> Vec<f64> {
        self.events_of(EventKind::SuddenChangeDiscord, norm).map(|e| e.p_detected).collect()
    }

    pub fn sudden_death(&self, norm: Norm) -> Option<f64> {
        self.events_of(EventKind::SuddenDeathEntanglement, norm).map(|e| e.p_detected).next()
    }
}

fn uniform_grid(p_max: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| if i + 1 == n { p_max } else { p_max * i as f64 / (n - 1) as f64 }).collect()
}

fn check_grid(p_max: f64, n_samples: usize) -> Result<()> {
    if !(p_max > 0.0 && p_max <= 1.0) {
        return Err(Error::OutOfRange { name: "p_max", value: p_max });
    }
    if n_samples < 2 {
        return Err(Error::Config(format!("need at least 2 samples, got {n_samples}")));
    }
    Ok(())
}

/// Components whose discord branch attains the optimum, with ties.
fn branch_set(norm: Norm, r: &CorrelationVector) -> [bool; 3] {
    match norm {
        Norm::HilbertSchmidt => {
            let terms = quantifiers::hs_discord_terms(r);
            let min = terms.iter().copied().fold(f64::INFINITY, f64::min);
            terms.map(|t| t - min <= TIE_TOLERANCE)
        }
        Norm::Trace => {
            let a = r.abs();
            let median = quantifiers::trace_discord(r).value;
            a.map(|x| (x - median).abs() <= TIE_TOLERANCE)
        }
    }
}

fn intersect(a: [bool; 3], b: [bool; 3]) -> [bool; 3] {
    [a[0] && b[0], a[1] && b[1], a[2] && b[2]]
}

fn is_empty(s: [bool; 3]) -> bool {
    !s.iter().any(|&x| x)
}

/// Smallest `p` in `[lo, hi]` where `pred` turns true, assuming it is false
/// at `lo`, true at `hi`, and switches once.
fn bisect<F: Fn(f64) -> bool>(pred: F, mut lo: f64, mut hi: f64) -> f64 {
    while hi - lo > BISECTION_WIDTH {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if pred(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Sudden changes show up as the set of optimal branches jumping to a
/// disjoint set between consecutive samples. Ties keep the intersection, so
/// a crossing that lands exactly on a sample, or a total tie at `q = 0`, does
/// not fire spuriously.
fn detect_discord_changes(
    channel: ChannelKind,
    initial: &CorrelationVector,
    samples: &[Sample],
    norm: Norm,
) -> Vec<f64> {
    let set_at = |p: f64| branch_set(norm, &channels::evolve_unchecked(channel, initial, p));
    let mut events = Vec::new();
    let mut committed = branch_set(norm, &samples[0].r);
    let mut last = samples[0].p;
    for s in &samples[1..] {
        let current = branch_set(norm, &s.r);
        let common = intersect(committed, current);
        if is_empty(common) {
            let previous = committed;
            events.push(bisect(|p| is_empty(intersect(set_at(p), previous)), last, s.p));
            committed = current;
        } else {
            committed = common;
        }
        last = s.p;
    }
    events
}

fn entanglement_margin(norm: Norm, r: &CorrelationVector) -> f64 {
    match norm {
        Norm::HilbertSchmidt => r.l1_norm() - 1.0,
        Norm::Trace => quantifiers::concurrence_margin(&bd_to_xstate(r)),
    }
}

fn detect_sudden_death(
    channel: ChannelKind,
    initial: &CorrelationVector,
    samples: &[Sample],
    norm: Norm,
) -> Option<f64> {
    let margin_at = |p: f64| entanglement_margin(norm, &channels::evolve_unchecked(channel, initial, p));
    let dead = |s: &Sample| match norm {
        Norm::HilbertSchmidt => entanglement_margin(norm, &s.r) <= 0.0,
        Norm::Trace => s.concurrence <= DEATH_TOLERANCE,
    };
    if dead(&samples[0]) {
        return None;
    }
    let k = samples.iter().position(dead)?;
    Some(bisect(|p| margin_at(p) <= 0.0, samples[k - 1].p, samples[k].p))
}

fn nearest(analytic: &[f64], p: f64) -> Option<f64> {
    analytic
        .iter()
        .copied()
        .filter(|a| (a - p).abs() <= MATCH_WINDOW)
        .min_by(|a, b| (a - p).abs().total_cmp(&(b - p).abs()))
}

/// Samples every quantifier on a uniform grid `p ∈ [0, p_max]` and detects
/// discord sudden changes and entanglement sudden death for both norms,
/// refining each by bisection.
pub fn run_trajectory(
    channel: ChannelKind,
    r0: &CorrelationVector,
    p_max: f64,
    n_samples: usize,
) -> Result<Trajectory> {
    check_grid(p_max, n_samples)?;
    let samples: Vec<Sample> = uniform_grid(p_max, n_samples).into_iter().map(|p| Sample::at(channel, r0, p)).collect();

    let mut events = Vec::new();
    for norm in [Norm::HilbertSchmidt, Norm::Trace] {
        let analytic = relations::critical_times(&RelationCase::new(channel, norm, *r0)).ok();
        let changes: Vec<f64> = analytic.as_ref().map(|a| a.sudden_changes.clone()).unwrap_or_default();
        for p in detect_discord_changes(channel, r0, &samples, norm) {
            events.push(EventRecord {
                kind: EventKind::SuddenChangeDiscord,
                norm,
                p_detected: p,
                p_analytic: nearest(&changes, p),
            });
        }
        if let Some(p) = detect_sudden_death(channel, r0, &samples, norm) {
            // the death parameter does not need a strict ordering
            let death = relations::sudden_death_time(&RelationCase::new(channel, norm, *r0)).ok();
            events.push(EventRecord {
                kind: EventKind::SuddenDeathEntanglement,
                norm,
                p_detected: p,
                p_analytic: death.and_then(|d| nearest(&[d], p)),
            });
        }
    }
    Ok(Trajectory { channel, initial: *r0, p_max, samples, events })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    pub p: f64,
    pub entanglement: f64,
    pub discord: f64,
    pub branch: Branch,
}

/// Discord as a function of entanglement over the entangled window
/// `[0, p_SD]` (or `[0, p_max]` if entanglement survives).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DvECurve {
    pub norm: Norm,
    pub points: Vec<CurvePoint>,
    /// Parameters of the discord sudden changes inside the window.
    pub kinks: Vec<f64>,
    pub sudden_death: Option<f64>,
}

pub fn d_vs_e_curve(traj: &Trajectory, norm: Norm) -> Result<DvECurve> {
    let first = traj.samples.first().ok_or(Error::EmptyWindow)?;
    if first.entanglement(norm) <= 0.0 {
        return Err(Error::EmptyWindow);
    }
    let death = traj.sudden_death(norm);
    let end = death.unwrap_or(traj.p_max);
    let point = |s: &Sample| CurvePoint {
        p: s.p,
        entanglement: s.entanglement(norm),
        discord: s.discord(norm),
        branch: s.discord_branch(norm),
    };
    let mut points: Vec<CurvePoint> = traj.samples.iter().take_while(|s| s.p <= end).map(point).collect();
    if let Some(p_sd) = death {
        if points.last().is_some_and(|pt| pt.p < p_sd) {
            let mut at_death = point(&Sample::at(traj.channel, &traj.initial, p_sd));
            // the bisected parameter sits within 1e-13 of the zero
            at_death.entanglement = 0.0;
            points.push(at_death);
        }
    }
    let kinks = traj.sudden_changes(norm).into_iter().filter(|&p| p < end).collect();
    Ok(DvECurve { norm, points, kinks, sudden_death: death })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContractivityReport {
    pub channel: ChannelKind,
    pub pairs: usize,
    pub grid_points: usize,
    /// Largest increase of the Hilbert-Schmidt distance between consecutive
    /// grid points (negative if every step decreased it).
    pub max_increase_hs: f64,
    pub max_increase_trace: f64,
    /// Steps whose increase exceeds [`CONTRACTIVITY_TOLERANCE`].
    pub violations: usize,
    pub worst_pair: Option<usize>,
}

/// Evolves each pair through the Kraus pipeline along `p_grid` and checks
/// that both distances are non-increasing.
pub fn contractivity_scan(
    channel: ChannelKind,
    pairs: &[(CorrelationVector, CorrelationVector)],
    p_grid: &[f64],
) -> Result<ContractivityReport> {
    let maps = p_grid.iter().map(|&p| kraus_for(channel, p)).collect::<Result<Vec<_>>>()?;
    let mut report = ContractivityReport {
        channel,
        pairs: pairs.len(),
        grid_points: p_grid.len(),
        max_increase_hs: f64::NEG_INFINITY,
        max_increase_trace: f64::NEG_INFINITY,
        violations: 0,
        worst_pair: None,
    };
    let mut worst = f64::NEG_INFINITY;
    for (idx, (r, s)) in pairs.iter().enumerate() {
        let (rho, sigma) = (bd_to_density(r), bd_to_density(s));
        let mut previous: Option<(f64, f64)> = None;
        for map in &maps {
            let delta = map.apply_local_pair(&rho).matrix() - map.apply_local_pair(&sigma).matrix();
            let d_hs = 4.0 * linalg::frobenius_sq(&delta);
            let d_tr = oracles::trace_norm(&delta)?;
            if let Some((prev_hs, prev_tr)) = previous {
                let (inc_hs, inc_tr) = (d_hs - prev_hs, d_tr - prev_tr);
                report.max_increase_hs = report.max_increase_hs.max(inc_hs);
                report.max_increase_trace = report.max_increase_trace.max(inc_tr);
                report.violations += [inc_hs, inc_tr].iter().filter(|&&x| x > CONTRACTIVITY_TOLERANCE).count();
                if inc_hs.max(inc_tr) > worst {
                    worst = inc_hs.max(inc_tr);
                    report.worst_pair = Some(idx);
                }
            }
            previous = Some((d_hs, d_tr));
        }
    }
    Ok(report)
}

/// `n` evenly spaced parameters over the channel's monotone range.
pub fn monotone_grid(channel: ChannelKind, n: usize) -> Vec<f64> {
    let (lo, hi) = channel.monotone_range();
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1).max(1) as f64).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct XSample {
    pub p: f64,
    pub state: XState,
    pub concurrence: f64,
    pub branch: Option<Branch>,
}

/// Trajectory of a general X state. Every channel here is a Pauli channel
/// on each qubit and so keeps the X pattern; the state is pushed through
/// the Kraus maps numerically.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct XTrajectory {
    pub channel: ChannelKind,
    pub initial: XState,
    pub samples: Vec<XSample>,
    pub sudden_death: Option<f64>,
}

fn evolve_x(channel: ChannelKind, x: &XState, p: f64) -> Result<XState> {
    let map = kraus_for(channel, p)?;
    XState::from_density(&map.apply_local_pair(&x.to_density()))
}

pub fn run_x_trajectory(channel: ChannelKind, x0: &XState, p_max: f64, n_samples: usize) -> Result<XTrajectory> {
    check_grid(p_max, n_samples)?;
    let samples = uniform_grid(p_max, n_samples)
        .into_iter()
        .map(|p| {
            let state = evolve_x(channel, x0, p)?;
            let c = quantifiers::concurrence_x(&state);
            Ok(XSample { p, state, concurrence: c.value, branch: c.branch })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut sudden_death = None;
    if samples[0].concurrence > DEATH_TOLERANCE {
        if let Some(k) = samples.iter().position(|s| s.concurrence <= DEATH_TOLERANCE) {
            let margin_at = |p: f64| evolve_x(channel, x0, p).map_or(f64::NAN, |x| quantifiers::concurrence_margin(&x));
            sudden_death = Some(bisect(|p| margin_at(p) <= 0.0, samples[k - 1].p, samples[k].p));
        }
    }
    Ok(XTrajectory { channel, initial: *x0, samples, sudden_death })
}
