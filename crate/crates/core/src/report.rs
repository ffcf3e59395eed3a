//! CSV and JSON writers for trajectories, curves and relation tables.
//!
//! Floating-point columns are written with 17 significant digits so that a
//! file read back reproduces every value bit for bit.

use std::io::Write;

use serde::Serialize;

use crate::channels::ChannelKind;
use crate::dynamics::{self, DvECurve, EventRecord, Trajectory, XTrajectory};
use crate::error::Result;
use crate::oracles::Norm;
use crate::quantifiers::Branch;
use crate::relations::{self, RelationCase};

pub const TRAJECTORY_HEADER: [&str; 10] =
    ["p", "r1", "r2", "r3", "E_hs", "D_hs", "C", "D_tr", "branch_hs", "branch_tr"];
pub const RELATION_HEADER: [&str; 7] = ["norm", "p", "E", "D", "D_relation", "branch", "extrapolated"];
pub const CURVE_HEADER: [&str; 5] = ["norm", "p", "E", "D", "branch"];
pub const X_TRAJECTORY_HEADER: [&str; 11] = ["p", "a", "b", "c", "d", "e_re", "e_im", "f_re", "f_im", "C", "branch"];

pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn fmt_branch(b: Option<Branch>) -> String {
    b.map_or_else(|| "none".to_string(), |b| b.to_string())
}

pub fn write_trajectory_csv<W: Write>(traj: &Trajectory, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(TRAJECTORY_HEADER)?;
    for s in &traj.samples {
        let [r1, r2, r3] = s.r.components();
        let mut row: Vec<String> = [s.p, r1, r2, r3, s.e_hs, s.d_hs, s.concurrence, s.d_tr].map(fmt_f64).to_vec();
        row.push(s.branch_hs.to_string());
        row.push(s.branch_tr.to_string());
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct EventsFile<'a> {
    events: &'a [EventRecord],
}

/// Sidecar `{"events": [{kind, norm, p_detected, p_analytic}]}`.
pub fn write_events_json<W: Write>(traj: &Trajectory, mut out: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, &EventsFile { events: &traj.events })?;
    writeln!(out)?;
    Ok(())
}

/// One sample of the discord-versus-entanglement relation: the directly
/// computed discord next to the value recovered from the entanglement.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RelationRow {
    pub norm: Norm,
    pub p: f64,
    pub entanglement: f64,
    pub discord: f64,
    pub discord_relation: f64,
    pub branch: Branch,
    /// Segment not covered by the printed relations: every phase-flip
    /// segment, and trace-norm segments after the moving components cross
    /// a fixed intermediate one.
    pub extrapolated: bool,
}

fn is_extrapolated(case: &RelationCase, branch: Branch) -> bool {
    match (case.channel, case.norm) {
        (ChannelKind::PhaseFlip, _) => true,
        (ChannelKind::Depolarizing, _) | (_, Norm::HilbertSchmidt) => false,
        (channel, Norm::Trace) => {
            let scaled = channel.scaled_components();
            let mid = case.ordering.0[1];
            !scaled[mid] && branch.axis() != Some(mid)
        }
    }
}

/// Relation rows along the entangled window of `traj`.
pub fn relation_rows(traj: &Trajectory, norm: Norm) -> Result<Vec<RelationRow>> {
    let curve = dynamics::d_vs_e_curve(traj, norm)?;
    let case = RelationCase::new(traj.channel, norm, traj.initial);
    let concurrence_branch = traj.samples[0].branch_concurrence;
    curve
        .points
        .iter()
        .map(|pt| {
            let discord_relation = match norm {
                Norm::HilbertSchmidt => {
                    relations::hs_discord_from_entanglement(&case, pt.p, pt.entanglement, Some(pt.branch))?
                }
                Norm::Trace => relations::trace_discord_from_concurrence(
                    &case,
                    pt.p,
                    pt.entanglement,
                    Some(pt.branch),
                    concurrence_branch,
                )?,
            };
            Ok(RelationRow {
                norm,
                p: pt.p,
                entanglement: pt.entanglement,
                discord: pt.discord,
                discord_relation,
                branch: pt.branch,
                extrapolated: is_extrapolated(&case, pt.branch),
            })
        })
        .collect()
}

pub fn write_relation_csv<W: Write>(rows: &[RelationRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(RELATION_HEADER)?;
    for r in rows {
        w.write_record([
            r.norm.to_string(),
            fmt_f64(r.p),
            fmt_f64(r.entanglement),
            fmt_f64(r.discord),
            fmt_f64(r.discord_relation),
            r.branch.to_string(),
            r.extrapolated.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_curve_csv<W: Write>(curves: &[DvECurve], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CURVE_HEADER)?;
    for curve in curves {
        for pt in &curve.points {
            w.write_record([
                curve.norm.to_string(),
                fmt_f64(pt.p),
                fmt_f64(pt.entanglement),
                fmt_f64(pt.discord),
                pt.branch.to_string(),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn write_x_trajectory_csv<W: Write>(traj: &XTrajectory, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(X_TRAJECTORY_HEADER)?;
    for s in &traj.samples {
        let [a, b, c, d] = s.state.populations();
        let (e, f) = (s.state.e(), s.state.f());
        let mut row: Vec<String> = [s.p, a, b, c, d, e.re, e.im, f.re, f.im, s.concurrence].map(fmt_f64).to_vec();
        row.push(fmt_branch(s.branch));
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}
