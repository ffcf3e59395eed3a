//! Local single-qubit noise channels in Kraus form, applied identically and
//! independently to both qubits.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, c, Mat2, Mat4};
use crate::states::{CorrelationVector, DensityMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ChannelKind {
    PhaseDamping,
    BitFlip,
    BitPhaseFlip,
    PhaseFlip,
    Depolarizing,
}

impl ChannelKind {
    pub const ALL: [ChannelKind; 5] = [
        ChannelKind::PhaseDamping,
        ChannelKind::BitFlip,
        ChannelKind::BitPhaseFlip,
        ChannelKind::PhaseFlip,
        ChannelKind::Depolarizing,
    ];

    /// Short name used on the command line.
    pub fn short_name(self) -> &'static str {
        match self {
            ChannelKind::PhaseDamping => "pd",
            ChannelKind::BitFlip => "bf",
            ChannelKind::BitPhaseFlip => "bpf",
            ChannelKind::PhaseFlip => "pf",
            ChannelKind::Depolarizing => "depol",
        }
    }

    /// Which correlation components shrink under the channel. The rest are
    /// left untouched.
    pub fn scaled_components(self) -> [bool; 3] {
        match self {
            ChannelKind::PhaseDamping | ChannelKind::PhaseFlip => [true, true, false],
            ChannelKind::BitFlip => [false, true, true],
            ChannelKind::BitPhaseFlip => [true, false, true],
            ChannelKind::Depolarizing => [true, true, true],
        }
    }

    /// Factor multiplying every scaled component at parameter `p`:
    /// `(1−p)²`, or `(1−2p)²` for the phase flip.
    pub fn scale_factor(self, p: f64) -> f64 {
        match self {
            ChannelKind::PhaseFlip => (1.0 - 2.0 * p).powi(2),
            _ => (1.0 - p).powi(2),
        }
    }

    /// Smallest `p` with `scale_factor(p) == q`, for `q` in `[0, 1]`.
    pub fn parameter_for_scale(self, q: f64) -> f64 {
        match self {
            ChannelKind::PhaseFlip => (1.0 - q.sqrt()) / 2.0,
            _ => 1.0 - q.sqrt(),
        }
    }

    /// Parameter range on which the scale factor is non-increasing, so that
    /// larger `p` always means more noise. The phase flip turns back into a
    /// unitary (σ₃ conjugation) past `p = 1/2`.
    pub fn monotone_range(self) -> (f64, f64) {
        match self {
            ChannelKind::PhaseFlip => (0.0, 0.5),
            _ => (0.0, 1.0),
        }
    }
}

impl fmt::Display for ChannelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for ChannelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ChannelKind::ALL
            .into_iter()
            .find(|k| k.short_name() == s)
            .ok_or_else(|| Error::Config(format!("unknown channel `{s}` (expected pd, bf, bpf, pf or depol)")))
    }
}

/// Command-line channel description: `pd`, `pd:0.3`, `depol:1`, ...
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelSpec {
    pub kind: ChannelKind,
    pub p: Option<f64>,
}

impl FromStr for ChannelSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, p) = match s.split_once(':') {
            Some((name, p)) => {
                let p: f64 =
                    p.trim().parse().map_err(|_| Error::Config(format!("channel parameter `{p}` is not a number")))?;
                check_probability(p).map_err(|e| Error::Config(e.to_string()))?;
                (name, Some(p))
            }
            None => (s, None),
        };
        Ok(ChannelSpec { kind: name.trim().parse()?, p })
    }
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::OutOfRange { name: "p", value: p })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct KrausChannel {
    kind: ChannelKind,
    p: f64,
    operators: Vec<Mat2>,
}

impl KrausChannel {
    pub fn kind(&self) -> ChannelKind {
        self.kind
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn operators(&self) -> &[Mat2] {
        &self.operators
    }

    /// Largest entry of `Σ K†K − I`.
    pub fn completeness_defect(&self) -> f64 {
        let sum: Mat2 = self.operators.iter().map(|k| k.adjoint() * k).sum();
        (sum - linalg::identity2()).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn apply_local_pair(&self, rho: &DensityMatrix) -> DensityMatrix {
        apply_local_pair(rho, self)
    }
}

/// Hadamard, swaps σ₁ and σ₃.
fn hadamard() -> Mat2 {
    (linalg::pauli(1) + linalg::pauli(3)) * c(std::f64::consts::FRAC_1_SQRT_2, 0.0)
}

/// `(σ₂ + σ₃)/√2`, swaps σ₂ and σ₃.
fn y_z_swap() -> Mat2 {
    (linalg::pauli(2) + linalg::pauli(3)) * c(std::f64::consts::FRAC_1_SQRT_2, 0.0)
}

fn phase_damping_set(p: f64) -> Vec<Mat2> {
    let sq = p.sqrt();
    vec![
        linalg::identity2() * c((1.0 - p).sqrt(), 0.0),
        Mat2::new(c(sq, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)),
        Mat2::new(c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(sq, 0.0)),
    ]
}

pub fn kraus_for(kind: ChannelKind, p: f64) -> Result<KrausChannel> {
    check_probability(p)?;
    let conjugate = |u: Mat2| phase_damping_set(p).into_iter().map(|k| u * k * u).collect();
    let operators = match kind {
        ChannelKind::PhaseDamping => phase_damping_set(p),
        ChannelKind::BitFlip => conjugate(hadamard()),
        ChannelKind::BitPhaseFlip => conjugate(y_z_swap()),
        ChannelKind::PhaseFlip => {
            vec![linalg::identity2() * c((1.0 - p).sqrt(), 0.0), linalg::pauli(3) * c(p.sqrt(), 0.0)]
        }
        ChannelKind::Depolarizing => {
            let w = c((p / 4.0).sqrt(), 0.0);
            vec![
                linalg::identity2() * c((1.0 - 0.75 * p).sqrt(), 0.0),
                linalg::pauli(1) * w,
                linalg::pauli(2) * w,
                linalg::pauli(3) * w,
            ]
        }
    };
    Ok(KrausChannel { kind, p, operators })
}

/// `ρ ↦ Σ_{m,n} (K_m ⊗ K_n) ρ (K_m ⊗ K_n)†`.
pub fn apply_local_pair(rho: &DensityMatrix, channel: &KrausChannel) -> DensityMatrix {
    let mut out = Mat4::zeros();
    for ka in &channel.operators {
        for kb in &channel.operators {
            let k = linalg::kron(ka, kb);
            out += k * rho.matrix() * k.adjoint();
        }
    }
    DensityMatrix::new_unchecked(out)
}

/// Closed-form correlation vector after both qubits pass through the
/// channel: scaled components pick up [`ChannelKind::scale_factor`].
pub fn evolved_vector(kind: ChannelKind, r: &CorrelationVector, p: f64) -> Result<CorrelationVector> {
    check_probability(p)?;
    Ok(evolve_unchecked(kind, r, p))
}

pub(crate) fn evolve_unchecked(kind: ChannelKind, r: &CorrelationVector, p: f64) -> CorrelationVector {
    let q = kind.scale_factor(p);
    let scaled = kind.scaled_components();
    let comps = r.components();
    CorrelationVector::new_unchecked([0, 1, 2].map(|k| if scaled[k] { comps[k] * q } else { comps[k] }))
}
