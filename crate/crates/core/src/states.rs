//! Bell-diagonal and X-form two-qubit states.
//!
//! A Bell-diagonal state is `ρ = (I₄ + Σ_j r_j σ_j⊗σ_j) / 4` and is fully
//! described by its correlation vector `r`. Physical vectors fill the
//! tetrahedron with vertices at the four Bell states; separable ones fill the
//! inscribed octahedron `|r₁|+|r₂|+|r₃| ≤ 1`; zero-discord ones lie on the
//! coordinate axes.
//!
//! Basis order is `|00⟩, |01⟩, |10⟩, |11⟩` throughout.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, c, Mat4, C64};

/// Slack allowed on eigenvalues, traces and coherence bounds.
pub const PSD_TOLERANCE: f64 = 1e-12;

/// Sign patterns `s` of the Bell-basis eigenvalues `(1 + s·r)/4`.
/// Each pattern has `s₁s₂s₃ = -1`; the order is `Φ⁺, Φ⁻, Ψ⁺, Ψ⁻`.
pub const BELL_SIGN_PATTERNS: [[f64; 3]; 4] =
    [[1.0, -1.0, 1.0], [-1.0, 1.0, 1.0], [1.0, 1.0, -1.0], [-1.0, -1.0, -1.0]];

/// The correlation triple `r_j = Tr(ρ σ_j⊗σ_j)` of a Bell-diagonal state.
///
/// Construction checks physicality, so every value of this type lies in the
/// tetrahedron (up to [`PSD_TOLERANCE`]).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "CorrelationJson", into = "CorrelationJson")]
pub struct CorrelationVector([f64; 3]);

#[derive(Serialize, Deserialize)]
struct CorrelationJson {
    r: [f64; 3],
}

impl TryFrom<CorrelationJson> for CorrelationVector {
    type Error = Error;

    fn try_from(json: CorrelationJson) -> Result<Self> {
        CorrelationVector::from_array(json.r)
    }
}

impl From<CorrelationVector> for CorrelationJson {
    fn from(r: CorrelationVector) -> Self {
        CorrelationJson { r: r.0 }
    }
}

impl CorrelationVector {
    pub fn new(r1: f64, r2: f64, r3: f64) -> Result<Self> {
        Self::from_array([r1, r2, r3])
    }

    pub fn from_array(r: [f64; 3]) -> Result<Self> {
        if r.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidState(format!("non-finite correlation vector {r:?}")));
        }
        let min_eigenvalue = bell_eigenvalues(&r).into_iter().fold(f64::INFINITY, f64::min);
        if min_eigenvalue < -PSD_TOLERANCE {
            return Err(Error::NonPhysical { min_eigenvalue });
        }
        Ok(Self(r))
    }

    /// For vectors produced by maps known to preserve the tetrahedron.
    pub(crate) fn new_unchecked(r: [f64; 3]) -> Self {
        debug_assert!(bell_eigenvalues(&r).iter().all(|&l| l >= -1e-9), "vector {r:?} left the tetrahedron");
        Self(r)
    }

    pub fn maximally_mixed() -> Self {
        Self([0.0; 3])
    }

    pub fn components(&self) -> [f64; 3] {
        self.0
    }

    pub fn r1(&self) -> f64 {
        self.0[0]
    }

    pub fn r2(&self) -> f64 {
        self.0[1]
    }

    pub fn r3(&self) -> f64 {
        self.0[2]
    }

    pub fn abs(&self) -> [f64; 3] {
        self.0.map(f64::abs)
    }

    /// `|r₁| + |r₂| + |r₃|`; the state is entangled iff this exceeds 1.
    pub fn l1_norm(&self) -> f64 {
        self.abs().iter().sum()
    }

    /// Eigenvalues of the density matrix in the order of [`BELL_SIGN_PATTERNS`].
    pub fn bell_eigenvalues(&self) -> [f64; 4] {
        bell_eigenvalues(&self.0)
    }

    /// Squared Euclidean distance in correlation space.
    pub fn distance_sq(&self, other: &Self) -> f64 {
        self.0.iter().zip(other.0).map(|(a, b)| (a - b).powi(2)).sum()
    }
}

impl fmt::Display for CorrelationVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

fn bell_eigenvalues(r: &[f64; 3]) -> [f64; 4] {
    BELL_SIGN_PATTERNS.map(|s| (1.0 + s[0] * r[0] + s[1] * r[1] + s[2] * r[2]) / 4.0)
}

/// A validated two-qubit density matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix(Mat4);

impl DensityMatrix {
    /// Checks Hermiticity, unit trace and positivity, each within
    /// [`PSD_TOLERANCE`].
    pub fn new(m: Mat4) -> Result<Self> {
        let defect = linalg::hermiticity_defect(&m);
        if defect > PSD_TOLERANCE {
            return Err(Error::InvalidState(format!("matrix is not Hermitian (defect {defect:e})")));
        }
        let trace = m.trace();
        if (trace.re - 1.0).abs() > PSD_TOLERANCE || trace.im.abs() > PSD_TOLERANCE {
            return Err(Error::InvalidState(format!("trace {trace} differs from 1")));
        }
        let min_eigenvalue = linalg::hermitian_eigenvalues(&m)?[0];
        if min_eigenvalue < -PSD_TOLERANCE {
            return Err(Error::NonPhysical { min_eigenvalue });
        }
        Ok(Self(m))
    }

    pub(crate) fn new_unchecked(m: Mat4) -> Self {
        Self(m)
    }

    pub fn maximally_mixed() -> Self {
        Self(Mat4::identity() * c(0.25, 0.0))
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.0
    }

    pub fn eigenvalues(&self) -> Result<[f64; 4]> {
        linalg::hermitian_eigenvalues(&self.0)
    }

    pub fn partial_transpose(&self) -> Mat4 {
        linalg::partial_transpose(&self.0)
    }

    /// Positive partial transpose test, exact for two qubits.
    pub fn is_ppt(&self) -> Result<bool> {
        let min = linalg::hermitian_eigenvalues(&self.partial_transpose())?[0];
        Ok(min >= -PSD_TOLERANCE)
    }
}

/// `ρ = (I₄ + r·Σ) / 4`.
pub fn bd_to_density(r: &CorrelationVector) -> DensityMatrix {
    let mut m = Mat4::identity();
    for (k, rk) in r.components().into_iter().enumerate() {
        m += linalg::pauli_pair(k + 1) * c(rk, 0.0);
    }
    DensityMatrix::new_unchecked(m * c(0.25, 0.0))
}

/// Traces `Tr(ρ σ_j⊗σ_j)` for `j = 1, 2, 3`.
///
/// The result is only physical if `rho` is Bell-diagonal (or locally
/// equivalent to one); any other input still gets its three correlations
/// extracted, and fails the physicality check only if they leave the
/// tetrahedron. For a state that is not Bell-diagonal this is the
/// correlation vector of its Bell-diagonal twirl.
pub fn density_to_bd(rho: &DensityMatrix) -> Result<CorrelationVector> {
    let r = [1, 2, 3].map(|k| (rho.matrix() * linalg::pauli_pair(k)).trace().re);
    CorrelationVector::from_array(r)
}

/// Two-qubit state with support on the diagonal and anti-diagonal only:
///
/// ```text
/// ⎡a 0 0 e⎤
/// ⎢0 b f 0⎥
/// ⎢0 f̄ c 0⎥
/// ⎣ē 0 0 d⎦
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "XStateJson", into = "XStateJson")]
pub struct XState {
    diag: [f64; 4],
    e: C64,
    f: C64,
}

#[derive(Serialize, Deserialize)]
struct XStateJson {
    diag: [f64; 4],
    e: [f64; 2],
    f: [f64; 2],
}

impl TryFrom<XStateJson> for XState {
    type Error = Error;

    fn try_from(json: XStateJson) -> Result<Self> {
        XState::new(json.diag, c(json.e[0], json.e[1]), c(json.f[0], json.f[1]))
    }
}

impl From<XState> for XStateJson {
    fn from(x: XState) -> Self {
        XStateJson { diag: x.diag, e: [x.e.re, x.e.im], f: [x.f.re, x.f.im] }
    }
}

impl XState {
    pub fn new(diag: [f64; 4], e: C64, f: C64) -> Result<Self> {
        if diag.iter().chain([e.re, e.im, f.re, f.im].iter()).any(|x| !x.is_finite()) {
            return Err(Error::InvalidState("non-finite X-state entry".into()));
        }
        if let Some(&neg) = diag.iter().find(|&&p| p < -PSD_TOLERANCE) {
            return Err(Error::NonPhysical { min_eigenvalue: neg });
        }
        let total: f64 = diag.iter().sum();
        if (total - 1.0).abs() > PSD_TOLERANCE {
            return Err(Error::InvalidState(format!("populations sum to {total}, not 1")));
        }
        let x = Self { diag, e, f };
        if e.norm() > x.sqrt_ad() + PSD_TOLERANCE {
            return Err(Error::InvalidState(format!("|e| = {} exceeds sqrt(ad) = {}", e.norm(), x.sqrt_ad())));
        }
        if f.norm() > x.sqrt_bc() + PSD_TOLERANCE {
            return Err(Error::InvalidState(format!("|f| = {} exceeds sqrt(bc) = {}", f.norm(), x.sqrt_bc())));
        }
        Ok(x)
    }

    /// Reads the X entries of `rho`; entries outside the X pattern must vanish.
    pub fn from_density(rho: &DensityMatrix) -> Result<Self> {
        let m = rho.matrix();
        for row in 0..4 {
            for col in 0..4 {
                let on_x = row == col || row + col == 3;
                if !on_x && m[(row, col)].norm() > PSD_TOLERANCE {
                    return Err(Error::InvalidState(format!("entry ({row}, {col}) breaks the X pattern")));
                }
            }
        }
        Self::new([0, 1, 2, 3].map(|k| m[(k, k)].re), m[(0, 3)], m[(1, 2)])
    }

    pub fn populations(&self) -> [f64; 4] {
        self.diag
    }

    pub fn e(&self) -> C64 {
        self.e
    }

    pub fn f(&self) -> C64 {
        self.f
    }

    pub fn sqrt_ad(&self) -> f64 {
        (self.diag[0].max(0.0) * self.diag[3].max(0.0)).sqrt()
    }

    pub fn sqrt_bc(&self) -> f64 {
        (self.diag[1].max(0.0) * self.diag[2].max(0.0)).sqrt()
    }

    /// `a = d`, `b = c` and real coherences, up to [`PSD_TOLERANCE`].
    pub fn is_bell_diagonal(&self) -> bool {
        let [a, b, cc, d] = self.diag;
        [a - d, b - cc, self.e.im, self.f.im].iter().all(|x| x.abs() <= PSD_TOLERANCE)
    }

    /// Same populations, new coherences. No physicality check.
    pub(crate) fn with_coherences(&self, e: C64, f: C64) -> Self {
        Self { diag: self.diag, e, f }
    }

    pub fn to_matrix(&self) -> Mat4 {
        let [a, b, cc, d] = self.diag;
        let mut m = Mat4::zeros();
        m[(0, 0)] = c(a, 0.0);
        m[(1, 1)] = c(b, 0.0);
        m[(2, 2)] = c(cc, 0.0);
        m[(3, 3)] = c(d, 0.0);
        m[(0, 3)] = self.e;
        m[(3, 0)] = self.e.conj();
        m[(1, 2)] = self.f;
        m[(2, 1)] = self.f.conj();
        m
    }

    pub fn to_density(&self) -> DensityMatrix {
        DensityMatrix::new_unchecked(self.to_matrix())
    }
}

/// `a = d = (1+r₃)/4`, `b = c = (1−r₃)/4`, `e = (r₁−r₂)/4`, `f = (r₁+r₂)/4`.
pub fn bd_to_xstate(r: &CorrelationVector) -> XState {
    let [r1, r2, r3] = r.components();
    let outer = (1.0 + r3) / 4.0;
    let inner = (1.0 - r3) / 4.0;
    XState { diag: [outer, inner, inner, outer], e: c((r1 - r2) / 4.0, 0.0), f: c((r1 + r2) / 4.0, 0.0) }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Region {
    Entangled,
    SeparableNonClassical,
    Classical,
}

/// Entangled outside the octahedron; classical on a coordinate axis.
pub fn classify_region(r: &CorrelationVector) -> Region {
    if r.l1_norm() > 1.0 {
        Region::Entangled
    } else if r.components().iter().filter(|&&x| x == 0.0).count() >= 2 {
        Region::Classical
    } else {
        Region::SeparableNonClassical
    }
}
