//! Geometric quantum correlations of Bell-diagonal and X two-qubit states
//! under local noisy channels.
//!
//! Discord and entanglement are measured as distances to the classical and
//! separable sets, under the Hilbert-Schmidt and trace norms. Closed forms
//! live in [`quantifiers`]; [`oracles`] recomputes them by direct
//! minimization; [`relations`] expresses discord as a function of
//! entanglement along a channel; [`dynamics`] samples whole trajectories.

pub mod channels;
pub mod dynamics;
pub mod error;
pub mod linalg;
pub mod oracles;
pub mod quantifiers;
pub mod relations;
pub mod report;
pub mod sampling;
pub mod states;
pub mod verify;

pub use channels::{ChannelKind, ChannelSpec};
pub use error::{Error, Result};
pub use oracles::Norm;
pub use quantifiers::{Branch, Measure, QuantifierValue};
pub use states::{CorrelationVector, DensityMatrix, XState};
