//! First-order update rules behind one stepping interface.
//!
//! Momentum buffers start at zero and step counts begin at zero for every
//! method; the optimistic-gradient rule treats the pre-history gradient as
//! zero on its first step.

mod adam;
mod extrapolation;
mod momentum;
mod preset;
mod run;

pub use adam::{ComplexAdam, ComplexAdamConfig};
pub use extrapolation::{EgOgConfig, Extragradient, OptimisticGradient};
pub use momentum::{AggregatedMomentum, AltCm, CmConfig, RecurrentConfig, RecurrentMomentum, SimCm, SimCmReal};
pub use preset::{beta_warning, parse_angle, parse_optimizer_preset, OptimizerPreset};
pub use run::{measured_rate, run, ConvergenceReport, RunStatus, StopCriteria, DIVERGENCE_DISTANCE};

use crate::error::Result;
use crate::games::GameSpec;

/// A stepping rule over a game. `step` advances the internal state by one
/// update and reports how many gradient evaluations it consumed.
pub trait Optimizer: Send {
    fn step(&mut self, game: &GameSpec) -> Result<usize>;

    /// Current joint parameters.
    fn omega(&self) -> &[f64];
}
