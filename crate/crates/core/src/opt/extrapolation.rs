use super::Optimizer;
use crate::error::{Error, Result};
use crate::games::GameSpec;

/// Step size plus a separately tuned extrapolation parameter. Locking the two
/// together cripples both methods on cooperative games, so they stay free.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EgOgConfig {
    pub alpha: f64,
    pub alpha_prime: f64,
}

/// Extragradient: probe the field at an extrapolated midpoint, then step
/// from the original iterate with the midpoint gradient. Two evaluations per
/// step.
#[derive(Debug, Clone)]
pub struct Extragradient {
    cfg: EgOgConfig,
    omega: Vec<f64>,
    mid: Vec<f64>,
    grad: Vec<f64>,
}

impl Extragradient {
    pub fn new(cfg: EgOgConfig, omega0: Vec<f64>) -> Self {
        let d = omega0.len();
        Self {
            cfg,
            omega: omega0,
            mid: vec![0.0; d],
            grad: vec![0.0; d],
        }
    }
}

impl Optimizer for Extragradient {
    fn step(&mut self, game: &GameSpec) -> Result<usize> {
        if game.dim() != self.omega.len() {
            return Err(Error::DimensionMismatch {
                expected: self.omega.len(),
                found: game.dim(),
            });
        }
        game.grad_into(&self.omega, &mut self.grad);
        for (m, (&w, &g)) in self.mid.iter_mut().zip(self.omega.iter().zip(&self.grad)) {
            *m = w - self.cfg.alpha_prime * g;
        }
        game.grad_into(&self.mid, &mut self.grad);
        for (w, &g) in self.omega.iter_mut().zip(&self.grad) {
            *w -= self.cfg.alpha * g;
        }
        Ok(2)
    }

    fn omega(&self) -> &[f64] {
        &self.omega
    }
}

/// Optimistic gradient: `omega <- omega - 2 alpha ghat + alpha' ghat_prev`,
/// one evaluation per step. The pre-history gradient is zero, so step 0 is a
/// plain descent step with 2 alpha.
#[derive(Debug, Clone)]
pub struct OptimisticGradient {
    cfg: EgOgConfig,
    omega: Vec<f64>,
    prev_grad: Vec<f64>,
    grad: Vec<f64>,
}

impl OptimisticGradient {
    pub fn new(cfg: EgOgConfig, omega0: Vec<f64>) -> Self {
        let d = omega0.len();
        Self {
            cfg,
            omega: omega0,
            prev_grad: vec![0.0; d],
            grad: vec![0.0; d],
        }
    }
}

impl Optimizer for OptimisticGradient {
    fn step(&mut self, game: &GameSpec) -> Result<usize> {
        if game.dim() != self.omega.len() {
            return Err(Error::DimensionMismatch {
                expected: self.omega.len(),
                found: game.dim(),
            });
        }
        game.grad_into(&self.omega, &mut self.grad);
        for i in 0..self.omega.len() {
            self.omega[i] += -2.0 * self.cfg.alpha * self.grad[i]
                + self.cfg.alpha_prime * self.prev_grad[i];
        }
        std::mem::swap(&mut self.prev_grad, &mut self.grad);
        Ok(1)
    }

    fn omega(&self) -> &[f64] {
        &self.omega
    }
}
