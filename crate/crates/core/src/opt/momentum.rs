use serde::{Deserialize, Serialize};

use super::Optimizer;
use crate::error::{Error, Result};
use crate::games::GameSpec;
use crate::numerics::Complex;

/// Step size and momentum coefficient for the complex-momentum family.
/// The step size may be complex, though every shipped preset keeps it real.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CmConfig {
    pub alpha: Complex,
    pub beta: Complex,
}

impl CmConfig {
    pub fn real(alpha: f64, beta: f64) -> Self {
        Self {
            alpha: Complex::new(alpha, 0.0),
            beta: Complex::new(beta, 0.0),
        }
    }

    pub fn polar(alpha: f64, beta_mag: f64, beta_arg: f64) -> Self {
        Self {
            alpha: Complex::new(alpha, 0.0),
            beta: Complex::from_polar(beta_mag, beta_arg),
        }
    }
}

fn check_dim(game: &GameSpec, dim: usize) -> Result<()> {
    if game.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: game.dim(),
        });
    }
    Ok(())
}

/// Simultaneous complex momentum:
/// `mu <- beta mu - ghat`, `omega <- omega + Re(alpha mu)`.
#[derive(Debug, Clone)]
pub struct SimCm {
    cfg: CmConfig,
    omega: Vec<f64>,
    mu: Vec<Complex>,
    grad: Vec<f64>,
}

impl SimCm {
    pub fn new(cfg: CmConfig, omega0: Vec<f64>) -> Self {
        let d = omega0.len();
        Self {
            cfg,
            omega: omega0,
            mu: vec![Complex::ZERO; d],
            grad: vec![0.0; d],
        }
    }

    pub fn buffer(&self) -> &[Complex] {
        &self.mu
    }
}

impl Optimizer for SimCm {
    fn step(&mut self, game: &GameSpec) -> Result<usize> {
        check_dim(game, self.omega.len())?;
        game.grad_into(&self.omega, &mut self.grad);
        for ((mu, w), &g) in self.mu.iter_mut().zip(&mut self.omega).zip(&self.grad) {
            *mu = self.cfg.beta * *mu - g;
            *w += (self.cfg.alpha * *mu).re;
        }
        Ok(1)
    }

    fn omega(&self) -> &[f64] {
        &self.omega
    }
}

/// Simultaneous complex momentum carried entirely in real arithmetic: the
/// buffer is split into its Cartesian parts and the parameter update reads
/// the pre-update buffer,
/// `omega <- omega - Re(alpha) ghat + Re(alpha beta) Re(mu) - Im(alpha beta) Im(mu)`.
#[derive(Debug, Clone)]
pub struct SimCmReal {
    cfg: CmConfig,
    omega: Vec<f64>,
    mu_re: Vec<f64>,
    mu_im: Vec<f64>,
    grad: Vec<f64>,
}

impl SimCmReal {
    pub fn new(cfg: CmConfig, omega0: Vec<f64>) -> Self {
        let d = omega0.len();
        Self {
            cfg,
            omega: omega0,
            mu_re: vec![0.0; d],
            mu_im: vec![0.0; d],
            grad: vec![0.0; d],
        }
    }

    pub fn buffer_re(&self) -> &[f64] {
        &self.mu_re
    }

    pub fn buffer_im(&self) -> &[f64] {
        &self.mu_im
    }
}

impl Optimizer for SimCmReal {
    fn step(&mut self, game: &GameSpec) -> Result<usize> {
        check_dim(game, self.omega.len())?;
        game.grad_into(&self.omega, &mut self.grad);
        let (a, b) = (self.cfg.beta.re, self.cfg.beta.im);
        let ab = self.cfg.alpha * self.cfg.beta;
        let re_alpha = self.cfg.alpha.re;
        for i in 0..self.omega.len() {
            let g = self.grad[i];
            let new_re = a * self.mu_re[i] - b * self.mu_im[i] - g;
            let new_im = b * self.mu_re[i] + a * self.mu_im[i];
            self.omega[i] += -re_alpha * g + ab.re * self.mu_re[i] - ab.im * self.mu_im[i];
            self.mu_re[i] = new_re;
            self.mu_im[i] = new_im;
        }
        Ok(1)
    }

    fn omega(&self) -> &[f64] {
        &self.omega
    }
}

/// Alternating complex momentum: player A steps first, then player B steps
/// against the refreshed A parameters. One step, two sequential gradient
/// evaluations.
#[derive(Debug, Clone)]
pub struct AltCm {
    cfg: CmConfig,
    omega: Vec<f64>,
    split: usize,
    mu_a: Vec<Complex>,
    mu_b: Vec<Complex>,
    grad: Vec<f64>,
}

impl AltCm {
    pub fn new(cfg: CmConfig, omega0: Vec<f64>, split: usize) -> Self {
        let d = omega0.len();
        Self {
            cfg,
            omega: omega0,
            split,
            mu_a: vec![Complex::ZERO; split],
            mu_b: vec![Complex::ZERO; d - split],
            grad: vec![0.0; d],
        }
    }
}

impl Optimizer for AltCm {
    fn step(&mut self, game: &GameSpec) -> Result<usize> {
        check_dim(game, self.omega.len())?;
        if game.split() != self.split {
            return Err(Error::DimensionMismatch {
                expected: self.split,
                found: game.split(),
            });
        }
        game.grad_into(&self.omega, &mut self.grad);
        for (i, mu) in self.mu_a.iter_mut().enumerate() {
            *mu = self.cfg.beta * *mu - self.grad[i];
            self.omega[i] += (self.cfg.alpha * *mu).re;
        }
        game.grad_into(&self.omega, &mut self.grad);
        for (i, mu) in self.mu_b.iter_mut().enumerate() {
            *mu = self.cfg.beta * *mu - self.grad[self.split + i];
            self.omega[self.split + i] += (self.cfg.alpha * *mu).re;
        }
        Ok(2)
    }

    fn omega(&self) -> &[f64] {
        &self.omega
    }
}

/// Cross-linked momentum buffers: buffer k refreshes as
/// `mu_k <- sum_l betas[l][k] mu_l - ghat` (the gradient only where
/// `grad_mask[k]` is set) and the parameters move by `sum_k alphas[k] mu_k`.
///
/// `betas[l][k]` is read row-l, column-k. With the rotation pattern
/// `[[Re b, Im b], [-Im b, Re b]]`, gradient routed only into the first
/// buffer, and step sizes `[alpha, 0]`, this reproduces simultaneous complex
/// momentum exactly.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RecurrentConfig {
    pub betas: Vec<Vec<f64>>,
    pub alphas: Vec<f64>,
    pub grad_mask: Vec<bool>,
}

impl RecurrentConfig {
    pub fn buffer_count(&self) -> usize {
        self.alphas.len()
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.alphas.len();
        if self.betas.len() != k || self.betas.iter().any(|row| row.len() != k) {
            return Err(Error::InvalidConfig(format!(
                "betas must be {k}x{k} to match {k} step sizes"
            )));
        }
        if self.grad_mask.len() != k {
            return Err(Error::InvalidConfig(format!(
                "grad_mask has {} entries, expected {k}",
                self.grad_mask.len()
            )));
        }
        Ok(())
    }

    /// The two-buffer rotation pattern equivalent to complex momentum with
    /// real step size `alpha`.
    pub fn complex_equivalent(alpha: f64, beta: Complex) -> Self {
        Self {
            betas: vec![vec![beta.re, beta.im], vec![-beta.im, beta.re]],
            alphas: vec![alpha, 0.0],
            grad_mask: vec![true, false],
        }
    }
}

#[derive(Debug, Clone)]
pub struct RecurrentMomentum {
    cfg: RecurrentConfig,
    omega: Vec<f64>,
    bufs: Vec<Vec<f64>>,
    next: Vec<Vec<f64>>,
    grad: Vec<f64>,
}

impl RecurrentMomentum {
    pub fn new(cfg: RecurrentConfig, omega0: Vec<f64>) -> Result<Self> {
        cfg.validate()?;
        let d = omega0.len();
        let k = cfg.buffer_count();
        Ok(Self {
            cfg,
            omega: omega0,
            bufs: vec![vec![0.0; d]; k],
            next: vec![vec![0.0; d]; k],
            grad: vec![0.0; d],
        })
    }

    pub fn buffers(&self) -> &[Vec<f64>] {
        &self.bufs
    }
}

impl Optimizer for RecurrentMomentum {
    fn step(&mut self, game: &GameSpec) -> Result<usize> {
        check_dim(game, self.omega.len())?;
        game.grad_into(&self.omega, &mut self.grad);
        let k = self.cfg.buffer_count();
        for to in 0..k {
            let mask = self.cfg.grad_mask[to];
            for i in 0..self.omega.len() {
                let mut acc = if mask { -self.grad[i] } else { 0.0 };
                for from in 0..k {
                    acc += self.cfg.betas[from][to] * self.bufs[from][i];
                }
                self.next[to][i] = acc;
            }
        }
        std::mem::swap(&mut self.bufs, &mut self.next);
        for i in 0..self.omega.len() {
            for (buf, &alpha) in self.bufs.iter().zip(&self.cfg.alphas) {
                self.omega[i] += alpha * buf[i];
            }
        }
        Ok(1)
    }

    fn omega(&self) -> &[f64] {
        &self.omega
    }
}

/// Independent buffers with per-buffer coefficients and step sizes; the
/// diagonal special case of the recurrently linked rule with the gradient
/// fed to every buffer.
#[derive(Debug, Clone)]
pub struct AggregatedMomentum {
    betas: Vec<f64>,
    alphas: Vec<f64>,
    omega: Vec<f64>,
    bufs: Vec<Vec<f64>>,
    grad: Vec<f64>,
}

impl AggregatedMomentum {
    pub fn new(betas: Vec<f64>, alphas: Vec<f64>, omega0: Vec<f64>) -> Result<Self> {
        if betas.len() != alphas.len() {
            return Err(Error::DimensionMismatch {
                expected: betas.len(),
                found: alphas.len(),
            });
        }
        let d = omega0.len();
        let k = betas.len();
        Ok(Self {
            betas,
            alphas,
            omega: omega0,
            bufs: vec![vec![0.0; d]; k],
            grad: vec![0.0; d],
        })
    }
}

impl Optimizer for AggregatedMomentum {
    fn step(&mut self, game: &GameSpec) -> Result<usize> {
        check_dim(game, self.omega.len())?;
        game.grad_into(&self.omega, &mut self.grad);
        for (buf, &beta) in self.bufs.iter_mut().zip(&self.betas) {
            for (b, &g) in buf.iter_mut().zip(&self.grad) {
                *b = beta * *b - g;
            }
        }
        for i in 0..self.omega.len() {
            for (buf, &alpha) in self.bufs.iter().zip(&self.alphas) {
                self.omega[i] += alpha * buf[i];
            }
        }
        Ok(1)
    }

    fn omega(&self) -> &[f64] {
        &self.omega
    }
}
