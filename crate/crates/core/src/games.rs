//! Differentiable games as joint-gradient vector fields.
//!
//! A game stacks every player's gradient of its own loss into one field
//! `ghat` over the joint parameters, with the sign convention that *all*
//! players descend: for zero-sum min-max in (x, y), the y-entries are the
//! negated objective gradient. Under this convention the bilinear game has
//! an antisymmetric Jacobian and simultaneous gradient descent treats both
//! players uniformly.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::numerics::{dense_spectrum, Complex, DenseMatrix};
use crate::rng::SplitMix64;

/// Joint parameter vector with the index separating player A from player B.
#[derive(Debug, Clone, PartialEq)]
pub struct JointParams {
    pub values: Vec<f64>,
    pub split: usize,
}

impl JointParams {
    pub fn new(values: Vec<f64>, split: usize) -> Result<Self> {
        if split > values.len() {
            return Err(Error::DimensionMismatch {
                expected: values.len(),
                found: split,
            });
        }
        Ok(Self { values, split })
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn player_a(&self) -> &[f64] {
        &self.values[..self.split]
    }

    pub fn player_b(&self) -> &[f64] {
        &self.values[self.split..]
    }
}

type GradFn = dyn Fn(&[f64], &mut [f64]) + Send + Sync;
type JacobianFn = dyn Fn(&[f64]) -> DenseMatrix + Send + Sync;

/// A differentiable game: a joint-gradient oracle plus optional analytic
/// structure (Jacobian, known fixed point, known spectrum).
pub struct GameSpec {
    dim: usize,
    split: usize,
    grad: Box<GradFn>,
    jacobian: Option<Box<JacobianFn>>,
    fixed_point: Option<Vec<f64>>,
    analytic_spectrum: Option<Vec<Complex>>,
    eval_counter: Option<Arc<AtomicUsize>>,
}

impl GameSpec {
    pub fn new(dim: usize, split: usize, grad: Box<GradFn>) -> Self {
        Self {
            dim,
            split,
            grad,
            jacobian: None,
            fixed_point: None,
            analytic_spectrum: None,
            eval_counter: None,
        }
    }

    pub fn with_jacobian(mut self, jacobian: Box<JacobianFn>) -> Self {
        self.jacobian = Some(jacobian);
        self
    }

    pub fn with_fixed_point(mut self, omega_star: Vec<f64>) -> Self {
        self.fixed_point = Some(omega_star);
        self
    }

    pub fn with_analytic_spectrum(mut self, spectrum: Vec<Complex>) -> Self {
        self.analytic_spectrum = Some(spectrum);
        self
    }

    /// Attaches a counter that increments on every gradient evaluation.
    pub fn instrumented(mut self) -> (Self, Arc<AtomicUsize>) {
        let counter = Arc::new(AtomicUsize::new(0));
        self.eval_counter = Some(counter.clone());
        (self, counter)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn split(&self) -> usize {
        self.split
    }

    pub fn fixed_point(&self) -> Option<&[f64]> {
        self.fixed_point.as_deref()
    }

    pub fn analytic_spectrum(&self) -> Option<&[Complex]> {
        self.analytic_spectrum.as_deref()
    }

    pub fn has_jacobian(&self) -> bool {
        self.jacobian.is_some()
    }

    /// Joint gradient written into `out`.
    pub fn grad_into(&self, omega: &[f64], out: &mut [f64]) {
        debug_assert_eq!(omega.len(), self.dim);
        debug_assert_eq!(out.len(), self.dim);
        if let Some(counter) = &self.eval_counter {
            counter.fetch_add(1, Ordering::Relaxed);
        }
        (self.grad)(omega, out);
    }

    pub fn grad(&self, omega: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.dim];
        self.grad_into(omega, &mut out);
        out
    }

    /// Jacobian of the joint gradient: analytic if available, otherwise
    /// central finite differences for small games.
    pub fn jacobian_at(&self, omega: &[f64]) -> Result<DenseMatrix> {
        if let Some(jac) = &self.jacobian {
            return Ok(jac(omega));
        }
        if self.dim > crate::numerics::DENSE_DIM_LIMIT {
            return Err(Error::JacobianUnavailable { dim: self.dim });
        }
        Ok(self.finite_difference_jacobian(omega, 1e-5))
    }

    /// Central-difference Jacobian, column per perturbed coordinate.
    pub fn finite_difference_jacobian(&self, omega: &[f64], h: f64) -> DenseMatrix {
        let d = self.dim;
        let mut jac = DenseMatrix::zeros(d, d);
        let mut plus = omega.to_vec();
        let mut minus = omega.to_vec();
        let mut gp = vec![0.0; d];
        let mut gm = vec![0.0; d];
        for j in 0..d {
            plus[j] += h;
            minus[j] -= h;
            (self.grad)(&plus, &mut gp);
            (self.grad)(&minus, &mut gm);
            for i in 0..d {
                jac[(i, j)] = (gp[i] - gm[i]) / (2.0 * h);
            }
            plus[j] = omega[j];
            minus[j] = omega[j];
        }
        jac
    }

    /// Spectrum of the game at `at`: the analytic spectrum when recorded,
    /// otherwise the dense spectrum of the Jacobian there.
    pub fn spectrum_at(&self, at: &[f64]) -> Result<Vec<Complex>> {
        if let Some(spec) = &self.analytic_spectrum {
            return Ok(spec.clone());
        }
        dense_spectrum(&self.jacobian_at(at)?)
    }

    /// Spectrum at the known fixed point (origin when none is recorded).
    pub fn equilibrium_spectrum(&self) -> Result<Vec<Complex>> {
        match &self.fixed_point {
            Some(p) => self.spectrum_at(&p.clone()),
            None => self.spectrum_at(&vec![0.0; self.dim]),
        }
    }
}

impl std::fmt::Debug for GameSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GameSpec")
            .field("dim", &self.dim)
            .field("split", &self.split)
            .field("has_jacobian", &self.jacobian.is_some())
            .field("fixed_point", &self.fixed_point)
            .finish()
    }
}

/// Linear game `ghat(omega) = J omega`.
#[derive(Debug, Clone)]
pub struct QuadraticGame {
    pub j: DenseMatrix,
}

impl QuadraticGame {
    pub fn new(j: DenseMatrix) -> Result<Self> {
        if !j.is_square() {
            return Err(Error::NonSquare {
                rows: j.rows(),
                cols: j.cols(),
            });
        }
        Ok(Self { j })
    }

    pub fn into_game(self, split: usize) -> GameSpec {
        let d = self.j.rows();
        let j_for_grad = self.j.clone();
        let j_for_jac = self.j;
        GameSpec::new(
            d,
            split,
            Box::new(move |omega, out| j_for_grad.mul_vec_into(omega, out)),
        )
        .with_jacobian(Box::new(move |_| j_for_jac.clone()))
        .with_fixed_point(vec![0.0; d])
    }
}

fn logistic(t: f64) -> f64 {
    1.0 / (1.0 + (-t).exp())
}

/// The two-parameter saturating min-max game `min_x max_y -log(1+exp(-xy)) - log 2`.
///
/// Its joint-gradient Jacobian at the origin is a pure rotation generator, so
/// classical momentum fails there no matter the step size.
pub fn dirac_gan() -> GameSpec {
    let grad = |omega: &[f64], out: &mut [f64]| {
        let (x, y) = (omega[0], omega[1]);
        let s = logistic(-x * y);
        out[0] = y * s;
        out[1] = -x * s;
    };
    let jacobian = |omega: &[f64]| {
        let (x, y) = (omega[0], omega[1]);
        let s = logistic(-x * y);
        let ds = s * (1.0 - s);
        DenseMatrix::from_row_major(
            2,
            2,
            vec![
                -y * y * ds,
                s - x * y * ds,
                -s + x * y * ds,
                x * x * ds,
            ],
        )
        .expect("2x2")
    };
    GameSpec::new(2, 1, Box::new(grad))
        .with_jacobian(Box::new(jacobian))
        .with_fixed_point(vec![0.0, 0.0])
}

/// Bilinear zero-sum game `min_x max_y x^T A y` for a `d_a x d_b` matrix A.
///
/// The joint Jacobian `[[0, A], [-A^T, 0]]` is antisymmetric; the spectrum is
/// `{±i s_k}` over the singular values of A, padded with zeros when A is
/// rectangular.
pub fn bilinear_game(a: &DenseMatrix) -> Result<GameSpec> {
    let (da, db) = (a.rows(), a.cols());
    let d = da + db;
    let a_grad = a.clone();
    let at_grad = a.transpose();
    let grad = move |omega: &[f64], out: &mut [f64]| {
        let (x, y) = omega.split_at(da);
        a_grad.mul_vec_into(y, &mut out[..da]);
        at_grad.mul_vec_into(x, &mut out[da..]);
        for g in &mut out[da..] {
            *g = -*g;
        }
    };

    let mut jac = DenseMatrix::zeros(d, d);
    for i in 0..da {
        for j in 0..db {
            jac[(i, da + j)] = a[(i, j)];
            jac[(da + j, i)] = -a[(i, j)];
        }
    }
    let jac_clone = jac.clone();

    let spectrum = bilinear_spectrum(a)?;
    Ok(GameSpec::new(d, da, Box::new(grad))
        .with_jacobian(Box::new(move |_| jac_clone.clone()))
        .with_fixed_point(vec![0.0; d])
        .with_analytic_spectrum(spectrum))
}

/// `{±i s_k}` over singular values of A, plus |d_a - d_b| zeros.
fn bilinear_spectrum(a: &DenseMatrix) -> Result<Vec<Complex>> {
    let gram = if a.rows() <= a.cols() {
        a.matmul(&a.transpose())?
    } else {
        a.transpose().matmul(a)?
    };
    let mut sigmas: Vec<f64> = dense_spectrum(&gram)?
        .iter()
        .map(|l| l.re.max(0.0).sqrt())
        .collect();
    sigmas.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let mut spectrum = Vec::with_capacity(a.rows() + a.cols());
    for s in sigmas {
        spectrum.push(Complex::new(0.0, s));
        spectrum.push(Complex::new(0.0, -s));
    }
    spectrum.resize(a.rows() + a.cols(), Complex::ZERO);
    Ok(spectrum)
}

/// Game interpolating between cooperative and adversarial regimes,
/// `min_x max_y x^T (G A) y + x^T ((I-G) B1) x - y^T ((I-G) B2) y` with all
/// matrices diagonal and per-coordinate mixing weights `gamma` in [0, 1].
///
/// Quadratic self-terms are taken with the half convention (gradient `M x`
/// rather than `2 M x`), so coordinate k contributes the 2x2 block
/// `[[(1-g) b1, g a], [-g a, (1-g) b2]]` and, for matched diagonals, the
/// eigenvalue pair has phase `±atan(g/(1-g))` — 0 when cooperative, π/2 when
/// adversarial, π/4 at g = 1/2.
pub fn interpolated_game(
    a_diag: &[f64],
    b1_diag: &[f64],
    b2_diag: &[f64],
    gamma: &[f64],
) -> Result<GameSpec> {
    let n = a_diag.len();
    for other in [b1_diag.len(), b2_diag.len(), gamma.len()] {
        if other != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: other,
            });
        }
    }
    let mut jac = DenseMatrix::zeros(2 * n, 2 * n);
    let mut spectrum = Vec::with_capacity(2 * n);
    for k in 0..n {
        let g = gamma[k];
        let coop1 = (1.0 - g) * b1_diag[k];
        let coop2 = (1.0 - g) * b2_diag[k];
        let adv = g * a_diag[k];
        jac[(k, k)] = coop1;
        jac[(k, n + k)] = adv;
        jac[(n + k, k)] = -adv;
        jac[(n + k, n + k)] = coop2;
        // 2x2 block eigenvalues: mean ± sqrt(mean_diff^2 - adv^2).
        let mean = 0.5 * (coop1 + coop2);
        let half_diff = 0.5 * (coop1 - coop2);
        let disc = half_diff * half_diff - adv * adv;
        if disc >= 0.0 {
            spectrum.push(Complex::new(mean + disc.sqrt(), 0.0));
            spectrum.push(Complex::new(mean - disc.sqrt(), 0.0));
        } else {
            let im = (-disc).sqrt();
            spectrum.push(Complex::new(mean, im));
            spectrum.push(Complex::new(mean, -im));
        }
    }
    Ok(QuadraticGame::new(jac)?
        .into_game(n)
        .with_analytic_spectrum(spectrum))
}

/// Diagonal preset used by the cooperative↔adversarial sweep: entries
/// linearly spaced in [1/4, 4].
pub fn sweep_diagonal(n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![0.25];
    }
    (0..n)
        .map(|k| 0.25 + (4.0 - 0.25) * k as f64 / (n - 1) as f64)
        .collect()
}

/// Seeded draw gamma_k ~ U[0, gamma_max].
pub fn sample_gammas(n: usize, gamma_max: f64, seed: u64) -> Vec<f64> {
    let mut rng = SplitMix64::new(seed);
    (0..n).map(|_| gamma_max * rng.next_f64()).collect()
}

/// Sweep-preset instance of the interpolated game: matched diagonals linearly
/// spaced in [1/4, 4] and seeded gamma draws.
pub fn interpolated_preset(n: usize, gamma_max: f64, seed: u64) -> Result<GameSpec> {
    let diag = sweep_diagonal(n);
    let gammas = sample_gammas(n, gamma_max, seed);
    interpolated_game(&diag, &diag, &diag, &gammas)
}

/// Parses `dirac`, `bilinear:<n>`, or `interp:<n>:<gamma_max>:<seed>`.
pub fn parse_game_preset(name: &str) -> Result<GameSpec> {
    let parts: Vec<&str> = name.split(':').collect();
    match parts[0] {
        "dirac" if parts.len() == 1 => Ok(dirac_gan()),
        "bilinear" if parts.len() == 2 => {
            let n: usize = parts[1]
                .parse()
                .map_err(|_| Error::UnknownPreset(name.into()))?;
            if n == 0 {
                return Err(Error::UnknownPreset(name.into()));
            }
            bilinear_game(&DenseMatrix::identity(n))
        }
        "interp" if parts.len() == 4 => {
            let n: usize = parts[1]
                .parse()
                .map_err(|_| Error::UnknownPreset(name.into()))?;
            let gamma_max: f64 = parts[2]
                .parse()
                .map_err(|_| Error::UnknownPreset(name.into()))?;
            let seed: u64 = parts[3]
                .parse()
                .map_err(|_| Error::UnknownPreset(name.into()))?;
            if n == 0 || !(0.0..=1.0).contains(&gamma_max) {
                return Err(Error::UnknownPreset(name.into()));
            }
            interpolated_preset(n, gamma_max, seed)
        }
        _ => Err(Error::UnknownPreset(name.into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn norm(v: &[f64]) -> f64 {
        v.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    #[test]
    fn dirac_gradient_vanishes_at_origin() {
        let game = dirac_gan();
        assert!(norm(&game.grad(&[0.0, 0.0])) <= 1e-12);
    }

    #[test]
    fn dirac_gradient_matches_objective_finite_differences() {
        // Independent oracle: central differences of f(x, y) itself, with the
        // descent-for-both sign flip on the y entry.
        let f = |x: f64, y: f64| -((-(x * y)).exp().ln_1p()) - 2.0_f64.ln();
        let game = dirac_gan();
        let h = 1e-6;
        for &(x, y) in &[(1.0, 0.0), (0.3, -0.7), (-1.2, 0.8), (2.0, 1.5)] {
            let g = game.grad(&[x, y]);
            let fd_x = (f(x + h, y) - f(x - h, y)) / (2.0 * h);
            let fd_y = (f(x, y + h) - f(x, y - h)) / (2.0 * h);
            assert!((g[0] - fd_x).abs() < 1e-6, "df/dx at ({x},{y})");
            assert!((g[1] + fd_y).abs() < 1e-6, "-df/dy at ({x},{y})");
        }
    }

    #[test]
    fn dirac_origin_spectrum_is_conjugate_imaginary_pair() {
        let game = dirac_gan();
        let mut spec = game.spectrum_at(&[0.0, 0.0]).unwrap();
        spec.sort_by(|a, b| a.im.partial_cmp(&b.im).unwrap());
        assert!(spec[1].im > 0.0);
        assert!(spec[0].re.abs() < 1e-12 && spec[1].re.abs() < 1e-12);
        assert!((spec[0] - spec[1].conj()).norm() < 1e-12);
    }

    #[test]
    fn scalar_bilinear_game_is_unit_rotation() {
        let game = bilinear_game(&DenseMatrix::identity(1)).unwrap();
        let jac = game.jacobian_at(&[0.0, 0.0]).unwrap();
        assert_eq!(jac.entries(), &[0.0, 1.0, -1.0, 0.0]);
        let mut spec = game.spectrum_at(&[0.0, 0.0]).unwrap();
        spec.sort_by(|a, b| a.im.partial_cmp(&b.im).unwrap());
        assert!((spec[0] - Complex::new(0.0, -1.0)).norm() < 1e-12);
        assert!((spec[1] - Complex::new(0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn diagonal_bilinear_spectrum_lists_singular_values() {
        let a = DenseMatrix::from_diagonal(&[1.0, 2.0]);
        let game = bilinear_game(&a).unwrap();
        let mut ims: Vec<f64> = game
            .analytic_spectrum()
            .unwrap()
            .iter()
            .map(|l| l.im)
            .collect();
        ims.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let expected = [-2.0, -1.0, 1.0, 2.0];
        for (got, want) in ims.iter().zip(expected) {
            assert!((got - want).abs() < 1e-10);
        }
    }

    #[test]
    fn bilinear_jacobian_is_antisymmetric() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let entries: Vec<f64> = (0..12).map(|_| rng.random_range(-2.0..2.0)).collect();
        let a = DenseMatrix::from_row_major(3, 4, entries).unwrap();
        let game = bilinear_game(&a).unwrap();
        let j = game.jacobian_at(&vec![0.0; 7]).unwrap();
        let jt = j.transpose();
        for i in 0..7 {
            for k in 0..7 {
                assert_eq!(j[(i, k)] + jt[(i, k)], 0.0);
            }
        }
    }

    #[test]
    fn random_bilinear_analytic_spectrum_matches_dense_solver() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let entries: Vec<f64> = (0..16).map(|_| rng.random_range(-2.0..2.0)).collect();
        let a = DenseMatrix::from_row_major(4, 4, entries).unwrap();
        let game = bilinear_game(&a).unwrap();
        let mut analytic = game.analytic_spectrum().unwrap().to_vec();
        let mut dense = dense_spectrum(&game.jacobian_at(&vec![0.0; 8]).unwrap()).unwrap();
        let key = |z: &Complex| (z.im, z.re);
        analytic.sort_by(|x, y| key(x).partial_cmp(&key(y)).unwrap());
        dense.sort_by(|x, y| key(x).partial_cmp(&key(y)).unwrap());
        for (x, y) in analytic.iter().zip(&dense) {
            assert!((x - y).norm() < 1e-8, "{x} vs {y}");
        }
    }

    #[test]
    fn interpolated_block_phases_hit_quarter_turns() {
        let ones = [1.0, 1.0, 1.0];
        let game = interpolated_game(&ones, &ones, &ones, &[0.0, 0.5, 1.0]).unwrap();
        let mut phases: Vec<f64> = game
            .analytic_spectrum()
            .unwrap()
            .iter()
            .filter(|l| l.im >= 0.0)
            .map(|l| l.arg())
            .collect();
        phases.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let expected = [0.0, 0.0, std::f64::consts::FRAC_PI_4, std::f64::consts::FRAC_PI_2];
        // gamma = 0 yields a real pair (two entries), 0.5 and 1 one each.
        assert_eq!(phases.len(), 4);
        for (got, want) in phases.iter().zip(expected) {
            assert!((got - want).abs() < 1e-6, "{got} vs {want}");
        }
    }

    #[test]
    fn interpolated_extremes_are_cooperative_and_adversarial() {
        let ones = [1.0, 1.0];
        let coop = interpolated_game(&ones, &ones, &ones, &[0.0, 0.0]).unwrap();
        for l in coop.analytic_spectrum().unwrap() {
            assert!(l.im.abs() < 1e-14 && l.re > 0.0);
        }
        let adv = interpolated_game(&ones, &ones, &ones, &[1.0, 1.0]).unwrap();
        for l in adv.analytic_spectrum().unwrap() {
            assert!(l.re.abs() < 1e-14 && l.im.abs() > 0.0);
        }
    }

    #[test]
    fn interpolated_analytic_spectrum_matches_dense_solver() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let n = 4;
        let a: Vec<f64> = (0..n).map(|_| rng.random_range(0.3..3.0)).collect();
        let b1: Vec<f64> = (0..n).map(|_| rng.random_range(0.3..3.0)).collect();
        let b2: Vec<f64> = (0..n).map(|_| rng.random_range(0.3..3.0)).collect();
        let g: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..1.0)).collect();
        let game = interpolated_game(&a, &b1, &b2, &g).unwrap();
        let mut analytic = game.analytic_spectrum().unwrap().to_vec();
        let mut dense = dense_spectrum(&game.jacobian_at(&vec![0.0; 2 * n]).unwrap()).unwrap();
        let key = |z: &Complex| (z.re, z.im);
        analytic.sort_by(|x, y| key(x).partial_cmp(&key(y)).unwrap());
        dense.sort_by(|x, y| key(x).partial_cmp(&key(y)).unwrap());
        for (x, y) in analytic.iter().zip(&dense) {
            assert!((x - y).norm() < 1e-8);
        }
    }

    #[test]
    fn interpolated_rejects_mismatched_lengths() {
        let r = interpolated_game(&[1.0, 1.0], &[1.0], &[1.0, 1.0], &[0.5, 0.5]);
        assert!(matches!(r, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn shipped_games_match_finite_difference_jacobians() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let games: Vec<GameSpec> = vec![
            dirac_gan(),
            bilinear_game(&DenseMatrix::identity(2)).unwrap(),
            interpolated_preset(3, 0.8, 99).unwrap(),
        ];
        for game in &games {
            for _ in 0..10 {
                let omega: Vec<f64> = (0..game.dim()).map(|_| rng.random_range(-1.0..1.0)).collect();
                let analytic = game.jacobian_at(&omega).unwrap();
                let fd = game.finite_difference_jacobian(&omega, 1e-5);
                for i in 0..game.dim() {
                    for j in 0..game.dim() {
                        assert!(
                            (analytic[(i, j)] - fd[(i, j)]).abs() < 1e-5,
                            "entry ({i},{j}) of {game:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn spectra_are_conjugate_closed() {
        let games: Vec<GameSpec> = vec![
            dirac_gan(),
            bilinear_game(&DenseMatrix::identity(3)).unwrap(),
            interpolated_preset(4, 1.0, 5).unwrap(),
        ];
        for game in &games {
            let spec = game.equilibrium_spectrum().unwrap();
            for l in &spec {
                let conj = l.conj();
                assert!(
                    spec.iter().any(|m| (m - conj).norm() < 1e-9),
                    "conjugate of {l} missing in {spec:?}"
                );
            }
        }
    }

    #[test]
    fn gradients_vanish_at_declared_fixed_points() {
        let games: Vec<GameSpec> = vec![
            dirac_gan(),
            bilinear_game(&DenseMatrix::identity(2)).unwrap(),
            interpolated_preset(3, 0.5, 7).unwrap(),
        ];
        for game in &games {
            let fp = game.fixed_point().unwrap().to_vec();
            assert!(norm(&game.grad(&fp)) <= 1e-12);
        }
    }

    #[test]
    fn quadratic_oracle_is_exactly_linear() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        let entries: Vec<f64> = (0..16).map(|_| rng.random_range(-1.0..1.0)).collect();
        let game = QuadraticGame::new(DenseMatrix::from_row_major(4, 4, entries).unwrap())
            .unwrap()
            .into_game(2);
        let u: Vec<f64> = (0..4).map(|_| rng.random_range(-1.0..1.0)).collect();
        let v: Vec<f64> = (0..4).map(|_| rng.random_range(-1.0..1.0)).collect();
        let sum: Vec<f64> = u.iter().zip(&v).map(|(a, b)| a + b).collect();
        let gu = game.grad(&u);
        let gv = game.grad(&v);
        let gsum = game.grad(&sum);
        for i in 0..4 {
            assert_eq!(gsum[i], gu[i] + gv[i]);
        }
    }

    #[test]
    fn preset_parsing() {
        assert_eq!(parse_game_preset("dirac").unwrap().dim(), 2);
        assert_eq!(parse_game_preset("bilinear:3").unwrap().dim(), 6);
        assert_eq!(parse_game_preset("interp:4:0.5:3550").unwrap().dim(), 8);
        assert!(parse_game_preset("nope").is_err());
        assert!(parse_game_preset("bilinear:0").is_err());
        assert!(parse_game_preset("interp:4:1.5:1").is_err());
    }

    #[test]
    fn instrumented_counter_counts_evaluations() {
        let (game, counter) = dirac_gan().instrumented();
        let _ = game.grad(&[0.5, 0.5]);
        let _ = game.grad(&[0.1, 0.2]);
        assert_eq!(counter.load(std::sync::atomic::Ordering::Relaxed), 2);
    }

    #[test]
    fn seeded_gamma_draws_replay() {
        let a = sample_gammas(6, 1.0, 3550);
        let b = sample_gammas(6, 1.0, 3550);
        assert_eq!(a, b);
        assert!(a.iter().all(|g| (0.0..1.0).contains(g)));
    }
}
