//! Phase estimation with the seeded ZWM interferometer.
//!
//! The probe is `exp(½a†L(θ)a†ᵀ − h.c.)|β, 0, 0, 0⟩`, where the estimated
//! phase `θ` plays the role of `θ_T` in the squeezing matrix and `β` is a real
//! coherent seed in `A_S`.

use nalgebra::{Cholesky, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gaussian::GaussianState;
use crate::linalg::RealMatrix;
use crate::network::build_symplectic;
use crate::zwm::{effective_gains, zwm_l, ZwmConfig, MODES};

/// Step for the central differences in `θ`.
pub const DEFAULT_STEP: f64 = 1e-4;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProbeConfig {
    pub g: f64,
    pub t_mag: f64,
    pub theta: f64,
    pub beta: f64,
}

impl ProbeConfig {
    pub fn new(g: f64, t_mag: f64, theta: f64, beta: f64) -> Result<Self> {
        let pc = ProbeConfig {
            g,
            t_mag,
            theta,
            beta,
        };
        pc.validate()?;
        Ok(pc)
    }

    pub fn validate(&self) -> Result<()> {
        self.zwm().validate()?;
        if !self.beta.is_finite() {
            return Err(Error::NonFinite);
        }
        if self.beta < 0.0 {
            return Err(Error::Parameter(format!(
                "β must be non-negative, got {}",
                self.beta
            )));
        }
        Ok(())
    }

    /// The network configuration with `θ_T = θ`; `φ_S` plays no role here.
    pub fn zwm(&self) -> ZwmConfig {
        ZwmConfig {
            g: self.g,
            t_mag: self.t_mag,
            theta_t: self.theta,
            phi_s: 0.0,
        }
    }

    pub fn at_theta(&self, theta: f64) -> Self {
        ProbeConfig { theta, ..*self }
    }

    pub fn with_beta(&self, beta: f64) -> Self {
        ProbeConfig { beta, ..*self }
    }
}

/// Quadrature mean of the coherent seed `|β⟩` in mode `A_S`.
pub fn seed_mean(beta: f64) -> DVector<f64> {
    let mut m = DVector::zeros(2 * MODES);
    m[0] = 2f64.sqrt() * beta;
    m
}

/// Seed first, then the network: the mean is the seed's image under the
/// network symplectic and the covariance is that of the unseeded network.
pub fn probe_state(pc: &ProbeConfig) -> Result<GaussianState> {
    pc.validate()?;
    let s = build_symplectic(&zwm_l(&pc.zwm())?)?;
    GaussianState::vacuum(MODES)
        .displace(&seed_mean(pc.beta))?
        .apply_symplectic(&s)
}

/// Central difference with one Richardson step: `(4·D(h/2) − D(h))/3`.
fn richardson<T, F>(theta: f64, h: f64, f: F) -> Result<T>
where
    T: std::ops::Sub<Output = T> + std::ops::Mul<f64, Output = T> + Clone,
    F: Fn(f64) -> Result<T>,
{
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::Parameter(format!("step must be positive, got {h}")));
    }
    let central = |h: f64| -> Result<T> { Ok((f(theta + h)? - f(theta - h)?) * (0.5 / h)) };
    let coarse = central(h)?;
    let fine = central(0.5 * h)?;
    Ok((fine * 4.0 - coarse) * (1.0 / 3.0))
}

pub fn mean_derivative(pc: &ProbeConfig, step: f64) -> Result<DVector<f64>> {
    pc.validate()?;
    richardson(pc.theta, step, |th| {
        Ok(probe_state(&pc.at_theta(th))?.mean().clone())
    })
}

pub fn covariance_derivative(pc: &ProbeConfig, step: f64) -> Result<RealMatrix> {
    pc.validate()?;
    richardson(pc.theta, step, |th| {
        Ok(probe_state(&pc.at_theta(th))?.cov().clone())
    })
}

/// `−(β/√2)(cosh a − cosh b)·(0, sin θ, 0, 0, 0, cos θ, 0, 0)` with `a, b`
/// the effective gains.
pub fn mean_derivative_closed(pc: &ProbeConfig) -> Result<DVector<f64>> {
    pc.validate()?;
    let (a, b) = effective_gains(pc.g, pc.t_mag);
    let k = -pc.beta / 2f64.sqrt() * (a.cosh() - b.cosh());
    let mut v = DVector::zeros(2 * MODES);
    v[1] = k * pc.theta.sin();
    v[5] = k * pc.theta.cos();
    Ok(v)
}

/// Closed-form seed-dominated Fisher information
/// `(β²/2)(cosh a − cosh b)²[(e^{−2b} + e^{−2a})cos²θ + (e^{2b} + e^{2a})sin²θ]`.
pub fn qfi_leading(pc: &ProbeConfig) -> Result<f64> {
    pc.validate()?;
    let (a, b) = effective_gains(pc.g, pc.t_mag);
    let (s, c) = pc.theta.sin_cos();
    let squeezed = (-2.0 * b).exp() + (-2.0 * a).exp();
    let anti = (2.0 * b).exp() + (2.0 * a).exp();
    Ok(0.5 * pc.beta * pc.beta * (a.cosh() - b.cosh()).powi(2) * (squeezed * c * c + anti * s * s))
}

fn inverse(cov: &RealMatrix) -> Result<RealMatrix> {
    Cholesky::new(cov.clone())
        .map(|ch| ch.inverse())
        .ok_or(Error::SingularCovariance)
}

/// `v·Σ⁻¹·vᵀ` for a covariance `Σ`.
pub fn mahalanobis(v: &DVector<f64>, cov: &RealMatrix) -> Result<f64> {
    let ch = Cholesky::new(cov.clone()).ok_or(Error::SingularCovariance)?;
    Ok(v.dot(&ch.solve(v)))
}

/// The two contributions to the Gaussian Fisher information.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QfiTerms {
    /// `ṁ·Σ⁻¹·ṁᵀ`, quadratic in `β`.
    pub mean_term: f64,
    /// `¼·tr[(Σ⁻¹Σ̇)²]`, independent of `β`.
    pub covariance_term: f64,
}

impl QfiTerms {
    pub fn total(&self) -> f64 {
        self.mean_term + self.covariance_term
    }
}

pub fn qfi_first_term(pc: &ProbeConfig, step: f64) -> Result<f64> {
    let dm = mean_derivative(pc, step)?;
    mahalanobis(&dm, probe_state(pc)?.cov())
}

/// The closed-form mean derivative weighed by the exact covariance.
pub fn qfi_first_term_closed_mean(pc: &ProbeConfig) -> Result<f64> {
    mahalanobis(&mean_derivative_closed(pc)?, probe_state(pc)?.cov())
}

pub fn qfi_second_term(pc: &ProbeConfig, step: f64) -> Result<f64> {
    pc.validate()?;
    let inv = inverse(probe_state(pc)?.cov())?;
    let m = &inv * covariance_derivative(pc, step)?;
    Ok(0.25 * (&m * &m).trace())
}

pub fn qfi_terms(pc: &ProbeConfig, step: f64) -> Result<QfiTerms> {
    Ok(QfiTerms {
        mean_term: qfi_first_term(pc, step)?,
        covariance_term: qfi_second_term(pc, step)?,
    })
}

pub fn qfi_full(pc: &ProbeConfig, step: f64) -> Result<f64> {
    Ok(qfi_terms(pc, step)?.total())
}
