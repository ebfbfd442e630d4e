//! The Zou-Wang-Mandel setup as a four-mode squeezed-state network.
//!
//! Modes are ordered `(A_S, B_S, B_I, X)`. Signal `A_S` pairs with the idler
//! `T·B_I + R·X`, signal `B_S` pairs with `B_I`, and a beamsplitter with path
//! phase `φ_S` then mixes the two signals.
//!
//! Phase convention: the idler overlap enters the squeezing matrix as
//! `T = |T|·e^{−iθ_T}`. With this choice every observable depends on the two
//! phases only through `φ_S + θ_T`.

use std::f64::consts::FRAC_1_SQRT_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gaussian::GaussianState;
use crate::linalg::{embed_unitary_unchecked, Complex64, ComplexMatrix, RealMatrix};
use crate::network::{build_state, SqueezeMatrix};

pub const MODES: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZwmConfig {
    pub g: f64,
    pub t_mag: f64,
    pub theta_t: f64,
    pub phi_s: f64,
}

impl ZwmConfig {
    pub fn new(g: f64, t_mag: f64, theta_t: f64, phi_s: f64) -> Result<Self> {
        let cfg = ZwmConfig {
            g,
            t_mag,
            theta_t,
            phi_s,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if ![self.g, self.t_mag, self.theta_t, self.phi_s]
            .iter()
            .all(|x| x.is_finite())
        {
            return Err(Error::NonFinite);
        }
        if self.g < 0.0 {
            return Err(Error::Parameter(format!(
                "g must be non-negative, got {}",
                self.g
            )));
        }
        if !(0.0..=1.0).contains(&self.t_mag) {
            return Err(Error::Parameter(format!(
                "|T| must lie in [0, 1], got {}",
                self.t_mag
            )));
        }
        Ok(())
    }

    pub fn r(&self) -> f64 {
        (1.0 - self.t_mag * self.t_mag).max(0.0).sqrt()
    }

    /// `φ_S + θ_T`, the only phase combination observables depend on.
    pub fn total_phase(&self) -> f64 {
        self.phi_s + self.theta_t
    }
}

/// Effective squeezing `(g√(1+|T|), g√(1−|T|))`.
pub fn effective_gains(g: f64, t_mag: f64) -> (f64, f64) {
    (g * (1.0 + t_mag).sqrt(), g * (1.0 - t_mag).max(0.0).sqrt())
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn zwm_l(cfg: &ZwmConfig) -> Result<SqueezeMatrix> {
    cfg.validate()?;
    let t = Complex64::from_polar(cfg.t_mag, -cfg.theta_t);
    let r = c(cfg.r(), 0.0);
    let one = c(1.0, 0.0);
    let mut l = ComplexMatrix::zeros(MODES, MODES);
    for (i, j, v) in [(0, 2, t), (0, 3, r), (1, 2, one)] {
        l[(i, j)] = v * cfg.g;
        l[(j, i)] = v * cfg.g;
    }
    SqueezeMatrix::new(l)
}

/// The closed-form unitary whose first (last) two columns span the
/// `g²(1+|T|)` (`g²(1−|T|)`) eigenspace of `L·L†`. It is not a Takagi
/// unitary of `L`; the pipeline never uses it.
pub fn zwm_w(cfg: &ZwmConfig) -> Result<ComplexMatrix> {
    cfg.validate()?;
    let e = Complex64::from_polar(1.0, -cfg.theta_t);
    let s = FRAC_1_SQRT_2;
    let up = ((1.0 + cfg.t_mag) / 2.0).sqrt();
    let dn = ((1.0 - cfg.t_mag) / 2.0).max(0.0).sqrt();
    let z = c(0.0, 0.0);
    #[rustfmt::skip]
    let w = ComplexMatrix::from_row_slice(4, 4, &[
        e * s,       z,          -e * s,      z,
        c(s, 0.0),   z,          c(s, 0.0),   z,
        z,           e * up,     z,           -e * dn,
        z,           c(dn, 0.0), z,           c(up, 0.0),
    ]);
    Ok(w)
}

/// Symplectic eigenvalue branches `ν^±_± = e^{±2g√(1±|T|)}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NuSpectrum {
    pub nu_plus_plus: f64,
    pub nu_minus_plus: f64,
    pub nu_plus_minus: f64,
    pub nu_minus_minus: f64,
}

pub fn nu_spectrum(g: f64, t_mag: f64) -> NuSpectrum {
    let (a, b) = effective_gains(g, t_mag);
    NuSpectrum {
        nu_plus_plus: (2.0 * a).exp(),
        nu_minus_plus: (-2.0 * a).exp(),
        nu_plus_minus: (2.0 * b).exp(),
        nu_minus_minus: (-2.0 * b).exp(),
    }
}

/// Mode-space beamsplitter `Y = ½√2·[[1, i·e^{iφ}], [i, e^{iφ}]] ⊕ I₂`.
pub fn beamsplitter_unitary(phi_s: f64) -> ComplexMatrix {
    let e = Complex64::from_polar(1.0, phi_s);
    let i = Complex64::i();
    let s = c(FRAC_1_SQRT_2, 0.0);
    let mut y = ComplexMatrix::identity(MODES, MODES);
    y[(0, 0)] = s;
    y[(0, 1)] = s * i * e;
    y[(1, 0)] = s * i;
    y[(1, 1)] = s * e;
    y
}

/// The 8×8 quadrature matrix `O_BS` with `Σ ↦ O_BSᵀ Σ O_BS`.
pub fn signal_beamsplitter(phi_s: f64) -> RealMatrix {
    embed_unitary_unchecked(&beamsplitter_unitary(phi_s).transpose())
}

pub fn pre_beamsplitter_state(cfg: &ZwmConfig) -> Result<GaussianState> {
    build_state(&zwm_l(cfg)?)
}

pub fn post_beamsplitter_state(cfg: &ZwmConfig) -> Result<GaussianState> {
    pre_beamsplitter_state(cfg)?.apply_passive(&beamsplitter_unitary(cfg.phi_s))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Photocurrents {
    pub n_s1: f64,
    pub n_s2: f64,
}

/// Closed-form detector photon numbers.
///
/// `cosh(2a)/4 − ¼ = ½sinh²a`, so the form below avoids the cancellation
/// against `½` at small gain.
pub fn photocurrents_closed(cfg: &ZwmConfig) -> Result<Photocurrents> {
    cfg.validate()?;
    let (a, b) = effective_gains(cfg.g, cfg.t_mag);
    let sa = a.sinh().powi(2);
    let sb = b.sinh().powi(2);
    let s = cfg.total_phase().sin();
    Ok(Photocurrents {
        n_s1: 0.5 * (sa * (1.0 - s) + sb * (1.0 + s)),
        n_s2: 0.5 * (sa * (1.0 + s) + sb * (1.0 - s)),
    })
}

pub fn photocurrents_pipeline(cfg: &ZwmConfig) -> Result<Photocurrents> {
    let st = post_beamsplitter_state(cfg)?;
    Ok(Photocurrents {
        n_s1: st.photon_number(0)?,
        n_s2: st.photon_number(1)?,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Coherence {
    pub gamma: f64,
    /// Set when the ratio is 0/0 and `gamma` holds the limiting value.
    pub degenerate: bool,
}

/// A port is dark when its photon number is below this fraction of the
/// covariance scale, the floor of rounding noise in the pipeline.
const DARK_PORT: f64 = 1e-13;

/// `|⟨a_{S1}†a_{S2}⟩| / √(n_{S1} n_{S2})` read off the post-beamsplitter
/// covariance.
///
/// At `g = 0` the value is the small-gain limit `|T|`. When one detector is
/// dark at `g > 0` (`|T| = 1` with destructive interference) the other port
/// carries a single pure mode and the value is 1.
pub fn coherence_gamma(cfg: &ZwmConfig) -> Result<Coherence> {
    cfg.validate()?;
    if cfg.g == 0.0 {
        return Ok(Coherence {
            gamma: cfg.t_mag,
            degenerate: true,
        });
    }
    let st = post_beamsplitter_state(cfg)?;
    let s = st.cov();
    let re = s[(0, 1)] + s[(4, 5)];
    let im = s[(0, 5)] - s[(1, 4)];
    let numerator = 0.5 * (re * re + im * im).sqrt();
    let n1 = st.photon_number(0)?;
    let n2 = st.photon_number(1)?;
    let floor = DARK_PORT * s.trace().max(1.0);
    if n1.min(n2) <= floor {
        return Ok(Coherence {
            gamma: 1.0,
            degenerate: true,
        });
    }
    Ok(Coherence {
        gamma: numerator / (n1 * n2).sqrt(),
        degenerate: false,
    })
}

/// Coherence at `θ_T = φ_S = 0`:
/// `(cosh 2a − cosh 2b)/(cosh 2a + cosh 2b − 2)` with `a, b` the effective
/// gains, evaluated as `sinh(a+b)·sinh(a−b)/(sinh²a + sinh²b)`.
///
/// Even in `g`; `g = 0` returns the limit `|T|`.
pub fn coherence_gamma_closed(g: f64, t_mag: f64) -> f64 {
    if g == 0.0 {
        return t_mag;
    }
    let (a, b) = effective_gains(g.abs(), t_mag);
    (a + b).sinh() * (a - b).sinh() / (a.sinh().powi(2) + b.sinh().powi(2))
}

/// Coherence predicted by a sequential two-crystal model at the bare gain.
pub fn coherence_gamma_sequential(g: f64, t_mag: f64) -> f64 {
    t_mag * g.cosh() / (1.0 + t_mag * t_mag * g.sinh().powi(2)).sqrt()
}

/// The 8×8 pre-beamsplitter covariance assembled column by column from the
/// closed-form entries (upper triangle mirrored). `φ_S` is unused.
pub fn closed_form_covariance(cfg: &ZwmConfig) -> Result<RealMatrix> {
    cfg.validate()?;
    let NuSpectrum {
        nu_plus_plus: npp,
        nu_minus_plus: nmp,
        nu_plus_minus: npm,
        nu_minus_minus: nmm,
    } = nu_spectrum(cfg.g, cfg.t_mag);
    let t = cfg.t_mag;
    let r = cfg.r();
    let (s, co) = cfg.theta_t.sin_cos();
    let (s2, c2) = (s * s, co * co);
    let s2t = (2.0 * cfg.theta_t).sin();

    let mut m = RealMatrix::zeros(8, 8);
    let mut put = |i: usize, j: usize, v: f64| {
        m[(i, j)] = v / 4.0;
        m[(j, i)] = v / 4.0;
    };
    put(0, 0, (npm + npp) * s2 + (nmp + nmm) * c2);
    put(1, 0, (nmp - nmm) * co);
    put(4, 0, 0.5 * (npm + npp - nmp - nmm) * s2t);
    put(5, 0, (npp - npm) * s);

    put(1, 1, nmp + nmm);
    put(4, 1, (nmm - nmp) * s);

    put(
        2,
        2,
        (1.0 - t) * (npm * s2 + nmm * c2) + (1.0 + t) * (npp * s2 + nmp * c2),
    );
    put(3, 2, r * (nmp - nmm) * co);
    put(
        6,
        2,
        0.5 * (1.0 - t) * (npm - nmm) * s2t + 0.5 * (1.0 + t) * (npp - nmp) * s2t,
    );
    put(7, 2, r * (npp - npm) * s);

    put(3, 3, (1.0 - t) * nmp + (1.0 + t) * nmm);
    put(6, 3, r * (nmm - nmp) * s);

    put(4, 4, (npp + npm) * c2 + (nmp + nmm) * s2);
    put(5, 4, (npp - npm) * co);

    put(5, 5, npm + npp);

    put(
        6,
        6,
        (1.0 - t) * (npm * c2 + nmm * s2) + (1.0 + t) * (npp * c2 + nmp * s2),
    );
    put(7, 6, r * (npp - npm) * co);

    put(7, 7, (1.0 - t) * npp + (1.0 + t) * npm);
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{check_orthogonal, check_symplectic, max_abs, takagi, unitarity_defect};
    use nalgebra::DVector;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_6};

    fn cfg(g: f64, t: f64, th: f64, phi: f64) -> ZwmConfig {
        ZwmConfig::new(g, t, th, phi).unwrap()
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(ZwmConfig::new(-0.1, 0.5, 0.0, 0.0).is_err());
        assert!(ZwmConfig::new(0.1, 1.5, 0.0, 0.0).is_err());
        assert!(ZwmConfig::new(f64::NAN, 0.5, 0.0, 0.0).is_err());
    }

    #[test]
    fn takagi_values_of_l() {
        let l = zwm_l(&cfg(1.0, 0.6, 0.0, 0.0)).unwrap();
        let tk = takagi(l.matrix()).unwrap();
        let expect = [1.6f64.sqrt(), 1.6f64.sqrt(), 0.4f64.sqrt(), 0.4f64.sqrt()];
        for (d, e) in tk.singular_values.iter().zip(expect) {
            assert!((d - e).abs() < 1e-12);
        }
    }

    #[test]
    fn rank_two_at_perfect_identity() {
        let l = zwm_l(&cfg(1.0, 1.0, 0.0, 0.0)).unwrap();
        let tk = takagi(l.matrix()).unwrap();
        assert_eq!(tk.singular_values.iter().filter(|&&s| s > 1e-12).count(), 2);
    }

    #[test]
    fn uncoupled_at_zero_overlap() {
        let l = zwm_l(&cfg(0.7, 0.0, 0.4, 0.0)).unwrap();
        let m = l.matrix();
        assert_eq!(m[(0, 2)].norm(), 0.0);
        assert!((m[(0, 3)].re - 0.7).abs() < 1e-15);
        assert!((m[(1, 2)].re - 0.7).abs() < 1e-15);
    }

    #[test]
    fn closed_form_w_spans_eigenspaces() {
        for &(t, th) in &[(0.5, 0.3), (1.0, 0.0), (0.0, 1.2), (0.9, 2.0)] {
            let c = cfg(0.8, t, th, 0.0);
            let l = zwm_l(&c).unwrap().matrix().clone();
            let w = zwm_w(&c).unwrap();
            assert!(unitarity_defect(&w) < 1e-14);
            let llh = &l * l.adjoint();
            for (k, lam) in [(0, 1.0 + t), (1, 1.0 + t), (2, 1.0 - t), (3, 1.0 - t)] {
                let col = w.column(k).into_owned();
                let resid = &llh * &col - &col * Complex64::new(0.64 * lam, 0.0);
                assert!(resid.norm() < 1e-14, "t={t} col={k}");
            }
        }
    }

    #[test]
    fn closed_form_w_is_not_takagi() {
        let c = cfg(0.2, 0.5, 0.3, 0.0);
        let w = zwm_w(&c).unwrap();
        let (a, b) = effective_gains(0.2, 0.5);
        let d = ComplexMatrix::from_diagonal(&DVector::from_vec(vec![
            c_re(a),
            c_re(a),
            c_re(b),
            c_re(b),
        ]));
        let resid = (&w * d * w.transpose() - zwm_l(&c).unwrap().matrix()).norm();
        assert!(resid > 0.1);
    }

    fn c_re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn beamsplitter_structure() {
        for phi in [0.0, 0.7, 2.9] {
            let o = signal_beamsplitter(phi);
            assert!(check_symplectic(&o, 1e-12) && check_orthogonal(&o, 1e-12));
            for k in [2, 3, 6, 7] {
                for j in 0..8 {
                    let id = if j == k { 1.0 } else { 0.0 };
                    assert_eq!(o[(k, j)], id);
                    assert_eq!(o[(j, k)], id);
                }
            }
        }
        let vac = GaussianState::vacuum(4);
        let out = vac.apply_symplectic(&signal_beamsplitter(0.3)).unwrap();
        assert!(max_abs(&(out.cov() - vac.cov())) < 1e-15);
    }

    #[test]
    fn passive_and_symplectic_paths_agree() {
        let c = cfg(0.6, 0.4, 0.2, 1.3);
        let pre = pre_beamsplitter_state(&c).unwrap();
        let a = pre.apply_passive(&beamsplitter_unitary(c.phi_s)).unwrap();
        let b = pre.apply_symplectic(&signal_beamsplitter(c.phi_s)).unwrap();
        assert!(max_abs(&(a.cov() - b.cov())) < 1e-13);
    }

    #[test]
    fn destructive_port() {
        for g in [0.1, 0.8, 2.0] {
            let p = photocurrents_closed(&cfg(g, 1.0, 0.0, FRAC_PI_2)).unwrap();
            assert_eq!(p.n_s1, 0.0);
            assert!(
                photocurrents_pipeline(&cfg(g, 1.0, 0.0, FRAC_PI_2))
                    .unwrap()
                    .n_s1
                    .abs()
                    < 1e-10
            );
        }
    }

    #[test]
    fn small_gain_limit() {
        let g = 1e-3;
        let p = photocurrents_closed(&cfg(g, 0.7, 0.0, FRAC_PI_6)).unwrap();
        assert!((p.n_s1 / (g * g) - 0.65).abs() < 1e-5);
    }

    #[test]
    fn closed_matches_pipeline() {
        for g in [0.1, 0.5, 1.0, 1.5] {
            for t in [0.0, 0.3, 0.6, 0.9, 1.0] {
                for th in [0.0, 0.3, 2.0] {
                    for phi in [0.0, 0.5, 1.1, 4.0] {
                        let c = cfg(g, t, th, phi);
                        let a = photocurrents_closed(&c).unwrap();
                        let b = photocurrents_pipeline(&c).unwrap();
                        assert!((a.n_s1 - b.n_s1).abs() < 1e-10, "{c:?}");
                        assert!((a.n_s2 - b.n_s2).abs() < 1e-10, "{c:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn phase_enters_as_sum() {
        let a = photocurrents_pipeline(&cfg(0.9, 0.55, 0.4, 1.0)).unwrap();
        let b = photocurrents_pipeline(&cfg(0.9, 0.55, 0.1, 1.3)).unwrap();
        assert!((a.n_s1 - b.n_s1).abs() < 1e-11 && (a.n_s2 - b.n_s2).abs() < 1e-11);
        // negating sin(φ_S + θ_T) swaps the ports
        let c = photocurrents_pipeline(&cfg(0.9, 0.55, 0.0, -1.4)).unwrap();
        assert!((a.n_s1 - c.n_s2).abs() < 1e-11 && (a.n_s2 - c.n_s1).abs() < 1e-11);
    }

    #[test]
    fn energy_bookkeeping() {
        let g: f64 = 0.75;
        let c = cfg(g, 0.0, 0.0, 0.9);
        let p = photocurrents_pipeline(&c).unwrap();
        assert!((p.n_s1 + p.n_s2 - 2.0 * g.sinh().powi(2)).abs() < 1e-10);
        let c = cfg(g, 0.45, 0.3, 0.9);
        let pre = pre_beamsplitter_state(&c).unwrap();
        let p = photocurrents_pipeline(&c).unwrap();
        let before = pre.photon_number(0).unwrap() + pre.photon_number(1).unwrap();
        assert!((p.n_s1 + p.n_s2 - before).abs() < 1e-10);
    }

    #[test]
    fn coherence_limits() {
        for g in [0.3, 1.2] {
            let full = coherence_gamma(&cfg(g, 1.0, 0.0, 0.0)).unwrap();
            assert!((full.gamma - 1.0).abs() < 1e-10 && !full.degenerate);
            let none = coherence_gamma(&cfg(g, 0.0, 0.0, 0.0)).unwrap();
            assert!(none.gamma.abs() < 1e-12);
        }
        let zero = coherence_gamma(&cfg(0.0, 0.4, 0.0, 0.0)).unwrap();
        assert!(zero.degenerate && zero.gamma == 0.4);
        let dark = coherence_gamma(&cfg(0.5, 1.0, 0.0, FRAC_PI_2)).unwrap();
        assert!(dark.degenerate && dark.gamma == 1.0);
    }

    #[test]
    fn coherence_closed_matches_covariance() {
        let g = 4.48f64.ln();
        let c = coherence_gamma(&cfg(g, 0.5, 0.0, 0.0)).unwrap();
        let closed = coherence_gamma_closed(g, 0.5);
        assert!((c.gamma - closed).abs() < 1e-10);
        assert!(closed > 0.5);
        let x = 2.0 * g * 1.5f64.sqrt();
        let y = 2.0 * g * 0.5f64.sqrt();
        let naive = (x.cosh() - y.cosh()) / (x.cosh() + y.cosh() - 2.0);
        assert!((closed - naive).abs() < 1e-13);
    }

    #[test]
    fn closed_coherence_below_sequential_model() {
        let g = 15.64f64.ln();
        assert!(coherence_gamma_closed(g, 0.25) < coherence_gamma_sequential(g, 0.25));
        assert_eq!(coherence_gamma_sequential(0.0, 0.3), 0.3);
        assert!((coherence_gamma_sequential(1.7, 1.0) - 1.0).abs() < 1e-15);
        assert!((coherence_gamma_closed(1.7, 1.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn closed_form_spot_values() {
        let g: f64 = 0.6;
        let b = closed_form_covariance(&cfg(g, 0.3, 0.0, 0.0)).unwrap();
        assert_eq!(b[(0, 4)], 0.0);
        let b = closed_form_covariance(&cfg(g, 0.0, 0.7, 0.0)).unwrap();
        assert!((b[(3, 3)] - 0.5 * (-2.0 * g).exp()).abs() < 1e-15);
        assert_eq!(b, b.transpose());
    }

    #[test]
    fn nu_branches_are_reciprocal() {
        let nu = nu_spectrum(0.9, 0.35);
        assert!((nu.nu_plus_plus * nu.nu_minus_plus - 1.0).abs() < 1e-14);
        assert!((nu.nu_plus_minus * nu.nu_minus_minus - 1.0).abs() < 1e-14);
    }
}
