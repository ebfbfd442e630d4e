//! Gaussian states in qp-order.
//!
//! Quadratures are ordered `R = (q₁ … q_M, p₁ … p_M)` with `a = (q + i p)/√2`,
//! `ħ = 1`, and vacuum covariance `½·I`. A Gaussian unitary acts as
//! `U†RU = R·S`, so covariances transform as `Sᵀ·Σ·S` and row means as `m·S`.

use nalgebra::{DVector, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    check_symplectic, embed_unitary_unchecked, max_abs, symplectic_form, unitarity_defect,
    Complex64, ComplexMatrix, RealMatrix, DECOMPOSITION_TOL,
};

pub const VACUUM_VARIANCE: f64 = 0.5;

#[derive(Clone, Debug, PartialEq)]
pub struct GaussianState {
    modes: usize,
    mean: DVector<f64>,
    cov: RealMatrix,
}

impl GaussianState {
    pub fn vacuum(modes: usize) -> Self {
        assert!(modes >= 1, "a Gaussian state needs at least one mode");
        let n = 2 * modes;
        GaussianState {
            modes,
            mean: DVector::zeros(n),
            cov: RealMatrix::identity(n, n) * VACUUM_VARIANCE,
        }
    }

    pub fn from_parts(mean: DVector<f64>, cov: RealMatrix) -> Result<Self> {
        let n = cov.nrows();
        if n == 0 || !n.is_multiple_of(2) || cov.ncols() != n || mean.len() != n {
            return Err(Error::Dimension(format!(
                "mean of length {} with {}x{} covariance",
                mean.len(),
                cov.nrows(),
                cov.ncols()
            )));
        }
        if mean.iter().chain(cov.iter()).any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        let asym = max_abs(&(&cov - cov.transpose()));
        if asym > DECOMPOSITION_TOL * max_abs(&cov).max(1.0) {
            return Err(Error::Dimension(format!(
                "covariance is not symmetric (max asymmetry {asym:.3e})"
            )));
        }
        let cov = (&cov + cov.transpose()) * 0.5;
        Ok(GaussianState {
            modes: n / 2,
            mean,
            cov,
        })
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn mean(&self) -> &DVector<f64> {
        &self.mean
    }

    pub fn cov(&self) -> &RealMatrix {
        &self.cov
    }

    fn check_mode(&self, j: usize) -> Result<()> {
        if j < self.modes {
            Ok(())
        } else {
            Err(Error::ModeIndex {
                index: j,
                modes: self.modes,
            })
        }
    }

    /// Passive optics `U` with `U a† U† = a† Y`. The quadrature matrix is
    /// `O = [[Re Yᵀ, Im Yᵀ], [−Im Yᵀ, Re Yᵀ]]`.
    pub fn apply_passive(&self, y: &ComplexMatrix) -> Result<GaussianState> {
        if y.nrows() != self.modes || y.ncols() != self.modes {
            return Err(Error::Dimension(format!(
                "{}x{} passive unitary on {} modes",
                y.nrows(),
                y.ncols(),
                self.modes
            )));
        }
        let defect = unitarity_defect(y);
        if defect > DECOMPOSITION_TOL {
            return Err(Error::NotUnitary(defect));
        }
        let o = embed_unitary_unchecked(&y.transpose());
        Ok(self.transform(&o))
    }

    /// Gaussian unitary with `U†RU = R·S`.
    pub fn apply_symplectic(&self, s: &RealMatrix) -> Result<GaussianState> {
        let n = 2 * self.modes;
        if s.nrows() != n || s.ncols() != n {
            return Err(Error::Dimension(format!(
                "{}x{} symplectic on {} modes",
                s.nrows(),
                s.ncols(),
                self.modes
            )));
        }
        let scale = max_abs(s).max(1.0);
        let tol = DECOMPOSITION_TOL * scale * scale;
        if !check_symplectic(s, tol) {
            let delta = symplectic_form(self.modes);
            return Err(Error::NotSymplectic(max_abs(
                &(s.transpose() * &delta * s - &delta),
            )));
        }
        Ok(self.transform(s))
    }

    fn transform(&self, s: &RealMatrix) -> GaussianState {
        let cov = s.transpose() * &self.cov * s;
        GaussianState {
            modes: self.modes,
            mean: s.transpose() * &self.mean,
            cov: (&cov + cov.transpose()) * 0.5,
        }
    }

    /// Shifts the mean by `shift`; the covariance is untouched.
    pub fn displace(&self, shift: &DVector<f64>) -> Result<GaussianState> {
        if shift.len() != 2 * self.modes {
            return Err(Error::Dimension(format!(
                "shift of length {} on {} modes",
                shift.len(),
                self.modes
            )));
        }
        if shift.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(GaussianState {
            modes: self.modes,
            mean: &self.mean + shift,
            cov: self.cov.clone(),
        })
    }

    /// `⟨a_j†a_j⟩ = ½(Σ_jj + Σ_{M+j,M+j} − 1) + ½(m_j² + m_{M+j}²)`.
    pub fn photon_number(&self, j: usize) -> Result<f64> {
        self.check_mode(j)?;
        let m = self.modes;
        let fluct = 0.5 * (self.cov[(j, j)] + self.cov[(m + j, m + j)]) - 0.5;
        let coherent = 0.5 * (self.mean[j].powi(2) + self.mean[m + j].powi(2));
        Ok(fluct + coherent)
    }

    pub fn total_photon_number(&self) -> f64 {
        (0..self.modes)
            .map(|j| self.photon_number(j).expect("index in range"))
            .sum()
    }

    /// `⟨a_i†a_j⟩`, Hermitian in `(i, j)`; the diagonal is the photon number.
    pub fn mode_correlator(&self, i: usize, j: usize) -> Result<Complex64> {
        self.check_mode(i)?;
        self.check_mode(j)?;
        let m = self.modes;
        let s = &self.cov;
        let re = 0.5 * (s[(i, j)] + s[(m + i, m + j)]);
        let im = 0.5 * (s[(i, m + j)] - s[(m + i, j)]);
        let delta = if i == j { 0.5 } else { 0.0 };
        let alpha_i = Complex64::new(self.mean[i], self.mean[m + i]) / 2f64.sqrt();
        let alpha_j = Complex64::new(self.mean[j], self.mean[m + j]) / 2f64.sqrt();
        Ok(Complex64::new(re - delta, im) + alpha_i.conj() * alpha_j)
    }

    /// Symplectic eigenvalues (moduli of the spectrum of `iΔΣ`), descending.
    pub fn symplectic_spectrum(&self) -> Result<Vec<f64>> {
        let m = self.modes;
        let eig = SymmetricEigen::new(self.cov.clone());
        if eig.eigenvalues.iter().any(|&v| v <= 0.0) {
            return Err(Error::SingularCovariance);
        }
        let root = &eig.eigenvectors
            * RealMatrix::from_diagonal(&eig.eigenvalues.map(f64::sqrt))
            * eig.eigenvectors.transpose();
        let a = &root * symplectic_form(m) * &root;
        // a is antisymmetric with eigenvalues ±iν, so aᵀa has each ν² twice
        let mut sq: Vec<f64> = SymmetricEigen::new(a.transpose() * &a)
            .eigenvalues
            .iter()
            .map(|v| v.max(0.0))
            .collect();
        sq.sort_by(|x, y| y.total_cmp(x));
        let nu: Vec<f64> = sq.iter().step_by(2).map(|v| v.sqrt()).collect();
        let smallest = nu.last().copied().unwrap_or(VACUUM_VARIANCE);
        // rounding in Σ scales with its largest entry
        if smallest < VACUUM_VARIANCE - DECOMPOSITION_TOL * max_abs(&self.cov).max(1.0) {
            return Err(Error::UncertaintyViolation(smallest));
        }
        Ok(nu)
    }

    /// Smallest eigenvalue of the Hermitian matrix `Σ + (i/2)Δ`.
    pub fn uncertainty_margin(&self) -> f64 {
        let n = 2 * self.modes;
        let delta = symplectic_form(self.modes) * 0.5;
        // Hermitian A + iB embedded as [[A, −B], [B, A]]
        let mut big = RealMatrix::zeros(2 * n, 2 * n);
        big.view_mut((0, 0), (n, n)).copy_from(&self.cov);
        big.view_mut((n, n), (n, n)).copy_from(&self.cov);
        big.view_mut((0, n), (n, n)).copy_from(&(-&delta));
        big.view_mut((n, 0), (n, n)).copy_from(&delta);
        SymmetricEigen::new(big).eigenvalues.min()
    }

    pub fn is_pure(&self, tol: f64) -> bool {
        self.symplectic_spectrum()
            .map(|nu| nu.iter().all(|v| (v - VACUUM_VARIANCE).abs() <= tol))
            .unwrap_or(false)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Wire form: `{"M": int, "mean": [2M], "cov": [[2M×2M]]}`, row-major, with
/// quadratures in qp-order `(q₁…q_M, p₁…p_M)`.
#[derive(Serialize, Deserialize)]
struct GaussianStateJson {
    #[serde(rename = "M")]
    modes: usize,
    mean: Vec<f64>,
    cov: Vec<Vec<f64>>,
}

impl Serialize for GaussianState {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let n = 2 * self.modes;
        GaussianStateJson {
            modes: self.modes,
            mean: self.mean.iter().copied().collect(),
            cov: (0..n)
                .map(|i| (0..n).map(|j| self.cov[(i, j)]).collect())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GaussianState {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = GaussianStateJson::deserialize(deserializer)?;
        let n = 2 * raw.modes;
        if raw.cov.len() != n || raw.cov.iter().any(|row| row.len() != n) {
            return Err(D::Error::custom(format!("cov must be {n}x{n}")));
        }
        let cov = RealMatrix::from_fn(n, n, |i, j| raw.cov[i][j]);
        GaussianState::from_parts(DVector::from_vec(raw.mean), cov).map_err(D::Error::custom)
    }
}
