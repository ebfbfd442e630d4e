//! Squeezed-state networks `|Φ_L⟩ = exp(½ a†La†ᵀ − h.c.)|0⟩`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gaussian::GaussianState;
use crate::linalg::{bloch_messiah, frobenius, takagi, Complex64, ComplexMatrix, RealMatrix};

/// A complex symmetric squeezing matrix.
///
/// A network proper has a zero diagonal (only pair creation between distinct
/// modes); `with_diagonal` lifts that restriction for single-mode squeezers.
#[derive(Clone, Debug, PartialEq)]
pub struct SqueezeMatrix {
    l: ComplexMatrix,
}

impl SqueezeMatrix {
    pub fn new(l: ComplexMatrix) -> Result<Self> {
        let sm = Self::with_diagonal(l)?;
        if let Some(j) = (0..sm.modes()).find(|&j| sm.l[(j, j)] != Complex64::new(0.0, 0.0)) {
            return Err(Error::NonzeroDiagonal(j));
        }
        Ok(sm)
    }

    pub fn with_diagonal(l: ComplexMatrix) -> Result<Self> {
        let m = l.nrows();
        if m == 0 || l.ncols() != m {
            return Err(Error::Dimension(format!(
                "squeeze matrix must be square, got {}x{}",
                l.nrows(),
                l.ncols()
            )));
        }
        if l.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let asym = frobenius(&(&l - l.transpose()));
        if asym > crate::linalg::DECOMPOSITION_TOL * frobenius(&l).max(1.0) {
            return Err(Error::NotSymmetric(asym));
        }
        Ok(SqueezeMatrix { l })
    }

    /// Enforces `|L_ij| ≤ bound` for every entry.
    pub fn with_gain_bound(self, bound: f64) -> Result<Self> {
        let m = self.modes();
        for row in 0..m {
            for col in 0..m {
                let value = self.l[(row, col)].norm();
                if value > bound {
                    return Err(Error::GainBound {
                        row,
                        col,
                        value,
                        bound,
                    });
                }
            }
        }
        Ok(self)
    }

    pub fn zeros(modes: usize) -> Self {
        SqueezeMatrix {
            l: ComplexMatrix::zeros(modes, modes),
        }
    }

    /// Two-mode squeezer `g(a₁†a₂† − a₁a₂)`.
    pub fn two_mode(g: f64) -> Self {
        let mut l = ComplexMatrix::zeros(2, 2);
        l[(0, 1)] = Complex64::new(g, 0.0);
        l[(1, 0)] = Complex64::new(g, 0.0);
        SqueezeMatrix { l }
    }

    pub fn modes(&self) -> usize {
        self.l.nrows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.l
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[derive(Serialize, Deserialize)]
struct SqueezeMatrixJson {
    #[serde(rename = "M")]
    modes: usize,
    re: Vec<Vec<f64>>,
    im: Vec<Vec<f64>>,
}

impl Serialize for SqueezeMatrix {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let m = self.modes();
        let part = |f: fn(&Complex64) -> f64| -> Vec<Vec<f64>> {
            (0..m)
                .map(|i| (0..m).map(|j| f(&self.l[(i, j)])).collect())
                .collect()
        };
        SqueezeMatrixJson {
            modes: m,
            re: part(|z| z.re),
            im: part(|z| z.im),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SqueezeMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = SqueezeMatrixJson::deserialize(deserializer)?;
        let m = raw.modes;
        let shaped = |a: &Vec<Vec<f64>>| a.len() == m && a.iter().all(|r| r.len() == m);
        if !shaped(&raw.re) || !shaped(&raw.im) {
            return Err(D::Error::custom(format!("re and im must be {m}x{m}")));
        }
        let l = ComplexMatrix::from_fn(m, m, |i, j| Complex64::new(raw.re[i][j], raw.im[i][j]));
        SqueezeMatrix::with_diagonal(l).map_err(D::Error::custom)
    }
}

/// Covariance of `|Φ_L⟩` (zero mean, pure).
pub fn build_state(l: &SqueezeMatrix) -> Result<GaussianState> {
    let bm = bloch_messiah(l.matrix())?;
    let m = l.modes();
    GaussianState::from_parts(nalgebra::DVector::zeros(2 * m), bm.covariance())
}

/// `S` with `U†RU = R·S` for the network unitary, so that `½SᵀS` is the
/// network covariance. It is symmetric, hence also the image of a row mean.
pub fn build_symplectic(l: &SqueezeMatrix) -> Result<RealMatrix> {
    Ok(bloch_messiah(l.matrix())?.symplectic())
}

/// `Σ_j sinh²λ_j` over the Takagi values.
pub fn total_energy(l: &SqueezeMatrix) -> Result<f64> {
    Ok(takagi(l.matrix())?
        .singular_values
        .iter()
        .map(|s| s.sinh().powi(2))
        .sum())
}

/// Number of Takagi values above `tol`.
pub fn takagi_rank(l: &SqueezeMatrix, tol: f64) -> Result<usize> {
    Ok(takagi(l.matrix())?
        .singular_values
        .iter()
        .filter(|&&s| s > tol)
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{check_symplectic, max_abs};

    #[test]
    fn zero_matrix_gives_vacuum() {
        let st = build_state(&SqueezeMatrix::zeros(3)).unwrap();
        assert_eq!(st, GaussianState::vacuum(3));
        assert_eq!(
            build_symplectic(&SqueezeMatrix::zeros(2)).unwrap(),
            RealMatrix::identity(4, 4)
        );
        assert_eq!(total_energy(&SqueezeMatrix::zeros(2)).unwrap(), 0.0);
    }

    #[test]
    fn two_mode_squeezer_correlates_positions() {
        let g: f64 = 0.5;
        let st = build_state(&SqueezeMatrix::two_mode(g)).unwrap();
        let cov = st.cov();
        // Var(q₁ − q₂) = e^{−2g}: positions are positively correlated
        let var_diff = cov[(0, 0)] + cov[(1, 1)] - 2.0 * cov[(0, 1)];
        assert!((var_diff - (-2.0 * g).exp()).abs() < 1e-14);
        assert!(cov[(0, 1)] > 0.0);
        assert!(cov[(2, 3)] < 0.0);
        for j in 0..2 {
            assert!((st.photon_number(j).unwrap() - g.sinh().powi(2)).abs() < 1e-14);
        }
        assert!(st.mode_correlator(0, 1).unwrap().norm() < 1e-14);
        assert!((total_energy(&SqueezeMatrix::two_mode(g)).unwrap() - 0.543081).abs() < 1e-6);
    }

    #[test]
    fn symplectic_reproduces_state() {
        let l = SqueezeMatrix::two_mode(0.8);
        let s = build_symplectic(&l).unwrap();
        assert!(check_symplectic(&s, 1e-12));
        let from_s = GaussianState::vacuum(2).apply_symplectic(&s).unwrap();
        assert!(max_abs(&(from_s.cov() - build_state(&l).unwrap().cov())) < 1e-12);
    }

    #[test]
    fn single_mode_squeezer_needs_override() {
        let l = ComplexMatrix::from_element(1, 1, Complex64::new(0.2, 0.0));
        assert!(matches!(
            SqueezeMatrix::new(l.clone()),
            Err(Error::NonzeroDiagonal(0))
        ));
        let sm = SqueezeMatrix::with_diagonal(l).unwrap();
        let st = build_state(&sm).unwrap();
        assert!((st.photon_number(0).unwrap() - 0.2f64.sinh().powi(2)).abs() < 1e-15);
    }

    #[test]
    fn gain_bound() {
        assert!(SqueezeMatrix::two_mode(0.5).with_gain_bound(0.6).is_ok());
        assert!(matches!(
            SqueezeMatrix::two_mode(0.5).with_gain_bound(0.4),
            Err(Error::GainBound { .. })
        ));
    }

    #[test]
    fn json_round_trip() {
        let sm = SqueezeMatrix::two_mode(0.25);
        let text = sm.to_json().unwrap();
        assert_eq!(
            text,
            r#"{"M":2,"re":[[0.0,0.25],[0.25,0.0]],"im":[[0.0,0.0],[0.0,0.0]]}"#
        );
        assert_eq!(SqueezeMatrix::from_json(&text).unwrap(), sm);
        assert!(
            SqueezeMatrix::from_json(r#"{"M":2,"re":[[0,1],[2,0]],"im":[[0,0],[0,0]]}"#).is_err()
        );
    }
}
