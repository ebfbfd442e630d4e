//! Decompositions behind the Gaussian pipeline: Autonne-Takagi factorization
//! of complex symmetric matrices, the U(M) -> O(2M) ∩ Sp(2M) embedding, the
//! Bloch-Messiah form of a squeezed-state network, and validity checks.

use nalgebra::{Complex, DMatrix, DVector, SymmetricEigen};

use crate::error::{Error, Result};

pub type Complex64 = Complex<f64>;
pub type ComplexMatrix = DMatrix<Complex64>;
pub type RealMatrix = DMatrix<f64>;

/// Residual tolerance for decompositions (relative to `max(1, ‖L‖_F)`).
pub const DECOMPOSITION_TOL: f64 = 1e-10;
/// Tolerance for orthogonality / symplecticity of analytically built matrices.
pub const STRUCTURE_TOL: f64 = 1e-12;

/// `Δ = [[0, I_M], [-I_M, 0]]` in qp-order.
pub fn symplectic_form(modes: usize) -> RealMatrix {
    let n = 2 * modes;
    let mut delta = RealMatrix::zeros(n, n);
    for j in 0..modes {
        delta[(j, modes + j)] = 1.0;
        delta[(modes + j, j)] = -1.0;
    }
    delta
}

pub(crate) fn frobenius(m: &ComplexMatrix) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub(crate) fn max_abs(m: &RealMatrix) -> f64 {
    m.iter().fold(0.0_f64, |acc, x| acc.max(x.abs()))
}

fn ensure_finite(m: &ComplexMatrix) -> Result<()> {
    if m.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFinite)
    }
}

/// `‖W†W − I‖_max`.
pub fn unitarity_defect(w: &ComplexMatrix) -> f64 {
    let n = w.ncols();
    let gram = w.adjoint() * w;
    let mut worst = 0.0_f64;
    for i in 0..n {
        for j in 0..n {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((gram[(i, j)] - Complex64::new(target, 0.0)).norm());
        }
    }
    worst
}

/// `L = W · diag(D) · Wᵀ` with `W` unitary and `D` non-negative, descending.
#[derive(Clone, Debug)]
pub struct TakagiDecomposition {
    pub unitary: ComplexMatrix,
    pub singular_values: Vec<f64>,
}

impl TakagiDecomposition {
    pub fn modes(&self) -> usize {
        self.singular_values.len()
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        let d = DVector::from_iterator(
            self.modes(),
            self.singular_values.iter().map(|&s| Complex64::new(s, 0.0)),
        );
        let wd = &self.unitary * ComplexMatrix::from_diagonal(&d);
        wd * self.unitary.transpose()
    }

    /// Frobenius norm of `W·diag(D)·Wᵀ − L`.
    pub fn residual(&self, l: &ComplexMatrix) -> f64 {
        frobenius(&(self.reconstruct() - l))
    }

    /// The unitary that carries the Takagi normal modes onto the quadrature
    /// frame of the network state, `V = i·conj(W)`.
    ///
    /// For the generator `½ a†La†ᵀ − h.c.` each Takagi mode is anti-squeezed in
    /// `q`; the factor `i` rotates that onto `p` so the network covariance reads
    /// `Ξ(V) · ½(e^{−2D} ⊕ e^{2D}) · Ξ(V)ᵀ`.
    pub fn quadrature_frame(&self) -> ComplexMatrix {
        self.unitary.map(|z| Complex64::i() * z.conj())
    }
}

/// Autonne-Takagi factorization of a complex symmetric matrix.
///
/// The vectors come from the real symmetric eigenproblem of
/// `B = [[Re L, Im L], [Im L, −Re L]]`: an eigenvector `(x, y)` of `B` with
/// eigenvalue `σ > 0` gives `w = x + i y` with `L·conj(w) = σ w`. Eigenvectors
/// of distinct positive eigenvalues of `B` are complex-orthonormal, so
/// degenerate singular values need no extra phase fixing. The null space is
/// completed by pivoted complex Gram-Schmidt.
pub fn takagi(l: &ComplexMatrix) -> Result<TakagiDecomposition> {
    let m = l.nrows();
    if m == 0 || l.ncols() != m {
        return Err(Error::Dimension(format!(
            "takagi needs a square matrix, got {}x{}",
            l.nrows(),
            l.ncols()
        )));
    }
    ensure_finite(l)?;
    let scale = frobenius(l).max(1.0);
    let asym = frobenius(&(l - l.transpose()));
    if asym > DECOMPOSITION_TOL * scale {
        return Err(Error::NotSymmetric(asym));
    }
    let sym = (l + l.transpose()) * Complex64::new(0.5, 0.0);

    let mut b = RealMatrix::zeros(2 * m, 2 * m);
    for i in 0..m {
        for j in 0..m {
            let z = sym[(i, j)];
            b[(i, j)] = z.re;
            b[(i, m + j)] = z.im;
            b[(m + i, j)] = z.im;
            b[(m + i, m + j)] = -z.re;
        }
    }
    let eig = SymmetricEigen::new(b);

    let mut order: Vec<usize> = (0..2 * m).collect();
    order.sort_by(|&a, &c| eig.eigenvalues[c].total_cmp(&eig.eigenvalues[a]));

    let zero_tol = 64.0 * f64::EPSILON * (2 * m) as f64 * scale;
    let to_complex = |k: usize| -> DVector<Complex64> {
        let col = eig.eigenvectors.column(k);
        DVector::from_iterator(m, (0..m).map(|i| Complex64::new(col[i], col[m + i])))
    };

    let mut columns: Vec<DVector<Complex64>> = Vec::with_capacity(m);
    let mut values: Vec<f64> = Vec::with_capacity(m);
    for &k in &order {
        if columns.len() == m || eig.eigenvalues[k] <= zero_tol {
            break;
        }
        columns.push(to_complex(k));
        values.push(eig.eigenvalues[k]);
    }

    if columns.len() < m {
        let mut candidates: Vec<DVector<Complex64>> = order
            .iter()
            .filter(|&&k| eig.eigenvalues[k].abs() <= zero_tol)
            .map(|&k| to_complex(k))
            .collect();
        // standard basis as a fallback if the null eigenvectors are short
        candidates.extend((0..m).map(|i| {
            let mut e = DVector::zeros(m);
            e[i] = Complex64::new(1.0, 0.0);
            e
        }));
        while columns.len() < m {
            let mut best: Option<(f64, DVector<Complex64>)> = None;
            for cand in &candidates {
                let mut r = cand.clone();
                for q in &columns {
                    let proj = q.dotc(&r);
                    r -= q * proj;
                }
                let norm = r.norm();
                if best.as_ref().is_none_or(|(n, _)| norm > *n + 1e-12) {
                    best = Some((norm, r));
                }
            }
            let (norm, r) = best.expect("candidate set is never empty");
            columns.push(r / Complex64::new(norm, 0.0));
            values.push(0.0);
        }
    }

    for col in columns.iter_mut() {
        canonical_sign(col);
    }

    Ok(TakagiDecomposition {
        unitary: ComplexMatrix::from_columns(&columns),
        singular_values: values,
    })
}

/// Fix the residual ±1 gauge: the first entry of noticeable size gets a
/// positive real part (positive imaginary part if it is purely imaginary).
fn canonical_sign(col: &mut DVector<Complex64>) {
    if let Some(z) = col.iter().find(|z| z.norm() > 1e-8).copied() {
        let flip = if z.re.abs() > 1e-12 {
            z.re < 0.0
        } else {
            z.im < 0.0
        };
        if flip {
            col.neg_mut();
        }
    }
}

/// A real `2M×2M` matrix that is both orthogonal and symplectic.
#[derive(Clone, Debug, PartialEq)]
pub struct OrthoSymplectic {
    matrix: RealMatrix,
}

impl OrthoSymplectic {
    pub fn matrix(&self) -> &RealMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> RealMatrix {
        self.matrix
    }

    pub fn modes(&self) -> usize {
        self.matrix.nrows() / 2
    }
}

/// `Ξ(W) = [[Re W, Im W], [−Im W, Re W]]` without the unitarity check.
pub fn embed_unitary_unchecked(w: &ComplexMatrix) -> RealMatrix {
    let m = w.nrows();
    let mut xi = RealMatrix::zeros(2 * m, 2 * m);
    for i in 0..m {
        for j in 0..w.ncols() {
            let z = w[(i, j)];
            xi[(i, j)] = z.re;
            xi[(i, m + j)] = z.im;
            xi[(m + i, j)] = -z.im;
            xi[(m + i, m + j)] = z.re;
        }
    }
    xi
}

/// Embeds a mode-space unitary as a quadrature rotation. The map is a group
/// homomorphism: `Ξ(W₁W₂) = Ξ(W₁)Ξ(W₂)`.
pub fn embed_unitary(w: &ComplexMatrix) -> Result<OrthoSymplectic> {
    if w.nrows() != w.ncols() || w.nrows() == 0 {
        return Err(Error::Dimension(
            "embed_unitary needs a square matrix".into(),
        ));
    }
    ensure_finite(w)?;
    let defect = unitarity_defect(w);
    if defect > DECOMPOSITION_TOL {
        return Err(Error::NotUnitary(defect));
    }
    Ok(OrthoSymplectic {
        matrix: embed_unitary_unchecked(w),
    })
}

/// Bloch-Messiah form of the network unitary `exp(½a†La†ᵀ − h.c.)`:
/// `S = Ξ · (e^{−Z} ⊕ e^{Z}) · Ξᵀ`. The right rotation is absent because the
/// network acts on vacuum.
#[derive(Clone, Debug)]
pub struct BlochMessiah {
    pub rotation: OrthoSymplectic,
    pub squeezing: Vec<f64>,
}

impl BlochMessiah {
    pub fn symplectic(&self) -> RealMatrix {
        let xi = self.rotation.matrix();
        let m = self.squeezing.len();
        let diag = DVector::from_iterator(
            2 * m,
            self.squeezing
                .iter()
                .map(|z| (-z).exp())
                .chain(self.squeezing.iter().map(|z| z.exp())),
        );
        xi * RealMatrix::from_diagonal(&diag) * xi.transpose()
    }

    /// `Ξ · ½(e^{−2Z} ⊕ e^{2Z}) · Ξᵀ`, the covariance of the network on vacuum.
    pub fn covariance(&self) -> RealMatrix {
        let xi = self.rotation.matrix();
        let m = self.squeezing.len();
        let diag = DVector::from_iterator(
            2 * m,
            self.squeezing
                .iter()
                .map(|z| 0.5 * (-2.0 * z).exp())
                .chain(self.squeezing.iter().map(|z| 0.5 * (2.0 * z).exp())),
        );
        let cov = xi * RealMatrix::from_diagonal(&diag) * xi.transpose();
        (&cov + cov.transpose()) * 0.5
    }
}

pub fn bloch_messiah(l: &ComplexMatrix) -> Result<BlochMessiah> {
    let tk = takagi(l)?;
    let rotation = OrthoSymplectic {
        matrix: embed_unitary_unchecked(&tk.quadrature_frame()),
    };
    Ok(BlochMessiah {
        rotation,
        squeezing: tk.singular_values,
    })
}

fn is_even_square(s: &RealMatrix) -> bool {
    s.nrows() == s.ncols() && s.nrows().is_multiple_of(2) && s.nrows() > 0
}

/// `SᵀΔS = Δ` within `tol` (max-abs).
pub fn check_symplectic(s: &RealMatrix, tol: f64) -> bool {
    if !is_even_square(s) {
        return false;
    }
    let delta = symplectic_form(s.nrows() / 2);
    max_abs(&(s.transpose() * &delta * s - &delta)) <= tol
}

/// `SᵀS = I` within `tol` (max-abs).
pub fn check_orthogonal(s: &RealMatrix, tol: f64) -> bool {
    if !is_even_square(s) {
        return false;
    }
    let n = s.nrows();
    max_abs(&(s.transpose() * s - RealMatrix::identity(n, n))) <= tol
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn swap_pair(g: f64) -> ComplexMatrix {
        ComplexMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(g, 0.0), c(g, 0.0), c(0.0, 0.0)])
    }

    #[test]
    fn takagi_of_pair_squeezer() {
        let l = swap_pair(0.3);
        let tk = takagi(&l).unwrap();
        assert!((tk.singular_values[0] - 0.3).abs() < 1e-14);
        assert!((tk.singular_values[1] - 0.3).abs() < 1e-14);
        assert!(tk.residual(&l) < 1e-12);
        assert!(unitarity_defect(&tk.unitary) < 1e-13);
    }

    #[test]
    fn takagi_of_zero_matrix() {
        let l = ComplexMatrix::zeros(3, 3);
        let tk = takagi(&l).unwrap();
        assert!(tk.singular_values.iter().all(|&s| s == 0.0));
        assert!(unitarity_defect(&tk.unitary) < 1e-14);
        assert_eq!(tk.residual(&l), 0.0);
    }

    #[test]
    fn takagi_rejects_bad_input() {
        let mut l = swap_pair(1.0);
        l[(0, 1)] = c(2.0, 0.0);
        assert!(matches!(takagi(&l), Err(Error::NotSymmetric(_))));
        let mut l = swap_pair(1.0);
        l[(0, 0)] = c(f64::NAN, 0.0);
        assert!(matches!(takagi(&l), Err(Error::NonFinite)));
    }

    #[test]
    fn takagi_is_deterministic() {
        let l = ComplexMatrix::from_row_slice(
            3,
            3,
            &[
                c(0.0, 0.0),
                c(0.4, 0.1),
                c(-0.2, 0.3),
                c(0.4, 0.1),
                c(0.0, 0.0),
                c(0.4, 0.1),
                c(-0.2, 0.3),
                c(0.4, 0.1),
                c(0.0, 0.0),
            ],
        );
        let a = takagi(&l).unwrap();
        let b = takagi(&l).unwrap();
        assert_eq!(a.unitary, b.unitary);
        assert_eq!(a.singular_values, b.singular_values);
    }

    #[test]
    fn embedding_of_identity_and_phase() {
        let id = ComplexMatrix::identity(3, 3);
        assert_eq!(
            embed_unitary(&id).unwrap().into_matrix(),
            RealMatrix::identity(6, 6)
        );
        let phase = ComplexMatrix::identity(2, 2) * Complex64::i();
        assert_eq!(
            embed_unitary(&phase).unwrap().into_matrix(),
            symplectic_form(2)
        );
    }

    #[test]
    fn embedding_rejects_non_unitary() {
        let w = ComplexMatrix::identity(2, 2) * c(2.0, 0.0);
        assert!(matches!(embed_unitary(&w), Err(Error::NotUnitary(_))));
    }

    #[test]
    fn bloch_messiah_of_zero_is_identity() {
        let bm = bloch_messiah(&ComplexMatrix::zeros(2, 2)).unwrap();
        assert!(max_abs(&(bm.symplectic() - RealMatrix::identity(4, 4))) < 1e-15);
    }

    #[test]
    fn bloch_messiah_of_pair_squeezer() {
        let bm = bloch_messiah(&swap_pair(0.5)).unwrap();
        assert!(bm.squeezing.iter().all(|z| (z - 0.5).abs() < 1e-14));
        assert!(check_symplectic(&bm.symplectic(), 1e-12));
    }

    #[test]
    fn structure_checks() {
        let id = RealMatrix::identity(4, 4);
        assert!(check_symplectic(&id, 1e-12) && check_orthogonal(&id, 1e-12));
        let r: f64 = 0.4;
        let sq = RealMatrix::from_diagonal(&DVector::from_vec(vec![(-r).exp(), r.exp()]));
        assert!(check_symplectic(&sq, 1e-12));
        assert!(!check_orthogonal(&sq, 1e-12));
        assert!(!check_symplectic(&RealMatrix::identity(3, 3), 1e-12));
    }
}
