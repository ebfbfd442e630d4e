//! Truncated Fock-space oracle.
//!
//! States live in `⊗_j span{|0⟩ … |n_max⟩}` with mode 0 the slowest index.
//! Quadratic generators are applied matrix-free and exponentiated with a
//! time-stepped Taylor series whose term count follows from a remainder
//! bound, so results do not depend on adaptive heuristics.

use std::io::{Read, Write};

use nalgebra::Schur;
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{unitarity_defect, Complex64, ComplexMatrix, DECOMPOSITION_TOL};
use crate::metrology::ProbeConfig;
use crate::zwm::{zwm_l, MODES};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

#[derive(Clone, Debug, PartialEq)]
pub struct FockVector {
    modes: usize,
    cutoff: usize,
    amps: Vec<Complex64>,
}

fn checked_dim(modes: usize, cutoff: usize, cap: usize) -> Result<usize> {
    let mut dim: usize = 1;
    for _ in 0..modes {
        dim = dim
            .checked_mul(cutoff + 1)
            .ok_or(Error::DimensionCap(usize::MAX))?;
    }
    if dim > cap {
        return Err(Error::DimensionCap(dim));
    }
    Ok(dim)
}

impl FockVector {
    pub fn vacuum(modes: usize, cutoff: usize) -> Result<Self> {
        if modes == 0 || cutoff == 0 {
            return Err(Error::Parameter(
                "need at least one mode and cutoff ≥ 1".into(),
            ));
        }
        let dim = checked_dim(modes, cutoff, usize::MAX)?;
        let mut amps = vec![ZERO; dim];
        amps[0] = Complex64::new(1.0, 0.0);
        Ok(FockVector {
            modes,
            cutoff,
            amps,
        })
    }

    /// Coherent state `|α⟩` in `mode`, vacuum elsewhere. The expansion
    /// `e^{−|α|²/2} αⁿ/√n!` is truncated but not renormalized.
    pub fn coherent(modes: usize, cutoff: usize, mode: usize, alpha: Complex64) -> Result<Self> {
        let mut v = Self::vacuum(modes, cutoff)?;
        if mode >= modes {
            return Err(Error::ModeIndex { index: mode, modes });
        }
        v.amps[0] = ZERO;
        let stride = v.stride(mode);
        let mut c = Complex64::new((-0.5 * alpha.norm_sqr()).exp(), 0.0);
        for n in 0..=cutoff {
            if n > 0 {
                c *= alpha / (n as f64).sqrt();
            }
            v.amps[n * stride] = c;
        }
        Ok(v)
    }

    pub fn from_amplitudes(modes: usize, cutoff: usize, amps: Vec<Complex64>) -> Result<Self> {
        let dim = checked_dim(modes, cutoff, usize::MAX)?;
        if amps.len() != dim {
            return Err(Error::Dimension(format!(
                "{} amplitudes for {} modes at cutoff {}",
                amps.len(),
                modes,
                cutoff
            )));
        }
        Ok(FockVector {
            modes,
            cutoff,
            amps,
        })
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amps.is_empty()
    }

    fn stride(&self, mode: usize) -> usize {
        (self.cutoff + 1).pow((self.modes - 1 - mode) as u32)
    }

    /// Occupation of `mode` in basis state `index`.
    pub fn occupation(&self, index: usize, mode: usize) -> usize {
        (index / self.stride(mode)) % (self.cutoff + 1)
    }

    pub fn index_of(&self, occupations: &[usize]) -> Option<usize> {
        if occupations.len() != self.modes || occupations.iter().any(|&n| n > self.cutoff) {
            return None;
        }
        Some(
            occupations
                .iter()
                .fold(0, |acc, &n| acc * (self.cutoff + 1) + n),
        )
    }

    pub fn amplitude(&self, occupations: &[usize]) -> Option<Complex64> {
        self.index_of(occupations).map(|k| self.amps[k])
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn normalized(&self) -> FockVector {
        let n = self.norm();
        FockVector {
            amps: self.amps.iter().map(|z| z / n).collect(),
            ..self.clone()
        }
    }

    /// Probability weight on basis states with some mode at the cutoff.
    pub fn tail_mass(&self) -> f64 {
        self.amps
            .iter()
            .enumerate()
            .filter(|(k, _)| (0..self.modes).any(|j| self.occupation(*k, j) == self.cutoff))
            .map(|(_, z)| z.norm_sqr())
            .sum()
    }

    fn same_shape(&self, other: &FockVector) -> Result<()> {
        if self.modes == other.modes && self.cutoff == other.cutoff {
            Ok(())
        } else {
            Err(Error::Dimension(format!(
                "Fock vectors ({} modes, cutoff {}) and ({} modes, cutoff {})",
                self.modes, self.cutoff, other.modes, other.cutoff
            )))
        }
    }

    /// Header `u32 M`, `u32 cutoff`, then `(re, im)` as `f32` pairs, all
    /// little-endian.
    pub fn write_binary<W: Write>(&self, mut out: W) -> Result<()> {
        let header = |x: usize| {
            u32::try_from(x)
                .map_err(|_| Error::Parameter(format!("{x} does not fit the dump header")))
        };
        out.write_all(&header(self.modes)?.to_le_bytes())?;
        out.write_all(&header(self.cutoff)?.to_le_bytes())?;
        let mut buf = Vec::with_capacity(8 * self.amps.len());
        for z in &self.amps {
            buf.extend_from_slice(&(z.re as f32).to_le_bytes());
            buf.extend_from_slice(&(z.im as f32).to_le_bytes());
        }
        out.write_all(&buf)?;
        Ok(())
    }

    pub fn read_binary<R: Read>(mut input: R) -> Result<Self> {
        let mut word = [0u8; 4];
        input.read_exact(&mut word)?;
        let modes = u32::from_le_bytes(word) as usize;
        input.read_exact(&mut word)?;
        let cutoff = u32::from_le_bytes(word) as usize;
        let dim = checked_dim(modes, cutoff, usize::MAX)?;
        let mut raw = vec![0u8; 8 * dim];
        input.read_exact(&mut raw)?;
        let amps = raw
            .chunks_exact(8)
            .map(|c| {
                let re = f32::from_le_bytes([c[0], c[1], c[2], c[3]]);
                let im = f32::from_le_bytes([c[4], c[5], c[6], c[7]]);
                Complex64::new(re as f64, im as f64)
            })
            .collect();
        Self::from_amplitudes(modes, cutoff, amps)
    }
}

/// Anti-Hermitian quadratic generator
/// `G = ½ a†La†ᵀ − ½ a L̄ aᵀ + a†Xa`, with `L` symmetric and `X`
/// anti-Hermitian. `exp(G)` realizes `exp(½a†La†ᵀ − h.c.)` for `X = 0`
/// and the passive unitary with `U a† U† = a† e^X` for `L = 0`.
#[derive(Clone, Debug)]
pub struct QuadraticGenerator {
    terms: Vec<Term>,
    modes: usize,
    norm_rate: f64,
}

#[derive(Clone, Copy, Debug)]
enum Term {
    Create { i: usize, j: usize, c: Complex64 },
    Annihilate { i: usize, j: usize, c: Complex64 },
    Hop { i: usize, j: usize, c: Complex64 },
}

impl QuadraticGenerator {
    pub fn squeezing(l: &ComplexMatrix) -> Result<Self> {
        Self::new(l, &ComplexMatrix::zeros(l.nrows(), l.nrows()))
    }

    pub fn passive(x: &ComplexMatrix) -> Result<Self> {
        Self::new(&ComplexMatrix::zeros(x.nrows(), x.nrows()), x)
    }

    pub fn new(l: &ComplexMatrix, x: &ComplexMatrix) -> Result<Self> {
        let m = l.nrows();
        if m == 0 || l.ncols() != m || x.nrows() != m || x.ncols() != m {
            return Err(Error::Dimension(
                "generator blocks must be square and equal".into(),
            ));
        }
        let scale = l.norm().max(x.norm()).max(1.0);
        let asym = (l - l.transpose()).norm();
        if asym > DECOMPOSITION_TOL * scale {
            return Err(Error::NotSymmetric(asym));
        }
        let herm = (x + x.adjoint()).norm();
        if herm > DECOMPOSITION_TOL * scale {
            return Err(Error::Parameter(format!(
                "hopping block must be anti-Hermitian (‖X + X†‖ = {herm:.3e})"
            )));
        }
        let mut terms = Vec::new();
        let mut norm_rate = 0.0;
        for i in 0..m {
            for j in i..m {
                let v = l[(i, j)];
                if v == ZERO {
                    continue;
                }
                // ½(L_ij + L_ji) a_i†a_j† for i < j collapses to L_ij
                let c = if i == j { v * 0.5 } else { v };
                terms.push(Term::Create { i, j, c });
                terms.push(Term::Annihilate { i, j, c: -c.conj() });
                norm_rate += 2.0 * c.norm();
            }
        }
        for i in 0..m {
            for j in 0..m {
                let v = x[(i, j)];
                if v != ZERO {
                    terms.push(Term::Hop { i, j, c: v });
                    norm_rate += v.norm();
                }
            }
        }
        Ok(QuadraticGenerator {
            terms,
            modes: m,
            norm_rate,
        })
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    /// Upper bound on the operator norm of the truncated generator.
    pub fn norm_bound(&self, cutoff: usize) -> f64 {
        self.norm_rate * cutoff as f64
    }
}

/// `w = G·v` on the truncated space (the projection `P G P`, which keeps `G`
/// exactly anti-Hermitian).
pub fn apply_generator(gen: &QuadraticGenerator, v: &FockVector) -> Result<FockVector> {
    if gen.modes != v.modes {
        return Err(Error::Dimension(format!(
            "generator on {} modes applied to a {}-mode vector",
            gen.modes, v.modes
        )));
    }
    let mut out = vec![ZERO; v.amps.len()];
    apply_into(gen, v.modes, v.cutoff, &v.amps, &mut out);
    Ok(FockVector {
        amps: out,
        ..v.clone()
    })
}

fn apply_into(
    gen: &QuadraticGenerator,
    modes: usize,
    cutoff: usize,
    amps: &[Complex64],
    out: &mut [Complex64],
) {
    let d = cutoff + 1;
    let strides: Vec<usize> = (0..modes).map(|j| d.pow((modes - 1 - j) as u32)).collect();
    let gather = |(k, slot): (usize, &mut Complex64)| {
        let n = |j: usize| (k / strides[j]) % d;
        let mut acc = ZERO;
        for t in &gen.terms {
            match *t {
                Term::Create { i, j, c } if i == j => {
                    let ni = n(i);
                    if ni >= 2 {
                        let f = ((ni * (ni - 1)) as f64).sqrt();
                        acc += c * f * amps[k - 2 * strides[i]];
                    }
                }
                Term::Create { i, j, c } => {
                    let (ni, nj) = (n(i), n(j));
                    if ni >= 1 && nj >= 1 {
                        let f = ((ni * nj) as f64).sqrt();
                        acc += c * f * amps[k - strides[i] - strides[j]];
                    }
                }
                Term::Annihilate { i, j, c } if i == j => {
                    let ni = n(i);
                    if ni + 2 <= cutoff {
                        let f = (((ni + 1) * (ni + 2)) as f64).sqrt();
                        acc += c * f * amps[k + 2 * strides[i]];
                    }
                }
                Term::Annihilate { i, j, c } => {
                    let (ni, nj) = (n(i), n(j));
                    if ni < cutoff && nj < cutoff {
                        let f = (((ni + 1) * (nj + 1)) as f64).sqrt();
                        acc += c * f * amps[k + strides[i] + strides[j]];
                    }
                }
                Term::Hop { i, j, c } if i == j => {
                    acc += c * n(i) as f64 * amps[k];
                }
                Term::Hop { i, j, c } => {
                    let (ni, nj) = (n(i), n(j));
                    if ni >= 1 && nj < cutoff {
                        let f = ((ni * (nj + 1)) as f64).sqrt();
                        acc += c * f * amps[k - strides[i] + strides[j]];
                    }
                }
            }
        }
        *slot = acc;
    };
    #[cfg(feature = "parallel")]
    out.par_iter_mut()
        .enumerate()
        .with_min_len(4096)
        .for_each(gather);
    #[cfg(not(feature = "parallel"))]
    out.iter_mut().enumerate().for_each(gather);
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TruncationReport {
    pub cutoff: usize,
    pub tail_mass: f64,
    pub suggested_cutoff: usize,
    /// `|‖v‖ − 1|` after evolution.
    pub norm_drift: f64,
    pub steps: usize,
    pub terms_per_step: usize,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvolveOptions {
    /// Bound on the Taylor remainder summed over all steps.
    pub series_tol: f64,
    /// Largest admissible tail mass.
    pub max_tail: f64,
}

impl Default for EvolveOptions {
    fn default() -> Self {
        EvolveOptions {
            series_tol: 1e-14,
            max_tail: 1e-8,
        }
    }
}

/// Per-step scaled norm `τ = ‖G‖/s`.
const STEP_NORM: f64 = 0.5;

fn taylor_schedule(bound: f64, tol: f64) -> (usize, usize) {
    if bound == 0.0 {
        return (0, 0);
    }
    let steps = (bound / STEP_NORM).ceil().max(1.0) as usize;
    let tau = bound / steps as f64;
    let per_step = tol / steps as f64;
    let mut k = 1usize;
    // τ^{K+1}/(K+1)!·e^τ bounds the remainder of the order-K polynomial
    let mut rem = tau * tau / 2.0 * tau.exp();
    while rem > per_step && k < 200 {
        k += 1;
        rem *= tau / (k + 1) as f64;
    }
    (steps, k)
}

/// `exp(G)·v₀` at the cutoff of `v₀`.
pub fn evolve(
    gen: &QuadraticGenerator,
    v0: &FockVector,
    opts: &EvolveOptions,
) -> Result<(FockVector, TruncationReport)> {
    if gen.modes != v0.modes {
        return Err(Error::Dimension(format!(
            "generator on {} modes applied to a {}-mode vector",
            gen.modes, v0.modes
        )));
    }
    let (steps, order) = taylor_schedule(gen.norm_bound(v0.cutoff), opts.series_tol);
    let h = if steps == 0 { 0.0 } else { 1.0 / steps as f64 };
    let mut v = v0.amps.clone();
    let mut term = vec![ZERO; v.len()];
    let mut next = vec![ZERO; v.len()];
    for _ in 0..steps {
        term.copy_from_slice(&v);
        for k in 1..=order {
            apply_into(gen, v0.modes, v0.cutoff, &term, &mut next);
            let scale = h / k as f64;
            for (t, n) in term.iter_mut().zip(&next) {
                *t = n * scale;
            }
            for (a, t) in v.iter_mut().zip(&term) {
                *a += t;
            }
        }
    }
    let out = FockVector {
        modes: v0.modes,
        cutoff: v0.cutoff,
        amps: v,
    };
    let tail = out.tail_mass();
    let report = TruncationReport {
        cutoff: out.cutoff,
        tail_mass: tail,
        suggested_cutoff: if tail > opts.max_tail {
            out.cutoff + 2
        } else {
            out.cutoff
        },
        norm_drift: (out.norm() - v0.norm()).abs(),
        steps,
        terms_per_step: order,
    };
    if tail > opts.max_tail {
        return Err(Error::CutoffTooSmall {
            cutoff: out.cutoff,
            tail_mass: tail,
            suggested_cutoff: report.suggested_cutoff,
        });
    }
    Ok((out, report))
}

/// Initial state of an oracle run, re-expanded at each trial cutoff.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Seed {
    Vacuum,
    Coherent { mode: usize, alpha: Complex64 },
}

impl Seed {
    pub fn expand(&self, modes: usize, cutoff: usize) -> Result<FockVector> {
        match *self {
            Seed::Vacuum => FockVector::vacuum(modes, cutoff),
            Seed::Coherent { mode, alpha } => FockVector::coherent(modes, cutoff, mode, alpha),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CutoffSearch {
    pub start: usize,
    pub increment: usize,
    pub dimension_cap: usize,
    pub evolve: EvolveOptions,
}

impl Default for CutoffSearch {
    fn default() -> Self {
        CutoffSearch {
            start: 6,
            increment: 2,
            dimension_cap: 1_000_000,
            evolve: EvolveOptions::default(),
        }
    }
}

/// Raises the cutoff until the evolved tail mass is below `max_tail`.
pub fn evolve_auto(
    gen: &QuadraticGenerator,
    seed: Seed,
    search: &CutoffSearch,
) -> Result<(FockVector, TruncationReport)> {
    let mut cutoff = search.start.max(1);
    loop {
        checked_dim(gen.modes, cutoff, search.dimension_cap)?;
        let v0 = seed.expand(gen.modes, cutoff)?;
        match evolve(gen, &v0, &search.evolve) {
            Err(Error::CutoffTooSmall { .. }) => cutoff += search.increment.max(1),
            other => return other,
        }
    }
}

/// Fock-space unitary with `U a† U† = a† Y`, built as `exp(a†·log(Y)·a)`.
pub fn passive_generator(y: &ComplexMatrix) -> Result<QuadraticGenerator> {
    let defect = unitarity_defect(y);
    if defect > DECOMPOSITION_TOL {
        return Err(Error::NotUnitary(defect));
    }
    let (q, t) = Schur::new(y.clone()).unpack();
    let logs = ComplexMatrix::from_diagonal(&t.diagonal().map(|z| z.ln()));
    let x = &q * logs * q.adjoint();
    // project onto the anti-Hermitian part to remove rounding
    let x = (&x - x.adjoint()) * Complex64::new(0.5, 0.0);
    QuadraticGenerator::passive(&x)
}

pub fn apply_passive(
    y: &ComplexMatrix,
    v: &FockVector,
    opts: &EvolveOptions,
) -> Result<(FockVector, TruncationReport)> {
    evolve(&passive_generator(y)?, v, opts)
}

pub fn expectation_n(v: &FockVector, j: usize) -> Result<f64> {
    if j >= v.modes {
        return Err(Error::ModeIndex {
            index: j,
            modes: v.modes,
        });
    }
    Ok(v.amps
        .iter()
        .enumerate()
        .map(|(k, z)| z.norm_sqr() * v.occupation(k, j) as f64)
        .sum())
}

/// `⟨a_i† a_j⟩`.
pub fn correlator(v: &FockVector, i: usize, j: usize) -> Result<Complex64> {
    for idx in [i, j] {
        if idx >= v.modes {
            return Err(Error::ModeIndex {
                index: idx,
                modes: v.modes,
            });
        }
    }
    if i == j {
        return Ok(Complex64::new(expectation_n(v, i)?, 0.0));
    }
    let (si, sj) = (v.stride(i), v.stride(j));
    let mut acc = ZERO;
    for (k, z) in v.amps.iter().enumerate() {
        let nj = v.occupation(k, j);
        let ni = v.occupation(k, i);
        if nj == 0 || ni == v.cutoff {
            continue;
        }
        let target = k - sj + si;
        let f = ((nj * (ni + 1)) as f64).sqrt();
        acc += v.amps[target].conj() * z * f;
    }
    Ok(acc)
}

/// `⟨u|v⟩`, antilinear in `u`.
pub fn overlap(u: &FockVector, v: &FockVector) -> Result<Complex64> {
    u.same_shape(v)?;
    Ok(u.amps.iter().zip(&v.amps).map(|(a, b)| a.conj() * b).sum())
}

/// The seeded probe at phase `theta`, evolved at a fixed cutoff.
pub fn probe_vector(
    pc: &ProbeConfig,
    cutoff: usize,
    opts: &EvolveOptions,
) -> Result<(FockVector, TruncationReport)> {
    let gen = QuadraticGenerator::squeezing(zwm_l(&pc.zwm())?.matrix())?;
    let seed = Seed::Coherent {
        mode: 0,
        alpha: Complex64::new(pc.beta, 0.0),
    };
    evolve(&gen, &seed.expand(MODES, cutoff)?, opts)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleQfi {
    pub qfi: f64,
    pub report: TruncationReport,
}

/// `F(θ) = −2 ∂²_ξ |⟨ψ(θ)|ψ(ξ)⟩|²` at `ξ = θ` by a second central
/// difference of width `delta`, on normalized truncated probes.
pub fn qfi_fd(pc: &ProbeConfig, delta: f64, search: &CutoffSearch) -> Result<OracleQfi> {
    pc.validate()?;
    if !(delta > 0.0 && delta.is_finite()) {
        return Err(Error::Parameter(format!(
            "delta must be positive, got {delta}"
        )));
    }
    let gen = QuadraticGenerator::squeezing(zwm_l(&pc.zwm())?.matrix())?;
    let seed = Seed::Coherent {
        mode: 0,
        alpha: Complex64::new(pc.beta, 0.0),
    };
    let (center, report) = evolve_auto(&gen, seed, search)?;
    let center = center.normalized();
    let fidelity = |theta: f64| -> Result<f64> {
        let (v, _) = probe_vector(&pc.at_theta(theta), report.cutoff, &search.evolve)?;
        Ok(overlap(&center, &v.normalized())?.norm_sqr())
    };
    let plus = fidelity(pc.theta + delta)?;
    let minus = fidelity(pc.theta - delta)?;
    let qfi = -2.0 * (plus + minus - 2.0) / (delta * delta);
    Ok(OracleQfi { qfi, report })
}
