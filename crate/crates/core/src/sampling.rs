//! Seeded random generators for symmetric forms and curvature structures.
//!
//! Every sample is drawn from a ChaCha stream keyed by `(seed, stream)`, so a
//! parallel sweep that gives each item its own stream index is reproducible
//! regardless of scheduling.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::double_forms::{
    kulkarni_nomizu, remove_cyclic_part, CurvatureStructure, DoubleForm, SymmetricForm,
};
use crate::error::Result;
use crate::invariants::{elementary_symmetric_all, weyl};

/// Rejection attempts before Γ_k sampling falls back to positive spectra.
const MAX_REJECTIONS: usize = 64;

pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn gaussian(rng: &mut impl Rng) -> f64 {
    rng.sample(StandardNormal)
}

/// Haar-distributed orthogonal matrix (QR of a Gaussian matrix with the
/// sign of `R`'s diagonal folded into `Q`).
pub fn random_orthogonal(n: usize, rng: &mut impl Rng) -> DMatrix<f64> {
    let m = DMatrix::from_fn(n, n, |_, _| gaussian(rng));
    let qr = m.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..n {
        if r[(j, j)] < 0.0 {
            q.column_mut(j).neg_mut();
        }
    }
    q
}

/// `Q diag(λ) Qᵀ` for a random orthogonal `Q`.
pub fn symmetric_with_spectrum(eigenvalues: &[f64], rng: &mut impl Rng) -> Result<SymmetricForm> {
    let n = eigenvalues.len();
    let q = random_orthogonal(n, rng);
    let d = DMatrix::from_diagonal(&nalgebra::DVector::from_column_slice(eigenvalues));
    let m = &q * d * q.transpose();
    SymmetricForm::new((&m + m.transpose()) * 0.5)
}

/// Symmetric matrix with independent standard Gaussian entries on and above
/// the diagonal.
pub fn random_symmetric(n: usize, rng: &mut impl Rng) -> Result<SymmetricForm> {
    let mut m = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = gaussian(rng);
            m[(i, j)] = v;
            m[(j, i)] = v;
        }
    }
    SymmetricForm::new(m)
}

pub fn random_traceless(n: usize, rng: &mut impl Rng) -> Result<SymmetricForm> {
    Ok(random_symmetric(n, rng)?.traceless_part())
}

/// Isotropic Gaussian curvature structure, distributed as the projection of a
/// standard Gaussian `n⁴` array: a pair-symmetric Gaussian `(2,2)` form with
/// variance 1/4 on diagonal slots and 1/8 elsewhere, minus its totally
/// antisymmetric part.
pub fn random_curvature(n: usize, rng: &mut impl Rng) -> Result<CurvatureStructure> {
    let pairs = DoubleForm::zeros(n, 2, 2)?.coeffs().len().isqrt();
    let mut coeffs = vec![0.0; pairs * pairs];
    for i in 0..pairs {
        coeffs[i * pairs + i] = 0.5 * gaussian(rng);
        for j in i + 1..pairs {
            let v = 0.125f64.sqrt() * gaussian(rng);
            coeffs[i * pairs + j] = v;
            coeffs[j * pairs + i] = v;
        }
    }
    Ok(remove_cyclic_part(&DoubleForm::from_coeffs(
        n, 2, 2, coeffs,
    )))
}

/// Totally trace-free part of a random curvature structure, `n ≥ 3`.
pub fn random_weyl(n: usize, rng: &mut impl Rng) -> Result<CurvatureStructure> {
    weyl(&random_curvature(n, rng)?)
}

/// Schouten-type form with positive Γ_k-curvature: eigenvalues uniform in
/// `[−1, 2]` with rejection, falling back to a spectrum in `(0, 2]` after
/// repeated misses.
pub fn gamma_positive_schouten(n: usize, k: usize, rng: &mut impl Rng) -> Result<SymmetricForm> {
    for _ in 0..MAX_REJECTIONS {
        let lambda: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..2.0)).collect();
        let e = elementary_symmetric_all(&lambda, k);
        if e[1..].iter().all(|&s| s > 1e-9) {
            return symmetric_with_spectrum(&lambda, rng);
        }
    }
    let lambda: Vec<f64> = (0..n).map(|_| 2.0 - rng.random_range(0.0..2.0)).collect();
    symmetric_with_spectrum(&lambda, rng)
}

/// `W + g·A` with a random Weyl part of Frobenius norm `weyl_norm`.
pub fn structure_with_schouten(
    a: &SymmetricForm,
    weyl_norm: f64,
    rng: &mut impl Rng,
) -> Result<CurvatureStructure> {
    let n = a.dim();
    let ga = kulkarni_nomizu(&SymmetricForm::metric(n)?, a)?;
    if weyl_norm == 0.0 || n < 4 {
        return Ok(ga);
    }
    let w = random_weyl(n, rng)?;
    let norm = w.norm_sq().sqrt();
    Ok(&ga + &w.scale(weyl_norm / norm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{gamma_positive, ricci};

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: f64 = stream_rng(7, 3).random();
        let b: f64 = stream_rng(7, 3).random();
        let c: f64 = stream_rng(7, 4).random();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn orthogonal_matrix_is_orthogonal() {
        let mut rng = stream_rng(1, 0);
        let q = random_orthogonal(6, &mut rng);
        let err = (&q * q.transpose() - DMatrix::<f64>::identity(6, 6)).amax();
        assert!(err < 1e-12);
    }

    #[test]
    fn spectrum_is_preserved() {
        let mut rng = stream_rng(2, 0);
        let lambda = [-1.0, 0.25, 0.5, 3.0];
        let a = symmetric_with_spectrum(&lambda, &mut rng).unwrap();
        for (x, y) in a.eigenvalues().iter().zip(lambda) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn gamma_samples_are_in_cone() {
        let mut rng = stream_rng(3, 0);
        for n in 3..=8 {
            for k in 1..=n {
                let a = gamma_positive_schouten(n, k, &mut rng).unwrap();
                assert!(gamma_positive(&a, k).unwrap());
            }
        }
    }

    #[test]
    fn weyl_samples_are_trace_free() {
        let mut rng = stream_rng(4, 0);
        for n in 3..=7 {
            let w = random_weyl(n, &mut rng).unwrap();
            assert!(ricci(&w).matrix().amax() < 1e-12);
            assert!(w.bianchi_residual() < 1e-12);
        }
        // the Weyl space of ℝ³ is trivial
        assert!(random_weyl(3, &mut rng).unwrap().norm_sq() < 1e-24);
    }
}
