//! Elementary symmetric functions σ_k and Newton transformations t_k of a
//! symmetric form, each reachable through independent computational paths.

use nalgebra::DMatrix;

use crate::double_forms::{factorial, g_power, SymmetricForm};
use crate::error::{Error, Result};

/// `e_0, …, e_max` of `values`.
pub fn elementary_symmetric_all(values: &[f64], max: usize) -> Vec<f64> {
    let mut e = vec![0.0; max + 1];
    e[0] = 1.0;
    for (seen, &v) in values.iter().enumerate() {
        for k in (1..=max.min(seen + 1)).rev() {
            e[k] += v * e[k - 1];
        }
    }
    e
}

pub fn elementary_symmetric(values: &[f64], k: usize) -> f64 {
    if k > values.len() {
        return 0.0;
    }
    elementary_symmetric_all(values, k)[k]
}

pub(crate) fn check_k(k: usize, min: usize, max: usize) -> Result<()> {
    if k < min || k > max {
        return Err(Error::OutOfRange {
            name: "k",
            value: k as i64,
            min: min as i64,
            max: max as i64,
        });
    }
    Ok(())
}

/// σ_k(A) from the eigenvalues of `A`, for `1 ≤ k ≤ n`.
pub fn sigma_k(a: &SymmetricForm, k: usize) -> Result<f64> {
    check_k(k, 1, a.dim())?;
    Ok(elementary_symmetric(&a.eigenvalues(), k))
}

/// `σ_1, …, σ_n` from one eigendecomposition (index `k − 1`).
pub fn sigma_all(a: &SymmetricForm) -> Vec<f64> {
    elementary_symmetric_all(&a.eigenvalues(), a.dim())[1..].to_vec()
}

/// Natural magnitude `e_k(|λ|)` bounding `|σ_k(A)|`; used to normalise
/// relative comparisons when σ_k itself is close to zero.
pub fn sigma_k_scale(a: &SymmetricForm, k: usize) -> f64 {
    let abs: Vec<f64> = a.eigenvalues().iter().map(|v| v.abs()).collect();
    elementary_symmetric(&abs, k)
}

/// σ_k via Newton's identities on the power sums `tr(Aʲ)`; no eigensolver.
pub fn sigma_k_newton_identities(a: &SymmetricForm, k: usize) -> Result<f64> {
    check_k(k, 1, a.dim())?;
    let mut power = DMatrix::identity(a.dim(), a.dim());
    let mut sums = Vec::with_capacity(k);
    for _ in 0..k {
        power = &power * a.matrix();
        sums.push(power.trace());
    }
    let mut e = vec![1.0];
    for m in 1..=k {
        let mut acc = 0.0;
        for i in 1..=m {
            let sign = if i % 2 == 1 { 1.0 } else { -1.0 };
            acc += sign * e[m - i] * sums[i - 1];
        }
        e.push(acc / m as f64);
    }
    Ok(e[k])
}

/// σ_k as the full contraction `c^k(A^k)/(k!)²` of the exterior power of `A`.
pub fn sigma_k_contraction(a: &SymmetricForm, k: usize) -> Result<f64> {
    check_k(k, 1, a.dim())?;
    let ak = a.to_double_form().power(k)?;
    let full = ak.contract_times(k)?;
    Ok(full
        .as_scalar()
        .expect("k-fold contraction of a (k,k) form")
        / factorial(k).powi(2))
}

/// σ_k as `∗(g^{n−k} A^k)/((n−k)! k!)`.
pub fn sigma_k_hodge(a: &SymmetricForm, k: usize) -> Result<f64> {
    let n = a.dim();
    check_k(k, 0, n)?;
    let top = g_power(n, n - k)?.exterior_product(&a.to_double_form().power(k)?)?;
    Ok(top.hodge_star().as_scalar().expect("star of a top form")
        / (factorial(n - k) * factorial(k)))
}

/// The three independent evaluations of σ_k(A).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SigmaPaths {
    pub eigenvalue: f64,
    pub newton_identities: f64,
    pub contraction: f64,
    /// `e_k(|λ|)`, the magnitude used for relative comparison.
    pub scale: f64,
}

impl SigmaPaths {
    /// Largest pairwise disagreement relative to `scale`.
    pub fn max_relative_disagreement(&self) -> f64 {
        use crate::tolerance::relative_residual as rel;
        let s = self.scale;
        rel(self.eigenvalue, self.newton_identities, s)
            .max(rel(self.eigenvalue, self.contraction, s))
            .max(rel(self.newton_identities, self.contraction, s))
    }
}

pub fn sigma_k_paths(a: &SymmetricForm, k: usize) -> Result<SigmaPaths> {
    Ok(SigmaPaths {
        eigenvalue: sigma_k(a, k)?,
        newton_identities: sigma_k_newton_identities(a, k)?,
        contraction: sigma_k_contraction(a, k)?,
        scale: sigma_k_scale(a, k),
    })
}

/// Newton transformation `t_k(A) = σ_k(A) g − c^{k−1}(A^k)/((k−1)! k!)`,
/// for `1 ≤ k ≤ n − 1`.
pub fn newton(a: &SymmetricForm, k: usize) -> Result<SymmetricForm> {
    let n = a.dim();
    if n < 2 {
        return Err(Error::DimensionTooSmall { n, min: 2 });
    }
    check_k(k, 1, n - 1)?;
    let partial = a.to_double_form().power(k)?.contract_times(k - 1)?;
    let sigma = partial.contraction()?.as_scalar().expect("scalar") / factorial(k).powi(2);
    let correction =
        SymmetricForm::from_double_form(&partial.scale(1.0 / (factorial(k - 1) * factorial(k))))?;
    Ok(&SymmetricForm::metric(n)?.scale(sigma) - &correction)
}

/// `t_k(A)` by the matrix recursion `t_k = σ_k g − A t_{k−1}`, `t_0 = g`.
pub fn newton_recursive(a: &SymmetricForm, k: usize) -> Result<SymmetricForm> {
    let n = a.dim();
    check_k(k, 0, n)?;
    let sigmas = elementary_symmetric_all(&a.eigenvalues(), k);
    let id = DMatrix::identity(n, n);
    let mut t = id.clone();
    for s in sigmas.iter().skip(1) {
        t = &id * *s - a.matrix() * &t;
    }
    // A and t_{k-1} commute, so the product is symmetric up to rounding.
    let sym = (&t + t.transpose()) * 0.5;
    SymmetricForm::new(sym)
}

/// `t_k(A) = ∗(g^{n−k−1} A^k)/((n−k−1)! k!)`.
pub fn newton_hodge(a: &SymmetricForm, k: usize) -> Result<SymmetricForm> {
    let n = a.dim();
    check_k(k, 0, n - 1)?;
    let form = g_power(n, n - k - 1)?.exterior_product(&a.to_double_form().power(k)?)?;
    SymmetricForm::from_double_form(
        &form
            .hodge_star()
            .scale(1.0 / (factorial(n - k - 1) * factorial(k))),
    )
}
