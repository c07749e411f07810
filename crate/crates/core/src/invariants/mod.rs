//! Curvature invariants of an algebraic curvature tensor: Ricci, Schouten,
//! Weyl, σ_k, Newton and Einstein tensors, Gauss–Bonnet curvatures h_{2k},
//! Einstein–Lovelock tensors T_{2k}, and the Γ_k cones.

mod report;
mod sigma;

use crate::double_forms::{
    binomial, factorial, g_power, kulkarni_nomizu, CurvatureStructure, SymmetricForm,
};
use crate::error::{Error, Result};

pub use report::{check_identities, invariant_report, IdentityCheck, InvariantReport};
pub use sigma::{
    elementary_symmetric, elementary_symmetric_all, newton, newton_hodge, newton_recursive,
    sigma_all, sigma_k, sigma_k_contraction, sigma_k_hodge, sigma_k_newton_identities,
    sigma_k_paths, sigma_k_scale, SigmaPaths,
};

fn require_dim(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::DimensionTooSmall { n, min });
    }
    Ok(())
}

/// `Ric(x,y) = Σ_m R(e_m, x, e_m, y)`.
pub fn ricci(r: &CurvatureStructure) -> SymmetricForm {
    let c = r
        .as_double_form()
        .contraction()
        .expect("(2,2) form contracts");
    SymmetricForm::from_double_form(&c).expect("contraction of a curvature structure is symmetric")
}

pub fn scalar(r: &CurvatureStructure) -> f64 {
    ricci(r).trace()
}

/// `A = (Ric − Scal/(2(n−1)) g)/(n−2)`.
pub fn schouten(r: &CurvatureStructure) -> Result<SymmetricForm> {
    let n = r.dim();
    require_dim(n, 3)?;
    let ric = ricci(r);
    let shift = ric.trace() / (2.0 * (n as f64 - 1.0));
    let g = SymmetricForm::metric(n)?;
    Ok((&ric - &g.scale(shift)).scale(1.0 / (n as f64 - 2.0)))
}

/// `W = R − g·A`.
pub fn weyl(r: &CurvatureStructure) -> Result<CurvatureStructure> {
    let a = schouten(r)?;
    let ga = kulkarni_nomizu(&SymmetricForm::metric(r.dim())?, &a)?;
    Ok(r - &ga)
}

/// Einstein tensor `S = Scal/2 · g − Ric`.
pub fn einstein_tensor(r: &CurvatureStructure) -> Result<SymmetricForm> {
    let n = r.dim();
    require_dim(n, 3)?;
    let ric = ricci(r);
    let s = &SymmetricForm::metric(n)?.scale(ric.trace() / 2.0) - &ric;
    debug_assert!({
        let via_newton = newton(&schouten(r)?, 1)?.scale(n as f64 - 2.0);
        s.max_abs_diff(&via_newton)? <= 1e-10 * s.matrix().amax().max(1.0)
    });
    Ok(s)
}

/// `h_{2k} = ∗(g^{n−2k} R^k)/(n−2k)!`, with `h_0 = 1`.
pub fn gauss_bonnet(r: &CurvatureStructure, k: usize) -> Result<f64> {
    let n = r.dim();
    if 2 * k > n {
        return Err(Error::OutOfRange {
            name: "2k",
            value: 2 * k as i64,
            min: 0,
            max: n as i64,
        });
    }
    if k == 0 {
        return Ok(1.0);
    }
    let rk = r.as_double_form().power(k)?;
    let top = g_power(n, n - 2 * k)?.exterior_product(&rk)?;
    Ok(top.hodge_star().as_scalar().expect("star of a top form") / factorial(n - 2 * k))
}

/// `h_4 = ‖R‖² − ‖Ric‖² + ¼ Scal²`.
pub fn h4_direct(r: &CurvatureStructure) -> f64 {
    let ric = ricci(r);
    let scal = ric.trace();
    r.norm_sq() - ric.norm_sq() + 0.25 * scal * scal
}

/// Einstein–Lovelock tensor `T_{2k} = ∗(g^{n−2k−1} R^k)/(n−2k−1)!`;
/// `T_0 = g` and `T_n = 0` when `2k = n`.
pub fn lovelock(r: &CurvatureStructure, k: usize) -> Result<SymmetricForm> {
    let n = r.dim();
    if 2 * k > n {
        return Err(Error::OutOfRange {
            name: "2k",
            value: 2 * k as i64,
            min: 0,
            max: n as i64,
        });
    }
    if 2 * k == n {
        return SymmetricForm::zeros(n);
    }
    let m = n - 2 * k - 1;
    let form = g_power(n, m)?.exterior_product(&r.as_double_form().power(k)?)?;
    SymmetricForm::from_double_form(&form.hodge_star().scale(1.0 / factorial(m)))
}

/// `σ_i(A) > 0` for every `1 ≤ i ≤ k`.
pub fn gamma_positive(a: &SymmetricForm, k: usize) -> Result<bool> {
    sigma::check_k(k, 1, a.dim())?;
    let e = elementary_symmetric_all(&a.eigenvalues(), k);
    Ok(e[1..].iter().all(|&s| s > 0.0))
}

/// σ₂ of the Schouten tensor from Ricci data only:
/// `2(n−2)² σ₂ = −‖Ric‖² + n/(4(n−1)) Scal²`.
pub fn sigma2_via_ricci(r: &CurvatureStructure) -> Result<f64> {
    let n = r.dim();
    require_dim(n, 3)?;
    let nf = n as f64;
    let ric = ricci(r);
    let scal = ric.trace();
    Ok((-ric.norm_sq() + nf * scal * scal / (4.0 * (nf - 1.0))) / (2.0 * (nf - 2.0).powi(2)))
}

/// Complementary-sum expansion of σ₂ in even dimension `n = 2k + 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplementarySum {
    /// `Σ_{|I|=k+1} (Σ_I λ)(σ₁ − Σ_I λ)`.
    pub sum: f64,
    /// σ₂ recovered from `sum`.
    pub sigma2: f64,
    /// Smallest sum of `k + 1` eigenvalues.
    pub min_partial_sum: f64,
}

impl ComplementarySum {
    /// Whether the sufficient condition "smallest k+1 eigenvalues sum to a
    /// positive number" holds.
    pub fn hypothesis_holds(&self) -> bool {
        self.min_partial_sum > 0.0
    }
}

pub fn complementary_sum_sigma2(a: &SymmetricForm) -> Result<ComplementarySum> {
    let n = a.dim();
    if n % 2 == 1 {
        return Err(Error::OddDimension { n });
    }
    require_dim(n, 4)?;
    let half = n / 2;
    let lambda = a.eigenvalues();
    let sigma1: f64 = lambda.iter().sum();
    let mut sum = 0.0;
    let mut mask: u32 = (1 << half) - 1;
    while mask < (1 << n) {
        let part: f64 = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| lambda[i])
            .sum();
        sum += part * (sigma1 - part);
        // next subset of the same size (Gosper's hack)
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    let min_partial_sum = lambda[..half].iter().sum();
    let sigma2 = sum / (2.0 * binomial(n - 2, half - 1) as f64);
    debug_assert!({
        let direct = elementary_symmetric(&lambda, 2);
        (sigma2 - direct).abs() <= 1e-9 * sigma_k_scale(a, 2).max(1e-300)
    });
    Ok(ComplementarySum {
        sum,
        sigma2,
        min_partial_sum,
    })
}

/// Smallest Einstein eigenvalue against the lower bound `(n−2)σ₂/σ₁`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EinsteinBound {
    pub lambda_min: f64,
    pub bound: f64,
    pub margin: f64,
}

pub fn einstein_bound_check(r: &CurvatureStructure) -> Result<EinsteinBound> {
    let n = r.dim();
    let a = schouten(r)?;
    let e = elementary_symmetric_all(&a.eigenvalues(), 2);
    if e[1] <= 0.0 {
        return Err(Error::NonPositiveScalar { sigma1: e[1] });
    }
    let lambda_min = einstein_tensor(r)?.min_eigenvalue();
    let bound = (n as f64 - 2.0) * e[2] / e[1];
    Ok(EinsteinBound {
        lambda_min,
        bound,
        margin: lambda_min - bound,
    })
}

/// Result of testing positivity of `t_k(A)` under `σ_1, …, σ_{k+1} > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CnsOutcome {
    pub hypothesis_held: bool,
    pub min_eigenvalue: f64,
}

impl CnsOutcome {
    pub fn violated(&self) -> bool {
        self.hypothesis_held && self.min_eigenvalue <= 0.0
    }
}

pub fn cns_check(a: &SymmetricForm, k: usize) -> Result<CnsOutcome> {
    let n = a.dim();
    sigma::check_k(k, 1, n.saturating_sub(1))?;
    Ok(CnsOutcome {
        hypothesis_held: gamma_positive(a, k + 1)?,
        min_eigenvalue: newton(a, k)?.min_eigenvalue(),
    })
}
