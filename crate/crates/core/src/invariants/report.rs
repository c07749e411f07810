use super::*;
use crate::tolerance::{relative_residual, Tolerances};

/// Every invariant of one curvature structure.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantReport {
    pub n: usize,
    pub scal: f64,
    pub ricci: SymmetricForm,
    pub schouten: SymmetricForm,
    /// `σ_k` for `k = 1..=n` (index `k − 1`).
    pub sigma: Vec<f64>,
    /// `t_k` for `k = 1..n` (index `k − 1`).
    pub newton: Vec<SymmetricForm>,
    pub einstein: SymmetricForm,
    /// `h_{2k}` for `k = 0..=n/2` (index `k`), `h_0 = 1`.
    pub gauss_bonnet: Vec<f64>,
    /// `T_{2k}` for `2k < n` (index `k`), `T_0 = g`.
    pub lovelock: Vec<SymmetricForm>,
    pub weyl_norm_sq: f64,
    /// Γ_k membership for `k = 1..=n` (index `k − 1`).
    pub gamma: Vec<bool>,
}

pub fn invariant_report(r: &CurvatureStructure) -> Result<InvariantReport> {
    let n = r.dim();
    require_dim(n, 3)?;
    let ric = ricci(r);
    let a = schouten(r)?;
    let sigma = sigma_all(&a);
    let gamma = (1..=n)
        .map(|k| sigma[..k].iter().all(|&s| s > 0.0))
        .collect();
    Ok(InvariantReport {
        n,
        scal: ric.trace(),
        newton: (1..n).map(|k| newton(&a, k)).collect::<Result<_>>()?,
        einstein: einstein_tensor(r)?,
        gauss_bonnet: (0..=n / 2)
            .map(|k| gauss_bonnet(r, k))
            .collect::<Result<_>>()?,
        lovelock: (0..n.div_ceil(2))
            .map(|k| lovelock(r, k))
            .collect::<Result<_>>()?,
        weyl_norm_sq: weyl(r)?.norm_sq(),
        ricci: ric,
        schouten: a,
        sigma,
        gamma,
    })
}

/// Outcome of one cross-check between two routes to the same quantity.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.residual <= self.tolerance
    }
}

/// Runs every identity connecting the invariants of `r`.
pub fn check_identities(r: &CurvatureStructure, tol: Tolerances) -> Result<Vec<IdentityCheck>> {
    let n = r.dim();
    require_dim(n, 3)?;
    let nf = n as f64;
    let mut out = Vec::new();
    let mut push = |name: String, residual: f64, tolerance: f64| {
        out.push(IdentityCheck {
            name,
            residual,
            tolerance,
        })
    };

    push(
        "pair symmetry".into(),
        r.pair_symmetry_residual(),
        tol.structural * r.as_double_form().max_abs().max(1.0),
    );
    push(
        "first Bianchi".into(),
        r.bianchi_residual(),
        tol.structural * r.as_double_form().max_abs().max(1.0) * 3.0,
    );

    let ric = ricci(r);
    let a = schouten(r)?;
    let g = SymmetricForm::metric(n)?;
    let scal = ric.trace();
    let sigma1 = a.trace();
    let sigma2 = sigma_k(&a, 2)?;

    push(
        "σ₁ = Scal/(2(n−1))".into(),
        relative_residual(sigma1, scal / (2.0 * (nf - 1.0)), ric.matrix().amax()),
        tol.relative,
    );
    push(
        "σ₁² = 2σ₂ + ‖A‖²".into(),
        relative_residual(sigma1 * sigma1, 2.0 * sigma2 + a.norm_sq(), a.norm_sq()),
        tol.relative,
    );
    for k in 1..=n {
        let paths = sigma_k_paths(&a, k)?;
        push(
            format!("σ_{k} eigen/Newton/contraction"),
            paths.max_relative_disagreement(),
            tol.relative,
        );
    }

    let w = weyl(r)?;
    let scale = r.as_double_form().max_abs().max(1.0);
    push(
        "Ric(W) = 0".into(),
        ricci(&w).matrix().amax() / scale,
        tol.relative,
    );
    let rebuilt = &w + &kulkarni_nomizu(&g, &a)?;
    push(
        "W + g·A = R".into(),
        rebuilt.max_abs_diff(r)? / scale,
        tol.relative,
    );

    let s = einstein_tensor(r)?;
    let s_newton = newton(&a, 1)?.scale(nf - 2.0);
    push(
        "S = (n−2) t₁(A)".into(),
        s.max_abs_diff(&s_newton)? / ric.matrix().amax().max(1.0),
        tol.relative,
    );
    let t2 = lovelock(r, 1)?;
    push(
        "T₂ = S".into(),
        t2.max_abs_diff(&s)? / ric.matrix().amax().max(1.0),
        tol.relative,
    );
    push(
        "h₂ = Scal/2".into(),
        relative_residual(gauss_bonnet(r, 1)?, scal / 2.0, ric.matrix().amax()),
        tol.relative,
    );
    push(
        "σ₂ via Ricci".into(),
        relative_residual(sigma2_via_ricci(r)?, sigma2, sigma_k_scale(&a, 2)),
        tol.relative,
    );

    if n >= 4 {
        let direct = h4_direct(r);
        let star = gauss_bonnet(r, 2)?;
        let split = w.norm_sq() + 2.0 * (nf - 2.0) * (nf - 3.0) * sigma2;
        let magnitude = r.norm_sq() + ric.norm_sq() + 0.25 * scal * scal;
        push(
            "h₄: ‖R‖² − ‖Ric‖² + Scal²/4 = ∗(g^{n−4}R²)/(n−4)!".into(),
            relative_residual(direct, star, magnitude),
            tol.relative,
        );
        push(
            "h₄ = ‖W‖² + 2(n−2)(n−3)σ₂".into(),
            relative_residual(direct, split, magnitude),
            tol.relative,
        );
    }
    Ok(out)
}
