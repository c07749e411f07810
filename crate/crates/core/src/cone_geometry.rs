//! Orthogonal splitting `R = ω₂ + g·ω₁ + ω₀·g²` of curvature structures,
//! Γ_k-cone membership and concavity, non-convexity of `{h₄ > 0}`, and the
//! closed forms governing surgery stability of positive Γ_k- and
//! h_{2r}-curvature.

use rand::Rng;
use rayon::prelude::*;

use crate::double_forms::{factorial, g_power, kulkarni_nomizu, CurvatureStructure, SymmetricForm};
use crate::error::{Error, Result};
use crate::invariants::{
    elementary_symmetric, gamma_positive, gauss_bonnet, h4_direct, schouten, sigma_k,
};
use crate::sampling::{random_traceless, random_weyl, stream_rng};

#[derive(Debug, Clone, PartialEq)]
pub struct ConeDecomposition {
    /// ω₂, totally trace-free.
    pub weyl: CurvatureStructure,
    /// ω₁, trace-free.
    pub traceless: SymmetricForm,
    /// ω₀.
    pub scalar: f64,
}

fn g_squared(n: usize) -> Result<CurvatureStructure> {
    Ok(CurvatureStructure::from_double_form_unchecked(g_power(
        n, 2,
    )?))
}

impl ConeDecomposition {
    pub fn dim(&self) -> usize {
        self.weyl.dim()
    }

    /// `g·ω₁` as a curvature structure.
    pub fn traceless_part(&self) -> Result<CurvatureStructure> {
        kulkarni_nomizu(&SymmetricForm::metric(self.dim())?, &self.traceless)
    }

    /// `ω₀·g²`.
    pub fn scalar_part(&self) -> Result<CurvatureStructure> {
        Ok(g_squared(self.dim())?.scale(self.scalar))
    }

    pub fn reconstruct(&self) -> Result<CurvatureStructure> {
        Ok(&(&self.weyl + &self.traceless_part()?) + &self.scalar_part()?)
    }
}

/// Splits `R`; for `n = 3` the Weyl part vanishes identically.
pub fn decompose(r: &CurvatureStructure) -> Result<ConeDecomposition> {
    let n = r.dim();
    let a = schouten(r)?;
    let nf = n as f64;
    let scalar = a.trace() / nf;
    let weyl = r - &kulkarni_nomizu(&SymmetricForm::metric(n)?, &a)?;
    Ok(ConeDecomposition {
        weyl,
        traceless: a.traceless_part(),
        scalar,
    })
}

/// `σ₂ = −‖gω₁‖²/(2(n−2)) + ¼‖g²ω₀‖²`.
pub fn sigma2_split(d: &ConeDecomposition) -> Result<f64> {
    let n = d.dim() as f64;
    Ok(-d.traceless_part()?.norm_sq() / (2.0 * (n - 2.0)) + 0.25 * d.scalar_part()?.norm_sq())
}

pub fn in_gamma_cone(r: &CurvatureStructure, k: usize) -> Result<bool> {
    gamma_positive(&schouten(r)?, k)
}

/// `σ_k((1−t)R + tR̄)^{1/k} − (1−t)σ_k(R)^{1/k} − tσ_k(R̄)^{1/k}` for `R, R̄`
/// in the Γ_k cone; non-negative by concavity.
pub fn concavity_check(
    r: &CurvatureStructure,
    r_bar: &CurvatureStructure,
    k: usize,
    t: f64,
) -> Result<f64> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::InvalidParameter(format!(
            "t must lie in [0, 1], got {t}"
        )));
    }
    if !in_gamma_cone(r, k)? || !in_gamma_cone(r_bar, k)? {
        return Err(Error::OutsideCone { k });
    }
    let root = |x: &CurvatureStructure| -> Result<f64> {
        Ok(sigma_k(&schouten(x)?, k)?.powf(1.0 / k as f64))
    };
    let mid = r.lerp(r_bar, t)?;
    Ok(root(&mid)? - (1.0 - t) * root(r)? - t * root(r_bar)?)
}

/// A pair with `h₄(R) > 0`, `h₄(R̄) > 0` and `h₄((R+R̄)/2) < 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct H4Witness {
    pub trial: usize,
    pub r: CurvatureStructure,
    pub r_bar: CurvatureStructure,
    /// `h₄` at `R`, `R̄` and the midpoint.
    pub h4: [f64; 3],
}

pub const WITNESS_MARGIN: f64 = 1e-6;

/// Random search for a non-convexity witness of `{h₄ > 0}` inside the family
/// `xW + g·(y a) + z g²` spanned by one unit Weyl structure and one unit
/// trace-free form. Trials run in parallel; the lowest successful trial index
/// wins, so the result depends only on `seed`.
pub fn h4_nonconvexity_witness(n: usize, seed: u64, budget: usize) -> Result<Option<H4Witness>> {
    if budget == 0 {
        return Err(Error::InvalidParameter("budget must be at least 1".into()));
    }
    let mut rng = stream_rng(seed, u64::MAX);
    let w = if n >= 4 {
        let w = random_weyl(n, &mut rng)?;
        w.scale(1.0 / w.norm_sq().sqrt())
    } else {
        CurvatureStructure::zeros(n)?
    };
    let a = random_traceless(n, &mut rng)?;
    let a = a.scale(1.0 / a.norm_sq().sqrt());
    let ga = kulkarni_nomizu(&SymmetricForm::metric(n)?, &a)?;
    let g2 = g_squared(n)?;
    let member = |c: [f64; 3]| &(&w.scale(c[0]) + &ga.scale(c[1])) + &g2.scale(c[2]);

    let found = (0..budget).into_par_iter().find_map_first(|trial| {
        let mut rng = stream_rng(seed, trial as u64);
        let mut draw = || -> [f64; 3] { std::array::from_fn(|_| rng.random_range(-1.0..1.0)) };
        let (c, c_bar) = (draw(), draw());
        let r = member(c);
        let r_bar = member(c_bar);
        let mid = r.lerp(&r_bar, 0.5).ok()?;
        let h4 = [h4_direct(&r), h4_direct(&r_bar), h4_direct(&mid)];
        (h4[0] > WITNESS_MARGIN && h4[1] > WITNESS_MARGIN && h4[2] < -WITNESS_MARGIN).then_some(
            H4Witness {
                trial,
                r,
                r_bar,
                h4,
            },
        )
    });

    let Some(witness) = found else {
        return Ok(None);
    };
    // re-verify through the exterior-power route
    if n >= 4 {
        let mid = witness.r.lerp(&witness.r_bar, 0.5)?;
        let star = [
            gauss_bonnet(&witness.r, 2)?,
            gauss_bonnet(&witness.r_bar, 2)?,
            gauss_bonnet(&mid, 2)?,
        ];
        let ok = star[0] > 0.0 && star[1] > 0.0 && star[2] < 0.0;
        if !ok {
            return Err(Error::InvalidParameter(format!(
                "witness failed re-verification: direct {:?}, star {star:?}",
                witness.h4
            )));
        }
    }
    Ok(Some(witness))
}

fn check_range(name: &'static str, value: usize, min: usize, max: usize) -> Result<()> {
    if value < min || value > max {
        return Err(Error::OutOfRange {
            name,
            value: value as i64,
            min: min as i64,
            max: max as i64,
        });
    }
    Ok(())
}

/// σ₂ of `S^{c−1}(1) × ℝ^{n−c+1}`:
/// `(c−2)²(c−1)(n(c−5)+4) / (8(n−2)²(n−1))`.
pub fn surgery_product_sigma2(n: usize, c: usize) -> Result<f64> {
    check_range("c", c, 3, n)?;
    let (nf, cf) = (n as f64, c as f64);
    Ok((cf - 2.0).powi(2) * (cf - 1.0) * (nf * (cf - 5.0) + 4.0)
        / (8.0 * (nf - 2.0).powi(2) * (nf - 1.0)))
}

/// σ_k of the rescaled Schouten tensor `Ā` of `S^{n−2} × ℝ²`, which has
/// eigenvalue `n` with multiplicity `n−2` and `2−n` with multiplicity 2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereCrossR2 {
    /// Elementary symmetric function of the explicit spectrum.
    pub spectrum: f64,
    /// Factorial closed form; defined for `2 ≤ k ≤ n−2`.
    pub closed_form: Option<f64>,
    /// `4(n−1)k² + 4(1−n²)k + n³`, whose sign is that of σ_k.
    pub quadratic: f64,
}

pub fn sphere_cross_r2_sigma_k(n: usize, k: usize) -> Result<SphereCrossR2> {
    if n < 4 {
        return Err(Error::DimensionTooSmall { n, min: 4 });
    }
    check_range("k", k, 1, n - 1)?;
    let nf = n as f64;
    let kf = k as f64;
    let mut lambda = vec![nf; n - 2];
    lambda.extend([2.0 - nf; 2]);
    let spectrum = elementary_symmetric(&lambda, k);
    let closed_form = (2..=n - 2).contains(&k).then(|| {
        let prefactor =
            factorial(n - 2) * nf.powi(k as i32 - 2) / (factorial(n - k - 2) * factorial(k - 2));
        let bracket = nf * nf / (kf * (kf - 1.0))
            - 2.0 * nf * (nf - 2.0) / ((kf - 1.0) * (nf - kf - 1.0))
            + (nf - 2.0).powi(2) / ((nf - kf) * (nf - kf - 1.0));
        prefactor * bracket
    });
    Ok(SphereCrossR2 {
        spectrum,
        closed_form,
        quadratic: 4.0 * (nf - 1.0) * kf * kf + 4.0 * (1.0 - nf * nf) * kf + nf.powi(3),
    })
}

/// Largest `k ≥ 2` with `2k < n + 1 − √(n − 1/(n−1))`.
pub fn one_surgery_max_k(n: usize) -> Option<usize> {
    if n < 4 {
        return None;
    }
    let nf = n as f64;
    let bound = nf + 1.0 - (nf - 1.0 / (nf - 1.0)).sqrt();
    // largest integer k with 2k strictly below the bound
    let k = ((bound / 2.0).ceil() as usize).saturating_sub(1);
    (k >= 2).then_some(k)
}

/// `h_{2r}` of `S^{c−1}(1) × ℝ^{n−c+1}`: `(c−1)! / (2^r (c−1−2r)!)`.
pub fn h2r_product_value(c: usize, r: usize) -> Result<f64> {
    if r < 1 || c < 1 || c - 1 < 2 * r {
        return Err(Error::InvalidParameter(format!(
            "need c − 1 ≥ 2r ≥ 2, got c = {c}, r = {r}"
        )));
    }
    Ok(factorial(c - 1) / (2f64.powi(r as i32) * factorial(c - 1 - 2 * r)))
}

/// What is known about fundamental groups of compact `n`-manifolds with
/// positive Γ_k-curvature.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FundamentalGroupStatus {
    /// Every finitely presented group occurs.
    Unrestricted,
    /// The fundamental group must be finite.
    FiniteRequired,
    Open,
}

pub fn fundamental_group_status(n: usize, k: usize) -> Result<FundamentalGroupStatus> {
    if n < 3 {
        return Err(Error::DimensionTooSmall { n, min: 3 });
    }
    check_range("k", k, 1, n)?;
    let unrestricted = match k {
        1 => n >= 5,
        _ => one_surgery_max_k(n).is_some_and(|max| k <= max),
    };
    Ok(if unrestricted {
        FundamentalGroupStatus::Unrestricted
    } else if 2 * k >= n {
        FundamentalGroupStatus::FiniteRequired
    } else {
        FundamentalGroupStatus::Open
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{ricci, scalar, weyl};
    use crate::model_spaces::{flat, product, sphere};
    use crate::sampling::{random_curvature, structure_with_schouten};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
    }

    #[test]
    fn decompose_examples() {
        for n in 3..=7 {
            let d = decompose(&sphere(n, 1.0).unwrap()).unwrap();
            assert!(d.weyl.norm_sq() < 1e-24);
            assert!(d.traceless.matrix().amax() < 1e-14);
            assert!(close(d.scalar, 0.5, 1e-14));
        }
        let mut rng = stream_rng(9, 0);
        let a = random_traceless(5, &mut rng).unwrap();
        let r = kulkarni_nomizu(&SymmetricForm::metric(5).unwrap(), &a).unwrap();
        let d = decompose(&r).unwrap();
        assert!(d.weyl.as_double_form().max_abs() < 1e-13);
        assert!(d.traceless.max_abs_diff(&a).unwrap() < 1e-13);
        assert!(d.scalar.abs() < 1e-14);
    }

    #[test]
    fn decomposition_is_orthogonal_and_exact() {
        let mut rng = stream_rng(10, 0);
        for n in 3..=8 {
            let r = random_curvature(n, &mut rng).unwrap();
            let d = decompose(&r).unwrap();
            assert!(d.reconstruct().unwrap().max_abs_diff(&r).unwrap() < 1e-10);
            assert!(ricci(&d.weyl).matrix().amax() < 1e-10);
            assert!(d.traceless.trace().abs() < 1e-12);
            let parts = [
                d.weyl.clone(),
                d.traceless_part().unwrap(),
                d.scalar_part().unwrap(),
            ];
            for i in 0..3 {
                for j in i + 1..3 {
                    assert!(parts[i].inner_product(&parts[j]).unwrap().abs() < 1e-10);
                }
            }
            assert!(close(
                d.scalar,
                scalar(&r) / (2.0 * (n * (n - 1)) as f64),
                1e-12
            ));
        }
    }

    #[test]
    fn sigma2_split_examples() {
        for n in 3..=8 {
            let d = ConeDecomposition {
                weyl: CurvatureStructure::zeros(n).unwrap(),
                traceless: SymmetricForm::zeros(n).unwrap(),
                scalar: 0.5,
            };
            assert!(close(
                sigma2_split(&d).unwrap(),
                (n * (n - 1)) as f64 / 8.0,
                1e-13
            ));
        }
        let mut rng = stream_rng(11, 0);
        let d = ConeDecomposition {
            weyl: CurvatureStructure::zeros(5).unwrap(),
            traceless: random_traceless(5, &mut rng).unwrap(),
            scalar: 0.0,
        };
        assert!(sigma2_split(&d).unwrap() < 0.0);
        let d = ConeDecomposition {
            weyl: random_weyl(5, &mut rng).unwrap(),
            traceless: SymmetricForm::zeros(5).unwrap(),
            scalar: 0.0,
        };
        assert_eq!(sigma2_split(&d).unwrap(), 0.0);
    }

    #[test]
    fn sigma2_split_matches_eigenvalues() {
        let mut rng = stream_rng(12, 0);
        for n in 4..=8 {
            for _ in 0..20 {
                let r = random_curvature(n, &mut rng).unwrap();
                let a = schouten(&r).unwrap();
                let split = sigma2_split(&decompose(&r).unwrap()).unwrap();
                let scale = crate::invariants::sigma_k_scale(&a, 2);
                assert!((split - sigma_k(&a, 2).unwrap()).abs() <= 1e-9 * scale);
            }
        }
    }

    #[test]
    fn gamma_cone_examples() {
        for n in 3..=7 {
            let s = sphere(n, 1.0).unwrap();
            for k in 1..=n {
                assert!(in_gamma_cone(&s, k).unwrap());
            }
            assert!(!in_gamma_cone(&s.scale(-1.0), 1).unwrap());
        }
        let r = product(&sphere(3, 0.1).unwrap(), &sphere(4, 1.0).unwrap()).unwrap();
        assert!(in_gamma_cone(&r, 1).unwrap());
        assert!(!in_gamma_cone(&r, 2).unwrap());
    }

    #[test]
    fn weyl_noise_never_changes_gamma2_membership() {
        let mut rng = stream_rng(13, 0);
        for n in 4..=7 {
            for _ in 0..20 {
                let r = random_curvature(n, &mut rng).unwrap();
                let noisy = &r + &random_weyl(n, &mut rng).unwrap().scale(50.0);
                assert_eq!(
                    in_gamma_cone(&r, 2).unwrap(),
                    in_gamma_cone(&noisy, 2).unwrap()
                );
            }
        }
    }

    #[test]
    fn concavity_examples() {
        let mut rng = stream_rng(14, 0);
        let a = crate::sampling::gamma_positive_schouten(5, 3, &mut rng).unwrap();
        let r = structure_with_schouten(&a, 1.0, &mut rng).unwrap();
        assert!(concavity_check(&r, &r, 3, 0.3).unwrap().abs() < 1e-12);
        let b = crate::sampling::gamma_positive_schouten(5, 3, &mut rng).unwrap();
        let r_bar = structure_with_schouten(&b, 1.0, &mut rng).unwrap();
        assert!(concavity_check(&r, &r_bar, 3, 0.0).unwrap().abs() < 1e-12);
        assert!(concavity_check(&r, &r_bar, 3, 1.0).unwrap().abs() < 1e-12);
        assert!(concavity_check(&r, &r_bar, 3, 0.4).unwrap() >= -1e-10);
        let outside = sphere(5, 1.0).unwrap().scale(-1.0);
        assert!(matches!(
            concavity_check(&r, &outside, 3, 0.5),
            Err(Error::OutsideCone { k: 3 })
        ));
        assert!(concavity_check(&r, &r_bar, 3, 1.5).is_err());
    }

    #[test]
    fn witness_found_and_reverified() {
        for n in 4..=8 {
            let w = h4_nonconvexity_witness(n, 2024, 100_000)
                .unwrap()
                .expect("witness");
            let mid = w.r.lerp(&w.r_bar, 0.5).unwrap();
            assert!(h4_direct(&w.r) > WITNESS_MARGIN);
            assert!(h4_direct(&w.r_bar) > WITNESS_MARGIN);
            assert!(h4_direct(&mid) < -WITNESS_MARGIN);
            assert!(close(gauss_bonnet(&w.r, 2).unwrap(), w.h4[0], 1e-9));
        }
    }

    #[test]
    fn equal_pair_is_never_a_witness() {
        let r = sphere(5, 1.0).unwrap();
        let mid = r.lerp(&r, 0.5).unwrap();
        assert!(h4_direct(&mid) > 0.0);
        assert!(h4_nonconvexity_witness(5, 1, 0).is_err());
    }

    #[test]
    fn pure_weyl_and_pure_traceless_family() {
        let mut rng = stream_rng(15, 0);
        let n = 6;
        let w = random_weyl(n, &mut rng).unwrap();
        let w = w.scale(1.0 / w.norm_sq().sqrt());
        let a = random_traceless(n, &mut rng).unwrap();
        let ga = kulkarni_nomizu(&SymmetricForm::metric(n).unwrap(), &a).unwrap();
        assert!(close(h4_direct(&w), 1.0, 1e-12));
        // a pure trace-free Schouten part has h₄ = 2(n−2)(n−3)σ₂ < 0
        assert!(h4_direct(&ga) < 0.0);
        assert!(weyl(&ga).unwrap().as_double_form().max_abs() < 1e-12);
    }

    #[test]
    fn surgery_sigma2_examples() {
        assert!(close(surgery_product_sigma2(6, 5).unwrap(), 0.225, 1e-14));
        assert!(close(
            surgery_product_sigma2(9, 4).unwrap(),
            -60.0 / 3136.0,
            1e-14
        ));
        for n in 5..=12 {
            assert!(surgery_product_sigma2(n, 5).unwrap() > 0.0);
        }
        assert!(surgery_product_sigma2(6, 2).is_err());
        assert!(surgery_product_sigma2(6, 7).is_err());
    }

    #[test]
    fn surgery_sigma2_matches_tensor() {
        for n in 5..=12 {
            for c in 3..=n {
                let r = product(&sphere(c - 1, 1.0).unwrap(), &flat(n - c + 1).unwrap()).unwrap();
                let a = schouten(&r).unwrap();
                let direct = sigma_k(&a, 2).unwrap();
                let closed = surgery_product_sigma2(n, c).unwrap();
                let scale = crate::invariants::sigma_k_scale(&a, 2);
                assert!(
                    (direct - closed).abs() <= 1e-9 * scale.max(closed.abs()),
                    "n={n} c={c}"
                );
                let expected_sign = if c >= 5 { 1.0 } else { -1.0 };
                assert_eq!(closed.signum(), expected_sign, "n={n} c={c}");
            }
        }
    }

    #[test]
    fn sphere_cross_r2_examples() {
        let v = sphere_cross_r2_sigma_k(6, 2).unwrap();
        assert!(close(v.spectrum, 40.0, 1e-14));
        assert!(close(v.closed_form.unwrap(), 40.0, 1e-13));
        for n in 4..=12 {
            let v = sphere_cross_r2_sigma_k(n, 1).unwrap();
            assert!(close(v.spectrum, ((n - 2) * (n - 2)) as f64, 1e-14));
            assert!(v.closed_form.is_none());
            for k in 1..n {
                let v = sphere_cross_r2_sigma_k(n, k).unwrap();
                assert_eq!(v.spectrum.signum(), v.quadratic.signum(), "n={n} k={k}");
                if let Some(c) = v.closed_form {
                    assert!(close(c, v.spectrum, 1e-9), "n={n} k={k}");
                }
            }
        }
        assert!(sphere_cross_r2_sigma_k(3, 1).is_err());
        assert!(sphere_cross_r2_sigma_k(6, 6).is_err());
    }

    #[test]
    fn sphere_cross_r2_spectrum_matches_tensor() {
        for n in 4..=9 {
            let r = product(&sphere(n - 2, 1.0).unwrap(), &flat(2).unwrap()).unwrap();
            let nf = n as f64;
            let a_bar = schouten(&r)
                .unwrap()
                .scale(2.0 * (nf - 1.0) * (nf - 2.0) / (nf - 3.0));
            for k in 1..n {
                let direct = sigma_k(&a_bar, k).unwrap();
                let oracle = sphere_cross_r2_sigma_k(n, k).unwrap().spectrum;
                assert!(close(direct, oracle, 1e-9), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn max_k_values() {
        let expected = [
            None,
            None,
            Some(2),
            Some(2),
            Some(3),
            Some(3),
            Some(3),
            Some(4),
            Some(4),
        ];
        for (n, want) in (4..=12).zip(expected) {
            assert_eq!(one_surgery_max_k(n), want, "n={n}");
        }
        let mut prev = 0;
        for n in 4..=200 {
            let k = one_surgery_max_k(n).unwrap_or(0);
            assert!(k >= prev);
            prev = k;
        }
    }

    #[test]
    fn max_k_makes_sphere_cross_r2_gamma_positive() {
        for n in 6..=12 {
            let max = one_surgery_max_k(n).unwrap();
            for k in 1..=max {
                assert!(
                    sphere_cross_r2_sigma_k(n, k).unwrap().spectrum > 0.0,
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn h2r_examples() {
        assert!(close(h2r_product_value(5, 1).unwrap(), 6.0, 1e-15));
        assert!(close(h2r_product_value(5, 2).unwrap(), 6.0, 1e-15));
        for r in 1..=5 {
            let expected = factorial(2 * r) / 2f64.powi(r as i32);
            assert!(close(
                h2r_product_value(2 * r + 1, r).unwrap(),
                expected,
                1e-15
            ));
        }
        assert!(h2r_product_value(4, 2).is_err());
        assert!(h2r_product_value(5, 0).is_err());
    }

    #[test]
    fn h2r_matches_gauss_bonnet_of_product() {
        for n in 4..=10 {
            for c in 3..=n {
                let r = product(&sphere(c - 1, 1.0).unwrap(), &flat(n - c + 1).unwrap()).unwrap();
                for k in 1..=(c - 1) / 2 {
                    let direct = gauss_bonnet(&r, k).unwrap();
                    assert!(
                        close(direct, h2r_product_value(c, k).unwrap(), 1e-10),
                        "n={n} c={c} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn fundamental_group_examples() {
        use FundamentalGroupStatus::*;
        assert_eq!(fundamental_group_status(6, 2).unwrap(), Unrestricted);
        assert_eq!(fundamental_group_status(4, 2).unwrap(), FiniteRequired);
        assert_eq!(fundamental_group_status(10, 4).unwrap(), Open);
        assert_eq!(fundamental_group_status(8, 3).unwrap(), Unrestricted);
        assert_eq!(fundamental_group_status(11, 4).unwrap(), Unrestricted);
        assert_eq!(fundamental_group_status(7, 1).unwrap(), Unrestricted);
        assert!(fundamental_group_status(5, 0).is_err());
        assert!(fundamental_group_status(2, 1).is_err());
    }
}
