//! Model geometries: round spheres, space forms, Riemannian products and
//! fiber-scaled canonical variations, with the sign predicates for σ₂ of a
//! shrinking fiber.

use rand::Rng;
use rand_distr::StandardNormal;

use crate::double_forms::{g_power, CurvatureStructure, DoubleForm, MAX_DIM};
use crate::error::{Error, Result};
use crate::invariants::{einstein_tensor, h4_direct, ricci, schouten, sigma_k};
use crate::sampling::{random_weyl, stream_rng};

fn positive(name: &'static str, value: f64) -> Result<()> {
    if !(value > 0.0 && value.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "{name} must be positive and finite, got {value}"
        )));
    }
    Ok(())
}

/// Constant curvature `κ`: `R = (κ/2) g²`.
pub fn space_form(p: usize, curvature: f64) -> Result<CurvatureStructure> {
    if p < 2 {
        return Err(Error::DimensionTooSmall { n: p, min: 2 });
    }
    Ok(CurvatureStructure::from_double_form_unchecked(
        g_power(p, 2)?.scale(curvature / 2.0),
    ))
}

/// Round sphere of radius `r`.
pub fn sphere(p: usize, r: f64) -> Result<CurvatureStructure> {
    positive("radius", r)?;
    space_form(p, 1.0 / (r * r))
}

/// Euclidean space; unlike `space_form` this accepts `p = 1`.
pub fn flat(p: usize) -> Result<CurvatureStructure> {
    CurvatureStructure::zeros(p)
}

/// Block direct sum on `ℝ^{p+q}`, first factor on the leading coordinates.
pub fn product(
    first: &CurvatureStructure,
    second: &CurvatureStructure,
) -> Result<CurvatureStructure> {
    let p = first.dim();
    let n = p + second.dim();
    if n > MAX_DIM {
        return Err(Error::UnsupportedDimension { n, max: MAX_DIM });
    }
    let a = first.as_double_form();
    let b = second.as_double_form();
    let form = DoubleForm::from_fn(n, 2, 2, |i, j| {
        let all = [i[0], i[1], j[0], j[1]];
        if all.iter().all(|&x| x < p) {
            a.get(i, j)
        } else if all.iter().all(|&x| x >= p) {
            b.get(&[i[0] - p, i[1] - p], &[j[0] - p, j[1] - p])
        } else {
            0.0
        }
    })?;
    Ok(CurvatureStructure::from_double_form_unchecked(form))
}

/// Factor geometry of a product.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FiberModel {
    Sphere {
        radius: f64,
    },
    SpaceForm {
        curvature: f64,
    },
    /// Einstein structure with the given scalar curvature plus a seeded Weyl
    /// part of norm `weyl_norm` (ignored below dimension 4).
    Einstein {
        scal: f64,
        weyl_norm: f64,
        seed: u64,
    },
    Flat,
}

impl FiberModel {
    pub fn build(&self, dim: usize) -> Result<CurvatureStructure> {
        match *self {
            FiberModel::Sphere { radius } => sphere(dim, radius),
            FiberModel::SpaceForm { curvature } => space_form(dim, curvature),
            FiberModel::Flat => flat(dim),
            FiberModel::Einstein {
                scal,
                weyl_norm,
                seed,
            } => {
                if dim < 2 {
                    return Err(Error::DimensionTooSmall { n: dim, min: 2 });
                }
                let base = space_form(dim, scal / (dim * (dim - 1)) as f64)?;
                if dim < 4 || weyl_norm == 0.0 {
                    return Ok(base);
                }
                let w = random_weyl(dim, &mut stream_rng(seed, 0))?;
                Ok(&base + &w.scale(weyl_norm / w.norm_sq().sqrt()))
            }
        }
    }
}

/// A product `F^p × B^q` with the fiber metric scaled by `t²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductSpec {
    pub fiber_dim: usize,
    pub fiber: FiberModel,
    pub base_dim: usize,
    pub base: FiberModel,
    pub t: f64,
}

/// Exact curvature of the canonical variation: the fiber block is scaled by
/// `1/t²`.
pub fn canonical_variation(spec: &ProductSpec) -> Result<CurvatureStructure> {
    positive("t", spec.t)?;
    let n = spec.fiber_dim + spec.base_dim;
    if n < 3 {
        return Err(Error::DimensionTooSmall { n, min: 3 });
    }
    let fiber = spec.fiber.build(spec.fiber_dim)?;
    let base = spec.base.build(spec.base_dim)?;
    product(&fiber.scale(1.0 / (spec.t * spec.t)), &base)
}

/// Predicted sign of a quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignPrediction {
    Positive,
    Negative,
    Indeterminate,
}

impl SignPrediction {
    pub fn of(value: f64) -> Self {
        if value > 0.0 {
            SignPrediction::Positive
        } else if value < 0.0 {
            SignPrediction::Negative
        } else {
            SignPrediction::Indeterminate
        }
    }

    /// Whether `value` has this sign; `Indeterminate` matches nothing.
    pub fn matches(&self, value: f64) -> bool {
        match self {
            SignPrediction::Positive => value > 0.0,
            SignPrediction::Negative => value < 0.0,
            SignPrediction::Indeterminate => false,
        }
    }
}

/// Sign of σ₂ for small fibers from fiber data:
/// `8(n−1)(p−1)(p−2)² σ₂(F)` against `(n−p) Scal(F)²`, with ties decided at
/// relative `1e−9`.
pub fn submersion_sigma2_predicate(
    n: usize,
    p: usize,
    sigma2_fiber: f64,
    scal_fiber: f64,
) -> Result<SignPrediction> {
    if p < 2 || p >= n {
        return Err(Error::OutOfRange {
            name: "p",
            value: p as i64,
            min: 2,
            max: n as i64 - 1,
        });
    }
    let (nf, pf) = (n as f64, p as f64);
    let lhs = 8.0 * (nf - 1.0) * (pf - 1.0) * (pf - 2.0).powi(2) * sigma2_fiber;
    let rhs = (nf - pf) * scal_fiber * scal_fiber;
    let scale = lhs.abs().max(rhs.abs());
    if scale == 0.0 || (lhs - rhs).abs() <= 1e-9 * scale {
        return Ok(SignPrediction::Indeterminate);
    }
    Ok(SignPrediction::of(lhs - rhs))
}

/// σ₂ of the Schouten tensor of an Einstein structure of dimension `p`.
pub fn einstein_fiber_sigma2(p: usize, scal: f64) -> f64 {
    let pf = p as f64;
    scal * scal / (8.0 * pf * (pf - 1.0))
}

/// Coefficient of `t⁻⁴` in `2(n−2)² σ₂(g_t)` for an Einstein fiber of
/// dimension `p` and scalar curvature `scal`.
pub fn leading_coefficient(n: usize, p: usize, scal_fiber: f64) -> f64 {
    let (nf, pf) = (n as f64, p as f64);
    scal_fiber * scal_fiber * (nf * (pf - 4.0) + 4.0) / (4.0 * pf * (nf - 1.0))
}

/// Base factor of a sphere-fiber sign table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseKind {
    UnitSphere,
    Flat,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignRow {
    pub r: f64,
    pub scal: f64,
    pub sigma2: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SignTable {
    pub p: usize,
    pub q: usize,
    pub base: BaseKind,
    pub rows: Vec<SignRow>,
    pub predicted_scal: SignPrediction,
    pub predicted_sigma2: SignPrediction,
    /// Largest grid radius such that every grid radius up to it shows the
    /// predicted signs.
    pub largest_consistent_r: Option<f64>,
}

/// Exact Scal and σ₂ of `S^p(r) × B^q` over a grid of radii.
pub fn product_sign_table(
    p: usize,
    q: usize,
    base: BaseKind,
    r_values: &[f64],
) -> Result<SignTable> {
    let n = p + q;
    let base_model = match base {
        BaseKind::UnitSphere => FiberModel::Sphere { radius: 1.0 },
        BaseKind::Flat => FiberModel::Flat,
    };
    let mut rows = r_values
        .iter()
        .map(|&r| {
            let spec = ProductSpec {
                fiber_dim: p,
                fiber: FiberModel::Sphere { radius: 1.0 },
                base_dim: q,
                base: base_model,
                t: r,
            };
            let rs = canonical_variation(&spec)?;
            let a = schouten(&rs)?;
            Ok(SignRow {
                r,
                scal: a.trace() * 2.0 * (n as f64 - 1.0),
                sigma2: sigma_k(&a, 2)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(|a, b| a.r.total_cmp(&b.r));

    let predicted_scal = SignPrediction::Positive;
    let predicted_sigma2 = SignPrediction::of(leading_coefficient(n, p, 1.0));
    let largest_consistent_r = rows
        .iter()
        .take_while(|row| predicted_scal.matches(row.scal) && predicted_sigma2.matches(row.sigma2))
        .last()
        .map(|row| row.r);
    Ok(SignTable {
        p,
        q,
        base,
        rows,
        predicted_scal,
        predicted_sigma2,
        largest_consistent_r,
    })
}

/// Curvature signs reported together: a sampled lower estimate of sectional
/// curvature, the smallest Ricci and Einstein eigenvalues, h₄ and σ₂.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignPortfolio {
    pub min_sectional: f64,
    pub ricci_min: f64,
    pub einstein_min: f64,
    pub h4: f64,
    pub sigma2: f64,
}

pub const MIN_PLANE_SAMPLES: usize = 10_000;

/// Sectional minimum over all coordinate planes and at least
/// [`MIN_PLANE_SAMPLES`] random planes.
pub fn sign_portfolio(r: &CurvatureStructure, samples: usize, seed: u64) -> Result<SignPortfolio> {
    let n = r.dim();
    if n < 3 {
        return Err(Error::DimensionTooSmall { n, min: 3 });
    }
    let mut min_sectional = f64::INFINITY;
    for i in 0..n {
        for j in i + 1..n {
            min_sectional = min_sectional.min(r.component(i, j, i, j));
        }
    }
    let mut rng = stream_rng(seed, 0);
    for _ in 0..samples.max(MIN_PLANE_SAMPLES) {
        let x: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
        let y: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
        if let Some(k) = r.sectional(&x, &y) {
            min_sectional = min_sectional.min(k);
        }
    }
    Ok(SignPortfolio {
        min_sectional,
        ricci_min: ricci(r).min_eigenvalue(),
        einstein_min: einstein_tensor(r)?.min_eigenvalue(),
        h4: h4_direct(r),
        sigma2: sigma_k(&schouten(r)?, 2)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{gauss_bonnet, scalar, weyl};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
    }

    #[test]
    fn sphere_examples() {
        let s4 = sphere(4, 1.0).unwrap();
        assert!(close(scalar(&s4), 12.0, 1e-14));
        assert!(close(
            sigma_k(&schouten(&s4).unwrap(), 2).unwrap(),
            1.5,
            1e-13
        ));
        assert!(close(gauss_bonnet(&s4, 2).unwrap(), 6.0, 1e-13));
        for (p, r) in [(3, 0.5), (5, 2.0), (7, 0.1)] {
            let expected = (p * (p - 1)) as f64 / (r * r);
            assert!(close(scalar(&sphere(p, r).unwrap()), expected, 1e-13));
        }
        assert_eq!(sphere(2, 1.0).unwrap().component(0, 1, 0, 1), 1.0);
        assert!(sphere(1, 1.0).is_err());
        assert!(sphere(3, 0.0).is_err());
    }

    #[test]
    fn space_form_examples() {
        assert!(close(scalar(&space_form(5, -1.0).unwrap()), -20.0, 1e-14));
        assert_eq!(space_form(4, 0.0).unwrap().norm_sq(), 0.0);
        let ric = ricci(&space_form(3, -1.0).unwrap());
        let expected = crate::SymmetricForm::metric(3).unwrap().scale(-2.0);
        assert!(ric.max_abs_diff(&expected).unwrap() < 1e-14);
    }

    #[test]
    fn product_blocks() {
        let r = product(&sphere(4, 1.0).unwrap(), &flat(3).unwrap()).unwrap();
        let ric = ricci(&r);
        let expected =
            crate::SymmetricForm::diagonal(&[3.0, 3.0, 3.0, 3.0, 0.0, 0.0, 0.0]).unwrap();
        assert!(ric.max_abs_diff(&expected).unwrap() < 1e-14);
        assert_eq!(r.component(0, 4, 0, 4), 0.0);
        let zero = product(&flat(2).unwrap(), &flat(3).unwrap()).unwrap();
        assert_eq!(zero.norm_sq(), 0.0);
        let big = product(&flat(7).unwrap(), &flat(6).unwrap());
        assert!(matches!(big, Err(Error::UnsupportedDimension { .. })));
    }

    #[test]
    fn sphere_times_hyperbolic_is_conformally_flat() {
        for n in 2..=4 {
            let r = product(
                &space_form(n + 2, 1.0).unwrap(),
                &space_form(n, -1.0).unwrap(),
            )
            .unwrap();
            assert!(scalar(&r) > 0.0);
            assert!(einstein_tensor(&r).unwrap().min_eigenvalue() > 0.0);
            assert!(weyl(&r).unwrap().norm_sq().sqrt() < 1e-10);
        }
    }

    #[test]
    fn canonical_variation_scales_fiber() {
        let spec = ProductSpec {
            fiber_dim: 3,
            fiber: FiberModel::Sphere { radius: 1.0 },
            base_dim: 2,
            base: FiberModel::Sphere { radius: 1.0 },
            t: 0.3,
        };
        let direct = product(&sphere(3, 0.3).unwrap(), &sphere(2, 1.0).unwrap()).unwrap();
        assert!(
            canonical_variation(&spec)
                .unwrap()
                .max_abs_diff(&direct)
                .unwrap()
                < 1e-12
        );
        let plain = ProductSpec { t: 1.0, ..spec };
        let direct = product(&sphere(3, 1.0).unwrap(), &sphere(2, 1.0).unwrap()).unwrap();
        assert_eq!(canonical_variation(&plain).unwrap(), direct);

        let torus = ProductSpec {
            fiber_dim: 4,
            fiber: FiberModel::Sphere { radius: 1.0 },
            base_dim: 5,
            base: FiberModel::Flat,
            t: 0.1,
        };
        let r = canonical_variation(&torus).unwrap();
        assert!(scalar(&r) > 0.0);
        assert!(sigma_k(&schouten(&r).unwrap(), 2).unwrap() > 0.0);
        assert!(canonical_variation(&ProductSpec { t: -1.0, ..torus }).is_err());
    }

    #[test]
    fn einstein_model_has_requested_scalar_and_is_einstein() {
        let m = FiberModel::Einstein {
            scal: 20.0,
            weyl_norm: 3.0,
            seed: 11,
        };
        let r = m.build(5).unwrap();
        assert!(close(scalar(&r), 20.0, 1e-12));
        let traceless = ricci(&r).traceless_part();
        assert!(traceless.matrix().amax() < 1e-12);
        assert!(close(weyl(&r).unwrap().norm_sq(), 9.0, 1e-12));
    }

    #[test]
    fn predicate_examples() {
        for p in 4..=8 {
            for n in p + 1..=12 {
                let pred =
                    submersion_sigma2_predicate(n, p, einstein_fiber_sigma2(p, 7.0), 7.0).unwrap();
                assert_eq!(pred, SignPrediction::Positive, "n={n} p={p}");
            }
        }
        for n in 3..=9 {
            let pred = submersion_sigma2_predicate(n, 2, 0.123, 2.0).unwrap();
            assert_eq!(pred, SignPrediction::Negative);
        }
        for n in 5..=9 {
            let pred =
                submersion_sigma2_predicate(n, 3, einstein_fiber_sigma2(3, 6.0), 6.0).unwrap();
            assert_eq!(pred, SignPrediction::Negative);
        }
        assert_eq!(
            submersion_sigma2_predicate(4, 3, einstein_fiber_sigma2(3, 6.0), 6.0).unwrap(),
            SignPrediction::Indeterminate
        );
        assert_eq!(
            submersion_sigma2_predicate(5, 2, 0.0, 0.0).unwrap(),
            SignPrediction::Indeterminate
        );
        assert!(submersion_sigma2_predicate(5, 5, 1.0, 1.0).is_err());
    }

    #[test]
    fn einstein_fiber_sigma2_examples() {
        assert!(close(einstein_fiber_sigma2(4, 12.0), 1.5, 1e-15));
        assert_eq!(einstein_fiber_sigma2(6, 0.0), 0.0);
        assert!(close(einstein_fiber_sigma2(3, -6.0), 0.75, 1e-15));
        let s3 = space_form(3, -1.0).unwrap();
        assert!(close(
            sigma_k(&schouten(&s3).unwrap(), 2).unwrap(),
            0.75,
            1e-13
        ));
    }

    #[test]
    fn leading_coefficient_examples() {
        let s = 1.7;
        assert!(close(leading_coefficient(9, 4, s), s * s / 32.0, 1e-15));
        assert!(close(leading_coefficient(5, 3, s), -s * s / 48.0, 1e-15));
        assert_eq!(leading_coefficient(7, 5, 0.0), 0.0);
    }

    #[test]
    fn predicate_agrees_with_leading_coefficient_sign() {
        for n in 4..=12 {
            for p in 2..n {
                let pred =
                    submersion_sigma2_predicate(n, p, einstein_fiber_sigma2(p, 3.0), 3.0).unwrap();
                let c = (n * p + 4) as i64 - 4 * n as i64;
                let expected = match c.signum() {
                    1 => SignPrediction::Positive,
                    -1 => SignPrediction::Negative,
                    _ => SignPrediction::Indeterminate,
                };
                assert_eq!(pred, expected, "n={n} p={p}");
            }
        }
    }

    #[test]
    fn sign_table_examples() {
        let radii = [0.01, 0.05, 0.1];
        let at = |t: &SignTable, r: f64| *t.rows.iter().find(|row| row.r == r).unwrap();
        let t = product_sign_table(3, 4, BaseKind::UnitSphere, &radii).unwrap();
        assert!(at(&t, 0.1).scal > 0.0 && at(&t, 0.1).sigma2 < 0.0);
        assert!(close(at(&t, 0.1).sigma2, -215.88, 1e-10));
        let t = product_sign_table(3, 4, BaseKind::Flat, &radii).unwrap();
        assert!(close(at(&t, 0.1).sigma2, -300.0, 1e-10));
        let t = product_sign_table(4, 4, BaseKind::UnitSphere, &radii).unwrap();
        assert!(at(&t, 0.1).scal > 0.0 && at(&t, 0.1).sigma2 > 0.0);
        let t = product_sign_table(4, 4, BaseKind::Flat, &radii).unwrap();
        assert!(close(at(&t, 0.1).sigma2, 5000.0 / 7.0, 1e-10));
        let t = product_sign_table(2, 1, BaseKind::Flat, &radii).unwrap();
        assert!(close(at(&t, 0.1).sigma2, -2500.0, 1e-10));
        assert_eq!(t.predicted_sigma2, SignPrediction::Negative);
        assert_eq!(t.largest_consistent_r, Some(0.1));
    }

    #[test]
    fn sign_table_threshold_stops_at_first_mismatch() {
        let t = product_sign_table(4, 4, BaseKind::UnitSphere, &[0.1, 0.5, 2.0, 3.0]).unwrap();
        assert_eq!(t.predicted_sigma2, SignPrediction::Positive);
        let first_bad = t.rows.iter().position(|row| row.sigma2 <= 0.0);
        match first_bad {
            Some(0) => assert_eq!(t.largest_consistent_r, None),
            Some(i) => assert_eq!(t.largest_consistent_r, Some(t.rows[i - 1].r)),
            None => assert_eq!(t.largest_consistent_r, Some(3.0)),
        }
    }

    #[test]
    fn portfolio_examples() {
        let r = product(&sphere(3, 0.1).unwrap(), &sphere(4, 1.0).unwrap()).unwrap();
        let s = sign_portfolio(&r, 10_000, 5).unwrap();
        assert!(s.min_sectional >= -1e-12);
        assert!(s.ricci_min > 0.0 && s.einstein_min > 0.0 && s.h4 > 0.0);
        assert!(close(s.sigma2, -215.88, 1e-10));

        let s = sign_portfolio(&sphere(5, 1.0).unwrap(), 10_000, 5).unwrap();
        assert!(close(s.min_sectional, 1.0, 1e-10));
        assert!(s.ricci_min > 0.0 && s.einstein_min > 0.0 && s.h4 > 0.0 && s.sigma2 > 0.0);

        let s = sign_portfolio(&flat(4).unwrap(), 10_000, 5).unwrap();
        assert_eq!(
            (s.min_sectional, s.ricci_min, s.einstein_min, s.h4, s.sigma2),
            (0.0, 0.0, 0.0, 0.0, 0.0)
        );
    }
}
