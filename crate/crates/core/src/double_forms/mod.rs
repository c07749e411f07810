//! Dense exterior algebra of double forms on ℝⁿ (n ≤ 12).
//!
//! Conventions: the wedge is the determinant convention (no factorial
//! weights), so `g^k` takes the value `k!` on each diagonal slot `(I, I)`,
//! the Kulkarni–Nomizu product of two symmetric forms equals their exterior
//! product, and the unit sphere has curvature `½ g²`. Inner products sum over
//! strictly increasing multi-indices.

mod basis;
mod curvature;
mod form;
mod symmetric;

pub use basis::{binomial, factorial, MAX_DIM};
pub(crate) use curvature::remove_cyclic_part;
pub use curvature::{bianchi_project, kulkarni_nomizu, CurvatureStructure};
pub use form::{g_power, DoubleForm};
pub use symmetric::SymmetricForm;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use nalgebra::DMatrix;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_symmetric(n: usize, rng: &mut ChaCha8Rng) -> SymmetricForm {
        let m = DMatrix::from_fn(n, n, |_, _| rng.random_range(-1.0..1.0));
        SymmetricForm::new((&m + m.transpose()) * 0.5).unwrap()
    }

    fn random_raw(n: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
        (0..n.pow(4)).map(|_| rng.random_range(-1.0..1.0)).collect()
    }

    #[test]
    fn metric_square_is_two_on_diagonal_slots() {
        let g = SymmetricForm::metric(5).unwrap();
        let gg = kulkarni_nomizu(&g, &g).unwrap();
        for (i, j, v) in gg.as_double_form().entries() {
            assert_eq!(v, if i == j { 2.0 } else { 0.0 });
        }
    }

    #[test]
    fn half_metric_square_is_unit_sphere() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g = SymmetricForm::metric(4).unwrap();
        let r = kulkarni_nomizu(&g, &(&g * 0.5)).unwrap();
        for _ in 0..200 {
            let x: Vec<f64> = (0..4).map(|_| rng.random_range(-1.0..1.0)).collect();
            let y: Vec<f64> = (0..4).map(|_| rng.random_range(-1.0..1.0)).collect();
            let k = r.sectional(&x, &y).unwrap();
            assert!((k - 1.0).abs() < 1e-12, "sectional {k}");
        }
    }

    #[test]
    fn kulkarni_nomizu_satisfies_bianchi() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for n in 2..=7 {
            let a = random_symmetric(n, &mut rng);
            let b = random_symmetric(n, &mut rng);
            let r = kulkarni_nomizu(&a, &b).unwrap();
            assert!(r.bianchi_residual() < 1e-12);
            assert!(r.pair_symmetry_residual() < 1e-12);
        }
    }

    #[test]
    fn kulkarni_nomizu_dimension_mismatch() {
        let a = SymmetricForm::metric(3).unwrap();
        let b = SymmetricForm::metric(4).unwrap();
        assert!(matches!(
            kulkarni_nomizu(&a, &b),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn exterior_product_matches_kulkarni_nomizu() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random_symmetric(5, &mut rng);
        let b = random_symmetric(5, &mut rng);
        let kn = kulkarni_nomizu(&a, &b).unwrap();
        let wedge = a
            .to_double_form()
            .exterior_product(&b.to_double_form())
            .unwrap();
        assert!(kn.as_double_form().max_abs_diff(&wedge).unwrap() < 1e-14);
    }

    #[test]
    fn scalar_one_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let a = random_symmetric(4, &mut rng).to_double_form();
        let one = g_power(4, 0).unwrap();
        assert_eq!(one.exterior_product(&a).unwrap(), a);
        assert_eq!(a.exterior_product(&one).unwrap(), a);
    }

    #[test]
    fn square_of_diagonal_form() {
        let lambda = [1.0, -2.0, 0.5, 3.0];
        let a = SymmetricForm::diagonal(&lambda).unwrap().to_double_form();
        let a2 = a.exterior_product(&a).unwrap();
        for i in 0..4 {
            for j in i + 1..4 {
                assert!((a2.get(&[i, j], &[i, j]) - 2.0 * lambda[i] * lambda[j]).abs() < 1e-14);
            }
        }
        assert!((a2.get(&[0, 1], &[0, 2])).abs() < 1e-14);
    }

    #[test]
    fn exterior_product_is_associative_and_commutes_on_symmetric_forms() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g = SymmetricForm::metric(6).unwrap().to_double_form();
        let a = random_symmetric(6, &mut rng).to_double_form();
        let b = random_symmetric(6, &mut rng).to_double_form();
        let left = g
            .exterior_product(&g)
            .unwrap()
            .exterior_product(&a)
            .unwrap();
        let right = g
            .exterior_product(&g.exterior_product(&a).unwrap())
            .unwrap();
        assert!(left.max_abs_diff(&right).unwrap() < 1e-12);
        let ab = a.exterior_product(&b).unwrap();
        let ba = b.exterior_product(&a).unwrap();
        assert!(ab.max_abs_diff(&ba).unwrap() < 1e-12);
    }

    #[test]
    fn degree_overflow_is_rejected() {
        let g3 = g_power(4, 3).unwrap();
        assert!(matches!(
            g3.exterior_product(&g_power(4, 2).unwrap()),
            Err(Error::DegreeOverflow { .. })
        ));
        assert!(matches!(g_power(4, 5), Err(Error::DegreeOverflow { .. })));
    }

    #[test]
    fn contraction_examples() {
        let n = 5;
        let g = SymmetricForm::metric(n).unwrap().to_double_form();
        assert_eq!(g.contraction().unwrap().as_scalar(), Some(n as f64));

        let a = SymmetricForm::diagonal(&[1.0, 2.0, 3.0])
            .unwrap()
            .to_double_form();
        assert_eq!(a.contraction().unwrap().as_scalar(), Some(6.0));
        let a2 = a.power(2).unwrap();
        let e2 = a2.contract_times(2).unwrap().as_scalar().unwrap() / 4.0;
        assert!((e2 - 11.0).abs() < 1e-12);

        let cg2 = g_power(n, 2).unwrap().contraction().unwrap().scale(0.5);
        assert!(cg2.max_abs_diff(&g.scale((n - 1) as f64)).unwrap() < 1e-14);

        let scalar = DoubleForm::scalar(n, 1.0).unwrap();
        assert!(matches!(
            scalar.contraction(),
            Err(Error::InvalidBidegree { .. })
        ));
        let half = DoubleForm::zeros(n, 2, 0).unwrap();
        assert!(half.contraction().is_err());
    }

    #[test]
    fn hodge_star_examples() {
        for n in 1..=7 {
            let vol = g_power(n, n).unwrap().scale(1.0 / factorial(n));
            assert!((vol.hodge_star().as_scalar().unwrap() - 1.0).abs() < 1e-14);
            let one = DoubleForm::scalar(n, 1.0).unwrap();
            let top = one.hodge_star();
            assert_eq!(top.bidegree(), (n, n));
            assert_eq!(top.hodge_star().as_scalar(), Some(1.0));
        }
        let n = 3;
        let a = SymmetricForm::diagonal(&[1.0, 2.0, 3.0])
            .unwrap()
            .to_double_form();
        let w = g_power(n, 1)
            .unwrap()
            .exterior_product(&a.power(2).unwrap())
            .unwrap();
        let s2 = w.hodge_star().as_scalar().unwrap() / (factorial(1) * factorial(2));
        assert!((s2 - 11.0).abs() < 1e-12);
    }

    #[test]
    fn double_star_is_signed_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let n = 5;
        for (p, q) in [(1, 1), (2, 1), (2, 3), (0, 4)] {
            let w = DoubleForm::from_fn(n, p, q, |_, _| rng.random_range(-1.0..1.0)).unwrap();
            let back = w.hodge_star().hodge_star();
            let sign = if (p * (n - p) + q * (n - q)) % 2 == 0 {
                1.0
            } else {
                -1.0
            };
            assert!(back.max_abs_diff(&w.scale(sign)).unwrap() < 1e-14);
        }
    }

    #[test]
    fn inner_product_examples() {
        for n in 2..=8 {
            let g = SymmetricForm::metric(n).unwrap().to_double_form();
            assert_eq!(g.inner_product(&g).unwrap(), n as f64);
            let gg = g_power(n, 2).unwrap();
            assert_eq!(gg.norm_sq(), (2 * n * (n - 1)) as f64);
        }
        let sphere = g_power(4, 2).unwrap().scale(0.5);
        assert!((sphere.norm_sq() - 6.0).abs() < 1e-14);
        let g = g_power(4, 1).unwrap();
        assert!(matches!(
            g.inner_product(&g_power(4, 2).unwrap()),
            Err(Error::BidegreeMismatch { .. })
        ));
    }

    #[test]
    fn g_power_one_is_metric() {
        let g = SymmetricForm::metric(6).unwrap().to_double_form();
        assert_eq!(g_power(6, 1).unwrap(), g);
        assert_eq!(g_power(6, 0).unwrap().as_scalar(), Some(1.0));
        let g3 = g.power(3).unwrap();
        assert!(g3.max_abs_diff(&g_power(6, 3).unwrap()).unwrap() < 1e-12);
    }

    #[test]
    fn arbitrary_tuple_evaluation_applies_signs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a = random_symmetric(4, &mut rng);
        let b = random_symmetric(4, &mut rng);
        let r = kulkarni_nomizu(&a, &b).unwrap();
        let (x, y, z, t) = (2, 0, 3, 1);
        let direct = a.get(x, z) * b.get(y, t) + a.get(y, t) * b.get(x, z)
            - a.get(x, t) * b.get(y, z)
            - a.get(y, z) * b.get(x, t);
        assert!((r.component(x, y, z, t) - direct).abs() < 1e-14);
        assert_eq!(r.component(1, 1, 2, 3), 0.0);
    }

    #[test]
    fn projector_fixes_curvature_structures() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let n = 5;
        let a = random_symmetric(n, &mut rng);
        let b = random_symmetric(n, &mut rng);
        let r = kulkarni_nomizu(&a, &b).unwrap();
        let raw = expand(&r);
        let p = bianchi_project(n, &raw).unwrap();
        assert!(p.max_abs_diff(&r).unwrap() < 1e-12);
    }

    #[test]
    fn projector_is_idempotent() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for n in 2..=6 {
            let once = bianchi_project(n, &random_raw(n, &mut rng)).unwrap();
            assert!(once.bianchi_residual() < 1e-12);
            assert!(once.pair_symmetry_residual() < 1e-12);
            let twice = bianchi_project(n, &expand(&once)).unwrap();
            assert!(twice.max_abs_diff(&once).unwrap() < 1e-12);
        }
    }

    #[test]
    fn projector_rank_matches_curvature_space_dimension() {
        for n in [2usize, 3, 4] {
            let dim = n.pow(4);
            let mut columns = Vec::with_capacity(dim * dim);
            for e in 0..dim {
                let mut raw = vec![0.0; dim];
                raw[e] = 1.0;
                columns.extend(expand(&bianchi_project(n, &raw).unwrap()));
            }
            let m = DMatrix::from_column_slice(dim, dim, &columns);
            let rank = m.rank(1e-9);
            assert_eq!(rank, n * n * (n * n - 1) / 12, "n = {n}");
            assert!((&m * &m - &m).amax() < 1e-12);
            assert!((&m - m.transpose()).amax() < 1e-12);
        }
    }

    #[test]
    fn from_double_form_rejects_broken_symmetry() {
        let mut form = g_power(4, 2).unwrap();
        form = DoubleForm::from_fn(4, 2, 2, |i, j| {
            if i == [0, 1] && j == [2, 3] {
                1.0
            } else {
                form.get(i, j)
            }
        })
        .unwrap();
        assert!(CurvatureStructure::from_double_form(form, 1e-9).is_err());
        let ok = CurvatureStructure::from_double_form(g_power(4, 2).unwrap(), 1e-12);
        assert!(ok.is_ok());
    }

    fn expand(r: &CurvatureStructure) -> Vec<f64> {
        let n = r.dim();
        let mut out = Vec::with_capacity(n.pow(4));
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        out.push(r.component(i, j, k, l));
                    }
                }
            }
        }
        out
    }
}
