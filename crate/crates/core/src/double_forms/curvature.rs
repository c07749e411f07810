use std::ops::{Add, Mul, Neg, Sub};

use super::basis::basis;
use super::form::{check_dim, DoubleForm};
use super::symmetric::SymmetricForm;
use crate::error::{Error, Result};

/// A `(2,2)` double form with pair symmetry and the first Bianchi identity,
/// i.e. an algebraic curvature tensor on ℝⁿ. `R(x,y,z,t)` pairs `x∧y` with
/// `z∧t`, so sectional curvatures are `R(x,y,x,y)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureStructure(DoubleForm);

impl CurvatureStructure {
    pub fn zeros(n: usize) -> Result<Self> {
        Ok(Self(DoubleForm::zeros(n, 2, 2)?))
    }

    /// Validates pair symmetry and first Bianchi to the absolute tolerance `tol`.
    pub fn from_double_form(form: DoubleForm, tol: f64) -> Result<Self> {
        let (p, q) = form.bidegree();
        if (p, q) != (2, 2) {
            return Err(Error::InvalidBidegree {
                p,
                q,
                op: "curvature structure",
            });
        }
        let candidate = Self(form);
        let pair = candidate.pair_symmetry_residual();
        if pair > tol {
            return Err(Error::NotCurvatureStructure(format!(
                "pair symmetry residual {pair:e} exceeds {tol:e}"
            )));
        }
        let bianchi = candidate.bianchi_residual();
        if bianchi > tol {
            return Err(Error::NotCurvatureStructure(format!(
                "first Bianchi residual {bianchi:e} exceeds {tol:e}"
            )));
        }
        Ok(candidate)
    }

    pub(crate) fn from_double_form_unchecked(form: DoubleForm) -> Self {
        debug_assert_eq!(form.bidegree(), (2, 2));
        Self(form)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn as_double_form(&self) -> &DoubleForm {
        &self.0
    }

    pub fn into_double_form(self) -> DoubleForm {
        self.0
    }

    /// `R(x,y,z,t)` on basis vectors.
    pub fn component(&self, x: usize, y: usize, z: usize, t: usize) -> f64 {
        self.0.get(&[x, y], &[z, t])
    }

    /// Largest `|R(I,J) − R(J,I)|`.
    pub fn pair_symmetry_residual(&self) -> f64 {
        let b = basis(self.dim());
        let pairs = b.subsets(2);
        let mut worst: f64 = 0.0;
        for (a, &i) in pairs.iter().enumerate() {
            for &j in &pairs[a + 1..] {
                worst = worst.max((self.0.at_masks(i, j) - self.0.at_masks(j, i)).abs());
            }
        }
        worst
    }

    /// Largest cyclic sum `|R(x,y,z,t) + R(y,z,x,t) + R(z,x,y,t)|` over basis tuples.
    pub fn bianchi_residual(&self) -> f64 {
        let n = self.dim();
        let mut worst: f64 = 0.0;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for t in 0..n {
                        let s = self.component(x, y, z, t)
                            + self.component(y, z, x, t)
                            + self.component(z, x, y, t);
                        worst = worst.max(s.abs());
                    }
                }
            }
        }
        worst
    }

    /// `‖R‖² = Σ_{i<j, k<l} R_{ijkl}²`.
    pub fn norm_sq(&self) -> f64 {
        self.0.norm_sq()
    }

    pub fn inner_product(&self, other: &Self) -> Result<f64> {
        self.0.inner_product(&other.0)
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.0.max_abs_diff(&other.0)
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self(self.0.scale(factor))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        Ok(Self(self.0.checked_add(&other.0)?))
    }

    /// `(1−t)·self + t·other`.
    pub fn lerp(&self, other: &Self, t: f64) -> Result<Self> {
        self.scale(1.0 - t).checked_add(&other.scale(t))
    }

    /// `R(x∧y, x∧y)` for arbitrary vectors.
    pub fn bivector_value(&self, x: &[f64], y: &[f64]) -> f64 {
        let n = self.dim();
        assert!(x.len() == n && y.len() == n, "vector length must equal n");
        let pairs = basis(n).subsets(2);
        let wedge: Vec<f64> = pairs
            .iter()
            .map(|&m| {
                let i = m.trailing_zeros() as usize;
                let j = (m & (m - 1)).trailing_zeros() as usize;
                x[i] * y[j] - x[j] * y[i]
            })
            .collect();
        let mut acc = 0.0;
        for (a, &i) in pairs.iter().enumerate() {
            if wedge[a] == 0.0 {
                continue;
            }
            for (b, &j) in pairs.iter().enumerate() {
                acc += wedge[a] * wedge[b] * self.0.at_masks(i, j);
            }
        }
        acc
    }

    /// Sectional curvature of the plane spanned by `x, y`; `None` if degenerate.
    pub fn sectional(&self, x: &[f64], y: &[f64]) -> Option<f64> {
        let dot = |u: &[f64], v: &[f64]| u.iter().zip(v).map(|(a, b)| a * b).sum::<f64>();
        let area = dot(x, x) * dot(y, y) - dot(x, y).powi(2);
        (area > 1e-14).then(|| self.bivector_value(x, y) / area)
    }
}

/// Kulkarni–Nomizu product
/// `(ab)(x,y,z,t) = a(x,z)b(y,t) + a(y,t)b(x,z) − a(x,t)b(y,z) − a(y,z)b(x,t)`.
pub fn kulkarni_nomizu(a: &SymmetricForm, b: &SymmetricForm) -> Result<CurvatureStructure> {
    a.check_dim_matches(b)?;
    let form = DoubleForm::from_fn(a.dim(), 2, 2, |first, second| {
        let (x, y, z, t) = (first[0], first[1], second[0], second[1]);
        a.get(x, z) * b.get(y, t) + a.get(y, t) * b.get(x, z)
            - a.get(x, t) * b.get(y, z)
            - a.get(y, z) * b.get(x, t)
    })?;
    Ok(CurvatureStructure(form))
}

/// Orthogonal projection of a raw row-major `n⁴` array onto algebraic
/// curvature tensors: block antisymmetry, pair symmetry, then removal of the
/// totally antisymmetric part.
pub fn bianchi_project(n: usize, raw: &[f64]) -> Result<CurvatureStructure> {
    check_dim(n)?;
    if raw.len() != n.pow(4) {
        return Err(Error::InvalidParameter(format!(
            "raw array has {} entries, expected {}",
            raw.len(),
            n.pow(4)
        )));
    }
    let t = |i: usize, j: usize, k: usize, l: usize| raw[((i * n + j) * n + k) * n + l];
    let sym = DoubleForm::from_fn(n, 2, 2, |a, b| {
        let (i, j, k, l) = (a[0], a[1], b[0], b[1]);
        (t(i, j, k, l) - t(j, i, k, l) - t(i, j, l, k) + t(j, i, l, k) + t(k, l, i, j)
            - t(l, k, i, j)
            - t(k, l, j, i)
            + t(l, k, j, i))
            / 8.0
    })?;
    Ok(remove_cyclic_part(&sym))
}

/// Removes the totally antisymmetric part of a pair-symmetric `(2,2)` form.
pub(crate) fn remove_cyclic_part(sym: &DoubleForm) -> CurvatureStructure {
    let n = sym.dim();
    let b = basis(n);
    let pairs = b.subsets(2).len();
    // rank and orientation sign of the pair (a, b), sign 0 when a == b
    let mut pair = vec![(0usize, 0.0f64); n * n];
    for x in 0..n {
        for y in 0..n {
            if x != y {
                let rank = b.rank((1u16 << x) | (1u16 << y));
                pair[x * n + y] = (rank, if x < y { 1.0 } else { -1.0 });
            }
        }
    }
    let coeffs = sym.coeffs();
    let s = |a: usize, b: usize, c: usize, d: usize| {
        let ((r1, s1), (r2, s2)) = (pair[a * n + b], pair[c * n + d]);
        s1 * s2 * coeffs[r1 * pairs + r2]
    };
    let projected = DoubleForm::from_fn(n, 2, 2, |a, b| {
        let (x, y, z, w) = (a[0], a[1], b[0], b[1]);
        let cyclic = s(x, y, z, w) + s(y, z, x, w) + s(z, x, y, w);
        s(x, y, z, w) - cyclic / 3.0
    })
    .expect("dimension already validated");
    CurvatureStructure(projected)
}

impl Add for &CurvatureStructure {
    type Output = CurvatureStructure;

    /// # Panics
    ///
    /// Panics on dimension mismatch.
    fn add(self, rhs: Self) -> CurvatureStructure {
        CurvatureStructure(&self.0 + &rhs.0)
    }
}

impl Sub for &CurvatureStructure {
    type Output = CurvatureStructure;

    fn sub(self, rhs: Self) -> CurvatureStructure {
        CurvatureStructure(&self.0 - &rhs.0)
    }
}

impl Mul<f64> for &CurvatureStructure {
    type Output = CurvatureStructure;

    fn mul(self, rhs: f64) -> CurvatureStructure {
        self.scale(rhs)
    }
}

impl Neg for &CurvatureStructure {
    type Output = CurvatureStructure;

    fn neg(self) -> CurvatureStructure {
        self.scale(-1.0)
    }
}
