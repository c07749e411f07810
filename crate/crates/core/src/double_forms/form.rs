use std::ops::{Add, Mul, Neg, Sub};

use super::basis::{
    basis, binomial, factorial, mask_indices, mask_with_sign, merge_sign, splittings, MAX_DIM,
};
use crate::error::{Error, Result};

/// A `(p,q)` double form on ℝⁿ: multilinear, antisymmetric in each of its two
/// argument blocks. Stored densely over pairs `(I, J)` of strictly increasing
/// multi-indices with `|I| = p`, `|J| = q`, row-major in `I`.
#[derive(Debug, Clone, PartialEq)]
pub struct DoubleForm {
    n: usize,
    p: usize,
    q: usize,
    coeffs: Vec<f64>,
}

pub(crate) fn check_dim(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DIM {
        return Err(Error::UnsupportedDimension { n, max: MAX_DIM });
    }
    Ok(())
}

impl DoubleForm {
    /// Degrees above `n` give the zero-dimensional space of forms.
    pub fn zeros(n: usize, p: usize, q: usize) -> Result<Self> {
        check_dim(n)?;
        Ok(Self {
            n,
            p,
            q,
            coeffs: vec![0.0; binomial(n, p) * binomial(n, q)],
        })
    }

    /// The `(0,0)` form with the given value.
    pub fn scalar(n: usize, value: f64) -> Result<Self> {
        let mut out = Self::zeros(n, 0, 0)?;
        out.coeffs[0] = value;
        Ok(out)
    }

    /// Builds a form from its values on increasing index pairs.
    pub fn from_fn(
        n: usize,
        p: usize,
        q: usize,
        mut f: impl FnMut(&[usize], &[usize]) -> f64,
    ) -> Result<Self> {
        let mut out = Self::zeros(n, p, q)?;
        let b = basis(n);
        let cols = b.subsets(q).len();
        let seconds: Vec<Vec<usize>> = b.subsets(q).iter().map(|&j| mask_indices(j)).collect();
        for (r, &i) in b.subsets(p).iter().enumerate() {
            let first = mask_indices(i);
            for (c, second) in seconds.iter().enumerate() {
                out.coeffs[r * cols + c] = f(&first, second);
            }
        }
        Ok(out)
    }

    pub(crate) fn from_coeffs(n: usize, p: usize, q: usize, coeffs: Vec<f64>) -> Self {
        debug_assert_eq!(coeffs.len(), binomial(n, p) * binomial(n, q));
        Self { n, p, q, coeffs }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn bidegree(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    /// Coefficients over increasing index pairs, row-major in the first block.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    #[inline]
    fn cols(&self) -> usize {
        basis(self.n).subsets(self.q).len()
    }

    #[inline]
    pub(crate) fn at_masks(&self, first: u16, second: u16) -> f64 {
        let b = basis(self.n);
        self.coeffs[b.rank(first) * self.cols() + b.rank(second)]
    }

    /// Evaluates on arbitrary basis index tuples, applying permutation signs.
    /// Repeated indices within a block give zero.
    ///
    /// # Panics
    ///
    /// Panics if a tuple length differs from the bidegree or an index is `≥ n`.
    pub fn get(&self, first: &[usize], second: &[usize]) -> f64 {
        assert_eq!(first.len(), self.p, "first block has wrong length");
        assert_eq!(second.len(), self.q, "second block has wrong length");
        assert!(
            first.iter().chain(second).all(|&i| i < self.n),
            "index out of range"
        );
        match (mask_with_sign(first), mask_with_sign(second)) {
            (Some((i, s1)), Some((j, s2))) => s1 * s2 * self.at_masks(i, j),
            _ => 0.0,
        }
    }

    /// Value of a `(0,0)` form.
    pub fn as_scalar(&self) -> Option<f64> {
        (self.p == 0 && self.q == 0).then(|| self.coeffs[0])
    }

    /// Iterates over `(I, J, value)` for all increasing index pairs.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, Vec<usize>, f64)> + '_ {
        let b = basis(self.n);
        let cols = self.cols();
        self.coeffs.iter().enumerate().map(move |(idx, &v)| {
            let i = b.subsets(self.p)[idx / cols];
            let j = b.subsets(self.q)[idx % cols];
            (mask_indices(i), mask_indices(j), v)
        })
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|v| v * factor).collect(),
            ..*self
        }
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        if self.bidegree() != other.bidegree() {
            return Err(Error::BidegreeMismatch {
                p1: self.p,
                q1: self.q,
                p2: other.p,
                q2: other.q,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self::from_coeffs(self.n, self.p, self.q, coeffs))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.scale(-1.0))
    }

    /// Largest absolute coefficient difference.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_same_shape(other)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .fold(0.0, |m, (a, b)| f64::max(m, (a - b).abs())))
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, v| f64::max(m, v.abs()))
    }

    /// `⟨ω, θ⟩ = Σ ω(I,J) θ(I,J)` over increasing multi-indices.
    pub fn inner_product(&self, other: &Self) -> Result<f64> {
        self.check_same_shape(other)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a * b)
            .sum())
    }

    pub fn norm_sq(&self) -> f64 {
        self.coeffs.iter().map(|v| v * v).sum()
    }

    /// Exterior product of double forms, taken independently in each block:
    /// `(ω·θ)(K, L) = Σ ε(I,I')ε(J,J') ω(I,J) θ(I',J')` over splittings
    /// `K = I ⊔ I'`, `L = J ⊔ J'`.
    pub fn exterior_product(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let n = self.n;
        let (p, q) = (self.p + other.p, self.q + other.q);
        if p > n || q > n {
            return Err(Error::DegreeOverflow { p, q, n });
        }
        let b = basis(n);
        let (self_cols, other_cols) = (self.cols(), other.cols());
        let ranked = |total: usize, part: usize| -> Vec<Vec<(usize, usize, f64)>> {
            b.subsets(total)
                .iter()
                .map(|&mask| {
                    splittings(mask, part)
                        .into_iter()
                        .map(|(sub, rest, sign)| (b.rank(sub), b.rank(rest), sign))
                        .collect()
                })
                .collect()
        };
        let row_splits = ranked(p, self.p);
        let col_splits = ranked(q, self.q);
        let mut coeffs = Vec::with_capacity(row_splits.len() * col_splits.len());
        for rows in &row_splits {
            for cols in &col_splits {
                let mut acc = 0.0;
                for &(i, i2, si) in rows {
                    let a_row = &self.coeffs[i * self_cols..(i + 1) * self_cols];
                    let b_row = &other.coeffs[i2 * other_cols..(i2 + 1) * other_cols];
                    let mut inner = 0.0;
                    for &(j, j2, sj) in cols {
                        let a = a_row[j];
                        if a != 0.0 {
                            inner += sj * a * b_row[j2];
                        }
                    }
                    acc += si * inner;
                }
                coeffs.push(acc);
            }
        }
        Ok(Self::from_coeffs(n, p, q, coeffs))
    }

    /// `k`-fold exterior power; the zeroth power is the scalar 1.
    pub fn power(&self, k: usize) -> Result<Self> {
        if k * self.p > self.n || k * self.q > self.n {
            return Err(Error::DegreeOverflow {
                p: k * self.p,
                q: k * self.q,
                n: self.n,
            });
        }
        let mut acc = Self::scalar(self.n, 1.0)?;
        for _ in 0..k {
            acc = acc.exterior_product(self)?;
        }
        Ok(acc)
    }

    /// Contraction `(cω)(x…; y…) = Σ_m ω(e_m, x…; e_m, y…)`.
    pub fn contraction(&self) -> Result<Self> {
        if self.p == 0 || self.q == 0 {
            return Err(Error::InvalidBidegree {
                p: self.p,
                q: self.q,
                op: "contraction",
            });
        }
        let n = self.n;
        Self::from_masks(n, self.p - 1, self.q - 1, |i, j| {
            let free = !(i | j) & ((1u16 << n) - 1);
            let mut acc = 0.0;
            let mut rest = free;
            while rest != 0 {
                let m = rest.trailing_zeros();
                let bit = 1u16 << m;
                let s1 = if (i & (bit - 1)).count_ones().is_multiple_of(2) {
                    1.0
                } else {
                    -1.0
                };
                let s2 = if (j & (bit - 1)).count_ones().is_multiple_of(2) {
                    1.0
                } else {
                    -1.0
                };
                acc += s1 * s2 * self.at_masks(i | bit, j | bit);
                rest &= rest - 1;
            }
            acc
        })
    }

    /// `k`-fold contraction.
    pub fn contract_times(&self, k: usize) -> Result<Self> {
        (0..k).try_fold(self.clone(), |acc, _| acc.contraction())
    }

    /// Hodge star on both blocks: `(∗ω)(I,J) = ε(Iᶜ,I) ε(Jᶜ,J) ω(Iᶜ,Jᶜ)`.
    pub fn hodge_star(&self) -> Self {
        let n = self.n;
        if self.p > n || self.q > n {
            return self.clone();
        }
        let full = ((1u32 << n) - 1) as u16;
        Self::from_masks(n, n - self.p, n - self.q, |i, j| {
            let (ic, jc) = (full & !i, full & !j);
            merge_sign(ic, i) * merge_sign(jc, j) * self.at_masks(ic, jc)
        })
        .expect("complementary bidegree is always valid")
    }

    fn from_masks(
        n: usize,
        p: usize,
        q: usize,
        mut f: impl FnMut(u16, u16) -> f64,
    ) -> Result<Self> {
        let mut out = Self::zeros(n, p, q)?;
        let b = basis(n);
        let mut idx = 0;
        for &i in b.subsets(p) {
            for &j in b.subsets(q) {
                out.coeffs[idx] = f(i, j);
                idx += 1;
            }
        }
        Ok(out)
    }
}

/// `g^k`, the `k`-th exterior power of the metric: `k!` on every diagonal
/// slot `(I, I)` and zero elsewhere.
pub fn g_power(n: usize, k: usize) -> Result<DoubleForm> {
    check_dim(n)?;
    if k > n {
        return Err(Error::DegreeOverflow { p: k, q: k, n });
    }
    let value = factorial(k);
    DoubleForm::from_masks(n, k, k, |i, j| if i == j { value } else { 0.0 })
}

impl Add for &DoubleForm {
    type Output = DoubleForm;

    /// # Panics
    ///
    /// Panics on shape mismatch; use [`DoubleForm::checked_add`] otherwise.
    fn add(self, rhs: Self) -> DoubleForm {
        self.checked_add(rhs).expect("double form shape mismatch")
    }
}

impl Sub for &DoubleForm {
    type Output = DoubleForm;

    fn sub(self, rhs: Self) -> DoubleForm {
        self.checked_sub(rhs).expect("double form shape mismatch")
    }
}

impl Mul<f64> for &DoubleForm {
    type Output = DoubleForm;

    fn mul(self, rhs: f64) -> DoubleForm {
        self.scale(rhs)
    }
}

impl Neg for &DoubleForm {
    type Output = DoubleForm;

    fn neg(self) -> DoubleForm {
        self.scale(-1.0)
    }
}
