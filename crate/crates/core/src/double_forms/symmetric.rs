use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::{DMatrix, SymmetricEigen};

use super::form::{check_dim, DoubleForm};
use crate::error::{Error, Result};

const SYMMETRY_TOL: f64 = 1e-12;

/// Symmetric bilinear form on ℝⁿ in an orthonormal frame.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricForm {
    matrix: DMatrix<f64>,
}

impl SymmetricForm {
    /// Accepts a square matrix that is symmetric up to `1e-12` relative
    /// asymmetry; the stored matrix is the exact symmetrization.
    pub fn new(matrix: DMatrix<f64>) -> Result<Self> {
        if matrix.nrows() != matrix.ncols() {
            return Err(Error::DimensionMismatch {
                left: matrix.nrows(),
                right: matrix.ncols(),
            });
        }
        check_dim(matrix.nrows())?;
        if matrix.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter("non-finite matrix entry".into()));
        }
        let asymmetry = (&matrix - matrix.transpose()).amax();
        if asymmetry > SYMMETRY_TOL * matrix.amax().max(1.0) {
            return Err(Error::NotSymmetric { asymmetry });
        }
        let matrix = (&matrix + matrix.transpose()) * 0.5;
        Ok(Self { matrix })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                left: n,
                right: bad.len(),
            });
        }
        Self::new(DMatrix::from_fn(n, n, |i, j| rows[i][j]))
    }

    /// The Euclidean metric `g`.
    pub fn metric(n: usize) -> Result<Self> {
        check_dim(n)?;
        Ok(Self {
            matrix: DMatrix::identity(n, n),
        })
    }

    pub fn zeros(n: usize) -> Result<Self> {
        check_dim(n)?;
        Ok(Self {
            matrix: DMatrix::zeros(n, n),
        })
    }

    pub fn diagonal(values: &[f64]) -> Result<Self> {
        check_dim(values.len())?;
        Ok(Self {
            matrix: DMatrix::from_diagonal(&nalgebra::DVector::from_column_slice(values)),
        })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.matrix[(i, j)]
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.matrix
            .row_iter()
            .map(|r| r.iter().copied().collect())
            .collect()
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace()
    }

    /// `Σ_{i,j} a(i,j)²`.
    pub fn norm_sq(&self) -> f64 {
        self.matrix.norm_squared()
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut values: Vec<f64> = SymmetricEigen::new(self.matrix.clone())
            .eigenvalues
            .iter()
            .copied()
            .collect();
        values.sort_by(f64::total_cmp);
        values
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues()[0]
    }

    /// `a − (tr a / n) g`.
    pub fn traceless_part(&self) -> Self {
        let n = self.dim();
        let shift = self.trace() / n as f64;
        Self {
            matrix: &self.matrix - DMatrix::identity(n, n) * shift,
        }
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            matrix: &self.matrix * factor,
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_dim_matches(other)?;
        Ok((&self.matrix - &other.matrix).amax())
    }

    pub(crate) fn check_dim_matches(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }

    /// The same form viewed as a `(1,1)` double form.
    pub fn to_double_form(&self) -> DoubleForm {
        DoubleForm::from_fn(self.dim(), 1, 1, |i, j| self.matrix[(i[0], j[0])])
            .expect("dimension already validated")
    }

    /// Reads a `(1,1)` double form back as a symmetric form.
    pub fn from_double_form(form: &DoubleForm) -> Result<Self> {
        let (p, q) = form.bidegree();
        if (p, q) != (1, 1) {
            return Err(Error::InvalidBidegree {
                p,
                q,
                op: "symmetric form",
            });
        }
        let n = form.dim();
        Self::new(DMatrix::from_fn(n, n, |i, j| form.get(&[i], &[j])))
    }
}

impl Add for &SymmetricForm {
    type Output = SymmetricForm;

    /// # Panics
    ///
    /// Panics on dimension mismatch.
    fn add(self, rhs: Self) -> SymmetricForm {
        SymmetricForm {
            matrix: &self.matrix + &rhs.matrix,
        }
    }
}

impl Sub for &SymmetricForm {
    type Output = SymmetricForm;

    fn sub(self, rhs: Self) -> SymmetricForm {
        SymmetricForm {
            matrix: &self.matrix - &rhs.matrix,
        }
    }
}

impl Mul<f64> for &SymmetricForm {
    type Output = SymmetricForm;

    fn mul(self, rhs: f64) -> SymmetricForm {
        self.scale(rhs)
    }
}

impl Neg for &SymmetricForm {
    type Output = SymmetricForm;

    fn neg(self) -> SymmetricForm {
        self.scale(-1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_asymmetric_input() {
        let err = SymmetricForm::from_rows(&[vec![1.0, 2.0], vec![0.0, 1.0]]).unwrap_err();
        assert!(matches!(err, Error::NotSymmetric { .. }));
    }

    #[test]
    fn norm_counts_both_off_diagonal_slots() {
        let a = SymmetricForm::from_rows(&[vec![1.0, 2.0], vec![2.0, 3.0]]).unwrap();
        assert_eq!(a.norm_sq(), 1.0 + 4.0 + 4.0 + 9.0);
        assert_eq!(a.to_double_form().norm_sq(), a.norm_sq());
    }

    #[test]
    fn traceless_part_has_zero_trace() {
        let a = SymmetricForm::diagonal(&[1.0, 2.0, 6.0]).unwrap();
        assert!(a.traceless_part().trace().abs() < 1e-15);
        assert_eq!(a.eigenvalues(), vec![1.0, 2.0, 6.0]);
    }
}
