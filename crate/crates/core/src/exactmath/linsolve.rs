use super::matrix::Matrix;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Affine solution set `particular + span(kernel)` of `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSpace {
    pub particular: Vec<Scalar>,
    pub kernel: Vec<Vec<Scalar>>,
}

impl SolutionSpace {
    /// `particular + sum_i coeffs[i] * kernel[i]`.
    pub fn combine(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        let mut x = self.particular.clone();
        for (c, k) in coeffs.iter().zip(&self.kernel) {
            for (xi, ki) in x.iter_mut().zip(k) {
                *xi = &*xi + &(c * ki);
            }
        }
        x
    }
}

/// Solves `A x = b` for a single right-hand column `b`.
///
/// Elimination pivots on the leftmost nonzero column, the particular solution
/// sets every free variable to zero, and kernel vector `i` sets the `i`-th
/// free variable to one and the others to zero.
pub fn solve_linear(a: &Matrix, b: &Matrix) -> Result<SolutionSpace> {
    if b.cols() != 1 || b.rows() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "system {}x{} with right-hand side {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let field = a.field().clone();
    let n = a.cols();
    let mut aug = Matrix::zeros(&field, a.rows(), n + 1);
    for i in 0..a.rows() {
        for j in 0..n {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, n, b.get(i, 0).clone());
    }
    let (red, pivots) = aug.rref();
    if pivots.last() == Some(&n) {
        return Err(Error::Inconsistent);
    }
    let mut particular = vec![Scalar::zero(&field); n];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = red.get(r, n).clone();
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let kernel = free
        .iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(&field); n];
            v[f] = Scalar::one(&field);
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -red.get(r, f);
            }
            v
        })
        .collect();
    Ok(SolutionSpace { particular, kernel })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::FieldDesc;

    #[test]
    fn identity_system() {
        let f = FieldDesc::Rationals;
        let a = Matrix::identity(&f, 3);
        let b = Matrix::from_i64(&f, &[&[4], &[-1], &[7]]);
        let s = solve_linear(&a, &b).unwrap();
        assert_eq!(s.particular, b.transpose().row(0).to_vec());
        assert!(s.kernel.is_empty());
    }

    #[test]
    fn underdetermined_single_equation() {
        let f = FieldDesc::Rationals;
        let a = Matrix::from_i64(&f, &[&[1, 1]]);
        let b = Matrix::from_i64(&f, &[&[1]]);
        let s = solve_linear(&a, &b).unwrap();
        let int = |x| Scalar::from_int(&f, x);
        assert_eq!(s.particular, vec![int(1), int(0)]);
        assert_eq!(s.kernel, vec![vec![int(-1), int(1)]]);
    }

    #[test]
    fn inconsistent_system() {
        let f = FieldDesc::Rationals;
        let a = Matrix::from_i64(&f, &[&[1, 1], &[2, 2]]);
        let b = Matrix::from_i64(&f, &[&[1], &[3]]);
        assert_eq!(solve_linear(&a, &b), Err(Error::Inconsistent));
    }
}
