use num_bigint::BigInt;
use num_traits::Zero;

use super::linalg::IntMatrix;
use super::poly::{IntPolynomial, RatPoly};
use super::rational::BigRational;

/// Characteristic polynomial `det(xI - M)` by the Faddeev–LeVerrier
/// recursion over the rationals. Panics when `m` is not square.
pub fn char_poly(m: &IntMatrix) -> IntPolynomial {
    let a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect()
        })
        .collect();
    let coeffs = char_poly_coeffs(&a);
    IntPolynomial::new(
        coeffs
            .into_iter()
            .map(|c| {
                debug_assert!(c.is_integer());
                c.to_integer()
            })
            .collect(),
    )
}

/// Characteristic polynomial of a rational matrix.
pub(crate) fn char_poly_rational(m: &[Vec<BigRational>]) -> RatPoly {
    RatPoly::new(char_poly_coeffs(m))
}

fn char_poly_coeffs(a: &[Vec<BigRational>]) -> Vec<BigRational> {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n), "matrix must be square");
    // coeffs[k] multiplies x^k
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::from_integer(BigInt::from(1));
    let mut mk = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = matmul(a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        mk = next;
        let am = matmul(a, &mk);
        let trace: BigRational = (0..n).map(|i| am[i][i].clone()).sum();
        coeffs[n - k] = -trace / BigRational::from_integer(BigInt::from(k));
    }
    coeffs
}

fn matmul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut out = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_matrix() {
        assert_eq!(
            char_poly(&vec![vec![0, 1], vec![1, 1]]),
            IntPolynomial::from_i64(&[-1, -1, 1])
        );
    }

    #[test]
    fn identity_and_zero() {
        let id = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(char_poly(&id), IntPolynomial::from_i64(&[-1, 1]).pow(3));
        assert_eq!(char_poly(&vec![vec![0]]), IntPolynomial::from_i64(&[0, 1]));
    }
}
