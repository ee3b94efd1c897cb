use num_traits::{One, Zero};

use super::poly::RatPoly;
use super::rational::BigRational;

/// Square or rectangular integer matrix, row-major.
pub type IntMatrix = Vec<Vec<i64>>;

/// Solves `A x = b` over the rationals, returning one solution when the
/// system is consistent. `A` is given row-major.
pub fn solve_rational(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=cols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    Some(x)
}

/// Arithmetic in `Q[y]/(p(y))` for an irreducible `p`: a simple algebraic
/// extension used to solve eigenvector equations exactly.
#[derive(Clone, Debug)]
pub(crate) struct SimpleExtension {
    modulus: RatPoly,
}

impl SimpleExtension {
    pub fn new(modulus: RatPoly) -> Self {
        SimpleExtension {
            modulus: modulus.monic(),
        }
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }

    pub fn reduce(&self, a: &RatPoly) -> RatPoly {
        a.rem(&self.modulus)
    }

    pub fn generator(&self) -> RatPoly {
        self.reduce(&RatPoly::x())
    }

    pub fn mul(&self, a: &RatPoly, b: &RatPoly) -> RatPoly {
        self.reduce(&a.mul(b))
    }

    pub fn inverse(&self, a: &RatPoly) -> Option<RatPoly> {
        if a.is_zero() {
            return None;
        }
        let (g, s, _) = a.gcdext(&self.modulus);
        (g.degree() == Some(0)).then(|| self.reduce(&s))
    }

    /// Matrix of multiplication by `a` on the power basis (columns = images).
    pub fn mul_matrix(&self, a: &RatPoly) -> Vec<Vec<BigRational>> {
        let d = self.degree();
        let mut out = vec![vec![BigRational::zero(); d]; d];
        let mut basis = RatPoly::one();
        for j in 0..d {
            let img = self.mul(a, &basis);
            for (i, row) in out.iter_mut().enumerate() {
                row[j] = img.coeff(i);
            }
            basis = self.mul(&basis, &RatPoly::x());
        }
        out
    }

    /// Solves the homogeneous system `A v = 0` (entries in the extension)
    /// with the normalization `v[fixed] = 1`.
    pub fn kernel_vector(&self, a: &[Vec<RatPoly>], fixed: usize) -> Option<Vec<RatPoly>> {
        let n = a.first().map_or(0, |r| r.len());
        // move column `fixed` to the right-hand side
        let mut m: Vec<Vec<RatPoly>> = a
            .iter()
            .map(|row| {
                let mut r: Vec<RatPoly> = (0..n)
                    .filter(|&j| j != fixed)
                    .map(|j| row[j].clone())
                    .collect();
                r.push(row[fixed].scale(&-BigRational::one()));
                r
            })
            .collect();
        let cols = n - 1;
        let rows = m.len();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = self.inverse(&m[r][c])?;
            for v in m[r].iter_mut() {
                *v = self.mul(v, &inv);
            }
            for i in 0..rows {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in c..=cols {
                        let t = self.mul(&f, &m[r][j]);
                        m[i][j] = m[i][j].sub(&t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
        if pivots.len() != cols || m[r..].iter().any(|row| !row[cols].is_zero()) {
            return None;
        }
        let mut x = vec![RatPoly::zero(); cols];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = m[i][cols].clone();
        }
        let mut out = Vec::with_capacity(n);
        let mut it = x.into_iter();
        for j in 0..n {
            if j == fixed {
                out.push(RatPoly::one());
            } else {
                out.push(it.next().unwrap());
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numberfield::{rat, IntPolynomial};

    #[test]
    fn solves_consistent_system() {
        let a = vec![vec![rat(1, 1), rat(2, 1)], vec![rat(3, 1), rat(4, 1)]];
        let x = solve_rational(&a, &[rat(5, 1), rat(6, 1)]).unwrap();
        assert_eq!(x, vec![rat(-4, 1), rat(9, 2)]);
        let singular = vec![vec![rat(1, 1), rat(1, 1)], vec![rat(1, 1), rat(1, 1)]];
        assert!(solve_rational(&singular, &[rat(1, 1), rat(2, 1)]).is_none());
    }

    #[test]
    fn inverse_in_golden_field() {
        let k = SimpleExtension::new(IntPolynomial::from_i64(&[-1, -1, 1]).to_rat());
        let phi = k.generator();
        let inv = k.inverse(&phi).unwrap();
        // 1/φ = φ - 1
        assert_eq!(inv, phi.sub(&RatPoly::one()));
    }
}
