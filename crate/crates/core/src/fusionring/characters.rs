use num_complex::Complex64;
use serde::Serialize;

use super::FusionRing;
use crate::numberfield::{char_poly, roots, IntMatrix};
use crate::{Error, Result};

/// An algebra homomorphism `K(R) ⊗ C → C`, as its values on the basis.
#[derive(Clone, Debug, Serialize)]
pub struct Character {
    pub values: Vec<Complex64>,
    /// Whether every value is real and strictly positive.
    pub frobenius_perron: bool,
}

/// Residual allowed when confirming a simultaneous eigenvector.
const EIGEN_TOL: f64 = 1e-9;

/// All characters of a commutative ring, normalized to take the value 1 on
/// the unit. They are read off as simultaneous eigenvectors of the matrices `[b_i]`
/// by diagonalizing a generic integer combination `Σ c_i [b_i]`.
///
/// Ordering: the Frobenius–Perron character first, the rest sorted by their
/// values (real part, then imaginary part, coordinate by coordinate).
pub fn characters(ring: &FusionRing) -> Result<Vec<Character>> {
    ring.ensure_valid()?;
    if let Some((i, j)) = ring.noncommuting_pair() {
        return Err(Error::NotCommutative(format!(
            "{} * {} != {} * {}",
            ring.label(i),
            ring.label(j),
            ring.label(j),
            ring.label(i)
        )));
    }
    let r = ring.rank();
    let mats: Vec<IntMatrix> = (0..r).map(|i| ring.mult_matrix(i)).collect::<Result<_>>()?;

    for attempt in 0..12u64 {
        let coeffs: Vec<i64> = (0..r as u64)
            .map(|i| (1 + (i * i * (2 * attempt + 7) + 3 * i + attempt) % 17) as i64)
            .collect();
        let mut a: IntMatrix = vec![vec![0; r]; r];
        for (c, m) in coeffs.iter().zip(&mats) {
            for (arow, mrow) in a.iter_mut().zip(m) {
                for (x, y) in arow.iter_mut().zip(mrow) {
                    *x += c * y;
                }
            }
        }
        let p = char_poly(&a);
        if p.squarefree_part().degree() != Some(r) {
            continue;
        }
        if let Some(chars) = eigen_characters(ring, &a, &mats, &p) {
            return Ok(chars);
        }
    }
    Err(Error::DegenerateSpectrum(format!(
        "no combination of basis matrices of {} has simple spectrum",
        ring.name()
    )))
}

fn eigen_characters(
    ring: &FusionRing,
    a: &IntMatrix,
    mats: &[IntMatrix],
    p: &crate::numberfield::IntPolynomial,
) -> Option<Vec<Character>> {
    let r = ring.rank();
    let u = ring.unit();
    let mut out = Vec::with_capacity(r);
    for mu in roots::complex_roots(p) {
        let v = eigenvector(a, mu.to_c64())?;
        if v[u].norm() < 1e-12 {
            return None;
        }
        let v: Vec<Complex64> = v.iter().map(|x| x / v[u]).collect();
        // v is an eigenvector of each [b_i] with eigenvalue v_i
        for (i, m) in mats.iter().enumerate() {
            for k in 0..r {
                let lhs: Complex64 = (0..r).map(|j| v[j] * m[k][j] as f64).sum();
                if (lhs - v[i] * v[k]).norm() > EIGEN_TOL * (1.0 + v[i].norm() * v[k].norm()) {
                    return None;
                }
            }
        }
        let fp = v.iter().all(|x| x.im.abs() < EIGEN_TOL && x.re > EIGEN_TOL);
        let values = v
            .into_iter()
            .map(|x| Complex64::new(clean(x.re), clean(x.im)))
            .collect();
        out.push(Character {
            values,
            frobenius_perron: fp,
        });
    }
    out.sort_by(|x, y| {
        y.frobenius_perron.cmp(&x.frobenius_perron).then_with(|| {
            x.values
                .iter()
                .zip(&y.values)
                .map(|(a, b)| {
                    a.re.partial_cmp(&b.re)
                        .unwrap()
                        .then(a.im.partial_cmp(&b.im).unwrap())
                })
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
    });
    Some(out)
}

/// Rounds away floating noise so sorting and display are stable.
fn clean(x: f64) -> f64 {
    let y = (x * 1e12).round() / 1e12;
    if y == 0.0 {
        0.0
    } else {
        y
    }
}

/// An eigenvector of `a` for the simple eigenvalue `mu`, by two steps of
/// inverse iteration.
fn eigenvector(a: &IntMatrix, mu: Complex64) -> Option<Vec<Complex64>> {
    let r = a.len();
    let shift = mu + Complex64::new(1e-10, 1e-10);
    let m: Vec<Vec<Complex64>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let d = if i == j {
                        shift
                    } else {
                        Complex64::new(0.0, 0.0)
                    };
                    Complex64::new(a[i][j] as f64, 0.0) - d
                })
                .collect()
        })
        .collect();
    let mut v: Vec<Complex64> = (0..r)
        .map(|i| Complex64::new(1.0 + 0.1 * i as f64, 0.05 * i as f64))
        .collect();
    for _ in 0..3 {
        v = solve_complex(&m, &v)?;
        let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if !(norm.is_finite() && norm > 0.0) {
            return None;
        }
        v.iter_mut().for_each(|x| *x /= norm);
    }
    Some(v)
}

/// Gaussian elimination with partial pivoting.
pub(crate) fn solve_complex(m: &[Vec<Complex64>], b: &[Complex64]) -> Option<Vec<Complex64>> {
    let r = m.len();
    let mut a: Vec<Vec<Complex64>> = m
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut row = row.clone();
            row.push(bi);
            row
        })
        .collect();
    for col in 0..r {
        let piv =
            (col..r).max_by(|&x, &y| a[x][col].norm().partial_cmp(&a[y][col].norm()).unwrap())?;
        if a[piv][col].norm() == 0.0 {
            return None;
        }
        a.swap(col, piv);
        for row in col + 1..r {
            let f = a[row][col] / a[col][col];
            for c in col..=r {
                let t = a[col][c];
                a[row][c] -= f * t;
            }
        }
    }
    let mut x = vec![Complex64::new(0.0, 0.0); r];
    for i in (0..r).rev() {
        let s: Complex64 = (i + 1..r).map(|j| a[i][j] * x[j]).sum();
        x[i] = (a[i][r] - s) / a[i][i];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ising() -> FusionRing {
        // order (1, eps, sigma)
        FusionRing::from_fn("ising", vec![], 0, vec![0, 1, 2], 3, |i, j, k| {
            let table = [
                [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
                [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
                [[0, 0, 1], [0, 0, 1], [1, 1, 0]],
            ];
            table[i][j][k]
        })
        .unwrap()
    }

    #[test]
    fn ising_characters() {
        let chars = characters(&ising()).unwrap();
        assert_eq!(chars.len(), 3);
        assert!(chars[0].frobenius_perron);
        assert!((chars[0].values[2].re - 2f64.sqrt()).abs() < 1e-9);
        let mut sigma: Vec<f64> = chars.iter().map(|c| c.values[2].re).collect();
        sigma.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((sigma[0] + 2f64.sqrt()).abs() < 1e-9 && sigma[1].abs() < 1e-9);
        assert_eq!(chars.iter().filter(|c| c.frobenius_perron).count(), 1);
    }
}
