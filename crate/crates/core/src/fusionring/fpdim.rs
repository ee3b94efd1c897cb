use serde::Serialize;

use super::FusionRing;
use crate::numberfield::{perron_root, AlgebraicReal, BigRational, CyclotomicNumber, IntMatrix};
use crate::Result;

/// Outcome of checking `λ_i λ_j = Σ_k N_ij^k λ_k`.
#[derive(Clone, Debug, Serialize)]
pub struct HomomorphismCheck {
    /// Largest absolute residual over all `(i, j)`, in double precision.
    pub max_residual: f64,
    /// `Some(holds)` when every `λ_i` has an exact lift.
    pub exact: Option<bool>,
}

impl HomomorphismCheck {
    pub fn holds(&self, tol: f64) -> bool {
        self.exact.unwrap_or(self.max_residual < tol)
    }
}

/// Frobenius–Perron data of a fusion ring.
#[derive(Clone, Debug, Serialize)]
pub struct FPData {
    pub dims: Vec<AlgebraicReal>,
    pub ring_dim: AlgebraicReal,
    /// Coefficients of the regular element `R = Σ λ_i b_i`.
    pub regular: Vec<AlgebraicReal>,
    pub homomorphism: HomomorphismCheck,
}

impl FPData {
    pub fn dim(&self, i: usize) -> &AlgebraicReal {
        &self.dims[i]
    }

    pub fn approx_dims(&self) -> Vec<f64> {
        self.dims.iter().map(AlgebraicReal::approx).collect()
    }

    /// All dimensions as cyclotomic numbers, when every one has a lift.
    pub fn exact_dims(&self) -> Option<Vec<CyclotomicNumber>> {
        self.dims.iter().map(|d| d.exact().cloned()).collect()
    }

    pub fn exact_ring_dim(&self) -> Option<&CyclotomicNumber> {
        self.ring_dim.exact()
    }
}

/// Frobenius–Perron dimensions of a valid ring.
pub fn fpdims(ring: &FusionRing) -> Result<FPData> {
    ring.ensure_valid()?;
    fpdims_unvalidated(ring)
}

/// Perron roots of the multiplication matrices without checking the ring
/// axioms first. Useful for reasoning about hand-built tables that violate
/// some axiom; the results carry no meaning beyond the matrices themselves.
pub fn fpdims_unvalidated(ring: &FusionRing) -> Result<FPData> {
    let r = ring.rank();
    let mut dims = Vec::with_capacity(r);
    for i in 0..r {
        let mut d = perron_root(&ring.mult_matrix(i)?)?;
        d.attach_lift();
        dims.push(d);
    }

    let mut gram: IntMatrix = vec![vec![0; r]; r];
    for i in 0..r {
        let a = ring.mult_matrix(i)?;
        let b = ring.mult_matrix(ring.dual(i))?;
        for (row, arow) in gram.iter_mut().zip(&a) {
            for (c, entry) in row.iter_mut().enumerate() {
                *entry += (0..r).map(|m| arow[m] * b[m][c]).sum::<i64>();
            }
        }
    }
    let mut ring_dim = perron_root(&gram)?;
    let exact_sum = dims.iter().try_fold(CyclotomicNumber::zero(1), |acc, d| {
        d.exact().map(|e| &acc + &(e * e))
    });
    let attached = exact_sum.is_some_and(|s| ring_dim.attach_exact(s));
    if !attached {
        ring_dim.attach_lift();
    }

    let homomorphism = homomorphism_check(ring, &dims);
    Ok(FPData {
        regular: dims.clone(),
        dims,
        ring_dim,
        homomorphism,
    })
}

fn homomorphism_check(ring: &FusionRing, dims: &[AlgebraicReal]) -> HomomorphismCheck {
    let r = ring.rank();
    let approx: Vec<f64> = dims.iter().map(AlgebraicReal::approx).collect();
    let mut max_residual = 0.0f64;
    for i in 0..r {
        for j in 0..r {
            let rhs: f64 = (0..r).map(|k| ring.n(i, j, k) as f64 * approx[k]).sum();
            max_residual = max_residual.max((approx[i] * approx[j] - rhs).abs());
        }
    }
    let exact_dims: Option<Vec<&CyclotomicNumber>> = dims.iter().map(|d| d.exact()).collect();
    let exact = exact_dims.map(|e| {
        (0..r).all(|i| {
            (0..r).all(|j| {
                let rhs = (0..r)
                    .filter(|&k| ring.n(i, j, k) > 0)
                    .fold(CyclotomicNumber::zero(1), |acc, k| {
                        &acc + &e[k].scale(&BigRational::from_integer(ring.n(i, j, k).into()))
                    });
                e[i] * e[j] == rhs
            })
        })
    });
    HomomorphismCheck {
        max_residual,
        exact,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numberfield::IntPolynomial;

    fn fibonacci() -> FusionRing {
        FusionRing::from_fn("fibonacci", vec![], 0, vec![0, 1], 2, |i, j, k| {
            match (i, j) {
                (0, x) | (x, 0) => u64::from(x == k),
                _ => 1,
            }
        })
        .unwrap()
    }

    #[test]
    fn fibonacci_dims() {
        let fp = fpdims(&fibonacci()).unwrap();
        assert_eq!(
            fp.dims[1].certified_min_poly(),
            Some(&IntPolynomial::from_i64(&[-1, -1, 1]))
        );
        assert!((fp.ring_dim.approx() - (5.0 + 5f64.sqrt()) / 2.0).abs() < 1e-12);
        assert_eq!(fp.homomorphism.exact, Some(true));
        // (5 + √5)/2 has minimal polynomial x^2 - 5x + 5
        assert_eq!(
            fp.ring_dim.certified_min_poly(),
            Some(&IntPolynomial::from_i64(&[5, -5, 1]))
        );
        assert!(fp.ring_dim.exact().is_some());
    }
}
