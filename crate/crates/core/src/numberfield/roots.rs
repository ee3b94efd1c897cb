//! Numeric root finding for integer polynomials (Aberth–Ehrlich iteration).

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use super::mp::{Mp, MpComplex};
use super::poly::IntPolynomial;

fn horner_c64(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All complex roots of `p` in double precision. `p` should be squarefree.
pub fn complex_roots_f64(p: &IntPolynomial) -> Vec<Complex64> {
    let deg = match p.degree() {
        None | Some(0) => return Vec::new(),
        Some(d) => d,
    };
    let lead = p.leading().unwrap().to_f64().unwrap();
    let coeffs: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|c| c.to_f64().unwrap() / lead)
        .collect();
    if deg == 1 {
        return vec![Complex64::new(-coeffs[0], 0.0)];
    }
    // Fujiwara-type radius for the initial circle
    let radius = coeffs[..deg]
        .iter()
        .enumerate()
        .map(|(k, c)| c.abs().powf(1.0 / (deg - k) as f64))
        .fold(0.0f64, f64::max)
        .max(1e-3)
        * 2.0;
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * k as f64 / deg as f64 + 0.4;
            Complex64::from_polar(radius, angle)
        })
        .collect();
    for _ in 0..1000 {
        let mut max_step = 0.0f64;
        for k in 0..deg {
            let (pv, dpv) = horner_c64(&coeffs, z[k]);
            if pv.norm() == 0.0 {
                continue;
            }
            let ratio = pv / dpv;
            let repulsion: Complex64 = (0..deg)
                .filter(|&j| j != k)
                .map(|j| Complex64::new(1.0, 0.0) / (z[k] - z[j]))
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                max_step = max_step.max(step.norm() / (1.0 + z[k].norm()));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    z
}

fn horner_mp(coeffs: &[Mp], z: &MpComplex) -> (MpComplex, MpComplex) {
    let mut p = MpComplex::zero();
    let mut dp = MpComplex::zero();
    for c in coeffs.iter().rev() {
        dp = dp.mul(z).add(&p);
        p = p.mul(z).add(&MpComplex::from_real(c.clone()));
    }
    (p, dp)
}

/// All complex roots of the squarefree polynomial `p`, refined to about
/// `1e-30` or better in multi-precision arithmetic.
pub fn complex_roots(p: &IntPolynomial) -> Vec<MpComplex> {
    let seeds = complex_roots_f64(p);
    let deg = seeds.len();
    if deg == 0 {
        return Vec::new();
    }
    let coeffs: Vec<Mp> = p.coeffs().iter().map(Mp::from_bigint).collect();
    let mut z: Vec<MpComplex> = seeds.into_iter().map(MpComplex::from_c64).collect();
    let one = MpComplex::from_real(Mp::from_i64(1));
    let target = Mp::from_f64(1e-80);
    for _ in 0..60 {
        let mut converged = true;
        for k in 0..deg {
            let (pv, dpv) = horner_mp(&coeffs, &z[k]);
            if pv.norm_sqr().lt(&Mp::from_f64(1e-300)) {
                continue;
            }
            let ratio = pv.div(&dpv);
            let mut repulsion = MpComplex::zero();
            for j in 0..deg {
                if j != k {
                    repulsion = repulsion.add(&one.div(&z[k].sub(&z[j])));
                }
            }
            let step = ratio.div(&one.sub(&ratio.mul(&repulsion)));
            let size = step.abs();
            z[k] = z[k].sub(&step);
            let scale = Mp::from_i64(1).add(&z[k].abs());
            if !size.lt(&target.mul(&scale)) {
                converged = false;
            }
        }
        if converged {
            break;
        }
    }
    z
}
