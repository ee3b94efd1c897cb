//! Based modules over fusion rings and their Frobenius–Perron vectors.
//!
//! A based module of size `m` is given by `M[i][a][b]`, the multiplicity of
//! `m_b` in `b_i m_a`. The action matrix of `b_i` is `(A_i)_{ab} = M[i][a][b]`,
//! matching the ring's multiplication-matrix convention, so the regular
//! module has `A_i = [b_i]`.

use serde::{Deserialize, Serialize};

use crate::fusionring::{fpdims, FusionRing};
use crate::numberfield::{
    char_poly_rational, perron_root, roots, AlgebraicReal, BigRational, IntMatrix, RatPoly,
    SimpleExtension,
};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasedModule {
    ring: FusionRing,
    size: usize,
    m: Vec<Vec<Vec<u64>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RingRef {
    Name(String),
    Inline(FusionRing),
}

#[derive(Serialize, Deserialize)]
struct ModuleFile {
    ring: RingRef,
    size: usize,
    #[serde(rename = "M")]
    m: Vec<Vec<Vec<u64>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleViolation {
    pub axiom: &'static str,
    pub witness: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleReport {
    pub violations: Vec<ModuleViolation>,
    pub indecomposable: bool,
    /// Strongly connected components of the action graph.
    pub components: Vec<Vec<usize>>,
}

impl ModuleReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl BasedModule {
    pub fn new(ring: FusionRing, m: Vec<Vec<Vec<u64>>>) -> Result<Self> {
        let r = ring.rank();
        if m.len() != r {
            return Err(Error::Format(format!(
                "M has {} matrices for rank {r}",
                m.len()
            )));
        }
        let size = m[0].len();
        if size == 0 {
            return Err(Error::Format("module must be nonempty".into()));
        }
        for (i, mat) in m.iter().enumerate() {
            if mat.len() != size || mat.iter().any(|row| row.len() != size) {
                return Err(Error::Format(format!("M[{i}] is not {size}x{size}")));
            }
        }
        Ok(BasedModule { ring, size, m })
    }

    /// The ring acting on itself.
    pub fn regular(ring: &FusionRing) -> Self {
        BasedModule {
            ring: ring.clone(),
            size: ring.rank(),
            m: ring.nested(),
        }
    }

    /// Block sum of two modules over the same ring.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if !self.ring.same_structure(&other.ring) {
            return Err(Error::Format(
                "direct sum of modules over different rings".into(),
            ));
        }
        let (s, t) = (self.size, other.size);
        let m = (0..self.ring.rank())
            .map(|i| {
                (0..s + t)
                    .map(|a| {
                        (0..s + t)
                            .map(|b| match (a < s, b < s) {
                                (true, true) => self.m[i][a][b],
                                (false, false) => other.m[i][a - s][b - s],
                                _ => 0,
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        BasedModule::new(self.ring.clone(), m)
    }

    /// Parses `{"ring": name-or-inline, "size", "M"}`, resolving ring names
    /// through `resolve`.
    pub fn from_json_with(s: &str, resolve: impl Fn(&str) -> Result<FusionRing>) -> Result<Self> {
        let file: ModuleFile = serde_json::from_str(s)?;
        let ring = match file.ring {
            RingRef::Name(name) => resolve(&name)?,
            RingRef::Inline(r) => r,
        };
        let module = BasedModule::new(ring, file.m)?;
        if module.size != file.size {
            return Err(Error::Format(format!(
                "size {} disagrees with M of size {}",
                file.size, module.size
            )));
        }
        Ok(module)
    }

    /// Parses a module file, resolving ring names against the catalog.
    pub fn from_json(s: &str) -> Result<Self> {
        Self::from_json_with(s, crate::catalog::ring)
    }

    pub fn to_json(&self) -> String {
        let file = ModuleFile {
            ring: RingRef::Inline(self.ring.clone()),
            size: self.size,
            m: self.m.clone(),
        };
        serde_json::to_string_pretty(&file).expect("module serializes")
    }

    pub fn ring(&self) -> &FusionRing {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn m(&self, i: usize, a: usize, b: usize) -> u64 {
        self.m[i][a][b]
    }

    /// `(A_i)_{ab} = M[i][a][b]`.
    pub fn action_matrix(&self, i: usize) -> IntMatrix {
        self.m[i]
            .iter()
            .map(|row| row.iter().map(|&v| v as i64).collect())
            .collect()
    }
}

/// Checks the unit and associativity axioms exactly and computes the
/// strongly connected components of the action graph.
pub fn validate_module(module: &BasedModule) -> ModuleReport {
    let ring = &module.ring;
    let (r, s, u) = (ring.rank(), module.size, ring.unit());
    let mut violations = Vec::new();
    for a in 0..s {
        for b in 0..s {
            let want = u64::from(a == b);
            if module.m[u][a][b] != want {
                violations.push(ModuleViolation {
                    axiom: "unit",
                    witness: vec![a, b],
                    detail: format!("unit sends m{a} to {} copies of m{b}", module.m[u][a][b]),
                });
            }
        }
    }
    for i in 0..r {
        for j in 0..r {
            for a in 0..s {
                for b in 0..s {
                    let lhs: u64 = (0..s).map(|c| module.m[j][a][c] * module.m[i][c][b]).sum();
                    let rhs: u64 = (0..r).map(|k| ring.n(i, j, k) * module.m[k][a][b]).sum();
                    if lhs != rhs && violations.len() < 64 {
                        violations.push(ModuleViolation {
                            axiom: "associativity",
                            witness: vec![i, j, a, b],
                            detail: format!("b{i}(b{j} m{a}) has {lhs} copies of m{b}, (b{i} b{j}) m{a} has {rhs}"),
                        });
                    }
                }
            }
        }
    }
    let components = strong_components(module);
    ModuleReport {
        violations,
        indecomposable: components.len() == 1,
        components,
    }
}

fn strong_components(module: &BasedModule) -> Vec<Vec<usize>> {
    let s = module.size;
    let mut reach = vec![vec![false; s]; s];
    for (a, row) in reach.iter_mut().enumerate() {
        row[a] = true;
        for mat in &module.m {
            for b in 0..s {
                if mat[a][b] > 0 {
                    row[b] = true;
                }
            }
        }
    }
    for k in 0..s {
        for a in 0..s {
            if reach[a][k] {
                for b in 0..s {
                    if reach[k][b] {
                        reach[a][b] = true;
                    }
                }
            }
        }
    }
    let mut seen = vec![false; s];
    let mut out = Vec::new();
    for a in 0..s {
        if seen[a] {
            continue;
        }
        let comp: Vec<usize> = (0..s).filter(|&b| reach[a][b] && reach[b][a]).collect();
        for &b in &comp {
            seen[b] = true;
        }
        out.push(comp);
    }
    out
}

/// The positive common eigenvector of all `A_i`, normalized so its smallest
/// entry is 1. Entries are exact algebraic numbers: they are solved for in
/// `Q(μ)`, `μ` the Perron root of `Σ_i A_i`, and each carries its minimal
/// polynomial (and a cyclotomic lift when it is rational or quadratic).
pub fn fp_vector(module: &BasedModule) -> Result<Vec<AlgebraicReal>> {
    let ring = &module.ring;
    let fp = fpdims(ring)?;
    let report = validate_module(module);
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidRing(format!(
            "module axiom {} fails at {:?}",
            v.axiom, v.witness
        )));
    }
    if !report.indecomposable {
        return Err(Error::Decomposable);
    }
    let s = module.size;
    let mats: Vec<IntMatrix> = (0..ring.rank()).map(|i| module.action_matrix(i)).collect();
    let mut total: IntMatrix = vec![vec![0; s]; s];
    for m in &mats {
        for (trow, mrow) in total.iter_mut().zip(m) {
            for (t, v) in trow.iter_mut().zip(mrow) {
                *t += v;
            }
        }
    }

    let approx = perron_vector_f64(&total);
    let fixed = (0..s)
        .min_by(|&a, &b| approx[a].partial_cmp(&approx[b]).unwrap())
        .unwrap_or(0);
    let approx: Vec<f64> = approx.iter().map(|x| x / approx[fixed]).collect();
    for (i, m) in mats.iter().enumerate() {
        let lambda = fp.dims[i].approx();
        for a in 0..s {
            let lhs: f64 = (0..s).map(|b| m[a][b] as f64 * approx[b]).sum();
            if (lhs - lambda * approx[a]).abs() > 1e-9 * (1.0 + lambda * approx[a]) {
                return Err(Error::InternalConsistency(format!(
                    "Perron vector is not an eigenvector of b{i} at m{a}"
                )));
            }
        }
    }

    let mu = perron_root(&total)?;
    let min_poly = mu.certified_min_poly().ok_or_else(|| {
        Error::InternalConsistency(
            "could not factor the characteristic polynomial of the action".into(),
        )
    })?;
    let field = SimpleExtension::new(min_poly.to_rat());
    let y = field.generator();
    let system: Vec<Vec<RatPoly>> = (0..s)
        .map(|a| {
            (0..s)
                .map(|b| {
                    let c = RatPoly::constant(BigRational::from_integer(total[a][b].into()));
                    if a == b {
                        c.sub(&y)
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    let kernel = field.kernel_vector(&system, fixed).ok_or_else(|| {
        Error::InternalConsistency("Perron eigenspace is not one-dimensional".into())
    })?;

    kernel
        .iter()
        .zip(&approx)
        .map(|(p, &x)| field_element_to_real(&field, p, x))
        .collect()
}

/// The real number `p(μ)` whose value is approximately `x`, isolated against
/// its minimal polynomial.
fn field_element_to_real(field: &SimpleExtension, p: &RatPoly, x: f64) -> Result<AlgebraicReal> {
    if p.degree().unwrap_or(0) == 0 {
        return Ok(AlgebraicReal::from_rational(p.coeff(0)));
    }
    // the characteristic polynomial of multiplication by p(μ) is a power of
    // its minimal polynomial
    let min_poly = char_poly_rational(&field.mul_matrix(p))
        .to_primitive_int()
        .squarefree_part();
    if min_poly.degree() == Some(1) {
        let c = min_poly.coeffs();
        return Ok(AlgebraicReal::from_rational(BigRational::new(
            -c[0].clone(),
            c[1].clone(),
        )));
    }
    let gap = roots::complex_roots_f64(&min_poly)
        .iter()
        .map(|z| (z - num_complex::Complex64::new(x, 0.0)).norm())
        .filter(|d| *d > 1e-7)
        .fold(f64::INFINITY, f64::min);
    let radius = if gap.is_finite() { gap / 3.0 } else { 1.0 };
    let mut v = AlgebraicReal::isolate_near(&min_poly, x, radius)
        .ok_or_else(|| {
            Error::InternalConsistency("could not isolate a Perron vector entry".into())
        })?
        .with_min_poly(min_poly);
    v.attach_lift();
    Ok(v)
}

/// Perron vector of an irreducible nonnegative matrix by power iteration on
/// `T + I`.
fn perron_vector_f64(t: &IntMatrix) -> Vec<f64> {
    let s = t.len();
    let mut v = vec![1.0; s];
    for _ in 0..100_000 {
        let mut next: Vec<f64> = (0..s)
            .map(|a| v[a] + (0..s).map(|b| t[a][b] as f64 * v[b]).sum::<f64>())
            .collect();
        let norm = next.iter().cloned().fold(0.0, f64::max);
        next.iter_mut().for_each(|x| *x /= norm);
        let diff = next
            .iter()
            .zip(&v)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        v = next;
        if diff < 1e-15 {
            break;
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn regular_module_of_fibonacci() {
        let m = BasedModule::regular(&fibonacci());
        assert!(validate_module(&m).indecomposable);
        let v = fp_vector(&m).unwrap();
        assert!(v[0]
            .rational_value()
            .is_some_and(|q| q == BigRational::from_integer(1.into())));
        assert!((v[1].approx() - 1.618033988749895).abs() < 1e-12);
        assert!(v[1].exact().is_some());
    }

    #[test]
    fn direct_sum_is_decomposable() {
        let m = BasedModule::regular(&fibonacci());
        let d = m.direct_sum(&m).unwrap();
        let report = validate_module(&d);
        assert!(report.is_valid() && !report.indecomposable);
        assert!(matches!(fp_vector(&d), Err(Error::Decomposable)));
    }
}
