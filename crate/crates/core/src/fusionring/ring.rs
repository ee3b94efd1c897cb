use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize, Serializer};

use crate::numberfield::IntMatrix;
use crate::{Error, Result};

/// Violations of one axiom beyond this many are counted but not listed.
const MAX_WITNESSES_PER_AXIOM: usize = 16;

/// A unital based ring of finite rank.
///
/// `n(i, j, k)` is the multiplicity of `b_k` in `b_i b_j`. Construction only
/// checks the shape of the data; the ring axioms are checked by
/// [`FusionRing::validate`], whose report is computed once and cached.
#[derive(Clone)]
pub struct FusionRing {
    name: String,
    labels: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    n: Vec<u64>,
    validation: OnceLock<ValidationReport>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Unit,
    Involution,
    Duality,
    FrobeniusReciprocity,
    Associativity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Unit => "unit",
            Axiom::Involution => "involution",
            Axiom::Duality => "duality",
            Axiom::FrobeniusReciprocity => "frobenius_reciprocity",
            Axiom::Associativity => "associativity",
        })
    }
}

/// One failed instance of an axiom. `witness` holds the basis indices
/// `(i, j, k[, l])` of the offending instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// Instances found but not listed, per axiom.
    pub suppressed: Vec<(Axiom, usize)>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violated(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn find(&self, axiom: Axiom, witness: &[usize]) -> Option<&Violation> {
        self.violations
            .iter()
            .find(|v| v.axiom == axiom && v.witness == witness)
    }

    fn push(&mut self, axiom: Axiom, witness: Vec<usize>, detail: String) {
        let listed = self.violations.iter().filter(|v| v.axiom == axiom).count();
        if listed < MAX_WITNESSES_PER_AXIOM {
            self.violations.push(Violation {
                axiom,
                witness,
                detail,
            });
        } else if let Some(entry) = self.suppressed.iter_mut().find(|(a, _)| *a == axiom) {
            entry.1 += 1;
        } else {
            self.suppressed.push((axiom, 1));
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return writeln!(f, "valid");
        }
        for v in &self.violations {
            writeln!(f, "{} violated at {:?}: {}", v.axiom, v.witness, v.detail)?;
        }
        for (a, count) in &self.suppressed {
            writeln!(f, "{a}: {count} further violations")?;
        }
        Ok(())
    }
}

/// The on-disk form, `{"name","rank","labels","unit","dual","N"}` with
/// `N[i][j][k]` the multiplicity of `b_k` in `b_i b_j`.
#[derive(Serialize, Deserialize)]
struct RingFile {
    name: String,
    rank: usize,
    labels: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    #[serde(rename = "N")]
    n: Vec<Vec<Vec<u64>>>,
}

impl FusionRing {
    /// Builds a ring from nested structure constants, checking only shape.
    /// An empty `labels` vector is replaced by `b0, b1, ...`.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        unit: usize,
        dual: Vec<usize>,
        n: Vec<Vec<Vec<u64>>>,
    ) -> Result<Self> {
        let r = n.len();
        if r == 0 {
            return Err(Error::InvalidRing("rank must be positive".into()));
        }
        for (i, row) in n.iter().enumerate() {
            if row.len() != r || row.iter().any(|v| v.len() != r) {
                return Err(Error::Format(format!("N[{i}] is not {r}x{r}")));
            }
        }
        let flat = n.into_iter().flatten().flatten().collect();
        Self::from_flat(name.into(), labels, unit, dual, r, flat)
    }

    /// Builds a rank-`r` ring with `N[i][j][k] = f(i, j, k)`.
    pub fn from_fn(
        name: impl Into<String>,
        labels: Vec<String>,
        unit: usize,
        dual: Vec<usize>,
        r: usize,
        f: impl Fn(usize, usize, usize) -> u64,
    ) -> Result<Self> {
        let mut flat = Vec::with_capacity(r * r * r);
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    flat.push(f(i, j, k));
                }
            }
        }
        Self::from_flat(name.into(), labels, unit, dual, r, flat)
    }

    fn from_flat(
        name: String,
        labels: Vec<String>,
        unit: usize,
        dual: Vec<usize>,
        r: usize,
        n: Vec<u64>,
    ) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidRing("rank must be positive".into()));
        }
        let labels = if labels.is_empty() {
            (0..r).map(|i| format!("b{i}")).collect()
        } else {
            labels
        };
        if labels.len() != r {
            return Err(Error::Format(format!(
                "{} labels for rank {r}",
                labels.len()
            )));
        }
        if dual.len() != r {
            return Err(Error::Format(format!(
                "dual has length {} for rank {r}",
                dual.len()
            )));
        }
        if let Some(&d) = dual.iter().find(|&&d| d >= r) {
            return Err(Error::IndexOutOfRange { index: d, rank: r });
        }
        if unit >= r {
            return Err(Error::IndexOutOfRange {
                index: unit,
                rank: r,
            });
        }
        Ok(FusionRing {
            name,
            labels,
            unit,
            dual,
            n,
            validation: OnceLock::new(),
        })
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let file: RingFile = serde_json::from_str(s)?;
        if file.rank != file.n.len() {
            return Err(Error::Format(format!(
                "rank {} disagrees with N of size {}",
                file.rank,
                file.n.len()
            )));
        }
        Self::new(file.name, file.labels, file.unit, file.dual, file.n)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("ring serializes")
    }

    fn to_file(&self) -> RingFile {
        RingFile {
            name: self.name.clone(),
            rank: self.rank(),
            labels: self.labels.clone(),
            unit: self.unit,
            dual: self.dual.clone(),
            n: self.nested(),
        }
    }

    pub fn nested(&self) -> Vec<Vec<Vec<u64>>> {
        let r = self.rank();
        (0..r)
            .map(|i| (0..r).map(|j| self.product(i, j).to_vec()).collect())
            .collect()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    #[inline]
    pub fn n(&self, i: usize, j: usize, k: usize) -> u64 {
        let r = self.rank();
        self.n[(i * r + j) * r + k]
    }

    /// Coefficients of `b_i b_j` in the basis.
    pub fn product(&self, i: usize, j: usize) -> &[u64] {
        let r = self.rank();
        &self.n[(i * r + j) * r..(i * r + j + 1) * r]
    }

    /// Basis elements occurring in `b_i b_j`.
    pub fn support(&self, i: usize, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.product(i, j)
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(k, _)| k)
    }

    /// Product of two elements given by coefficient vectors.
    pub fn mul_elements(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let r = self.rank();
        let mut out = vec![0u64; r];
        for (i, &ai) in a.iter().enumerate().filter(|(_, &c)| c > 0) {
            for (j, &bj) in b.iter().enumerate().filter(|(_, &c)| c > 0) {
                for (k, &c) in self.product(i, j).iter().enumerate() {
                    out[k] += ai * bj * c;
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        v
    }

    pub fn is_commutative(&self) -> bool {
        self.noncommuting_pair().is_none()
    }

    /// Some `(i, j)` with `b_i b_j != b_j b_i`.
    pub fn noncommuting_pair(&self) -> Option<(usize, usize)> {
        let r = self.rank();
        (0..r)
            .flat_map(|i| (i + 1..r).map(move |j| (i, j)))
            .find(|&(i, j)| self.product(i, j) != self.product(j, i))
    }

    /// Matrix of left multiplication by `b_i`: `([b_i])_{kj} = N[i][k][j]`.
    pub fn mult_matrix(&self, i: usize) -> Result<IntMatrix> {
        let r = self.rank();
        if i >= r {
            return Err(Error::IndexOutOfRange { index: i, rank: r });
        }
        Ok((0..r)
            .map(|k| (0..r).map(|j| self.n(i, k, j) as i64).collect())
            .collect())
    }

    /// Checks every ring axiom; the result is cached.
    pub fn validate(&self) -> &ValidationReport {
        self.validation.get_or_init(|| check_axioms(self))
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    /// `Err(InvalidRing)` summarizing the violations unless the ring is valid.
    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            return Ok(());
        }
        let v = &report.violations[0];
        Err(Error::InvalidRing(format!(
            "{}: {} violated at {:?} ({} violations)",
            self.name,
            v.axiom,
            v.witness,
            report.violations.len() + report.suppressed.iter().map(|s| s.1).sum::<usize>()
        )))
    }
}

fn check_axioms(ring: &FusionRing) -> ValidationReport {
    let r = ring.rank();
    let u = ring.unit;
    let mut report = ValidationReport::default();
    let delta = |a: usize, b: usize| u64::from(a == b);

    for j in 0..r {
        for k in 0..r {
            let (left, right) = (ring.n(u, j, k), ring.n(j, u, k));
            if left != delta(j, k) || right != delta(j, k) {
                report.push(
                    Axiom::Unit,
                    vec![j, k],
                    format!(
                        "N[u][{j}][{k}] = {left}, N[{j}][u][{k}] = {right}, expected {}",
                        delta(j, k)
                    ),
                );
            }
        }
    }

    for i in 0..r {
        let d = ring.dual[i];
        if ring.dual[d] != i {
            report.push(
                Axiom::Involution,
                vec![i],
                format!("dual(dual({i})) = {}", ring.dual[d]),
            );
        }
    }
    if ring.dual[u] != u {
        report.push(
            Axiom::Involution,
            vec![u],
            format!("dual(unit) = {}", ring.dual[u]),
        );
    }

    for i in 0..r {
        for j in 0..r {
            let want = delta(j, ring.dual[i]);
            let got = ring.n(i, j, u);
            if got != want {
                report.push(
                    Axiom::Duality,
                    vec![i, j, u],
                    format!("N[{i}][{j}][{u}] = {got}, expected {want}"),
                );
            }
        }
    }

    for a in 0..r {
        for i in 0..r {
            for k in 0..r {
                let lhs = ring.n(a, i, k);
                let rhs = ring.n(ring.dual[k], a, ring.dual[i]);
                if lhs != rhs {
                    report.push(
                        Axiom::FrobeniusReciprocity,
                        vec![a, i, k],
                        format!("N[{a}][{i}][{k}] = {lhs} but N[{k}*][{a}][{i}*] = {rhs}"),
                    );
                }
            }
        }
    }

    for i in 0..r {
        for j in 0..r {
            let ij = ring.product(i, j);
            for k in 0..r {
                let jk = ring.product(j, k);
                for l in 0..r {
                    let lhs: u64 = (0..r).map(|m| ij[m] * ring.n(m, k, l)).sum();
                    let rhs: u64 = (0..r).map(|m| jk[m] * ring.n(i, m, l)).sum();
                    if lhs != rhs {
                        report.push(
                            Axiom::Associativity,
                            vec![i, j, k, l],
                            format!("((b{i} b{j}) b{k}) has {lhs} copies of b{l}, (b{i} (b{j} b{k})) has {rhs}"),
                        );
                    }
                }
            }
        }
    }
    report
}

impl PartialEq for FusionRing {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
            && self.unit == other.unit
            && self.dual == other.dual
            && self.n == other.n
    }
}

impl Eq for FusionRing {}

impl FusionRing {
    /// Equality of structure constants, duals and unit, ignoring names and labels.
    pub fn same_structure(&self, other: &Self) -> bool {
        self.rank() == other.rank()
            && self.unit == other.unit
            && self.dual == other.dual
            && self.n == other.n
    }

    /// A relabelling `p` with `N_{p(i)p(j)}^{p(k)} = N_ij^k` (other side:
    /// `other`), found by backtracking. Unit goes to unit.
    pub fn isomorphism(&self, other: &Self) -> Option<Vec<usize>> {
        let r = self.rank();
        if r != other.rank() {
            return None;
        }
        let mut p = vec![usize::MAX; r];
        let mut used = vec![false; r];
        let order: Vec<usize> = std::iter::once(self.unit)
            .chain((0..r).filter(|&i| i != self.unit))
            .collect();
        self.extend_iso(other, &order, 0, &mut p, &mut used)
            .then_some(p)
    }

    fn extend_iso(
        &self,
        other: &Self,
        order: &[usize],
        depth: usize,
        p: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let i = order[depth];
        for t in 0..other.rank() {
            if used[t] || (depth == 0 && t != other.unit) {
                continue;
            }
            p[i] = t;
            let assigned = &order[..=depth];
            let consistent = assigned.iter().all(|&a| {
                let dual_ok = p[self.dual[a]] == usize::MAX || p[self.dual[a]] == other.dual[p[a]];
                dual_ok
                    && assigned.iter().all(|&b| {
                        assigned
                            .iter()
                            .all(|&c| self.n(a, b, c) == other.n(p[a], p[b], p[c]))
                    })
            });
            if consistent {
                used[t] = true;
                if self.extend_iso(other, order, depth + 1, p, used) {
                    return true;
                }
                used[t] = false;
            }
            p[i] = usize::MAX;
        }
        false
    }
}

impl fmt::Debug for FusionRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FusionRing")
            .field("name", &self.name)
            .field("labels", &self.labels)
            .field("unit", &self.unit)
            .field("dual", &self.dual)
            .finish_non_exhaustive()
    }
}

impl fmt::Display for FusionRing {
    /// Multiplication table, one line per nonzero product.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (rank {})", self.name, self.rank())?;
        let r = self.rank();
        for i in 0..r {
            for j in 0..r {
                let terms: Vec<String> = self
                    .support(i, j)
                    .map(|k| match self.n(i, j, k) {
                        1 => self.labels[k].clone(),
                        c => format!("{c}{}", self.labels[k]),
                    })
                    .collect();
                writeln!(
                    f,
                    "  {} * {} = {}",
                    self.labels[i],
                    self.labels[j],
                    terms.join(" + ")
                )?;
            }
        }
        Ok(())
    }
}

impl Serialize for FusionRing {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_file().serialize(s)
    }
}

impl<'de> Deserialize<'de> for FusionRing {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let file = RingFile::deserialize(d)?;
        if file.rank != file.n.len() {
            return Err(serde::de::Error::custom(format!(
                "rank {} disagrees with N of size {}",
                file.rank,
                file.n.len()
            )));
        }
        FusionRing::new(file.name, file.labels, file.unit, file.dual, file.n)
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn fibonacci() -> FusionRing {
        FusionRing::new(
            "fibonacci",
            vec!["1".into(), "tau".into()],
            0,
            vec![0, 1],
            vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 1]]],
        )
        .unwrap()
    }

    #[test]
    fn fibonacci_is_valid() {
        assert!(fibonacci().validate().is_valid());
        assert_eq!(
            fibonacci().mult_matrix(1).unwrap(),
            vec![vec![0, 1], vec![1, 1]]
        );
    }

    #[test]
    fn broken_duality_is_witnessed() {
        let mut n = fibonacci().nested();
        n[1][1][0] = 2;
        let ring = FusionRing::new("broken", vec![], 0, vec![0, 1], n).unwrap();
        let report = ring.validate();
        assert!(report.find(Axiom::Duality, &[1, 1, 0]).is_some());
        assert!(ring.ensure_valid().is_err());
    }

    #[test]
    fn json_round_trip() {
        let ring = fibonacci();
        let back = FusionRing::from_json(&ring.to_json()).unwrap();
        assert_eq!(ring, back);
    }

    #[test]
    fn shape_errors() {
        assert!(FusionRing::new("empty", vec![], 0, vec![], vec![]).is_err());
        assert!(FusionRing::new("bad", vec![], 0, vec![0], vec![vec![vec![1, 0]]]).is_err());
        assert!(FusionRing::new("bad", vec![], 1, vec![0], vec![vec![vec![1]]]).is_err());
    }

    #[test]
    fn index_out_of_range() {
        assert!(matches!(
            fibonacci().mult_matrix(2),
            Err(Error::IndexOutOfRange { index: 2, rank: 2 })
        ));
    }
}
