use serde::{Deserialize, Serialize};

use super::groups::Group;
use crate::fusionring::FusionRing;
use crate::numberfield::{BigRational, CyclotomicNumber};
use crate::{Error, Result};

/// `Vec_G`: basis the group elements, `N[g][h][k] = δ_{gh,k}`.
pub fn group_ring(g: &Group) -> FusionRing {
    let n = g.order();
    FusionRing::from_fn(
        format!("Vec({})", g.name()),
        g.labels().to_vec(),
        g.identity(),
        (0..n).map(|a| g.inverse(a)).collect(),
        n,
        |a, b, k| (g.mul(a, b) == k) as u64,
    )
    .expect("group ring has consistent shape")
}

/// Character table of a finite group with irreducible characters as rows and
/// conjugacy classes as columns.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub group: String,
    pub order: u64,
    pub class_sizes: Vec<u64>,
    #[serde(default)]
    pub class_labels: Vec<String>,
    #[serde(default)]
    pub labels: Vec<String>,
    pub characters: Vec<Vec<CyclotomicNumber>>,
}

impl CharacterTable {
    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    /// `<χ, ψ> = (1/|G|) Σ_c |c| χ(c) conj(ψ(c))`.
    pub fn inner(&self, a: usize, b: usize) -> CyclotomicNumber {
        let mut acc = CyclotomicNumber::zero(1);
        for (c, &size) in self.class_sizes.iter().enumerate() {
            let term = &self.characters[a][c] * &self.characters[b][c].conj();
            acc = &acc + &term.scale(&BigRational::from_integer(size.into()));
        }
        acc.scale(&BigRational::new(1.into(), self.order.into()))
    }

    /// Shape, class-size and first-orthogonality checks, all exact.
    pub fn check(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::OrthogonalityFailure(msg));
        let r = self.class_sizes.len();
        if r == 0 || self.characters.len() != r || self.characters.iter().any(|row| row.len() != r)
        {
            return bad(format!("table is not square with {r} classes"));
        }
        if !self.labels.is_empty() && self.labels.len() != r {
            return bad(format!("{} labels for {r} characters", self.labels.len()));
        }
        let total: u64 = self.class_sizes.iter().sum();
        if total != self.order {
            return bad(format!(
                "class sizes sum to {total}, group order is {}",
                self.order
            ));
        }
        for a in 0..r {
            for b in 0..r {
                let ip = self.inner(a, b);
                let expected = if a == b {
                    CyclotomicNumber::one()
                } else {
                    CyclotomicNumber::zero(1)
                };
                if ip != expected {
                    return bad(format!("<chi_{a}, chi_{b}> = {ip}"));
                }
            }
        }
        Ok(())
    }
}

/// The representation ring: `N[i][j][k] = <χ_i χ_j, χ_k>`.
pub fn rep_ring_from_characters(t: &CharacterTable) -> Result<FusionRing> {
    t.check()?;
    let r = t.characters.len();
    let trivial = (0..r)
        .find(|&i| t.characters[i].iter().all(|x| x.is_one()))
        .ok_or_else(|| Error::OrthogonalityFailure("no trivial character".into()))?;
    let mut dual = Vec::with_capacity(r);
    for i in 0..r {
        let conj: Vec<CyclotomicNumber> = t.characters[i].iter().map(|x| x.conj()).collect();
        match (0..r).find(|&j| t.characters[j] == conj) {
            Some(j) => dual.push(j),
            None => {
                return Err(Error::OrthogonalityFailure(format!(
                    "conjugate of chi_{i} is not in the table"
                )))
            }
        }
    }
    let mut n = vec![vec![vec![0u64; r]; r]; r];
    for i in 0..r {
        for j in 0..r {
            let prod: Vec<CyclotomicNumber> = (0..r)
                .map(|c| &t.characters[i][c] * &t.characters[j][c])
                .collect();
            for k in 0..r {
                let mut acc = CyclotomicNumber::zero(1);
                for (c, &size) in t.class_sizes.iter().enumerate() {
                    let term = &prod[c] * &t.characters[k][c].conj();
                    acc = &acc + &term.scale(&BigRational::from_integer(size.into()));
                }
                let v = acc.scale(&BigRational::new(1.into(), t.order.into()));
                n[i][j][k] = v
                    .as_rational()
                    .filter(|q| q.is_integer() && *q >= BigRational::from_integer(0.into()))
                    .and_then(|q| u64::try_from(q.to_integer()).ok())
                    .ok_or_else(|| Error::NonIntegralFusion {
                        i,
                        j,
                        k,
                        value: v.to_string(),
                    })?;
            }
        }
    }
    FusionRing::new(
        format!("Rep({})", t.group),
        t.labels.clone(),
        trivial,
        dual,
        n,
    )
}

/// `A_n(G)`: basis `G ∪ {X}` with `gX = Xg = X` and `X^2 = nX + Σ_g g`.
pub fn an_g_ring(n: u64, g: &Group) -> FusionRing {
    let m = g.order();
    let x = m;
    let mut labels = g.labels().to_vec();
    labels.push("X".into());
    let mut dual: Vec<usize> = (0..m).map(|a| g.inverse(a)).collect();
    dual.push(x);
    let name = if n == 0 {
        format!("TY({})", g.name())
    } else {
        format!("A_{n}({})", g.name())
    };
    FusionRing::from_fn(name, labels, g.identity(), dual, m + 1, |a, b, k| {
        match (a == x, b == x) {
            (false, false) => (g.mul(a, b) == k) as u64,
            (true, true) => {
                if k == x {
                    n
                } else {
                    1
                }
            }
            _ => (k == x) as u64,
        }
    })
    .expect("A_n(G) has consistent shape")
}

/// Tambara–Yamagami ring `TY(G)`, the `n = 0` member of `A_n(G)`.
pub fn ty_ring(g: &Group) -> Result<FusionRing> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    Ok(an_g_ring(0, g))
}

/// `V_i V_j = Σ V_k` over `|i-j| ≤ k ≤ l - |i+j-l|` with `k ≡ i+j (mod 2)`.
pub fn verlinde_sl2_ring(l: usize) -> FusionRing {
    let labels = (0..=l).map(|i| format!("V{i}")).collect();
    FusionRing::from_fn(
        format!("sl2 level {l}"),
        labels,
        0,
        (0..=l).collect(),
        l + 1,
        |i, j, k| {
            let lo = i.abs_diff(j);
            let hi = l - (i + j).abs_diff(l);
            (lo <= k && k <= hi && (k + i + j) % 2 == 0) as u64
        },
    )
    .expect("Verlinde ring has consistent shape")
}

pub fn fibonacci_ring() -> FusionRing {
    FusionRing::new(
        "Fibonacci",
        vec!["1".into(), "tau".into()],
        0,
        vec![0, 1],
        vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 1]]],
    )
    .expect("Fibonacci ring")
}

pub fn ising_ring() -> FusionRing {
    let r = verlinde_sl2_ring(2);
    FusionRing::new(
        "Ising",
        vec!["1".into(), "sigma".into(), "eps".into()],
        0,
        vec![0, 1, 2],
        r.nested(),
    )
    .expect("Ising ring")
}

#[cfg(test)]
mod tests {
    use super::super::groups::{cyclic, symmetric3};
    use super::*;

    #[test]
    fn verlinde_rule_small_levels() {
        let r1 = verlinde_sl2_ring(1);
        assert_eq!(r1.n(1, 1, 0), 1);
        assert!(r1.same_structure(&group_ring(&cyclic(2))));
        let r2 = verlinde_sl2_ring(2);
        assert_eq!(r2.product(1, 1), &[1, 0, 1]);
        for l in 0..=8 {
            assert!(verlinde_sl2_ring(l).is_valid(), "level {l}");
        }
    }

    #[test]
    fn ty_and_an() {
        let ty = ty_ring(&cyclic(2)).unwrap();
        assert!(ty.is_valid());
        assert!(matches!(ty_ring(&symmetric3()), Err(Error::NotAbelian)));
        let a = an_g_ring(1, &cyclic(2));
        assert_eq!(a.product(2, 2), &[1, 1, 1]);
        assert!(a.is_valid());
        assert!(an_g_ring(2, &symmetric3()).is_valid());
    }

    #[test]
    fn group_ring_of_s3_is_noncommutative() {
        let r = group_ring(&symmetric3());
        assert_eq!(r.rank(), 6);
        assert!(r.is_valid());
        assert!(!r.is_commutative());
    }
}
