use serde::Serialize;

use super::checks::exact_check;
use super::ModularData;
use crate::numberfield::CyclotomicNumber;
use crate::report::{CheckResult, Evidence};
use crate::{Error, Result};

/// How `σ_m: ζ_n ↦ ζ_n^m` acts on the labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisElement {
    pub m: u64,
    /// `g(i)` for each label `i`.
    pub permutation: Vec<usize>,
    /// `ε_g(i) / ε_g(0)` for each label `i`.
    pub signs: Vec<i8>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GaloisAction {
    pub conductor: u64,
    pub elements: Vec<GaloisElement>,
}

impl GaloisAction {
    pub fn element(&self, m: u64) -> Option<&GaloisElement> {
        self.elements
            .iter()
            .find(|e| e.m == m % self.conductor.max(1))
    }
}

fn units(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![1];
    }
    (1..n)
        .filter(|&m| num_integer::Integer::gcd(&m, &n) == 1)
        .collect()
}

/// For every `σ_m` of `Q(ζ_n)` (`n` the declared conductor), finds the
/// permutation `g` of labels with `σ_m(s̃_ij / s̃_0j) = s̃_{i g(j)} / s̃_{0 g(j)}`
/// and verifies exactly that `σ_m(s̃_ij) = ε_g(i) c_g s̃_{g(i) j}` for signs
/// `ε_g(i) = ±1` and a constant `c_g` (the unnormalized form of
/// `g(s_ij) = ε_g(i) s_{g(i)j}`; signs are reported relative to `ε_g(0)`).
/// Also checks that `g` commutes with duality, and that the permutations
/// compose as a group action.
pub fn galois_orbit_check(md: &ModularData) -> Result<(CheckResult, GaloisAction)> {
    let n = md.conductor();
    let r = md.rank();
    let mut failures = Vec::new();

    let mut outside = Vec::new();
    for i in 0..r {
        for j in 0..r {
            let c = md.s(i, j).minimize_conductor().conductor();
            if n % c != 0 {
                outside.push(format!("s_{i}{j} needs conductor {c}, declared {n}"));
            }
        }
    }
    if !outside.is_empty() {
        return Ok((
            exact_check("galois_action", outside, Vec::new()),
            GaloisAction {
                conductor: n,
                elements: Vec::new(),
            },
        ));
    }
    let s: Vec<Vec<CyclotomicNumber>> = (0..r)
        .map(|i| (0..r).map(|j| md.s(i, j).embed(n)).collect())
        .collect();

    let mut elements = Vec::new();
    let mut evidence = Vec::new();
    for m in units(n) {
        let gs: Vec<Vec<CyclotomicNumber>> = s
            .iter()
            .map(|row| row.iter().map(|x| x.galois(m)).collect())
            .collect();
        // columns: σ(s̃_ij) s̃_{0j'} = s̃_{ij'} σ(s̃_0j)
        let mut perm = vec![usize::MAX; r];
        for j in 0..r {
            let matches: Vec<usize> = (0..r)
                .filter(|&jp| (0..r).all(|i| &gs[i][j] * &s[0][jp] == &s[i][jp] * &gs[0][j]))
                .collect();
            if matches.len() != 1 {
                return Err(Error::NoConsistentPermutation { m });
            }
            perm[j] = matches[0];
        }
        let mut seen = vec![false; r];
        for &p in &perm {
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::NoConsistentPermutation { m });
            }
        }
        // rows: σ(s̃_ij) = λ_i s̃_{g(i) j} with λ_i = ±λ_0
        let mut lambdas = Vec::with_capacity(r);
        for i in 0..r {
            let Some(j0) = (0..r).find(|&j| !s[perm[i]][j].is_zero()) else {
                return Err(Error::NoConsistentPermutation { m });
            };
            let lambda = gs[i][j0].checked_div(&s[perm[i]][j0])?;
            for j in 0..r {
                let rhs = &lambda * &s[perm[i]][j];
                if gs[i][j] != rhs {
                    return Err(Error::NoConsistentPermutation { m });
                }
                evidence.push(Evidence::identity(&gs[i][j], &rhs));
            }
            lambdas.push(lambda);
        }
        let mut signs = Vec::with_capacity(r);
        for (i, l) in lambdas.iter().enumerate() {
            if l == &lambdas[0] {
                signs.push(1);
            } else if l == &-lambdas[0].clone() {
                signs.push(-1);
            } else {
                failures.push(format!(
                    "sigma_{m}: row {i} scales by {l}, not ±{}",
                    lambdas[0]
                ));
                signs.push(0);
            }
        }
        for i in 0..r {
            if perm[md.dual(i)] != md.dual(perm[i]) {
                failures.push(format!("sigma_{m}: g({i}*) != g({i})*"));
            }
        }
        elements.push(GaloisElement {
            m,
            permutation: perm,
            signs,
        });
    }

    // group action: g_{ab} = g_a ∘ g_b
    for a in &elements {
        for b in &elements {
            let ab = (a.m * b.m) % n.max(1);
            let ab = if n == 1 { 1 } else { ab };
            let Some(c) = elements.iter().find(|e| e.m == ab) else {
                failures.push(format!("no element for sigma_{ab}"));
                continue;
            };
            if (0..r).any(|j| c.permutation[j] != a.permutation[b.permutation[j]]) {
                failures.push(format!(
                    "sigma_{} sigma_{} does not act as sigma_{ab}",
                    a.m, b.m
                ));
            }
        }
    }
    let nontrivial = elements
        .iter()
        .filter(|e| e.permutation.iter().enumerate().any(|(i, &p)| i != p))
        .count();
    let check = exact_check("galois_action", failures, evidence)
        .value("automorphisms", elements.len())
        .value("nontrivial_permutations", nontrivial);
    Ok((
        check,
        GaloisAction {
            conductor: n,
            elements,
        },
    ))
}
