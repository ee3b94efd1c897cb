use std::collections::BTreeSet;

use serde::Serialize;

use super::FusionRing;
use crate::{Error, Result};

/// `z = Σ_j Σ_i b_i b_j b_i*`, a central element with strictly positive
/// coefficients.
pub fn central_element_z(ring: &FusionRing) -> Result<Vec<u64>> {
    ring.ensure_valid()?;
    let r = ring.rank();
    let mut z = vec![0u64; r];
    for i in 0..r {
        for j in 0..r {
            let left = ring.product(i, j).to_vec();
            let term = ring.mul_elements(&left, &ring.basis_vector(ring.dual(i)));
            for (acc, t) in z.iter_mut().zip(term) {
                *acc += t;
            }
        }
    }
    for a in 0..r {
        let b = ring.basis_vector(a);
        if ring.mul_elements(&b, &z) != ring.mul_elements(&z, &b) {
            return Err(Error::InternalConsistency(format!(
                "z does not commute with {}",
                ring.label(a)
            )));
        }
    }
    if let Some(k) = z.iter().position(|&c| c == 0) {
        return Err(Error::InternalConsistency(format!(
            "z has zero coefficient at {}",
            ring.label(k)
        )));
    }
    Ok(z)
}

/// Closes `seeds ∪ {unit}` under products and duals.
fn close(ring: &FusionRing, seeds: impl IntoIterator<Item = usize>) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = seeds.into_iter().collect();
    set.insert(ring.unit());
    loop {
        let mut grown = set.clone();
        for &i in &set {
            grown.insert(ring.dual(i));
            for &j in &set {
                grown.extend(ring.support(i, j));
            }
        }
        if grown.len() == set.len() {
            return set;
        }
        set = grown;
    }
}

/// Smallest sub-basis containing `seeds` and the unit, closed under products
/// and duals.
pub fn subring_generated(ring: &FusionRing, seeds: &[usize]) -> Vec<usize> {
    close(ring, seeds.iter().copied().filter(|&s| s < ring.rank()))
        .into_iter()
        .collect()
}

/// Whether `set` contains the unit and is closed under products and duals.
pub fn is_closed(ring: &FusionRing, set: &[usize]) -> bool {
    let s: BTreeSet<usize> = set.iter().copied().collect();
    s.contains(&ring.unit())
        && s.iter().all(|&i| s.contains(&ring.dual(i)))
        && s.iter().all(|&i| {
            s.iter()
                .all(|&j| ring.support(i, j).all(|k| s.contains(&k)))
        })
}

/// The sub-basis generated by everything occurring in some `b_i b_i*`.
pub fn adjoint_subring(ring: &FusionRing) -> Result<Vec<usize>> {
    ring.ensure_valid()?;
    let r = ring.rank();
    let seeds: Vec<usize> = (0..r).flat_map(|i| ring.support(i, ring.dual(i))).collect();
    Ok(close(ring, seeds).into_iter().collect())
}

/// A grading of the basis by a finite group given by its multiplication
/// table on component indices. Component 0 contains the unit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Grading {
    /// Always `"ring-level"`: the grading is computed from the fusion rules
    /// alone.
    pub scope: &'static str,
    pub group_order: usize,
    pub group_table: Vec<Vec<usize>>,
    pub assignment: Vec<usize>,
    pub components: Vec<Vec<usize>>,
}

impl Grading {
    pub fn is_trivial(&self) -> bool {
        self.group_order == 1
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.group_order;
        (0..g).all(|a| (0..g).all(|b| self.group_table[a][b] == self.group_table[b][a]))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.group_table[x][a];
            k += 1;
        }
        k
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.group_order).any(|a| self.element_order(a) == self.group_order)
    }
}

/// The ring-level universal grading: `i ~ j` when `b_j` occurs in `b_i a`
/// for some `a` in the adjoint subring. Fails with `NotAGrading` when the
/// classes do not multiply like a group.
pub fn universal_grading(ring: &FusionRing) -> Result<Grading> {
    let ad = adjoint_subring(ring)?;
    let r = ring.rank();
    let mut parent: Vec<usize> = (0..r).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while p[root] != root {
            root = p[root];
        }
        let mut y = x;
        while p[y] != root {
            let next = p[y];
            p[y] = root;
            y = next;
        }
        root
    }
    for i in 0..r {
        for &a in &ad {
            for j in ring.support(i, a).collect::<Vec<_>>() {
                let (x, y) = (find(&mut parent, i), find(&mut parent, j));
                if x != y {
                    parent[x.max(y)] = x.min(y);
                }
            }
        }
    }
    // number components by first appearance, starting from the unit
    let mut order: Vec<usize> = vec![ring.unit()];
    order.extend((0..r).filter(|&i| i != ring.unit()));
    let mut root_to_comp = vec![usize::MAX; r];
    let mut assignment = vec![0usize; r];
    let mut count = 0;
    for &i in &order {
        let root = find(&mut parent, i);
        if root_to_comp[root] == usize::MAX {
            root_to_comp[root] = count;
            count += 1;
        }
        assignment[i] = root_to_comp[root];
    }
    let mut components = vec![Vec::new(); count];
    for i in 0..r {
        components[assignment[i]].push(i);
    }

    let mut table = vec![vec![usize::MAX; count]; count];
    for i in 0..r {
        for j in 0..r {
            for k in ring.support(i, j) {
                let (a, b, c) = (assignment[i], assignment[j], assignment[k]);
                if table[a][b] == usize::MAX {
                    table[a][b] = c;
                } else if table[a][b] != c {
                    return Err(Error::NotAGrading(format!(
                        "{} * {} meets components {} and {}",
                        ring.label(i),
                        ring.label(j),
                        table[a][b],
                        c
                    )));
                }
            }
        }
    }
    let grading = Grading {
        scope: "ring-level",
        group_order: count,
        group_table: table,
        assignment,
        components,
    };
    check_group(ring, &grading)?;
    Ok(grading)
}

fn check_group(ring: &FusionRing, g: &Grading) -> Result<()> {
    let n = g.group_order;
    let t = &g.group_table;
    let fail = |msg: String| Err(Error::NotAGrading(msg));
    for a in 0..n {
        if t[0][a] != a || t[a][0] != a {
            return fail(format!("component 0 is not an identity at {a}"));
        }
        let row: BTreeSet<usize> = t[a].iter().copied().collect();
        if row.len() != n || row.contains(&usize::MAX) {
            return fail(format!(
                "row {a} of the component table is not a permutation"
            ));
        }
        for b in 0..n {
            for c in 0..n {
                if t[t[a][b]][c] != t[a][t[b][c]] {
                    return fail(format!("components {a}, {b}, {c} do not associate"));
                }
            }
        }
    }
    for i in 0..ring.rank() {
        let (a, ad) = (g.assignment[i], g.assignment[ring.dual(i)]);
        if t[a][ad] != 0 {
            return fail(format!(
                "dual of {} is not in the inverse component",
                ring.label(i)
            ));
        }
    }
    Ok(())
}

/// Tensor product: basis of pairs `(i, j)` at index `i * rank(b) + j`,
/// multiplied componentwise.
pub fn tensor_product(a: &FusionRing, b: &FusionRing) -> Result<FusionRing> {
    let rb = b.rank();
    let r = a.rank() * rb;
    let labels = (0..r)
        .map(|x| format!("{}⊠{}", a.label(x / rb), b.label(x % rb)))
        .collect();
    let dual = (0..r)
        .map(|x| a.dual(x / rb) * rb + b.dual(x % rb))
        .collect();
    FusionRing::from_fn(
        format!("{} ⊠ {}", a.name(), b.name()),
        labels,
        a.unit() * rb + b.unit(),
        dual,
        r,
        |x, y, z| a.n(x / rb, y / rb, z / rb) * b.n(x % rb, y % rb, z % rb),
    )
}

/// Whether every basis element is invertible, i.e. `b_i b_i* = 1`.
pub fn is_pointed(ring: &FusionRing) -> bool {
    let unit = ring.basis_vector(ring.unit());
    (0..ring.rank()).all(|i| ring.product(i, ring.dual(i)) == unit.as_slice())
}
