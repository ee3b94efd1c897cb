use crate::{Error, Result};

/// A finite group given by its multiplication table on `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl Group {
    /// Checks closure, associativity, identity and inverses.
    pub fn from_table(
        name: impl Into<String>,
        labels: Vec<String>,
        table: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let n = table.len();
        let bad = |msg: String| Err(Error::NotAGroup(msg));
        if n == 0 {
            return bad("empty table".into());
        }
        if let Some(a) = table
            .iter()
            .position(|row| row.len() != n || row.iter().any(|&x| x >= n))
        {
            return bad(format!("row {a} is not a map into 0..{n}"));
        }
        let Some(e) = (0..n).find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g)) else {
            return bad("no identity element".into());
        };
        let mut inverse = Vec::with_capacity(n);
        for g in 0..n {
            match (0..n).find(|&h| table[g][h] == e && table[h][g] == e) {
                Some(h) => inverse.push(h),
                None => return bad(format!("element {g} has no inverse")),
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad(format!("({a}*{b})*{c} != {a}*({b}*{c})"));
                    }
                }
            }
        }
        let labels = if labels.is_empty() {
            (0..n).map(|g| g.to_string()).collect()
        } else {
            labels
        };
        if labels.len() != n {
            return bad(format!("{} labels for order {n}", labels.len()));
        }
        Ok(Group {
            name: name.into(),
            labels,
            table,
            identity: e,
            inverse,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }
}

pub fn cyclic(n: usize) -> Group {
    assert!(n > 0, "cyclic group of order 0");
    let labels = (0..n)
        .map(|k| match k {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{k}"),
        })
        .collect();
    let table = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    Group::from_table(format!("Z/{n}"), labels, table).expect("cyclic table is a group")
}

/// Direct product, with `(a, b)` at index `a * |H| + b`.
pub fn product(g: &Group, h: &Group) -> Group {
    let (m, n) = (g.order(), h.order());
    let mut labels = Vec::with_capacity(m * n);
    let mut table = vec![vec![0; m * n]; m * n];
    for a in 0..m {
        for b in 0..n {
            labels.push(format!("({},{})", g.labels[a], h.labels[b]));
            for c in 0..m {
                for d in 0..n {
                    table[a * n + b][c * n + d] = g.mul(a, c) * n + h.mul(b, d);
                }
            }
        }
    }
    Group::from_table(format!("{}x{}", g.name, h.name), labels, table).expect("product of groups")
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            out.push_str(&x.to_string());
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

/// The permutation group generated by `gens`, elements sorted so the
/// identity comes first. Composition is `(p q)(x) = p(q(x))`.
fn permutation_group(name: &str, gens: &[Vec<usize>]) -> Group {
    let degree = gens[0].len();
    let mut elems: Vec<Vec<usize>> = vec![(0..degree).collect()];
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let p: Vec<usize> = (0..degree).map(|x| g[elems[i][x]]).collect();
            if !elems.contains(&p) {
                elems.push(p);
            }
        }
        i += 1;
    }
    elems.sort();
    let index = |p: &Vec<usize>| elems.iter().position(|q| q == p).expect("closed");
    let table = elems
        .iter()
        .map(|p| {
            elems
                .iter()
                .map(|q| index(&(0..degree).map(|x| p[q[x]]).collect()))
                .collect()
        })
        .collect();
    let labels = elems.iter().map(|p| cycle_notation(p)).collect();
    Group::from_table(name, labels, table).expect("permutation group")
}

pub fn symmetric3() -> Group {
    permutation_group("S3", &[vec![1, 0, 2], vec![1, 2, 0]])
}

/// Symmetries of a square acting on its vertices.
pub fn dihedral4() -> Group {
    permutation_group("D4", &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]])
}

pub fn alternating4() -> Group {
    permutation_group("A4", &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
}

/// `{±1, ±i, ±j, ±k}` in that order.
pub fn quaternion8() -> Group {
    // units 0..4 = 1, i, j, k
    let unit_mul = |u: usize, v: usize| -> (bool, usize) {
        match (u, v) {
            (0, v) => (false, v),
            (u, 0) => (false, u),
            (u, v) if u == v => (true, 0),
            (u, v) => (!matches!((u, v), (1, 2) | (2, 3) | (3, 1)), 6 - u - v),
        }
    };
    let table = (0..8)
        .map(|a| {
            (0..8)
                .map(|b| {
                    let (neg, w) = unit_mul(a / 2, b / 2);
                    let sign = (a % 2 == 1) ^ (b % 2 == 1) ^ neg;
                    2 * w + sign as usize
                })
                .collect()
        })
        .collect();
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .map(String::from)
        .to_vec();
    Group::from_table("Q8", labels, table).expect("quaternion table")
}

/// Looks up `z<n>`, `z2xz2`, `s3`, `d4`, `q8` or `a4`.
pub fn group(name: &str) -> Result<Group> {
    match name {
        "s3" => Ok(symmetric3()),
        "d4" => Ok(dihedral4()),
        "q8" => Ok(quaternion8()),
        "a4" => Ok(alternating4()),
        "z2xz2" => Ok(product(&cyclic(2), &cyclic(2))),
        _ => name
            .strip_prefix('z')
            .and_then(|n| n.parse::<usize>().ok())
            .filter(|&n| (1..=64).contains(&n))
            .map(cyclic)
            .ok_or_else(|| Error::UnknownName(name.into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_commutativity() {
        assert_eq!(symmetric3().order(), 6);
        assert!(!symmetric3().is_abelian());
        assert_eq!(dihedral4().order(), 8);
        assert_eq!(alternating4().order(), 12);
        assert!(!quaternion8().is_abelian());
        assert!(product(&cyclic(2), &cyclic(3)).is_abelian());
        assert_eq!(symmetric3().identity(), 0);
    }

    #[test]
    fn quaternion_relations() {
        let q = quaternion8();
        let (i, j, k, m1) = (2, 4, 6, 1);
        assert_eq!(q.mul(i, i), m1);
        assert_eq!(q.mul(i, j), k);
        assert_eq!(q.mul(j, i), k + 1);
        // Q8 has a single involution
        assert_eq!((0..8).filter(|&g| g != 0 && q.mul(g, g) == 0).count(), 1);
    }

    #[test]
    fn rejects_non_groups() {
        let t = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(
            Group::from_table("x", vec![], t),
            Err(Error::NotAGroup(_))
        ));
        let t = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 1]];
        assert!(Group::from_table("x", vec![], t).is_err());
    }
}
