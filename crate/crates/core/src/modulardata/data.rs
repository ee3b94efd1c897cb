use serde::{Deserialize, Serialize};

use crate::numberfield::{BigRational, CyclotomicNumber};
use crate::{Error, Result};

/// Modular data with unnormalized S-matrix `s̃` (`s̃_00 = 1`), twists
/// `θ_i = ζ_{t_order}^{t_i}` and a duality involution. Index 0 is the unit.
#[derive(Clone, Debug, PartialEq)]
pub struct ModularData {
    name: String,
    conductor: u64,
    sign_s00: i8,
    s_tilde: Vec<Vec<CyclotomicNumber>>,
    t_order: u64,
    t_exponents: Vec<u64>,
    dual: Vec<usize>,
    dims: Vec<CyclotomicNumber>,
    global_dim: CyclotomicNumber,
}

fn default_sign() -> i8 {
    1
}

fn default_name() -> String {
    "modular data".into()
}

#[derive(Serialize, Deserialize)]
struct ModularFile {
    #[serde(default = "default_name")]
    name: String,
    rank: usize,
    conductor: u64,
    #[serde(default = "default_sign")]
    sign_s00: i8,
    s_tilde: Vec<Vec<CyclotomicNumber>>,
    t_order: u64,
    t_exponents: Vec<u64>,
    dual: Vec<usize>,
}

impl ModularData {
    /// Checks the structural invariants: square shape, `s̃_00 = 1`,
    /// real nonzero `d_i = s̃_i0`, `θ_0 = 1`, an involutive dual and `D != 0`.
    pub fn new(
        name: impl Into<String>,
        conductor: u64,
        sign_s00: i8,
        s_tilde: Vec<Vec<CyclotomicNumber>>,
        t_order: u64,
        t_exponents: Vec<u64>,
        dual: Vec<usize>,
    ) -> Result<Self> {
        let r = s_tilde.len();
        let bad = |msg: String| Err(Error::Format(msg));
        if r == 0 {
            return bad("rank must be positive".into());
        }
        if s_tilde.iter().any(|row| row.len() != r) {
            return bad(format!("s_tilde is not {r}x{r}"));
        }
        if t_exponents.len() != r || dual.len() != r {
            return bad(format!("t_exponents and dual must have length {r}"));
        }
        if conductor == 0 || t_order == 0 {
            return bad("conductor and t_order must be positive".into());
        }
        if sign_s00 != 1 && sign_s00 != -1 {
            return bad(format!("sign_s00 must be 1 or -1, got {sign_s00}"));
        }
        if !s_tilde[0][0].is_one() {
            return bad("s_tilde[0][0] must be 1".into());
        }
        if t_exponents[0] % t_order != 0 {
            return bad("theta_0 must be 1".into());
        }
        if let Some(i) = (0..r).find(|&i| dual[i] >= r || dual[dual[i]] != i) {
            return bad(format!("dual is not an involution at {i}"));
        }
        let dims: Vec<CyclotomicNumber> = (0..r).map(|i| s_tilde[i][0].clone()).collect();
        if let Some(i) = dims.iter().position(|d| d.is_zero() || !d.is_real()) {
            return bad(format!("d_{i} = s_tilde[{i}][0] must be real and nonzero"));
        }
        let global_dim = dims
            .iter()
            .fold(CyclotomicNumber::zero(1), |acc, d| &acc + &(d * d));
        if global_dim.is_zero() {
            return bad("global dimension vanishes".into());
        }
        Ok(ModularData {
            name: name.into(),
            conductor,
            sign_s00,
            s_tilde,
            t_order,
            t_exponents: t_exponents.into_iter().map(|t| t % t_order).collect(),
            dual,
            dims,
            global_dim,
        })
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let f: ModularFile = serde_json::from_str(s)?;
        if f.rank != f.s_tilde.len() {
            return Err(Error::Format(format!(
                "rank {} disagrees with s_tilde of size {}",
                f.rank,
                f.s_tilde.len()
            )));
        }
        Self::new(
            f.name,
            f.conductor,
            f.sign_s00,
            f.s_tilde,
            f.t_order,
            f.t_exponents,
            f.dual,
        )
    }

    pub fn to_json(&self) -> String {
        let f = ModularFile {
            name: self.name.clone(),
            rank: self.rank(),
            conductor: self.conductor,
            sign_s00: self.sign_s00,
            s_tilde: self.s_tilde.clone(),
            t_order: self.t_order,
            t_exponents: self.t_exponents.clone(),
            dual: self.dual.clone(),
        };
        serde_json::to_string_pretty(&f).expect("modular data serializes")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn rank(&self) -> usize {
        self.s_tilde.len()
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn sign_s00(&self) -> i8 {
        self.sign_s00
    }

    pub fn s(&self, i: usize, j: usize) -> &CyclotomicNumber {
        &self.s_tilde[i][j]
    }

    pub fn s_tilde(&self) -> &[Vec<CyclotomicNumber>] {
        &self.s_tilde
    }

    pub fn t_order(&self) -> u64 {
        self.t_order
    }

    pub fn t_exponents(&self) -> &[u64] {
        &self.t_exponents
    }

    pub fn theta(&self, i: usize) -> CyclotomicNumber {
        CyclotomicNumber::zeta_pow(self.t_order, self.t_exponents[i] as i64)
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    /// `d_i = s̃_{i0}`.
    pub fn dim(&self, i: usize) -> &CyclotomicNumber {
        &self.dims[i]
    }

    pub fn dims(&self) -> &[CyclotomicNumber] {
        &self.dims
    }

    /// `D = Σ d_i^2`.
    pub fn global_dim(&self) -> &CyclotomicNumber {
        &self.global_dim
    }

    /// Copy with one entry of `s̃` replaced (and its mirror when
    /// `symmetric`). The result is rechecked structurally.
    pub fn with_entry(
        &self,
        i: usize,
        j: usize,
        v: CyclotomicNumber,
        symmetric: bool,
    ) -> Result<Self> {
        let mut s = self.s_tilde.clone();
        s[i][j] = v.clone();
        if symmetric {
            s[j][i] = v;
        }
        Self::new(
            self.name.clone(),
            self.conductor,
            self.sign_s00,
            s,
            self.t_order,
            self.t_exponents.clone(),
            self.dual.clone(),
        )
    }

    /// Entry `s̃_ij` plus a rational offset, for building perturbed test data.
    pub fn perturbed(&self, i: usize, j: usize, offset: BigRational) -> Result<Self> {
        let v = self.s(i, j) + &CyclotomicNumber::from_rational(offset);
        self.with_entry(i, j, v, true)
    }
}
