use super::rings::verlinde_sl2_ring;
use crate::modulardata::{verify_s_axioms, verlinde_fusion, ModularData};
use crate::numberfield::{BigRational, CyclotomicNumber};
use crate::report::Status;
use crate::{Error, Result};

const FIBONACCI: &str = include_str!("../../data/modular/fibonacci.json");
const YANG_LEE: &str = include_str!("../../data/modular/yang_lee.json");

/// `[a]_q = (ζ^a - ζ^{-a}) / (ζ - ζ^{-1})` for `ζ = ζ_n`.
fn q_number(n: u64, a: i64) -> CyclotomicNumber {
    let num = &CyclotomicNumber::zeta_pow(n, a) - &CyclotomicNumber::zeta_pow(n, -a);
    let den = &CyclotomicNumber::zeta_pow(n, 1) - &CyclotomicNumber::zeta_pow(n, -1);
    num.checked_div(&den)
        .expect("ζ - ζ^{-1} is nonzero for n > 2")
}

/// Modular data of `sl2` at level `l ≥ 1`:
/// `s̃_ij = sin(π(i+1)(j+1)/(l+2)) / sin(π/(l+2))` in `Q(ζ_{2(l+2)})` and
/// `θ_j = exp(πi j(j+2) / (2(l+2)))`.
///
/// The result is checked before it is returned: the S-axioms must hold and
/// the Verlinde formula must reproduce [`verlinde_sl2_ring`].
pub fn verlinde_sl2_modular(l: usize) -> Result<ModularData> {
    if l == 0 {
        return Err(Error::Format("sl2 modular data needs level l >= 1".into()));
    }
    let h = (l + 2) as u64;
    let n = 2 * h;
    let r = l + 1;
    let s = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| q_number(n, ((i + 1) * (j + 1)) as i64))
                .collect()
        })
        .collect();
    let t = (0..r).map(|j| (j * (j + 2)) as u64).collect();
    let md = ModularData::new(
        format!("sl2 level {l}"),
        n,
        1,
        s,
        4 * h,
        t,
        (0..r).collect(),
    )?;

    let axioms = verify_s_axioms(&md);
    if axioms.aggregate != Status::Pass {
        return Err(Error::InternalConsistency(format!(
            "sl2 level {l}: S-axioms fail\n{}",
            axioms.to_text()
        )));
    }
    let fusion = verlinde_fusion(&md)?;
    if !fusion.same_structure(&verlinde_sl2_ring(l)) {
        return Err(Error::InternalConsistency(format!(
            "sl2 level {l}: Verlinde formula does not reproduce the fusion rules"
        )));
    }
    Ok(md)
}

/// Fibonacci data: `d_τ = (1+√5)/2`, `θ_τ = ζ_5^2`.
pub fn fibonacci_modular() -> ModularData {
    ModularData::from_json(FIBONACCI).expect("bundled Fibonacci data")
}

/// Yang–Lee data, the Galois image of Fibonacci under `σ_2`:
/// `d_τ = (1-√5)/2`, `θ_τ = ζ_5^4`, `D = (5-√5)/2`. The sign of `s_00` is
/// fixed to `-1`, which puts the central charge at `c ≡ -22/5 (mod 8)`.
pub fn yang_lee_modular() -> ModularData {
    ModularData::from_json(YANG_LEE).expect("bundled Yang-Lee data")
}

/// `d(h) = h / (4 sin^2(π/h))` in `Q(ζ_{2h})`, using
/// `4 sin^2(π/h) = 2 - ζ_h - ζ_h^{-1}`.
pub fn so3_dimension(h: u64) -> Result<CyclotomicNumber> {
    if h < 3 {
        return Err(Error::Format(format!(
            "so3_dimension needs h >= 3, got {h}"
        )));
    }
    let two = CyclotomicNumber::from_int(2);
    let den = &(&two - &CyclotomicNumber::zeta_pow(h, 1)) - &CyclotomicNumber::zeta_pow(h, -1);
    let v =
        CyclotomicNumber::from_rational(BigRational::from_integer(h.into())).checked_div(&den)?;
    Ok(v.embed(2 * h))
}
