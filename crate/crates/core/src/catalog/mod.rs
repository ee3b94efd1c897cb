//! Bundled example rings, modular data, center data and modules.
//!
//! Entries are addressed as `name` or `name@key=value,...`, for example
//! `verlinde-sl2@l=3` or `an-z2@n=1`. Families:
//!
//! * rings: `trivial`, `fibonacci`, `ising`, `fib-x-fib`, `vec-<group>`,
//!   `rep-<table>`, `ty-<abelian group>`, `an-<group>@n=`, `verlinde-sl2@l=`
//! * modular data: `fibonacci-modular`, `yang-lee`, `ising-modular`,
//!   `sl2-modular@l=`
//! * center data: `rep_z2_double`, `rep_s3_double`, `vec_z2_double`,
//!   `ising_double`, `trivial_double`
//! * modules: `ising-pair`, `regular-<ring>`
//!
//! Groups are `z<n>`, `z2xz2`, `s3`, `d4`, `q8` and `a4`; character tables
//! exist for `z1`..`z8`, `s3`, `d4`, `q8` and `a4`.

mod groups;
mod modular;
mod rings;

use std::collections::BTreeMap;

use serde::Serialize;

pub use groups::{alternating4, cyclic, dihedral4, group, product, quaternion8, symmetric3, Group};
pub use modular::{fibonacci_modular, so3_dimension, verlinde_sl2_modular, yang_lee_modular};
pub use rings::{
    an_g_ring, fibonacci_ring, group_ring, ising_ring, rep_ring_from_characters, ty_ring,
    verlinde_sl2_ring, CharacterTable,
};

use crate::basedmodule::BasedModule;
use crate::fusionring::{tensor_product, FusionRing};
use crate::modulardata::{CenterDatum, ModularData};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Ring,
    Modular,
    CenterDatum,
    Module,
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Kind::Ring => "ring",
            Kind::Modular => "modular",
            Kind::CenterDatum => "center-datum",
            Kind::Module => "module",
        })
    }
}

#[derive(Clone, Debug)]
pub enum Payload {
    Ring(FusionRing),
    Modular(ModularData),
    CenterDatum(CenterDatum),
    Module(BasedModule),
}

impl Payload {
    /// The payload in its owning module's file format.
    pub fn to_json(&self) -> String {
        match self {
            Payload::Ring(r) => r.to_json(),
            Payload::Modular(m) => m.to_json(),
            Payload::CenterDatum(c) => c.to_json(),
            Payload::Module(m) => m.to_json(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub kind: Kind,
    pub parameters: BTreeMap<String, String>,
    pub payload: Payload,
    pub provenance: String,
}

/// One line of `catalog list`.
#[derive(Clone, Debug, Serialize)]
pub struct Listing {
    pub name: String,
    pub kind: Kind,
    pub provenance: &'static str,
    /// Known to fail a categorifiability test.
    pub obstructed: bool,
}

const TABLES: &[(&str, &str)] = &[
    ("z1", include_str!("../../data/character_tables/z1.json")),
    ("z2", include_str!("../../data/character_tables/z2.json")),
    ("z3", include_str!("../../data/character_tables/z3.json")),
    ("z4", include_str!("../../data/character_tables/z4.json")),
    ("z5", include_str!("../../data/character_tables/z5.json")),
    ("z6", include_str!("../../data/character_tables/z6.json")),
    ("z7", include_str!("../../data/character_tables/z7.json")),
    ("z8", include_str!("../../data/character_tables/z8.json")),
    ("s3", include_str!("../../data/character_tables/s3.json")),
    ("d4", include_str!("../../data/character_tables/d4.json")),
    ("q8", include_str!("../../data/character_tables/q8.json")),
    ("a4", include_str!("../../data/character_tables/a4.json")),
];

const CENTERS: &[(&str, &str)] = &[
    (
        "rep_z2_double",
        include_str!("../../data/center/rep_z2_double.json"),
    ),
    (
        "rep_s3_double",
        include_str!("../../data/center/rep_s3_double.json"),
    ),
    (
        "vec_z2_double",
        include_str!("../../data/center/vec_z2_double.json"),
    ),
    (
        "ising_double",
        include_str!("../../data/center/ising_double.json"),
    ),
    (
        "trivial_double",
        include_str!("../../data/center/trivial.json"),
    ),
];

const ISING_PAIR: &str = include_str!("../../data/modules/ising_pair.json");

/// A bundled character table by group name.
pub fn character_table(group: &str) -> Result<CharacterTable> {
    let (_, src) = TABLES
        .iter()
        .find(|(n, _)| *n == group)
        .ok_or_else(|| Error::UnknownName(group.into()))?;
    CharacterTable::from_json(src)
}

fn split_address(address: &str) -> Result<(&str, BTreeMap<String, String>)> {
    let (base, rest) = match address.split_once('@') {
        Some((b, r)) => (b, Some(r)),
        None => (address, None),
    };
    let mut params = BTreeMap::new();
    for kv in rest.into_iter().flat_map(|r| r.split(',')) {
        let (k, v) = kv.split_once('=').ok_or_else(|| {
            Error::Format(format!("parameter `{kv}` in `{address}` is not key=value"))
        })?;
        params.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok((base.trim(), params))
}

fn int_param(address: &str, params: &BTreeMap<String, String>, key: &str, max: u64) -> Result<u64> {
    let v = params
        .get(key)
        .ok_or_else(|| Error::Format(format!("`{address}` needs parameter {key}")))?;
    v.parse::<u64>().ok().filter(|&x| x <= max).ok_or_else(|| {
        Error::Format(format!(
            "parameter {key}={v} in `{address}` must be an integer <= {max}"
        ))
    })
}

fn expect_params(address: &str, params: &BTreeMap<String, String>, allowed: &[&str]) -> Result<()> {
    match params.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(Error::Format(format!(
            "`{address}` does not take parameter {k}"
        ))),
        None => Ok(()),
    }
}

fn ring_entry(
    base: &str,
    params: &BTreeMap<String, String>,
    address: &str,
) -> Result<Option<(FusionRing, String)>> {
    let take = |allowed: &[&str]| expect_params(address, params, allowed);
    let found: (FusionRing, String) = match base {
        "trivial" => {
            take(&[])?;
            (
                group_ring(&cyclic(1)).with_name("trivial"),
                "the rank-one ring".into(),
            )
        }
        "fibonacci" => {
            take(&[])?;
            (fibonacci_ring(), "Fibonacci rules tau^2 = 1 + tau".into())
        }
        "ising" => {
            take(&[])?;
            (
                ising_ring(),
                "Ising rules sigma^2 = 1 + eps, eps^2 = 1".into(),
            )
        }
        "fib-x-fib" => {
            take(&[])?;
            let f = fibonacci_ring();
            (
                tensor_product(&f, &f)?,
                "tensor square of the Fibonacci ring".into(),
            )
        }
        "verlinde-sl2" => {
            take(&["l"])?;
            let l = int_param(address, params, "l", 64)? as usize;
            (
                verlinde_sl2_ring(l),
                format!("sl2 fusion rules at level {l}"),
            )
        }
        _ => {
            let Some((family, g)) = base.split_once('-') else {
                return Ok(None);
            };
            match family {
                "vec" => {
                    take(&[])?;
                    (
                        group_ring(&group(g)?),
                        format!("group ring of {}", group(g)?.name()),
                    )
                }
                "rep" => {
                    take(&[])?;
                    let t = character_table(g)?;
                    let note = format!(
                        "representation ring from the bundled {} character table",
                        t.group
                    );
                    (rep_ring_from_characters(&t)?, note)
                }
                "ty" => {
                    take(&[])?;
                    (
                        ty_ring(&group(g)?)?,
                        "Tambara-Yamagami rules X^2 = sum of group elements".into(),
                    )
                }
                "an" => {
                    take(&["n"])?;
                    let n = int_param(address, params, "n", 1000)?;
                    (
                        an_g_ring(n, &group(g)?),
                        format!("A_n(G) rules X^2 = {n}X + sum of group elements"),
                    )
                }
                _ => return Ok(None),
            }
        }
    };
    Ok(Some(found))
}

/// Resolves a catalog address to an entry.
pub fn entry(address: &str) -> Result<CatalogEntry> {
    let (base, params) = split_address(address)?;
    let make = |kind, payload, provenance: String| CatalogEntry {
        name: address.trim().to_string(),
        kind,
        parameters: params.clone(),
        payload,
        provenance,
    };
    if let Some((r, note)) = ring_entry(base, &params, address)? {
        return Ok(make(Kind::Ring, Payload::Ring(r), note));
    }
    let no_params = || expect_params(address, &params, &[]);
    match base {
        "fibonacci-modular" => {
            no_params()?;
            Ok(make(
                Kind::Modular,
                Payload::Modular(fibonacci_modular()),
                "Fibonacci modular data".into(),
            ))
        }
        "yang-lee" => {
            no_params()?;
            let note =
                "Yang-Lee data: Galois image of Fibonacci with D = (5-sqrt5)/2, sign(s_00) = -1";
            Ok(make(
                Kind::Modular,
                Payload::Modular(yang_lee_modular()),
                note.into(),
            ))
        }
        "ising-modular" => {
            no_params()?;
            let md = verlinde_sl2_modular(2)?.with_name("Ising");
            Ok(make(
                Kind::Modular,
                Payload::Modular(md),
                "sl2 level 2 modular data".into(),
            ))
        }
        "sl2-modular" => {
            expect_params(address, &params, &["l"])?;
            let l = int_param(address, &params, "l", 24)? as usize;
            let md = verlinde_sl2_modular(l)?;
            Ok(make(
                Kind::Modular,
                Payload::Modular(md),
                format!("sl2 modular data at level {l}"),
            ))
        }
        "ising-pair" => {
            no_params()?;
            let m = BasedModule::from_json(ISING_PAIR)?;
            Ok(make(
                Kind::Module,
                Payload::Module(m),
                "two-element Ising module, eps acting trivially".into(),
            ))
        }
        _ => {
            if let Some(ring_name) = base.strip_prefix("regular-") {
                let mut inner = ring_name.to_string();
                if address.contains('@') {
                    inner = format!(
                        "{inner}@{}",
                        address.split_once('@').map(|x| x.1).unwrap_or("")
                    );
                }
                let r = ring(&inner)?;
                let note = format!("regular module of {}", r.name());
                return Ok(make(
                    Kind::Module,
                    Payload::Module(BasedModule::regular(&r)),
                    note,
                ));
            }
            let cd = center_datum(base)?;
            no_params()?;
            let note = format!("center data over {}", cd.ring.name());
            Ok(make(Kind::CenterDatum, Payload::CenterDatum(cd), note))
        }
    }
}

fn wrong_kind(address: &str, want: Kind, got: Kind) -> Error {
    Error::UnknownName(format!("{address} (a {got} entry, not a {want})"))
}

/// A catalog ring by address.
pub fn ring(address: &str) -> Result<FusionRing> {
    match entry(address)? {
        CatalogEntry {
            payload: Payload::Ring(r),
            ..
        } => Ok(r),
        e => Err(wrong_kind(address, Kind::Ring, e.kind)),
    }
}

/// Catalog modular data by address.
pub fn modular_data(address: &str) -> Result<ModularData> {
    match entry(address)? {
        CatalogEntry {
            payload: Payload::Modular(m),
            ..
        } => Ok(m),
        e => Err(wrong_kind(address, Kind::Modular, e.kind)),
    }
}

/// Bundled center data; `trivial` is accepted for `trivial_double`.
pub fn center_datum(name: &str) -> Result<CenterDatum> {
    let name = if name == "trivial" {
        "trivial_double"
    } else {
        name
    };
    let (_, src) = CENTERS
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownName(name.into()))?;
    CenterDatum::from_json(src)
}

/// A catalog module by address.
pub fn module(address: &str) -> Result<BasedModule> {
    match entry(address)? {
        CatalogEntry {
            payload: Payload::Module(m),
            ..
        } => Ok(m),
        e => Err(wrong_kind(address, Kind::Module, e.kind)),
    }
}

const RING_NAMES: &[&str] = &[
    "trivial",
    "fibonacci",
    "ising",
    "fib-x-fib",
    "vec-z2",
    "vec-z3",
    "vec-z4",
    "vec-z5",
    "vec-z6",
    "vec-z9",
    "vec-z2xz2",
    "vec-s3",
    "vec-d4",
    "vec-q8",
    "vec-a4",
    "rep-z1",
    "rep-z2",
    "rep-z3",
    "rep-z4",
    "rep-z5",
    "rep-z6",
    "rep-z7",
    "rep-z8",
    "rep-s3",
    "rep-d4",
    "rep-q8",
    "rep-a4",
    "ty-z2",
    "ty-z3",
    "ty-z4",
    "ty-z2xz2",
    "an-z1@n=1",
    "an-z2@n=1",
    "an-z3@n=1",
    "an-z2@n=2",
];

const OBSTRUCTED: &[&str] = &["an-z3@n=1"];

/// Concrete ring addresses in the catalog, including representative
/// parameter values for the families.
pub fn ring_names() -> Vec<String> {
    let mut names: Vec<String> = RING_NAMES.iter().map(|s| s.to_string()).collect();
    names.extend((0..=8).map(|l| format!("verlinde-sl2@l={l}")));
    names
}

pub fn modular_names() -> Vec<String> {
    let mut names = vec!["fibonacci-modular".to_string(), "yang-lee".into()];
    names.extend((1..=8).map(|l| format!("sl2-modular@l={l}")));
    names
}

pub fn center_names() -> Vec<String> {
    CENTERS.iter().map(|(n, _)| n.to_string()).collect()
}

pub fn module_names() -> Vec<String> {
    vec![
        "ising-pair".into(),
        "regular-fibonacci".into(),
        "regular-ising".into(),
    ]
}

/// Every concrete entry without building its payload.
pub fn list() -> Vec<Listing> {
    let ring_note = |n: &str| -> &'static str {
        match n.split(['-', '@']).next().unwrap_or("") {
            "vec" => "group ring",
            "rep" => "representation ring from a bundled character table",
            "ty" => "Tambara-Yamagami ring",
            "an" => "A_n(G) ring",
            "verlinde" => "sl2 Verlinde fusion rules",
            "fib" => "tensor square of Fibonacci",
            _ => "fusion rules",
        }
    };
    let mut out: Vec<Listing> = ring_names()
        .into_iter()
        .map(|n| Listing {
            provenance: ring_note(&n),
            obstructed: OBSTRUCTED.contains(&n.as_str()),
            name: n,
            kind: Kind::Ring,
        })
        .collect();
    for n in modular_names() {
        let provenance = match n.as_str() {
            "yang-lee" => "Galois image of Fibonacci, D = (5-sqrt5)/2",
            "fibonacci-modular" => "Fibonacci modular data",
            _ => "sl2 modular data",
        };
        out.push(Listing {
            name: n,
            kind: Kind::Modular,
            provenance,
            obstructed: false,
        });
    }
    for n in center_names() {
        out.push(Listing {
            name: n,
            kind: Kind::CenterDatum,
            provenance: "center dimensions and unit multiplicities",
            obstructed: false,
        });
    }
    for n in module_names() {
        out.push(Listing {
            name: n,
            kind: Kind::Module,
            provenance: "based module",
            obstructed: false,
        });
    }
    out
}
