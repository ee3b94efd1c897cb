//! Exact checks of modular-category identities.
//!
//! Modular data is stored with the unnormalized S-matrix `s̃` (`s̃_00 = 1`,
//! `d_i = s̃_i0`, `D = Σ d_i^2`). Statements involving `√D` are recast as
//! statements about `D`, so every exact check stays inside `Q(ζ_n)`.

mod center;
mod checks;
mod data;
mod galois;

pub use center::{
    class_equation_check, fpdim_square_check, numobj_check, CenterDatum, CenterObject,
};
pub use checks::{
    dimension_bound_check, dimension_bound_check_tol, gauss_check, gauss_sum_and_charge,
    moddivi_check, unitarity_check, unitarity_check_tol, verify_s_axioms, verlinde_fusion,
    GaussSum,
};
pub use data::ModularData;
pub use galois::{galois_orbit_check, GaloisAction, GaloisElement};

use crate::report::{CheckResult, Exactness, Report, Status};

/// Every modular-data check in a fixed order.
pub fn full_report(md: &ModularData, tol: f64) -> Report {
    let mut checks = verify_s_axioms(md).checks;
    checks.push(match verlinde_fusion(md) {
        Ok(ring) => CheckResult::new("verlinde_fusion", Status::Pass, Exactness::Exact)
            .value("rank", ring.rank())
            .value(
                "fusion_rules",
                ring.to_string()
                    .lines()
                    .skip(1)
                    .map(str::trim)
                    .collect::<Vec<_>>(),
            ),
        Err(e) => CheckResult::new("verlinde_fusion", Status::Fail, Exactness::Exact)
            .witness(e.to_string()),
    });
    checks.push(unitarity_check_tol(md, tol));
    checks.push(gauss_check(md));
    checks.push(dimension_bound_check_tol(md, tol));
    checks.push(moddivi_check(md));
    checks.push(match galois_orbit_check(md) {
        Ok((c, _)) => c,
        Err(e) => {
            CheckResult::new("galois_action", Status::Fail, Exactness::Exact).witness(e.to_string())
        }
    });
    Report::new(md.name(), checks)
}
