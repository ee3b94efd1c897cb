//! Exact arithmetic: rationals, cyclotomic fields, integer polynomials and
//! certified real algebraic numbers.
//!
//! Cyclotomic numbers carry their own conductor `n`; binary operations embed
//! both operands into `Q(ζ_lcm)`. Conductors are never minimized implicitly,
//! see [`CyclotomicNumber::minimize_conductor`].

mod algebraic;
mod charpoly;
mod cyclotomic;
mod lift;
mod linalg;
pub mod mp;
mod poly;
mod rational;
pub mod roots;

pub use algebraic::{perron_root, AlgebraicReal};
pub use charpoly::char_poly;
pub(crate) use charpoly::char_poly_rational;
pub use cyclotomic::{
    cyclo_arith, cyclotomic_polynomial, euler_phi, galois_conjugates, is_algebraic_integer,
    CycloOp, CyclotomicNumber,
};
pub use lift::{cyclotomic_lift, lift_natural, quadratic_conductor, sqrt_integer_in};
pub(crate) use linalg::SimpleExtension;
pub use linalg::{solve_rational, IntMatrix};
pub use poly::{IntPolynomial, RatPoly};
pub use rational::{parse_rational, rat, rational_to_strings, BigRational};
