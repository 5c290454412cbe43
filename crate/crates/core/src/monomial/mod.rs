//! Exponent vectors, monomial ideals, weighted grevlex orders and binomial
//! reduction.

mod binomial;
mod ideal;
mod order;
pub(crate) mod staircase;
mod text;
mod vector;

pub use binomial::{buchberger_verify, leading_term, Binomial, Polynomial};
pub use ideal::{colon, minimalize, multiply, power, MonomialIdeal};
pub use order::WeightedGrevlexOrder;
pub use text::{format_ideal, format_monomial, ideal_from_json, ideal_to_json, parse_ideal, parse_monomial, VarBase};
pub use vector::{divides, ExponentVector};

#[cfg(test)]
pub(crate) use ideal::colon_by_quotients;
