//! The monomial curve `t^{m_0}, …, t^{m_n}` with `m_i = m0 + i·d`: its value
//! semigroup, the Gröbner basis of its defining ideal, the initial ideal
//! `inP`, and the generator sets of `(inP)^l` and its integral closure.

mod generators;
mod groebner;
mod params;
mod report;
mod semigroup;

pub use generators::{
    closure_h, normality_verdict, omega_generators, omega_set, rr_decomposition, NormalityReason, NormalityReport,
};
pub use groebner::{curve_order, groebner_basis, initial_ideal, initial_ideal_closed_form};
pub use params::{curve_params, CurveParameters, CurveSpec};
pub use report::{analyze, analyze_grid, run_grid, CurveGrid, CurveReport};
pub use semigroup::{semigroup_member, SemigroupTable};
