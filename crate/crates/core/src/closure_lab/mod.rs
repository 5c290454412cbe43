//! Ratliff-Rush analysis of monomial ideals and the Γ-spread of
//! two-variable staircase ideals.

mod gamma;
mod rr;
mod staircase2d;

pub use gamma::{excluded_by_lemma, gamma_block, gamma_ideal, GammaSpec, Orientation};
pub use rr::{colon_chain, is_ratliff_rush_up_to, RRVerdict};
pub use staircase2d::{coro12_ideal, StaircaseIdeal2D};
