use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal};

/// A monomial ideal `⟨x^{a_i} y^{b_i}⟩` in two variables, given by its
/// staircase corners with `a` strictly decreasing and `b` strictly
/// increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<(u32, u32)>", into = "Vec<(u32, u32)>")]
pub struct StaircaseIdeal2D {
    pairs: Vec<(u32, u32)>,
}

impl StaircaseIdeal2D {
    pub fn new(pairs: Vec<(u32, u32)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::InvalidGamma("staircase needs at least one corner".into()));
        }
        for w in pairs.windows(2) {
            let ((a0, b0), (a1, b1)) = (w[0], w[1]);
            if a1 >= a0 || b1 <= b0 {
                return Err(Error::InvalidGamma(format!(
                    "corners ({a0},{b0}), ({a1},{b1}) break the staircase condition"
                )));
            }
        }
        Ok(StaircaseIdeal2D { pairs })
    }

    /// Reads the staircase of a nonzero ideal in two variables `(x, y)`.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.num_vars() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, found: ideal.num_vars() });
        }
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal("staircase"));
        }
        let mut pairs: Vec<(u32, u32)> = ideal.generators().iter().map(|g| (g[0], g[1])).collect();
        pairs.sort_by(|p, q| q.0.cmp(&p.0));
        StaircaseIdeal2D::new(pairs)
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(2, self.pairs.iter().map(|&(a, b)| ExponentVector::from([a, b])))
            .expect("two coordinates")
    }
}

impl TryFrom<Vec<(u32, u32)>> for StaircaseIdeal2D {
    type Error = Error;

    fn try_from(pairs: Vec<(u32, u32)>) -> Result<Self> {
        StaircaseIdeal2D::new(pairs)
    }
}

impl From<StaircaseIdeal2D> for Vec<(u32, u32)> {
    fn from(s: StaircaseIdeal2D) -> Self {
        s.pairs
    }
}

/// The ideal `⟨x^a, x^c y^d, y^b⟩` (or `⟨x^a, y^b⟩` without a middle
/// generator), accepted only when `d/(a−c) ≥ b/a`, the hypothesis under
/// which every power is Ratliff-Rush.
pub fn coro12_ideal(a: u32, middle: Option<(u32, u32)>, b: u32) -> Result<MonomialIdeal> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument("a and b must be positive".into()));
    }
    let mut gens = vec![ExponentVector::from([a, 0]), ExponentVector::from([0, b])];
    if let Some((c, d)) = middle {
        if c >= a || d >= b {
            return Err(Error::InvalidArgument(format!("need a > c and b > d, got a={a} c={c} d={d} b={b}")));
        }
        if u64::from(d) * u64::from(a) < u64::from(b) * u64::from(a - c) {
            return Err(Error::InvalidArgument(format!("d/(a-c) = {d}/{} is below b/a = {b}/{a}", a - c)));
        }
        gens.push(ExponentVector::from([c, d]));
    }
    MonomialIdeal::new(2, gens)
}
