//! The spread `Γ_{I,K}` of a two-variable staircase ideal into
//! `F[x_1, …, x_m, y]`.

use serde::{Deserialize, Serialize};

use super::staircase2d::StaircaseIdeal2D;
use crate::error::{check_dim, Error, Result};
use crate::monomial::{minimalize, ExponentVector, MonomialIdeal};

/// Which block of `s` x-variables carries the lower bound `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// `x_1, …, x_s`.
    Low,
    /// `x_{m−s+1}, …, x_m`.
    High,
}

impl Orientation {
    fn block(self, m: usize, s: usize) -> std::ops::Range<usize> {
        match self {
            Orientation::Low => 0..s,
            Orientation::High => m - s..m,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGammaSpec", into = "RawGammaSpec")]
pub struct GammaSpec {
    base: StaircaseIdeal2D,
    k: Vec<u32>,
    m: usize,
    s: usize,
    orientation: Orientation,
}

#[derive(Serialize, Deserialize)]
struct RawGammaSpec {
    pairs: Vec<(u32, u32)>,
    #[serde(rename = "K")]
    k: Vec<u32>,
    m: usize,
    s: usize,
    orientation: Orientation,
}

impl TryFrom<RawGammaSpec> for GammaSpec {
    type Error = Error;

    fn try_from(raw: RawGammaSpec) -> Result<Self> {
        GammaSpec::new(StaircaseIdeal2D::new(raw.pairs)?, raw.k, raw.m, raw.s, raw.orientation)
    }
}

impl From<GammaSpec> for RawGammaSpec {
    fn from(g: GammaSpec) -> Self {
        RawGammaSpec { pairs: g.base.pairs().to_vec(), k: g.k, m: g.m, s: g.s, orientation: g.orientation }
    }
}

impl GammaSpec {
    pub fn new(base: StaircaseIdeal2D, k: Vec<u32>, m: usize, s: usize, orientation: Orientation) -> Result<Self> {
        if k.len() != base.len() {
            return Err(Error::InvalidGamma(format!("{} corners but {} entries in K", base.len(), k.len())));
        }
        if m == 0 {
            return Err(Error::InvalidGamma("m must be positive".into()));
        }
        if s > m {
            return Err(Error::InvalidGamma(format!("s = {s} exceeds m = {m}")));
        }
        for (&(a, _), &ki) in base.pairs().iter().zip(&k) {
            if ki > a {
                return Err(Error::InvalidGamma(format!("k = {ki} exceeds a = {a}")));
            }
        }
        Ok(GammaSpec { base, k, m, s, orientation })
    }

    pub fn base(&self) -> &StaircaseIdeal2D {
        &self.base
    }

    pub fn k(&self) -> &[u32] {
        &self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Number of variables of the spread ideal: `m` x-variables then `y`.
    pub fn num_vars(&self) -> usize {
        self.m + 1
    }

    pub fn with_orientation(&self, orientation: Orientation) -> GammaSpec {
        GammaSpec { orientation, ..self.clone() }
    }

    /// Sum of the exponents of `delta` over the constrained block.
    pub fn block_sum(&self, delta: &ExponentVector) -> u32 {
        delta.coords()[self.orientation.block(self.m, self.s)].iter().sum()
    }
}

/// All `x_1^{t_1}⋯x_m^{t_m} y^b` with `Σ t_j = a` and block sum at least `k`,
/// in descending lexicographic order of `(t_1, …, t_m)`.
pub fn gamma_block(a: u32, b: u32, k: u32, m: usize, s: usize, orientation: Orientation) -> Result<Vec<ExponentVector>> {
    if k > a {
        return Err(Error::InvalidGamma(format!("k = {k} exceeds a = {a}")));
    }
    if m == 0 || s > m {
        return Err(Error::InvalidGamma(format!("need 0 ≤ s ≤ m and m ≥ 1, got m = {m}, s = {s}")));
    }
    let block = orientation.block(m, s);
    let mut out = Vec::new();
    let mut t = vec![0u32; m + 1];
    t[m] = b;
    compositions(a, 0, m, &mut t, &mut |t| {
        let sum: u32 = t[block.clone()].iter().sum();
        if sum >= k {
            out.push(ExponentVector::from(t));
        }
    });
    Ok(out)
}

/// Fills `t[pos..m]` with every composition of `rest`, largest leading part
/// first.
fn compositions(rest: u32, pos: usize, m: usize, t: &mut [u32], f: &mut impl FnMut(&[u32])) {
    if pos + 1 == m {
        t[pos] = rest;
        f(t);
        return;
    }
    for v in (0..=rest).rev() {
        t[pos] = v;
        compositions(rest - v, pos + 1, m, t, f);
    }
    t[pos] = 0;
}

/// `Γ_{I,K}` (low block) or `Γ′_{I,K}` (high block): the ideal generated by
/// every `Γ_{a_i, b_i, k_i}`.
pub fn gamma_ideal(spec: &GammaSpec) -> Result<MonomialIdeal> {
    let mut gens = Vec::new();
    for (&(a, b), &k) in spec.base.pairs().iter().zip(&spec.k) {
        gens.extend(gamma_block(a, b, k, spec.m, spec.s, spec.orientation)?);
    }
    minimalize(gens, spec.num_vars())
}

/// The exclusion certificate: some corner `j` satisfies `Σ t_i ≥ a_j` and
/// `b ≥ b_j`, and every such corner has block sum of `delta` below `k_j`.
pub fn excluded_by_lemma(delta: &ExponentVector, spec: &GammaSpec) -> Result<bool> {
    check_dim(spec.num_vars(), delta.len())?;
    let total: u64 = delta.coords()[..spec.m].iter().map(|&t| u64::from(t)).sum();
    let b = delta[spec.m];
    let block = spec.block_sum(delta);
    let mut any = false;
    for (&(aj, bj), &kj) in spec.base.pairs().iter().zip(&spec.k) {
        if total >= u64::from(aj) && b >= bj {
            if block >= kj {
                return Ok(false);
            }
            any = true;
        }
    }
    Ok(any)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{parse_ideal, VarBase};

    fn ev(c: &[u32]) -> ExponentVector {
        ExponentVector::from(c)
    }

    fn worked_example() -> GammaSpec {
        let base = StaircaseIdeal2D::new(vec![(8, 0), (7, 2), (6, 4), (5, 6), (4, 7), (1, 8), (0, 9)]).unwrap();
        GammaSpec::new(base, vec![3, 4, 5, 2, 0, 1, 0], 2, 1, Orientation::Low).unwrap()
    }

    #[test]
    fn blocks_of_the_worked_example() {
        let j1 = gamma_block(7, 2, 4, 2, 1, Orientation::Low).unwrap();
        assert_eq!(j1, vec![ev(&[7, 0, 2]), ev(&[6, 1, 2]), ev(&[5, 2, 2]), ev(&[4, 3, 2])]);
        let j2 = gamma_block(6, 4, 5, 2, 1, Orientation::Low).unwrap();
        assert_eq!(j2, vec![ev(&[6, 0, 4]), ev(&[5, 1, 4])]);
        let j0 = gamma_block(8, 0, 3, 2, 1, Orientation::Low).unwrap();
        assert_eq!(j0.len(), 6);
        assert_eq!(j0.last().unwrap(), &ev(&[3, 5, 0]));
    }

    #[test]
    fn unconstrained_block_lists_all_compositions() {
        let all = gamma_block(3, 1, 0, 3, 2, Orientation::High).unwrap();
        assert_eq!(all.len(), 10);
        assert!(gamma_block(2, 0, 3, 2, 1, Orientation::Low).is_err());
    }

    #[test]
    fn worked_example_generators() {
        let j = gamma_ideal(&worked_example()).unwrap();
        let listed = "x1^8, x1^7*x2, x1^6*x2^2, x1^5*x2^3, x1^4*x2^4, x1^3*x2^5,
            x1^7*x3^2, x1^6*x2*x3^2, x1^5*x2^2*x3^2, x1^4*x2^3*x3^2,
            x1^6*x3^4, x1^5*x2*x3^4,
            x1^5*x3^6, x1^4*x2*x3^6, x1^3*x2^2*x3^6, x1^2*x2^3*x3^6,
            x1^4*x3^7, x1^3*x2*x3^7, x1^2*x2^2*x3^7, x1*x2^3*x3^7, x2^4*x3^7,
            x1*x3^8, x3^9";
        let expected = parse_ideal(listed, VarBase::One, Some(3)).unwrap();
        assert!(j.equals(&expected).unwrap());
    }

    #[test]
    fn single_variable_spread_is_the_base() {
        let base = StaircaseIdeal2D::new(vec![(3, 0), (1, 1), (0, 4)]).unwrap();
        let spec = GammaSpec::new(base.clone(), vec![0, 0, 0], 1, 1, Orientation::Low).unwrap();
        assert!(gamma_ideal(&spec).unwrap().equals(&base.to_ideal()).unwrap());
    }

    #[test]
    fn spec_validation() {
        let base = StaircaseIdeal2D::new(vec![(2, 0), (0, 1)]).unwrap();
        assert!(GammaSpec::new(base.clone(), vec![3, 0], 2, 1, Orientation::Low).is_err());
        assert!(GammaSpec::new(base.clone(), vec![0], 2, 1, Orientation::Low).is_err());
        assert!(GammaSpec::new(base.clone(), vec![0, 0], 2, 3, Orientation::Low).is_err());
        assert!(GammaSpec::new(base, vec![0, 0], 0, 0, Orientation::Low).is_err());
    }

    #[test]
    fn json_shape() {
        let spec = worked_example();
        let s = serde_json::to_string(&spec).unwrap();
        assert_eq!(
            s,
            r#"{"pairs":[[8,0],[7,2],[6,4],[5,6],[4,7],[1,8],[0,9]],"K":[3,4,5,2,0,1,0],"m":2,"s":1,"orientation":"low"}"#
        );
        let back: GammaSpec = serde_json::from_str(&s).unwrap();
        assert_eq!(back, spec);
        let bad = r#"{"pairs":[[2,0],[0,1]],"K":[5,0],"m":2,"s":1,"orientation":"high"}"#;
        assert!(serde_json::from_str::<GammaSpec>(bad).is_err());
    }

    #[test]
    fn lemma_flags_grey_points_only() {
        let spec = worked_example();
        // x2^8: total 8 ≥ a_0 with x1-degree 0 < k_0 = 3.
        assert!(excluded_by_lemma(&ev(&[0, 8, 0]), &spec).unwrap());
        // A generator of J.
        assert!(!excluded_by_lemma(&ev(&[5, 1, 4]), &spec).unwrap());
        // Below the staircase: no corner applies.
        assert!(!excluded_by_lemma(&ev(&[1, 1, 1]), &spec).unwrap());
        assert!(excluded_by_lemma(&ev(&[1]), &spec).is_err());
    }
}
