//! The generating sets Ω of `(inP)^l` and H of its integral closure, the
//! normality verdict, and the spread decomposition of `(inP)^l`.

use serde::Serialize;

use super::groebner::initial_ideal;
use super::params::CurveSpec;
use crate::closure_lab::{gamma_ideal, GammaSpec, Orientation, StaircaseIdeal2D};
use crate::error::{Error, Result};
use crate::integral::{corollary_gens, for_each_monomial, integral_closure, is_integrally_closed, lambda};
use crate::monomial::{minimalize, ExponentVector, MonomialIdeal};

fn check_power(l: u32) -> Result<()> {
    if l == 0 {
        return Err(Error::InvalidArgument("power l must be at least 1".into()));
    }
    Ok(())
}

fn exponent_q(spec: &CurveSpec) -> Result<u32> {
    u32::try_from(spec.q_r().0).map_err(|_| Error::InvalidCurve("q exceeds exponent range".into()))
}

/// Every `x_0^0 · mid · x_t^{extra} · x_n^{top}` with `mid` of degree `deg` in
/// `x_1, …, x_{n−1}`.
fn stratum(n: usize, deg: u32, extra: Option<usize>, top: u32, out: &mut Vec<ExponentVector>) {
    for_each_monomial(n - 1, deg, |mid| {
        let mut v = Vec::with_capacity(n + 1);
        v.push(0);
        v.extend_from_slice(mid);
        v.push(top);
        if let Some(t) = extra {
            v[t] += 1;
        }
        out.push(ExponentVector::from(v));
    });
}

/// The literal set Ω, before any comparison with `(inP)^l`.
pub fn omega_set(spec: &CurveSpec, l: u32) -> Result<Vec<ExponentVector>> {
    check_power(l)?;
    let n = spec.n();
    let q = exponent_q(spec)?;
    let r = spec.q_r().1 as usize;
    let mut out = Vec::new();
    for c in (0..=2 * l).step_by(2) {
        let lc = lambda(c, q + 1, 2);
        stratum(n, 2 * l - c, None, lc, &mut out);
        if c >= 2 {
            for t in r..n {
                stratum(n, 2 * l - c, Some(t), lc - 1, &mut out);
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Ω as an ideal; checked to be an antichain equal to the minimal generators
/// of `(inP)^l`.
pub fn omega_generators(spec: &CurveSpec, l: u32) -> Result<MonomialIdeal> {
    let set = omega_set(spec, l)?;
    let count = set.len();
    let ideal = minimalize(set, spec.n() + 1)?;
    if ideal.len() != count {
        return Err(Error::CrossValidation(format!("Ω for {spec:?}, l = {l} is not an antichain")));
    }
    if !ideal.equals(&initial_ideal(spec)?.power(l))? {
        return Err(Error::CrossValidation(format!("Ω differs from (inP)^{l} for {spec:?}")));
    }
    Ok(ideal)
}

/// H, checked against the integral closure of `(inP)^l` and against the
/// corollary generators with `x_0` adjoined.
pub fn closure_h(spec: &CurveSpec, l: u32) -> Result<MonomialIdeal> {
    check_power(l)?;
    let n = spec.n();
    let q = exponent_q(spec)?;
    let mut gens = Vec::new();
    for e in 0..=2 * l {
        stratum(n, 2 * l - e, None, lambda(e, q + 1, 2), &mut gens);
    }
    let h = minimalize(gens, n + 1)?;
    let closure = integral_closure(&initial_ideal(spec)?.power(l))?;
    if !h.equals(&closure)? {
        return Err(Error::CrossValidation(format!("H differs from the closure of (inP)^{l} for {spec:?}")));
    }
    let corollary = corollary_gens(2, q + 1, n, l)?.insert_variable(0);
    if !h.equals(&corollary)? {
        return Err(Error::CrossValidation(format!("H differs from the corollary generators for {spec:?}")));
    }
    Ok(h)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NormalityReason {
    pub q: u64,
    pub r: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalityReport {
    pub normal: bool,
    pub reason: NormalityReason,
    /// `m0 = n + 1` or `m0 = 2n + 1`.
    pub alt_form: bool,
    /// Least `l ≤ l_check` with `(inP)^l` not integrally closed.
    pub witnesses_at: Option<u32>,
}

/// `inP` is normal iff `q ≤ 2` and `r = 1`, cross-checked by closing
/// `(inP)^l` for `l = 1, …, l_check`.
pub fn normality_verdict(spec: &CurveSpec, l_check: u32) -> Result<NormalityReport> {
    check_power(l_check)?;
    let (q, r) = spec.q_r();
    let n = spec.n() as u64;
    let normal = q <= 2 && r == 1;
    let alt_form = spec.m0() == n + 1 || spec.m0() == 2 * n + 1;
    if alt_form != normal {
        return Err(Error::CrossValidation(format!("m0 reformulation disagrees for {spec:?}")));
    }
    let inp = initial_ideal(spec)?;
    let mut witnesses_at = None;
    for l in 1..=l_check {
        let closed = is_integrally_closed(&inp.power(l))?.closed;
        if closed != normal {
            return Err(Error::CrossValidation(format!(
                "(inP)^{l} closed = {closed} but the criterion says normal = {normal} for {spec:?}"
            )));
        }
        if !closed && witnesses_at.is_none() {
            witnesses_at = Some(l);
        }
    }
    Ok(NormalityReport { normal, reason: NormalityReason { q, r }, alt_form, witnesses_at })
}

/// `(inP)^l` as `Γ′_{I^l, K}` over `F[x_1, …, x_{n−1}, x_n]` with
/// `I = ⟨x², x y^q, y^{q+1}⟩`; the result is checked by rebuilding
/// `(inP)^l` with `x_0` adjoined.
pub fn rr_decomposition(spec: &CurveSpec, l: u32) -> Result<GammaSpec> {
    check_power(l)?;
    let q = exponent_q(spec)?;
    let n = spec.n();
    let r = spec.q_r().1 as usize;
    let mut pairs = Vec::new();
    let mut k = Vec::new();
    for i in 0..=2 * l {
        let b = if i % 2 == 0 { i * (q + 1) / 2 } else { q * (i + 1) / 2 + (i - 1) / 2 };
        pairs.push((2 * l - i, b));
        k.push(i % 2);
    }
    let base = StaircaseIdeal2D::new(pairs)?;
    let classical = MonomialIdeal::from_rows(2, &[&[2, 0], &[1, q], &[0, q + 1]])?.power(l);
    if base.len() != 2 * l as usize + 1 || !base.to_ideal().equals(&classical)? {
        return Err(Error::CrossValidation(format!("base pairs differ from ⟨x², xy^q, y^(q+1)⟩^{l}")));
    }
    let gamma = GammaSpec::new(base, k, n - 1, n - r, Orientation::High)?;
    let rebuilt = gamma_ideal(&gamma)?.insert_variable(0);
    if !rebuilt.equals(&initial_ideal(spec)?.power(l))? {
        return Err(Error::CrossValidation(format!("spread decomposition differs from (inP)^{l} for {spec:?}")));
    }
    Ok(gamma)
}
