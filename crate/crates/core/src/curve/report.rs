use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::generators::{closure_h, normality_verdict, omega_generators, NormalityReport};
use super::groebner::{curve_order, groebner_basis, initial_ideal};
use super::params::{curve_params, CurveParameters, CurveSpec};
use crate::closure_lab::{is_ratliff_rush_up_to, RRVerdict};
use crate::error::{Error, Result};
use crate::monomial::{buchberger_verify, ExponentVector, MonomialIdeal};

/// Every verdict for one curve and one power `l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveReport {
    pub spec: CurveSpec,
    pub power: u32,
    pub params: CurveParameters,
    /// `(first, second)` exponent pairs, first term leading.
    pub groebner: Vec<(ExponentVector, ExponentVector)>,
    pub buchberger: bool,
    #[serde(rename = "inP")]
    pub inp: MonomialIdeal,
    pub omega: MonomialIdeal,
    #[serde(rename = "H")]
    pub h: MonomialIdeal,
    /// Generators of H outside Ω.
    pub missing: Vec<ExponentVector>,
    pub normal: NormalityReport,
    pub rr_status: RRVerdict,
}

/// Builds every object for `spec` at power `l` and runs the bounded verdicts.
/// A Buchberger failure or a falsified Ratliff-Rush property is reported as
/// a cross-validation error.
pub fn analyze(spec: &CurveSpec, l: u32, horizon: u32) -> Result<CurveReport> {
    let params = curve_params(spec)?;
    let order = curve_order(spec);
    let basis = groebner_basis(spec)?;
    let buchberger = buchberger_verify(&basis, &order)?;
    if !buchberger {
        return Err(Error::CrossValidation(format!("Buchberger's criterion fails for {spec:?}")));
    }
    let groebner = basis
        .iter()
        .map(|b| {
            let lead = b.leading_term(&order)?;
            let other = if lead == b.first() { b.second() } else { b.first() };
            Ok((lead.clone(), other.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    let inp = initial_ideal(spec)?;
    let omega = omega_generators(spec, l)?;
    let h = closure_h(spec, l)?;
    let missing = h.generators().iter().filter(|g| !omega.contains_unchecked(g)).cloned().collect();
    let normal = normality_verdict(spec, l)?;
    let rr_status = is_ratliff_rush_up_to(&omega, horizon)?;
    if let RRVerdict::Falsified { witness, level } = &rr_status {
        return Err(Error::CrossValidation(format!(
            "(inP)^{l} of {spec:?} is not Ratliff-Rush: witness {witness:?} at level {level}"
        )));
    }
    Ok(CurveReport { spec: *spec, power: l, params, groebner, buchberger, inp, omega, h, missing, normal, rr_status })
}

/// Ranges of `n`, `m0`, `d` and `l`, written `n=2..5,m0=3..25,d=1..5,l=1..3`.
/// A single value `k` stands for `k..k`; omitted keys default to `l=1..1`
/// and are otherwise required.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveGrid {
    pub n: RangeInclusive<usize>,
    pub m0: RangeInclusive<u64>,
    pub d: RangeInclusive<u64>,
    pub l: RangeInclusive<u32>,
}

fn parse_range<T: FromStr + PartialOrd + Copy>(key: &str, s: &str) -> Result<RangeInclusive<T>> {
    let bad = || Error::Parse(format!("bad range `{s}` for `{key}`"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

impl FromStr for CurveGrid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (mut n, mut m0, mut d, mut l) = (None, None, None, None);
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) =
                part.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=range, got `{part}`")))?;
            match key.trim() {
                "n" => n = Some(parse_range(key, value)?),
                "m0" => m0 = Some(parse_range(key, value)?),
                "d" => d = Some(parse_range(key, value)?),
                "l" => l = Some(parse_range(key, value)?),
                other => return Err(Error::Parse(format!("unknown grid key `{other}`"))),
            }
        }
        let missing = |k: &str| Error::Parse(format!("grid is missing `{k}`"));
        let l: RangeInclusive<u32> = l.unwrap_or(1..=1);
        if *l.start() == 0 {
            return Err(Error::Parse("grid power l must be at least 1".into()));
        }
        Ok(CurveGrid { n: n.ok_or_else(|| missing("n"))?, m0: m0.ok_or_else(|| missing("m0"))?, d: d.ok_or_else(|| missing("d"))?, l })
    }
}

impl CurveGrid {
    /// Valid specs in the grid in ascending order; pairs violating `m0 > n`
    /// or `gcd(m0, d) = 1` are skipped.
    pub fn specs(&self) -> Vec<CurveSpec> {
        let mut out = Vec::new();
        for n in self.n.clone() {
            for m0 in self.m0.clone() {
                for d in self.d.clone() {
                    if let Ok(s) = CurveSpec::new(n, m0, d) {
                        out.push(s);
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// `(spec, l)` jobs in ascending order.
    pub fn jobs(&self) -> Vec<(CurveSpec, u32)> {
        self.specs().into_iter().flat_map(|s| self.l.clone().map(move |l| (s, l))).collect()
    }
}

/// `f` on every grid job in parallel; results come back in job order.
pub fn run_grid<T: Send>(grid: &CurveGrid, f: impl Fn(&CurveSpec, u32) -> T + Sync) -> Vec<((CurveSpec, u32), T)> {
    grid.jobs().into_par_iter().map(|(s, l)| ((s, l), f(&s, l))).collect()
}

/// [`analyze`] over the grid; the first error in job order is returned.
pub fn analyze_grid(grid: &CurveGrid, horizon: u32) -> Result<Vec<CurveReport>> {
    run_grid(grid, |s, l| analyze(s, l, horizon)).into_iter().map(|(_, r)| r).collect()
}
