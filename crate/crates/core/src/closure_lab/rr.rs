//! Colon chains `I^{k+1} : I^k` and bounded Ratliff-Rush verdicts.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::staircase::{HeightIndex, NONE};
use crate::monomial::{ExponentVector, MonomialIdeal};

/// Outcome of checking `I^{k+1} : I^k = I` for `k = 1, …, N`.
///
/// `ConfirmedUpTo(N)` is evidence, not a proof: equality at every tested
/// level does not force equality beyond it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RRVerdict {
    ConfirmedUpTo { horizon: u32 },
    /// `witness ∉ I` is a minimal generator of `I^{k+1} : I^k` for `k = level`,
    /// the first level at which the chain leaves `I`.
    Falsified { witness: ExponentVector, level: u32 },
}

impl RRVerdict {
    pub fn is_confirmed(&self) -> bool {
        matches!(self, RRVerdict::ConfirmedUpTo { .. })
    }
}

fn check_args(ideal: &MonomialIdeal, n: u32) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("ratliff-rush check"));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("horizon must be at least 1".into()));
    }
    Ok(())
}

/// `[I^{k+1} : I^k for k = 1, …, N]`. Each term is checked to contain `I`
/// and the term before it.
pub fn colon_chain(ideal: &MonomialIdeal, n: u32) -> Result<Vec<MonomialIdeal>> {
    check_args(ideal, n)?;
    let mut chain: Vec<MonomialIdeal> = Vec::with_capacity(n as usize);
    let mut lower = ideal.clone();
    for _ in 1..=n {
        let upper = lower.multiply(ideal)?;
        let term = upper.colon(&lower)?;
        let prev = chain.last().unwrap_or(ideal);
        if !prev.is_subset_of(&term)? {
            return Err(Error::CrossValidation("colon chain is not ascending".into()));
        }
        chain.push(term);
        lower = upper;
    }
    Ok(chain)
}

/// Bounded Ratliff-Rush test with a minimal witness on failure.
pub fn is_ratliff_rush_up_to(ideal: &MonomialIdeal, n: u32) -> Result<RRVerdict> {
    check_args(ideal, n)?;
    if ideal.is_unit() {
        return Ok(RRVerdict::ConfirmedUpTo { horizon: n });
    }
    let mut lower = ideal.clone();
    for k in 1..=n {
        let upper = lower.multiply(ideal)?;
        if let Some(witness) = escape_point(ideal, &lower, &upper)? {
            return Ok(RRVerdict::Falsified { witness, level: k });
        }
        lower = upper;
    }
    Ok(RRVerdict::ConfirmedUpTo { horizon: n })
}

/// A minimal generator of `upper : lower` outside `ideal`, if one exists.
///
/// The colon's generators lie in the box `B` of `upper`. Every point of
/// `B \ ideal` lies below a maximal one, and the colon is an up-set, so it
/// escapes `ideal` exactly when one of those maximal points (the outer
/// corners of `ideal` inside `B`) lies in it.
fn escape_point(ideal: &MonomialIdeal, lower: &MonomialIdeal, upper: &MonomialIdeal) -> Result<Option<ExponentVector>> {
    let n = ideal.num_vars();
    let bounds: Vec<u32> = upper.bounds().iter().zip(ideal.bounds()).map(|(a, b)| (*a).max(b)).collect();
    let (Some(mut base), Some(target)) = (HeightIndex::with_bounds(&bounds), HeightIndex::build(n, upper.generators()))
    else {
        let colon = upper.colon(lower)?;
        return Ok(colon.generators().iter().find(|g| !ideal.contains_unchecked(g)).cloned());
    };
    for g in ideal.generators() {
        base.insert(g);
    }
    base.close();

    let in_colon = |p: &[u32], probe: &mut Vec<u32>| {
        lower.generators().iter().all(|g| {
            for (i, q) in probe.iter_mut().enumerate() {
                *q = p[i] + g[i];
            }
            target.contains(probe)
        })
    };

    let axis = base.axis();
    let mut probe = vec![0u32; n];
    let mut side = vec![0u32; n];
    let mut found: Option<Vec<u32>> = None;
    base.for_each_cell(|_, u| {
        if found.is_some() {
            return;
        }
        let h = base.height(u);
        if h == 0 {
            return;
        }
        let top = if h == NONE { bounds[axis] } else { h - 1 };
        // Outer corner: raising any other coordinate inside the box enters I.
        side.copy_from_slice(u);
        let corner = (0..n).filter(|&j| j != axis).all(|j| {
            if u[j] >= bounds[j] {
                return true;
            }
            side[j] += 1;
            let above = base.height(&side);
            side[j] -= 1;
            above <= top
        });
        if !corner {
            return;
        }
        side[axis] = top;
        if in_colon(&side, &mut probe) {
            found = Some(side.clone());
        }
        side[axis] = 0;
    });

    let Some(mut p) = found else { return Ok(None) };
    // Walk down to a minimal element of the colon.
    loop {
        let mut moved = false;
        for i in 0..n {
            while p[i] > 0 {
                p[i] -= 1;
                if in_colon(&p, &mut probe) {
                    moved = true;
                } else {
                    p[i] += 1;
                    break;
                }
            }
        }
        if !moved {
            break;
        }
    }
    Ok(Some(ExponentVector::from(p)))
}
