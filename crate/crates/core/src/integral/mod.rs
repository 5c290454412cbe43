//! Integral closure of monomial ideals through their Newton polyhedra,
//! normality over bounded powers, and the block ideals `I(α)`.

mod lp;
mod newton;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::staircase::HeightIndex;
use crate::monomial::{ExponentVector, MonomialIdeal};

pub use lp::{np_member, np_witness, ConvexWitness, RationalPoint};
pub use newton::{Facet, NewtonPolyhedron};

/// Whether an ideal equals its integral closure, with the closure generators
/// it lacks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureVerdict {
    pub closed: bool,
    pub missing: Vec<ExponentVector>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum NormalityVerdict {
    NormalUpTo { horizon: u32 },
    /// `I^power` is the first power that is not integrally closed.
    FailsAt { power: u32, witnesses: Vec<ExponentVector> },
}

impl NormalityVerdict {
    pub fn is_normal(&self) -> bool {
        matches!(self, NormalityVerdict::NormalUpTo { .. })
    }
}

/// Generators of the integral closure, read off the facets of the Newton
/// polyhedron.
pub fn integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("integral closure"));
    }
    if ideal.is_unit() || ideal.len() == 1 {
        return Ok(ideal.clone());
    }
    let np = NewtonPolyhedron::new(ideal)?;
    MonomialIdeal::new(ideal.num_vars(), np.lattice_generators(&ideal.bounds())?)
}

/// Reference construction: every lattice point of the generator box tested
/// by the exact simplex. Columns are scanned by binary search on the
/// height, which is valid because the polyhedron is an up-set.
pub fn integral_closure_by_enumeration(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("integral closure"));
    }
    let bounds = ideal.bounds();
    let mut table =
        HeightIndex::with_bounds(&bounds).ok_or_else(|| Error::InvalidArgument("closure box is too large".into()))?;
    let axis = table.axis();
    let top = bounds[axis];
    let mut cells = Vec::new();
    table.for_each_cell(|cell, u| cells.push((cell, u.to_vec())));
    for (cell, mut u) in cells {
        u[axis] = top;
        if !np_member(&ExponentVector::from(u.clone()), ideal)? {
            continue;
        }
        let (mut lo, mut hi) = (0u32, top);
        while lo < hi {
            let mid = (lo + hi) / 2;
            u[axis] = mid;
            if np_member(&ExponentVector::from(u.clone()), ideal)? {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        table.set(cell, lo);
    }
    let mut gens = table.minimal_points();
    gens.sort();
    MonomialIdeal::new(ideal.num_vars(), gens)
}

pub fn is_integrally_closed(ideal: &MonomialIdeal) -> Result<ClosureVerdict> {
    let closure = integral_closure(ideal)?;
    let missing: Vec<ExponentVector> =
        closure.generators().iter().filter(|g| !ideal.contains_unchecked(g)).cloned().collect();
    Ok(ClosureVerdict { closed: missing.is_empty(), missing })
}

/// Checks `I, I², …, I^L` for integral closedness, recomputing each power.
pub fn is_normal_up_to(ideal: &MonomialIdeal, horizon: u32) -> Result<NormalityVerdict> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("normality check"));
    }
    if horizon == 0 {
        return Err(Error::InvalidArgument("horizon must be at least 1".into()));
    }
    for l in 1..=horizon {
        let v = is_integrally_closed(&ideal.power(l))?;
        if !v.closed {
            return Ok(NormalityVerdict::FailsAt { power: l, witnesses: v.missing });
        }
    }
    Ok(NormalityVerdict::NormalUpTo { horizon })
}

/// `I(α)`, the integral closure of `⟨x_1^{a_1}, …, x_n^{a_n}⟩`.
pub fn block_ideal(alpha: &[u32]) -> Result<MonomialIdeal> {
    if alpha.is_empty() {
        return Err(Error::InvalidArgument("alpha must be nonempty".into()));
    }
    if alpha.contains(&0) {
        return Err(Error::InvalidArgument("alpha entries must be positive".into()));
    }
    let n = alpha.len();
    let pure = MonomialIdeal::new(n, alpha.iter().enumerate().map(|(i, &a)| {
        let mut v = vec![0u32; n];
        v[i] = a;
        ExponentVector::from(v)
    }))?;
    integral_closure(&pure)
}

/// `⌈a t / s⌉`.
pub fn lambda(a: u32, t: u32, s: u32) -> u32 {
    (u64::from(a) * u64::from(t)).div_ceil(u64::from(s)) as u32
}

/// The ideal generated by `x_{i_1}⋯x_{i_{ls−a}} x_n^{⌈at/s⌉}` for
/// `a = 0, …, ls` and `1 ≤ i_1 ≤ ⋯ ≤ i_{ls−a} ≤ n−1`, in variables
/// `x_1, …, x_n`.
pub fn corollary_gens(s: u32, t: u32, n: usize, l: u32) -> Result<MonomialIdeal> {
    if s == 0 || t == 0 || n == 0 || l == 0 {
        return Err(Error::InvalidArgument("s, t, n, l must be positive".into()));
    }
    let ls = l * s;
    let mut gens = Vec::new();
    for a in 0..=ls {
        let top = lambda(a, t, s);
        for_each_monomial(n - 1, ls - a, |mid| {
            let mut v = mid.to_vec();
            v.push(top);
            gens.push(ExponentVector::from(v));
        });
    }
    MonomialIdeal::new(n, gens)
}

/// Calls `f` on every exponent vector of length `vars` and total degree
/// `deg`. With no variables only degree zero is realized.
pub(crate) fn for_each_monomial(vars: usize, deg: u32, mut f: impl FnMut(&[u32])) {
    fn rec(pos: usize, rest: u32, cur: &mut [u32], f: &mut impl FnMut(&[u32])) {
        if pos + 1 == cur.len() {
            cur[pos] = rest;
            f(cur);
            return;
        }
        for v in (0..=rest).rev() {
            cur[pos] = v;
            rec(pos + 1, rest - v, cur, f);
        }
        cur[pos] = 0;
    }
    if vars == 0 {
        if deg == 0 {
            f(&[]);
        }
        return;
    }
    let mut cur = vec![0u32; vars];
    rec(0, deg, &mut cur, &mut f);
}
