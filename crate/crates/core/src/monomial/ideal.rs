use serde::{Deserialize, Deserializer, Serialize};

use super::staircase::{bounds_of, cell_count, widest_axis, HeightIndex, NONE};
use super::vector::ExponentVector;
use crate::error::{check_dim, Error, Result};

/// A monomial ideal, stored as its minimal generating antichain in canonical
/// order. The zero ideal has no generators; the unit ideal has the single zero
/// vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct MonomialIdeal {
    num_vars: usize,
    generators: Vec<ExponentVector>,
}

/// Minimal generating set of the ideal generated by `gens`.
pub fn minimalize(gens: impl IntoIterator<Item = ExponentVector>, num_vars: usize) -> Result<MonomialIdeal> {
    let pts: Vec<ExponentVector> = gens.into_iter().collect();
    for p in &pts {
        check_dim(num_vars, p.len())?;
    }
    Ok(MonomialIdeal { num_vars, generators: minimal_antichain(num_vars, pts) })
}

pub(crate) fn minimal_antichain(num_vars: usize, mut pts: Vec<ExponentVector>) -> Vec<ExponentVector> {
    if pts.len() > 64 {
        let bounds = bounds_of(num_vars, &pts);
        let axis = widest_axis(&bounds);
        let dense_ok = cell_count(&bounds, axis).is_some_and(|c| c <= 64 * pts.len() + (1 << 16));
        if dense_ok {
            if let Some(idx) = HeightIndex::build(num_vars, &pts) {
                let mut out = idx.minimal_points();
                out.sort();
                return out;
            }
        }
    }
    pts.sort();
    pts.dedup();
    let mut keep: Vec<ExponentVector> = Vec::new();
    for p in pts {
        if !keep.iter().any(|k| k.divides_unchecked(&p)) {
            keep.push(p);
        }
    }
    keep
}

impl MonomialIdeal {
    pub fn new(num_vars: usize, gens: impl IntoIterator<Item = ExponentVector>) -> Result<Self> {
        minimalize(gens, num_vars)
    }

    /// Convenience constructor from raw exponent rows.
    pub fn from_rows(num_vars: usize, rows: &[&[u32]]) -> Result<Self> {
        minimalize(rows.iter().map(|r| ExponentVector::from(*r)), num_vars)
    }

    /// Wraps an already-minimal, canonically sorted antichain.
    pub(crate) fn from_antichain(num_vars: usize, generators: Vec<ExponentVector>) -> Self {
        debug_assert!(generators.windows(2).all(|w| w[0] < w[1]));
        MonomialIdeal { num_vars, generators }
    }

    pub fn zero(num_vars: usize) -> Self {
        MonomialIdeal { num_vars, generators: Vec::new() }
    }

    pub fn unit(num_vars: usize) -> Self {
        MonomialIdeal { num_vars, generators: vec![ExponentVector::zero(num_vars)] }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_zero()
    }

    /// Coordinatewise maxima of the generators.
    pub fn bounds(&self) -> Vec<u32> {
        bounds_of(self.num_vars, &self.generators)
    }

    pub fn contains(&self, m: &ExponentVector) -> Result<bool> {
        check_dim(self.num_vars, m.len())?;
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &ExponentVector) -> bool {
        self.generators.iter().any(|g| g.divides_unchecked(m))
    }

    pub fn equals(&self, other: &MonomialIdeal) -> Result<bool> {
        check_dim(self.num_vars, other.num_vars)?;
        Ok(self.generators == other.generators)
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        check_dim(self.num_vars, other.num_vars)?;
        Ok(self.generators.iter().all(|g| other.contains_unchecked(g)))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.num_vars, other.num_vars)?;
        minimalize(self.generators.iter().chain(&other.generators).cloned(), self.num_vars)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.num_vars, other.num_vars)?;
        let mut lcms = Vec::with_capacity(self.len() * other.len());
        for a in &self.generators {
            for b in &other.generators {
                lcms.push(a.lcm(b));
            }
        }
        Ok(MonomialIdeal { num_vars: self.num_vars, generators: minimal_antichain(self.num_vars, lcms) })
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.num_vars, other.num_vars)?;
        let n = self.num_vars;
        if self.is_zero() || other.is_zero() {
            return Ok(MonomialIdeal::zero(n));
        }
        let pairs = self.len() * other.len();
        if pairs > 4096 {
            // Stream the pairwise sums straight into a staircase table.
            let bounds: Vec<u32> =
                self.bounds().iter().zip(other.bounds()).map(|(a, b)| a + b).collect();
            let fits = cell_count(&bounds, widest_axis(&bounds)).is_some_and(|c| c <= 16 * pairs + (1 << 16));
            if fits {
                if let Some(mut idx) = HeightIndex::with_bounds(&bounds) {
                    for a in &self.generators {
                        for b in &other.generators {
                            idx.insert(&a.add(b));
                        }
                    }
                    idx.close();
                    let mut gens = idx.minimal_points();
                    gens.sort();
                    return Ok(MonomialIdeal { num_vars: n, generators: gens });
                }
            }
        }
        let mut sums = Vec::with_capacity(pairs);
        for a in &self.generators {
            for b in &other.generators {
                sums.push(a.add(b));
            }
        }
        Ok(MonomialIdeal { num_vars: n, generators: minimal_antichain(n, sums) })
    }

    /// `self^l` by repeated multiplication; `l = 0` gives the unit ideal.
    pub fn power(&self, l: u32) -> MonomialIdeal {
        if l == 0 {
            return MonomialIdeal::unit(self.num_vars);
        }
        let mut acc = self.clone();
        for _ in 1..l {
            acc = acc.multiply(self).expect("same ambient dimension");
        }
        acc
    }

    /// The colon ideal `self : other = { f | f·other ⊆ self }`.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.num_vars, other.num_vars)?;
        if other.is_zero() {
            return Err(Error::ZeroIdeal("colon divisor"));
        }
        let n = self.num_vars;
        if self.is_zero() {
            return Ok(MonomialIdeal::zero(n));
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        match HeightIndex::build(n, &self.generators) {
            Some(table) => Ok(colon_by_table(n, &table, other)),
            None => colon_by_quotients(self, other),
        }
    }

    /// Embeds into `num_vars + 1` variables with a new coordinate at `pos`
    /// that every generator leaves at exponent zero.
    pub fn insert_variable(&self, pos: usize) -> MonomialIdeal {
        let gens = self.generators.iter().map(|g| g.insert(pos, 0)).collect();
        MonomialIdeal { num_vars: self.num_vars + 1, generators: minimal_antichain(self.num_vars + 1, gens) }
    }

    /// Applies `v ↦ v.permute(perm)` to every generator.
    pub fn permute_variables(&self, perm: &[usize]) -> Result<MonomialIdeal> {
        check_dim(self.num_vars, perm.len())?;
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidArgument(format!("{perm:?} is not a permutation")));
            }
        }
        minimalize(self.generators.iter().map(|g| g.permute(perm)), self.num_vars)
    }
}

/// Colon via a staircase table of `ideal`: for each column `u` of the box of
/// `ideal`, the least height `y` with `(u, y) + g ∈ ideal` for every generator
/// `g` of the divisor. Minimal generators of the colon lie in that box.
fn colon_by_table(n: usize, table: &HeightIndex, divisor: &MonomialIdeal) -> MonomialIdeal {
    let axis = table.axis();
    let mut out = table.empty_like();
    let mut probe = vec![0u32; n];
    table.for_each_cell(|cell, u| {
        let mut need = 0u32;
        for g in divisor.generators() {
            for (i, p) in probe.iter_mut().enumerate() {
                *p = u[i] + g[i];
            }
            let t = table.height(&probe);
            if t == NONE {
                need = NONE;
                break;
            }
            need = need.max(t.saturating_sub(g[axis]));
        }
        out.set(cell, need);
    });
    let mut gens = out.minimal_points();
    gens.sort();
    MonomialIdeal::from_antichain(n, gens)
}

/// Colon as `∩_g (ideal : x^g)` with `ideal : x^a = ⟨lcm(h, a) − a⟩`.
pub(crate) fn colon_by_quotients(ideal: &MonomialIdeal, divisor: &MonomialIdeal) -> Result<MonomialIdeal> {
    let n = ideal.num_vars();
    let mut acc: Option<MonomialIdeal> = None;
    for a in divisor.generators() {
        let q = minimalize(
            ideal.generators().iter().map(|h| h.lcm(a).checked_sub(a).expect("lcm dominates")),
            n,
        )?;
        acc = Some(match acc {
            None => q,
            Some(prev) => prev.intersect(&q)?,
        });
    }
    acc.ok_or(Error::ZeroIdeal("colon divisor"))
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            num_vars: usize,
            generators: Vec<ExponentVector>,
        }
        let raw = Raw::deserialize(d)?;
        minimalize(raw.generators, raw.num_vars).map_err(serde::de::Error::custom)
    }
}

/// `I : J`; see [`MonomialIdeal::colon`].
pub fn colon(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MonomialIdeal> {
    i.colon(j)
}

/// `I^l`; see [`MonomialIdeal::power`].
pub fn power(i: &MonomialIdeal, l: u32) -> MonomialIdeal {
    i.power(l)
}

/// `I · J`; see [`MonomialIdeal::multiply`].
pub fn multiply(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MonomialIdeal> {
    i.multiply(j)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(c: &[u32]) -> ExponentVector {
        ExponentVector::from(c)
    }

    fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_rows(n, rows).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        let i = minimalize([ev(&[2, 0]), ev(&[3, 0]), ev(&[0, 1])], 2).unwrap();
        assert_eq!(i.generators(), &[ev(&[0, 1]), ev(&[2, 0])]);
        assert!(minimalize([], 2).unwrap().is_zero());
        let j = minimalize([ev(&[8, 0, 0]), ev(&[7, 1, 0]), ev(&[3, 5, 0]), ev(&[4, 4, 0])], 3).unwrap();
        assert_eq!(j.generators(), &[ev(&[8, 0, 0]), ev(&[7, 1, 0]), ev(&[4, 4, 0]), ev(&[3, 5, 0])]);
    }

    #[test]
    fn minimalize_rejects_wrong_length() {
        assert!(matches!(minimalize([ev(&[1, 2, 3])], 2), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn dense_and_naive_minimalization_agree() {
        let mut pts = Vec::new();
        for a in 0..9u32 {
            for b in 0..9u32 {
                if a * b >= 12 || a + 2 * b >= 14 {
                    pts.push(ev(&[a, b]));
                }
            }
        }
        let dense = minimal_antichain(2, pts.clone());
        let mut naive: Vec<ExponentVector> = Vec::new();
        let mut sorted = pts;
        sorted.sort();
        for p in sorted {
            if !naive.iter().any(|k| k.divides_unchecked(&p)) {
                naive.push(p);
            }
        }
        assert_eq!(dense, naive);
    }

    #[test]
    fn multiply_examples() {
        let x = ideal(2, &[&[1, 0]]);
        let y = ideal(2, &[&[0, 1]]);
        assert_eq!(x.multiply(&y).unwrap(), ideal(2, &[&[1, 1]]));
        let i = ideal(2, &[&[2, 0], &[0, 3]]);
        assert_eq!(i.multiply(&MonomialIdeal::unit(2)).unwrap(), i);
        let m = ideal(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(m.multiply(&m).unwrap(), ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        assert!(m.multiply(&MonomialIdeal::zero(2)).unwrap().is_zero());
    }

    #[test]
    fn power_examples() {
        let i = ideal(2, &[&[2, 0], &[1, 2], &[0, 3]]);
        let sq = i.power(2);
        assert_eq!(sq, ideal(2, &[&[4, 0], &[3, 2], &[2, 3], &[1, 5], &[0, 6]]));
        assert_eq!(sq.len(), 5);
        assert_eq!(i.power(1), i);
        assert_eq!(ideal(1, &[&[1]]).power(3), ideal(1, &[&[3]]));
        assert!(i.power(0).is_unit());
    }

    #[test]
    fn colon_examples() {
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        let x = ideal(2, &[&[1, 0]]);
        assert_eq!(i.colon(&x).unwrap(), ideal(2, &[&[1, 0], &[0, 2]]));
        assert_eq!(i.colon(&MonomialIdeal::unit(2)).unwrap(), i);
        let j = ideal(2, &[&[4, 0], &[3, 1], &[1, 3], &[0, 4]]);
        let c = j.power(2).colon(&j).unwrap();
        assert!(c.contains(&ev(&[2, 2])).unwrap());
        assert!(!j.contains(&ev(&[2, 2])).unwrap());
    }

    #[test]
    fn colon_rejects_zero_divisor() {
        let i = ideal(2, &[&[1, 0]]);
        assert_eq!(i.colon(&MonomialIdeal::zero(2)), Err(Error::ZeroIdeal("colon divisor")));
        assert!(MonomialIdeal::zero(2).colon(&i).unwrap().is_zero());
    }

    #[test]
    fn colon_routes_agree_on_non_artinian_input() {
        let i = ideal(3, &[&[2, 1, 0], &[0, 3, 1], &[1, 0, 4]]);
        let j = ideal(3, &[&[1, 1, 0], &[0, 0, 2]]);
        assert_eq!(i.colon(&j).unwrap(), colon_by_quotients(&i, &j).unwrap());
    }

    #[test]
    fn contains_examples() {
        let i = ideal(2, &[&[2, 0], &[0, 3]]);
        assert!(i.contains(&ev(&[1, 3])).unwrap());
        assert!(!i.contains(&ev(&[1, 2])).unwrap());
        assert!(!MonomialIdeal::zero(2).contains(&ev(&[4, 4])).unwrap());
        assert!(i.contains(&ev(&[1, 3, 0])).is_err());
    }

    #[test]
    fn equals_examples() {
        let a = minimalize([ev(&[2, 0]), ev(&[4, 0]), ev(&[0, 1])], 2).unwrap();
        assert!(a.equals(&ideal(2, &[&[2, 0], &[0, 1]])).unwrap());
        assert!(!ideal(2, &[&[1, 0]]).equals(&ideal(2, &[&[2, 0]])).unwrap());
        assert!(MonomialIdeal::zero(2).equals(&MonomialIdeal::zero(2)).unwrap());
        assert!(MonomialIdeal::zero(2).equals(&MonomialIdeal::zero(3)).is_err());
    }

    #[test]
    fn json_shape() {
        let i = ideal(2, &[&[2, 0], &[0, 3]]);
        let s = serde_json::to_string(&i).unwrap();
        assert_eq!(s, r#"{"num_vars":2,"generators":[[2,0],[0,3]]}"#);
        let back: MonomialIdeal = serde_json::from_str(r#"{"num_vars":2,"generators":[[0,3],[2,0],[3,3]]}"#).unwrap();
        assert_eq!(back, i);
    }
}
