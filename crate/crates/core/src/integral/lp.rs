//! Exact feasibility of `Σ λ_g g ≤ v`, `Σ λ_g = 1`, `λ ≥ 0` by a two-phase
//! simplex over arbitrary-precision rationals with Bland's rule.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{check_dim, Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal};

/// A point with exact rational coordinates, always in lowest terms with
/// positive denominators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPoint {
    coords: Vec<BigRational>,
}

impl RationalPoint {
    pub fn new(coords: Vec<BigRational>) -> Self {
        RationalPoint { coords }
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    /// Componentwise `self ≤ v`.
    pub fn le_vector(&self, v: &ExponentVector) -> bool {
        self.coords.len() == v.len()
            && self.coords.iter().zip(v.coords()).all(|(c, &e)| *c <= BigRational::from_integer(BigInt::from(e)))
    }
}

impl Serialize for RationalPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coords.iter().map(|c| c.to_string()))
    }
}

/// Weights `λ` of a convex combination of the generators together with the
/// combined point `Σ λ_g g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexWitness {
    pub weights: Vec<BigRational>,
    pub point: RationalPoint,
}

/// Whether `v` lies in the Newton polyhedron `conv(gens(I)) + ℝⁿ₊`.
pub fn np_member(v: &ExponentVector, ideal: &MonomialIdeal) -> Result<bool> {
    Ok(np_witness(v, ideal)?.is_some())
}

/// A convex combination of generators of `ideal` lying below `v`, if any.
pub fn np_witness(v: &ExponentVector, ideal: &MonomialIdeal) -> Result<Option<ConvexWitness>> {
    check_dim(ideal.num_vars(), v.len())?;
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("newton polyhedron membership"));
    }
    // Cheap exact shortcut: a generator below v.
    if let Some(i) = ideal.generators().iter().position(|g| g.divides_unchecked(v)) {
        let mut weights = vec![BigRational::zero(); ideal.len()];
        weights[i] = BigRational::one();
        let point = RationalPoint::new(ideal.generators()[i].coords().iter().map(|&e| rat(e.into())).collect());
        return Ok(Some(ConvexWitness { weights, point }));
    }
    Ok(feasible_combination(ideal.generators(), v))
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Phase one of the simplex on
///
/// ```text
///   Σ_g λ_g g_i + s_i = v_i    (i < n)
///   Σ_g λ_g       + a   = 1
/// ```
///
/// starting from the basis `{s_0, …, s_{n−1}, a}` and minimizing `a`.
fn feasible_combination(gens: &[ExponentVector], v: &ExponentVector) -> Option<ConvexWitness> {
    let n = v.len();
    let g = gens.len();
    let cols = g + n + 1;
    let rows = n + 1;
    // Tableau with the right-hand side in the last column.
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(rows);
    for i in 0..n {
        let mut row = vec![BigRational::zero(); cols + 1];
        for (j, gen) in gens.iter().enumerate() {
            row[j] = rat(gen[i].into());
        }
        row[g + i] = BigRational::one();
        row[cols] = rat(v[i].into());
        t.push(row);
    }
    let mut last = vec![BigRational::zero(); cols + 1];
    for x in last.iter_mut().take(g) {
        *x = BigRational::one();
    }
    last[g + n] = BigRational::one();
    last[cols] = BigRational::one();
    t.push(last);
    let mut basis: Vec<usize> = (g..g + n + 1).collect();

    // Reduced costs of the objective `a`, expressed through the last row.
    let mut cost = vec![BigRational::zero(); cols + 1];
    for j in 0..cols + 1 {
        if j != g + n {
            cost[j] = -t[n][j].clone();
        }
    }
    // cost[cols] holds −(objective value).

    loop {
        let Some(enter) = (0..cols).find(|&j| cost[j].is_negative()) else { break };
        let mut leave: Option<(usize, BigRational)> = None;
        for (r, row) in t.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[cols] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let (r, _) = leave.expect("phase one objective is bounded below");
        pivot(&mut t, &mut cost, r, enter);
        basis[r] = enter;
    }

    if !cost[cols].is_zero() {
        return None;
    }
    let mut weights = vec![BigRational::zero(); g];
    for (r, &b) in basis.iter().enumerate() {
        if b < g {
            weights[b] = t[r][cols].clone();
        }
    }
    let point = (0..n)
        .map(|i| weights.iter().zip(gens).fold(BigRational::zero(), |acc, (w, gen)| acc + w * rat(gen[i].into())))
        .collect();
    Some(ConvexWitness { weights, point: RationalPoint::new(point) })
}

fn pivot(t: &mut [Vec<BigRational>], cost: &mut [BigRational], r: usize, c: usize) {
    let p = t[r][c].clone();
    for x in t[r].iter_mut() {
        *x = &*x / &p;
    }
    let pivot_row = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i != r && !row[c].is_zero() {
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
    }
    if !cost[c].is_zero() {
        let f = cost[c].clone();
        for (x, y) in cost.iter_mut().zip(&pivot_row) {
            *x -= &f * y;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_rows(n, rows).unwrap()
    }

    #[test]
    fn half_and_half_combination() {
        let i = ideal(2, &[&[2, 0], &[0, 3]]);
        let w = np_witness(&ExponentVector::from([1, 2]), &i).unwrap().unwrap();
        assert!(w.point.le_vector(&ExponentVector::from([1, 2])));
        let sum: BigRational = w.weights.iter().sum();
        assert_eq!(sum, BigRational::one());
        assert!(!np_member(&ExponentVector::from([1, 1]), &i).unwrap());
    }

    #[test]
    fn generators_are_members() {
        let i = ideal(3, &[&[4, 0, 0], &[0, 5, 0], &[0, 0, 7], &[1, 1, 1]]);
        for g in i.generators() {
            assert!(np_member(g, &i).unwrap());
        }
    }

    #[test]
    fn three_variable_boundary() {
        // x/4 + y/5 + z/7 ≥ 1 over the pure powers.
        let i = ideal(3, &[&[4, 0, 0], &[0, 5, 0], &[0, 0, 7]]);
        assert!(np_member(&ExponentVector::from([2, 2, 2]), &i).unwrap());
        assert!(!np_member(&ExponentVector::from([2, 2, 0]), &i).unwrap());
        assert!(np_member(&ExponentVector::from([2, 3, 0]), &i).unwrap());
        assert!(!np_member(&ExponentVector::from([1, 1, 3]), &i).unwrap());
    }

    #[test]
    fn rejects_zero_ideal_and_bad_dimension() {
        assert!(np_member(&ExponentVector::from([1, 1]), &MonomialIdeal::zero(2)).is_err());
        assert!(np_member(&ExponentVector::from([1]), &ideal(2, &[&[1, 0]])).is_err());
    }
}
