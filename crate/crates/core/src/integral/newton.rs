//! Facet description of the Newton polyhedron `conv(gens) + ℝⁿ₊`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::lp::np_member;
use crate::error::{Error, Result};
use crate::monomial::staircase::{HeightIndex, NONE};
use crate::monomial::{ExponentVector, MonomialIdeal};

/// A valid inequality `w · x ≥ c` with `w ≥ 0` primitive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    pub w: Vec<i64>,
    pub c: i64,
}

impl Facet {
    fn value(&self, p: &[u32]) -> i128 {
        self.w.iter().zip(p).map(|(&w, &x)| i128::from(w) * i128::from(x)).sum()
    }

    pub fn holds(&self, p: &[u32]) -> bool {
        self.value(p) >= i128::from(self.c)
    }
}

/// Newton polyhedron of a nonzero monomial ideal, as its vertices and the
/// facets not of the form `x_i ≥ 0`.
#[derive(Debug, Clone)]
pub struct NewtonPolyhedron {
    num_vars: usize,
    vertices: Vec<ExponentVector>,
    facets: Vec<Facet>,
}

/// Above this many surviving candidates the exact vertex test is skipped
/// in favour of larger facet enumeration.
const LP_PRUNE_LIMIT: usize = 64;

impl NewtonPolyhedron {
    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal("newton polyhedron"));
        }
        let n = ideal.num_vars();
        let active: Vec<usize> = (0..n).filter(|&i| ideal.generators().iter().any(|g| g[i] > 0)).collect();
        let vertices = vertices(ideal);
        let facets = enumerate_facets(n, &active, &vertices);
        Ok(NewtonPolyhedron { num_vars: n, vertices, facets })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn vertices(&self) -> &[ExponentVector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn contains(&self, p: &ExponentVector) -> bool {
        self.facets.iter().all(|f| f.holds(p.coords()))
    }

    /// Minimal lattice points, i.e. the generators of the integral closure.
    /// They lie in the box of the original generators, so it suffices to
    /// compute, for every column of that box, the least admissible height.
    pub fn lattice_generators(&self, bounds: &[u32]) -> Result<Vec<ExponentVector>> {
        let mut table = HeightIndex::with_bounds(bounds)
            .ok_or_else(|| Error::InvalidArgument("closure box is too large".into()))?;
        let axis = table.axis();
        let mut heights = Vec::new();
        table.for_each_cell(|cell, u| heights.push((cell, self.least_height(u, axis))));
        for (cell, h) in heights {
            table.set(cell, h);
        }
        let mut gens = table.minimal_points();
        gens.sort();
        Ok(gens)
    }

    /// Least `y ≥ 0` with `u + y e_axis` in the polyhedron (`u[axis]` is
    /// ignored), or `NONE`.
    fn least_height(&self, u: &[u32], axis: usize) -> u32 {
        let mut y: i128 = 0;
        for f in &self.facets {
            let rest = f.value(u) - i128::from(f.w[axis]) * i128::from(u[axis]);
            let gap = i128::from(f.c) - rest;
            if gap <= 0 {
                continue;
            }
            let wa = i128::from(f.w[axis]);
            if wa == 0 {
                return NONE;
            }
            y = y.max((gap + wa - 1) / wa);
        }
        u32::try_from(y).expect("height fits")
    }
}

/// Drops generators that are not vertices of the Newton polyhedron.
///
/// First a midpoint test: `g` is redundant if `2g − h` lies in the ideal for
/// some other surviving generator `h`, since then `g` sits on a segment
/// between `h` and a point of the polyhedron. Survivors are then checked
/// exactly against the polyhedron of the others.
fn vertices(ideal: &MonomialIdeal) -> Vec<ExponentVector> {
    let n = ideal.num_vars();
    let gens = ideal.generators();
    if gens.len() <= 1 {
        return gens.to_vec();
    }
    let table = HeightIndex::build(n, gens);
    let member = |p: &[u32]| match &table {
        Some(t) => t.contains(p),
        None => ideal.contains_unchecked(&ExponentVector::from(p)),
    };
    let mut keep = vec![true; gens.len()];
    let mut probe = vec![0u32; n];
    for (i, g) in gens.iter().enumerate() {
        let redundant = gens.iter().enumerate().any(|(j, h)| {
            if j == i || !keep[j] {
                return false;
            }
            for (k, p) in probe.iter_mut().enumerate() {
                let twice = 2 * g[k];
                if twice < h[k] {
                    return false;
                }
                *p = twice - h[k];
            }
            member(&probe)
        });
        if redundant {
            keep[i] = false;
        }
    }
    let mut out: Vec<ExponentVector> = gens.iter().zip(&keep).filter(|(_, &k)| k).map(|(g, _)| g.clone()).collect();
    let active = (0..n).filter(|&i| gens.iter().any(|g| g[i] > 0)).count();
    if out.len() > active + 1 && out.len() <= LP_PRUNE_LIMIT {
        let mut i = 0;
        while i < out.len() {
            let others: Vec<ExponentVector> =
                out.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
            let rest = MonomialIdeal::new(n, others).expect("same dimension");
            if np_member(&out[i], &rest).expect("nonzero ideal") {
                out.remove(i);
            } else {
                i += 1;
            }
        }
    }
    out
}

/// Every facet `w · x ≥ c` with `w ≥ 0`. A facet whose support is `S`
/// (`|S| = k`) contains the rays `e_i` for `i ∉ S` and `k` vertices whose
/// projections to `S` are affinely independent, so it is the null vector of
/// the `k × (k+1)` system `w·v_j − c = 0` over those vertices.
fn enumerate_facets(n: usize, active: &[usize], verts: &[ExponentVector]) -> Vec<Facet> {
    let mut out: Vec<Facet> = Vec::new();
    let d = active.len();
    for k in 1..=d {
        if k > verts.len() {
            break;
        }
        for support in subsets(d, k) {
            let coords: Vec<usize> = support.iter().map(|&i| active[i]).collect();
            for chosen in subsets(verts.len(), k) {
                let Some((w_s, c)) = hyperplane(&coords, &chosen.iter().map(|&j| &verts[j]).collect::<Vec<_>>())
                else {
                    continue;
                };
                let mut w = vec![0i64; n];
                for (&i, &wi) in coords.iter().zip(&w_s) {
                    w[i] = wi;
                }
                let f = Facet { w, c };
                if verts.iter().all(|v| f.holds(v.coords())) {
                    out.push(f);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Primitive `(w, c)` with `w > 0` on `coords` and `w·v = c` for every
/// given vertex, if the system has rank `k`.
fn hyperplane(coords: &[usize], pts: &[&ExponentVector]) -> Option<(Vec<i64>, i64)> {
    let k = coords.len();
    let m: Vec<Vec<BigRational>> = pts
        .iter()
        .map(|p| {
            let mut row: Vec<BigRational> = coords.iter().map(|&i| BigRational::from_integer(p[i].into())).collect();
            row.push(-BigRational::one());
            row
        })
        .collect();
    let null = null_vector(m, k + 1)?;
    // Make the first nonzero entry positive, then require w > 0 on support.
    let sign = if null.iter().find(|x| !x.is_zero())?.is_negative() { -BigRational::one() } else { BigRational::one() };
    let null: Vec<BigRational> = null.into_iter().map(|x| x * &sign).collect();
    if null[..k].iter().any(|x| !x.is_positive()) {
        return None;
    }
    let lcm = null.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = null.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let ints: Vec<i64> = ints.iter().map(|x| (x / &g).to_i64()).collect::<Option<_>>()?;
    let (w, c) = ints.split_at(k);
    Some((w.to_vec(), c[0]))
}

/// A nonzero vector spanning the kernel of `m` (`rows × cols`), if the
/// kernel is one-dimensional.
fn null_vector(mut m: Vec<Vec<BigRational>>, cols: usize) -> Option<Vec<BigRational>> {
    let rows = m.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = BigRational::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pr = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pr) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if pivots.len() + 1 != cols {
        return None;
    }
    let free = (0..cols).find(|c| !pivots.contains(c))?;
    let mut v = vec![BigRational::zero(); cols];
    v[free] = BigRational::one();
    for (row, &pc) in pivots.iter().enumerate() {
        v[pc] = -m[row][free].clone();
    }
    Some(v)
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_rows(n, rows).unwrap()
    }

    #[test]
    fn simplex_facet_of_pure_powers() {
        let np = NewtonPolyhedron::new(&ideal(3, &[&[4, 0, 0], &[0, 5, 0], &[0, 0, 7]])).unwrap();
        assert!(np.facets().contains(&Facet { w: vec![35, 28, 20], c: 140 }));
        assert!(np.contains(&ExponentVector::from([2, 2, 2])));
        assert!(!np.contains(&ExponentVector::from([2, 2, 0])));
    }

    #[test]
    fn non_vertices_are_pruned() {
        let i = ideal(2, &[&[4, 0], &[2, 2], &[1, 3], &[0, 4]]);
        let np = NewtonPolyhedron::new(&i).unwrap();
        assert_eq!(np.vertices(), &[ExponentVector::from([4, 0]), ExponentVector::from([0, 4])]);
        // A genuine vertex survives.
        let j = ideal(2, &[&[4, 0], &[1, 1], &[0, 4]]);
        assert_eq!(NewtonPolyhedron::new(&j).unwrap().vertices().len(), 3);
    }

    #[test]
    fn inactive_coordinates_are_cylindrical() {
        let np = NewtonPolyhedron::new(&ideal(3, &[&[0, 2, 0], &[0, 0, 3]])).unwrap();
        assert!(np.facets().iter().all(|f| f.w[0] == 0));
        assert!(np.contains(&ExponentVector::from([0, 1, 2])));
        assert!(!np.contains(&ExponentVector::from([9, 1, 1])));
    }

    #[test]
    fn coordinate_facets_appear_when_offset() {
        // ⟨x y^2, x^2 y⟩ lives in x ≥ 1 and y ≥ 1.
        let np = NewtonPolyhedron::new(&ideal(2, &[&[1, 2], &[2, 1]])).unwrap();
        assert!(np.facets().contains(&Facet { w: vec![1, 0], c: 1 }));
        assert!(np.facets().contains(&Facet { w: vec![0, 1], c: 1 }));
        assert!(np.facets().contains(&Facet { w: vec![1, 1], c: 3 }));
    }

    #[test]
    fn subsets_are_lexicographic() {
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(subsets(2, 3), Vec::<Vec<usize>>::new());
    }
}
