//! Brute-force oracles that share no code with the library beyond the
//! exponent-vector type.

#![allow(dead_code)]

use mcl_core::monomial::{ExponentVector, MonomialIdeal};

pub fn ev(c: &[u32]) -> ExponentVector {
    ExponentVector::from(c)
}

pub fn le(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Divisibility-minimal elements, deduplicated and sorted.
pub fn naive_minimal(points: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = Vec::new();
    for p in points {
        let dominated = points.iter().any(|q| q != p && le(q, p));
        if !dominated && !out.contains(p) {
            out.push(p.clone());
        }
    }
    out.sort();
    out
}

pub fn generator_rows(ideal: &MonomialIdeal) -> Vec<Vec<u32>> {
    let mut rows: Vec<Vec<u32>> = ideal.generators().iter().map(|g| g.coords().to_vec()).collect();
    rows.sort();
    rows
}

pub fn naive_member(v: &[u32], gens: &[Vec<u32>]) -> bool {
    gens.iter().any(|g| le(g, v))
}

/// All sums of `l` generators (with repetition), minimalized.
pub fn naive_power(gens: &[Vec<u32>], l: u32) -> Vec<Vec<u32>> {
    let n = gens.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    fn rec(gens: &[Vec<u32>], start: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..gens.len() {
            for (c, g) in cur.iter_mut().zip(&gens[i]) {
                *c += g;
            }
            rec(gens, i, left - 1, cur, out);
            for (c, g) in cur.iter_mut().zip(&gens[i]) {
                *c -= g;
            }
        }
    }
    rec(gens, 0, l, &mut vec![0; n], &mut out);
    naive_minimal(&out)
}

/// Every point of the box `[0, hi]`.
pub fn box_points(hi: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &h in hi {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=h).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    out
}

/// `I : J` by scanning the box below the generator bounds of `I`.
pub fn box_colon(i: &[Vec<u32>], j: &[Vec<u32>], n: usize) -> Vec<Vec<u32>> {
    let hi: Vec<u32> = (0..n).map(|c| i.iter().map(|g| g[c]).max().unwrap_or(0)).collect();
    let members: Vec<Vec<u32>> = box_points(&hi)
        .into_iter()
        .filter(|v| {
            j.iter().all(|g| {
                let s: Vec<u32> = v.iter().zip(g).map(|(a, b)| a + b).collect();
                naive_member(&s, i)
            })
        })
        .collect();
    naive_minimal(&members)
}

/// Whether `k·v` is a sum of `k` generators plus a nonnegative vector.
pub fn power_member(v: &[u32], gens: &[Vec<u32>], k: u32) -> bool {
    let target: Vec<i64> = v.iter().map(|&e| i64::from(e) * i64::from(k)).collect();
    fn rec(gens: &[Vec<u32>], start: usize, left: u32, rest: &mut Vec<i64>) -> bool {
        if left == 0 {
            return true;
        }
        for i in start..gens.len() {
            if rest.iter().zip(&gens[i]).all(|(r, &g)| *r >= i64::from(g)) {
                for (r, &g) in rest.iter_mut().zip(&gens[i]) {
                    *r -= i64::from(g);
                }
                let ok = rec(gens, i, left - 1, rest);
                for (r, &g) in rest.iter_mut().zip(&gens[i]) {
                    *r += i64::from(g);
                }
                if ok {
                    return true;
                }
            }
        }
        false
    }
    rec(gens, 0, k, &mut target.clone())
}

/// `Σ w_i e_i` in 128-bit arithmetic.
pub fn weighted_degree(weights: &[u64], e: &[u32]) -> u128 {
    weights.iter().zip(e).map(|(&w, &x)| u128::from(w) * u128::from(x)).sum()
}
