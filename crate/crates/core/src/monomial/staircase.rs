//! Dense staircase tables for monomial up-sets.
//!
//! A [`HeightIndex`] picks one coordinate as the height axis and stores, for
//! every point `u` of the box spanned by the remaining coordinates, the least
//! height `y` such that `(u, y)` lies in the up-set generated by the inserted
//! points. Membership then costs a single table lookup, and the minimal
//! generators can be read off by comparing each cell with its lower
//! neighbours.

use super::vector::{Coords, ExponentVector};

pub(crate) const NONE: u32 = u32::MAX;

/// Largest table the index will allocate.
const MAX_CELLS: usize = 1 << 24;

#[derive(Debug, Clone)]
pub(crate) struct HeightIndex {
    len: usize,
    axis: usize,
    others: Vec<usize>,
    extents: Vec<u32>,
    strides: Vec<usize>,
    heights: Vec<u32>,
}

/// Coordinatewise maxima of a point set.
pub(crate) fn bounds_of<'a>(len: usize, points: impl IntoIterator<Item = &'a ExponentVector>) -> Vec<u32> {
    let mut b = vec![0u32; len];
    for p in points {
        for (bi, &pi) in b.iter_mut().zip(p.coords()) {
            *bi = (*bi).max(pi);
        }
    }
    b
}

pub(crate) fn cell_count(bounds: &[u32], axis: usize) -> Option<usize> {
    let mut cells = 1usize;
    for (i, &b) in bounds.iter().enumerate() {
        if i != axis {
            cells = cells.checked_mul(b as usize + 1)?;
        }
    }
    Some(cells)
}

/// The coordinate with the widest range; the last one wins ties.
pub(crate) fn widest_axis(bounds: &[u32]) -> usize {
    let mut axis = 0;
    for (i, &b) in bounds.iter().enumerate() {
        if b >= bounds[axis] {
            axis = i;
        }
    }
    axis
}

impl HeightIndex {
    /// An empty index over the box `[0, bounds]`, or `None` if the table would
    /// be too large.
    pub(crate) fn with_bounds(bounds: &[u32]) -> Option<Self> {
        let len = bounds.len();
        if len == 0 {
            return None;
        }
        let axis = widest_axis(bounds);
        let cells = cell_count(bounds, axis)?;
        if cells > MAX_CELLS {
            return None;
        }
        let others: Vec<usize> = (0..len).filter(|&i| i != axis).collect();
        let extents: Vec<u32> = others.iter().map(|&i| bounds[i]).collect();
        let mut strides = Vec::with_capacity(others.len());
        let mut s = 1usize;
        for &e in &extents {
            strides.push(s);
            s *= e as usize + 1;
        }
        Some(HeightIndex { len, axis, others, extents, strides, heights: vec![NONE; cells] })
    }

    /// Builds and closes an index for the up-set generated by `points`.
    pub(crate) fn build(len: usize, points: &[ExponentVector]) -> Option<Self> {
        let bounds = bounds_of(len, points);
        let mut idx = Self::with_bounds(&bounds)?;
        for p in points {
            idx.insert(p);
        }
        idx.close();
        Some(idx)
    }

    pub(crate) fn axis(&self) -> usize {
        self.axis
    }

    /// Records a point; it must lie inside the box. Call [`close`](Self::close)
    /// before querying.
    pub(crate) fn insert(&mut self, p: &ExponentVector) {
        let off = self.offset_exact(p.coords());
        let h = &mut self.heights[off];
        *h = (*h).min(p[self.axis]);
    }

    fn offset_exact(&self, p: &[u32]) -> usize {
        self.others
            .iter()
            .zip(&self.strides)
            .map(|(&i, &s)| p[i] as usize * s)
            .sum()
    }

    fn offset_clamped(&self, p: &[u32]) -> usize {
        self.others
            .iter()
            .zip(&self.extents)
            .zip(&self.strides)
            .map(|((&i, &e), &s)| p[i].min(e) as usize * s)
            .sum()
    }

    /// Propagates minima upward so every cell holds the least height over all
    /// inserted points whose prefix lies below it.
    pub(crate) fn close(&mut self) {
        let mut pos = vec![0u32; self.others.len()];
        for idx in 0..self.heights.len() {
            let mut h = self.heights[idx];
            for (j, &s) in self.strides.iter().enumerate() {
                if pos[j] > 0 {
                    h = h.min(self.heights[idx - s]);
                }
            }
            self.heights[idx] = h;
            self.advance(&mut pos);
        }
    }

    fn advance(&self, pos: &mut [u32]) {
        for (p, &e) in pos.iter_mut().zip(&self.extents) {
            if *p < e {
                *p += 1;
                return;
            }
            *p = 0;
        }
    }

    /// Least height over the column of `p`'s prefix (coordinates beyond the
    /// box are clamped, which is exact because the table saturates there).
    pub(crate) fn height(&self, p: &[u32]) -> u32 {
        self.heights[self.offset_clamped(p)]
    }

    pub(crate) fn contains(&self, p: &[u32]) -> bool {
        self.height(p) <= p[self.axis]
    }

    /// Visits every prefix cell with its decoded full-length coordinates; the
    /// axis coordinate of the slice passed to `f` is zero.
    pub(crate) fn for_each_cell(&self, mut f: impl FnMut(usize, &[u32])) {
        let mut pos = vec![0u32; self.others.len()];
        let mut full = vec![0u32; self.len];
        for idx in 0..self.heights.len() {
            for (&i, &p) in self.others.iter().zip(&pos) {
                full[i] = p;
            }
            f(idx, &full);
            self.advance(&mut pos);
        }
    }

    /// Minimal elements of the up-set, in no particular order.
    pub(crate) fn minimal_points(&self) -> Vec<ExponentVector> {
        let mut out = Vec::new();
        let mut pos = vec![0u32; self.others.len()];
        for idx in 0..self.heights.len() {
            let h = self.heights[idx];
            if h != NONE {
                let minimal = self
                    .strides
                    .iter()
                    .enumerate()
                    .all(|(j, &s)| pos[j] == 0 || self.heights[idx - s] > h);
                if minimal {
                    let mut c = Coords::from_elem(0, self.len);
                    for (&i, &p) in self.others.iter().zip(&pos) {
                        c[i] = p;
                    }
                    c[self.axis] = h;
                    out.push(ExponentVector(c));
                }
            }
            self.advance(&mut pos);
        }
        out
    }
}

impl HeightIndex {
    /// An index with the same box and axis whose cells are all empty.
    pub(crate) fn empty_like(&self) -> HeightIndex {
        HeightIndex {
            len: self.len,
            axis: self.axis,
            others: self.others.clone(),
            extents: self.extents.clone(),
            strides: self.strides.clone(),
            heights: vec![NONE; self.heights.len()],
        }
    }

    /// Overwrites one cell. Used when a column's least height is computed
    /// directly; the caller is responsible for monotonicity.
    pub(crate) fn set(&mut self, cell: usize, h: u32) {
        self.heights[cell] = h;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(c: &[u32]) -> ExponentVector {
        ExponentVector::from(c)
    }

    #[test]
    fn membership_matches_divisibility() {
        let gens = vec![ev(&[2, 0, 1]), ev(&[0, 3, 0]), ev(&[1, 1, 2])];
        let idx = HeightIndex::build(3, &gens).unwrap();
        for a in 0..5 {
            for b in 0..5 {
                for c in 0..5 {
                    let p = ev(&[a, b, c]);
                    let expected = gens.iter().any(|g| g.divides_unchecked(&p));
                    assert_eq!(idx.contains(p.coords()), expected, "{p:?}");
                }
            }
        }
    }

    #[test]
    fn minimal_points_drop_redundant_inputs() {
        let pts = vec![ev(&[2, 0]), ev(&[3, 0]), ev(&[0, 1]), ev(&[2, 2])];
        let idx = HeightIndex::build(2, &pts).unwrap();
        let mut m = idx.minimal_points();
        m.sort();
        assert_eq!(m, vec![ev(&[0, 1]), ev(&[2, 0])]);
    }
}
