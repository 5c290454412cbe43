use std::cmp::Ordering;
use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{check_dim, Result};

pub(crate) type Coords = SmallVec<[u32; 8]>;

/// Exponents `(a_0, ..., a_{n-1})` of the monomial `x_0^{a_0} ... x_{n-1}^{a_{n-1}}`.
///
/// `Ord` is the canonical generator order used throughout the crate: ascending
/// total degree, ties broken by descending lexicographic order, so `x1^2`
/// precedes `x1*x2` precedes `x2^2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(pub(crate) Coords);

impl ExponentVector {
    pub fn new(coords: impl IntoIterator<Item = u32>) -> Self {
        ExponentVector(coords.into_iter().collect())
    }

    pub fn zero(len: usize) -> Self {
        ExponentVector(smallvec::smallvec![0; len])
    }

    /// The unit vector `e_i` (the variable `x_i`).
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zero(len);
        v.0[i] = 1;
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise `self <= other`, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &ExponentVector) -> Result<bool> {
        check_dim(self.len(), other.len())?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// Exponent vector of the product `x^self * x^other`.
    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// Componentwise maximum (the lcm of two monomials).
    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    /// `self - other` when `other` divides `self`.
    pub fn checked_sub(&self, other: &ExponentVector) -> Option<ExponentVector> {
        debug_assert_eq!(self.len(), other.len());
        let mut out = Coords::with_capacity(self.len());
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            out.push(a.checked_sub(*b)?);
        }
        Some(ExponentVector(out))
    }

    /// Componentwise `max(self - other, 0)`.
    pub fn saturating_sub(&self, other: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(self.0.iter().zip(other.0.iter()).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    pub fn scale(&self, k: u32) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| a * k).collect())
    }

    /// Reorders coordinates: the result's coordinate `i` is `self[perm[i]]`.
    pub fn permute(&self, perm: &[usize]) -> ExponentVector {
        ExponentVector(perm.iter().map(|&p| self.0[p]).collect())
    }

    /// Inserts `value` at coordinate `pos`, shifting later coordinates right.
    pub fn insert(&self, pos: usize, value: u32) -> ExponentVector {
        let mut out = self.0.clone();
        out.insert(pos, value);
        ExponentVector(out)
    }
}

impl Index<usize> for ExponentVector {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v.into_iter().collect())
    }
}

impl From<&[u32]> for ExponentVector {
    fn from(v: &[u32]) -> Self {
        ExponentVector(v.iter().copied().collect())
    }
}

impl<const N: usize> From<[u32; N]> for ExponentVector {
    fn from(v: [u32; N]) -> Self {
        ExponentVector(v.into_iter().collect())
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.degree().cmp(&other.degree()))
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl Serialize for ExponentVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.as_slice().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExponentVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Vec::<u32>::deserialize(d).map(ExponentVector::from)
    }
}

/// Componentwise comparison `a <= b`.
pub fn divides(a: &ExponentVector, b: &ExponentVector) -> Result<bool> {
    a.divides(b)
}
