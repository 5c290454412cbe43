use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::Zero;

use super::vector::ExponentVector;
use crate::error::{check_dim, Error, Result};

/// Weighted graded reverse lexicographic order with `x_0 < x_1 < … < x_n`.
///
/// Monomials are compared by weighted degree first. On a tie, `a > b` exactly
/// when the leftmost nonzero entry of `a - b` is negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGrevlexOrder {
    weights: Vec<BigUint>,
}

impl WeightedGrevlexOrder {
    pub fn new(weights: impl IntoIterator<Item = u64>) -> Result<Self> {
        let weights: Vec<BigUint> = weights.into_iter().map(BigUint::from).collect();
        if weights.is_empty() || weights.iter().any(Zero::is_zero) {
            return Err(Error::InvalidArgument("weights must be positive and nonempty".into()));
        }
        Ok(WeightedGrevlexOrder { weights })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[BigUint] {
        &self.weights
    }

    pub fn weighted_degree(&self, a: &ExponentVector) -> Result<BigUint> {
        check_dim(self.len(), a.len())?;
        Ok(self.weighted_degree_unchecked(a))
    }

    pub(crate) fn weighted_degree_unchecked(&self, a: &ExponentVector) -> BigUint {
        self.weights.iter().zip(a.coords()).map(|(w, &e)| w * e).sum()
    }

    pub fn compare(&self, a: &ExponentVector, b: &ExponentVector) -> Result<Ordering> {
        check_dim(self.len(), a.len())?;
        check_dim(self.len(), b.len())?;
        Ok(self.compare_unchecked(a, b))
    }

    pub(crate) fn compare_unchecked(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        self.weighted_degree_unchecked(a)
            .cmp(&self.weighted_degree_unchecked(b))
            .then_with(|| {
                match a.coords().iter().zip(b.coords()).find(|(x, y)| x != y) {
                    // Smaller exponent at the leftmost difference means larger monomial.
                    Some((x, y)) => y.cmp(x),
                    None => Ordering::Equal,
                }
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(c: &[u32]) -> ExponentVector {
        ExponentVector::from(c)
    }

    #[test]
    fn tie_broken_by_leftmost_negative_entry() {
        let ord = WeightedGrevlexOrder::new([19, 20, 21, 22]).unwrap();
        assert_eq!(ord.compare(&ev(&[0, 1, 1, 0]), &ev(&[1, 0, 0, 1])).unwrap(), Ordering::Greater);
        assert_eq!(ord.compare(&ev(&[1, 0, 0, 1]), &ev(&[0, 1, 1, 0])).unwrap(), Ordering::Less);
    }

    #[test]
    fn equal_vectors_compare_equal() {
        let ord = WeightedGrevlexOrder::new([3, 4, 5]).unwrap();
        assert_eq!(ord.compare(&ev(&[1, 2, 3]), &ev(&[1, 2, 3])).unwrap(), Ordering::Equal);
    }

    #[test]
    fn weighted_degree_dominates() {
        let ord = WeightedGrevlexOrder::new([7, 9, 11, 13]).unwrap();
        assert_eq!(ord.weighted_degree(&ev(&[0, 0, 0, 3])).unwrap(), BigUint::from(39u32));
        assert_eq!(ord.weighted_degree(&ev(&[3, 0, 1, 0])).unwrap(), BigUint::from(32u32));
        assert_eq!(ord.compare(&ev(&[0, 0, 0, 3]), &ev(&[3, 0, 1, 0])).unwrap(), Ordering::Greater);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(WeightedGrevlexOrder::new([1, 0]).is_err());
        let ord = WeightedGrevlexOrder::new([1, 1]).unwrap();
        assert!(ord.compare(&ev(&[1]), &ev(&[1, 0])).is_err());
    }
}
