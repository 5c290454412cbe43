use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::order::WeightedGrevlexOrder;
use super::vector::ExponentVector;
use crate::error::{check_dim, Error, Result};

/// The binomial `x^first - x^second`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Binomial {
    first: ExponentVector,
    second: ExponentVector,
}

impl Binomial {
    pub fn new(first: ExponentVector, second: ExponentVector) -> Result<Self> {
        check_dim(first.len(), second.len())?;
        if first == second {
            return Err(Error::InvalidArgument("binomial terms must differ".into()));
        }
        Ok(Binomial { first, second })
    }

    pub fn first(&self) -> &ExponentVector {
        &self.first
    }

    pub fn second(&self) -> &ExponentVector {
        &self.second
    }

    pub fn len(&self) -> usize {
        self.first.len()
    }

    pub fn is_empty(&self) -> bool {
        self.first.is_empty()
    }

    pub fn is_homogeneous(&self, order: &WeightedGrevlexOrder) -> Result<bool> {
        Ok(order.weighted_degree(&self.first)? == order.weighted_degree(&self.second)?)
    }

    pub fn leading_term(&self, order: &WeightedGrevlexOrder) -> Result<&ExponentVector> {
        Ok(match order.compare(&self.first, &self.second)? {
            std::cmp::Ordering::Less => &self.second,
            _ => &self.first,
        })
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let mut p = Polynomial::zero();
        p.add_term(self.first.clone(), BigInt::one());
        p.add_term(self.second.clone(), -BigInt::one());
        p
    }
}

/// Leading term of `bin` under `order`.
pub fn leading_term(order: &WeightedGrevlexOrder, bin: &Binomial) -> Result<ExponentVector> {
    bin.leading_term(order).cloned()
}

/// Sparse polynomial with integer coefficients; zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: ExponentVector, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · x^shift · other`.
    pub fn add_scaled(&mut self, c: &BigInt, shift: &ExponentVector, other: &Polynomial) {
        for (m, k) in &other.terms {
            self.add_term(m.add(shift), c * k);
        }
    }

    pub fn leading(&self, order: &WeightedGrevlexOrder) -> Option<(&ExponentVector, &BigInt)> {
        self.terms.iter().max_by(|a, b| order.compare_unchecked(a.0, b.0))
    }

    fn take(&mut self, m: &ExponentVector) -> Option<BigInt> {
        self.terms.remove(m)
    }
}

struct Divisor {
    poly: Polynomial,
    lead: ExponentVector,
    // ±1 for binomials.
    lead_coeff: BigInt,
}

impl Divisor {
    fn new(poly: Polynomial, order: &WeightedGrevlexOrder) -> Self {
        let (lead, lead_coeff) = poly.leading(order).map(|(m, c)| (m.clone(), c.clone())).expect("nonzero");
        Divisor { poly, lead, lead_coeff }
    }
}

/// Remainder of multivariate division of `p` by monic-up-to-sign divisors.
fn reduce(mut p: Polynomial, divisors: &[Divisor], order: &WeightedGrevlexOrder) -> Polynomial {
    let mut rem = Polynomial::zero();
    while let Some((lt, lc)) = p.leading(order).map(|(m, c)| (m.clone(), c.clone())) {
        match divisors.iter().find(|d| d.lead.divides_unchecked(&lt)) {
            Some(d) => {
                let shift = lt.checked_sub(&d.lead).expect("divides");
                let (q, r) = (&lc / &d.lead_coeff, &lc % &d.lead_coeff);
                debug_assert!(r.is_zero(), "leading coefficients are units");
                p.add_scaled(&-q, &shift, &d.poly);
            }
            None => {
                let c = p.take(&lt).expect("present");
                rem.add_term(lt, c);
            }
        }
    }
    rem
}

/// S-polynomial `(L/lt_f)·f/lc_f − (L/lt_g)·g/lc_g` with `L = lcm(lt_f, lt_g)`.
fn s_polynomial(f: &Divisor, g: &Divisor) -> Polynomial {
    let l = f.lead.lcm(&g.lead);
    let mut s = Polynomial::zero();
    let sign_f = if f.lead_coeff.is_positive() { BigInt::one() } else { -BigInt::one() };
    let sign_g = if g.lead_coeff.is_positive() { BigInt::one() } else { -BigInt::one() };
    s.add_scaled(&sign_f, &l.checked_sub(&f.lead).expect("lcm"), &f.poly);
    s.add_scaled(&-sign_g, &l.checked_sub(&g.lead).expect("lcm"), &g.poly);
    s
}

/// Tests whether `basis` is a Gröbner basis of the ideal it generates under
/// `order`, by reducing every S-polynomial modulo the basis.
///
/// Every input binomial must be homogeneous for the order's weights; anything
/// else cannot be a toric generator and is rejected.
pub fn buchberger_verify(basis: &[Binomial], order: &WeightedGrevlexOrder) -> Result<bool> {
    for b in basis {
        check_dim(order.len(), b.len())?;
        if !b.is_homogeneous(order)? {
            return Err(Error::NonHomogeneous(format!("{:?} - {:?}", b.first, b.second)));
        }
    }
    let divisors: Vec<Divisor> = basis.iter().map(|b| Divisor::new(b.to_polynomial(), order)).collect();
    for i in 0..divisors.len() {
        for j in i + 1..divisors.len() {
            let s = s_polynomial(&divisors[i], &divisors[j]);
            if !reduce(s, &divisors, order).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
