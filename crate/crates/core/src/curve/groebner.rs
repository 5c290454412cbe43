use super::params::CurveSpec;
use crate::error::{Error, Result};
use crate::monomial::{minimalize, Binomial, ExponentVector, MonomialIdeal, WeightedGrevlexOrder};

/// Weighted grevlex with `wt(x_i) = m_i`.
pub fn curve_order(spec: &CurveSpec) -> WeightedGrevlexOrder {
    WeightedGrevlexOrder::new(spec.weights()).expect("positive weights")
}

fn monomial(len: usize, factors: &[(usize, u32)]) -> ExponentVector {
    let mut v = vec![0u32; len];
    for &(i, e) in factors {
        v[i] += e;
    }
    ExponentVector::from(v)
}

fn q_d(spec: &CurveSpec) -> Result<(u32, u32, usize)> {
    let (q, r) = spec.q_r();
    let q = u32::try_from(q).map_err(|_| Error::InvalidCurve("q exceeds exponent range".into()))?;
    let qd = u32::try_from(spec.d()).ok().and_then(|d| d.checked_add(q));
    let qd = qd.ok_or_else(|| Error::InvalidCurve("q + d exceeds exponent range".into()))?;
    Ok((q, qd, r as usize))
}

/// `{x_i x_j − x_{i−1} x_{j+1} | 1 ≤ i ≤ j ≤ n−1} ∪ {x_{r+j} x_n^q − x_0^{q+d} x_j | 0 ≤ j ≤ n−r}`,
/// each checked to be weight-homogeneous.
pub fn groebner_basis(spec: &CurveSpec) -> Result<Vec<Binomial>> {
    let n = spec.n();
    let len = n + 1;
    let (q, qd, r) = q_d(spec)?;
    let order = curve_order(spec);
    let mut out = Vec::new();
    for i in 1..n {
        for j in i..n {
            out.push(Binomial::new(monomial(len, &[(i, 1), (j, 1)]), monomial(len, &[(i - 1, 1), (j + 1, 1)]))?);
        }
    }
    for j in 0..=n - r {
        out.push(Binomial::new(monomial(len, &[(r + j, 1), (n, q)]), monomial(len, &[(0, qd), (j, 1)]))?);
    }
    for b in &out {
        if !b.is_homogeneous(&order)? {
            return Err(Error::NonHomogeneous(format!("{:?} - {:?}", b.first(), b.second())));
        }
    }
    Ok(out)
}

/// The displayed generators `x_i x_j` (`1 ≤ i ≤ j ≤ n−1`) and `x_{r+j} x_n^q`
/// (`0 ≤ j ≤ n−r`).
pub fn initial_ideal_closed_form(spec: &CurveSpec) -> Result<MonomialIdeal> {
    let n = spec.n();
    let (q, _, r) = q_d(spec)?;
    let mut gens = Vec::new();
    for i in 1..n {
        for j in i..n {
            gens.push(monomial(n + 1, &[(i, 1), (j, 1)]));
        }
    }
    for j in 0..=n - r {
        gens.push(monomial(n + 1, &[(r + j, 1), (n, q)]));
    }
    minimalize(gens, n + 1)
}

/// Leading terms of the Gröbner basis, checked against the closed form.
pub fn initial_ideal(spec: &CurveSpec) -> Result<MonomialIdeal> {
    let order = curve_order(spec);
    let basis = groebner_basis(spec)?;
    let lead = basis.iter().map(|b| b.leading_term(&order).cloned()).collect::<Result<Vec<_>>>()?;
    let ideal = minimalize(lead, spec.n() + 1)?;
    if !ideal.equals(&initial_ideal_closed_form(spec)?)? {
        return Err(Error::CrossValidation("leading terms differ from the displayed initial ideal".into()));
    }
    Ok(ideal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{buchberger_verify, format_ideal, parse_ideal, VarBase};

    fn spec(n: usize, m0: u64, d: u64) -> CurveSpec {
        CurveSpec::new(n, m0, d).unwrap()
    }

    #[test]
    fn twisted_cubic() {
        // Hand trace for (3, 4, 5): q = 1, r = 1, q + d = 2.
        let s = spec(2, 3, 1);
        let basis = groebner_basis(&s).unwrap();
        let expected = [
            ([0, 2, 0], [1, 0, 1]),
            ([0, 1, 1], [3, 0, 0]),
            ([0, 0, 2], [2, 1, 0]),
        ];
        assert_eq!(basis.len(), 3);
        for (b, (f, g)) in basis.iter().zip(expected) {
            assert_eq!(b.first().coords(), f);
            assert_eq!(b.second().coords(), g);
        }
        assert!(buchberger_verify(&basis, &curve_order(&s)).unwrap());
        assert_eq!(format_ideal(&initial_ideal(&s).unwrap(), VarBase::Zero), "x1^2\nx1*x2\nx2^2\n");
    }

    #[test]
    fn figure_curves() {
        let cases = [
            ((3, 19, 1), "x1^2, x1*x2, x2^2, x1*x3^6, x2*x3^6, x3^7"),
            ((3, 8, 3), "x1^2, x1*x2, x2^2, x2*x3^2, x3^3"),
            ((3, 7, 2), "x1^2, x1*x2, x2^2, x1*x3^2, x2*x3^2, x3^3"),
        ];
        for ((n, m0, d), listed) in cases {
            let s = spec(n, m0, d);
            let expected = parse_ideal(listed, VarBase::Zero, Some(n + 1)).unwrap();
            assert!(initial_ideal(&s).unwrap().equals(&expected).unwrap(), "{s:?}");
            assert!(buchberger_verify(&groebner_basis(&s).unwrap(), &curve_order(&s)).unwrap());
        }
    }

    #[test]
    fn figure_three_exponent() {
        // x_3^3 − x_0^{q+d} x_1 with q + d = 5: 51 = 5·8 + 11, while the
        // exponent 3 gives 35.
        let s = spec(3, 8, 3);
        let basis = groebner_basis(&s).unwrap();
        let psi = &basis[4];
        assert_eq!(psi.first().coords(), &[0, 0, 0, 3]);
        assert_eq!(psi.second().coords(), &[5, 1, 0, 0]);
        let bad = Binomial::new(ExponentVector::from([0, 0, 0, 3]), ExponentVector::from([3, 1, 0, 0])).unwrap();
        assert!(!bad.is_homogeneous(&curve_order(&s)).unwrap());
    }

    #[test]
    fn full_remainder_gives_single_theta() {
        // r = n: one binomial x_n^{q+1} − x_0^{q+d+1}.
        let s = spec(3, 9, 1);
        let basis = groebner_basis(&s).unwrap();
        let last = basis.last().unwrap();
        assert_eq!(last.first().coords(), &[0, 0, 0, 3]);
        assert_eq!(last.second().coords(), &[4, 0, 0, 0]);
        assert_eq!(basis.len(), 4);
    }
}
