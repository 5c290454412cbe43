//! Plain-text monomial format: `x<i>^<e>` factors joined by `*`, `^1`
//! omitted, the unit monomial written `1`. Generic ideals number variables
//! from 1; curve ideals from 0, matching `x0 … xn`.

use super::ideal::{minimalize, MonomialIdeal};
use super::vector::ExponentVector;
use crate::error::{Error, Result};

/// First variable index used when rendering or parsing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarBase {
    /// `x1, x2, …` for generic ideals.
    One,
    /// `x0, x1, …` for ideals living in a curve's coordinate ring.
    Zero,
}

impl VarBase {
    fn offset(self) -> usize {
        match self {
            VarBase::One => 1,
            VarBase::Zero => 0,
        }
    }
}

pub fn format_monomial(v: &ExponentVector, base: VarBase) -> String {
    let factors: Vec<String> = v
        .coords()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            let var = i + base.offset();
            if e == 1 {
                format!("x{var}")
            } else {
                format!("x{var}^{e}")
            }
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

/// One generator per line, each terminated by `\n`; the zero ideal renders as
/// the empty string.
pub fn format_ideal(ideal: &MonomialIdeal, base: VarBase) -> String {
    let mut out = String::new();
    for g in ideal.generators() {
        out.push_str(&format_monomial(g, base));
        out.push('\n');
    }
    out
}

fn parse_factors(s: &str, base: VarBase) -> Result<Vec<(usize, u32)>> {
    let s = s.trim();
    if s == "1" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for raw in s.split('*') {
        let f = raw.trim();
        let rest = f
            .strip_prefix('x')
            .ok_or_else(|| Error::Parse(format!("factor `{f}` does not start with `x`")))?;
        let (var, exp) = match rest.split_once('^') {
            Some((v, e)) => (v, e),
            None => (rest, "1"),
        };
        let var: usize = var.trim().parse().map_err(|_| Error::Parse(format!("bad variable index in `{f}`")))?;
        let exp: u32 = exp.trim().parse().map_err(|_| Error::Parse(format!("bad exponent in `{f}`")))?;
        let pos = var
            .checked_sub(base.offset())
            .ok_or_else(|| Error::Parse(format!("variable x{var} is below the first index")))?;
        out.push((pos, exp));
    }
    Ok(out)
}

fn assemble(factors: &[(usize, u32)], num_vars: usize) -> Result<ExponentVector> {
    let mut v = ExponentVector::zero(num_vars);
    for &(pos, e) in factors {
        if pos >= num_vars {
            return Err(Error::Parse(format!("variable index {pos} outside {num_vars} variables")));
        }
        v.0[pos] += e;
    }
    Ok(v)
}

pub fn parse_monomial(s: &str, base: VarBase, num_vars: usize) -> Result<ExponentVector> {
    assemble(&parse_factors(s, base)?, num_vars)
}

/// Parses comma- or newline-separated monomials. When `num_vars` is `None`
/// the ambient dimension is the largest variable index that occurs (at least
/// one variable).
pub fn parse_ideal(s: &str, base: VarBase, num_vars: Option<usize>) -> Result<MonomialIdeal> {
    let mut parsed = Vec::new();
    for item in s.split([',', '\n']) {
        if item.trim().is_empty() {
            continue;
        }
        parsed.push(parse_factors(item, base)?);
    }
    let inferred = parsed.iter().flatten().map(|&(p, _)| p + 1).max().unwrap_or(1);
    let n = num_vars.unwrap_or(inferred);
    let gens = parsed.iter().map(|f| assemble(f, n)).collect::<Result<Vec<_>>>()?;
    minimalize(gens, n)
}

pub fn ideal_to_json(ideal: &MonomialIdeal) -> serde_json::Value {
    serde_json::to_value(ideal).expect("ideal serializes")
}

pub fn ideal_from_json(s: &str) -> Result<MonomialIdeal> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_generators_line_by_line() {
        let i = MonomialIdeal::from_rows(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 0, 0]]).unwrap();
        assert_eq!(format_ideal(&i, VarBase::One), "1\n");
        let j = MonomialIdeal::from_rows(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 1, 5]]).unwrap();
        assert_eq!(format_ideal(&j, VarBase::One), "x1^2\nx1*x2\nx2*x3^5\n");
        assert_eq!(format_ideal(&j, VarBase::Zero), "x0^2\nx0*x1\nx1*x2^5\n");
        assert_eq!(format_ideal(&MonomialIdeal::zero(2), VarBase::One), "");
    }

    #[test]
    fn parses_inline_text() {
        let i = parse_ideal("x1^4, x1^3*x2, x1*x2^3, x2^4", VarBase::One, None).unwrap();
        assert_eq!(i.num_vars(), 2);
        assert_eq!(i.len(), 4);
        let j = parse_ideal("x1*x1, x3", VarBase::One, Some(4)).unwrap();
        assert_eq!(j.generators()[0].coords(), &[0, 0, 1, 0]);
        assert_eq!(j.generators()[1].coords(), &[2, 0, 0, 0]);
        assert!(parse_ideal("1", VarBase::One, Some(2)).unwrap().is_unit());
    }

    #[test]
    fn rejects_malformed_text() {
        assert!(matches!(parse_ideal("y^2", VarBase::One, None), Err(Error::Parse(_))));
        assert!(matches!(parse_ideal("x0", VarBase::One, None), Err(Error::Parse(_))));
        assert!(matches!(parse_ideal("x1^a", VarBase::One, None), Err(Error::Parse(_))));
        assert!(matches!(parse_ideal("x3", VarBase::One, Some(2)), Err(Error::Parse(_))));
    }

    #[test]
    fn text_round_trip() {
        let i = MonomialIdeal::from_rows(3, &[&[3, 0, 1], &[0, 2, 2], &[1, 1, 0]]).unwrap();
        let s = format_ideal(&i, VarBase::Zero);
        assert_eq!(parse_ideal(&s, VarBase::Zero, Some(3)).unwrap(), i);
    }
}
