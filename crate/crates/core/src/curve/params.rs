use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::semigroup::SemigroupTable;
use crate::error::{Error, Result};

/// The arithmetic sequence `m_i = m0 + i·d`, `i = 0, …, n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSpec")]
pub struct CurveSpec {
    n: usize,
    m0: u64,
    d: u64,
}

#[derive(Deserialize)]
struct RawSpec {
    n: usize,
    m0: u64,
    d: u64,
}

impl TryFrom<RawSpec> for CurveSpec {
    type Error = Error;

    fn try_from(r: RawSpec) -> Result<Self> {
        CurveSpec::new(r.n, r.m0, r.d)
    }
}

impl CurveSpec {
    pub fn new(n: usize, m0: u64, d: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidCurve(format!("n = {n} must be at least 2")));
        }
        if m0 <= n as u64 {
            return Err(Error::InvalidCurve(format!("m0 = {m0} must exceed n = {n}")));
        }
        if d == 0 {
            return Err(Error::InvalidCurve("d must be positive".into()));
        }
        if m0.gcd(&d) != 1 {
            return Err(Error::InvalidCurve(format!("gcd(m0, d) = gcd({m0}, {d}) must be 1")));
        }
        if (n as u64).checked_mul(d).and_then(|x| x.checked_add(m0)).is_none() {
            return Err(Error::InvalidCurve("sequence overflows".into()));
        }
        Ok(CurveSpec { n, m0, d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m0(&self) -> u64 {
        self.m0
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn m(&self, i: usize) -> u64 {
        self.m0 + i as u64 * self.d
    }

    /// `(m_0, …, m_n)`.
    pub fn weights(&self) -> Vec<u64> {
        (0..=self.n).map(|i| self.m(i)).collect()
    }

    /// `m0 = q·n + r` with `1 ≤ r ≤ n`.
    pub fn q_r(&self) -> (u64, u64) {
        let n = self.n as u64;
        let q = (self.m0 - 1) / n;
        (q, self.m0 - q * n)
    }
}

/// The parameters of the defining ideal in closed form, each checked
/// against its defining property in the semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveParameters {
    pub p: u64,
    pub q: u64,
    pub r: u64,
    pub u: u64,
    pub upsilon: u64,
    pub w: u64,
    pub lambda: u64,
    pub mu: u64,
    pub z: u64,
    /// `1` when `r < n`; undefined when `r = n`.
    pub epsilon: Option<u64>,
    /// `[0, n − r − 1]`, empty when `r = n`.
    pub j_range: Option<(u64, u64)>,
}

/// `g_t = q_t m_p + m_{r_t}` with `t = q_t p + r_t`, `1 ≤ r_t ≤ p`.
fn g(spec: &CurveSpec, t: u64) -> i64 {
    let p = spec.n as i64 - 1;
    let t = t as i64;
    let qt = (t - 1).div_euclid(p);
    let rt = t - qt * p;
    qt * spec.m(p as usize) as i64 + spec.m(rt as usize) as i64
}

pub fn curve_params(spec: &CurveSpec) -> Result<CurveParameters> {
    let n = spec.n as u64;
    let (q, r) = spec.q_r();
    let closed = CurveParameters {
        p: n - 1,
        q,
        r,
        u: n,
        upsilon: q + 1,
        w: 1,
        lambda: 1,
        mu: q + spec.d,
        z: n - r,
        epsilon: (r < n).then_some(1),
        j_range: (r < n).then(|| (0, n - r - 1)),
    };
    verify(spec, &closed)?;
    Ok(closed)
}

fn mismatch(what: &str, oracle: impl std::fmt::Debug, closed: impl std::fmt::Debug) -> Error {
    Error::CrossValidation(format!("{what}: semigroup gives {oracle:?}, closed form {closed:?}"))
}

/// Recomputes `u`, `υ`, `λ`, `w`, `μ`, `z` from their defining properties.
fn verify(spec: &CurveSpec, c: &CurveParameters) -> Result<()> {
    let weights = spec.weights();
    let gamma = SemigroupTable::new(&weights)?;
    let gamma_p = SemigroupTable::new(&weights[..spec.n])?;
    let m0 = spec.m0 as i64;
    let mn = spec.m(spec.n) as i64;

    let u = (0..=2 * c.u + 2)
        .find(|&t| gamma.contains(g(spec, t) - m0))
        .ok_or_else(|| Error::CrossValidation("no t with g_t − m0 in the semigroup".into()))?;
    if u != c.u {
        return Err(mismatch("u", u, c.u));
    }
    let upsilon = (1..=c.upsilon + 1)
        .find(|&b| gamma_p.contains(b as i64 * mn))
        .ok_or_else(|| Error::CrossValidation("no b with b·m_n in the sub-semigroup".into()))?;
    if upsilon != c.upsilon {
        return Err(mismatch("upsilon", upsilon, c.upsilon));
    }

    // g_u = λ m0 + w m_n with 0 ≤ w < υ, λ ≥ 1.
    let gu = g(spec, u);
    let lw: Vec<(i64, i64)> = (0..upsilon as i64)
        .filter_map(|w| {
            let rest = gu - w * mn;
            (rest > 0 && rest % m0 == 0).then_some((rest / m0, w))
        })
        .collect();
    if lw != [(c.lambda as i64, c.w as i64)] {
        return Err(mismatch("(lambda, w)", lw, (c.lambda, c.w)));
    }

    // υ m_n = μ m0 + g_z with 0 ≤ z < u, μ ≥ 0.
    let lhs = upsilon as i64 * mn;
    let mz: Vec<(i64, i64)> = (0..u)
        .filter_map(|z| {
            let rest = lhs - g(spec, z);
            (rest >= 0 && rest % m0 == 0).then_some((rest / m0, z as i64))
        })
        .collect();
    if c.r < spec.n as u64 {
        if mz != [(c.mu as i64, c.z as i64)] {
            return Err(mismatch("(mu, z)", mz, (c.mu, c.z)));
        }
        // ε = 0 or 1 according to r_u > r_z or r_u ≤ r_z, with r_u = 1 and r_z = z.
        if c.epsilon != Some(1) || c.z < 1 {
            return Err(mismatch("epsilon", c.epsilon, Some(1)));
        }
    } else {
        // With z = 0 the term g_0 vanishes and the unique solution is
        // μ = q + d + 1; the closed form writes υ m_n = (q+d) m0 + m_{n−r}
        // with m_{n−r} = m0 absorbing the difference.
        if mz != [(c.mu as i64 + 1, 0)] || c.z != 0 {
            return Err(mismatch("(mu, z)", mz, (c.mu + 1, c.z)));
        }
    }
    if lhs != c.mu as i64 * m0 + spec.m(c.z as usize) as i64 {
        return Err(Error::CrossValidation("upsilon·m_n ≠ mu·m0 + m_z".into()));
    }
    Ok(())
}
