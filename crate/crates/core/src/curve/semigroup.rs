use num_integer::Integer;

use crate::error::{Error, Result};

/// Membership of `x` in the monoid generated by `gens`, by dynamic
/// programming over `[0, x]`.
pub fn semigroup_member(x: u64, gens: &[u64]) -> bool {
    if x == 0 {
        return true;
    }
    let gens: Vec<u64> = gens.iter().copied().filter(|&g| g > 0 && g <= x).collect();
    if gens.is_empty() {
        return false;
    }
    let x = x as usize;
    let mut reach = vec![false; x + 1];
    reach[0] = true;
    for v in 1..=x {
        reach[v] = gens.iter().any(|&g| g as usize <= v && reach[v - g as usize]);
    }
    reach[x]
}

/// Largest table a [`SemigroupTable`] will allocate.
const MAX_TABLE: u64 = 1 << 26;

/// Membership table of a numerical semigroup. Every integer above
/// `(g_min − 1)(g_max − 1)` is a member, so only the range below that is
/// stored.
#[derive(Debug, Clone)]
pub struct SemigroupTable {
    generators: Vec<u64>,
    bound: u64,
    table: Vec<bool>,
}

impl SemigroupTable {
    /// Requires positive generators with greatest common divisor 1.
    pub fn new(generators: &[u64]) -> Result<Self> {
        if generators.is_empty() || generators.contains(&0) {
            return Err(Error::InvalidArgument("semigroup generators must be positive".into()));
        }
        if generators.iter().fold(0u64, |acc, &g| acc.gcd(&g)) != 1 {
            return Err(Error::InvalidArgument("semigroup generators must be coprime".into()));
        }
        let lo = *generators.iter().min().expect("nonempty");
        let hi = *generators.iter().max().expect("nonempty");
        let bound = (lo - 1)
            .checked_mul(hi - 1)
            .filter(|&b| b <= MAX_TABLE)
            .ok_or_else(|| Error::InvalidArgument("semigroup table would be too large".into()))?;
        let mut table = vec![false; bound as usize + 1];
        table[0] = true;
        for v in 1..=bound as usize {
            table[v] = generators.iter().any(|&g| g as usize <= v && table[v - g as usize]);
        }
        Ok(SemigroupTable { generators: generators.to_vec(), bound, table })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn contains(&self, x: i64) -> bool {
        match u64::try_from(x) {
            Err(_) => false,
            Ok(x) if x > self.bound => true,
            Ok(x) => self.table[x as usize],
        }
    }
}
