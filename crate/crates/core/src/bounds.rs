use crate::error::{Error, Result};

/// Limits on enumeration work. All defaults are desk-scale.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Work units allowed for any single enumeration.
    pub max_work: u128,
    /// Largest group produced by permutation closure.
    pub max_closure: usize,
    /// Largest group whose multiplication table is materialized.
    pub max_table: usize,
    /// Largest group for character tables.
    pub max_chartable: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_work: 100_000_000, max_closure: 1_000_000, max_table: 8192, max_chartable: 512 }
    }
}

impl Bounds {
    pub fn check_work(&self, what: &'static str, needed: u128) -> Result<()> {
        if needed > self.max_work {
            Err(Error::SizeExceeded { what, needed, limit: self.max_work })
        } else {
            Ok(())
        }
    }
}

/// `base^exp` saturating at `u128::MAX`.
pub(crate) fn pow_sat(base: u128, exp: u32) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
    }
    acc
}
