//! Size caps for the exponential-time routines.

use std::env;

use crate::error::{Error, Result};

/// Name of the environment variable that overrides every default cap.
pub const MAX_N_ENV: &str = "OPDET_MAX_N";

/// Upper bounds on `n` for each exponential algorithm.
///
/// The defaults keep each routine in the range of seconds on a laptop.
/// Fraction-free elimination is polynomial and has no cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Leibniz sum and brute-force permanent (n! terms).
    pub permutations: usize,
    /// Cofactor recursion (n! leaves).
    pub cofactor: usize,
    /// Ryser's formula (2^n subsets).
    pub ryser: usize,
    /// Anything that walks every ordered partition (Fubini(n) terms).
    pub ordered_partitions: usize,
    /// Exhaustive coefficient tables (n^n functions times Fubini(n) partitions).
    pub coefficient_table: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            permutations: 10,
            cofactor: 10,
            ryser: 20,
            ordered_partitions: 9,
            coefficient_table: 5,
        }
    }
}

impl Limits {
    /// Every cap set to the same value.
    pub fn uniform(cap: usize) -> Self {
        Limits {
            permutations: cap,
            cofactor: cap,
            ryser: cap,
            ordered_partitions: cap,
            coefficient_table: cap,
        }
    }

    /// Defaults, unless `OPDET_MAX_N` is set, in which case it replaces every cap.
    pub fn from_env() -> Result<Self> {
        match env::var(MAX_N_ENV) {
            Ok(raw) => {
                let cap = raw.trim().parse::<usize>().map_err(|_| {
                    Error::Argument(format!("{MAX_N_ENV} must be a positive integer, got {raw:?}"))
                })?;
                if cap == 0 {
                    return Err(Error::Argument(format!("{MAX_N_ENV} must be at least 1")));
                }
                Ok(Limits::uniform(cap))
            }
            Err(_) => Ok(Limits::default()),
        }
    }
}

/// Subsets are stored as `u64` bitmasks, which bounds every ground set.
pub const BITMASK_MAX_N: usize = 63;

pub(crate) fn check(what: &'static str, n: usize, cap: usize) -> Result<()> {
    let cap = cap.min(BITMASK_MAX_N);
    if n > cap {
        Err(Error::Size { what, n, cap })
    } else {
        Ok(())
    }
}
