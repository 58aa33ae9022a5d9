//! Stirling numbers of the second kind and ordered Bell (Fubini) numbers.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest `n` accepted by [`fubini`].
pub const FUBINI_MAX_N: usize = 30;

/// Row `n` of the Stirling triangle: `out[k] = S(n, k)` for `k = 0..=n`.
pub fn stirling2_row(n: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for m in 1..=n {
        let mut next = vec![BigUint::zero(); m + 1];
        for k in 1..=m {
            // S(m, k) = k S(m-1, k) + S(m-1, k-1)
            let mut v = row[k - 1].clone();
            if k < m {
                v += &row[k] * BigUint::from(k);
            }
            next[k] = v;
        }
        row = next;
    }
    row
}

pub fn stirling2(n: usize, k: usize) -> Result<BigUint> {
    if k > n {
        return Err(Error::Argument(format!("S(n, k) needs k <= n, got n = {n}, k = {k}")));
    }
    Ok(stirling2_row(n).swap_remove(k))
}

/// `k! S(n, k)`: the number of ordered partitions of an `n`-set into `k` blocks, for every `k`.
pub fn ordered_partition_counts(n: usize) -> Vec<BigUint> {
    let mut factorial = BigUint::one();
    stirling2_row(n)
        .into_iter()
        .enumerate()
        .map(|(k, s)| {
            if k > 0 {
                factorial *= BigUint::from(k);
            }
            s * &factorial
        })
        .collect()
}

/// Number of ordered partitions of an `n`-set.
pub fn fubini(n: usize) -> Result<BigUint> {
    if n > FUBINI_MAX_N {
        return Err(Error::Size { what: "Fubini number", n, cap: FUBINI_MAX_N });
    }
    Ok(ordered_partition_counts(n).into_iter().sum())
}

/// `sum_k (-1)^(n-k) k! S(n, k)`, which is always 1.
pub fn stirling_alternating_identity(n: usize) -> BigInt {
    ordered_partition_counts(n)
        .into_iter()
        .enumerate()
        .fold(BigInt::zero(), |acc, (k, c)| {
            let c = BigInt::from(c);
            if (n - k) % 2 == 0 {
                acc + c
            } else {
                acc - c
            }
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn stirling_examples() {
        assert_eq!(stirling2(3, 2).unwrap(), u(3));
        assert_eq!(stirling2(4, 2).unwrap(), u(7));
        assert_eq!(stirling2(0, 0).unwrap(), u(1));
        assert_eq!(stirling2(5, 0).unwrap(), u(0));
        for n in 0..10 {
            assert_eq!(stirling2(n, n).unwrap(), u(1));
        }
        assert!(stirling2(2, 3).is_err());
    }

    #[test]
    fn fubini_examples() {
        assert_eq!(fubini(0).unwrap(), u(1));
        assert_eq!(fubini(1).unwrap(), u(1));
        assert_eq!(fubini(3).unwrap(), u(13));
        assert_eq!(fubini(6).unwrap(), u(4683));
        assert!(fubini(30).is_ok());
        assert!(matches!(fubini(31), Err(Error::Size { .. })));
    }

    #[test]
    fn alternating_identity() {
        // n = 3: 1 - 2!*3 + 3!*1
        for n in 0..=20 {
            assert_eq!(stirling_alternating_identity(n), BigInt::from(1), "n = {n}");
        }
    }
}
