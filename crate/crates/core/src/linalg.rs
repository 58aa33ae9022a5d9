//! Classical determinant and permanent algorithms, used as independent oracles.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::limits::{check, Limits};
use crate::matrix::ExactMatrix;
use crate::permutations::SignedPermutations;

/// Leibniz sum over all permutations: `sum sgn(s) prod_i a_{i, s(i)}`.
pub fn det_leibniz(m: &ExactMatrix, limits: &Limits) -> Result<BigInt> {
    check("Leibniz determinant", m.n(), limits.permutations)?;
    Ok(permutation_sum(m, true))
}

/// Permanent by direct summation over all permutations.
pub fn perm_brute(m: &ExactMatrix, limits: &Limits) -> Result<BigInt> {
    check("brute-force permanent", m.n(), limits.permutations)?;
    Ok(permutation_sum(m, false))
}

fn permutation_sum(m: &ExactMatrix, signed: bool) -> BigInt {
    let mut total = BigInt::zero();
    'perms: for (perm, sign) in SignedPermutations::new(m.n()) {
        let mut product = BigInt::one();
        for (row, &col) in perm.iter().enumerate() {
            let a = m.at(row, col);
            if a.is_zero() {
                continue 'perms;
            }
            product *= a;
        }
        if signed && sign < 0 {
            total -= product;
        } else {
            total += product;
        }
    }
    total
}

/// Laplace expansion along the first row, recursively.
pub fn det_cofactor(m: &ExactMatrix, limits: &Limits) -> Result<BigInt> {
    check("cofactor determinant", m.n(), limits.cofactor)?;
    Ok(cofactor_minor(m, 0, 0))
}

// Determinant of the minor made of rows `row..n` and the columns not in `used`.
fn cofactor_minor(m: &ExactMatrix, row: usize, used: u64) -> BigInt {
    let n = m.n();
    if row == n {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    let mut position = 0;
    for col in 0..n {
        if used & (1 << col) != 0 {
            continue;
        }
        let a = m.at(row, col);
        if !a.is_zero() {
            let term = a * cofactor_minor(m, row + 1, used | (1 << col));
            if position % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        position += 1;
    }
    total
}

/// Fraction-free (Bareiss) elimination. Every division is exact.
pub fn det_bareiss(m: &ExactMatrix) -> BigInt {
    let n = m.n();
    let mut a = m.rows();
    let mut negate = false;
    let mut previous = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let numerator = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = numerator / &previous;
            }
        }
        previous = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Ryser's formula: `sum_{S} (-1)^{n-|S|} prod_i sum_{j in S} a_ij`, column subsets in Gray-code order.
pub fn perm_ryser(m: &ExactMatrix, limits: &Limits) -> Result<BigInt> {
    let n = m.n();
    check("Ryser permanent", n, limits.ryser)?;
    let mut row_sums = vec![BigInt::zero(); n];
    let mut total = BigInt::zero();
    let mut subset: u64 = 0;
    for step in 1u64..(1u64 << n) {
        let col = step.trailing_zeros() as usize;
        subset ^= 1 << col;
        let adding = subset & (1 << col) != 0;
        for (row, sum) in row_sums.iter_mut().enumerate() {
            if adding {
                *sum += m.at(row, col);
            } else {
                *sum -= m.at(row, col);
            }
        }
        if row_sums.iter().any(Zero::is_zero) {
            continue;
        }
        let product = row_sums.iter().fold(BigInt::one(), |acc, s| acc * s);
        if (n - subset.count_ones() as usize) % 2 == 0 {
            total += product;
        } else {
            total -= product;
        }
    }
    Ok(total)
}
