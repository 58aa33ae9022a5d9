//! The ordered-partition expansion of the determinant and its coefficients.
//!
//! For an ordered partition `B = (b_1, .., b_r)` of the columns, write
//! `b'_k = b_1 ∪ .. ∪ b_k`. The term of `B` is
//!
//! ```text
//! prod_k prod_{j in b_k} sum_{i in b'_k} a_ij
//! ```
//!
//! and the determinant is the sum over all `B` of `(-1)^(n - r)` times that
//! term. Column indices come from the blocks, row indices from the prefix
//! unions.
//!
//! Expanding every product gives `sum_f c_f a_f` over all functions
//! `f: [n] -> [n]`, with `a_f = prod_j a_{f(j), j}`. A partition contributes
//! to `a_f` exactly when `f(j)` sits no later than `j` for every `j`; that
//! set of partitions is `S_f`, and `c_f` is the signed count of `S_f`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::endofunction::EndoFunction;
use crate::error::{Error, Result};
use crate::limits::{check, Limits};
use crate::matrix::ExactMatrix;
use crate::partition::{
    full_mask, lower_set_cube, mask_elements, singleton_partitions, OrderedPartition,
    OrderedPartitions,
};

fn sign_of(n: usize, blocks: usize) -> i64 {
    if (n - blocks) % 2 == 0 {
        1
    } else {
        -1
    }
}

fn same_n(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::Dimension { expected, found })
    }
}

/// One factor `sum_{i in rows} a_{i, column}` of a partition's term.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearFactor {
    pub column: usize,
    pub rows: Vec<usize>,
}

/// The factors of `B`'s term, block by block, columns ascending within a block.
pub fn term_factors(b: &OrderedPartition) -> Vec<LinearFactor> {
    b.masks()
        .iter()
        .zip(b.prefix_union_masks())
        .flat_map(|(&block, prefix)| {
            let rows = mask_elements(prefix);
            mask_elements(block)
                .into_iter()
                .map(move |column| LinearFactor { column, rows: rows.clone() })
        })
        .collect()
}

/// `prod_k prod_{j in b_k} sum_{i in b'_k} a_ij` (unsigned).
pub fn term_for_partition(a: &ExactMatrix, b: &OrderedPartition) -> Result<BigInt> {
    same_n(a.n(), b.n())?;
    let mut product = BigInt::one();
    for (&block, prefix) in b.masks().iter().zip(b.prefix_union_masks()) {
        for j in mask_elements(block) {
            let column_sum: BigInt = mask_elements(prefix).into_iter().map(|i| a.get(i, j)).sum();
            if column_sum.is_zero() {
                return Ok(BigInt::zero());
            }
            product *= column_sum;
        }
    }
    Ok(product)
}

/// The determinant as the signed sum of partition terms.
///
/// Walks the partitions depth first, one block at a time, carrying the
/// partial product so that shared prefixes are multiplied once and a zero
/// factor prunes its whole subtree. Nothing is stored per partition.
pub fn det_terrible(a: &ExactMatrix, limits: &Limits) -> Result<BigInt> {
    let n = a.n();
    check("ordered-partition determinant", n, limits.ordered_partitions)?;
    let sums = ColumnSums::new(a);
    let mut total = BigInt::zero();
    sums.walk(0, 0, &BigInt::one(), &mut total);
    Ok(total)
}

/// [`det_terrible`] with the top level split by first block across the rayon pool.
pub fn det_terrible_parallel(a: &ExactMatrix, limits: &Limits) -> Result<BigInt> {
    let n = a.n();
    check("ordered-partition determinant", n, limits.ordered_partitions)?;
    let sums = ColumnSums::new(a);
    let full = full_mask(n);
    Ok((1..=full)
        .into_par_iter()
        .map(|first| {
            let mut partial = BigInt::zero();
            if let Some(factor) = sums.block_factor(first, first) {
                sums.walk(first, 1, &factor, &mut partial);
            }
            partial
        })
        .sum())
}

// Column sums over every subset of rows: sums[rows][j] = sum_{i in rows} a_ij.
struct ColumnSums {
    n: usize,
    sums: Vec<Vec<BigInt>>,
}

impl ColumnSums {
    fn new(a: &ExactMatrix) -> Self {
        let n = a.n();
        let mut sums = vec![vec![BigInt::zero(); n]; 1 << n];
        for rows in 1usize..(1 << n) {
            let low = rows.trailing_zeros() as usize;
            let rest = rows & (rows - 1);
            let row: Vec<BigInt> = (0..n).map(|j| &sums[rest][j] + a.at(low, j)).collect();
            sums[rows] = row;
        }
        ColumnSums { n, sums }
    }

    // None when the factor is zero.
    fn block_factor(&self, block: u64, prefix: u64) -> Option<BigInt> {
        let row = &self.sums[prefix as usize];
        let mut product = BigInt::one();
        let mut rest = block;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            if row[j].is_zero() {
                return None;
            }
            product *= &row[j];
            rest &= rest - 1;
        }
        Some(product)
    }

    fn walk(&self, covered: u64, blocks: usize, product: &BigInt, total: &mut BigInt) {
        let available = full_mask(self.n) & !covered;
        if available == 0 {
            if sign_of(self.n, blocks) > 0 {
                *total += product;
            } else {
                *total -= product;
            }
            return;
        }
        // every nonempty submask of `available`, ascending
        let mut block = 0u64;
        loop {
            block = block.wrapping_sub(available) & available;
            if block == 0 {
                break;
            }
            let prefix = covered | block;
            if let Some(factor) = self.block_factor(block, prefix) {
                self.walk(prefix, blocks + 1, &(product * factor), total);
            }
        }
    }
}

/// `a_f = prod_j a_{f(j), j}`.
pub fn monomial(a: &ExactMatrix, f: &EndoFunction) -> Result<BigInt> {
    same_n(a.n(), f.n())?;
    Ok((1..=f.n()).map(|j| a.get(f.apply(j), j)).product())
}

/// `B` belongs to `S_f`: `f(j)` lies in a block no later than `j`'s, for every `j`.
pub fn in_support_set(b: &OrderedPartition, f: &EndoFunction) -> Result<bool> {
    same_n(f.n(), b.n())?;
    Ok(f.is_satisfied_by(b))
}

/// `S_f` by filtering every ordered partition.
pub fn support_set(f: &EndoFunction, limits: &Limits) -> Result<BTreeSet<OrderedPartition>> {
    check("support set", f.n(), limits.ordered_partitions)?;
    Ok(OrderedPartitions::new(f.n()).filter(|b| f.is_satisfied_by(b)).collect())
}

/// `S_f` for acyclic `f` as the union of the cubes under the singleton partitions that obey `f`'s rules.
pub fn support_set_via_cubes(f: &EndoFunction, limits: &Limits) -> Result<BTreeSet<OrderedPartition>> {
    check("support set", f.n(), limits.ordered_partitions)?;
    let rules = f.rules()?;
    let mut out = BTreeSet::new();
    for vertex in singleton_partitions(f.n()) {
        if rules.is_satisfied_by(vertex.as_partition()) {
            out.extend(lower_set_cube(&vertex));
        }
    }
    Ok(out)
}

/// `c_f = sum_{B in S_f} (-1)^(n - |B|)`.
pub fn coefficient_direct(f: &EndoFunction, limits: &Limits) -> Result<i64> {
    let n = f.n();
    check("coefficient", n, limits.ordered_partitions)?;
    Ok(OrderedPartitions::new(n)
        .filter(|b| f.is_satisfied_by(b))
        .map(|b| sign_of(n, b.num_blocks()))
        .sum())
}

/// `c_f = (-1)^(n - |D_f|) c_g` where `g` is the flattened function on the reduced domain `D_f`.
pub fn coefficient_via_flattening(f: &EndoFunction, limits: &Limits) -> Result<i64> {
    check("coefficient", f.n(), limits.ordered_partitions)?;
    let flat = f.flatten();
    let reduced = coefficient_direct(&flat.function, limits)?;
    Ok(sign_of(f.n(), flat.domain_size()) * reduced)
}

/// `c_f` for every `f` on `{1..n}`, functions with `c_f = 0` included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientTable {
    n: usize,
    entries: BTreeMap<EndoFunction, i64>,
}

impl CoefficientTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, f: &EndoFunction) -> Option<i64> {
        self.entries.get(f).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in lexicographic order of the function table.
    pub fn iter(&self) -> impl Iterator<Item = (&EndoFunction, i64)> {
        self.entries.iter().map(|(f, &c)| (f, c))
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (&EndoFunction, i64)> {
        self.iter().filter(|(_, c)| *c != 0)
    }
}

/// Expands every partition's product of sums symbolically.
///
/// For each `B`, every way of choosing a row `i in b'_k` for each column
/// `j in b_k` is one monomial `a_f` with `f(j) = i`; it receives `(-1)^(n - |B|)`.
/// This never consults `S_f`, so it is independent of [`coefficient_direct`].
pub fn coefficient_table(n: usize, limits: &Limits) -> Result<CoefficientTable> {
    if n == 0 {
        return Err(Error::Argument("n must be at least 1".into()));
    }
    check("coefficient table", n, limits.coefficient_table.min(limits.ordered_partitions))?;
    let size = n.pow(n as u32);
    let mut dense = vec![0i64; size];
    // weight[j] = n^(n - 1 - j), so index order = lexicographic table order
    let weight: Vec<usize> = (0..n).map(|j| n.pow((n - 1 - j) as u32)).collect();
    for b in OrderedPartitions::new(n) {
        let sign = sign_of(n, b.num_blocks());
        let prefixes = b.prefix_union_masks();
        let allowed: Vec<Vec<usize>> = b
            .block_indices()
            .into_iter()
            .map(|k| mask_elements(prefixes[k - 1]))
            .collect();
        distribute(&allowed, &weight, 0, 0, sign, &mut dense);
    }
    let entries = EndoFunction::all(n).zip(dense).collect();
    Ok(CoefficientTable { n, entries })
}

fn distribute(allowed: &[Vec<usize>], weight: &[usize], column: usize, index: usize, sign: i64, dense: &mut [i64]) {
    if column == allowed.len() {
        dense[index] += sign;
        return;
    }
    for &row in &allowed[column] {
        distribute(allowed, weight, column + 1, index + (row - 1) * weight[column], sign, dense);
    }
}
