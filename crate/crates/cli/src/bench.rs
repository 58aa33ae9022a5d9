//! Wall-clock comparison of the determinant and permanent routines.

use std::fmt::Write;
use std::time::Instant;

use num_bigint::BigUint;
use opdet::{det_bareiss, det_cofactor, det_leibniz, det_terrible, fubini, perm_ryser, ExactMatrix, Limits};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::verify::random_matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Terrible,
    Leibniz,
    Cofactor,
    Bareiss,
    Ryser,
}

impl Method {
    pub const ALL: [Method; 5] = [Method::Terrible, Method::Leibniz, Method::Cofactor, Method::Bareiss, Method::Ryser];

    fn name(self) -> &'static str {
        match self {
            Method::Terrible => "terrible",
            Method::Leibniz => "leibniz",
            Method::Cofactor => "cofactor",
            Method::Bareiss => "bareiss",
            Method::Ryser => "ryser",
        }
    }

    /// Terms summed: ordered partitions, permutations, column subsets, or pivot steps.
    pub fn terms(self, n: usize) -> BigUint {
        match self {
            Method::Terrible => fubini(n).unwrap_or_default(),
            Method::Leibniz | Method::Cofactor => (1..=n).map(BigUint::from).product(),
            Method::Ryser => BigUint::from(1u8) << n,
            Method::Bareiss => BigUint::from(n),
        }
    }

    fn cap(self, limits: &Limits) -> usize {
        match self {
            Method::Terrible => limits.ordered_partitions,
            Method::Leibniz => limits.permutations,
            Method::Cofactor => limits.cofactor,
            Method::Bareiss => usize::MAX,
            Method::Ryser => limits.ryser,
        }
    }

    fn run(self, a: &ExactMatrix, limits: &Limits) -> opdet::Result<()> {
        match self {
            Method::Terrible => det_terrible(a, limits).map(drop),
            Method::Leibniz => det_leibniz(a, limits).map(drop),
            Method::Cofactor => det_cofactor(a, limits).map(drop),
            Method::Bareiss => {
                det_bareiss(a);
                Ok(())
            }
            Method::Ryser => perm_ryser(a, limits).map(drop),
        }
    }
}

/// CSV with columns `method,n,terms,repeats,micros_per_run`; sizes above a method's cap are skipped.
pub fn run(methods: &[Method], n_max: usize, repeats: usize, seed: u64, limits: &Limits) -> opdet::Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let matrices: Vec<ExactMatrix> = (1..=n_max).map(|n| random_matrix(n, &mut rng)).collect();
    let mut out = String::from("method,n,terms,repeats,micros_per_run\n");
    let repeats = repeats.max(1);
    for &method in methods {
        for a in &matrices {
            let n = a.n();
            if n > method.cap(limits) {
                continue;
            }
            let start = Instant::now();
            for _ in 0..repeats {
                method.run(a, limits)?;
            }
            let micros = start.elapsed().as_secs_f64() * 1e6 / repeats as f64;
            let _ = writeln!(out, "{},{},{},{},{:.1}", method.name(), n, method.terms(n), repeats, micros);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn term_counts_at_six() {
        assert_eq!(Method::Terrible.terms(6), BigUint::from(4683u32));
        assert_eq!(Method::Leibniz.terms(6), BigUint::from(720u32));
        assert_eq!(Method::Ryser.terms(6), BigUint::from(64u32));
    }

    #[test]
    fn csv_rows() {
        let csv = run(&[Method::Terrible, Method::Ryser], 3, 1, 1, &Limits::default()).unwrap();
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines.len(), 7);
        assert!(lines[3].starts_with("terrible,3,13,1,"));
        assert!(lines[6].starts_with("ryser,3,8,1,"));
    }
}
