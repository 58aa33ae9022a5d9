//! Exact determinants through the ordered-partition ("terrible") expansion,
//! with the combinatorics that explain why it works.
//!
//! * [`matrix`]: integer matrices and their text/JSON formats. Entry `(i, j)` is
//!   row `i`, column `j`, 1-based.
//! * [`linalg`]: Leibniz, cofactor and Bareiss determinants; brute-force and Ryser permanents.
//! * [`partition`]: ordered set partitions, their enumeration and the merge poset.
//! * [`stirling`]: Stirling numbers of the second kind and Fubini numbers.
//! * [`endofunction`]: cycle structure, flattening, rule sets and rooted forests.
//! * [`expansion`]: the expansion itself and the coefficients `c_f`.
//! * [`permutahedron`]: vertex coordinates, half-spaces and Euler characteristics.
//!
//! ```
//! use opdet::{det_terrible, det_bareiss, ExactMatrix, Limits};
//!
//! let a = ExactMatrix::from_rows(vec![vec![2, 3], vec![5, 7]]).unwrap();
//! assert_eq!(det_terrible(&a, &Limits::default()).unwrap(), det_bareiss(&a));
//! ```

pub mod endofunction;
pub mod error;
pub mod expansion;
pub mod limits;
pub mod linalg;
pub mod matrix;
pub mod partition;
pub mod permutahedron;
pub mod permutations;
pub mod stirling;

pub use endofunction::{CycleDecomposition, EndoFunction, Flattened, RootedForest, RuleSet};
pub use error::{Error, Result};
pub use expansion::{
    coefficient_direct, coefficient_table, coefficient_via_flattening, det_terrible,
    det_terrible_parallel, in_support_set, monomial, support_set, support_set_via_cubes,
    term_factors, term_for_partition, CoefficientTable, LinearFactor,
};
pub use limits::Limits;
pub use linalg::{det_bareiss, det_cofactor, det_leibniz, perm_brute, perm_ryser};
pub use matrix::ExactMatrix;
pub use partition::{
    enumerate_ordered_partitions, lower_set_cube, singleton_partitions, OrderedPartition,
    OrderedPartitions, SingletonPartition,
};
pub use permutahedron::{
    euler_characteristic, gamma_f, satisfies_halfspace, vertex_coordinates, FaceSet, VertexPoint,
};
pub use stirling::{fubini, ordered_partition_counts, stirling2, stirling_alternating_identity};
