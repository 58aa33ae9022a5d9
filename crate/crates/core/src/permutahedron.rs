//! Faces of the permutahedron, represented combinatorially by ordered partitions.
//!
//! The face of `B` has dimension `n - |B|`: singleton partitions are the
//! vertices and the one-block partition is the whole polytope. Only vertex
//! coordinates and half-space tests are geometric; everything else works on
//! the face labels.

use std::collections::BTreeSet;

use crate::endofunction::EndoFunction;
use crate::error::{Error, Result};
use crate::expansion::support_set;
use crate::limits::{check, Limits};
use crate::partition::{lower_set_cube, OrderedPartition, OrderedPartitions, SingletonPartition};

/// A vertex of the (relabelled) permutahedron.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexPoint {
    coordinates: Vec<usize>,
}

impl VertexPoint {
    pub fn coordinates(&self) -> &[usize] {
        &self.coordinates
    }

    /// `x_i`, 1-based.
    pub fn x(&self, i: usize) -> usize {
        self.coordinates[i - 1]
    }

    pub fn coordinate_sum(&self) -> usize {
        self.coordinates.iter().sum()
    }
}

/// `x_i` is the position of element `i` in the vertex's word.
///
/// A word `w` with `w_k = s^-1(k)` therefore lands on the point `(s(1), .., s(n))`.
pub fn vertex_coordinates(vertex: &SingletonPartition) -> VertexPoint {
    VertexPoint { coordinates: vertex.as_partition().block_indices() }
}

/// `x_i <= x_j` at the given vertex.
pub fn satisfies_halfspace(vertex: &SingletonPartition, i: usize, j: usize) -> Result<bool> {
    let n = vertex.n();
    for e in [i, j] {
        if e == 0 || e > n {
            return Err(Error::OutOfRange { element: e, n });
        }
    }
    let point = vertex_coordinates(vertex);
    Ok(point.x(i) <= point.x(j))
}

/// A set of faces of the permutahedron on `{1..n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    n: usize,
    faces: BTreeSet<OrderedPartition>,
}

impl FaceSet {
    pub fn empty(n: usize) -> Self {
        FaceSet { n, faces: BTreeSet::new() }
    }

    /// Fails if any face lives on a different ground set.
    pub fn new(n: usize, faces: BTreeSet<OrderedPartition>) -> Result<Self> {
        if let Some(bad) = faces.iter().find(|b| b.n() != n) {
            return Err(Error::Dimension { expected: n, found: bad.n() });
        }
        Ok(FaceSet { n, faces })
    }

    /// The whole face lattice.
    pub fn all(n: usize, limits: &Limits) -> Result<Self> {
        check("face lattice", n, limits.ordered_partitions)?;
        Ok(FaceSet { n, faces: OrderedPartitions::new(n).collect() })
    }

    /// The faces containing a vertex: an `(n-1)`-cube in the poset.
    pub fn cube(vertex: &SingletonPartition) -> Self {
        FaceSet { n: vertex.n(), faces: lower_set_cube(vertex) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, b: &OrderedPartition) -> bool {
        self.faces.contains(b)
    }

    pub fn faces(&self) -> &BTreeSet<OrderedPartition> {
        &self.faces
    }

    /// Number of faces of each dimension, `out[d]` for `d = 0..n`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut out = vec![0; self.n.max(1)];
        for b in &self.faces {
            out[self.n - b.num_blocks()] += 1;
        }
        out
    }
}

/// `sum_{B in F} (-1)^(n - |B|)`.
pub fn euler_characteristic(faces: &FaceSet) -> i64 {
    faces
        .faces
        .iter()
        .map(|b| if (faces.n - b.num_blocks()) % 2 == 0 { 1 } else { -1 })
        .sum()
}

/// The faces belonging to `S_f`, for acyclic `f`.
pub fn gamma_f(f: &EndoFunction, limits: &Limits) -> Result<FaceSet> {
    if !f.is_acyclic() {
        return Err(Error::Domain(format!("{f} has a cycle; flatten it first")));
    }
    Ok(FaceSet { n: f.n(), faces: support_set(f, limits)? })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vertex(word: &[usize]) -> SingletonPartition {
        SingletonPartition::from_word(word).unwrap()
    }

    #[test]
    fn coordinates() {
        assert_eq!(vertex_coordinates(&vertex(&[1, 2, 3])).coordinates(), &[1, 2, 3]);
        assert_eq!(vertex_coordinates(&vertex(&[3, 1, 2])).coordinates(), &[2, 3, 1]);
        for v in crate::partition::singleton_partitions(3) {
            assert_eq!(vertex_coordinates(&v).coordinate_sum(), 6);
        }
    }

    #[test]
    fn halfspaces() {
        assert!(satisfies_halfspace(&vertex(&[1, 2, 3]), 1, 2).unwrap());
        assert!(satisfies_halfspace(&vertex(&[3, 1, 2]), 3, 1).unwrap());
        assert!(!satisfies_halfspace(&vertex(&[2, 1]), 1, 2).unwrap());
        assert!(matches!(satisfies_halfspace(&vertex(&[2, 1]), 3, 1), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn euler_examples() {
        let l = Limits::default();
        for n in 1..=6 {
            assert_eq!(euler_characteristic(&FaceSet::all(n, &l).unwrap()), 1);
        }
        assert_eq!(euler_characteristic(&FaceSet::cube(&vertex(&[2, 4, 1, 3]))), 0);
        assert_eq!(euler_characteristic(&FaceSet::empty(3)), 0);
    }

    #[test]
    fn hexagon_f_vector() {
        let hexagon = FaceSet::all(3, &Limits::default()).unwrap();
        assert_eq!(hexagon.f_vector(), vec![6, 6, 1]);
    }

    #[test]
    fn gamma_examples() {
        let l = Limits::default();
        let star = EndoFunction::new(vec![1, 1, 1]).unwrap();
        assert_eq!(euler_characteristic(&gamma_f(&star, &l).unwrap()), 0);
        let id = gamma_f(&EndoFunction::identity(3), &l).unwrap();
        assert_eq!(id, FaceSet::all(3, &l).unwrap());
        assert_eq!(euler_characteristic(&id), 1);
        // rules 1 <= 2 and 3 <= 4
        let pairs = EndoFunction::new(vec![1, 1, 3, 3]).unwrap();
        assert_eq!(euler_characteristic(&gamma_f(&pairs, &l).unwrap()), 0);
        assert!(gamma_f(&EndoFunction::new(vec![2, 1]).unwrap(), &l).is_err());
    }

    #[test]
    fn face_set_rejects_mixed_ground_sets() {
        let faces: BTreeSet<_> = ["1/2".parse().unwrap(), "1/2/3".parse().unwrap()].into_iter().collect();
        assert!(FaceSet::new(2, faces).is_err());
    }
}
