//! Functions `f: {1..n} -> {1..n}` viewed as functional graphs.
//!
//! Two conventions for fixed points coexist here, matching how they are used:
//! [`cycles`](EndoFunction::cycles) and [`sign`](EndoFunction::sign) treat a
//! fixed point as a cycle of length one, while flattening only collapses
//! cycles of length two or more and leaves fixed points alone. Both give the
//! same reduced domain and the same flattened function.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::OrderedPartition;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EndoFunction {
    // table[j - 1] = f(j)
    table: Vec<usize>,
}

impl EndoFunction {
    /// `table[j - 1]` is `f(j)`; every value must lie in `1..=n`.
    pub fn new(table: Vec<usize>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Argument("function needs a nonempty domain".into()));
        }
        if let Some(&bad) = table.iter().find(|&&v| v == 0 || v > n) {
            return Err(Error::OutOfRange { element: bad, n });
        }
        Ok(EndoFunction { table })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1);
        EndoFunction { table: (1..=n).collect() }
    }

    /// All `n^n` functions on `{1..n}`, tables in lexicographic order.
    pub fn all(n: usize) -> AllFunctions {
        assert!(n >= 1);
        AllFunctions { next: Some(vec![1; n]) }
    }

    pub fn n(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// `f(j)`, 1-based. Panics outside the domain.
    pub fn apply(&self, j: usize) -> usize {
        self.table[j - 1]
    }

    pub fn cycles(&self) -> CycleDecomposition {
        let n = self.n();
        // 0 = unseen, 1 = on the current walk, 2 = finished
        let mut state = vec![0u8; n + 1];
        let mut on_cycle = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if state[start] != 0 {
                continue;
            }
            let mut path = Vec::new();
            let mut x = start;
            while state[x] == 0 {
                state[x] = 1;
                path.push(x);
                x = self.apply(x);
            }
            if state[x] == 1 {
                let from = path.iter().position(|&p| p == x).expect("x is on the current walk");
                let mut cycle = path[from..].to_vec();
                let min_pos = cycle.iter().enumerate().min_by_key(|(_, &v)| v).map(|(i, _)| i).unwrap();
                cycle.rotate_left(min_pos);
                for &c in &cycle {
                    on_cycle[c] = true;
                }
                cycles.push(cycle);
            }
            for p in path {
                state[p] = 2;
            }
        }
        cycles.sort_by_key(|c| c[0]);
        let non_cycle = (1..=n).filter(|&i| !on_cycle[i]).collect();
        CycleDecomposition { cycles, non_cycle }
    }

    /// No cycles other than fixed points.
    pub fn is_acyclic(&self) -> bool {
        self.cycles().cycles.iter().all(|c| c.len() == 1)
    }

    pub fn is_bijective(&self) -> bool {
        let mut hit = vec![false; self.n() + 1];
        self.table.iter().all(|&v| !std::mem::replace(&mut hit[v], true))
    }

    /// Collapses each cycle of length at least two to a single fixed point.
    ///
    /// The reduced domain is relabelled canonically: every cycle is represented
    /// by its minimum element, the representatives together with the remaining
    /// elements are sorted ascending, and the k-th of them becomes label `k`.
    pub fn flatten(&self) -> Flattened {
        let n = self.n();
        let decomposition = self.cycles();
        // representative[e] = min of e's cycle, or e itself
        let mut representative: Vec<usize> = (0..=n).collect();
        for cycle in &decomposition.cycles {
            for &c in cycle {
                representative[c] = cycle[0];
            }
        }
        let representatives: Vec<usize> = (1..=n).filter(|&e| representative[e] == e).collect();
        let mut label_of_rep = vec![0; n + 1];
        for (k, &r) in representatives.iter().enumerate() {
            label_of_rep[r] = k + 1;
        }
        let labels: Vec<usize> = (1..=n).map(|e| label_of_rep[representative[e]]).collect();
        let table = representatives
            .iter()
            .map(|&r| {
                let cycle_len = decomposition.cycle_containing(r).map_or(0, Vec::len);
                if cycle_len >= 2 {
                    labels[r - 1]
                } else {
                    labels[self.apply(r) - 1]
                }
            })
            .collect();
        Flattened {
            function: EndoFunction { table },
            labels,
            representatives,
        }
    }

    /// Transitively closed precedence rules `f^k(q) <= q`, reflexive pairs omitted.
    pub fn rules(&self) -> Result<RuleSet> {
        self.require_acyclic("rule sets")?;
        let mut pairs = BTreeSet::new();
        for q in 1..=self.n() {
            let mut p = self.apply(q);
            let mut prev = q;
            while p != prev {
                pairs.insert((p, q));
                prev = p;
                p = self.apply(p);
            }
        }
        Ok(RuleSet { n: self.n(), pairs })
    }

    /// Fixed points as roots, `q -> f(q)` as the parent edge otherwise.
    pub fn forest(&self) -> Result<RootedForest> {
        self.require_acyclic("rooted forests")?;
        let n = self.n();
        let parent: Vec<Option<usize>> =
            (1..=n).map(|q| Some(self.apply(q)).filter(|&p| p != q)).collect();
        let roots = (1..=n).filter(|&q| parent[q - 1].is_none()).collect();
        let depth = (1..=n)
            .map(|q| {
                let mut d = 0;
                let mut x = q;
                while let Some(p) = parent[x - 1] {
                    d += 1;
                    x = p;
                }
                d
            })
            .collect();
        Ok(RootedForest { parent, roots, depth })
    }

    /// `(-1)^(n - r)` with `r` the number of cycles, fixed points included.
    pub fn sign(&self) -> Result<i8> {
        if !self.is_bijective() {
            return Err(Error::Domain(format!("sign needs a bijection, got {self}")));
        }
        let r = self.cycles().cycle_count();
        Ok(if (self.n() - r) % 2 == 0 { 1 } else { -1 })
    }

    /// Every rule `f(j) <= j` holds in `b` (block of `f(j)` no later than block of `j`).
    pub fn is_satisfied_by(&self, b: &OrderedPartition) -> bool {
        let idx = b.block_indices();
        self.table.iter().enumerate().all(|(j, &fj)| idx[fj - 1] <= idx[j])
    }

    fn require_acyclic(&self, what: &str) -> Result<()> {
        if self.is_acyclic() {
            Ok(())
        } else {
            Err(Error::Domain(format!("{what} need an acyclic function, {self} has a cycle")))
        }
    }
}

impl fmt::Display for EndoFunction {
    /// `n: f(1) f(2) .. f(n)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n())?;
        for v in &self.table {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

impl FromStr for EndoFunction {
    type Err = Error;

    /// Accepts `6: 1 3 2 3 6 5`; the `n:` prefix is optional.
    fn from_str(s: &str) -> Result<Self> {
        let (declared, body) = match s.split_once(':') {
            Some((head, body)) => {
                let n: usize = head
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad size prefix in {s:?}")))?;
                (Some(n), body)
            }
            None => (None, s),
        };
        let table = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad value {t:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if let Some(n) = declared {
            if n != table.len() {
                return Err(Error::Parse(format!("declared n = {n} but {} values given", table.len())));
            }
        }
        EndoFunction::new(table).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Iterator behind [`EndoFunction::all`].
#[derive(Debug, Clone)]
pub struct AllFunctions {
    next: Option<Vec<usize>>,
}

impl Iterator for AllFunctions {
    type Item = EndoFunction;

    fn next(&mut self) -> Option<EndoFunction> {
        let current = self.next.take()?;
        let n = current.len();
        let mut succ = current.clone();
        for pos in (0..n).rev() {
            if succ[pos] < n {
                succ[pos] += 1;
                self.next = Some(succ);
                break;
            }
            succ[pos] = 1;
        }
        Some(EndoFunction { table: current })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    /// Each cycle starts at its minimum element; cycles are sorted by that minimum.
    /// Fixed points appear as cycles of length one.
    pub cycles: Vec<Vec<usize>>,
    /// Elements on no cycle, ascending.
    pub non_cycle: Vec<usize>,
}

impl CycleDecomposition {
    /// Cycles including fixed points.
    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    /// Size of the flattened domain: one point per cycle plus the non-cycle elements.
    pub fn domain_size(&self) -> usize {
        self.cycles.len() + self.non_cycle.len()
    }

    pub fn nontrivial_cycles(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.cycles.iter().filter(|c| c.len() >= 2)
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.cycles.iter().filter(|c| c.len() == 1).map(|c| c[0])
    }

    pub fn cycle_containing(&self, e: usize) -> Option<&Vec<usize>> {
        self.cycles.iter().find(|c| c.contains(&e))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flattened {
    pub function: EndoFunction,
    /// `labels[e - 1]` is the point of the reduced domain that original element `e` maps to.
    pub labels: Vec<usize>,
    /// `representatives[l - 1]` is the original element standing for label `l`.
    pub representatives: Vec<usize>,
}

impl Flattened {
    pub fn domain_size(&self) -> usize {
        self.representatives.len()
    }
}

/// Precedence rules `p <= q` of an acyclic function, transitively closed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleSet {
    n: usize,
    pairs: BTreeSet<(usize, usize)>,
}

impl RuleSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, p: usize, q: usize) -> bool {
        self.pairs.contains(&(p, q))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    /// Every rule `p <= q` holds in `b`.
    pub fn is_satisfied_by(&self, b: &OrderedPartition) -> bool {
        let idx = b.block_indices();
        self.pairs.iter().all(|&(p, q)| idx[p - 1] <= idx[q - 1])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedForest {
    parent: Vec<Option<usize>>,
    roots: Vec<usize>,
    depth: Vec<usize>,
}

impl RootedForest {
    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, q: usize) -> Option<usize> {
        self.parent[q - 1]
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn depth(&self, q: usize) -> usize {
        self.depth[q - 1]
    }

    /// Non-root nodes with their parents.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.map(|p| (i + 1, p)))
    }

    /// Graphviz source: `q -> f(q)` for each non-root, a self-loop on each root.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph forest {\n");
        for q in 1..=self.n() {
            out.push_str(&format!("  {q};\n"));
        }
        for (q, p) in self.edges() {
            out.push_str(&format!("  {q} -> {p};\n"));
        }
        for r in &self.roots {
            out.push_str(&format!("  {r} -> {r} [style=bold];\n"));
        }
        out.push_str("}\n");
        out
    }
}
