//! Heap's algorithm, tracking the sign of each permutation as it goes.

/// Iterates over all permutations of `0..n` together with their signs.
///
/// Consecutive permutations differ by one transposition, so the sign simply
/// alternates. The first item is the identity with sign `+1`.
#[derive(Debug, Clone)]
pub struct SignedPermutations {
    perm: Vec<usize>,
    counters: Vec<usize>,
    level: usize,
    sign: i8,
    started: bool,
}

impl SignedPermutations {
    pub fn new(n: usize) -> Self {
        SignedPermutations {
            perm: (0..n).collect(),
            counters: vec![0; n],
            level: 1,
            sign: 1,
            started: false,
        }
    }
}

impl Iterator for SignedPermutations {
    type Item = (Vec<usize>, i8);

    fn next(&mut self) -> Option<Self::Item> {
        if !self.started {
            self.started = true;
            return Some((self.perm.clone(), self.sign));
        }
        let n = self.perm.len();
        while self.level < n {
            let i = self.level;
            if self.counters[i] < i {
                let j = if i % 2 == 0 { 0 } else { self.counters[i] };
                self.perm.swap(j, i);
                self.sign = -self.sign;
                self.counters[i] += 1;
                self.level = 1;
                return Some((self.perm.clone(), self.sign));
            }
            self.counters[i] = 0;
            self.level += 1;
        }
        None
    }
}
