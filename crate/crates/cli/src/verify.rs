//! Self-check suites behind `opdet verify`, one per acceptance criterion.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use opdet::permutahedron::{euler_characteristic, gamma_f, satisfies_halfspace, FaceSet};
use opdet::{
    coefficient_direct, coefficient_table, coefficient_via_flattening, det_bareiss, det_leibniz,
    det_terrible, enumerate_ordered_partitions, fubini, perm_brute, perm_ryser, singleton_partitions,
    stirling_alternating_identity, support_set, support_set_via_cubes, term_factors, EndoFunction,
    ExactMatrix, Limits, OrderedPartitions,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::export;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Oracle,
    Golden2,
    Expansion3,
    Dichotomy,
    Routes,
    Stirling,
    Fubini,
    Cubes,
    Halfspace,
    Euler,
    Permanent,
    Determinism,
    All,
}

impl Suite {
    pub const EACH: [Suite; 12] = [
        Suite::Oracle,
        Suite::Golden2,
        Suite::Expansion3,
        Suite::Dichotomy,
        Suite::Routes,
        Suite::Stirling,
        Suite::Fubini,
        Suite::Cubes,
        Suite::Halfspace,
        Suite::Euler,
        Suite::Permanent,
        Suite::Determinism,
    ];

    fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Golden2 => "golden2",
            Suite::Expansion3 => "expansion3",
            Suite::Dichotomy => "dichotomy",
            Suite::Routes => "routes",
            Suite::Stirling => "stirling",
            Suite::Fubini => "fubini",
            Suite::Cubes => "cubes",
            Suite::Halfspace => "halfspace",
            Suite::Euler => "euler",
            Suite::Permanent => "permanent",
            Suite::Determinism => "determinism",
            Suite::All => "all",
        }
    }

    fn default_n_max(self) -> usize {
        match self {
            Suite::Oracle | Suite::Halfspace => 6,
            Suite::Golden2 => 2,
            Suite::Expansion3 => 3,
            Suite::Dichotomy | Suite::Routes | Suite::Cubes | Suite::Determinism => 4,
            Suite::Stirling => 12,
            Suite::Fubini | Suite::Permanent => 7,
            Suite::Euler => 8,
            Suite::All => 0,
        }
    }

    fn default_samples(self) -> usize {
        match self {
            Suite::Dichotomy | Suite::Euler => 500,
            Suite::Cubes => 200,
            _ => 0,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Params {
    pub n_max: Option<usize>,
    pub trials: usize,
    pub samples: Option<usize>,
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub suite: Suite,
    pub passed: bool,
    pub checked: u64,
    pub detail: String,
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {:<12} checked={:<8} {}", self.suite.name(), self.checked, self.detail)
    }
}

// Accumulates checks; the first mismatch is kept for the report.
struct Tally {
    checked: u64,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { checked: 0, failure: None }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn finish(self, suite: Suite, detail: String) -> Report {
        let passed = self.failure.is_none();
        Report {
            suite,
            passed,
            checked: self.checked,
            detail: self.failure.map_or(detail, |f| format!("first failure: {f}")),
        }
    }
}

pub fn run(suite: Suite, params: &Params, limits: &Limits) -> Vec<Report> {
    if suite == Suite::All {
        return Suite::EACH.iter().flat_map(|&s| run(s, params, limits)).collect();
    }
    let n_max = params.n_max.unwrap_or(suite.default_n_max());
    let samples = params.samples.unwrap_or(suite.default_samples());
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let result = match suite {
        Suite::Oracle => oracle(n_max, params.trials, &mut rng, limits),
        Suite::Golden2 => golden2(limits),
        Suite::Expansion3 => expansion3(limits),
        Suite::Dichotomy => dichotomy(n_max, samples, &mut rng, limits),
        Suite::Routes => routes(n_max, limits),
        Suite::Stirling => stirling(n_max),
        Suite::Fubini => fubini_counts(n_max, limits),
        Suite::Cubes => cubes(n_max, samples, &mut rng, limits),
        Suite::Halfspace => halfspace(n_max),
        Suite::Euler => euler(n_max, samples, &mut rng, limits),
        Suite::Permanent => permanent(n_max, params.trials, &mut rng, limits),
        Suite::Determinism => determinism(n_max, limits),
        Suite::All => unreachable!(),
    };
    let report = match result {
        Ok((tally, detail)) => tally.finish(suite, detail),
        Err(e) => Report { suite, passed: false, checked: 0, detail: format!("error: {e}") },
    };
    vec![report]
}

type SuiteResult = opdet::Result<(Tally, String)>;

pub fn random_matrix(n: usize, rng: &mut ChaCha8Rng) -> ExactMatrix {
    ExactMatrix::from_fn(n, |_, _| rng.gen_range(-9i64..=9))
}

fn random_function(n: usize, rng: &mut ChaCha8Rng) -> EndoFunction {
    EndoFunction::new((0..n).map(|_| rng.gen_range(1..=n)).collect()).expect("values in range")
}

// Each element maps to itself or to an element placed earlier in a random order.
fn random_acyclic(n: usize, rng: &mut ChaCha8Rng) -> EndoFunction {
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let mut table = vec![0; n];
    for pos in 0..n {
        table[order[pos] - 1] = order[rng.gen_range(0..=pos)];
    }
    EndoFunction::new(table).expect("values in range")
}

fn expected_coefficient(f: &EndoFunction) -> i64 {
    f.sign().map_or(0, i64::from)
}

fn oracle(n_max: usize, trials: usize, rng: &mut ChaCha8Rng, limits: &Limits) -> SuiteResult {
    let mut t = Tally::new();
    for n in 1..=n_max {
        for _ in 0..trials {
            let a = random_matrix(n, rng);
            let terrible = det_terrible(&a, limits)?;
            let bareiss = det_bareiss(&a);
            let leibniz = det_leibniz(&a, limits)?;
            t.check(terrible == bareiss && bareiss == leibniz, || {
                format!("n={n}: terrible={terrible} bareiss={bareiss} leibniz={leibniz}")
            });
        }
    }
    Ok((t, format!("n=1..={n_max}, {trials} matrices each, entries in [-9, 9]")))
}

fn golden2(limits: &Limits) -> SuiteResult {
    let mut t = Tally::new();
    let table = coefficient_table(2, limits)?;
    for (f, expected) in [([1, 1], 0), ([1, 2], 1), ([2, 2], 0), ([2, 1], -1)] {
        let f = EndoFunction::new(f.to_vec()).expect("valid");
        let got = table.get(&f);
        t.check(got == Some(expected), || format!("c({f}) = {got:?}, expected {expected}"));
    }
    t.check(table.len() == 4, || format!("table has {} entries", table.len()));
    Ok((t, "c_f for the four functions on [2]".into()))
}

/// The thirteen signed terms of the 3x3 expansion, as written out by hand.
pub const EXPANSION_3X3: [(i8, &str); 13] = [
    (1, "a11(a12+a22)(a13+a23+a33)"),
    (1, "a11(a13+a33)(a12+a22+a32)"),
    (1, "a22(a11+a21)(a13+a23+a33)"),
    (1, "a22(a23+a33)(a11+a21+a31)"),
    (1, "a33(a11+a31)(a12+a22+a32)"),
    (1, "a33(a22+a32)(a11+a21+a31)"),
    (-1, "a11(a12+a22+a32)(a13+a23+a33)"),
    (-1, "a22(a11+a21+a31)(a13+a23+a33)"),
    (-1, "a33(a11+a21+a31)(a12+a22+a32)"),
    (-1, "(a11+a21)(a12+a22)(a13+a23+a33)"),
    (-1, "(a11+a31)(a13+a33)(a12+a22+a32)"),
    (-1, "(a22+a32)(a23+a33)(a11+a21+a31)"),
    (1, "(a11+a21+a31)(a12+a22+a32)(a13+a23+a33)"),
];

/// Each factor becomes `(column, sorted rows)`; the factors of a term are sorted.
pub fn parse_term(term: &str) -> Vec<(usize, Vec<usize>)> {
    let mut factors: Vec<(usize, Vec<usize>)> = term
        .split(|c| c == '(' || c == ')')
        .filter(|s| !s.is_empty())
        .flat_map(|chunk| {
            // a bare chunk like "a11" outside parentheses may hold one factor
            if chunk.contains('+') {
                vec![chunk.to_string()]
            } else {
                chunk.split('a').filter(|s| !s.is_empty()).map(|s| format!("a{s}")).collect()
            }
        })
        .map(|factor| {
            let mut column = None;
            let mut rows: Vec<usize> = factor
                .split('+')
                .map(|entry| {
                    let digits: Vec<usize> =
                        entry.trim_start_matches('a').chars().map(|c| c.to_digit(10).unwrap() as usize).collect();
                    assert!(column.is_none() || column == Some(digits[1]), "mixed columns in {factor}");
                    column = Some(digits[1]);
                    digits[0]
                })
                .collect();
            rows.sort_unstable();
            (column.expect("nonempty factor"), rows)
        })
        .collect();
    factors.sort();
    factors
}

fn expansion3(limits: &Limits) -> SuiteResult {
    let mut t = Tally::new();
    let mut computed: BTreeMap<Vec<(usize, Vec<usize>)>, i8> = BTreeMap::new();
    let mut by_size = [0i32; 4];
    for b in enumerate_ordered_partitions(3, limits)? {
        let sign: i8 = if (3 - b.num_blocks()) % 2 == 0 { 1 } else { -1 };
        by_size[b.num_blocks()] += sign as i32;
        let mut factors: Vec<_> = term_factors(&b).into_iter().map(|x| (x.column, x.rows)).collect();
        factors.sort();
        computed.insert(factors, sign);
    }
    t.check(computed.len() == 13, || format!("{} distinct terms", computed.len()));
    t.check(by_size == [0, 1, -6, 6], || format!("signed counts by |B|: {by_size:?}"));
    let displayed: BTreeMap<_, _> = EXPANSION_3X3.iter().map(|&(s, term)| (parse_term(term), s)).collect();
    t.check(computed == displayed, || "term patterns differ from the written expansion".into());
    Ok((t, "13 terms; +6 at |B|=3, -6 at |B|=2, +1 at |B|=1".into()))
}

fn dichotomy(n_max: usize, samples: usize, rng: &mut ChaCha8Rng, limits: &Limits) -> SuiteResult {
    let mut t = Tally::new();
    for n in 1..=n_max {
        for f in EndoFunction::all(n) {
            let c = coefficient_direct(&f, limits)?;
            let want = expected_coefficient(&f);
            t.check(c == want, || format!("c({f}) = {c}, expected {want}"));
        }
    }
    let exhaustive = t.checked;
    let sample_n = n_max + 1;
    for _ in 0..samples {
        let f = random_function(sample_n, rng);
        let c = coefficient_direct(&f, limits)?;
        let want = expected_coefficient(&f);
        t.check(c == want, || format!("c({f}) = {c}, expected {want}"));
    }
    Ok((t, format!("{exhaustive} functions exhaustive (n<={n_max}), {samples} sampled at n={sample_n}")))
}

fn routes(n_max: usize, limits: &Limits) -> SuiteResult {
    let mut t = Tally::new();
    for n in 1..=n_max {
        let table = coefficient_table(n, limits)?;
        for f in EndoFunction::all(n) {
            let direct = coefficient_direct(&f, limits)?;
            let flattened = coefficient_via_flattening(&f, limits)?;
            let tabled = table.get(&f);
            t.check(tabled == Some(direct) && flattened == direct, || {
                format!("{f}: table={tabled:?} direct={direct} flattening={flattened}")
            });
        }
    }
    Ok((t, format!("table, direct and flattening agree for n<={n_max}")))
}

fn stirling(n_max: usize) -> SuiteResult {
    let mut t = Tally::new();
    for n in 0..=n_max {
        let v = stirling_alternating_identity(n);
        t.check(v == BigInt::from(1), || format!("n={n}: {v}"));
    }
    Ok((t, format!("sum (-1)^(n-k) k! S(n,k) = 1 for n=0..={n_max}")))
}

// k! S(n, k) by inclusion-exclusion over surjections.
fn surjections(n: usize, k: usize) -> BigInt {
    let mut total = BigInt::from(0);
    let mut binom = BigInt::from(1);
    for i in 0..=k {
        let term = &binom * BigInt::from(k - i).pow(n as u32);
        if i % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
        binom = binom * (k - i) / (i + 1);
    }
    total
}

fn fubini_counts(n_max: usize, limits: &Limits) -> SuiteResult {
    let mut t = Tally::new();
    let mut seen_counts = Vec::new();
    for n in 1..=n_max {
        let mut by_blocks = vec![0u64; n + 1];
        let mut distinct = std::collections::BTreeSet::new();
        for b in enumerate_ordered_partitions(n, limits)? {
            by_blocks[b.num_blocks()] += 1;
            distinct.insert(b);
        }
        let oracle: BigInt = (0..=n).map(|k| surjections(n, k)).sum();
        let formula = BigInt::from(fubini(n)?);
        let count = distinct.len();
        t.check(BigInt::from(count) == oracle && formula == oracle, || {
            format!("n={n}: enumerated {count}, fubini {formula}, oracle {oracle}")
        });
        for k in 1..=n {
            let want = surjections(n, k);
            t.check(BigInt::from(by_blocks[k]) == want, || {
                format!("n={n}, k={k}: {} partitions, expected {want}", by_blocks[k])
            });
        }
        seen_counts.push(count.to_string());
    }
    Ok((t, format!("counts {}", seen_counts.join(", "))))
}

fn cubes(n_max: usize, samples: usize, rng: &mut ChaCha8Rng, limits: &Limits) -> SuiteResult {
    let mut t = Tally::new();
    for n in 1..=n_max {
        for f in EndoFunction::all(n).filter(EndoFunction::is_acyclic) {
            let same = support_set_via_cubes(&f, limits)? == support_set(&f, limits)?;
            t.check(same, || format!("S_f differs for {f}"));
        }
    }
    let exhaustive = t.checked;
    let sample_n = n_max + 1;
    for _ in 0..samples {
        let f = random_acyclic(sample_n, rng);
        let same = support_set_via_cubes(&f, limits)? == support_set(&f, limits)?;
        t.check(same, || format!("S_f differs for {f}"));
    }
    Ok((t, format!("{exhaustive} acyclic functions exhaustive (n<={n_max}), {samples} sampled at n={sample_n}")))
}

fn halfspace(n_max: usize) -> SuiteResult {
    let mut t = Tally::new();
    for n in 1..=n_max {
        for vertex in singleton_partitions(n) {
            for i in 1..=n {
                for j in (1..=n).filter(|&j| j != i) {
                    let h = satisfies_halfspace(&vertex, i, j)?;
                    let p = vertex.as_partition().precequals(i, j)?;
                    t.check(h == p, || format!("{vertex}: ({i},{j}) halfspace={h} precequals={p}"));
                }
            }
        }
    }
    Ok((t, format!("all vertices and ordered pairs, n<={n_max}")))
}

fn euler(n_max: usize, samples: usize, rng: &mut ChaCha8Rng, limits: &Limits) -> SuiteResult {
    let mut t = Tally::new();
    for n in 1..=n_max {
        // streamed: the lattice for n = 8 has 545835 faces
        let chi: i64 = OrderedPartitions::new(n)
            .map(|b| if (n - b.num_blocks()) % 2 == 0 { 1 } else { -1 })
            .sum();
        t.check(chi == 1, || format!("chi(all faces, n={n}) = {chi}"));
    }
    let exhaustive_n = n_max.min(4);
    for n in 1..=exhaustive_n {
        for f in EndoFunction::all(n).filter(|f| f.is_acyclic() && !f.is_bijective()) {
            let chi = euler_characteristic(&gamma_f(&f, limits)?);
            t.check(chi == 0, || format!("chi(Gamma_f) = {chi} for {f}"));
        }
    }
    if n_max >= 5 {
        for _ in 0..samples {
            let f = random_acyclic(5, rng);
            let chi = euler_characteristic(&gamma_f(&f, limits)?);
            let want = i64::from(f.is_bijective());
            t.check(chi == want, || format!("chi(Gamma_f) = {chi} for {f}"));
        }
    }
    for table in [vec![1, 1, 1], vec![1, 1, 3, 3]] {
        let f = EndoFunction::new(table).expect("valid");
        let chi = euler_characteristic(&gamma_f(&f, limits)?);
        t.check(chi == 0, || format!("chi(Gamma_f) = {chi} for {f}"));
    }
    let full3 = euler_characteristic(&FaceSet::all(3, limits)?);
    t.check(full3 == 1, || format!("hexagon chi = {full3}"));
    Ok((t, format!("full lattice n<={n_max}; Gamma_f exhaustive n<={exhaustive_n}; two worked cases")))
}

fn permanent(n_max: usize, trials: usize, rng: &mut ChaCha8Rng, limits: &Limits) -> SuiteResult {
    let mut t = Tally::new();
    for n in 1..=n_max {
        for _ in 0..trials {
            let a = random_matrix(n, rng);
            let ryser = perm_ryser(&a, limits)?;
            let brute = perm_brute(&a, limits)?;
            t.check(ryser == brute, || format!("n={n}: ryser={ryser} brute={brute}"));
        }
    }
    Ok((t, format!("n=1..={n_max}, {trials} matrices each")))
}

fn determinism(n: usize, limits: &Limits) -> SuiteResult {
    let mut t = Tally::new();
    let first = export::coeffs_csv(&coefficient_table(n, limits)?);
    let second = export::coeffs_csv(&coefficient_table(n, limits)?);
    t.check(first == second, || "two renderings differ".into());
    Ok((t, format!("coeffs {n} csv rendered twice, {} bytes", first.len())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_term_reads_factors() {
        assert_eq!(
            parse_term("a22(a11+a21)(a13+a23+a33)"),
            vec![(1, vec![1, 2]), (2, vec![2]), (3, vec![1, 2, 3])]
        );
    }

    #[test]
    fn random_acyclic_is_acyclic() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            assert!(random_acyclic(6, &mut rng).is_acyclic());
        }
    }

    #[test]
    fn quick_suites_pass() {
        let params = Params { n_max: None, trials: 5, samples: Some(10), seed: 7 };
        for suite in [Suite::Golden2, Suite::Expansion3, Suite::Stirling, Suite::Routes] {
            let reports = run(suite, &params, &Limits::default());
            assert!(reports.iter().all(|r| r.passed), "{reports:?}");
        }
    }

    #[test]
    fn dichotomy_count_at_four() {
        let params = Params { n_max: Some(4), trials: 0, samples: Some(0), seed: 7 };
        let report = &run(Suite::Dichotomy, &params, &Limits::default())[0];
        assert!(report.passed);
        assert_eq!(report.checked, 256 + 27 + 4 + 1);
    }
}
