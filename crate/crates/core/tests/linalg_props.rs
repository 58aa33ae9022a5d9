use num_bigint::BigInt;
use opdet::{det_bareiss, det_cofactor, det_leibniz, det_terrible, perm_brute, perm_ryser, ExactMatrix, Limits};
use proptest::prelude::*;

fn square(max_n: usize) -> impl Strategy<Value = ExactMatrix> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(-9i64..=9, n), n)
            .prop_map(|rows| ExactMatrix::from_rows(rows).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn determinant_methods_agree(a in square(6)) {
        let l = Limits::default();
        let reference = det_bareiss(&a);
        prop_assert_eq!(det_leibniz(&a, &l).unwrap(), reference.clone());
        prop_assert_eq!(det_cofactor(&a, &l).unwrap(), reference.clone());
        prop_assert_eq!(det_terrible(&a, &l).unwrap(), reference);
    }

    #[test]
    fn permanent_methods_agree(a in square(7)) {
        let l = Limits::default();
        prop_assert_eq!(perm_ryser(&a, &l).unwrap(), perm_brute(&a, &l).unwrap());
    }

    #[test]
    fn row_swap_negates(a in square(6), r1 in 1usize..=6, r2 in 1usize..=6) {
        let n = a.n();
        let (r1, r2) = ((r1 - 1) % n + 1, (r2 - 1) % n + 1);
        prop_assume!(r1 != r2);
        let mut swapped = a.clone();
        swapped.swap_rows(r1, r2);
        let l = Limits::default();
        prop_assert_eq!(det_leibniz(&swapped, &l).unwrap(), -det_leibniz(&a, &l).unwrap());
        prop_assert_eq!(det_cofactor(&swapped, &l).unwrap(), -det_cofactor(&a, &l).unwrap());
        prop_assert_eq!(det_bareiss(&swapped), -det_bareiss(&a));
        prop_assert_eq!(det_terrible(&swapped, &l).unwrap(), -det_terrible(&a, &l).unwrap());
    }

    #[test]
    fn repeated_row_gives_zero(a in square(6), src in 1usize..=6, dst in 1usize..=6) {
        let n = a.n();
        prop_assume!(n >= 2);
        let (src, dst) = ((src - 1) % n + 1, (dst - 1) % n + 1);
        prop_assume!(src != dst);
        let dup = ExactMatrix::from_fn(n, |i, j| {
            if i == dst { a.get(src, j).clone() } else { a.get(i, j).clone() }
        });
        let l = Limits::default();
        let zero = BigInt::from(0);
        prop_assert_eq!(det_leibniz(&dup, &l).unwrap(), zero.clone());
        prop_assert_eq!(det_cofactor(&dup, &l).unwrap(), zero.clone());
        prop_assert_eq!(det_bareiss(&dup), zero.clone());
        prop_assert_eq!(det_terrible(&dup, &l).unwrap(), zero);
    }

    #[test]
    fn transpose_preserves_determinant(a in square(5)) {
        let l = Limits::default();
        prop_assert_eq!(det_terrible(&a.transpose(), &l).unwrap(), det_bareiss(&a));
    }

    #[test]
    fn text_format_round_trips(a in square(5)) {
        prop_assert_eq!(ExactMatrix::parse_text(&a.to_string()).unwrap(), a.clone());
        prop_assert_eq!(ExactMatrix::parse_json(&a.to_json().to_string()).unwrap(), a);
    }
}

#[test]
fn bareiss_handles_large_dimensions() {
    // lower-triangular with diagonal 1..=30: determinant 30!
    let a = ExactMatrix::from_fn(30, |i, j| if j < i { (i * j) as i64 % 7 } else if i == j { i as i64 } else { 0 });
    let factorial: BigInt = (1..=30).map(BigInt::from).product();
    assert_eq!(det_bareiss(&a), factorial);
    assert_eq!(det_bareiss(&a.transpose()), det_bareiss(&a));
}
