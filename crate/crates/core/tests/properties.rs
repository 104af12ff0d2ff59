use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use isotropy_core::chern::{self, OracleLimits};
use isotropy_core::partition::Partition;
use isotropy_core::schur;
use isotropy_core::symfunc::{self, SymPoly, DEFAULT_MAX_TERMS};
use isotropy_core::tableau::{self, DEFAULT_MAX_TABLEAUX};

fn partition(max_size: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_size.max(1), 0..=max_len).prop_filter_map("too big", move |mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        (parts.iter().sum::<usize>() <= max_size).then(|| Partition::new(parts).unwrap())
    })
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Standard Young tableaux by peeling off the largest entry.
fn standard_tableaux(lambda: &Partition, memo: &mut BTreeMap<Partition, BigInt>) -> BigInt {
    if lambda.is_empty() {
        return BigInt::one();
    }
    if let Some(v) = memo.get(lambda) {
        return v.clone();
    }
    let parts = lambda.parts();
    let mut total = BigInt::zero();
    for i in 0..parts.len() {
        if i + 1 == parts.len() || parts[i] > parts[i + 1] {
            let mut smaller = parts.to_vec();
            smaller[i] -= 1;
            smaller.retain(|&p| p > 0);
            total += standard_tableaux(&Partition::new(smaller).unwrap(), memo);
        }
    }
    memo.insert(lambda.clone(), total.clone());
    total
}

fn distinct_parts(lambda: &Partition) -> usize {
    let mut v = lambda.parts().to_vec();
    v.dedup();
    v.len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugate_is_an_involution(lambda in partition(12, 6)) {
        let c = lambda.conjugate();
        prop_assert_eq!(c.conjugate(), lambda.clone());
        prop_assert_eq!(c.size(), lambda.size());
        prop_assert_eq!(c.length(), lambda.first());
    }

    #[test]
    fn strip_predecessors_interlace_and_drive_the_recurrence(lambda in partition(8, 4), n in 1usize..6) {
        let preds = lambda.horizontal_strip_predecessors();
        prop_assert!(preds.windows(2).all(|w| w[0] > w[1]));
        for mu in &preds {
            prop_assert!(lambda.contains(mu));
            for i in 0..lambda.length() {
                prop_assert!(lambda.part(i + 1) <= mu.part(i) && mu.part(i) <= lambda.part(i));
            }
        }
        let sum: BigInt = preds.iter().map(|mu| schur::schur_ones_recurrence(mu, n - 1)).sum();
        let direct = schur::schur_ones_hook_content(&lambda, n).unwrap();
        prop_assert_eq!(sum, direct);
    }

    #[test]
    fn pieri_adds_one_box_at_each_addable_corner(lambda in partition(10, 5)) {
        let grown = lambda.pieri_add_one_box(usize::MAX);
        prop_assert_eq!(grown.len(), distinct_parts(&lambda) + 1);
        prop_assert!(grown.windows(2).all(|w| w[0] > w[1]));
        for nu in &grown {
            prop_assert_eq!(nu.size(), lambda.size() + 1);
            prop_assert!(nu.contains(&lambda));
        }
        let bounded = lambda.pieri_add_one_box(lambda.length());
        prop_assert_eq!(bounded.len(), distinct_parts(&lambda));
        if !lambda.is_empty() {
            let smaller = lambda.remove_corner_box().unwrap();
            prop_assert!(smaller.pieri_add_one_box(usize::MAX).contains(&lambda));
        }
    }

    #[test]
    fn hook_lengths_count_standard_tableaux(lambda in partition(10, 5)) {
        let hooks: BigInt = lambda.boxes().map(|b| BigInt::from(lambda.hook_length(b).unwrap())).product();
        let n = factorial(lambda.size());
        prop_assert!((&n % &hooks).is_zero());
        prop_assert_eq!(n / hooks, standard_tableaux(&lambda, &mut BTreeMap::new()));
    }

    #[test]
    fn dimension_routes_agree(lambda in partition(8, 4), n in 0usize..7) {
        let hook = schur::schur_ones_hook_content(&lambda, n).unwrap();
        prop_assert_eq!(&hook, &schur::schur_ones_recurrence(&lambda, n));
        prop_assert_eq!(&hook, &tableau::count_ssyt(&lambda, n));
    }

    #[test]
    fn weight_multiset_is_symmetric(lambda in partition(5, 3), k in 1usize..5, swap in 0usize..4) {
        prop_assume!(lambda.length() <= k && swap + 1 < k);
        let mut weights = tableau::weight_vectors(&lambda, k, DEFAULT_MAX_TABLEAUX).unwrap();
        let mut swapped: Vec<_> = weights
            .iter()
            .map(|w| {
                let mut w = w.clone();
                w.0.swap(swap, swap + 1);
                w
            })
            .collect();
        weights.sort();
        swapped.sort();
        prop_assert_eq!(weights, swapped);
    }

    #[test]
    fn schur_polynomials_expand_to_themselves(mu in partition(6, 3), nvars in 1usize..4) {
        prop_assume!(mu.length() <= nvars);
        let s = SymPoly::schur(&mu, nvars);
        prop_assert!(s.is_symmetric());
        prop_assert_eq!(s.evaluate_at_ones(), schur::dim(&mu, nvars).unwrap());
        let e = symfunc::schur_expand(&s).unwrap();
        prop_assert_eq!(e.len(), 1);
        prop_assert_eq!(e.get(&mu), BigInt::one());
        prop_assert_eq!(e, symfunc::schur_expand_via_alternant(&s).unwrap());
    }

    #[test]
    fn top_chern_product_is_consistent(lambda in partition(3, 3), k in 1usize..4) {
        prop_assume!(lambda.length() <= k);
        let weights = tableau::weight_vectors(&lambda, k, DEFAULT_MAX_TABLEAUX).unwrap();
        let product = symfunc::product_of_linear_forms(&weights, k, DEFAULT_MAX_TERMS).unwrap();
        prop_assert!(product.is_symmetric());
        prop_assert!(product.is_homogeneous());
        // every linear form sums to |λ| at x = 1
        let expected = num_traits::pow(BigInt::from(lambda.size()), weights.len());
        prop_assert_eq!(product.evaluate_at_ones(), expected.clone());
        let expansion = symfunc::schur_expand(&product).unwrap();
        prop_assert_eq!(expansion.evaluate_at_ones(k).unwrap(), expected);
        prop_assert_eq!(expansion, symfunc::schur_expand_via_alternant(&product).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn nonvanishing_persists_as_n_grows(lambda in partition(4, 3), k in 1usize..5, n in 1usize..8) {
        prop_assume!(lambda.length() <= k && k <= n && !lambda.is_empty());
        let limits = OracleLimits::default();
        let here = chern::top_chern_nonzero_with(&lambda, k, n, &limits);
        let next = chern::top_chern_nonzero_with(&lambda, k, n + 1, &limits);
        if let (Ok(here), Ok(next)) = (here, next) {
            prop_assert!(!here.nonzero || next.nonzero, "{} k={} nonzero at n={} but not at n+1", lambda, k, n);
        }
    }
}
