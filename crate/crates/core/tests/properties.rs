//! Invariants as properties over random inputs.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use tableau_corners::bijections::{
    alpha, alpha_inv, all_words, assemble_run, gamma, gamma_inv, nat_to_word, run_to_corner, split_run, corner_to_run,
    word_to_nat, zeta, zeta_inv,
};
use tableau_corners::formulas::{runs_closed, t_ab, BivarPoly};
use tableau_corners::permstats::{all_permutations, Permutation};
use tableau_corners::tableaux::{
    permutation_tableaux, tree_like_tableaux, type_b_permutation_tableaux, GenOptions,
};

fn poly() -> impl Strategy<Value = BivarPoly> {
    prop::collection::vec((0u32..4, 0u32..4, -5i64..=5), 0..5).prop_map(|terms| {
        terms.into_iter().map(|(i, j, c)| BivarPoly::monomial([i, j], c)).sum()
    })
}

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle()).prop_map(|w| Permutation::new(w).unwrap())
}

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomials_form_a_ring(p in poly(), r in poly(), s in poly()) {
        prop_assert_eq!(&p + &r, &r + &p);
        prop_assert_eq!(&p * &r, &r * &p);
        prop_assert_eq!(&(&p * &r) * &s, &p * &(&r * &s));
        prop_assert_eq!(&p * &(&r + &s), &(&p * &r) + &(&p * &s));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in poly(), r in poly(), a in 1i64..6, b in 1i64..6, d in 1i64..4) {
        let point = [q(a, d), q(b, d + 1)];
        prop_assert_eq!((&p * &r).eval(&point), p.eval(&point) * r.eval(&point));
        prop_assert_eq!((&p + &r).eval(&point), p.eval(&point) + r.eval(&point));
    }

    #[test]
    fn polynomials_survive_json(p in poly()) {
        prop_assert_eq!(BivarPoly::from_json(&p.to_json()), Some(p));
    }

    #[test]
    fn cycles_determine_the_permutation(p in permutation(9)) {
        prop_assert_eq!(Permutation::from_cycles(p.len(), &p.cycles()).unwrap(), p);
    }

    #[test]
    fn runs_split_and_reassemble(p in permutation(9)) {
        for k in p.singleton_runs() {
            let parts = split_run(&p, k).unwrap();
            prop_assert_eq!(parts.left.len() + parts.right.len() + 1, p.len());
            prop_assert_eq!(assemble_run(&parts).unwrap(), (p.clone(), k));
            let (t, corner) = run_to_corner(&p, k).unwrap();
            prop_assert_eq!(t.size(), p.len());
            prop_assert_eq!(corner_to_run(&t, corner).unwrap(), (p.clone(), k));
        }
    }

    #[test]
    fn alpha_and_gamma_invert(n in 1usize..=6, pick in any::<prop::sample::Index>()) {
        let opts = GenOptions::default();
        let tlts = tree_like_tableaux(n, &opts).unwrap();
        let t = &tlts[pick.index(tlts.len())];
        prop_assert_eq!(&alpha_inv(&alpha(t).unwrap()).unwrap(), t);
        let pts = permutation_tableaux(n, &opts).unwrap();
        let p = &pts[pick.index(pts.len())];
        prop_assert_eq!(&gamma_inv(&gamma(p).unwrap()).unwrap(), p);
    }

    #[test]
    fn zeta_inverts(n in 1usize..=4, pick in any::<prop::sample::Index>()) {
        let all = type_b_permutation_tableaux(n, &GenOptions::default()).unwrap();
        let t = &all[pick.index(all.len())];
        prop_assert_eq!(&zeta_inv(&zeta(t).unwrap()).unwrap(), t);
    }

    #[test]
    fn words_round_trip_through_trees(h in 0usize..=3, w in 0usize..=3, pick in any::<prop::sample::Index>()) {
        prop_assume!(h + w >= 1);
        let words = all_words(h, w);
        let m = &words[pick.index(words.len())];
        let t = word_to_nat(m).unwrap();
        prop_assert_eq!((t.height(), t.width()), (h, w));
        prop_assert_eq!(&nat_to_word(&t).unwrap(), m);
    }
}

#[test]
fn run_counts_against_the_closed_form() {
    for n in 2..=8 {
        let perms = all_permutations(n);
        for r in 1..n {
            let count = perms.iter().map(|p| p.run_decomposition().count_of_size(r)).sum::<usize>();
            assert_eq!(runs_closed(n, r).unwrap(), BigInt::from(count), "n={n} r={r}");
        }
    }
}

#[test]
fn weight_sum_specialises_to_factorial() {
    for n in 1..=9 {
        let fact: BigInt = (1..=n).map(BigInt::from).product();
        assert_eq!(t_ab(n).eval_ones(), fact, "n={n}");
    }
}
