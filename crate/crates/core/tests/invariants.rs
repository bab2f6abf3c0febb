mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use proptest::sample::select;

use common::{all_subgroups, closure, elements, to_group};
use pisub::extensions::{solve_1cocycles, ModuleAction};
use pisub::f2lin::{enumerate_gl32, BitMatrix, BitVector};
use pisub::permcore::p_part;
use pisub::pisub::{element_key, is_pi_maximal, maximal_pi_overgroups, PrimeSet};
use pisub::presentations::{perm_rep_from_table, todd_coxeter, Presentation, Word};
use pisub::scenarios::{emit_report, Check, Format, ScenarioReport};
use pisub::{PermGroup, Permutation};

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn word(ngens: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..ngens as i32, any::<bool>()), 0..max_len).prop_map(|ls| {
        let signed: Vec<i32> = ls.iter().map(|&(g, inv)| if inv { -(g + 1) } else { g + 1 }).collect();
        Word::from_signed(&signed)
    })
}

fn pi_set() -> impl Strategy<Value = PrimeSet> {
    select(vec![vec![2u64], vec![3], vec![2, 3], vec![2, 5], vec![3, 5]])
        .prop_map(|p| PrimeSet::new(&p).unwrap())
}

fn gl32_perms() -> Vec<Permutation> {
    let t = todd_coxeter(&Presentation::gl32(), &[], 10_000).unwrap();
    perm_rep_from_table(&t).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative_with_inverses(a in perm(7), b in perm(7), c in perm(7)) {
        prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
        prop_assert!(a.then(&a.inverse()).is_identity());
        prop_assert_eq!(a.then(&b).inverse(), b.inverse().then(&a.inverse()));
        prop_assert!(a.pow(a.order()).is_identity());
    }

    #[test]
    fn group_order_matches_closure(gens in prop::collection::vec(perm(6), 1..3)) {
        let g = PermGroup::new(gens.clone()).unwrap();
        let all = elements(&g);
        prop_assert_eq!(g.order(), all.len() as u64);
        for x in &all {
            prop_assert!(g.is_member(x));
            let r = g.rank(x).unwrap();
            prop_assert_eq!(&g.unrank(r), x);
        }
    }

    #[test]
    fn nonmembers_are_rejected(gens in prop::collection::vec(perm(6), 1..3), x in perm(6)) {
        let g = PermGroup::new(gens).unwrap();
        prop_assert_eq!(g.is_member(&x), elements(&g).contains(&x));
    }

    #[test]
    fn sylow_orders(gens in prop::collection::vec(perm(6), 1..3), p in select(vec![2u64, 3, 5])) {
        let g = PermGroup::new(gens).unwrap();
        let s = g.sylow(p).unwrap();
        prop_assert_eq!(s.order(), p_part(g.order(), p));
        prop_assert!(s.is_subgroup_of(&g));
    }

    #[test]
    fn invertible_matrices_invert(i in 0usize..168, j in 0usize..168) {
        let all = enumerate_gl32();
        let (a, b) = (&all[i], &all[j]);
        prop_assert_eq!(a.mul(&a.inverse().unwrap()).unwrap(), BitMatrix::identity(3));
        let ab_inv = a.mul(b).unwrap().inverse().unwrap();
        prop_assert_eq!(ab_inv, b.inverse().unwrap().mul(&a.inverse().unwrap()).unwrap());
        for v in BitVector::all(3) {
            prop_assert_eq!(v.mul_matrix(a).mul_matrix(b), v.mul_matrix(&a.mul(b).unwrap()));
        }
    }

    #[test]
    fn word_evaluation_is_a_homomorphism(u in word(2, 12), v in word(2, 12)) {
        let images = gl32_perms();
        let uv = (&u * &v).evaluate(&images).unwrap();
        prop_assert_eq!(uv, u.evaluate(&images).unwrap().then(&v.evaluate(&images).unwrap()));
        prop_assert_eq!(
            u.inverse().evaluate(&images).unwrap(),
            u.evaluate(&images).unwrap().inverse()
        );
        prop_assert_eq!(
            u.freely_reduced().evaluate(&images).unwrap(),
            u.evaluate(&images).unwrap()
        );
    }

    #[test]
    fn coset_index_times_subgroup_order(w in word(2, 10)) {
        let images = gl32_perms();
        let x = w.evaluate(&images).unwrap();
        let h = PermGroup::with_degree(168, vec![x]).unwrap();
        let t = todd_coxeter(&Presentation::gl32(), &[w], 10_000).unwrap();
        prop_assert_eq!(t.ncosets() as u64 * h.order(), 168);
    }

    #[test]
    fn cocycle_rule_on_words(u in word(2, 8), v in word(2, 8), pick in 0usize..16) {
        let p = Presentation::gl32();
        let act = ModuleAction::natural(&p).unwrap();
        let space = solve_1cocycles(&p, &act).unwrap();
        let delta = &space.cocycles()[pick % space.cocycles().len()];
        let duv = delta.evaluate(&act, &(&u * &v)).unwrap();
        let du = delta.evaluate(&act, &u).unwrap();
        let dv = delta.evaluate(&act, &v).unwrap();
        prop_assert_eq!(duv, du.mul_matrix(&act.word_matrix(&v).unwrap()).add(&dv));
    }

    #[test]
    fn pi_numbers_are_multiplicative(a in 1u64..500, b in 1u64..500, pi in pi_set()) {
        prop_assert_eq!(pi.is_pi_number(a * b), pi.is_pi_number(a) && pi.is_pi_number(b));
        if pi.is_coprime_to(a) {
            prop_assert!(!pi.is_pi_number(a) || a == 1);
        }
    }

    #[test]
    fn report_json_round_trips(
        checks in prop::collection::vec(("[a-z ]{1,12}", any::<u32>(), any::<u32>()), 0..6),
        ms in any::<u32>(),
    ) {
        let checks = checks
            .into_iter()
            .map(|(name, e, a)| Check { name, expected: e.into(), actual: a.into(), pass: e == a })
            .collect();
        let r = ScenarioReport::from_checks("prop", checks, vec!["fact".into()], ms as u64);
        let json = emit_report(&r, Format::Json);
        let back: ScenarioReport = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &r);
        prop_assert_eq!(emit_report(&back, Format::Json), json);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn overgroup_ascent_invariants(pick in 0usize..30, pi in pi_set()) {
        let g = PermGroup::symmetric(4);
        let subs = all_subgroups(&g);
        let pi_subs: Vec<_> = subs.iter().filter(|h| pi.is_pi_number(h.len() as u64)).collect();
        let h = to_group(4, pi_subs[pick % pi_subs.len()]);
        let leaves = maximal_pi_overgroups(&g, &h, &pi).unwrap();
        prop_assert!(!leaves.is_empty());
        let mut keys = BTreeSet::new();
        for k in &leaves {
            prop_assert!(h.is_subgroup_of(k));
            prop_assert!(is_pi_maximal(&g, k, &pi).unwrap().is_maximal());
            prop_assert!(keys.insert(element_key(&g, k).unwrap()));
        }
    }

    #[test]
    fn ascent_commutes_with_conjugation(x in perm(4), pi in pi_set()) {
        let g = PermGroup::symmetric(4);
        let s = g.sylow(2).unwrap();
        let c = closure(4, &[s.generators()[0].clone()]);
        let h = to_group(4, &c);
        if !pi.is_pi_number(h.order()) {
            return Ok(());
        }
        let moved: BTreeSet<Vec<u64>> = maximal_pi_overgroups(&g, &h.conjugate(&x), &pi)
            .unwrap()
            .iter()
            .map(|k| element_key(&g, k).unwrap())
            .collect();
        let expected: BTreeSet<Vec<u64>> = maximal_pi_overgroups(&g, &h, &pi)
            .unwrap()
            .iter()
            .map(|k| element_key(&g, &k.conjugate(&x)).unwrap())
            .collect();
        prop_assert_eq!(moved, expected);
    }
}
