mod common;

use common::*;
use pisub::pisub::{maximal_pi_overgroups, PrimeSet};
use pisub::PermGroup;

#[test]
fn stabilizer_chain_orders_match_closure() {
    for (name, g) in order_test_groups() {
        assert_eq!(g.order(), elements(&g).len() as u64, "{name}");
    }
}

#[test]
fn pgl27_order_by_closure() {
    let (pgl, psl) = pisub::scenarios::pgl27().unwrap();
    assert_eq!(elements(&pgl).len(), 336);
    assert_eq!(elements(&psl).len(), 168);
}

#[test]
fn subgroup_counts() {
    // known numbers of subgroups
    assert_eq!(all_subgroups(&PermGroup::symmetric(4)).len(), 30);
    assert_eq!(all_subgroups(&PermGroup::alternating(5)).len(), 59);
    assert_eq!(all_subgroups(&PermGroup::dihedral(6)).len(), 16);
}

#[test]
fn pi_maximality_matches_oracle() {
    for (name, g) in oracle_groups() {
        for pi in prime_sets() {
            let n = check_against_oracle(&g, &pi).unwrap_or_else(|e| panic!("{name} {pi}: {e}"));
            assert!(n > 0);
        }
    }
}

#[test]
fn three_sylow_overgroups_of_trivial_in_s4() {
    let g = PermGroup::symmetric(4);
    let pi = PrimeSet::new(&[2]).unwrap();
    let leaves = maximal_pi_overgroups(&g, &PermGroup::trivial(4), &pi).unwrap();
    assert_eq!(leaves.len(), 3);
}
