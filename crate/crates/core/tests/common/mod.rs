//! Brute-force oracles that never touch stabilizer chains.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use pisub::permcore::prime_factors;
use pisub::pisub::PrimeSet;
use pisub::{PermGroup, Permutation};

pub type ElementSet = BTreeSet<Permutation>;

/// Every product of the generators, by breadth-first multiplication.
pub fn closure(degree: usize, gens: &[Permutation]) -> ElementSet {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn elements(g: &PermGroup) -> ElementSet {
    closure(g.degree(), g.generators())
}

/// All subgroups of `g`, grown from the trivial group by joining cyclic
/// subgroups.
pub fn all_subgroups(g: &PermGroup) -> Vec<ElementSet> {
    let elems = elements(g);
    let d = g.degree();
    let cyclic: BTreeSet<ElementSet> = elems.iter().map(|x| closure(d, &[x.clone()])).collect();
    let mut found: BTreeSet<ElementSet> = BTreeSet::from([closure(d, &[])]);
    let mut queue: Vec<ElementSet> = found.iter().cloned().collect();
    while let Some(h) = queue.pop() {
        for c in &cyclic {
            if c.is_subset(&h) {
                continue;
            }
            let gens: Vec<Permutation> = h.iter().chain(c.iter()).cloned().collect();
            let j = closure(d, &small_generators(d, &gens));
            if found.insert(j.clone()) {
                queue.push(j);
            }
        }
    }
    found.into_iter().collect()
}

/// A generating subset of `elems`, chosen greedily.
pub fn small_generators(degree: usize, elems: &[Permutation]) -> Vec<Permutation> {
    let mut gens = Vec::new();
    let mut span = closure(degree, &gens);
    for x in elems {
        if !span.contains(x) {
            gens.push(x.clone());
            span = closure(degree, &gens);
        }
    }
    gens
}

pub fn to_group(degree: usize, set: &ElementSet) -> PermGroup {
    let elems: Vec<Permutation> = set.iter().cloned().collect();
    PermGroup::with_degree(degree, small_generators(degree, &elems)).unwrap()
}

pub fn is_pi_number(n: usize, pi: &PrimeSet) -> bool {
    prime_factors(n as u64).iter().all(|p| pi.contains(*p))
}

/// π-subgroups of `subgroups` containing `h` and contained in no larger
/// π-subgroup.
pub fn oracle_maximal_over(subgroups: &[ElementSet], h: &ElementSet, pi: &PrimeSet) -> BTreeSet<ElementSet> {
    let pi_groups: Vec<&ElementSet> = subgroups.iter().filter(|k| is_pi_number(k.len(), pi)).collect();
    pi_groups
        .iter()
        .filter(|k| h.is_subset(k))
        .filter(|k| !pi_groups.iter().any(|m| m.len() > k.len() && k.is_subset(m)))
        .map(|k| (*k).clone())
        .collect()
}

/// The small groups the oracle suite runs on.
pub fn oracle_groups() -> Vec<(&'static str, PermGroup)> {
    vec![
        ("S4", PermGroup::symmetric(4)),
        ("D12", PermGroup::dihedral(6)),
        ("A5", PermGroup::alternating(5)),
    ]
}

pub fn prime_sets() -> Vec<PrimeSet> {
    [&[2u64][..], &[3], &[2, 3]]
        .iter()
        .map(|p| PrimeSet::new(p).unwrap())
        .collect()
}

/// Compares `is_pi_maximal` and `maximal_pi_overgroups` with the oracle for
/// every π-subgroup of `g`. Returns a description of the first mismatch.
pub fn check_against_oracle(g: &PermGroup, pi: &PrimeSet) -> Result<usize, String> {
    use pisub::pisub::{is_pi_maximal, maximal_pi_overgroups};
    let subgroups = all_subgroups(g);
    let mut checked = 0;
    for h in subgroups.iter().filter(|h| is_pi_number(h.len(), pi)) {
        let hg = to_group(g.degree(), h);
        let expected = oracle_maximal_over(&subgroups, h, pi);
        let maximal = is_pi_maximal(g, &hg, pi).map_err(|e| e.to_string())?.is_maximal();
        if maximal != (expected.len() == 1 && expected.contains(h)) {
            return Err(format!("is_pi_maximal disagrees on a subgroup of order {}", h.len()));
        }
        let leaves: BTreeSet<ElementSet> = maximal_pi_overgroups(g, &hg, pi)
            .map_err(|e| e.to_string())?
            .iter()
            .map(elements)
            .collect();
        if leaves != expected {
            return Err(format!(
                "maximal_pi_overgroups disagrees above a subgroup of order {}",
                h.len()
            ));
        }
        checked += 1;
    }
    Ok(checked)
}

/// Groups of order at most 10⁴ whose stabilizer-chain order is compared with
/// exhaustive closure.
pub fn order_test_groups() -> Vec<(&'static str, PermGroup)> {
    let mut out = vec![
        ("C7", PermGroup::cyclic(7)),
        ("D12", PermGroup::dihedral(6)),
        ("S4", PermGroup::symmetric(4)),
        ("A5", PermGroup::alternating(5)),
        ("S5", PermGroup::symmetric(5)),
        ("A6", PermGroup::alternating(6)),
        ("S6", PermGroup::symmetric(6)),
        ("A7", PermGroup::alternating(7)),
        ("S7", PermGroup::symmetric(7)),
    ];
    let (pgl, psl) = pisub::scenarios::pgl27().unwrap();
    out.push(("PGL(2,7)", pgl));
    out.push(("PSL(2,7)", psl));
    out.push(("GL(3,2)", pisub::scenarios::gl32_on_points().unwrap()));
    out
}
