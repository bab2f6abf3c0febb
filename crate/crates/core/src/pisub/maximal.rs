use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use super::primes::{is_pi_element, is_pi_group, PrimeSet};
use crate::error::{Error, Result};
use crate::permcore::{element_cap, p_part, PermGroup, Permutation};

/// Outcome of the exhaustive π-maximality test.
#[derive(Clone, Debug)]
pub enum PiMaximality {
    Maximal,
    /// A strictly larger π-subgroup `⟨H, g⟩`.
    NotMaximal { witness: PermGroup },
}

impl PiMaximality {
    pub fn is_maximal(&self) -> bool {
        matches!(self, Self::Maximal)
    }

    pub fn witness(&self) -> Option<&PermGroup> {
        match self {
            Self::Maximal => None,
            Self::NotMaximal { witness } => Some(witness),
        }
    }
}

fn check_input(g: &PermGroup, h: &PermGroup, pi: &PrimeSet) -> Result<()> {
    if h.degree() != g.degree() {
        return Err(Error::DegreeMismatch(g.degree(), h.degree()));
    }
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup);
    }
    if !is_pi_group(h, pi) {
        return Err(Error::NotPiGroup);
    }
    if g.order() > element_cap() {
        return Err(Error::CapExceeded {
            order: g.order(),
            cap: element_cap(),
        });
    }
    Ok(())
}

/// Number of right cosets of `H` in `⟨H, x⟩`, or `None` once it exceeds
/// `limit`. Cosets are named by their least rank in `g`.
fn bounded_join_index(
    g: &PermGroup,
    h: &PermGroup,
    h_elems: &[Permutation],
    x: &Permutation,
    limit: u64,
) -> Option<u64> {
    let name = |y: &Permutation| {
        h_elems
            .iter()
            .map(|k| g.rank(&k.then(y)).expect("element of g"))
            .min()
            .expect("nonempty subgroup")
    };
    let gens: Vec<&Permutation> = h.generators().iter().chain([x]).collect();
    let mut seen = HashSet::from([0u64]);
    let mut queue = vec![h.identity()];
    while let Some(y) = queue.pop() {
        for s in &gens {
            let z = y.then(s);
            if seen.insert(name(&z)) {
                if seen.len() as u64 > limit {
                    return None;
                }
                queue.push(z);
            }
        }
    }
    Some(seen.len() as u64)
}

/// Calls `f` with `⟨H, g⟩` for one `g` from each right coset `Hg ≠ H`
/// (the first in rank order) such that `g` is a π-element and `⟨H, g⟩` a
/// π-group. Stops when `f` returns `false`.
fn for_each_pi_extension(
    g: &PermGroup,
    h: &PermGroup,
    pi: &PrimeSet,
    mut f: impl FnMut(PermGroup) -> bool,
) -> Result<()> {
    let h_elems = h.elements()?;
    // a π-subgroup has order dividing the π-part of |G|
    let pi_part: u64 = pi.primes().iter().map(|&p| p_part(g.order(), p)).product();
    let limit = pi_part / h.order();
    let mut marked = vec![false; g.order() as usize];
    for r in 0..g.order() {
        if marked[r as usize] {
            continue;
        }
        let x = g.unrank(r);
        for y in &h_elems {
            marked[g.rank(&y.then(&x)).expect("coset of a subgroup") as usize] = true;
        }
        if h.is_member(&x) || !is_pi_element(&x, pi) {
            continue;
        }
        let Some(index) = bounded_join_index(g, h, &h_elems, &x, limit) else {
            continue;
        };
        if !pi.is_pi_number(index) {
            continue;
        }
        let k = h.extended(&x);
        debug_assert_eq!(k.order(), index * h.order());
        if !f(k) {
            break;
        }
    }
    Ok(())
}

/// Decides whether the π-subgroup `h` of `g` lies in no strictly larger
/// π-subgroup. A proper π-overgroup `K` contains some `x ∈ K∖H`, and then
/// `⟨H, x⟩ ≤ K` is a π-group, so testing single-element extensions is exact.
pub fn is_pi_maximal(g: &PermGroup, h: &PermGroup, pi: &PrimeSet) -> Result<PiMaximality> {
    check_input(g, h, pi)?;
    let mut witness = None;
    for_each_pi_extension(g, h, pi, |k| {
        witness = Some(k);
        false
    })?;
    Ok(match witness {
        None => PiMaximality::Maximal,
        Some(witness) => PiMaximality::NotMaximal { witness },
    })
}

/// Sorted ranks of the elements of `h` in `g`: an exact key for the element
/// set.
pub fn element_key(g: &PermGroup, h: &PermGroup) -> Result<Vec<u64>> {
    h.check_cap(element_cap())?;
    let mut key: Vec<u64> = h
        .iter()
        .map(|x| g.rank(&x).ok_or(Error::NotSubgroup))
        .collect::<Result<_>>()?;
    key.sort_unstable();
    Ok(key)
}

/// Direct π-overgroups `⟨H, g⟩` of `h`, deduplicated, in discovery order.
pub fn pi_extensions(g: &PermGroup, h: &PermGroup, pi: &PrimeSet) -> Result<Vec<PermGroup>> {
    check_input(g, h, pi)?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut err = None;
    for_each_pi_extension(g, h, pi, |k| match element_key(g, &k) {
        Ok(key) => {
            if seen.insert(key) {
                out.push(k);
            }
            true
        }
        Err(e) => {
            err = Some(e);
            false
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Every π-maximal subgroup of `g` containing `s`, by breadth-first ascent
/// through single-element extensions. Sorted by order, then by element key.
pub fn maximal_pi_overgroups(g: &PermGroup, s: &PermGroup, pi: &PrimeSet) -> Result<Vec<PermGroup>> {
    check_input(g, s, pi)?;
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::from([element_key(g, s)?]);
    let mut frontier = vec![s.clone()];
    let mut leaves: Vec<(u64, Vec<u64>, PermGroup)> = Vec::new();
    while !frontier.is_empty() {
        let expanded: Vec<Vec<PermGroup>> = frontier
            .par_iter()
            .map(|h| pi_extensions(g, h, pi))
            .collect::<Result<_>>()?;
        let mut next = Vec::new();
        for (h, children) in frontier.into_iter().zip(expanded) {
            if children.is_empty() {
                let key = element_key(g, &h)?;
                leaves.push((h.order(), key, h));
                continue;
            }
            for k in children {
                if seen.insert(element_key(g, &k)?) {
                    next.push(k);
                }
            }
        }
        frontier = next;
    }
    leaves.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(leaves.into_iter().map(|(_, _, h)| h).collect())
}

/// `|N_G(H) : H|`.
pub fn normalizer_index(g: &PermGroup, h: &PermGroup) -> Result<u64> {
    Ok(g.normalizer(h)?.order() / h.order())
}

/// Whether `|N_G(H) : H|` is coprime to every prime in `pi`.
pub fn wielandt_hartley_check(g: &PermGroup, h: &PermGroup, pi: &PrimeSet) -> Result<bool> {
    Ok(pi.is_coprime_to(normalizer_index(g, h)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pi(p: &[u64]) -> PrimeSet {
        PrimeSet::new(p).unwrap()
    }

    #[test]
    fn sylow_subgroups_are_p_maximal() {
        let g = PermGroup::symmetric(4);
        let s = g.sylow(2).unwrap();
        assert!(is_pi_maximal(&g, &s, &pi(&[2])).unwrap().is_maximal());
        let a5 = PermGroup::alternating(5);
        for p in [2, 3, 5] {
            let s = a5.sylow(p).unwrap();
            assert!(is_pi_maximal(&a5, &s, &pi(&[p])).unwrap().is_maximal());
        }
    }

    #[test]
    fn witness_is_a_larger_pi_group() {
        let g = PermGroup::symmetric(4);
        let c = PermGroup::new(vec![Permutation::from_cycles(4, &[&[0, 1]]).unwrap()]).unwrap();
        let r = is_pi_maximal(&g, &c, &pi(&[2])).unwrap();
        let w = r.witness().unwrap();
        assert!(c.is_subgroup_of(w) && w.order() > c.order());
        assert!(is_pi_group(w, &pi(&[2])));
    }

    #[test]
    fn input_errors() {
        let g = PermGroup::symmetric(4);
        assert_eq!(
            is_pi_maximal(&g, &g, &pi(&[2])).unwrap_err(),
            Error::NotPiGroup
        );
        let other = PermGroup::symmetric(5);
        assert!(is_pi_maximal(&g, &other, &pi(&[2])).is_err());
    }

    #[test]
    fn overgroups_of_trivial_in_s4() {
        let g = PermGroup::symmetric(4);
        let leaves = maximal_pi_overgroups(&g, &PermGroup::trivial(4), &pi(&[2])).unwrap();
        assert_eq!(leaves.len(), 3);
        assert!(leaves.iter().all(|k| k.order() == 8));
        let whole = maximal_pi_overgroups(&g, &PermGroup::trivial(4), &pi(&[2, 3])).unwrap();
        assert_eq!(whole.len(), 1);
        assert!(whole[0].same_group(&g));
    }

    #[test]
    fn maximal_subject_is_its_own_leaf() {
        let g = PermGroup::symmetric(4);
        let s = g.sylow(2).unwrap();
        let leaves = maximal_pi_overgroups(&g, &s, &pi(&[2])).unwrap();
        assert_eq!(leaves.len(), 1);
        assert!(leaves[0].same_group(&s));
    }

    #[test]
    fn wielandt_hartley_indices() {
        let g = PermGroup::symmetric(4);
        assert_eq!(normalizer_index(&g, &g).unwrap(), 1);
        assert!(wielandt_hartley_check(&g, &g, &pi(&[2, 3])).unwrap());
        let c3 = PermGroup::new(vec![Permutation::from_cycles(4, &[&[0, 1, 2]]).unwrap()]).unwrap();
        // N(C₃) = S₃
        assert_eq!(normalizer_index(&g, &c3).unwrap(), 2);
        assert!(!wielandt_hartley_check(&g, &c3, &pi(&[2])).unwrap());
        assert!(wielandt_hartley_check(&g, &c3, &pi(&[3])).unwrap());
    }
}
