//! Subgroup constructions on top of the stabilizer chain. Normalizers,
//! centralizers and Sylow subgroups scan the parent exhaustively; every parent
//! in scope is small enough for that.

use super::group::PermGroup;
use super::perm::{is_prime, prime_factors, p_part, Permutation};
use crate::error::{Error, Result};

/// Answer of [`PermGroup::simplicity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Simplicity {
    pub simple: bool,
    pub abelian: bool,
}

impl Simplicity {
    pub fn is_nonabelian_simple(&self) -> bool {
        self.simple && !self.abelian
    }
}

impl PermGroup {
    fn require_subgroup(&self, h: &PermGroup) -> Result<()> {
        if h.degree() != self.degree() {
            return Err(Error::DegreeMismatch(self.degree(), h.degree()));
        }
        if !h.is_subgroup_of(self) {
            return Err(Error::NotSubgroup);
        }
        Ok(())
    }

    /// Grows `start` by each of `elems` that it does not already contain.
    fn grow(start: PermGroup, elems: impl IntoIterator<Item = Permutation>) -> PermGroup {
        elems.into_iter().fold(start, |acc, g| acc.extended(&g))
    }

    /// The subgroup generated by `elems`, all of which must lie in `self`.
    pub fn subgroup(&self, elems: &[Permutation]) -> Result<PermGroup> {
        for g in elems {
            if !self.contains(g)? {
                return Err(Error::NotInGroup);
            }
        }
        PermGroup::with_degree(self.degree(), elems.to_vec())
    }

    /// Smallest normal subgroup of `self` containing `h`.
    pub fn normal_closure(&self, h: &PermGroup) -> Result<PermGroup> {
        self.require_subgroup(h)?;
        let mut closure = h.clone();
        let mut i = 0;
        while i < closure.generators().len() {
            let n = closure.generators()[i].clone();
            for g in self.generators() {
                let c = n.conjugate_by(g);
                if !closure.is_member(&c) {
                    closure = closure.extended(&c);
                }
            }
            i += 1;
        }
        Ok(closure)
    }

    /// Whether the chain `self ⊵ ncl(self, h) ⊵ ncl(ncl(self, h), h) ⊵ …`
    /// descends all the way to `h`.
    pub fn is_subnormal(&self, h: &PermGroup) -> Result<bool> {
        self.require_subgroup(h)?;
        let mut current = self.clone();
        loop {
            let next = current.normal_closure(h)?;
            if next.order() == current.order() {
                return Ok(current.order() == h.order());
            }
            current = next;
        }
    }

    /// Elements of `self` commuting with every generator of `h`.
    pub fn centralizer(&self, h: &PermGroup) -> Result<PermGroup> {
        if h.degree() != self.degree() {
            return Err(Error::DegreeMismatch(self.degree(), h.degree()));
        }
        self.check_cap(super::group::element_cap())?;
        let mut c = PermGroup::trivial(self.degree());
        for g in self.iter() {
            if c.is_member(&g) {
                continue;
            }
            if h.generators().iter().all(|x| g.commutes_with(x)) {
                c = c.extended(&g);
            }
        }
        Ok(c)
    }

    /// `{g ∈ self : hᵍ = h}`.
    pub fn normalizer(&self, h: &PermGroup) -> Result<PermGroup> {
        self.require_subgroup(h)?;
        self.check_cap(super::group::element_cap())?;
        let mut n = h.clone();
        for g in self.iter() {
            if n.is_member(&g) {
                continue;
            }
            if normalizes(&g, h) {
                n = n.extended(&g);
            }
        }
        Ok(n)
    }

    pub fn center(&self) -> Result<PermGroup> {
        self.centralizer(self)
    }

    /// Conjugacy classes as lists of ranks, in order of their smallest rank.
    pub fn conjugacy_classes(&self) -> Result<Vec<Vec<u64>>> {
        self.check_cap(super::group::element_cap())?;
        let n = self.order() as usize;
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for r in 0..n {
            if seen[r] {
                continue;
            }
            classes.push(self.class_of(r as u64, &mut seen));
        }
        Ok(classes)
    }

    fn class_of(&self, rank: u64, seen: &mut [bool]) -> Vec<u64> {
        seen[rank as usize] = true;
        let mut class = vec![rank];
        let mut elems = vec![self.unrank(rank)];
        let mut i = 0;
        while i < elems.len() {
            for g in self.generators() {
                let c = elems[i].conjugate_by(g);
                let rc = self.rank(&c).expect("conjugate stays in group");
                if !seen[rc as usize] {
                    seen[rc as usize] = true;
                    class.push(rc);
                    elems.push(c);
                }
            }
            i += 1;
        }
        class.sort_unstable();
        class
    }

    /// Minimal normal subgroups, found as the minimal members among normal
    /// closures of prime-order elements (one per conjugacy class).
    pub fn minimal_normal_subgroups(&self) -> Result<Vec<PermGroup>> {
        self.check_cap(super::group::element_cap())?;
        let n = self.order() as usize;
        let mut seen = vec![false; n];
        let mut closures: Vec<PermGroup> = Vec::new();
        for r in 0..n {
            if seen[r] {
                continue;
            }
            let x = self.unrank(r as u64);
            if !is_prime(x.order()) {
                seen[r] = true;
                continue;
            }
            self.class_of(r as u64, &mut seen);
            let cyclic = PermGroup::with_degree(self.degree(), vec![x])?;
            let closure = self.normal_closure(&cyclic)?;
            if !closures.iter().any(|c| c.same_group(&closure)) {
                closures.push(closure);
            }
        }
        let minimal = closures
            .iter()
            .filter(|n| {
                !closures
                    .iter()
                    .any(|m| m.order() < n.order() && m.is_subgroup_of(n))
            })
            .cloned()
            .collect();
        Ok(minimal)
    }

    /// Simple iff the only minimal normal subgroup is the whole group.
    pub fn simplicity(&self) -> Result<Simplicity> {
        if self.is_trivial() {
            return Err(Error::TrivialGroup);
        }
        let mins = self.minimal_normal_subgroups()?;
        Ok(Simplicity {
            simple: mins.len() == 1 && mins[0].order() == self.order(),
            abelian: self.is_abelian(),
        })
    }

    pub fn derived_subgroup(&self) -> Result<PermGroup> {
        let gens = self.generators();
        let mut comms = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                let c = a.inverse().then(&b.inverse()).then(a).then(b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        let seed = PermGroup::with_degree(self.degree(), comms)?;
        self.normal_closure(&seed)
    }

    /// A Sylow `p`-subgroup, grown one `p`-element of the normalizer at a
    /// time. The first suitable element in rank order is taken at each step.
    pub fn sylow(&self, p: u64) -> Result<PermGroup> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let target = p_part(self.order(), p);
        let elems = self.elements()?;
        let mut sylow = PermGroup::trivial(self.degree());
        while sylow.order() < target {
            let next = elems
                .iter()
                .find(|x| {
                    let o = x.order();
                    o > 1
                        && prime_factors(o) == [p]
                        && !sylow.is_member(x)
                        && normalizes(x, &sylow)
                })
                .expect("a p-subgroup below Sylow order has a larger p-normalizer");
            sylow = sylow.extended(next);
        }
        Ok(sylow)
    }

    /// `h ∩ k` for subgroups `h`, `k` of `self`.
    pub fn intersection(&self, h: &PermGroup, k: &PermGroup) -> Result<PermGroup> {
        self.require_subgroup(h)?;
        self.require_subgroup(k)?;
        let (small, large) = if h.order() <= k.order() { (h, k) } else { (k, h) };
        small.check_cap(super::group::element_cap())?;
        let common = small.iter().filter(|g| large.is_member(g));
        Ok(Self::grow(PermGroup::trivial(self.degree()), common))
    }
}

pub(crate) fn normalizes(g: &Permutation, h: &PermGroup) -> bool {
    let g_inv = g.inverse();
    h.generators()
        .iter()
        .all(|x| h.is_member(&g_inv.then(x).then(g)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, c: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, c).unwrap()
    }

    fn gen(n: usize, gens: &[&[&[usize]]]) -> PermGroup {
        PermGroup::with_degree(n, gens.iter().map(|c| cyc(n, c)).collect()).unwrap()
    }

    #[test]
    fn subgroup_generation() {
        let s3 = PermGroup::symmetric(3);
        assert_eq!(s3.subgroup(&[cyc(3, &[&[0, 1, 2]])]).unwrap().order(), 3);
        assert_eq!(s3.subgroup(&[]).unwrap().order(), 1);
        let a3 = PermGroup::cyclic(3);
        assert_eq!(a3.subgroup(&[cyc(3, &[&[0, 1]])]).unwrap_err(), Error::NotInGroup);
    }

    #[test]
    fn normal_closures() {
        let s3 = PermGroup::symmetric(3);
        let a3 = gen(3, &[&[&[0, 1, 2]]]);
        assert!(s3.normal_closure(&a3).unwrap().same_group(&a3));
        let t = gen(3, &[&[&[0, 1]]]);
        assert_eq!(s3.normal_closure(&t).unwrap().order(), 6);
        assert!(s3.normal_closure(&PermGroup::trivial(3)).unwrap().is_trivial());
        assert_eq!(a3.normal_closure(&t).unwrap_err(), Error::NotSubgroup);
    }

    #[test]
    fn subnormality() {
        let s4 = PermGroup::symmetric(4);
        assert!(s4.is_subnormal(&s4).unwrap());
        let s3 = PermGroup::symmetric(3);
        assert!(s3.is_subnormal(&gen(3, &[&[&[0, 1, 2]]])).unwrap());
        assert!(!s4.is_subnormal(&gen(4, &[&[&[0, 1]]])).unwrap());
        // ⟨(0 1)(2 3)⟩ ⊴ V₄ ⊴ S₄
        assert!(s4.is_subnormal(&gen(4, &[&[&[0, 1], &[2, 3]]])).unwrap());
    }

    #[test]
    fn centralizers_and_centers() {
        let s3 = PermGroup::symmetric(3);
        let a3 = gen(3, &[&[&[0, 1, 2]]]);
        assert!(s3.centralizer(&PermGroup::trivial(3)).unwrap().same_group(&s3));
        assert!(s3.centralizer(&a3).unwrap().same_group(&a3));
        assert!(s3.center().unwrap().is_trivial());
        let c6 = PermGroup::cyclic(6);
        assert!(c6.center().unwrap().same_group(&c6));
    }

    #[test]
    fn normalizers() {
        let s4 = PermGroup::symmetric(4);
        assert!(s4.normalizer(&s4).unwrap().same_group(&s4));
        let p = s4.sylow(2).unwrap();
        assert!(s4.normalizer(&p).unwrap().same_group(&p));
        let c3 = gen(4, &[&[&[0, 1, 2]]]);
        assert_eq!(s4.normalizer(&c3).unwrap().order(), 6);
    }

    #[test]
    fn minimal_normal_subgroups_of_small_groups() {
        let s3 = PermGroup::symmetric(3);
        let mins = s3.minimal_normal_subgroups().unwrap();
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].order(), 3);
        let a5 = PermGroup::alternating(5);
        let mins = a5.minimal_normal_subgroups().unwrap();
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].order(), 60);
        let s4 = PermGroup::symmetric(4);
        let mins = s4.minimal_normal_subgroups().unwrap();
        assert_eq!(mins.iter().map(|m| m.order()).collect::<Vec<_>>(), vec![4]);
        // C2 × C2 has three minimal normal subgroups
        let v4 = gen(4, &[&[&[0, 1]], &[&[2, 3]]]);
        assert_eq!(v4.minimal_normal_subgroups().unwrap().len(), 3);
    }

    #[test]
    fn simplicity_flags() {
        assert!(PermGroup::alternating(5).simplicity().unwrap().is_nonabelian_simple());
        assert!(!PermGroup::symmetric(3).simplicity().unwrap().simple);
        let c5 = PermGroup::cyclic(5).simplicity().unwrap();
        assert!(c5.simple && c5.abelian);
        assert_eq!(
            PermGroup::trivial(3).simplicity().unwrap_err(),
            Error::TrivialGroup
        );
    }

    #[test]
    fn derived_subgroups() {
        assert!(PermGroup::cyclic(5).derived_subgroup().unwrap().is_trivial());
        assert_eq!(PermGroup::symmetric(3).derived_subgroup().unwrap().order(), 3);
        assert_eq!(PermGroup::symmetric(5).derived_subgroup().unwrap().order(), 60);
    }

    #[test]
    fn sylow_subgroups() {
        assert_eq!(PermGroup::symmetric(3).sylow(2).unwrap().order(), 2);
        assert_eq!(PermGroup::symmetric(6).sylow(2).unwrap().order(), 16);
        assert_eq!(PermGroup::symmetric(6).sylow(3).unwrap().order(), 9);
        assert_eq!(PermGroup::alternating(5).sylow(7).unwrap().order(), 1);
        assert_eq!(PermGroup::symmetric(3).sylow(4).unwrap_err(), Error::NotPrime(4));
    }

    #[test]
    fn intersections() {
        let s4 = PermGroup::symmetric(4);
        let a4 = PermGroup::alternating(4);
        let p = s4.sylow(2).unwrap();
        assert!(s4.intersection(&p, &p).unwrap().same_group(&p));
        assert_eq!(s4.intersection(&p, &a4).unwrap().order(), 4);
    }
}
