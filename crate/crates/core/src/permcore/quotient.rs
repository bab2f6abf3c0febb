use super::group::{element_cap, PermGroup};
use super::perm::Permutation;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
enum Action {
    /// Induced action on the orbits of the kernel; `block_of[x]` is the
    /// orbit index of point `x`.
    Blocks { block_of: Vec<u32> },
    /// Right multiplication on the right cosets `N·g`.
    Cosets {
        parent: PermGroup,
        coset_of_rank: Vec<u32>,
        reps: Vec<Permutation>,
    },
    /// `N = G`: everything maps to the identity on one point.
    Collapsed,
}

/// `G/N` realized as a permutation group, together with the projection.
#[derive(Clone, Debug)]
pub struct BlockQuotient {
    group: PermGroup,
    kernel: PermGroup,
    action: Action,
}

impl BlockQuotient {
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn kernel(&self) -> &PermGroup {
        &self.kernel
    }

    /// Whether the quotient acts on the kernel's orbits (as opposed to the
    /// coset fallback).
    pub fn is_block_action(&self) -> bool {
        matches!(self.action, Action::Blocks { .. })
    }

    /// Image of a parent element in the quotient.
    pub fn image(&self, g: &Permutation) -> Permutation {
        match &self.action {
            Action::Blocks { block_of } => {
                let nblocks = self.group.degree();
                let mut images = vec![u32::MAX; nblocks];
                for (x, &b) in block_of.iter().enumerate() {
                    images[b as usize] = block_of[g.image(x)];
                }
                Permutation::from_raw(images)
            }
            Action::Cosets {
                parent,
                coset_of_rank,
                reps,
            } => {
                let images = reps
                    .iter()
                    .map(|r| {
                        let rank = parent.rank(&r.then(g)).expect("element of parent");
                        coset_of_rank[rank as usize]
                    })
                    .collect();
                Permutation::from_raw(images)
            }
            Action::Collapsed => Permutation::identity(1),
        }
    }

    /// Image of a subgroup of the parent.
    pub fn image_of(&self, h: &PermGroup) -> PermGroup {
        let gens = h.generators().iter().map(|g| self.image(g)).collect();
        PermGroup::with_degree(self.group.degree(), gens).expect("quotient degree")
    }
}

impl PermGroup {
    /// `self/n` for a normal subgroup `n`: the action on the orbits of `n`
    /// when that action has kernel exactly `n`, otherwise right
    /// multiplication on the cosets of `n`.
    pub fn block_quotient(&self, n: &PermGroup) -> Result<BlockQuotient> {
        if n.degree() != self.degree() {
            return Err(Error::DegreeMismatch(self.degree(), n.degree()));
        }
        if !n.is_normal_in(self) {
            return Err(if n.is_subgroup_of(self) {
                Error::NotNormal
            } else {
                Error::NotSubgroup
            });
        }
        if n.order() == self.order() {
            return Ok(BlockQuotient {
                group: PermGroup::trivial(1),
                kernel: n.clone(),
                action: Action::Collapsed,
            });
        }

        let mut block_of = vec![0u32; self.degree()];
        let orbits = n.orbits();
        for (i, orbit) in orbits.iter().enumerate() {
            for &x in orbit {
                block_of[x] = i as u32;
            }
        }
        let mut quotient = BlockQuotient {
            group: PermGroup::trivial(orbits.len()),
            kernel: n.clone(),
            action: Action::Blocks { block_of },
        };
        let gens: Vec<Permutation> = self.generators().iter().map(|g| quotient.image(g)).collect();
        quotient.group = PermGroup::with_degree(orbits.len(), gens)?;
        if quotient.group.order() * n.order() == self.order() {
            return Ok(quotient);
        }

        self.check_cap(element_cap())?;
        let order = self.order() as usize;
        let mut coset_of_rank = vec![u32::MAX; order];
        let mut reps = Vec::new();
        for r in 0..order {
            if coset_of_rank[r] != u32::MAX {
                continue;
            }
            let g = self.unrank(r as u64);
            let label = reps.len() as u32;
            for x in n.iter() {
                let rank = self.rank(&x.then(&g)).expect("coset element");
                coset_of_rank[rank as usize] = label;
            }
            reps.push(g);
        }
        let degree = reps.len();
        let mut quotient = BlockQuotient {
            group: PermGroup::trivial(degree),
            kernel: n.clone(),
            action: Action::Cosets {
                parent: self.clone(),
                coset_of_rank,
                reps,
            },
        };
        let gens: Vec<Permutation> = self.generators().iter().map(|g| quotient.image(g)).collect();
        quotient.group = PermGroup::with_degree(degree, gens)?;
        Ok(quotient)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_kernel_gives_a_copy() {
        let s4 = PermGroup::symmetric(4);
        let q = s4.block_quotient(&PermGroup::trivial(4)).unwrap();
        assert!(q.is_block_action());
        assert!(q.group().same_group(&s4));
    }

    #[test]
    fn whole_group_collapses_to_one_point() {
        let s4 = PermGroup::symmetric(4);
        let q = s4.block_quotient(&s4).unwrap();
        assert_eq!(q.group().degree(), 1);
        assert_eq!(q.group().order(), 1);
    }

    #[test]
    fn transitive_kernel_falls_back_to_cosets() {
        // V₄ is transitive on 4 points, so its orbits carry no information.
        let s4 = PermGroup::symmetric(4);
        let v4 = PermGroup::new(vec![
            Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(),
            Permutation::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap(),
        ])
        .unwrap();
        let q = s4.block_quotient(&v4).unwrap();
        assert!(!q.is_block_action());
        assert_eq!(q.group().degree(), 6);
        assert_eq!(q.group().order(), 6);
        for g in v4.iter() {
            assert!(q.image(&g).is_identity());
        }
    }

    #[test]
    fn rejects_non_normal_kernel() {
        let s3 = PermGroup::symmetric(3);
        let t = PermGroup::new(vec![Permutation::from_cycles(3, &[&[0, 1]]).unwrap()]).unwrap();
        assert_eq!(s3.block_quotient(&t).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn image_is_a_homomorphism() {
        let s4 = PermGroup::symmetric(4);
        let v4 = s4.minimal_normal_subgroups().unwrap().remove(0);
        let q = s4.block_quotient(&v4).unwrap();
        let elems = s4.elements().unwrap();
        for a in elems.iter().step_by(5) {
            for b in elems.iter().step_by(7) {
                assert_eq!(q.image(&a.then(b)), q.image(a).then(&q.image(b)));
            }
        }
    }
}
