use super::group::{element_cap, PermGroup};
use super::perm::Permutation;
use crate::error::{Error, Result};

/// Right-regular representation: the group acting on its own elements,
/// labelled by rank, via `x ↦ x·g`.
#[derive(Clone, Debug)]
pub struct RegularRep {
    source: PermGroup,
    elements: Vec<Permutation>,
    group: PermGroup,
}

impl RegularRep {
    pub fn new(source: &PermGroup) -> Result<Self> {
        source.check_cap(element_cap())?;
        let elements = source.elements()?;
        let mut rep = Self {
            source: source.clone(),
            elements,
            group: PermGroup::trivial(source.order() as usize),
        };
        let gens = source
            .generators()
            .iter()
            .map(|g| rep.embed(g))
            .collect::<Result<Vec<_>>>()?;
        rep.group = PermGroup::with_degree(source.order() as usize, gens)?;
        Ok(rep)
    }

    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    /// The regular copy; its generators are the images of the source's
    /// generators, in order.
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    /// Elements of the source indexed by point.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn point_of(&self, g: &Permutation) -> Option<usize> {
        self.source.rank(g).map(|r| r as usize)
    }

    /// Right translation by `g`.
    pub fn embed(&self, g: &Permutation) -> Result<Permutation> {
        if !self.source.contains(g)? {
            return Err(Error::NotInGroup);
        }
        let images = self
            .elements
            .iter()
            .map(|x| self.source.rank(&x.then(g)).expect("closed under product") as u32)
            .collect();
        Ok(Permutation::from_raw(images))
    }

    pub fn embed_subgroup(&self, h: &PermGroup) -> Result<PermGroup> {
        let gens = h
            .generators()
            .iter()
            .map(|g| self.embed(g))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::with_degree(self.group.degree(), gens)
    }

    /// Inverse of [`RegularRep::embed`] on the regular copy: the element whose
    /// right translation is `p`.
    pub fn element_of(&self, p: &Permutation) -> Permutation {
        // the identity has rank 0
        self.elements[p.image(0)].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_copy_is_regular() {
        let s4 = PermGroup::symmetric(4);
        let reg = RegularRep::new(&s4).unwrap();
        assert_eq!(reg.group().degree(), 24);
        assert_eq!(reg.group().order(), 24);
        assert_eq!(reg.group().orbits().len(), 1);
        let g = Permutation::from_cycles(4, &[&[0, 2, 3]]).unwrap();
        let h = Permutation::from_cycles(4, &[&[1, 3]]).unwrap();
        let p = reg.embed(&g).unwrap();
        assert_eq!(reg.element_of(&p), g);
        assert_eq!(
            reg.embed(&g.then(&h)).unwrap(),
            p.then(&reg.embed(&h).unwrap())
        );
    }
}
