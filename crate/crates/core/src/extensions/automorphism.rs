use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::cocycles::Cocycle;
use super::extension::Extension;
use crate::error::{Error, Result};
use crate::permcore::{element_cap, PermGroup, Permutation, RegularRep};
use crate::presentations::Word;

const UNSET: u32 = u32::MAX;

/// An endomorphism given by the images of a group's generators, in
/// generator order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismSpec {
    generator_images: Vec<Permutation>,
}

impl AutomorphismSpec {
    pub fn new(generator_images: Vec<Permutation>) -> Self {
        Self { generator_images }
    }

    pub fn generator_images(&self) -> &[Permutation] {
        &self.generator_images
    }

    pub fn is_identity_on(&self, g: &PermGroup) -> bool {
        self.generator_images == g.generators()
    }
}

/// Some `c ∈ G` with `s^c = α(s)` for every generator `s`, if there is one.
pub fn inner_witness(g: &PermGroup, alpha: &AutomorphismSpec) -> Result<Option<Permutation>> {
    check_images(g, alpha)?;
    g.check_cap(element_cap())?;
    Ok(g.iter().find(|c| {
        g.generators()
            .iter()
            .zip(alpha.generator_images())
            .all(|(s, a)| s.conjugate_by(c) == *a)
    }))
}

fn check_images(g: &PermGroup, alpha: &AutomorphismSpec) -> Result<()> {
    if alpha.generator_images().len() != g.generators().len() {
        return Err(Error::Arity {
            index: alpha.generator_images().len(),
            ngens: g.generators().len(),
        });
    }
    for a in alpha.generator_images() {
        if !g.contains(a)? {
            return Err(Error::NotInGroup);
        }
    }
    Ok(())
}

/// The automorphism `vᵢ ↦ vᵢ`, `xⱼ ↦ xⱼ·δ(xⱼ)` of an extension. Verified to
/// satisfy the lifted relators, to be bijective, of order 2 and not inner.
pub fn alpha_automorphism(ext: &Extension, delta: &Cocycle) -> Result<AutomorphismSpec> {
    let d = ext.dim();
    if delta.values().len() != ext.lifts().len() {
        return Err(Error::Arity {
            index: delta.values().len(),
            ngens: ext.lifts().len(),
        });
    }
    let mut images: Vec<Permutation> = ext.module_generators().to_vec();
    for (x, v) in ext.lifts().iter().zip(delta.values()) {
        images.push(x.then(ext.module_element(v)));
    }
    let lifted = ext.lifted_presentation()?;
    for (k, r) in lifted.relators().iter().enumerate() {
        if !r.evaluate(&images)?.is_identity() {
            return Err(Error::RelationFailed(format!("lifted relator {k}")));
        }
    }
    if PermGroup::with_degree(ext.group().degree(), images.clone())?.order() != ext.group().order() {
        return Err(Error::NotBijective);
    }
    // α applied to the image words xⱼ·m(δ(xⱼ)) must give back xⱼ
    for (j, v) in delta.values().iter().enumerate() {
        let word = &Word::gen(d + j) * &super::module::module_word(v);
        if word.evaluate(&images)? != ext.lifts()[j] {
            return Err(Error::NotAnInvolution);
        }
    }
    let alpha = AutomorphismSpec::new(images);
    if inner_witness(ext.group(), &alpha)?.is_some() {
        return Err(Error::InnerAutomorphism);
    }
    Ok(alpha)
}

/// `α` on every element of `reg.source()`, indexed by rank. Built by walking
/// the Cayley graph, which also checks that `α` is a well-defined
/// homomorphism.
pub fn automorphism_table(reg: &RegularRep, alpha: &AutomorphismSpec) -> Result<Vec<u32>> {
    let g = reg.source();
    check_images(g, alpha)?;
    let n = g.order() as usize;
    let elements = reg.elements();
    let mut table = vec![UNSET; n];
    table[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(r) = queue.pop_front() {
        let x = &elements[r];
        let ax = &elements[table[r] as usize];
        for (s, a) in g.generators().iter().zip(alpha.generator_images()) {
            let xs = g.rank(&x.then(s)).expect("closed") as usize;
            let axs = g.rank(&ax.then(a)).expect("closed") as u32;
            if table[xs] == UNSET {
                table[xs] = axs;
                queue.push_back(xs);
            } else if table[xs] != axs {
                return Err(Error::RelationFailed("not a homomorphism".into()));
            }
        }
    }
    let mut seen = vec![false; n];
    for &t in &table {
        if t == UNSET || std::mem::replace(&mut seen[t as usize], true) {
            return Err(Error::NotBijective);
        }
    }
    Ok(table)
}

/// `G⟨α⟩` acting on the elements of `G`: right translations together with
/// `x ↦ α(x)`.
#[derive(Clone, Debug)]
pub struct AutExtension {
    regular: RegularRep,
    table: Vec<u32>,
    alpha: Permutation,
    group: PermGroup,
}

impl AutExtension {
    pub fn regular(&self) -> &RegularRep {
        &self.regular
    }

    /// The right-regular copy of `G`, normal in [`AutExtension::group`].
    pub fn base(&self) -> &PermGroup {
        self.regular.group()
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn alpha_permutation(&self) -> &Permutation {
        &self.alpha
    }

    /// `α(g)` for `g` in the source group.
    pub fn apply(&self, g: &Permutation) -> Option<Permutation> {
        let r = self.regular.point_of(g)?;
        Some(self.regular.elements()[self.table[r] as usize].clone())
    }

    /// Whether `g⁻¹·α(g)` lies in `n` for every `g` in the source group.
    pub fn acts_trivially_modulo(&self, n: &PermGroup) -> bool {
        self.regular
            .elements()
            .iter()
            .zip(&self.table)
            .all(|(g, &a)| n.is_member(&g.inverse().then(&self.regular.elements()[a as usize])))
    }

    pub fn fixes_pointwise(&self, n: &PermGroup) -> bool {
        n.iter().all(|v| self.apply(&v).as_ref() == Some(&v))
    }

    /// Checks `α(gh) = α(g)α(h)` on random pairs.
    pub fn spot_check_homomorphism(&self, samples: usize, seed: u64) -> bool {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let elements = self.regular.elements();
        let g = self.regular.source();
        (0..samples).all(|_| {
            let (i, j) = (rng.gen_range(0..elements.len()), rng.gen_range(0..elements.len()));
            let gh = g.rank(&elements[i].then(&elements[j])).expect("closed") as usize;
            let lhs = &elements[self.table[gh] as usize];
            let rhs = elements[self.table[i] as usize].then(&elements[self.table[j] as usize]);
            *lhs == rhs
        })
    }
}

pub fn extend_by_automorphism(g: &PermGroup, alpha: &AutomorphismSpec) -> Result<AutExtension> {
    if inner_witness(g, alpha)?.is_some() {
        return Err(Error::InnerAutomorphism);
    }
    let regular = RegularRep::new(g)?;
    let table = automorphism_table(&regular, alpha)?;
    if table.iter().enumerate().any(|(r, &a)| table[a as usize] as usize != r) {
        return Err(Error::NotAnInvolution);
    }
    let alpha_perm = Permutation::from_images(table.iter().map(|&t| t as usize).collect())?;
    let mut gens = regular.group().generators().to_vec();
    gens.push(alpha_perm.clone());
    let group = PermGroup::new(gens)?;
    if group.order() != 2 * g.order() {
        return Err(Error::Hypothesis(format!(
            "G⟨α⟩ has order {}, not {}",
            group.order(),
            2 * g.order()
        )));
    }
    Ok(AutExtension {
        regular,
        table,
        alpha: alpha_perm,
        group,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inner_automorphisms_are_detected() {
        let g = PermGroup::symmetric(4);
        let c = Permutation::from_cycles(4, &[&[0, 2, 3]]).unwrap();
        let alpha = AutomorphismSpec::new(g.generators().iter().map(|s| s.conjugate_by(&c)).collect());
        assert_eq!(inner_witness(&g, &alpha).unwrap(), Some(c));
        assert_eq!(
            extend_by_automorphism(&g, &alpha).unwrap_err(),
            Error::InnerAutomorphism
        );
        let id = AutomorphismSpec::new(g.generators().to_vec());
        assert!(inner_witness(&g, &id).unwrap().unwrap().is_identity());
    }

    #[test]
    fn outer_involution_of_cyclic_group() {
        // inversion on C₅ is not inner since C₅ is abelian
        let g = PermGroup::cyclic(5);
        let alpha = AutomorphismSpec::new(vec![g.generators()[0].inverse()]);
        let ext = extend_by_automorphism(&g, &alpha).unwrap();
        assert_eq!(ext.group().order(), 10);
        assert!(ext.base().is_normal_in(ext.group()));
        assert!(ext.spot_check_homomorphism(200, 7));
        for s in g.generators() {
            let conj = ext.regular().embed(s).unwrap().conjugate_by(ext.alpha_permutation());
            assert_eq!(conj, ext.regular().embed(&ext.apply(s).unwrap()).unwrap());
        }
    }

    #[test]
    fn non_homomorphisms_are_rejected() {
        let g = PermGroup::symmetric(3);
        let reg = RegularRep::new(&g).unwrap();
        // a transposition cannot go to a 3-cycle
        let three = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let bad = AutomorphismSpec::new(vec![three.clone(), three]);
        assert!(automorphism_table(&reg, &bad).is_err());
    }
}
