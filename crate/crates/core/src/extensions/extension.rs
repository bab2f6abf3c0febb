use rayon::prelude::*;

use super::module::{module_word, ModuleAction, TailVector};
use crate::error::{Error, Result};
use crate::f2lin::BitVector;
use crate::permcore::{PermGroup, Permutation};
use crate::presentations::{perm_rep_from_table, todd_coxeter, Presentation, Word};

/// Coset limit used when realizing extensions of `F₂³` by `GL₃(2)`.
pub const DEFAULT_MAX_COSETS: usize = 200_000;

/// Order of the group defined by `p`, by enumerating cosets of the trivial
/// subgroup.
pub fn presented_order(p: &Presentation, max_cosets: usize) -> Result<u64> {
    Ok(todd_coxeter(p, &[], max_cosets)?.ncosets() as u64)
}

/// Generators `v₀..v_{d-1}, x₀..x_{n-1}`; relators `vᵢ²`, `[vᵢ,vⱼ]`,
/// `xⱼ⁻¹vᵢxⱼ = vᵢ·act(xⱼ)` and `rₖ(x) = tₖ`.
pub fn lifted_presentation(
    p: &Presentation,
    act: &ModuleAction,
    t: &TailVector,
) -> Result<Presentation> {
    let d = act.dim();
    if t.len() != p.relators().len() || t.tails().iter().any(|v| v.dim() != d) {
        return Err(Error::ShapeMismatch(format!(
            "{} tails for {} relators",
            t.len(),
            p.relators().len()
        )));
    }
    act.check(p)?;
    let v = Word::gen;
    let x = |j: usize| Word::gen(d + j);
    let mut relators = Vec::new();
    for i in 0..d {
        relators.push(v(i).pow(2));
    }
    for i in 0..d {
        for j in i + 1..d {
            relators.push(Word::commutator(&v(i), &v(j)));
        }
    }
    for j in 0..p.ngens() {
        for i in 0..d {
            let image = BitVector::unit(d, i).mul_matrix(act.matrix(j));
            relators.push(&v(i).conjugated_by(&x(j)) * &module_word(&image).inverse());
        }
    }
    for (r, tail) in p.relators().iter().zip(t.tails()) {
        relators.push(&r.shifted(d) * &module_word(tail).inverse());
    }
    Presentation::new(d + p.ngens(), relators)
}

/// An extension of an elementary abelian 2-group `V` by a presented group,
/// with generators `[v₀.., x₀..]`: a basis of `V` followed by lifts of the
/// abstract generators.
#[derive(Clone, Debug)]
pub struct Extension {
    presentation: Presentation,
    action: ModuleAction,
    tails: TailVector,
    group: PermGroup,
    module: PermGroup,
    module_elements: Vec<Permutation>,
}

impl Extension {
    /// Wraps a concrete group. The lifts must satisfy the relators modulo the
    /// module and conjugate the module basis as `action` prescribes.
    pub fn from_generators(
        presentation: &Presentation,
        action: &ModuleAction,
        module_gens: Vec<Permutation>,
        lifts: Vec<Permutation>,
    ) -> Result<Self> {
        action.check(presentation)?;
        let quotient = presented_order(presentation, DEFAULT_MAX_COSETS)?;
        Self::assemble(presentation, action, module_gens, lifts, quotient)
    }

    fn assemble(
        presentation: &Presentation,
        action: &ModuleAction,
        module_gens: Vec<Permutation>,
        lifts: Vec<Permutation>,
        quotient_order: u64,
    ) -> Result<Self> {
        let d = action.dim();
        if module_gens.len() != d {
            return Err(Error::Arity {
                index: module_gens.len(),
                ngens: d,
            });
        }
        if lifts.len() != presentation.ngens() {
            return Err(Error::Arity {
                index: lifts.len(),
                ngens: presentation.ngens(),
            });
        }
        let mut gens = module_gens.clone();
        gens.extend(lifts.iter().cloned());
        let group = PermGroup::new(gens)?;
        let module = PermGroup::with_degree(group.degree(), module_gens.clone())?;

        if module.order() != 1 << d || !module.is_abelian() {
            return Err(Error::Hypothesis(format!(
                "module of order {} is not elementary abelian of rank {d}",
                module.order()
            )));
        }
        if module_gens.iter().any(|v| !v.then(v).is_identity()) {
            return Err(Error::Hypothesis("module generator of order > 2".into()));
        }
        if !module.is_normal_in(&group) {
            return Err(Error::NotNormal);
        }
        if group.order() != module.order() * quotient_order {
            return Err(Error::Hypothesis(format!(
                "order {} is not {} · {quotient_order}",
                group.order(),
                module.order()
            )));
        }

        let module_elements: Vec<Permutation> = BitVector::all(d)
            .map(|w| module_word(&w).evaluate(&module_gens))
            .collect::<Result<_>>()?;
        let mut ext = Self {
            presentation: presentation.clone(),
            action: action.clone(),
            tails: TailVector::zero(d, presentation.relators().len()),
            group,
            module,
            module_elements,
        };

        for (j, x) in lifts.iter().enumerate() {
            for (i, v) in module_gens.iter().enumerate() {
                let expected = BitVector::unit(d, i).mul_matrix(action.matrix(j));
                if v.conjugate_by(x) != *ext.module_element(&expected) {
                    return Err(Error::BadModuleAction(j));
                }
            }
        }
        let tails = presentation
            .relators()
            .iter()
            .enumerate()
            .map(|(k, r)| {
                let value = r.evaluate(&lifts)?;
                ext.module_vector(&value)
                    .ok_or_else(|| Error::RelationFailed(format!("relator {k} leaves the module")))
            })
            .collect::<Result<Vec<_>>>()?;
        ext.tails = TailVector::new(tails);
        Ok(ext)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn action(&self) -> &ModuleAction {
        &self.action
    }

    pub fn tails(&self) -> &TailVector {
        &self.tails
    }

    pub fn lifted_presentation(&self) -> Result<Presentation> {
        lifted_presentation(&self.presentation, &self.action, &self.tails)
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn module(&self) -> &PermGroup {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.action.dim()
    }

    pub fn module_generators(&self) -> &[Permutation] {
        &self.group.generators()[..self.dim()]
    }

    pub fn lifts(&self) -> &[Permutation] {
        &self.group.generators()[self.dim()..]
    }

    pub fn module_element(&self, w: &BitVector) -> &Permutation {
        &self.module_elements[w.bits() as usize]
    }

    /// Coordinates of `g` if it lies in the module.
    pub fn module_vector(&self, g: &Permutation) -> Option<BitVector> {
        self.module_elements
            .iter()
            .position(|m| m == g)
            .map(|i| BitVector::new(self.dim(), i as u64))
    }

    /// Lift choices `x̃ⱼ = m(wⱼ)·xⱼ` on which every relator of the presented
    /// group evaluates to the identity, in lexicographic order of
    /// `(w₀, w₁, ..)`. Each yields a complement.
    pub fn complement_lifts(&self) -> Vec<Vec<Permutation>> {
        let d = self.dim();
        let n = self.presentation.ngens();
        let total = 1u64 << (d * n);
        (0..total)
            .filter_map(|c| {
                let lifts: Vec<Permutation> = self
                    .lifts()
                    .iter()
                    .enumerate()
                    .map(|(j, x)| {
                        let w = BitVector::new(d, c >> (d * (n - 1 - j)));
                        self.module_element(&w).then(x)
                    })
                    .collect();
                self.presentation
                    .is_satisfied_by(&lifts)
                    .expect("arity checked on construction")
                    .then_some(lifts)
            })
            .collect()
    }

    /// Tails of the relators at the lifts `m(wⱼ)·xⱼ`.
    pub fn tails_for_lifts(&self, w: &[BitVector]) -> Result<TailVector> {
        if w.len() != self.lifts().len() {
            return Err(Error::Arity {
                index: w.len(),
                ngens: self.lifts().len(),
            });
        }
        let lifts: Vec<Permutation> = self
            .lifts()
            .iter()
            .zip(w)
            .map(|(x, v)| self.module_element(v).then(x))
            .collect();
        let tails = self
            .presentation
            .relators()
            .iter()
            .enumerate()
            .map(|(k, r)| {
                self.module_vector(&r.evaluate(&lifts)?)
                    .ok_or_else(|| Error::RelationFailed(format!("relator {k} leaves the module")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TailVector::new(tails))
    }

    pub fn has_complement_lift(&self) -> bool {
        !self.complement_lifts().is_empty()
    }

    pub fn lift_choices(&self) -> u64 {
        1 << (self.dim() * self.presentation.ngens())
    }
}

/// Result of realizing a tail vector.
#[derive(Clone, Debug)]
pub enum ExtensionOutcome {
    Consistent(Box<Extension>),
    /// The enumeration closed with fewer cosets than `|V|·|L|`.
    Inconsistent { cosets: usize },
}

impl ExtensionOutcome {
    pub fn into_extension(self) -> Option<Extension> {
        match self {
            Self::Consistent(e) => Some(*e),
            Self::Inconsistent { .. } => None,
        }
    }
}

/// Realizes the extension with tails `t` as a regular permutation group via
/// coset enumeration over the trivial subgroup.
pub fn extension_by_tails(
    p: &Presentation,
    act: &ModuleAction,
    t: &TailVector,
    max_cosets: usize,
) -> Result<ExtensionOutcome> {
    let quotient = presented_order(p, max_cosets)?;
    realize(p, act, t, quotient, max_cosets)
}

fn realize(
    p: &Presentation,
    act: &ModuleAction,
    t: &TailVector,
    quotient_order: u64,
    max_cosets: usize,
) -> Result<ExtensionOutcome> {
    let lifted = lifted_presentation(p, act, t)?;
    let table = todd_coxeter(&lifted, &[], max_cosets)?;
    let expected = (1u64 << act.dim()) * quotient_order;
    if table.ncosets() as u64 != expected {
        return Ok(ExtensionOutcome::Inconsistent {
            cosets: table.ncosets(),
        });
    }
    let mut perms = perm_rep_from_table(&table)?;
    let lifts = perms.split_off(act.dim());
    let ext = Extension::assemble(p, act, perms, lifts, quotient_order)?;
    if ext.tails() != t {
        return Err(Error::RelationFailed("realized tails differ".into()));
    }
    Ok(ExtensionOutcome::Consistent(Box::new(ext)))
}

/// A consistent tail vector with its extension.
#[derive(Clone, Debug)]
pub struct EnumeratedExtension {
    pub tails: TailVector,
    pub extension: Extension,
    pub split: bool,
}

/// Sweeps all `2^(d·relators)` tail vectors in lexicographic order and keeps
/// the consistent ones.
pub fn enumerate_extensions(
    p: &Presentation,
    act: &ModuleAction,
    max_cosets: usize,
) -> Result<Vec<EnumeratedExtension>> {
    let bits = act.dim() * p.relators().len();
    if bits > 20 {
        return Err(Error::InvalidArgument(format!("{bits}-bit tail space is too large")));
    }
    act.check(p)?;
    let quotient = presented_order(p, max_cosets)?;
    let nrel = p.relators().len();
    let found = (0..1u64 << bits)
        .into_par_iter()
        .map(|i| {
            let t = TailVector::from_index(act.dim(), nrel, i);
            realize(p, act, &t, quotient, max_cosets).map(|o| o.into_extension())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(found
        .into_iter()
        .flatten()
        .map(|extension| EnumeratedExtension {
            tails: extension.tails().clone(),
            split: extension.has_complement_lift(),
            extension,
        })
        .collect())
}

/// The split extension (zero tails) and the first nonsplit consistent
/// extension in lexicographic tail order.
pub fn standard_extensions(p: &Presentation, act: &ModuleAction) -> Result<(Extension, Extension)> {
    let quotient = presented_order(p, DEFAULT_MAX_COSETS)?;
    let nrel = p.relators().len();
    let zero = TailVector::zero(act.dim(), nrel);
    let split = realize(p, act, &zero, quotient, DEFAULT_MAX_COSETS)?
        .into_extension()
        .ok_or_else(|| Error::Hypothesis("zero tails are inconsistent".into()))?;
    for i in 1..1u64 << (act.dim() * nrel) {
        let t = TailVector::from_index(act.dim(), nrel, i);
        if let Some(ext) = realize(p, act, &t, quotient, DEFAULT_MAX_COSETS)?.into_extension() {
            if !ext.has_complement_lift() {
                return Ok((split, ext));
            }
        }
    }
    Err(Error::Hypothesis("no nonsplit extension".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (Presentation, ModuleAction) {
        let p = Presentation::gl32();
        let act = ModuleAction::natural(&p).unwrap();
        (p, act)
    }

    #[test]
    fn zero_tails_give_the_split_extension() {
        let (p, act) = setup();
        let ext = extension_by_tails(&p, &act, &TailVector::zero(3, 4), DEFAULT_MAX_COSETS)
            .unwrap()
            .into_extension()
            .unwrap();
        assert_eq!(ext.group().order(), 1344);
        assert_eq!(ext.group().degree(), 1344);
        assert_eq!(ext.module().order(), 8);
        assert!(ext.has_complement_lift());
        let lifts = &ext.complement_lifts()[0];
        let complement = PermGroup::new(lifts.clone()).unwrap();
        assert_eq!(complement.order(), 168);
        assert_eq!(ext.group().intersection(&complement, ext.module()).unwrap().order(), 1);
    }

    #[test]
    fn an_inconsistent_tail_collapses() {
        let (p, act) = setup();
        let t = TailVector::from_index(3, 4, 1);
        match extension_by_tails(&p, &act, &t, DEFAULT_MAX_COSETS).unwrap() {
            ExtensionOutcome::Inconsistent { cosets } => assert!(cosets < 1344),
            ExtensionOutcome::Consistent(_) => panic!("tail 1 should be inconsistent"),
        }
    }

    #[test]
    fn lifted_presentation_shape() {
        let (p, act) = setup();
        let lp = lifted_presentation(&p, &act, &TailVector::zero(3, 4)).unwrap();
        assert_eq!(lp.ngens(), 5);
        assert_eq!(lp.relators().len(), 3 + 3 + 6 + 4);
        assert!(lifted_presentation(&p, &act, &TailVector::zero(3, 3)).is_err());
    }
}
