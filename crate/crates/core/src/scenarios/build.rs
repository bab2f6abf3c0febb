use std::collections::BTreeSet;

use super::{Recorder, RunConfig};
use crate::error::{Error, Result};
use crate::extensions::{
    alpha_automorphism, count_automorphisms_bruteforce, enumerate_extensions,
    extend_by_automorphism, inner_witness, presented_order, solve_1cocycles, standard_extensions,
    Cocycle, Extension, ModuleAction, DEFAULT_MAX_COSETS,
};
use crate::f2lin::{find_presentation_pair, BitVector};
use crate::permcore::PermGroup;
use crate::presentations::{todd_coxeter, Presentation, Word};

const HOMOMORPHISM_SAMPLES: usize = 10_000;

pub(super) fn setup() -> Result<(Presentation, ModuleAction)> {
    let p = Presentation::gl32();
    let act = ModuleAction::natural(&p)?;
    Ok((p, act))
}

/// All `2^(d·n)` lift changes `xⱼ ↦ m(wⱼ)·xⱼ`.
fn lift_changes(d: usize, n: usize) -> impl Iterator<Item = Vec<BitVector>> {
    (0..1u64 << (d * n)).map(move |c| {
        (0..n)
            .map(|j| BitVector::new(d, c >> (d * (n - 1 - j))))
            .collect()
    })
}

pub(super) fn extensions_build(_: &RunConfig, rec: &mut Recorder) -> Result<()> {
    let (p, act) = setup()?;
    rec.eq("cosets of the trivial subgroup", 168, presented_order(&p, DEFAULT_MAX_COSETS)?);
    let over_a = todd_coxeter(&p, &[Word::gen(0)], DEFAULT_MAX_COSETS)?;
    rec.eq("cosets of <a>", 84, over_a.ncosets() as u64);
    let (a, b) = find_presentation_pair(p.relators())?;
    rec.holds("GL(3,2) pair satisfies the relators", p.is_satisfied_by(&[a, b])?);

    let found = enumerate_extensions(&p, &act, DEFAULT_MAX_COSETS)?;
    let nrel = p.relators().len() as u32;
    rec.eq("tail vectors swept", 4096u64, 1u64 << (act.dim() as u32 * nrel));

    // consistent tails: the orbit of each class under the 2^(dn) lift changes
    // has size 2^(dn - dim Z¹); the classes are counted by |H²| = 2
    let z1 = solve_1cocycles(&p, &act)?.cocycle_dim();
    let orbit = 1u64 << (act.dim() * p.ngens() - z1);
    rec.eq("consistent tail vectors", 2 * orbit, found.len() as u64);
    let split = found.iter().filter(|e| e.split).count() as u64;
    rec.at_least("split extensions", 1, split);
    rec.at_least("nonsplit extensions", 1, found.len() as u64 - split);
    rec.eq("split tail vectors", orbit, split);
    rec.holds(
        "every consistent extension has order 1344",
        found.iter().all(|e| e.extension.group().order() == 1344),
    );

    let nonsplit_lifts: Vec<u64> = found
        .iter()
        .filter(|e| !e.split)
        .map(|e| e.extension.complement_lifts().len() as u64)
        .collect();
    rec.eq(
        "complement lifts of each nonsplit extension",
        vec![0u64; nonsplit_lifts.len()],
        nonsplit_lifts,
    );
    rec.holds(
        "lift choices per extension",
        found.iter().all(|e| e.extension.lift_choices() == 64),
    );

    let first_split = found
        .iter()
        .find(|e| e.split)
        .ok_or_else(|| Error::Hypothesis("no split extension".into()))?;
    let complement = PermGroup::new(first_split.extension.complement_lifts()[0].clone())?;
    rec.eq("|complement|", 168, complement.order());
    let meet = first_split
        .extension
        .group()
        .intersection(&complement, first_split.extension.module())?;
    rec.eq("|complement meet V|", 1, meet.order());

    let consistent: BTreeSet<u64> = found.iter().map(|e| e.tails.index()).collect();
    let mut stays = true;
    for e in &found {
        for w in lift_changes(act.dim(), p.ngens()) {
            let t = e.extension.tails_for_lifts(&w)?;
            stays &= consistent.contains(&t.index());
        }
    }
    rec.holds("lift changes keep tails consistent", stays);
    Ok(())
}

fn check_alpha(name: &str, ext: &Extension, rec: &mut Recorder) -> Result<()> {
    let space = solve_1cocycles(ext.presentation(), ext.action())?;
    let delta = space
        .outer_cocycle()
        .ok_or_else(|| Error::Hypothesis("every 1-cocycle is a coboundary".into()))?;
    let alpha = alpha_automorphism(ext, &delta)?;
    let g = ext.group();
    rec.holds(&format!("{name}: alpha not inner"), inner_witness(g, &alpha)?.is_none());
    let aut = extend_by_automorphism(g, &alpha)?;
    rec.eq(&format!("{name}: order of alpha"), 2, aut.alpha_permutation().order());
    rec.holds(&format!("{name}: alpha fixes V pointwise"), aut.fixes_pointwise(ext.module()));
    rec.holds(
        &format!("{name}: alpha is the identity on G/V"),
        aut.acts_trivially_modulo(ext.module()),
    );
    rec.eq(&format!("{name}: |G<alpha>|"), 2688, aut.group().order());
    rec.holds(
        &format!("{name}: G normal in G<alpha>"),
        aut.base().is_normal_in(aut.group()),
    );
    rec.holds(
        &format!("{name}: alpha multiplicative on {HOMOMORPHISM_SAMPLES} random pairs"),
        aut.spot_check_homomorphism(HOMOMORPHISM_SAMPLES, 1),
    );
    let mut conj = true;
    for s in g.generators() {
        let image = aut.apply(s).ok_or(Error::NotInGroup)?;
        conj &= aut.regular().embed(s)?.conjugate_by(aut.alpha_permutation())
            == aut.regular().embed(&image)?;
    }
    rec.holds(&format!("{name}: conjugation by alpha realizes alpha"), conj);

    let zero = Cocycle::zero(ext.lifts().len(), ext.dim());
    rec.holds(
        &format!("{name}: zero cocycle gives an inner map"),
        matches!(alpha_automorphism(ext, &zero), Err(Error::InnerAutomorphism)),
    );
    let cob = Cocycle::coboundary(ext.action(), &BitVector::new(ext.dim(), 1));
    rec.holds(
        &format!("{name}: coboundary gives an inner map"),
        matches!(alpha_automorphism(ext, &cob), Err(Error::InnerAutomorphism)),
    );
    Ok(())
}

pub(super) fn alpha_aut(config: &RunConfig, rec: &mut Recorder) -> Result<()> {
    let (p, act) = setup()?;
    let space = solve_1cocycles(&p, &act)?;
    rec.eq("dim Z1", 4, space.cocycle_dim() as u64);
    rec.eq("dim B1", 3, space.coboundary_dim() as u64);
    rec.eq("dim H1", 1, space.h1_dim() as u64);

    let (split, nonsplit) = standard_extensions(&p, &act)?;
    for (name, ext) in [("split", &split), ("nonsplit", &nonsplit)] {
        check_alpha(name, ext, rec)?;
    }
    if config.deep {
        for (name, ext) in [("split", &split), ("nonsplit", &nonsplit)] {
            let lifted = ext.lifted_presentation()?;
            let count = count_automorphisms_bruteforce(ext.group(), &lifted, config.deadline)?;
            rec.eq(&format!("{name}: |Aut(G)| by exhaustive search"), 2688, count);
        }
    }
    Ok(())
}
