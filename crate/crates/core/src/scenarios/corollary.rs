use super::build::setup;
use super::groups::pgl27;
use super::{pi23, Recorder, RunConfig};
use crate::error::{Error, Result};
use crate::extensions::{dual_module_groups, standard_extensions, Extension};
use crate::permcore::{p_part, PermGroup, Permutation};
use crate::pisub::{
    corollary_check, is_pi_maximal, verify_submaximality_witness, CorollaryOptions,
    SubmaximalCertificate, SubmaximalityVerdict,
};

fn record_verdict(prefix: &str, v: &SubmaximalityVerdict, rec: &mut Recorder) {
    for a in &v.audit {
        rec.holds(&format!("{prefix}{}", a.name), a.passed);
    }
    for c in &v.candidates {
        let least = c.intersections.iter().map(PermGroup::order).min().unwrap_or(0);
        rec.at_least(
            &format!("{prefix}in {}: least |K meet G| over pi-maximal K above S", c.name),
            v.subject.order() + 1,
            least,
        );
    }
    rec.holds(&format!("{prefix}verdict: refuted in candidates"), v.is_refuted());
}

fn variant(split: bool) -> Result<Extension> {
    let (p, act) = setup()?;
    let (s, n) = standard_extensions(&p, &act)?;
    Ok(if split { s } else { n })
}

fn run_variant(split: bool, rec: &mut Recorder) -> Result<SubmaximalityVerdict> {
    let ext = variant(split)?;
    let v = corollary_check(&ext, &pi23(), None, &CorollaryOptions::default())?;
    record_verdict("", &v, rec);
    rec.eq("|S|", 64, v.subject.order());
    rec.eq(
        "order of a pi-overgroup of S in G",
        192,
        v.ambient_overgroup.as_ref().map_or(0, PermGroup::order),
    );
    Ok(v)
}

pub(super) fn corollary_split(_: &RunConfig, rec: &mut Recorder) -> Result<()> {
    run_variant(true, rec).map(drop)
}

pub(super) fn corollary_nonsplit(_: &RunConfig, rec: &mut Recorder) -> Result<()> {
    run_variant(false, rec).map(drop)
}

/// `K ∩ G` for every leaf of both corollary ascents.
pub(super) fn corollary_certificates() -> Result<Vec<(String, SubmaximalCertificate)>> {
    let pi = pi23();
    let mut out = Vec::new();
    for (name, split) in [("split", true), ("nonsplit", false)] {
        let v = corollary_check(&variant(split)?, &pi, None, &CorollaryOptions::default())?;
        for (i, c) in v.certificates(&pi)?.into_iter().enumerate() {
            out.push((format!("{name} extension: K meet G for leaf {i}"), c));
        }
    }
    Ok(out)
}

pub(super) fn example1_certificates() -> Result<Vec<(String, SubmaximalCertificate)>> {
    let d = dual_module_groups()?;
    let p = d.star.sylow(2)?;
    let cert = verify_submaximality_witness(&d.star, &d.group, &p, &pi23())?;
    Ok(vec![("Sylow-2 of (V+V*):GL(3,2)".into(), cert)])
}

pub(super) fn example1(_: &RunConfig, rec: &mut Recorder) -> Result<()> {
    let pi = pi23();
    let d = dual_module_groups()?;
    rec.eq("|G*|", 21504, d.star.order());
    rec.eq("degree of G*", 64, d.star.degree() as u64);
    rec.eq("|G|", 10752, d.group.order());
    rec.holds("G normal in G*", d.group.is_normal_in(&d.star));

    let p = d.star.sylow(2)?;
    rec.eq("|P| for P Sylow-2 of G*", 1024, p.order());
    rec.holds("P pi-maximal in G*", is_pi_maximal(&d.star, &p, &pi)?.is_maximal());
    let cert = verify_submaximality_witness(&d.star, &d.group, &p, &pi)?;
    let s = &cert.subgroup;
    rec.eq("|S| for S = G meet P", 512, s.order());
    rec.holds(
        "S is a Sylow 2-subgroup of G",
        s.order() == p_part(d.group.order(), 2),
    );

    let q = d.group.block_quotient(&d.dual)?;
    rec.holds("G/V* acts on the orbits of V*", q.is_block_action());
    rec.eq("degree of G/V*", 8, q.group().degree() as u64);
    rec.eq("|G/V*|", 1344, q.group().order());
    let s_bar = q.image_of(s);
    rec.eq("|image of S|", 64, s_bar.order());

    // translations by e0..e2 give V, the two matrix generators the lifts
    let module_gens: Vec<Permutation> = d.natural.generators().iter().map(|g| q.image(g)).collect();
    let lifts: Vec<Permutation> = d.group.generators()[6..8].iter().map(|g| q.image(g)).collect();
    let (pres, act) = setup()?;
    if act.matrices() != d.action.matrices() {
        return Err(Error::Hypothesis("module action mismatch".into()));
    }
    let ext = Extension::from_generators(&pres, &act, module_gens, lifts)?;
    rec.holds("quotient is F2^3:GL(3,2)", ext.group().same_group(q.group()));
    let v = corollary_check(&ext, &pi, Some(&s_bar), &CorollaryOptions::default())?;
    record_verdict("quotient: ", &v, rec);
    Ok(())
}

/// A generating pair of `l` satisfying the relators of the GL(3,2)
/// presentation.
fn presentation_pair(l: &PermGroup) -> Result<Option<(Permutation, Permutation)>> {
    let (pres, _) = setup()?;
    let elems = l.elements()?;
    let of_order = |k: u64| elems.iter().filter(move |x| x.order() == k);
    for a in of_order(2) {
        for b in of_order(3) {
            let pair = [a.clone(), b.clone()];
            if pres.is_satisfied_by(&pair)? && PermGroup::new(pair.to_vec())?.order() == l.order() {
                return Ok(Some((a.clone(), b.clone())));
            }
        }
    }
    Ok(None)
}

pub(super) fn example2(_: &RunConfig, rec: &mut Recorder) -> Result<()> {
    let pi = pi23();
    let ext = variant(false)?;
    let v = corollary_check(&ext, &pi, None, &CorollaryOptions::default())?;
    let g = ext.group();
    rec.holds("extension is nonsplit", !ext.has_complement_lift());

    let reg = crate::permcore::RegularRep::new(g)?;
    let v_reg = reg.embed_subgroup(ext.module())?;
    for c in &v.candidates {
        rec.holds(&format!("V normal in {}", c.name), v_reg.is_normal_in(&c.group));
        rec.holds(
            &format!("V inside every pi-maximal overgroup of S in {}", c.name),
            c.leaves.iter().all(|k| v_reg.is_subgroup_of(k)),
        );
    }
    let q = g.block_quotient(ext.module())?;
    let sylow_l = q.group().sylow(2)?;
    rec.eq("|Sylow-2 of G/V|", 8, sylow_l.order());
    rec.eq(
        "|X| for X containing V with XV/V Sylow-2",
        p_part(g.order(), 2),
        ext.module().order() * sylow_l.order(),
    );
    record_verdict("", &v, rec);

    let (pgl, psl) = pgl27()?;
    rec.holds(
        "PSL(2,7) has a pair satisfying the GL(3,2) presentation",
        presentation_pair(&psl)?.is_some(),
    );
    let cert = verify_submaximality_witness(&pgl, &psl, &pgl.sylow(2)?, &pi)?;
    rec.eq(
        "certified pi-submaximal Sylow-2 of PSL(2,7) (order)",
        p_part(psl.order(), 2),
        cert.subgroup.order(),
    );
    Ok(())
}
