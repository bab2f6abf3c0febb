use std::collections::BTreeSet;

use super::groups::{gl32_on_points, line_stabilizer, pgl27, plane_stabilizer};
use super::{pi23, Recorder, RunConfig};
use crate::error::Result;
use crate::extensions::{wreath_base, wreath_embed, wreath_regular};
use crate::permcore::{PermGroup, Permutation};
use crate::pisub::{
    element_key, is_pi_maximal, maximal_pi_overgroups, verify_submaximality_witness,
    wielandt_hartley_check, PrimeSet, SubmaximalCertificate,
};

/// The certified order-8 subgroup of PSL₂(7).
pub(super) fn pgl27_certificates() -> Result<Vec<(String, SubmaximalCertificate)>> {
    let pi = pi23();
    let (pgl, psl) = pgl27()?;
    let h = pgl.sylow(2)?;
    let cert = verify_submaximality_witness(&pgl, &psl, &h, &pi)?;
    Ok(vec![("PSL(2,7) meet Sylow-2 of PGL(2,7)".into(), cert)])
}

pub(super) fn pgl27_intro(_: &RunConfig, rec: &mut Recorder) -> Result<()> {
    let pi = pi23();
    let (pgl, psl) = pgl27()?;
    rec.eq("|PGL(2,7)|", 336, pgl.order());
    rec.eq("|PSL(2,7)|", 168, psl.order());
    rec.holds("PSL(2,7) normal in PGL(2,7)", psl.is_normal_in(&pgl));

    let h = pgl.sylow(2)?;
    rec.eq("|H| for H Sylow-2 of PGL(2,7)", 16, h.order());
    rec.holds("H pi-maximal in PGL(2,7)", is_pi_maximal(&pgl, &h, &pi)?.is_maximal());

    let cert = verify_submaximality_witness(&pgl, &psl, &h, &pi)?;
    let meet = &cert.subgroup;
    rec.eq("|H meet PSL(2,7)|", 8, meet.order());
    let in_psl = is_pi_maximal(&psl, meet, &pi)?;
    rec.holds("H meet PSL(2,7) not pi-maximal in PSL(2,7)", !in_psl.is_maximal());
    rec.eq(
        "order of the witness overgroup",
        24,
        in_psl.witness().map_or(0, PermGroup::order),
    );
    let leaves = maximal_pi_overgroups(&psl, meet, &pi)?;
    let orders: Vec<u64> = leaves.iter().map(PermGroup::order).collect();
    rec.eq("pi-maximal overgroups in PSL(2,7) (orders)", vec![24u64, 24], orders);
    rec.holds(
        "H meet PSL(2,7) satisfies Wielandt-Hartley",
        wielandt_hartley_check(&psl, meet, &pi)?,
    );
    Ok(())
}

struct Wreath {
    w: PermGroup,
    base: PermGroup,
    k1: PermGroup,
    k2: PermGroup,
}

fn wreath() -> Result<Wreath> {
    let l7 = gl32_on_points()?;
    let w = wreath_regular(&l7, 2)?;
    let base = wreath_base(&l7, 2)?;
    let line = line_stabilizer(&l7)?;
    let plane = plane_stabilizer(&l7)?;
    let mut k1_gens = wreath_embed(&line, 0, 2)?.generators().to_vec();
    k1_gens.extend_from_slice(wreath_embed(&plane, 1, 2)?.generators());
    let k1 = PermGroup::with_degree(14, k1_gens)?;
    let swap = Permutation::from_images((0..14).map(|p| (p + 7) % 14).collect())?;
    let mut k2_gens = wreath_embed(&line, 0, 2)?.generators().to_vec();
    k2_gens.extend_from_slice(wreath_embed(&line, 1, 2)?.generators());
    k2_gens.push(swap);
    let k2 = PermGroup::with_degree(14, k2_gens)?;
    Ok(Wreath { w, base, k1, k2 })
}

pub(super) fn wreath_certificates() -> Result<Vec<(String, SubmaximalCertificate)>> {
    let pi = pi23();
    let wr = wreath()?;
    Ok(vec![
        (
            "line x plane stabilizer in GL(3,2) wr C2".into(),
            verify_submaximality_witness(&wr.w, &wr.w, &wr.k1, &pi)?,
        ),
        (
            "P x P : C2 in GL(3,2) wr C2".into(),
            verify_submaximality_witness(&wr.w, &wr.w, &wr.k2, &pi)?,
        ),
    ])
}

pub(super) fn wreath_remark(_: &RunConfig, rec: &mut Recorder) -> Result<()> {
    let pi = pi23();
    let wr = wreath()?;
    rec.eq("|GL(3,2) wr C2|", 56448, wr.w.order());
    rec.holds("base group normal", wr.base.is_normal_in(&wr.w));
    rec.eq("|K1|", 576, wr.k1.order());
    rec.holds("K1 inside the base group", wr.k1.is_subgroup_of(&wr.base));
    rec.holds("K1 pi-maximal in the wreath product", is_pi_maximal(&wr.w, &wr.k1, &pi)?.is_maximal());

    let proj = wr.w.block_quotient(&wr.base)?;
    rec.eq("|C2| (projection image)", 2, proj.group().order());
    let image = proj.image_of(&wr.k1);
    rec.eq("|image of K1 in C2|", 1, image.order());
    rec.holds(
        "image of K1 not pi-maximal in C2",
        !is_pi_maximal(proj.group(), &image, &pi)?.is_maximal(),
    );

    rec.eq("|K2|", 1152, wr.k2.order());
    rec.holds("K2 pi-maximal in the wreath product", is_pi_maximal(&wr.w, &wr.k2, &pi)?.is_maximal());
    rec.eq("|image of K2 in C2|", 2, proj.image_of(&wr.k2).order());
    Ok(())
}

/// Every π-maximal subgroup of `g` containing the normal π-subgroup `n`
/// maps to a π-maximal subgroup of `g/n`. Returns (checked, passed).
fn star_check(g: &PermGroup, n: &PermGroup, pi: &PrimeSet) -> Result<(u64, u64)> {
    let q = g.block_quotient(n)?;
    let leaves = maximal_pi_overgroups(g, n, pi)?;
    let mut passed = 0;
    for k in &leaves {
        if is_pi_maximal(q.group(), &q.image_of(k), pi)?.is_maximal() {
            passed += 1;
        }
    }
    Ok((leaves.len() as u64, passed))
}

/// Whether every π-maximal subgroup of `g/n` is the image of a π-maximal
/// subgroup of `g`.
fn double_star_check(g: &PermGroup, n: &PermGroup, pi: &PrimeSet) -> Result<bool> {
    let q = g.block_quotient(n)?;
    let trivial_q = PermGroup::trivial(q.group().degree());
    let below: BTreeSet<Vec<u64>> = maximal_pi_overgroups(q.group(), &trivial_q, pi)?
        .iter()
        .map(|h| element_key(q.group(), h))
        .collect::<Result<_>>()?;
    let above: BTreeSet<Vec<u64>> = maximal_pi_overgroups(g, &PermGroup::trivial(g.degree()), pi)?
        .iter()
        .map(|k| element_key(q.group(), &q.image_of(k)))
        .collect::<Result<_>>()?;
    Ok(below.is_subset(&above))
}

pub(super) fn star_properties(_: &RunConfig, rec: &mut Recorder) -> Result<()> {
    let s4 = PermGroup::symmetric(4);
    let v4 = PermGroup::new(vec![
        Permutation::from_cycles(4, &[&[0, 1], &[2, 3]])?,
        Permutation::from_cycles(4, &[&[0, 2], &[1, 3]])?,
    ])?;
    rec.eq("|S4/V4|", 6, s4.block_quotient(&v4)?.group().order());
    for primes in [&[2u64][..], &[2, 3]] {
        let pi = PrimeSet::new(primes)?;
        let (n, ok) = star_check(&s4, &v4, &pi)?;
        rec.at_least(&format!("(*) S4 over V4, pi = {pi}: overgroups checked"), 1, n);
        rec.eq(&format!("(*) S4 over V4, pi = {pi}: images pi-maximal"), n, ok);
        rec.holds(
            &format!("(**) S4 -> S3, pi = {pi}: every pi-maximal subgroup is an image"),
            double_star_check(&s4, &v4, &pi)?,
        );
    }

    let (g, v) = affine_gl32()?;
    let pi = pi23();
    let (n, ok) = star_check(&g, &v, &pi)?;
    rec.at_least("(*) F2^3:GL(3,2) over V, pi = {2,3}: overgroups checked", 1, n);
    rec.eq("(*) F2^3:GL(3,2) over V, pi = {2,3}: images pi-maximal", n, ok);
    Ok(())
}

fn affine_gl32() -> Result<(PermGroup, PermGroup)> {
    use crate::extensions::{affine_perm_group, translation, ModuleAction};
    use crate::presentations::Presentation;
    let act = ModuleAction::natural(&Presentation::gl32())?;
    let g = affine_perm_group(act.matrices(), 3)?;
    let v = PermGroup::with_degree(8, (0..3).map(|i| translation(3, 1 << i)).collect())?;
    Ok((g, v))
}
