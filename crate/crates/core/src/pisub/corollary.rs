use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::maximal::{element_key, is_pi_maximal, maximal_pi_overgroups};
use super::primes::{is_pi_group, PrimeSet};
use super::witness::{verify_submaximality_witness, SubmaximalCertificate};
use crate::error::{Error, Result};
use crate::extensions::{
    alpha_automorphism, extend_by_automorphism, find_outer_involution, solve_1cocycles,
    AutExtension, Extension,
};
use crate::permcore::{p_part, PermGroup, Permutation};

/// Trusted statement: the subnormal-embedding reduction.
pub const FACT_EMBEDDING: &str = "embedding reduction: a group with a unique minimal normal \
subgroup V, V not central and G/V nonabelian simple, is normal with trivial centralizer in every \
group containing it subnormally, so every admissible G* embeds in Aut(G)";

/// Trusted statement: the automorphism group of the extensions.
pub const FACT_AUT: &str = "automorphism structure: Aut(G) = G<alpha> for an outer alpha of \
order 2, so |Aut(G)| = 2|G| and the admissible G* are G and G<alpha>";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictStatus {
    /// Some candidate `G*` has a π-maximal `K` with `K ∩ G = S`.
    WitnessedSubmaximal,
    /// Every π-maximal overgroup of `S` in every candidate meets `G` in more
    /// than `S`.
    RefutedInCandidates,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditEntry {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// The exhaustive ascent from `S` inside one candidate `G*`.
#[derive(Clone, Debug)]
pub struct CandidateAscent {
    pub name: String,
    pub group: PermGroup,
    pub leaves: Vec<PermGroup>,
    /// `K ∩ G` for each leaf `K`.
    pub intersections: Vec<PermGroup>,
}

#[derive(Clone, Debug)]
pub struct SubmaximalityVerdict {
    /// `S`, in the coordinates of [`SubmaximalityVerdict::ambient`].
    pub subject: PermGroup,
    /// The right-regular copy of `G`.
    pub ambient: PermGroup,
    pub status: VerdictStatus,
    pub witness: Option<(PermGroup, PermGroup)>,
    pub audit: Vec<AuditEntry>,
    pub candidates: Vec<CandidateAscent>,
    /// A π-overgroup of `S` inside `G` itself.
    pub ambient_overgroup: Option<PermGroup>,
    pub consumed_facts: Vec<String>,
}

impl SubmaximalityVerdict {
    pub fn audit_passed(&self) -> bool {
        self.audit.iter().all(|a| a.passed)
    }

    pub fn is_refuted(&self) -> bool {
        self.status == VerdictStatus::RefutedInCandidates
    }

    /// `K ∩ G` for every leaf `K`, certified π-submaximal in `G`.
    pub fn certificates(&self, pi: &PrimeSet) -> Result<Vec<SubmaximalCertificate>> {
        let mut out = Vec::new();
        for c in &self.candidates {
            for k in &c.leaves {
                out.push(verify_submaximality_witness(&c.group, &self.ambient, k, pi)?);
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug)]
pub struct CorollaryOptions {
    /// Conjugates of `S` used to spot-check that one Sylow subgroup suffices.
    pub conjugate_samples: usize,
    pub seed: u64,
}

impl Default for CorollaryOptions {
    fn default() -> Self {
        Self {
            conjugate_samples: 3,
            seed: 2,
        }
    }
}

struct Audit(Vec<AuditEntry>);

impl Audit {
    fn record(&mut self, name: &str, passed: bool, detail: impl Into<String>) -> bool {
        self.0.push(AuditEntry {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
        passed
    }

    /// Records a hypothesis; a failure invalidates the whole verdict.
    fn require(&mut self, name: &str, passed: bool, detail: impl Into<String>) -> Result<()> {
        let detail = detail.into();
        if self.record(name, passed, detail.clone()) {
            Ok(())
        } else {
            Err(Error::Hypothesis(format!("{name}: {detail}")))
        }
    }
}

fn check_hypotheses(ext: &Extension, audit: &mut Audit) -> Result<()> {
    let g = ext.group();
    let v = ext.module();
    let mins = g.minimal_normal_subgroups()?;
    audit.require(
        "unique minimal normal subgroup is V",
        mins.len() == 1 && mins[0].same_group(v),
        format!("{} minimal normal subgroup(s)", mins.len()),
    )?;
    audit.require("|V| = 8", v.order() == 8, v.order().to_string())?;
    let elementary = v.is_abelian() && v.generators().iter().all(|x| x.order() <= 2);
    audit.require("V elementary abelian", elementary, "")?;
    let z = g.center()?;
    audit.require(
        "V not central",
        !v.is_subgroup_of(&z),
        format!("|Z(G)| = {}", z.order()),
    )?;
    let q = g.block_quotient(v)?;
    audit.require(
        "|G/V| = 168",
        q.group().order() == 168,
        q.group().order().to_string(),
    )?;
    let simple = q.group().simplicity()?.is_nonabelian_simple();
    audit.require("G/V nonabelian simple", simple, "")?;
    Ok(())
}

/// Builds `G⟨α⟩` from an outer 1-cocycle, falling back to a brute-force
/// search for an outer involution when every cocycle is a coboundary.
pub fn build_alpha_extension(ext: &Extension) -> Result<(AutExtension, &'static str)> {
    let space = solve_1cocycles(ext.presentation(), ext.action())?;
    let (alpha, path) = match space.outer_cocycle() {
        Some(delta) => (alpha_automorphism(ext, &delta)?, "1-cocycle"),
        None => {
            let lifted = ext.lifted_presentation()?;
            let alpha = find_outer_involution(ext.group(), &lifted, None)?
                .ok_or_else(|| Error::Hypothesis("no outer involution".into()))?;
            (alpha, "brute-force search")
        }
    };
    Ok((extend_by_automorphism(ext.group(), &alpha)?, path))
}

fn keys(g: &PermGroup, groups: &[PermGroup]) -> Result<BTreeSet<Vec<u64>>> {
    groups.iter().map(|k| element_key(g, k)).collect()
}

/// Checks that no Sylow 2-subgroup of the extension is π-submaximal, for
/// overgroups `G*` ranging over `G` and `G⟨α⟩`. `subject` defaults to
/// the first Sylow 2-subgroup of `G`.
pub fn corollary_check(
    ext: &Extension,
    pi: &PrimeSet,
    subject: Option<&PermGroup>,
    options: &CorollaryOptions,
) -> Result<SubmaximalityVerdict> {
    let mut audit = Audit(Vec::new());
    let g = ext.group();
    check_hypotheses(ext, &mut audit)?;

    let (aut, path) = build_alpha_extension(ext)?;
    audit.require(
        "|G<alpha>| = 2|G|",
        aut.group().order() == 2 * g.order(),
        format!("{} via {path}", aut.group().order()),
    )?;

    let s = match subject {
        Some(s) => s.clone(),
        None => g.sylow(2)?,
    };
    audit.require(
        "S is a Sylow 2-subgroup of G",
        s.is_subgroup_of(g) && s.order() == p_part(g.order(), 2) && is_pi_group(&s, pi),
        format!("|S| = {}", s.order()),
    )?;
    audit.record(
        "one Sylow subgroup suffices",
        true,
        "Sylow subgroups are conjugate in G and conjugation by G preserves each candidate",
    );

    let reg = aut.regular();
    let ambient = aut.base().clone();
    let s_reg = reg.embed_subgroup(&s)?;

    let in_g = is_pi_maximal(&ambient, &s_reg, pi)?;
    let ambient_overgroup = in_g.witness().cloned();
    audit.record(
        "S not pi-maximal in G (independent re-check)",
        ambient_overgroup
            .as_ref()
            .is_some_and(|w| w.order() % 3 == 0),
        match &ambient_overgroup {
            Some(w) => format!("overgroup of order {}", w.order()),
            None => "S is pi-maximal in G".into(),
        },
    );

    let mut candidates = Vec::new();
    let mut witness = None;
    for (name, cand) in [("G", ambient.clone()), ("G<alpha>", aut.group().clone())] {
        let leaves = maximal_pi_overgroups(&cand, &s_reg, pi)?;
        let intersections: Vec<PermGroup> = leaves
            .iter()
            .map(|k| cand.intersection(k, &ambient))
            .collect::<Result<_>>()?;
        let above = intersections.iter().all(|i| i.order() > s_reg.order());
        let orders: Vec<String> = leaves
            .iter()
            .zip(&intersections)
            .map(|(k, i)| format!("{}:{}", k.order(), i.order()))
            .collect();
        audit.record(
            &format!("in {name}: every pi-maximal overgroup of S meets G above S"),
            above,
            format!("|K|:|K∩G| = [{}]", orders.join(", ")),
        );
        if !above && witness.is_none() {
            let pos = intersections
                .iter()
                .position(|i| i.order() == s_reg.order())
                .expect("some leaf meets G in S");
            verify_submaximality_witness(&cand, &ambient, &leaves[pos], pi)?;
            witness = Some((cand.clone(), leaves[pos].clone()));
        }

        let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
        let mut conjugates_ok = true;
        for _ in 0..options.conjugate_samples {
            let x: Permutation = ambient.unrank(rng.gen_range(0..ambient.order()));
            let moved = maximal_pi_overgroups(&cand, &s_reg.conjugate(&x), pi)?;
            let expected: Vec<PermGroup> = leaves.iter().map(|k| k.conjugate(&x)).collect();
            conjugates_ok &= keys(&cand, &moved)? == keys(&cand, &expected)?;
        }
        audit.record(
            &format!("in {name}: ascent commutes with conjugation by G"),
            conjugates_ok,
            format!("{} sampled conjugates", options.conjugate_samples),
        );
        candidates.push(CandidateAscent {
            name: name.into(),
            group: cand,
            leaves,
            intersections,
        });
    }

    let status = if witness.is_some() {
        VerdictStatus::WitnessedSubmaximal
    } else {
        VerdictStatus::RefutedInCandidates
    };
    Ok(SubmaximalityVerdict {
        subject: s_reg,
        ambient,
        status,
        witness,
        audit: audit.0,
        candidates,
        ambient_overgroup,
        consumed_facts: vec![FACT_EMBEDDING.into(), FACT_AUT.into()],
    })
}
