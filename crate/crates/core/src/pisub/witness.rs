use super::maximal::is_pi_maximal;
use super::primes::PrimeSet;
use crate::error::{Error, Result};
use crate::permcore::PermGroup;

/// `H = G ∩ K` with `G` subnormal in `G*` and `K` π-maximal in `G*`, all
/// re-verified on construction.
#[derive(Clone, Debug)]
pub struct SubmaximalCertificate {
    pub star: PermGroup,
    pub ambient: PermGroup,
    pub overgroup: PermGroup,
    pub subgroup: PermGroup,
    pub pi: PrimeSet,
}

pub fn verify_submaximality_witness(
    star: &PermGroup,
    ambient: &PermGroup,
    k: &PermGroup,
    pi: &PrimeSet,
) -> Result<SubmaximalCertificate> {
    if !ambient.is_subgroup_of(star) || !k.is_subgroup_of(star) {
        return Err(Error::NotSubgroup);
    }
    if !star.is_subnormal(ambient)? {
        return Err(Error::WitnessFailed("ambient group is not subnormal".into()));
    }
    if !is_pi_maximal(star, k, pi)?.is_maximal() {
        return Err(Error::WitnessFailed("overgroup is not pi-maximal".into()));
    }
    let subgroup = star.intersection(ambient, k)?;
    Ok(SubmaximalCertificate {
        star: star.clone(),
        ambient: ambient.clone(),
        overgroup: k.clone(),
        subgroup,
        pi: pi.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::Permutation;

    #[test]
    fn pi_maximal_subgroups_certify_themselves() {
        let g = PermGroup::symmetric(4);
        let pi = PrimeSet::new(&[2]).unwrap();
        let s = g.sylow(2).unwrap();
        let c = verify_submaximality_witness(&g, &g, &s, &pi).unwrap();
        assert!(c.subgroup.same_group(&s));
    }

    #[test]
    fn subnormal_subgroup_meets_a_sylow() {
        // A₄ ⊴ S₄; a Sylow-2 of S₄ meets A₄ in the Klein group
        let g = PermGroup::symmetric(4);
        let a4 = PermGroup::alternating(4);
        let pi = PrimeSet::new(&[2]).unwrap();
        let c = verify_submaximality_witness(&g, &a4, &g.sylow(2).unwrap(), &pi).unwrap();
        assert_eq!(c.subgroup.order(), 4);
    }

    #[test]
    fn failing_witnesses() {
        let g = PermGroup::symmetric(4);
        let pi = PrimeSet::new(&[2]).unwrap();
        let trivial = PermGroup::trivial(4);
        assert!(matches!(
            verify_submaximality_witness(&g, &g, &trivial, &pi),
            Err(Error::WitnessFailed(_))
        ));
        // S₃ fixing a point is not subnormal in S₄
        let s3 = PermGroup::new(vec![
            Permutation::from_cycles(4, &[&[0, 1]]).unwrap(),
            Permutation::from_cycles(4, &[&[0, 1, 2]]).unwrap(),
        ])
        .unwrap();
        assert!(matches!(
            verify_submaximality_witness(&g, &s3, &g.sylow(2).unwrap(), &pi),
            Err(Error::WitnessFailed(_))
        ));
    }
}
