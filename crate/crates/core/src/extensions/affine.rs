use crate::error::{Error, Result};
use crate::f2lin::BitMatrix;
use crate::permcore::{PermGroup, Permutation};
use crate::presentations::Presentation;

use super::module::ModuleAction;

/// `v ↦ v + w` on the `2^n` vectors of `F₂ⁿ`.
pub fn translation(n: usize, w: u64) -> Permutation {
    Permutation::from_images((0..1usize << n).map(|v| v ^ w as usize).collect())
        .expect("xor is a bijection")
}

/// `⟨v ↦ v + eᵢ, v ↦ v·M⟩` on `F₂ⁿ`; translations come first among the
/// generators.
pub fn affine_perm_group(mats: &[BitMatrix], n: usize) -> Result<PermGroup> {
    if !(1..=16).contains(&n) {
        return Err(Error::InvalidArgument(format!("dimension {n}")));
    }
    let mut gens: Vec<Permutation> = (0..n).map(|i| translation(n, 1 << i)).collect();
    for m in mats {
        if m.rows() != n || !m.is_square() {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} matrix on F2^{n}",
                m.rows(),
                m.cols()
            )));
        }
        gens.push(m.action_on_vectors()?);
    }
    PermGroup::with_degree(1 << n, gens)
}

/// Exchanges coordinates `i` and `i + n` of `F₂²ⁿ`.
pub fn block_swap(n: usize) -> BitMatrix {
    let mut j = BitMatrix::zero(2 * n, 2 * n);
    for i in 0..n {
        j.set(i, i + n, true);
        j.set(i + n, i, true);
    }
    j
}

/// The module `V ⊕ V*` for `GL₃(2)`, the group `G = (V ⊕ V*):L` and
/// `G* = G:⟨γ⟩` with `γ` swapping the two summands, all on 64 points.
#[derive(Clone, Debug)]
pub struct DualModuleGroups {
    pub action: ModuleAction,
    pub group: PermGroup,
    pub star: PermGroup,
    /// translations by the first three coordinates
    pub natural: PermGroup,
    /// translations by the last three coordinates
    pub dual: PermGroup,
    pub swap: Permutation,
}

pub fn dual_module_groups() -> Result<DualModuleGroups> {
    let p = Presentation::gl32();
    let action = ModuleAction::natural(&p)?;
    let mats: Vec<BitMatrix> = action
        .matrices()
        .iter()
        .map(|g| Ok(BitMatrix::block_diag(g, &g.inverse_transpose()?)))
        .collect::<Result<_>>()?;
    let group = affine_perm_group(&mats, 6)?;
    let swap = block_swap(3).action_on_vectors()?;
    let mut star_gens = group.generators().to_vec();
    star_gens.push(swap.clone());
    let star = PermGroup::new(star_gens)?;
    let natural = PermGroup::with_degree(64, (0..3).map(|i| translation(6, 1 << i)).collect())?;
    let dual = PermGroup::with_degree(64, (3..6).map(|i| translation(6, 1 << i)).collect())?;
    Ok(DualModuleGroups {
        action,
        group,
        star,
        natural,
        dual,
        swap,
    })
}

/// `G*` of degree 64 and order 21504.
pub fn example1_star_group() -> Result<PermGroup> {
    Ok(dual_module_groups()?.star)
}

fn on_copy(x: &Permutation, copy: usize, k: usize) -> Permutation {
    let n = x.degree();
    let mut images: Vec<usize> = (0..n * k).collect();
    for p in 0..n {
        images[copy * n + p] = copy * n + x.image(p);
    }
    Permutation::from_images(images).expect("bijection on one copy")
}

/// `X^k` acting on `k` disjoint copies of `X`'s points.
pub fn wreath_base(x: &PermGroup, k: usize) -> Result<PermGroup> {
    if k < 1 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let gens = (0..k)
        .flat_map(|c| x.generators().iter().map(move |g| on_copy(g, c, k)))
        .collect();
    PermGroup::with_degree(x.degree() * k, gens)
}

/// `X ≀ C_k`: `X` on copy 0 together with the cycle `c ↦ c + 1` of copies.
pub fn wreath_regular(x: &PermGroup, k: usize) -> Result<PermGroup> {
    if k < 1 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let n = x.degree();
    let mut gens: Vec<Permutation> = x.generators().iter().map(|g| on_copy(g, 0, k)).collect();
    if k > 1 {
        gens.push(
            Permutation::from_images((0..n * k).map(|p| (p + n) % (n * k)).collect())
                .expect("shift of copies"),
        );
    }
    PermGroup::with_degree(n * k, gens)
}

/// Places `h` on copy `copy` of a `k`-fold wreath product.
pub fn wreath_embed(h: &PermGroup, copy: usize, k: usize) -> Result<PermGroup> {
    PermGroup::with_degree(
        h.degree() * k,
        h.generators().iter().map(|g| on_copy(g, copy, k)).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_orders() {
        let p = Presentation::gl32();
        let act = ModuleAction::natural(&p).unwrap();
        let g = affine_perm_group(act.matrices(), 3).unwrap();
        assert_eq!((g.degree(), g.order()), (8, 1344));
        let t = affine_perm_group(&[BitMatrix::identity(3)], 3).unwrap();
        assert_eq!(t.order(), 8);
        assert!(t.is_abelian());
        let singular = BitMatrix::zero(3, 3);
        assert_eq!(affine_perm_group(&[singular], 3).unwrap_err(), Error::Singular);
    }

    #[test]
    fn dual_module_construction() {
        let d = dual_module_groups().unwrap();
        assert_eq!(d.group.order(), 10752);
        assert_eq!(d.star.order(), 21504);
        assert_eq!(d.star.degree(), 64);
        assert!(d.group.is_normal_in(&d.star));
        let j = block_swap(3);
        assert_eq!(j.mul(&j).unwrap(), BitMatrix::identity(6));
        for g in d.action.matrices() {
            let gt = g.inverse_transpose().unwrap();
            let lhs = j.mul(&BitMatrix::block_diag(g, &gt)).unwrap().mul(&j).unwrap();
            assert_eq!(lhs, BitMatrix::block_diag(&gt, g));
        }
        assert!(d.dual.is_normal_in(&d.group));
        assert!(!d.dual.is_normal_in(&d.star));
    }

    #[test]
    fn wreath_products() {
        let c2 = PermGroup::cyclic(2);
        let w = wreath_regular(&c2, 2).unwrap();
        assert_eq!((w.degree(), w.order()), (4, 8));
        let s3 = PermGroup::symmetric(3);
        let w1 = wreath_regular(&s3, 1).unwrap();
        assert!(w1.same_group(&s3));
        let w3 = wreath_regular(&s3, 3).unwrap();
        assert_eq!(w3.order(), 6 * 6 * 6 * 3);
        let base = wreath_base(&s3, 3).unwrap();
        assert_eq!(base.order(), 216);
        assert!(base.is_normal_in(&w3));
        assert!(wreath_regular(&s3, 0).is_err());
    }
}
