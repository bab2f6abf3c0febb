use crate::error::Result;
use crate::extensions::ModuleAction;
use crate::permcore::{PermGroup, Permutation};
use crate::presentations::Presentation;

const INF: usize = 7;

fn mobius(f: impl Fn(usize) -> usize) -> Permutation {
    Permutation::from_images((0..8).map(f).collect()).expect("mobius map is a bijection")
}

/// `(PGL₂(7), PSL₂(7))` acting on the projective line `{0..6, ∞ = 7}`,
/// generated by `x ↦ x + 1`, `x ↦ 3x` and `x ↦ 1/x`.
pub fn pgl27() -> Result<(PermGroup, PermGroup)> {
    let shift = mobius(|x| if x == INF { INF } else { (x + 1) % 7 });
    let scale = mobius(|x| if x == INF { INF } else { 3 * x % 7 });
    let invert = mobius(|x| match x {
        0 => INF,
        INF => 0,
        x => (1..7).find(|y| x * y % 7 == 1).expect("units mod 7"),
    });
    let pgl = PermGroup::new(vec![shift, scale, invert])?;
    let psl = pgl.derived_subgroup()?;
    Ok((pgl, psl))
}

/// `GL₃(2)` on the 7 nonzero vectors of `F₂³`; vector with bits `b` is
/// point `b - 1`.
pub fn gl32_on_points() -> Result<PermGroup> {
    let act = ModuleAction::natural(&Presentation::gl32())?;
    let gens = act
        .matrices()
        .iter()
        .map(|m| m.action_on_nonzero())
        .collect::<Result<_>>()?;
    PermGroup::new(gens)
}

fn set_stabilizer(g: &PermGroup, set: &[usize]) -> Result<PermGroup> {
    let elems: Vec<Permutation> = g
        .elements()?
        .into_iter()
        .filter(|x| set.iter().all(|&p| set.contains(&x.image(p))))
        .collect();
    g.subgroup(&elems)
}

/// Stabilizer of the point `e₀` (a line of `F₂³`).
pub fn line_stabilizer(l7: &PermGroup) -> Result<PermGroup> {
    set_stabilizer(l7, &[0])
}

/// Set-stabilizer of `{e₀, e₁, e₀ + e₁}` (a plane of `F₂³`).
pub fn plane_stabilizer(l7: &PermGroup) -> Result<PermGroup> {
    set_stabilizer(l7, &[0, 1, 2])
}
