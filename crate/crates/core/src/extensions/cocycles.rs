use super::module::ModuleAction;
use crate::error::{Error, Result};
use crate::f2lin::{BitMatrix, BitVector};
use crate::presentations::{Presentation, Word};

/// A map `δ` from the abstract generators to the module, extended by
/// `δ(gh) = δ(g)·h + δ(h)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cocycle {
    values: Vec<BitVector>,
}

impl Cocycle {
    pub fn new(values: Vec<BitVector>) -> Self {
        Self { values }
    }

    pub fn zero(ngens: usize, dim: usize) -> Self {
        Self::new(vec![BitVector::zero(dim); ngens])
    }

    /// `δ_v(x) = v − v·x`.
    pub fn coboundary(act: &ModuleAction, v: &BitVector) -> Self {
        Self::new(
            act.matrices()
                .iter()
                .map(|m| v.add(&v.mul_matrix(m)))
                .collect(),
        )
    }

    pub fn values(&self) -> &[BitVector] {
        &self.values
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.add(b))
                .collect(),
        )
    }

    /// All values packed into one vector, generator `j` at bits `j·d..`.
    pub fn flatten(&self) -> BitVector {
        let d = self.values[0].dim();
        let bits = self
            .values
            .iter()
            .enumerate()
            .fold(0, |acc, (j, v)| acc | v.bits() << (j * d));
        BitVector::new(d * self.values.len(), bits)
    }

    pub fn unflatten(v: &BitVector, dim: usize) -> Self {
        Self::new(
            (0..v.dim() / dim)
                .map(|j| v.slice(j * dim, dim))
                .collect(),
        )
    }

    /// `δ(w)`, with `δ(x⁻¹) = δ(x)·x⁻¹` in characteristic 2.
    pub fn evaluate(&self, act: &ModuleAction, w: &Word) -> Result<BitVector> {
        let mut acc = BitVector::zero(act.dim());
        for l in w.letters() {
            let m = act.matrix(l.gen);
            let (step, value) = if l.inverse {
                let inv = m.inverse()?;
                let value = self.values[l.gen].mul_matrix(&inv);
                (inv, value)
            } else {
                (m.clone(), self.values[l.gen])
            };
            acc = acc.mul_matrix(&step).add(&value);
        }
        Ok(acc)
    }

    pub fn is_cocycle(&self, p: &Presentation, act: &ModuleAction) -> Result<bool> {
        for r in p.relators() {
            if !self.evaluate(act, r)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Bases of the 1-cocycles and of the 1-coboundaries.
#[derive(Clone, Debug)]
pub struct CocycleSpace {
    dim: usize,
    cocycles: Vec<Cocycle>,
    coboundaries: Vec<Cocycle>,
}

impl CocycleSpace {
    pub fn cocycles(&self) -> &[Cocycle] {
        &self.cocycles
    }

    pub fn coboundaries(&self) -> &[Cocycle] {
        &self.coboundaries
    }

    pub fn cocycle_dim(&self) -> usize {
        self.cocycles.len()
    }

    pub fn coboundary_dim(&self) -> usize {
        self.coboundaries.len()
    }

    pub fn h1_dim(&self) -> usize {
        self.cocycle_dim() - self.coboundary_dim()
    }

    pub fn is_coboundary(&self, c: &Cocycle) -> bool {
        let before = span_rank(self.coboundaries.iter().map(Cocycle::flatten));
        let after = span_rank(
            self.coboundaries
                .iter()
                .map(Cocycle::flatten)
                .chain(std::iter::once(c.flatten())),
        );
        before == after
    }

    /// First basis cocycle that is not a coboundary.
    pub fn outer_cocycle(&self) -> Option<Cocycle> {
        self.cocycles.iter().find(|c| !self.is_coboundary(c)).cloned()
    }

    pub fn module_dim(&self) -> usize {
        self.dim
    }
}

fn span_rank(vectors: impl Iterator<Item = BitVector>) -> usize {
    let vs: Vec<BitVector> = vectors.collect();
    match vs.first() {
        None => 0,
        Some(v) => BitMatrix::from_rows(v.dim(), vs.iter().map(BitVector::bits).collect()).rank(),
    }
}

/// Solves `δ(r) = 0` for every relator `r` of `p`, linear in the unknowns
/// `δ(x₀), .., δ(x_{n-1})`.
pub fn solve_1cocycles(p: &Presentation, act: &ModuleAction) -> Result<CocycleSpace> {
    act.check(p)?;
    let (n, d) = (p.ngens(), act.dim());
    if n * d > 64 || p.relators().len() * d > 64 {
        return Err(Error::InvalidArgument("cocycle system too large".into()));
    }
    // M maps the packed unknowns (row vector) to the packed values δ(rₖ)
    let mut m = BitMatrix::zero(n * d, p.relators().len() * d);
    for (k, r) in p.relators().iter().enumerate() {
        let letters = r.letters();
        for (i, l) in letters.iter().enumerate() {
            let suffix = Word::new(letters[i + 1..].to_vec());
            let mut c = act.word_matrix(&suffix)?;
            if l.inverse {
                c = act.matrix(l.gen).inverse()?.mul(&c)?;
            }
            for a in 0..d {
                for b in 0..d {
                    if c.get(a, b) {
                        let (row, col) = (l.gen * d + a, k * d + b);
                        m.set(row, col, !m.get(row, col));
                    }
                }
            }
        }
    }
    let cocycles: Vec<Cocycle> = m
        .transpose()
        .nullspace()
        .iter()
        .map(|v| Cocycle::unflatten(v, d))
        .collect();

    let mut coboundaries: Vec<Cocycle> = Vec::new();
    for i in 0..d {
        let c = Cocycle::coboundary(act, &BitVector::unit(d, i));
        let rank = span_rank(coboundaries.iter().chain([&c]).map(Cocycle::flatten));
        if rank > coboundaries.len() {
            coboundaries.push(c);
        }
    }
    Ok(CocycleSpace {
        dim: d,
        cocycles,
        coboundaries,
    })
}
