use crate::error::{Error, Result};
use crate::f2lin::{find_presentation_pair, BitMatrix, BitVector};
use crate::presentations::{Presentation, Word};

/// A GF(2)-module for a presented group: one invertible matrix per abstract
/// generator, acting on row vectors from the right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAction {
    dim: usize,
    matrices: Vec<BitMatrix>,
}

impl ModuleAction {
    pub fn new(matrices: Vec<BitMatrix>) -> Result<Self> {
        let first = matrices.first().ok_or(Error::EmptyGenerators)?;
        let dim = first.rows();
        for m in &matrices {
            if !m.is_square() || m.rows() != dim {
                return Err(Error::ShapeMismatch(format!(
                    "{}x{} in a module of dimension {dim}",
                    m.rows(),
                    m.cols()
                )));
            }
            if !m.is_invertible() {
                return Err(Error::Singular);
            }
        }
        Ok(Self { dim, matrices })
    }

    /// `F₂³` for a two-generator presentation of `GL₃(2)`, via the first
    /// generating pair of matrices satisfying the relators.
    pub fn natural(p: &Presentation) -> Result<Self> {
        if p.ngens() != 2 {
            return Err(Error::Arity {
                index: p.ngens(),
                ngens: 2,
            });
        }
        let (a, b) = find_presentation_pair(p.relators())?;
        Self::new(vec![a, b])
    }

    /// `g ↦ (g⁻¹)ᵀ`.
    pub fn contragredient(&self) -> Result<Self> {
        Self::new(
            self.matrices
                .iter()
                .map(BitMatrix::inverse_transpose)
                .collect::<Result<_>>()?,
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ngens(&self) -> usize {
        self.matrices.len()
    }

    pub fn matrices(&self) -> &[BitMatrix] {
        &self.matrices
    }

    pub fn matrix(&self, i: usize) -> &BitMatrix {
        &self.matrices[i]
    }

    pub fn word_matrix(&self, w: &Word) -> Result<BitMatrix> {
        w.evaluate(&self.matrices)
    }

    /// Every relator of `p` must act as the identity.
    pub fn check(&self, p: &Presentation) -> Result<()> {
        if p.ngens() != self.ngens() {
            return Err(Error::Arity {
                index: p.ngens(),
                ngens: self.ngens(),
            });
        }
        let id = BitMatrix::identity(self.dim);
        for (k, r) in p.relators().iter().enumerate() {
            if self.word_matrix(r)? != id {
                return Err(Error::BadModuleAction(k));
            }
        }
        Ok(())
    }
}

/// One module element per relator: the value the lifted relator takes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TailVector {
    tails: Vec<BitVector>,
}

impl TailVector {
    pub fn new(tails: Vec<BitVector>) -> Self {
        Self { tails }
    }

    pub fn zero(dim: usize, nrelators: usize) -> Self {
        Self::new(vec![BitVector::zero(dim); nrelators])
    }

    /// The `index`-th tail vector in lexicographic order, first relator most
    /// significant.
    pub fn from_index(dim: usize, nrelators: usize, index: u64) -> Self {
        Self::new(
            (0..nrelators)
                .map(|k| BitVector::new(dim, index >> (dim * (nrelators - 1 - k))))
                .collect(),
        )
    }

    pub fn index(&self) -> u64 {
        self.tails
            .iter()
            .fold(0, |acc, t| (acc << t.dim()) | t.bits())
    }

    pub fn tails(&self) -> &[BitVector] {
        &self.tails
    }

    pub fn len(&self) -> usize {
        self.tails.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tails.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.tails.iter().all(BitVector::is_zero)
    }
}

/// Product of the module generators selected by `w`, in increasing order.
pub fn module_word(w: &BitVector) -> Word {
    (0..w.dim())
        .filter(|&i| w.get(i))
        .fold(Word::empty(), |acc, i| &acc * &Word::gen(i))
}
