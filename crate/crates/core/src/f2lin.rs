//! Vectors and matrices over GF(2), bit-packed one row per `u64`.
//!
//! Vectors are rows and act on the right of matrices: `v·M` is the XOR of the
//! rows of `M` selected by the bits of `v`.

use std::fmt;

use crate::error::{Error, Result};
use crate::permcore::{PermGroup, Permutation};
use crate::presentations::{GroupElement, Word};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    dim: usize,
    bits: u64,
}

impl BitVector {
    pub fn new(dim: usize, bits: u64) -> Self {
        assert!((1..=64).contains(&dim), "dimension {dim} out of range");
        Self {
            dim,
            bits: bits & mask(dim),
        }
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(dim, 0)
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        assert!(i < dim);
        Self::new(dim, 1 << i)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        Self::new(self.dim, self.bits ^ other.bits)
    }

    /// `self·m`.
    pub fn mul_matrix(&self, m: &BitMatrix) -> Self {
        assert_eq!(self.dim, m.rows, "vector/matrix shape mismatch");
        BitVector::new(m.cols, m.row_combination(self.bits))
    }

    /// All `2^dim` vectors in increasing integer order.
    pub fn all(dim: usize) -> impl Iterator<Item = BitVector> {
        (0..1u64 << dim).map(move |b| BitVector::new(dim, b))
    }

    /// Restriction to coordinates `start..start + len`.
    pub fn slice(&self, start: usize, len: usize) -> Self {
        BitVector::new(len, self.bits >> start)
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.dim {
            write!(f, "{}", self.get(i) as u8)?;
        }
        write!(f, "]")
    }
}

fn mask(dim: usize) -> u64 {
    if dim == 64 {
        u64::MAX
    } else {
        (1u64 << dim) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        assert!(cols <= 64);
        Self {
            rows,
            cols,
            data: vec![0; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.data[i] = 1 << i;
        }
        m
    }

    /// Row `i` is the bit pattern `rows[i]` (bit `j` = column `j`).
    pub fn from_rows(cols: usize, rows: Vec<u64>) -> Self {
        assert!(cols <= 64);
        let data = rows.into_iter().map(|r| r & mask(cols)).collect::<Vec<_>>();
        Self {
            rows: data.len(),
            cols,
            data,
        }
    }

    /// Square matrix from its row-major code: bit `i·n + j` is entry `(i, j)`.
    pub fn from_code(n: usize, code: u64) -> Self {
        Self::from_rows(n, (0..n).map(|i| code >> (i * n) & mask(n)).collect())
    }

    pub fn code(&self) -> u64 {
        self.data
            .iter()
            .enumerate()
            .map(|(i, r)| r << (i * self.cols))
            .sum()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i] >> j & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        if value {
            self.data[i] |= 1 << j;
        } else {
            self.data[i] &= !(1 << j);
        }
    }

    pub fn row(&self, i: usize) -> BitVector {
        BitVector::new(self.cols, self.data[i])
    }

    fn row_combination(&self, selector: u64) -> u64 {
        self.data
            .iter()
            .enumerate()
            .filter(|(i, _)| selector >> i & 1 == 1)
            .fold(0, |acc, (_, r)| acc ^ r)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} · {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: other.cols,
            data: self.data.iter().map(|&r| other.row_combination(r)).collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a ^ b).collect(),
        })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    /// Reduced row echelon form with leftmost pivots; returns the pivot
    /// column of each nonzero row.
    fn rref(&self) -> (Vec<u64>, Vec<usize>) {
        let mut rows = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..rows.len()).find(|&i| rows[i] >> c & 1 == 1) else {
                continue;
            };
            rows.swap(r, p);
            for i in 0..rows.len() {
                if i != r && rows[i] >> c & 1 == 1 {
                    rows[i] ^= rows[r];
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        (rows, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(format!(
                "inverse of {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        // augmented [A | I] packed into 2n columns
        let mut rows: Vec<u64> = self
            .data
            .iter()
            .enumerate()
            .map(|(i, &r)| r | (1u64 << (n + i)))
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&i| rows[i] >> c & 1 == 1).ok_or(Error::Singular)?;
            rows.swap(c, p);
            for i in 0..n {
                if i != c && rows[i] >> c & 1 == 1 {
                    rows[i] ^= rows[c];
                }
            }
        }
        Ok(Self::from_rows(n, rows.into_iter().map(|r| r >> n).collect()))
    }

    /// `(A⁻¹)ᵀ`, the matrix of the contragredient action.
    pub fn inverse_transpose(&self) -> Result<Self> {
        Ok(self.inverse()?.transpose())
    }

    /// Basis of `{x : A·x = 0}` for column vectors `x`, one vector per free
    /// column in increasing order.
    pub fn nullspace(&self) -> Vec<BitVector> {
        let (rows, pivots) = self.rref();
        (0..self.cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut x = 1u64 << free;
                for (r, &pc) in pivots.iter().enumerate() {
                    if rows[r] >> free & 1 == 1 {
                        x |= 1 << pc;
                    }
                }
                BitVector::new(self.cols, x)
            })
            .collect()
    }

    /// Block diagonal `diag(a, b)`.
    pub fn block_diag(a: &Self, b: &Self) -> Self {
        let cols = a.cols + b.cols;
        let mut rows = a.data.clone();
        rows.extend(b.data.iter().map(|r| r << a.cols));
        Self::from_rows(cols, rows)
    }

    /// Permutation of the `2^n` vectors (point = integer encoding) induced by
    /// `v ↦ v·A`.
    pub fn action_on_vectors(&self) -> Result<Permutation> {
        if !self.is_invertible() {
            return Err(Error::Singular);
        }
        let images = BitVector::all(self.rows)
            .map(|v| v.mul_matrix(self).bits() as usize)
            .collect();
        Permutation::from_images(images)
    }

    /// Permutation of the `2^n − 1` nonzero vectors; point `p` is vector
    /// `p + 1`.
    pub fn action_on_nonzero(&self) -> Result<Permutation> {
        if !self.is_invertible() {
            return Err(Error::Singular);
        }
        let images = (1..1u64 << self.rows)
            .map(|b| BitVector::new(self.rows, b).mul_matrix(self).bits() as usize - 1)
            .collect();
        Permutation::from_images(images)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                write!(f, "{}", self.get(i, j) as u8)?;
            }
        }
        write!(f, "]")
    }
}

impl GroupElement for BitMatrix {
    fn op(&self, other: &Self) -> Self {
        self.mul(other).expect("square matrices of equal size")
    }
    fn inv(&self) -> Self {
        self.inverse().expect("invertible matrix")
    }
    fn identity_like(&self) -> Self {
        BitMatrix::identity(self.rows)
    }
}

/// All invertible 3×3 matrices over GF(2), in increasing code order.
pub fn enumerate_gl32() -> Vec<BitMatrix> {
    (0..1u64 << 9)
        .map(|c| BitMatrix::from_code(3, c))
        .filter(BitMatrix::is_invertible)
        .collect()
}

/// First pair `(a, b)` of `candidates` (in list order, `a` outermost) on
/// which every relator evaluates to the identity and which generates a group
/// as large as the candidate set. Candidates must be invertible square
/// matrices of one size forming a group.
pub fn find_generating_pair(
    candidates: &[BitMatrix],
    relators: &[Word],
) -> Result<(BitMatrix, BitMatrix)> {
    for a in candidates {
        for b in candidates {
            let images = [a.clone(), b.clone()];
            let mut ok = true;
            for r in relators {
                if r.evaluate(&images)? != BitMatrix::identity(a.rows()) {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            let generated =
                PermGroup::new(vec![a.action_on_nonzero()?, b.action_on_nonzero()?])?;
            if generated.order() == candidates.len() as u64 {
                return Ok((a.clone(), b.clone()));
            }
        }
    }
    Err(Error::NoPresentationPair)
}

/// Generators of `GL₃(2)` satisfying `relators` (two-letter alphabet).
pub fn find_presentation_pair(relators: &[Word]) -> Result<(BitMatrix, BitMatrix)> {
    find_generating_pair(&enumerate_gl32(), relators)
}
