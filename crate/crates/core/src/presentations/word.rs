use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::permcore::Permutation;

/// Anything a word can be evaluated in.
pub trait GroupElement: Clone {
    fn op(&self, other: &Self) -> Self;
    fn inv(&self) -> Self;
    /// The identity of the group `self` lives in.
    fn identity_like(&self) -> Self;
}

impl GroupElement for Permutation {
    fn op(&self, other: &Self) -> Self {
        self.then(other)
    }
    fn inv(&self) -> Self {
        self.inverse()
    }
    fn identity_like(&self) -> Self {
        Permutation::identity(self.degree())
    }
}

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn inv(self) -> Self {
        Self {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn gen(i: usize) -> Self {
        Self::new(vec![Letter {
            gen: i,
            inverse: false,
        }])
    }

    /// Builds a word from signed, 1-based indices: `3` is generator 2,
    /// `-1` is the inverse of generator 0.
    pub fn from_signed(letters: &[i32]) -> Self {
        Self::new(
            letters
                .iter()
                .map(|&l| {
                    assert!(l != 0, "signed letters are 1-based");
                    Letter {
                        gen: l.unsigned_abs() as usize - 1,
                        inverse: l < 0,
                    }
                })
                .collect(),
        )
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Formal inverse: reversed, each letter inverted.
    pub fn inverse(&self) -> Self {
        Self::new(self.letters.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn pow(&self, n: usize) -> Self {
        Self::new(self.letters.repeat(n))
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(a: &Word, b: &Word) -> Self {
        &(&(&a.inverse() * &b.inverse()) * a) * b
    }

    /// `g⁻¹ self g`.
    pub fn conjugated_by(&self, g: &Word) -> Self {
        &(&g.inverse() * self) * g
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.gen).max()
    }

    /// Renumbers generator `i` as `i + offset`.
    pub fn shifted(&self, offset: usize) -> Self {
        Self::new(
            self.letters
                .iter()
                .map(|l| Letter {
                    gen: l.gen + offset,
                    inverse: l.inverse,
                })
                .collect(),
        )
    }

    /// Replaces generator `i` by `images[i]`.
    pub fn substitute(&self, images: &[Word]) -> Self {
        let mut out = Vec::new();
        for l in &self.letters {
            let w = &images[l.gen];
            if l.inverse {
                out.extend(w.inverse().letters);
            } else {
                out.extend_from_slice(&w.letters);
            }
        }
        Self::new(out)
    }

    /// Cancels adjacent `x x⁻¹` pairs.
    pub fn freely_reduced(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self::new(out)
    }

    pub fn evaluate<E: GroupElement>(&self, images: &[E]) -> Result<E> {
        let first = images
            .first()
            .ok_or_else(|| Error::InvalidArgument("no generator images".into()))?;
        if let Some(m) = self.max_generator() {
            if m >= images.len() {
                return Err(Error::Arity {
                    index: m,
                    ngens: images.len(),
                });
            }
        }
        let mut acc = first.identity_like();
        let inverses: Vec<Option<E>> = (0..images.len())
            .map(|i| {
                self.letters
                    .iter()
                    .any(|l| l.gen == i && l.inverse)
                    .then(|| images[i].inv())
            })
            .collect();
        for l in &self.letters {
            acc = if l.inverse {
                acc.op(inverses[l.gen].as_ref().expect("precomputed"))
            } else {
                acc.op(&images[l.gen])
            };
        }
        Ok(acc)
    }
}

impl Mul for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        Word::new(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "g{}", l.gen)?;
            if l.inverse {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// Generators `0..ngens` subject to `relators = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    ngens: usize,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(ngens: usize, relators: Vec<Word>) -> Result<Self> {
        for r in &relators {
            if let Some(m) = r.max_generator() {
                if m >= ngens {
                    return Err(Error::Arity { index: m, ngens });
                }
            }
        }
        Ok(Self { ngens, relators })
    }

    /// `⟨a, b | a², b³, (ab)⁷, [a,b]⁴⟩`, a presentation of `GL₃(2) ≅ PSL₂(7)`.
    pub fn gl32() -> Self {
        let (a, b) = (Word::gen(0), Word::gen(1));
        Self::new(
            2,
            vec![
                a.pow(2),
                b.pow(3),
                (&a * &b).pow(7),
                Word::commutator(&a, &b).pow(4),
            ],
        )
        .expect("two generators")
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Whether every relator evaluates to the identity at `images`.
    pub fn is_satisfied_by<E: GroupElement + PartialEq>(&self, images: &[E]) -> Result<bool> {
        if images.len() != self.ngens {
            return Err(Error::Arity {
                index: self.ngens,
                ngens: images.len(),
            });
        }
        for r in &self.relators {
            let v = r.evaluate(images)?;
            if v != v.identity_like() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_word_is_identity() {
        let p = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        assert!(Word::empty().evaluate(&[p]).unwrap().is_identity());
    }

    #[test]
    fn word_times_inverse_is_identity() {
        let p = Permutation::from_cycles(4, &[&[0, 1, 3]]).unwrap();
        let w = Word::from_signed(&[1, -1]);
        assert!(w.evaluate(&[p.clone()]).unwrap().is_identity());
        let w = Word::from_signed(&[1, 1, -1]);
        assert_eq!(w.evaluate(&[p.clone()]).unwrap(), p);
    }

    #[test]
    fn evaluation_respects_product_order() {
        let a = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        let w = Word::from_signed(&[1, 2]);
        assert_eq!(w.evaluate(&[a.clone(), b.clone()]).unwrap(), a.then(&b));
        let w = Word::from_signed(&[-2, 1]);
        assert_eq!(w.evaluate(&[a.clone(), b.clone()]).unwrap(), b.inverse().then(&a));
    }

    #[test]
    fn arity_errors() {
        let p = Permutation::identity(2);
        assert_eq!(
            Word::gen(2).evaluate(&[p.clone()]).unwrap_err(),
            Error::Arity { index: 2, ngens: 1 }
        );
        assert!(Presentation::new(1, vec![Word::gen(1)]).is_err());
    }

    #[test]
    fn formal_operations() {
        let w = Word::from_signed(&[1, 2, -1]);
        assert_eq!(w.inverse(), Word::from_signed(&[1, -2, -1]));
        assert_eq!((&w * &w.inverse()).freely_reduced(), Word::empty());
        assert_eq!(
            Word::commutator(&Word::gen(0), &Word::gen(1)),
            Word::from_signed(&[-1, -2, 1, 2])
        );
        assert_eq!(Word::gen(0).shifted(3), Word::gen(3));
        let sub = Word::from_signed(&[1, -2]).substitute(&[
            Word::from_signed(&[2, 2]),
            Word::from_signed(&[1, 2]),
        ]);
        assert_eq!(sub, Word::from_signed(&[2, 2, -2, -1]));
    }
}
