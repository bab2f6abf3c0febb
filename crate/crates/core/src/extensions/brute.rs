use std::collections::{BTreeMap, VecDeque};
use std::time::Instant;

use super::automorphism::AutomorphismSpec;
use crate::error::{Error, Result};
use crate::permcore::{PermGroup, Permutation, RegularRep};
use crate::presentations::{Letter, Presentation, Word};

/// Automorphism search on a regular copy `H` of `G`, over images of a
/// generating pair `(g₁, g₂)` of `H` presented via Tietze moves from `p`.
struct AutSearch {
    regular: Option<RegularRep>,
    group: PermGroup,
    pair: [Permutation; 2],
    /// letters over `g₁, g₁⁻¹, g₂, g₂⁻¹` encoded as `0..4`
    relators: Vec<Vec<u8>>,
    /// the generators of `p` as words in the pair
    generator_words: Vec<Word>,
    candidates: [Vec<Permutation>; 2],
}

fn is_regular(g: &PermGroup) -> bool {
    g.order() == g.degree() as u64 && g.orbits().len() == 1
}

fn orbit_size(gens: &[&Permutation], n: usize) -> usize {
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0usize];
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.image(x);
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count
}

/// Breadth-first words `w_q` with `0^{w_q} = q`, letters over `gens` and their
/// inverses (generator first).
fn point_words(gens: &[Permutation], n: usize) -> Vec<Word> {
    let inverses: Vec<Permutation> = gens.iter().map(Permutation::inverse).collect();
    let mut words: Vec<Option<Word>> = vec![None; n];
    words[0] = Some(Word::empty());
    let mut queue = VecDeque::from([0usize]);
    while let Some(q) = queue.pop_front() {
        for (i, (g, gi)) in gens.iter().zip(&inverses).enumerate() {
            for (perm, inverse) in [(g, false), (gi, true)] {
                let r = perm.image(q);
                if words[r].is_none() {
                    let w = words[q].as_ref().expect("visited");
                    words[r] = Some(w * &Word::new(vec![Letter { gen: i, inverse }]));
                    queue.push_back(r);
                }
            }
        }
    }
    words.into_iter().map(|w| w.expect("transitive")).collect()
}

fn encode(w: &Word) -> Vec<u8> {
    w.letters()
        .iter()
        .map(|l| (2 * l.gen + l.inverse as usize) as u8)
        .collect()
}

impl AutSearch {
    fn new(g: &PermGroup, p: &Presentation) -> Result<Self> {
        if p.ngens() != g.generators().len() {
            return Err(Error::Arity {
                index: p.ngens(),
                ngens: g.generators().len(),
            });
        }
        if !p.is_satisfied_by(g.generators())? {
            return Err(Error::Hypothesis("generators do not satisfy the presentation".into()));
        }
        let (regular, group) = if is_regular(g) {
            (None, g.clone())
        } else {
            let reg = RegularRep::new(g)?;
            let h = reg.group().clone();
            (Some(reg), h)
        };
        let n = group.order() as usize;
        let elements = group.elements()?;

        let mut by_order: BTreeMap<u64, usize> = BTreeMap::new();
        let orders: Vec<u64> = elements.iter().map(Permutation::order).collect();
        for &o in &orders {
            *by_order.entry(o).or_default() += 1;
        }
        let mut sorted: Vec<usize> = (0..n).collect();
        sorted.sort_by_key(|&i| (by_order[&orders[i]], i));
        let pair = sorted
            .iter()
            .flat_map(|&i| sorted.iter().map(move |&j| (i, j)))
            .find(|&(i, j)| orbit_size(&[&elements[i], &elements[j]], n) == n)
            .map(|(i, j)| [elements[i].clone(), elements[j].clone()])
            .ok_or_else(|| Error::Hypothesis("group is not 2-generated".into()))?;

        let pair_words = point_words(&pair, n);
        let gen_words = point_words(group.generators(), n);
        let generator_words: Vec<Word> = group
            .generators()
            .iter()
            .map(|s| pair_words[s.image(0)].clone())
            .collect();
        let mut relators: Vec<Word> = p
            .relators()
            .iter()
            .map(|r| r.substitute(&generator_words))
            .collect();
        for (i, gi) in pair.iter().enumerate() {
            let y = gen_words[gi.image(0)].substitute(&generator_words);
            relators.push(&Word::gen(i).inverse() * &y);
        }
        let mut relators: Vec<Word> = relators
            .iter()
            .map(Word::freely_reduced)
            .filter(|w| !w.is_empty())
            .collect();
        relators.sort_by_key(Word::len);
        let search = Self {
            regular,
            relators: relators.iter().map(encode).collect(),
            candidates: [0, 1].map(|k| {
                elements
                    .iter()
                    .filter(|e| e.order() == pair[k].order())
                    .cloned()
                    .collect()
            }),
            pair,
            generator_words,
            group,
        };
        if !search.satisfies(&search.pair[0], &search.pair[1]) {
            return Err(Error::RelationFailed("rewritten presentation".into()));
        }
        Ok(search)
    }

    fn satisfies(&self, h1: &Permutation, h2: &Permutation) -> bool {
        let (i1, i2) = (h1.inverse(), h2.inverse());
        self.holds([h1.images(), i1.images(), h2.images(), i2.images()])
    }

    /// Every relator fixes point 0, i.e. is trivial in the regular copy.
    fn holds(&self, perms: [&[u32]; 4]) -> bool {
        self.relators.iter().all(|r| {
            r.iter()
                .fold(0u32, |x, &l| perms[l as usize][x as usize])
                == 0
        })
    }

    fn generates(&self, h1: &Permutation, h2: &Permutation) -> bool {
        orbit_size(&[h1, h2], self.group.degree()) == self.group.degree()
    }

    /// Calls `visit` on every automorphism `(g₁, g₂) ↦ (h₁, h₂)` in candidate
    /// order until it returns `false`.
    fn run(
        &self,
        deadline: Option<Instant>,
        mut visit: impl FnMut(&Permutation, &Permutation) -> Result<bool>,
    ) -> Result<()> {
        let inverses: Vec<Permutation> = self.candidates[1].iter().map(Permutation::inverse).collect();
        for h1 in &self.candidates[0] {
            if deadline.is_some_and(|d| Instant::now() > d) {
                return Err(Error::Deadline);
            }
            let i1 = h1.inverse();
            for (h2, i2) in self.candidates[1].iter().zip(&inverses) {
                let ok = self.holds([h1.images(), i1.images(), h2.images(), i2.images()]);
                if ok && self.generates(h1, h2) && !visit(h1, h2)? {
                    return Ok(());
                }
            }
        }
        Ok(())
    }

    fn to_source(&self, h: Permutation) -> Permutation {
        match &self.regular {
            Some(reg) => reg.element_of(&h),
            None => h,
        }
    }
}

/// `|Aut(G)|` by counting generator images: `G`'s generators must satisfy
/// `p`. Works on a regular copy of `G` and gives up at `deadline`.
pub fn count_automorphisms_bruteforce(
    g: &PermGroup,
    p: &Presentation,
    deadline: Option<Instant>,
) -> Result<u64> {
    let search = AutSearch::new(g, p)?;
    let mut count = 0u64;
    search.run(deadline, |_, _| {
        count += 1;
        Ok(true)
    })?;
    Ok(count)
}

/// First automorphism of order 2 that is not inner, in search order.
pub fn find_outer_involution(
    g: &PermGroup,
    p: &Presentation,
    deadline: Option<Instant>,
) -> Result<Option<AutomorphismSpec>> {
    let search = AutSearch::new(g, p)?;
    let elements = search.group.elements()?;
    let n = search.group.degree();
    let pair_words = point_words(&search.pair, n);
    let mut found = None;
    search.run(deadline, |h1, h2| {
        let images = [h1.clone(), h2.clone()];
        let square = [
            pair_words[h1.image(0)].evaluate(&images)?,
            pair_words[h2.image(0)].evaluate(&images)?,
        ];
        if square != search.pair || (*h1 == search.pair[0] && *h2 == search.pair[1]) {
            return Ok(true);
        }
        let inner = elements
            .iter()
            .any(|c| search.pair[0].conjugate_by(c) == *h1 && search.pair[1].conjugate_by(c) == *h2);
        if inner {
            return Ok(true);
        }
        found = Some(
            search
                .generator_words
                .iter()
                .map(|w| w.evaluate(&images).map(|e| search.to_source(e)))
                .collect::<Result<Vec<_>>>()?,
        );
        Ok(false)
    })?;
    Ok(found.map(AutomorphismSpec::new))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn klein() -> (PermGroup, Presentation) {
        let a = Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap();
        let b = Permutation::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap();
        let (x, y) = (Word::gen(0), Word::gen(1));
        let p = Presentation::new(2, vec![x.pow(2), y.pow(2), Word::commutator(&x, &y)]).unwrap();
        (PermGroup::new(vec![a, b]).unwrap(), p)
    }

    #[test]
    fn klein_four_has_six_automorphisms() {
        let (g, p) = klein();
        assert_eq!(count_automorphisms_bruteforce(&g, &p, None).unwrap(), 6);
    }

    #[test]
    fn symmetric_group_automorphisms() {
        // S₃ = ⟨s, t | s², t², (st)³⟩ on 3 points (not regular)
        let s = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let t = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        let (x, y) = (Word::gen(0), Word::gen(1));
        let p = Presentation::new(2, vec![x.pow(2), y.pow(2), (&x * &y).pow(3)]).unwrap();
        let g = PermGroup::new(vec![s, t]).unwrap();
        assert_eq!(count_automorphisms_bruteforce(&g, &p, None).unwrap(), 6);
        assert_eq!(find_outer_involution(&g, &p, None).unwrap(), None);
    }

    #[test]
    fn outer_involution_of_klein_four() {
        let (g, p) = klein();
        let alpha = find_outer_involution(&g, &p, None).unwrap().unwrap();
        assert_eq!(alpha.generator_images().len(), 2);
        assert!(!alpha.is_identity_on(&g));
    }

    #[test]
    fn expired_deadline_is_reported() {
        let (g, p) = klein();
        let past = Instant::now() - std::time::Duration::from_secs(1);
        assert_eq!(
            count_automorphisms_bruteforce(&g, &p, Some(past)).unwrap_err(),
            Error::Deadline
        );
    }

    #[test]
    fn wrong_presentation_is_rejected() {
        let (g, _) = klein();
        let x = Word::gen(0);
        let p = Presentation::new(2, vec![x.pow(3)]).unwrap();
        assert!(count_automorphisms_bruteforce(&g, &p, None).is_err());
    }
}
