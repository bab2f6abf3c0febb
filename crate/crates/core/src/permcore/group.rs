use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use super::perm::Permutation;
use crate::error::{Error, Result};

const NONE: u32 = u32::MAX;

pub const DEFAULT_ELEMENT_CAP: u64 = 1_000_000;

static ELEMENT_CAP: AtomicU64 = AtomicU64::new(DEFAULT_ELEMENT_CAP);

/// Process-wide limit on how many elements any single enumeration may
/// materialize.
pub fn element_cap() -> u64 {
    ELEMENT_CAP.load(Ordering::Relaxed)
}

pub fn set_element_cap(cap: u64) {
    ELEMENT_CAP.store(cap, Ordering::Relaxed);
}

/// One level of a stabilizer chain: the orbit of `base` under the strong
/// generators that fix every earlier base point, with coset representatives.
#[derive(Clone)]
struct Level {
    base: u32,
    gens: Vec<Permutation>,
    orbit: Vec<u32>,
    reps: Vec<Permutation>,
    inv_reps: Vec<Permutation>,
    pos: Vec<u32>,
    /// Schreier generators (orbit index × gen index) already verified.
    checked: usize,
}

impl Level {
    fn new(base: usize, gens: Vec<Permutation>, degree: usize) -> Self {
        let mut level = Self {
            base: base as u32,
            gens,
            orbit: Vec::new(),
            reps: Vec::new(),
            inv_reps: Vec::new(),
            pos: Vec::new(),
            checked: 0,
        };
        level.recompute(degree);
        level
    }

    fn recompute(&mut self, degree: usize) {
        self.pos = vec![NONE; degree];
        self.orbit = vec![self.base];
        self.reps = vec![Permutation::identity(degree)];
        self.pos[self.base as usize] = 0;
        let mut i = 0;
        while i < self.orbit.len() {
            let gamma = self.orbit[i] as usize;
            for s in &self.gens {
                let delta = s.image(gamma);
                if self.pos[delta] == NONE {
                    self.pos[delta] = self.orbit.len() as u32;
                    self.orbit.push(delta as u32);
                    let rep = self.reps[i].then(s);
                    self.reps.push(rep);
                }
            }
            i += 1;
        }
        self.inv_reps = self.reps.iter().map(Permutation::inverse).collect();
        self.checked = 0;
    }
}

/// Sifts `g` through `levels[from..]`; returns the residue and the index of
/// the level where sifting stopped (`levels.len()` if it passed every level).
fn strip(levels: &[Level], g: &Permutation, from: usize) -> (Permutation, usize) {
    let mut g = g.clone();
    for (j, level) in levels.iter().enumerate().skip(from) {
        let beta = g.image(level.base as usize);
        let idx = level.pos[beta];
        if idx == NONE {
            return (g, j);
        }
        if idx != 0 {
            g = g.then(&level.inv_reps[idx as usize]);
        }
    }
    (g, levels.len())
}

/// Deterministic Schreier–Sims. Base points are first moved points, taken in
/// generator order, so identical generator lists give identical chains.
fn schreier_sims(degree: usize, gens: &[Permutation]) -> Vec<Level> {
    let mut base: Vec<usize> = Vec::new();
    for g in gens {
        if base.iter().all(|&b| g.image(b) == b) {
            if let Some(p) = g.first_moved_point() {
                base.push(p);
            }
        }
    }
    let mut levels: Vec<Level> = Vec::with_capacity(base.len());
    for (i, &b) in base.iter().enumerate() {
        let fixing: Vec<Permutation> = gens
            .iter()
            .filter(|g| !g.is_identity() && base[..i].iter().all(|&c| g.image(c) == c))
            .cloned()
            .collect();
        levels.push(Level::new(b, fixing, degree));
    }

    let mut i = levels.len() as isize - 1;
    while i >= 0 {
        let iu = i as usize;
        let mut found = None;
        {
            let level = &levels[iu];
            let ngens = level.gens.len();
            let total = level.orbit.len() * ngens;
            let mut k = level.checked;
            while k < total {
                let (oi, si) = (k / ngens, k % ngens);
                let beta = level.orbit[oi] as usize;
                let s = &level.gens[si];
                let img = level.pos[s.image(beta)] as usize;
                let h = level.reps[oi].then(s).then(&level.inv_reps[img]);
                if !h.is_identity() {
                    let (y, j) = strip(&levels, &h, iu + 1);
                    if j < levels.len() || !y.is_identity() {
                        found = Some((y, j, k));
                        break;
                    }
                }
                k += 1;
            }
            if found.is_none() {
                levels[iu].checked = total;
            }
        }
        match found {
            Some((y, j, k)) => {
                levels[iu].checked = k;
                if j == levels.len() {
                    let b = y.first_moved_point().expect("nontrivial residue");
                    levels.push(Level::new(b, Vec::new(), degree));
                }
                for level in &mut levels[iu + 1..=j] {
                    level.gens.push(y.clone());
                    level.recompute(degree);
                }
                i = j as isize;
            }
            None => i -= 1,
        }
    }
    levels
}

/// A permutation group given by generators, with a base and strong
/// generating set computed at construction.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Arc<Vec<Level>>,
    order: u64,
}

impl PermGroup {
    /// The group generated by a nonempty list of equal-degree permutations.
    pub fn new(generators: Vec<Permutation>) -> Result<Self> {
        let degree = generators.first().ok_or(Error::EmptyGenerators)?.degree();
        Self::with_degree(degree, generators)
    }

    /// Like [`PermGroup::new`] but accepts an empty list (the trivial group).
    pub fn with_degree(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
        let levels = schreier_sims(degree, &generators);
        let order = levels.iter().map(|l| l.orbit.len() as u64).product();
        Ok(Self {
            degree,
            generators,
            levels: Arc::new(levels),
            order,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::with_degree(degree, Vec::new()).expect("positive degree")
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n > 1 {
            gens.push(Permutation::from_cycles(n, &[&[0, 1]]).unwrap());
        }
        if n > 2 {
            let cycle: Vec<usize> = (0..n).collect();
            gens.push(Permutation::from_cycles(n, &[&cycle]).unwrap());
        }
        Self::with_degree(n, gens).expect("valid generators")
    }

    pub fn alternating(n: usize) -> Self {
        let gens = (2..n)
            .map(|k| Permutation::from_cycles(n, &[&[0, 1, k]]).unwrap())
            .collect();
        Self::with_degree(n, gens).expect("valid generators")
    }

    pub fn cyclic(n: usize) -> Self {
        let cycle: Vec<usize> = (0..n).collect();
        Self::with_degree(n, vec![Permutation::from_cycles(n, &[&cycle]).unwrap()])
            .expect("valid generators")
    }

    /// Symmetries of a regular `n`-gon, order `2n`.
    pub fn dihedral(n: usize) -> Self {
        let rot = Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).unwrap();
        let refl = Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).unwrap();
        Self::new(vec![rot, refl]).expect("valid generators")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base as usize).collect()
    }

    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for level in self.levels.iter() {
            for g in &level.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// Membership by sifting through the stabilizer chain.
    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, p.degree()));
        }
        Ok(self.is_member(p))
    }

    /// Membership test for a permutation already known to have this degree.
    pub fn is_member(&self, p: &Permutation) -> bool {
        let (residue, level) = strip(&self.levels, p, 0);
        level == self.levels.len() && residue.is_identity()
    }

    /// Position of `p` in the deterministic enumeration order, or `None` if
    /// `p` is not an element.
    pub fn rank(&self, p: &Permutation) -> Option<u64> {
        let mut g = p.clone();
        let mut rank = 0u64;
        for level in self.levels.iter() {
            let idx = level.pos[g.image(level.base as usize)];
            if idx == NONE {
                return None;
            }
            rank = rank * level.orbit.len() as u64 + idx as u64;
            if idx != 0 {
                g = g.then(&level.inv_reps[idx as usize]);
            }
        }
        g.is_identity().then_some(rank)
    }

    /// Inverse of [`PermGroup::rank`]; `rank < order`.
    pub fn unrank(&self, mut rank: u64) -> Permutation {
        assert!(rank < self.order, "rank {rank} out of range");
        let mut digits = vec![0usize; self.levels.len()];
        for (j, level) in self.levels.iter().enumerate().rev() {
            let m = level.orbit.len() as u64;
            digits[j] = (rank % m) as usize;
            rank /= m;
        }
        // g = t_{k-1} ⋯ t_1 t_0
        let mut g = self.identity();
        for (j, level) in self.levels.iter().enumerate().rev() {
            if digits[j] != 0 {
                g = g.then(&level.reps[digits[j]]);
            }
        }
        g
    }

    /// Lazily enumerates every element in rank order, without a cap.
    pub fn iter(&self) -> impl Iterator<Item = Permutation> + '_ {
        (0..self.order).map(move |r| self.unrank(r))
    }

    /// All elements in rank order; fails if the order exceeds the
    /// process-wide cap.
    pub fn elements(&self) -> Result<Vec<Permutation>> {
        self.elements_with_cap(element_cap())
    }

    pub fn elements_with_cap(&self, cap: u64) -> Result<Vec<Permutation>> {
        self.check_cap(cap)?;
        Ok(self.iter().collect())
    }

    pub(crate) fn check_cap(&self, cap: u64) -> Result<()> {
        if self.order > cap {
            return Err(Error::CapExceeded {
                order: self.order,
                cap,
            });
        }
        Ok(())
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.is_member(g))
    }

    /// Same element set.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.order == other.order && self.is_subgroup_of(other)
    }

    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other)
            && other.generators.iter().all(|g| {
                self.generators
                    .iter()
                    .all(|h| self.is_member(&h.conjugate_by(g)))
            })
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// `⟨self, g⟩`, reusing `self` when `g` is already a member.
    pub fn extended(&self, g: &Permutation) -> PermGroup {
        if self.is_member(g) {
            return self.clone();
        }
        let mut gens = self.generators.clone();
        gens.push(g.clone());
        Self::with_degree(self.degree, gens).expect("same degree")
    }

    /// Hash of the sorted element list; equal subgroups of the same degree
    /// have equal fingerprints.
    pub fn fingerprint(&self) -> Result<u64> {
        let mut elems = self.elements()?;
        elems.sort_unstable();
        let mut h = DefaultHasher::new();
        self.degree.hash(&mut h);
        elems.hash(&mut h);
        Ok(h.finish())
    }

    /// `g⁻¹ self g`.
    pub fn conjugate(&self, g: &Permutation) -> PermGroup {
        let gens = self.generators.iter().map(|h| h.conjugate_by(g)).collect();
        Self::with_degree(self.degree, gens).expect("same degree")
    }

    /// Orbits of the point set, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut i = 0;
            while i < orbit.len() {
                let x = orbit[i];
                for g in &self.generators {
                    let y = g.image(x);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order)
            .field("generators", &self.generators.len())
            .finish()
    }
}
