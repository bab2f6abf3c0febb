use super::word::{Letter, Presentation, Word};
use crate::error::{Error, Result};
use crate::permcore::Permutation;

const UNDEF: u32 = u32::MAX;

#[inline]
fn column(l: &Letter) -> usize {
    2 * l.gen + l.inverse as usize
}

/// Action of the generators (columns `2i`) and their inverses (columns
/// `2i + 1`) on cosets. Coset 0 is the subgroup itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    ngens: usize,
    ncosets: usize,
    entries: Vec<u32>,
}

impl CosetTable {
    /// A table given row by row; `rows[c][2i + inv]` is the image of coset `c`
    /// under generator `i` (or its inverse). Rows may contain gaps.
    pub fn from_rows(ngens: usize, rows: &[Vec<Option<usize>>]) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * 2 * ngens);
        for row in rows {
            if row.len() != 2 * ngens {
                return Err(Error::ShapeMismatch(format!(
                    "row of length {} for {} generators",
                    row.len(),
                    ngens
                )));
            }
            for e in row {
                match e {
                    Some(c) if *c >= rows.len() => {
                        return Err(Error::InvalidArgument(format!("coset {c} out of range")))
                    }
                    Some(c) => entries.push(*c as u32),
                    None => entries.push(UNDEF),
                }
            }
        }
        Ok(Self {
            ngens,
            ncosets: rows.len(),
            entries,
        })
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn ncosets(&self) -> usize {
        self.ncosets
    }

    pub fn entry(&self, coset: usize, gen: usize, inverse: bool) -> Option<usize> {
        let e = self.entries[coset * 2 * self.ngens + 2 * gen + inverse as usize];
        (e != UNDEF).then_some(e as usize)
    }

    pub fn is_complete(&self) -> bool {
        self.entries.iter().all(|&e| e != UNDEF)
    }

    /// Follows `word` from `coset`; `None` if an entry on the way is missing.
    pub fn trace(&self, coset: usize, word: &Word) -> Option<usize> {
        let ncols = 2 * self.ngens;
        word.letters().iter().try_fold(coset, |c, l| {
            let e = self.entries[c * ncols + column(l)];
            (e != UNDEF).then_some(e as usize)
        })
    }

    /// Checks the table is complete, each column pair is mutually inverse,
    /// every relator closes at every coset and every subgroup generator
    /// closes at coset 0.
    pub fn audit(&self, p: &Presentation, subgroup_gens: &[Word]) -> Result<()> {
        if !self.is_complete() {
            return Err(Error::IncompleteTable);
        }
        let ncols = 2 * self.ngens;
        for c in 0..self.ncosets {
            for x in 0..ncols {
                let d = self.entries[c * ncols + x] as usize;
                if self.entries[d * ncols + (x ^ 1)] as usize != c {
                    return Err(Error::TableAudit(format!("column {x} not inverse at {c}")));
                }
            }
            for (k, r) in p.relators().iter().enumerate() {
                if self.trace(c, r) != Some(c) {
                    return Err(Error::TableAudit(format!("relator {k} open at coset {c}")));
                }
            }
        }
        for (k, w) in subgroup_gens.iter().enumerate() {
            if self.trace(0, w) != Some(0) {
                return Err(Error::TableAudit(format!("subgroup generator {k} open")));
            }
        }
        Ok(())
    }
}

struct Enumerator {
    ncols: usize,
    max: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    queue: Vec<u32>,
}

impl Enumerator {
    fn new(ngens: usize, max: usize) -> Self {
        let ncols = 2 * ngens;
        Self {
            ncols,
            max,
            table: vec![UNDEF; ncols],
            parent: vec![0],
            queue: Vec::new(),
        }
    }

    fn allocated(&self) -> usize {
        self.parent.len()
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.ncols + x]
    }

    #[inline]
    fn put(&mut self, c: u32, x: usize, d: u32) {
        self.table[c as usize * self.ncols + x] = d;
    }

    fn alive(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> Result<()> {
        if self.allocated() >= self.max {
            return Err(Error::CosetOverflow { max: self.max });
        }
        let d = self.allocated() as u32;
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(UNDEF, self.ncols));
        self.put(c, x, d);
        self.put(d, x ^ 1, c);
        Ok(())
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut c = c;
        while self.parent[c as usize] != root {
            let next = self.parent[c as usize];
            self.parent[c as usize] = root;
            c = next;
        }
        root
    }

    fn merge(&mut self, k: u32, l: u32) {
        let (a, b) = (self.rep(k), self.rep(l));
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.parent[hi as usize] = lo;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for x in 0..self.ncols {
                let d = self.get(g, x);
                if d == UNDEF {
                    continue;
                }
                self.put(d, x ^ 1, UNDEF);
                let mu = self.rep(g);
                let nu = self.rep(d);
                let mu_x = self.get(mu, x);
                if mu_x != UNDEF {
                    self.merge(nu, mu_x);
                } else {
                    let nu_xi = self.get(nu, x ^ 1);
                    if nu_xi != UNDEF {
                        self.merge(mu, nu_xi);
                    } else {
                        self.put(mu, x, nu);
                        self.put(nu, x ^ 1, mu);
                    }
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: u32, w: &[usize]) -> Result<()> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0isize, w.len() as isize - 1);
        loop {
            while i <= j && self.get(f, w[i as usize]) != UNDEF {
                f = self.get(f, w[i as usize]);
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.get(b, w[j as usize] ^ 1) != UNDEF {
                b = self.get(b, w[j as usize] ^ 1);
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            } else if i == j {
                let x = w[i as usize];
                self.put(f, x, b);
                self.put(b, x ^ 1, f);
                return Ok(());
            }
            self.define(f, w[i as usize])?;
        }
    }

    /// Renumbers live cosets breadth-first from coset 0, scanning columns in
    /// order.
    fn standardize(mut self, ngens: usize) -> CosetTable {
        let n = self.allocated();
        let mut newnum = vec![UNDEF; n];
        let mut order: Vec<u32> = vec![0];
        newnum[0] = 0;
        let mut i = 0;
        while i < order.len() {
            let c = order[i];
            for x in 0..self.ncols {
                let d = self.get(c, x);
                let d = self.rep(d);
                if newnum[d as usize] == UNDEF {
                    newnum[d as usize] = order.len() as u32;
                    order.push(d);
                }
            }
            i += 1;
        }
        let mut entries = Vec::with_capacity(order.len() * self.ncols);
        for &c in &order {
            for x in 0..self.ncols {
                let d = self.get(c, x);
                let d = self.rep(d);
                entries.push(newnum[d as usize]);
            }
        }
        CosetTable {
            ngens,
            ncosets: order.len(),
            entries,
        }
    }
}

/// Enumerates the cosets of `⟨subgroup_gens⟩` in the group presented by `p`
/// (HLT strategy). Fails with [`Error::CosetOverflow`] once more than
/// `max_cosets` cosets have been defined.
pub fn todd_coxeter(
    p: &Presentation,
    subgroup_gens: &[Word],
    max_cosets: usize,
) -> Result<CosetTable> {
    if max_cosets == 0 {
        return Err(Error::InvalidArgument("max_cosets must be positive".into()));
    }
    for w in subgroup_gens {
        if let Some(m) = w.max_generator() {
            if m >= p.ngens() {
                return Err(Error::Arity {
                    index: m,
                    ngens: p.ngens(),
                });
            }
        }
    }
    let cols = |w: &Word| w.letters().iter().map(column).collect::<Vec<_>>();
    let relators: Vec<Vec<usize>> = p.relators().iter().map(cols).collect();

    let mut e = Enumerator::new(p.ngens(), max_cosets);
    for w in subgroup_gens {
        e.scan_and_fill(0, &cols(w))?;
    }
    let mut c = 0u32;
    while (c as usize) < e.allocated() {
        if e.alive(c) {
            for r in &relators {
                e.scan_and_fill(c, r)?;
                if !e.alive(c) {
                    break;
                }
            }
            if e.alive(c) {
                for x in 0..e.ncols {
                    if e.get(c, x) == UNDEF {
                        e.define(c, x)?;
                    }
                }
            }
        }
        c += 1;
    }
    let table = e.standardize(p.ngens());
    table.audit(p, subgroup_gens)?;
    Ok(table)
}

/// Permutations of the cosets induced by each generator.
pub fn perm_rep_from_table(t: &CosetTable) -> Result<Vec<Permutation>> {
    if !t.is_complete() {
        return Err(Error::IncompleteTable);
    }
    (0..t.ngens())
        .map(|i| {
            Permutation::from_images(
                (0..t.ncosets())
                    .map(|c| t.entry(c, i, false).expect("complete"))
                    .collect(),
            )
        })
        .collect()
}
