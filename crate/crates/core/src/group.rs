//! Free-group words, finite presentations, and bounded searches over them.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::lattice;

/// A word in free generators. Letter `g + 1` is generator `g`, `-(g + 1)` its
/// inverse.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Word(pub Vec<i32>);

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn gen(g: usize) -> Word {
        Word(vec![g as i32 + 1])
    }

    /// Word from (generator, exponent) pairs, reduced.
    pub fn from_powers(powers: &[(usize, i64)]) -> Word {
        let mut v = Vec::new();
        for &(g, e) in powers {
            let l = if e >= 0 { g as i32 + 1 } else { -(g as i32 + 1) };
            v.extend(std::iter::repeat_n(l, e.unsigned_abs() as usize));
        }
        Word(v).reduced()
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| -l).collect())
    }

    pub fn reduced(&self) -> Word {
        let mut out: Vec<i32> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn is_identity(&self) -> bool {
        self.reduced().is_empty()
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v).reduced()
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `g w g^-1`, reduced.
    pub fn conjugate_by(&self, g: &Word) -> Word {
        g.mul(self).mul(&g.inverse())
    }

    pub fn cyclically_reduced(&self) -> Word {
        let mut v = self.reduced().0;
        while v.len() >= 2 && v[0] == -v[v.len() - 1] {
            v.pop();
            v.remove(0);
        }
        Word(v)
    }

    pub fn rotated(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let k = k % self.0.len();
        let mut v = self.0[k..].to_vec();
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    pub fn exponent_sum(&self, g: usize) -> i64 {
        self.0
            .iter()
            .map(|&l| if l == g as i32 + 1 { 1 } else if l == -(g as i32 + 1) { -1 } else { 0 })
            .sum()
    }

    pub fn abelianized(&self, gens: usize) -> Vec<i64> {
        (0..gens).map(|g| self.exponent_sum(g)).collect()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.unsigned_abs() as usize - 1).max()
    }

    /// Replaces generator `g` by `image` everywhere.
    pub fn substitute(&self, g: usize, image: &Word) -> Word {
        let inv = image.inverse();
        let mut v = Vec::new();
        for &l in &self.0 {
            if l == g as i32 + 1 {
                v.extend_from_slice(&image.0);
            } else if l == -(g as i32 + 1) {
                v.extend_from_slice(&inv.0);
            } else {
                v.push(l);
            }
        }
        Word(v).reduced()
    }

    /// Renumbers generators: `g` becomes `f(g)`.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Word {
        Word(
            self.0
                .iter()
                .map(|&l| {
                    let g = f(l.unsigned_abs() as usize - 1) as i32 + 1;
                    if l > 0 { g } else { -g }
                })
                .collect(),
        )
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&l| {
                let g = l.unsigned_abs() as usize - 1;
                let name = names.get(g).cloned().unwrap_or_else(|| format!("x{g}"));
                if l > 0 { name } else { format!("{name}^-1") }
            })
            .collect();
        parts.join(" ")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&[]))
    }
}

/// A finite presentation with named generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Presentation {
        Presentation { generators, relators: relators.iter().map(Word::reduced).collect() }
    }

    pub fn trivial() -> Presentation {
        Presentation { generators: Vec::new(), relators: Vec::new() }
    }

    pub fn relation_matrix(&self) -> Vec<Vec<i64>> {
        self.relators.iter().map(|r| r.abelianized(self.generators.len())).collect()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> =
            self.relators.iter().map(|r| r.display_with(&self.generators)).collect();
        write!(f, "< {} | {} >", self.generators.join(", "), rels.join(", "))
    }
}

/// Outcome of [`trivialize`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TietzeTrace {
    pub trivial: bool,
    pub moves: usize,
    pub steps: Vec<String>,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct State {
    gens: Vec<usize>,
    rels: Vec<Word>,
}

impl State {
    fn normalize(mut self) -> State {
        let mut rels: Vec<Word> = self
            .rels
            .iter()
            .map(|r| canonical_cyclic(&r.cyclically_reduced()))
            .filter(|r| !r.is_empty())
            .collect();
        rels.sort();
        rels.dedup();
        self.rels = rels;
        self
    }

    fn cost(&self) -> (usize, usize) {
        (self.gens.len(), self.rels.iter().map(Word::len).sum())
    }
}

/// Least rotation of `w` or its inverse, so conjugate relators compare equal.
fn canonical_cyclic(w: &Word) -> Word {
    let inv = w.inverse();
    (0..w.len().max(1))
        .flat_map(|k| [w.rotated(k), inv.rotated(k)])
        .min()
        .unwrap_or_default()
}

/// Eliminates a generator that some relator uses exactly once.
fn eliminate_once(s: &State) -> Option<(State, String)> {
    for (ri, r) in s.rels.iter().enumerate() {
        for &g in &s.gens {
            let pos: Vec<usize> =
                (0..r.len()).filter(|&i| r.0[i].unsigned_abs() as usize == g + 1).collect();
            if pos.len() != 1 {
                continue;
            }
            // rotate so the letter comes first: g^e u = 1, so g = u^-e
            let rot = r.rotated(pos[0]);
            let e = rot.0[0];
            let rest = Word(rot.0[1..].to_vec());
            let image = if e > 0 { rest.inverse() } else { rest };
            let rels = s
                .rels
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != ri)
                .map(|(_, w)| w.substitute(g, &image))
                .collect();
            let gens = s.gens.iter().copied().filter(|&h| h != g).collect();
            let msg = format!("eliminate x{g} = {image}");
            return Some((State { gens, rels }.normalize(), msg));
        }
    }
    None
}

/// Bounded best-first Tietze search for the trivial presentation.
pub fn trivialize(p: &Presentation, budget: usize) -> TietzeTrace {
    let start = State { gens: (0..p.generators.len()).collect(), rels: p.relators.clone() }.normalize();
    let mut moves = 0;
    let mut seen = HashSet::new();
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((start.cost(), start.clone(), Vec::<String>::new())));
    seen.insert(start);
    while let Some(Reverse((_, mut s, mut steps))) = heap.pop() {
        // greedy eliminations cost one move each
        while let Some((next, msg)) = eliminate_once(&s) {
            moves += 1;
            steps.push(msg);
            s = next;
            if moves >= budget {
                return TietzeTrace { trivial: s.gens.is_empty(), moves, steps };
            }
        }
        if s.gens.is_empty() {
            return TietzeTrace { trivial: true, moves, steps };
        }
        for i in 0..s.rels.len() {
            for j in 0..s.rels.len() {
                if i == j {
                    continue;
                }
                for k in 0..s.rels[j].len() {
                    for sign in [1i64, -1] {
                        moves += 1;
                        if moves >= budget {
                            return TietzeTrace { trivial: false, moves, steps };
                        }
                        let other = s.rels[j].rotated(k).pow(sign);
                        let mut rels = s.rels.clone();
                        rels[i] = s.rels[i].mul(&other);
                        let next = State { gens: s.gens.clone(), rels }.normalize();
                        if seen.insert(next.clone()) {
                            let mut st = steps.clone();
                            st.push(format!("r{i} *= rot(r{j}, {k})^{sign}"));
                            heap.push(Reverse((next.cost(), next, st)));
                        }
                    }
                }
            }
        }
    }
    TietzeTrace { trivial: false, moves, steps: Vec::new() }
}

/// One factor `g r^e g^-1` of a conjugate product.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ConjugateFactor {
    pub conjugator: Word,
    pub relator: usize,
    pub exponent: i8,
}

/// A product of conjugates of relators.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ConjugateProduct(pub Vec<ConjugateFactor>);

impl ConjugateProduct {
    pub fn evaluate(&self, relators: &[Word]) -> Word {
        self.0.iter().fold(Word::identity(), |acc, f| {
            acc.mul(&relators[f.relator].pow(f.exponent as i64).conjugate_by(&f.conjugator))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Obstruction {
    /// Target's abelianization is not in the span of the relators'.
    Abelianization { target: usize },
    /// Search exhausted its budget.
    Budget { target: usize },
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstruction::Abelianization { target } => {
                write!(f, "target {target} is not in the normal closure: abelianization obstruction")
            }
            Obstruction::Budget { target } => write!(f, "search budget exhausted on target {target}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConjugateSearch {
    Found(Vec<ConjugateProduct>),
    Unknown(Obstruction),
}

/// Writes each target as a product of conjugates of relators, if a bounded
/// search finds one. Every answer is checked by free reduction.
pub fn express_as_conjugates(targets: &[Word], relators: &[Word], budget: usize) -> ConjugateSearch {
    let gens = targets
        .iter()
        .chain(relators)
        .filter_map(Word::max_generator)
        .max()
        .map_or(0, |g| g + 1);
    let matrix: Vec<Vec<i64>> = relators.iter().map(|r| r.abelianized(gens)).collect();
    let mut out = Vec::new();
    for (ti, t) in targets.iter().enumerate() {
        if !lattice::in_row_span(&matrix, &t.abelianized(gens)) {
            return ConjugateSearch::Unknown(Obstruction::Abelianization { target: ti });
        }
        match search_one(t, relators, budget) {
            Some(p) => {
                debug_assert_eq!(p.evaluate(relators), t.reduced());
                out.push(p);
            }
            None => return ConjugateSearch::Unknown(Obstruction::Budget { target: ti }),
        }
    }
    ConjugateSearch::Found(out)
}

fn search_one(target: &Word, relators: &[Word], budget: usize) -> Option<ConjugateProduct> {
    // residual u: target = (chosen factors) * u; finish when u is trivial
    let start = target.reduced();
    let mut heap = BinaryHeap::new();
    let mut seen = HashSet::new();
    heap.push(Reverse((start.len(), 0usize, start.clone(), Vec::<ConjugateFactor>::new())));
    seen.insert(start);
    let mut spent = 0;
    while let Some(Reverse((_, depth, u, factors))) = heap.pop() {
        if u.is_empty() {
            let p = ConjugateProduct(factors);
            return (p.evaluate(relators) == target.reduced()).then_some(p);
        }
        for cut in 0..=u.len() {
            let g = Word(u.0[..cut].to_vec());
            for (ri, r) in relators.iter().enumerate() {
                for e in [1i8, -1] {
                    spent += 1;
                    if spent > budget {
                        return None;
                    }
                    let c = r.pow(e as i64).conjugate_by(&g);
                    let next = c.inverse().mul(&u);
                    if seen.insert(next.clone()) {
                        let mut f = factors.clone();
                        f.push(ConjugateFactor { conjugator: g.clone(), relator: ri, exponent: e });
                        heap.push(Reverse((next.len() + depth + 1, depth + 1, next, f)));
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(e: i64) -> Word {
        Word::from_powers(&[(0, e)])
    }

    #[test]
    fn free_reduction() {
        let w = Word(vec![1, 2, -2, -1, 1]);
        assert_eq!(w.reduced(), Word(vec![1]));
        assert_eq!(Word(vec![2, 1, -2]).cyclically_reduced(), Word(vec![1]));
        assert!(w.mul(&w.inverse()).is_identity());
    }

    #[test]
    fn substitution_and_relabel() {
        let w = Word(vec![1, 2, -1]);
        assert_eq!(w.substitute(1, &Word(vec![1, 1])), Word(vec![1, 1, 1, -1]).reduced());
        assert_eq!(w.relabel(|g| g + 2), Word(vec![3, 4, -3]));
    }

    #[test]
    fn trivial_presentations() {
        let p = Presentation::new(vec!["x".into()], vec![x(1)]);
        assert!(trivialize(&p, 100).trivial);
        assert!(trivialize(&Presentation::trivial(), 1).trivial);
        let z = Presentation::new(vec!["x".into()], vec![]);
        assert!(!trivialize(&z, 100).trivial);
    }

    #[test]
    fn needs_a_product_move() {
        // <x, y | x^2 y^3, x^3 y^4>: every generator occurs several times
        let a = Word::from_powers(&[(0, 2), (1, 3)]);
        let b = Word::from_powers(&[(0, 3), (1, 4)]);
        let p = Presentation::new(vec!["x".into(), "y".into()], vec![a, b]);
        assert!(trivialize(&p, 10_000).trivial);
    }

    #[test]
    fn conjugate_expressions() {
        match express_as_conjugates(&[x(1)], &[x(1)], 100) {
            ConjugateSearch::Found(ps) => assert_eq!(ps[0].evaluate(&[x(1)]), x(1)),
            other => panic!("{other:?}"),
        }
        let rels = [x(2), x(3)];
        match express_as_conjugates(&[x(1)], &rels, 1000) {
            ConjugateSearch::Found(ps) => assert_eq!(ps[0].evaluate(&rels), x(1)),
            other => panic!("{other:?}"),
        }
        let y = Word::gen(1);
        assert_eq!(
            express_as_conjugates(&[x(1)], &[y], 1000),
            ConjugateSearch::Unknown(Obstruction::Abelianization { target: 0 })
        );
    }
}
