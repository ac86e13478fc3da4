//! Noncommutative Gröbner bases for ideals of path algebras.
//!
//! Words are ordered length-lexicographically with arrows compared by
//! declaration index. Completion is Buchberger/Mora style: overlaps of
//! leading words are resolved in order of increasing overlap length and
//! leading words are kept an antichain under the subword relation.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Scalar};

use super::quiver::{Path, Quiver, RelationSet};

const MAX_REDUCTIONS: usize = 200_000;

/// A nonempty arrow word under length-lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<usize>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A linear combination of arrow words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl PathPoly {
    pub fn from_terms(terms: impl IntoIterator<Item = (Scalar, Vec<usize>)>) -> Self {
        let mut p = PathPoly::default();
        for (c, w) in terms {
            p.add_term(Word(w), c);
        }
        p
    }

    pub fn word(w: Vec<usize>, one: Scalar) -> Self {
        Self::from_terms([(one, w)])
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn tip(&self) -> Option<(&Word, &Scalar)> {
        self.terms.last_key_value()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn min_length(&self) -> usize {
        self.terms.keys().map(|w| w.0.len()).min().unwrap_or(0)
    }

    fn monic(mut self) -> Self {
        if let Some((_, c)) = self.tip() {
            let inv = c.inv();
            for v in self.terms.values_mut() {
                *v = &*v * &inv;
            }
        }
        self
    }

    /// `c * left * self * right`.
    fn sandwich(&self, c: &Scalar, left: &[usize], right: &[usize]) -> PathPoly {
        let mut out = PathPoly::default();
        for (w, k) in &self.terms {
            let mut word = Vec::with_capacity(left.len() + w.0.len() + right.len());
            word.extend_from_slice(left);
            word.extend_from_slice(&w.0);
            word.extend_from_slice(right);
            out.add_term(Word(word), c * k);
        }
        out
    }

    fn sub_assign(&mut self, other: PathPoly) {
        for (w, c) in other.terms {
            self.add_term(w, -c);
        }
    }
}

fn find_subword(hay: &[usize], needle: &[usize]) -> Option<usize> {
    if needle.len() > hay.len() {
        return None;
    }
    (0..=hay.len() - needle.len()).find(|&i| &hay[i..i + needle.len()] == needle)
}

/// A reduced, monic Gröbner basis sorted by leading word.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroebnerBasis {
    elements: Vec<PathPoly>,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[PathPoly] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn tips(&self) -> impl Iterator<Item = &Word> {
        self.elements.iter().map(|g| g.tip().expect("nonzero element").0)
    }

    /// First element whose leading word occurs in `w`, with the leftmost
    /// occurrence.
    pub fn divisor(&self, w: &[usize]) -> Option<(usize, usize)> {
        self.tips()
            .enumerate()
            .find_map(|(i, t)| find_subword(w, &t.0).map(|pos| (i, pos)))
    }

    pub fn is_reducible(&self, w: &[usize]) -> bool {
        self.divisor(w).is_some()
    }

    /// Normal form by always rewriting the largest reducible term.
    pub fn reduce(&self, p: PathPoly) -> PathPoly {
        reduce_by(&self.elements, p)
    }

    /// Normal form where `pick` chooses which rewrite to apply among all
    /// `(term, element, position)` candidates. Any choice sequence must
    /// reach the same result for a Gröbner basis.
    pub fn reduce_with(&self, mut p: PathPoly, pick: &mut dyn FnMut(usize) -> usize) -> PathPoly {
        loop {
            let mut candidates = Vec::new();
            for (w, c) in p.terms() {
                for (gi, t) in self.tips().enumerate() {
                    let tl = t.0.len();
                    if tl > w.0.len() {
                        continue;
                    }
                    for pos in 0..=w.0.len() - tl {
                        if w.0[pos..pos + tl] == t.0[..] {
                            candidates.push((w.clone(), c.clone(), gi, pos));
                        }
                    }
                }
            }
            if candidates.is_empty() {
                return p;
            }
            let (w, c, gi, pos) = candidates.swap_remove(pick(candidates.len()) % candidates.len());
            let tl = self.elements[gi].tip().unwrap().0 .0.len();
            let rewrite = self.elements[gi].sandwich(&c, &w.0[..pos], &w.0[pos + tl..]);
            p.sub_assign(rewrite);
        }
    }
}

fn reduce_by(elements: &[PathPoly], mut p: PathPoly) -> PathPoly {
    let mut result = PathPoly::default();
    while let Some((w, c)) = p.terms.pop_last() {
        let hit = elements.iter().enumerate().find_map(|(i, g)| {
            let t = g.tip().expect("nonzero element").0;
            find_subword(&w.0, &t.0).map(|pos| (i, pos, t.0.len()))
        });
        match hit {
            Some((i, pos, tl)) => {
                let g = &elements[i];
                let (left, right) = (&w.0[..pos], &w.0[pos + tl..]);
                // the leading term cancels with the popped term
                for (gw, gc) in g.terms.iter().rev().skip(1) {
                    let mut word = Vec::with_capacity(left.len() + gw.0.len() + right.len());
                    word.extend_from_slice(left);
                    word.extend_from_slice(&gw.0);
                    word.extend_from_slice(right);
                    p.add_term(Word(word), -(&c * gc));
                }
            }
            None => {
                result.terms.insert(w, c);
            }
        }
    }
    result
}

/// Output of completion: the basis plus the irreducible paths, which form a
/// vector space basis of the quotient algebra.
#[derive(Clone, Debug)]
pub struct Completion {
    pub basis: GroebnerBasis,
    pub irreducible: Vec<Path>,
    /// Length of the longest irreducible path; always `< degree_cap`.
    pub max_length: usize,
}

struct Builder {
    store: Vec<PathPoly>,
    alive: Vec<bool>,
    pending: BTreeSet<(usize, usize, usize, usize)>,
    degree_cap: usize,
    reductions: usize,
}

impl Builder {
    fn alive_elements(&self) -> Vec<PathPoly> {
        self.store
            .iter()
            .zip(&self.alive)
            .filter(|(_, a)| **a)
            .map(|(g, _)| g.clone())
            .collect()
    }

    fn normal_form(&mut self, p: PathPoly) -> Result<PathPoly> {
        self.reductions += 1;
        if self.reductions > MAX_REDUCTIONS {
            return Err(Error::NotFiniteDimensional("completion did not terminate".into()));
        }
        let alive = self.alive_elements();
        Ok(reduce_by(&alive, p))
    }

    fn insert(&mut self, p: PathPoly) -> Result<()> {
        let mut queue = VecDeque::from([p]);
        while let Some(p) = queue.pop_front() {
            let r = self.normal_form(p)?;
            if r.is_zero() {
                continue;
            }
            let r = r.monic();
            let tip = r.tip().unwrap().0.clone();
            if tip.0.len() > self.degree_cap {
                return Err(Error::NotFiniteDimensional(format!(
                    "a leading path exceeds the degree cap {}",
                    self.degree_cap
                )));
            }
            let id = self.store.len();
            for (j, g) in self.store.iter().enumerate() {
                if self.alive[j] && find_subword(&g.tip().unwrap().0 .0, &tip.0).is_some() {
                    self.alive[j] = false;
                    queue.push_back(g.clone());
                }
            }
            self.store.push(r);
            self.alive.push(true);
            for j in 0..self.store.len() {
                if !self.alive[j] {
                    continue;
                }
                self.queue_overlaps(id, j);
                if j != id {
                    self.queue_overlaps(j, id);
                }
            }
        }
        Ok(())
    }

    /// Suffixes of tip(i) that are prefixes of tip(j).
    fn queue_overlaps(&mut self, i: usize, j: usize) {
        let a = &self.store[i].tip().unwrap().0 .0;
        let b = &self.store[j].tip().unwrap().0 .0;
        for k in 1..a.len().min(b.len()) {
            if a[a.len() - k..] == b[..k] {
                self.pending.insert((a.len() + b.len() - k, i, j, k));
            }
        }
    }

    fn run(&mut self, field: FieldSpec) -> Result<()> {
        while let Some(item) = self.pending.pop_first() {
            let (_, i, j, k) = item;
            if !self.alive[i] || !self.alive[j] {
                continue;
            }
            let a = self.store[i].tip().unwrap().0 .0.clone();
            let b = self.store[j].tip().unwrap().0 .0.clone();
            let one = field.one();
            let mut s = self.store[i].sandwich(&one, &[], &b[k..]);
            s.sub_assign(self.store[j].sandwich(&one, &a[..a.len() - k], &[]));
            self.insert(s)?;
        }
        Ok(())
    }
}

/// Completes `relations` to a reduced Gröbner basis and enumerates the
/// irreducible paths, failing if one of length `degree_cap` exists.
pub fn complete(field: FieldSpec, quiver: &Quiver, relations: &RelationSet, degree_cap: usize) -> Result<Completion> {
    if degree_cap < relations.max_length() {
        return Err(Error::Precondition(format!(
            "degree cap {degree_cap} is below the longest relation ({})",
            relations.max_length()
        )));
    }
    let mut b = Builder {
        store: Vec::new(),
        alive: Vec::new(),
        pending: BTreeSet::new(),
        degree_cap,
        reductions: 0,
    };
    for rel in relations.relations() {
        b.insert(PathPoly::from_terms(rel.terms.iter().cloned()))?;
        b.run(field)?;
    }

    let mut elements = b.alive_elements();
    elements.sort_by(|x, y| x.tip().unwrap().0.cmp(y.tip().unwrap().0));
    let mut reduced = Vec::with_capacity(elements.len());
    for (i, g) in elements.iter().enumerate() {
        let (tip, _) = g.tip().unwrap();
        let others: Vec<PathPoly> = elements.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, h)| h.clone()).collect();
        let mut tail = g.clone();
        tail.terms.remove(tip);
        let mut r = reduce_by(&others, tail);
        r.add_term(tip.clone(), field.one());
        if r.min_length() < 2 {
            return Err(Error::Inadmissible(format!(
                "a relation normalizes to a combination with a path of length {}",
                r.min_length()
            )));
        }
        reduced.push(r);
    }
    let basis = GroebnerBasis { elements: reduced };

    let mut irreducible: Vec<Path> = (0..quiver.num_vertices()).map(Path::trivial).collect();
    let mut frontier = irreducible.clone();
    let mut max_length = 0;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in &frontier {
            for (ai, arrow) in quiver.arrows().iter().enumerate() {
                if arrow.source != p.target {
                    continue;
                }
                let mut word = p.arrows.clone();
                word.push(ai);
                let suffix_hit = basis.tips().any(|t| word.ends_with(&t.0));
                if suffix_hit {
                    continue;
                }
                if word.len() >= degree_cap {
                    return Err(Error::NotFiniteDimensional(format!(
                        "irreducible paths of length {degree_cap} exist"
                    )));
                }
                next.push(Path { source: p.source, target: arrow.target, arrows: word });
            }
        }
        if !next.is_empty() {
            max_length += 1;
        }
        irreducible.extend(next.iter().cloned());
        frontier = next;
    }
    irreducible.sort();
    Ok(Completion { basis, irreducible, max_length })
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn labels(q: &Quiver, c: &Completion) -> Vec<String> {
        c.irreducible.iter().map(|p| p.label(q)).collect()
    }

    #[test]
    fn hereditary_a2_has_no_relations() {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let c = complete(Q, &q, &RelationSet::default(), 5).unwrap();
        assert!(c.basis.is_empty());
        assert_eq!(labels(&q, &c), ["e1", "e2", "a"]);
    }

    #[test]
    fn loop_squared() {
        let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let r = RelationSet::from_labels(&q, Q, &[vec![(1, vec!["x", "x"])]]).unwrap();
        let c = complete(Q, &q, &r, 5).unwrap();
        assert_eq!(c.basis.len(), 1);
        assert_eq!(c.basis.tips().next().unwrap().0, vec![0, 0]);
        assert_eq!(labels(&q, &c), ["e1", "x"]);
    }

    #[test]
    fn two_cycle_with_one_zero_relation() {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        let r = RelationSet::from_labels(&q, Q, &[vec![(1, vec!["a", "b"])]]).unwrap();
        let c = complete(Q, &q, &r, 6).unwrap();
        assert_eq!(labels(&q, &c), ["e1", "e2", "a", "b", "b*a"]);
    }

    #[test]
    fn free_loop_is_not_finite() {
        let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let err = complete(Q, &q, &RelationSet::default(), 6).unwrap_err();
        assert!(matches!(err, Error::NotFiniteDimensional(_)));
    }

    #[test]
    fn overlap_produces_new_element() {
        // x^2 - y^2, xy, yx: the overlap of xy with y^2 yields x^3.
        let q = Quiver::new(&["1"], &[("x", "1", "1"), ("y", "1", "1")]).unwrap();
        let r = RelationSet::from_labels(
            &q,
            Q,
            &[vec![(1, vec!["x", "x"]), (-1, vec!["y", "y"])], vec![(1, vec!["x", "y"])], vec![(1, vec!["y", "x"])]],
        )
        .unwrap();
        let c = complete(Q, &q, &r, 8).unwrap();
        assert_eq!(labels(&q, &c), ["e1", "x", "y", "x*x"]);
        assert!(c.basis.tips().any(|t| t.0 == vec![0, 0, 0]));
    }

    #[test]
    fn cap_below_relation_length_is_rejected() {
        let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let r = RelationSet::from_labels(&q, Q, &[vec![(1, vec!["x", "x", "x"])]]).unwrap();
        assert!(matches!(complete(Q, &q, &r, 2), Err(Error::Precondition(_))));
    }
}
