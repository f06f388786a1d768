//! New structures from old: products, the poset bridge, and embeddings.

use serde::{Deserialize, Serialize};

use crate::derived::derive_leq_p;
use crate::error::{OrdError, Result};
use crate::matrix::BoolMatrix;
use crate::setoid::{PosetRel, Setoid, StrictRel};
use crate::verdict::Verdict;

/// A pair in a product carrier. Pairs are stored flattened as
/// `left * right_len + right`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductElement {
    pub left: usize,
    pub right: usize,
}

impl ProductElement {
    #[inline]
    pub fn flatten(self, right_len: usize) -> usize {
        self.left * right_len + self.right
    }

    #[inline]
    pub fn unflatten(index: usize, right_len: usize) -> Self {
        ProductElement { left: index / right_len, right: index % right_len }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

fn unique_labels(mut labels: Vec<String>) -> Vec<String> {
    let mut seen = std::collections::HashSet::new();
    for (i, l) in labels.iter_mut().enumerate() {
        if !seen.insert(l.clone()) {
            *l = format!("{l}#{i}");
            seen.insert(l.clone());
        }
    }
    labels
}

fn pair_labels(a: &Setoid, b: &Setoid) -> Vec<String> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a.labels() {
        for y in b.labels() {
            out.push(format!("({x},{y})"));
        }
    }
    unique_labels(out)
}

/// Pair carrier with `rep` picking each pair's class representative.
fn pair_setoid(a: &Setoid, b: &Setoid, rep: impl Fn(usize, usize) -> usize) -> Setoid {
    let m = b.len();
    let reps = (0..a.len() * m).map(|k| rep(k / m, k % m)).collect();
    Setoid::from_reps(pair_labels(a, b), reps).expect("pair representatives are canonical")
}

/// Componentwise equality: `(x, y) = (x', y')` iff `x = x'` and `y = y'`.
fn cartesian_setoid(a: &Setoid, b: &Setoid) -> Setoid {
    let m = b.len();
    pair_setoid(a, b, |x, y| a.rep(x) * m + b.rep(y))
}

fn pair_relation(a: &StrictRel, b: &StrictRel, base: Setoid, less: impl Fn(usize, usize, usize, usize) -> bool) -> StrictRel {
    let m = b.len();
    let rel = BoolMatrix::from_fn(a.len() * m, |i, j| less(i / m, i % m, j / m, j % m));
    StrictRel::raw(base, rel).expect("product matrix matches its carrier")
}

/// `(x, y) < (x', y')` iff `x < x'`, or `x = x'` and `y < y'`.
pub fn lex_product(a: &StrictRel, b: &StrictRel) -> StrictRel {
    let base = cartesian_setoid(a.base(), b.base());
    pair_relation(a, b, base, |x, y, x2, y2| a.less(x, x2) || (a.eq(x, x2) && b.less(y, y2)))
}

/// Lexicographic order on a finite product, as a right fold of
/// [`lex_product`]. Elements are labelled as flat tuples. The nullary
/// product is the one-element structure `()`.
pub fn lex_product_n(parts: &[StrictRel]) -> StrictRel {
    let Some((last, init)) = parts.split_last() else {
        let unit = Setoid::identity(["()"]).expect("single label");
        return StrictRel::raw(unit, BoolMatrix::new(1)).expect("size 1");
    };
    let folded = init.iter().rev().fold(last.clone(), |acc, p| lex_product(p, &acc));
    let mut labels = vec![String::new(); folded.len()];
    for (k, label) in labels.iter_mut().enumerate() {
        let mut rest = k;
        let mut coords = Vec::with_capacity(parts.len());
        for p in parts.iter().rev() {
            coords.push(p.label(rest % p.len()));
            rest /= p.len();
        }
        coords.reverse();
        *label = format!("({})", coords.join(","));
    }
    folded.relabel(unique_labels(labels)).expect("tuple labels are distinct")
}

/// Weak lexicographic order, with `≤` read as `≤_P` on the first factor and
/// the conditional clauses evaluated as material implications:
/// `x ≤_P x'`, and `x = x'` forces `y < y'`, and `x ≠ x'` forces `x < x'`.
pub fn weak_lex_product(a: &StrictRel, b: &StrictRel) -> StrictRel {
    let leq = derive_leq_p(a);
    let base = cartesian_setoid(a.base(), b.base());
    pair_relation(a, b, base, |x, y, x2, y2| {
        leq.get(x, x2) && if a.eq(x, x2) { b.less(y, y2) } else { a.less(x, x2) }
    })
}

/// Pairs identified by one coordinate only, ordered by that coordinate.
///
/// All `|A|·|B|` pairs stay in the carrier; the coarse equality lives in the
/// setoid, so the identity on pairs is the natural map from the cartesian
/// product.
pub fn coarse_product(a: &StrictRel, b: &StrictRel, side: Side) -> StrictRel {
    let m = b.len();
    match side {
        Side::Left => {
            let base = pair_setoid(a.base(), b.base(), |x, _| a.base().rep(x) * m);
            pair_relation(a, b, base, |x, _, x2, _| a.less(x, x2))
        }
        Side::Right => {
            let base = pair_setoid(a.base(), b.base(), |_, y| b.base().rep(y));
            pair_relation(a, b, base, |_, y, _, y2| b.less(y, y2))
        }
    }
}

/// `x < y` iff `x ∼ y` and not `x = y`.
pub fn poset_to_strict(p: &PosetRel) -> StrictRel {
    let rel = BoolMatrix::from_fn(p.len(), |x, y| p.sim(x, y) && !p.eq(x, y));
    StrictRel::raw(p.base().clone(), rel).expect("same carrier")
}

/// Whether `¬(y < x)` implies `x ∼ y` for the strict relation of
/// [`poset_to_strict`]. Witness `(x, y)`.
pub fn check_star_condition(p: &PosetRel) -> Verdict {
    let s = poset_to_strict(p);
    let n = p.len();
    for x in 0..n {
        for y in 0..n {
            if !s.less(y, x) && !p.sim(x, y) {
                return Verdict::Fails(vec![x, y]);
            }
        }
    }
    Verdict::Holds
}

/// A candidate order embedding between two strict relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingMap {
    source: StrictRel,
    target: StrictRel,
    map: Vec<usize>,
}

impl EmbeddingMap {
    pub fn new(source: StrictRel, target: StrictRel, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.len() {
            return Err(OrdError::SizeMismatch { expected: source.len(), found: map.len() });
        }
        if let Some(&bad) = map.iter().find(|&&t| t >= target.len()) {
            return Err(OrdError::IndexOutOfRange { index: bad, len: target.len() });
        }
        Ok(EmbeddingMap { source, target, map })
    }

    /// Identity on a carrier shared by two relations.
    pub fn identity(source: StrictRel, target: StrictRel) -> Result<Self> {
        let map = (0..source.len()).collect();
        Self::new(source, target, map)
    }

    pub fn source(&self) -> &StrictRel {
        &self.source
    }

    pub fn target(&self) -> &StrictRel {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }
}

/// Order is reflected and preserved, and equality preserved. Witness
/// `(x, y)` for the first offending source pair.
pub fn check_embedding(e: &EmbeddingMap) -> Verdict {
    let (s, t, f) = (&e.source, &e.target, &e.map);
    let n = s.len();
    for x in 0..n {
        for y in 0..n {
            let order_ok = s.less(x, y) == t.less(f[x], f[y]);
            let eq_ok = !s.eq(x, y) || t.eq(f[x], f[y]);
            if !order_ok || !eq_ok {
                return Verdict::Fails(vec![x, y]);
            }
        }
    }
    Verdict::Holds
}

/// An embedding hitting every equality class of the target. A missed class
/// is reported by the witness `[t]` for its representative.
pub fn check_isomorphism(e: &EmbeddingMap) -> Verdict {
    let v = check_embedding(e);
    if !v.holds() {
        return v;
    }
    let t = &e.target;
    let mut hit = vec![false; t.len()];
    for &y in &e.map {
        hit[t.base().rep(y)] = true;
    }
    let missed = (0..t.len()).find(|&y| t.base().rep(y) == y && !hit[y]);
    Verdict::from_witness(missed.map(|y| vec![y]))
}
