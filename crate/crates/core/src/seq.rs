//! Lexicographic order on `X^ℕ`, restricted to eventually-constant sequences.
//!
//! An eventually-constant sequence is a finite prefix followed by a tail value
//! repeated forever. For these, both pointwise equality and the lexicographic
//! comparison are decided by looking one position past the longer prefix.
//! Arbitrary generators only get a fuel-bounded scan, since stream equality
//! is a universal statement.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{OrdError, Result};
use crate::matrix::BoolMatrix;
use crate::setoid::{Setoid, StrictRel};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvConstSeq {
    base: Arc<StrictRel>,
    prefix: Vec<usize>,
    tail: usize,
}

impl EvConstSeq {
    /// Validates indices; does not normalize.
    pub fn new(base: Arc<StrictRel>, prefix: Vec<usize>, tail: usize) -> Result<Self> {
        let n = base.len();
        if let Some(&bad) = prefix.iter().chain(std::iter::once(&tail)).find(|&&i| i >= n) {
            return Err(OrdError::IndexOutOfRange { index: bad, len: n });
        }
        Ok(EvConstSeq { base, prefix, tail })
    }

    pub fn from_labels<S: AsRef<str>>(base: Arc<StrictRel>, prefix: &[S], tail: &str) -> Result<Self> {
        let idx = |l: &str| base.base().index_of(l);
        let prefix = prefix.iter().map(|l| idx(l.as_ref())).collect::<Result<Vec<_>>>()?;
        let tail = idx(tail)?;
        Self::new(base, prefix, tail)
    }

    pub fn constant(base: Arc<StrictRel>, value: usize) -> Result<Self> {
        Self::new(base, Vec::new(), value)
    }

    pub fn base(&self) -> &Arc<StrictRel> {
        &self.base
    }

    pub fn prefix(&self) -> &[usize] {
        &self.prefix
    }

    pub fn tail(&self) -> usize {
        self.tail
    }

    #[inline]
    pub fn at(&self, k: usize) -> usize {
        self.prefix.get(k).copied().unwrap_or(self.tail)
    }

    pub fn is_normal(&self) -> bool {
        self.prefix.last().is_none_or(|&last| !self.base.base().eq(last, self.tail))
    }

    /// Drops trailing prefix entries equal to the tail.
    pub fn normalized(&self) -> Self {
        let mut prefix = self.prefix.clone();
        while prefix.last().is_some_and(|&last| self.base.base().eq(last, self.tail)) {
            prefix.pop();
        }
        EvConstSeq { base: Arc::clone(&self.base), prefix, tail: self.tail }
    }

    /// Pointwise equality under the base setoid.
    pub fn pointwise_eq(&self, other: &EvConstSeq) -> bool {
        let horizon = self.prefix.len().max(other.prefix.len());
        (0..=horizon).all(|k| self.base.base().eq(self.at(k), other.at(k)))
    }
}

impl fmt::Display for EvConstSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<&str> = self.prefix.iter().map(|&i| self.base.label(i)).collect();
        write!(f, "[{}]({})", labels.join(","), self.base.label(self.tail))
    }
}

pub fn seq_normalize(s: &EvConstSeq) -> EvConstSeq {
    s.normalized()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum SeqVerdict {
    /// `f < g`, witnessed at the first position where they differ.
    Less { witness: usize },
    Greater { witness: usize },
    Equal,
    /// First difference is at `witness` but neither value is below the other.
    Incomparable { witness: usize },
    /// Bounded scan found no difference in positions `0..fuel`.
    UnknownAfter { fuel: usize },
}

impl SeqVerdict {
    pub fn witness(&self) -> Option<usize> {
        match *self {
            SeqVerdict::Less { witness } | SeqVerdict::Greater { witness } | SeqVerdict::Incomparable { witness } => {
                Some(witness)
            }
            _ => None,
        }
    }

    fn at_difference(base: &StrictRel, k: usize, x: usize, y: usize) -> SeqVerdict {
        if base.less(x, y) {
            SeqVerdict::Less { witness: k }
        } else if base.less(y, x) {
            SeqVerdict::Greater { witness: k }
        } else {
            SeqVerdict::Incomparable { witness: k }
        }
    }
}

fn same_base(f: &EvConstSeq, g: &EvConstSeq) -> bool {
    Arc::ptr_eq(&f.base, &g.base) || *f.base == *g.base
}

/// Exact lexicographic comparison.
pub fn seq_compare(f: &EvConstSeq, g: &EvConstSeq) -> Result<SeqVerdict> {
    if !same_base(f, g) {
        return Err(OrdError::MismatchedBase);
    }
    let base = &*f.base;
    let horizon = f.prefix.len().max(g.prefix.len());
    for k in 0..=horizon {
        let (x, y) = (f.at(k), g.at(k));
        if !base.eq(x, y) {
            return Ok(SeqVerdict::at_difference(base, k, x, y));
        }
    }
    Ok(SeqVerdict::Equal)
}

/// Scans positions `0..fuel` of two generators. Never returns `Equal`.
pub fn seq_compare_bounded(
    base: &StrictRel,
    f: impl Fn(usize) -> usize,
    g: impl Fn(usize) -> usize,
    fuel: usize,
) -> Result<SeqVerdict> {
    let n = base.len();
    for k in 0..fuel {
        let (x, y) = (f(k), g(k));
        for v in [x, y] {
            if v >= n {
                return Err(OrdError::IndexOutOfRange { index: v, len: n });
            }
        }
        if !base.eq(x, y) {
            return Ok(SeqVerdict::at_difference(base, k, x, y));
        }
    }
    Ok(SeqVerdict::UnknownAfter { fuel })
}

/// Every normalized sequence with prefix length at most `max_prefix_len`,
/// one per pointwise-equality class. Entries are class representatives.
/// Ordered by prefix length, then tail, then prefix lexicographically.
pub fn seq_universe(base: Arc<StrictRel>, max_prefix_len: usize) -> Vec<EvConstSeq> {
    let reps: Vec<usize> = (0..base.len()).filter(|&i| base.base().rep(i) == i).collect();
    let mut out = Vec::new();
    let k = reps.len();
    for len in 0..=max_prefix_len {
        for &tail in &reps {
            for code in 0..k.pow(len as u32) {
                // most significant digit first
                let prefix: Vec<usize> =
                    (0..len).map(|p| reps[code / k.pow((len - 1 - p) as u32) % k]).collect();
                if prefix.last().is_none_or(|&last| last != tail) {
                    out.push(EvConstSeq { base: Arc::clone(&base), prefix, tail });
                }
            }
        }
    }
    out
}

/// The lexicographic order restricted to a finite set of sequences, as a
/// strict relation whose equality is pointwise equality.
pub fn universe_relation(universe: &[EvConstSeq]) -> Result<StrictRel> {
    let n = universe.len();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..i {
            if universe[i].pointwise_eq(&universe[j]) {
                pairs.push((i, j));
            }
        }
    }
    let labels = universe.iter().map(ToString::to_string).collect();
    let base = Setoid::from_index_pairs(labels, &pairs)?;
    let mut rel = BoolMatrix::new(n);
    for i in 0..n {
        for j in 0..n {
            if matches!(seq_compare(&universe[i], &universe[j])?, SeqVerdict::Less { .. }) {
                rel.set(i, j, true);
            }
        }
    }
    StrictRel::from_matrix(base, rel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::gallery::non_cotransitive_example;

    fn chain2() -> Arc<StrictRel> {
        Arc::new(StrictRel::chain(2))
    }

    fn seq(base: &Arc<StrictRel>, prefix: &[usize], tail: usize) -> EvConstSeq {
        EvConstSeq::new(Arc::clone(base), prefix.to_vec(), tail).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let b = chain2();
        assert_eq!(seq(&b, &[0, 1, 1], 1).normalized(), seq(&b, &[0], 1));
        assert_eq!(seq(&b, &[], 0).normalized(), seq(&b, &[], 0));
        assert_eq!(seq(&b, &[1, 0], 0).normalized(), seq(&b, &[1], 0));
        assert!(EvConstSeq::new(b, vec![2], 0).is_err());
    }

    #[test]
    fn compare_examples() {
        let b = chain2();
        assert_eq!(seq_compare(&seq(&b, &[], 0), &seq(&b, &[0, 0, 1], 1)).unwrap(), SeqVerdict::Less { witness: 2 });
        assert_eq!(seq_compare(&seq(&b, &[], 0), &seq(&b, &[], 0)).unwrap(), SeqVerdict::Equal);
        let x = Arc::new(non_cotransitive_example());
        assert_eq!(seq_compare(&seq(&x, &[], 0), &seq(&x, &[], 2)).unwrap(), SeqVerdict::Incomparable { witness: 0 });
        assert_eq!(seq_compare(&seq(&b, &[1], 0), &seq(&b, &[0], 1)).unwrap(), SeqVerdict::Greater { witness: 0 });
    }

    #[test]
    fn compare_rejects_mismatched_bases() {
        let f = seq(&chain2(), &[], 0);
        let g = seq(&Arc::new(StrictRel::chain(3)), &[], 0);
        assert_eq!(seq_compare(&f, &g), Err(OrdError::MismatchedBase));
        // structurally equal bases are accepted
        let h = seq(&chain2(), &[], 1);
        assert!(seq_compare(&f, &h).is_ok());
    }

    #[test]
    fn bounded_examples() {
        let b = StrictRel::chain(2);
        assert_eq!(seq_compare_bounded(&b, |_| 0, |_| 0, 5).unwrap(), SeqVerdict::UnknownAfter { fuel: 5 });
        let g = |n: usize| usize::from(n == 3);
        assert_eq!(seq_compare_bounded(&b, |_| 0, g, 10).unwrap(), SeqVerdict::Less { witness: 3 });
        assert_eq!(seq_compare_bounded(&b, |_| 0, g, 0).unwrap(), SeqVerdict::UnknownAfter { fuel: 0 });
        assert!(seq_compare_bounded(&b, |_| 7, |_| 0, 1).is_err());
    }

    #[test]
    fn universe_sizes() {
        assert_eq!(seq_universe(chain2(), 0).len(), 2);
        assert_eq!(seq_universe(chain2(), 1).len(), 4);
        assert_eq!(seq_universe(chain2(), 3).len(), 16);
        assert_eq!(seq_universe(Arc::new(StrictRel::empty(1)), 4).len(), 1);
        assert_eq!(seq_universe(Arc::new(StrictRel::chain(3)), 2).len(), 3 * (1 + 2 + 6));
    }

    #[test]
    fn universe_collapses_equal_elements() {
        let s = Setoid::new(["a", "b"], [("a", "b")]).unwrap();
        let base = Arc::new(StrictRel::from_index_pairs(s, &[]).unwrap());
        assert_eq!(seq_universe(base, 3).len(), 1);
    }

    #[test]
    fn universe_relation_of_chain_is_total() {
        let r = universe_relation(&seq_universe(chain2(), 2)).unwrap();
        assert!(crate::axioms::classify(&r).is_ordered_set());
    }

    #[test]
    fn display() {
        assert_eq!(seq(&chain2(), &[0, 1], 0).to_string(), "[0,1](0)");
    }
}
