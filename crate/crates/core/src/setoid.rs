//! Finite carriers with a user-supplied equality, and the relations that live
//! on them.
//!
//! Elements are dense indices `0..n`; labels exist only for I/O. Equality is
//! kept as a map from each element to the smallest index of its class, so
//! `eq(i, j)` is a single comparison.

use crate::error::{OrdError, Result};
use crate::matrix::BoolMatrix;
use crate::verdict::Verdict;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Setoid {
    labels: Vec<String>,
    class_rep: Vec<usize>,
}

impl Setoid {
    /// Builds the setoid whose equality is the equivalence closure of
    /// `equal_pairs`.
    pub fn new<L, P, A, B>(labels: L, equal_pairs: P) -> Result<Self>
    where
        L: IntoIterator,
        L::Item: Into<String>,
        P: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let labels = collect_labels(labels)?;
        let mut pairs = Vec::new();
        for (a, b) in equal_pairs {
            pairs.push((lookup(&labels, a.as_ref())?, lookup(&labels, b.as_ref())?));
        }
        Self::from_index_pairs(labels, &pairs)
    }

    pub fn identity<L>(labels: L) -> Result<Self>
    where
        L: IntoIterator,
        L::Item: Into<String>,
    {
        Self::from_index_pairs(collect_labels(labels)?, &[])
    }

    /// Identity setoid labelled `"0"`, `"1"`, ...
    pub fn numbered(n: usize) -> Self {
        Setoid {
            labels: (0..n).map(|i| i.to_string()).collect(),
            class_rep: (0..n).collect(),
        }
    }

    pub fn from_index_pairs(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        check_distinct(&labels)?;
        let n = labels.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for &(a, b) in pairs {
            for idx in [a, b] {
                if idx >= n {
                    return Err(OrdError::IndexOutOfRange { index: idx, len: n });
                }
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            // roots are always class minima
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            parent[hi] = lo;
        }
        let class_rep = (0..n).map(|i| find(&mut parent, i)).collect();
        Ok(Setoid { labels, class_rep })
    }

    /// Accepts an explicit representative map, which must already be in
    /// canonical form (each element points at the smallest index of its class).
    pub fn from_reps(labels: Vec<String>, class_rep: Vec<usize>) -> Result<Self> {
        check_distinct(&labels)?;
        if class_rep.len() != labels.len() {
            return Err(OrdError::SizeMismatch { expected: labels.len(), found: class_rep.len() });
        }
        for (i, &r) in class_rep.iter().enumerate() {
            if r > i || class_rep[r] != r {
                return Err(OrdError::BadRepresentative(i));
            }
        }
        Ok(Setoid { labels, class_rep })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    #[inline]
    pub fn eq(&self, i: usize, j: usize) -> bool {
        self.class_rep[i] == self.class_rep[j]
    }

    #[inline]
    pub fn rep(&self, i: usize) -> usize {
        self.class_rep[i]
    }

    pub fn reps(&self) -> &[usize] {
        &self.class_rep
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        lookup(&self.labels, label)
    }

    pub fn is_identity(&self) -> bool {
        self.class_rep.iter().enumerate().all(|(i, &r)| i == r)
    }

    pub fn class_count(&self) -> usize {
        self.class_rep.iter().enumerate().filter(|&(i, &r)| i == r).count()
    }

    /// Classes in order of their representatives.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; self.len()];
        for (i, &r) in self.class_rep.iter().enumerate() {
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(i);
        }
        out
    }

    /// Non-trivial `(element, representative)` pairs; enough to rebuild the
    /// equality with [`Setoid::from_index_pairs`].
    pub fn equal_pairs(&self) -> Vec<(usize, usize)> {
        self.class_rep.iter().enumerate().filter(|&(i, &r)| i != r).map(|(i, &r)| (i, r)).collect()
    }

    /// Every equivalence relation on `n` numbered elements, as setoids in
    /// restricted-growth order.
    pub fn all_partitions(n: usize) -> Vec<Setoid> {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let mut out = Vec::new();
        let mut reps = Vec::with_capacity(n);
        fn go(i: usize, n: usize, reps: &mut Vec<usize>, labels: &[String], out: &mut Vec<Setoid>) {
            if i == n {
                out.push(Setoid { labels: labels.to_vec(), class_rep: reps.clone() });
                return;
            }
            // existing classes in representative order, then a fresh one
            let existing: Vec<usize> = (0..i).filter(|&k| reps[k] == k).collect();
            for r in existing.into_iter().chain(std::iter::once(i)) {
                reps.push(r);
                go(i + 1, n, reps, labels, out);
                reps.pop();
            }
        }
        go(0, n, &mut reps, &labels, &mut out);
        out
    }
}

fn collect_labels<L>(labels: L) -> Result<Vec<String>>
where
    L: IntoIterator,
    L::Item: Into<String>,
{
    let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
    check_distinct(&labels)?;
    Ok(labels)
}

fn check_distinct(labels: &[String]) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(OrdError::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

fn lookup(labels: &[String], label: &str) -> Result<usize> {
    labels
        .iter()
        .position(|l| l == label)
        .ok_or_else(|| OrdError::UnknownLabel(label.to_string()))
}

fn check_size(base: &Setoid, m: &BoolMatrix) -> Result<()> {
    if m.size() != base.len() {
        return Err(OrdError::SizeMismatch { expected: base.len(), found: m.size() });
    }
    Ok(())
}

/// Closes `m` under setoid equality in both arguments.
fn saturate(base: &Setoid, m: &BoolMatrix) -> BoolMatrix {
    let n = base.len();
    let mut by_class = BoolMatrix::new(n);
    for (i, j) in m.pairs() {
        by_class.set(base.rep(i), base.rep(j), true);
    }
    BoolMatrix::from_fn(n, |i, j| by_class.get(base.rep(i), base.rep(j)))
}

/// First `(x, x', y, y')` with `x = x'`, `y = y'`, `m[x][y]` and not `m[x'][y']`.
///
/// Substitutes one argument at a time (left first); the two single-argument
/// conditions together are equivalent to the four-variable one.
fn well_defined_witness(base: &Setoid, m: &BoolMatrix) -> Option<Vec<usize>> {
    let n = base.len();
    for (x, y) in m.pairs() {
        if let Some(x2) = (0..n).find(|&x2| base.eq(x, x2) && !m.get(x2, y)) {
            return Some(vec![x, x2, y, y]);
        }
        if let Some(y2) = (0..n).find(|&y2| base.eq(y, y2) && !m.get(x, y2)) {
            return Some(vec![x, x, y, y2]);
        }
    }
    None
}

fn ill_defined(w: Vec<usize>) -> OrdError {
    OrdError::IllDefined((w[0], w[2]), (w[1], w[3]))
}

/// A strict relation `<` over a setoid. Values built through the saturating
/// constructors are always well defined; [`StrictRel::raw`] keeps whatever it
/// is given so that untrusted matrices can be validated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StrictRel {
    base: Setoid,
    rel: BoolMatrix,
}

impl StrictRel {
    pub fn new<P, A, B>(base: Setoid, less_pairs: P) -> Result<Self>
    where
        P: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut pairs = Vec::new();
        for (a, b) in less_pairs {
            pairs.push((base.index_of(a.as_ref())?, base.index_of(b.as_ref())?));
        }
        Self::from_index_pairs(base, &pairs)
    }

    pub fn from_index_pairs(base: Setoid, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = base.len();
        let mut m = BoolMatrix::new(n);
        for &(a, b) in pairs {
            for idx in [a, b] {
                if idx >= n {
                    return Err(OrdError::IndexOutOfRange { index: idx, len: n });
                }
            }
            m.set(a, b, true);
        }
        let rel = saturate(&base, &m);
        Ok(StrictRel { base, rel })
    }

    /// Saturating constructor from a full matrix.
    pub fn saturated(base: Setoid, m: &BoolMatrix) -> Result<Self> {
        check_size(&base, m)?;
        let rel = saturate(&base, m);
        Ok(StrictRel { base, rel })
    }

    /// Rejects matrices that do not respect equality.
    pub fn from_matrix(base: Setoid, rel: BoolMatrix) -> Result<Self> {
        check_size(&base, &rel)?;
        if let Some(w) = well_defined_witness(&base, &rel) {
            return Err(ill_defined(w));
        }
        Ok(StrictRel { base, rel })
    }

    /// No validation beyond the size; see [`check_well_defined`].
    pub fn raw(base: Setoid, rel: BoolMatrix) -> Result<Self> {
        check_size(&base, &rel)?;
        Ok(StrictRel { base, rel })
    }

    /// The chain `0 < 1 < ... < n-1`, transitively closed.
    pub fn chain(n: usize) -> Self {
        StrictRel { base: Setoid::numbered(n), rel: BoolMatrix::from_fn(n, |i, j| i < j) }
    }

    /// Numbered identity setoid with no related pairs.
    pub fn empty(n: usize) -> Self {
        StrictRel { base: Setoid::numbered(n), rel: BoolMatrix::new(n) }
    }

    #[inline]
    pub fn less(&self, i: usize, j: usize) -> bool {
        self.rel.get(i, j)
    }

    #[inline]
    pub fn eq(&self, i: usize, j: usize) -> bool {
        self.base.eq(i, j)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.base.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    pub fn base(&self) -> &Setoid {
        &self.base
    }

    pub fn matrix(&self) -> &BoolMatrix {
        &self.rel
    }

    pub fn label(&self, i: usize) -> &str {
        self.base.label(i)
    }

    /// Same carrier, transposed relation.
    pub fn dual(&self) -> StrictRel {
        StrictRel { base: self.base.clone(), rel: self.rel.transpose() }
    }

    /// Same carrier and relation under new display names.
    pub fn relabel(&self, labels: Vec<String>) -> Result<Self> {
        let base = Setoid::from_reps(labels, self.base.reps().to_vec())?;
        Ok(StrictRel { base, rel: self.rel.clone() })
    }
}

/// Decides whether `r` respects its setoid's equality; the witness is
/// `(x, x', y, y')` with `x < y` but not `x' < y'`.
pub fn check_well_defined(r: &StrictRel) -> Verdict {
    Verdict::from_witness(well_defined_witness(&r.base, &r.rel))
}

/// Free-function form of [`StrictRel::dual`].
pub fn dual(r: &StrictRel) -> StrictRel {
    r.dual()
}

/// A partial order `∼` over a setoid: reflexive, transitive, antisymmetric up
/// to setoid equality, and well defined.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PosetRel {
    base: Setoid,
    rel: BoolMatrix,
}

impl PosetRel {
    /// Saturates `sim_pairs` under equality, then validates the poset axioms.
    /// Reflexive pairs are not added implicitly.
    pub fn new<P, A, B>(base: Setoid, sim_pairs: P) -> Result<Self>
    where
        P: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let n = base.len();
        let mut m = BoolMatrix::new(n);
        for (a, b) in sim_pairs {
            m.set(base.index_of(a.as_ref())?, base.index_of(b.as_ref())?, true);
        }
        let m = saturate(&base, &m);
        Self::from_matrix(base, m)
    }

    pub fn from_matrix(base: Setoid, rel: BoolMatrix) -> Result<Self> {
        check_size(&base, &rel)?;
        if let Some(w) = well_defined_witness(&base, &rel) {
            return Err(ill_defined(w));
        }
        let n = base.len();
        if let Some(i) = (0..n).find(|&i| !rel.get(i, i)) {
            return Err(OrdError::NotPoset { axiom: "reflexivity", witness: vec![i] });
        }
        for (i, j) in rel.pairs() {
            if let Some(k) = (0..n).find(|&k| rel.get(j, k) && !rel.get(i, k)) {
                return Err(OrdError::NotPoset { axiom: "transitivity", witness: vec![i, j, k] });
            }
            if rel.get(j, i) && !base.eq(i, j) {
                return Err(OrdError::NotPoset { axiom: "antisymmetry", witness: vec![i, j] });
            }
        }
        Ok(PosetRel { base, rel })
    }

    /// The numbered chain `0 ∼ 1 ∼ ... ∼ n-1`, reflexive.
    pub fn chain(n: usize) -> Self {
        PosetRel { base: Setoid::numbered(n), rel: BoolMatrix::from_fn(n, |i, j| i <= j) }
    }

    /// Only the reflexive pairs.
    pub fn discrete(base: Setoid) -> Self {
        let rel = BoolMatrix::from_fn(base.len(), |i, j| base.eq(i, j));
        PosetRel { base, rel }
    }

    #[inline]
    pub fn sim(&self, i: usize, j: usize) -> bool {
        self.rel.get(i, j)
    }

    #[inline]
    pub fn eq(&self, i: usize, j: usize) -> bool {
        self.base.eq(i, j)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.base.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    pub fn base(&self) -> &Setoid {
        &self.base
    }

    pub fn matrix(&self) -> &BoolMatrix {
        &self.rel
    }
}
