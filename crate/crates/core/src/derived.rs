//! The two weak orders a strict relation induces.
//!
//! `x ≤_N y` is the negative reading, `¬(y < x)`. `x ≤_P y` is the positive
//! one: everything below `x` is below `y`, and everything above `y` is above
//! `x`. They coincide on ordered sets; on other relations either inclusion
//! can fail.

use serde::{Deserialize, Serialize};

use crate::axioms::{classify, Axiom};
use crate::error::{OrdError, Result};
use crate::matrix::BoolMatrix;
use crate::setoid::{PosetRel, StrictRel};
use crate::verdict::Verdict;

pub fn derive_leq_n(r: &StrictRel) -> BoolMatrix {
    BoolMatrix::from_fn(r.len(), |x, y| !r.less(y, x))
}

/// `z` ranges over every carrier element, not only class representatives.
/// For well-defined relations the two readings agree.
pub fn derive_leq_p(r: &StrictRel) -> BoolMatrix {
    let n = r.len();
    BoolMatrix::from_fn(n, |x, y| (0..n).all(|z| (!r.less(z, x) || r.less(z, y)) && (!r.less(y, z) || r.less(x, z))))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedOrder {
    pub base: StrictRel,
    pub leq_n: BoolMatrix,
    pub leq_p: BoolMatrix,
}

impl DerivedOrder {
    pub fn new(base: &StrictRel) -> Self {
        DerivedOrder { leq_n: derive_leq_n(base), leq_p: derive_leq_p(base), base: base.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeakOrderComparison {
    /// `≤_N ⊆ ≤_P`; witness is the first pair in `≤_N` but not `≤_P`.
    pub n_subset_of_p: Verdict,
    /// `≤_P ⊆ ≤_N`.
    pub p_subset_of_n: Verdict,
    pub equal: Verdict,
}

pub fn compare_weak_orders(r: &StrictRel) -> WeakOrderComparison {
    let n = derive_leq_n(r);
    let p = derive_leq_p(r);
    let pair = |w: Option<(usize, usize)>| Verdict::from_witness(w.map(|(x, y)| vec![x, y]));
    let size = r.len();
    let diff = (0..size).flat_map(|x| (0..size).map(move |y| (x, y))).find(|&(x, y)| n.get(x, y) != p.get(x, y));
    WeakOrderComparison {
        n_subset_of_p: pair(n.first_excess_over(&p)),
        p_subset_of_n: pair(p.first_excess_over(&n)),
        equal: pair(diff),
    }
}

/// The partial order `≤_P` of a generalized ordered set.
///
/// Fails with [`OrdError::Precondition`] naming the first of asymmetry,
/// transitivity, positive antisymmetry that does not hold.
pub fn gord_to_poset(r: &StrictRel) -> Result<PosetRel> {
    let profile = classify(r);
    for axiom in [Axiom::Asymmetry, Axiom::Transitivity, Axiom::PositiveAntisymmetry] {
        if let Some(w) = profile.verdict(axiom).witness() {
            return Err(OrdError::Precondition { axiom, witness: w.to_vec() });
        }
    }
    PosetRel::from_matrix(r.base().clone(), derive_leq_p(r))
}
