//! Deciders for the order axioms on finite relations.
//!
//! Every checker scans its quantifiers in index order and reports the first
//! violating tuple, so witnesses are deterministic.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::derived::derive_leq_p;
use crate::setoid::{PosetRel, Setoid, StrictRel};
use crate::verdict::Verdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    Asymmetry,
    Transitivity,
    Cotransitivity,
    NegativeAntisymmetry,
    PositiveAntisymmetry,
    Discreteness,
}

impl Axiom {
    pub const ALL: [Axiom; 6] = [
        Axiom::Asymmetry,
        Axiom::Transitivity,
        Axiom::Cotransitivity,
        Axiom::NegativeAntisymmetry,
        Axiom::PositiveAntisymmetry,
        Axiom::Discreteness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Asymmetry => "asymmetry",
            Axiom::Transitivity => "transitivity",
            Axiom::Cotransitivity => "cotransitivity",
            Axiom::NegativeAntisymmetry => "negative antisymmetry",
            Axiom::PositiveAntisymmetry => "positive antisymmetry",
            Axiom::Discreteness => "discreteness",
        }
    }

    pub fn check(self, r: &StrictRel) -> Verdict {
        match self {
            Axiom::Asymmetry => check_asymmetry(r),
            Axiom::Transitivity => check_transitivity(r),
            Axiom::Cotransitivity => check_cotransitivity(r),
            Axiom::NegativeAntisymmetry => check_neg_antisymmetry(r),
            Axiom::PositiveAntisymmetry => check_positive_antisymmetry(r),
            Axiom::Discreteness => check_discrete(r),
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Witness `(x, y)`. Includes `x = y`, so irreflexivity is implied.
pub fn check_asymmetry(r: &StrictRel) -> Verdict {
    let w = r.matrix().pairs().find(|&(x, y)| r.less(y, x));
    Verdict::from_witness(w.map(|(x, y)| vec![x, y]))
}

/// Witness `(x, y, z)` with `x < y < z` but not `x < z`.
pub fn check_transitivity(r: &StrictRel) -> Verdict {
    let n = r.len();
    for (x, y) in r.matrix().pairs() {
        if let Some(z) = (0..n).find(|&z| r.less(y, z) && !r.less(x, z)) {
            return Verdict::Fails(vec![x, y, z]);
        }
    }
    Verdict::Holds
}

/// Witness `(x, y, z)` with `x < y` but neither `x < z` nor `z < y`.
pub fn check_cotransitivity(r: &StrictRel) -> Verdict {
    let n = r.len();
    for (x, y) in r.matrix().pairs() {
        if let Some(z) = (0..n).find(|&z| !r.less(x, z) && !r.less(z, y)) {
            return Verdict::Fails(vec![x, y, z]);
        }
    }
    Verdict::Holds
}

/// Witness `(x, y)`: unrelated both ways yet not equal.
pub fn check_neg_antisymmetry(r: &StrictRel) -> Verdict {
    first_pair(r.len(), |x, y| !r.less(x, y) && !r.less(y, x) && !r.eq(x, y))
}

/// Recomputes `≤_P` on every call. Witness `(x, y)`: mutually `≤_P`, not equal.
pub fn check_positive_antisymmetry(r: &StrictRel) -> Verdict {
    let leq = derive_leq_p(r);
    first_pair(r.len(), |x, y| leq.get(x, y) && leq.get(y, x) && !r.eq(x, y))
}

/// Witness `(x, y)` with none of `x < y`, `x = y`, `y < x`.
pub fn check_discrete(r: &StrictRel) -> Verdict {
    first_pair(r.len(), |x, y| !r.less(x, y) && !r.eq(x, y) && !r.less(y, x))
}

/// Witness `(x, y)` with neither `x ∼ y` nor `y ∼ x`.
pub fn check_total(p: &PosetRel) -> Verdict {
    first_pair(p.len(), |x, y| !p.sim(x, y) && !p.sim(y, x))
}

/// Always holds: equality on a finite carrier given as a representative map
/// is decided by comparing representatives. Present so that the totality
/// criterion ("total and decidable equality") has both halves.
pub fn check_decidable_eq(_s: &Setoid) -> Verdict {
    Verdict::Holds
}

fn first_pair(n: usize, bad: impl Fn(usize, usize) -> bool) -> Verdict {
    for x in 0..n {
        for y in 0..n {
            if bad(x, y) {
                return Verdict::Fails(vec![x, y]);
            }
        }
    }
    Verdict::Holds
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AxiomProfile {
    pub asymmetric: Verdict,
    pub transitive: Verdict,
    pub cotransitive: Verdict,
    pub neg_antisymmetric: Verdict,
    pub pos_antisymmetric: Verdict,
    pub discrete: Verdict,
}

impl AxiomProfile {
    pub fn verdict(&self, axiom: Axiom) -> &Verdict {
        match axiom {
            Axiom::Asymmetry => &self.asymmetric,
            Axiom::Transitivity => &self.transitive,
            Axiom::Cotransitivity => &self.cotransitive,
            Axiom::NegativeAntisymmetry => &self.neg_antisymmetric,
            Axiom::PositiveAntisymmetry => &self.pos_antisymmetric,
            Axiom::Discreteness => &self.discrete,
        }
    }

    /// Asymmetric, transitive and positively antisymmetric.
    pub fn is_generalized_ordered(&self) -> bool {
        self.asymmetric.holds() && self.transitive.holds() && self.pos_antisymmetric.holds()
    }

    /// Asymmetric, cotransitive and negatively antisymmetric.
    pub fn is_ordered_set(&self) -> bool {
        self.asymmetric.holds() && self.cotransitive.holds() && self.neg_antisymmetric.holds()
    }

    /// Six-character summary, one slot per axiom in [`Axiom::ALL`] order:
    /// `ATCNPD` when everything holds, `.` in each failing slot.
    pub fn key(&self) -> String {
        Axiom::ALL
            .iter()
            .zip("ATCNPD".chars())
            .map(|(&a, c)| if self.verdict(a).holds() { c } else { '.' })
            .collect()
    }

    /// Whether `self` and `other` agree on which axioms hold.
    pub fn same_verdicts(&self, other: &AxiomProfile) -> bool {
        self.key() == other.key()
    }
}

pub fn classify(r: &StrictRel) -> AxiomProfile {
    AxiomProfile {
        asymmetric: check_asymmetry(r),
        transitive: check_transitivity(r),
        cotransitive: check_cotransitivity(r),
        neg_antisymmetric: check_neg_antisymmetry(r),
        pos_antisymmetric: check_positive_antisymmetry(r),
        discrete: check_discrete(r),
    }
}

/// Replays a witness against the relation: true iff the tuple really
/// violates `axiom`.
pub fn witness_violates(r: &StrictRel, axiom: Axiom, w: &[usize]) -> bool {
    let n = r.len();
    if w.iter().any(|&i| i >= n) {
        return false;
    }
    match (axiom, w) {
        (Axiom::Asymmetry, &[x, y]) => r.less(x, y) && r.less(y, x),
        (Axiom::Transitivity, &[x, y, z]) => r.less(x, y) && r.less(y, z) && !r.less(x, z),
        (Axiom::Cotransitivity, &[x, y, z]) => r.less(x, y) && !r.less(x, z) && !r.less(z, y),
        (Axiom::NegativeAntisymmetry, &[x, y]) => !r.less(x, y) && !r.less(y, x) && !r.eq(x, y),
        (Axiom::PositiveAntisymmetry, &[x, y]) => {
            let leq = derive_leq_p(r);
            leq.get(x, y) && leq.get(y, x) && !r.eq(x, y)
        }
        (Axiom::Discreteness, &[x, y]) => !r.less(x, y) && !r.eq(x, y) && !r.less(y, x),
        _ => false,
    }
}
