//! Small worked instances.
//!
//! Several constructions are parameterized by an arbitrary proposition `P`
//! and show that some decision about the instance would decide `P` (or `¬P`,
//! or `¬¬P`). Classically `P` is just a boolean, so each such instance is
//! built for both values and the decision is run to check that it really
//! reveals the oracle.

use serde::Serialize;

use crate::axioms::{check_total, classify, Axiom};
use crate::derived::{compare_weak_orders, derive_leq_p};
use crate::io::Instance;
use crate::product::{check_star_condition, lex_product, poset_to_strict};
use crate::setoid::{PosetRel, Setoid, StrictRel};
use crate::verdict::Verdict;

/// Classical stand-in for an arbitrary proposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct OracleBool(pub bool);

impl OracleBool {
    pub const BOTH: [OracleBool; 2] = [OracleBool(true), OracleBool(false)];

    pub fn value(self) -> bool {
        self.0
    }
}

/// What a decision procedure told us about the oracle proposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Claim {
    #[serde(rename = "P")]
    P,
    #[serde(rename = "not P")]
    NotP,
    #[serde(rename = "not not P")]
    NotNotP,
}

impl Claim {
    /// Classical reading: `¬¬P` and `P` coincide.
    pub fn agrees_with(self, oracle: OracleBool) -> bool {
        match self {
            Claim::P | Claim::NotNotP => oracle.0,
            Claim::NotP => !oracle.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub label: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedInstance {
    pub name: String,
    pub instance: Instance,
}

/// Result of running one gallery construction. Unparameterized constructions
/// have no oracle and are trivially consistent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtractionReport {
    pub instance_name: String,
    pub oracle: Option<bool>,
    /// The disjunct the decision selected, e.g. `a<c`.
    pub revealed: Option<String>,
    pub claim: Option<Claim>,
    pub consistent: bool,
    pub checks: Vec<Check>,
    pub instances: Vec<NamedInstance>,
}

impl ExtractionReport {
    fn new(name: &str, oracle: Option<OracleBool>) -> Self {
        ExtractionReport {
            instance_name: name.to_string(),
            oracle: oracle.map(OracleBool::value),
            revealed: None,
            claim: None,
            consistent: true,
            checks: Vec::new(),
            instances: Vec::new(),
        }
    }

    fn check(&mut self, label: impl Into<String>, passed: bool) {
        self.checks.push(Check { label: label.into(), passed });
    }

    fn strict(&mut self, name: &str, r: &StrictRel) {
        self.instances.push(NamedInstance { name: name.into(), instance: Instance::Strict(r.clone()) });
    }

    fn poset(&mut self, name: &str, p: &PosetRel) {
        self.instances.push(NamedInstance { name: name.into(), instance: Instance::Poset(p.clone()) });
    }

    fn reveal(&mut self, oracle: OracleBool, found: Option<(String, Claim)>) {
        match found {
            Some((disjunct, claim)) => {
                self.consistent = claim.agrees_with(oracle);
                self.revealed = Some(disjunct);
                self.claim = Some(claim);
            }
            None => self.consistent = false,
        }
    }

    /// Consistent, and every expected property held.
    pub fn passed(&self) -> bool {
        self.consistent && self.checks.iter().all(|c| c.passed)
    }
}

fn fails_at(v: &Verdict, w: &[usize]) -> bool {
    v.witness() == Some(w)
}

/// `{a, b, c}` with only `a < b`.
pub fn non_cotransitive_example() -> StrictRel {
    let s = Setoid::identity(["a", "b", "c"]).expect("distinct labels");
    StrictRel::new(s, [("a", "b")]).expect("known labels")
}

pub fn non_cotransitive_gord() -> ExtractionReport {
    let r = non_cotransitive_example();
    let p = classify(&r);
    let cmp = compare_weak_orders(&r);
    let mut rep = ExtractionReport::new("non-cotransitive", None);
    rep.check("generalized ordered", p.is_generalized_ordered());
    rep.check("not an ordered set", !p.is_ordered_set());
    rep.check("cotransitivity fails at (a,b,c)", fails_at(&p.cotransitive, &[0, 1, 2]));
    rep.check("leq_N not within leq_P at (b,c)", fails_at(&cmp.n_subset_of_p, &[1, 2]));
    rep.strict("X", &r);
    rep
}

/// `{a, b, c}` with `a < b`, plus `a < c` when `P` and `c < b` otherwise.
pub fn cotransitivity_wem_instance(p: OracleBool) -> StrictRel {
    let s = Setoid::identity(["a", "b", "c"]).expect("distinct labels");
    let extra = if p.0 { ("a", "c") } else { ("c", "b") };
    StrictRel::new(s, [("a", "b"), extra]).expect("known labels")
}

/// The instance satisfies "`≤_N` implies `≤_P`", so if that implied
/// cotransitivity, deciding `a < c` or `c < b` would decide `¬¬P` or `¬P`.
pub fn cotransitivity_wem(p: OracleBool) -> ExtractionReport {
    let r = cotransitivity_wem_instance(p);
    let (a, b, c) = (0, 1, 2);
    let mut rep = ExtractionReport::new("cotransitivity-wem", Some(p));
    rep.check("leq_N within leq_P", compare_weak_orders(&r).n_subset_of_p.holds());
    rep.check("asymmetric", classify(&r).asymmetric.holds());
    rep.check("a<b", r.less(a, b));
    let found = if r.less(a, c) {
        Some(("a<c".to_string(), Claim::NotNotP))
    } else if r.less(c, b) {
        Some(("c<b".to_string(), Claim::NotP))
    } else {
        None
    };
    rep.reveal(p, found);
    rep.strict("X", &r);
    rep
}

/// `X = {0, 1}` with `0 < 1` when `P` and `1 < 0` otherwise.
pub fn lex_lem_factor(p: OracleBool) -> StrictRel {
    let pair = if p.0 { ("0", "1") } else { ("1", "0") };
    StrictRel::new(Setoid::numbered(2), [pair]).expect("known labels")
}

/// Cotransitivity of the lexicographic product `X × Y` on the pair
/// `(0,0) < (0,1)`, tested against each `(s, q)` with `s` the element of
/// `S = {0 : ¬P} ∪ {1 : P}`, decides `P`.
pub fn lex_cotransitivity_lem(p: OracleBool) -> ExtractionReport {
    let x = lex_lem_factor(p);
    let y = StrictRel::chain(2);
    let prod = lex_product(&x, &y);
    let at = |u: usize, v: usize| u * y.len() + v;
    let s_elem = usize::from(p.0);

    let mut rep = ExtractionReport::new("lex-cotransitivity-lem", Some(p));
    rep.check("X is an ordered set", classify(&x).is_ordered_set());
    rep.check("Y is an ordered set", classify(&y).is_ordered_set());
    rep.check("(0,0)<(0,1)", prod.less(at(0, 0), at(0, 1)));

    let case_analysis = |q: usize| {
        let probe = at(s_elem, q);
        if prod.less(at(0, 0), probe) {
            // first case: 0 < s, or 0 = s and 0 < q
            if x.less(0, s_elem) {
                Some(("first case, 0<s", Claim::P))
            } else if x.eq(0, s_elem) {
                Some(("first case, 0=s", Claim::NotP))
            } else {
                None
            }
        } else if prod.less(probe, at(0, 1)) {
            // second case: s < 0, or s = 0 and q < 1
            if x.less(s_elem, 0) {
                Some(("second case, s<0", Claim::NotP))
            } else if x.eq(s_elem, 0) {
                Some(("second case, s=0", Claim::NotP))
            } else {
                None
            }
        } else {
            None
        }
    };
    let outcomes: Option<Vec<(&str, Claim)>> = (0..y.len()).map(case_analysis).collect();
    let found = outcomes.and_then(|o| {
        let claim = o.first()?.1;
        o.iter().all(|&(_, c)| c == claim).then(|| {
            let text: Vec<String> = o.iter().enumerate().map(|(q, (what, _))| format!("q={q}: {what}")).collect();
            (text.join("; "), claim)
        })
    });
    rep.reveal(p, found);
    rep.strict("X", &x);
    rep.strict("Y", &y);
    rep.strict("X x Y", &prod);
    rep
}

/// `{a, b}` with `a < b` when `P`, and `a = b` when `¬P`.
pub fn weak_lex_dne_instance(p: OracleBool) -> StrictRel {
    let eq: &[(&str, &str)] = if p.0 { &[] } else { &[("a", "b")] };
    let s = Setoid::new(["a", "b"], eq.iter().copied()).expect("known labels");
    let less: &[(&str, &str)] = if p.0 { &[("a", "b")] } else { &[] };
    StrictRel::new(s, less.iter().copied()).expect("known labels")
}

/// `a ≤_P b` holds either way; once `¬(a = b)` is known, "distinct and
/// `≤_P` gives `<`" forces `a < b`, which is `P`.
pub fn weak_lex_dne(p: OracleBool) -> ExtractionReport {
    let r = weak_lex_dne_instance(p);
    let (a, b) = (0, 1);
    let mut rep = ExtractionReport::new("weak-lex-dne", Some(p));
    rep.check("a leq_P b", derive_leq_p(&r).get(a, b));
    rep.check("asymmetric", classify(&r).asymmetric.holds());
    if r.eq(a, b) {
        // hypothesis not available, nothing to extract
        rep.consistent = !p.0;
    } else {
        let found = r.less(a, b).then(|| ("a<b".to_string(), Claim::P));
        rep.reveal(p, found);
    }
    rep.strict("X", &r);
    rep
}

/// `{a, b}`, distinct, with `a ∼ b` exactly when `¬P` and `b ∼ a` exactly
/// when `P`, plus the reflexive pairs.
pub fn totality_wem_instance(p: OracleBool) -> PosetRel {
    let s = Setoid::identity(["a", "b"]).expect("distinct labels");
    let cross = if p.0 { ("b", "a") } else { ("a", "b") };
    PosetRel::new(s, [("a", "a"), ("b", "b"), cross]).expect("valid partial order")
}

pub fn totality_wem(p: OracleBool) -> ExtractionReport {
    let poset = totality_wem_instance(p);
    let (a, b) = (0, 1);
    let mut rep = ExtractionReport::new("totality-wem", Some(p));
    rep.check("star condition holds", check_star_condition(&poset).holds());
    rep.check("total", check_total(&poset).holds());
    let found = if poset.sim(a, b) {
        Some(("a~b".to_string(), Claim::NotP))
    } else if poset.sim(b, a) {
        Some(("b~a".to_string(), Claim::NotNotP))
    } else {
        None
    };
    rep.reveal(p, found);
    rep.poset("X", &poset);
    rep.strict("X strict", &poset_to_strict(&poset));
    rep
}

/// The discrete two-element poset: its strict part is empty, so `a` and `b`
/// are mutually `≤_P` although distinct.
pub fn poset_bridge_failure() -> ExtractionReport {
    let poset = PosetRel::discrete(Setoid::identity(["a", "b"]).expect("distinct labels"));
    let strict = poset_to_strict(&poset);
    let leq = derive_leq_p(&strict);
    let prof = classify(&strict);
    let mut rep = ExtractionReport::new("poset-bridge-failure", None);
    rep.check("a leq_P b", leq.get(0, 1));
    rep.check("b leq_P a", leq.get(1, 0));
    rep.check("positive antisymmetry fails at (a,b)", fails_at(&prof.pos_antisymmetric, &[0, 1]));
    rep.check("asymmetric and transitive", prof.asymmetric.holds() && prof.transitive.holds());
    rep.poset("X", &poset);
    rep.strict("X strict", &strict);
    rep
}

/// Two truth values with `0 < 1`, the classical collapse of propositions
/// ordered by `P < Q` iff `¬P ∧ Q`.
pub fn sierpinski_example() -> StrictRel {
    StrictRel::new(Setoid::numbered(2), [("0", "1")]).expect("known labels")
}

pub fn sierpinski() -> ExtractionReport {
    let r = sierpinski_example();
    let p = classify(&r);
    let mut rep = ExtractionReport::new("sierpinski", None);
    rep.check("0<1", r.less(0, 1));
    rep.check("generalized ordered", p.is_generalized_ordered());
    // only constructively non-cotransitive
    rep.check("cotransitive in the classical model", p.verdict(Axiom::Cotransitivity).holds());
    rep.strict("Prop", &r);
    rep
}

pub const GALLERY_NAMES: [&str; 7] = [
    "non-cotransitive",
    "cotransitivity-wem",
    "lex-cotransitivity-lem",
    "weak-lex-dne",
    "totality-wem",
    "poset-bridge-failure",
    "sierpinski",
];

/// Runs one named gallery, for both oracle values where it takes one.
pub fn run_gallery(name: &str) -> Option<Vec<ExtractionReport>> {
    let both = |f: fn(OracleBool) -> ExtractionReport| OracleBool::BOTH.iter().map(|&p| f(p)).collect();
    Some(match name {
        "non-cotransitive" => vec![non_cotransitive_gord()],
        "cotransitivity-wem" => both(cotransitivity_wem),
        "lex-cotransitivity-lem" => both(lex_cotransitivity_lem),
        "weak-lex-dne" => both(weak_lex_dne),
        "totality-wem" => both(totality_wem),
        "poset-bridge-failure" => vec![poset_bridge_failure()],
        "sierpinski" => vec![sierpinski()],
        _ => return None,
    })
}

pub fn run_all_galleries() -> Vec<ExtractionReport> {
    GALLERY_NAMES.iter().flat_map(|n| run_gallery(n).expect("listed name")).collect()
}
