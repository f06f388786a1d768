//! Exhaustive checking over every relation on a small carrier.
//!
//! For a carrier size `n` the enumerator walks all `2^(n²)` matrices on each
//! setoid of the chosen equality mode, keeps the well-defined ones, and runs
//! the theorem battery on each. Product theorems are checked on every pair of
//! structures whose product has at most [`PRODUCT_LIMIT`] elements, where at
//! least one factor has size `n`.
//!
//! Work is spread over rayon; results are merged in input order and counters
//! are sums, so the summary does not depend on the thread count.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::axioms::{check_decidable_eq, check_total, classify, witness_violates, Axiom, AxiomProfile};
use crate::derived::{derive_leq_n, derive_leq_p, gord_to_poset};
use crate::error::{OrdError, Result};
use crate::io::RelationFile;
use crate::matrix::BoolMatrix;
use crate::product::{
    check_isomorphism, check_star_condition, coarse_product, lex_product, poset_to_strict, weak_lex_product,
    EmbeddingMap, Side,
};
use crate::setoid::{check_well_defined, PosetRel, Setoid, StrictRel};

/// Largest product carrier the pair battery builds.
pub const PRODUCT_LIMIT: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EqualityMode {
    Identity,
    AllPartitions,
}

impl FromStr for EqualityMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "identity" => Ok(EqualityMode::Identity),
            "all-partitions" => Ok(EqualityMode::AllPartitions),
            other => Err(format!("unknown equality mode `{other}` (expected identity or all-partitions)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBounds {
    pub identity: usize,
    pub all_partitions: usize,
}

impl Default for EnumerationBounds {
    fn default() -> Self {
        EnumerationBounds { identity: 4, all_partitions: 3 }
    }
}

impl EnumerationBounds {
    /// Same bound for both modes.
    pub fn uniform(max: usize) -> Self {
        EnumerationBounds { identity: max, all_partitions: max }
    }

    pub fn limit(&self, mode: EqualityMode) -> usize {
        match mode {
            EqualityMode::Identity => self.identity,
            EqualityMode::AllPartitions => self.all_partitions,
        }
    }
}

pub fn setoids(n: usize, mode: EqualityMode) -> Vec<Setoid> {
    match mode {
        EqualityMode::Identity => vec![Setoid::numbered(n)],
        EqualityMode::AllPartitions => Setoid::all_partitions(n),
    }
}

fn matrices(n: usize) -> impl ParallelIterator<Item = BoolMatrix> {
    assert!(n * n < 64, "carrier too large to enumerate");
    (0..1u64 << (n * n)).into_par_iter().map(move |code| BoolMatrix::from_code(n, code))
}

/// Every well-defined strict relation on every setoid of the mode, in
/// (setoid, matrix code) order.
pub fn universe(n: usize, mode: EqualityMode) -> Vec<StrictRel> {
    setoids(n, mode)
        .into_iter()
        .flat_map(|s| {
            matrices(n)
                .filter_map(|m| StrictRel::from_matrix(s.clone(), m).ok())
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Every partial order on every setoid of the mode.
pub fn poset_universe(n: usize, mode: EqualityMode) -> Vec<PosetRel> {
    setoids(n, mode)
        .into_iter()
        .flat_map(|s| matrices(n).filter_map(|m| PosetRel::from_matrix(s.clone(), m).ok()).collect::<Vec<_>>())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub theorem: String,
    pub instance: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InventoryEntry {
    pub name: String,
    pub count: usize,
    pub example: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationSummary {
    pub carrier_size: usize,
    pub equality_mode: EqualityMode,
    pub setoid_count: usize,
    pub total_relations: u64,
    pub well_defined_count: usize,
    pub generalized_ordered_count: usize,
    pub ordered_set_count: usize,
    pub poset_count: usize,
    pub counts_by_axiom_profile: BTreeMap<String, usize>,
    pub product_pairs_checked: usize,
    /// Instances on which each theorem's hypothesis held.
    pub theorem_checks: BTreeMap<String, usize>,
    pub theorem_violations: Vec<Violation>,
    pub counterexample_inventory: Vec<InventoryEntry>,
}

/// Compact one-line rendering of a relation.
pub fn describe(r: &StrictRel) -> String {
    serde_json::to_string(&RelationFile::from_strict(r)).expect("plain data serializes")
}

#[derive(Default)]
struct Battery {
    tally: BTreeMap<&'static str, usize>,
    violations: Vec<Violation>,
}

impl Battery {
    /// Records one application of `theorem`; `conclusion` returns a
    /// description of the failure, if any.
    fn claim(&mut self, theorem: &'static str, hypothesis: bool, instance: impl Fn() -> String, conclusion: impl FnOnce() -> Option<String>) {
        if !hypothesis {
            return;
        }
        *self.tally.entry(theorem).or_default() += 1;
        if let Some(detail) = conclusion() {
            self.violations.push(Violation { theorem: theorem.into(), instance: instance(), detail });
        }
    }

    fn absorb(&mut self, other: Battery) {
        for (k, v) in other.tally {
            *self.tally.entry(k).or_default() += v;
        }
        self.violations.extend(other.violations);
    }
}

fn excess(label: &str, a: &BoolMatrix, b: &BoolMatrix) -> Option<String> {
    a.first_excess_over(b).map(|(x, y)| format!("{label} at ({x},{y})"))
}

fn failed(label: &str, ok: bool) -> Option<String> {
    (!ok).then(|| label.to_string())
}

fn profile_failure(p: &AxiomProfile, axioms: &[Axiom]) -> Option<String> {
    axioms
        .iter()
        .find_map(|&a| p.verdict(a).witness().map(|w| format!("{a} fails at {w:?}")))
}

const GORD: [Axiom; 3] = [Axiom::Asymmetry, Axiom::Transitivity, Axiom::PositiveAntisymmetry];
const ORDERED: [Axiom; 3] = [Axiom::Asymmetry, Axiom::Cotransitivity, Axiom::NegativeAntisymmetry];

struct Single {
    profile: AxiomProfile,
    bits: String,
    battery: Battery,
}

fn single_battery(r: &StrictRel) -> Single {
    let p = classify(r);
    let n = r.len();
    let leq_n = derive_leq_n(r);
    let leq_p = derive_leq_p(r);
    let name = || describe(r);
    let mut b = Battery::default();

    b.claim("witnesses-replay", true, name, || {
        Axiom::ALL.iter().find_map(|&a| {
            let w = p.verdict(a).witness()?;
            (!witness_violates(r, a, w)).then(|| format!("{a} witness {w:?} does not violate"))
        })
    });
    b.claim("ordered-set-is-generalized-ordered", p.is_ordered_set(), name, || profile_failure(&p, &GORD));
    b.claim("cotransitive-leq-n-within-leq-p", p.cotransitive.holds(), name, || excess("leq_N not in leq_P", &leq_n, &leq_p));
    b.claim("asymmetric-leq-p-within-leq-n", p.asymmetric.holds(), name, || excess("leq_P not in leq_N", &leq_p, &leq_n));
    b.claim("ordered-set-weak-orders-coincide", p.is_ordered_set(), name, || failed("leq_N != leq_P", leq_n == leq_p));
    b.claim("leq-p-dual-transposes", true, name, || {
        failed("leq_P of dual is not the transpose", derive_leq_p(&r.dual()) == leq_p.transpose())
    });
    b.claim("axioms-self-dual", true, name, || failed("dual has different verdicts", classify(&r.dual()).same_verdicts(&p)));
    b.claim("leq-p-is-preorder", true, name, || {
        let refl = (0..n).all(|x| leq_p.get(x, x));
        let trans = leq_p.pairs().all(|(x, y)| (0..n).all(|z| !leq_p.get(y, z) || leq_p.get(x, z)));
        failed("leq_P not reflexive and transitive", refl && trans)
    });
    b.claim("transitive-less-within-leq-p", p.transitive.holds(), name, || excess("< not in leq_P", r.matrix(), &leq_p));
    b.claim("derived-orders-well-defined", true, name, || {
        let wd = |m: &BoolMatrix| check_well_defined(&StrictRel::raw(r.base().clone(), m.clone()).expect("same size")).holds();
        failed("derived matrix ignores equality", wd(&leq_n) && wd(&leq_p))
    });
    b.claim("transitive-discrete-is-cotransitive", p.transitive.holds() && p.discrete.holds(), name, || {
        profile_failure(&p, &[Axiom::Cotransitivity])
    });
    b.claim("discrete-distinct-leq-p-is-less", p.asymmetric.holds() && p.discrete.holds(), name, || {
        leq_p
            .pairs()
            .find(|&(x, y)| !r.eq(x, y) && !r.less(x, y))
            .map(|(x, y)| format!("({x},{y}) distinct and leq_P but not <"))
    });
    b.claim("generalized-order-yields-poset", p.is_generalized_ordered(), name, || {
        gord_to_poset(r).err().map(|e| e.to_string())
    });

    if let Ok(poset) = PosetRel::from_matrix(r.base().clone(), r.matrix().clone()) {
        poset_battery(&poset, &mut b);
    }
    Single { bits: r.matrix().bit_string(), profile: p, battery: b }
}

fn poset_battery(poset: &PosetRel, b: &mut Battery) {
    let strict = poset_to_strict(poset);
    let sp = classify(&strict);
    let name = || format!("poset {}", serde_json::to_string(&RelationFile::from_poset(poset)).expect("serializes"));
    b.claim("poset-bridge-asymmetric-transitive", true, name, || profile_failure(&sp, &[Axiom::Asymmetry, Axiom::Transitivity]));
    let star = check_star_condition(poset).holds();
    b.claim("star-condition-leq-p-within-sim", star, name, || excess("leq_P not in sim", &derive_leq_p(&strict), poset.matrix()));
    b.claim("star-condition-gives-positive-antisymmetry", star, name, || profile_failure(&sp, &[Axiom::PositiveAntisymmetry]));
    let total = check_total(poset).holds() && check_decidable_eq(poset.base()).holds();
    b.claim("total-decidable-gives-star-condition", total, name, || failed("star condition fails", star));
}

#[derive(Clone)]
struct Classified {
    rel: StrictRel,
    profile: AxiomProfile,
}

fn classified(n: usize, mode: EqualityMode) -> Vec<Classified> {
    universe(n, mode).into_par_iter().map(|rel| Classified { profile: classify(&rel), rel }).collect()
}

#[derive(Default)]
struct PairOutcome {
    battery: Battery,
    lex_not_cotransitive: Option<String>,
    weak_lex_intransitive: Option<String>,
    weak_lex_loses_pos_anti: Option<String>,
}

/// Pairs on which at least one product claim has its hypothesis.
fn pair_is_relevant(a: &AxiomProfile, b: &AxiomProfile) -> bool {
    (a.asymmetric.holds() && b.asymmetric.holds()) || a.is_ordered_set() || b.is_ordered_set()
}

fn pair_battery(a: &Classified, b: &Classified) -> PairOutcome {
    let (pa, pb) = (&a.profile, &b.profile);
    let name = || format!("A={} B={}", describe(&a.rel), describe(&b.rel));
    let mut out = PairOutcome::default();
    let bat = &mut out.battery;

    if pa.asymmetric.holds() && pb.asymmetric.holds() {
        let lex = lex_product(&a.rel, &b.rel);
        let lex_p = classify(&lex);
        bat.claim("lex-product-well-defined", true, name, || failed("ill defined", check_well_defined(&lex).holds()));
        bat.claim("lex-preserves-generalized-order", pa.is_generalized_ordered() && pb.is_generalized_ordered(), name, || {
            profile_failure(&lex_p, &GORD)
        });

        let weak = weak_lex_product(&a.rel, &b.rel);
        let weak_p = classify(&weak);
        bat.claim("weak-lex-product-well-defined", true, name, || failed("ill defined", check_well_defined(&weak).holds()));
        let asym_pos = |p: &AxiomProfile| p.asymmetric.holds() && p.pos_antisymmetric.holds();
        let both_gord = pa.is_generalized_ordered() && pb.is_generalized_ordered();
        bat.claim("weak-lex-asymmetric-positively-antisymmetric", both_gord, name, || {
            profile_failure(&weak_p, &[Axiom::Asymmetry, Axiom::PositiveAntisymmetry])
        });
        let discrete_gord = both_gord && pa.discrete.holds();
        bat.claim("weak-lex-discrete-generalized-order", discrete_gord, name, || profile_failure(&weak_p, &GORD));
        bat.claim("weak-lex-equals-lex-when-discrete", discrete_gord, name, || {
            excess("weak-lex not in lex", weak.matrix(), lex.matrix())
                .or_else(|| excess("lex not in weak-lex", lex.matrix(), weak.matrix()))
                .or_else(|| {
                    let id = EmbeddingMap::identity(lex.clone(), weak.clone()).expect("same carrier");
                    check_isomorphism(&id).witness().map(|w| format!("identity not an isomorphism at {w:?}"))
                })
        });

        if pa.is_ordered_set() && pb.is_ordered_set() && !lex_p.cotransitive.holds() {
            out.lex_not_cotransitive = Some(name());
        }
        if both_gord && !pa.discrete.holds() && !weak_p.transitive.holds() {
            out.weak_lex_intransitive = Some(name());
        }
        if asym_pos(pa) && asym_pos(pb) && !asym_pos(&weak_p) {
            out.weak_lex_loses_pos_anti = Some(name());
        }
    }

    bat.claim("coarse-left-ordered", pa.is_ordered_set(), name, || {
        profile_failure(&classify(&coarse_product(&a.rel, &b.rel, Side::Left)), &ORDERED)
    });
    bat.claim("coarse-right-ordered", pb.is_ordered_set(), name, || {
        profile_failure(&classify(&coarse_product(&a.rel, &b.rel, Side::Right)), &ORDERED)
    });
    out
}

pub fn enumerate(n: usize, mode: EqualityMode, bounds: &EnumerationBounds) -> Result<EnumerationSummary> {
    let bound = bounds.limit(mode);
    if n > bound || n * n >= 64 {
        return Err(OrdError::BoundExceeded { size: n, bound });
    }
    let setoid_list = setoids(n, mode);
    let total_relations = setoid_list.len() as u64 * (1u64 << (n * n));
    let rels = universe(n, mode);

    let singles: Vec<Single> = rels.par_iter().map(single_battery).collect();

    let mut battery = Battery::default();
    let mut counts_by_axiom_profile = BTreeMap::new();
    let (mut gord, mut ordered) = (0, 0);
    let mut minimal: Option<(String, Vec<usize>, usize)> = None;
    let mut gord_not_ordered = 0;
    for (i, s) in singles.into_iter().enumerate() {
        *counts_by_axiom_profile.entry(s.profile.key()).or_insert(0) += 1;
        gord += usize::from(s.profile.is_generalized_ordered());
        ordered += usize::from(s.profile.is_ordered_set());
        if s.profile.is_generalized_ordered() && !s.profile.is_ordered_set() {
            gord_not_ordered += 1;
            let key = (s.bits.clone(), rels[i].base().reps().to_vec(), i);
            if minimal.as_ref().is_none_or(|m| (&key.0, &key.1) < (&m.0, &m.1)) {
                minimal = Some(key);
            }
        }
        battery.absorb(s.battery);
    }
    let poset_count = rels.iter().filter(|r| PosetRel::from_matrix(r.base().clone(), r.matrix().clone()).is_ok()).count();

    // pairs with at least one factor of size n
    let here = classified(n, mode);
    let smaller: Vec<Vec<Classified>> = (0..n).map(|m| classified(m, mode)).collect();
    let mut pairs: Vec<(&Classified, &Classified)> = Vec::new();
    for (m, there) in smaller.iter().chain([&here]).enumerate() {
        if n * m > PRODUCT_LIMIT {
            continue;
        }
        for a in &here {
            pairs.extend(there.iter().map(|b| (a, b)));
        }
        if m < n {
            for b in there {
                pairs.extend(here.iter().map(|a| (b, a)));
            }
        }
    }
    pairs.retain(|(a, b)| pair_is_relevant(&a.profile, &b.profile));
    let outcomes: Vec<PairOutcome> = pairs.par_iter().map(|&(a, b)| pair_battery(a, b)).collect();
    let mut lex_nc = InventoryEntry { name: "non-cotransitive-lex-of-ordered-sets".into(), count: 0, example: None };
    let mut weak_it = InventoryEntry { name: "weak-lex-intransitive-without-discreteness".into(), count: 0, example: None };
    let mut weak_pa = InventoryEntry {
        name: "weak-lex-loses-positive-antisymmetry-without-transitivity".into(),
        count: 0,
        example: None,
    };
    for o in outcomes {
        battery.absorb(o.battery);
        for (entry, found) in [
            (&mut lex_nc, o.lex_not_cotransitive),
            (&mut weak_it, o.weak_lex_intransitive),
            (&mut weak_pa, o.weak_lex_loses_pos_anti),
        ] {
            if let Some(ex) = found {
                entry.count += 1;
                entry.example.get_or_insert(ex);
            }
        }
    }

    let minimal_entry = InventoryEntry {
        name: "minimal-generalized-ordered-not-ordered".into(),
        count: gord_not_ordered,
        example: minimal.map(|(_, _, i)| describe(&rels[i])),
    };

    Ok(EnumerationSummary {
        carrier_size: n,
        equality_mode: mode,
        setoid_count: setoid_list.len(),
        total_relations,
        well_defined_count: rels.len(),
        generalized_ordered_count: gord,
        ordered_set_count: ordered,
        poset_count,
        counts_by_axiom_profile,
        product_pairs_checked: pairs.len(),
        theorem_checks: battery.tally.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        theorem_violations: battery.violations,
        counterexample_inventory: vec![minimal_entry, lex_nc, weak_it, weak_pa],
    })
}

impl EnumerationSummary {
    pub fn inventory(&self, name: &str) -> Option<&InventoryEntry> {
        self.counterexample_inventory.iter().find(|e| e.name == name)
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let mode = match self.equality_mode {
            EqualityMode::Identity => "identity",
            EqualityMode::AllPartitions => "all-partitions",
        };
        let _ = writeln!(s, "carrier size {} ({mode}, {} setoids)", self.carrier_size, self.setoid_count);
        let _ = writeln!(s, "relations: {} total, {} well defined, {} partial orders", self.total_relations, self.well_defined_count, self.poset_count);
        let _ = writeln!(
            s,
            "{} generalized ordered, {} ordered, {} violations",
            self.generalized_ordered_count,
            self.ordered_set_count,
            self.theorem_violations.len()
        );
        let _ = writeln!(s, "\nprofile  count   (A asym, T trans, C cotrans, N neg-anti, P pos-anti, D discrete)");
        for (k, v) in &self.counts_by_axiom_profile {
            let _ = writeln!(s, "{k}  {v:>6}");
        }
        let _ = writeln!(s, "\ntheorem                                         applied");
        for (k, v) in &self.theorem_checks {
            let _ = writeln!(s, "{k:<46}  {v:>7}");
        }
        let _ = writeln!(s, "\nproduct pairs checked: {}", self.product_pairs_checked);
        let _ = writeln!(s, "\ninventory");
        for e in &self.counterexample_inventory {
            let _ = writeln!(s, "  {}: {}", e.name, e.count);
            if let Some(ex) = &e.example {
                let _ = writeln!(s, "    e.g. {ex}");
            }
        }
        for v in &self.theorem_violations {
            let _ = writeln!(s, "VIOLATION {}: {} ({})", v.theorem, v.detail, v.instance);
        }
        s
    }
}
