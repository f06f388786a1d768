use std::fmt::Write as _;

use ordkit_core::axioms::check_total;
use ordkit_core::lab::gallery::{Claim, ExtractionReport};
use ordkit_core::{
    check_star_condition, classify, compare_weak_orders, derive_leq_n, derive_leq_p, poset_to_strict, Axiom,
    BoolMatrix, EvConstSeq, PosetRel, SeqVerdict, StrictRel, Verdict,
};
use serde_json::{json, Value};

fn tuple(labels: &[String], w: &[usize]) -> String {
    let parts: Vec<&str> = w.iter().map(|&i| labels[i].as_str()).collect();
    format!("({})", parts.join(", "))
}

fn verdict_text(labels: &[String], v: &Verdict) -> String {
    match v.witness() {
        None => "holds".into(),
        Some(w) => format!("fails at {}", tuple(labels, w)),
    }
}

fn verdict_json(labels: &[String], v: &Verdict) -> Value {
    match v.witness() {
        None => json!({ "holds": true }),
        Some(w) => json!({ "holds": false, "witness": w.iter().map(|&i| &labels[i]).collect::<Vec<_>>() }),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn matrix(name: &str, labels: &[String], m: &BoolMatrix) -> String {
    let width = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
    let mut s = format!("{name}:\n");
    let _ = write!(s, "  {:width$}", "");
    for l in labels {
        let _ = write!(s, " {l}");
    }
    s.push('\n');
    for (i, row) in labels.iter().enumerate() {
        let _ = write!(s, "  {row:width$}");
        for (j, col) in labels.iter().enumerate() {
            let cell = if m.get(i, j) { "1" } else { "." };
            let _ = write!(s, " {cell:>w$}", w = col.chars().count());
        }
        s.push('\n');
    }
    s
}

pub fn strict_report(r: &StrictRel) -> String {
    let labels = r.base().labels();
    let profile = classify(r);
    let cmp = compare_weak_orders(r);
    let mut s = format!("elements: {}\n", labels.join(" "));
    for (i, class) in r.base().classes().iter().enumerate().filter(|(_, c)| c.len() > 1) {
        let names: Vec<&str> = class.iter().map(|&j| labels[j].as_str()).collect();
        let _ = writeln!(s, "equal class {i}: {}", names.join(" = "));
    }
    s.push('\n');
    for a in Axiom::ALL {
        let _ = writeln!(s, "{:<23}{}", a.name(), verdict_text(labels, profile.verdict(a)));
    }
    s.push('\n');
    s += &matrix("leq_N", labels, &derive_leq_n(r));
    s += &matrix("leq_P", labels, &derive_leq_p(r));
    let _ = writeln!(s, "\nleq_N within leq_P: {}", verdict_text(labels, &cmp.n_subset_of_p));
    let _ = writeln!(s, "leq_P within leq_N: {}", verdict_text(labels, &cmp.p_subset_of_n));
    let _ = writeln!(
        s,
        "\ngeneralized ordered: {}; ordered set: {}",
        yes_no(profile.is_generalized_ordered()),
        yes_no(profile.is_ordered_set())
    );
    s
}

pub fn strict_json(r: &StrictRel) -> Value {
    let labels = r.base().labels();
    let profile = classify(r);
    let cmp = compare_weak_orders(r);
    let axioms: serde_json::Map<String, Value> = Axiom::ALL
        .iter()
        .map(|&a| (a.name().replace(' ', "-"), verdict_json(labels, profile.verdict(a))))
        .collect();
    json!({
        "kind": "strict",
        "elements": labels,
        "axioms": axioms,
        "leq_n": derive_leq_n(r).rows(),
        "leq_p": derive_leq_p(r).rows(),
        "leq_n_within_leq_p": verdict_json(labels, &cmp.n_subset_of_p),
        "leq_p_within_leq_n": verdict_json(labels, &cmp.p_subset_of_n),
        "generalized_ordered": profile.is_generalized_ordered(),
        "ordered_set": profile.is_ordered_set(),
    })
}

pub fn poset_report(p: &PosetRel) -> String {
    let labels = p.base().labels();
    let mut s = format!("elements: {}\npartial order: yes\n", labels.join(" "));
    let _ = writeln!(s, "total                  {}", verdict_text(labels, &check_total(p)));
    let _ = writeln!(s, "star condition         {}\n", verdict_text(labels, &check_star_condition(p)));
    s += &matrix("sim", labels, p.matrix());
    s += "\nstrict part\n";
    s += &strict_report(&poset_to_strict(p));
    s
}

pub fn poset_json(p: &PosetRel) -> Value {
    let labels = p.base().labels();
    json!({
        "kind": "poset",
        "elements": labels,
        "total": verdict_json(labels, &check_total(p)),
        "star_condition": verdict_json(labels, &check_star_condition(p)),
        "sim": p.matrix().rows(),
        "strict_part": strict_json(&poset_to_strict(p)),
    })
}

fn claim_text(c: Claim) -> &'static str {
    match c {
        Claim::P => "P",
        Claim::NotP => "not P",
        Claim::NotNotP => "not not P",
    }
}

pub fn extraction(rep: &ExtractionReport) -> String {
    let mut s = rep.instance_name.clone();
    if let Some(p) = rep.oracle {
        let _ = write!(s, " [P = {p}]");
    }
    s.push('\n');
    match (&rep.revealed, rep.claim) {
        (Some(d), Some(c)) => {
            let _ = writeln!(s, "  decision picked {d}, which reveals {}", claim_text(c));
        }
        _ if rep.oracle.is_some() => s += "  decision did not reveal the oracle\n",
        _ => {}
    }
    for c in &rep.checks {
        let _ = writeln!(s, "  [{}] {}", if c.passed { "ok" } else { "FAILED" }, c.label);
    }
    let names: Vec<&str> = rep.instances.iter().map(|i| i.name.as_str()).collect();
    let _ = writeln!(s, "  instances: {}", names.join(", "));
    let _ = writeln!(s, "  consistent: {}", yes_no(rep.consistent));
    s
}

pub fn seq_verdict(f: &EvConstSeq, g: &EvConstSeq, v: &SeqVerdict) -> String {
    match *v {
        SeqVerdict::Less { witness } => format!("{f} < {g} (first difference at position {witness})"),
        SeqVerdict::Greater { witness } => format!("{f} > {g} (first difference at position {witness})"),
        SeqVerdict::Equal => format!("{f} = {g}"),
        SeqVerdict::Incomparable { witness } => {
            format!("{f} and {g} are incomparable (first difference at position {witness})")
        }
        SeqVerdict::UnknownAfter { fuel } => format!("no difference within {fuel} positions"),
    }
}
