//! Acceptance suite. Each criterion prints one PASS/FAIL line; the process
//! exits nonzero if any criterion fails.
//!
//! Properties are recomputed here by plain quantifier loops over boolean
//! tables, independently of the library's checkers, and the library is
//! required to agree with them.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use ordkit_core::io::{self, Instance};
use ordkit_core::lab::gallery::{self, OracleBool};
use ordkit_core::seq::universe_relation;
use ordkit_core::{
    check_isomorphism, check_star_condition, classify, compare_weak_orders, derive_leq_n, derive_leq_p, lex_product,
    poset_to_strict, seq_compare, seq_compare_bounded, seq_universe, weak_lex_product, Axiom, BoolMatrix,
    EmbeddingMap, EvConstSeq, PosetRel, SeqVerdict, Setoid, StrictRel, Verdict,
};

/// A relation as two plain tables.
#[derive(Clone, Debug, PartialEq)]
struct Table {
    n: usize,
    eq: Vec<Vec<bool>>,
    lt: Vec<Vec<bool>>,
}

impl Table {
    fn identity(n: usize, code: u64) -> Table {
        let lt = (0..n).map(|x| (0..n).map(|y| code >> (x * n + y) & 1 == 1).collect()).collect();
        let eq = (0..n).map(|x| (0..n).map(|y| x == y).collect()).collect();
        Table { n, eq, lt }
    }

    fn of(r: &StrictRel) -> Table {
        let n = r.len();
        Table {
            n,
            eq: (0..n).map(|x| (0..n).map(|y| r.eq(x, y)).collect()).collect(),
            lt: (0..n).map(|x| (0..n).map(|y| r.less(x, y)).collect()).collect(),
        }
    }

    fn to_lib(&self) -> StrictRel {
        let m = BoolMatrix::from_rows(&self.lt).unwrap();
        StrictRel::from_matrix(Setoid::numbered(self.n), m).unwrap()
    }

    fn all(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    fn asym(&self) -> bool {
        self.all().all(|x| self.all().all(|y| !(self.lt[x][y] && self.lt[y][x])))
    }

    fn trans(&self) -> bool {
        self.all()
            .all(|x| self.all().all(|y| self.all().all(|z| !(self.lt[x][y] && self.lt[y][z]) || self.lt[x][z])))
    }

    fn cotrans(&self) -> bool {
        self.all()
            .all(|x| self.all().all(|y| !self.lt[x][y] || self.all().all(|z| self.lt[x][z] || self.lt[z][y])))
    }

    fn neg_anti(&self) -> bool {
        self.all().all(|x| self.all().all(|y| self.lt[x][y] || self.lt[y][x] || self.eq[x][y]))
    }

    fn discrete(&self) -> bool {
        self.neg_anti()
    }

    fn leq_n(&self) -> Vec<Vec<bool>> {
        self.all().map(|x| self.all().map(|y| !self.lt[y][x]).collect()).collect()
    }

    fn leq_p(&self) -> Vec<Vec<bool>> {
        self.all()
            .map(|x| {
                self.all()
                    .map(|y| self.all().all(|z| (!self.lt[z][x] || self.lt[z][y]) && (!self.lt[y][z] || self.lt[x][z])))
                    .collect()
            })
            .collect()
    }

    fn pos_anti(&self) -> bool {
        let p = self.leq_p();
        self.all().all(|x| self.all().all(|y| !(p[x][y] && p[y][x]) || self.eq[x][y]))
    }

    fn gord(&self) -> bool {
        self.asym() && self.trans() && self.pos_anti()
    }

    fn ordered(&self) -> bool {
        self.asym() && self.cotrans() && self.neg_anti()
    }

    fn lex(&self, b: &Table) -> Table {
        self.pair(b, |a, x, x2, b, y, y2| a.lt[x][x2] || (a.eq[x][x2] && b.lt[y][y2]))
    }

    fn weak_lex(&self, b: &Table) -> Table {
        let p = self.leq_p();
        self.pair(b, |a, x, x2, b, y, y2| {
            p[x][x2] && (!a.eq[x][x2] || b.lt[y][y2]) && (a.eq[x][x2] || a.lt[x][x2])
        })
    }

    fn pair(&self, b: &Table, f: impl Fn(&Table, usize, usize, &Table, usize, usize) -> bool) -> Table {
        let n = self.n * b.n;
        let split = |i: usize| (i / b.n, i % b.n);
        let mut t = Table { n, eq: vec![vec![false; n]; n], lt: vec![vec![false; n]; n] };
        for i in 0..n {
            for j in 0..n {
                let ((x, y), (x2, y2)) = (split(i), split(j));
                t.eq[i][j] = self.eq[x][x2] && b.eq[y][y2];
                t.lt[i][j] = f(self, x, x2, b, y, y2);
            }
        }
        t
    }

    fn profile_flags(&self) -> [bool; 6] {
        [self.asym(), self.trans(), self.cotrans(), self.neg_anti(), self.pos_anti(), self.discrete()]
    }
}

fn lib_flags(r: &StrictRel) -> [bool; 6] {
    let p = classify(r);
    Axiom::ALL.map(|a| p.verdict(a).holds())
}

fn rows(m: &BoolMatrix) -> Vec<Vec<bool>> {
    m.rows()
}

fn universe(n: usize) -> Vec<Table> {
    (0..1u64 << (n * n)).map(|c| Table::identity(n, c)).collect()
}

fn universe_where(max: usize, keep: impl Fn(&Table) -> bool) -> Vec<Table> {
    (0..=max).flat_map(universe).filter(|t| keep(t)).collect()
}

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn within(limit: Duration, elapsed: Duration) -> Result<(), String> {
    if elapsed < limit {
        Ok(())
    } else {
        Err(format!("took {elapsed:?}, limit {limit:?}"))
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn example_classification() -> Outcome {
    let r = gallery::non_cotransitive_example();
    let _ = (classify(&r), compare_weak_orders(&r));
    let start = Instant::now();
    let profile = classify(&r);
    let cmp = compare_weak_orders(&r);
    let elapsed = start.elapsed();
    ensure(profile.is_generalized_ordered(), || "not generalized ordered".into())?;
    ensure(profile.cotransitive == Verdict::Fails(vec![0, 1, 2]), || format!("cotransitivity {:?}", profile.cotransitive))?;
    ensure(cmp.n_subset_of_p == Verdict::Fails(vec![1, 2]), || format!("leq_N within leq_P {:?}", cmp.n_subset_of_p))?;
    let t = Table::of(&r);
    ensure(t.gord() && !t.cotrans(), || "oracle disagrees".into())?;
    within(Duration::from_millis(1), elapsed)?;
    Ok(format!("witnesses (a,b,c) and (b,c) in {elapsed:?}"))
}

fn weak_orders_battery() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for n in [2, 3] {
        for t in universe(n) {
            let r = t.to_lib();
            ensure(lib_flags(&r) == t.profile_flags(), || format!("axiom verdicts disagree on {t:?}"))?;
            let (ln, lp) = (rows(&derive_leq_n(&r)), rows(&derive_leq_p(&r)));
            ensure(ln == t.leq_n() && lp == t.leq_p(), || format!("derived orders disagree on {t:?}"))?;
            if t.asym() && t.cotrans() {
                ensure(ln == lp, || format!("leq_N != leq_P on asymmetric cotransitive {t:?}"))?;
            }
            if t.asym() {
                let sub = (0..n).all(|x| (0..n).all(|y| !lp[x][y] || ln[x][y]));
                ensure(sub, || format!("leq_P not within leq_N on asymmetric {t:?}"))?;
            }
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    within(Duration::from_secs(1), elapsed)?;
    Ok(format!("{checked} relations, 0 violations in {elapsed:?}"))
}

fn ordered_sets_battery() -> Outcome {
    let mut counts = [(0, 0); 4];
    for n in [2, 3] {
        for t in universe(n) {
            let p = classify(&t.to_lib());
            ensure(p.is_ordered_set() == t.ordered() && p.is_generalized_ordered() == t.gord(), || {
                format!("classification disagrees on {t:?}")
            })?;
            if t.ordered() {
                ensure(t.gord(), || format!("ordered set not generalized ordered: {t:?}"))?;
            }
            counts[n].0 += usize::from(t.ordered());
            counts[n].1 += usize::from(t.gord());
        }
    }
    ensure(counts[2] == (2, 2), || format!("n=2 counts (ordered, gOrd) = {:?}", counts[2]))?;
    Ok(format!("n=2: 2 ordered, 2 generalized ordered; n=3: {} ordered, {} generalized ordered", counts[3].0, counts[3].1))
}

fn lex_battery() -> Outcome {
    let start = Instant::now();
    let gords = universe_where(3, Table::gord);
    let mut pairs = 0;
    for a in &gords {
        for b in &gords {
            if a.n * b.n > 9 {
                continue;
            }
            let expect = a.lex(b);
            let got = lex_product(&a.to_lib(), &b.to_lib());
            ensure(Table::of(&got) == expect, || format!("lex product differs for {a:?} x {b:?}"))?;
            ensure(expect.gord() && classify(&got).is_generalized_ordered(), || {
                format!("lex product not generalized ordered: {a:?} x {b:?}")
            })?;
            pairs += 1;
        }
    }
    let elapsed = start.elapsed();
    within(Duration::from_secs(10), elapsed)?;
    Ok(format!("{pairs} pairs, 0 violations in {elapsed:?}"))
}

fn weak_lex_coincidence() -> Outcome {
    let discrete_a = universe_where(3, |t| t.gord() && t.discrete());
    let gord_b = universe_where(2, Table::gord);
    let mut pairs = 0;
    for a in &discrete_a {
        for b in &gord_b {
            ensure(a.weak_lex(b) == a.lex(b), || format!("oracle: weak-lex != lex for {a:?} x {b:?}"))?;
            let (la, lb) = (a.to_lib(), b.to_lib());
            let (lex, weak) = (lex_product(&la, &lb), weak_lex_product(&la, &lb));
            ensure(lex.matrix() == weak.matrix(), || format!("weak-lex != lex for {a:?} x {b:?}"))?;
            let id = EmbeddingMap::identity(lex, weak).map_err(|e| e.to_string())?;
            ensure(check_isomorphism(&id).holds(), || format!("identity not an isomorphism for {a:?} x {b:?}"))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs, 0 mismatches"))
}

fn weak_lex_battery() -> Outcome {
    let asym_pos = |t: &Table| t.asym() && t.pos_anti();
    let (big, small) = (universe_where(3, asym_pos), universe_where(2, asym_pos));
    let mut pairs = 0;
    let mut lost = Vec::new();
    let mut lost_with_transitive_factors = 0;
    let mut intransitive_discrete = 0;
    for a in &big {
        for b in &small {
            let expect = a.weak_lex(b);
            let got = weak_lex_product(&a.to_lib(), &b.to_lib());
            ensure(Table::of(&got) == expect, || format!("weak-lex product differs for {a:?} x {b:?}"))?;
            ensure(lib_flags(&got) == expect.profile_flags(), || format!("verdicts differ on {a:?} x {b:?}"))?;
            pairs += 1;
            if !asym_pos(&expect) {
                if a.trans() && b.trans() {
                    lost_with_transitive_factors += 1;
                }
                lost.push((a, b));
            }
            if a.gord() && a.discrete() && b.gord() && !expect.trans() {
                intransitive_discrete += 1;
            }
        }
    }
    ensure(intransitive_discrete == 0, || format!("{intransitive_discrete} discrete pairs lose transitivity"))?;
    match lost.first() {
        None => Ok(format!("{pairs} pairs, 0 violations")),
        Some((a, b)) => Err(format!(
            "{} of {pairs} asymmetric, positively antisymmetric pairs give a weak-lex order that is not; \
             first: A = {{{}}} on {} elements, B on {} element(s); \
             {lost_with_transitive_factors} of them have both factors transitive; \
             transitivity with discrete A: 0 violations",
            lost.len(),
            arrows(a),
            a.n,
            b.n,
        )),
    }
}

fn arrows(t: &Table) -> String {
    let pairs: Vec<String> = (0..t.n)
        .flat_map(|x| (0..t.n).filter(move |&y| t.lt[x][y]).map(move |y| format!("{x}<{y}")))
        .collect();
    pairs.join(", ")
}

fn lex_cotransitivity() -> Outcome {
    let ordered = universe_where(3, Table::ordered);
    let mut pairs = 0;
    for a in &ordered {
        for b in &ordered {
            ensure(a.lex(b).cotrans(), || format!("lex of ordered sets not cotransitive: {a:?} x {b:?}"))?;
            pairs += 1;
        }
    }
    for p in OracleBool::BOTH {
        let rep = gallery::lex_cotransitivity_lem(p);
        ensure(rep.consistent && rep.passed(), || format!("extraction inconsistent for P = {}", p.0))?;
    }
    Ok(format!("{pairs} ordered pairs all cotransitive; extraction consistent for both oracle values"))
}

fn gallery_suite() -> Outcome {
    let start = Instant::now();
    for p in OracleBool::BOTH {
        for rep in [
            gallery::cotransitivity_wem(p),
            gallery::lex_cotransitivity_lem(p),
            gallery::weak_lex_dne(p),
            gallery::totality_wem(p),
        ] {
            ensure(rep.consistent, || format!("{} inconsistent for P = {}", rep.instance_name, p.0))?;
        }
    }
    let bridge = gallery::poset_bridge_failure();
    let Some(Instance::Strict(strict)) = bridge.instances.iter().map(|i| &i.instance).find(|i| matches!(i, Instance::Strict(_)))
    else {
        return Err("bridge failure has no strict instance".into());
    };
    let witness = classify(strict).pos_antisymmetric;
    ensure(witness == Verdict::Fails(vec![0, 1]), || format!("bridge witness {witness:?}"))?;
    ensure(bridge.passed(), || "bridge failure checks".into())?;
    let sierpinski = gallery::sierpinski_example();
    ensure(classify(&sierpinski).is_generalized_ordered() && Table::of(&sierpinski).gord(), || {
        "two-point model not generalized ordered".into()
    })?;
    let elapsed = start.elapsed();
    within(Duration::from_millis(100), elapsed)?;
    Ok(format!("all consistent, witness (a,b), in {elapsed:?}"))
}

fn poset_bridge() -> Outcome {
    let mut posets = 0;
    let mut star = 0;
    for n in 0..=3 {
        for code in 0..1u64 << (n * n) {
            let sim = Table::identity(n, code).lt;
            let refl = (0..n).all(|x| sim[x][x]);
            let anti = (0..n).all(|x| (0..n).all(|y| x == y || !(sim[x][y] && sim[y][x])));
            let trans = (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| !(sim[x][y] && sim[y][z]) || sim[x][z])));
            let lib = PosetRel::from_matrix(Setoid::numbered(n), BoolMatrix::from_rows(&sim).unwrap());
            ensure(lib.is_ok() == (refl && anti && trans), || format!("poset acceptance differs on {sim:?}"))?;
            let Ok(p) = lib else { continue };
            posets += 1;
            let strict = Table::of(&poset_to_strict(&p));
            let expect: Vec<Vec<bool>> = (0..n).map(|x| (0..n).map(|y| sim[x][y] && x != y).collect()).collect();
            ensure(strict.lt == expect, || format!("strict part differs on {sim:?}"))?;
            ensure(strict.asym() && strict.trans(), || format!("strict part not asymmetric and transitive: {sim:?}"))?;
            let star_oracle = (0..n).all(|x| (0..n).all(|y| strict.lt[y][x] || sim[x][y]));
            ensure(check_star_condition(&p).holds() == star_oracle, || format!("star condition differs on {sim:?}"))?;
            if star_oracle {
                star += 1;
                ensure(strict.pos_anti(), || format!("star condition without positive antisymmetry: {sim:?}"))?;
            }
        }
    }
    Ok(format!("{posets} posets, {star} with the star condition, 0 violations"))
}

fn oracle_seq_compare(base: &Table, f: &EvConstSeq, g: &EvConstSeq) -> SeqVerdict {
    for k in 0..16 {
        let (x, y) = (f.at(k), g.at(k));
        if !base.eq[x][y] {
            return match (base.lt[x][y], base.lt[y][x]) {
                (true, _) => SeqVerdict::Less { witness: k },
                (_, true) => SeqVerdict::Greater { witness: k },
                _ => SeqVerdict::Incomparable { witness: k },
            };
        }
    }
    SeqVerdict::Equal
}

fn lazy_sequences() -> Outcome {
    let start = Instant::now();
    let base = Arc::new(StrictRel::chain(2));
    let table = Table::of(&base);
    let u = seq_universe(Arc::clone(&base), 3);
    ensure(u.len() == 16, || format!("universe has {} sequences", u.len()))?;
    let n = u.len();
    let mut v = vec![vec![SeqVerdict::Equal; n]; n];
    for i in 0..n {
        for j in 0..n {
            v[i][j] = seq_compare(&u[i], &u[j]).map_err(|e| e.to_string())?;
            ensure(v[i][j] == oracle_seq_compare(&table, &u[i], &u[j]), || format!("compare {} {} differs", u[i], u[j]))?;
            let fuel = 4;
            let bounded = seq_compare_bounded(&base, |k| u[i].at(k), |k| u[j].at(k), fuel).map_err(|e| e.to_string())?;
            let agree = match v[i][j] {
                SeqVerdict::Equal => bounded == SeqVerdict::UnknownAfter { fuel },
                exact => bounded == exact,
            };
            ensure(agree, || format!("bounded compare disagrees on {} {}", u[i], u[j]))?;
        }
    }
    let lt: Vec<Vec<bool>> = v.iter().map(|r| r.iter().map(|x| matches!(x, SeqVerdict::Less { .. })).collect()).collect();
    let eq: Vec<Vec<bool>> = v.iter().map(|r| r.iter().map(|x| *x == SeqVerdict::Equal).collect()).collect();
    let t = Table { n, eq, lt };
    ensure(t.asym(), || "sequence order not asymmetric".into())?;
    ensure(t.trans(), || "sequence order not transitive".into())?;
    ensure(t.pos_anti(), || "sequence order not positively antisymmetric on the universe".into())?;
    let lib = universe_relation(&u).map_err(|e| e.to_string())?;
    ensure(Table::of(&lib) == t, || "universe relation differs".into())?;
    let elapsed = start.elapsed();
    within(Duration::from_secs(5), elapsed)?;
    Ok(format!("{n} sequences, {} comparisons, 0 violations in {elapsed:?}", n * n))
}

fn ordkit(args: &[&str]) -> Result<(i32, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_ordkit")).args(args).output().map_err(|e| e.to_string())?;
    let code = out.status.code().ok_or("killed by signal")?;
    Ok((code, String::from_utf8_lossy(&out.stdout).into_owned()))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn axioms_from_check(path: &Path) -> Result<Vec<bool>, String> {
    let (code, out) = ordkit(&["--format", "json", "check", path.to_str().unwrap()])?;
    ensure(code == 0, || format!("check {} exited {code}", path.display()))?;
    let v: serde_json::Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    let report = v.get("strict_part").unwrap_or(&v);
    Ok(Axiom::ALL
        .iter()
        .map(|a| report["axioms"][a.name().replace(' ', "-")]["holds"] == serde_json::Value::Bool(true))
        .collect())
}

fn strict_of(i: &Instance) -> StrictRel {
    match i {
        Instance::Strict(r) => r.clone(),
        Instance::Poset(p) => poset_to_strict(p),
    }
}

fn cli_round_trip() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let d = dir.path();
    let (code, _) = ordkit(&["gallery", "--emit", d.to_str().unwrap()])?;
    ensure(code == 0, || format!("gallery exited {code}"))?;

    let mut files = 0;
    let emitted: Vec<Instance> =
        gallery::run_all_galleries().into_iter().flat_map(|r| r.instances).map(|i| i.instance).collect();
    let mut on_disk: Vec<PathBuf> = std::fs::read_dir(d).map_err(|e| e.to_string())?.map(|e| e.unwrap().path()).collect();
    on_disk.sort();
    ensure(on_disk.len() == emitted.len(), || format!("{} files for {} instances", on_disk.len(), emitted.len()))?;
    for path in &on_disk {
        let parsed = io::parse_relation(&std::fs::read_to_string(path).unwrap()).map_err(|e| e.to_string())?;
        ensure(emitted.contains(&parsed), || format!("{} matches no gallery instance", path.display()))?;
        ensure(axioms_from_check(path)? == lib_flags(&strict_of(&parsed)), || format!("profile differs for {}", path.display()))?;
        files += 1;
    }

    let inputs = ["chain2.json", "chain3.json", "non_cotransitive.json", "merged.json"];
    for a in inputs {
        for b in inputs {
            for kind in ["lex", "weaklex", "coarse-left", "coarse-right"] {
                let out = d.join(format!("{a}-{b}-{kind}.json"));
                let (fa, fb) = (fixture(a), fixture(b));
                let args = ["product", fa.to_str().unwrap(), fb.to_str().unwrap(), "--kind", kind, "-o", out.to_str().unwrap()];
                let (code, _) = ordkit(&args)?;
                ensure(code == 0, || format!("product {a} {b} {kind} exited {code}"))?;
                let parsed = io::parse_strict(&std::fs::read_to_string(&out).unwrap()).map_err(|e| e.to_string())?;
                let load = |f: &str| io::parse_strict(&std::fs::read_to_string(fixture(f)).unwrap()).unwrap();
                let (la, lb) = (load(a), load(b));
                let expect = match kind {
                    "lex" => lex_product(&la, &lb),
                    "weaklex" => weak_lex_product(&la, &lb),
                    "coarse-left" => ordkit_core::coarse_product(&la, &lb, ordkit_core::Side::Left),
                    _ => ordkit_core::coarse_product(&la, &lb, ordkit_core::Side::Right),
                };
                ensure(parsed == expect, || format!("product {a} {b} {kind} did not round-trip"))?;
                ensure(axioms_from_check(&out)? == lib_flags(&expect), || format!("profile differs for {a} {b} {kind}"))?;
                files += 1;
            }
        }
    }

    let contract = [
        ("non_cotransitive.json", 0),
        ("diamond_poset.json", 0),
        ("malformed.json", 1),
        ("truncated.json", 1),
        ("unknown_label.json", 1),
        ("ill_defined.json", 2),
        ("not_a_poset.json", 2),
    ];
    for (name, expected) in contract {
        let (code, out) = ordkit(&["check", fixture(name).to_str().unwrap()])?;
        ensure(code == expected, || format!("check {name} exited {code}, expected {expected}"))?;
        ensure(code == 0 || out.is_empty(), || format!("check {name} printed output on failure"))?;
    }
    Ok(format!("{files} emitted files round-trip; {} fixtures follow the exit-code contract", contract.len()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("example classification", example_classification),
        ("weak orders under asymmetry and cotransitivity", weak_orders_battery),
        ("ordered sets are generalized ordered", ordered_sets_battery),
        ("lex product preserves generalized order", lex_battery),
        ("weak-lex equals lex over a discrete factor", weak_lex_coincidence),
        ("weak-lex preserves asymmetry and positive antisymmetry", weak_lex_battery),
        ("lex products of ordered sets are cotransitive", lex_cotransitivity),
        ("gallery suite", gallery_suite),
        ("poset bridge", poset_bridge),
        ("lazy sequences", lazy_sequences),
        ("cli round trip", cli_round_trip),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
