//! Runs every acceptance criterion and prints one line per criterion.
//! Exits nonzero when any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::fixtures::{check, Ray, FIXTURES};
use common::invariants::check_chambers;
use common::oracle::check_oracle;
use common::{all_entries, q};
use wdp_delta::arith::Rat;
use wdp_delta::catalog::get_surface;
use wdp_delta::cli::{evaluate, verify_all};
use wdp_delta::delta::{Evaluator, Extraction, Point};
use wdp_delta::picard::DivisorClass;
use wdp_delta::piecewise::{smallest_root_in, Poly, RootSearch};
use wdp_delta::zariski::{decompose_at, ZariskiError};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

/// Runs `f`, turning a panic into a failure carrying its message.
fn guarded(f: impl FnOnce() -> Verdict) -> Verdict {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(v) => v,
        Err(p) => Err(p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panicked".into())),
    }
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn tables() -> Verdict {
    let t = Instant::now();
    let results = verify_all();
    let elapsed = t.elapsed();
    let mut bad = Vec::new();
    let mut values = 0;
    for r in &results {
        match r {
            Ok(v) => {
                values += get_surface(&v.surface).unwrap().expected.rows.len();
                for (l, want, got) in &v.mismatches {
                    bad.push(format!("{} {l}: table {want}, computed {got}", v.surface));
                }
            }
            Err(e) => bad.push(e.trim().to_string()),
        }
    }
    if elapsed > Duration::from_secs(10) {
        bad.push(format!("took {} (limit 10s)", secs(elapsed)));
    }
    let passed = results.iter().filter(|r| matches!(r, Ok(v) if v.passed)).count();
    let summary = format!("{passed}/{} surfaces, {values} table values, {}", results.len(), secs(elapsed));
    if bad.is_empty() {
        Ok(summary)
    } else {
        Err(format!("{summary}; {}", bad.join("; ")))
    }
}

fn matrices() -> Verdict {
    let mut bad = Vec::new();
    let mut notes = Vec::new();
    let mut surfaces = 0;
    for e in all_entries() {
        let Some(p) = &e.printed else { continue };
        surfaces += 1;
        let order: Vec<&str> = p.order.iter().map(String::as_str).collect();
        let g = e.model.generator_gram(&order).unwrap();
        for (i, row) in p.entries.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if g.get(i, j) != &Rat::int(*x) {
                    bad.push(format!("{} {}.{}: printed {x}, computed {}", e.id(), order[i], order[j], g.get(i, j)));
                }
            }
        }
        for x in &p.errata {
            notes.push(format!("{} {}.{} ({})", e.id(), x.row, x.col, p.contradiction(x).unwrap_or_default()));
        }
        if let Some(k) = &p.anti_canonical {
            let mut acc = DivisorClass::zero(e.model.rank());
            for (c, l) in k.iter().zip(&order) {
                acc = acc.add_scaled(&Rat::int(*c), e.model.generator(l).unwrap());
            }
            if acc != e.model.anti_canonical {
                bad.push(format!("{}: printed -K tuple does not sum to -K", e.id()));
            }
        }
    }
    let summary = format!("{surfaces} printed matrices, all -K tuples match");
    if bad.is_empty() {
        Ok(summary)
    } else {
        Err(format!(
            "{summary}; {} entries differ from print: {}; each printed entry contradicts the rest of its own table: {}",
            bad.len(),
            bad.join("; "),
            notes.join("; ")
        ))
    }
}

fn fixtures() -> Verdict {
    let required = ["dp5-1/F", "dp5-1/E1", "dp5-3/E3", "dp5-6/E1", "dp6-5/E", "dp8-sigma1/Gamma"];
    let names: Vec<String> = FIXTURES.iter().map(|f| f.name()).collect();
    let missing: Vec<&str> = required.iter().copied().filter(|r| !names.iter().any(|n| n == r)).collect();
    if !missing.is_empty() {
        return Err(format!("missing fixtures {missing:?}"));
    }
    let mut bad = Vec::new();
    for f in FIXTURES {
        if let Err(e) = guarded(|| {
            check(f);
            Ok(String::new())
        }) {
            bad.push(e);
        }
    }
    let chambers: usize = FIXTURES.iter().map(|f| f.pieces.len()).sum();
    let movable = FIXTURES.iter().filter(|f| matches!(f.ray, Ray::Movable(_))).count();
    if bad.is_empty() {
        Ok(format!("{} rays ({movable} movable), {chambers} chambers", FIXTURES.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn oracle() -> Verdict {
    let t = Instant::now();
    let n = check_oracle(25);
    let elapsed = t.elapsed();
    if elapsed > Duration::from_secs(120) {
        return Err(format!("{n} samples took {} (limit 120s)", secs(elapsed)));
    }
    Ok(format!("{n} samples, {}", secs(elapsed)))
}

fn invariants() -> Verdict {
    check_chambers();
    let entries = all_entries();
    let rays = common::catalog_rays(&entries).len();
    Ok(format!("{rays} rays"))
}

fn confirmations() -> Verdict {
    let e = get_surface("dp5-7").unwrap();
    let s = Evaluator::new(&e.model, &e.aux).s_divisor(&Extraction::curve("E1")).unwrap();
    if s != q("13/15") {
        return Err(format!("dp5-7 S(E1) = {s}, expected 13/15"));
    }
    let mut strata = 0;
    for (id, global) in [("dp5-7", "15/13"), ("dp6-6", "1")] {
        let e = get_surface(id).unwrap();
        let r = evaluate(&e).map_err(|err| format!("{id}: {err}"))?;
        for st in &r.strata {
            let plan = e.plans.iter().find(|p| p.row == st.row && p.point.describe() == st.point).unwrap();
            if matches!(plan.point, Point::OffCurves) {
                continue;
            }
            strata += 1;
            if st.lower != st.upper || st.delta != q(global) {
                return Err(format!("{id} {}: lower {} upper {}, expected {global}", st.point, st.lower, st.upper));
            }
        }
    }
    for r in verify_all() {
        if let Err(e) = r {
            if e.contains("PlanMismatch") {
                return Err(e.trim().into());
            }
        }
    }
    Ok(format!("S(E1) = 13/15; {strata} curve strata with matching bounds; no PlanMismatch"))
}

fn refusals() -> Verdict {
    let e = get_surface("dp5-1").unwrap();
    let m = &e.model;
    let d = m.anti_canonical.add_scaled(&Rat::int(-3), m.generator("F").unwrap());
    match decompose_at(m, &d) {
        Err(ZariskiError::NotPseudoEffective(_)) => {}
        other => return Err(format!("dp5-1/F at u = 3 gave {other:?}")),
    }
    let f = Poly::from_ints(&[5, 0, -2]);
    match smallest_root_in(&f, &Rat::zero(), &Rat::int(2)) {
        RootSearch::Irrational { lo, hi } => {
            let sign = |x: &Rat| f.eval(x).signum();
            let ok = Rat::zero() <= lo && lo < hi && hi <= Rat::int(2) && sign(&lo) * sign(&hi) < 0;
            if ok {
                Ok(format!("dp5-1/F at u = 3 is NotPseudoEffective; 5-2u^2 on [0, 2] isolated in [{lo}, {hi}]"))
            } else {
                Err(format!("interval [{lo}, {hi}] does not isolate the root"))
            }
        }
        other => Err(format!("5-2u^2 on [0, 2] gave {other:?}")),
    }
}

fn main() -> ExitCode {
    std::panic::set_hook(Box::new(|_| {}));
    let criteria: [Criterion; 7] = [
        ("table reproduction", tables),
        ("matrix reproduction", matrices),
        ("decomposition fixtures", fixtures),
        ("oracle equivalence", oracle),
        ("zariski invariants", invariants),
        ("derived confirmations", confirmations),
        ("refusal correctness", refusals),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match guarded(*f) {
            Ok(msg) => println!("criterion {} {name}: PASS ({msg})", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({msg})", i + 1);
            }
        }
    }
    println!("{}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
