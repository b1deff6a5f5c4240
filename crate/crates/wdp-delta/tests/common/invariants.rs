//! Structural properties every chamber of every catalog ray must satisfy.

use super::{all_entries, catalog_rays};
use num_traits::ToPrimitive;
use wdp_delta::arith::{is_negative_definite, Rat};
use wdp_delta::delta::{Evaluator, Extraction};
use wdp_delta::picard::SurfaceModel;
use wdp_delta::zariski::walk_ray_from;

fn half() -> Rat {
    Rat::new(1, 2)
}

pub fn check_chambers() {
    let entries = all_entries();
    for (name, m, a, b) in catalog_rays(&entries) {
        let ray = walk_ray_from(m, &a, &b).unwrap();
        assert!(!ray.chambers.is_empty(), "{name}");
        for c in &ray.chambers {
            let at = format!("{name} on [{}, {}]", c.lo, c.hi);
            assert!(c.lo < c.hi, "{at}: empty chamber");
            let mid = (&c.lo + &c.hi) * half();
            for u in [&c.lo, &mid, &c.hi] {
                let d = c.decomposition_at(u);
                assert!(m.is_nef(&d.p), "{at}: P not nef at {u}");
                assert_eq!(d.p.add(&d.negative_part(m)), a.add_scaled(&-u, &b), "{at}: P + N ≠ D at {u}");
            }
            let labels = c.support();
            if !labels.is_empty() {
                assert!(is_negative_definite(&m.generator_gram(&labels).unwrap()), "{at}: support not negative definite");
            }
            let p = c.p_at(&mid);
            for l in &labels {
                assert!(m.dot(&p, m.generator(l).unwrap()).is_zero(), "{at}: P·{l} ≠ 0");
                let n = c.n_coeff(l);
                assert!(n.eval(&mid).is_positive(), "{at}: N coefficient of {l} not positive");
                assert!(!n.eval(&c.lo).is_negative() && !n.eval(&c.hi).is_negative(), "{at}: N coefficient of {l} negative");
                assert!(!n.coeff(1).is_negative(), "{at}: N coefficient of {l} decreasing");
            }
            // vol′ = −2 P·B ≤ 0
            assert!(!m.dot(&p, &b).is_negative(), "{at}: volume increasing");
        }
        for w in ray.chambers.windows(2) {
            assert_eq!(w[0].hi, w[1].lo, "{name}: gap");
            assert_eq!(w[0].p_at(&w[0].hi), w[1].p_at(&w[1].lo), "{name}: P jumps at {}", w[0].hi);
            for (l, ..) in &w[0].n {
                assert_eq!(w[0].n_coeff(l).eval(&w[0].hi), w[1].n_coeff(l).eval(&w[1].lo), "{name}: N({l}) jumps");
            }
        }
        assert_eq!(ray.chambers.last().unwrap().hi, ray.tau, "{name}: last chamber ends at τ");
        let last = ray.chambers.last().unwrap();
        let pt = last.p_at(&ray.tau);
        assert!(m.dot(&pt, &pt).is_zero(), "{name}: P(τ)² ≠ 0");
        let vol = ray.volume(m);
        assert_eq!(vol.eval(&Rat::zero()).unwrap(), m.dot(&a, &a), "{name}: vol(0)");
    }
}

pub fn check_order_independence() {
    for e in all_entries() {
        let m = &e.model;
        let mut gens = m.generators.clone();
        gens.reverse();
        let r = SurfaceModel::new(&m.id, m.basis.clone(), m.gram.clone(), gens, m.anti_canonical.clone()).unwrap();
        let mut ev = Evaluator::new(m, &[]);
        let mut er = Evaluator::new(&r, &[]);
        for (l, _) in &m.generators {
            let x = Extraction::curve(l);
            assert_eq!(ev.s_divisor(&x).unwrap(), er.s_divisor(&x).unwrap(), "{}/{l}", e.id());
            let a = ev.ray(&x).unwrap();
            let b = er.ray(&x).unwrap();
            let bp = |r: &wdp_delta::zariski::RayDecomposition| r.chambers.iter().map(|c| c.hi.clone()).collect::<Vec<_>>();
            assert_eq!(bp(&a), bp(&b), "{}/{l}: breakpoints", e.id());
        }
    }
}

pub fn check_denominators() {
    let entries = all_entries();
    for (name, m, a, b) in catalog_rays(&entries) {
        let ray = walk_ray_from(m, &a, &b).unwrap();
        for c in &ray.chambers {
            let d = c.hi.denom().to_u64().unwrap();
            assert!(d <= 12, "{name}: breakpoint {}", c.hi);
        }
    }
    for e in &entries {
        let mut ev = Evaluator::new(&e.model, &e.aux);
        for (l, _) in &e.model.generators {
            let s = ev.s_divisor(&Extraction::curve(l)).unwrap();
            assert!(s.denom().to_u64().unwrap() <= 1000, "{}/{l}: S = {s}", e.id());
            assert!(s.is_positive());
        }
    }
}
