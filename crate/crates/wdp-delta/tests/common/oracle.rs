//! Brute-force Zariski decomposition: try every negative-definite set of negative curves,
//! keep the candidates whose positive part is nef with positive coefficients, and compare.

use super::{all_entries, catalog_rays};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wdp_delta::arith::{is_negative_definite, solve_linear, Rat};
use wdp_delta::picard::{DivisorClass, SurfaceModel};
use wdp_delta::zariski::{decompose_at, walk_ray_from, Decomposition};

/// All index sets whose Gram matrix is negative definite, grown one curve at a time.
fn definite_subsets(m: &SurfaceModel) -> Vec<Vec<usize>> {
    let neg: Vec<usize> =
        (0..m.generators.len()).filter(|&i| m.dot(&m.generators[i].1, &m.generators[i].1).is_negative()).collect();
    let mut out = vec![vec![]];
    let mut stack: Vec<Vec<usize>> = vec![vec![]];
    while let Some(s) = stack.pop() {
        let start = s.last().map_or(0, |&l| neg.iter().position(|&x| x == l).unwrap() + 1);
        for &i in &neg[start..] {
            let mut t = s.clone();
            t.push(i);
            let labels: Vec<&str> = t.iter().map(|&k| m.generators[k].0.as_str()).collect();
            if is_negative_definite(&m.generator_gram(&labels).unwrap()) {
                out.push(t.clone());
                stack.push(t);
            }
        }
    }
    out
}

/// The orthogonality system on one support, solved once for the whole ray `a − u·b`:
/// N(u) = n0 + u·n1 and P(u)·Cᵢ = q0ᵢ + u·q1ᵢ for every generator.
struct Candidate {
    support: Vec<usize>,
    n0: Vec<Rat>,
    n1: Vec<Rat>,
    p0: DivisorClass,
    p1: DivisorClass,
    q0: Vec<Rat>,
    q1: Vec<Rat>,
}

fn candidates(m: &SurfaceModel, subsets: &[Vec<usize>], a: &DivisorClass, b: &DivisorClass) -> Vec<Candidate> {
    let neg_b = b.scale(&-Rat::one());
    subsets
        .iter()
        .map(|s| {
            let (mut p0, mut p1) = (a.clone(), neg_b.clone());
            let (mut n0, mut n1) = (vec![], vec![]);
            if !s.is_empty() {
                let labels: Vec<&str> = s.iter().map(|&k| m.generators[k].0.as_str()).collect();
                let g = m.generator_gram(&labels).unwrap();
                let ra: Vec<Rat> = s.iter().map(|&k| m.dot(a, &m.generators[k].1)).collect();
                let rb: Vec<Rat> = s.iter().map(|&k| m.dot(&neg_b, &m.generators[k].1)).collect();
                n0 = solve_linear(&g, &ra).unwrap();
                n1 = solve_linear(&g, &rb).unwrap();
                for (i, &k) in s.iter().enumerate() {
                    p0 = p0.add_scaled(&-&n0[i], &m.generators[k].1);
                    p1 = p1.add_scaled(&-&n1[i], &m.generators[k].1);
                }
            }
            let q0 = m.generators.iter().map(|(_, c)| m.dot(&p0, c)).collect();
            let q1 = m.generators.iter().map(|(_, c)| m.dot(&p1, c)).collect();
            Candidate { support: s.clone(), n0, n1, p0, p1, q0, q1 }
        })
        .collect()
}

fn brute(m: &SurfaceModel, cands: &[Candidate], u: &Rat) -> Vec<Decomposition> {
    let mut found: Vec<Decomposition> = Vec::new();
    'next: for c in cands {
        let mut n = Vec::new();
        for (i, &k) in c.support.iter().enumerate() {
            let x = &c.n0[i] + &(&c.n1[i] * u);
            if !x.is_positive() {
                continue 'next;
            }
            n.push((m.generators[k].0.clone(), x));
        }
        if c.q0.iter().zip(&c.q1).any(|(a, b)| (a + &(b * u)).is_negative()) {
            continue;
        }
        n.sort_by_key(|(l, _)| m.generator_index(l));
        let d = Decomposition { p: c.p0.add_scaled(u, &c.p1), n };
        if !found.contains(&d) {
            found.push(d);
        }
    }
    found
}

/// Samples `per_ray` random rational points on every catalog ray; returns the sample count.
pub fn check_oracle(per_ray: usize) -> usize {
    let entries = all_entries();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut checked = 0;
    for (name, m, a, b) in catalog_rays(&entries) {
        let cands = candidates(m, &definite_subsets(m), &a, &b);
        let ray = walk_ray_from(m, &a, &b).unwrap();
        for _ in 0..per_ray {
            let den: i64 = rng.gen_range(1..=60);
            let k: i64 = rng.gen_range(0..den);
            let u = &ray.tau * &Rat::new(k, den);
            let d = a.add_scaled(&-&u, &b);
            let want = brute(m, &cands, &u);
            assert_eq!(want.len(), 1, "{name} at u = {u}: {} candidates", want.len());
            assert_eq!(decompose_at(m, &d).unwrap(), want[0], "{name} at u = {u}: point solver");
            assert_eq!(ray.decomposition_at(&u).unwrap(), want[0], "{name} at u = {u}: chamber walk");
            checked += 1;
        }
    }
    checked
}

pub fn check_past_threshold() {
    let entries = all_entries();
    for (name, m, a, b) in catalog_rays(&entries) {
        let ray = walk_ray_from(m, &a, &b).unwrap();
        let cands = candidates(m, &definite_subsets(m), &a, &b);
        let past = &ray.tau + &Rat::new(1, 7);
        let c = brute(m, &cands, &past);
        // Past τ the class is not big; any surviving candidate has P² ≤ 0.
        for x in c {
            assert!(!m.dot(&x.p, &x.p).is_positive(), "{name}: big past τ");
        }
    }
}
