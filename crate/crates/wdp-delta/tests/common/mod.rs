#![allow(dead_code)]

pub mod fixtures;
pub mod invariants;
pub mod oracle;

use wdp_delta::arith::Rat;
use wdp_delta::catalog::{get_surface, list_surfaces, CatalogEntry};
use wdp_delta::delta::{Extraction, ExtractionKind};
use wdp_delta::picard::{DivisorClass, SurfaceModel};

/// `c0 + c1·u`.
#[derive(Clone, Debug, PartialEq)]
pub struct Affine(pub Rat, pub Rat);

/// Parses affine expressions in `u` as they appear in case splits: `2-u`, `3(u-1)`, `2u/3`, `-u/2`.
pub fn affine(s: &str) -> Affine {
    let toks: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    let v = expr(&toks, &mut pos);
    assert_eq!(pos, toks.len(), "trailing input in {s:?}");
    v
}

fn expr(t: &[char], p: &mut usize) -> Affine {
    let mut acc = term(t, p);
    while *p < t.len() && (t[*p] == '+' || t[*p] == '-') {
        let neg = t[*p] == '-';
        *p += 1;
        let b = term(t, p);
        acc = if neg { Affine(&acc.0 - &b.0, &acc.1 - &b.1) } else { Affine(&acc.0 + &b.0, &acc.1 + &b.1) };
    }
    acc
}

fn mul(a: Affine, b: Affine) -> Affine {
    if a.1.is_zero() {
        Affine(&a.0 * &b.0, &a.0 * &b.1)
    } else {
        assert!(b.1.is_zero(), "product of two non-constant terms");
        Affine(&a.0 * &b.0, &a.1 * &b.0)
    }
}

fn term(t: &[char], p: &mut usize) -> Affine {
    let mut acc = factor(t, p);
    loop {
        if *p >= t.len() {
            return acc;
        }
        match t[*p] {
            '*' => {
                *p += 1;
                acc = mul(acc, factor(t, p));
            }
            '/' => {
                *p += 1;
                let d = factor(t, p);
                assert!(d.1.is_zero());
                acc = Affine(&acc.0 / &d.0, &acc.1 / &d.0);
            }
            'u' | '(' => acc = mul(acc, factor(t, p)),
            c if c.is_ascii_digit() => acc = mul(acc, factor(t, p)),
            _ => return acc,
        }
    }
}

fn factor(t: &[char], p: &mut usize) -> Affine {
    match t[*p] {
        '-' => {
            *p += 1;
            let f = factor(t, p);
            Affine(-f.0, -f.1)
        }
        'u' => {
            *p += 1;
            Affine(Rat::zero(), Rat::one())
        }
        '(' => {
            *p += 1;
            let v = expr(t, p);
            assert_eq!(t[*p], ')');
            *p += 1;
            v
        }
        _ => {
            let start = *p;
            while *p < t.len() && t[*p].is_ascii_digit() {
                *p += 1;
            }
            let n: i64 = t[start..*p].iter().collect::<String>().parse().expect("number");
            Affine(Rat::int(n), Rat::zero())
        }
    }
}

pub fn q(s: &str) -> Rat {
    s.parse().expect("rational literal")
}

pub fn all_entries() -> Vec<CatalogEntry> {
    list_surfaces().into_iter().map(|id| get_surface(id).expect("catalog entry loads")).collect()
}

/// Model, anchor and class of an extraction's ray.
pub fn ray_of<'e>(e: &'e CatalogEntry, x: &Extraction) -> (&'e SurfaceModel, DivisorClass, DivisorClass) {
    let (model, anchor) = match &x.on {
        None => (&e.model, e.model.anti_canonical.clone()),
        Some(n) => {
            let a = e.aux_model(n).expect("aux model");
            (&a.model, a.anchor())
        }
    };
    let class = match &x.kind {
        ExtractionKind::Curve(l) => model.generator(l).unwrap().clone(),
        ExtractionKind::Movable { class, .. } => class.clone(),
        ExtractionKind::Exceptional => model.generator("Exc").unwrap().clone(),
    };
    (model, anchor, class)
}

/// Every distinct ray the catalog walks: each generator of each base surface, and every plan's
/// extraction and witness (including movable curves and auxiliary blow-ups).
pub fn catalog_rays(entries: &[CatalogEntry]) -> Vec<(String, &SurfaceModel, DivisorClass, DivisorClass)> {
    let mut out: Vec<(String, &SurfaceModel, DivisorClass, DivisorClass)> = Vec::new();
    for e in entries {
        for (l, c) in &e.model.generators {
            out.push((format!("{}/{l}", e.id()), &e.model, e.model.anti_canonical.clone(), c.clone()));
        }
        for p in &e.plans {
            for x in [&p.extraction, &p.witness] {
                let (m, a, b) = ray_of(e, x);
                let name = format!("{}/{}", e.id(), x.label());
                if !out.iter().any(|(n, ..)| *n == name) {
                    out.push((name, m, a, b));
                }
            }
        }
    }
    out
}
