//! Chamber-by-chamber decompositions of catalog rays, with P(u) and N(u) written in the
//! curve coordinates of each surface's intersection matrix.

use super::{affine, q, Affine};
use wdp_delta::catalog::get_surface;
use wdp_delta::picard::DivisorClass;
use wdp_delta::zariski::{walk_ray_from, RayDecomposition};

pub struct Piece {
    lo: &'static str,
    hi: &'static str,
    p: &'static [&'static str],
    n: &'static [&'static str],
}

const fn piece(lo: &'static str, hi: &'static str, p: &'static [&'static str], n: &'static [&'static str]) -> Piece {
    Piece { lo, hi, p, n }
}

pub enum Ray {
    Curve(&'static str),
    Movable(&'static str),
}

fn walk(id: &str, ray: &Ray) -> RayDecomposition {
    let e = get_surface(id).unwrap();
    let b = match ray {
        Ray::Curve(l) => e.model.generator(l).unwrap().clone(),
        Ray::Movable(c) => DivisorClass::parse(c, &e.model.basis).unwrap(),
    };
    walk_ray_from(&e.model, &e.model.anti_canonical, &b).unwrap()
}

/// Class of `Σ aᵢ(u)·Cᵢ` over the generators in declared order, as (constant, slope).
pub fn combine(id: &str, coords: &[&str]) -> (DivisorClass, DivisorClass) {
    let e = get_surface(id).unwrap();
    assert_eq!(coords.len(), e.model.generators.len(), "{id}: tuple length");
    let mut c0 = DivisorClass::zero(e.model.rank());
    let mut c1 = DivisorClass::zero(e.model.rank());
    for (s, (_, g)) in coords.iter().zip(&e.model.generators) {
        let Affine(a, b) = affine(s);
        c0 = c0.add_scaled(&a, g);
        c1 = c1.add_scaled(&b, g);
    }
    (c0, c1)
}

pub fn check(f: &Fixture) {
    let Fixture { id, ref ray, pieces, tau } = *f;
    let r = walk(id, ray);
    let e = get_surface(id).unwrap();
    let labels: Vec<&str> = e.model.labels().collect();
    assert_eq!(
        r.chambers.len(),
        pieces.len(),
        "{id}: chamber count, got {:?}",
        r.chambers.iter().map(|c| (c.lo.to_string(), c.hi.to_string())).collect::<Vec<_>>()
    );
    for (c, want) in r.chambers.iter().zip(pieces) {
        let at = format!("{id} on [{}, {}]", want.lo, want.hi);
        assert_eq!((c.lo.clone(), c.hi.clone()), (q(want.lo), q(want.hi)), "{at}: interval");
        let (p0, p1) = combine(id, want.p);
        assert_eq!((&c.p0, &c.p1), (&p0, &p1), "{at}: P(u)");
        let mut support = Vec::new();
        let n: Vec<&str> = if want.n.is_empty() { vec!["0"; labels.len()] } else { want.n.to_vec() };
        for (l, s) in labels.iter().zip(&n) {
            let a = affine(s);
            if a.0.is_zero() && a.1.is_zero() {
                continue;
            }
            support.push(*l);
            let (_, c0, c1) = c.n.iter().find(|(x, ..)| x == l).unwrap_or_else(|| panic!("{at}: {l} missing from support"));
            assert_eq!((c0, c1), (&a.0, &a.1), "{at}: N coefficient of {l}");
        }
        assert_eq!(c.support(), support, "{at}: support");
    }
    assert_eq!(r.tau, q(tau), "{id}: threshold");
}

pub struct Fixture {
    pub id: &'static str,
    pub ray: Ray,
    pub pieces: &'static [Piece],
    pub tau: &'static str,
}

impl Fixture {
    pub fn name(&self) -> String {
        match self.ray {
            Ray::Curve(l) | Ray::Movable(l) => format!("{}/{l}", self.id),
        }
    }
}

const fn fx(id: &'static str, ray: Ray, pieces: &'static [Piece], tau: &'static str) -> Fixture {
    Fixture { id, ray, pieces, tau }
}

pub static FIXTURES: &[Fixture] = &[
    fx(
        "dp5-1",
        Ray::Curve("F"),
        &[
            piece("0", "1", &["0", "0", "0", "1", "1", "1", "2", "-u"], &[]),
            piece("1", "2", &["1-u", "1-u", "1-u", "1", "1", "1", "2", "-u"], &["u-1", "u-1", "u-1", "0", "0", "0", "0", "0"]),
        ],
        "2",
    ),
    fx(
        "dp5-1",
        Ray::Curve("E1"),
        &[
            piece("0", "1", &["-u", "0", "0", "1", "1", "1", "2", "-u/2"], &["0", "0", "0", "0", "0", "0", "0", "u/2"]),
            piece("1", "2", &["-u", "0", "0", "2-u", "1", "1", "2", "-u/2"], &["0", "0", "0", "u-1", "0", "0", "0", "u/2"]),
        ],
        "2",
    ),
    fx(
        "dp5-1",
        Ray::Curve("E4"),
        &[
            piece("0", "1", &["0", "0", "0", "1-u", "1", "1", "2", "0"], &[]),
            piece(
                "1",
                "2",
                &["2-2u", "0", "0", "1-u", "1", "1", "3-u", "1-u"],
                &["2(u-1)", "0", "0", "0", "0", "0", "u-1", "u-1"],
            ),
        ],
        "2",
    ),
    fx(
        "dp5-1",
        Ray::Curve("E7"),
        &[
            piece("0", "1", &["0", "0", "0", "1", "1", "1", "2-u", "0"], &[]),
            piece("1", "2", &["0", "0", "0", "2-u", "2-u", "2-u", "2-u", "0"], &["0", "0", "0", "u-1", "u-1", "u-1", "0", "0"]),
        ],
        "2",
    ),
    fx(
        "dp5-3",
        Ray::Curve("E1"),
        &[
            piece("0", "1", &["2-u", "3", "0", "2", "1", "0"], &[]),
            piece("1", "2", &["2-u", "3(2-u)", "0", "2(2-u)", "2-u", "0"], &["0", "3(u-1)", "0", "2(u-1)", "u-1", "0"]),
        ],
        "2",
    ),
    fx(
        "dp5-3",
        Ray::Curve("E2"),
        &[
            piece("0", "1", &["2", "3-u", "0", "2-2u/3", "1-u/3", "0"], &["0", "0", "0", "2u/3", "u/3", "0"]),
            piece("1", "3", &["3-u", "3-u", "0", "2-2u/3", "1-u/3", "0"], &["u-1", "0", "0", "2u/3", "u/3", "0"]),
        ],
        "3",
    ),
    fx(
        "dp5-3",
        Ray::Curve("F2"),
        &[
            piece("0", "1", &["2", "3", "0", "2-u/2", "1-u", "0"], &["0", "0", "0", "u/2", "0", "0"]),
            piece("1", "2", &["2", "3", "2(1-u)", "2-u/2", "1-u", "1-u"], &["0", "0", "2(u-1)", "u/2", "0", "u-1"]),
            piece("2", "3", &["2", "5-u", "2(1-u)", "3-u", "1-u", "1-u"], &["0", "u-2", "2(u-1)", "u-1", "0", "u-1"]),
        ],
        "3",
    ),
    fx(
        "dp5-3",
        Ray::Curve("E3"),
        &[
            piece("0", "3", &["2", "3", "-u", "2-u/3", "1-2u/3", "-u/2"], &["0", "0", "0", "u/3", "2u/3", "u/2"]),
            piece("3", "4", &["2", "6-u", "-u", "4-u", "2-u", "-u/2"], &["0", "u-3", "0", "u-2", "u-1", "u/2"]),
        ],
        "4",
    ),
    fx(
        "dp5-6",
        Ray::Curve("E1"),
        &[piece("0", "5", &["5-u", "2-2u/5", "4-4u/5", "6-6u/5", "3-3u/5"], &["0", "2u/5", "4u/5", "6u/5", "3u/5"])],
        "5",
    ),
    fx(
        "dp5-6",
        Ray::Curve("F1"),
        &[piece("0", "2", &["5", "2-u", "4-3u/4", "6-u/2", "3-u/4"], &["0", "0", "3u/4", "u/2", "u/4"])],
        "2",
    ),
    fx(
        "dp5-6",
        Ray::Curve("F2"),
        &[
            piece("0", "3/2", &["5", "2-u/2", "4-u", "6-2u/3", "3-u/3"], &["0", "u/2", "0", "2u/3", "u/3"]),
            piece("3/2", "4", &["2(4-u)", "2-u/2", "4-u", "6-2(u-1)", "3-(u-1)"], &["2u-3", "u/2", "0", "2(u-1)", "u-1"]),
        ],
        "4",
    ),
    fx(
        "dp5-6",
        Ray::Curve("F4"),
        &[
            piece("0", "4/3", &["5", "2-u/4", "4-u/2", "6-3u/4", "3-u"], &["0", "u/4", "u/2", "3u/4", "0"]),
            piece("4/3", "3", &["3(3-u)", "3-u", "2(3-u)", "3(3-u)", "3-u"], &["3u-4", "u-1", "2(u-1)", "3(u-1)", "0"]),
        ],
        "3",
    ),
    fx(
        "dp6-1",
        Ray::Curve("F"),
        &[
            piece("0", "1", &["2", "2", "2", "3-u"], &[]),
            piece("1", "3", &["3-u", "3-u", "3-u", "3-u"], &["u-1", "u-1", "u-1", "0"]),
        ],
        "3",
    ),
    fx("dp6-1", Ray::Curve("E1"), &[piece("0", "2", &["2-u", "2", "2", "3-u/2"], &["0", "0", "0", "u/2"])], "2"),
    fx(
        "dp6-5",
        Ray::Curve("E"),
        &[piece("0", "6", &["6-u", "(6-u)/3", "2(6-u)/3", "(6-u)/2"], &["0", "u/3", "2u/3", "u/2"])],
        "6",
    ),
    fx(
        "dp6-5",
        Ray::Curve("F2"),
        &[
            piece("0", "1", &["6", "2-u/2", "4-u", "3"], &["0", "u/2", "0", "0"]),
            piece("1", "4", &["2(4-u)", "2-u/2", "4-u", "4-u"], &["2(u-1)", "u/2", "0", "u-1"]),
        ],
        "4",
    ),
    fx(
        "dp6-5",
        Ray::Curve("F3"),
        &[
            piece("0", "1", &["6", "2", "4", "3-u"], &[]),
            piece("1", "3", &["3(3-u)", "3-u", "2(3-u)", "3-u"], &["3(u-1)", "u-1", "2(u-1)", "0"]),
        ],
        "3",
    ),
    fx(
        "dp6-5",
        Ray::Movable("h-e1"),
        &[piece("0", "3", &["2(3-u)", "2(3-u)/3", "4(3-u)/3", "3-u"], &["0", "2u/3", "u/3", "0"])],
        "3",
    ),
    fx(
        "dp6-6",
        Ray::Curve("E1"),
        &[
            piece("0", "1", &["2-u", "2", "1", "0", "0", "1"], &[]),
            piece("1", "2", &["2-u", "3-u", "1", "0", "0", "2-u"], &["0", "u-1", "0", "0", "0", "u-1"]),
        ],
        "2",
    ),
    fx(
        "dp7-1",
        Ray::Curve("E1"),
        &[piece("0", "1", &["3-u", "4", "2"], &[]), piece("1", "3", &["3-u", "2(3-u)", "3-u"], &["0", "2(u-1)", "u-1"])],
        "3",
    ),
    fx(
        "dp7-1",
        Ray::Curve("E2"),
        &[
            piece("0", "1", &["3", "4-u", "2-u/2"], &["0", "0", "u/2"]),
            piece("1", "4", &["4-u", "4-u", "2-u/2"], &["u-1", "0", "u/2"]),
        ],
        "4",
    ),
    fx(
        "dp7-1",
        Ray::Curve("F"),
        &[piece("0", "1", &["3", "4", "2-u"], &[]), piece("1", "2", &["3", "5-u", "2-u"], &["0", "u-1", "0"])],
        "2",
    ),
    fx(
        "dp7-1",
        Ray::Movable("h-e1"),
        &[
            piece("0", "2", &["3-u", "4-u", "2-u/2"], &["0", "0", "u/2"]),
            piece("2", "3", &["3-u", "2(3-u)", "3-u"], &["0", "u-2", "u-1"]),
        ],
        "3",
    ),
    fx("dp8-sigma2", Ray::Curve("C0"), &[piece("0", "2", &["2-u", "4"], &[])], "2"),
    fx("dp8-sigma2", Ray::Curve("Gamma"), &[piece("0", "4", &["2-u/2", "4-u"], &["u/2", "0"])], "4"),
    fx("dp8-sigma1", Ray::Curve("C0"), &[piece("0", "2", &["2-u", "3"], &[])], "2"),
    fx(
        "dp8-sigma1",
        Ray::Curve("Gamma"),
        &[piece("0", "1", &["2", "3-u"], &[]), piece("1", "3", &["3-u", "3-u"], &["u-1", "0"])],
        "3",
    ),
];
