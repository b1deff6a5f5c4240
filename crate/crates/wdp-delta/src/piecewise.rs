//! Polynomials of degree at most 2 in the ray parameter, and piecewise versions of them.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use thiserror::Error;

use crate::arith::Rat;

pub const MAX_DEGREE: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PiecewiseError {
    #[error("[{a}, {b}] is not covered by the domain [{lo}, {hi}]")]
    DomainExceeded { a: Rat, b: Rat, lo: Rat, hi: Rat },
    #[error("degree {0} exceeds {MAX_DEGREE}")]
    DegreeTooHigh(usize),
    #[error("pieces disagree at breakpoint {0}")]
    Discontinuous(Rat),
    #[error("breakpoints must be strictly increasing with one more entry than pieces")]
    BadBreakpoints,
}

/// Dense polynomial, ascending coefficients, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Result<Poly, PiecewiseError> {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        if coeffs.len() > MAX_DEGREE + 1 {
            return Err(PiecewiseError::DegreeTooHigh(coeffs.len() - 1));
        }
        Ok(Poly { coeffs })
    }

    pub fn from_ints(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&x| Rat::int(x)).collect()).expect("degree > 2")
    }

    pub fn zero() -> Poly {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: Rat) -> Poly {
        Poly::new(vec![c]).unwrap()
    }

    /// `a + b u`
    pub fn linear(a: Rat, b: Rat) -> Poly {
        Poly::new(vec![a, b]).unwrap()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, u: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * u + c)
    }

    pub fn scale(&self, k: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * k).collect()).unwrap()
    }

    pub fn checked_mul(&self, o: &Poly) -> Result<Poly, PiecewiseError> {
        if self.is_zero() || o.is_zero() {
            return Ok(Poly::zero());
        }
        let mut c = vec![Rat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * Rat::int(i as i64)).collect()).unwrap()
    }

    /// Exact ∫ₐᵇ f.
    pub fn integrate(&self, a: &Rat, b: &Rat) -> Rat {
        let anti = |x: &Rat| -> Rat {
            self.coeffs.iter().enumerate().map(|(i, c)| c * x.pow(i as i32 + 1) / Rat::int(i as i64 + 1)).sum()
        };
        anti(b) - anti(a)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect()).unwrap()
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect()).unwrap()
    }
}

/// Panics past degree 2; use `checked_mul` where the degree is not known to stay small.
impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        self.checked_mul(o).expect("product exceeds degree 2")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "u".into(),
                _ => format!("u^{i}"),
            };
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag == Rat::one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootSearch {
    Root(Rat),
    NoRoot,
    /// A real root exists in `[lo, hi]` and is irrational; the interval holds no other root.
    Irrational {
        lo: Rat,
        hi: Rat,
    },
}

/// Width at which mediant refinement of an irrational root stops.
fn isolation_width() -> Rat {
    Rat::new(1, 10)
}

/// Smallest root of `f` in `[a, b]`. The zero polynomial vanishes everywhere, so `a` is reported.
pub fn smallest_root_in(f: &Poly, a: &Rat, b: &Rat) -> RootSearch {
    if a > b {
        return RootSearch::NoRoot;
    }
    let inside = |r: &Rat| r >= a && r <= b;
    match f.degree() {
        None => RootSearch::Root(a.clone()),
        Some(0) => RootSearch::NoRoot,
        Some(1) => {
            let r = -f.coeff(0) / f.coeff(1);
            if inside(&r) {
                RootSearch::Root(r)
            } else {
                RootSearch::NoRoot
            }
        }
        Some(_) => {
            let (c0, c1, c2) = (f.coeff(0), f.coeff(1), f.coeff(2));
            let disc = &c1 * &c1 - Rat::int(4) * &c2 * &c0;
            if disc.is_negative() {
                return RootSearch::NoRoot;
            }
            if let Some(s) = disc.sqrt_exact() {
                let two_a = Rat::int(2) * &c2;
                let mut roots = [(-&c1 - &s) / &two_a, (-&c1 + &s) / &two_a];
                roots.sort();
                return roots.into_iter().find(inside).map_or(RootSearch::NoRoot, RootSearch::Root);
            }
            // Two irrational roots separated by the vertex; f is monotone on each side.
            let v = -&c1 / (Rat::int(2) * &c2);
            let mut pieces = Vec::new();
            if &v > a {
                pieces.push((a.clone(), if &v < b { v.clone() } else { b.clone() }));
            }
            if &v < b {
                pieces.push((if &v > a { v.clone() } else { a.clone() }, b.clone()));
            }
            for (lo, hi) in pieces {
                let (flo, fhi) = (f.eval(&lo), f.eval(&hi));
                if flo.signum() * fhi.signum() < 0 {
                    return isolate(f, lo, hi);
                }
            }
            RootSearch::NoRoot
        }
    }
}

/// Shrinks a sign-change interval by mediants (Stern–Brocot style) until it is narrow.
fn isolate(f: &Poly, mut lo: Rat, mut hi: Rat) -> RootSearch {
    let slo = f.eval(&lo).signum();
    while &hi - &lo > isolation_width() {
        let m = Rat::from_big(lo.numer() + hi.numer(), lo.denom() + hi.denom());
        let m = if m > lo && m < hi { m } else { (&lo + &hi) / Rat::int(2) };
        if f.eval(&m).signum() == slo {
            lo = m;
        } else {
            hi = m;
        }
    }
    RootSearch::Irrational { lo, hi }
}

/// Piecewise polynomial on `[b₀, b_k]`, continuous at interior breakpoints.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PiecewisePoly {
    breakpoints: Vec<Rat>,
    pieces: Vec<Poly>,
}

impl PiecewisePoly {
    pub fn new(breakpoints: Vec<Rat>, pieces: Vec<Poly>) -> Result<PiecewisePoly, PiecewiseError> {
        if breakpoints.len() != pieces.len() + 1 || breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(PiecewiseError::BadBreakpoints);
        }
        if let Some(d) = pieces.iter().filter_map(Poly::degree).find(|&d| d > MAX_DEGREE) {
            return Err(PiecewiseError::DegreeTooHigh(d));
        }
        for (i, w) in pieces.windows(2).enumerate() {
            let x = &breakpoints[i + 1];
            if w[0].eval(x) != w[1].eval(x) {
                return Err(PiecewiseError::Discontinuous(x.clone()));
            }
        }
        Ok(PiecewisePoly { breakpoints, pieces })
    }

    /// Like `new` but without the continuity requirement; ord terms can jump.
    pub fn new_unchecked_continuity(breakpoints: Vec<Rat>, pieces: Vec<Poly>) -> Result<PiecewisePoly, PiecewiseError> {
        if breakpoints.len() != pieces.len() + 1 || breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(PiecewiseError::BadBreakpoints);
        }
        Ok(PiecewisePoly { breakpoints, pieces })
    }

    pub fn breakpoints(&self) -> &[Rat] {
        &self.breakpoints
    }

    pub fn pieces(&self) -> &[Poly] {
        &self.pieces
    }

    pub fn domain(&self) -> (&Rat, &Rat) {
        (&self.breakpoints[0], self.breakpoints.last().unwrap())
    }

    /// Value at `u`; at a breakpoint the right-hand piece wins, except at the end.
    pub fn eval(&self, u: &Rat) -> Option<Rat> {
        let (lo, hi) = self.domain();
        if u < lo || u > hi {
            return None;
        }
        let i = self.breakpoints[1..].iter().position(|b| u < b).unwrap_or(self.pieces.len() - 1);
        Some(self.pieces[i].eval(u))
    }

    pub fn integrate(&self, a: &Rat, b: &Rat) -> Result<Rat, PiecewiseError> {
        let (lo, hi) = self.domain();
        if a > b || a < lo || b > hi {
            return Err(PiecewiseError::DomainExceeded { a: a.clone(), b: b.clone(), lo: lo.clone(), hi: hi.clone() });
        }
        let mut total = Rat::zero();
        for (i, p) in self.pieces.iter().enumerate() {
            let l = if &self.breakpoints[i] > a { &self.breakpoints[i] } else { a };
            let r = if &self.breakpoints[i + 1] < b { &self.breakpoints[i + 1] } else { b };
            if l < r {
                total += p.integrate(l, r);
            }
        }
        Ok(total)
    }

    pub fn integrate_all(&self) -> Rat {
        let (lo, hi) = self.domain();
        self.integrate(&lo.clone(), &hi.clone()).expect("own domain")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn volume_of_f_ray() {
        let f = PiecewisePoly::new(
            vec![Rat::int(0), Rat::int(1), Rat::int(2)],
            vec![Poly::from_ints(&[5, 0, -2]), Poly::from_ints(&[8, -6, 1])],
        )
        .unwrap();
        let v = f.integrate(&Rat::int(0), &Rat::int(2)).unwrap();
        assert_eq!(v, r(17, 3));
        assert_eq!(v / Rat::int(5), r(17, 15));
    }

    #[test]
    fn zero_and_monomial() {
        let z = PiecewisePoly::new(vec![Rat::int(0), Rat::int(2)], vec![Poly::zero()]).unwrap();
        assert_eq!(z.integrate_all(), Rat::zero());
        let m = PiecewisePoly::new(vec![Rat::int(0), Rat::int(2)], vec![Poly::from_ints(&[0, 0, 1])]).unwrap();
        assert_eq!(m.integrate_all(), r(8, 3));
    }

    #[test]
    fn domain_exceeded() {
        let m = PiecewisePoly::new(vec![Rat::int(0), Rat::int(2)], vec![Poly::from_ints(&[1])]).unwrap();
        assert!(matches!(m.integrate(&Rat::int(0), &Rat::int(3)), Err(PiecewiseError::DomainExceeded { .. })));
    }

    #[test]
    fn rejects_discontinuity_and_degree() {
        let e =
            PiecewisePoly::new(vec![Rat::int(0), Rat::int(1), Rat::int(2)], vec![Poly::from_ints(&[1]), Poly::from_ints(&[2])]);
        assert_eq!(e, Err(PiecewiseError::Discontinuous(Rat::int(1))));
        assert_eq!(Poly::new(vec![Rat::one(); 4]), Err(PiecewiseError::DegreeTooHigh(3)));
    }

    #[test]
    fn roots() {
        let f = Poly::from_ints(&[8, -6, 1]);
        assert_eq!(smallest_root_in(&f, &Rat::int(1), &Rat::int(3)), RootSearch::Root(Rat::int(2)));
        assert_eq!(smallest_root_in(&Poly::from_ints(&[1]), &Rat::int(0), &Rat::int(5)), RootSearch::NoRoot);
        assert_eq!(
            smallest_root_in(&Poly::from_ints(&[5, 0, -2]), &Rat::int(0), &Rat::int(2)),
            RootSearch::Irrational { lo: r(3, 2), hi: r(8, 5) }
        );
        assert_eq!(smallest_root_in(&Poly::from_ints(&[-2, 1]), &Rat::int(0), &Rat::int(1)), RootSearch::NoRoot);
    }

    #[test]
    fn smallest_of_two_rational_roots() {
        let f = Poly::from_ints(&[6, -5, 1]);
        assert_eq!(smallest_root_in(&f, &Rat::int(0), &Rat::int(10)), RootSearch::Root(Rat::int(2)));
        assert_eq!(smallest_root_in(&f, &r(5, 2), &Rat::int(10)), RootSearch::Root(Rat::int(3)));
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_ints(&[5, 0, -2]).to_string(), "5 - 2u^2");
        assert_eq!(Poly::linear(r(-1, 2), Rat::one()).to_string(), "-1/2 + u");
    }
}
