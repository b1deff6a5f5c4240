//! Zariski decomposition at a point and chamber walking along `A − uB`.

use thiserror::Error;

use crate::arith::{is_negative_definite, solve_linear, Rat};
use crate::picard::{DivisorClass, PicardError, SurfaceModel};
use crate::piecewise::{smallest_root_in, PiecewisePoly, Poly, RootSearch};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZariskiError {
    #[error("not pseudo-effective: {0}")]
    NotPseudoEffective(String),
    #[error("irrational breakpoint in [{lo}, {hi}]")]
    IrrationalBreakpoint { lo: Rat, hi: Rat },
    #[error("ray never leaves the pseudo-effective cone")]
    Unbounded,
    #[error("support just after u = {0} could not be resolved")]
    Unresolved(Rat),
    #[error(transparent)]
    Picard(#[from] PicardError),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    pub p: DivisorClass,
    /// Strictly positive coefficients, in generator order.
    pub n: Vec<(String, Rat)>,
}

impl Decomposition {
    pub fn support(&self) -> Vec<&str> {
        self.n.iter().map(|(l, _)| l.as_str()).collect()
    }

    pub fn coefficient(&self, label: &str) -> Rat {
        self.n.iter().find(|(l, _)| l == label).map_or_else(Rat::zero, |(_, c)| c.clone())
    }

    pub fn negative_part(&self, model: &SurfaceModel) -> DivisorClass {
        let mut acc = DivisorClass::zero(model.rank());
        for (l, c) in &self.n {
            acc = acc.add_scaled(c, model.generator(l).expect("support label"));
        }
        acc
    }
}

/// Solution of the orthogonality system on a fixed support, as affine functions of `u`.
#[derive(Clone, Debug)]
struct Parametric {
    support: Vec<usize>,
    n0: Vec<Rat>,
    n1: Vec<Rat>,
    p0: DivisorClass,
    p1: DivisorClass,
}

impl Parametric {
    /// `None` when the support Gram is not negative definite.
    fn solve(model: &SurfaceModel, a: &DivisorClass, b: &DivisorClass, support: Vec<usize>) -> Option<Parametric> {
        let labels: Vec<&str> = support.iter().map(|&i| model.generators[i].0.as_str()).collect();
        let mut p0 = a.clone();
        let mut p1 = b.scale(&Rat::int(-1));
        if support.is_empty() {
            return Some(Parametric { support, n0: vec![], n1: vec![], p0, p1 });
        }
        let g = model.generator_gram(&labels).ok()?;
        if !is_negative_definite(&g) {
            return None;
        }
        let cs: Vec<&DivisorClass> = support.iter().map(|&i| &model.generators[i].1).collect();
        let ra: Vec<Rat> = cs.iter().map(|c| model.dot(a, c)).collect();
        let rb: Vec<Rat> = cs.iter().map(|c| -model.dot(b, c)).collect();
        let n0 = solve_linear(&g, &ra).ok()?;
        let n1 = solve_linear(&g, &rb).ok()?;
        for (k, c) in cs.iter().enumerate() {
            p0 = p0.add_scaled(&-&n0[k], c);
            p1 = p1.add_scaled(&-&n1[k], c);
        }
        Some(Parametric { support, n0, n1, p0, p1 })
    }

    /// Every validity function as `(value at 0, slope)`: support coefficients, then P·C off support.
    fn validity(&self, model: &SurfaceModel) -> Vec<(Rat, Rat)> {
        let mut out: Vec<(Rat, Rat)> = self.n0.iter().cloned().zip(self.n1.iter().cloned()).collect();
        for (i, (_, c)) in model.generators.iter().enumerate() {
            if !self.support.contains(&i) {
                out.push((model.dot(&self.p0, c), model.dot(&self.p1, c)));
            }
        }
        out
    }
}

/// Unique Zariski decomposition of `d`, by growing the support from the empty set.
pub fn decompose_at(model: &SurfaceModel, d: &DivisorClass) -> Result<Decomposition, ZariskiError> {
    if d.rank() != model.rank() {
        return Err(PicardError::DimensionMismatch { expected: model.rank(), got: d.rank() }.into());
    }
    let mut support: Vec<usize> = Vec::new();
    loop {
        let labels: Vec<&str> = support.iter().map(|&i| model.generators[i].0.as_str()).collect();
        let (p, n) = if support.is_empty() {
            (d.clone(), vec![])
        } else {
            let g = model.generator_gram(&labels)?;
            if !is_negative_definite(&g) {
                return Err(ZariskiError::NotPseudoEffective(format!(
                    "support {{{}}} is not negative definite",
                    labels.join(", ")
                )));
            }
            let rhs: Vec<Rat> = support.iter().map(|&i| model.dot(d, &model.generators[i].1)).collect();
            let n = solve_linear(&g, &rhs).expect("negative definite matrices are invertible");
            let mut p = d.clone();
            for (k, &i) in support.iter().enumerate() {
                p = p.add_scaled(&-&n[k], &model.generators[i].1);
            }
            (p, n)
        };
        if let Some(k) = n.iter().position(Rat::is_negative) {
            return Err(ZariskiError::NotPseudoEffective(format!("negative coefficient {} on {}", n[k], labels[k])));
        }
        let grow: Vec<usize> = (0..model.generators.len())
            .filter(|i| !support.contains(i) && model.dot(&p, &model.generators[*i].1).is_negative())
            .collect();
        if grow.is_empty() {
            let n = support
                .iter()
                .zip(n)
                .filter(|(_, c)| c.is_positive())
                .map(|(&i, c)| (model.generators[i].0.clone(), c))
                .collect::<Vec<_>>();
            let mut n = n;
            n.sort_by_key(|(l, _)| model.generator_index(l));
            return Ok(Decomposition { p, n });
        }
        support.extend(grow);
        support.sort();
    }
}

/// One chamber `[lo, hi]` with fixed support; `P(u) = p0 + u·p1`, `N_C(u) = c0 + u·c1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Chamber {
    pub lo: Rat,
    pub hi: Rat,
    pub p0: DivisorClass,
    pub p1: DivisorClass,
    pub n: Vec<(String, Rat, Rat)>,
}

impl Chamber {
    pub fn support(&self) -> Vec<&str> {
        self.n.iter().map(|(l, _, _)| l.as_str()).collect()
    }

    pub fn p_at(&self, u: &Rat) -> DivisorClass {
        self.p0.add_scaled(u, &self.p1)
    }

    pub fn n_coeff(&self, label: &str) -> Poly {
        self.n.iter().find(|(l, _, _)| l == label).map_or_else(Poly::zero, |(_, c0, c1)| Poly::linear(c0.clone(), c1.clone()))
    }

    pub fn decomposition_at(&self, u: &Rat) -> Decomposition {
        Decomposition {
            p: self.p_at(u),
            n: self.n.iter().map(|(l, c0, c1)| (l.clone(), c0 + u * c1)).filter(|(_, c)| c.is_positive()).collect(),
        }
    }

    /// `P(u)²` on this chamber.
    pub fn p_squared(&self, model: &SurfaceModel) -> Poly {
        Poly::new(vec![model.dot(&self.p0, &self.p0), Rat::int(2) * model.dot(&self.p0, &self.p1), model.dot(&self.p1, &self.p1)])
            .expect("quadratic")
    }

    /// `P(u)·c` on this chamber.
    pub fn p_dot(&self, model: &SurfaceModel, c: &DivisorClass) -> Poly {
        Poly::linear(model.dot(&self.p0, c), model.dot(&self.p1, c))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RayDecomposition {
    pub a: DivisorClass,
    pub b: DivisorClass,
    pub chambers: Vec<Chamber>,
    pub tau: Rat,
    /// Start of a pseudo-effective stretch with `P² = 0`, if the walk met one.
    pub zero_volume_from: Option<Rat>,
}

impl RayDecomposition {
    pub fn chamber_at(&self, u: &Rat) -> Option<&Chamber> {
        self.chambers.iter().find(|c| &c.lo <= u && u <= &c.hi)
    }

    pub fn decomposition_at(&self, u: &Rat) -> Option<Decomposition> {
        self.chamber_at(u).map(|c| c.decomposition_at(u))
    }

    fn breakpoints(&self) -> Vec<Rat> {
        let mut b = vec![self.chambers[0].lo.clone()];
        b.extend(self.chambers.iter().map(|c| c.hi.clone()));
        b
    }

    pub fn volume(&self, model: &SurfaceModel) -> PiecewisePoly {
        PiecewisePoly::new(self.breakpoints(), self.chambers.iter().map(|c| c.p_squared(model)).collect())
            .expect("P(u)^2 is continuous")
    }

    pub fn p_dot(&self, model: &SurfaceModel, c: &DivisorClass) -> PiecewisePoly {
        PiecewisePoly::new(self.breakpoints(), self.chambers.iter().map(|ch| ch.p_dot(model, c)).collect())
            .expect("P(u) is continuous")
    }

    /// `Σ_{C ∈ labels} N_C(u)·(C·e)`.
    pub fn n_dot(&self, model: &SurfaceModel, labels: &[String], e: &DivisorClass) -> Result<PiecewisePoly, ZariskiError> {
        let mut pieces = Vec::new();
        for ch in &self.chambers {
            let mut acc = Poly::zero();
            for l in labels {
                let k = model.dot(model.generator(l)?, e);
                acc = &acc + &ch.n_coeff(l).scale(&k);
            }
            pieces.push(acc);
        }
        Ok(PiecewisePoly::new(self.breakpoints(), pieces).expect("N(u) is continuous"))
    }

    /// Whether `label` is ever in the support of `N(u)` for `u` inside a chamber.
    pub fn ever_in_support(&self, label: &str) -> bool {
        self.chambers.iter().any(|c| c.support().contains(&label))
    }
}

/// Walk `−K − uB` on `model`.
pub fn walk_ray(model: &SurfaceModel, b: &DivisorClass) -> Result<RayDecomposition, ZariskiError> {
    walk_ray_from(model, &model.anti_canonical, b)
}

/// Walk `A − uB` for a nef anchor `A` (on blow-ups the pullback of `−K`).
pub fn walk_ray_from(model: &SurfaceModel, a: &DivisorClass, b: &DivisorClass) -> Result<RayDecomposition, ZariskiError> {
    for d in [a, b] {
        if d.rank() != model.rank() {
            return Err(PicardError::DimensionMismatch { expected: model.rank(), got: d.rank() }.into());
        }
    }
    if !model.is_nef(a) {
        return Err(PicardError::InvalidModel("ray anchor is not nef".into()).into());
    }
    let at = |u: &Rat| a.add_scaled(&-u, b);
    let mut chambers: Vec<Chamber> = Vec::new();
    let mut zero_volume_from = None;
    let mut lo = Rat::zero();
    while let Some(par) = next_support(model, a, b, &lo, &at)? {
        if let Some(last) = chambers.last() {
            let pl = last.p_at(&lo);
            if model.dot(&pl, &pl).is_zero() && zero_volume_from.is_none() {
                zero_volume_from = Some(lo.clone());
            }
        }
        let mut hi: Option<Rat> = None;
        for (f0, f1) in par.validity(model) {
            if !f1.is_negative() {
                continue;
            }
            let f = Poly::linear(f0.clone(), f1.clone());
            let reach = &lo + (&f0 / &f1).abs() + lo.abs() + Rat::one();
            match smallest_root_in(&f, &lo, &reach) {
                RootSearch::Root(r) if r > lo => {
                    if hi.as_ref().is_none_or(|h| &r < h) {
                        hi = Some(r);
                    }
                }
                RootSearch::Irrational { lo, hi } => return Err(ZariskiError::IrrationalBreakpoint { lo, hi }),
                _ => {}
            }
        }
        let hi = hi.ok_or(ZariskiError::Unbounded)?;
        let ch = Chamber {
            lo: lo.clone(),
            hi: hi.clone(),
            p0: par.p0.clone(),
            p1: par.p1.clone(),
            n: par
                .support
                .iter()
                .enumerate()
                .map(|(k, &i)| (model.generators[i].0.clone(), par.n0[k].clone(), par.n1[k].clone()))
                .collect(),
        };
        match chambers.last_mut() {
            Some(prev) if prev.p0 == ch.p0 && prev.p1 == ch.p1 && prev.n == ch.n => prev.hi = hi.clone(),
            _ => chambers.push(ch),
        }
        lo = hi;
    }
    let Some(last) = chambers.last() else {
        return Err(ZariskiError::NotPseudoEffective("ray leaves the cone at u = 0".into()));
    };
    let tau = last.hi.clone();
    // τ must also be where the volume of the last chamber first vanishes.
    if zero_volume_from.is_none() {
        let v = last.p_squared(model);
        if let RootSearch::Irrational { lo, hi } = smallest_root_in(&v, &last.lo, &tau) {
            return Err(ZariskiError::IrrationalBreakpoint { lo, hi });
        }
    }
    Ok(RayDecomposition { a: a.clone(), b: b.clone(), chambers, tau, zero_volume_from })
}

/// Support valid on `[lo, lo + ε]` for small ε > 0, or `None` if the ray is not
/// pseudo-effective just after `lo`. Runs the support-growing algorithm on the germ
/// `lo + ε`, comparing affine quantities by value at `lo` and then by slope.
fn next_support(
    model: &SurfaceModel,
    a: &DivisorClass,
    b: &DivisorClass,
    lo: &Rat,
    at: &dyn Fn(&Rat) -> DivisorClass,
) -> Result<Option<Parametric>, ZariskiError> {
    let germ_negative = |f0: &Rat, f1: &Rat| {
        let v = f0 + lo * f1;
        v.is_negative() || (v.is_zero() && f1.is_negative())
    };
    let mut support: Vec<usize> = Vec::new();
    loop {
        let Some(par) = Parametric::solve(model, a, b, support.clone()) else {
            return stop(model, lo, at);
        };
        if par.n0.iter().zip(&par.n1).any(|(c0, c1)| germ_negative(c0, c1)) {
            return stop(model, lo, at);
        }
        let grow: Vec<usize> = (0..model.generators.len())
            .filter(|i| !support.contains(i))
            .filter(|&i| {
                let c = &model.generators[i].1;
                germ_negative(&model.dot(&par.p0, c), &model.dot(&par.p1, c))
            })
            .collect();
        if grow.is_empty() {
            return Ok(Some(par));
        }
        support.extend(grow);
        support.sort();
    }
}

/// The germ after `lo` is not pseudo-effective: fine at `τ` (where `P² = 0`), an error elsewhere.
fn stop(model: &SurfaceModel, lo: &Rat, at: &dyn Fn(&Rat) -> DivisorClass) -> Result<Option<Parametric>, ZariskiError> {
    match decompose_at(model, &at(lo)) {
        Ok(d) if model.dot(&d.p, &d.p).is_zero() => Ok(None),
        Err(ZariskiError::NotPseudoEffective(_)) if lo.is_zero() => Ok(None),
        _ => Err(ZariskiError::Unresolved(lo.clone())),
    }
}
