//! Picard lattices of surfaces: pairing, nef test, blow-ups, (−1)-curve enumeration, strata.

use std::fmt;

use thiserror::Error;

use crate::arith::{dot, rvec, ArithError, Rat, RatMatrix, RatVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PicardError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("declared root {0} is not a (-2)-class orthogonal to K")]
    InvalidRoot(String),
    #[error("cannot parse divisor class {0:?}")]
    ParseClass(String),
    #[error("(-1)-classes are infinite on a blow-up of {0} points")]
    LatticeTooLarge(usize),
    #[error("invalid surface model: {0}")]
    InvalidModel(String),
}

impl From<ArithError> for PicardError {
    fn from(e: ArithError) -> PicardError {
        match e {
            ArithError::DimensionMismatch { expected, got } => PicardError::DimensionMismatch { expected, got },
            other => PicardError::InvalidModel(other.to_string()),
        }
    }
}

/// Coefficient vector in a model's basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct DivisorClass(pub RatVector);

impl DivisorClass {
    pub fn from_ints(c: &[i64]) -> DivisorClass {
        DivisorClass(rvec(c))
    }

    pub fn zero(rank: usize) -> DivisorClass {
        DivisorClass(vec![Rat::zero(); rank])
    }

    pub fn unit(rank: usize, i: usize) -> DivisorClass {
        let mut d = DivisorClass::zero(rank);
        d.0[i] = Rat::one();
        d
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    pub fn add(&self, o: &DivisorClass) -> DivisorClass {
        DivisorClass(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &DivisorClass) -> DivisorClass {
        DivisorClass(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &Rat) -> DivisorClass {
        DivisorClass(self.0.iter().map(|a| a * k).collect())
    }

    /// `self + k·o`
    pub fn add_scaled(&self, k: &Rat, o: &DivisorClass) -> DivisorClass {
        DivisorClass(self.0.iter().zip(&o.0).map(|(a, b)| a + k * b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rat::is_zero)
    }

    /// Pullback along a point blow-up: same coefficients, zero on the new exceptional class.
    pub fn pullback(&self) -> DivisorClass {
        let mut v = self.0.clone();
        v.push(Rat::zero());
        DivisorClass(v)
    }

    /// Render as a combination of basis labels, e.g. `h - e1 - e2`.
    pub fn render(&self, basis: &[String]) -> String {
        let mut out = String::new();
        for (c, l) in self.0.iter().zip(basis) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag != Rat::one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(l);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Parse `2h - e1 - e2`, `1/2C0 + Gamma` or a bare tuple `(1,0,-1)`.
    pub fn parse(s: &str, basis: &[String]) -> Result<DivisorClass, PicardError> {
        let err = || PicardError::ParseClass(s.to_string());
        let t = s.trim();
        if let Some(inner) = t.strip_prefix('(').and_then(|x| x.strip_suffix(')')) {
            let v: Result<Vec<Rat>, _> = inner.split(',').map(|x| x.trim().parse::<Rat>()).collect();
            let v = v.map_err(|_| err())?;
            if v.len() != basis.len() {
                return Err(PicardError::DimensionMismatch { expected: basis.len(), got: v.len() });
            }
            return Ok(DivisorClass(v));
        }
        let mut d = DivisorClass::zero(basis.len());
        let compact: String = t.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut terms = Vec::new();
        let mut cur = String::new();
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        for term in terms {
            let (sign, body) = match term.strip_prefix('-') {
                Some(b) => (-1, b),
                None => (1, term.strip_prefix('+').unwrap_or(&term)),
            };
            // Longest basis label that ends the term wins, the rest is the coefficient.
            let (idx, label) = basis
                .iter()
                .enumerate()
                .filter(|(_, l)| body.ends_with(l.as_str()))
                .max_by_key(|(_, l)| l.len())
                .ok_or_else(err)?;
            let coef_str = &body[..body.len() - label.len()];
            let coef_str = coef_str.strip_suffix('*').unwrap_or(coef_str);
            let coef = if coef_str.is_empty() { Rat::one() } else { coef_str.parse::<Rat>().map_err(|_| err())? };
            d.0[idx] += if sign < 0 { -coef } else { coef };
        }
        Ok(d)
    }
}

/// A point stratum on a curve: the curve and the curves through the point besides it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StratumSpec {
    pub curve: String,
    /// Empty for a generic point of `curve`.
    pub incident: Vec<String>,
    pub label: String,
}

impl StratumSpec {
    pub fn generic(curve: &str) -> StratumSpec {
        StratumSpec { curve: curve.into(), incident: vec![], label: format!("{curve} generic") }
    }

    pub fn meet(curve: &str, others: &[&str]) -> StratumSpec {
        let mut label = curve.to_string();
        for o in others {
            label.push_str(" ∩ ");
            label.push_str(o);
        }
        StratumSpec { curve: curve.into(), incident: others.iter().map(|s| s.to_string()).collect(), label }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SurfaceModel {
    pub id: String,
    pub basis: Vec<String>,
    pub gram: RatMatrix,
    pub generators: Vec<(String, DivisorClass)>,
    pub anti_canonical: DivisorClass,
    pub degree: Rat,
    /// Stratum overrides; curves without an entry use the default derivation.
    pub strata: Vec<StratumSpec>,
}

pub fn lorentzian_basis(k: usize) -> Vec<String> {
    std::iter::once("h".to_string()).chain((1..=k).map(|i| format!("e{i}"))).collect()
}

pub fn lorentzian_gram(k: usize) -> RatMatrix {
    let d: Vec<i64> = std::iter::once(1).chain(std::iter::repeat_n(-1, k)).collect();
    RatMatrix::diagonal(&d)
}

pub fn lorentzian_anticanonical(k: usize) -> DivisorClass {
    DivisorClass(std::iter::once(Rat::int(3)).chain(std::iter::repeat_n(Rat::int(-1), k)).collect())
}

impl SurfaceModel {
    /// Builds and validates a model; degree is computed from the anti-canonical class.
    pub fn new(
        id: &str,
        basis: Vec<String>,
        gram: RatMatrix,
        generators: Vec<(String, DivisorClass)>,
        anti_canonical: DivisorClass,
    ) -> Result<SurfaceModel, PicardError> {
        let degree = gram.bilinear(anti_canonical.coeffs(), anti_canonical.coeffs())?;
        let m = SurfaceModel { id: id.into(), basis, gram, generators, anti_canonical, degree, strata: vec![] };
        m.validate()?;
        Ok(m)
    }

    /// Blow-up of the plane at `k` points with the given labelled curve classes.
    pub fn lorentzian(id: &str, k: usize, generators: Vec<(String, DivisorClass)>) -> Result<SurfaceModel, PicardError> {
        SurfaceModel::new(id, lorentzian_basis(k), lorentzian_gram(k), generators, lorentzian_anticanonical(k))
    }

    pub fn is_lorentzian(&self) -> bool {
        let k = self.rank().saturating_sub(1);
        self.rank() >= 1 && self.basis == lorentzian_basis(k) && self.gram == lorentzian_gram(k)
    }

    pub fn validate(&self) -> Result<(), PicardError> {
        let n = self.basis.len();
        let bad = |m: String| Err(PicardError::InvalidModel(m));
        if self.gram.rows() != n || !self.gram.is_square() {
            return bad(format!("gram is {}x{}, basis has {n} labels", self.gram.rows(), self.gram.cols()));
        }
        if !self.gram.is_symmetric() || !self.gram.is_integral() {
            return bad("gram must be symmetric with integer entries".into());
        }
        self.check_dim(&self.anti_canonical)?;
        let deg = self.pair(&self.anti_canonical, &self.anti_canonical)?;
        if deg != self.degree || !deg.is_positive() {
            return bad(format!("degree {} does not match (-K)^2 = {deg}", self.degree));
        }
        let mut seen = std::collections::HashSet::new();
        for (label, c) in &self.generators {
            if !seen.insert(label) {
                return bad(format!("duplicate generator label {label}"));
            }
            self.check_dim(c)?;
            let kc = self.pair(&self.anti_canonical, c)?;
            if kc.is_negative() {
                return bad(format!("-K is not nef: -K.{label} = {kc}"));
            }
            let cc = self.pair(c, c)?;
            if cc.is_negative() && kc != Rat::zero() && kc != Rat::one() {
                return bad(format!("negative curve {label} has -K.{label} = {kc}"));
            }
        }
        for s in &self.strata {
            let e = self.generator(&s.curve)?;
            for i in &s.incident {
                if !self.pair(e, self.generator(i)?)?.is_positive() {
                    return bad(format!("stratum {} lists {i}, which does not meet {}", s.label, s.curve));
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    fn check_dim(&self, d: &DivisorClass) -> Result<(), PicardError> {
        if d.rank() != self.rank() {
            return Err(PicardError::DimensionMismatch { expected: self.rank(), got: d.rank() });
        }
        Ok(())
    }

    pub fn pair(&self, a: &DivisorClass, b: &DivisorClass) -> Result<Rat, PicardError> {
        self.check_dim(a)?;
        self.check_dim(b)?;
        Ok(self.gram.bilinear(a.coeffs(), b.coeffs())?)
    }

    /// `pair` for classes already known to live in this model.
    pub fn dot(&self, a: &DivisorClass, b: &DivisorClass) -> Rat {
        dot(a.coeffs(), &self.gram.mul_vec(b.coeffs()).expect("class of this model"))
    }

    pub fn generator(&self, label: &str) -> Result<&DivisorClass, PicardError> {
        self.generators
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, c)| c)
            .ok_or_else(|| PicardError::UnknownLabel(label.to_string()))
    }

    pub fn generator_index(&self, label: &str) -> Option<usize> {
        self.generators.iter().position(|(l, _)| l == label)
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.generators.iter().map(|(l, _)| l.as_str())
    }

    /// Generators with negative self-intersection.
    pub fn negative_curves(&self) -> Vec<&str> {
        self.generators.iter().filter(|(_, c)| self.dot(c, c).is_negative()).map(|(l, _)| l.as_str()).collect()
    }

    /// Gram matrix of the listed generators.
    pub fn generator_gram(&self, labels: &[&str]) -> Result<RatMatrix, PicardError> {
        let cs: Vec<&DivisorClass> = labels.iter().map(|l| self.generator(l)).collect::<Result<_, _>>()?;
        let mut m = RatMatrix::zeros(cs.len(), cs.len());
        for (i, a) in cs.iter().enumerate() {
            for (j, b) in cs.iter().enumerate() {
                m.set(i, j, self.dot(a, b));
            }
        }
        Ok(m)
    }

    pub fn is_nef(&self, d: &DivisorClass) -> bool {
        self.generators.iter().all(|(_, c)| !self.dot(d, c).is_negative())
    }

    /// Express `d` in the span of the listed generators, when they form a basis.
    pub fn coordinates_in(&self, d: &DivisorClass, labels: &[&str]) -> Result<RatVector, PicardError> {
        let cs: Vec<&DivisorClass> = labels.iter().map(|l| self.generator(l)).collect::<Result<_, _>>()?;
        if cs.len() != self.rank() {
            return Err(PicardError::DimensionMismatch { expected: self.rank(), got: cs.len() });
        }
        let mut m = RatMatrix::zeros(self.rank(), self.rank());
        for (j, c) in cs.iter().enumerate() {
            for i in 0..self.rank() {
                m.set(i, j, c.0[i].clone());
            }
        }
        crate::arith::solve_linear(&m, d.coeffs()).map_err(|_| PicardError::InvalidModel("curves do not form a basis".into()))
    }

    pub fn render(&self, d: &DivisorClass) -> String {
        d.render(&self.basis)
    }

    /// Strata on `curve`: catalog overrides if present, else one per meeting generator plus the generic one.
    pub fn strata_of(&self, curve: &str) -> Result<Vec<StratumSpec>, PicardError> {
        let e = self.generator(curve)?;
        let over: Vec<StratumSpec> = self.strata.iter().filter(|s| s.curve == curve).cloned().collect();
        if !over.is_empty() {
            return Ok(over);
        }
        let mut out: Vec<StratumSpec> = self
            .generators
            .iter()
            .filter(|(l, c)| l != curve && self.dot(e, c).is_positive())
            .map(|(l, _)| StratumSpec::meet(curve, &[l]))
            .collect();
        out.push(StratumSpec::generic(curve));
        Ok(out)
    }

    /// Blow up a point lying on exactly the `incidence` curves.
    ///
    /// Lorentzian models get their generator list rebuilt by enumeration (pulled-back
    /// roots away from the point, proper transforms of curves through it, and every
    /// admissible (−1)-class); other models keep pulled-back generators plus the exceptional curve.
    pub fn blowup(&self, id: &str, incidence: &[&str]) -> Result<SurfaceModel, PicardError> {
        for l in incidence {
            self.generator(l)?;
        }
        let n = self.rank();
        let lor = self.is_lorentzian();
        let exc_label = if lor { format!("e{n}") } else { "e".to_string() };
        let mut basis = self.basis.clone();
        basis.push(exc_label);
        let mut gram = RatMatrix::zeros(n + 1, n + 1);
        for i in 0..n {
            for j in 0..n {
                gram.set(i, j, self.gram.get(i, j).clone());
            }
        }
        gram.set(n, n, Rat::int(-1));
        let e = DivisorClass::unit(n + 1, n);
        let transform = |l: &str, c: &DivisorClass| {
            let p = c.pullback();
            if incidence.contains(&l) {
                p.sub(&e)
            } else {
                p
            }
        };
        let anti = self.anti_canonical.pullback().sub(&e);
        let pulled: Vec<(String, DivisorClass)> = self.generators.iter().map(|(l, c)| (l.clone(), transform(l, c))).collect();
        let mut gens: Vec<(String, DivisorClass)> = Vec::new();
        if lor {
            let tmp = SurfaceModel {
                id: id.into(),
                basis: basis.clone(),
                gram: gram.clone(),
                generators: vec![],
                anti_canonical: anti.clone(),
                degree: Rat::zero(),
                strata: vec![],
            };
            let roots: Vec<DivisorClass> = pulled
                .iter()
                .filter(|(_, c)| tmp.dot(c, c) == Rat::int(-2) && tmp.dot(&anti, c).is_zero())
                .map(|(_, c)| c.clone())
                .collect();
            // Proper transforms that stopped being (−1)- or (−2)-curves stay as declared generators.
            for (l, c) in &pulled {
                let cc = tmp.dot(c, c);
                if cc < Rat::int(-2) {
                    gens.push((l.clone(), c.clone()));
                }
            }
            for c in enumerate_negative_curves(n + 1, &roots)? {
                let label = pulled.iter().find(|(_, pc)| *pc == c).map(|(l, _)| l.clone()).unwrap_or_else(|| {
                    if c == e {
                        EXCEPTIONAL.to_string()
                    } else {
                        c.render(&basis).replace(' ', "")
                    }
                });
                gens.push((label, c));
            }
        } else {
            gens = pulled;
            gens.push((EXCEPTIONAL.to_string(), e));
        }
        let degree = gram.bilinear(anti.coeffs(), anti.coeffs())?;
        let m = SurfaceModel { id: id.into(), basis, gram, generators: gens, anti_canonical: anti, degree, strata: vec![] };
        Ok(m)
    }
}

/// Label of the exceptional curve of a blow-up.
pub const EXCEPTIONAL: &str = "Exc";

/// Largest degree a (−1)-class can have on a blow-up of the plane at `k` points (k ≤ 8).
fn max_degree(k: usize) -> i64 {
    // From 3d − 1 = Σmᵢ and d² + 1 = Σmᵢ², Cauchy–Schwarz gives (3d−1)² ≤ k(d²+1).
    let k = k as i64;
    (0..).take_while(|&d| d == 0 || (3 * d - 1) * (3 * d - 1) <= k * (d * d + 1)).last().unwrap_or(0)
}

/// Roots plus every (−1)-class (C² = −1, −K·C = 1) meeting each declared root non-negatively,
/// on the blow-up of the plane at `rank − 1` points.
pub fn enumerate_negative_curves(rank: usize, roots: &[DivisorClass]) -> Result<Vec<DivisorClass>, PicardError> {
    let k = rank.checked_sub(1).ok_or(PicardError::LatticeTooLarge(0))?;
    if k > 8 {
        return Err(PicardError::LatticeTooLarge(k));
    }
    let gram = lorentzian_gram(k);
    let anti = lorentzian_anticanonical(k);
    let pr = |a: &DivisorClass, b: &DivisorClass| gram.bilinear(a.coeffs(), b.coeffs());
    for r in roots {
        if r.rank() != rank {
            return Err(PicardError::DimensionMismatch { expected: rank, got: r.rank() });
        }
        if pr(r, r)? != Rat::int(-2) || !pr(&anti, r)?.is_zero() {
            return Err(PicardError::InvalidRoot(r.render(&lorentzian_basis(k))));
        }
    }
    let mut out: Vec<DivisorClass> = roots.to_vec();
    let mut cands: Vec<Vec<i64>> = (1..=k)
        .map(|i| {
            let mut v = vec![0; rank];
            v[i] = 1;
            v
        })
        .collect();
    for d in 1..=max_degree(k) {
        let mut m = vec![0i64; k];
        fill(d, 0, 3 * d - 1, d * d + 1, &mut m, &mut |m| {
            let mut v = vec![d];
            v.extend(m.iter().map(|x| -x));
            cands.push(v);
        });
    }
    for c in cands {
        let c = DivisorClass::from_ints(&c);
        let mut ok = true;
        for r in roots {
            if pr(&c, r)?.is_negative() {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(c);
        }
    }
    Ok(out)
}

/// Every multiplicity vector with entries in `0..=d`, `Σm = lin` and `Σm² = sq`.
fn fill(d: i64, i: usize, lin: i64, sq: i64, m: &mut Vec<i64>, emit: &mut dyn FnMut(&[i64])) {
    if i == m.len() {
        if lin == 0 && sq == 0 {
            emit(m);
        }
        return;
    }
    if lin < 0 || sq < 0 {
        return;
    }
    for x in (0..=d.min(lin)).rev() {
        if x * x > sq {
            continue;
        }
        m[i] = x;
        fill(d, i + 1, lin - x, sq - x * x, m, emit);
    }
    m[i] = 0;
}

impl fmt::Display for SurfaceModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (degree {}, basis {})", self.id, self.degree, self.basis.join(","))?;
        for (l, c) in &self.generators {
            writeln!(f, "  {l:>12} = {:<24} self-intersection {}", self.render(c), self.dot(c, c))?;
        }
        Ok(())
    }
}
