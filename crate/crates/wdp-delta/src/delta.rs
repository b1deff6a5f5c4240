//! S-invariants, Abban–Zhuang lower bounds and per-stratum local delta invariants.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::arith::Rat;
use crate::picard::{DivisorClass, PicardError, StratumSpec, SurfaceModel, EXCEPTIONAL};
use crate::zariski::{walk_ray_from, RayDecomposition, ZariskiError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeltaError {
    #[error(transparent)]
    Zariski(#[from] ZariskiError),
    #[error(transparent)]
    Picard(#[from] PicardError),
    #[error("{0} enters the negative part of its own ray")]
    NegativePartContainsExtraction(String),
    #[error("plan mismatch at {point}: lower bound {lower}, upper bound {upper}")]
    PlanMismatch { point: String, lower: Rat, upper: Rat },
    #[error("unknown auxiliary model {0:?}")]
    UnknownModel(String),
    #[error("invalid plan for {point}: {reason}")]
    InvalidPlan { point: String, reason: String },
}

impl DeltaError {
    /// Short variant name, used for CLI refusals.
    pub fn name(&self) -> &'static str {
        match self {
            DeltaError::Zariski(ZariskiError::NotPseudoEffective(_)) => "NotPseudoEffective",
            DeltaError::Zariski(ZariskiError::IrrationalBreakpoint { .. }) => "IrrationalBreakpoint",
            DeltaError::Zariski(_) => "ZariskiFailure",
            DeltaError::Picard(_) => "ModelError",
            DeltaError::NegativePartContainsExtraction(_) => "NegativePartContainsExtraction",
            DeltaError::PlanMismatch { .. } => "PlanMismatch",
            DeltaError::UnknownModel(_) => "UnknownModel",
            DeltaError::InvalidPlan { .. } => "InvalidPlan",
        }
    }
}

/// A blow-up of the base surface at a point on exactly the `incidence` curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxModel {
    pub name: String,
    pub incidence: Vec<String>,
    pub model: SurfaceModel,
}

impl AuxModel {
    /// Blow up `base` and rename generated curves by class, e.g. `("G0", "h-e4-e5")`.
    pub fn build(base: &SurfaceModel, name: &str, incidence: &[&str], names: &[(&str, &str)]) -> Result<AuxModel, PicardError> {
        let mut model = base.blowup(&format!("{}~{name}", base.id), incidence)?;
        for (alias, class) in names {
            let c = DivisorClass::parse(class, &model.basis)?;
            let slot = model
                .generators
                .iter_mut()
                .find(|(_, g)| *g == c)
                .ok_or_else(|| PicardError::UnknownLabel(format!("{alias} = {class}")))?;
            slot.0 = alias.to_string();
        }
        Ok(AuxModel { name: name.into(), incidence: incidence.iter().map(|s| s.to_string()).collect(), model })
    }

    /// `σ*(−K)` of the base surface.
    pub fn anchor(&self) -> DivisorClass {
        self.model.anti_canonical.add(&DivisorClass::unit(self.model.rank(), self.model.rank() - 1))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtractionKind {
    /// A generator curve of the model.
    Curve(String),
    /// A movable curve through the point, given by its class.
    Movable { label: String, class: DivisorClass },
    /// The exceptional curve of an auxiliary blow-up.
    Exceptional,
}

/// A prime divisor over the surface. `on` names an auxiliary model, `None` is the surface itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Extraction {
    pub on: Option<String>,
    pub kind: ExtractionKind,
}

impl Extraction {
    pub fn curve(label: &str) -> Extraction {
        Extraction { on: None, kind: ExtractionKind::Curve(label.into()) }
    }

    pub fn movable(label: &str, class: DivisorClass) -> Extraction {
        Extraction { on: None, kind: ExtractionKind::Movable { label: label.into(), class } }
    }

    pub fn exceptional(aux: &str) -> Extraction {
        Extraction { on: Some(aux.into()), kind: ExtractionKind::Exceptional }
    }

    pub fn aux_curve(aux: &str, label: &str) -> Extraction {
        Extraction { on: Some(aux.into()), kind: ExtractionKind::Curve(label.into()) }
    }

    /// Log discrepancy: 1 for curves, 2 for the exceptional curve of a point blow-up.
    pub fn log_discrepancy(&self) -> Rat {
        match self.kind {
            ExtractionKind::Exceptional => Rat::int(2),
            _ => Rat::one(),
        }
    }

    pub fn label(&self) -> String {
        let core = match &self.kind {
            ExtractionKind::Curve(l) => l.clone(),
            ExtractionKind::Movable { label, .. } => label.clone(),
            ExtractionKind::Exceptional => EXCEPTIONAL.to_string(),
        };
        match &self.on {
            Some(a) => format!("{core}@{a}"),
            None => core,
        }
    }
}

impl fmt::Display for Extraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Where on the surface a plan applies.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Point {
    /// A point of `curve` on exactly the `incident` other negative curves (empty: generic).
    OnCurve { curve: String, incident: Vec<String> },
    /// A point on no negative curve.
    OffCurves,
}

impl Point {
    pub fn generic(c: &str) -> Point {
        Point::OnCurve { curve: c.into(), incident: vec![] }
    }

    pub fn meet(c: &str, d: &str) -> Point {
        Point::OnCurve { curve: c.into(), incident: vec![d.into()] }
    }

    /// Every negative curve through the point, sorted.
    pub fn curves(&self) -> Vec<String> {
        match self {
            Point::OnCurve { curve, incident } => {
                let mut v: Vec<String> = std::iter::once(curve.clone()).chain(incident.iter().cloned()).collect();
                v.sort();
                v
            }
            Point::OffCurves => vec![],
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Point::OnCurve { curve, incident } if incident.is_empty() => format!("{curve} generic"),
            Point::OnCurve { .. } => self.curves().join(" ∩ "),
            Point::OffCurves => "off curves".into(),
        }
    }
}

/// How the delta invariant at one kind of point is computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Plan {
    /// Row of the expected table this point belongs to.
    pub row: String,
    pub point: Point,
    pub extraction: Extraction,
    /// Curves other than the extraction through the point, for `S(W, q)`.
    pub incident: Vec<String>,
    pub witness: Extraction,
}

impl Plan {
    /// Curve extraction of the point's own curve, witnessed by itself.
    pub fn own(row: &str, point: Point) -> Plan {
        let (curve, incident) = match &point {
            Point::OnCurve { curve, incident } => (curve.clone(), incident.clone()),
            Point::OffCurves => panic!("own-curve plan needs a curve"),
        };
        Plan { row: row.into(), point, extraction: Extraction::curve(&curve), incident, witness: Extraction::curve(&curve) }
    }

    pub fn with(row: &str, point: Point, extraction: Extraction, incident: &[&str], witness: Extraction) -> Plan {
        Plan { row: row.into(), point, extraction, incident: incident.iter().map(|s| s.to_string()).collect(), witness }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumResult {
    pub row: String,
    pub point: String,
    pub extraction: String,
    pub s_e: Rat,
    /// For exceptional extractions, the largest `S(W, q)` over the strata of the exceptional curve.
    pub s_w: Rat,
    pub lower: Rat,
    pub witness: String,
    pub upper: Rat,
    pub delta: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaReport {
    pub surface: String,
    pub degree: Rat,
    pub strata: Vec<StratumResult>,
    pub global_delta: Rat,
}

pub fn global_delta(strata: &[StratumResult]) -> Option<Rat> {
    strata.iter().map(|s| s.delta.clone()).min()
}

/// Branch (1): a curve through the point. Branch (2): the exceptional curve of the point's blow-up,
/// where the infimum runs over every stratum of that curve.
pub fn lower_bound(extraction: &Extraction, s_e: &Rat, s_w: &[Rat]) -> Rat {
    let a = extraction.log_discrepancy();
    let mut best = &a / s_e;
    for w in s_w {
        best = Rat::min(best, Rat::one() / w);
    }
    best
}

/// Walks rays on demand and caches them per (model, class).
pub struct Evaluator<'a> {
    pub base: &'a SurfaceModel,
    pub aux: &'a [AuxModel],
    rays: HashMap<(Option<String>, DivisorClass), Arc<RayDecomposition>>,
}

/// An extraction resolved to a concrete ray.
struct Resolved<'m> {
    model: &'m SurfaceModel,
    anchor: DivisorClass,
    class: DivisorClass,
    label: Option<String>,
}

impl<'a> Evaluator<'a> {
    pub fn new(base: &'a SurfaceModel, aux: &'a [AuxModel]) -> Evaluator<'a> {
        Evaluator { base, aux, rays: HashMap::new() }
    }

    /// Normalising degree: always the base surface's.
    pub fn degree(&self) -> &Rat {
        &self.base.degree
    }

    pub fn model_of(&self, on: &Option<String>) -> Result<&'a SurfaceModel, DeltaError> {
        match on {
            None => Ok(self.base),
            Some(n) => self.aux_model(n).map(|a| &a.model),
        }
    }

    fn aux_model(&self, name: &str) -> Result<&'a AuxModel, DeltaError> {
        self.aux.iter().find(|a| a.name == name).ok_or_else(|| DeltaError::UnknownModel(name.into()))
    }

    fn resolve(&self, x: &Extraction) -> Result<Resolved<'a>, DeltaError> {
        let (model, anchor) = match &x.on {
            None => (self.base, self.base.anti_canonical.clone()),
            Some(n) => {
                let a = self.aux_model(n)?;
                (&a.model, a.anchor())
            }
        };
        let (class, label) = match &x.kind {
            ExtractionKind::Curve(l) => (model.generator(l)?.clone(), Some(l.clone())),
            ExtractionKind::Movable { class, .. } => (class.clone(), None),
            ExtractionKind::Exceptional => {
                if x.on.is_none() {
                    return Err(DeltaError::UnknownModel("exceptional curve needs a blow-up".into()));
                }
                (model.generator(EXCEPTIONAL)?.clone(), Some(EXCEPTIONAL.to_string()))
            }
        };
        if class.rank() != model.rank() {
            return Err(PicardError::DimensionMismatch { expected: model.rank(), got: class.rank() }.into());
        }
        Ok(Resolved { model, anchor, class, label })
    }

    /// The ray `A − uB` of an extraction, walked once.
    pub fn ray(&mut self, x: &Extraction) -> Result<Arc<RayDecomposition>, DeltaError> {
        let r = self.resolve(x)?;
        let key = (x.on.clone(), r.class.clone());
        if let Some(ray) = self.rays.get(&key) {
            return Ok(ray.clone());
        }
        let ray = Arc::new(walk_ray_from(r.model, &r.anchor, &r.class)?);
        self.rays.insert(key, ray.clone());
        Ok(ray)
    }

    /// `S(E) = (1/deg) ∫₀^τ vol(A − uE) du`.
    pub fn s_divisor(&mut self, x: &Extraction) -> Result<Rat, DeltaError> {
        let model = self.resolve(x)?.model;
        let ray = self.ray(x)?;
        Ok(ray.volume(model).integrate_all() / self.degree())
    }

    /// `S(W, q)` for a point of the extraction curve on the `incident` curves.
    pub fn s_filtration(&mut self, x: &Extraction, stratum: &StratumSpec) -> Result<Rat, DeltaError> {
        let r = self.resolve(x)?;
        let ray = self.ray(x)?;
        let in_support = match &r.label {
            Some(l) => ray.ever_in_support(l),
            None => ray.chambers.iter().any(|c| c.support().iter().any(|l| r.model.generator(l).ok() == Some(&r.class))),
        };
        if in_support {
            return Err(DeltaError::NegativePartContainsExtraction(x.label()));
        }
        let pe = ray.p_dot(r.model, &r.class);
        let ord = ray.n_dot(r.model, &stratum.incident, &r.class)?;
        let mut cross = Rat::zero();
        let mut square = Rat::zero();
        for (i, ch) in ray.chambers.iter().enumerate() {
            let p = &pe.pieces()[i];
            let o = &ord.pieces()[i];
            cross += (p * o).integrate(&ch.lo, &ch.hi);
            square += (p * p).integrate(&ch.lo, &ch.hi);
        }
        let deg = self.degree();
        Ok(Rat::int(2) * cross / deg + square / deg)
    }

    /// Strata of the extraction curve used by the exceptional branch of the lower bound.
    fn exceptional_strata(&self, x: &Extraction) -> Result<Vec<StratumSpec>, DeltaError> {
        let model = self.resolve(x)?.model;
        Ok(model.strata_of(EXCEPTIONAL)?)
    }

    pub fn check_plan(&self, plan: &Plan) -> Result<(), DeltaError> {
        let bad = |reason: String| Err(DeltaError::InvalidPlan { point: plan.point.describe(), reason });
        let base = self.base;
        for c in plan.point.curves() {
            base.generator(&c)?;
        }
        match (&plan.point, &plan.extraction.kind, &plan.extraction.on) {
            (Point::OnCurve { .. }, ExtractionKind::Curve(l), None) => {
                let mut through: Vec<String> = std::iter::once(l.clone()).chain(plan.incident.iter().cloned()).collect();
                through.sort();
                if through != plan.point.curves() {
                    return bad(format!("extraction {l} with incident {:?} does not describe the point", plan.incident));
                }
            }
            (Point::OnCurve { .. }, _, _) => return bad("points on curves use a curve extraction".into()),
            (Point::OffCurves, ExtractionKind::Curve(l), None) => {
                let c = base.generator(l)?;
                if base.dot(c, c).is_negative() {
                    return bad(format!("{l} is a negative curve; off-curve points are not on it"));
                }
            }
            (Point::OffCurves, ExtractionKind::Exceptional, Some(n)) => {
                if !self.aux_model(n)?.incidence.is_empty() {
                    return bad(format!("{n} blows up a point on a curve"));
                }
            }
            (Point::OffCurves, ExtractionKind::Movable { .. }, None) => {}
            (Point::OffCurves, _, _) => return bad("unsupported extraction for an off-curve point".into()),
        }
        if matches!(plan.extraction.kind, ExtractionKind::Exceptional) && !plan.incident.is_empty() {
            return bad("exceptional extractions range over all their strata".into());
        }
        self.resolve(&plan.witness)?;
        Ok(())
    }

    pub fn evaluate_stratum(&mut self, plan: &Plan) -> Result<StratumResult, DeltaError> {
        self.check_plan(plan)?;
        let x = &plan.extraction;
        let s_e = self.s_divisor(x)?;
        let s_ws: Vec<Rat> = match &x.kind {
            ExtractionKind::Exceptional => {
                self.exceptional_strata(x)?.iter().map(|s| self.s_filtration(x, s)).collect::<Result<_, _>>()?
            }
            _ => {
                let stratum = StratumSpec { curve: x.label(), incident: plan.incident.clone(), label: plan.point.describe() };
                vec![self.s_filtration(x, &stratum)?]
            }
        };
        let lower = lower_bound(x, &s_e, &s_ws);
        let s_w = s_ws.iter().max().cloned().unwrap_or_else(Rat::zero);
        let upper = if plan.witness == *x {
            x.log_discrepancy() / &s_e
        } else {
            plan.witness.log_discrepancy() / self.s_divisor(&plan.witness)?
        };
        if lower != upper {
            return Err(DeltaError::PlanMismatch { point: plan.point.describe(), lower, upper });
        }
        Ok(StratumResult {
            row: plan.row.clone(),
            point: plan.point.describe(),
            extraction: x.label(),
            s_e,
            s_w,
            lower: lower.clone(),
            witness: plan.witness.label(),
            upper,
            delta: lower,
        })
    }

    pub fn report(&mut self, surface: &str, plans: &[Plan]) -> Result<DeltaReport, DeltaError> {
        let strata: Vec<StratumResult> = plans.iter().map(|p| self.evaluate_stratum(p)).collect::<Result<_, _>>()?;
        let global_delta = global_delta(&strata).unwrap_or_else(Rat::zero);
        Ok(DeltaReport { surface: surface.into(), degree: self.base.degree.clone(), strata, global_delta })
    }
}
