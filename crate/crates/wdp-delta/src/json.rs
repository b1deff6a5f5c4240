//! JSON documents for surface models, ray decompositions and delta reports.
//!
//! Rationals are always `"num/den"` strings. Object keys are emitted in a fixed order and
//! parsing keeps that order, so a document re-serialises byte for byte.

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::arith::{Rat, RatMatrix};
use crate::catalog::{CatalogEntry, DeltaTable};
use crate::delta::{AuxModel, DeltaReport, Extraction, ExtractionKind, Plan, Point, StratumResult};
use crate::picard::{DivisorClass, PicardError, StratumSpec, SurfaceModel};
use crate::zariski::RayDecomposition;

pub const MODEL_VERSION: u64 = 1;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("missing or malformed field {0:?}")]
    Field(String),
    #[error("unsupported model version {0}")]
    Version(u64),
    #[error(transparent)]
    Picard(#[from] PicardError),
}

fn rat(r: &Rat) -> Value {
    Value::String(r.fraction_string())
}

fn rats(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(rat).collect())
}

fn field<'v>(v: &'v Value, k: &str) -> Result<&'v Value, JsonError> {
    v.get(k).ok_or_else(|| JsonError::Field(k.into()))
}

fn str_of(v: &Value, k: &str) -> Result<String, JsonError> {
    field(v, k)?.as_str().map(str::to_string).ok_or_else(|| JsonError::Field(k.into()))
}

fn rat_of(v: &Value, k: &str) -> Result<Rat, JsonError> {
    parse_rat(field(v, k)?).ok_or_else(|| JsonError::Field(k.into()))
}

/// Accepts `"n/d"`, `"n"` or a JSON integer.
pub fn parse_rat(v: &Value) -> Option<Rat> {
    match v {
        Value::String(s) => s.parse().ok(),
        Value::Number(n) => n.as_i64().map(Rat::int),
        _ => None,
    }
}

fn rat_list(v: &Value, k: &str) -> Result<Vec<Rat>, JsonError> {
    field(v, k)?
        .as_array()
        .and_then(|a| a.iter().map(parse_rat).collect::<Option<Vec<_>>>())
        .ok_or_else(|| JsonError::Field(k.into()))
}

fn str_list(v: &Value, k: &str) -> Result<Vec<String>, JsonError> {
    match v.get(k) {
        None => Ok(vec![]),
        Some(a) => a
            .as_array()
            .and_then(|a| a.iter().map(|s| s.as_str().map(str::to_string)).collect::<Option<Vec<_>>>())
            .ok_or_else(|| JsonError::Field(k.into())),
    }
}

pub fn to_string(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialise")
}

fn extraction_json(x: &Extraction) -> Value {
    let mut m = Map::new();
    match &x.kind {
        ExtractionKind::Curve(l) => {
            m.insert("kind".into(), json!("curve"));
            m.insert("label".into(), json!(l));
        }
        ExtractionKind::Movable { label, class } => {
            m.insert("class".into(), rats(class.coeffs()));
            m.insert("kind".into(), json!("movable"));
            m.insert("label".into(), json!(label));
        }
        ExtractionKind::Exceptional => {
            m.insert("kind".into(), json!("exceptional"));
        }
    }
    if let Some(on) = &x.on {
        m.insert("on".into(), json!(on));
    }
    Value::Object(m)
}

fn extraction_from(v: &Value) -> Result<Extraction, JsonError> {
    let on = v.get("on").and_then(Value::as_str).map(str::to_string);
    let kind = match str_of(v, "kind")?.as_str() {
        "curve" => ExtractionKind::Curve(str_of(v, "label")?),
        "movable" => ExtractionKind::Movable { label: str_of(v, "label")?, class: DivisorClass(rat_list(v, "class")?) },
        "exceptional" => ExtractionKind::Exceptional,
        _ => return Err(JsonError::Field("kind".into())),
    };
    Ok(Extraction { on, kind })
}

fn point_json(p: &Point) -> Value {
    match p {
        Point::OffCurves => json!("off curves"),
        Point::OnCurve { curve, incident } => json!({"curve": curve, "incident": incident}),
    }
}

fn point_from(v: &Value) -> Result<Point, JsonError> {
    match v {
        Value::String(s) if s == "off curves" => Ok(Point::OffCurves),
        Value::Object(_) => Ok(Point::OnCurve { curve: str_of(v, "curve")?, incident: str_list(v, "incident")? }),
        _ => Err(JsonError::Field("point".into())),
    }
}

fn plan_json(p: &Plan) -> Value {
    json!({
        "extraction": extraction_json(&p.extraction),
        "incident": p.incident,
        "point": point_json(&p.point),
        "row": p.row,
        "witness": extraction_json(&p.witness),
    })
}

fn plan_from(v: &Value) -> Result<Plan, JsonError> {
    Ok(Plan {
        row: str_of(v, "row")?,
        point: point_from(field(v, "point")?)?,
        extraction: extraction_from(field(v, "extraction")?)?,
        incident: str_list(v, "incident")?,
        witness: extraction_from(field(v, "witness")?)?,
    })
}

pub fn model_json(m: &SurfaceModel) -> Value {
    let mut gens = Map::new();
    for (l, c) in &m.generators {
        gens.insert(l.clone(), rats(c.coeffs()));
    }
    json!({
        "antiCanonical": rats(m.anti_canonical.coeffs()),
        "basis": m.basis,
        "degree": rat(&m.degree),
        "generators": gens,
        "gram": m.gram.to_rows().iter().map(|r| rats(r)).collect::<Vec<_>>(),
        "id": m.id,
        "strata": m.strata.iter().map(|s| json!({"curve": s.curve, "incident": s.incident, "label": s.label})).collect::<Vec<_>>(),
        "version": MODEL_VERSION,
    })
}

pub fn model_from(v: &Value) -> Result<SurfaceModel, JsonError> {
    let version = field(v, "version")?.as_u64().ok_or_else(|| JsonError::Field("version".into()))?;
    if version != MODEL_VERSION {
        return Err(JsonError::Version(version));
    }
    let gram_rows = field(v, "gram")?
        .as_array()
        .ok_or_else(|| JsonError::Field("gram".into()))?
        .iter()
        .map(|r| r.as_array().and_then(|r| r.iter().map(parse_rat).collect::<Option<Vec<_>>>()))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| JsonError::Field("gram".into()))?;
    let gram = RatMatrix::from_rows(gram_rows).map_err(|_| JsonError::Field("gram".into()))?;
    let gens = field(v, "generators")?
        .as_object()
        .ok_or_else(|| JsonError::Field("generators".into()))?
        .iter()
        .map(|(l, c)| {
            c.as_array()
                .and_then(|a| a.iter().map(parse_rat).collect::<Option<Vec<_>>>())
                .map(|c| (l.clone(), DivisorClass(c)))
                .ok_or_else(|| JsonError::Field(format!("generators.{l}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut model =
        SurfaceModel::new(&str_of(v, "id")?, str_list(v, "basis")?, gram, gens, DivisorClass(rat_list(v, "antiCanonical")?))?;
    if let Some(d) = v.get("degree") {
        if parse_rat(d).as_ref() != Some(&model.degree) {
            return Err(JsonError::Field("degree".into()));
        }
    }
    if let Some(s) = v.get("strata").and_then(Value::as_array) {
        for s in s {
            model.strata.push(StratumSpec {
                curve: str_of(s, "curve")?,
                incident: str_list(s, "incident")?,
                label: str_of(s, "label")?,
            });
        }
    }
    model.validate()?;
    Ok(model)
}

/// A surface with its plans, auxiliary blow-ups and (optionally) expected table.
pub fn entry_json(e: &CatalogEntry) -> Value {
    let mut v = model_json(&e.model);
    let obj = v.as_object_mut().expect("model is an object");
    let aux: Vec<Value> = e
        .aux
        .iter()
        .map(|a| {
            let names: Map<String, Value> = a
                .model
                .generators
                .iter()
                .filter(|(l, c)| {
                    *l != a.model.render(c).replace(' ', "")
                        && l.as_str() != crate::picard::EXCEPTIONAL
                        && e.model.generator(l).is_err()
                })
                .map(|(l, c)| (l.clone(), json!(a.model.render(c))))
                .collect();
            json!({"incidence": a.incidence, "name": a.name, "names": names})
        })
        .collect();
    obj.insert("aux".into(), Value::Array(aux));
    obj.insert(
        "expected".into(),
        Value::Array(e.expected.rows.iter().map(|(r, d)| json!({"delta": rat(d), "row": r})).collect()),
    );
    obj.insert("plans".into(), Value::Array(e.plans.iter().map(plan_json).collect()));
    let sorted: Map<String, Value> = {
        let mut kv: Vec<(String, Value)> = std::mem::take(obj).into_iter().collect();
        kv.sort_by(|a, b| a.0.cmp(&b.0));
        kv.into_iter().collect()
    };
    Value::Object(sorted)
}

pub fn entry_from(v: &Value) -> Result<CatalogEntry, JsonError> {
    let model = model_from(v)?;
    let mut aux = Vec::new();
    for a in v.get("aux").and_then(Value::as_array).into_iter().flatten() {
        let incidence = str_list(a, "incidence")?;
        let inc: Vec<&str> = incidence.iter().map(String::as_str).collect();
        let names: Vec<(String, String)> = a
            .get("names")
            .and_then(Value::as_object)
            .into_iter()
            .flatten()
            .map(|(k, c)| c.as_str().map(|c| (k.clone(), c.to_string())).ok_or_else(|| JsonError::Field(format!("names.{k}"))))
            .collect::<Result<_, _>>()?;
        let names: Vec<(&str, &str)> = names.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        aux.push(AuxModel::build(&model, &str_of(a, "name")?, &inc, &names)?);
    }
    let plans = v.get("plans").and_then(Value::as_array).into_iter().flatten().map(plan_from).collect::<Result<Vec<_>, _>>()?;
    let rows = v
        .get("expected")
        .and_then(Value::as_array)
        .into_iter()
        .flatten()
        .map(|r| Ok((str_of(r, "row")?, rat_of(r, "delta")?)))
        .collect::<Result<Vec<_>, JsonError>>()?;
    Ok(CatalogEntry { model, aux, plans, expected: DeltaTable { rows }, printed: None, relations: vec![] })
}

fn stratum_json(s: &StratumResult) -> Value {
    json!({
        "S_E": rat(&s.s_e),
        "S_W": rat(&s.s_w),
        "delta": rat(&s.delta),
        "extraction": s.extraction,
        "label": s.row,
        "lower": rat(&s.lower),
        "point": s.point,
        "upper": rat(&s.upper),
        "witness": s.witness,
    })
}

pub fn report_json(r: &DeltaReport) -> Value {
    json!({
        "degree": rat(&r.degree),
        "global_delta": rat(&r.global_delta),
        "strata": r.strata.iter().map(stratum_json).collect::<Vec<_>>(),
        "surface": r.surface,
    })
}

pub fn report_from(v: &Value) -> Result<DeltaReport, JsonError> {
    let strata = field(v, "strata")?
        .as_array()
        .ok_or_else(|| JsonError::Field("strata".into()))?
        .iter()
        .map(|s| {
            Ok(StratumResult {
                row: str_of(s, "label")?,
                point: str_of(s, "point")?,
                extraction: str_of(s, "extraction")?,
                s_e: rat_of(s, "S_E")?,
                s_w: rat_of(s, "S_W")?,
                lower: rat_of(s, "lower")?,
                witness: str_of(s, "witness")?,
                upper: rat_of(s, "upper")?,
                delta: rat_of(s, "delta")?,
            })
        })
        .collect::<Result<Vec<_>, JsonError>>()?;
    Ok(DeltaReport {
        surface: str_of(v, "surface")?,
        degree: rat_of(v, "degree")?,
        strata,
        global_delta: rat_of(v, "global_delta")?,
    })
}

pub fn ray_json(model: &SurfaceModel, r: &RayDecomposition) -> Value {
    let chambers: Vec<Value> = r
        .chambers
        .iter()
        .map(|c| {
            let n: Map<String, Value> =
                c.n.iter().map(|(l, c0, c1)| (l.clone(), json!({"constant": rat(c0), "slope": rat(c1)}))).collect();
            json!({
                "N": n,
                "P": {"constant": rats(c.p0.coeffs()), "slope": rats(c.p1.coeffs())},
                "P_squared": rats(c.p_squared(model).coeffs()),
                "hi": rat(&c.hi),
                "lo": rat(&c.lo),
                "support": c.support(),
            })
        })
        .collect();
    let mut v = json!({
        "A": rats(r.a.coeffs()),
        "B": rats(r.b.coeffs()),
        "basis": model.basis,
        "chambers": chambers,
        "tau": rat(&r.tau),
    });
    if let Some(z) = &r.zero_volume_from {
        v.as_object_mut().expect("object").insert("zero_volume_from".into(), rat(z));
    }
    v
}

/// Parse and re-serialise: identity on documents this module emits.
pub fn canonicalize(text: &str) -> Result<String, JsonError> {
    let v: Value = serde_json::from_str(text)?;
    Ok(to_string(&v))
}
