//! The eighteen weak del Pezzo surfaces of degree 5 to 8, with plans and expected tables.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::arith::{Rat, RatMatrix};
use crate::delta::{AuxModel, Extraction, Plan, Point};
use crate::picard::{lorentzian_basis, DivisorClass, PicardError, SurfaceModel};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown surface {0:?}")]
    UnknownSurface(String),
    #[error("catalog entry {id} is inconsistent: {reason}")]
    Inconsistent { id: String, reason: String },
    #[error(transparent)]
    Picard(#[from] PicardError),
}

/// An intersection matrix as printed, in a given curve order, with known misprints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrintedMatrix {
    pub order: Vec<String>,
    pub entries: Vec<Vec<i64>>,
    /// Coefficients of `−K` in `order`, when printed.
    pub anti_canonical: Option<Vec<i64>>,
    pub errata: Vec<Erratum>,
}

/// A printed entry that contradicts the rest of the printed data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Erratum {
    pub row: String,
    pub col: String,
    pub printed: i64,
    pub corrected: i64,
}

impl PrintedMatrix {
    fn index(&self, label: &str) -> usize {
        self.order.iter().position(|l| l == label).expect("erratum label in order")
    }

    /// Printed entries with every listed erratum replaced by its correction.
    pub fn corrected(&self) -> Vec<Vec<i64>> {
        let mut m = self.entries.clone();
        for e in &self.errata {
            m[self.index(&e.row)][self.index(&e.col)] = e.corrected;
        }
        m
    }

    /// Why the printed entry of `e` cannot be right, judged only from the printed data:
    /// the matrix is not symmetric there, or its row disagrees with adjunction on the printed `−K`.
    pub fn contradiction(&self, e: &Erratum) -> Option<String> {
        let (i, j) = (self.index(&e.row), self.index(&e.col));
        if self.entries[i][j] != self.entries[j][i] {
            return Some(format!(
                "printed {}.{} = {} but {}.{} = {}",
                e.row, e.col, self.entries[i][j], e.col, e.row, self.entries[j][i]
            ));
        }
        let k = self.anti_canonical.as_ref()?;
        for r in [i, j] {
            let kc: i64 = self.entries[r].iter().zip(k).map(|(a, b)| a * b).sum();
            let self_int = self.corrected()[r][r];
            // Adjunction on a smooth rational curve: −K·C = C² + 2.
            if kc != self_int + 2 {
                return Some(format!(
                    "printed row {} gives -K.{} = {kc}, adjunction needs {}",
                    self.order[r],
                    self.order[r],
                    self_int + 2
                ));
            }
        }
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaTable {
    pub rows: Vec<(String, Rat)>,
}

impl DeltaTable {
    pub fn global(&self) -> Rat {
        self.rows.iter().map(|(_, r)| r.clone()).min().expect("non-empty table")
    }

    pub fn get(&self, row: &str) -> Option<&Rat> {
        self.rows.iter().find(|(l, _)| l == row).map(|(_, r)| r)
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub model: SurfaceModel,
    pub aux: Vec<AuxModel>,
    pub plans: Vec<Plan>,
    pub expected: DeltaTable,
    /// Present for blow-ups of the plane.
    pub printed: Option<PrintedMatrix>,
    /// Relations `σ*(−K) − uE ∼ …` quoted for auxiliary models: (aux name, summands as `coef·label`).
    pub relations: Vec<(String, Vec<(Rat, String)>)>,
}

impl CatalogEntry {
    pub fn id(&self) -> &str {
        &self.model.id
    }

    /// The point kinds of the surface: each negative curve's generic point, each meeting
    /// point of two negative curves, and the complement of the negative curves.
    pub fn points(&self) -> Vec<Point> {
        let neg = self.model.negative_curves();
        let mut pts: Vec<Point> = neg.iter().map(|c| Point::generic(c)).collect();
        for (i, a) in neg.iter().enumerate() {
            for b in &neg[i + 1..] {
                let (ca, cb) = (self.model.generator(a).unwrap(), self.model.generator(b).unwrap());
                if self.model.dot(ca, cb).is_positive() {
                    pts.push(Point::meet(a, b));
                }
            }
        }
        pts.push(Point::OffCurves);
        pts
    }

    /// Plans cover each point kind exactly once, and rows match the expected table.
    pub fn check_partition(&self) -> Result<(), CatalogError> {
        let err = |reason: String| CatalogError::Inconsistent { id: self.id().into(), reason };
        let mut count: BTreeMap<String, usize> = BTreeMap::new();
        for p in self.points() {
            count.insert(key(&p), 0);
        }
        for plan in &self.plans {
            let k = key(&plan.point);
            match count.get_mut(&k) {
                Some(n) => *n += 1,
                None => return Err(err(format!("plan for {k}, which is not a point kind of the surface"))),
            }
            if self.expected.get(&plan.row).is_none() {
                return Err(err(format!("plan row {:?} is not in the expected table", plan.row)));
            }
        }
        if let Some((k, n)) = count.iter().find(|(_, n)| **n != 1) {
            return Err(err(format!("{k} is covered {n} times")));
        }
        for (row, _) in &self.expected.rows {
            if !self.plans.iter().any(|p| &p.row == row) {
                return Err(err(format!("row {row:?} has no plan")));
            }
        }
        Ok(())
    }

    pub fn aux_model(&self, name: &str) -> Option<&AuxModel> {
        self.aux.iter().find(|a| a.name == name)
    }
}

fn key(p: &Point) -> String {
    match p {
        Point::OffCurves => "off curves".into(),
        Point::OnCurve { incident, curve } if incident.is_empty() => format!("{curve} generic"),
        _ => p.curves().join(" ∩ "),
    }
}

pub const SURFACE_IDS: [&str; 18] = [
    "dp5-1",
    "dp5-2",
    "dp5-3",
    "dp5-4",
    "dp5-5",
    "dp5-6",
    "dp5-7",
    "dp6-1",
    "dp6-2",
    "dp6-3",
    "dp6-4",
    "dp6-5",
    "dp6-6",
    "dp7-1",
    "dp7-2",
    "dp8-sigma0",
    "dp8-sigma1",
    "dp8-sigma2",
];

pub fn list_surfaces() -> Vec<&'static str> {
    SURFACE_IDS.to_vec()
}

pub fn expected_table(id: &str) -> Result<DeltaTable, CatalogError> {
    Ok(get_surface(id)?.expected)
}

const OFF: &str = "off curves";

/// How off-curve points are handled.
enum Off {
    Blowup { names: &'static [(&'static str, &'static str)], witness: Option<&'static str> },
    Movable(&'static str),
}

/// Static description of one blow-up of the plane.
struct PlaneSpec {
    id: &'static str,
    points: usize,
    /// Curves in printed-matrix order.
    curves: &'static [(&'static str, &'static str)],
    matrix: &'static [&'static [i64]],
    anti_canonical: Option<&'static [i64]>,
    errata: &'static [(&'static str, &'static str, i64, i64)],
    rows: &'static [(&'static str, i64, i64)],
    /// Row of each curve's generic point.
    generic: &'static [(&'static str, &'static str)],
    /// (owner, other, row, witness): the owner is the extraction, `other` its incident curve.
    meets: &'static [(&'static str, &'static str, &'static str, Option<&'static str>)],
    off: Off,
    relation: Option<&'static [(i64, i64, &'static str)]>,
}

fn r(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

fn plane(spec: &PlaneSpec) -> Result<CatalogEntry, CatalogError> {
    let basis = lorentzian_basis(spec.points);
    let gens: Vec<(String, DivisorClass)> = spec
        .curves
        .iter()
        .map(|(l, c)| Ok((l.to_string(), DivisorClass::parse(c, &basis)?)))
        .collect::<Result<_, PicardError>>()?;
    let model = SurfaceModel::lorentzian(spec.id, spec.points, gens)?;
    let mut plans = Vec::new();
    for (c, row) in spec.generic {
        plans.push(Plan::own(row, Point::generic(c)));
    }
    for (owner, other, row, witness) in spec.meets {
        let mut p = Plan::own(row, Point::meet(owner, other));
        if let Some(w) = witness {
            p.witness = Extraction::curve(w);
        }
        plans.push(p);
    }
    let mut aux = Vec::new();
    let mut relations = Vec::new();
    match &spec.off {
        Off::Blowup { names, witness } => {
            aux.push(AuxModel::build(&model, "bl", &[], names)?);
            let x = Extraction::exceptional("bl");
            let w = witness.map_or_else(|| x.clone(), |w| Extraction::aux_curve("bl", w));
            plans.push(Plan::with(OFF, Point::OffCurves, x, &[], w));
            if let Some(rel) = spec.relation {
                relations.push(("bl".to_string(), rel.iter().map(|(n, d, l)| (r(*n, *d), l.to_string())).collect()));
            }
        }
        Off::Movable(class) => {
            let l = Extraction::movable("L", DivisorClass::parse(class, &basis)?);
            plans.push(Plan::with(OFF, Point::OffCurves, l.clone(), &[], l));
        }
    }
    let printed = PrintedMatrix {
        order: spec.curves.iter().map(|(l, _)| l.to_string()).collect(),
        entries: spec.matrix.iter().map(|r| r.to_vec()).collect(),
        anti_canonical: spec.anti_canonical.map(<[i64]>::to_vec),
        errata: spec
            .errata
            .iter()
            .map(|(a, b, p, c)| Erratum { row: a.to_string(), col: b.to_string(), printed: *p, corrected: *c })
            .collect(),
    };
    let entry = CatalogEntry {
        model,
        aux,
        plans,
        expected: DeltaTable { rows: spec.rows.iter().map(|(l, n, d)| (l.to_string(), r(*n, *d))).collect() },
        printed: Some(printed),
        relations,
    };
    validate_printed(&entry)?;
    entry.check_partition()?;
    Ok(entry)
}

/// Load-time check: the Gram matrix of the curve classes equals the printed one once the
/// listed errata are corrected, and each erratum contradicts the printed data.
fn validate_printed(entry: &CatalogEntry) -> Result<(), CatalogError> {
    let Some(p) = &entry.printed else { return Ok(()) };
    let err = |reason: String| CatalogError::Inconsistent { id: entry.id().into(), reason };
    let order: Vec<&str> = p.order.iter().map(String::as_str).collect();
    let g = entry.model.generator_gram(&order)?;
    let want = RatMatrix::from_rows(p.corrected().iter().map(|r| r.iter().map(|&x| Rat::int(x)).collect()).collect())
        .map_err(|e| err(e.to_string()))?;
    if g != want {
        return Err(err("Gram matrix of the curve classes differs from the corrected printed matrix".into()));
    }
    for e in &p.errata {
        if p.contradiction(e).is_none() {
            return Err(err(format!("erratum {}.{} is not contradicted by the printed data", e.row, e.col)));
        }
    }
    if let Some(k) = &p.anti_canonical {
        let mut acc = DivisorClass::zero(entry.model.rank());
        for (c, l) in k.iter().zip(&order) {
            acc = acc.add_scaled(&Rat::int(*c), entry.model.generator(l)?);
        }
        if acc != entry.model.anti_canonical {
            return Err(err("printed -K expansion does not sum to -K".into()));
        }
    }
    Ok(())
}

fn hirzebruch(
    id: &str,
    n: i64,
    anti: [i64; 2],
    rows: &[(&str, i64, i64)],
    plans: Vec<Plan>,
) -> Result<CatalogEntry, CatalogError> {
    let model = SurfaceModel::new(
        id,
        vec!["C0".into(), "Gamma".into()],
        RatMatrix::from_ints(&[&[-n, 1], &[1, 0]]),
        vec![("C0".into(), DivisorClass::from_ints(&[1, 0])), ("Gamma".into(), DivisorClass::from_ints(&[0, 1]))],
        DivisorClass::from_ints(&anti),
    )?;
    let entry = CatalogEntry {
        model,
        aux: vec![],
        plans,
        expected: DeltaTable { rows: rows.iter().map(|(l, n, d)| (l.to_string(), r(*n, *d))).collect() },
        printed: None,
        relations: vec![],
    };
    entry.check_partition()?;
    Ok(entry)
}

pub fn get_surface(id: &str) -> Result<CatalogEntry, CatalogError> {
    if let Some(spec) = PLANE_SPECS.iter().find(|s| s.id == id) {
        return plane(spec);
    }
    let all = "all points";
    match id {
        "dp8-sigma2" => hirzebruch(
            id,
            2,
            [2, 4],
            &[(all, 3, 4)],
            vec![
                Plan::own(all, Point::generic("C0")),
                Plan::with(all, Point::OffCurves, Extraction::curve("Gamma"), &[], Extraction::curve("Gamma")),
            ],
        ),
        "dp8-sigma1" => hirzebruch(
            id,
            1,
            [2, 3],
            &[("C0", 6, 7), ("S∖C0", 12, 13)],
            vec![
                Plan::own("C0", Point::generic("C0")),
                Plan::with("S∖C0", Point::OffCurves, Extraction::curve("Gamma"), &[], Extraction::curve("Gamma")),
            ],
        ),
        "dp8-sigma0" => hirzebruch(
            id,
            0,
            [2, 2],
            &[(all, 1, 1)],
            vec![Plan::with(all, Point::OffCurves, Extraction::curve("C0"), &[], Extraction::curve("C0"))],
        ),
        _ => Err(CatalogError::UnknownSurface(id.into())),
    }
}

const DP5_1_ROWS: [&str; 4] = ["F", "Ei∖F (i=1,2,3)", "E(i+3)∖Ei (i=1,2,3)", "E7"];

static PLANE_SPECS: &[PlaneSpec] = &[
    PlaneSpec {
        id: "dp5-1",
        points: 4,
        curves: &[
            ("E1", "e1"),
            ("E2", "e2"),
            ("E3", "e3"),
            ("E4", "h-e4-e1"),
            ("E5", "h-e4-e2"),
            ("E6", "h-e4-e3"),
            ("E7", "e4"),
            ("F", "h-e1-e2-e3"),
        ],
        matrix: &[
            &[-1, 0, 0, 1, 0, 0, 0, 1],
            &[0, -1, 0, 0, 1, 0, 0, 1],
            &[0, 0, -1, 0, 0, 1, 0, 1],
            &[1, 0, 0, -1, 0, 0, 1, 0],
            &[0, 1, 0, 0, -1, 0, 1, 0],
            &[0, 0, 1, 0, 0, -1, 1, 0],
            &[0, 0, 0, 1, 1, 1, -1, 0],
            &[1, 1, 1, 0, 0, 0, 0, -2],
        ],
        anti_canonical: Some(&[0, 0, 0, 1, 1, 1, 2, 0]),
        errata: &[],
        rows: &[(DP5_1_ROWS[0], 15, 17), (DP5_1_ROWS[1], 1, 1), (DP5_1_ROWS[2], 15, 13), (DP5_1_ROWS[3], 15, 13), (OFF, 4, 3)],
        generic: &[
            ("F", DP5_1_ROWS[0]),
            ("E1", DP5_1_ROWS[1]),
            ("E2", DP5_1_ROWS[1]),
            ("E3", DP5_1_ROWS[1]),
            ("E4", DP5_1_ROWS[2]),
            ("E5", DP5_1_ROWS[2]),
            ("E6", DP5_1_ROWS[2]),
            ("E7", DP5_1_ROWS[3]),
        ],
        meets: &[
            ("F", "E1", DP5_1_ROWS[0], None),
            ("F", "E2", DP5_1_ROWS[0], None),
            ("F", "E3", DP5_1_ROWS[0], None),
            ("E4", "E1", DP5_1_ROWS[1], Some("E1")),
            ("E5", "E2", DP5_1_ROWS[1], Some("E2")),
            ("E6", "E3", DP5_1_ROWS[1], Some("E3")),
            ("E7", "E4", DP5_1_ROWS[3], None),
            ("E7", "E5", DP5_1_ROWS[3], None),
            ("E7", "E6", DP5_1_ROWS[3], None),
        ],
        off: Off::Blowup { names: &[("G0", "h-e4-e5"), ("G1", "h-e1-e5"), ("G2", "h-e2-e5"), ("G3", "h-e3-e5")], witness: None },
        relation: Some(&[(1, 1, "G0"), (1, 1, "G2"), (1, 1, "F"), (1, 1, "E2"), (2, 1, "Exc")]),
    },
    PlaneSpec {
        id: "dp5-2",
        points: 4,
        curves: &[
            ("E1", "e2"),
            ("E2", "e3"),
            ("E3", "h-e3-e4"),
            ("E4", "e4"),
            ("E5", "h-e1-e4"),
            ("F1", "h-e1-e2-e3"),
            ("F2", "e1-e2"),
        ],
        matrix: &[
            &[-1, 0, 0, 0, 0, 1, 1],
            &[0, -1, 1, 0, 0, 1, 0],
            &[0, 1, -1, 1, 0, 0, 0],
            &[0, 0, 1, -1, 1, 0, 0],
            &[0, 0, 0, 1, -1, 0, 1],
            &[1, 1, 0, 0, 0, -2, 0],
            &[1, 0, 0, 0, 1, 0, -2],
        ],
        anti_canonical: Some(&[1, 1, 1, 1, 1, 1, 1]),
        errata: &[],
        rows: &[("E1", 15, 19), ("F1∖E1, F2∖E1", 15, 17), ("E2∖F1, E5∖F2", 1, 1), ("E3∖E2, E4∖E5", 15, 13), (OFF, 4, 3)],
        generic: &[
            ("E1", "E1"),
            ("F1", "F1∖E1, F2∖E1"),
            ("F2", "F1∖E1, F2∖E1"),
            ("E2", "E2∖F1, E5∖F2"),
            ("E5", "E2∖F1, E5∖F2"),
            ("E3", "E3∖E2, E4∖E5"),
            ("E4", "E3∖E2, E4∖E5"),
        ],
        meets: &[
            ("E1", "F1", "E1", None),
            ("E1", "F2", "E1", None),
            ("F1", "E2", "F1∖E1, F2∖E1", None),
            ("F2", "E5", "F1∖E1, F2∖E1", None),
            ("E2", "E3", "E2∖F1, E5∖F2", None),
            ("E5", "E4", "E2∖F1, E5∖F2", None),
            ("E3", "E4", "E3∖E2, E4∖E5", None),
        ],
        off: Off::Blowup { names: &[("G1", "h-e1-e5"), ("G2", "h-e3-e5"), ("G3", "h-e4-e5")], witness: None },
        relation: Some(&[(1, 1, "F1"), (1, 1, "E2"), (1, 1, "G2"), (1, 1, "G3"), (2, 1, "Exc")]),
    },
    PlaneSpec {
        id: "dp5-3",
        points: 4,
        curves: &[("E1", "e4"), ("E2", "h-e1-e4"), ("E3", "e3"), ("F1", "e1-e2"), ("F2", "e2-e3"), ("F3", "h-e1-e2-e3")],
        matrix: &[
            &[-1, 1, 0, 0, 0, 0],
            &[1, -1, 0, 1, 0, 0],
            &[0, 0, -1, 0, 1, 1],
            &[0, 1, 0, -2, 1, 0],
            &[0, 0, 1, 1, -2, 0],
            &[0, 0, 1, 0, 0, -2],
        ],
        anti_canonical: Some(&[2, 3, 0, 2, 1, 0]),
        errata: &[],
        rows: &[("E1∖E2", 15, 13), ("E2∖F1, F3∖E3", 15, 17), ("F1∖F2", 15, 19), ("F2∖E3", 5, 7), ("E3", 15, 23), (OFF, 30, 23)],
        generic: &[
            ("E1", "E1∖E2"),
            ("E2", "E2∖F1, F3∖E3"),
            ("F3", "E2∖F1, F3∖E3"),
            ("F1", "F1∖F2"),
            ("F2", "F2∖E3"),
            ("E3", "E3"),
        ],
        meets: &[
            ("E2", "E1", "E2∖F1, F3∖E3", None),
            ("F1", "E2", "F1∖F2", None),
            ("F2", "F1", "F2∖E3", None),
            ("E3", "F2", "E3", None),
            ("E3", "F3", "E3", None),
        ],
        off: Off::Blowup { names: &[("G1", "h-e4-e5"), ("G2", "h-e1-e5")], witness: Some("G2") },
        relation: Some(&[(1, 1, "E3"), (1, 1, "F1"), (1, 1, "F2"), (1, 1, "F3"), (1, 1, "G1"), (1, 1, "G2"), (2, 1, "Exc")]),
    },
    PlaneSpec {
        id: "dp5-4",
        points: 4,
        curves: &[("E1", "h-e1-e2"), ("E2", "e2"), ("E3", "e3"), ("E4", "e4"), ("F1", "e1-e2"), ("F2", "h-e1-e3-e4")],
        matrix: &[
            &[-1, 1, 0, 0, 0, 0],
            &[1, -1, 0, 0, 1, 0],
            &[0, 0, -1, 0, 0, 1],
            &[0, 0, 0, -1, 0, 1],
            &[0, 1, 0, 0, -2, 1],
            &[0, 0, 1, 1, 1, -2],
        ],
        anti_canonical: Some(&[2, 3, 0, 0, 2, 1]),
        errata: &[],
        rows: &[("E1∖E2", 15, 13), ("E2∖F1", 15, 17), ("F1∖F2", 15, 19), ("F2", 5, 7), ("Ei∖F2 (i=3,4)", 30, 31), (OFF, 30, 23)],
        generic: &[
            ("E1", "E1∖E2"),
            ("E2", "E2∖F1"),
            ("F1", "F1∖F2"),
            ("F2", "F2"),
            ("E3", "Ei∖F2 (i=3,4)"),
            ("E4", "Ei∖F2 (i=3,4)"),
        ],
        meets: &[
            ("E2", "E1", "E2∖F1", None),
            ("F1", "E2", "F1∖F2", None),
            ("F2", "F1", "F2", None),
            ("F2", "E3", "F2", None),
            ("F2", "E4", "F2", None),
        ],
        off: Off::Movable("h-e1"),
        relation: None,
    },
    PlaneSpec {
        id: "dp5-5",
        points: 4,
        curves: &[("E1", "e4"), ("E2", "e3"), ("F1", "h-e1-e2-e4"), ("F2", "e2-e3"), ("F3", "e1-e2")],
        matrix: &[&[-1, 0, 1, 0, 0], &[0, -1, 0, 1, 0], &[1, 0, -2, 1, 0], &[0, 1, 1, -2, 1], &[0, 0, 0, 1, -2]],
        anti_canonical: Some(&[2, 3, 3, 4, 2]),
        errata: &[],
        rows: &[("E1∖F1", 15, 16), ("F1∖F2", 30, 43), ("F2", 5, 9), ("F3∖F2", 15, 19), ("E2∖F2", 10, 13), (OFF, 5, 4)],
        generic: &[("E1", "E1∖F1"), ("F1", "F1∖F2"), ("F2", "F2"), ("F3", "F3∖F2"), ("E2", "E2∖F2")],
        meets: &[("F1", "E1", "F1∖F2", None), ("F2", "F1", "F2", None), ("F2", "F3", "F2", None), ("F2", "E2", "F2", None)],
        off: Off::Movable("h-e1"),
        relation: None,
    },
    PlaneSpec {
        id: "dp5-6",
        points: 4,
        curves: &[("E1", "e4"), ("F1", "e1-e2"), ("F2", "e2-e3"), ("F3", "e3-e4"), ("F4", "h-e1-e2-e3")],
        matrix: &[&[-1, 0, 0, 1, 0], &[0, -2, 1, 0, 0], &[0, 1, -2, 1, 0], &[1, 0, 1, -2, 1], &[0, 0, 0, 1, -2]],
        anti_canonical: Some(&[5, 2, 4, 6, 3]),
        errata: &[],
        rows: &[("F1∖F2", 3, 4), ("F2∖F3", 6, 11), ("F3", 3, 7), ("F4∖F3", 9, 13), ("E1∖F3", 3, 5), (OFF, 6, 5)],
        generic: &[("F1", "F1∖F2"), ("F2", "F2∖F3"), ("F3", "F3"), ("F4", "F4∖F3"), ("E1", "E1∖F3")],
        meets: &[("F2", "F1", "F2∖F3", None), ("F3", "F2", "F3", None), ("F3", "F4", "F3", None), ("F3", "E1", "F3", None)],
        off: Off::Movable("h-e1"),
        relation: None,
    },
    PlaneSpec {
        id: "dp5-7",
        points: 4,
        curves: &[
            ("E1", "e1"),
            ("E2", "h-e1-e2"),
            ("E3", "e2"),
            ("E4", "h-e2-e3"),
            ("E5", "e3"),
            ("E6", "h-e3-e4"),
            ("E7", "e4"),
            ("E8", "h-e4-e1"),
            ("E9", "h-e1-e3"),
            ("E10", "h-e4-e2"),
        ],
        matrix: &[
            &[-1, 1, 0, 0, 0, 0, 0, 1, 1, 0],
            &[1, -1, 1, 0, 0, 1, 0, 0, 0, 0],
            &[0, 1, -1, 1, 0, 0, 0, 0, 0, 1],
            &[0, 0, 1, -1, 1, 0, 0, 1, 0, 0],
            &[0, 1, 0, 1, -1, 1, 0, 0, 1, 0],
            &[0, 1, 0, 0, 1, -1, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, -1, 1, 0, 0],
            &[1, 0, 0, 1, 0, 0, 1, -1, 0, 1],
            &[1, 0, 0, 0, 1, 0, 0, 0, -1, 1],
            &[0, 0, 1, 0, 0, 0, 1, 0, 1, -1],
        ],
        anti_canonical: None,
        errata: &[("E5", "E2", 1, 0), ("E7", "E10", 0, 1), ("E8", "E10", 1, 0)],
        rows: &[("on a (-1)-curve", 15, 13), (OFF, 40, 31)],
        generic: &[
            ("E1", "on a (-1)-curve"),
            ("E2", "on a (-1)-curve"),
            ("E3", "on a (-1)-curve"),
            ("E4", "on a (-1)-curve"),
            ("E5", "on a (-1)-curve"),
            ("E6", "on a (-1)-curve"),
            ("E7", "on a (-1)-curve"),
            ("E8", "on a (-1)-curve"),
            ("E9", "on a (-1)-curve"),
            ("E10", "on a (-1)-curve"),
        ],
        meets: &[
            ("E1", "E2", "on a (-1)-curve", None),
            ("E1", "E8", "on a (-1)-curve", None),
            ("E1", "E9", "on a (-1)-curve", None),
            ("E2", "E3", "on a (-1)-curve", None),
            ("E2", "E6", "on a (-1)-curve", None),
            ("E3", "E4", "on a (-1)-curve", None),
            ("E3", "E10", "on a (-1)-curve", None),
            ("E4", "E5", "on a (-1)-curve", None),
            ("E4", "E8", "on a (-1)-curve", None),
            ("E5", "E6", "on a (-1)-curve", None),
            ("E5", "E9", "on a (-1)-curve", None),
            ("E6", "E7", "on a (-1)-curve", None),
            ("E7", "E8", "on a (-1)-curve", None),
            ("E7", "E10", "on a (-1)-curve", None),
            ("E9", "E10", "on a (-1)-curve", None),
        ],
        off: Off::Blowup {
            names: &[("C", "2h-e1-e2-e3-e4-e5"), ("L1", "h-e1-e5"), ("L2", "h-e2-e5"), ("L3", "h-e3-e5"), ("L4", "h-e4-e5")],
            witness: None,
        },
        relation: Some(&[(3, 2, "C"), (1, 2, "E1"), (1, 2, "E3"), (1, 2, "E5"), (1, 2, "E7"), (3, 2, "Exc")]),
    },
    PlaneSpec {
        id: "dp6-1",
        points: 3,
        curves: &[("E1", "e1"), ("E2", "e2"), ("E3", "e3"), ("F", "h-e1-e2-e3")],
        matrix: &[&[-1, 0, 0, 1], &[0, -1, 1, 1], &[0, 1, -1, 1], &[1, 1, 1, -2]],
        anti_canonical: Some(&[2, 2, 2, 3]),
        errata: &[("E2", "E3", 1, 0), ("E3", "E2", 1, 0)],
        rows: &[("Ei∖F (i=1,2,3)", 9, 10), ("F", 3, 4), (OFF, 6, 5)],
        generic: &[("E1", "Ei∖F (i=1,2,3)"), ("E2", "Ei∖F (i=1,2,3)"), ("E3", "Ei∖F (i=1,2,3)"), ("F", "F")],
        meets: &[("F", "E1", "F", None), ("F", "E2", "F", None), ("F", "E3", "F", None)],
        off: Off::Blowup { names: &[("G1", "h-e1-e4"), ("G2", "h-e2-e4"), ("G3", "h-e3-e4")], witness: None },
        relation: Some(&[(1, 1, "G1"), (1, 1, "G2"), (1, 1, "G3"), (3, 1, "Exc")]),
    },
    PlaneSpec {
        id: "dp6-2",
        points: 3,
        curves: &[("E1", "h-e1-e2"), ("E2", "e2"), ("E3", "h-e1-e3"), ("E4", "e3"), ("F", "e1-e2")],
        matrix: &[&[-1, 1, 0, 0, 0], &[1, -1, 0, 0, 1], &[0, 0, -1, 1, 1], &[0, 0, 1, -1, 0], &[0, 1, 1, 0, -2]],
        anti_canonical: Some(&[2, 3, 1, 0, 2]),
        errata: &[],
        rows: &[("E1∖E2, E4∖E3", 9, 10), ("E2, E3", 9, 11), ("F∖(E2 ∪ E3)", 9, 11), (OFF, 9, 8)],
        generic: &[("E1", "E1∖E2, E4∖E3"), ("E4", "E1∖E2, E4∖E3"), ("E2", "E2, E3"), ("E3", "E2, E3"), ("F", "F∖(E2 ∪ E3)")],
        meets: &[
            ("E2", "E1", "E2, E3", None),
            ("E2", "F", "E2, E3", None),
            ("E3", "F", "E2, E3", None),
            ("E3", "E4", "E2, E3", None),
        ],
        off: Off::Movable("h-e1"),
        relation: None,
    },
    PlaneSpec {
        id: "dp6-3",
        points: 3,
        curves: &[("E1", "e2"), ("E2", "e3"), ("F1", "e1-e2"), ("F2", "h-e1-e2-e3")],
        matrix: &[&[-1, 0, 1, 1], &[0, -1, 0, 1], &[1, 0, -2, 0], &[1, 1, 0, -2]],
        anti_canonical: Some(&[4, 2, 2, 3]),
        errata: &[],
        rows: &[("F1∖E1", 9, 11), ("E1", 9, 14), ("F2∖E1", 3, 4), ("E2∖F2", 9, 10), (OFF, 9, 8)],
        generic: &[("F1", "F1∖E1"), ("E1", "E1"), ("F2", "F2∖E1"), ("E2", "E2∖F2")],
        meets: &[("E1", "F1", "E1", None), ("E1", "F2", "E1", None), ("E2", "F2", "F2∖E1", Some("F2"))],
        off: Off::Movable("h-e1"),
        relation: None,
    },
    PlaneSpec {
        id: "dp6-4",
        points: 3,
        curves: &[("E1", "h-e1-e2"), ("E2", "e3"), ("F1", "e1-e2"), ("F2", "e2-e3")],
        matrix: &[&[-1, 0, 0, 1], &[0, -1, 0, 1], &[0, 0, -2, 1], &[1, 1, 1, -2]],
        anti_canonical: Some(&[3, 3, 2, 4]),
        errata: &[],
        rows: &[("F1∖F2", 3, 4), ("F2", 3, 5), ("E1∖F2, E2∖F2", 4, 5), (OFF, 1, 1)],
        generic: &[("F1", "F1∖F2"), ("F2", "F2"), ("E1", "E1∖F2, E2∖F2"), ("E2", "E1∖F2, E2∖F2")],
        meets: &[("F2", "F1", "F2", None), ("F2", "E1", "F2", None), ("F2", "E2", "F2", None)],
        off: Off::Movable("h-e1"),
        relation: None,
    },
    PlaneSpec {
        id: "dp6-5",
        points: 3,
        curves: &[("E", "e3"), ("F1", "e1-e2"), ("F2", "e2-e3"), ("F3", "h-e1-e2-e3")],
        matrix: &[&[-1, 0, 1, 1], &[0, -2, 1, 0], &[1, 1, -2, 0], &[1, 0, 0, -2]],
        anti_canonical: Some(&[6, 2, 4, 3]),
        errata: &[],
        rows: &[("F1∖F2", 3, 4), ("F2∖E", 3, 5), ("E", 1, 2), ("F3∖E", 3, 4), (OFF, 1, 1)],
        generic: &[("F1", "F1∖F2"), ("F2", "F2∖E"), ("E", "E"), ("F3", "F3∖E")],
        meets: &[("F2", "F1", "F2∖E", None), ("E", "F2", "E", None), ("E", "F3", "E", None)],
        off: Off::Movable("h-e1"),
        relation: None,
    },
    PlaneSpec {
        id: "dp6-6",
        points: 3,
        curves: &[("E1", "e1"), ("E2", "h-e1-e2"), ("E3", "e2"), ("E4", "h-e2-e3"), ("E5", "e3"), ("E6", "h-e3-e1")],
        matrix: &[
            &[-1, 1, 0, 0, 0, 1],
            &[1, -1, 1, 0, 0, 0],
            &[0, 1, -1, 1, 0, 0],
            &[0, 0, 1, -1, 1, 0],
            &[0, 0, 0, 1, -1, 1],
            &[1, 0, 0, 0, 1, -1],
        ],
        anti_canonical: Some(&[2, 2, 1, 0, 0, 1]),
        errata: &[],
        rows: &[("Ei (i=1,...,6)", 1, 1), (OFF, 6, 5)],
        generic: &[
            ("E1", "Ei (i=1,...,6)"),
            ("E2", "Ei (i=1,...,6)"),
            ("E3", "Ei (i=1,...,6)"),
            ("E4", "Ei (i=1,...,6)"),
            ("E5", "Ei (i=1,...,6)"),
            ("E6", "Ei (i=1,...,6)"),
        ],
        meets: &[
            ("E1", "E2", "Ei (i=1,...,6)", None),
            ("E2", "E3", "Ei (i=1,...,6)", None),
            ("E3", "E4", "Ei (i=1,...,6)", None),
            ("E4", "E5", "Ei (i=1,...,6)", None),
            ("E5", "E6", "Ei (i=1,...,6)", None),
            ("E6", "E1", "Ei (i=1,...,6)", None),
        ],
        off: Off::Blowup { names: &[("G1", "h-e1-e4"), ("G2", "h-e2-e4"), ("G3", "h-e3-e4")], witness: None },
        relation: None,
    },
    PlaneSpec {
        id: "dp7-1",
        points: 2,
        curves: &[("E1", "h-e1-e2"), ("E2", "e2"), ("F", "e1-e2")],
        matrix: &[&[-1, 1, 0], &[1, -2, 1], &[0, 1, -2]],
        anti_canonical: Some(&[3, 4, 2]),
        errata: &[("E2", "E2", -2, -1)],
        rows: &[("E1∖E2", 21, 25), ("E2", 21, 31), ("F∖E2", 7, 9), (OFF, 21, 23)],
        generic: &[("E1", "E1∖E2"), ("E2", "E2"), ("F", "F∖E2")],
        meets: &[("E2", "E1", "E2", None), ("E2", "F", "E2", None)],
        off: Off::Movable("h-e1"),
        relation: None,
    },
    PlaneSpec {
        id: "dp7-2",
        points: 2,
        curves: &[("E1", "e1"), ("E2", "h-e1-e2"), ("E3", "e2")],
        matrix: &[&[-1, 1, 0], &[1, -1, 1], &[0, 1, -1]],
        anti_canonical: Some(&[2, 3, 2]),
        errata: &[],
        rows: &[("E1∖E2", 21, 23), ("E2", 21, 25), ("E3∖E2", 21, 23), (OFF, 21, 22)],
        generic: &[("E1", "E1∖E2"), ("E2", "E2"), ("E3", "E3∖E2")],
        meets: &[("E2", "E1", "E2", None), ("E2", "E3", "E2", None)],
        off: Off::Movable("h-e1"),
        relation: None,
    },
];
