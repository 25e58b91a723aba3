//! The `.tsys.json` interchange format: parse, validate, serialize.
//!
//! All numerics are strings so nothing ever passes through floats: rationals
//! are "p/q" (or "p"), integers are decimal strings. Coefficient vectors are
//! coordinates over the power basis of the declared field and must have
//! length equal to its degree.
//!
//! A document carries either the geometric description (prototiles plus
//! substitution placements) or a `combinatorial` block giving a complex's
//! cells and matrices directly; never both.

use std::collections::BTreeMap;
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::algebra::{CellInfo, FieldElement, GrElem, NumberField, RingMat, ZPoly};
use crate::geom::{Point, Polygon, RigidMotion, Rotor};
use crate::tiling::{ProtoTile, SubstitutionRule, TilingSystem};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("JSON error at line {line}, column {column}: {msg}")]
    Json {
        line: usize,
        column: usize,
        msg: String,
    },
    #[error("bad numeric literal {0:?}")]
    BadNumber(String),
    #[error("field error: {0}")]
    Field(#[from] crate::algebra::field::FieldError),
    #[error("coefficient vector has length {got}, field degree is {want}")]
    Arity { got: usize, want: usize },
    #[error("placement references unknown tile id {0:?}")]
    UnknownTile(String),
    #[error("{0}")]
    Schema(String),
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct SystemFile {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prototiles: Option<Vec<ProtoTileSpec>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub substitution: Option<SubstitutionSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub combinatorial: Option<CombinatorialSpec>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct FieldSpec {
    /// integer coefficients, little-endian, monic
    pub min_poly: Vec<String>,
    /// isolating interval [lo, hi] for the designated real root
    pub generator_interval: [String; 2],
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ProtoTileSpec {
    pub id: String,
    /// vertices as [x, y], each a coefficient vector of "p/q" strings
    pub vertices: Vec<[Vec<String>; 2]>,
    pub edge_labels: Vec<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct SubstitutionSpec {
    pub linear_factor: Vec<String>,
    /// parent tile id -> children
    pub placements: BTreeMap<String, Vec<PlacementSpec>>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct PlacementSpec {
    pub child: String,
    /// [cos, sin] coefficient vectors
    pub rotation: [Vec<String>; 2],
    #[serde(default)]
    pub reflect: bool,
    pub translation: [Vec<String>; 2],
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct CombinatorialSpec {
    pub group_order: usize,
    pub faces: Vec<CellInfo>,
    pub edges: Vec<CellInfo>,
    pub vertices: Vec<CellInfo>,
    /// entries are integer coefficient lists of length = orbit of the row cell
    pub boundary_1: Vec<Vec<Vec<String>>>,
    pub boundary_2: Vec<Vec<Vec<String>>>,
    pub subst_0: Vec<Vec<Vec<String>>>,
    pub subst_1: Vec<Vec<Vec<String>>>,
    pub subst_2: Vec<Vec<Vec<String>>>,
}

/// A parsed document: a geometric system or a directly-specified complex.
pub enum ParsedSystem {
    Geometric(TilingSystem),
    Combinatorial(ComplexSpec),
}

/// Cells and matrices of a complex given without geometry.
pub struct ComplexSpec {
    pub name: String,
    pub group_order: usize,
    pub faces: Vec<CellInfo>,
    pub edges: Vec<CellInfo>,
    pub vertices: Vec<CellInfo>,
    pub boundary_1: RingMat,
    pub boundary_2: RingMat,
    pub subst_0: RingMat,
    pub subst_1: RingMat,
    pub subst_2: RingMat,
}

fn parse_rational(s: &str) -> Result<BigRational, FormatError> {
    let bad = || FormatError::BadNumber(s.to_string());
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
        if q == BigInt::from(0) {
            return Err(bad());
        }
        Ok(BigRational::new(p, q))
    } else {
        let p = BigInt::from_str(s.trim()).map_err(|_| bad())?;
        Ok(BigRational::from(p))
    }
}

fn parse_int(s: &str) -> Result<BigInt, FormatError> {
    BigInt::from_str(s.trim()).map_err(|_| FormatError::BadNumber(s.to_string()))
}

fn rational_to_string(q: &BigRational) -> String {
    if num::One::is_one(q.denom()) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn parse_element(field: &NumberField, v: &[String]) -> Result<FieldElement, FormatError> {
    if v.len() != field.degree() {
        return Err(FormatError::Arity {
            got: v.len(),
            want: field.degree(),
        });
    }
    let coeffs = v
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(field.element(coeffs))
}

fn element_to_strings(e: &FieldElement) -> Vec<String> {
    e.coeffs.iter().map(rational_to_string).collect()
}

pub fn parse_system(text: &str) -> Result<ParsedSystem, FormatError> {
    let doc: SystemFile = serde_json::from_str(text).map_err(|e| FormatError::Json {
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })?;
    from_file(&doc)
}

pub fn from_file(doc: &SystemFile) -> Result<ParsedSystem, FormatError> {
    match (&doc.combinatorial, &doc.field) {
        (Some(c), None) => Ok(ParsedSystem::Combinatorial(parse_combinatorial(
            &doc.name, c,
        )?)),
        (Some(_), Some(_)) => Err(FormatError::Schema(
            "combinatorial and geometric blocks are mutually exclusive".into(),
        )),
        (None, Some(f)) => Ok(ParsedSystem::Geometric(parse_geometric(doc, f)?)),
        (None, None) => Err(FormatError::Schema(
            "document needs either a field+prototiles+substitution or a combinatorial block"
                .into(),
        )),
    }
}

fn parse_geometric(doc: &SystemFile, f: &FieldSpec) -> Result<TilingSystem, FormatError> {
    let coeffs = f
        .min_poly
        .iter()
        .map(|s| parse_int(s))
        .collect::<Result<Vec<_>, _>>()?;
    let min_poly = ZPoly::new(coeffs);
    let lo = parse_rational(&f.generator_interval[0])?;
    let hi = parse_rational(&f.generator_interval[1])?;
    let field = NumberField::new(min_poly, lo, hi)?;
    let protos_spec = doc
        .prototiles
        .as_ref()
        .ok_or_else(|| FormatError::Schema("missing prototiles".into()))?;
    let subst = doc
        .substitution
        .as_ref()
        .ok_or_else(|| FormatError::Schema("missing substitution".into()))?;
    let mut prototiles = Vec::new();
    for p in protos_spec {
        let mut verts = Vec::new();
        for [x, y] in &p.vertices {
            verts.push(Point::new(
                parse_element(&field, x)?,
                parse_element(&field, y)?,
            ));
        }
        if p.edge_labels.len() != verts.len() {
            return Err(FormatError::Schema(format!(
                "tile {}: {} edge labels for {} vertices",
                p.id,
                p.edge_labels.len(),
                verts.len()
            )));
        }
        prototiles.push(ProtoTile {
            id: p.id.clone(),
            polygon: Polygon::new(verts),
            edge_labels: p.edge_labels.clone(),
        });
    }
    let index: BTreeMap<&str, usize> = prototiles
        .iter()
        .enumerate()
        .map(|(i, p)| (p.id.as_str(), i))
        .collect();
    let linear_factor = parse_element(&field, &subst.linear_factor)?;
    let mut placements = vec![Vec::new(); prototiles.len()];
    for (parent, kids) in &subst.placements {
        let pi = *index
            .get(parent.as_str())
            .ok_or_else(|| FormatError::UnknownTile(parent.clone()))?;
        for k in kids {
            let ci = *index
                .get(k.child.as_str())
                .ok_or_else(|| FormatError::UnknownTile(k.child.clone()))?;
            let rot = Rotor::new(
                parse_element(&field, &k.rotation[0])?,
                parse_element(&field, &k.rotation[1])?,
            );
            if !rot.is_unit() {
                return Err(FormatError::Schema(format!(
                    "placement rotation in {} is not a unit",
                    parent
                )));
            }
            let tr = Point::new(
                parse_element(&field, &k.translation[0])?,
                parse_element(&field, &k.translation[1])?,
            );
            placements[pi].push((
                ci,
                RigidMotion {
                    rot,
                    reflect: k.reflect,
                    tr,
                },
            ));
        }
    }
    for (i, pl) in placements.iter().enumerate() {
        if pl.is_empty() {
            return Err(FormatError::Schema(format!(
                "tile {} has no placements",
                prototiles[i].id
            )));
        }
    }
    Ok(TilingSystem {
        name: doc.name.clone(),
        field,
        prototiles,
        rule: SubstitutionRule {
            linear_factor,
            placements,
        },
    })
}

fn parse_ring_mat(
    rows: &[CellInfo],
    cols: &[CellInfo],
    n: usize,
    entries: &[Vec<Vec<String>>],
    what: &str,
) -> Result<RingMat, FormatError> {
    if entries.len() != rows.len() {
        return Err(FormatError::Schema(format!(
            "{}: {} rows, expected {}",
            what,
            entries.len(),
            rows.len()
        )));
    }
    let mut m = RingMat::zero(n, rows.to_vec(), cols.to_vec());
    for (i, row) in entries.iter().enumerate() {
        if row.len() != cols.len() {
            return Err(FormatError::Schema(format!(
                "{} row {}: {} cols, expected {}",
                what,
                i,
                row.len(),
                cols.len()
            )));
        }
        for (j, e) in row.iter().enumerate() {
            if e.len() != rows[i].orbit {
                return Err(FormatError::Arity {
                    got: e.len(),
                    want: rows[i].orbit,
                });
            }
            let c = e
                .iter()
                .map(|s| parse_int(s))
                .collect::<Result<Vec<_>, _>>()?;
            m.set(
                i,
                j,
                GrElem {
                    k: rows[i].orbit,
                    c,
                },
            );
        }
    }
    Ok(m)
}

fn parse_combinatorial(name: &str, c: &CombinatorialSpec) -> Result<ComplexSpec, FormatError> {
    let n = c.group_order;
    for cell in c.faces.iter().chain(&c.edges).chain(&c.vertices) {
        if cell.orbit == 0 || n % cell.orbit != 0 {
            return Err(FormatError::Schema(format!(
                "cell {} orbit {} does not divide group order {}",
                cell.name, cell.orbit, n
            )));
        }
    }
    Ok(ComplexSpec {
        name: name.to_string(),
        group_order: n,
        faces: c.faces.clone(),
        edges: c.edges.clone(),
        vertices: c.vertices.clone(),
        boundary_1: parse_ring_mat(&c.vertices, &c.edges, n, &c.boundary_1, "boundary_1")?,
        boundary_2: parse_ring_mat(&c.edges, &c.faces, n, &c.boundary_2, "boundary_2")?,
        subst_0: parse_ring_mat(&c.vertices, &c.vertices, n, &c.subst_0, "subst_0")?,
        subst_1: parse_ring_mat(&c.edges, &c.edges, n, &c.subst_1, "subst_1")?,
        subst_2: parse_ring_mat(&c.faces, &c.faces, n, &c.subst_2, "subst_2")?,
    })
}

pub fn to_file(sys: &TilingSystem) -> SystemFile {
    let field = &sys.field;
    let (lo, hi) = field.base_interval();
    let fs = FieldSpec {
        min_poly: field
            .0
            .min_poly
            .coeffs
            .iter()
            .map(|c| c.to_string())
            .collect(),
        generator_interval: [rational_to_string(&lo), rational_to_string(&hi)],
    };
    let prototiles = sys
        .prototiles
        .iter()
        .map(|p| ProtoTileSpec {
            id: p.id.clone(),
            vertices: p
                .polygon
                .vertices
                .iter()
                .map(|v| [element_to_strings(&v.x), element_to_strings(&v.y)])
                .collect(),
            edge_labels: p.edge_labels.clone(),
        })
        .collect();
    let mut placements = BTreeMap::new();
    for (pi, kids) in sys.rule.placements.iter().enumerate() {
        placements.insert(
            sys.prototiles[pi].id.clone(),
            kids.iter()
                .map(|(ci, m)| PlacementSpec {
                    child: sys.prototiles[*ci].id.clone(),
                    rotation: [element_to_strings(&m.rot.c), element_to_strings(&m.rot.s)],
                    reflect: m.reflect,
                    translation: [element_to_strings(&m.tr.x), element_to_strings(&m.tr.y)],
                })
                .collect(),
        );
    }
    SystemFile {
        name: sys.name.clone(),
        field: Some(fs),
        prototiles: Some(prototiles),
        substitution: Some(SubstitutionSpec {
            linear_factor: sys
                .rule
                .linear_factor
                .coeffs
                .iter()
                .map(rational_to_string)
                .collect(),
            placements,
        }),
        combinatorial: None,
    }
}

pub fn serialize_system(sys: &TilingSystem) -> String {
    serde_json::to_string_pretty(&to_file(sys)).expect("serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fixtures_parse() {
        for name in fixtures::FIXTURE_NAMES {
            let sys = fixtures::load(name).unwrap();
            match (&sys, *name) {
                (ParsedSystem::Combinatorial(c), "penrose_combinatorial") => {
                    assert_eq!(c.group_order, 10);
                    assert_eq!(c.faces.len(), 4);
                }
                (ParsedSystem::Geometric(g), _) => {
                    assert!(!g.prototiles.is_empty());
                }
                _ => panic!("unexpected parse shape for {}", name),
            }
        }
    }

    #[test]
    fn round_trip_structural_equality() {
        for name in ["chair", "penrose_triangles", "pinwheel", "pinwheel_2_3"] {
            let ParsedSystem::Geometric(sys) = fixtures::load(name).unwrap() else {
                panic!()
            };
            let text = serialize_system(&sys);
            let ParsedSystem::Geometric(back) = parse_system(&text).unwrap() else {
                panic!()
            };
            assert_eq!(sys.name, back.name);
            assert_eq!(sys.prototiles.len(), back.prototiles.len());
            for (a, b) in sys.prototiles.iter().zip(&back.prototiles) {
                assert_eq!(a.id, b.id);
                assert_eq!(a.polygon.vertices, b.polygon.vertices);
                assert_eq!(a.edge_labels, b.edge_labels);
            }
            assert_eq!(sys.rule.linear_factor, back.rule.linear_factor);
            for (a, b) in sys.rule.placements.iter().zip(&back.rule.placements) {
                assert_eq!(a.len(), b.len());
                for ((ca, ma), (cb, mb)) in a.iter().zip(b) {
                    assert_eq!(ca, cb);
                    assert_eq!(ma, mb);
                }
            }
        }
    }

    #[test]
    fn unknown_child_rejected() {
        let text = r#"{
            "name": "bad",
            "field": {"min_poly": ["0","1"], "generator_interval": ["0","0"]},
            "prototiles": [{"id": "T", "vertices": [[["0"],["0"]],[["1"],["0"]],[["0"],["1"]]], "edge_labels": ["a","b","c"]}],
            "substitution": {"linear_factor": ["2"], "placements": {"T": [{"child": "NOPE", "rotation": [["1"],["0"]], "translation": [["0"],["0"]]}]}}
        }"#;
        assert!(matches!(
            parse_system(text),
            Err(FormatError::UnknownTile(_))
        ));
    }

    #[test]
    fn reducible_min_poly_rejected() {
        let text = r#"{
            "name": "bad",
            "field": {"min_poly": ["-1","0","1"], "generator_interval": ["1/2","3/2"]},
            "prototiles": [],
            "substitution": {"linear_factor": ["2","0"], "placements": {}}
        }"#;
        assert!(matches!(parse_system(text), Err(FormatError::Field(_))));
    }
}
