//! Substitution tiling systems: prototiles with exact coordinates, the
//! inflate-and-subdivide rule, patch generation, axiom validation, and the
//! edge-splitting refinement that restores full edge-to-edge contacts.

use std::collections::HashMap;

use num::rational::BigRational;

use crate::algebra::{primitivity, FieldElement, NumberField, ZMat};
use crate::geom::{
    collinear_overlap, on_segment, segments_cross_properly, strictly_between, Point, Polygon,
    RigidMotion, Rotor,
};

#[derive(Clone, Debug)]
pub struct ProtoTile {
    pub id: String,
    pub polygon: Polygon,
    pub edge_labels: Vec<String>,
}

#[derive(Clone)]
pub struct SubstitutionRule {
    /// c(phi) > 1; children below tile the polygon scaled by this factor.
    pub linear_factor: FieldElement,
    /// placements[parent] = (child prototile index, motion into c * parent).
    pub placements: Vec<Vec<(usize, RigidMotion)>>,
}

#[derive(Clone)]
pub struct TilingSystem {
    pub name: String,
    pub field: NumberField,
    pub prototiles: Vec<ProtoTile>,
    pub rule: SubstitutionRule,
}

#[derive(Clone, Debug)]
pub struct PlacedTile {
    pub proto: usize,
    pub motion: RigidMotion,
}

/// A finite patch of placed tiles with exact-coincidence indexes.
pub struct Patch {
    pub tiles: Vec<PlacedTile>,
    pub verts: Vec<Vec<Point>>,
    /// exact point -> incident (tile, vertex index) pairs
    pub vertex_map: HashMap<Point, Vec<(usize, usize)>>,
    /// normalized edge key -> incident (tile, edge index) pairs
    pub edge_map: HashMap<(Point, Point), Vec<(usize, usize)>>,
}

fn edge_key(a: &Point, b: &Point) -> (Point, Point) {
    // normalize the unordered pair by the coefficient vectors
    let ka = (&a.x.coeffs, &a.y.coeffs);
    let kb = (&b.x.coeffs, &b.y.coeffs);
    if ka <= kb {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

impl Patch {
    pub fn new(protos: &[ProtoTile], tiles: Vec<PlacedTile>) -> Patch {
        let verts: Vec<Vec<Point>> = tiles
            .iter()
            .map(|t| {
                protos[t.proto]
                    .polygon
                    .vertices
                    .iter()
                    .map(|p| t.motion.apply(p))
                    .collect()
            })
            .collect();
        let mut vertex_map: HashMap<Point, Vec<(usize, usize)>> = HashMap::new();
        let mut edge_map: HashMap<(Point, Point), Vec<(usize, usize)>> = HashMap::new();
        for (ti, vs) in verts.iter().enumerate() {
            let n = vs.len();
            for (vi, v) in vs.iter().enumerate() {
                vertex_map.entry(v.clone()).or_default().push((ti, vi));
                let w = &vs[(vi + 1) % n];
                edge_map.entry(edge_key(v, w)).or_default().push((ti, vi));
            }
        }
        Patch {
            tiles,
            verts,
            vertex_map,
            edge_map,
        }
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    /// Tiles sharing at least one exact vertex with tile `i` (not `i` itself).
    pub fn vertex_neighbors(&self, i: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for v in &self.verts[i] {
            for &(tj, _) in &self.vertex_map[v] {
                if tj != i && !out.contains(&tj) {
                    out.push(tj);
                }
            }
        }
        out.sort();
        out
    }

    /// The tile+edge on the other side of edge (i, e), when the contact is a
    /// full shared edge.
    pub fn edge_partner(&self, i: usize, e: usize) -> Option<(usize, usize)> {
        let n = self.verts[i].len();
        let a = &self.verts[i][e];
        let b = &self.verts[i][(e + 1) % n];
        let list = self.edge_map.get(&edge_key(a, b))?;
        list.iter().copied().find(|&(tj, ej)| !(tj == i && ej == e))
    }

    /// Edges with no full-edge partner.
    pub fn boundary_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, vs) in self.verts.iter().enumerate() {
            for e in 0..vs.len() {
                if self.edge_partner(i, e).is_none() {
                    out.push((i, e));
                }
            }
        }
        out
    }

    /// A tile is interior when none of its vertices lie on a boundary edge's
    /// endpoints... more precisely, when every neighbor contact around it is
    /// present: no vertex of the tile touches the patch boundary.
    pub fn interior_tiles(&self) -> Vec<usize> {
        let mut boundary_points: std::collections::HashSet<Point> = std::collections::HashSet::new();
        for (i, e) in self.boundary_edges() {
            let n = self.verts[i].len();
            boundary_points.insert(self.verts[i][e].clone());
            boundary_points.insert(self.verts[i][(e + 1) % n].clone());
        }
        (0..self.tiles.len())
            .filter(|&i| {
                self.verts[i]
                    .iter()
                    .all(|v| !boundary_points.contains(v))
            })
            .collect()
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct ConditionStatus {
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct ValidationReport {
    pub system: String,
    /// equivariance holds by construction (rule stored in prototile frame)
    pub condition_1: ConditionStatus,
    /// inflation covers exactly, full edge to full edge
    pub condition_2: ConditionStatus,
    /// every type occurs in phi T (strict form) / type-count matrix primitive
    pub condition_3_strict: ConditionStatus,
    pub condition_3_primitive: ConditionStatus,
    /// parallel same-type descendant, with witness levels
    pub condition_4: ConditionStatus,
    pub condition_4_witnesses: Vec<(String, Option<usize>)>,
    /// no nontrivial label-respecting rotational symmetry
    pub condition_5: ConditionStatus,
    pub ok: bool,
    /// condition 2 failed only through subdivision mismatches (splittable)
    pub edge_split_would_help: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum TilingError {
    #[error("validation failed: {0}")]
    Invalid(String),
    #[error("edge splitting did not stabilize within budget ({0} vertices)")]
    SplitBudget(usize),
    #[error("{0}")]
    Other(String),
}

impl TilingSystem {
    pub fn type_count_matrix(&self) -> ZMat {
        let n = self.prototiles.len();
        let mut m = ZMat::zero(n, n);
        for (parent, children) in self.rule.placements.iter().enumerate() {
            for (child, _) in children {
                let v = m.get(*child, parent) + num::BigInt::from(1);
                m.set(*child, parent, v);
            }
        }
        m
    }

    pub fn proto_index(&self, id: &str) -> Option<usize> {
        self.prototiles.iter().position(|p| p.id == id)
    }

    /// Exact areas per prototile.
    pub fn area_vector(&self) -> Vec<FieldElement> {
        self.prototiles.iter().map(|p| p.polygon.area()).collect()
    }

    /// The level-n supertile of type `t` as a patch in the frame of c^n * T.
    pub fn supertile(&self, t: usize, n: usize) -> Patch {
        Patch::new(&self.prototiles, self.supertile_placements(t, n))
    }

    pub fn supertile_placements(&self, t: usize, n: usize) -> Vec<PlacedTile> {
        if n == 0 {
            return vec![PlacedTile {
                proto: t,
                motion: RigidMotion::identity(&self.field),
            }];
        }
        let scale = self.rule.linear_factor.pow(n - 1);
        let mut out = Vec::new();
        for (child, g) in &self.rule.placements[t] {
            let embedded = g.scale_translation(&scale);
            for sub in self.supertile_placements(*child, n - 1) {
                out.push(PlacedTile {
                    proto: sub.proto,
                    motion: embedded.compose(&sub.motion),
                });
            }
        }
        out
    }

    /// Substitute every tile of a patch once (patch level -> level+1 frame).
    pub fn substitute_patch(&self, tiles: &[PlacedTile]) -> Vec<PlacedTile> {
        let mut out = Vec::new();
        for t in tiles {
            let embedded = t.motion.scale_translation(&self.rule.linear_factor);
            // wait: scaling conjugation: tile at motion (rot, tr) maps to
            // children at (rot, c*tr) composed with rule placements
            let base = RigidMotion {
                rot: embedded.rot.clone(),
                reflect: embedded.reflect,
                tr: embedded.tr.clone(),
            };
            for (child, g) in &self.rule.placements[t.proto] {
                out.push(PlacedTile {
                    proto: *child,
                    motion: base.compose(g),
                });
            }
        }
        out
    }

    pub fn validate(&self) -> ValidationReport {
        self.validate_with(2, 6)
    }

    /// `cover_levels`: how many inflation levels get the exact cover check;
    /// `n_max`: search bound for the parallel-descendant condition.
    pub fn validate_with(&self, cover_levels: usize, n_max: usize) -> ValidationReport {
        let condition_1 = ConditionStatus {
            passed: true,
            detail: "rule stored in the prototile frame; equivariance holds by construction"
                .into(),
        };

        // prototile sanity + condition 5
        let mut c5_pass = true;
        let mut c5_detail = String::new();
        for p in &self.prototiles {
            if !p.polygon.is_simple() || !p.polygon.is_positively_oriented() {
                c5_pass = false;
                c5_detail = format!("prototile {} is not a simple positive polygon", p.id);
                break;
            }
            if let Some(rot) = rotational_symmetry(p) {
                c5_pass = false;
                c5_detail = format!(
                    "prototile {} has a nontrivial rotational symmetry by {:?}",
                    p.id, rot
                );
                break;
            }
        }
        if c5_pass {
            c5_detail = "no prototile has a nontrivial rotational symmetry".into();
        }
        let condition_5 = ConditionStatus {
            passed: c5_pass,
            detail: c5_detail,
        };

        // condition 2
        let mut c2_pass = true;
        let mut c2_detail = String::from("inflations cover exactly, full edge to full edge");
        let mut splittable = false;
        'outer: for t in 0..self.prototiles.len() {
            for n in 1..=cover_levels {
                let patch = self.supertile(t, n);
                let region = self.prototiles[t]
                    .polygon
                    .scale(&self.rule.linear_factor.pow(n));
                match validate_cover(&self.prototiles, &patch, &region) {
                    Ok(()) => {}
                    Err(v) => {
                        c2_pass = false;
                        splittable = matches!(v, CoverViolation::PartialEdge { .. });
                        c2_detail = format!(
                            "phi^{}({}) violates condition 2: {}",
                            n, self.prototiles[t].id, v
                        );
                        break 'outer;
                    }
                }
            }
        }
        let condition_2 = ConditionStatus {
            passed: c2_pass,
            detail: c2_detail,
        };

        // condition 3
        let m = self.type_count_matrix();
        let strict = (0..self.prototiles.len()).all(|parent| {
            (0..self.prototiles.len()).all(|child| !num::Zero::is_zero(m.get(child, parent)))
        });
        let condition_3_strict = ConditionStatus {
            passed: strict,
            detail: if strict {
                "every phi T contains every type".into()
            } else {
                "some phi T misses a type at level 1 (primitivity still decides)".into()
            },
        };
        let prim = primitivity(&m);
        let condition_3_primitive = ConditionStatus {
            passed: prim.primitive,
            detail: match prim.witness_power {
                Some(k) => format!("type-count matrix is primitive, M^{} > 0", k),
                None => format!("primitive: {}", prim.primitive),
            },
        };

        // condition 4: first n with a parallel same-type descendant
        let mut witnesses = Vec::new();
        let mut c4_pass = true;
        for t in 0..self.prototiles.len() {
            let w = self.parallel_descendant_level(t, n_max);
            if w.is_none() {
                c4_pass = false;
            }
            witnesses.push((self.prototiles[t].id.clone(), w));
        }
        let condition_4 = ConditionStatus {
            passed: c4_pass,
            detail: if c4_pass {
                format!("all tiles have parallel descendants within n <= {}", n_max)
            } else {
                format!("unverified at bound n_max = {}", n_max)
            },
        };

        let ok = condition_1.passed
            && condition_2.passed
            && condition_3_primitive.passed
            && condition_4.passed
            && condition_5.passed;
        ValidationReport {
            system: self.name.clone(),
            condition_1,
            condition_2,
            condition_3_strict,
            condition_3_primitive,
            condition_4,
            condition_4_witnesses: witnesses,
            condition_5,
            ok,
            edge_split_would_help: splittable,
        }
    }

    /// Smallest n <= n_max such that phi^n(T) contains a tile of type T with
    /// identity rotation.
    pub fn parallel_descendant_level(&self, t: usize, n_max: usize) -> Option<usize> {
        use std::collections::HashSet;
        type RotKey = (Vec<BigRational>, Vec<BigRational>);
        let key = |r: &Rotor| -> RotKey { (r.c.coeffs.clone(), r.s.coeffs.clone()) };
        // sets[s] = set of rotations of type-s tiles in phi^n(T)
        let mut sets: Vec<HashSet<RotKey>> = vec![HashSet::new(); self.prototiles.len()];
        let mut rotors: Vec<Vec<Rotor>> = vec![Vec::new(); self.prototiles.len()];
        sets[t].insert(key(&Rotor::identity(&self.field)));
        rotors[t].push(Rotor::identity(&self.field));
        for n in 1..=n_max {
            let mut next_sets: Vec<HashSet<RotKey>> = vec![HashSet::new(); self.prototiles.len()];
            let mut next_rotors: Vec<Vec<Rotor>> = vec![Vec::new(); self.prototiles.len()];
            for (parent, rs) in rotors.iter().enumerate() {
                for r in rs {
                    for (child, g) in &self.rule.placements[parent] {
                        let nr = r.compose(&g.rot);
                        if next_sets[*child].insert(key(&nr)) {
                            next_rotors[*child].push(nr);
                        }
                    }
                }
            }
            if next_sets[t].contains(&key(&Rotor::identity(&self.field))) {
                return Some(n);
            }
            sets = next_sets;
            rotors = next_rotors;
            let _ = &sets;
        }
        None
    }

    /// Refine prototile boundaries until every tile-tile contact in scanned
    /// supertiles is full edge to full edge. Geometry is unchanged as point
    /// sets; only vertices are inserted.
    pub fn split_edges(&self) -> Result<TilingSystem, TilingError> {
        let mut sys = self.clone();
        let budget = 64usize;
        let scan_levels = 2usize;
        loop {
            let total: usize = sys.prototiles.iter().map(|p| p.polygon.len()).sum();
            if total > budget {
                return Err(TilingError::SplitBudget(budget));
            }
            let mut inserts: Vec<(usize, usize, Point)> = Vec::new();
            for t in 0..sys.prototiles.len() {
                for n in 1..=scan_levels {
                    let patch = sys.supertile(t, n);
                    collect_split_points(&sys.prototiles, &patch, &mut inserts);
                }
            }
            if inserts.is_empty() {
                return Ok(sys);
            }
            // apply inserts, deduped, sorted along each edge
            let mut by_edge: HashMap<(usize, usize), Vec<Point>> = HashMap::new();
            for (proto, edge, p) in inserts {
                let v = by_edge.entry((proto, edge)).or_default();
                if !v.contains(&p) {
                    v.push(p);
                }
            }
            let mut new_protos = sys.prototiles.clone();
            // process edges in reverse index order so insertions do not shift
            let mut keys: Vec<(usize, usize)> = by_edge.keys().copied().collect();
            keys.sort_by(|a, b| b.cmp(a));
            for (proto, edge) in keys {
                let pts = &by_edge[&(proto, edge)];
                let poly = &mut new_protos[proto];
                let a = poly.polygon.vertices[edge].clone();
                let mut pts = pts.clone();
                // sort along the edge direction from a
                pts.sort_by(|p, q| {
                    let dp = p.sub(&a).norm_sq();
                    let dq = q.sub(&a).norm_sq();
                    dp.cmp_exact(&dq)
                });
                let label = poly.edge_labels[edge].clone();
                for (k, p) in pts.iter().enumerate() {
                    poly.polygon.vertices.insert(edge + 1 + k, p.clone());
                    poly.edge_labels.insert(edge + 1, label.clone());
                }
            }
            sys.prototiles = new_protos;
        }
    }
}

/// Nontrivial rotation carrying the labeled prototile to itself.
fn rotational_symmetry(p: &ProtoTile) -> Option<Rotor> {
    let n = p.polygon.len();
    let vs = &p.polygon.vertices;
    let centroid_x = vs
        .iter()
        .fold(vs[0].x.field.zero(), |acc, v| acc.add(&v.x))
        .scale(&BigRational::new(1.into(), (n as i64).into()));
    let centroid_y = vs
        .iter()
        .fold(vs[0].x.field.zero(), |acc, v| acc.add(&v.y))
        .scale(&BigRational::new(1.into(), (n as i64).into()));
    let c = Point::new(centroid_x, centroid_y);
    for k in 1..n {
        // candidate: map vertex i -> vertex i+k, fixing the centroid
        let a = vs[0].sub(&c);
        let b = vs[k].sub(&c);
        let na = a.norm_sq();
        if na.sub(&b.norm_sq()).sign() != 0 {
            continue;
        }
        // rotor = b / a (complex division)
        let inv = na.inv();
        let rc = a.dot(&b).mul(&inv);
        let rs = a.cross(&b).mul(&inv);
        let rot = Rotor {
            c: rc,
            s: rs,
        };
        if !rot.is_unit() || rot.is_identity() {
            continue;
        }
        let mut all = true;
        for i in 0..n {
            let img = rot.apply(&vs[i].sub(&c)).add(&c);
            if img != vs[(i + k) % n] {
                all = false;
                break;
            }
            if p.edge_labels[i] != p.edge_labels[(i + k) % n] {
                all = false;
                break;
            }
        }
        if all {
            return Some(rot);
        }
    }
    None
}

#[derive(Debug)]
pub enum CoverViolation {
    DuplicateTile(usize, usize),
    ProperCrossing(usize, usize),
    VertexInsideTile(usize, usize),
    PartialEdge {
        tile_a: usize,
        edge_a: usize,
        tile_b: usize,
        edge_b: usize,
    },
    OutsideRegion(usize),
    AreaMismatch,
}

impl std::fmt::Display for CoverViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoverViolation::DuplicateTile(a, b) => write!(f, "tiles {} and {} coincide", a, b),
            CoverViolation::ProperCrossing(a, b) => {
                write!(f, "edges of tiles {} and {} cross properly", a, b)
            }
            CoverViolation::VertexInsideTile(a, b) => {
                write!(f, "a vertex of tile {} lies inside tile {}", a, b)
            }
            CoverViolation::PartialEdge {
                tile_a,
                edge_a,
                tile_b,
                edge_b,
            } => write!(
                f,
                "partial edge contact: tile {} edge {} against tile {} edge {}",
                tile_a, edge_a, tile_b, edge_b
            ),
            CoverViolation::OutsideRegion(a) => write!(f, "tile {} leaves the region", a),
            CoverViolation::AreaMismatch => write!(f, "tile areas do not sum to the region area"),
        }
    }
}

/// Exact check that the patch tiles the region: pairwise disjoint interiors,
/// every contact a full shared edge or a shared vertex, contained in the
/// region, areas adding up.
pub fn validate_cover(
    protos: &[ProtoTile],
    patch: &Patch,
    region: &Polygon,
) -> Result<(), CoverViolation> {
    let n = patch.len();
    let field = &region.vertices[0].x.field;
    // refine for useful bounding boxes
    for _ in 0..4 {
        field.refine_generator();
    }
    let boxes: Vec<_> = (0..n)
        .map(|i| Polygon::new(patch.verts[i].clone()).bbox())
        .collect();
    let bbox_overlap = |a: &(BigRational, BigRational, BigRational, BigRational),
                        b: &(BigRational, BigRational, BigRational, BigRational)|
     -> bool { !(a.1 < b.0 || b.1 < a.0 || a.3 < b.2 || b.3 < a.2) };
    let mut area_sum = field.zero();
    for i in 0..n {
        area_sum = area_sum.add(&protos[patch.tiles[i].proto].polygon.area());
        // containment in the region
        let pi = Polygon::new(patch.verts[i].clone());
        for v in &pi.vertices {
            if !region.contains_interior(v) {
                let on_boundary = (0..region.len()).any(|e| {
                    let (a, b) = region.edge(e);
                    on_segment(a, b, v)
                });
                if !on_boundary {
                    return Err(CoverViolation::OutsideRegion(i));
                }
            }
        }
        for j in (i + 1)..n {
            if !bbox_overlap(&boxes[i], &boxes[j]) {
                continue;
            }
            let pj = Polygon::new(patch.verts[j].clone());
            if patch.verts[i] == patch.verts[j] {
                return Err(CoverViolation::DuplicateTile(i, j));
            }
            for ei in 0..pi.len() {
                let (a, b) = pi.edge(ei);
                for ej in 0..pj.len() {
                    let (c, d) = pj.edge(ej);
                    if segments_cross_properly(a, b, c, d) {
                        return Err(CoverViolation::ProperCrossing(i, j));
                    }
                    if collinear_overlap(a, b, c, d) {
                        // a full shared edge is fine; anything else is not
                        let full = (a == d && b == c) || (a == c && b == d);
                        if !full {
                            return Err(CoverViolation::PartialEdge {
                                tile_a: i,
                                edge_a: ei,
                                tile_b: j,
                                edge_b: ej,
                            });
                        }
                    }
                }
            }
            for v in &pi.vertices {
                if pj.contains_interior(v) {
                    return Err(CoverViolation::VertexInsideTile(i, j));
                }
                // vertex of one tile strictly inside an edge of the other
                for ej in 0..pj.len() {
                    let (c, d) = pj.edge(ej);
                    if strictly_between(c, d, v) {
                        return Err(CoverViolation::PartialEdge {
                            tile_a: j,
                            edge_a: ej,
                            tile_b: i,
                            edge_b: 0,
                        });
                    }
                }
            }
            for v in &pj.vertices {
                if pi.contains_interior(v) {
                    return Err(CoverViolation::VertexInsideTile(j, i));
                }
                for ei in 0..pi.len() {
                    let (a, b) = pi.edge(ei);
                    if strictly_between(a, b, v) {
                        return Err(CoverViolation::PartialEdge {
                            tile_a: i,
                            edge_a: ei,
                            tile_b: j,
                            edge_b: 0,
                        });
                    }
                }
            }
        }
    }
    if !area_sum.sub(&region.area()).is_zero() {
        return Err(CoverViolation::AreaMismatch);
    }
    Ok(())
}

/// Strict vertex-inside-edge incidents, pulled back into prototype frames.
/// Touching tiles need not share a vertex here, so pairs are pruned by
/// bounding boxes rather than by the vertex index.
fn collect_split_points(
    protos: &[ProtoTile],
    patch: &Patch,
    out: &mut Vec<(usize, usize, Point)>,
) {
    let n = patch.len();
    if n == 0 {
        return;
    }
    let field = &patch.verts[0][0].x.field;
    for _ in 0..4 {
        field.refine_generator();
    }
    let boxes: Vec<_> = (0..n)
        .map(|i| Polygon::new(patch.verts[i].clone()).bbox())
        .collect();
    for i in 0..n {
        for j in (i + 1)..n {
            let (a, b) = (&boxes[i], &boxes[j]);
            if a.1 < b.0 || b.1 < a.0 || a.3 < b.2 || b.3 < a.2 {
                continue;
            }
            scan_pair(protos, patch, i, j, out);
            scan_pair(protos, patch, j, i, out);
        }
    }
}

/// Vertices of tile `vi` strictly inside edges of tile `wi`.
fn scan_pair(
    protos: &[ProtoTile],
    patch: &Patch,
    vi: usize,
    wi: usize,
    out: &mut Vec<(usize, usize, Point)>,
) {
    let w = &patch.tiles[wi];
    let wn = patch.verts[wi].len();
    for v in &patch.verts[vi] {
        for e in 0..wn {
            let a = &patch.verts[wi][e];
            let b = &patch.verts[wi][(e + 1) % wn];
            if strictly_between(a, b, v) {
                let local = w.motion.inverse().apply(v);
                debug_assert!({
                    let pa = &protos[w.proto].polygon.vertices[e];
                    let pb = &protos[w.proto].polygon.vertices[(e + 1) % wn];
                    strictly_between(pa, pb, &local)
                });
                out.push((w.proto, e, local));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn chair_supertile_counts() {
        let sys = fixtures::chair();
        assert_eq!(sys.supertile(0, 0).len(), 1);
        assert_eq!(sys.supertile(0, 1).len(), 4);
        assert_eq!(sys.supertile(0, 2).len(), 16);
    }

    #[test]
    fn chair_unsplit_fails_condition_2() {
        let sys = fixtures::chair();
        let rep = sys.validate();
        assert!(!rep.condition_2.passed);
        assert!(rep.edge_split_would_help);
        assert!(rep.condition_5.passed);
    }

    #[test]
    fn chair_split_passes() {
        let sys = fixtures::chair().split_edges().unwrap();
        // the L gains midpoints on the two long sides: 6 -> 8 vertices
        assert_eq!(sys.prototiles[0].polygon.len(), 8);
        let rep = sys.validate();
        assert!(rep.ok, "{:?}", rep);
        // split is a fixed point
        let again = sys.split_edges().unwrap();
        assert_eq!(again.prototiles[0].polygon.len(), 8);
    }

    #[test]
    fn chair_parallel_descendant_at_level_one() {
        // two children of the chair rule are parallel to the parent
        let sys = fixtures::chair();
        assert_eq!(sys.parallel_descendant_level(0, 6), Some(1));
    }

    #[test]
    fn chair_areas() {
        let sys = fixtures::chair();
        let areas = sys.area_vector();
        assert_eq!(areas[0], sys.field.from_int(3));
    }

    #[test]
    fn symmetric_square_rejected() {
        let k = NumberField::rationals();
        let square = ProtoTile {
            id: "sq".into(),
            polygon: Polygon::new(vec![
                Point::new(k.from_int(0), k.from_int(0)),
                Point::new(k.from_int(1), k.from_int(0)),
                Point::new(k.from_int(1), k.from_int(1)),
                Point::new(k.from_int(0), k.from_int(1)),
            ]),
            edge_labels: vec!["e".into(); 4],
        };
        assert!(rotational_symmetry(&square).is_some());
    }
}
