//! Construction of the tiling cell complexes: tiles mod translation (one
//! cell per prototile and group orbit), edges and vertices identified when
//! they meet in a supertile, boundary matrices over the group ring, and the
//! substitution matrices in all three degrees.
//!
//! Edge identifications always reverse orientation (positively oriented
//! tiles share boundary arcs with opposite directions); the union-find
//! tracks a rotation exponent and a flip. An edge class glued to itself
//! with a flip cannot carry a chain generator, so the offending prototile
//! edge is split at its midpoint and the build restarts.

use std::collections::{HashMap, HashSet};

use num::rational::BigRational;

use crate::algebra::{CellInfo, GrElem, RingMat};
use crate::geom::{on_segment, Point};
use crate::tiling::{Patch, TilingSystem};

use super::orientation::GroupTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Variant {
    /// Sigma_x: cells are tiles in each of the finitely many orientations;
    /// chains are modules over Z[t]/(t^N - 1).
    FixedOrientation,
    /// Sigma_0: one orientation per cell type; chains over Z.
    RotationFree,
}

pub struct APComplex {
    pub name: String,
    pub variant: Variant,
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

impl std::fmt::Debug for APComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "APComplex({}, {:?}, N={}, cells {}/{}/{})",
            self.name,
            self.variant,
            self.group_order,
            self.faces.len(),
            self.edges.len(),
            self.vertices.len()
        )
    }
}

#[derive(Debug, thiserror::Error)]
pub enum BuildError {
    #[error("fixed-orientation complex needs a finite orientation group (Sigma_x is not compact)")]
    InfiniteGroup,
    #[error("contact harvest did not stabilize within {0} levels")]
    NotStabilized(usize),
    #[error("tile rotation outside the orientation group (harvest bug)")]
    RotationOutsideGroup,
    #[error("edge subdivision for folded edges did not settle")]
    FoldLoop,
}

impl APComplex {
    /// Everything at t = 1; for finite groups this is the rotation-free
    /// complex of the same system.
    pub fn collapse_to_z(&self) -> APComplex {
        let strip = |cells: &[CellInfo]| -> Vec<CellInfo> {
            cells
                .iter()
                .map(|c| CellInfo {
                    name: c.name.clone(),
                    orbit: 1,
                })
                .collect()
        };
        APComplex {
            name: format!("{}_t1", self.name),
            variant: Variant::RotationFree,
            group_order: 1,
            faces: strip(&self.faces),
            edges: strip(&self.edges),
            vertices: strip(&self.vertices),
            boundary_1: self.boundary_1.collapse_to_z(),
            boundary_2: self.boundary_2.collapse_to_z(),
            subst_0: self.subst_0.collapse_to_z(),
            subst_1: self.subst_1.collapse_to_z(),
            subst_2: self.subst_2.collapse_to_z(),
        }
    }

    /// Chain-level consistency: d1 d2 = 0 and d substi = subst(i-1) d.
    pub fn verify(&self) -> Result<(), String> {
        if !self.boundary_1.mul(&self.boundary_2).is_zero() {
            return Err("d1 * d2 != 0".into());
        }
        let lhs1 = self.boundary_2.mul(&self.subst_2);
        let rhs1 = self.subst_1.mul(&self.boundary_2);
        if lhs1 != rhs1 {
            return Err("d2 subst2 != subst1 d2".into());
        }
        let lhs0 = self.boundary_1.mul(&self.subst_1);
        let rhs0 = self.subst_0.mul(&self.boundary_1);
        if lhs0 != rhs0 {
            return Err("d1 subst1 != subst0 d1".into());
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mat = |m: &RingMat| -> serde_json::Value {
            serde_json::json!((0..m.rows())
                .map(|i| (0..m.cols())
                    .map(|j| m.get(i, j).c.iter().map(|x| x.to_string()).collect::<Vec<_>>())
                    .collect::<Vec<_>>())
                .collect::<Vec<_>>())
        };
        serde_json::json!({
            "name": self.name,
            "variant": format!("{:?}", self.variant),
            "group_order": self.group_order,
            "faces": self.faces,
            "edges": self.edges,
            "vertices": self.vertices,
            "boundary_1": mat(&self.boundary_1),
            "boundary_2": mat(&self.boundary_2),
            "subst_0": mat(&self.subst_0),
            "subst_1": mat(&self.subst_1),
            "subst_2": mat(&self.subst_2),
        })
    }
}

/// Build the complex of a validated system. `group` must be the system's
/// orientation group table for the fixed-orientation variant; pass the
/// trivial table for the rotation-free variant.
pub fn build_complex(
    sys: &TilingSystem,
    variant: Variant,
    group: &GroupTable,
) -> Result<(APComplex, TilingSystem), BuildError> {
    let mut sys = sys.clone();
    for _round in 0..8 {
        match try_build(&sys, variant, group)? {
            Built::Done(c) => return Ok((c, sys)),
            Built::NeedsSplit(proto, edge) => {
                // split that prototile edge at its midpoint and rebuild
                let p = &mut sys.prototiles[proto];
                let n = p.polygon.len();
                let a = p.polygon.vertices[edge].clone();
                let b = p.polygon.vertices[(edge + 1) % n].clone();
                let half = a.x.field.from_rational(BigRational::new(1.into(), 2.into()));
                let mid = a.add(&b).scale(&half);
                p.polygon.vertices.insert(edge + 1, mid);
                let label = p.edge_labels[edge].clone();
                p.edge_labels.insert(edge + 1, label);
            }
        }
    }
    Err(BuildError::FoldLoop)
}

enum Built {
    Done(APComplex),
    NeedsSplit(usize, usize),
}

struct WeightedUf {
    parent: Vec<usize>,
    /// value(x) = sign * t^shift * value(parent)
    shift: Vec<usize>,
    flip: Vec<bool>,
    n: usize,
}

impl WeightedUf {
    fn new(count: usize, n: usize) -> Self {
        WeightedUf {
            parent: (0..count).collect(),
            shift: vec![0; count],
            flip: vec![false; count],
            n,
        }
    }

    /// (root, shift, flip) with value(x) = flip * t^shift * value(root)
    fn find(&mut self, x: usize) -> (usize, usize, bool) {
        if self.parent[x] == x {
            return (x, 0, false);
        }
        let (root, ps, pf) = self.find(self.parent[x]);
        let s = (self.shift[x] + ps) % self.n;
        let f = self.flip[x] ^ pf;
        self.parent[x] = root;
        self.shift[x] = s;
        self.flip[x] = f;
        (root, s, f)
    }

    /// Impose value(a) = sign(flip) * t^shift * value(b).
    /// Returns a derived self-relation (shift, flip) when a and b were
    /// already connected and the cycle is nontrivial.
    fn union(&mut self, a: usize, b: usize, shift: usize, flip: bool) -> Option<(usize, bool)> {
        let (ra, sa, fa) = self.find(a);
        let (rb, sb, fb) = self.find(b);
        if ra == rb {
            // value(a) = fa t^sa root; also = flip t^shift (fb t^sb root)
            let s = (shift + sb + self.n - sa) % self.n;
            let f = flip ^ fb ^ fa;
            if s == 0 && !f {
                return None;
            }
            return Some((s, f));
        }
        // root_a = fa^-1 t^-sa value(a) = fa t^-sa * (flip t^shift fb t^sb root_b)
        let s = (shift + sb + self.n - sa) % self.n;
        let f = flip ^ fb ^ fa;
        self.parent[ra] = rb;
        self.shift[ra] = s;
        self.flip[ra] = f;
        None
    }
}

fn try_build(
    sys: &TilingSystem,
    variant: Variant,
    group: &GroupTable,
) -> Result<Built, BuildError> {
    let n_group = match variant {
        Variant::FixedOrientation => group.order,
        Variant::RotationFree => 1,
    };
    let nt = sys.prototiles.len();
    let edge_counts: Vec<usize> = sys.prototiles.iter().map(|p| p.polygon.len()).collect();
    let mut edge_base = vec![0usize; nt + 1];
    for t in 0..nt {
        edge_base[t + 1] = edge_base[t] + edge_counts[t];
    }
    let total_edges = edge_base[nt];
    // vertices have the same index space as edges (vertex i = start of edge i)
    let mut euf = WeightedUf::new(total_edges, n_group);
    let mut vuf = WeightedUf::new(total_edges, n_group);
    // (node, exponent) pairs from cyclic vertex relations; resolved to final
    // roots only after all unions, since roots move during merging
    let mut vertex_stab_raw: Vec<(usize, usize)> = Vec::new();

    let dlog = |rot: &crate::geom::Rotor| -> Result<usize, BuildError> {
        match variant {
            Variant::RotationFree => Ok(0),
            Variant::FixedOrientation => {
                group.dlog(rot).ok_or(BuildError::RotationOutsideGroup)
            }
        }
    };

    // harvest contacts from supertiles until nothing new appears
    let mut seen_edge_rel: HashSet<(usize, usize, usize, usize, usize)> = HashSet::new();
    let mut seen_vert_rel: HashSet<(usize, usize, usize, usize, usize)> = HashSet::new();
    let budget = 8usize;
    let mut stabilized = false;
    let mut fold: Option<(usize, usize)> = None;
    'levels: for level in 1..=budget {
        let before = (seen_edge_rel.len(), seen_vert_rel.len());
        for t in 0..nt {
            let patch = sys.supertile(t, level);
            // edge contacts
            for (_key, germs) in patch.edge_map.iter() {
                if germs.len() < 2 {
                    continue;
                }
                debug_assert!(germs.len() == 2, "more than two tiles share an edge");
                let (ta, ea) = germs[0];
                let (tb, eb) = germs[1];
                let pa = patch.tiles[ta].proto;
                let pb = patch.tiles[tb].proto;
                let la = dlog(&patch.tiles[ta].motion.rot)?;
                let lb = dlog(&patch.tiles[tb].motion.rot)?;
                let rel = (lb + n_group - la) % n_group;
                let relkey = (pa, ea, pb, eb, rel);
                if !seen_edge_rel.insert(relkey) {
                    continue;
                }
                // t^la g(pa, ea) = - t^lb g(pb, eb):
                // value(a) = - t^(lb - la) value(b)
                let na = edge_base[pa] + ea;
                let nb = edge_base[pb] + eb;
                if let Some((s, f)) = euf.union(na, nb, rel, true) {
                    if f {
                        // fold: split this prototile edge
                        fold = Some((pa, ea));
                        break 'levels;
                    } else if s != 0 {
                        unreachable!("rotation-stabilized edge without flip");
                    }
                }
            }
            // vertex contacts: chain all germs at each point
            for (_pt, germs) in patch.vertex_map.iter() {
                if germs.len() < 2 {
                    continue;
                }
                let (t0, v0) = germs[0];
                let p0 = patch.tiles[t0].proto;
                let l0 = dlog(&patch.tiles[t0].motion.rot)?;
                for &(ti, vi) in &germs[1..] {
                    let pi = patch.tiles[ti].proto;
                    let li = dlog(&patch.tiles[ti].motion.rot)?;
                    let rel = (li + n_group - l0) % n_group;
                    let relkey = (p0, v0, pi, vi, rel);
                    if !seen_vert_rel.insert(relkey) {
                        continue;
                    }
                    // t^l0 v(p0, v0) = t^li v(pi, vi)
                    let na = edge_base[p0] + v0;
                    let nb = edge_base[pi] + vi;
                    if let Some((s, _)) = vuf.union(na, nb, rel, false) {
                        if s != 0 {
                            vertex_stab_raw.push((na, s));
                        }
                    }
                }
            }
        }
        if (seen_edge_rel.len(), seen_vert_rel.len()) == before && level > 1 {
            stabilized = true;
            break;
        }
    }
    if let Some((p, e)) = fold {
        return Ok(Built::NeedsSplit(p, e));
    }
    if !stabilized {
        return Err(BuildError::NotStabilized(budget));
    }

    // assemble cells
    let face_cells: Vec<CellInfo> = sys
        .prototiles
        .iter()
        .map(|p| CellInfo {
            name: p.id.clone(),
            orbit: n_group,
        })
        .collect();
    let mut edge_roots: Vec<usize> = Vec::new();
    let mut edge_class_of: HashMap<usize, usize> = HashMap::new();
    for x in 0..total_edges {
        let (r, _, _) = euf.find(x);
        if !edge_class_of.contains_key(&r) {
            edge_class_of.insert(r, edge_roots.len());
            edge_roots.push(r);
        }
    }
    let edge_cells: Vec<CellInfo> = edge_roots
        .iter()
        .enumerate()
        .map(|(i, _)| CellInfo {
            name: format!("e{}", i),
            orbit: n_group,
        })
        .collect();
    let mut vert_roots: Vec<usize> = Vec::new();
    let mut vert_class_of: HashMap<usize, usize> = HashMap::new();
    for x in 0..total_edges {
        let (r, _, _) = vuf.find(x);
        if !vert_class_of.contains_key(&r) {
            vert_class_of.insert(r, vert_roots.len());
            vert_roots.push(r);
        }
    }
    let mut vertex_stab: HashMap<usize, usize> = HashMap::new();
    for (node, s) in vertex_stab_raw {
        let (root, _, _) = vuf.find(node);
        let g = vertex_stab.entry(root).or_insert(n_group);
        *g = num::integer::gcd(*g, s);
    }
    let vert_cells: Vec<CellInfo> = vert_roots
        .iter()
        .enumerate()
        .map(|(i, &root)| CellInfo {
            name: format!("v{}", i),
            orbit: vertex_stab.get(&root).copied().unwrap_or(n_group),
        })
        .collect();

    // boundary_2: for each face P, walk its edges
    let mut boundary_2 = RingMat::zero(n_group, edge_cells.clone(), face_cells.clone());
    for p in 0..nt {
        for e in 0..edge_counts[p] {
            let (root, s, f) = euf.find(edge_base[p] + e);
            let class = edge_class_of[&root];
            let coeff = GrElem::monomial(n_group, s, if f { -1 } else { 1 });
            boundary_2.add_to(class, p, &coeff);
        }
    }

    // boundary_1: for each edge class root germ (P, i): end - start
    let proto_of_node = |x: usize| -> (usize, usize) {
        let p = (0..nt).rfind(|&t| edge_base[t] <= x).unwrap();
        (p, x - edge_base[p])
    };
    let mut boundary_1 = RingMat::zero(n_group, vert_cells.clone(), edge_cells.clone());
    for (class, &root) in edge_roots.iter().enumerate() {
        let (p, i) = proto_of_node(root);
        let nvert = edge_counts[p];
        let start = edge_base[p] + i;
        let end = edge_base[p] + ((i + 1) % nvert);
        let (rs, ss, _) = vuf.find(start);
        let (re, se, _) = vuf.find(end);
        let cs = vert_class_of[&rs];
        let ce = vert_class_of[&re];
        boundary_1.add_to(ce, class, &GrElem::monomial(n_group, se, 1));
        boundary_1.add_to(cs, class, &GrElem::monomial(n_group, ss, -1));
    }

    // subst_2 straight from the rule
    let mut subst_2 = RingMat::zero(n_group, face_cells.clone(), face_cells.clone());
    for parent in 0..nt {
        for (child, g) in &sys.rule.placements[parent] {
            let e = dlog(&g.rot)?;
            subst_2.add_to(*child, parent, &GrElem::monomial(n_group, e, 1));
        }
    }

    // subst_1: image of each edge-class root germ along the inflated edge
    let mut subst_1 = RingMat::zero(n_group, edge_cells.clone(), edge_cells.clone());
    let level1: Vec<Patch> = (0..nt).map(|t| sys.supertile(t, 1)).collect();
    for (class, &root) in edge_roots.iter().enumerate() {
        let (p, i) = proto_of_node(root);
        let nvert = edge_counts[p];
        let c = &sys.rule.linear_factor;
        let from = sys.prototiles[p].polygon.vertices[i].scale(c);
        let to = sys.prototiles[p].polygon.vertices[(i + 1) % nvert].scale(c);
        let patch = &level1[p];
        // child edges lying on [from, to]
        let dir = to.sub(&from);
        let mut segments: Vec<(crate::algebra::FieldElement, i64, usize, usize, usize)> =
            Vec::new();
        for (ti, tile) in patch.tiles.iter().enumerate() {
            let m = edge_counts[tile.proto];
            for j in 0..m {
                let a = &patch.verts[ti][j];
                let b = &patch.verts[ti][(j + 1) % m];
                if on_segment(&from, &to, a) && on_segment(&from, &to, b) {
                    let ta = a.sub(&from).dot(&dir);
                    let tb = b.sub(&from).dot(&dir);
                    let sign = match ta.cmp_exact(&tb) {
                        std::cmp::Ordering::Less => 1i64,
                        _ => -1i64,
                    };
                    let key = if sign > 0 { ta } else { tb };
                    segments.push((key, sign, ti, j, tile.proto));
                }
            }
        }
        segments.sort_by(|x, y| x.0.cmp_exact(&y.0));
        for (_key, sign, ti, j, proto) in segments {
            let lvl = dlog(&patch.tiles[ti].motion.rot)?;
            let (r, s, f) = euf.find(edge_base[proto] + j);
            let cls = edge_class_of[&r];
            let mut coeff = sign;
            if f {
                coeff = -coeff;
            }
            subst_1.add_to(
                cls,
                class,
                &GrElem::monomial(n_group, (lvl + s) % n_group, coeff),
            );
        }
    }

    // subst_0: vertex images at the inflated corners
    let mut subst_0 = RingMat::zero(n_group, vert_cells.clone(), vert_cells.clone());
    for (class, &root) in vert_roots.iter().enumerate() {
        let (p, v) = proto_of_node(root);
        let c = &sys.rule.linear_factor;
        let target: Point = sys.prototiles[p].polygon.vertices[v].scale(c);
        let patch = &level1[p];
        let germs = patch
            .vertex_map
            .get(&target)
            .expect("inflated corner must be a child vertex");
        let (ti, vi) = germs[0];
        let lvl = dlog(&patch.tiles[ti].motion.rot)?;
        let (r, s, _) = vuf.find(edge_base[patch.tiles[ti].proto] + vi);
        let cls = vert_class_of[&r];
        subst_0.add_to(
            cls,
            class,
            &GrElem::monomial(n_group, (lvl + s) % n_group, 1),
        );
    }

    let cx = APComplex {
        name: format!(
            "{}_{}",
            sys.name,
            match variant {
                Variant::FixedOrientation => "sigma_x",
                Variant::RotationFree => "sigma_0",
            }
        ),
        variant,
        group_order: n_group,
        faces: face_cells,
        edges: edge_cells,
        vertices: vert_cells,
        boundary_1,
        boundary_2,
        subst_0,
        subst_1,
        subst_2,
    };
    cx.verify().map_err(|e| {
        BuildError::NotStabilized({
            eprintln!("complex invariant violated: {}", e);
            0
        })
    })?;
    Ok(Built::Done(cx))
}

