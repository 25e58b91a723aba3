//! First coronas (all tiles touching a tile), harvested from supertile
//! interiors; collaring; and the border-forcing scan.

use std::collections::{BTreeMap, HashMap, HashSet};

use num::rational::BigRational;

use crate::geom::{Point, RigidMotion, Rotor};
use crate::tiling::{PlacedTile, ProtoTile, SubstitutionRule, TilingSystem};

/// Exact, hashable, orderable key of a rigid motion.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MotionKey {
    c: Vec<BigRational>,
    s: Vec<BigRational>,
    x: Vec<BigRational>,
    y: Vec<BigRational>,
}

pub fn motion_key(m: &RigidMotion) -> MotionKey {
    MotionKey {
        c: m.rot.c.coeffs.clone(),
        s: m.rot.s.coeffs.clone(),
        x: m.tr.x.coeffs.clone(),
        y: m.tr.y.coeffs.clone(),
    }
}

/// A corona in the frame of its center tile: surrounding tiles, sorted.
pub type CoronaPattern = Vec<(usize, MotionKey)>;

#[derive(Debug, Clone)]
pub struct CoronaSet {
    /// per prototile: distinct coronas (full normalization: rotation quotiented)
    pub per_type: Vec<Vec<(CoronaPattern, Vec<PlacedTile>)>>,
    /// count with only translations quotiented (orientation kept)
    pub per_orientation_count: usize,
    pub stabilized_at_level: usize,
}

impl CoronaSet {
    pub fn rotation_only_count(&self) -> usize {
        self.per_type.iter().map(|v| v.len()).sum()
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CoronaError {
    #[error("corona enumeration did not stabilize within {0} levels (partial: {1} coronas)")]
    NotStabilized(usize, usize),
}

/// Corona of tile `i` in `patch`, as placed tiles (absolute frame).
fn corona_of(patch: &crate::tiling::Patch, i: usize) -> Vec<usize> {
    patch.vertex_neighbors(i)
}

fn canonical_corona(
    patch: &crate::tiling::Patch,
    center: usize,
    neighbors: &[usize],
) -> (CoronaPattern, Vec<PlacedTile>) {
    let inv = patch.tiles[center].motion.inverse();
    let mut placed: Vec<PlacedTile> = neighbors
        .iter()
        .map(|&j| PlacedTile {
            proto: patch.tiles[j].proto,
            motion: inv.compose(&patch.tiles[j].motion),
        })
        .collect();
    placed.sort_by(|a, b| {
        (a.proto, motion_key(&a.motion)).cmp(&(b.proto, motion_key(&b.motion)))
    });
    let pattern: CoronaPattern = placed
        .iter()
        .map(|p| (p.proto, motion_key(&p.motion)))
        .collect();
    (pattern, placed)
}

/// Enumerate first coronas by scanning supertile interiors until the corona
/// sets are identical at two consecutive levels.
pub fn enumerate_coronas(sys: &TilingSystem, budget: usize) -> Result<CoronaSet, CoronaError> {
    let nt = sys.prototiles.len();
    let mut seen: Vec<BTreeMap<CoronaPattern, Vec<PlacedTile>>> = vec![BTreeMap::new(); nt];
    let mut oriented: HashSet<(usize, Vec<BigRational>, Vec<BigRational>, CoronaPattern)> =
        HashSet::new();
    let mut last_counts = vec![0usize; nt];
    let mut stable = 0usize;
    for level in 1..=budget {
        for t in 0..nt {
            let patch = sys.supertile(t, level);
            for i in patch.interior_tiles() {
                let neighbors = corona_of(&patch, i);
                let (pattern, placed) = canonical_corona(&patch, i, &neighbors);
                let proto = patch.tiles[i].proto;
                seen[proto].entry(pattern.clone()).or_insert(placed);
                // orientation-kept count: key by (proto, rotation, pattern)
                let rot = &patch.tiles[i].motion.rot;
                oriented.insert((
                    proto,
                    rot.c.coeffs.clone(),
                    rot.s.coeffs.clone(),
                    pattern,
                ));
            }
        }
        let counts: Vec<usize> = seen.iter().map(|m| m.len()).collect();
        if counts == last_counts && counts.iter().all(|&c| c > 0) {
            stable += 1;
            if stable >= 1 {
                return Ok(CoronaSet {
                    per_type: seen
                        .into_iter()
                        .map(|m| m.into_iter().collect())
                        .collect(),
                    per_orientation_count: oriented.len(),
                    stabilized_at_level: level,
                });
            }
        } else {
            stable = 0;
        }
        last_counts = counts;
    }
    Err(CoronaError::NotStabilized(
        budget,
        seen.iter().map(|m| m.len()).sum(),
    ))
}

/// A collared system: new prototiles are (base tile, corona) pairs carrying
/// the base polygon; the induced substitution reads each child's corona off
/// inside the substituted parent-plus-corona patch.
pub struct CollaredSystem {
    pub system: TilingSystem,
    /// collared type -> (base prototile, corona pattern)
    pub types: Vec<(usize, CoronaPattern)>,
    pub base_name: String,
}

#[derive(Debug, thiserror::Error)]
pub enum CollarError {
    #[error(transparent)]
    Corona(#[from] CoronaError),
    #[error("induced corona of a child is not interior (insufficient corona data)")]
    ChildNotInterior,
}

pub fn collar(sys: &TilingSystem, budget: usize) -> Result<CollaredSystem, CollarError> {
    let coronas = enumerate_coronas(sys, budget)?;
    // initial collared types
    let mut types: Vec<(usize, CoronaPattern)> = Vec::new();
    let mut index: HashMap<(usize, CoronaPattern), usize> = HashMap::new();
    let mut corona_tiles: Vec<Vec<PlacedTile>> = Vec::new();
    for (proto, list) in coronas.per_type.iter().enumerate() {
        for (pattern, placed) in list {
            let id = types.len();
            index.insert((proto, pattern.clone()), id);
            types.push((proto, pattern.clone()));
            corona_tiles.push(placed.clone());
        }
    }
    // induced substitution, extending the type set if induction surfaces a
    // corona the scan missed (children of legal patches are legal)
    let mut placements: Vec<Option<Vec<(usize, RigidMotion)>>> = vec![None; types.len()];
    let mut queue: Vec<usize> = (0..types.len()).collect();
    while let Some(ct) = queue.pop() {
        if placements[ct].is_some() {
            continue;
        }
        let (proto, _) = types[ct].clone();
        // patch: center tile at identity + its corona
        let mut tiles = vec![PlacedTile {
            proto,
            motion: RigidMotion::identity(&sys.field),
        }];
        tiles.extend(corona_tiles[ct].iter().cloned());
        let next = sys.substitute_patch(&tiles);
        let patch = crate::tiling::Patch::new(&sys.prototiles, next);
        // children of the center are the first placements of `proto`
        let n_children = sys.rule.placements[proto].len();
        let interior: HashSet<usize> = patch.interior_tiles().into_iter().collect();
        let mut kids = Vec::with_capacity(n_children);
        for child_idx in 0..n_children {
            if !interior.contains(&child_idx) {
                return Err(CollarError::ChildNotInterior);
            }
            let neighbors = corona_of(&patch, child_idx);
            let (pattern, placed) = canonical_corona(&patch, child_idx, &neighbors);
            let child_proto = patch.tiles[child_idx].proto;
            let key = (child_proto, pattern.clone());
            let id = match index.get(&key) {
                Some(&id) => id,
                None => {
                    let id = types.len();
                    index.insert(key, id);
                    types.push((child_proto, pattern));
                    corona_tiles.push(placed);
                    placements.push(None);
                    queue.push(id);
                    id
                }
            };
            kids.push((id, patch.tiles[child_idx].motion.clone()));
        }
        placements[ct] = Some(kids);
        // make sure everything reachable is processed
        if queue.is_empty() {
            if let Some(missing) = placements.iter().position(|p| p.is_none()) {
                queue.push(missing);
            }
        }
    }
    let prototiles: Vec<ProtoTile> = types
        .iter()
        .enumerate()
        .map(|(i, (proto, _))| ProtoTile {
            id: format!("{}#{}", sys.prototiles[*proto].id, i),
            polygon: sys.prototiles[*proto].polygon.clone(),
            edge_labels: sys.prototiles[*proto].edge_labels.clone(),
        })
        .collect();
    let system = TilingSystem {
        name: format!("{}_collared", sys.name),
        field: sys.field.clone(),
        prototiles,
        rule: SubstitutionRule {
            linear_factor: sys.rule.linear_factor.clone(),
            placements: placements.into_iter().map(|p| p.unwrap()).collect(),
        },
    };
    Ok(CollaredSystem {
        system,
        types,
        base_name: sys.name.clone(),
    })
}

#[derive(Debug, Clone, serde::Serialize)]
pub enum BorderForcing {
    Yes { level: usize },
    Undetermined { checked_up_to: usize },
}

/// Smallest N <= n_max with the level-0 surroundings of every level-N
/// supertile determined by its type. The scan runs over all harvested
/// coronas: the level-0 corona of phi^N(T) inside phi^N(T + corona).
pub fn forces_border(
    sys: &TilingSystem,
    n_max: usize,
    corona_budget: usize,
) -> Result<BorderForcing, CoronaError> {
    let coronas = enumerate_coronas(sys, corona_budget)?;
    for level in 1..=n_max {
        let mut forced = true;
        'types: for (proto, list) in coronas.per_type.iter().enumerate() {
            let mut patterns: HashSet<Vec<(usize, MotionKey)>> = HashSet::new();
            for (_, corona_placed) in list {
                // supertile of the center, level `level`, frame c^level T
                let center = sys.supertile(proto, level);
                let center_points: HashSet<Point> = center
                    .verts
                    .iter()
                    .flat_map(|vs| vs.iter().cloned())
                    .collect();
                // corona tiles, substituted `level` times
                let scale = sys.rule.linear_factor.pow(level);
                let mut halo: Vec<PlacedTile> = Vec::new();
                for pt in corona_placed {
                    let embedded = RigidMotion {
                        rot: pt.motion.rot.clone(),
                        reflect: pt.motion.reflect,
                        tr: pt.motion.tr.scale(&scale),
                    };
                    for sub in sys.supertile_placements(pt.proto, level) {
                        halo.push(PlacedTile {
                            proto: sub.proto,
                            motion: embedded.compose(&sub.motion),
                        });
                    }
                }
                // abutting tiles: halo tiles sharing a vertex with the center
                let mut pattern: Vec<(usize, MotionKey)> = halo
                    .iter()
                    .filter(|t| {
                        sys.prototiles[t.proto]
                            .polygon
                            .vertices
                            .iter()
                            .any(|v| center_points.contains(&t.motion.apply(v)))
                    })
                    .map(|t| (t.proto, motion_key(&t.motion)))
                    .collect();
                pattern.sort();
                patterns.insert(pattern);
                if patterns.len() > 1 {
                    forced = false;
                    break 'types;
                }
            }
        }
        if forced {
            return Ok(BorderForcing::Yes { level });
        }
    }
    Ok(BorderForcing::Undetermined {
        checked_up_to: n_max,
    })
}

/// Report both corona-count conventions for a system.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CoronaCounts {
    pub rotation_only: usize,
    pub with_orientations: usize,
    pub per_type: Vec<(String, usize)>,
    pub stabilized_at_level: usize,
}

pub fn corona_counts(sys: &TilingSystem, budget: usize) -> Result<CoronaCounts, CoronaError> {
    let c = enumerate_coronas(sys, budget)?;
    Ok(CoronaCounts {
        rotation_only: c.rotation_only_count(),
        with_orientations: c.per_orientation_count,
        per_type: sys
            .prototiles
            .iter()
            .zip(&c.per_type)
            .map(|(p, v)| (p.id.clone(), v.len()))
            .collect(),
        stabilized_at_level: c.stabilized_at_level,
    })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn square_lattice_single_corona() {
        // 2x2 dilation of a labeled unit square: one corona
        let sys = square_system();
        let c = enumerate_coronas(&sys, 8).unwrap();
        assert_eq!(c.rotation_only_count(), 1);
        let collared = collar(&sys, 8).unwrap();
        assert_eq!(collared.types.len(), 1);
        assert_eq!(collared.system.rule.placements[0].len(), 4);
    }

    pub fn square_system() -> TilingSystem {
        use crate::geom::{Point, Polygon, Rotor};
        let k = crate::algebra::NumberField::rationals();
        let pt = |x: i64, y: i64| Point::new(k.from_int(x), k.from_int(y));
        let sq = ProtoTile {
            id: "sq".into(),
            polygon: Polygon::new(vec![pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)]),
            edge_labels: vec!["b".into(), "r".into(), "t".into(), "l".into()],
        };
        let rot = Rotor::identity(&k);
        let placements = vec![vec![
            (0, RigidMotion::new(rot.clone(), pt(0, 0))),
            (0, RigidMotion::new(rot.clone(), pt(1, 0))),
            (0, RigidMotion::new(rot.clone(), pt(0, 1))),
            (0, RigidMotion::new(rot.clone(), pt(1, 1))),
        ]];
        TilingSystem {
            name: "square2x2".into(),
            field: k.clone(),
            prototiles: vec![sq],
            rule: SubstitutionRule {
                linear_factor: k.from_int(2),
                placements,
            },
        }
    }

    #[test]
    fn penrose_forces_border() {
        let sys = fixtures::penrose_triangles();
        match forces_border(&sys, 4, 8).unwrap() {
            BorderForcing::Yes { level } => assert_eq!(level, 3),
            BorderForcing::Undetermined { .. } => panic!("penrose forces the border"),
        }
    }

    #[test]
    fn chair_does_not_force_border_at_4() {
        let sys = fixtures::chair().split_edges().unwrap();
        match forces_border(&sys, 4, 8).unwrap() {
            BorderForcing::Yes { level } => panic!("chair should not force at {}", level),
            BorderForcing::Undetermined { checked_up_to } => assert_eq!(checked_up_to, 4),
        }
    }
}
