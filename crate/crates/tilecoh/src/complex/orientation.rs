//! The relative orientation group: rotations relating parallel same-type
//! tiles, harvested from supertiles and classified as finite cyclic or
//! infinite via the root-of-unity decision.

use std::collections::HashMap;

use num::rational::BigRational;

use crate::algebra::{unit_min_poly, unit_order, UnitOrder, ZPoly};
use crate::geom::Rotor;
use crate::tiling::TilingSystem;

#[derive(Clone)]
pub enum OrientationGroup {
    /// Cyclic of order n; `generator` rotates by the minimal positive angle.
    Finite { order: usize, generator: Rotor },
    /// Some relative rotation has infinite order; witness included.
    Infinite {
        witness: Rotor,
        witness_min_poly: ZPoly,
    },
}

impl std::fmt::Debug for OrientationGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OrientationGroup::Finite { order, .. } => write!(f, "Z_{}", order),
            OrientationGroup::Infinite {
                witness_min_poly, ..
            } => write!(f, "infinite (witness min poly {})", witness_min_poly),
        }
    }
}

impl OrientationGroup {
    pub fn order(&self) -> Option<usize> {
        match self {
            OrientationGroup::Finite { order, .. } => Some(*order),
            OrientationGroup::Infinite { .. } => None,
        }
    }
}

type RotKey = (Vec<BigRational>, Vec<BigRational>);

fn key(r: &Rotor) -> RotKey {
    (r.c.coeffs.clone(), r.s.coeffs.clone())
}

/// Rotations of tiles per type at each substitution level, composed
/// symbolically (no patches needed).
fn level_rotors(sys: &TilingSystem, levels: usize) -> Vec<Vec<Vec<Rotor>>> {
    let nt = sys.prototiles.len();
    let mut per_level: Vec<Vec<Vec<Rotor>>> = Vec::new();
    let mut cur: Vec<Vec<Rotor>> = vec![Vec::new(); nt];
    let mut seen: Vec<HashMap<RotKey, ()>> = vec![HashMap::new(); nt];
    for t in 0..nt {
        cur[t].push(Rotor::identity(&sys.field));
        seen[t].insert(key(&cur[t][0]), ());
    }
    per_level.push(cur.clone());
    for _ in 0..levels {
        let mut next: Vec<Vec<Rotor>> = vec![Vec::new(); nt];
        let mut nseen: Vec<HashMap<RotKey, ()>> = vec![HashMap::new(); nt];
        for parent in 0..nt {
            for r in &cur[parent] {
                for (child, g) in &sys.rule.placements[parent] {
                    let nr = r.compose(&g.rot);
                    if nseen[*child].insert(key(&nr), ()).is_none() {
                        next[*child].push(nr);
                    }
                }
            }
        }
        per_level.push(next.clone());
        cur = next;
    }
    per_level
}

/// Decide the relative orientation group by generating relative rotations
/// between same-type tiles of the same level, escalating levels until the
/// generated set stabilizes (or a non-root-of-unity generator appears).
pub fn orientation_group(sys: &TilingSystem) -> OrientationGroup {
    let max_levels = 8;
    let per_level = level_rotors(sys, max_levels);
    let mut group: HashMap<RotKey, Rotor> = HashMap::new();
    let id = Rotor::identity(&sys.field);
    group.insert(key(&id), id.clone());
    let mut stable_rounds = 0;
    for level in per_level.iter().skip(1) {
        let before = group.len();
        for rotors in level {
            for i in 0..rotors.len() {
                for j in (i + 1)..rotors.len() {
                    let rel = rotors[i].compose(&rotors[j].inverse());
                    if group.contains_key(&key(&rel)) {
                        continue;
                    }
                    match unit_order(&rel.c, &rel.s) {
                        UnitOrder::Infinite => {
                            let mp = unit_min_poly(&rel.c, &rel.s);
                            return OrientationGroup::Infinite {
                                witness: rel,
                                witness_min_poly: mp,
                            };
                        }
                        UnitOrder::Finite(_) => {
                            insert_closure(&mut group, rel);
                        }
                    }
                }
            }
        }
        if group.len() == before {
            stable_rounds += 1;
            if stable_rounds >= 2 {
                break;
            }
        } else {
            stable_rounds = 0;
        }
    }
    // finite cyclic: order = size, generator = minimal positive angle
    let order = group.len();
    let mut gens: Vec<Rotor> = group.values().cloned().collect();
    gens.sort_by(|a, b| {
        let (qa, ka) = a.angle_key();
        let (qb, kb) = b.angle_key();
        qa.cmp(&qb).then_with(|| ka.cmp_exact(&kb))
    });
    // gens[0] is the identity (angle 0); the generator is the next one,
    // except for the trivial group
    let generator = if order == 1 {
        gens[0].clone()
    } else {
        gens[1].clone()
    };
    OrientationGroup::Finite { order, generator }
}

fn insert_closure(group: &mut HashMap<RotKey, Rotor>, new: Rotor) {
    // abelian closure under multiplication and inverse
    let mut queue = vec![new];
    while let Some(r) = queue.pop() {
        if group.contains_key(&key(&r)) {
            continue;
        }
        let existing: Vec<Rotor> = group.values().cloned().collect();
        group.insert(key(&r), r.clone());
        queue.push(r.inverse());
        for e in existing {
            queue.push(e.compose(&r));
        }
    }
}

/// Discrete log table of a finite cyclic rotation group.
pub struct GroupTable {
    pub order: usize,
    pub generator: Rotor,
    pub elements: Vec<Rotor>,
    index: HashMap<RotKey, usize>,
}

impl GroupTable {
    pub fn new(order: usize, generator: Rotor) -> GroupTable {
        let mut elements = Vec::with_capacity(order);
        let mut index = HashMap::new();
        let mut cur = Rotor::identity(&generator.c.field);
        for e in 0..order {
            index.insert(key(&cur), e);
            elements.push(cur.clone());
            cur = cur.compose(&generator);
        }
        assert!(cur.is_identity(), "generator order mismatch");
        GroupTable {
            order,
            generator,
            elements,
            index,
        }
    }

    pub fn trivial(field: &crate::algebra::NumberField) -> GroupTable {
        GroupTable::new(1, Rotor::identity(field))
    }

    pub fn dlog(&self, r: &Rotor) -> Option<usize> {
        self.index.get(&key(r)).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn chair_is_z4() {
        let sys = fixtures::chair().split_edges().unwrap();
        let g = orientation_group(&sys);
        assert_eq!(g.order(), Some(4));
    }

    #[test]
    fn penrose_is_z10() {
        let sys = fixtures::penrose_triangles();
        let g = orientation_group(&sys);
        assert_eq!(g.order(), Some(10));
    }

    #[test]
    fn pinwheel_is_infinite() {
        let sys = fixtures::pinwheel().split_edges().unwrap();
        let g = orientation_group(&sys);
        assert!(g.order().is_none());
        if let OrientationGroup::Infinite {
            witness_min_poly, ..
        } = g
        {
            // relative rotations live in Q(i, sqrt5); degree divides 8 and
            // the witness is genuinely not a root of unity
            assert!(witness_min_poly.deg() >= 2);
        }
    }
}
