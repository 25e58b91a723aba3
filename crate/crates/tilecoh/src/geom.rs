//! Exact planar geometry over a real number field: points, unit rotations,
//! rigid motions, and the predicates the tiling machinery relies on.
//! Every test here is decided exactly; no epsilons anywhere.

use num::rational::BigRational;

use crate::algebra::{FieldElement, NumberField};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: FieldElement,
    pub y: FieldElement,
}

impl std::fmt::Debug for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:?}, {:?})", self.x, self.y)
    }
}

impl Point {
    pub fn new(x: FieldElement, y: FieldElement) -> Self {
        Point { x, y }
    }

    pub fn origin(field: &NumberField) -> Self {
        Point::new(field.zero(), field.zero())
    }

    pub fn add(&self, o: &Point) -> Point {
        Point::new(self.x.add(&o.x), self.y.add(&o.y))
    }

    pub fn sub(&self, o: &Point) -> Point {
        Point::new(self.x.sub(&o.x), self.y.sub(&o.y))
    }

    pub fn neg(&self) -> Point {
        Point::new(self.x.neg(), self.y.neg())
    }

    pub fn scale(&self, k: &FieldElement) -> Point {
        Point::new(self.x.mul(k), self.y.mul(k))
    }

    pub fn conj(&self) -> Point {
        Point::new(self.x.clone(), self.y.neg())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn norm_sq(&self) -> FieldElement {
        self.x.mul(&self.x).add(&self.y.mul(&self.y))
    }

    /// cross(self, o) = x*o.y - y*o.x
    pub fn cross(&self, o: &Point) -> FieldElement {
        self.x.mul(&o.y).sub(&self.y.mul(&o.x))
    }

    pub fn dot(&self, o: &Point) -> FieldElement {
        self.x.mul(&o.x).add(&self.y.mul(&o.y))
    }

    pub fn to_f64(&self, digits: u32) -> (f64, f64) {
        (self.x.to_f64_approx(digits), self.y.to_f64_approx(digits))
    }
}

/// Unit rotation stored as (cos, sin); the norm equation holds in the field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rotor {
    pub c: FieldElement,
    pub s: FieldElement,
}

impl std::fmt::Debug for Rotor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "rot({:?}, {:?})", self.c, self.s)
    }
}

impl Rotor {
    pub fn new(c: FieldElement, s: FieldElement) -> Self {
        let r = Rotor { c, s };
        debug_assert!(r.is_unit());
        r
    }

    pub fn identity(field: &NumberField) -> Self {
        Rotor {
            c: field.one(),
            s: field.zero(),
        }
    }

    pub fn is_unit(&self) -> bool {
        let n = self.c.mul(&self.c).add(&self.s.mul(&self.s));
        n.sub(&self.c.field.one()).is_zero()
    }

    pub fn is_identity(&self) -> bool {
        self.s.is_zero() && self.c.sub(&self.c.field.one()).is_zero()
    }

    pub fn compose(&self, o: &Rotor) -> Rotor {
        Rotor {
            c: self.c.mul(&o.c).sub(&self.s.mul(&o.s)),
            s: self.s.mul(&o.c).add(&self.c.mul(&o.s)),
        }
    }

    pub fn inverse(&self) -> Rotor {
        Rotor {
            c: self.c.clone(),
            s: self.s.neg(),
        }
    }

    pub fn conj(&self) -> Rotor {
        self.inverse()
    }

    pub fn apply(&self, p: &Point) -> Point {
        Point::new(
            self.c.mul(&p.x).sub(&self.s.mul(&p.y)),
            self.s.mul(&p.x).add(&self.c.mul(&p.y)),
        )
    }

    pub fn pow(&self, e: usize) -> Rotor {
        let mut acc = Rotor::identity(&self.c.field);
        for _ in 0..e {
            acc = acc.compose(self);
        }
        acc
    }

    /// Total order on the circle by angle in [0, 2pi); exact. Compare the
    /// returned keys lexicographically with `cmp_exact` on the second part.
    pub fn angle_key(&self) -> (u8, FieldElement) {
        let cs = self.c.sign();
        let ss = self.s.sign();
        // half 0: angle in [0, pi) (s > 0, or s = 0 and c > 0);
        // half 1: angle in [pi, 2pi)
        let half = match (ss, cs) {
            (1, _) | (0, 1) => 0u8,
            (-1, _) | (0, -1) => 1u8,
            _ => unreachable!("zero rotor"),
        };
        // within a half-circle the angle increases as cos decreases (half 0)
        // or increases (half 1)
        let key = if half == 0 { self.c.neg() } else { self.c.clone() };
        (half, key)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RigidMotion {
    pub rot: Rotor,
    pub reflect: bool,
    pub tr: Point,
}

impl std::fmt::Debug for RigidMotion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "motion({:?}{} + {:?})",
            self.rot,
            if self.reflect { " refl" } else { "" },
            self.tr
        )
    }
}

impl RigidMotion {
    pub fn identity(field: &NumberField) -> Self {
        RigidMotion {
            rot: Rotor::identity(field),
            reflect: false,
            tr: Point::origin(field),
        }
    }

    pub fn new(rot: Rotor, tr: Point) -> Self {
        RigidMotion {
            rot,
            reflect: false,
            tr,
        }
    }

    /// p -> rot * (reflect? conj(p) : p) + tr
    pub fn apply(&self, p: &Point) -> Point {
        let q = if self.reflect { p.conj() } else { p.clone() };
        self.rot.apply(&q).add(&self.tr)
    }

    /// self o other (apply other first).
    pub fn compose(&self, other: &RigidMotion) -> RigidMotion {
        if self.reflect || other.reflect {
            // rot_a * conj^a (rot_b * conj^b p + t_b) + t_a
            let rot = if self.reflect {
                self.rot.compose(&other.rot.conj())
            } else {
                self.rot.compose(&other.rot)
            };
            let tb = if self.reflect {
                other.tr.conj()
            } else {
                other.tr.clone()
            };
            RigidMotion {
                rot,
                reflect: self.reflect != other.reflect,
                tr: self.rot.apply(&tb).add(&self.tr),
            }
        } else {
            RigidMotion {
                rot: self.rot.compose(&other.rot),
                reflect: false,
                tr: self.rot.apply(&other.tr).add(&self.tr),
            }
        }
    }

    pub fn inverse(&self) -> RigidMotion {
        assert!(!self.reflect, "inverse of reflecting motion not needed");
        let rinv = self.rot.inverse();
        RigidMotion {
            rot: rinv.clone(),
            reflect: false,
            tr: rinv.apply(&self.tr).neg(),
        }
    }

    /// Scale the translation part (embedding a level-k placement in level k+1).
    pub fn scale_translation(&self, c: &FieldElement) -> RigidMotion {
        RigidMotion {
            rot: self.rot.clone(),
            reflect: self.reflect,
            tr: self.tr.scale(c),
        }
    }
}

/// Orientation of the triangle (a, b, c): +1 counterclockwise, 0 collinear.
pub fn orient(a: &Point, b: &Point, c: &Point) -> i8 {
    b.sub(a).cross(&c.sub(a)).sign()
}

/// Is q strictly inside the open segment (a, b)?
pub fn strictly_between(a: &Point, b: &Point, q: &Point) -> bool {
    if orient(a, b, q) != 0 {
        return false;
    }
    let d = b.sub(a);
    let t = q.sub(a).dot(&d);
    t.is_positive() && t.cmp_exact(&d.norm_sq()) == std::cmp::Ordering::Less
}

/// Is q on the closed segment [a, b]?
pub fn on_segment(a: &Point, b: &Point, q: &Point) -> bool {
    if orient(a, b, q) != 0 {
        return false;
    }
    let d = b.sub(a);
    let t = q.sub(a).dot(&d);
    !t.is_negative() && t.cmp_exact(&d.norm_sq()) != std::cmp::Ordering::Greater
}

/// Do the open segments (a,b) and (c,d) intersect in a single interior
/// crossing point? (Shared endpoints and collinear overlap are not "proper".)
pub fn segments_cross_properly(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 && o1 != o2 && o3 != o4
}

/// Collinear segments sharing more than a point: the partial-overlap test
/// behind the full-edge-to-full-edge condition.
pub fn collinear_overlap(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    if orient(a, b, c) != 0 || orient(a, b, d) != 0 {
        return false;
    }
    // project on direction of ab
    let dir = b.sub(a);
    let ta = a.dot(&dir);
    let tb = b.dot(&dir);
    let tc = c.dot(&dir);
    let td = d.dot(&dir);
    let (lo1, hi1) = sort2(&ta, &tb);
    let (lo2, hi2) = sort2(&tc, &td);
    // overlap length > 0: max(lo) < min(hi)
    let lo = if lo1.cmp_exact(lo2) == std::cmp::Ordering::Greater {
        lo1
    } else {
        lo2
    };
    let hi = if hi1.cmp_exact(hi2) == std::cmp::Ordering::Less {
        hi1
    } else {
        hi2
    };
    lo.cmp_exact(hi) == std::cmp::Ordering::Less
}

fn sort2<'a>(a: &'a FieldElement, b: &'a FieldElement) -> (&'a FieldElement, &'a FieldElement) {
    if a.cmp_exact(b) == std::cmp::Ordering::Greater {
        (b, a)
    } else {
        (a, b)
    }
}

/// Simple polygon as a cyclic vertex list.
#[derive(Clone, PartialEq, Eq)]
pub struct Polygon {
    pub vertices: Vec<Point>,
}

impl std::fmt::Debug for Polygon {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Polygon[{} vertices]", self.vertices.len())
    }
}

impl Polygon {
    pub fn new(vertices: Vec<Point>) -> Self {
        Polygon { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edge(&self, i: usize) -> (&Point, &Point) {
        let n = self.vertices.len();
        (&self.vertices[i], &self.vertices[(i + 1) % n])
    }

    /// Signed area times 2 (shoelace).
    pub fn double_area(&self) -> FieldElement {
        let field = &self.vertices[0].x.field;
        let mut acc = field.zero();
        let n = self.vertices.len();
        for i in 0..n {
            let a = &self.vertices[i];
            let b = &self.vertices[(i + 1) % n];
            acc = acc.add(&a.cross(b));
        }
        acc
    }

    pub fn area(&self) -> FieldElement {
        self.double_area()
            .scale(&BigRational::new(1.into(), 2.into()))
    }

    pub fn is_positively_oriented(&self) -> bool {
        self.double_area().is_positive()
    }

    /// No two non-adjacent edges touch; adjacent edges share only the vertex.
    pub fn is_simple(&self) -> bool {
        let n = self.vertices.len();
        if n < 3 {
            return false;
        }
        // degenerate edges or repeated vertices
        for i in 0..n {
            for j in i + 1..n {
                if self.vertices[i] == self.vertices[j] {
                    return false;
                }
            }
        }
        for i in 0..n {
            let (a, b) = self.edge(i);
            // vertex of another edge strictly inside this edge
            for (j, v) in self.vertices.iter().enumerate() {
                if j != i && j != (i + 1) % n && strictly_between(a, b, v) {
                    return false;
                }
            }
            for j in i + 1..n {
                if j == i || (j + 1) % n == i || (i + 1) % n == j {
                    continue;
                }
                let (c, d) = self.edge(j);
                if segments_cross_properly(a, b, c, d) || collinear_overlap(a, b, c, d) {
                    return false;
                }
            }
        }
        true
    }

    /// Strict interior test by crossing number; q must not lie on the boundary.
    pub fn contains_interior(&self, q: &Point) -> bool {
        let n = self.vertices.len();
        for i in 0..n {
            let (a, b) = self.edge(i);
            if on_segment(a, b, q) {
                return false;
            }
        }
        // crossing number with a ray in an exact generic direction: instead of
        // a random ray, count crossings of the vertical upward ray with
        // symbolic tie-break on vertices (count edge if exactly one endpoint
        // is strictly left of q.x).
        // half-open convention: edge counted iff a.x <= q.x < b.x or
        // b.x <= q.x < a.x, so vertices on the vertical line count once
        let mut crossings = 0;
        for i in 0..n {
            let (a, b) = self.edge(i);
            use std::cmp::Ordering::*;
            let ax = a.x.cmp_exact(&q.x);
            let bx = b.x.cmp_exact(&q.x);
            let rightward = matches!(ax, Less | Equal) && bx == Greater;
            let leftward = matches!(bx, Less | Equal) && ax == Greater;
            if !(rightward || leftward) {
                continue;
            }
            let o = orient(a, b, q);
            let upward = if rightward { o < 0 } else { o > 0 };
            if upward {
                crossings += 1;
            }
        }
        crossings % 2 == 1
    }

    pub fn apply(&self, m: &RigidMotion) -> Polygon {
        let mut verts: Vec<Point> = self.vertices.iter().map(|p| m.apply(p)).collect();
        if m.reflect {
            verts.reverse();
        }
        Polygon::new(verts)
    }

    pub fn scale(&self, c: &FieldElement) -> Polygon {
        Polygon::new(self.vertices.iter().map(|p| p.scale(c)).collect())
    }

    /// Rational bounding box from the current interval precision.
    pub fn bbox(&self) -> (BigRational, BigRational, BigRational, BigRational) {
        let mut xlo: Option<BigRational> = None;
        let mut xhi: Option<BigRational> = None;
        let mut ylo: Option<BigRational> = None;
        let mut yhi: Option<BigRational> = None;
        for p in &self.vertices {
            let xi = p.x.interval();
            let yi = p.y.interval();
            xlo = Some(match xlo {
                None => xi.lo.clone(),
                Some(v) => v.min(xi.lo.clone()),
            });
            xhi = Some(match xhi {
                None => xi.hi.clone(),
                Some(v) => v.max(xi.hi.clone()),
            });
            ylo = Some(match ylo {
                None => yi.lo.clone(),
                Some(v) => v.min(yi.lo.clone()),
            });
            yhi = Some(match yhi {
                None => yi.hi.clone(),
                Some(v) => v.max(yi.hi.clone()),
            });
        }
        (xlo.unwrap(), xhi.unwrap(), ylo.unwrap(), yhi.unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::ZPoly;
    use crate::algebra::q::q;

    fn rationals() -> NumberField {
        NumberField::rationals()
    }

    fn pt(k: &NumberField, x: i64, y: i64) -> Point {
        Point::new(k.from_int(x), k.from_int(y))
    }

    #[test]
    fn rotor_compose_and_apply() {
        let k = rationals();
        let r90 = Rotor::new(k.from_int(0), k.from_int(1));
        let p = pt(&k, 1, 0);
        assert_eq!(r90.apply(&p), pt(&k, 0, 1));
        let r180 = r90.compose(&r90);
        assert_eq!(r180.apply(&p), pt(&k, -1, 0));
        assert!(r90.compose(&r90.inverse()).is_identity());
    }

    #[test]
    fn motion_compose_associates_with_apply() {
        let k = rationals();
        let m1 = RigidMotion::new(Rotor::new(k.from_int(0), k.from_int(1)), pt(&k, 2, 3));
        let m2 = RigidMotion::new(Rotor::new(k.from_int(-1), k.from_int(0)), pt(&k, -1, 1));
        let p = pt(&k, 5, 7);
        assert_eq!(m1.apply(&m2.apply(&p)), m1.compose(&m2).apply(&p));
        let inv = m1.inverse();
        assert_eq!(inv.apply(&m1.apply(&p)), p);
    }

    #[test]
    fn lshape_area_and_simplicity() {
        let k = rationals();
        let poly = Polygon::new(vec![
            pt(&k, 0, 0),
            pt(&k, 2, 0),
            pt(&k, 2, 1),
            pt(&k, 1, 1),
            pt(&k, 1, 2),
            pt(&k, 0, 2),
        ]);
        assert!(poly.is_simple());
        assert!(poly.is_positively_oriented());
        assert_eq!(poly.area(), k.from_int(3));
        assert!(poly.contains_interior(&Point::new(
            k.from_rational(q(1, 2)),
            k.from_rational(q(1, 2))
        )));
        assert!(!poly.contains_interior(&Point::new(
            k.from_rational(q(3, 2)),
            k.from_rational(q(3, 2))
        )));
        assert!(!poly.contains_interior(&pt(&k, 1, 1))); // boundary vertex
    }

    #[test]
    fn overlap_predicates() {
        let k = rationals();
        let a = pt(&k, 0, 0);
        let b = pt(&k, 2, 0);
        let c = pt(&k, 1, 0);
        let d = pt(&k, 3, 0);
        assert!(collinear_overlap(&a, &b, &c, &d));
        let e = pt(&k, 2, 0);
        let f = pt(&k, 3, 0);
        assert!(!collinear_overlap(&a, &b, &e, &f)); // share only a point
        assert!(strictly_between(&a, &b, &c));
        assert!(!strictly_between(&a, &b, &b));
    }

    #[test]
    fn pinwheel_triangle_in_sqrt5() {
        let k = NumberField::new(ZPoly::from_i64(&[-5, 0, 1]), q(2, 1), q(5, 2)).unwrap();
        let tri = Polygon::new(vec![
            Point::origin(&k),
            Point::new(k.from_int(2), k.zero()),
            Point::new(k.from_int(2), k.one()),
        ]);
        assert!(tri.is_simple());
        assert_eq!(tri.area(), k.one());
        // rotate by alpha = atan(1/2): rotor (2/sqrt5, 1/sqrt5)
        let s5 = k.generator();
        let rot = Rotor::new(s5.scale(&q(2, 5)), s5.scale(&q(1, 5)));
        assert!(rot.is_unit());
        let rotated = tri.apply(&RigidMotion::new(rot, Point::origin(&k)));
        assert_eq!(rotated.area(), k.one());
    }
}
