//! Real algebraic numbers as minimal polynomial + isolating interval,
//! number-field membership (Trager's norm method), and the root-of-unity
//! decision for exact unit complex numbers.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use super::factor::factor;
use super::field::{FieldElement, NumberField};
use super::matgen::{nullspace, GMat, QCtx};
use super::poly::{QPoly, ZPoly};
use super::q::{euler_phi, lagrange_interpolate, QInterval};

/// A real algebraic number: primitive irreducible integer polynomial with
/// positive leading coefficient plus an isolating interval for one real root.
#[derive(Clone)]
pub struct AlgebraicNumber {
    pub min_poly: ZPoly,
    pub lo: BigRational,
    pub hi: BigRational,
}

impl std::fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "AlgebraicNumber({} in [{}, {}])",
            self.min_poly, self.lo, self.hi
        )
    }
}

impl AlgebraicNumber {
    pub fn from_rational(q: &BigRational) -> AlgebraicNumber {
        // primitive form of denom*x - numer
        let p = ZPoly::new(vec![-q.numer().clone(), q.denom().clone()]);
        AlgebraicNumber {
            min_poly: p,
            lo: q.clone(),
            hi: q.clone(),
        }
    }

    pub fn from_integer(n: &BigInt) -> AlgebraicNumber {
        AlgebraicNumber::from_rational(&BigRational::from(n.clone()))
    }

    pub fn degree(&self) -> usize {
        self.min_poly.deg()
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(BigRational::new(
                -self.min_poly.coeff(0),
                self.min_poly.coeff(1),
            ))
        } else {
            None
        }
    }

    pub fn is_integer(&self) -> bool {
        self.as_rational().map_or(false, |q| q.denom().is_one())
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().and_then(|q| {
            if q.denom().is_one() {
                Some(q.numer().clone())
            } else {
                None
            }
        })
    }

    /// Minimal polynomial of a number-field element, found as the first
    /// linear dependency among its powers; the isolating interval comes from
    /// the element's own embedding.
    pub fn from_field_element(x: &FieldElement) -> AlgebraicNumber {
        if let Some(q) = x.as_rational() {
            return AlgebraicNumber::from_rational(&q);
        }
        let d = x.field.degree();
        // powers x^0 .. x^k as columns; find first k with a dependency
        let mut powers: Vec<FieldElement> = vec![x.field.one()];
        for i in 1..=d {
            let prev = powers[i - 1].clone();
            powers.push(prev.mul(x));
        }
        let mut min: Option<QPoly> = None;
        for k in 1..=d {
            // solve sum_{i<=k} c_i x^i = 0 with c_k = 1
            let m = GMat::from_fn(d, k + 1, |row, col| powers[col].coeffs[row].clone());
            let ns = nullspace(&QCtx, &m);
            if let Some(v) = ns.into_iter().find(|v| !v[k].is_zero()) {
                let scale = BigRational::one() / v[k].clone();
                let poly = QPoly::new(v.iter().map(|c| c * &scale).collect());
                min = Some(poly);
                break;
            }
        }
        let poly = min.expect("power dependency must exist").primitive_z();
        // isolate: refine x's interval until it fits exactly one root interval
        let roots = poly.isolate_real_roots();
        loop {
            let iv = x.interval();
            let hits: Vec<&(BigRational, BigRational)> = roots
                .iter()
                .filter(|(lo, hi)| !(iv.hi < *lo || iv.lo > *hi))
                .collect();
            if hits.len() == 1 {
                let (mut lo, mut hi) = hits[0].clone();
                // tighten with the element interval
                if iv.lo > lo {
                    lo = iv.lo.clone();
                }
                if iv.hi < hi {
                    hi = iv.hi.clone();
                }
                return AlgebraicNumber {
                    min_poly: poly,
                    lo,
                    hi,
                };
            }
            x.field.refine_generator();
        }
    }

    pub fn interval(&self) -> QInterval {
        QInterval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn refine(&mut self) {
        if self.lo == self.hi {
            return;
        }
        let (lo, hi) = self.min_poly.refine_interval(&self.lo, &self.hi);
        self.lo = lo;
        self.hi = hi;
    }

    /// Index of this number among the real roots of its own minimal
    /// polynomial, sorted increasingly. Terminates: the canonical isolating
    /// intervals are fixed with the root strictly interior, while this
    /// number's interval shrinks to the root under refinement.
    pub fn root_index(&self) -> usize {
        let canon = self.min_poly.isolate_real_roots();
        if canon.len() == 1 {
            return 0;
        }
        let mut me = self.clone();
        loop {
            let hits: Vec<usize> = canon
                .iter()
                .enumerate()
                .filter(|(_, (lo, hi))| me.lo >= *lo && me.hi <= *hi)
                .map(|(i, _)| i)
                .collect();
            if hits.len() == 1 {
                return hits[0];
            }
            me.refine();
        }
    }

    pub fn equals(&self, other: &AlgebraicNumber) -> bool {
        if self.min_poly != other.min_poly {
            return false;
        }
        self.root_index() == other.root_index()
    }

    pub fn cmp(&self, other: &AlgebraicNumber) -> std::cmp::Ordering {
        if self.equals(other) {
            return std::cmp::Ordering::Equal;
        }
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            if a.hi < b.lo {
                return std::cmp::Ordering::Less;
            }
            if b.hi < a.lo {
                return std::cmp::Ordering::Greater;
            }
            a.refine();
            b.refine();
        }
    }

    pub fn to_f64_approx(&self, digits: u32) -> f64 {
        let tol = BigRational::new(BigInt::one(), BigInt::from(10u32).pow(digits));
        let mut a = self.clone();
        while &a.hi - &a.lo > tol {
            a.refine();
        }
        a.interval().to_f64()
    }
}

/// Roots of g inside the number field K, by the resultant/norm method.
pub fn roots_in_field(g: &ZPoly, k: &NumberField) -> Vec<FieldElement> {
    if g.degree().unwrap_or(0) == 0 {
        return vec![];
    }
    if k.degree() == 1 {
        // rational roots come from the linear factors
        return factor(g)
            .into_iter()
            .filter(|(f, _)| f.deg() == 1)
            .map(|(f, _)| k.from_rational(BigRational::new(-f.coeff(0), f.coeff(1))))
            .collect();
    }
    let m = &k.0.min_poly;
    let g = g.squarefree_part();
    // find shift s with squarefree norm N(x) = Res_y(m(y), g(x - s y))
    for s in 1..50i64 {
        let norm = norm_resultant(&g, m, s);
        if norm.is_zero() {
            continue;
        }
        if !norm.is_squarefree() {
            continue;
        }
        let mut roots = Vec::new();
        for (f, _) in factor(&norm) {
            // factor of g over K: gcd(g(x), f(x + s*alpha)) in K[x]
            let shifted = compose_shift(&f, k, s);
            let gcd = gcd_over_field(&g.to_kpoly(k), &shifted, k);
            if gcd.len() == 2 {
                // monic linear: x + c => root = -c
                let c = gcd[0].clone();
                roots.push(c.neg());
            }
        }
        return roots;
    }
    panic!("no squarefree norm shift found");
}

trait ToKPoly {
    fn to_kpoly(&self, k: &NumberField) -> Vec<FieldElement>;
}

impl ToKPoly for ZPoly {
    fn to_kpoly(&self, k: &NumberField) -> Vec<FieldElement> {
        self.coeffs
            .iter()
            .map(|c| k.from_rational(BigRational::from(c.clone())))
            .collect()
    }
}

/// f(x + s*alpha) as a polynomial over K.
fn compose_shift(f: &ZPoly, k: &NumberField, s: i64) -> Vec<FieldElement> {
    let alpha = k.generator();
    let shift = alpha.scale(&BigRational::from(BigInt::from(s)));
    // Horner: result = f_n; result = result*(x + shift) + f_i
    let mut acc: Vec<FieldElement> = vec![];
    for c in f.coeffs.iter().rev() {
        // multiply acc by (x + shift)
        let mut next = vec![k.zero(); acc.len() + 1];
        for (i, a) in acc.iter().enumerate() {
            next[i + 1] = next[i + 1].add(a);
            next[i] = next[i].add(&a.mul(&shift));
        }
        if next.is_empty() {
            next = vec![k.zero()];
        }
        next[0] = next[0].add(&k.from_rational(BigRational::from(c.clone())));
        acc = next;
    }
    trim_kpoly(acc)
}

fn trim_kpoly(mut v: Vec<FieldElement>) -> Vec<FieldElement> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn divrem_over_field(
    a: &[FieldElement],
    b: &[FieldElement],
    k: &NumberField,
) -> (Vec<FieldElement>, Vec<FieldElement>) {
    let db = b.len() - 1;
    let binv = b[db].inv();
    let mut r: Vec<FieldElement> = a.to_vec();
    let mut q = vec![k.zero(); a.len().saturating_sub(db)];
    while r.len() >= db + 1 {
        let dr = r.len() - 1;
        let f = r[dr].mul(&binv);
        if !f.is_zero() {
            q[dr - db] = f.clone();
            for (i, c) in b.iter().enumerate() {
                let idx = dr - db + i;
                r[idx] = r[idx].sub(&f.mul(c));
            }
        }
        r.pop();
        r = trim_kpoly(r);
        if r.len() < db + 1 {
            break;
        }
    }
    (trim_kpoly(q), r)
}

/// Monic gcd over K[x]; polynomials as coefficient vectors (little-endian).
fn gcd_over_field(
    a: &[FieldElement],
    b: &[FieldElement],
    k: &NumberField,
) -> Vec<FieldElement> {
    let mut a = trim_kpoly(a.to_vec());
    let mut b = trim_kpoly(b.to_vec());
    while !b.is_empty() {
        let (_, r) = divrem_over_field(&a, &b, k);
        a = b;
        b = r;
    }
    if a.is_empty() {
        return a;
    }
    let inv = a.last().unwrap().inv();
    a.iter().map(|c| c.mul(&inv)).collect()
}

/// Res_y(m(y), g(x - s*y)) via evaluation at integer x and interpolation.
fn norm_resultant(g: &ZPoly, m: &ZPoly, s: i64) -> ZPoly {
    let deg_bound = g.deg() * m.deg();
    let mut points = Vec::with_capacity(deg_bound + 1);
    for x0 in 0..=(deg_bound as i64) {
        // g(x0 - s y) as poly in y
        let mut gy = ZPoly::zero();
        // expand via Horner in (x0 - s y)
        let lin = ZPoly::new(vec![BigInt::from(x0), BigInt::from(-s)]);
        for c in g.coeffs.iter().rev() {
            gy = gy.mul(&lin);
            gy = gy.add(&ZPoly::new(vec![c.clone()]));
        }
        let r = m.resultant(&gy);
        points.push((
            BigRational::from(BigInt::from(x0)),
            BigRational::from(r),
        ));
    }
    let p = lagrange_interpolate(&points);
    p.primitive_z()
}

/// Q(a) = Q(b) as subfields of R: both memberships checked explicitly.
pub fn field_equal(a: &AlgebraicNumber, b: &AlgebraicNumber) -> bool {
    if a.is_rational() || b.is_rational() {
        return a.is_rational() && b.is_rational();
    }
    if a.degree() != b.degree() {
        return false;
    }
    member_of(b, a) && member_of(a, b)
}

/// Is `target` an element of Q(me)? Exact, with the real embedding checked.
/// Membership is tested in the field of the monicized generator a*me, which
/// generates the same subfield of R.
fn member_of(target: &AlgebraicNumber, me: &AlgebraicNumber) -> bool {
    let Some(k) = member_field(me) else {
        return false;
    };
    let roots = roots_in_field(&target.min_poly, &k);
    // among the roots found inside K, one must equal target as a real number
    for r in roots {
        if real_equals(&r, target) {
            return true;
        }
    }
    false
}

/// min_poly may be non-monic for non-integral algebraic numbers; NumberField
/// wants monic, so rescale the root: if p(x) has lc a and root r, then
/// a^(n-1) p(x/a) is monic with root a*r. Membership in Q(r) = Q(a r).
fn monicize(p: &ZPoly) -> ZPoly {
    if p.is_monic() {
        return p.clone();
    }
    let n = p.deg();
    let a = p.lc().clone();
    let mut coeffs = Vec::with_capacity(n + 1);
    for (i, c) in p.coeffs.iter().enumerate() {
        if i == n {
            coeffs.push(BigInt::one());
        } else {
            coeffs.push(c * num::pow::pow(a.clone(), n - 1 - i));
        }
    }
    ZPoly::new(coeffs)
}

/// Does the field element equal the algebraic number as a real number?
/// If x is a root of target's (irreducible) min poly, match both against
/// the poly's fixed isolating intervals: same root index means equal.
fn real_equals(x: &FieldElement, target: &AlgebraicNumber) -> bool {
    let k = &x.field;
    let mut acc = k.zero();
    for c in target.min_poly.coeffs.iter().rev() {
        acc = acc.mul(x);
        acc = acc.add(&k.from_rational(BigRational::from(c.clone())));
    }
    if !acc.is_zero() {
        return false;
    }
    let canon = target.min_poly.isolate_real_roots();
    let x_index = loop {
        let xi = x.interval();
        let hits: Vec<usize> = canon
            .iter()
            .enumerate()
            .filter(|(_, (lo, hi))| xi.lo >= *lo && xi.hi <= *hi)
            .map(|(i, _)| i)
            .collect();
        if hits.len() == 1 {
            break hits[0];
        }
        k.refine_generator();
    };
    x_index == target.root_index()
}

/// NumberField wants a monic min poly; membership test goes through the
/// monicized generator. But `me.lo/hi` bound the original root r, while the
/// monic poly's root is a*r; adjust the interval accordingly.
/// (Wrapper that handles the scaling.)
pub fn member_field(me: &AlgebraicNumber) -> Option<NumberField> {
    if me.min_poly.is_monic() {
        return NumberField::new(me.min_poly.clone(), me.lo.clone(), me.hi.clone()).ok();
    }
    let a = BigRational::from(me.min_poly.lc().clone());
    let m = monicize(&me.min_poly);
    let (mut lo, mut hi) = (&me.lo * &a, &me.hi * &a);
    if lo > hi {
        std::mem::swap(&mut lo, &mut hi);
    }
    NumberField::new(m, lo, hi).ok()
}

/// Root-of-unity decision for an exact point on the unit circle given as
/// (cos, sin) in a real field K. The candidate orders k are exactly those
/// with phi(k) <= [K(i):Q] = 2 deg(K); all are tested by exact powering.
pub enum UnitOrder {
    Finite(usize),
    Infinite,
}

pub fn unit_order(re: &FieldElement, im: &FieldElement) -> UnitOrder {
    let k = &re.field;
    let norm = re.mul(re).add(&im.mul(im));
    assert!(
        norm.sub(&k.one()).is_zero(),
        "unit_order requires |z| = 1 exactly"
    );
    let bound = 2 * k.degree() as u64;
    // all k with phi(k) <= bound lie below 2*bound^2 + 1
    let search = 2 * bound * bound + 1;
    let mut candidates: Vec<u64> = (1..=search).filter(|&n| euler_phi(n) <= bound).collect();
    candidates.sort();
    for n in candidates {
        // z^n == 1?
        let (mut cr, mut ci) = (k.one(), k.zero());
        for _ in 0..n {
            let nr = cr.mul(re).sub(&ci.mul(im));
            let ni = cr.mul(im).add(&ci.mul(re));
            cr = nr;
            ci = ni;
        }
        if cr.sub(&k.one()).is_zero() && ci.is_zero() {
            return UnitOrder::Finite(n as usize);
        }
    }
    UnitOrder::Infinite
}

/// Minimal polynomial over Q of z = re + i*im, via the first linear
/// dependency among powers of z in the 2d-dimensional algebra K + iK.
pub fn unit_min_poly(re: &FieldElement, im: &FieldElement) -> ZPoly {
    let k = &re.field;
    let d = k.degree();
    let dim = 2 * d;
    let mut powers: Vec<(FieldElement, FieldElement)> = vec![(k.one(), k.zero())];
    for i in 1..=dim {
        let (pr, pi) = powers[i - 1].clone();
        let nr = pr.mul(re).sub(&pi.mul(im));
        let ni = pr.mul(im).add(&pi.mul(re));
        powers.push((nr, ni));
    }
    for deg in 1..=dim {
        let m = GMat::from_fn(dim, deg + 1, |row, col| {
            let (pr, pi) = &powers[col];
            if row < d {
                pr.coeffs[row].clone()
            } else {
                pi.coeffs[row - d].clone()
            }
        });
        let ns = nullspace(&QCtx, &m);
        if let Some(v) = ns.into_iter().find(|v| !v[deg].is_zero()) {
            let scale = BigRational::one() / v[deg].clone();
            return QPoly::new(v.iter().map(|c| c * &scale).collect()).primitive_z();
        }
    }
    unreachable!("powers of an algebraic number must be dependent");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q::q;

    #[test]
    fn tau_squared_field_equals_sqrt5() {
        // tau^2 = (3+sqrt5)/2, min poly x^2-3x+1, interval [5/2, 3]
        let tau2 = AlgebraicNumber {
            min_poly: ZPoly::from_i64(&[1, -3, 1]),
            lo: q(5, 2),
            hi: q(3, 1),
        };
        let sqrt5 = AlgebraicNumber {
            min_poly: ZPoly::from_i64(&[-5, 0, 1]),
            lo: q(2, 1),
            hi: q(5, 2),
        };
        assert!(field_equal(&tau2, &sqrt5));
        assert!(field_equal(&tau2, &tau2));
    }

    #[test]
    fn sqrt2_vs_sqrt3() {
        let s2 = AlgebraicNumber {
            min_poly: ZPoly::from_i64(&[-2, 0, 1]),
            lo: q(1, 1),
            hi: q(3, 2),
        };
        let s3 = AlgebraicNumber {
            min_poly: ZPoly::from_i64(&[-3, 0, 1]),
            lo: q(3, 2),
            hi: q(2, 1),
        };
        assert!(!field_equal(&s2, &s3));
    }

    #[test]
    fn embedding_matters() {
        // sqrt5 vs -sqrt5: same min poly, different real numbers; but the
        // FIELDS Q(sqrt5) and Q(-sqrt5) coincide, so field_equal is true.
        let plus = AlgebraicNumber {
            min_poly: ZPoly::from_i64(&[-5, 0, 1]),
            lo: q(2, 1),
            hi: q(5, 2),
        };
        let minus = AlgebraicNumber {
            min_poly: ZPoly::from_i64(&[-5, 0, 1]),
            lo: q(-5, 2),
            hi: q(-2, 1),
        };
        assert!(field_equal(&plus, &minus));
        assert!(!plus.equals(&minus));
    }

    #[test]
    fn root_of_unity_zeta10_and_minus_one() {
        // zeta10 = (cos36, sin36) over Q(gamma), gamma = 2cos18
        let k = NumberField::new(ZPoly::from_i64(&[5, 0, -5, 0, 1]), q(15, 8), q(2, 1)).unwrap();
        let g = k.generator();
        let c36 = g.mul(&g).sub(&k.from_int(2)).scale(&q(1, 2));
        let s36 = g.pow(3).sub(&g.scale(&q(3, 1))).scale(&q(1, 2));
        match unit_order(&c36, &s36) {
            UnitOrder::Finite(n) => assert_eq!(n, 10),
            UnitOrder::Infinite => panic!("zeta10 must have order 10"),
        }
        let m1 = k.from_int(-1);
        let z = k.zero();
        match unit_order(&m1, &z) {
            UnitOrder::Finite(n) => assert_eq!(n, 2),
            UnitOrder::Infinite => panic!(),
        }
    }

    #[test]
    fn pinwheel_rotation_not_root_of_unity() {
        // z = (2+i)/sqrt5: re = 2/sqrt5, im = 1/sqrt5 over Q(sqrt5)
        let k = NumberField::new(ZPoly::from_i64(&[-5, 0, 1]), q(2, 1), q(5, 2)).unwrap();
        let s5 = k.generator();
        let re = s5.scale(&q(2, 5));
        let im = s5.scale(&q(1, 5));
        assert!(matches!(unit_order(&re, &im), UnitOrder::Infinite));
        // exact minimal polynomial: 5x^4 - 6x^2 + 5
        assert_eq!(unit_min_poly(&re, &im), ZPoly::from_i64(&[5, 0, -6, 0, 5]));
    }

    #[test]
    fn min_poly_from_field_element() {
        let k = NumberField::new(ZPoly::from_i64(&[5, 0, -5, 0, 1]), q(15, 8), q(2, 1)).unwrap();
        let g = k.generator();
        let tau = g.mul(&g).sub(&k.from_int(2));
        let a = AlgebraicNumber::from_field_element(&tau);
        assert_eq!(a.min_poly, ZPoly::from_i64(&[-1, -1, 1]));
        let tau2 = tau.mul(&tau);
        let a2 = AlgebraicNumber::from_field_element(&tau2);
        assert_eq!(a2.min_poly, ZPoly::from_i64(&[1, -3, 1]));
    }
}
