//! Real algebraic number fields Q[x]/(m(x)) with a designated real root.
//!
//! Elements are rational coordinate vectors over the power basis. Equality
//! is coefficient-wise; sign queries refine the generator's isolating
//! interval until the element's interval clears zero, which terminates for
//! every nonzero element because the embedding is injective.

use std::sync::{Arc, Mutex};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use super::factor::is_irreducible;
use super::poly::{QPoly, ZPoly};
use super::q::QInterval;

pub struct NumberFieldInner {
    pub min_poly: ZPoly,
    pub degree: usize,
    base_interval: (BigRational, BigRational),
    refined: Mutex<(BigRational, BigRational)>,
}

#[derive(Clone)]
pub struct NumberField(pub Arc<NumberFieldInner>);

impl std::fmt::Debug for NumberField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Q[x]/({})", self.0.min_poly)
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.min_poly == other.0.min_poly
                && self.0.base_interval == other.0.base_interval)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum FieldError {
    #[error("minimal polynomial must be monic, got {0}")]
    NotMonic(String),
    #[error("minimal polynomial is reducible: {0}")]
    Reducible(String),
    #[error("generator interval isolates {0} roots, expected exactly 1")]
    BadInterval(usize),
    #[error("interval endpoint is a root of the minimal polynomial")]
    EndpointRoot,
}

impl NumberField {
    pub fn new(
        min_poly: ZPoly,
        lo: BigRational,
        hi: BigRational,
    ) -> Result<NumberField, FieldError> {
        if !min_poly.is_monic() {
            return Err(FieldError::NotMonic(min_poly.to_string()));
        }
        let degree = min_poly.deg();
        if degree == 0 {
            return Err(FieldError::NotMonic(min_poly.to_string()));
        }
        if degree > 1 && !is_irreducible(&min_poly) {
            return Err(FieldError::Reducible(min_poly.to_string()));
        }
        if min_poly.eval_q(&lo).is_zero() || min_poly.eval_q(&hi).is_zero() {
            if !(degree == 1 && lo == hi) {
                return Err(FieldError::EndpointRoot);
            }
        }
        if degree > 1 {
            let count = min_poly.count_roots_in(&lo, &hi);
            if count != 1 {
                return Err(FieldError::BadInterval(count));
            }
        }
        Ok(NumberField(Arc::new(NumberFieldInner {
            min_poly,
            degree,
            base_interval: (lo.clone(), hi.clone()),
            refined: Mutex::new((lo, hi)),
        })))
    }

    /// The rational field as a degree-1 extension (min poly x).
    pub fn rationals() -> NumberField {
        NumberField::new(ZPoly::x(), BigRational::zero(), BigRational::zero()).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn base_interval(&self) -> (BigRational, BigRational) {
        self.0.base_interval.clone()
    }

    pub fn generator(&self) -> FieldElement {
        if self.0.degree == 1 {
            // x - a: generator is the rational a
            let a = -self.0.min_poly.coeff(0);
            return self.from_rational(BigRational::from(a));
        }
        let mut coeffs = vec![BigRational::zero(); self.0.degree];
        coeffs[1] = BigRational::one();
        FieldElement {
            field: self.clone(),
            coeffs,
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            coeffs: vec![BigRational::zero(); self.0.degree],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(BigRational::one())
    }

    pub fn from_rational(&self, q: BigRational) -> FieldElement {
        let mut coeffs = vec![BigRational::zero(); self.0.degree];
        coeffs[0] = q;
        FieldElement {
            field: self.clone(),
            coeffs,
        }
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        self.from_rational(BigRational::from(BigInt::from(n)))
    }

    pub fn element(&self, coeffs: Vec<BigRational>) -> FieldElement {
        assert_eq!(coeffs.len(), self.0.degree, "coefficient vector arity");
        FieldElement {
            field: self.clone(),
            coeffs,
        }
    }

    /// Current refined isolating interval for the generator.
    pub fn generator_interval(&self) -> QInterval {
        let g = self.0.refined.lock().unwrap();
        QInterval::new(g.0.clone(), g.1.clone())
    }

    /// Halve the generator interval (degree 1 is already a point).
    pub fn refine_generator(&self) {
        if self.0.degree == 1 {
            return;
        }
        let mut g = self.0.refined.lock().unwrap();
        let (lo, hi) = self.0.min_poly.refine_interval(&g.0, &g.1);
        *g = (lo, hi);
    }

    /// Reduce a rational polynomial mod the minimal polynomial to a vector.
    fn reduce(&self, p: &QPoly) -> Vec<BigRational> {
        let r = p.divrem(&self.0.min_poly.to_q()).1;
        let mut coeffs = vec![BigRational::zero(); self.0.degree];
        for (i, c) in r.coeffs.iter().enumerate() {
            coeffs[i] = c.clone();
        }
        coeffs
    }
}

#[derive(Clone)]
pub struct FieldElement {
    pub field: NumberField,
    pub coeffs: Vec<BigRational>,
}

impl std::fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn add(&self, o: &FieldElement) -> FieldElement {
        debug_assert!(self.field == o.field);
        FieldElement {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(o.coeffs.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, o: &FieldElement) -> FieldElement {
        debug_assert!(self.field == o.field);
        FieldElement {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(o.coeffs.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, o: &FieldElement) -> FieldElement {
        debug_assert!(self.field == o.field);
        let p = self.to_qpoly().mul(&o.to_qpoly());
        FieldElement {
            field: self.field.clone(),
            coeffs: self.field.reduce(&p),
        }
    }

    pub fn scale(&self, k: &BigRational) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| a * k).collect(),
        }
    }

    pub fn inv(&self) -> FieldElement {
        assert!(!self.is_zero(), "inverse of zero");
        let (g, s, _) = self.to_qpoly().ext_gcd(&self.field.0.min_poly.to_q());
        assert_eq!(g.degree(), Some(0), "element not invertible");
        let scale = BigRational::one() / g.coeff(0);
        FieldElement {
            field: self.field.clone(),
            coeffs: self.field.reduce(&s.scale(&scale)),
        }
    }

    pub fn div(&self, o: &FieldElement) -> FieldElement {
        self.mul(&o.inv())
    }

    pub fn pow(&self, e: usize) -> FieldElement {
        let mut acc = self.field.one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn to_qpoly(&self) -> QPoly {
        QPoly::new(self.coeffs.clone())
    }

    /// Rational enclosure under the designated real embedding.
    pub fn interval(&self) -> QInterval {
        let g = self.field.generator_interval();
        self.eval_on(&g)
    }

    fn eval_on(&self, g: &QInterval) -> QInterval {
        let mut acc = QInterval::point(BigRational::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&QInterval::point(c.clone()));
        }
        acc
    }

    /// Exact sign: -1, 0, +1. Terminates for all inputs.
    pub fn sign(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        if self.is_rational() {
            let c = &self.coeffs[0];
            return if c.is_negative() { -1 } else { 1 };
        }
        loop {
            let iv = self.interval();
            if let Some(s) = iv.sign() {
                if s != 0 {
                    return s;
                }
            }
            if !iv.contains_zero() {
                return if iv.lo.is_positive() { 1 } else { -1 };
            }
            self.field.refine_generator();
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    pub fn cmp_exact(&self, o: &FieldElement) -> std::cmp::Ordering {
        match self.sub(o).sign() {
            -1 => std::cmp::Ordering::Less,
            0 => std::cmp::Ordering::Equal,
            _ => std::cmp::Ordering::Greater,
        }
    }

    /// Numeric value for rendering; refined to roughly `digits` decimals.
    pub fn to_f64_approx(&self, digits: u32) -> f64 {
        if self.is_rational() {
            return super::q::rational_to_f64(&self.coeffs[0]);
        }
        let tol = BigRational::new(BigInt::one(), BigInt::from(10u32).pow(digits));
        loop {
            let iv = self.interval();
            if iv.width() < tol {
                return iv.to_f64();
            }
            self.field.refine_generator();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q::q;

    fn sqrt5_field() -> NumberField {
        NumberField::new(ZPoly::from_i64(&[-5, 0, 1]), q(2, 1), q(5, 2)).unwrap()
    }

    #[test]
    fn sqrt5_arithmetic() {
        let k = sqrt5_field();
        let s5 = k.generator();
        assert!(s5.mul(&s5).sub(&k.from_int(5)).is_zero());
        let inv = s5.inv();
        // 1/sqrt5 = sqrt5/5
        assert_eq!(inv, s5.scale(&q(1, 5)));
        assert!(s5.is_positive());
        assert!(s5.sub(&k.from_int(2)).is_positive());
        assert!(s5.sub(&k.from_int(3)).is_negative());
    }

    #[test]
    fn rationals_as_degree_one() {
        let k = NumberField::rationals();
        let a = k.from_rational(q(3, 4));
        let b = k.from_rational(q(1, 4));
        assert_eq!(a.add(&b), k.one());
        assert_eq!(a.sign(), 1);
    }

    #[test]
    fn reducible_rejected() {
        assert!(NumberField::new(ZPoly::from_i64(&[-1, 0, 1]), q(0, 1), q(2, 1)).is_err());
    }

    #[test]
    fn golden_ratio_signs() {
        // gamma = 2cos(pi/10), min poly x^4 - 5x^2 + 5, root in [15/8, 2]
        let k = NumberField::new(ZPoly::from_i64(&[5, 0, -5, 0, 1]), q(15, 8), q(2, 1)).unwrap();
        let g = k.generator();
        // tau = gamma^2 - 2 = golden ratio
        let tau = g.mul(&g).sub(&k.from_int(2));
        // tau^2 = tau + 1
        assert!(tau.mul(&tau).sub(&tau.add(&k.one())).is_zero());
        assert!(tau.sub(&k.from_int(1)).is_positive());
        assert!(tau.sub(&k.from_int(2)).is_negative());
        // sin36 = (g^3 - 3g)/2 is positive
        let s36 = g.pow(3).sub(&g.scale(&q(3, 1))).scale(&q(1, 2));
        assert!(s36.is_positive());
    }
}
