//! Perron eigenvalue and normalized left eigenvector of a primitive
//! integer matrix, in exact arithmetic over Q(lambda).
//!
//! lambda is the largest real root of the characteristic polynomial; the
//! left eigenvector is solved by column reduction over Q(lambda), cleared
//! to integer polynomial entries, and normalized: integer lambda divides
//! out the gcd of the entries, irrational lambda divides out the highest
//! power of lambda so entries land in Z[1/lambda].

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use super::algnum::AlgebraicNumber;
use super::factor::factor;
use super::field::{FieldElement, NumberField};
use super::matgen::{left_nullspace, FieldCtx, GMat};
use super::poly::ZPoly;
use super::primitive::is_primitive;
use super::snf::ZMat;

/// Q(lambda) as a field context for generic elimination.
pub struct KCtx(pub NumberField);

impl FieldCtx for KCtx {
    type El = FieldElement;
    fn zero(&self) -> FieldElement {
        self.0.zero()
    }
    fn one(&self) -> FieldElement {
        self.0.one()
    }
    fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a.add(b)
    }
    fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a.sub(b)
    }
    fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a.mul(b)
    }
    fn inv(&self, a: &FieldElement) -> FieldElement {
        a.inv()
    }
    fn is_zero(&self, a: &FieldElement) -> bool {
        a.is_zero()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum NormalizationCase {
    Integer,
    NonInteger,
}

#[derive(Clone)]
pub struct PerronData {
    /// The Perron eigenvalue.
    pub lambda: AlgebraicNumber,
    /// Q(lambda), with lambda as the designated real root.
    pub field: NumberField,
    /// Normalized left eigenvector of the input matrix, entries in Q(lambda).
    pub r: Vec<FieldElement>,
    /// Integer-polynomial form of r before the lambda-power scaling.
    pub r_int: Vec<ZPoly>,
    /// The power p in the 1/lambda^p scaling (0 in the integer case).
    pub lambda_power: usize,
    pub case: NormalizationCase,
}

impl std::fmt::Debug for PerronData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "PerronData {{ lambda: {:?}, case: {:?}, r: {} entries }}",
            self.lambda,
            self.case,
            self.r.len()
        )
    }
}

#[derive(Debug, thiserror::Error)]
pub enum PerronError {
    #[error("matrix is not primitive")]
    NotPrimitive,
    #[error("matrix has a negative entry")]
    NegativeEntry,
    #[error("Perron eigenvalue is not simple")]
    NotSimple,
    #[error("Perron eigenvalue does not dominate: {0}")]
    NotDominant(String),
    #[error("eigenvector has mixed signs (arithmetic bug)")]
    MixedSigns,
}

/// Full route: characteristic polynomial, factorization, dominance check.
/// Intended for matrices of desk scale (charpoly by interpolation).
pub fn perron_data(m: &ZMat) -> Result<PerronData, PerronError> {
    if !m.is_nonnegative() {
        return Err(PerronError::NegativeEntry);
    }
    if !is_primitive(m) {
        return Err(PerronError::NotPrimitive);
    }
    let cp = m.charpoly();
    let factors = factor(&cp);
    // lambda = max real root over all factors
    let mut best: Option<(AlgebraicNumber, ZPoly, usize)> = None;
    for (f, mult) in &factors {
        for (lo, hi) in f.isolate_real_roots() {
            let cand = AlgebraicNumber {
                min_poly: f.clone(),
                lo,
                hi,
            };
            best = match best {
                None => Some((cand, f.clone(), *mult)),
                Some((cur, cf, cm)) => {
                    if cand.cmp(&cur) == std::cmp::Ordering::Greater {
                        Some((cand, f.clone(), *mult))
                    } else {
                        Some((cur, cf, cm))
                    }
                }
            };
        }
    }
    let (lambda, lam_factor, mult) = best.expect("primitive matrix has a real eigenvalue");
    if mult != 1 {
        return Err(PerronError::NotSimple);
    }
    verify_dominance(&lambda, &cp, &lam_factor)?;
    finish(m, lambda)
}

/// Candidate route for large matrices: the caller supplies lambda (for a
/// collared system this is the uncollared eigenvalue); simplicity and the
/// eigen-equation are verified exactly, dominance follows from primitivity.
pub fn perron_data_with_lambda(
    m: &ZMat,
    lambda: AlgebraicNumber,
) -> Result<PerronData, PerronError> {
    if !m.is_nonnegative() {
        return Err(PerronError::NegativeEntry);
    }
    if !is_primitive(m) {
        return Err(PerronError::NotPrimitive);
    }
    finish(m, lambda)
}

fn finish(m: &ZMat, lambda: AlgebraicNumber) -> Result<PerronData, PerronError> {
    let n = m.rows;
    let monic = lambda
        .min_poly
        .is_monic()
        .then(|| lambda.min_poly.clone())
        .expect("Perron eigenvalue of an integer matrix is an algebraic integer");
    let field = NumberField::new(monic, lambda.lo.clone(), lambda.hi.clone())
        .expect("lambda minimal polynomial is irreducible");
    let lam = field.generator();
    let ctx = KCtx(field.clone());
    // A = lambda I - M over Q(lambda)
    let a = GMat::from_fn(n, n, |i, j| {
        let mij = field.from_rational(BigRational::from(m.get(i, j).clone()));
        if i == j {
            lam.sub(&mij)
        } else {
            mij.neg()
        }
    });
    let ns = left_nullspace(&ctx, &a);
    if ns.len() != 1 {
        return Err(PerronError::NotSimple);
    }
    let raw = ns.into_iter().next().unwrap();
    // clear rational denominators across all entries, then divide by content
    let mut lcm = BigInt::one();
    for e in &raw {
        for c in &e.coeffs {
            lcm = num::integer::lcm(lcm, c.denom().clone());
        }
    }
    let mut int_entries: Vec<ZPoly> = raw
        .iter()
        .map(|e| {
            ZPoly::new(
                e.coeffs
                    .iter()
                    .map(|c| (c * BigRational::from(lcm.clone())).to_integer())
                    .collect(),
            )
        })
        .collect();
    let mut content = BigInt::zero();
    for e in &int_entries {
        content = num::integer::gcd(content, e.content());
    }
    if !content.is_one() && !content.is_zero() {
        int_entries = int_entries
            .iter()
            .map(|e| ZPoly::new(e.coeffs.iter().map(|c| c / &content).collect()))
            .collect();
    }
    // sign-normalize: all entries must be positive under the embedding
    let as_field = |p: &ZPoly| -> FieldElement {
        let mut coeffs = vec![BigRational::zero(); field.degree()];
        for (i, c) in p.coeffs.iter().enumerate() {
            coeffs[i] = BigRational::from(c.clone());
        }
        field.element(coeffs)
    };
    let mut signs: Vec<i8> = int_entries.iter().map(|p| as_field(p).sign()).collect();
    if signs.iter().all(|&s| s <= 0) {
        int_entries = int_entries.iter().map(|p| p.neg()).collect();
        signs = signs.iter().map(|s| -s).collect();
    }
    if !signs.iter().all(|&s| s > 0) {
        return Err(PerronError::MixedSigns);
    }
    let (case, lambda_power) = if lambda.is_integer() {
        (NormalizationCase::Integer, 0usize)
    } else {
        let p = int_entries
            .iter()
            .map(|e| e.degree().unwrap_or(0))
            .max()
            .unwrap_or(0);
        (NormalizationCase::NonInteger, p)
    };
    // r = int_entries / lambda^p (identity when p = 0)
    let lam_inv_p = if lambda_power == 0 {
        field.one()
    } else {
        lam.pow(lambda_power).inv()
    };
    let r: Vec<FieldElement> = int_entries
        .iter()
        .map(|e| as_field(e).mul(&lam_inv_p))
        .collect();
    // post-hoc: r (lambda I - M) = 0 exactly
    for j in 0..n {
        let mut acc = field.zero();
        for i in 0..n {
            let mij = field.from_rational(BigRational::from(m.get(i, j).clone()));
            let aij = if i == j { lam.sub(&mij) } else { mij.neg() };
            acc = acc.add(&r[i].mul(&aij));
        }
        assert!(acc.is_zero(), "eigen equation violated");
    }
    Ok(PerronData {
        lambda,
        field,
        r,
        r_int: int_entries,
        lambda_power,
        case,
    })
}

/// lambda strictly exceeds the modulus of every other root of the
/// characteristic polynomial. Checked exactly: for each irreducible factor
/// g, all roots of g(lambda x) except possibly x = 1 must lie strictly
/// inside the unit disk (Schur-Cohn recursion over Q(lambda)).
fn verify_dominance(
    lambda: &AlgebraicNumber,
    charpoly: &ZPoly,
    lam_factor: &ZPoly,
) -> Result<(), PerronError> {
    let field = NumberField::new(
        lam_factor.clone(),
        lambda.lo.clone(),
        lambda.hi.clone(),
    )
    .expect("irreducible factor");
    let lam = field.generator();
    for (g, _) in factor(charpoly) {
        // h(x) = g(lambda x) over Q(lambda)
        let mut h: Vec<FieldElement> = g
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                lam.pow(i)
                    .scale(&BigRational::from(c.clone()))
            })
            .collect();
        if g == *lam_factor {
            // remove the root x = 1 by synthetic division
            h = deflate_at_one(&h, &field);
        }
        if !schur_stable(&h, &field) {
            return Err(PerronError::NotDominant(g.to_string()));
        }
    }
    Ok(())
}

/// Divide a K[x] polynomial by (x - 1); remainder must vanish.
fn deflate_at_one(h: &[FieldElement], field: &NumberField) -> Vec<FieldElement> {
    let n = h.len() - 1;
    let mut q = vec![field.zero(); n];
    let mut carry = field.zero();
    for i in (0..=n).rev() {
        let v = h[i].add(&carry);
        if i == 0 {
            assert!(v.is_zero(), "x=1 is not a root");
        } else {
            q[i - 1] = v.clone();
            carry = v;
        }
    }
    q
}

/// All roots strictly inside the unit disk (Schur-Cohn / Jury, exact signs).
fn schur_stable(h: &[FieldElement], field: &NumberField) -> bool {
    let mut h: Vec<FieldElement> = h.to_vec();
    while h.last().map_or(false, |c| c.is_zero()) {
        h.pop();
    }
    loop {
        let n = h.len();
        if n <= 1 {
            return true; // constants have no roots
        }
        let a0 = &h[0];
        let an = &h[n - 1];
        // need |a0| < |an|: an^2 - a0^2 > 0
        let diff = an.mul(an).sub(&a0.mul(a0));
        if diff.sign() <= 0 {
            return false;
        }
        // T[h](x) = (an*h - a0*h*) / x with h*(x) = reversed coefficients
        let mut next = Vec::with_capacity(n - 1);
        for i in 1..n {
            // coefficient of x^i in an*h - a0*h^rev, shifted down by one
            let v = an.mul(&h[i]).sub(&a0.mul(&h[n - 1 - i]));
            next.push(v);
        }
        while next.last().map_or(false, |c| c.is_zero()) {
            next.pop();
        }
        if next.is_empty() {
            // self-inversive leftover: roots on the unit circle
            return false;
        }
        h = next;
        let _ = field;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q::{q, qi};

    #[test]
    fn fibonacci_perron() {
        let m = ZMat::from_i64(2, 2, &[1, 1, 1, 0]);
        let p = perron_data(&m).unwrap();
        assert_eq!(p.lambda.min_poly, ZPoly::from_i64(&[-1, -1, 1]));
        assert_eq!(p.case, NormalizationCase::NonInteger);
        // r proportional to (lambda, 1): r0/r1 = lambda
        let ratio = p.r[0].div(&p.r[1]);
        assert_eq!(ratio, p.field.generator());
    }

    #[test]
    fn chair_scalar_four() {
        let m = ZMat::from_i64(1, 1, &[4]);
        let p = perron_data(&m).unwrap();
        assert_eq!(p.lambda.as_integer(), Some(num::BigInt::from(4)));
        assert_eq!(p.case, NormalizationCase::Integer);
        assert_eq!(p.r_int[0], ZPoly::one());
    }

    #[test]
    fn penrose_t1_perron() {
        // Penrose substitution on faces at t=1 (column = parent)
        let m = ZMat::from_i64(4, 4, &[1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 1, 1, 0, 1, 1, 1]);
        let p = perron_data(&m.transpose()).unwrap();
        assert_eq!(p.lambda.min_poly, ZPoly::from_i64(&[1, -3, 1]));
        // lambda = tau^2 ~ 2.618
        assert!(p.lambda.interval().lo > q(5, 2) || p.lambda.interval().hi > q(5, 2));
    }

    #[test]
    fn non_primitive_rejected() {
        let m = ZMat::from_i64(2, 2, &[0, 1, 1, 0]);
        assert!(matches!(
            perron_data(&m),
            Err(PerronError::NotPrimitive)
        ));
    }

    #[test]
    fn orthogonality_to_other_eigenvectors() {
        // Eq-7 style check on Fibonacci: r . w_i = 0 for the other eigenvector
        let m = ZMat::from_i64(2, 2, &[1, 1, 1, 0]);
        let p = perron_data(&m).unwrap();
        // other eigenvalue mu = 1 - lambda (conjugate); right eigenvector of M^T... here
        // w for eigenvalue mu of M satisfies (mu I - M) w = 0: w = (mu, 1) since M w = (mu+1, mu) = mu*(mu,1) iff mu^2=mu+1
        let lam = p.field.generator();
        let mu = p.field.one().sub(&lam); // the conjugate root of x^2-x-1
        let w = vec![mu.clone(), p.field.one()];
        let dot = p.r[0].mul(&w[0]).add(&p.r[1].mul(&w[1]));
        assert!(dot.is_zero());
        let _ = qi(0);
    }
}
