//! Dense univariate polynomials over Z and Q.
//!
//! Coefficients are stored little-endian (index = power). `ZPoly` is the
//! canonical integer form used for minimal polynomials and factorization;
//! `QPoly` carries the rational arithmetic (division, extended gcd, Sturm
//! sequences) that exact sign determination and field inversion need.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use super::q::QInterval;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZPoly {
    pub coeffs: Vec<BigInt>,
}

impl std::fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self)
    }
}

impl std::fmt::Display for ZPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{}", a)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", a)?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{}", i)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn zero() -> Self {
        ZPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        ZPoly::new(vec![BigInt::one()])
    }

    pub fn x() -> Self {
        ZPoly::new(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: i64) -> Self {
        ZPoly::new(vec![BigInt::from(c)])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        ZPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// x - n
    pub fn linear(n: &BigInt) -> Self {
        ZPoly::new(vec![-n.clone(), BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports None.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn lc(&self) -> &BigInt {
        self.coeffs.last().expect("lc of zero polynomial")
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.lc().is_one()
    }

    pub fn neg(&self) -> Self {
        ZPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        ZPoly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPoly::new(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        ZPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return ZPoly::zero();
        }
        ZPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    /// gcd of all coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num::integer::gcd(g, c.clone());
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        ZPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn eval_q(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_interval(&self, x: &QInterval) -> QInterval {
        let mut acc = QInterval::point(BigRational::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&QInterval::point(BigRational::from(c.clone())));
        }
        acc
    }

    /// Exact division; panics if not divisible (internal contract).
    pub fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.to_q().divrem(&d.to_q());
        assert!(r.is_zero(), "div_exact: not divisible");
        q.clear_denominators_to_z()
            .expect("div_exact: quotient not integral")
    }

    pub fn to_q(&self) -> QPoly {
        QPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        )
    }

    /// Primitive gcd via rational remainder sequence.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        let mut a = self.to_q();
        let mut b = other.to_q();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.primitive_z()
    }

    /// p / gcd(p, p'); primitive.
    pub fn squarefree_part(&self) -> Self {
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.primitive();
        }
        self.primitive().div_exact(&g)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Cauchy root bound: all roots lie in (-B, B).
    pub fn root_bound(&self) -> BigRational {
        let lc = BigRational::from(self.lc().clone()).abs();
        let mut m = BigRational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let a = BigRational::from(c.clone()).abs();
            if a > m {
                m = a;
            }
        }
        BigRational::one() + m / lc
    }

    /// Sturm sequence (computed over Q, signs preserved).
    pub fn sturm_sequence(&self) -> Vec<QPoly> {
        let mut seq = vec![self.to_q()];
        let d = self.derivative();
        if d.is_zero() {
            return seq;
        }
        seq.push(d.to_q());
        loop {
            let n = seq.len();
            let (_, r) = seq[n - 2].divrem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(r.neg());
        }
        seq
    }

    /// Isolating intervals for all real roots, endpoints rational non-roots.
    pub fn isolate_real_roots(&self) -> Vec<(BigRational, BigRational)> {
        let sf = self.squarefree_part();
        if sf.degree().unwrap_or(0) == 0 {
            return vec![];
        }
        let seq = sf.sturm_sequence();
        let b = sf.root_bound();
        let lo = -b.clone();
        let hi = b;
        let total = sturm_count(&seq, &lo, &hi);
        let mut out = Vec::new();
        let mut stack = vec![(lo, hi, total)];
        while let Some((lo, hi, n)) = stack.pop() {
            if n == 0 {
                continue;
            }
            if n == 1 {
                out.push((lo, hi));
                continue;
            }
            let mut mid = (&lo + &hi) / BigRational::from(BigInt::from(2));
            // nudge off a root if we hit one exactly
            while sf.eval_q(&mid).is_zero() {
                mid = (&lo + &mid) / BigRational::from(BigInt::from(2));
            }
            let nl = sturm_count(&seq, &lo, &mid);
            stack.push((lo, mid.clone(), nl));
            stack.push((mid, hi, n - nl));
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    pub fn count_roots_in(&self, lo: &BigRational, hi: &BigRational) -> usize {
        let sf = self.squarefree_part();
        if sf.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let seq = sf.sturm_sequence();
        sturm_count(&seq, lo, hi)
    }

    /// Halve an isolating interval around the unique root inside it.
    pub fn refine_interval(
        &self,
        lo: &BigRational,
        hi: &BigRational,
    ) -> (BigRational, BigRational) {
        let mut mid = (lo + hi) / BigRational::from(BigInt::from(2));
        if self.eval_q(&mid).is_zero() {
            // rational root hit: shift the midpoint
            mid = (lo + &mid) / BigRational::from(BigInt::from(2));
            if self.eval_q(&mid).is_zero() {
                mid = (&mid + hi) / BigRational::from(BigInt::from(2));
            }
        }
        let slo = self.eval_q(lo).signum();
        let smid = self.eval_q(&mid).signum();
        if slo != smid {
            (lo.clone(), mid)
        } else {
            (mid, hi.clone())
        }
    }

    /// n-th cyclotomic polynomial.
    pub fn cyclotomic(n: usize) -> ZPoly {
        assert!(n >= 1);
        let mut num = vec![-BigInt::one()];
        num.resize(n, BigInt::zero());
        num.push(BigInt::one());
        let mut phi = ZPoly::new(num); // x^n - 1
        for d in 1..n {
            if n % d == 0 {
                phi = phi.div_exact(&ZPoly::cyclotomic(d));
            }
        }
        phi
    }

    /// Irreducible factors of x^n - 1, i.e. cyclotomics for each divisor of n.
    pub fn factor_xn_minus_1(n: usize) -> Vec<ZPoly> {
        let mut out = Vec::new();
        for d in 1..=n {
            if n % d == 0 {
                out.push(ZPoly::cyclotomic(d));
            }
        }
        out
    }

    /// Resultant of two integer polynomials via Sylvester + Bareiss.
    pub fn resultant(&self, other: &Self) -> BigInt {
        if self.is_zero() || other.is_zero() {
            return BigInt::zero();
        }
        let m = self.deg();
        let n = other.deg();
        if m == 0 {
            return num::pow::pow(self.coeffs[0].clone(), n);
        }
        if n == 0 {
            return num::pow::pow(other.coeffs[0].clone(), m);
        }
        let size = m + n;
        let mut a = vec![BigInt::zero(); size * size];
        for row in 0..n {
            for (k, c) in self.coeffs.iter().rev().enumerate() {
                a[row * size + row + k] = c.clone();
            }
        }
        for row in 0..m {
            for (k, c) in other.coeffs.iter().rev().enumerate() {
                a[(n + row) * size + row + k] = c.clone();
            }
        }
        super::snf::bareiss_det(a, size)
    }
}

fn sign_changes(signs: &[i8]) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for &s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sturm_count(seq: &[QPoly], lo: &BigRational, hi: &BigRational) -> usize {
    let at = |x: &BigRational| -> Vec<i8> {
        seq.iter()
            .map(|p| {
                let v = p.eval(x);
                if v.is_zero() {
                    0
                } else if v.is_negative() {
                    -1
                } else {
                    1
                }
            })
            .collect()
    };
    let vl = sign_changes(&at(lo));
    let vh = sign_changes(&at(hi));
    vl.saturating_sub(vh)
}

#[derive(Clone, PartialEq, Eq)]
pub struct QPoly {
    pub coeffs: Vec<BigRational>,
}

impl std::fmt::Debug for QPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "QPoly{:?}", self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>())
    }
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        QPoly::new(vec![BigRational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn lc(&self) -> &BigRational {
        self.coeffs.last().expect("lc of zero polynomial")
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn neg(&self) -> Self {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        QPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn divrem(&self, d: &Self) -> (QPoly, QPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.clone();
        let dd = d.deg();
        let dlc = d.lc().clone();
        let mut q = vec![
            BigRational::zero();
            if self.coeffs.len() >= d.coeffs.len() {
                self.coeffs.len() - d.coeffs.len() + 1
            } else {
                0
            }
        ];
        while !r.is_zero() && r.deg() >= dd {
            let k = r.deg() - dd;
            let f = r.lc() / &dlc;
            q[k] = f.clone();
            let mut coeffs = r.coeffs;
            for (i, c) in d.coeffs.iter().enumerate() {
                let idx = i + k;
                coeffs[idx] -= &f * c;
            }
            // force exact cancellation of the leading term
            coeffs.pop();
            r = QPoly::new(coeffs);
        }
        (QPoly::new(q), r)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Extended gcd: returns (g, s, t) with s*self + t*other = g, g monic.
    pub fn ext_gcd(&self, other: &Self) -> (QPoly, QPoly, QPoly) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = QPoly::one();
        let mut s1 = QPoly::zero();
        let mut t0 = QPoly::zero();
        let mut t1 = QPoly::one();
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let ns = s0.sub(&q.mul(&s1));
            let nt = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = ns;
            t0 = t1;
            t1 = nt;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = BigRational::one() / r0.lc();
        (
            r0.scale(&inv),
            s0.scale(&inv),
            t0.scale(&inv),
        )
    }

    /// Scale to a primitive integer polynomial (positive lc).
    pub fn primitive_z(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = num::integer::lcm(l, c.denom().clone());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from(l.clone())).to_integer())
            .collect();
        ZPoly::new(ints).primitive()
    }

    /// Exact conversion to ZPoly when all coefficients are integers.
    pub fn clear_denominators_to_z(&self) -> Option<ZPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.denom().is_one() {
                return None;
            }
            out.push(c.numer().clone());
        }
        Some(ZPoly::new(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_10_factors() {
        // x^10 - 1 = (x-1)(x+1)(x^4+x^3+x^2+x+1)(x^4-x^3+x^2-x+1)
        let fs = ZPoly::factor_xn_minus_1(10);
        assert_eq!(fs.len(), 4);
        assert_eq!(fs[0], ZPoly::from_i64(&[-1, 1]));
        assert_eq!(fs[1], ZPoly::from_i64(&[1, 1]));
        assert_eq!(fs[2], ZPoly::from_i64(&[1, 1, 1, 1, 1]));
        assert_eq!(fs[3], ZPoly::from_i64(&[1, -1, 1, -1, 1]));
        let mut prod = ZPoly::one();
        for f in &fs {
            prod = prod.mul(f);
        }
        let mut xn = vec![-1i64];
        xn.resize(10, 0);
        xn.push(1);
        assert_eq!(prod, ZPoly::from_i64(&xn));
    }

    #[test]
    fn cyclotomic_4_and_1() {
        let fs = ZPoly::factor_xn_minus_1(4);
        assert_eq!(
            fs,
            vec![
                ZPoly::from_i64(&[-1, 1]),
                ZPoly::from_i64(&[1, 1]),
                ZPoly::from_i64(&[1, 0, 1])
            ]
        );
        assert_eq!(ZPoly::factor_xn_minus_1(1), vec![ZPoly::from_i64(&[-1, 1])]);
    }

    #[test]
    fn root_isolation_golden() {
        // x^2 - x - 1: roots phi and -1/phi
        let p = ZPoly::from_i64(&[-1, -1, 1]);
        let roots = p.isolate_real_roots();
        assert_eq!(roots.len(), 2);
        let phi = 1.6180339887498949;
        let (lo, hi) = &roots[1];
        let lof = lo.numer().to_string().parse::<f64>().unwrap()
            / lo.denom().to_string().parse::<f64>().unwrap();
        let hif = hi.numer().to_string().parse::<f64>().unwrap()
            / hi.denom().to_string().parse::<f64>().unwrap();
        assert!(lof < phi && phi < hif);
    }

    #[test]
    fn resultant_matches_classic() {
        // res(x^2-1, x^2-4) = (1-4)(1-4)... = product of (a_i - b_j) for monics: (1-2)(1+2)(-1-2)(-1+2) = 9
        let a = ZPoly::from_i64(&[-1, 0, 1]);
        let b = ZPoly::from_i64(&[-4, 0, 1]);
        assert_eq!(a.resultant(&b), BigInt::from(9));
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = ZPoly::from_i64(&[-1, 0, 1]); // (x-1)(x+1)
        let b = ZPoly::from_i64(&[1, 2, 1]); // (x+1)^2
        assert_eq!(a.gcd(&b), ZPoly::from_i64(&[1, 1]));
        let c = a.mul(&b); // (x-1)(x+1)^3
        assert_eq!(c.squarefree_part(), ZPoly::from_i64(&[-1, 0, 1]));
    }
}
