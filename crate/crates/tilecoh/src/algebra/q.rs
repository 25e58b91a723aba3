//! Rational interval arithmetic and small helpers over Q.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

pub fn half(x: &BigRational) -> BigRational {
    x / qi(2)
}

/// Closed interval with rational endpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct QInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl QInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi);
        QInterval { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        QInterval { lo: x.clone(), hi: x }
    }

    pub fn add(&self, o: &Self) -> Self {
        QInterval::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }

    pub fn sub(&self, o: &Self) -> Self {
        QInterval::new(&self.lo - &o.hi, &self.hi - &o.lo)
    }

    pub fn neg(&self) -> Self {
        QInterval::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let mut lo = c[0].clone();
        let mut hi = c[0].clone();
        for v in &c[1..] {
            if *v < lo {
                lo = v.clone();
            }
            if *v > hi {
                hi = v.clone();
            }
        }
        QInterval::new(lo, hi)
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Sign if determined: -1, 0 (only for exact point zero), +1; None if straddles.
    pub fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> BigRational {
        half(&(&self.lo + &self.hi))
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.mid())
    }
}

pub fn rational_to_f64(x: &BigRational) -> f64 {
    // good enough for rendering / display; exact arithmetic never consumes this
    let n = x.numer();
    let d = x.denom();
    let nf = bigint_to_f64(n);
    let df = bigint_to_f64(d);
    nf / df
}

fn bigint_to_f64(x: &BigInt) -> f64 {
    let s = x.to_string();
    s.parse::<f64>().unwrap_or(f64::NAN)
}

/// Lagrange interpolation through (x_i, y_i), all x_i distinct.
pub fn lagrange_interpolate(points: &[(BigRational, BigRational)]) -> super::poly::QPoly {
    use super::poly::QPoly;
    let mut acc = QPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut term = QPoly::new(vec![yi.clone()]);
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = xi - xj;
            // (x - xj) / (xi - xj)
            let lin = QPoly::new(vec![-xj / &denom, BigRational::one() / &denom]);
            term = term.mul(&lin);
        }
        acc = acc.add(&term);
    }
    acc
}

/// Euler totient, for bounded root-of-unity order search.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Prime factors of a positive integer (small, trial division).
pub fn prime_factors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        if (&n % &p).is_zero() {
            out.push(p.clone());
            while (&n % &p).is_zero() {
                n = n / &p;
            }
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_mul_signs() {
        let a = QInterval::new(q(-1, 2), q(1, 3));
        let b = QInterval::new(q(2, 1), q(3, 1));
        let c = a.mul(&b);
        assert_eq!(c.lo, q(-3, 2));
        assert_eq!(c.hi, q(1, 1));
        assert!(c.contains_zero());
    }

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(10), 4);
        assert_eq!(euler_phi(20), 8);
        assert_eq!(euler_phi(60), 16);
    }

    #[test]
    fn prime_factors_of_12() {
        assert_eq!(
            prime_factors(&BigInt::from(12)),
            vec![BigInt::from(2), BigInt::from(3)]
        );
    }
}
