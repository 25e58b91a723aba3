//! Gaussian elimination generic over an exact field, used for ranks over Q,
//! over cyclotomic quotients Q[t]/(Phi), and over number fields Q(lambda).

use num::rational::BigRational;
use num::{One, Zero};

use super::poly::QPoly;

pub trait FieldCtx {
    type El: Clone + PartialEq;
    fn zero(&self) -> Self::El;
    fn one(&self) -> Self::El;
    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn sub(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn inv(&self, a: &Self::El) -> Self::El;
    fn is_zero(&self, a: &Self::El) -> bool;
    fn neg(&self, a: &Self::El) -> Self::El {
        self.sub(&self.zero(), a)
    }
}

/// The rationals.
pub struct QCtx;

impl FieldCtx for QCtx {
    type El = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        BigRational::one() / a
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
}

/// Q[t]/(phi) for an irreducible rational polynomial phi.
pub struct QuotCtx {
    pub phi: QPoly,
}

impl QuotCtx {
    pub fn new(phi: QPoly) -> Self {
        QuotCtx { phi }
    }

    pub fn reduce(&self, p: &QPoly) -> QPoly {
        p.divrem(&self.phi).1
    }
}

impl FieldCtx for QuotCtx {
    type El = QPoly;
    fn zero(&self) -> QPoly {
        QPoly::zero()
    }
    fn one(&self) -> QPoly {
        QPoly::one()
    }
    fn add(&self, a: &QPoly, b: &QPoly) -> QPoly {
        a.add(b)
    }
    fn sub(&self, a: &QPoly, b: &QPoly) -> QPoly {
        a.sub(b)
    }
    fn mul(&self, a: &QPoly, b: &QPoly) -> QPoly {
        self.reduce(&a.mul(b))
    }
    fn inv(&self, a: &QPoly) -> QPoly {
        let (g, s, _) = a.ext_gcd(&self.phi);
        assert_eq!(g.degree(), Some(0), "non-invertible element in quotient field");
        let scale = BigRational::one() / g.coeff(0);
        self.reduce(&s.scale(&scale))
    }
    fn is_zero(&self, a: &QPoly) -> bool {
        a.is_zero()
    }
}

#[derive(Clone)]
pub struct GMat<E> {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<E>,
}

impl<E: Clone + PartialEq> GMat<E> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut a = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                a.push(f(i, j));
            }
        }
        GMat { rows, cols, a }
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.a[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.a[i * self.cols + j] = v;
    }
}

/// Row-reduce in place; returns rank.
pub fn rank<C: FieldCtx>(ctx: &C, m: &GMat<C::El>) -> usize {
    let mut m = m.clone();
    let mut rank = 0;
    for col in 0..m.cols {
        let mut piv = None;
        for r in rank..m.rows {
            if !ctx.is_zero(m.get(r, col)) {
                piv = Some(r);
                break;
            }
        }
        let Some(piv) = piv else { continue };
        for j in 0..m.cols {
            let x = m.get(rank, j).clone();
            let y = m.get(piv, j).clone();
            m.set(rank, j, y);
            m.set(piv, j, x);
        }
        let inv = ctx.inv(m.get(rank, col));
        for j in col..m.cols {
            let v = ctx.mul(m.get(rank, j), &inv);
            m.set(rank, j, v);
        }
        for r in 0..m.rows {
            if r != rank && !ctx.is_zero(m.get(r, col)) {
                let f = m.get(r, col).clone();
                for j in col..m.cols {
                    let v = ctx.sub(m.get(r, j), &ctx.mul(&f, m.get(rank, j)));
                    m.set(r, j, v);
                }
            }
        }
        rank += 1;
        if rank == m.rows {
            break;
        }
    }
    rank
}

/// Left nullspace basis of m: vectors v with v * m = 0.
pub fn left_nullspace<C: FieldCtx>(ctx: &C, m: &GMat<C::El>) -> Vec<Vec<C::El>> {
    // nullspace of the transpose
    let t = GMat::from_fn(m.cols, m.rows, |i, j| m.get(j, i).clone());
    nullspace(ctx, &t)
}

/// Nullspace basis: vectors v with m * v = 0.
pub fn nullspace<C: FieldCtx>(ctx: &C, m: &GMat<C::El>) -> Vec<Vec<C::El>> {
    let mut m = m.clone();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut rank = 0;
    for col in 0..m.cols {
        let mut piv = None;
        for r in rank..m.rows {
            if !ctx.is_zero(m.get(r, col)) {
                piv = Some(r);
                break;
            }
        }
        let Some(piv) = piv else { continue };
        for j in 0..m.cols {
            let x = m.get(rank, j).clone();
            let y = m.get(piv, j).clone();
            m.set(rank, j, y);
            m.set(piv, j, x);
        }
        let inv = ctx.inv(m.get(rank, col));
        for j in col..m.cols {
            let v = ctx.mul(m.get(rank, j), &inv);
            m.set(rank, j, v);
        }
        for r in 0..m.rows {
            if r != rank && !ctx.is_zero(m.get(r, col)) {
                let f = m.get(r, col).clone();
                for j in col..m.cols {
                    let v = ctx.sub(m.get(r, j), &ctx.mul(&f, m.get(rank, j)));
                    m.set(r, j, v);
                }
            }
        }
        pivots.push((rank, col));
        rank += 1;
        if rank == m.rows {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in 0..m.cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![ctx.zero(); m.cols];
        v[free] = ctx.one();
        for &(r, c) in &pivots {
            v[c] = ctx.neg(m.get(r, free));
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::poly::ZPoly;

    #[test]
    fn rank_over_q() {
        let m = GMat::from_fn(2, 2, |i, j| {
            BigRational::from(num::BigInt::from([[1i64, 2], [2, 4]][i][j]))
        });
        assert_eq!(rank(&QCtx, &m), 1);
    }

    #[test]
    fn quot_field_inverse() {
        // Q[t]/(t^2+1): (t)^-1 = -t
        let ctx = QuotCtx::new(ZPoly::from_i64(&[1, 0, 1]).to_q());
        let t = ZPoly::from_i64(&[0, 1]).to_q();
        let inv = ctx.inv(&t);
        assert_eq!(ctx.mul(&t, &inv), QPoly::one());
    }

    #[test]
    fn nullspace_simple() {
        // [[1,1],[1,1]] has nullspace spanned by (1,-1)
        let m = GMat::from_fn(2, 2, |_, _| BigRational::one());
        let ns = nullspace(&QCtx, &m);
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        assert_eq!(v[0].clone() + v[1].clone(), BigRational::zero());
    }
}
