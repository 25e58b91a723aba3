//! Dense BigInt matrices: Smith normal form with transforms, Bareiss
//! determinants, characteristic polynomials by interpolation, and lattice
//! membership tests.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use super::poly::ZPoly;
use super::q::lagrange_interpolate;

#[derive(Clone, PartialEq, Eq)]
pub struct ZMat {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<BigInt>,
}

impl std::fmt::Debug for ZMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "ZMat {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl ZMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ZMat {
            rows,
            cols,
            a: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ZMat::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, v: &[i64]) -> Self {
        assert_eq!(v.len(), rows * cols);
        ZMat {
            rows,
            cols,
            a: v.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.a[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.a[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> ZMat {
        let mut m = ZMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn mul(&self, other: &ZMat) -> ZMat {
        assert_eq!(self.cols, other.rows);
        let mut m = ZMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let v = self.get(i, k);
                if v.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = v * other.get(k, j);
                    let cur = m.get(i, j) + add;
                    m.set(i, j, cur);
                }
            }
        }
        m
    }

    pub fn add(&self, other: &ZMat) -> ZMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ZMat {
            rows: self.rows,
            cols: self.cols,
            a: self
                .a
                .iter()
                .zip(other.a.iter())
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    pub fn sub(&self, other: &ZMat) -> ZMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ZMat {
            rows: self.rows,
            cols: self.cols,
            a: self
                .a
                .iter()
                .zip(other.a.iter())
                .map(|(x, y)| x - y)
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> ZMat {
        ZMat {
            rows: self.rows,
            cols: self.cols,
            a: self.a.iter().map(|x| x * k).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|x| x.is_zero())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.a.iter().all(|x| !x.is_negative())
    }

    pub fn is_positive(&self) -> bool {
        self.a.iter().all(|x| x.is_positive())
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut s = BigInt::zero();
                for j in 0..self.cols {
                    s += self.get(i, j) * &v[j];
                }
                s
            })
            .collect()
    }

    pub fn pow(&self, e: usize) -> ZMat {
        assert_eq!(self.rows, self.cols);
        let mut result = ZMat::identity(self.rows);
        for _ in 0..e {
            result = result.mul(self);
        }
        result
    }

    pub fn rank_q(&self) -> usize {
        let mut m: Vec<Vec<BigRational>> = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| BigRational::from(self.get(i, j).clone()))
                    .collect()
            })
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let mut piv = None;
            for r in rank..self.rows {
                if !m[r][col].is_zero() {
                    piv = Some(r);
                    break;
                }
            }
            let Some(piv) = piv else { continue };
            m.swap(rank, piv);
            let inv = BigRational::one() / &m[rank][col];
            for j in col..self.cols {
                m[rank][j] = &m[rank][j] * &inv;
            }
            for r in 0..self.rows {
                if r != rank && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for j in col..self.cols {
                        let sub = &f * &m[rank][j];
                        m[r][j] = &m[r][j] - sub;
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// det via Bareiss (square only).
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        bareiss_det(self.a.clone(), self.rows)
    }

    /// Characteristic polynomial det(xI - M), monic, by interpolation.
    pub fn charpoly(&self) -> ZPoly {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return ZPoly::one();
        }
        let mut points = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let x = BigInt::from(k as i64);
            let mut m = self.scale(&BigInt::from(-1));
            for i in 0..n {
                let v = m.get(i, i) + &x;
                m.set(i, i, v);
            }
            points.push((
                BigRational::from(x),
                BigRational::from(m.det()),
            ));
        }
        let p = lagrange_interpolate(&points);
        let z = p
            .clear_denominators_to_z()
            .expect("charpoly interpolation not integral");
        assert!(z.is_monic(), "charpoly not monic");
        z
    }
}

/// Fraction-free determinant; consumes a row-major buffer.
pub fn bareiss_det(mut a: Vec<BigInt>, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            // find pivot row
            let mut found = None;
            for r in k + 1..n {
                if !a[r * n + k].is_zero() {
                    found = Some(r);
                    break;
                }
            }
            match found {
                None => return BigInt::zero(),
                Some(r) => {
                    for j in 0..n {
                        a.swap(k * n + j, r * n + j);
                    }
                    sign = -sign;
                }
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero());
                a[i * n + j] = q;
            }
            a[i * n + k] = BigInt::zero();
        }
        prev = a[k * n + k].clone();
    }
    let d = a[(n - 1) * n + (n - 1)].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Smith normal form: D = U A V with U, V unimodular and d_i | d_{i+1}.
pub struct Snf {
    pub d: ZMat,
    pub u: ZMat,
    pub v: ZMat,
}

impl Snf {
    pub fn rank(&self) -> usize {
        let n = self.d.rows.min(self.d.cols);
        (0..n).take_while(|&i| !self.d.get(i, i).is_zero()).count()
    }

    /// Nontrivial invariant factors (absolute value, > 1).
    pub fn torsion_factors(&self) -> Vec<BigInt> {
        let n = self.d.rows.min(self.d.cols);
        (0..n)
            .filter_map(|i| {
                let v = self.d.get(i, i).abs();
                if v > BigInt::one() {
                    Some(v)
                } else {
                    None
                }
            })
            .collect()
    }
}

pub fn smith_normal_form(input: &ZMat) -> Snf {
    let mut d = input.clone();
    let mut u = ZMat::identity(input.rows);
    let mut v = ZMat::identity(input.cols);
    let n = d.rows.min(d.cols);
    let mut t = 0;
    while t < n {
        // find a nonzero pivot with minimal absolute value in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..d.rows {
            for j in t..d.cols {
                if !d.get(i, j).is_zero() {
                    match &best {
                        None => best = Some((i, j)),
                        Some((bi, bj)) => {
                            if d.get(i, j).abs() < d.get(*bi, *bj).abs() {
                                best = Some((i, j));
                            }
                        }
                    }
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        swap_rows(&mut d, &mut u, t, pi);
        swap_cols(&mut d, &mut v, t, pj);
        // clear row and column t
        let mut clean = false;
        while !clean {
            clean = true;
            for i in t + 1..d.rows {
                if !d.get(i, t).is_zero() {
                    let q = div_round(d.get(i, t), d.get(t, t));
                    if !q.is_zero() {
                        row_op(&mut d, &mut u, i, t, &q);
                    }
                    if !d.get(i, t).is_zero() {
                        // remainder smaller than pivot; swap up and restart
                        swap_rows(&mut d, &mut u, t, i);
                        clean = false;
                    }
                }
            }
            for j in t + 1..d.cols {
                if !d.get(t, j).is_zero() {
                    let q = div_round(d.get(t, j), d.get(t, t));
                    if !q.is_zero() {
                        col_op(&mut d, &mut v, j, t, &q);
                    }
                    if !d.get(t, j).is_zero() {
                        swap_cols(&mut d, &mut v, t, j);
                        clean = false;
                    }
                }
            }
        }
        // divisibility: pivot must divide every remaining entry
        let mut retry = false;
        'outer: for i in t + 1..d.rows {
            for j in t + 1..d.cols {
                if !(d.get(i, j) % d.get(t, t)).is_zero() {
                    // add row i to row t, forcing another reduction round
                    add_row(&mut d, &mut u, t, i);
                    retry = true;
                    break 'outer;
                }
            }
        }
        if retry {
            continue;
        }
        if d.get(t, t).is_negative() {
            negate_row(&mut d, &mut u, t);
        }
        t += 1;
    }
    Snf { d, u, v }
}

fn swap_rows(d: &mut ZMat, u: &mut ZMat, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..d.cols {
        let x = d.get(a, j).clone();
        let y = d.get(b, j).clone();
        d.set(a, j, y);
        d.set(b, j, x);
    }
    for j in 0..u.cols {
        let x = u.get(a, j).clone();
        let y = u.get(b, j).clone();
        u.set(a, j, y);
        u.set(b, j, x);
    }
}

fn swap_cols(d: &mut ZMat, v: &mut ZMat, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..d.rows {
        let x = d.get(i, a).clone();
        let y = d.get(i, b).clone();
        d.set(i, a, y);
        d.set(i, b, x);
    }
    for i in 0..v.rows {
        let x = v.get(i, a).clone();
        let y = v.get(i, b).clone();
        v.set(i, a, y);
        v.set(i, b, x);
    }
}

/// row_i -= q * row_t
fn row_op(d: &mut ZMat, u: &mut ZMat, i: usize, t: usize, q: &BigInt) {
    for j in 0..d.cols {
        let v = d.get(i, j) - q * d.get(t, j);
        d.set(i, j, v);
    }
    for j in 0..u.cols {
        let v = u.get(i, j) - q * u.get(t, j);
        u.set(i, j, v);
    }
}

/// col_j -= q * col_t
fn col_op(d: &mut ZMat, v: &mut ZMat, j: usize, t: usize, q: &BigInt) {
    for i in 0..d.rows {
        let x = d.get(i, j) - q * d.get(i, t);
        d.set(i, j, x);
    }
    for i in 0..v.rows {
        let x = v.get(i, j) - q * v.get(i, t);
        v.set(i, j, x);
    }
}

fn add_row(d: &mut ZMat, u: &mut ZMat, t: usize, i: usize) {
    for j in 0..d.cols {
        let v = d.get(t, j) + d.get(i, j);
        d.set(t, j, v);
    }
    for j in 0..u.cols {
        let v = u.get(t, j) + u.get(i, j);
        u.set(t, j, v);
    }
}

fn negate_row(d: &mut ZMat, u: &mut ZMat, t: usize) {
    for j in 0..d.cols {
        let v = -d.get(t, j);
        d.set(t, j, v);
    }
    for j in 0..u.cols {
        let v = -u.get(t, j);
        u.set(t, j, v);
    }
}

fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    // rounded division so remainders shrink
    let two = BigInt::from(2);
    let (q, r) = a.div_rem(b);
    if &r.abs() * &two > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Solve A z = w over Z if possible (lattice membership of w in col-space).
pub fn solve_integer(a: &ZMat, w: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(w.len(), a.rows);
    let s = smith_normal_form(a);
    let uw = s.u.mul_vec(w);
    let n = a.rows.min(a.cols);
    let mut y = vec![BigInt::zero(); a.cols];
    for i in 0..a.rows {
        if i < n && !s.d.get(i, i).is_zero() {
            let (q, r) = uw[i].div_rem(s.d.get(i, i));
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !uw[i].is_zero() {
            return None;
        }
    }
    Some(s.v.mul_vec(&y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_snf(m: &ZMat) {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d, "UAV != D");
        assert_eq!(s.u.det().abs(), BigInt::one(), "U not unimodular");
        assert_eq!(s.v.det().abs(), BigInt::one(), "V not unimodular");
        let n = s.d.rows.min(s.d.cols);
        for i in 0..n {
            for j in 0..s.d.cols {
                if i != j {
                    assert!(s.d.get(i.min(s.d.rows - 1), j).is_zero() || i == j);
                }
            }
        }
        for i in 0..n.saturating_sub(1) {
            let a = s.d.get(i, i);
            let b = s.d.get(i + 1, i + 1);
            if !a.is_zero() && !b.is_zero() {
                assert!((b % a).is_zero(), "divisibility chain broken");
            }
            if a.is_zero() {
                assert!(b.is_zero());
            }
        }
    }

    #[test]
    fn snf_spec_example() {
        // [[2,4],[6,8]] -> diag(2, 4)
        let m = ZMat::from_i64(2, 2, &[2, 4, 6, 8]);
        let s = smith_normal_form(&m);
        assert_eq!(s.d.get(0, 0), &BigInt::from(2));
        assert_eq!(s.d.get(1, 1), &BigInt::from(4));
        check_snf(&m);
    }

    #[test]
    fn snf_identity_and_zero() {
        check_snf(&ZMat::identity(3));
        let s = smith_normal_form(&ZMat::identity(3));
        assert_eq!(s.d, ZMat::identity(3));
        let z = ZMat::zero(2, 3);
        let s = smith_normal_form(&z);
        assert!(s.d.is_zero());
        check_snf(&z);
    }

    #[test]
    fn snf_rectangular() {
        let m = ZMat::from_i64(2, 3, &[1, 2, 3, 4, 5, 6]);
        check_snf(&m);
        let s = smith_normal_form(&m);
        assert_eq!(s.rank(), 2);
    }

    #[test]
    fn charpoly_fibonacci() {
        let m = ZMat::from_i64(2, 2, &[1, 1, 1, 0]);
        assert_eq!(m.charpoly(), ZPoly::from_i64(&[-1, -1, 1]));
    }

    #[test]
    fn det_and_rank() {
        let m = ZMat::from_i64(3, 3, &[2, 0, 0, 0, 3, 0, 0, 0, 5]);
        assert_eq!(m.det(), BigInt::from(30));
        assert_eq!(m.rank_q(), 3);
        let singular = ZMat::from_i64(2, 2, &[1, 2, 2, 4]);
        assert_eq!(singular.det(), BigInt::zero());
        assert_eq!(singular.rank_q(), 1);
    }

    #[test]
    fn integer_solve() {
        let a = ZMat::from_i64(2, 2, &[2, 0, 0, 3]);
        let w = vec![BigInt::from(4), BigInt::from(9)];
        let z = solve_integer(&a, &w).unwrap();
        assert_eq!(a.mul_vec(&z), w);
        let w2 = vec![BigInt::from(1), BigInt::from(0)];
        assert!(solve_integer(&a, &w2).is_none());
    }
}
