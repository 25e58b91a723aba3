//! The group rings Z[t]/(t^k - 1) of cyclic rotation groups, and matrices
//! whose rows and columns live in cyclic summands of possibly different
//! orders (vertex orbits can be smaller than the full group).
//!
//! An entry in row i is an element of Z[t]/(t^{k_i} - 1), where k_i divides
//! the group order N. Entries of well-formed matrices are killed by
//! (t^{k_j} - 1) of their column, so composition is independent of lifts.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use super::matgen::{GMat, QuotCtx};
use super::poly::{QPoly, ZPoly};
use super::snf::ZMat;

/// Element of Z[t]/(t^k - 1), coefficients indexed by power of t.
#[derive(Clone, PartialEq, Eq)]
pub struct GrElem {
    pub k: usize,
    pub c: Vec<BigInt>,
}

impl std::fmt::Debug for GrElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", ZPoly::new(self.c.clone()))
    }
}

impl GrElem {
    pub fn zero(k: usize) -> Self {
        GrElem {
            k,
            c: vec![BigInt::zero(); k],
        }
    }

    pub fn monomial(k: usize, exp: usize, coeff: i64) -> Self {
        let mut e = GrElem::zero(k);
        e.c[exp % k] += BigInt::from(coeff);
        e
    }

    pub fn from_poly(k: usize, p: &ZPoly) -> Self {
        let mut e = GrElem::zero(k);
        for (i, c) in p.coeffs.iter().enumerate() {
            e.c[i % k] += c;
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, o: &GrElem) -> GrElem {
        assert_eq!(self.k, o.k);
        GrElem {
            k: self.k,
            c: self
                .c
                .iter()
                .zip(o.c.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn neg(&self) -> GrElem {
        GrElem {
            k: self.k,
            c: self.c.iter().map(|a| -a).collect(),
        }
    }

    pub fn sub(&self, o: &GrElem) -> GrElem {
        self.add(&o.neg())
    }

    /// Multiply by an element of any Z[t]/(t^m - 1) with k | m or arbitrary
    /// lift; exponents fold mod k. Well-defined on well-formed matrices.
    pub fn mul_lift(&self, o: &GrElem) -> GrElem {
        let mut out = GrElem::zero(self.k);
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out.c[(i + j) % self.k] += a * b;
            }
        }
        out
    }

    /// Push into a smaller (or equal) quotient: exponents mod k2.
    pub fn project(&self, k2: usize) -> GrElem {
        let mut out = GrElem::zero(k2);
        for (i, a) in self.c.iter().enumerate() {
            out.c[i % k2] += a;
        }
        out
    }

    /// t -> t^{-1} within Z[t]/(t^k - 1).
    pub fn involute(&self) -> GrElem {
        let mut out = GrElem::zero(self.k);
        for (i, a) in self.c.iter().enumerate() {
            out.c[(self.k - i) % self.k] = a.clone();
        }
        out
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.c.iter().sum()
    }

    /// Reduce mod a cyclotomic factor Phi (as a rational polynomial).
    pub fn reduce_mod(&self, ctx: &QuotCtx) -> QPoly {
        let p = QPoly::new(
            self.c
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        );
        ctx.reduce(&p)
    }

    /// Coefficient multiset for gauge-insensitive comparisons.
    pub fn coeff_multiset(&self) -> Vec<BigInt> {
        let mut v = self.c.clone();
        v.sort();
        v
    }
}

/// Cell of a complex: display name plus orbit size (its chain summand is
/// Z[t]/(t^orbit - 1); orbit = N for free cells, 1 over Z).
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct CellInfo {
    pub name: String,
    pub orbit: usize,
}

/// Matrix over the group ring with per-row/per-column cyclic summands.
#[derive(Clone, PartialEq, Eq)]
pub struct RingMat {
    pub group_order: usize,
    pub row_cells: Vec<CellInfo>,
    pub col_cells: Vec<CellInfo>,
    pub e: Vec<GrElem>,
}

impl std::fmt::Debug for RingMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "RingMat {}x{} over Z[t]/(t^{}-1)",
            self.row_cells.len(),
            self.col_cells.len(),
            self.group_order
        )?;
        for i in 0..self.row_cells.len() {
            let row: Vec<String> = (0..self.col_cells.len())
                .map(|j| format!("{:?}", self.get(i, j)))
                .collect();
            writeln!(f, "  [{}]", row.join(" | "))?;
        }
        Ok(())
    }
}

impl RingMat {
    pub fn zero(group_order: usize, row_cells: Vec<CellInfo>, col_cells: Vec<CellInfo>) -> Self {
        let e = row_cells
            .iter()
            .flat_map(|r| std::iter::repeat(GrElem::zero(r.orbit)).take(col_cells.len()))
            .collect();
        RingMat {
            group_order,
            row_cells,
            col_cells,
            e,
        }
    }

    pub fn rows(&self) -> usize {
        self.row_cells.len()
    }

    pub fn cols(&self) -> usize {
        self.col_cells.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &GrElem {
        &self.e[i * self.cols() + j]
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &GrElem) {
        let c = self.cols();
        let cur = &self.e[i * c + j];
        self.e[i * c + j] = cur.add(&v.project(cur.k));
    }

    pub fn set(&mut self, i: usize, j: usize, v: GrElem) {
        let c = self.cols();
        let k = self.row_cells[i].orbit;
        self.e[i * c + j] = v.project(k);
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|x| x.is_zero())
    }

    /// Matrix product; composition of module maps.
    pub fn mul(&self, o: &RingMat) -> RingMat {
        assert_eq!(self.cols(), o.rows());
        let mut out = RingMat::zero(
            self.group_order,
            self.row_cells.clone(),
            o.col_cells.clone(),
        );
        for i in 0..self.rows() {
            for k in 0..self.cols() {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols() {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.mul_lift(b);
                    out.add_to(i, j, &prod);
                }
            }
        }
        out
    }

    /// Transpose with the involution t -> t^{-1}: the coboundary/pullback of
    /// a boundary/pushforward matrix.
    pub fn transpose_involute(&self) -> RingMat {
        let mut out = RingMat::zero(
            self.group_order,
            self.col_cells.clone(),
            self.row_cells.clone(),
        );
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                let v = self.get(i, j).involute();
                out.set(j, i, v);
            }
        }
        out
    }

    /// Everything at t = 1: the matrix over Z.
    pub fn eval_at_one(&self) -> ZMat {
        let mut m = ZMat::zero(self.rows(), self.cols());
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                m.set(i, j, self.get(i, j).eval_at_one());
            }
        }
        m
    }

    /// Same module map with the group collapsed to the trivial one.
    pub fn collapse_to_z(&self) -> RingMat {
        let strip = |cells: &[CellInfo]| -> Vec<CellInfo> {
            cells
                .iter()
                .map(|c| CellInfo {
                    name: c.name.clone(),
                    orbit: 1,
                })
                .collect()
        };
        let mut out = RingMat::zero(1, strip(&self.row_cells), strip(&self.col_cells));
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                out.set(i, j, self.get(i, j).project(1));
            }
        }
        out
    }

    /// Expansion to an integer matrix over the Z-basis {t^0..t^{k-1}} of
    /// each summand. Column block j, basis power m: image of t^m * gen_j.
    pub fn expand_z(&self) -> ZMat {
        let row_offsets = offsets(&self.row_cells);
        let col_offsets = offsets(&self.col_cells);
        let total_rows = *row_offsets.last().unwrap();
        let total_cols = *col_offsets.last().unwrap();
        let mut m = ZMat::zero(total_rows, total_cols);
        for i in 0..self.rows() {
            let ki = self.row_cells[i].orbit;
            for j in 0..self.cols() {
                let kj = self.col_cells[j].orbit;
                let entry = self.get(i, j);
                if entry.is_zero() {
                    continue;
                }
                for mcol in 0..kj {
                    // t^mcol * entry in Z[t]/(t^{ki}-1)
                    for (p, c) in entry.c.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let row = row_offsets[i] + (p + mcol) % ki;
                        let col = col_offsets[j] + mcol;
                        let cur = m.get(row, col) + c;
                        m.set(row, col, cur);
                    }
                }
            }
        }
        m
    }

    /// The block of the matrix acting on the Phi_d-isotypic part: rows and
    /// columns restricted to cells with d | orbit, entries mod Phi_d.
    pub fn representation_block(&self, d: usize, ctx: &QuotCtx) -> GMat<QPoly> {
        let rows: Vec<usize> = (0..self.rows())
            .filter(|&i| self.row_cells[i].orbit % d == 0)
            .collect();
        let cols: Vec<usize> = (0..self.cols())
            .filter(|&j| self.col_cells[j].orbit % d == 0)
            .collect();
        GMat::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).reduce_mod(ctx)
        })
    }

    pub fn rep_dims(&self, d: usize) -> (usize, usize) {
        (
            (0..self.rows())
                .filter(|&i| self.row_cells[i].orbit % d == 0)
                .count(),
            (0..self.cols())
                .filter(|&j| self.col_cells[j].orbit % d == 0)
                .count(),
        )
    }
}

pub fn offsets(cells: &[CellInfo]) -> Vec<usize> {
    let mut v = Vec::with_capacity(cells.len() + 1);
    let mut acc = 0;
    for c in cells {
        v.push(acc);
        acc += c.orbit;
    }
    v.push(acc);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn free_cells(n: usize, count: usize) -> Vec<CellInfo> {
        (0..count)
            .map(|i| CellInfo {
                name: format!("c{}", i),
                orbit: n,
            })
            .collect()
    }

    #[test]
    fn chair_face_matrix() {
        // 2 + t + t^3 over Z[t]/(t^4-1)
        let mut m = RingMat::zero(4, free_cells(4, 1), free_cells(4, 1));
        m.set(0, 0, GrElem::from_poly(4, &ZPoly::from_i64(&[2, 1, 0, 1])));
        assert_eq!(m.eval_at_one().get(0, 0), &BigInt::from(4));
        let z = m.expand_z();
        // circulant of (2,1,0,1)
        assert_eq!(z.get(0, 0), &BigInt::from(2));
        assert_eq!(z.get(1, 0), &BigInt::from(1));
        assert_eq!(z.get(3, 0), &BigInt::from(1));
        assert_eq!(z.get(0, 1), &BigInt::from(1));
    }

    #[test]
    fn involution_round_trip() {
        let e = GrElem::from_poly(10, &ZPoly::from_i64(&[0, 1, 0, 0, 2]));
        let inv = e.involute();
        assert_eq!(inv.c[9], BigInt::from(1));
        assert_eq!(inv.c[6], BigInt::from(2));
        assert_eq!(inv.involute(), e);
    }

    #[test]
    fn vertex_orbit_projection() {
        // alpha = t*beta in an orbit of size 2: entries fold mod t^2-1
        let e = GrElem::from_poly(2, &ZPoly::from_i64(&[0, 0, 0, 1])); // t^3 -> t
        assert_eq!(e.c, vec![BigInt::from(0), BigInt::from(1)]);
    }

    #[test]
    fn rep_block_dims() {
        // one vertex orbit of size 2 within group of order 10: present for d in {1, 2} only
        let rows = vec![CellInfo {
            name: "v".into(),
            orbit: 2,
        }];
        let cols = free_cells(10, 1);
        let m = RingMat::zero(10, rows, cols);
        assert_eq!(m.rep_dims(1), (1, 1));
        assert_eq!(m.rep_dims(2), (1, 1));
        assert_eq!(m.rep_dims(5), (0, 1));
        assert_eq!(m.rep_dims(10), (0, 1));
    }
}
