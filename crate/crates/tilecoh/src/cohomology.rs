//! Cohomology of the complexes and of the tiling spaces they approximate:
//! integral ranks and torsion by Smith normal form, per-representation
//! ranks over the cyclotomic quotients (one irreducible representation of
//! the rotation group at a time), module decompositions up to finite
//! index, and direct limits under the substitution pullback.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::algebra::matgen::{rank as grank, FieldCtx, GMat, QuotCtx};
use crate::algebra::{smith_normal_form, ZMat, ZPoly};
use crate::complex::APComplex;

/// Coboundaries and pullbacks: transposes with t replaced by t^-1.
pub struct CochainComplex {
    pub delta_0: crate::algebra::RingMat,
    pub delta_1: crate::algebra::RingMat,
    pub pullback_0: crate::algebra::RingMat,
    pub pullback_1: crate::algebra::RingMat,
    pub pullback_2: crate::algebra::RingMat,
    /// integer expansions (dual bases over Z)
    pub delta_0_z: ZMat,
    pub delta_1_z: ZMat,
    pub pullback_2_z: ZMat,
}

pub fn cochain_complex(cx: &APComplex) -> CochainComplex {
    let delta_0 = cx.boundary_1.transpose_involute();
    let delta_1 = cx.boundary_2.transpose_involute();
    let pullback_0 = cx.subst_0.transpose_involute();
    let pullback_1 = cx.subst_1.transpose_involute();
    let pullback_2 = cx.subst_2.transpose_involute();
    // delta^1 delta^0 = 0 and pullback chain-map identities follow from the
    // boundary-side identities; check them anyway
    assert!(delta_1.mul(&delta_0).is_zero(), "delta1 delta0 != 0");
    assert!(
        delta_1.mul(&pullback_1) == pullback_2.mul(&delta_1),
        "pullback does not commute with delta1"
    );
    assert!(
        delta_0.mul(&pullback_0) == pullback_1.mul(&delta_0),
        "pullback does not commute with delta0"
    );
    CochainComplex {
        delta_0_z: cx.boundary_1.expand_z().transpose(),
        delta_1_z: cx.boundary_2.expand_z().transpose(),
        pullback_2_z: cx.subst_2.expand_z().transpose(),
        delta_0,
        delta_1,
        pullback_0,
        pullback_1,
        pullback_2,
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct RepRow {
    pub divisor: usize,
    pub phi: String,
    pub phi_degree: usize,
    pub dim_c0: usize,
    pub dim_c1: usize,
    pub dim_c2: usize,
    pub rank_delta_0: usize,
    pub rank_delta_1: usize,
    pub h0: usize,
    pub h1: usize,
    pub h2: usize,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct CohomologyReport {
    pub complex: String,
    pub h0_free: usize,
    pub h1_free: usize,
    pub h2_free: usize,
    pub h1_torsion: Vec<String>,
    pub h2_torsion: Vec<String>,
    pub representation_table: Vec<RepRow>,
    pub decomposition_h1: String,
    pub decomposition_h2: String,
    /// representation-wise data determines the module only up to finite
    /// extensions and quotients; always set
    pub finite_index_caveat: bool,
}

/// Full cohomology of a finite complex: integral run over Z plus one run
/// per irreducible representation of the cyclic group.
pub fn cohomology_groups(cx: &APComplex) -> CohomologyReport {
    let cc = cochain_complex(cx);
    let n0 = cc.delta_0_z.cols;
    let n1 = cc.delta_1_z.cols;
    let n2 = cc.delta_1_z.rows;
    let s0 = smith_normal_form(&cc.delta_0_z);
    let s1 = smith_normal_form(&cc.delta_1_z);
    let r0 = s0.rank();
    let r1 = s1.rank();
    assert_eq!(n1, cc.delta_0_z.rows);
    let h0_free = n0 - r0;
    let h1_free = n1 - r1 - r0;
    let h2_free = n2 - r1;
    let h1_torsion: Vec<String> = s0.torsion_factors().iter().map(|x| x.to_string()).collect();
    let h2_torsion: Vec<String> = s1.torsion_factors().iter().map(|x| x.to_string()).collect();

    let n = cx.group_order;
    let mut table = Vec::new();
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        let phi = ZPoly::cyclotomic(d);
        let ctx = QuotCtx::new(phi.to_q());
        let b1 = cx.boundary_1.representation_block(d, &ctx);
        let b2 = cx.boundary_2.representation_block(d, &ctx);
        let (v_dim, e_dim) = cx.boundary_1.rep_dims(d);
        let (_, f_dim) = cx.boundary_2.rep_dims(d);
        let rank_d0 = grank(&ctx, &b1);
        let rank_d1 = grank(&ctx, &b2);
        table.push(RepRow {
            divisor: d,
            phi: phi.to_string(),
            phi_degree: phi.deg(),
            dim_c0: v_dim,
            dim_c1: e_dim,
            dim_c2: f_dim,
            rank_delta_0: rank_d0,
            rank_delta_1: rank_d1,
            h0: v_dim - rank_d0,
            h1: e_dim - rank_d1 - rank_d0,
            h2: f_dim - rank_d1,
        });
    }
    let decomposition_h1 = decomposition_string(&table, |r| r.h1);
    let decomposition_h2 = decomposition_string(&table, |r| r.h2);
    CohomologyReport {
        complex: cx.name.clone(),
        h0_free,
        h1_free,
        h2_free,
        h1_torsion,
        h2_torsion,
        representation_table: table,
        decomposition_h1,
        decomposition_h2,
        finite_index_caveat: true,
    }
}

fn decomposition_string(table: &[RepRow], pick: impl Fn(&RepRow) -> usize) -> String {
    let mut parts = Vec::new();
    for row in table {
        let mult = pick(row);
        if mult == 0 {
            continue;
        }
        let summand = format!("Z[t]/({})", row.phi);
        if mult == 1 {
            parts.push(summand);
        } else {
            parts.push(format!("({})^{}", summand, mult));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Direct limit of Z^dim under an integer matrix, with the equality test
/// through the stable kernel.
#[derive(Clone, Debug)]
pub struct LimitGroup {
    pub dim: usize,
    pub map: ZMat,
    pub stable_exponent: usize,
    pub stable_rank: usize,
    stable_power: ZMat,
}

impl LimitGroup {
    pub fn new(map: ZMat) -> LimitGroup {
        assert_eq!(map.rows, map.cols);
        let dim = map.rows;
        let mut e = 0usize;
        let mut cur = ZMat::identity(dim);
        let mut rank = dim;
        loop {
            let next = cur.mul(&map);
            let next_rank = next.rank_q();
            if next_rank == rank && e > 0 {
                break;
            }
            e += 1;
            rank = next_rank;
            cur = next;
            if e > dim + 1 {
                break;
            }
        }
        LimitGroup {
            dim,
            map,
            stable_exponent: e,
            stable_rank: rank,
            stable_power: cur,
        }
    }

    /// [(v, k)] with v in the k-th approximant.
    pub fn element(&self, v: Vec<BigInt>, k: usize) -> LimitElement {
        assert_eq!(v.len(), self.dim);
        LimitElement { v, k }
    }

    /// Shift an element to a deeper approximant: (v, k) ~ (M v, k + 1).
    pub fn shift(&self, e: &LimitElement, to_level: usize) -> LimitElement {
        assert!(to_level >= e.k);
        let mut v = e.v.clone();
        for _ in e.k..to_level {
            v = self.map.mul_vec(&v);
        }
        LimitElement { v, k: to_level }
    }

    pub fn add(&self, a: &LimitElement, b: &LimitElement) -> LimitElement {
        let k = a.k.max(b.k);
        let a = self.shift(a, k);
        let b = self.shift(b, k);
        LimitElement {
            v: a.v.iter().zip(&b.v).map(|(x, y)| x + y).collect(),
            k,
        }
    }

    pub fn neg(&self, a: &LimitElement) -> LimitElement {
        LimitElement {
            v: a.v.iter().map(|x| -x).collect(),
            k: a.k,
        }
    }

    /// [(v,k)] = 0 iff some power of the map kills v; the kernel stabilizes
    /// at the stable exponent, so one exact check decides.
    pub fn is_zero(&self, a: &LimitElement) -> bool {
        let w = self.stable_power.mul_vec(&a.v);
        w.iter().all(|x| x.is_zero())
    }

    pub fn equal(&self, a: &LimitElement, b: &LimitElement) -> bool {
        let k = a.k.max(b.k);
        let a = self.shift(a, k);
        let b = self.shift(b, k);
        self.is_zero(&LimitElement {
            v: a.v.iter().zip(&b.v).map(|(x, y)| x - y).collect(),
            k,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitElement {
    pub v: Vec<BigInt>,
    pub k: usize,
}

/// Presentation of the top cohomology of the tiling space: the direct limit
/// of top cochains modulo the image of the coboundary.
pub struct TopLimitPresentation {
    pub limit: LimitGroup,
    pub delta_1_z: ZMat,
    /// test bound for eventual membership in im(delta)
    pub membership_extra: usize,
}

impl TopLimitPresentation {
    /// [(v,k)] = 0 in H iff some shift lands in im(delta^1). Membership is
    /// monotone under shifting, so bounded search decides up to the
    /// documented bound.
    pub fn class_is_zero(&self, e: &LimitElement) -> bool {
        let bound = self.limit.stable_exponent + self.membership_extra;
        let mut v = e.v.clone();
        for _ in 0..=bound {
            if crate::algebra::solve_integer(&self.delta_1_z, &v).is_some() {
                return true;
            }
            v = self.limit.map.mul_vec(&v);
        }
        false
    }

    pub fn class_equal(&self, a: &LimitElement, b: &LimitElement) -> bool {
        let k = a.k.max(b.k);
        let a = self.limit.shift(a, k);
        let b = self.limit.shift(b, k);
        self.class_is_zero(&LimitElement {
            v: a.v.iter().zip(&b.v).map(|(x, y)| x - y).collect(),
            k,
        })
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub enum LimitBranch {
    /// pullbacks integrally invertible: H*(space) = H*(complex)
    PullbackInvertible,
    /// presented as a direct limit with stable-rank bookkeeping
    Presentation {
        stable_rank: usize,
        stable_exponent: usize,
    },
}

pub struct SpaceCohomology {
    pub complex_report: CohomologyReport,
    pub branch: LimitBranch,
    pub top_limit: TopLimitPresentation,
    /// per-representation stable ranks of the top pullback
    pub top_stable_ranks: Vec<(usize, usize)>,
}

/// Cohomology of the inverse-limit space over a complex: detect whether the
/// pullbacks are integral isomorphisms; either way expose the top-degree
/// direct limit (the order invariant feeds on it).
pub fn limit_cohomology(cx: &APComplex) -> SpaceCohomology {
    let cc = cochain_complex(cx);
    let complex_report = cohomology_groups(cx);
    let det = {
        let m = &cc.pullback_2_z;
        if m.rows == m.cols && m.rows > 0 {
            m.det()
        } else {
            BigInt::zero()
        }
    };
    let s0 = cx.subst_0.expand_z();
    let s1 = cx.subst_1.expand_z();
    let invertible = det.clone().abs().is_one()
        && square_det_abs_one(&s0)
        && square_det_abs_one(&s1);
    let limit = LimitGroup::new(cc.pullback_2_z.clone());
    let branch = if invertible {
        LimitBranch::PullbackInvertible
    } else {
        LimitBranch::Presentation {
            stable_rank: limit.stable_rank,
            stable_exponent: limit.stable_exponent,
        }
    };
    // stable rank of the top pullback per representation
    let mut top_stable_ranks = Vec::new();
    for d in 1..=cx.group_order {
        if cx.group_order % d != 0 {
            continue;
        }
        let ctx = QuotCtx::new(ZPoly::cyclotomic(d).to_q());
        let block = cx.subst_2.representation_block(d, &ctx);
        let mut cur = block.clone();
        let mut r = grank(&ctx, &cur);
        for _ in 0..cur.rows {
            let next = mul_g(&ctx, &cur, &block);
            let nr = grank(&ctx, &next);
            if nr == r {
                break;
            }
            r = nr;
            cur = next;
        }
        top_stable_ranks.push((d, r));
    }
    SpaceCohomology {
        complex_report,
        branch,
        top_limit: TopLimitPresentation {
            limit,
            delta_1_z: cc.delta_1_z.clone(),
            membership_extra: 8,
        },
        top_stable_ranks,
    }
}

fn square_det_abs_one(m: &ZMat) -> bool {
    m.rows == m.cols && (m.rows == 0 || m.det().abs().is_one())
}

fn mul_g(ctx: &QuotCtx, a: &GMat<crate::algebra::QPoly>, b: &GMat<crate::algebra::QPoly>) -> GMat<crate::algebra::QPoly> {
    use crate::algebra::QPoly;
    GMat::from_fn(a.rows, b.cols, |i, j| {
        let mut acc = QPoly::zero();
        for k in 0..a.cols {
            acc = acc.add(&ctx.mul(a.get(i, k), b.get(k, j)));
        }
        acc
    })
}

/// The top cohomology of the all-orientation space: isomorphic (up to
/// finite extensions) to the top cohomology of the rotation-quotient space,
/// whose complex feeds this call.
pub struct AllOrientationTop {
    pub h3_free_rank: usize,
    pub h3_torsion: Vec<String>,
    pub from_complex: String,
    pub finite_extension_caveat: bool,
    pub branch: LimitBranch,
}

pub fn top_cohomology_all_orientation(sigma0: &SpaceCohomology) -> AllOrientationTop {
    AllOrientationTop {
        h3_free_rank: sigma0.complex_report.h2_free,
        h3_torsion: sigma0.complex_report.h2_torsion.clone(),
        from_complex: sigma0.complex_report.complex.clone(),
        finite_extension_caveat: true,
        branch: sigma0.branch.clone(),
    }
}

/// Rational consistency: the free rank over Z must equal the dimension-
/// weighted sum of representation ranks.
pub fn rank_consistency(report: &CohomologyReport) -> bool {
    let weighted = |pick: fn(&RepRow) -> usize| -> usize {
        report
            .representation_table
            .iter()
            .map(|r| r.phi_degree * pick(r))
            .sum()
    };
    weighted(|r| r.h0) == report.h0_free
        && weighted(|r| r.h1) == report.h1_free
        && weighted(|r| r.h2) == report.h2_free
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::APComplex;
    use crate::fixtures;

    fn penrose_cx() -> APComplex {
        APComplex::from_spec(&fixtures::penrose_combinatorial())
    }

    #[test]
    fn penrose_representation_table() {
        let cx = penrose_cx();
        cx.verify().unwrap();
        let rep = cohomology_groups(&cx);
        let row = |d: usize| {
            rep.representation_table
                .iter()
                .find(|r| r.divisor == d)
                .unwrap()
                .clone()
        };
        // t = 1: boundary ranks 2 and 1
        assert_eq!(row(1).rank_delta_1, 2);
        assert_eq!(row(1).rank_delta_0, 1);
        assert_eq!((row(1).h0, row(1).h1, row(1).h2), (1, 1, 2));
        // t = -1: ranks 2 and 2 (the vertex summands contain this rep)
        assert_eq!(row(2).rank_delta_1, 2);
        assert_eq!(row(2).rank_delta_0, 2);
        assert_eq!((row(2).h0, row(2).h1, row(2).h2), (0, 0, 2));
        // Phi_5: delta0 comes from no vertex summand, rank d2 = 4
        assert_eq!(row(5).dim_c0, 0);
        assert_eq!(row(5).rank_delta_1, 4);
        assert_eq!((row(5).h0, row(5).h1, row(5).h2), (0, 0, 0));
        // Phi_10: rank d2 = 3
        assert_eq!(row(10).dim_c0, 0);
        assert_eq!(row(10).rank_delta_1, 3);
        assert_eq!((row(10).h0, row(10).h1, row(10).h2), (0, 1, 1));
    }

    #[test]
    fn penrose_integral_cohomology() {
        let cx = penrose_cx();
        let rep = cohomology_groups(&cx);
        assert_eq!(rep.h0_free, 1);
        assert_eq!(rep.h1_free, 5);
        assert_eq!(rep.h2_free, 8);
        assert!(rank_consistency(&rep));
        assert_eq!(
            rep.decomposition_h2,
            "(Z[t]/(t - 1))^2 + (Z[t]/(t + 1))^2 + Z[t]/(t^4 - t^3 + t^2 - t + 1)"
        );
        assert_eq!(
            rep.decomposition_h1,
            "Z[t]/(t - 1) + Z[t]/(t^4 - t^3 + t^2 - t + 1)"
        );
    }

    #[test]
    fn penrose_pullback_invertible_and_sigma0() {
        let cx = penrose_cx();
        let space = limit_cohomology(&cx);
        assert!(matches!(space.branch, LimitBranch::PullbackInvertible));
        // Sigma_0 = everything at t=1: H2 = Z^2, H1 = H0 = Z
        let z = cx.collapse_to_z();
        z.verify().unwrap();
        let rep0 = cohomology_groups(&z);
        assert_eq!((rep0.h0_free, rep0.h1_free, rep0.h2_free), (1, 1, 2));
        assert!(rep0.h2_torsion.is_empty());
        let space0 = limit_cohomology(&z);
        let top = top_cohomology_all_orientation(&space0);
        assert_eq!(top.h3_free_rank, 2);
        assert!(top.h3_torsion.is_empty());
    }

    #[test]
    fn direct_limit_basics() {
        // Z under multiplication by 2: [(1,k)] = [(2,k+1)], rank 1
        let l = LimitGroup::new(ZMat::from_i64(1, 1, &[2]));
        assert_eq!(l.stable_rank, 1);
        let a = l.element(vec![BigInt::from(1)], 0);
        let b = l.element(vec![BigInt::from(2)], 1);
        assert!(l.equal(&a, &b));
        assert!(!l.equal(&a, &l.element(vec![BigInt::from(3)], 1)));
        // Z under 0: everything dies
        let z = LimitGroup::new(ZMat::from_i64(1, 1, &[0]));
        assert_eq!(z.stable_rank, 0);
        assert!(z.is_zero(&z.element(vec![BigInt::from(7)], 0)));
        // congruence with addition
        let sum = l.add(&a, &b);
        assert!(l.equal(&sum, &l.element(vec![BigInt::from(4)], 1)));
    }
}
