//! Integer polynomial factorization at desk scale (degrees up to ~16).
//!
//! Classical route: reduce mod a good small prime, Berlekamp over F_p,
//! Hensel lift to a power of p past the Mignotte bound, then recombine
//! subsets. Non-monic inputs are monicized by the a^(n-1) f(x/a) transform.

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use super::poly::ZPoly;

/// Irreducible factorization over Z: content is dropped, factors are
/// primitive with positive leading coefficient, with multiplicities.
pub fn factor(f: &ZPoly) -> Vec<(ZPoly, usize)> {
    assert!(!f.is_zero(), "factor of zero polynomial");
    let mut out: Vec<(ZPoly, usize)> = Vec::new();
    let mut rem = f.primitive();
    let sf = rem.squarefree_part();
    for g in factor_squarefree(&sf) {
        let mut mult = 0;
        loop {
            let (q, r) = rem.to_q().divrem(&g.to_q());
            if r.is_zero() {
                rem = q.primitive_z();
                mult += 1;
            } else {
                break;
            }
        }
        debug_assert!(mult >= 1);
        out.push((g, mult));
    }
    debug_assert_eq!(rem.degree(), Some(0));
    out.sort_by(|a, b| (a.0.deg(), &a.0.coeffs).cmp(&(b.0.deg(), &b.0.coeffs)));
    out
}

pub fn is_irreducible(f: &ZPoly) -> bool {
    match f.degree() {
        None | Some(0) => false,
        Some(1) => true,
        _ => {
            if !f.is_squarefree() {
                return false;
            }
            factor_squarefree(&f.primitive()).len() == 1
        }
    }
}

fn factor_squarefree(f: &ZPoly) -> Vec<ZPoly> {
    let n = f.deg();
    if n == 0 {
        return vec![];
    }
    if n == 1 {
        return vec![f.primitive()];
    }
    // pull out x
    if f.coeffs[0].is_zero() {
        let shifted = ZPoly::new(f.coeffs[1..].to_vec());
        let mut out = vec![ZPoly::x()];
        out.extend(factor_squarefree(&shifted));
        return out;
    }
    if f.is_monic() {
        return factor_squarefree_monic(f);
    }
    // monicize: g(x) = a^(n-1) f(x/a) is monic; roots of g are a * roots of f
    let a = f.lc().clone();
    let mut coeffs = Vec::with_capacity(n + 1);
    for (i, c) in f.coeffs.iter().enumerate() {
        if i == n {
            coeffs.push(BigInt::one());
        } else {
            coeffs.push(c * num::pow::pow(a.clone(), n - 1 - i));
        }
    }
    let g = ZPoly::new(coeffs);
    assert!(g.is_monic(), "monicize failed");
    let sub = factor_squarefree_monic(&g);
    sub.iter()
        .map(|h| {
            // map roots back: root(g) = a * root(f); h(x) -> h(a x), primitive
            let mut hh = Vec::with_capacity(h.coeffs.len());
            for (i, c) in h.coeffs.iter().enumerate() {
                hh.push(c * num::pow::pow(a.clone(), i));
            }
            ZPoly::new(hh).primitive()
        })
        .collect()
}

const PRIMES: [u64; 30] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127,
];

fn factor_squarefree_monic(f: &ZPoly) -> Vec<ZPoly> {
    let n = f.deg();
    debug_assert!(f.is_monic());
    if n == 1 {
        return vec![f.clone()];
    }
    // a prime where f stays squarefree
    let mut chosen = None;
    for &p in &PRIMES {
        let fp = reduce_mod(f, p);
        if fp.len() != n + 1 {
            continue; // lc vanished (cannot happen: monic) or degree drop
        }
        let d = modp_gcd(&fp, &modp_derivative(&fp, p), p);
        if modp_deg(&d) == Some(0) {
            chosen = Some(p);
            break;
        }
    }
    let p = chosen.expect("no good prime found for factorization");
    let fp = reduce_mod(f, p);
    let mod_factors = berlekamp(&fp, p);
    if mod_factors.len() == 1 {
        return vec![f.clone()];
    }
    // Mignotte bound for factor coefficients of monic f
    let norm1: BigInt = f.coeffs.iter().map(|c| c.abs()).sum();
    let bound: BigInt = norm1 * BigInt::from(2u32).pow(n as u32 + 1);
    let mut pk = BigInt::from(p);
    let mut k = 1u32;
    while pk <= bound {
        pk = &pk * BigInt::from(p);
        k += 1;
    }
    let _ = k;
    let lifted = hensel_lift_tree(f, &mod_factors, p, &pk);
    recombine(f, lifted, &pk)
}

// ---- F_p polynomial helpers (Vec<u64>, little-endian, trimmed) ----

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn modp_deg(v: &[u64]) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

fn reduce_mod(f: &ZPoly, p: u64) -> Vec<u64> {
    let bp = BigInt::from(p);
    trim(
        f.coeffs
            .iter()
            .map(|c| {
                let mut r = c % &bp;
                if r.is_negative() {
                    r += &bp;
                }
                r.to_string().parse::<u64>().unwrap()
            })
            .collect(),
    )
}

fn modp_add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p
            })
            .collect(),
    )
}

fn modp_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0) % p) % p
            })
            .collect(),
    )
}

fn modp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as u128 + (x as u128) * (y as u128)) % p as u128) as u64;
        }
    }
    trim(out)
}

fn modp_scale(a: &[u64], k: u64, p: u64) -> Vec<u64> {
    trim(a.iter().map(|&x| ((x as u128 * k as u128) % p as u128) as u64).collect())
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // extended euclid
    let (mut t, mut newt) = (0i128, 1i128);
    let (mut r, mut newr) = (p as i128, a as i128 % p as i128);
    while newr != 0 {
        let q = r / newr;
        (t, newt) = (newt, t - q * newt);
        (r, newr) = (newr, r - q * newr);
    }
    assert!(r == 1, "not invertible");
    (((t % p as i128) + p as i128) % p as i128) as u64
}

fn modp_divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let db = modp_deg(b).expect("division by zero");
    let binv = inv_mod(b[db], p);
    let mut r = trim(a.to_vec());
    let mut q = vec![0u64; a.len().saturating_sub(db)];
    while r.len() >= db + 1 {
        let dr = r.len() - 1;
        let f = ((r[dr] as u128 * binv as u128) % p as u128) as u64;
        q[dr - db] = f;
        for (i, &c) in b.iter().enumerate() {
            let idx = dr - db + i;
            let sub = (f as u128 * c as u128) % p as u128;
            r[idx] = ((r[idx] as u128 + p as u128 - sub) % p as u128) as u64;
        }
        r.pop();
        r = trim(r);
    }
    (trim(q), trim(r))
}

fn modp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let (_, r) = modp_divrem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(d) = modp_deg(&a) {
        let inv = inv_mod(a[d], p);
        a = modp_scale(&a, inv, p);
    }
    a
}

fn modp_derivative(a: &[u64], p: u64) -> Vec<u64> {
    if a.len() <= 1 {
        return vec![];
    }
    trim(
        a[1..]
            .iter()
            .enumerate()
            .map(|(i, &c)| ((c as u128 * ((i as u64 + 1) % p) as u128) % p as u128) as u64)
            .collect(),
    )
}

fn modp_powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut b = modp_divrem(base, m, p).1;
    while e > 0 {
        if e & 1 == 1 {
            result = modp_divrem(&modp_mul(&result, &b, p), m, p).1;
        }
        b = modp_divrem(&modp_mul(&b, &b, p), m, p).1;
        e >>= 1;
    }
    result
}

/// Berlekamp factorization of a squarefree monic polynomial over F_p.
fn berlekamp(f: &[u64], p: u64) -> Vec<Vec<u64>> {
    let n = modp_deg(f).unwrap();
    // Q matrix: row i = coeffs of x^{i p} mod f
    let xp = modp_powmod(&[0, 1], p, f, p);
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n);
    let mut cur = vec![1u64];
    for _ in 0..n {
        let mut row = cur.clone();
        row.resize(n, 0);
        rows.push(row);
        cur = modp_divrem(&modp_mul(&cur, &xp, p), f, p).1;
    }
    // nullspace of (Q^T - I)
    let mut m = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in 0..n {
            m[j][i] = rows[i][j];
        }
        m[i][i] = (m[i][i] + p - 1) % p;
    }
    let basis = modp_nullspace(&m, p);
    let r = basis.len();
    if r == 1 {
        return vec![f.to_vec()];
    }
    let mut factors = vec![f.to_vec()];
    for v in basis.iter() {
        if factors.len() == r {
            break;
        }
        let vp = trim(v.clone());
        if modp_deg(&vp).unwrap_or(0) == 0 {
            continue; // constant vector
        }
        let mut next = Vec::new();
        for g in factors.drain(..) {
            if modp_deg(&g) == Some(1) {
                next.push(g);
                continue;
            }
            let mut pieces = Vec::new();
            let mut stem = g.clone();
            for c in 0..p {
                if modp_deg(&stem).unwrap_or(0) == 0 {
                    break;
                }
                let shifted = modp_sub(&vp, &[c], p);
                let d = modp_gcd(&stem, &shifted, p);
                if let Some(dd) = modp_deg(&d) {
                    if dd > 0 {
                        pieces.push(d.clone());
                        stem = modp_divrem(&stem, &d, p).0;
                    }
                }
            }
            if let Some(dd) = modp_deg(&stem) {
                if dd > 0 {
                    pieces.push(stem.clone());
                }
            }
            if pieces.is_empty() {
                pieces.push(g);
            }
            next.extend(pieces);
        }
        factors = next;
    }
    // normalize monic
    factors
        .into_iter()
        .map(|g| {
            let d = modp_deg(&g).unwrap();
            let inv = inv_mod(g[d], p);
            modp_scale(&g, inv, p)
        })
        .collect()
}

fn modp_nullspace(m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let mut a: Vec<Vec<u64>> = m.to_vec();
    let mut pivot_col_of_row = vec![usize::MAX; n];
    let mut row = 0;
    for col in 0..n {
        let mut piv = None;
        for r in row..n {
            if a[r][col] != 0 {
                piv = Some(r);
                break;
            }
        }
        let Some(piv) = piv else { continue };
        a.swap(row, piv);
        let inv = inv_mod(a[row][col], p);
        for j in 0..n {
            a[row][j] = ((a[row][j] as u128 * inv as u128) % p as u128) as u64;
        }
        for r in 0..n {
            if r != row && a[r][col] != 0 {
                let f = a[r][col];
                for j in 0..n {
                    let sub = (f as u128 * a[row][j] as u128) % p as u128;
                    a[r][j] = ((a[r][j] as u128 + p as u128 * p as u128 - sub) % p as u128) as u64;
                }
            }
        }
        pivot_col_of_row[row] = col;
        row += 1;
        if row == n {
            break;
        }
    }
    let pivots: Vec<usize> = pivot_col_of_row[..row].to_vec();
    let mut basis = Vec::new();
    for free in 0..n {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            // v[pc] = -a[r][free]
            v[pc] = (p - a[r][free] % p) % p;
        }
        basis.push(v);
    }
    basis
}

// ---- Hensel lifting over Z/p^k ----

fn bmod(a: &BigInt, m: &BigInt) -> BigInt {
    let mut r = a % m;
    if r.is_negative() {
        r += m;
    }
    r
}

fn zmodpoly_trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn zmod_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = bmod(&(&out[i + j] + x * y), m);
        }
    }
    zmodpoly_trim(out)
}

fn zmod_add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    zmodpoly_trim(
        (0..n)
            .map(|i| {
                bmod(
                    &(a.get(i).cloned().unwrap_or_else(BigInt::zero)
                        + b.get(i).cloned().unwrap_or_else(BigInt::zero)),
                    m,
                )
            })
            .collect(),
    )
}

fn zmod_sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    zmodpoly_trim(
        (0..n)
            .map(|i| {
                bmod(
                    &(a.get(i).cloned().unwrap_or_else(BigInt::zero)
                        - b.get(i).cloned().unwrap_or_else(BigInt::zero)),
                    m,
                )
            })
            .collect(),
    )
}

/// divrem by a monic polynomial over Z/m.
fn zmod_divrem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    let db = b.len() - 1;
    assert!(b[db].is_one());
    let mut r: Vec<BigInt> = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len().saturating_sub(db)];
    while r.len() > db {
        let dr = r.len() - 1;
        let f = r[dr].clone();
        if !f.is_zero() {
            q[dr - db] = f.clone();
            for (i, c) in b.iter().enumerate() {
                let idx = dr - db + i;
                r[idx] = bmod(&(&r[idx] - &f * c), m);
            }
        }
        r.pop();
        r = zmodpoly_trim(r);
        if r.len() <= db {
            break;
        }
    }
    (zmodpoly_trim(q), zmodpoly_trim(r))
}

/// One quadratic Hensel step: f = g h (mod m), sg + th = 1 (mod m), g,h monic.
/// Returns (g', h', s', t') valid mod m^2.
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m: &BigInt,
) -> (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
    let m2 = m * m;
    let e = zmod_sub(f, &zmod_mul(g, h, &m2), &m2);
    let (q, r) = zmod_divrem_monic(&zmod_mul(s, &e, &m2), h, &m2);
    let g1 = zmod_add(&zmod_add(g, &zmod_mul(t, &e, &m2), &m2), &zmod_mul(&q, g, &m2), &m2);
    let h1 = zmod_add(h, &r, &m2);
    let b = zmod_sub(
        &zmod_add(&zmod_mul(s, &g1, &m2), &zmod_mul(t, &h1, &m2), &m2),
        &[BigInt::one()],
        &m2,
    );
    let (c, d) = zmod_divrem_monic(&zmod_mul(s, &b, &m2), &h1, &m2);
    let s1 = zmod_sub(s, &d, &m2);
    let t1 = zmod_sub(
        t,
        &zmod_add(&zmod_mul(t, &b, &m2), &zmod_mul(&c, &g1, &m2), &m2),
        &m2,
    );
    (g1, h1, s1, t1)
}

/// Lift the mod-p factor list of monic f to mod p^k (pk = p^k), recursively.
fn hensel_lift_tree(f: &ZPoly, factors_p: &[Vec<u64>], p: u64, pk: &BigInt) -> Vec<Vec<BigInt>> {
    if factors_p.len() == 1 {
        // f itself mod pk
        return vec![f.coeffs.iter().map(|c| bmod(c, pk)).collect()];
    }
    let mid = factors_p.len() / 2;
    let (left, right) = factors_p.split_at(mid);
    let bp = BigInt::from(p);
    let to_big = |v: &[u64]| -> Vec<BigInt> { v.iter().map(|&x| BigInt::from(x)).collect() };
    let mut g = vec![BigInt::one()];
    for x in left {
        g = zmod_mul(&g, &to_big(x), &bp);
    }
    let mut h = vec![BigInt::one()];
    for x in right {
        h = zmod_mul(&h, &to_big(x), &bp);
    }
    // Bezout mod p via F_p ext-gcd
    let (s0, t0) = modp_ext_gcd(
        &g.iter().map(big_to_u64).collect::<Vec<_>>(),
        &h.iter().map(big_to_u64).collect::<Vec<_>>(),
        p,
    );
    let mut s = s0.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    let mut t = t0.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    let fbig: Vec<BigInt> = f.coeffs.clone();
    let mut m = bp.clone();
    let mut gg = g;
    let mut hh = h;
    while &m < pk {
        let (g1, h1, s1, t1) = hensel_step(&fbig, &gg, &hh, &s, &t, &m);
        gg = g1;
        hh = h1;
        s = s1;
        t = t1;
        m = &m * &m;
    }
    // reduce to pk and recurse on both halves
    let red = |v: &[BigInt]| -> Vec<BigInt> { v.iter().map(|c| bmod(c, pk)).collect() };
    let gz = ZPoly::new(symmetric(&red(&gg), pk));
    let hz = ZPoly::new(symmetric(&red(&hh), pk));
    let mut out = hensel_lift_tree(&gz, left, p, pk);
    out.extend(hensel_lift_tree(&hz, right, p, pk));
    out
}

fn big_to_u64(x: &BigInt) -> u64 {
    x.to_string().parse::<u64>().unwrap()
}

fn modp_ext_gcd(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    // returns (s, t) with s a + t b = 1
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    let (mut s0, mut s1) = (vec![1u64], vec![]);
    let (mut t0, mut t1) = (vec![], vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = modp_divrem(&r0, &r1, p);
        let ns = modp_sub(&s0, &modp_mul(&q, &s1, p), p);
        let nt = modp_sub(&t0, &modp_mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = ns;
        t0 = t1;
        t1 = nt;
    }
    let d = modp_deg(&r0).expect("ext gcd of zero");
    assert_eq!(d, 0, "factors not coprime mod p");
    let inv = inv_mod(r0[0], p);
    (modp_scale(&s0, inv, p), modp_scale(&t0, inv, p))
}

fn symmetric(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let h = m / BigInt::from(2);
    v.iter()
        .map(|c| {
            let r = bmod(c, m);
            if r > h {
                r - m
            } else {
                r
            }
        })
        .collect()
}

fn recombine(f: &ZPoly, lifted: Vec<Vec<BigInt>>, pk: &BigInt) -> Vec<ZPoly> {
    let mut rem = f.clone();
    let mut pool: Vec<Vec<BigInt>> = lifted;
    let mut out = Vec::new();
    let mut size = 1usize;
    while 2 * size <= pool.len() {
        let mut found = true;
        while found && 2 * size <= pool.len() {
            found = false;
            let combos = subsets(pool.len(), size);
            for combo in combos {
                let mut prod = vec![BigInt::one()];
                for &i in &combo {
                    prod = zmod_mul(&prod, &pool[i], pk);
                }
                let cand = ZPoly::new(symmetric(&prod, pk)).primitive();
                if cand.degree() == Some(0) {
                    continue;
                }
                let (q, r) = rem.to_q().divrem(&cand.to_q());
                if r.is_zero() {
                    out.push(cand);
                    rem = q.primitive_z();
                    let keep: Vec<Vec<BigInt>> = pool
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| !combo.contains(i))
                        .map(|(_, v)| v.clone())
                        .collect();
                    pool = keep;
                    found = true;
                    break;
                }
            }
        }
        size += 1;
    }
    if rem.degree().map_or(false, |d| d > 0) {
        out.push(rem);
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_product_of_cyclotomics() {
        let mut xn = vec![-1i64];
        xn.resize(10, 0);
        xn.push(1);
        let f = ZPoly::from_i64(&xn);
        let fs = factor(&f);
        assert_eq!(fs.len(), 4);
        for (_, m) in &fs {
            assert_eq!(*m, 1);
        }
        let expected = ZPoly::factor_xn_minus_1(10);
        for e in expected {
            assert!(fs.iter().any(|(g, _)| *g == e), "missing factor {}", e);
        }
    }

    #[test]
    fn irreducibles_stay_whole() {
        assert!(is_irreducible(&ZPoly::from_i64(&[-1, -1, 1]))); // x^2-x-1
        assert!(is_irreducible(&ZPoly::from_i64(&[5, 0, -5, 0, 1]))); // x^4-5x^2+5
        assert!(is_irreducible(&ZPoly::from_i64(&[1, -3, 1]))); // x^2-3x+1
        assert!(!is_irreducible(&ZPoly::from_i64(&[-1, 0, 1])));
    }

    #[test]
    fn factor_non_monic() {
        // 5x^4 - 6x^2 + 5 (min poly of (2+i)/sqrt5): irreducible over Q
        assert!(is_irreducible(&ZPoly::from_i64(&[5, 0, -6, 0, 5])));
        // (2x-1)(3x+5)
        let f = ZPoly::from_i64(&[-5, 7, 6]);
        let fs = factor(&f);
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().any(|(g, _)| *g == ZPoly::from_i64(&[-1, 2])));
        assert!(fs.iter().any(|(g, _)| *g == ZPoly::from_i64(&[5, 3])));
    }

    #[test]
    fn factor_with_multiplicity() {
        // (x-1)^2 (x^2+1)
        let f = ZPoly::from_i64(&[1, -2, 2, -2, 1]);
        let fs = factor(&f);
        assert!(fs.contains(&(ZPoly::from_i64(&[-1, 1]), 2)));
        assert!(fs.contains(&(ZPoly::from_i64(&[1, 0, 1]), 1)));
    }

    #[test]
    fn factor_big_charpoly_style() {
        // charpoly of penrose subst at t=1 has factor (x^2-3x+1); build (x^2-3x+1)(x^2-x-1)
        let f = ZPoly::from_i64(&[1, -3, 1]).mul(&ZPoly::from_i64(&[-1, -1, 1]));
        let fs = factor(&f);
        assert_eq!(fs.len(), 2);
    }
}
