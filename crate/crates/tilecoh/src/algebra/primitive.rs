//! Primitivity of nonnegative integer matrices: some power is entrywise
//! positive. Decided by strong connectivity plus aperiodicity of the
//! support digraph; for small matrices the witnessing power is also found
//! by direct boolean powering (bounded by Wielandt's (n-1)^2 + 1).

use num::Zero;

use super::snf::ZMat;

#[derive(Debug, Clone, serde::Serialize)]
pub struct PrimitivityReport {
    pub primitive: bool,
    /// smallest k with M^k > 0 entrywise, when computed (n <= 12)
    pub witness_power: Option<usize>,
}

pub fn is_primitive(m: &ZMat) -> bool {
    primitivity(m).primitive
}

pub fn primitivity(m: &ZMat) -> PrimitivityReport {
    assert_eq!(m.rows, m.cols, "primitivity needs a square matrix");
    assert!(m.is_nonnegative(), "primitivity contract: nonnegative");
    let n = m.rows;
    if n == 0 {
        return PrimitivityReport {
            primitive: false,
            witness_power: None,
        };
    }
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| !m.get(i, j).is_zero())
                .collect()
        })
        .collect();
    let primitive = strongly_connected(&adj) && period_one(&adj);
    let witness_power = if primitive && n <= 12 {
        let bound = (n - 1) * (n - 1) + 1;
        let mut b: Vec<Vec<bool>> = (0..n)
            .map(|i| (0..n).map(|j| !m.get(i, j).is_zero()).collect())
            .collect();
        let base = b.clone();
        let mut k = 1;
        loop {
            if b.iter().all(|row| row.iter().all(|&x| x)) {
                break Some(k);
            }
            if k > bound {
                break None;
            }
            b = bool_mul(&b, &base);
            k += 1;
        }
    } else {
        None
    };
    PrimitivityReport {
        primitive,
        witness_power,
    }
}

fn bool_mul(a: &[Vec<bool>], b: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).any(|k| a[i][k] && b[k][j]))
                .collect()
        })
        .collect()
}

fn strongly_connected(adj: &[Vec<usize>]) -> bool {
    let n = adj.len();
    let reach = |adj: &[Vec<usize>]| -> Vec<bool> {
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    };
    if !reach(adj).iter().all(|&x| x) {
        return false;
    }
    let mut rev = vec![Vec::new(); n];
    for (i, row) in adj.iter().enumerate() {
        for &j in row {
            rev[j].push(i);
        }
    }
    reach(&rev).iter().all(|&x| x)
}

/// gcd of cycle lengths is 1 (computed from BFS level differences).
fn period_one(adj: &[Vec<usize>]) -> bool {
    let n = adj.len();
    let mut level = vec![i64::MIN; n];
    level[0] = 0;
    let mut queue = std::collections::VecDeque::from([0usize]);
    let mut g: i64 = 0;
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if level[w] == i64::MIN {
                level[w] = level[v] + 1;
                queue.push_back(w);
            } else {
                let d = level[v] + 1 - level[w];
                g = num::integer::gcd(g, d.abs());
            }
        }
    }
    g == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chair_scalar() {
        assert!(is_primitive(&ZMat::from_i64(1, 1, &[4])));
    }

    #[test]
    fn permutation_is_not_primitive() {
        assert!(!is_primitive(&ZMat::from_i64(2, 2, &[0, 1, 1, 0])));
        assert!(!is_primitive(&ZMat::from_i64(
            3,
            3,
            &[0, 1, 0, 0, 0, 1, 1, 0, 0]
        )));
    }

    #[test]
    fn penrose_t1_is_primitive() {
        let m = ZMat::from_i64(4, 4, &[1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 1, 1, 0, 1, 1, 1]);
        let rep = primitivity(&m);
        assert!(rep.primitive);
        assert!(rep.witness_power.is_some());
    }

    #[test]
    fn pinwheel_two_type() {
        let m = ZMat::from_i64(2, 2, &[2, 3, 3, 2]);
        assert!(is_primitive(&m));
        let m23 = ZMat::from_i64(2, 2, &[2, 11, 11, 2]);
        assert!(is_primitive(&m23));
    }

    #[test]
    fn reducible_not_primitive() {
        let m = ZMat::from_i64(2, 2, &[1, 1, 0, 1]);
        assert!(!is_primitive(&m));
    }
}
