//! Matrix rank over prime fields and over ℚ, by column reduction.
//!
//! This path shares nothing with the Smith normal form code, so the two can
//! be checked against each other.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::chain::SparseMatrix;

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) is the inverse
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Rank over `GF(p)`. `p` must be a prime below `2^31`.
pub fn rank_mod_p(m: &SparseMatrix, p: u64) -> usize {
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    for col in &m.cols {
        let mut v: Vec<(usize, u64)> = col
            .iter()
            .map(|&(i, a)| (i, a.rem_euclid(p as i64) as u64))
            .filter(|&(_, a)| a != 0)
            .collect();
        while let Some(&(low, a)) = v.last() {
            let Some(piv) = pivots.get(&low) else {
                break;
            };
            // piv is normalised to have 1 at `low`
            v = sub_scaled_mod(&v, piv, a, p);
        }
        if let Some(&(low, a)) = v.last() {
            let inv = inv_mod(a, p);
            for e in v.iter_mut() {
                e.1 = e.1 * inv % p;
            }
            pivots.insert(low, v);
        }
    }
    pivots.len()
}

fn sub_scaled_mod(x: &[(usize, u64)], y: &[(usize, u64)], f: u64, p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push(x[i]);
            i += 1;
        } else if i == x.len() || y[j].0 < x[i].0 {
            out.push((y[j].0, (p - y[j].1 * f % p) % p));
            j += 1;
        } else {
            let v = (x[i].1 + p - y[j].1 * f % p) % p;
            if v != 0 {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank over ℚ using fraction-free elimination with content removal.
pub fn rank_rational(m: &SparseMatrix) -> usize {
    let mut pivots: HashMap<usize, Vec<(usize, BigInt)>> = HashMap::new();
    for col in &m.cols {
        let mut v: Vec<(usize, BigInt)> = col
            .iter()
            .filter(|&&(_, a)| a != 0)
            .map(|&(i, a)| (i, BigInt::from(a)))
            .collect();
        while let Some((low, a)) = v.last().cloned() {
            let Some(piv) = pivots.get(&low) else {
                break;
            };
            let b = &piv.last().expect("pivot column is non-empty").1;
            v = combine(&v, b, piv, &a);
            remove_content(&mut v);
        }
        if let Some(&(low, _)) = v.last() {
            pivots.insert(low, v);
        }
    }
    pivots.len()
}

/// `b·x − a·y`, which cancels the shared lowest entry.
fn combine(x: &[(usize, BigInt)], b: &BigInt, y: &[(usize, BigInt)], a: &BigInt) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push((x[i].0, b * &x[i].1));
            i += 1;
        } else if i == x.len() || y[j].0 < x[i].0 {
            out.push((y[j].0, -(a * &y[j].1)));
            j += 1;
        } else {
            let v = b * &x[i].1 - a * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn remove_content(v: &mut [(usize, BigInt)]) {
    let mut g = BigInt::zero();
    for (_, a) in v.iter() {
        g = g.gcd(a);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() {
        return;
    }
    for (_, a) in v.iter_mut() {
        *a = &*a / &g;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_of_small_matrices() {
        let m = SparseMatrix::from_dense(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(rank_rational(&m), 2);
        assert_eq!(rank_mod_p(&m, 2), 1);
        assert_eq!(rank_mod_p(&m, 3), 1);
        assert_eq!(rank_mod_p(&m, 5), 2);
    }

    #[test]
    fn dependent_columns() {
        let m = SparseMatrix::from_dense(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]);
        assert_eq!(rank_rational(&m), 2);
        assert_eq!(rank_mod_p(&m, 3), 1);
    }

    #[test]
    fn inverse_mod_prime() {
        for p in [2u64, 3, 5, 7, 101] {
            for a in 1..p {
                assert_eq!(a * inv_mod(a, p) % p, 1);
            }
        }
    }
}
