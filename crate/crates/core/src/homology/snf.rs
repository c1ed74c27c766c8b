//! Smith normal form over ℤ.
//!
//! Boundary matrices are mostly ±1, so the bulk of the work is sparse
//! elimination on unit pivots in checked `i64`. Whatever is left (the part
//! that carries torsion, or anything that would overflow) is diagonalised
//! densely over arbitrary-precision integers, always pivoting on the entry
//! of least absolute value.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::chain::SparseMatrix;

/// Rank and invariant factors of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Smith {
    pub rank: usize,
    /// Invariant factors greater than one, each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl Smith {
    pub fn torsion_u64(&self) -> Vec<u64> {
        self.torsion
            .iter()
            .map(|t| u64::try_from(t).expect("torsion coefficient exceeds u64"))
            .collect()
    }
}

struct Overflow;

struct Sparse {
    rows: Vec<Vec<(usize, i64)>>,
    col_rows: Vec<BTreeSet<usize>>,
}

impl Sparse {
    fn new(m: &SparseMatrix) -> Self {
        let mut rows = vec![Vec::new(); m.rows];
        let mut col_rows = vec![BTreeSet::new(); m.ncols()];
        for (j, col) in m.cols.iter().enumerate() {
            for &(i, a) in col {
                if a != 0 {
                    rows[i].push((j, a));
                    col_rows[j].insert(i);
                }
            }
        }
        Sparse { rows, col_rows }
    }

    fn entry(&self, r: usize, c: usize) -> i64 {
        let row = &self.rows[r];
        row.binary_search_by_key(&c, |&(j, _)| j)
            .map(|p| row[p].1)
            .unwrap_or(0)
    }

    /// Clears column `c` using the unit pivot at `(r, c)`, then drops row `r`
    /// and column `c`. Stops early (leaving a valid matrix) on overflow.
    fn eliminate(&mut self, r: usize, c: usize) -> Result<(), Overflow> {
        let pivot = self.entry(r, c);
        debug_assert!(pivot.abs() == 1);
        let others: Vec<usize> = self.col_rows[c].iter().copied().filter(|&i| i != r).collect();
        for r2 in others {
            let f = self.entry(r2, c) * pivot;
            let merged = axpy(&self.rows[r2], &self.rows[r], f).ok_or(Overflow)?;
            for &(j, _) in &self.rows[r2] {
                self.col_rows[j].remove(&r2);
            }
            for &(j, _) in &merged {
                self.col_rows[j].insert(r2);
            }
            self.rows[r2] = merged;
        }
        for &(j, _) in &self.rows[r] {
            self.col_rows[j].remove(&r);
        }
        self.rows[r].clear();
        Ok(())
    }
}

/// `x − f·y` on sorted sparse rows, `None` on overflow.
fn axpy(x: &[(usize, i64)], y: &[(usize, i64)], f: i64) -> Option<Vec<(usize, i64)>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i]);
            i += 1;
        } else if take_y {
            let v = y[j].1.checked_mul(f)?.checked_neg()?;
            if v != 0 {
                out.push((y[j].0, v));
            }
            j += 1;
        } else {
            let v = x[i].1.checked_sub(y[j].1.checked_mul(f)?)?;
            if v != 0 {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

/// Rank and torsion of `m` over ℤ.
pub fn smith(m: &SparseMatrix) -> Smith {
    let mut sp = Sparse::new(m);
    let mut unit_rank = 0;
    'outer: loop {
        let mut progress = false;
        for c in 0..sp.col_rows.len() {
            let pick = sp.col_rows[c]
                .iter()
                .copied()
                .filter(|&r| sp.entry(r, c).abs() == 1)
                .min_by_key(|&r| (sp.rows[r].len(), r));
            if let Some(r) = pick {
                if sp.eliminate(r, c).is_err() {
                    break 'outer;
                }
                unit_rank += 1;
                progress = true;
            }
        }
        if !progress {
            break;
        }
    }
    let live_rows: Vec<usize> = (0..sp.rows.len()).filter(|&r| !sp.rows[r].is_empty()).collect();
    let live_cols: Vec<usize> = (0..sp.col_rows.len())
        .filter(|&c| !sp.col_rows[c].is_empty())
        .collect();
    let mut dense = vec![vec![BigInt::zero(); live_cols.len()]; live_rows.len()];
    for (i, &r) in live_rows.iter().enumerate() {
        for &(c, a) in &sp.rows[r] {
            let j = live_cols.binary_search(&c).expect("live column");
            dense[i][j] = BigInt::from(a);
        }
    }
    let diag = smith_dense(dense);
    let rank = unit_rank + diag.len();
    let torsion = diag.into_iter().filter(|d| !d.is_one()).collect();
    Smith { rank, torsion }
}

/// Nonzero diagonal of the Smith normal form of a dense matrix, normalised
/// so that each entry divides the next.
pub fn smith_dense(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        let Some((pi, pj)) = min_abs(&a, t, t..m, t..n) else {
            break;
        };
        swap_to(&mut a, t, pi, pj);
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let (head, tail) = a.split_at_mut(i);
                for (x, y) in tail[0][t..].iter_mut().zip(&head[t][t..]) {
                    *x -= &q * y;
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a[t..].iter_mut() {
                    let y = row[t].clone();
                    row[j] -= &q * y;
                }
                clean &= a[t][j].is_zero();
            }
            if clean {
                break;
            }
            let col = min_abs(&a, t, t..m, t..t + 1);
            let row = min_abs(&a, t, t..t + 1, t..n);
            let (pi, pj) = match (col, row) {
                (Some(c), Some(r)) => {
                    if a[c.0][c.1].abs() <= a[r.0][r.1].abs() {
                        c
                    } else {
                        r
                    }
                }
                (Some(c), None) => c,
                (None, Some(r)) => r,
                (None, None) => unreachable!("pivot is nonzero"),
            };
            swap_to(&mut a, t, pi, pj);
        }
        diag.push(a[t][t].abs());
    }
    normalize(&mut diag);
    diag
}

fn min_abs(
    a: &[Vec<BigInt>],
    _t: usize,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            let x = &a[i][j];
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
                if x.abs().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

fn swap_to(a: &mut [Vec<BigInt>], t: usize, i: usize, j: usize) {
    a.swap(t, i);
    if j != t {
        for row in a.iter_mut() {
            row.swap(t, j);
        }
    }
}

/// Replaces each pair `(d_i, d_j)` by `(gcd, lcm)` until the list is a
/// divisibility chain.
fn normalize(d: &mut [BigInt]) {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            if g != d[i] {
                let l = d[i].lcm(&d[j]);
                d[i] = g;
                d[j] = l;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(a: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
        a.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn diagonal_is_normalised() {
        let d = smith_dense(big(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(d, vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn known_matrix() {
        // classic example with invariant factors 2, 6, 12
        let a = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        let d = smith_dense(big(&a));
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        let s = smith(&SparseMatrix::from_dense(&a));
        assert_eq!(s.rank, 3);
        assert_eq!(s.torsion_u64(), vec![2, 6, 12]);
    }

    #[test]
    fn sparse_and_dense_agree_on_unimodular_mix() {
        let a = vec![
            vec![1, 1, 0, 0],
            vec![0, 2, 0, 0],
            vec![0, 0, 3, 3],
            vec![1, 3, 0, 0],
        ];
        let s = smith(&SparseMatrix::from_dense(&a));
        let d = smith_dense(big(&a));
        assert_eq!(s.rank, d.len());
        let t: Vec<BigInt> = d.into_iter().filter(|x| !x.is_one()).collect();
        assert_eq!(s.torsion, t);
    }

    #[test]
    fn zero_matrix() {
        let s = smith(&SparseMatrix::zero(3, 4));
        assert_eq!(s.rank, 0);
        assert!(s.torsion.is_empty());
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big_entry = i64::MAX / 2;
        let a = vec![vec![1, big_entry], vec![big_entry, 1]];
        // det = 1 - big² is huge; after the unit pivot the residual overflows
        let s = smith(&SparseMatrix::from_dense(&a));
        assert_eq!(s.rank, 2);
        let det = BigInt::from(big_entry) * BigInt::from(big_entry) - 1;
        assert_eq!(s.torsion, vec![det]);
    }
}
