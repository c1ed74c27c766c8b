//! Boundary matrices of the augmented simplicial chain complex.

use crate::complex::SimplicialComplex;

/// Column-major sparse integer matrix. Each column is sorted by row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols: vec![Vec::new(); cols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols = vec![Vec::new(); self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, a) in col {
                cols[i].push((j, a));
            }
        }
        SparseMatrix {
            rows: self.cols.len(),
            cols,
        }
    }

    pub fn from_dense(a: &[Vec<i64>]) -> Self {
        let rows = a.len();
        let ncols = a.first().map_or(0, Vec::len);
        let mut cols = vec![Vec::new(); ncols];
        for (i, row) in a.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if x != 0 {
                    cols[j].push((i, x));
                }
            }
        }
        SparseMatrix { rows, cols }
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut a = vec![vec![0; self.cols.len()]; self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, x) in col {
                a[i][j] = x;
            }
        }
        a
    }
}

/// `∂_k : C_k → C_{k−1}` for `0 ≤ k ≤ dim`, with `C_{−1}` spanned by the
/// empty face so that `∂_0` is the augmentation.
///
/// Rows and columns follow the lexicographic face order of the complex, and
/// deleting the `j`-th vertex of a sorted simplex carries the sign `(−1)^j`.
pub fn boundary_matrix(k: &SimplicialComplex, dim: i32) -> SparseMatrix {
    let cols_faces = k.faces_of_dim(dim);
    let rows = k.faces_of_dim(dim - 1).len();
    let mut cols = Vec::with_capacity(cols_faces.len());
    for s in cols_faces {
        let mut col = Vec::with_capacity(s.len());
        for j in 0..s.len() {
            let mut t = s.clone();
            t.remove(j);
            let i = k.index_of(&t).expect("closed under subsets");
            col.push((i, if j % 2 == 0 { 1 } else { -1 }));
        }
        col.sort_unstable();
        cols.push(col);
    }
    SparseMatrix { rows, cols }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_squares_to_zero() {
        let t = SimplicialComplex::from_facets(4, vec![vec![0, 1, 2, 3]]).unwrap();
        for d in 1..=3 {
            let a = boundary_matrix(&t, d).to_dense();
            let b = boundary_matrix(&t, d - 1).to_dense();
            for (i, brow) in b.iter().enumerate() {
                for j in 0..a[0].len() {
                    let s: i64 = (0..a.len()).map(|m| brow[m] * a[m][j]).sum();
                    assert_eq!(s, 0, "∂∂ ≠ 0 at ({i},{j}) for d = {d}");
                }
            }
        }
    }

    #[test]
    fn augmentation_row() {
        let t = SimplicialComplex::from_facets(3, vec![vec![0, 1]]).unwrap();
        let a = boundary_matrix(&t, 0);
        assert_eq!(a.rows, 1);
        assert_eq!(a.to_dense(), vec![vec![1, 1, 1]]);
    }

    #[test]
    fn transpose_round_trip() {
        let m = SparseMatrix::from_dense(&[vec![1, 0, 2], vec![0, -3, 0]]);
        assert_eq!(m.transpose().transpose(), m);
        assert_eq!(
            m.transpose().to_dense(),
            vec![vec![1, 0], vec![0, -3], vec![2, 0]]
        );
    }
}
