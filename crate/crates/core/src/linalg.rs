//! Dense exact linear algebra over Q(i): reduced row echelon form and the
//! standard consequences (rank, nullspace, solving, inverse). Everything is
//! deterministic; pivoting always picks the first nonzero entry.

use crate::rational::GaussianRational;

pub type ScalarMatrix = Vec<Vec<GaussianRational>>;

/// In-place Gauss-Jordan. Returns the pivot columns.
pub fn rref(mat: &mut ScalarMatrix) -> Vec<usize> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let Some(p) = (r..rows).find(|&rr| !mat[rr][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let inv = mat[r][c].inv().expect("pivot is nonzero");
        for x in mat[r].iter_mut() {
            *x = &*x * &inv;
        }
        for rr in 0..rows {
            if rr != r && !mat[rr][c].is_zero() {
                let f = mat[rr][c].clone();
                for cc in 0..cols {
                    let delta = &mat[r][cc] * &f;
                    mat[rr][cc] -= &delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(mat: &ScalarMatrix) -> usize {
    let mut m = mat.clone();
    rref(&mut m).len()
}

/// Canonical nullspace basis of `mat` (columns = unknowns): one vector per
/// free column, with 1 in the free slot and the pivot rows filled in.
pub fn nullspace(mat: &ScalarMatrix) -> Vec<Vec<GaussianRational>> {
    let cols = if mat.is_empty() { 0 } else { mat[0].len() };
    let mut m = mat.clone();
    let pivots = rref(&mut m);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().cloned().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![GaussianRational::zero(); cols];
        v[free] = GaussianRational::one();
        for (prow, &pcol) in pivots.iter().enumerate() {
            v[pcol] = -&m[prow][free];
        }
        basis.push(v);
    }
    basis
}

/// One solution of `A x = b` if the system is consistent.
pub fn solve(mat: &ScalarMatrix, rhs: &[GaussianRational]) -> Option<Vec<GaussianRational>> {
    let rows = mat.len();
    assert_eq!(rows, rhs.len());
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut aug: ScalarMatrix = mat
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&cols) {
        return None; // pivot in the augmented column: inconsistent
    }
    let mut x = vec![GaussianRational::zero(); cols];
    for (prow, &pcol) in pivots.iter().enumerate() {
        x[pcol] = aug[prow][cols].clone();
    }
    Some(x)
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse(mat: &ScalarMatrix) -> Option<ScalarMatrix> {
    let n = mat.len();
    let mut aug: ScalarMatrix = Vec::with_capacity(n);
    for (r, row) in mat.iter().enumerate() {
        assert_eq!(row.len(), n, "inverse needs a square matrix");
        let mut a = row.clone();
        for c in 0..n {
            a.push(if c == r {
                GaussianRational::one()
            } else {
                GaussianRational::zero()
            });
        }
        aug.push(a);
    }
    let pivots = rref(&mut aug);
    // all n pivots must land in the left block
    if pivots.iter().filter(|&&c| c < n).count() != n {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn mat_mul(a: &ScalarMatrix, b: &ScalarMatrix) -> ScalarMatrix {
    let n = a.len();
    let k = if n == 0 { 0 } else { a[0].len() };
    let m = if b.is_empty() { 0 } else { b[0].len() };
    assert_eq!(k, b.len());
    let mut out = vec![vec![GaussianRational::zero(); m]; n];
    for i in 0..n {
        for j in 0..m {
            let mut acc = GaussianRational::zero();
            for l in 0..k {
                acc += &(&a[i][l] * &b[l][j]);
            }
            out[i][j] = acc;
        }
    }
    out
}

pub fn identity(n: usize) -> ScalarMatrix {
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    if r == c {
                        GaussianRational::one()
                    } else {
                        GaussianRational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn nullspace_vectors_annihilate() {
        let mat = vec![
            vec![q(1), q(2), q(3)],
            vec![q(2), q(4), q(6)],
            vec![q(0), q(1), q(1)],
        ];
        let ns = nullspace(&mat);
        assert_eq!(ns.len(), 1);
        for row in &mat {
            let mut acc = GaussianRational::zero();
            for (a, b) in row.iter().zip(&ns[0]) {
                acc += &(a * b);
            }
            assert!(acc.is_zero());
        }
        assert_eq!(rank(&mat), 2);
    }

    #[test]
    fn solve_and_inverse_agree() {
        let mat = vec![vec![q(2), q(1)], vec![q(1), q(1)]];
        let b = vec![q(3), q(2)];
        let x = solve(&mat, &b).unwrap();
        assert_eq!(x, vec![q(1), q(1)]);
        let inv = inverse(&mat).unwrap();
        assert_eq!(mat_mul(&mat, &inv), identity(2));
        assert!(solve(
            &vec![vec![q(1), q(1)], vec![q(1), q(1)]],
            &[q(0), q(1)]
        )
        .is_none());
    }

    #[test]
    fn complex_entries_are_handled_exactly() {
        let i = GaussianRational::i();
        let mat = vec![vec![q(1), i.clone()], vec![-&i, q(1)]];
        // det = 1 - (-i*i) = 1 - 1 = 0: singular
        assert!(inverse(&mat).is_none());
        assert_eq!(rank(&mat), 1);
    }
}
