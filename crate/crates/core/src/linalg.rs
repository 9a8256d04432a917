//! Small dense linear algebra over ℚ: row reduction, rank, nullspaces.

use num_traits::Zero;

use crate::rational::Q;

/// Row-reduced echelon form of `rows` (each of length `ncols`).
///
/// Returns the reduced rows (nonzero rows only) and their pivot columns.
pub fn rref(rows: &[Vec<Q>], ncols: usize) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(sel) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, sel);
        let inv = Q::from_integer(1.into()) / &m[r][c];
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vec<Q>], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Basis of `{x : rows · x = 0}` in ℚ^ncols, one vector per free column.
pub fn nullspace(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let (red, pivots) = rref(rows, ncols);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Q::zero(); ncols];
        v[free] = Q::from_integer(1.into());
        for (row, &pc) in red.iter().zip(&pivots) {
            v[pc] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solves `coeffs · basis = target` for the row vectors in `basis`.
///
/// `basis` must be linearly independent; returns `None` if `target` is not in
/// their span.
pub fn solve_combination(basis: &[Vec<Q>], target: &[Q]) -> Option<Vec<Q>> {
    let k = basis.len();
    let n = target.len();
    // Columns of the augmented system are the basis vectors; rows are coordinates.
    let rows: Vec<Vec<Q>> = (0..n)
        .map(|j| {
            let mut row: Vec<Q> = basis.iter().map(|b| b[j].clone()).collect();
            row.push(target[j].clone());
            row
        })
        .collect();
    let (red, pivots) = rref(&rows, k + 1);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![Q::zero(); k];
    for (row, &pc) in red.iter().zip(&pivots) {
        x[pc] = row[k].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, q_frac};

    fn v(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn rref_of_dependent_rows() {
        let rows = vec![v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[0, 1, 1])];
        let (red, piv) = rref(&rows, 3);
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(red, vec![v(&[1, 0, 1]), v(&[0, 1, 1])]);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let rows = vec![v(&[1, 1, 0, 2]), v(&[0, 0, 1, -1])];
        let ns = nullspace(&rows, 4);
        assert_eq!(ns.len(), 2);
        for n in &ns {
            for r in &rows {
                let dot: Q = r.iter().zip(n).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn combination_solve() {
        let basis = vec![v(&[1, 0, 0]), v(&[0, 1, 1]), v(&[2, 0, 1])];
        let x = solve_combination(&basis, &v(&[0, -1, -1])).unwrap();
        assert_eq!(x, v(&[0, -1, 0]));
        let x = solve_combination(&basis, &[q_frac(1, 2), q(0), q(0)]).unwrap();
        assert_eq!(x, vec![q_frac(1, 2), q(0), q(0)]);
        assert!(solve_combination(&basis[..2], &v(&[0, 1, 0])).is_none());
    }
}
