//! Dense integer matrices and Smith normal form.
//!
//! Sizes here are tiny (lattice ranks up to ~8, relation counts in the tens),
//! so the classical pivot-on-least-absolute-value algorithm is plenty. The
//! reduction runs in `i128` so intermediate entries cannot overflow `i64`
//! inputs at these sizes.

use crate::rational::{rat, Rat};
use alloc::vec;
use alloc::vec::Vec;

pub type IntMat = Vec<Vec<i64>>;

pub fn identity(n: usize) -> IntMat {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn mat_mul(a: &IntMat, b: &IntMat) -> IntMat {
    let n = a.len();
    let k = if n == 0 { 0 } else { a[0].len() };
    let m = if b.is_empty() { 0 } else { b[0].len() };
    debug_assert_eq!(k, b.len());
    let mut out = vec![vec![0i64; m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l] == 0 {
                continue;
            }
            for j in 0..m {
                out[i][j] += a[i][l] * b[l][j];
            }
        }
    }
    out
}

pub fn mat_vec(a: &IntMat, v: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub fn mat_vec_rat(a: &IntMat, v: &[Rat]) -> Vec<Rat> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(&x, y)| rat(x) * y).sum())
        .collect()
}

pub fn transpose(a: &IntMat) -> IntMat {
    let n = a.len();
    let m = if n == 0 { 0 } else { a[0].len() };
    (0..m).map(|j| (0..n).map(|i| a[i][j]).collect()).collect()
}

pub fn mat_eq_identity(a: &IntMat) -> bool {
    a.iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == i64::from(i == j)))
}

/// Result of the Smith normal form reduction `u * a * v = d`.
///
/// `d` is diagonal with `d[0] | d[1] | ...`, entries nonnegative; `u`, `v`
/// are unimodular.
#[derive(Debug, Clone)]
pub struct Smith {
    pub u: IntMat,
    pub v: IntMat,
    /// Diagonal entries of `d` (length = min(rows, cols)).
    pub diag: Vec<i64>,
    pub rows: usize,
    pub cols: usize,
}

impl Smith {
    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|&&d| d != 0).count()
    }
}

pub fn smith_normal_form(a: &IntMat) -> Smith {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<i128>> = a
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let mut u: Vec<Vec<i128>> = (0..rows)
        .map(|i| (0..rows).map(|j| i128::from(i == j)).collect())
        .collect();
    let mut v: Vec<Vec<i128>> = (0..cols)
        .map(|i| (0..cols).map(|j| i128::from(i == j)).collect())
        .collect();

    let n = core::cmp::min(rows, cols);
    let mut t = 0;
    while t < n {
        // locate smallest nonzero entry in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[i][j] != 0
                    && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        u.swap(t, pi);
        if pj != t {
            for row in m.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }
        }
        // clear row and column t
        let mut dirty = false;
        for i in (t + 1)..rows {
            if m[i][t] != 0 {
                let q = m[i][t].div_euclid(m[t][t]);
                for j in 0..cols {
                    m[i][j] -= q * m[t][j];
                }
                for j in 0..rows {
                    u[i][j] -= q * u[t][j];
                }
                if m[i][t] != 0 {
                    dirty = true;
                }
            }
        }
        for j in (t + 1)..cols {
            if m[t][j] != 0 {
                let q = m[t][j].div_euclid(m[t][t]);
                for row in m.iter_mut() {
                    let s = row[t];
                    row[j] -= q * s;
                }
                for row in v.iter_mut() {
                    let s = row[t];
                    row[j] -= q * s;
                }
                if m[t][j] != 0 {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue;
        }
        // divisibility: fold any non-divisible entry into column t
        let mut fixed = true;
        'scan: for i in (t + 1)..rows {
            for j in (t + 1)..cols {
                if m[i][j] % m[t][t] != 0 {
                    for row_j in 0..cols {
                        let s = m[i][row_j];
                        m[t][row_j] += s;
                    }
                    for row_j in 0..rows {
                        let s = u[i][row_j];
                        u[t][row_j] += s;
                    }
                    fixed = false;
                    break 'scan;
                }
            }
        }
        if !fixed {
            continue;
        }
        if m[t][t] < 0 {
            for j in 0..cols {
                m[t][j] = -m[t][j];
            }
            for j in 0..rows {
                u[t][j] = -u[t][j];
            }
        }
        t += 1;
    }

    let small = |x: i128| -> i64 {
        i64::try_from(x).expect("smith normal form entry exceeds i64")
    };
    Smith {
        u: u.iter().map(|r| r.iter().map(|&x| small(x)).collect()).collect(),
        v: v.iter().map(|r| r.iter().map(|&x| small(x)).collect()).collect(),
        diag: (0..n).map(|i| small(m[i][i])).collect(),
        rows,
        cols,
    }
}

/// One integral solution of `a x = b`, if any.
pub fn solve_integer(a: &IntMat, b: &[i64]) -> Option<Vec<i64>> {
    let s = smith_normal_form(a);
    let c = mat_vec(&s.u, b);
    let mut y = vec![0i64; s.cols];
    for (i, &ci) in c.iter().enumerate() {
        let d = if i < s.diag.len() { s.diag[i] } else { 0 };
        if d == 0 {
            if ci != 0 {
                return None;
            }
        } else {
            if ci % d != 0 {
                return None;
            }
            y[i] = ci / d;
        }
    }
    Some(mat_vec(&s.v, &y))
}

/// Integer kernel basis of `a` (columns of `v` past the rank).
pub fn kernel_basis(a: &IntMat) -> Vec<Vec<i64>> {
    let s = smith_normal_form(a);
    let r = s.rank();
    (r..s.cols)
        .map(|j| (0..s.cols).map(|i| s.v[i][j]).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag_of(a: &IntMat) -> Vec<i64> {
        smith_normal_form(a).diag
    }

    #[test]
    fn smith_reconstructs() {
        let a = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]];
        let s = smith_normal_form(&a);
        let uav = mat_mul(&mat_mul(&s.u, &a), &s.v);
        for (i, row) in uav.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                let want = if i == j { s.diag[i] } else { 0 };
                assert_eq!(x, want, "at ({i},{j})");
            }
        }
        // divisibility chain, positivity, and determinant preservation
        assert!(s.diag.iter().all(|&d| d >= 0));
        for w in s.diag.windows(2) {
            if w[0] != 0 {
                assert_eq!(w[1] % w[0], 0);
            }
        }
        let product: i64 = s.diag.iter().product();
        assert_eq!(product, 624); // |det a|
    }

    #[test]
    fn smith_divisibility_chain() {
        let a = vec![vec![-6, 111, -36, 6], vec![5, -672, 210, 74], vec![0, -255, 81, 24], vec![-7, 255, -81, -10]];
        let d = diag_of(&a);
        assert_eq!(d, vec![1, 3, 21, 0]);
    }

    #[test]
    fn integer_solve() {
        let a = vec![vec![2, 0], vec![0, 3]];
        assert_eq!(solve_integer(&a, &[4, 9]), Some(vec![2, 3]));
        assert_eq!(solve_integer(&a, &[1, 0]), None);
        let swap_minus = vec![vec![1, -1], vec![-1, 1]];
        assert!(solve_integer(&swap_minus, &[1, -1]).is_some());
        assert!(solve_integer(&swap_minus, &[1, 0]).is_none());
    }

    #[test]
    fn kernel() {
        let a = vec![vec![1, 1, 1]];
        let k = kernel_basis(&a);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(v.iter().sum::<i64>(), 0);
        }
    }
}
