//! Exact rational scalars and vectors.

use alloc::vec::Vec;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

/// The scalar type used for all rational arithmetic.
pub type Rat = Ratio<i64>;

/// Shorthand for an integral rational.
pub fn rat(n: i64) -> Rat {
    Ratio::from_integer(n)
}

/// `n/d`, reduced.
pub fn ratio(n: i64, d: i64) -> Rat {
    Ratio::new(n, d)
}

pub fn to_rat_vec(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat(x)).collect()
}

pub fn add_vec(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(c: Rat, a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| c * x).collect()
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_iq(a: &[i64], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(&x, y)| rat(x) * y).sum()
}

pub fn dot_ii(a: &[i64], b: &[i64]) -> i64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn is_zero_vec(a: &[Rat]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Ceiling of a rational.
pub fn ceil(x: Rat) -> i64 {
    x.ceil().to_integer()
}

/// Floor of a rational.
pub fn floor(x: Rat) -> i64 {
    x.floor().to_integer()
}

/// True if `x` is an integer.
pub fn is_integer(x: Rat) -> bool {
    x.is_integer()
}

/// Exact rational Gaussian elimination; returns the rank of the matrix
/// (rows of rational vectors).
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    let mut col = 0;
    while rank < nrows && col < ncols {
        // find pivot
        let mut piv = None;
        for (r, row) in m.iter().enumerate().skip(rank) {
            if !row[col].is_zero() {
                piv = Some(r);
                break;
            }
        }
        if let Some(p) = piv {
            m.swap(rank, p);
            let inv = rat(1) / m[rank][col];
            for c in col..ncols {
                m[rank][c] = m[rank][c] * inv;
            }
            for r in 0..nrows {
                if r != rank && !m[r][col].is_zero() {
                    let f = m[r][col];
                    for c in col..ncols {
                        let s = m[rank][c];
                        m[r][c] = m[r][c] - f * s;
                    }
                }
            }
            rank += 1;
        }
        col += 1;
    }
    rank
}

/// Solve `A x = b` exactly over the rationals (A given by rows).
/// Returns one solution if the system is consistent.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let nrows = a.len();
    debug_assert_eq!(nrows, b.len());
    let ncols = if nrows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            let mut r = row.clone();
            r.push(rhs);
            r
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let mut piv = None;
        for (r, row) in m.iter().enumerate().skip(rank) {
            if !row[col].is_zero() {
                piv = Some(r);
                break;
            }
        }
        let Some(p) = piv else { continue };
        m.swap(rank, p);
        let inv = rat(1) / m[rank][col];
        for c in col..=ncols {
            m[rank][c] = m[rank][c] * inv;
        }
        for r in 0..nrows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in col..=ncols {
                    let s = m[rank][c];
                    m[r][c] = m[r][c] - f * s;
                }
            }
        }
        pivots.push((rank, col));
        rank += 1;
    }
    // inconsistent?
    for row in m.iter().skip(rank) {
        if !row[ncols].is_zero() {
            return None;
        }
    }
    let mut x = alloc::vec![Rat::zero(); ncols];
    for &(r, c) in &pivots {
        x[c] = m[r][ncols];
    }
    Some(x)
}

/// Fractional part in `[0, 1)`.
pub fn fract_up(x: Rat) -> Rat {
    x - rat(floor(x))
}

/// |x|
pub fn abs(x: Rat) -> Rat {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_solve() {
        let a = vec![
            vec![rat(1), rat(2)],
            vec![rat(2), rat(4)],
            vec![rat(0), rat(1)],
        ];
        assert_eq!(rank(&a), 2);
        let b = vec![rat(3), rat(6), rat(1)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(x, vec![rat(1), rat(1)]);
        assert!(solve(&a, &[rat(3), rat(7), rat(1)]).is_none());
    }

    #[test]
    fn rounding() {
        assert_eq!(ceil(ratio(1, 2)), 1);
        assert_eq!(ceil(ratio(-1, 2)), 0);
        assert_eq!(floor(ratio(4, 3)), 1);
        assert_eq!(fract_up(ratio(-1, 2)), ratio(1, 2));
    }
}
