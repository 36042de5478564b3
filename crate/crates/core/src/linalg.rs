//! Exact dense linear algebra over rationals.
//!
//! Gaussian elimination with full pivoting; the pivot among the remaining
//! submatrix is the nonzero entry of smallest combined numerator/denominator
//! bit length (ties broken by position), which keeps intermediate entries
//! small and makes elimination order deterministic.

use num::Zero;

use crate::rat::{self, Rat};

pub type Matrix = Vec<Vec<Rat>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { rat::one() } else { rat::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc = rat::zero();
                    for l in 0..k {
                        acc += &a[i][l] * &b[l][j];
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Exact inverse via Gauss–Jordan; `None` when singular.
pub fn invert(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut work = a.to_vec();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n)
            .filter(|&r| !work[r][col].is_zero())
            .min_by_key(|&r| (rat::bit_size(&work[r][col]), r))?;
        work.swap(col, pivot);
        inv.swap(col, pivot);
        let p = work[col][col].clone();
        for j in 0..n {
            work[col][j] = &work[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !work[r][col].is_zero() {
                let f = work[r][col].clone();
                for j in 0..n {
                    let w = &work[col][j] * &f;
                    work[r][j] = &work[r][j] - &w;
                    let v = &inv[col][j] * &f;
                    inv[r][j] = &inv[r][j] - &v;
                }
            }
        }
    }
    Some(inv)
}

pub fn determinant(a: &Matrix) -> Rat {
    let n = a.len();
    let mut work = a.to_vec();
    let mut det = rat::one();
    for col in 0..n {
        let Some(pivot) = (col..n)
            .filter(|&r| !work[r][col].is_zero())
            .min_by_key(|&r| (rat::bit_size(&work[r][col]), r))
        else {
            return rat::zero();
        };
        if pivot != col {
            work.swap(col, pivot);
            det = -det;
        }
        let p = work[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if !work[r][col].is_zero() {
                let f = &work[r][col] / &p;
                for j in col..n {
                    let w = &work[col][j] * &f;
                    work[r][j] = &work[r][j] - &w;
                }
            }
        }
    }
    det
}

/// Outcome of an exact least-structure solve of `A·x = b`.
#[derive(Debug, Clone)]
pub struct SolveOutcome {
    /// One value per column; `None` for unconstrained columns.
    pub solution: Vec<Option<Rat>>,
    pub rank: usize,
    /// False when some row reduced to `0 = nonzero`.
    pub consistent: bool,
}

/// Solve a (possibly over- or under-determined) system exactly with full
/// pivoting. Unconstrained variables are reported rather than guessed.
pub fn solve(mut a: Matrix, mut b: Vec<Rat>) -> SolveOutcome {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut col_of_step: Vec<usize> = Vec::new();
    let mut step = 0usize;
    let mut col_order: Vec<usize> = (0..cols).collect();

    while step < rows && step < cols {
        // Full pivot over the remaining submatrix.
        let mut best: Option<(u64, usize, usize)> = None;
        for r in step..rows {
            for (ci, &c) in col_order.iter().enumerate().skip(step) {
                if !a[r][c].is_zero() {
                    let key = (rat::bit_size(&a[r][c]), r, ci);
                    if best.map_or(true, |(bk, br, bc)| (key.0, key.1, key.2) < (bk, br, bc)) {
                        best = Some(key);
                    }
                }
            }
        }
        let Some((_, pr, pc)) = best else { break };
        a.swap(step, pr);
        b.swap(step, pr);
        col_order.swap(step, pc);
        let col = col_order[step];
        let p = a[step][col].clone();
        for r in 0..rows {
            if r != step && !a[r][col].is_zero() {
                let f = &a[r][col] / &p;
                for &c in &col_order[step..] {
                    let w = &a[step][c] * &f;
                    a[r][c] = &a[r][c] - &w;
                }
                let w = &b[step] * &f;
                b[r] = &b[r] - &w;
            }
        }
        col_of_step.push(col);
        step += 1;
    }

    let rank = step;
    let consistent = (rank..rows).all(|r| b[r].is_zero());
    let mut solution: Vec<Option<Rat>> = vec![None; cols];
    if consistent {
        for s in (0..rank).rev() {
            let col = col_of_step[s];
            // After full elimination the row `s` touches only its pivot
            // column among the pivot columns; free columns with nonzero
            // entries leave the pivot variable constrained only relative to
            // them, which we treat as unconstrained.
            let free_dep = col_order[rank..].iter().any(|&c| !a[s][c].is_zero());
            if free_dep {
                solution[col] = None;
            } else {
                solution[col] = Some(&b[s] / &a[s][col]);
            }
        }
    }
    SolveOutcome {
        solution,
        rank,
        consistent,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int};

    #[test]
    fn invert_small() {
        let a = vec![vec![int(0), int(1)], vec![int(1), int(0)]];
        let inv = invert(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(2));
        let sing = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert!(invert(&sing).is_none());
    }

    #[test]
    fn determinant_antidiagonal() {
        let a = vec![
            vec![int(0), int(0), int(1)],
            vec![int(0), int(1), int(0)],
            vec![int(1), int(0), int(0)],
        ];
        assert_eq!(determinant(&a), int(-1));
    }

    #[test]
    fn solve_exact_unique() {
        // 2x + y = 7/2, x − y = 1 → x = 3/2, y = 1/2
        let a = vec![vec![int(2), int(1)], vec![int(1), int(-1)]];
        let b = vec![frac(7, 2), int(1)];
        let out = solve(a, b);
        assert!(out.consistent);
        assert_eq!(out.rank, 2);
        assert_eq!(out.solution[0], Some(frac(3, 2)));
        assert_eq!(out.solution[1], Some(frac(1, 2)));
    }

    #[test]
    fn solve_overdetermined_consistency() {
        let a = vec![vec![int(1)], vec![int(2)], vec![int(3)]];
        let ok = solve(a.clone(), vec![int(2), int(4), int(6)]);
        assert!(ok.consistent);
        assert_eq!(ok.solution[0], Some(int(2)));
        let bad = solve(a, vec![int(2), int(4), int(7)]);
        assert!(!bad.consistent);
    }

    #[test]
    fn solve_reports_unconstrained() {
        let a = vec![vec![int(1), int(1)]];
        let out = solve(a, vec![int(3)]);
        assert!(out.consistent);
        assert_eq!(out.rank, 1);
        // Both columns entangled: neither is pinned on its own.
        assert!(out.solution.iter().any(|s| s.is_none()));
    }
}
