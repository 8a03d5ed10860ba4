//! Dense elimination at extended precision.

use crate::num;
use rug::Float;

/// Gaussian elimination with complete pivoting.
///
/// Returns the numerical rank (pivots above `tol`) and, when the rank is
/// exactly `cols - 1`, the null vector scaled to unit max-norm.
pub(crate) fn rank_and_null(mut a: Vec<Vec<Float>>, cols: usize, tol: &Float) -> (usize, Option<Vec<Float>>) {
    let rows = a.len();
    let prec = tol.prec();
    let mut perm: Vec<usize> = (0..cols).collect();
    let mut rank = 0;
    for i in 0..rows.min(cols) {
        let (mut pr, mut pc) = (i, i);
        let mut best = num::zero(prec);
        for (r, row) in a.iter().enumerate().skip(i) {
            for (c, v) in row.iter().enumerate().skip(i) {
                if num::cmp_abs(v, &best).is_gt() {
                    best = Float::with_val(prec, v.abs_ref());
                    pr = r;
                    pc = c;
                }
            }
        }
        if best <= *tol {
            break;
        }
        a.swap(i, pr);
        if pc != i {
            for row in a.iter_mut() {
                row.swap(i, pc);
            }
            perm.swap(i, pc);
        }
        let (head, tail) = a.split_at_mut(i + 1);
        let pivot_row = &head[i];
        for row in tail.iter_mut() {
            if row[i].is_zero() {
                continue;
            }
            let f = Float::with_val(prec, &row[i] / &pivot_row[i]);
            for j in i + 1..cols {
                let t = Float::with_val(prec, &f * &pivot_row[j]);
                row[j] -= t;
            }
            row[i] = num::zero(prec);
        }
        rank += 1;
    }
    if rank + 1 != cols {
        return (rank, None);
    }
    let mut x = vec![num::zero(prec); cols];
    x[cols - 1] = num::one(prec);
    for i in (0..rank).rev() {
        let mut s = num::zero(prec);
        for j in i + 1..cols {
            s += Float::with_val(prec, &a[i][j] * &x[j]);
        }
        x[i] = -(s / &a[i][i]);
    }
    let mut v = vec![num::zero(prec); cols];
    for (j, xj) in x.into_iter().enumerate() {
        v[perm[j]] = xj;
    }
    let m = num::max_abs(prec, &v);
    for c in v.iter_mut() {
        *c /= &m;
    }
    (rank, Some(v))
}

/// Solves the square system `a x = b` by partial pivoting; `None` when a pivot
/// falls to `tol` or below.
pub(crate) fn solve(mut a: Vec<Vec<Float>>, mut b: Vec<Float>, tol: &Float) -> Option<Vec<Float>> {
    let n = b.len();
    let prec = tol.prec();
    for i in 0..n {
        let mut pr = i;
        for r in i + 1..n {
            if num::cmp_abs(&a[r][i], &a[pr][i]).is_gt() {
                pr = r;
            }
        }
        if Float::with_val(prec, a[pr][i].abs_ref()) <= *tol {
            return None;
        }
        a.swap(i, pr);
        b.swap(i, pr);
        for r in i + 1..n {
            if a[r][i].is_zero() {
                continue;
            }
            let f = Float::with_val(prec, &a[r][i] / &a[i][i]);
            for j in i + 1..n {
                let t = Float::with_val(prec, &f * &a[i][j]);
                a[r][j] -= t;
            }
            let t = Float::with_val(prec, &f * &b[i]);
            b[r] -= t;
            a[r][i] = num::zero(prec);
        }
    }
    let mut x = vec![num::zero(prec); n];
    for i in (0..n).rev() {
        let mut s = b[i].clone();
        for j in i + 1..n {
            s -= Float::with_val(prec, &a[i][j] * &x[j]);
        }
        x[i] = s / &a[i][i];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[f64]]) -> Vec<Vec<Float>> {
        rows.iter().map(|r| r.iter().map(|&v| Float::with_val(128, v)).collect()).collect()
    }

    #[test]
    fn null_vector_of_full_rank_block() {
        let a = m(&[&[1.0, 2.0, 3.0], &[0.0, 1.0, 1.0]]);
        let tol = Float::with_val(128, 1e-30);
        let (r, v) = rank_and_null(a.clone(), 3, &tol);
        assert_eq!(r, 2);
        let v = v.unwrap();
        for row in &a {
            let mut s = Float::new(128);
            for (x, y) in row.iter().zip(&v) {
                s += Float::with_val(128, x * y);
            }
            assert!(s.abs() < 1e-30);
        }
    }

    #[test]
    fn rank_deficiency_detected() {
        let a = m(&[&[1.0, 2.0, 3.0], &[2.0, 4.0, 6.0]]);
        let (r, v) = rank_and_null(a, 3, &Float::with_val(128, 1e-30));
        assert_eq!(r, 1);
        assert!(v.is_none());
    }

    #[test]
    fn square_solve() {
        let a = m(&[&[0.0, 1.0], &[2.0, 1.0]]);
        let b = vec![Float::with_val(128, 3), Float::with_val(128, 5)];
        let x = solve(a, b, &Float::with_val(128, 1e-30)).unwrap();
        assert_eq!(x[0], 1);
        assert_eq!(x[1], 3);
        let sing = m(&[&[1.0, 1.0], &[1.0, 1.0]]);
        let b = vec![Float::with_val(128, 1), Float::with_val(128, 1)];
        assert!(solve(sing, b, &Float::with_val(128, 1e-30)).is_none());
    }
}
