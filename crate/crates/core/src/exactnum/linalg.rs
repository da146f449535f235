//! Exact Gaussian elimination over the rationals.

use alloc::vec::Vec;
use num_traits::{One, Zero};

use super::Rational;

/// Solves `a · x = b_j` for every right-hand side `b_j` at once.
///
/// `a` is given row-major with `m` rows and `k` columns, `m ≥ k`. The system
/// must have full column rank; an overdetermined system is accepted as long
/// as it is consistent. Returns `None` if the rank is deficient or some
/// right-hand side is inconsistent.
pub fn solve_multi(a: &[Vec<Rational>], rhs: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let m = a.len();
    let k = a.first().map_or(0, Vec::len);
    let r = rhs.len();
    if rhs.iter().any(|b| b.len() != m) || m < k {
        return None;
    }
    // augmented rows: [a_i | b_1[i] ... b_r[i]]
    let mut rows: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row = a[i].clone();
            row.extend(rhs.iter().map(|b| b[i].clone()));
            row
        })
        .collect();
    for col in 0..k {
        let pivot = (col..m).find(|&i| !rows[i][col].is_zero())?;
        rows.swap(col, pivot);
        let inv = Rational::one() / &rows[col][col];
        for x in rows[col].iter_mut().skip(col) {
            *x *= &inv;
        }
        let prow = rows[col].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == col {
                continue;
            }
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(prow.iter()).skip(col) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
    }
    if rows[k..].iter().any(|row| row[k..].iter().any(|x| !x.is_zero())) {
        return None;
    }
    Some((0..r).map(|j| (0..k).map(|i| rows[i][k + j].clone()).collect()).collect())
}

pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    solve_multi(a, &[b.to_vec()]).map(|mut v| v.pop().unwrap_or_default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    #[test]
    fn solves_square_system() {
        let a = vec![vec![q(2), q(1)], vec![q(1), q(3)]];
        let x = solve(&a, &[q(5), q(10)]).unwrap();
        assert_eq!(x, vec![q(1), q(3)]);
    }

    #[test]
    fn rejects_inconsistent_overdetermined() {
        let a = vec![vec![q(1)], vec![q(2)]];
        assert!(solve(&a, &[q(1), q(2)]).is_some());
        assert!(solve(&a, &[q(1), q(3)]).is_none());
    }

    #[test]
    fn rejects_singular() {
        let a = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert!(solve(&a, &[q(1), q(2)]).is_none());
    }
}
