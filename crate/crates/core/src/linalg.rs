//! Exact integer linear algebra: rank, determinant, unitriangular inverses.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};

fn gcd_i128(a: i128, b: i128) -> i128 {
    a.gcd(&b)
}

fn rank_i128(rows: &[Vec<i64>]) -> Option<usize> {
    let mut basis: Vec<(usize, Vec<i128>)> = Vec::new();
    for row in rows {
        let mut r: Vec<i128> = row.iter().map(|&v| v as i128).collect();
        for (p, b) in &basis {
            let rp = r[*p];
            if rp == 0 {
                continue;
            }
            let g = gcd_i128(b[*p], rp);
            let (fb, fr) = (b[*p] / g, rp / g);
            for (x, y) in r.iter_mut().zip(b) {
                *x = x.checked_mul(fb)?.checked_sub(y.checked_mul(fr)?)?;
            }
            let g = r.iter().fold(0i128, |g, &v| gcd_i128(g, v));
            if g > 1 {
                r.iter_mut().for_each(|v| *v /= g);
            }
        }
        if let Some(p) = r.iter().position(|&v| v != 0) {
            basis.push((p, r));
        }
    }
    Some(basis.len())
}

fn rank_big(rows: &[Vec<i64>]) -> usize {
    let mut basis: Vec<(usize, Vec<BigInt>)> = Vec::new();
    for row in rows {
        let mut r: Vec<BigInt> = row.iter().map(|&v| BigInt::from(v)).collect();
        for (p, b) in &basis {
            if r[*p].is_zero() {
                continue;
            }
            let g = b[*p].gcd(&r[*p]);
            let (fb, fr) = (&b[*p] / &g, &r[*p] / &g);
            for (x, y) in r.iter_mut().zip(b) {
                *x = &*x * &fb - y * &fr;
            }
            let g = r.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
            if g > BigInt::from(1) {
                r.iter_mut().for_each(|v| *v = &*v / &g);
            }
        }
        if let Some(p) = r.iter().position(|v| !v.is_zero()) {
            basis.push((p, r));
        }
    }
    basis.len()
}

/// Rank over Q of an integer matrix (fraction-free elimination).
pub fn rank(rows: &[Vec<i64>]) -> usize {
    rank_i128(rows).unwrap_or_else(|| rank_big(rows))
}

/// Determinant by Bareiss elimination.
pub fn determinant(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> =
        m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let mut sign = 1;
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::from(1);
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

pub fn is_upper_unitriangular(m: &[Vec<i64>]) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(j, &v)| match i.cmp(&j) {
            std::cmp::Ordering::Equal => v == 1,
            std::cmp::Ordering::Greater => v == 0,
            std::cmp::Ordering::Less => true,
        })
    })
}

/// Inverse of an upper unitriangular integer matrix by back substitution.
pub fn unitriangular_inverse(m: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    if !is_upper_unitriangular(m) {
        return Err(Error::Usage("matrix is not upper unitriangular".into()));
    }
    let n = m.len();
    let mut inv = vec![vec![0i64; n]; n];
    for j in 0..n {
        inv[j][j] = 1;
        for i in (0..j).rev() {
            let mut s: i64 = 0;
            for k in i + 1..=j {
                s = s
                    .checked_add(m[i][k].checked_mul(inv[k][j]).ok_or_else(overflow)?)
                    .ok_or_else(overflow)?;
            }
            inv[i][j] = -s;
        }
    }
    Ok(inv)
}

fn overflow() -> Error {
    Error::Invariant("integer overflow in matrix inverse".into())
}

pub fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let (n, k, m) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    let mut out = vec![vec![0; m]; n];
    for i in 0..n {
        for t in 0..k {
            if a[i][t] == 0 {
                continue;
            }
            for j in 0..m {
                out[i][j] += a[i][t] * b[t][j];
            }
        }
    }
    out
}

pub fn is_identity(m: &[Vec<i64>]) -> bool {
    m.iter()
        .enumerate()
        .all(|(i, r)| r.iter().enumerate().all(|(j, &v)| v == i64::from(i == j)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![1, 2], vec![3, 4], vec![5, 6]]), 2);
        assert_eq!(rank(&[vec![0, 0]]), 0);
    }

    #[test]
    fn big_entries_fall_back() {
        let big = i64::MAX / 3;
        let rows = vec![vec![big, big - 1, 7], vec![big - 5, big, 11], vec![1, 1, 1]];
        assert_eq!(rank(&rows), rank_big(&rows));
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&[vec![2, 1], vec![1, 2]]), BigInt::from(3));
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        let h2 = vec![vec![1, 1], vec![1, -1]];
        assert_eq!(determinant(&h2), BigInt::from(-2));
    }

    #[test]
    fn unitriangular_round_trip() {
        let m = vec![vec![1, 2, 3], vec![0, 1, 4], vec![0, 0, 1]];
        let inv = unitriangular_inverse(&m).unwrap();
        assert!(is_identity(&matmul(&m, &inv)));
        assert!(unitriangular_inverse(&[vec![2]]).is_err());
    }

    proptest! {
        #[test]
        fn rank_matches_bigint(rows in proptest::collection::vec(proptest::collection::vec(-5i64..5, 6), 1..8)) {
            prop_assert_eq!(rank(&rows), rank_big(&rows));
            prop_assert!(rank(&rows) <= rows.len().min(6));
        }

        #[test]
        fn triangular_det_is_diagonal_product(d in proptest::collection::vec(-4i64..5, 1..6), seed in 0i64..100) {
            let n = d.len();
            let m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| {
                if i == j { d[i] } else if i < j { (seed + (i * 7 + j) as i64) % 5 } else { 0 }
            }).collect()).collect();
            let want: i64 = d.iter().product();
            prop_assert_eq!(determinant(&m), BigInt::from(want));
        }
    }
}
