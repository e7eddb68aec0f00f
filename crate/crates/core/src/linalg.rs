//! Exact integer linear algebra helpers: determinants, rank, and
//! null vectors of (n-1)-row systems. Entries come from exponent
//! vectors (64-bit); all intermediates are 128-bit.

use crate::error::{Error, Result};

fn checked_mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
pub fn determinant(rows: &[Vec<i64>]) -> Result<i128> {
    let n = rows.len();
    debug_assert!(rows.iter().all(|r| r.len() == n));
    if n == 0 {
        // empty product; arises for 1-dimensional ambient space
        return Ok(1);
    }
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&i| m[i][k] != 0) else {
                return Ok(0);
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = checked_mul(m[i][j], m[k][k])?
                    .checked_sub(checked_mul(m[i][k], m[k][j])?)
                    .ok_or(Error::Overflow)?;
                m[i][j] = num / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Ok(sign * m[n - 1][n - 1])
}

/// Rank of an integer matrix by fraction-free elimination.
pub fn rank(rows: &[Vec<i64>]) -> Result<usize> {
    if rows.is_empty() {
        return Ok(0);
    }
    let ncols = rows[0].len();
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        for i in rank + 1..m.len() {
            for j in col + 1..ncols {
                let num = checked_mul(m[i][j], m[rank][col])?
                    .checked_sub(checked_mul(m[i][col], m[rank][j])?)
                    .ok_or(Error::Overflow)?;
                m[i][j] = num / prev;
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    Ok(rank)
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Integer null vector of an `(n-1) x n` system via cofactor expansion:
/// component `j` is `(-1)^j` times the minor obtained by deleting
/// column `j`. Returns `None` when the rows have rank below `n-1`.
pub fn cofactor_null_vector(rows: &[&[i64]], n: usize) -> Result<Option<Vec<i128>>> {
    debug_assert_eq!(rows.len() + 1, n);
    let mut v = Vec::with_capacity(n);
    for j in 0..n {
        let minor: Vec<Vec<i64>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let d = determinant(&minor)?;
        v.push(if j % 2 == 0 { d } else { -d });
    }
    if v.iter().all(|&x| x == 0) {
        return Ok(None);
    }
    Ok(Some(v))
}

/// Reduce an integer vector to primitive form oriented into the
/// non-negative orthant. Returns `None` if no sign choice makes all
/// entries non-negative.
pub fn primitive_nonnegative(v: &[i128]) -> Option<Vec<i64>> {
    let g = v.iter().fold(0i128, |acc, &x| gcd_i128(acc, x));
    if g == 0 {
        return None;
    }
    let reduced: Vec<i128> = v.iter().map(|&x| x / g).collect();
    let flipped: Vec<i128>;
    let oriented = if reduced.iter().any(|&x| x < 0) {
        if reduced.iter().any(|&x| x > 0) {
            return None;
        }
        flipped = reduced.iter().map(|&x| -x).collect();
        &flipped
    } else {
        &reduced
    };
    oriented
        .iter()
        .map(|&x| i64::try_from(x).ok())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(&[vec![8, 0], vec![6, 1]]).unwrap(), 8);
        assert_eq!(determinant(&[vec![1, 2], vec![2, 4]]).unwrap(), 0);
        assert_eq!(
            determinant(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]).unwrap(),
            -3
        );
        // 0x0 determinant is the empty product
        assert_eq!(determinant(&[]).unwrap(), 1);
    }

    #[test]
    fn rank_small() {
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]).unwrap(), 1);
        assert_eq!(rank(&[vec![1, 0], vec![0, 1]]).unwrap(), 2);
        assert_eq!(rank(&[vec![0, 0]]).unwrap(), 0);
    }

    #[test]
    fn null_vector_of_difference() {
        // difference (−2,1) between (6,1) and (8,0) has normal (1,2)
        let rows: Vec<&[i64]> = vec![&[-2, 1]];
        let v = cofactor_null_vector(&rows, 2).unwrap().unwrap();
        let p = primitive_nonnegative(&v).unwrap();
        assert_eq!(p, vec![1, 2]);
    }

    #[test]
    fn orientation_rejects_mixed_sign() {
        assert_eq!(primitive_nonnegative(&[1, -1]), None);
        assert_eq!(primitive_nonnegative(&[-2, -4]), Some(vec![1, 2]));
        assert_eq!(primitive_nonnegative(&[0, 0]), None);
    }
}
