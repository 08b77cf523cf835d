//! Exact matrix rank: fraction-free (Bareiss) elimination over the integers
//! for the rationals, plain elimination modulo `p` for prime fields.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::FieldSpec;

pub fn rank(matrix: &[Vec<i64>], field: FieldSpec) -> usize {
    match field {
        FieldSpec::Rationals => {
            let wide: Vec<Vec<i128>> = matrix
                .iter()
                .map(|row| row.iter().map(|&x| x as i128).collect())
                .collect();
            bareiss_rank_i128(wide).unwrap_or_else(|| bareiss_rank_big(matrix))
        }
        FieldSpec::Prime(p) => rank_mod_p(matrix, p as u64),
    }
}

/// `None` on overflow.
fn bareiss_rank_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][c];
        for i in r + 1..rows {
            let factor = a[i][c];
            for j in c + 1..cols {
                let lhs = pivot.checked_mul(a[i][j])?;
                let rhs = factor.checked_mul(a[r][j])?;
                a[i][j] = lhs.checked_sub(rhs)? / prev;
            }
            a[i][c] = 0;
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

fn bareiss_rank_big(matrix: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][c].clone();
        for i in r + 1..rows {
            let factor = a[i][c].clone();
            for j in c + 1..cols {
                a[i][j] = (&pivot * &a[i][j] - &factor * &a[r][j]) / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn rank_mod_p(matrix: &[Vec<i64>], p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = pow_mod(a[r][c], p - 2, p);
        for j in c..cols {
            a[r][j] = a[r][j] * inv % p;
        }
        for i in r + 1..rows {
            let factor = a[i][c];
            if factor == 0 {
                continue;
            }
            for j in c..cols {
                a[i][j] = (a[i][j] + p - factor * a[r][j] % p) % p;
            }
        }
        r += 1;
    }
    r
}
