//! Exact matrix rank over prime fields and over the rationals.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rank over GF(p) by Gaussian elimination.
pub fn rank_mod_p(mat: &[Vec<i64>], p: u64) -> usize {
    let pi = p as i64;
    let mut rows: Vec<Vec<u64>> = mat
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(pi) as u64).collect())
        .collect();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = inverse_mod(rows[rank][col], p);
        for x in rows[rank][col..].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for (x, &y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = (*x + p - mul_mod(f, y, p)) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2).
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Rank over the rationals, computed exactly.
///
/// Unit pivots are eliminated first in machine integers (a ±1 pivot needs no
/// division). Whatever remains is handed to fraction-free Bareiss elimination
/// over big integers. An overflow in the first phase restarts the whole
/// matrix under Bareiss.
pub fn rank_rational(mat: &[Vec<i64>]) -> usize {
    match unit_pivot_phase(mat) {
        Some((rank, residual)) => {
            rank + bareiss_rank(
                residual
                    .into_iter()
                    .map(|r| r.into_iter().map(BigInt::from).collect())
                    .collect(),
            )
        }
        None => bareiss_rank(
            mat.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        ),
    }
}

fn unit_pivot_phase(mat: &[Vec<i64>]) -> Option<(usize, Vec<Vec<i64>>)> {
    let mut rows: Vec<Vec<i64>> = mat.to_vec();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut row_alive = vec![true; rows.len()];
    let mut col_alive = vec![true; ncols];
    let mut rank = 0;
    loop {
        let pivot = (0..rows.len()).filter(|&r| row_alive[r]).find_map(|r| {
            (0..ncols)
                .find(|&c| col_alive[c] && rows[r][c].abs() == 1)
                .map(|c| (r, c))
        });
        let Some((pr, pc)) = pivot else { break };
        let sign = rows[pr][pc];
        let pivot_row = std::mem::take(&mut rows[pr]);
        for (r, row) in rows.iter_mut().enumerate() {
            if !row_alive[r] || r == pr || row[pc] == 0 {
                continue;
            }
            let f = row[pc].checked_mul(sign)?;
            for c in (0..ncols).filter(|&c| col_alive[c] && pivot_row[c] != 0) {
                row[c] = row[c].checked_sub(f.checked_mul(pivot_row[c])?)?;
            }
        }
        rows[pr] = pivot_row;
        row_alive[pr] = false;
        col_alive[pc] = false;
        rank += 1;
    }
    let residual = rows
        .into_iter()
        .zip(&row_alive)
        .filter(|(_, &alive)| alive)
        .map(|(row, _)| {
            row.into_iter()
                .zip(&col_alive)
                .filter(|(_, &a)| a)
                .map(|(x, _)| x)
                .collect::<Vec<_>>()
        })
        .filter(|row: &Vec<i64>| row.iter().any(|&x| x != 0))
        .collect();
    Some((rank, residual))
}

/// Fraction-free Gaussian elimination; every division is exact.
pub fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..n {
        if rank == m {
            break;
        }
        let Some(piv) = (rank..m).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        for i in rank + 1..m {
            for j in col + 1..n {
                let v = (&a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j]) / &prev;
                a[i][j] = v;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}
