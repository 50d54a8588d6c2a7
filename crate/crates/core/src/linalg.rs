//! Fraction-free Gaussian elimination over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Rank of a rational matrix; each row is scaled by the lcm of its
/// denominators first.
pub(crate) fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    let ints = rows
        .iter()
        .map(|row| {
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, q| num_integer::lcm(acc, q.denom().clone()));
            row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
        })
        .collect();
    integer_rank(ints)
}

/// Rank of an integer matrix given by rows.
///
/// Each elimination step replaces `row ← pivot·row − lead·pivot_row` and then
/// divides the row by the gcd of its entries, so every intermediate value
/// stays an integer and entries do not grow without bound.
pub(crate) fn integer_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let pivot = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let lead = rows[r][col].clone();
            let g = pivot.gcd(&lead);
            let (p, l) = (&pivot / &g, &lead / &g);
            let (head, tail) = rows.split_at_mut(r);
            let prow = &head[rank];
            let row = &mut tail[0];
            for c in col..ncols {
                row[c] = &p * &row[c] - &l * &prow[c];
            }
            let content = row.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
            if !content.is_zero() && content.abs() != BigInt::from(1) {
                for v in row.iter_mut() {
                    *v = &*v / &content;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
