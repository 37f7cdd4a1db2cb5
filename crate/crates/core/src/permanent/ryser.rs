//! Exact permanents by Ryser's inclusion–exclusion formula,
//!
//! `per(A) = (-1)^n Σ_{S ⊆ cols} (-1)^{|S|} Π_i Σ_{j ∈ S} a_ij`,
//!
//! walking the column subsets in Gray-code order so each step changes one
//! column and updates the row sums in `O(n)`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Guard, Result};

/// Largest matrix side [`permanent`] accepts by default.
pub const RYSER_MAX_SIDE: usize = 24;

/// A dense square matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    side: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let side = rows.len();
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != side) {
            return Err(Error::Argument(format!(
                "matrix is not square: row {i} has {} entries, expected {side}",
                row.len()
            )));
        }
        Ok(IntMatrix {
            side,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(side: usize, f: impl Fn(usize, usize) -> BigInt) -> Self {
        let entries = (0..side * side).map(|k| f(k / side, k % side)).collect();
        IntMatrix { side, entries }
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.side + j]
    }
}

/// The permanent of `m`; the empty matrix has permanent 1.
pub fn permanent(m: &IntMatrix) -> Result<BigInt> {
    permanent_with(m, Guard::Enforce)
}

pub fn permanent_with(m: &IntMatrix, guard: Guard) -> Result<BigInt> {
    let n = m.side;
    guard.check("Ryser permanent", n, RYSER_MAX_SIDE)?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    if n >= usize::BITS as usize {
        return Err(Error::UnsupportedSize(format!("matrix side {n} too large")));
    }
    // Row sums stay in i64 when every entry is small enough that n of them
    // cannot overflow; products and the running total spill to BigInt only
    // when the i128 arithmetic overflows.
    let limit = i64::MAX / n as i64;
    let small: Option<Vec<i64>> = m
        .entries
        .iter()
        .map(|e| e.to_i64().filter(|v| v.abs() <= limit))
        .collect();
    match small {
        Some(entries) => Ok(ryser_small(n, &entries)),
        None => Ok(ryser_big(n, &m.entries)),
    }
}

fn ryser_small(n: usize, a: &[i64]) -> BigInt {
    let mut row_sums = vec![0i64; n];
    let mut in_set = vec![false; n];
    let mut fast_total: i128 = 0;
    let mut big_total = BigInt::zero();
    for k in 1u64..(1u64 << n) {
        let j = k.trailing_zeros() as usize;
        in_set[j] = !in_set[j];
        if in_set[j] {
            for i in 0..n {
                row_sums[i] += a[i * n + j];
            }
        } else {
            for i in 0..n {
                row_sums[i] -= a[i * n + j];
            }
        }
        // |S| parity follows the Gray code: popcount of k ^ (k >> 1).
        let size = (k ^ (k >> 1)).count_ones() as usize;
        let negative = (n - size) % 2 == 1;

        let mut product: Option<i128> = Some(1);
        for &s in &row_sums {
            if s == 0 {
                product = Some(0);
                break;
            }
            product = product.and_then(|p| p.checked_mul(s as i128));
            if product.is_none() {
                break;
            }
        }
        match product {
            Some(0) => {}
            Some(p) => {
                let p = if negative { -p } else { p };
                match fast_total.checked_add(p) {
                    Some(t) => fast_total = t,
                    None => {
                        big_total += BigInt::from(fast_total);
                        fast_total = p;
                    }
                }
            }
            None => {
                let p: BigInt = row_sums.iter().map(|&s| BigInt::from(s)).product();
                if negative {
                    big_total -= p;
                } else {
                    big_total += p;
                }
            }
        }
    }
    big_total + BigInt::from(fast_total)
}

fn ryser_big(n: usize, a: &[BigInt]) -> BigInt {
    let mut row_sums = vec![BigInt::zero(); n];
    let mut in_set = vec![false; n];
    let mut total = BigInt::zero();
    for k in 1u64..(1u64 << n) {
        let j = k.trailing_zeros() as usize;
        in_set[j] = !in_set[j];
        for i in 0..n {
            if in_set[j] {
                row_sums[i] += &a[i * n + j];
            } else {
                row_sums[i] -= &a[i * n + j];
            }
        }
        let size = (k ^ (k >> 1)).count_ones() as usize;
        let p: BigInt = row_sums.iter().product();
        if (n - size) % 2 == 1 {
            total -= p;
        } else {
            total += p;
        }
    }
    total
}
