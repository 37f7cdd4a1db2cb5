use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Guard, Result};
use crate::graph::Graph;

use super::ryser::{permanent_with, IntMatrix};

/// Largest graph [`perm_polynomial_interpolation`] accepts by default.
pub const INTERPOLATION_MAX_N: usize = 14;

/// The permanental polynomial `per(xI - A(G)) = Σ_k b_k x^{n-k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermPolynomial {
    /// `coeffs[k] = b_k`, the coefficient of `x^{n-k}`.
    coeffs: Vec<BigInt>,
}

impl PermPolynomial {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.first().is_none_or(|b0| !b0.is_one()) {
            return Err(Error::Argument("leading coefficient b_0 must be 1".into()));
        }
        Ok(PermPolynomial { coeffs })
    }

    /// Graph order `n` (the polynomial degree).
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `b_k`, the coefficient of `x^{n-k}`.
    pub fn b(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    /// Multiplicity of the root `x = 0`: `n - max{k : b_k ≠ 0}`.
    pub fn zero_multiplicity(&self) -> usize {
        let top = self
            .coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .expect("b_0 = 1");
        self.degree() - top
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Product of two polynomials (the polynomial of a disjoint union).
    pub fn multiply(&self, other: &PermPolynomial) -> PermPolynomial {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PermPolynomial { coeffs: out }
    }

    /// Whether `(-1)^k b_k >= 0` for every `k`.
    pub fn has_alternating_signs(&self) -> bool {
        self.coeffs.iter().enumerate().all(|(k, c)| {
            if k % 2 == 0 {
                !c.is_negative()
            } else {
                !c.is_positive()
            }
        })
    }
}

impl fmt::Display for PermPolynomial {
    /// Renders e.g. `x^3 + 3x - 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = n - k;
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            if !magnitude.is_one() || power == 0 {
                write!(f, "{magnitude}")?;
            }
            match power {
                0 => {}
                1 => write!(f, "x")?,
                p => write!(f, "x^{p}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `xI - A(G)` evaluated at an integer `x`.
pub fn shifted_adjacency(g: &Graph, x: i64) -> IntMatrix {
    IntMatrix::from_fn(g.n(), |i, j| {
        if i == j {
            BigInt::from(x)
        } else if g.has_edge(i, j) {
            BigInt::from(-1)
        } else {
            BigInt::zero()
        }
    })
}

/// The permanental polynomial from `n + 1` permanent evaluations at
/// `x = 0, 1, ..., n`, solved as a Vandermonde system over the rationals.
pub fn perm_polynomial_interpolation(g: &Graph) -> Result<PermPolynomial> {
    perm_polynomial_interpolation_with(g, Guard::Enforce)
}

pub fn perm_polynomial_interpolation_with(g: &Graph, guard: Guard) -> Result<PermPolynomial> {
    let n = g.n();
    guard.check(
        "permanental polynomial by interpolation",
        n,
        INTERPOLATION_MAX_N,
    )?;
    let values = (0..=n)
        .map(|x| permanent_with(&shifted_adjacency(g, x as i64), guard))
        .collect::<Result<Vec<_>>>()?;
    let nodes: Vec<BigInt> = (0..=n).map(BigInt::from).collect();
    let ascending = solve_vandermonde(&nodes, &values)?;
    // ascending[j] is the coefficient of x^j; b_k is the coefficient of x^{n-k}.
    let coeffs: Vec<BigInt> = ascending.into_iter().rev().collect();
    if !coeffs[0].is_one() {
        return Err(Error::Invariant(format!(
            "interpolated leading coefficient is {} instead of 1",
            coeffs[0]
        )));
    }
    Ok(PermPolynomial { coeffs })
}

/// Solves `Σ_j c_j x_i^j = y_i` exactly by Gaussian elimination over the
/// rationals and checks that every `c_j` is an integer.
fn solve_vandermonde(nodes: &[BigInt], values: &[BigInt]) -> Result<Vec<BigInt>> {
    let size = nodes.len();
    let mut rows: Vec<Vec<BigRational>> = nodes
        .iter()
        .zip(values)
        .map(|(x, y)| {
            let mut row = Vec::with_capacity(size + 1);
            let mut power = BigInt::one();
            for _ in 0..size {
                row.push(BigRational::from_integer(power.clone()));
                power *= x;
            }
            row.push(BigRational::from_integer(y.clone()));
            row
        })
        .collect();

    for col in 0..size {
        let pivot = (col..size)
            .find(|&r| !rows[r][col].is_zero())
            .ok_or_else(|| Error::Invariant("singular Vandermonde system".into()))?;
        rows.swap(col, pivot);
        let inv = rows[col][col].recip();
        for entry in rows[col].iter_mut().skip(col) {
            *entry *= &inv;
        }
        let pivot_row = rows[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (entry, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *entry -= &factor * p;
            }
        }
    }

    rows.into_iter()
        .enumerate()
        .map(|(j, row)| {
            let c = &row[size];
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::Invariant(format!(
                    "coefficient of x^{j} is not an integer: {c}"
                )))
            }
        })
        .collect()
}
