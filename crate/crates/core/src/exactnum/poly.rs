use alloc::{string::String, vec, vec::Vec};
use core::fmt;

use super::CycNum;
use crate::error::{Error, Result};

/// A univariate polynomial with cyclotomic coefficients, lowest degree first.
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// no coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycPoly {
    coeffs: Vec<CycNum>,
}

impl CycPoly {
    pub fn new(mut coeffs: Vec<CycNum>) -> Self {
        while coeffs.last().is_some_and(CycNum::is_zero) {
            coeffs.pop();
        }
        CycPoly { coeffs }
    }

    pub fn zero() -> Self {
        CycPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: CycNum) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![CycNum::zero(), CycNum::one()])
    }

    /// x^k − c.
    pub fn binomial(k: usize, c: CycNum) -> Self {
        let mut v = vec![CycNum::zero(); k + 1];
        v[0] = -c;
        v[k] = CycNum::one();
        Self::new(v)
    }

    /// Π (x − r) over the given roots.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a CycNum>) -> Self {
        roots.into_iter().fold(Self::constant(CycNum::one()), |acc, r| {
            acc.mul(&Self::new(vec![-r, CycNum::one()]))
        })
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| *c == CycNum::one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = CycNum::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        CycPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut v = vec![CycNum::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] = &v[i + j] + &(a * b);
                }
            }
        }
        Self::new(v)
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(CycNum::one()), |acc, _| acc.mul(self))
    }

    /// Quotient and remainder of Euclidean division.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = d.coeffs[dd].inv()?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![CycNum::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[i + j] = &r[i + j] - &(&c * dj);
            }
            q[i] = c;
        }
        r.truncate(dd);
        Ok((Self::new(q), Self::new(r)))
    }

    /// Exact division; errors if a remainder is left over.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::Precondition("polynomial division leaves a remainder".into()));
        }
        Ok(q)
    }

    pub fn eval(&self, x: &CycNum) -> CycNum {
        self.coeffs.iter().rev().fold(CycNum::zero(), |acc, c| &(&acc * x) + c)
    }
}

impl fmt::Display for CycPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => String::from("x"),
                _ => alloc::format!("x^{k}"),
            };
            let mut cs = alloc::format!("{c}");
            let negative = cs.starts_with('-') && !cs.contains(' ');
            if negative {
                cs.remove(0);
            }
            let compound = cs.contains(' ');
            let body = if k == 0 {
                cs
            } else if cs == "1" {
                mono
            } else if compound {
                alloc::format!("({cs})*{mono}")
            } else {
                alloc::format!("{cs}*{mono}")
            };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        f.write_str(&out)
    }
}
