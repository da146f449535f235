use alloc::{collections::BTreeMap, vec, vec::Vec};
use core::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{linalg, Rational};
use crate::partitions::{odd_partitions, strict_partitions, Partition, StrictPartition};

/// A homogeneous element of Q[p_1, p_3, p_5, …] in the power-sum basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPolynomial {
    degree: u32,
    coeffs: BTreeMap<Partition, Rational>,
}

impl QPolynomial {
    pub fn one() -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(Partition::empty(), Rational::one());
        QPolynomial { degree: 0, coeffs }
    }

    pub fn zero(degree: u32) -> Self {
        QPolynomial { degree, coeffs: BTreeMap::new() }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Rational> {
        &self.coeffs
    }

    /// Coefficient of p_α.
    pub fn coeff(&self, alpha: &Partition) -> Rational {
        self.coeffs.get(alpha).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "adding inhomogeneous Q-polynomials");
        let mut coeffs = self.coeffs.clone();
        for (k, v) in &other.coeffs {
            let e = coeffs.entry(k.clone()).or_insert_with(Rational::zero);
            *e += v;
        }
        coeffs.retain(|_, v| !v.is_zero());
        QPolynomial { degree: self.degree, coeffs }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let coeffs = if q.is_zero() {
            BTreeMap::new()
        } else {
            self.coeffs.iter().map(|(k, v)| (k.clone(), v * q)).collect()
        };
        QPolynomial { degree: self.degree, coeffs }
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, other: &QPolynomial) -> QPolynomial {
        let mut coeffs: BTreeMap<Partition, Rational> = BTreeMap::new();
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                let e = coeffs.entry(a.union(b)).or_insert_with(Rational::zero);
                *e += x * y;
            }
        }
        coeffs.retain(|_, v| !v.is_zero());
        QPolynomial { degree: self.degree + other.degree, coeffs }
    }
}

/// q_r, the coefficient of t^r in exp(Σ_{k odd} 2 p_k t^k / k):
/// q_r = Σ_{α ∈ OP_r} 2^{ℓ(α)} / z_α · p_α.
pub fn q_row(r: u32) -> QPolynomial {
    let coeffs = odd_partitions(r)
        .into_iter()
        .map(|alpha| {
            let c = Rational::new(BigInt::one() << alpha.len(), BigInt::from(alpha.z()));
            (alpha, c)
        })
        .collect();
    QPolynomial { degree: r, coeffs }
}

/// Q_{(r,s)} = q_r q_s + 2 Σ_{i=1}^{s} (−1)^i q_{r+i} q_{s−i}.
fn q_two_row(r: u32, s: u32) -> QPolynomial {
    let mut acc = &q_row(r) * &q_row(s);
    for i in 1..=s {
        let sign = if i % 2 == 0 { 2 } else { -2 };
        acc = acc.add(&(&q_row(r + i) * &q_row(s - i)).scale(&Rational::from_integer(sign.into())));
    }
    acc
}

/// Schur's Q-function Q_λ as the Pfaffian of the two-row functions
/// (a zero part is appended when ℓ(λ) is odd, with Q_{(r,0)} = q_r).
pub fn q_function(lambda: &StrictPartition) -> QPolynomial {
    let mut parts = lambda.parts().to_vec();
    if parts.len() % 2 == 1 {
        parts.push(0);
    }
    let m = parts.len();
    let mut table: Vec<Vec<Option<QPolynomial>>> = vec![vec![None; m]; m];
    for a in 0..m {
        for b in a + 1..m {
            table[a][b] = Some(q_two_row(parts[a], parts[b]));
        }
    }
    let idx: Vec<usize> = (0..m).collect();
    pfaffian(&table, &idx, lambda.n())
}

fn pfaffian(t: &[Vec<Option<QPolynomial>>], idx: &[usize], degree: u32) -> QPolynomial {
    if idx.is_empty() {
        return QPolynomial::one();
    }
    let mut acc = QPolynomial::zero(degree);
    let first = idx[0];
    for j in 1..idx.len() {
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&x| x != idx[j]).collect();
        let entry = t[first][idx[j]].as_ref().expect("upper-triangular entry");
        let minor = pfaffian(t, &rest, degree - entry.degree);
        let term = entry * &minor;
        let term = if j % 2 == 1 { term } else { term.scale(&-Rational::one()) };
        acc = acc.add(&term);
    }
    acc
}

/// Coordinates of Q_μ·Q_ν in the basis {Q_λ : λ ∈ DP_n}.
pub fn q_product_expansion(mu: &StrictPartition, nu: &StrictPartition) -> Result<BTreeMap<StrictPartition, Rational>> {
    let n = mu.n() + nu.n();
    let basis = strict_partitions(n);
    let rows = odd_partitions(n);
    let qs: Vec<QPolynomial> = basis.iter().map(q_function).collect();
    let matrix: Vec<Vec<Rational>> = rows.iter().map(|a| qs.iter().map(|q| q.coeff(a)).collect()).collect();
    let prod = &q_function(mu) * &q_function(nu);
    let rhs: Vec<Rational> = rows.iter().map(|a| prod.coeff(a)).collect();
    let x = linalg::solve(&matrix, &rhs)
        .ok_or_else(|| Error::Internal(alloc::format!("Q_{mu}·Q_{nu} is not in the span of the Q_λ")))?;
    Ok(basis.into_iter().zip(x).filter(|(_, c)| !c.is_zero()).collect())
}

/// The coefficient of Q_λ in Q_μ·Q_ν.
pub fn q_structure_constant(mu: &StrictPartition, nu: &StrictPartition, lambda: &StrictPartition) -> Result<Rational> {
    if mu.n() + nu.n() != lambda.n() {
        return Err(Error::Precondition(alloc::format!("|{mu}| + |{nu}| ≠ |{lambda}|")));
    }
    Ok(q_product_expansion(mu, nu)?.remove(lambda).unwrap_or_else(Rational::zero))
}

/// The power of 2 relating the two paths:
/// (Q_μ Q_ν : Q_λ) = 2^{ℓ(μ)+ℓ(ν)−ℓ(λ)} · f^λ_{μν}.
pub fn lr_two_power(mu: &StrictPartition, nu: &StrictPartition, lambda: &StrictPartition) -> i64 {
    mu.len() as i64 + nu.len() as i64 - lambda.len() as i64
}
