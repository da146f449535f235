use alloc::{collections::BTreeMap, string::String, sync::Arc, vec, vec::Vec};
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use spin::RwLock;

use super::{linalg, Rational};
use crate::error::{Error, Result};

// Φ_N memo. Entries are immutable once inserted, so a racing double insert is
// harmless: both writers computed the same polynomial.
static CYCLOTOMIC: RwLock<BTreeMap<u32, Arc<Vec<i64>>>> = RwLock::new(BTreeMap::new());

pub fn euler_phi(n: u32) -> u32 {
    let mut m = n;
    let mut phi = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    phi
}

pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Coefficients of Φ_n, lowest degree first (length φ(n) + 1).
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    if let Some(p) = CYCLOTOMIC.read().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by every Φ_d with d a proper divisor of n
    let mut p: Vec<i128> = vec![0; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in divisors(n).into_iter().filter(|&d| d < n) {
        let q = cyclotomic_polynomial(d);
        let dq = q.len() - 1;
        let mut quot = vec![0i128; p.len() - dq];
        for i in (0..quot.len()).rev() {
            let c = p[i + dq];
            quot[i] = c;
            if c != 0 {
                for (j, &qj) in q.iter().enumerate() {
                    p[i + j] -= c * qj as i128;
                }
            }
        }
        debug_assert!(p.iter().all(|&c| c == 0));
        p = quot;
    }
    let p: Arc<Vec<i64>> = Arc::new(p.into_iter().map(|c| c as i64).collect());
    CYCLOTOMIC.write().entry(n).or_insert(p).clone()
}

// In-place reduction of a polynomial modulo the monic Φ (given by its coefficients).
fn reduce_int(v: &mut Vec<BigInt>, phi: &[i64]) {
    let d = phi.len() - 1;
    for i in (d..v.len()).rev() {
        if v[i].is_zero() {
            continue;
        }
        let c = core::mem::take(&mut v[i]);
        for (j, &pj) in phi[..d].iter().enumerate() {
            if pj != 0 {
                v[i - d + j] -= &c * pj;
            }
        }
    }
    v.resize(d, BigInt::zero());
}

fn reduce_rat(v: &mut Vec<Rational>, phi: &[i64]) {
    let d = phi.len() - 1;
    for i in (d..v.len()).rev() {
        if v[i].is_zero() {
            continue;
        }
        let c = core::mem::replace(&mut v[i], Rational::zero());
        for (j, &pj) in phi[..d].iter().enumerate() {
            if pj != 0 {
                v[i - d + j] -= &c * Rational::from_integer(BigInt::from(pj));
            }
        }
    }
    v.resize(d, Rational::zero());
}

/// An exact element of the cyclotomic field Q(ζ_N), stored in the power
/// basis 1, ζ_N, …, ζ_N^{φ(N)−1}.
///
/// Arithmetic between different conductors happens in the lcm field; the
/// conductor is never shrunk unless [`CycNum::normalize`] is called.
#[derive(Clone, Debug)]
pub struct CycNum {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl CycNum {
    pub fn new(conductor: u32, coeffs: Vec<Rational>) -> Result<Self> {
        if conductor == 0 || coeffs.len() != euler_phi(conductor) as usize {
            return Err(Error::Precondition(alloc::format!(
                "conductor {conductor} needs {} coefficients, got {}",
                if conductor == 0 { 0 } else { euler_phi(conductor) },
                coeffs.len()
            )));
        }
        Ok(CycNum { conductor, coeffs })
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_i64(1)
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(q: Rational) -> Self {
        CycNum { conductor: 1, coeffs: vec![q] }
    }

    /// ζ_N^k, with k taken mod N.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n >= 1, "root of unity of order 0");
        let r = k.rem_euclid(n as i64) as usize;
        let phi = euler_phi(n) as usize;
        let mut v = vec![Rational::zero(); phi.max(r + 1)];
        v[r] = Rational::one();
        if r >= phi {
            reduce_rat(&mut v, &cyclotomic_polynomial(n));
        }
        CycNum { conductor: n, coeffs: v }
    }

    pub fn i() -> Self {
        Self::root_of_unity(4, 1)
    }

    /// √2 = ζ_8 + ζ_8^7.
    pub fn sqrt2() -> Self {
        Self::root_of_unity(8, 1) + Self::root_of_unity(8, 7)
    }

    /// The principal square root of an integer: positive for m > 0,
    /// i·√|m| for m < 0. Odd primes go through quadratic Gauss sums.
    pub fn sqrt_int(m: i64) -> Self {
        if m == 0 {
            return Self::zero();
        }
        let (square, free) = square_free_split(m.unsigned_abs());
        let mut acc = Self::from_i64(square as i64);
        for p in prime_factors(free) {
            acc = &acc * &sqrt_prime(p);
        }
        if m < 0 {
            acc = &acc * &Self::i();
        }
        acc
    }

    /// √q for a rational q, principal branch as in [`CycNum::sqrt_int`].
    pub fn sqrt_rational(q: &Rational) -> Self {
        // √(a/b) = √(ab)/b
        let ab = (q.numer() * q.denom()).to_i64().expect("surd radicand too large");
        Self::sqrt_int(ab).scale(&Rational::new(BigInt::one(), q.denom().clone()))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    /// Coefficients as machine integers, when the value has an integral
    /// power-basis representation (true for all algebraic integers).
    pub fn integer_coeffs(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| if c.is_integer() { c.numer().to_i64() } else { None }).collect()
    }

    /// Re-expresses the value in Q(ζ_M), M a multiple of the conductor.
    pub fn promote(&self, m: u32) -> Result<Self> {
        if m == 0 || m % self.conductor != 0 {
            return Err(Error::BadConductor { from: self.conductor, to: m });
        }
        if m == self.conductor {
            return Ok(self.clone());
        }
        if self.is_rational() {
            let mut coeffs = vec![Rational::zero(); euler_phi(m) as usize];
            coeffs[0] = self.coeffs[0].clone();
            return Ok(CycNum { conductor: m, coeffs });
        }
        let step = (m / self.conductor) as usize;
        let phi = euler_phi(m) as usize;
        let mut v = vec![Rational::zero(); phi.max(step * (self.coeffs.len() - 1) + 1)];
        for (j, c) in self.coeffs.iter().enumerate() {
            v[j * step] = c.clone();
        }
        reduce_rat(&mut v, &cyclotomic_polynomial(m));
        Ok(CycNum { conductor: m, coeffs: v })
    }

    /// Re-expresses the value in the subfield Q(ζ_M); fails if it does not lie there.
    pub fn demote(&self, m: u32) -> Result<Self> {
        if m == 0 || self.conductor % m != 0 {
            return Err(Error::BadConductor { from: self.conductor, to: m });
        }
        if m == self.conductor {
            return Ok(self.clone());
        }
        if self.is_rational() {
            let mut coeffs = vec![Rational::zero(); euler_phi(m) as usize];
            coeffs[0] = self.coeffs[0].clone();
            return Ok(CycNum { conductor: m, coeffs });
        }
        let basis: Vec<CycNum> = (0..euler_phi(m) as i64)
            .map(|j| CycNum::root_of_unity(m, j).promote(self.conductor))
            .collect::<Result<_>>()?;
        let rows: Vec<Vec<Rational>> = (0..self.coeffs.len())
            .map(|i| basis.iter().map(|b| b.coeffs[i].clone()).collect())
            .collect();
        let x = linalg::solve(&rows, &self.coeffs).ok_or(Error::NotInSubfield(m))?;
        Ok(CycNum { conductor: m, coeffs: x })
    }

    /// The same value in the smallest possible conductor.
    pub fn normalize(&self) -> Self {
        if self.is_rational() {
            return Self::from_rational(self.coeffs[0].clone());
        }
        for m in divisors(self.conductor) {
            if m % 4 == 2 || m == 1 {
                continue; // Q(ζ_m) = Q(ζ_{m/2}) was already tried
            }
            if let Ok(v) = self.demote(m) {
                return v;
            }
        }
        unreachable!("a value always lies in its own field")
    }

    pub fn scale(&self, q: &Rational) -> Self {
        CycNum { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// The Galois automorphism ζ_N ↦ ζ_N^k (k coprime to N).
    pub fn galois(&self, k: i64) -> Self {
        let n = self.conductor as i64;
        debug_assert_eq!(k.rem_euclid(n).gcd(&n), 1, "galois exponent must be a unit");
        if self.is_rational() {
            return self.clone();
        }
        let mut v = vec![Rational::zero(); n as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                v[(j as i64 * k).rem_euclid(n) as usize] += c;
            }
        }
        reduce_rat(&mut v, &cyclotomic_polynomial(self.conductor));
        CycNum { conductor: self.conductor, coeffs: v }
    }

    /// Complex conjugation, ζ ↦ ζ^{−1}.
    pub fn conjugate(&self) -> Self {
        self.galois(-1)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Self::from_rational(self.coeffs[0].recip()));
        }
        // columns a·ζ^j of the multiplication-by-a matrix
        let phi = self.coeffs.len();
        let poly = cyclotomic_polynomial(self.conductor);
        let mut cols = Vec::with_capacity(phi);
        let mut cur = self.coeffs.clone();
        for _ in 0..phi {
            cols.push(cur.clone());
            cur.insert(0, Rational::zero());
            reduce_rat(&mut cur, &poly);
        }
        let rows: Vec<Vec<Rational>> = (0..phi).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
        let mut e0 = vec![Rational::zero(); phi];
        e0[0] = Rational::one();
        let x = linalg::solve(&rows, &e0).ok_or_else(|| Error::Internal("nonzero element not invertible".into()))?;
        Ok(CycNum { conductor: self.conductor, coeffs: x })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn lift_pair(&self, other: &Self) -> (Self, Self) {
        if self.conductor == other.conductor {
            return (self.clone(), other.clone());
        }
        let l = self.conductor.lcm(&other.conductor);
        (self.promote(l).unwrap(), other.promote(l).unwrap())
    }

    fn int_parts(&self) -> (Vec<BigInt>, BigInt) {
        let den = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = self.coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        (nums, den)
    }

    fn mul_same(&self, other: &Self) -> Self {
        if self.is_rational() {
            return other.scale(&self.coeffs[0]);
        }
        if other.is_rational() {
            return self.scale(&other.coeffs[0]);
        }
        let (a, da) = self.int_parts();
        let (b, db) = other.int_parts();
        let mut prod = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        reduce_int(&mut prod, &cyclotomic_polynomial(self.conductor));
        let den = da * db;
        let coeffs = prod.into_iter().map(|c| Rational::new(c, den.clone())).collect();
        CycNum { conductor: self.conductor, coeffs }
    }

    /// A floating-point view for debugging and display sanity checks only.
    #[cfg(feature = "std")]
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (j, c)| {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let t = 2.0 * core::f64::consts::PI * j as f64 / n;
            (re + c * t.cos(), im + c * t.sin())
        })
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// n = s²·r with r square-free; returns (s, r).
fn square_free_split(mut n: u64) -> (u64, u64) {
    let (mut s, mut r) = (1, 1);
    let mut p = 2;
    while p * p <= n {
        while n % (p * p) == 0 {
            n /= p * p;
            s *= p;
        }
        if n % p == 0 {
            n /= p;
            r *= p;
        }
        p += 1;
    }
    (s, r * n)
}

fn sqrt_prime(p: u64) -> CycNum {
    if p == 2 {
        return CycNum::sqrt2();
    }
    let pp = u32::try_from(p).expect("prime too large for a cyclotomic surd");
    // quadratic Gauss sum g = Σ (a/p) ζ_p^a, g² = (−1)^{(p−1)/2} p
    let mut g = CycNum::zero();
    for a in 1..p {
        let legendre = mod_pow(a, (p - 1) / 2, p);
        let r = CycNum::root_of_unity(pp, a as i64);
        g = if legendre == 1 { &g + &r } else { &g - &r };
    }
    if p % 4 == 1 {
        g
    } else {
        -(&g * &CycNum::i())
    }
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        if self.is_rational() && other.is_rational() {
            return self.coeffs[0] == other.coeffs[0];
        }
        let (a, b) = self.lift_pair(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycNum {}

impl From<i64> for CycNum {
    fn from(n: i64) -> Self {
        CycNum::from_i64(n)
    }
}

impl From<Rational> for CycNum {
    fn from(q: Rational) -> Self {
        CycNum::from_rational(q)
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl Add for &CycNum {
    type Output = CycNum;
    fn add(self, other: &CycNum) -> CycNum {
        let (mut a, b) = self.lift_pair(other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        a
    }
}

impl Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, other: &CycNum) -> CycNum {
        let (mut a, b) = self.lift_pair(other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x -= y;
        }
        a
    }
}

impl Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, other: &CycNum) -> CycNum {
        if self.is_rational() {
            return other.scale(&self.coeffs[0]);
        }
        if other.is_rational() {
            return self.scale(&other.coeffs[0]);
        }
        let (a, b) = self.lift_pair(other);
        a.mul_same(&b)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr for CycNum {
            type Output = CycNum;
            fn $f(self, other: CycNum) -> CycNum {
                (&self).$f(&other)
            }
        }
        impl $tr<&CycNum> for CycNum {
            type Output = CycNum;
            fn $f(self, other: &CycNum) -> CycNum {
                (&self).$f(other)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl core::iter::Sum for CycNum {
    fn sum<I: Iterator<Item = CycNum>>(iter: I) -> CycNum {
        iter.fold(CycNum::zero(), |a, b| &a + &b)
    }
}

impl fmt::Display for CycNum {
    /// Surd form (`-1/2 + i*sqrt(3)/2`) when the real and imaginary parts are
    /// rational multiples of square roots, `E(N)^j` sums otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match surd_form(self) {
            Some(s) => f.write_str(&s),
            None => f.write_str(&power_form(self)),
        }
    }
}

fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        alloc::format!("{}", q.numer())
    } else {
        alloc::format!("{}/{}", q.numer(), q.denom())
    }
}

fn power_form(a: &CycNum) -> String {
    let mut out = String::new();
    for (j, c) in a.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let base = match j {
            0 => String::new(),
            1 => alloc::format!("E({})", a.conductor),
            _ => alloc::format!("E({})^{}", a.conductor, j),
        };
        if j == 0 {
            out.push_str(&fmt_rational(&mag));
        } else if mag.is_one() {
            out.push_str(&base);
        } else {
            out.push_str(&fmt_rational(&mag));
            out.push('*');
            out.push_str(&base);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

// x real with x² = q rational, q ≥ 0: returns (sign, coefficient, radicand) with x = sign·c·√r.
fn real_surd(x: &CycNum) -> Option<(bool, Rational, u64)> {
    if let Some(q) = x.to_rational() {
        return Some((q.is_negative(), q.abs(), 1));
    }
    let sq = (x * x).to_rational()?;
    if sq.is_negative() {
        return None;
    }
    let ab = (sq.numer() * sq.denom()).to_u64()?;
    let (s, r) = square_free_split(ab);
    let c = Rational::new(BigInt::from(s), sq.denom().clone());
    let candidate = CycNum::sqrt_int(r as i64).scale(&c);
    if &candidate == x {
        Some((false, c, r))
    } else if -candidate == *x {
        Some((true, c, r))
    } else {
        None
    }
}

fn surd_term(c: &Rational, r: u64, imag: bool) -> String {
    let unit = match (imag, r) {
        (false, 1) => None,
        (true, 1) => Some(String::from("i")),
        (false, r) => Some(alloc::format!("sqrt({r})")),
        (true, r) => Some(alloc::format!("i*sqrt({r})")),
    };
    match unit {
        None => fmt_rational(c),
        Some(u) => {
            let num = c.numer();
            let den = c.denom();
            let mut s = if num.is_one() { u } else { alloc::format!("{num}*{u}") };
            if !den.is_one() {
                s = alloc::format!("{s}/{den}");
            }
            s
        }
    }
}

fn surd_form(a: &CycNum) -> Option<String> {
    if let Some(q) = a.to_rational() {
        return Some(fmt_rational(&q));
    }
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let conj = a.conjugate();
    let re = (a + &conj).scale(&half);
    // a − conj(a) = 2i·Im(a); divide by 2i
    let im = (&(a - &conj) * &CycNum::i()).scale(&-half);
    let (rs, rc, rr) = real_surd(&re)?;
    let (is, ic, ir) = real_surd(&im)?;
    let mut out = String::new();
    if !rc.is_zero() {
        if rs {
            out.push('-');
        }
        out.push_str(&surd_term(&rc, rr, false));
    }
    if !ic.is_zero() {
        if out.is_empty() {
            if is {
                out.push('-');
            }
        } else {
            out.push_str(if is { " - " } else { " + " });
        }
        out.push_str(&surd_term(&ic, ir, true));
    }
    Some(out)
}
