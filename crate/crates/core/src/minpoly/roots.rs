use alloc::{collections::BTreeSet, format, string::String, vec::Vec};
use core::cmp::Ordering;
use core::fmt;

use num_integer::Integer;

use crate::exactnum::{CycNum, CycPoly};
use crate::partitions::Sign;

/// The root of unity e^{2πi·num/den}, stored as a reduced fraction in [0, 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Angle {
    num: u64,
    den: u64,
}

impl Angle {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "angle with zero denominator");
        let num = num % den;
        let g = num.gcd(&den);
        Angle { num: num / g, den: den / g }
    }

    pub fn num(self) -> u64 {
        self.num
    }

    /// Multiplicative order of the root.
    pub fn order(self) -> u64 {
        self.den
    }

    pub fn mul(self, other: Angle) -> Angle {
        let den = self.den.lcm(&other.den);
        Angle::new(self.num * (den / self.den) + other.num * (den / other.den), den)
    }

    pub fn pow(self, e: u64) -> Angle {
        Angle::new((self.num as u128 * e as u128 % self.den as u128) as u64, self.den)
    }

    pub fn to_cyc(self) -> CycNum {
        CycNum::root_of_unity(self.den as u32, self.num as i64)
    }
}

impl Ord for Angle {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for Angle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.num, self.den) {
            (0, _) => write!(f, "1"),
            (1, 2) => write!(f, "-1"),
            (n, d) => write!(f, "z{d}^{n}"),
        }
    }
}

/// A finite set of roots of unity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSet(BTreeSet<Angle>);

impl RootSet {
    pub fn from_angles(it: impl IntoIterator<Item = Angle>) -> Self {
        RootSet(it.into_iter().collect())
    }

    /// {ζ : ζ^k = ε}.
    pub fn binomial(k: u64, eps: Sign) -> Self {
        match eps {
            Sign::Plus => Self::from_angles((0..k).map(|j| Angle::new(j, k))),
            Sign::Minus => Self::from_angles((0..k).map(|j| Angle::new(2 * j + 1, 2 * k))),
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Angle> {
        self.0.iter()
    }

    pub fn contains(&self, a: &Angle) -> bool {
        self.0.contains(a)
    }

    pub fn union(&self, other: &Self) -> Self {
        RootSet(self.0.union(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &Self) -> Self {
        RootSet(self.0.difference(&other.0).copied().collect())
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.is_subset(&other.0)
    }

    /// {ab : a ∈ self, b ∈ other}.
    pub fn product(&self, other: &Self) -> Self {
        RootSet(self.0.iter().flat_map(|a| other.0.iter().map(move |b| a.mul(*b))).collect())
    }

    /// −self.
    pub fn negate(&self) -> Self {
        self.product(&Self::from_angles([Angle::new(1, 2)]))
    }

    /// Smallest d with every element a d-th root of unity.
    pub fn exponent(&self) -> u64 {
        self.0.iter().fold(1, |acc, a| acc.lcm(&a.den))
    }

    /// Π (x − ζ) over the set.
    pub fn polynomial(&self) -> CycPoly {
        let roots: Vec<CycNum> = self.0.iter().map(|a| a.to_cyc()).collect();
        CycPoly::from_roots(roots.iter())
    }

    /// The root set of a polynomial whose roots are distinct d-th roots of
    /// unity, or `None` when it is not of that shape.
    pub fn of_polynomial(p: &CycPoly, d: u64) -> Option<Self> {
        let deg = p.degree()?;
        if !p.is_monic() {
            return None;
        }
        let found: BTreeSet<Angle> =
            (0..d).map(|j| Angle::new(j, d)).filter(|a| p.eval(&a.to_cyc()).is_zero()).collect();
        if found.len() != deg {
            return None;
        }
        let set = RootSet(found);
        (set.polynomial() == *p).then_some(set)
    }

    pub fn describe(&self) -> String {
        let items: Vec<String> = self.0.iter().map(|a| format!("{a}")).collect();
        format!("{{{}}}", items.join(", "))
    }
}

impl fmt::Display for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}
