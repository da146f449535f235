//! Eigenvalue spectra from characters, minimal polynomials and their
//! closed-form classification, the embedded exception tables, and the
//! verification sweep that compares the two.

mod classify;
mod exceptions;
mod expr;
mod roots;
mod verify;

pub use classify::{classify, family_of, table_support};
pub use exceptions::{Binding, ExceptionEntry, ExceptionTable, ResolvedEntry, SignSpec};
pub use expr::{parse_expr, Expr};
pub use roots::{Angle, RootSet};
pub use verify::{
    compare_exceptions, verify_n, CellResult, EntryOutcome, EntryStatus, ExceptionComparison, PowerMaps, Sweep,
    VerificationReport, VerifyRecord,
};

use alloc::{format, string::String, vec, vec::Vec};
use core::fmt;

use num_integer::Integer;

use crate::covergroup::{class_epsilon, order, power_map, ClassLabel};
use crate::error::{Error, Result};
use crate::exactnum::{euler_phi, CycNum, CycPoly};
use crate::partitions::Sign;
use crate::spinchars::{RowLabel, SpinCharacterTable};

/// Multiplicities of the eigenvalues ζ_d^j of ρ(g), d the order of g.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenSpectrum {
    /// Element order d (k or 2k).
    pub order: u64,
    /// k = lcm of the cycle type.
    pub k: u64,
    pub mult: Vec<u64>,
}

impl EigenSpectrum {
    pub fn epsilon(&self) -> Sign {
        if self.order == self.k {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn degree(&self) -> u64 {
        self.mult.iter().sum()
    }

    pub fn support(&self) -> RootSet {
        RootSet::from_angles(
            self.mult.iter().enumerate().filter(|(_, &m)| m > 0).map(|(j, _)| Angle::new(j as u64, self.order)),
        )
    }
}

/// Ramanujan sums c_N(m) = Tr_{Q(ζ_N)/Q}(ζ_N^m) for m = 0 … N−1.
pub fn ramanujan_sums(n: u64) -> Vec<i64> {
    let mobius = |mut x: u64| -> i64 {
        let mut r = 1;
        let mut p = 2;
        while p * p <= x {
            if x % p == 0 {
                x /= p;
                if x % p == 0 {
                    return 0;
                }
                r = -r;
            }
            p += 1;
        }
        if x > 1 {
            r = -r;
        }
        r
    };
    (0..n)
        .map(|m| {
            let g = m.gcd(&n);
            (1..=g).filter(|e| g % e == 0).map(|e| mobius(n / e) * e as i64).sum()
        })
        .collect()
}

/// The DFT of a character along ⟨g⟩: mult(ζ_d^j) = d⁻¹ Σ_i φ(g^i) ζ_d^{−ij},
/// evaluated as a trace down to Q so that only integer arithmetic occurs.
pub fn spectrum_from_values(values: &[CycNum], k: u64) -> Result<EigenSpectrum> {
    let d = values.len() as u64;
    if d == 0 || (d != k && d != 2 * k) {
        return Err(Error::Precondition(format!("{d} values for an element with k = {k}")));
    }
    let mut big_n = d;
    for v in values {
        big_n = big_n.lcm(&(v.conductor() as u64));
    }
    let c = ramanujan_sums(big_n);
    let ints: Vec<(u64, Vec<i64>)> = values
        .iter()
        .map(|v| {
            v.integer_coeffs()
                .map(|a| (big_n / v.conductor() as u64, a))
                .ok_or_else(|| Error::Internal(format!("character value {v} is not an algebraic integer")))
        })
        .collect::<Result<_>>()?;
    let step = big_n / d;
    let denom = d as i128 * euler_phi(big_n as u32) as i128;
    let mut mult = vec![0u64; d as usize];
    for (j, slot) in mult.iter_mut().enumerate() {
        let mut total: i128 = 0;
        for (i, (scale, a)) in ints.iter().enumerate() {
            let shift = (step * ((i as u64 * j as u64) % d)) % big_n;
            for (e, &coef) in a.iter().enumerate() {
                if coef != 0 {
                    let m = (e as u64 * scale + big_n - shift) % big_n;
                    total += coef as i128 * c[m as usize] as i128;
                }
            }
        }
        if total < 0 || total % denom != 0 {
            return Err(Error::Internal(format!("eigenvalue multiplicity {total}/{denom} is not a natural number")));
        }
        *slot = (total / denom) as u64;
    }
    Ok(EigenSpectrum { order: d, k, mult })
}

/// Spectrum of ρ(g) for the row and a class of the table.
pub fn spectrum(table: &SpinCharacterTable, row: &RowLabel, label: &ClassLabel) -> Result<EigenSpectrum> {
    let r = table.row(row)?;
    if table.class_index(label).is_none() {
        return Err(Error::InvalidLabel(format!("{label} is not a class of this table")));
    }
    let values = power_map(label)?
        .iter()
        .map(|p| {
            table
                .class_index(p)
                .map(|i| r.values[i].clone())
                .ok_or_else(|| Error::Internal(format!("power class {p} missing from the table")))
        })
        .collect::<Result<Vec<CycNum>>>()?;
    spectrum_from_values(&values, label.cycle_type.lcm())
}


#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FormTag {
    Full,
    Family3,
    Family5,
    Family15,
    BasicStd15,
    TableException,
    Generic,
}

impl FormTag {
    pub fn name(self) -> &'static str {
        match self {
            FormTag::Full => "full",
            FormTag::Family3 => "family-3",
            FormTag::Family5 => "family-5",
            FormTag::Family15 => "family-15",
            FormTag::BasicStd15 => "basic-std-15",
            FormTag::TableException => "table",
            FormTag::Generic => "generic",
        }
    }
}

/// A minimal polynomial: its root set, with a factored form
/// Π (x^k − ε)^{±1} when it is one of the closed forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinPolyForm {
    pub tag: FormTag,
    pub factors: Vec<(u64, Sign, i8)>,
    pub support: RootSet,
}

impl MinPolyForm {
    pub fn from_support(tag: FormTag, support: RootSet) -> Self {
        MinPolyForm { tag, factors: Vec::new(), support }
    }

    pub fn closed(tag: FormTag, k: u64, eps: Sign) -> Option<Self> {
        let factors: Vec<(u64, Sign, i8)> = match tag {
            FormTag::Full => vec![(k, eps, 1)],
            FormTag::Family3 if k % 3 == 0 => vec![(k, eps, 1), (k / 3, eps, -1)],
            FormTag::Family5 if k % 5 == 0 => vec![(k, eps, 1), (k / 5, eps, -1)],
            FormTag::Family15 if k % 15 == 0 => vec![(k, eps, 1), (k / 15, eps, 1), (k / 3, eps, -1), (k / 5, eps, -1)],
            FormTag::BasicStd15 if k % 15 == 0 => vec![(k, eps, 1), (k / 15, eps, -1)],
            _ => return None,
        };
        let mut support = RootSet::binomial(k, eps);
        for &(m, e, x) in &factors[1..] {
            if x < 0 {
                support = support.difference(&RootSet::binomial(m, e));
            }
        }
        Some(MinPolyForm { tag, factors, support })
    }

    pub fn degree(&self) -> usize {
        self.support.len()
    }

    /// The monic polynomial Π_{ζ ∈ support} (x − ζ).
    pub fn expanded(&self) -> CycPoly {
        self.support.polynomial()
    }

    pub fn factored(&self) -> Option<String> {
        if self.factors.is_empty() {
            return None;
        }
        let binom = |&(k, e, _): &(u64, Sign, i8)| {
            let x = if k == 1 { String::from("x") } else { format!("x^{k}") };
            format!("({x} {} 1)", if e == Sign::Plus { "-" } else { "+" })
        };
        let num: Vec<String> = self.factors.iter().filter(|f| f.2 > 0).map(binom).collect();
        let den: Vec<String> = self.factors.iter().filter(|f| f.2 < 0).map(binom).collect();
        let mut s = num.concat();
        if !den.is_empty() {
            s = format!("{s}/{}", den.concat());
        }
        Some(s)
    }
}

impl fmt::Display for MinPolyForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.factored() {
            Some(s) => write!(f, "{s}"),
            None => write!(f, "{}", self.expanded()),
        }
    }
}

/// Recognize the minimal polynomial of a spectrum among the closed forms.
pub fn minimal_polynomial(sp: &EigenSpectrum) -> MinPolyForm {
    let support = sp.support();
    let eps = sp.epsilon();
    for tag in [FormTag::Full, FormTag::Family15, FormTag::Family3, FormTag::Family5, FormTag::BasicStd15] {
        if let Some(form) = MinPolyForm::closed(tag, sp.k, eps) {
            if form.support == support {
                return form;
            }
        }
    }
    MinPolyForm::from_support(FormTag::Generic, support)
}

/// The k and ε of a class label.
pub fn class_k_eps(label: &ClassLabel) -> (u64, Sign) {
    (label.cycle_type.lcm(), class_epsilon(label))
}

/// Element order of a class label.
pub fn class_order(label: &ClassLabel) -> u64 {
    order(label)
}

/// Eigenvalue sets of a reduced Clifford product U ⊗_c V at π_1 π_2, from
/// Sp_U(π_1), Sp_V(π_2), self-associativity and the parities d(π_i).
/// (When U is not self-associate but V is, the factors are swapped first.)
pub fn compose_spectra(sp_u: &RootSet, sp_v: &RootSet, sa: (bool, bool), parities: (bool, bool)) -> RootSet {
    let (sp_u, sp_v, sa, par) = if !sa.0 && sa.1 {
        (sp_v, sp_u, (sa.1, sa.0), (parities.1, parities.0))
    } else {
        (sp_u, sp_v, sa, parities)
    };
    let base = sp_u.product(sp_v);
    let pm1 = RootSet::binomial(2, Sign::Plus);
    let pmi = RootSet::binomial(2, Sign::Minus);
    match (sa, par) {
        (_, (false, false)) => base,
        (_, (true, true)) => base.product(&pmi),
        ((true, true), _) => base,
        ((true, false), (true, false)) => base,
        _ => base.product(&pm1),
    }
}
