use alloc::{format, vec::Vec};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};

use super::{row_assocs, Assoc, Row, RowLabel, SpinCharacterTable};
use crate::covergroup::{canonical_rep, class_of, class_size, classes, group_order, label_rep, AltTag, ClassLabel, Group};
use crate::error::{Error, Result};
use crate::exactnum::{CycNum, Rational};
use crate::partitions::{odd_partitions, strict_partitions, Partition, Sign, StrictPartition};
use crate::qtableaux::q_function;

pub fn build_table(group: Group, n: u32) -> Result<SpinCharacterTable> {
    match group {
        Group::S => build_table_s(n),
        Group::A => build_table_a(&build_table_s(n)?),
    }
}

/// The sign of the basic spin character at σ_α^+ for α ∈ OP_n, read off the
/// scalar part of the Clifford element (its trace up to a positive factor).
pub fn basic_spin_sign(alpha: &Partition) -> Result<Sign> {
    let g = canonical_rep(alpha, Some(Sign::Plus))?;
    match g.scalar_part().0 {
        0 => Err(Error::Internal(format!("σ_{alpha}^+ has no scalar part"))),
        c if c > 0 => Ok(Sign::Plus),
        _ => Ok(Sign::Minus),
    }
}

fn pow2(e: i64) -> Rational {
    if e >= 0 {
        Rational::from_integer(BigInt::one() << e as usize)
    } else {
        Rational::new(BigInt::one(), BigInt::one() << (-e) as usize)
    }
}

fn big(q: &BigUint) -> Rational {
    Rational::from_integer(q.clone().into())
}

/// Is q = 4^j for an integer j? Returns j.
fn log4(q: &Rational) -> Option<i64> {
    if !q.is_positive() {
        return None;
    }
    let (num, den) = (q.numer().magnitude(), q.denom().magnitude());
    let pure = |x: &BigUint| x.count_ones() == 1 && x.trailing_zeros().unwrap_or(0) % 2 == 0;
    if den.is_one() && pure(num) {
        Some((num.trailing_zeros().unwrap_or(0) / 2) as i64)
    } else if num.is_one() && pure(den) {
        Some(-((den.trailing_zeros().unwrap_or(0) / 2) as i64))
    } else {
        None
    }
}

/// Character table of the spin representations of S̃_n.
///
/// On σ_α^+ (α ∈ OP_n) the value of φ_λ is proportional to the coefficient of
/// p_α/z_α in Q_λ; the per-class sign is fixed by the basic spin character and
/// the per-row power of 2 by unit norm. For λ ∈ DP_n^− the associates carry
/// ±v on C_λ^+, with |v|² from the column relation at σ_λ^+ and v real or
/// purely imaginary according to whether σ_λ^+ is conjugate to its inverse.
pub fn build_table_s(n: u32) -> Result<SpinCharacterTable> {
    if n == 0 {
        return Err(Error::Precondition(format!("n must be positive")));
    }
    let cls = classes(Group::S, n);
    let sizes: Vec<BigUint> = cls.iter().map(class_size).collect();
    let order = group_order(Group::S, n);
    let ops = odd_partitions(n);
    let signs: Vec<Sign> = ops.iter().map(basic_spin_sign).collect::<Result<_>>()?;
    let mut rows = Vec::new();
    for lambda in strict_partitions(n) {
        let q = q_function(&lambda);
        let raw: Vec<Rational> = ops
            .iter()
            .zip(&signs)
            .map(|(alpha, s)| {
                let c = q.coeff(alpha) * big(&alpha.z()) * pow2((n as i64 - alpha.len() as i64) / 2);
                if *s == Sign::Minus {
                    -c
                } else {
                    c
                }
            })
            .collect();
        let norm: Rational = raw.iter().zip(&ops).map(|(r, a)| r * r / big(&a.z())).sum();

        // the DP^− diagonal pair, and the share of the norm it carries
        let mut diag = None;
        let mut target = Rational::one();
        if lambda.is_odd() {
            let mu = lambda.as_partition();
            let plus = ClassLabel::new(Group::S, mu.clone(), Some(Sign::Plus), None)?;
            let size = class_size(&plus);
            let centralizer = &order / &size;
            // spin part of the column sum: |C_S̃(g)| − |C_{S_n}(π g)| = 2z − z, shared by two associates
            let abs2 = (big(&centralizer) - big(&mu.z())) / Rational::from_integer(2.into());
            let g = canonical_rep(mu, Some(Sign::Plus))?;
            let self_inverse = class_of(&g.inverse(), Group::S)?.z_sign == Some(Sign::Plus);
            let v = if self_inverse {
                CycNum::sqrt_rational(&abs2)
            } else {
                &CycNum::sqrt_rational(&abs2) * &CycNum::i()
            };
            target -= Rational::from_integer(2.into()) * big(&size) * &abs2 / big(&order);
            diag = Some((mu.clone(), v));
        }
        let j = log4(&(norm / &target))
            .ok_or_else(|| Error::Internal(format!("row {lambda} cannot be normalized by a power of 2")))?;
        let scale = pow2(-j);
        let op_values: Vec<Rational> = raw.iter().map(|r| r * &scale).collect();

        for &assoc in row_assocs(Group::S, n, &lambda) {
            let values = cls
                .iter()
                .map(|c| {
                    let zs = if c.z_sign == Some(Sign::Minus) { -Rational::one() } else { Rational::one() };
                    if c.cycle_type.is_all_odd() {
                        let k = ops.iter().position(|a| a == &c.cycle_type).expect("odd partition");
                        CycNum::from_rational(&op_values[k] * zs)
                    } else if let Some((_, v)) = diag.as_ref().filter(|(mu, _)| mu == &c.cycle_type) {
                        let s = if assoc == Assoc::Minus { -zs } else { zs };
                        v.scale(&s)
                    } else {
                        CycNum::zero()
                    }
                })
                .collect();
            rows.push(Row { label: RowLabel::new(lambda.clone(), assoc), values });
        }
    }
    let table = SpinCharacterTable::unchecked(Group::S, n, cls, sizes, rows)?;
    table.verify()?;
    Ok(table)
}

/// ±1 pattern of Δ_λ over the classes of type λ in Ã_n, relative to its value
/// on the "+a" (or "a") class: negated by z and by the a/b swap.
fn delta_sign(label: &ClassLabel) -> i64 {
    let a = if label.alt == Some(AltTag::B) { -1 } else { 1 };
    let z = if label.z_sign == Some(Sign::Minus) { -1 } else { 1 };
    a * z
}

/// Character table of Ã_n from that of S̃_n: DP^− rows restrict irreducibly,
/// DP^+ rows split as (φ_λ ± Δ_λ)/2 with Δ_λ supported on the classes of
/// type λ. |Δ_λ|² is fixed by ⟨φ^±, φ^±⟩ = 1 and its phase by the
/// inverse-class test used for S̃_n. The associate labelled "+" takes Δ_λ
/// with argument in [0, π) on its first class.
pub fn build_table_a(s: &SpinCharacterTable) -> Result<SpinCharacterTable> {
    if s.group() != Group::S {
        return Err(Error::Precondition(format!("expected a table of S̃_n")));
    }
    let n = s.n();
    let cls = classes(Group::A, n);
    let sizes: Vec<BigUint> = cls.iter().map(class_size).collect();
    let order = group_order(Group::A, n);
    let s_idx: Vec<usize> = cls
        .iter()
        .map(|c| s.class_index(&c.to_s()).ok_or_else(|| Error::Internal(format!("no S̃ class above {c}"))))
        .collect::<Result<_>>()?;
    let mut rows = Vec::new();
    for lambda in strict_partitions(n) {
        let source = s.row(&RowLabel::new(
            lambda.clone(),
            if lambda.is_odd() { Assoc::Plus } else { Assoc::Plain },
        ))?;
        let restricted: Vec<CycNum> = s_idx.iter().map(|&k| source.values[k].clone()).collect();
        let assocs = row_assocs(Group::A, n, &lambda);
        if assocs.len() == 1 {
            rows.push(Row { label: RowLabel::new(lambda.clone(), Assoc::Plain), values: restricted });
            continue;
        }
        let delta = delta_values(&lambda, &cls, &sizes, &order)?;
        let half = Rational::new(1.into(), 2.into());
        for &assoc in assocs {
            let values = restricted
                .iter()
                .zip(&delta)
                .map(|(r, d)| match assoc {
                    Assoc::Minus => (r - d).scale(&half),
                    _ => (r + d).scale(&half),
                })
                .collect();
            rows.push(Row { label: RowLabel::new(lambda.clone(), assoc), values });
        }
    }
    let table = SpinCharacterTable::unchecked(Group::A, n, cls, sizes, rows)?;
    table.verify()?;
    Ok(table)
}

fn delta_values(lambda: &StrictPartition, cls: &[ClassLabel], sizes: &[BigUint], order: &BigUint) -> Result<Vec<CycNum>> {
    let mu = lambda.as_partition();
    let support: Vec<usize> = (0..cls.len()).filter(|&k| &cls[k].cycle_type == mu).collect();
    if support.is_empty() {
        return Err(Error::Internal(format!("no classes of type {lambda} in Ã_{}", lambda.n())));
    }
    // ⟨Δ, Δ⟩ = 2 with |Δ| constant on its support
    let weight: Rational = support.iter().map(|&k| big(&sizes[k])).sum::<Rational>() / big(order);
    let abs2 = Rational::from_integer(2.into()) / weight;
    let first = &cls[support[0]];
    let g = label_rep(first);
    let inv = class_of(&g.inverse(), Group::A)?;
    let v = if delta_sign(&inv) == 1 {
        CycNum::sqrt_rational(&abs2)
    } else {
        &CycNum::sqrt_rational(&abs2) * &CycNum::i()
    };
    Ok((0..cls.len())
        .map(|k| {
            if support.contains(&k) {
                v.scale(&Rational::from_integer(delta_sign(&cls[k]).into()))
            } else {
                CycNum::zero()
            }
        })
        .collect())
}
