use super::*;
use crate::exactnum::{rational, Rational};
use crate::partitions::{strict_partitions, Partition, StrictPartition};
use num_bigint::BigInt;
use alloc::vec;
use num_traits::{One, Zero};

fn sp(s: &str) -> StrictPartition {
    s.parse().unwrap()
}

#[test]
fn small_q_functions() {
    assert_eq!(q_function(&StrictPartition::empty()), QPolynomial::one());
    let q1 = q_function(&sp("1"));
    assert_eq!(q1.coeffs().len(), 1);
    assert_eq!(q1.coeff(&Partition::new(vec![1])), rational(2, 1));
    let q2 = q_function(&sp("2"));
    assert_eq!(q2.coeffs().len(), 1);
    assert_eq!(q2.coeff(&Partition::new(vec![1, 1])), rational(2, 1));
    // q_3 = 8/6 p_1^3 + 2/3 p_3
    let q3 = q_row(3);
    assert_eq!(q3.coeff(&Partition::new(vec![1, 1, 1])), rational(4, 3));
    assert_eq!(q3.coeff(&Partition::new(vec![3])), rational(2, 3));
}

// ⟨p_α, p_β⟩ = δ z_α 2^{−ℓ(α)} makes the Q_λ orthogonal with ⟨Q_λ, Q_λ⟩ = 2^{ℓ(λ)}.
#[test]
fn q_functions_are_orthogonal() {
    for n in 1..=8 {
        let qs: Vec<_> = strict_partitions(n).into_iter().map(|l| (q_function(&l), l)).collect();
        for (a, la) in &qs {
            for (b, lb) in &qs {
                let mut ip = Rational::zero();
                for (alpha, x) in a.coeffs() {
                    let z = Rational::new(BigInt::from(alpha.z()), BigInt::one() << alpha.len());
                    ip += x * b.coeff(alpha) * z;
                }
                let expect = if la == lb { Rational::from_integer(BigInt::one() << la.len()) } else { Rational::zero() };
                assert_eq!(ip, expect, "<Q_{la}, Q_{lb}>");
            }
        }
    }
}

// (3,2,1)/(2,1) is a single column of three cells, whose skew Q-function is
// q_3; so ν = (3) occurs once and ν = (2,1) not at all.
#[test]
fn column_skew_shape() {
    let ts = lr_tableaux(&sp("3,2,1"), &sp("2,1"), &sp("3"));
    assert_eq!(ts.len(), 1);
    assert_eq!(ts[0].reading_word(), vec![Letter::new(1, false), Letter::new(1, true), Letter::new(1, true)]);
    assert_eq!(q_structure_constant(&sp("2,1"), &sp("3"), &sp("3,2,1")).unwrap(), rational(1, 1));
    assert_eq!(shifted_lr(&sp("3,2,1"), &sp("2,1"), &sp("2,1")), 0);
    assert!(q_structure_constant(&sp("2,1"), &sp("2,1"), &sp("3,2,1")).unwrap().is_zero());
}

#[test]
fn single_rows() {
    for n in 1..=9 {
        for m in 1..n {
            let (l, a, b) = (StrictPartition::new(vec![n]).unwrap(), StrictPartition::new(vec![m]).unwrap(), StrictPartition::new(vec![n - m]).unwrap());
            assert_eq!(shifted_lr(&l, &a, &b), 1);
            assert!(q_structure_constant(&a, &b, &l).unwrap() > Rational::zero());
        }
    }
}

#[test]
fn displayed_example_tableau_counts() {
    let ts = lr_tableaux(&sp("7,5,4,3,2,1"), &sp("7,1"), &sp("5,4,3,2"));
    assert!(!ts.is_empty());
    assert!(ts.iter().all(|t| t.is_valid() && t.is_lattice()));
    let rendered = alloc::format!("{}", ts[0]);
    assert!(rendered.lines().count() == 6 && rendered.contains("1'"), "{rendered}");
}

#[test]
fn incompatible_inputs_give_zero() {
    assert_eq!(shifted_lr(&sp("3,1"), &sp("4"), &StrictPartition::empty()), 0);
    assert_eq!(shifted_lr(&sp("3,1"), &sp("2"), &sp("1")), 0);
    assert!(q_structure_constant(&sp("2"), &sp("1"), &sp("5")).is_err());
}

/// Both paths, every triple with |λ| ≤ 7: the structure constant is always
/// 2^{ℓμ+ℓν−ℓλ} times the tableau count.
#[test]
fn algebraic_and_combinatorial_paths_agree() {
    for n in 1..=7 {
        for m in 1..n {
            for mu in strict_partitions(m) {
                for nu in strict_partitions(n - m) {
                    let exp = q_product_expansion(&mu, &nu).unwrap();
                    for lambda in strict_partitions(n) {
                        let f = shifted_lr(&lambda, &mu, &nu);
                        let c = exp.get(&lambda).cloned().unwrap_or_else(Rational::zero);
                        let e = lr_two_power(&mu, &nu, &lambda);
                        let scale = if e >= 0 { rational(1 << e, 1) } else { rational(1, 1 << -e) };
                        assert_eq!(c, scale * Rational::from_integer(f.into()), "{mu}·{nu} → {lambda}");
                    }
                }
            }
        }
    }
}

#[test]
fn lattice_word_basics() {
    let w = |s: &[(u32, bool)]| s.iter().map(|&(v, m)| Letter::new(v, m)).collect::<alloc::vec::Vec<_>>();
    assert!(lattice_property(&w(&[(1, false), (1, false)])));
    assert!(!lattice_property(&w(&[(2, false)])));
    assert!(lattice_property(&w(&[(2, false), (1, false), (1, false)])));
    assert!(!lattice_property(&w(&[(1, false), (1, false), (2, false)])));
    assert!(leftmost_unmarked(&w(&[(1, false), (1, true)])));
    assert!(!leftmost_unmarked(&w(&[(1, true), (1, false)])));
}

