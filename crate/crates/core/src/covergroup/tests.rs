use alloc::vec::Vec;
use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use proptest::prelude::*;

use super::*;
use crate::partitions::{Parity, Partition, Sign};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn t(n: u8, j: u8) -> CoverElement {
    CoverElement::generator(n, j)
}

fn z(n: u8) -> CoverElement {
    CoverElement::z(n)
}

#[test]
fn presentation_relations() {
    for n in 2..=12u8 {
        for j in 1..n {
            assert_eq!(t(n, j).mul(&t(n, j)), z(n), "t_{j}^2 in S̃_{n}");
            if j + 1 < n {
                let b = t(n, j).mul(&t(n, j + 1));
                assert_eq!(b.pow(3), z(n), "(t_{j} t_{}) ^3 in S̃_{n}", j + 1);
            }
            for k in j + 2..n {
                assert_eq!(t(n, j).mul(&t(n, k)).pow(2), z(n));
                assert_eq!(t(n, j).mul(&t(n, k)), z(n).mul(&t(n, k)).mul(&t(n, j)));
            }
        }
    }
}

#[test]
fn braid_words_multiply_to_z() {
    let w = CoverElement::from_word(3, &[1, 2, 1, 2, 1, 2]);
    assert!(w.is_minus_identity());
}

#[test]
fn canonical_rep_examples() {
    let g = canonical_rep(&p("4,3,2,1"), None).unwrap();
    assert!(canonical_rep(&p("4,3,2,1"), Some(Sign::Plus)).is_err());
    assert_eq!(g, CoverElement::from_word(10, &[1, 2, 3, 5, 6, 8]));
    assert!(canonical_rep(&p("1^4"), Some(Sign::Plus)).unwrap().is_identity());
    let s2 = canonical_rep(&p("2"), Some(Sign::Plus)).unwrap();
    assert_eq!(s2.to_string(), "(e1 - e2)/√2^1");
    assert!(s2.mul(&s2).is_minus_identity());
    assert!(canonical_rep(&p("2,2"), Some(Sign::Plus)).is_err());
    assert!(canonical_rep(&p("3"), None).is_err());
    let minus = canonical_rep(&p("3"), Some(Sign::Minus)).unwrap();
    assert_eq!(minus, canonical_rep(&p("3"), Some(Sign::Plus)).unwrap().neg());
}

#[test]
fn sign_of_powers_of_cycles() {
    for m in 2..=12u32 {
        for a in 1..=2u8 {
            let n = a + m as u8;
            // powers through words: one generator at a time is far cheaper
            // than squaring dense Clifford elements
            let u = Word::new(n, (a..a + m as u8).collect(), false);
            let v = Word::new(n, (a..a + m as u8 - 1).collect(), false);
            let e = m * (m * m + 4 - 3 * m) / 2;
            let v = v.pow(m).evaluate();
            let rhs = if e % 2 == 1 { v.neg() } else { v };
            assert_eq!(u.pow(m + 1).evaluate(), rhs, "m = {m}, a = {a}");
        }
    }
}

#[test]
fn long_cycle_mod_8_law() {
    for k in 2..=16u32 {
        let pi = canonical_word(&Partition::new(vec![k])).pow(k).evaluate();
        let trivial = pi.is_identity();
        assert!(trivial || pi.is_minus_identity());
        assert_eq!(trivial, matches!(k % 8, 0 | 1 | 6 | 7), "k = {k}");
    }
}

#[test]
fn epsilon_and_order() {
    assert_eq!(epsilon(&p("6")), Sign::Plus);
    assert_eq!(epsilon(&p("5")), Sign::Minus);
    let two = ClassLabel::new(Group::S, p("2"), Some(Sign::Plus), None).unwrap();
    assert_eq!(order(&two), 4);
    for n in 1..=9 {
        for label in classes(Group::S, n) {
            let d = order(&label);
            let k = label.cycle_type.lcm();
            assert!(d == k || d == 2 * k);
            assert!(label_word(&label).pow(d as u32).evaluate().is_identity(), "{label}");
            if d == 2 * k {
                assert!(label_word(&label).pow(k as u32).evaluate().is_minus_identity());
            }
        }
    }
}

#[test]
fn fifteen_cycle_powers() {
    let sigma = ClassLabel::new(Group::S, p("15"), Some(Sign::Plus), None).unwrap();
    let cube = power_class(&sigma, 3).unwrap();
    assert_eq!(cube, ClassLabel::new(Group::S, p("5,5,5"), Some(Sign::Minus), None).unwrap());
    let fifth = power_class(&sigma, 5).unwrap();
    assert_eq!(fifth, ClassLabel::new(Group::S, p("3^5"), Some(Sign::Minus), None).unwrap());
    let id = power_class(&sigma, 15).unwrap();
    assert_eq!(id.cycle_type, p("1^15"));
    assert_eq!(id.z_sign, Some(Sign::Plus));
    assert!(label_word(&sigma).pow(15).evaluate().is_identity());
    let zs = sigma.times_z();
    assert!(label_word(&zs).pow(15).evaluate().is_minus_identity());
    // (σ_{3^5}^+)^3 = z^5 while (σ^5)^3 = σ^15 = 1
    let s35 = canonical_rep(&p("3^5"), Some(Sign::Plus)).unwrap();
    assert!(s35.pow(3).is_minus_identity());
}

#[test]
fn power_class_basics() {
    for label in classes(Group::S, 6) {
        let id = power_class(&label, 0).unwrap();
        assert_eq!(id.cycle_type, p("1^6"));
        assert_eq!(id.z_sign, Some(Sign::Plus));
        assert_eq!(power_class(&label, 1).unwrap(), label);
    }
    let eight = ClassLabel::new(Group::S, p("8"), Some(Sign::Plus), None).unwrap();
    let sq = power_class(&eight, 2).unwrap();
    assert_eq!(sq.cycle_type, p("4,4"));
    assert_eq!(sq.z_sign, None);
    assert_eq!(power_class(&eight.times_z(), 2).unwrap(), sq);
    let map = power_map(&ClassLabel::new(Group::S, p("3"), Some(Sign::Plus), None).unwrap()).unwrap();
    assert_eq!(map.len(), 6);
    assert_eq!(map[3].z_sign, Some(Sign::Minus));
}

#[test]
fn z_flips_split_classes() {
    for n in 1..=8 {
        for label in classes(Group::S, n) {
            let g = label_rep(&label);
            assert_eq!(class_of(&g, Group::S).unwrap(), label);
            assert_eq!(class_of(&g.neg(), Group::S).unwrap(), label.times_z());
        }
        for label in classes(Group::A, n) {
            let g = label_rep(&label);
            assert_eq!(class_of(&g, Group::A).unwrap(), label, "n = {n}");
            assert_eq!(class_of(&g.neg(), Group::A).unwrap(), label.times_z());
        }
    }
}

#[test]
fn class_labels_validate() {
    assert!(ClassLabel::new(Group::S, p("2,2"), Some(Sign::Plus), None).is_err());
    assert!(ClassLabel::new(Group::S, p("3,1"), None, None).is_err());
    assert!(ClassLabel::new(Group::S, p("2,1"), Some(Sign::Minus), None).is_ok());
    assert!(ClassLabel::new(Group::A, p("2,1"), Some(Sign::Minus), None).is_err());
    assert!(ClassLabel::new(Group::A, p("4,2"), None, Some(AltTag::A)).is_ok());
    assert!(ClassLabel::new(Group::A, p("5,3,1"), Some(Sign::Plus), None).is_err());
    assert!(ClassLabel::new(Group::A, p("5,3,1"), Some(Sign::Plus), Some(AltTag::B)).is_ok());
    let l = ClassLabel::new(Group::A, p("5,3,1"), Some(Sign::Plus), Some(AltTag::B)).unwrap();
    assert_eq!(l.to_string(), "(5,3,1)+b");
    assert!(class_of(&CoverElement::generator(3, 1), Group::A).is_err());
}

#[test]
fn class_sizes_sum_to_group_order() {
    for n in 1..=12 {
        for group in [Group::S, Group::A] {
            let total: BigUint = classes(group, n).iter().map(class_size).sum();
            assert_eq!(total, group_order(group, n), "{group:?} n = {n}");
        }
    }
    let center = ClassLabel::new(Group::S, p("1^4"), Some(Sign::Plus), None).unwrap();
    assert_eq!(class_size(&center), BigUint::from(1u32));
}

fn closure(n: u8, group: Group) -> Vec<CoverElement> {
    let mut seen: HashSet<CoverElement> = HashSet::new();
    let mut queue = vec![CoverElement::identity(n)];
    seen.insert(queue[0].clone());
    let gens: Vec<CoverElement> = match group {
        Group::S => (1..n).map(|j| t(n, j)).collect(),
        Group::A => (1..n.saturating_sub(1)).map(|j| t(n, j).mul(&t(n, j + 1))).chain([z(n)]).collect(),
    };
    while let Some(g) = queue.pop() {
        for s in &gens {
            let h = g.mul(s);
            if seen.insert(h.clone()) {
                queue.push(h);
            }
        }
    }
    seen.into_iter().collect()
}

#[test]
fn brute_force_classes() {
    for n in 2..=6u8 {
        for group in [Group::S, Group::A] {
            let elems = closure(n, group);
            assert_eq!(BigUint::from(elems.len()), group_order(group, n as u32));
            let mut label_of: HashMap<CoverElement, ClassLabel> = HashMap::new();
            for g in &elems {
                label_of.insert(g.clone(), class_of(g, group).unwrap());
            }
            let mut done: HashSet<CoverElement> = HashSet::new();
            let mut found = Vec::new();
            for g in &elems {
                if done.contains(g) {
                    continue;
                }
                let orbit: HashSet<CoverElement> = elems.iter().map(|h| h.mul(g).mul(&h.inverse())).collect();
                let label = &label_of[g];
                for x in &orbit {
                    assert_eq!(&label_of[x], label, "{group:?} n = {n}: class label not invariant");
                }
                assert_eq!(BigUint::from(orbit.len()), class_size(label), "{label}");
                found.push(label.clone());
                done.extend(orbit);
            }
            found.sort();
            let mut expected = classes(group, n as u32);
            expected.sort();
            assert_eq!(found, expected, "{group:?} n = {n}");
        }
    }
}

#[test]
fn s3_split_three_cycles() {
    let plus = ClassLabel::new(Group::S, p("3"), Some(Sign::Plus), None).unwrap();
    assert_eq!(class_size(&plus), BigUint::from(2u32));
    assert_eq!(class_size(&plus.times_z()), BigUint::from(2u32));
}

#[test]
fn bubble_word_lifts_permutation() {
    let q = Perm::from_images(vec![3, 0, 4, 1, 2]).unwrap();
    let w = q.bubble_word();
    assert_eq!(CoverElement::from_word(5, &w).perm(), &q);
    assert_eq!(q.parity(), if w.len() % 2 == 0 { Parity::Even } else { Parity::Odd });
}

fn word_strategy(n: u8, len: usize) -> impl Strategy<Value = Vec<u8>> {
    proptest::collection::vec(1..n, 0..=len)
}

proptest! {
    #[test]
    fn inverse_is_two_sided(w in word_strategy(8, 20)) {
        let g = CoverElement::from_word(8, &w);
        prop_assert!(g.mul(&g.inverse()).is_identity());
        prop_assert!(g.inverse().mul(&g).is_identity());
    }

    #[test]
    fn conjugation_by_word_matches_products(g in word_strategy(7, 20), h in word_strategy(7, 12)) {
        let g = CoverElement::from_word(7, &g);
        let hh = CoverElement::from_word(7, &h);
        prop_assert_eq!(g.conjugate_by_word(&h), hh.mul(&g).mul(&hh.inverse()));
    }

    #[test]
    fn faithful_up_to_sign(a in word_strategy(6, 20), b in word_strategy(6, 20)) {
        let ga = CoverElement::from_word(6, &a);
        let gb = CoverElement::from_word(6, &b);
        let same_perm = ga.perm() == gb.perm();
        let la = CoverElement::from_word(6, &ga.perm().bubble_word());
        let lb = CoverElement::from_word(6, &gb.perm().bubble_word());
        let sa = ga.sign_relative_to(&la);
        let sb = gb.sign_relative_to(&lb);
        prop_assert!(sa.is_some() && sb.is_some());
        prop_assert_eq!(ga == gb, same_perm && sa == sb);
    }

    #[test]
    fn class_invariant_under_conjugation(g in word_strategy(9, 20), h in word_strategy(9, 20)) {
        let ge = CoverElement::from_word(9, &g);
        let conj = ge.conjugate_by_word(&h);
        prop_assert_eq!(class_of(&conj, Group::S).unwrap(), class_of(&ge, Group::S).unwrap());
        if ge.parity() == Parity::Even {
            let even_h: Vec<u8> = if h.len() % 2 == 0 { h.clone() } else { h[1..].to_vec() };
            let conj = ge.conjugate_by_word(&even_h);
            prop_assert_eq!(class_of(&conj, Group::A).unwrap(), class_of(&ge, Group::A).unwrap());
        }
    }
}
