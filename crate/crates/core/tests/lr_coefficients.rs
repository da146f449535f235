use num_traits::{One, Zero};
use spinpoly_core::exactnum::Rational;
use spinpoly_core::partitions::strict_partitions;
use spinpoly_core::qtableaux::{lr_two_power, q_structure_constant, shifted_lr};

fn pow2(e: i64) -> Rational {
    let two = Rational::from_integer(2.into());
    let mut r = Rational::one();
    for _ in 0..e.unsigned_abs() {
        r = if e >= 0 { r * &two } else { r / &two };
    }
    r
}

// Tableau counts and Q-function products are computed along unrelated paths.
#[test]
fn tableau_count_matches_q_product() {
    for n in 2..=9u32 {
        for lambda in strict_partitions(n) {
            for m in 1..n {
                for mu in strict_partitions(m) {
                    for nu in strict_partitions(n - m) {
                        let f = shifted_lr(&lambda, &mu, &nu);
                        let q = q_structure_constant(&mu, &nu, &lambda).unwrap();
                        let expect = Rational::from_integer(f.into()) * pow2(lr_two_power(&mu, &nu, &lambda));
                        assert_eq!(q, expect, "{lambda} / {mu} {nu}");
                        if !q.is_zero() {
                            assert!(f > 0);
                        }
                    }
                }
            }
        }
    }
}
