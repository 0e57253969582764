//! Property tests for the algebraic invariants: exact ring axioms,
//! radical canonicalization, descriptor round trips, and difference
//! monotonicity.

use num_bigint::BigInt;
use parafermi::diffs::naive_differences;
use parafermi::exact::{normalize_sqrt, ExactScalar, Rational};
use parafermi::intmat::IntMatrix;
use parafermi::mod8::{expand_descriptor, pattern_descriptor, Block2, PatternDescriptor};
use proptest::prelude::*;

fn scalar_strategy() -> impl Strategy<Value = ExactScalar> {
    // up to three terms q·√d with small rationals and radicands
    prop::collection::vec((1u64..60, -40i64..40, 1i64..12), 0..3).prop_map(|terms| {
        let mut acc = ExactScalar::zero();
        for (d, num, den) in terms {
            let q = Rational::new(BigInt::from(num), BigInt::from(den));
            acc = &acc + &normalize_sqrt(d).scale(&q);
        }
        acc
    })
}

proptest! {
    #[test]
    fn addition_commutes(a in scalar_strategy(), b in scalar_strategy()) {
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn multiplication_associates(
        a in scalar_strategy(),
        b in scalar_strategy(),
        c in scalar_strategy()
    ) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multiplication_distributes(
        a in scalar_strategy(),
        b in scalar_strategy(),
        c in scalar_strategy()
    ) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn scaled_root_squares_to_rational(c_num in -30i64..30, c_den in 1i64..10, d in 1u64..80) {
        let c = Rational::new(BigInt::from(c_num), BigInt::from(c_den));
        let x = normalize_sqrt(d).scale(&c);
        let squared = &x * &x;
        // (c·√d)² = c²·d is rational whatever d was
        let expect = &c * &c * Rational::from_integer(BigInt::from(d));
        prop_assert_eq!(squared.as_rational(), Some(expect));
    }

    #[test]
    fn canonicalization_is_idempotent(d in 1u64..500) {
        // normalizing c·√e with e already squarefree changes nothing
        let once = normalize_sqrt(d);
        for (radicand, coeff) in once.terms() {
            let again = normalize_sqrt(radicand).scale(coeff);
            prop_assert_eq!(&again, &once);
        }
    }

    #[test]
    fn sorted_differences_are_nonnegative(mut values in prop::collection::vec(-1000i64..1000, 2..20)) {
        values.sort_unstable();
        let big: Vec<BigInt> = values.into_iter().map(BigInt::from).collect();
        for d in naive_differences(&big) {
            prop_assert!(d >= BigInt::from(0));
        }
    }

    #[test]
    fn descriptor_round_trip(blocks in prop::collection::vec((0u8..8, 0u8..8, 0u8..8, 0u8..8), 1..5)) {
        // expanding any descriptor and reading it back is the identity
        let len = blocks.len().next_power_of_two();
        let mut blocks: Vec<Block2> = blocks
            .into_iter()
            .map(|(a, b, c, d)| Block2 { a, b, c, d })
            .collect();
        while blocks.len() < len {
            let last = *blocks.last().unwrap();
            blocks.push(last);
        }
        let descriptor = PatternDescriptor::Blocks(blocks);
        let size = 2 * len;
        let square: IntMatrix = expand_descriptor(&descriptor, size).unwrap();
        let back = pattern_descriptor(&square).unwrap();
        prop_assert_eq!(expand_descriptor(&back, size).unwrap(), square);
    }
}
