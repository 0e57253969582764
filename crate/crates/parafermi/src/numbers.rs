//! Small exact-integer helpers shared across modules.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Binomial coefficient C(n, k) over big integers.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// k-th Catalan number, C(2k, k)/(k+1).
pub fn catalan(k: u64) -> BigInt {
    binomial(2 * k, k) / BigInt::from(k + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_values() {
        let expect: [i64; 9] = [1, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (k, &v) in expect.iter().enumerate() {
            assert_eq!(catalan(k as u64), BigInt::from(v));
        }
        assert_eq!(catalan(14), BigInt::from(2674440));
        assert_eq!(catalan(15), BigInt::from(9694845));
    }
}
