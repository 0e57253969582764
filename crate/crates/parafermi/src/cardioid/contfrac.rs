//! Continued-fraction expansion with a precision-doubling stability
//! certificate: only the quotient prefix that comes out identical at
//! twice the working precision is reported.

use super::real::HighPrecReal;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::Signed;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Floor at every step; quotients after the first are positive.
    Simple,
    /// Rounding alternates so the signs follow ℓ_{2n−1} < 0, ℓ_{2n} > 0.
    Alternating,
}

#[derive(Clone, Debug)]
pub struct ContFrac {
    pub quotients: Vec<BigInt>,
    pub stable_prefix: usize,
    pub mode: Mode,
}

impl ContFrac {
    /// 0-based quotient access over the stable prefix.
    pub fn quotient(&self, index: usize) -> Result<&BigInt> {
        if index >= self.stable_prefix {
            return Err(Error::PrecisionExhausted(format!(
                "quotient {index} beyond the stable prefix {}",
                self.stable_prefix
            )));
        }
        Ok(&self.quotients[index])
    }
}

impl fmt::Display for ContFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, q) in self.quotients.iter().take(self.stable_prefix).enumerate() {
            if i == 1 {
                write!(f, "; ")?;
            } else if i > 1 {
                write!(f, ", ")?;
            }
            write!(f, "{q}")?;
        }
        write!(f, "]")
    }
}

/// Raw expansion at the value's own precision; stops when the residual
/// sinks under its own error bound or `max_terms` is reached.
pub fn expand_raw(x: &HighPrecReal, max_terms: usize, mode: Mode) -> Vec<BigInt> {
    let mut quotients = Vec::new();
    let mut current = x.clone();
    for index in 0..max_terms {
        let q = match mode {
            Mode::Simple => current.floor_int(),
            Mode::Alternating => {
                if index % 2 == 0 {
                    current.ceil_int()
                } else {
                    current.floor_int()
                }
            }
        };
        let rem = current.fractional_after(&q);
        quotients.push(q);
        // the remainder must stand clear of its error bound to recurse
        if rem.mantissa().abs() <= rem.err_ulps() * BigInt::from(4u8) {
            break;
        }
        match rem.recip() {
            Ok(next) => current = next,
            Err(_) => break,
        }
    }
    quotients
}

/// Expands at the given precision and again at double precision, keeping
/// the common prefix as certified-stable.
pub fn expand_stable<F>(compute: F, digits: u32, max_terms: usize, mode: Mode) -> Result<ContFrac>
where
    F: Fn(u32) -> Result<HighPrecReal>,
{
    let base = expand_raw(&compute(digits)?, max_terms, mode);
    let check = expand_raw(&compute(2 * digits)?, max_terms, mode);
    let stable = base
        .iter()
        .zip(&check)
        .take_while(|(a, b)| a == b)
        .count();
    Ok(ContFrac { quotients: base, stable_prefix: stable, mode })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;
    use num_bigint::BigInt;

    #[test]
    fn golden_ratio_is_all_ones() {
        // (1+√5)/2 at D=50: every quotient 1
        let cf = expand_stable(
            |d| {
                let five = HighPrecReal::from_integer(5, d);
                Ok(five
                    .sqrt()?
                    .add(&HighPrecReal::from_integer(1, d))
                    .div_int(2))
            },
            50,
            40,
            Mode::Simple,
        )
        .unwrap();
        assert!(cf.stable_prefix >= 35);
        for i in 0..cf.stable_prefix {
            assert_eq!(*cf.quotient(i).unwrap(), BigInt::from(1));
        }
    }

    #[test]
    fn rational_terminates() {
        let q = Rational::new(BigInt::from(355), BigInt::from(113));
        let x = HighPrecReal::from_rational(&q, 40);
        let quotients = expand_raw(&x, 10, Mode::Simple);
        // the terminating tail (…,16 vs …,15,1) is ambiguous at fixed
        // precision; only the certified prefix is trustworthy
        assert_eq!(quotients[0], BigInt::from(3));
        assert_eq!(quotients[1], BigInt::from(7));
        assert!(quotients.len() <= 5);
    }

    #[test]
    fn alternating_signs() {
        // e.g. √2 alternating: signs must alternate after the lead
        let cf = expand_stable(
            |d| HighPrecReal::from_integer(2, d).sqrt(),
            60,
            20,
            Mode::Alternating,
        )
        .unwrap();
        for (i, q) in cf.quotients.iter().take(cf.stable_prefix).enumerate().skip(1) {
            if i % 2 == 1 {
                assert!(q.is_negative(), "slot {i} = {q}");
            } else {
                assert!(q.is_positive(), "slot {i} = {q}");
            }
        }
    }
}
