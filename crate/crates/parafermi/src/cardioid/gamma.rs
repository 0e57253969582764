//! Γ at rational arguments by error-bounded Stirling with argument
//! shifting: Γ(z) = Γ(z+N) / (z(z+1)···(z+N−1)), the shifted value far
//! enough out that the asymptotic series reaches the target precision
//! while its terms still decrease.

use super::real::{exp, ln, pi, HighPrecReal};
use crate::error::{Error, Result};
use crate::exact::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::sync::Arc;
use std::sync::Mutex;
use std::sync::OnceLock;

/// Exact Bernoulli numbers B_{2n} for n = 1..count, through the tangent
/// number triangle (integer arithmetic only), cached across calls.
fn bernoulli_even(count: usize) -> Arc<Vec<Rational>> {
    static CACHE: OnceLock<Mutex<Arc<Vec<Rational>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(Arc::new(Vec::new())));
    let mut stored = cache.lock().unwrap();
    if stored.len() >= count {
        return Arc::clone(&stored);
    }
    // tangent numbers T_n = E(2n−1, 2n−1) from the Entringer recurrence
    // E(n,k) = E(n,k−1) + E(n−1,n−k); then |B_{2n}| = 2n·T_n/(4^n(4^n−1))
    let mut row = vec![BigInt::one()];
    let mut tangents = Vec::with_capacity(count);
    for m in 1..=(2 * count - 1) {
        let mut next = vec![BigInt::zero(); m + 1];
        for k in 1..=m {
            next[k] = &next[k - 1] + &row[m - k];
        }
        row = next;
        if m % 2 == 1 {
            tangents.push(row[m].clone());
        }
    }
    let mut out = Vec::with_capacity(count);
    for (i, t) in tangents.iter().enumerate() {
        let n = (i + 1) as u32;
        let sign = if n % 2 == 1 { BigInt::one() } else { -BigInt::one() };
        let num = sign * t * BigInt::from(2 * n);
        let p = BigInt::from(2u8).pow(2 * n);
        let den = &p * (&p - 1);
        out.push(Rational::new(num, den));
    }
    *stored = Arc::new(out);
    Arc::clone(&stored)
}

/// ln Γ(w) for a real value w ≥ 8 by the Stirling series; the remainder
/// is bounded by the first omitted term, which must drop below the ulp
/// scale before the terms stop decreasing.
fn ln_gamma_stirling(w: &HighPrecReal) -> Result<HighPrecReal> {
    let digits = w.digits();
    let half = HighPrecReal::from_rational(&Rational::new(1.into(), 2.into()), digits);
    let ln_w = ln(w)?;
    let two_pi = pi(digits).mul_int(2);
    let mut total = w
        .sub(&half)
        .mul(&ln_w)
        .sub(w)
        .add(&ln(&two_pi)?.div_int(2));
    let w2 = w.mul(w);
    let mut power = w.clone(); // w^{2j−1}
    let mut prev_mag: Option<BigInt> = None;
    let mut j = 1usize;
    let mut bern = bernoulli_even(64);
    loop {
        if j > bern.len() {
            bern = bernoulli_even((2 * bern.len()).max(j));
        }
        let b = &bern[j - 1];
        let coeff = b / Rational::from_integer(BigInt::from((2 * j) * (2 * j - 1)));
        let term = HighPrecReal::from_rational(&coeff, digits).div(&power)?;
        let mag = term.mantissa().abs();
        if let Some(p) = &prev_mag {
            if &mag >= p {
                return Err(Error::PrecisionExhausted(
                    "stirling series diverges before target precision; shift further".into(),
                ));
            }
        }
        total = total.add(&term);
        if mag <= BigInt::from(10) {
            return Ok(total);
        }
        prev_mag = Some(mag);
        power = power.mul(&w2);
        j += 1;
        if j > 20 * digits as usize {
            return Err(Error::PrecisionExhausted("stirling series budget".into()));
        }
    }
}

/// Γ(z) for rational z > 0 to `digits` precision (error below
/// 10^−(digits−5)).
pub fn gamma(z: &Rational, digits: u32) -> Result<HighPrecReal> {
    if !z.is_positive() {
        return Err(Error::OutOfRange(format!("gamma needs z > 0, got {z}")));
    }
    let work = digits + 15;
    // shift far enough that the series bottoms out below target
    let shift_target = Rational::from_integer(BigInt::from(2 * work as u64 + 16));
    let n_shift = if z >= &shift_target {
        0u64
    } else {
        let diff = &shift_target - z;
        (diff.to_integer() + 1u8)
            .try_into()
            .map_err(|_| Error::PrecisionExhausted("shift out of range".into()))?
    };
    let w_rat = z + Rational::from_integer(BigInt::from(n_shift));
    let w = HighPrecReal::from_rational(&w_rat, work);
    let ln_gamma_w = ln_gamma_stirling(&w)?;
    let gamma_w = exp(&ln_gamma_w)?;
    // divide by the exact pochhammer z(z+1)···(z+n−1), accumulated as
    // raw numerator and denominator so no gcd runs inside the loop
    let (a, b) = (z.numer().clone(), z.denom().clone());
    let mut poch_num = BigInt::one();
    for i in 0..n_shift {
        poch_num *= &a + BigInt::from(i) * &b;
    }
    let poch_den = b.pow(n_shift as u32);
    let result = gamma_w.mul_bigint(&poch_den).div_bigint(&poch_num);
    Ok(result.round_to(digits))
}
