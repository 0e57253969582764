//! Fixed-point arbitrary-precision reals: a big-integer mantissa scaled
//! by 10^(−digits), with a conservative absolute error bound carried in
//! ulps. Comparisons are only meaningful outside the error bound; the
//! continued-fraction machinery certifies its output by recomputing at
//! doubled precision instead of leaning on these bounds.

use crate::error::{Error, Result};
use crate::exact::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Mutex;
use std::sync::OnceLock;

#[derive(Clone)]
pub struct HighPrecReal {
    mantissa: BigInt,
    digits: u32,
    err_ulps: BigInt,
}

fn scale(digits: u32) -> BigInt {
    BigInt::from(10u8).pow(digits)
}

impl HighPrecReal {
    pub fn zero(digits: u32) -> Self {
        HighPrecReal { mantissa: BigInt::zero(), digits, err_ulps: BigInt::zero() }
    }

    pub fn from_integer(n: i64, digits: u32) -> Self {
        HighPrecReal { mantissa: BigInt::from(n) * scale(digits), digits, err_ulps: BigInt::zero() }
    }

    pub fn from_rational(q: &Rational, digits: u32) -> Self {
        let mantissa = (q.numer() * scale(digits)).div_floor(q.denom());
        HighPrecReal { mantissa, digits, err_ulps: BigInt::one() }
    }

    pub fn from_parts(mantissa: BigInt, digits: u32, err_ulps: BigInt) -> Self {
        HighPrecReal { mantissa, digits, err_ulps }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn err_ulps(&self) -> &BigInt {
        &self.err_ulps
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    fn assert_same_scale(&self, rhs: &Self) {
        assert_eq!(self.digits, rhs.digits, "mixed precisions");
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.assert_same_scale(rhs);
        HighPrecReal {
            mantissa: &self.mantissa + &rhs.mantissa,
            digits: self.digits,
            err_ulps: &self.err_ulps + &rhs.err_ulps,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.assert_same_scale(rhs);
        HighPrecReal {
            mantissa: &self.mantissa - &rhs.mantissa,
            digits: self.digits,
            err_ulps: &self.err_ulps + &rhs.err_ulps,
        }
    }

    pub fn neg(&self) -> Self {
        HighPrecReal {
            mantissa: -&self.mantissa,
            digits: self.digits,
            err_ulps: self.err_ulps.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.assert_same_scale(rhs);
        let s = scale(self.digits);
        let mantissa = (&self.mantissa * &rhs.mantissa).div_floor(&s);
        // |Δ(ab)| ≤ |a|Δb + |b|Δa + rounding
        let err = (&self.mantissa.abs() * &rhs.err_ulps + &rhs.mantissa.abs() * &self.err_ulps)
            .div_floor(&s)
            + 2;
        HighPrecReal { mantissa, digits: self.digits, err_ulps: err }
    }

    pub fn mul_int(&self, k: i64) -> Self {
        HighPrecReal {
            mantissa: &self.mantissa * k,
            digits: self.digits,
            err_ulps: &self.err_ulps * k.abs(),
        }
    }

    pub fn mul_bigint(&self, k: &BigInt) -> Self {
        HighPrecReal {
            mantissa: &self.mantissa * k,
            digits: self.digits,
            err_ulps: &self.err_ulps * k.abs() + 1,
        }
    }

    pub fn div_bigint(&self, k: &BigInt) -> Self {
        HighPrecReal {
            mantissa: (&self.mantissa).div_floor(k),
            digits: self.digits,
            err_ulps: (&self.err_ulps).div_floor(&k.abs()) + 2,
        }
    }

    pub fn div_int(&self, k: i64) -> Self {
        HighPrecReal {
            mantissa: (&self.mantissa).div_floor(&BigInt::from(k)),
            digits: self.digits,
            err_ulps: (&self.err_ulps).div_floor(&BigInt::from(k.abs())) + 1,
        }
    }

    /// Exact scaling by a power of two.
    pub fn shl2(&self, bits: u32) -> Self {
        HighPrecReal {
            mantissa: &self.mantissa << bits,
            digits: self.digits,
            err_ulps: &self.err_ulps << bits,
        }
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        self.assert_same_scale(rhs);
        if rhs.mantissa.is_zero() {
            return Err(Error::PrecisionExhausted("division by zero".into()));
        }
        let s = scale(self.digits);
        let mantissa = (&self.mantissa * &s).div_floor(&rhs.mantissa);
        // |Δ(a/b)| ≤ (Δa + |a/b|Δb)/|b| + rounding
        let err = ((&self.err_ulps * &s) + mantissa.abs() * &rhs.err_ulps)
            .div_floor(&rhs.mantissa.abs())
            + 2;
        Ok(HighPrecReal { mantissa, digits: self.digits, err_ulps: err })
    }

    pub fn recip(&self) -> Result<Self> {
        HighPrecReal::from_integer(1, self.digits).div(self)
    }

    /// Integer square root of the scaled value (value must be ≥ 0).
    pub fn sqrt(&self) -> Result<Self> {
        if self.mantissa.is_negative() {
            return Err(Error::PrecisionExhausted("sqrt of negative value".into()));
        }
        let s = scale(self.digits);
        let mantissa = (&self.mantissa * &s).sqrt();
        // Δ√a ≈ Δa / (2√a)
        let err = if mantissa.is_zero() {
            &self.err_ulps + 1
        } else {
            (&self.err_ulps * &s).div_floor(&(BigInt::from(2) * &mantissa)) + 2
        };
        Ok(HighPrecReal { mantissa, digits: self.digits, err_ulps: err })
    }

    pub fn abs(&self) -> Self {
        HighPrecReal {
            mantissa: self.mantissa.abs(),
            digits: self.digits,
            err_ulps: self.err_ulps.clone(),
        }
    }

    /// ⌊value⌋ as a big integer.
    pub fn floor_int(&self) -> BigInt {
        self.mantissa.div_floor(&scale(self.digits))
    }

    pub fn ceil_int(&self) -> BigInt {
        self.mantissa.div_ceil(&scale(self.digits))
    }

    pub fn fractional_after(&self, n: &BigInt) -> Self {
        HighPrecReal {
            mantissa: &self.mantissa - n * scale(self.digits),
            digits: self.digits,
            err_ulps: self.err_ulps.clone(),
        }
    }

    /// Certified comparison: None when the error bounds overlap.
    pub fn cmp_certified(&self, rhs: &Self) -> Option<Ordering> {
        self.assert_same_scale(rhs);
        let diff = &self.mantissa - &rhs.mantissa;
        let tolerance = &self.err_ulps + &rhs.err_ulps;
        if diff.abs() <= tolerance {
            None
        } else {
            Some(diff.cmp(&BigInt::zero()))
        }
    }

    /// |self − rhs| ≤ 10^(−decimals)?
    pub fn agrees_within(&self, rhs: &Self, decimals: u32) -> bool {
        self.assert_same_scale(rhs);
        let diff = (&self.mantissa - &rhs.mantissa).abs();
        diff <= scale(self.digits - decimals)
    }

    /// Rounds to a lower precision, folding the error bound in.
    pub fn round_to(&self, digits: u32) -> Self {
        if digits >= self.digits {
            let f = scale(digits - self.digits);
            return HighPrecReal {
                mantissa: &self.mantissa * &f,
                digits,
                err_ulps: &self.err_ulps * &f,
            };
        }
        let f = scale(self.digits - digits);
        HighPrecReal {
            mantissa: (&self.mantissa).div_floor(&f),
            digits,
            err_ulps: (&self.err_ulps).div_floor(&f) + 1,
        }
    }

    pub fn to_f64(&self) -> f64 {
        Rational::new(self.mantissa.clone(), scale(self.digits))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    /// Decimal rendering with the given number of fractional digits.
    pub fn to_decimal_string(&self, frac_digits: u32) -> String {
        let r = self.round_to(frac_digits);
        let s = scale(frac_digits);
        let (int, frac) = r.mantissa.div_rem(&s);
        let sign = if r.mantissa.is_negative() && int.is_zero() { "-" } else { "" };
        format!(
            "{sign}{int}.{:0>width$}",
            frac.abs().to_string(),
            width = frac_digits as usize
        )
    }
}

impl fmt::Debug for HighPrecReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (D={}, err={} ulp)", self.to_decimal_string(12.min(self.digits)), self.digits, self.err_ulps)
    }
}

/// π computed by Machin's formula, cached per precision.
pub fn pi(digits: u32) -> HighPrecReal {
    static CACHE: OnceLock<Mutex<BTreeMap<u32, BigInt>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    {
        let map = cache.lock().unwrap();
        if let Some(m) = map.get(&digits) {
            return HighPrecReal::from_parts(m.clone(), digits, BigInt::from(4));
        }
    }
    let work = digits + 10;
    let s = scale(work);
    // π = 16·atan(1/5) − 4·atan(1/239)
    let atan_inv = |x: i64| -> BigInt {
        let mut term: BigInt = &s / x;
        let mut total = term.clone();
        let mut k = 1u32;
        let x2 = x * x;
        while !term.is_zero() {
            term = term / x2;
            let signed = &term / (2 * k as i64 + 1);
            if k % 2 == 1 {
                total -= &signed;
            } else {
                total += &signed;
            }
            if signed.is_zero() {
                break;
            }
            k += 1;
        }
        total
    };
    let value: BigInt = atan_inv(5) * 16 - atan_inv(239) * 4;
    let mantissa = value.div_floor(&scale(10));
    cache.lock().unwrap().insert(digits, mantissa.clone());
    HighPrecReal::from_parts(mantissa, digits, BigInt::from(4))
}

/// ln 2 via 2·atanh(1/3), cached per precision.
pub fn ln2(digits: u32) -> HighPrecReal {
    static CACHE: OnceLock<Mutex<BTreeMap<u32, BigInt>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    {
        let map = cache.lock().unwrap();
        if let Some(m) = map.get(&digits) {
            return HighPrecReal::from_parts(m.clone(), digits, BigInt::from(4));
        }
    }
    let work = digits + 10;
    let s = scale(work);
    let mut term: BigInt = &s / 3;
    let mut total = term.clone();
    let mut k = 1u64;
    while !term.is_zero() {
        term = term / 9;
        let add = &term / (2 * k + 1);
        if add.is_zero() {
            break;
        }
        total += &add;
        k += 1;
    }
    total *= 2;
    let mantissa = total.div_floor(&scale(10));
    cache.lock().unwrap().insert(digits, mantissa.clone());
    HighPrecReal::from_parts(mantissa, digits, BigInt::from(4))
}

/// sin by Taylor series; the arguments in play are at most π/4.
pub fn sin(x: &HighPrecReal) -> HighPrecReal {
    let digits = x.digits();
    let mut term = x.clone();
    let mut total = x.clone();
    let x2 = x.mul(x);
    let mut n = 1i64;
    loop {
        term = term.mul(&x2).div_int((n + 1) * (n + 2));
        if term.mantissa().is_zero() {
            break;
        }
        if (n / 2) % 2 == 0 {
            total = total.sub(&term);
        } else {
            total = total.add(&term);
        }
        n += 2;
        if n > 4 * digits as i64 {
            break;
        }
    }
    total
}

/// cos by Taylor series for small arguments.
pub fn cos(x: &HighPrecReal) -> HighPrecReal {
    let digits = x.digits();
    let mut term = HighPrecReal::from_integer(1, digits);
    let mut total = term.clone();
    let x2 = x.mul(x);
    let mut n = 0i64;
    loop {
        term = term.mul(&x2).div_int((n + 1) * (n + 2));
        if term.mantissa().is_zero() {
            break;
        }
        if (n / 2) % 2 == 0 {
            total = total.sub(&term);
        } else {
            total = total.add(&term);
        }
        n += 2;
        if n > 4 * digits as i64 {
            break;
        }
    }
    total
}

/// exp with ln2 argument reduction: x = m·ln2 + r, exp(r) by squared
/// Taylor, then an exact shift by 2^m.
pub fn exp(x: &HighPrecReal) -> Result<HighPrecReal> {
    let digits = x.digits();
    let l2 = ln2(digits);
    let m = x.div(&l2)?.floor_int();
    let m_i64 = m
        .to_i64()
        .ok_or_else(|| Error::PrecisionExhausted("exp argument out of range".into()))?;
    let r = x.sub(&l2.mul(&HighPrecReal::from_integer(m_i64, digits)));
    // r ∈ [0, ln2); halve 16 times for fast convergence
    const HALVINGS: u32 = 16;
    let mut small = r;
    for _ in 0..HALVINGS {
        small = small.div_int(2);
    }
    let mut term = HighPrecReal::from_integer(1, digits);
    let mut total = term.clone();
    let mut k = 1i64;
    loop {
        term = term.mul(&small).div_int(k);
        if term.mantissa().is_zero() {
            break;
        }
        total = total.add(&term);
        k += 1;
        if k > 4 * digits as i64 {
            break;
        }
    }
    for _ in 0..HALVINGS {
        total = total.mul(&total);
    }
    let shifted = if m_i64 >= 0 {
        total.shl2(m_i64 as u32)
    } else {
        let denom = HighPrecReal::from_integer(1, digits).shl2((-m_i64) as u32);
        total.div(&denom)?
    };
    Ok(shifted)
}

/// Natural log: ln(x) = e·ln2 + 2·atanh((m−1)/(m+1)) after scaling x
/// into [1, 2) by a power of two.
pub fn ln(x: &HighPrecReal) -> Result<HighPrecReal> {
    if !x.mantissa().is_positive() {
        return Err(Error::PrecisionExhausted("log of non-positive value".into()));
    }
    let digits = x.digits();
    let one = HighPrecReal::from_integer(1, digits);
    let two = HighPrecReal::from_integer(2, digits);
    let mut m = x.clone();
    let mut e = 0i64;
    while m.cmp_certified(&two) != Some(Ordering::Less) {
        m = m.div_int(2);
        e += 1;
    }
    while m.cmp_certified(&one) == Some(Ordering::Less) {
        m = m.mul_int(2);
        e -= 1;
    }
    let num = m.sub(&one);
    let den = m.add(&one);
    let t = num.div(&den)?;
    let t2 = t.mul(&t);
    let mut term = t.clone();
    let mut total = t.clone();
    let mut k = 1i64;
    loop {
        term = term.mul(&t2);
        let add = term.div_int(2 * k + 1);
        if add.mantissa().is_zero() {
            break;
        }
        total = total.add(&add);
        k += 1;
        if k > 4 * digits as i64 {
            break;
        }
    }
    let ln_m = total.mul_int(2);
    let e_part = ln2(digits).mul(&HighPrecReal::from_integer(e, digits));
    Ok(ln_m.add(&e_part))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_value() {
        let p = pi(50);
        assert_eq!(
            p.to_decimal_string(40),
            "3.1415926535897932384626433832795028841971"
        );
    }

    #[test]
    fn sqrt_and_agreement() {
        let two = HighPrecReal::from_integer(2, 60);
        let r = two.sqrt().unwrap();
        let sq = r.mul(&r);
        assert!(sq.agrees_within(&two, 55));
    }

    #[test]
    fn trig_identity() {
        let d = 80;
        let x = pi(d).div_int(8);
        let (s, c) = (sin(&x), cos(&x));
        let one = HighPrecReal::from_integer(1, d);
        assert!(s.mul(&s).add(&c.mul(&c)).agrees_within(&one, 75));
    }

    #[test]
    fn exp_ln_round_trip() {
        let d = 60;
        let x = HighPrecReal::from_rational(&Rational::new(7.into(), 3.into()), d);
        let y = exp(&x).unwrap();
        let back = ln(&y).unwrap();
        // the squaring ladder in exp costs ~5 digits of the 60
        assert!(back.agrees_within(&x, 50));
        // exp(ln 2) = 2
        let two = exp(&ln2(d)).unwrap();
        assert!(two.agrees_within(&HighPrecReal::from_integer(2, d), 50));
    }

    #[test]
    fn certified_comparison() {
        let a = HighPrecReal::from_integer(1, 30);
        let b = HighPrecReal::from_integer(2, 30);
        assert_eq!(a.cmp_certified(&b), Some(Ordering::Less));
        let fuzzy = HighPrecReal::from_parts(BigInt::from(10).pow(30), 30, BigInt::from(10).pow(28));
        assert_eq!(fuzzy.cmp_certified(&a), None);
    }
}
