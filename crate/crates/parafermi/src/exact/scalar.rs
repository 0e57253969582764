//! Exact scalars: finite formal sums of rational multiples of square roots
//! of distinct squarefree nonnegative integers.
//!
//! The radicand 1 carries the rational part, so `3/2 + 2√3` is stored as
//! `{1 ↦ 3/2, 3 ↦ 2}`. Canonical form keeps every radicand squarefree and
//! never stores a zero coefficient; `√12` comes out as `2√3`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub type Rational = BigRational;

/// A sum Σ q_d · √d over squarefree radicands d ≥ 1 (d = 1 is the
/// rational part). Closed under addition and multiplication.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ExactScalar {
    terms: BTreeMap<u64, Rational>,
}

/// Splits n into c²·d with d squarefree, returning (c, d).
///
/// Trial division suffices for the radicands that actually occur (they are
/// bounded by p², and products of two squarefree radicands are handled via
/// the gcd shortcut in `Mul`, which never needs a factorization).
fn square_split(n: u64) -> (u64, u64) {
    if n == 0 {
        return (0, 0);
    }
    let mut c = 1u64;
    let mut d = 1u64;
    let mut m = n;
    let mut f = 2u64;
    while f * f <= m {
        if m % f == 0 {
            let mut e = 0u32;
            while m % f == 0 {
                m /= f;
                e += 1;
            }
            c *= f.pow(e / 2);
            if e % 2 == 1 {
                d *= f;
            }
        }
        f += 1;
    }
    d *= m; // leftover m is prime (or 1)
    (c, d)
}

impl ExactScalar {
    pub fn zero() -> Self {
        ExactScalar::default()
    }

    pub fn one() -> Self {
        ExactScalar::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        ExactScalar::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        ExactScalar::from_rational(Rational::from_integer(n))
    }

    pub fn from_rational(q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(1, q);
        }
        ExactScalar { terms }
    }

    /// c·√d with d squarefree already; internal constructor.
    fn from_term(coeff: Rational, radicand: u64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() && radicand > 0 {
            terms.insert(radicand, coeff);
        }
        ExactScalar { terms }
    }

    /// Canonical √n: returns c·√d with d squarefree and c²·d = n.
    pub fn sqrt_of(n: u64) -> Self {
        let (c, d) = square_split(n);
        if n == 0 {
            return ExactScalar::zero();
        }
        ExactScalar::from_term(Rational::from_integer(BigInt::from(c)), d)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when the value is rational (at most the radicand-1 term).
    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(|&d| d == 1)
    }

    /// The rational part (coefficient of radicand 1).
    pub fn rational_part(&self) -> Rational {
        self.terms.get(&1).cloned().unwrap_or_else(Rational::zero)
    }

    /// The value as a rational, if it is one.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.rational_part())
        } else {
            None
        }
    }

    /// The value as an integer, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        let q = self.as_rational()?;
        if q.is_integer() {
            Some(q.to_integer())
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.terms.iter().map(|(&d, q)| (d, q))
    }

    fn insert_term(terms: &mut BTreeMap<u64, Rational>, d: u64, q: Rational) {
        if q.is_zero() {
            return;
        }
        match terms.entry(d) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(q);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &q;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return ExactScalar::zero();
        }
        ExactScalar {
            terms: self.terms.iter().map(|(&d, c)| (d, c * q)).collect(),
        }
    }
}

impl Add for &ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        let mut terms = self.terms.clone();
        for (&d, q) in &rhs.terms {
            ExactScalar::insert_term(&mut terms, d, q.clone());
        }
        ExactScalar { terms }
    }
}

impl Sub for &ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        let mut terms = self.terms.clone();
        for (&d, q) in &rhs.terms {
            ExactScalar::insert_term(&mut terms, d, -q.clone());
        }
        ExactScalar { terms }
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar {
            terms: self.terms.iter().map(|(&d, q)| (d, -q.clone())).collect(),
        }
    }
}

impl Mul for &ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        // √d·√e = g·√(d/g · e/g) with g = gcd(d, e); the product of two
        // coprime squarefree numbers is squarefree, so no factoring here.
        let mut terms = BTreeMap::new();
        for (&d, qd) in &self.terms {
            for (&e, qe) in &rhs.terms {
                let g = d.gcd(&e);
                let rad = (d / g) * (e / g);
                let coeff = qd * qe * Rational::from_integer(BigInt::from(g));
                ExactScalar::insert_term(&mut terms, rad, coeff);
            }
        }
        ExactScalar { terms }
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&d, q) in &self.terms {
            let neg = q.is_negative();
            let mag = q.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if d == 1 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "sqrt({d})")?;
            } else {
                write!(f, "{mag} sqrt({d})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
