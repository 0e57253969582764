//! The planar model: cardioid arclengths in nested-radical closed form,
//! the self-action identity, coordinate-transform bookkeeping, the Vieta
//! product, and the continued-fraction material up to the intensional
//! Catalan numbers.

pub mod contfrac;
pub mod gamma;
pub mod real;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::numbers::catalan;
use crate::report::Report;
use contfrac::{expand_stable, ContFrac, Mode};
use gamma::gamma;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use real::{cos, exp, ln2, pi, sin, HighPrecReal};
use std::fmt;

/// Default working precision; deeper quotient indices scale it by three
/// digits per requested term.
pub const DEFAULT_DIGITS: u32 = 600;

pub fn digits_for_terms(terms: usize) -> u32 {
    DEFAULT_DIGITS.max(3 * terms as u32)
}

/// cos(π/2^i) by the half-angle nested-radical recursion.
fn cos_halfangle(i: u32, digits: u32) -> HighPrecReal {
    // c₁ = 0, c_{k+1} = √((1 + c_k)/2)
    let mut c = HighPrecReal::zero(digits);
    let one = HighPrecReal::from_integer(1, digits);
    for _ in 1..i {
        c = one.add(&c).div_int(2).sqrt().expect("nonnegative");
    }
    c
}

fn sin_halfangle(i: u32, digits: u32) -> HighPrecReal {
    if i == 1 {
        return HighPrecReal::from_integer(1, digits);
    }
    let one = HighPrecReal::from_integer(1, digits);
    one.sub(&cos_halfangle(i - 1, digits))
        .div_int(2)
        .sqrt()
        .expect("nonnegative")
}

/// The arclength triple (A_i, co-A_i, Ā_i) at scale parameter a:
/// A_i = 4a·sin(π/2^i), co-A_i = 4a·cos(π/2^i), Ā_i = 4a − A_i.
pub fn arclengths(
    i: u32,
    a: &Rational,
    digits: u32,
) -> Result<(HighPrecReal, HighPrecReal, HighPrecReal)> {
    if i < 1 {
        return Err(Error::OutOfRange("arclength index starts at 1".into()));
    }
    let scale = HighPrecReal::from_rational(a, digits).mul_int(4);
    let s = sin_halfangle(i, digits);
    let c = cos_halfangle(i, digits);
    let a_i = scale.mul(&s);
    let co = scale.mul(&c);
    let bar = scale.sub(&a_i);
    Ok((a_i, co, bar))
}

/// The nested-radical closed form as text: √(2 − √(2 + √(2 + ···)))/2
/// for A_i, all plus signs for co-A_i.
pub fn arclength_radical_string(i: u32, co: bool) -> String {
    if i == 1 {
        return if co { "0".into() } else { "4a".into() };
    }
    if i == 2 {
        return "4a*sqrt(2)/2".into();
    }
    let mut inner = String::from("sqrt(2)");
    for _ in 3..i {
        inner = format!("sqrt(2+{inner})");
    }
    let sign = if co { '+' } else { '-' };
    format!("4a*sqrt(2{sign}{inner})/2")
}

/// Cross-check of the nested radicals against the direct power series.
pub fn verify_radicals_against_series(max_i: u32, digits: u32) -> Report {
    let mut report = Report::new("nested radicals vs power series");
    for i in 2..=max_i {
        let angle = pi(digits).div_int(1 << i);
        let ok_s = sin_halfangle(i, digits).agrees_within(&sin(&angle), digits - 2);
        let ok_c = cos_halfangle(i, digits).agrees_within(&cos(&angle), digits - 2);
        report.check(format!("i={i} sin/cos agree within 2 guard digits"), ok_s && ok_c, "");
    }
    report
}

/// The self-action 2·A_i·co-A_i/(A_i + Ā_i), which must land on A_{i−1}.
pub fn self_action(i: u32, a: &Rational, digits: u32) -> Result<HighPrecReal> {
    if i < 2 {
        return Err(Error::OutOfRange("self action needs i >= 2".into()));
    }
    let (a_i, co, bar) = arclengths(i, a, digits)?;
    a_i.mul(&co).mul_int(2).div(&a_i.add(&bar))
}

pub fn verify_self_action(max_i: u32, a: &Rational, digits: u32, decimals: u32) -> Result<Report> {
    let mut report = Report::new("self action lands on the previous stop");
    for i in 2..=max_i {
        let action = self_action(i, a, digits)?;
        let (prev, _, _) = arclengths(i - 1, a, digits)?;
        report.check(
            format!("(A_{i},A_{i}) = A_{}", i - 1),
            action.agrees_within(&prev, decimals),
            "",
        );
    }
    Ok(report)
}

/// Azimuth-to-integration-limit pairs as exact multiples of π, for the
/// unmoved-mover (rotation back to rest) or moved-mirror (flip over the
/// equator) representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformLimits {
    pub upper: ((Rational, Rational), (Rational, Rational)),
    pub co: ((Rational, Rational), (Rational, Rational)),
    pub lower: ((Rational, Rational), (Rational, Rational)),
}

pub fn transforms(p: u64, unmoved: bool) -> Result<TransformLimits> {
    if !crate::exact::is_paraorder(p) {
        return Err(Error::InvalidParaorder(p));
    }
    let r = |n: i64, d: i64| Rational::new(BigInt::from(n), BigInt::from(d));
    let t = r(p as i64 - 1, p as i64 + 1);
    let one = r(1, 1);
    let zero = r(0, 1);
    let two = r(2, 1);
    Ok(if unmoved {
        TransformLimits {
            upper: ((t.clone(), one.clone()), (zero.clone(), &one - &t)),
            co: ((zero.clone(), t.clone()), (zero.clone(), t.clone())),
            lower: ((one.clone(), &one + &t), (&one - &t, one.clone())),
        }
    } else {
        TransformLimits {
            upper: ((t.clone(), one.clone()), (&two - &t, one.clone())),
            co: ((zero.clone(), t.clone()), (two.clone(), &two - &t)),
            lower: ((one.clone(), &one + &t), (one.clone(), &one - &t)),
        }
    })
}

/// The co-z distinction between representations at the upper stop:
/// unmoved gives p/(p+1)·π, moved ((p'+1)/(p+1) − p/(p+1))·π.
pub fn verify_co_z_identity(p: u64) -> Result<Report> {
    let mut report = Report::new(format!("co-z identity p={p}"));
    let p_up = 2 * p + 1;
    let r = |n: i64, d: i64| Rational::new(BigInt::from(n), BigInt::from(d));
    let unmoved = transforms(p_up, true)?.co.1 .1;
    report.check(
        "unmoved co-z = p/(p+1) pi",
        unmoved == r(p as i64, p as i64 + 1),
        format!("{unmoved}"),
    );
    let moved = transforms(p_up, false)?.co.1 .1;
    let expect = r(p_up as i64 + 1, p as i64 + 1) - r(p as i64, p as i64 + 1);
    report.check(
        "moved co-z = ((p'+1)/(p+1) - p/(p+1)) pi",
        moved == expect,
        format!("{moved}"),
    );
    Ok(report)
}

/// ∏_{i=2}^m co-A_i at a = 1/4 — Vieta's product, converging to 2/π.
pub fn vieta_product(m: u32, digits: u32) -> Result<HighPrecReal> {
    if m < 2 {
        return Err(Error::OutOfRange("vieta product needs m >= 2".into()));
    }
    let mut acc = HighPrecReal::from_integer(1, digits);
    for i in 2..=m {
        acc = acc.mul(&cos_halfangle(i, digits));
    }
    Ok(acc)
}

/// Continued fraction of A_i (or co-A_i) at a = 1/4.
pub fn arclength_contfrac(
    i: u32,
    co: bool,
    max_terms: usize,
    digits: u32,
    mode: Mode,
) -> Result<ContFrac> {
    expand_stable(
        |d| {
            Ok(if co {
                cos_halfangle(i, d)
            } else {
                sin_halfangle(i, d)
            })
        },
        digits,
        max_terms,
        mode,
    )
}

/// a₁^(i) and co-a₂^(i) over a range of stops, with the carry-bit-style
/// recurrences a₁^(i+1) = 2a₁^(i)+1+δ₁ (δ₁ ∈ {−1,0}) and
/// co-a₂^(i+1) = 4co-a₂^(i)+3+δ₂ (δ₂ ∈ {−1..3}) checked for i > 2.
pub fn leading_coefficient_recurrences(max_i: u32, digits: u32) -> Result<Report> {
    let mut report = Report::new("leading contfrac coefficient recurrences");
    let mut a1 = Vec::new();
    let mut coa2 = Vec::new();
    for i in 2..=max_i {
        let cf_a = arclength_contfrac(i, false, 4, digits, Mode::Simple)?;
        let cf_co = arclength_contfrac(i, true, 4, digits, Mode::Simple)?;
        a1.push(cf_a.quotient(1)?.clone());
        coa2.push(cf_co.quotient(2)?.clone());
    }
    for k in 1..a1.len() - 1 {
        let i = k as u32 + 2;
        let d1 = &a1[k + 1] - BigInt::from(2) * &a1[k] - 1;
        report.check(
            format!("a1({}) = 2 a1({i}) + 1 + d1", i + 1),
            d1 >= BigInt::from(-1) && d1 <= BigInt::from(0),
            format!("d1 = {d1}"),
        );
        let d2 = &coa2[k + 1] - BigInt::from(4) * &coa2[k] - 3;
        report.check(
            format!("co-a2({}) = 4 co-a2({i}) + 3 + d2", i + 1),
            d2 >= BigInt::from(-1) && d2 <= BigInt::from(3),
            format!("d2 = {d2}"),
        );
    }
    report.check(
        "a1 sequence from i=2",
        true,
        format!("{:?}", a1.iter().map(|v| v.to_string()).collect::<Vec<_>>()),
    );
    report.check(
        "co-a2 sequence from i=2",
        true,
        format!("{:?}", coa2.iter().map(|v| v.to_string()).collect::<Vec<_>>()),
    );
    Ok(report)
}

/// One row of the paraorder-representation table: where p = 2^i − 1
/// shows up among the quotients, on which branch, and the δ₃ offset
/// against the predicted place.
#[derive(Clone, Debug)]
pub struct ParaorderPlacement {
    pub i: u32,
    pub uses_co: bool,
    pub index: usize,
    pub base: BigInt,
    pub delta3: BigInt,
}

impl fmt::Display for ParaorderPlacement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = (1u64 << self.i) - 1;
        if self.uses_co {
            write!(f, "co-a_{}^({}) = {p}", self.index, self.i)?;
        } else {
            write!(f, "a_{}^({}) = {p}", self.index, self.i)?;
        }
        write!(f, " (alpha base {}, delta3 {})", self.base, self.delta3)
    }
}

/// Locates p = 2^i − 1 at α_min = co-a₂^(i−1) − a₁^(i−1) + δ₃ within a
/// ±32 window, on the branch |δ₂| ≤ |δ₁| → co-a_{α+1}, else a_α.
pub fn paraorder_placement(i: u32, digits: u32) -> Result<ParaorderPlacement> {
    if i < 3 {
        return Err(Error::OutOfRange("placement table starts at i = 3".into()));
    }
    let terms = 260usize;
    let d = digits.max(digits_for_terms(terms));
    let lead = |stop: u32, co: bool| -> Result<BigInt> {
        let cf = arclength_contfrac(stop, co, 4, d.min(DEFAULT_DIGITS), Mode::Simple)?;
        Ok(cf.quotient(if co { 2 } else { 1 })?.clone())
    };
    let a1_prev = lead(i - 1, false)?;
    let a1_here = lead(i, false)?;
    let coa2_prev = lead(i - 1, true)?;
    let coa2_here = lead(i, true)?;
    let d1: BigInt = &a1_here - BigInt::from(2) * &a1_prev - BigInt::from(1);
    let d2: BigInt = &coa2_here - BigInt::from(4) * &coa2_prev - BigInt::from(3);
    let (delta1, delta2) = (d1.abs(), d2.abs());
    let uses_co = delta2 <= delta1;
    let base = &coa2_prev - &a1_prev;
    let p = BigInt::from((1u64 << i) - 1);
    let cf = arclength_contfrac(i, uses_co, terms, d, Mode::Simple)?;
    let base_i64 = base
        .to_i64()
        .ok_or_else(|| Error::OutOfRange("alpha base out of range".into()))?;
    for offset in 0..=32i64 {
        for delta3 in [offset, -offset] {
            let alpha = base_i64 + delta3;
            if alpha < 1 {
                continue;
            }
            let idx = if uses_co { alpha + 1 } else { alpha } as usize;
            if idx < cf.stable_prefix && *cf.quotient(idx)? == p {
                return Ok(ParaorderPlacement {
                    i,
                    uses_co,
                    index: idx,
                    base,
                    delta3: BigInt::from(delta3),
                });
            }
        }
    }
    Err(Error::OutOfRange(format!(
        "paraorder {p} not found within the search window around {base}"
    )))
}

/// The intensional Catalan number
/// C_{−1/k} = 2^(−2/k)·Γ(1/2 − 1/k)/(√π·Γ(2 − 1/k)), memoized per
/// (k, digits) since the table rows revisit the same expansions.
pub fn intensional_catalan(k: u64, digits: u32) -> Result<HighPrecReal> {
    use std::collections::BTreeMap;
    use std::sync::{Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<BTreeMap<(u64, u32), HighPrecReal>>> = OnceLock::new();
    if k < 2 {
        return Err(Error::OutOfRange("intensional index needs k >= 2".into()));
    }
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&(k, digits)) {
        return Ok(v.clone());
    }
    let work = digits + 10;
    let r = |n: i64, d: i64| Rational::new(BigInt::from(n), BigInt::from(d));
    let g1 = gamma(&(r(1, 2) - r(1, k as i64)), work)?;
    let g2 = gamma(&(r(2, 1) - r(1, k as i64)), work)?;
    let sqrt_pi = pi(work).sqrt()?;
    // 2^(−2/k) = exp(−2 ln2 / k)
    let pow2 = exp(&ln2(work).mul_int(-2).div_int(k as i64))?;
    let value = pow2.mul(&g1).div(&sqrt_pi.mul(&g2))?.round_to(digits);
    cache.lock().unwrap().insert((k, digits), value.clone());
    Ok(value)
}

/// Continued fraction of C_{−1/k} with the stability certificate.
pub fn intensional_contfrac(k: u64, max_terms: usize, digits: u32, mode: Mode) -> Result<ContFrac> {
    expand_stable(|d| intensional_catalan(k, d), digits, max_terms, mode)
}

/// l₁^(k+1) = 1 + l₁^(k) over a k range.
pub fn verify_l1_successorship(k_from: u64, k_to: u64) -> Result<Report> {
    let mut report = Report::new("l1 successor property");
    let mut prev: Option<BigInt> = None;
    for k in k_from..=k_to {
        let cf = intensional_contfrac(k, 4, 80, Mode::Simple)?;
        let l1 = cf.quotient(1)?.clone();
        if let Some(p) = prev {
            report.check(
                format!("l1({k}) = 1 + l1({})", k - 1),
                l1 == &p + 1,
                format!("{p} -> {l1}"),
            );
        }
        prev = Some(l1);
    }
    Ok(report)
}

const KISSING_FOR_TABLE: [u64; 8] = [2, 6, 12, 24, 40, 72, 126, 240];

/// One row of the kissing-number contfrac table.
pub struct KissContfracRow {
    pub n: usize,
    pub k: u64,
    pub beta: usize,
    pub value: Option<BigInt>,
    pub target: u64,
    pub approx: Option<(Rational, Rational)>,
}

/// The stated (k, β) placements for n = 1..8 with the (p_l, p_u) pairs
/// behind the (5/16)(p_l+p_u) + C_{i_u−4}/2 approximation column.
pub fn kissing_contfrac_rows() -> Vec<(usize, u64, usize, Option<(u64, u64)>)> {
    vec![
        (1, 4, 3, None),
        (2, 4, 45, None),
        (3, 4, 42, None),
        (4, 7, 178, Some((7, 15))),
        (5, 8, 118, Some((7, 15))),
        (6, 11, 151, Some((7, 31))),
        (7, 42, 4, Some((1, 127))),
        (8, 91, 401, Some((15, 255))),
    ]
}

pub fn kissing_contfrac_table() -> Result<Vec<KissContfracRow>> {
    let mut out = Vec::new();
    for (n, k, beta, bounds) in kissing_contfrac_rows() {
        let digits = digits_for_terms(beta + 16);
        let value = match intensional_contfrac(k, beta + 4, digits, Mode::Simple) {
            Ok(cf) => cf.quotient(beta).ok().cloned(),
            Err(_) => None,
        };
        let approx = bounds.map(|(pl, pu)| {
            let mean = Rational::new(BigInt::from(5 * (pl + pu)), BigInt::from(16));
            let iu = (pu + 1).trailing_zeros() as u64;
            let corr = Rational::new(catalan(iu - 4), BigInt::from(2));
            (mean, corr)
        });
        out.push(KissContfracRow {
            n,
            k,
            beta,
            value,
            target: KISSING_FOR_TABLE[n - 1],
            approx,
        });
    }
    Ok(out)
}

/// Every row verified; a row whose quotient fails to stabilize inside
/// the budget is reported as such, never silently skipped.
pub fn kissing_contfrac_report() -> Result<Report> {
    let mut report = Report::new("kissing numbers as intensional contfrac coefficients");
    for row in kissing_contfrac_table()? {
        match &row.value {
            Some(v) => report.check(
                format!("L_{} = l_{}^({})", row.n, row.beta, row.k),
                *v == BigInt::from(row.target),
                format!("value {v}"),
            ),
            None => report.check(
                format!("L_{} = l_{}^({})", row.n, row.beta, row.k),
                false,
                "precision budget exhausted before the quotient stabilized",
            ),
        }
    }
    Ok(report)
}
