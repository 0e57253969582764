//! Factorization classification of the representatives, nearest-prime
//! interpolations, the Catalan suffix of consecutive prime factors, and
//! the order-comparison columns built on them.

use crate::blockstruct::RepresentativeSet;
use crate::error::{Error, Result};
use crate::numbers::catalan;
use crate::report::Report;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use std::collections::BTreeMap;
use std::fmt;

/// Segmented sieve with 1-based nth-prime lookup (π₁ = 2).
pub struct PrimeIndexer {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeIndexer {
    /// Sieves every prime up to `limit`, segment by segment.
    pub fn with_limit(limit: u64) -> Self {
        let limit = limit.max(16);
        let root = (limit as f64).sqrt() as u64 + 2;
        let mut base = vec![true; (root + 1) as usize];
        base[0] = false;
        base[1] = false;
        for i in 2..=root {
            if base[i as usize] {
                let mut j = i * i;
                while j <= root {
                    base[j as usize] = false;
                    j += i;
                }
            }
        }
        let base_primes: Vec<u64> = (2..=root).filter(|&i| base[i as usize]).collect();
        let mut primes = Vec::new();
        const SEGMENT: u64 = 1 << 18;
        let mut low = 2u64;
        let mut mark = vec![true; SEGMENT as usize];
        while low <= limit {
            let high = (low + SEGMENT - 1).min(limit);
            let len = (high - low + 1) as usize;
            mark[..len].fill(true);
            for &p in &base_primes {
                if p * p > high {
                    break;
                }
                let mut start = p.max(low.div_ceil(p)) * p;
                if start < p * p {
                    start = p * p;
                }
                let mut j = start;
                while j <= high {
                    mark[(j - low) as usize] = false;
                    j += p;
                }
            }
            for i in 0..len {
                let n = low + i as u64;
                if n >= 2 && mark[i] {
                    primes.push(n);
                }
            }
            low = high + 1;
        }
        PrimeIndexer { limit, primes }
    }

    /// Sieve sized to cover lookups near `value` (1.2× headroom).
    pub fn covering_value(value: u64) -> Self {
        PrimeIndexer::with_limit((value as f64 * 1.2) as u64 + 64)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn prime_count(&self) -> usize {
        self.primes.len()
    }

    /// π_r, 1-based.
    pub fn nth_prime(&self, r: usize) -> Result<u64> {
        self.primes
            .get(r - 1)
            .copied()
            .ok_or_else(|| Error::OutOfRange(format!("prime rank {r} beyond sieve")))
    }

    pub fn is_prime(&self, n: u64) -> Result<bool> {
        if n > self.limit {
            return Err(Error::OutOfRange(format!("{n} beyond sieve limit {}", self.limit)));
        }
        Ok(self.primes.binary_search(&n).is_ok())
    }

    /// Number of primes ≤ x.
    pub fn count_upto(&self, x: u64) -> Result<usize> {
        if x > self.limit {
            return Err(Error::OutOfRange(format!("{x} beyond sieve limit {}", self.limit)));
        }
        Ok(self.primes.partition_point(|&p| p <= x))
    }

    pub fn primes_in(&self, lo: u64, hi: u64) -> Result<Vec<u64>> {
        if hi > self.limit {
            return Err(Error::OutOfRange(format!("{hi} beyond sieve limit {}", self.limit)));
        }
        let a = self.primes.partition_point(|&p| p <= lo);
        let b = self.primes.partition_point(|&p| p <= hi);
        Ok(self.primes[a..b].to_vec())
    }

    /// Rank of the largest prime ≤ v, with the prime itself.
    fn floor_prime(&self, v: u64) -> Result<(usize, u64)> {
        let idx = self.primes.partition_point(|&p| p <= v);
        if idx == 0 {
            return Err(Error::OutOfRange(format!("no prime at or below {v}")));
        }
        Ok((idx, self.primes[idx - 1]))
    }
}

/// Both nearest-prime decompositions of v: π_r + k from below (k ≥ 0,
/// k = 0 exactly when v is prime) and π_{r+1} − k' from above.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeInterpolation {
    pub rank_below: usize,
    pub offset_below: u64,
    pub rank_above: usize,
    pub offset_above: u64,
}

pub fn prime_interpolate(sieve: &PrimeIndexer, v: u64) -> Result<PrimeInterpolation> {
    let (rank_below, p_below) = sieve.floor_prime(v)?;
    if p_below == v {
        return Ok(PrimeInterpolation {
            rank_below,
            offset_below: 0,
            rank_above: rank_below,
            offset_above: 0,
        });
    }
    let p_above = sieve.nth_prime(rank_below + 1)?;
    Ok(PrimeInterpolation {
        rank_below,
        offset_below: v - p_below,
        rank_above: rank_below + 1,
        offset_above: p_above - v,
    })
}

/// Factorization class per the representative bookkeeping.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FactorClass {
    Prime,
    TwoPrimes,
    ThreePrimes,
    Exponentiated,
    Higher,
    Unit,
}

impl fmt::Display for FactorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorClass::Prime => write!(f, "prime"),
            FactorClass::TwoPrimes => write!(f, "two primes"),
            FactorClass::ThreePrimes => write!(f, "three primes"),
            FactorClass::Exponentiated => write!(f, "exponentiated"),
            FactorClass::Higher => write!(f, "higher"),
            FactorClass::Unit => write!(f, "unit"),
        }
    }
}

/// Prime-exponent pairs, ascending, with the classification tag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn reconstruct(&self) -> BigInt {
        let mut acc = BigInt::one();
        for (p, e) in &self.factors {
            acc *= BigInt::from(*p).pow(*e);
        }
        acc
    }

    pub fn class(&self) -> FactorClass {
        if self.factors.is_empty() {
            return FactorClass::Unit;
        }
        if self.factors.iter().any(|&(_, e)| e > 1) {
            return FactorClass::Exponentiated;
        }
        match self.factors.len() {
            1 => FactorClass::Prime,
            2 => FactorClass::TwoPrimes,
            3 => FactorClass::ThreePrimes,
            _ => FactorClass::Higher,
        }
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    // deterministic parameter walk; n is odd, composite, not a prime power
    let mut c = 1u64;
    loop {
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        let f = |v: u64| (mul_mod(v, v, n) + c) % n;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            let diff = x.abs_diff(y);
            if diff == 0 {
                break;
            }
            d = gcd_u64(diff, n);
        }
        if d != 1 && d != n {
            return d;
        }
        c += 1;
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Complete factorization: trial division below 10⁶, then Pollard rho on
/// what remains. Inputs past 64 bits exceed the budget.
pub fn factorize(n: &BigInt) -> Result<Factorization> {
    if n < &BigInt::from(2) {
        return Err(Error::OutOfRange(format!("factorize needs n >= 2, got {n}")));
    }
    let mut n = n
        .to_u64()
        .ok_or_else(|| Error::BudgetExceeded(format!("{n} exceeds the 64-bit factoring budget")))?;
    let mut factors: BTreeMap<u64, u32> = BTreeMap::new();
    for p in 2u64..=3 {
        while n % p == 0 {
            *factors.entry(p).or_insert(0) += 1;
            n /= p;
        }
    }
    let mut p = 5u64;
    while p <= 1_000_000 && p * p <= n {
        for q in [p, p + 2] {
            while n % q == 0 {
                *factors.entry(q).or_insert(0) += 1;
                n /= q;
            }
        }
        p += 6;
    }
    let mut stack = Vec::new();
    if n > 1 {
        stack.push(n);
    }
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime_u64(m) {
            *factors.entry(m).or_insert(0) += 1;
            continue;
        }
        let d = pollard_rho(m);
        stack.push(d);
        stack.push(m / d);
    }
    Ok(Factorization { factors: factors.into_iter().collect() })
}

/// Counts per factorization class over the representative positions;
/// the counts sum to T_p.
pub fn classify_representatives(reps: &RepresentativeSet) -> Result<BTreeMap<FactorClass, usize>> {
    let mut counts = BTreeMap::new();
    for (v, _) in &reps.positions {
        let a = v.abs();
        let class = if a.is_one() {
            FactorClass::Unit
        } else {
            factorize(&a)?.class()
        };
        *counts.entry(class).or_insert(0) += 1;
    }
    Ok(counts)
}

/// The suffix of consecutive prime factors of C_q: every prime in
/// (q+1, 2q) divides C_q exactly once. Computed via Legendre exponents
/// on binomial(2q, q)/(q+1) and cross-checked against π(2q) − π(q+1).
pub struct ScpfResult {
    pub q: u64,
    pub suffix: Vec<u64>,
    pub count: usize,
}

/// Exponent of prime p in C_q by Legendre's formula.
pub fn catalan_prime_exponent(q: u64, p: u64) -> i64 {
    let mut e: i64 = 0;
    let mut pk = p;
    loop {
        e += (2 * q / pk) as i64 - 2 * (q / pk) as i64;
        match pk.checked_mul(p) {
            Some(next) if next <= 2 * q => pk = next,
            _ => break,
        }
    }
    // divide out q+1
    let mut m = q + 1;
    while m % p == 0 {
        e -= 1;
        m /= p;
    }
    e
}

pub fn catalan_scpf(sieve: &PrimeIndexer, q: u64) -> Result<ScpfResult> {
    let interval = sieve.primes_in(q + 1, 2 * q - 1)?;
    for &p in &interval {
        if catalan_prime_exponent(q, p) != 1 {
            return Err(Error::SolverInconsistent(format!(
                "prime {p} in ({},{}) does not divide C_{q} exactly once",
                q + 1,
                2 * q
            )));
        }
    }
    let by_count = sieve.count_upto(2 * q - 1)? - sieve.count_upto(q + 1)?;
    if by_count != interval.len() {
        return Err(Error::SolverInconsistent("prime count cross-check failed".into()));
    }
    Ok(ScpfResult { q, count: interval.len(), suffix: interval })
}

/// The multiplicative tiling: the suffixes over the chain q = 3, 7, ...,
/// q_max, the prime paraorders filling the single-integer gaps, and the
/// initial 2 together cover every prime up to 2·q_max exactly once.
pub fn verify_euler_tiling(sieve: &PrimeIndexer, q_max: u64) -> Result<Report> {
    let mut report = Report::new(format!("euler product tiling to q={q_max}"));
    let mut covered = vec![2u64];
    let mut k = 2u32;
    loop {
        let m = (1u64 << k) - 1;
        if m > 2 * q_max {
            break;
        }
        if is_prime_u64(m) {
            covered.push(m);
        }
        k += 1;
    }
    let mut q = 3u64;
    while q <= q_max {
        covered.extend(catalan_scpf(sieve, q)?.suffix);
        q = 2 * q + 1;
    }
    covered.sort_unstable();
    let all = sieve.primes_in(1, 2 * q_max - 1)?;
    report.check(
        "suffixes + prime paraorders + 2 partition the primes",
        covered == all,
        format!("{} covered vs {} primes", covered.len(), all.len()),
    );
    Ok(report)
}

/// C_{i/2} exactly: a plain Catalan number for even i, and a rational
/// multiple of 1/π for odd i via the half-integer Γ identities.
pub fn catalan_half_index(i: u64) -> (BigRational, i32) {
    if i % 2 == 0 {
        (BigRational::from_integer(catalan(i / 2)), 0)
    } else {
        // 2^i · Γ((i+1)/2) / (√π · Γ((i+4)/2)) with Γ(m+1/2) = (2m)!·√π/(4^m·m!)
        let k = (i + 1) / 2; // Γ(k) = (k−1)!
        let m = (i + 3) / 2; // Γ(m + 1/2)
        let mut num = BigInt::one() << i;
        num *= factorial(k - 1);
        num *= BigInt::one() << (2 * m);
        num *= factorial(m);
        let den = factorial(2 * m);
        (BigRational::new(num, den), -1)
    }
}

fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Decimal rendering of q·π^e at the order-table's display precision.
pub fn half_index_decimal(value: &BigRational, pi_exp: i32) -> f64 {
    let v = value.to_f64().unwrap_or(f64::NAN);
    match pi_exp {
        0 => v,
        -1 => v / std::f64::consts::PI,
        e => v * std::f64::consts::PI.powi(e),
    }
}

/// One row of the order-comparison table.
pub struct OrderRow {
    pub q: u64,
    pub density: f64,
    pub s_p: usize,
    pub half_index: f64,
    pub kissing: String,
}

/// The order-(2q/log 2q − (q+1)/log(q+1)) numbers for q = 3..4095:
/// the suffix counts S_p, the half-index Catalan column at
/// i = log₂(4q+4), and the kissing column at i = log₂(2q+2).
pub fn order_comparison_table(sieve: &PrimeIndexer) -> Result<Vec<OrderRow>> {
    let mut rows = Vec::new();
    let mut q = 3u64;
    while q <= 4095 {
        let density = 2.0 * q as f64 / (2.0 * q as f64).ln()
            - (q as f64 + 1.0) / (q as f64 + 1.0).ln();
        let scpf = catalan_scpf(sieve, q)?;
        let i_c = (4 * q + 4).trailing_zeros() as u64; // log2 of 4q+4 = 4(q+1)
        let (hv, he) = catalan_half_index(i_c);
        let i_l = (2 * q + 2).trailing_zeros() as usize;
        let kissing = if i_l >= 5 && i_l - 4 <= 16 {
            crate::diffs::kissing_display(i_l - 4)
        } else {
            "-".into()
        };
        rows.push(OrderRow {
            q,
            density,
            s_p: scpf.count,
            half_index: half_index_decimal(&hv, he),
            kissing,
        });
        q = 2 * q + 1;
    }
    Ok(rows)
}

/// The §4.3 interpolation lists: every composite representative of order
/// 31 sits within a small spacing of a pure prime.
pub fn interpolation_report(sieve: &PrimeIndexer, reps: &RepresentativeSet) -> Result<Report> {
    let mut report = Report::new(format!("prime interpolations p={}", reps.p));
    for v in &reps.values {
        let v64 = v
            .to_u64()
            .ok_or_else(|| Error::BudgetExceeded("representative beyond u64".into()))?;
        let ip = prime_interpolate(sieve, v64)?;
        let detail = if ip.offset_below == 0 {
            format!("{v64} = pi_{}", ip.rank_below)
        } else {
            format!(
                "{v64} = pi_{}+{} = pi_{}-{}",
                ip.rank_below, ip.offset_below, ip.rank_above, ip.offset_above
            )
        };
        report.check(format!("interpolate {v64}"), true, detail);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blockstruct::representatives;
    use crate::numbers::binomial;
    use crate::rootseq::{build_member, RootKind};

    #[test]
    fn sieve_ranks() {
        let sieve = PrimeIndexer::with_limit(1000);
        assert_eq!(sieve.nth_prime(1).unwrap(), 2);
        assert_eq!(sieve.nth_prime(8).unwrap(), 19);
        assert_eq!(sieve.nth_prime(14).unwrap(), 43);
        assert_eq!(sieve.nth_prime(30).unwrap(), 113);
        assert_eq!(sieve.count_upto(100).unwrap(), 25);
        assert!(sieve.nth_prime(1000).is_err());
    }

    #[test]
    fn factorize_examples() {
        let f = factorize(&BigInt::from(429)).unwrap();
        assert_eq!(f.factors, vec![(3, 1), (11, 1), (13, 1)]);
        assert_eq!(f.class(), FactorClass::ThreePrimes);
        let f = factorize(&BigInt::from(9694845)).unwrap();
        assert_eq!(f.factors, vec![(3, 2), (5, 1), (17, 1), (19, 1), (23, 1), (29, 1)]);
        assert_eq!(f.class(), FactorClass::Exponentiated);
        let f = factorize(&BigInt::from(113)).unwrap();
        assert_eq!(f.class(), FactorClass::Prime);
        assert_eq!(f.reconstruct(), BigInt::from(113));
        // a larger semiprime through the rho path
        let n = BigInt::from(1_000_003u64) * BigInt::from(998_244_353u64);
        let f = factorize(&n).unwrap();
        assert_eq!(f.class(), FactorClass::TwoPrimes);
        assert_eq!(f.reconstruct(), n);
    }

    #[test]
    fn classification_counts() {
        let r15 = representatives(&build_member(RootKind::F, 15).unwrap()).unwrap();
        let c15 = classify_representatives(&r15).unwrap();
        assert_eq!(c15.get(&FactorClass::Prime), Some(&6));
        assert_eq!(c15.len(), 1);
        let r31 = representatives(&build_member(RootKind::F, 31).unwrap()).unwrap();
        let c31 = classify_representatives(&r31).unwrap();
        assert_eq!(c31.get(&FactorClass::Prime), Some(&4));
        assert_eq!(c31.get(&FactorClass::TwoPrimes), Some(&6));
        assert_eq!(c31.get(&FactorClass::ThreePrimes), Some(&6));
        assert_eq!(c31.get(&FactorClass::Exponentiated), Some(&2));
    }

    #[test]
    fn interpolation_examples() {
        let sieve = PrimeIndexer::with_limit(3_000_000);
        let cases: [(u64, usize, u64, usize, u64); 6] = [
            (115, 30, 2, 31, 12),
            (429, 82, 8, 83, 2),
            (1275, 205, 16, 206, 2),
            (15067, 1759, 6, 1760, 6),
            (227089, 20185, 0, 20185, 0),
            (2430289, 178344, 0, 178344, 0),
        ];
        for (v, rb, ob, ra, oa) in cases {
            let ip = prime_interpolate(&sieve, v).unwrap();
            assert_eq!((ip.rank_below, ip.offset_below, ip.rank_above, ip.offset_above), (rb, ob, ra, oa), "v={v}");
        }
    }

    #[test]
    fn scpf_examples() {
        let sieve = PrimeIndexer::with_limit(10_000);
        let r3 = catalan_scpf(&sieve, 3).unwrap();
        assert_eq!(r3.suffix, vec![5]);
        let r15 = catalan_scpf(&sieve, 15).unwrap();
        assert_eq!(r15.suffix, vec![17, 19, 23, 29]);
        let r31 = catalan_scpf(&sieve, 31).unwrap();
        assert_eq!(r31.suffix, vec![37, 41, 43, 47, 53, 59, 61]);
        assert!(verify_euler_tiling(&sieve, 1023).unwrap().passed());
    }

    #[test]
    fn legendre_matches_direct_factorization() {
        // oracle: factor C_q directly and compare exponents
        let sieve = PrimeIndexer::with_limit(100);
        for q in 2u64..=30 {
            let cq = catalan(q);
            let direct = factorize(&cq).unwrap();
            for p in sieve.primes_in(1, 2 * q).unwrap() {
                let expect = direct
                    .factors
                    .iter()
                    .find(|&&(fp, _)| fp == p)
                    .map(|&(_, e)| e as i64)
                    .unwrap_or(0);
                assert_eq!(catalan_prime_exponent(q, p), expect, "q={q} p={p}");
            }
        }
    }

    #[test]
    fn half_index_values() {
        assert_eq!(catalan_half_index(4).0, BigRational::from_integer(2.into()));
        assert_eq!(catalan_half_index(12).0, BigRational::from_integer(132.into()));
        let (v, e) = catalan_half_index(5);
        assert_eq!(e, -1);
        let dec = half_index_decimal(&v, e);
        assert!((dec - 3.104).abs() < 0.005, "{dec}");
        let (v9, e9) = catalan_half_index(9);
        assert!((half_index_decimal(&v9, e9) - 24.08).abs() < 0.01);
    }

    #[test]
    fn order_table_rows() {
        let sieve = PrimeIndexer::with_limit(10_000);
        let rows = order_comparison_table(&sieve).unwrap();
        assert_eq!(rows.len(), 11);
        let expect_s = [1usize, 2, 4, 7, 12, 23, 43, 75, 137, 255, 463];
        for (row, s) in rows.iter().zip(expect_s) {
            assert_eq!(row.s_p, s, "q={}", row.q);
        }
        assert!((rows[0].density - 0.46).abs() < 0.01);
        assert!((rows[5].density - 19.48).abs() < 0.01);
        assert_eq!(rows[2].kissing, "2");
        assert_eq!(rows[6].kissing, "(40,44)");
        assert_eq!(rows[9].kissing, "240");
    }

    #[test]
    fn binomial_sanity() {
        assert_eq!(binomial(34, 17) / BigInt::from(18), catalan(17));
    }
}
