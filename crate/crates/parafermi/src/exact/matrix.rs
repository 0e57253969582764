//! Dense square matrices of exact scalars, carrying the paraorder of the
//! operator they represent.

use super::scalar::{ExactScalar, Rational};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;
use std::str::FromStr;

/// True when p = 2^n - 1 for some n ≥ 1.
pub fn is_paraorder(p: u64) -> bool {
    p >= 1 && (p + 1).is_power_of_two()
}

/// A (p+1)×(p+1) matrix of exact scalars. Also used for auxiliary square
/// matrices (quadrants, heterotic solutions) where `paraorder` records the
/// operator order the matrix belongs to.
#[derive(Clone, PartialEq, Eq)]
pub struct OperatorMatrix {
    dim: usize,
    paraorder: u64,
    entries: Vec<ExactScalar>,
}

impl OperatorMatrix {
    pub fn zero(paraorder: u64) -> Self {
        let dim = (paraorder + 1) as usize;
        OperatorMatrix {
            dim,
            paraorder,
            entries: vec![ExactScalar::zero(); dim * dim],
        }
    }

    pub fn identity(paraorder: u64) -> Self {
        let mut m = OperatorMatrix::zero(paraorder);
        for i in 1..=m.dim {
            m.set(i, i, ExactScalar::one());
        }
        m
    }

    pub fn from_rows(paraorder: u64, rows: Vec<Vec<ExactScalar>>) -> Self {
        let dim = (paraorder + 1) as usize;
        assert_eq!(rows.len(), dim, "row count must equal dim");
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            assert_eq!(row.len(), dim, "column count must equal dim");
            entries.extend(row);
        }
        OperatorMatrix { dim, paraorder, entries }
    }

    /// Integer-entry convenience constructor.
    pub fn from_int_rows(paraorder: u64, rows: &[Vec<i64>]) -> Self {
        let converted = rows
            .iter()
            .map(|r| r.iter().map(|&v| ExactScalar::from_integer(v)).collect())
            .collect();
        OperatorMatrix::from_rows(paraorder, converted)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn paraorder(&self) -> u64 {
        self.paraorder
    }

    /// 1-based element access, matching the (α,β) indexing of the displays.
    pub fn entry(&self, alpha: usize, beta: usize) -> &ExactScalar {
        &self.entries[(alpha - 1) * self.dim + (beta - 1)]
    }

    pub fn set(&mut self, alpha: usize, beta: usize, v: ExactScalar) {
        self.entries[(alpha - 1) * self.dim + (beta - 1)] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Adjoint. All entries are real, so this is the transpose.
    pub fn adjoint(&self) -> Self {
        let mut t = OperatorMatrix::zero(self.paraorder);
        for r in 1..=self.dim {
            for c in 1..=self.dim {
                t.set(c, r, self.entry(r, c).clone());
            }
        }
        t
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_dim(rhs)?;
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(OperatorMatrix { dim: self.dim, paraorder: self.paraorder, entries })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_dim(rhs)?;
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(OperatorMatrix { dim: self.dim, paraorder: self.paraorder, entries })
    }

    pub fn scale(&self, q: &Rational) -> Self {
        OperatorMatrix {
            dim: self.dim,
            paraorder: self.paraorder,
            entries: self.entries.iter().map(|e| e.scale(q)).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&Rational::from_integer(BigInt::from(n)))
    }

    pub fn mat_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_dim(rhs)?;
        let n = self.dim;
        let mut out = OperatorMatrix::zero(self.paraorder);
        for r in 0..n {
            for k in 0..n {
                let a = &self.entries[r * n + k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = &rhs.entries[k * n + c];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    let cell = &mut out.entries[r * n + c];
                    *cell = &*cell + &prod;
                }
            }
        }
        Ok(out)
    }

    /// ab - ba.
    pub fn commutator(&self, rhs: &Self) -> Result<Self> {
        self.mat_mul(rhs)?.sub(&rhs.mat_mul(self)?)
    }

    /// ab + ba.
    pub fn anticommutator(&self, rhs: &Self) -> Result<Self> {
        self.mat_mul(rhs)?.add(&rhs.mat_mul(self)?)
    }

    /// Kronecker product with the 2×2 identity; dimension doubles and the
    /// paraorder moves to its upper carry-bit neighbor 2p+1.
    pub fn tensor_extend(&self) -> Self {
        let n = self.dim;
        let mut out = OperatorMatrix::zero(2 * self.paraorder + 1);
        for r in 1..=n {
            for c in 1..=n {
                let v = self.entry(r, c);
                if v.is_zero() {
                    continue;
                }
                out.set(2 * r - 1, 2 * c - 1, v.clone());
                out.set(2 * r, 2 * c, v.clone());
            }
        }
        out
    }

    /// General Kronecker product self ⊗ rhs.
    pub fn kronecker(&self, rhs: &Self) -> Self {
        let n = self.dim;
        let m = rhs.dim;
        let dim = n * m;
        let mut out = OperatorMatrix {
            dim,
            paraorder: dim as u64 - 1,
            entries: vec![ExactScalar::zero(); dim * dim],
        };
        for r in 1..=n {
            for c in 1..=n {
                let a = self.entry(r, c);
                if a.is_zero() {
                    continue;
                }
                for i in 1..=m {
                    for j in 1..=m {
                        let b = rhs.entry(i, j);
                        if b.is_zero() {
                            continue;
                        }
                        out.set((r - 1) * m + i, (c - 1) * m + j, a * b);
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = OperatorMatrix::identity(self.paraorder);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mat_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mat_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Reflection in the secondary diagonal: out[i][j] = self[n+1-j][n+1-i].
    pub fn reflect_secondary(&self) -> Self {
        let n = self.dim;
        let mut out = OperatorMatrix::zero(self.paraorder);
        for r in 1..=n {
            for c in 1..=n {
                out.set(r, c, self.entry(n + 1 - c, n + 1 - r).clone());
            }
        }
        out
    }

    /// Positions (1-based) where the two matrices differ, capped at `limit`,
    /// plus the total number of differing entries.
    pub fn diff_positions(&self, rhs: &Self, limit: usize) -> (Vec<(usize, usize)>, usize) {
        let mut out = Vec::new();
        let mut total = 0;
        for r in 1..=self.dim {
            for c in 1..=self.dim {
                if self.entry(r, c) != rhs.entry(r, c) {
                    total += 1;
                    if out.len() < limit {
                        out.push((r, c));
                    }
                }
            }
        }
        (out, total)
    }

    fn check_dim(&self, rhs: &Self) -> Result<()> {
        if self.dim != rhs.dim {
            Err(Error::DimensionMismatch { left: self.dim, right: rhs.dim })
        } else {
            Ok(())
        }
    }

    /// JSON object {dim, paraorder, entries} where every entry is a list of
    /// [radicand, numerator, denominator] term triples.
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<Vec<Vec<Vec<serde_json::Value>>>> = (1..=self.dim)
            .map(|r| {
                (1..=self.dim)
                    .map(|c| {
                        self.entry(r, c)
                            .terms()
                            .map(|(d, q)| {
                                vec![
                                    serde_json::Value::from(d),
                                    big_json(q.numer()),
                                    big_json(q.denom()),
                                ]
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        serde_json::json!({
            "dim": self.dim,
            "paraorder": self.paraorder,
            "entries": entries,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Option<Self> {
        let dim = v.get("dim")?.as_u64()? as usize;
        let paraorder = v.get("paraorder")?.as_u64()?;
        if dim != (paraorder + 1) as usize {
            return None;
        }
        let rows = v.get("entries")?.as_array()?;
        let mut m = OperatorMatrix::zero(paraorder);
        for (r, row) in rows.iter().enumerate() {
            for (c, cell) in row.as_array()?.iter().enumerate() {
                let mut s = ExactScalar::zero();
                for term in cell.as_array()? {
                    let t = term.as_array()?;
                    let d = t[0].as_u64()?;
                    let num = BigInt::from_str(&json_num_string(&t[1])?).ok()?;
                    let den = BigInt::from_str(&json_num_string(&t[2])?).ok()?;
                    if den.is_zero() {
                        return None;
                    }
                    let coeff = Rational::new(num, den);
                    s = &s + &ExactScalar::sqrt_of(d).scale(&coeff);
                }
                m.set(r + 1, c + 1, s);
            }
        }
        Some(m)
    }
}

/// Arbitrary-precision integers as bona fide JSON numbers.
fn big_json(n: &BigInt) -> serde_json::Value {
    serde_json::Value::Number(
        serde_json::Number::from_string_unchecked(n.to_string()),
    )
}

fn json_num_string(v: &serde_json::Value) -> Option<String> {
    match v {
        serde_json::Value::Number(n) => Some(n.to_string()),
        _ => None,
    }
}

impl fmt::Display for OperatorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 1..=self.dim {
            let row: Vec<String> = (1..=self.dim)
                .map(|c| self.entry(r, c).to_string())
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for OperatorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clifford_square_is_identity() {
        // c₂² = 1 on the 2×2 block
        let c2 = OperatorMatrix::from_int_rows(1, &[vec![0, 1], vec![1, 0]]);
        assert_eq!(c2.mat_mul(&c2).unwrap(), OperatorMatrix::identity(1));
    }

    #[test]
    fn fermi_operator_is_nilpotent() {
        let f1 = OperatorMatrix::from_int_rows(1, &[vec![0, 0], vec![1, 0]]);
        assert!(f1.mat_mul(&f1).unwrap().is_zero());
    }

    #[test]
    fn tensor_extend_identity() {
        let id = OperatorMatrix::identity(3);
        assert_eq!(id.tensor_extend(), OperatorMatrix::identity(7));
    }

    #[test]
    fn commutator_with_self_vanishes() {
        let c3 = OperatorMatrix::from_int_rows(1, &[vec![0, 1], vec![-1, 0]]);
        assert!(c3.commutator(&c3).unwrap().is_zero());
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let a = OperatorMatrix::identity(1);
        let b = OperatorMatrix::identity(3);
        assert_eq!(
            a.mat_mul(&b),
            Err(Error::DimensionMismatch { left: 2, right: 4 })
        );
    }

    #[test]
    fn json_round_trip() {
        let mut m = OperatorMatrix::zero(1);
        m.set(1, 2, ExactScalar::sqrt_of(12));
        m.set(2, 1, ExactScalar::from_rational(Rational::new(
            BigInt::from(-3),
            BigInt::from(2),
        )));
        let v = m.to_json();
        assert_eq!(OperatorMatrix::from_json(&v).unwrap(), m);
    }
}
