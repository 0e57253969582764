//! Dense integer matrices. The root-sequence members have integer entries,
//! so the heavy verification paths (squares, determinants, navigation) run
//! on these instead of formal scalars.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(dim: usize) -> Self {
        IntMatrix { dim, entries: vec![BigInt::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = IntMatrix::zero(dim);
        for i in 1..=dim {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        let mut m = IntMatrix::zero(dim);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim);
            for (c, v) in row.iter().enumerate() {
                m.set(r + 1, c + 1, BigInt::from(*v));
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// 1-based access.
    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[(r - 1) * self.dim + (c - 1)]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[(r - 1) * self.dim + (c - 1)] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        IntMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        IntMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        IntMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * k).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = IntMatrix::zero(n);
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
                    let cell = &mut out.entries[r * n + c];
                    *cell += a * b;
                }
            }
        }
        out
    }

    /// self ⊗ 1₂.
    pub fn tensor_extend(&self) -> Self {
        let n = self.dim;
        let mut out = IntMatrix::zero(2 * n);
        for r in 1..=n {
            for c in 1..=n {
                let v = self.at(r, c);
                if v.is_zero() {
                    continue;
                }
                out.set(2 * r - 1, 2 * c - 1, v.clone());
                out.set(2 * r, 2 * c, v.clone());
            }
        }
        out
    }

    /// Power by repeated squaring; exponents up to dim stay cheap even for
    /// the 128-dimensional members.
    pub fn pow(&self, e: u64) -> Self {
        let mut result = IntMatrix::identity(self.dim);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut out = IntMatrix::zero(n);
        for r in 1..=n {
            for c in 1..=n {
                out.set(c, r, self.at(r, c).clone());
            }
        }
        out
    }

    /// Reflection in the secondary diagonal.
    pub fn reflect_secondary(&self) -> Self {
        let n = self.dim;
        let mut out = IntMatrix::zero(n);
        for r in 1..=n {
            for c in 1..=n {
                out.set(r, c, self.at(n + 1 - c, n + 1 - r).clone());
            }
        }
        out
    }

    /// Sub-square rows r0..r0+len-1, cols c0..c0+len-1 (1-based).
    pub fn sub_square(&self, r0: usize, c0: usize, len: usize) -> Self {
        let mut out = IntMatrix::zero(len);
        for r in 0..len {
            for c in 0..len {
                out.set(r + 1, c + 1, self.at(r0 + r, c0 + c).clone());
            }
        }
        out
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        let n = self.dim;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.entries.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                let swap = (k + 1..n).find(|&r| !m[r * n + k].is_zero());
                match swap {
                    Some(r) => {
                        for c in 0..n {
                            m.swap(k * n + c, r * n + c);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j];
                    m[i * n + j] = num / &prev;
                }
                m[i * n + k] = BigInt::zero();
            }
            prev = m[k * n + k].clone();
        }
        sign * m[(n - 1) * n + (n - 1)].clone()
    }

    /// Entrywise signed residue: |e| reduced mod 8, sign kept.
    pub fn mod8_signed(&self) -> Self {
        IntMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|e| {
                    let r = e.abs() % 8u8;
                    if e.is_negative() {
                        -r
                    } else {
                        r
                    }
                })
                .collect(),
        }
    }

    pub fn diff_positions(&self, rhs: &Self, limit: usize) -> (Vec<(usize, usize)>, usize) {
        let mut out = Vec::new();
        let mut total = 0;
        for r in 1..=self.dim {
            for c in 1..=self.dim {
                if self.at(r, c) != rhs.at(r, c) {
                    total += 1;
                    if out.len() < limit {
                        out.push((r, c));
                    }
                }
            }
        }
        (out, total)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 1..=self.dim {
            let row: Vec<String> = (1..=self.dim).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
