//! Exact parametric linear solving over the rationals: Gaussian
//! elimination to reduced row echelon form with free columns turned into
//! named parameters.

use crate::exact::Rational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// An affine expression c + Σ aᵢ·r_{i} over free parameters (0-based ids).
#[derive(Clone, PartialEq, Eq)]
pub struct Affine {
    pub constant: Rational,
    pub coeffs: BTreeMap<usize, Rational>,
}

impl Affine {
    pub fn zero() -> Self {
        Affine { constant: Rational::zero(), coeffs: BTreeMap::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Affine { constant: c, coeffs: BTreeMap::new() }
    }

    pub fn from_i64(n: i64) -> Self {
        Affine::constant(Rational::from_integer(n.into()))
    }

    pub fn param(id: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(id, Rational::one());
        Affine { constant: Rational::zero(), coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.constant += &rhs.constant;
        for (id, c) in &rhs.coeffs {
            let v = out.coeffs.entry(*id).or_insert_with(Rational::zero);
            *v += c;
            if v.is_zero() {
                out.coeffs.remove(id);
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&-Rational::one()))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Affine::zero();
        }
        Affine {
            constant: &self.constant * k,
            coeffs: self.coeffs.iter().map(|(&id, c)| (id, c * k)).collect(),
        }
    }

    /// Substitutes numeric values for all parameters.
    pub fn eval(&self, values: &[Rational]) -> Rational {
        let mut out = self.constant.clone();
        for (&id, c) in &self.coeffs {
            out += c * &values[id];
        }
        out
    }

    /// Renames parameter ids through the given map.
    pub fn rename_params(&self, map: &BTreeMap<usize, usize>) -> Self {
        Affine {
            constant: self.constant.clone(),
            coeffs: self.coeffs.iter().map(|(id, c)| (map[id], c.clone())).collect(),
        }
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if !self.constant.is_zero() || self.coeffs.is_empty() {
            write!(f, "{}", self.constant)?;
            first = false;
        }
        for (id, c) in &self.coeffs {
            let name = format!("r{}", id + 1);
            if first {
                if c.is_one() {
                    write!(f, "{name}")?;
                } else {
                    write!(f, "{c}*{name}")?;
                }
                first = false;
            } else if c.is_negative() {
                let m = -c.clone();
                if m.is_one() {
                    write!(f, " - {name}")?;
                } else {
                    write!(f, " - {m}*{name}")?;
                }
            } else if c.is_one() {
                write!(f, " + {name}")?;
            } else {
                write!(f, " + {c}*{name}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One linear equation: Σ coeffs[j]·x_j = rhs.
pub struct Equation {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
}

/// Outcome of a parametric solve.
pub enum Solution {
    /// Unknowns as affine expressions in parameters; `free_cols` lists
    /// the unknown columns that became parameters, in parameter order.
    Solved { exprs: Vec<Affine>, free_cols: Vec<usize> },
    Inconsistent,
}

/// Reduced-row-echelon elimination over ℚ. Free columns become
/// parameters; by default they are numbered in column order, or in
/// reverse column order when `name_reverse` is set (the convention the
/// normalizing-factor displays follow).
pub fn solve_parametric(equations: &[Equation], ncols: usize, name_reverse: bool) -> Solution {
    let mut rows: Vec<(Vec<Rational>, Rational)> = equations
        .iter()
        .filter(|e| !(e.coeffs.iter().all(|c| c.is_zero()) && e.rhs.is_zero()))
        .map(|e| (e.coeffs.clone(), e.rhs.clone()))
        .collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut pivot_rows: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut next_row = 0usize;
    for col in 0..ncols {
        let Some(r) = (next_row..rows.len()).find(|&r| !rows[r].0[col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, r);
        let inv = {
            let p = &rows[next_row].0[col];
            Rational::one() / p.clone()
        };
        for c in rows[next_row].0.iter_mut() {
            *c *= &inv;
        }
        rows[next_row].1 *= &inv;
        for r2 in 0..rows.len() {
            if r2 == next_row || rows[r2].0[col].is_zero() {
                continue;
            }
            let factor = rows[r2].0[col].clone();
            for c in 0..ncols {
                let delta = &factor * &rows[next_row].0[c];
                rows[r2].0[c] -= delta;
            }
            let drhs = &factor * &rows[next_row].1;
            rows[r2].1 -= drhs;
        }
        pivot_of_col[col] = Some(next_row);
        pivot_rows.push((next_row, col));
        next_row += 1;
        if next_row == rows.len() {
            break;
        }
    }
    // inconsistency: 0 = nonzero
    for (coeffs, rhs) in rows.iter().skip(next_row) {
        if coeffs.iter().all(|c| c.is_zero()) && !rhs.is_zero() {
            return Solution::Inconsistent;
        }
    }
    let free_cols: Vec<usize> = (0..ncols).filter(|&c| pivot_of_col[c].is_none()).collect();
    let ordered: Vec<usize> = if name_reverse {
        free_cols.iter().rev().copied().collect()
    } else {
        free_cols.clone()
    };
    let param_of_col: BTreeMap<usize, usize> =
        ordered.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut exprs = vec![Affine::zero(); ncols];
    for &col in &free_cols {
        exprs[col] = Affine::param(param_of_col[&col]);
    }
    for &(row, col) in &pivot_rows {
        let mut e = Affine::constant(rows[row].1.clone());
        for &fc in &free_cols {
            let c = &rows[row].0[fc];
            if !c.is_zero() {
                e = e.sub(&Affine::param(param_of_col[&fc]).scale(c));
            }
        }
        exprs[col] = e;
    }
    Solution::Solved { exprs, free_cols: ordered }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn eq(coeffs: &[i64], rhs: i64) -> Equation {
        Equation {
            coeffs: coeffs.iter().map(|&c| rat(c, 1)).collect(),
            rhs: rat(rhs, 1),
        }
    }

    #[test]
    fn unique_solution() {
        // x + y = 3, x - y = 1
        let sol = solve_parametric(&[eq(&[1, 1], 3), eq(&[1, -1], 1)], 2, false);
        match sol {
            Solution::Solved { exprs, free_cols } => {
                assert!(free_cols.is_empty());
                assert_eq!(exprs[0], Affine::from_i64(2));
                assert_eq!(exprs[1], Affine::from_i64(1));
            }
            _ => panic!("expected solution"),
        }
    }

    #[test]
    fn underdetermined_names_frees() {
        // x + y + z = 6 with columns (x, y, z): frees y, z
        let sol = solve_parametric(&[eq(&[1, 1, 1], 6)], 3, false);
        match sol {
            Solution::Solved { exprs, free_cols } => {
                assert_eq!(free_cols, vec![1, 2]);
                assert_eq!(exprs[1], Affine::param(0));
                assert_eq!(exprs[2], Affine::param(1));
                let expect = Affine::from_i64(6)
                    .sub(&Affine::param(0))
                    .sub(&Affine::param(1));
                assert_eq!(exprs[0], expect);
            }
            _ => panic!("expected solution"),
        }
    }

    #[test]
    fn reverse_naming() {
        let sol = solve_parametric(&[eq(&[1, 1, 1], 6)], 3, true);
        match sol {
            Solution::Solved { exprs, free_cols } => {
                assert_eq!(free_cols, vec![2, 1]);
                assert_eq!(exprs[2], Affine::param(0)); // last column is r1
                assert_eq!(exprs[1], Affine::param(1));
            }
            _ => panic!("expected solution"),
        }
    }

    #[test]
    fn inconsistent_system() {
        let sol = solve_parametric(&[eq(&[1, 1], 1), eq(&[1, 1], 2)], 2, false);
        assert!(matches!(sol, Solution::Inconsistent));
    }
}
