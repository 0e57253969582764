//! Root-f, root-d and root-h sequences: nilpotent matrices built by
//! extracting square roots, (x^(p'))² = x^(p) ⊗ 1 with p' = 2p+1.
//!
//! The main block diagonal of every member is diag(1,..,1) ⊗ f^(1); the
//! lower triangular block matrix (LTM) consists of G·c₃, E·(f^(1))⁺ or
//! J·c₂ blocks depending on the kind. Squaring such a matrix yields, per
//! block (μ,ν), the coefficient itself plus a convolution of coefficient
//! products (weighted by c₃² = −1, ((f^(1))⁺)² = 0 or c₂² = +1), so each
//! solve is a forward substitution with unit pivots: row 5 col 4 down to
//! col 1, then row 6, and so on.

use crate::error::{Error, Result};
use crate::exact::{is_paraorder, ExactScalar, OperatorMatrix};
use crate::intmat::IntMatrix;
use crate::report::Report;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Selects the LTM block content: c₃, (f^(1))⁺ or c₂.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RootKind {
    F,
    D,
    H,
}

impl RootKind {
    /// Weight of the quadratic coefficient convolution in the solve:
    /// the square of the LTM block content as a multiple of the identity.
    fn block_square_weight(self) -> i64 {
        match self {
            RootKind::F => -1, // c₃² = −1
            RootKind::D => 0,  // ((f^(1))⁺)² = 0
            RootKind::H => 1,  // c₂² = +1
        }
    }
}

impl fmt::Display for RootKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootKind::F => write!(f, "f"),
            RootKind::D => write!(f, "d"),
            RootKind::H => write!(f, "h"),
        }
    }
}

/// Strictly-lower-triangular array of block coefficients (G, E or J),
/// indexed 1-based as (μ,ν), μ > ν, matching the G_{51} style of the
/// displays. `half` is the block dimension (p+1)/2.
#[derive(Clone, PartialEq, Eq)]
pub struct CoeffTriangle {
    kind: RootKind,
    half: usize,
    coeff: Vec<BigInt>,
}

impl CoeffTriangle {
    /// The p = 1 member: a single f^(1) block, no coefficients.
    pub fn initial(kind: RootKind) -> Self {
        CoeffTriangle { kind, half: 1, coeff: Vec::new() }
    }

    fn index(&self, mu: usize, nu: usize) -> usize {
        debug_assert!(mu > nu && nu >= 1 && mu <= self.half);
        (mu - 1) * (mu - 2) / 2 + (nu - 1)
    }

    pub fn kind(&self) -> RootKind {
        self.kind
    }

    pub fn half(&self) -> usize {
        self.half
    }

    pub fn paraorder(&self) -> u64 {
        2 * self.half as u64 - 1
    }

    pub fn coeff(&self, mu: usize, nu: usize) -> &BigInt {
        &self.coeff[self.index(mu, nu)]
    }

    pub fn set_coeff(&mut self, mu: usize, nu: usize, v: BigInt) {
        let i = self.index(mu, nu);
        self.coeff[i] = v;
    }

    /// Iterates (μ, ν, coefficient) over the strict lower triangle.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        let half = self.half;
        (2..=half).flat_map(move |mu| (1..mu).map(move |nu| (mu, nu, self.coeff(mu, nu))))
    }

    /// The triangle viewed as a half×half square with zeros on and above
    /// the diagonal; this is what quadrant navigation operates on.
    pub fn as_square(&self) -> IntMatrix {
        let mut m = IntMatrix::zero(self.half);
        for (mu, nu, v) in self.iter() {
            m.set(mu, nu, v.clone());
        }
        m
    }

    /// Largest coefficient magnitude.
    pub fn max_coeff(&self) -> BigInt {
        self.coeff
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// The full (p+1)×(p+1) integer matrix of the member.
    pub fn to_int_matrix(&self) -> IntMatrix {
        let n = self.half;
        let mut m = IntMatrix::zero(2 * n);
        for mu in 1..=n {
            m.set(2 * mu, 2 * mu - 1, BigInt::one()); // f^(1) block
        }
        for (mu, nu, v) in self.iter() {
            match self.kind {
                RootKind::F => {
                    m.set(2 * mu - 1, 2 * nu, v.clone());
                    m.set(2 * mu, 2 * nu - 1, -v.clone());
                }
                RootKind::D => {
                    m.set(2 * mu - 1, 2 * nu, v.clone());
                }
                RootKind::H => {
                    m.set(2 * mu - 1, 2 * nu, v.clone());
                    m.set(2 * mu, 2 * nu - 1, v.clone());
                }
            }
        }
        m
    }

    /// The member as an operator matrix with paraorder metadata.
    pub fn to_operator_matrix(&self) -> OperatorMatrix {
        let m = self.to_int_matrix();
        let p = self.paraorder();
        let mut out = OperatorMatrix::zero(p);
        for r in 1..=m.dim() {
            for c in 1..=m.dim() {
                if !m.at(r, c).is_zero() {
                    out.set(r, c, ExactScalar::from_bigint(m.at(r, c).clone()));
                }
            }
        }
        out
    }

    /// Compact CSV, one `μ,ν,coeff` row per entry.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (mu, nu, v) in self.iter() {
            out.push_str(&format!("{mu},{nu},{v}\n"));
        }
        out
    }
}

impl fmt::Debug for CoeffTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}-triangle p={}", self.kind, self.paraorder())?;
        for mu in 2..=self.half {
            let row: Vec<String> = (1..mu).map(|nu| self.coeff(mu, nu).to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        Ok(())
    }
}

/// f^(1) = ½(c₂ − c₃) = [[0,0],[1,0]].
pub fn initial_operator() -> OperatorMatrix {
    OperatorMatrix::from_int_rows(1, &[vec![0, 0], vec![1, 0]])
}

/// One square-root extraction: from the member at order p to the member
/// at p' = 2p+1. The upper-left and lower-right quadrants of the new
/// triangle repeat the old one; the lower-left quadrant is solved by
/// forward substitution against the scalar entries of the old member.
pub fn sqrt_step_triangle(prev: &CoeffTriangle) -> CoeffTriangle {
    let kind = prev.kind;
    let n = prev.half;
    let n2 = 2 * n;
    let weight = kind.block_square_weight();
    let mut next = CoeffTriangle {
        kind,
        half: n2,
        coeff: vec![BigInt::zero(); n2 * (n2 - 1) / 2],
    };
    for (mu, nu, v) in prev.iter() {
        next.set_coeff(mu, nu, v.clone());
        next.set_coeff(n + mu, n + nu, v.clone());
    }
    let target = prev.to_int_matrix(); // (p+1)×(p+1) = n2×n2 scalars
    for mu in (n + 1)..=n2 {
        for nu in (1..=n).rev() {
            let mut quad = BigInt::zero();
            for kappa in (nu + 1)..mu {
                quad += next.coeff(mu, kappa) * next.coeff(kappa, nu);
            }
            let value = match weight {
                -1 => target.at(mu, nu) + quad,
                1 => target.at(mu, nu) - quad,
                _ => target.at(mu, nu).clone(),
            };
            next.set_coeff(mu, nu, value);
        }
    }
    next
}

/// Square-root step on materialized matrices, also returning the solved
/// triangle. The member passed in must sit in the kind's sequence.
pub fn sqrt_step(kind: RootKind, x: &OperatorMatrix) -> Result<(OperatorMatrix, CoeffTriangle)> {
    let p = x.paraorder();
    let prev = triangle_from_matrix(kind, x)?;
    let next = sqrt_step_triangle(&prev);
    let consistency = verify_square_relation(&next, &prev);
    if !consistency.passed() {
        return Err(Error::SolverInconsistent(format!(
            "square of solved order-{} member does not reproduce order-{} input",
            next.paraorder(),
            p
        )));
    }
    Ok((next.to_operator_matrix(), next))
}

/// Reads the coefficient triangle back off a materialized member,
/// checking the block ansatz along the way.
pub fn triangle_from_matrix(kind: RootKind, x: &OperatorMatrix) -> Result<CoeffTriangle> {
    let p = x.paraorder();
    if !is_paraorder(p) {
        return Err(Error::InvalidParaorder(p));
    }
    let n = ((p + 1) / 2) as usize;
    let mut t = CoeffTriangle {
        kind,
        half: n,
        coeff: vec![BigInt::zero(); n * (n - 1) / 2],
    };
    let expected = {
        let mut probe = t.clone();
        for mu in 2..=n {
            for nu in 1..mu {
                let v = x
                    .entry(2 * mu - 1, 2 * nu)
                    .as_integer()
                    .ok_or_else(|| Error::SolverInconsistent("non-integer block coefficient".into()))?;
                probe.set_coeff(mu, nu, v);
            }
        }
        probe
    };
    if expected.to_operator_matrix() != *x {
        return Err(Error::SolverInconsistent(
            "matrix is not of the kind's block form".into(),
        ));
    }
    t.coeff = expected.coeff.clone();
    Ok(t)
}

/// All members from p = 1 up to `p_target`, as coefficient triangles.
pub fn build_triangles(kind: RootKind, p_target: u64) -> Result<Vec<CoeffTriangle>> {
    if !is_paraorder(p_target) {
        return Err(Error::InvalidParaorder(p_target));
    }
    let mut out = vec![CoeffTriangle::initial(kind)];
    while out.last().unwrap().paraorder() < p_target {
        let next = sqrt_step_triangle(out.last().unwrap());
        out.push(next);
    }
    Ok(out)
}

/// The single member at order p.
pub fn build_member(kind: RootKind, p: u64) -> Result<CoeffTriangle> {
    Ok(build_triangles(kind, p)?.pop().unwrap())
}

/// Checks (x^(p'))² = x^(p) ⊗ 1 bit-exactly on integer matrices.
pub fn verify_square_relation(next: &CoeffTriangle, prev: &CoeffTriangle) -> Report {
    let mut report = Report::new(format!(
        "square relation {}^({}) -> {}^({})",
        next.kind,
        prev.paraorder(),
        next.kind,
        next.paraorder()
    ));
    let x = next.to_int_matrix();
    let squared = x.mul(&x);
    let rhs = prev.to_int_matrix().tensor_extend();
    report.check_positions("(x')^2 = x (x) 1", squared.diff_positions(&rhs, 10));
    report
}

/// x^{p+1} = 0 while x^p ≠ 0, by repeated squaring.
pub fn verify_nilpotency(t: &CoeffTriangle) -> Report {
    let p = t.paraorder();
    let x = t.to_int_matrix();
    let mut report = Report::new(format!("nilpotency {}^({})", t.kind, p));
    report.check(format!("x^{p} nonzero"), !x.pow(p).is_zero(), "");
    report.check(format!("x^{} = 0", p + 1), x.pow(p + 1).is_zero(), "");
    report
}

/// Kind-specific structural invariants of the coefficient triangle:
/// all G odd and positive, E = δ_{μ,ν+1}, alternating J signs down the
/// columns of the LTM.
pub fn verify_triangle_structure(t: &CoeffTriangle) -> Report {
    let mut report = Report::new(format!("triangle structure {}^({})", t.kind, t.paraorder()));
    match t.kind {
        RootKind::F => {
            let ok = t.iter().all(|(_, _, v)| v.is_positive() && v.is_odd());
            report.check("all G odd positive", ok, "");
        }
        RootKind::D => {
            let ok = t.iter().all(|(mu, nu, v)| {
                if mu == nu + 1 {
                    v.is_one()
                } else {
                    v.is_zero()
                }
            });
            report.check("E = delta_{mu,nu+1}", ok, "");
        }
        RootKind::H => {
            // signs alternate along each column: J_{nu+1,nu} = 1, then
            // strictly alternating as mu grows
            let ok = t.iter().all(|(mu, nu, v)| {
                let expect_positive = (mu - nu) % 2 == 1;
                !v.is_zero() && (v.is_positive() == expect_positive)
            });
            report.check("J signs alternate along columns", ok, "");
        }
    }
    report
}

/// Full rootseq verification for one kind up to `p_target`.
pub fn suite(kind: RootKind, p_target: u64) -> Result<Report> {
    let seq = build_triangles(kind, p_target)?;
    let mut report = Report::new(format!("rootseq suite kind={kind} to p={p_target}"));
    for pair in seq.windows(2) {
        report.merge(verify_square_relation(&pair[1], &pair[0]));
    }
    for t in &seq {
        if t.paraorder() <= 63 {
            report.merge(verify_nilpotency(t));
        }
        report.merge(verify_triangle_structure(t));
    }
    Ok(report)
}
