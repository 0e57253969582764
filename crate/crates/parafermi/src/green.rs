//! Green's representation of the parafermi operator and its identities:
//! the spin diagonal, the trilinear relations, the carry-bit-neighbor
//! anticommutator link, and the coefficient doubling between orders.

use crate::error::{Error, Result};
use crate::exact::{is_paraorder, ExactScalar, OperatorMatrix, Rational};
use crate::report::Report;
use num_bigint::BigInt;

/// The subdiagonal coefficients B_β = √(β(p−β+1)), β = 1..p.
#[derive(Clone, Debug)]
pub struct GreenCoefficients {
    pub p: u64,
    pub values: Vec<ExactScalar>,
}

impl GreenCoefficients {
    pub fn new(p: u64) -> Result<Self> {
        if !is_paraorder(p) {
            return Err(Error::InvalidParaorder(p));
        }
        let values = (1..=p)
            .map(|beta| ExactScalar::sqrt_of(beta * (p - beta + 1)))
            .collect();
        Ok(GreenCoefficients { p, values })
    }

    /// B_β, 1-based.
    pub fn coeff(&self, beta: u64) -> &ExactScalar {
        &self.values[(beta - 1) as usize]
    }
}

/// The (p+1)×(p+1) matrix with B_β on the subdiagonal.
pub fn build_green(p: u64) -> Result<OperatorMatrix> {
    let coeffs = GreenCoefficients::new(p)?;
    let mut b = OperatorMatrix::zero(p);
    for beta in 1..=p {
        b.set((beta + 1) as usize, beta as usize, coeffs.coeff(beta).clone());
    }
    Ok(b)
}

fn half(n: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(2))
}

/// diag(p/2, p/2-1, ..., -p/2).
pub fn spin_diagonal(p: u64) -> OperatorMatrix {
    let mut d = OperatorMatrix::zero(p);
    for i in 0..=p {
        let v = half(p as i64 - 2 * i as i64);
        d.set((i + 1) as usize, (i + 1) as usize, ExactScalar::from_rational(v));
    }
    d
}

/// ½[b⁺,b] must equal the spin diagonal exactly.
pub fn verify_spin(p: u64) -> Result<Report> {
    let b = build_green(p)?;
    let lhs = b.adjoint().commutator(&b)?.scale(&half(1));
    let rhs = spin_diagonal(p);
    let mut report = Report::new(format!("spin diagonal p={p}"));
    report.check_positions("half [b+, b] = diag(p/2 .. -p/2)", lhs.diff_positions(&rhs, 10));
    Ok(report)
}

/// [[b⁺,b],b] = −2b and [[b⁺,b],b⁺] = 2b⁺.
pub fn verify_trilinear(p: u64) -> Result<Report> {
    let b = build_green(p)?;
    let bp = b.adjoint();
    let core = bp.commutator(&b)?;
    let mut report = Report::new(format!("trilinear relations p={p}"));
    report.check_positions(
        "[[b+,b],b] = -2b",
        core.commutator(&b)?.diff_positions(&b.scale_int(-2), 10),
    );
    report.check_positions(
        "[[b+,b],b+] = 2b+",
        core.commutator(&bp)?.diff_positions(&bp.scale_int(2), 10),
    );
    Ok(report)
}

/// ½{b^(p'), diag(1,..,1)⊗b^(1)} = b^(p)⊗1 with p' = 2p+1.
pub fn verify_interordinal_b(p: u64) -> Result<Report> {
    let p_up = 2 * p + 1;
    let b_up = build_green(p_up)?;
    let ladder = build_green(1)?; // b^(1) = f^(1)
    let mixer = OperatorMatrix::identity(p).kronecker(&ladder);
    let lhs = b_up.anticommutator(&mixer)?.scale(&half(1));
    let rhs = build_green(p)?.tensor_extend();
    let mut report = Report::new(format!("interordinal anticommutator p={p} -> p'={p_up}"));
    report.check_positions(
        "half {b^(p'), 1 (x) b^(1)} = b^(p) (x) 1",
        lhs.diff_positions(&rhs, 10),
    );
    Ok(report)
}

/// b^{p+1} = (b⁺)^{p+1} = 0 and b^p ≠ 0.
pub fn verify_nilpotency_b(p: u64) -> Result<Report> {
    let b = build_green(p)?;
    let mut report = Report::new(format!("green nilpotency p={p}"));
    let bp = b.pow(p as u32)?;
    report.check("b^p nonzero", !bp.is_zero(), "");
    report.check("b^(p+1) = 0", bp.mat_mul(&b)?.is_zero(), "");
    report.check(
        "(b+)^(p+1) = 0",
        b.adjoint().pow(p as u32 + 1)?.is_zero(),
        "",
    );
    Ok(report)
}

/// Every coefficient of order p is echoed by every second coefficient of
/// order p' = 2p+1: B_{2β}^(p') = 2·B_β^(p).
pub fn green_doubling(p: u64) -> Result<Report> {
    let low = GreenCoefficients::new(p)?;
    let up = GreenCoefficients::new(2 * p + 1)?;
    let mut report = Report::new(format!("coefficient doubling p={p} -> p'={}", 2 * p + 1));
    let mut bad = Vec::new();
    for beta in 1..=p {
        let lhs = up.coeff(2 * beta).clone();
        let rhs = low.coeff(beta).scale(&Rational::from_integer(BigInt::from(2)));
        if lhs != rhs {
            bad.push(beta);
        }
    }
    report.check(
        "B_{2beta}^(p') = 2 B_beta^(p)",
        bad.is_empty(),
        if bad.is_empty() { String::new() } else { format!("failing beta: {bad:?}") },
    );
    Ok(report)
}

/// Palindromic symmetry B_β = B_{p+1−β}.
pub fn verify_palindrome(p: u64) -> Result<bool> {
    let g = GreenCoefficients::new(p)?;
    Ok((1..=p).all(|beta| g.coeff(beta) == g.coeff(p + 1 - beta)))
}

/// Runs every green check for one paraorder.
pub fn suite(p: u64) -> Result<Report> {
    let mut report = Report::new(format!("green suite p={p}"));
    report.merge(verify_spin(p)?);
    report.merge(verify_trilinear(p)?);
    report.merge(verify_nilpotency_b(p)?);
    report.check("palindrome B_beta = B_{p+1-beta}", verify_palindrome(p)?, "");
    if is_paraorder(2 * p + 1) {
        report.merge(verify_interordinal_b(p)?);
        report.merge(green_doubling(p)?);
    }
    Ok(report)
}
