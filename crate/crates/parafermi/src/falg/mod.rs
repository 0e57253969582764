//! Orthogonal decomposition of the root-f members, the f-parafermi
//! algebra, and the heterotic variant with its parametric exact solver.

pub mod linsolve;

use crate::error::{Error, Result};
use crate::exact::{ExactScalar, OperatorMatrix, Rational};
use crate::green::spin_diagonal;
use crate::intmat::IntMatrix;
use crate::report::Report;
use crate::rootseq::{build_member, RootKind};
use linsolve::{solve_parametric, Affine, Equation, Solution};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;

/// The index permutations s_υ(μ) = ((μ−1) XOR υ) + 1, a family
/// isomorphic to Z₂^(n−1) with s₀ the identity.
pub fn index_permutation(upsilon: usize, mu: usize) -> usize {
    ((mu - 1) ^ upsilon) + 1
}

/// Splits x (of dimension 2^n) into the orthogonal pieces f_υ,
/// υ = 0..(p−1)/2, each keeping only the 2×2 blocks at (μ, s_υ(μ)).
pub fn decompose(x: &OperatorMatrix) -> Result<Vec<OperatorMatrix>> {
    let dim = x.dim();
    if !dim.is_power_of_two() || dim < 2 {
        return Err(Error::InvalidParaorder(dim as u64));
    }
    let nb = dim / 2;
    let mut parts = Vec::with_capacity(nb);
    for upsilon in 0..nb {
        let mut part = OperatorMatrix::zero(x.paraorder());
        for mu in 1..=nb {
            let nu = index_permutation(upsilon, mu);
            for dr in 0..2 {
                for dc in 0..2 {
                    let (r, c) = (2 * mu - 1 + dr, 2 * nu - 1 + dc);
                    let v = x.entry(r, c);
                    if !v.is_zero() {
                        part.set(r, c, v.clone());
                    }
                }
            }
        }
        parts.push(part);
    }
    Ok(parts)
}

/// Entrywise mod-8 reduction of a diagonal integer matrix.
fn reduce_diagonal_mod8(m: &OperatorMatrix) -> Result<OperatorMatrix> {
    let mut out = OperatorMatrix::zero(m.paraorder());
    for r in 1..=m.dim() {
        for c in 1..=m.dim() {
            let v = m.entry(r, c);
            if v.is_zero() {
                continue;
            }
            if r != c {
                return Err(Error::SolverInconsistent(
                    "mod-8 reduction applies to diagonal products only".into(),
                ));
            }
            let n = v
                .as_integer()
                .ok_or_else(|| Error::SolverInconsistent("non-integer diagonal".into()))?;
            out.set(r, c, ExactScalar::from_bigint(((n % 8) + 8) % 8));
        }
    }
    Ok(out)
}

/// The f-parafermi relations: the spin sum with a ½ on the υ = 0 term,
/// and the two trilinear sums. With `reduce` set, each diagonal product
/// f_υ⁺f_υ and f_υf_υ⁺ is reduced mod 8 first (every odd square → 1),
/// which is what extends the algebra beyond p = 7.
pub fn f_algebra_report(f: &OperatorMatrix, reduce: bool) -> Result<Report> {
    let p = f.paraorder();
    let mut report = Report::new(format!(
        "f-parafermi algebra p={p}{}",
        if reduce { " (mod 8)" } else { "" }
    ));
    let parts = decompose(f)?;
    let mut comms = Vec::with_capacity(parts.len());
    for part in &parts {
        let up = part.adjoint().mat_mul(part)?;
        let down = part.mat_mul(&part.adjoint())?;
        let (up, down) = if reduce {
            (reduce_diagonal_mod8(&up)?, reduce_diagonal_mod8(&down)?)
        } else {
            (up, down)
        };
        comms.push(up.sub(&down)?);
    }
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let mut spin_sum = comms[0].scale(&half);
    for c in comms.iter().skip(1) {
        spin_sum = spin_sum.add(c)?;
    }
    report.check_positions(
        "half [f0+,f0] + sum [fu+,fu] = spin diagonal",
        spin_sum.diff_positions(&spin_diagonal(p), 10),
    );
    let mut tri_low = OperatorMatrix::zero(p);
    let mut tri_up = OperatorMatrix::zero(p);
    for (comm, part) in comms.iter().zip(&parts) {
        tri_low = tri_low.add(&comm.commutator(part)?)?;
        tri_up = tri_up.add(&comm.commutator(&part.adjoint())?)?;
    }
    report.check_positions(
        "sum [[fu+,fu],fu] = -2f",
        tri_low.diff_positions(&f.scale_int(-2), 10),
    );
    report.check_positions(
        "sum [[fu+,fu],fu+] = 2f+",
        tri_up.diff_positions(&f.adjoint().scale_int(2), 10),
    );
    Ok(report)
}

/// Exact f-parafermi verification; holds for p ∈ {3,7}, while p ≥ 15
/// delegates to the mod-8 form.
pub fn verify_f_algebra(p: u64) -> Result<Report> {
    if p >= 15 {
        return verify_mod8_algebra(p);
    }
    let f = build_member(RootKind::F, p)?.to_operator_matrix();
    f_algebra_report(&f, false)
}

/// The mod-8 form of the algebra for p ≥ 15.
pub fn verify_mod8_algebra(p: u64) -> Result<Report> {
    let f = build_member(RootKind::F, p)?.to_operator_matrix();
    f_algebra_report(&f, true)
}

/// Block-position supports of the decomposition partition the block grid.
pub fn verify_support_partition(x: &OperatorMatrix) -> Result<Report> {
    let mut report = Report::new("decomposition supports");
    let parts = decompose(x)?;
    let mut sum = OperatorMatrix::zero(x.paraorder());
    for part in &parts {
        sum = sum.add(part)?;
    }
    report.check_positions("sum of pieces rebuilds x", sum.diff_positions(x, 10));
    let nb = x.dim() / 2;
    let mut seen = vec![false; nb * nb];
    let mut disjoint = true;
    for upsilon in 0..nb {
        for mu in 1..=nb {
            let nu = index_permutation(upsilon, mu);
            let idx = (mu - 1) * nb + (nu - 1);
            if seen[idx] {
                disjoint = false;
            }
            seen[idx] = true;
        }
    }
    report.check("position supports disjoint and complete", disjoint && seen.iter().all(|&s| s), "");
    Ok(report)
}

/// Symmetry families read off g^(3): quadrants (A B / −Bᵀ A),
/// (A B / −Bᵀ Ā), and (A₀ B / C Ā₀) with a zero area below the secondary
/// diagonal of A₀.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    None,
    S1,
    S2,
    S3,
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symmetry::None => write!(f, "none"),
            Symmetry::S1 => write!(f, "S1"),
            Symmetry::S2 => write!(f, "S2"),
            Symmetry::S3 => write!(f, "S3"),
        }
    }
}

/// A square matrix whose entries are affine expressions in free
/// parameters, the shape heterotic solutions come in.
#[derive(Clone, Debug)]
pub struct ParametricMatrix {
    dim: usize,
    paraorder: u64,
    entries: Vec<Affine>,
    nparams: usize,
}

impl ParametricMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_params(&self) -> usize {
        self.nparams
    }

    pub fn entry(&self, a: usize, b: usize) -> &Affine {
        &self.entries[(a - 1) * self.dim + (b - 1)]
    }

    pub fn instantiate(&self, values: &[Rational]) -> OperatorMatrix {
        let mut m = OperatorMatrix::zero(self.paraorder);
        for a in 1..=self.dim {
            for b in 1..=self.dim {
                let v = self.entry(a, b).eval(values);
                if !v.is_zero() {
                    m.set(a, b, ExactScalar::from_rational(v));
                }
            }
        }
        m
    }

    pub fn at_zero(&self) -> OperatorMatrix {
        self.instantiate(&vec![Rational::zero(); self.nparams])
    }
}

/// The four normalizing factors, possibly affine in free parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizingFactors {
    pub chi: Affine,
    pub sigma: Affine,
    pub tau: Affine,
    pub gamma: Affine,
}

impl NormalizingFactors {
    pub fn standard() -> Self {
        NormalizingFactors {
            chi: Affine::from_i64(1),
            sigma: Affine::constant(Rational::new(BigInt::from(-1), BigInt::from(4))),
            tau: Affine::constant(Rational::new(BigInt::from(1), BigInt::from(4))),
            gamma: Affine::zero(),
        }
    }
}

fn unknown_positions(dim: usize) -> (Vec<(usize, usize)>, Vec<Option<usize>>) {
    let mut list = Vec::new();
    let mut index = vec![None; dim * dim];
    for a in 1..=dim {
        for b in 1..=dim {
            if (a + b) % 2 == 1 {
                index[(a - 1) * dim + (b - 1)] = Some(list.len());
                list.push((a, b));
            }
        }
    }
    (list, index)
}

/// Builds the linear system [[f⁺,f],g] = −2f (and its adjoint) over the
/// unknown g entries of the checkerboard block ansatz H·c₂ + K·c₃.
fn heterotic_equations(f: &IntMatrix) -> (Vec<Equation>, Vec<(usize, usize)>) {
    let dim = f.dim();
    let d = f.transpose().mul(f).sub(&f.mul(&f.transpose()));
    let (positions, index) = unknown_positions(dim);
    let n_unknowns = positions.len();
    let mut eqs = Vec::new();
    let rat = |v: &BigInt| Rational::from_integer(v.clone());
    // [D, g] = -2f
    for a in 1..=dim {
        for b in 1..=dim {
            let mut coeffs = vec![Rational::zero(); n_unknowns];
            for k in 1..=dim {
                if let Some(i) = index[(k - 1) * dim + (b - 1)] {
                    coeffs[i] += rat(d.at(a, k));
                }
                if let Some(i) = index[(a - 1) * dim + (k - 1)] {
                    coeffs[i] -= rat(d.at(k, b));
                }
            }
            eqs.push(Equation { coeffs, rhs: rat(f.at(a, b)) * Rational::from_integer((-2).into()) });
        }
    }
    // [D, g+] = 2f+
    for a in 1..=dim {
        for b in 1..=dim {
            let mut coeffs = vec![Rational::zero(); n_unknowns];
            for k in 1..=dim {
                // g+[k][b] = g[b][k] and g+[a][k] = g[k][a]
                if let Some(i) = index[(b - 1) * dim + (k - 1)] {
                    coeffs[i] += rat(d.at(a, k));
                }
                if let Some(i) = index[(k - 1) * dim + (a - 1)] {
                    coeffs[i] -= rat(d.at(k, b));
                }
            }
            eqs.push(Equation { coeffs, rhs: rat(f.at(b, a)) * Rational::from_integer(2.into()) });
        }
    }
    (eqs, positions)
}

fn symmetry_equations(sym: Symmetry, dim: usize, n_unknowns: usize, index: &[Option<usize>]) -> Vec<Equation> {
    let n = dim / 2;
    let mut eqs = Vec::new();
    let mut pair = |p1: (usize, usize), sign1: i64, p2: (usize, usize), sign2: i64| {
        let i1 = index[(p1.0 - 1) * dim + (p1.1 - 1)];
        let i2 = index[(p2.0 - 1) * dim + (p2.1 - 1)];
        if i1.is_none() && i2.is_none() {
            return;
        }
        let mut coeffs = vec![Rational::zero(); n_unknowns];
        if let Some(i) = i1 {
            coeffs[i] += Rational::from_integer(sign1.into());
        }
        if let Some(i) = i2 {
            coeffs[i] += Rational::from_integer(sign2.into());
        }
        eqs.push(Equation { coeffs, rhs: Rational::zero() });
    };
    match sym {
        Symmetry::None => {}
        Symmetry::S1 => {
            for i in 1..=n {
                for j in 1..=n {
                    // LL = -UR transposed
                    pair((n + i, j), 1, (j, n + i), 1);
                    // LR = UL
                    pair((n + i, n + j), 1, (i, j), -1);
                }
            }
        }
        Symmetry::S2 => {
            for i in 1..=n {
                for j in 1..=n {
                    pair((n + i, j), 1, (j, n + i), 1);
                    // LR = UL reflected in the secondary diagonal
                    pair((n + i, n + j), 1, (n + 1 - j, n + 1 - i), -1);
                }
            }
        }
        Symmetry::S3 => {
            for i in 1..=n {
                for j in 1..=n {
                    pair((n + i, n + j), 1, (n + 1 - j, n + 1 - i), -1);
                }
            }
            // zero area: lower-left subquadrant of UL
            for i in n / 2 + 1..=n {
                for j in 1..=n / 2 {
                    pair((i, j), 1, (i, j), 0);
                }
            }
        }
    }
    eqs
}

/// Solves the commutator system for g under the block ansatz plus the chosen
/// symmetry, then solves the normalizing-factor system at the
/// zero-instantiated g. An empty factor set comes back as None.
pub fn solve_heterotic(p: u64, sym: Symmetry) -> Result<(ParametricMatrix, Option<NormalizingFactors>)> {
    let f = build_member(RootKind::F, p)?;
    solve_heterotic_for(&f.to_int_matrix(), p, sym)
}

/// Same solve against an explicit (possibly mod-8 reduced) member.
pub fn solve_heterotic_for(
    f: &IntMatrix,
    p: u64,
    sym: Symmetry,
) -> Result<(ParametricMatrix, Option<NormalizingFactors>)> {
    let dim = f.dim();
    let (mut eqs, positions) = heterotic_equations(f);
    let (_, index) = unknown_positions(dim);
    eqs.extend(symmetry_equations(sym, dim, positions.len(), &index));
    let solved = match solve_parametric(&eqs, positions.len(), false) {
        Solution::Solved { exprs, free_cols } => (exprs, free_cols),
        Solution::Inconsistent => {
            return Err(Error::SolverInconsistent(format!(
                "no g of the block form satisfies the commutator system at p={p} under {sym}"
            )))
        }
    };
    let (exprs, free_cols) = solved;
    let mut entries = vec![Affine::zero(); dim * dim];
    for (i, &(a, b)) in positions.iter().enumerate() {
        entries[(a - 1) * dim + (b - 1)] = exprs[i].clone();
    }
    let g = ParametricMatrix { dim, paraorder: p, entries, nparams: free_cols.len() };
    let factors = solve_factors(f, &g.at_zero(), p)?;
    Ok((g, factors))
}

/// Solves χ·Σ[f_υ⁺,f_υ] + σ·Σ(..) + τ·Σ(..) + γ·Σ[g_υ,g_υ⁺] = spin for
/// the normalizing factors given a numeric g. Free parameters are named
/// from the γ end, matching the g^(3) display.
pub fn solve_factors(
    f: &IntMatrix,
    g: &OperatorMatrix,
    p: u64,
) -> Result<Option<NormalizingFactors>> {
    solve_factors_with(f, g, p, false)
}

/// Factor solve with optional mod-8 reduction of the χ-term diagonals.
pub fn solve_factors_with(
    f: &IntMatrix,
    g: &OperatorMatrix,
    p: u64,
    reduce: bool,
) -> Result<Option<NormalizingFactors>> {
    let fop = int_to_operator(f, p);
    let fs = decompose(&fop)?;
    let gs = decompose(g)?;
    let mut a = OperatorMatrix::zero(p);
    let mut b = OperatorMatrix::zero(p);
    let mut c = OperatorMatrix::zero(p);
    let mut d2 = OperatorMatrix::zero(p);
    for (fu, gu) in fs.iter().zip(&gs) {
        a = a.add(&reduced_commutator(fu, reduce)?)?;
        b = b
            .add(&fu.adjoint().commutator(gu)?)?
            .add(&gu.adjoint().commutator(fu)?)?;
        c = c
            .add(&fu.commutator(gu)?)?
            .add(&gu.adjoint().commutator(&fu.adjoint())?)?;
        d2 = d2.add(&gu.commutator(&gu.adjoint())?)?;
    }
    let spin = spin_diagonal(p);
    let dim = fop.dim();
    let mut eqs = Vec::new();
    for r in 1..=dim {
        for col in 1..=dim {
            let coeff = |m: &OperatorMatrix| -> Result<Rational> {
                m.entry(r, col)
                    .as_rational()
                    .ok_or_else(|| Error::SolverInconsistent("irrational factor coefficient".into()))
            };
            eqs.push(Equation {
                coeffs: vec![coeff(&a)?, coeff(&b)?, coeff(&c)?, coeff(&d2)?],
                rhs: coeff(&spin)?,
            });
        }
    }
    match solve_parametric(&eqs, 4, true) {
        Solution::Solved { exprs, .. } => Ok(Some(NormalizingFactors {
            chi: exprs[0].clone(),
            sigma: exprs[1].clone(),
            tau: exprs[2].clone(),
            gamma: exprs[3].clone(),
        })),
        Solution::Inconsistent => Ok(None),
    }
}

fn int_to_operator(m: &IntMatrix, p: u64) -> OperatorMatrix {
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

/// Residual of [[f⁺,f], g] + 2f, checked identically in the parameters
/// of g (every affine coefficient must vanish).
pub fn verify_commutator_identity(f: &IntMatrix, g: &ParametricMatrix) -> Report {
    let mut report = Report::new("heterotic commutator identity");
    let dim = f.dim();
    let d = f.transpose().mul(f).sub(&f.mul(&f.transpose()));
    let mut ok = true;
    let mut first_bad = None;
    for a in 1..=dim {
        for b in 1..=dim {
            let mut acc = Affine::constant(Rational::from_integer(f.at(a, b) * 2));
            for k in 1..=dim {
                acc = acc.add(&g.entry(k, b).scale(&Rational::from_integer(d.at(a, k).clone())));
                acc = acc.sub(&g.entry(a, k).scale(&Rational::from_integer(d.at(k, b).clone())));
            }
            if !acc.is_zero() {
                ok = false;
                first_bad.get_or_insert((a, b));
            }
        }
    }
    report.check(
        "[[f+,f],g] = -2f identically in the parameters",
        ok,
        first_bad.map(|p| format!("first residual at {p:?}")).unwrap_or_default(),
    );
    report
}

/// Checks the normalization identity for fixed numeric factors. With
/// `reduce` set, the diagonal products inside the χ-term are reduced
/// mod 8 first, the same semantics that extend the plain algebra past
/// p = 7.
pub fn verify_factor_identity(
    f: &IntMatrix,
    g: &OperatorMatrix,
    p: u64,
    factors: &NormalizingFactors,
    values: &[Rational],
    reduce: bool,
) -> Result<Report> {
    let mut report = Report::new("heterotic normalization identity");
    let fop = int_to_operator(f, p);
    let fs = decompose(&fop)?;
    let gs = decompose(g)?;
    let chi = factors.chi.eval(values);
    let sigma = factors.sigma.eval(values);
    let tau = factors.tau.eval(values);
    let gamma = factors.gamma.eval(values);
    let mut total = OperatorMatrix::zero(p);
    for (fu, gu) in fs.iter().zip(&gs) {
        let chi_core = reduced_commutator(fu, reduce)?;
        let term = chi_core
            .scale(&chi)
            .add(&fu.adjoint().commutator(gu)?.add(&gu.adjoint().commutator(fu)?)?.scale(&sigma))?
            .add(&fu.commutator(gu)?.add(&gu.adjoint().commutator(&fu.adjoint())?)?.scale(&tau))?
            .add(&gu.commutator(&gu.adjoint())?.scale(&gamma))?;
        total = total.add(&term)?;
    }
    report.check_positions(
        "chi/sigma/tau/gamma sum = spin diagonal",
        total.diff_positions(&spin_diagonal(p), 10),
    );
    Ok(report)
}

/// [f_υ⁺, f_υ], optionally with both diagonal products reduced mod 8.
fn reduced_commutator(fu: &OperatorMatrix, reduce: bool) -> Result<OperatorMatrix> {
    let up = fu.adjoint().mat_mul(fu)?;
    let down = fu.mat_mul(&fu.adjoint())?;
    if reduce {
        Ok(reduce_diagonal_mod8(&up)?.sub(&reduce_diagonal_mod8(&down)?)?)
    } else {
        up.sub(&down)
    }
}

/// The heterotic relations with f replaced by its mod-8 reduced form f°
/// (coefficients reduced, signs kept) from p = 15 on. The g-system is
/// solved under the reflective symmetry that yields the standard factor
/// set at p = 7; the standard set is attempted first (with the diagonal
/// products of the χ-term reduced mod 8, matching the plain algebra's
/// extension), then the factor system is re-solved. The symmetry-free
/// outcome is reported alongside.
pub fn verify_mod8_heterotic(p: u64) -> Result<Report> {
    let mut report = Report::new(format!("mod-8 heterotic p={p}"));
    let t = build_member(RootKind::F, p)?;
    let reduce = p >= 15;
    let f_eff = if reduce {
        t.to_int_matrix().mod8_signed()
    } else {
        // f° = f below 15
        t.to_int_matrix()
    };
    match solve_heterotic_for(&f_eff, p, Symmetry::S2) {
        Err(Error::SolverInconsistent(msg)) => {
            report.check("g exists under the reflective symmetry", false, msg);
        }
        Err(e) => return Err(e),
        Ok((g, _)) => {
            report.merge(verify_commutator_identity(&f_eff, &g));
            let g0 = g.at_zero();
            let standard = NormalizingFactors::standard();
            let std_report = verify_factor_identity(&f_eff, &g0, p, &standard, &[], reduce)?;
            if std_report.passed() {
                report.check("standard factor set {1, -1/4, 1/4, 0} holds", true, "");
            } else {
                report.check("standard factor set {1, -1/4, 1/4, 0} holds", false, "re-solving");
                match solve_factors_with(&f_eff, &g0, p, reduce)? {
                    Some(fs) => {
                        let zeros = vec![Rational::zero(); 8];
                        let re = verify_factor_identity(&f_eff, &g0, p, &fs, &zeros, reduce)?;
                        report.check(
                            "re-solved factor set verifies",
                            re.passed(),
                            format!(
                                "chi={}, sigma={}, tau={}, gamma={}",
                                fs.chi, fs.sigma, fs.tau, fs.gamma
                            ),
                        );
                    }
                    None => report.check("re-solved factor set", false, "factor system empty"),
                }
            }
        }
    }
    // the symmetry-free route, parameters set to zero
    match solve_heterotic_for(&f_eff, p, Symmetry::None) {
        Ok((g, factors)) => {
            let outcome = match factors {
                Some(fs) => format!("chi={}, sigma={}, tau={}, gamma={}", fs.chi, fs.sigma, fs.tau, fs.gamma),
                None => "{}".into(),
            };
            report.check(
                format!("symmetry-free solve has {} parameters; factor set", g.num_params()),
                true,
                outcome,
            );
        }
        Err(Error::SolverInconsistent(msg)) => report.check("symmetry-free solve", false, msg),
        Err(e) => return Err(e),
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootseq::initial_operator;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn permutation_family() {
        // Table row υ=3: 14+23+32+41+58+67+76+85
        let expect = [4, 3, 2, 1, 8, 7, 6, 5];
        for (mu, &s) in expect.iter().enumerate() {
            assert_eq!(index_permutation(3, mu + 1), s);
        }
        // s₀ is the identity; the family is an involution family
        for mu in 1..=8 {
            assert_eq!(index_permutation(0, mu), mu);
            for u in 0..8 {
                assert_eq!(index_permutation(u, index_permutation(u, mu)), mu);
            }
        }
    }

    #[test]
    fn decompose_f3() {
        let f3 = build_member(RootKind::F, 3).unwrap().to_operator_matrix();
        let parts = decompose(&f3).unwrap();
        assert_eq!(parts.len(), 2);
        // f₀ carries the diagonal f^(1) blocks
        let f1 = initial_operator();
        assert_eq!(*parts[0].entry(2, 1), *f1.entry(2, 1));
        assert_eq!(*parts[0].entry(4, 3), *f1.entry(2, 1));
        assert!(parts[0].entry(3, 2).is_zero());
        // f₁ carries the (2,1) block c₃
        assert_eq!(*parts[1].entry(3, 2), ExactScalar::from_integer(1));
        assert_eq!(*parts[1].entry(4, 1), ExactScalar::from_integer(-1));
        // partition of supports
        assert!(verify_support_partition(&f3).unwrap().passed());
    }

    #[test]
    fn f_algebra_exact_small_orders() {
        assert!(verify_f_algebra(3).unwrap().passed());
        assert!(verify_f_algebra(7).unwrap().passed());
    }

    #[test]
    fn f_algebra_fails_unreduced_at_15() {
        let f = build_member(RootKind::F, 15).unwrap().to_operator_matrix();
        assert!(!f_algebra_report(&f, false).unwrap().passed());
        assert!(f_algebra_report(&f, true).unwrap().passed());
    }

    #[test]
    fn spin_arithmetic_as_sums_of_linear_terms() {
        // at p=7 the f₀ piece contributes ±1/2 and the rest integers,
        // summing to 7/2, 5/2, ...
        let f = build_member(RootKind::F, 7).unwrap().to_operator_matrix();
        let parts = decompose(&f).unwrap();
        let half = rat(1, 2);
        let c0 = parts[0].adjoint().commutator(&parts[0]).unwrap().scale(&half);
        assert_eq!(c0.entry(1, 1).as_rational().unwrap(), rat(1, 2));
        assert_eq!(c0.entry(2, 2).as_rational().unwrap(), rat(-1, 2));
        let mut rest = OperatorMatrix::zero(7);
        for part in parts.iter().skip(1) {
            rest = rest.add(&part.adjoint().commutator(part).unwrap()).unwrap();
        }
        assert_eq!(rest.entry(1, 1).as_rational().unwrap(), rat(3, 1));
        assert_eq!(rest.entry(2, 2).as_rational().unwrap(), rat(3, 1));
        assert_eq!(
            c0.add(&rest).unwrap().entry(1, 1).as_rational().unwrap(),
            rat(7, 2)
        );
    }

    #[test]
    fn heterotic_g3_unique() {
        let (g, factors) = solve_heterotic(3, Symmetry::None).unwrap();
        assert_eq!(g.num_params(), 0);
        let g0 = g.at_zero();
        let expect = OperatorMatrix::from_rows(
            3,
            vec![
                vec![
                    ExactScalar::zero(),
                    ExactScalar::one(),
                    ExactScalar::zero(),
                    ExactScalar::from_rational(rat(1, 2)),
                ],
                vec![
                    ExactScalar::zero(),
                    ExactScalar::zero(),
                    ExactScalar::from_rational(rat(-3, 2)),
                    ExactScalar::zero(),
                ],
                vec![
                    ExactScalar::zero(),
                    ExactScalar::from_rational(rat(3, 2)),
                    ExactScalar::zero(),
                    ExactScalar::one(),
                ],
                vec![
                    ExactScalar::from_rational(rat(-1, 2)),
                    ExactScalar::zero(),
                    ExactScalar::zero(),
                    ExactScalar::zero(),
                ],
            ],
        );
        assert_eq!(g0, expect);
        // χ = (−2r₁ + 4r₂ + 2)/3, σ = (1 − 2r₁ − 10r₂)/2, τ = r₂, γ = r₁
        let f = factors.expect("parametric factor set");
        assert_eq!(f.gamma, Affine::param(0));
        assert_eq!(f.tau, Affine::param(1));
        let chi_expect = Affine::constant(rat(2, 3))
            .add(&Affine::param(0).scale(&rat(-2, 3)))
            .add(&Affine::param(1).scale(&rat(4, 3)));
        assert_eq!(f.chi, chi_expect);
        let sigma_expect = Affine::constant(rat(1, 6))
            .add(&Affine::param(0).scale(&rat(1, 3)))
            .add(&Affine::param(1).scale(&rat(-5, 3)));
        assert_eq!(f.sigma, sigma_expect);
        // at r₁ = 0, r₂ = 1/4 the family meets the standard factor set
        // shared with p = 7: {1, -1/4, 1/4, 0}
        let vals = [rat(0, 1), rat(1, 4)];
        assert_eq!(f.chi.eval(&vals), rat(1, 1));
        assert_eq!(f.sigma.eval(&vals), rat(-1, 4));
        // the whole family satisfies the normalization identity, checked
        // away from the origin
        let off = [rat(1, 1), rat(-2, 3)];
        let fint = build_member(RootKind::F, 3).unwrap().to_int_matrix();
        assert!(verify_factor_identity(&fint, &g0, 3, &f, &off, false).unwrap().passed());
    }

    #[test]
    fn heterotic_g7_four_free_parameters() {
        let (g, factors) = solve_heterotic(7, Symmetry::None).unwrap();
        assert_eq!(g.num_params(), 4);
        // the commutator identity holds for every parameter choice
        let f = build_member(RootKind::F, 7).unwrap().to_int_matrix();
        assert!(verify_commutator_identity(&f, &g).passed());
        // setting all parameters to zero only results in {}
        assert!(factors.is_none());
    }

    fn check_variant(
        sym: Symmetry,
        expect_params: usize,
        at: &[Rational],
        expect_rows: &[[(i64, i64); 8]; 8],
    ) -> NormalizingFactors {
        let (g, factors) = solve_heterotic(7, sym).unwrap();
        assert_eq!(g.num_params(), expect_params, "parameter count under {sym}");
        let g0 = g.instantiate(at);
        for (r, row) in expect_rows.iter().enumerate() {
            for (c, &(num, den)) in row.iter().enumerate() {
                assert_eq!(
                    g0.entry(r + 1, c + 1).as_rational().unwrap(),
                    rat(num, den),
                    "entry ({},{})",
                    r + 1,
                    c + 1
                );
            }
        }
        factors.expect("factor set")
    }

    #[test]
    fn heterotic_g7_variant_1() {
        let rows: [[(i64, i64); 8]; 8] = [
            [(0, 1), (5, 8), (0, 1), (2, 5), (0, 1), (9, 40), (0, 1), (1, 10)],
            [(3, 8), (0, 1), (-1, 4), (0, 1), (-1, 8), (0, 1), (1, 4), (0, 1)],
            [(0, 1), (1, 4), (0, 1), (5, 8), (0, 1), (9, 20), (0, 1), (9, 40)],
            [(-2, 5), (0, 1), (3, 8), (0, 1), (-1, 5), (0, 1), (-1, 8), (0, 1)],
            [(0, 1), (1, 8), (0, 1), (1, 5), (0, 1), (5, 8), (0, 1), (2, 5)],
            [(-9, 40), (0, 1), (-9, 20), (0, 1), (3, 8), (0, 1), (-1, 4), (0, 1)],
            [(0, 1), (-1, 4), (0, 1), (1, 8), (0, 1), (1, 4), (0, 1), (5, 8)],
            [(-1, 10), (0, 1), (-9, 40), (0, 1), (-2, 5), (0, 1), (3, 8), (0, 1)],
        ];
        let f = check_variant(Symmetry::S1, 0, &[], &rows);
        // χ = 1, σ = −(r₁+2)/8, τ = (r₁+2)/8, γ = r₁
        assert_eq!(f.chi, Affine::from_i64(1));
        assert_eq!(f.gamma, Affine::param(0));
        let tau_expect = Affine::constant(rat(1, 4)).add(&Affine::param(0).scale(&rat(1, 8)));
        assert_eq!(f.tau, tau_expect);
        assert_eq!(f.sigma, tau_expect.scale(&rat(-1, 1)));
        // r₁ = 0 conforms to the standard set: σ = −1/4
        assert_eq!(f.sigma.eval(&[rat(0, 1)]), rat(-1, 4));
    }

    #[test]
    fn heterotic_g7_variant_2() {
        let rows: [[(i64, i64); 8]; 8] = [
            [(0, 1), (1, 24), (0, 1), (-1, 60), (0, 1), (-1, 40), (0, 1), (1, 60)],
            [(23, 24), (0, 1), (0, 1), (0, 1), (-5, 24), (0, 1), (-1, 6), (0, 1)],
            [(0, 1), (0, 1), (0, 1), (3, 8), (0, 1), (1, 5), (0, 1), (-1, 40)],
            [(1, 60), (0, 1), (5, 8), (0, 1), (-7, 60), (0, 1), (-5, 24), (0, 1)],
            [(0, 1), (5, 24), (0, 1), (7, 60), (0, 1), (3, 8), (0, 1), (-1, 60)],
            [(1, 40), (0, 1), (-1, 5), (0, 1), (5, 8), (0, 1), (0, 1), (0, 1)],
            [(0, 1), (1, 6), (0, 1), (5, 24), (0, 1), (0, 1), (0, 1), (1, 24)],
            [(-1, 60), (0, 1), (1, 40), (0, 1), (1, 60), (0, 1), (23, 24), (0, 1)],
        ];
        // the reflective pairing leaves one direction open; the printed
        // matrix is the member at r₁ = 23/24, and the factor set is the
        // same for every member
        let f = check_variant(Symmetry::S2, 1, &[rat(23, 24)], &rows);
        assert_eq!(f.chi, Affine::from_i64(1));
        assert_eq!(f.sigma, Affine::constant(rat(-1, 4)));
        assert_eq!(f.tau, Affine::constant(rat(1, 4)));
        assert_eq!(f.gamma, Affine::zero());
    }

    #[test]
    fn heterotic_g7_variant_3() {
        let rows: [[(i64, i64); 8]; 8] = [
            [(0, 1), (1, 24), (0, 1), (-1, 60), (0, 1), (-1, 40), (0, 1), (1, 60)],
            [(187, 200), (0, 1), (-1, 100), (0, 1), (-41, 200), (0, 1), (-3, 20), (0, 1)],
            [(0, 1), (0, 1), (0, 1), (3, 8), (0, 1), (1, 5), (0, 1), (-1, 40)],
            [(0, 1), (0, 1), (123, 200), (0, 1), (-3, 25), (0, 1), (-41, 200), (0, 1)],
            [(0, 1), (5, 24), (0, 1), (7, 60), (0, 1), (3, 8), (0, 1), (-1, 60)],
            [(3, 200), (0, 1), (-21, 100), (0, 1), (123, 200), (0, 1), (-1, 100), (0, 1)],
            [(0, 1), (1, 6), (0, 1), (5, 24), (0, 1), (0, 1), (0, 1), (1, 24)],
            [(-1, 50), (0, 1), (3, 200), (0, 1), (0, 1), (0, 1), (187, 200), (0, 1)],
        ];
        let f = check_variant(Symmetry::S3, 0, &[], &rows);
        assert_eq!(f.chi, Affine::constant(rat(14183539, 14137018)));
        assert_eq!(f.sigma, Affine::constant(rat(-1737725, 7068509)));
        assert_eq!(f.tau, Affine::constant(rat(1738225, 7068509)));
        assert_eq!(f.gamma, Affine::constant(rat(147500, 7068509)));
    }

    #[test]
    fn mod8_heterotic_small() {
        // below 15 the reduction is the identity and this is the plain check
        let rep = verify_mod8_heterotic(3).unwrap();
        assert!(rep.passed(), "{rep}");
        // the symmetry-free route at p=7 reports an empty factor set
        let rep7 = verify_mod8_heterotic(7).unwrap();
        let note = rep7.checks.iter().find(|c| c.label.contains("symmetry-free")).unwrap();
        assert_eq!(note.detail, "{}");
    }

    #[test]
    #[ignore = "expensive exact elimination; run with --ignored"]
    fn mod8_heterotic_p15_standard_set() {
        let rep = verify_mod8_heterotic(15).unwrap();
        assert!(
            rep.checks.iter().any(|c| c.pass && c.label.contains("standard factor set")),
            "{rep}"
        );
    }
}
