//! The difference calculus: naive and oblique coefficient differences,
//! interordinal differences of Green's squares, parafermial expressions,
//! kissing-number representations, and the synoptical identities that
//! combine the root-f and root-h lineages.

use crate::blockstruct::{navigate, navigate_str, representatives, Quadrant};
use crate::error::{Error, Result};
use crate::numbers::catalan;
use crate::report::Report;
use crate::rootseq::{build_member, CoeffTriangle, RootKind};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use std::collections::BTreeSet;
use std::fmt;

/// The reference kissing numbers L_1..L_16 for densest sphere packing.
pub const KISSING: [u64; 16] = [
    2, 6, 12, 24, 40, 72, 126, 240, 272, 336, 438, 648, 906, 1422, 2340, 4320,
];

/// Bounds in place of exact values where only those are known
/// (dimensions 5, 6, 7); used when emitting the order-comparison table.
pub fn kissing_display(n: usize) -> String {
    match n {
        5 => "(40,44)".into(),
        6 => "(72,78)".into(),
        7 => "(126,134)".into(),
        _ => KISSING[n - 1].to_string(),
    }
}

/// Interordinal difference of Green's squares:
/// ϑ_β^(q,s) = β(s−β+1) − β(q−β+1) = β(s−q).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThetaTerm {
    pub beta: u64,
    pub q: u64,
    pub s: u64,
}

impl ThetaTerm {
    pub fn new(beta: u64, q: u64, s: u64) -> Result<Self> {
        if !crate::exact::is_paraorder(q) || !crate::exact::is_paraorder(s) || s <= q || beta == 0 || beta > q
        {
            return Err(Error::OutOfRange(format!("theta term ({beta},{q},{s})")));
        }
        Ok(ThetaTerm { beta, q, s })
    }

    pub fn value(&self) -> u64 {
        self.beta * (self.s - self.q)
    }

    /// The domain tied to dimension n: q = 2^l−1 with 2^l ≤ 2n and
    /// s = 2^u−1 with 2^u ≤ 32n.
    pub fn domain_ok(&self, n: u64) -> bool {
        (self.q + 1) <= 2 * n && (self.s + 1) <= 32 * n
    }
}

impl fmt::Display for ThetaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "theta_{}^({},{})", self.beta, self.q, self.s)
    }
}

/// An integer combination of ϑ terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParafermialExpr {
    pub terms: Vec<(i64, ThetaTerm)>,
}

impl ParafermialExpr {
    pub fn value(&self) -> i64 {
        self.terms.iter().map(|(c, t)| c * t.value() as i64).sum()
    }

    pub fn order(&self) -> usize {
        self.terms.len().min(2)
    }
}

impl fmt::Display for ParafermialExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, t)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", if *c < 0 { "-" } else { "+" })?;
            } else if *c < 0 {
                write!(f, "-")?;
            }
            let mag = c.abs();
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Sorted distinct representative values of the root-f member at p.
pub fn g_values(p: u64) -> Result<Vec<BigInt>> {
    Ok(representatives(&build_member(RootKind::F, p)?)?.values)
}

/// Sorted distinct representative values of the root-h member at p.
pub fn j_values(p: u64) -> Result<Vec<BigInt>> {
    Ok(representatives(&build_member(RootKind::H, p)?)?.values)
}

/// Successive differences over a sorted sequence, 1-based when indexed.
pub fn naive_differences(values: &[BigInt]) -> Vec<BigInt> {
    values.windows(2).map(|w| &w[1] - &w[0]).collect()
}

/// Cell classes of a b×b subsubquadrant under its secondary symmetry,
/// one representative per orbit, upper anti-diagonal side first.
fn block_cell_classes(b: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    let mut cells: Vec<(usize, usize)> = (1..=b)
        .flat_map(|i| (1..=b).map(move |j| (i, j)))
        .collect();
    cells.sort_by_key(|&(i, j)| (-(j as i64 - i as i64), i));
    for (i, j) in cells {
        let mirror = (b + 1 - j, b + 1 - i);
        if seen.contains(&(i, j)) || seen.contains(&mirror) {
            continue;
        }
        seen.insert((i, j));
        out.push((i, j));
    }
    out
}

/// Oblique differences: subsubquadrantwise subtraction along the tilted
/// upper-right-to-lower-left path. Each configuration subtracts the
/// right-hand block from the left-hand one, and from the block below it
/// when that differs from the left-hand block.
pub fn oblique_differences(t: &CoeffTriangle) -> Result<Vec<BigInt>> {
    if t.kind() == RootKind::D {
        return Err(Error::OutOfRange("oblique differences cover kinds f and h".into()));
    }
    let ll = navigate(&t.as_square(), &[Quadrant::LL])?;
    let s = ll.dim();
    if s < 4 {
        return Err(Error::OutOfRange("oblique differences need p >= 15".into()));
    }
    let b = s / 4; // subsubquadrant side
    let block = |gr: usize, gc: usize| ll.sub_square((gr - 1) * b + 1, (gc - 1) * b + 1, b);
    let classes = block_cell_classes(b);
    let mut out = Vec::new();
    for k in 1..=3usize {
        let left = block(k, 1);
        let right = block(k, 2);
        let below = block(k + 1, 2);
        let below_is_left = below == left;
        for &(i, j) in &classes {
            out.push(left.at(i, j) - right.at(i, j));
            if !below_is_left {
                out.push(below.at(i, j) - right.at(i, j));
            }
        }
    }
    Ok(out)
}

/// Structurally twinned value pairs inside the window (p, p'): the
/// elementwise pairs of the interordinal relation, and of the
/// intraordinal relation at each order. Differences between twins are
/// bookkeeping artifacts of the ordinality relations, not new data.
fn twin_pairs(p: u64, p_up: u64) -> Result<BTreeSet<(BigInt, BigInt)>> {
    let mut twins = BTreeSet::new();
    let mut insert = |a: BigInt, b: BigInt| {
        if a <= b {
            twins.insert((a, b));
        } else {
            twins.insert((b, a));
        }
    };
    let lo = build_member(RootKind::F, p)?;
    let hi = build_member(RootKind::F, p_up)?;
    if p >= 7 {
        let lo_sq = lo.as_square();
        let hi_sq = hi.as_square();
        let a = navigate_str(&lo_sq, "LLLL")?;
        let b = navigate_str(&hi_sq, "LLULUR")?;
        for r in 1..=a.dim() {
            for c in 1..=a.dim() {
                insert(a.at(r, c).clone(), b.at(r, c).clone());
            }
        }
    }
    for t in [&lo, &hi] {
        if t.paraorder() >= 15 {
            let sq = t.as_square();
            let a = navigate_str(&sq, "LLULLL")?;
            let b = navigate_str(&sq, "LLLLUR")?;
            for r in 1..=a.dim() {
                for c in 1..=a.dim() {
                    insert(a.at(r, c).clone(), b.at(r, c).clone());
                }
            }
        }
    }
    Ok(twins)
}

/// Differences dovetailed nondecreasingly over the union of the
/// representative sets of the window (p, p'): consecutive differences of
/// the sorted union, with twin-pair differences left out, sorted.
pub fn merged_window(p: u64, p_up: u64) -> Result<Vec<BigInt>> {
    if p == p_up {
        return Ok(naive_differences(&g_values(p)?));
    }
    if p_up != 2 * p + 1 {
        return Err(Error::OutOfRange(format!("window ({p},{p_up}) is not a carry-bit pair")));
    }
    let union: BTreeSet<BigInt> = g_values(p)?
        .into_iter()
        .chain(g_values(p_up)?)
        .collect();
    let sorted: Vec<BigInt> = union.into_iter().collect();
    let twins = twin_pairs(p, p_up)?;
    let mut diffs: Vec<BigInt> = sorted
        .windows(2)
        .filter(|w| !twins.contains(&(w[0].clone(), w[1].clone())))
        .map(|w| &w[1] - &w[0])
        .collect();
    diffs.sort();
    Ok(diffs)
}

/// Bounds for the deterministic breadth-first parafermial search.
#[derive(Clone, Debug)]
pub struct SearchConstraints {
    /// Coefficient pool (the G_ρ through the relevant order, say).
    pub coeffs: Vec<i64>,
    /// Allowed (q, s) exponent pairs as concrete theta shapes.
    pub shapes: Vec<(u64, u64)>,
    /// β range per term.
    pub beta_max: u64,
    /// Term-count budget.
    pub max_terms: usize,
}

impl SearchConstraints {
    /// Second-order expressions for dimension n within the §5.4 domain:
    /// carry-bit shapes (q, 2q+1) with 2^l ≤ 2n, s up to 2^u ≤ 32n.
    pub fn second_order(n: u64) -> Self {
        let mut shapes = Vec::new();
        let mut q = 1u64;
        while q + 1 <= 2 * n {
            let mut s = 2 * q + 1;
            while s + 1 <= 32 * n {
                shapes.push((q, s));
                s = 2 * s + 1;
            }
            q = 2 * q + 1;
        }
        SearchConstraints { coeffs: vec![1, -1, 2, -2, 3, -3], shapes, beta_max: 9, max_terms: 2 }
    }
}

/// Exact check of a claimed representation.
pub fn verify_parafermial(target: i64, expr: &ParafermialExpr) -> bool {
    expr.value() == target
}

/// Bounded breadth-first search over term-count strata; ties broken by
/// enumeration order (fewest terms, then lexicographic (β, q, s),
/// then coefficient order). Deterministic; exhausted budget gives None.
pub fn search_parafermial(target: i64, constraints: &SearchConstraints) -> Option<ParafermialExpr> {
    let mut atoms = Vec::new();
    for &(q, s) in &constraints.shapes {
        for beta in 1..=constraints.beta_max.min(q) {
            if let Ok(t) = ThetaTerm::new(beta, q, s) {
                atoms.push(t);
            }
        }
    }
    atoms.sort_by_key(|t| (t.beta, t.q, t.s));
    // single terms first
    for t in &atoms {
        for &c in &constraints.coeffs {
            if c * t.value() as i64 == target {
                return Some(ParafermialExpr { terms: vec![(c, *t)] });
            }
        }
    }
    if constraints.max_terms < 2 {
        return None;
    }
    // pairs, then deeper strata
    let mut partials: Vec<Vec<(i64, ThetaTerm)>> = atoms
        .iter()
        .flat_map(|t| constraints.coeffs.iter().map(move |&c| vec![(c, *t)]))
        .collect();
    for _depth in 2..=constraints.max_terms {
        let mut next = Vec::new();
        for partial in &partials {
            let sum: i64 = partial.iter().map(|(c, t)| c * t.value() as i64).sum();
            let last = partial.last().unwrap().1;
            for t in atoms.iter().filter(|t| (t.beta, t.q, t.s) > (last.beta, last.q, last.s)) {
                for &c in &constraints.coeffs {
                    let mut terms = partial.clone();
                    terms.push((c, *t));
                    if sum + c * t.value() as i64 == target {
                        return Some(ParafermialExpr { terms });
                    }
                    next.push(terms);
                }
            }
        }
        partials = next;
    }
    None
}

/// Table of the first sixteen kissing numbers as ϑ terms or second-order
/// parafermial expressions.
pub fn kissing_theta_rows() -> Vec<(usize, Option<ThetaTerm>)> {
    let t = |beta, q, s| Some(ThetaTerm::new(beta, q, s).expect("valid term"));
    vec![
        (1, t(1, 1, 3)),
        (2, t(1, 1, 7)),
        (3, t(3, 3, 7)),
        (4, t(3, 7, 15)),
        (5, t(5, 7, 15)),
        (6, t(3, 7, 31)),
        (7, t(1, 1, 127)),
        (8, t(1, 15, 255)),
        (9, None),
        (10, t(7, 15, 63)),
        (11, None),
        (12, None),
        (13, None),
        (14, None),
        (15, None),
        (16, t(9, 31, 511)),
    ]
}

/// Verifies every stated ϑ entry, the domain constraints, the mod-8
/// β-pattern correspondence of the Corollary, and the conjectured order
/// formula p' = 2^(m + C_⌈1+m/2⌉) − 1 at the powers of two. Second-order
/// rows are searched within budget and reported.
pub fn kissing_representations() -> Result<Report> {
    let mut report = Report::new("kissing number representations");
    let rows = kissing_theta_rows();
    let mut betas = Vec::new();
    for (n, term) in &rows {
        let target = KISSING[n - 1];
        match term {
            Some(t) => {
                report.check(
                    format!("L_{n} = {t}"),
                    t.value() == target && t.domain_ok(*n as u64),
                    format!("value {}", t.value()),
                );
                betas.push(t.beta);
            }
            None => {
                let found = search_parafermial(target as i64, &SearchConstraints::second_order(*n as u64));
                report.check(
                    format!("L_{n} = {target}: 2nd-order search"),
                    true,
                    match found {
                        Some(e) => format!("found {e}"),
                        None => "no expression within budget (reported, not asserted)".into(),
                    },
                );
            }
        }
    }
    // β indices pairwise mod 8 against the Λ patterns
    let pairs: Vec<(u64, u64)> = betas.chunks(2).map(|c| (c[0] % 8, c[1] % 8)).collect();
    let allowed = [(1, 1), (3, 3), (5, 3), (7, 1)];
    report.check(
        "beta pairs mod 8 match a lambda pattern",
        pairs.iter().all(|p| allowed.contains(p)),
        format!("{pairs:?}"),
    );
    // conjectured order formula at n = 2, 4, 8, 16
    for (m, n) in [(1u32, 2usize), (2, 4), (3, 8), (4, 16)] {
        let c_idx = 1 + (m + 1) / 2; // ⌈1 + m/2⌉
        let c = catalan(c_idx as u64).to_u64().expect("small catalan");
        let predicted = (1u64 << (m as u64 + c)) - 1;
        let s = rows[n - 1].1.expect("theta row").s;
        report.check(
            format!("order formula at n={n}: p' = 2^(m+C) - 1 = {predicted}"),
            predicted == s,
            format!("s = {s}"),
        );
    }
    Ok(report)
}

/// The precomputed difference sequences the synoptical identities draw
/// from, 1-based lookups.
pub struct DifferenceTables {
    pub dg15: Vec<BigInt>,
    pub dg31: Vec<BigInt>,
    pub dj7: Vec<BigInt>,
    pub dj15: Vec<BigInt>,
    pub dj31: Vec<BigInt>,
    pub og15: Vec<BigInt>,
    pub og31: Vec<BigInt>,
    pub oj15: Vec<BigInt>,
    pub oj31: Vec<BigInt>,
}

impl DifferenceTables {
    pub fn build() -> Result<Self> {
        Ok(DifferenceTables {
            dg15: naive_differences(&g_values(15)?),
            dg31: naive_differences(&g_values(31)?),
            dj7: naive_differences(&j_values(7)?),
            dj15: naive_differences(&j_values(15)?),
            dj31: naive_differences(&j_values(31)?),
            og15: oblique_differences(&build_member(RootKind::F, 15)?)?,
            og31: oblique_differences(&build_member(RootKind::F, 31)?)?,
            oj15: oblique_differences(&build_member(RootKind::H, 15)?)?,
            oj31: oblique_differences(&build_member(RootKind::H, 31)?)?,
        })
    }
}

/// One synoptical identity: L_n = lhs ± rhs by 1-based sequence lookup.
pub struct SynopticalIdentity {
    pub n: usize,
    pub lhs: (&'static str, usize),
    pub sign: i64,
    pub rhs: (&'static str, usize),
}

/// The stated binary synoptical expressions for L₁..L₉ and L₁₃. Indices
/// refer to the faithful sequences (the naive ΔJ^(31) here keeps all 17
/// members, which shifts the two lookups the print based on its
/// 15-member list).
pub fn synoptical_identities() -> Vec<SynopticalIdentity> {
    let id = |n, lhs, sign, rhs| SynopticalIdentity { n, lhs, sign, rhs };
    vec![
        id(1, ("dj15", 3), -1, ("og15", 3)),
        id(2, ("dj7", 1), 1, ("dg15", 1)),
        id(3, ("dg31", 7), -1, ("dj31", 8)),
        id(4, ("dg31", 7), -1, ("dj15", 3)),
        id(5, ("dj15", 1), 1, ("dg15", 1)),
        id(6, ("dg31", 9), -1, ("dj15", 3)),
        id(7, ("dg15", 5), 1, ("dj31", 6)),
        id(8, ("og31", 1), 1, ("oj31", 1)),
        id(9, ("og31", 10), -1, ("oj31", 8)),
        id(13, ("oj31", 4), -1, ("dg31", 6)),
    ]
}

pub fn lookup<'a>(tables: &'a DifferenceTables, name: &str, index: usize) -> &'a BigInt {
    let seq = match name {
        "dg15" => &tables.dg15,
        "dg31" => &tables.dg31,
        "dj7" => &tables.dj7,
        "dj15" => &tables.dj15,
        "dj31" => &tables.dj31,
        "og15" => &tables.og15,
        "og31" => &tables.og31,
        "oj15" => &tables.oj15,
        "oj31" => &tables.oj31,
        _ => panic!("unknown sequence {name}"),
    };
    &seq[index - 1]
}

/// Verifies every stated synoptical identity by index lookup.
pub fn synoptical_check() -> Result<Report> {
    let mut report = Report::new("synoptical difference expressions");
    let tables = DifferenceTables::build()?;
    for id in synoptical_identities() {
        let lhs = lookup(&tables, id.lhs.0, id.lhs.1);
        let rhs = lookup(&tables, id.rhs.0, id.rhs.1);
        let value = lhs + rhs * BigInt::from(id.sign);
        let target = BigInt::from(KISSING[id.n - 1]);
        report.check(
            format!(
                "L_{} = {}[{}] {} {}[{}]",
                id.n,
                id.lhs.0,
                id.lhs.1,
                if id.sign < 0 { "-" } else { "+" },
                id.rhs.0,
                id.rhs.1
            ),
            value == target,
            format!("{lhs} {} {rhs} = {value}", if id.sign < 0 { "-" } else { "+" }),
        );
    }
    Ok(report)
}

/// Dimension indices i = 2^m + λ₁, j = i + λ₂, k = j + λ₃, l = k + λ₄,
/// plus whether they span one or two 8-periods.
pub fn allocation_solve(m: u32, lambdas: [u64; 4]) -> ((u64, u64, u64, u64), usize) {
    let base = 1u64 << m;
    let i = base + lambdas[0];
    let j = i + lambdas[1];
    let k = j + lambdas[2];
    let l = k + lambdas[3];
    let span = if l <= base + 8 { 1 } else { 2 };
    ((i, j, k, l), span)
}

/// The full worked decomposition of ΔG_max^(15,31).
pub fn delta_g_max_expression() -> ParafermialExpr {
    let terms = [
        (41i64, 14u32),
        (113, 13),
        (17, 12),
        (11, 11),
        (5, 9),
        (1, 6),
        (3, 5),
        (1, 4),
    ];
    ParafermialExpr {
        terms: terms
            .into_iter()
            .map(|(g, l)| {
                let q = (1u64 << l) - 1;
                (1i64, ThetaTerm::new(g as u64, q, 2 * q + 1).expect("valid"))
            })
            .collect(),
    }
}

/// Runs the difference suite.
pub fn suite() -> Result<Report> {
    let mut report = Report::new("difference suite");
    let tables = DifferenceTables::build()?;
    report.check(
        "naive G differences nonnegative and oblique G increasing",
        tables.dg15.iter().all(|d| !d.is_negative())
            && tables.og15.windows(2).all(|w| w[0] < w[1])
            && tables.og31.windows(2).all(|w| w[0] < w[1]),
        "",
    );
    let window = merged_window(15, 31)?;
    report.check(
        "merged window (15,31) dovetails",
        window.first().map(|v| v.to_u64()) == Some(Some(2))
            && window.last().map(|v| v.to_u64()) == Some(Some(1692336)),
        format!("{} members", window.len()),
    );
    let expr = delta_g_max_expression();
    report.check(
        "delta G_max decomposition",
        verify_parafermial(1692336, &expr),
        expr.to_string(),
    );
    report.merge(kissing_representations()?);
    report.merge(synoptical_check()?);
    Ok(report)
}
