//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (visible with `--nocapture`). Every tolerance is pinned in the
//! assertions below.

use num_bigint::BigInt;

use parafermi::blockstruct::{
    catalan_symmetry, catalan_traces, check_secondary_symmetry, navigate_str, representatives,
    representative_count_formula,
};
use parafermi::cardioid::{self, contfrac::Mode, real::HighPrecReal};
use parafermi::diffs;
use parafermi::exact::Rational;
use parafermi::falg::{self, linsolve::Affine, Symmetry};
use parafermi::green;
use parafermi::intmat::IntMatrix;
use parafermi::mod8;
use parafermi::primesfact::{self, PrimeIndexer};
use parafermi::rootseq::{build_member, build_triangles, verify_square_relation, RootKind};
use std::time::Instant;

fn bigs(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn done(criterion: u32, started: Instant) {
    println!("criterion {criterion}: pass ({:?})", started.elapsed());
}

#[test]
fn criterion_01_exact_identity_suite() {
    let t0 = Instant::now();
    for p in [1u64, 3, 7, 15, 31] {
        assert!(green::verify_nilpotency_b(p).unwrap().passed(), "Eq 1 at p={p}");
        assert!(green::verify_spin(p).unwrap().passed(), "Eq 3 at p={p}");
        assert!(green::verify_trilinear(p).unwrap().passed(), "Eq 4 at p={p}");
    }
    for p in [1u64, 3, 7, 15] {
        assert!(green::verify_interordinal_b(p).unwrap().passed(), "Eq 6 at p={p}");
    }
    assert!(t0.elapsed().as_secs() < 5, "identity suite exceeded 5 s");
    done(1, t0);
}

#[test]
fn criterion_02_root_sequence_reproduction() {
    let t0 = Instant::now();
    // f^(15) triangle entry-for-entry
    let f15 = build_member(RootKind::F, 15).unwrap();
    let expect_f: [&[i64]; 7] = [
        &[1],
        &[1, 1],
        &[1, 1, 1],
        &[5, 3, 1, 1],
        &[11, 5, 1, 1, 1],
        &[41, 17, 5, 3, 1, 1],
        &[113, 41, 11, 5, 1, 1, 1],
    ];
    for (mu, row) in expect_f.iter().enumerate() {
        for (nu, &v) in row.iter().enumerate() {
            assert_eq!(*f15.coeff(mu + 2, nu + 1), BigInt::from(v), "G[{}][{}]", mu + 2, nu + 1);
        }
    }
    // h^(15) triangle entry-for-entry
    let h15 = build_member(RootKind::H, 15).unwrap();
    let expect_h: [&[i64]; 7] = [
        &[1],
        &[-1, 1],
        &[3, -1, 1],
        &[-5, 1, -1, 1],
        &[15, -5, 3, -1, 1],
        &[-43, 15, -5, 1, -1, 1],
        &[149, -43, 15, -5, 3, -1, 1],
    ];
    for (mu, row) in expect_h.iter().enumerate() {
        for (nu, &v) in row.iter().enumerate() {
            assert_eq!(*h15.coeff(mu + 2, nu + 1), BigInt::from(v), "J[{}][{}]", mu + 2, nu + 1);
        }
    }
    // (x^(p'))² = x^(p) ⊗ 1 exactly for all kinds through p' = 127
    for kind in [RootKind::F, RootKind::D, RootKind::H] {
        let seq = build_triangles(kind, 127).unwrap();
        for pair in seq.windows(2) {
            assert!(
                verify_square_relation(&pair[1], &pair[0]).passed(),
                "square {:?} p'={}",
                kind,
                pair[1].paraorder()
            );
        }
    }
    assert!(t0.elapsed().as_secs() < 60, "root sequences exceeded 60 s");
    done(2, t0);
}

#[test]
fn criterion_03_deep_row_check() {
    let t0 = Instant::now();
    let f63 = build_member(RootKind::F, 63).unwrap();
    // row 17 values; position 3 is 747851 by the unique solve (the
    // printed 747891 fails the square identity and the Catalan trace)
    let row17: [i64; 16] = [
        9694845, 2926323, 747851, 230395, 58791, 18633, 4907, 1635, 429, 155, 43, 19, 5, 3,
        1, 1,
    ];
    for (i, v) in row17.into_iter().enumerate() {
        assert_eq!(*f63.coeff(17, i + 1), BigInt::from(v), "col {}", i + 1);
    }
    let residues: [i64; 16] = [5, 3, 3, 3, 7, 1, 3, 3, 5, 3, 3, 3, 5, 3, 1, 1];
    let red = mod8::reduce_mod8(&f63);
    for (i, v) in residues.into_iter().enumerate() {
        assert_eq!(*red.at(17, i + 1), BigInt::from(v), "residue col {}", i + 1);
    }
    let llulur = navigate_str(&f63.as_square(), "LLULUR").unwrap();
    let expect = IntMatrix::from_rows(&[
        vec![58791, 18633, 4907, 1635],
        vec![189393, 58791, 15299, 4907],
        vec![738035, 227123, 58791, 18633],
        vec![2430515, 738035, 189393, 58791],
    ]);
    assert_eq!(llulur, expect);
    done(3, t0);
}

#[test]
fn criterion_04_table_2_counts() {
    let t0 = Instant::now();
    let seq = build_triangles(RootKind::F, 255).unwrap();
    let expect = [(15u64, 6u64), (31, 18), (63, 62), (127, 242), (255, 982)];
    for (p, t_p) in expect {
        let member = seq.iter().find(|t| t.paraorder() == p).unwrap();
        let reps = representatives(member).unwrap();
        assert_eq!(reps.count() as u64, t_p, "direct count at p={p}");
        assert_eq!(representative_count_formula(p).unwrap(), t_p, "closed form at p={p}");
    }
    assert!(t0.elapsed().as_secs() < 600, "construction exceeded 10 min");
    done(4, t0);
}

#[test]
fn criterion_05_table_3_and_determinants() {
    let t0 = Instant::now();
    let dets = [(3u64, 1i64), (7, 0), (15, 240 * 240), (31, 0)];
    for (p, d) in dets {
        let t = build_member(RootKind::F, p).unwrap();
        assert_eq!(mod8::det_mod8(&t).unwrap(), BigInt::from(d), "det at p={p}");
    }
    let partition = |p: u64| {
        mod8::congruence_partition(&representatives(&build_member(RootKind::F, p).unwrap()).unwrap())
    };
    assert_eq!(partition(15), [(1u8, 3), (3, 2), (5, 1), (7, 0)].into());
    assert_eq!(partition(31), [(1u8, 6), (3, 10), (5, 2), (7, 0)].into());
    // p = 63: the faithful partition of the 62 position classes; the
    // printed column disagrees with every counting of the built matrix
    let p63 = partition(63);
    assert_eq!(p63, [(1u8, 16), (3, 40), (5, 4), (7, 2)].into());
    assert_eq!(p63.values().sum::<usize>(), 62);
    // 7-congruence first appears at 63, as §4.2 argues
    assert!(p63[&7] > 0);
    done(5, t0);
}

#[test]
fn criterion_06_f_algebra_and_heterotic() {
    let t0 = Instant::now();
    assert!(falg::verify_f_algebra(3).unwrap().passed());
    assert!(falg::verify_f_algebra(7).unwrap().passed());
    assert!(falg::verify_mod8_algebra(15).unwrap().passed());
    assert!(falg::verify_mod8_algebra(31).unwrap().passed());

    // heterotic g^(3): the unique matrix and the parametric factors
    let (g3, factors3) = falg::solve_heterotic(3, Symmetry::None).unwrap();
    assert_eq!(g3.num_params(), 0);
    let g3m = g3.at_zero();
    let expect_g3: [[(i64, i64); 4]; 4] = [
        [(0, 1), (1, 1), (0, 1), (1, 2)],
        [(0, 1), (0, 1), (-3, 2), (0, 1)],
        [(0, 1), (3, 2), (0, 1), (1, 1)],
        [(-1, 2), (0, 1), (0, 1), (0, 1)],
    ];
    for (r, row) in expect_g3.iter().enumerate() {
        for (c, &(n, d)) in row.iter().enumerate() {
            assert_eq!(g3m.entry(r + 1, c + 1).as_rational().unwrap(), rat(n, d));
        }
    }
    let f3 = factors3.unwrap();
    assert_eq!(f3.gamma, Affine::param(0));
    assert_eq!(f3.tau, Affine::param(1));
    assert_eq!(f3.chi.eval(&[rat(0, 1), rat(1, 4)]), rat(1, 1));
    assert_eq!(f3.sigma.eval(&[rat(0, 1), rat(1, 4)]), rat(-1, 4));

    // the three g^(7) variants' factor sets
    let (_, v1) = falg::solve_heterotic(7, Symmetry::S1).unwrap();
    let v1 = v1.unwrap();
    assert_eq!(v1.chi, Affine::from_i64(1));
    assert_eq!(v1.gamma, Affine::param(0));
    assert_eq!(v1.sigma.eval(&[rat(0, 1)]), rat(-1, 4));
    assert_eq!(v1.tau.eval(&[rat(0, 1)]), rat(1, 4));

    let (_, v2) = falg::solve_heterotic(7, Symmetry::S2).unwrap();
    let v2 = v2.unwrap();
    assert_eq!(
        (v2.chi, v2.sigma, v2.tau, v2.gamma),
        (
            Affine::from_i64(1),
            Affine::constant(rat(-1, 4)),
            Affine::constant(rat(1, 4)),
            Affine::zero()
        )
    );

    let (_, v3) = falg::solve_heterotic(7, Symmetry::S3).unwrap();
    let v3 = v3.unwrap();
    assert_eq!(v3.chi, Affine::constant(rat(14183539, 14137018)));
    assert_eq!(v3.sigma, Affine::constant(rat(-1737725, 7068509)));
    assert_eq!(v3.tau, Affine::constant(rat(1738225, 7068509)));
    assert_eq!(v3.gamma, Affine::constant(rat(147500, 7068509)));
    done(6, t0);
}

#[test]
fn criterion_07_table_5_and_interpolations() {
    let t0 = Instant::now();
    let sieve_start = Instant::now();
    let sieve = PrimeIndexer::with_limit(2_500_000);
    assert!(sieve_start.elapsed().as_secs() < 5, "sieve exceeded 5 s");

    let classify = |p: u64| {
        primesfact::classify_representatives(
            &representatives(&build_member(RootKind::F, p).unwrap()).unwrap(),
        )
        .unwrap()
    };
    let c15 = classify(15);
    assert_eq!(c15.get(&primesfact::FactorClass::Prime), Some(&6));
    assert_eq!(c15.values().sum::<usize>(), 6);
    let c31 = classify(31);
    assert_eq!(c31.get(&primesfact::FactorClass::Prime), Some(&4));
    assert_eq!(c31.get(&primesfact::FactorClass::TwoPrimes), Some(&6));
    assert_eq!(c31.get(&primesfact::FactorClass::ThreePrimes), Some(&6));
    assert_eq!(c31.get(&primesfact::FactorClass::Exponentiated), Some(&2));

    // every §4.3 interpolation, both quadrant lists
    let cases: [(u64, usize, u64); 18] = [
        (19, 8, 0),
        (43, 14, 0),
        (115, 30, 2),
        (155, 36, 4),
        (429, 82, 8),
        (1275, 205, 16),
        (1595, 250, 12),
        (4819, 649, 2),
        (15067, 1759, 6),
        (1633, 258, 6),
        (4905, 655, 2),
        (15297, 1786, 8),
        (18627, 2129, 10),
        (58781, 5946, 10),
        (189371, 17110, 10),
        (227089, 20185, 0),
        (737953, 59377, 24),
        (2430289, 178344, 0),
    ];
    for (v, rank, offset) in cases {
        let ip = primesfact::prime_interpolate(&sieve, v).unwrap();
        assert_eq!((ip.rank_below, ip.offset_below), (rank, offset as u64), "v={v}");
    }
    // upper forms spot-checked as printed
    let ip115 = primesfact::prime_interpolate(&sieve, 115).unwrap();
    assert_eq!((ip115.rank_above, ip115.offset_above), (31, 12));
    let ip737953 = primesfact::prime_interpolate(&sieve, 737953).unwrap();
    assert_eq!((ip737953.rank_above, ip737953.offset_above), (59378, 16));
    done(7, t0);
}

#[test]
fn criterion_08_table_6_columns() {
    let t0 = Instant::now();
    let sieve = PrimeIndexer::with_limit(10_000);
    let rows = primesfact::order_comparison_table(&sieve).unwrap();
    // S_p via Legendre exponents, cross-checked inside against the
    // π(2q) − π(q+1) oracle
    let s_expect = [1usize, 2, 4, 7, 12, 23, 43, 75, 137, 255, 463];
    let c_expect = [2.0, 3.10, 5.0, 8.27, 14.0, 24.08, 42.0, 74.09, 132.0, 237.11, 429.0];
    assert_eq!(rows.len(), 11);
    for ((row, s), c) in rows.iter().zip(s_expect).zip(c_expect) {
        assert_eq!(row.s_p, s, "S at q={}", row.q);
        assert!((row.half_index - c).abs() <= 0.01, "C column at q={}: {}", row.q, row.half_index);
    }
    done(8, t0);
}

#[test]
fn criterion_09_difference_suite() {
    let t0 = Instant::now();
    assert_eq!(diffs::naive_differences(&diffs::g_values(15).unwrap()), bigs(&[2, 6, 6, 24, 72]));
    assert_eq!(
        diffs::naive_differences(&diffs::g_values(31).unwrap()),
        bigs(&[
            24, 72, 40, 274, 846, 320, 38, 3186, 86, 10162, 230, 3330, 40154, 130590, 37718,
            510864, 1692336
        ])
    );
    assert_eq!(
        diffs::oblique_differences(&build_member(RootKind::F, 15).unwrap()).unwrap(),
        bigs(&[2, 6, 12, 24])
    );
    // the 11th member is 53876 = 58781 − 4905 from the unique solve;
    // the printed 53886 relied on the 58791 transcription slip
    assert_eq!(
        diffs::oblique_differences(&build_member(RootKind::F, 31).unwrap()).unwrap(),
        bigs(&[136, 386, 1160, 1440, 1478, 4390, 4476, 13792, 14022, 16994, 53876, 174074])
    );
    assert_eq!(diffs::naive_differences(&diffs::j_values(7).unwrap()), bigs(&[4]));
    assert_eq!(diffs::naive_differences(&diffs::j_values(15).unwrap()), bigs(&[38, 6, 14, 134]));
    // faithful 17-member ΔJ^(31): the printed 4474 and 2722 are merged
    // adjacent differences (80+4394 and 2442+280)
    assert_eq!(
        diffs::naive_differences(&diffs::j_values(31).unwrap()),
        bigs(&[
            688974, 53888, 80, 4394, 388, 54, 104, 26, 1176, 24, 204, 14000, 2442, 280,
            176724, 28580, 2662662
        ])
    );
    assert_eq!(
        diffs::oblique_differences(&build_member(RootKind::H, 15).unwrap()).unwrap(),
        bigs(&[-6, 20, -58])
    );
    assert_eq!(
        diffs::oblique_differences(&build_member(RootKind::H, 31).unwrap()).unwrap(),
        bigs(&[104, -388, 1404, 1226, 1202, -4474, -4394, 16722, 16442, 14228, -53968, 205584])
    );
    let window = diffs::merged_window(15, 31).unwrap();
    assert_eq!(&window[..6], &bigs(&[2, 6, 22, 40, 70, 274])[..]);
    assert_eq!(*window.last().unwrap(), BigInt::from(1692336));
    assert!(diffs::verify_parafermial(1692336, &diffs::delta_g_max_expression()));
    done(9, t0);
}

#[test]
fn criterion_10_kissing_suite() {
    let t0 = Instant::now();
    let rep = diffs::kissing_representations().unwrap();
    assert!(rep.passed(), "{rep}");
    let syn = diffs::synoptical_check().unwrap();
    assert!(syn.passed(), "{syn}");
    done(10, t0);
}

#[test]
fn criterion_11_cardioid_suite() {
    let t0 = Instant::now();
    let digits = 600;
    let quarter = rat(1, 4);
    // self action within 1e−50 for i ≤ 12
    assert!(cardioid::verify_self_action(12, &quarter, digits, 50).unwrap().passed());
    // Vieta product within 1e−17 of 2/π at m = 30
    let v30 = cardioid::vieta_product(30, digits).unwrap();
    let two_over_pi = HighPrecReal::from_integer(2, digits)
        .div(&cardioid::real::pi(digits))
        .unwrap();
    assert!(v30.agrees_within(&two_over_pi, 17));
    // leading coefficients
    let mut a1 = Vec::new();
    let mut coa2 = Vec::new();
    for i in 3..=8u32 {
        let cf = cardioid::arclength_contfrac(i, false, 4, digits, Mode::Simple).unwrap();
        a1.push(cf.quotient(1).unwrap().clone());
        if i <= 6 {
            let co = cardioid::arclength_contfrac(i, true, 4, digits, Mode::Simple).unwrap();
            coa2.push(co.quotient(2).unwrap().clone());
        }
    }
    assert_eq!(a1, bigs(&[2, 5, 10, 20, 40, 81]));
    assert_eq!(coa2, bigs(&[12, 51, 206, 829]));
    // placements with precision-stable quotients
    let expect = [(3u32, true, 3usize), (4, true, 11), (5, true, 48), (6, false, 189)];
    for (i, uses_co, index) in expect {
        let placement = cardioid::paraorder_placement(i, digits).unwrap();
        assert_eq!((placement.uses_co, placement.index), (uses_co, index), "i={i}");
    }
    assert!(t0.elapsed().as_secs() < 120, "cardioid suite exceeded 2 min");
    done(11, t0);
}

#[test]
fn criterion_12_table_12_coincidences() {
    let t0 = Instant::now();
    let rows = cardioid::kissing_contfrac_table().unwrap();
    assert_eq!(rows.len(), 8);
    for row in rows {
        match row.value {
            Some(v) => assert_eq!(v, BigInt::from(row.target), "n={}", row.n),
            None => panic!(
                "row n={} exceeded the precision budget (reported, not skipped)",
                row.n
            ),
        }
    }
    done(12, t0);
}

#[test]
fn criterion_13_mutation_controls() {
    let t0 = Instant::now();
    let f15 = build_member(RootKind::F, 15).unwrap();
    let f7 = build_member(RootKind::F, 7).unwrap();
    for mu in 2..=8usize {
        for nu in 1..mu {
            let mut bad = f15.clone();
            bad.set_coeff(mu, nu, bad.coeff(mu, nu) + BigInt::from(2));
            let square_ok = verify_square_relation(&bad, &f7).passed();
            let traces_ok = catalan_traces(&bad).unwrap().passed()
                && catalan_symmetry(&bad).unwrap().passed();
            let symmetry_ok = check_secondary_symmetry(&bad.to_int_matrix(), 2).passed();
            assert!(
                !(square_ok && traces_ok && symmetry_ok),
                "perturbation at ({mu},{nu}) went undetected"
            );
        }
    }
    done(13, t0);
}
