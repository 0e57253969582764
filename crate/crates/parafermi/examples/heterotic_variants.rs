//! The heterotic variant: parametric solves of the commutator system
//! and the normalizing-factor families for g^(3) and the three g^(7)
//! symmetry classes.

use parafermi::falg::{solve_heterotic, verify_commutator_identity, Symmetry};
use parafermi::rootseq::{build_member, RootKind};

fn main() {
    let (g3, f3) = solve_heterotic(3, Symmetry::None).unwrap();
    println!("g^(3) (unique):");
    print!("{}", g3.at_zero());
    let f3 = f3.unwrap();
    println!("factors: chi = {}, sigma = {}, tau = {}, gamma = {}\n", f3.chi, f3.sigma, f3.tau, f3.gamma);

    for sym in [Symmetry::S1, Symmetry::S2, Symmetry::S3] {
        let (g, factors) = solve_heterotic(7, sym).unwrap();
        let f = build_member(RootKind::F, 7).unwrap().to_int_matrix();
        let identity = verify_commutator_identity(&f, &g);
        println!(
            "g^(7) under {sym}: {} free parameter(s), commutator identity {}",
            g.num_params(),
            if identity.passed() { "holds" } else { "FAILS" }
        );
        match factors {
            Some(fs) => println!("  factors: chi = {}, sigma = {}, tau = {}, gamma = {}", fs.chi, fs.sigma, fs.tau, fs.gamma),
            None => println!("  factors: {{}}"),
        }
    }

    // without any symmetry the zero-instantiated system has no factors
    let (g_free, factors) = solve_heterotic(7, Symmetry::None).unwrap();
    println!(
        "\ng^(7) symmetry-free: {} parameters, factor set at zero: {}",
        g_free.num_params(),
        if factors.is_none() { "{}" } else { "nonempty" }
    );
}
