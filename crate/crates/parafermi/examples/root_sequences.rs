//! The root-f, root-d and root-h sequences: square-root extraction by
//! forward substitution, nilpotency, and the evolving coefficients.

use parafermi::rootseq::{build_triangles, verify_nilpotency, verify_square_relation, RootKind};

fn main() {
    for kind in [RootKind::F, RootKind::D, RootKind::H] {
        let seq = build_triangles(kind, 15).unwrap();
        println!("== root-{kind} sequence to p = 15");
        for pair in seq.windows(2) {
            let sq = verify_square_relation(&pair[1], &pair[0]);
            println!(
                "  (x^({}))^2 = x^({}) (x) 1: {}",
                pair[1].paraorder(),
                pair[0].paraorder(),
                if sq.passed() { "exact" } else { "FAILED" }
            );
        }
        let last = seq.last().unwrap();
        println!("  nilpotency: {}", if verify_nilpotency(last).passed() { "order p+1 exactly" } else { "FAILED" });
        println!("{:?}", last);
    }
    // coefficient growth: the largest G at p=31
    let f31 = build_triangles(RootKind::F, 31).unwrap().pop().unwrap();
    println!("G_max^(31) = {}", f31.max_coeff());
}
