//! Residues mod 8: pattern descriptors, the Λ = (mod 8)∘(×3) map across
//! carry-bit neighbors, and the determinant alternation.

use parafermi::blockstruct::navigate_str;
use parafermi::mod8::{det_mod8, lambda_row, pattern_descriptor, reduce_mod8};
use parafermi::rootseq::{build_triangles, RootKind};

fn main() {
    let seq = build_triangles(RootKind::F, 127).unwrap();
    for t in &seq {
        if t.half() < 4 {
            continue;
        }
        let ll = navigate_str(&reduce_mod8(t), "LL").unwrap();
        let d = pattern_descriptor(&ll).unwrap();
        println!("LL(G^({})) mod 8 = {d}", t.paraorder());
    }
    println!();
    for pair in seq.windows(2) {
        if pair[0].paraorder() < 7 {
            continue;
        }
        let (arg, mapped, out) = lambda_row(&pair[0], &pair[1]).unwrap();
        println!(
            "lambda: {} -> {}   [{} -> {}]  {}",
            pair[0].paraorder(),
            pair[1].paraorder(),
            arg,
            out,
            if mapped == out { "ok" } else { "MISMATCH" }
        );
    }
    println!();
    for t in &seq {
        if t.paraorder() <= 63 {
            println!("det LL f^({}) mod 8 = {}", t.paraorder(), det_mod8(t).unwrap());
        }
    }
}
