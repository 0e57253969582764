//! Catalan bookkeeping in the lower-left quadrants: traces, the
//! homogeneous diagonals, and the representative counts.

use parafermi::blockstruct::{
    catalan_symmetry, catalan_traces, representative_count_formula, representatives,
};
use parafermi::rootseq::{build_member, RootKind};

fn main() {
    for p in [15u64, 31, 63] {
        let f = build_member(RootKind::F, p).unwrap();
        let traces = catalan_traces(&f).unwrap();
        let sym = catalan_symmetry(&f).unwrap();
        println!("p = {p}: traces {}, diagonal homogeneity {}",
            if traces.passed() { "ok" } else { "FAIL" },
            if sym.passed() { "ok" } else { "FAIL" });
        let h = build_member(RootKind::H, p).unwrap();
        let ht = catalan_traces(&h).unwrap();
        println!("        alternating traces (root-h) {}", if ht.passed() { "ok" } else { "FAIL" });
    }

    println!("\nrepresentatives:");
    for p in [15u64, 31, 63, 127, 255] {
        let reps = representatives(&build_member(RootKind::F, p).unwrap()).unwrap();
        println!(
            "  p = {p}: T = {} (closed form {}), {} distinct values",
            reps.count(),
            representative_count_formula(p).unwrap(),
            reps.distinct_values()
        );
        if p == 15 {
            let vals: Vec<String> = reps.values.iter().map(|v| v.to_string()).collect();
            println!("    values: {}", vals.join(", "));
        }
    }
}
