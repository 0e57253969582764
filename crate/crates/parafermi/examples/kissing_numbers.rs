//! The kissing numbers as interordinal differences of Green's squares
//! and as synoptical difference expressions.

use parafermi::diffs::{allocation_solve, kissing_representations, synoptical_check};

fn main() {
    let rep = kissing_representations().unwrap();
    print!("{rep}");
    println!();
    let syn = synoptical_check().unwrap();
    print!("{syn}");

    // dimension allocation within the 8-periods
    for (m, lambdas) in [(3u32, [1u64, 1, 3, 3]), (3, [5, 3, 7, 1])] {
        let ((i, j, k, l), span) = allocation_solve(m, lambdas);
        println!(
            "m={m}, lambda={lambdas:?}: dimensions ({i},{j},{k},{l}) span {span} eight-period(s)"
        );
    }
}
