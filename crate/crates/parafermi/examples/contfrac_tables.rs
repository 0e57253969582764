//! Continued fractions of the arclengths and the intensional Catalan
//! numbers: leading-coefficient recurrences, paraorder placements, and
//! the kissing-number coincidences.

use parafermi::cardioid::{
    contfrac::Mode, arclength_contfrac, intensional_contfrac, kissing_contfrac_report,
    leading_coefficient_recurrences, paraorder_placement, verify_l1_successorship,
};

fn main() {
    let digits = 300;
    let a4 = arclength_contfrac(4, false, 8, digits, Mode::Simple).unwrap();
    println!("A_4 = {a4}");
    let co5 = arclength_contfrac(5, true, 8, digits, Mode::Simple).unwrap();
    println!("co-A_5 = {co5}");
    print!("{}", leading_coefficient_recurrences(8, digits).unwrap());

    println!();
    for i in 3..=6 {
        println!("{}", paraorder_placement(i, 600).unwrap());
    }

    println!();
    print!("{}", verify_l1_successorship(4, 12).unwrap());
    let c5 = intensional_contfrac(5, 16, 120, Mode::Simple).unwrap();
    println!("\nC_(-1/5) = {c5}");

    // the full table takes a couple of minutes at the stated budget
    if std::env::args().any(|a| a == "--full") {
        print!("{}", kissing_contfrac_report().unwrap());
    } else {
        println!("(run with --full for the kissing-number coincidence table)");
    }
}
