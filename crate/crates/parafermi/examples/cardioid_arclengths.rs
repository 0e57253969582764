//! The planar model: arclengths in nested-radical form, the self-action
//! identity, the Vieta product, and the coordinate-transform limits.

use parafermi::cardioid::{
    arclength_radical_string, arclengths, real::pi, real::HighPrecReal, self_action, transforms,
    verify_co_z_identity, vieta_product,
};
use parafermi::exact::Rational;
use num_bigint::BigInt;

fn main() {
    let a = Rational::new(BigInt::from(1), BigInt::from(4));
    let digits = 80;
    for i in 1..=6 {
        let (ai, co, bar) = arclengths(i, &a, digits).unwrap();
        println!(
            "i={i}:  A = {}  ({})",
            ai.to_decimal_string(12),
            arclength_radical_string(i, false)
        );
        println!(
            "      co-A = {}  bar-A = {}",
            co.to_decimal_string(12),
            bar.to_decimal_string(12)
        );
    }
    println!();
    for i in 2..=6 {
        let action = self_action(i, &a, digits).unwrap();
        let (prev, _, _) = arclengths(i - 1, &a, digits).unwrap();
        println!(
            "(A_{i},A_{i}) = {}  = A_{}: {}",
            action.to_decimal_string(12),
            i - 1,
            action.agrees_within(&prev, 70)
        );
    }
    let v = vieta_product(30, digits).unwrap();
    let target = HighPrecReal::from_integer(2, digits).div(&pi(digits)).unwrap();
    println!(
        "\nvieta m=30: {} vs 2/pi = {}",
        v.to_decimal_string(20),
        target.to_decimal_string(20)
    );
    let t = transforms(3, true).unwrap();
    println!("\np=3 unmoved limits (in units of pi): upper {:?} -> {:?}", t.upper.0, t.upper.1);
    print!("{}", verify_co_z_identity(7).unwrap());
}
