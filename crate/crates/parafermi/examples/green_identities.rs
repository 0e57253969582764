//! Green's representation of the parafermi operator: builds b^(p),
//! verifies the spin diagonal, the trilinear relations, and the
//! carry-bit-neighbor anticommutator identity.

use parafermi::exact::OperatorMatrix;
use parafermi::green;

fn main() {
    let b7 = green::build_green(7).unwrap();
    println!("b^(7) subdiagonal:");
    for beta in 1..=7 {
        print!("  {}", b7.entry(beta + 1, beta));
    }
    println!("\n");

    for p in [1u64, 3, 7, 15, 31] {
        let report = green::suite(p).unwrap();
        println!("p = {p}: {}", if report.passed() { "all identities hold" } else { "FAILED" });
    }

    // the worked example: ½{b^(7), diag(1,1,1,1) ⊗ b^(1)} = b^(3) ⊗ 1
    let mixer = OperatorMatrix::identity(3).kronecker(&green::build_green(1).unwrap());
    let lhs = b7.anticommutator(&mixer).unwrap();
    println!("{{b^(7), 1 (x) b^(1)}} =");
    print!("{lhs}");
    println!("= 2 b^(3) (x) 1: {}", lhs == green::build_green(3).unwrap().tensor_extend().scale_int(2));
}
