//! Factorization classes of the representatives, nearest-prime
//! interpolations, and the Catalan suffix of consecutive prime factors.

use parafermi::blockstruct::representatives;
use parafermi::primesfact::{
    catalan_scpf, classify_representatives, factorize, order_comparison_table,
    prime_interpolate, PrimeIndexer,
};
use parafermi::rootseq::{build_member, RootKind};

fn main() {
    let sieve = PrimeIndexer::with_limit(3_000_000);
    let reps = representatives(&build_member(RootKind::F, 31).unwrap()).unwrap();
    println!("factorization classes at p = 31:");
    for (class, count) in classify_representatives(&reps).unwrap() {
        println!("  {class}: {count}");
    }
    println!("\ninterpolations:");
    for v in reps.values.iter().take(6) {
        use num_traits::ToPrimitive;
        let value = v.to_u64().unwrap();
        let ip = prime_interpolate(&sieve, value).unwrap();
        if ip.offset_below == 0 {
            println!("  {value} = pi_{}", ip.rank_below);
        } else {
            println!("  {value} = pi_{}+{} = pi_{}-{}", ip.rank_below, ip.offset_below, ip.rank_above, ip.offset_above);
        }
    }
    println!("\nCatalan suffixes (q+1, 2q):");
    for q in [3u64, 7, 15, 31] {
        let r = catalan_scpf(&sieve, q).unwrap();
        println!("  C_{q}: {:?} (S = {})", r.suffix, r.count);
    }
    println!("\n429 = {}", factorize(&429.into()).unwrap());
    println!("9694845 = {}", factorize(&9694845.into()).unwrap());
    println!("\norder comparison:");
    for row in order_comparison_table(&sieve).unwrap() {
        println!(
            "  q={:<5} density {:>7.2}  S={:<4} C={:<7.2} L={}",
            row.q, row.density, row.s_p, row.half_index, row.kissing
        );
    }
}
