//! Naive, oblique and dovetailed differences of the representatives,
//! plus the parafermial decomposition of the largest window difference.

use parafermi::diffs::{
    delta_g_max_expression, g_values, j_values, merged_window, naive_differences,
    oblique_differences, verify_parafermial,
};
use parafermi::rootseq::{build_member, RootKind};

fn show(label: &str, v: &[num_bigint::BigInt]) {
    let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    println!("{label} = ({})", s.join(", "));
}

fn main() {
    show("dG(15)", &naive_differences(&g_values(15).unwrap()));
    show("dG(31)", &naive_differences(&g_values(31).unwrap()));
    show("oG(15)", &oblique_differences(&build_member(RootKind::F, 15).unwrap()).unwrap());
    show("oG(31)", &oblique_differences(&build_member(RootKind::F, 31).unwrap()).unwrap());
    show("dJ(15)", &naive_differences(&j_values(15).unwrap()));
    show("oJ(31)", &oblique_differences(&build_member(RootKind::H, 31).unwrap()).unwrap());
    show("window (15,31)", &merged_window(15, 31).unwrap());

    let expr = delta_g_max_expression();
    println!(
        "\ndelta G_max decomposition: 1692336 = {expr}  [{}]",
        if verify_parafermial(1692336, &expr) { "verifies" } else { "FAILS" }
    );
}
