//! The positron family W_n: Euler characteristic, first homology, defect and
//! whether the double is certified as a homotopy 4-sphere candidate.

use pkit::decompose::positron;

fn main() {
    for n in 1..=7 {
        let w = positron(n).unwrap();
        let h = &w.realized;
        let cert = h.pc_certificate();
        let double = h.double_check(pkit::budget());
        println!(
            "W_{n}: chi {} H1 {:8} defect {} pc {:5} double S4-compatible {}",
            h.euler_characteristic(),
            h.homology().h1_string(),
            cert.total_defect(),
            cert.is_pc(),
            double.s4_compatible
        );
    }
}
