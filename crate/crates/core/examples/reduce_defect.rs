//! One defect-reducing step on a 0-framed unknot, then the passive
//! modification that keeps the pattern away from the rest of the diagram.

use pkit::decompose::{passive_modification, reduce_defect_step};
use pkit::handlebody::unknot_handlebody;

fn main() {
    let h = unknot_handlebody(0);
    println!("before: defect {} chi {} H1 {}", h.defect_total(), h.euler_characteristic(), h.homology().h1_string());
    let r = reduce_defect_step(&h, 0, 2, 3).unwrap();
    println!(
        "reduce n={} k={}: tb {} -> {}, defect {} -> {}, new 1-handle {}, positron handle {}",
        r.n, r.k, r.tb_before, r.tb_after, r.defect_before, r.defect_after, r.one_handle, r.positron_handle
    );
    let after = &r.handlebody;
    println!("after:  defect {} chi {} H1 {}", after.defect_total(), after.euler_characteristic(), after.homology().h1_string());
    let p = passive_modification(&h, 3, 3).unwrap();
    println!(
        "passive n={} k={}: pattern tb {} defect {}, total defect now {}",
        p.n,
        p.k,
        p.pattern_tb,
        p.pattern_defect,
        p.handlebody.defect_total()
    );
}
