//! Two-pass pseudo-convex decomposition of a split 4-manifold, printing the
//! defect ledger one move at a time.

use pkit::decompose::{convex_decompose, Decomposition};
use pkit::handlebody::{boundary_sum, unknot_handlebody};

fn main() {
    let side1 = boundary_sum(&unknot_handlebody(0), &unknot_handlebody(1));
    let side2 = unknot_handlebody(-1);
    let dec = Decomposition::new(side1, side2);
    println!("initial totals {:?}", dec.totals());
    let out = convex_decompose(&dec).unwrap();
    for e in &out.ledger.entries {
        println!(
            "step {:2} pass {} side {} handle {:4} n {} k {}: defect {} -> {}, totals {:?} -> {:?}",
            e.step,
            e.pass,
            e.active.number(),
            e.handle,
            e.n,
            e.k,
            e.defect_before,
            e.defect_after,
            e.totals_before,
            e.totals_after
        );
    }
    println!("final totals {:?}, gluing pairs {}", out.totals(), out.gluing.pairs.len());
}
