//! Simultaneous pseudo-convexification of two cork triples sharing N.

use pkit::decompose::{cork_pseudoconvexify, positron, CorkTriple};
use pkit::handlebody::{boundary_sum, canceling_pair, unknot_handlebody};

fn main() {
    let w = |n| positron(n).unwrap().realized;
    let n = unknot_handlebody(0);
    let t1 = CorkTriple::new(n.clone(), boundary_sum(&w(3), &canceling_pair(1)), boundary_sum(&w(5), &canceling_pair(0)));
    let t2 = CorkTriple::new(n, w(3), w(5));
    println!("defects before {:?} {:?}", t1.defect_totals(), t2.defect_totals());
    let (o1, o2, report) = cork_pseudoconvexify(&t1, &t2, pkit::budget()).unwrap();
    println!("defects after  {:?} {:?}", o1.defect_totals(), o2.defect_totals());
    for (i, audit) in report.triples.iter().enumerate() {
        println!(
            "triple {}: {} moves, chi identities {:?}, chart swap {}, corks certified {:?}",
            i + 1,
            audit.ledger.len(),
            audit.chi_identities,
            audit.chart_swap_equal,
            audit.corks_certified
        );
    }
    println!("{}", report.notice);
}
