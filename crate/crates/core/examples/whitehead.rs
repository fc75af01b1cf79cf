//! Whitehead multiples P_n(K): the tb identity tb(P_n) = tb(K) + n - 1 and
//! the homology multiplicity through a 1-handle.

use pkit::front::{ComponentId, FrontDiagram, OneHandleId};
use pkit::handlebody::handle_core;
use pkit::whitehead::{
    canonical_framing, homology_multiplicity, whitehead_multiple, FramedComponent, MultiplicityTarget,
    WhiteheadParams,
};

fn main() {
    let c = ComponentId(0);
    let trefoil: FrontDiagram = "Lc0 Lc2 X1 X1 X1 Rc2 Rc0".parse().unwrap();
    for (name, k) in [("unknot", FrontDiagram::unknot()), ("trefoil", trefoil), ("core", handle_core(OneHandleId(0)))] {
        let tb = k.tb(c).unwrap();
        for n in 1..=5 {
            let w = whitehead_multiple(&k, FramedComponent::new(c, tb), WhiteheadParams::new(n)).unwrap();
            let out = w.framed.component;
            let through = match homology_multiplicity(&w.front, out, MultiplicityTarget::Handle(OneHandleId(0))) {
                Ok(m) => m.to_string(),
                Err(_) => "-".into(),
            };
            println!(
                "P_{n}({name:7}) tb {:3} (expected {:3})  framing {:3}  canonical {:3}  through h0 {through}",
                w.front.tb(out).unwrap(),
                tb + n as i64 - 1,
                w.framed.framing,
                canonical_framing(n, tb).unwrap(),
            );
        }
    }
}
