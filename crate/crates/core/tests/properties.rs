use proptest::prelude::*;

use pkit::dsl::{parse, Attaching, DslDocument, HandlebodyBlock, HandlebodyDef, Item, Name, TwoHandleDecl};
use pkit::front::random::{enumerate_knot_fronts, random_front, random_moves, random_unknot, RandomFrontConfig};
use pkit::front::{ComponentId, FrontDiagram};
use pkit::whitehead::{whitehead_multiple, FramedComponent, WhiteheadParams};

const C0: ComponentId = ComponentId(0);

fn link(seed: u64, handles: usize) -> FrontDiagram {
    random_front(seed, &RandomFrontConfig { length: 14, handles, max_strands: 6 })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn moves_keep_tb_and_rot_of_knots(seed in any::<u64>(), mseed in any::<u64>()) {
        let (f, _) = random_unknot(seed, 3, 0);
        let g = random_moves(&f, mseed, 15);
        prop_assert_eq!(g.tb(C0).unwrap(), f.tb(C0).unwrap());
        prop_assert_eq!(g.rot(C0).unwrap(), f.rot(C0).unwrap());
    }

    #[test]
    fn stabilization_shifts_tb_and_rot(seed in any::<u64>(), up in any::<bool>()) {
        let f = link(seed, 1);
        for c in f.components() {
            let sign = if up { 1 } else { -1 };
            let s = f.stabilize(c, sign).unwrap();
            prop_assert_eq!(s.tb(c).unwrap(), f.tb(c).unwrap() - 1);
            prop_assert_eq!((s.rot(c).unwrap() - f.rot(c).unwrap()).abs(), 1);
            // the two signs move rot in opposite directions
            let t = f.stabilize(c, -sign).unwrap();
            prop_assert_eq!(s.rot(c).unwrap() + t.rot(c).unwrap(), 2 * f.rot(c).unwrap());
        }
    }

    #[test]
    fn linking_is_symmetric(seed in any::<u64>()) {
        let f = link(seed, 0);
        for a in f.components() {
            for b in f.components().filter(|b| *b != a) {
                prop_assert_eq!(f.linking_number(a, b).unwrap(), f.linking_number(b, a).unwrap());
            }
        }
    }

    #[test]
    fn reversal_negates_rot(seed in any::<u64>()) {
        let f = link(seed, 1);
        for c in f.components() {
            let r = f.reversed(c).unwrap();
            prop_assert_eq!(r.rot(c).unwrap(), -f.rot(c).unwrap());
            prop_assert_eq!(r.tb(c).unwrap(), f.tb(c).unwrap());
            prop_assert_eq!(r.reversed(c).unwrap(), f.clone());
        }
    }

    #[test]
    fn odd_whitehead_multiples_add_n_minus_one(seed in any::<u64>(), half in 0usize..4) {
        let n = 2 * half + 1;
        let (k, _) = random_unknot(seed, 3, 8);
        let tb = k.tb(C0).unwrap();
        let w = whitehead_multiple(&k, FramedComponent::new(C0, tb), WhiteheadParams::new(n)).unwrap();
        prop_assert_eq!(w.front.tb(w.framed.component).unwrap() - tb, n as i64 - 1);
    }

    #[test]
    fn canonical_print_round_trips(seeds in prop::collection::vec(any::<u64>(), 1..4), framings in prop::collection::vec(-4i64..4, 4)) {
        let mut items = Vec::new();
        for (i, seed) in seeds.iter().enumerate() {
            let front = link(*seed, 2);
            let two_handles = front
                .components()
                .map(|c| TwoHandleDecl {
                    name: Name::new(format!("h{}", c.0)),
                    framing: framings[c.0 % framings.len()],
                    attaching: Attaching::On(c.0),
                    reversed: c.0 % 2 == 1,
                })
                .collect();
            let block = HandlebodyBlock {
                one_handles: vec![Name::new("a"), Name::new("b")],
                front: Some(front),
                two_handles,
                orientation: if i % 2 == 0 { 1 } else { -1 },
            };
            items.push(Item::Handlebody { name: Name::new(format!("K{i}")), def: HandlebodyDef::Block(block) });
        }
        items.push(Item::Handlebody { name: Name::new("W"), def: HandlebodyDef::Positron(3) });
        items.push(Item::Handlebody { name: Name::new("S"), def: HandlebodyDef::Sum(Name::new("K0"), Name::new("W")) });
        items.push(Item::Decomposition { name: Name::new("D"), side1: Name::new("S"), side2: Name::new("W") });
        let doc = DslDocument { items };
        let printed = doc.to_string();
        let again = parse(&printed).unwrap();
        prop_assert_eq!(&again, &doc);
        prop_assert_eq!(again.to_string(), printed);
    }
}

/// Every small front with fewer than three crossings is an unknot, so it
/// obeys tb + |rot| <= -1.
#[test]
fn enumerated_unknots_obey_the_bound() {
    let fronts = enumerate_knot_fronts(10, 4);
    let mut checked = 0;
    for f in &fronts {
        let crossings = f.events().iter().filter(|e| matches!(e, pkit::front::Event::Crossing(_))).count();
        if crossings < 3 {
            checked += 1;
            assert!(f.tb(C0).unwrap() + f.rot(C0).unwrap().abs() <= -1, "{f:?}");
        }
    }
    assert!(checked > 50, "only {checked} fronts");
}

#[test]
fn reports_are_deterministic() {
    use pkit::dsl::{run_source, RunParams};
    let text = "handlebody U = unknot 1;\nhandlebody W = positron 3;\ncork T { N U; A1 W; A2 W; }";
    for command in ["invariants", "defect", "whitehead", "reduce", "corks", "render"] {
        let a = run_source("t", text, command, &RunParams::default()).unwrap();
        let b = run_source("t", text, command, &RunParams::default()).unwrap();
        assert_eq!(a, b, "{command}");
    }
}
