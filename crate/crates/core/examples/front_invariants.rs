//! Thurston-Bennequin and rotation numbers of a few fronts, and their
//! behaviour under Legendrian moves and stabilization.

use pkit::front::random::random_moves;
use pkit::front::{ComponentId, FrontDiagram};

fn main() {
    let c = ComponentId(0);
    for (name, word) in [
        ("unknot", "Lc0 Rc0"),
        ("right trefoil", "Lc0 Lc2 X1 X1 X1 Rc2 Rc0"),
        ("figure eight", "Lc0 Lc2 X1 Lc0 X2 X1 X0 Rc2 X1 Rc0 Rc0"),
    ] {
        let f: FrontDiagram = match word.parse() {
            Ok(f) => f,
            Err(e) => {
                println!("{name:14} {word}: {e}");
                continue;
            }
        };
        let (tb, rot) = (f.tb(c).unwrap(), f.rot(c).unwrap());
        let moved = random_moves(&f, 7, 20);
        let pos = f.stabilize(c, 1).unwrap();
        println!(
            "{name:14} tb {tb:3} rot {rot:3} | after 20 moves tb {} rot {} | S+ tb {} rot {}",
            moved.tb(c).unwrap(),
            moved.rot(c).unwrap(),
            pos.tb(c).unwrap(),
            pos.rot(c).unwrap()
        );
    }
}
