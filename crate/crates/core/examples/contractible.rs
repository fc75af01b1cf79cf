//! Splitting a contractible handlebody into a piece built from 2-handles on
//! the 1-handle cores and its complement.

use pkit::decompose::{contractible_piece, positron};

fn main() {
    for n in [1, 3, 5] {
        let x = positron(n).unwrap().realized;
        match contractible_piece(&x, pkit::budget()) {
            Ok(p) => {
                println!("W_{n}: X1 has {} 2-handles, X2 has {}", p.x1.two_handles().len(), p.x2.two_handles().len());
                for e in &p.expressions {
                    println!("  {e:?}");
                }
            }
            Err(e) => println!("W_{n}: {e}"),
        }
    }
}
