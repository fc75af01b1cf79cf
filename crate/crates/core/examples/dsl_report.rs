//! Parsing a handlebody document, printing it canonically, and running a
//! command on it. `cargo run --example dsl_report -- render > front.svg`
//! writes a drawing instead.

use pkit::dsl::{parse, run_source, RunParams};

const DOC: &str = r#"
# a trefoil 2-handle next to a positron
handlebody T {
  front "Lc0 Lc2 X1 X1 X1 Rc2 Rc0";
  2h t framing 0 on 0;
}
handlebody W3 = positron 3;
handlebody S = sum T W3;
decomposition D { side1 S; side2 W3; }
run decompose D;
"#;

fn main() {
    let command = std::env::args().nth(1).unwrap_or_else(|| "invariants".into());
    let doc = parse(DOC).unwrap();
    eprintln!("{doc}");
    match run_source("inline", DOC, &command, &RunParams::default()) {
        Ok(out) => print!("{}", out.text()),
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(e.exit_code());
        }
    }
}
