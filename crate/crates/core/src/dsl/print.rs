use std::fmt::Write;

use super::{Attaching, DslDocument, HandlebodyDef, Item};
use crate::front::FrontDiagram;

/// Canonical text: one statement per line, two-space indent.
pub(crate) fn print(doc: &DslDocument) -> String {
    let mut out = String::new();
    for item in &doc.items {
        match item {
            Item::Handlebody { name, def } => match def {
                HandlebodyDef::Block(b) => {
                    let names: Vec<String> = b.one_handles.iter().map(|h| h.text.clone()).collect();
                    let word = |f: &FrontDiagram| f.to_text_with(|h| names[h.0].clone());
                    writeln!(out, "handlebody {} {{", name.text).unwrap();
                    if !names.is_empty() {
                        writeln!(out, "  1h {};", names.join(" ")).unwrap();
                    }
                    if let Some(f) = &b.front {
                        writeln!(out, "  front \"{}\";", word(f)).unwrap();
                    }
                    for h in &b.two_handles {
                        let at = match &h.attaching {
                            Attaching::Front(f) => format!("front \"{}\"", word(f)),
                            Attaching::On(i) => format!("on {i}"),
                        };
                        let rev = if h.reversed { " reversed" } else { "" };
                        writeln!(out, "  2h {} framing {} {at}{rev};", h.name.text, h.framing).unwrap();
                    }
                    if b.orientation != 1 {
                        writeln!(out, "  orientation {};", b.orientation).unwrap();
                    }
                    writeln!(out, "}}").unwrap();
                }
                HandlebodyDef::Positron(n) => writeln!(out, "handlebody {} = positron {n};", name.text).unwrap(),
                HandlebodyDef::Pair(f) => writeln!(out, "handlebody {} = pair {f};", name.text).unwrap(),
                HandlebodyDef::Unknot(f) => writeln!(out, "handlebody {} = unknot {f};", name.text).unwrap(),
                HandlebodyDef::Sum(a, b) => {
                    writeln!(out, "handlebody {} = sum {} {};", name.text, a.text, b.text).unwrap()
                }
                HandlebodyDef::Reverse(a) => writeln!(out, "handlebody {} = reverse {};", name.text, a.text).unwrap(),
            },
            Item::Decomposition { name, side1, side2 } => {
                writeln!(out, "decomposition {} {{ side1 {}; side2 {}; }}", name.text, side1.text, side2.text).unwrap()
            }
            Item::Cork { name, n, a1, a2 } => {
                writeln!(out, "cork {} {{ N {}; A1 {}; A2 {}; }}", name.text, n.text, a1.text, a2.text).unwrap()
            }
            Item::Run { command, target, params } => {
                write!(out, "run {} {}", command.text, target.text).unwrap();
                for (k, v) in params {
                    write!(out, " {k} {v}").unwrap();
                }
                writeln!(out, ";").unwrap();
            }
        }
    }
    out
}
