//! A small text format for handlebodies, decompositions and cork triples.
//!
//! ```text
//! # comments run to the end of the line
//! handlebody K {
//!   1h a;
//!   2h h framing -1 front "Lc0 HpL1:a X0 ...";
//!   orientation 1;
//! }
//! handlebody L {
//!   front "Lc0 Lc2 X1 X1 Rc2 Rc0";
//!   2h p framing 0 on 0;
//!   2h q framing 1 on 1 reversed;
//! }
//! handlebody W3 = positron 3;
//! handlebody Z = pair 1;
//! handlebody U = unknot -1;
//! handlebody A = sum W3 Z;
//! handlebody B = reverse A;
//! decomposition D { side1 U; side2 B; }
//! cork T { N U; A1 A; A2 B; }
//! run decompose D;
//! ```
//!
//! Front words use the event tokens `Lc i`, `Rc i`, `X i`, `HpL i:h`,
//! `HpR i:h` with `h` a declared 1-handle name.

mod lexer;
mod parse;
mod print;
mod resolve;
mod run;
mod svg;

pub use parse::{parse, COMMANDS};
pub use resolve::{Directive, Workspace};
pub use run::{digest, run, run_source, Format, Output, RunError, RunParams, SCHEMA};
pub use svg::render;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::front::FrontDiagram;

/// Source position (1-based). Positions are diagnostic metadata only and
/// never make two documents unequal.
#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl PartialEq for Pos {
    fn eq(&self, _: &Pos) -> bool {
        true
    }
}

impl Eq for Pos {}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{pos}: {message}")]
pub struct DslError {
    pub pos: Pos,
    pub message: String,
}

impl DslError {
    pub(crate) fn new(pos: Pos, message: impl Into<String>) -> DslError {
        DslError { pos, message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Name {
    pub text: String,
    pub pos: Pos,
}

impl Name {
    pub fn new(text: impl Into<String>) -> Name {
        Name { text: text.into(), pos: Pos::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Attaching {
    /// Its own front, placed to the right of everything before it.
    Front(FrontDiagram),
    /// A component of the block's shared front.
    On(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoHandleDecl {
    pub name: Name,
    pub framing: i64,
    pub attaching: Attaching,
    pub reversed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HandlebodyBlock {
    pub one_handles: Vec<Name>,
    pub front: Option<FrontDiagram>,
    pub two_handles: Vec<TwoHandleDecl>,
    pub orientation: i8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HandlebodyDef {
    Block(HandlebodyBlock),
    Positron(usize),
    Pair(i64),
    Unknot(i64),
    Sum(Name, Name),
    Reverse(Name),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Item {
    Handlebody { name: Name, def: HandlebodyDef },
    Decomposition { name: Name, side1: Name, side2: Name },
    Cork { name: Name, n: Name, a1: Name, a2: Name },
    Run { command: Name, target: Name, params: Vec<(String, i64)> },
}

impl Item {
    pub fn name(&self) -> Option<&Name> {
        match self {
            Item::Handlebody { name, .. } | Item::Decomposition { name, .. } | Item::Cork { name, .. } => Some(name),
            Item::Run { .. } => None,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DslDocument {
    pub items: Vec<Item>,
}

impl fmt::Display for DslDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print::print(self))
    }
}
