use super::{Attaching, DslDocument, DslError, HandlebodyBlock, HandlebodyDef, Item, Name};
use crate::decompose::{positron, CorkTriple, Decomposition};
use crate::front::ComponentId;
use crate::handlebody::{boundary_sum, canceling_pair, unknot_handlebody, FramedHandle, Handlebody};

/// A run directive with its target resolved by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Directive {
    pub command: String,
    pub target: String,
    pub params: Vec<(String, i64)>,
}

/// Every object a document declares, built and validated.
#[derive(Debug, Clone, Default)]
pub struct Workspace {
    pub handlebodies: Vec<(String, Handlebody)>,
    pub decompositions: Vec<(String, Decomposition)>,
    pub corks: Vec<(String, CorkTriple)>,
    pub directives: Vec<Directive>,
}

impl Workspace {
    pub fn handlebody(&self, name: &str) -> Option<&Handlebody> {
        self.handlebodies.iter().find(|(n, _)| n == name).map(|(_, h)| h)
    }

    pub fn decomposition(&self, name: &str) -> Option<&Decomposition> {
        self.decompositions.iter().find(|(n, _)| n == name).map(|(_, d)| d)
    }

    pub fn cork(&self, name: &str) -> Option<&CorkTriple> {
        self.corks.iter().find(|(n, _)| n == name).map(|(_, c)| c)
    }
}

impl DslDocument {
    /// Builds every declared object; construction errors point at the name.
    pub fn resolve(&self) -> Result<Workspace, DslError> {
        let mut ws = Workspace::default();
        let get = |ws: &Workspace, n: &Name| {
            ws.handlebody(&n.text).cloned().ok_or_else(|| DslError::new(n.pos, format!("unknown handlebody `{}`", n.text)))
        };
        for item in &self.items {
            match item {
                Item::Handlebody { name, def } => {
                    let h = match def {
                        HandlebodyDef::Block(b) => build_block(name, b)?,
                        HandlebodyDef::Positron(n) => {
                            positron(*n).map_err(|e| DslError::new(name.pos, e.to_string()))?.realized
                        }
                        HandlebodyDef::Pair(f) => canceling_pair(*f),
                        HandlebodyDef::Unknot(f) => unknot_handlebody(*f),
                        HandlebodyDef::Sum(a, b) => boundary_sum(&get(&ws, a)?, &get(&ws, b)?),
                        HandlebodyDef::Reverse(a) => get(&ws, a)?.reversed(),
                    };
                    ws.handlebodies.push((name.text.clone(), h));
                }
                Item::Decomposition { name, side1, side2 } => {
                    let d = Decomposition::new(get(&ws, side1)?, get(&ws, side2)?);
                    ws.decompositions.push((name.text.clone(), d));
                }
                Item::Cork { name, n, a1, a2 } => {
                    let t = CorkTriple::new(get(&ws, n)?, get(&ws, a1)?, get(&ws, a2)?);
                    ws.corks.push((name.text.clone(), t));
                }
                Item::Run { command, target, params } => ws.directives.push(Directive {
                    command: command.text.clone(),
                    target: target.text.clone(),
                    params: params.clone(),
                }),
            }
        }
        Ok(ws)
    }
}

fn build_block(name: &Name, b: &HandlebodyBlock) -> Result<Handlebody, DslError> {
    let shared = b.front.clone().unwrap_or_default();
    let shared_count = shared.component_count();
    let mut front = shared;
    let mut handles = Vec::new();
    let mut reversals = Vec::new();
    for h in &b.two_handles {
        let c = match &h.attaching {
            Attaching::On(i) => {
                if *i >= shared_count {
                    return Err(DslError::new(
                        h.name.pos,
                        format!("shared front has {shared_count} components, no component {i}"),
                    ));
                }
                ComponentId(*i)
            }
            Attaching::Front(f) => {
                if f.component_count() != 1 {
                    return Err(DslError::new(
                        h.name.pos,
                        format!("front of `{}` has {} components, expected 1", h.name.text, f.component_count()),
                    ));
                }
                let c = ComponentId(front.component_count());
                front = front.juxtapose(f);
                c
            }
        };
        if h.reversed {
            reversals.push(c);
        }
        handles.push(FramedHandle::new(h.name.text.clone(), c, h.framing));
    }
    for c in reversals {
        front = front.reversed(c).map_err(|e| DslError::new(name.pos, e.to_string()))?;
    }
    let one_handles = b.one_handles.iter().map(|h| h.text.clone()).collect();
    Handlebody::new(one_handles, front, handles, b.orientation)
        .map_err(|e| DslError::new(name.pos, format!("handlebody `{}`: {e}", name.text)))
}
