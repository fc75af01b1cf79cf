use serde::{Deserialize, Serialize};

use super::{choose_k, passive_modification, reduce_defect_step, DecomposeError};
use crate::handlebody::Handlebody;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    One,
    Two,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::One => Side::Two,
            Side::Two => Side::One,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Side::One => 1,
            Side::Two => 2,
        }
    }
}

/// Symbolic boundary identification: pairs of feature labels matched
/// across the gluing. No 3-manifold map is computed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GluingMarker {
    pub label: String,
    pub pairs: Vec<(String, String)>,
}

impl GluingMarker {
    pub fn new(label: impl Into<String>) -> GluingMarker {
        GluingMarker { label: label.into(), pairs: Vec::new() }
    }
}

/// (chi, H1 invariant factors incl. free rank, H2 rank)
pub type Shadow = (i64, (usize, Vec<i64>, usize));

pub(crate) fn shadow(h: &Handlebody) -> Shadow {
    (h.euler_characteristic(), h.homology().groups())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerEntry {
    pub step: usize,
    pub pass: u8,
    pub active: Side,
    pub handle: String,
    pub n: usize,
    pub k: usize,
    pub defect_before: i64,
    pub defect_after: i64,
    /// defect totals of (side1, side2) before and after the move
    pub totals_before: (i64, i64),
    pub totals_after: (i64, i64),
    pub chi_delta: (i64, i64),
    pub carved: String,
    pub positron_handle: String,
    pub passive_one_handle: String,
    pub passive_handle: String,
    pub invariants_kept: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectLedger {
    pub initial: (i64, i64),
    pub entries: Vec<LedgerEntry>,
}

impl DefectLedger {
    /// Current defect totals of (side1, side2).
    pub fn totals(&self) -> (i64, i64) {
        self.entries.last().map_or(self.initial, |e| e.totals_after)
    }

    /// Combined total at the end of each pass that has entries.
    pub fn pass_totals(&self) -> Vec<(u8, i64)> {
        let mut out: Vec<(u8, i64)> = Vec::new();
        for e in &self.entries {
            let t = e.totals_after.0 + e.totals_after.1;
            match out.last_mut() {
                Some(last) if last.0 == e.pass => last.1 = t,
                _ => out.push((e.pass, t)),
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub side1: Handlebody,
    pub side2: Handlebody,
    pub ledger: DefectLedger,
    pub gluing: GluingMarker,
}

impl Decomposition {
    /// Side 1 is stored with orientation +1 and side 2 with -1.
    pub fn new(side1: Handlebody, side2: Handlebody) -> Decomposition {
        let side1 = if side1.orientation() == 1 { side1 } else { side1.reversed() };
        let side2 = if side2.orientation() == -1 { side2 } else { side2.reversed() };
        let ledger = DefectLedger { initial: (side1.defect_total(), side2.defect_total()), entries: Vec::new() };
        Decomposition { side1, side2, ledger, gluing: GluingMarker::new("X1 u X2") }
    }

    pub fn side(&self, s: Side) -> &Handlebody {
        match s {
            Side::One => &self.side1,
            Side::Two => &self.side2,
        }
    }

    fn side_mut(&mut self, s: Side) -> &mut Handlebody {
        match s {
            Side::One => &mut self.side1,
            Side::Two => &mut self.side2,
        }
    }

    pub fn totals(&self) -> (i64, i64) {
        (self.side1.defect_total(), self.side2.defect_total())
    }
}

/// Carves P_n of a disc out of the active side and hands its neighbourhood
/// to the passive side. `k` defaults to the smallest admissible odd value.
pub fn swap_move(
    dec: &Decomposition,
    side: Side,
    handle: &str,
    n: usize,
    k: Option<usize>,
) -> Result<Decomposition, DecomposeError> {
    swap_in_pass(dec, side, handle, n, k, side.number())
}

fn swap_in_pass(
    dec: &Decomposition,
    side: Side,
    handle: &str,
    n: usize,
    k: Option<usize>,
    pass: u8,
) -> Result<Decomposition, DecomposeError> {
    let active = dec.side(side);
    let passive = dec.side(side.other());
    let i = active
        .handle_index(handle)
        .ok_or_else(|| DecomposeError::UnknownHandle(handle.to_string()))?;
    let k = match k {
        Some(k) => k,
        None => {
            // D(g) only depends on n; probe it with the smallest k
            let probe = passive_modification(passive, n.max(1), 3)?;
            choose_k(probe.pattern_defect)?
        }
    };
    let red = reduce_defect_step(active, i, n, k)?;
    let pas = passive_modification(passive, n, k)?;

    let totals_before = dec.totals();
    let before = (shadow(active), shadow(passive));
    let after = (shadow(&red.handlebody), shadow(&pas.handlebody));
    let chi_active = after.0 .0 - before.0 .0;
    let chi_passive = after.1 .0 - before.1 .0;

    let mut out = dec.clone();
    *out.side_mut(side) = red.handlebody;
    *out.side_mut(side.other()) = pas.handlebody;
    let tag = |s: Side, name: &str| format!("{}:{}", s.number(), name);
    out.gluing.pairs.push((tag(side, &red.one_handle), tag(side.other(), &pas.handle)));
    out.gluing.pairs.push((tag(side.other(), &pas.one_handle), tag(side, &red.positron_handle)));

    let chi_delta = match side {
        Side::One => (chi_active, chi_passive),
        Side::Two => (chi_passive, chi_active),
    };
    out.ledger.entries.push(LedgerEntry {
        step: dec.ledger.entries.len(),
        pass,
        active: side,
        handle: handle.to_string(),
        n,
        k,
        defect_before: red.defect_before,
        defect_after: red.defect_after,
        totals_before,
        totals_after: out.totals(),
        chi_delta,
        carved: red.one_handle,
        positron_handle: red.positron_handle,
        passive_one_handle: pas.one_handle,
        passive_handle: pas.handle,
        invariants_kept: before == after,
    });
    Ok(out)
}

/// Clears the defects of side 1, then of side 2, one swap per defective
/// handle in declaration order.
pub fn convex_decompose(dec: &Decomposition) -> Result<Decomposition, DecomposeError> {
    let mut out = dec.clone();
    for (pass, side) in [(1, Side::One), (2, Side::Two)] {
        let names: Vec<String> = out.side(side).two_handles().iter().map(|h| h.name.clone()).collect();
        for name in names {
            let i = out.side(side).handle_index(&name).expect("handle kept");
            let d = out.side(side).defect_handle(i)?;
            if d > 0 {
                out = swap_in_pass(&out, side, &name, d as usize, None, pass)?;
            }
        }
    }
    Ok(out)
}
