use serde::{Deserialize, Serialize};

use super::{choose_k, passive_modification, positron, reduce_defect_step, DecomposeError, GluingMarker};
use crate::handlebody::{boundary_sum, Contractibility, Handlebody};

/// M1 = N u A1 and M2 = N u A2, with symbolic gluings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorkTriple {
    pub n: Handlebody,
    pub a1: Handlebody,
    pub a2: Handlebody,
    pub phi1: GluingMarker,
    pub phi2: GluingMarker,
}

impl CorkTriple {
    pub fn new(n: Handlebody, a1: Handlebody, a2: Handlebody) -> CorkTriple {
        CorkTriple { n, a1, a2, phi1: GluingMarker::new("phi1"), phi2: GluingMarker::new("phi2") }
    }

    fn piece(&self, p: Piece) -> &Handlebody {
        match p {
            Piece::N => &self.n,
            Piece::A1 => &self.a1,
            Piece::A2 => &self.a2,
        }
    }

    fn piece_mut(&mut self, p: Piece) -> &mut Handlebody {
        match p {
            Piece::N => &mut self.n,
            Piece::A1 => &mut self.a1,
            Piece::A2 => &mut self.a2,
        }
    }

    pub fn defect_totals(&self) -> [i64; 3] {
        [self.n.defect_total(), self.a1.defect_total(), self.a2.defect_total()]
    }

    fn chis(&self) -> [i64; 3] {
        [self.n.euler_characteristic(), self.a1.euler_characteristic(), self.a2.euler_characteristic()]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Piece {
    N,
    A1,
    A2,
}

const PIECES: [Piece; 3] = [Piece::N, Piece::A1, Piece::A2];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorkEntry {
    pub step: u8,
    pub active: Piece,
    pub handle: String,
    pub n: usize,
    pub k: usize,
    pub defect_before: i64,
    pub defect_after: i64,
    /// defect totals of (N, A1, A2) after the move
    pub totals_after: [i64; 3],
    pub chi_delta: [i64; 3],
    /// double of the positron W_k certified as a homotopy 4-sphere
    pub gate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleAudit {
    pub ledger: Vec<CorkEntry>,
    /// (chi(N~) + chi(A~_i), chi(N) + chi(A_i)) for i = 1, 2
    pub chi_identities: [(i64, i64); 2],
    pub chart_swap_equal: bool,
    pub corks_certified: (bool, bool),
    pub inputs_certified: (bool, bool),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorkReport {
    pub triples: [TripleAudit; 2],
    pub notice: String,
}

pub const GLUING_NOTICE: &str =
    "gluing maps are tracked as symbolic label pairs; identities are checked on chi, homology and records only";

/// Makes N and both corks of each triple defect free and rebuilds the
/// triples with N~ = N'' # (-A1''), A~1 = A1'' # A2'', A~2 = A2'' # A1''.
pub fn cork_pseudoconvexify(
    t1: &CorkTriple,
    t2: &CorkTriple,
    budget: usize,
) -> Result<(CorkTriple, CorkTriple, CorkReport), DecomposeError> {
    if t1.n != t2.n {
        return Err(DecomposeError::NMismatch);
    }
    let (o1, a1) = run_triple(t1, budget)?;
    let (o2, a2) = run_triple(t2, budget)?;
    Ok((o1, o2, CorkReport { triples: [a1, a2], notice: GLUING_NOTICE.to_string() }))
}

fn certified(h: &Handlebody, budget: usize) -> bool {
    h.is_contractible_certificate(budget).verdict == Contractibility::Yes
}

fn run_triple(t: &CorkTriple, budget: usize) -> Result<(CorkTriple, TripleAudit), DecomposeError> {
    let mut cur = t.clone();
    let mut ledger = Vec::new();
    let schedule = [(1, Piece::N), (2, Piece::A1), (2, Piece::A2)];
    for (step, active) in schedule {
        let names: Vec<String> = cur.piece(active).two_handles().iter().map(|h| h.name.clone()).collect();
        for name in names {
            let i = cur.piece(active).handle_index(&name).expect("handle kept");
            let d = cur.piece(active).defect_handle(i)?;
            if d > 0 {
                let entry = move_once(&mut cur, step, active, i, d as usize, budget)?;
                ledger.push(entry);
            }
        }
    }

    let n_tilde = boundary_sum(&cur.n, &cur.a1.reversed());
    let a1_tilde = boundary_sum(&cur.a1, &cur.a2);
    let a2_tilde = boundary_sum(&cur.a2, &cur.a1);
    let chart_swap_equal = a1_tilde.chart_swap().map_or(a1_tilde == a2_tilde, |s| s == a2_tilde);

    let chi_n = n_tilde.euler_characteristic();
    let chi_identities = [
        (chi_n + a1_tilde.euler_characteristic(), t.n.euler_characteristic() + t.a1.euler_characteristic()),
        (chi_n + a2_tilde.euler_characteristic(), t.n.euler_characteristic() + t.a2.euler_characteristic()),
    ];
    let mut phi1 = t.phi1.clone();
    phi1.pairs.push(("N~".into(), "A~1".into()));
    let mut phi2 = t.phi2.clone();
    phi2.pairs.push(("N~".into(), "A~2".into()));
    let audit = TripleAudit {
        ledger,
        chi_identities,
        chart_swap_equal,
        corks_certified: (certified(&a1_tilde, budget), certified(&a2_tilde, budget)),
        inputs_certified: (certified(&t.a1, budget), certified(&t.a2, budget)),
    };
    let out = CorkTriple { n: n_tilde, a1: a1_tilde, a2: a2_tilde, phi1, phi2 };
    Ok((out, audit))
}

/// Reduces one handle of `active`; the other two pieces take the passive
/// change so that N stays shared between M1 and M2.
fn move_once(
    cur: &mut CorkTriple,
    step: u8,
    active: Piece,
    i: usize,
    n: usize,
    budget: usize,
) -> Result<CorkEntry, DecomposeError> {
    let chis = cur.chis();
    let probe = passive_modification(cur.piece(active), n, 3)?;
    let trial = reduce_defect_step(cur.piece(active), i, n, 3)?;
    let k = choose_k(probe.pattern_defect.max(trial.defect_after))?;
    let gate = positron(k)?.realized.double_check(budget).s4_compatible;
    if !gate {
        return Err(DecomposeError::Uncertified(format!("double of W_{k} not certified")));
    }
    let red = reduce_defect_step(cur.piece(active), i, n, k)?;
    let handle = red.handle.clone();
    *cur.piece_mut(active) = red.handlebody;
    for p in PIECES.into_iter().filter(|&p| p != active) {
        let pas = passive_modification(cur.piece(p), n, k)?;
        *cur.piece_mut(p) = pas.handlebody;
    }
    let after = cur.chis();
    Ok(CorkEntry {
        step,
        active,
        handle,
        n,
        k,
        defect_before: red.defect_before,
        defect_after: red.defect_after,
        totals_after: cur.defect_totals(),
        chi_delta: [after[0] - chis[0], after[1] - chis[1], after[2] - chis[2]],
        gate,
    })
}
