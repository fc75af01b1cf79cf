//! Defect reduction and the decomposition drivers built on it.

mod convex;
mod cork;
mod corollary;
mod positron;
mod reduce;

pub use convex::{convex_decompose, swap_move, Decomposition, DefectLedger, GluingMarker, LedgerEntry, Side};
pub use cork::{cork_pseudoconvexify, CorkEntry, CorkReport, CorkTriple, Piece, TripleAudit, GLUING_NOTICE};
pub use corollary::{contractible_piece, ContractiblePiece};
pub use positron::{positron, Positron};
pub use reduce::{passive_modification, reduce_defect_step, PassiveRecord, Reduction};

use crate::front::FrontError;
use crate::group::Obstruction;
use crate::handlebody::HandlebodyError;
use crate::whitehead::WhiteheadError;

/// Largest k tried when choosing the positron size.
pub const K_CAP: usize = 99;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecomposeError {
    #[error("k must be odd and at least 3, got {0}")]
    BadK(usize),
    #[error("n must be at least 1")]
    BadN,
    #[error("no 2-handle named {0}")]
    UnknownHandle(String),
    #[error("handle {0} already has defect 0")]
    NoDefect(String),
    #[error("no odd k <= {cap} satisfies the bound {required}")]
    KInfeasible { required: i64, cap: usize },
    #[error("contractibility not certified: {0}")]
    Uncertified(String),
    #[error("cork triples do not share the same N")]
    NMismatch,
    #[error("word search gave up: {0}")]
    Unknown(Obstruction),
    #[error(transparent)]
    Handlebody(#[from] HandlebodyError),
    #[error(transparent)]
    Whitehead(#[from] WhiteheadError),
    #[error(transparent)]
    Front(#[from] FrontError),
}

/// Smallest odd k with k >= max(3, required), capped.
pub fn choose_k(required: i64) -> Result<usize, DecomposeError> {
    let mut k = required.max(3) as usize;
    if k.is_multiple_of(2) {
        k += 1;
    }
    if k > K_CAP {
        return Err(DecomposeError::KInfeasible { required, cap: K_CAP });
    }
    Ok(k)
}

pub(crate) fn check_k(k: usize) -> Result<(), DecomposeError> {
    if k < 3 || k.is_multiple_of(2) {
        Err(DecomposeError::BadK(k))
    } else {
        Ok(())
    }
}

/// Slice-Bennequin type bound `(tb - f) + |rot| <= -chi` for a surface
/// with Euler characteristic `chi <= 1`.
pub fn bennequin_check(tb: i64, f: i64, rot: i64, chi: i64) -> bool {
    (tb - f) + rot.abs() <= -chi
}

/// Adjunction inequality `-chi >= F.F + K.F`.
pub fn adjunction_check(chi: i64, self_int: i64, k_dot_f: i64) -> bool {
    -chi >= self_int + k_dot_f
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_choice() {
        assert_eq!(choose_k(0).unwrap(), 3);
        assert_eq!(choose_k(4).unwrap(), 5);
        assert_eq!(choose_k(7).unwrap(), 7);
        assert!(choose_k(100).is_err());
        assert!(check_k(4).is_err());
        assert!(check_k(1).is_err());
    }

    #[test]
    fn inequalities() {
        assert!(bennequin_check(-1, 0, 0, 1));
        assert!(!bennequin_check(-1, -1, 0, 1));
        assert!(!adjunction_check(2, 0, 0));
        assert!(adjunction_check(0, 0, 0));
        assert!(adjunction_check(-2, 1, 1));
    }
}
