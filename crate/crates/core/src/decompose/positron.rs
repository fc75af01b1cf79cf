use serde::{Deserialize, Serialize};

use super::DecomposeError;
use crate::front::{ComponentId, OneHandleId};
use crate::handlebody::{handle_core, FramedHandle, Handlebody};
use crate::whitehead::{canonical_framing, whitehead_multiple, FramedComponent, WhiteheadParams};

/// W_n: one 1-handle and one 2-handle along the n-fold Whitehead multiple
/// of the 1-handle's core.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Positron {
    pub n: usize,
    pub realized: Handlebody,
}

pub fn positron(n: usize) -> Result<Positron, DecomposeError> {
    if n == 0 {
        return Err(DecomposeError::BadN);
    }
    let core = handle_core(OneHandleId(0));
    let wm = whitehead_multiple(&core, FramedComponent::new(ComponentId(0), 0), WhiteheadParams::new(n))?;
    let framing = canonical_framing(n, 0)?;
    let realized = Handlebody::new(
        vec!["c".into()],
        wm.front,
        vec![FramedHandle::new("w", wm.framed.component, framing)],
        1,
    )?;
    Ok(Positron { n, realized })
}
