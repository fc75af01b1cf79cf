use serde::{Deserialize, Serialize};

use super::{check_k, DecomposeError};
use crate::front::{ComponentId, FrontDiagram, OneHandleId};
use crate::handlebody::{handle_core, FramedHandle, Handlebody};
use crate::whitehead::{canonical_framing, whitehead_multiple, FramedComponent, WhiteheadParams};

/// One defect reduction on the active side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reduction {
    pub handlebody: Handlebody,
    pub handle: String,
    pub one_handle: String,
    pub positron_handle: String,
    pub n: usize,
    pub k: usize,
    pub tb_before: i64,
    pub tb_after: i64,
    pub defect_before: i64,
    pub defect_after: i64,
}

/// What the passive side received in a swap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PassiveRecord {
    pub handlebody: Handlebody,
    pub one_handle: String,
    pub handle: String,
    pub n: usize,
    pub k: usize,
    /// tb of the pattern knot before the positron is summed in.
    pub pattern_tb: i64,
    pub pattern_defect: i64,
}

fn multiple_of_core(h: OneHandleId, n: usize) -> Result<FrontDiagram, DecomposeError> {
    let wm = whitehead_multiple(&handle_core(h), FramedComponent::new(ComponentId(0), 0), WhiteheadParams::new(n))?;
    Ok(wm.front)
}

/// Adds a 1-handle c, sums P_n(core c) into the attaching knot of handle
/// `i` (raising tb by n), and cancels the new generator with a 2-handle
/// along P_k(core c).
pub fn reduce_defect_step(h: &Handlebody, i: usize, n: usize, k: usize) -> Result<Reduction, DecomposeError> {
    if n == 0 {
        return Err(DecomposeError::BadN);
    }
    check_k(k)?;
    let target = h.handle(i)?.clone();
    let defect_before = h.defect_handle(i)?;
    if defect_before == 0 {
        return Err(DecomposeError::NoDefect(target.name));
    }
    let tb_before = h.front().tb(target.component())?;

    let mut out = h.clone();
    let one_handle = out.fresh_name("c");
    let c = out.push_one_handle(one_handle.clone());
    let summed = h.front().connected_sum(target.component(), &multiple_of_core(c, n)?)?;
    let pk = multiple_of_core(c, k)?;
    let comp = ComponentId(summed.component_count());
    let front = summed.juxtapose(&pk);
    let positron_handle = out.fresh_name("w");
    let out = out.rebuild(front, vec![FramedHandle::new(positron_handle.clone(), comp, canonical_framing(k, 0)?)])?;

    let tb_after = out.front().tb(target.component())?;
    let defect_after = out.defect_handle(i)?;
    Ok(Reduction {
        handlebody: out,
        handle: target.name,
        one_handle,
        positron_handle,
        n,
        k,
        tb_before,
        tb_after,
        defect_before,
        defect_after,
    })
}

/// The companion change on a passive side: a 1-handle e and a 2-handle
/// along P_n(unknot, 0) # P_k(core e), framed 0.
pub fn passive_modification(h: &Handlebody, n: usize, k: usize) -> Result<PassiveRecord, DecomposeError> {
    if n == 0 {
        return Err(DecomposeError::BadN);
    }
    check_k(k)?;
    let mut out = h.clone();
    let one_handle = out.fresh_name("e");
    let e = out.push_one_handle(one_handle.clone());
    let framing = canonical_framing(n, 0)?;
    let pattern =
        whitehead_multiple(&FrontDiagram::unknot(), FramedComponent::new(ComponentId(0), 0), WhiteheadParams::new(n))?;
    let lg = pattern.front;
    let pattern_tb = lg.tb(ComponentId(0))?;
    let g_front = lg.connected_sum(ComponentId(0), &multiple_of_core(e, k)?)?;
    let comp = ComponentId(h.front().component_count());
    let front = h.front().juxtapose(&g_front);
    let handle = out.fresh_name("g");
    let out = out.rebuild(front, vec![FramedHandle::new(handle.clone(), comp, framing)])?;
    Ok(PassiveRecord {
        handlebody: out,
        one_handle,
        handle,
        n,
        k,
        pattern_tb,
        pattern_defect: (framing + 1 - pattern_tb).max(0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::handlebody::unknot_handlebody;

    #[test]
    fn reduction_raises_tb_by_n() {
        let h = unknot_handlebody(3);
        assert_eq!(h.defect_total(), 5);
        let r = reduce_defect_step(&h, 0, 2, 3).unwrap();
        assert_eq!(r.tb_after - r.tb_before, 2);
        assert_eq!(r.defect_after, 3);
        assert_eq!(r.handlebody.euler_characteristic(), h.euler_characteristic());
        assert_eq!(r.handlebody.one_handles().len(), 1);
        assert_eq!(r.handlebody.two_handles().len(), 2);
        assert_eq!(r.handlebody.defect_total(), 3);
        let r = reduce_defect_step(&r.handlebody, 0, 3, 5).unwrap();
        assert_eq!(r.defect_after, 0);
        assert!(r.handlebody.pc_certificate().is_pc());
        assert!(r.handlebody.homology().h1_trivial());
    }

    #[test]
    fn reduction_rejects_bad_input() {
        let h = unknot_handlebody(3);
        assert_eq!(reduce_defect_step(&h, 0, 1, 4), Err(DecomposeError::BadK(4)));
        assert_eq!(reduce_defect_step(&h, 0, 0, 3), Err(DecomposeError::BadN));
        assert!(matches!(reduce_defect_step(&unknot_handlebody(-2), 0, 1, 3), Err(DecomposeError::NoDefect(_))));
    }

    #[test]
    fn passive_side_stays_balanced() {
        let h = unknot_handlebody(-2);
        let p = passive_modification(&h, 3, 3).unwrap();
        assert_eq!(p.pattern_tb, -1);
        assert_eq!(p.pattern_defect, 2);
        assert_eq!(p.handlebody.euler_characteristic(), h.euler_characteristic());
        assert_eq!(p.handlebody.defect_total(), 0);
        assert!(p.handlebody.homology().h1_trivial());
    }
}
