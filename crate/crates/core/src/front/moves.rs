use serde::{Deserialize, Serialize};

use super::{ComponentId, Direction, Event, FrontDiagram, FrontError};
use Event::{Crossing as X, LeftCusp as Lc, RightCusp as Rc};

/// Legendrian front moves, written as rewrites of the event word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FrontMove {
    /// Swap the events at `site` and `site + 1`; they must act on disjoint slots.
    Commute,
    /// Insert a fish (left cusp, crossing, right cusp) on the strand at `slot`
    /// of column `site`, opening above the strand or below it.
    Fish { slot: usize, below: bool },
    /// Remove the fish that starts at `site`.
    Unfish,
    /// Push the cusp at `site` through the neighbouring strand.
    CuspThrough { downward: bool },
    /// Pull a cusp back out of the strand it was pushed through.
    CuspBack,
    /// Triple-point move on the three crossings starting at `site`.
    Triple,
}

impl FrontDiagram {
    /// Applies one front move. Classical invariants are unchanged.
    pub fn front_move(&self, mv: FrontMove, site: usize) -> Result<FrontDiagram, FrontError> {
        let not_applicable = || FrontError::MoveNotApplicable { mv, site };
        let ev = self.events();
        let n = ev.len();
        let get = |k: usize| ev.get(k).copied();
        let column = |col: usize| -> usize {
            ev[..col].iter().fold(0isize, |acc, e| acc + e.delta()) as usize
        };

        // (replacement, length replaced, index map inside the window)
        let (replacement, width, inner): (Vec<Event>, usize, Vec<Option<usize>>) = match mv {
            FrontMove::Commute => {
                let (a, b) = (get(site).ok_or_else(not_applicable)?, get(site + 1).ok_or_else(not_applicable)?);
                let (first, second) = commute(a, b).ok_or_else(not_applicable)?;
                (vec![first, second], 2, vec![Some(1), Some(0)])
            }
            FrontMove::Fish { slot, below } => {
                if site > n || slot >= column(site) {
                    return Err(not_applicable());
                }
                let fish = if below {
                    vec![Lc(slot), X(slot + 1), Rc(slot)]
                } else {
                    vec![Lc(slot + 1), X(slot), Rc(slot + 1)]
                };
                (fish, 0, vec![])
            }
            FrontMove::Unfish => {
                let w = [get(site), get(site + 1), get(site + 2)];
                let ok = match w {
                    [Some(Lc(a)), Some(X(b)), Some(Rc(c))] => {
                        (a == c && a == b + 1) || (a == c && b == a + 1)
                    }
                    _ => false,
                };
                if !ok {
                    return Err(not_applicable());
                }
                (vec![], 3, vec![None, None, None])
            }
            FrontMove::CuspThrough { downward } => {
                let count = column(site);
                let e = get(site).ok_or_else(not_applicable)?;
                let rep = match (e, downward) {
                    (Lc(j), true) if j >= 1 => vec![Lc(j - 1), X(j), X(j - 1)],
                    (Lc(j), false) if j < count => vec![Lc(j + 1), X(j), X(j + 1)],
                    (Rc(j), true) if j >= 1 => vec![X(j - 1), X(j), Rc(j - 1)],
                    (Rc(j), false) if j + 2 < count => vec![X(j + 1), X(j), Rc(j + 1)],
                    _ => return Err(not_applicable()),
                };
                let inner = if matches!(e, Lc(_)) { vec![Some(0)] } else { vec![Some(2)] };
                (rep, 1, inner)
            }
            FrontMove::CuspBack => {
                let w = [get(site), get(site + 1), get(site + 2)];
                let (rep, inner) = match w {
                    [Some(Lc(i)), Some(X(a)), Some(X(b))] if a == i + 1 && b == i => {
                        (Lc(i + 1), vec![Some(0), None, None])
                    }
                    [Some(Lc(j)), Some(X(a)), Some(X(b))] if j >= 1 && a == j - 1 && b == j => {
                        (Lc(j - 1), vec![Some(0), None, None])
                    }
                    [Some(X(a)), Some(X(b)), Some(Rc(i))] if a == i && b == i + 1 => {
                        (Rc(i + 1), vec![None, None, Some(0)])
                    }
                    [Some(X(a)), Some(X(b)), Some(Rc(j))] if j >= 1 && a == j && b == j - 1 => {
                        (Rc(j - 1), vec![None, None, Some(0)])
                    }
                    _ => return Err(not_applicable()),
                };
                (vec![rep], 3, inner)
            }
            FrontMove::Triple => {
                let w = [get(site), get(site + 1), get(site + 2)];
                let rep = match w {
                    [Some(X(a)), Some(X(b)), Some(X(c))] if a == c && b == a + 1 => {
                        vec![X(b), X(a), X(b)]
                    }
                    [Some(X(a)), Some(X(b)), Some(X(c))] if a == c && a == b + 1 => {
                        vec![X(b), X(a), X(b)]
                    }
                    _ => return Err(not_applicable()),
                };
                (rep, 3, vec![Some(0), Some(1), Some(2)])
            }
        };

        let added = replacement.len();
        let mut events = Vec::with_capacity(n + added);
        events.extend_from_slice(&ev[..site]);
        events.extend(replacement);
        events.extend_from_slice(&ev[site + width..]);
        self.derive(events, |p| {
            if p < site {
                Some(p)
            } else if p < site + width {
                inner[p - site].map(|k| site + k)
            } else {
                Some(p - width + added)
            }
        })
    }

    /// Inserts a zig-zag on `c`: tb drops by one and rot moves by `sign`.
    pub fn stabilize(&self, c: ComponentId, sign: i8) -> Result<FrontDiagram, FrontError> {
        self.check_component(c)?;
        let t = self.tracing();
        let p0 = t.first_event(c);
        let slot = self.events()[p0].slot();
        let dir = t.direction_at(p0 + 1, slot);
        // a "down" zig-zag adds two down cusps when traversed rightward
        let down = (sign > 0) == (dir == Direction::Right);
        let zig = if down { [Lc(slot), Rc(slot + 1)] } else { [Lc(slot + 1), Rc(slot)] };
        let at = p0 + 1;
        let mut events = self.events().to_vec();
        events.splice(at..at, zig);
        self.derive(events, |p| Some(if p < at { p } else { p + 2 }))
    }

    /// Stabilizes `c` until its tb equals `target`, alternating signs.
    pub fn legendrianize_to(&self, c: ComponentId, target: i64) -> Result<FrontDiagram, FrontError> {
        let current = self.tb(c)?;
        if target > current {
            return Err(FrontError::CannotRaiseTb { current, target });
        }
        let mut out = self.clone();
        for k in 0..(current - target) {
            out = out.stabilize(c, if k % 2 == 0 { 1 } else { -1 })?;
        }
        Ok(out)
    }
}

/// Swaps two adjacent events acting on disjoint slot ranges, adjusting slots.
pub(crate) fn commute(a: Event, b: Event) -> Option<(Event, Event)> {
    if let (
        Event::HandlePass { handle: ha, side: sa, .. },
        Event::HandlePass { handle: hb, side: sb, .. },
    ) = (a, b)
    {
        // swapping would change the pairing of passes through the handle
        if ha == hb && sa == sb {
            return None;
        }
    }
    let (a0, a1) = a.output_range();
    let (b0, b1) = b.input_range();
    let both_empty = a0 == a1 && b0 == b1;
    if b1 <= a0 && !(both_empty && b0 == a0) {
        // b lies below a
        let shifted = (a.slot() as isize + b.delta()) as usize;
        Some((b, a.with_slot(shifted)))
    } else if b0 >= a1 && !(both_empty && b0 == a0) {
        let shifted = b.slot() as isize - a.delta();
        if shifted < 0 {
            return None;
        }
        Some((b.with_slot(shifted as usize), a))
    } else {
        None
    }
}
