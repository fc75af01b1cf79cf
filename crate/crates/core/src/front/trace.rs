use serde::{Deserialize, Serialize};

use super::{BallSide, ComponentId, Event, FrontDiagram, FrontError, OneHandleId, Orientation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    Right,
    Left,
}

impl Direction {
    pub fn flipped(self) -> Direction {
        match self {
            Direction::Right => Direction::Left,
            Direction::Left => Direction::Right,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CuspKind {
    /// Traversal passes the cusp moving to the higher slot.
    Up,
    /// Traversal passes the cusp moving to the lower slot.
    Down,
}

/// A resolved crossing: which component is in front, and its sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub event: usize,
    pub over: ComponentId,
    pub under: ComponentId,
    pub sign: i8,
}

/// Planar link diagram obtained from a front by the slope convention.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolvedDiagram {
    pub events: Vec<Event>,
    pub orientations: Vec<Orientation>,
    pub crossings: Vec<Crossing>,
}

impl ResolvedDiagram {
    /// Re-encodes the resolved diagram as a front.
    pub fn encode(&self) -> Result<FrontDiagram, FrontError> {
        FrontDiagram::with_orientations(self.events.clone(), self.orientations.clone())
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }
}

/// Strand-level bookkeeping for a valid event word: which component owns
/// every segment and in which direction it is traversed.
#[derive(Debug, Clone)]
pub struct Tracing {
    events: Vec<Event>,
    counts: Vec<usize>,
    offsets: Vec<usize>,
    seg_comp: Vec<usize>,
    seg_dir: Vec<Direction>,
    first_events: Vec<usize>,
    partner: Vec<Option<usize>>,
    passages: Vec<Vec<(OneHandleId, i8)>>,
}

impl Tracing {
    pub fn new(events: &[Event]) -> Tracing {
        Tracing::build(events, &[])
    }

    pub fn with_orientations(events: &[Event], orientations: &[Orientation]) -> Tracing {
        Tracing::build(events, orientations)
    }

    fn build(events: &[Event], orientations: &[Orientation]) -> Tracing {
        let mut counts = Vec::with_capacity(events.len() + 1);
        let mut open = 0usize;
        counts.push(0);
        for e in events {
            open = (open as isize + e.delta()) as usize;
            counts.push(open);
        }
        let mut offsets = Vec::with_capacity(counts.len() + 1);
        let mut acc = 0;
        for &c in &counts {
            offsets.push(acc);
            acc += c;
        }
        offsets.push(acc);

        let partner = pair_passes(events);
        let mut t = Tracing {
            events: events.to_vec(),
            counts,
            offsets,
            seg_comp: vec![usize::MAX; acc],
            seg_dir: vec![Direction::Right; acc],
            first_events: Vec::new(),
            partner,
            passages: Vec::new(),
        };

        for p in 0..events.len() {
            let creates = matches!(
                events[p],
                Event::LeftCusp(_) | Event::HandlePass { side: BallSide::Left, .. }
            );
            if !creates {
                continue;
            }
            let slot = events[p].slot();
            if t.seg_comp[t.seg(p + 1, slot)] != usize::MAX {
                continue;
            }
            let comp = t.first_events.len();
            t.first_events.push(p);
            let mut passages = Vec::new();
            let start = (p + 1, slot, Direction::Right);
            let mut state = start;
            loop {
                let idx = t.seg(state.0, state.1);
                t.seg_comp[idx] = comp;
                t.seg_dir[idx] = state.2;
                let (next, pass) = t.step(state);
                if let Some(pass) = pass {
                    passages.push(pass);
                }
                state = next;
                if state == start {
                    break;
                }
            }
            t.passages.push(passages);
        }

        for (comp, o) in orientations.iter().enumerate() {
            if *o == Orientation::Reversed {
                for idx in 0..t.seg_comp.len() {
                    if t.seg_comp[idx] == comp {
                        t.seg_dir[idx] = t.seg_dir[idx].flipped();
                    }
                }
                let p = &mut t.passages[comp];
                p.reverse();
                for entry in p.iter_mut() {
                    entry.1 = -entry.1;
                }
            }
        }
        t
    }

    fn seg(&self, col: usize, slot: usize) -> usize {
        debug_assert!(slot < self.counts[col], "segment ({col}, {slot}) out of range");
        self.offsets[col] + slot
    }

    /// Moves one event along the strand. Returns the handle passage crossed,
    /// if any.
    fn step(
        &self,
        (col, slot, dir): (usize, usize, Direction),
    ) -> ((usize, usize, Direction), Option<(OneHandleId, i8)>) {
        use Direction::*;
        match dir {
            Right => {
                let e = self.events[col];
                match e {
                    Event::LeftCusp(i) => {
                        let s = if slot < i { slot } else { slot + 2 };
                        ((col + 1, s, Right), None)
                    }
                    Event::RightCusp(i) => {
                        if slot == i {
                            ((col, i + 1, Left), None)
                        } else if slot == i + 1 {
                            ((col, i, Left), None)
                        } else if slot < i {
                            ((col + 1, slot, Right), None)
                        } else {
                            ((col + 1, slot - 2, Right), None)
                        }
                    }
                    Event::Crossing(i) => {
                        let s = if slot == i {
                            i + 1
                        } else if slot == i + 1 {
                            i
                        } else {
                            slot
                        };
                        ((col + 1, s, Right), None)
                    }
                    Event::HandlePass { slot: i, side: BallSide::Left, .. } => {
                        let s = if slot < i { slot } else { slot + 1 };
                        ((col + 1, s, Right), None)
                    }
                    Event::HandlePass { slot: i, handle, side: BallSide::Right } => {
                        if slot == i {
                            let q = self.partner[col].expect("paired handle pass");
                            let s = self.events[q].slot();
                            ((q + 1, s, Right), Some((handle, 1)))
                        } else if slot < i {
                            ((col + 1, slot, Right), None)
                        } else {
                            ((col + 1, slot - 1, Right), None)
                        }
                    }
                }
            }
            Left => {
                let p = col - 1;
                let e = self.events[p];
                match e {
                    Event::LeftCusp(i) => {
                        if slot == i {
                            ((col, i + 1, Right), None)
                        } else if slot == i + 1 {
                            ((col, i, Right), None)
                        } else if slot < i {
                            ((p, slot, Left), None)
                        } else {
                            ((p, slot - 2, Left), None)
                        }
                    }
                    Event::RightCusp(i) => {
                        let s = if slot < i { slot } else { slot + 2 };
                        ((p, s, Left), None)
                    }
                    Event::Crossing(i) => {
                        let s = if slot == i {
                            i + 1
                        } else if slot == i + 1 {
                            i
                        } else {
                            slot
                        };
                        ((p, s, Left), None)
                    }
                    Event::HandlePass { slot: i, handle, side: BallSide::Left } => {
                        if slot == i {
                            let q = self.partner[p].expect("paired handle pass");
                            let s = self.events[q].slot();
                            ((q, s, Left), Some((handle, -1)))
                        } else if slot < i {
                            ((p, slot, Left), None)
                        } else {
                            ((p, slot - 1, Left), None)
                        }
                    }
                    Event::HandlePass { slot: i, side: BallSide::Right, .. } => {
                        let s = if slot < i { slot } else { slot + 1 };
                        ((p, s, Left), None)
                    }
                }
            }
        }
    }

    pub fn component_count(&self) -> usize {
        self.first_events.len()
    }

    pub fn column_count(&self, col: usize) -> usize {
        self.counts[col]
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn component_at(&self, col: usize, slot: usize) -> ComponentId {
        ComponentId(self.seg_comp[self.seg(col, slot)])
    }

    pub fn direction_at(&self, col: usize, slot: usize) -> Direction {
        self.seg_dir[self.seg(col, slot)]
    }

    pub fn first_event(&self, c: ComponentId) -> usize {
        self.first_events[c.0]
    }

    pub fn last_event(&self, c: ComponentId) -> usize {
        (0..self.events.len())
            .rev()
            .find(|&p| self.event_touches(p, c))
            .expect("component has events")
    }

    /// Does event `p` act on a strand of `c`?
    pub fn event_touches(&self, p: usize, c: ComponentId) -> bool {
        let (lo, hi) = self.events[p].input_range();
        let (olo, ohi) = self.events[p].output_range();
        (lo..hi).any(|s| self.component_at(p, s) == c)
            || (olo..ohi).any(|s| self.component_at(p + 1, s) == c)
    }

    /// Component whose strand is created by event `q`, when `q` opens strands.
    pub fn component_created_at(&self, q: usize) -> Option<ComponentId> {
        match self.events.get(q)? {
            Event::LeftCusp(s) | Event::HandlePass { slot: s, side: BallSide::Left, .. } => {
                Some(self.component_at(q + 1, *s))
            }
            _ => None,
        }
    }

    pub fn created_direction(&self, q: usize) -> Option<Direction> {
        match self.events.get(q)? {
            Event::LeftCusp(s) | Event::HandlePass { slot: s, side: BallSide::Left, .. } => {
                Some(self.direction_at(q + 1, *s))
            }
            _ => None,
        }
    }

    /// Slots of `c` in column `col`, lowest first.
    pub fn slots_of(&self, col: usize, c: ComponentId) -> Vec<usize> {
        (0..self.counts[col]).filter(|&s| self.component_at(col, s) == c).collect()
    }

    pub fn cusp_kind(&self, p: usize) -> Option<CuspKind> {
        match self.events[p] {
            Event::LeftCusp(i) => Some(match self.direction_at(p + 1, i) {
                Direction::Left => CuspKind::Up,
                Direction::Right => CuspKind::Down,
            }),
            Event::RightCusp(i) => Some(match self.direction_at(p, i) {
                Direction::Right => CuspKind::Up,
                Direction::Left => CuspKind::Down,
            }),
            _ => None,
        }
    }

    pub fn cusp_component(&self, p: usize) -> Option<ComponentId> {
        match self.events[p] {
            Event::LeftCusp(i) => Some(self.component_at(p + 1, i)),
            Event::RightCusp(i) => Some(self.component_at(p, i)),
            _ => None,
        }
    }

    pub fn crossing(&self, p: usize) -> Option<Crossing> {
        let Event::Crossing(i) = self.events[p] else { return None };
        let under = self.component_at(p, i);
        let over = self.component_at(p, i + 1);
        let sign = if self.direction_at(p, i) == self.direction_at(p, i + 1) { 1 } else { -1 };
        Some(Crossing { event: p, over, under, sign })
    }

    pub fn crossings(&self) -> impl Iterator<Item = Crossing> + '_ {
        (0..self.events.len()).filter_map(|p| self.crossing(p))
    }

    /// Handle passages of `c` in traversal order; `+1` for entering a right ball.
    pub fn passages(&self, c: ComponentId) -> &[(OneHandleId, i8)] {
        &self.passages[c.0]
    }
}

fn pair_passes(events: &[Event]) -> Vec<Option<usize>> {
    use std::collections::BTreeMap;
    let mut lefts: BTreeMap<OneHandleId, Vec<usize>> = BTreeMap::new();
    let mut rights: BTreeMap<OneHandleId, Vec<usize>> = BTreeMap::new();
    for (p, e) in events.iter().enumerate() {
        if let Event::HandlePass { handle, side, .. } = e {
            match side {
                BallSide::Left => lefts.entry(*handle).or_default().push(p),
                BallSide::Right => rights.entry(*handle).or_default().push(p),
            }
        }
    }
    let mut partner = vec![None; events.len()];
    for (h, ls) in &lefts {
        if let Some(rs) = rights.get(h) {
            for (&l, &r) in ls.iter().zip(rs) {
                partner[l] = Some(r);
                partner[r] = Some(l);
            }
        }
    }
    partner
}

impl FrontDiagram {
    pub fn resolve(&self) -> Result<ResolvedDiagram, FrontError> {
        if let super::ValidationReport::Fail { index, reason } = self.validate() {
            return Err(FrontError::Invalid { index, reason });
        }
        let t = self.tracing();
        Ok(ResolvedDiagram {
            events: self.events().to_vec(),
            orientations: self.orientations().to_vec(),
            crossings: t.crossings().collect(),
        })
    }

    /// Sum of self-crossing signs of `c`.
    pub fn writhe(&self, c: ComponentId) -> Result<i64, FrontError> {
        self.check_component(c)?;
        Ok(self
            .tracing()
            .crossings()
            .filter(|x| x.over == c && x.under == c)
            .map(|x| x.sign as i64)
            .sum())
    }

    pub fn cusp_count(&self, c: ComponentId) -> Result<usize, FrontError> {
        self.check_component(c)?;
        let t = self.tracing();
        Ok((0..self.len()).filter(|&p| t.cusp_component(p) == Some(c)).count())
    }

    /// Half the signed count of crossings between `a` and `b`.
    pub fn linking_number(&self, a: ComponentId, b: ComponentId) -> Result<i64, FrontError> {
        self.check_component(a)?;
        self.check_component(b)?;
        if a == b {
            return Err(FrontError::SameComponent);
        }
        let twice: i64 = self
            .tracing()
            .crossings()
            .filter(|x| (x.over == a && x.under == b) || (x.over == b && x.under == a))
            .map(|x| x.sign as i64)
            .sum();
        if twice % 2 != 0 {
            return Err(FrontError::NonIntegralLinking(a, b));
        }
        Ok(twice / 2)
    }

    /// Thurston-Bennequin number: writhe minus half the cusp count.
    pub fn tb(&self, c: ComponentId) -> Result<i64, FrontError> {
        Ok(self.writhe(c)? - (self.cusp_count(c)? / 2) as i64)
    }

    /// Rotation number: half of (down cusps - up cusps).
    pub fn rot(&self, c: ComponentId) -> Result<i64, FrontError> {
        self.check_component(c)?;
        let t = self.tracing();
        let mut balance = 0i64;
        for p in 0..self.len() {
            if t.cusp_component(p) == Some(c) {
                balance += match t.cusp_kind(p).expect("cusp") {
                    CuspKind::Down => 1,
                    CuspKind::Up => -1,
                };
            }
        }
        debug_assert!(balance % 2 == 0);
        Ok(balance / 2)
    }

    /// Signed passes of `c` through 1-handle `h` (entering the right ball is +1).
    pub fn handle_multiplicity(&self, c: ComponentId, h: OneHandleId) -> Result<i64, FrontError> {
        self.check_component(c)?;
        Ok(self
            .tracing()
            .passages(c)
            .iter()
            .filter(|(hh, _)| *hh == h)
            .map(|(_, s)| *s as i64)
            .sum())
    }

    /// Handle passages of `c` in traversal order.
    pub fn handle_word(&self, c: ComponentId) -> Result<Vec<(OneHandleId, i8)>, FrontError> {
        self.check_component(c)?;
        Ok(self.tracing().passages(c).to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> FrontDiagram {
        s.parse().unwrap()
    }

    // Right-handed trefoil: three positive crossings and four cusps.
    const TREFOIL: &str = "Lc0 Lc2 X1 X1 X1 Rc2 Rc0";

    #[test]
    fn unknot_invariants() {
        let u = FrontDiagram::unknot();
        let c = ComponentId(0);
        assert_eq!(u.writhe(c).unwrap(), 0);
        assert_eq!(u.tb(c).unwrap(), -1);
        assert_eq!(u.rot(c).unwrap(), 0);
    }

    #[test]
    fn trefoil_front() {
        let t = f(TREFOIL);
        assert_eq!(t.component_count(), 1);
        assert_eq!(t.writhe(ComponentId(0)).unwrap(), 3);
        assert_eq!(t.tb(ComponentId(0)).unwrap(), 1);
        assert_eq!(t.rot(ComponentId(0)).unwrap(), 0);
    }

    #[test]
    fn unknot_resolves_without_crossings() {
        let r = FrontDiagram::unknot().resolve().unwrap();
        assert_eq!(r.crossing_count(), 0);
    }

    #[test]
    fn clasp_crossings_resolve_alike() {
        // two unknots clasped: Lc0 Lc2 X1 X1 Rc2 Rc0 nests nothing, so build a
        // genuine clasp between stacked unknots
        let fr = f("Lc0 Lc2 X1 X1 Rc2 Rc0");
        let r = fr.resolve().unwrap();
        assert_eq!(r.crossing_count(), 2);
        assert_eq!(r.crossings[0].sign, r.crossings[1].sign);
        assert_eq!(r.crossings[0].over, r.crossings[1].under);
    }

    #[test]
    fn resolve_round_trips_through_encoding() {
        let fr = f(TREFOIL);
        let r = fr.resolve().unwrap();
        assert_eq!(r.encode().unwrap().resolve().unwrap(), r);
    }

    #[test]
    fn split_unknots_do_not_link() {
        let fr = f("Lc0 Rc0 Lc0 Rc0");
        assert_eq!(fr.component_count(), 2);
        assert_eq!(fr.linking_number(ComponentId(0), ComponentId(1)).unwrap(), 0);
        assert!(matches!(
            fr.linking_number(ComponentId(0), ComponentId(0)),
            Err(FrontError::SameComponent)
        ));
    }

    #[test]
    fn reversal_keeps_writhe_and_negates_rot() {
        let fr = f("Lc0 Lc1 Rc0 Rc0"); // stabilized unknot: zig-zag on the upper strand
        let c = ComponentId(0);
        let rev = fr.reversed(c).unwrap();
        assert_eq!(fr.writhe(c).unwrap(), rev.writhe(c).unwrap());
        assert_eq!(fr.rot(c).unwrap(), -rev.rot(c).unwrap());
        assert_eq!(fr.rot(c).unwrap().abs(), 1);
    }

    #[test]
    fn handle_core_has_tb_zero() {
        let core = f("HpL0:0 HpR0:0");
        let c = ComponentId(0);
        assert_eq!(core.tb(c).unwrap(), 0);
        assert_eq!(core.handle_multiplicity(c, OneHandleId(0)).unwrap(), 1);
        assert_eq!(core.handle_word(c).unwrap(), vec![(OneHandleId(0), 1)]);
    }
}
