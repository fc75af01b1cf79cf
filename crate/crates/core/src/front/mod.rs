//! Legendrian fronts encoded as Morse-event words.
//!
//! A front is read left to right. Between consecutive events sits a column of
//! strands numbered by height (slot 0 is the lowest). Each event touches a few
//! adjacent slots:
//!
//! * `Lc i` opens a left cusp whose branches occupy slots `i` and `i + 1`;
//! * `Rc i` closes the strands in slots `i` and `i + 1` with a right cusp;
//! * `X i` crosses the strands in slots `i` and `i + 1`; the strand moving
//!   down (smaller slope) passes over;
//! * `HpL i:h` is a strand leaving the left ball of 1-handle `h` at slot `i`,
//!   `HpR i:h` a strand entering its right ball.
//!
//! Handle passes of one handle are paired in word order: the k-th `HpL` of
//! `h` continues the strand that went into the k-th `HpR` of `h`.

mod edit;
mod moves;
mod trace;

pub mod random;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use moves::FrontMove;
pub use trace::{Crossing, CuspKind, Direction, ResolvedDiagram, Tracing};

/// Index of a 1-handle inside a handlebody (or a bare front).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct OneHandleId(pub usize);

/// Index of a knot component in canonical order (order of first appearance).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ComponentId(pub usize);

impl fmt::Display for ComponentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BallSide {
    /// Strand emerges from the left ball (opens a strand).
    Left,
    /// Strand enters the right ball (closes a strand).
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Event {
    LeftCusp(usize),
    RightCusp(usize),
    Crossing(usize),
    HandlePass { slot: usize, handle: OneHandleId, side: BallSide },
}

impl Event {
    pub fn slot(&self) -> usize {
        match *self {
            Event::LeftCusp(s) | Event::RightCusp(s) | Event::Crossing(s) => s,
            Event::HandlePass { slot, .. } => slot,
        }
    }

    pub(crate) fn with_slot(self, slot: usize) -> Event {
        match self {
            Event::LeftCusp(_) => Event::LeftCusp(slot),
            Event::RightCusp(_) => Event::RightCusp(slot),
            Event::Crossing(_) => Event::Crossing(slot),
            Event::HandlePass { handle, side, .. } => Event::HandlePass { slot, handle, side },
        }
    }

    pub(crate) fn shifted(self, by: usize) -> Event {
        self.with_slot(self.slot() + by)
    }

    /// Slots consumed from the column on the left, as a half-open range.
    pub(crate) fn input_range(&self) -> (usize, usize) {
        let s = self.slot();
        match self {
            Event::LeftCusp(_) => (s, s),
            Event::RightCusp(_) | Event::Crossing(_) => (s, s + 2),
            Event::HandlePass { side: BallSide::Left, .. } => (s, s),
            Event::HandlePass { side: BallSide::Right, .. } => (s, s + 1),
        }
    }

    /// Slots produced into the column on the right.
    pub(crate) fn output_range(&self) -> (usize, usize) {
        let s = self.slot();
        match self {
            Event::LeftCusp(_) | Event::Crossing(_) => (s, s + 2),
            Event::RightCusp(_) => (s, s),
            Event::HandlePass { side: BallSide::Left, .. } => (s, s + 1),
            Event::HandlePass { side: BallSide::Right, .. } => (s, s),
        }
    }

    /// Change in strand count across the event.
    pub(crate) fn delta(&self) -> isize {
        let (a, b) = self.input_range();
        let (c, d) = self.output_range();
        (d - c) as isize - (b - a) as isize
    }

    pub fn is_cusp(&self) -> bool {
        matches!(self, Event::LeftCusp(_) | Event::RightCusp(_))
    }

    /// Canonical token, with the handle printed through `name`.
    pub fn token_with(&self, name: impl Fn(OneHandleId) -> String) -> String {
        match *self {
            Event::LeftCusp(s) => format!("Lc{s}"),
            Event::RightCusp(s) => format!("Rc{s}"),
            Event::Crossing(s) => format!("X{s}"),
            Event::HandlePass { slot, handle, side: BallSide::Left } => {
                format!("HpL{slot}:{}", name(handle))
            }
            Event::HandlePass { slot, handle, side: BallSide::Right } => {
                format!("HpR{slot}:{}", name(handle))
            }
        }
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token_with(|h| h.0.to_string()))
    }
}

/// Direction in which a component is traversed relative to its canonical
/// direction (the canonical direction leaves the component's first event
/// rightward along its lowest new strand).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum Orientation {
    #[default]
    Canonical,
    Reversed,
}

impl Orientation {
    pub fn flipped(self) -> Orientation {
        match self {
            Orientation::Canonical => Orientation::Reversed,
            Orientation::Reversed => Orientation::Canonical,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FrontError {
    #[error("invalid front at event {index}: {reason}")]
    Invalid { index: usize, reason: String },
    #[error("unknown component {0}")]
    UnknownComponent(ComponentId),
    #[error("components must differ")]
    SameComponent,
    #[error("linking number of {0} and {1} is not integral in this chart")]
    NonIntegralLinking(ComponentId, ComponentId),
    #[error("move {mv:?} not applicable at site {site}")]
    MoveNotApplicable { mv: FrontMove, site: usize },
    #[error("cannot raise tb from {current} to {target} by stabilization")]
    CannotRaiseTb { current: i64, target: i64 },
    #[error("bad token `{token}` at position {position}")]
    BadToken { token: String, position: usize },
    #[error("expected a one-component front, found {0} components")]
    NotAKnot(usize),
    #[error("no right cusp of {0} sits outside the passes through the summand's 1-handles")]
    NoSpliceSite(ComponentId),
    #[error("orientation list has {got} entries for {expected} components")]
    OrientationCount { got: usize, expected: usize },
}

/// Result of [`FrontDiagram::validate`]; errors are data here.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ValidationReport {
    Pass,
    Fail { index: usize, reason: String },
}

impl ValidationReport {
    pub fn is_pass(&self) -> bool {
        matches!(self, ValidationReport::Pass)
    }
}

/// A Legendrian front: an event word plus per-component orientations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[derive(Default)]
pub struct FrontDiagram {
    events: Vec<Event>,
    orientations: Vec<Orientation>,
}


impl FrontDiagram {
    /// Builds a front with every component canonically oriented.
    pub fn new(events: Vec<Event>) -> Result<FrontDiagram, FrontError> {
        if let ValidationReport::Fail { index, reason } = validate_events(&events) {
            return Err(FrontError::Invalid { index, reason });
        }
        let count = Tracing::new(&events).component_count();
        Ok(FrontDiagram { events, orientations: vec![Orientation::Canonical; count] })
    }

    pub fn with_orientations(
        events: Vec<Event>,
        orientations: Vec<Orientation>,
    ) -> Result<FrontDiagram, FrontError> {
        let mut front = FrontDiagram::new(events)?;
        if orientations.len() != front.orientations.len() {
            return Err(FrontError::OrientationCount {
                got: orientations.len(),
                expected: front.orientations.len(),
            });
        }
        front.orientations = orientations;
        Ok(front)
    }

    /// Wraps an event word without checking it. `validate` reports problems.
    pub fn unchecked(events: Vec<Event>) -> FrontDiagram {
        FrontDiagram { events, orientations: Vec::new() }
    }

    pub fn unknot() -> FrontDiagram {
        FrontDiagram::new(vec![Event::LeftCusp(0), Event::RightCusp(0)]).expect("valid")
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn orientations(&self) -> &[Orientation] {
        &self.orientations
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn validate(&self) -> ValidationReport {
        let report = validate_events(&self.events);
        if report.is_pass() {
            let count = Tracing::new(&self.events).component_count();
            if count != self.orientations.len() {
                return ValidationReport::Fail {
                    index: self.events.len(),
                    reason: format!(
                        "orientation list has {} entries for {} components",
                        self.orientations.len(),
                        count
                    ),
                };
            }
        }
        report
    }

    pub fn component_count(&self) -> usize {
        self.orientations.len()
    }

    pub fn components(&self) -> impl Iterator<Item = ComponentId> {
        (0..self.orientations.len()).map(ComponentId)
    }

    pub fn orientation(&self, c: ComponentId) -> Result<Orientation, FrontError> {
        self.orientations.get(c.0).copied().ok_or(FrontError::UnknownComponent(c))
    }

    pub fn reversed(&self, c: ComponentId) -> Result<FrontDiagram, FrontError> {
        let mut out = self.clone();
        let o = out.orientations.get_mut(c.0).ok_or(FrontError::UnknownComponent(c))?;
        *o = o.flipped();
        Ok(out)
    }

    pub fn tracing(&self) -> Tracing {
        Tracing::with_orientations(&self.events, &self.orientations)
    }

    pub(crate) fn check_component(&self, c: ComponentId) -> Result<(), FrontError> {
        if c.0 < self.orientations.len() {
            Ok(())
        } else {
            Err(FrontError::UnknownComponent(c))
        }
    }

    pub fn handles_used(&self) -> Vec<OneHandleId> {
        let mut hs: Vec<OneHandleId> = self
            .events
            .iter()
            .filter_map(|e| match e {
                Event::HandlePass { handle, .. } => Some(*handle),
                _ => None,
            })
            .collect();
        hs.sort();
        hs.dedup();
        hs
    }

    /// Side-by-side chart: `other` is placed to the right of `self`.
    pub fn juxtapose(&self, other: &FrontDiagram) -> FrontDiagram {
        let mut events = self.events.clone();
        events.extend_from_slice(&other.events);
        let rebuilt = Tracing::new(&events);
        // components of `other` start after every component of `self`
        let mut orientations = self.orientations.clone();
        orientations.extend_from_slice(&other.orientations);
        debug_assert_eq!(rebuilt.component_count(), orientations.len());
        FrontDiagram { events, orientations }
    }

    /// Renumbers 1-handle ids through `f`.
    pub fn map_handles(&self, f: impl Fn(OneHandleId) -> OneHandleId) -> FrontDiagram {
        let events = self
            .events
            .iter()
            .map(|e| match *e {
                Event::HandlePass { slot, handle, side } => {
                    Event::HandlePass { slot, handle: f(handle), side }
                }
                other => other,
            })
            .collect();
        FrontDiagram { events, orientations: self.orientations.clone() }
    }

    /// Rebuilds orientations for a new word derived from `self`.
    ///
    /// `map` sends old event indices to new ones. A component of the new word
    /// inherits the orientation of an old component when the old component's
    /// first event survives and its created strand keeps the same direction.
    pub(crate) fn derive(
        &self,
        events: Vec<Event>,
        map: impl Fn(usize) -> Option<usize>,
    ) -> Result<FrontDiagram, FrontError> {
        let mut out = FrontDiagram::new(events)?;
        let old = self.tracing();
        let new = Tracing::new(&out.events);
        for c in self.components() {
            let p = old.first_event(c);
            let Some(q) = map(p) else { continue };
            let (Some(old_dir), Some(new_comp), Some(new_dir)) = (
                old.created_direction(p),
                new.component_created_at(q),
                new.created_direction(q),
            ) else {
                continue;
            };
            out.orientations[new_comp.0] = if old_dir == new_dir {
                Orientation::Canonical
            } else {
                Orientation::Reversed
            };
        }
        Ok(out)
    }

    /// Parses the token syntax (`Lc0 X1 HpL0:2 Rc0`), resolving handle names
    /// through `resolve`.
    pub fn parse_with(
        text: &str,
        mut resolve: impl FnMut(&str) -> Option<OneHandleId>,
    ) -> Result<FrontDiagram, FrontError> {
        let mut events = Vec::new();
        for (position, token) in text.split_whitespace().enumerate() {
            let bad = || FrontError::BadToken { token: token.to_string(), position };
            let event = parse_token(token, &mut resolve).ok_or_else(bad)?;
            events.push(event);
        }
        FrontDiagram::new(events)
    }

    pub fn to_text_with(&self, name: impl Fn(OneHandleId) -> String) -> String {
        let tokens: Vec<String> = self.events.iter().map(|e| e.token_with(&name)).collect();
        tokens.join(" ")
    }
}

fn parse_token(
    token: &str,
    resolve: &mut impl FnMut(&str) -> Option<OneHandleId>,
) -> Option<Event> {
    let num = |s: &str| -> Option<usize> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        s.parse().ok()
    };
    if let Some(rest) = token.strip_prefix("Lc") {
        return num(rest).map(Event::LeftCusp);
    }
    if let Some(rest) = token.strip_prefix("Rc") {
        return num(rest).map(Event::RightCusp);
    }
    if let Some(rest) = token.strip_prefix("X") {
        return num(rest).map(Event::Crossing);
    }
    let (side, rest) = if let Some(rest) = token.strip_prefix("HpL") {
        (BallSide::Left, rest)
    } else {
        let rest = token.strip_prefix("HpR")?;
        (BallSide::Right, rest)
    };
    let (slot, handle) = rest.split_once(':')?;
    Some(Event::HandlePass { slot: num(slot)?, handle: resolve(handle)?, side })
}

impl FromStr for FrontDiagram {
    type Err = FrontError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FrontDiagram::parse_with(s, |h| h.parse().ok().map(OneHandleId))
    }
}

impl fmt::Display for FrontDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text_with(|h| h.0.to_string()))
    }
}

pub(crate) fn validate_events(events: &[Event]) -> ValidationReport {
    let fail = |index: usize, reason: &str| ValidationReport::Fail { index, reason: reason.into() };
    let mut open = 0usize;
    let mut balance: std::collections::BTreeMap<OneHandleId, (usize, usize)> = Default::default();
    for (index, event) in events.iter().enumerate() {
        let (lo, hi) = event.input_range();
        if hi > open || lo > open {
            return fail(index, "slot out of range");
        }
        if let Event::HandlePass { handle, side, .. } = event {
            let entry = balance.entry(*handle).or_default();
            match side {
                BallSide::Left => entry.0 += 1,
                BallSide::Right => entry.1 += 1,
            }
        }
        open = (open as isize + event.delta()) as usize;
    }
    if open != 0 {
        return fail(events.len(), "unclosed strands");
    }
    for (handle, (left, right)) in balance {
        if left != right {
            let index = events
                .iter()
                .rposition(|e| matches!(e, Event::HandlePass { handle: h, .. } if *h == handle))
                .unwrap_or(events.len());
            return fail(index, "unpaired handle pass");
        }
    }
    ValidationReport::Pass
}
