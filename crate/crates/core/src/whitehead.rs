//! Whitehead multiples: parallel cables of a Legendrian component joined by
//! bands into a single knot.

use serde::{Deserialize, Serialize};

use crate::front::{
    BallSide, ComponentId, Direction, Event, FrontDiagram, FrontError, OneHandleId, Orientation,
    Tracing,
};

/// A component of a front together with an integer framing, measured
/// against the diagram plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FramedComponent {
    pub component: ComponentId,
    pub framing: i64,
}

impl FramedComponent {
    pub fn new(component: ComponentId, framing: i64) -> FramedComponent {
        FramedComponent { component, framing }
    }
}

/// Where the n - 1 bands of a Whitehead multiple go.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum BandPlacement {
    /// Just before the component's last event.
    #[default]
    Rightmost,
    /// In the given column of the input word, on the component's lowest strand.
    Column(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WhiteheadParams {
    pub n: usize,
    pub bands: BandPlacement,
}

impl WhiteheadParams {
    pub fn new(n: usize) -> WhiteheadParams {
        WhiteheadParams { n, bands: BandPlacement::Rightmost }
    }
}

/// A cut through the cable: the column and slot range crossing every copy
/// once, plus the direction copy 0 is traversed there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternChart {
    pub column: usize,
    pub lo: usize,
    pub hi: usize,
    pub reference: Direction,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WhiteheadMultiple {
    pub front: FrontDiagram,
    pub framed: FramedComponent,
    pub chart: PatternChart,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MultiplicityTarget {
    Handle(OneHandleId),
    PatternTorus(PatternChart),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WhiteheadError {
    #[error("copy count must be at least {min}, got {got}")]
    BadCount { got: usize, min: usize },
    #[error("band column {0} is outside the component's chart")]
    BadBandSite(usize),
    #[error("unknown 1-handle {}", .0 .0)]
    UnknownHandle(OneHandleId),
    #[error("pattern chart does not cut component {0}")]
    ChartMismatch(ComponentId),
    #[error(transparent)]
    Front(#[from] FrontError),
}

/// Framing carried by P_n(K, f): `f` for odd `n`, zero for even `n`.
pub fn canonical_framing(n: usize, f: i64) -> Result<i64, WhiteheadError> {
    match n {
        0 => Err(WhiteheadError::BadCount { got: 0, min: 1 }),
        n if n % 2 == 1 => Ok(f),
        _ => Ok(0),
    }
}

/// The band splice on strands at `j`, `j + 1`: a right cusp joins them and a
/// left cusp reconnects the far sides. Both crossings are positive.
pub fn band_events(j: usize) -> [Event; 4] {
    [Event::LeftCusp(j + 1), Event::Crossing(j), Event::Crossing(j + 2), Event::RightCusp(j + 1)]
}

/// Result of cabling a component.
struct Cable {
    events: Vec<Event>,
    /// New index of each input event's first output event (and one past the end).
    starts: Vec<usize>,
    /// Cable column sitting right after the expansion of the first event.
    cut: usize,
    /// Cable slot of the lowest copy strand in that column.
    cut_slot: usize,
    /// Cable column right after the expansion of each input event.
    ends: Vec<usize>,
}

/// Bubble-sorts `keys`, emitting a crossing at `base + i` for each swap.
fn sort_with_crossings(keys: &mut [usize], base: usize, out: &mut Vec<Event>) {
    let n = keys.len();
    for pass in 0..n {
        let mut swapped = false;
        for i in 0..n.saturating_sub(pass + 1) {
            if keys[i] > keys[i + 1] {
                keys.swap(i, i + 1);
                out.push(Event::Crossing(base + i));
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
}

/// Replaces `c` by `n` vertical push-offs.
fn cable(front: &FrontDiagram, c: ComponentId, n: usize) -> Cable {
    let t = Tracing::new(front.events());
    let width = |col: usize, slot: usize| if t.component_at(col, slot) == c { n } else { 1 };
    let base = |col: usize, slot: usize| (0..slot).map(|s| width(col, s)).sum::<usize>();
    let first = t.first_event(c);
    let mut events = Vec::new();
    let mut starts = Vec::new();
    let mut ends = Vec::new();
    let mut cut = 0;
    let mut cut_slot = 0;
    for (p, e) in front.events().iter().enumerate() {
        starts.push(events.len());
        let mine = t.event_touches(p, c);
        match *e {
            Event::LeftCusp(i) if mine => {
                let b = base(p, i);
                for k in 0..n {
                    events.push(Event::LeftCusp(b + 2 * k));
                }
                // copies arrive as L0 U0 L1 U1 ..., regroup to L0 L1 .. U0 U1 ..
                let mut keys: Vec<usize> = (0..n).flat_map(|k| [k, n + k]).collect();
                sort_with_crossings(&mut keys, b, &mut events);
            }
            Event::RightCusp(i) if mine => {
                let b = base(p, i);
                let mut keys: Vec<usize> = (0..n).map(|k| 2 * k).chain((0..n).map(|k| 2 * k + 1)).collect();
                sort_with_crossings(&mut keys, b, &mut events);
                events.extend(std::iter::repeat_n(Event::RightCusp(b), n));
            }
            Event::Crossing(i) => {
                let (wa, wb) = (width(p, i), width(p, i + 1));
                let mut keys: Vec<usize> = std::iter::repeat_n(1, wa).chain(std::iter::repeat_n(0, wb)).collect();
                sort_with_crossings(&mut keys, base(p, i), &mut events);
            }
            Event::HandlePass { slot, handle, side: BallSide::Left } if mine => {
                let b = base(p, slot);
                for k in 0..n {
                    events.push(Event::HandlePass { slot: b + k, handle, side: BallSide::Left });
                }
            }
            Event::HandlePass { slot, handle, side: BallSide::Right } if mine => {
                let b = base(p, slot);
                for _ in 0..n {
                    events.push(Event::HandlePass { slot: b, handle, side: BallSide::Right });
                }
            }
            other => events.push(other.with_slot(base(p, other.slot()))),
        }
        ends.push(events.len());
        if p == first {
            cut = events.len();
            cut_slot = base(p + 1, e.slot());
        }
    }
    starts.push(events.len());
    Cable { events, starts, cut, cut_slot, ends }
}

/// Orientations for a cabled word: copies follow `c`, others keep theirs.
fn cable_orientations(
    front: &FrontDiagram,
    c: ComponentId,
    events: &[Event],
    starts: &[usize],
    n: usize,
) -> Vec<Orientation> {
    let old = front.tracing();
    let new = Tracing::new(events);
    let mut out = vec![Orientation::Canonical; new.component_count()];
    for d in front.components() {
        let p = old.first_event(d);
        let o = front.orientations()[d.0];
        let creators: Vec<usize> = if d == c {
            // each copy is created by one of the first n events of the expansion
            (0..n).map(|k| starts[p] + k).collect()
        } else {
            vec![starts[p]]
        };
        for q in creators {
            if let Some(nc) = new.component_created_at(q) {
                out[nc.0] = o;
            }
        }
    }
    out
}

/// Full twists on the `n` strands starting at `slot`.
fn full_twists(slot: usize, n: usize, count: usize) -> Vec<Event> {
    let mut out = Vec::new();
    for _ in 0..count * n {
        out.extend((0..n - 1).map(|j| Event::Crossing(slot + j)));
    }
    out
}

/// Brings `c` to contact framing `f` when `f < tb` by stabilizing first.
fn prepare(front: &FrontDiagram, fc: FramedComponent) -> Result<(FrontDiagram, usize), WhiteheadError> {
    front.check_component(fc.component)?;
    let tb = front.tb(fc.component)?;
    if fc.framing < tb {
        Ok((front.legendrianize_to(fc.component, fc.framing)?, 0))
    } else {
        Ok((front.clone(), (fc.framing - tb) as usize))
    }
}

/// `n` copies of a component, pairwise linking `f`, all oriented like it.
pub fn parallel_copies(
    front: &FrontDiagram,
    fc: FramedComponent,
    n: usize,
) -> Result<FrontDiagram, WhiteheadError> {
    if n == 0 {
        return Err(WhiteheadError::BadCount { got: 0, min: 1 });
    }
    let (base, twists) = prepare(front, fc)?;
    let c = fc.component;
    let cab = cable(&base, c, n);
    let mut events = cab.events;
    events.splice(cab.cut..cab.cut, full_twists(cab.cut_slot, n, twists));
    let shift = twists * n * (n - 1);
    let starts: Vec<usize> =
        cab.starts.iter().map(|&s| if s >= cab.cut { s + shift } else { s }).collect();
    let orientations = cable_orientations(&base, c, &events, &starts, n);
    Ok(FrontDiagram::with_orientations(events, orientations)?)
}

/// Band sum of `n` alternately oriented copies of a component.
pub fn whitehead_multiple(
    front: &FrontDiagram,
    fc: FramedComponent,
    params: WhiteheadParams,
) -> Result<WhiteheadMultiple, WhiteheadError> {
    let n = params.n;
    if n == 0 {
        return Err(WhiteheadError::BadCount { got: 0, min: 1 });
    }
    let framing = canonical_framing(n, fc.framing)?;
    let c = fc.component;
    front.check_component(c)?;
    let t0 = front.tracing();
    let (first, last) = (t0.first_event(c), t0.last_event(c));
    if let BandPlacement::Column(col) = params.bands {
        if col <= first || col > last {
            return Err(WhiteheadError::BadBandSite(col));
        }
    }
    let (base, twists) = prepare(front, fc)?;
    let tb = base.tracing();
    let last = tb.last_event(c);
    // stabilizing inserts events right after the first one
    let added = base.len() - front.len();
    let band_col = match params.bands {
        BandPlacement::Rightmost => last,
        BandPlacement::Column(col) => col + added,
    };
    let band_slot_in = *tb.slots_of(band_col, c).first().ok_or(WhiteheadError::BadBandSite(band_col))?;

    let cab = cable(&base, c, n);
    let width = |col: usize, slot: usize| if tb.component_at(col, slot) == c { n } else { 1 };
    let band_slot: usize = (0..band_slot_in).map(|s| width(band_col, s)).sum();
    let band_at = if band_col == 0 { 0 } else { cab.ends[band_col - 1] };

    let bands: Vec<Event> = (0..n - 1).flat_map(|k| band_events(band_slot + k)).collect();
    let twist_events = full_twists(cab.cut_slot, n, twists);
    let mut events = cab.events.clone();
    // insert the later splice first so the earlier index stays valid
    debug_assert!(band_at >= cab.cut);
    events.splice(band_at..band_at, bands);
    events.splice(cab.cut..cab.cut, twist_events);

    let shift = |s: usize| {
        let mut s2 = s;
        if s >= band_at {
            s2 += 4 * (n - 1);
        }
        if s >= cab.cut {
            s2 += twists * n * (n - 1);
        }
        s2
    };
    let starts: Vec<usize> = cab.starts.iter().map(|&s| shift(s)).collect();
    let new = Tracing::new(&events);
    let merged = new
        .component_created_at(starts[tb.first_event(c)])
        .expect("copy 0 opens a strand");
    let fixed = remap_after_merge(&base, c, &events, &starts, n)?;
    let out = FrontDiagram::with_orientations(events, fixed)?;
    let reference = out.tracing().direction_at(cab.cut, cab.cut_slot);
    Ok(WhiteheadMultiple {
        chart: PatternChart { column: cab.cut, lo: cab.cut_slot, hi: cab.cut_slot + n, reference },
        framed: FramedComponent { component: merged, framing },
        front: out,
    })
}

/// Orientations once the copies of `c` have been merged into one component.
fn remap_after_merge(
    base: &FrontDiagram,
    c: ComponentId,
    events: &[Event],
    starts: &[usize],
    n: usize,
) -> Result<Vec<Orientation>, WhiteheadError> {
    let old = base.tracing();
    let new = Tracing::new(events);
    let mut out = vec![Orientation::Canonical; new.component_count()];
    for d in base.components() {
        let q = starts[old.first_event(d)];
        let Some(nc) = new.component_created_at(q) else { continue };
        let mut o = base.orientations()[d.0];
        if d == c && n > 1 {
            // copy 0's strand must run the way the original did
            let want = old.created_direction(old.first_event(d)).expect("creating event");
            let got = new.created_direction(q).expect("creating event");
            if want != got {
                o = o.flipped();
            }
        }
        out[nc.0] = o;
    }
    Ok(out)
}

/// Algebraic number of times `c` runs through a 1-handle or around the
/// pattern torus of a Whitehead multiple.
pub fn homology_multiplicity(
    front: &FrontDiagram,
    c: ComponentId,
    target: MultiplicityTarget,
) -> Result<i64, WhiteheadError> {
    front.check_component(c)?;
    match target {
        MultiplicityTarget::Handle(h) => {
            if !front.handles_used().contains(&h) {
                return Err(WhiteheadError::UnknownHandle(h));
            }
            Ok(front.handle_multiplicity(c, h)?)
        }
        MultiplicityTarget::PatternTorus(chart) => {
            let t = front.tracing();
            if chart.column > front.len() || chart.hi > t.column_count(chart.column) || chart.lo >= chart.hi {
                return Err(WhiteheadError::ChartMismatch(c));
            }
            let mut total = 0;
            for s in chart.lo..chart.hi {
                if t.component_at(chart.column, s) != c {
                    return Err(WhiteheadError::ChartMismatch(c));
                }
                total += if t.direction_at(chart.column, s) == chart.reference { 1 } else { -1 };
            }
            Ok(total)
        }
    }
}

/// Legendrian `n`-copy parallel link with framing `f`. Copies after the first
/// carry `tb - f = -|tb(K) - f|`. When `f < tb(K)` every copy, the first
/// included, is stabilized down to `f` before the push-offs are taken.
pub fn legendrian_parallel_link(
    front: &FrontDiagram,
    fc: FramedComponent,
    n: usize,
) -> Result<FrontDiagram, WhiteheadError> {
    if n < 2 {
        return Err(WhiteheadError::BadCount { got: n, min: 2 });
    }
    let tb = front.tb(fc.component)?;
    let mut out = parallel_copies(front, fc, n)?;
    if fc.framing < tb {
        let d = tb - fc.framing;
        for k in 1..n {
            let copy = ComponentId(fc.component.0 + k);
            for s in 0..d {
                out = out.stabilize(copy, if s % 2 == 0 { 1 } else { -1 })?;
            }
        }
    }
    Ok(out)
}
