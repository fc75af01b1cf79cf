//! Seeded random fronts for testing and benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{BallSide, ComponentId, Event, FrontDiagram, FrontMove, OneHandleId};

/// Knobs for [`random_front`].
#[derive(Debug, Clone)]
pub struct RandomFrontConfig {
    /// Approximate number of events before the closing phase.
    pub length: usize,
    /// Number of 1-handles strands may pass through (0 for plain links).
    pub handles: usize,
    /// Upper bound on simultaneously open strands.
    pub max_strands: usize,
}

impl Default for RandomFrontConfig {
    fn default() -> Self {
        RandomFrontConfig { length: 12, handles: 0, max_strands: 6 }
    }
}

/// A random valid front built from a random event word.
pub fn random_front(seed: u64, cfg: &RandomFrontConfig) -> FrontDiagram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut events = Vec::new();
    let mut open = 0usize;
    let mut pending = vec![0usize; cfg.handles];
    for _ in 0..cfg.length {
        let roll = rng.gen_range(0..10);
        let event = if open + 2 <= cfg.max_strands && (open == 0 || roll < 3) {
            Event::LeftCusp(rng.gen_range(0..=open))
        } else if open >= 2 && roll < 7 {
            Event::Crossing(rng.gen_range(0..open - 1))
        } else if cfg.handles > 0 && roll < 8 && open < cfg.max_strands {
            let h = rng.gen_range(0..cfg.handles);
            pending[h] += 1;
            Event::HandlePass { slot: rng.gen_range(0..=open), handle: OneHandleId(h), side: BallSide::Left }
        } else if open >= 2 {
            Event::RightCusp(rng.gen_range(0..open - 1))
        } else {
            continue;
        };
        open = (open as isize + event.delta()) as usize;
        events.push(event);
    }
    for (h, n) in pending.iter().enumerate() {
        for _ in 0..*n {
            if open == 0 {
                events.push(Event::LeftCusp(0));
                open = 2;
            }
            let slot = rng.gen_range(0..open);
            events.push(Event::HandlePass { slot, handle: OneHandleId(h), side: BallSide::Right });
            open -= 1;
        }
    }
    while open > 0 {
        let slot = rng.gen_range(0..open - 1);
        events.push(Event::RightCusp(slot));
        open -= 2;
    }
    FrontDiagram::new(events).expect("generator keeps words valid")
}

/// Applies `count` random applicable moves, returning the final front.
pub fn random_moves(front: &FrontDiagram, seed: u64, count: usize) -> FrontDiagram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = front.clone();
    let mut applied = 0;
    let mut attempts = 0;
    while applied < count && attempts < count * 50 {
        attempts += 1;
        let site = rng.gen_range(0..=current.len());
        let mv = match rng.gen_range(0..7) {
            0 | 1 => FrontMove::Commute,
            2 => {
                let col_count = current.tracing().column_count(site);
                if col_count == 0 {
                    continue;
                }
                FrontMove::Fish { slot: rng.gen_range(0..col_count), below: rng.gen() }
            }
            3 => FrontMove::Unfish,
            4 => FrontMove::CuspThrough { downward: rng.gen() },
            5 => FrontMove::CuspBack,
            _ => FrontMove::Triple,
        };
        if let Ok(next) = current.front_move(mv, site) {
            // keep the words from growing without bound
            if next.len() <= front.len() + 4 * count {
                current = next;
                applied += 1;
            }
        }
    }
    current
}

/// A random front of the unknot: stabilizations of the standard unknot
/// scrambled by moves. Returns the front and the number of stabilizations.
pub fn random_unknot(seed: u64, max_stabilizations: usize, moves: usize) -> (FrontDiagram, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = rng.gen_range(0..=max_stabilizations);
    let mut front = FrontDiagram::unknot();
    for _ in 0..s {
        let sign = if rng.gen() { 1 } else { -1 };
        front = front.stabilize(ComponentId(0), sign).expect("unknot component exists");
    }
    (random_moves(&front, rng.gen(), moves), s)
}

/// Every valid one-component front without handle passes using at most
/// `max_len` events, with crossings on at most `max_strands` strands.
pub fn enumerate_knot_fronts(max_len: usize, max_strands: usize) -> Vec<FrontDiagram> {
    let mut out = Vec::new();
    let mut word = Vec::new();
    fn go(
        word: &mut Vec<Event>,
        open: usize,
        max_len: usize,
        max_strands: usize,
        out: &mut Vec<FrontDiagram>,
    ) {
        if open == 0 && !word.is_empty() {
            if let Ok(f) = FrontDiagram::new(word.clone()) {
                if f.component_count() == 1 {
                    out.push(f);
                }
            }
            return;
        }
        let mut options = Vec::new();
        if open + 2 <= max_strands {
            options.extend((0..=open).map(Event::LeftCusp));
        }
        if open >= 2 {
            options.extend((0..open - 1).map(Event::Crossing));
            options.extend((0..open - 1).map(Event::RightCusp));
        }
        for e in options {
            let next = (open as isize + e.delta()) as usize;
            // the open strands still need next/2 right cusps
            if word.len() + 1 + next / 2 > max_len {
                continue;
            }
            word.push(e);
            go(word, next, max_len, max_strands, out);
            word.pop();
        }
    }
    go(&mut word, 0, max_len, max_strands, &mut out);
    out
}
