//! Fixed-geometry SVG drawings of fronts.

use std::fmt::Write;

use crate::front::{BallSide, Event, FrontDiagram, OneHandleId};

const CELL: i64 = 40;
const ROW: i64 = 24;
const MARGIN: i64 = 20;

/// One cell per event, one row per slot. Cusps are single `cusp` paths,
/// crossings draw the descending strand unbroken, 1-handle balls are
/// brackets labelled with the handle name.
pub fn render(front: &FrontDiagram, name: impl Fn(OneHandleId) -> String) -> String {
    let t = front.tracing();
    let events = front.events();
    let rows = (0..=events.len()).map(|c| t.column_count(c)).max().unwrap_or(0).max(1) as i64;
    let width = CELL * events.len() as i64 + 2 * MARGIN;
    let height = ROW * (rows - 1) + 2 * MARGIN;
    let y = |slot: usize| MARGIN + ROW * (rows - 1 - slot as i64);
    let mut body = String::new();
    for (p, e) in events.iter().enumerate() {
        let x0 = MARGIN + CELL * p as i64;
        let x1 = x0 + CELL;
        let xm = x0 + CELL / 2;
        let (ilo, ihi) = e.input_range();
        let (olo, ohi) = e.output_range();
        let shift = (ohi - olo) as i64 - (ihi - ilo) as i64;
        // strands the event does not touch
        for s in (0..t.column_count(p)).filter(|s| !(ilo..ihi).contains(s)) {
            let s_out = if s >= ihi { (s as i64 + shift) as usize } else { s };
            let c = t.component_at(p, s).0;
            line(&mut body, &format!("strand k{c}"), (x0, y(s)), (x1, y(s_out)));
        }
        let comp = |col: usize, s: usize| t.component_at(col, s).0;
        match *e {
            Event::LeftCusp(s) => {
                let (a, b) = (y(s), y(s + 1));
                let tip = x0 + 8;
                writeln!(
                    body,
                    r#"<path class="cusp k{}" d="M {x1} {a} Q {xm} {a} {tip} {} Q {xm} {b} {x1} {b}"/>"#,
                    comp(p + 1, s),
                    (a + b) / 2
                )
                .unwrap();
            }
            Event::RightCusp(s) => {
                let (a, b) = (y(s), y(s + 1));
                let tip = x1 - 8;
                writeln!(
                    body,
                    r#"<path class="cusp k{}" d="M {x0} {a} Q {xm} {a} {tip} {} Q {xm} {b} {x0} {b}"/>"#,
                    comp(p, s),
                    (a + b) / 2
                )
                .unwrap();
            }
            Event::Crossing(s) => {
                // the strand entering high and leaving low passes over
                let (lo, hi) = (y(s), y(s + 1));
                line(&mut body, &format!("over k{}", comp(p, s + 1)), (x0, hi), (x1, lo));
                let under = format!("under k{}", comp(p, s));
                let gap = 6;
                let (mx, my) = (xm, (lo + hi) / 2);
                let dx = CELL / 2;
                let dy = (hi - lo) / 2;
                let cut = |f: i64| (f * dx / 20, f * dy / 20);
                let (cx, cy) = cut(gap);
                line(&mut body, &under, (x0, lo), (mx - cx, my - cy));
                line(&mut body, &under, (mx + cx, my + cy), (x1, hi));
            }
            Event::HandlePass { slot, handle, side } => {
                let yy = y(slot);
                let label = name(handle);
                match side {
                    BallSide::Left => {
                        let bx = x0 + 10;
                        bracket(&mut body, bx, yy, 1, &label);
                        line(&mut body, &format!("strand k{}", comp(p + 1, slot)), (bx, yy), (x1, yy));
                    }
                    BallSide::Right => {
                        let bx = x1 - 10;
                        bracket(&mut body, bx, yy, -1, &label);
                        line(&mut body, &format!("strand k{}", comp(p, slot)), (x0, yy), (bx, yy));
                    }
                }
            }
        }
    }
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(out, r#"<g fill="none" stroke="black" stroke-width="1.5">"#).unwrap();
    out.push_str(&body);
    writeln!(out, "</g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    out
}

fn line(out: &mut String, class: &str, a: (i64, i64), b: (i64, i64)) {
    writeln!(out, r#"<line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#, a.0, a.1, b.0, b.1).unwrap();
}

/// `[` when `open` is 1, `]` when -1.
fn bracket(out: &mut String, x: i64, y: i64, open: i64, label: &str) {
    let d = 4 * open;
    writeln!(
        out,
        r#"<path class="ball" d="M {} {} L {x} {} L {x} {} L {} {}"/>"#,
        x + d,
        y - 8,
        y - 8,
        y + 8,
        x + d,
        y + 8
    )
    .unwrap();
    writeln!(
        out,
        r#"<text x="{x}" y="{}" font-size="9" stroke="none" fill="black" text-anchor="middle">{}</text>"#,
        y - 11,
        escape(label)
    )
    .unwrap();
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(h: OneHandleId) -> String {
        format!("h{}", h.0)
    }

    #[test]
    fn unknot_has_two_cusp_arcs() {
        let svg = render(&FrontDiagram::unknot(), names);
        assert_eq!(svg.matches(r#"class="cusp"#).count(), 2);
        assert_eq!(svg, render(&FrontDiagram::unknot(), names));
    }

    #[test]
    fn crossings_and_balls() {
        let f: FrontDiagram = "Lc0 Lc2 X1 X1 X1 Rc2 Rc0".parse().unwrap();
        let svg = render(&f, names);
        assert_eq!(svg.matches(r#"class="over"#).count(), 3);
        assert_eq!(svg.matches(r#"class="under"#).count(), 6);
        let core: FrontDiagram = "HpL0:0 HpR0:0".parse().unwrap();
        let svg = render(&core, names);
        assert_eq!(svg.matches(r#"class="ball""#).count(), 2);
        assert!(svg.contains(">h0</text>"));
    }
}
