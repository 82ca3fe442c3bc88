//! SVG drawings of fronts.
//!
//! Every strand segment becomes one path of cubic Bezier pieces whose control
//! points have nondecreasing `x`, so no path has a vertical tangent. Both
//! branches at a cusp leave the tip horizontally. At a crossing the
//! over-strand (the descending, lesser-slope branch) runs through the crossing
//! point and the under-strand stops short of it.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::front::{orient, EventKind, EventSegments, FrontWord, Sweep};

const MARGIN: f64 = 20.0;
/// Fraction of the crossing S-curve's parameter range left blank on each
/// side of the crossing point for the under-strand.
const GAP: f64 = 0.12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderStyle {
    /// Horizontal distance between consecutive events.
    pub units_per_column: f64,
    /// Vertical distance between adjacent strands.
    pub strand_gap: f64,
    /// How long a cusp branch hugs the horizontal tangent at the tip.
    pub cusp_sharpness: f64,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            units_per_column: 40.0,
            strand_gap: 20.0,
            cusp_sharpness: 1.0,
        }
    }
}

impl RenderStyle {
    pub fn new(units_per_column: f64, strand_gap: f64, cusp_sharpness: f64) -> Result<Self> {
        for v in [units_per_column, strand_gap, cusp_sharpness] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidStyle("style values must be positive and finite"));
            }
        }
        Ok(RenderStyle {
            units_per_column,
            strand_gap,
            cusp_sharpness,
        })
    }
}

type Pt = (f64, f64);
type Cubic = [Pt; 4];

fn lerp(a: Pt, b: Pt, t: f64) -> Pt {
    (a.0 + (b.0 - a.0) * t, a.1 + (b.1 - a.1) * t)
}

/// De Casteljau split at `t`.
fn split(c: &Cubic, t: f64) -> (Cubic, Cubic) {
    let ab = lerp(c[0], c[1], t);
    let bc = lerp(c[1], c[2], t);
    let cd = lerp(c[2], c[3], t);
    let abc = lerp(ab, bc, t);
    let bcd = lerp(bc, cd, t);
    let m = lerp(abc, bcd, t);
    ([c[0], ab, abc, m], [m, bcd, cd, c[3]])
}

fn sub(c: &Cubic, t0: f64, t1: f64) -> Cubic {
    let (_, right) = split(c, t0);
    let (mid, _) = split(&right, (t1 - t0) / (1.0 - t0));
    mid
}

/// Horizontal-tangent S-curve between two strand positions.
fn s_curve(from: Pt, to: Pt) -> Cubic {
    let cx = (from.0 + to.0) / 2.0;
    [from, (cx, from.1), (cx, to.1), to]
}

/// Branch from a cusp tip to `end`, tangent to the horizontal at both ends.
fn cusp_branch(tip: Pt, end: Pt, sharpness: f64) -> Cubic {
    let dx = end.0 - tip.0;
    let hug = dx * sharpness / (1.0 + sharpness);
    let x = tip.0 + hug;
    [tip, (x, tip.1), (x, end.1), end]
}

/// Branch from `start` into a cusp tip on its right.
fn into_tip(start: Pt, tip: Pt, sharpness: f64) -> Cubic {
    let dx = tip.0 - start.0;
    let x = tip.0 - dx * sharpness / (1.0 + sharpness);
    [start, (x, start.1), (x, tip.1), tip]
}

struct Layout<'a> {
    sweep: &'a Sweep,
    style: RenderStyle,
}

impl Layout<'_> {
    fn x_event(&self, i: usize) -> f64 {
        MARGIN + (i + 1) as f64 * self.style.units_per_column
    }

    /// x of the gap between events `t - 1` and `t`.
    fn x_boundary(&self, t: usize) -> f64 {
        MARGIN + (t as f64 + 0.5) * self.style.units_per_column
    }

    fn y(&self, index: usize) -> f64 {
        MARGIN + index as f64 * self.style.strand_gap
    }

    fn index(&self, t: usize, seg: usize) -> usize {
        self.sweep.live[t]
            .iter()
            .position(|&s| s == seg)
            .expect("segment live at boundary")
    }

    fn at(&self, t: usize, seg: usize) -> Pt {
        (self.x_boundary(t), self.y(self.index(t, seg)))
    }

    fn tip(&self, event: usize, pos: usize) -> Pt {
        (self.x_event(event), (self.y(pos) + self.y(pos + 1)) / 2.0)
    }

    /// Full S-curve through the crossing at `event` followed by `seg`, which
    /// either leaves the crossing (`outgoing`) or enters it.
    fn crossing_curve(&self, event: usize, pos: usize, seg: usize, outgoing: bool) -> Cubic {
        let swap = |idx: usize| if idx == pos { pos + 1 } else { pos };
        if outgoing {
            let idx = self.index(event + 1, seg);
            s_curve((self.x_boundary(event), self.y(swap(idx))), self.at(event + 1, seg))
        } else {
            let idx = self.index(event, seg);
            s_curve(self.at(event, seg), (self.x_boundary(event + 1), self.y(swap(idx))))
        }
    }
}

fn fmt_pt(out: &mut String, p: Pt) {
    let _ = write!(out, "{:.2} {:.2}", p.0, p.1);
}

/// Renders a front as an SVG 1.1 document. Output depends only on the inputs.
pub fn render_svg(f: &FrontWord, style: &RenderStyle) -> String {
    let sweep = Sweep::new(f);
    let layout = Layout {
        sweep: &sweep,
        style: *style,
    };
    let events = f.events();
    let under_in: Vec<bool> = {
        let mut v = vec![false; sweep.segment_count()];
        for ev in &sweep.events {
            if let EventSegments::Crossing { in_lower, .. } = *ev {
                v[in_lower] = true;
            }
        }
        v
    };
    let under_out: Vec<bool> = {
        let mut v = vec![false; sweep.segment_count()];
        for ev in &sweep.events {
            if let EventSegments::Crossing { out_upper, .. } = *ev {
                v[out_upper] = true;
            }
        }
        v
    };

    let width = 2.0 * MARGIN + (f.len() + 1) as f64 * style.units_per_column;
    let height = 2.0 * MARGIN + (f.max_width().max(2) - 1) as f64 * style.strand_gap;
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width:.2}\" height=\"{height:.2}\" viewBox=\"0 0 {width:.2} {height:.2}\">"
    );
    let _ = writeln!(out, "<!-- front: {f} -->");
    match orient(f) {
        Ok(o) => {
            let _ = writeln!(
                out,
                "<!-- tb={} rotation={} left_cusps={} right_cusps={} crossings={} -->",
                o.tb(),
                o.rotation(),
                f.left_cusp_count(),
                f.right_cusp_count(),
                f.crossing_count()
            );
        }
        Err(_) => {
            let _ = writeln!(
                out,
                "<!-- components={} left_cusps={} right_cusps={} crossings={} -->",
                f.component_count(),
                f.left_cusp_count(),
                f.right_cusp_count(),
                f.crossing_count()
            );
        }
    }
    for (i, (e, segs)) in events.iter().zip(&sweep.events).enumerate() {
        match (e.kind, segs) {
            (EventKind::LeftCusp | EventKind::RightCusp, _) => {
                let (x, y) = layout.tip(i, e.pos);
                let side = if e.kind == EventKind::LeftCusp { "left" } else { "right" };
                let _ = writeln!(out, "<!-- cusp-junction event={i} kind={side} at={x:.2},{y:.2} -->");
            }
            (EventKind::Crossing, EventSegments::Crossing { in_upper, in_lower, .. }) => {
                let (x, y) = layout.tip(i, e.pos);
                let _ = writeln!(
                    out,
                    "<!-- crossing-gap event={i} at={x:.2},{y:.2} over=s{in_upper} under=s{in_lower} -->"
                );
            }
            _ => unreachable!("sweep events mirror word events"),
        }
    }
    out.push_str("<g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" stroke-linecap=\"round\">\n");

    for seg in 0..sweep.segment_count() {
        let (a, b) = sweep.span[seg];
        let mut pieces: Vec<Cubic> = Vec::new();
        let start = events[a];
        match start.kind {
            EventKind::LeftCusp => {
                let tip = layout.tip(a, start.pos);
                pieces.push(cusp_branch(tip, layout.at(a + 1, seg), style.cusp_sharpness));
            }
            EventKind::Crossing => {
                let full = layout.crossing_curve(a, start.pos, seg, true);
                let t0 = if under_out[seg] { 0.5 + GAP } else { 0.5 };
                pieces.push(sub(&full, t0, 1.0));
            }
            EventKind::RightCusp => unreachable!("segments do not start at right cusps"),
        }
        for t in a + 1..b {
            pieces.push(s_curve(layout.at(t, seg), layout.at(t + 1, seg)));
        }
        let end = events[b];
        match end.kind {
            EventKind::RightCusp => {
                let tip = layout.tip(b, end.pos);
                pieces.push(into_tip(layout.at(b, seg), tip, style.cusp_sharpness));
            }
            EventKind::Crossing => {
                let full = layout.crossing_curve(b, end.pos, seg, false);
                let t1 = if under_in[seg] { 0.5 - GAP } else { 0.5 };
                pieces.push(sub(&full, 0.0, t1));
            }
            EventKind::LeftCusp => unreachable!("segments do not end at left cusps"),
        }

        let mut d = String::from("M ");
        fmt_pt(&mut d, pieces[0][0]);
        for c in &pieces {
            d.push_str(" C ");
            fmt_pt(&mut d, c[1]);
            d.push_str(", ");
            fmt_pt(&mut d, c[2]);
            d.push_str(", ");
            fmt_pt(&mut d, c[3]);
        }
        let _ = writeln!(out, "  <path class=\"segment\" id=\"s{seg}\" d=\"{d}\"/>");
    }
    out.push_str("</g>\n</svg>\n");
    out
}
