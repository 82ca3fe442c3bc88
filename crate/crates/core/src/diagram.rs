//! Planar diagrams underlying fronts and the Kauffman bracket state sum.

use crate::error::{Error, Result};
use crate::front::{orient, EventSegments, FrontWord, Sweep};
use crate::poly::LaurentPoly;

pub const DEFAULT_CROSSING_LIMIT: usize = 16;

/// One crossing. `ccw` lists the four incident arcs counterclockwise starting
/// from the incoming under-arc, so `ccw[0] = under_in` and `ccw[2] = under_out`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PdCrossing {
    pub over_in: usize,
    pub over_out: usize,
    pub under_in: usize,
    pub under_out: usize,
    pub ccw: [usize; 4],
    pub sign: i8,
}

/// Oriented planar diagram code. Arcs run from crossing to crossing (cusps are
/// smoothed away) and are numbered by first appearance in the sweep.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PdCode {
    pub crossings: Vec<PdCrossing>,
    pub arcs: usize,
    pub writhe: i64,
}

impl PdCode {
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }
}

#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Smooths the cusps of a knot front and reads off its oriented PD code.
///
/// The over-strand at every crossing is the branch entering from the upper
/// index (the lesser slope).
pub fn to_diagram(f: &FrontWord) -> Result<PdCode> {
    let o = orient(f)?;
    let sweep = Sweep::new(f);
    let dir = o.directions();

    let mut uf = UnionFind::new(sweep.segment_count());
    for ev in &sweep.events {
        if let EventSegments::Cusp { upper, lower } = *ev {
            uf.union(upper, lower);
        }
    }
    let mut arc_of_root = vec![usize::MAX; sweep.segment_count()];
    let mut arcs = 0;
    let mut arc = vec![0; sweep.segment_count()];
    for (s, slot) in arc.iter_mut().enumerate() {
        let r = uf.find(s);
        if arc_of_root[r] == usize::MAX {
            arc_of_root[r] = arcs;
            arcs += 1;
        }
        *slot = arc_of_root[r];
    }

    let mut crossings = Vec::with_capacity(f.crossing_count());
    let mut signs = o.crossing_signs().iter();
    for ev in &sweep.events {
        let EventSegments::Crossing {
            in_upper,
            in_lower,
            out_upper,
            out_lower,
        } = *ev
        else {
            continue;
        };
        let (tl, bl, tr, br) = (arc[in_upper], arc[in_lower], arc[out_upper], arc[out_lower]);
        let (over_in, over_out) = if dir[in_upper] { (tl, br) } else { (br, tl) };
        let (under_in, under_out) = if dir[in_lower] { (bl, tr) } else { (tr, bl) };
        // screen positions counterclockwise: top-right, top-left, bottom-left, bottom-right
        let ring = [tr, tl, bl, br];
        let start = if dir[in_lower] { 2 } else { 0 };
        let ccw = std::array::from_fn(|k| ring[(start + k) % 4]);
        crossings.push(PdCrossing {
            over_in,
            over_out,
            under_in,
            under_out,
            ccw,
            sign: *signs.next().expect("one sign per crossing"),
        });
    }
    Ok(PdCode {
        crossings,
        arcs,
        writhe: o.writhe(),
    })
}

/// Kauffman bracket normalized so the crossingless circle has value 1.
pub fn bracket(d: &PdCode, limit: usize) -> Result<LaurentPoly> {
    let order: Vec<usize> = (0..d.crossing_count()).collect();
    bracket_with_order(d, &order, limit)
}

/// State sum with crossings assigned to state bits in the given order.
///
/// Each state smooths every crossing A-wise (joining `ccw[0]-ccw[1]` and
/// `ccw[2]-ccw[3]`) or B-wise (`ccw[0]-ccw[3]`, `ccw[1]-ccw[2]`) and
/// contributes `A^(a - b) * delta^(loops - 1)` with `delta = -A^2 - A^-2`.
pub fn bracket_with_order(d: &PdCode, order: &[usize], limit: usize) -> Result<LaurentPoly> {
    let n = d.crossing_count();
    assert_eq!(order.len(), n, "order must list every crossing");
    if n > limit {
        return Err(Error::TooManyCrossings {
            crossings: n,
            limit,
        });
    }
    if n == 0 {
        return Ok(LaurentPoly::one());
    }

    // Endpoint nodes are (crossing, slot); an arc glues its two endpoints.
    let mut arc_ends: Vec<Vec<usize>> = vec![Vec::with_capacity(2); d.arcs];
    for (c, x) in d.crossings.iter().enumerate() {
        for (k, &a) in x.ccw.iter().enumerate() {
            arc_ends[a].push(4 * c + k);
        }
    }
    let mut base = UnionFind::new(4 * n);
    let mut base_loops = 4 * n;
    for ends in &arc_ends {
        for w in ends.windows(2) {
            if base.union(w[0], w[1]) {
                base_loops -= 1;
            }
        }
    }

    // counts[a][loops] over all states
    let mut counts = vec![vec![0i64; 2 * n + 2]; n + 1];
    for mask in 0u64..(1u64 << n) {
        let mut uf = base.clone();
        let mut loops = base_loops;
        let mut a_count = 0;
        for (bit, &c) in order.iter().enumerate() {
            let v = 4 * c;
            let pairs = if mask >> bit & 1 == 0 {
                a_count += 1;
                [(v, v + 1), (v + 2, v + 3)]
            } else {
                [(v, v + 3), (v + 1, v + 2)]
            };
            for (x, y) in pairs {
                if uf.union(x, y) {
                    loops -= 1;
                }
            }
        }
        counts[a_count][loops] += 1;
    }

    let delta = LaurentPoly::from_terms([(-1, 2), (-1, -2)]);
    let delta_pows: Vec<LaurentPoly> = (0..=2 * n as u32).map(|k| delta.pow(k)).collect();
    let mut out = LaurentPoly::zero();
    for (a, row) in counts.iter().enumerate() {
        let b = n - a;
        for (loops, &count) in row.iter().enumerate() {
            if count != 0 {
                let term = delta_pows[loops - 1].shift(a as i32 - b as i32).scale(count);
                out += &term;
            }
        }
    }
    Ok(out)
}
