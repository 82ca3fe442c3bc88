//! Event-word encoding of Legendrian fronts and their classical invariants.
//!
//! A front is swept left to right by a vertical line. Between events the line
//! meets an even number of strands, indexed from the top (index 0 has the
//! largest `z`). Every event is one of
//!
//! * `L p`: a left cusp born between indices `p - 1` and `p`, adding strands `p`, `p + 1`;
//! * `R p`: the strands at `p`, `p + 1` meet in a right cusp and die;
//! * `X p`: the strands at `p`, `p + 1` cross.
//!
//! At a crossing the strand entering from index `p` descends, so it has the
//! lesser slope. Viewing the front from `y = -inf`, that strand is the
//! over-strand of the underlying knot diagram.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EventKind {
    LeftCusp,
    RightCusp,
    Crossing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Event {
    pub kind: EventKind,
    pub pos: usize,
}

impl Event {
    pub const fn left(pos: usize) -> Self {
        Event { kind: EventKind::LeftCusp, pos }
    }

    pub const fn right(pos: usize) -> Self {
        Event { kind: EventKind::RightCusp, pos }
    }

    pub const fn cross(pos: usize) -> Self {
        Event { kind: EventKind::Crossing, pos }
    }

    /// Whether the event can be applied when `width` strands are alive.
    pub fn is_legal_at(&self, width: usize) -> bool {
        match self.kind {
            EventKind::LeftCusp => self.pos <= width,
            EventKind::RightCusp | EventKind::Crossing => self.pos + 2 <= width,
        }
    }

    /// Strand count after the event. Only meaningful if the event is legal.
    pub fn width_after(&self, width: usize) -> usize {
        match self.kind {
            EventKind::LeftCusp => width + 2,
            EventKind::RightCusp => width - 2,
            EventKind::Crossing => width,
        }
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            EventKind::LeftCusp => 'L',
            EventKind::RightCusp => 'R',
            EventKind::Crossing => 'X',
        };
        write!(f, "{c}{}", self.pos)
    }
}

/// A validated event word: every event is legal at its sweep state and the
/// sweep ends with no live strands.
///
/// Words may still describe links; see [`FrontWord::component_count`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FrontWord {
    events: Vec<Event>,
    max_width: usize,
    left_cusps: usize,
    right_cusps: usize,
    crossings: usize,
}

pub fn make_front(events: Vec<Event>) -> Result<FrontWord> {
    FrontWord::new(events)
}

impl FrontWord {
    pub fn new(events: Vec<Event>) -> Result<Self> {
        if events.is_empty() {
            return Err(Error::EmptyWord);
        }
        let mut width = 0;
        let mut max_width = 0;
        let (mut left_cusps, mut right_cusps, mut crossings) = (0, 0, 0);
        for (index, &event) in events.iter().enumerate() {
            if !event.is_legal_at(width) {
                return Err(Error::IndexOutOfRange { index, event, width });
            }
            match event.kind {
                EventKind::LeftCusp => left_cusps += 1,
                EventKind::RightCusp => right_cusps += 1,
                EventKind::Crossing => crossings += 1,
            }
            width = event.width_after(width);
            max_width = max_width.max(width);
        }
        if width != 0 {
            return Err(Error::NonzeroFinalStrands(width));
        }
        Ok(FrontWord {
            events,
            max_width,
            left_cusps,
            right_cusps,
            crossings,
        })
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn into_events(self) -> Vec<Event> {
        self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn max_width(&self) -> usize {
        self.max_width
    }

    pub fn left_cusp_count(&self) -> usize {
        self.left_cusps
    }

    pub fn right_cusp_count(&self) -> usize {
        self.right_cusps
    }

    pub fn cusp_count(&self) -> usize {
        self.left_cusps + self.right_cusps
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings
    }

    /// Strand count at each event boundary; entry `t` is the width after the
    /// first `t` events.
    pub fn widths(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.events.len() + 1);
        let mut width = 0;
        out.push(width);
        for e in &self.events {
            width = e.width_after(width);
            out.push(width);
        }
        out
    }

    /// Number of closed curves traced by the word.
    pub fn component_count(&self) -> usize {
        Sweep::new(self).component_count()
    }

    pub fn orient(&self) -> Result<OrientedFront> {
        orient(self)
    }

    pub fn tb(&self) -> Result<i64> {
        tb(self)
    }
}

impl fmt::Display for FrontWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.events.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

pub fn component_count(f: &FrontWord) -> usize {
    f.component_count()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum EventSegments {
    Cusp {
        upper: usize,
        lower: usize,
    },
    /// `in_*` end at the crossing from the left, `out_*` start there.
    /// The over-strand runs `in_upper -> out_lower`.
    Crossing {
        in_upper: usize,
        in_lower: usize,
        out_upper: usize,
        out_lower: usize,
    },
}

/// Strand segments of a word: maximal pieces of strand between two events.
///
/// Segment ends are glued at cusp tips and straight through crossings; the
/// resulting graph is a disjoint union of cycles, one per component.
#[derive(Debug, Clone)]
pub(crate) struct Sweep {
    pub(crate) events: Vec<EventSegments>,
    /// `links[s][side]` is the segment end glued to that end of `s`.
    links: Vec<[(usize, Side); 2]>,
    /// Live segments, top to bottom, at every event boundary.
    pub(crate) live: Vec<Vec<usize>>,
    /// Event where each segment starts and ends.
    pub(crate) span: Vec<(usize, usize)>,
}

impl Sweep {
    pub(crate) fn new(word: &FrontWord) -> Self {
        let mut links: Vec<[(usize, Side); 2]> = Vec::new();
        let mut span: Vec<(usize, usize)> = Vec::new();
        let mut events = Vec::with_capacity(word.len());
        let mut live: Vec<Vec<usize>> = Vec::with_capacity(word.len() + 1);
        let mut current: Vec<usize> = Vec::new();
        live.push(current.clone());

        fn fresh(links: &mut Vec<[(usize, Side); 2]>, span: &mut Vec<(usize, usize)>, at: usize) -> usize {
            links.push([(usize::MAX, Side::Left); 2]);
            span.push((at, usize::MAX));
            links.len() - 1
        }
        fn glue(links: &mut [[(usize, Side); 2]], a: (usize, Side), b: (usize, Side)) {
            links[a.0][a.1 as usize] = b;
            links[b.0][b.1 as usize] = a;
        }

        for (i, e) in word.events().iter().enumerate() {
            let p = e.pos;
            match e.kind {
                EventKind::LeftCusp => {
                    let upper = fresh(&mut links, &mut span, i);
                    let lower = fresh(&mut links, &mut span, i);
                    glue(&mut links, (upper, Side::Left), (lower, Side::Left));
                    current.splice(p..p, [upper, lower]);
                    events.push(EventSegments::Cusp { upper, lower });
                }
                EventKind::RightCusp => {
                    let upper = current[p];
                    let lower = current[p + 1];
                    current.drain(p..p + 2);
                    span[upper].1 = i;
                    span[lower].1 = i;
                    glue(&mut links, (upper, Side::Right), (lower, Side::Right));
                    events.push(EventSegments::Cusp { upper, lower });
                }
                EventKind::Crossing => {
                    let in_upper = current[p];
                    let in_lower = current[p + 1];
                    span[in_upper].1 = i;
                    span[in_lower].1 = i;
                    let out_upper = fresh(&mut links, &mut span, i);
                    let out_lower = fresh(&mut links, &mut span, i);
                    glue(&mut links, (in_upper, Side::Right), (out_lower, Side::Left));
                    glue(&mut links, (in_lower, Side::Right), (out_upper, Side::Left));
                    current[p] = out_upper;
                    current[p + 1] = out_lower;
                    events.push(EventSegments::Crossing {
                        in_upper,
                        in_lower,
                        out_upper,
                        out_lower,
                    });
                }
            }
            live.push(current.clone());
        }
        Sweep {
            events,
            links,
            live,
            span,
        }
    }

    pub(crate) fn segment_count(&self) -> usize {
        self.links.len()
    }

    pub(crate) fn link(&self, seg: usize, side: Side) -> (usize, Side) {
        self.links[seg][side as usize]
    }

    /// Walks the cycle through `start`, leaving it through its `exit` end.
    /// Calls `visit(segment, rightward)` for every segment on the cycle.
    pub(crate) fn walk(&self, start: usize, exit: Side, mut visit: impl FnMut(usize, bool)) {
        let (mut seg, mut exit) = (start, exit);
        loop {
            visit(seg, exit == Side::Right);
            let (next, entered) = self.link(seg, exit);
            seg = next;
            exit = match entered {
                Side::Left => Side::Right,
                Side::Right => Side::Left,
            };
            if seg == start {
                break;
            }
        }
    }

    pub(crate) fn component_count(&self) -> usize {
        let mut seen = vec![false; self.segment_count()];
        let mut count = 0;
        for s in 0..seen.len() {
            if !seen[s] {
                count += 1;
                self.walk(s, Side::Right, |t, _| seen[t] = true);
            }
        }
        count
    }
}

/// Up or down classification of a cusp along a traversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CuspClass {
    Up,
    Down,
}

/// A knot front together with a traversal direction on every segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedFront {
    word: FrontWord,
    rightward: Vec<bool>,
    up: usize,
    down: usize,
    cusps: Vec<CuspClass>,
    signs: Vec<i8>,
}

/// Orients a knot front: the upper strand born at the first left cusp runs
/// rightward.
pub fn orient(f: &FrontWord) -> Result<OrientedFront> {
    orient_with_seed(f, true)
}

/// Orients a knot front so that the upper strand born at the first left cusp
/// runs rightward (`true`) or leftward (`false`).
pub fn orient_with_seed(f: &FrontWord, seed_rightward: bool) -> Result<OrientedFront> {
    let sweep = Sweep::new(f);
    let components = sweep.component_count();
    if components != 1 {
        return Err(Error::MultiComponent(components));
    }
    let mut rightward = vec![false; sweep.segment_count()];
    // segment 0 is the upper strand of event 0
    let exit = if seed_rightward { Side::Right } else { Side::Left };
    sweep.walk(0, exit, |s, r| rightward[s] = r);
    Ok(OrientedFront::from_directions(f.clone(), &sweep, rightward))
}

impl OrientedFront {
    fn from_directions(word: FrontWord, sweep: &Sweep, rightward: Vec<bool>) -> Self {
        let (mut up, mut down) = (0, 0);
        let mut cusps = Vec::with_capacity(word.cusp_count());
        let mut signs = Vec::with_capacity(word.crossing_count());
        for (e, segs) in word.events().iter().zip(&sweep.events) {
            match *segs {
                EventSegments::Cusp { upper, .. } => {
                    let class = cusp_class(e.kind, rightward[upper]);
                    match class {
                        CuspClass::Up => up += 1,
                        CuspClass::Down => down += 1,
                    }
                    cusps.push(class);
                }
                EventSegments::Crossing {
                    in_upper, in_lower, ..
                } => signs.push(crossing_sign(rightward[in_upper], rightward[in_lower])),
            }
        }
        OrientedFront {
            word,
            rightward,
            up,
            down,
            cusps,
            signs,
        }
    }

    pub fn word(&self) -> &FrontWord {
        &self.word
    }

    /// Direction of every segment, indexed in sweep order of creation.
    pub fn directions(&self) -> &[bool] {
        &self.rightward
    }

    pub fn up_cusps(&self) -> usize {
        self.up
    }

    pub fn down_cusps(&self) -> usize {
        self.down
    }

    /// Class of every cusp, in event order.
    pub fn cusp_classes(&self) -> &[CuspClass] {
        &self.cusps
    }

    pub fn crossing_signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    /// `(D - U) / 2`.
    pub fn rotation(&self) -> i64 {
        let diff = self.down as i64 - self.up as i64;
        debug_assert!(diff % 2 == 0, "odd cusp imbalance on a knot");
        diff / 2
    }

    pub fn tb(&self) -> i64 {
        self.writhe() - self.word.right_cusp_count() as i64
    }

    pub fn reverse(&self) -> OrientedFront {
        OrientedFront {
            word: self.word.clone(),
            rightward: self.rightward.iter().map(|r| !r).collect(),
            up: self.down,
            down: self.up,
            cusps: self.cusps.iter().map(|c| c.flipped()).collect(),
            signs: self.signs.clone(),
        }
    }
}

impl CuspClass {
    pub fn flipped(self) -> CuspClass {
        match self {
            CuspClass::Up => CuspClass::Down,
            CuspClass::Down => CuspClass::Up,
        }
    }
}

/// A cusp is down when the traversal enters along the upper branch.
fn cusp_class(kind: EventKind, upper_rightward: bool) -> CuspClass {
    let enters_upper = match kind {
        EventKind::LeftCusp => !upper_rightward,
        EventKind::RightCusp => upper_rightward,
        EventKind::Crossing => unreachable!("not a cusp"),
    };
    if enters_upper {
        CuspClass::Down
    } else {
        CuspClass::Up
    }
}

/// Sign of a crossing in the `(x, z)` screen plane seen from `y = -inf`.
///
/// The over-strand runs from the upper-left to the lower-right end, the
/// under-strand from lower-left to upper-right; either may be traversed
/// backwards. The sign is that of `over x under`.
fn crossing_sign(over_rightward: bool, under_rightward: bool) -> i8 {
    let over: (i64, i64) = if over_rightward { (1, -1) } else { (-1, 1) };
    let under: (i64, i64) = if under_rightward { (1, 1) } else { (-1, -1) };
    let cross = over.0 * under.1 - over.1 * under.0;
    if cross > 0 {
        1
    } else {
        -1
    }
}

pub fn reverse(o: &OrientedFront) -> OrientedFront {
    o.reverse()
}

pub fn crossing_signs(o: &OrientedFront) -> Vec<i8> {
    o.crossing_signs().to_vec()
}

pub fn writhe(o: &OrientedFront) -> i64 {
    o.writhe()
}

pub fn rotation(o: &OrientedFront) -> i64 {
    o.rotation()
}

/// Thurston-Bennequin number: writhe minus the number of right cusps.
pub fn tb(f: &FrontWord) -> Result<i64> {
    Ok(orient(f)?.tb())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sense {
    Up,
    Down,
}

/// Inserts a zigzag on the top strand at event boundary `site`.
pub fn stabilize(f: &FrontWord, sense: Sense, site: usize) -> Result<FrontWord> {
    stabilize_strand(f, sense, site, 0)
}

/// Inserts a zigzag of the given sense on the strand at index `strand` just
/// after the first `site` events. The two new cusps both have class `sense`
/// under the canonical orientation.
pub fn stabilize_strand(f: &FrontWord, sense: Sense, site: usize, strand: usize) -> Result<FrontWord> {
    let o = orient(f)?;
    let sweep = Sweep::new(f);
    if site == 0 || site >= f.len() {
        return Err(Error::InvalidSite {
            site,
            reason: "site must lie strictly inside the word",
        });
    }
    let Some(&seg) = sweep.live[site].get(strand) else {
        return Err(Error::InvalidSite {
            site,
            reason: "no live strand at that index",
        });
    };
    let rightward = o.directions()[seg];
    // Rising zigzag: new pair above the strand, which dies with the lower new one.
    let rising = matches!((sense, rightward), (Sense::Up, true) | (Sense::Down, false));
    let zigzag = if rising {
        [Event::left(strand), Event::right(strand + 1)]
    } else {
        [Event::left(strand + 1), Event::right(strand)]
    };
    let mut events = f.events().to_vec();
    events.splice(site..site, zigzag);
    FrontWord::new(events)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(events: &[Event]) -> FrontWord {
        FrontWord::new(events.to_vec()).unwrap()
    }

    fn trefoil() -> FrontWord {
        use Event as E;
        w(&[
            E::left(0),
            E::left(1),
            E::cross(2),
            E::cross(2),
            E::cross(2),
            E::right(1),
            E::right(0),
        ])
    }

    #[test]
    fn saucer_counts() {
        let f = w(&[Event::left(0), Event::right(0)]);
        assert_eq!(f.max_width(), 2);
        assert_eq!(f.left_cusp_count(), 1);
        assert_eq!(f.right_cusp_count(), 1);
        assert_eq!(f.crossing_count(), 0);
        assert_eq!(f.component_count(), 1);
        assert_eq!(f.tb().unwrap(), -1);
    }

    #[test]
    fn make_front_errors() {
        assert_eq!(FrontWord::new(vec![]), Err(Error::EmptyWord));
        assert_eq!(
            FrontWord::new(vec![Event::left(0), Event::right(1)]),
            Err(Error::IndexOutOfRange {
                index: 1,
                event: Event::right(1),
                width: 2
            })
        );
        assert_eq!(
            FrontWord::new(vec![Event::left(0), Event::left(0)]),
            Err(Error::NonzeroFinalStrands(4))
        );
        assert!(matches!(
            FrontWord::new(vec![Event::cross(0)]),
            Err(Error::IndexOutOfRange { index: 0, .. })
        ));
    }

    #[test]
    fn trefoil_counts() {
        let t = trefoil();
        assert_eq!(t.max_width(), 4);
        assert_eq!(t.left_cusp_count(), 2);
        assert_eq!(t.right_cusp_count(), 2);
        assert_eq!(t.crossing_count(), 3);
        assert_eq!(t.component_count(), 1);
        assert_eq!(t.widths(), vec![0, 2, 4, 4, 4, 4, 2, 0]);
    }

    #[test]
    fn two_saucers_are_a_link() {
        let f = w(&[Event::left(0), Event::right(0), Event::left(0), Event::right(0)]);
        assert_eq!(f.component_count(), 2);
        assert_eq!(orient(&f), Err(Error::MultiComponent(2)));
        assert_eq!(tb(&f), Err(Error::MultiComponent(2)));
    }

    #[test]
    fn saucer_orientation() {
        let o = orient(&w(&[Event::left(0), Event::right(0)])).unwrap();
        assert_eq!((o.up_cusps(), o.down_cusps()), (1, 1));
        assert_eq!(o.directions(), &[true, false]);
        assert_eq!(o.rotation(), 0);
        assert!(o.crossing_signs().is_empty());
    }

    #[test]
    fn kink_is_antiparallel_and_negative() {
        let o = orient(&w(&[Event::left(0), Event::cross(0), Event::right(0)])).unwrap();
        // in_upper (seg 0) and in_lower (seg 1)
        assert_ne!(o.directions()[0], o.directions()[1]);
        assert_eq!(o.crossing_signs(), &[-1]);
        assert_eq!(o.writhe(), -1);
        assert_eq!(o.tb(), -2);
    }

    #[test]
    fn trefoil_signs() {
        let o = orient(&trefoil()).unwrap();
        assert_eq!(o.crossing_signs(), &[1, 1, 1]);
        assert_eq!(o.writhe(), 3);
        assert_eq!(o.tb(), 1);
        assert_eq!(o.rotation(), 0);
    }

    #[test]
    fn seed_direction_gives_the_reverse() {
        for t in [trefoil(), w(&[Event::left(0), Event::cross(0), Event::right(0)])] {
            let o = orient(&t).unwrap();
            let back = orient_with_seed(&t, false).unwrap();
            assert_eq!(back, o.reverse());
            assert_eq!(back.tb(), o.tb());
        }
    }

    #[test]
    fn reverse_is_an_involution() {
        let o = orient(&trefoil()).unwrap();
        let r = o.reverse();
        assert_eq!(r.reverse(), o);
        assert_eq!(r.writhe(), o.writhe());
        assert_eq!(r.rotation(), -o.rotation());
        assert_eq!((r.up_cusps(), r.down_cusps()), (o.down_cusps(), o.up_cusps()));
    }

    #[test]
    fn stabilize_saucer() {
        let s = w(&[Event::left(0), Event::right(0)]);
        let up = stabilize(&s, Sense::Up, 1).unwrap();
        assert_eq!(up.len(), 4);
        assert_eq!(up.tb().unwrap(), -2);
        assert_eq!(orient(&up).unwrap().rotation(), -1);
        let down = stabilize(&s, Sense::Down, 1).unwrap();
        assert_eq!(down.tb().unwrap(), -2);
        assert_eq!(orient(&down).unwrap().rotation(), 1);
    }

    #[test]
    fn stabilize_rejects_bad_sites() {
        let s = w(&[Event::left(0), Event::right(0)]);
        assert!(matches!(stabilize(&s, Sense::Up, 0), Err(Error::InvalidSite { .. })));
        assert!(matches!(stabilize(&s, Sense::Up, 2), Err(Error::InvalidSite { .. })));
        assert!(matches!(
            stabilize_strand(&s, Sense::Up, 1, 2),
            Err(Error::InvalidSite { .. })
        ));
    }

    #[test]
    fn stabilize_on_leftward_strand() {
        // strand 1 of the saucer runs leftward
        let s = w(&[Event::left(0), Event::right(0)]);
        for sense in [Sense::Up, Sense::Down] {
            let st = stabilize_strand(&s, sense, 1, 1).unwrap();
            let r = orient(&st).unwrap().rotation();
            assert_eq!(r, if sense == Sense::Up { -1 } else { 1 });
            assert_eq!(st.tb().unwrap(), -2);
        }
    }

    #[test]
    fn event_order_is_kind_then_position() {
        assert!(Event::left(3) < Event::right(0));
        assert!(Event::right(3) < Event::cross(0));
        assert!(Event::cross(0) < Event::cross(1));
        assert_eq!(trefoil().to_string(), "L0 L1 X2 X2 X2 R1 R0");
    }
}
