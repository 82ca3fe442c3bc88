//! Explicit front constructions: standard unknots, connected sum by cusp
//! splicing, and splitting a front along a width-2 vertical line.

use crate::error::{Error, Result};
use crate::front::{stabilize, Event, FrontWord, Sense};

/// The minimal unknot front `L0 R0`.
pub fn flying_saucer() -> FrontWord {
    FrontWord::new(vec![Event::left(0), Event::right(0)]).expect("saucer is valid")
}

/// Saucer with `up` up-zigzags and `down` down-zigzags on its top strand.
///
/// `tb = -1 - up - down` and `rotation = down - up`.
pub fn standard_unknot(up: usize, down: usize) -> FrontWord {
    let mut f = flying_saucer();
    let senses = std::iter::repeat(Sense::Up)
        .take(up)
        .chain(std::iter::repeat(Sense::Down).take(down));
    for sense in senses {
        f = stabilize(&f, sense, 1).expect("top strand of the saucer is live after event 0");
    }
    f
}

fn require_knot(f: &FrontWord) -> Result<()> {
    match f.component_count() {
        1 => Ok(()),
        n => Err(Error::MultiComponent(n)),
    }
}

/// Joins the final right cusp of `k1` to the initial left cusp of `k2`.
///
/// Both cusps are forced terminal events (`R0` at width 2 and `L0` at width 0),
/// so the splice is concatenation with those two events dropped.
pub fn connected_sum(k1: &FrontWord, k2: &FrontWord) -> Result<FrontWord> {
    require_knot(k1)?;
    require_knot(k2)?;
    let left = &k1.events()[..k1.len() - 1];
    let right = &k2.events()[1..];
    let events: Vec<Event> = left.iter().chain(right).copied().collect();
    FrontWord::new(events)
}

/// Cuts `f` by a vertical line after its first `boundary` events, capping the
/// two severed strands with a right cusp on the left piece and a left cusp on
/// the right piece.
pub fn split_at(f: &FrontWord, boundary: usize) -> Result<(FrontWord, FrontWord)> {
    require_knot(f)?;
    let width = f.widths().get(boundary).copied().unwrap_or(0);
    if width != 2 {
        return Err(Error::BadCutWidth { boundary, width });
    }
    let (head, tail) = f.events().split_at(boundary);
    let mut left = head.to_vec();
    left.push(Event::right(0));
    let mut right = Vec::with_capacity(tail.len() + 1);
    right.push(Event::left(0));
    right.extend_from_slice(tail);
    let left = FrontWord::new(left)?;
    let right = FrontWord::new(right)?;
    for piece in [&left, &right] {
        let n = piece.component_count();
        if n != 1 {
            return Err(Error::DisconnectedPiece(n));
        }
    }
    Ok((left, right))
}
