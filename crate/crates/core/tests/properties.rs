use lkit_core::classify::{fingerprint, normalized_jones};
use lkit_core::construct::{connected_sum, flying_saucer, split_at, standard_unknot};
use lkit_core::diagram::{bracket, bracket_with_order, to_diagram};
use lkit_core::front::{orient, orient_with_seed, stabilize_strand, CuspClass, Event, EventKind, FrontWord, Sense};
use lkit_core::search::{enumerate_fronts, Budget};
use lkit_core::svg::{render_svg, RenderStyle};
use lkit_core::text::{format_word, parse_word};
use proptest::prelude::*;

const LIMIT: usize = 16;

/// Builds a closed word from arbitrary choices: at each step pick among the
/// legal events that still leave room to close, then close with right cusps.
fn word_from_choices(choices: &[u8], max_width: usize) -> FrontWord {
    let mut events = vec![Event::left(0)];
    let mut width = 2;
    for &c in choices {
        let mut legal: Vec<Event> = Vec::new();
        if width + 2 <= max_width {
            legal.extend((0..=width).map(Event::left));
        }
        legal.extend((0..=width - 2).map(Event::cross));
        if width > 2 {
            legal.extend((0..=width - 2).map(Event::right));
        }
        let e = legal[c as usize % legal.len()];
        width = e.width_after(width);
        events.push(e);
    }
    while width > 0 {
        events.push(Event::right(0));
        width -= 2;
    }
    FrontWord::new(events).expect("construction keeps the sweep legal")
}

fn arb_knot() -> impl Strategy<Value = FrontWord> {
    (prop::collection::vec(any::<u8>(), 0..9), prop_oneof![Just(4usize), Just(6)])
        .prop_map(|(c, w)| word_from_choices(&c, w))
        .prop_filter("single component", |f| f.component_count() == 1)
}

/// Rotates the front by a half turn in the (x, z) plane, a contactomorphism of
/// the standard structure that preserves orientation of space.
fn half_turn(f: &FrontWord) -> FrontWord {
    let widths = f.widths();
    let n = f.len();
    let events = (0..n)
        .rev()
        .map(|i| {
            let e = f.events()[i];
            // width on the new left side of this event is the old right side
            let w = widths[i + 1].max(widths[i]);
            let pos = w - 2 - e.pos;
            match e.kind {
                EventKind::LeftCusp => Event::right(pos),
                EventKind::RightCusp => Event::left(pos),
                EventKind::Crossing => Event::cross(pos),
            }
        })
        .collect();
    FrontWord::new(events).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cusp_parity_and_balance(f in arb_knot()) {
        prop_assert_eq!(f.left_cusp_count(), f.right_cusp_count());
        prop_assert_eq!(f.cusp_count() % 2, 0);
        prop_assert!(f.widths().iter().all(|w| w % 2 == 0));
        let o = orient(&f).unwrap();
        prop_assert_eq!(o.up_cusps() + o.down_cusps(), f.cusp_count());
        prop_assert_eq!(o.crossing_signs().len(), f.crossing_count());
    }

    #[test]
    fn tb_does_not_see_orientation(f in arb_knot()) {
        let o = orient(&f).unwrap();
        let back = orient_with_seed(&f, false).unwrap();
        prop_assert_eq!(back.tb(), o.tb());
        prop_assert_eq!(back.writhe(), o.writhe());
        prop_assert_eq!(back.rotation(), -o.rotation());
        prop_assert_eq!(&o.reverse(), &back);
        prop_assert_eq!(o.reverse().reverse(), o);
    }

    #[test]
    fn half_turn_preserves_tb_and_class(f in arb_knot()) {
        let g = half_turn(&f);
        prop_assert_eq!(g.tb().unwrap(), f.tb().unwrap());
        prop_assert_eq!(half_turn(&g), f.clone());
        prop_assert_eq!(normalized_jones(&g, LIMIT).unwrap(), normalized_jones(&f, LIMIT).unwrap());
    }

    #[test]
    fn stabilization(f in arb_knot(), site in any::<prop::sample::Index>(), strand in any::<prop::sample::Index>(), up in any::<bool>()) {
        let t = 1 + site.index(f.len() - 1);
        let width = f.widths()[t];
        let strand = strand.index(width);
        let sense = if up { Sense::Up } else { Sense::Down };
        let g = stabilize_strand(&f, sense, t, strand).unwrap();
        prop_assert_eq!(g.tb().unwrap(), f.tb().unwrap() - 1);
        prop_assert_eq!(g.component_count(), 1);
        let (r0, r1) = (orient(&f).unwrap().rotation(), orient(&g).unwrap().rotation());
        prop_assert_eq!(r1 - r0, if up { -1 } else { 1 });
        prop_assert_eq!((r1.abs() - r0.abs()).abs(), 1);
        prop_assert_eq!(fingerprint(&g, LIMIT).unwrap(), fingerprint(&f, LIMIT).unwrap());
    }

    #[test]
    fn connected_sum_laws(a in arb_knot(), b in arb_knot(), c in arb_knot()) {
        let ab = connected_sum(&a, &b).unwrap();
        prop_assert_eq!(ab.tb().unwrap(), a.tb().unwrap() + b.tb().unwrap() + 1);
        prop_assert_eq!(ab.crossing_count(), a.crossing_count() + b.crossing_count());
        prop_assert_eq!(ab.right_cusp_count(), a.right_cusp_count() + b.right_cusp_count() - 1);
        prop_assert_eq!(
            connected_sum(&ab, &c).unwrap(),
            connected_sum(&a, &connected_sum(&b, &c).unwrap()).unwrap()
        );
        prop_assert_eq!(&connected_sum(&a, &flying_saucer()).unwrap(), &a);
        prop_assert_eq!(&connected_sum(&flying_saucer(), &a).unwrap(), &a);
        prop_assert_eq!(split_at(&ab, a.len() - 1).unwrap(), (a.clone(), b.clone()));
        prop_assert_eq!(
            normalized_jones(&ab, LIMIT).unwrap(),
            &normalized_jones(&a, LIMIT).unwrap() * &normalized_jones(&b, LIMIT).unwrap()
        );
    }

    #[test]
    fn rotation_adds_along_the_splice(a in arb_knot(), b in arb_knot()) {
        let oa = orient(&a).unwrap();
        let eps = match oa.cusp_classes().last() {
            Some(CuspClass::Down) => 1,
            _ => -1,
        };
        let r = orient(&connected_sum(&a, &b).unwrap()).unwrap().rotation();
        prop_assert_eq!(r, oa.rotation() + eps * orient(&b).unwrap().rotation());
    }

    #[test]
    fn splits_at_width_two(f in arb_knot()) {
        for (t, &w) in f.widths().iter().enumerate() {
            match split_at(&f, t) {
                Ok((l, r)) => {
                    prop_assert_eq!(w, 2);
                    prop_assert_eq!(f.tb().unwrap(), l.tb().unwrap() + r.tb().unwrap() + 1);
                    prop_assert_eq!(&connected_sum(&l, &r).unwrap(), &f);
                }
                Err(_) => prop_assert_ne!(w, 2),
            }
        }
    }

    #[test]
    fn diagram_matches_front(f in arb_knot()) {
        let d = to_diagram(&f).unwrap();
        prop_assert_eq!(d.crossing_count(), f.crossing_count());
        prop_assert_eq!(d.writhe, orient(&f).unwrap().writhe());
        let mut seen = vec![0; d.arcs];
        for x in &d.crossings {
            for a in x.ccw {
                seen[a] += 1;
            }
            prop_assert!(x.ccw.contains(&x.over_in) && x.ccw.contains(&x.over_out));
        }
        if d.crossing_count() > 0 {
            prop_assert!(seen.iter().all(|&k| k == 2));
        } else {
            prop_assert_eq!(d.arcs, 1);
        }
    }

    #[test]
    fn text_round_trip(f in arb_knot()) {
        prop_assert_eq!(parse_word(&format_word(&f)).unwrap(), f);
    }

    #[test]
    fn svg_structure(f in arb_knot()) {
        let svg = render_svg(&f, &RenderStyle::default());
        prop_assert_eq!(svg.matches("cusp-junction").count(), f.cusp_count());
        prop_assert_eq!(svg.matches("crossing-gap").count(), f.crossing_count());
        assert_no_vertical_tangents(&svg);
    }
}

/// Every cubic in every path has nondecreasing control-point `x` and
/// strictly advances in `x`, so its tangent is never vertical.
fn assert_no_vertical_tangents(svg: &str) {
    for line in svg.lines().filter(|l| l.contains("<path ")) {
        let d = line.split(" d=\"").nth(1).unwrap().split('"').next().unwrap();
        let nums: Vec<f64> = d
            .split(|c: char| c == ' ' || c == ',' || c == 'M' || c == 'C')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse().unwrap())
            .collect();
        let pts: Vec<(f64, f64)> = nums.chunks(2).map(|c| (c[0], c[1])).collect();
        assert_eq!((pts.len() - 1) % 3, 0);
        for cubic in pts.windows(4).step_by(3) {
            let xs: Vec<f64> = cubic.iter().map(|p| p.0).collect();
            assert!(xs.windows(2).all(|w| w[0] <= w[1] + 1e-9), "{d}");
            assert!(xs[1] > xs[0] - 1e-9 && xs[3] > xs[0], "{d}");
            // horizontal or forward tangent at both ends
            assert!(xs[1] > xs[0] || (cubic[1].1 - cubic[0].1).abs() < 1e-9 && xs[2] > xs[0], "{d}");
        }
    }
}

#[test]
fn bracket_is_order_independent() {
    let b = Budget::new(8, 4, 16).unwrap();
    for f in enumerate_fronts(&b).filter(|f| f.crossing_count() <= 6) {
        let d = to_diagram(&f).unwrap();
        let rev: Vec<usize> = (0..d.crossing_count()).rev().collect();
        assert_eq!(bracket(&d, LIMIT).unwrap(), bracket_with_order(&d, &rev, LIMIT).unwrap(), "{f}");
    }
}

#[test]
fn mirror_pair_from_enumeration() {
    let b = Budget::new(8, 4, 16).unwrap();
    let classes: std::collections::BTreeSet<_> = enumerate_fronts(&b)
        .map(|f| normalized_jones(&f, LIMIT).unwrap())
        .collect();
    let right = normalized_jones(&parse_word("L0 L1 X2 X2 X2 R1 R0").unwrap(), LIMIT).unwrap();
    let left = right.mirror();
    assert_ne!(left, right);
    assert!(classes.contains(&right) && classes.contains(&left));
    assert_eq!(left.mirror(), right);
}

#[test]
fn standard_unknot_family() {
    let unknot = fingerprint(&flying_saucer(), LIMIT).unwrap();
    for u in 0..=3 {
        for d in 0..=3 {
            let f = standard_unknot(u, d);
            assert_eq!(f.tb().unwrap(), -1 - u as i64 - d as i64);
            assert_eq!(orient(&f).unwrap().rotation(), d as i64 - u as i64);
            assert_eq!(fingerprint(&f, LIMIT).unwrap(), unknot);
        }
    }
}

#[test]
fn both_terminal_cusp_classes_occur() {
    // rotation additivity needs the sign flip only when the first summand ends in an up cusp
    let b = Budget::new(8, 4, 16).unwrap();
    let mut seen = (false, false);
    for f in enumerate_fronts(&b) {
        match orient(&f).unwrap().cusp_classes().last() {
            Some(CuspClass::Down) => seen.0 = true,
            Some(CuspClass::Up) => seen.1 = true,
            None => unreachable!(),
        }
    }
    assert!(seen.0);
    println!("terminal up cusp occurs: {}", seen.1);
}
