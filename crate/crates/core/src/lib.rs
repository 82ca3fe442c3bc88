//! Combinatorial engine for Legendrian knot fronts.
//!
//! Fronts are encoded as sweep-line event words ([`front::FrontWord`]). From a
//! word the crate computes the Thurston-Bennequin and rotation numbers, builds
//! connected sums by splicing cusps, recovers the underlying knot diagram with
//! its Kauffman bracket, and searches bounded spaces of fronts for the maximal
//! Thurston-Bennequin number of each Jones class.

pub mod classify;
pub mod construct;
pub mod diagram;
pub mod error;
pub mod front;
pub mod poly;
pub mod report;
pub mod search;
pub mod svg;
pub mod text;

pub use classify::{fingerprint, normalized_jones, Fingerprint};
pub use construct::{connected_sum, flying_saucer, split_at, standard_unknot};
pub use diagram::{bracket, to_diagram, PdCode, DEFAULT_CROSSING_LIMIT};
pub use error::{Error, Result};
pub use front::{make_front, orient, orient_with_seed, stabilize, tb, Event, EventKind, FrontWord, OrientedFront, Sense};
pub use poly::LaurentPoly;
pub use search::{additivity_audit, enumerate_fronts, run_search, AuditReport, AuditStatus, Budget, SearchReport};
pub use text::{format_word, parse_word};
