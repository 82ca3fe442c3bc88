//! Bounded exhaustive search for maximal Thurston-Bennequin numbers per
//! Jones class, and the connected-sum additivity audit built on it.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::classify::{fingerprint, Fingerprint};
use crate::construct::connected_sum;
use crate::error::{Error, Result};
use crate::front::{Event, FrontWord};
use crate::poly::LaurentPoly;

/// Size limits for the search space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Budget {
    pub max_events: usize,
    pub max_width: usize,
    /// Words with more crossings are counted but not classified.
    pub max_crossings: usize,
}

impl Budget {
    pub fn new(max_events: usize, max_width: usize, max_crossings: usize) -> Result<Self> {
        if max_events < 2 {
            return Err(Error::InvalidBudget("max events must be at least 2"));
        }
        if max_width < 2 || max_width % 2 != 0 {
            return Err(Error::InvalidBudget("max width must be even and at least 2"));
        }
        if max_crossings == 0 {
            return Err(Error::InvalidBudget("max crossings must be positive"));
        }
        Ok(Budget {
            max_events,
            max_width,
            max_crossings,
        })
    }

    /// Default used by the test suite and CLI: 8 events, width 4, 12 crossings.
    pub fn ci_default() -> Self {
        Budget {
            max_events: 8,
            max_width: 4,
            max_crossings: 12,
        }
    }

    pub fn fits(&self, f: &FrontWord) -> bool {
        f.len() <= self.max_events
            && f.max_width() <= self.max_width
            && f.crossing_count() <= self.max_crossings
    }

    /// Componentwise `self <= other`.
    pub fn within(&self, other: &Budget) -> bool {
        self.max_events <= other.max_events
            && self.max_width <= other.max_width
            && self.max_crossings <= other.max_crossings
    }
}

/// Events legal at `width`, in ascending order.
fn candidates(width: usize) -> Vec<Event> {
    let mut out: Vec<Event> = (0..=width).map(Event::left).collect();
    if width >= 2 {
        out.extend((0..=width - 2).map(Event::right));
        out.extend((0..=width - 2).map(Event::cross));
    }
    out
}

/// Depth-first, lexicographic enumeration of single-component words within a
/// budget. A prefix is abandoned once the remaining events cannot close its
/// live strands.
pub struct FrontEnumerator {
    max_events: usize,
    max_width: usize,
    prefix: Vec<Event>,
    widths: Vec<usize>,
    stack: Vec<(Vec<Event>, usize)>,
    pending: Option<FrontWord>,
}

impl FrontEnumerator {
    pub fn new(budget: &Budget) -> Self {
        Self::from_prefix(budget, Vec::new())
    }

    /// Enumerates the words that extend `prefix`. The prefix must be legal
    /// within the budget.
    pub fn from_prefix(budget: &Budget, prefix: Vec<Event>) -> Self {
        let mut width = 0;
        let mut widths = vec![0];
        for e in &prefix {
            debug_assert!(e.is_legal_at(width));
            width = e.width_after(width);
            widths.push(width);
        }
        let mut it = FrontEnumerator {
            max_events: budget.max_events,
            max_width: budget.max_width,
            prefix,
            widths,
            stack: Vec::new(),
            pending: None,
        };
        if !it.prefix.is_empty() && width == 0 {
            it.pending = closed_knot(&it.prefix);
        } else {
            it.stack.push((candidates(width), 0));
        }
        it
    }
}

fn closed_knot(events: &[Event]) -> Option<FrontWord> {
    let word = FrontWord::new(events.to_vec()).ok()?;
    (word.component_count() == 1).then_some(word)
}

impl Iterator for FrontEnumerator {
    type Item = FrontWord;

    fn next(&mut self) -> Option<FrontWord> {
        if let Some(w) = self.pending.take() {
            return Some(w);
        }
        loop {
            let (cands, next) = self.stack.last_mut()?;
            let Some(&e) = cands.get(*next) else {
                // each level above the root was entered by pushing one event
                self.stack.pop();
                if !self.stack.is_empty() {
                    self.prefix.pop();
                    self.widths.pop();
                }
                continue;
            };
            *next += 1;
            let width = e.width_after(*self.widths.last().expect("root width"));
            let remaining = self.max_events - self.prefix.len() - 1;
            if width > self.max_width || remaining < width / 2 {
                continue;
            }
            self.prefix.push(e);
            if width == 0 {
                let found = closed_knot(&self.prefix);
                self.prefix.pop();
                if found.is_some() {
                    return found;
                }
                continue;
            }
            self.widths.push(width);
            self.stack.push((candidates(width), 0));
        }
    }
}

/// Every valid single-component word within the budget, each once, in
/// lexicographic event order.
pub fn enumerate_fronts(budget: &Budget) -> FrontEnumerator {
    FrontEnumerator::new(budget)
}

/// Legal prefixes of exactly `depth` events (or shorter closed words),
/// in lexicographic order. Used to split the search tree across workers.
fn split_prefixes(budget: &Budget, depth: usize) -> Vec<Vec<Event>> {
    fn go(budget: &Budget, depth: usize, prefix: &mut Vec<Event>, width: usize, out: &mut Vec<Vec<Event>>) {
        if prefix.len() == depth || (!prefix.is_empty() && width == 0) {
            out.push(prefix.clone());
            return;
        }
        for e in candidates(width) {
            let w = e.width_after(width);
            let remaining = budget.max_events - prefix.len() - 1;
            if w > budget.max_width || remaining < w / 2 {
                continue;
            }
            prefix.push(e);
            go(budget, depth, prefix, w, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(budget, depth, &mut Vec::new(), 0, &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BucketRecord {
    pub max_tb: i64,
    /// Shortest word attaining `max_tb`, lexicographically smallest among those.
    pub witness: FrontWord,
    pub population: u64,
    pub crossing_floor: usize,
}

/// Shortlex order on words: length first, then events.
pub fn witness_order(a: &FrontWord, b: &FrontWord) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.events().cmp(b.events()))
}

impl BucketRecord {
    fn merge(&mut self, other: BucketRecord) {
        let better = other.max_tb > self.max_tb
            || (other.max_tb == self.max_tb && witness_order(&other.witness, &self.witness).is_lt());
        if better {
            self.max_tb = other.max_tb;
            self.witness = other.witness;
        }
        self.population += other.population;
        self.crossing_floor = self.crossing_floor.min(other.crossing_floor);
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct Partial {
    buckets: BTreeMap<LaurentPoly, BucketRecord>,
    enumerated: u64,
    skipped: u64,
}

impl Partial {
    fn absorb(&mut self, word: FrontWord, max_crossings: usize) -> Result<()> {
        self.enumerated += 1;
        if word.crossing_count() > max_crossings {
            self.skipped += 1;
            return Ok(());
        }
        let tb = word.tb()?;
        let fp = fingerprint(&word, max_crossings)?;
        let rec = BucketRecord {
            max_tb: tb,
            witness: word,
            population: 1,
            crossing_floor: fp.crossing_floor,
        };
        self.insert(fp.jones_class, rec);
        Ok(())
    }

    fn insert(&mut self, key: LaurentPoly, rec: BucketRecord) {
        match self.buckets.get_mut(&key) {
            Some(existing) => existing.merge(rec),
            None => {
                self.buckets.insert(key, rec);
            }
        }
    }

    fn merge(mut self, other: Partial) -> Partial {
        self.enumerated += other.enumerated;
        self.skipped += other.skipped;
        for (k, rec) in other.buckets {
            self.insert(k, rec);
        }
        self
    }
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    pub budget: Budget,
    pub buckets: BTreeMap<LaurentPoly, BucketRecord>,
    pub enumerated: u64,
    /// Words over the crossing limit; counted in `enumerated`, not bucketed.
    pub skipped: u64,
    pub elapsed: Duration,
}

impl PartialEq for SearchReport {
    fn eq(&self, other: &Self) -> bool {
        self.budget == other.budget
            && self.buckets == other.buckets
            && self.enumerated == other.enumerated
            && self.skipped == other.skipped
    }
}

impl SearchReport {
    pub fn bucket(&self, class: &LaurentPoly) -> Option<&BucketRecord> {
        self.buckets.get(class)
    }

    pub fn unknot_bucket(&self) -> Option<&BucketRecord> {
        self.bucket(&LaurentPoly::one())
    }

    pub fn fingerprint_of(&self, class: &LaurentPoly) -> Option<Fingerprint> {
        self.bucket(class).map(|rec| Fingerprint {
            jones_class: class.clone(),
            crossing_floor: rec.crossing_floor,
        })
    }

    /// Recomputes every witness and checks it against its record.
    pub fn verify_witnesses(&self) -> Result<()> {
        for (class, rec) in &self.buckets {
            let tb = rec.witness.tb()?;
            let fp = fingerprint(&rec.witness, self.budget.max_crossings)?;
            if tb != rec.max_tb || &fp.jones_class != class || !self.budget.fits(&rec.witness) {
                return Err(Error::Report(format!(
                    "witness {} does not reproduce bucket {class}",
                    rec.witness
                )));
            }
        }
        Ok(())
    }
}

/// Buckets all words within the budget by Jones class. The result does not
/// depend on `workers`.
pub fn run_search(budget: &Budget, workers: usize) -> Result<SearchReport> {
    let start = Instant::now();
    let absorb_all = |prefix: Vec<Event>| -> Result<Partial> {
        let mut part = Partial::default();
        for word in FrontEnumerator::from_prefix(budget, prefix) {
            part.absorb(word, budget.max_crossings)?;
        }
        Ok(part)
    };

    let total = if workers <= 1 {
        absorb_all(Vec::new())?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::Report(e.to_string()))?;
        let tasks = split_prefixes(budget, 4.min(budget.max_events));
        pool.install(|| {
            tasks
                .into_par_iter()
                .map(absorb_all)
                .try_reduce(Partial::default, |a, b| Ok(a.merge(b)))
        })?
    };

    Ok(SearchReport {
        budget: *budget,
        buckets: total.buckets,
        enumerated: total.enumerated,
        skipped: total.skipped,
        elapsed: start.elapsed(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AuditStatus {
    Equal,
    LhsGreater,
    LhsLessFlag,
}

impl fmt::Display for AuditStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AuditStatus::Equal => "EQUAL",
            AuditStatus::LhsGreater => "LHS_GREATER",
            AuditStatus::LhsLessFlag => "LHS_LESS_FLAG",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditTriple {
    pub f1: Fingerprint,
    pub f2: Fingerprint,
    pub product: Fingerprint,
    pub lhs_max: i64,
    pub rhs_sum: i64,
    pub witness_spliced: FrontWord,
    pub spliced_tb: i64,
    /// The spliced witness lies inside the report's budget.
    pub spliced_fits: bool,
    /// No product bucket in the report; `lhs_max` is the spliced witness's tb.
    pub out_of_budget: bool,
    pub status: AuditStatus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub triples: Vec<AuditTriple>,
}

impl AuditReport {
    /// Triples contradicting the report's own maxima: the spliced witness was
    /// in the search space, yet the product bucket's maximum is below it.
    pub fn violations(&self) -> impl Iterator<Item = &AuditTriple> {
        self.triples
            .iter()
            .filter(|t| t.status == AuditStatus::LhsLessFlag && t.spliced_fits)
    }
}

/// Checks `max(k1 # k2) = max(k1) + max(k2) + 1` on the given bucket pairs by
/// splicing their witnesses.
pub fn additivity_audit(report: &SearchReport, pairs: &[(LaurentPoly, LaurentPoly)]) -> Result<AuditReport> {
    let mut triples = Vec::with_capacity(pairs.len());
    for (c1, c2) in pairs {
        let lookup = |c: &LaurentPoly| {
            report
                .bucket(c)
                .ok_or_else(|| Error::UnknownBucket(c.to_string()))
        };
        let (b1, b2) = (lookup(c1)?, lookup(c2)?);
        let f1 = report.fingerprint_of(c1).expect("bucket exists");
        let f2 = report.fingerprint_of(c2).expect("bucket exists");
        let product = f1.product(&f2);
        let spliced = connected_sum(&b1.witness, &b2.witness)?;
        let spliced_tb = spliced.tb()?;
        let rhs_sum = b1.max_tb + b2.max_tb + 1;
        let (lhs_max, out_of_budget) = match report.bucket(&product.jones_class) {
            Some(rec) => (rec.max_tb, false),
            None => (spliced_tb, true),
        };
        let status = match lhs_max.cmp(&rhs_sum) {
            std::cmp::Ordering::Equal => AuditStatus::Equal,
            std::cmp::Ordering::Greater => AuditStatus::LhsGreater,
            std::cmp::Ordering::Less => AuditStatus::LhsLessFlag,
        };
        triples.push(AuditTriple {
            f1,
            f2,
            product,
            lhs_max,
            rhs_sum,
            spliced_fits: report.budget.fits(&spliced),
            witness_spliced: spliced,
            spliced_tb,
            out_of_budget,
            status,
        });
    }
    Ok(AuditReport { triples })
}
