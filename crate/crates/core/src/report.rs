//! TOML document form of a [`SearchReport`].
//!
//! ```toml
//! format = "lkit-search-report"
//! version = 1
//!
//! [budget]
//! max_events = 8
//! max_width = 4
//! max_crossings = 16
//!
//! [totals]
//! enumerated = 1234
//! skipped = 0
//! buckets = 2
//!
//! [[bucket]]
//! jones = "1*A^0"
//! max_tb = -1
//! witness = "L0 R0"
//! population = 1000
//! crossing_floor = 0
//! ```
//!
//! Buckets appear in ascending order of their Jones class. Elapsed time is not
//! part of the document, so reports for a fixed budget are byte-identical.

use std::collections::BTreeMap;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::search::{BucketRecord, Budget, SearchReport};
use crate::text::parse_word;

const FORMAT: &str = "lkit-search-report";
const VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ReportDoc {
    format: String,
    version: u32,
    budget: BudgetDoc,
    totals: TotalsDoc,
    #[serde(default)]
    bucket: Vec<BucketDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BudgetDoc {
    max_events: usize,
    max_width: usize,
    max_crossings: usize,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TotalsDoc {
    enumerated: u64,
    skipped: u64,
    buckets: usize,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BucketDoc {
    jones: String,
    max_tb: i64,
    witness: String,
    population: u64,
    crossing_floor: usize,
}

pub fn to_toml(report: &SearchReport) -> String {
    let b = &report.budget;
    let doc = ReportDoc {
        format: FORMAT.to_string(),
        version: VERSION,
        budget: BudgetDoc {
            max_events: b.max_events,
            max_width: b.max_width,
            max_crossings: b.max_crossings,
        },
        totals: TotalsDoc {
            enumerated: report.enumerated,
            skipped: report.skipped,
            buckets: report.buckets.len(),
        },
        bucket: report
            .buckets
            .iter()
            .map(|(class, rec)| BucketDoc {
                jones: class.to_string(),
                max_tb: rec.max_tb,
                witness: rec.witness.to_string(),
                population: rec.population,
                crossing_floor: rec.crossing_floor,
            })
            .collect(),
    };
    toml::to_string(&doc).expect("report document serializes")
}

/// Parses a report document. Witness words and polynomials are validated;
/// call [`SearchReport::verify_witnesses`] to recompute them as well.
pub fn from_toml(text: &str) -> Result<SearchReport> {
    let doc: ReportDoc = toml::from_str(text).map_err(|e| Error::Report(e.to_string()))?;
    if doc.format != FORMAT || doc.version != VERSION {
        return Err(Error::Report(format!(
            "unsupported document {} v{}",
            doc.format, doc.version
        )));
    }
    let budget = Budget::new(
        doc.budget.max_events,
        doc.budget.max_width,
        doc.budget.max_crossings,
    )?;
    let mut buckets = BTreeMap::new();
    for b in doc.bucket {
        let class: LaurentPoly = b.jones.parse()?;
        let rec = BucketRecord {
            max_tb: b.max_tb,
            witness: parse_word(&b.witness)?,
            population: b.population,
            crossing_floor: b.crossing_floor,
        };
        if buckets.insert(class, rec).is_some() {
            return Err(Error::Report(format!("duplicate bucket {}", b.jones)));
        }
    }
    if buckets.len() != doc.totals.buckets {
        return Err(Error::Report(format!(
            "totals list {} buckets, document has {}",
            doc.totals.buckets,
            buckets.len()
        )));
    }
    Ok(SearchReport {
        budget,
        buckets,
        enumerated: doc.totals.enumerated,
        skipped: doc.totals.skipped,
        elapsed: Duration::ZERO,
    })
}
