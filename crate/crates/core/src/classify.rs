//! Jones-class fingerprints used to bucket fronts by topological type.
//!
//! Distinct knot types with equal Jones polynomials share a bucket.

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use crate::diagram::{bracket, to_diagram};
use crate::error::Result;
use crate::front::FrontWord;
use crate::poly::LaurentPoly;

/// `(-A)^(-3w) <D>`, in the bracket variable.
pub fn normalized_jones(f: &FrontWord, limit: usize) -> Result<LaurentPoly> {
    let d = to_diagram(f)?;
    let b = bracket(&d, limit)?;
    let shift = -3 * d.writhe as i32;
    let sign = if shift % 2 == 0 { 1 } else { -1 };
    Ok(b.shift(shift).scale(sign))
}

/// Bucket key for a front. Equality, ordering and hashing look only at the
/// Jones class; `crossing_floor` is bookkeeping.
#[derive(Debug, Clone)]
pub struct Fingerprint {
    pub jones_class: LaurentPoly,
    pub crossing_floor: usize,
}

impl Fingerprint {
    pub fn unknot() -> Self {
        Fingerprint {
            jones_class: LaurentPoly::one(),
            crossing_floor: 0,
        }
    }

    pub fn is_unknot_class(&self) -> bool {
        self.jones_class == LaurentPoly::one()
    }

    /// Fingerprint of the connected sum of representatives.
    pub fn product(&self, other: &Fingerprint) -> Fingerprint {
        Fingerprint {
            jones_class: &self.jones_class * &other.jones_class,
            crossing_floor: self.crossing_floor + other.crossing_floor,
        }
    }

    pub fn mirror(&self) -> Fingerprint {
        Fingerprint {
            jones_class: self.jones_class.mirror(),
            crossing_floor: self.crossing_floor,
        }
    }
}

impl PartialEq for Fingerprint {
    fn eq(&self, other: &Self) -> bool {
        self.jones_class == other.jones_class
    }
}

impl Eq for Fingerprint {}

impl Hash for Fingerprint {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.jones_class.hash(state);
    }
}

impl PartialOrd for Fingerprint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fingerprint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.jones_class.cmp(&other.jones_class)
    }
}

pub fn fingerprint(f: &FrontWord, limit: usize) -> Result<Fingerprint> {
    Ok(Fingerprint {
        jones_class: normalized_jones(f, limit)?,
        crossing_floor: f.crossing_count(),
    })
}
