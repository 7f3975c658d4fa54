use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A membership grade in the closed unit interval.
///
/// The only operations defined on grades are comparison, `min` and `max`, so
/// every grade produced by this crate is bit-identical to an input grade, to
/// `0` or to `1`. Equality is therefore exact and no tolerances are used.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Membership(f64);

impl Membership {
    pub const ZERO: Membership = Membership(0.0);
    pub const ONE: Membership = Membership(1.0);

    /// Rejects NaN, infinities and anything outside `[0, 1]`. Negative zero
    /// is normalized to `0`.
    pub fn new(value: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&value) {
            return Err(Error::InvalidMembership(value));
        }
        // -0.0 passes the range check; store +0.0 so bit patterns stay canonical.
        Ok(Membership(if value == 0.0 { 0.0 } else { value }))
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0.0
    }

    #[inline]
    pub fn is_positive(self) -> bool {
        self.0 > 0.0
    }

    #[inline]
    pub fn is_one(self) -> bool {
        self.0 == 1.0
    }

    #[inline]
    pub fn min(self, other: Membership) -> Membership {
        if other.0 < self.0 {
            other
        } else {
            self
        }
    }

    #[inline]
    pub fn max(self, other: Membership) -> Membership {
        if other.0 > self.0 {
            other
        } else {
            self
        }
    }
}

// Construction excludes NaN, so the partial order is total.
impl Eq for Membership {}

impl PartialOrd for Membership {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Membership {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl TryFrom<f64> for Membership {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Membership::new(value)
    }
}

impl From<Membership> for f64 {
    fn from(m: Membership) -> f64 {
        m.0
    }
}

/// Shortest decimal form that parses back to the same `f64`.
impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Membership {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_f64(self.0)
    }
}

impl<'de> Deserialize<'de> for Membership {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = f64::deserialize(deserializer)?;
        Membership::new(v).map_err(serde::de::Error::custom)
    }
}
