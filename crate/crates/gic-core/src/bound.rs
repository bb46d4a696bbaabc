//! Scalar bound values with validity certificates.

/// A scalar bound in bits per channel use, together with a validity
/// certificate and an optional tag naming the term that produced it.
///
/// A bound with `valid = false` is reported for diagnostics only and must
/// not be used as a guarantee.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundValue {
    pub value: f64,
    pub valid: bool,
    /// Which minimand/maximand is binding, when the bound is a min or max
    /// of several terms.
    pub active_term: Option<&'static str>,
    /// Short provenance note ("exact", "condition unverified", ...).
    pub note: &'static str,
}

impl BoundValue {
    pub fn valid(value: f64) -> Self {
        Self {
            value,
            valid: true,
            active_term: None,
            note: "",
        }
    }

    pub fn with_term(mut self, term: &'static str) -> Self {
        self.active_term = Some(term);
        self
    }

    pub fn with_note(mut self, note: &'static str) -> Self {
        self.note = note;
        self
    }

    pub fn invalidate(mut self, note: &'static str) -> Self {
        self.valid = false;
        self.note = note;
        self
    }
}

/// Clamps tiny negative roundoff to zero; larger negatives pass through.
#[inline]
pub(crate) fn clamp_roundoff(x: f64) -> f64 {
    if x < 0.0 && x > -1e-12 {
        0.0
    } else {
        x
    }
}
