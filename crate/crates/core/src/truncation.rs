//! Truncation caps and the trusted windows derived from them.
//!
//! Every series object (projector, R-matrix, currents) is cut off by a
//! [`Truncation`]; identity checks assert vanishing only on the derived
//! [`Window`] of normal-form components that the caps compute exactly.

use crate::algebra::Word;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Caps for all truncated constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Truncation {
    /// Maximum delta-height of any root or monomial.
    pub delta_height_cap: i64,
    /// Maximum series order in projector / R-matrix factors.
    pub series_order_cap: i64,
    /// Maximum absolute mode index in current-realization checks.
    pub mode_cap: i64,
}

impl Truncation {
    pub fn new(delta_height_cap: i64, series_order_cap: i64, mode_cap: i64) -> Self {
        Truncation {
            delta_height_cap,
            series_order_cap,
            mode_cap,
        }
    }

    /// Effectively unbounded caps: used when checking exact (finite)
    /// identities, where nothing may be dropped.
    pub fn exact() -> Self {
        Truncation::new(i64::MAX / 4, i64::MAX / 4, i64::MAX / 4)
    }

    /// Window for identities obtained by multiplying the truncated object by
    /// generators of height at most `h`.
    pub fn window(&self, h: i64) -> Window {
        let height = (self.delta_height_cap - h).max(0) as usize;
        let len = self.series_order_cap.max(0) as usize;
        Window {
            max_delta_letters: height,
            max_side_len: len,
        }
    }
}

impl Default for Truncation {
    fn default() -> Self {
        Truncation::new(3, 2, 2)
    }
}

impl fmt::Display for Truncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "height<={} series<={} modes<={}",
            self.delta_height_cap, self.series_order_cap, self.mode_cap
        )
    }
}

/// The trusted region of normal-form components: a bound on the number of
/// `delta-alpha` letters and on the letter count of each of the lowering
/// and raising sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub max_delta_letters: usize,
    pub max_side_len: usize,
}

impl Window {
    /// Window accepting everything (used for exact identities).
    pub fn unbounded() -> Self {
        Window {
            max_delta_letters: usize::MAX,
            max_side_len: usize::MAX,
        }
    }

    pub fn contains(&self, w: &Word) -> bool {
        if w.delta_letters() > self.max_delta_letters {
            return false;
        }
        let (f, e) = w.bidegree();
        f <= self.max_side_len && e <= self.max_side_len
    }

    pub fn describe(&self) -> String {
        if self.max_delta_letters == usize::MAX {
            "exact".to_string()
        } else {
            format!(
                "delta-letters<={} side-len<={}",
                self.max_delta_letters, self.max_side_len
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Letter;

    #[test]
    fn window_membership() {
        let w = Window {
            max_delta_letters: 1,
            max_side_len: 2,
        };
        let ok = Word(vec![Letter::FAlpha, Letter::EDeltaAlpha]);
        assert!(w.contains(&ok));
        let too_high = Word(vec![Letter::FDeltaAlpha, Letter::EDeltaAlpha]);
        assert!(!w.contains(&too_high));
        let too_long = Word(vec![Letter::EAlpha, Letter::EAlpha, Letter::EAlpha]);
        assert!(!w.contains(&too_long));
    }

    #[test]
    fn derived_window_shrinks_with_height() {
        let t = Truncation::new(2, 2, 2);
        assert_eq!(t.window(1).max_delta_letters, 1);
        assert_eq!(t.window(0).max_delta_letters, 2);
    }
}
