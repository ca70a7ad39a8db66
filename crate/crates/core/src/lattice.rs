//! Root and weight lattice of the unified rank-2 affine family.
//!
//! Element weights live in the span of the simple root `alpha` and the
//! minimal imaginary root `delta`; the scaling element `d` enters only
//! through the bilinear form.  The phase bit theta selects which of the two
//! algebras of the family is meant and drives every parity sign downstream.

use crate::error::{CoreError, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Weight `m*alpha + n*delta` (element weights carry no `d` component).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub alpha: i64,
    pub delta: i64,
}

impl Weight {
    pub const ZERO: Weight = Weight { alpha: 0, delta: 0 };

    pub fn new(alpha: i64, delta: i64) -> Self {
        Weight { alpha, delta }
    }

    pub fn is_zero(&self) -> bool {
        self.alpha == 0 && self.delta == 0
    }

    pub fn add(&self, o: &Weight) -> Weight {
        Weight::new(self.alpha + o.alpha, self.delta + o.delta)
    }

    pub fn sub(&self, o: &Weight) -> Weight {
        Weight::new(self.alpha - o.alpha, self.delta - o.delta)
    }

    pub fn neg(&self) -> Weight {
        Weight::new(-self.alpha, -self.delta)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        if self.delta != 0 {
            match self.delta {
                1 => write!(f, "d")?,
                -1 => write!(f, "-d")?,
                n => write!(f, "{n}d")?,
            }
            first = false;
        }
        if self.alpha != 0 {
            if !first {
                write!(f, "{}", if self.alpha > 0 { "+" } else { "-" })?;
                let a = self.alpha.abs();
                if a == 1 {
                    write!(f, "a")?;
                } else {
                    write!(f, "{a}a")?;
                }
            } else {
                match self.alpha {
                    1 => write!(f, "a")?,
                    -1 => write!(f, "-a")?,
                    n => write!(f, "{n}a")?,
                }
            }
        }
        Ok(())
    }
}

/// A lattice direction the bilinear form understands: a weight, possibly with
/// a `d` component (stored in doubled units so `c/2`-type exponents stay
/// integral elsewhere; here `d` is plain).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormVector {
    pub alpha: i64,
    pub delta: i64,
    pub d: i64,
}

impl FormVector {
    pub fn weight(w: Weight) -> Self {
        FormVector {
            alpha: w.alpha,
            delta: w.delta,
            d: 0,
        }
    }

    pub fn d_direction() -> Self {
        FormVector {
            alpha: 0,
            delta: 0,
            d: 1,
        }
    }
}

/// Symmetric bilinear form: `(alpha,alpha)=2`, `(alpha,delta)=0`,
/// `(delta,delta)=0`, `(d,alpha)=0`, `(d,delta)=1`, `(d,d)=0`.
pub fn form(a: &FormVector, b: &FormVector) -> i64 {
    2 * a.alpha * b.alpha + a.delta * b.d + a.d * b.delta
}

/// Form restricted to element weights.
pub fn form_weights(a: &Weight, b: &Weight) -> i64 {
    2 * a.alpha * b.alpha
}

/// Phase selector: `theta = 0` is the untwisted affine algebra of the
/// family, `theta = 1` its twisted super partner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AlgebraKind {
    /// `theta = 0`.
    A1Affine,
    /// `theta = 1`.
    C2Twisted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraConfig {
    pub kind: AlgebraKind,
}

impl AlgebraConfig {
    pub fn new(kind: AlgebraKind) -> Self {
        AlgebraConfig { kind }
    }

    pub fn a1() -> Self {
        Self::new(AlgebraKind::A1Affine)
    }

    pub fn c2() -> Self {
        Self::new(AlgebraKind::C2Twisted)
    }

    /// The phase bit.
    pub fn theta(&self) -> u8 {
        match self.kind {
            AlgebraKind::A1Affine => 0,
            AlgebraKind::C2Twisted => 1,
        }
    }

    /// `(-1)^{k * theta}` as an integer sign.
    pub fn phase_pow(&self, k: i64) -> i64 {
        if self.theta() == 1 && k.rem_euclid(2) == 1 {
            -1
        } else {
            1
        }
    }

    pub fn label(&self) -> &'static str {
        match self.kind {
            AlgebraKind::A1Affine => "a1",
            AlgebraKind::C2Twisted => "c2",
        }
    }
}

/// Root class in the reduced positive system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Root {
    /// `n*delta + alpha` for `n >= 0`.
    RealPlus(i64),
    /// `n*delta - alpha` for `n >= 1`.
    RealMinus(i64),
    /// `n*delta` for `n >= 1`.
    Imaginary(i64),
}

/// Node colour of a root in the given algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RootColor {
    White,
    Grey,
    Dark,
}

impl Root {
    pub fn weight(&self) -> Weight {
        match *self {
            Root::RealPlus(n) => Weight::new(1, n),
            Root::RealMinus(n) => Weight::new(-1, n),
            Root::Imaginary(n) => Weight::new(0, n),
        }
    }

    /// The `delta` coefficient.
    pub fn height(&self) -> i64 {
        match *self {
            Root::RealPlus(n) | Root::RealMinus(n) | Root::Imaginary(n) => n,
        }
    }

    pub fn is_real(&self) -> bool {
        !matches!(self, Root::Imaginary(_))
    }

    /// Parity of the root vector: real roots carry the phase bit, imaginary
    /// roots are always even.
    pub fn parity(&self, cfg: &AlgebraConfig) -> u8 {
        if self.is_real() {
            cfg.theta()
        } else {
            0
        }
    }

    pub fn color(&self, cfg: &AlgebraConfig) -> RootColor {
        match cfg.kind {
            AlgebraKind::A1Affine => RootColor::White,
            AlgebraKind::C2Twisted => {
                if self.is_real() {
                    RootColor::Dark
                } else {
                    RootColor::White
                }
            }
        }
    }

    /// Classify a positive weight as a reduced positive root.
    pub fn from_weight(w: &Weight) -> Result<Root> {
        match (w.alpha, w.delta) {
            (1, n) if n >= 0 => Ok(Root::RealPlus(n)),
            (-1, n) if n >= 1 => Ok(Root::RealMinus(n)),
            (0, n) if n >= 1 => Ok(Root::Imaginary(n)),
            _ => Err(CoreError::NotARoot(w.to_string())),
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.weight())
    }
}

/// All reduced positive roots of height at most `cap`, in a fixed order:
/// within a height class real(+) before imaginary before real(-).
pub fn enumerate_reduced_positive(cap: i64) -> Vec<Root> {
    let mut out = vec![Root::RealPlus(0)];
    for n in 1..=cap {
        out.push(Root::RealPlus(n));
        out.push(Root::Imaginary(n));
        out.push(Root::RealMinus(n));
    }
    out
}

/// Doubled dark roots present in the total (unreduced) system at `theta = 1`:
/// `2*alpha + 2n*delta` for even pairings with the dark real roots.
pub fn doubled_dark_positive(cfg: &AlgebraConfig, cap: i64) -> Vec<Weight> {
    if cfg.theta() == 0 {
        return vec![];
    }
    let mut out = vec![Weight::new(2, 0)];
    for n in 1..=cap {
        if 2 * n <= cap {
            out.push(Weight::new(2, 2 * n));
            out.push(Weight::new(-2, 2 * n));
        }
    }
    out.sort();
    out
}

/// Total positive system up to height `cap` (reduced roots plus doubled dark
/// roots when the phase is odd).
pub fn enumerate_total_positive(cfg: &AlgebraConfig, cap: i64) -> Vec<Weight> {
    let mut out: Vec<Weight> = enumerate_reduced_positive(cap)
        .iter()
        .map(|r| r.weight())
        .collect();
    out.extend(doubled_dark_positive(cfg, cap));
    out.sort();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderingDirection {
    Direct,
    Inverse,
}

/// The two normal orderings of the reduced positive system, truncated at
/// height `cap`.  The direct one runs `alpha, delta+alpha, 2delta+alpha, ...`
/// then the imaginary roots ascending, then `..., 2delta-alpha, delta-alpha`;
/// the inverse one is its reverse.
pub fn normal_ordering(direction: OrderingDirection, cap: i64) -> Vec<Root> {
    let mut seq = Vec::new();
    for n in 0..=cap {
        seq.push(Root::RealPlus(n));
    }
    for n in 1..=cap {
        seq.push(Root::Imaginary(n));
    }
    for n in (1..=cap).rev() {
        seq.push(Root::RealMinus(n));
    }
    if direction == OrderingDirection::Inverse {
        seq.reverse();
    }
    seq
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn form_matrix_entries() {
        let al = FormVector::weight(Weight::new(1, 0));
        let dma = FormVector {
            alpha: -1,
            delta: 1,
            d: 0,
        };
        let d = FormVector::d_direction();
        // entries of the extended symmetric matrix in the (d, delta-alpha, alpha) order
        assert_eq!(form(&d, &d), 0);
        assert_eq!(form(&d, &dma), 1);
        assert_eq!(form(&d, &al), 0);
        assert_eq!(form(&dma, &d), 1);
        assert_eq!(form(&dma, &dma), 2);
        assert_eq!(form(&dma, &al), -2);
        assert_eq!(form(&al, &d), 0);
        assert_eq!(form(&al, &dma), -2);
        assert_eq!(form(&al, &al), 2);
    }

    #[test]
    fn form_delta_isotropic() {
        let delta = FormVector::weight(Weight::new(0, 1));
        assert_eq!(form(&delta, &delta), 0);
        assert_eq!(form(&FormVector::d_direction(), &delta), 1);
    }

    #[test]
    fn parity_table() {
        let a1 = AlgebraConfig::a1();
        let c2 = AlgebraConfig::c2();
        assert_eq!(Root::RealPlus(0).parity(&a1), 0);
        assert_eq!(Root::RealMinus(1).parity(&c2), 1);
        assert_eq!(Root::Imaginary(2).parity(&c2), 0);
    }

    #[test]
    fn reduced_roots_low_caps() {
        assert_eq!(enumerate_reduced_positive(0), vec![Root::RealPlus(0)]);
        let cap1 = enumerate_reduced_positive(1);
        assert_eq!(
            cap1,
            vec![
                Root::RealPlus(0),
                Root::RealPlus(1),
                Root::Imaginary(1),
                Root::RealMinus(1)
            ]
        );
    }

    #[test]
    fn orderings_are_reverses() {
        for cap in 0..5 {
            let mut direct = normal_ordering(OrderingDirection::Direct, cap);
            let inverse = normal_ordering(OrderingDirection::Inverse, cap);
            direct.reverse();
            assert_eq!(direct, inverse);
        }
    }

    #[test]
    fn direct_ordering_cap1() {
        let seq = normal_ordering(OrderingDirection::Direct, 1);
        assert_eq!(
            seq,
            vec![
                Root::RealPlus(0),
                Root::RealPlus(1),
                Root::Imaginary(1),
                Root::RealMinus(1)
            ]
        );
    }

    #[test]
    fn total_system_adds_doubled_dark() {
        let c2 = AlgebraConfig::c2();
        let total = enumerate_total_positive(&c2, 2);
        let reduced: Vec<Weight> = enumerate_reduced_positive(2)
            .iter()
            .map(|r| r.weight())
            .collect();
        let extra: Vec<Weight> = total
            .iter()
            .filter(|w| !reduced.contains(w))
            .cloned()
            .collect();
        assert_eq!(
            extra,
            vec![Weight::new(-2, 2), Weight::new(2, 0), Weight::new(2, 2)]
        );
        // the untwisted algebra has no doubled roots at all
        assert!(doubled_dark_positive(&AlgebraConfig::a1(), 4).is_empty());
    }
}
