//! Window-exact products of long factor lists.
//!
//! Multiplying truncated series (projector factors, exponential factors)
//! naively explodes; but a normal-form component inside a target window can
//! only receive contributions from intermediate terms whose lowering side
//! already fits the window and whose raising side exceeds it by no more
//! than the lowering-letter supply of the factors still to come.  Pruning
//! by that rule is exact for every in-window component: the lowering part
//! of the left factor is never touched by later straightening, and each
//! contraction consumes one raising letter of the accumulator against one
//! lowering letter of the remaining supply.

use crate::algebra::{Element, Letter, Word};
use crate::engine::Engine;
use crate::truncation::Truncation;

/// Per-side caps on normal-form components of the final product.
#[derive(Debug, Clone, Copy)]
pub struct SideCaps {
    pub f_len: usize,
    pub f_delta: usize,
    pub e_len: usize,
    pub e_delta: usize,
}

impl SideCaps {
    pub fn uniform(len: usize, delta: usize) -> Self {
        SideCaps {
            f_len: len,
            f_delta: delta,
            e_len: len,
            e_delta: delta,
        }
    }
}

fn side_counts(w: &Word) -> (usize, usize, usize, usize) {
    let mut f_len = 0;
    let mut f_delta = 0;
    let mut e_len = 0;
    let mut e_delta = 0;
    for l in &w.0 {
        if l.is_raising() {
            e_len += 1;
            if *l == Letter::EDeltaAlpha {
                e_delta += 1;
            }
        } else {
            f_len += 1;
            if *l == Letter::FDeltaAlpha {
                f_delta += 1;
            }
        }
    }
    (f_len, f_delta, e_len, e_delta)
}

/// Lowering-letter supply of one factor: the worst case over its terms.
fn factor_supply(f: &Element) -> (usize, usize) {
    let mut len = 0;
    let mut delta = 0;
    for w in f.terms.keys() {
        let (fl, fd, _, _) = side_counts(w);
        len = len.max(fl);
        delta = delta.max(fd);
    }
    (len, delta)
}

impl Engine {
    /// Straightened product of the factors with exact in-window components.
    pub fn windowed_product(&self, factors: &[Element], caps: &SideCaps) -> Element {
        let texact = Truncation::exact();
        // suffix supplies of lowering letters
        let mut supplies = vec![(0usize, 0usize); factors.len() + 1];
        for i in (0..factors.len()).rev() {
            let (l, d) = factor_supply(&factors[i]);
            supplies[i] = (supplies[i + 1].0 + l, supplies[i + 1].1 + d);
        }
        let mut acc = Element::one();
        for (i, f) in factors.iter().enumerate() {
            let raw = acc.mul(f);
            let (nf, _) = self.straighten(&raw, &texact);
            let (supply_len, supply_delta) = supplies[i + 1];
            acc = nf.filter_words(|w| {
                let (fl, fd, el, ed) = side_counts(w);
                fl <= caps.f_len
                    && fd <= caps.f_delta
                    && el <= caps.e_len + supply_len
                    && ed <= caps.e_delta + supply_delta
            });
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{gen_e_alpha, gen_f_alpha};
    use crate::lattice::AlgebraConfig;

    #[test]
    fn windowed_product_matches_full_product_inside_window() {
        let eng = Engine::new(AlgebraConfig::c2());
        let caps = SideCaps::uniform(1, 1);
        // (1 + fe)(1 + fe)(f + e): compare against the unpruned product
        let fe = gen_f_alpha().mul(&gen_e_alpha());
        let a = Element::one().add(&fe);
        let b = gen_f_alpha().add(&gen_e_alpha());
        let factors = vec![a.clone(), a.clone(), b.clone()];
        let pruned = eng.windowed_product(&factors, &caps);
        let full = a.mul(&a).mul(&b);
        let (full_nf, _) = eng.straighten(&full, &Truncation::exact());
        let full_windowed = full_nf.filter_words(|w| {
            let (fl, fd, el, ed) = side_counts(w);
            fl <= 1 && fd <= 1 && el <= 1 && ed <= 1
        });
        let pruned_windowed = pruned.filter_words(|w| {
            let (fl, fd, el, ed) = side_counts(w);
            fl <= 1 && fd <= 1 && el <= 1 && ed <= 1
        });
        assert!(pruned_windowed.sub(&full_windowed).is_zero());
    }
}
