//! Tensor squares and cubes of the algebra with Koszul-sign multiplication.
//!
//! Each slot of a term is a Cartan monomial times a free word; scalars are
//! plain [`QRat`] values.  A two-slot term may carry one power of the formal
//! Cartan-exponential symbol `K` on the right, which is never expanded: only
//! its conjugation action `K (x (x) 1) = (x (x) k_wt(x)) K` and the mirror
//! rule are used.  Multiplying two `K`-bearing tensors is not a supported
//! operation.

use crate::algebra::{Element, Word};
use crate::coeffs::{CartanMono, Coefficient};
use crate::engine::Engine;
use crate::error::{CoreError, Result};
use crate::lattice::Weight;
use crate::qrat::QRat;
use crate::truncation::{Truncation, Window};
use std::collections::BTreeMap;
use std::sync::Arc;
use std::fmt;

/// One tensor slot: a Cartan monomial standing left of a free word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slot {
    pub mono: CartanMono,
    pub word: Word,
}

impl Slot {
    pub fn unit() -> Self {
        Slot {
            mono: CartanMono::ONE,
            word: Word::empty(),
        }
    }

    pub fn word(w: Word) -> Self {
        Slot {
            mono: CartanMono::ONE,
            word: w,
        }
    }

    pub fn weight(&self) -> Weight {
        self.word.weight()
    }

    fn parity(&self, theta: u8) -> u8 {
        ((self.word.len() as u8) * theta) % 2
    }

    /// `self * other` inside one slot; returns the q-power factor produced
    /// by commuting `other`'s Cartan monomial to the left.
    fn mul(&self, other: &Slot) -> (Slot, QRat) {
        let e = other.mono.shift_exponent(&self.word.weight());
        (
            Slot {
                mono: self.mono.mul(&other.mono),
                word: self.word.concat(&other.word),
            },
            QRat::q_pow(-e),
        )
    }

    /// Multiply by a Cartan monomial on the right: `self * m`.
    fn mul_mono_right(&self, m: &CartanMono) -> (Slot, QRat) {
        let e = m.shift_exponent(&self.word.weight());
        (
            Slot {
                mono: self.mono.mul(m),
                word: self.word.clone(),
            },
            QRat::q_pow(-e),
        )
    }

    fn mul_mono_left(&self, m: &CartanMono) -> Slot {
        Slot {
            mono: self.mono.mul(m),
            word: self.word.clone(),
        }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            write!(f, "{}", self.word)
        } else if self.word.is_empty() {
            write!(f, "{}", self.mono)
        } else {
            write!(f, "{}*{}", self.mono, self.word)
        }
    }
}

/// Linear combination of two-slot terms, optionally carrying the formal `K`.
#[derive(Debug, Clone, Default)]
pub struct TensorElement {
    pub terms: BTreeMap<(Slot, Slot, u8), QRat>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(Slot::unit(), Slot::unit(), 0, QRat::one())
    }

    /// The bare formal symbol `K`.
    pub fn cartan_symbol() -> Self {
        Self::term(Slot::unit(), Slot::unit(), 1, QRat::one())
    }

    pub fn term(a: Slot, b: Slot, kexp: u8, v: QRat) -> Self {
        let mut out = Self::zero();
        out.add_term(a, b, kexp, &v);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, a: Slot, b: Slot, kexp: u8, v: &QRat) {
        if v.is_zero() {
            return;
        }
        match self.terms.entry((a, b, kexp)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(v.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += v;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for ((a, b, k), v) in &o.terms {
            out.add_term(a.clone(), b.clone(), *k, v);
        }
        out
    }

    pub fn sub(&self, o: &TensorElement) -> TensorElement {
        self.add(&o.scale(&QRat::from_int(-1)))
    }

    pub fn scale(&self, c: &QRat) -> TensorElement {
        if c.is_zero() {
            return Self::zero();
        }
        TensorElement {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    /// Build from two elements with polynomial coefficients.
    pub fn from_elements(x: &Element, y: &Element) -> TensorElement {
        let mut out = Self::zero();
        for (wx, cx) in &x.terms {
            for (mx, vx) in coeff_monomials(cx) {
                for (wy, cy) in &y.terms {
                    for (my, vy) in coeff_monomials(cy) {
                        out.add_term(
                            Slot {
                                mono: mx,
                                word: wx.clone(),
                            },
                            Slot {
                                mono: my,
                                word: wy.clone(),
                            },
                            0,
                            &(&vx * &vy),
                        );
                    }
                }
            }
        }
        out
    }

    /// Koszul flip `a (x) b -> (-1)^{p(a)p(b)} b (x) a`; the formal symbol is
    /// symmetric and stays put.
    pub fn flip(&self, theta: u8) -> TensorElement {
        let mut out = Self::zero();
        for ((a, b, k), v) in &self.terms {
            let sign = if a.parity(theta) & b.parity(theta) == 1 {
                -v.clone()
            } else {
                v.clone()
            };
            out.add_term(b.clone(), a.clone(), *k, &sign);
        }
        out
    }

    /// Koszul-signed product.  At most one factor may carry `K`.
    pub fn mul(&self, o: &TensorElement, theta: u8) -> Result<TensorElement> {
        let mut out = Self::zero();
        for ((a1, b1, k1), v1) in &self.terms {
            for ((a2, b2, k2), v2) in &o.terms {
                if k1 + k2 > 1 {
                    return Err(CoreError::DoubleCartanSymbol);
                }
                // push K of the left factor past the right factor
                let (a2c, b2c, kfac) = if *k1 == 1 {
                    let mu = a2.weight();
                    let nu = b2.weight();
                    let (a2k, f1) = a2.mul_mono_right(&CartanMono::k_of_weight(&nu));
                    let b2k = b2.mul_mono_left(&CartanMono::k_of_weight(&mu));
                    (a2k, b2k, f1)
                } else {
                    (a2.clone(), b2.clone(), QRat::one())
                };
                let sign = if b1.parity(theta) & a2c.parity(theta) == 1 {
                    QRat::from_int(-1)
                } else {
                    QRat::one()
                };
                let (sa, fa) = a1.mul(&a2c);
                let (sb, fb) = b1.mul(&b2c);
                let v = &(&(&(v1 * v2) * &kfac) * &sign) * &(&fa * &fb);
                out.add_term(sa, sb, k1 + k2, &v);
            }
        }
        Ok(out)
    }

    /// Total weight per term: left-slot weight plus right-slot weight.
    pub fn total_weights(&self) -> Vec<Weight> {
        self.terms
            .keys()
            .map(|(a, b, _)| a.weight().add(&b.weight()))
            .collect()
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((a, b, k), v) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{v}*({a} (x) {b})")?;
            if *k == 1 {
                write!(f, "*K")?;
            }
        }
        Ok(())
    }
}

/// Expand a polynomial coefficient into (monomial, scalar) pairs.
pub fn coeff_monomials(c: &Coefficient) -> Vec<(CartanMono, QRat)> {
    assert!(
        c.is_polynomial(),
        "tensor slots require polynomial Cartan coefficients"
    );
    c.num()
        .terms
        .iter()
        .map(|(m, v)| (*m, v.clone()))
        .collect()
}

/// Three-slot tensors (no formal symbol; the Cartan exponential factors out
/// of every identity checked here).
#[derive(Debug, Clone, Default)]
pub struct Tensor3 {
    pub terms: BTreeMap<(Slot, Slot, Slot), QRat>,
}

impl Tensor3 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: Slot, b: Slot, c: Slot, v: &QRat) {
        if v.is_zero() {
            return;
        }
        match self.terms.entry((a, b, c)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(v.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += v;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &Tensor3) -> Tensor3 {
        let mut out = self.clone();
        for ((a, b, c), v) in &o.terms {
            out.add_term(a.clone(), b.clone(), c.clone(), v);
        }
        out
    }

    pub fn sub(&self, o: &Tensor3) -> Tensor3 {
        self.add(&o.scale(&QRat::from_int(-1)))
    }

    pub fn scale(&self, c: &QRat) -> Tensor3 {
        Tensor3 {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    pub fn mul(&self, o: &Tensor3, theta: u8) -> Tensor3 {
        let mut out = Self::zero();
        for ((a1, b1, c1), v1) in &self.terms {
            for ((a2, b2, c2), v2) in &o.terms {
                // Koszul crossings: a2 passes b1 and c1, b2 passes c1
                let crossings = (a2.parity(theta) * (b1.parity(theta) + c1.parity(theta))
                    + b2.parity(theta) * c1.parity(theta))
                    % 2;
                let sign = if crossings == 1 {
                    QRat::from_int(-1)
                } else {
                    QRat::one()
                };
                let (sa, fa) = a1.mul(a2);
                let (sb, fb) = b1.mul(b2);
                let (sc, fc) = c1.mul(c2);
                let v = &(&(&(v1 * v2) * &sign) * &(&fa * &fb)) * &fc;
                out.add_term(sa, sb, sc, &v);
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }
}

impl Engine {
    /// Slot-wise normal form plus ideal reduction: exact zero test of a
    /// two-slot tensor inside the per-slot window.
    pub fn tensor_is_zero_in_window(
        &self,
        x: &TensorElement,
        t: &Truncation,
        window: &Window,
    ) -> crate::oracle::ZeroCheck {
        let mut acc: BTreeMap<(Slot, Slot, u8), QRat> = BTreeMap::new();
        let mut overflow = false;
        for ((a, b, k), v) in &x.terms {
            let (ra, oa) = self.reduce_slot(a, t);
            let (rb, ob) = self.reduce_slot(b, t);
            overflow |= oa | ob;
            for (sa, ca) in &ra {
                if !window.contains(&sa.word) {
                    continue;
                }
                for (sb, cb) in &rb {
                    if !window.contains(&sb.word) {
                        continue;
                    }
                    let val = &(v * ca) * cb;
                    let e = acc
                        .entry((sa.clone(), sb.clone(), *k))
                        .or_insert_with(QRat::zero);
                    *e += &val;
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        let witness = acc
            .iter()
            .next()
            .map(|((a, b, k), v)| {
                let ktag = if *k == 1 { "*K" } else { "" };
                format!("{v}*({a} (x) {b}){ktag}")
            });
        crate::oracle::ZeroCheck {
            zero: acc.is_empty(),
            witness,
            overflow,
        }
    }

    pub fn tensor3_is_zero_in_window(
        &self,
        x: &Tensor3,
        t: &Truncation,
        window: &Window,
    ) -> crate::oracle::ZeroCheck {
        let mut acc: BTreeMap<(Slot, Slot, Slot), QRat> = BTreeMap::new();
        let mut overflow = false;
        for ((a, b, c), v) in &x.terms {
            let (ra, oa) = self.reduce_slot(a, t);
            let (rb, ob) = self.reduce_slot(b, t);
            let (rc, oc) = self.reduce_slot(c, t);
            overflow |= oa | ob | oc;
            for (sa, ca) in &ra {
                if !window.contains(&sa.word) {
                    continue;
                }
                for (sb, cb) in &rb {
                    if !window.contains(&sb.word) {
                        continue;
                    }
                    for (sc, cc) in &rc {
                        if !window.contains(&sc.word) {
                            continue;
                        }
                        let val = &(&(v * ca) * cb) * cc;
                        let e = acc
                            .entry((sa.clone(), sb.clone(), sc.clone()))
                            .or_insert_with(QRat::zero);
                        *e += &val;
                    }
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        let witness = acc.iter().next().map(|((a, b, c), v)| {
            format!("{v}*({a} (x) {b} (x) {c})")
        });
        crate::oracle::ZeroCheck {
            zero: acc.is_empty(),
            witness,
            overflow,
        }
    }

    /// Normal form of one slot followed by reduction to quotient-basis
    /// words; output is a list of (slot, scalar) with basis words only.
    /// Cached per slot: the same slots recur across tensor terms.
    fn reduce_slot(&self, s: &Slot, t: &Truncation) -> (Vec<(Slot, QRat)>, bool) {
        if s.word.delta_letters() > t.delta_height_cap.max(0) as usize {
            return (Vec::new(), true);
        }
        let key = (s.mono, s.word.clone());
        if let Some(hit) = self.slot_reductions.read().unwrap().get(&key) {
            return (hit.as_ref().clone(), false);
        }
        let as_element = Element::term(
            s.word.clone(),
            Coefficient::monomial(s.mono, QRat::one()),
        );
        let (nf, _) = self.straighten(&as_element, &Truncation::exact());
        let mut out: BTreeMap<Slot, QRat> = BTreeMap::new();
        for (w, c) in &nf.terms {
            let split = w.0.iter().position(|l| l.is_raising()).unwrap_or(w.len());
            let fw = Word(w.0[..split].to_vec());
            let ew = Word(w.0[split..].to_vec());
            let fred = self.reduce_side_public(&fw, false);
            let ered = self.reduce_side_public(&ew, true);
            for (m, scalar) in coeff_monomials(c) {
                for (fb, fc) in &fred {
                    for (eb, ec) in &ered {
                        let slot = Slot {
                            mono: m,
                            word: fb.concat(eb),
                        };
                        let v = &(&scalar * fc) * ec;
                        let e = out.entry(slot).or_insert_with(QRat::zero);
                        *e += &v;
                    }
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        let vec: Vec<(Slot, QRat)> = out.into_iter().collect();
        self.slot_reductions
            .write()
            .unwrap()
            .insert(key, Arc::new(vec.clone()));
        (vec, false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{gen_e_alpha, gen_e_delta_alpha, gen_f_alpha};
    use crate::lattice::AlgebraConfig;

    #[test]
    fn plain_product_no_sign() {
        let t = TensorElement::from_elements(&gen_e_alpha(), &Element::one());
        let u = TensorElement::from_elements(&Element::one(), &gen_f_alpha());
        let p = t.mul(&u, 0).unwrap();
        assert_eq!(p.len(), 1);
        let ((a, b, k), v) = p.terms.iter().next().unwrap();
        assert_eq!(a.word.0.len(), 1);
        assert_eq!(b.word.0.len(), 1);
        assert_eq!(*k, 0);
        assert!(v.is_one());
    }

    #[test]
    fn koszul_sign_for_odd_letters() {
        // (1 (x) e[a]) * (e[d-a] (x) 1) = (-1)^theta e[d-a] (x) e[a]
        for theta in [0u8, 1u8] {
            let t = TensorElement::from_elements(&Element::one(), &gen_e_alpha());
            let u = TensorElement::from_elements(&gen_e_delta_alpha(), &Element::one());
            let p = t.mul(&u, theta).unwrap();
            let ((_, _, _), v) = p.terms.iter().next().unwrap();
            let expect = QRat::from_int(if theta == 1 { -1 } else { 1 });
            assert_eq!(*v, expect);
        }
    }

    #[test]
    fn cartan_symbol_conjugation() {
        // K * (e[a] (x) 1) = (e[a] (x) k_alpha) * K
        let k = TensorElement::cartan_symbol();
        let x = TensorElement::from_elements(&gen_e_alpha(), &Element::one());
        let p = k.mul(&x, 0).unwrap();
        assert_eq!(p.len(), 1);
        let ((a, b, kk), v) = p.terms.iter().next().unwrap();
        assert_eq!(*kk, 1);
        assert_eq!(a.word.0.len(), 1);
        assert!(b.word.is_empty());
        assert_eq!(b.mono, CartanMono::k_of_weight(&Weight::new(1, 0)));
        assert!(v.is_one());
        // two symbols refuse to multiply
        assert!(k.mul(&k, 0).is_err());
    }

    #[test]
    fn tensor_zero_test_catches_slot_relations() {
        // (e[a]e[-a] - (-1)^theta e[-a]e[a] - [h]) (x) 1 reduces to zero
        for cfg in [AlgebraConfig::a1(), AlgebraConfig::c2()] {
            let eng = Engine::new(cfg);
            let lhs = gen_e_alpha().mul(&gen_f_alpha());
            let rhs = gen_f_alpha()
                .mul(&gen_e_alpha())
                .scale_qrat(&QRat::from_int(cfg.phase_pow(1)))
                .add(&crate::algebra::h_bracket(crate::algebra::Letter::EAlpha));
            let diff = TensorElement::from_elements(&lhs.sub(&rhs), &Element::one());
            let z = eng.tensor_is_zero_in_window(
                &diff,
                &Truncation::new(4, 3, 3),
                &Window::unbounded(),
            );
            assert!(z.zero);
        }
    }
}
