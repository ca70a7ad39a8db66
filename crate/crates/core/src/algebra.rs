//! Free superalgebra elements over the four Chevalley letters, with the
//! Cartan part of every term stored to the left as a [`Coefficient`].
//!
//! Multiplication concatenates words; only Cartan scalars are commuted
//! (through [`Coefficient::shift_by_weight`]); no letter reordering happens
//! here.  Normal ordering is the oracle's job.

use crate::coeffs::{CartanMono, Coefficient};
use crate::error::Result;
use crate::lattice::{form_weights, AlgebraConfig, Weight};
use crate::qrat::QRat;
use std::collections::BTreeMap;
use std::fmt;

/// One Chevalley generator letter.  `EAlpha`/`FAlpha` raise and lower by
/// `alpha`; `EDeltaAlpha`/`FDeltaAlpha` by `delta - alpha`.  The enum order
/// realises the word order used by the oracle (lowering letters first).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    FDeltaAlpha,
    FAlpha,
    EAlpha,
    EDeltaAlpha,
}

impl Letter {
    pub fn weight(&self) -> Weight {
        match self {
            Letter::EAlpha => Weight::new(1, 0),
            Letter::EDeltaAlpha => Weight::new(-1, 1),
            Letter::FAlpha => Weight::new(-1, 0),
            Letter::FDeltaAlpha => Weight::new(1, -1),
        }
    }

    pub fn is_raising(&self) -> bool {
        matches!(self, Letter::EAlpha | Letter::EDeltaAlpha)
    }

    /// The partner letter of opposite sign at the same simple root.
    pub fn opposite(&self) -> Letter {
        match self {
            Letter::EAlpha => Letter::FAlpha,
            Letter::FAlpha => Letter::EAlpha,
            Letter::EDeltaAlpha => Letter::FDeltaAlpha,
            Letter::FDeltaAlpha => Letter::EDeltaAlpha,
        }
    }

    /// The letter at the other simple root with the same sign.
    pub fn diagram_swap(&self) -> Letter {
        match self {
            Letter::EAlpha => Letter::EDeltaAlpha,
            Letter::EDeltaAlpha => Letter::EAlpha,
            Letter::FAlpha => Letter::FDeltaAlpha,
            Letter::FDeltaAlpha => Letter::FAlpha,
        }
    }

    /// Cartan variable `k` attached to the letter's simple root.
    pub fn simple_k(&self, pow: i32) -> CartanMono {
        match self {
            Letter::EAlpha | Letter::FAlpha => CartanMono::k_alpha(pow),
            Letter::EDeltaAlpha | Letter::FDeltaAlpha => CartanMono::k_delta_alpha(pow),
        }
    }

    pub fn token(&self) -> &'static str {
        match self {
            Letter::EAlpha => "e[a]",
            Letter::EDeltaAlpha => "e[d-a]",
            Letter::FAlpha => "e[-a]",
            Letter::FDeltaAlpha => "e[-d+a]",
        }
    }
}

/// A word in the Chevalley letters, ordered degree-first then
/// lexicographically (the oracle relies on this order for pivots and
/// witnesses).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(vec![])
    }

    pub fn single(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> Weight {
        let mut w = Weight::ZERO;
        for l in &self.0 {
            w = w.add(&l.weight());
        }
        w
    }

    /// Word parity: each letter carries the phase bit.
    pub fn parity(&self, cfg: &AlgebraConfig) -> u8 {
        ((self.0.len() as u8) * cfg.theta()) % 2
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word(v)
    }

    /// Counts of (lowering letters, raising letters).
    pub fn bidegree(&self) -> (usize, usize) {
        let e = self.0.iter().filter(|l| l.is_raising()).count();
        (self.0.len() - e, e)
    }

    /// Number of `delta - alpha` letters of either sign; the word-level
    /// delta height used by truncation windows.
    pub fn delta_letters(&self) -> usize {
        self.0
            .iter()
            .filter(|l| matches!(l, Letter::EDeltaAlpha | Letter::FDeltaAlpha))
            .count()
    }

    /// Delta letters in the lowering prefix / raising part separately.
    pub fn delta_letters_split(&self) -> (usize, usize) {
        let mut f = 0;
        let mut e = 0;
        for l in &self.0 {
            match l {
                Letter::FDeltaAlpha => f += 1,
                Letter::EDeltaAlpha => e += 1,
                _ => {}
            }
        }
        (f, e)
    }

    /// True when every lowering letter precedes every raising letter.
    pub fn is_normal(&self) -> bool {
        let mut seen_e = false;
        for l in &self.0 {
            if l.is_raising() {
                seen_e = true;
            } else if seen_e {
                return false;
            }
        }
        true
    }

    /// Index of the first raising-then-lowering adjacency, if any.
    pub fn first_inversion(&self) -> Option<usize> {
        self.0
            .windows(2)
            .position(|w| w[0].is_raising() && !w[1].is_raising())
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{}", l.token())?;
        }
        Ok(())
    }
}

/// Finite linear combination of words with Cartan-left coefficients.
#[derive(Debug, Clone, Default)]
pub struct Element {
    pub terms: BTreeMap<Word, Coefficient>,
}

impl Element {
    pub fn zero() -> Self {
        Element {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::term(Word::empty(), Coefficient::one())
    }

    pub fn term(w: Word, c: Coefficient) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        Element { terms }
    }

    pub fn letter(l: Letter) -> Self {
        Self::term(Word::single(l), Coefficient::one())
    }

    pub fn scalar(c: Coefficient) -> Self {
        Self::term(Word::empty(), c)
    }

    pub fn cartan(m: CartanMono) -> Self {
        Self::scalar(Coefficient::monomial(m, QRat::one()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: &Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, o: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn add_assign(&mut self, o: &Element) {
        for (w, c) in &o.terms {
            self.add_term(w.clone(), c);
        }
    }

    pub fn neg(&self) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, o: &Element) -> Element {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Coefficient) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        let mut out = Element::zero();
        for (w, v) in &self.terms {
            out.add_term(w.clone(), &v.mul(c));
        }
        out
    }

    pub fn scale_qrat(&self, c: &QRat) -> Element {
        self.scale(&Coefficient::from_qrat(c.clone()))
    }

    /// Free product; Cartan scalars of the right factor commute left.
    pub fn mul(&self, o: &Element) -> Element {
        let mut out = Element::zero();
        for (w1, c1) in &self.terms {
            let mu = w1.weight();
            for (w2, c2) in &o.terms {
                let moved = c2.shift_by_weight(&mu.neg());
                out.add_term(w1.concat(w2), &c1.mul(&moved));
            }
        }
        out
    }

    /// Product of a list of elements.
    pub fn product(factors: &[Element]) -> Element {
        let mut acc = Element::one();
        for f in factors {
            acc = acc.mul(f);
        }
        acc
    }

    /// Integer power (nonnegative).
    pub fn pow(&self, k: usize) -> Element {
        let mut acc = Element::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Weight when all terms agree; `None` on mixed or zero elements.
    pub fn weight(&self) -> Option<Weight> {
        let mut it = self.terms.keys();
        let first = it.next()?.weight();
        for w in it {
            if w.weight() != first {
                return None;
            }
        }
        Some(first)
    }

    /// Parity when homogeneous.
    pub fn parity(&self, cfg: &AlgebraConfig) -> Option<u8> {
        let mut it = self.terms.keys();
        let first = it.next()?.parity(cfg);
        for w in it {
            if w.parity(cfg) != first {
                return None;
            }
        }
        Some(first)
    }

    /// Supercommutator `xy - (-1)^{p(x)p(y)} yx`.
    pub fn supercommutator(&self, o: &Element, cfg: &AlgebraConfig) -> Element {
        let px = self.parity(cfg).expect("homogeneous left argument");
        let py = o.parity(cfg).expect("homogeneous right argument");
        let sign = if px * py == 1 { -1 } else { 1 };
        self.mul(o)
            .sub(&o.mul(self).scale_qrat(&QRat::from_int(sign)))
    }

    /// q-supercommutator `xy - (-1)^{p(x)p(y)} q^{±(wt x, wt y)} yx`; the
    /// `inverse` flag flips the sign of the pairing exponent.
    pub fn qcommutator(&self, o: &Element, cfg: &AlgebraConfig, inverse: bool) -> Element {
        let px = self.parity(cfg).expect("homogeneous left argument");
        let py = o.parity(cfg).expect("homogeneous right argument");
        let wx = self.weight().expect("weight-homogeneous left argument");
        let wy = o.weight().expect("weight-homogeneous right argument");
        let mut e = form_weights(&wx, &wy);
        if inverse {
            e = -e;
        }
        let mut factor = QRat::q_pow(e);
        if px * py == 1 {
            factor = -factor;
        }
        self.mul(o).sub(&o.mul(self).scale_qrat(&factor))
    }

    /// The scalar part attached to the empty word, if any.
    pub fn constant_term(&self) -> Coefficient {
        self.terms
            .get(&Word::empty())
            .cloned()
            .unwrap_or_else(Coefficient::zero)
    }

    /// Map coefficients, dropping terms that become zero.
    pub fn map_coeffs(&self, f: impl Fn(&Coefficient) -> Coefficient) -> Element {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &f(c));
        }
        out
    }

    /// Retain only terms whose word satisfies the predicate.
    pub fn filter_words(&self, keep: impl Fn(&Word) -> bool) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if w.is_empty() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{w}")?;
            }
        }
        Ok(())
    }
}

/// Chevalley generators as elements.
pub fn gen_e_alpha() -> Element {
    Element::letter(Letter::EAlpha)
}

pub fn gen_e_delta_alpha() -> Element {
    Element::letter(Letter::EDeltaAlpha)
}

pub fn gen_f_alpha() -> Element {
    Element::letter(Letter::FAlpha)
}

pub fn gen_f_delta_alpha() -> Element {
    Element::letter(Letter::FDeltaAlpha)
}

/// `[h]` bracket of a simple root: `(k - k^-1)/(q - q^-1)` as a scalar
/// element.
pub fn h_bracket(l: Letter) -> Element {
    let denom = &QRat::q() - &QRat::q_pow(-1);
    let num = Coefficient::monomial(l.simple_k(1), QRat::one())
        .sub(&Coefficient::monomial(l.simple_k(-1), QRat::one()));
    Element::scalar(num.mul(&Coefficient::from_qrat(denom.inv().unwrap())))
}

// ---------------------------------------------------------------------------
// Involutions
// ---------------------------------------------------------------------------

/// Which of the four (anti)involutions to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvolutionKind {
    /// Antilinear antiinvolution: `e_b <-> e_{-b}`, `q -> 1/q`, `k -> 1/k`.
    Star,
    /// Graded antilinear antiinvolution with the Koszul reversal sign.
    DDagger,
    /// Graded linear-in-words involution fixing `k`, `q -> 1/q`.
    Omega,
    /// Dynkin diagram involution, `q` fixed.
    Tau,
}

pub fn involution(kind: InvolutionKind, a: &Element, cfg: &AlgebraConfig) -> Element {
    match kind {
        InvolutionKind::Star => star(a),
        InvolutionKind::DDagger => ddagger(a, cfg),
        InvolutionKind::Omega => omega(a, cfg),
        InvolutionKind::Tau => tau(a),
    }
}

/// The conjugation `*`: word reversal, letters swapped across sign,
/// scalars through `bar_star`.
pub fn star(a: &Element) -> Element {
    let mut out = Element::zero();
    for (w, c) in &a.terms {
        let rev = Word(w.0.iter().rev().map(|l| l.opposite()).collect());
        let cc = c.bar_star().shift_by_weight(&w.weight());
        out.add_term(rev, &cc);
    }
    out
}

/// The graded conjugation: like `*` with image letters
/// `e_b -> (-1)^{theta} e_{-b}` and the Koszul sign of the reversal.
pub fn ddagger(a: &Element, cfg: &AlgebraConfig) -> Element {
    let mut out = Element::zero();
    for (w, c) in &a.terms {
        let n = w.len() as i64;
        // reversal sign (-1)^{theta * n(n-1)/2}, letter signs (-1)^{theta}
        // for each raising letter
        let raising = w.0.iter().filter(|l| l.is_raising()).count() as i64;
        let sign = cfg.phase_pow(n * (n - 1) / 2 + raising);
        let rev = Word(w.0.iter().rev().map(|l| l.opposite()).collect());
        let cc = c
            .bar_star()
            .shift_by_weight(&w.weight())
            .scale(&QRat::from_int(sign));
        out.add_term(rev, &cc);
    }
    out
}

/// The graded Chevalley involution: multiplicative on words, `q -> 1/q`,
/// `k` fixed, `e_b -> -e_{-b}`, `e_{-b} -> -(-1)^{theta} e_b`.
pub fn omega(a: &Element, cfg: &AlgebraConfig) -> Element {
    let mut out = Element::zero();
    for (w, c) in &a.terms {
        let mut sign = 1i64;
        let img = Word(
            w.0.iter()
                .map(|l| {
                    sign = -sign;
                    if !l.is_raising() {
                        sign *= cfg.phase_pow(1);
                    }
                    l.opposite()
                })
                .collect(),
        );
        out.add_term(img, &c.bar_omega().scale(&QRat::from_int(sign)));
    }
    out
}

/// The Dynkin involution: swap the two simple roots everywhere, `q` fixed.
pub fn tau(a: &Element) -> Element {
    let mut out = Element::zero();
    for (w, c) in &a.terms {
        let img = Word(w.0.iter().map(|l| l.diagram_swap()).collect());
        out.add_term(img, &c.tau_swap());
    }
    out
}

/// Counit: the scalar part with all `k` set to one.
pub fn counit(a: &Element) -> Result<QRat> {
    a.constant_term().eval_k_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::AlgebraConfig;

    fn both() -> [AlgebraConfig; 2] {
        [AlgebraConfig::a1(), AlgebraConfig::c2()]
    }

    #[test]
    fn free_concat() {
        let x = gen_e_alpha().mul(&gen_e_delta_alpha());
        assert_eq!(x.terms.len(), 1);
        let w = x.terms.keys().next().unwrap();
        assert_eq!(w.0, vec![Letter::EAlpha, Letter::EDeltaAlpha]);
    }

    #[test]
    fn unit_is_neutral() {
        let x = gen_e_alpha();
        assert_eq!(x.mul(&Element::one()).terms, x.terms);
        assert_eq!(Element::one().mul(&x).terms, x.terms);
    }

    #[test]
    fn cartan_commutes_left() {
        // e[a] * k[a] = q^{-2} k[a] e[a]
        let x = gen_e_alpha().mul(&Element::cartan(CartanMono::k_alpha(1)));
        let (w, c) = x.terms.iter().next().unwrap();
        assert_eq!(w.0, vec![Letter::EAlpha]);
        let expect = Coefficient::monomial(CartanMono::k_alpha(1), QRat::q_pow(-2));
        assert!(c.eq_value(&expect));
    }

    #[test]
    fn star_on_generators() {
        let s = star(&gen_e_alpha());
        assert_eq!(s.terms.keys().next().unwrap().0, vec![Letter::FAlpha]);
        // involutive
        for cfg in both() {
            let x = gen_e_alpha()
                .mul(&gen_e_delta_alpha())
                .mul(&gen_f_alpha());
            assert!(star(&star(&x)).sub(&x).is_zero(), "theta={}", cfg.theta());
        }
    }

    #[test]
    fn ddagger_signs() {
        // at theta=1 the raising generators pick up a minus sign
        let c2 = AlgebraConfig::c2();
        let d = ddagger(&gen_e_alpha(), &c2);
        let (w, c) = d.terms.iter().next().unwrap();
        assert_eq!(w.0, vec![Letter::FAlpha]);
        assert!(c.eq_value(&Coefficient::from_int(-1)));
        let d = ddagger(&gen_f_alpha(), &c2);
        let (_, c) = d.terms.iter().next().unwrap();
        assert!(c.eq_value(&Coefficient::from_int(1)));
    }

    #[test]
    fn involution_orders() {
        for cfg in both() {
            for g in [
                gen_e_alpha(),
                gen_e_delta_alpha(),
                gen_f_alpha(),
                gen_f_delta_alpha(),
            ] {
                // star^2 = id
                assert!(star(&star(&g)).sub(&g).is_zero());
                // ddagger^4 = id and omega^4 = id
                let mut x = g.clone();
                for _ in 0..4 {
                    x = ddagger(&x, &cfg);
                }
                assert!(x.sub(&g).is_zero());
                let mut x = g.clone();
                for _ in 0..4 {
                    x = omega(&x, &cfg);
                }
                assert!(x.sub(&g).is_zero());
                // tau^2 = id, and tau commutes with the other three
                assert!(tau(&tau(&g)).sub(&g).is_zero());
                assert!(tau(&star(&g)).sub(&star(&tau(&g))).is_zero());
                assert!(tau(&ddagger(&g, &cfg))
                    .sub(&ddagger(&tau(&g), &cfg))
                    .is_zero());
                assert!(tau(&omega(&g, &cfg)).sub(&omega(&tau(&g), &cfg)).is_zero());
            }
        }
    }

    #[test]
    fn tau_on_letters() {
        let t = tau(&gen_e_alpha());
        assert_eq!(
            t.terms.keys().next().unwrap().0,
            vec![Letter::EDeltaAlpha]
        );
    }

    #[test]
    fn parity_additive() {
        let c2 = AlgebraConfig::c2();
        let x = gen_e_alpha().mul(&gen_e_delta_alpha());
        assert_eq!(x.parity(&c2), Some(0));
        let y = x.mul(&gen_f_alpha());
        assert_eq!(y.parity(&c2), Some(1));
    }
}
