//! Scalars of the algebra: rational functions in the Cartan variables
//! `k[a]`, `k[d-a]`, `k[dd]` over the field of [`QRat`] values.
//!
//! Exponents are stored doubled so that the square roots `k[d]^(1/2)`
//! (needed for the central charge) stay integral.  A [`Coefficient`] is a
//! fraction of two [`CartanPoly`]s; zero testing reduces to emptiness of the
//! numerator, which is exact, so full multivariate gcd canonicalisation is
//! not required.  Normalisation extracts monomial and scalar content and
//! absorbs single-monomial denominators.

use crate::error::{CoreError, Result};
use crate::lattice::Weight;
use crate::qrat::QRat;
use std::collections::BTreeMap;
use std::fmt;

/// Monomial `k[a]^(e0/2) * k[d-a]^(e1/2) * k[dd]^(e2/2)` with doubled
/// exponents (`k[dd]` is the grading variable paired with `delta`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanMono {
    pub exps: [i32; 3],
}

impl CartanMono {
    pub const ONE: CartanMono = CartanMono { exps: [0, 0, 0] };

    pub fn k_alpha(pow: i32) -> Self {
        CartanMono {
            exps: [2 * pow, 0, 0],
        }
    }

    pub fn k_delta_alpha(pow: i32) -> Self {
        CartanMono {
            exps: [0, 2 * pow, 0],
        }
    }

    pub fn k_d(pow: i32) -> Self {
        CartanMono {
            exps: [0, 0, 2 * pow],
        }
    }

    /// `k[d]^pow = (k[a] k[d-a])^pow`.
    pub fn k_delta(pow: i32) -> Self {
        CartanMono {
            exps: [2 * pow, 2 * pow, 0],
        }
    }

    /// `q^(pow * c/2)`, i.e. `k[d]^(pow/2)` in doubled units.
    pub fn q_half_c(pow: i32) -> Self {
        CartanMono {
            exps: [pow, pow, 0],
        }
    }

    /// `k` attached to the weight `m*alpha + n*delta`.
    pub fn k_of_weight(w: &Weight) -> Self {
        CartanMono {
            exps: [2 * (w.alpha + w.delta) as i32, 2 * w.delta as i32, 0],
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps == [0, 0, 0]
    }

    pub fn mul(&self, o: &CartanMono) -> CartanMono {
        CartanMono {
            exps: [
                self.exps[0] + o.exps[0],
                self.exps[1] + o.exps[1],
                self.exps[2] + o.exps[2],
            ],
        }
    }

    pub fn inv(&self) -> CartanMono {
        CartanMono {
            exps: [-self.exps[0], -self.exps[1], -self.exps[2]],
        }
    }

    /// Power of `q` produced when this monomial commutes from the left of a
    /// weight-`w` word to its right.
    pub fn shift_exponent(&self, w: &Weight) -> i64 {
        let m = w.alpha;
        let n = w.delta;
        let half = (self.exps[0] as i64 - self.exps[1] as i64) * m * 2
            + self.exps[2] as i64 * n;
        assert!(half % 2 == 0, "irrational q power in Cartan commutation");
        half / 2
    }
}

impl fmt::Display for CartanMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let names = ["k[a]", "k[d-a]", "k[dd]"];
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 2 {
                write!(f, "{}", names[i])?;
            } else if e % 2 == 0 {
                write!(f, "{}^{}", names[i], e / 2)?;
            } else {
                write!(f, "{}^({}/2)", names[i], e)?;
            }
        }
        Ok(())
    }
}

/// Finite Laurent polynomial in the Cartan monomials over `QRat`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanPoly {
    pub terms: BTreeMap<CartanMono, QRat>,
}

impl CartanPoly {
    pub fn zero() -> Self {
        CartanPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(CartanMono::ONE, QRat::one())
    }

    pub fn monomial(m: CartanMono, c: QRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        CartanPoly { terms }
    }

    pub fn scalar(c: QRat) -> Self {
        Self::monomial(CartanMono::ONE, c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: CartanMono, c: &QRat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(QRat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, o: &CartanPoly) -> CartanPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn neg(&self) -> CartanPoly {
        CartanPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, o: &CartanPoly) -> CartanPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &CartanPoly) -> CartanPoly {
        let mut out = CartanPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &QRat) -> CartanPoly {
        if c.is_zero() {
            return CartanPoly::zero();
        }
        CartanPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul_mono(&self, m: &CartanMono) -> CartanPoly {
        CartanPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v.clone()))
                .collect(),
        }
    }

    /// Componentwise minimum of all exponents, used for content extraction.
    fn min_exponents(&self) -> [i32; 3] {
        let mut m = [i32::MAX; 3];
        for mono in self.terms.keys() {
            for i in 0..3 {
                m[i] = m[i].min(mono.exps[i]);
            }
        }
        m
    }

    /// Map every monomial through a linear transformation of the doubled
    /// exponent vector (used by braid morphisms and the Dynkin involution).
    pub fn map_exponents(&self, f: impl Fn(&[i32; 3]) -> [i32; 3]) -> CartanPoly {
        let mut out = CartanPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(CartanMono { exps: f(&m.exps) }, c);
        }
        out
    }

    /// Apply `q -> 1/q` to every scalar.
    pub fn bar_scalars(&self) -> CartanPoly {
        CartanPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c.bar())).collect(),
        }
    }

    /// Shift every monomial past a weight-`w` word (left to right).
    pub fn shifted(&self, w: &Weight) -> CartanPoly {
        let mut out = CartanPoly::zero();
        for (m, c) in &self.terms {
            let e = m.shift_exponent(w);
            out.add_term(*m, &(c * &QRat::q_pow(e)));
        }
        out
    }
}

impl fmt::Display for CartanPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Fraction of two Cartan polynomials; the working scalar of every element.
#[derive(Debug, Clone)]
pub struct Coefficient {
    num: CartanPoly,
    den: CartanPoly,
}

impl PartialEq for Coefficient {
    /// Value equality (cross multiplication), not representation equality.
    fn eq(&self, other: &Self) -> bool {
        self.eq_value(other)
    }
}

impl Eq for Coefficient {}

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient {
            num: CartanPoly::zero(),
            den: CartanPoly::one(),
        }
    }

    pub fn one() -> Self {
        Coefficient {
            num: CartanPoly::one(),
            den: CartanPoly::one(),
        }
    }

    pub fn from_qrat(c: QRat) -> Self {
        Coefficient {
            num: CartanPoly::scalar(c),
            den: CartanPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_qrat(QRat::from_int(n))
    }

    pub fn monomial(m: CartanMono, c: QRat) -> Self {
        Coefficient {
            num: CartanPoly::monomial(m, c),
            den: CartanPoly::one(),
        }
    }

    pub fn from_poly(p: CartanPoly) -> Self {
        Coefficient {
            num: p,
            den: CartanPoly::one(),
        }
    }

    pub fn fraction(num: CartanPoly, den: CartanPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        Ok(Coefficient { num, den }.normalize())
    }

    pub fn num(&self) -> &CartanPoly {
        &self.num
    }

    pub fn den(&self) -> &CartanPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.terms.len() == 1
            && self
                .den
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_one() && c.is_one())
                .unwrap_or(false)
    }

    fn normalize(mut self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        // Single-monomial denominators are absorbed into the numerator.
        if self.den.terms.len() == 1 {
            let (m, c) = self.den.terms.iter().next().unwrap();
            let m = *m;
            let cinv = c.inv().expect("nonzero denominator term");
            self.num = self.num.mul_mono(&m.inv()).scale(&cinv);
            self.den = CartanPoly::one();
            return self;
        }
        if self.num == self.den {
            return Self::one();
        }
        // Monomial content: shift both polynomials by the common minimum.
        let mn = self.num.min_exponents();
        let md = self.den.min_exponents();
        let common = CartanMono {
            exps: [mn[0].min(md[0]), mn[1].min(md[1]), mn[2].min(md[2])],
        };
        if !common.is_one() {
            let inv = common.inv();
            self.num = self.num.mul_mono(&inv);
            self.den = self.den.mul_mono(&inv);
        }
        // Scale so the denominator's leading coefficient is one.
        if let Some((_, c)) = self.den.terms.iter().next_back() {
            if !c.is_one() {
                let cinv = c.inv().unwrap();
                self.num = self.num.scale(&cinv);
                self.den = self.den.scale(&cinv);
            }
        }
        self
    }

    pub fn add(&self, o: &Coefficient) -> Coefficient {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return Coefficient {
                num: self.num.add(&o.num),
                den: self.den.clone(),
            }
            .normalize();
        }
        Coefficient {
            num: self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            den: self.den.mul(&o.den),
        }
        .normalize()
    }

    pub fn sub(&self, o: &Coefficient) -> Coefficient {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Coefficient {
        Coefficient {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &Coefficient) -> Coefficient {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        Coefficient {
            num: self.num.mul(&o.num),
            den: self.den.mul(&o.den),
        }
        .normalize()
    }

    pub fn scale(&self, c: &QRat) -> Coefficient {
        Coefficient {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
        .normalize()
    }

    pub fn inv(&self) -> Result<Coefficient> {
        if self.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        Ok(Coefficient {
            num: self.den.clone(),
            den: self.num.clone(),
        }
        .normalize())
    }

    pub fn div(&self, o: &Coefficient) -> Result<Coefficient> {
        Ok(self.mul(&o.inv()?))
    }

    /// Exact value equality by cross multiplication.
    pub fn eq_value(&self, o: &Coefficient) -> bool {
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }

    /// Commute this scalar from the left of a weight-`w` word to its right.
    pub fn shift_by_weight(&self, w: &Weight) -> Coefficient {
        Coefficient {
            num: self.num.shifted(w),
            den: self.den.shifted(w),
        }
        .normalize()
    }

    /// `q -> 1/q` and `k -> 1/k`: the scalar part of the two conjugations.
    pub fn bar_star(&self) -> Coefficient {
        Coefficient {
            num: self.num.bar_scalars().map_exponents(|e| [-e[0], -e[1], -e[2]]),
            den: self.den.bar_scalars().map_exponents(|e| [-e[0], -e[1], -e[2]]),
        }
        .normalize()
    }

    /// `q -> 1/q` with the Cartan variables fixed.
    pub fn bar_omega(&self) -> Coefficient {
        Coefficient {
            num: self.num.bar_scalars(),
            den: self.den.bar_scalars(),
        }
        .normalize()
    }

    /// Swap the two simple Cartan variables (the diagram involution).
    pub fn tau_swap(&self) -> Coefficient {
        let f = |e: &[i32; 3]| [e[1], e[0], e[2]];
        Coefficient {
            num: self.num.map_exponents(f),
            den: self.den.map_exponents(f),
        }
        .normalize()
    }

    /// Map monomial exponents through a linear map of the doubled lattice.
    pub fn map_exponents(&self, f: impl Fn(&[i32; 3]) -> [i32; 3] + Copy) -> Coefficient {
        Coefficient {
            num: self.num.map_exponents(f),
            den: self.den.map_exponents(f),
        }
        .normalize()
    }

    /// Substitute `k -> 1` leaving `q` alone (used by the counit); errors if
    /// the denominator collapses to zero.
    pub fn eval_k_one(&self) -> Result<QRat> {
        let fold = |p: &CartanPoly| {
            let mut acc = QRat::zero();
            for c in p.terms.values() {
                acc += c;
            }
            acc
        };
        let d = fold(&self.den);
        if d.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        Ok(&fold(&self.num) / &d)
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            if self.num.terms.len() > 1 {
                write!(f, "({})", self.num)
            } else {
                write!(f, "{}", self.num)
            }
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qrat::QRat;

    #[test]
    fn shift_k_alpha_past_alpha() {
        // k[a] commuted past a weight-alpha word picks up q^2
        let c = Coefficient::monomial(CartanMono::k_alpha(1), QRat::one());
        let shifted = c.shift_by_weight(&Weight::new(1, 0));
        let expect = Coefficient::monomial(CartanMono::k_alpha(1), QRat::q_pow(2));
        assert!(shifted.eq_value(&expect));
    }

    #[test]
    fn shift_composes_additively() {
        let c = Coefficient::monomial(CartanMono::k_delta_alpha(-2), QRat::from_int(3));
        let mu = Weight::new(1, 1);
        let nu = Weight::new(-2, 3);
        let both = c.shift_by_weight(&mu).shift_by_weight(&nu);
        let once = c.shift_by_weight(&mu.add(&nu));
        assert!(both.eq_value(&once));
    }

    #[test]
    fn k_delta_is_central_for_words() {
        let c = Coefficient::monomial(CartanMono::q_half_c(1), QRat::one());
        let shifted = c.shift_by_weight(&Weight::new(5, -3));
        assert!(shifted.eq_value(&c));
    }

    #[test]
    fn self_division() {
        let p = CartanPoly::monomial(CartanMono::k_alpha(1), QRat::one())
            .sub(&CartanPoly::monomial(CartanMono::k_alpha(-1), QRat::one()));
        let c = Coefficient::fraction(p.clone(), p).unwrap();
        assert!(c.eq_value(&Coefficient::one()));
    }

    #[test]
    fn field_axioms_spot() {
        let a = Coefficient::fraction(
            CartanPoly::monomial(CartanMono::k_alpha(1), QRat::q()),
            CartanPoly::one().add(&CartanPoly::monomial(CartanMono::k_delta(1), QRat::one())),
        )
        .unwrap();
        let b = Coefficient::monomial(CartanMono::k_d(1), QRat::from_frac_int(2, 3));
        let c = Coefficient::from_qrat(&QRat::q() - &QRat::q_pow(-1));
        // distributivity
        let lhs = a.mul(&b.add(&c));
        let rhs = a.mul(&b).add(&a.mul(&c));
        assert!(lhs.eq_value(&rhs));
        // inverse
        let ainv = a.inv().unwrap();
        assert!(a.mul(&ainv).eq_value(&Coefficient::one()));
    }

    #[test]
    fn bar_star_is_involution() {
        let a = Coefficient::fraction(
            CartanPoly::monomial(CartanMono::k_alpha(1), QRat::q()),
            CartanPoly::one().add(&CartanPoly::monomial(CartanMono::k_delta(-1), QRat::q_pow(2))),
        )
        .unwrap();
        assert!(a.bar_star().bar_star().eq_value(&a));
    }
}
