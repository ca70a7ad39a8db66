//! Exact rational functions in the deformation variable `q`.
//!
//! [`ZPoly`] is a dense polynomial over arbitrary-precision integers and
//! [`QRat`] a fully reduced fraction of two such polynomials.  Reduction
//! divides out both the polynomial gcd and the integer content, and fixes
//! the sign so the denominator has a positive leading coefficient; equal
//! values therefore have identical representations.  Laurent expressions
//! such as `q^-1` live here as ordinary fractions (`1/q`).

use crate::error::{CoreError, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// Dense polynomial in `q` with integer coefficients, lowest degree first.
///
/// Invariant: no trailing zero coefficient (the zero polynomial is an empty
/// coefficient vector).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZPoly {
    pub coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        ZPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn from_int(n: i64) -> Self {
        if n == 0 {
            Self::zero()
        } else {
            ZPoly {
                coeffs: vec![BigInt::from(n)],
            }
        }
    }

    /// The monomial `c * q^k`, `k >= 0`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        ZPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `-1` for convenience.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    fn trim(mut self) -> Self {
        while let Some(c) = self.coeffs.last() {
            if c.is_zero() {
                self.coeffs.pop();
            } else {
                break;
            }
        }
        self
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn neg(&self) -> Self {
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            coeffs.push(a + b);
        }
        ZPoly { coeffs }.trim()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        ZPoly { coeffs }.trim()
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        ZPoly { coeffs }
    }

    /// `q^deg * p(1/q)`.
    pub fn reversed(&self) -> Self {
        let mut coeffs: Vec<BigInt> = self.coeffs.iter().rev().cloned().collect();
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    /// Number of trailing zero coefficients, i.e. the largest `k` with `q^k | p`.
    pub fn low_order(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    /// gcd of the coefficients with the sign of the leading coefficient.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.leading().map(|c| c.is_negative()).unwrap_or(false) {
            -g
        } else {
            g
        }
    }

    pub fn div_exact_int(&self, d: &BigInt) -> Self {
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| c / d).collect(),
        }
    }

    /// Exact division; panics if the division leaves a remainder (callers
    /// guarantee divisibility).
    pub fn div_exact(&self, d: &Self) -> Self {
        let (quot, rem) = self.pseudo_div_monic_free(d);
        assert!(rem.is_zero(), "inexact polynomial division");
        quot
    }

    /// Division in Q[q] returning (quotient, remainder) with exact rational
    /// arithmetic folded back to integers when possible.  Internal use by
    /// `div_exact` only: succeeds precisely when `d` divides `self` in Z[q].
    fn pseudo_div_monic_free(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return (Self::zero(), Self::zero());
        }
        let dd = d.degree();
        if self.degree() < dd {
            return (Self::zero(), self.clone());
        }
        let lead = d.leading().unwrap().clone();
        let mut rem = self.clone();
        let qdeg = (self.degree() - dd) as usize;
        let mut quot = vec![BigInt::zero(); qdeg + 1];
        while !rem.is_zero() && rem.degree() >= dd {
            let k = (rem.degree() - dd) as usize;
            let rl = rem.leading().unwrap();
            let (c, r) = rl.div_rem(&lead);
            if r.is_zero() {
                quot[k] = c.clone();
                let t = d.mul(&ZPoly::monomial(c, k));
                rem = rem.sub(&t);
            } else {
                // Not exactly divisible at this step.
                return (ZPoly { coeffs: quot }.trim(), rem);
            }
        }
        (ZPoly { coeffs: quot }.trim(), rem)
    }

    /// Primitive-PRS polynomial gcd, content included.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            let c = other.content();
            if c.is_negative() {
                return other.neg().primitive_times(&-c);
            }
            return other.clone();
        }
        if other.is_zero() {
            let c = self.content();
            if c.is_negative() {
                return self.neg().primitive_times(&-c);
            }
            return self.clone();
        }
        let ca = self.content().abs();
        let cb = other.content().abs();
        let cg = ca.gcd(&cb);
        let mut a = self.div_exact_int(&self.content());
        let mut b = other.div_exact_int(&other.content());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = if r.is_zero() {
                ZPoly::zero()
            } else {
                r.div_exact_int(&r.content())
            };
        }
        let mut g = a;
        if g.leading().map(|c| c.is_negative()).unwrap_or(false) {
            g = g.neg();
        }
        g.primitive_times(&cg)
    }

    fn primitive_times(&self, c: &BigInt) -> Self {
        ZPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
        .trim()
    }

    /// Pseudo-remainder of `self` by `d` (both nonzero, deg self >= deg d not
    /// required).
    fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree();
        let lead = d.leading().unwrap().clone();
        let mut rem = self.clone();
        while !rem.is_zero() && rem.degree() >= dd {
            let k = (rem.degree() - dd) as usize;
            let c = rem.leading().unwrap().clone();
            rem = rem
                .primitive_times(&lead)
                .sub(&d.mul(&ZPoly::monomial(c, k)));
        }
        rem
    }

    /// Evaluate at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluate at a rational point `n/d`, returning `(value_num, d^deg)` so
    /// callers can form the exact rational value.
    pub fn eval_rat_parts(&self, n: &BigInt, d: &BigInt) -> (BigInt, u32) {
        if self.is_zero() {
            return (BigInt::zero(), 0);
        }
        let deg = self.degree() as u32;
        let mut acc = BigInt::zero();
        let mut dp = BigInt::one();
        // sum c_i n^i d^{deg-i}
        let mut npows = vec![BigInt::one()];
        for _ in 0..deg {
            let last = npows.last().unwrap() * n;
            npows.push(last);
        }
        for i in (0..=deg).rev() {
            if let Some(c) = self.coeffs.get(i as usize) {
                acc += c * &npows[i as usize] * &dp;
            }
            dp *= d;
        }
        (acc, deg)
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            } else {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            }
            let a = c.abs();
            if i == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "q{}", power_suffix(i))?;
            } else {
                write!(f, "{a}*q{}", power_suffix(i))?;
            }
        }
        Ok(())
    }
}

fn power_suffix(i: usize) -> String {
    if i == 1 {
        String::new()
    } else {
        format!("^{i}")
    }
}

/// Reduced fraction of two integer polynomials in `q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QRat {
    num: ZPoly,
    den: ZPoly,
}

impl QRat {
    pub fn zero() -> Self {
        QRat {
            num: ZPoly::zero(),
            den: ZPoly::one(),
        }
    }

    pub fn one() -> Self {
        QRat {
            num: ZPoly::one(),
            den: ZPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        QRat {
            num: ZPoly::from_int(n),
            den: ZPoly::one(),
        }
    }

    pub fn from_frac_int(n: i64, d: i64) -> Self {
        assert!(d != 0);
        Self::new(ZPoly::from_int(n), ZPoly::from_int(d))
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        if k >= 0 {
            QRat {
                num: ZPoly::monomial(BigInt::one(), k as usize),
                den: ZPoly::one(),
            }
        } else {
            QRat {
                num: ZPoly::one(),
                den: ZPoly::monomial(BigInt::one(), (-k) as usize),
            }
        }
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn new(num: ZPoly, den: ZPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        QRat { num, den }.normalize()
    }

    fn normalize(mut self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        // Cancel pure q powers cheaply first.
        let k = self.num.low_order().min(self.den.low_order());
        if k > 0 {
            self.num.coeffs.drain(..k);
            self.den.coeffs.drain(..k);
        }
        let g = self.num.gcd(&self.den);
        if g.degree() > 0 || !g.content().abs().is_one() {
            self.num = self.num.div_exact(&g);
            self.den = self.den.div_exact(&g);
        }
        if self
            .den
            .leading()
            .map(|c| c.is_negative())
            .unwrap_or(false)
        {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
        self
    }

    pub fn num(&self) -> &ZPoly {
        &self.num
    }

    pub fn den(&self) -> &ZPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        Ok(QRat {
            num: self.den.clone(),
            den: self.num.clone(),
        }
        .normalize())
    }

    /// The bar involution `q -> 1/q`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let dn = self.num.degree().max(0) as usize;
        let dd = self.den.degree().max(0) as usize;
        let d = dn.max(dd);
        let num = self.num.reversed().shift_up(d - dn);
        let den = self.den.reversed().shift_up(d - dd);
        QRat { num, den }.normalize()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Signed integer power; negative exponents invert (nonzero input).
    pub fn pow_i(&self, k: i64) -> Self {
        if k >= 0 {
            self.pow(k as u32)
        } else {
            self.inv().expect("nonzero base").pow((-k) as u32)
        }
    }

    /// Exact evaluation at the rational point `n/d` as a pair
    /// `(numerator_value, denominator_value)`; `None` if the denominator
    /// polynomial vanishes there.
    pub fn eval_rat(&self, n: &BigInt, d: &BigInt) -> Option<(BigInt, BigInt)> {
        let (dv, ddeg) = self.den.eval_rat_parts(n, d);
        if dv.is_zero() {
            return None;
        }
        let (nv, ndeg) = self.num.eval_rat_parts(n, d);
        // value = nv / d^ndeg  *  d^ddeg / dv
        if ndeg >= ddeg {
            Some((nv, &dv * d.pow(ndeg - ddeg)))
        } else {
            Some((nv * d.pow(ddeg - ndeg), dv))
        }
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == ZPoly::one() {
            if self.num.coeffs.iter().filter(|c| !c.is_zero()).count() > 1 {
                write!(f, "({})", self.num)
            } else {
                write!(f, "{}", self.num)
            }
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Add for &QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        QRat {
            num: self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            den: self.den.mul(&rhs.den),
        }
        .normalize()
    }
}

impl Sub for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        QRat {
            num: self.num.mul(&rhs.den).sub(&rhs.num.mul(&self.den)),
            den: self.den.mul(&rhs.den),
        }
        .normalize()
    }
}

impl Mul for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        if self.is_zero() || rhs.is_zero() {
            return QRat::zero();
        }
        QRat {
            num: self.num.mul(&rhs.num),
            den: self.den.mul(&rhs.den),
        }
        .normalize()
    }
}

impl Div for &QRat {
    type Output = QRat;
    fn div(self, rhs: &QRat) -> QRat {
        assert!(!rhs.is_zero(), "division by zero");
        QRat {
            num: self.num.mul(&rhs.den),
            den: self.den.mul(&rhs.num),
        }
        .normalize()
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat {
            num: self.num.neg(),
            den: self.den,
        }
    }
}

impl AddAssign<&QRat> for QRat {
    fn add_assign(&mut self, rhs: &QRat) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&QRat> for QRat {
    fn sub_assign(&mut self, rhs: &QRat) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&QRat> for QRat {
    fn mul_assign(&mut self, rhs: &QRat) {
        *self = &*self * rhs;
    }
}

/// `q^n - q^-n` over `q - q^-1`.
pub fn bracket_n(n: i64) -> QRat {
    let qn = QRat::q_pow(n);
    let qmn = QRat::q_pow(-n);
    let num = &qn - &qmn;
    let den = &QRat::q_pow(1) - &QRat::q_pow(-1);
    &num / &den
}

/// `(n)_b = 1 + b + ... + b^{n-1}`.
pub fn paren_n(n: i64, base: &QRat) -> QRat {
    assert!(n >= 0);
    let mut acc = QRat::zero();
    let mut p = QRat::one();
    for _ in 0..n {
        acc += &p;
        p = &p * base;
    }
    acc
}

/// `(n)_b! = (1)_b (2)_b ... (n)_b`; errors when some factor vanishes.
pub fn paren_factorial(n: i64, base: &QRat) -> Result<QRat> {
    assert!(n >= 0);
    let mut acc = QRat::one();
    for j in 1..=n {
        let f = paren_n(j, base);
        if f.is_zero() {
            return Err(CoreError::ZeroQFactorial(j));
        }
        acc = &acc * &f;
    }
    Ok(acc)
}

/// The constant `a = [2]_q = q + q^-1` (the squared-length bracket of the
/// simple root).
pub fn a_const() -> QRat {
    bracket_n(2)
}

/// `a(m) = (q^{2m} - q^{-2m}) / (m (q - q^-1))`.
pub fn a_of_m(m: i64) -> QRat {
    assert!(m != 0);
    let num = &QRat::q_pow(2 * m) - &QRat::q_pow(-2 * m);
    let den = &(&QRat::q() - &QRat::q_pow(-1)) * &QRat::from_int(m);
    &num / &den
}

/// `d(n)`, the inverse of `a(n)`.
pub fn d_of_n(n: i64) -> QRat {
    a_of_m(n).inv().expect("a(n) is nonzero for n != 0")
}

/// Coefficient sequence `1/(n)_base!` for `n <= order` of the q-exponential.
pub fn qexp_coeffs(base: &QRat, order: usize) -> Result<Vec<QRat>> {
    let mut out = Vec::with_capacity(order + 1);
    for n in 0..=order as i64 {
        out.push(paren_factorial(n, base)?.inv()?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> QRat {
        QRat::q()
    }

    #[test]
    fn self_division_is_one() {
        let x = &q() - &QRat::q_pow(-1);
        assert!((&x / &x).is_one());
    }

    #[test]
    fn polynomial_cancellation() {
        // (q^2 - 1)/(q - 1) = q + 1
        let num = &QRat::q_pow(2) - &QRat::one();
        let den = &q() - &QRat::one();
        let r = &num / &den;
        assert_eq!(r, &q() + &QRat::one());
    }

    #[test]
    fn a_const_is_q_plus_qinv() {
        assert_eq!(a_const(), &q() + &QRat::q_pow(-1));
    }

    #[test]
    fn paren_two_of_q() {
        assert_eq!(paren_n(2, &q()), &q() + &QRat::one());
    }

    #[test]
    fn a_and_d_are_inverse() {
        for m in 1..=4 {
            assert!((&a_of_m(m) * &d_of_n(m)).is_one());
        }
    }

    #[test]
    fn qexp_orders() {
        assert_eq!(qexp_coeffs(&q(), 0).unwrap(), vec![QRat::one()]);
        let c = qexp_coeffs(&q(), 2).unwrap();
        assert_eq!(c[1], QRat::one());
        assert_eq!(c[2], (&q() + &QRat::one()).inv().unwrap());
        // base (-1)^theta q^{-2} at theta = 1
        let base = &QRat::from_int(-1) * &QRat::q_pow(-2);
        let c = qexp_coeffs(&base, 2).unwrap();
        let expect = (&QRat::one() - &QRat::q_pow(-2)).inv().unwrap();
        assert_eq!(c[2], expect);
    }

    #[test]
    fn bar_involution() {
        let x = &(&q() - &QRat::q_pow(-1)) / &(&QRat::q_pow(3) + &QRat::from_int(7));
        assert_eq!(x.bar().bar(), x);
        assert_eq!(q().bar(), QRat::q_pow(-1));
    }

    #[test]
    fn bracket_symmetry() {
        // [n]_q is bar-invariant
        for n in 1..=5 {
            let b = bracket_n(n);
            assert_eq!(b.bar(), b);
        }
    }

    #[test]
    fn canonical_reduction() {
        // q-power cancellation against denominators
        let x = QRat::new(
            ZPoly::monomial(BigInt::from(6), 4),
            ZPoly::monomial(BigInt::from(4), 1),
        );
        assert_eq!(x, &QRat::from_frac_int(3, 2) * &QRat::q_pow(3));
    }

    #[test]
    fn eval_rat() {
        let x = &(&QRat::q_pow(2) - &QRat::one()) / &(&q() - &QRat::one());
        // equals q+1, at q = 3/2 the value is 5/2
        let (n, d) = x
            .eval_rat(&BigInt::from(3), &BigInt::from(2))
            .unwrap();
        let v = (n, d);
        // normalize 5/2
        let g = v.0.gcd(&v.1);
        assert_eq!((&v.0 / &g, &v.1 / &g), (BigInt::from(5), BigInt::from(2)));
    }
}
