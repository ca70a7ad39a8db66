//! Standard Hopf structure: coproduct, antipode, counit, and the lifts of
//! the coproduct to one slot of a tensor.

use crate::algebra::{Element, Letter};
use crate::coeffs::{CartanMono, Coefficient};
use crate::error::Result;
use crate::lattice::AlgebraConfig;
use crate::qrat::QRat;
use crate::tensor::{coeff_monomials, Slot, Tensor3, TensorElement};

/// Coproduct of a single letter.
pub fn coproduct_letter(l: Letter) -> TensorElement {
    let mut out = TensorElement::zero();
    let w = crate::algebra::Word::single(l);
    if l.is_raising() {
        // e (x) 1 + k^-1 (x) e
        out.add_term(Slot::word(w.clone()), Slot::unit(), 0, &QRat::one());
        out.add_term(
            Slot {
                mono: l.simple_k(-1),
                word: crate::algebra::Word::empty(),
            },
            Slot::word(w),
            0,
            &QRat::one(),
        );
    } else {
        // f (x) k + 1 (x) f
        out.add_term(
            Slot::word(w.clone()),
            Slot {
                mono: l.simple_k(1),
                word: crate::algebra::Word::empty(),
            },
            0,
            &QRat::one(),
        );
        out.add_term(Slot::unit(), Slot::word(w), 0, &QRat::one());
    }
    out
}

/// Coproduct, extended multiplicatively; Cartan monomials are group-like.
pub fn coproduct(a: &Element, cfg: &AlgebraConfig) -> Result<TensorElement> {
    let theta = cfg.theta();
    let mut out = TensorElement::zero();
    for (w, c) in &a.terms {
        for (m, s) in coeff_monomials(c) {
            let mut acc = TensorElement::term(
                Slot {
                    mono: m,
                    word: crate::algebra::Word::empty(),
                },
                Slot {
                    mono: m,
                    word: crate::algebra::Word::empty(),
                },
                0,
                s.clone(),
            );
            for l in &w.0 {
                acc = acc.mul(&coproduct_letter(*l), theta)?;
            }
            out = out.add(&acc);
        }
    }
    Ok(out)
}

/// Opposite coproduct (Koszul flip of the coproduct).
pub fn coproduct_opposite(a: &Element, cfg: &AlgebraConfig) -> Result<TensorElement> {
    Ok(coproduct(a, cfg)?.flip(cfg.theta()))
}

/// Antipode: graded antimorphism with `S(e) = -k e`, `S(f) = -f k^-1`,
/// `S(k) = k^-1`.
pub fn antipode(a: &Element, cfg: &AlgebraConfig) -> Element {
    let mut out = Element::zero();
    for (w, c) in &a.terms {
        let n = w.len() as i64;
        let sign = cfg.phase_pow(n * (n - 1) / 2);
        let mut acc = Element::one();
        for l in w.0.iter().rev() {
            acc = acc.mul(&antipode_letter(*l));
        }
        let sc = Element::scalar(c.map_exponents(|e| [-e[0], -e[1], -e[2]]));
        out.add_assign(&acc.mul(&sc).scale_qrat(&QRat::from_int(sign)));
    }
    out
}

fn antipode_letter(l: Letter) -> Element {
    if l.is_raising() {
        Element::term(
            crate::algebra::Word::single(l),
            Coefficient::monomial(l.simple_k(1), QRat::from_int(-1)),
        )
    } else {
        Element::letter(l)
            .mul(&Element::cartan(l.simple_k(-1)))
            .scale_qrat(&QRat::from_int(-1))
    }
}

/// Apply the coproduct to the left slot of a two-slot tensor.
pub fn delta_left(t: &TensorElement, cfg: &AlgebraConfig) -> Result<Tensor3> {
    let mut out = Tensor3::zero();
    for ((a, b, k), v) in &t.terms {
        assert_eq!(*k, 0, "the formal symbol is handled by the caller");
        let a_el = Element::term(a.word.clone(), Coefficient::monomial(a.mono, QRat::one()));
        let da = coproduct(&a_el, cfg)?;
        for ((x, y, _), v2) in &da.terms {
            out.add_term(x.clone(), y.clone(), b.clone(), &(v * v2));
        }
    }
    Ok(out)
}

/// Apply the coproduct to the right slot of a two-slot tensor.
pub fn delta_right(t: &TensorElement, cfg: &AlgebraConfig) -> Result<Tensor3> {
    let mut out = Tensor3::zero();
    for ((a, b, k), v) in &t.terms {
        assert_eq!(*k, 0, "the formal symbol is handled by the caller");
        let b_el = Element::term(b.word.clone(), Coefficient::monomial(b.mono, QRat::one()));
        let db = coproduct(&b_el, cfg)?;
        for ((x, y, _), v2) in &db.terms {
            out.add_term(a.clone(), x.clone(), y.clone(), &(v * v2));
        }
    }
    Ok(out)
}

/// Multiply the two slots together (the multiplication map of the algebra).
pub fn fold_tensor(t: &TensorElement) -> Element {
    let mut out = Element::zero();
    for ((a, b, k), v) in &t.terms {
        assert_eq!(*k, 0);
        let ea = Element::term(a.word.clone(), Coefficient::monomial(a.mono, v.clone()));
        let eb = Element::term(b.word.clone(), Coefficient::monomial(b.mono, QRat::one()));
        out.add_assign(&ea.mul(&eb));
    }
    out
}

/// Apply the antipode to the left slot, then fold: the composite appearing
/// in the antipode axiom.
pub fn antipode_fold_left(t: &TensorElement, cfg: &AlgebraConfig) -> Element {
    let mut out = Element::zero();
    for ((a, b, k), v) in &t.terms {
        assert_eq!(*k, 0);
        let ea = Element::term(a.word.clone(), Coefficient::monomial(a.mono, v.clone()));
        let sa = antipode(&ea, cfg);
        let eb = Element::term(b.word.clone(), Coefficient::monomial(b.mono, QRat::one()));
        out.add_assign(&sa.mul(&eb));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{counit, gen_e_alpha, gen_f_alpha};
    use crate::engine::Engine;
    use crate::truncation::{Truncation, Window};

    fn cfgs() -> [AlgebraConfig; 2] {
        [AlgebraConfig::a1(), AlgebraConfig::c2()]
    }

    fn all_gens() -> [Element; 4] {
        [
            crate::algebra::gen_e_alpha(),
            crate::algebra::gen_e_delta_alpha(),
            crate::algebra::gen_f_alpha(),
            crate::algebra::gen_f_delta_alpha(),
        ]
    }

    #[test]
    fn coproduct_of_raising_generator() {
        for cfg in cfgs() {
            let d = coproduct(&gen_e_alpha(), &cfg).unwrap();
            assert_eq!(d.len(), 2);
        }
    }

    #[test]
    fn antipode_values() {
        for cfg in cfgs() {
            // S(e) = -k e
            let s = antipode(&gen_e_alpha(), &cfg);
            let expect = Element::term(
                crate::algebra::Word::single(Letter::EAlpha),
                Coefficient::monomial(CartanMono::k_alpha(1), QRat::from_int(-1)),
            );
            assert!(s.sub(&expect).is_zero());
            // S(f) = -f k^-1
            let s = antipode(&gen_f_alpha(), &cfg);
            let expect = gen_f_alpha()
                .mul(&Element::cartan(CartanMono::k_alpha(-1)))
                .scale_qrat(&QRat::from_int(-1));
            assert!(s.sub(&expect).is_zero());
        }
    }

    #[test]
    fn counit_values() {
        assert!(counit(&gen_e_alpha()).unwrap().is_zero());
        assert!(counit(&Element::cartan(CartanMono::k_alpha(3)))
            .unwrap()
            .is_one());
    }

    #[test]
    fn coassociativity_on_generators() {
        for cfg in cfgs() {
            for g in all_gens() {
                let d = coproduct(&g, &cfg).unwrap();
                let l = delta_left(&d, &cfg).unwrap();
                let r = delta_right(&d, &cfg).unwrap();
                assert!(l.sub(&r).is_zero(), "theta={}", cfg.theta());
            }
        }
    }

    #[test]
    fn antipode_axiom_on_generators() {
        let t = Truncation::new(3, 2, 2);
        for cfg in cfgs() {
            let eng = Engine::new(cfg);
            for g in all_gens() {
                let d = coproduct(&g, &cfg).unwrap();
                let folded = antipode_fold_left(&d, &cfg);
                // counit of every generator is zero
                let z = eng.is_zero_in_window(&folded, &t, &Window::unbounded());
                assert!(z.zero, "theta={}", cfg.theta());
            }
        }
    }

    #[test]
    fn coproduct_is_multiplicative_vs_relation() {
        // Delta respects the cross commutation: Delta(ef - (-1)^theta fe - [h])
        // reduces to zero slotwise.
        let t = Truncation::new(3, 2, 2);
        for cfg in cfgs() {
            let eng = Engine::new(cfg);
            let lhs = gen_e_alpha().mul(&gen_f_alpha());
            let rhs = gen_f_alpha()
                .mul(&gen_e_alpha())
                .scale_qrat(&QRat::from_int(cfg.phase_pow(1)))
                .add(&crate::algebra::h_bracket(Letter::EAlpha));
            let diff = lhs.sub(&rhs);
            let d = coproduct(&diff, &cfg).unwrap();
            let z = eng.tensor_is_zero_in_window(&d, &t, &Window::unbounded());
            assert!(z.zero);
        }
    }
}
