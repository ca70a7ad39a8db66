//! Data-driven verification of the full commutation catalog of the
//! Cartan-Weyl basis: permutation relations among real and imaginary root
//! vectors, the canonical-vector relations, and the involution/braid/
//! translation actions.
//!
//! Every instance expands its root vectors into Chevalley words and runs the
//! oracle; identities here are exact (no trusted window), truncation only
//! gates which instances are admissible.

use crate::algebra::{ddagger, star, tau, Element};
use crate::braid::{BraidGen, Translation};
use crate::cwbasis::RootVariant;
use crate::engine::Engine;
use crate::error::Result;
use crate::lattice::Weight;
use crate::qrat::{a_const, a_of_m, QRat};
use crate::report::IdentityReport;
use crate::truncation::{Truncation, Window};
use rayon::prelude::*;

/// Ranges and size guard for the catalog run.
#[derive(Debug, Clone, Copy)]
pub struct CwSuiteParams {
    /// Instances of the two-parameter relations run over `n + m <= max_nm`.
    pub max_nm: i64,
    /// Canonical-vector relations run over `n, m <= max_imag`.
    pub max_imag: i64,
    /// Skip instances whose largest one-side component exceeds this many
    /// words (the elimination cost guard).
    pub budget: usize,
}

impl Default for CwSuiteParams {
    fn default() -> Self {
        CwSuiteParams {
            max_nm: 4,
            max_imag: 3,
            budget: 3000,
        }
    }
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Largest one-side component (word count) the oracle would have to
/// echelonize for this element.
pub fn component_cost(a: &Element) -> usize {
    let mut worst = 0;
    for w in a.terms.keys() {
        let mut fa = 0;
        let mut fd = 0;
        let mut ea = 0;
        let mut ed = 0;
        for l in &w.0 {
            match l {
                crate::algebra::Letter::FAlpha => fa += 1,
                crate::algebra::Letter::FDeltaAlpha => fd += 1,
                crate::algebra::Letter::EAlpha => ea += 1,
                crate::algebra::Letter::EDeltaAlpha => ed += 1,
            }
        }
        worst = worst.max(binom(fa + fd, fd)).max(binom(ea + ed, ed));
    }
    worst
}

struct Job {
    label: String,
    n: i64,
    m: i64,
    lhs: Element,
    rhs: Element,
}

struct Ctx<'a> {
    eng: &'a Engine,
    t: &'a Truncation,
    budget: usize,
    jobs: Vec<Job>,
    skipped: usize,
}

impl<'a> Ctx<'a> {
    fn q_alpha_pow(&self, l: i64) -> QRat {
        &QRat::from_int(self.eng.cfg.phase_pow(l)) * &QRat::q_pow(2 * l)
    }

    fn phase(&self, k: i64) -> QRat {
        QRat::from_int(self.eng.cfg.phase_pow(k))
    }

    fn qa2m1(&self) -> QRat {
        // q_alpha^2 - 1
        &QRat::q_pow(4) - &QRat::one()
    }

    fn qa_m1(&self) -> QRat {
        // q_alpha - 1
        &self.q_alpha_pow(1) - &QRat::one()
    }

    fn rv(&self, variant: RootVariant, alpha: i64, delta: i64) -> Result<Element> {
        if delta.abs() > self.t.delta_height_cap {
            return Err(crate::error::CoreError::HeightOverflow {
                height: delta.abs(),
                cap: self.t.delta_height_cap,
            });
        }
        self.eng.rv(variant, alpha, delta)
    }

    fn k_el(&self, w: Weight) -> Element {
        Element::cartan(crate::coeffs::CartanMono::k_of_weight(&w))
    }

    fn h_of_weight(&self, w: Weight) -> Element {
        let s = (&QRat::q() - &QRat::q_pow(-1)).inv().unwrap();
        Element::scalar(
            crate::coeffs::Coefficient::monomial(
                crate::coeffs::CartanMono::k_of_weight(&w),
                s.clone(),
            )
            .sub(&crate::coeffs::Coefficient::monomial(
                crate::coeffs::CartanMono::k_of_weight(&w.neg()),
                s,
            )),
        )
    }

    /// Queue one instance if both sides were constructible and the
    /// component guard admits it.
    fn check(&mut self, label: &str, n: i64, m: i64, sides: Result<(Element, Element)>) {
        let Ok((lhs, rhs)) = sides else {
            return; // outside the truncation: not admissible
        };
        let diff = lhs.sub(&rhs);
        if component_cost(&diff) > self.budget {
            self.skipped += 1;
            return;
        }
        self.jobs.push(Job {
            label: label.to_string(),
            n,
            m,
            lhs,
            rhs,
        });
    }

    /// Evaluate all queued instances in parallel, order preserved.
    /// Catalog identities are exact: nothing may be dropped while
    /// straightening, the caller's truncation only gates admissibility.
    fn run(self) -> Vec<IdentityReport> {
        let eng = self.eng;
        self.jobs
            .par_iter()
            .map(|j| {
                eng.check_identity(
                    "cw",
                    &j.label,
                    Some(j.n),
                    Some(j.m),
                    &j.lhs,
                    &j.rhs,
                    &Truncation::exact(),
                    &Window::unbounded(),
                )
            })
            .collect()
    }
}

impl Engine {
    /// The commutation catalog (permutation relations plus canonical-vector
    /// relations), instantiated over the admissible parameter ranges.
    pub fn cw_identity_suite(&self, t: &Truncation, params: &CwSuiteParams) -> Vec<IdentityReport> {
        let mut cx = Ctx {
            eng: self,
            t,
            budget: params.budget,
            jobs: Vec::new(),
            skipped: 0,
        };
        let cfg = self.cfg;
        let max = params.max_nm;
        let d = RootVariant::Direct;
        let pr = RootVariant::Prime;
        let ca = RootVariant::Canonical;

        // Cartan conjugations of every constructed vector.
        for n in 0..=t.delta_height_cap.min(max) {
            for (alpha, lo) in [(1i64, 0i64), (-1, 1), (0, 1)] {
                if n < lo {
                    continue;
                }
                let variant = if alpha == 0 { pr } else { d };
                let w = Weight::new(alpha, n);
                let Ok(v) = cx.rv(variant, alpha, n) else {
                    continue;
                };
                for (kname, kmono, pairing) in [
                    ("k[dd]", crate::coeffs::CartanMono::k_d(1), n),
                    ("k[a]", crate::coeffs::CartanMono::k_alpha(1), 2 * alpha),
                    (
                        "k[d-a]",
                        crate::coeffs::CartanMono::k_delta_alpha(1),
                        -2 * alpha,
                    ),
                ] {
                    let lhs = Element::cartan(kmono)
                        .mul(&v)
                        .mul(&Element::cartan(kmono.inv()));
                    let rhs = v.scale_qrat(&QRat::q_pow(pairing));
                    cx.check(&format!("CW17:{kname}:{w}"), n, alpha, Ok((lhs, rhs)));
                }
            }
        }

        // CW18/CW19: real pairs of opposite sign.
        for n in 0..=max {
            let sides = (|| {
                let x = cx.rv(d, 1, n)?;
                let y = cx.rv(d, -1, -n)?;
                let rhs = cx
                    .h_of_weight(Weight::new(1, n))
                    .scale_qrat(&cx.phase(n));
                Ok((x.supercommutator(&y, &cfg), rhs))
            })();
            cx.check("CW18", n, 0, sides);
        }
        for n in 1..=max {
            let sides = (|| {
                let x = cx.rv(d, -1, n)?;
                let y = cx.rv(d, 1, -n)?;
                let rhs = cx
                    .h_of_weight(Weight::new(-1, n))
                    .scale_qrat(&cx.phase(n - 1));
                Ok((x.supercommutator(&y, &cfg), rhs))
            })();
            cx.check("CW19", n, 0, sides);
        }

        // CW20/CW21: same-sign raising family.
        for n in 0..=max {
            for m in 1..=(max - n) {
                let sides = (|| {
                    let x = cx.rv(d, 1, n)?;
                    let y = cx.rv(d, 1, n + 2 * m - 1)?;
                    let mut rhs = Element::zero();
                    for l in 1..m {
                        let t1 = cx.rv(d, 1, n + l)?;
                        let t2 = cx.rv(d, 1, n + 2 * m - 1 - l)?;
                        rhs.add_assign(
                            &t1.mul(&t2)
                                .scale_qrat(&(&cx.qa2m1() * &cx.q_alpha_pow(-l))),
                        );
                    }
                    Ok((x.qcommutator(&y, &cfg, false), rhs))
                })();
                cx.check("CW20", n, m, sides);
                let sides = (|| {
                    let x = cx.rv(d, 1, n)?;
                    let y = cx.rv(d, 1, n + 2 * m)?;
                    let sq = cx.rv(d, 1, n + m)?;
                    let mut rhs = sq
                        .pow(2)
                        .scale_qrat(&(&cx.qa_m1() * &cx.q_alpha_pow(-m + 1)));
                    for l in 1..m {
                        let t1 = cx.rv(d, 1, n + l)?;
                        let t2 = cx.rv(d, 1, n + 2 * m - l)?;
                        rhs.add_assign(
                            &t1.mul(&t2)
                                .scale_qrat(&(&cx.qa2m1() * &cx.q_alpha_pow(-l))),
                        );
                    }
                    Ok((x.qcommutator(&y, &cfg, false), rhs))
                })();
                cx.check("CW21", n, m, sides);
            }
        }

        // CW22/CW23: same-sign lowering-weight family (positive roots of the
        // minus series).
        for n in 1..=max {
            for m in 1..=(max - n) {
                let sides = (|| {
                    let x = cx.rv(d, -1, n + 2 * m - 1)?;
                    let y = cx.rv(d, -1, n)?;
                    let mut rhs = Element::zero();
                    for l in 1..m {
                        let t1 = cx.rv(d, -1, n + 2 * m - 1 - l)?;
                        let t2 = cx.rv(d, -1, n + l)?;
                        rhs.add_assign(
                            &t1.mul(&t2)
                                .scale_qrat(&(&cx.qa2m1() * &cx.q_alpha_pow(-l))),
                        );
                    }
                    Ok((x.qcommutator(&y, &cfg, false), rhs))
                })();
                cx.check("CW22", n, m, sides);
                let sides = (|| {
                    let x = cx.rv(d, -1, n + 2 * m)?;
                    let y = cx.rv(d, -1, n)?;
                    let sq = cx.rv(d, -1, n + m)?;
                    let mut rhs = sq
                        .pow(2)
                        .scale_qrat(&(&cx.qa_m1() * &cx.q_alpha_pow(-m + 1)));
                    for l in 1..m {
                        let t1 = cx.rv(d, -1, n + 2 * m - l)?;
                        let t2 = cx.rv(d, -1, n + l)?;
                        rhs.add_assign(
                            &t1.mul(&t2)
                                .scale_qrat(&(&cx.qa2m1() * &cx.q_alpha_pow(-l))),
                        );
                    }
                    Ok((x.qcommutator(&y, &cfg, false), rhs))
                })();
                cx.check("CW23", n, m, sides);
            }
        }

        // CW24/CW25: mixed-sign raising family.
        for n in 1..=max {
            for m in 1..=(max - n) {
                let sides = (|| {
                    let x = cx.rv(d, 1, -n)?;
                    let y = cx.rv(d, 1, n + 2 * m - 1)?;
                    let mut rhs = Element::zero();
                    let kmid = cx.k_el(Weight::new(-1, n));
                    for l in n..=(n + m - 1) {
                        let t1 = cx.rv(d, 1, l - n)?;
                        let t2 = cx.rv(d, 1, n + 2 * m - 1 - l)?;
                        rhs.add_assign(
                            &kmid.mul(&t1).mul(&t2).scale_qrat(
                                &-(&(&cx.phase(n - 1) * &cx.qa2m1()) * &cx.q_alpha_pow(-l)),
                            ),
                        );
                    }
                    for l in 1..n {
                        let t1 = cx.rv(d, 1, l - n)?;
                        let t2 = cx.rv(d, 1, n + 2 * m - 1 - l)?;
                        let kd = cx.k_el(Weight::new(0, l));
                        rhs.add_assign(&kd.mul(&t1).mul(&t2).scale_qrat(
                            &(&(&cx.phase(l) * &cx.qa2m1()) * &cx.q_alpha_pow(-l)),
                        ));
                    }
                    Ok((x.supercommutator(&y, &cfg), rhs))
                })();
                cx.check("CW24", n, m, sides);
                let sides = (|| {
                    let x = cx.rv(d, 1, -n)?;
                    let y = cx.rv(d, 1, n + 2 * m)?;
                    let mut rhs = Element::zero();
                    let kmid = cx.k_el(Weight::new(-1, n));
                    for l in n..=(n + m - 1) {
                        let t1 = cx.rv(d, 1, l - n)?;
                        let t2 = cx.rv(d, 1, n + 2 * m - l)?;
                        rhs.add_assign(
                            &kmid.mul(&t1).mul(&t2).scale_qrat(
                                &-(&(&cx.phase(n - 1) * &cx.qa2m1()) * &cx.q_alpha_pow(-l)),
                            ),
                        );
                    }
                    for l in 1..n {
                        let t1 = cx.rv(d, 1, l - n)?;
                        let t2 = cx.rv(d, 1, n + 2 * m - l)?;
                        let kd = cx.k_el(Weight::new(0, l));
                        rhs.add_assign(&kd.mul(&t1).mul(&t2).scale_qrat(
                            &(&(&cx.phase(l) * &cx.qa2m1()) * &cx.q_alpha_pow(-l)),
                        ));
                    }
                    let sq = cx.rv(d, 1, m)?;
                    rhs.add_assign(&kmid.mul(&sq.pow(2)).scale_qrat(
                        &-(&(&cx.phase(n - 1) * &cx.qa_m1()) * &cx.q_alpha_pow(-m - n + 1)),
                    ));
                    Ok((x.supercommutator(&y, &cfg), rhs))
                })();
                cx.check("CW25", n, m, sides);
            }
        }

        // CW26/CW27: mixed-sign lowering-weight family, Cartan factors on
        // the right.
        for n in 1..=max {
            for m in 1..=(max - n) {
                let sides = (|| {
                    let x = cx.rv(d, -1, n + 2 * m - 1)?;
                    let y = cx.rv(d, -1, -n)?;
                    let mut rhs = Element::zero();
                    let kinv = cx.k_el(Weight::new(-1, -n));
                    for l in (n + 1)..=(n + m - 1) {
                        let t1 = cx.rv(d, -1, n + 2 * m - 1 - l)?;
                        let t2 = cx.rv(d, -1, l - n)?;
                        rhs.add_assign(&t1.mul(&t2).mul(&kinv).scale_qrat(
                            &(&(&cx.phase(n + 1) * &cx.qa2m1()) * &cx.q_alpha_pow(-l)),
                        ));
                    }
                    for l in 1..=n {
                        let t1 = cx.rv(d, -1, n + 2 * m - 1 - l)?;
                        let t2 = cx.rv(d, -1, l - n)?;
                        let kd = cx.k_el(Weight::new(0, -l));
                        rhs.add_assign(&t1.mul(&t2).mul(&kd).scale_qrat(
                            &(&(&cx.phase(l) * &cx.qa2m1()) * &cx.q_alpha_pow(-l)),
                        ));
                    }
                    Ok((x.supercommutator(&y, &cfg), rhs))
                })();
                cx.check("CW26", n, m, sides);
            }
        }
        for n in 0..=max {
            for m in 1..=(max - n) {
                let sides = (|| {
                    let x = cx.rv(d, -1, n + 2 * m)?;
                    let y = cx.rv(d, -1, -n)?;
                    let mut rhs = Element::zero();
                    let kinv = cx.k_el(Weight::new(-1, -n));
                    for l in (n + 1)..=(n + m - 1) {
                        let t1 = cx.rv(d, -1, n + 2 * m - l)?;
                        let t2 = cx.rv(d, -1, l - n)?;
                        rhs.add_assign(&t1.mul(&t2).mul(&kinv).scale_qrat(
                            &(&(&cx.phase(n + 1) * &cx.qa2m1()) * &cx.q_alpha_pow(-l)),
                        ));
                    }
                    for l in 1..=n {
                        let t1 = cx.rv(d, -1, n + 2 * m - l)?;
                        let t2 = cx.rv(d, -1, l - n)?;
                        let kd = cx.k_el(Weight::new(0, -l));
                        rhs.add_assign(&t1.mul(&t2).mul(&kd).scale_qrat(
                            &(&(&cx.phase(l) * &cx.qa2m1()) * &cx.q_alpha_pow(-l)),
                        ));
                    }
                    let sq = cx.rv(d, -1, m)?;
                    rhs.add_assign(&sq.pow(2).mul(&kinv).scale_qrat(
                        &-(&(&cx.phase(n + 1) * &cx.qa_m1()) * &cx.q_alpha_pow(-m - n + 1)),
                    ));
                    Ok((x.supercommutator(&y, &cfg), rhs))
                })();
                cx.check("CW27", n, m, sides);
            }
        }

        // CW28-CW30: products landing on primed imaginary vectors.
        for n in 0..=max {
            for m in 1..=(max - n) {
                let sides = (|| {
                    let x = cx.rv(d, 1, n)?;
                    let y = cx.rv(d, -1, m)?;
                    let rhs = cx.rv(pr, 0, n + m)?;
                    Ok((x.qcommutator(&y, &cfg, false), rhs))
                })();
                cx.check("CW28", n, m, sides);
            }
        }
        for n in 1..=max {
            for m in 0..n {
                let sides = (|| {
                    let x = cx.rv(d, 1, n)?;
                    let y = cx.rv(d, -1, -m)?;
                    let rhs = cx
                        .rv(pr, 0, n - m)?
                        .mul(&cx.k_el(Weight::new(-1, -m)))
                        .scale_qrat(&-cx.phase(m + 1));
                    Ok((x.supercommutator(&y, &cfg), rhs))
                })();
                cx.check("CW29", n, m, sides);
            }
            for m in 1..n {
                let sides = (|| {
                    let x = cx.rv(d, 1, -m)?;
                    let y = cx.rv(d, -1, n)?;
                    let rhs = cx
                        .k_el(Weight::new(-1, m))
                        .mul(&cx.rv(pr, 0, n - m)?)
                        .scale_qrat(&-cx.phase(m - 1));
                    Ok((x.supercommutator(&y, &cfg), rhs))
                })();
                cx.check("CW30", n, m, sides);
            }
        }

        // CW31: primed imaginary vectors commute (and canonical ones too).
        for n in 1..=max {
            for m in n..=max {
                for (lbl, var) in [("CW31:prime", pr), ("CW31:canonical", ca)] {
                    for sgn in [1i64, -1] {
                        let sides = (|| {
                            let x = cx.rv(var, 0, sgn * n)?;
                            let y = cx.rv(var, 0, sgn * m)?;
                            Ok((x.supercommutator(&y, &cfg), Element::zero()))
                        })();
                        let tag = if sgn > 0 { lbl.to_string() } else { format!("{lbl}:neg") };
                        cx.check(&tag, n, m, sides);
                    }
                }
            }
        }

        // CW32/CW33: primed imaginary against real.
        for n in 0..=max {
            for m in 1..=(max - n) {
                let sides = (|| {
                    let x = cx.rv(d, 1, n)?;
                    let y = cx.rv(pr, 0, m)?;
                    let mut rhs = cx
                        .rv(d, 1, n + m)?
                        .scale_qrat(&(&(&cx.q_alpha_pow(-m + 1) * &a_const())));
                    for l in 1..m {
                        let t1 = cx.rv(d, 1, n + l)?;
                        let t2 = cx.rv(pr, 0, m - l)?;
                        rhs.add_assign(
                            &t1.mul(&t2)
                                .scale_qrat(&(&cx.qa2m1() * &cx.q_alpha_pow(-l))),
                        );
                    }
                    Ok((x.supercommutator(&y, &cfg), rhs))
                })();
                cx.check("CW32", n, m, sides);
            }
        }
        for n in 1..=max {
            for m in 1..=(max - n) {
                let sides = (|| {
                    let x = cx.rv(pr, 0, m)?;
                    let y = cx.rv(d, -1, n)?;
                    let mut rhs = cx
                        .rv(d, -1, n + m)?
                        .scale_qrat(&(&(&cx.q_alpha_pow(-m + 1) * &a_const())));
                    for l in 1..m {
                        let t1 = cx.rv(pr, 0, m - l)?;
                        let t2 = cx.rv(d, -1, n + l)?;
                        rhs.add_assign(
                            &t1.mul(&t2)
                                .scale_qrat(&(&cx.qa2m1() * &cx.q_alpha_pow(-l))),
                        );
                    }
                    Ok((x.supercommutator(&y, &cfg), rhs))
                })();
                cx.check("CW33", n, m, sides);
            }
        }

        // CW34/CW35: negative real against positive primed imaginary.
        for n in 1..=max {
            for m in n..=max.min(max - 0) {
                if n + m > 2 * max {
                    continue;
                }
                let sides = (|| {
                    let x = cx.rv(d, 1, -n)?;
                    let y = cx.rv(pr, 0, m)?;
                    let kmid = cx.k_el(Weight::new(-1, n));
                    let mut rhs = kmid
                        .mul(&cx.rv(d, 1, m - n)?)
                        .scale_qrat(&-(&(&cx.phase(n - 1) * &cx.q_alpha_pow(-m + 1)) * &a_const()));
                    for l in n..m {
                        let t1 = cx.rv(d, 1, l - n)?;
                        let t2 = cx.rv(pr, 0, m - l)?;
                        rhs.add_assign(&kmid.mul(&t1).mul(&t2).scale_qrat(
                            &-(&(&cx.phase(n - 1) * &cx.qa2m1()) * &cx.q_alpha_pow(-l)),
                        ));
                    }
                    for l in 1..n {
                        let t1 = cx.rv(d, 1, l - n)?;
                        let t2 = cx.rv(pr, 0, m - l)?;
                        let kd = cx.k_el(Weight::new(0, l));
                        rhs.add_assign(&kd.mul(&t1).mul(&t2).scale_qrat(
                            &(&(&cx.phase(l) * &cx.qa2m1()) * &cx.q_alpha_pow(-l)),
                        ));
                    }
                    Ok((x.supercommutator(&y, &cfg), rhs))
                })();
                cx.check("CW34", n, m, sides);
            }
            for m in 1..n {
                let sides = (|| {
                    let x = cx.rv(d, 1, -n)?;
                    let y = cx.rv(pr, 0, m)?;
                    let kdm = cx.k_el(Weight::new(0, m));
                    let mut rhs = kdm
                        .mul(&cx.rv(d, 1, m - n)?)
                        .scale_qrat(&(&(&cx.phase(m) * &cx.q_alpha_pow(-m + 1)) * &a_const()));
                    for l in 1..m {
                        let t1 = cx.rv(d, 1, l - n)?;
                        let t2 = cx.rv(pr, 0, m - l)?;
                        let kd = cx.k_el(Weight::new(0, l));
                        rhs.add_assign(&kd.mul(&t1).mul(&t2).scale_qrat(
                            &(&(&cx.phase(l) * &cx.qa2m1()) * &cx.q_alpha_pow(-l)),
                        ));
                    }
                    Ok((x.supercommutator(&y, &cfg), rhs))
                })();
                cx.check("CW35", n, m, sides);
            }
        }

        // CW36/CW37: positive primed imaginary against negative real.
        for m in 1..=max {
            for n in 0..m {
                let sides = (|| {
                    let x = cx.rv(pr, 0, m)?;
                    let y = cx.rv(d, -1, -n)?;
                    let kinv = cx.k_el(Weight::new(-1, -n));
                    let mut rhs = cx
                        .rv(d, -1, m - n)?
                        .mul(&kinv)
                        .scale_qrat(&-(&(&cx.phase(n + 1) * &cx.q_alpha_pow(-m + 1)) * &a_const()));
                    for l in (n + 1)..m {
                        let t1 = cx.rv(pr, 0, m - l)?;
                        let t2 = cx.rv(d, -1, l - n)?;
                        rhs.add_assign(&t1.mul(&t2).mul(&kinv).scale_qrat(
                            &-(&(&cx.phase(n + 1) * &cx.qa2m1()) * &cx.q_alpha_pow(-l)),
                        ));
                    }
                    for l in 1..=n {
                        let t1 = cx.rv(pr, 0, m - l)?;
                        let t2 = cx.rv(d, -1, l - n)?;
                        let kd = cx.k_el(Weight::new(0, -l));
                        rhs.add_assign(&t1.mul(&t2).mul(&kd).scale_qrat(
                            &(&(&cx.phase(l) * &cx.qa2m1()) * &cx.q_alpha_pow(-l)),
                        ));
                    }
                    Ok((x.supercommutator(&y, &cfg), rhs))
                })();
                cx.check("CW36", n, m, sides);
            }
        }
        for m in 1..=max {
            for n in m..=max {
                let sides = (|| {
                    let x = cx.rv(pr, 0, m)?;
                    let y = cx.rv(d, -1, -n)?;
                    let kdm = cx.k_el(Weight::new(0, -m));
                    let mut rhs = cx
                        .rv(d, -1, m - n)?
                        .mul(&kdm)
                        .scale_qrat(&(&(&cx.phase(m) * &cx.q_alpha_pow(-m + 1)) * &a_const()));
                    for l in 1..m {
                        let t1 = cx.rv(pr, 0, m - l)?;
                        let t2 = cx.rv(d, -1, l - n)?;
                        let kd = cx.k_el(Weight::new(0, -l));
                        rhs.add_assign(&t1.mul(&t2).mul(&kd).scale_qrat(
                            &(&(&cx.phase(l) * &cx.qa2m1()) * &cx.q_alpha_pow(-l)),
                        ));
                    }
                    Ok((x.supercommutator(&y, &cfg), rhs))
                })();
                cx.check("CW37", n, m, sides);
            }
        }

        // CW45-CW51: the canonical imaginary vectors.
        let imax = params.max_imag;
        for n in 0..=imax {
            for m in 1..=imax {
                let sides = (|| {
                    let x = cx.rv(d, 1, n)?;
                    let y = cx.rv(ca, 0, m)?;
                    let rhs = cx
                        .rv(d, 1, n + m)?
                        .scale_qrat(&(&cx.phase(m - 1) * &a_of_m(m)));
                    Ok((x.supercommutator(&y, &cfg), rhs))
                })();
                cx.check("CW45", n, m, sides);
            }
        }
        for n in 1..=imax {
            for m in 1..=imax {
                let sides = (|| {
                    let x = cx.rv(ca, 0, m)?;
                    let y = cx.rv(d, -1, n)?;
                    let rhs = cx
                        .rv(d, -1, n + m)?
                        .scale_qrat(&(&cx.phase(m - 1) * &a_of_m(m)));
                    Ok((x.supercommutator(&y, &cfg), rhs))
                })();
                cx.check("CW46", n, m, sides);
            }
        }
        for n in 1..=imax {
            for m in n..=imax {
                let sides = (|| {
                    let x = cx.rv(d, 1, -n)?;
                    let y = cx.rv(ca, 0, m)?;
                    let rhs = cx
                        .k_el(Weight::new(-1, n))
                        .mul(&cx.rv(d, 1, m - n)?)
                        .scale_qrat(&-(&cx.phase(n + m) * &a_of_m(m)));
                    Ok((x.supercommutator(&y, &cfg), rhs))
                })();
                cx.check("CW47", n, m, sides);
            }
            for m in 1..n {
                let sides = (|| {
                    let x = cx.rv(d, 1, -n)?;
                    let y = cx.rv(ca, 0, m)?;
                    let rhs = cx
                        .k_el(Weight::new(0, m))
                        .mul(&cx.rv(d, 1, m - n)?)
                        .scale_qrat(&(&cx.phase(1) * &a_of_m(m)));
                    Ok((x.supercommutator(&y, &cfg), rhs))
                })();
                cx.check("CW48", n, m, sides);
            }
        }
        for m in 1..=imax {
            for n in 0..m {
                let sides = (|| {
                    let x = cx.rv(ca, 0, m)?;
                    let y = cx.rv(d, -1, -n)?;
                    let rhs = cx
                        .rv(d, -1, m - n)?
                        .mul(&cx.k_el(Weight::new(-1, -n)))
                        .scale_qrat(&-(&cx.phase(n + m) * &a_of_m(m)));
                    Ok((x.supercommutator(&y, &cfg), rhs))
                })();
                cx.check("CW49", n, m, sides);
            }
            for n in m..=imax {
                let sides = (|| {
                    let x = cx.rv(ca, 0, m)?;
                    let y = cx.rv(d, -1, -n)?;
                    let rhs = cx
                        .rv(d, -1, m - n)?
                        .mul(&cx.k_el(Weight::new(0, -m)))
                        .scale_qrat(&(&cx.phase(1) * &a_of_m(m)));
                    Ok((x.supercommutator(&y, &cfg), rhs))
                })();
                cx.check("CW50", n, m, sides);
            }
        }
        for n in 1..=imax {
            for m in 1..=imax {
                let sides = (|| {
                    let x = cx.rv(ca, 0, n)?;
                    let y = cx.rv(ca, 0, -m)?;
                    let rhs = if n == m {
                        cx.h_of_weight(Weight::new(0, m))
                            .scale_qrat(&a_of_m(m))
                    } else {
                        Element::zero()
                    };
                    Ok((x.supercommutator(&y, &cfg), rhs))
                })();
                cx.check("CW51", n, m, sides);
            }
        }

        cx.run()
    }

    /// Involution, braid and translation actions on the constructed vectors.
    pub fn cw_action_suite(&self, t: &Truncation, max: i64) -> Vec<IdentityReport> {
        let mut cx = Ctx {
            eng: self,
            t,
            budget: usize::MAX,
            jobs: Vec::new(),
            skipped: 0,
        };
        let cfg = self.cfg;
        let d = RootVariant::Direct;
        let ti = RootVariant::Tilde;
        let pr = RootVariant::Prime;
        let tpr = RootVariant::TildePrime;
        let ca = RootVariant::Canonical;
        let tca = RootVariant::TildeCanonical;

        // star duality on every family
        for n in 0..=max {
            for (alpha, lo, var) in [
                (1i64, 0i64, d),
                (-1, 1, d),
                (0, 1, pr),
                (0, 1, ca),
                (1, 0, ti),
                (-1, 1, ti),
                (0, 1, tpr),
                (0, 1, tca),
            ] {
                if n < lo {
                    continue;
                }
                let sides = (|| {
                    let plus = cx.rv(var, alpha, n)?;
                    let minus = cx.rv(var, -alpha, -n)?;
                    Ok((star(&plus), minus))
                })();
                cx.check(&format!("CW11:{var:?}"), n, alpha, sides);
            }
        }

        // graded conjugation on the four real families
        for n in 0..=max {
            let cases: Vec<(i64, i64, i64)> = vec![
                // (alpha, delta, phase exponent): image is the opposite root
                (1, n, n + 1),
                (-1, -n, n),
                (-1, n, n),
                (1, -n, n - 1),
            ];
            for (alpha, delta, pk) in cases {
                if alpha == -1 && delta.abs() == 0 {
                    continue;
                }
                if delta.abs() > max || (alpha == -1 && delta == 0) {
                    continue;
                }
                if (alpha, delta) == (1, -0) && n == 0 {
                    // covered by (1, 0)
                }
                let sides = (|| {
                    let v = cx.rv(d, alpha, delta)?;
                    let img = cx.rv(d, -alpha, -delta)?.scale_qrat(&cx.phase(pk));
                    Ok((ddagger(&v, &cfg), img))
                })();
                cx.check("CW11d", n, alpha, sides);
            }
        }

        // the diagram involution exchanges the two families
        for n in -max..=max {
            let cases: Vec<(&str, RootVariant, i64, i64, RootVariant, i64, i64)> = vec![
                ("CW12:plus", d, 1, n, ti, -1, n + 1),
                ("CW12:plus-tilde", ti, 1, n, d, -1, n + 1),
                ("CW12:minus", d, -1, n, ti, 1, n - 1),
                ("CW12:minus-tilde", ti, -1, n, d, 1, n - 1),
            ];
            for (lbl, v1, a1, d1, v2, a2, d2) in cases {
                let sides = (|| {
                    let x = cx.rv(v1, a1, d1)?;
                    let y = cx.rv(v2, a2, d2)?;
                    Ok((tau(&x), y))
                })();
                cx.check(lbl, n, 0, sides);
            }
            if n != 0 {
                for (lbl, v1, v2) in [
                    ("CW12:prime", pr, tpr),
                    ("CW12:canonical", ca, tca),
                ] {
                    let sides = (|| {
                        let x = cx.rv(v1, 0, n)?;
                        let y = cx.rv(v2, 0, n)?;
                        Ok((tau(&x), y))
                    })();
                    cx.check(lbl, n, 0, sides);
                }
            }
        }

        // braid actions turning one family into the other
        for n in 1..=max {
            let cases: Vec<(&str, Vec<BraidGen>, RootVariant, i64, i64, RootVariant, i64, i64, i64)> = vec![
                ("CW13:a", vec![BraidGen::TAlpha], ti, 1, n, d, -1, n, n + 1),
                ("CW13:b", vec![BraidGen::TAlpha], ti, -1, -n, d, 1, -n, n),
                ("CW13:c", vec![BraidGen::TAlpha], ti, -1, n, d, 1, n, n - 1),
                ("CW13:d", vec![BraidGen::TAlpha], ti, 1, -n, d, -1, -n, n),
                ("CW13:imag", vec![BraidGen::TAlpha], tpr, 0, n, pr, 0, n, n),
                ("CW13:imag-neg", vec![BraidGen::TAlpha], tpr, 0, -n, pr, 0, -n, n),
            ];
            for (lbl, seq, v1, a1, d1, v2, a2, d2, pk) in cases {
                let sides = (|| {
                    let x = cx.rv(v1, a1, d1)?;
                    let y = cx.rv(v2, a2, d2)?.scale_qrat(&cx.phase(pk));
                    Ok((cx.eng.braid_apply(&seq, &x), y))
                })();
                cx.check(lbl, n, 0, sides);
            }
        }
        for k in 0..=max {
            // the other reflection maps direct to tilde with a height shift
            let cases: Vec<(&str, RootVariant, i64, i64, RootVariant, i64, i64, i64, bool)> = vec![
                ("CW14:a", d, 1, k, ti, -1, k + 2, k, true),
                ("CW14:b", d, -1, -k, ti, 1, -k - 2, k + 1, true),
                ("CW14:c", d, -1, k, ti, 1, k - 2, k, k > 1),
                ("CW14:d", d, 1, -k, ti, -1, -k + 2, k - 1, k > 1),
                ("CW14:imag", pr, 0, k, tpr, 0, k, k, k > 0),
                ("CW14:imag-neg", pr, 0, -k, tpr, 0, -k, k, k > 0),
            ];
            for (lbl, v1, a1, d1, v2, a2, d2, pk, valid) in cases {
                if !valid {
                    continue;
                }
                let sides = (|| {
                    let x = cx.rv(v1, a1, d1)?;
                    let y = cx.rv(v2, a2, d2)?.scale_qrat(&cx.phase(pk));
                    Ok((cx.eng.braid_apply(&[BraidGen::TDeltaAlpha], &x), y))
                })();
                cx.check(lbl, k, 0, sides);
            }
        }
        // translation actions on the direct family
        for k in 0..=max {
            let cases: Vec<(&str, i64, i64, i64, i64, i64, bool)> = vec![
                ("CW15:a", 1, k, 1, k + 1, k, true),
                ("CW15:b", -1, -k, -1, -k - 1, k + 1, true),
                ("CW15:c", -1, k, -1, k - 1, k, k > 1),
                ("CW15:d", 1, -k, 1, -k + 1, k - 1, k > 1),
            ];
            for (lbl, a1, d1, a2, d2, pk, valid) in cases {
                if !valid {
                    continue;
                }
                let sides = (|| {
                    let x = cx.rv(d, a1, d1)?;
                    let y = cx.rv(d, a2, d2)?.scale_qrat(&cx.phase(pk));
                    Ok((cx.eng.translation(Translation::TDelta, 1, &x)?, y))
                })();
                cx.check(lbl, k, 0, sides);
            }
        }
        for m in 1..=max {
            for (lbl, var, sgn) in [
                ("CW15:imag", pr, 1i64),
                ("CW15:imag-neg", pr, -1),
                ("CW15:canonical", ca, 1),
            ] {
                let sides = (|| {
                    let x = cx.rv(var, 0, sgn * m)?;
                    let y = x.scale_qrat(&cx.phase(m));
                    Ok((cx.eng.translation(Translation::TDelta, 1, &x)?, y))
                })();
                cx.check(lbl, m, 0, sides);
            }
        }
        // the tilde translation acts on the tilde family with the mirrored
        // shifts
        for n in 1..=max {
            let cases: Vec<(&str, i64, i64, i64, i64, i64)> = vec![
                ("CW16:a", 1, n, 1, n - 1, n - 1),
                ("CW16:b", -1, -n, -1, -n + 1, n),
                ("CW16:c", -1, n, -1, n + 1, n + 1),
                ("CW16:d", 1, -n, 1, -n - 1, n),
            ];
            for (lbl, a1, d1, a2, d2, pk) in cases {
                let sides = (|| {
                    let x = cx.rv(ti, a1, d1)?;
                    let y = cx.rv(ti, a2, d2)?.scale_qrat(&cx.phase(pk));
                    Ok((cx.eng.translation(Translation::TTildeDelta, 1, &x)?, y))
                })();
                cx.check(lbl, n, 0, sides);
            }
            for (lbl, sgn) in [("CW16:imag", 1i64), ("CW16:imag-neg", -1)] {
                let sides = (|| {
                    let x = cx.rv(tpr, 0, sgn * n)?;
                    let y = x.scale_qrat(&cx.phase(n));
                    Ok((cx.eng.translation(Translation::TTildeDelta, 1, &x)?, y))
                })();
                cx.check(lbl, n, 0, sides);
            }
        }
        cx.run()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::AlgebraConfig;

    fn engines() -> [Engine; 2] {
        [
            Engine::new(AlgebraConfig::a1()),
            Engine::new(AlgebraConfig::c2()),
        ]
    }

    #[test]
    fn small_catalog_passes() {
        let t = Truncation::new(3, 2, 2);
        let params = CwSuiteParams {
            max_nm: 2,
            max_imag: 2,
            budget: 3000,
        };
        for eng in engines() {
            let reports = eng.cw_identity_suite(&t, &params);
            assert!(reports.len() > 40);
            for r in &reports {
                assert!(r.passed(), "theta={} {r}", eng.theta());
            }
        }
    }

    #[test]
    fn small_actions_pass() {
        let t = Truncation::new(3, 2, 2);
        for eng in engines() {
            let reports = eng.cw_action_suite(&t, 2);
            assert!(reports.len() > 30);
            for r in &reports {
                assert!(r.passed(), "theta={} {r}", eng.theta());
            }
        }
    }
}
