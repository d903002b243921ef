//! Weitzenboeck identities from first principles.
//!
//! For a fixed fiber F over so(n) the relevant gradients are the projections
//! of the covariant derivative onto the irreducible pieces of F tensor the
//! standard representation.  Each target module carries a conformal weight
//!   w = (Cas(target) - Cas(source) - Cas(standard)) / 2,
//! a shifted weight w^ = w + (n-1)/2, and a relative dimension
//! dim(target)/dim(source).  Curvature traces of the sphere satisfy the
//! universal moment identities
//!   E0:  sum_t X_t           = Delta - Cas(F) * c
//!   E1:  sum_t w_t X_t       = -Cas(F) * c
//!   E2:  sum_t a(w^_t) X_t   = r4 * c
//! where X_t is the bare adjoint-square of the t-th gradient, c the
//! curvature normalization (1 on the unit round sphere), the shifted
//! Casimir moments are c^_t = sum w^^t * reldim with c^_0 = n, and
//!   a(w^) = c^_3 - c^_2 w^ + c^_1 w^2 - c^_0 w^3,
//!   r4    = c^_5 - ((n-1)/2) c^_4.
//! Eliminating all but a chosen pair of gradients from E0-E2 yields every
//! classical Weitzenboeck identity
//!   Delta = sum_kept A_t X_t + K * c,   A_t = 1 + beta w_t + gamma a(w^_t),
//!   K = Cas(F)(1 + beta) - gamma r4,
//! with (beta, gamma) solving 1 + beta w_d + gamma a(w^_d) = 0 for each
//! discarded gradient d (gamma = 0 when only one is discarded, both zero
//! when none is).

use crate::branching::{fiber_components, module_casimir, module_dim, Bundle, BundleKind};
use crate::rat::{frac, half, rat, Rat};
use crate::rep::{Algebra, Irrep};
use crate::spectra::OperatorKind;
use num_traits::{One, Zero};
use thiserror::Error;

/// The three bundle families whose gradients close into a Weitzenboeck
/// system (differential forms are covered by the spinor-form system through
/// the exterior-calculus identities, so they carry no separate system).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Spinor,
    Sym,
    SpinorForm,
}

#[derive(Debug, Clone)]
pub struct GradientTarget {
    /// The adjoint-square operator this gradient generates.
    pub op: OperatorKind,
    /// Irreducible so(n) components of the target fiber.
    pub fiber: Vec<Irrep>,
    /// Conformal weight w.
    pub w: Rat,
    /// Shifted weight w^ = w + (n-1)/2.
    pub w_hat: Rat,
    /// dim(target) / dim(source).
    pub reldim: Rat,
}

#[derive(Debug, Clone)]
pub struct System {
    kind: FamilyKind,
    n: u32,
    j: u32,
    source: Vec<Irrep>,
    fiber_cas: Rat,
    targets: Vec<GradientTarget>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeitzenError {
    #[error("S^{n} is not supported (need n >= 3)")]
    UnsupportedSphere { n: u32 },
    #[error("spinor-form degree {j} exceeds the rank {max} of so({n})")]
    InvalidDegree { n: u32, j: u32, max: u32 },
    #[error("cannot eliminate {count} gradients with two moment identities")]
    TooManyDiscarded { count: usize },
    #[error("discarded gradient has conformal weight zero; elimination is singular")]
    ZeroWeightDiscard,
    #[error("elimination system is singular for this keep-set")]
    SingularSystem,
    #[error("no requested operator is a gradient of this system")]
    NothingKept,
}

/// A derived identity Delta = sum A_t X_t + K * c on the source bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    /// (operator, coefficient A) for each kept gradient, in system order.
    pub terms: Vec<(OperatorKind, Rat)>,
    /// Curvature constant K (coefficient of c; c = 1 on the unit sphere).
    pub curvature_constant: Rat,
}

/// w = (Cas(target) - Cas(source) - (n-1)) / 2.
pub fn conformal_weight(n: u32, source: &[Irrep], target: &[Irrep]) -> Rat {
    (module_casimir(target) - module_casimir(source) - rat(n as i64 - 1)) / rat(2)
}

impl System {
    pub fn new(kind: FamilyKind, n: u32, j: u32) -> Result<System, WeitzenError> {
        if n < 3 {
            return Err(WeitzenError::UnsupportedSphere { n });
        }
        let alg = Algebra::so(n).expect("n >= 3");
        let r = alg.rank();
        if kind == FamilyKind::SpinorForm && j as usize > r {
            return Err(WeitzenError::InvalidDegree {
                n,
                j,
                max: r as u32,
            });
        }
        let fib = |w: &[Rat]| fiber_components(alg, w).expect("catalog weight");
        let spinor_w = |jj: u32| {
            let mut w = vec![half(1); r];
            w[0] = rat(jj as i64) + half(1);
            w
        };
        let sym_w = |jj: u32| {
            let mut w = vec![rat(0); r];
            w[0] = rat(jj as i64);
            w
        };
        let eform_w = |jj: u32| {
            let mut w = vec![half(1); r];
            w[..jj as usize].fill(frac(3, 2));
            w
        };
        let (source, raw_targets): (Vec<Irrep>, Vec<(OperatorKind, Vec<Irrep>)>) = match kind {
            FamilyKind::Spinor => {
                let src = fib(&spinor_w(j));
                let mut tg = vec![(OperatorKind::TPlus, fib(&spinor_w(j + 1)))];
                if j >= 1 && n >= 4 {
                    let mut w = spinor_w(j);
                    w[1] = frac(3, 2);
                    tg.push((OperatorKind::U, fib(&w)));
                }
                tg.push((OperatorKind::DiracSquared, src.clone()));
                if j >= 1 {
                    tg.push((OperatorKind::TMinus, fib(&spinor_w(j - 1))));
                }
                (src, tg)
            }
            FamilyKind::Sym => {
                let src = fib(&sym_w(j));
                let mut tg = vec![(OperatorKind::TPlus, fib(&sym_w(j + 1)))];
                if j >= 1 {
                    // on S^3 the rank-raising twist has nowhere to go; the
                    // U-slot degenerates onto the source itself (w = -1)
                    let t = if n == 3 {
                        src.clone()
                    } else {
                        let mut w = sym_w(j);
                        w[1] = rat(1);
                        fib(&w)
                    };
                    tg.push((OperatorKind::U, t));
                    tg.push((OperatorKind::TMinus, fib(&sym_w(j - 1))));
                }
                (src, tg)
            }
            FamilyKind::SpinorForm => {
                let src = fib(&eform_w(j));
                let mut tg = Vec::new();
                if j >= 1 {
                    let mut w = eform_w(j);
                    w[0] += rat(1);
                    tg.push((OperatorKind::U, fib(&w)));
                }
                if n >= 2 * j + 2 {
                    tg.push((OperatorKind::TPlus, fib(&eform_w(j + 1))));
                }
                if n >= 2 * j + 1 {
                    tg.push((OperatorKind::DiracSquared, src.clone()));
                }
                if j >= 1 {
                    tg.push((OperatorKind::TMinus, fib(&eform_w(j - 1))));
                }
                (src, tg)
            }
        };
        let sd = module_dim(&source);
        let fiber_cas = module_casimir(&source);
        let shift = frac(n as i64 - 1, 2);
        let targets = raw_targets
            .into_iter()
            .map(|(op, fiber)| {
                let w = conformal_weight(n, &source, &fiber);
                let reldim = Rat::from(module_dim(&fiber)) / Rat::from(sd.clone());
                GradientTarget {
                    op,
                    w: w.clone(),
                    w_hat: w + shift.clone(),
                    reldim,
                    fiber,
                }
            })
            .collect();
        Ok(System {
            kind,
            n,
            j,
            source,
            fiber_cas,
            targets,
        })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn source_fiber(&self) -> &[Irrep] {
        &self.source
    }

    pub fn fiber_casimir(&self) -> &Rat {
        &self.fiber_cas
    }

    pub fn targets(&self) -> &[GradientTarget] {
        &self.targets
    }

    /// c^_t = sum over targets of w^^t * reldim, with the degenerate moment
    /// c^_0 pinned to n (the relative dimensions always sum to n).
    pub fn shifted_casimir(&self, t: u32) -> Rat {
        if t == 0 {
            return rat(self.n as i64);
        }
        let mut acc = Rat::zero();
        for tg in &self.targets {
            let mut p = Rat::one();
            for _ in 0..t {
                p *= tg.w_hat.clone();
            }
            acc += p * tg.reldim.clone();
        }
        acc
    }

    /// a(w^) = c^_3 - c^_2 w^ + c^_1 w^2 - c^_0 w^3.
    pub fn a_val(&self, w_hat: &Rat) -> Rat {
        self.shifted_casimir(3) - self.shifted_casimir(2) * w_hat.clone()
            + self.shifted_casimir(1) * w_hat.clone() * w_hat.clone()
            - self.shifted_casimir(0) * w_hat.clone() * w_hat.clone() * w_hat.clone()
    }

    /// r4 = c^_5 - ((n-1)/2) c^_4.
    pub fn r4(&self) -> Rat {
        self.shifted_casimir(5) - frac(self.n as i64 - 1, 2) * self.shifted_casimir(4)
    }

    /// Eliminate every gradient not in `keep` from the moment identities.
    /// `keep` is a request: operators the system lacks for structural
    /// reasons (T^- at j = 0, say) are silently skipped, so the same
    /// keep-set derives a whole j-indexed table of identities.  If nothing
    /// requested is present the call is rejected.
    pub fn derive(&self, keep: &[OperatorKind]) -> Result<Identity, WeitzenError> {
        let (kept, discarded): (Vec<&GradientTarget>, Vec<&GradientTarget>) =
            self.targets.iter().partition(|t| keep.contains(&t.op));
        if kept.is_empty() {
            return Err(WeitzenError::NothingKept);
        }
        let (beta, gamma) = match discarded.len() {
            0 => (Rat::zero(), Rat::zero()),
            1 => {
                let w = &discarded[0].w;
                if w.is_zero() {
                    return Err(WeitzenError::ZeroWeightDiscard);
                }
                (-Rat::one() / w.clone(), Rat::zero())
            }
            2 => {
                let (w1, a1) = (&discarded[0].w, self.a_val(&discarded[0].w_hat));
                let (w2, a2) = (&discarded[1].w, self.a_val(&discarded[1].w_hat));
                let det = w1.clone() * a2.clone() - w2.clone() * a1.clone();
                if det.is_zero() {
                    return Err(WeitzenError::SingularSystem);
                }
                let beta = (a1.clone() - a2.clone()) / det.clone();
                let gamma = (w2.clone() - w1.clone()) / det;
                debug_assert!(
                    (Rat::one() + beta.clone() * w1.clone() + gamma.clone() * a1).is_zero()
                );
                debug_assert!(
                    (Rat::one() + beta.clone() * w2.clone() + gamma.clone() * a2).is_zero()
                );
                (beta, gamma)
            }
            count => return Err(WeitzenError::TooManyDiscarded { count }),
        };
        let terms = kept
            .iter()
            .map(|t| {
                (
                    t.op,
                    Rat::one() + beta.clone() * t.w.clone() + gamma.clone() * self.a_val(&t.w_hat),
                )
            })
            .collect();
        let curvature_constant =
            self.fiber_cas.clone() * (Rat::one() + beta) - gamma * self.r4();
        Ok(Identity {
            terms,
            curvature_constant,
        })
    }
}

impl Identity {
    pub fn coefficient(&self, op: OperatorKind) -> Option<&Rat> {
        self.terms.iter().find(|(o, _)| *o == op).map(|(_, a)| a)
    }
}

/// The bundle whose sections a system's source fiber induces.
pub fn system_bundle(kind: FamilyKind, n: u32, j: u32) -> Result<Bundle, crate::branching::BundleError> {
    let bk = match kind {
        FamilyKind::Spinor => BundleKind::Spinor { j },
        FamilyKind::Sym => BundleKind::Sym { j },
        FamilyKind::SpinorForm => BundleKind::SpinorForm { j },
    };
    Bundle::new(n, bk)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(kind: FamilyKind, n: u32, j: u32) -> System {
        System::new(kind, n, j).unwrap()
    }

    #[test]
    fn spinor_target_table() {
        // conformal weights, shifted weights, relative dimensions for the
        // spinor system match their closed forms on a grid
        for n in 3..10u32 {
            for j in 0..5u32 {
                let s = sys(FamilyKind::Spinor, n, j);
                let (nn, jj) = (n as i64, j as i64);
                for t in s.targets() {
                    match t.op {
                        OperatorKind::TPlus => {
                            assert_eq!(t.w, frac(2 * jj + 1, 2));
                            assert_eq!(t.w_hat, rat(jj) + frac(nn, 2));
                            assert_eq!(t.reldim, frac(nn + jj - 1, jj + 1));
                        }
                        OperatorKind::U => {
                            assert_eq!(t.w, frac(-1, 2));
                            assert_eq!(t.w_hat, frac(nn, 2) - rat(1));
                            assert_eq!(
                                t.reldim,
                                rat((nn - 3) * (nn + jj - 1) * jj)
                                    / rat((nn + jj - 2) * (jj + 1))
                            );
                        }
                        OperatorKind::DiracSquared => {
                            assert_eq!(t.w, frac(1 - nn, 2));
                            assert_eq!(t.w_hat, rat(0));
                            assert_eq!(t.reldim, rat(1));
                        }
                        OperatorKind::TMinus => {
                            assert_eq!(t.w, frac(3, 2) - rat(nn + jj));
                            assert_eq!(t.w_hat, rat(1 - jj) - frac(nn, 2));
                            assert_eq!(t.reldim, frac(jj, nn + jj - 2));
                        }
                        _ => panic!("unexpected target"),
                    }
                }
                assert_eq!(
                    *s.fiber_casimir(),
                    rat(jj * (nn + jj - 1)) + frac(nn * (nn - 1), 8)
                );
                // relative dimensions sum to n
                let total: Rat = s.targets().iter().map(|t| t.reldim.clone()).sum();
                assert_eq!(total, rat(nn));
            }
        }
    }

    #[test]
    fn reldims_sum_to_n_all_families() {
        for n in 3..10u32 {
            for j in 0..5u32 {
                for kind in [FamilyKind::Spinor, FamilyKind::Sym] {
                    let s = sys(kind, n, j);
                    let total: Rat = s.targets().iter().map(|t| t.reldim.clone()).sum();
                    assert_eq!(total, rat(n as i64), "{kind:?} {n} {j}");
                }
            }
            for j in 0..=(n / 2) {
                let s = sys(FamilyKind::SpinorForm, n, j);
                let total: Rat = s.targets().iter().map(|t| t.reldim.clone()).sum();
                assert_eq!(total, rat(n as i64), "spinor-form {n} {j}");
            }
        }
    }

    #[test]
    fn lichnerowicz_identity_from_elimination() {
        // basic spinors, keep {D}: Delta = A D^2 + K c with A = n/(n-2)...
        // expressed in catalog normalization: derive gives bare coefficients
        for n in 3..10i64 {
            let s = sys(FamilyKind::Spinor, n as u32, 0);
            let id = s.derive(&[OperatorKind::DiracSquared]).unwrap();
            assert_eq!(id.coefficient(OperatorKind::DiracSquared), Some(&rat(n)));
            assert_eq!(id.curvature_constant, -frac(n * (n - 1), 8));
        }
    }

    #[test]
    fn spinor_first_weitzenboeck_all_j() {
        // keep {D, Tminus}: A_D = (n+2j)(n-2)/(n+2j-2),
        // A_T- = 4(n+j-2)/(n+2j-2), K = j(n+j-2) - n(n-1)/8
        for n in 3..11u32 {
            for j in 0..6u32 {
                let s = sys(FamilyKind::Spinor, n, j);
                let id = s
                    .derive(&[OperatorKind::DiracSquared, OperatorKind::TMinus])
                    .unwrap();
                let (nn, jj) = (n as i64, j as i64);
                assert_eq!(
                    id.coefficient(OperatorKind::DiracSquared),
                    Some(&frac((nn + 2 * jj) * (nn - 2), nn + 2 * jj - 2)),
                    "{n} {j}"
                );
                if j >= 1 {
                    assert_eq!(
                        id.coefficient(OperatorKind::TMinus),
                        Some(&frac(4 * (nn + jj - 2), nn + 2 * jj - 2))
                    );
                }
                assert_eq!(
                    id.curvature_constant,
                    rat(jj * (nn + jj - 2)) - frac(nn * (nn - 1), 8)
                );
            }
        }
    }

    #[test]
    fn spinor_second_weitzenboeck_positive_j() {
        // keep {Tplus, D}: A_T+ = 4(j+1)/(n+2j), A_D = (n+2j-2)(n-2)/(n+2j),
        // K = (j+1)(n+j-1) - n(n-1)/8 -- uniquely determined once j >= 1
        for n in 3..11u32 {
            for j in 1..6u32 {
                let s = sys(FamilyKind::Spinor, n, j);
                let id = s
                    .derive(&[OperatorKind::TPlus, OperatorKind::DiracSquared])
                    .unwrap();
                let (nn, jj) = (n as i64, j as i64);
                assert_eq!(
                    id.coefficient(OperatorKind::TPlus),
                    Some(&frac(4 * (jj + 1), nn + 2 * jj)),
                    "{n} {j}"
                );
                assert_eq!(
                    id.coefficient(OperatorKind::DiracSquared),
                    Some(&frac((nn + 2 * jj - 2) * (nn - 2), nn + 2 * jj))
                );
                assert_eq!(
                    id.curvature_constant,
                    rat((jj + 1) * (nn + jj - 1)) - frac(nn * (nn - 1), 8)
                );
            }
        }
    }

    #[test]
    fn sym_weitzenboeck() {
        // keep {Tplus, Tminus}: A+ = j+1, A- = -(n+j-3), K = 2j(n+j-2);
        // weights are (j, -1, -(n+j-2)) including the S^3 degeneration
        for n in 3..11u32 {
            for j in 1..6u32 {
                let s = sys(FamilyKind::Sym, n, j);
                let (nn, jj) = (n as i64, j as i64);
                let ws: Vec<(OperatorKind, Rat)> = s
                    .targets()
                    .iter()
                    .map(|t| (t.op, t.w.clone()))
                    .collect();
                assert_eq!(
                    ws,
                    vec![
                        (OperatorKind::TPlus, rat(jj)),
                        (OperatorKind::U, rat(-1)),
                        (OperatorKind::TMinus, rat(-(nn + jj - 2))),
                    ]
                );
                let id = s
                    .derive(&[OperatorKind::TPlus, OperatorKind::TMinus])
                    .unwrap();
                assert_eq!(id.coefficient(OperatorKind::TPlus), Some(&rat(jj + 1)));
                assert_eq!(
                    id.coefficient(OperatorKind::TMinus),
                    Some(&rat(-(nn + jj - 3)))
                );
                assert_eq!(id.curvature_constant, rat(2 * jj * (nn + jj - 2)));
            }
        }
    }

    #[test]
    fn spinor_form_estimate_lines() {
        for n in 3..11u32 {
            let (nn,) = (n as i64,);
            for j in 0..=(n / 2) {
                let s = sys(FamilyKind::SpinorForm, n, j);
                let jj = j as i64;
                let present: Vec<OperatorKind> = s.targets().iter().map(|t| t.op).collect();
                let has = |op| present.contains(&op);
                // keep {D, Tminus}
                if has(OperatorKind::U) && has(OperatorKind::TPlus) {
                    let id = s
                        .derive(&[OperatorKind::DiracSquared, OperatorKind::TMinus])
                        .unwrap();
                    assert_eq!(
                        id.coefficient(OperatorKind::DiracSquared),
                        Some(&frac((nn + 2) * (nn - 2 * jj), nn - 2 * jj + 2)),
                        "{n} {j}"
                    );
                    if j >= 1 {
                        assert_eq!(
                            id.coefficient(OperatorKind::TMinus),
                            Some(&frac(
                                4 * (nn - 2 * jj + 1) * (nn - jj + 2),
                                (nn - 2 * jj + 3) * (nn - 2 * jj + 2)
                            ))
                        );
                    }
                    assert_eq!(
                        id.curvature_constant,
                        rat(jj * (nn - jj)) - frac(nn * (nn - 1), 8)
                    );
                }
                // keep {Tplus, D}
                if has(OperatorKind::U)
                    && has(OperatorKind::TMinus)
                    && (nn - 2 * jj) * (nn - 2 * jj - 1) != 0
                {
                    let id = s
                        .derive(&[OperatorKind::TPlus, OperatorKind::DiracSquared])
                        .unwrap();
                    assert_eq!(
                        id.coefficient(OperatorKind::TPlus),
                        Some(&frac(
                            -4 * (nn - 2 * jj + 1) * (jj + 1),
                            (nn - 2 * jj - 1) * (nn - 2 * jj)
                        )),
                        "{n} {j}"
                    );
                    assert_eq!(
                        id.coefficient(OperatorKind::DiracSquared),
                        Some(&frac((nn - 2 * jj + 2) * (nn + 2), nn - 2 * jj))
                    );
                    assert_eq!(
                        id.curvature_constant,
                        rat((jj - 1) * (nn - jj + 1)) - frac(nn * (nn - 1), 8)
                    );
                }
                // keep {U, Tplus}
                if has(OperatorKind::DiracSquared)
                    && has(OperatorKind::TMinus)
                    && (nn - 2 * jj - 1) * (nn - jj + 1) != 0
                {
                    let id = s.derive(&[OperatorKind::U, OperatorKind::TPlus]).unwrap();
                    assert_eq!(
                        id.coefficient(OperatorKind::U),
                        Some(&frac(
                            (nn - jj + 2) * (nn + 2),
                            (nn - jj + 1) * (nn + 1)
                        )),
                        "{n} {j}"
                    );
                    if has(OperatorKind::TPlus) {
                        assert_eq!(
                            id.coefficient(OperatorKind::TPlus),
                            Some(&frac(
                                (nn - 2 * jj) * (nn - 2 * jj + 1),
                                (nn - 2 * jj - 1) * (nn - jj + 1)
                            ))
                        );
                    }
                    assert_eq!(
                        id.curvature_constant,
                        rat(jj * (nn - jj + 2)) + frac(nn * (nn + 1), 8)
                    );
                }
            }
        }
    }

    #[test]
    fn degenerate_requests_error_cleanly() {
        let s = sys(FamilyKind::Spinor, 5, 0);
        // U and Tminus are absent at j = 0
        assert!(matches!(
            s.derive(&[OperatorKind::TMinus]),
            Err(WeitzenError::NothingKept)
        ));
        // keeping everything: nothing to eliminate, coefficients all 1
        let id = s
            .derive(&[OperatorKind::TPlus, OperatorKind::DiracSquared])
            .unwrap();
        assert!(id.terms.iter().all(|(_, a)| a.is_one()));
        assert_eq!(id.curvature_constant, *s.fiber_casimir());
        // discarding three gradients is over-determined
        let s = sys(FamilyKind::Spinor, 6, 2);
        assert!(matches!(
            s.derive(&[OperatorKind::TPlus]),
            Err(WeitzenError::TooManyDiscarded { count: 3 })
        ));
    }

    #[test]
    fn invalid_parameters() {
        assert!(matches!(
            System::new(FamilyKind::SpinorForm, 5, 3),
            Err(WeitzenError::InvalidDegree { max: 2, .. })
        ));
        assert!(System::new(FamilyKind::Spinor, 3, 7).is_ok());
        assert!(matches!(
            System::new(FamilyKind::Sym, 2, 1),
            Err(WeitzenError::UnsupportedSphere { n: 2 })
        ));
    }
}
