//! Eigenvalues of the natural second-order operators on each irreducible
//! summand of the bundle families over S^n.
//!
//! The Laplace-type operator acts on a summand by the Casimir value of its
//! so(n+1) label; that is the single normative definition here (closed-form
//! eigenvalue expressions live in the tests and the verification suites as
//! independent oracles).  The composed gradients — the square of the Dirac
//! operator, the adjoint-squares of the generalized gradients T^+, T^-, U,
//! and the exterior-calculus squares d*d, dd*, C*C — are given by exact
//! closed forms in (n, j, k, s).
//!
//! Conventions for degenerate parameters:
//! * An operator that simply does not exist on a bundle (e.g. T^- at j = 0,
//!   or the Dirac operator at the middle degree of an even sphere) acts as
//!   zero; its "eigenvalue" is reported as 0 rather than an error, matching
//!   the identities in which it appears.
//! * The lone exception is U*U on symmetric tensors over S^3: its natural
//!   closed form is a genuine extrapolation from n >= 4 (the target bundle
//!   does not exist on S^3), so `operator_ev` refuses and the value is only
//!   available, explicitly labeled, via [`sym_u_extrapolated`].

use crate::branching::{BundleKind, Family, Member};
use crate::rat::{frac, rat, Rat};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    /// Bochner/Hodge Laplacian; equals the parent Casimir on every summand.
    Laplacian,
    /// Square of the (higher-spin) Dirac operator.
    DiracSquared,
    /// (T^+)* T^+, the adjoint-square of the gradient raising the inner rank.
    TPlus,
    /// (T^-)* T^-, lowering the inner rank.
    TMinus,
    /// U* U, the algebraically-twisting gradient.
    U,
    /// d* d on differential forms.
    DStarD,
    /// d d* on differential forms.
    DDStar,
    /// C* C, the conformal-structure operator on forms.
    CStarC,
}

impl OperatorKind {
    /// Canonical short name, used verbatim in CLI arguments and output.
    pub fn name(&self) -> &'static str {
        match self {
            OperatorKind::Laplacian => "lap",
            OperatorKind::DiracSquared => "D2",
            OperatorKind::TPlus => "Tplus",
            OperatorKind::TMinus => "Tminus",
            OperatorKind::U => "U",
            OperatorKind::DStarD => "dstard",
            OperatorKind::DDStar => "ddstar",
            OperatorKind::CStarC => "cc",
        }
    }

    pub fn parse(name: &str) -> Option<OperatorKind> {
        Some(match name {
            "lap" => OperatorKind::Laplacian,
            "D2" => OperatorKind::DiracSquared,
            "Tplus" => OperatorKind::TPlus,
            "Tminus" => OperatorKind::TMinus,
            "U" => OperatorKind::U,
            "dstard" => OperatorKind::DStarD,
            "ddstar" => OperatorKind::DDStar,
            "cc" => OperatorKind::CStarC,
            _ => return None,
        })
    }
}

impl std::fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectraError {
    #[error("operator {op} does not act on this bundle family")]
    WrongFamily { op: &'static str },
    #[error("U*U on symmetric tensors over S^3 is only defined by extrapolation; use the explicitly-labeled accessor")]
    SymUOnS3,
}

/// The operators meaningful on each bundle kind, in canonical order.
pub fn applicable_ops(kind: BundleKind) -> &'static [OperatorKind] {
    use OperatorKind::*;
    match kind {
        BundleKind::Spinor { .. } => &[Laplacian, DiracSquared, TPlus, TMinus, U],
        BundleKind::Sym { .. } => &[Laplacian, TPlus, TMinus, U],
        BundleKind::Form { .. } => &[Laplacian, DStarD, DDStar, CStarC],
        BundleKind::SpinorForm { .. } => &[Laplacian, DiracSquared, TPlus, TMinus, U],
    }
}

/// Laplace eigenvalue on a summand: the Casimir of its so(n+1) label.
pub fn laplacian_ev(member: &Member) -> Rat {
    member.label.casimir()
}

/// Eigenvalue of `op` on `member`, exact.
pub fn operator_ev(member: &Member, op: OperatorKind) -> Result<Rat, SpectraError> {
    let n = member.n as i64;
    let j = member.j as i64;
    let k = member.k as i64;
    match member.family {
        Family::SpinorSphere => {
            let s = member.s.expect("spinor members carry s") as i64;
            Ok(match op {
                OperatorKind::Laplacian => laplacian_ev(member),
                OperatorKind::DiracSquared => spinor_d2(n, j, k, s),
                OperatorKind::TPlus => spinor_tp(n, j, k, s),
                OperatorKind::TMinus => spinor_tm(n, j, k, s),
                OperatorKind::U => spinor_u(n, j, k, s),
                _ => return Err(SpectraError::WrongFamily { op: op.name() }),
            })
        }
        Family::SymSphere => {
            let s = member.s.expect("symmetric members carry s") as i64;
            Ok(match op {
                OperatorKind::Laplacian => laplacian_ev(member),
                OperatorKind::TPlus => sym_tp(n, j, k, s),
                OperatorKind::TMinus => sym_tm(n, j, k, s),
                OperatorKind::U => {
                    if n == 3 && j >= 1 {
                        return Err(SpectraError::SymUOnS3);
                    }
                    sym_u(n, j, k, s)
                }
                _ => return Err(SpectraError::WrongFamily { op: op.name() }),
            })
        }
        Family::FormUp | Family::FormDown => {
            let up = member.family == Family::FormUp;
            Ok(match op {
                OperatorKind::Laplacian => laplacian_ev(member),
                // up summands are co-exact (d*d carries the full Laplacian),
                // down summands are exact (dd* does)
                OperatorKind::DStarD => {
                    if up {
                        laplacian_ev(member)
                    } else {
                        Rat::zero()
                    }
                }
                OperatorKind::DDStar => {
                    if up {
                        Rat::zero()
                    } else {
                        laplacian_ev(member)
                    }
                }
                OperatorKind::CStarC => {
                    if up {
                        form_up_cc(n, j, k)
                    } else {
                        form_down_cc(n, j, k)
                    }
                }
                _ => return Err(SpectraError::WrongFamily { op: op.name() }),
            })
        }
        Family::SpinorFormUp | Family::SpinorFormDown => {
            let up = member.family == Family::SpinorFormUp;
            Ok(match op {
                OperatorKind::Laplacian => laplacian_ev(member),
                OperatorKind::DiracSquared => {
                    if up {
                        ef_up_d2(n, k)
                    } else {
                        ef_down_d2(n, j, k)
                    }
                }
                OperatorKind::TPlus => {
                    if up {
                        ef_up_tp(n, j, k)
                    } else {
                        Rat::zero()
                    }
                }
                OperatorKind::TMinus => {
                    if up {
                        Rat::zero()
                    } else {
                        ef_down_tm(n, j, k)
                    }
                }
                OperatorKind::U => {
                    if up {
                        ef_up_u(n, j, k)
                    } else {
                        ef_down_u(n, j, k)
                    }
                }
                _ => return Err(SpectraError::WrongFamily { op: op.name() }),
            })
        }
    }
}

// ---------------------------------------------------------------------------
// closed forms (exact; arguments pre-cast to i64, products taken as rationals
// so no intermediate overflow is possible)

fn spinor_d2(n: i64, j: i64, k: i64, s: i64) -> Rat {
    let half_n = frac(n, 2);
    frac((n + 2 * s - 2).pow(2), (n + 2 * j - 2).pow(2))
        * (rat(j + k) + half_n.clone())
        * (rat(j + k) + half_n)
}

fn spinor_tp(n: i64, j: i64, k: i64, s: i64) -> Rat {
    let d = rat(j) + frac(n, 2);
    rat(k) * rat(j - s + 1) * rat(2 * j + k + n) * rat(j + s + n - 1) / (d.clone() * d)
}

fn spinor_tm(n: i64, j: i64, k: i64, s: i64) -> Rat {
    if j == 0 {
        return Rat::zero();
    }
    let d = rat(j - 1) + frac(n, 2);
    rat(k + 1) * rat(j - s) * rat(2 * j + k + n - 1) * rat(j + s + n - 2) / (d.clone() * d)
}

fn spinor_u(n: i64, j: i64, k: i64, s: i64) -> Rat {
    if j == 0 || n == 3 {
        return Rat::zero();
    }
    rat(n - 3) * rat(s) * rat(j + k + 1) * rat(n + s - 2) * rat(j + k + n - 1)
        / (rat(n - 2) * rat(j + 1) * rat(j + n - 2))
}

fn sym_tp(n: i64, j: i64, k: i64, s: i64) -> Rat {
    rat(k) * rat(n + k + 2 * j - 1) * rat(j - s + 1) * rat(n + j + s - 2)
        / (rat(j + 1) * rat(n + 2 * j - 2))
}

fn sym_tm(n: i64, j: i64, k: i64, s: i64) -> Rat {
    if j == 0 {
        return Rat::zero();
    }
    rat(j - s) * rat(k + 1) * rat(n + k + 2 * j - 2) * rat(n + j + s - 3)
        / (rat(n + j - 3) * rat(n + 2 * j - 2))
}

fn sym_u(n: i64, j: i64, k: i64, s: i64) -> Rat {
    if j == 0 {
        return Rat::zero();
    }
    debug_assert!(n >= 4, "S^3 value only by extrapolation");
    rat(s) * rat(k + j + 1) * rat(n + s - 3) * rat(n + k + j - 2)
        / (rat(j + 1) * rat(n + j - 3))
}

/// The S^3 continuation of U*U on symmetric tensors: s^2 (k+j+1)^2 / (j(j+1)).
/// The target bundle is absent on S^3, so this is not an operator eigenvalue;
/// it is exactly the value forced on the U-slot by the gradient sum rules.
pub fn sym_u_extrapolated(j: u32, k: u32, s: u32) -> Rat {
    let (j, k, s) = (j as i64, k as i64, s as i64);
    if j == 0 {
        return Rat::zero();
    }
    rat(s) * rat(s) * rat(k + j + 1) * rat(k + j + 1) / (rat(j) * rat(j + 1))
}

fn form_up_cc(n: i64, j: i64, k: i64) -> Rat {
    frac(j, j + 1) * rat(k) * rat(n + k + 1)
}

fn form_down_cc(n: i64, j: i64, k: i64) -> Rat {
    frac(n - j, n - j + 1) * rat(k) * rat(n + k + 1)
}

fn ef_up_d2(n: i64, k: i64) -> Rat {
    let d = frac(n, 2) + rat(k + 1);
    d.clone() * d
}

fn ef_down_d2(n: i64, j: i64, k: i64) -> Rat {
    frac((n - 2 * j).pow(2), (n - 2 * j + 2).pow(2)) * ef_up_d2(n, k)
}

fn ef_up_tp(n: i64, j: i64, k: i64) -> Rat {
    frac(4 * (n - 2 * j - 1), (n - 2 * j).pow(2)) * rat(n - j + k + 1) * rat(k + j + 1)
}

fn ef_down_tm(n: i64, j: i64, k: i64) -> Rat {
    frac(4 * (n - 2 * j + 1), (n - 2 * j + 2).pow(2)) * rat(k + j) * rat(n - j + k + 2)
}

fn ef_up_u(n: i64, j: i64, k: i64) -> Rat {
    frac((n + 1) * j, (n + 2) * (j + 1)) * rat(k) * rat(n + k + 2)
}

fn ef_down_u(n: i64, j: i64, k: i64) -> Rat {
    frac((n + 1) * (n - j + 1), (n + 2) * (n - j + 2)) * rat(k) * rat(n + k + 2)
}

// ---------------------------------------------------------------------------
// normalization conventions

/// Square of the normalization constant relating the cataloged operator to
/// the bare adjoint-square of the underlying gradient: bare = cataloged / N^2.
/// These are the constants under which the gradient sum rules hold.
pub fn normalization_sq(kind: BundleKind, n: u32, op: OperatorKind) -> Result<Rat, SpectraError> {
    let nn = n as i64;
    match kind {
        BundleKind::Spinor { j } => {
            let j = j as i64;
            Ok(match op {
                OperatorKind::DiracSquared => frac((nn + 2 * j) * (nn - 2), nn + 2 * j - 2),
                OperatorKind::TPlus => frac(4 * (j + 1), nn + 2 * j),
                OperatorKind::TMinus => frac(4 * (nn + j - 2), nn + 2 * j - 2),
                OperatorKind::U => rat(1),
                _ => return Err(SpectraError::WrongFamily { op: op.name() }),
            })
        }
        BundleKind::Sym { .. } => Ok(match op {
            OperatorKind::TPlus | OperatorKind::TMinus | OperatorKind::U => rat(1),
            _ => return Err(SpectraError::WrongFamily { op: op.name() }),
        }),
        BundleKind::Form { j } => {
            let j = j as i64;
            Ok(match op {
                OperatorKind::DStarD => rat(j + 1),
                OperatorKind::DDStar => rat(nn - j + 1),
                OperatorKind::CStarC => rat(1),
                _ => return Err(SpectraError::WrongFamily { op: op.name() }),
            })
        }
        BundleKind::SpinorForm { j } => {
            let j = j as i64;
            Ok(match op {
                OperatorKind::DiracSquared => frac((nn + 2) * (nn - 2 * j), nn - 2 * j + 2),
                OperatorKind::TPlus => frac(4 * (j + 1), nn - 2 * j),
                OperatorKind::TMinus => frac(
                    4 * (nn - 2 * j + 1) * (nn - j + 2),
                    (nn - 2 * j + 3) * (nn - 2 * j + 2),
                ),
                OperatorKind::U => rat(1),
                _ => return Err(SpectraError::WrongFamily { op: op.name() }),
            })
        }
    }
}

/// Ratio of the two natural first-order spinor operators on S_j,
/// D'_j / D_j = -(n + 2j - 2) / (n + 2j).
pub fn dprime_ratio(n: u32, j: u32) -> Rat {
    let (n, j) = (n as i64, j as i64);
    -frac(n + 2 * j - 2, n + 2 * j)
}

// ---------------------------------------------------------------------------
// kernel structure

/// Which members an operator annihilates, as a closed-form rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelRule {
    /// The lowest Frobenius level, k = 0 (every inner parameter).
    KZero,
    /// Members with top inner parameter s = j.
    STop,
    /// Members with s = 0.
    SZero,
    /// The whole up family.
    UpAll,
    /// The whole down family.
    DownAll,
    /// Every member (the operator vanishes identically).
    Everything,
    /// No member (the operator is strictly positive).
    Nothing,
}

impl KernelRule {
    pub fn matches(&self, member: &Member) -> bool {
        match self {
            KernelRule::KZero => member.k == 0,
            KernelRule::STop => member.s == Some(member.j),
            KernelRule::SZero => member.s == Some(0),
            KernelRule::UpAll => {
                matches!(member.family, Family::FormUp | Family::SpinorFormUp)
            }
            KernelRule::DownAll => {
                matches!(member.family, Family::FormDown | Family::SpinorFormDown)
            }
            KernelRule::Everything => true,
            KernelRule::Nothing => false,
        }
    }
}

/// The predicted kernel of `op` on the given bundle.  The acceptance checks
/// verify these against the actual eigenvalues member by member.
pub fn kernel_rule(kind: BundleKind, n: u32, op: OperatorKind) -> Result<KernelRule, SpectraError> {
    use KernelRule::*;
    use OperatorKind::*;
    match kind {
        BundleKind::Spinor { j } => Ok(match op {
            Laplacian | DiracSquared => Nothing,
            TPlus => KZero,
            TMinus => {
                if j == 0 {
                    Everything
                } else {
                    STop
                }
            }
            U => {
                if j == 0 || n == 3 {
                    Everything
                } else {
                    SZero
                }
            }
            _ => return Err(SpectraError::WrongFamily { op: op.name() }),
        }),
        BundleKind::Sym { j } => Ok(match op {
            // constants are harmonic: the trivial member sits at j = 0, k = 0
            Laplacian => {
                if j == 0 {
                    KZero
                } else {
                    Nothing
                }
            }
            TPlus => KZero,
            TMinus => {
                if j == 0 {
                    Everything
                } else {
                    STop
                }
            }
            U => {
                if j == 0 {
                    Everything
                } else {
                    SZero
                }
            }
            _ => return Err(SpectraError::WrongFamily { op: op.name() }),
        }),
        BundleKind::Form { j } => Ok(match op {
            Laplacian => {
                if j == 0 {
                    // the down family at degree 0 is exactly the constants
                    DownAll
                } else {
                    Nothing
                }
            }
            DStarD => DownAll,
            DDStar => {
                if j == 0 {
                    Everything
                } else {
                    UpAll
                }
            }
            CStarC => {
                if j == 0 {
                    Everything
                } else {
                    KZero
                }
            }
            _ => return Err(SpectraError::WrongFamily { op: op.name() }),
        }),
        BundleKind::SpinorForm { j } => Ok(match op {
            Laplacian => Nothing,
            DiracSquared => {
                if n == 2 * j {
                    Everything // the Dirac operator is absent at the middle degree
                } else {
                    Nothing
                }
            }
            TPlus => {
                if n <= 2 * j + 1 {
                    Everything
                } else {
                    DownAll
                }
            }
            TMinus => {
                if j == 0 {
                    Everything
                } else {
                    UpAll
                }
            }
            U => {
                if j == 0 {
                    Everything
                } else {
                    KZero
                }
            }
            _ => return Err(SpectraError::WrongFamily { op: op.name() }),
        }),
    }
}
