//! Factorization identities: products of second-order factors that vanish
//! identically on sections, evaluated exactly on each irreducible summand.
//!
//! On the higher-spin spinor bundle S_j the square of the Dirac operator
//! satisfies  prod_{s'=0..j} B(s'; j) = 0  with
//!   B(s'; j) = D^2 - ((n+2s'-2)^2/(n+2j-2)^2) (Delta - (s'(n+s'-2) - n(n-1)/8) c),
//! and on the sphere each summand V_j(k,s)' kills exactly the s' = s factor.
//! Symmetric tensors satisfy the analogous product for (T^+)*T^+ with
//!   a(s'; j) = (j-s'+1)(n+j+s'-2) / ((j+1)(n+2j-2)),
//!   b(s'; j) = j(n+j-1) + s'(n+s'-3),
//! and spinor-valued forms a two-factor identity whose first factor is
//! killed by the down family and second by the up family.  A further
//! factorization controls (T^+)*T^+ on spinors through
//!   a'(s; j) = 4(j-s+1)(n+j+s-1) / (n+2j)^2,
//!   b'(s; j) = j(n+j) + s(n+s-2) + n(n+1)/8,
//! whose own-s factor vanishes on every member, pinning the Laplace
//! eigenvalue Delta = b'(s; j) on the k = 0 members.
//!
//! Everything here is at curvature normalization c = 1 (the unit sphere).

use crate::branching::{Bundle, BundleKind, Family, Member};
use crate::rat::{frac, rat, Rat};
use crate::spectra::{laplacian_ev, operator_ev, OperatorKind};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("factorization identities do not apply to this family")]
    NotApplicable,
    #[error("factor index {s_prime} out of range 0..={j}")]
    IndexOutOfRange { s_prime: u32, j: u32 },
    #[error("factorization violated on a member: {detail}")]
    Violated { detail: String },
}

/// All factor values on one member, with the product and the index of the
/// (unique) vanishing factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorReport {
    pub member: Member,
    /// Factor eigenvalues indexed by s' = 0..=j (spinor, symmetric), or the
    /// two factors [first, second] of the spinor-form identity.
    pub factor_evs: Vec<Rat>,
    pub vanishing_index: usize,
    pub product: Rat,
}

/// B(s'; j) evaluated on a higher-spin spinor member.
pub fn b_factor_ev(s_prime: u32, member: &Member) -> Result<Rat, FactorError> {
    if member.family != Family::SpinorSphere {
        return Err(FactorError::NotApplicable);
    }
    if s_prime > member.j {
        return Err(FactorError::IndexOutOfRange {
            s_prime,
            j: member.j,
        });
    }
    let (n, j, sp) = (member.n as i64, member.j as i64, s_prime as i64);
    let lap = laplacian_ev(member);
    let d2 = operator_ev(member, OperatorKind::DiracSquared).expect("spinor op");
    Ok(d2
        - frac((n + 2 * sp - 2).pow(2), (n + 2 * j - 2).pow(2))
            * (lap - (rat(sp * (n + sp - 2)) - frac(n * (n - 1), 8))))
}

/// Symmetric-tensor factor (T^+)*T^+ - a(s'; j)(Delta - b(s'; j)) on a member.
pub fn sym_factor_ev(s_prime: u32, member: &Member) -> Result<Rat, FactorError> {
    if member.family != Family::SymSphere {
        return Err(FactorError::NotApplicable);
    }
    if s_prime > member.j {
        return Err(FactorError::IndexOutOfRange {
            s_prime,
            j: member.j,
        });
    }
    let (a, b) = sym_ab(member.n, member.j, s_prime);
    let lap = laplacian_ev(member);
    let tp = operator_ev(member, OperatorKind::TPlus).expect("sym op");
    Ok(tp - a * (lap - b))
}

/// a(s'; j) and b(s'; j) of the symmetric-tensor factorization.
pub fn sym_ab(n: u32, j: u32, s_prime: u32) -> (Rat, Rat) {
    let (n, j, sp) = (n as i64, j as i64, s_prime as i64);
    (
        frac((j - sp + 1) * (n + j + sp - 2), (j + 1) * (n + 2 * j - 2)),
        rat(j * (n + j - 1) + sp * (n + sp - 3)),
    )
}

/// a'(s; j) and b'(s; j) of the twistor-square factorization on spinors.
pub fn tplus_ab(n: u32, j: u32, s: u32) -> (Rat, Rat) {
    let (n, j, s) = (n as i64, j as i64, s as i64);
    (
        frac(4 * (j - s + 1) * (n + j + s - 1), (n + 2 * j).pow(2)),
        rat(j * (n + j) + s * (n + s - 2)) + frac(n * (n + 1), 8),
    )
}

/// The two spinor-form factors (first, second) evaluated on a member:
///   first  = D^2 - ((n-2j)^2/(n-2j+2)^2)(Delta - ((j-1)(n-j+1) - n(n-1)/8)),
///   second = D^2 - (Delta - (j(n-j) - n(n-1)/8)).
pub fn spinor_form_factors(member: &Member) -> Result<(Rat, Rat), FactorError> {
    if !matches!(
        member.family,
        Family::SpinorFormUp | Family::SpinorFormDown
    ) {
        return Err(FactorError::NotApplicable);
    }
    let (n, j) = (member.n as i64, member.j as i64);
    let lap = laplacian_ev(member);
    let d2 = operator_ev(member, OperatorKind::DiracSquared).expect("spinor-form op");
    let first = d2.clone()
        - frac((n - 2 * j).pow(2), (n - 2 * j + 2).pow(2))
            * (lap.clone() - (rat((j - 1) * (n - j + 1)) - frac(n * (n - 1), 8)));
    let second = d2 - (lap - (rat(j * (n - j)) - frac(n * (n - 1), 8)));
    Ok((first, second))
}

/// Evaluate the family's factorization on every member of the truncated
/// decomposition and check the exactly-one-vanishing-factor law.
pub fn verify_factorization(bundle: &Bundle, k_max: u32) -> Result<Vec<FactorReport>, FactorError> {
    let mut out = Vec::new();
    match bundle.kind() {
        BundleKind::Spinor { j } => {
            for member in bundle.decompose(k_max) {
                let evs: Vec<Rat> = (0..=j)
                    .map(|sp| b_factor_ev(sp, &member).expect("in range"))
                    .collect();
                out.push(one_vanishing_report(member, evs)?);
            }
        }
        BundleKind::Sym { j } => {
            for member in bundle.decompose(k_max) {
                let evs: Vec<Rat> = (0..=j)
                    .map(|sp| sym_factor_ev(sp, &member).expect("in range"))
                    .collect();
                out.push(one_vanishing_report(member, evs)?);
            }
        }
        BundleKind::SpinorForm { j } => {
            let degenerate = bundle.n() == 2 * j; // no Dirac operator here
            for member in bundle.decompose(k_max) {
                let (first, second) = spinor_form_factors(&member)?;
                let up = member.family == Family::SpinorFormUp;
                let want = usize::from(up); // up kills the second factor, down the first
                if degenerate {
                    // D^2 = 0 and the first factor's coefficient (n-2j)^2
                    // vanishes, so the first factor is trivially zero; the
                    // identity degenerates to that statement
                    let d2 = operator_ev(&member, OperatorKind::DiracSquared).expect("op");
                    if !d2.is_zero() || !first.is_zero() {
                        return Err(FactorError::Violated {
                            detail: format!(
                                "degenerate middle degree: D^2 = {d2}, first factor = {first} on {member:?}"
                            ),
                        });
                    }
                } else if j == 0 && !up {
                    // the single constant summand at degree 0: its own first
                    // factor vanishes, and the second vanishes too because
                    // this member meets the Lichnerowicz equality
                    // D^2 = Delta + n(n-1)/8 exactly
                    if !first.is_zero() || !second.is_zero() {
                        return Err(FactorError::Violated {
                            detail: format!(
                                "constant summand: factors ({first}, {second}) on {member:?}; expected both to vanish"
                            ),
                        });
                    }
                } else {
                    let zero_at = [first.is_zero(), second.is_zero()];
                    if zero_at != [want == 0, want == 1] {
                        return Err(FactorError::Violated {
                            detail: format!(
                                "factors ({first}, {second}) on {member:?}; expected only index {want} to vanish"
                            ),
                        });
                    }
                }
                out.push(FactorReport {
                    member,
                    product: first.clone() * second.clone(),
                    factor_evs: vec![first, second],
                    vanishing_index: want,
                });
            }
        }
        BundleKind::Form { .. } => return Err(FactorError::NotApplicable),
    }
    Ok(out)
}

fn one_vanishing_report(member: Member, evs: Vec<Rat>) -> Result<FactorReport, FactorError> {
    let zeros: Vec<usize> = evs
        .iter()
        .enumerate()
        .filter(|(_, v)| v.is_zero())
        .map(|(i, _)| i)
        .collect();
    let s = member.s.expect("spinor/sym member") as usize;
    if zeros != [s] {
        return Err(FactorError::Violated {
            detail: format!("vanishing factors at {zeros:?}, expected exactly [{s}] on {member:?}"),
        });
    }
    let product = evs.iter().fold(rat(1), |acc, v| acc * v.clone());
    Ok(FactorReport {
        member,
        factor_evs: evs,
        vanishing_index: s,
        product,
    })
}

/// Report of the twistor-square factorization check on spinors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TplusFactorReport {
    pub members_checked: usize,
    /// k = 0 members on which Delta = b'(s; j) was confirmed.
    pub kernel_members: usize,
}

/// Verify prod_{s'} ((T^+)*T^+ - a'(s';j)(Delta - b'(s';j))) = 0 on every
/// spinor member (via the own-s factor), and Delta = b'(s; j) at k = 0.
pub fn tplus_factorization_check(
    n: u32,
    j: u32,
    k_max: u32,
) -> Result<TplusFactorReport, FactorError> {
    let bundle =
        Bundle::new(n, BundleKind::Spinor { j }).map_err(|_| FactorError::NotApplicable)?;
    let mut kernel_members = 0;
    let members = bundle.decompose(k_max);
    for member in &members {
        let s = member.s.expect("spinor member");
        let lap = laplacian_ev(member);
        let tp = operator_ev(member, OperatorKind::TPlus).expect("spinor op");
        let (a, b) = tplus_ab(n, j, s);
        let own = tp.clone() - a * (lap.clone() - b.clone());
        if !own.is_zero() {
            return Err(FactorError::Violated {
                detail: format!("own-s twistor factor = {own} on {member:?}"),
            });
        }
        if member.k == 0 {
            if !tp.is_zero() || lap != b {
                return Err(FactorError::Violated {
                    detail: format!(
                        "k=0 member: (T+)*T+ = {tp}, Delta = {lap}, b' = {b} on {member:?}"
                    ),
                });
            }
            kernel_members += 1;
        }
    }
    Ok(TplusFactorReport {
        members_checked: members.len(),
        kernel_members,
    })
}

/// The s-graded slices W_s of a spinor or symmetric decomposition, after
/// verifying the filtration law: a member is annihilated by
/// prod_{s'=f..j} (factor s') exactly when its s lies in f..=j.
pub fn grading_decomposition(
    bundle: &Bundle,
    k_max: u32,
) -> Result<std::collections::BTreeMap<u32, Vec<Member>>, FactorError> {
    let j = match bundle.kind() {
        BundleKind::Spinor { j } | BundleKind::Sym { j } => j,
        _ => return Err(FactorError::NotApplicable),
    };
    let factor = |sp: u32, m: &Member| -> Rat {
        match bundle.kind() {
            BundleKind::Spinor { .. } => b_factor_ev(sp, m).expect("in range"),
            BundleKind::Sym { .. } => sym_factor_ev(sp, m).expect("in range"),
            _ => unreachable!(),
        }
    };
    let mut slices: std::collections::BTreeMap<u32, Vec<Member>> = Default::default();
    for member in bundle.decompose(k_max) {
        let s = member.s.expect("graded member");
        for f in 0..=j {
            let tail_product = (f..=j).fold(rat(1), |acc, sp| acc * factor(sp, &member));
            let annihilated = tail_product.is_zero();
            if annihilated != (s >= f) {
                return Err(FactorError::Violated {
                    detail: format!(
                        "filtration level {f}: tail product {}annihilates {member:?}",
                        if annihilated { "" } else { "does not " }
                    ),
                });
            }
        }
        slices.entry(s).or_default().push(member);
    }
    Ok(slices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn bundle(n: u32, kind: BundleKind) -> Bundle {
        Bundle::new(n, kind).unwrap()
    }

    #[test]
    fn dirac_factor_fixture() {
        // n=5, j=1, member V_1(0,1)': Delta = 55/4, D^2 = 49/4,
        // B(0) = 49/4 - (9/25)(55/4 + 5/2) = 32/5
        let b = bundle(5, BundleKind::Spinor { j: 1 });
        let m = b
            .decompose(0)
            .into_iter()
            .find(|m| m.s == Some(1))
            .unwrap();
        assert_eq!(laplacian_ev(&m), frac(55, 4));
        assert_eq!(
            operator_ev(&m, OperatorKind::DiracSquared).unwrap(),
            frac(49, 4)
        );
        assert_eq!(b_factor_ev(0, &m), Ok(frac(32, 5)));
        assert_eq!(b_factor_ev(1, &m), Ok(rat(0))); // own-s factor
        assert!(matches!(
            b_factor_ev(2, &m),
            Err(FactorError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn lichnerowicz_is_the_degree_zero_factor() {
        // j=0: the single factor B(0) vanishes on every member
        for n in 3..8u32 {
            let b = bundle(n, BundleKind::Spinor { j: 0 });
            for m in b.decompose(6) {
                assert_eq!(b_factor_ev(0, &m), Ok(rat(0)));
            }
        }
    }

    #[test]
    fn spinor_factorization_grid() {
        for n in 3..9u32 {
            for j in 0..4u32 {
                let b = bundle(n, BundleKind::Spinor { j });
                let reports = verify_factorization(&b, 5).unwrap();
                for r in &reports {
                    assert!(r.product.is_zero());
                    assert_eq!(r.vanishing_index as u32, r.member.s.unwrap());
                }
            }
        }
    }

    #[test]
    fn sym_factorization_grid_and_eigen_link() {
        for n in 3..9u32 {
            for j in 0..4u32 {
                let b = bundle(n, BundleKind::Sym { j });
                for r in verify_factorization(&b, 5).unwrap() {
                    assert!(r.product.is_zero());
                    // the own-s factor encodes (T+)*T+ = a(s;j) k(n+k+2j-1)
                    let m = &r.member;
                    let (a, _) = sym_ab(n, j, m.s.unwrap());
                    let (nn, jj, kk) = (n as i64, j as i64, m.k as i64);
                    assert_eq!(
                        operator_ev(m, OperatorKind::TPlus).unwrap(),
                        a * rat(kk * (nn + kk + 2 * jj - 1))
                    );
                }
            }
        }
    }

    #[test]
    fn spinor_form_two_factor_grid() {
        for n in 3..9u32 {
            for j in 1..=(n / 2) {
                let b = bundle(n, BundleKind::SpinorForm { j });
                for r in verify_factorization(&b, 5).unwrap() {
                    assert_eq!(
                        r.vanishing_index,
                        usize::from(r.member.family == Family::SpinorFormUp)
                    );
                }
            }
        }
    }

    #[test]
    fn spinor_form_degree_zero() {
        // up members kill the second factor; the lone constant down member
        // meets the Lichnerowicz equality, so both of its factors vanish
        for n in 3..9u32 {
            let b = bundle(n, BundleKind::SpinorForm { j: 0 });
            for r in verify_factorization(&b, 4).unwrap() {
                if r.member.family == Family::SpinorFormUp {
                    assert_eq!(r.vanishing_index, 1);
                    assert!(!r.factor_evs[0].is_zero());
                } else {
                    assert!(r.factor_evs[0].is_zero() && r.factor_evs[1].is_zero());
                }
            }
        }
    }

    #[test]
    fn s6_one_forms_fixture() {
        // n=6, j=1: up V_2(k)' kills the second factor, down V_1(k)' the first
        let b = bundle(6, BundleKind::SpinorForm { j: 1 });
        for m in b.decompose(3) {
            let (f1, f2) = spinor_form_factors(&m).unwrap();
            if m.family == Family::SpinorFormUp {
                assert!(f2.is_zero() && !f1.is_zero());
            } else {
                assert!(f1.is_zero() && !f2.is_zero());
            }
        }
    }

    #[test]
    fn twistor_square_factorization() {
        for n in 3..9u32 {
            for j in 0..4u32 {
                let rep = tplus_factorization_check(n, j, 6).unwrap();
                assert_eq!(rep.members_checked, ((j + 1) * 7) as usize);
                assert_eq!(rep.kernel_members, (j + 1) as usize);
            }
        }
        // the S^5 Remark value: V_1(0,1)' has Delta = b'(1;1) = 6 + 4 + 15/4 = 55/4
        let (_, b) = tplus_ab(5, 1, 1);
        assert_eq!(b, frac(55, 4));
    }

    #[test]
    fn grading_slices_partition_the_decomposition() {
        for (n, kind) in [
            (4, BundleKind::Spinor { j: 2 }),
            (5, BundleKind::Sym { j: 2 }),
            (3, BundleKind::Sym { j: 3 }),
        ] {
            let b = bundle(n, kind);
            let k_max = 4;
            let slices = grading_decomposition(&b, k_max).unwrap();
            let j = b.j();
            assert_eq!(slices.len(), (j + 1) as usize);
            let total: usize = slices.values().map(|v| v.len()).sum();
            assert_eq!(total, b.decompose(k_max).len());
            for (s, members) in &slices {
                assert!(members.iter().all(|m| m.s == Some(*s)));
                assert_eq!(members.len(), (k_max + 1) as usize);
            }
        }
    }

    #[test]
    fn wrong_family_is_rejected() {
        let b = bundle(4, BundleKind::Form { j: 1 });
        assert_eq!(
            verify_factorization(&b, 2).unwrap_err(),
            FactorError::NotApplicable
        );
        let m = &bundle(4, BundleKind::Sym { j: 1 }).decompose(0)[0];
        assert_eq!(b_factor_ev(0, m), Err(FactorError::NotApplicable));
        assert!(spinor_form_factors(m).is_err());
    }

    #[test]
    fn product_collects_all_factors() {
        let b = bundle(6, BundleKind::Spinor { j: 2 });
        for r in verify_factorization(&b, 2).unwrap() {
            assert_eq!(r.factor_evs.len(), 3);
            let manual = r
                .factor_evs
                .iter()
                .fold(Rat::one(), |acc, v| acc * v.clone());
            assert_eq!(manual, r.product);
        }
    }
}
