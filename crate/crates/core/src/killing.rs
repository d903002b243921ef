//! Killing tensors and Killing forms on S^n, at the representation level.
//!
//! The primitive Killing j-tensors form P^j(S^n) = sum over i of the
//! so(n+1) modules with highest weight (j, j-2i, 0, ...), i = 0..floor(j/2);
//! the full space of Killing j-tensors is the metric-graded sum
//! K^j = sum_i g^i . P^(j-2i), so its dimension is the sum of the primitive
//! dimensions down the ladder j, j-2, j-4, ...  Killing j-forms are the
//! lowest (k = 0) co-exact summand of Omega^j and co-Killing forms the
//! lowest exact summand; both are annihilated by the conformal operator
//! C*C and by the half of the Hodge Laplacian that defines them.

use crate::branching::{contains, Bundle, BundleError, BundleKind, Family, Member};
use crate::rat::{rat, Rat};
use crate::rep::{Algebra, Label};
use num_bigint::BigInt;
use std::collections::BTreeMap;

/// One highest-weight constituent of the primitive Killing space P^j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitivePiece {
    /// Ladder index i; the inner weight entry is s = j - 2i.
    pub i: u32,
    pub label: Label,
    pub dim: BigInt,
}

/// The graded decomposition of the Killing j-tensors on S^n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KillingDecomposition {
    pub n: u32,
    pub degree: u32,
    /// Constituents of the top primitive space P^degree.
    pub primitive_pieces: Vec<PrimitivePiece>,
    /// i -> dim P^(degree - 2i), the metric-graded layers of K^degree.
    pub graded_pieces: BTreeMap<u32, BigInt>,
    pub total_dim: BigInt,
}

/// The constituents of the primitive Killing space P^j(S^n).
pub fn primitive_killing(n: u32, j: u32) -> Vec<PrimitivePiece> {
    let alg = Algebra::so(n + 1).expect("n >= 3");
    let m = alg.rank();
    (0..=j / 2)
        .map(|i| {
            let s = j - 2 * i;
            let mut w = vec![rat(0); m];
            w[0] = rat(j as i64);
            w[1] = rat(s as i64);
            let label = Label::pair_if_chiral(alg.irrep(&w).expect("dominant ladder weight"));
            let dim = label.dim().expect("validated weight");
            PrimitivePiece { i, label, dim }
        })
        .collect()
}

/// Dimension of P^j(S^n).
pub fn primitive_dim(n: u32, j: u32) -> BigInt {
    primitive_killing(n, j).iter().map(|p| p.dim.clone()).sum()
}

/// The full graded Killing space K^j(S^n) with its dimension count.
pub fn killing_space(n: u32, j: u32) -> KillingDecomposition {
    let mut graded = BTreeMap::new();
    let mut total = BigInt::from(0);
    let mut i = 0u32;
    loop {
        let Some(deg) = j.checked_sub(2 * i) else { break };
        let d = primitive_dim(n, deg);
        total += d.clone();
        graded.insert(i, d);
        if deg < 2 {
            break;
        }
        i += 1;
    }
    KillingDecomposition {
        n,
        degree: j,
        primitive_pieces: primitive_killing(n, j),
        graded_pieces: graded,
        total_dim: total,
    }
}

/// Killing j-forms and co-Killing j-forms: the k = 0 members of the co-exact
/// and exact form families, with their labels and dimensions.
pub fn killing_forms(n: u32, j: u32) -> Result<(Member, Member), BundleError> {
    let bundle = Bundle::new(n, BundleKind::Form { j })?;
    let members = bundle.decompose(0);
    let up = members
        .iter()
        .find(|m| m.family == Family::FormUp && m.k == 0)
        .expect("up family has a k = 0 member")
        .clone();
    let down = members
        .iter()
        .find(|m| m.family == Family::FormDown && m.k == 0)
        .expect("down family has a k = 0 member")
        .clone();
    Ok((up, down))
}

/// Does Gamma(Sym0^degree) contain the summand with parent weight
/// (k + degree, s, 0, ...)?  Decided by dominance plus the branching rule;
/// used to trace the component chains of Killing tensors.
pub fn sym_member_exists(n: u32, degree: u32, k: u32, s: u32) -> bool {
    let parent = Algebra::so(n + 1).expect("n >= 3");
    let m = parent.rank();
    let mut w = vec![rat(0); m];
    w[0] = rat((k + degree) as i64);
    w[1] = rat(s as i64);
    let Ok(rho) = parent.irrep(&w) else {
        return false;
    };
    let fiber = Bundle::new(n, BundleKind::Sym { j: degree })
        .expect("n >= 3")
        .fiber();
    fiber
        .iter()
        .any(|c| contains(&rho, c).expect("ranks match"))
}

/// Independent dimension oracle for K^2: Killing 2-tensors on S^n are
/// generated by symmetric products of Killing vectors, so
/// dim K^2 = dim Sym^2(so(n+1)) - dim Lambda^4 R^(n+1)
/// (the plethysm Sym^2(Lambda^2) = Lambda^4 + Schur(2,2) removes Lambda^4).
pub fn killing_two_plethysm_dim(n: u32) -> BigInt {
    let d = binom(n as u64 + 1, 2);
    binom_big(d + BigInt::from(1), 2) - binom(n as u64 + 1, 4)
}

fn binom(n: u64, k: u64) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        if n < i {
            return BigInt::from(0);
        }
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn binom_big(n: BigInt, k: u64) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n.clone() - BigInt::from(i)) / BigInt::from(i + 1);
    }
    acc
}

/// Eigenvalue sanity for Killing forms: the defining operators vanish there.
pub fn killing_form_operator_check(n: u32, j: u32) -> Result<bool, BundleError> {
    use crate::spectra::{operator_ev, OperatorKind};
    let (up, down) = killing_forms(n, j)?;
    let cc_up = operator_ev(&up, OperatorKind::CStarC).expect("form op");
    let ddstar_up = operator_ev(&up, OperatorKind::DDStar).expect("form op");
    let cc_down = operator_ev(&down, OperatorKind::CStarC).expect("form op");
    let dstard_down = operator_ev(&down, OperatorKind::DStarD).expect("form op");
    Ok(cc_up == Rat::from(BigInt::from(0))
        && ddstar_up == Rat::from(BigInt::from(0))
        && cc_down == Rat::from(BigInt::from(0))
        && dstard_down == Rat::from(BigInt::from(0)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn killing_vectors_are_the_isometry_algebra() {
        for n in 3..11u32 {
            let d = killing_space(n, 1);
            assert_eq!(
                d.total_dim,
                BigInt::from((n as u64 + 1) * n as u64 / 2),
                "n={n}"
            );
            assert_eq!(d.primitive_pieces.len(), 1);
        }
        // S^4: dim so(5) = 10
        assert_eq!(killing_space(4, 1).total_dim, BigInt::from(10));
    }

    #[test]
    fn killing_two_tensors_match_plethysm_oracle() {
        for n in 3..11u32 {
            assert_eq!(
                killing_space(n, 2).total_dim,
                killing_two_plethysm_dim(n),
                "n={n}"
            );
        }
        assert_eq!(killing_space(4, 2).total_dim, BigInt::from(50)); // 35+14+1
        assert_eq!(killing_space(3, 2).total_dim, BigInt::from(20)); // 10+9+1
    }

    #[test]
    fn primitive_pieces_on_s4_and_s3() {
        let p = primitive_killing(4, 2);
        let dims: Vec<BigInt> = p.iter().map(|x| x.dim.clone()).collect();
        assert_eq!(dims, vec![BigInt::from(35), BigInt::from(14)]);
        // S^3: so(4) labels split; (2, +-2) counts as one paired label of dim 10
        let p = primitive_killing(3, 2);
        let dims: Vec<BigInt> = p.iter().map(|x| x.dim.clone()).collect();
        assert_eq!(dims, vec![BigInt::from(10), BigInt::from(9)]);
        assert!(p[0].label.is_paired());
        assert!(!p[1].label.is_paired());
        // constants at degree 0
        let p = primitive_killing(5, 0);
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].dim, BigInt::from(1));
    }

    #[test]
    fn graded_layers_sum() {
        let d = killing_space(4, 2);
        assert_eq!(d.graded_pieces.len(), 2);
        assert_eq!(d.graded_pieces[&0], BigInt::from(49)); // P^2 = 35 + 14
        assert_eq!(d.graded_pieces[&1], BigInt::from(1)); // P^0
        assert_eq!(d.total_dim, BigInt::from(50));
    }

    #[test]
    fn killing_forms_on_s4() {
        // degree 2 (middle): Killing forms V_2(0) = (1,1), dim 10
        let (up, down) = killing_forms(4, 2).unwrap();
        assert_eq!(up.total_dim(), BigInt::from(10));
        assert_eq!(down.total_dim(), BigInt::from(10));
        // degree 0: first spherical harmonics vs constants
        let (up, down) = killing_forms(4, 0).unwrap();
        assert_eq!(up.total_dim(), BigInt::from(5));
        assert_eq!(down.total_dim(), BigInt::from(1));
        // out-of-range degree
        assert!(killing_forms(4, 3).is_err());
    }

    #[test]
    fn killing_form_operators_vanish() {
        for n in 3..9u32 {
            for j in 0..=(n / 2) {
                assert_eq!(killing_form_operator_check(n, j), Ok(true), "n={n} j={j}");
            }
        }
    }

    #[test]
    fn component_chains_exist_and_excluded_parity_is_absent() {
        for n in 3..9u32 {
            for j in 2..6u32 {
                for i in 0..=(j / 2) {
                    let s = j - 2 * i;
                    // the chain member K_t lives in V_(j-2t)(2t, s) for t = 0..=i
                    for t in 0..=i {
                        assert!(
                            sym_member_exists(n, j - 2 * t, 2 * t, s),
                            "chain n={n} j={j} i={i} t={t}"
                        );
                    }
                    // opposite parity of the inner index never occurs
                    if i >= 1 {
                        assert!(
                            !sym_member_exists(n, j - 2 * i, 2 * i, j - 2 * i + 1),
                            "excluded n={n} j={j} i={i}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn primitive_weights_are_the_expected_ladder() {
        let p = primitive_killing(6, 5);
        assert_eq!(p.len(), 3);
        for (i, piece) in p.iter().enumerate() {
            let w = piece.label.irrep().weight();
            assert_eq!(w[0], rat(5));
            assert_eq!(w[1], rat(5 - 2 * i as i64));
            assert!(w[2..].iter().all(|x| *x == rat(0)));
        }
    }
}
