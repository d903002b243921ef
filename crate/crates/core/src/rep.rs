//! Finite-dimensional representation data for the orthogonal algebras so(n),
//! n >= 3, in the usual orthonormal-coordinate weight conventions.
//!
//! A dominant weight is a vector (a_1, ..., a_m), m = floor(n/2), with
//!   odd n  (series B):  a_1 >= a_2 >= ... >= a_m >= 0,
//!   even n (series D):  a_1 >= ... >= a_{m-1} >= |a_m|  (a_m may be negative),
//! all entries integers or all half-odd-integers.  Dimensions come from the
//! Weyl product over the positive roots e_i +- e_j (and e_i for odd n) with
//! the Euclidean pairing; no closed-form shortcuts are used, low ranks
//! included, so so(3) and so(4) go through the same product.
//!
//! `casimir` returns <w, w + 2*delta> in the normalization that gives the
//! standard representation of so(n) the value n - 1.

use crate::rat::{half, is_half_odd, is_int, rat, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Series {
    B,
    D,
}

/// The algebra so(n) together with the few facts derived from n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Algebra {
    n: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("so({n}) is not supported (need n >= 3)")]
    UnsupportedAlgebra { n: u32 },
    #[error("so({n}) weights have {expected} entries, got {got}")]
    WrongLength { n: u32, expected: usize, got: usize },
    #[error("entries are not dominant at position {position}")]
    NotDominant { position: usize },
    #[error("entries mix integers and half-odd-integers")]
    MixedParity,
    #[error("entry at position {position} is neither an integer nor a half-odd-integer")]
    BadDenominator { position: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("Weyl product produced a non-integer ({0}); this is a bug")]
    InternalNonInteger(String),
}

impl Algebra {
    pub fn so(n: u32) -> Result<Algebra, WeightError> {
        if n < 3 {
            return Err(WeightError::UnsupportedAlgebra { n });
        }
        Ok(Algebra { n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn rank(&self) -> usize {
        (self.n / 2) as usize
    }

    pub fn series(&self) -> Series {
        if self.n % 2 == 1 {
            Series::B
        } else {
            Series::D
        }
    }

    /// Half-sum of the positive roots: (m-1/2, ..., 1/2) for series B,
    /// (m-1, ..., 1, 0) for series D.
    pub fn delta(&self) -> Vec<Rat> {
        let m = self.rank() as i64;
        match self.series() {
            Series::B => (0..m).map(|i| half(2 * (m - i) - 1)).collect(),
            Series::D => (0..m).map(|i| rat(m - 1 - i)).collect(),
        }
    }

    /// Casimir value of the standard (vector) representation, n - 1.
    pub fn standard_casimir(&self) -> Rat {
        rat(self.n as i64 - 1)
    }

    pub fn irrep(&self, entries: &[Rat]) -> Result<Irrep, WeightError> {
        validate_weight(*self, entries)
    }
}

/// A validated dominant weight of so(n), i.e. an irreducible representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Irrep {
    alg: Algebra,
    lam: Vec<Rat>,
}

pub fn validate_weight(alg: Algebra, entries: &[Rat]) -> Result<Irrep, WeightError> {
    let m = alg.rank();
    if entries.len() != m {
        return Err(WeightError::WrongLength {
            n: alg.n,
            expected: m,
            got: entries.len(),
        });
    }
    let mut saw_int = false;
    let mut saw_half = false;
    for (i, e) in entries.iter().enumerate() {
        if is_int(e) {
            saw_int = true;
        } else if is_half_odd(e) {
            saw_half = true;
        } else {
            return Err(WeightError::BadDenominator { position: i });
        }
    }
    if saw_int && saw_half {
        return Err(WeightError::MixedParity);
    }
    for i in 0..m.saturating_sub(1) {
        if entries[i] < entries[i + 1] {
            return Err(WeightError::NotDominant { position: i + 1 });
        }
    }
    match alg.series() {
        Series::B => {
            if entries[m - 1].is_negative() {
                return Err(WeightError::NotDominant { position: m - 1 });
            }
        }
        Series::D => {
            if m >= 2 && entries[m - 2] < entries[m - 1].abs() {
                return Err(WeightError::NotDominant { position: m - 1 });
            }
        }
    }
    Ok(Irrep {
        alg,
        lam: entries.to_vec(),
    })
}

pub fn delta_vector(alg: Algebra) -> Vec<Rat> {
    alg.delta()
}

impl Irrep {
    pub fn algebra(&self) -> Algebra {
        self.alg
    }

    pub fn weight(&self) -> &[Rat] {
        &self.lam
    }

    /// All entries integral (as opposed to half-odd)?
    pub fn is_integral(&self) -> bool {
        is_int(&self.lam[0])
    }

    /// The weight with the last entry negated (series D chirality mirror).
    /// For series B, or when the last entry is zero, this is `self`.
    pub fn mirror(&self) -> Irrep {
        let mut lam = self.lam.clone();
        if self.alg.series() == Series::D {
            let last = lam.last_mut().expect("rank >= 1");
            *last = -last.clone();
        }
        Irrep {
            alg: self.alg,
            lam,
        }
    }

    pub fn dim(&self) -> Result<BigInt, RepError> {
        weyl_dim(self)
    }

    pub fn casimir(&self) -> Rat {
        casimir(self)
    }
}

/// Dimension by the Weyl product over positive roots, exact arithmetic.
pub fn weyl_dim(rep: &Irrep) -> Result<BigInt, RepError> {
    let m = rep.alg.rank();
    let delta = rep.alg.delta();
    let ld: Vec<Rat> = rep
        .lam
        .iter()
        .zip(&delta)
        .map(|(a, d)| a.clone() + d.clone())
        .collect();
    let mut num = Rat::one();
    let mut den = Rat::one();
    for i in 0..m {
        for j in (i + 1)..m {
            num *= (ld[i].clone() - ld[j].clone()) * (ld[i].clone() + ld[j].clone());
            den *= (delta[i].clone() - delta[j].clone()) * (delta[i].clone() + delta[j].clone());
        }
        if rep.alg.series() == Series::B {
            num *= ld[i].clone();
            den *= delta[i].clone();
        }
    }
    let q = num / den;
    if !q.denom().is_one() || !q.numer().is_positive() {
        return Err(RepError::InternalNonInteger(q.to_string()));
    }
    Ok(q.numer().clone())
}

/// <w, w> + 2 <w, delta> with the Euclidean pairing.
pub fn casimir(rep: &Irrep) -> Rat {
    let delta = rep.alg.delta();
    let mut acc = Rat::zero();
    for (a, d) in rep.lam.iter().zip(&delta) {
        acc += a.clone() * a.clone() + rat(2) * a.clone() * d.clone();
    }
    acc
}

/// An irreducible label, or a chirality pair of them counted together.
///
/// Families over odd spheres produce series-D parents whose +- mirror
/// partners always occur together; such a pair is stored once, canonically
/// (non-negative last entry), with `paired = true`, and `dim` reports the
/// summed dimension.  Nothing is ever auto-paired: catalogs decide.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Label {
    irrep: Irrep,
    paired: bool,
}

impl Label {
    pub fn single(irrep: Irrep) -> Label {
        Label {
            irrep,
            paired: false,
        }
    }

    /// A +- pair; the stored representative must have positive last entry
    /// (series D).  Panics on misuse — construction sites are all internal
    /// catalogs and the generic enumerator, which guarantee it.
    pub fn paired(irrep: Irrep) -> Label {
        assert_eq!(irrep.algebra().series(), Series::D, "pairs are a series-D notion");
        assert!(
            irrep.weight().last().expect("rank >= 1").is_positive(),
            "canonical pair representative needs positive last entry"
        );
        Label {
            irrep,
            paired: true,
        }
    }

    /// Pair exactly when the mirror is a genuinely different irrep.
    pub fn pair_if_chiral(irrep: Irrep) -> Label {
        let chiral = irrep.algebra().series() == Series::D
            && !irrep.weight().last().expect("rank >= 1").is_zero();
        if chiral {
            let canon = if irrep.weight().last().unwrap().is_negative() {
                irrep.mirror()
            } else {
                irrep
            };
            Label::paired(canon)
        } else {
            Label::single(irrep)
        }
    }

    pub fn irrep(&self) -> &Irrep {
        &self.irrep
    }

    pub fn is_paired(&self) -> bool {
        self.paired
    }

    pub fn components(&self) -> Vec<Irrep> {
        if self.paired {
            vec![self.irrep.clone(), self.irrep.mirror()]
        } else {
            vec![self.irrep.clone()]
        }
    }

    pub fn dim(&self) -> Result<BigInt, RepError> {
        let d = weyl_dim(&self.irrep)?;
        Ok(if self.paired { d * 2 } else { d })
    }

    /// Well-defined across the pair: mirroring fixes the Casimir.
    pub fn casimir(&self) -> Rat {
        casimir(&self.irrep)
    }
}
