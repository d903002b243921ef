//! Restriction from so(N) to so(N-1) and the harmonic analysis of bundles
//! over the round sphere S^n = SO(n+1)/SO(n).
//!
//! The classical branching rule is multiplicity free and given by
//! interlacing: a child weight (l_1, ..., l_c) of so(N-1) occurs in the
//! restriction of (r_1, ..., r_p) of so(N) exactly when the entries
//! interlace,
//!   N odd:   r_1 >= l_1 >= r_2 >= l_2 >= ... >= r_p >= l_p >= -r_p,
//!   N even:  r_1 >= l_1 >= r_2 >= ... >= l_{p-1} >= |r_p|,
//! and r_1 - l_1 is an integer.  By Frobenius reciprocity, the space of
//! sections of the homogeneous bundle with fiber F decomposes under
//! SO(n+1) with the multiplicity of each irreducible being the number of
//! fiber components its restriction contains.
//!
//! Four bundle families are cataloged in closed form (higher-spin spinor
//! fields S_j, trace-free symmetric tensors Sym0^j, differential forms
//! Lambda^j, spinor-valued forms E_j); `decompose_generic` recovers the
//! same answer for an arbitrary fiber by direct enumeration.

use crate::rat::{frac, half, is_int, rat, Rat};
use crate::rep::{Algebra, Irrep, Label, Series, WeightError};
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BranchError {
    #[error("cannot branch below so(3): parent so({n}) too small")]
    ParentTooSmall { n: u32 },
    #[error("child algebra so({child}) is not so({parent}) minus one")]
    RankMismatch { parent: u32, child: u32 },
}

/// The full multiplicity-free restriction of `parent` to so(N-1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchingList {
    parent: Irrep,
    children: Vec<Irrep>,
}

impl BranchingList {
    pub fn parent(&self) -> &Irrep {
        &self.parent
    }

    pub fn children(&self) -> &[Irrep] {
        &self.children
    }

    /// Restriction preserves dimension; exposed as a checkable invariant.
    pub fn dim_conserved(&self) -> bool {
        let total: num_bigint::BigInt = self
            .children
            .iter()
            .map(|c| c.dim().expect("validated weight"))
            .sum();
        total == self.parent.dim().expect("validated weight")
    }
}

/// Enumerate every so(N-1) constituent of an so(N) irreducible.
pub fn branch(parent: &Irrep) -> Result<BranchingList, BranchError> {
    let np = parent.algebra().n();
    if np < 4 {
        return Err(BranchError::ParentTooSmall { n: np });
    }
    let child_alg = Algebra::so(np - 1).expect("np - 1 >= 3");
    let rho = parent.weight();
    let mp = parent.algebra().rank();
    let mc = child_alg.rank();
    let mut out = Vec::new();
    let mut acc: Vec<Rat> = Vec::with_capacity(mc);
    // Walk entries left to right; each child entry steps down by 1 from its
    // upper interlacing bound, which keeps it in the parent's parity class.
    fn rec(
        rho: &[Rat],
        mp: usize,
        mc: usize,
        series_b_parent: bool,
        i: usize,
        acc: &mut Vec<Rat>,
        out: &mut Vec<Vec<Rat>>,
    ) {
        if i == mc {
            out.push(acc.clone());
            return;
        }
        let hi = rho[i].clone();
        let lo = if i + 1 < mc {
            rho[i + 1].clone()
        } else if series_b_parent {
            -rho[mp - 1].clone()
        } else {
            rho[mp - 1].abs()
        };
        let mut x = hi;
        while x >= lo {
            acc.push(x.clone());
            rec(rho, mp, mc, series_b_parent, i + 1, acc, out);
            acc.pop();
            x -= rat(1);
        }
    }
    rec(
        rho,
        mp,
        mc,
        parent.algebra().series() == Series::B,
        0,
        &mut acc,
        &mut out,
    );
    let children = out
        .into_iter()
        .map(|w| child_alg.irrep(&w).expect("interlacing implies dominance"))
        .collect();
    Ok(BranchingList {
        parent: parent.clone(),
        children,
    })
}

/// Does the restriction of `parent` (so(N)) contain `child` (so(N-1))?
/// Decided directly from the interlacing inequalities; a parity-class
/// mismatch simply means "no".
pub fn contains(parent: &Irrep, child: &Irrep) -> Result<bool, BranchError> {
    let np = parent.algebra().n();
    let nc = child.algebra().n();
    if nc + 1 != np {
        return Err(BranchError::RankMismatch {
            parent: np,
            child: nc,
        });
    }
    let rho = parent.weight();
    let lam = child.weight();
    if !is_int(&(rho[0].clone() - lam[0].clone())) {
        return Ok(false);
    }
    let mp = parent.algebra().rank();
    let mc = child.algebra().rank();
    for i in 0..mc {
        let lo = if i + 1 < mc {
            rho[i + 1].clone()
        } else if parent.algebra().series() == Series::B {
            -rho[mp - 1].clone()
        } else {
            rho[mp - 1].abs()
        };
        if !(rho[i] >= lam[i] && lam[i] >= lo) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Split a fiber highest weight into its irreducible so(n) components:
/// on a series-D algebra a nonzero last entry yields the +- mirror pair.
pub fn fiber_components(alg: Algebra, weight: &[Rat]) -> Result<Vec<Irrep>, WeightError> {
    let w = alg.irrep(weight)?;
    if alg.series() == Series::D && !w.weight().last().expect("rank >= 1").is_zero() {
        let m = w.mirror();
        Ok(vec![w, m])
    } else {
        Ok(vec![w])
    }
}

/// Common dimension/Casimir helpers for a list of fiber components.
pub fn module_dim(comps: &[Irrep]) -> num_bigint::BigInt {
    comps.iter().map(|c| c.dim().expect("validated")).sum()
}

/// All components of one fiber module share a Casimir value; return it.
/// Panics if handed components from different modules.
pub fn module_casimir(comps: &[Irrep]) -> Rat {
    let c0 = comps[0].casimir();
    for c in &comps[1..] {
        assert_eq!(c.casimir(), c0, "components from different modules");
    }
    c0
}

// ---------------------------------------------------------------------------
// bundle families over S^n

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Higher-spin spinor fields S_j; members carry (k, s), 0 <= s <= j.
    SpinorSphere,
    /// Trace-free symmetric j-tensors Sym0^j; members carry (k, s).
    SymSphere,
    /// Exact part of Omega^j (image of d from below is the complement;
    /// these are the co-closed-complement summands pushed up from degree j).
    FormUp,
    /// Co-exact part of Omega^j.
    FormDown,
    /// Upper summands of the spinor-valued forms E_j.
    SpinorFormUp,
    /// Lower summands of the spinor-valued forms E_j.
    SpinorFormDown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BundleKind {
    Spinor { j: u32 },
    Sym { j: u32 },
    Form { j: u32 },
    SpinorForm { j: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bundle {
    n: u32,
    kind: BundleKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BundleError {
    #[error("S^{n} is not supported (need n >= 3)")]
    UnsupportedSphere { n: u32 },
    #[error("degree {j} out of range on S^{n}: form-type bundles need 0 <= j <= {max} (use Hodge duality above the middle)")]
    InvalidDegree { n: u32, j: u32, max: u32 },
}

impl Bundle {
    pub fn new(n: u32, kind: BundleKind) -> Result<Bundle, BundleError> {
        if n < 3 {
            return Err(BundleError::UnsupportedSphere { n });
        }
        let max = n / 2;
        match kind {
            BundleKind::Form { j } | BundleKind::SpinorForm { j } if j > max => {
                Err(BundleError::InvalidDegree { n, j, max })
            }
            _ => Ok(Bundle { n, kind }),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn kind(&self) -> BundleKind {
        self.kind
    }

    pub fn j(&self) -> u32 {
        match self.kind {
            BundleKind::Spinor { j }
            | BundleKind::Sym { j }
            | BundleKind::Form { j }
            | BundleKind::SpinorForm { j } => j,
        }
    }

    fn base_alg(&self) -> Algebra {
        Algebra::so(self.n).expect("n >= 3")
    }

    fn parent_alg(&self) -> Algebra {
        Algebra::so(self.n + 1).expect("n + 1 >= 4")
    }

    /// Irreducible so(n) components of the fiber at a point.
    pub fn fiber(&self) -> Vec<Irrep> {
        let alg = self.base_alg();
        let r = alg.rank();
        let w: Vec<Rat> = match self.kind {
            BundleKind::Spinor { j } => {
                let mut w = vec![half(1); r];
                w[0] = rat(j as i64) + half(1);
                w
            }
            BundleKind::Sym { j } => {
                let mut w = vec![rat(0); r];
                w[0] = rat(j as i64);
                w
            }
            BundleKind::Form { j } => {
                let j = j as usize;
                let mut w = vec![rat(0); r];
                w[..j].fill(rat(1));
                w
            }
            BundleKind::SpinorForm { j } => {
                let j = j as usize;
                let mut w = vec![half(1); r];
                w[..j].fill(frac(3, 2));
                w
            }
        };
        fiber_components(alg, &w).expect("catalog weights are dominant")
    }

    pub fn fiber_dim(&self) -> num_bigint::BigInt {
        module_dim(&self.fiber())
    }

    pub fn fiber_casimir(&self) -> Rat {
        module_casimir(&self.fiber())
    }

    /// Closed-form decomposition of the section space under SO(n+1),
    /// listing members with Frobenius level k = 0..=k_max.
    pub fn decompose(&self, k_max: u32) -> Vec<Member> {
        let mut out = Vec::new();
        match self.kind {
            BundleKind::Spinor { j } => {
                for k in 0..=k_max {
                    for s in 0..=j {
                        out.push(self.spinor_member(j, k, s));
                    }
                }
            }
            BundleKind::Sym { j } => {
                for k in 0..=k_max {
                    for s in 0..=j {
                        out.push(self.sym_member(j, k, s));
                    }
                }
            }
            BundleKind::Form { j } => {
                out.extend(self.form_members(j, k_max, true));
                out.extend(self.form_members(j, k_max, false));
            }
            BundleKind::SpinorForm { j } => {
                out.extend(self.spinor_form_members(j, k_max, true));
                out.extend(self.spinor_form_members(j, k_max, false));
            }
        }
        out
    }

    /// Spinor member V_j(k, s)': parent weight (k+j+1/2, s+1/2, 1/2, ...).
    /// Odd n: a chirality pair counted once; even n: multiplicity 2.
    fn spinor_member(&self, j: u32, k: u32, s: u32) -> Member {
        let alg = self.parent_alg();
        let m = alg.rank();
        let mut w = vec![half(1); m];
        w[0] = rat((k + j) as i64) + half(1);
        w[1] = rat(s as i64) + half(1);
        let irrep = alg.irrep(&w).expect("catalog weight");
        let (label, mult) = if alg.series() == Series::D {
            (Label::paired(irrep), 1)
        } else {
            (Label::single(irrep), 2)
        };
        Member {
            family: Family::SpinorSphere,
            n: self.n,
            j,
            k,
            s: Some(s),
            label,
            mult,
        }
    }

    /// Symmetric-tensor member V_j(k, s): parent weight (k+j, s, 0, ...).
    fn sym_member(&self, j: u32, k: u32, s: u32) -> Member {
        let alg = self.parent_alg();
        let m = alg.rank();
        let mut w = vec![rat(0); m];
        w[0] = rat((k + j) as i64);
        w[1] = rat(s as i64);
        let irrep = alg.irrep(&w).expect("catalog weight");
        let label = Label::pair_if_chiral(irrep);
        Member {
            family: Family::SymSphere,
            n: self.n,
            j,
            k,
            s: None,
            label,
            mult: 1,
        }
        .with_s(s)
    }

    /// Form members. Up summands are V_{j+1}(k) = (k+1, 1^j, 0, ...); at the
    /// middle degree of an even sphere the up copy degenerates to a second
    /// V_j(k).  Down summands are V_j(k) = (k+1, 1^(j-1), 0, ...); degree 0
    /// has only the constants V_0(0).
    fn form_members(&self, j: u32, k_max: u32, up: bool) -> Vec<Member> {
        let alg = self.parent_alg();
        let m = alg.rank();
        let r = self.base_alg().rank() as u32;
        let mut out = Vec::new();
        if !up && j == 0 {
            let w = vec![rat(0); m];
            let irrep = alg.irrep(&w).expect("trivial weight");
            out.push(Member {
                family: Family::FormDown,
                n: self.n,
                j,
                k: 0,
                s: None,
                label: Label::single(irrep),
                mult: 1,
            });
            return out;
        }
        // ones = j for a true up summand, j-1 for down and for the middle
        // degree of an even sphere (where "up" is the second V_j copy)
        let middle_even = self.n % 2 == 0 && j == r;
        let ones = if up && !middle_even { j } else { j - 1 } as usize;
        for k in 0..=k_max {
            let mut w = vec![rat(0); m];
            w[0] = rat(k as i64 + 1);
            w[1..=ones].fill(rat(1));
            let irrep = alg.irrep(&w).expect("catalog weight");
            out.push(Member {
                family: if up { Family::FormUp } else { Family::FormDown },
                n: self.n,
                j,
                k,
                s: None,
                label: Label::pair_if_chiral(irrep),
                mult: 1,
            });
        }
        out
    }

    /// Spinor-form members.  Up: V_{j+1}(k)' = (k+3/2, (3/2)^j, 1/2, ...),
    /// empty at the middle degree of an even sphere; down: V_j(k)' =
    /// (k+3/2, (3/2)^(j-1), 1/2, ...), and degree 0 has only V_0(0)'.
    /// Even n: multiplicity 2; odd n: chirality pairs counted once.
    fn spinor_form_members(&self, j: u32, k_max: u32, up: bool) -> Vec<Member> {
        let alg = self.parent_alg();
        let m = alg.rank();
        let r = self.base_alg().rank() as u32;
        let mult = if self.n % 2 == 0 { 2 } else { 1 };
        let family = if up {
            Family::SpinorFormUp
        } else {
            Family::SpinorFormDown
        };
        let mut out = Vec::new();
        if up && self.n % 2 == 0 && j == r {
            return out; // no up summand at the middle degree of an even sphere
        }
        if !up && j == 0 {
            let w = vec![half(1); m];
            let irrep = alg.irrep(&w).expect("spin weight");
            out.push(Member {
                family,
                n: self.n,
                j,
                k: 0,
                s: None,
                label: Label::pair_if_chiral(irrep),
                mult,
            });
            return out;
        }
        let threes = if up { j } else { j - 1 } as usize;
        for k in 0..=k_max {
            let mut w = vec![half(1); m];
            w[..=threes].fill(frac(3, 2));
            w[0] = rat(k as i64) + frac(3, 2);
            let irrep = alg.irrep(&w).expect("catalog weight");
            out.push(Member {
                family,
                n: self.n,
                j,
                k,
                s: None,
                label: Label::pair_if_chiral(irrep),
                mult,
            });
        }
        out
    }
}

/// One irreducible summand of the section space of a bundle family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Member {
    pub family: Family,
    pub n: u32,
    pub j: u32,
    pub k: u32,
    /// Inner spin/rank parameter for the spinor and symmetric families.
    pub s: Option<u32>,
    pub label: Label,
    pub mult: u32,
}

impl Member {
    fn with_s(mut self, s: u32) -> Member {
        self.s = Some(s);
        self
    }

    /// The bundle kind this member came from.
    pub fn bundle_kind(&self) -> BundleKind {
        match self.family {
            Family::SpinorSphere => BundleKind::Spinor { j: self.j },
            Family::SymSphere => BundleKind::Sym { j: self.j },
            Family::FormUp | Family::FormDown => BundleKind::Form { j: self.j },
            Family::SpinorFormUp | Family::SpinorFormDown => BundleKind::SpinorForm { j: self.j },
        }
    }

    /// Total dimension contributed: dim(label) * mult.
    pub fn total_dim(&self) -> num_bigint::BigInt {
        self.label.dim().expect("catalog weight") * self.mult
    }
}

/// One parent module found by direct enumeration, with its Frobenius
/// multiplicity (number of fiber components its restriction contains).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericComponent {
    pub label: Label,
    pub mult: u32,
}

/// Decompose sections of the bundle with the given fiber over S^n by brute
/// force: enumerate canonical dominant so(n+1) weights in the fiber's
/// parity class with first entry <= fiber_1 + k_max + 1 and keep those whose
/// restriction meets the fiber.  Series-D parents are reported once per
/// mirror pair (the pairing is canonical: both halves always occur equally).
pub fn decompose_generic(n: u32, fiber: &[Irrep], k_max: u32) -> Vec<GenericComponent> {
    assert!(!fiber.is_empty(), "fiber must have at least one component");
    let parent = Algebra::so(n + 1).expect("n >= 3");
    let m = parent.rank();
    let first_max = fiber[0].weight()[0].clone() + rat(k_max as i64 + 1);
    let base = if fiber[0].is_integral() { rat(0) } else { half(1) };
    let mut weights: Vec<Vec<Rat>> = Vec::new();
    let mut acc: Vec<Rat> = Vec::with_capacity(m);
    fn rec(m: usize, base: &Rat, prev: &Rat, acc: &mut Vec<Rat>, out: &mut Vec<Vec<Rat>>) {
        if acc.len() == m {
            out.push(acc.clone());
            return;
        }
        let mut x = base.clone();
        while x <= *prev {
            acc.push(x.clone());
            rec(m, base, &x.clone(), acc, out);
            acc.pop();
            x += rat(1);
        }
    }
    // first entry rises to the bound, later entries weakly decrease
    let mut top = base.clone();
    while top <= first_max {
        acc.push(top.clone());
        rec(m, &base, &top, &mut acc, &mut weights);
        acc.pop();
        top += rat(1);
    }
    let mut out = Vec::new();
    for w in weights {
        let rho = parent.irrep(&w).expect("enumeration is dominant");
        let mult = fiber
            .iter()
            .filter(|c| contains(&rho, c).expect("ranks match"))
            .count() as u32;
        if mult == 0 {
            continue;
        }
        let label = Label::pair_if_chiral(rho.clone());
        if label.is_paired() {
            let mirrored = rho.mirror();
            let mmult = fiber
                .iter()
                .filter(|c| contains(&mirrored, c).expect("ranks match"))
                .count() as u32;
            assert_eq!(
                mmult, mult,
                "mirror halves of a chiral parent must occur equally"
            );
        }
        out.push(GenericComponent { label, mult });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn so(n: u32) -> Algebra {
        Algebra::so(n).unwrap()
    }

    fn rep(n: u32, w: &[Rat]) -> Irrep {
        so(n).irrep(w).unwrap()
    }

    #[test]
    fn branch_so5_adjoint() {
        // so(5) adjoint (1,1) -> so(4): (1,1), (1,0), (1,-1) -- dims 3+4+3 = 10
        let b = branch(&rep(5, &[rat(1), rat(1)])).unwrap();
        assert_eq!(b.children().len(), 3);
        assert!(b.dim_conserved());
        let dims: Vec<BigInt> = b.children().iter().map(|c| c.dim().unwrap()).collect();
        assert_eq!(dims, vec![BigInt::from(3), BigInt::from(4), BigInt::from(3)]);
    }

    #[test]
    fn branch_spin_representation() {
        // so(7) spin (1/2,1/2,1/2), dim 8 -> so(6): two chiral spinors of dim 4
        let b = branch(&rep(7, &[half(1), half(1), half(1)])).unwrap();
        assert_eq!(b.children().len(), 2);
        assert!(b.dim_conserved());
        assert!(b
            .children()
            .iter()
            .any(|c| c.weight().last().unwrap().is_negative()));
    }

    #[test]
    fn branch_conserves_dimension_various() {
        for (n, w) in [
            (5, vec![rat(3), rat(1)]),
            (6, vec![half(5), half(3), half(-1)]),
            (7, vec![rat(2), rat(2), rat(1)]),
            (8, vec![rat(2), rat(1), rat(1), rat(0)]),
            (9, vec![half(7), half(3), half(3), half(1)]),
        ] {
            let b = branch(&rep(n, &w)).unwrap();
            assert!(b.dim_conserved(), "so({n}) {w:?}");
        }
    }

    #[test]
    fn contains_matches_enumeration() {
        let parent = rep(6, &[rat(2), rat(1), rat(-1)]);
        let list = branch(&parent).unwrap();
        // exhaustive positive side
        for c in list.children() {
            assert_eq!(contains(&parent, c), Ok(true));
        }
        // a couple of negatives
        assert_eq!(contains(&parent, &rep(5, &[rat(3), rat(0)])), Ok(false));
        assert_eq!(contains(&parent, &rep(5, &[half(3), half(1)])), Ok(false)); // parity
        assert!(matches!(
            contains(&parent, &rep(4, &[rat(1), rat(0)])),
            Err(BranchError::RankMismatch { .. })
        ));
    }

    #[test]
    fn contains_symmetric_under_parent_mirror() {
        let plus = rep(6, &[rat(3), rat(2), rat(1)]);
        let minus = plus.mirror();
        for c in branch(&plus).unwrap().children() {
            assert_eq!(contains(&plus, c), contains(&minus, c));
        }
    }

    #[test]
    fn fiber_dimensions() {
        // spinor fiber on S^n: 2^floor(n/2) * C(n+j-2, j) for j = 0 -> 2^m
        let b = Bundle::new(5, BundleKind::Spinor { j: 0 }).unwrap();
        assert_eq!(b.fiber_dim(), BigInt::from(4));
        let b = Bundle::new(5, BundleKind::Spinor { j: 2 }).unwrap();
        assert_eq!(b.fiber_dim(), BigInt::from(40)); // 4 * C(5, 2)
        let b = Bundle::new(4, BundleKind::Form { j: 2 }).unwrap();
        assert_eq!(b.fiber_dim(), BigInt::from(6)); // C(4, 2), split 3 + 3
        assert_eq!(b.fiber().len(), 2);
        let b = Bundle::new(6, BundleKind::Sym { j: 2 }).unwrap();
        assert_eq!(b.fiber_dim(), BigInt::from(20)); // trace-free symmetric 6x6
        let b = Bundle::new(4, BundleKind::SpinorForm { j: 1 }).unwrap();
        assert_eq!(b.fiber_dim(), BigInt::from(12)); // (3/2,1/2) pair: 6 + 6
    }

    #[test]
    fn fiber_casimirs() {
        // spinor: j(n+j-1) + n(n-1)/8; sym: j(n+j-2);
        // forms: j(n-j); spinor-forms: j(n-j+1) + n(n-1)/8
        for n in 3..9u32 {
            let nn = n as i64;
            for j in 0..=(n / 2) {
                let jj = j as i64;
                let sp = Bundle::new(n, BundleKind::Spinor { j }).unwrap();
                assert_eq!(
                    sp.fiber_casimir(),
                    rat(jj * (nn + jj - 1)) + frac(nn * (nn - 1), 8)
                );
                let sy = Bundle::new(n, BundleKind::Sym { j }).unwrap();
                assert_eq!(sy.fiber_casimir(), rat(jj * (nn + jj - 2)));
                let fo = Bundle::new(n, BundleKind::Form { j }).unwrap();
                assert_eq!(fo.fiber_casimir(), rat(jj * (nn - jj)));
                let ef = Bundle::new(n, BundleKind::SpinorForm { j }).unwrap();
                assert_eq!(
                    ef.fiber_casimir(),
                    rat(jj * (nn - jj + 1)) + frac(nn * (nn - 1), 8)
                );
            }
        }
    }

    #[test]
    fn spinor_members_on_s3_match_classical_dirac_dims() {
        // S^3, j = 0: member dims 4(k+1)(k+2)/2 -> 4, 12, 24
        let b = Bundle::new(3, BundleKind::Spinor { j: 0 }).unwrap();
        let dims: Vec<BigInt> = b.decompose(2).iter().map(|m| m.total_dim()).collect();
        assert_eq!(
            dims,
            vec![BigInt::from(4), BigInt::from(12), BigInt::from(24)]
        );
    }

    #[test]
    fn form_members_on_s4() {
        // Omega^1(S^4): up V_2(k) = (k+1,1), down V_1(k) = (k+1,0)
        let b = Bundle::new(4, BundleKind::Form { j: 1 }).unwrap();
        let ms = b.decompose(0);
        assert_eq!(ms.len(), 2);
        assert_eq!(ms[0].family, Family::FormUp);
        assert_eq!(ms[0].total_dim(), BigInt::from(10)); // so(5) (1,1): adjoint
        assert_eq!(ms[1].family, Family::FormDown);
        assert_eq!(ms[1].total_dim(), BigInt::from(5)); // so(5) (1,0): vector
    }

    #[test]
    fn middle_degree_forms_on_even_sphere() {
        // Omega^2(S^4): both summands are V_2(k) = (k+1, 1); total 2 copies
        let b = Bundle::new(4, BundleKind::Form { j: 2 }).unwrap();
        let ms = b.decompose(1);
        let ups: Vec<_> = ms.iter().filter(|m| m.family == Family::FormUp).collect();
        let downs: Vec<_> = ms.iter().filter(|m| m.family == Family::FormDown).collect();
        assert_eq!(ups.len(), 2);
        assert_eq!(downs.len(), 2);
        for (u, d) in ups.iter().zip(&downs) {
            assert_eq!(u.label, d.label);
        }
    }

    #[test]
    fn spinor_form_middle_degree_has_no_up_family() {
        let b = Bundle::new(4, BundleKind::SpinorForm { j: 2 }).unwrap();
        let ms = b.decompose(3);
        assert!(ms.iter().all(|m| m.family == Family::SpinorFormDown));
        let b = Bundle::new(6, BundleKind::SpinorForm { j: 3 }).unwrap();
        assert!(b
            .decompose(2)
            .iter()
            .all(|m| m.family == Family::SpinorFormDown));
    }

    #[test]
    fn degree_zero_down_families_are_constants_only() {
        let b = Bundle::new(5, BundleKind::Form { j: 0 }).unwrap();
        let downs: Vec<_> = b
            .decompose(4)
            .into_iter()
            .filter(|m| m.family == Family::FormDown)
            .collect();
        assert_eq!(downs.len(), 1);
        assert_eq!(downs[0].k, 0);
        assert_eq!(downs[0].total_dim(), BigInt::from(1));
        let b = Bundle::new(5, BundleKind::SpinorForm { j: 0 }).unwrap();
        let downs: Vec<_> = b
            .decompose(4)
            .into_iter()
            .filter(|m| m.family == Family::SpinorFormDown)
            .collect();
        assert_eq!(downs.len(), 1);
        assert_eq!(downs[0].k, 0);
        assert_eq!(downs[0].total_dim(), BigInt::from(8)); // so(6) spin pair 4+4
    }

    #[test]
    fn invalid_degrees_rejected() {
        assert!(matches!(
            Bundle::new(4, BundleKind::Form { j: 3 }),
            Err(BundleError::InvalidDegree { max: 2, .. })
        ));
        assert!(Bundle::new(4, BundleKind::Form { j: 2 }).is_ok());
        assert!(matches!(
            Bundle::new(2, BundleKind::Sym { j: 1 }),
            Err(BundleError::UnsupportedSphere { n: 2 })
        ));
    }

    #[test]
    fn generic_agrees_with_catalog_on_a_sample() {
        use std::collections::HashMap;
        for (n, kind) in [
            (4, BundleKind::Spinor { j: 1 }),
            (5, BundleKind::Sym { j: 2 }),
            (6, BundleKind::Form { j: 2 }),
            (5, BundleKind::SpinorForm { j: 1 }),
            (4, BundleKind::SpinorForm { j: 2 }),
            (3, BundleKind::Sym { j: 2 }),
        ] {
            let k_max = 3;
            let b = Bundle::new(n, kind).unwrap();
            let mut catalog: HashMap<Label, u32> = HashMap::new();
            for m in b.decompose(k_max) {
                *catalog.entry(m.label).or_insert(0) += m.mult;
            }
            let generic = decompose_generic(n, &b.fiber(), k_max);
            let gmap: HashMap<Label, u32> =
                generic.into_iter().map(|g| (g.label, g.mult)).collect();
            // every family member appears generically with the same multiplicity
            for (label, mult) in &catalog {
                assert_eq!(gmap.get(label), Some(mult), "{n} {kind:?} {label:?}");
            }
            // every generic parent within the settled bound is cataloged
            let bound = b.fiber()[0].weight()[0].clone() + rat(k_max as i64);
            for (label, mult) in &gmap {
                if label.irrep().weight()[0] <= bound {
                    assert_eq!(catalog.get(label), Some(mult), "{n} {kind:?} {label:?}");
                }
            }
        }
    }

    #[test]
    fn branching_multiplicity_free() {
        for (n, w) in [
            (5, vec![rat(4), rat(2)]),
            (6, vec![half(7), half(3), half(1)]),
            (8, vec![rat(3), rat(2), rat(1), rat(-1)]),
        ] {
            let b = branch(&rep(n, &w)).unwrap();
            let mut seen = std::collections::HashSet::new();
            for c in b.children() {
                assert!(seen.insert(c.clone()), "duplicate child in so({n}) {w:?}");
            }
        }
    }
}
