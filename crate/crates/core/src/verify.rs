//! Grid-based and randomized verification suites.
//!
//! Each suite re-derives a body of identities from the representation-theoretic
//! engines (Weyl dimension products, restriction enumeration, moment-identity
//! elimination) and compares them against independently written closed forms
//! and against each other.  All arithmetic is exact rational; every elementary
//! comparison is counted, and any failed comparison is recorded as a violation.
//!
//! The five suites:
//! * `branching` — seeded random restriction checks (dimension conservation,
//!   multiplicity-freeness, containment vs enumeration) plus two-sided
//!   agreement between the closed-form section catalogs and brute-force
//!   Frobenius enumeration.
//! * `weitzenboeck` — gradient-target tables, moment sum rules on every
//!   summand, and the eliminated two-term identities against their closed-form
//!   coefficients, evaluated at several curvature normalizations.
//! * `factorization` — the vanishing-factor product identities on all three
//!   families, the twistor-square factorization, and the induced grading.
//! * `crosscheck` — closed-form spectra against Casimir eigenvalues, classical
//!   Dirac multiplicities, intertwining relations, degree-0 catalog agreement,
//!   kernel rules, positivity, and the Hodge decomposition of the Laplacian.
//! * `killing` — Killing-space dimensions (including the rank-2 plethysm
//!   count), primitive chains, and the level-zero Killing form members.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::branching::{branch, contains, decompose_generic, Bundle, BundleKind, Family, Member};
use crate::factorization::{
    grading_decomposition, tplus_factorization_check, verify_factorization, FactorError,
    FactorReport,
};
use crate::killing::{
    killing_form_operator_check, killing_forms, killing_space, killing_two_plethysm_dim,
    primitive_killing, sym_member_exists,
};
use crate::rat::{format_rational, format_weight_list, frac, half, rat, signum, Rat};
use crate::rep::{Algebra, Label, Series};
use crate::spectra::{
    applicable_ops, kernel_rule, laplacian_ev, normalization_sq, operator_ev, sym_u_extrapolated,
    OperatorKind, SpectraError,
};
use crate::weitzenboeck::{system_bundle, FamilyKind, Identity, System};

/// A verification suite name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Branching,
    Weitzenboeck,
    Factorization,
    Crosscheck,
    Killing,
    /// All five suites, in the order above.
    All,
}

impl Suite {
    pub const INDIVIDUAL: [Suite; 5] = [
        Suite::Branching,
        Suite::Weitzenboeck,
        Suite::Factorization,
        Suite::Crosscheck,
        Suite::Killing,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Branching => "branching",
            Suite::Weitzenboeck => "weitzenboeck",
            Suite::Factorization => "factorization",
            Suite::Crosscheck => "crosscheck",
            Suite::Killing => "killing",
            Suite::All => "all",
        }
    }

    pub fn parse(name: &str) -> Option<Suite> {
        Some(match name {
            "branching" => Suite::Branching,
            "weitzenboeck" => Suite::Weitzenboeck,
            "factorization" => Suite::Factorization,
            "crosscheck" => Suite::Crosscheck,
            "killing" => Suite::Killing,
            "all" => Suite::All,
            _ => return None,
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Grid bounds and random seed shared by every suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyParams {
    pub n_min: u32,
    pub n_max: u32,
    pub j_max: u32,
    pub k_max: u32,
    pub seed: u64,
}

impl Default for VerifyParams {
    fn default() -> VerifyParams {
        VerifyParams {
            n_min: 3,
            n_max: 8,
            j_max: 3,
            k_max: 6,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("empty verification grid: n range {n_min}..={n_max} contains no sphere with n >= 3")]
    EmptyGrid { n_min: u32, n_max: u32 },
}

/// Outcome of one suite: how many elementary comparisons ran, and every
/// violation message (empty when the suite passed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: u64,
    pub violations: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Run one suite (or all of them).  Fails up front when the sphere range is
/// empty; individual identity failures are reported as violations instead.
pub fn run_suite(suite: Suite, params: &VerifyParams) -> Result<Vec<SuiteReport>, VerifyError> {
    if params.n_max < 3 || params.n_min > params.n_max {
        return Err(VerifyError::EmptyGrid {
            n_min: params.n_min,
            n_max: params.n_max,
        });
    }
    let eff = VerifyParams {
        n_min: params.n_min.max(3),
        ..*params
    };
    let list: &[Suite] = if suite == Suite::All {
        &Suite::INDIVIDUAL
    } else {
        std::slice::from_ref(&suite)
    };
    Ok(list.iter().map(|s| run_one(*s, &eff)).collect())
}

fn run_one(suite: Suite, p: &VerifyParams) -> SuiteReport {
    match suite {
        Suite::Branching => run_branching(p),
        Suite::Weitzenboeck => run_weitzenboeck(p),
        Suite::Factorization => run_factorization(p),
        Suite::Crosscheck => run_crosscheck(p),
        Suite::Killing => run_killing(p),
        Suite::All => unreachable!("expanded by run_suite"),
    }
}

// ---------------------------------------------------------------------------
// bookkeeping

struct Checker {
    checks: u64,
    violations: Vec<String>,
}

impl Checker {
    fn new() -> Checker {
        Checker {
            checks: 0,
            violations: Vec::new(),
        }
    }

    fn is(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations.push(msg());
        }
    }

    fn eq_rat(&mut self, got: &Rat, want: &Rat, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if got != want {
            self.violations.push(format!(
                "{}: got {}, want {}",
                msg(),
                format_rational(got),
                format_rational(want)
            ));
        }
    }

    fn eq_big(&mut self, got: &BigInt, want: &BigInt, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if got != want {
            self.violations.push(format!("{}: got {got}, want {want}", msg()));
        }
    }

    fn into_report(self, suite: Suite) -> SuiteReport {
        SuiteReport {
            suite,
            checks: self.checks,
            violations: self.violations,
        }
    }
}

fn member_desc(m: &Member) -> String {
    format!(
        "{:?} n={} j={} k={} s={:?} label=({})",
        m.family,
        m.n,
        m.j,
        m.k,
        m.s,
        format_weight_list(m.label.irrep().weight())
    )
}

fn label_key(l: &Label) -> String {
    if l.is_paired() {
        format!("{}#pair", format_weight_list(l.irrep().weight()))
    } else {
        format_weight_list(l.irrep().weight())
    }
}

/// Unnormalized gradient square X = (catalogued eigenvalue) / N^2.  The n = 3
/// symmetric U square is only defined by extrapolation (its N is 1).
fn bare_square(m: &Member, op: OperatorKind) -> Rat {
    if m.family == Family::SymSphere && m.n == 3 && op == OperatorKind::U {
        return sym_u_extrapolated(m.j, m.k, m.s.expect("symmetric member"));
    }
    let ev = operator_ev(m, op).expect("operator applies to this family");
    let nsq = normalization_sq(m.bundle_kind(), m.n, op).expect("operator applies");
    ev / nsq
}

fn binom_big(n: u64, k: u64) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// All four bundle kinds at the given degree, skipping invalid ones.
fn kinds_at(j: u32) -> [BundleKind; 4] {
    [
        BundleKind::Spinor { j },
        BundleKind::Sym { j },
        BundleKind::Form { j },
        BundleKind::SpinorForm { j },
    ]
}

// ---------------------------------------------------------------------------
// suite: branching

fn run_branching(p: &VerifyParams) -> SuiteReport {
    let mut c = Checker::new();

    // Seeded random restrictions so(N) -> so(N-1), ranks up to 5, entries up
    // to 9/2, both parity classes, signed last entries on even N.
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    for _ in 0..500 {
        let parent_n: u32 = rng.gen_range(4..=11);
        let alg = Algebra::so(parent_n).expect("n >= 3");
        let m = alg.rank();
        let half_class = rng.gen_bool(0.5);
        let mut entries: Vec<i64> = (0..m).map(|_| rng.gen_range(0..=4)).collect();
        entries.sort_unstable_by(|a, b| b.cmp(a));
        let mut w: Vec<Rat> = entries
            .iter()
            .map(|&e| if half_class { half(2 * e + 1) } else { rat(e) })
            .collect();
        if alg.series() == Series::D && rng.gen_bool(0.5) && !w[m - 1].is_zero() {
            let neg = -w[m - 1].clone();
            w[m - 1] = neg;
        }
        let parent = alg.irrep(&w).expect("sampled weights are dominant");
        let list = branch(&parent).expect("child rank fits");
        c.is(list.dim_conserved(), || {
            format!(
                "so({parent_n}) ({}) restriction does not conserve dimension",
                format_weight_list(&w)
            )
        });
        let mut seen: BTreeSet<String> = BTreeSet::new();
        let distinct = list
            .children()
            .iter()
            .all(|ch| seen.insert(format_weight_list(ch.weight())));
        c.is(distinct, || {
            format!(
                "so({parent_n}) ({}) restriction repeats a child",
                format_weight_list(&w)
            )
        });
        for child in list.children() {
            c.is(contains(&parent, child).expect("ranks match"), || {
                format!(
                    "so({parent_n}) ({}) does not report containing its enumerated child ({})",
                    format_weight_list(&w),
                    format_weight_list(child.weight())
                )
            });
        }
        // containment on random candidates must agree with the enumeration
        let child_alg = Algebra::so(parent_n - 1).expect("n >= 3");
        let mc = child_alg.rank();
        for _ in 0..3 {
            let mut ce: Vec<i64> = (0..mc).map(|_| rng.gen_range(0..=5)).collect();
            ce.sort_unstable_by(|a, b| b.cmp(a));
            let mut cw: Vec<Rat> = ce
                .iter()
                .map(|&e| if half_class { half(2 * e + 1) } else { rat(e) })
                .collect();
            if child_alg.series() == Series::D && rng.gen_bool(0.5) && !cw[mc - 1].is_zero() {
                let neg = -cw[mc - 1].clone();
                cw[mc - 1] = neg;
            }
            let cand = child_alg.irrep(&cw).expect("sampled weights are dominant");
            let got = contains(&parent, &cand).expect("ranks match");
            let want = list.children().iter().any(|ch| ch == &cand);
            c.is(got == want, || {
                format!(
                    "containment of ({}) in so({parent_n}) ({}) is {got}, enumeration says {want}",
                    format_weight_list(&cw),
                    format_weight_list(&w)
                )
            });
        }
    }

    // Closed-form section catalogs against brute-force Frobenius enumeration,
    // two-sided on the settled part of the grid.
    let k_eff = p.k_max.min(4);
    for n in p.n_min..=p.n_max.min(9) {
        for j in 0..=p.j_max.min(3) {
            for kind in kinds_at(j) {
                let bundle = match Bundle::new(n, kind) {
                    Ok(b) => b,
                    Err(_) => continue, // form-type degree past the middle
                };
                let mut fam: BTreeMap<String, u32> = BTreeMap::new();
                for m in bundle.decompose(k_eff) {
                    *fam.entry(label_key(&m.label)).or_insert(0) += m.mult;
                }
                let fiber = bundle.fiber();
                let generic = decompose_generic(n, &fiber, k_eff);
                let gmap: BTreeMap<String, u32> = generic
                    .iter()
                    .map(|g| (label_key(&g.label), g.mult))
                    .collect();
                for (key, mult) in &fam {
                    c.is(gmap.get(key) == Some(mult), || {
                        format!(
                            "catalog summand {key} of {kind:?} on S^{n} (mult {mult}) \
                             not found generically (got {:?})",
                            gmap.get(key)
                        )
                    });
                }
                let bound = fiber[0].weight()[0].clone() + rat(k_eff as i64);
                for g in &generic {
                    if g.label.irrep().weight()[0] <= bound {
                        let key = label_key(&g.label);
                        c.is(fam.get(&key) == Some(&g.mult), || {
                            format!(
                                "generic summand {key} (mult {}) below the settled bound \
                                 missing from the {kind:?} catalog on S^{n} (got {:?})",
                                g.mult,
                                fam.get(&key)
                            )
                        });
                    }
                }
            }
        }
    }
    c.into_report(Suite::Branching)
}

// ---------------------------------------------------------------------------
// suite: weitzenboeck

/// Closed-form gradient table of the higher-spin spinor system.
fn spinor_table_checks(c: &mut Checker, sys: &System) {
    let n = sys.n() as i64;
    let j = sys.j() as i64;
    for t in sys.targets() {
        let (w, wh, rd) = match t.op {
            OperatorKind::TPlus => (
                half(2 * j + 1),
                rat(j) + frac(n, 2),
                frac(n + j - 1, j + 1),
            ),
            OperatorKind::U => (
                half(-1),
                frac(n, 2) - rat(1),
                frac((n - 3) * (n + j - 1) * j, (n + j - 2) * (j + 1)),
            ),
            OperatorKind::DiracSquared => (half(1 - n), rat(0), rat(1)),
            OperatorKind::TMinus => (
                half(3 - 2 * n - 2 * j),
                half(2 - 2 * j - n),
                frac(j, n + j - 2),
            ),
            _ => continue,
        };
        for (got, want, what) in [
            (&t.w, &w, "conformal weight"),
            (&t.w_hat, &wh, "shifted weight"),
            (&t.reldim, &rd, "relative dimension"),
        ] {
            c.eq_rat(got, want, || {
                format!(
                    "{} of the {} gradient, spinor system n={} j={}",
                    what,
                    t.op,
                    sys.n(),
                    sys.j()
                )
            });
        }
    }
}

/// Fiber Casimir, total relative dimension = n, zeroth shifted moment = n.
fn shared_system_checks(c: &mut Checker, sys: &System, fiber_cas: &Rat) {
    let n = rat(sys.n() as i64);
    c.eq_rat(sys.fiber_casimir(), fiber_cas, || {
        format!(
            "fiber Casimir of the {:?} system n={} j={}",
            sys.kind(),
            sys.n(),
            sys.j()
        )
    });
    let total: Rat = sys
        .targets()
        .iter()
        .map(|t| t.reldim.clone())
        .fold(rat(0), |a, b| a + b);
    c.eq_rat(&total, &n, || {
        format!(
            "relative dimensions of the {:?} system n={} j={} do not sum to n",
            sys.kind(),
            sys.n(),
            sys.j()
        )
    });
    c.eq_rat(&sys.shifted_casimir(0), &n, || {
        format!(
            "zeroth shifted moment of the {:?} system n={} j={}",
            sys.kind(),
            sys.n(),
            sys.j()
        )
    });
}

/// E0/E1(/E2) moment sum rules with unnormalized squares on one summand.
fn sum_rule_checks(c: &mut Checker, sys: &System, m: &Member, with_second_moment: bool) {
    let lap = laplacian_ev(m);
    let mut e0 = rat(0);
    let mut e1 = rat(0);
    let mut e2 = rat(0);
    for t in sys.targets() {
        let x = bare_square(m, t.op);
        e0 += x.clone();
        e1 += t.w.clone() * x.clone();
        if with_second_moment {
            e2 += sys.a_val(&t.w_hat) * x;
        }
    }
    let fc = sys.fiber_casimir().clone();
    c.eq_rat(&e0, &(lap - fc.clone()), || {
        format!("gradient sum rule on {}", member_desc(m))
    });
    c.eq_rat(&e1, &(-fc), || {
        format!("first moment rule on {}", member_desc(m))
    });
    if with_second_moment {
        c.eq_rat(&e2, &sys.r4(), || {
            format!("second moment rule on {}", member_desc(m))
        });
    }
}

/// Evaluate a derived identity on one summand at curvature `curv` (operator
/// eigenvalues scale linearly with the curvature normalization).
fn identity_member_check(c: &mut Checker, idy: &Identity, m: &Member, curv: &Rat, what: &str) {
    let mut rhs = idy.curvature_constant.clone() * curv.clone();
    for (op, a) in &idy.terms {
        rhs += a.clone() * (curv.clone() * bare_square(m, *op));
    }
    let lhs = curv.clone() * laplacian_ev(m);
    c.eq_rat(&lhs, &rhs, || {
        format!(
            "{what} at curvature {} on {}",
            format_rational(curv),
            member_desc(m)
        )
    });
}

fn run_weitzenboeck(p: &VerifyParams) -> SuiteReport {
    let mut c = Checker::new();
    let curvatures = [rat(2), frac(1, 3)];
    for n in p.n_min..=p.n_max {
        let ni = n as i64;
        for j in 0..=p.j_max {
            let ji = j as i64;

            // ---- higher-spin spinors
            let sys = System::new(FamilyKind::Spinor, n, j).expect("n >= 3");
            spinor_table_checks(&mut c, &sys);
            shared_system_checks(
                &mut c,
                &sys,
                &(rat(ji * (ni + ji - 1)) + frac(ni * (ni - 1), 8)),
            );
            let wf1 = sys
                .derive(&[OperatorKind::DiracSquared, OperatorKind::TMinus])
                .expect("Dirac square is always a target");
            c.eq_rat(
                wf1.coefficient(OperatorKind::DiracSquared).expect("kept"),
                &frac((ni + 2 * ji) * (ni - 2), ni + 2 * ji - 2),
                || format!("first spinor identity, Dirac-square coefficient, n={n} j={j}"),
            );
            if j >= 1 {
                c.eq_rat(
                    wf1.coefficient(OperatorKind::TMinus).expect("kept"),
                    &frac(4 * (ni + ji - 2), ni + 2 * ji - 2),
                    || format!("first spinor identity, lowering coefficient, n={n} j={j}"),
                );
            }
            c.eq_rat(
                &wf1.curvature_constant,
                &(rat(ji * (ni + ji - 2)) - frac(ni * (ni - 1), 8)),
                || format!("first spinor identity, curvature constant, n={n} j={j}"),
            );
            let wf2 = if j >= 1 {
                let idy = sys
                    .derive(&[OperatorKind::TPlus, OperatorKind::DiracSquared])
                    .expect("both kept gradients are present");
                c.eq_rat(
                    idy.coefficient(OperatorKind::TPlus).expect("kept"),
                    &frac(4 * (ji + 1), ni + 2 * ji),
                    || format!("second spinor identity, raising coefficient, n={n} j={j}"),
                );
                c.eq_rat(
                    idy.coefficient(OperatorKind::DiracSquared).expect("kept"),
                    &frac((ni + 2 * ji - 2) * (ni - 2), ni + 2 * ji),
                    || format!("second spinor identity, Dirac-square coefficient, n={n} j={j}"),
                );
                c.eq_rat(
                    &idy.curvature_constant,
                    &(rat((ji + 1) * (ni + ji - 1)) - frac(ni * (ni - 1), 8)),
                    || format!("second spinor identity, curvature constant, n={n} j={j}"),
                );
                Some(idy)
            } else {
                None
            };
            let bundle = system_bundle(FamilyKind::Spinor, n, j).expect("n >= 3");
            for (idx, m) in bundle.decompose(p.k_max).iter().enumerate() {
                sum_rule_checks(&mut c, &sys, m, true);
                identity_member_check(&mut c, &wf1, m, &rat(1), "first spinor identity");
                if let Some(idy) = &wf2 {
                    identity_member_check(&mut c, idy, m, &rat(1), "second spinor identity");
                }
                if idx == 0 {
                    for curv in &curvatures {
                        identity_member_check(&mut c, &wf1, m, curv, "first spinor identity");
                    }
                }
            }

            // ---- trace-free symmetric tensors
            let sys2 = System::new(FamilyKind::Sym, n, j).expect("n >= 3");
            shared_system_checks(&mut c, &sys2, &rat(ji * (ni + ji - 2)));
            let wt = if j >= 1 {
                for (op, want) in [
                    (OperatorKind::TPlus, rat(ji)),
                    (OperatorKind::U, rat(-1)),
                    (OperatorKind::TMinus, rat(-(ni + ji - 2))),
                ] {
                    match sys2.targets().iter().find(|t| t.op == op) {
                        Some(t) => c.eq_rat(&t.w, &want, || {
                            format!("conformal weight of the {op} gradient, symmetric system n={n} j={j}")
                        }),
                        None => c.is(false, || {
                            format!("{op} gradient missing from the symmetric system n={n} j={j}")
                        }),
                    }
                }
                let idy = sys2
                    .derive(&[OperatorKind::TPlus, OperatorKind::TMinus])
                    .expect("both kept gradients are present");
                c.eq_rat(
                    idy.coefficient(OperatorKind::TPlus).expect("kept"),
                    &rat(ji + 1),
                    || format!("symmetric identity, raising coefficient, n={n} j={j}"),
                );
                c.eq_rat(
                    idy.coefficient(OperatorKind::TMinus).expect("kept"),
                    &rat(-(ni + ji - 3)),
                    || format!("symmetric identity, lowering coefficient, n={n} j={j}"),
                );
                c.eq_rat(
                    &idy.curvature_constant,
                    &rat(2 * ji * (ni + ji - 2)),
                    || format!("symmetric identity, curvature constant, n={n} j={j}"),
                );
                Some(idy)
            } else {
                None
            };
            let bundle2 = system_bundle(FamilyKind::Sym, n, j).expect("n >= 3");
            for (idx, m) in bundle2.decompose(p.k_max).iter().enumerate() {
                sum_rule_checks(&mut c, &sys2, m, false);
                if let Some(idy) = &wt {
                    identity_member_check(&mut c, idy, m, &rat(1), "symmetric identity");
                    if idx == 0 {
                        for curv in &curvatures {
                            identity_member_check(&mut c, idy, m, curv, "symmetric identity");
                        }
                    }
                }
            }
        }

        // ---- spinor-valued forms
        for j in 0..=p.j_max.min(n / 2) {
            let ji = j as i64;
            let sys3 = System::new(FamilyKind::SpinorForm, n, j).expect("degree validated");
            shared_system_checks(
                &mut c,
                &sys3,
                &(rat(ji * (ni - ji + 1)) + frac(ni * (ni - 1), 8)),
            );
            // the three eliminated lines need all four gradients present and
            // nonsingular elimination: j >= 1 and n >= 2j + 2
            let line2 = if j >= 1 && n >= 2 * j + 2 {
                let idy = sys3
                    .derive(&[OperatorKind::DiracSquared, OperatorKind::TMinus])
                    .expect("elimination is nonsingular here");
                c.eq_rat(
                    idy.coefficient(OperatorKind::DiracSquared).expect("kept"),
                    &frac((ni + 2) * (ni - 2 * ji), ni - 2 * ji + 2),
                    || format!("second spinor-form line, Dirac-square coefficient, n={n} j={j}"),
                );
                c.eq_rat(
                    idy.coefficient(OperatorKind::TMinus).expect("kept"),
                    &frac(
                        4 * (ni - 2 * ji + 1) * (ni - ji + 2),
                        (ni - 2 * ji + 3) * (ni - 2 * ji + 2),
                    ),
                    || format!("second spinor-form line, lowering coefficient, n={n} j={j}"),
                );
                c.eq_rat(
                    &idy.curvature_constant,
                    &(rat(ji * (ni - ji)) - frac(ni * (ni - 1), 8)),
                    || format!("second spinor-form line, curvature constant, n={n} j={j}"),
                );
                let l3 = sys3
                    .derive(&[OperatorKind::TPlus, OperatorKind::DiracSquared])
                    .expect("elimination is nonsingular here");
                c.eq_rat(
                    l3.coefficient(OperatorKind::TPlus).expect("kept"),
                    &frac(
                        -4 * (ni - 2 * ji + 1) * (ji + 1),
                        (ni - 2 * ji - 1) * (ni - 2 * ji),
                    ),
                    || format!("third spinor-form line, raising coefficient, n={n} j={j}"),
                );
                c.eq_rat(
                    l3.coefficient(OperatorKind::DiracSquared).expect("kept"),
                    &frac((ni - 2 * ji + 2) * (ni + 2), ni - 2 * ji),
                    || format!("third spinor-form line, Dirac-square coefficient, n={n} j={j}"),
                );
                c.eq_rat(
                    &l3.curvature_constant,
                    &(rat((ji - 1) * (ni - ji + 1)) - frac(ni * (ni - 1), 8)),
                    || format!("third spinor-form line, curvature constant, n={n} j={j}"),
                );
                let l4 = sys3
                    .derive(&[OperatorKind::U, OperatorKind::TPlus])
                    .expect("elimination is nonsingular here");
                c.eq_rat(
                    l4.coefficient(OperatorKind::U).expect("kept"),
                    &frac((ni - ji + 2) * (ni + 2), (ni - ji + 1) * (ni + 1)),
                    || format!("fourth spinor-form line, twisting coefficient, n={n} j={j}"),
                );
                c.eq_rat(
                    l4.coefficient(OperatorKind::TPlus).expect("kept"),
                    &frac(
                        (ni - 2 * ji) * (ni - 2 * ji + 1),
                        (ni - 2 * ji - 1) * (ni - ji + 1),
                    ),
                    || format!("fourth spinor-form line, raising coefficient, n={n} j={j}"),
                );
                c.eq_rat(
                    &l4.curvature_constant,
                    &(rat(ji * (ni - ji + 2)) + frac(ni * (ni + 1), 8)),
                    || format!("fourth spinor-form line, curvature constant, n={n} j={j}"),
                );
                Some(idy)
            } else {
                None
            };
            let bundle3 = system_bundle(FamilyKind::SpinorForm, n, j).expect("degree validated");
            for (idx, m) in bundle3.decompose(p.k_max).iter().enumerate() {
                sum_rule_checks(&mut c, &sys3, m, true);
                if let Some(idy) = &line2 {
                    identity_member_check(&mut c, idy, m, &rat(1), "second spinor-form line");
                    if idx == 0 {
                        for curv in &curvatures {
                            identity_member_check(&mut c, idy, m, curv, "second spinor-form line");
                        }
                    }
                }
            }
        }

        // ---- differential forms: the two-identity path with weights
        //      (1, -j, j-n) on (C, up, down) unnormalized squares
        for j in 0..=p.j_max.min(n / 2) {
            let ji = j as i64;
            let bundle = Bundle::new(n, BundleKind::Form { j }).expect("degree validated");
            for m in bundle.decompose(p.k_max) {
                let lap = laplacian_ev(&m);
                let xc = operator_ev(&m, OperatorKind::CStarC).expect("form operator");
                let xd = operator_ev(&m, OperatorKind::DStarD).expect("form operator")
                    / rat(ji + 1);
                let xds = operator_ev(&m, OperatorKind::DDStar).expect("form operator")
                    / rat(ni - ji + 1);
                let fib = rat(ji * (ni - ji));
                c.eq_rat(
                    &(xc.clone() + xd.clone() + xds.clone()),
                    &(lap - fib.clone()),
                    || format!("form gradient sum rule on {}", member_desc(&m)),
                );
                c.eq_rat(
                    &(xc - rat(ji) * xd + rat(ji - ni) * xds),
                    &(-fib),
                    || format!("form weighted sum rule on {}", member_desc(&m)),
                );
            }
        }
    }
    c.into_report(Suite::Weitzenboeck)
}

// ---------------------------------------------------------------------------
// suite: factorization

fn report_checks(
    c: &mut Checker,
    result: Result<Vec<FactorReport>, FactorError>,
    expect_index: impl Fn(&Member) -> usize,
    what: &str,
) {
    match result {
        Ok(reports) => {
            for r in &reports {
                c.is(r.product.is_zero(), || {
                    format!("{what} factor product nonzero on {}", member_desc(&r.member))
                });
                c.is(r.factor_evs[r.vanishing_index].is_zero(), || {
                    format!(
                        "{what} reported vanishing factor is nonzero on {}",
                        member_desc(&r.member)
                    )
                });
                let want = expect_index(&r.member);
                c.is(r.vanishing_index == want, || {
                    format!(
                        "{what} vanishing index {} differs from {want} on {}",
                        r.vanishing_index,
                        member_desc(&r.member)
                    )
                });
            }
        }
        Err(e) => c.is(false, || format!("{what} factorization: {e}")),
    }
}

fn run_factorization(p: &VerifyParams) -> SuiteReport {
    let mut c = Checker::new();
    for n in p.n_min..=p.n_max {
        let ni = n as i64;
        for j in 0..=p.j_max {
            let ji = j as i64;

            // spinor Dirac-square product, one vanishing factor per summand
            let bundle = Bundle::new(n, BundleKind::Spinor { j }).expect("n >= 3");
            report_checks(
                &mut c,
                verify_factorization(&bundle, p.k_max),
                |m| m.s.expect("spinor member") as usize,
                "spinor",
            );
            // boundary factors reproduce the raising/lowering squares
            for m in bundle.decompose(p.k_max) {
                let lap = laplacian_ev(&m);
                let d2 = operator_ev(&m, OperatorKind::DiracSquared).expect("spinor operator");
                let bf = |sp: i64| -> Rat {
                    d2.clone()
                        - frac((ni + 2 * sp - 2).pow(2), (ni + 2 * ji - 2).pow(2))
                            * (lap.clone()
                                - (rat(sp * (ni + sp - 2)) - frac(ni * (ni - 1), 8)))
                };
                if j >= 1 {
                    let tm = operator_ev(&m, OperatorKind::TMinus).expect("spinor operator");
                    c.eq_rat(&tm, &(-bf(ji)), || {
                        format!("lowering square vs top factor on {}", member_desc(&m))
                    });
                }
                let tp = operator_ev(&m, OperatorKind::TPlus).expect("spinor operator");
                c.eq_rat(
                    &tp,
                    &(-frac((ni + 2 * ji - 2).pow(2), (ni + 2 * ji).pow(2)) * bf(ji + 1)),
                    || format!("raising square vs extended factor on {}", member_desc(&m)),
                );
            }

            // symmetric product
            let bundle2 = Bundle::new(n, BundleKind::Sym { j }).expect("n >= 3");
            report_checks(
                &mut c,
                verify_factorization(&bundle2, p.k_max),
                |m| m.s.expect("symmetric member") as usize,
                "symmetric",
            );

            // twistor-square factorization: own factor vanishes everywhere,
            // level-zero summands pin the Laplace eigenvalue
            match tplus_factorization_check(n, j, p.k_max) {
                Ok(rep) => {
                    c.is(
                        rep.members_checked == ((j + 1) * (p.k_max + 1)) as usize,
                        || format!("twistor factorization member count, n={n} j={j}"),
                    );
                    c.is(rep.kernel_members == (j + 1) as usize, || {
                        format!("twistor factorization level-zero count, n={n} j={j}")
                    });
                }
                Err(e) => c.is(false, || format!("twistor factorization n={n} j={j}: {e}")),
            }

            // the factorization grades each catalog by the inner parameter
            for bk in [BundleKind::Spinor { j }, BundleKind::Sym { j }] {
                let b = Bundle::new(n, bk).expect("n >= 3");
                match grading_decomposition(&b, p.k_max) {
                    Ok(map) => {
                        let total: usize = map.values().map(|v| v.len()).sum();
                        c.is(total == b.decompose(p.k_max).len(), || {
                            format!("grading of {bk:?} on S^{n} does not partition the catalog")
                        });
                        let aligned = map
                            .iter()
                            .all(|(s, v)| v.iter().all(|m| m.s == Some(*s)));
                        c.is(aligned, || {
                            format!("grading of {bk:?} on S^{n} has a misfiled summand")
                        });
                    }
                    Err(e) => c.is(false, || format!("grading of {bk:?} on S^{n}: {e}")),
                }
            }
        }

        // spinor-valued forms: two factors, up kills the second, down the first
        for j in 0..=p.j_max.min(n / 2) {
            let b = Bundle::new(n, BundleKind::SpinorForm { j }).expect("degree validated");
            report_checks(
                &mut c,
                verify_factorization(&b, p.k_max),
                |m| usize::from(m.family == Family::SpinorFormUp),
                "spinor-form",
            );
        }
    }
    c.into_report(Suite::Factorization)
}

// ---------------------------------------------------------------------------
// suite: crosscheck

fn sp_lap_cf(n: i64, j: i64, k: i64, s: i64) -> Rat {
    let t = rat(j + k) + frac(n, 2);
    t.clone() * t + rat(s * (s + n - 2)) - frac(n * (n - 1), 8)
}

fn run_crosscheck(p: &VerifyParams) -> SuiteReport {
    let mut c = Checker::new();
    for n in p.n_min..=p.n_max {
        let ni = n as i64;

        // ---- classical Dirac operator on plain spinors
        let s0 = Bundle::new(n, BundleKind::Spinor { j: 0 }).expect("n >= 3");
        for m in s0.decompose(p.k_max) {
            let ki = m.k as i64;
            let want = {
                let t = frac(ni, 2) + rat(ki);
                t.clone() * t
            };
            c.eq_rat(
                &operator_ev(&m, OperatorKind::DiracSquared).expect("spinor operator"),
                &want,
                || format!("classical Dirac square at n={n} k={}", m.k),
            );
            let dim = (BigInt::one() << (n as usize / 2 + 1))
                * binom_big((ni + ki - 1) as u64, m.k as u64);
            c.eq_big(&m.total_dim(), &dim, || {
                format!("classical Dirac eigenspace dimension at n={n} k={}", m.k)
            });
        }

        // ---- spinor family: Laplace closed form; Dirac square tied to the
        //      Casimir through the vanishing-factor identity
        for j in 0..=p.j_max {
            let ji = j as i64;
            let b = Bundle::new(n, BundleKind::Spinor { j }).expect("n >= 3");
            for m in b.decompose(p.k_max) {
                let (ki, si) = (m.k as i64, m.s.expect("spinor member") as i64);
                let lap = laplacian_ev(&m);
                c.eq_rat(&lap, &sp_lap_cf(ni, ji, ki, si), || {
                    format!("spinor Laplace closed form on {}", member_desc(&m))
                });
                let d2 = operator_ev(&m, OperatorKind::DiracSquared).expect("spinor operator");
                let want = frac((ni + 2 * si - 2).pow(2), (ni + 2 * ji - 2).pow(2))
                    * (lap.clone() - (rat(si * (ni + si - 2)) - frac(ni * (ni - 1), 8)));
                c.eq_rat(&d2, &want, || {
                    format!("Dirac square against the Casimir on {}", member_desc(&m))
                });
            }

            // symmetric family Laplace closed form
            let b2 = Bundle::new(n, BundleKind::Sym { j }).expect("n >= 3");
            for m in b2.decompose(p.k_max) {
                let (ki, si) = (m.k as i64, m.s.expect("symmetric member") as i64);
                let want = rat(ji + ki) * rat(ni + ki + ji - 1) + rat(si * (si + ni - 3));
                c.eq_rat(&laplacian_ev(&m), &want, || {
                    format!("symmetric Laplace closed form on {}", member_desc(&m))
                });
            }
        }

        // ---- form-type families: Laplace closed forms incl. middle degrees
        for j in 0..=p.j_max.min(n / 2) {
            let ji = j as i64;
            let b = Bundle::new(n, BundleKind::Form { j }).expect("degree validated");
            for m in b.decompose(p.k_max) {
                let ki = m.k as i64;
                let want = if m.family == Family::FormUp {
                    rat(ki + ji + 1) * rat(ni + ki - ji)
                } else {
                    rat(ki + ji) * rat(ni - ji + ki + 1)
                };
                c.eq_rat(&laplacian_ev(&m), &want, || {
                    format!("form Laplace closed form on {}", member_desc(&m))
                });
            }
            let be = Bundle::new(n, BundleKind::SpinorForm { j }).expect("degree validated");
            for m in be.decompose(p.k_max) {
                let ki = m.k as i64;
                let poly = if m.family == Family::SpinorFormUp {
                    rat(ki + ji + 1) * rat(ni - ji + ki + 1)
                } else {
                    rat(ki + ji) * rat(ni - ji + ki + 2)
                };
                c.eq_rat(&laplacian_ev(&m), &(poly + frac(ni * (ni + 1), 8)), || {
                    format!("spinor-form Laplace closed form on {}", member_desc(&m))
                });
            }
        }

        // ---- intertwining relations between adjacent degrees
        for j in 1..=p.j_max {
            let ji = j as i64;
            let hi = ks_map(&Bundle::new(n, BundleKind::Spinor { j }).expect("n >= 3"), p.k_max);
            let lo = ks_map(
                &Bundle::new(n, BundleKind::Spinor { j: j - 1 }).expect("n >= 3"),
                p.k_max + 1,
            );
            for k in 0..=p.k_max {
                for s in 0..j {
                    let lhs = operator_ev(&hi[&(k, s)], OperatorKind::DiracSquared)
                        .expect("spinor operator");
                    let rhs = frac((ni + 2 * ji - 4).pow(2), (ni + 2 * ji - 2).pow(2))
                        * operator_ev(&lo[&(k + 1, s)], OperatorKind::DiracSquared)
                            .expect("spinor operator");
                    c.eq_rat(&lhs, &rhs, || {
                        format!("spinor Dirac-square intertwining n={n} j={j} k={k} s={s}")
                    });
                }
            }
        }
        for j in 1..=p.j_max.min(n / 2) {
            let ji = j as i64;
            let (_, down_j) = ud_maps(
                &Bundle::new(n, BundleKind::SpinorForm { j }).expect("degree validated"),
                p.k_max,
            );
            let (up_lo, _) = ud_maps(
                &Bundle::new(n, BundleKind::SpinorForm { j: j - 1 }).expect("degree validated"),
                p.k_max,
            );
            for k in 0..=p.k_max {
                let lhs = operator_ev(&down_j[&k], OperatorKind::DiracSquared)
                    .expect("spinor-form operator");
                let rhs = frac((ni - 2 * ji).pow(2), (ni - 2 * ji + 2).pow(2))
                    * operator_ev(&up_lo[&k], OperatorKind::DiracSquared)
                        .expect("spinor-form operator");
                c.eq_rat(&lhs, &rhs, || {
                    format!("spinor-form Dirac-square intertwining n={n} j={j} k={k}")
                });
            }
        }
        if n / 2 >= 1 {
            for j in 0..=p.j_max.min(n / 2 - 1) {
                let (up_j, _) = ud_maps(
                    &Bundle::new(n, BundleKind::Form { j }).expect("degree validated"),
                    p.k_max,
                );
                let (_, down_hi) = ud_maps(
                    &Bundle::new(n, BundleKind::Form { j: j + 1 }).expect("degree validated"),
                    p.k_max,
                );
                for k in 0..=p.k_max {
                    c.eq_rat(
                        &laplacian_ev(&up_j[&k]),
                        &laplacian_ev(&down_hi[&k]),
                        || format!("co-exact/exact Laplace matching n={n} j={j} k={k}"),
                    );
                }
            }
        }
        // lowering square at degree j+1 is a fixed ratio of the raising
        // square one degree and one level below (trace-free symmetric)
        if n >= 4 {
            for j in 0..=p.j_max.min(3) {
                let ji = j as i64;
                let hi = ks_map(
                    &Bundle::new(n, BundleKind::Sym { j: j + 1 }).expect("n >= 3"),
                    p.k_max,
                );
                let lo = ks_map(&Bundle::new(n, BundleKind::Sym { j }).expect("n >= 3"), p.k_max + 1);
                let ratio = frac((ji + 1) * (ni + 2 * ji - 2), (ni + ji - 2) * (ni + 2 * ji));
                for k in 0..=p.k_max {
                    for s in 0..=j + 1 {
                        let lhs = operator_ev(&hi[&(k, s)], OperatorKind::TMinus)
                            .expect("symmetric operator");
                        let rhs = if s <= j {
                            ratio.clone()
                                * operator_ev(&lo[&(k + 1, s)], OperatorKind::TPlus)
                                    .expect("symmetric operator")
                        } else {
                            rat(0)
                        };
                        c.eq_rat(&lhs, &rhs, || {
                            format!("symmetric raising/lowering link n={n} j={j} k={k} s={s}")
                        });
                    }
                }
            }
        }

        // ---- degree-0 spinor-valued forms carry the plain spinor spectrum
        let e0 = Bundle::new(n, BundleKind::SpinorForm { j: 0 }).expect("n >= 3");
        let mut sp_levels: BTreeMap<u32, (Rat, BigInt)> = BTreeMap::new();
        for m in s0.decompose(p.k_max) {
            sp_levels.insert(
                m.k,
                (
                    operator_ev(&m, OperatorKind::DiracSquared).expect("spinor operator"),
                    m.total_dim(),
                ),
            );
        }
        let mut ef_levels: BTreeMap<u32, (Rat, BigInt)> = BTreeMap::new();
        for m in e0.decompose(p.k_max) {
            let d2 = operator_ev(&m, OperatorKind::DiracSquared).expect("spinor-form operator");
            if m.family == Family::SpinorFormDown {
                ef_levels.insert(0, (d2, m.total_dim()));
            } else if m.k + 1 <= p.k_max {
                ef_levels.insert(m.k + 1, (d2, m.total_dim()));
            }
        }
        c.is(sp_levels.len() == ef_levels.len(), || {
            format!("degree-0 level counts differ between the two spinor catalogs on S^{n}")
        });
        for (k, (d2, dim)) in &sp_levels {
            match ef_levels.get(k) {
                Some((d2e, dime)) => {
                    c.eq_rat(d2, d2e, || {
                        format!("degree-0 Dirac-square value at level {k} on S^{n}")
                    });
                    c.eq_big(dim, dime, || {
                        format!("degree-0 eigenspace dimension at level {k} on S^{n}")
                    });
                }
                None => c.is(false, || {
                    format!("level {k} missing from the degree-0 spinor-form catalog on S^{n}")
                }),
            }
        }

        // ---- kernel rules and positivity, all families and operators
        for j in 0..=p.j_max {
            for kind in kinds_at(j) {
                let bundle = match Bundle::new(n, kind) {
                    Ok(b) => b,
                    Err(_) => continue,
                };
                let members = bundle.decompose(p.k_max);
                for op in applicable_ops(kind) {
                    let rule = kernel_rule(kind, n, *op).expect("operator applies");
                    for m in &members {
                        match operator_ev(m, *op) {
                            Ok(ev) => {
                                c.is(signum(&ev) >= 0, || {
                                    format!(
                                        "negative eigenvalue {} of {op} on {}",
                                        format_rational(&ev),
                                        member_desc(m)
                                    )
                                });
                                c.is(ev.is_zero() == rule.matches(m), || {
                                    format!("kernel rule mismatch for {op} on {}", member_desc(m))
                                });
                            }
                            // U on trace-free symmetric tensors over S^3 is
                            // only defined by extrapolation; fenced elsewhere
                            Err(SpectraError::SymUOnS3) => {}
                            Err(e) => c.is(false, || {
                                format!("unexpected error for {op} on {}: {e}", member_desc(m))
                            }),
                        }
                    }
                }
            }
        }

        // ---- Hodge decomposition of the spinor-form Laplacian + spectral gaps
        for j in 0..=p.j_max.min(n / 2) {
            let ji = j as i64;
            let b = Bundle::new(n, BundleKind::SpinorForm { j }).expect("degree validated");
            let scalar_floor = frac(ni * (ni + 1), 8);
            for m in b.decompose(p.k_max) {
                let up = m.family == Family::SpinorFormUp;
                let lap = laplacian_ev(&m);
                let applicable = if up {
                    ni - 2 * ji - 1 > 0
                } else {
                    j >= 1 && ni - 2 * ji - 1 != 0
                };
                if applicable {
                    let tp = operator_ev(&m, OperatorKind::TPlus).expect("spinor-form operator");
                    let tm = operator_ev(&m, OperatorKind::TMinus).expect("spinor-form operator");
                    let rhs = frac((ni - 2 * ji).pow(2), 4 * (ni - 2 * ji - 1)) * tp
                        + frac((ni - 2 * ji + 2).pow(2), 4 * (ni - 2 * ji + 1)) * tm
                        + scalar_floor.clone();
                    c.eq_rat(&lap, &rhs, || {
                        format!("Hodge decomposition of the Laplacian on {}", member_desc(&m))
                    });
                }
                if j >= 1 {
                    c.is(lap > scalar_floor, || {
                        format!(
                            "Laplace eigenvalue at or below the scalar floor on {}",
                            member_desc(&m)
                        )
                    });
                    if !up {
                        c.is(
                            lap.clone() - scalar_floor.clone() >= rat(ji * (ni - ji + 2)),
                            || format!("down-family gap below j(n-j+2) on {}", member_desc(&m)),
                        );
                    }
                }
            }
        }
    }
    c.into_report(Suite::Crosscheck)
}

/// Members keyed by (level, inner parameter), for the spinor/symmetric kinds.
fn ks_map(b: &Bundle, k_max: u32) -> BTreeMap<(u32, u32), Member> {
    b.decompose(k_max)
        .into_iter()
        .map(|m| ((m.k, m.s.expect("inner parameter")), m))
        .collect()
}

/// Members keyed by level, split into the (up, down) families.
fn ud_maps(b: &Bundle, k_max: u32) -> (BTreeMap<u32, Member>, BTreeMap<u32, Member>) {
    let mut up = BTreeMap::new();
    let mut down = BTreeMap::new();
    for m in b.decompose(k_max) {
        match m.family {
            Family::FormUp | Family::SpinorFormUp => {
                up.insert(m.k, m);
            }
            _ => {
                down.insert(m.k, m);
            }
        }
    }
    (up, down)
}

// ---------------------------------------------------------------------------
// suite: killing

fn run_killing(p: &VerifyParams) -> SuiteReport {
    let mut c = Checker::new();
    for n in p.n_min..=p.n_max {
        let ni = n as i64;
        let k1 = killing_space(n, 1);
        c.eq_big(&k1.total_dim, &BigInt::from(ni * (ni + 1) / 2), || {
            format!("rank-1 Killing space dimension on S^{n}")
        });
        let k2 = killing_space(n, 2);
        c.eq_big(&k2.total_dim, &killing_two_plethysm_dim(n), || {
            format!("rank-2 Killing space vs plethysm count on S^{n}")
        });
        let graded: BigInt = k2.graded_pieces.values().cloned().sum();
        c.eq_big(&graded, &k2.total_dim, || {
            format!("graded layers of the rank-2 Killing space do not sum on S^{n}")
        });

        // primitive chains exist; the parity-excluded member does not
        for j in 2..=5u32 {
            for i in 0..=j / 2 {
                let s = j - 2 * i;
                for t in 0..=i {
                    c.is(sym_member_exists(n, j - 2 * t, 2 * t, s), || {
                        format!(
                            "chain member at degree {} level {} missing on S^{n} (rank {j}, layer {i})",
                            j - 2 * t,
                            2 * t
                        )
                    });
                }
                if i >= 1 {
                    c.is(!sym_member_exists(n, j - 2 * i, 2 * i, j - 2 * i + 1), || {
                        format!(
                            "parity-excluded member unexpectedly present on S^{n} (rank {j}, layer {i})"
                        )
                    });
                }
            }
        }

        // Killing and co-Killing forms: level-zero members, annihilated by
        // the conformal operator and the complementary exactness operator
        for j in 0..=p.j_max.min(n / 2) {
            match killing_forms(n, j) {
                Ok((upm, downm)) => {
                    c.is(upm.k == 0 && downm.k == 0, || {
                        format!("Killing {j}-form members not at level zero on S^{n}")
                    });
                    match killing_form_operator_check(n, j) {
                        Ok(ok) => c.is(ok, || {
                            format!(
                                "operators fail to vanish on the Killing {j}-forms of S^{n}"
                            )
                        }),
                        Err(e) => c.is(false, || {
                            format!("operator check on Killing {j}-forms of S^{n}: {e}")
                        }),
                    }
                }
                Err(e) => c.is(false, || format!("Killing {j}-forms of S^{n}: {e}")),
            }
        }

        // frozen fixtures on the small spheres
        if n == 3 {
            c.eq_big(&k2.total_dim, &BigInt::from(20), || {
                "rank-2 Killing space of S^3".to_string()
            });
            let dims: Vec<BigInt> = primitive_killing(3, 2).iter().map(|q| q.dim.clone()).collect();
            c.is(dims == vec![BigInt::from(10), BigInt::from(9)], || {
                format!("primitive rank-2 pieces of S^3: {dims:?}")
            });
        }
        if n == 4 {
            c.eq_big(&k2.total_dim, &BigInt::from(50), || {
                "rank-2 Killing space of S^4".to_string()
            });
            let dims: Vec<BigInt> = primitive_killing(4, 2).iter().map(|q| q.dim.clone()).collect();
            c.is(dims == vec![BigInt::from(35), BigInt::from(14)], || {
                format!("primitive rank-2 pieces of S^4: {dims:?}")
            });
            if let Ok((upm, _)) = killing_forms(4, 2) {
                c.eq_big(&upm.total_dim(), &BigInt::from(10), || {
                    "Killing 2-forms of S^4".to_string()
                });
            }
        }
    }
    c.into_report(Suite::Killing)
}

// ---------------------------------------------------------------------------
