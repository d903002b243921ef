//! Randomized property tests: text round-trips, dominant-weight invariants,
//! restriction conservation, and serialization losslessness.

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use sphere_spectra::branching::{branch, contains, Bundle, BundleKind};
use sphere_spectra::output::{from_json, parse_csv, spectrum_line, to_csv, to_json, SpectrumDoc};
use sphere_spectra::rat::{
    format_rational, format_weight_list, frac, half, parse_rational, parse_weight_list, rat,
    signum,
};
use sphere_spectra::rep::{Algebra, Series};
use sphere_spectra::spectra::{applicable_ops, laplacian_ev, operator_ev};
use sphere_spectra::Rat;

/// A random dominant so(n) weight: sorted non-negative entries, one parity
/// class, and on even n an optional sign on the last entry.
fn dominant_weight(n: u32) -> impl Strategy<Value = Vec<Rat>> {
    let alg = Algebra::so(n).unwrap();
    let m = alg.rank();
    let series = alg.series();
    (
        proptest::collection::vec(0i64..=6, m),
        any::<bool>(),
        any::<bool>(),
    )
        .prop_map(move |(mut es, half_class, flip)| {
            es.sort_unstable_by(|a, b| b.cmp(a));
            let mut w: Vec<Rat> = es
                .iter()
                .map(|&e| if half_class { half(2 * e + 1) } else { rat(e) })
                .collect();
            if series == Series::D && flip && !w[m - 1].is_zero() {
                let neg = -w[m - 1].clone();
                w[m - 1] = neg;
            }
            w
        })
}

fn algebra_and_weight(lo: u32, hi: u32) -> impl Strategy<Value = (u32, Vec<Rat>)> {
    (lo..=hi).prop_flat_map(|n| dominant_weight(n).prop_map(move |w| (n, w)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_text_round_trip(num in -1_000_000i64..=1_000_000, den in 1i64..=1_000_000) {
        let r = frac(num, den);
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn weight_text_round_trip(
        entries in proptest::collection::vec((-60i64..=60, 1i64..=40), 1..=6)
    ) {
        let w: Vec<Rat> = entries.iter().map(|&(p, q)| frac(p, q)).collect();
        prop_assert_eq!(parse_weight_list(&format_weight_list(&w)).unwrap(), w);
    }

    #[test]
    fn irrep_dim_positive_and_mirror_symmetric((n, w) in algebra_and_weight(3, 11)) {
        let alg = Algebra::so(n).unwrap();
        let r = alg.irrep(&w).unwrap();
        let d = r.dim().unwrap();
        prop_assert!(d > BigInt::from(0));
        prop_assert!(signum(&r.casimir()) >= 0);
        let mir = r.mirror();
        prop_assert_eq!(mir.dim().unwrap(), d);
        prop_assert_eq!(mir.casimir(), r.casimir());
    }

    #[test]
    fn restriction_conserves_dimension((n, w) in algebra_and_weight(4, 11)) {
        let parent = Algebra::so(n).unwrap().irrep(&w).unwrap();
        let list = branch(&parent).unwrap();
        prop_assert!(list.dim_conserved());
        // multiplicity-free: no repeated children
        let mut seen = std::collections::BTreeSet::new();
        for child in list.children() {
            prop_assert!(seen.insert(format_weight_list(child.weight())));
            prop_assert!(contains(&parent, child).unwrap());
        }
    }

    #[test]
    fn restriction_is_mirror_symmetric_on_even_parents((n, w) in algebra_and_weight(5, 11)) {
        // only even so(n) (series D) has a chirality mirror
        prop_assume!(Algebra::so(n).unwrap().series() == Series::D);
        let alg = Algebra::so(n).unwrap();
        let parent = alg.irrep(&w).unwrap();
        let mirrored = parent.mirror();
        let a = branch(&parent).unwrap();
        let b = branch(&mirrored).unwrap();
        let mut ka: Vec<String> = a.children().iter()
            .map(|c| format_weight_list(c.weight())).collect();
        let mut kb: Vec<String> = b.children().iter()
            .map(|c| format_weight_list(c.weight())).collect();
        ka.sort();
        kb.sort();
        prop_assert_eq!(ka, kb);
    }

    #[test]
    fn catalog_eigenvalues_nonnegative_and_serialization_lossless(
        n in 3u32..=7,
        jj in 0u32..=2,
        k_max in 0u32..=3,
        pick in 0usize..4,
    ) {
        let kind = match pick {
            0 => BundleKind::Spinor { j: jj },
            1 => BundleKind::Sym { j: jj },
            2 => BundleKind::Form { j: jj.min(n / 2) },
            _ => BundleKind::SpinorForm { j: jj.min(n / 2) },
        };
        let bundle = Bundle::new(n, kind).unwrap();
        let mut lines = Vec::new();
        for m in bundle.decompose(k_max) {
            prop_assert!(signum(&laplacian_ev(&m)) >= 0);
            for op in applicable_ops(kind) {
                // the one fenced operator value is exercised elsewhere
                if let Ok(ev) = operator_ev(&m, *op) {
                    prop_assert!(signum(&ev) >= 0);
                    lines.push(spectrum_line(&m, *op, &ev));
                }
            }
        }
        let csv = to_csv(&lines);
        prop_assert_eq!(&parse_csv(&csv).unwrap(), &lines);
        let doc = SpectrumDoc {
            command: "spectrum".to_string(),
            params: Default::default(),
            lines,
            status: "ok".to_string(),
            violations: Vec::new(),
        };
        let json = to_json(&doc);
        prop_assert_eq!(from_json(json.as_bytes()).unwrap(), doc);
    }

    #[test]
    fn decoders_never_panic_on_noise(input in "\\PC{0,120}") {
        let _ = parse_rational(&input);
        let _ = parse_weight_list(&input);
        let _ = parse_csv(&input);
        let _ = from_json(input.as_bytes());
    }
}
