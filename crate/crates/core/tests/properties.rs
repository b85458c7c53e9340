use hfnorm::matrices::{r_circulant_from_row, DenseMatrix};
use hfnorm::multiplier::Multiplier;
use hfnorm::norms::{
    frobenius_norm, spectral_norm_circulant, spectral_norm_jacobi, spectral_norm_power,
};
use hfnorm::scalar::exact_ratio;
use hfnorm::theorems::{relative_error, Verifier};
use num_complex::Complex64;
use proptest::prelude::*;

fn multiplier() -> impl Strategy<Value = Multiplier> {
    (-8i64..=8, 1i64..=4, -8i64..=8, 1i64..=4)
        .prop_map(|(a, b, c, d)| Multiplier::rect(exact_ratio(a, b), exact_ratio(c, d)))
}

fn complex_row(max: usize) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec(
        (-5.0f64..5.0, -5.0f64..5.0).prop_map(|(a, b)| Complex64::new(a, b)),
        1..=max,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn euclidean_forms_agree_exactly(n in 1usize..=16, k in 1usize..=3, r in multiplier()) {
        let v = Verifier::new(16, 3).unwrap();
        let closed = v.euclidean_closed_form_sq(n, k, r.modulus_sq()).unwrap();
        prop_assert_eq!(&closed, &v.euclidean_weighted_sum_sq(n, k, r.modulus_sq()).unwrap());
        prop_assert!(v.hyperharmonic_euclidean(n, k, &r).unwrap().passed);
    }

    #[test]
    fn sandwich_holds_for_rational_multipliers(n in 1usize..=12, k in 1usize..=3, r in multiplier()) {
        let v = Verifier::new(12, 3).unwrap();
        let rep = v.spectral_sandwich(n, k, &r).unwrap();
        prop_assert!(rep.passed, "{:?}", rep);
    }

    #[test]
    fn dft_matches_jacobi_on_circulants(row in complex_row(24)) {
        let a = r_circulant_from_row(&row, Complex64::new(1.0, 0.0)).unwrap();
        let dft = spectral_norm_circulant(&row).unwrap().value;
        let jac = spectral_norm_jacobi(&a).unwrap().value;
        prop_assert!((dft - jac).abs() <= 1e-12 || relative_error(dft, jac) <= 1e-9, "{} vs {}", dft, jac);
    }

    #[test]
    fn power_matches_jacobi(n in 1usize..=10, seed in any::<u64>()) {
        let mut state = seed;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        };
        let a = DenseMatrix::from_fn(n, n, |_, _| Complex64::new(next(), next())).unwrap();
        let jac = spectral_norm_jacobi(&a).unwrap().value;
        let pow = spectral_norm_power(&a, 1e-13, 100_000).unwrap().value;
        prop_assert!(relative_error(jac, pow) <= 1e-6, "{} vs {}", jac, pow);
    }

    #[test]
    fn spectral_between_frobenius_bounds(row in complex_row(16), re in -3.0f64..3.0, im in -3.0f64..3.0) {
        let a = r_circulant_from_row(&row, Complex64::new(re, im)).unwrap();
        let s = spectral_norm_jacobi(&a).unwrap().value;
        let e = frobenius_norm(&a).unwrap().value;
        let n = row.len() as f64;
        prop_assert!(s <= e * (1.0 + 1e-12) + 1e-12);
        prop_assert!(e / n.sqrt() <= s * (1.0 + 1e-12) + 1e-12);
    }
}
