//! Values frozen from an independent exact-rational and numpy evaluation.

use approx::assert_relative_eq;
use hfnorm::matrices::{build_r_circulant, RCirculantSpec, RowKind};
use hfnorm::multiplier::Multiplier;
use hfnorm::norms::{frobenius_norm, spectral_norm_jacobi};
use hfnorm::scalar::{exact_int, exact_ratio};
use hfnorm::sequences::{harmonic_fib, hyperharmonic_fib};
use hfnorm::theorems::Verifier;

fn r(s: &str) -> Multiplier {
    s.parse().unwrap()
}

#[test]
fn sequence_values() {
    assert_eq!(harmonic_fib(4), exact_ratio(17, 6));
    assert_eq!(hyperharmonic_fib(3, 3).unwrap(), exact_ratio(19, 2));
    assert_eq!(hyperharmonic_fib(4, 2).unwrap(), exact_ratio(25, 3));
}

#[test]
fn spectral_closed_forms() {
    let v = Verifier::new(16, 1).unwrap();
    assert_eq!(v.harmonic_spectral(8).unwrap().closed_form, 13853.0 / 780.0);
    assert_relative_eq!(
        v.harmonic_spectral(8).unwrap().closed_form,
        17.76025641025641,
        max_relative = 1e-15
    );
    assert_relative_eq!(
        v.fib_harmonic_spectral(16).unwrap().closed_form,
        3298.589118964663,
        max_relative = 1e-15
    );
}

#[test]
fn euclidean_squares_at_order_eight() {
    let v = Verifier::new(8, 3).unwrap();
    let table: [(usize, &str, i64, i64); 12] = [
        (1, "0.5", 2064936713, 9734400),
        (1, "2", 2697213767, 2433600),
        (1, "i", 59526881, 152100),
        (1, "1+i", 511341551, 811200),
        (2, "0.5", 4448381623, 1622400),
        (2, "2", 7967811317, 405600),
        (2, "i", 206936549, 33800),
        (2, "1+i", 12934288493, 1216800),
        (3, "0.5", 223227432241, 9734400),
        (3, "2", 455282652319, 2433600),
        (3, "i", 8481376057, 152100),
        (3, "1+i", 26914321709, 270400),
    ];
    for (k, rs, p, q) in table {
        let rr = r(rs);
        assert_eq!(
            v.euclidean_closed_form_sq(8, k, rr.modulus_sq()).unwrap(),
            exact_ratio(p, q),
            "k = {k}, r = {rs}"
        );
        assert_eq!(
            v.euclidean_weighted_sum_sq(8, k, rr.modulus_sq()).unwrap(),
            exact_ratio(p, q)
        );
    }
    let m = build_r_circulant(
        &RCirculantSpec::new(8, r("0.5").value(), RowKind::HyperharmonicFib { level: 1 }).unwrap(),
    )
    .unwrap();
    assert_relative_eq!(
        frobenius_norm(&m).unwrap().value,
        14.564607281933693,
        max_relative = 1e-14
    );
}

#[test]
fn small_specializations() {
    let v = Verifier::new(2, 1).unwrap();
    assert_eq!(
        v.harmonic_euclidean_sq(2, &exact_int(9)).unwrap(),
        exact_int(10)
    );
    let rep = v.harmonic_spectral_sandwich(2, &r("2")).unwrap();
    assert_relative_eq!(rep.independent, 2.0, max_relative = 1e-9);
    let m =
        build_r_circulant(&RCirculantSpec::new(2, r("2").value(), RowKind::HarmonicFib).unwrap())
            .unwrap();
    assert_relative_eq!(
        spectral_norm_jacobi(&m).unwrap().value,
        2.0,
        max_relative = 1e-14
    );
}
