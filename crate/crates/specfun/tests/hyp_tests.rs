mod common;

use common::{c, hyp4f3_brute};
use specfun::{hyp_4f3_at_1, Error};

#[test]
fn terminating_when_an_upper_parameter_is_zero() {
    let r = hyp_4f3_at_1([c(0.0, 0.0), c(1.5, 0.2), c(2.0, 0.0), c(0.7, -1.0)],
                         [c(1.0, 0.0), c(2.0, 0.3), c(3.0, 0.0)], 1e-12).unwrap();
    assert_eq!(r.value, c(1.0, 0.0));
    assert_eq!(r.tail_bound, 0.0);
}

#[test]
fn all_ones_over_twos_is_zeta_three() {
    // term_k collapses to 1/(k+1)^3, so the sum is zeta(3)
    let r = hyp_4f3_at_1([c(1.0, 0.0); 4], [c(2.0, 0.0); 3], 1e-10).unwrap();
    let zeta3 = 1.2020569031595942854;
    assert!((r.value.re - zeta3).abs() < 1e-10, "{} vs {zeta3}", r.value.re);
    assert!(r.value.im.abs() < 1e-14);
    assert!(r.tail_bound < 1e-10);
    // against the million-term brute-force oracle
    let brute = hyp4f3_brute([c(1.0, 0.0); 4], [c(2.0, 0.0); 3], 1_000_000);
    assert!((r.value.re - brute.re).abs() < 2e-6); // raw sum still carries O(1/K^2) tail
}

#[test]
fn complex_parameters_against_brute_force() {
    // Parameters shaped like the kernel use-case: a_j = 1/2 + mu_j - ir,
    // b = (1 - 2ir, 1 - i(r+t), 1 - i(r-t)) at (t, r) = (2.0, 0.7).
    let (t, r) = (2.0, 0.7);
    let mu = [c(0.0, 0.1), c(0.0, -0.1), c(0.0, 0.2), c(0.0, -0.2)];
    let a = [
        c(0.5, mu[0].im - r),
        c(0.5, mu[1].im - r),
        c(0.5, mu[2].im - r),
        c(0.5, mu[3].im - r),
    ];
    let b = [c(1.0, -2.0 * r), c(1.0, -(r + t)), c(1.0, -(r - t))];
    let fast = hyp_4f3_at_1(a, b, 1e-9).unwrap();
    let brute = hyp4f3_brute(a, b, 2_000_000);
    // the brute sum's own raw tail is ~K^-1; compare at its accuracy level
    assert!(
        (fast.value - brute).norm() < 5e-6 * brute.norm().max(1.0),
        "{:?} vs {:?}",
        fast.value,
        brute
    );
    assert!(fast.tail_bound < 1e-9);
}

#[test]
fn tail_correction_beats_raw_truncation() {
    // The corrected sum at moderate depth must be closer to a deep brute-force
    // reference than the raw partial sum at the same depth.
    let a = [c(1.0, 0.0); 4];
    let b = [c(2.0, 0.0); 3];
    let zeta3 = 1.2020569031595942854;
    let fast = hyp_4f3_at_1(a, b, 1e-8).unwrap();
    let raw = hyp4f3_brute(a, b, fast.terms_used);
    assert!((fast.value.re - zeta3).abs() < (raw.re - zeta3).abs() / 10.0);
}

#[test]
fn divergence_and_pole_errors() {
    // sum b - sum a = -1 < 0: divergent at unit argument
    let r = hyp_4f3_at_1([c(2.0, 0.0); 4], [c(2.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)], 1e-8);
    assert!(matches!(r, Err(Error::Divergent(_))));
    // non-positive integer lower parameter
    let r = hyp_4f3_at_1([c(1.0, 0.0); 4], [c(-2.0, 0.0), c(2.0, 0.0), c(2.0, 0.0)], 1e-8);
    assert!(matches!(r, Err(Error::LowerParameterPole(_))));
}
