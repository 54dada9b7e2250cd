use proptest::prelude::*;

use xop_zeros::classical::{gauss_rule, log_gamma, pochhammer, zeros_classical, ClassicalFamily};
use xop_zeros::lab::lambda_n4;
use xop_zeros::xop::{jacobi_three_term_residual, JacobiParams, LaguerreParams};
use xop_zeros::zeros::ZeroFinder;

fn interlace(lower: &[f64], upper: &[f64]) -> bool {
    upper.len() == lower.len() + 1
        && lower
            .iter()
            .enumerate()
            .all(|(i, &x)| upper[i] < x && x < upper[i + 1])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn classical_jacobi_zeros_interlace(alpha in -0.9f64..8.0, beta in -0.9f64..8.0, n in 1usize..20) {
        let fam = ClassicalFamily::jacobi(alpha, beta).unwrap();
        let lo = zeros_classical(fam, n).unwrap();
        let hi = zeros_classical(fam, n + 1).unwrap();
        prop_assert!(interlace(&lo, &hi));
        prop_assert!(hi.iter().all(|&x| x > -1.0 && x < 1.0));
    }

    #[test]
    fn classical_laguerre_zeros_interlace(alpha in -0.9f64..20.0, n in 1usize..25) {
        let fam = ClassicalFamily::laguerre(alpha).unwrap();
        let lo = zeros_classical(fam, n).unwrap();
        let hi = zeros_classical(fam, n + 1).unwrap();
        prop_assert!(interlace(&lo, &hi));
        prop_assert!(hi[0] > 0.0);
    }

    #[test]
    fn gauss_laguerre_is_exact_to_degree_2n_minus_1(alpha in 0.0f64..5.0, n in 1usize..15) {
        let rule = gauss_rule(ClassicalFamily::laguerre(alpha).unwrap(), n).unwrap();
        for k in 0..2 * n {
            let exact = (log_gamma(alpha + k as f64 + 1.0).unwrap()).exp();
            let got = rule.integrate(|x| x.powi(k as i32));
            prop_assert!((got - exact).abs() <= 1e-10 * exact, "k={} {} vs {}", k, got, exact);
        }
    }

    #[test]
    fn gauss_jacobi_integrates_orthogonal_polynomials_to_zero(
        alpha in -0.5f64..4.0, beta in -0.5f64..4.0, n in 2usize..15,
    ) {
        let fam = ClassicalFamily::jacobi(alpha, beta).unwrap();
        let rule = gauss_rule(fam, n).unwrap();
        let m0 = fam.moment0();
        prop_assert!((rule.weights.iter().sum::<f64>() - m0).abs() <= 1e-11 * m0);
        for j in 1..2 * n {
            let scale = rule.integrate(|x| fam.eval(j, x).abs());
            prop_assert!(rule.integrate(|x| fam.eval(j, x)).abs() <= 1e-11 * scale.max(m0));
        }
    }

    #[test]
    fn endpoint_values_are_binomials(alpha in -0.9f64..10.0, beta in -0.9f64..10.0, n in 0usize..30) {
        let binom = pochhammer(alpha + 1.0, n) / pochhammer(1.0, n);
        let p1 = ClassicalFamily::jacobi(alpha, beta).unwrap().eval(n, 1.0);
        let l0 = ClassicalFamily::laguerre(alpha).unwrap().eval(n, 0.0);
        prop_assert!((p1 - binom).abs() <= 1e-12 * binom.abs().max(1.0));
        prop_assert!((l0 - binom).abs() <= 1e-12 * binom.abs().max(1.0));
    }

    #[test]
    fn first_degree_conventions(alpha in 0.01f64..50.0, gap in 0.01f64..50.0, x in -100.0f64..100.0) {
        let p = LaguerreParams::new(alpha).unwrap();
        prop_assert_eq!(p.eval(1, x), -(x + alpha + 1.0));
        let jp = JacobiParams::new(alpha, alpha + gap).unwrap();
        let want = -0.5 * (x - jp.c());
        prop_assert!((jp.eval(1, x) - want).abs() <= 1e-12 * (x.abs() + jp.c().abs()));
        prop_assert!((jp.gamma_n(1) * jp.b() - jp.c()).abs() <= 1e-13 * jp.c().abs());
    }

    #[test]
    fn jacobi_three_term_identity(alpha in 0.05f64..6.0, gap in 0.1f64..10.0, n in 1usize..15, t in 0.0f64..1.0) {
        let p = JacobiParams::new(alpha, alpha + gap).unwrap();
        let x = -1.0 + t * (p.c() + 1.0);
        prop_assert!(jacobi_three_term_residual(n, &p, x).unwrap() <= 1e-10);
    }

    #[test]
    fn lambda_difference_is_reciprocal(alpha in 0.05f64..10.0, n in 1usize..25, lx in -3.0f64..3.0) {
        let x = 10f64.powf(lx);
        let d = lambda_n4(n + 1, alpha, x).unwrap() - lambda_n4(n, alpha, x).unwrap();
        prop_assert!((d - 1.0 / x).abs() * x <= 1e-12);
    }

    #[test]
    fn x1_laguerre_zeros_are_sign_changes(alpha in 0.1f64..20.0, n in 2usize..16) {
        let p = LaguerreParams::new(alpha).unwrap();
        let set = ZeroFinder::default().x1_laguerre(n, &p).unwrap();
        prop_assert_eq!(set.regular.len(), n - 1);
        prop_assert!(set.regular[0] > 0.0);
        let e = set.exceptional[0];
        prop_assert!(e >= -alpha - 1.0 && e < -alpha);
        // signs at midpoints between consecutive zeros alternate
        let z = set.all_zeros();
        let signs: Vec<bool> = z.windows(2).map(|w| p.eval(n, 0.5 * (w[0] + w[1])) > 0.0).collect();
        prop_assert!(signs.windows(2).all(|s| s[0] != s[1]));
    }

    #[test]
    fn x1_jacobi_zero_layout(alpha in 0.1f64..6.0, gap in 0.2f64..12.0, n in 2usize..16, flip in any::<bool>()) {
        let (a, b) = if flip { (alpha + gap, alpha) } else { (alpha, alpha + gap) };
        let p = JacobiParams::new(a, b).unwrap();
        let set = ZeroFinder::default().x1_jacobi(n, &p).unwrap();
        prop_assert_eq!(set.regular.len(), n - 1);
        prop_assert!(set.regular.iter().all(|&x| x > -1.0 && x < 1.0));
        let e = set.exceptional[0];
        let (lo, hi) = {
            let g = p.gamma_n(n) * p.b();
            (p.b().min(g), p.b().max(g))
        };
        prop_assert!(e > lo - 1e-10 && e < hi + 1e-10);
    }
}
