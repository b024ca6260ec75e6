use stieltjes::identities::{gamma_diff, gamma_shift, gen_harmonic_check, zero_sum_rhs};
use stieltjes::{Evaluator, Method, StieltjesQuery};

fn ev() -> Evaluator {
    Evaluator::with_tol(1e-12).unwrap()
}

#[test]
fn shift_matches_direct_evaluation() {
    let ev = ev();
    for sel in [Method::Hermite, Method::UIntegral, Method::Oracle] {
        for k in 0..=4 {
            for n in 1..=3 {
                for a in [0.5, 1.0] {
                    let s = gamma_shift(k, a, n, sel, &ev).unwrap();
                    let d = ev
                        .evaluate(sel, StieltjesQuery::new(k, a + n as f64).unwrap())
                        .unwrap();
                    let tol = 2.0 * (s.err_estimate + d.err_estimate).max(1e-12);
                    assert!(
                        (s.value - d.value).abs() <= tol.max(1e-11),
                        "{sel} k={k} n={n} a={a}: {} vs {}",
                        s.value,
                        d.value
                    );
                }
            }
        }
    }
}

#[test]
fn log_sum_difference_converges() {
    let ev = ev();
    let g = |k: usize, a: f64| {
        ev.evaluate(Method::Hermite, StieltjesQuery::new(k, a).unwrap())
            .unwrap()
            .value
    };
    for ell in 0..=2 {
        for (a, b) in [(1.0, 0.5), (2.0, 1.5), (10.0, 1.0)] {
            let d = gamma_diff(ell, a, b, 1_000_000).unwrap();
            let want = g(ell, a) - g(ell, b);
            assert!((d.value - want).abs() <= 1e-6, "ell={ell} a={a} b={b}");
        }
    }
}

#[test]
fn harmonic_routes_agree() {
    let ev = ev();
    for n in 0..=20 {
        for r in 1..=4 {
            let h = gen_harmonic_check(n, r, &ev).unwrap();
            assert!(h.integral_converged);
            assert!(h.max_deviation() <= 1e-9, "n={n} r={r}: {h:?}");
        }
    }
}

#[test]
fn zero_sums_agree_across_methods() {
    let ev = ev();
    for order in [2, 3] {
        let base = zero_sum_rhs(order, Method::Oracle, &ev).unwrap();
        for sel in [Method::Hermite, Method::UIntegral] {
            let v = zero_sum_rhs(order, sel, &ev).unwrap();
            assert!((v - base).abs() <= 1e-7, "order={order} {sel}");
        }
    }
}
