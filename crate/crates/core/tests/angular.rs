use dkp_core::angular::{
    allowed_j, build_ansatz, sigma_apply, sigma_expected, sigma_pattern, tabulated_sigma_generic,
    tabulated_sigma_top_positive, verify_paired_relations, verify_recursions, wigner_d, AnsatzKind,
    QuantumNumbers, WignerDSpec, TABULATED_SIGMA_DEFECTS,
};
use dkp_core::angular::{apply_total_momentum, apply_total_momentum_squared, total_momentum, J3_SIGN};
use dkp_core::dk_algebra::Column;
use dkp_core::{Complex64, HalfInt};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn h(t: i32) -> HalfInt {
    HalfInt::from_twice(t)
}

/// Every admissible `(κ, j, m)` with `|κ| ≤ 2` and `j ≤ 4`.
fn admissible() -> Vec<QuantumNumbers> {
    let mut out = Vec::new();
    for tk in [-4, -3, -2, -1, 1, 2, 3, 4] {
        let kappa = h(tk);
        for j in allowed_j(kappa).unwrap().take_while(|j| *j <= h(8)) {
            let mut m = -j;
            while m <= j {
                out.push(QuantumNumbers::new(1.2, j, m, kappa).unwrap());
                m = m + HalfInt::ONE;
            }
        }
    }
    out
}

fn random_column(rng: &mut ChaCha8Rng) -> Column {
    core::array::from_fn(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
}

#[test]
fn recursion_example_with_zero_kappa() {
    let res = verify_recursions(h(2), h(0), h(0), std::f64::consts::FRAC_PI_3).unwrap();
    assert!(res.derivative.iter().chain(&res.angular).all(|r| r.unwrap() < 1e-8));
}

#[test]
fn recursions_hold_for_all_admissible_numbers() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for qn in admissible() {
        let theta = rng.random_range(0.05..3.1);
        let res = verify_recursions(qn.j, qn.kappa, qn.m, theta).unwrap();
        assert!(res.worst() < 1e-10, "{qn:?}: {res:?}");
    }
}

#[test]
fn paired_relations_fix_the_sign_of_the_raising_combination() {
    let (mut checked, mut broken) = (0, 0);
    for qn in admissible() {
        if let Some([lower, upper, fixed]) = verify_paired_relations(qn.j, qn.kappa, qn.m, 0.9) {
            assert!(lower < 1e-10 && fixed < 1e-10, "{qn:?}");
            checked += 1;
            if upper > 1e-6 {
                broken += 1;
            }
        }
    }
    assert!(checked > 50);
    assert!(broken * 10 > checked * 9, "{broken} of {checked}");
}

#[test]
fn sigma_reproduces_the_recursion_pattern() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for qn in admissible() {
        let ans = build_ansatz(qn).unwrap();
        let f = random_column(&mut rng);
        for _ in 0..3 {
            let (t, p) = (rng.random_range(0.1..3.0), rng.random_range(0.0..6.2));
            let got = sigma_apply(&ans, &f, t, p);
            let want = sigma_expected(&ans, &f, t, p);
            for k in 0..10 {
                assert!((got[k] - want[k]).norm() < 1e-10, "{qn:?} row {}", k + 1);
                if ans.kind.is_minimal() {
                    assert!(got[k].norm() < 1e-10);
                }
            }
        }
    }
}

#[test]
fn tabulated_patterns() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let f = random_column(&mut rng);
    let qn = QuantumNumbers::new(1.0, h(6), h(2), h(2)).unwrap();
    let ans = build_ansatz(qn).unwrap();
    assert_eq!(ans.kind, AnsatzKind::Generic);
    let derived = sigma_pattern(&ans, &f);
    let c = dkp_core::angular::ladder_lower(qn.j, qn.kappa);
    let d = dkp_core::angular::ladder_raise(qn.j, qn.kappa);
    let table = tabulated_sigma_generic(c, d, &f);
    let bad: Vec<usize> = (0..10).filter(|&k| (derived[k] - table[k]).norm() > 1e-12).map(|k| k + 1).collect();
    assert_eq!(bad, TABULATED_SIGMA_DEFECTS);

    for tk in [1, 2, 3, 4, 6] {
        let qn = QuantumNumbers::new(1.0, h(tk), h(tk % 2), h(tk)).unwrap();
        let ans = build_ansatz(qn).unwrap();
        assert_eq!(ans.kind, AnsatzKind::TopPositive);
        let derived = sigma_pattern(&ans, &f);
        let table = tabulated_sigma_top_positive(qn.kappa.as_f64(), &f);
        for k in 0..10 {
            assert!((derived[k] - table[k]).norm() < 1e-12, "kappa {} row {}", qn.kappa, k + 1);
        }
    }
}

#[test]
fn total_momentum_eigenvalues() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for qn in admissible().into_iter().step_by(3) {
        let ans = build_ansatz(qn).unwrap();
        let f = random_column(&mut rng);
        let field = |t: f64, p: f64| ans.evaluate(&f, 0.0, t, p);
        let (t, p) = (rng.random_range(0.3..2.8), rng.random_range(0.0..6.2));
        let phi = field(t, p);
        let jj = qn.j.as_f64() * (qn.j.as_f64() + 1.0);
        let sq = apply_total_momentum_squared(qn.kappa, &field, t, p, 1e-4);
        let j3 = apply_total_momentum(&total_momentum(qn.kappa)[2], &field, t, p, 1e-5);
        for k in 0..10 {
            assert!((sq[k] - jj * phi[k]).norm() < 1e-6, "{qn:?} J^2 slot {k}");
            assert!((j3[k] - f64::from(J3_SIGN) * qn.m.as_f64() * phi[k]).norm() < 1e-8);
        }
    }
}

proptest! {
    #[test]
    fn small_d_rows_are_normalised(tj in 0i32..9, theta in 0.0f64..3.1) {
        let j = h(tj);
        let mut mp = -j;
        while mp <= j {
            let mut s = 0.0;
            let mut sigma = -j;
            while sigma <= j {
                s += wigner_d(WignerDSpec::new(j, mp, sigma).unwrap(), theta).powi(2);
                sigma = sigma + HalfInt::ONE;
            }
            prop_assert!((s - 1.0).abs() < 1e-12);
            mp = mp + HalfInt::ONE;
        }
    }
}
