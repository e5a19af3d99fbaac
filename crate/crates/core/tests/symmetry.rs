use dkp_core::angular::QuantumNumbers;
use dkp_core::radial::radial_system;
use dkp_core::symmetry::{
    consistency_rank, constraint_drift, n_constraints, parity_conjugation_residual, parity_operator,
    parity_plain_conjugation_residual, parity_reverses_sigma, sigma_constraint_leak, Dimension, NParity,
    ParityConstraint, StepKind,
};
use dkp_core::dk_algebra::DkBasis;
use dkp_core::HalfInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn h(s: &str) -> HalfInt {
    s.parse().unwrap()
}

fn qn(eps: f64, j: HalfInt, kappa: HalfInt) -> QuantumNumbers {
    QuantumNumbers::new(eps, j, j, kappa).unwrap()
}

/// `|κ| ∈ {1, 3/2, 2}` with both signs, `j ∈ {|κ|+1, |κ|+2}`.
fn grid() -> Vec<(HalfInt, HalfInt)> {
    let mut out = Vec::new();
    for k in ["1", "3/2", "2"] {
        for sign in [1, -1] {
            let kappa = HalfInt::from_twice(sign * h(k).twice());
            for dj in [1, 2] {
                out.push((kappa, h(k) + HalfInt::from_int(dj)));
            }
        }
    }
    out
}

#[test]
fn parity_operators() {
    let p = parity_operator(DkBasis::Cyclic);
    assert!(p.matmul(&p).unwrap().max_abs_diff(&dkp_core::dk_algebra::DkMatrix::identity(DkBasis::Cyclic)).unwrap() < 1e-15);
    for (theta, phi) in [(0.3, 0.0), (0.7, 0.4), (std::f64::consts::FRAC_PI_2, 2.0), (2.9, -1.1)] {
        assert!(parity_conjugation_residual(theta, phi).unwrap() < 1e-12);
    }
    // Without the frame rotation the cyclic operator is not reproduced.
    assert!(parity_plain_conjugation_residual().unwrap() > 0.5);
    assert!(parity_reverses_sigma());
}

#[test]
fn n_values() {
    assert_eq!(NParity::Odd.value(h("2")), Some(-1));
    assert_eq!(NParity::Even.value(h("2")), Some(1));
    assert_eq!(NParity::Odd.value(h("3")), Some(1));
    assert_eq!(NParity::Even.value(h("3/2")), None);
    assert_eq!(n_constraints(NParity::Odd).subspace().len(), 4);
    assert_eq!(n_constraints(NParity::Even).subspace().len(), 6);
    let both = n_constraints(NParity::Odd).union(&n_constraints(NParity::Even));
    assert!(both.subspace().is_empty());
}

#[test]
fn odd_constraints_leave_only_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let con = n_constraints(NParity::Odd);
    for (kappa, j) in grid() {
        for _ in 0..5 {
            let mass = rng.random_range(0.2..2.0);
            let eps = rng.random_range(0.2..3.0);
            let sys = radial_system(&qn(eps, j, kappa), mass).unwrap();
            let rep = consistency_rank(&sys, &con).unwrap();
            assert_eq!(rep.dimension, Dimension::Finite(0), "kappa={kappa} j={j}");
            assert_eq!(rep.cascade(), vec![4, 7, 1, 8], "kappa={kappa} j={j}");
            let rows: Vec<usize> = rep.steps.iter().filter(|s| s.kind == StepKind::Zeroed).map(|s| s.row.unwrap()).collect();
            assert_eq!(rows, vec![0, 2, 4, 1]);
        }
    }
}

#[test]
fn even_constraints_leave_only_zero() {
    let con = n_constraints(NParity::Even);
    for (kappa, j) in grid() {
        let sys = radial_system(&qn(1.3, j, kappa), 0.7).unwrap();
        let rep = consistency_rank(&sys, &con).unwrap();
        assert_eq!(rep.dimension, Dimension::Finite(0), "kappa={kappa} j={j}");
        assert_eq!(rep.cascade()[0], 1);
    }
}

#[test]
fn unconstrained_dimension() {
    for (kappa, j) in grid() {
        let sys = radial_system(&qn(1.3, j, kappa), 0.7).unwrap();
        let rep = consistency_rank(&sys, &ParityConstraint::none()).unwrap();
        assert_eq!(rep.dimension, Dimension::Finite(6));
        assert_eq!(rep.free_slots, vec![0, 1, 3, 5, 7, 9]);
        assert!(rep.cascade().is_empty());
    }
}

#[test]
fn constraints_not_preserved() {
    let q = qn(1.3, h("2"), h("1"));
    for n in [NParity::Odd, NParity::Even] {
        let con = n_constraints(n);
        assert!(sigma_constraint_leak(&con, &q).unwrap() > 1e-3);
        let drift = constraint_drift(&q, 0.7, &con, 2.0, 3.0).unwrap();
        assert!(drift.initial < 1e-12);
        assert!(drift.max > 1e-3, "{drift:?}");
    }
}
