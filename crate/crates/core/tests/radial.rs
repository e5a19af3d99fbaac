use dkp_core::angular::{AnsatzKind, QuantumNumbers};
use dkp_core::radial::{compare_with_tabulated, radial_system};
use dkp_core::HalfInt;

fn h(s: &str) -> HalfInt {
    s.parse().unwrap()
}

fn mismatched_rows(kappa: &str, j: &str) -> (AnsatzKind, Vec<usize>) {
    let m = if h(j).is_integer() { h("0") } else { h("1/2") };
    let qn = QuantumNumbers::new(1.3, h(j), m, h(kappa)).unwrap();
    let sys = radial_system(&qn, 0.7).unwrap();
    (sys.kind, compare_with_tabulated(&sys).into_iter().map(|m| m.row).collect())
}

#[test]
fn derived_systems_against_tables() {
    for (k, j, kind, rows) in [
        ("1", "3", AnsatzKind::Generic, vec![3, 5]),
        ("3/2", "7/2", AnsatzKind::Generic, vec![3, 5]),
        ("-2", "4", AnsatzKind::Generic, vec![3, 5]),
        ("2", "2", AnsatzKind::TopPositive, vec![5]),
        ("-3/2", "3/2", AnsatzKind::TopNegative, vec![3, 7]),
        ("1", "1", AnsatzKind::TopPositive, vec![5]),
        ("2", "1", AnsatzKind::MinimalPositive, vec![5]),
        ("5/2", "3/2", AnsatzKind::MinimalPositive, vec![5]),
        ("-2", "1", AnsatzKind::MinimalNegative, vec![7]),
    ] {
        let (got_kind, got) = mismatched_rows(k, j);
        assert_eq!(got_kind, kind, "kind for κ={k} j={j}");
        assert_eq!(got, rows, "κ={k} j={j}");
    }
}

#[test]
fn every_admissible_pair_separates() {
    for tk in (-6..=6).filter(|&t| t != 0) {
        let kappa = HalfInt::from_twice(tk);
        for j in dkp_core::angular::allowed_j(kappa).unwrap().take_while(|j| *j <= h("5")) {
            let m = -j;
            let qn = QuantumNumbers::new(0.9, j, m, kappa).unwrap();
            let sys = radial_system(&qn, 1.0).unwrap_or_else(|e| panic!("κ={kappa} j={j}: {e}"));
            let expected = match sys.kind {
                AnsatzKind::Generic => 10,
                AnsatzKind::TopPositive | AnsatzKind::TopNegative => 7,
                AnsatzKind::MinimalPositive | AnsatzKind::MinimalNegative => 3,
            };
            assert_eq!(sys.equations.len(), expected, "κ={kappa} j={j}");
            assert_eq!(sys.equations.len() + sys.trivial_rows.len(), 10);
            assert_eq!(10 - sys.vacant_slots.len(), expected);
        }
    }
}

use dkp_core::radial::{
    dk_residual, eliminate_auxiliary, integrate, integrate_column, minimal_j_solution, reconstruct, residual, Behaviour,
    Branch, InitialData, IntegrationOptions,
};
use dkp_core::tetrad::SpacetimePoint;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..=n).map(|k| a + (b - a) * k as f64 / n as f64).collect()
}

fn qn(eps: f64, j: &str, m: &str, kappa: &str) -> QuantumNumbers {
    QuantumNumbers::new(eps, h(j), h(m), h(kappa)).unwrap()
}

#[test]
fn minimal_closed_form_solves_system() {
    for (k, j, e, rate) in [("1", "0", 0.6, 0.8), ("-1", "0", 1.25, 0.75), ("2", "1", 0.3, 0.0), ("-5/2", "3/2", 2.0, 0.0)] {
        let q = qn(e, j, if h(j).is_integer() { "0" } else { "1/2" }, k);
        let sol = minimal_j_solution(&q, 1.0, &grid(0.1, 10.0, 200), Branch::Primary).unwrap();
        if rate > 0.0 {
            assert!((sol.rate() - rate).abs() < 1e-12);
        }
        let sys = radial_system(&q, 1.0).unwrap();
        let res = residual(&sys, &sol.profile).unwrap();
        assert!(res < 1e-10, "κ={k}: residual {res}");
        assert!(sol.profile.r.iter().all(|&r| sol.scalar_residual(r) < 1e-10));
    }
}

#[test]
fn minimal_integration_matches_closed_form() {
    for (k, e) in [("1", 0.6), ("-1", 1.25), ("2", 1.7), ("-2", 0.4)] {
        let j = if k == "1" || k == "-1" { "0" } else { "1" };
        let q = qn(e, j, "0", k);
        let sol = minimal_j_solution(&q, 1.0, &grid(0.1, 10.0, 4096), Branch::Primary).unwrap();
        let sys = radial_system(&q, 1.0).unwrap();
        let num = integrate_column(&sys, 0.1, &sol.profile.f[0], 10.0, &IntegrationOptions::default()).unwrap();
        let worst = num
            .f
            .iter()
            .zip(&sol.profile.f)
            .flat_map(|(a, b)| a.iter().zip(b).map(|(x, y)| (x - y).norm()))
            .fold(0.0, f64::max);
        assert!(worst < 1e-6, "κ={k}: {worst}");
    }
}

#[test]
fn linear_branch_warns() {
    let q = qn(1.0, "0", "0", "1");
    let sol = minimal_j_solution(&q, 1.0, &grid(0.5, 2.0, 10), Branch::Primary).unwrap();
    assert_eq!(sol.behaviour, Behaviour::Linear);
    assert!(sol.warning.is_some());
    let g = minimal_j_solution(&qn(0.6, "0", "0", "1"), 1.0, &grid(0.5, 2.0, 10), Branch::Secondary).unwrap();
    assert!(matches!(g.behaviour, Behaviour::Growing { .. }));
}

fn random_init(rng: &mut ChaCha8Rng, r0: f64) -> InitialData {
    let mut c = || Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
    InitialData { r0, values: [c(), c(), c(), c()], derivatives: [c(), c(), c(), c()] }
}

#[test]
fn generic_integration_and_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let q = qn(1.5, "2", "1", "1");
    let sys = radial_system(&q, 1.0).unwrap();
    let reduced = eliminate_auxiliary(&sys).unwrap();
    assert_eq!(reduced.rules.len(), 6);
    let prof = integrate(&reduced, &random_init(&mut rng, 0.5), 8.0, &IntegrationOptions::default()).unwrap();
    let prof = prof.normalized();
    assert!(residual(&sys, &prof).unwrap() < 1e-6);
    assert!(residual(&reduced, &prof).unwrap() < 1e-8);
    let back = reconstruct(&reduced, &prof).unwrap();
    let rt = residual(&sys, &back).unwrap();
    assert!(rt < 1e-8, "round trip {rt}");
    let fd = dkp_core::radial::RadialProfile { df: None, d2f: None, ..prof.clone() };
    assert!(residual(&sys, &fd).unwrap() < 1e-6);
    let mut bad = prof.clone();
    for c in bad.f.iter_mut() {
        c[0] += 0.1;
    }
    assert!(residual(&sys, &bad).unwrap() > 1e-3);
}

#[test]
fn zero_data_gives_zero_profile() {
    let q = qn(1.5, "2", "1", "1");
    let sys = radial_system(&q, 1.0).unwrap();
    let zero = InitialData { r0: 0.5, values: [Complex64::default(); 4], derivatives: [Complex64::default(); 4] };
    let p = integrate(&sys, &zero, 3.0, &IntegrationOptions { steps: 64, ..Default::default() }).unwrap();
    assert_eq!(p.max_norm(), 0.0);
}

#[test]
fn dk_residual_on_radial_solutions() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let q = qn(0.6, "0", "0", "1");
    for _ in 0..10 {
        let p = SpacetimePoint::new(rng.random_range(-2.0..2.0), rng.random_range(0.5..5.0), rng.random_range(0.3..2.8), rng.random_range(0.0..6.0)).unwrap();
        let sol = minimal_j_solution(&q, 1.0, &[p.r, p.r + 0.1], Branch::Primary).unwrap();
        let r = dk_residual(&q, &sol.profile, &p, 1.0).unwrap();
        let w = r.iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert!(w < 1e-8, "minimal {w}");
    }
    for (k, j, m) in [("1", "2", "1"), ("3/2", "5/2", "-1/2"), ("-2", "3", "2"), ("1/2", "1/2", "1/2"), ("-1", "1", "0")] {
        let q = qn(1.5, j, m, k);
        let sys = radial_system(&q, 1.0).unwrap();
        let prof = integrate(&sys, &random_init(&mut rng, 0.5), 6.0, &IntegrationOptions::default()).unwrap().normalized();
        for _ in 0..20 {
            let p = SpacetimePoint::new(rng.random_range(-2.0..2.0), rng.random_range(0.6..5.5), rng.random_range(0.3..2.8), rng.random_range(0.0..6.0)).unwrap();
            let r = dk_residual(&q, &prof, &p, 1.0).unwrap();
            let w = r.iter().map(|z| z.norm()).fold(0.0, f64::max);
            assert!(w < 1e-5, "κ={k} j={j}: {w}");
        }
    }
}

#[test]
fn minimal_systems_coincide_across_kappa() {
    for sign in ["", "-"] {
        let base = radial_system(&qn(0.8, "0", "0", &format!("{sign}1")), 1.0).unwrap();
        for (k, j) in [("3/2", "1/2"), ("2", "1"), ("5/2", "3/2"), ("3", "2")] {
            let sys = radial_system(&qn(0.8, j, j, &format!("{sign}{k}")), 1.0).unwrap();
            assert_eq!(sys.equations, base.equations, "κ={sign}{k}");
        }
    }
}
