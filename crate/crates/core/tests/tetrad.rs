use dkp_core::dk_algebra::{build_j, decompose_generators, DkBasis, LorentzIndex};
use dkp_core::lorentz::{LocalLorentz, LorentzMatrix};
use dkp_core::tetrad::{
    orthonormality_residual, ricci_coefficients, spin_connection, tetrad_divergence, verify_gauge_covariance,
    CartesianTetrad, Frame, RotatedFrame, SpacetimePoint, SphericalTetrad,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn points(n: usize, seed: u64) -> Vec<SpacetimePoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            SpacetimePoint::new(
                rng.random_range(-1.0..1.0),
                rng.random_range(0.3..5.0),
                rng.random_range(0.2..2.9),
                rng.random_range(0.0..6.2),
            )
            .unwrap()
        })
        .collect()
}

fn j(a: u8, b: u8, basis: DkBasis) -> dkp_core::dk_algebra::DkMatrix {
    build_j(LorentzIndex::new(a).unwrap(), LorentzIndex::new(b).unwrap(), basis)
}

#[test]
fn spherical_divergence_matches_closed_form() {
    for p in points(50, 1) {
        let d = tetrad_divergence(&SphericalTetrad, &p).unwrap();
        let expect = [0.0, -p.theta.cos() / (p.r * p.theta.sin()), 0.0, -2.0 / p.r];
        for a in 0..4 {
            assert!((d[a] - expect[a]).abs() < 1e-12, "a = {a}: {} vs {}", d[a], expect[a]);
        }
    }
}

#[test]
fn frames_are_orthonormal() {
    let boost = LocalLorentz::new("radial boost", |p: &SpacetimePoint| {
        LorentzMatrix::boost([1.0, 0.5, 0.0], 0.3 * p.r).unwrap()
    });
    for p in points(20, 2) {
        assert!(orthonormality_residual(&SphericalTetrad, &p) < 1e-12);
        assert!(orthonormality_residual(&CartesianTetrad, &p) < 1e-12);
        let rotated = RotatedFrame { base: &SphericalTetrad, lorentz: &boost };
        assert!(orthonormality_residual(&rotated, &p) < 1e-12);
    }
}

#[test]
fn rotating_the_cartesian_triad_gives_the_spherical_one() {
    let sph = LocalLorentz::new("spherical", |p: &SpacetimePoint| LorentzMatrix::spherical(p.theta, p.phi));
    let rotated = RotatedFrame { base: &CartesianTetrad, lorentz: &sph };
    for p in points(20, 3) {
        let a = rotated.tetrad(&p);
        let b = SphericalTetrad.tetrad(&p);
        for i in 0..4 {
            for k in 0..4 {
                assert!((a[i][k] - b[i][k]).abs() < 1e-14);
            }
        }
    }
}

#[test]
fn ricci_coefficients_are_antisymmetric() {
    for p in points(20, 4) {
        assert!(ricci_coefficients(&SphericalTetrad, &p).unwrap().antisymmetry_residual() < 1e-12);
        assert!(ricci_coefficients(&CartesianTetrad, &p).unwrap().antisymmetry_residual() < 1e-7);
    }
}

#[test]
fn spherical_connection_closed_form() {
    for basis in [DkBasis::Cartesian, DkBasis::Cyclic] {
        for p in points(10, 5) {
            let b = spin_connection(&SphericalTetrad, &p, basis).unwrap();
            let (s, c) = (p.theta.sin(), p.theta.cos());
            assert!(b.b[0].max_abs() < 1e-14);
            assert!(b.b[1].max_abs() < 1e-14);
            assert!(b.b[2].max_abs_diff(&j(3, 1, basis)).unwrap() < 1e-12);
            let b_phi = j(3, 2, basis)
                .scale(Complex64::new(s, 0.0))
                .add(&j(1, 2, basis).scale(Complex64::new(c, 0.0)))
                .unwrap();
            assert!(b.b[3].max_abs_diff(&b_phi).unwrap() < 1e-12);
        }
    }
}

#[test]
fn connection_is_a_real_generator_combination() {
    let boost = LocalLorentz::new("boost", |p: &SpacetimePoint| {
        LorentzMatrix::boost([p.phi.cos(), 1.0, 0.2], 0.2 * p.theta).unwrap()
    });
    let rotated = RotatedFrame { base: &SphericalTetrad, lorentz: &boost };
    for p in points(10, 6) {
        for basis in [DkBasis::Cartesian, DkBasis::Cyclic] {
            let b = spin_connection(&rotated, &p, basis).unwrap();
            for m in &b.b {
                let (_, res) = decompose_generators(m);
                assert!(res < 1e-10, "residual {res}");
            }
        }
    }
}

#[test]
fn covariance_under_local_lorentz_transformations() {
    let pts = points(12, 7);
    let cases = [
        LocalLorentz::constant("boost", LorentzMatrix::boost([0.3, -1.0, 0.4], 0.8).unwrap()),
        LocalLorentz::new("spherical", |p: &SpacetimePoint| LorentzMatrix::spherical(p.theta, p.phi)),
        LocalLorentz::new("twist", |p: &SpacetimePoint| {
            LorentzMatrix::boost([0.0, 0.0, 1.0], 0.4 * p.r.sin())
                .unwrap()
                .compose(&LorentzMatrix::rotation([1.0, 1.0, 0.0], p.phi + p.t).unwrap())
        }),
    ];
    for l in &cases {
        for frame in [&SphericalTetrad as &dyn Frame, &CartesianTetrad as &dyn Frame] {
            let rep = verify_gauge_covariance(frame, l, &pts).unwrap();
            assert!(rep.beta < 1e-12 && rep.kappa_block < 1e-12 && rep.lambda_block < 1e-12, "{rep:?}");
            assert!(rep.connection < 1e-8, "{} {}: {rep:?}", frame.name(), l.name());
            assert!(rep.pseudo_orthogonality < 1e-10);
        }
    }
}
