use dkp_core::angular::QuantumNumbers;
use dkp_core::math::I;
use dkp_core::proca::{
    covariant_derivatives, divergence, dk_to_proca, lorentz_condition_max, lorentz_condition_pointwise, monopole_field,
    proca_equations, proca_residual, MonopoleConfig, ProcaComponents,
};
use dkp_core::radial::{integrate, minimal_j_solution, radial_system, Branch, InitialData, IntegrationOptions};
use dkp_core::tetrad::{CartesianTetrad, Frame, SpacetimePoint, SphericalTetrad};
use dkp_core::HalfInt;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn h(s: &str) -> HalfInt {
    s.parse().unwrap()
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn component_map_examples() {
    let mut f = [Complex64::default(); 10];
    f[0] = c(1.0, 0.0);
    assert!((dk_to_proca(&f).vector[0] - 1.0).norm() < 1e-15);
    let mut f = [Complex64::default(); 10];
    f[1] = c(1.0, 0.0);
    f[3] = c(1.0, 0.0);
    let p = dk_to_proca(&f);
    assert!(p.vector[1].norm() < 1e-15);
    assert!((p.vector[2] - c(0.0, -2f64.sqrt())).norm() < 1e-15);
    assert_eq!(dk_to_proca(&[Complex64::default(); 10]), ProcaComponents::default());
}

#[test]
fn monopole_field_examples() {
    let cfg = MonopoleConfig::from_kappa(h("1")).unwrap();
    let p = SpacetimePoint::new(0.0, 2.0, std::f64::consts::FRAC_PI_2, 0.3).unwrap();
    let f = monopole_field(&cfg, &p);
    assert!(f.potential[2].abs() < 1e-16);
    assert!((f.strength[1][2] + 0.25).abs() < 1e-15);
    let p = SpacetimePoint::new(0.0, 1.0, std::f64::consts::FRAC_PI_3, 0.3).unwrap();
    assert!((monopole_field(&cfg, &p).potential[2] + 1.0 / 3f64.sqrt()).abs() < 1e-15);
    assert!(MonopoleConfig::new(0.5, h("1")).is_err());
    assert!(MonopoleConfig::from_kappa(h("0")).is_err());
}

fn integrated(q: &QuantumNumbers, seed: u64) -> dkp_core::radial::RadialProfile {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut z = || c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
    let init = InitialData { r0: 0.5, values: [z(), z(), z(), z()], derivatives: [z(), z(), z(), z()] };
    let sys = radial_system(q, 1.0).unwrap();
    integrate(&sys, &init, 6.0, &IntegrationOptions::default()).unwrap().normalized()
}

#[test]
fn lorentz_condition_on_radial_solutions() {
    for tk in [-4, -3, -2, -1, 1, 2, 3, 4] {
        let kappa = HalfInt::from_twice(tk);
        for j in dkp_core::angular::allowed_j(kappa).unwrap().take_while(|j| *j <= h("4")) {
            let q = QuantumNumbers::new(1.4, j, j, kappa).unwrap();
            let prof = if dkp_core::angular::AnsatzKind::classify(kappa, j).is_minimal() {
                minimal_j_solution(&q, 1.0, &(0..200).map(|k| 0.5 + 0.02 * k as f64).collect::<Vec<_>>(), Branch::Primary)
                    .unwrap()
                    .profile
            } else {
                integrated(&q, (tk + 100) as u64)
            };
            let w = lorentz_condition_max(&q, &prof, 1.0).unwrap();
            assert!(w < 1e-6, "κ={kappa} j={j}: {w}");
        }
    }
    let q = QuantumNumbers::new(1.5, h("2"), h("1"), h("1")).unwrap();
    let mut prof = integrated(&q, 3);
    for v in prof.f.iter_mut() {
        v[2] += 0.05;
    }
    assert!(lorentz_condition_max(&q, &prof, 1.0).unwrap() > 1e-3);
}

#[test]
fn proca_form_on_radial_solutions() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (k, j, m) in [("1", "2", "1"), ("-3/2", "5/2", "1/2"), ("2", "2", "-1"), ("1/2", "1/2", "-1/2")] {
        let q = QuantumNumbers::new(1.3, h(j), h(m), h(k)).unwrap();
        let prof = integrated(&q, 9);
        let points: Vec<_> = (0..10)
            .map(|_| {
                SpacetimePoint::new(rng.random_range(-1.0..1.0), rng.random_range(0.7..5.0), rng.random_range(0.3..2.8), rng.random_range(0.0..6.2))
                    .unwrap()
            })
            .collect();
        let res = proca_residual(&q, &prof, &points, 1.0).unwrap();
        let w = res.iter().map(|r| r.worst()).fold(0.0, f64::max);
        assert!(w < 1e-5, "κ={k} j={j}: {w}");
        for p in &points {
            let l = lorentz_condition_pointwise(&q, &prof, p, 1.0).unwrap().norm();
            assert!(l < 1e-5, "pointwise Lorentz κ={k}: {l}");
        }
        let mut bad = prof.clone();
        for v in bad.f.iter_mut() {
            v[0] += 0.1;
        }
        let w = proca_residual(&q, &bad, &points, 1.0).unwrap().iter().map(|r| r.worst()).fold(0.0, f64::max);
        assert!(w > 1e-3);
    }
}

/// Free plane wave in the constant Cartesian frame, re-expressed in the
/// spherical frame: both Proca equations and `∂^a Ψ_a = 0` hold.
#[test]
fn free_plane_wave_satisfies_usual_lorentz_condition() {
    let mass = 1.0;
    let kvec = [0.3, -0.4, 0.5];
    let k0 = (mass * mass + kvec.iter().map(|x| x * x).sum::<f64>()).sqrt();
    let kl = [k0, -kvec[0], -kvec[1], -kvec[2]];
    // Polarization with k^a ε_a = 0.
    let eps_raw = [c(0.0, 0.0), c(1.0, 0.2), c(-0.3, 0.5), c(0.2, 0.0)];
    let kd: Complex64 = (1..4).map(|a| eps_raw[a] * kvec[a - 1]).sum();
    let mut pol = eps_raw;
    pol[0] = -kd / k0;
    let wave = |x: [f64; 4]| -> (ProcaComponents, [ProcaComponents; 4]) {
        let phase = (-I * (kl.iter().zip(x.iter()).map(|(a, b)| a * b).sum::<f64>() * 1.0)).exp();
        let v: [Complex64; 4] = std::array::from_fn(|a| pol[a] * phase);
        let dv = |b: usize| -> [Complex64; 4] { std::array::from_fn(|a| -I * kl[b] * v[a]) };
        let comps = |v: [Complex64; 4], d: &dyn Fn(usize) -> [Complex64; 4]| ProcaComponents {
            vector: v,
            bivector: std::array::from_fn(|n| {
                let (a, b) = dkp_core::layout::BIVECTOR_PAIRS[n];
                let (da, db) = (d(a), d(b));
                (da[b] - db[a]) / mass
            }),
        };
        let field = comps(v, &dv);
        let partials = std::array::from_fn(|al| {
            let scale = -I * kl[al];
            let dd = |b: usize| dv(b).map(|z| z * scale);
            comps(v.map(|z| z * scale), &dd)
        });
        (field, partials)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..10 {
        let p = SpacetimePoint::new(rng.random_range(-1.0..1.0), rng.random_range(0.5..3.0), rng.random_range(0.3..2.8), rng.random_range(0.0..6.2)).unwrap();
        let (st, ct, sp, cp) = (p.theta.sin(), p.theta.cos(), p.phi.sin(), p.phi.cos());
        let x = [p.t, p.r * st * cp, p.r * st * sp, p.r * ct];
        let (cart, cart_d) = wave(x);
        // Coordinate partials in (t, r, θ, φ) by the chain rule.
        let jac = [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, st * cp, st * sp, ct],
            [0.0, p.r * ct * cp, p.r * ct * sp, -p.r * st],
            [0.0, -p.r * st * sp, p.r * st * cp, 0.0],
        ];
        let lin = |w: &[f64; 4], xs: &[ProcaComponents; 4]| ProcaComponents {
            vector: std::array::from_fn(|a| (0..4).map(|b| xs[b].vector[a] * w[b]).sum()),
            bivector: std::array::from_fn(|a| (0..4).map(|b| xs[b].bivector[a] * w[b]).sum()),
        };
        let partials: [ProcaComponents; 4] = std::array::from_fn(|al| lin(&jac[al], &cart_d));
        let d = covariant_derivatives(&CartesianTetrad, &p, &cart, &partials, &[0.0; 4]).unwrap();
        let pr = proca_equations(&d, &cart, mass);
        // The Cartesian frame's connection comes from finite differences.
        assert!(pr.worst() < 1e-6, "{pr:?}");
        assert!(divergence(&d).norm() < 1e-6);
        // Same wave in the spherical frame: rotate components by e_sph · e_cart^T.
        let es = SphericalTetrad.tetrad(&p);
        let ec = CartesianTetrad.tetrad(&p);
        let g = SphericalTetrad.metric(&p);
        let rot: [[f64; 4]; 4] = std::array::from_fn(|a| {
            std::array::from_fn(|b| {
                let mut s = 0.0;
                for al in 0..4 {
                    for be in 0..4 {
                        s += es[a][al] * g[al][be] * ec[b][be];
                    }
                }
                s * dkp_core::layout::ETA[b]
            })
        });
        let rotate = |x: &ProcaComponents| ProcaComponents {
            vector: std::array::from_fn(|a| (0..4).map(|b| x.vector[b] * rot[a][b]).sum()),
            bivector: std::array::from_fn(|n| {
                let (a, b) = dkp_core::layout::BIVECTOR_PAIRS[n];
                let mut s = Complex64::default();
                for cc in 0..4 {
                    for dd in 0..4 {
                        s += x.tensor(cc, dd) * (rot[a][cc] * rot[b][dd]);
                    }
                }
                s
            }),
        };
        let sph = rotate(&cart);
        let hstep = 1e-5;
        let sph_partials: [ProcaComponents; 4] = std::array::from_fn(|al| {
            let shifted = |s: f64| {
                let q = p.shifted(al, s);
                let (st, ct, sp, cp) = (q.theta.sin(), q.theta.cos(), q.phi.sin(), q.phi.cos());
                let (w, _) = wave([q.t, q.r * st * cp, q.r * st * sp, q.r * ct]);
                let es = SphericalTetrad.tetrad(&q);
                let ec = CartesianTetrad.tetrad(&q);
                let g = SphericalTetrad.metric(&q);
                let rot: [[f64; 4]; 4] = std::array::from_fn(|a| {
                    std::array::from_fn(|b| {
                        let mut s = 0.0;
                        for al in 0..4 {
                            for be in 0..4 {
                                s += es[a][al] * g[al][be] * ec[b][be];
                            }
                        }
                        s * dkp_core::layout::ETA[b]
                    })
                });
                ProcaComponents {
                    vector: std::array::from_fn(|a| (0..4).map(|b| w.vector[b] * rot[a][b]).sum()),
                    bivector: std::array::from_fn(|n| {
                        let (a, b) = dkp_core::layout::BIVECTOR_PAIRS[n];
                        let mut s = Complex64::default();
                        for cc in 0..4 {
                            for dd in 0..4 {
                                s += w.tensor(cc, dd) * (rot[a][cc] * rot[b][dd]);
                            }
                        }
                        s
                    }),
                }
            };
            let (a, b) = (shifted(hstep), shifted(-hstep));
            ProcaComponents {
                vector: std::array::from_fn(|k| (a.vector[k] - b.vector[k]) / (2.0 * hstep)),
                bivector: std::array::from_fn(|k| (a.bivector[k] - b.bivector[k]) / (2.0 * hstep)),
            }
        });
        let d = covariant_derivatives(&SphericalTetrad, &p, &sph, &sph_partials, &[0.0; 4]).unwrap();
        assert!(proca_equations(&d, &sph, mass).worst() < 1e-6);
        assert!(divergence(&d).norm() < 1e-6, "{}", divergence(&d).norm());
    }
}
