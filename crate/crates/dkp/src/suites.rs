//! Verification suites. Each returns a [`Report`]; randomized suites take a
//! seed and are reproducible.

use anyhow::{bail, Context, Result};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use dkp_core::angular::{
    allowed_j, build_ansatz, sigma_apply, sigma_expected, verify_recursions, AnsatzKind, QuantumNumbers,
};
use dkp_core::dk_algebra::{
    build_beta, entry_mismatches, tabulated_cyclic_beta, to_cartesian, verify_all_trilinear, verify_commutators,
    verify_trilinear, Column, DkBasis, DkMatrix, LorentzIndex, TABULATED_DEFECTS,
};
use dkp_core::layout::ETA;
use dkp_core::lorentz::{LocalLorentz, LorentzMatrix};
use dkp_core::proca::{lorentz_condition_max, lorentz_condition_pointwise, lorentz_condition_residual, proca_residual};
use dkp_core::radial::{
    dk_residual, eliminate_auxiliary, integrate, integrate_column, minimal_j_solution, radial_system, reconstruct,
    residual, Branch, InitialData, IntegrationOptions, MinimalSolution, RadialProfile,
};
use dkp_core::symmetry::{
    consistency_rank, constraint_drift, n_constraints, parity_conjugation_residual, sigma_constraint_leak, Dimension,
    NParity, StepKind,
};
use dkp_core::tetrad::{orthonormality_residual, tetrad_divergence, verify_gauge_covariance, SpacetimePoint, SphericalTetrad};
use dkp_core::HalfInt;

use crate::report::{fmt_f64, Check, Report};

/// Identities that hold in dense floating arithmetic.
pub const TOL_IDENTITY: f64 = 1e-12;
/// Gauge covariance of the matrices.
pub const TOL_GAUGE: f64 = 1e-10;
/// Connection law through finite differences.
pub const TOL_CONNECTION: f64 = 1e-6;
/// Angular pattern and minimal-family annihilation.
pub const TOL_SIGMA: f64 = 1e-10;
/// Field equation on an integrated radial profile.
pub const TOL_FIELD: f64 = 1e-5;
/// Angular recursions.
pub const TOL_RECURSION: f64 = 1e-8;
/// Closed-form minimal solutions.
pub const TOL_CLOSED_FORM: f64 = 1e-10;
/// Integration against the closed form.
pub const TOL_INTEGRATION: f64 = 1e-6;
/// Reduced system round trip.
pub const TOL_ROUND_TRIP: f64 = 1e-8;
/// Radial Lorentz condition.
pub const TOL_LORENTZ: f64 = 1e-6;
/// Proca equations with the monopole coupling.
pub const TOL_PROCA: f64 = 1e-4;
/// Smallest constraint leak or drift that counts as a violation.
pub const TOL_VIOLATION: f64 = 1e-3;

/// Default mass for suites that do not take one.
pub const DEFAULT_MASS: f64 = 1.0;
/// Radial window for integrated profiles.
pub const PROFILE_R0: f64 = 0.5;
pub const PROFILE_R1: f64 = 6.0;

fn basis_name(b: DkBasis) -> &'static str {
    match b {
        DkBasis::Cartesian => "cartesian",
        DkBasis::Cyclic => "cyclic",
    }
}

fn worst(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, f64::max)
}

fn random_point(rng: &mut ChaCha8Rng, r: (f64, f64)) -> Result<SpacetimePoint> {
    Ok(SpacetimePoint::new(
        rng.random_range(-2.0..2.0),
        rng.random_range(r.0..r.1),
        rng.random_range(0.3..2.8),
        rng.random_range(0.0..6.2),
    )?)
}

/// Admissible `(κ, j)` with `|κ| ≤ kmax` and `j ≤ jmax` (both doubled), `κ ≠ 0`.
pub fn admissible_pairs(twice_kmax: i32, twice_jmax: i32) -> Result<Vec<(HalfInt, HalfInt)>> {
    let mut out = Vec::new();
    for tk in (-twice_kmax..=twice_kmax).filter(|&t| t != 0) {
        let kappa = HalfInt::from_twice(tk);
        for j in allowed_j(kappa)?.take_while(|j| j.twice() <= twice_jmax) {
            out.push((kappa, j));
        }
    }
    Ok(out)
}

fn projections(j: HalfInt) -> Vec<HalfInt> {
    let mut out = Vec::new();
    let mut m = -j;
    while m <= j {
        out.push(m);
        m = m + HalfInt::ONE;
    }
    out
}

/// Trilinear identities and commutators in both bases, the cyclic tables
/// and the basis change.
pub fn algebra() -> Report {
    let mut rep = Report::new("algebra", 0);
    for basis in [DkBasis::Cartesian, DkBasis::Cyclic] {
        let name = basis_name(basis);
        for c in LorentzIndex::ALL {
            for a in LorentzIndex::ALL {
                for b in LorentzIndex::ALL {
                    let r = verify_trilinear(c, a, b, basis);
                    rep.push(Check::below(format!("trilinear/{name}/c{}a{}b{}", c.get(), a.get(), b.get()), r, TOL_IDENTITY));
                }
            }
        }
        rep.push(Check::below(format!("commutators/{name}"), verify_commutators(basis), TOL_IDENTITY));
    }
    for a in LorentzIndex::ALL {
        let derived = build_beta(a, DkBasis::Cyclic);
        let table = tabulated_cyclic_beta(a);
        let documented: Vec<(usize, usize)> =
            TABULATED_DEFECTS.iter().filter(|d| d.0 == a.get()).map(|d| (d.1, d.2)).collect();
        let mismatches = entry_mismatches(&derived, &table, 0.0);
        let elsewhere = worst((0..10).flat_map(|r| (0..10).map(move |c| (r, c))).filter(|&(r, c)| !documented.contains(&(r + 1, c + 1))).map(|(r, c)| (derived.get(r, c) - table.get(r, c)).norm()));
        rep.push(Check::below(format!("cyclic_table/beta{}/entries", a.get()), elsewhere, 0.0));
        rep.push(Check::exact(format!("cyclic_table/beta{}/documented_corrections", a.get()), mismatches == documented));
        let cart = to_cartesian(&derived).map(|m| m.max_abs_diff(&build_beta(a, DkBasis::Cartesian)));
        rep.push(Check::below(format!("basis_change/beta{}", a.get()), cart.and_then(|x| x).unwrap_or(f64::INFINITY), TOL_IDENTITY));
    }
    rep.push(Check::above("cyclic_table/uncorrected_trilinear", tabulated_trilinear(), TOL_VIOLATION));
    rep.summary.insert("trilinear_cartesian".into(), fmt_f64(verify_all_trilinear(DkBasis::Cartesian)));
    rep.summary.insert("trilinear_cyclic".into(), fmt_f64(verify_all_trilinear(DkBasis::Cyclic)));
    rep
}

/// Worst trilinear residual of the matrices exactly as tabulated.
fn tabulated_trilinear() -> f64 {
    let t: Vec<DkMatrix> = LorentzIndex::ALL.iter().map(|&a| tabulated_cyclic_beta(a)).collect();
    let mul = |x: &DkMatrix, y: &DkMatrix| x.matmul(y).expect("same basis");
    let mut out = 0.0_f64;
    for c in 0..4 {
        for a in 0..4 {
            for b in 0..4 {
                let lhs = mul(&mul(&t[c], &t[a]), &t[b]).add(&mul(&mul(&t[b], &t[a]), &t[c])).expect("same basis");
                let g = |x: usize, y: usize| Complex64::new(if x == y { ETA[x] } else { 0.0 }, 0.0);
                let rhs = t[c].scale(g(a, b)).add(&t[b].scale(g(a, c))).expect("same basis");
                out = out.max(lhs.max_abs_diff(&rhs).expect("same basis"));
            }
        }
    }
    out
}

fn random_unit(rng: &mut ChaCha8Rng) -> [f64; 3] {
    loop {
        let v: [f64; 3] = std::array::from_fn(|_| rng.random_range(-1.0..1.0));
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if n > 0.1 && n <= 1.0 {
            return v.map(|x| x / n);
        }
    }
}

/// Covariance under seeded random Lorentz transformations, and the
/// spherical tetrad anchors.
pub fn gauge(trials: usize, seed: u64) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = Report::new("gauge", seed).config("trials", trials);
    let (mut beta, mut kappa, mut lambda, mut conn, mut ortho) = (0.0_f64, 0.0_f64, 0.0_f64, 0.0_f64, 0.0_f64);
    for _ in 0..trials {
        let (dir, axis) = (random_unit(&mut rng), random_unit(&mut rng));
        let (rapidity, angle) = (rng.random_range(-1.5..1.5), rng.random_range(-3.1..3.1));
        let (a, b) = (rng.random_range(-0.5..0.5), rng.random_range(-1.0..1.0));
        let global = LorentzMatrix::boost(dir, rapidity)?.compose(&LorentzMatrix::rotation(axis, angle)?);
        let local = LocalLorentz::new("local", move |p: &SpacetimePoint| {
            LorentzMatrix::boost(dir, a * p.r.sin() + rapidity)
                .expect("unit direction")
                .compose(&LorentzMatrix::rotation(axis, b * p.phi + 0.3 * p.t + angle).expect("unit axis"))
        });
        let p = random_point(&mut rng, (0.5, 5.0))?;
        for l in [LocalLorentz::constant("global", global), local] {
            let g = verify_gauge_covariance(&SphericalTetrad, &l, &[p])?;
            beta = beta.max(g.beta);
            kappa = kappa.max(g.kappa_block);
            lambda = lambda.max(g.lambda_block);
            conn = conn.max(g.connection);
            ortho = ortho.max(g.pseudo_orthogonality);
        }
    }
    rep.push(Check::below("covariance/beta", beta, TOL_GAUGE));
    rep.push(Check::below("covariance/vector_to_bivector", kappa, TOL_GAUGE));
    rep.push(Check::below("covariance/bivector_to_vector", lambda, TOL_GAUGE));
    rep.push(Check::below("covariance/connection_fd", conn, TOL_CONNECTION));
    rep.push(Check::below("lorentz_matrices/pseudo_orthogonality", ortho, TOL_GAUGE));
    let mut div = [0.0_f64; 4];
    let mut orth = 0.0_f64;
    for _ in 0..50 {
        let p = random_point(&mut rng, (0.3, 5.0))?;
        let d = tetrad_divergence(&SphericalTetrad, &p)?;
        let expect = [0.0, -p.theta.cos() / (p.r * p.theta.sin()), 0.0, -2.0 / p.r];
        for k in 0..4 {
            div[k] = div[k].max((d[k] - expect[k]).abs());
        }
        orth = orth.max(orthonormality_residual(&SphericalTetrad, &p));
    }
    for (k, d) in div.iter().enumerate() {
        rep.push(Check::below(format!("tetrad/divergence/{k}"), *d, TOL_IDENTITY));
    }
    rep.push(Check::below("tetrad/orthonormality", orth, TOL_IDENTITY));
    Ok(rep)
}

fn random_init(rng: &mut ChaCha8Rng, r0: f64) -> InitialData {
    let mut z = || Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
    InitialData { r0, values: [z(), z(), z(), z()], derivatives: [z(), z(), z(), z()] }
}

/// A radial solution on `[PROFILE_R0, PROFILE_R1]`: the closed form for
/// minimal `j`, otherwise an integration from seeded initial data.
pub fn solution_profile(qn: &QuantumNumbers, mass: f64, seed: u64) -> Result<RadialProfile> {
    if AnsatzKind::classify(qn.kappa, qn.j).is_minimal() {
        let grid: Vec<f64> = (0..=550).map(|k| PROFILE_R0 + 0.01 * k as f64).collect();
        return Ok(minimal_j_solution(qn, mass, &grid, Branch::Primary)?.profile);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sys = radial_system(qn, mass)?;
    Ok(integrate(&sys, &random_init(&mut rng, PROFILE_R0), PROFILE_R1, &IntegrationOptions::default())?.normalized())
}

fn dk_worst(qn: &QuantumNumbers, prof: &RadialProfile, p: &SpacetimePoint, mass: f64) -> Result<f64> {
    Ok(worst(dk_residual(qn, prof, p, mass)?.iter().map(|z| z.norm())))
}

fn separation_pair(kappa: HalfInt, j: HalfInt, ms: &[HalfInt], trials: usize, seed: u64) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (eps, mass) = (1.2, DEFAULT_MASS);
    let tag = format!("kappa={kappa}/j={j}");
    let kind = AnsatzKind::classify(kappa, j);
    let base = QuantumNumbers::new(eps, j, j, kappa)?;
    let prof = (!kind.is_minimal()).then(|| solution_profile(&base, mass, seed)).transpose()?;
    let (mut pattern, mut annihilation, mut field) = (0.0_f64, 0.0_f64, 0.0_f64);
    for &m in ms {
        let qn = QuantumNumbers::new(eps, j, m, kappa)?;
        let ans = build_ansatz(qn)?;
        let f: Column = std::array::from_fn(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
        for _ in 0..trials {
            let p = random_point(&mut rng, (0.6, 5.5))?;
            let got = sigma_apply(&ans, &f, p.theta, p.phi);
            let want = sigma_expected(&ans, &f, p.theta, p.phi);
            pattern = pattern.max(worst((0..10).map(|k| (got[k] - want[k]).norm())));
            if kind.is_minimal() {
                annihilation = annihilation.max(worst(got.iter().map(|z| z.norm())));
                let sol = minimal_j_solution(&qn, mass, &[p.r, p.r + 0.1], Branch::Primary)?;
                field = field.max(dk_worst(&qn, &sol.profile, &p, mass)?);
            } else if let Some(prof) = &prof {
                field = field.max(dk_worst(&qn, prof, &p, mass)?);
            }
        }
    }
    let mut out = vec![
        Check::below(format!("sigma_pattern/{tag}"), pattern, TOL_SIGMA),
        Check::below(format!("dk_residual/{tag}"), field, TOL_FIELD),
    ];
    if kind.is_minimal() {
        out.push(Check::below(format!("sigma_annihilates_minimal/{tag}"), annihilation, TOL_SIGMA));
    }
    Ok(out)
}

/// Which states the separation suite visits.
#[derive(Clone, Copy, Debug, Default)]
pub struct SeparationScope {
    pub kappa: Option<HalfInt>,
    pub j: Option<HalfInt>,
    pub m: Option<HalfInt>,
}

/// The angular operator on the ansatz and the full field equation on
/// radial solutions, at `trials` random points per state.
pub fn separation(scope: SeparationScope, trials: usize, seed: u64) -> Result<Report> {
    let mut rep = Report::new("separation", seed).config("trials", trials);
    let pairs: Vec<(HalfInt, HalfInt)> = match (scope.kappa, scope.j) {
        (Some(k), Some(j)) => vec![(k, j)],
        (k, j) => admissible_pairs(4, 8)?
            .into_iter()
            .filter(|p| k.is_none_or(|k| p.0 == k) && j.is_none_or(|j| p.1 == j))
            .collect(),
    };
    if let Some(k) = scope.kappa {
        rep = rep.config("kappa", k);
    }
    if let Some(j) = scope.j {
        rep = rep.config("j", j);
    }
    if let Some(m) = scope.m {
        rep = rep.config("m", m);
    }
    if pairs.is_empty() {
        bail!("no admissible (kappa, j) in scope");
    }
    let results: Vec<Vec<Check>> = pairs
        .par_iter()
        .enumerate()
        .map(|(i, &(k, j))| {
            let ms = scope.m.map_or_else(|| projections(j), |m| vec![m]);
            separation_pair(k, j, &ms, trials, seed.wrapping_add(i as u64))
        })
        .collect::<Result<_>>()?;
    results.into_iter().for_each(|c| rep.extend(c));
    Ok(rep)
}

/// Derivative and angular recursions for every `(j, κ, m)` with `j ≤ 11/2`,
/// including half-integers.
pub fn recursions(seed: u64) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = Report::new("recursions", seed).config("j_max", "11/2");
    for tj in 0..=11 {
        let j = HalfInt::from_twice(tj);
        let mut w = 0.0_f64;
        for kappa in projections(j) {
            for m in projections(j) {
                let theta = rng.random_range(0.05..3.1);
                w = w.max(verify_recursions(j, kappa, m, theta)?.worst());
            }
        }
        rep.push(Check::below(format!("recursion/j={j}"), w, TOL_RECURSION));
    }
    Ok(rep)
}

/// The closed-form minimal solution on a uniform grid with `points + 1` nodes.
pub fn minimal_solution(kappa: HalfInt, eps: f64, mass: f64, r: (f64, f64), points: usize, branch: Branch) -> Result<MinimalSolution> {
    let j = dkp_core::angular::j_min(kappa)?;
    let qn = QuantumNumbers::new(eps, j, j, kappa)?;
    let grid: Vec<f64> = (0..=points).map(|k| r.0 + (r.1 - r.0) * k as f64 / points as f64).collect();
    Ok(minimal_j_solution(&qn, mass, &grid, branch)?)
}

/// Checks on a closed-form minimal solution: the scalar equation, the
/// first-order system and numerical integration from its first point.
pub fn minimal_checks(sol: &MinimalSolution) -> Result<Vec<Check>> {
    let tag = format!("kappa={}/eps={}", sol.qn.kappa, sol.qn.epsilon);
    let sys = radial_system(&sol.qn, sol.mass)?;
    let scalar = worst(sol.profile.r.iter().map(|&r| sol.scalar_residual(r)));
    let system = residual(&sys, &sol.profile)?;
    let (r0, r1) = (sol.profile.r[0], *sol.profile.r.last().expect("non-empty"));
    let num = integrate_column(&sys, r0, &sol.profile.f[0], r1, &IntegrationOptions { steps: sol.profile.len() - 1, ..Default::default() })?;
    let diff = worst(num.f.iter().zip(&sol.profile.f).flat_map(|(a, b)| a.iter().zip(b).map(|(x, y)| (x - y).norm())));
    Ok(vec![
        Check::below(format!("minimal/scalar_equation/{tag}"), scalar, TOL_CLOSED_FORM),
        Check::below(format!("minimal/first_order_system/{tag}"), system, TOL_CLOSED_FORM),
        Check::below(format!("minimal/integration_vs_closed_form/{tag}"), diff, TOL_INTEGRATION),
    ])
}

/// Closed forms, integration against them on `[0.1, 10]` and the
/// reduced-system round trip.
pub fn radial(seed: u64) -> Result<Report> {
    let mut rep = Report::new("radial", seed).config("mass", fmt_f64(DEFAULT_MASS));
    for (k, eps) in [("1", 0.6), ("-1", 1.25), ("2", 1.7), ("-2", 0.4), ("3/2", 0.8), ("-3/2", 2.2)] {
        let sol = minimal_solution(k.parse()?, eps, DEFAULT_MASS, (0.1, 10.0), 4096, Branch::Primary)?;
        rep.extend(minimal_checks(&sol)?);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (k, j) in [("1", "2"), ("-3/2", "5/2"), ("2", "3"), ("1", "1"), ("-2", "2")] {
        let (kappa, j): (HalfInt, HalfInt) = (k.parse()?, j.parse()?);
        let qn = QuantumNumbers::new(1.5, j, j, kappa)?;
        let sys = radial_system(&qn, DEFAULT_MASS)?;
        let reduced = eliminate_auxiliary(&sys)?;
        let prof = integrate(&reduced, &random_init(&mut rng, 0.5), 8.0, &IntegrationOptions::default())?.normalized();
        let back = reconstruct(&reduced, &prof)?;
        let tag = format!("kappa={kappa}/j={j}");
        rep.push(Check::below(format!("round_trip/{tag}"), residual(&sys, &back)?, TOL_ROUND_TRIP));
        rep.push(Check::below(format!("reduced_residual/{tag}"), residual(&reduced, &prof)?, TOL_ROUND_TRIP));
    }
    Ok(rep)
}

/// Grid points at which the Lorentz suite lists individual residuals.
pub const LORENTZ_REPORT_POINTS: usize = 32;

/// Generalized Lorentz condition and the Proca form on one radial solution.
pub fn lorentz(qn: &QuantumNumbers, mass: f64, seed: u64, per_point: bool) -> Result<Report> {
    let mut rep = Report::new("lorentz", seed)
        .config("kappa", qn.kappa)
        .config("j", qn.j)
        .config("m", qn.m)
        .config("epsilon", fmt_f64(qn.epsilon))
        .config("mass", fmt_f64(mass));
    rep.extend(lorentz_checks(qn, mass, seed, per_point)?);
    Ok(rep)
}

fn lorentz_checks(qn: &QuantumNumbers, mass: f64, seed: u64, per_point: bool) -> Result<Vec<Check>> {
    let prof = solution_profile(qn, mass, seed)?;
    let mut out = Vec::new();
    if per_point {
        let stride = (prof.len() / LORENTZ_REPORT_POINTS).max(1);
        for i in (0..prof.len()).step_by(stride) {
            let v = lorentz_condition_residual(qn, &prof, i, mass)?.norm();
            out.push(Check::below(format!("radial_lorentz/r={}", fmt_f64(prof.r[i])), v, TOL_LORENTZ));
        }
    }
    out.push(Check::below("radial_lorentz/max", lorentz_condition_max(qn, &prof, mass)?, TOL_LORENTZ));
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let points: Vec<SpacetimePoint> = (0..10).map(|_| random_point(&mut rng, (0.7, 5.5))).collect::<Result<_>>()?;
    let proca = worst(proca_residual(qn, &prof, &points, mass)?.iter().map(|r| r.worst()));
    out.push(Check::below("proca/max", proca, TOL_PROCA));
    let pointwise = points.iter().map(|p| Ok(lorentz_condition_pointwise(qn, &prof, p, mass)?.norm())).collect::<Result<Vec<f64>>>()?;
    out.push(Check::below("pointwise_lorentz/max", worst(pointwise), TOL_PROCA));
    Ok(out)
}

/// Composite-parity constraint case.
#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum ParityCase {
    /// `N = (-1)^{j+1}`.
    B,
    /// `N = (-1)^j`.
    C,
}

impl ParityCase {
    pub fn n_parity(self) -> NParity {
        match self {
            ParityCase::B => NParity::Odd,
            ParityCase::C => NParity::Even,
        }
    }
}

/// Zeroing order expected for case `b` on generic systems (1-based).
pub const CASCADE_B: [usize; 4] = [5, 8, 2, 9];

/// Exact elimination under the parity constraints plus the supporting
/// numerical checks.
pub fn parity(qn: &QuantumNumbers, mass: f64, case: ParityCase) -> Result<Report> {
    let mut rep = Report::new("parity", 0)
        .config("kappa", qn.kappa)
        .config("j", qn.j)
        .config("epsilon", fmt_f64(qn.epsilon))
        .config("mass", fmt_f64(mass))
        .config("case", format!("{case:?}").to_lowercase());
    let tag = |s: &str| format!("{s}/kappa={}/j={}", qn.kappa, qn.j);
    let sys = radial_system(qn, mass)?;
    if sys.kind != AnsatzKind::Generic {
        bail!("parity constraints need a generic system, got {}", sys.kind.name());
    }
    let con = n_constraints(case.n_parity());
    let out = consistency_rank(&sys, &con).context("exact elimination")?;
    let cascade: Vec<usize> = out.cascade().iter().map(|s| s + 1).collect();
    rep.push(Check::exact(tag("dimension_zero"), out.dimension == Dimension::Finite(0)));
    if case == ParityCase::B {
        rep.push(Check::exact(tag("cascade_order"), cascade == CASCADE_B));
    }
    let angles = [(0.3, 0.0), (0.9, 1.7), (2.2, -2.5)];
    let conj = angles.iter().map(|&(t, p)| parity_conjugation_residual(t, p)).collect::<dkp_core::Result<Vec<f64>>>()?;
    rep.push(Check::below("antipodal_conjugation", worst(conj), TOL_IDENTITY));
    rep.push(Check::above(tag("sigma_moves_constraints"), sigma_constraint_leak(&con, qn)?, TOL_VIOLATION));
    let drift = constraint_drift(qn, mass, &con, 2.0, 3.0)?;
    rep.push(Check::below(tag("drift_initial"), drift.initial, TOL_IDENTITY));
    rep.push(Check::above(tag("drift"), drift.max, TOL_VIOLATION));
    let text = |v: &[usize]| v.iter().map(|s| format!("f{s}")).collect::<Vec<_>>().join(",");
    rep.summary.insert("dimension".into(), out.dimension.to_string());
    rep.summary.insert("cascade".into(), text(&cascade));
    rep.summary.insert("free_slots".into(), text(&out.free_slots.iter().map(|s| s + 1).collect::<Vec<_>>()));
    let steps: Vec<String> = out
        .steps
        .iter()
        .filter(|s| s.kind != StepKind::Imposed)
        .map(|s| format!("{:?}: {}", s.kind, s.note))
        .collect();
    rep.summary.insert("steps".into(), steps.join("; "));
    rep.summary.insert("pass".into(), rep.passed().to_string());
    Ok(rep)
}

/// Energies visited by the sweep.
pub const SWEEP_EPSILONS: [f64; 3] = [0.6, 1.3, 2.5];

/// Lorentz, Proca and (for generic systems) parity checks over
/// `|κ| ≤ 2`, `j ≤ |κ| + 2` (at most 4) and [`SWEEP_EPSILONS`], in parallel.
pub fn sweep(seed: u64) -> Result<Report> {
    let mut jobs = Vec::new();
    for (kappa, j) in admissible_pairs(4, 8)? {
        if j > kappa.abs() + HalfInt::from_int(2) {
            continue;
        }
        for (ie, &eps) in SWEEP_EPSILONS.iter().enumerate() {
            jobs.push((kappa, j, ie, eps));
        }
    }
    let mut results: Vec<((i32, i32, usize), Vec<Check>)> = jobs
        .par_iter()
        .enumerate()
        .map(|(i, &(kappa, j, ie, eps))| {
            let qn = QuantumNumbers::new(eps, j, j, kappa)?;
            let prefix = format!("kappa={kappa}/j={j}/eps={eps}");
            let mut checks = lorentz_checks(&qn, DEFAULT_MASS, seed.wrapping_add(i as u64), false)?;
            if AnsatzKind::classify(kappa, j) == AnsatzKind::Generic && ie == 0 {
                checks.extend(parity(&qn, DEFAULT_MASS, ParityCase::B)?.checks);
            }
            let checks = checks.into_iter().map(|c| Check { name: format!("{prefix}/{}", c.name), ..c }).collect();
            Ok(((kappa.twice(), j.twice(), ie), checks))
        })
        .collect::<Result<_>>()?;
    results.sort_by_key(|r| r.0);
    let mut rep = Report::new("sweep", seed)
        .config("mass", fmt_f64(DEFAULT_MASS))
        .config("points", results.len())
        .config("epsilons", SWEEP_EPSILONS.iter().map(|e| fmt_f64(*e)).collect::<Vec<_>>().join(","));
    results.into_iter().for_each(|(_, c)| rep.extend(c));
    Ok(rep)
}
