//! End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero
//! exit if any fails.

use std::process::{Command, ExitCode};

use anyhow::{ensure, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dkp::report::{Check, Report};
use dkp::suites::{self, ParityCase, SeparationScope};
use dkp_core::angular::QuantumNumbers;
use dkp_core::HalfInt;

const SEED: u64 = 20240611;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Result<Outcome> + 'a>);

struct Outcome {
    pass: bool,
    detail: String,
}

fn from_checks<'a>(checks: impl IntoIterator<Item = &'a Check>) -> Outcome {
    let checks: Vec<&Check> = checks.into_iter().collect();
    let failing: Vec<&str> = checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
    let bounded = checks.iter().filter(|c| c.residual.0 <= c.tolerance.0 || !c.pass);
    let worst = bounded.map(|c| c.residual.0).fold(0.0, f64::max);
    let detail = if failing.is_empty() {
        format!("{} checks, worst residual {worst:.2e}", checks.len())
    } else {
        format!("{} of {} checks fail: {}", failing.len(), checks.len(), failing.join(", "))
    };
    Outcome { pass: !checks.is_empty() && failing.is_empty(), detail }
}

fn select<'a>(rep: &'a Report, prefixes: &'a [&str]) -> impl Iterator<Item = &'a Check> {
    rep.checks.iter().filter(move |c| prefixes.iter().any(|p| c.name.starts_with(p)))
}

fn containing<'a>(rep: &'a Report, parts: &'a [&str]) -> impl Iterator<Item = &'a Check> {
    rep.checks.iter().filter(move |c| parts.iter().any(|p| c.name.contains(p)))
}

fn algebra(rep: &Report) -> Outcome {
    from_checks(select(rep, &["trilinear/", "commutators/", "cyclic_table/"]))
}

fn basis(rep: &Report) -> Outcome {
    from_checks(select(rep, &["basis_change/"]))
}

fn gauge(rep: &Report) -> Outcome {
    from_checks(select(rep, &["covariance/", "lorentz_matrices/"]))
}

fn tetrad(rep: &Report) -> Outcome {
    from_checks(select(rep, &["tetrad/divergence/"]))
}

/// Generic `(κ, j)` with `|κ| ∈ {1, 3/2, 2}`, both signs, `j ∈ {|κ|+1, |κ|+2}`.
fn generic_grid() -> Vec<(HalfInt, HalfInt)> {
    let mut out = Vec::new();
    for tk in [2, 3, 4] {
        for sign in [1, -1] {
            for dj in [1, 2] {
                out.push((HalfInt::from_twice(sign * tk), HalfInt::from_twice(tk + 2 * dj)));
            }
        }
    }
    out
}

fn negative_result() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut checks = Vec::new();
    for (kappa, j) in generic_grid() {
        for _ in 0..5 {
            let eps = rng.random_range(0.3..3.0);
            let mass = rng.random_range(0.3..2.0);
            let qn = QuantumNumbers::new(eps, j, j, kappa)?;
            let rep = suites::parity(&qn, mass, ParityCase::B)?;
            ensure!(rep.summary["cascade"] == "f5,f8,f2,f9" || !rep.passed(), "inconsistent summary");
            checks.extend(rep.checks);
        }
    }
    Ok(from_checks(&checks))
}

fn run_cli(args: &[&str], dir: &std::path::Path) -> Result<Vec<u8>> {
    let status = Command::new(env!("CARGO_BIN_EXE_dkp")).args(args).env("DKP_OUTPUT_DIR", dir).output()?;
    ensure!(status.status.code() == Some(0), "dkp {args:?} exited with {:?}", status.status.code());
    let entries: Vec<_> = std::fs::read_dir(dir)?.collect::<std::io::Result<_>>()?;
    ensure!(entries.len() == 1, "expected one report in {}", dir.display());
    Ok(std::fs::read(entries[0].path())?)
}

fn determinism() -> Result<Outcome> {
    let mut same = Vec::new();
    let a = suites::gauge(30, SEED)?.to_json();
    let b = suites::gauge(30, SEED)?.to_json();
    same.push(("gauge", a == b));
    let scope = SeparationScope { kappa: Some(HalfInt::from_int(1)), j: None, m: None };
    let a = suites::separation(scope, 5, SEED)?.to_json();
    let b = suites::separation(scope, 5, SEED)?.to_json();
    same.push(("separation", a == b));
    let other = suites::gauge(30, SEED + 1)?.to_json();
    same.push(("different seed differs", other != suites::gauge(30, SEED)?.to_json()));
    for args in [
        &["verify", "gauge", "--trials", "20", "--seed", "7"][..],
        &["verify", "lorentz", "--kappa", "-3/2", "--j", "5/2", "--epsilon", "1.3", "--mass", "1", "--seed", "7"][..],
        &["solve", "radial", "--kappa", "1", "--j", "2", "--epsilon", "1.3", "--mass", "1", "--steps", "256", "--seed", "7"][..],
    ] {
        let (d1, d2) = (tempfile::tempdir()?, tempfile::tempdir()?);
        let same_bytes = run_cli(args, d1.path())? == run_cli(args, d2.path())?;
        same.push((args[1], same_bytes));
    }
    let failing: Vec<&str> = same.iter().filter(|s| !s.1).map(|s| s.0).collect();
    Ok(Outcome {
        pass: failing.is_empty(),
        detail: if failing.is_empty() {
            format!("{} repeated runs byte-identical", same.len())
        } else {
            format!("differs: {}", failing.join(", "))
        },
    })
}

fn main() -> ExitCode {
    let attempt = |f: &dyn Fn() -> Result<Outcome>| f().unwrap_or_else(|e| Outcome { pass: false, detail: format!("error: {e:#}") });
    let algebra_rep = suites::algebra();
    let gauge_rep = suites::gauge(100, SEED);
    let sweep_rep = suites::sweep(SEED);
    let criteria: Vec<Criterion<'_>> = vec![
        ("algebra identities and cyclic tables", Box::new(|| Ok(algebra(&algebra_rep)))),
        ("basis change", Box::new(|| Ok(basis(&algebra_rep)))),
        ("gauge covariance", Box::new(|| Ok(gauge(gauge_rep.as_ref().map_err(|e| anyhow::anyhow!("{e:#}"))?)))),
        ("tetrad divergences", Box::new(|| Ok(tetrad(gauge_rep.as_ref().map_err(|e| anyhow::anyhow!("{e:#}"))?)))),
        (
            "angular separation",
            Box::new(|| Ok(from_checks(&suites::separation(SeparationScope::default(), 20, SEED)?.checks))),
        ),
        ("recursions", Box::new(|| Ok(from_checks(&suites::recursions(SEED)?.checks)))),
        ("radial systems", Box::new(|| Ok(from_checks(&suites::radial(SEED)?.checks)))),
        (
            "lorentz condition and proca form",
            Box::new(|| {
                let rep = sweep_rep.as_ref().map_err(|e| anyhow::anyhow!("{e:#}"))?;
                Ok(from_checks(containing(rep, &["/radial_lorentz/", "/proca/", "/pointwise_lorentz/"])))
            }),
        ),
        ("parity negative result", Box::new(negative_result)),
        ("determinism", Box::new(determinism)),
    ];
    let mut all = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let out = attempt(f.as_ref());
        all &= out.pass;
        println!("{} {:>2} {name}: {}", if out.pass { "PASS" } else { "FAIL" }, i + 1, out.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
