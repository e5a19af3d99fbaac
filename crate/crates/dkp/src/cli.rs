//! Command-line parsing and dispatch.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dkp_core::angular::QuantumNumbers;
use dkp_core::dk_algebra::{build_beta, build_j, DkBasis, DkMatrix, LorentzIndex};
use dkp_core::layout::BIVECTOR_PAIRS;
use dkp_core::radial::{integrate, radial_system, residual, Behaviour, Branch, InitialData, IntegrationOptions, RadialProfile};
use dkp_core::HalfInt;

use crate::report::{fmt_f64, Float, Report};
use crate::suites::{self, ParityCase, SeparationScope};

/// Environment variable naming the default directory for output files.
pub const OUTPUT_DIR_ENV: &str = "DKP_OUTPUT_DIR";

#[derive(Parser, Debug)]
#[command(name = "dkp", version, about = "Verification suites and radial solvers for the spin-1 monopole problem")]
pub struct Cli {
    /// Output format for reports and matrices.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Output file; defaults to a file in the output directory, else stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Directory for output files when `--out` is absent.
    #[arg(long, env = OUTPUT_DIR_ENV, global = true)]
    pub out_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print matrices.
    #[command(subcommand)]
    Show(Show),
    /// Run a verification suite.
    #[command(subcommand)]
    Verify(Verify),
    /// Solve the radial problem.
    #[command(subcommand)]
    Solve(Solve),
    /// Lorentz, Proca and parity checks over the (kappa, j, epsilon) grid.
    Sweep {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum Show {
    /// All four beta matrices and the six generators j^{ab}.
    Matrices {
        #[arg(long, value_enum, default_value_t = BasisArg::Cyclic)]
        basis: BasisArg,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum BasisArg {
    Cartesian,
    Cyclic,
}

impl From<BasisArg> for DkBasis {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::Cartesian => DkBasis::Cartesian,
            BasisArg::Cyclic => DkBasis::Cyclic,
        }
    }
}

#[derive(Args, Debug, Clone, Copy)]
pub struct StateArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: HalfInt,
    #[arg(long)]
    pub j: HalfInt,
    /// Projection of the total momentum; defaults to `j`.
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<HalfInt>,
    #[arg(long)]
    pub epsilon: f64,
    #[arg(long)]
    pub mass: f64,
}

impl StateArgs {
    fn quantum_numbers(&self) -> Result<QuantumNumbers> {
        Ok(QuantumNumbers::new(self.epsilon, self.j, self.m.unwrap_or(self.j), self.kappa)?)
    }
}

#[derive(Subcommand, Debug)]
pub enum Verify {
    /// Trilinear identities, commutators, cyclic tables, basis change.
    Algebra,
    /// Covariance under random Lorentz transformations and tetrad anchors.
    Gauge {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Angular operator and field equation on the separated ansatz.
    Separation {
        #[arg(long, allow_hyphen_values = true)]
        kappa: Option<HalfInt>,
        #[arg(long)]
        j: Option<HalfInt>,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<HalfInt>,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Angular recursions for j up to 11/2.
    Recursions {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Closed forms, integration and the reduced-system round trip.
    Radial {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Generalized Lorentz condition and Proca form on a radial solution.
    Lorentz {
        #[command(flatten)]
        state: StateArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Exact elimination under the composite-parity constraints.
    Parity {
        #[command(flatten)]
        state: StateArgs,
        #[arg(long, value_enum)]
        case: ParityCase,
    },
}

#[derive(Subcommand, Debug)]
pub enum Solve {
    /// Closed-form solution for minimal j.
    Minimal {
        #[arg(long, allow_hyphen_values = true)]
        kappa: HalfInt,
        #[arg(long)]
        epsilon: f64,
        #[arg(long)]
        mass: f64,
        #[arg(long, value_enum, default_value_t = BranchArg::Primary)]
        branch: BranchArg,
        #[arg(long, default_value_t = 0.1)]
        r0: f64,
        #[arg(long, default_value_t = 10.0)]
        r1: f64,
        #[arg(long, default_value_t = 4096)]
        points: usize,
    },
    /// Integrate the radial system and write `r, Re f1, Im f1, ..., Im f10`.
    Radial {
        #[command(flatten)]
        state: StateArgs,
        #[arg(long, default_value_t = 0.5)]
        r0: f64,
        #[arg(long, default_value_t = 10.0)]
        r1: f64,
        #[arg(long, default_value_t = 4096)]
        steps: usize,
        /// Seed for the initial data.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum BranchArg {
    Primary,
    Secondary,
}

/// Where a command's main output goes.
struct Sink {
    path: Option<PathBuf>,
}

impl Sink {
    fn new(cli: &Cli, stem: &str, ext: &str) -> Sink {
        let path = cli.out.clone().or_else(|| cli.out_dir.as_ref().map(|d| d.join(format!("{stem}.{ext}"))));
        Sink { path }
    }

    fn write(&self, text: &str) -> Result<()> {
        match &self.path {
            Some(p) => {
                if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
                }
                std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))
            }
            None => {
                std::io::stdout().write_all(text.as_bytes())?;
                Ok(())
            }
        }
    }
}

fn matrix_list(basis: DkBasis) -> Vec<DkMatrix> {
    let mut out: Vec<DkMatrix> = LorentzIndex::ALL.iter().map(|&a| build_beta(a, basis).with_label(format!("beta{}", a.get()))).collect();
    for &(p, q) in BIVECTOR_PAIRS.iter() {
        let idx = |x: usize| LorentzIndex::new(x as u8).expect("pair index");
        out.push(build_j(idx(p), idx(q), basis).with_label(format!("j{p}{q}")));
    }
    out
}

#[derive(serde::Serialize)]
struct Entry {
    re: Float,
    im: Float,
}

#[derive(serde::Serialize)]
struct MatrixDump {
    basis: &'static str,
    name: String,
    rows: Vec<Vec<Entry>>,
}

/// The matrices in the requested format.
pub fn render_matrices(basis: DkBasis, format: Format) -> Result<String> {
    let name = match basis {
        DkBasis::Cartesian => "cartesian",
        DkBasis::Cyclic => "cyclic",
    };
    let mats = matrix_list(basis);
    match format {
        Format::Json => {
            let dump: Vec<MatrixDump> = mats
                .iter()
                .map(|m| MatrixDump {
                    basis: name,
                    name: m.label().to_string(),
                    rows: (0..10).map(|r| (0..10).map(|c| Entry { re: Float(m.get(r, c).re), im: Float(m.get(r, c).im) }).collect()).collect(),
                })
                .collect();
            Ok(serde_json::to_string_pretty(&dump)? + "\n")
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["basis", "name", "row", "col", "re", "im"])?;
            for m in &mats {
                for r in 0..10 {
                    for c in 0..10 {
                        let z = m.get(r, c);
                        w.write_record([name.to_string(), m.label().to_string(), (r + 1).to_string(), (c + 1).to_string(), fmt_f64(z.re), fmt_f64(z.im)])?;
                    }
                }
            }
            Ok(String::from_utf8(w.into_inner()?)?)
        }
    }
}

/// `r, Re f1, Im f1, ..., Re f10, Im f10`.
pub fn profile_csv(prof: &RadialProfile) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec![String::from("r")];
    for k in 1..=10 {
        header.push(format!("re_f{k}"));
        header.push(format!("im_f{k}"));
    }
    w.write_record(&header)?;
    for (r, f) in prof.r.iter().zip(&prof.f) {
        let mut row = vec![fmt_f64(*r)];
        for z in f {
            row.push(fmt_f64(z.re));
            row.push(fmt_f64(z.im));
        }
        w.write_record(&row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

/// Seeded initial data at `r0`.
pub fn seeded_initial_data(seed: u64, r0: f64) -> InitialData {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut z = || Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
    InitialData { r0, values: [z(), z(), z(), z()], derivatives: [z(), z(), z(), z()] }
}

fn render_report(rep: &Report, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(rep.to_json()),
        Format::Csv => rep.to_csv(),
    }
}

/// Runs the suite behind a `verify` subcommand.
pub fn verify_report(v: &Verify) -> Result<Report> {
    match v {
        Verify::Algebra => Ok(suites::algebra()),
        Verify::Gauge { trials, seed } => suites::gauge(*trials, *seed),
        Verify::Separation { kappa, j, m, trials, seed } => {
            suites::separation(SeparationScope { kappa: *kappa, j: *j, m: *m }, *trials, *seed)
        }
        Verify::Recursions { seed } => suites::recursions(*seed),
        Verify::Radial { seed } => suites::radial(*seed),
        Verify::Lorentz { state, seed } => suites::lorentz(&state.quantum_numbers()?, state.mass, *seed, true),
        Verify::Parity { state, case } => suites::parity(&state.quantum_numbers()?, state.mass, *case),
    }
}

fn verify_name(v: &Verify) -> &'static str {
    match v {
        Verify::Algebra => "algebra",
        Verify::Gauge { .. } => "gauge",
        Verify::Separation { .. } => "separation",
        Verify::Recursions { .. } => "recursions",
        Verify::Radial { .. } => "radial",
        Verify::Lorentz { .. } => "lorentz",
        Verify::Parity { .. } => "parity",
    }
}

/// Outcome of a command: the report it checked, if any.
pub fn dispatch(cli: &Cli) -> Result<Option<Report>> {
    match &cli.command {
        Command::Show(Show::Matrices { basis }) => {
            Sink::new(cli, "matrices", cli.format.extension()).write(&render_matrices((*basis).into(), cli.format)?)?;
            Ok(None)
        }
        Command::Verify(v) => {
            let rep = verify_report(v)?;
            Sink::new(cli, verify_name(v), cli.format.extension()).write(&render_report(&rep, cli.format)?)?;
            Ok(Some(rep))
        }
        Command::Sweep { seed } => {
            let rep = suites::sweep(*seed)?;
            Sink::new(cli, "sweep", cli.format.extension()).write(&render_report(&rep, cli.format)?)?;
            Ok(Some(rep))
        }
        Command::Solve(Solve::Minimal { kappa, epsilon, mass, branch, r0, r1, points }) => {
            let branch = match branch {
                BranchArg::Primary => Branch::Primary,
                BranchArg::Secondary => Branch::Secondary,
            };
            let sol = suites::minimal_solution(*kappa, *epsilon, *mass, (*r0, *r1), *points, branch)?;
            let mut rep = Report::new("minimal", 0)
                .config("kappa", kappa)
                .config("j", sol.qn.j)
                .config("epsilon", fmt_f64(*epsilon))
                .config("mass", fmt_f64(*mass))
                .config("branch", format!("{branch:?}").to_lowercase());
            rep.extend(suites::minimal_checks(&sol)?);
            let behaviour = match sol.behaviour {
                Behaviour::Oscillatory { .. } => "oscillatory",
                Behaviour::Decaying { .. } => "decaying",
                Behaviour::Growing { .. } => "growing",
                Behaviour::Linear => "linear",
            };
            rep.summary.insert("behaviour".into(), behaviour.into());
            rep.summary.insert("rate".into(), fmt_f64(sol.rate()));
            rep.summary.insert("carrier".into(), format!("f{}", sol.slot + 1));
            if let Some(w) = &sol.warning {
                rep.summary.insert("warning".into(), w.clone());
                eprintln!("warning: {w}");
            }
            let closed = rep.checks.iter().take(2).map(|c| c.residual.0).fold(0.0, f64::max);
            eprintln!("{behaviour}, rate {}, closed-form residual {closed:.3e}", sol.rate());
            Sink::new(cli, "minimal", cli.format.extension()).write(&render_report(&rep, cli.format)?)?;
            Ok(Some(rep))
        }
        Command::Solve(Solve::Radial { state, r0, r1, steps, seed }) => {
            let qn = state.quantum_numbers()?;
            let sys = radial_system(&qn, state.mass)?;
            let opts = IntegrationOptions { steps: *steps, ..Default::default() };
            let prof = integrate(&sys, &seeded_initial_data(*seed, *r0), *r1, &opts)?;
            eprintln!("{} system, {} points, residual {:.3e}", sys.kind.name(), prof.len(), residual(&sys, &prof)?);
            Sink::new(cli, "radial", "csv").write(&profile_csv(&prof)?)?;
            Ok(None)
        }
    }
}

/// Parses arguments and runs; exit 0 on success, 1 when a check fails,
/// 2 on usage or input errors.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match dispatch(&cli) {
        Ok(Some(rep)) if !rep.passed() => {
            for c in rep.failing() {
                eprintln!("FAIL {}: residual {} tolerance {}", c.name, c.residual.text(), c.tolerance.text());
            }
            ExitCode::from(1)
        }
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Reads a report file back.
pub fn read_report(path: &Path) -> Result<serde_json::Value> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(serde_json::from_str(&text)?)
}
