//! Command-line front end. Every subcommand prints one JSON document on
//! standard output; exit codes are 0 (success), 1 (a check failed) and
//! 2 (usage or input error).

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;

use crate::circle_index::{index_equality_report, weights_at_max, CircleSubgroup, WeightMultiset};
use crate::error::{Error, Result};
use crate::hofer::{check_norm_inequality, hofer_length_circle, positive_norm};
use crate::loop_morse::{enumerate_critical_strata, omega_g_series, transgression_series};
use crate::poly::Polynomial;
use crate::quantum::{psi_leading, Basis, Cp1Ring, LeadingTerm, Term, DEFAULT_AREA};
use crate::report::{ser_f64, DIMENSIONLESS, LATTICE_UNITS};
use crate::root_system::{fraction_string, Coweight, Family, RootSystem, SystemLabel, SUPPORTED};
use crate::variational::{
    geodesic_loop_about, hessian_spectrum_at, Functional, SpectralReport, DEFAULT_STEP, DEFAULT_TOL,
};
use crate::verify::{run_verification, Check, VerificationRun, VerifyConfig};

#[derive(Debug, Parser)]
#[command(
    name = "loopindex",
    version,
    about = "Index, Hofer length and Morse–Bott computations for circle subgroups"
)]
pub struct Cli {
    /// Also write the JSON report to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Virtual and Riemannian index of a circle subgroup.
    Index {
        #[arg(long)]
        system: String,
        /// Coweight, comma-separated, in the fundamental-coweight basis.
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
    },
    /// Weights of the circle action at the moment-map maximum.
    Weights {
        #[arg(long)]
        system: String,
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
    },
    /// Hofer length of a circle subgroup and the positive norm of `eta` on its orbit.
    Hofer {
        #[arg(long)]
        system: String,
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
        /// Defaults to `xi`.
        #[arg(long, allow_hyphen_values = true)]
        eta: Option<String>,
    },
    /// Poincaré series of the based loop group from its Morse–Bott strata.
    OmegaSeries {
        #[arg(long)]
        system: String,
        #[arg(long)]
        cutoff: usize,
    },
    /// Finite-difference Hessian spectrum at a geodesic loop in SU(2).
    #[command(name = "hessian-su2")]
    HessianSu2 {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 64)]
        n: usize,
        #[arg(long, default_value = "energy")]
        functional: String,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Finite-difference step.
        #[arg(long, default_value_t = DEFAULT_STEP)]
        h: f64,
        /// Draw the rotation axis and a conjugating element from this seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Leading term of the quantum class of the circle action on CP¹.
    #[command(name = "seidel-cp1")]
    SeidelCp1 {
        /// A1 coweight of the circle action.
        #[arg(long, allow_hyphen_values = true)]
        xi: i64,
        #[arg(long, default_value_t = DEFAULT_AREA)]
        area: f64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        sign: i8,
    },
    /// Run the batch cross-checks.
    Verify {
        #[arg(long = "box", default_value_t = 4)]
        coordinate_box: i64,
        /// `all` or a comma-separated list such as `A1,B2,G2`.
        #[arg(long, default_value = "all")]
        systems: String,
        /// `all` or a comma-separated subset of index-equality, norm-inequality,
        /// omega-series, hessian, seidel.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, default_value_t = 10_000)]
        random_pairs: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

type Units = BTreeMap<&'static str, &'static str>;

fn units(entries: &[(&'static str, &'static str)]) -> Units {
    entries.iter().copied().collect()
}

#[derive(Serialize)]
struct IndexOut {
    system: SystemLabel,
    xi: Coweight,
    weights: WeightMultiset,
    regular: bool,
    virtual_index: u64,
    riemannian_index: u64,
    agree: bool,
    units: Units,
}

#[derive(Serialize)]
struct WeightsOut {
    system: SystemLabel,
    xi: Coweight,
    weights: WeightMultiset,
    regular: bool,
    units: Units,
}

#[derive(Serialize)]
struct HoferOut {
    system: SystemLabel,
    xi: Coweight,
    eta: Coweight,
    hofer_length_squared: String,
    #[serde(serialize_with = "ser_f64")]
    hofer_length: f64,
    orbit_maximum: String,
    positive_norm_squared: String,
    #[serde(serialize_with = "ser_f64")]
    positive_norm: f64,
    norm_squared: String,
    #[serde(serialize_with = "ser_f64")]
    norm: f64,
    norm_inequality: bool,
    units: Units,
}

#[derive(Serialize)]
struct StratumOut {
    xi: Coweight,
    bott_index: u64,
    closed: bool,
    poincare: Polynomial,
}

#[derive(Serialize)]
struct SeriesOut {
    system: SystemLabel,
    cutoff: usize,
    coefficients: Vec<i64>,
    oracle: Vec<i64>,
    matches: bool,
    strata: Vec<StratumOut>,
    units: Units,
}

#[derive(Serialize)]
struct HessianOut {
    functional: Functional,
    m: u32,
    n: usize,
    #[serde(serialize_with = "ser_f64")]
    step: f64,
    dimension: usize,
    negative_count: usize,
    zero_count: usize,
    #[serde(serialize_with = "ser_f64")]
    min_eigenvalue: f64,
    #[serde(serialize_with = "ser_f64")]
    tolerance: f64,
    expected_negative: usize,
    units: Units,
}

impl HessianOut {
    fn new(r: SpectralReport) -> Self {
        Self {
            functional: r.functional,
            m: r.m,
            n: r.n,
            step: r.step,
            dimension: r.dimension,
            negative_count: r.negative_count,
            zero_count: r.zero_count,
            min_eigenvalue: r.min_eigenvalue,
            tolerance: r.tolerance,
            expected_negative: 2 * (2 * r.m as usize - 1),
            units: units(&[
                ("m", DIMENSIONLESS),
                ("n", DIMENSIONLESS),
                ("step", DIMENSIONLESS),
                ("dimension", DIMENSIONLESS),
                ("negative_count", DIMENSIONLESS),
                ("zero_count", DIMENSIONLESS),
                ("min_eigenvalue", LATTICE_UNITS),
                ("tolerance", DIMENSIONLESS),
                ("expected_negative", DIMENSIONLESS),
            ]),
        }
    }
}

#[derive(Serialize)]
struct SeidelOut {
    xi: Coweight,
    #[serde(serialize_with = "ser_f64")]
    area: f64,
    #[serde(serialize_with = "ser_f64")]
    hofer_length: f64,
    leading: LeadingTerm,
    corrections: Vec<Term>,
    nonzero: bool,
    invertible: bool,
    inverse_leading: Option<Term>,
    units: Units,
}

#[derive(Serialize)]
struct VerifyOut {
    #[serde(flatten)]
    run: VerificationRun,
    units: Units,
}

fn parse_system(s: &str) -> Result<RootSystem> {
    RootSystem::from_label(s.parse()?)
}

fn parse_coweight(s: &str, rank: usize) -> Result<Coweight> {
    let coords = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidArgument(format!("bad coweight entry {t:?} in {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if coords.len() != rank {
        return Err(Error::Dimension {
            expected: rank,
            got: coords.len(),
        });
    }
    Ok(Coweight::new(coords))
}

fn parse_list<T>(s: &str, all: &[T]) -> Result<Vec<T>>
where
    T: std::str::FromStr<Err = Error> + Clone,
{
    if s.trim() == "all" {
        return Ok(all.to_vec());
    }
    s.split(',').map(|t| t.trim().parse()).collect()
}

/// A report plus whether all its checks passed.
struct Outcome {
    json: Value,
    ok: bool,
}

fn outcome<T: Serialize>(v: &T, ok: bool) -> Result<Outcome> {
    let json = serde_json::to_value(v).map_err(|e| Error::NumericalFailure(e.to_string()))?;
    Ok(Outcome { json, ok })
}

fn random_unit<R: rand::Rng>(rng: &mut R) -> [f64; 3] {
    loop {
        let v: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if n > 1e-3 && n <= 1.0 {
            return v.map(|x| x / n);
        }
    }
}

fn execute(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Index { system, xi } => {
            let sys = parse_system(&system)?;
            let xi = parse_coweight(&xi, sys.rank())?;
            let rep = index_equality_report(&CircleSubgroup::new(&sys, xi)?)?;
            let out = IndexOut {
                system: sys.label(),
                xi: rep.xi,
                weights: rep.weights,
                regular: rep.regular,
                virtual_index: rep.virtual_index,
                riemannian_index: rep.riemannian_index,
                agree: rep.agree,
                units: units(&[
                    ("xi", DIMENSIONLESS),
                    ("weights", DIMENSIONLESS),
                    ("virtual_index", DIMENSIONLESS),
                    ("riemannian_index", DIMENSIONLESS),
                ]),
            };
            outcome(&out, rep.agree)
        }
        Command::Weights { system, xi } => {
            let sys = parse_system(&system)?;
            let xi = parse_coweight(&xi, sys.rank())?;
            let gamma = CircleSubgroup::new(&sys, xi.clone())?;
            let out = WeightsOut {
                system: sys.label(),
                regular: gamma.is_regular(),
                weights: weights_at_max(&gamma),
                xi,
                units: units(&[("xi", DIMENSIONLESS), ("weights", DIMENSIONLESS)]),
            };
            outcome(&out, true)
        }
        Command::Hofer { system, xi, eta } => {
            let sys = parse_system(&system)?;
            let xi = parse_coweight(&xi, sys.rank())?;
            let eta = match eta {
                Some(e) => parse_coweight(&e, sys.rank())?,
                None => xi.clone(),
            };
            let length = hofer_length_circle(&sys, &xi)?;
            let pn = positive_norm(&sys, &eta, &xi)?;
            let ee = sys.inner(&eta, &eta)?;
            let ok = check_norm_inequality(&sys, &eta, &xi)?;
            let out = HoferOut {
                system: sys.label(),
                hofer_length_squared: fraction_string(&length.value_squared),
                hofer_length: length.value_float,
                orbit_maximum: fraction_string(&pn.maximum),
                positive_norm_squared: fraction_string(&pn.norm.value_squared),
                positive_norm: pn.norm.value_float,
                norm: crate::root_system::sqrt_f64(&ee),
                norm_squared: fraction_string(&ee),
                norm_inequality: ok,
                xi,
                eta,
                units: units(&[
                    ("xi", DIMENSIONLESS),
                    ("eta", DIMENSIONLESS),
                    ("hofer_length_squared", LATTICE_UNITS),
                    ("hofer_length", LATTICE_UNITS),
                    ("orbit_maximum", LATTICE_UNITS),
                    ("positive_norm_squared", LATTICE_UNITS),
                    ("positive_norm", LATTICE_UNITS),
                    ("norm_squared", LATTICE_UNITS),
                    ("norm", LATTICE_UNITS),
                ]),
            };
            outcome(&out, ok)
        }
        Command::OmegaSeries { system, cutoff } => {
            let sys = parse_system(&system)?;
            let series = omega_g_series(&sys, cutoff)?;
            let oracle = transgression_series(&sys.exponents(), cutoff);
            let strata = enumerate_critical_strata(&sys, cutoff)?
                .into_iter()
                .map(|s| StratumOut {
                    xi: s.xi,
                    bott_index: s.bott_index,
                    closed: s.closed,
                    poincare: s.stratum_poly,
                })
                .collect();
            let matches = series == oracle;
            let out = SeriesOut {
                system: sys.label(),
                cutoff,
                coefficients: series.coeffs,
                oracle: oracle.coeffs,
                matches,
                strata,
                units: units(&[
                    ("cutoff", DIMENSIONLESS),
                    ("coefficients", DIMENSIONLESS),
                    ("oracle", DIMENSIONLESS),
                    ("strata", DIMENSIONLESS),
                ]),
            };
            outcome(&out, matches)
        }
        Command::HessianSu2 {
            m,
            n,
            functional,
            tol,
            h,
            seed,
        } => {
            let functional: Functional = functional.parse()?;
            let l = match seed {
                None => geodesic_loop_about(m, n, [1.0, 0.0, 0.0])?,
                Some(s) => {
                    use rand::SeedableRng;
                    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(s);
                    let axis = random_unit(&mut rng);
                    let g = crate::su2::Su2::exp(random_unit(&mut rng).map(|x| x * 1.3));
                    geodesic_loop_about(m, n, axis)?.conjugated(&g)
                }
            };
            let r = hessian_spectrum_at(&l, functional, m, h, tol)?;
            outcome(&HessianOut::new(r), true)
        }
        Command::SeidelCp1 { xi, area, sign } => {
            let a1 = RootSystem::new(Family::A, 1)?;
            let xi = Coweight::new(vec![xi]);
            let length = hofer_length_circle(&a1, &xi)?.value_float;
            let ring = Cp1Ring::new(area)?;
            let rep = psi_leading(&ring, length, sign, vec![])?;
            let inverse_leading = ring.inverse(&rep.as_element(), 3).and_then(|(inv, _)| {
                inv.terms()
                    .iter()
                    .filter(|t| t.basis == Basis::Pt)
                    .max_by(|a, b| a.exponent.total_cmp(&b.exponent))
                    .cloned()
            });
            let ok = rep.nonzero && rep.invertible;
            let out = SeidelOut {
                xi,
                area,
                hofer_length: length,
                leading: rep.leading,
                corrections: rep.corrections,
                nonzero: rep.nonzero,
                invertible: rep.invertible,
                inverse_leading,
                units: units(&[
                    ("xi", DIMENSIONLESS),
                    ("area", LATTICE_UNITS),
                    ("hofer_length", LATTICE_UNITS),
                    ("exponent", LATTICE_UNITS),
                    ("coeff", DIMENSIONLESS),
                    ("sign", DIMENSIONLESS),
                ]),
            };
            outcome(&out, ok)
        }
        Command::Verify {
            coordinate_box,
            systems,
            checks,
            random_pairs,
            seed,
        } => {
            if coordinate_box < 0 {
                return Err(Error::InvalidArgument("--box must be nonnegative".into()));
            }
            let cfg = VerifyConfig {
                systems: parse_list(&systems, &SUPPORTED)?,
                coordinate_box,
                checks: parse_list(&checks, &Check::ALL)?,
                random_pairs,
                seed,
            };
            let run = run_verification(&cfg)?;
            let ok = run.passed;
            let out = VerifyOut {
                run,
                units: units(&[("coordinate_box", DIMENSIONLESS), ("cases", DIMENSIONLESS)]),
            };
            outcome(&out, ok)
        }
    }
}

/// Run the CLI on `args` (including the program name), writing to the given
/// streams. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(stdout, "{text}")
            } else {
                write!(stderr, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command) {
        Ok(outcome) => emit(outcome, cli.out.as_deref(), stdout, stderr),
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

fn emit(outcome: Outcome, out: Option<&std::path::Path>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let text = serde_json::to_string_pretty(&outcome.json).expect("JSON values serialize");
    if let Some(path) = out {
        if let Err(e) = std::fs::write(path, format!("{text}\n")) {
            let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
            return 2;
        }
    }
    let _ = writeln!(stdout, "{text}");
    if outcome.ok {
        0
    } else {
        1
    }
}
