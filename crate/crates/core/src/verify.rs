//! Batch cross-checks over many root systems and coweights.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::circle_index::{index_equality_report, CircleSubgroup};
use crate::error::{Error, Result};
use crate::hofer::{check_norm_inequality, hofer_length_circle, orbit_sum, positive_norm};
use crate::loop_morse::{bott_index, perfectness_check};
use crate::quantum::{psi_leading, Basis, Cp1Ring, Term, DEFAULT_AREA};
use crate::root_system::{Coweight, RootSystem, SystemLabel, SUPPORTED};
use crate::variational::{hessian_spectrum, Functional, DEFAULT_STEP, DEFAULT_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    IndexEquality,
    NormInequality,
    OmegaSeries,
    Hessian,
    Seidel,
}

impl Check {
    pub const ALL: [Check; 5] = [
        Check::IndexEquality,
        Check::NormInequality,
        Check::OmegaSeries,
        Check::Hessian,
        Check::Seidel,
    ];
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Check::IndexEquality => "index-equality",
            Check::NormInequality => "norm-inequality",
            Check::OmegaSeries => "omega-series",
            Check::Hessian => "hessian",
            Check::Seidel => "seidel",
        })
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.to_string() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown check {s:?}")))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub check: Check,
    pub passed: bool,
    pub cases: u64,
    /// Present exactly when the check failed.
    pub counterexample: Option<Value>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationRun {
    pub systems: Vec<SystemLabel>,
    pub coordinate_box: i64,
    pub results: Vec<CheckResult>,
    pub passed: bool,
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub systems: Vec<SystemLabel>,
    pub coordinate_box: i64,
    pub checks: Vec<Check>,
    /// Random pairs per rank 3–4 system in the norm-inequality sweep.
    pub random_pairs: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            systems: SUPPORTED.to_vec(),
            coordinate_box: 4,
            checks: Check::ALL.to_vec(),
            random_pairs: 10_000,
            seed: 0x5eed,
        }
    }
}

struct Tally {
    cases: u64,
    counterexample: Option<Value>,
}

impl Tally {
    fn new() -> Self {
        Self {
            cases: 0,
            counterexample: None,
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.cases += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(witness());
        }
    }

    fn finish(self, check: Check) -> CheckResult {
        CheckResult {
            check,
            passed: self.counterexample.is_none(),
            cases: self.cases,
            counterexample: self.counterexample,
        }
    }
}

fn fail(t: &mut Tally, e: Error) {
    t.record(false, || json!({ "error": e.to_string() }));
}

/// Virtual index = conjugate-point count = Bott index of the dominant
/// representative, for every regular coweight in the box.
pub fn check_index_equality(systems: &[RootSystem], bound: i64) -> CheckResult {
    let mut t = Tally::new();
    for sys in systems {
        for xi in sys.coweight_box(bound) {
            if xi.is_zero() || !sys.is_regular(&xi) {
                continue;
            }
            let outcome = (|| -> Result<(u64, u64, u64)> {
                let rep = index_equality_report(&CircleSubgroup::new(sys, xi.clone())?)?;
                let dom = sys.dominant_representative(&xi)?;
                Ok((rep.virtual_index, rep.riemannian_index, bott_index(sys, &dom)?))
            })();
            match outcome {
                Ok((v, r, b)) => t.record(v == r && r == b, || {
                    json!({"system": sys.label(), "xi": xi, "virtual_index": v,
                           "riemannian_index": r, "bott_index": b})
                }),
                Err(e) => fail(&mut t, e),
            }
        }
    }
    t.finish(Check::IndexEquality)
}

fn norm_case(t: &mut Tally, sys: &RootSystem, eta: &Coweight, xi: &Coweight) {
    match check_norm_inequality(sys, eta, xi) {
        Ok(ok) => t.record(ok, || json!({"system": sys.label(), "eta": eta, "xi": xi})),
        Err(e) => fail(t, e),
    }
}

/// Exact norm inequality, Hofer length = ‖ξ‖, the equality case at η = ξ,
/// and vanishing orbit sums.
pub fn check_norm_inequality_sweep(systems: &[RootSystem], bound: i64, random_pairs: usize, seed: u64) -> CheckResult {
    let mut t = Tally::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for sys in systems {
        let xis: Vec<Coweight> = sys.coweight_box(bound).filter(|x| !x.is_zero()).collect();
        for xi in &xis {
            let outcome = (|| -> Result<bool> {
                let xx = sys.inner(xi, xi)?;
                let length_ok = hofer_length_circle(sys, xi)?.value_squared == xx;
                let eq_ok = positive_norm(sys, xi, xi)?.norm.value_squared == xx;
                let sum_ok = orbit_sum(sys, xi)?.is_zero();
                Ok(length_ok && eq_ok && sum_ok)
            })();
            match outcome {
                Ok(ok) => t.record(
                    ok,
                    || json!({"system": sys.label(), "xi": xi, "case": "equality/orbit-sum"}),
                ),
                Err(e) => fail(&mut t, e),
            }
        }
        if sys.rank() <= 2 {
            for xi in &xis {
                for eta in sys.coweight_box(bound) {
                    norm_case(&mut t, sys, &eta, xi);
                }
            }
        } else {
            for _ in 0..random_pairs {
                let draw = |rng: &mut ChaCha8Rng| {
                    Coweight::new((0..sys.rank()).map(|_| rng.gen_range(-bound..=bound)).collect())
                };
                let xi = loop {
                    let v = draw(&mut rng);
                    if !v.is_zero() {
                        break v;
                    }
                };
                let eta = draw(&mut rng);
                norm_case(&mut t, sys, &eta, &xi);
            }
        }
    }
    t.finish(Check::NormInequality)
}

/// Cutoff used for the perfectness check at a given rank.
pub fn default_series_cutoff(rank: usize) -> usize {
    match rank {
        1 | 2 => 16,
        3 => 12,
        _ => 10,
    }
}

pub fn check_omega_series(systems: &[RootSystem]) -> CheckResult {
    let mut t = Tally::new();
    for sys in systems {
        let cutoff = default_series_cutoff(sys.rank());
        match perfectness_check(sys, cutoff) {
            Ok((morse, oracle)) => t.record(morse == oracle, || {
                json!({"system": sys.label(), "cutoff": cutoff,
                       "morse_bott": morse.coeffs, "oracle": oracle.coeffs})
            }),
            Err(e) => fail(&mut t, e),
        }
    }
    t.finish(Check::OmegaSeries)
}

pub fn check_hessian() -> CheckResult {
    let mut t = Tally::new();
    for (functional, m, expect_neg, expect_zero) in [
        (Functional::Energy, 1u32, Some(2usize), Some(2usize)),
        (Functional::Energy, 2, Some(6), None),
        (Functional::Lplus, 1, None, None),
    ] {
        match hessian_spectrum(functional, m, 64, DEFAULT_STEP, DEFAULT_TOL) {
            Ok(r) => {
                let ok = match expect_neg {
                    Some(k) => r.negative_count == k && expect_zero.is_none_or(|z| r.zero_count == z),
                    None => r.negative_count >= 2 * (2 * m as usize - 1),
                };
                t.record(ok, || serde_json::to_value(&r).unwrap_or(Value::Null));
            }
            Err(e) => fail(&mut t, e),
        }
    }
    t.finish(Check::Hessian)
}

pub fn check_seidel() -> CheckResult {
    let mut t = Tally::new();
    let outcome = (|| -> Result<(bool, bool)> {
        let a1 = RootSystem::new(crate::root_system::Family::A, 1)?;
        let l = hofer_length_circle(&a1, &Coweight::new(vec![2]))?.value_float;
        let ring = Cp1Ring::new(DEFAULT_AREA)?;
        let rep = psi_leading(&ring, l, 1, vec![])?;
        let ok = rep.nonzero && rep.invertible && rep.leading.basis == Basis::Pt && rep.leading.exponent == l;
        let rejects = psi_leading(&ring, l, 1, vec![Term::int(1, Basis::Fund, l)]).is_err();
        Ok((ok, rejects))
    })();
    match outcome {
        Ok((ok, rejects)) => {
            t.record(ok, || json!({"case": "leading term", "xi": [2]}));
            t.record(rejects, || json!({"case": "energy bound", "xi": [2]}));
        }
        Err(e) => fail(&mut t, e),
    }
    t.finish(Check::Seidel)
}

pub fn run_verification(cfg: &VerifyConfig) -> Result<VerificationRun> {
    let systems: Vec<RootSystem> = cfg
        .systems
        .iter()
        .map(|&l| RootSystem::from_label(l))
        .collect::<Result<_>>()?;
    let mut results = Vec::new();
    for &check in &cfg.checks {
        results.push(match check {
            Check::IndexEquality => check_index_equality(&systems, cfg.coordinate_box),
            Check::NormInequality => {
                check_norm_inequality_sweep(&systems, cfg.coordinate_box, cfg.random_pairs, cfg.seed)
            }
            Check::OmegaSeries => check_omega_series(&systems),
            Check::Hessian => check_hessian(),
            Check::Seidel => check_seidel(),
        });
    }
    let passed = results.iter().all(|r| r.passed);
    Ok(VerificationRun {
        systems: cfg.systems.clone(),
        coordinate_box: cfg.coordinate_box,
        results,
        passed,
    })
}
