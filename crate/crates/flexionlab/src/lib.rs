//! Suite registry, configuration, execution and reporting for flexion identity checks.
//!
//! [`run`] builds every selected suite into one shared graph, evaluates the
//! sampled checks on a worker pool and assembles one [`SuiteReport`] per suite.
//! Reports depend only on the [`Config`] fields echoed into them.

pub mod registry;
pub mod report;
mod suites;

use std::collections::BTreeMap;
use std::time::Instant;

use flexion_core::canonical::{Canon, FlexionUnit};
use flexion_core::check::{run_checks, worker_pool, CheckReport, Expect, SamplePlan, Status};
use flexion_core::negelon::{
    convolution_step, finite_difference_step, negelon_scan, scalar_report, tuples, vandermonde_step,
};
use flexion_core::{EvalContext, Rat, RatGraph};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

pub use registry::{SuiteInfo, SUITES};
use suites::{Env, Item, Items, ScalarJob};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unknown suite `{0}` (run `flexionlab list` for the registered names)")]
    UnknownSuite(String),
    #[error("unknown unit `{0}` (known: {1})")]
    UnknownUnit(String, String),
    #[error("{0}")]
    Unit(String),
    #[error("invalid configuration: {0}")]
    Invalid(String),
}

#[derive(Clone, Debug)]
pub struct Config {
    pub unit: String,
    /// Suite names; `all` expands to every registered suite.
    pub suites: Vec<String>,
    pub max_length: usize,
    pub samples: usize,
    pub seed: u64,
    /// Worker threads; `0` means all available.
    pub jobs: usize,
    pub retry_cap: usize,
    /// Per-suite overrides of `max_length`.
    pub suite_lengths: BTreeMap<String, usize>,
    /// Record wall time per suite (kept out of reports unless requested).
    pub timings: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            unit: "polar".to_string(),
            suites: vec!["all".to_string()],
            max_length: 4,
            samples: 4,
            seed: 0,
            jobs: 0,
            retry_cap: 8,
            suite_lengths: BTreeMap::new(),
            timings: false,
        }
    }
}

impl Config {
    pub fn effective_jobs(&self) -> usize {
        if self.jobs == 0 {
            std::thread::available_parallelism().map_or(1, |n| n.get())
        } else {
            self.jobs
        }
    }

    pub fn length_for(&self, suite: &str) -> usize {
        self.suite_lengths.get(suite).copied().unwrap_or(self.max_length)
    }

    /// Registered suites selected by this config, in registry order.
    pub fn resolve_suites(&self) -> Result<Vec<&'static SuiteInfo>, Error> {
        for name in self.suites.iter().chain(self.suite_lengths.keys()) {
            if name != "all" && registry::find(name).is_none() {
                return Err(Error::UnknownSuite(name.clone()));
            }
        }
        let all = self.suites.iter().any(|s| s == "all");
        Ok(SUITES
            .iter()
            .filter(|s| all || self.suites.iter().any(|n| n == s.name))
            .collect())
    }
}

/// The result-relevant part of a [`Config`]; worker count is left out because
/// it never changes a report.
#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub unit: String,
    pub suites: Vec<String>,
    pub max_length: usize,
    pub samples: usize,
    pub seed: u64,
    pub retry_cap: usize,
    pub suite_lengths: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Totals {
    pub identities: usize,
    pub identities_passed: usize,
    pub identities_failed: usize,
    pub negative_controls: usize,
    pub points: usize,
    pub points_passed: usize,
    pub points_failed: usize,
    pub points_skipped: usize,
}

impl Totals {
    fn add(&mut self, r: &CheckReport) {
        self.identities += 1;
        if r.passed() {
            self.identities_passed += 1;
        } else {
            self.identities_failed += 1;
        }
        if r.expect == Expect::Fails {
            self.negative_controls += 1;
        }
        self.points += r.points.len();
        self.points_passed += r.passed_points;
        self.points_failed += r.failed_points;
        self.points_skipped += r.skipped_points;
    }

    fn merge(&mut self, o: &Totals) {
        self.identities += o.identities;
        self.identities_passed += o.identities_passed;
        self.identities_failed += o.identities_failed;
        self.negative_controls += o.negative_controls;
        self.points += o.points;
        self.points_passed += o.points_passed;
        self.points_failed += o.points_failed;
        self.points_skipped += o.points_skipped;
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub anchor: String,
    pub description: String,
    pub max_length: usize,
    pub passed: bool,
    pub totals: Totals,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_seconds: Option<f64>,
    pub identities: Vec<CheckReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub tool: String,
    pub version: String,
    pub config: ConfigEcho,
    pub passed: bool,
    pub totals: Totals,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_seconds: Option<f64>,
    pub suites: Vec<SuiteReport>,
}

impl RunReport {
    pub fn suite(&self, name: &str) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.suite == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

struct Prepared {
    info: &'static SuiteInfo,
    plan: SamplePlan,
    items: Vec<Item>,
}

fn run_scalar(name: &str, job: &ScalarJob) -> CheckReport {
    match *job {
        ScalarJob::NegelonScan { r_max, h_min, expect } => negelon_scan::<Rat>(name, r_max, h_min, expect),
        ScalarJob::TupleCount { r_max, h_min, expected } => {
            let n = tuples(r_max, h_min).len();
            let point = flexion_core::check::PointReport {
                identity: name.to_string(),
                length: r_max as usize,
                split: None,
                word: json!([]),
                params: Some(json!({"r_max": r_max, "h_min": h_min})),
                lhs: Some(n.to_string()),
                rhs: Some(expected.to_string()),
                status: if n == expected { Status::Pass } else { Status::Fail },
                attempts: 1,
                error: None,
            };
            scalar_report(name, Expect::Holds, vec![point])
        }
        ScalarJob::Vandermonde { n_max } => vandermonde_step::<Rat>(name, n_max),
        ScalarJob::Convolution { n_max } => convolution_step::<Rat>(name, n_max),
        ScalarJob::FiniteDifference { n_max } => finite_difference_step::<Rat>(name, n_max),
    }
}

/// Runs the selected suites.
pub fn run(config: &Config) -> Result<RunReport, Error> {
    let started = Instant::now();
    let selected = config.resolve_suites()?;
    if config.samples == 0 {
        return Err(Error::Invalid("--samples must be at least 1".into()));
    }
    let unit = FlexionUnit::<Rat>::by_name(&config.unit).ok_or_else(|| {
        Error::UnknownUnit(config.unit.clone(), FlexionUnit::<Rat>::names().join(", "))
    })?;
    unit.check_tripartite_seeded(config.seed, 32).map_err(Error::Unit)?;
    let mirror_unit = unit.conjugate();
    mirror_unit.check_tripartite_seeded(config.seed, 32).map_err(Error::Unit)?;

    let graph_len = selected.iter().map(|s| config.length_for(s.name)).max().unwrap_or(0);
    let mut g = RatGraph::new(graph_len);
    let base = Canon::build(&mut g, &unit);
    let mirror = Canon::build(&mut g, &mirror_unit);

    let prepared: Vec<Prepared> = selected
        .iter()
        .map(|info| {
            let len = config.length_for(info.name);
            let env = Env {
                c: &base,
                m: &mirror,
                unit: &unit,
                seed: config.seed,
                max_length: len,
            };
            let mut items = Items::new(len);
            suites::build(info.name, &mut g, &env, &mut items);
            Prepared {
                info,
                plan: SamplePlan {
                    max_length: len,
                    samples: config.samples,
                    seed: config.seed,
                    ..SamplePlan::default()
                },
                items: items.items,
            }
        })
        .collect();

    let mut ctx = EvalContext::new(&g);
    ctx.retry_cap = config.retry_cap;
    let ctx = ctx;
    let pool = worker_pool(config.effective_jobs());
    let executed: Vec<(Vec<CheckReport>, f64)> = pool.install(|| {
        prepared
            .par_iter()
            .map(|p| {
                let t0 = Instant::now();
                let checks: Vec<_> = p
                    .items
                    .iter()
                    .filter_map(|i| match i {
                        Item::Mould(c) => Some(c.clone()),
                        Item::Scalar(..) => None,
                    })
                    .collect();
                let mut mould_reports = run_checks(&ctx, &checks, &p.plan, Some(&pool)).into_iter();
                let reports = p
                    .items
                    .iter()
                    .map(|i| match i {
                        Item::Mould(_) => mould_reports.next().expect("one report per check"),
                        Item::Scalar(name, job) => run_scalar(name, job),
                    })
                    .collect();
                (reports, t0.elapsed().as_secs_f64())
            })
            .collect()
    });

    let mut totals = Totals::default();
    let suites: Vec<SuiteReport> = prepared
        .iter()
        .zip(executed)
        .map(|(p, (identities, secs))| {
            let mut t = Totals::default();
            identities.iter().for_each(|r| t.add(r));
            totals.merge(&t);
            SuiteReport {
                suite: p.info.name.to_string(),
                anchor: p.info.anchor.to_string(),
                description: p.info.description.to_string(),
                max_length: p.plan.max_length,
                passed: !identities.is_empty() && identities.iter().all(|r| r.passed()),
                totals: t,
                wall_seconds: config.timings.then_some(secs),
                identities,
            }
        })
        .collect();

    Ok(RunReport {
        tool: "flexionlab".to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        config: ConfigEcho {
            unit: config.unit.clone(),
            suites: selected.iter().map(|s| s.name.to_string()).collect(),
            max_length: config.max_length,
            samples: config.samples,
            seed: config.seed,
            retry_cap: config.retry_cap,
            suite_lengths: config.suite_lengths.clone(),
        },
        passed: !suites.is_empty() && suites.iter().all(|s| s.passed),
        totals,
        wall_seconds: config.timings.then(|| started.elapsed().as_secs_f64()),
        suites,
    })
}
