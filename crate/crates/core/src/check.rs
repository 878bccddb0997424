//! Random-point identity checking with exact comparison.
//!
//! A [`Check`] states a property of moulds in a frozen graph: equality of two
//! moulds, or alternality/symmetrality of one. Every check is evaluated at
//! seeded sample words; a single nonzero difference refutes it. Sample words
//! that hit a pole are redrawn up to the context's retry cap and otherwise
//! reported as skipped.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::engine::{EvalContext, EvalError, MouldId};
use crate::scalar::Scalar;
use crate::words::{fll, flr, ful, fur, sample_word, shuffles, Bounds, Word};

/// Where and how densely a check is sampled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplePlan {
    pub max_length: usize,
    pub samples: usize,
    pub seed: u64,
    pub bounds: Bounds,
}

impl Default for SamplePlan {
    fn default() -> Self {
        SamplePlan {
            max_length: 4,
            samples: 4,
            seed: 0,
            bounds: Bounds::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    /// `lhs(w) = rhs(w)` at sample words of every length in range.
    Equal(MouldId, MouldId),
    /// `Σ_{s ∈ a ⧢ b} A(s) = 0` for nonempty `a`, `b`.
    Alternal(MouldId),
    /// `Σ_{s ∈ a ⧢ b} A(s) = A(a) A(b)` for nonempty `a`, `b`.
    Symmetral(MouldId),
    /// `arit(B)(A)(a ⧢ b)` against its expansion into four flexion sums over
    /// the factorizations of `a` and of `b`; `arit` is the mould `arit(B)(A)`.
    AritShuffle { arit: MouldId, a: MouldId, b: MouldId },
    /// `gaxit(X,Y)(O)(a ⧢ b)` against its expansion into single-letter sums;
    /// `action` is `gaxit(X,Y)(O)` and `xy` is `mu(X,Y)`.
    GaxitShuffle {
        action: MouldId,
        x: MouldId,
        y: MouldId,
        xy: MouldId,
        o: MouldId,
    },
}

impl Property {
    pub fn kind(&self) -> &'static str {
        match self {
            Property::Equal(..) => "equal",
            Property::Alternal(_) => "alternal",
            Property::Symmetral(_) => "symmetral",
            Property::AritShuffle { .. } => "arit-shuffle",
            Property::GaxitShuffle { .. } => "gaxit-shuffle",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expect {
    Holds,
    /// Negative control: the check passes when a counterexample is found.
    Fails,
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub property: Property,
    pub expect: Expect,
    pub min_length: usize,
    /// Overrides the plan's maximum length when smaller.
    pub max_length: Option<usize>,
}

impl Check {
    pub fn equal(name: impl Into<String>, lhs: MouldId, rhs: MouldId) -> Self {
        Check {
            name: name.into(),
            property: Property::Equal(lhs, rhs),
            expect: Expect::Holds,
            min_length: 0,
            max_length: None,
        }
    }

    pub fn alternal(name: impl Into<String>, a: MouldId) -> Self {
        Check {
            name: name.into(),
            property: Property::Alternal(a),
            expect: Expect::Holds,
            min_length: 2,
            max_length: None,
        }
    }

    pub fn symmetral(name: impl Into<String>, a: MouldId) -> Self {
        Check {
            name: name.into(),
            property: Property::Symmetral(a),
            expect: Expect::Holds,
            min_length: 2,
            max_length: None,
        }
    }

    /// Shuffle-split check of an arbitrary [`Property`] other than `Equal`.
    pub fn shuffle(name: impl Into<String>, property: Property) -> Self {
        Check {
            name: name.into(),
            property,
            expect: Expect::Holds,
            min_length: 2,
            max_length: None,
        }
    }

    /// Marks the check as a negative control.
    pub fn negative(mut self) -> Self {
        self.expect = Expect::Fails;
        self
    }

    pub fn up_to(mut self, max_length: usize) -> Self {
        self.max_length = Some(max_length);
        self
    }

    pub fn from_length(mut self, min_length: usize) -> Self {
        self.min_length = min_length;
        self
    }

    fn length_range(&self, plan: &SamplePlan) -> (usize, usize) {
        let max = self.max_length.map_or(plan.max_length, |m| m.min(plan.max_length));
        (self.min_length, max)
    }

    /// Sample points: `(total length, split, index)`; `split` is `Some(p)` for shuffle checks.
    fn points(&self, plan: &SamplePlan) -> Vec<(usize, Option<usize>, usize)> {
        let (lo, hi) = self.length_range(plan);
        let mut out = Vec::new();
        match self.property {
            Property::Equal(..) => {
                for len in lo..=hi {
                    let n = if len == 0 { 1 } else { plan.samples };
                    out.extend((0..n).map(|i| (len, None, i)));
                }
            }
            _ => {
                for len in lo.max(2)..=hi {
                    for p in 1..len {
                        out.extend((0..plan.samples).map(|i| (len, Some(p), i)));
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// Outcome at one sample point; values are `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointReport {
    pub identity: String,
    pub length: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub split: Option<usize>,
    pub word: serde_json::Value,
    /// Parameters of a combinatorial point, which has no word.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub params: Option<serde_json::Value>,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub status: Status,
    pub attempts: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub identity: String,
    pub property: String,
    pub expect: Expect,
    pub verdict: Status,
    pub passed_points: usize,
    pub failed_points: usize,
    pub skipped_points: usize,
    pub points: Vec<PointReport>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict == Status::Pass
    }

    /// First refuting point, if any.
    pub fn counterexample(&self) -> Option<&PointReport> {
        self.points.iter().find(|p| p.status == Status::Fail)
    }
}

fn point_seed(plan: &SamplePlan, name: &str, len: usize, split: Option<usize>, index: usize) -> u64 {
    let mut h = Sha256::new();
    h.update(b"flexion-sample");
    h.update(plan.seed.to_le_bytes());
    h.update(name.as_bytes());
    h.update((len as u64).to_le_bytes());
    h.update((split.map_or(u64::MAX, |p| p as u64)).to_le_bytes());
    h.update((index as u64).to_le_bytes());
    let out = h.finalize();
    u64::from_le_bytes(out[0..8].try_into().unwrap())
}

fn eval_property<S: Scalar>(
    ctx: &EvalContext<'_, S>,
    property: Property,
    a: &Word<S>,
    b: &Word<S>,
) -> Result<(S, S), EvalError> {
    match property {
        Property::Equal(l, r) => {
            let w = a.concat(b);
            Ok((ctx.eval(l, &w)?, ctx.eval(r, &w)?))
        }
        Property::Alternal(m) | Property::Symmetral(m) => {
            let sum = shuffle_sum(ctx, m, a, b)?;
            let rhs = if matches!(property, Property::Symmetral(_)) {
                ctx.eval(m, a)? * ctx.eval(m, b)?
            } else {
                S::zero()
            };
            Ok((sum, rhs))
        }
        Property::AritShuffle { arit, a: am, b: bm } => {
            let lhs = shuffle_sum(ctx, arit, a, b)?;
            let rhs = arit_expansion(ctx, am, bm, a, b, true)? + arit_expansion(ctx, am, bm, b, a, false)?;
            Ok((lhs, rhs))
        }
        Property::GaxitShuffle { action, x, y, xy, o } => {
            let lhs = shuffle_sum(ctx, action, a, b)?;
            let mut rhs = S::zero();
            for i in 0..a.len() {
                let (a1, l, a2) = (a.slice(0, i), a.slice(i, i + 1), a.slice(i + 1, a.len()));
                let letter = ful(&a1, &fur(&l, &a2.concat(b)));
                rhs = rhs
                    + ctx.eval(x, &flr(&a1, &l))?
                        * ctx.eval(o, &letter)?
                        * ctx.eval(y, &fll(&l, &a2))?
                        * ctx.eval(xy, &fll(&l, b))?;
            }
            for j in 0..b.len() {
                let (b1, l, b2) = (b.slice(0, j), b.slice(j, j + 1), b.slice(j + 1, b.len()));
                let letter = ful(&a.concat(&b1), &fur(&l, &b2));
                rhs = rhs
                    + ctx.eval(x, &flr(&b1, &l))?
                        * ctx.eval(o, &letter)?
                        * ctx.eval(y, &fll(&l, &b2))?
                        * ctx.eval(xy, &flr(a, &l))?;
            }
            Ok((lhs, rhs))
        }
    }
}

fn shuffle_sum<S: Scalar>(ctx: &EvalContext<'_, S>, m: MouldId, a: &Word<S>, b: &Word<S>) -> Result<S, EvalError> {
    let mut sum = S::zero();
    for s in shuffles(a, b) {
        sum = sum + ctx.eval(m, &s)?;
    }
    Ok(sum)
}

/// The two flexion sums of the `arit` shuffle expansion that factor `f`;
/// `other` is the untouched shuffle partner, placed after `f` when `f_first`.
fn arit_expansion<S: Scalar>(
    ctx: &EvalContext<'_, S>,
    a: MouldId,
    b: MouldId,
    f: &Word<S>,
    other: &Word<S>,
    f_first: bool,
) -> Result<S, EvalError> {
    let n = f.len();
    let mut acc = S::zero();
    let shuffled = |w: &Word<S>| {
        if f_first {
            shuffle_sum(ctx, a, w, other)
        } else {
            shuffle_sum(ctx, a, other, w)
        }
    };
    for i in 0..=n {
        for j in i..=n {
            let (f1, f2, f3) = (f.slice(0, i), f.slice(i, j), f.slice(j, n));
            if !f2.is_empty() && !f3.is_empty() {
                acc = acc + shuffled(&f1.concat(&ful(&f2, &f3)))? * ctx.eval(b, &flr(&f2, &f3))?;
            }
            if !f1.is_empty() && !f2.is_empty() {
                acc = acc - shuffled(&fur(&f1, &f2).concat(&f3))? * ctx.eval(b, &fll(&f1, &f2))?;
            }
        }
    }
    Ok(acc)
}

fn run_point<S: Scalar>(
    ctx: &EvalContext<'_, S>,
    check: &Check,
    plan: &SamplePlan,
    (len, split, index): (usize, Option<usize>, usize),
) -> PointReport {
    let mut rng = ChaCha8Rng::seed_from_u64(point_seed(plan, &check.name, len, split, index));
    let p = split.unwrap_or(len);
    let mut last_error = None;
    let mut word = Word::empty();
    for attempt in 1..=ctx.retry_cap.max(1) {
        let a: Word<S> = sample_word(&mut rng, p, plan.bounds);
        let b: Word<S> = sample_word(&mut rng, len - p, plan.bounds);
        word = a.concat(&b);
        let outcome = eval_property(ctx, check.property, &a, &b);
        let (status, lhs, rhs, error) = match outcome {
            Ok((l, r)) => {
                let s = if l == r { Status::Pass } else { Status::Fail };
                (s, Some(l.to_fraction_string()), Some(r.to_fraction_string()), None)
            }
            Err(e) if e.is_div_by_zero() => {
                last_error = Some(e.to_string());
                continue;
            }
            Err(e) => (Status::Fail, None, None, Some(e.to_string())),
        };
        return PointReport {
            identity: check.name.clone(),
            length: len,
            split,
            word: serde_json::to_value(&word).expect("words serialize"),
            params: None,
            lhs,
            rhs,
            status,
            attempts: attempt,
            error,
        };
    }
    PointReport {
        identity: check.name.clone(),
        length: len,
        split,
        word: serde_json::to_value(&word).expect("words serialize"),
        params: None,
        lhs: None,
        rhs: None,
        status: Status::Skipped,
        attempts: ctx.retry_cap.max(1),
        error: last_error,
    }
}

fn assemble(check: &Check, points: Vec<PointReport>) -> CheckReport {
    let count = |s: Status| points.iter().filter(|p| p.status == s).count();
    let (passed, failed, skipped) = (count(Status::Pass), count(Status::Fail), count(Status::Skipped));
    // a length (or split shape) whose points were all skipped tested nothing
    let mut starved = false;
    let mut shapes: Vec<(usize, Option<usize>)> = points.iter().map(|p| (p.length, p.split)).collect();
    shapes.dedup();
    for shape in shapes {
        if points
            .iter()
            .filter(|p| (p.length, p.split) == shape)
            .all(|p| p.status == Status::Skipped)
        {
            starved = true;
        }
    }
    let verdict = match check.expect {
        Expect::Holds if failed == 0 && !starved && passed > 0 => Status::Pass,
        Expect::Fails if failed > 0 => Status::Pass,
        _ => Status::Fail,
    };
    CheckReport {
        identity: check.name.clone(),
        property: check.property.kind().to_string(),
        expect: check.expect,
        verdict,
        passed_points: passed,
        failed_points: failed,
        skipped_points: skipped,
        points,
    }
}

/// Runs every check at every sample point. With a pool, points are evaluated
/// in parallel against the shared context; reports are identical either way.
pub fn run_checks<S: Scalar>(
    ctx: &EvalContext<'_, S>,
    checks: &[Check],
    plan: &SamplePlan,
    pool: Option<&rayon::ThreadPool>,
) -> Vec<CheckReport> {
    let work: Vec<(usize, (usize, Option<usize>, usize))> = checks
        .iter()
        .enumerate()
        .flat_map(|(i, c)| c.points(plan).into_iter().map(move |p| (i, p)))
        .collect();
    let eval = |&(i, p): &(usize, (usize, Option<usize>, usize))| run_point(ctx, &checks[i], plan, p);
    let results: Vec<PointReport> = match pool {
        Some(pool) => pool.install(|| work.par_iter().map(eval).collect()),
        None => work.iter().map(eval).collect(),
    };
    let mut grouped: Vec<Vec<PointReport>> = vec![Vec::new(); checks.len()];
    for ((i, _), r) in work.iter().zip(results) {
        grouped[*i].push(r);
    }
    checks
        .iter()
        .zip(grouped)
        .map(|(c, pts)| assemble(c, pts))
        .collect()
}

/// Single check, sequential.
pub fn check_identity<S: Scalar>(ctx: &EvalContext<'_, S>, check: &Check, plan: &SamplePlan) -> CheckReport {
    run_checks(ctx, std::slice::from_ref(check), plan, None)
        .pop()
        .expect("one report per check")
}

/// Thread pool with stacks large enough for deeply nested moulds.
pub fn worker_pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .stack_size(256 << 20)
        .build()
        .expect("thread pool")
}
