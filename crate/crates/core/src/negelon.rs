//! The binomial identity behind O-alternality of the dilator series, its
//! auxiliary summation steps, and the `mu`-power expansion.

use rayon::prelude::*;
use serde_json::json;

use crate::check::{CheckReport, Expect, PointReport, Status};
use crate::engine::{Graph, MouldId};
use crate::scalar::{binom, Scalar};

/// Pascal triangle rows `0..=n_max`, for sums that need many coefficients.
pub struct BinomTable<S: Scalar> {
    rows: Vec<Vec<S>>,
}

impl<S: Scalar> BinomTable<S> {
    pub fn new(n_max: usize) -> Self {
        let mut rows: Vec<Vec<S>> = vec![vec![S::one()]];
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let row = (0..=n)
                .map(|k| {
                    let left = if k > 0 { prev[k - 1].clone() } else { S::zero() };
                    let right = if k < n { prev[k].clone() } else { S::zero() };
                    left + right
                })
                .collect();
            rows.push(row);
        }
        BinomTable { rows }
    }

    /// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
    pub fn get(&self, n: i64, k: i64) -> S {
        if n < 0 || k < 0 || k > n {
            return S::zero();
        }
        self.rows[n as usize][k as usize].clone()
    }
}

/// `F^r_{k,l,h} = Σ_{1≤j≤s≤r} (s+1-j)/(s(s+1)) Σ_{c,d} (-1)^{c+d} C(j-1,c) C(s-j,d) C(c,k) C(d+1,l) C(c+d+1,h)`,
/// with `0 ≤ c ≤ j-1`, `0 ≤ d ≤ s-j`, summed as written.
pub fn f_value<S: Scalar>(r: i64, k: i64, l: i64, h: i64) -> S {
    let t = BinomTable::<S>::new(r.max(0) as usize + 2);
    let binom = |n: i64, k: i64| t.get(n, k);
    let mut total = S::zero();
    for s in 1..=r {
        for j in 1..=s {
            let mut inner = S::zero();
            for c in 0..=j - 1 {
                for d in 0..=s - j {
                    let term = binom(j - 1, c) * binom(s - j, d) * binom(c, k) * binom(d + 1, l) * binom(c + d + 1, h);
                    inner = if (c + d) % 2 == 0 { inner + term } else { inner - term };
                }
            }
            total = total + S::from_int(s + 1 - j) * inner / S::from_int(s * (s + 1));
        }
    }
    total
}

/// All `(r, k, l, h)` with `2 ≤ r ≤ r_max`, `h ≥ h_min`, `k + l + h ≤ r - 1`.
pub fn tuples(r_max: i64, h_min: i64) -> Vec<(i64, i64, i64, i64)> {
    let mut out = Vec::new();
    for r in 2..=r_max {
        for h in h_min..=r - 1 {
            for k in 0..=r - 1 - h {
                for l in 0..=r - 1 - h - k {
                    out.push((r, k, l, h));
                }
            }
        }
    }
    out
}

fn point(identity: &str, length: usize, params: serde_json::Value, lhs: String, rhs: String, ok: bool) -> PointReport {
    PointReport {
        identity: identity.to_string(),
        length,
        split: None,
        word: json!([]),
        params: Some(params),
        lhs: Some(lhs),
        rhs: Some(rhs),
        status: if ok { Status::Pass } else { Status::Fail },
        attempts: 1,
        error: None,
    }
}

/// Folds point results into a report under the usual verdict rule.
pub fn scalar_report(identity: &str, expect: Expect, points: Vec<PointReport>) -> CheckReport {
    let passed = points.iter().filter(|p| p.status == Status::Pass).count();
    let failed = points.len() - passed;
    let ok = match expect {
        Expect::Holds => failed == 0 && !points.is_empty(),
        Expect::Fails => failed > 0,
    };
    CheckReport {
        identity: identity.to_string(),
        property: "exact".to_string(),
        expect,
        verdict: if ok { Status::Pass } else { Status::Fail },
        passed_points: passed,
        failed_points: failed,
        skipped_points: 0,
        points,
    }
}

/// `F = 0` over [`tuples`]`(r_max, h_min)`. `h_min = 0` admits tuples where `F` is nonzero.
pub fn negelon_scan<S: Scalar>(identity: &str, r_max: i64, h_min: i64, expect: Expect) -> CheckReport {
    let points = tuples(r_max, h_min)
        .into_par_iter()
        .map(|(r, k, l, h)| {
            let v: S = f_value(r, k, l, h);
            let ok = v.is_zero();
            point(
                identity,
                r as usize,
                json!({"r": r, "k": k, "l": l, "h": h}),
                v.to_fraction_string(),
                S::zero().to_fraction_string(),
                ok,
            )
        })
        .collect();
    scalar_report(identity, expect, points)
}

/// `Σ_{j=c+1}^{s-d} (s+1-j) C(j-1,c) C(s-j,d) = (d+1) C(s+1, c+d+2)` for `c + d ≤ s - 1`, `s ≤ n_max`.
pub fn vandermonde_step<S: Scalar>(identity: &str, n_max: i64) -> CheckReport {
    let mut points = Vec::new();
    for s in 1..=n_max {
        for c in 0..s {
            for d in 0..s - c {
                let lhs = (c + 1..=s - d).fold(S::zero(), |acc, j| {
                    acc + S::from_int(s + 1 - j) * binom::<S>(j - 1, c) * binom::<S>(s - j, d)
                });
                let rhs = S::from_int(d + 1) * binom::<S>(s + 1, c + d + 2);
                let ok = lhs == rhs;
                points.push(point(
                    identity,
                    s as usize,
                    json!({"s": s, "c": c, "d": d}),
                    lhs.to_fraction_string(),
                    rhs.to_fraction_string(),
                    ok,
                ));
            }
        }
    }
    scalar_report(identity, Expect::Holds, points)
}

/// `Σ_{d=0}^{n} (d+1) C(d+1,l) C(n-d,k) = l C(n+2,k+l+1) + (l+1) C(n+2,k+l+2)` for `n, k, l ≤ n_max`.
pub fn convolution_step<S: Scalar>(identity: &str, n_max: i64) -> CheckReport {
    let mut points = Vec::new();
    for n in 0..=n_max {
        for k in 0..=n_max {
            for l in 0..=n_max {
                let lhs = (0..=n).fold(S::zero(), |acc, d| {
                    acc + S::from_int(d + 1) * binom::<S>(d + 1, l) * binom::<S>(n - d, k)
                });
                let rhs = S::from_int(l) * binom::<S>(n + 2, k + l + 1)
                    + S::from_int(l + 1) * binom::<S>(n + 2, k + l + 2);
                let ok = lhs == rhs;
                points.push(point(
                    identity,
                    n as usize,
                    json!({"n": n, "k": k, "l": l}),
                    lhs.to_fraction_string(),
                    rhs.to_fraction_string(),
                    ok,
                ));
            }
        }
    }
    scalar_report(identity, Expect::Holds, points)
}

/// `Σ_{n=1}^{N} (-1)^n C(N,n) n^d = 0` for `1 ≤ d < N ≤ n_max`.
pub fn finite_difference_step<S: Scalar>(identity: &str, n_max: i64) -> CheckReport {
    let mut points = Vec::new();
    for big_n in 2..=n_max {
        for d in 1..big_n {
            let lhs = (1..=big_n).fold(S::zero(), |acc, n| {
                let term = binom::<S>(big_n, n) * (0..d).fold(S::one(), |p, _| p * S::from_int(n));
                if n % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            });
            let ok = lhs.is_zero();
            points.push(point(
                identity,
                big_n as usize,
                json!({"N": big_n, "d": d}),
                lhs.to_fraction_string(),
                S::zero().to_fraction_string(),
                ok,
            ));
        }
    }
    scalar_report(identity, Expect::Holds, points)
}

impl<S: Scalar> Graph<S> {
    /// `mu(A, …, A)` with `n` factors; `mu^0 = 1`.
    pub fn mu_power(&mut self, a: MouldId, n: usize) -> MouldId {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mu(acc, a);
        }
        acc
    }

    /// `Σ_{i=0}^{N} C(N,i) mu^i(S - 1)`; terms with `i > ℓ(w)` vanish at `w`.
    pub fn mu_factor_expansion(&mut self, s: MouldId, n: usize) -> MouldId {
        let one = self.one();
        let reduced = self.sub(s, one);
        let terms: Vec<(S, MouldId)> = (0..=n)
            .map(|i| (binom::<S>(n as i64, i as i64), self.mu_power(reduced, i)))
            .collect();
        self.lin(&terms)
    }
}
