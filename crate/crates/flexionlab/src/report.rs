//! Human-readable renderings of reports and the suite listing.

use std::fmt::Write;

use flexion_core::check::{CheckReport, Expect, PointReport, Status};
use serde_json::json;

use crate::registry::SUITES;
use crate::RunReport;

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn describe_point(p: &PointReport) -> String {
    let mut s = format!("length {}", p.length);
    if let Some(split) = p.split {
        let _ = write!(s, ", split {split}");
    }
    match &p.params {
        Some(params) => {
            let _ = write!(s, ", params {params}");
        }
        None => {
            let _ = write!(s, ", word {}", p.word);
        }
    }
    if let (Some(l), Some(r)) = (&p.lhs, &p.rhs) {
        let _ = write!(s, ", lhs {l}, rhs {r}");
    }
    if let Some(e) = &p.error {
        let _ = write!(s, ", error: {e}");
    }
    s
}

fn identity_line(out: &mut String, r: &CheckReport) {
    let control = if r.expect == Expect::Fails { " [negative control]" } else { "" };
    let _ = writeln!(
        out,
        "  {}  {}{}  ({} pass, {} fail, {} skipped)",
        verdict(r.passed()),
        r.identity,
        control,
        r.passed_points,
        r.failed_points,
        r.skipped_points
    );
    match (r.expect, r.passed()) {
        (Expect::Holds, false) => {
            if let Some(p) = r.counterexample() {
                let _ = writeln!(out, "        counterexample: {}", describe_point(p));
            } else if let Some(p) = r.points.iter().find(|p| p.status == Status::Skipped) {
                let _ = writeln!(out, "        no usable sample: {}", describe_point(p));
            } else {
                let _ = writeln!(out, "        no sample points");
            }
        }
        (Expect::Fails, false) => {
            let _ = writeln!(out, "        expected a counterexample, none found");
        }
        _ => {}
    }
}

/// Plain-text report: one line per suite and identity, with counterexamples.
pub fn render_text(report: &RunReport) -> String {
    let mut out = String::new();
    let c = &report.config;
    let _ = writeln!(
        out,
        "flexionlab {} unit={} max_length={} samples={} seed={} retry_cap={}",
        report.version, c.unit, c.max_length, c.samples, c.seed, c.retry_cap
    );
    for s in &report.suites {
        let time = s.wall_seconds.map(|t| format!(" in {t:.2}s")).unwrap_or_default();
        let _ = writeln!(
            out,
            "\n{} {} ({}), L={}: {}/{} identities, {} negative controls, {} points{}",
            verdict(s.passed),
            s.suite,
            s.anchor,
            s.max_length,
            s.totals.identities_passed,
            s.totals.identities,
            s.totals.negative_controls,
            s.totals.points,
            time
        );
        for r in &s.identities {
            identity_line(&mut out, r);
        }
    }
    let time = report.wall_seconds.map(|t| format!(" in {t:.2}s")).unwrap_or_default();
    let _ = writeln!(
        out,
        "\n{}: {}/{} identities over {} suites{}",
        verdict(report.passed),
        report.totals.identities_passed,
        report.totals.identities,
        report.suites.len(),
        time
    );
    out
}

pub fn listing_text() -> String {
    let width = SUITES.iter().map(|s| s.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for s in &SUITES {
        let _ = writeln!(out, "{:width$}  [{}]  {}", s.name, s.anchor, s.description);
    }
    let _ = writeln!(out, "{:width$}  runs every suite above", "all");
    out
}

pub fn listing_json() -> String {
    serde_json::to_string_pretty(&json!({ "suites": SUITES, "all": SUITES.iter().map(|s| s.name).collect::<Vec<_>>() }))
        .expect("listing serializes")
}
