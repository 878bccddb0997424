//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use flexion_core::check::Expect;
use flexion_core::negelon::negelon_scan;
use flexion_core::Rat;
use serde_json::Value;

struct Run {
    json: Value,
    bytes: Vec<u8>,
    exit_ok: bool,
    elapsed: Duration,
}

fn verify(jobs: usize, out: &std::path::Path) -> Run {
    let t0 = Instant::now();
    let status = Command::new(env!("CARGO_BIN_EXE_flexionlab"))
        .args(["verify", "--suite", "all", "--seed", "0", "--report", "json", "--jobs"])
        .arg(jobs.to_string())
        .arg("--out")
        .arg(out)
        .stderr(std::process::Stdio::null())
        .status()
        .expect("flexionlab runs");
    let elapsed = t0.elapsed();
    let bytes = std::fs::read(out).expect("report written");
    let json = serde_json::from_slice(&bytes).expect("report is JSON");
    Run { json, bytes, exit_ok: status.success(), elapsed }
}

struct Report<'a>(&'a Value);

impl<'a> Report<'a> {
    fn identities(&self, suite: &str) -> Vec<&'a Value> {
        self.0["suites"]
            .as_array()
            .unwrap()
            .iter()
            .filter(|s| s["suite"] == suite)
            .flat_map(|s| s["identities"].as_array().unwrap())
            .collect()
    }

    fn find(&self, suite: &str, name: &str) -> Option<&'a Value> {
        self.identities(suite).into_iter().find(|i| i["identity"] == name)
    }

    fn matching(&self, suite: &str, prefix: &str) -> Vec<&'a Value> {
        self.identities(suite)
            .into_iter()
            .filter(|i| i["identity"].as_str().unwrap().starts_with(prefix))
            .collect()
    }
}

fn passed(i: &Value) -> bool {
    i["verdict"] == "pass"
}

fn max_length(i: &Value) -> u64 {
    i["points"].as_array().unwrap().iter().map(|p| p["length"].as_u64().unwrap()).max().unwrap_or(0)
}

/// Named identities all present, passing, and sampled up to `len`.
fn all_pass(r: &Report, suite: &str, names: &[&str], len: u64) -> Result<String, String> {
    for n in names {
        let i = r.find(suite, n).ok_or_else(|| format!("missing `{n}`"))?;
        if !passed(i) {
            return Err(format!("`{n}` failed"));
        }
        if max_length(i) < len {
            return Err(format!("`{n}` only reached length {}", max_length(i)));
        }
    }
    Ok(format!("{} identities", names.len()))
}

fn group(r: &Report, suite: &str, prefix: &str, want: usize, len: u64) -> Result<usize, String> {
    let found = r.matching(suite, prefix);
    if found.len() != want {
        return Err(format!("{} of {want} `{prefix}` checks present", found.len()));
    }
    for i in &found {
        if !passed(i) {
            return Err(format!("`{}` failed", i["identity"].as_str().unwrap()));
        }
        if max_length(i) < len {
            return Err(format!("`{}` only reached length {}", i["identity"].as_str().unwrap(), max_length(i)));
        }
    }
    Ok(found.len())
}

fn brute_tuple_count(r_max: i64) -> usize {
    let mut n = 0;
    for r in 2..=r_max {
        for k in 0..r {
            for l in 0..r {
                for h in 1..r {
                    if k + l + h <= r - 1 {
                        n += 1;
                    }
                }
            }
        }
    }
    n
}

fn c1(r: &Report) -> Result<String, String> {
    let t0 = Instant::now();
    let scan = negelon_scan::<Rat>("F = 0", 12, 1, Expect::Holds);
    let secs = t0.elapsed().as_secs_f64();
    let count = brute_tuple_count(12);
    if !scan.passed() {
        return Err("F is nonzero somewhere in range".into());
    }
    if scan.points.len() != count {
        return Err(format!("scan covered {} tuples, enumeration gives {count}", scan.points.len()));
    }
    if secs >= 10.0 {
        return Err(format!("took {secs:.2}s"));
    }
    let suite = r.matching("negelon", "F(r,k,l,h) = 0 for 2 <= r <= 12");
    if suite.len() != 1 || !passed(suite[0]) {
        return Err("negelon suite scan did not pass".into());
    }
    Ok(format!("F = 0 on all {count} enumerated tuples in {secs:.2}s"))
}

fn c2(r: &Report) -> Result<String, String> {
    let found = r.matching("senary", "(id - E-sena)(B) = swamu(es, (id - E-push)(B)), generic B #");
    if found.len() != 10 {
        return Err(format!("{} of 10 generic B", found.len()));
    }
    for i in &found {
        if !passed(i) {
            return Err(format!("`{}` failed", i["identity"].as_str().unwrap()));
        }
        for len in 1..=4u64 {
            let n = i["points"].as_array().unwrap().iter().filter(|p| p["length"] == len).count();
            if n != 4 {
                return Err(format!("{n} points at length {len}"));
            }
        }
    }
    Ok("10 generic B, 4 points at each length 1..4".into())
}

fn c3(r: &Report) -> Result<String, String> {
    group(r, "senary", "senary relation E-ter = push∘mantar∘E-ter∘mantar on al_ol #", 5, 4).map(|n| format!("{n} al/ol moulds"))
}

fn c4(r: &Report) -> Result<String, String> {
    let names = ["ess is symmetral", "öss is symmetral", "ëss is symmetral", "oss is symmetral"];
    for n in names {
        let i = r.find("dilator", n).ok_or_else(|| format!("missing `{n}`"))?;
        let pts = i["points"].as_array().unwrap();
        for len in 2..=4u64 {
            for split in 1..len {
                let k = pts.iter().filter(|p| p["length"] == len && p["split"] == split).count();
                if k < 4 {
                    return Err(format!("`{n}` has {k} samples at split {split}/{len}"));
                }
            }
        }
    }
    all_pass(r, "dilator", &names, 4).map(|_| "ess, öss, ëss, oss symmetral on every split shape up to length 4".into())
}

fn c5(r: &Report) -> Result<String, String> {
    all_pass(r, "dilator", &["To is O-alternal (ganit route)", "To is O-alternal (gamit route)"], 4)
        .map(|_| "ganit and gamit routes agree".into())
}

fn c6(r: &Report) -> Result<String, String> {
    let a = group(r, "push-sena", "adari(ess)(pushsym #", 5, 4)?;
    let b = group(r, "push-sena", "adari(ëss)(pushsym #", 5, 4)?;
    let c = group(r, "push-sena", "adari(invgari ess)(adari(ess)(pushsym #", 5, 4)?;
    Ok(format!("{a} + {b} E-sena-invariant images, {c} roundtrips push-invariant"))
}

fn c7(r: &Report) -> Result<String, String> {
    let fwd = group(r, "dilator", "ODE solution of alternal D #", 3, 4)?;
    let back = group(r, "dilator", "dilator of symmetral S #", 3, 4)?;
    Ok(format!("{fwd} alternal-to-symmetral, {back} symmetral-to-alternal"))
}

fn c8(r: &Report) -> Result<String, String> {
    all_pass(
        r,
        "algebra-core",
        &[
            "ganit(os)∘gamit(os_swap)^-1 = garit(invmu os)",
            "ganit(os)(O) = os - 1",
            "girat(oz) = gaxit(oz,oz)",
            "girat(oz)^-1(oz) = 1 + O",
            "adari closed form = adari series",
        ],
        4,
    )?;
    all_pass(r, "mould-constants", &["invmu(es) = push(es)"], 4)?;
    all_pass(
        r,
        "senary",
        &["E-ter^-1(E-ter B) = B", "E-ter^-1 answamu form = triple-sum form"],
        4,
    )?;
    all_pass(
        r,
        "senary",
        &[
            "E-swap^-1(E-swap B) = B",
            "E-swap^-1 first form = second form",
            "E-swap^-1 first form = third form",
            "E-push^-1 compositional = explicit",
        ],
        3,
    )?;
    Ok("12 cross-checks; garit_os uses os_swap and E-swap form 2 drops the inner swap".into())
}

fn c9(r: &Report) -> Result<String, String> {
    all_pass(
        r,
        "mould-constants",
        &[
            "fragari(neg ess, ess) = es",
            "E-neg = adari(ess)∘neg∘adari(ess)^-1",
            "E-neg = adari(ëss)∘neg∘adari(ëss)^-1",
        ],
        3,
    )
}

fn c10(r: &Report) -> Result<String, String> {
    let required = [
        ("symmetry", "generic is push-invariant"),
        ("symmetry", "generic is O-alternal (ganit route)"),
        ("symmetry", "generic is O-alternal (gamit route)"),
        ("symmetry", "1 + generic is symmetral"),
        ("negelon", "F(r,k,l,h) = 0 with h = 0 allowed"),
    ];
    for (s, n) in required {
        r.find(s, n).ok_or_else(|| format!("missing control `{n}`"))?;
    }
    let controls: Vec<&Value> = r.0["suites"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|s| s["identities"].as_array().unwrap())
        .filter(|i| i["expect"] == "fails")
        .collect();
    for i in &controls {
        if !passed(i) || i["failed_points"].as_u64().unwrap() == 0 {
            return Err(format!("control `{}` found no counterexample", i["identity"].as_str().unwrap()));
        }
    }
    Ok(format!("{} negative controls each produced a counterexample", controls.len()))
}

fn c11(one: &Run, four: &Run) -> Result<String, String> {
    if one.bytes != four.bytes {
        return Err("reports differ between runs".into());
    }
    if one.elapsed >= Duration::from_secs(15 * 60) {
        return Err(format!("single worker took {:.1}s", one.elapsed.as_secs_f64()));
    }
    if four.elapsed >= Duration::from_secs(5 * 60) {
        return Err(format!("4 workers took {:.1}s", four.elapsed.as_secs_f64()));
    }
    if !one.exit_ok || one.json["passed"] != true {
        return Err("verify --suite all did not pass".into());
    }
    Ok(format!(
        "byte-identical reports; {:.1}s with 1 worker, {:.1}s with 4",
        one.elapsed.as_secs_f64(),
        four.elapsed.as_secs_f64()
    ))
}

fn main() {
    let dir = std::env::temp_dir().join(format!("flexionlab-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    let one = verify(1, &dir.join("jobs1.json"));
    let four = verify(4, &dir.join("jobs4.json"));
    let _ = std::fs::remove_dir_all(&dir);
    let r = Report(&one.json);

    let results = [
        c1(&r),
        c2(&r),
        c3(&r),
        c4(&r),
        c5(&r),
        c6(&r),
        c7(&r),
        c8(&r),
        c9(&r),
        c10(&r),
        c11(&one, &four),
    ];
    let mut failed = 0;
    for (n, res) in results.iter().enumerate() {
        match res {
            Ok(msg) => println!("criterion {:2}: PASS  {msg}", n + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:2}: FAIL  {msg}", n + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
