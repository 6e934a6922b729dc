//! `toeplitz` — reproducible experiment harness around the determinant
//! library. Subcommands: `coeffs`, `toeplitz`, `run`, `region`,
//! `verify-lemmas`.
//!
//! Exit codes are a stable contract: 0 success, 1 a sharp target was missed,
//! 2 usage or spec error, 3 a proven bound was violated.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use toeplitz_core::classes::{caratheodory_coeffs, starlike_from_caratheodory};
use toeplitz_core::determinants::toeplitz_det;
use toeplitz_core::experiments::{
    experiment_ids, extremal_experiment_with, ExperimentReport, RunSettings,
};
use toeplitz_core::lemmas::{
    caratheodory_bound, efraimidis_bound, fekete_szego_starlike, janteng_bound,
    k_class_functional_bound, ma_bound,
};
use toeplitz_core::sampling::{sample_close_to_convex, sample_herglotz, sample_robertson};
use toeplitz_core::typically_real::{region_hull, typically_real_coeffs};
use toeplitz_core::FunctionSpec64;

const SLACK_TOLERANCE: f64 = 1e-9;

#[derive(Parser)]
#[command(name = "toeplitz", version, about = "Toeplitz determinants of Taylor coefficients: \
constructors, inequality sweeps and extremal experiments")]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Commands {
    /// Print the Taylor coefficients a_1..a_N of a function spec
    Coeffs {
        /// Function spec as inline JSON, or @path to a JSON file
        #[arg(long)]
        spec: String,
        /// Truncation order N
        #[arg(long, default_value_t = 16)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the symmetric Toeplitz determinant T_q(n) of a function spec
    Toeplitz {
        /// Function spec as inline JSON, or @path to a JSON file
        #[arg(long)]
        spec: String,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        q: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run extremal experiments and write a JSON report
    Run {
        /// Run manifest (JSON); defaults to all experiments, seed 0
        #[arg(long)]
        manifest: Option<PathBuf>,
        /// Comma-separated experiment ids, overriding the manifest list
        #[arg(long)]
        experiments: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        /// Per-dimension grid resolution override for every experiment
        #[arg(long)]
        resolution: Option<usize>,
        /// Sample-count override for the sampling experiments
        #[arg(long)]
        samples: Option<u64>,
        /// Report file path (default from manifest, else toeplitz_report.json)
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Emit the convex hull of a coefficient region as CSV and JSON
    Region {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        m: usize,
        /// Curve samples for the hull
        #[arg(long, default_value_t = 2001)]
        samples: usize,
        /// Output base path; writes <out>.csv and <out>.json
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also re-check this many random measures for containment
        #[arg(long, default_value_t = 0)]
        check_samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Sweep every inequality oracle over random class members
    VerifyLemmas {
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Manifest consumed by `run`. Ids are validated against the registry before
/// any experiment starts.
#[derive(Debug, Serialize, Deserialize)]
struct RunManifest {
    experiments: Vec<String>,
    #[serde(default)]
    seed: u64,
    #[serde(default)]
    resolution_overrides: BTreeMap<String, usize>,
    #[serde(default)]
    samples_overrides: BTreeMap<String, u64>,
    #[serde(default)]
    out: Option<String>,
}

impl Default for RunManifest {
    fn default() -> Self {
        Self {
            experiments: experiment_ids().iter().map(|s| s.to_string()).collect(),
            seed: 0,
            resolution_overrides: BTreeMap::new(),
            samples_overrides: BTreeMap::new(),
            out: None,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RunReportFile {
    schema_version: u32,
    seed: u64,
    all_passed: bool,
    reports: Vec<ExperimentReport>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Commands::Coeffs {
            spec,
            order,
            format,
            out,
        } => cmd_coeffs(&spec, order, format, out.as_deref()),
        Commands::Toeplitz { spec, n, q, format } => cmd_toeplitz(&spec, n, q, format),
        Commands::Run {
            manifest,
            experiments,
            seed,
            resolution,
            samples,
            out,
            format,
        } => cmd_run(
            manifest.as_deref(),
            experiments.as_deref(),
            seed,
            resolution,
            samples,
            out.as_deref(),
            format,
        ),
        Commands::Region {
            n,
            m,
            samples,
            out,
            check_samples,
            seed,
        } => cmd_region(n, m, samples, out, check_samples, seed),
        Commands::VerifyLemmas { samples, seed } => cmd_verify_lemmas(samples, seed),
    }
}

/// Full-precision float formatting: 17 significant digits make CSV output
/// diffable across platforms.
fn full(x: f64) -> String {
    format!("{x:.16e}")
}

fn load_spec(arg: &str) -> Result<FunctionSpec64> {
    let text = if let Some(path) = arg.strip_prefix('@') {
        fs::read_to_string(path).with_context(|| format!("reading spec file {path}"))?
    } else {
        arg.to_string()
    };
    FunctionSpec64::from_json(text.trim()).context("parsing function spec")
}

/// Write via a temp file in the same directory, then rename.
fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let tmp = path.with_extension(format!(
        "{}tmp{}",
        path.extension().map(|e| format!("{}.", e.to_string_lossy())).unwrap_or_default(),
        std::process::id()
    ));
    fs::write(&tmp, contents).with_context(|| format!("writing {}", tmp.display()))?;
    fs::rename(&tmp, path).with_context(|| format!("renaming into {}", path.display()))?;
    Ok(())
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => write_atomic(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_coeffs(spec_arg: &str, order: usize, format: Format, out: Option<&Path>) -> Result<ExitCode> {
    let spec = load_spec(spec_arg)?;
    let f = spec.build(order).context("building coefficients")?;
    let text = match format {
        Format::Csv => {
            let mut s = String::from("n,re,im\n");
            for n in 1..=f.order() {
                let a = f.coeff(n);
                s.push_str(&format!("{n},{},{}\n", full(a.re), full(a.im)));
            }
            s
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = (1..=f.order())
                .map(|n| serde_json::json!([n, f.coeff(n).re, f.coeff(n).im]))
                .collect();
            let mut doc = String::new();
            doc.push_str(&serde_json::to_string_pretty(&serde_json::json!({
                "spec": serde_json::from_str::<serde_json::Value>(&spec.to_json())?,
                "order": f.order(),
                "coeffs": rows,
            }))?);
            doc.push('\n');
            doc
        }
    };
    emit(&text, out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_toeplitz(spec_arg: &str, n: usize, q: usize, format: Format) -> Result<ExitCode> {
    let spec = load_spec(spec_arg)?;
    let order = n + q - 1;
    let f = spec.build(order.max(2)).context("building coefficients")?;
    let r = toeplitz_det(&f, n, q).context("evaluating determinant")?;
    match format {
        Format::Csv => {
            println!("n,q,re,im,abs");
            println!(
                "{n},{q},{},{},{}",
                full(r.value.re),
                full(r.value.im),
                full(r.abs_value)
            );
        }
        Format::Json => println!(
            "{}",
            serde_json::json!({
                "n": n, "q": q,
                "re": r.value.re, "im": r.value.im, "abs": r.abs_value,
            })
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_run(
    manifest_path: Option<&Path>,
    experiments: Option<&str>,
    seed: Option<u64>,
    resolution: Option<usize>,
    samples: Option<u64>,
    out: Option<&Path>,
    format: Format,
) -> Result<ExitCode> {
    let mut manifest = match manifest_path {
        Some(p) => {
            let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            serde_json::from_str::<RunManifest>(&text)
                .with_context(|| format!("parsing manifest {}", p.display()))?
        }
        None => RunManifest::default(),
    };
    if let Some(list) = experiments {
        manifest.experiments = list
            .split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect();
    }
    if let Some(s) = seed {
        manifest.seed = s;
    }

    // validate every id before any run starts
    let registry = experiment_ids();
    for id in &manifest.experiments {
        if !registry.contains(&id.as_str()) {
            bail!("unknown experiment id `{id}` (registry: {})", registry.join(", "));
        }
    }

    let mut reports = Vec::with_capacity(manifest.experiments.len());
    for id in &manifest.experiments {
        let settings = RunSettings {
            seed: manifest.seed,
            resolution: resolution.or_else(|| manifest.resolution_overrides.get(id).copied()),
            samples: samples.or_else(|| manifest.samples_overrides.get(id).copied()),
        };
        let report = extremal_experiment_with(id, &settings)
            .with_context(|| format!("running {id}"))?;
        reports.push(report);
    }

    let all_passed = reports.iter().all(|r| r.passed);
    let any_violation = reports.iter().any(|r| r.violations.unwrap_or(0) > 0);

    let out_path: PathBuf = out
        .map(Path::to_path_buf)
        .or_else(|| manifest.out.as_ref().map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("toeplitz_report.json"));
    let file = RunReportFile {
        schema_version: 1,
        seed: manifest.seed,
        all_passed,
        reports,
    };
    let mut json = serde_json::to_string_pretty(&file)?;
    json.push('\n');
    write_atomic(&out_path, &json)?;

    match format {
        Format::Csv => {
            println!("id,objective,direction,best_value,target,deviation,violations,passed");
            for r in &file.reports {
                println!(
                    "{},{},{},{},{},{},{},{}",
                    r.experiment_id,
                    r.objective,
                    r.direction,
                    full(r.best_value),
                    full(r.target),
                    full(r.deviation),
                    r.violations.map_or(String::new(), |v| v.to_string()),
                    r.passed
                );
            }
        }
        Format::Json => {
            // summary table still goes to stdout, rounded for reading
            for r in &file.reports {
                println!(
                    "{:<4} {:<18} {:>14.6} target {:>12.6} dev {:+.2e}  {}",
                    r.experiment_id,
                    format!("{} {}", r.direction, r.objective),
                    r.best_value,
                    r.target,
                    r.deviation,
                    if r.passed { "ok" } else { "MISS" }
                );
            }
        }
    }
    eprintln!(
        "report written to {} ({} experiments, all_passed = {all_passed})",
        out_path.display(),
        file.reports.len()
    );

    if any_violation {
        Ok(ExitCode::from(3))
    } else if !all_passed {
        Ok(ExitCode::from(1))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn cmd_region(
    n: usize,
    m: usize,
    samples: usize,
    out: Option<PathBuf>,
    check_samples: u64,
    seed: u64,
) -> Result<ExitCode> {
    let hull = region_hull::<f64>(n, m, samples).context("building region hull")?;
    let base = out.unwrap_or_else(|| PathBuf::from(format!("region_a{n}{m}")));

    let mut csv = String::from("x,y\n");
    for v in &hull.vertices {
        csv.push_str(&format!("{},{}\n", full(v[0]), full(v[1])));
    }
    let csv_path = base.with_extension("csv");
    write_atomic(&csv_path, &csv)?;

    let mut json = serde_json::to_string_pretty(&hull)?;
    json.push('\n');
    let json_path = base.with_extension("json");
    write_atomic(&json_path, &json)?;

    println!(
        "region of (a_{n}, a_{m}): {} hull vertices from {samples} curve samples",
        hull.vertices.len()
    );
    println!("wrote {} and {}", csv_path.display(), json_path.display());

    if check_samples > 0 {
        // the polygon is inscribed in the true region; allow for the curve
        // discretization gap on top of the strict tolerance
        let tol = SLACK_TOLERANCE + hull.sample_gap;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut escapes = 0u64;
        for _ in 0..check_samples {
            let measure = sample_robertson::<f64, _>(&mut rng, 3);
            let f = typically_real_coeffs(&measure, m.max(n));
            let point = [f.coeff(n).re, f.coeff(m).re];
            if !hull.contains(point, tol) {
                escapes += 1;
            }
        }
        println!(
            "containment check: {escapes} escapes out of {check_samples} random measures \
             (tolerance {tol:.3e})"
        );
        if escapes > 0 {
            return Ok(ExitCode::from(3));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify_lemmas(samples: u64, seed: u64) -> Result<ExitCode> {
    use rand::Rng;
    struct Row {
        rule: &'static str,
        min_slack: f64,
    }
    let mut rows: Vec<Row> = Vec::new();
    let track = |rows: &mut Vec<Row>, rule: &'static str, slack: f64| {
        match rows.iter_mut().find(|r| r.rule == rule) {
            Some(r) => r.min_slack = r.min_slack.min(slack),
            None => rows.push(Row {
                rule,
                min_slack: slack,
            }),
        }
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let h = sample_herglotz::<f64, _>(&mut rng, 3);
        let p = caratheodory_coeffs(&h, 6);
        for k in 1..=6 {
            track(&mut rows, "caratheodory", caratheodory_bound(&p, k)?.slack());
        }
        let mu = Complex::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        let n = rng.gen_range(2..=5usize);
        let k = rng.gen_range(1..n);
        track(
            &mut rows,
            "coefficient_combination",
            efraimidis_bound(&p, mu, n, k)?.slack(),
        );

        let g = starlike_from_caratheodory(&h, 6);
        track(&mut rows, "second_hankel_starlike", janteng_bound(&g)?.slack());
        let lambda = Complex::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        track(
            &mut rows,
            "fekete_szego_starlike",
            fekete_szego_starlike(&g, lambda)?.slack(),
        );
        let (bn, bm) = [(2usize, 2usize), (2, 3), (3, 3)][rng.gen_range(0..3)];
        let gate = 2.0 * (bn + bm - 1) as f64 / (bn * bm) as f64;
        track(
            &mut rows,
            "product_vs_sum_starlike",
            ma_bound(&g, rng.gen_range(gate..gate + 3.0), bn, bm)?.slack(),
        );

        let f = sample_close_to_convex::<f64, _>(&mut rng, 3).build(6)?;
        track(
            &mut rows,
            "close_to_convex_a2a4",
            k_class_functional_bound(&f)?.slack(),
        );
    }

    println!("rule,min_slack,holds");
    let mut ok = true;
    for r in &rows {
        let holds = r.min_slack >= -SLACK_TOLERANCE;
        ok &= holds;
        println!("{},{},{}", r.rule, full(r.min_slack), holds);
    }
    eprintln!("swept {samples} samples per oracle (seed {seed})");
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(3) })
}
