//! Command-line front end.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use clusterqp::catalog::{
    all_entries, catalog_entry_by_name, verify_actions, verify_relations, verify_root_basis,
    CatalogEntry, CatalogError, Report,
};
use clusterqp::fano::{fano_polygon, no_remainders, seed_from_polygon, FanoError, FanoPolygon, PolygonSpec};
use clusterqp::io::{seed_from_json, seed_report, word_from_text, IoError};
use clusterqp::lattice::LatticeError;
use clusterqp::qp6::{
    build_qp6_context, orbit_step_errors, qp6_maps, qp6_orbit, verify_qp6_identities, OrbitPoint,
    Order, Qp6Error, Qp6Params, Qp6ParamsJson,
};
use clusterqp::symbolic::{triviality, EvalOptions, SymbolicError, DEFAULT_SIMPLIFY_THRESHOLD};
use clusterqp::toric::{analyze, classify_quotient, qp_type_check, ToricError, ToricSeedData};

#[derive(Parser, Debug)]
#[command(name = "clusterqp", version, about = "Seeds of q-Painleve type and their Cremona groups")]
struct Cli {
    /// Term count above which rational functions are gcd-reduced.
    #[arg(long, global = true, default_value_t = DEFAULT_SIMPLIFY_THRESHOLD)]
    simplify_threshold: usize,
    /// Modular pre-check before exact identity testing.
    #[arg(long, global = true, value_enum, default_value_t = Switch::On)]
    fast_path: Switch,
    /// Keep per-check timings in JSON reports.
    #[arg(long, global = true)]
    timings: bool,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Switch {
    On,
    Off,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the type label of toric data (a JSON file or a catalog label such as `e5`).
    Classify {
        data: String,
        /// Print the full analysis instead of the label.
        #[arg(long)]
        report: bool,
    },
    /// Fan, boundary intersection matrix, null root and K° Gram matrix.
    Nullroot {
        data: String,
        #[arg(long)]
        fan_extra_subdivision: bool,
    },
    /// The Fano polygon of toric data, or of a polygon JSON, with an ASCII plot.
    Polygon {
        data: String,
        /// Read DATA as a polygon (`{"vertices": ..}` or `{"facets": ..}`).
        #[arg(long)]
        from_polygon: bool,
        /// Print an ASCII lattice plot instead of JSON.
        #[arg(long)]
        plot: bool,
    },
    /// Toric data read off a polygon JSON.
    SeedFromPolygon { polygon: PathBuf },
    /// Apply a word to a seed and print the resulting seed.
    Mutate {
        seed: PathBuf,
        /// Word JSON file, or the word itself in composition notation.
        word: String,
        /// Also decide whether the word is a trivial cluster transformation.
        #[arg(long)]
        check_trivial: bool,
    },
    /// Run the checks for one catalog type.
    Verify {
        label: String,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Run the checks for every catalog type.
    VerifyAll {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// The sixth q-Painleve system.
    Qp6 {
        #[command(subcommand)]
        command: Qp6Command,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    Roots,
    Relations,
    Actions,
}

#[derive(Subcommand, Debug)]
enum Qp6Command {
    /// Involutivity, parameter pullbacks and the two defining identities.
    Identities,
    /// Iterate c1 and c2 alternately and write the trajectory as CSV.
    Orbit {
        #[arg(long, default_value_t = 100)]
        steps: usize,
        /// JSON `{"a_quarter": ["p/q", ..] | "a": [..], "f": .., "g": ..}`; random if omitted.
        #[arg(long)]
        params: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = "c2-first")]
        order: Order,
        /// Compare every float step with the exact symbolic maps.
        #[arg(long)]
        check: bool,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Toric(#[from] ToricError),
    #[error(transparent)]
    Fano(#[from] FanoError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
    #[error(transparent)]
    Qp6(#[from] Qp6Error),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Input(_) | CliError::Io(_) => "input",
            CliError::Toric(_) => "toric",
            CliError::Fano(_) => "fano",
            CliError::Catalog(_) => "catalog",
            CliError::Lattice(_) => "lattice",
            CliError::Symbolic(_) => "symbolic",
            CliError::Qp6(_) => "qp6",
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Io(_) => 2,
            _ => 1,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn parse_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    serde_json::from_str(&read(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn toric_input(arg: &str) -> Result<ToricSeedData, CliError> {
    let path = Path::new(arg);
    if !path.exists() {
        if let Ok(entry) = catalog_entry_by_name(arg) {
            return Ok(entry.vectors);
        }
    }
    parse_json(path)
}

struct Ctx {
    opts: EvalOptions,
    timings: bool,
    out: Option<PathBuf>,
}

impl Ctx {
    fn emit(&self, text: &str) -> Result<(), CliError> {
        match &self.out {
            Some(p) => fs::write(p, text)
                .map_err(|e| CliError::Input(format!("{}: {e}", p.display()))),
            None => {
                let mut s = std::io::stdout().lock();
                s.write_all(text.as_bytes())
                    .and_then(|_| s.flush())
                    .map_err(|e| CliError::Input(e.to_string()))
            }
        }
    }

    fn emit_json<T: Serialize>(&self, v: &T) -> Result<(), CliError> {
        let mut v = serde_json::to_value(v).expect("serializable");
        if !self.timings {
            strip_millis(&mut v);
        }
        let mut s = serde_json::to_string_pretty(&v).expect("serializable");
        s.push('\n');
        self.emit(&s)
    }
}

fn strip_millis(v: &mut Value) {
    match v {
        Value::Object(m) => {
            m.remove("millis");
            m.values_mut().for_each(strip_millis);
        }
        Value::Array(a) => a.iter_mut().for_each(strip_millis),
        _ => {}
    }
}

fn rows(m: &clusterqp::linalg::IntMatrix) -> Vec<Vec<i64>> {
    m.to_rows_i64()
}

fn analysis_json(data: &ToricSeedData, extra: bool) -> Result<Value, CliError> {
    let a = analyze(data, extra)?;
    let h = a.boundary.h_matrix();
    let label = classify_quotient(&a.quotient_gram).ok().map(|l| l.to_string());
    Ok(json!({
        "fan": a.fan.rays,
        "self_intersection": a.boundary.self_int,
        "multiplicity": a.boundary.mult,
        "h": rows(&h),
        "verdict": format!("{:?}", qp_type_check(&h)),
        "c_prime": a.null_root.c_prime,
        "c": a.null_root.c,
        "delta": a.null_root.delta,
        "k_circ_basis": rows(&a.kform.basis.transpose()),
        "gram": rows(&a.kform.gram),
        "quotient_gram": rows(&a.quotient_gram),
        "label": label,
    }))
}

fn polygon_json(p: &FanoPolygon) -> Value {
    json!({
        "vertices": p.vertices,
        "facets": p.facets,
        "no_remainders": no_remainders(p),
    })
}

fn run_suite(entry: &CatalogEntry, suite: Suite, opts: &EvalOptions) -> Report {
    let mut rep = Report::new(entry.label.to_string());
    if matches!(suite, Suite::All | Suite::Roots) {
        rep.extend(verify_root_basis(entry));
    }
    if matches!(suite, Suite::All | Suite::Relations) {
        rep.extend(verify_relations(entry, opts));
    }
    if matches!(suite, Suite::All | Suite::Actions) {
        rep.extend(verify_actions(entry, opts));
    }
    rep
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let ctx = Ctx {
        opts: EvalOptions {
            fast_path: cli.fast_path == Switch::On,
            simplify_threshold: cli.simplify_threshold,
            budget: None,
        },
        timings: cli.timings,
        out: cli.out,
    };
    match cli.command {
        Command::Classify { data, report } => {
            let d = toric_input(&data)?;
            if report {
                ctx.emit_json(&analysis_json(&d, false)?)?;
            } else {
                let a = analyze(&d, false)?;
                ctx.emit(&format!("{}\n", classify_quotient(&a.quotient_gram)?))?;
            }
            Ok(true)
        }
        Command::Nullroot {
            data,
            fan_extra_subdivision,
        } => {
            let d = toric_input(&data)?;
            ctx.emit_json(&analysis_json(&d, fan_extra_subdivision)?)?;
            Ok(true)
        }
        Command::Polygon {
            data,
            from_polygon,
            plot,
        } => {
            let p = if from_polygon {
                parse_json::<PolygonSpec>(Path::new(&data))?.build()?
            } else {
                let d = toric_input(&data)?;
                let a = analyze(&d, false)?;
                fano_polygon(&d, &a.null_root)?
            };
            if plot {
                ctx.emit(&p.ascii_plot())?;
            } else {
                ctx.emit_json(&polygon_json(&p))?;
            }
            Ok(no_remainders(&p))
        }
        Command::SeedFromPolygon { polygon } => {
            let p = parse_json::<PolygonSpec>(&polygon)?.build()?;
            ctx.emit_json(&seed_from_polygon(&p)?)?;
            Ok(true)
        }
        Command::Mutate {
            seed,
            word,
            check_trivial,
        } => {
            let s = seed_from_json(&read(&seed)?)?;
            let text = if Path::new(&word).is_file() {
                read(Path::new(&word))?
            } else {
                word
            };
            let w = word_from_text(&s, &text)?;
            let target = w.target()?;
            let mut v = serde_json::to_value(seed_report(&target)).expect("serializable");
            let mut ok = true;
            if check_trivial {
                let verdict = triviality(&w, &ctx.opts)?;
                ok = verdict.is_trivial();
                v["trivial"] = Value::Bool(ok);
                v["verdict"] = Value::String(format!("{verdict:?}"));
            }
            ctx.emit_json(&v)?;
            Ok(!check_trivial || ok)
        }
        Command::Verify { label, suite } => {
            let entry = catalog_entry_by_name(&label)?;
            let rep = run_suite(&entry, suite, &ctx.opts);
            ctx.emit_json(&rep)?;
            Ok(rep.passed())
        }
        Command::VerifyAll { suite } => {
            let reports: Vec<Report> = all_entries()
                .iter()
                .map(|e| run_suite(e, suite, &ctx.opts))
                .collect();
            let ok = reports.iter().all(Report::passed);
            ctx.emit_json(&json!({ "passed": ok, "reports": reports }))?;
            Ok(ok)
        }
        Command::Qp6 { command } => run_qp6(&ctx, command),
    }
}

fn run_qp6(ctx: &Ctx, command: Qp6Command) -> Result<bool, CliError> {
    let q = build_qp6_context()?;
    match command {
        Qp6Command::Identities => {
            let rep = verify_qp6_identities(&q, &ctx.opts);
            ctx.emit_json(&rep)?;
            Ok(rep.passed())
        }
        Qp6Command::Orbit {
            steps,
            params,
            seed,
            order,
            check,
        } => {
            let p = match params {
                Some(path) => parse_json::<Qp6ParamsJson>(&path)?.resolve()?,
                None => Qp6Params::random(seed),
            };
            let traj = qp6_orbit(&q, &p, steps, order)?;
            let mut csv = String::from(OrbitPoint::csv_header());
            csv.push('\n');
            for pt in &traj {
                csv.push_str(&pt.csv_row());
                csv.push('\n');
            }
            ctx.emit(&csv)?;
            if check {
                let maps = qp6_maps(&q, &ctx.opts)?;
                let errs = orbit_step_errors(&maps, &traj)?;
                let worst = errs.iter().copied().fold(0.0, f64::max);
                let ok = worst <= 1e-9;
                let line = json!({ "steps": steps, "max_step_rel_error": worst, "passed": ok });
                eprintln!("{line}");
                return Ok(ok);
            }
            Ok(true)
        }
    }
}

fn error_json(kind: &str, message: &str) -> String {
    json!({ "error": { "kind": kind, "message": message } }).to_string()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(std::io::stdout(), "{e}");
                return ExitCode::SUCCESS;
            }
            eprintln!("{}", error_json("usage", e.to_string().trim()));
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("{}", error_json(e.kind(), &e.to_string()));
            ExitCode::from(e.exit_code())
        }
    }
}
