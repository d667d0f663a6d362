//! The `lpp` command line.
//!
//! Every command writes one JSON document (or CSV with `--format csv`)
//! carrying `"schema": 1`. Failures print `{"schema": 1, "error": {"kind",
//! "message"}}` on stderr and exit with status 2; a verification that runs
//! but fails exits with status 1.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value as Json};

use crate::error::{Error, Result};
use crate::harness::{
    hammersley_check, hammersley_csv, verification_csv, verify_model, VerifyConfig,
};
use crate::lpp::{mc_distribution, statistic, SampleBatch};
use crate::matrix::IntMatrix;
use crate::model::ModelSpec;
use crate::rmt::model_rmt_distribution;
use crate::rsk::{check_symmetry_lemmas, dual_rsk, rsk, SymmetryClass};
use crate::symfunc::exact_distribution;
use crate::table::{DistributionTable, Value};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "lpp",
    version,
    about = "Symmetrized last-passage percolation toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: OutputFormat,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for sampling (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sample matrices, or estimate Pr(L <= l) with --lmax.
    Sample(SampleArgs),
    /// Exact Pr(L <= l) as a rational.
    Exact(LawArgs),
    /// Pr(L <= l) from the model's group integral.
    Rmt(LawArgs),
    /// Monte Carlo vs exact vs group integral.
    Verify(VerifyArgs),
    /// RSK of a matrix, with optional symmetry lemma checks.
    Rsk(RskArgs),
    /// Longest increasing chain of Poisson points vs the Bessel determinant.
    Hammersley(HammersleyArgs),
}

#[derive(Debug, Args)]
struct SeedArg {
    /// Random seed.
    #[arg(long, env = "LPP_SEED", default_value_t = 1)]
    seed: u64,
}

#[derive(Debug, Args)]
struct SampleArgs {
    /// Model JSON file ("-" for stdin).
    #[arg(long)]
    model: PathBuf,
    /// Matrices to print when --lmax is absent.
    #[arg(long, default_value_t = 1)]
    count: usize,
    /// Estimate Pr(L <= l) for l = 0..=lmax instead of printing matrices.
    #[arg(long)]
    lmax: Option<usize>,
    /// Samples for the estimate.
    #[arg(long, default_value_t = 100_000)]
    samples: usize,
    #[command(flatten)]
    seed: SeedArg,
}

#[derive(Debug, Args)]
struct LawArgs {
    #[arg(long)]
    model: PathBuf,
    /// A single bound.
    #[arg(long, conflicts_with = "lmax", required_unless_present = "lmax")]
    l: Option<usize>,
    /// All bounds 0..=lmax.
    #[arg(long)]
    lmax: Option<usize>,
    /// Truncation tolerance for series symbols.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    model: PathBuf,
    #[arg(long, default_value_t = 4)]
    lmax: usize,
    /// Monte Carlo samples; 0 skips the Monte Carlo column.
    #[arg(long, default_value_t = 100_000)]
    samples: usize,
    #[command(flatten)]
    seed: SeedArg,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long = "z-max", default_value_t = 4.0)]
    z_max: f64,
}

#[derive(Debug, Args)]
struct RskArgs {
    /// Matrix JSON file: {"rows": [{"i": 2, "x": [..]}, {"i": 1, "x": [..]}]}.
    #[arg(long)]
    matrix: PathBuf,
    /// Dual RSK for 0/1 matrices.
    #[arg(long)]
    dual: bool,
    /// Check the lemmas for this symmetry class.
    #[arg(long, value_enum)]
    symmetry: Option<SymmetryArg>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SymmetryArg {
    None,
    Diagonal,
    AntiDiagonal,
    DoublySymmetric,
    PointReflection,
}

impl From<SymmetryArg> for SymmetryClass {
    fn from(s: SymmetryArg) -> Self {
        match s {
            SymmetryArg::None => SymmetryClass::None,
            SymmetryArg::Diagonal => SymmetryClass::Diagonal,
            SymmetryArg::AntiDiagonal => SymmetryClass::AntiDiagonal,
            SymmetryArg::DoublySymmetric => SymmetryClass::DoublySymmetric,
            SymmetryArg::PointReflection => SymmetryClass::PointReflection,
        }
    }
}

#[derive(Debug, Args)]
struct HammersleyArgs {
    /// Intensity of the Poisson points in the unit square.
    #[arg(long)]
    lambda: f64,
    #[arg(long, default_value_t = 10)]
    lmax: usize,
    #[arg(long, default_value_t = 100_000)]
    samples: usize,
    #[command(flatten)]
    seed: SeedArg,
    #[arg(long = "z-max", default_value_t = 4.0)]
    z_max: f64,
}

/// Which operation a [`RunConfig`] performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CommandKind {
    Sample,
    Exact,
    Rmt,
    Verify,
    Rsk,
    Hammersley,
}

/// A fully parsed and validated invocation.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: CommandKind,
    pub model: Option<ModelSpec>,
    pub matrix: Option<IntMatrix>,
    /// Single bound for `exact`/`rmt`; `None` means the whole range.
    pub l: Option<usize>,
    pub l_max: usize,
    pub mc_samples: usize,
    pub count: usize,
    pub seed: u64,
    pub tol: f64,
    pub z_max: f64,
    pub threads: Option<usize>,
    pub output_format: OutputFormat,
    pub out: Option<PathBuf>,
    pub dual: bool,
    pub symmetry: Option<SymmetryClass>,
    pub lambda: f64,
    /// `sample` estimates the law instead of printing matrices.
    pub estimate: bool,
}

impl RunConfig {
    fn base(command: CommandKind, cli: &Cli) -> Self {
        RunConfig {
            command,
            model: None,
            matrix: None,
            l: None,
            l_max: 0,
            mc_samples: 0,
            count: 0,
            seed: 1,
            tol: 1e-9,
            z_max: 4.0,
            threads: cli.threads,
            output_format: cli.format,
            out: cli.out.clone(),
            dual: false,
            symmetry: None,
            lambda: 0.0,
            estimate: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.threads == Some(0) {
            return Err(Error::param("threads", "must be at least 1"));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::param("tol", "must be positive"));
        }
        if !(self.z_max > 0.0) {
            return Err(Error::param("z-max", "must be positive"));
        }
        if let Some(m) = &self.model {
            m.validate()?;
        }
        match self.command {
            CommandKind::Sample if self.estimate && self.mc_samples == 0 => {
                Err(Error::param("samples", "must be at least 1"))
            }
            CommandKind::Hammersley if !(self.lambda > 0.0 && self.lambda.is_finite()) => {
                Err(Error::param("lambda", "must be positive"))
            }
            CommandKind::Hammersley if self.mc_samples == 0 => {
                Err(Error::param("samples", "must be at least 1"))
            }
            _ => Ok(()),
        }
    }
}

fn read_source(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
            .map_err(|e| Error::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
    }
}

pub fn load_model(path: &Path) -> Result<ModelSpec> {
    Ok(serde_json::from_str(&read_source(path)?)?)
}

fn config_from_cli(cli: Cli) -> Result<RunConfig> {
    let cfg = match &cli.command {
        Command::Sample(a) => RunConfig {
            model: Some(load_model(&a.model)?),
            count: a.count,
            l_max: a.lmax.unwrap_or(0),
            estimate: a.lmax.is_some(),
            mc_samples: a.samples,
            seed: a.seed.seed,
            ..RunConfig::base(CommandKind::Sample, &cli)
        },
        Command::Exact(a) | Command::Rmt(a) => {
            let kind = if matches!(cli.command, Command::Exact(_)) {
                CommandKind::Exact
            } else {
                CommandKind::Rmt
            };
            RunConfig {
                model: Some(load_model(&a.model)?),
                l: a.l,
                l_max: a.lmax.or(a.l).unwrap_or(0),
                tol: a.tol,
                ..RunConfig::base(kind, &cli)
            }
        }
        Command::Verify(a) => RunConfig {
            model: Some(load_model(&a.model)?),
            l_max: a.lmax,
            mc_samples: a.samples,
            seed: a.seed.seed,
            tol: a.tol,
            z_max: a.z_max,
            ..RunConfig::base(CommandKind::Verify, &cli)
        },
        Command::Rsk(a) => RunConfig {
            matrix: Some(serde_json::from_str(&read_source(&a.matrix)?)?),
            dual: a.dual,
            symmetry: a.symmetry.map(Into::into),
            ..RunConfig::base(CommandKind::Rsk, &cli)
        },
        Command::Hammersley(a) => RunConfig {
            lambda: a.lambda,
            l_max: a.lmax,
            mc_samples: a.samples,
            seed: a.seed.seed,
            z_max: a.z_max,
            ..RunConfig::base(CommandKind::Hammersley, &cli)
        },
    };
    cfg.validate()?;
    Ok(cfg)
}

/// Serialized output and exit status of one run.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub output: String,
    pub exit_code: i32,
}

fn envelope(command: CommandKind, body: impl Serialize) -> Result<String> {
    let mut map = Map::new();
    map.insert("schema".into(), json!(SCHEMA));
    map.insert("command".into(), serde_json::to_value(command)?);
    match serde_json::to_value(body)? {
        Json::Object(fields) => map.extend(fields),
        other => {
            map.insert("result".into(), other);
        }
    }
    let mut s = serde_json::to_string_pretty(&Json::Object(map))?;
    s.push('\n');
    Ok(s)
}

fn unsupported_csv(what: &str) -> Error {
    Error::Unsupported(format!("CSV output for `{what}`; use --format json"))
}

fn law_table(cfg: &RunConfig, f: impl Fn(usize) -> Result<Value>) -> Result<DistributionTable> {
    let mut t = DistributionTable::default();
    for l in 0..=cfg.l_max {
        t.push(l, f(l)?, None);
    }
    Ok(t)
}

/// Dispatches a validated configuration.
pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    cfg.validate()?;
    let csv = cfg.output_format == OutputFormat::Csv;
    let model = || {
        cfg.model
            .as_ref()
            .ok_or_else(|| Error::param("model", "required"))
    };
    let (output, pass) = match cfg.command {
        CommandKind::Sample if cfg.estimate => {
            let spec = model()?;
            let t = mc_distribution(spec, cfg.l_max, cfg.mc_samples, cfg.seed, cfg.threads)?;
            let out = if csv {
                t.to_csv()
            } else {
                envelope(
                    cfg.command,
                    json!({
                        "model": spec,
                        "dims": spec.dims(),
                        "seed": cfg.seed,
                        "samples": cfg.mc_samples,
                        "rows": t.rows,
                    }),
                )?
            };
            (out, true)
        }
        CommandKind::Sample => {
            let spec = model()?;
            let batch = SampleBatch::generate(spec, cfg.seed, cfg.count, cfg.threads)?;
            let stats = batch
                .matrices
                .iter()
                .map(|x| statistic(spec, x))
                .collect::<Result<Vec<_>>>()?;
            let out = if csv {
                let mut s = String::from("index,L\n");
                for (k, v) in stats.iter().enumerate() {
                    s.push_str(&format!("{k},{v}\n"));
                }
                s
            } else {
                let samples: Vec<Json> = batch
                    .matrices
                    .iter()
                    .zip(&stats)
                    .map(|(m, l)| json!({"matrix": m, "L": l}))
                    .collect();
                envelope(
                    cfg.command,
                    json!({
                        "model": spec,
                        "dims": batch.dims,
                        "seed": cfg.seed,
                        "samples": samples,
                    }),
                )?
            };
            (out, true)
        }
        CommandKind::Exact => {
            let spec = model()?;
            let t = match cfg.l {
                Some(l) => {
                    let mut t = DistributionTable::default();
                    t.push(l, Value::Exact(exact_distribution(spec, l)?), None);
                    t
                }
                None => law_table(cfg, |l| Ok(Value::Exact(exact_distribution(spec, l)?)))?,
            };
            let out = if csv {
                t.to_csv()
            } else if let Some(l) = cfg.l {
                envelope(
                    cfg.command,
                    json!({"model": spec, "dims": spec.dims(), "l": l,
                           "value": t.rows[0].prob, "exactness": "rational"}),
                )?
            } else {
                envelope(
                    cfg.command,
                    json!({"model": spec, "dims": spec.dims(), "rows": t.rows,
                           "exactness": "rational"}),
                )?
            };
            (out, true)
        }
        CommandKind::Rmt => {
            let spec = model()?;
            let ls: Vec<usize> = match cfg.l {
                Some(l) => vec![l],
                None => (0..=cfg.l_max).collect(),
            };
            let results = ls
                .iter()
                .map(|&l| model_rmt_distribution(spec, l, cfg.tol))
                .collect::<Result<Vec<_>>>()?;
            let out = if csv {
                let mut s = String::from("l,prob,exactness,route\n");
                for r in &results {
                    s.push_str(&format!(
                        "{},{},{},{}\n",
                        r.l,
                        r.value,
                        r.value.exactness(),
                        serde_json::to_value(r.route)?.as_str().unwrap_or_default()
                    ));
                }
                s
            } else {
                let rows: Vec<Json> = results
                    .iter()
                    .map(|r| -> Result<Json> {
                        let mut v = serde_json::to_value(r)?;
                        v["exactness"] = json!(r.value.exactness());
                        Ok(v)
                    })
                    .collect::<Result<_>>()?;
                if cfg.l.is_some() {
                    envelope(
                        cfg.command,
                        json!({"model": spec, "dims": spec.dims(), "result": rows[0]}),
                    )?
                } else {
                    envelope(
                        cfg.command,
                        json!({"model": spec, "dims": spec.dims(), "rows": rows}),
                    )?
                }
            };
            (out, true)
        }
        CommandKind::Verify => {
            let spec = model()?;
            let vc = VerifyConfig {
                l_max: cfg.l_max,
                mc_samples: cfg.mc_samples,
                seed: cfg.seed,
                tol: cfg.tol,
                z_max: cfg.z_max,
                threads: cfg.threads,
            };
            let r = verify_model(spec, &vc)?;
            let pass = r.verdict.is_pass();
            let out = if csv {
                verification_csv(&r)
            } else {
                envelope(cfg.command, &r)?
            };
            (out, pass)
        }
        CommandKind::Rsk => {
            if csv {
                return Err(unsupported_csv("rsk"));
            }
            let x = cfg
                .matrix
                .as_ref()
                .ok_or_else(|| Error::param("matrix", "required"))?;
            let pair = if cfg.dual { dual_rsk(x)? } else { rsk(x) };
            let lemmas = match cfg.symmetry {
                Some(class) if !cfg.dual => Some(check_symmetry_lemmas(x, class)?),
                Some(_) => {
                    return Err(Error::Unsupported(
                        "symmetry lemmas are stated for RSK, not dual RSK".into(),
                    ))
                }
                None => None,
            };
            let pass = lemmas.as_ref().is_none_or(|r| r.all_pass());
            let out = envelope(
                cfg.command,
                json!({
                    "dual": cfg.dual,
                    "matrix": x,
                    "shape": pair.shape(),
                    "p": pair.p,
                    "q": pair.q,
                    "lemmas": lemmas,
                }),
            )?;
            (out, pass)
        }
        CommandKind::Hammersley => {
            let r = hammersley_check(
                cfg.lambda,
                cfg.l_max,
                cfg.mc_samples,
                cfg.seed,
                cfg.z_max,
                cfg.threads,
            )?;
            let pass = r.verdict.is_pass();
            let out = if csv {
                hammersley_csv(&r)
            } else {
                envelope(cfg.command, &r)?
            };
            (out, pass)
        }
    };
    Ok(Outcome {
        output,
        exit_code: if pass { 0 } else { 1 },
    })
}

/// The JSON error object printed on failure.
pub fn error_json(kind: &str, message: &str) -> String {
    let v = json!({"schema": SCHEMA, "error": {"kind": kind, "message": message}});
    format!("{v}\n")
}

fn emit(cfg: &RunConfig, out: &Outcome) -> Result<()> {
    match &cfg.out {
        Some(p) => fs::write(p, &out.output)?,
        None => io::stdout().write_all(out.output.as_bytes())?,
    }
    Ok(())
}

/// Parses `args` (program name first), runs, prints, and returns the exit
/// status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            let msg = e.render().to_string();
            let text: Vec<&str> = msg
                .lines()
                .map(str::trim)
                .take_while(|l| !l.starts_with("Usage:"))
                .filter(|l| !l.is_empty())
                .collect();
            let text = text.join(" ");
            eprint!(
                "{}",
                error_json("usage", text.trim_start_matches("error: "))
            );
            return 2;
        }
    };
    let result = config_from_cli(cli).and_then(|cfg| {
        let out = run(&cfg)?;
        emit(&cfg, &out)?;
        Ok(out.exit_code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprint!("{}", error_json(e.kind(), &e.to_string()));
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::format_float;

    #[test]
    fn error_object_shape() {
        let v: Json = serde_json::from_str(&error_json("json", "missing field `beta`")).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["error"]["kind"], "json");
    }

    #[test]
    fn float_format_is_fixed_width() {
        assert_eq!(format_float(0.5), "5.0000000000000000e-1");
    }
}
