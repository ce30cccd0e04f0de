//! Batch command-line front-end for the hecke-cn toolkit.
//!
//! Subcommands: `ds`, `peel`, `orbits`, `springer`, `tempered`, `profile`,
//! `check`. All numeric input is exact: `m` parses as `p/q` and decimals are
//! rejected. Exit codes: 0 success, 2 parse/validation error, 3 property
//! failure, 4 size cap exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use hecke_cn::checks::{run_all, run_suite, suite_names};
use hecke_cn::par::ExecMode;
use hecke_cn::{
    build_poset, deformation_profile, ds, ls_rho, peel, sigma_to_orbit, slooten_bipartition,
    CentralCharacter, Coset, ETableau, Error, Partition, PeelSide, Rat, Result,
};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "hecke-cn",
    version,
    about = "Exact combinatorics of type C_n Hecke algebra parameters"
)]
struct Cli {
    /// Optional key=value config file (default_m, n_cap, output_format, sweep_grid).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Allow size caps above 14.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Json,
    Csv,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Discrete-series parameter of a partition.
    Ds {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        m: Option<String>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Also print the strip-extraction log.
        #[arg(long)]
        trace: bool,
    },
    /// Strip extraction log only.
    Peel {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        m: Option<String>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Orbit closure poset of a central character.
    Orbits {
        #[arg(long, conflicts_with = "weights")]
        sigma: Option<String>,
        #[arg(long)]
        m: Option<String>,
        /// Explicit weight list "9/4,5/4,..." on the m-coset.
        #[arg(long)]
        weights: Option<String>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Orbit partition and the two bipartition algorithms.
    Springer {
        #[arg(long, required_unless_present = "grid")]
        sigma: Option<String>,
        #[arg(long)]
        m: Option<String>,
        /// Cross-validate the full grid of partitions of size <= N instead.
        #[arg(long, conflicts_with = "sigma")]
        grid: Option<u32>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// All tempered parameters of a given size.
    Tempered {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: Option<String>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Deformation profile of the parameter over an m-interval.
    Profile {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        m_lo: Option<String>,
        #[arg(long)]
        m_hi: Option<String>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Run a named property suite, or all of them.
    Check {
        /// Suite name; omit or use "all" for every suite.
        suite: Option<String>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

/// Defaults, optionally read from a key=value file.
struct Config {
    default_m: Option<Rat>,
    n_cap: u32,
    output_format: Format,
    sweep_grid: Vec<Rat>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            default_m: None,
            n_cap: 12,
            output_format: Format::Ascii,
            sweep_grid: Vec::new(),
        }
    }
}

impl Config {
    fn load(path: &PathBuf) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read config {path:?}: {e}")))?;
        let mut cfg = Config::default();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Parse(format!("config line {}: expected key=value", lineno + 1))
            })?;
            match key.trim() {
                "default_m" => cfg.default_m = Some(Rat::from_str(value)?),
                "n_cap" => {
                    cfg.n_cap = value
                        .trim()
                        .parse()
                        .map_err(|e| Error::Parse(format!("bad n_cap: {e}")))?
                }
                "output_format" => {
                    cfg.output_format = match value.trim() {
                        "ascii" => Format::Ascii,
                        "json" => Format::Json,
                        "csv" => Format::Csv,
                        "dot" => Format::Dot,
                        other => return Err(Error::Parse(format!("bad output_format {other:?}"))),
                    }
                }
                "sweep_grid" => {
                    cfg.sweep_grid = value
                        .split(',')
                        .map(Rat::from_str)
                        .collect::<Result<Vec<Rat>>>()?
                }
                other => return Err(Error::Parse(format!("unknown config key {other:?}"))),
            }
        }
        Ok(cfg)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::CapExceeded { .. } => ExitCode::from(4),
                Error::Violation(_) | Error::Internal(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: &Cli) -> Result<()> {
    let mut cfg = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    if let Ok(v) = std::env::var("HECKE_CN_N_CAP") {
        cfg.n_cap = v
            .parse()
            .map_err(|e| Error::Parse(format!("bad HECKE_CN_N_CAP: {e}")))?;
    }
    if cfg.n_cap > 14 && !cli.force {
        return Err(Error::Invalid(format!(
            "n_cap = {} exceeds 14; pass --force to allow it",
            cfg.n_cap
        )));
    }

    let need_m = |m: &Option<String>| -> Result<Rat> {
        match m {
            Some(s) => Rat::from_str(s),
            None => cfg
                .default_m
                .ok_or_else(|| Error::Invalid("no --m given and no default_m configured".into())),
        }
    };

    match &cli.cmd {
        Cmd::Ds {
            sigma,
            m,
            format,
            trace,
        } => {
            let sigma: Partition = sigma.parse()?;
            let m = need_m(m)?;
            let t = ETableau::new(sigma.clone(), m);
            let peeled = peel(&t)?;
            let d = ds(&sigma, m)?;
            match format.unwrap_or(cfg.output_format) {
                Format::Json => {
                    let mut obj = json!({
                        "sigma": sigma.to_string(),
                        "m": m.to_string(),
                        "ds": d.to_json(),
                    });
                    if *trace {
                        obj["peel"] = peel_json(&peeled);
                    }
                    println!("{}", serde_json::to_string_pretty(&obj).expect("json"));
                }
                _ => {
                    if *trace {
                        print!("{}", t.render_ascii());
                        print_peel(&peeled);
                    }
                    println!("ds({sigma}) at m = {m}: {d}");
                }
            }
        }
        Cmd::Peel { sigma, m, format } => {
            let sigma: Partition = sigma.parse()?;
            let m = need_m(m)?;
            let peeled = peel(&ETableau::new(sigma, m))?;
            match format.unwrap_or(cfg.output_format) {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&peel_json(&peeled)).expect("json")
                ),
                _ => print_peel(&peeled),
            }
        }
        Cmd::Orbits {
            sigma,
            m,
            weights,
            format,
        } => {
            let m = need_m(m)?;
            let cc = match (sigma, weights) {
                (Some(s), None) => {
                    let sigma: Partition = s.parse()?;
                    ETableau::new(sigma, m).central_character()?
                }
                (None, Some(w)) => {
                    let vals = w
                        .split(',')
                        .map(Rat::from_str)
                        .collect::<Result<Vec<Rat>>>()?;
                    CentralCharacter::new(m, vals.into_iter().map(|v| (v, Coset::Sp)).collect())?
                }
                _ => {
                    return Err(Error::Invalid(
                        "orbits needs exactly one of --sigma or --weights".into(),
                    ))
                }
            };
            if cc.size() > cfg.n_cap {
                return Err(Error::CapExceeded {
                    size: cc.size(),
                    cap: cfg.n_cap,
                });
            }
            let poset = build_poset(&cc, cfg.n_cap)?;
            match format.unwrap_or(Format::Dot) {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&poset.to_json()).expect("json")
                ),
                _ => print!("{}", poset.to_dot()),
            }
        }
        Cmd::Springer {
            sigma,
            m,
            grid,
            format,
        } => {
            if let Some(n_max) = grid {
                if *n_max > cfg.n_cap {
                    return Err(Error::CapExceeded {
                        size: *n_max,
                        cap: cfg.n_cap,
                    });
                }
                let ms: Vec<Rat> = if cfg.sweep_grid.is_empty() {
                    ["1/4", "3/4", "5/4", "7/4", "9/4", "11/4"]
                        .iter()
                        .map(|s| Rat::from_str(s))
                        .collect::<Result<_>>()?
                } else {
                    cfg.sweep_grid.clone()
                };
                let report = hecke_cn::cross_validate(*n_max, &ms)?;
                match format.unwrap_or(Format::Csv) {
                    Format::Json => println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({
                            "rows": report.rows.len(),
                            "pass": report.pass(),
                            "failures": report.failures,
                        }))
                        .expect("json")
                    ),
                    _ => print!("{}", report.to_csv()),
                }
                if !report.pass() {
                    return Err(Error::Violation(format!(
                        "{} cross-validation failures",
                        report.failures.len()
                    )));
                }
                return Ok(());
            }
            let sigma: Partition = sigma.as_deref().expect("required by clap").parse()?;
            let m = need_m(m)?;
            let orbit = sigma_to_orbit(&sigma, m)?;
            let ls = ls_rho(&orbit)?;
            let slooten = slooten_bipartition(&sigma, m)?;
            let agree = ls == slooten;
            match format.unwrap_or(cfg.output_format) {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "sigma": sigma.to_string(),
                        "m": m.to_string(),
                        "orbit": orbit.to_string(),
                        "bipartition_ls": ls.to_string(),
                        "bipartition_slooten": slooten.to_string(),
                        "agree": agree,
                    }))
                    .expect("json")
                ),
                Format::Csv => {
                    println!("n,m,sigma,bipartition_slooten,orbit,bipartition_ls,agree");
                    println!(
                        "{},{},\"{}\",\"{}\",\"{}\",\"{}\",{}",
                        sigma.n(),
                        m,
                        sigma,
                        slooten,
                        orbit,
                        ls,
                        agree
                    );
                }
                _ => {
                    println!("orbit:    {orbit}");
                    println!("strips:   {slooten}");
                    println!("recursive:{ls}");
                    println!("agree:    {agree}");
                }
            }
            if !agree {
                return Err(Error::Violation(format!(
                    "bipartition algorithms disagree for sigma = {sigma}, m = {m}"
                )));
            }
        }
        Cmd::Tempered { n, m, format } => {
            let m = need_m(m)?;
            if *n > cfg.n_cap {
                return Err(Error::CapExceeded {
                    size: *n,
                    cap: cfg.n_cap,
                });
            }
            let list = hecke_cn::enumerate_tempered(*n, m)?;
            match format.unwrap_or(cfg.output_format) {
                Format::Json => {
                    let items: Vec<serde_json::Value> = list.iter().map(|t| t.to_json()).collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({
                            "n": n,
                            "m": m.to_string(),
                            "count": list.len(),
                            "parameters": items,
                        }))
                        .expect("json")
                    );
                }
                Format::Csv => {
                    println!("n,bipartition_count,enumerated");
                    println!("{},{},{}", n, Partition::bipartition_count(*n), list.len());
                }
                _ => {
                    for t in &list {
                        println!("{t}");
                    }
                    println!(
                        "count: {} (bipartitions of {}: {})",
                        list.len(),
                        n,
                        Partition::bipartition_count(*n)
                    );
                }
            }
        }
        Cmd::Profile {
            sigma,
            m_lo,
            m_hi,
            format,
        } => {
            let sigma: Partition = sigma.parse()?;
            let grid_lo = cfg.sweep_grid.iter().min().copied();
            let grid_hi = cfg.sweep_grid.iter().max().copied();
            let lo = match m_lo {
                Some(s) => Rat::from_str(s)?,
                None => grid_lo.ok_or_else(|| {
                    Error::Invalid("no --m-lo given and no sweep_grid configured".into())
                })?,
            };
            let hi = match m_hi {
                Some(s) => Rat::from_str(s)?,
                None => grid_hi.ok_or_else(|| {
                    Error::Invalid("no --m-hi given and no sweep_grid configured".into())
                })?,
            };
            let prof = deformation_profile(&sigma, lo, hi)?;
            match format.unwrap_or(cfg.output_format) {
                Format::Json => {
                    let intervals: Vec<serde_json::Value> = prof
                        .intervals
                        .iter()
                        .map(|iv| {
                            json!({
                                "lo": iv.lo.to_string(),
                                "hi": iv.hi.to_string(),
                                "parameter": iv.representative.to_json(),
                            })
                        })
                        .collect();
                    let cuts: Vec<String> =
                        prof.critical_points.iter().map(Rat::to_string).collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({
                            "sigma": sigma.to_string(),
                            "intervals": intervals,
                            "critical_points": cuts,
                        }))
                        .expect("json")
                    );
                }
                _ => {
                    for iv in &prof.intervals {
                        println!("({}, {}): {}", iv.lo, iv.hi, iv.representative);
                    }
                    let cuts: Vec<String> =
                        prof.critical_points.iter().map(Rat::to_string).collect();
                    println!("critical points: {}", cuts.join(", "));
                }
            }
        }
        Cmd::Check { suite, n, format } => {
            let reports = match suite.as_deref() {
                None | Some("all") => run_all(ExecMode::default()),
                Some(name) => {
                    if !suite_names().contains(&name) {
                        return Err(Error::Invalid(format!(
                            "unknown suite {name:?}; available: all, {}",
                            suite_names().join(", ")
                        )));
                    }
                    vec![run_suite(name, *n, ExecMode::default())?]
                }
            };
            let all_pass = reports.iter().all(|r| r.pass());
            match format.unwrap_or(cfg.output_format) {
                Format::Json => {
                    let items: Vec<serde_json::Value> =
                        reports.iter().map(|r| r.to_json()).collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({
                            "pass": all_pass,
                            "suites": items,
                        }))
                        .expect("json")
                    );
                }
                _ => {
                    for r in &reports {
                        println!("{}", r.summary_line());
                    }
                }
            }
            if !all_pass {
                return Err(Error::Violation("one or more suites failed".into()));
            }
        }
    }
    Ok(())
}

fn print_peel(p: &hecke_cn::PeelResult) {
    for step in &p.log {
        let side = match step.side {
            PeelSide::Plus => '+',
            PeelSide::Minus => '-',
        };
        let vals: Vec<String> = step.evalues.iter().map(Rat::to_string).collect();
        println!("{side} [{}]", vals.join(", "));
    }
}

fn peel_json(p: &hecke_cn::PeelResult) -> serde_json::Value {
    let seg = |s: &hecke_cn::Segment| json!({"lo": s.lo.to_string(), "hi": s.hi.to_string()});
    let log: Vec<serde_json::Value> = p
        .log
        .iter()
        .map(|step| {
            json!({
                "side": if step.side == PeelSide::Plus { "+" } else { "-" },
                "evalues": step.evalues.iter().map(Rat::to_string).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "lplus": p.lplus.iter().map(seg).collect::<Vec<_>>(),
        "lminus": p.lminus.iter().map(seg).collect::<Vec<_>>(),
        "log": log,
    })
}
