//! Table serialization. One row schema serves every pipeline table:
//! `d,p,q,S_rho,S_rho_star,chi,T,chi_times_T,degenerate`, with empty CSV
//! fields (JSON `null`) where a degenerate point has no defined value.
//! CSV floats carry 17 significant digits so downstream plotting reproduces
//! the curves without re-running.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;

use densecode::protocol::SweepRow;

use crate::verify::Check;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Sink for command output: stdout by default, a file with `--output`.
pub enum OutputTarget {
    Stdout(io::Stdout),
    File(BufWriter<File>),
}

impl OutputTarget {
    pub fn create(path: Option<&Path>) -> io::Result<Self> {
        Ok(match path {
            None => OutputTarget::Stdout(io::stdout()),
            Some(p) => OutputTarget::File(BufWriter::new(File::create(p)?)),
        })
    }

    fn writer(&mut self) -> &mut dyn Write {
        match self {
            OutputTarget::Stdout(w) => w,
            OutputTarget::File(w) => w,
        }
    }
}

/// Provenance block mirrored into JSON output.
#[derive(Serialize)]
pub struct Meta {
    pub command: String,
    pub version: String,
    pub format: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub grids: Vec<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl Meta {
    pub fn new(command: &str, format: Format) -> Self {
        Meta {
            command: command.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            format: format!("{format:?}").to_lowercase(),
            grids: Vec::new(),
            seed: None,
        }
    }

    pub fn with_grid(mut self, axis: &str, spec: String) -> Self {
        self.grids.push((axis.to_string(), spec));
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

/// One output row of a pipeline table.
#[derive(Serialize)]
pub struct Row {
    pub d: f64,
    pub p: f64,
    pub q: f64,
    #[serde(rename = "S_rho")]
    pub s_rho: Option<f64>,
    #[serde(rename = "S_rho_star")]
    pub s_rho_star: Option<f64>,
    pub chi: Option<f64>,
    #[serde(rename = "T")]
    pub t: f64,
    #[serde(rename = "chi_times_T")]
    pub chi_times_t: Option<f64>,
    pub degenerate: bool,
}

impl Row {
    pub fn from_sweep(row: &SweepRow<f64>) -> Self {
        match &row.result {
            Some(r) => Row {
                d: row.d,
                p: row.p,
                q: row.q,
                s_rho: Some(r.entropy_state),
                s_rho_star: Some(r.entropy_avg),
                chi: Some(r.capacity),
                t: r.success_prob,
                chi_times_t: Some(r.capacity * r.success_prob),
                degenerate: false,
            },
            None => Row {
                d: row.d,
                p: row.p,
                q: row.q,
                s_rho: None,
                s_rho_star: None,
                chi: None,
                t: row.success_prob,
                chi_times_t: None,
                degenerate: true,
            },
        }
    }
}

pub const ROW_HEADER: &str = "d,p,q,S_rho,S_rho_star,chi,T,chi_times_T,degenerate";

fn fmt_f(x: f64) -> String {
    format!("{x:.16e}")
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_f).unwrap_or_default()
}

pub fn write_rows(
    target: &mut OutputTarget,
    format: Format,
    meta: &Meta,
    rows: &[Row],
) -> io::Result<()> {
    let w = target.writer();
    match format {
        Format::Csv => {
            writeln!(w, "{ROW_HEADER}")?;
            for r in rows {
                writeln!(
                    w,
                    "{},{},{},{},{},{},{},{},{}",
                    fmt_f(r.d),
                    fmt_f(r.p),
                    fmt_f(r.q),
                    fmt_opt(r.s_rho),
                    fmt_opt(r.s_rho_star),
                    fmt_opt(r.chi),
                    fmt_f(r.t),
                    fmt_opt(r.chi_times_t),
                    r.degenerate
                )?;
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                meta: &'a Meta,
                rows: &'a [Row],
            }
            serde_json::to_writer_pretty(&mut *w, &Doc { meta, rows })?;
            writeln!(w)?;
        }
    }
    w.flush()
}

pub fn write_optimize(
    target: &mut OutputTarget,
    format: Format,
    meta: &Meta,
    threshold: f64,
    d_star: f64,
    chi_min: f64,
) -> io::Result<()> {
    let w = target.writer();
    match format {
        Format::Csv => {
            writeln!(w, "threshold,d_star,chi_min")?;
            writeln!(w, "{},{},{}", fmt_f(threshold), fmt_f(d_star), fmt_f(chi_min))?;
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                meta: &'a Meta,
                threshold: f64,
                d_star: f64,
                chi_min: f64,
            }
            serde_json::to_writer_pretty(&mut *w, &Doc { meta, threshold, d_star, chi_min })?;
            writeln!(w)?;
        }
    }
    w.flush()
}

/// Scalar summary of a Monte Carlo run plus its analytic references.
#[derive(Serialize)]
pub struct McRecord {
    pub d: f64,
    pub p: f64,
    pub q: f64,
    pub trials: u64,
    pub seed: u64,
    pub successes: u64,
    pub t_hat: f64,
    pub t_stderr: f64,
    pub t_analytic: f64,
    pub sigma_distance: Option<f64>,
    pub state_max_dev: Option<f64>,
}

pub fn write_mc(
    target: &mut OutputTarget,
    format: Format,
    meta: &Meta,
    rec: McRecord,
) -> io::Result<()> {
    let w = target.writer();
    match format {
        Format::Csv => {
            writeln!(
                w,
                "d,p,q,trials,seed,successes,t_hat,t_stderr,t_analytic,sigma_distance,state_max_dev"
            )?;
            writeln!(
                w,
                "{},{},{},{},{},{},{},{},{},{},{}",
                fmt_f(rec.d),
                fmt_f(rec.p),
                fmt_f(rec.q),
                rec.trials,
                rec.seed,
                rec.successes,
                fmt_f(rec.t_hat),
                fmt_f(rec.t_stderr),
                fmt_f(rec.t_analytic),
                fmt_opt(rec.sigma_distance),
                fmt_opt(rec.state_max_dev)
            )?;
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                meta: &'a Meta,
                #[serde(flatten)]
                record: McRecord,
            }
            serde_json::to_writer_pretty(&mut *w, &Doc { meta, record: rec })?;
            writeln!(w)?;
        }
    }
    w.flush()
}

pub fn write_checks(
    target: &mut OutputTarget,
    format: Format,
    meta: &Meta,
    checks: &[Check],
) -> io::Result<()> {
    let w = target.writer();
    match format {
        Format::Csv => {
            writeln!(w, "check,pass,max_deviation,tolerance")?;
            for c in checks {
                writeln!(
                    w,
                    "{},{},{},{}",
                    c.name,
                    if c.pass { "PASS" } else { "FAIL" },
                    fmt_f(c.max_deviation),
                    fmt_f(c.tolerance)
                )?;
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                meta: &'a Meta,
                checks: &'a [Check],
            }
            serde_json::to_writer_pretty(&mut *w, &Doc { meta, checks })?;
            writeln!(w)?;
        }
    }
    w.flush()
}
