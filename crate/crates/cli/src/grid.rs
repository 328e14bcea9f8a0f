//! Flag parsing for parameter axes: single values, `start:stop:steps` grids,
//! and the `auto` reversal strength.

use std::str::FromStr;

use densecode::protocol::linspace;

use crate::CliError;

/// `--q` accepts a number or the literal `auto`.
#[derive(Clone, Copy, Debug)]
pub enum QValue {
    Auto,
    Value(f64),
}

impl FromStr for QValue {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("auto") {
            return Ok(QValue::Auto);
        }
        s.parse::<f64>()
            .map(QValue::Value)
            .map_err(|_| format!("expected a number or `auto`, got `{s}`"))
    }
}

/// One `--grid axis=start:stop:steps` occurrence.
#[derive(Clone, Debug)]
pub struct GridArg {
    pub axis: String,
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

impl FromStr for GridArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (axis, spec) = s
            .split_once('=')
            .ok_or_else(|| format!("expected axis=start:stop:steps, got `{s}`"))?;
        let parts: Vec<&str> = spec.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("expected start:stop:steps, got `{spec}`"));
        }
        let start: f64 = parts[0].parse().map_err(|_| format!("bad grid start `{}`", parts[0]))?;
        let stop: f64 = parts[1].parse().map_err(|_| format!("bad grid stop `{}`", parts[1]))?;
        let steps: usize = parts[2].parse().map_err(|_| format!("bad grid steps `{}`", parts[2]))?;
        if steps < 2 {
            return Err(format!("grid needs at least 2 steps, got {steps}"));
        }
        for v in [start, stop] {
            if !v.is_finite() || !(0.0..=1.0).contains(&v) {
                return Err(format!("grid bound {v} is outside [0, 1]"));
            }
        }
        Ok(GridArg { axis: axis.to_string(), start, stop, steps })
    }
}

/// Resolved axis: either one pinned value or an inclusive linear grid.
#[derive(Clone, Debug)]
pub enum AxisSpec {
    Single(f64),
    Grid { start: f64, stop: f64, steps: usize },
}

impl AxisSpec {
    pub fn single(name: &str, value: f64) -> Result<Self, CliError> {
        if !value.is_finite() || !(0.0..=1.0).contains(&value) {
            return Err(CliError::Usage(format!("{name} = {value} is outside [0, 1]")));
        }
        Ok(AxisSpec::Single(value))
    }

    /// Looks an axis up among the `--grid` flags.
    pub fn from_grids(name: &str, grids: &[GridArg]) -> Result<Option<Self>, CliError> {
        let matches: Vec<&GridArg> = grids.iter().filter(|g| g.axis == name).collect();
        match matches.len() {
            0 => Ok(None),
            1 => {
                let g = matches[0];
                Ok(Some(AxisSpec::Grid { start: g.start, stop: g.stop, steps: g.steps }))
            }
            _ => Err(CliError::Usage(format!("axis {name} given more than one grid"))),
        }
    }

    /// Combines a direct flag with the `--grid` flags; exactly one source
    /// may specify an axis.
    pub fn resolve(
        name: &str,
        flag: Option<f64>,
        grids: &[GridArg],
    ) -> Result<Option<Self>, CliError> {
        let from_grid = Self::from_grids(name, grids)?;
        match (flag, from_grid) {
            (Some(v), None) => Self::single(name, v).map(Some),
            (None, g) => Ok(g),
            (Some(_), Some(_)) => Err(CliError::Usage(format!(
                "axis {name} specified both by --{name} and --grid"
            ))),
        }
    }

    pub fn values(&self) -> Vec<f64> {
        match *self {
            AxisSpec::Single(v) => vec![v],
            AxisSpec::Grid { start, stop, steps } => linspace(start, stop, steps),
        }
    }

    /// Human-readable form echoed into output metadata.
    pub fn describe(&self) -> String {
        match *self {
            AxisSpec::Single(v) => format!("{v}"),
            AxisSpec::Grid { start, stop, steps } => format!("{start}:{stop}:{steps}"),
        }
    }
}

/// Rejects grid flags naming axes the subcommand does not sweep.
pub fn reject_unknown_axes(grids: &[GridArg], allowed: &[&str]) -> Result<(), CliError> {
    for g in grids {
        if !allowed.contains(&g.axis.as_str()) {
            return Err(CliError::Usage(format!(
                "unknown grid axis `{}`; expected one of {:?}",
                g.axis, allowed
            )));
        }
    }
    Ok(())
}
