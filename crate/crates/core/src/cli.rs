//! Command line front end.
//!
//! Data goes to standard output (or `--out`), diagnostics to standard error.
//! Exit codes: 0 success, 2 bad arguments, 3 numerical or truncation failure,
//! 4 root bracket without a sign change, 1 I/O failure.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::asymptotics::{large_curvature_estimate, small_curvature_estimate, LimitParams};
use crate::cycle::{run_cycle, CycleOutcome, OttoParams};
use crate::error::OttoError;
use crate::spectrum::CurvedSpectrum;
use crate::sweep::{
    figure_dataset_with_policy, find_mode_transition, find_peak_work, sweep_grid, Axis, Cell,
    FigureId, Param, Quantity, SweepSpec, SweepTable,
};
use crate::thermo::TruncationPolicy;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;
pub const EXIT_BRACKET: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "curved-otto",
    version,
    about = "Quantum Otto cycle with a harmonic oscillator on a circle",
    allow_negative_numbers = true
)]
struct Cli {
    #[command(flatten)]
    common: CommonArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Write data to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format; tables default to csv, single results to json.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Relative tolerance for the truncated level sums.
    #[arg(long, global = true, env = "OTTO_REL_TOL")]
    rel_tol: Option<f64>,
    /// Maximum number of summed levels.
    #[arg(long, global = true, env = "OTTO_N_MAX")]
    n_max: Option<usize>,
    /// Significant digits in printed numbers.
    #[arg(long, global = true, default_value_t = 17,
          value_parser = clap::value_parser!(u8).range(1..=17))]
    precision: u8,
    /// File of `key = value` lines, one per flag. Command line flags win.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Levels, gaps, gap ratios and curvature derivatives.
    #[command(allow_negative_numbers = true)]
    Spectrum {
        #[arg(long)]
        lambda: f64,
        #[arg(long, default_value_t = 10)]
        levels: u64,
    },
    /// Evaluate one cycle.
    #[command(allow_negative_numbers = true)]
    Cycle(CycleArgs),
    /// Limiting-case estimates next to the exact cycle.
    Limits {
        #[command(subcommand)]
        kind: LimitsKind,
    },
    /// Evaluate quantities over a 1- or 2-axis grid.
    #[command(allow_negative_numbers = true)]
    Sweep {
        /// `param=lo:hi:count` or `param=v1,v2,...`; give once or twice.
        #[arg(long = "axis", required = true)]
        axes: Vec<String>,
        /// `param=value` for every parameter not on an axis.
        #[arg(long = "fixed")]
        fixed: Vec<String>,
        #[arg(long, value_delimiter = ',', required = true)]
        quantities: Vec<String>,
    },
    /// Dataset behind one figure (fig2, fig4 .. fig11).
    Figure { id: String },
    /// Locate the engine to refrigerator transition in lambda_hot.
    #[command(allow_negative_numbers = true)]
    Transition(SearchArgs),
    /// Locate the lambda_hot of maximum work.
    #[command(allow_negative_numbers = true)]
    Peak(SearchArgs),
}

#[derive(Debug, Args)]
struct CycleArgs {
    #[arg(long)]
    lambda_cold: f64,
    #[arg(long)]
    lambda_hot: f64,
    #[arg(long)]
    t_hot: f64,
    #[arg(long)]
    t_cold: f64,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long)]
    lambda_cold: f64,
    #[arg(long)]
    t_hot: f64,
    #[arg(long)]
    t_cold: f64,
    #[arg(long)]
    lo: f64,
    #[arg(long)]
    hi: f64,
}

#[derive(Debug, Subcommand)]
enum LimitsKind {
    /// Small-curvature expansion; the exact cycle uses T_c = t_ref, T_h = t_ref + theta.
    #[command(allow_negative_numbers = true)]
    Small {
        #[arg(long)]
        lambda: f64,
        #[arg(long)]
        epsilon: f64,
        #[arg(long)]
        theta: f64,
        #[arg(long)]
        t_ref: f64,
    },
    /// Large-curvature theta-function forms.
    #[command(allow_negative_numbers = true)]
    Large {
        #[arg(long)]
        lambda: f64,
        #[arg(long)]
        epsilon: f64,
        #[arg(long)]
        t_hot: f64,
        #[arg(long)]
        t_cold: f64,
    },
}

#[derive(Debug, Clone, PartialEq)]
enum Field {
    Num(f64),
    Int(u64),
    Text(String),
    Bool(bool),
    Null,
    List(Vec<f64>),
}

type Record = Vec<(&'static str, Field)>;

enum Output {
    Table(SweepTable),
    Record(Record),
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Compute(OttoError),
    Io(String),
}

impl From<OttoError> for CliError {
    fn from(e: OttoError) -> Self {
        CliError::Compute(e)
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Compute(OttoError::Domain(_)) => EXIT_USAGE,
            CliError::Compute(OttoError::Truncation { .. }) => EXIT_NUMERIC,
            CliError::Compute(OttoError::Bracket { .. }) => EXIT_BRACKET,
            CliError::Io(_) => EXIT_IO,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) | CliError::Io(m) => m.clone(),
            CliError::Compute(e) => e.to_string(),
        }
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let args = match merge_config(args) {
        Ok(a) => a,
        Err(e) => return report(stderr, &e),
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(stdout, "{rendered}");
            } else {
                let _ = write!(stderr, "{rendered}");
            }
            return code;
        }
    };
    match execute(&cli).and_then(|out| emit(&cli.common, out, stdout)) {
        Ok(()) => EXIT_OK,
        Err(e) => report(stderr, &e),
    }
}

fn report(stderr: &mut dyn Write, e: &CliError) -> i32 {
    let _ = writeln!(stderr, "error: {}", e.message());
    e.exit_code()
}

/// Appends `--key value` for every config entry whose flag is not already on
/// the command line.
fn merge_config(mut args: Vec<OsString>) -> Result<Vec<OsString>, CliError> {
    let mut path = None;
    for (i, a) in args.iter().enumerate() {
        let a = a.to_string_lossy();
        if a == "--config" {
            path = args.get(i + 1).map(PathBuf::from);
        } else if let Some(p) = a.strip_prefix("--config=") {
            path = Some(PathBuf::from(p));
        }
    }
    let Some(path) = path else {
        return Ok(args);
    };
    let entries = read_config(&path)?;
    let given: Vec<String> = args
        .iter()
        .map(|a| {
            a.to_string_lossy()
                .split('=')
                .next()
                .unwrap_or("")
                .to_string()
        })
        .collect();
    for (key, value) in entries {
        let flag = format!("--{key}");
        if !given.contains(&flag) {
            args.push(flag.into());
            args.push(value.into());
        }
    }
    Ok(args)
}

fn read_config(path: &Path) -> Result<Vec<(String, String)>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
    let mut entries = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            CliError::Usage(format!(
                "{}:{}: expected `key = value`",
                path.display(),
                lineno + 1
            ))
        })?;
        let key = key.trim().replace('_', "-");
        if key == "config" {
            return Err(CliError::Usage(
                "config files cannot include other configs".into(),
            ));
        }
        entries.push((key, value.trim().to_string()));
    }
    Ok(entries)
}

fn policy(common: &CommonArgs) -> Result<TruncationPolicy, CliError> {
    let default = TruncationPolicy::default();
    Ok(TruncationPolicy::new(
        common.rel_tol.unwrap_or(default.rel_tol),
        common.n_max.unwrap_or(default.n_max),
    )?)
}

fn execute(cli: &Cli) -> Result<Output, CliError> {
    let policy = policy(&cli.common)?;
    match &cli.command {
        Command::Spectrum { lambda, levels } => spectrum_table(*lambda, *levels),
        Command::Cycle(a) => {
            let p = OttoParams::new(a.lambda_cold, a.lambda_hot, a.t_hot, a.t_cold)?
                .with_policy(policy);
            Ok(Output::Record(outcome_record(&run_cycle(&p)?, "")))
        }
        Command::Limits { kind } => limits(kind, policy),
        Command::Sweep {
            axes,
            fixed,
            quantities,
        } => {
            let spec = parse_sweep(axes, fixed, quantities)?.with_policy(policy);
            Ok(Output::Table(sweep_grid(&spec)?))
        }
        Command::Figure { id } => {
            let id: FigureId = id.parse()?;
            Ok(Output::Table(figure_dataset_with_policy(id, policy)?))
        }
        Command::Transition(a) => {
            let t = find_mode_transition(a.lambda_cold, a.t_hot, a.t_cold, (a.lo, a.hi), &policy)?;
            Ok(Output::Record(vec![
                ("lambda_cold", Field::Num(a.lambda_cold)),
                ("t_hot", Field::Num(a.t_hot)),
                ("t_cold", Field::Num(a.t_cold)),
                ("lambda_hot", Field::Num(t.lambda_hot)),
                ("q_hot_at_root", Field::Num(t.q_hot_at_root)),
                ("q_hot_lo", Field::Num(t.q_hot_lo)),
                ("q_hot_hi", Field::Num(t.q_hot_hi)),
                ("bracket_width", Field::Num(t.bracket_width)),
                ("iterations", Field::Int(t.iterations as u64)),
            ]))
        }
        Command::Peak(a) => {
            let s = find_peak_work(a.lambda_cold, a.t_hot, a.t_cold, (a.lo, a.hi), &policy)?;
            let best = s.best();
            Ok(Output::Record(vec![
                ("lambda_cold", Field::Num(a.lambda_cold)),
                ("t_hot", Field::Num(a.t_hot)),
                ("t_cold", Field::Num(a.t_cold)),
                ("lambda_hot_at_peak", Field::Num(best.lambda_hot)),
                ("peak_work", Field::Num(best.work)),
                ("unimodal", Field::Bool(s.unimodal)),
                (
                    "candidate_lambda_hot",
                    Field::List(s.candidates.iter().map(|c| c.lambda_hot).collect()),
                ),
                (
                    "candidate_work",
                    Field::List(s.candidates.iter().map(|c| c.work).collect()),
                ),
            ]))
        }
    }
}

fn spectrum_table(lambda: f64, levels: u64) -> Result<Output, CliError> {
    let s = CurvedSpectrum::new(lambda)?;
    if levels == 0 {
        return Err(CliError::Usage("--levels must be at least 1".into()));
    }
    let columns = ["n", "energy", "gap", "gap_ratio", "energy_derivative"];
    let rows = (0..levels)
        .map(|n| {
            vec![
                Cell::Integer(n),
                Cell::Number(s.energy(n)),
                Cell::Number(s.gap(n)),
                Cell::Number(s.gap_ratio(n)),
                Cell::Number(s.energy_derivative(n)),
            ]
        })
        .collect();
    // a spectrum table is not a sweep; reuse the table shape with a placeholder spec
    let spec = SweepSpec::new(
        vec![Axis::linspace(
            Param::LevelN,
            0.0,
            levels as f64,
            levels as usize,
        )],
        BTreeMap::from([(Param::LambdaHot, lambda)]),
        vec![Quantity::GapRatio],
    );
    Ok(Output::Table(SweepTable {
        columns: columns.iter().map(|c| c.to_string()).collect(),
        rows,
        spec,
    }))
}

fn outcome_record(out: &CycleOutcome, prefix: &'static str) -> Record {
    let opt = |x: Option<f64>| x.map_or(Field::Null, Field::Num);
    let name = |plain: &'static str, prefixed: &'static str| {
        if prefix.is_empty() {
            plain
        } else {
            prefixed
        }
    };
    vec![
        (name("q_hot", "exact_q_hot"), Field::Num(out.q_hot)),
        (
            name("q_cold_out", "exact_q_cold_out"),
            Field::Num(out.q_cold_out),
        ),
        (name("work", "exact_work"), Field::Num(out.work)),
        (name("efficiency", "exact_efficiency"), opt(out.efficiency)),
        (name("cop", "exact_cop"), opt(out.cop)),
        (
            name("mode", "exact_mode"),
            Field::Text(out.mode.to_string()),
        ),
        (
            name("n_levels", "exact_n_levels"),
            Field::Int(out.n_levels as u64),
        ),
    ]
}

fn limits(kind: &LimitsKind, policy: TruncationPolicy) -> Result<Output, CliError> {
    match *kind {
        LimitsKind::Small {
            lambda,
            epsilon,
            theta,
            t_ref,
        } => {
            let params = LimitParams {
                lambda,
                epsilon,
                theta_temp: theta,
                t_ref,
            };
            let est = small_curvature_estimate(&params, &policy)?;
            let exact = run_cycle(
                &OttoParams::new(params.lambda_cold(), lambda, t_ref + theta, t_ref)?
                    .with_policy(policy),
            )?;
            let mut rec = vec![
                ("lambda", Field::Num(lambda)),
                ("epsilon", Field::Num(epsilon)),
                ("theta", Field::Num(theta)),
                ("t_ref", Field::Num(t_ref)),
                ("w_approx", Field::Num(est.w_approx)),
                ("q_hot_approx", Field::Num(est.q_hot_approx)),
                ("eta_s", Field::Num(est.eta_s)),
                ("eta_many_level", Field::Num(est.eta_many_level)),
            ];
            rec.extend(outcome_record(&exact, "exact_"));
            Ok(Output::Record(rec))
        }
        LimitsKind::Large {
            lambda,
            epsilon,
            t_hot,
            t_cold,
        } => {
            let est = large_curvature_estimate(lambda, epsilon, t_hot, t_cold)?;
            let exact = run_cycle(
                &OttoParams::new(lambda - epsilon, lambda, t_hot, t_cold)?.with_policy(policy),
            )?;
            let mut rec = vec![
                ("lambda", Field::Num(lambda)),
                ("epsilon", Field::Num(epsilon)),
                ("t_hot", Field::Num(t_hot)),
                ("t_cold", Field::Num(t_cold)),
                ("w_approx", Field::Num(est.w_approx)),
                ("q_hot_approx", Field::Num(est.q_hot_approx)),
                ("eta_l", Field::Num(est.eta_l)),
            ];
            rec.extend(outcome_record(&exact, "exact_"));
            Ok(Output::Record(rec))
        }
    }
}

fn parse_f64(s: &str, what: &str) -> Result<f64, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("invalid number '{s}' in {what}")))
}

fn parse_axis(s: &str) -> Result<Axis, CliError> {
    let (name, range) = s
        .split_once('=')
        .ok_or_else(|| CliError::Usage(format!("axis '{s}' must look like param=lo:hi:count")))?;
    let param: Param = name.trim().parse()?;
    let parts: Vec<&str> = range.split(':').collect();
    match parts.as_slice() {
        [lo, hi, count] => {
            let count = count
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("invalid point count in axis '{s}'")))?;
            Ok(Axis::linspace(
                param,
                parse_f64(lo, s)?,
                parse_f64(hi, s)?,
                count,
            ))
        }
        [list] => {
            let values = list
                .split(',')
                .map(|v| parse_f64(v, s))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Axis::values(param, values))
        }
        _ => Err(CliError::Usage(format!(
            "axis '{s}' must look like param=lo:hi:count or param=v1,v2,..."
        ))),
    }
}

fn parse_sweep(
    axes: &[String],
    fixed: &[String],
    quantities: &[String],
) -> Result<SweepSpec, CliError> {
    let axes = axes
        .iter()
        .map(|a| parse_axis(a))
        .collect::<Result<Vec<_>, _>>()?;
    let mut fx = BTreeMap::new();
    for f in fixed {
        let (k, v) = f
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("fixed '{f}' must look like param=value")))?;
        fx.insert(k.trim().parse::<Param>()?, parse_f64(v, f)?);
    }
    let quantities = quantities
        .iter()
        .map(|q| q.trim().parse::<Quantity>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SweepSpec::new(axes, fx, quantities))
}

/// `digits` significant digits in scientific notation. Seventeen digits
/// re-parse to the identical double.
pub fn format_number(x: f64, digits: u8) -> String {
    if x.is_nan() {
        "NaN".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.into()
    } else {
        format!("{:.*e}", usize::from(digits.max(1) - 1), x)
    }
}

const NOT_APPLICABLE: &str = "NA";

fn cell_text(cell: &Cell, digits: u8) -> String {
    match cell {
        Cell::Number(x) => format_number(*x, digits),
        Cell::Integer(n) => n.to_string(),
        Cell::Text(s) => s.clone(),
        Cell::NotApplicable => NOT_APPLICABLE.into(),
    }
}

fn field_text(field: &Field, digits: u8) -> String {
    match field {
        Field::Num(x) => format_number(*x, digits),
        Field::Int(n) => n.to_string(),
        Field::Text(s) => s.clone(),
        Field::Bool(b) => b.to_string(),
        Field::Null => NOT_APPLICABLE.into(),
        Field::List(v) => v
            .iter()
            .map(|x| format_number(*x, digits))
            .collect::<Vec<_>>()
            .join(";"),
    }
}

fn json_number(x: f64, digits: u8) -> serde_json::Value {
    // round through the printed form so --precision applies to JSON as well
    format_number(x, digits)
        .parse::<f64>()
        .ok()
        .and_then(serde_json::Number::from_f64)
        .map_or(serde_json::Value::Null, serde_json::Value::Number)
}

fn cell_json(cell: &Cell, digits: u8) -> serde_json::Value {
    match cell {
        Cell::Number(x) => json_number(*x, digits),
        Cell::Integer(n) => serde_json::Value::from(*n),
        Cell::Text(s) => serde_json::Value::String(s.clone()),
        Cell::NotApplicable => serde_json::Value::Null,
    }
}

fn field_json(field: &Field, digits: u8) -> serde_json::Value {
    use serde_json::Value;
    match field {
        Field::Num(x) => json_number(*x, digits),
        Field::Int(n) => Value::from(*n),
        Field::Text(s) => Value::String(s.clone()),
        Field::Bool(b) => Value::Bool(*b),
        Field::Null => Value::Null,
        Field::List(v) => Value::Array(v.iter().map(|x| json_number(*x, digits)).collect()),
    }
}

fn render(output: &Output, format: Format, digits: u8) -> Result<Vec<u8>, CliError> {
    let io = |e: csv::Error| CliError::Io(e.to_string());
    match (output, format) {
        (Output::Table(t), Format::Csv) => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            w.write_record(&t.columns).map_err(io)?;
            for row in &t.rows {
                w.write_record(row.iter().map(|c| cell_text(c, digits)))
                    .map_err(io)?;
            }
            w.into_inner().map_err(|e| CliError::Io(e.to_string()))
        }
        (Output::Record(r), Format::Csv) => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            w.write_record(r.iter().map(|(k, _)| *k)).map_err(io)?;
            w.write_record(r.iter().map(|(_, v)| field_text(v, digits)))
                .map_err(io)?;
            w.into_inner().map_err(|e| CliError::Io(e.to_string()))
        }
        (Output::Table(t), Format::Json) => {
            let rows: Vec<serde_json::Value> = t
                .rows
                .iter()
                .map(|row| {
                    let obj: serde_json::Map<String, serde_json::Value> = t
                        .columns
                        .iter()
                        .zip(row)
                        .map(|(k, c)| (k.clone(), cell_json(c, digits)))
                        .collect();
                    serde_json::Value::Object(obj)
                })
                .collect();
            json_bytes(&serde_json::Value::Array(rows))
        }
        (Output::Record(r), Format::Json) => {
            let obj: serde_json::Map<String, serde_json::Value> = r
                .iter()
                .map(|(k, v)| (k.to_string(), field_json(v, digits)))
                .collect();
            json_bytes(&serde_json::Value::Object(obj))
        }
    }
}

fn json_bytes(v: &serde_json::Value) -> Result<Vec<u8>, CliError> {
    let mut bytes = serde_json::to_vec_pretty(v).map_err(|e| CliError::Io(e.to_string()))?;
    bytes.push(b'\n');
    Ok(bytes)
}

fn emit(common: &CommonArgs, output: Output, stdout: &mut dyn Write) -> Result<(), CliError> {
    let format = common.format.unwrap_or(match output {
        Output::Table(_) => Format::Csv,
        Output::Record(_) => Format::Json,
    });
    let bytes = render(&output, format, common.precision)?;
    match &common.out {
        Some(path) => fs::write(path, bytes)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(&bytes)
            .map_err(|e| CliError::Io(e.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("curved-otto").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn number_format() {
        assert_eq!(format_number(0.5, 17), "5.0000000000000000e-1");
        assert_eq!(format_number(-2.0, 3), "-2.00e0");
        assert_eq!(format_number(f64::NAN, 17), "NaN");
    }

    proptest! {
        #[test]
        fn seventeen_digits_round_trip(x in proptest::num::f64::NORMAL | proptest::num::f64::SUBNORMAL) {
            let back: f64 = format_number(x, 17).parse().unwrap();
            prop_assert_eq!(back.to_bits(), x.to_bits());
        }
    }

    #[test]
    fn axis_syntax() {
        let a = parse_axis("lambda_hot=0.1:5:50").unwrap();
        assert_eq!(a, Axis::linspace(Param::LambdaHot, 0.1, 5.0, 50));
        let a = parse_axis("lambda_cold=0.1,0.3").unwrap();
        assert_eq!(a, Axis::values(Param::LambdaCold, vec![0.1, 0.3]));
        assert!(parse_axis("lambda_hot").is_err());
        assert!(parse_axis("lambda=0:1:3").is_err());
        assert!(parse_axis("lambda_hot=0:1").is_err());
    }

    #[test]
    fn domain_errors_map_to_usage_code() {
        let (code, out, err) = run_capture(&[
            "cycle",
            "--lambda-cold",
            "-1",
            "--lambda-hot",
            "1",
            "--t-hot",
            "1",
            "--t-cold",
            "0.1",
        ]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.is_empty());
        assert!(err.contains("lambda_cold"));
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, err) = run_capture(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("Usage"));
        assert!(err.is_empty());
    }
}
