//! The `axial` command line.
//!
//! Exit codes: 0 when every check passes, 1 when a checked property fails,
//! 2 for usage and input errors.

use std::io::{IsTerminal, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::{subalgebra_closure, AlgebraTable, Element};
use crate::axis::{check_fusion, classify_axis, find_idempotents, is_idempotent};
use crate::constructions::{dim2_algebra, load_fischer_space, matsuo_algebra, FischerSpace};
use crate::corpus::random_corpus;
use crate::error::{Error, Result};
use crate::miyamoto::{first_multiplicativity_failure, miyamoto, Involution};
use crate::rational::{format_rational, int, parse_rational, Rational};
use crate::report::{Status, VerificationReport};
use crate::verify::verify_algebra;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "axial",
    version,
    about = "Exact checks for primitive axes in non-associative algebras"
)]
pub struct Cli {
    /// Emit JSON instead of human-readable text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify an idempotent as a (primitive, Jordan type) axis.
    Classify(ClassifyArgs),
    /// Run the identity suites on pairs of axes.
    Verify(VerifyArgs),
    /// Write an example algebra as JSON.
    Make(MakeArgs),
    /// Build a Miyamoto involution and check it.
    Miyamoto(MiyamotoArgs),
    /// Subalgebra generated by a set of elements.
    Closure(ClosureArgs),
    /// Check the fusion grading of an axis.
    Fusion(FusionArgs),
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub algebra: PathBuf,
    /// Basis index, basis label, or a coefficient vector such as "[1,0,-1/2]".
    #[arg(long, required_unless_present = "scan")]
    pub axis: Option<String>,
    /// Classify every idempotent whose coefficients lie in {0, 1, -1} and the
    /// values given with --coeff.
    #[arg(long, conflicts_with = "axis")]
    pub scan: bool,
    #[arg(long = "coeff", requires = "scan")]
    pub coeffs: Vec<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, required_unless_present = "random")]
    pub algebra: Option<PathBuf>,
    /// Axis selector; give exactly two.
    #[arg(long = "axis")]
    pub axes: Vec<String>,
    /// Treat every basis vector as a claimed axis.
    #[arg(long, conflicts_with = "axes")]
    pub all_axes: bool,
    /// Verify this many random parameter instantiations instead of a file.
    #[arg(long, conflicts_with_all = ["algebra", "axes", "all_axes"])]
    pub random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Family {
    Dim2,
    Matsuo,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Builtin {
    Line,
    S4,
}

#[derive(Debug, Args)]
pub struct MakeArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub eta: Option<String>,
    /// Fischer space JSON file.
    #[arg(long, conflicts_with = "builtin")]
    pub space: Option<PathBuf>,
    /// Bundled Fischer space.
    #[arg(long, value_enum)]
    pub builtin: Option<Builtin>,
    /// Output path; stdout when absent.
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MiyamotoArgs {
    #[arg(long)]
    pub algebra: PathBuf,
    #[arg(long)]
    pub axis: String,
    #[arg(long, default_value = "lambda")]
    pub which: String,
}

#[derive(Debug, Args)]
pub struct ClosureArgs {
    #[arg(long)]
    pub algebra: PathBuf,
    /// Comma-separated selectors, e.g. "a,b" or "0,[1,1,0]".
    #[arg(long)]
    pub gens: String,
}

#[derive(Debug, Args)]
pub struct FusionArgs {
    #[arg(long)]
    pub algebra: PathBuf,
    #[arg(long)]
    pub axis: String,
}

/// Basis index, basis label, or bracketed coefficient vector.
pub fn parse_selector(table: &AlgebraTable, text: &str) -> Result<Element> {
    let text = text.trim();
    if let Some(inner) = text.strip_prefix('[') {
        let inner = inner
            .strip_suffix(']')
            .ok_or_else(|| Error::InvalidInput(format!("unterminated vector {text:?}")))?;
        let coeffs = inner
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<Rational>>>()?;
        return table.element(coeffs);
    }
    if let Some(i) = table.label_index(text) {
        return Ok(table.basis_element(i));
    }
    match text.parse::<usize>() {
        Ok(i) if i < table.dim() => Ok(table.basis_element(i)),
        _ => Err(Error::InvalidInput(format!(
            "{text:?} is neither a basis index, a basis label nor a vector"
        ))),
    }
}

/// Splits on commas outside brackets.
pub fn split_selectors(text: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0;
    let mut current = String::new();
    for ch in text.chars() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(std::mem::take(&mut current));
                continue;
            }
            _ => {}
        }
        current.push(ch);
    }
    parts.push(current);
    parts
        .into_iter()
        .map(|p| p.trim().to_string())
        .filter(|p| !p.is_empty())
        .collect()
}

struct Output<'a> {
    out: &'a mut dyn Write,
    json: bool,
    color: bool,
}

impl Output<'_> {
    fn line(&mut self, text: impl AsRef<str>) -> Result<()> {
        writeln!(self.out, "{}", text.as_ref()).map_err(io_error)
    }

    fn json(&mut self, value: serde_json::Value) -> Result<()> {
        let text = serde_json::to_string_pretty(&value)?;
        self.line(text)
    }

    fn report(&mut self, report: &VerificationReport) -> Result<()> {
        if self.json {
            return self.json(report.to_json_value());
        }
        for e in &report.entries {
            let (tag, code) = match e.status {
                Status::Pass => ("PASS", "32"),
                Status::Fail => ("FAIL", "31"),
                Status::Vacuous => ("VACUOUS", "33"),
            };
            let tag = if self.color {
                format!("\x1b[{code}m{tag:7}\x1b[0m")
            } else {
                format!("{tag:7}")
            };
            let mut text = format!("{tag} {}", e.identity_id);
            if e.status == Status::Fail {
                text.push_str(&format!(
                    "  residual [{}]",
                    e.residual.to_strings().join(", ")
                ));
            }
            if let Some(note) = &e.note {
                text.push_str(&format!("  ({note})"));
            }
            self.line(text)?;
        }
        let failed = report.failures().count();
        self.line(format!("{} checks, {} failed", report.len(), failed))
    }
}

fn io_error(source: std::io::Error) -> Error {
    Error::Io {
        path: PathBuf::from("<output>"),
        source,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let color = !cli.json
        && std::env::var("AXIAL_COLOR").map_or(true, |v| v != "0")
        && std::io::stdout().is_terminal();
    let mut output = Output {
        out,
        json: cli.json,
        color,
    };
    match dispatch(&cli.command, &mut output) {
        Ok(code) => code,
        // A closed stdout (`axial verify ... | head`) is not worth a message.
        Err(Error::Io { source, .. }) if source.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: &Command, out: &mut Output<'_>) -> Result<i32> {
    match command {
        Command::Classify(args) => cmd_classify(args, out),
        Command::Verify(args) => cmd_verify(args, out),
        Command::Make(args) => cmd_make(args, out),
        Command::Miyamoto(args) => cmd_miyamoto(args, out),
        Command::Closure(args) => cmd_closure(args, out),
        Command::Fusion(args) => cmd_fusion(args, out),
    }
}

fn describe_profile(
    table: &AlgebraTable,
    a: &Element,
) -> Result<(bool, String, serde_json::Value)> {
    let label = a.pretty(table.labels());
    if !is_idempotent(table, a)? {
        return Ok((
            false,
            format!("{label}: not idempotent, not an axis"),
            json!({ "axis": a.to_strings(), "idempotent": false }),
        ));
    }
    let profile = classify_axis(table, a)?;
    let dims = profile.spaces.dims();
    let text = match profile.failure() {
        None => format!(
            "{label}: type {}, primitive, {}\n  min poly L_a: {}\n  min poly R_a: {}\n  dims A11 A00 AL0 A0D ALD: {:?}",
            profile.type_string(),
            if profile.jordan_type { "Jordan" } else { "not Jordan" },
            profile.left_min_poly,
            profile.right_min_poly,
            dims
        ),
        Some(reason) => format!(
            "{label}: not a primitive axis ({reason})\n  min poly L_a: {}\n  min poly R_a: {}\n  dims A11 A00 AL0 A0D ALD: {:?}",
            profile.left_min_poly, profile.right_min_poly, dims
        ),
    };
    let mut value = serde_json::to_value(profile.summary())?;
    value["idempotent"] = true.into();
    Ok((profile.is_primitive_axis(), text, value))
}

fn cmd_classify(args: &ClassifyArgs, out: &mut Output<'_>) -> Result<i32> {
    let table = AlgebraTable::load(&args.algebra)?;
    if args.scan {
        let mut coeffs = vec![int(0), int(1), int(-1)];
        for c in &args.coeffs {
            let c = parse_rational(c)?;
            if !coeffs.contains(&c) {
                coeffs.push(c);
            }
        }
        let found = find_idempotents(&table, &coeffs, &[], 200_000)?;
        let mut values = Vec::new();
        for e in &found {
            let (_, text, value) = describe_profile(&table, e)?;
            if out.json {
                values.push(value);
            } else {
                out.line(text)?;
            }
        }
        if out.json {
            out.json(serde_json::Value::Array(values))?;
        } else {
            out.line(format!("{} idempotents found", found.len()))?;
        }
        return Ok(EXIT_OK);
    }
    let a = parse_selector(&table, args.axis.as_deref().unwrap_or_default())?;
    let (is_axis, text, value) = describe_profile(&table, &a)?;
    if out.json {
        out.json(value)?;
    } else {
        out.line(text)?;
    }
    Ok(if is_axis { EXIT_OK } else { EXIT_FAILED })
}

fn exit_for(report: &VerificationReport) -> i32 {
    if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

fn cmd_verify(args: &VerifyArgs, out: &mut Output<'_>) -> Result<i32> {
    if let Some(count) = args.random {
        let mut report = VerificationReport::new();
        for case in random_corpus(count, args.seed) {
            let r = verify_algebra(&case.table, &case.axes)?;
            if !out.json {
                let failed = r.failures().count();
                out.line(format!(
                    "{:40} {} checks, {} failed",
                    case.name,
                    r.len(),
                    failed
                ))?;
            }
            report.extend(r.scoped(&case.name));
        }
        if out.json {
            out.report(&report)?;
        } else {
            let failures: Vec<_> = report.failures().map(|e| e.identity_id.clone()).collect();
            for id in &failures {
                out.line(format!("FAIL {id}"))?;
            }
            out.line(format!(
                "{} checks, {} failed",
                report.len(),
                failures.len()
            ))?;
        }
        return Ok(exit_for(&report));
    }
    let path = args
        .algebra
        .as_ref()
        .ok_or_else(|| Error::InvalidInput("--algebra is required".into()))?;
    let table = AlgebraTable::load(path)?;
    let axes: Vec<Element> = if args.all_axes {
        (0..table.dim()).map(|i| table.basis_element(i)).collect()
    } else {
        if args.axes.len() != 2 {
            return Err(Error::InvalidInput(format!(
                "verify needs two --axis generators or --all-axes, got {}",
                args.axes.len()
            )));
        }
        let axes = args
            .axes
            .iter()
            .map(|s| parse_selector(&table, s))
            .collect::<Result<Vec<_>>>()?;
        if axes[0] == axes[1] {
            return Err(Error::InvalidInput("the two generators must differ".into()));
        }
        axes
    };
    let report = verify_algebra(&table, &axes)?;
    out.report(&report)?;
    Ok(exit_for(&report))
}

fn cmd_make(args: &MakeArgs, out: &mut Output<'_>) -> Result<i32> {
    let table = match args.family {
        Family::Dim2 => {
            let lambda = args
                .lambda
                .as_deref()
                .ok_or_else(|| Error::InvalidInput("--family dim2 needs --lambda".into()))?;
            dim2_algebra(&parse_rational(lambda)?)?
        }
        Family::Matsuo => {
            let eta = args
                .eta
                .as_deref()
                .ok_or_else(|| Error::InvalidInput("--family matsuo needs --eta".into()))?;
            let space = match (&args.space, args.builtin) {
                (Some(path), _) => load_fischer_space(path)?,
                (None, Some(Builtin::Line)) => FischerSpace::single_line(),
                (None, Some(Builtin::S4)) => FischerSpace::symmetric_group_s4(),
                (None, None) => {
                    return Err(Error::InvalidInput(
                        "--family matsuo needs --space or --builtin".into(),
                    ))
                }
            };
            matsuo_algebra(&space, &parse_rational(eta)?)?
        }
    };
    let text = table.to_json_string();
    match &args.output {
        Some(path) => std::fs::write(path, text + "\n").map_err(|source| Error::Io {
            path: path.clone(),
            source,
        })?,
        None => out.line(text)?,
    }
    Ok(EXIT_OK)
}

fn cmd_miyamoto(args: &MiyamotoArgs, out: &mut Output<'_>) -> Result<i32> {
    let table = AlgebraTable::load(&args.algebra)?;
    let which: Involution = args.which.parse()?;
    let a = parse_selector(&table, &args.axis)?;
    if !is_idempotent(&table, &a)? {
        out.line(format!(
            "{}: not idempotent, not an axis",
            a.pretty(table.labels())
        ))?;
        return Ok(EXIT_FAILED);
    }
    let profile = classify_axis(&table, &a)?;
    if let Some(reason) = profile.failure() {
        out.line(format!(
            "{}: not a primitive axis ({reason})",
            a.pretty(table.labels())
        ))?;
        return Ok(EXIT_FAILED);
    }
    let tau = miyamoto(&profile, which)?;
    let failure = first_multiplicativity_failure(&table, &tau);
    let automorphism = failure.is_none() && tau.matrix.inverse().is_some();
    let involution = tau.is_involution();
    let mut images = Vec::new();
    for i in 0..table.dim() {
        let e = table.basis_element(i);
        let is_axis = is_idempotent(&table, &e)? && classify_axis(&table, &e)?.is_primitive_axis();
        if is_axis {
            images.push((table.labels()[i].clone(), tau.apply(&e)));
        }
    }
    let rows: Vec<Vec<String>> = (0..tau.dim())
        .map(|i| tau.matrix.row(i).iter().map(format_rational).collect())
        .collect();
    if out.json {
        out.json(json!({
            "axis": a.to_strings(),
            "which": which.to_string(),
            "matrix": rows,
            "automorphism": automorphism,
            "involution": involution,
            "images": images.iter().map(|(l, v)| json!({"axis": l, "image": v.to_strings()})).collect::<Vec<_>>(),
        }))?;
    } else {
        out.line(format!("tau_{which} of {}:", a.pretty(table.labels())))?;
        for r in &rows {
            out.line(format!("  [{}]", r.join(", ")))?;
        }
        let yes = |b: bool| if b { "yes" } else { "no" };
        out.line(format!(
            "automorphism: {}, involution: {}",
            yes(automorphism),
            yes(involution)
        ))?;
        if let Some((i, j, _)) = failure {
            out.line(format!(
                "  not multiplicative on ({}, {})",
                table.labels()[i],
                table.labels()[j]
            ))?;
        }
        for (label, image) in &images {
            out.line(format!("  {label} -> {}", image.pretty(table.labels())))?;
        }
    }
    Ok(if automorphism && involution {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}

fn cmd_closure(args: &ClosureArgs, out: &mut Output<'_>) -> Result<i32> {
    let table = AlgebraTable::load(&args.algebra)?;
    let gens = split_selectors(&args.gens)
        .iter()
        .map(|s| parse_selector(&table, s))
        .collect::<Result<Vec<_>>>()?;
    let closure = subalgebra_closure(&table, &gens)?;
    let basis: Vec<Element> = (0..closure.dim())
        .map(|i| closure.basis_element(i))
        .collect();
    if out.json {
        out.json(json!({
            "dim": closure.dim(),
            "basis": basis.iter().map(Element::to_strings).collect::<Vec<_>>(),
            "table": match &closure.table {
                Some(t) => serde_json::to_value(t.to_file())?,
                None => serde_json::Value::Null,
            },
        }))?;
    } else {
        out.line(format!("dim {}", closure.dim()))?;
        for (i, v) in basis.iter().enumerate() {
            out.line(format!("  u{i} = {}", v.pretty(table.labels())))?;
        }
        if let Some(t) = &closure.table {
            out.line(format!("{t:?}"))?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_fusion(args: &FusionArgs, out: &mut Output<'_>) -> Result<i32> {
    let table = AlgebraTable::load(&args.algebra)?;
    let a = parse_selector(&table, &args.axis)?;
    if !is_idempotent(&table, &a)? {
        out.line(format!(
            "{}: not idempotent, not an axis",
            a.pretty(table.labels())
        ))?;
        return Ok(EXIT_FAILED);
    }
    let profile = classify_axis(&table, &a)?;
    if let Some(reason) = profile.failure() {
        out.line(format!(
            "{}: not a primitive axis ({reason})",
            a.pretty(table.labels())
        ))?;
        return Ok(EXIT_FAILED);
    }
    let report = check_fusion(&table, &profile)?;
    out.report(&report)?;
    if !out.json && report.all_passed() {
        out.line("all graded products OK")?;
    }
    Ok(exit_for(&report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::dim2_algebra;
    use crate::rational::rat;

    #[test]
    fn selectors() {
        let t = dim2_algebra(&rat(1, 3)).unwrap();
        assert_eq!(parse_selector(&t, "1").unwrap(), t.basis_element(1));
        assert_eq!(parse_selector(&t, "a").unwrap(), t.basis_element(0));
        assert_eq!(
            parse_selector(&t, "[2, -1]").unwrap(),
            Element(vec![rat(2, 1), rat(-1, 1)])
        );
        assert!(parse_selector(&t, "2").is_err());
        assert!(parse_selector(&t, "[1,2,3]").is_err());
        assert!(parse_selector(&t, "[1,2").is_err());
    }

    #[test]
    fn split_respects_brackets() {
        assert_eq!(
            split_selectors("a, [1,0,1/2],2"),
            vec!["a", "[1,0,1/2]", "2"]
        );
    }
}
