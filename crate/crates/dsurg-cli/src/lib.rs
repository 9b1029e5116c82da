//! Command-line driver: `dtable`, `torsion`, `obstruct`, `scan`.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid mathematical input.

pub mod report;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use dsurg_core::{
    certify_nonfillable_interval, check_slope, lemma_window, AlexanderPolynomial, DInvariantTable,
    PretzelKnot, TorsionTable,
};

use report::{
    DTablePayload, DTableRow, Format, Inputs, Payload, ReportDocument, ScanPayload, TorsionPayload,
};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;

#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub warnings: Vec<String>,
}

#[derive(Debug)]
pub struct CliError {
    pub exit_code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            exit_code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn invalid(err: dsurg_core::Error) -> Self {
        CliError {
            exit_code: EXIT_INVALID_INPUT,
            message: err.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Table,
    Json,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Table => Format::Table,
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

/// Either a pretzel parameter or an explicit coefficient list.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct PolySource {
    /// Pretzel parameter m >= 3, selecting the knot P(-2,3,2m+1)
    #[arg(long)]
    m: Option<u64>,

    /// Half-coefficients "a_0,a_1,...,a_g" of a symmetrized Alexander polynomial
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
}

#[derive(Debug, Parser)]
#[command(
    name = "dsurg",
    version,
    about = "Exact d-invariants of L-space knot surgeries and the negative-definite \
             filling obstruction"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// d-invariant table of the +n-surgery, one row per spin^c class
    Dtable {
        #[command(flatten)]
        source: PolySource,

        /// Surgery slope n >= 1
        #[arg(long)]
        n: u64,

        #[arg(long, value_enum, default_value_t = FormatArg::Table)]
        format: FormatArg,
    },

    /// Torsion coefficients t_0..t_g of a knot polynomial
    Torsion {
        #[command(flatten)]
        source: PolySource,

        #[arg(long, value_enum, default_value_t = FormatArg::Table)]
        format: FormatArg,
    },

    /// Owens-Strle obstruction verdict for one integer slope on P(-2,3,2m+1)
    Obstruct {
        /// Pretzel parameter m >= 3
        #[arg(long)]
        m: u64,

        /// Surgery slope n >= 1 (the fillability conclusion needs n >= 2m+3)
        #[arg(long)]
        n: u64,

        #[arg(long, value_enum, default_value_t = FormatArg::Table)]
        format: FormatArg,
    },

    /// Scan integer slopes and certify a non-fillable interval per m
    Scan {
        /// Pretzel parameter, a single integer "3" or an inclusive range "4..6"
        #[arg(long)]
        m: String,

        /// Exclusive upper end of the scan window (default 4m+6; 17 for m=3)
        #[arg(long)]
        upper: Option<u64>,

        #[arg(long, value_enum, default_value_t = FormatArg::Table)]
        format: FormatArg,
    },
}

/// Parse and execute; `args` includes the program name.
pub fn run<I, S>(args: I) -> Result<Outcome, CliError>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| match e.kind() {
        ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliError {
            exit_code: 0,
            message: e.to_string(),
        },
        _ => CliError::usage(e.to_string()),
    })?;

    match cli.command {
        Command::Dtable { source, n, format } => cmd_dtable(&source, n, format.into()),
        Command::Torsion { source, format } => cmd_torsion(&source, format.into()),
        Command::Obstruct { m, n, format } => cmd_obstruct(m, n, format.into()),
        Command::Scan { m, upper, format } => cmd_scan(&m, upper, format.into()),
    }
}

fn parse_coeffs(raw: &str) -> Result<Vec<i64>, CliError> {
    raw.split(',')
        .map(|tok| {
            tok.trim().parse::<i64>().map_err(|_| {
                CliError::usage(format!("--coeffs: cannot parse integer from {tok:?}"))
            })
        })
        .collect()
}

struct ResolvedPoly {
    torsion: TorsionTable,
    genus: u64,
    /// Brute-force/closed-form agreement, evaluated for pretzel input only.
    closed_form_matches: Option<bool>,
    inputs_m: Option<String>,
    inputs_coeffs: Option<String>,
}

fn resolve_poly(source: &PolySource) -> Result<ResolvedPoly, CliError> {
    match (&source.m, &source.coeffs) {
        (Some(m), None) => {
            let knot = PretzelKnot::new(*m).map_err(CliError::invalid)?;
            let torsion = knot.torsion();
            let matches =
                (0..=knot.genus()).all(|i| knot.torsion_closed_form(i) == torsion.get(i as i64));
            Ok(ResolvedPoly {
                genus: torsion.genus(),
                torsion,
                closed_form_matches: Some(matches),
                inputs_m: Some(m.to_string()),
                inputs_coeffs: None,
            })
        }
        (None, Some(raw)) => {
            let coeffs = parse_coeffs(raw)?;
            let poly = AlexanderPolynomial::new(coeffs).map_err(CliError::invalid)?;
            let torsion = poly.torsion().map_err(CliError::invalid)?;
            Ok(ResolvedPoly {
                genus: poly.genus(),
                torsion,
                closed_form_matches: None,
                inputs_m: None,
                inputs_coeffs: Some(raw.clone()),
            })
        }
        // clap's argument group guarantees exactly one source
        _ => unreachable!("argument group enforces exactly one of --m / --coeffs"),
    }
}

fn document(command: &str, inputs: Inputs, payload: Payload, format: Format) -> Outcome {
    let doc = ReportDocument {
        tool_version: TOOL_VERSION.to_string(),
        command: command.to_string(),
        inputs,
        payload,
    };
    Outcome {
        stdout: doc.render(format),
        warnings: Vec::new(),
    }
}

fn cmd_dtable(source: &PolySource, n: u64, format: Format) -> Result<Outcome, CliError> {
    let poly = resolve_poly(source)?;
    let table = DInvariantTable::compute(&poly.torsion, n).map_err(CliError::invalid)?;
    let entries = table
        .entries()
        .iter()
        .enumerate()
        .map(|(i, d)| DTableRow {
            i: i as u64,
            d: d.to_string(),
        })
        .collect();
    let inputs = Inputs {
        m: poly.inputs_m,
        coeffs: poly.inputs_coeffs,
        n: Some(n),
        upper: None,
        format: format.as_str().to_string(),
    };
    Ok(document(
        "dtable",
        inputs,
        Payload::DTable(DTablePayload { n, entries }),
        format,
    ))
}

fn cmd_torsion(source: &PolySource, format: Format) -> Result<Outcome, CliError> {
    let poly = resolve_poly(source)?;
    let inputs = Inputs {
        m: poly.inputs_m.clone(),
        coeffs: poly.inputs_coeffs.clone(),
        n: None,
        upper: None,
        format: format.as_str().to_string(),
    };
    let payload = TorsionPayload {
        values: poly.torsion.values().to_vec(),
        genus: poly.genus,
        closed_form_matches: poly.closed_form_matches,
    };
    Ok(document(
        "torsion",
        inputs,
        Payload::Torsion(payload),
        format,
    ))
}

fn cmd_obstruct(m: u64, n: u64, format: Format) -> Result<Outcome, CliError> {
    let knot = PretzelKnot::new(m).map_err(CliError::invalid)?;
    let report = check_slope(&knot.torsion(), n).map_err(CliError::invalid)?;
    let inputs = Inputs {
        m: Some(m.to_string()),
        coeffs: None,
        n: Some(n),
        upper: None,
        format: format.as_str().to_string(),
    };
    let mut out = document(
        "obstruct",
        inputs,
        Payload::Obstruction((&report).into()),
        format,
    );
    let min = knot.lspace_min_slope();
    if n < min {
        out.warnings.push(format!(
            "n = {n} is below the L-space bound 2m+3 = {min}: the obstruction still applies \
             to negative definite bounding, but the fillability conclusion needs n >= {min}"
        ));
    }
    Ok(out)
}

/// "3" or an inclusive range "4..6".
fn parse_m_range(raw: &str) -> Result<(u64, u64), CliError> {
    let bad = || {
        CliError::usage(format!(
            "--m: expected an integer or range \"a..b\", got {raw:?}"
        ))
    };
    match raw.split_once("..") {
        None => {
            let m = raw.trim().parse::<u64>().map_err(|_| bad())?;
            Ok((m, m))
        }
        Some((a, b)) => {
            let lo = a.trim().parse::<u64>().map_err(|_| bad())?;
            let hi = b.trim().parse::<u64>().map_err(|_| bad())?;
            if lo > hi {
                return Err(CliError::usage(format!(
                    "--m: empty range {raw:?}, need a <= b"
                )));
            }
            Ok((lo, hi))
        }
    }
}

fn cmd_scan(m_spec: &str, upper: Option<u64>, format: Format) -> Result<Outcome, CliError> {
    let (lo, hi) = parse_m_range(m_spec)?;
    let mut scans = Vec::new();
    for m in lo..=hi {
        let knot = PretzelKnot::new(m).map_err(CliError::invalid)?;
        let scan = certify_nonfillable_interval(&knot, upper);
        scans.push(ScanPayload::new(&scan, &lemma_window(&knot)));
    }
    let inputs = Inputs {
        m: Some(m_spec.to_string()),
        coeffs: None,
        n: None,
        upper,
        format: format.as_str().to_string(),
    };
    Ok(document("scan", inputs, Payload::Scan(scans), format))
}
