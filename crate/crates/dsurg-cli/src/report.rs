//! Report document and its three renderings (table, JSON, CSV).
//!
//! Output is deterministic: fixed field order, no timestamps, rationals
//! serialized as "p/q" strings in lowest terms (never floats), so identical
//! invocations produce identical bytes and JSON round-trips losslessly.

use dsurg_core::{LemmaWindow, ObstructionReport, ScanResult};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

impl Format {
    pub fn as_str(&self) -> &'static str {
        match self {
            Format::Table => "table",
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

/// Top-level report: `{tool_version, command, inputs, payload}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub command: String,
    pub inputs: Inputs,
    pub payload: Payload,
}

/// Echo of the command-line parameters, as given.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Inputs {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coeffs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper: Option<u64>,
    pub format: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Payload {
    DTable(DTablePayload),
    Torsion(TorsionPayload),
    Obstruction(ObstructionPayload),
    Scan(Vec<ScanPayload>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DTablePayload {
    pub n: u64,
    pub entries: Vec<DTableRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DTableRow {
    pub i: u64,
    pub d: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TorsionPayload {
    pub values: Vec<i64>,
    pub genus: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form_matches: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObstructionPayload {
    pub n: u64,
    pub delta: u64,
    pub squarefree: bool,
    pub max4d: String,
    pub threshold: String,
    pub inequality_holds: bool,
    pub conclusive: bool,
}

impl From<&ObstructionReport> for ObstructionPayload {
    fn from(r: &ObstructionReport) -> Self {
        ObstructionPayload {
            n: r.n,
            delta: r.delta,
            squarefree: r.squarefree,
            max4d: r.max4d.to_string(),
            threshold: r.threshold.to_string(),
            inequality_holds: r.inequality_holds,
            conclusive: r.conclusive,
        }
    }
}

/// Half-open window `[lower, upper)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanWindow {
    pub lower: u64,
    pub upper_exclusive: u64,
}

/// Closed certified interval `[lower, upper]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CertifiedInterval {
    pub lower: u64,
    pub upper_inclusive: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanPayload {
    pub m: u64,
    pub lspace_min: u64,
    pub scan_window: ScanWindow,
    pub lemma_window: ScanWindow,
    pub per_slope: Vec<ObstructionPayload>,
    pub certified_s: Option<u64>,
    pub certified_interval: Option<CertifiedInterval>,
}

impl ScanPayload {
    pub fn new(scan: &ScanResult, lemma: &LemmaWindow) -> Self {
        let slopes = lemma.slopes();
        ScanPayload {
            m: scan.m,
            lspace_min: scan.lspace_min,
            scan_window: ScanWindow {
                lower: scan.lspace_min,
                upper_exclusive: scan.scan_upper,
            },
            lemma_window: ScanWindow {
                lower: slopes.lower(),
                upper_exclusive: slopes.upper(),
            },
            per_slope: scan
                .per_slope
                .iter()
                .map(ObstructionPayload::from)
                .collect(),
            certified_s: scan.certified_s,
            certified_interval: scan.certified_interval().map(|(lower, upper_inclusive)| {
                CertifiedInterval {
                    lower,
                    upper_inclusive,
                }
            }),
        }
    }

    fn unresolved_window(&self) -> Option<(u64, u64)> {
        let lower = match self.certified_s {
            Some(s) => s + 1,
            None => self.lspace_min,
        };
        (lower < self.scan_window.upper_exclusive)
            .then_some((lower, self.scan_window.upper_exclusive))
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn holds_fails(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

impl ReportDocument {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Table => self.render_table(),
            Format::Csv => self.render_csv(),
        }
    }

    fn render_table(&self) -> String {
        let mut out = String::new();
        match &self.payload {
            Payload::DTable(p) => {
                out.push_str(&format!("d-invariant table for slope n = {}\n", p.n));
                out.push_str("i | d\n");
                for row in &p.entries {
                    out.push_str(&format!("{} | {}\n", row.i, row.d));
                }
            }
            Payload::Torsion(p) => {
                let joined: Vec<String> = p.values.iter().map(|t| t.to_string()).collect();
                out.push_str(&format!("torsion: {}\n", joined.join(",")));
                out.push_str(&format!("genus: {}\n", p.genus));
                if let Some(agrees) = p.closed_form_matches {
                    out.push_str(&format!("closed form agrees: {}\n", yes_no(agrees)));
                }
            }
            Payload::Obstruction(p) => {
                out.push_str(&render_obstruction_chain(p, self.inputs.m.as_deref()));
            }
            Payload::Scan(scans) => {
                for p in scans {
                    out.push_str(&render_scan_block(p));
                }
            }
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        match &self.payload {
            Payload::DTable(p) => {
                out.push_str("i,d\n");
                for row in &p.entries {
                    out.push_str(&format!("{},{}\n", row.i, row.d));
                }
            }
            Payload::Torsion(p) => {
                out.push_str("i,t\n");
                for (i, t) in p.values.iter().enumerate() {
                    out.push_str(&format!("{},{}\n", i, t));
                }
            }
            Payload::Obstruction(p) => {
                out.push_str("n,delta,squarefree,max4d,threshold,inequality_holds,conclusive\n");
                out.push_str(&obstruction_csv_row(p));
                out.push('\n');
            }
            Payload::Scan(scans) => {
                out.push_str(
                    "m,n,delta,squarefree,max4d,threshold,inequality_holds,conclusive,\
                     certified_s,certified_lower,certified_upper\n",
                );
                for scan in scans {
                    let certified = match (scan.certified_s, scan.certified_interval) {
                        (Some(s), Some(iv)) => {
                            format!("{},{},{}", s, iv.lower, iv.upper_inclusive)
                        }
                        _ => ",,".to_string(),
                    };
                    for p in &scan.per_slope {
                        out.push_str(&format!(
                            "{},{},{}\n",
                            scan.m,
                            obstruction_csv_row(p),
                            certified
                        ));
                    }
                }
            }
        }
        out
    }
}

fn obstruction_csv_row(p: &ObstructionPayload) -> String {
    format!(
        "{},{},{},{},{},{},{}",
        p.n, p.delta, p.squarefree, p.max4d, p.threshold, p.inequality_holds, p.conclusive
    )
}

/// The reasoning chain: L-space bound, negative definite fillings, inequality
/// test, verdict.
fn render_obstruction_chain(p: &ObstructionPayload, m_input: Option<&str>) -> String {
    let mut out = String::new();
    let lspace_min = m_input
        .and_then(|m| m.parse::<u64>().ok())
        .map(|m| 2 * m + 3);
    out.push_str(&format!(
        "slope: n = {}, delta = |H_1| = {}\n",
        p.n, p.delta
    ));
    if let Some(min) = lspace_min {
        if p.n >= min {
            out.push_str(&format!(
                "L-space: r-surgery is an L-space for every r >= {min}, \
                 so all symplectic fillings are negative definite\n"
            ));
        } else {
            out.push_str(&format!(
                "L-space: not guaranteed at n = {} < {min}; a conclusive verdict still rules \
                 out negative definite bounding, but not fillability\n",
                p.n
            ));
        }
    }
    out.push_str(&format!("squarefree delta: {}\n", yes_no(p.squarefree)));
    out.push_str(&format!("max 4d: {}\n", p.max4d));
    let parity = if p.delta % 2 == 1 {
        "odd: 1 - 1/delta"
    } else {
        "even: 1"
    };
    out.push_str(&format!("threshold: {} (delta {})\n", p.threshold, parity));
    out.push_str(&format!(
        "inequality max 4d >= threshold: {}\n",
        holds_fails(p.inequality_holds)
    ));
    if p.conclusive {
        out.push_str("verdict: conclusive: cannot bound negative definite 4-manifold");
        if let Some(min) = lspace_min {
            if p.n >= min {
                out.push_str(&format!(
                    "; no fillable contact structure for any rational r in [{}, {}]",
                    min, p.n
                ));
            }
        }
        out.push('\n');
    } else {
        let reason = match (p.squarefree, p.inequality_holds) {
            (false, true) => "delta is not squarefree and the inequality holds",
            (false, false) => "delta is not squarefree",
            _ => "the inequality holds",
        };
        out.push_str(&format!(
            "verdict: inconclusive: {reason}; obstruction does not apply\n"
        ));
    }
    out
}

fn render_scan_block(p: &ScanPayload) -> String {
    let mut out = String::new();
    let headline = match p.certified_interval {
        Some(iv) => format!(
            "m={}: non-fillable for all r in [{},{}]",
            p.m, iv.lower, iv.upper_inclusive
        ),
        None => format!(
            "m={}: no conclusive slope in [{},{})",
            p.m, p.scan_window.lower, p.scan_window.upper_exclusive
        ),
    };
    let unresolved = match p.unresolved_window() {
        Some((lo, hi)) => format!("[{},{})", lo, hi),
        None => "none".to_string(),
    };
    out.push_str(&format!(
        "{}; lemma window [{},{}); unresolved {}\n",
        headline, p.lemma_window.lower, p.lemma_window.upper_exclusive, unresolved
    ));
    if !p.per_slope.is_empty() {
        out.push_str("  n | squarefree | max 4d | threshold | inequality | conclusive\n");
        for r in &p.per_slope {
            out.push_str(&format!(
                "  {} | {} | {} | {} | {} | {}\n",
                r.n,
                yes_no(r.squarefree),
                r.max4d,
                r.threshold,
                holds_fails(r.inequality_holds),
                yes_no(r.conclusive)
            ));
        }
    }
    out
}
