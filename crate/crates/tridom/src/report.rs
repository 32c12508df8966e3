//! Report structure produced by corpus verification, and its CSV and JSON
//! renderings.
//!
//! Rows store only the parameter triple and certificates; the nine bound
//! verdicts are cheap pure functions of the triple and are recomputed when
//! a report is written out. Everything is ordered by input sequence
//! number, and none of the content depends on worker count or wall-clock
//! time, so equal corpora and options produce byte-identical output.

use std::io::{self, Write};

use serde::Serialize;

use crate::bounds::{self, B8ProvedCase, BoundId, BoundVerdict, Gamma2Identity};
use crate::graph::VertexSet;
use crate::solve::ParameterTriple;

#[derive(Debug, Clone, Serialize)]
pub struct Meta {
    /// Description of the corpus source, e.g. `enumerate:<=6` or a path.
    pub source: String,
    /// Per-graph time budget in milliseconds; absent means unlimited.
    pub budget_ms: Option<u64>,
    /// Most tight witnesses kept per bound.
    pub tight_witness_cap: usize,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    /// Graphs read from the source: verified + skipped + unsolved.
    pub parsed: u64,
    pub verified: u64,
    pub skipped_disconnected: u64,
    pub skipped_isolated: u64,
    pub unsolved: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SkipReason {
    Disconnected,
    IsolatedVertex,
}

impl SkipReason {
    pub fn as_str(self) -> &'static str {
        match self {
            SkipReason::Disconnected => "disconnected",
            SkipReason::IsolatedVertex => "isolated vertex",
        }
    }
}

/// Values and certificates of one solved graph. Harness rows always have
/// all three parameters: the gates that would make one undefined skip the
/// graph instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolvedRow {
    pub gamma: u16,
    pub gamma_t: u16,
    pub gamma_c: u16,
    pub gamma_certificate: VertexSet,
    pub gamma_t_certificate: VertexSet,
    pub gamma_c_certificate: VertexSet,
}

impl SolvedRow {
    pub fn from_triple(t: &ParameterTriple) -> SolvedRow {
        SolvedRow {
            gamma: t.gamma as u16,
            gamma_t: t.gamma_t.expect("harness rows have gamma_t") as u16,
            gamma_c: t.gamma_c.expect("harness rows have gamma_c") as u16,
            gamma_certificate: t.gamma_certificate,
            gamma_t_certificate: t.gamma_t_certificate.unwrap(),
            gamma_c_certificate: t.gamma_c_certificate.unwrap(),
        }
    }

    pub fn triple(&self) -> ParameterTriple {
        ParameterTriple {
            gamma: self.gamma as usize,
            gamma_t: Some(self.gamma_t as usize),
            gamma_c: Some(self.gamma_c as usize),
            gamma_certificate: self.gamma_certificate,
            gamma_t_certificate: Some(self.gamma_t_certificate),
            gamma_c_certificate: Some(self.gamma_c_certificate),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowOutcome {
    Solved(SolvedRow),
    /// Time budget ran out; excluded from all aggregates.
    Unsolved,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportRow {
    pub seq: u64,
    pub graph6: String,
    pub n: u16,
    pub m: u16,
    pub outcome: RowOutcome,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct BoundCounts {
    pub holds: u64,
    pub tight: u64,
    pub violated: u64,
    pub not_applicable: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundAggregate {
    pub bound: BoundId,
    #[serde(flatten)]
    pub counts: BoundCounts,
}

#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct Gamma2IdentityCounts {
    pub confirmed: u64,
    pub refuted: u64,
    pub not_applicable: u64,
}

#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct B8CaseCounts {
    pub equal: u64,
    pub one_below: u64,
    pub neither: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TripleValues {
    pub gamma: u16,
    pub gamma_t: u16,
    pub gamma_c: u16,
}

/// A graph where a bound held with equality.
#[derive(Debug, Clone, Serialize)]
pub struct TightWitness {
    pub graph6: String,
    #[serde(flatten)]
    pub values: TripleValues,
}

#[derive(Debug, Clone, Serialize)]
pub struct TightList {
    pub bound: BoundId,
    pub count: u64,
    /// First witnesses in corpus order, up to the configured cap.
    pub witnesses: Vec<TightWitness>,
}

/// A B8 violation that survived independent recomputation. The solver and
/// oracle triples are both recorded and always equal; a mismatch would
/// have aborted the run as a solver bug instead.
#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub seq: u64,
    pub graph6: String,
    pub solver: TripleValues,
    pub oracle: TripleValues,
}

#[derive(Debug, Clone, Serialize)]
pub struct SkippedNote {
    pub seq: u64,
    pub graph6: String,
    pub reason: SkipReason,
}

#[derive(Debug, Clone, Serialize)]
pub struct Aggregates {
    pub bounds: Vec<BoundAggregate>,
    pub gamma2_identity: Gamma2IdentityCounts,
    pub b8_cases: B8CaseCounts,
    pub counterexamples: Vec<Counterexample>,
    pub tight: Vec<TightList>,
    /// First few skipped graphs; the totals carry exact counts.
    pub skipped_sample: Vec<SkippedNote>,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub meta: Meta,
    pub totals: Totals,
    pub rows: Vec<ReportRow>,
    pub aggregates: Aggregates,
}

impl VerificationReport {
    /// 0 when the catalog held everywhere, 2 when a confirmed B8
    /// counterexample is on record. (Theorem violations never reach a
    /// report; they abort the run.)
    pub fn exit_code(&self) -> u8 {
        if self.aggregates.counterexamples.is_empty() {
            0
        } else {
            2
        }
    }
}

pub const CSV_HEADER: &str = "graph6,n,m,gamma,gamma_t,gamma_c,B1,B2,B3,B4,B5,B6,B7,B8,B9,slack_B8";

/// One row per processed graph in input order, `CSV_HEADER` columns.
/// graph6 never contains commas or quotes, so no escaping is involved.
pub fn write_csv<W: Write>(report: &VerificationReport, out: &mut W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in &report.rows {
        match &row.outcome {
            RowOutcome::Solved(solved) => {
                let triple = solved.triple();
                let verdicts = bounds::evaluate_all(&triple);
                write!(
                    out,
                    "{},{},{},{},{},{}",
                    row.graph6, row.n, row.m, solved.gamma, solved.gamma_t, solved.gamma_c
                )?;
                for v in &verdicts {
                    write!(out, ",{}", v.status.as_str())?;
                }
                let slack_b8 = verdicts[7].slack.expect("B8 applies to every solved row");
                writeln!(out, ",{slack_b8}")?;
            }
            RowOutcome::Unsolved => {
                write!(out, "{},{},{},,,", row.graph6, row.n, row.m)?;
                for _ in 0..9 {
                    write!(out, ",unsolved")?;
                }
                writeln!(out, ",")?;
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct RowJson<'a> {
    seq: u64,
    graph6: &'a str,
    n: u16,
    m: u16,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma: Option<u16>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma_t: Option<u16>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma_c: Option<u16>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificates: Option<CertificatesJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bounds: Option<[BoundVerdict; 9]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma2_identity: Option<Gamma2Identity>,
    #[serde(skip_serializing_if = "Option::is_none")]
    b8_proved_case: Option<B8ProvedCase>,
}

#[derive(Serialize)]
struct CertificatesJson {
    gamma: VertexSet,
    gamma_t: VertexSet,
    gamma_c: VertexSet,
}

struct RowsJson<'a>(&'a [ReportRow]);

impl Serialize for RowsJson<'_> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter().map(|row| match &row.outcome {
            RowOutcome::Solved(solved) => {
                let triple = solved.triple();
                RowJson {
                    seq: row.seq,
                    graph6: &row.graph6,
                    n: row.n,
                    m: row.m,
                    status: "solved",
                    gamma: Some(solved.gamma),
                    gamma_t: Some(solved.gamma_t),
                    gamma_c: Some(solved.gamma_c),
                    certificates: Some(CertificatesJson {
                        gamma: solved.gamma_certificate,
                        gamma_t: solved.gamma_t_certificate,
                        gamma_c: solved.gamma_c_certificate,
                    }),
                    bounds: Some(bounds::evaluate_all(&triple)),
                    gamma2_identity: Some(bounds::check_gamma2_identity(&triple)),
                    b8_proved_case: Some(bounds::classify_b8_proved_case(&triple)),
                }
            }
            RowOutcome::Unsolved => RowJson {
                seq: row.seq,
                graph6: &row.graph6,
                n: row.n,
                m: row.m,
                status: "unsolved",
                gamma: None,
                gamma_t: None,
                gamma_c: None,
                certificates: None,
                bounds: None,
                gamma2_identity: None,
                b8_proved_case: None,
            },
        }))
    }
}

#[derive(Serialize)]
struct ReportJson<'a> {
    meta: &'a Meta,
    totals: &'a Totals,
    aggregates: &'a Aggregates,
    rows: RowsJson<'a>,
}

/// The full report, certificates and per-row verdicts included.
pub fn write_json<W: Write>(report: &VerificationReport, out: &mut W) -> io::Result<()> {
    let view = ReportJson {
        meta: &report.meta,
        totals: &report.totals,
        aggregates: &report.aggregates,
        rows: RowsJson(&report.rows),
    };
    serde_json::to_writer_pretty(&mut *out, &view)?;
    writeln!(out)
}

/// Human-oriented run summary for stderr; not part of the report formats.
pub fn summary_lines(report: &VerificationReport) -> Vec<String> {
    let t = &report.totals;
    let mut lines = vec![
        format!("source: {}", report.meta.source),
        format!(
            "parsed {} graphs: {} verified, {} skipped ({} disconnected, {} with isolated vertices), {} unsolved",
            t.parsed,
            t.verified,
            t.skipped_disconnected + t.skipped_isolated,
            t.skipped_disconnected,
            t.skipped_isolated,
            t.unsolved
        ),
    ];
    if t.unsolved > 0 {
        lines.push(format!(
            "warning: {} graphs gave up at the {} ms budget and are excluded from aggregates",
            t.unsolved,
            report
                .meta
                .budget_ms
                .map(|ms| ms.to_string())
                .unwrap_or_default()
        ));
    }
    for agg in &report.aggregates.bounds {
        lines.push(format!(
            "{}: {} holds, {} tight, {} violated, {} n/a",
            agg.bound,
            agg.counts.holds,
            agg.counts.tight,
            agg.counts.violated,
            agg.counts.not_applicable
        ));
    }
    let a = &report.aggregates;
    lines.push(format!(
        "gamma=2 identity: {} confirmed, {} refuted; gamma_t vs gamma_c: {} equal, {} one_below, {} neither",
        a.gamma2_identity.confirmed,
        a.gamma2_identity.refuted,
        a.b8_cases.equal,
        a.b8_cases.one_below,
        a.b8_cases.neither
    ));
    if a.counterexamples.is_empty() {
        lines.push("no B8 counterexamples".to_string());
    } else {
        lines.push(format!("B8 COUNTEREXAMPLES: {}", a.counterexamples.len()));
        for c in &a.counterexamples {
            lines.push(format!(
                "  {} gamma={} gamma_t={} gamma_c={} (oracle agrees)",
                c.graph6, c.solver.gamma, c.solver.gamma_t, c.solver.gamma_c
            ));
        }
    }
    lines
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph6::encode_graph6;
    use crate::verify::{verify_corpus, CorpusSource, VerifyOptions};

    fn h_report() -> VerificationReport {
        let source = CorpusSource::Graph6Lines(vec![encode_graph6(&families::graph_h()).unwrap()]);
        verify_corpus(source, &VerifyOptions::default()).unwrap()
    }

    #[test]
    fn json_round_trips_through_serde() {
        let report = h_report();
        let mut out = Vec::new();
        write_json(&report, &mut out).unwrap();
        let value: serde_json::Value = serde_json::from_slice(&out).unwrap();

        assert_eq!(value["meta"]["source"], "lines:1");
        assert_eq!(value["meta"]["budget_ms"], 10_000);
        assert_eq!(value["totals"]["parsed"], 1);
        assert_eq!(value["totals"]["verified"], 1);

        let row = &value["rows"][0];
        assert_eq!(row["status"], "solved");
        assert_eq!(row["gamma"], 5);
        assert_eq!(row["gamma_t"], 10);
        assert_eq!(row["gamma_c"], 10);
        assert_eq!(row["bounds"].as_array().unwrap().len(), 9);
        assert_eq!(row["bounds"][3]["status"], "tight");
        assert!(row["certificates"]["gamma"].is_array());
        assert_eq!(row["gamma2_identity"], "not_applicable");

        let aggregates = &value["aggregates"];
        assert_eq!(aggregates["bounds"].as_array().unwrap().len(), 9);
        assert_eq!(aggregates["counterexamples"].as_array().unwrap().len(), 0);
        assert_eq!(aggregates["tight"][3]["count"], 1);
        assert_eq!(aggregates["tight"][3]["witnesses"][0]["gamma"], 5);
    }

    #[test]
    fn summary_mentions_counts_and_counterexample_absence() {
        let report = h_report();
        let lines = summary_lines(&report);
        assert!(lines.iter().any(|l| l.contains("1 verified")));
        assert!(lines.iter().any(|l| l == "no B8 counterexamples"));
    }
}
