//! Corpus verification: solve every graph in a source, evaluate the bound
//! catalog, and fold the results into a [`VerificationReport`].
//!
//! Graphs are solved in parallel batches but folded strictly in input
//! order, so the report is a pure function of the corpus and options and
//! never of the worker count.
//!
//! A violated bound means different things depending on which bound it
//! is. B1 through B7 and B9 are proved, so a violation can only be a
//! solver defect and aborts the run. B8 is a conjecture: a violation is
//! recomputed from scratch by the subset-enumeration oracle, and only if
//! both routes agree on the triple is it recorded as a counterexample.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Cursor};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::bounds::{self, B8ProvedCase, BoundId, BoundStatus, BoundVerdict, Gamma2Identity};
use crate::enumerate::{enumerate_connected_graphs, EnumerateError, MAX_ENUMERATE_N};
use crate::graph::Graph;
use crate::graph6::{encode_graph6, read_graph6_lines, ReadError};
use crate::oracle::oracle_triple;
use crate::report::{
    Aggregates, B8CaseCounts, BoundAggregate, BoundCounts, Counterexample, Gamma2IdentityCounts,
    Meta, ReportRow, RowOutcome, SkipReason, SkippedNote, SolvedRow, TightList, TightWitness,
    Totals, TripleValues, VerificationReport,
};
use crate::solve::{parameter_triple_with_deadline, ParameterTriple, SolveError};

/// Graphs solved per parallel batch. Small enough to keep memory flat,
/// large enough that rayon's scheduling cost disappears.
const BATCH_SIZE: usize = 8192;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Read(#[from] ReadError),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    /// A proved bound was violated, the gamma=2 identity failed, or the
    /// oracle disagreed with the solver. All of these mean a bug in this
    /// crate, never a property of the graph.
    #[error("solver inconsistency at graph {seq} ({graph6}): {detail}")]
    SolverInconsistency {
        seq: u64,
        graph6: String,
        detail: String,
    },
}

/// Where the graphs come from. Every source yields graph6 text along
/// with the parsed graph; enumerated graphs are encoded on the fly so
/// that report rows always carry a reparsable name.
#[derive(Debug, Clone)]
pub enum CorpusSource {
    /// A file of graph6 lines, or stdin when the path is `-`.
    Graph6File(PathBuf),
    /// In-memory graph6 lines.
    Graph6Lines(Vec<String>),
    /// All connected graphs on 1..=max_n vertices, in ascending order of
    /// vertex count and then of edge-set encoding. With `dedupe`, one
    /// representative per isomorphism class.
    Enumerate { max_n: usize, dedupe: bool },
    /// The concatenation of several sources; sequence numbers run on.
    Chain(Vec<CorpusSource>),
}

type CorpusItem = Result<(String, Graph), ReadError>;

impl CorpusSource {
    pub fn describe(&self) -> String {
        match self {
            CorpusSource::Graph6File(path) if path.as_os_str() == "-" => "stdin".to_string(),
            CorpusSource::Graph6File(path) => format!("file:{}", path.display()),
            CorpusSource::Graph6Lines(lines) => format!("lines:{}", lines.len()),
            CorpusSource::Enumerate {
                max_n,
                dedupe: false,
            } => format!("enumerate:<={max_n}"),
            CorpusSource::Enumerate {
                max_n,
                dedupe: true,
            } => {
                format!("enumerate:<={max_n},dedupe")
            }
            CorpusSource::Chain(parts) => {
                let labels: Vec<String> = parts.iter().map(CorpusSource::describe).collect();
                labels.join(" + ")
            }
        }
    }

    /// Opens the source. Configuration problems (missing file, bad
    /// enumeration range) surface here; malformed lines surface as items.
    fn items(self) -> Result<Box<dyn Iterator<Item = CorpusItem>>, VerifyError> {
        match self {
            CorpusSource::Graph6File(path) => {
                let label;
                let reader: Box<dyn BufRead> = if path.as_os_str() == "-" {
                    label = "<stdin>".to_string();
                    Box::new(io::stdin().lock())
                } else {
                    label = path.display().to_string();
                    let file = File::open(&path).map_err(|source| ReadError::Io {
                        path: label.clone(),
                        source,
                    })?;
                    Box::new(BufReader::new(file))
                };
                Ok(Box::new(
                    read_graph6_lines(reader, &label)
                        .map(|item| item.map(|(_, text, g)| (text, g))),
                ))
            }
            CorpusSource::Graph6Lines(lines) => {
                let joined = lines.join("\n");
                Ok(Box::new(
                    read_graph6_lines(Cursor::new(joined), "<memory>")
                        .map(|item| item.map(|(_, text, g)| (text, g))),
                ))
            }
            CorpusSource::Enumerate { max_n, dedupe } => {
                if max_n == 0 || max_n > MAX_ENUMERATE_N {
                    return Err(EnumerateError(max_n).into());
                }
                let mut per_n = Vec::with_capacity(max_n);
                for n in 1..=max_n {
                    per_n.push(enumerate_connected_graphs(n, dedupe)?);
                }
                Ok(Box::new(per_n.into_iter().flatten().map(|g| {
                    let text = encode_graph6(&g).expect("enumerated graphs fit in graph6");
                    Ok((text, g))
                })))
            }
            CorpusSource::Chain(parts) => {
                let mut opened = Vec::with_capacity(parts.len());
                for part in parts {
                    opened.push(part.items()?);
                }
                Ok(Box::new(opened.into_iter().flatten()))
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Worker threads for the solving phase; `None` uses rayon's default.
    pub workers: Option<usize>,
    /// Per-graph time budget; `None` waits forever.
    pub budget: Option<Duration>,
    /// Most tight witnesses recorded per bound.
    pub tight_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions {
            workers: None,
            budget: Some(Duration::from_secs(10)),
            tight_cap: 5,
        }
    }
}

/// Per-graph result out of the parallel phase, folded serially. Nearly
/// every result is `Solved`, so boxing its payload to shrink the enum
/// would cost an allocation per graph for nothing.
#[allow(clippy::large_enum_variant)]
enum Processed {
    Skipped {
        seq: u64,
        graph6: String,
        reason: SkipReason,
    },
    Unsolved {
        seq: u64,
        graph6: String,
        n: u16,
        m: u16,
    },
    Solved {
        seq: u64,
        graph6: String,
        n: u16,
        m: u16,
        triple: ParameterTriple,
        verdicts: [BoundVerdict; 9],
        identity: Gamma2Identity,
        case: B8ProvedCase,
        /// Independent recomputation, present only when B8 was violated.
        oracle: Option<ParameterTriple>,
    },
}

fn process_one(seq: u64, graph6: &str, g: &Graph, budget: Option<Duration>) -> Processed {
    if !g.is_connected() {
        return Processed::Skipped {
            seq,
            graph6: graph6.to_string(),
            reason: SkipReason::Disconnected,
        };
    }
    if g.isolated_vertex().is_some() {
        return Processed::Skipped {
            seq,
            graph6: graph6.to_string(),
            reason: SkipReason::IsolatedVertex,
        };
    }
    let deadline = budget.map(|b| Instant::now() + b);
    let triple = match parameter_triple_with_deadline(g, deadline) {
        Ok(triple) => triple,
        Err(SolveError::Timeout) => {
            return Processed::Unsolved {
                seq,
                graph6: graph6.to_string(),
                n: g.n() as u16,
                m: g.edge_count() as u16,
            }
        }
        Err(other) => unreachable!("connected isolated-free graph reported {other}"),
    };
    let verdicts = bounds::evaluate_all(&triple);
    let oracle = if verdicts[BoundId::B8 as usize].status == BoundStatus::Violated {
        Some(oracle_triple(g))
    } else {
        None
    };
    let identity = bounds::check_gamma2_identity(&triple);
    let case = bounds::classify_b8_proved_case(&triple);
    Processed::Solved {
        seq,
        graph6: graph6.to_string(),
        n: g.n() as u16,
        m: g.edge_count() as u16,
        triple,
        verdicts,
        identity,
        case,
        oracle,
    }
}

struct FoldState {
    tight_cap: usize,
    totals: Totals,
    rows: Vec<ReportRow>,
    bound_counts: [BoundCounts; 9],
    gamma2_identity: Gamma2IdentityCounts,
    b8_cases: B8CaseCounts,
    counterexamples: Vec<Counterexample>,
    tight_counts: [u64; 9],
    tight_witnesses: Vec<Vec<TightWitness>>,
    skipped_sample: Vec<SkippedNote>,
}

const SKIPPED_SAMPLE_CAP: usize = 20;

impl FoldState {
    fn new(tight_cap: usize) -> FoldState {
        FoldState {
            tight_cap,
            totals: Totals::default(),
            rows: Vec::new(),
            bound_counts: [BoundCounts::default(); 9],
            gamma2_identity: Gamma2IdentityCounts::default(),
            b8_cases: B8CaseCounts::default(),
            counterexamples: Vec::new(),
            tight_counts: [0; 9],
            tight_witnesses: vec![Vec::new(); 9],
            skipped_sample: Vec::new(),
        }
    }

    fn fold(&mut self, p: Processed) -> Result<(), VerifyError> {
        self.totals.parsed += 1;
        match p {
            Processed::Skipped {
                seq,
                graph6,
                reason,
            } => {
                match reason {
                    SkipReason::Disconnected => self.totals.skipped_disconnected += 1,
                    SkipReason::IsolatedVertex => self.totals.skipped_isolated += 1,
                }
                if self.skipped_sample.len() < SKIPPED_SAMPLE_CAP {
                    self.skipped_sample.push(SkippedNote {
                        seq,
                        graph6,
                        reason,
                    });
                }
            }
            Processed::Unsolved { seq, graph6, n, m } => {
                self.totals.unsolved += 1;
                self.rows.push(ReportRow {
                    seq,
                    graph6,
                    n,
                    m,
                    outcome: RowOutcome::Unsolved,
                });
            }
            Processed::Solved {
                seq,
                graph6,
                n,
                m,
                triple,
                verdicts,
                identity,
                case,
                oracle,
            } => {
                self.fold_solved(seq, graph6, n, m, triple, verdicts, identity, case, oracle)?;
            }
        }
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn fold_solved(
        &mut self,
        seq: u64,
        graph6: String,
        n: u16,
        m: u16,
        triple: ParameterTriple,
        verdicts: [BoundVerdict; 9],
        identity: Gamma2Identity,
        case: B8ProvedCase,
        oracle: Option<ParameterTriple>,
    ) -> Result<(), VerifyError> {
        let inconsistency = |detail: String| VerifyError::SolverInconsistency {
            seq,
            graph6: graph6.clone(),
            detail,
        };
        let values = solved_values(&triple);

        for v in &verdicts {
            if v.status == BoundStatus::Violated && v.bound.violation_is_bug() {
                return Err(inconsistency(format!(
                    "{} ({}) violated: lhs={} rhs={} on gamma={} gamma_t={} gamma_c={}",
                    v.bound,
                    v.bound.formula(),
                    v.lhs.unwrap(),
                    v.rhs.unwrap(),
                    values.gamma,
                    values.gamma_t,
                    values.gamma_c
                )));
            }
        }
        if identity == Gamma2Identity::Refuted {
            return Err(inconsistency(format!(
                "gamma=2 but gamma_t={} differs from gamma_c={}",
                values.gamma_t, values.gamma_c
            )));
        }
        if verdicts[BoundId::B8 as usize].status == BoundStatus::Violated {
            let oracle = oracle.expect("B8 violations carry an oracle recomputation");
            if oracle.values() != triple.values() {
                return Err(inconsistency(format!(
                    "B8 violated and oracle disagrees: solver ({}, {}, {}), oracle ({}, {:?}, {:?})",
                    values.gamma,
                    values.gamma_t,
                    values.gamma_c,
                    oracle.gamma,
                    oracle.gamma_t,
                    oracle.gamma_c
                )));
            }
            if values.gamma == 2 || case != B8ProvedCase::Neither {
                return Err(inconsistency(format!(
                    "B8 violated on a graph class where it is proved \
                     (gamma={} gamma_t={} gamma_c={}, classification {:?})",
                    values.gamma, values.gamma_t, values.gamma_c, case
                )));
            }
            self.counterexamples.push(Counterexample {
                seq,
                graph6: graph6.clone(),
                solver: values,
                oracle: solved_values(&oracle),
            });
        }

        self.totals.verified += 1;
        for (i, v) in verdicts.iter().enumerate() {
            let c = &mut self.bound_counts[i];
            match v.status {
                BoundStatus::Holds => c.holds += 1,
                BoundStatus::Tight => c.tight += 1,
                BoundStatus::Violated => c.violated += 1,
                BoundStatus::NotApplicable => c.not_applicable += 1,
            }
            if v.status == BoundStatus::Tight {
                self.tight_counts[i] += 1;
                if self.tight_witnesses[i].len() < self.tight_cap {
                    self.tight_witnesses[i].push(TightWitness {
                        graph6: graph6.clone(),
                        values,
                    });
                }
            }
        }
        match identity {
            Gamma2Identity::Confirmed => self.gamma2_identity.confirmed += 1,
            Gamma2Identity::Refuted => unreachable!("refutations abort above"),
            Gamma2Identity::NotApplicable => self.gamma2_identity.not_applicable += 1,
        }
        match case {
            B8ProvedCase::Equal => self.b8_cases.equal += 1,
            B8ProvedCase::OneBelow => self.b8_cases.one_below += 1,
            B8ProvedCase::Neither => self.b8_cases.neither += 1,
        }
        self.rows.push(ReportRow {
            seq,
            graph6,
            n,
            m,
            outcome: RowOutcome::Solved(SolvedRow::from_triple(&triple)),
        });
        Ok(())
    }

    fn finish(self, source: String, options: &VerifyOptions) -> VerificationReport {
        let totals = self.totals;
        debug_assert_eq!(
            totals.parsed,
            totals.verified
                + totals.skipped_disconnected
                + totals.skipped_isolated
                + totals.unsolved
        );
        let bounds_agg = BoundId::ALL
            .iter()
            .zip(self.bound_counts)
            .map(|(&bound, counts)| BoundAggregate { bound, counts })
            .collect();
        let tight = BoundId::ALL
            .iter()
            .zip(self.tight_counts)
            .zip(self.tight_witnesses)
            .map(|((&bound, count), witnesses)| TightList {
                bound,
                count,
                witnesses,
            })
            .collect();
        VerificationReport {
            meta: Meta {
                source,
                budget_ms: options.budget.map(|b| b.as_millis() as u64),
                tight_witness_cap: options.tight_cap,
            },
            totals,
            rows: self.rows,
            aggregates: Aggregates {
                bounds: bounds_agg,
                gamma2_identity: self.gamma2_identity,
                b8_cases: self.b8_cases,
                counterexamples: self.counterexamples,
                tight,
                skipped_sample: self.skipped_sample,
            },
        }
    }
}

fn solved_values(t: &ParameterTriple) -> TripleValues {
    TripleValues {
        gamma: t.gamma as u16,
        gamma_t: t.gamma_t.expect("solved graphs have gamma_t") as u16,
        gamma_c: t.gamma_c.expect("solved graphs have gamma_c") as u16,
    }
}

fn build_pool(workers: Option<usize>) -> rayon::ThreadPool {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = workers {
        if w > 0 {
            builder = builder.num_threads(w);
        }
    }
    builder.build().expect("worker pool")
}

/// Solves and checks every graph in the source. Returns the report, or
/// the first error in input order: unreadable input, or any result that
/// contradicts a proved statement.
pub fn verify_corpus(
    source: CorpusSource,
    options: &VerifyOptions,
) -> Result<VerificationReport, VerifyError> {
    let label = source.describe();
    let mut items = source.items()?;
    let pool = build_pool(options.workers);
    let mut state = FoldState::new(options.tight_cap);
    let mut seq: u64 = 0;

    loop {
        let mut batch: Vec<(u64, String, Graph)> = Vec::with_capacity(BATCH_SIZE);
        let mut pending_err = None;
        while batch.len() < BATCH_SIZE {
            match items.next() {
                Some(Ok((text, g))) => {
                    seq += 1;
                    batch.push((seq, text, g));
                }
                Some(Err(e)) => {
                    pending_err = Some(e);
                    break;
                }
                None => break,
            }
        }
        let done = batch.len() < BATCH_SIZE;
        let processed: Vec<Processed> = pool.install(|| {
            batch
                .par_iter()
                .map(|(seq, text, g)| process_one(*seq, text, g, options.budget))
                .collect()
        });
        for p in processed {
            state.fold(p)?;
        }
        // Graphs preceding a malformed line are folded first so the
        // inconsistency check still runs on them in order.
        if let Some(e) = pending_err {
            return Err(e.into());
        }
        if done {
            break;
        }
    }
    Ok(state.finish(label, options))
}

/// Scans the source in order for graphs where the bound holds with
/// equality, stopping after `limit` finds. Serial and without a time
/// budget; meant for small corpora.
pub fn find_tight(
    source: CorpusSource,
    bound: BoundId,
    limit: usize,
) -> Result<Vec<TightWitness>, VerifyError> {
    let mut found = Vec::new();
    if limit == 0 {
        return Ok(found);
    }
    for item in source.items()? {
        let (text, g) = item?;
        if !g.is_connected() || g.isolated_vertex().is_some() {
            continue;
        }
        let triple = parameter_triple_with_deadline(&g, None)
            .expect("connected isolated-free graphs solve without a deadline");
        let verdict = bounds::evaluate_bound(bound, &triple);
        if verdict.status == BoundStatus::Tight {
            found.push(TightWitness {
                graph6: text,
                values: solved_values(&triple),
            });
            if found.len() == limit {
                break;
            }
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph6::parse_graph6;
    use crate::report::write_csv;

    fn lines_source(graphs: &[&Graph]) -> CorpusSource {
        CorpusSource::Graph6Lines(graphs.iter().map(|g| encode_graph6(g).unwrap()).collect())
    }

    #[test]
    fn single_graph_report() {
        let h = families::graph_h();
        let report = verify_corpus(lines_source(&[&h]), &VerifyOptions::default()).unwrap();
        assert_eq!(report.totals.parsed, 1);
        assert_eq!(report.totals.verified, 1);
        assert_eq!(report.rows.len(), 1);
        let row = &report.rows[0];
        assert_eq!(row.n, 15);
        assert_eq!(row.m, 14);
        match &row.outcome {
            RowOutcome::Solved(s) => {
                assert_eq!((s.gamma, s.gamma_t, s.gamma_c), (5, 10, 10));
            }
            other => panic!("expected solved row, got {other:?}"),
        }
        // B4 is tight at this triple: 2*10 = 2*5 + 10.
        let b4 = &report.aggregates.bounds[BoundId::B4 as usize];
        assert_eq!(b4.counts.tight, 1);
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn skips_are_counted_not_solved() {
        // Two triangles (disconnected), K_1 (isolated), C_4 (verified).
        let two_triangles =
            Graph::from_edge_list(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let k1 = families::complete(1).unwrap();
        let c4 = families::cycle(4).unwrap();
        let source = lines_source(&[&two_triangles, &k1, &c4]);
        let report = verify_corpus(source, &VerifyOptions::default()).unwrap();
        assert_eq!(report.totals.parsed, 3);
        assert_eq!(report.totals.verified, 1);
        assert_eq!(report.totals.skipped_disconnected, 1);
        assert_eq!(report.totals.skipped_isolated, 1);
        assert_eq!(report.rows.len(), 1);
        assert_eq!(report.aggregates.skipped_sample.len(), 2);
        assert_eq!(report.aggregates.skipped_sample[0].seq, 1);
        assert_eq!(
            report.aggregates.skipped_sample[0].reason,
            SkipReason::Disconnected
        );
        assert_eq!(
            report.aggregates.skipped_sample[1].reason,
            SkipReason::IsolatedVertex
        );
        // The verified row is C_4 with sequence number 3.
        assert_eq!(report.rows[0].seq, 3);
    }

    #[test]
    fn csv_shape_and_order() {
        let k2 = families::complete(2).unwrap();
        let c6 = families::cycle(6).unwrap();
        let report = verify_corpus(lines_source(&[&k2, &c6]), &VerifyOptions::default()).unwrap();
        let mut out = Vec::new();
        write_csv(&report, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(
            lines[0],
            "graph6,n,m,gamma,gamma_t,gamma_c,B1,B2,B3,B4,B5,B6,B7,B8,B9,slack_B8"
        );
        assert!(lines[1].starts_with("A_,2,1,1,2,1,"));
        // C_6 has triple (2, 4, 4); B8 reads 4 >= ceil(14/6) = 3.
        assert!(lines[2].contains(",2,4,4,"));
        assert!(lines[2].ends_with(",1"));
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let source = CorpusSource::Enumerate {
            max_n: 5,
            dedupe: false,
        };
        let mut csvs = Vec::new();
        for workers in [1, 3] {
            let options = VerifyOptions {
                workers: Some(workers),
                ..VerifyOptions::default()
            };
            let report = verify_corpus(source.clone(), &options).unwrap();
            let mut out = Vec::new();
            write_csv(&report, &mut out).unwrap();
            csvs.push(out);
        }
        assert_eq!(csvs[0], csvs[1]);
    }

    #[test]
    fn enumerate_source_counts() {
        let source = CorpusSource::Enumerate {
            max_n: 5,
            dedupe: false,
        };
        let report = verify_corpus(source, &VerifyOptions::default()).unwrap();
        // Labeled connected graph counts for n = 1..=5; K_1 is parsed but
        // skipped because its lone vertex is isolated.
        assert_eq!(report.totals.parsed, 1 + 1 + 4 + 38 + 728);
        assert_eq!(report.totals.skipped_isolated, 1);
        assert_eq!(report.totals.verified, report.totals.parsed - 1);
        assert_eq!(report.exit_code(), 0);
        for agg in &report.aggregates.bounds {
            assert_eq!(agg.counts.violated, 0, "{} violated", agg.bound);
        }
        assert_eq!(report.aggregates.gamma2_identity.refuted, 0);
        assert!(report.aggregates.counterexamples.is_empty());
    }

    #[test]
    fn chain_continues_sequence_numbers() {
        let k2 = families::complete(2).unwrap();
        let source = CorpusSource::Chain(vec![
            CorpusSource::Enumerate {
                max_n: 3,
                dedupe: true,
            },
            lines_source(&[&k2]),
        ]);
        let report = verify_corpus(source, &VerifyOptions::default()).unwrap();
        // Classes on <=3 vertices: K_1, K_2, P_3, K_3; then K_2 again.
        assert_eq!(report.totals.parsed, 5);
        assert_eq!(report.rows.last().unwrap().seq, 5);
        assert_eq!(report.rows.last().unwrap().graph6, "A_");
    }

    #[test]
    fn unparsable_line_aborts_with_position() {
        let source = CorpusSource::Graph6Lines(vec!["A_".to_string(), "A".to_string()]);
        let err = verify_corpus(source, &VerifyOptions::default()).unwrap_err();
        match err {
            VerifyError::Read(ReadError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other}"),
        }
    }

    #[test]
    fn missing_file_is_a_read_error() {
        let source = CorpusSource::Graph6File(PathBuf::from("/nonexistent/corpus.g6"));
        match verify_corpus(source, &VerifyOptions::default()) {
            Err(VerifyError::Read(ReadError::Io { .. })) => {}
            other => panic!("expected io error, got {other:?}"),
        }
    }

    #[test]
    fn enumerate_range_is_validated() {
        for max_n in [0, 9] {
            let source = CorpusSource::Enumerate {
                max_n,
                dedupe: false,
            };
            match verify_corpus(source, &VerifyOptions::default()) {
                Err(VerifyError::Enumerate(EnumerateError(n))) => assert_eq!(n, max_n),
                other => panic!("expected range error, got {other:?}"),
            }
        }
    }

    #[test]
    fn zero_budget_marks_rows_unsolved() {
        let c6 = families::cycle(6).unwrap();
        let options = VerifyOptions {
            budget: Some(Duration::ZERO),
            ..VerifyOptions::default()
        };
        let report = verify_corpus(lines_source(&[&c6]), &options).unwrap();
        assert_eq!(report.totals.unsolved, 1);
        assert_eq!(report.totals.verified, 0);
        assert_eq!(report.rows[0].outcome, RowOutcome::Unsolved);
        let mut out = Vec::new();
        write_csv(&report, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        let row = text.lines().nth(1).unwrap();
        let mut expected = format!("{},6,6,,,", encode_graph6(&c6).unwrap());
        for _ in 0..9 {
            expected.push_str(",unsolved");
        }
        expected.push(',');
        assert_eq!(row, expected);
    }

    #[test]
    fn find_tight_b7_witnesses_verify_as_tight() {
        let source = CorpusSource::Enumerate {
            max_n: 4,
            dedupe: true,
        };
        let witnesses = find_tight(source.clone(), BoundId::B7, 100).unwrap();
        assert!(!witnesses.is_empty());
        for w in &witnesses {
            let g = parse_graph6(&w.graph6).unwrap();
            let triple = crate::solve::parameter_triple(&g);
            let v = bounds::evaluate_bound(BoundId::B7, &triple);
            assert_eq!(v.status, BoundStatus::Tight);
        }
        // C_4 has triple (2, 2, 2): 2 = 2*2 - 2 exactly.
        let c4 = families::cycle(4).unwrap();
        let c4_key = crate::enumerate::canonical_key(&c4);
        assert!(witnesses.iter().any(|w| {
            crate::enumerate::canonical_key(&parse_graph6(&w.graph6).unwrap()) == c4_key
        }));
    }

    #[test]
    fn find_tight_respects_limit() {
        let source = CorpusSource::Enumerate {
            max_n: 5,
            dedupe: false,
        };
        assert!(find_tight(source.clone(), BoundId::B6, 0)
            .unwrap()
            .is_empty());
        let two = find_tight(source, BoundId::B6, 2).unwrap();
        assert_eq!(two.len(), 2);
    }
}
