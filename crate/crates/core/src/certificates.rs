//! Corpus files of non-t-perfection certificates and their verification.
//!
//! A corpus file is UTF-8 text with one record per line and tab-separated
//! columns:
//!
//! 1. a graph6 string,
//! 2. the point, as comma-separated rationals `p/q` or `p`, or `-` for none,
//! 3. optionally a label,
//! 4. optionally the graph as a non-redundant adjacency list, checked
//!    against the graph6 column.
//!
//! Blank lines and lines starting with `#` are skipped.

use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

use crate::graph::families::path;
use crate::graph::{chromatic_number_exact, contains_induced, is_4_critical, omega, Graph};
use crate::graph6::{decode_graph6, encode_graph6, parse_adjacency_list};
use crate::polytope::{verify_hstab_vertex, RationalVector};
use crate::recognition::t_perfect_col;

/// The 50 certificates of the first appendix table.
pub const TABLE1: &str = include_str!("../data/table1.tsv");
/// The 27 certificates of the second appendix table.
pub const TABLE2: &str = include_str!("../data/table2.tsv");
/// K4, co-L(prism) and co-L(W5), which complete the list of 80 graphs.
pub const REMAINING: &str = include_str!("../data/remaining.tsv");

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("reading {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: point has {found} coordinates but the graph has {expected} vertices")]
    Dimension { line: usize, expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    /// Where the row came from: a file name, or empty.
    pub source: String,
    /// 1-based line in the source text.
    pub line: usize,
    pub graph6: String,
    pub graph: Graph,
    /// `None` for graphs listed without a point.
    pub point: Option<RationalVector>,
    pub label: Option<String>,
}

pub fn parse_corpus(text: &str) -> Result<Vec<Certificate>, CorpusError> {
    parse_corpus_named(text, "")
}

/// Like [`parse_corpus`], recording `source` in every row.
pub fn parse_corpus_named(text: &str, source: &str) -> Result<Vec<Certificate>, CorpusError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if raw.trim().is_empty() || raw.starts_with('#') {
            continue;
        }
        let err = |message: String| CorpusError::Parse { line, message };
        let cols: Vec<&str> = raw.split('\t').collect();
        if cols.len() < 2 {
            return Err(err("expected at least two tab-separated columns".into()));
        }
        let graph6 = cols[0].trim().to_string();
        let graph = decode_graph6(&graph6).map_err(|e| err(e.to_string()))?;
        let point = match cols[1].trim() {
            "-" => None,
            p => Some(p.parse::<RationalVector>().map_err(|e| err(e.to_string()))?),
        };
        if let Some(p) = &point {
            if p.len() != graph.order() {
                return Err(CorpusError::Dimension { line, expected: graph.order(), found: p.len() });
            }
        }
        let label = cols.get(2).map(|l| l.trim()).filter(|l| !l.is_empty()).map(str::to_string);
        if let Some(adj) = cols.get(3).map(|a| a.trim()).filter(|a| !a.is_empty()) {
            let listed = parse_adjacency_list(adj, Some(graph.order())).map_err(|e| err(e.to_string()))?;
            if listed != graph {
                return Err(err("adjacency list does not match the graph6 string".into()));
            }
        }
        out.push(Certificate { source: source.to_string(), line, graph6, graph, point, label });
    }
    Ok(out)
}

pub fn load_corpus(path: impl AsRef<Path>) -> Result<Vec<Certificate>, CorpusError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| CorpusError::Io { path: path.display().to_string(), source })?;
    parse_corpus_named(&text, &path.display().to_string())
}

/// The 77 certificate rows, in table order.
pub fn builtin_certificates() -> Vec<Certificate> {
    let mut rows = parse_corpus_named(TABLE1, "table1.tsv").expect("built-in table 1 parses");
    rows.extend(parse_corpus_named(TABLE2, "table2.tsv").expect("built-in table 2 parses"));
    rows
}

/// All 80 graphs: the certificate rows followed by K4, co-L(prism) and
/// co-L(W5).
pub fn builtin_corpus() -> Vec<Certificate> {
    let mut rows = builtin_certificates();
    rows.extend(parse_corpus_named(REMAINING, "remaining.tsv").expect("built-in remaining graphs parse"));
    rows
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CorpusOptions {
    /// Check 4-criticality of every graph.
    pub criticality: bool,
    /// Check that no graph has an induced P6.
    pub p6: bool,
}

/// Verification of one corpus row. Fields that were not computed are `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowResult {
    pub source: String,
    pub line: usize,
    pub graph6: String,
    pub label: Option<String>,
    pub n: usize,
    pub m: usize,
    pub k4_free: bool,
    pub point: Option<String>,
    pub member: Option<bool>,
    pub non_integral: Option<bool>,
    pub rank: Option<usize>,
    pub is_vertex: Option<bool>,
    /// K4-free, in HSTAB, non-integral and a vertex.
    pub refutes_t_perfection: Option<bool>,
    /// Only for rows without a point.
    pub t_perfect: Option<bool>,
    /// Only for rows without a point.
    pub chromatic_number: Option<usize>,
    pub four_critical: Option<bool>,
    pub p6_free: Option<bool>,
    pub error: Option<String>,
}

impl RowResult {
    /// A point row must refute t-perfection. A row without a point must be
    /// a t-perfect graph with χ = 4, or contain K4. Requested extra checks
    /// must hold.
    pub fn passes(&self) -> bool {
        let main = match self.refutes_t_perfection {
            Some(r) => r,
            None => self.chromatic_number == Some(4) && (self.t_perfect == Some(true) || !self.k4_free),
        };
        main && self.error.is_none() && self.four_critical != Some(false) && self.p6_free != Some(false)
    }
}

/// Checks a certificate row: K4-freeness and the vertex test when a point
/// is given, otherwise t-perfection and the chromatic number.
pub fn verify_certificate(c: &Certificate) -> RowResult {
    let g = &c.graph;
    let mut row = RowResult {
        source: c.source.clone(),
        line: c.line,
        graph6: c.graph6.clone(),
        label: c.label.clone(),
        n: g.order(),
        m: g.size(),
        k4_free: omega(g) < 4,
        point: c.point.as_ref().map(|p| p.to_string()),
        member: None,
        non_integral: None,
        rank: None,
        is_vertex: None,
        refutes_t_perfection: None,
        t_perfect: None,
        chromatic_number: None,
        four_critical: None,
        p6_free: None,
        error: None,
    };
    match &c.point {
        Some(x) => match verify_hstab_vertex(g, x) {
            Ok(rep) => {
                row.refutes_t_perfection = Some(row.k4_free && rep.member && rep.non_integral && rep.is_vertex);
                row.member = Some(rep.member);
                row.non_integral = Some(rep.non_integral);
                row.rank = Some(rep.rank);
                row.is_vertex = Some(rep.is_vertex);
            }
            Err(e) => row.error = Some(e.to_string()),
        },
        None => {
            row.t_perfect = t_perfect_col(g).t_perfect;
            match chromatic_number_exact(g) {
                Ok((k, _)) => row.chromatic_number = Some(k),
                Err(e) => row.error = Some(e.to_string()),
            }
        }
    }
    row
}

/// Verifies every row and, as requested, 4-criticality and P6-freeness.
pub fn verify_corpus(certs: &[Certificate], opts: CorpusOptions) -> CorpusReport {
    let p6 = path(6);
    let rows = certs
        .iter()
        .map(|c| {
            let mut row = verify_certificate(c);
            if opts.criticality {
                match is_4_critical(&c.graph) {
                    Ok(r) => row.four_critical = Some(r.is_critical),
                    Err(e) => row.error = Some(e.to_string()),
                }
            }
            if opts.p6 {
                row.p6_free = Some(c.graph.order() < 6 || contains_induced(&c.graph, &p6).is_none());
            }
            row
        })
        .collect();
    CorpusReport { rows, options: opts }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusReport {
    pub rows: Vec<RowResult>,
    pub options: CorpusOptions,
}

/// Counts over a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub rows: usize,
    pub certificates: usize,
    pub refuted: usize,
    pub t_perfect: usize,
    pub four_critical: Option<usize>,
    pub p6_free: Option<usize>,
    pub failures: usize,
}

impl CorpusReport {
    pub fn summary(&self) -> Summary {
        let count = |f: &dyn Fn(&RowResult) -> bool| self.rows.iter().filter(|r| f(r)).count();
        Summary {
            rows: self.rows.len(),
            certificates: count(&|r| r.point.is_some()),
            refuted: count(&|r| r.refutes_t_perfection == Some(true)),
            t_perfect: count(&|r| r.t_perfect == Some(true)),
            four_critical: self.options.criticality.then(|| count(&|r| r.four_critical == Some(true))),
            p6_free: self.options.p6.then(|| count(&|r| r.p6_free == Some(true))),
            failures: count(&|r| !r.passes()),
        }
    }

    pub fn failures(&self) -> Vec<&RowResult> {
        self.rows.iter().filter(|r| !r.passes()).collect()
    }

    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(RowResult::passes)
    }

    /// A fixed-width table, one line per row, then a summary line.
    pub fn render_table(&self) -> String {
        let yn = |b: Option<bool>| match b {
            Some(true) => "yes",
            Some(false) => "no",
            None => "-",
        };
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<18} {:<24} {:<12} {:>3} {:>4}  {:<5} {:>4} {:<6} {:<7} {:<9} {:<8} {:<4}",
            "row", "graph6", "label", "n", "m", "K4fr", "rank", "vertex", "refutes", "t-perfect", "critical", "P6fr"
        );
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:<18} {:<24} {:<12} {:>3} {:>4}  {:<5} {:>4} {:<6} {:<7} {:<9} {:<8} {:<4}{}",
                if r.source.is_empty() { r.line.to_string() } else { format!("{}:{}", r.source, r.line) },
                r.graph6,
                r.label.as_deref().unwrap_or(""),
                r.n,
                r.m,
                yn(Some(r.k4_free)),
                r.rank.map_or("-".to_string(), |k| k.to_string()),
                yn(r.is_vertex),
                yn(r.refutes_t_perfection),
                match (r.t_perfect, r.chromatic_number) {
                    (Some(t), Some(k)) => format!("{} chi={k}", yn(Some(t))),
                    _ => "-".to_string(),
                },
                yn(r.four_critical),
                yn(r.p6_free),
                r.error.as_ref().map_or(String::new(), |e| format!("  error: {e}")),
            );
        }
        let s = self.summary();
        let _ = write!(out, "{}/{} certificates refute t-perfection; {} t-perfect", s.refuted, s.certificates, s.t_perfect);
        if let Some(k) = s.four_critical {
            let _ = write!(out, "; {k}/{} 4-critical", s.rows);
        }
        if let Some(k) = s.p6_free {
            let _ = write!(out, "; {k}/{} P6-free", s.rows);
        }
        let _ = writeln!(out, "; {} failures", s.failures);
        out
    }

    /// One JSON object per row, then `{"summary": ...}`.
    pub fn render_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            out.push_str(&serde_json::to_string(r).expect("row serializes"));
            out.push('\n');
        }
        out.push_str(&serde_json::json!({ "summary": self.summary() }).to_string());
        out.push('\n');
        out
    }
}

/// A corpus line for `g` with an optional point and label.
pub fn format_corpus_line(g: &Graph, point: Option<&RationalVector>, label: Option<&str>) -> String {
    format!(
        "{}\t{}\t{}\t{}",
        encode_graph6(g),
        point.map_or("-".to_string(), |p| p.to_string()),
        label.unwrap_or(""),
        g
    )
}
