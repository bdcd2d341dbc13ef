//! Independent verification of explicit addressings, including the
//! published certificate tables shipped as fixtures.
//!
//! This module is the embedder-independent oracle: it shares only the
//! graph distances with the search code and re-derives every pairwise
//! check from the addressing text. Certificates are checked as printed;
//! no coordinate permutation or complementation is applied.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::embed::Embedding;
use crate::families::FamilySpec;
use crate::graph::{all_pairs_distances, Graph};

#[derive(Debug, Error)]
pub enum CertifyError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("address length mismatch at line {line}: expected {expected}, got {got}")]
    LengthMismatch {
        line: usize,
        expected: usize,
        got: usize,
    },
    #[error("labels do not align with the graph: {0}")]
    LabelMismatch(String),
    #[error("unknown fixture id {0:?}")]
    UnknownFixture(String),
}

/// A parsed `vertex,address` table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AddressingFile {
    pub m: usize,
    /// (vertex label, 0/1 address string), one row per vertex.
    pub rows: Vec<(String, String)>,
}

impl AddressingFile {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("vertex,address\n");
        for (label, addr) in &self.rows {
            let _ = writeln!(out, "{label},{addr}");
        }
        out
    }
}

/// Parse an addressing CSV (`vertex,address` header, one row per vertex).
pub fn parse_addressing(text: &str) -> Result<AddressingFile, CertifyError> {
    let mut lines = text.lines().enumerate();
    let Some((_, header)) = lines.next() else {
        return Err(CertifyError::Parse {
            line: 1,
            msg: "empty file".into(),
        });
    };
    if header.trim() != "vertex,address" {
        return Err(CertifyError::Parse {
            line: 1,
            msg: format!("expected header 'vertex,address', got {header:?}"),
        });
    }
    let mut rows = Vec::new();
    let mut m = None;
    for (idx, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let Some((label, addr)) = line.rsplit_once(',') else {
            return Err(CertifyError::Parse {
                line: idx + 1,
                msg: "missing comma".into(),
            });
        };
        let addr = addr.trim();
        if addr.is_empty() || !addr.chars().all(|c| c == '0' || c == '1') {
            return Err(CertifyError::Parse {
                line: idx + 1,
                msg: format!("address must be a non-empty 0/1 string, got {addr:?}"),
            });
        }
        let expected = *m.get_or_insert(addr.len());
        if addr.len() != expected {
            return Err(CertifyError::LengthMismatch {
                line: idx + 1,
                expected,
                got: addr.len(),
            });
        }
        rows.push((label.to_string(), addr.to_string()));
    }
    if rows.is_empty() {
        return Err(CertifyError::Parse {
            line: 2,
            msg: "no rows".into(),
        });
    }
    Ok(AddressingFile {
        m: m.unwrap(),
        rows,
    })
}

pub fn load_addressing(path: &Path) -> Result<AddressingFile, CertifyError> {
    parse_addressing(&std::fs::read_to_string(path)?)
}

/// One entry of the shipped fixture manifest.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FixtureEntry {
    pub id: String,
    pub family: FamilySpec,
    pub scale: u8,
    pub s: usize,
    pub m: usize,
    pub source: String,
}

const MANIFEST: &str = include_str!("fixtures/manifest.json");

const FIXTURE_FILES: [(&str, &str); 8] = [
    ("ind23_h6", include_str!("fixtures/ind23_h6.csv")),
    ("ind12_h4", include_str!("fixtures/ind12_h4.csv")),
    ("ind01_h2", include_str!("fixtures/ind01_h2.csv")),
    ("gcr24_h5", include_str!("fixtures/gcr24_h5.csv")),
    ("sos44_h6", include_str!("fixtures/sos44_h6.csv")),
    ("sos34_halfh14", include_str!("fixtures/sos34_halfh14.csv")),
    ("but2_halfh8", include_str!("fixtures/but2_halfh8.csv")),
    ("dyck_h6", include_str!("fixtures/dyck_h6.csv")),
];

pub fn fixture_manifest() -> Vec<FixtureEntry> {
    serde_json::from_str(MANIFEST).expect("embedded manifest is valid")
}

pub fn fixture_csv(id: &str) -> Result<&'static str, CertifyError> {
    FIXTURE_FILES
        .iter()
        .find(|(fid, _)| *fid == id)
        .map(|(_, text)| *text)
        .ok_or_else(|| CertifyError::UnknownFixture(id.to_string()))
}

pub fn load_fixture(id: &str) -> Result<AddressingFile, CertifyError> {
    parse_addressing(fixture_csv(id)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertKind {
    EqualityBroken,
    Exceeds,
    DuplicateAddress,
    Parity,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertViolation {
    pub u: String,
    pub v: String,
    pub d: usize,
    pub d_prime: usize,
    pub kind: CertKind,
}

/// Outcome of checking an addressing against a graph metric.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub scale: u8,
    pub s: usize,
    pub pass: bool,
    pub violations: Vec<CertViolation>,
    /// Pairs beyond the truncation level whose derived distance fell
    /// short of the graph distance: (u, v, d, d').
    pub shortfalls: Vec<(String, String, usize, usize)>,
}

/// Full pairwise check of `a` as a scale-1 or scale-2 addressing of `g`,
/// exact up to distance `s`. Labels must match the graph's label set
/// exactly; rows may come in any order.
pub fn verify_certificate(
    g: &Graph,
    a: &AddressingFile,
    scale: u8,
    s: usize,
) -> Result<VerificationReport, CertifyError> {
    if a.rows.len() != g.n {
        return Err(CertifyError::LabelMismatch(format!(
            "{} rows for a graph on {} vertices",
            a.rows.len(),
            g.n
        )));
    }
    let mut addr_of = vec![None; g.n];
    for (label, addr) in &a.rows {
        let Some(v) = g.label_index(label) else {
            return Err(CertifyError::LabelMismatch(format!(
                "label {label:?} is not a vertex of {}",
                g.name
            )));
        };
        if addr_of[v].is_some() {
            return Err(CertifyError::LabelMismatch(format!(
                "label {label:?} appears twice"
            )));
        }
        addr_of[v] = Some(addr.as_bytes());
    }
    let addrs: Vec<&[u8]> = addr_of
        .into_iter()
        .map(|a| a.expect("every vertex labeled: row count matches"))
        .collect();
    let dm = all_pairs_distances(g).map_err(|e| CertifyError::LabelMismatch(e.to_string()))?;

    let mut violations = Vec::new();
    let mut shortfalls = Vec::new();
    let weight = |a: &[u8]| a.iter().filter(|&&c| c == b'1').count();
    let hamming =
        |a: &[u8], b: &[u8]| a.iter().zip(b).filter(|(x, y)| x != y).count();

    if scale == 2 {
        for v in 0..g.n {
            if weight(addrs[v]) % 2 != 0 {
                violations.push(CertViolation {
                    u: g.labels[v].clone(),
                    v: g.labels[v].clone(),
                    d: 0,
                    d_prime: 0,
                    kind: CertKind::Parity,
                });
            }
        }
    }
    for u in 0..g.n {
        for v in u + 1..g.n {
            let h = hamming(addrs[u], addrs[v]);
            let d = dm.d(u, v);
            let mk = |d_prime: usize, kind: CertKind| CertViolation {
                u: g.labels[u].clone(),
                v: g.labels[v].clone(),
                d,
                d_prime,
                kind,
            };
            if h == 0 {
                violations.push(mk(0, CertKind::DuplicateAddress));
                continue;
            }
            if scale == 2 && h % 2 != 0 {
                violations.push(mk(h, CertKind::Parity));
                continue;
            }
            let d_prime = h / scale as usize;
            if d <= s {
                if d_prime != d {
                    violations.push(mk(d_prime, CertKind::EqualityBroken));
                }
            } else if d_prime > d {
                violations.push(mk(d_prime, CertKind::Exceeds));
            } else if d_prime < d {
                shortfalls.push((
                    g.labels[u].clone(),
                    g.labels[v].clone(),
                    d,
                    d_prime,
                ));
            }
        }
    }
    Ok(VerificationReport {
        scale,
        s,
        pass: violations.is_empty(),
        violations,
        shortfalls,
    })
}

/// Serialize an embedding as an addressing table, one row per vertex in
/// index order.
pub fn emit_addressing(emb: &Embedding, g: &Graph) -> AddressingFile {
    AddressingFile {
        m: emb.m,
        rows: g
            .labels
            .iter()
            .cloned()
            .zip(emb.addresses.iter().map(|a| a.to_string()))
            .collect(),
    }
}
