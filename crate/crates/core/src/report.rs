//! Check results and their line-oriented serialization.

use std::fmt;
use std::time::{Duration, Instant};

use crate::algebra::{NCPoly, TensorPoly};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckStatus {
    Pass,
    Fail,
    Inconclusive,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Inconclusive => "INCONCLUSIVE",
        }
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What a failed or inconclusive check left behind.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// A residual that could not be shown to vanish.
    Poly(NCPoly),
    Tensor(TensorPoly),
    /// The error that stopped the check.
    Error(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Poly(p) => write!(f, "{p}"),
            Witness::Tensor(t) => write!(f, "{t}"),
            Witness::Error(e) => f.write_str(e),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckEntry {
    pub name: String,
    pub status: CheckStatus,
    pub witness: Option<Witness>,
    pub elapsed: Duration,
}

impl CheckEntry {
    /// Runs `check` and classifies the result: `Ok(None)` passes,
    /// `Ok(Some(witness))` fails, an exhausted fuel or enumeration budget is
    /// inconclusive and any other error fails.
    pub fn run<F>(name: impl Into<String>, check: F) -> CheckEntry
    where
        F: FnOnce() -> Result<Option<Witness>>,
    {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let (status, witness) = match outcome {
            Ok(None) => (CheckStatus::Pass, None),
            Ok(Some(w)) => (CheckStatus::Fail, Some(w)),
            Err(e @ (Error::FuelExhausted(_) | Error::WindowTooSmall { .. })) => {
                (CheckStatus::Inconclusive, Some(Witness::Error(e.to_string())))
            }
            Err(e) => (CheckStatus::Fail, Some(Witness::Error(e.to_string()))),
        };
        CheckEntry { name: name.into(), status, witness, elapsed }
    }
}

/// A named collection of checks, kept sorted by check name.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct VerificationReport {
    pub matrix_id: String,
    entries: Vec<CheckEntry>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Counts {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

impl VerificationReport {
    pub fn new(matrix_id: impl Into<String>) -> Self {
        VerificationReport { matrix_id: matrix_id.into(), entries: Vec::new() }
    }

    pub fn from_entries(matrix_id: impl Into<String>, entries: Vec<CheckEntry>) -> Self {
        let mut r = Self::new(matrix_id);
        r.extend(entries);
        r
    }

    pub fn push(&mut self, entry: CheckEntry) {
        let at = self.entries.partition_point(|e| e.name <= entry.name);
        self.entries.insert(at, entry);
    }

    pub fn extend<I: IntoIterator<Item = CheckEntry>>(&mut self, entries: I) {
        self.entries.extend(entries);
        self.entries.sort_by(|a, b| a.name.cmp(&b.name));
    }

    /// Appends the entries of `other`, prefixing their names.
    pub fn merge_prefixed(&mut self, prefix: &str, other: VerificationReport) {
        self.extend(other.entries.into_iter().map(|mut e| {
            e.name = format!("{prefix}{}", e.name);
            e
        }));
    }

    pub fn entries(&self) -> &[CheckEntry] {
        &self.entries
    }

    pub fn entry(&self, name: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn counts(&self) -> Counts {
        let mut c = Counts { total: self.entries.len(), ..Counts::default() };
        for e in &self.entries {
            match e.status {
                CheckStatus::Pass => c.pass += 1,
                CheckStatus::Fail => c.fail += 1,
                CheckStatus::Inconclusive => c.inconclusive += 1,
            }
        }
        c
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.status == CheckStatus::Pass)
    }

    /// 0 when everything passes, 1 on any failure, 2 when the only
    /// non-passing checks are inconclusive.
    pub fn exit_code(&self) -> i32 {
        let c = self.counts();
        if c.fail > 0 {
            1
        } else if c.inconclusive > 0 {
            2
        } else {
            0
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| e.status != CheckStatus::Pass)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ReportFormat {
    #[default]
    Text,
    Kv,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "kv" => Ok(ReportFormat::Kv),
            other => Err(format!("unknown report format `{other}` (expected text or kv)")),
        }
    }
}

/// Renders `r`. `Text` is the bare `CHECK`/`SUMMARY` wire format; `Kv` adds
/// the matrix id, timings in microseconds and witnesses.
pub fn emit_report(r: &VerificationReport, format: ReportFormat) -> String {
    let mut out = String::new();
    let c = r.counts();
    match format {
        ReportFormat::Text => {
            for e in r.entries() {
                out.push_str(&format!("CHECK {} {}\n", e.name, e.status));
            }
            out.push_str(&format!(
                "SUMMARY total={} pass={} fail={} inconclusive={}\n",
                c.total, c.pass, c.fail, c.inconclusive
            ));
        }
        ReportFormat::Kv => {
            if !r.matrix_id.is_empty() {
                out.push_str(&format!("matrix={}\n", r.matrix_id));
            }
            for e in r.entries() {
                out.push_str(&format!(
                    "check={} status={} us={}",
                    e.name,
                    e.status.as_str().to_lowercase(),
                    e.elapsed.as_micros()
                ));
                if let Some(w) = &e.witness {
                    out.push_str(&format!(" witness={:?}", w.to_string()));
                }
                out.push('\n');
            }
            out.push_str(&format!(
                "summary total={} pass={} fail={} inconclusive={}\n",
                c.total, c.pass, c.fail, c.inconclusive
            ));
        }
    }
    out
}
