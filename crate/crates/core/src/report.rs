//! Verification reports: named checks with a status, witnesses for
//! failures, and computed values.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// At most this many witnesses are kept per entry; the total count is
/// recorded under the `violations` value.
pub const MAX_WITNESSES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::NotApplicable => "n/a",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub check: String,
    pub status: Status,
    pub witnesses: Vec<String>,
    pub values: BTreeMap<String, String>,
}

impl Entry {
    pub fn pass(check: impl Into<String>) -> Self {
        Entry {
            check: check.into(),
            status: Status::Pass,
            witnesses: Vec::new(),
            values: BTreeMap::new(),
        }
    }

    pub fn not_applicable(check: impl Into<String>, reason: impl Into<String>) -> Self {
        Entry::pass(check)
            .with_status(Status::NotApplicable)
            .with_value("reason", reason.into())
    }

    /// Pass iff `witnesses` is empty.
    pub fn from_witnesses(check: impl Into<String>, witnesses: Vec<String>) -> Self {
        let mut e = Entry::pass(check);
        for w in witnesses {
            e.fail(w);
        }
        e
    }

    pub fn from_bool(check: impl Into<String>, ok: bool, witness: impl Into<String>) -> Self {
        let mut e = Entry::pass(check);
        if !ok {
            e.fail(witness);
        }
        e
    }

    /// Records a violation and marks the entry failed.
    pub fn fail(&mut self, witness: impl Into<String>) {
        self.status = Status::Fail;
        let count = self
            .values
            .get("violations")
            .and_then(|v| v.parse::<usize>().ok())
            .unwrap_or(0)
            + 1;
        self.values.insert("violations".into(), count.to_string());
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness.into());
        }
    }

    pub fn with_status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }

    pub fn with_value(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.values.insert(key.into(), value.to_string());
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    entries: Vec<Entry>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, entry: Entry) {
        self.entries.push(entry);
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    /// Entries sorted by check name. Sorting is stable, so entries sharing
    /// a name keep insertion order.
    pub fn entries(&self) -> Vec<&Entry> {
        let mut v: Vec<&Entry> = self.entries.iter().collect();
        v.sort_by(|a, b| a.check.cmp(&b.check));
        v
    }

    pub fn get(&self, check: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.check == check)
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(Entry::passed)
    }

    pub fn failures(&self) -> Vec<&Entry> {
        self.entries().into_iter().filter(|e| !e.passed()).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            all_pass: bool,
            entries: Vec<&'a Entry>,
        }
        serde_json::to_string_pretty(&Out {
            all_pass: self.all_pass(),
            entries: self.entries(),
        })
        .expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in self.entries() {
            write!(f, "[{}] {}", e.status, e.check)?;
            for (k, v) in &e.values {
                write!(f, " {k}={v}")?;
            }
            writeln!(f)?;
            for w in &e.witnesses {
                writeln!(f, "    witness: {w}")?;
            }
        }
        Ok(())
    }
}
