//! Verification reports shared by every `verify_*` routine and the CLI.

use std::fmt;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// What a report entry is about.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Subject {
    /// The algebra itself (symbolic identities, rewriting system).
    Algebra,
    /// A simple module `L(n, eps)`.
    Module { n: u32, eps: i8 },
    /// A direct sum of simple modules, in block order.
    Sum(Vec<(u32, i8)>),
    /// A basis vector `(i, j)` of one of the infinite-dimensional modules.
    Gamma { flavor: char, i: i64, j: i64 },
}

impl Subject {
    pub fn module(n: u32, eps: i8) -> Self {
        Subject::Module { n, eps }
    }
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Algebra => f.write_str("U_q(sl2)"),
            Subject::Module { n, eps } => write!(f, "L({n},{eps:+})"),
            Subject::Sum(parts) => {
                let parts: Vec<String> = parts.iter().map(|(n, e)| format!("L({n},{e:+})")).collect();
                f.write_str(&parts.join(" + "))
            }
            Subject::Gamma { flavor, i, j } => write!(f, "Gamma_{flavor}[{i},{j}]"),
        }
    }
}

impl Serialize for Subject {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Part {
            n: u32,
            eps: i8,
        }
        let mut map = s.serialize_map(None)?;
        match self {
            Subject::Algebra => map.serialize_entry("algebra", "U_q(sl2)")?,
            Subject::Module { n, eps } => {
                map.serialize_entry("n", n)?;
                map.serialize_entry("eps", eps)?;
            }
            Subject::Sum(parts) => {
                let parts: Vec<Part> = parts.iter().map(|&(n, eps)| Part { n, eps }).collect();
                map.serialize_entry("summands", &parts)?;
            }
            Subject::Gamma { flavor, i, j } => {
                map.serialize_entry("gamma", &flavor.to_string())?;
                map.serialize_entry("i", i)?;
                map.serialize_entry("j", j)?;
            }
        }
        map.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    #[serde(rename = "identity")]
    pub check_id: String,
    #[serde(rename = "module")]
    pub subject: Subject,
    pub status: Status,
    #[serde(rename = "witness", skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Entry {
    pub fn pass(check_id: impl Into<String>, subject: Subject) -> Self {
        Entry {
            check_id: check_id.into(),
            subject,
            status: Status::Pass,
            detail: None,
        }
    }

    pub fn fail(check_id: impl Into<String>, subject: Subject, detail: impl Into<String>) -> Self {
        Entry {
            check_id: check_id.into(),
            subject,
            status: Status::Fail,
            detail: Some(detail.into()),
        }
    }

    /// Pass when `ok`, otherwise fail with the lazily built witness.
    pub fn check(
        check_id: impl Into<String>,
        subject: Subject,
        ok: bool,
        witness: impl FnOnce() -> String,
    ) -> Self {
        if ok {
            Self::pass(check_id, subject)
        } else {
            Self::fail(check_id, subject, witness())
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, "{tag}  {}  [{}]", self.check_id, self.subject)?;
        if let Some(d) = &self.detail {
            write!(f, "  {d}")?;
        }
        Ok(())
    }
}

/// An ordered list of check results. Overall status is `Fail` iff any entry fails.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct VerificationReport {
    entries: Vec<Entry>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, entry: Entry) {
        self.entries.push(entry);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.entries.extend(other.entries);
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn status(&self) -> Status {
        if self.entries.iter().all(Entry::passed) {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn all_passed(&self) -> bool {
        self.status() == Status::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| !e.passed())
    }
}

impl FromIterator<Entry> for VerificationReport {
    fn from_iter<I: IntoIterator<Item = Entry>>(iter: I) -> Self {
        VerificationReport {
            entries: iter.into_iter().collect(),
        }
    }
}

impl IntoIterator for VerificationReport {
    type Item = Entry;
    type IntoIter = std::vec::IntoIter<Entry>;
    fn into_iter(self) -> Self::IntoIter {
        self.entries.into_iter()
    }
}
