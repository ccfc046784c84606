//! Structured results of exact identity checks.

use crate::error::Result;
use crate::exactnum::Field;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

const MAX_COUNTEREXAMPLES: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Exact,
    Failed,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sweep {
    pub ranges: String,
    pub checked: usize,
    pub failures: usize,
    pub skipped: usize,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Counterexample {
    pub location: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub relation: String,
    pub params: BTreeMap<String, String>,
    pub sweep: Sweep,
    pub status: Status,
    pub counterexamples: Vec<Counterexample>,
}

impl VerificationReport {
    pub fn new(relation: impl Into<String>, params: BTreeMap<String, String>, ranges: impl Into<String>) -> Self {
        VerificationReport {
            relation: relation.into(),
            params,
            sweep: Sweep { ranges: ranges.into(), checked: 0, failures: 0, skipped: 0, notes: Vec::new() },
            status: Status::Skipped,
            counterexamples: Vec::new(),
        }
    }

    pub fn is_exact(&self) -> bool {
        self.status == Status::Exact
    }

    fn refresh(&mut self) {
        self.status = if self.sweep.failures > 0 {
            Status::Failed
        } else if self.sweep.checked > 0 {
            Status::Exact
        } else {
            Status::Skipped
        };
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.sweep.notes.push(text.into());
    }

    pub fn skip(&mut self, location: impl Into<String>, reason: impl std::fmt::Display) {
        self.sweep.skipped += 1;
        if self.sweep.notes.len() < MAX_COUNTEREXAMPLES {
            self.sweep.notes.push(format!("skipped {}: {}", location.into(), reason));
        }
        self.refresh();
    }

    pub fn fail(&mut self, location: impl Into<String>, lhs: impl Into<String>, rhs: impl Into<String>) {
        self.sweep.checked += 1;
        self.sweep.failures += 1;
        if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.counterexamples.push(Counterexample { location: location.into(), lhs: lhs.into(), rhs: rhs.into() });
        }
        self.refresh();
    }

    pub fn pass(&mut self) {
        self.sweep.checked += 1;
        self.refresh();
    }

    /// Records one equality check; evaluation errors count as failures.
    pub fn check<F: Field>(&mut self, location: impl FnOnce() -> String, lhs: Result<F>, rhs: Result<F>) {
        match (lhs, rhs) {
            (Ok(a), Ok(b)) if a == b => self.pass(),
            (Ok(a), Ok(b)) => self.fail(location(), a.to_string(), b.to_string()),
            (a, b) => {
                let show = |r: Result<F>| match r {
                    Ok(v) => v.to_string(),
                    Err(e) => format!("error: {e}"),
                };
                self.fail(location(), show(a), show(b))
            }
        }
    }

    /// Records that `value` is exactly zero.
    pub fn check_zero<F: Field>(&mut self, location: impl FnOnce() -> String, value: Result<F>) {
        self.check(location, value, Ok(F::zero()))
    }

    pub fn check_bool(&mut self, location: impl FnOnce() -> String, ok: bool, detail: impl FnOnce() -> (String, String)) {
        if ok {
            self.pass();
        } else {
            let (l, r) = detail();
            self.fail(location(), l, r);
        }
    }

    /// Commutative join of two reports over the same relation.
    pub fn merge(mut self, other: VerificationReport) -> VerificationReport {
        self.sweep.checked += other.sweep.checked;
        self.sweep.failures += other.sweep.failures;
        self.sweep.skipped += other.sweep.skipped;
        self.sweep.notes.extend(other.sweep.notes);
        self.sweep.notes.sort();
        self.sweep.notes.dedup();
        if self.sweep.ranges != other.sweep.ranges {
            let mut r = [self.sweep.ranges.clone(), other.sweep.ranges];
            r.sort();
            self.sweep.ranges = format!("{}; {}", r[0], r[1]);
        }
        for (k, v) in other.params {
            self.params.entry(k).or_insert(v);
        }
        self.counterexamples.extend(other.counterexamples);
        self.counterexamples.sort();
        self.counterexamples.truncate(MAX_COUNTEREXAMPLES);
        self.refresh();
        self
    }
}

pub fn param_map<I, K, V>(items: I) -> BTreeMap<String, String>
where
    I: IntoIterator<Item = (K, V)>,
    K: Into<String>,
    V: ToString,
{
    items.into_iter().map(|(k, v)| (k.into(), v.to_string())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    #[test]
    fn status_transitions() {
        let mut r = VerificationReport::new("demo", BTreeMap::new(), "none");
        assert_eq!(r.status, Status::Skipped);
        r.check(|| "a".into(), Ok(int(1)), Ok(int(1)));
        assert_eq!(r.status, Status::Exact);
        r.check(|| "b".into(), Ok(int(1)), Ok(int(2)));
        assert_eq!(r.status, Status::Failed);
        assert_eq!(r.counterexamples[0].lhs, "1");
    }

    #[test]
    fn merge_is_commutative() {
        let mut a = VerificationReport::new("demo", param_map([("N", 2)]), "n<=2");
        a.check(|| "a".into(), Ok(int(1)), Ok(int(3)));
        let mut b = VerificationReport::new("demo", param_map([("N", 2)]), "x<=2");
        b.pass();
        b.skip("p", "pole");
        assert_eq!(a.clone().merge(b.clone()), b.merge(a));
    }

    #[test]
    fn json_roundtrip_is_byte_identical() {
        let mut a = VerificationReport::new("demo", param_map([("c1", "1/2")]), "all");
        a.check(|| "(0,1)".into(), Ok(int(1)), Ok(int(3)));
        let text = serde_json::to_string_pretty(&a).unwrap();
        let back: VerificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&back).unwrap(), text);
    }
}
