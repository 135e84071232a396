//! Pass/fail bookkeeping shared by every verification routine.

use serde::Serialize;

use crate::scalars::{Field, Matrix};

/// Serialize exact values through their `Display` form.
pub fn serialize_display<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Ordered list of named checks. A report passes when nothing failed;
/// skipped checks carry the reason in `detail`.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.push(name, Status::Pass, None);
    }

    pub fn note(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.push(name, Status::Pass, Some(detail.into()));
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.push(name, Status::Fail, Some(witness.into()));
    }

    pub fn skip(&mut self, name: impl Into<String>, reason: impl Into<String>) {
        self.push(name, Status::Skipped, Some(reason.into()));
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) {
        if ok {
            self.pass(name);
        } else {
            self.fail(name, witness());
        }
    }

    /// Record an error from a fallible computation as a failed check.
    pub fn check_result<T>(&mut self, name: impl Into<String>, r: crate::Result<T>) -> Option<T> {
        match r {
            Ok(v) => {
                self.pass(name);
                Some(v)
            }
            Err(e) => {
                self.fail(name, e.to_string());
                None
            }
        }
    }

    /// Exact matrix identity `lhs = rhs`, labels included.
    pub fn matrix_eq<F: Field>(&mut self, name: impl Into<String>, lhs: &Matrix<F>, rhs: &Matrix<F>) {
        let name = name.into();
        match lhs.try_sub(rhs) {
            Err(e) => self.fail(name, e.to_string()),
            Ok(d) => match d.first_nonzero() {
                None => self.pass(name),
                Some((i, j)) => self.fail(
                    name,
                    format!(
                        "basis vector {j}: component {i} is {} but should be {}",
                        lhs[(i, j)],
                        rhs[(i, j)]
                    ),
                ),
            },
        }
    }

    /// `m = c·id` for the expected scalar `c`.
    pub fn scalar_eq<F: Field>(&mut self, name: impl Into<String>, m: &Matrix<F>, c: &F) {
        let id = Matrix::scalar(m.rows(), c.clone()).labeled(m.codomain().clone(), m.domain().clone());
        self.matrix_eq(name, m, &id);
    }

    pub fn is_zero<F: Field>(&mut self, name: impl Into<String>, m: &Matrix<F>) {
        let name = name.into();
        match m.first_nonzero() {
            None => self.pass(name),
            Some((i, j)) => self.fail(name, format!("basis vector {j}: component {i} is {}", m[(i, j)])),
        }
    }

    /// Append another report's checks with a name prefix.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}: {}", c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn status(&self) -> Status {
        if self.passed() {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    fn push(&mut self, name: impl Into<String>, status: Status, detail: Option<String>) {
        self.checks.push(Check {
            name: name.into(),
            status,
            detail,
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::qi;
    use crate::RatMatrix;

    #[test]
    fn witness_names_the_offending_entry() {
        let mut r = Report::new();
        let a = RatMatrix::identity(2);
        let mut b = a.clone();
        b[(1, 0)] = qi(3);
        r.matrix_eq("id", &a, &a);
        r.matrix_eq("off", &a, &b);
        assert!(!r.passed());
        let f = r.first_failure().unwrap();
        assert_eq!(f.name, "off");
        assert!(f.detail.as_ref().unwrap().contains("basis vector 0"));
    }

    #[test]
    fn skipped_does_not_fail() {
        let mut r = Report::new();
        r.skip("boundary", "empty range");
        assert!(r.passed());
        assert_eq!(r.count(Status::Skipped), 1);
    }
}
