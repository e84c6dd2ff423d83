use std::fmt;

use serde::Serialize;

/// Basis indices (and a human-readable discrepancy) at which an axiom fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub axiom: String,
    pub passed: bool,
    /// Number of basis tuples evaluated.
    pub checked: usize,
    pub witness: Option<Witness>,
}

/// Outcome of an axiom checker. Failures are data, never errors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub subject: String,
    pub results: Vec<AxiomResult>,
}

impl AxiomResult {
    pub fn pass(axiom: impl Into<String>, checked: usize) -> Self {
        AxiomResult {
            axiom: axiom.into(),
            passed: true,
            checked,
            witness: None,
        }
    }

    pub fn fail(
        axiom: impl Into<String>,
        checked: usize,
        indices: Vec<usize>,
        detail: impl Into<String>,
    ) -> Self {
        AxiomResult {
            axiom: axiom.into(),
            passed: false,
            checked,
            witness: Some(Witness {
                indices,
                detail: detail.into(),
            }),
        }
    }

    /// Evaluates `check` on each tuple in order and stops at the first failure,
    /// so the witness is the lexicographically first failing tuple.
    pub fn scan<I>(
        axiom: impl Into<String>,
        tuples: I,
        mut check: impl FnMut(&[usize]) -> Option<String>,
    ) -> Self
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        let mut checked = 0;
        for t in tuples {
            checked += 1;
            if let Some(detail) = check(&t) {
                return Self::fail(axiom, checked, t, detail);
            }
        }
        Self::pass(axiom, checked)
    }
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            results: Vec::new(),
        }
    }

    pub fn push(&mut self, r: AxiomResult) {
        self.results.push(r);
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomResult> {
        self.results.iter().find(|r| !r.passed)
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.axiom == axiom)
    }

    /// Appends another report's results with their axiom names prefixed.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut r in other.results {
            r.axiom = format!("{prefix}.{}", r.axiom);
            self.results.push(r);
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {}",
            self.subject,
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        for r in &self.results {
            write!(
                f,
                "  [{}] {} ({} checked)",
                if r.passed { "ok" } else { "FAIL" },
                r.axiom,
                r.checked
            )?;
            if let Some(w) = &r.witness {
                write!(f, " at {:?}: {}", w.indices, w.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// All tuples in `[0, n)^k`, lexicographic.
pub fn tuples(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.checked_pow(k as u32).unwrap_or(0);
    let total = if k == 0 { 1 } else { total };
    (0..total).map(move |mut f| {
        let mut t = vec![0; k];
        for slot in t.iter_mut().rev() {
            *slot = f % n.max(1);
            f /= n.max(1);
        }
        t
    })
}
