//! Machine-readable reports for the verification suites.

use serde::Serialize;

/// Cap on the number of *passing* cases retained verbatim in a report;
/// counts always reflect the full run and failing cases are always
/// retained, so the pass/fail verdict is unaffected.
pub const RECORDED_PASS_CAP: usize = 200;

#[derive(Debug, Clone, Serialize)]
pub struct CaseReport {
    pub inputs: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Counts {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    /// Number of cases serialized into `cases` (see `RECORDED_PASS_CAP`).
    pub recorded: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<CaseReport>,
    pub counts: Counts,
    pub duration_ms: u128,
    pub version: String,
    pub config_digest: String,
    /// Free-form resolutions recorded by the suite (e.g. which argument
    /// orientation of an ambiguous statement matched the ground truth).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

pub struct SuiteBuilder {
    suite: String,
    cases: Vec<CaseReport>,
    total: usize,
    passed: usize,
    notes: Vec<String>,
    start: std::time::Instant,
}

impl SuiteBuilder {
    pub fn new(suite: &str) -> SuiteBuilder {
        SuiteBuilder {
            suite: suite.to_string(),
            cases: Vec::new(),
            total: 0,
            passed: 0,
            notes: Vec::new(),
            start: std::time::Instant::now(),
        }
    }

    pub fn case(&mut self, inputs: impl Into<String>, expected: impl Into<String>, actual: impl Into<String>) {
        let expected = expected.into();
        let actual = actual.into();
        let pass = expected == actual;
        self.total += 1;
        if pass {
            self.passed += 1;
        }
        let recorded_passes = self.cases.iter().filter(|c| c.pass).count();
        if !pass || recorded_passes < RECORDED_PASS_CAP {
            self.cases.push(CaseReport { inputs: inputs.into(), expected, actual, pass });
        }
    }

    pub fn check(&mut self, inputs: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.case(inputs, "pass", if ok { "pass".into() } else { format!("fail: {}", detail.into()) });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }

    pub fn finish(self, config_digest: String) -> SuiteReport {
        let recorded = self.cases.len();
        SuiteReport {
            suite: self.suite,
            counts: Counts {
                total: self.total,
                passed: self.passed,
                failed: self.total - self.passed,
                recorded,
            },
            cases: self.cases,
            duration_ms: self.start.elapsed().as_millis(),
            version: crate::formats::TOOL_VERSION.to_string(),
            config_digest,
            notes: self.notes,
        }
    }
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counts.failed == 0
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "suite {}: {} / {} passed ({} ms)\n",
            self.suite, self.counts.passed, self.counts.total, self.duration_ms
        ));
        for note in &self.notes {
            out.push_str(&format!("  note: {note}\n"));
        }
        for case in self.cases.iter().filter(|c| !c.pass) {
            out.push_str(&format!(
                "  FAIL {} expected {} got {}\n",
                case.inputs, case.expected, case.actual
            ));
        }
        out
    }
}
