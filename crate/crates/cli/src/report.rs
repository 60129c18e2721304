//! Deterministic run reports: ordered lines, accumulated verdicts, and the
//! exit-code policy (0 clean, 1 property failure or theorem violation,
//! 2 input error).

use std::fmt;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CliVerdict {
    Pass,
    Fail,
    NotApplicable,
    TheoremViolation,
}

impl fmt::Display for CliVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CliVerdict::Pass => "PASS",
            CliVerdict::Fail => "FAIL",
            CliVerdict::NotApplicable => "NOT_APPLICABLE",
            CliVerdict::TheoremViolation => "THEOREM_VIOLATION",
        };
        f.write_str(s)
    }
}

/// Accumulates output lines and verdicts; rendering is a pure function of
/// the pushes, so identical runs produce identical bytes.
#[derive(Debug, Default)]
pub struct Report {
    lines: Vec<String>,
    verdicts: Vec<CliVerdict>,
}

impl Report {
    pub fn new(command_echo: String) -> Self {
        Report {
            lines: vec![format!("command: {command_echo}")],
            verdicts: Vec::new(),
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn verdict(&mut self, v: CliVerdict) {
        self.verdicts.push(v);
    }

    pub fn verdict_line(&mut self, label: &str, v: CliVerdict) {
        self.verdicts.push(v);
        self.lines.push(format!("{label}: {v}"));
    }

    fn overall(&self) -> CliVerdict {
        if self.verdicts.contains(&CliVerdict::TheoremViolation) {
            CliVerdict::TheoremViolation
        } else if self.verdicts.contains(&CliVerdict::Fail) {
            CliVerdict::Fail
        } else {
            CliVerdict::Pass
        }
    }

    /// Render the report and compute the process exit code.
    pub fn finish(mut self) -> (String, u8) {
        let overall = self.overall();
        self.lines.push(format!("verdict: {overall}"));
        let code = match overall {
            CliVerdict::Pass | CliVerdict::NotApplicable => 0,
            _ => 1,
        };
        (self.lines.join("\n") + "\n", code)
    }
}

/// An input error: bad flags, unreadable files, malformed documents.
/// Always exits with code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for InputError {}

impl From<criteria_core::Error> for InputError {
    fn from(e: criteria_core::Error) -> Self {
        InputError(e.to_string())
    }
}

impl From<std::io::Error> for InputError {
    fn from(e: std::io::Error) -> Self {
        InputError(e.to_string())
    }
}

impl From<serde_json::Error> for InputError {
    fn from(e: serde_json::Error) -> Self {
        InputError(format!("malformed JSON: {e}"))
    }
}

pub type CliResult<T> = Result<T, InputError>;
