//! Verification suites and their reports.
//!
//! Each suite returns a [`Report`] made of named [`Check`]s. Checks backed by
//! a finite search say so (`exhaustive-bounded`, `random-sampled`); checks that
//! replay a complete case analysis are `structural-complete`.

mod passes;
mod suites;

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use suites::{
    verify_all, verify_hexagon_vanishing, verify_main_theorem, verify_psi_targets,
    verify_span_vanishing, MainInputs,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Status::Pass
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Evidence {
    /// Every case inside explicit bounds was checked.
    ExhaustiveBounded,
    /// Seeded random instances were checked.
    RandomSampled,
    /// A complete case analysis was replayed.
    StructuralComplete,
}

impl std::fmt::Display for Evidence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Evidence::ExhaustiveBounded => "exhaustive-bounded",
            Evidence::RandomSampled => "random-sampled",
            Evidence::StructuralComplete => "structural-complete",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// The statement being checked.
    pub anchor: String,
    pub evidence: Evidence,
    pub status: Status,
    pub details: String,
    /// Wall-clock time; not part of the deterministic output.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        anchor: impl Into<String>,
        evidence: Evidence,
        ok: bool,
        details: impl Into<String>,
    ) -> Self {
        Check {
            name: name.into(),
            anchor: anchor.into(),
            evidence,
            status: Status::from_bool(ok),
            details: details.into(),
            elapsed_ms: None,
        }
    }

    pub fn timed(mut self, started: std::time::Instant) -> Self {
        self.elapsed_ms = Some(started.elapsed().as_millis() as u64);
        self
    }
}

/// Bounds and seed shared by the suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub kmax: u64,
    pub max_syllables: usize,
    pub max_exponent: u32,
    pub trials: usize,
    pub seed: u64,
    pub random_max_syllables: usize,
    pub random_max_exponent: u32,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            kmax: 10,
            max_syllables: 3,
            max_exponent: 3,
            trials: 10_000,
            seed: 0,
            random_max_syllables: 5,
            random_max_exponent: 5,
        }
    }
}

impl Params {
    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::InvalidParameter(format!("{what} must be at least 1")));
        if self.kmax == 0 {
            return bad("kmax");
        }
        if self.max_syllables == 0 {
            return bad("max-syllables");
        }
        if self.max_exponent == 0 {
            return bad("max-exponent");
        }
        if self.random_max_exponent == 0 {
            return bad("random exponent bound");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub parameters: Params,
    pub checks: Vec<Check>,
    pub overall: Status,
}

impl Report {
    pub fn new(suite: impl Into<String>, parameters: Params, checks: Vec<Check>) -> Self {
        let overall = Status::from_bool(checks.iter().all(|c| c.status.is_pass()));
        Report {
            suite: suite.into(),
            parameters,
            checks,
            overall,
        }
    }

    pub fn passed(&self) -> bool {
        self.overall.is_pass()
    }

    /// The same report with all timings removed.
    pub fn without_timings(&self) -> Report {
        let mut r = self.clone();
        for c in &mut r.checks {
            c.elapsed_ms = None;
        }
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn to_markdown(&self) -> String {
        let p = &self.parameters;
        let mut out = String::new();
        let _ = writeln!(out, "## {}: {}\n", self.suite, self.overall);
        let _ = writeln!(
            out,
            "kmax={}, max_syllables={}, max_exponent={}, trials={}, seed={}\n",
            p.kmax, p.max_syllables, p.max_exponent, p.trials, p.seed
        );
        out.push_str("| check | statement | evidence | status | details |\n");
        out.push_str("|---|---|---|---|---|\n");
        let esc = |s: &str| s.replace('|', "\\|").replace('\n', " ");
        for c in &self.checks {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} |",
                esc(&c.name),
                esc(&c.anchor),
                c.evidence,
                c.status,
                esc(&c.details)
            );
        }
        out
    }
}

/// Output formats for reports and tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
}

/// Serializes reports. Several reports become a JSON array or consecutive
/// markdown sections.
pub fn emit(reports: &[Report], format: Format) -> String {
    match format {
        Format::Json => {
            if let [single] = reports {
                single.to_json()
            } else {
                serde_json::to_string_pretty(reports).expect("reports always serialize")
            }
        }
        Format::Markdown => reports
            .iter()
            .map(Report::to_markdown)
            .collect::<Vec<_>>()
            .join("\n"),
    }
}
