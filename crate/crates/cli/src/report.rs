use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use lderlab::catalog::{CatalogEntry, Fact};
use lderlab::{Matrix, SearchConfig};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Flag,
    Skip,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn tag(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Flag => "FLAG",
            Status::Skip => "SKIP",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub label: String,
    pub matrix: Vec<Vec<String>>,
}

impl Witness {
    pub fn new(label: impl Into<String>, m: &Matrix) -> Witness {
        let matrix = m.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
        Witness { label: label.into(), matrix }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub details: String,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub data: Value,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
}

impl Check {
    pub fn new(id: impl Into<String>, status: Status, details: impl Into<String>) -> Check {
        Check { id: id.into(), status, details: details.into(), data: Value::Null, witnesses: Vec::new() }
    }

    pub fn with_data(mut self, data: Value) -> Check {
        self.data = data;
        self
    }

    pub fn with_witness(mut self, w: Witness) -> Check {
        self.witnesses.push(w);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Discrepancy {
    pub id: String,
    pub algebra: String,
    pub claim: String,
    pub computed: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConfigEcho {
    pub seed: u64,
    pub trials: usize,
    pub max_order: usize,
    pub coefficient_bound: i64,
}

impl From<&SearchConfig> for ConfigEcho {
    fn from(c: &SearchConfig) -> Self {
        ConfigEcho { seed: c.seed, trials: c.trials, max_order: c.max_order, coefficient_bound: c.coefficient_bound }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub flag: usize,
    pub skip: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: Vec<String>,
    pub config: ConfigEcho,
    pub summary: Summary,
    pub checks: Vec<Check>,
    pub discrepancies: Vec<Discrepancy>,
}

impl Report {
    pub fn new(command: Vec<String>, config: &SearchConfig) -> Report {
        Report {
            schema: SCHEMA,
            command,
            config: config.into(),
            summary: Summary::default(),
            checks: Vec::new(),
            discrepancies: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        match check.status {
            Status::Pass => self.summary.pass += 1,
            Status::Fail => self.summary.fail += 1,
            Status::Flag => self.summary.flag += 1,
            Status::Skip => self.summary.skip += 1,
        }
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        for c in checks {
            self.push(c);
        }
    }

    pub fn note(&mut self, d: Discrepancy) {
        if !self.discrepancies.contains(&d) {
            self.discrepancies.push(d);
        }
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "lder-lab {}", self.command.join(" "));
        let c = &self.config;
        let _ = writeln!(
            out,
            "seed {} trials {} max-order {} coefficient-bound {}",
            c.seed, c.trials, c.max_order, c.coefficient_bound
        );
        for check in &self.checks {
            let _ = writeln!(out, "{} {}: {}", check.status.tag(), check.id, check.details);
            for w in &check.witnesses {
                let rows: Vec<String> = w.matrix.iter().map(|r| r.join(" ")).collect();
                let _ = writeln!(out, "     {} = [{}]", w.label, rows.join("; "));
            }
        }
        for d in &self.discrepancies {
            let _ = writeln!(out, "discrepancy {} ({}): claim: {}; computed: {}", d.id, d.algebra, d.claim, d.computed);
        }
        let s = &self.summary;
        let _ = writeln!(out, "{} pass, {} fail, {} flag, {} skip", s.pass, s.fail, s.flag, s.skip);
        out
    }
}

/// Checks every discrepancy recorded for a catalog entry. A discrepancy
/// whose computed side holds is a flag; otherwise the engine disagrees with
/// its own ledger and the check fails.
pub fn discrepancy_checks(entry: &CatalogEntry, prefix: &str, report: &mut Report) {
    for fact in entry.discrepancies() {
        let Fact::Discrepancy { id, claim, computed } = &fact.fact else { continue };
        let check_id = format!("{prefix}{id}");
        match entry.verify_fact(&fact.fact) {
            Ok(true) => {
                report.push(Check::new(check_id, Status::Flag, computed.clone()));
                report.note(Discrepancy {
                    id: id.clone(),
                    algebra: entry.name.clone(),
                    claim: claim.clone(),
                    computed: computed.clone(),
                });
            }
            Ok(false) => report.push(Check::new(check_id, Status::Fail, format!("could not reproduce: {computed}"))),
            Err(e) => report.push(Check::new(check_id, Status::Fail, e.to_string())),
        }
    }
}
