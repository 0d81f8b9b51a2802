//! Command implementations shared by the binary and the tests.

use crate::algebra::Field;
use crate::classification::{classify, ClassificationRecord};
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::quotient::{quotient_record, QuotientRecord};
use crate::spinrep::spinbasis;
use crate::verify::{self, Check, Suite, VerifyConfig};
use serde::Serialize;
use std::time::Instant;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Counters {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub expected_failures: usize,
}

impl Counters {
    pub fn tally(checks: &[Check]) -> Self {
        let mut c = Counters { total: checks.len(), ..Default::default() };
        for k in checks {
            match (k.ok(), k.expected_failure) {
                (true, true) => c.expected_failures += 1,
                (true, false) => c.passed += 1,
                (false, _) => c.failed += 1,
            }
        }
        c
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Payload {
    Classify { record: ClassificationRecord, quotient: QuotientPayload },
    Spinbasis { n: usize, side: usize, matrices: Vec<ExactMatrix> },
}

#[derive(Debug, Clone, Serialize)]
pub struct QuotientPayload {
    pub complex: Option<QuotientRecord>,
    pub real: Option<QuotientRecord>,
}

/// Result of one command; exit code 0 iff `ok`.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: Vec<String>,
    pub ok: bool,
    pub counters: Counters,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<Payload>,
    pub wall_time_ms: f64,
}

impl Report {
    fn new(command: Vec<String>, checks: Vec<Check>, data: Option<Payload>, start: Instant) -> Self {
        let counters = Counters::tally(&checks);
        Report {
            schema: SCHEMA_VERSION,
            command,
            ok: counters.failed == 0,
            counters,
            checks,
            data,
            wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.ok {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.data {
            Some(Payload::Classify { record, quotient }) => {
                let r = record;
                out += &format!("signature      ({},{})\n", r.p, r.q);
                out += &format!("ring           {}\n", r.ring.label());
                out += &format!("p-q mod 8      {}\n", r.pq_mod8);
                out += &format!("rep class      {:?}\n", r.rep_class);
                out += &format!("idempotent t   {} (formula {})\n", r.t, r.t_formula);
                out += &format!("BW class       {}\n", r.bw_real_class);
                if let Some(k) = &r.karoubi {
                    out += &format!("factorization  {k:?}\n");
                }
                if let Some(l0) = &r.l0 {
                    out += &format!("l0             {l0}\n");
                }
                for (tag, rec) in [("complex", &quotient.complex), ("real", &quotient.real)] {
                    if let Some(q) = rec {
                        out += &format!(
                            "quotient ({tag:7}) class {} stated {} descending {}\n",
                            q.class.label(),
                            q.symmetries.join(", "),
                            q.computed.join(", ")
                        );
                    }
                }
                for w in &r.warnings {
                    out += &format!("warning        {w}\n");
                }
            }
            Some(Payload::Spinbasis { n, side, matrices }) => {
                out += &format!("spinbasis n={n} side={side}\n");
                for (i, m) in matrices.iter().enumerate() {
                    out += &format!("E{}:\n{}\n", i + 1, m.to_text());
                }
            }
            None => {}
        }
        for c in &self.checks {
            let tag = match (c.passed, c.expected_failure) {
                (true, false) => "PASS ",
                (false, true) => "XFAIL",
                (false, false) => "FAIL ",
                (true, true) => "XPASS",
            };
            out += &format!("{tag} [{}] {}", c.suite, c.name);
            if let Some(d) = c.detail.as_ref().filter(|_| !c.ok()) {
                out += &format!(" ({d})");
            }
            out.push('\n');
        }
        if !self.checks.is_empty() {
            let k = &self.counters;
            out += &format!(
                "{} checks: {} passed, {} failed, {} expected failures, {:.0} ms\n",
                k.total, k.passed, k.failed, k.expected_failures, self.wall_time_ms
            );
        }
        out
    }
}

pub fn cmd_classify(p: usize, q: usize) -> Result<Report> {
    let start = Instant::now();
    let record = classify(p, q)?;
    let quotient = if (p + q) % 2 == 1 {
        QuotientPayload { complex: quotient_record(p, q, Field::Complex).ok(), real: quotient_record(p, q, Field::Real).ok() }
    } else {
        QuotientPayload { complex: None, real: None }
    };
    let cmd = vec!["classify".into(), p.to_string(), q.to_string()];
    Ok(Report::new(cmd, Vec::new(), Some(Payload::Classify { record, quotient }), start))
}

pub fn cmd_spinbasis(n: usize, max_n: usize) -> Result<Report> {
    let start = Instant::now();
    if n > max_n {
        return Err(Error::CapExceeded(n, max_n));
    }
    let b = spinbasis(n)?;
    let cmd = vec!["spinbasis".into(), n.to_string()];
    Ok(Report::new(cmd, Vec::new(), Some(Payload::Spinbasis { n, side: b.side(), matrices: b.mats }), start))
}

/// `None` runs every suite.
pub fn cmd_verify(suite: Option<Suite>, cfg: &VerifyConfig) -> Report {
    let start = Instant::now();
    let suites: Vec<Suite> = suite.map_or_else(|| Suite::ALL.to_vec(), |s| vec![s]);
    let checks = verify::run(&suites, cfg);
    let cmd = vec![
        "verify".into(),
        suite.map_or("all", Suite::name).into(),
        format!("--max-n={}", cfg.max_n),
        format!("--seed={}", cfg.seed),
    ];
    Report::new(cmd, checks, None, start)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_reports() {
        let r = cmd_classify(3, 0).unwrap();
        assert!(r.ok);
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["data"]["record"]["ring"], "C");
        assert_eq!(json["data"]["quotient"]["complex"]["class"], "c");
        assert!(cmd_classify(0, 0).is_err());
    }

    #[test]
    fn spinbasis_cap() {
        assert_eq!(cmd_spinbasis(9, 8).unwrap_err(), Error::CapExceeded(9, 8));
        let r = cmd_spinbasis(3, 8).unwrap();
        assert!(r.to_text().contains("E3"));
    }

    #[test]
    fn counters() {
        let r = cmd_verify(Some(Suite::Neutrino), &VerifyConfig::default());
        assert_eq!(r.counters.total, r.checks.len());
        assert_eq!(r.exit_code(), 0);
    }
}
