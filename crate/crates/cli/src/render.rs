//! Output rendering for every subcommand/format pair.
//!
//! All writers consume pre-ordered data, so identical invocations produce
//! byte-identical output regardless of how many verification workers ran.
//!
//! JSON-lines schemas (all records carry `"v":1`):
//! - poly:     `{"v":1,"kind":"Gamma","n":2,"exponent":0,"coefficient":1}`
//! - verify:   `{"v":1,"type":"report","n":3,"checks":[{"name":"theorem1","pass":true,"detail":null}]}`
//!             ending with `{"v":1,"type":"summary","total":…,"fully_passed":…,"counts":[…]}`
//! - sequence: `{"v":1,"stat":"r2","n":1,"value":4}`
//! - triples:  `{"v":1,"x":3,"y":4,"z":5}`

use std::io::{self, Write};

use serde::Serialize;

use qsquares::{CenteredPolynomial, CheckResult, TripleWitness, VerificationReport, VerificationSummary};

const SCHEMA_VERSION: u32 = 1;

// ---- poly ----

pub fn poly_human(out: &mut impl Write, poly: &CenteredPolynomial) -> io::Result<()> {
    writeln!(out, "{poly}")
}

pub fn poly_csv(out: &mut impl Write, poly: &CenteredPolynomial) -> io::Result<()> {
    writeln!(out, "exponent,coefficient")?;
    for (exponent, coefficient) in poly.dense_terms() {
        writeln!(out, "{exponent},{coefficient}")?;
    }
    Ok(())
}

#[derive(Serialize)]
struct PolyTermRecord<'a> {
    v: u32,
    kind: &'a str,
    n: u64,
    exponent: u64,
    coefficient: i64,
}

pub fn poly_jsonlines(out: &mut impl Write, poly: &CenteredPolynomial) -> io::Result<()> {
    for (exponent, coefficient) in poly.dense_terms() {
        let record = PolyTermRecord {
            v: SCHEMA_VERSION,
            kind: poly.kind().as_str(),
            n: poly.center(),
            exponent,
            coefficient,
        };
        serde_json::to_writer(&mut *out, &record)?;
        writeln!(out)?;
    }
    Ok(())
}

// ---- verify ----

fn check_status(check: &CheckResult) -> &'static str {
    if check.passed() {
        "pass"
    } else {
        "FAIL"
    }
}

pub fn summary_line(summary: &VerificationSummary) -> String {
    format!("{}/{} pass", summary.fully_passed, summary.total)
}

pub fn verify_human(
    out: &mut impl Write,
    reports: &[VerificationReport],
    summary: &VerificationSummary,
) -> io::Result<()> {
    for report in reports {
        write!(out, "n={}", report.n)?;
        for check in &report.checks {
            write!(out, " {}={}", check.name(), check_status(check))?;
        }
        writeln!(out)?;
    }
    for counts in &summary.counts {
        writeln!(out, "{}: {} pass, {} fail", counts.name, counts.passed, counts.failed)?;
    }
    writeln!(out, "{}", summary_line(summary))
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn verify_csv(out: &mut impl Write, reports: &[VerificationReport]) -> io::Result<()> {
    writeln!(out, "n,check,result,detail")?;
    for report in reports {
        for check in &report.checks {
            writeln!(
                out,
                "{},{},{},{}",
                report.n,
                check.name(),
                if check.passed() { "pass" } else { "fail" },
                csv_field(check.detail().unwrap_or("")),
            )?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct CheckRecord<'a> {
    name: &'a str,
    pass: bool,
    detail: Option<&'a str>,
}

#[derive(Serialize)]
struct ReportRecord<'a> {
    v: u32,
    #[serde(rename = "type")]
    record: &'a str,
    n: u64,
    checks: Vec<CheckRecord<'a>>,
}

#[derive(Serialize)]
struct CountRecord<'a> {
    check: &'a str,
    pass: u64,
    fail: u64,
}

#[derive(Serialize)]
struct SummaryRecord<'a> {
    v: u32,
    #[serde(rename = "type")]
    record: &'a str,
    total: u64,
    fully_passed: u64,
    counts: Vec<CountRecord<'a>>,
}

pub fn verify_jsonlines(
    out: &mut impl Write,
    reports: &[VerificationReport],
    summary: &VerificationSummary,
) -> io::Result<()> {
    for report in reports {
        let record = ReportRecord {
            v: SCHEMA_VERSION,
            record: "report",
            n: report.n,
            checks: report
                .checks
                .iter()
                .map(|c| CheckRecord { name: c.name().as_str(), pass: c.passed(), detail: c.detail() })
                .collect(),
        };
        serde_json::to_writer(&mut *out, &record)?;
        writeln!(out)?;
    }
    let record = SummaryRecord {
        v: SCHEMA_VERSION,
        record: "summary",
        total: summary.total,
        fully_passed: summary.fully_passed,
        counts: summary
            .counts
            .iter()
            .map(|c| CountRecord { check: c.name.as_str(), pass: c.passed, fail: c.failed })
            .collect(),
    };
    serde_json::to_writer(&mut *out, &record)?;
    writeln!(out)
}

/// Counterexample details go to the diagnostic stream whatever the format.
pub fn failures_to_stderr(reports: &[VerificationReport]) {
    for report in reports {
        for check in &report.checks {
            if !check.passed() {
                eprintln!(
                    "FAIL n={} {}: {}",
                    report.n,
                    check.name(),
                    check.detail().unwrap_or("(no detail)")
                );
            }
        }
    }
}

// ---- sequence ----

pub fn sequence_human(
    out: &mut impl Write,
    values: impl Iterator<Item = (u64, i64)>,
) -> io::Result<()> {
    let rendered: Vec<String> = values.map(|(_, v)| v.to_string()).collect();
    writeln!(out, "{}", rendered.join(","))
}

pub fn sequence_csv(
    out: &mut impl Write,
    values: impl Iterator<Item = (u64, i64)>,
) -> io::Result<()> {
    writeln!(out, "n,value")?;
    for (n, value) in values {
        writeln!(out, "{n},{value}")?;
    }
    Ok(())
}

#[derive(Serialize)]
struct SequenceRecord<'a> {
    v: u32,
    stat: &'a str,
    n: u64,
    value: i64,
}

pub fn sequence_jsonlines(
    out: &mut impl Write,
    stat: &str,
    values: impl Iterator<Item = (u64, i64)>,
) -> io::Result<()> {
    for (n, value) in values {
        let record = SequenceRecord { v: SCHEMA_VERSION, stat, n, value };
        serde_json::to_writer(&mut *out, &record)?;
        writeln!(out)?;
    }
    Ok(())
}

pub fn sequence_bfile(
    out: &mut impl Write,
    values: impl Iterator<Item = (u64, i64)>,
) -> io::Result<()> {
    for (n, value) in values {
        writeln!(out, "{n} {value}")?;
    }
    Ok(())
}

// ---- triples ----

pub fn triples_human(out: &mut impl Write, triples: &[TripleWitness]) -> io::Result<()> {
    for w in triples {
        writeln!(out, "({}, {}, {})", w.x(), w.y(), w.z())?;
    }
    Ok(())
}

pub fn triples_csv(out: &mut impl Write, triples: &[TripleWitness]) -> io::Result<()> {
    writeln!(out, "x,y,z")?;
    for w in triples {
        writeln!(out, "{},{},{}", w.x(), w.y(), w.z())?;
    }
    Ok(())
}

#[derive(Serialize)]
struct TripleRecord {
    v: u32,
    x: u64,
    y: u64,
    z: u64,
}

pub fn triples_jsonlines(out: &mut impl Write, triples: &[TripleWitness]) -> io::Result<()> {
    for w in triples {
        let record = TripleRecord { v: SCHEMA_VERSION, x: w.x(), y: w.y(), z: w.z() };
        serde_json::to_writer(&mut *out, &record)?;
        writeln!(out)?;
    }
    Ok(())
}
