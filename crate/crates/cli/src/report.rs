//! Report emission. The CSV and JSON encoders are byte-deterministic: a
//! given record list always produces identical output, so runs with
//! different worker counts can be diffed directly.

use std::io::{self, Write};

use classnum::IdentityReport;

/// Pass/fail totals across a record list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Tally {
    pub checked: usize,
    pub passed: usize,
    pub failures: usize,
}

impl Tally {
    pub fn of(reports: &[IdentityReport]) -> Tally {
        let passed = reports.iter().filter(|r| r.pass).count();
        Tally {
            checked: reports.len(),
            passed,
            failures: reports.len() - passed,
        }
    }
}

pub fn summary_line(tally: &Tally) -> String {
    format!(
        "checked {} prime{}: {} pass, {} fail",
        tally.checked,
        if tally.checked == 1 { "" } else { "s" },
        tally.passed,
        tally.failures
    )
}

/// Human-readable table: one row per prime with values in lowest terms,
/// ending with the summary line.
pub fn emit_table<W: Write>(w: &mut W, reports: &[IdentityReport]) -> io::Result<()> {
    if !reports.is_empty() {
        writeln!(
            w,
            "{:>8}  {:<13} {:>14} {:>14}  result",
            "p", "identity", "lhs", "rhs"
        )?;
    }
    for r in reports {
        writeln!(
            w,
            "{:>8}  {:<13} {:>14} {:>14}  {}",
            r.prime,
            r.identity.id(),
            r.lhs.to_string(),
            r.rhs.to_string(),
            if r.pass { "pass" } else { "FAIL" }
        )?;
    }
    writeln!(w, "{}", summary_line(&Tally::of(reports)))
}

/// CSV with header `p,identity,lhs_twelfths,rhs_twelfths,pass`; values are
/// raw numerators over the fixed denominator 12.
pub fn emit_csv<W: Write>(w: &mut W, reports: &[IdentityReport]) -> io::Result<()> {
    writeln!(w, "p,identity,lhs_twelfths,rhs_twelfths,pass")?;
    for r in reports {
        writeln!(
            w,
            "{},{},{},{},{}",
            r.prime,
            r.identity.id(),
            r.lhs.numerator(),
            r.rhs.numerator(),
            r.pass
        )?;
    }
    Ok(())
}

/// JSON array of record objects followed by one summary object with totals.
pub fn emit_json<W: Write>(w: &mut W, reports: &[IdentityReport]) -> io::Result<()> {
    writeln!(w, "[")?;
    for r in reports {
        writeln!(
            w,
            "{{\"p\":{},\"identity\":\"{}\",\"lhs\":{{\"num\":{},\"den\":12}},\
             \"rhs\":{{\"num\":{},\"den\":12}},\"pass\":{}}},",
            r.prime,
            r.identity.id(),
            r.lhs.numerator(),
            r.rhs.numerator(),
            r.pass
        )?;
    }
    let tally = Tally::of(reports);
    writeln!(
        w,
        "{{\"checked\":{},\"passed\":{},\"failures\":{}}}",
        tally.checked, tally.passed, tally.failures
    )?;
    writeln!(w, "]")
}
