//! CSV and JSON rendering of run outcomes.
//!
//! CSV floats use 17 significant digits in scientific notation. JSON floats
//! use the shortest representation that parses back to the same bits. Key
//! order follows struct field order in both cases.

use super::config::Format;
use super::run::{MeanFieldReport, Outcome, SpectrumReport, TwoPhotonReport, VerifyReport};
use serde::Serialize;
use std::fmt::Write;

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub const SPECTRUM_HEADER: &str = "port,mode,order,re,im,power";

fn spectrum_csv(out: &mut String, r: &SpectrumReport) {
    out.push_str(SPECTRUM_HEADER);
    out.push('\n');
    for row in &r.rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            row.port,
            row.mode,
            row.order,
            num(row.re),
            num(row.im),
            num(row.power)
        );
    }
}

fn two_photon_csv(out: &mut String, r: &TwoPhotonReport) {
    out.push_str("# pairs\nport_a,mode_a,port_b,mode_b,re,im,probability\n");
    for p in &r.pairs {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            p.port_a,
            p.mode_a,
            p.port_b,
            p.mode_b,
            num(p.re),
            num(p.im),
            num(p.probability)
        );
    }
    let s = &r.sectors;
    let _ = writeln!(
        out,
        "# sectors\nnorm,both_port1,one_each,both_port2\n{},{},{},{}",
        num(r.norm),
        num(s.both_port1),
        num(s.one_each),
        num(s.both_port2)
    );
    out.push_str("# singular_values\nindex,value\n");
    for (i, v) in r.singular_values.iter().enumerate() {
        let _ = writeln!(out, "{i},{}", num(*v));
    }
}

fn mean_field_csv(out: &mut String, r: &MeanFieldReport) {
    out.push_str("# samples\nt,field\n");
    for s in &r.samples {
        let _ = writeln!(out, "{},{}", num(s.t), num(s.field));
    }
    out.push_str("# phasors\nmode,omega,re,im\n");
    for p in &r.phasors {
        let _ = writeln!(out, "{},{},{},{}", p.mode, num(p.omega), num(p.re), num(p.im));
    }
}

fn verify_csv(out: &mut String, r: &VerifyReport) {
    out.push_str("criterion,name,status,checks,worst_check,worst_deviation,tolerance\n");
    for c in &r.criteria {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            c.id,
            field(c.name),
            if c.passed { "PASS" } else { "FAIL" },
            c.checks,
            field(&c.worst_check),
            num(c.worst_deviation),
            num(c.worst_tolerance)
        );
    }
}

fn outcome_csv(out: &mut String, o: &Outcome) {
    match o {
        Outcome::Spectrum(r) => spectrum_csv(out, r),
        Outcome::TwoPhoton(r) => two_photon_csv(out, r),
        Outcome::MeanField(r) => mean_field_csv(out, r),
        Outcome::Verify(r) => verify_csv(out, r),
    }
}

#[derive(Serialize)]
struct Block<'a> {
    point: usize,
    #[serde(flatten)]
    report: &'a Outcome,
}

/// Renders all outcomes. With `swept`, CSV blocks are preceded by a
/// `# point=i` line and JSON becomes an array of objects tagged `point`.
pub fn emit(outcomes: &[Outcome], format: Format, swept: bool) -> String {
    match format {
        Format::Csv => {
            let mut out = String::new();
            for (i, o) in outcomes.iter().enumerate() {
                if swept {
                    let _ = writeln!(out, "# point={i}");
                }
                outcome_csv(&mut out, o);
            }
            out
        }
        Format::Json => {
            let rendered = if swept {
                let blocks: Vec<_> = outcomes
                    .iter()
                    .enumerate()
                    .map(|(point, report)| Block { point, report })
                    .collect();
                serde_json::to_string_pretty(&blocks)
            } else if let [one] = outcomes {
                serde_json::to_string_pretty(one)
            } else {
                serde_json::to_string_pretty(outcomes)
            };
            let mut s = rendered.expect("reports serialize to JSON");
            s.push('\n');
            s
        }
    }
}
