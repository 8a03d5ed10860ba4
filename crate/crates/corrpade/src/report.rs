//! Run configuration and tabular output of amplitude sequences.

use crate::corpus::Problem;
use crate::error::SchemeError;
use crate::num;
use crate::pade::ExtReal;
use crate::scheme::{self, AmplitudeSequence, SchemeTag};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Significant digits written for amplitudes and errors.
pub const OUTPUT_DIGITS: usize = 10;
pub const MIN_PRECISION_DIGITS: u32 = 30;
/// Order used when none is requested, capped by what the coefficients allow.
pub const DEFAULT_MAX_ORDER: usize = 20;

pub const CSV_HEADER: &str = "problem,scheme,n,amplitude,valid,percent_error";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SchemeChoice {
    Standard,
    Corrected,
    Both,
}

impl SchemeChoice {
    pub fn tags(self) -> Vec<SchemeTag> {
        match self {
            SchemeChoice::Standard => vec![SchemeTag::Standard],
            SchemeChoice::Corrected => vec![SchemeTag::Corrected],
            SchemeChoice::Both => vec![SchemeTag::Standard, SchemeTag::Corrected],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub problems: Vec<Problem>,
    pub scheme: SchemeChoice,
    /// `None` picks `min(DEFAULT_MAX_ORDER, supported)` per scheme.
    pub max_order: Option<usize>,
    pub precision_digits: u32,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), SchemeError> {
        if self.precision_digits < MIN_PRECISION_DIGITS {
            return Err(SchemeError::Unsupported(format!(
                "precision must be at least {MIN_PRECISION_DIGITS} digits, got {}",
                self.precision_digits
            )));
        }
        if self.problems.is_empty() {
            return Err(SchemeError::Unsupported("no problem selected".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub problem: String,
    pub scheme: SchemeTag,
    pub n: usize,
    /// Decimal string, `inf`/`-inf`, or `invalid`.
    pub amplitude: String,
    pub valid: bool,
    pub percent_error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub precision_digits: u32,
    pub records: Vec<Record>,
}

pub fn records(seq: &AmplitudeSequence) -> Vec<Record> {
    seq.entries
        .iter()
        .map(|e| Record {
            problem: seq.problem_id.clone(),
            scheme: seq.scheme,
            n: e.n,
            amplitude: match &e.amplitude {
                Some(ExtReal::Finite(v)) if !v.is_nan() => num::format_sig(v, OUTPUT_DIGITS),
                Some(ExtReal::PosInf) => "inf".into(),
                Some(ExtReal::NegInf) => "-inf".into(),
                _ => "invalid".into(),
            },
            valid: e.valid,
            percent_error: e.percent_error.as_ref().map(|v| num::format_sig(v, OUTPUT_DIGITS)),
        })
        .collect()
}

fn sequence(p: &Problem, tag: SchemeTag, max_order: Option<usize>, digits: u32) -> Result<AmplitudeSequence, SchemeError> {
    let supported = match tag {
        SchemeTag::Standard => scheme::max_standard_order(p),
        SchemeTag::Corrected => scheme::max_corrected_order(p),
    };
    let n = max_order.unwrap_or_else(|| supported.unwrap_or(DEFAULT_MAX_ORDER).min(DEFAULT_MAX_ORDER));
    let prec = num::bits_for_digits(num::digits_for_order(digits, n));
    match tag {
        SchemeTag::Standard => scheme::standard_amplitudes(p, n, prec),
        SchemeTag::Corrected => scheme::corrected_for(p, n, prec),
    }
}

/// Runs every selected problem and scheme; records are ordered by problem, then scheme, then order.
pub fn run(config: &RunConfig) -> Result<Report, SchemeError> {
    config.validate()?;
    let jobs: Vec<(&Problem, SchemeTag)> = config
        .problems
        .iter()
        .flat_map(|p| config.scheme.tags().into_iter().map(move |t| (p, t)))
        .collect();
    let seqs = jobs
        .par_iter()
        .map(|(p, t)| sequence(p, *t, config.max_order, config.precision_digits))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Report { precision_digits: config.precision_digits, records: seqs.iter().flat_map(records).collect() })
}

impl Report {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.records {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                r.problem,
                r.scheme.as_str(),
                r.n,
                r.amplitude,
                r.valid,
                r.percent_error.as_deref().unwrap_or("")
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data");
        s.push('\n');
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn config(ids: &[&str], scheme: SchemeChoice, max_order: Option<usize>) -> RunConfig {
        RunConfig {
            problems: ids.iter().map(|id| corpus::find(id).unwrap()).collect(),
            scheme,
            max_order,
            precision_digits: 40,
        }
    }

    #[test]
    fn csv_and_json_carry_the_same_payload() {
        let r = run(&config(&["correlation"], SchemeChoice::Both, Some(4))).unwrap();
        let csv = r.to_csv();
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(lines.len(), 1 + r.records.len());
        for (line, rec) in lines[1..].iter().zip(&r.records) {
            let cols: Vec<&str> = line.split(',').collect();
            assert_eq!(cols[3], rec.amplitude);
            assert_eq!(cols[5], rec.percent_error.as_deref().unwrap_or(""));
        }
    }

    #[test]
    fn minimal_corrected_run_is_the_control_amplitude() {
        let r = run(&config(&["mittag_leffler"], SchemeChoice::Corrected, Some(0))).unwrap();
        assert_eq!(r.records.len(), 1);
        let p = corpus::find("mittag_leffler").unwrap();
        let a0 = p.control(num::bits_for_digits(40)).unwrap().amplitude().unwrap();
        assert_eq!(r.records[0].amplitude, num::format_sig(&a0, OUTPUT_DIGITS));
    }

    #[test]
    fn invalid_orders_are_written() {
        let r = run(&config(&["particle_in_box"], SchemeChoice::Standard, Some(6))).unwrap();
        assert!(r.records.iter().any(|x| !x.valid));
        assert!(r.records.iter().filter(|x| !x.valid).all(|x| x.percent_error.is_none()));
    }

    #[test]
    fn rejects_low_precision_and_overflow() {
        let mut c = config(&["schwinger"], SchemeChoice::Corrected, Some(9));
        assert!(matches!(run(&c), Err(SchemeError::InsufficientCoefficients { .. })));
        c.precision_digits = 10;
        assert!(run(&c).is_err());
    }

    #[test]
    fn deterministic() {
        let c = config(&["debye", "wilson_loop"], SchemeChoice::Both, Some(6));
        assert_eq!(run(&c).unwrap().to_csv(), run(&c).unwrap().to_csv());
    }
}
