//! Batch solving: one equation per input line, one JSON record per output line.

use std::fs::{self, OpenOptions};
use std::io::{self, Write};

use anyhow::Context;
use fermat_descent::{solve, BigInt, RecordStatus, ReportRecord, SearchBounds};
use rayon::prelude::*;

use crate::args::{build_equation, BatchArgs};
use crate::{exit, now, Failure, Outcome};

/// `A,B,C,p[,d_max,a_max]`
fn parse_line(line: &str, defaults: &SearchBounds) -> Result<(BigInt, BigInt, BigInt, u32, SearchBounds), String> {
    let fields: Vec<&str> = line.split(',').map(str::trim).collect();
    if fields.len() != 4 && fields.len() != 6 {
        return Err(format!("expected A,B,C,p[,d_max,a_max], got {} fields", fields.len()));
    }
    let int = |s: &str| s.parse::<BigInt>().map_err(|e| format!("bad integer {s:?}: {e}"));
    let num = |s: &str| s.parse::<u64>().map_err(|e| format!("bad bound {s:?}: {e}"));
    let p = fields[3].parse::<u32>().map_err(|e| format!("bad exponent {:?}: {e}", fields[3]))?;
    let mut bounds = defaults.clone();
    if fields.len() == 6 {
        bounds.d_max = num(fields[4])?;
        bounds.a_max = num(fields[5])?;
    }
    Ok((int(fields[0])?, int(fields[1])?, int(fields[2])?, p, bounds))
}

pub(crate) fn process_line(line: &str, defaults: &SearchBounds, relaxed: bool, timestamp: Option<u64>) -> ReportRecord {
    let input = Some(line.to_owned());
    let (a, b, c, p, bounds) = match parse_line(line, defaults) {
        Ok(parsed) => parsed,
        Err(e) => return ReportRecord::failure(RecordStatus::ParseError, input, defaults.clone(), e, timestamp),
    };
    let eq = match build_equation(a, b, c, p, relaxed) {
        Ok(eq) => eq,
        Err(e) => return ReportRecord::failure(RecordStatus::ValidationError, input, bounds, e.to_string(), timestamp),
    };
    match solve(&eq, &bounds) {
        Ok(report) => ReportRecord::from_report(report, input, timestamp),
        Err(e) => ReportRecord::failure(RecordStatus::ValidationError, input, bounds, e.to_string(), timestamp),
    }
}

pub fn run(args: BatchArgs) -> Outcome {
    let defaults = args.bounds.resolve().map_err(Failure::Validation)?;
    let text = fs::read_to_string(&args.input).with_context(|| format!("cannot read {}", args.input.display()))?;
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let timestamp = if args.canonical { None } else { now() };

    let records: Vec<ReportRecord> = lines
        .par_iter()
        .map(|line| process_line(line, &defaults, args.relaxed, timestamp))
        .collect();

    let mut sink: Box<dyn Write> = match &args.output {
        Some(path) => Box::new(
            OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)
                .with_context(|| format!("cannot open {}", path.display()))?,
        ),
        None => Box::new(io::stdout().lock()),
    };
    for rec in &records {
        writeln!(sink, "{}", rec.to_json()).context("cannot write batch output")?;
    }
    sink.flush().context("cannot write batch output")?;
    Ok(exit::OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_parsing() {
        let d = SearchBounds::default();
        let (a, _, c, p, b) = parse_line("2, 9, -11, 5", &d).unwrap();
        assert_eq!((a, c, p), (BigInt::from(2), BigInt::from(-11), 5));
        assert_eq!(b, d);
        let (.., b) = parse_line("2,9,11,5,3,500", &d).unwrap();
        assert_eq!((b.d_max, b.a_max), (3, 500));
        assert!(parse_line("2,9,11", &d).is_err());
        assert!(parse_line("2,9,11,five", &d).is_err());
    }

    #[test]
    fn per_line_failures_are_records() {
        let d = SearchBounds::new(1, 100);
        let rec = process_line("2,4,11,5", &d, false, None);
        assert_eq!(rec.status, RecordStatus::ValidationError);
        assert!(rec.report.is_none());
        let rec = process_line("nonsense", &d, false, None);
        assert_eq!(rec.status, RecordStatus::ParseError);
        let rec = process_line("2,9,11,5", &d, false, None);
        assert_eq!(rec.status, RecordStatus::Ok);
        let rec = process_line("2,9,11,5,0,10", &d, false, None);
        assert_eq!(rec.status, RecordStatus::ValidationError);
    }
}
