//! Table, NDJSON and CSV writers over the output records.
//!
//! All three formats carry the same numeric content. Integers are printed
//! as full decimal strings: no scientific notation, no truncation.

use std::io::{self, Write};

use clap::ValueEnum;

use crate::records::{DiscrepancyRecord, OutputRecord, RelationRecord, TripleRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

fn json_line<W: Write>(out: &mut W, record: &OutputRecord) -> io::Result<()> {
    let line = serde_json::to_string(record).expect("record serialization is infallible");
    writeln!(out, "{line}")
}

pub fn write_triples<W: Write>(
    out: &mut W,
    records: &[TripleRecord],
    format: Format,
) -> io::Result<()> {
    match format {
        Format::Table => {
            for r in records {
                if r.primitive {
                    writeln!(out, "{} {} {} d={} primitive", r.x, r.y, r.z, r.d)?;
                } else {
                    writeln!(out, "{} {} {} d={}", r.x, r.y, r.z, r.d)?;
                }
            }
        }
        Format::Json => {
            for r in records {
                json_line(out, &OutputRecord::Triple(r.clone()))?;
            }
        }
        Format::Csv => {
            writeln!(out, "x,y,z,d,primitive")?;
            for r in records {
                writeln!(out, "{},{},{},{},{}", r.x, r.y, r.z, r.d, r.primitive)?;
            }
        }
    }
    Ok(())
}

pub fn write_relation<W: Write>(
    out: &mut W,
    record: &RelationRecord,
    format: Format,
) -> io::Result<()> {
    match format {
        Format::Table => {
            if let Some(paths) = &record.paths {
                for (label, pair) in paths {
                    writeln!(
                        out,
                        "path {label}: y'={} z'={}",
                        pair.y_prime, pair.z_prime
                    )?;
                }
            }
            writeln!(
                out,
                "x={} m={} y'={} z'={} {}",
                record.x,
                record.m,
                record.y_prime,
                record.z_prime,
                if record.agreed { "agreed" } else { "DISAGREED" }
            )?;
        }
        Format::Json => json_line(out, &OutputRecord::Relation(record.clone()))?,
        Format::Csv => {
            writeln!(out, "x,m,y_prime,z_prime,agreed")?;
            writeln!(
                out,
                "{},{},{},{},{}",
                record.x, record.m, record.y_prime, record.z_prime, record.agreed
            )?;
        }
    }
    Ok(())
}

pub struct VerifySummary<'a> {
    pub lo: u64,
    pub hi: u64,
    pub mode: String,
    pub records: &'a [DiscrepancyRecord],
    pub clean: bool,
}

pub fn write_discrepancies<W: Write>(
    out: &mut W,
    summary: &VerifySummary<'_>,
    format: Format,
) -> io::Result<()> {
    match format {
        Format::Table => {
            for r in summary.records {
                write!(out, "x={}", r.x)?;
                if !r.missing.is_empty() {
                    let shown: Vec<String> = r.missing.iter().map(|t| t.compact()).collect();
                    write!(out, " missing={}", shown.join(" "))?;
                }
                if !r.spurious.is_empty() {
                    let shown: Vec<String> = r
                        .spurious
                        .iter()
                        .map(|s| format!("d={}:{}", s.d, s.reason))
                        .collect();
                    write!(out, " spurious={}", shown.join(" "))?;
                }
                writeln!(out)?;
            }
            writeln!(
                out,
                "checked {}..{} mode={} entries={} {}",
                summary.lo,
                summary.hi,
                summary.mode,
                summary.records.len(),
                if summary.clean { "clean" } else { "not clean" }
            )?;
        }
        Format::Json => {
            for r in summary.records {
                json_line(out, &OutputRecord::Discrepancy(r.clone()))?;
            }
        }
        Format::Csv => {
            writeln!(out, "x,missing,spurious")?;
            for r in summary.records {
                let missing: Vec<String> = r
                    .missing
                    .iter()
                    .map(|t| format!("{}:{}", t.y, t.z))
                    .collect();
                let spurious: Vec<String> = r
                    .spurious
                    .iter()
                    .map(|s| format!("{}={}", s.d, s.reason))
                    .collect();
                writeln!(out, "{},{},{}", r.x, missing.join(" "), spurious.join(" "))?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::records::PathRecord;

    fn triple(x: &str, y: &str, z: &str, d: &str, primitive: bool) -> TripleRecord {
        TripleRecord {
            x: x.into(),
            y: y.into(),
            z: z.into(),
            d: d.into(),
            primitive,
        }
    }

    #[test]
    fn table_marks_primitive_rows_only() {
        let mut out = Vec::new();
        let records = [
            triple("12", "5", "13", "8", true),
            triple("12", "9", "15", "6", false),
        ];
        write_triples(&mut out, &records, Format::Table).unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "12 5 13 d=8 primitive\n12 9 15 d=6\n"
        );
    }

    #[test]
    fn csv_has_header_and_rows() {
        let mut out = Vec::new();
        write_triples(&mut out, &[triple("3", "4", "5", "1", true)], Format::Csv).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "x,y,z,d,primitive\n3,4,5,1,true\n");
    }

    #[test]
    fn relation_table_lists_paths_when_present() {
        let mut out = Vec::new();
        let record = RelationRecord {
            x: "3".into(),
            m: "2".into(),
            y_prime: "40".into(),
            z_prime: "41".into(),
            paths: Some(std::collections::BTreeMap::from([(
                "direct".to_string(),
                PathRecord {
                    y_prime: "40".into(),
                    z_prime: "41".into(),
                },
            )])),
            agreed: true,
        };
        write_relation(&mut out, &record, Format::Table).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("path direct: y'=40 z'=41"));
        assert!(text.ends_with("x=3 m=2 y'=40 z'=41 agreed\n"));
    }
}
