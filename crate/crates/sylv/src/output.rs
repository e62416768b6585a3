//! Rendering to the three output formats. JSON carries every integer as a
//! decimal string; CSV is RFC-4180 with a mandatory header row and LF line
//! endings; table is for people. All renderings are byte-deterministic.

use num_bigint::BigInt;
use serde::Serialize;
use sylvester::gaps::GapSet;
use sylvester::identities::VerifyReport;
use sylvester::representability::{GapCertificate, RepWitness};
use sylvester::sylvester_sums::SumTable;
use sylvester::CoprimePair;

use crate::Format;

fn json(doc: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("serialization cannot fail");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct FrobeniusDoc {
    a: String,
    b: String,
    frobenius: String,
    sylvester_number: String,
}

pub fn render_frobenius(pair: &CoprimePair, format: Format) -> String {
    let g = sylvester::gaps::frobenius(pair);
    let n = sylvester::gaps::sylvester_number(pair);
    match format {
        Format::Table => format!("g={g} n={n}\n"),
        Format::Csv => format!(
            "a,b,frobenius,sylvester_number\n{},{},{g},{n}\n",
            pair.a(),
            pair.b()
        ),
        Format::Json => json(&FrobeniusDoc {
            a: pair.a().to_string(),
            b: pair.b().to_string(),
            frobenius: g.to_string(),
            sylvester_number: n.to_string(),
        }),
    }
}

#[derive(Serialize)]
struct WitnessDoc {
    x: String,
    y: String,
}

#[derive(Serialize)]
struct CertificateDoc {
    a1: String,
    b1: String,
}

#[derive(Serialize)]
struct CheckDoc {
    a: String,
    b: String,
    n: String,
    method: String,
    representable: bool,
    count: String,
    witness: Option<WitnessDoc>,
    certificate: Option<CertificateDoc>,
}

#[allow(clippy::too_many_arguments)]
pub fn render_check(
    pair: &CoprimePair,
    n: &BigInt,
    method: &str,
    representable: bool,
    count: &BigInt,
    witness: &Option<RepWitness>,
    certificate: &Option<GapCertificate>,
    format: Format,
) -> String {
    match format {
        Format::Table => match (witness, certificate) {
            (Some(w), _) => format!("representable count={count} witness=({},{})\n", w.x, w.y),
            (_, Some(c)) => format!("gap count={count} certificate=({},{})\n", c.a1, c.b1),
            _ => unreachable!("exactly one of witness/certificate exists"),
        },
        Format::Csv => {
            let (x, y) = witness
                .as_ref()
                .map(|w| (w.x.to_string(), w.y.to_string()))
                .unwrap_or_default();
            let (a1, b1) = certificate
                .as_ref()
                .map(|c| (c.a1.to_string(), c.b1.to_string()))
                .unwrap_or_default();
            format!(
                "a,b,n,method,representable,count,x,y,a1,b1\n{},{},{n},{method},{representable},{count},{x},{y},{a1},{b1}\n",
                pair.a(),
                pair.b()
            )
        }
        Format::Json => json(&CheckDoc {
            a: pair.a().to_string(),
            b: pair.b().to_string(),
            n: n.to_string(),
            method: method.to_string(),
            representable,
            count: count.to_string(),
            witness: witness.as_ref().map(|w| WitnessDoc {
                x: w.x.to_string(),
                y: w.y.to_string(),
            }),
            certificate: certificate.as_ref().map(|c| CertificateDoc {
                a1: c.a1.to_string(),
                b1: c.b1.to_string(),
            }),
        }),
    }
}

#[derive(Serialize)]
struct GapsDoc {
    a: String,
    b: String,
    frobenius: String,
    count: String,
    gaps: Vec<String>,
}

pub fn render_gaps(set: &GapSet, format: Format) -> String {
    match format {
        Format::Table => {
            let mut s = format!(
                "a={} b={} frobenius={} count={}\n",
                set.a, set.b, set.frobenius, set.cardinality
            );
            if !set.elements.is_empty() {
                let list: Vec<String> = set.elements.iter().map(u64::to_string).collect();
                s.push_str(&list.join(" "));
                s.push('\n');
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("gap\n");
            for g in &set.elements {
                s.push_str(&g.to_string());
                s.push('\n');
            }
            s
        }
        Format::Json => json(&GapsDoc {
            a: set.a.to_string(),
            b: set.b.to_string(),
            frobenius: set.frobenius.to_string(),
            count: set.cardinality.to_string(),
            gaps: set.elements.iter().map(u64::to_string).collect(),
        }),
    }
}

#[derive(Serialize)]
struct SumsDoc {
    a: String,
    b: String,
    method: String,
    sums: Vec<String>,
}

pub fn render_sums(table: &SumTable, format: Format) -> String {
    match format {
        Format::Table => {
            let mut s = String::new();
            for (m, v) in table.values.iter().enumerate() {
                s.push_str(&format!("S_{m} = {v}\n"));
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("index,value\n");
            for (m, v) in table.values.iter().enumerate() {
                s.push_str(&format!("{m},{v}\n"));
            }
            s
        }
        Format::Json => json(&SumsDoc {
            a: table.a.to_string(),
            b: table.b.to_string(),
            method: table.method.as_str().to_string(),
            sums: table.values.iter().map(BigInt::to_string).collect(),
        }),
    }
}

#[derive(Serialize)]
struct CheckRecordDoc {
    name: String,
    parameters: String,
    passed: bool,
    lhs: String,
    rhs: String,
}

pub fn render_verify(report: &VerifyReport, format: Format) -> String {
    match format {
        Format::Table => {
            let mut s = String::new();
            for c in &report.checks {
                if c.passed {
                    s.push_str(&format!("[ OK ] {} {}\n", c.name, c.parameters));
                } else {
                    s.push_str(&format!(
                        "[FAIL] {} {} lhs={} rhs={}\n",
                        c.name, c.parameters, c.lhs, c.rhs
                    ));
                }
            }
            let failed = report.checks.iter().filter(|c| !c.passed).count();
            if failed == 0 {
                s.push_str(&format!("{} checks, all passed\n", report.checks.len()));
            } else {
                s.push_str(&format!("{} checks, {failed} FAILED\n", report.checks.len()));
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("name,parameters,passed,lhs,rhs\n");
            for c in &report.checks {
                debug_assert!(!c.parameters.contains(','), "parameters stay comma-free");
                s.push_str(&format!(
                    "{},{},{},{},{}\n",
                    c.name, c.parameters, c.passed, c.lhs, c.rhs
                ));
            }
            s
        }
        Format::Json => {
            let docs: Vec<CheckRecordDoc> = report
                .checks
                .iter()
                .map(|c| CheckRecordDoc {
                    name: c.name.clone(),
                    parameters: c.parameters.clone(),
                    passed: c.passed,
                    lhs: c.lhs.clone(),
                    rhs: c.rhs.clone(),
                })
                .collect();
            json(&docs)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: i64, b: i64) -> CoprimePair {
        CoprimePair::new(BigInt::from(a), BigInt::from(b)).unwrap()
    }

    #[test]
    fn frobenius_table_line() {
        assert_eq!(render_frobenius(&pair(3, 5), Format::Table), "g=7 n=4\n");
        assert_eq!(
            render_frobenius(&pair(3, 5), Format::Csv),
            "a,b,frobenius,sylvester_number\n3,5,7,4\n"
        );
    }

    #[test]
    fn gaps_csv_has_header_even_when_empty() {
        let set = sylvester::gaps::enumerate_gaps_chi(&pair(1, 5), 100).unwrap();
        assert_eq!(render_gaps(&set, Format::Csv), "gap\n");
    }

    #[test]
    fn verify_table_flags_failures() {
        let mut report = VerifyReport::default();
        report.record("demo", "p=1".into(), "2".into(), "3".into());
        let rendered = render_verify(&report, Format::Table);
        assert!(rendered.contains("[FAIL] demo p=1 lhs=2 rhs=3"));
        assert!(rendered.contains("1 checks, 1 FAILED"));
    }
}
