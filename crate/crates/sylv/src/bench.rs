//! Bench harness: times the recursive pipeline against enumeration on a
//! list of pairs, cross-checking values whenever both routes run.

use std::path::Path;
use std::time::Instant;

use num_bigint::BigInt;
use sylvester::sylvester_sums::{sylvester_sum_enumerate, sylvester_sums_recursive};
use sylvester::CoprimePair;

use crate::CliError;

pub struct BenchRow {
    pub a: String,
    pub b: String,
    pub m: u32,
    pub method: &'static str,
    pub wall_time_ns: u128,
    pub value_digits: usize,
}

/// Reads a CSV pairs file: mandatory header `a,b`, one pair per row.
/// Any malformed or non-coprime row is an input error naming its line.
pub fn parse_pairs_file(path: &Path) -> Result<Vec<CoprimePair>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    let mut lines = text.lines().enumerate();
    let Some((_, header)) = lines.next() else {
        return Err(CliError::input("pairs file is empty; expected header a,b"));
    };
    if header.trim() != "a,b" {
        return Err(CliError::input(format!(
            "pairs file must start with the header \"a,b\", found {header:?}"
        )));
    }
    let mut pairs = Vec::new();
    for (idx, line) in lines {
        let line_no = idx + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        let [a, b] = fields.as_slice() else {
            return Err(CliError::input(format!(
                "line {line_no}: expected exactly two comma-separated values, found {line:?}"
            )));
        };
        let parse = |s: &str| -> Result<BigInt, CliError> {
            s.trim()
                .parse::<BigInt>()
                .map_err(|_| CliError::input(format!("line {line_no}: not an integer: {s:?}")))
        };
        let pair = CoprimePair::new(parse(a)?, parse(b)?)
            .map_err(|e| CliError::input(format!("line {line_no}: {e}")))?;
        pairs.push(pair);
    }
    Ok(pairs)
}

fn median(mut times: Vec<u128>) -> u128 {
    times.sort_unstable();
    times[(times.len() - 1) / 2]
}

/// Times the recursive route for every pair, and the enumeration route for
/// pairs within the cell budget. A value mismatch between the routes kills
/// the whole report rather than getting written down.
pub fn run(
    pairs: &[CoprimePair],
    m: u32,
    repetitions: u32,
    max_cells: u64,
) -> Result<Vec<BenchRow>, CliError> {
    if repetitions == 0 {
        return Err(CliError::input("repetitions must be at least 1"));
    }
    let mut rows = Vec::new();
    for pair in pairs {
        let mut times = Vec::with_capacity(repetitions as usize);
        let mut table = None;
        for _ in 0..repetitions {
            let start = Instant::now();
            table = Some(sylvester_sums_recursive(pair, m)?);
            times.push(start.elapsed().as_nanos());
        }
        let table = table.expect("repetitions >= 1");
        let recursive_value = table.values[m as usize].clone();
        rows.push(BenchRow {
            a: pair.a().to_string(),
            b: pair.b().to_string(),
            m,
            method: "recursive",
            wall_time_ns: median(times),
            value_digits: recursive_value.to_string().len(),
        });

        if pair.product() > BigInt::from(max_cells) {
            eprintln!(
                "note: enumeration skipped for ({}, {}): {} cells exceed the budget of {max_cells}",
                pair.a(),
                pair.b(),
                pair.product()
            );
            continue;
        }
        let mut times = Vec::with_capacity(repetitions as usize);
        let mut value = None;
        for _ in 0..repetitions {
            let start = Instant::now();
            value = Some(sylvester_sum_enumerate(pair, m, max_cells)?);
            times.push(start.elapsed().as_nanos());
        }
        let value = value.expect("repetitions >= 1");
        if value != recursive_value {
            return Err(CliError {
                code: 4,
                message: format!(
                    "sum routes disagree for ({}, {}) at m={m}: recursive={recursive_value}, \
                     enumerate={value}; refusing to emit a report",
                    pair.a(),
                    pair.b()
                ),
            });
        }
        rows.push(BenchRow {
            a: pair.a().to_string(),
            b: pair.b().to_string(),
            m,
            method: "enumerate",
            wall_time_ns: median(times),
            value_digits: value.to_string().len(),
        });
    }
    Ok(rows)
}

pub fn render_csv(rows: &[BenchRow]) -> String {
    let environment = format!("{}-{}", std::env::consts::OS, std::env::consts::ARCH);
    let mut s = String::from("a,b,m,method,wall_time_ns,value_digits,environment\n");
    for r in rows {
        s.push_str(&format!(
            "{},{},{},{},{},{},{environment}\n",
            r.a, r.b, r.m, r.method, r.wall_time_ns, r.value_digits
        ));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_takes_the_middle_element() {
        assert_eq!(median(vec![5]), 5);
        assert_eq!(median(vec![9, 1, 5]), 5);
        assert_eq!(median(vec![4, 1, 9, 6]), 4, "even counts take the lower middle");
    }

    #[test]
    fn bench_rows_cover_both_routes_when_affordable() {
        let pair = CoprimePair::new(BigInt::from(3), BigInt::from(5)).unwrap();
        let rows = run(&[pair], 3, 1, 1000).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].method, "recursive");
        assert_eq!(rows[1].method, "enumerate");
        // S_3(3, 5) = 416: three digits either way
        assert_eq!(rows[0].value_digits, 3);
        assert_eq!(rows[1].value_digits, 3);
    }

    #[test]
    fn bench_skips_enumeration_over_budget() {
        let pair = CoprimePair::new(BigInt::from(3), BigInt::from(5)).unwrap();
        let rows = run(&[pair], 2, 1, 10).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].method, "recursive");
    }
}
