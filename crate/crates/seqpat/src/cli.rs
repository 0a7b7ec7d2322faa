//! Text input format and command-line front end.
//!
//! An input document declares the level once and lists one sequence per
//! line:
//!
//! ```text
//! # three sequences of length 5
//! level: 3
//! 1 1 3 2 1
//! 3 3 1 2 3
//! 1 1 2 2 1
//! ```
//!
//! `#` starts a comment, symbols are positive integers separated by
//! whitespace or commas, and all rows must have the same length. Sequences
//! are rows here even though they read most naturally as columns of a
//! matrix; the transposition is purely notational.
//!
//! The `seqpat` binary dispatches into [`run`]; every command is also
//! callable programmatically through this module. Exit codes: 0 success,
//! 2 usage or parse error, 3 domain violation (fewer than two sequences),
//! 4 internal verification failure.

use std::fmt::Write as _;
use std::io::Write;

use serde_json::json;

use crate::core::{Pattern, Sequence, SequenceSet};
use crate::enumeration::{
    bell, count_patterns_burnside, count_standard_stirling, enumerate_standard, PatternCount,
};
use crate::error::{Error, Result};
use crate::extremal::{construct_mn, max_distance};
use crate::metric::{
    pattern_distance, pattern_distance_pair, sequence_distance, Algorithm, DistanceResult,
};

/// A parsed input document: a declared level and one symbol row per
/// sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputDocument {
    pub level: usize,
    pub rows: Vec<Vec<usize>>,
}

impl InputDocument {
    /// Parses the text format described in the module docs.
    pub fn parse(text: &str) -> Result<Self> {
        let mut level: Option<usize> = None;
        let mut rows: Vec<Vec<usize>> = Vec::new();
        for (index, raw) in text.lines().enumerate() {
            let line_no = index + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some(declared) = level else {
                let value = line.strip_prefix("level:").ok_or_else(|| Error::Parse {
                    line: line_no,
                    message: "expected 'level: <l>' header".into(),
                })?;
                let l: usize = value.trim().parse().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("invalid level '{}'", value.trim()),
                })?;
                if l < 1 {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "level must be at least 1".into(),
                    });
                }
                level = Some(l);
                continue;
            };
            let mut row = Vec::new();
            for token in line.split(|c: char| c.is_whitespace() || c == ',') {
                if token.is_empty() {
                    continue;
                }
                let symbol: usize = token.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("invalid symbol '{token}'"),
                })?;
                if symbol < 1 || symbol > declared {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("symbol {symbol} outside 1..={declared}"),
                    });
                }
                row.push(symbol);
            }
            if row.is_empty() {
                return Err(Error::Parse {
                    line: line_no,
                    message: "row contains no symbols".into(),
                });
            }
            if let Some(first) = rows.first() {
                if row.len() != first.len() {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!(
                            "row has {} symbols, expected {}",
                            row.len(),
                            first.len()
                        ),
                    });
                }
            }
            rows.push(row);
        }
        let level = level.ok_or(Error::Parse {
            line: 0,
            message: "missing 'level: <l>' header".into(),
        })?;
        Ok(InputDocument { level, rows })
    }

    pub fn from_sequence_set(q: &SequenceSet) -> Self {
        InputDocument {
            level: q.level(),
            rows: q
                .sequences()
                .iter()
                .map(|s| s.elements().to_vec())
                .collect(),
        }
    }

    /// Renders back to the text format; the output parses to an equal value.
    pub fn render(&self) -> String {
        let mut out = format!("level: {}\n", self.level);
        for row in &self.rows {
            let symbols: Vec<String> = row.iter().map(|s| s.to_string()).collect();
            let _ = writeln!(out, "{}", symbols.join(" "));
        }
        out
    }

    pub fn to_sequence_set(&self) -> Result<SequenceSet> {
        let sequences = self
            .rows
            .iter()
            .map(|row| Sequence::new(row.clone(), self.level))
            .collect::<Result<Vec<_>>>()?;
        SequenceSet::new(sequences)
    }
}

/// Exit status carrying a message for stderr.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Failure {
        let code = match err {
            Error::ArityError { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

const USAGE: &str = "\
usage: seqpat <command> [options]

commands:
  count --length <n> --level <l>     number of length-n level-l patterns
  distance <file> [--mode sequences|patterns]
                                     distance of the sequences in <file>
  standardize <file>                 standard form of each sequence in <file>
  maxdist <n> <l> <k>                maximal distance of k patterns
  generate <n> <l> <k>               a k-set attaining the maximal distance

options:
  --json                             one-line JSON output
  --verify                           cross-check counts by enumeration
  --witness                          print an optimal permutation tuple
  --algorithm <clique|brute|hungarian|auto>
                                     pattern-distance strategy (default auto)
";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum AlgorithmChoice {
    Clique,
    Brute,
    Hungarian,
    Auto,
}

struct Invocation {
    positionals: Vec<String>,
    json: bool,
    verify: bool,
    witness: bool,
    algorithm: AlgorithmChoice,
    length: Option<usize>,
    level: Option<usize>,
    mode: Option<String>,
    help: bool,
}

fn parse_args(args: &[String]) -> std::result::Result<Invocation, Failure> {
    let mut inv = Invocation {
        positionals: Vec::new(),
        json: false,
        verify: false,
        witness: false,
        algorithm: AlgorithmChoice::Auto,
        length: None,
        level: None,
        mode: None,
        help: false,
    };
    let mut iter = args.iter().peekable();
    let take_value = |iter: &mut std::iter::Peekable<std::slice::Iter<String>>,
                      flag: &str|
     -> std::result::Result<String, Failure> {
        iter.next()
            .cloned()
            .ok_or_else(|| usage(format!("{flag} requires a value")))
    };
    while let Some(arg) = iter.next() {
        match arg.as_str() {
            "--json" => inv.json = true,
            "--verify" => inv.verify = true,
            "--witness" => inv.witness = true,
            "--help" | "-h" => inv.help = true,
            "--algorithm" => {
                let value = take_value(&mut iter, "--algorithm")?;
                inv.algorithm = match value.as_str() {
                    "clique" => AlgorithmChoice::Clique,
                    "brute" => AlgorithmChoice::Brute,
                    "hungarian" => AlgorithmChoice::Hungarian,
                    "auto" => AlgorithmChoice::Auto,
                    other => return Err(usage(format!("unknown algorithm '{other}'"))),
                };
            }
            "--length" => {
                let value = take_value(&mut iter, "--length")?;
                inv.length = Some(parse_usize(&value, "--length")?);
            }
            "--level" => {
                let value = take_value(&mut iter, "--level")?;
                inv.level = Some(parse_usize(&value, "--level")?);
            }
            "--mode" => {
                let value = take_value(&mut iter, "--mode")?;
                if value != "sequences" && value != "patterns" {
                    return Err(usage(format!("unknown mode '{value}'")));
                }
                inv.mode = Some(value);
            }
            other if other.starts_with("--") => {
                return Err(usage(format!("unknown option '{other}'")));
            }
            other => inv.positionals.push(other.to_string()),
        }
    }
    Ok(inv)
}

fn parse_usize(value: &str, what: &str) -> std::result::Result<usize, Failure> {
    value
        .parse()
        .map_err(|_| usage(format!("{what} expects a nonnegative integer, got '{value}'")))
}

/// Parses and executes a command line, writing reports to `out` and errors
/// to stderr. Returns the process exit code.
pub fn run<W: Write>(args: &[String], out: &mut W) -> i32 {
    match execute(args, out) {
        Ok(()) => 0,
        Err(failure) => {
            if failure.code == 0 {
                0
            } else {
                eprintln!("error: {}", failure.message);
                failure.code
            }
        }
    }
}

fn execute<W: Write>(args: &[String], out: &mut W) -> std::result::Result<(), Failure> {
    let inv = parse_args(args)?;
    if inv.help {
        write_out(out, USAGE)?;
        return Ok(());
    }
    let Some(command) = inv.positionals.first() else {
        return Err(usage(format!("missing command\n{USAGE}")));
    };
    match command.as_str() {
        "count" => cmd_count(&inv, out),
        "distance" => cmd_distance(&inv, out),
        "standardize" => cmd_standardize(&inv, out),
        "maxdist" => cmd_maxdist(&inv, out),
        "generate" => cmd_generate(&inv, out),
        other => Err(usage(format!("unknown command '{other}'\n{USAGE}"))),
    }
}

fn write_out<W: Write>(out: &mut W, text: impl AsRef<str>) -> std::result::Result<(), Failure> {
    out.write_all(text.as_ref().as_bytes()).map_err(|e| Failure {
        code: 2,
        message: format!("write failed: {e}"),
    })
}

fn read_file(inv: &Invocation) -> std::result::Result<InputDocument, Failure> {
    let path = inv
        .positionals
        .get(1)
        .ok_or_else(|| usage("expected an input file"))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read '{path}': {e}")))?;
    Ok(InputDocument::parse(&text)?)
}

fn cmd_count<W: Write>(inv: &Invocation, out: &mut W) -> std::result::Result<(), Failure> {
    let n = inv.length.ok_or_else(|| usage("count requires --length"))?;
    let level = inv.level.ok_or_else(|| usage("count requires --level"))?;
    let burnside = count_patterns_burnside(n, level)?;
    let stirling = count_standard_stirling(n, level)?;
    if burnside != stirling {
        return Err(Failure {
            code: 4,
            message: format!(
                "count routes disagree: burnside={burnside} stirling={stirling}"
            ),
        });
    }
    let enumerated: Option<PatternCount> = if inv.verify && n <= 8 && level <= 5 {
        let total = enumerate_standard(n, level)?.count() as u64;
        Some(PatternCount::from(total))
    } else {
        None
    };
    if let Some(e) = &enumerated {
        if *e != burnside {
            return Err(Failure {
                code: 4,
                message: format!("enumeration disagrees: formula={burnside} enumerated={e}"),
            });
        }
    }
    let n_le_level = n <= level;
    if n_le_level && bell(n) != burnside {
        return Err(Failure {
            code: 4,
            message: "Bell-number cross-check failed".into(),
        });
    }
    if inv.json {
        let value = json!({
            "length": n,
            "level": level,
            "count": burnside.to_string(),
            "burnside": burnside.to_string(),
            "stirling": stirling.to_string(),
            "enumerated": enumerated.as_ref().map(|e| e.to_string()),
        });
        write_out(out, format!("{value}\n"))?;
    } else {
        write_out(out, format!("{burnside}\n"))?;
        if inv.verify {
            let enum_text = enumerated
                .as_ref()
                .map(|e| e.to_string())
                .unwrap_or_else(|| "skipped".into());
            write_out(
                out,
                format!("verified: burnside={burnside} stirling={stirling} enumerated={enum_text}\n"),
            )?;
        }
    }
    Ok(())
}

fn distance_of(
    inv: &Invocation,
    set: &SequenceSet,
    patterns_mode: bool,
) -> std::result::Result<DistanceResult, Failure> {
    if !patterns_mode {
        let d = sequence_distance(set);
        return Ok(DistanceResult {
            distance: d,
            constant_count: set.len() - d,
            witness: None,
        });
    }
    let patterns: Vec<Pattern> = set.sequences().iter().map(Pattern::of).collect();
    let mut result = match inv.algorithm {
        AlgorithmChoice::Hungarian => {
            if set.k() != 2 {
                return Err(usage(format!(
                    "--algorithm hungarian requires exactly 2 sequences, got {}",
                    set.k()
                )));
            }
            pattern_distance_pair(&patterns[0], &patterns[1])?
        }
        AlgorithmChoice::Auto if set.k() == 2 => {
            pattern_distance_pair(&patterns[0], &patterns[1])?
        }
        AlgorithmChoice::Auto => pattern_distance(&patterns, Algorithm::Auto)?,
        AlgorithmChoice::Clique => pattern_distance(&patterns, Algorithm::Clique)?,
        AlgorithmChoice::Brute => pattern_distance(&patterns, Algorithm::Brute)?,
    };
    // library witnesses apply to canonical representatives; compose with each
    // row's standardizing permutation so the reported tuple applies to the
    // input as written
    if let Some(witness) = result.witness.take() {
        result.witness = Some(
            witness
                .iter()
                .zip(set.sequences())
                .map(|(phi, row)| phi.compose(&row.standardizing_permutation()))
                .collect(),
        );
    }
    Ok(result)
}

fn cmd_distance<W: Write>(inv: &Invocation, out: &mut W) -> std::result::Result<(), Failure> {
    let doc = read_file(inv)?;
    let set = doc.to_sequence_set()?;
    let patterns_mode = inv.mode.as_deref().unwrap_or("patterns") == "patterns";
    let result = distance_of(inv, &set, patterns_mode)?;
    let witness_strings: Option<Vec<String>> = if inv.witness && patterns_mode {
        result
            .witness
            .as_ref()
            .map(|ws| ws.iter().map(|p| p.cycle_notation()).collect())
    } else {
        None
    };
    if inv.json {
        let value = json!({
            "distance": result.distance,
            "constant_count": result.constant_count,
            "witness": witness_strings,
        });
        write_out(out, format!("{value}\n"))?;
    } else {
        write_out(out, format!("{}\n", result.distance))?;
        if let Some(ws) = &witness_strings {
            write_out(out, format!("witness: {}\n", ws.join(", ")))?;
        }
    }
    Ok(())
}

fn cmd_standardize<W: Write>(inv: &Invocation, out: &mut W) -> std::result::Result<(), Failure> {
    let doc = read_file(inv)?;
    let rows = doc
        .rows
        .iter()
        .map(|row| {
            Sequence::new(row.clone(), doc.level)
                .map(|q| q.standardize().elements().to_vec())
        })
        .collect::<Result<Vec<_>>>()?;
    let standardized = InputDocument {
        level: doc.level,
        rows,
    };
    if inv.json {
        let value = json!({
            "level": standardized.level,
            "rows": standardized.rows,
        });
        write_out(out, format!("{value}\n"))?;
    } else {
        write_out(out, standardized.render())?;
    }
    Ok(())
}

fn positional_triple(inv: &Invocation) -> std::result::Result<(usize, usize, usize), Failure> {
    if inv.positionals.len() != 4 {
        return Err(usage("expected three arguments: <n> <l> <k>"));
    }
    let n = parse_usize(&inv.positionals[1], "<n>")?;
    let level = parse_usize(&inv.positionals[2], "<l>")?;
    let k = parse_usize(&inv.positionals[3], "<k>")?;
    Ok((n, level, k))
}

fn cmd_maxdist<W: Write>(inv: &Invocation, out: &mut W) -> std::result::Result<(), Failure> {
    let (n, level, k) = positional_triple(inv)?;
    let d = max_distance(n, level, k)?;
    if inv.json {
        let value = json!({
            "length": n,
            "level": level,
            "k": k,
            "max_distance": d,
        });
        write_out(out, format!("{value}\n"))?;
    } else {
        write_out(out, format!("{d}\n"))?;
    }
    Ok(())
}

fn cmd_generate<W: Write>(inv: &Invocation, out: &mut W) -> std::result::Result<(), Failure> {
    let (n, level, k) = positional_triple(inv)?;
    let set = construct_mn(n, level, k)?;
    let d = max_distance(n, level, k)?;
    let doc = InputDocument::from_sequence_set(&set);
    if inv.json {
        let value = json!({
            "length": n,
            "level": level,
            "k": k,
            "sequences": doc.rows,
            "distance": d,
        });
        write_out(out, format!("{value}\n"))?;
    } else {
        write_out(out, doc.render())?;
        write_out(out, format!("# pattern distance: {d}\n"))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String) {
        let argv: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        let mut buffer = Vec::new();
        let code = run(&argv, &mut buffer);
        (code, String::from_utf8(buffer).unwrap())
    }

    #[test]
    fn parse_and_render_round_trip() {
        let text = "# comment\nlevel: 3\n1 1 3 2 1\n3,3,1,2,3  # inline\n\n1 1 2 2 1\n";
        let doc = InputDocument::parse(text).unwrap();
        assert_eq!(doc.level, 3);
        assert_eq!(doc.rows.len(), 3);
        assert_eq!(doc.rows[1], vec![3, 3, 1, 2, 3]);
        let reparsed = InputDocument::parse(&doc.render()).unwrap();
        assert_eq!(reparsed, doc);
    }

    #[test]
    fn parse_rejects_bad_documents() {
        assert!(matches!(
            InputDocument::parse("1 2 3\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            InputDocument::parse("level: 2\n1 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            InputDocument::parse("level: 2\n1 2\n1\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            InputDocument::parse("# nothing\n"),
            Err(Error::Parse { line: 0, .. })
        ));
        assert!(matches!(
            InputDocument::parse("level: 0\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            InputDocument::parse("level: 2\n,\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn to_sequence_set_requires_two_rows() {
        let doc = InputDocument::parse("level: 2\n1 2\n").unwrap();
        assert_eq!(doc.to_sequence_set(), Err(Error::ArityError { k: 1 }));
    }

    #[test]
    fn count_command_reports_known_values() {
        let (code, output) = run_capture(&["count", "--length", "4", "--level", "2"]);
        assert_eq!(code, 0);
        assert_eq!(output, "8\n");

        let (code, output) = run_capture(&["count", "--length", "1", "--level", "7"]);
        assert_eq!(code, 0);
        assert_eq!(output, "1\n");

        let (code, output) =
            run_capture(&["count", "--length", "5", "--level", "3", "--verify"]);
        assert_eq!(code, 0);
        assert_eq!(
            output,
            "41\nverified: burnside=41 stirling=41 enumerated=41\n"
        );
    }

    #[test]
    fn count_json_shape() {
        let (code, output) =
            run_capture(&["count", "--length", "5", "--level", "3", "--json", "--verify"]);
        assert_eq!(code, 0);
        let value: serde_json::Value = serde_json::from_str(&output).unwrap();
        assert_eq!(value["count"], "41");
        assert_eq!(value["burnside"], "41");
        assert_eq!(value["stirling"], "41");
        assert_eq!(value["enumerated"], "41");
        assert_eq!(value["length"], 5);
        assert_eq!(value["level"], 3);
    }

    #[test]
    fn count_rejects_bad_parameters() {
        let (code, _) = run_capture(&["count", "--length", "0", "--level", "2"]);
        assert_eq!(code, 2);
        let (code, _) = run_capture(&["count", "--level", "2"]);
        assert_eq!(code, 2);
        let (code, _) = run_capture(&["count", "--length", "x", "--level", "2"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn maxdist_command() {
        let (code, output) = run_capture(&["maxdist", "5", "3", "2"]);
        assert_eq!(code, 0);
        assert_eq!(output, "3\n");

        let (code, output) = run_capture(&["maxdist", "9", "1", "4"]);
        assert_eq!(code, 0);
        assert_eq!(output, "0\n");

        let (code, output) = run_capture(&["maxdist", "4", "2", "2"]);
        assert_eq!(code, 0);
        assert_eq!(output, "2\n");

        let (code, _) = run_capture(&["maxdist", "4", "2"]);
        assert_eq!(code, 2);
        let (code, _) = run_capture(&["maxdist", "4", "2", "1"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn generate_command_emits_parseable_document() {
        let (code, output) = run_capture(&["generate", "5", "2", "2"]);
        assert_eq!(code, 0);
        assert_eq!(output, "level: 2\n1 1 1 1 1\n1 2 1 2 1\n# pattern distance: 2\n");
        let doc = InputDocument::parse(&output).unwrap();
        assert_eq!(doc.rows.len(), 2);

        let (code, output) = run_capture(&["generate", "2", "2", "2"]);
        assert_eq!(code, 0);
        assert_eq!(output, "level: 2\n1 1\n1 2\n# pattern distance: 1\n");
    }

    #[test]
    fn unknown_command_and_flags_are_usage_errors() {
        let (code, _) = run_capture(&["frobnicate"]);
        assert_eq!(code, 2);
        let (code, _) = run_capture(&["count", "--bogus"]);
        assert_eq!(code, 2);
        let (code, _) = run_capture(&[]);
        assert_eq!(code, 2);
        let (code, output) = run_capture(&["--help"]);
        assert_eq!(code, 0);
        assert!(output.contains("usage: seqpat"));
    }

    #[test]
    fn distance_witness_applies_to_the_input_rows() {
        use crate::metric::sequence_distance;

        let doc = InputDocument::parse("level: 3\n1 1 3 2 1\n3 3 1 2 3\n1 1 2 2 1\n").unwrap();
        let set = doc.to_sequence_set().unwrap();
        let inv = parse_args(&["distance".into(), "--witness".into()]).unwrap();
        let result = distance_of(&inv, &set, true).unwrap();
        assert_eq!(result.distance, 1);
        let image = set.apply(result.witness.as_ref().unwrap()).unwrap();
        assert_eq!(sequence_distance(&image), 1);
    }

    #[test]
    fn output_is_deterministic() {
        let first = run_capture(&["count", "--length", "6", "--level", "4", "--json"]);
        let second = run_capture(&["count", "--length", "6", "--level", "4", "--json"]);
        assert_eq!(first, second);
    }
}
