//! Line-oriented text formats: error-set files, code description files,
//! codeword amplitude exports, and verification reports.
//!
//! Shared header syntax:
//!
//! ```text
//! field p=<int> m=<int> [poly=<comma coeffs>]
//! n <int>
//! ```
//!
//! An error-set file then carries one `err k=<int> a=<lit> b=<lit>` line per
//! operator; a code description file carries `C <lit>` and `C1 <lit>`
//! generator lines. Vector literals are comma-separated canonical integer
//! encodings (`1,2,1,0`); for `d = 4` the aliases `x` → 2 and `x^2`/`x2` → 3
//! are accepted on input. Blank lines and `#` comments are ignored
//! everywhere. All emitters are deterministic.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::galois::LinearSubspace;
use crate::galois::{FieldElement, FieldSpec, FieldVector};
use crate::graph::LucSpec;
use crate::pauli::{ErrorOp, ErrorSet};
use crate::reflexive::ReflexiveCode;
use crate::verify::{Verdict, Witness};

/// Canonical text form of a vector: comma-separated integer encodings.
pub fn vector_literal(v: &FieldVector) -> String {
    v.entries()
        .iter()
        .map(|e| e.encoding().to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Parse a vector literal of expected length `n`.
pub fn parse_vector_literal(f: &FieldSpec, s: &str, n: usize, line: usize) -> Result<FieldVector> {
    let mut entries = Vec::new();
    for token in s.split(',') {
        let token = token.trim();
        let enc: u64 = match token {
            "x" if f.order() == 4 => 2,
            "x^2" | "x2" if f.order() == 4 => 3,
            _ => token.parse().map_err(|_| Error::ParseError {
                line,
                reason: format!("invalid field element {token:?}"),
            })?,
        };
        if enc >= f.order() {
            return Err(Error::ParseError {
                line,
                reason: format!("element {enc} out of range for d = {}", f.order()),
            });
        }
        entries.push(FieldElement::default());
        *entries.last_mut().unwrap() = f.element(enc).unwrap();
    }
    if entries.len() != n {
        return Err(Error::ParseError {
            line,
            reason: format!("expected {n} entries, got {}", entries.len()),
        });
    }
    Ok(FieldVector::new(entries))
}

fn parse_key_value<'a>(token: &'a str, key: &str, line: usize) -> Result<&'a str> {
    token
        .strip_prefix(key)
        .and_then(|rest| rest.strip_prefix('='))
        .ok_or_else(|| Error::ParseError {
            line,
            reason: format!("expected `{key}=...`, got {token:?}"),
        })
}

struct HeaderState {
    field: Option<FieldSpec>,
    n: Option<usize>,
}

impl HeaderState {
    fn handle(&mut self, line_no: usize, rest: &str, keyword: &str) -> Result<bool> {
        match keyword {
            "field" => {
                let mut p = None;
                let mut m = None;
                let mut poly: Option<Vec<u32>> = None;
                for token in rest.split_whitespace() {
                    if let Ok(v) = parse_key_value(token, "p", line_no) {
                        p = Some(v.parse().map_err(|_| Error::ParseError {
                            line: line_no,
                            reason: format!("invalid p in {token:?}"),
                        })?);
                    } else if let Ok(v) = parse_key_value(token, "m", line_no) {
                        m = Some(v.parse().map_err(|_| Error::ParseError {
                            line: line_no,
                            reason: format!("invalid m in {token:?}"),
                        })?);
                    } else if let Ok(v) = parse_key_value(token, "poly", line_no) {
                        let coeffs: std::result::Result<Vec<u32>, _> =
                            v.split(',').map(|c| c.trim().parse()).collect();
                        poly = Some(coeffs.map_err(|_| Error::ParseError {
                            line: line_no,
                            reason: format!("invalid poly in {token:?}"),
                        })?);
                    } else {
                        return Err(Error::ParseError {
                            line: line_no,
                            reason: format!("unknown field attribute {token:?}"),
                        });
                    }
                }
                let (p, m) = (
                    p.ok_or(Error::ParseError {
                        line: line_no,
                        reason: "field line missing p=".into(),
                    })?,
                    m.ok_or(Error::ParseError {
                        line: line_no,
                        reason: "field line missing m=".into(),
                    })?,
                );
                self.field = Some(FieldSpec::new(p, m, poly.as_deref())?);
                Ok(true)
            }
            "n" => {
                self.n = Some(rest.trim().parse().map_err(|_| Error::ParseError {
                    line: line_no,
                    reason: format!("invalid n {rest:?}"),
                })?);
                Ok(true)
            }
            _ => Ok(false),
        }
    }

    fn require(&self, line_no: usize) -> Result<(&FieldSpec, usize)> {
        match (&self.field, self.n) {
            (Some(f), Some(n)) => Ok((f, n)),
            (None, _) => Err(Error::ParseError {
                line: line_no,
                reason: "field line must precede this line".into(),
            }),
            (_, None) => Err(Error::ParseError {
                line: line_no,
                reason: "n line must precede this line".into(),
            }),
        }
    }

    /// End-of-file variant of [`HeaderState::require`].
    fn finish(&self, text: &str) -> Result<(&FieldSpec, usize)> {
        match (&self.field, self.n) {
            (Some(f), Some(n)) => Ok((f, n)),
            (None, _) => Err(Error::ParseError {
                line: text.lines().count(),
                reason: "file has no field line".into(),
            }),
            (_, None) => Err(Error::ParseError {
                line: text.lines().count(),
                reason: "file has no n line".into(),
            }),
        }
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// A parsed error-set file.
#[derive(Debug)]
pub struct ErrorSetFile {
    pub field: FieldSpec,
    pub n: usize,
    pub errors: ErrorSet,
    pub warnings: Vec<String>,
}

pub fn parse_error_set_file(text: &str) -> Result<ErrorSetFile> {
    let mut header = HeaderState {
        field: None,
        n: None,
    };
    let mut ops: Vec<ErrorOp> = Vec::new();
    for (line_no, line) in content_lines(text) {
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        if header.handle(line_no, rest, keyword)? {
            continue;
        }
        if keyword != "err" {
            return Err(Error::ParseError {
                line: line_no,
                reason: format!("unknown line keyword {keyword:?}"),
            });
        }
        let (f, n) = header.require(line_no)?;
        let mut kappa = 0u32;
        let mut a = None;
        let mut b = None;
        for token in rest.split_whitespace() {
            if let Ok(v) = parse_key_value(token, "k", line_no) {
                kappa = v.parse().map_err(|_| Error::ParseError {
                    line: line_no,
                    reason: format!("invalid k in {token:?}"),
                })?;
            } else if let Ok(v) = parse_key_value(token, "a", line_no) {
                a = Some(parse_vector_literal(f, v, n, line_no)?);
            } else if let Ok(v) = parse_key_value(token, "b", line_no) {
                b = Some(parse_vector_literal(f, v, n, line_no)?);
            } else {
                return Err(Error::ParseError {
                    line: line_no,
                    reason: format!("unknown err attribute {token:?}"),
                });
            }
        }
        let (a, b) = (
            a.ok_or(Error::ParseError {
                line: line_no,
                reason: "err line missing a=".into(),
            })?,
            b.ok_or(Error::ParseError {
                line: line_no,
                reason: "err line missing b=".into(),
            })?,
        );
        ops.push(ErrorOp::new(f, kappa, a, b)?);
    }
    let (field, n) = header.finish(text)?;
    let field = field.clone();
    let errors = ErrorSet::new(&field, n, ops)?;
    let mut warnings = Vec::new();
    if errors.identity_inserted() {
        warnings.push("identity operator was missing and has been inserted".to_string());
    }
    Ok(ErrorSetFile {
        field,
        n,
        errors,
        warnings,
    })
}

fn header_lines(f: &FieldSpec, n: usize) -> String {
    let poly = if f.m() > 1 {
        format!(
            " poly={}",
            f.irreducible()
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(",")
        )
    } else {
        String::new()
    };
    format!("field p={} m={}{poly}\nn {n}\n", f.p(), f.m())
}

pub fn format_error_set_file(f: &FieldSpec, errors: &ErrorSet) -> String {
    let mut out = header_lines(f, errors.n());
    for op in errors.ops() {
        let _ = writeln!(
            out,
            "err k={} a={} b={}",
            op.kappa(),
            vector_literal(op.flip()),
            vector_literal(op.phase())
        );
    }
    out
}

/// A parsed code description file.
#[derive(Debug)]
pub struct CodeFile {
    pub field: FieldSpec,
    pub n: usize,
    pub luc: LucSpec,
}

pub fn parse_code_file(text: &str) -> Result<CodeFile> {
    let mut header = HeaderState {
        field: None,
        n: None,
    };
    let mut c_gens: Vec<FieldVector> = Vec::new();
    let mut c1_gens: Vec<FieldVector> = Vec::new();
    for (line_no, line) in content_lines(text) {
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        if header.handle(line_no, rest, keyword)? {
            continue;
        }
        let (f, n) = header.require(line_no)?;
        match keyword {
            "C" => c_gens.push(parse_vector_literal(f, rest.trim(), n, line_no)?),
            "C1" => c1_gens.push(parse_vector_literal(f, rest.trim(), n, line_no)?),
            _ => {
                return Err(Error::ParseError {
                    line: line_no,
                    reason: format!("unknown line keyword {keyword:?}"),
                })
            }
        }
    }
    let (field, n) = header.finish(text)?;
    let field = field.clone();
    let c = LinearSubspace::from_generators(&field, n, &c_gens)?;
    let c1 = LinearSubspace::from_generators(&field, n, &c1_gens)?;
    let luc = LucSpec::new(&field, c, c1)?;
    Ok(CodeFile { field, n, luc })
}

/// Emit a code description file; `comments` go first, one `#` line each.
pub fn format_code_file(f: &FieldSpec, luc: &LucSpec, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    out.push_str(&header_lines(f, luc.n()));
    for v in luc.c().basis() {
        let _ = writeln!(out, "C {}", vector_literal(v));
    }
    for v in luc.c1().basis() {
        let _ = writeln!(out, "C1 {}", vector_literal(v));
    }
    out
}

/// Codeword amplitude export: generator eigenvalue metadata, then per
/// codeword a `# codeword` comment line and one `index re im` line per
/// amplitude (17 significant digits).
pub fn format_codewords(code: &ReflexiveCode) -> String {
    let mut out = String::new();
    let stab = code.stabilizer();
    for (v, lambda) in stab.gen_diag().iter().zip(code.diag_eigenvalues()) {
        let _ = writeln!(
            out,
            "# eigenvalue diag a={} lambda={:.16e} {:.16e}",
            vector_literal(v),
            lambda.re,
            lambda.im
        );
    }
    for w in stab.gen_flip() {
        let _ = writeln!(out, "# eigenvalue flip a={} lambda=1 0", vector_literal(w));
    }
    for (cw, label) in code.codewords().iter().zip(code.labels()) {
        let _ = writeln!(out, "# codeword {}", vector_literal(label));
        for (ix, amp) in cw.amps().iter().enumerate() {
            let _ = writeln!(out, "{ix} {:.16e} {:.16e}", amp.re, amp.im);
        }
    }
    out
}

fn witness_text(w: &Witness) -> String {
    match w {
        Witness::ConjugateEdge { a, b } => {
            format!("edge a={} b={}", vector_literal(a), vector_literal(b))
        }
        Witness::ConjugateLoop { v } => format!("loop v={}", vector_literal(v)),
        Witness::WeightShortfall {
            subspace,
            weight,
            required,
        } => format!("weight {subspace}={weight} required={required}"),
        Witness::KlOffDiagonal {
            e1,
            e2,
            row,
            col,
            magnitude,
        } => format!("kl-offdiag e1={e1} e2={e2} row={row} col={col} mag={magnitude:.3e}"),
        Witness::KlDiagonalSpread {
            e1,
            e2,
            row,
            deviation,
        } => {
            format!("kl-diag e1={e1} e2={e2} row={row} dev={deviation:.3e}")
        }
    }
}

/// One `RULE <name> VERDICT <pass|fail> [WITNESS <params>]` line per
/// verdict, in the order given.
pub fn format_report(verdicts: &[Verdict]) -> String {
    let mut out = String::new();
    for v in verdicts {
        let status = if v.correctable { "pass" } else { "fail" };
        match v.witnesses.first() {
            Some(w) => {
                let _ = writeln!(
                    out,
                    "RULE {} VERDICT {status} WITNESS {}",
                    v.rule.name(),
                    witness_text(w)
                );
            }
            None => {
                let _ = writeln!(out, "RULE {} VERDICT {status}", v.rule.name());
            }
        }
    }
    out
}

/// Parameter-pair list (CSS map output): `pair a=<lit> b=<lit>` lines under
/// the usual header.
pub fn format_param_pairs(f: &FieldSpec, n: usize, pairs: &[(FieldVector, FieldVector)]) -> String {
    let mut out = header_lines(f, n);
    for (a, b) in pairs {
        let _ = writeln!(out, "pair a={} b={}", vector_literal(a), vector_literal(b));
    }
    out
}
