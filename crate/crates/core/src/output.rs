//! Stable, exact serialization of spectrum catalogs.
//!
//! Two formats, both lossless and both round-trippable:
//! * a JSON document (`SpectrumDoc`) in which every rational appears as a
//!   `["numerator", "denominator"]` pair of decimal strings and every
//!   dimension as a decimal string, so no value is ever squeezed through a
//!   float or a fixed-width integer;
//! * a flat CSV table with one row per (summand, operator) pair, using
//!   RFC 4180 quoting for the comma-joined weight field.
//!
//! Emission is deterministic: the same document always serializes to the same
//! bytes.  The decoders (`from_json`, `parse_csv`) accept exactly these
//! shapes, canonicalize numeric strings, and never panic on malformed input.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::branching::{Family, Member};
use crate::rat::{parse_weight_list, Rat};
use crate::spectra::OperatorKind;

/// Column order of the CSV format.
pub const CSV_HEADER: &str = "family,n,j,k,s,weight,dim,mult,op,eig_num,eig_den";

/// A complete CLI result: the command that produced it, its parameters, the
/// catalog lines, and the verification outcome (empty for pure listings).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumDoc {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub lines: Vec<SpectrumLine>,
    pub status: String,
    pub violations: Vec<String>,
}

/// One (summand, operator) row.  `weight` is the highest weight of the
/// summand's label, one `(numerator, denominator)` string pair per entry;
/// `dim` is the total eigenspace dimension contributed by this row (label
/// dimension times catalog multiplicity), as a decimal string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumLine {
    pub family: String,
    pub n: u32,
    pub j: u32,
    pub k: u32,
    pub s: Option<u32>,
    pub weight: Vec<(String, String)>,
    pub dim: String,
    pub mult: u32,
    pub op: String,
    pub eig: (String, String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error("invalid JSON document: {0}")]
    Json(String),
    #[error("CSV line {line}: {detail}")]
    Csv { line: usize, detail: String },
}

/// Stable name of a catalog family, also used as the CSV/JSON `family` field.
pub fn family_name(f: Family) -> &'static str {
    match f {
        Family::SpinorSphere => "spinor",
        Family::SymSphere => "sym",
        Family::FormUp => "form-up",
        Family::FormDown => "form-down",
        Family::SpinorFormUp => "spinor-form-up",
        Family::SpinorFormDown => "spinor-form-down",
    }
}

pub fn parse_family(name: &str) -> Option<Family> {
    Some(match name {
        "spinor" => Family::SpinorSphere,
        "sym" => Family::SymSphere,
        "form-up" => Family::FormUp,
        "form-down" => Family::FormDown,
        "spinor-form-up" => Family::SpinorFormUp,
        "spinor-form-down" => Family::SpinorFormDown,
        _ => return None,
    })
}

/// Canonical `(numerator, denominator)` decimal-string pair of a rational.
pub fn rat_pair(r: &Rat) -> (String, String) {
    (r.numer().to_string(), r.denom().to_string())
}

/// Decode a string pair back into a rational (canonicalizing on the way).
pub fn pair_to_rat(p: &(String, String)) -> Result<Rat, DecodeError> {
    let bad = |what: &str| DecodeError::Json(format!("bad rational pair ({}, {}): {what}", p.0, p.1));
    let num: BigInt = p.0.parse().map_err(|_| bad("numerator"))?;
    let den: BigInt = p.1.parse().map_err(|_| bad("denominator"))?;
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rat::new(num, den))
}

/// Build one output row from a catalog member and an operator eigenvalue.
pub fn spectrum_line(m: &Member, op: OperatorKind, eig: &Rat) -> SpectrumLine {
    SpectrumLine {
        family: family_name(m.family).to_string(),
        n: m.n,
        j: m.j,
        k: m.k,
        s: m.s,
        weight: m.label.irrep().weight().iter().map(rat_pair).collect(),
        dim: m.total_dim().to_string(),
        mult: m.mult,
        op: op.name().to_string(),
        eig: rat_pair(eig),
    }
}

// ---------------------------------------------------------------------------
// JSON

pub fn to_json(doc: &SpectrumDoc) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("document serializes");
    s.push('\n');
    s
}

pub fn from_json(bytes: &[u8]) -> Result<SpectrumDoc, DecodeError> {
    serde_json::from_slice(bytes).map_err(|e| DecodeError::Json(e.to_string()))
}

// ---------------------------------------------------------------------------
// CSV

fn pair_field(p: &(String, String)) -> String {
    if p.1 == "1" {
        p.0.clone()
    } else {
        format!("{}/{}", p.0, p.1)
    }
}

fn csv_quote(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') || field.contains('\r') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// Split one CSV record into fields, honoring RFC 4180 quoting.  Embedded
/// newlines are not supported (no emitted field contains one).
fn csv_split(line: &str) -> Result<Vec<String>, String> {
    let mut fields = Vec::new();
    let mut cur = String::new();
    let mut chars = line.chars().peekable();
    loop {
        match chars.peek() {
            Some('"') => {
                chars.next();
                loop {
                    match chars.next() {
                        Some('"') => {
                            if chars.peek() == Some(&'"') {
                                chars.next();
                                cur.push('"');
                            } else {
                                break;
                            }
                        }
                        Some(c) => cur.push(c),
                        None => return Err("unterminated quoted field".to_string()),
                    }
                }
                match chars.next() {
                    Some(',') => {
                        fields.push(std::mem::take(&mut cur));
                    }
                    None => {
                        fields.push(std::mem::take(&mut cur));
                        return Ok(fields);
                    }
                    Some(c) => return Err(format!("unexpected {c:?} after closing quote")),
                }
            }
            _ => {
                loop {
                    match chars.next() {
                        Some(',') => {
                            fields.push(std::mem::take(&mut cur));
                            break;
                        }
                        Some(c) => cur.push(c),
                        None => {
                            fields.push(std::mem::take(&mut cur));
                            return Ok(fields);
                        }
                    }
                }
            }
        }
    }
}

pub fn to_csv(lines: &[SpectrumLine]) -> String {
    let mut out = String::with_capacity(64 * (lines.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for l in lines {
        let weight_field = l
            .weight
            .iter()
            .map(pair_field)
            .collect::<Vec<_>>()
            .join(",");
        let s_field = l.s.map(|v| v.to_string()).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            csv_quote(&l.family),
            l.n,
            l.j,
            l.k,
            s_field,
            csv_quote(&weight_field),
            l.dim,
            l.mult,
            csv_quote(&l.op),
            l.eig.0,
            l.eig.1,
        );
    }
    out
}

pub fn parse_csv(text: &str) -> Result<Vec<SpectrumLine>, DecodeError> {
    let err = |line: usize, detail: String| DecodeError::Csv { line, detail };
    let mut rows = text.lines().enumerate();
    let (_, header) = rows
        .next()
        .ok_or_else(|| err(1, "empty input".to_string()))?;
    if header.trim_end_matches('\r') != CSV_HEADER {
        return Err(err(1, format!("unexpected header {header:?}")));
    }
    let mut out = Vec::new();
    for (idx, raw) in rows {
        let lineno = idx + 1;
        let raw = raw.trim_end_matches('\r');
        if raw.is_empty() {
            continue;
        }
        let f = csv_split(raw).map_err(|d| err(lineno, d))?;
        if f.len() != 11 {
            return Err(err(lineno, format!("expected 11 fields, found {}", f.len())));
        }
        let family = parse_family(&f[0])
            .ok_or_else(|| err(lineno, format!("unknown family {:?}", f[0])))?;
        let int = |field: &str, what: &str| -> Result<u32, DecodeError> {
            field
                .parse()
                .map_err(|_| err(lineno, format!("bad {what} {field:?}")))
        };
        let n = int(&f[1], "n")?;
        let j = int(&f[2], "j")?;
        let k = int(&f[3], "k")?;
        let s = if f[4].is_empty() {
            None
        } else {
            Some(int(&f[4], "s")?)
        };
        let weight = parse_weight_list(&f[5])
            .map_err(|e| err(lineno, format!("bad weight field: {e}")))?
            .iter()
            .map(rat_pair)
            .collect();
        let dim: BigInt = f[6]
            .parse()
            .map_err(|_| err(lineno, format!("bad dim {:?}", f[6])))?;
        let mult = int(&f[7], "mult")?;
        let op = OperatorKind::parse(&f[8])
            .ok_or_else(|| err(lineno, format!("unknown operator {:?}", f[8])))?;
        let eig_num: BigInt = f[9]
            .parse()
            .map_err(|_| err(lineno, format!("bad eig_num {:?}", f[9])))?;
        let eig_den: BigInt = f[10]
            .parse()
            .map_err(|_| err(lineno, format!("bad eig_den {:?}", f[10])))?;
        if eig_den.is_zero() {
            return Err(err(lineno, "zero eigenvalue denominator".to_string()));
        }
        out.push(SpectrumLine {
            family: family_name(family).to_string(),
            n,
            j,
            k,
            s,
            weight,
            dim: dim.to_string(),
            mult,
            op: op.name().to_string(),
            eig: rat_pair(&Rat::new(eig_num, eig_den)),
        });
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
