//! The `.knot` text format and the builtin record library.
//!
//! ```text
//! # two-loop knot record
//! # theta: 12 times the usual normalization, t3 eliminated, terms t1^n t2^m
//! knot "T(3,2)"
//! provenance "torus:3:2"
//! alexander:
//!   -1 1
//!   0 -1
//!   1 1
//! theta:
//!   -2 -1 -1
//!   ...
//! end
//! ```
//!
//! Exponents are written as integers or `a/2` with `a` odd, coefficients as
//! `z` or `z/w` in lowest terms with `w > 0`. Terms are strictly ascending
//! (lexicographic for theta pairs) with no zero coefficients. Lines starting
//! with `#` and blank lines are ignored. Term lines are indented.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{HalfInteger, LaurentPoly, Rational};
use crate::cabling::KnotRecord;
use crate::error::{Error, Result};
use crate::torus::TorusParams;
use crate::trivariate::{Key, ThetaPoly};

/// Comment block emitted at the top of every serialized record.
pub const HEADER: &str = "\
# two-loop knot record
# theta: 12 times the usual normalization, t3 eliminated, terms t1^n t2^m
";

/// Canonical text of `k`. Equal records give identical bytes.
pub fn serialize_record(k: &KnotRecord) -> String {
    let mut out = String::from(HEADER);
    writeln!(out, "knot {}", quote(k.name())).unwrap();
    if !k.provenance().is_empty() {
        writeln!(out, "provenance {}", quote(k.provenance())).unwrap();
    }
    out.push_str("alexander:\n");
    for (e, c) in k.alexander().terms() {
        writeln!(out, "  {} {c}", HalfInteger::from_doubled(e)).unwrap();
    }
    out.push_str("theta:\n");
    for ((n, m), c) in k.theta().terms() {
        writeln!(
            out,
            "  {} {} {c}",
            HalfInteger::from_doubled(n),
            HalfInteger::from_doubled(m)
        )
        .unwrap();
    }
    out.push_str("end\n");
    out
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            _ => out.push(ch),
        }
    }
    out.push('"');
    out
}

/// Parses and validates a record. Malformed text gives [`Error::Syntax`],
/// a well-formed record breaking an invariant gives [`Error::Validation`]
/// naming it.
pub fn parse_record(text: &str) -> Result<KnotRecord> {
    let mut parser = Parser::default();
    for (idx, raw) in text.lines().enumerate() {
        parser.line(idx + 1, raw)?;
    }
    parser.finish(text.lines().count() + 1)
}

/// `"unknot"` or `"torus:p:q"`.
pub fn builtin(name: &str) -> Result<KnotRecord> {
    if name == "unknot" {
        return Ok(KnotRecord::unknot());
    }
    let unknown = || Error::UnknownBuiltin(name.to_string());
    let rest = name.strip_prefix("torus:").ok_or_else(unknown)?;
    let (p, q) = rest.split_once(':').ok_or_else(unknown)?;
    let p: i64 = p.parse().map_err(|_| unknown())?;
    let q: i64 = q.parse().map_err(|_| unknown())?;
    KnotRecord::torus(TorusParams::new(p, q)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
enum State {
    #[default]
    Start,
    Named,
    Provenance,
    Alexander,
    Theta,
    Done,
}

#[derive(Default)]
struct Parser {
    state: State,
    name: String,
    provenance: String,
    alexander: Vec<(i64, Rational)>,
    theta: Vec<(Key, Rational)>,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(raw: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in raw.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &raw[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &raw[s..]));
    }
    out.into_iter()
        .map(|(s, tok)| (raw[..s].chars().count() + 1, tok))
        .collect()
}

impl Parser {
    fn line(&mut self, lineno: usize, raw: &str) -> Result<()> {
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            return Ok(());
        }
        let indented = trimmed.len() != raw.len();
        let toks = tokens(raw);
        if indented {
            return match self.state {
                State::Alexander => self.alexander_term(lineno, &toks),
                State::Theta => self.theta_term(lineno, &toks),
                _ => Err(syntax(lineno, 1, "unexpected indented line")),
            };
        }
        let (col, keyword) = toks[0];
        match (self.state, keyword) {
            (State::Start, "knot") => {
                self.name = quoted_argument(lineno, raw, "knot")?;
                self.state = State::Named;
            }
            (State::Named, "provenance") => {
                self.provenance = quoted_argument(lineno, raw, "provenance")?;
                self.state = State::Provenance;
            }
            (State::Named | State::Provenance, "alexander:") => {
                no_trailing(lineno, &toks)?;
                self.state = State::Alexander;
            }
            (State::Alexander, "theta:") => {
                no_trailing(lineno, &toks)?;
                self.state = State::Theta;
            }
            (State::Theta, "end") => {
                no_trailing(lineno, &toks)?;
                self.state = State::Done;
            }
            (State::Done, _) => return Err(syntax(lineno, col, "content after 'end'")),
            (_, other) => {
                let expected = match self.state {
                    State::Start => "'knot'",
                    State::Named => "'provenance' or 'alexander:'",
                    State::Provenance => "'alexander:'",
                    State::Alexander => "an indented term or 'theta:'",
                    State::Theta => "an indented term or 'end'",
                    State::Done => unreachable!(),
                };
                return Err(syntax(
                    lineno,
                    col,
                    format!("expected {expected}, found {other:?}"),
                ));
            }
        }
        Ok(())
    }

    fn alexander_term(&mut self, lineno: usize, toks: &[(usize, &str)]) -> Result<()> {
        if toks.len() != 2 {
            let col = toks.get(2).map_or(toks[0].0, |t| t.0);
            return Err(syntax(lineno, col, "alexander term needs '<exp> <coeff>'"));
        }
        let e = exponent(lineno, toks[0])?;
        let c = coefficient(lineno, toks[1])?;
        if let Some(&(prev, _)) = self.alexander.last() {
            if e <= prev {
                return Err(syntax(
                    lineno,
                    toks[0].0,
                    "alexander terms not strictly ascending",
                ));
            }
        }
        self.alexander.push((e, c));
        Ok(())
    }

    fn theta_term(&mut self, lineno: usize, toks: &[(usize, &str)]) -> Result<()> {
        if toks.len() != 3 {
            let col = toks.get(3).map_or(toks[0].0, |t| t.0);
            return Err(syntax(lineno, col, "theta term needs '<n> <m> <coeff>'"));
        }
        let key = (exponent(lineno, toks[0])?, exponent(lineno, toks[1])?);
        let c = coefficient(lineno, toks[2])?;
        if let Some(&(prev, _)) = self.theta.last() {
            if key <= prev {
                return Err(syntax(
                    lineno,
                    toks[0].0,
                    "theta terms not strictly ascending",
                ));
            }
        }
        self.theta.push((key, c));
        Ok(())
    }

    fn finish(self, eof_line: usize) -> Result<KnotRecord> {
        if self.state != State::Done {
            let expected = match self.state {
                State::Start => "'knot'",
                State::Named | State::Provenance => "'alexander:'",
                State::Alexander => "'theta:'",
                _ => "'end'",
            };
            return Err(syntax(
                eof_line,
                1,
                format!("unexpected end of input, expected {expected}"),
            ));
        }
        let alexander = LaurentPoly::from_terms(self.alexander);
        let theta = ThetaPoly::from_terms(self.theta);
        KnotRecord::new(self.name, alexander, theta, self.provenance)
    }
}

fn no_trailing(lineno: usize, toks: &[(usize, &str)]) -> Result<()> {
    match toks.get(1) {
        Some(&(col, tok)) => Err(syntax(lineno, col, format!("unexpected {tok:?}"))),
        None => Ok(()),
    }
}

fn quoted_argument(lineno: usize, raw: &str, keyword: &str) -> Result<String> {
    let rest = &raw[keyword.len()..];
    let body = rest.trim_start();
    let mut col = raw.len() - body.len() + 1;
    if body.len() == rest.len() || !body.starts_with('"') {
        return Err(syntax(
            lineno,
            col,
            format!("{keyword} needs a quoted string"),
        ));
    }
    let mut out = String::new();
    let mut chars = body[1..].chars();
    loop {
        col += 1;
        match chars.next() {
            None => return Err(syntax(lineno, col, "unterminated string")),
            Some('"') => break,
            Some('\\') => {
                col += 1;
                match chars.next() {
                    Some('"') => out.push('"'),
                    Some('\\') => out.push('\\'),
                    Some('n') => out.push('\n'),
                    Some('t') => out.push('\t'),
                    _ => return Err(syntax(lineno, col, "invalid escape")),
                }
            }
            Some(ch) => out.push(ch),
        }
    }
    let trailing: String = chars.collect();
    if !trailing.trim().is_empty() {
        let offset = trailing.len() - trailing.trim_start().len();
        return Err(syntax(
            lineno,
            col + 1 + offset,
            "unexpected text after string",
        ));
    }
    Ok(out)
}

fn exponent(lineno: usize, (col, tok): (usize, &str)) -> Result<i64> {
    tok.parse::<HalfInteger>()
        .map(HalfInteger::doubled)
        .map_err(|e| syntax(lineno, col, e))
}

/// `z` or `z/w`, lowest terms, `w > 0`, nonzero.
fn coefficient(lineno: usize, (col, tok): (usize, &str)) -> Result<Rational> {
    let bad = |msg: &str| syntax(lineno, col, format!("{msg}: {tok:?}"));
    let int = |s: &str| -> Result<BigInt> {
        let digits = s.strip_prefix('-').unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("invalid coefficient"));
        }
        s.parse().map_err(|_| bad("invalid coefficient"))
    };
    let value = match tok.split_once('/') {
        None => Rational::from_integer(int(tok)?),
        Some((n, d)) => {
            let n = int(n)?;
            let d = int(d)?;
            if !d.is_positive() {
                return Err(bad("denominator must be positive"));
            }
            if !n.gcd(&d).is_one() {
                return Err(bad("coefficient not in lowest terms"));
            }
            Rational::new(n, d)
        }
    };
    if value.is_zero() {
        return Err(bad("zero coefficient"));
    }
    Ok(value)
}
