//! Text format for DNF formulas.
//!
//! ```text
//! formula := "0" | term ("+" term)*
//! term    := "1" | literal (sep? literal)*
//! literal := "A" digits "'"?
//! sep     := "&" | "*"
//! ```
//!
//! Whitespace is free between tokens, and juxtaposition (`A2'A3`) is
//! conjunction. `1` is the empty conjunction. A term that mentions a
//! variable with both polarities is contradictory: it is dropped and its
//! position recorded in [`Parsed::dropped_terms`].
//!
//! Formula files hold one formula per line. Lines starting with `#` are
//! comments, blank lines are ignored, and an optional `vars=N` line fixes
//! the variable count (otherwise it is the largest index seen).

use std::fmt;

use thiserror::Error;

use crate::boolcore::{Cube, Dnf, Literal, Polarity, VarId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    /// 1-based character column.
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    ExpectedLiteral,
    ZeroIndex,
    IndexTooLarge,
    DoublePrime,
    BadHeader,
    DuplicateHeader,
    VarBeyondHeader { var: u32, vars: usize },
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::UnexpectedEnd => f.write_str("unexpected end of input"),
            ParseErrorKind::ExpectedLiteral => f.write_str("expected a literal such as A1 or A1'"),
            ParseErrorKind::ZeroIndex => f.write_str("variable indices start at 1"),
            ParseErrorKind::IndexTooLarge => f.write_str("variable index too large"),
            ParseErrorKind::DoublePrime => f.write_str("a literal takes at most one prime"),
            ParseErrorKind::BadHeader => f.write_str("expected vars=<count>"),
            ParseErrorKind::DuplicateHeader => f.write_str("vars= given twice"),
            ParseErrorKind::VarBeyondHeader { var, vars } => {
                write!(f, "A{var} exceeds the declared vars={vars}")
            }
        }
    }
}

/// A parsed formula plus the indices (0-based) of contradictory terms that
/// were dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed {
    pub dnf: Dnf,
    pub dropped_terms: Vec<usize>,
}

impl Parsed {
    pub fn has_warnings(&self) -> bool {
        !self.dropped_terms.is_empty()
    }
}

/// Canonical text; `parse(&render(x))` reproduces `x`.
pub fn render(x: &Dnf) -> String {
    x.to_string()
}

pub fn parse(text: &str) -> Result<Parsed, ParseError> {
    Parser::new(text, 1).formula()
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    line: usize,
}

impl Parser {
    fn new(src: &str, line: usize) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
            line,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.line,
            column: self.pos + 1,
            kind,
        }
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            Some(c) => self.error(ParseErrorKind::UnexpectedChar(c)),
            None => self.error(ParseErrorKind::UnexpectedEnd),
        }
    }

    fn formula(mut self) -> Result<Parsed, ParseError> {
        self.skip_ws();
        if self.peek() == Some('0') {
            self.pos += 1;
            self.skip_ws();
            return match self.peek() {
                None => Ok(Parsed {
                    dnf: Dnf::zero(),
                    dropped_terms: Vec::new(),
                }),
                Some(_) => Err(self.unexpected()),
            };
        }
        let mut cubes = Vec::new();
        let mut dropped_terms = Vec::new();
        loop {
            let cube = self.term()?;
            if cube.is_bottom() {
                dropped_terms.push(cubes.len() + dropped_terms.len());
            } else {
                cubes.push(cube);
            }
            self.skip_ws();
            match self.peek() {
                None => break,
                Some('+') => {
                    self.pos += 1;
                    self.skip_ws();
                }
                Some(_) => return Err(self.unexpected()),
            }
        }
        Ok(Parsed {
            dnf: Dnf::from_cubes(cubes),
            dropped_terms,
        })
    }

    fn term(&mut self) -> Result<Cube, ParseError> {
        if self.peek() == Some('1') {
            self.pos += 1;
            return Ok(Cube::top());
        }
        let mut cube = Cube::top().with(self.literal()?);
        loop {
            self.skip_ws();
            match self.peek() {
                Some('A') => {}
                Some('&' | '*') => {
                    self.pos += 1;
                    self.skip_ws();
                }
                _ => return Ok(cube),
            }
            cube = cube.with(self.literal()?);
        }
    }

    fn literal(&mut self) -> Result<Literal, ParseError> {
        if self.peek() != Some('A') {
            return Err(match self.peek() {
                None => self.error(ParseErrorKind::UnexpectedEnd),
                Some(_) => self.error(ParseErrorKind::ExpectedLiteral),
            });
        }
        self.pos += 1;
        let digits_at = self.pos;
        let mut index: u32 = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            index = index
                .checked_mul(10)
                .and_then(|i| i.checked_add(d))
                .filter(|&i| i < u32::MAX)
                .ok_or_else(|| self.error(ParseErrorKind::IndexTooLarge))?;
            self.pos += 1;
        }
        if self.pos == digits_at {
            return Err(self.unexpected());
        }
        let var = VarId::new(index).ok_or(ParseError {
            line: self.line,
            column: digits_at + 1,
            kind: ParseErrorKind::ZeroIndex,
        })?;
        let mut polarity = Polarity::Positive;
        if self.peek() == Some('\'') {
            self.pos += 1;
            polarity = Polarity::Negative;
            if self.peek() == Some('\'') {
                return Err(self.error(ParseErrorKind::DoublePrime));
            }
        }
        Ok(Literal::new(var, polarity))
    }
}

/// One formula from a file, with its 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FileFormula {
    pub line: usize,
    pub parsed: Parsed,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FormulaFile {
    pub declared_vars: Option<usize>,
    pub formulas: Vec<FileFormula>,
}

impl FormulaFile {
    /// The declared count, else the largest variable index used.
    pub fn vars(&self) -> usize {
        self.declared_vars.unwrap_or_else(|| {
            self.formulas
                .iter()
                .filter_map(|f| f.parsed.dnf.max_var())
                .map(|v| v.index() as usize)
                .max()
                .unwrap_or(0)
        })
    }

    pub fn dnfs(&self) -> Vec<Dnf> {
        self.formulas.iter().map(|f| f.parsed.dnf.clone()).collect()
    }
}

pub fn parse_file(text: &str) -> Result<FormulaFile, ParseError> {
    let mut file = FormulaFile::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("vars") {
            let column = raw.find("vars").unwrap_or(0) + 1;
            let err = |kind| ParseError { line, column, kind };
            if file.declared_vars.is_some() {
                return Err(err(ParseErrorKind::DuplicateHeader));
            }
            let count = rest
                .trim_start()
                .strip_prefix('=')
                .map(str::trim)
                .and_then(|s| s.parse::<usize>().ok())
                .ok_or(err(ParseErrorKind::BadHeader))?;
            file.declared_vars = Some(count);
            continue;
        }
        let parsed = Parser::new(raw, line).formula()?;
        file.formulas.push(FileFormula { line, parsed });
    }
    if let Some(vars) = file.declared_vars {
        for f in &file.formulas {
            if let Some(v) = f.parsed.dnf.max_var().filter(|v| v.index() as usize > vars) {
                return Err(ParseError {
                    line: f.line,
                    column: 1,
                    kind: ParseErrorKind::VarBeyondHeader {
                        var: v.index(),
                        vars,
                    },
                });
            }
        }
    }
    Ok(file)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kind(text: &str) -> (usize, ParseErrorKind) {
        let e = parse(text).unwrap_err();
        (e.column, e.kind)
    }

    #[test]
    fn parses_written_proposition() {
        let p = parse("A2' A3 + A2 A3'").unwrap();
        assert_eq!(p.dnf.len(), 2);
        assert!(!p.has_warnings());
        assert_eq!(render(&p.dnf), "A2' A3 + A2 A3'");
    }

    #[test]
    fn zero_and_one() {
        assert!(parse("0").unwrap().dnf.is_zero());
        assert!(parse("  0 ").unwrap().dnf.is_zero());
        assert_eq!(parse("1").unwrap().dnf, Dnf::one());
        assert_eq!(render(&Dnf::zero()), "0");
        assert_eq!(kind("0 + A1"), (3, ParseErrorKind::UnexpectedChar('+')));
    }

    #[test]
    fn contradictory_term_is_dropped_with_warning() {
        let p = parse("A1 A1'").unwrap();
        assert!(p.dnf.is_zero());
        assert_eq!(p.dropped_terms, vec![0]);
        let p = parse("A2 + A1 A3 A1' + A4").unwrap();
        assert_eq!(render(&p.dnf), "A2 + A4");
        assert_eq!(p.dropped_terms, vec![1]);
    }

    #[test]
    fn repeated_literal_collapses() {
        assert_eq!(render(&parse("A1 A1 A2").unwrap().dnf), "A1 A2");
    }

    #[test]
    fn separators_and_juxtaposition() {
        let canonical = parse("A1' A2 A3").unwrap().dnf;
        for text in ["A1'A2A3", "A1' & A2 & A3", "A1'*A2 * A3", "  A3 A1' A2  "] {
            assert_eq!(parse(text).unwrap().dnf, canonical, "{text}");
        }
    }

    #[test]
    fn syntax_errors_carry_position() {
        assert_eq!(kind("A2''"), (4, ParseErrorKind::DoublePrime));
        assert_eq!(kind("A0"), (2, ParseErrorKind::ZeroIndex));
        assert_eq!(kind("A"), (2, ParseErrorKind::UnexpectedEnd));
        assert_eq!(kind("A1 +"), (5, ParseErrorKind::UnexpectedEnd));
        assert_eq!(kind("A1 & + A2"), (6, ParseErrorKind::ExpectedLiteral));
        assert_eq!(kind("B1"), (1, ParseErrorKind::ExpectedLiteral));
        assert_eq!(kind("A1 (A2)"), (4, ParseErrorKind::UnexpectedChar('(')));
        assert_eq!(kind(""), (1, ParseErrorKind::UnexpectedEnd));
        assert_eq!(kind("A99999999999"), (11, ParseErrorKind::IndexTooLarge));
    }

    #[test]
    fn file_format() {
        let text = "# two props\n\nvars=4\nA1' A2\n  # indented comment\nA1 A2'\n";
        let file = parse_file(text).unwrap();
        assert_eq!(file.declared_vars, Some(4));
        assert_eq!(file.vars(), 4);
        assert_eq!(file.formulas.len(), 2);
        assert_eq!(file.formulas[1].line, 6);

        let file = parse_file("A1\nA3'\n").unwrap();
        assert_eq!(file.vars(), 3);

        let err = parse_file("vars = 2\nA3\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(
            err.kind,
            ParseErrorKind::VarBeyondHeader { var: 3, vars: 2 }
        );

        let err = parse_file("A1\nA2''\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 4));
        assert_eq!(
            parse_file("vars=x").unwrap_err().kind,
            ParseErrorKind::BadHeader
        );
        assert_eq!(
            parse_file("vars=1\nvars=2").unwrap_err().kind,
            ParseErrorKind::DuplicateHeader
        );
    }
}
