//! Text formats for polynomials and scenarios.
//!
//! Polynomials follow
//!
//! ```text
//! expr     := ['-'] term { ('+'|'-') term }
//! term     := factor { '*' factor }
//! factor   := base [ '^' uint ]
//! base     := rational | var | '(' expr ')'
//! rational := uint [ '/' uint ]
//! var      := 'x' uint            (1-based, at most nvars)
//! ```
//!
//! with insignificant whitespace and mandatory `*`.
//!
//! A scenario is line oriented, `#` starting a comment:
//!
//! ```text
//! scenario n=4 d=0 k=3 complete=true
//! chart 1
//! hypersurface x1^3 + x2^3 + x3^3 + x4^3
//! vectorfield x1 ; x2 ; x3 ; x4
//! point chart=1 at 0,0,0,0 label=p0
//! expect schwartz_total = 1
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::verify::{Chart, Scenario, ScenarioPoint, EXPECTATION_NAMES};
use crate::{QPolynomial, QVectorField, Rational};

/// Location is 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self { line, column, message: message.into() }
    }
}

pub fn parse_polynomial(text: &str, nvars: usize) -> Result<QPolynomial, ParseError> {
    parse_polynomial_at(text, nvars, 1, 1)
}

/// Parses `text` as if it started at `line`:`column` of a larger input.
fn parse_polynomial_at(text: &str, nvars: usize, line: usize, column: usize) -> Result<QPolynomial, ParseError> {
    assert!(nvars >= 1, "polynomials need at least one variable");
    let mut p = ExprParser { chars: text.chars().collect(), pos: 0, nvars, line, column };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("expected a polynomial"));
    }
    let e = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        let c = p.chars[p.pos];
        return Err(p.error(format!("unexpected '{c}'")));
    }
    Ok(e)
}

struct ExprParser {
    chars: Vec<char>,
    pos: usize,
    nvars: usize,
    line: usize,
    column: usize,
}

impl ExprParser {
    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.column + self.pos, message)
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.column + pos, message)
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<QPolynomial, ParseError> {
        let negate = self.eat('-');
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<QPolynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<QPolynomial, ParseError> {
        let base = self.base()?;
        if self.eat('^') {
            self.skip_ws();
            let start = self.pos;
            let digits = self.uint()?;
            let exp: u32 = digits.parse().map_err(|_| self.error_at(start, "exponent too large"))?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<QPolynomial, ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(e)
            }
            Some('x') => {
                self.pos += 1;
                if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    return Err(self.error("expected a variable index after 'x'"));
                }
                let digits = self.uint()?;
                match digits.parse::<usize>() {
                    Ok(i) if (1..=self.nvars).contains(&i) => Ok(QPolynomial::variable(self.nvars, i - 1)),
                    _ => Err(self.error_at(
                        start,
                        format!("variable x{digits} out of range x1..x{}", self.nvars),
                    )),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.uint()?.parse().expect("digits");
                let mut den = BigInt::one();
                let save = self.pos;
                if self.eat('/') {
                    self.skip_ws();
                    let den_start = self.pos;
                    den = self.uint()?.parse().expect("digits");
                    if den.is_zero() {
                        return Err(self.error_at(den_start, "division by zero"));
                    }
                } else {
                    self.pos = save;
                }
                Ok(QPolynomial::constant(self.nvars, Rational::new(num, den)))
            }
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn uint(&mut self) -> Result<String, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an unsigned integer"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }
}

/// A word of a scenario line with its 1-based column.
#[derive(Clone, Copy)]
struct Word<'a> {
    text: &'a str,
    column: usize,
}

fn words(line: &str) -> Vec<Word<'_>> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, c) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Word { text: &line[s..i], column: column_of(line, s) });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    out
}

fn column_of(line: &str, byte: usize) -> usize {
    line[..byte].chars().count() + 1
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(before, _)| before)
}

fn parse_uint<T: std::str::FromStr>(text: &str, line: usize, column: usize, what: &str) -> Result<T, ParseError> {
    if text.is_empty() || !text.chars().all(|c| c.is_ascii_digit()) {
        return Err(ParseError::new(line, column, format!("{what}: expected an unsigned integer, found '{text}'")));
    }
    text.parse().map_err(|_| ParseError::new(line, column, format!("{what}: value too large")))
}

/// `[-]uint[/uint]`
fn parse_coordinate(text: &str, line: usize, column: usize) -> Result<Rational, ParseError> {
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (num, den) = body.split_once('/').unwrap_or((body, "1"));
    let num: BigInt = parse_uint(num, line, column, "coordinate")?;
    let den: BigInt = parse_uint(den, line, column, "coordinate")?;
    if den.is_zero() {
        return Err(ParseError::new(line, column, "division by zero"));
    }
    let q = Rational::new(num, den);
    Ok(if negative { -q } else { q })
}

/// `key=value` word.
fn key_value<'a>(word: Word<'a>, key: &str, line: usize) -> Result<&'a str, ParseError> {
    match word.text.split_once('=') {
        Some((k, v)) if k == key => Ok(v),
        _ => Err(ParseError::new(line, word.column, format!("expected '{key}=...', found '{}'", word.text))),
    }
}

#[derive(Default)]
struct PendingChart {
    id: u32,
    line: usize,
    hypersurface: Option<QPolynomial>,
    field: Option<QVectorField>,
}

impl PendingChart {
    fn finish(self) -> Result<Chart, ParseError> {
        let missing = |what: &str| ParseError::new(self.line, 1, format!("chart {} has no {what} line", self.id));
        Ok(Chart {
            id: self.id,
            hypersurface: self.hypersurface.clone().ok_or_else(|| missing("hypersurface"))?,
            field: self.field.clone().ok_or_else(|| missing("vectorfield"))?,
        })
    }
}

pub fn parse_scenario(text: &str) -> Result<Scenario, ParseError> {
    let mut header: Option<(usize, u64, u64, bool)> = None;
    let mut charts: Vec<Chart> = Vec::new();
    let mut pending: Option<PendingChart> = None;
    let mut points = Vec::new();
    let mut expectations = BTreeMap::new();
    let mut last_line = 0;

    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        last_line = line_no;
        let line = strip_comment(raw);
        let ws = words(line);
        let Some(first) = ws.first().copied() else { continue };

        if first.text == "scenario" {
            if header.is_some() {
                return Err(ParseError::new(line_no, first.column, "duplicate scenario header"));
            }
            header = Some(parse_header(&ws, line_no)?);
            continue;
        }
        let Some((n, _, _, _)) = header else {
            return Err(ParseError::new(line_no, first.column, "expected 'scenario' header first"));
        };
        let rest_start = first.column - 1 + first.text.chars().count();
        let rest: String = line.chars().skip(rest_start).collect();
        let rest_column = rest_start + 1;

        match first.text {
            "chart" => {
                if ws.len() != 2 {
                    return Err(ParseError::new(line_no, first.column, "expected 'chart <id>'"));
                }
                let id: u32 = parse_uint(ws[1].text, line_no, ws[1].column, "chart id")?;
                if let Some(p) = pending.take() {
                    charts.push(p.finish()?);
                }
                if charts.iter().any(|c| c.id == id) {
                    return Err(ParseError::new(line_no, ws[1].column, format!("chart {id} declared twice")));
                }
                pending = Some(PendingChart { id, line: line_no, ..Default::default() });
            }
            "hypersurface" => {
                let chart = pending
                    .as_mut()
                    .ok_or_else(|| ParseError::new(line_no, first.column, "hypersurface outside a chart block"))?;
                if chart.hypersurface.is_some() {
                    return Err(ParseError::new(line_no, first.column, format!("chart {} already has a hypersurface", chart.id)));
                }
                let f = parse_polynomial_at(&rest, n, line_no, rest_column)?;
                if f.is_zero() {
                    return Err(ParseError::new(line_no, rest_column, "hypersurface equation is zero"));
                }
                chart.hypersurface = Some(f);
            }
            "vectorfield" => {
                let chart = pending
                    .as_mut()
                    .ok_or_else(|| ParseError::new(line_no, first.column, "vectorfield outside a chart block"))?;
                if chart.field.is_some() {
                    return Err(ParseError::new(line_no, first.column, format!("chart {} already has a vectorfield", chart.id)));
                }
                chart.field = Some(parse_field(&rest, n, line_no, rest_column)?);
            }
            "point" => points.push(parse_point(&ws, &rest, n, line_no, rest_column, &charts, pending.as_ref())?),
            "expect" => {
                let (name, value) = rest.split_once('=').ok_or_else(|| {
                    ParseError::new(line_no, first.column, "expected 'expect <name> = <int>'")
                })?;
                let name = name.trim();
                if !EXPECTATION_NAMES.contains(&name) {
                    return Err(ParseError::new(
                        line_no,
                        rest_column,
                        format!("unknown expectation '{name}', expected one of {}", EXPECTATION_NAMES.join(", ")),
                    ));
                }
                let value_column = rest_column + rest.find('=').map_or(0, |b| rest[..b].chars().count() + 1);
                let value = value.trim();
                let parsed: BigInt = value
                    .strip_prefix('-')
                    .map_or_else(|| parse_uint::<BigInt>(value, line_no, value_column, name), |v| {
                        parse_uint::<BigInt>(v, line_no, value_column, name).map(|b| -b)
                    })?;
                if expectations.insert(name.to_string(), parsed).is_some() {
                    return Err(ParseError::new(line_no, rest_column, format!("duplicate expectation '{name}'")));
                }
            }
            other => {
                return Err(ParseError::new(line_no, first.column, format!("unknown directive '{other}'")));
            }
        }
    }

    let Some((n, d, k, complete)) = header else {
        return Err(ParseError::new(last_line.max(1), 1, "empty scenario: missing 'scenario' header"));
    };
    if let Some(p) = pending.take() {
        charts.push(p.finish()?);
    }
    if charts.is_empty() {
        return Err(ParseError::new(last_line, 1, "scenario declares no chart"));
    }
    Ok(Scenario { n, d, k, complete, charts, points, expectations })
}

fn parse_header(ws: &[Word<'_>], line: usize) -> Result<(usize, u64, u64, bool), ParseError> {
    if ws.len() != 5 {
        return Err(ParseError::new(line, ws[0].column, "expected 'scenario n=<uint> d=<uint> k=<uint> complete=<true|false>'"));
    }
    let n: usize = parse_uint(key_value(ws[1], "n", line)?, line, ws[1].column, "n")?;
    let d: u64 = parse_uint(key_value(ws[2], "d", line)?, line, ws[2].column, "d")?;
    let k: u64 = parse_uint(key_value(ws[3], "k", line)?, line, ws[3].column, "k")?;
    let complete = match key_value(ws[4], "complete", line)? {
        "true" => true,
        "false" => false,
        other => return Err(ParseError::new(line, ws[4].column, format!("complete: expected true or false, found '{other}'"))),
    };
    if n < 1 {
        return Err(ParseError::new(line, ws[1].column, "n must be at least 1"));
    }
    if k < 1 {
        return Err(ParseError::new(line, ws[3].column, "k must be at least 1"));
    }
    Ok((n, d, k, complete))
}

fn parse_field(rest: &str, n: usize, line: usize, column: usize) -> Result<QVectorField, ParseError> {
    let mut components = Vec::with_capacity(n);
    let mut offset = 0;
    for piece in rest.split(';') {
        let col = column + rest[..offset].chars().count();
        components.push(parse_polynomial_at(piece, n, line, col)?);
        offset += piece.len() + 1;
    }
    if components.len() != n {
        return Err(ParseError::new(line, column, format!("expected {n} components, found {}", components.len())));
    }
    if components.iter().all(QPolynomial::is_zero) {
        return Err(ParseError::new(line, column, "vector field is identically zero"));
    }
    Ok(QVectorField::new(components))
}

fn parse_point(
    ws: &[Word<'_>],
    rest: &str,
    n: usize,
    line: usize,
    rest_column: usize,
    charts: &[Chart],
    pending: Option<&PendingChart>,
) -> Result<ScenarioPoint, ParseError> {
    let syntax = || ParseError::new(line, ws[0].column, "expected 'point chart=<id> at <coords> [label=<word>]'");
    if ws.len() < 3 {
        return Err(syntax());
    }
    let chart: u32 = parse_uint(key_value(ws[1], "chart", line)?, line, ws[1].column, "chart")?;
    let declared = charts.iter().any(|c| c.id == chart) || pending.is_some_and(|p| p.id == chart);
    if !declared {
        return Err(ParseError::new(line, ws[1].column, format!("point refers to undeclared chart {chart}")));
    }
    if ws[2].text != "at" {
        return Err(syntax());
    }
    // coordinates run from after "at" to an optional trailing label
    let at_byte = byte_of_column(rest, ws[2].column + 2 - rest_column);
    let mut coords_text = &rest[at_byte..];
    let mut label = None;
    if let Some(last) = ws.last().filter(|w| w.text.starts_with("label=")) {
        let label_byte = byte_of_column(rest, last.column - rest_column);
        coords_text = &rest[at_byte..label_byte];
        let value = &last.text["label=".len()..];
        if value.is_empty() {
            return Err(ParseError::new(line, last.column, "empty label"));
        }
        label = Some(value.to_string());
    }
    let coords_column = rest_column + rest[..at_byte].chars().count();
    let mut coords = Vec::with_capacity(n);
    let mut offset = 0;
    for piece in coords_text.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        let col = coords_column + coords_text[..offset + lead].chars().count();
        coords.push(parse_coordinate(piece.trim(), line, col)?);
        offset += piece.len() + 1;
    }
    if coords.len() != n {
        return Err(ParseError::new(line, coords_column, format!("expected {n} coordinates, found {}", coords.len())));
    }
    Ok(ScenarioPoint { chart, coords, label })
}

fn byte_of_column(s: &str, zero_based_column: usize) -> usize {
    s.char_indices().nth(zero_based_column).map_or(s.len(), |(b, _)| b)
}

/// Prints a scenario in the format [`parse_scenario`] reads.
pub struct ScenarioPrinter<'a>(pub &'a Scenario);

impl fmt::Display for ScenarioPrinter<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.0;
        writeln!(f, "scenario n={} d={} k={} complete={}", s.n, s.d, s.k, s.complete)?;
        for c in &s.charts {
            writeln!(f, "chart {}", c.id)?;
            writeln!(f, "hypersurface {}", c.hypersurface)?;
            let comps: Vec<String> = c.field.components().iter().map(ToString::to_string).collect();
            writeln!(f, "vectorfield {}", comps.join(" ; "))?;
        }
        for p in &s.points {
            let coords: Vec<String> = p.coords.iter().map(ToString::to_string).collect();
            write!(f, "point chart={} at {}", p.chart, coords.join(","))?;
            match &p.label {
                Some(l) => writeln!(f, " label={l}")?,
                None => writeln!(f)?,
            }
        }
        for (name, value) in &s.expectations {
            writeln!(f, "expect {name} = {value}")?;
        }
        Ok(())
    }
}
