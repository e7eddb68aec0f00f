//! Monomial-syntax parser.
//!
//! Grammar:
//! ```text
//! ideal  := mono (',' mono)*
//! mono   := factor (WS factor)*
//! factor := VAR ('^' UINT)?
//! VAR    := [A-Za-z]+ UINT?
//! ```
//! Accepts both `z1^8 z2` and `x^8 y`. When every variable carries a
//! numeric index and shares one letter prefix, coordinates are ordered
//! by index and the dimension is the highest index; otherwise variables
//! are ordered by first appearance.

use std::fmt;

use monomial_residues::Exponent;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

/// A parsed ideal presentation: the exponents in input order plus the
/// variable naming needed to render it back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSource {
    pub dimension: usize,
    pub exponents: Vec<Exponent>,
    pub variable_names: Vec<String>,
    pub provenance: String,
    pub warnings: Vec<String>,
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    text: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            chars: text.chars().collect(),
            pos: 0,
            text,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn location(&self) -> (usize, usize) {
        let consumed: usize = self.chars[..self.pos].iter().map(|c| c.len_utf8()).sum();
        let before = &self.text[..consumed];
        let line = before.matches('\n').count() + 1;
        let column = before
            .rsplit('\n')
            .next()
            .map_or(0, |l| l.chars().count())
            + 1;
        (line, column)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let (line, column) = self.location();
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Var {
    letters: String,
    index: Option<u32>,
}

impl Var {
    fn name(&self) -> String {
        match self.index {
            Some(i) => format!("{}{}", self.letters, i),
            None => self.letters.clone(),
        }
    }
}

fn parse_uint(cursor: &mut Cursor) -> Result<u32, ParseError> {
    let mut digits = String::new();
    while matches!(cursor.peek(), Some(c) if c.is_ascii_digit()) {
        digits.push(cursor.bump().unwrap());
    }
    if digits.is_empty() {
        return Err(cursor.error("expected an unsigned integer"));
    }
    digits
        .parse()
        .map_err(|_| cursor.error("integer literal too large"))
}

fn parse_factor(cursor: &mut Cursor) -> Result<(Var, u32), ParseError> {
    let mut letters = String::new();
    while matches!(cursor.peek(), Some(c) if c.is_ascii_alphabetic()) {
        letters.push(cursor.bump().unwrap());
    }
    if letters.is_empty() {
        return Err(cursor.error("expected a variable name"));
    }
    let index = if matches!(cursor.peek(), Some(c) if c.is_ascii_digit()) {
        Some(parse_uint(cursor)?)
    } else {
        None
    };
    let power = if cursor.peek() == Some('^') {
        cursor.bump();
        if cursor.peek() == Some('-') {
            return Err(cursor.error("negative exponent"));
        }
        parse_uint(cursor)?
    } else {
        1
    };
    Ok((Var { letters, index }, power))
}

/// Parse the textual ideal syntax into an [`IdealSource`].
pub fn parse_ideal(text: &str, provenance: &str) -> Result<IdealSource, ParseError> {
    let mut cursor = Cursor::new(text);
    let mut monos: Vec<Vec<(Var, u32)>> = Vec::new();
    loop {
        cursor.skip_ws();
        if cursor.peek().is_none() {
            return Err(cursor.error("expected a monomial"));
        }
        let mut factors = Vec::new();
        loop {
            factors.push(parse_factor(&mut cursor)?);
            let save = cursor.pos;
            cursor.skip_ws();
            match cursor.peek() {
                Some(c) if c.is_ascii_alphabetic() => continue,
                _ => {
                    cursor.pos = save;
                    break;
                }
            }
        }
        monos.push(factors);
        cursor.skip_ws();
        match cursor.peek() {
            None => break,
            Some(',') => {
                cursor.bump();
            }
            Some(c) => return Err(cursor.error(format!("unexpected character '{c}'"))),
        }
    }

    // assign coordinates to variables
    let mut vars: Vec<Var> = Vec::new();
    for m in &monos {
        for (v, _) in m {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
    }
    let all_indexed = vars.iter().all(|v| v.index.is_some())
        && vars
            .iter()
            .all(|v| v.letters == vars[0].letters);
    let indexed_valid = all_indexed && vars.iter().all(|v| v.index.unwrap() >= 1);
    type CoordOf = Box<dyn Fn(&Var) -> usize>;
    let (dimension, coord_of, variable_names): (usize, CoordOf, Vec<String>) =
        if indexed_valid {
            let max = vars.iter().map(|v| v.index.unwrap()).max().unwrap() as usize;
            let letters = vars[0].letters.clone();
            let names = (1..=max).map(|i| format!("{letters}{i}")).collect();
            (
                max,
                Box::new(|v: &Var| v.index.unwrap() as usize - 1),
                names,
            )
        } else {
            let names: Vec<String> = vars.iter().map(Var::name).collect();
            let order = vars.clone();
            (
                vars.len(),
                Box::new(move |v: &Var| order.iter().position(|x| x == v).unwrap()),
                names,
            )
        };

    let mut exponents: Vec<Exponent> = Vec::new();
    let mut warnings = Vec::new();
    for m in &monos {
        let mut coords = vec![0i64; dimension];
        for (v, power) in m {
            coords[coord_of(v)] += *power as i64;
        }
        if coords.iter().all(|&c| c == 0) {
            return Err(ParseError {
                line: 1,
                column: 1,
                message: "constant generator makes the unit ideal (unsupported)".into(),
            });
        }
        let e = Exponent::new(coords).expect("parsed exponents are non-negative");
        if exponents.contains(&e) {
            warnings.push(format!("duplicate generator {e} dropped"));
        } else {
            exponents.push(e);
        }
    }

    Ok(IdealSource {
        dimension,
        exponents,
        variable_names,
        provenance: provenance.to_string(),
        warnings,
    })
}

/// Render an [`IdealSource`] back to the textual syntax; inverse of
/// [`parse_ideal`] on its own output.
pub fn render_ideal(source: &IdealSource) -> String {
    let monos: Vec<String> = source
        .exponents
        .iter()
        .map(|e| {
            let factors: Vec<String> = e
                .coords()
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(i, &c)| {
                    let name = &source.variable_names[i];
                    if c == 1 {
                        name.clone()
                    } else {
                        format!("{name}^{c}")
                    }
                })
                .collect();
            factors.join(" ")
        })
        .collect();
    monos.join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exp(coords: &[i64]) -> Exponent {
        Exponent::new(coords.to_vec()).unwrap()
    }

    #[test]
    fn parses_indexed_variables() {
        let s = parse_ideal("z1^8, z1^6 z2, z1^2 z2^3, z1 z2^5, z2^6", "inline").unwrap();
        assert_eq!(s.dimension, 2);
        assert_eq!(
            s.exponents,
            vec![
                exp(&[8, 0]),
                exp(&[6, 1]),
                exp(&[2, 3]),
                exp(&[1, 5]),
                exp(&[0, 6]),
            ]
        );
        assert_eq!(s.variable_names, vec!["z1", "z2"]);
    }

    #[test]
    fn dimension_from_highest_index() {
        let s = parse_ideal("z1 z3, z2 z3", "inline").unwrap();
        assert_eq!(s.dimension, 3);
        assert_eq!(s.exponents, vec![exp(&[1, 0, 1]), exp(&[0, 1, 1])]);
    }

    #[test]
    fn parses_named_variables() {
        let s = parse_ideal("x^8 y, y^3", "inline").unwrap();
        assert_eq!(s.dimension, 2);
        assert_eq!(s.exponents, vec![exp(&[8, 1]), exp(&[0, 3])]);
        assert_eq!(s.variable_names, vec!["x", "y"]);
    }

    #[test]
    fn rejects_unit_ideal() {
        assert!(parse_ideal("z1^0", "inline").is_err());
    }

    #[test]
    fn duplicate_generators_warn() {
        let s = parse_ideal("z1 z2, z2 z1", "inline").unwrap();
        assert_eq!(s.exponents.len(), 1);
        assert_eq!(s.warnings.len(), 1);
    }

    #[test]
    fn syntax_error_has_location() {
        let err = parse_ideal("z1^8,\n z2^", "inline").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.column >= 4, "column was {}", err.column);
    }

    #[test]
    fn repeated_factor_accumulates() {
        let s = parse_ideal("z1 z1^2", "inline").unwrap();
        assert_eq!(s.exponents, vec![exp(&[3])]);
    }

    #[test]
    fn round_trip() {
        let s = parse_ideal("z1^8, z1^6 z2, z2^6", "inline").unwrap();
        let rendered = render_ideal(&s);
        let reparsed = parse_ideal(&rendered, "inline").unwrap();
        assert_eq!(reparsed.exponents, s.exponents);
        assert_eq!(reparsed.variable_names, s.variable_names);
    }
}
