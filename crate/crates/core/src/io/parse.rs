//! Plain-text ideal files.
//!
//! ```text
//! # name: two squares
//! ring: x, y
//! x^2
//! y^2        # trailing comments are fine
//! ```
//!
//! Comment lines of the form `# key: value` before the first generator are
//! kept as metadata.

use std::collections::BTreeMap;
use std::fmt;

use rug::{Integer, Rational};

use crate::algebra::{Polynomial, VariableContext};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingRing,
    InvalidRing(String),
    UndeclaredVariable(String),
    MalformedExponent,
    ImplicitMultiplication,
    ZeroDenominator,
    UnexpectedToken(String),
    UnexpectedEnd,
    EmptyGeneratorList,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::MissingRing => write!(f, "expected a `ring:` header"),
            Self::InvalidRing(msg) => write!(f, "invalid ring header: {msg}"),
            Self::UndeclaredVariable(v) => write!(f, "undeclared variable {v}"),
            Self::MalformedExponent => write!(f, "malformed exponent: expected a non-negative integer"),
            Self::ImplicitMultiplication => write!(f, "implicit multiplication is not allowed, use `*`"),
            Self::ZeroDenominator => write!(f, "zero denominator"),
            Self::UnexpectedToken(t) => write!(f, "unexpected `{t}`"),
            Self::UnexpectedEnd => write!(f, "unexpected end of line"),
            Self::EmptyGeneratorList => write!(f, "no generators"),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.kind)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFile {
    pub context: VariableContext,
    pub generators: Vec<Polynomial>,
    pub metadata: BTreeMap<String, String>,
}

impl IdealFile {
    /// Renders the file back to text; parsing the result gives the same
    /// polynomials.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.metadata {
            out.push_str(&format!("# {k}: {v}\n"));
        }
        out.push_str(&format!("ring: {}\n", self.context.names().join(", ")));
        for g in &self.generators {
            out.push_str(&g.format(&self.context));
            out.push('\n');
        }
        out
    }

    /// True when every generator is a single term.
    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(|g| g.is_term() || g.is_zero())
    }
}

pub fn parse_ideal(text: &str) -> Result<(VariableContext, Vec<Polynomial>), ParseError> {
    parse_ideal_file(text).map(|f| (f.context, f.generators))
}

pub fn parse_ideal_file(text: &str) -> Result<IdealFile, ParseError> {
    let mut context: Option<VariableContext> = None;
    let mut generators = Vec::new();
    let mut metadata = BTreeMap::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let (body, comment) = match raw.find('#') {
            Some(p) => (&raw[..p], Some(&raw[p + 1..])),
            None => (raw, None),
        };
        if body.trim().is_empty() {
            if let (Some(c), true) = (comment, generators.is_empty()) {
                if let Some((k, v)) = c.split_once(':') {
                    metadata.insert(k.trim().to_string(), v.trim().to_string());
                }
            }
            continue;
        }
        match &context {
            None => context = Some(parse_ring(body, line)?),
            Some(ctx) => generators.push(Parser::new(body, line, ctx).parse_line()?),
        }
    }
    let Some(context) = context else {
        return Err(ParseError { line: last_line.max(1), column: 1, kind: ParseErrorKind::MissingRing });
    };
    if generators.is_empty() {
        return Err(ParseError { line: last_line.max(1), column: 1, kind: ParseErrorKind::EmptyGeneratorList });
    }
    Ok(IdealFile { context, generators, metadata })
}

fn parse_ring(body: &str, line: usize) -> Result<VariableContext, ParseError> {
    let column = body.len() - body.trim_start().len() + 1;
    let err = |kind| ParseError { line, column, kind };
    let rest = body.trim().strip_prefix("ring:").ok_or_else(|| err(ParseErrorKind::MissingRing))?;
    let names: Vec<&str> = rest.split(',').map(str::trim).collect();
    VariableContext::new(&names).map_err(|e| err(ParseErrorKind::InvalidRing(e.to_string())))
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Number(r) => write!(f, "{r}"),
            Token::Ident(s) => write!(f, "{s}"),
            Token::Plus => write!(f, "+"),
            Token::Minus => write!(f, "-"),
            Token::Star => write!(f, "*"),
            Token::Caret => write!(f, "^"),
            Token::LParen => write!(f, "("),
            Token::RParen => write!(f, ")"),
        }
    }
}

struct Parser<'a> {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    line: usize,
    end_column: usize,
    ctx: &'a VariableContext,
    lex_error: Option<ParseError>,
}

impl<'a> Parser<'a> {
    fn new(body: &str, line: usize, ctx: &'a VariableContext) -> Self {
        let mut tokens = Vec::new();
        let mut lex_error = None;
        let chars: Vec<char> = body.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let column = i + 1;
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let simple = match c {
                '+' => Some(Token::Plus),
                '-' => Some(Token::Minus),
                '*' => Some(Token::Star),
                '^' => Some(Token::Caret),
                '(' => Some(Token::LParen),
                ')' => Some(Token::RParen),
                _ => None,
            };
            if let Some(t) = simple {
                tokens.push((t, column));
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let num: String = chars[start..i].iter().collect();
                let mut value = Rational::from(num.parse::<Integer>().unwrap());
                if i < chars.len() && chars[i] == '/' {
                    let dstart = i + 1;
                    let mut j = dstart;
                    while j < chars.len() && chars[j].is_ascii_digit() {
                        j += 1;
                    }
                    if j == dstart {
                        lex_error.get_or_insert(ParseError {
                            line,
                            column: i + 1,
                            kind: ParseErrorKind::UnexpectedToken("/".into()),
                        });
                        break;
                    }
                    let den: Integer = chars[dstart..j].iter().collect::<String>().parse().unwrap();
                    if den == 0 {
                        lex_error.get_or_insert(ParseError { line, column: i + 2, kind: ParseErrorKind::ZeroDenominator });
                        break;
                    }
                    value /= Rational::from(den);
                    i = j;
                }
                tokens.push((Token::Number(value), column));
            } else if c.is_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                tokens.push((Token::Ident(chars[start..i].iter().collect()), column));
            } else {
                lex_error.get_or_insert(ParseError { line, column, kind: ParseErrorKind::UnexpectedToken(c.to_string()) });
                break;
            }
        }
        Self { tokens, pos: 0, line, end_column: chars.len() + 1, ctx, lex_error }
    }

    fn err(&self, column: usize, kind: ParseErrorKind) -> ParseError {
        ParseError { line: self.line, column, kind }
    }

    fn peek(&self) -> Option<&(Token, usize)> {
        self.tokens.get(self.pos)
    }

    fn column(&self) -> usize {
        self.peek().map_or(self.end_column, |t| t.1)
    }

    fn parse_line(mut self) -> Result<Polynomial, ParseError> {
        if let Some(e) = self.lex_error.take() {
            return Err(e);
        }
        let p = self.expr()?;
        match self.peek() {
            None => Ok(p),
            Some((Token::Number(_) | Token::Ident(_) | Token::LParen, col)) => {
                Err(self.err(*col, ParseErrorKind::ImplicitMultiplication))
            }
            Some((t, col)) => Err(self.err(*col, ParseErrorKind::UnexpectedToken(t.to_string()))),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let n = self.ctx.nvars();
        let mut negate = false;
        match self.peek() {
            Some((Token::Minus, _)) => {
                negate = true;
                self.pos += 1;
            }
            Some((Token::Plus, _)) => self.pos += 1,
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            let sub = match self.peek() {
                Some((Token::Plus, _)) => false,
                Some((Token::Minus, _)) => true,
                _ => break,
            };
            self.pos += 1;
            let t = self.term()?;
            acc = if sub { acc.try_sub(&t) } else { acc.try_add(&t) }.expect("one ring");
        }
        debug_assert_eq!(acc.nvars(), n);
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while let Some((Token::Star, _)) = self.peek() {
            self.pos += 1;
            acc = acc.try_mul(&self.factor()?).expect("one ring");
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.primary()?;
        if let Some((Token::Caret, _)) = self.peek() {
            self.pos += 1;
            let col = self.column();
            let e = match self.peek() {
                Some((Token::Number(r), _)) if r.denom() == &1 => r.numer().to_u32(),
                _ => None,
            };
            let Some(e) = e else {
                return Err(self.err(col, ParseErrorKind::MalformedExponent));
            };
            self.pos += 1;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Polynomial, ParseError> {
        let n = self.ctx.nvars();
        let col = self.column();
        let Some((tok, _)) = self.peek().cloned() else {
            return Err(self.err(col, ParseErrorKind::UnexpectedEnd));
        };
        self.pos += 1;
        match tok {
            Token::Number(r) => Ok(Polynomial::constant(n, r)),
            Token::Ident(name) => match self.ctx.index_of(&name) {
                Some(i) => Ok(Polynomial::var(n, i)),
                None => Err(self.err(col, ParseErrorKind::UndeclaredVariable(name))),
            },
            Token::LParen => {
                let inner = self.expr()?;
                match self.peek() {
                    Some((Token::RParen, _)) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    Some((t, c)) => Err(self.err(*c, ParseErrorKind::UnexpectedToken(t.to_string()))),
                    None => Err(self.err(self.end_column, ParseErrorKind::UnexpectedEnd)),
                }
            }
            t => Err(self.err(col, ParseErrorKind::UnexpectedToken(t.to_string()))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, terms: &[(i64, &[u32])]) -> Polynomial {
        Polynomial::from_int_terms(n, terms).unwrap()
    }

    #[test]
    fn minimal_files() {
        let (ctx, gens) = parse_ideal("ring: x, y\nx^2\ny^2").unwrap();
        assert_eq!(ctx.names(), &["x", "y"]);
        assert_eq!(gens, vec![p(2, &[(1, &[2, 0])]), p(2, &[(1, &[0, 2])])]);
        let (_, gens) = parse_ideal("ring: x, y\nx^2 + 3*x*y").unwrap();
        assert_eq!(gens, vec![p(2, &[(1, &[2, 0]), (3, &[1, 1])])]);
    }

    #[test]
    fn richer_syntax() {
        let text = "# name: sample\n# source: hand\nring: x, y, z\n\n-(x + y)^2 + 2/3*z^2  # trailing\n";
        let f = parse_ideal_file(text).unwrap();
        assert_eq!(f.metadata.get("name").map(String::as_str), Some("sample"));
        let expected = Polynomial::from_terms(
            3,
            [
                (crate::algebra::Monomial::new(vec![2, 0, 0]), Rational::from(-1)),
                (crate::algebra::Monomial::new(vec![1, 1, 0]), Rational::from(-2)),
                (crate::algebra::Monomial::new(vec![0, 2, 0]), Rational::from(-1)),
                (crate::algebra::Monomial::new(vec![0, 0, 2]), Rational::from((2, 3))),
            ],
        )
        .unwrap();
        assert_eq!(f.generators, vec![expected]);
        assert_eq!(parse_ideal_file(&f.to_text()).unwrap(), f);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_ideal("ring: x\nx^2 + y").unwrap_err();
        assert_eq!((e.line, e.column), (2, 7));
        assert_eq!(e.kind, ParseErrorKind::UndeclaredVariable("y".into()));
        assert_eq!(e.to_string(), "line 2, column 7: undeclared variable y");
        let e = parse_ideal("ring: x\nx^-1").unwrap_err();
        assert_eq!((e.line, e.column, e.kind), (2, 3, ParseErrorKind::MalformedExponent));
        let e = parse_ideal("ring: x\nx^1/2").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::MalformedExponent);
        assert_eq!(parse_ideal("ring: x\n# nothing").unwrap_err().kind, ParseErrorKind::EmptyGeneratorList);
        assert_eq!(parse_ideal("ring: x, y\n2 x").unwrap_err().kind, ParseErrorKind::ImplicitMultiplication);
        assert_eq!(parse_ideal("x^2").unwrap_err().kind, ParseErrorKind::MissingRing);
        assert!(matches!(parse_ideal("ring: x, x\nx").unwrap_err().kind, ParseErrorKind::InvalidRing(_)));
        assert_eq!(parse_ideal("ring: x\n1/0*x").unwrap_err().kind, ParseErrorKind::ZeroDenominator);
        assert_eq!(parse_ideal("ring: x\n(x + 1").unwrap_err().kind, ParseErrorKind::UnexpectedEnd);
    }
}
