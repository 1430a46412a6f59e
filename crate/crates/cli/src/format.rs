//! The ideal file format.
//!
//! ```text
//! # the complete intersection (x^2 - y^2, xy)
//! field Q
//! vars x y
//! gens x^2 - y^2, x*y
//! ```
//!
//! `field` is `Q` or `Fp <prime>`. A generator is a sum of `±`-separated
//! terms, each a `*`-separated product of numbers (`3`, `-2/5`) and powers
//! `var^exp`. Several `gens` lines accumulate. `#` starts a comment.

use std::fmt::Write as _;

use axial_core::field::format_rational;
use axial_core::{Field, FieldSpec, Monomial, PolyRing, Polynomial, PrimeField, Rationals};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("{0}")]
    Syntax(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("generator {0} is not homogeneous")]
    Inhomogeneous(usize),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("denominator of {0} vanishes modulo {1}")]
    VanishingDenominator(String, u64),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

/// A parsed ideal file. Coefficients are stored as rationals; over 𝔽ₚ they
/// are already reduced to 0…p−1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFile {
    pub field: FieldSpec,
    pub vars: Vec<String>,
    pub gens: Vec<Polynomial<BigRational>>,
}

impl IdealFile {
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// The generators as elements of `ring`, whose field must match.
    pub fn polys<F: Field>(&self, ring: &PolyRing<F>) -> Vec<Polynomial<F::Elem>> {
        let field = ring.field();
        self.gens
            .iter()
            .map(|g| {
                ring.from_terms(g.terms().iter().map(|(c, m)| {
                    let c = field.from_rational(c).expect("checked while parsing");
                    (c, m.clone())
                }))
            })
            .collect()
    }
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    /// Column of `chars[0]`.
    offset: usize,
    vars: &'a [String],
}

impl Cursor<'_> {
    fn err(&self, kind: ParseErrorKind) -> ParseError {
        self.err_at(self.pos, kind)
    }

    fn err_at(&self, pos: usize, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.line,
            column: self.offset + pos,
            kind,
        }
    }

    fn syntax(&self, msg: impl Into<String>) -> ParseError {
        self.err(ParseErrorKind::Syntax(msg.into()))
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().ok()
    }

    fn number(&mut self) -> Result<BigRational, ParseError> {
        let num = self.digits().ok_or_else(|| self.syntax("expected a number"))?;
        if self.eat('/') {
            let at = self.pos;
            let den = self.digits().ok_or_else(|| self.syntax("expected a denominator"))?;
            if den.is_zero() {
                return Err(self.err_at(at, ParseErrorKind::Syntax("zero denominator".into())));
            }
            Ok(BigRational::new(num, den))
        } else {
            Ok(BigRational::from_integer(num))
        }
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|&c| c == '_' || c.is_alphanumeric() && (self.pos > start || !c.is_numeric()))
        {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    /// factor := number | var ['^' exp]
    fn factor(&mut self, coeff: &mut BigRational, exps: &mut [u32]) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                *coeff *= self.number()?;
                Ok(())
            }
            Some(_) => {
                let at = self.pos;
                let Some(name) = self.ident() else {
                    return Err(self.syntax("expected a number or a variable"));
                };
                let k = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| self.err_at(at, ParseErrorKind::UnknownVariable(name)))?;
                let e = if self.eat('^') {
                    let d = self.digits().ok_or_else(|| self.syntax("expected an exponent"))?;
                    u32::try_from(d).map_err(|_| self.syntax("exponent too large"))?
                } else {
                    1
                };
                exps[k] = exps[k].checked_add(e).ok_or_else(|| self.syntax("exponent too large"))?;
                Ok(())
            }
            None => Err(self.syntax("unexpected end of line")),
        }
    }

    /// poly := ['+'|'-'] term (('+'|'-') term)*
    fn poly(&mut self) -> Result<Vec<(BigRational, Monomial)>, ParseError> {
        let mut terms = Vec::new();
        let mut sign = if self.eat('-') {
            -BigRational::one()
        } else {
            self.eat('+');
            BigRational::one()
        };
        loop {
            let mut coeff = sign;
            let mut exps = vec![0; self.vars.len()];
            self.factor(&mut coeff, &mut exps)?;
            while self.eat('*') {
                self.factor(&mut coeff, &mut exps)?;
            }
            terms.push((coeff, Monomial::new(&exps)));
            sign = match self.peek() {
                Some('+') => BigRational::one(),
                Some('-') => -BigRational::one(),
                _ => return Ok(terms),
            };
            self.pos += 1;
        }
    }
}

/// Strips a trailing comment; returns the code part.
fn code_of(line: &str) -> &str {
    line.split_once('#').map_or(line, |(code, _)| code)
}

/// Parses an ideal file. Zero generators are dropped and duplicates removed.
pub fn parse_ideal(text: &str) -> Result<IdealFile, ParseError> {
    let mut field = None;
    let mut vars: Option<Vec<String>> = None;
    let mut gens: Vec<Polynomial<BigRational>> = Vec::new();
    let mut line_count = 0;

    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        line_count = line;
        let code = code_of(raw);
        let trimmed = code.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let start_col = code.chars().count() - trimmed.chars().count() + 1;
        let (keyword, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
        let rest_col = start_col + keyword.chars().count() + 1;
        let at = |column: usize, kind| ParseError { line, column, kind };
        let syntax = |column: usize, msg: &str| at(column, ParseErrorKind::Syntax(msg.to_string()));

        match keyword {
            "field" => {
                if field.is_some() {
                    return Err(syntax(start_col, "duplicate `field` line"));
                }
                let words: Vec<&str> = rest.split_whitespace().collect();
                field = Some(match words.as_slice() {
                    ["Q"] => FieldSpec::Rational,
                    ["Fp", p] => {
                        let p: u64 = p.parse().map_err(|_| syntax(rest_col, "expected a characteristic"))?;
                        FieldSpec::prime(p).map_err(|_| at(rest_col, ParseErrorKind::NotPrime(p)))?
                    }
                    _ => return Err(syntax(rest_col, "expected `Q` or `Fp <prime>`")),
                });
            }
            "vars" => {
                if vars.is_some() {
                    return Err(syntax(start_col, "duplicate `vars` line"));
                }
                let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                if names.is_empty() {
                    return Err(syntax(rest_col, "expected at least one variable"));
                }
                for (k, name) in names.iter().enumerate() {
                    let valid = name.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
                        && name.chars().all(|c| c.is_alphanumeric() || c == '_');
                    if !valid {
                        return Err(syntax(rest_col, &format!("invalid variable name `{name}`")));
                    }
                    if names[..k].contains(name) {
                        return Err(syntax(rest_col, &format!("duplicate variable `{name}`")));
                    }
                }
                vars = Some(names);
            }
            "gens" => {
                let Some(names) = vars.as_deref() else {
                    return Err(syntax(start_col, "`gens` before `vars`"));
                };
                let Some(spec) = field else {
                    return Err(syntax(start_col, "`gens` before `field`"));
                };
                let ring = PolyRing::new(Rationals, names.len());
                let mut cur = Cursor {
                    chars: rest.chars().collect(),
                    pos: 0,
                    line,
                    offset: rest_col,
                    vars: names,
                };
                loop {
                    let begin = cur.peek().map(|_| cur.pos).unwrap_or(cur.pos);
                    // Like terms combine over ℚ before reduction mod p.
                    let g = ring.from_terms(cur.poly()?);
                    let terms = reduce_coefficients(spec, g.into_terms())
                        .map_err(|c| cur.err_at(begin, ParseErrorKind::VanishingDenominator(c, spec.characteristic())))?;
                    let g = ring.from_terms(terms);
                    if !g.is_homogeneous() {
                        return Err(cur.err_at(begin, ParseErrorKind::Inhomogeneous(gens.len() + 1)));
                    }
                    if !g.is_zero() && !gens.contains(&g) {
                        gens.push(g);
                    }
                    match cur.peek() {
                        Some(',') => cur.pos += 1,
                        None => break,
                        Some(_) => return Err(cur.syntax("expected `,` or end of line")),
                    }
                }
            }
            other => return Err(syntax(start_col, &format!("unknown keyword `{other}`"))),
        }
    }

    let end = |what: &str| ParseError {
        line: line_count + 1,
        column: 1,
        kind: ParseErrorKind::Syntax(format!("missing `{what}` line")),
    };
    Ok(IdealFile {
        field: field.ok_or_else(|| end("field"))?,
        vars: vars.ok_or_else(|| end("vars"))?,
        gens,
    })
}

/// Maps coefficients into the field, keeping rationals as the carrier.
fn reduce_coefficients(
    spec: FieldSpec,
    terms: Vec<(BigRational, Monomial)>,
) -> Result<Vec<(BigRational, Monomial)>, String> {
    match spec {
        FieldSpec::Rational => Ok(terms),
        FieldSpec::Prime(p) => {
            let f = PrimeField::new(p).expect("validated prime");
            terms
                .into_iter()
                .map(|(c, m)| match f.from_rational(&c) {
                    Some(v) => Ok((f.to_rational(&v), m)),
                    None => Err(format_rational(&c)),
                })
                .collect()
        }
    }
}

/// `x^2*y`, or `1` for the empty product.
pub fn monomial_text(m: &Monomial, vars: &[String]) -> String {
    let mut out = String::new();
    for (k, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('*');
        }
        out.push_str(&vars[k]);
        if e > 1 {
            let _ = write!(out, "^{e}");
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

/// Renders a polynomial with the given variable names, in ring order.
pub fn poly_text<F: Field>(field: &F, p: &Polynomial<F::Elem>, vars: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (c, m)) in p.terms().iter().enumerate() {
        let c = field.to_rational(c);
        let negative = c < BigRational::zero();
        let mag = if negative { -c } else { c };
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag_text = format_rational(&mag);
        if m.is_one() {
            out.push_str(&mag_text);
        } else if mag.is_one() {
            out.push_str(&monomial_text(m, vars));
        } else {
            let _ = write!(out, "{mag_text}*{}", monomial_text(m, vars));
        }
    }
    out
}

/// Prints an ideal file that [`parse_ideal`] reads back unchanged.
pub fn print_ideal(file: &IdealFile) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "field {}", file.field);
    let _ = writeln!(out, "vars {}", file.vars.join(" "));
    let gens: Vec<String> = file.gens.iter().map(|g| poly_text(&Rationals, g, &file.vars)).collect();
    if !gens.is_empty() {
        let _ = writeln!(out, "gens {}", gens.join(", "));
    }
    out
}
