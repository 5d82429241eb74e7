//! Tokenizer and recursive-descent parser for polynomial expressions over ℚ.

use num_bigint::BigInt;

use super::field::Ring;
use super::linear_form::LinearForm;
use super::rat::Rat;
use super::sympoly::SymPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
    Eof,
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

pub fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            Tok::Num(chars[start..i].iter().collect::<String>().parse().unwrap())
        } else if c.is_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else if "+-*/^()[]{};,:|@=".contains(c) {
            i += 1;
            Tok::Sym(c)
        } else {
            return Err(Error::Parse {
                line: l0,
                column: c0,
                message: format!("unexpected character {c:?}"),
                expected: vec!["number".into(), "identifier".into(), "operator".into()],
            });
        };
        col += i - start;
        out.push(Token { tok, line: l0, column: c0 });
    }
    out.push(Token { tok: Tok::Eof, line, column: col });
    Ok(out)
}

pub struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    pub fn new(text: &str) -> Result<Self> {
        Ok(Parser { toks: tokenize(text)?, pos: 0 })
    }

    pub fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    pub fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    pub fn advance(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    pub fn error(&self, message: impl Into<String>, expected: &[&str]) -> Error {
        let t = &self.toks[self.pos];
        Error::Parse { line: t.line, column: t.column, message: message.into(), expected: expected.iter().map(|s| s.to_string()).collect() }
    }

    /// Line and column of the next token.
    pub fn position(&self) -> (usize, usize) {
        let t = &self.toks[self.pos];
        (t.line, t.column)
    }

    pub fn at(&self, c: char) -> bool {
        *self.peek() == Tok::Sym(c)
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.at(c) {
            self.advance();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("found {}", describe(self.peek())), &[&format!("'{c}'")]))
        }
    }

    pub fn expect_eof(&mut self) -> Result<()> {
        match self.peek() {
            Tok::Eof => Ok(()),
            t => Err(self.error(format!("trailing input {}", describe(t)), &["end of input"])),
        }
    }

    pub fn ident(&mut self) -> Result<String> {
        match self.advance() {
            Tok::Ident(s) => Ok(s),
            t => {
                self.pos -= 1;
                Err(self.error(format!("found {}", describe(&t)), &["identifier"]))
            }
        }
    }

    /// `expr := term (('+'|'-') term)*`
    pub fn expr(&mut self) -> Result<SymPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add_ref(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub_ref(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<SymPoly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul_ref(&self.unary()?);
            } else if self.at('/') {
                self.advance();
                let d = self.unary()?;
                match d.as_constant() {
                    Some(c) if !c.is_zero() => acc = acc.scale(&c.recip()),
                    Some(_) => return Err(self.error("division by zero", &["nonzero constant"])),
                    None => return Err(self.error("division by a non-constant", &["rational constant"])),
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<SymPoly> {
        if self.eat('-') {
            return Ok(self.unary()?.neg_ref());
        }
        if self.eat('+') {
            return self.unary();
        }
        let base = self.atom()?;
        if self.eat('^') {
            match self.advance() {
                Tok::Num(n) => {
                    let e: u32 = n.try_into().map_err(|_| self.error("exponent too large", &["small integer"]))?;
                    return Ok(base.pow(e));
                }
                t => {
                    self.pos -= 1;
                    return Err(self.error(format!("found {}", describe(&t)), &["integer exponent"]));
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<SymPoly> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.advance();
                Ok(SymPoly::constant(Rat::from_integer(n)))
            }
            Tok::Ident(s) => {
                self.advance();
                Ok(SymPoly::var(&s))
            }
            Tok::Sym('(') => {
                self.advance();
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            t => Err(self.error(format!("found {}", describe(&t)), &["number", "identifier", "'('", "'-'"])),
        }
    }
}

pub fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("number {n}"),
        Tok::Ident(s) => format!("identifier {s}"),
        Tok::Sym(c) => format!("'{c}'"),
        Tok::Eof => "end of input".into(),
    }
}

/// Whole-text polynomial expression.
pub fn parse_poly(text: &str) -> Result<SymPoly> {
    let mut p = Parser::new(text)?;
    let e = p.expr()?;
    p.expect_eof()?;
    Ok(e)
}

/// Reads a polynomial of degree ≤ 1 in `n` and `symbols` as a linear form.
pub fn to_linear_form(p: &SymPoly, symbols: &[String]) -> Result<LinearForm> {
    let bad = |m: String| Error::Invalid(m);
    for s in p.symbols() {
        if s != "n" && !symbols.contains(&s) {
            return Err(bad(format!("undeclared symbol {s}")));
        }
    }
    let mut js = vec![Rat::zero(); symbols.len()];
    let mut n = Rat::zero();
    let mut c = Rat::zero();
    for (m, v) in p.terms() {
        match m.as_slice() {
            [] => c = v.clone(),
            [(s, 1)] if s == "n" => n = v.clone(),
            [(s, 1)] => js[symbols.iter().position(|x| x == s).unwrap()] = v.clone(),
            _ => return Err(bad(format!("{} is not linear", p.render(&[])))),
        }
    }
    Ok(LinearForm::new(n, js, c))
}

pub fn parse_linear_form(text: &str, symbols: &[String]) -> Result<LinearForm> {
    to_linear_form(&parse_poly(text)?, symbols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{int, rat};

    #[test]
    fn precedence_and_division() {
        let p = parse_poly("1/2 + 3*a^2 - (a - 1)/4").unwrap();
        assert_eq!(p.render(&[]), "-1/4*a + 3*a^2 + 3/4");
        assert!(parse_poly("a/b").is_err());
    }

    #[test]
    fn linear_forms() {
        let syms = vec!["j1".to_string(), "j2".to_string()];
        let f = parse_linear_form("(j1+j2+1)/2 - n/2", &syms).unwrap();
        assert_eq!(f, LinearForm::new(rat(-1, 2), vec![rat(1, 2), rat(1, 2)], rat(1, 2)));
        assert!(parse_linear_form("j1*j2", &syms).is_err());
        assert!(parse_linear_form("j3", &syms).is_err());
        assert_eq!(parse_linear_form("2", &syms).unwrap(), LinearForm::constant(int(2)));
    }

    #[test]
    fn positions_in_errors() {
        match parse_poly("1 +\n  * 2") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("{other:?}"),
        }
    }
}
