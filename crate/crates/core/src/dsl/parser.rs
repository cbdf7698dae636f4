//! Recursive-descent parser for coloring expressions.
//!
//! ```text
//! expr   := cond
//! cond   := "if" cmp "then" expr "else" expr | cmp
//! cmp    := sum (("<" | "<=" | "==" | "!=") sum)?
//! sum    := term (("+" | "-") term)*
//! term   := factor (("*" | "/" | "%") factor)*
//! factor := nat | "x" | "y" | "min(" expr "," expr ")" | "max(" expr "," expr ")"
//!         | "(" expr ")" | "-" factor
//! ```

use num_bigint::BigInt;

use super::{BinOp, CmpOp, DslError, Expr};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Nat(BigInt),
    Ident(String),
    Sym(&'static str),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Nat(n) => n.to_string(),
            Tok::Ident(s) => s.clone(),
            Tok::Sym(s) => (*s).to_string(),
            Tok::End => "end of input".to_string(),
        }
    }
}

const SYMBOLS: [&str; 13] = ["<=", "==", "!=", "<", "+", "-", "*", "/", "%", "(", ")", ",", "!"];

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, DslError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i];
        if ch.is_ascii_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = src[start..i].parse().expect("digits");
            out.push((start, Tok::Nat(n)));
        } else if ch.is_ascii_alphabetic() || ch == b'_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(src[start..i].to_string())));
        } else {
            // "!" alone is not an operator; keep it so the parser reports it in place
            match SYMBOLS.iter().find(|s| src[i..].starts_with(**s)) {
                Some(&s) if s != "!" => {
                    out.push((i, Tok::Sym(s)));
                    i += s.len();
                }
                _ => {
                    let found = src[i..].chars().next().expect("in bounds").to_string();
                    return Err(DslError::Syntax {
                        pos: i,
                        expected: vec!["an operator, number or identifier".into()],
                        found,
                    });
                }
            }
        }
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, expected: &[&str]) -> Result<T, DslError> {
        Err(DslError::Syntax {
            pos: self.pos(),
            expected: expected.iter().map(|s| (*s).to_string()).collect(),
            found: self.peek().describe(),
        })
    }

    fn is_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Tok::Sym(t) if *t == s)
    }

    fn is_keyword(&self, k: &str) -> bool {
        matches!(self.peek(), Tok::Ident(t) if t == k)
    }

    fn expect_sym(&mut self, s: &'static str) -> Result<(), DslError> {
        if self.is_sym(s) {
            self.bump();
            Ok(())
        } else {
            self.error(&[s])
        }
    }

    fn expect_keyword(&mut self, k: &'static str) -> Result<(), DslError> {
        if self.is_keyword(k) {
            self.bump();
            Ok(())
        } else {
            self.error(&[k])
        }
    }

    fn expr(&mut self) -> Result<Expr, DslError> {
        if self.is_keyword("if") {
            self.bump();
            let cond = self.cmp()?;
            self.expect_keyword("then")?;
            let then = self.expr()?;
            self.expect_keyword("else")?;
            let other = self.expr()?;
            return Ok(Expr::If(Box::new(cond), Box::new(then), Box::new(other)));
        }
        self.cmp()
    }

    fn cmp(&mut self) -> Result<Expr, DslError> {
        let lhs = self.sum()?;
        let op = match self.peek() {
            Tok::Sym("<") => CmpOp::Lt,
            Tok::Sym("<=") => CmpOp::Le,
            Tok::Sym("==") => CmpOp::Eq,
            Tok::Sym("!=") => CmpOp::Ne,
            _ => return Ok(lhs),
        };
        self.bump();
        let rhs = self.sum()?;
        Ok(Expr::Cmp(op, Box::new(lhs), Box::new(rhs)))
    }

    fn sum(&mut self) -> Result<Expr, DslError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Sym("+") => BinOp::Add,
                Tok::Sym("-") => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn term(&mut self) -> Result<Expr, DslError> {
        let mut lhs = self.factor()?;
        loop {
            let op = match self.peek() {
                Tok::Sym("*") => BinOp::Mul,
                Tok::Sym("/") => BinOp::Div,
                Tok::Sym("%") => BinOp::Mod,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.factor()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn factor(&mut self) -> Result<Expr, DslError> {
        const FACTOR: [&str; 7] = ["number", "x", "y", "min(", "max(", "(", "-"];
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Nat(n) => {
                self.bump();
                Ok(Expr::Nat(n))
            }
            Tok::Sym("(") => {
                self.bump();
                let e = self.expr()?;
                self.expect_sym(")")?;
                Ok(e)
            }
            Tok::Sym("-") => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.factor()?)))
            }
            Tok::Ident(name) => match name.as_str() {
                "x" => {
                    self.bump();
                    Ok(Expr::X)
                }
                "y" => {
                    self.bump();
                    Ok(Expr::Y)
                }
                "min" | "max" => {
                    self.bump();
                    self.expect_sym("(")?;
                    let a = self.expr()?;
                    self.expect_sym(",")?;
                    let b = self.expr()?;
                    self.expect_sym(")")?;
                    let op = if name == "min" { BinOp::Min } else { BinOp::Max };
                    Ok(Expr::Bin(op, Box::new(a), Box::new(b)))
                }
                "if" | "then" | "else" => self.error(&FACTOR),
                _ => Err(DslError::UnknownIdentifier { pos, name }),
            },
            _ => self.error(&FACTOR),
        }
    }
}

/// Parses a complete expression; trailing input is an error.
pub fn parse(src: &str) -> Result<Expr, DslError> {
    let mut p = Parser { toks: lex(src)?, at: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.error(&["an operator", "end of input"]);
    }
    Ok(e)
}
