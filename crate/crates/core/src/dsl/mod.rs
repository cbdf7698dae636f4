//! A small total expression language for edge colorings.
//!
//! An expression over the endpoints `x` and `y` is evaluated at
//! `(min, max)` of the pair, so every expression defines a symmetric coloring,
//! and the result is reduced into `0..k`. Arithmetic is over arbitrary-precision
//! integers; `/` and `%` round toward negative infinity.
//!
//! Division by zero follows a total convention, `t / 0 = 0` and `t % 0 = t`,
//! unless the coloring is built in strict mode. Divisors that are constant zero
//! are rejected when the expression is loaded.

mod parser;
mod table;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::erdos::{Coloring, ColoringError};
use crate::word::Color;

pub use parser::parse;
pub use table::{TableColoring, TableFile};

#[derive(Debug, Error)]
pub enum DslError {
    #[error("syntax error at offset {pos}: expected {}, found {found:?}", expected.join(" or "))]
    Syntax { pos: usize, expected: Vec<String>, found: String },
    #[error("unknown identifier {name:?} at offset {pos}")]
    UnknownIdentifier { pos: usize, name: String },
    #[error("divisor {0} is always zero")]
    StaticDivisionByZero(String),
    #[error("a coloring needs at least one color")]
    NoColors,
    #[error("unknown builtin coloring {0:?}")]
    UnknownBuiltin(String),
    #[error("table has {table} colors but {requested} were requested")]
    ColorCountMismatch { table: u32, requested: u32 },
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed table file: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Mod,
    Min,
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmpOp {
    Lt,
    Le,
    Eq,
    Ne,
}

/// Abstract syntax of a coloring expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Nat(BigInt),
    X,
    Y,
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    /// Evaluates to 1 when the comparison holds, else 0.
    Cmp(CmpOp, Box<Expr>, Box<Expr>),
    /// `if c then a else b`: `a` when `c` is nonzero.
    If(Box<Expr>, Box<Expr>, Box<Expr>),
}

impl Expr {
    fn has_variables(&self) -> bool {
        match self {
            Expr::Nat(_) => false,
            Expr::X | Expr::Y => true,
            Expr::Neg(e) => e.has_variables(),
            Expr::Bin(_, a, b) | Expr::Cmp(_, a, b) => a.has_variables() || b.has_variables(),
            Expr::If(c, a, b) => c.has_variables() || a.has_variables() || b.has_variables(),
        }
    }

    /// Rejects `/` and `%` whose divisor is a closed expression equal to zero.
    fn check_divisors(&self) -> Result<(), DslError> {
        match self {
            Expr::Nat(_) | Expr::X | Expr::Y => Ok(()),
            Expr::Neg(e) => e.check_divisors(),
            Expr::Bin(op, a, b) => {
                a.check_divisors()?;
                b.check_divisors()?;
                if matches!(op, BinOp::Div | BinOp::Mod) && !b.has_variables() {
                    let zero = BigInt::zero();
                    if b.eval(&zero, &zero, false).map_or(true, |v| v.is_zero()) {
                        return Err(DslError::StaticDivisionByZero(b.to_string()));
                    }
                }
                Ok(())
            }
            Expr::Cmp(_, a, b) => {
                a.check_divisors()?;
                b.check_divisors()
            }
            Expr::If(c, a, b) => {
                c.check_divisors()?;
                a.check_divisors()?;
                b.check_divisors()
            }
        }
    }

    /// Evaluates with `x` and `y` bound as given (no canonical ordering here).
    pub fn eval(&self, x: &BigInt, y: &BigInt, strict: bool) -> Result<BigInt, ColoringError> {
        Ok(match self {
            Expr::Nat(n) => n.clone(),
            Expr::X => x.clone(),
            Expr::Y => y.clone(),
            Expr::Neg(e) => -e.eval(x, y, strict)?,
            Expr::Bin(op, a, b) => {
                let a = a.eval(x, y, strict)?;
                let b = b.eval(x, y, strict)?;
                match op {
                    BinOp::Add => a + b,
                    BinOp::Sub => a - b,
                    BinOp::Mul => a * b,
                    BinOp::Div if b.is_zero() => {
                        if strict {
                            return Err(ColoringError::DivisionByZero);
                        }
                        BigInt::zero()
                    }
                    BinOp::Mod if b.is_zero() => {
                        if strict {
                            return Err(ColoringError::DivisionByZero);
                        }
                        a
                    }
                    BinOp::Div => a.div_floor(&b),
                    BinOp::Mod => a.mod_floor(&b),
                    BinOp::Min => a.min(b),
                    BinOp::Max => a.max(b),
                }
            }
            Expr::Cmp(op, a, b) => {
                let a = a.eval(x, y, strict)?;
                let b = b.eval(x, y, strict)?;
                let holds = match op {
                    CmpOp::Lt => a < b,
                    CmpOp::Le => a <= b,
                    CmpOp::Eq => a == b,
                    CmpOp::Ne => a != b,
                };
                if holds {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }
            Expr::If(c, a, b) => {
                if !c.eval(x, y, strict)?.is_zero() {
                    a.eval(x, y, strict)?
                } else {
                    b.eval(x, y, strict)?
                }
            }
        })
    }

    // 0 = conditional, 1 = comparison, 2 = sum, 3 = term, 4 = factor
    fn level(&self) -> u8 {
        match self {
            Expr::If(..) => 0,
            Expr::Cmp(..) => 1,
            Expr::Bin(BinOp::Add | BinOp::Sub, ..) => 2,
            Expr::Bin(BinOp::Mul | BinOp::Div | BinOp::Mod, ..) => 3,
            _ => 4,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min_level: u8) -> fmt::Result {
        if self.level() < min_level {
            f.write_str("(")?;
            self.write_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            Expr::Nat(n) => write!(f, "{n}"),
            Expr::X => f.write_str("x"),
            Expr::Y => f.write_str("y"),
            Expr::Neg(e) => {
                f.write_str("-")?;
                e.write_at(f, 4)
            }
            Expr::Bin(op @ (BinOp::Min | BinOp::Max), a, b) => {
                f.write_str(if *op == BinOp::Min { "min(" } else { "max(" })?;
                a.write_at(f, 0)?;
                f.write_str(", ")?;
                b.write_at(f, 0)?;
                f.write_str(")")
            }
            Expr::Bin(op, a, b) => {
                let (sym, level) = match op {
                    BinOp::Add => ("+", 2),
                    BinOp::Sub => ("-", 2),
                    BinOp::Mul => ("*", 3),
                    BinOp::Div => ("/", 3),
                    _ => ("%", 3),
                };
                a.write_at(f, level)?;
                write!(f, " {sym} ")?;
                b.write_at(f, level + 1)
            }
            Expr::Cmp(op, a, b) => {
                let sym = match op {
                    CmpOp::Lt => "<",
                    CmpOp::Le => "<=",
                    CmpOp::Eq => "==",
                    CmpOp::Ne => "!=",
                };
                a.write_at(f, 2)?;
                write!(f, " {sym} ")?;
                b.write_at(f, 2)
            }
            Expr::If(c, a, b) => {
                f.write_str("if ")?;
                c.write_at(f, 1)?;
                f.write_str(" then ")?;
                a.write_at(f, 0)?;
                f.write_str(" else ")?;
                b.write_at(f, 0)
            }
        }
    }
}

/// Pretty-printing with the minimal parentheses needed to parse back to the
/// same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

/// A coloring defined by an expression, `c({x, y}) = expr(min, max) mod k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DslColoring {
    expr: Expr,
    k: u32,
    strict: bool,
}

impl DslColoring {
    pub fn new(expr: Expr, k: u32) -> Result<Self, DslError> {
        if k == 0 {
            return Err(DslError::NoColors);
        }
        expr.check_divisors()?;
        Ok(DslColoring { expr, k, strict: false })
    }

    pub fn parse(src: &str, k: u32) -> Result<Self, DslError> {
        Self::new(parse(src)?, k)
    }

    /// In strict mode a zero divisor is an evaluation error instead of
    /// following the total convention.
    pub fn strict(mut self, strict: bool) -> Self {
        self.strict = strict;
        self
    }

    pub fn expr(&self) -> &Expr {
        &self.expr
    }

    /// Color of `{x, y}` for arbitrary naturals.
    pub fn eval(&self, x: &BigUint, y: &BigUint) -> Result<Color, ColoringError> {
        let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
        let v = self
            .expr
            .eval(&BigInt::from(lo.clone()), &BigInt::from(hi.clone()), self.strict)?;
        let r = v.mod_floor(&BigInt::from(self.k));
        debug_assert!(!r.is_negative());
        Ok(Color(r.to_u32().expect("reduced below k")))
    }
}

impl Coloring for DslColoring {
    fn k(&self) -> u32 {
        self.k
    }

    fn color(&self, x: u64, y: u64) -> Result<Color, ColoringError> {
        if x == y {
            return Err(ColoringError::Diagonal(x));
        }
        self.eval(&BigUint::from(x), &BigUint::from(y))
    }
}

/// Names accepted by [`builtin`].
pub const BUILTINS: &str = "constant:I, sum-mod, diff-mod, block:B, table:PATH";

/// A named coloring family:
///
/// * `constant:i`: every pair gets `i mod k`
/// * `sum-mod`: `(x + y) mod k`
/// * `diff-mod`: `|x − y| mod k`
/// * `block:b`: `⌊min(x, y) / b⌋ mod k`, `b ≥ 1`
/// * `table:PATH`: an explicit table loaded from a JSON file
pub fn builtin(name: &str, k: u32) -> Result<Box<dyn Coloring>, DslError> {
    let unknown = || DslError::UnknownBuiltin(name.to_string());
    let (family, arg) = match name.split_once(':') {
        Some((f, a)) => (f, Some(a)),
        None => (name, None),
    };
    let source = match (family, arg) {
        ("constant", Some(i)) => i.parse::<u64>().map_err(|_| unknown())?.to_string(),
        ("sum-mod", None) => "x + y".into(),
        ("diff-mod", None) => "y - x".into(),
        ("block", Some(b)) => match b.parse::<u64>() {
            Ok(b) if b >= 1 => format!("x / {b}"),
            _ => return Err(unknown()),
        },
        ("table", Some(path)) => {
            let table = TableColoring::load(std::path::Path::new(path))?;
            if table.k() != k {
                return Err(DslError::ColorCountMismatch { table: table.k(), requested: k });
            }
            return Ok(Box::new(table));
        }
        _ => return Err(unknown()),
    };
    Ok(Box::new(DslColoring::parse(&source, k)?))
}
