//! A minimal arithmetic expression language over the boundary coordinates.
//!
//! Grammar (whitespace between tokens is ignored):
//!
//! ```text
//! expr    := term (("+" | "-") term)*
//! term    := unary (("*" | "/") unary)*
//! unary   := ("+" | "-") unary | power
//! power   := primary ("^" unary)?
//! primary := NUMBER | "x2" | "x3" | "pi" | "(" expr ")"
//!          | FUNC "(" expr ")" | "atan2" "(" expr "," expr ")"
//! FUNC    := "sin" | "cos" | "tan" | "exp" | "log" | "sqrt" | "tanh" | "atan" | "abs"
//! NUMBER  := DIGITS ("." DIGITS?)? (("e" | "E") ("+" | "-")? DIGITS)?
//!          | "." DIGITS (("e" | "E") ("+" | "-")? DIGITS)?
//! ```
//!
//! `^` is right-associative and binds tighter than unary minus, so `-x2^2`
//! is `-(x2^2)`. `log` is the natural logarithm.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("expression error at byte {position}: {message}")]
pub struct ExprError {
    pub position: usize,
    pub message: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Func {
    Sin,
    Cos,
    Tan,
    Exp,
    Log,
    Sqrt,
    Tanh,
    Atan,
    Abs,
}

impl Func {
    fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "tan" => Func::Tan,
            "exp" => Func::Exp,
            "log" => Func::Log,
            "sqrt" => Func::Sqrt,
            "tanh" => Func::Tanh,
            "atan" => Func::Atan,
            "abs" => Func::Abs,
            _ => return None,
        })
    }

    fn apply(self, v: f64) -> f64 {
        match self {
            Func::Sin => v.sin(),
            Func::Cos => v.cos(),
            Func::Tan => v.tan(),
            Func::Exp => v.exp(),
            Func::Log => v.ln(),
            Func::Sqrt => v.sqrt(),
            Func::Tanh => v.tanh(),
            Func::Atan => v.atan(),
            Func::Abs => v.abs(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

#[derive(Clone, Debug, PartialEq)]
enum Node {
    Const(f64),
    X2,
    X3,
    Neg(Box<Node>),
    Bin(BinOp, Box<Node>, Box<Node>),
    Call(Func, Box<Node>),
    Atan2(Box<Node>, Box<Node>),
}

impl Node {
    fn eval(&self, x2: f64, x3: f64) -> f64 {
        match self {
            Node::Const(c) => *c,
            Node::X2 => x2,
            Node::X3 => x3,
            Node::Neg(a) => -a.eval(x2, x3),
            Node::Bin(op, a, b) => {
                let (a, b) = (a.eval(x2, x3), b.eval(x2, x3));
                match op {
                    BinOp::Add => a + b,
                    BinOp::Sub => a - b,
                    BinOp::Mul => a * b,
                    BinOp::Div => a / b,
                    BinOp::Pow => pow(a, b),
                }
            }
            Node::Call(f, a) => f.apply(a.eval(x2, x3)),
            Node::Atan2(a, b) => a.eval(x2, x3).atan2(b.eval(x2, x3)),
        }
    }

    fn constant(&self) -> Option<f64> {
        match self {
            Node::Const(c) => Some(*c),
            _ => None,
        }
    }

    /// Folds constant subtrees.
    fn fold(self) -> Node {
        match self {
            Node::Neg(a) => match a.fold() {
                Node::Const(c) => Node::Const(-c),
                a => Node::Neg(Box::new(a)),
            },
            Node::Bin(op, a, b) => {
                let (a, b) = (a.fold(), b.fold());
                match (a.constant(), b.constant()) {
                    (Some(_), Some(_)) => Node::Const(Node::Bin(op, Box::new(a), Box::new(b)).eval(0.0, 0.0)),
                    _ => Node::Bin(op, Box::new(a), Box::new(b)),
                }
            }
            Node::Call(f, a) => match a.fold() {
                Node::Const(c) => Node::Const(f.apply(c)),
                a => Node::Call(f, Box::new(a)),
            },
            Node::Atan2(a, b) => {
                let (a, b) = (a.fold(), b.fold());
                match (a.constant(), b.constant()) {
                    (Some(y), Some(x)) => Node::Const(y.atan2(x)),
                    _ => Node::Atan2(Box::new(a), Box::new(b)),
                }
            }
            n => n,
        }
    }
}

fn pow(a: f64, b: f64) -> f64 {
    if b == 2.0 {
        a * a
    } else if b.fract() == 0.0 && b.abs() <= 64.0 {
        a.powi(b as i32)
    } else {
        a.powf(b)
    }
}

/// A parsed expression in the variables `x2`, `x3`.
#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    root: Node,
    source: String,
}

impl Expr {
    pub fn parse(source: &str) -> Result<Expr, ExprError> {
        let mut parser = Parser {
            src: source.as_bytes(),
            pos: 0,
        };
        let root = parser.expr()?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(Expr {
            root: root.fold(),
            source: source.to_string(),
        })
    }

    pub fn eval(&self, x2: f64, x3: f64) -> f64 {
        self.root.eval(x2, x3)
    }

    /// The value of an expression that does not depend on `x2`, `x3`.
    pub fn as_constant(&self) -> Option<f64> {
        self.root.constant()
    }

    pub fn source(&self) -> &str {
        &self.source
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> ExprError {
        ExprError {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ExprError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Node, ExprError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Some(b'+') => BinOp::Add,
                Some(b'-') => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.term()?;
            lhs = Node::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn term(&mut self) -> Result<Node, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Some(b'*') => BinOp::Mul,
                Some(b'/') => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = Node::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Node, ExprError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(Node::Neg(Box::new(self.unary()?)))
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Node, ExprError> {
        let base = self.primary()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let exp = self.unary()?;
            return Ok(Node::Bin(BinOp::Pow, Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Node, ExprError> {
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match name {
                    "x2" => Ok(Node::X2),
                    "x3" => Ok(Node::X3),
                    "pi" => Ok(Node::Const(std::f64::consts::PI)),
                    "atan2" => {
                        self.expect(b'(')?;
                        let y = self.expr()?;
                        self.expect(b',')?;
                        let x = self.expr()?;
                        self.expect(b')')?;
                        Ok(Node::Atan2(Box::new(y), Box::new(x)))
                    }
                    _ => match Func::from_name(name) {
                        Some(f) => {
                            self.expect(b'(')?;
                            let a = self.expr()?;
                            self.expect(b')')?;
                            Ok(Node::Call(f, Box::new(a)))
                        }
                        None => Err(ExprError {
                            position: start,
                            message: format!("unknown identifier '{name}'"),
                        }),
                    },
                }
            }
            Some(c) => Err(self.error(&format!("unexpected character '{}'", c as char))),
        }
    }

    fn number(&mut self) -> Result<Node, ExprError> {
        let start = self.pos;
        let digits = |p: &mut Self| {
            let s = p.pos;
            while p.pos < p.src.len() && p.src[p.pos].is_ascii_digit() {
                p.pos += 1;
            }
            p.pos - s
        };
        let int = digits(self);
        let mut frac = 0;
        if self.src.get(self.pos) == Some(&b'.') {
            self.pos += 1;
            frac = digits(self);
        }
        if int == 0 && frac == 0 {
            return Err(ExprError {
                position: start,
                message: "malformed number".into(),
            });
        }
        if matches!(self.src.get(self.pos), Some(b'e') | Some(b'E')) {
            self.pos += 1;
            if matches!(self.src.get(self.pos), Some(b'+') | Some(b'-')) {
                self.pos += 1;
            }
            if digits(self) == 0 {
                return Err(self.error("malformed exponent"));
            }
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        text.parse::<f64>().map(Node::Const).map_err(|_| ExprError {
            position: start,
            message: format!("malformed number '{text}'"),
        })
    }
}
