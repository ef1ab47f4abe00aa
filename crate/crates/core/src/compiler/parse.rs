//! Infix expression syntax:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := NAT | '(' expr ')'
//! ```
//!
//! Operators are left-associative, `*` binds tighter than `+` and `-`, and
//! ASCII whitespace is ignored.

use super::{Binop, Exp};
use crate::Nat;

/// A syntax error at a 1-based byte offset. End of input is reported at
/// `len + 1`.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

pub fn parse_exp(src: &str) -> Result<Exp, ParseError> {
    let mut parser = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    let e = parser.expr()?;
    parser.skip_ws();
    match parser.peek() {
        None => Ok(e),
        Some(c) => Err(parser.error(format!("unexpected '{}'", c as char))),
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            offset: self.pos + 1,
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<Exp, ParseError> {
        let mut left = self.term()?;
        loop {
            self.skip_ws();
            let op = match self.peek() {
                Some(b'+') => Binop::Plus,
                Some(b'-') => Binop::Minus,
                _ => return Ok(left),
            };
            self.pos += 1;
            let right = self.term()?;
            left = Exp::binop(op, left, right);
        }
    }

    fn term(&mut self) -> Result<Exp, ParseError> {
        let mut left = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() != Some(b'*') {
                return Ok(left);
            }
            self.pos += 1;
            let right = self.factor()?;
            left = Exp::binop(Binop::Times, left, right);
        }
    }

    fn factor(&mut self) -> Result<Exp, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ASCII digits");
                digits
                    .parse::<u64>()
                    .map(|v| Exp::Const(Nat::new(v)))
                    .map_err(|_| ParseError {
                        offset: start + 1,
                        message: format!("literal {digits} is out of range"),
                    })
            }
            Some(c) => Err(self.error(format!("expected a number or '(', found '{}'", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Binop::*;

    fn c(v: u64) -> Exp {
        Exp::constant(v)
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(parse_exp("2 - 1").unwrap(), Exp::binop(Minus, c(2), c(1)));
        assert_eq!(
            parse_exp("(2+2)*3").unwrap(),
            Exp::binop(Times, Exp::binop(Plus, c(2), c(2)), c(3))
        );
        assert_eq!(
            parse_exp("1+2*3").unwrap(),
            Exp::binop(Plus, c(1), Exp::binop(Times, c(2), c(3)))
        );
        assert_eq!(
            parse_exp("5-2-1").unwrap(),
            Exp::binop(Minus, Exp::binop(Minus, c(5), c(2)), c(1))
        );
        assert_eq!(parse_exp(" \t42\n").unwrap(), c(42));
    }

    #[test]
    fn errors_carry_one_based_offsets() {
        assert_eq!(parse_exp("2 + ").unwrap_err().offset, 5);
        assert_eq!(parse_exp("").unwrap_err().offset, 1);
        assert_eq!(parse_exp("2 3").unwrap_err().offset, 3);
        assert_eq!(parse_exp("(1+2").unwrap_err().offset, 5);
        assert_eq!(parse_exp("1 + x").unwrap_err().offset, 5);
        assert_eq!(parse_exp("1 + 99999999999999999999").unwrap_err().offset, 5);
        assert_eq!(parse_exp("-1").unwrap_err().offset, 1);
    }
}
