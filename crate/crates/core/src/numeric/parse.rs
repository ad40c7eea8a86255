//! Recursive-descent parser for `F(x, y)`.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor (("*" | "/") factor)*
//! factor := atom ("^" integer)? | "-" factor
//! atom   := number | "x" | "y" | ident "(" expr ")" | "(" expr ")"
//! ```
//!
//! Identifiers are `exp`, `log`, `sin`, `cos` and `sqrt`. Numbers are decimal
//! with an optional fraction and exponent.

use std::sync::Arc;

use super::expr::{self, Expression, Function, Node};
use crate::error::{Error, Result};

pub fn parse(text: &str) -> Result<Expression> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let node = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(Arc::unwrap_or_clone(node))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        let found = match self.src.get(self.pos) {
            Some(&c) => format!("`{}`", c as char),
            None => "end of input".to_string(),
        };
        Error::Syntax {
            offset: self.pos,
            message: format!("{message}, found {found}"),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Node> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Arc::new(Expression::Add(lhs, self.term()?));
            } else if self.eat(b'-') {
                lhs = Arc::new(Expression::Sub(lhs, self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Node> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat(b'*') {
                lhs = Arc::new(Expression::Mul(lhs, self.factor()?));
            } else if self.eat(b'/') {
                lhs = Arc::new(Expression::Div(lhs, self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Node> {
        if self.eat(b'-') {
            return Ok(Arc::new(Expression::Neg(self.factor()?)));
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let k = self.integer()?;
            return Ok(Arc::new(Expression::Pow(base, k)));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<i32> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer exponent"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits.parse().map_err(|_| Error::Syntax {
            offset: start,
            message: format!("exponent `{digits}` is out of range"),
        })
    }

    fn atom(&mut self) -> Result<Node> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number(),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_alphabetic() => self.identifier(),
            _ => Err(self.error("expected a number, variable, function or `(`")),
        }
    }

    fn number(&mut self) -> Result<Node> {
        let start = self.pos;
        let digits = |p: &mut Self| {
            let s = p.pos;
            while p.src.get(p.pos).is_some_and(u8::is_ascii_digit) {
                p.pos += 1;
            }
            p.pos - s
        };
        let mut count = digits(self);
        if self.src.get(self.pos) == Some(&b'.') {
            self.pos += 1;
            count += digits(self);
        }
        if count == 0 {
            self.pos = start;
            return Err(self.error("malformed number"));
        }
        if matches!(self.src.get(self.pos), Some(b'e' | b'E')) {
            let mark = self.pos;
            self.pos += 1;
            if matches!(self.src.get(self.pos), Some(b'+' | b'-')) {
                self.pos += 1;
            }
            if digits(self) == 0 {
                self.pos = mark;
                return Err(self.error("malformed exponent in number"));
            }
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii number");
        let value: f64 = text.parse().map_err(|_| Error::Syntax {
            offset: start,
            message: format!("malformed number `{text}`"),
        })?;
        Ok(expr::number(value))
    }

    fn identifier(&mut self) -> Result<Node> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_alphanumeric) {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
        match name {
            "x" => return Ok(Arc::new(Expression::X)),
            "y" => return Ok(Arc::new(Expression::Y)),
            _ => {}
        }
        let Some(function) = Function::from_name(name) else {
            return Err(Error::UnknownIdentifier {
                name: name.to_string(),
                offset: start,
            });
        };
        if !self.eat(b'(') {
            return Err(self.error(&format!("expected `(` after `{name}`")));
        }
        let arg = self.expr()?;
        if !self.eat(b')') {
            return Err(self.error("expected `)`"));
        }
        Ok(Arc::new(Expression::Call(function, arg)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Node {
        Arc::new(Expression::X)
    }

    fn y() -> Node {
        Arc::new(Expression::Y)
    }

    fn num(v: f64) -> Node {
        Arc::new(Expression::Number(v))
    }

    #[test]
    fn circle() {
        let e = parse("x^2+y^2-1").unwrap();
        let expected = Expression::Sub(
            Arc::new(Expression::Add(
                Arc::new(Expression::Pow(x(), 2)),
                Arc::new(Expression::Pow(y(), 2)),
            )),
            num(1.0),
        );
        assert_eq!(e, expected);
    }

    #[test]
    fn exponential_curve() {
        let e = parse("x-exp(y)").unwrap();
        assert_eq!(
            e,
            Expression::Sub(x(), Arc::new(Expression::Call(Function::Exp, y())))
        );
    }

    #[test]
    fn precedence_and_associativity() {
        // -x^2 is -(x^2); a-b-c is (a-b)-c; a/b*c is (a/b)*c.
        assert_eq!(parse("-x^2").unwrap().eval(3.0, 0.0), -9.0);
        assert_eq!(parse("1-2-3").unwrap().eval(0.0, 0.0), -4.0);
        assert_eq!(parse("8/2*4").unwrap().eval(0.0, 0.0), 16.0);
        assert_eq!(parse("2*(x+y)^2").unwrap().eval(1.0, 2.0), 18.0);
        assert_eq!(parse(" 1.5e1 + .5 ").unwrap().eval(0.0, 0.0), 15.5);
        assert_eq!(parse("--x").unwrap().eval(2.0, 0.0), 2.0);
        assert!((parse("sqrt(x)*cos(y)+sin(y)+log(x)").unwrap().eval(4.0, 0.0) - 2.0 - 4f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        assert!(matches!(parse("x-*y"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse("(x+y"), Err(Error::Syntax { offset: 4, .. })));
        assert!(matches!(parse("x^y"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse("x y"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse("exp y"), Err(Error::Syntax { offset: 4, .. })));
        assert!(matches!(parse(""), Err(Error::Syntax { offset: 0, .. })));
        assert!(matches!(parse("1e+"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn unknown_identifier() {
        assert_eq!(
            parse("x + tan(y)"),
            Err(Error::UnknownIdentifier {
                name: "tan".into(),
                offset: 4
            })
        );
    }
}
