//! ASCII grammar for symbols.
//!
//! ```text
//! expr   := factor { "*" factor }
//! factor := atom [ "^" integer ]
//! atom   := "Xi" | "X0" | "X1" | "X2" | "X3" | "1" | "I" "(" expr ")"
//! ```
//!
//! Whitespace is allowed between tokens. The grammar denotes symbols, not
//! sums: an expression whose value is the zero symbol (integration of a
//! polynomial, e.g. `I(1)` or `I(X1*X2)`) is rejected with an explanatory
//! error, since there is no tree representing zero.

use crate::symbol::Symbol;
use crate::RegstructError;

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn err(&self, msg: impl Into<String>) -> RegstructError {
        RegstructError::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), RegstructError> {
        match self.bump() {
            Some(got) if got == c => Ok(()),
            Some(got) => Err(self.err(format!(
                "expected '{}', found '{}'",
                c as char, got as char
            ))),
            None => Err(self.err(format!("expected '{}', found end of input", c as char))),
        }
    }

    fn integer(&mut self) -> Result<u32, RegstructError> {
        self.skip_ws();
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_digit())
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse::<u32>()
            .map_err(|e| self.err(format!("integer out of range: {e}")))
    }

    fn atom(&mut self) -> Result<Symbol, RegstructError> {
        match self.peek() {
            Some(b'1') => {
                self.pos += 1;
                Ok(Symbol::unit())
            }
            Some(b'X') => {
                self.pos += 1;
                match self.bytes.get(self.pos) {
                    Some(b'i') => {
                        self.pos += 1;
                        Ok(Symbol::noise())
                    }
                    Some(c @ b'0'..=b'3') => {
                        self.pos += 1;
                        Ok(Symbol::x(usize::from(c - b'0')))
                    }
                    _ => Err(self.err("expected 'Xi' or one of 'X0'..'X3'")),
                }
            }
            Some(b'I') => {
                self.pos += 1;
                self.expect(b'(')?;
                let inner = self.expr()?;
                self.expect(b')')?;
                Symbol::integ(&inner).ok_or_else(|| {
                    RegstructError::ZeroSymbol(format!(
                        "I({inner}) is zero: integration annihilates polynomial symbols"
                    ))
                })
            }
            Some(c) => Err(self.err(format!("unexpected character '{}'", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn factor(&mut self) -> Result<Symbol, RegstructError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let n = self.integer()?;
            Ok(base.pow(n))
        } else {
            Ok(base)
        }
    }

    fn expr(&mut self) -> Result<Symbol, RegstructError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }
}

/// Parse a symbol from the ASCII grammar described in the module docs.
pub fn parse_symbol(input: &str) -> Result<Symbol, RegstructError> {
    let mut p = Parser::new(input);
    let sym = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input after symbol"));
    }
    Ok(sym)
}
