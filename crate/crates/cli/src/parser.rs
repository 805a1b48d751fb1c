//! Recursive-descent parser for commands and expressions.
//!
//! Binary operators are left-associative with the usual precedence; the
//! expression grammar is greedy, so commands taking two expressions accept
//! an optional comma separator for cases like `cmp 1, -2` where the second
//! operand would otherwise fuse with the first.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::ast::{BinOp, Command, Expr, Func};
use crate::lexer::{lex, Spanned, Token};

/// Largest accepted `class mod m` modulus; beyond this the germ tables stop
/// being a sensible interactive tool.
pub const MAX_MODULUS: u64 = 4096;

const RESERVED: &[&str] = &[
    "let",
    "show",
    "classify",
    "cmp",
    "heisenberg",
    "wintner",
    "fuzz",
    "evalat",
    "class",
    "mod",
    "patch",
    "wave",
    "op",
    "re",
    "im",
    "conj",
    "abs2",
    "sqrt",
    "breaks",
    "coeffs",
    "grid",
    "matrix",
    "n",
    "omega",
    "i",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "parse error at {}: expected {}, found {}",
            self.position,
            self.expected.join(" or "),
            self.found
        )
    }
}

pub fn parse_command(line: &str) -> Result<Command, ParseError> {
    let mut p = Parser::new(line)?;
    let cmd = p.command()?;
    p.expect_end()?;
    Ok(cmd)
}

/// Parses a bare expression (used by value round-trip checks).
pub fn parse_expression(line: &str) -> Result<Expr, ParseError> {
    let mut p = Parser::new(line)?;
    let expr = p.expr()?;
    p.expect_end()?;
    Ok(expr)
}

struct Parser {
    tokens: Vec<Spanned>,
    cursor: usize,
    end: usize,
}

impl Parser {
    fn new(line: &str) -> Result<Self, ParseError> {
        let tokens = lex(line).map_err(|e| ParseError {
            position: e.position,
            expected: vec!["a valid token".into()],
            found: e.message,
        })?;
        Ok(Parser {
            tokens,
            cursor: 0,
            end: line.len(),
        })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor).map(|s| &s.token)
    }

    fn position(&self) -> usize {
        self.tokens
            .get(self.cursor)
            .map(|s| s.position)
            .unwrap_or(self.end)
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        ParseError {
            position: self.position(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self
                .peek()
                .map(|t| t.describe())
                .unwrap_or_else(|| "end of input".into()),
        }
    }

    fn expect(&mut self, want: &Token, desc: &str) -> Result<(), ParseError> {
        if self.peek() == Some(want) {
            self.cursor += 1;
            Ok(())
        } else {
            Err(self.error(&[desc]))
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        if self.cursor == self.tokens.len() {
            Ok(())
        } else {
            Err(self.error(&["end of command"]))
        }
    }

    fn eat_comma(&mut self) {
        if self.peek() == Some(&Token::Comma) {
            self.cursor += 1;
        }
    }

    fn ident(&mut self, desc: &str) -> Result<String, ParseError> {
        match self.peek() {
            Some(Token::Ident(s)) => {
                let s = s.clone();
                self.cursor += 1;
                Ok(s)
            }
            _ => Err(self.error(&[desc])),
        }
    }

    fn name(&mut self) -> Result<String, ParseError> {
        let pos = self.position();
        let word = self.ident("a name")?;
        if RESERVED.contains(&word.as_str()) {
            return Err(ParseError {
                position: pos,
                expected: vec!["a name (not a reserved word)".into()],
                found: format!("`{word}`"),
            });
        }
        Ok(word)
    }

    fn natural(&mut self, desc: &str) -> Result<u64, ParseError> {
        let pos = self.position();
        match self.peek() {
            Some(Token::Int(n)) => {
                let value = u64::try_from(n.clone()).map_err(|_| ParseError {
                    position: pos,
                    expected: vec![format!("{desc} that fits in 64 bits")],
                    found: format!("`{n}`"),
                })?;
                self.cursor += 1;
                Ok(value)
            }
            _ => Err(self.error(&[desc])),
        }
    }

    fn command(&mut self) -> Result<Command, ParseError> {
        let keyword = match self.peek() {
            Some(Token::Ident(s)) => s.clone(),
            _ => return Err(self.error(&["a command keyword"])),
        };
        match keyword.as_str() {
            "let" => {
                self.cursor += 1;
                let name = self.name()?;
                self.expect(&Token::Equals, "`=`")?;
                let expr = self.expr()?;
                Ok(Command::Let(name, expr))
            }
            "show" => {
                self.cursor += 1;
                Ok(Command::Show(self.name()?))
            }
            "classify" => {
                self.cursor += 1;
                Ok(Command::Classify(self.expr()?))
            }
            "cmp" => {
                self.cursor += 1;
                let lhs = self.expr()?;
                self.eat_comma();
                let rhs = self.expr()?;
                Ok(Command::Cmp(lhs, rhs))
            }
            "heisenberg" => {
                self.cursor += 1;
                let a = self.name()?;
                self.eat_comma();
                let b = self.name()?;
                self.eat_comma();
                let psi = self.name()?;
                Ok(Command::Heisenberg(a, b, psi))
            }
            "wintner" => {
                self.cursor += 1;
                let a = self.name()?;
                self.eat_comma();
                let b = self.name()?;
                self.eat_comma();
                let c = self.expr()?;
                Ok(Command::Wintner(a, b, c))
            }
            "fuzz" => {
                self.cursor += 1;
                let suite = self.ident("a suite name")?;
                let cases = self.natural("a case count")?;
                let seed = if matches!(self.peek(), Some(Token::Int(_))) {
                    Some(self.natural("a seed")?)
                } else {
                    None
                };
                Ok(Command::Fuzz { suite, cases, seed })
            }
            "evalat" => {
                self.cursor += 1;
                let expr = self.expr()?;
                self.eat_comma();
                let index = self.natural("an index")?;
                Ok(Command::EvalAt(expr, index))
            }
            _ => Err(self.error(&[
                "`let`",
                "`show`",
                "`classify`",
                "`cmp`",
                "`heisenberg`",
                "`wintner`",
                "`fuzz`",
                "`evalat`",
            ])),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Some(Token::Plus) => BinOp::Add,
                Some(Token::Minus) => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.cursor += 1;
            let rhs = self.term()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Some(Token::Star) => BinOp::Mul,
                Some(Token::Slash) => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.cursor += 1;
            let rhs = self.unary()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == Some(&Token::Minus) {
            self.cursor += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        match self.peek().cloned() {
            Some(Token::Int(n)) => {
                self.cursor += 1;
                Ok(Expr::Number(BigRational::from_integer(n)))
            }
            Some(Token::Imag(n)) => {
                self.cursor += 1;
                Ok(Expr::Imag(BigRational::from_integer(n)))
            }
            Some(Token::LParen) => {
                self.cursor += 1;
                let inner = self.expr()?;
                self.expect(&Token::RParen, "`)`")?;
                Ok(inner)
            }
            Some(Token::Ident(word)) => match word.as_str() {
                "i" => {
                    self.cursor += 1;
                    Ok(Expr::ImagUnit)
                }
                "n" | "omega" => {
                    self.cursor += 1;
                    if self.peek() == Some(&Token::Caret) {
                        self.cursor += 1;
                        self.expect(&Token::LParen, "`(`")?;
                        let exp = self.signed_rational()?;
                        self.expect(&Token::RParen, "`)`")?;
                        Ok(Expr::IndexPower(exp))
                    } else {
                        Ok(Expr::Index)
                    }
                }
                "class" => self.class_literal(),
                "patch" => self.patch_literal(),
                "wave" => self.wave_literal(),
                "op" => self.op_literal(),
                "re" => self.call(Func::Re),
                "im" => self.call(Func::Im),
                "conj" => self.call(Func::Conj),
                "abs2" => self.call(Func::Abs2),
                "sqrt" => self.call(Func::Sqrt),
                _ if RESERVED.contains(&word.as_str()) => Err(self.error(&["an expression"])),
                _ => {
                    self.cursor += 1;
                    Ok(Expr::Name(word))
                }
            },
            _ => Err(self.error(&["an expression"])),
        }
    }

    fn call(&mut self, func: Func) -> Result<Expr, ParseError> {
        self.cursor += 1;
        self.expect(&Token::LParen, "`(`")?;
        let arg = self.expr()?;
        self.expect(&Token::RParen, "`)`")?;
        Ok(Expr::Call(func, Box::new(arg)))
    }

    /// `class mod m { e0; …; e_{m−1} }`
    fn class_literal(&mut self) -> Result<Expr, ParseError> {
        self.cursor += 1;
        match self.peek() {
            Some(Token::Ident(w)) if w == "mod" => {
                self.cursor += 1;
            }
            _ => return Err(self.error(&["`mod`"])),
        }
        let pos = self.position();
        let modulus = self.natural("a modulus")?;
        if modulus == 0 || modulus > MAX_MODULUS {
            return Err(ParseError {
                position: pos,
                expected: vec![format!("a modulus between 1 and {MAX_MODULUS}")],
                found: format!("`{modulus}`"),
            });
        }
        self.expect(&Token::LBrace, "`{`")?;
        let mut entries = Vec::new();
        loop {
            entries.push(self.expr()?);
            match self.peek() {
                Some(Token::Semicolon) => {
                    self.cursor += 1;
                }
                Some(Token::RBrace) => {
                    self.cursor += 1;
                    break;
                }
                _ => return Err(self.error(&["`;`", "`}`"])),
            }
        }
        if entries.len() as u64 != modulus {
            return Err(ParseError {
                position: pos,
                expected: vec![format!("{modulus} class entries")],
                found: format!("{}", entries.len()),
            });
        }
        Ok(Expr::ClassGerm(entries))
    }

    /// `patch{k: v, …}`
    fn patch_literal(&mut self) -> Result<Expr, ParseError> {
        self.cursor += 1;
        self.expect(&Token::LBrace, "`{`")?;
        let mut map = BTreeMap::new();
        loop {
            let index = self.natural("an index")?;
            self.expect(&Token::Colon, "`:`")?;
            let value = self.signed_rational()?;
            map.insert(index, value);
            match self.peek() {
                Some(Token::Comma) => {
                    self.cursor += 1;
                }
                Some(Token::RBrace) => {
                    self.cursor += 1;
                    break;
                }
                _ => return Err(self.error(&["`,`", "`}`"])),
            }
        }
        Ok(Expr::Patch(map))
    }

    /// `wave { breaks = […]; coeffs = […] }`
    fn wave_literal(&mut self) -> Result<Expr, ParseError> {
        self.cursor += 1;
        self.expect(&Token::LBrace, "`{`")?;
        self.keyword("breaks")?;
        self.expect(&Token::Equals, "`=`")?;
        let breaks = self.expr_list()?;
        self.expect(&Token::Semicolon, "`;`")?;
        self.keyword("coeffs")?;
        self.expect(&Token::Equals, "`=`")?;
        let coeffs = self.expr_list()?;
        self.expect(&Token::RBrace, "`}`")?;
        Ok(Expr::Wave { breaks, coeffs })
    }

    /// `op { grid = […]; matrix = [[…], …] }`
    fn op_literal(&mut self) -> Result<Expr, ParseError> {
        self.cursor += 1;
        self.expect(&Token::LBrace, "`{`")?;
        self.keyword("grid")?;
        self.expect(&Token::Equals, "`=`")?;
        let grid = self.expr_list()?;
        self.expect(&Token::Semicolon, "`;`")?;
        self.keyword("matrix")?;
        self.expect(&Token::Equals, "`=`")?;
        self.expect(&Token::LBracket, "`[`")?;
        let mut matrix = Vec::new();
        loop {
            matrix.push(self.expr_list()?);
            match self.peek() {
                Some(Token::Comma) => {
                    self.cursor += 1;
                }
                Some(Token::RBracket) => {
                    self.cursor += 1;
                    break;
                }
                _ => return Err(self.error(&["`,`", "`]`"])),
            }
        }
        self.expect(&Token::RBrace, "`}`")?;
        Ok(Expr::Operator { grid, matrix })
    }

    fn keyword(&mut self, word: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some(Token::Ident(w)) if w == word => {
                self.cursor += 1;
                Ok(())
            }
            _ => Err(self.error(&[&format!("`{word}`")])),
        }
    }

    /// `[ expr, expr, … ]` (possibly empty)
    fn expr_list(&mut self) -> Result<Vec<Expr>, ParseError> {
        self.expect(&Token::LBracket, "`[`")?;
        let mut out = Vec::new();
        if self.peek() == Some(&Token::RBracket) {
            self.cursor += 1;
            return Ok(out);
        }
        loop {
            out.push(self.expr()?);
            match self.peek() {
                Some(Token::Comma) => {
                    self.cursor += 1;
                }
                Some(Token::RBracket) => {
                    self.cursor += 1;
                    return Ok(out);
                }
                _ => return Err(self.error(&["`,`", "`]`"])),
            }
        }
    }

    /// `[-] p [/ q]`
    fn signed_rational(&mut self) -> Result<BigRational, ParseError> {
        let negative = if self.peek() == Some(&Token::Minus) {
            self.cursor += 1;
            true
        } else {
            false
        };
        let pos = self.position();
        let numer = match self.peek() {
            Some(Token::Int(value)) => {
                let v = value.clone();
                self.cursor += 1;
                v
            }
            _ => return Err(self.error(&["a number"])),
        };
        let denom = if self.peek() == Some(&Token::Slash) {
            self.cursor += 1;
            match self.peek() {
                Some(Token::Int(value)) => {
                    let v = value.clone();
                    self.cursor += 1;
                    v
                }
                _ => return Err(self.error(&["a denominator"])),
            }
        } else {
            BigInt::from(1)
        };
        if denom.is_zero() {
            return Err(ParseError {
                position: pos,
                expected: vec!["a nonzero denominator".into()],
                found: "`0`".into(),
            });
        }
        let value = BigRational::new(numer, denom);
        Ok(if negative { -value } else { value })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_scalar_expressions() {
        let e = parse_expression("1/n + n^(1/2)").unwrap();
        match e {
            Expr::Binary(BinOp::Add, lhs, rhs) => {
                assert!(matches!(*lhs, Expr::Binary(BinOp::Div, _, _)));
                assert!(matches!(*rhs, Expr::IndexPower(_)));
            }
            other => panic!("unexpected tree: {other:?}"),
        }
    }

    #[test]
    fn parses_class_literal() {
        let e = parse_expression("class mod 2 { n; 1/n }").unwrap();
        match e {
            Expr::ClassGerm(entries) => assert_eq!(entries.len(), 2),
            other => panic!("unexpected tree: {other:?}"),
        }
        // entry count must match the modulus
        assert!(parse_expression("class mod 3 { n; 1 }").is_err());
    }

    #[test]
    fn reports_error_positions() {
        let err = parse_expression("1 + * 2").unwrap_err();
        assert_eq!(err.position, 4);
        assert!(err.found.contains('*'));
    }

    #[test]
    fn parses_commands() {
        assert!(matches!(
            parse_command("let x = 1 + omega").unwrap(),
            Command::Let(_, _)
        ));
        assert!(matches!(
            parse_command("cmp class mod 2 {1; -1} 0").unwrap(),
            Command::Cmp(_, _)
        ));
        assert!(matches!(
            parse_command("heisenberg sx sy psi0").unwrap(),
            Command::Heisenberg(_, _, _)
        ));
        assert!(matches!(
            parse_command("fuzz heisenberg 100 42").unwrap(),
            Command::Fuzz { seed: Some(42), .. }
        ));
        assert!(matches!(
            parse_command("evalat n*n 3").unwrap(),
            Command::EvalAt(_, 3)
        ));
        // trailing garbage is rejected
        assert!(parse_command("show x y").is_err());
    }

    #[test]
    fn parses_wave_and_operator_literals() {
        let e = parse_expression("wave { breaks = [0, 1, omega]; coeffs = [2+3i, 1/n] }").unwrap();
        match e {
            Expr::Wave { breaks, coeffs } => {
                assert_eq!(breaks.len(), 3);
                assert_eq!(coeffs.len(), 2);
            }
            other => panic!("unexpected tree: {other:?}"),
        }
        let e = parse_expression("op { grid = [0,1,2]; matrix = [[0, -i],[i, 0]] }").unwrap();
        match e {
            Expr::Operator { grid, matrix } => {
                assert_eq!(grid.len(), 3);
                assert_eq!(matrix.len(), 2);
                assert_eq!(matrix[0].len(), 2);
            }
            other => panic!("unexpected tree: {other:?}"),
        }
    }

    #[test]
    fn parses_patch_literal() {
        let e = parse_expression("patch{4: 99, 7: -1/2}").unwrap();
        match e {
            Expr::Patch(map) => {
                assert_eq!(map.len(), 2);
            }
            other => panic!("unexpected tree: {other:?}"),
        }
    }
}
