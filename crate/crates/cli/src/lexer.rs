//! Tokenizer for the command grammar.
//!
//! Number literals immediately followed by `i` (no space) lex as imaginary
//! literals, so `2+3i` works as expected; everything else is conventional.

use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Token {
    Int(BigInt),
    /// A number literal written with an `i` suffix, e.g. `3i`.
    Imag(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Equals,
    Semicolon,
    Colon,
    Comma,
}

impl Token {
    pub fn describe(&self) -> String {
        match self {
            Token::Int(n) => format!("number `{n}`"),
            Token::Imag(n) => format!("imaginary literal `{n}i`"),
            Token::Ident(s) => format!("`{s}`"),
            Token::Plus => "`+`".into(),
            Token::Minus => "`-`".into(),
            Token::Star => "`*`".into(),
            Token::Slash => "`/`".into(),
            Token::Caret => "`^`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::LBrace => "`{`".into(),
            Token::RBrace => "`}`".into(),
            Token::LBracket => "`[`".into(),
            Token::RBracket => "`]`".into(),
            Token::Equals => "`=`".into(),
            Token::Semicolon => "`;`".into(),
            Token::Colon => "`:`".into(),
            Token::Comma => "`,`".into(),
        }
    }
}

/// A token plus its starting byte offset in the input line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spanned {
    pub token: Token,
    pub position: usize,
}

/// Lexing failure: the offending position and a short description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexError {
    pub position: usize,
    pub message: String,
}

pub fn lex(input: &str) -> Result<Vec<Spanned>, LexError> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos] as char;
        if c.is_whitespace() {
            pos += 1;
            continue;
        }
        if c == '#' {
            break; // comment to end of line
        }
        let start = pos;
        let token = match c {
            '+' => single(&mut pos, Token::Plus),
            '-' => single(&mut pos, Token::Minus),
            '*' => single(&mut pos, Token::Star),
            '/' => single(&mut pos, Token::Slash),
            '^' => single(&mut pos, Token::Caret),
            '(' => single(&mut pos, Token::LParen),
            ')' => single(&mut pos, Token::RParen),
            '{' => single(&mut pos, Token::LBrace),
            '}' => single(&mut pos, Token::RBrace),
            '[' => single(&mut pos, Token::LBracket),
            ']' => single(&mut pos, Token::RBracket),
            '=' => single(&mut pos, Token::Equals),
            ';' => single(&mut pos, Token::Semicolon),
            ':' => single(&mut pos, Token::Colon),
            ',' => single(&mut pos, Token::Comma),
            '0'..='9' => {
                let mut end = pos;
                while end < bytes.len() && bytes[end].is_ascii_digit() {
                    end += 1;
                }
                let digits = &input[pos..end];
                let value: BigInt = digits.parse().expect("digit run parses");
                // an `i` suffix not followed by more identifier characters
                // makes this an imaginary literal
                if end < bytes.len()
                    && bytes[end] == b'i'
                    && !(end + 1 < bytes.len()
                        && (bytes[end + 1].is_ascii_alphanumeric() || bytes[end + 1] == b'_'))
                {
                    pos = end + 1;
                    Token::Imag(value)
                } else if end < bytes.len()
                    && (bytes[end].is_ascii_alphabetic() || bytes[end] == b'_')
                {
                    return Err(LexError {
                        position: end,
                        message: format!("unexpected letter after number `{digits}`"),
                    });
                } else {
                    pos = end;
                    Token::Int(value)
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut end = pos;
                while end < bytes.len()
                    && ((bytes[end] as char).is_ascii_alphanumeric() || bytes[end] == b'_')
                {
                    end += 1;
                }
                let word = input[pos..end].to_string();
                pos = end;
                Token::Ident(word)
            }
            other => {
                return Err(LexError {
                    position: pos,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        tokens.push(Spanned {
            token,
            position: start,
        });
    }
    Ok(tokens)
}

fn single(pos: &mut usize, token: Token) -> Token {
    *pos += 1;
    token
}
