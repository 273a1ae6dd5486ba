//! Tokenizer for scene files. Line-oriented: newlines are significant
//! outside `{ ... }` and `( ... )` groups (the parser decides), and `#`
//! starts a comment running to end of line.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    Ident(String),
    /// Integer or integer/integer literal, kept as raw text.
    Number(String),
    Str(String),
    LBrace,
    RBrace,
    LParen,
    RParen,
    Colon,
    Semi,
    Comma,
    Plus,
    Minus,
    Star,
    Caret,
    EqEq,
    Arrow,    // ->
    FatArrow, // =>
    Assign,   // :=
    Newline,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub line: usize,
    pub col: usize,
}

#[derive(Debug, Clone)]
pub struct LexError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for LexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

pub fn lex(src: &str) -> Result<Vec<Token>, LexError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0usize;
    let n = chars.len();
    macro_rules! push {
        ($kind:expr, $c:expr) => {
            out.push(Token {
                kind: $kind,
                line,
                col: $c,
            })
        };
    }
    while i < n {
        let c = chars[i];
        match c {
            '\n' => {
                push!(TokenKind::Newline, col);
                line += 1;
                col = 1;
                i += 1;
            }
            ' ' | '\t' | '\r' => {
                i += 1;
                col += 1;
            }
            '#' => {
                while i < n && chars[i] != '\n' {
                    i += 1;
                }
            }
            '{' => {
                push!(TokenKind::LBrace, col);
                i += 1;
                col += 1;
            }
            '}' => {
                push!(TokenKind::RBrace, col);
                i += 1;
                col += 1;
            }
            '(' => {
                push!(TokenKind::LParen, col);
                i += 1;
                col += 1;
            }
            ')' => {
                push!(TokenKind::RParen, col);
                i += 1;
                col += 1;
            }
            ';' => {
                push!(TokenKind::Semi, col);
                i += 1;
                col += 1;
            }
            ',' => {
                push!(TokenKind::Comma, col);
                i += 1;
                col += 1;
            }
            '+' => {
                push!(TokenKind::Plus, col);
                i += 1;
                col += 1;
            }
            '*' => {
                push!(TokenKind::Star, col);
                i += 1;
                col += 1;
            }
            '^' => {
                push!(TokenKind::Caret, col);
                i += 1;
                col += 1;
            }
            '-' => {
                if i + 1 < n && chars[i + 1] == '>' {
                    push!(TokenKind::Arrow, col);
                    i += 2;
                    col += 2;
                } else {
                    push!(TokenKind::Minus, col);
                    i += 1;
                    col += 1;
                }
            }
            '=' => {
                if i + 1 < n && chars[i + 1] == '=' {
                    push!(TokenKind::EqEq, col);
                    i += 2;
                    col += 2;
                } else if i + 1 < n && chars[i + 1] == '>' {
                    push!(TokenKind::FatArrow, col);
                    i += 2;
                    col += 2;
                } else {
                    return Err(LexError {
                        line,
                        col,
                        message: "stray `=` (use `==`, `=>` or `:=`)".into(),
                    });
                }
            }
            ':' => {
                if i + 1 < n && chars[i + 1] == '=' {
                    push!(TokenKind::Assign, col);
                    i += 2;
                    col += 2;
                } else {
                    push!(TokenKind::Colon, col);
                    i += 1;
                    col += 1;
                }
            }
            '"' => {
                let start_col = col;
                let mut s = String::new();
                i += 1;
                col += 1;
                loop {
                    if i >= n || chars[i] == '\n' {
                        return Err(LexError {
                            line,
                            col,
                            message: "unterminated string".into(),
                        });
                    }
                    if chars[i] == '"' {
                        i += 1;
                        col += 1;
                        break;
                    }
                    s.push(chars[i]);
                    i += 1;
                    col += 1;
                }
                push!(TokenKind::Str(s), start_col);
            }
            _ if c.is_ascii_digit() => {
                let start_col = col;
                let mut s = String::new();
                while i < n && chars[i].is_ascii_digit() {
                    s.push(chars[i]);
                    i += 1;
                    col += 1;
                }
                // `a/b` rational literal (no spaces around the slash).
                if i + 1 < n && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                    s.push('/');
                    i += 1;
                    col += 1;
                    while i < n && chars[i].is_ascii_digit() {
                        s.push(chars[i]);
                        i += 1;
                        col += 1;
                    }
                }
                push!(TokenKind::Number(s), start_col);
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let start_col = col;
                let mut s = String::new();
                while i < n && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    s.push(chars[i]);
                    i += 1;
                    col += 1;
                }
                push!(TokenKind::Ident(s), start_col);
            }
            _ => {
                return Err(LexError {
                    line,
                    col,
                    message: if c.is_ascii() {
                        format!("unexpected character `{c}`")
                    } else {
                        format!("non-ASCII character `{c}` (use the ASCII alias table)")
                    },
                });
            }
        }
    }
    out.push(Token {
        kind: TokenKind::Newline,
        line,
        col,
    });
    Ok(out)
}
