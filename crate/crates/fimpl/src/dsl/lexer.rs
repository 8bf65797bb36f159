use super::{Diagnostic, Span};

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum TokenKind {
    Ident(String),
    Number(f64),
    Equals,
    Semi,
    Comma,
    Colon,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Plus,
    Minus,
    Star,
    Slash,
    Eof,
}

impl TokenKind {
    pub(crate) fn describe(&self) -> String {
        match self {
            TokenKind::Ident(s) => format!("identifier {s:?}"),
            TokenKind::Number(v) => format!("number {v}"),
            TokenKind::Equals => "'='".into(),
            TokenKind::Semi => "';'".into(),
            TokenKind::Comma => "','".into(),
            TokenKind::Colon => "':'".into(),
            TokenKind::LParen => "'('".into(),
            TokenKind::RParen => "')'".into(),
            TokenKind::LBracket => "'['".into(),
            TokenKind::RBracket => "']'".into(),
            TokenKind::Plus => "'+'".into(),
            TokenKind::Minus => "'-'".into(),
            TokenKind::Star => "'*'".into(),
            TokenKind::Slash => "'/'".into(),
            TokenKind::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Token {
    pub kind: TokenKind,
    pub span: Span,
}

pub(crate) fn tokenize(source: &str) -> Result<Vec<Token>, Diagnostic> {
    let bytes = source.as_bytes();
    let mut tokens = Vec::new();
    let mut pos = 0usize;
    let mut line = 1u32;
    let mut col = 1u32;

    let span_at = |start: usize, end: usize, line: u32, col: u32| Span { start, end, line, col };

    while pos < bytes.len() {
        let c = bytes[pos] as char;
        let (start, start_line, start_col) = (pos, line, col);
        match c {
            ' ' | '\t' | '\r' => {
                pos += 1;
                col += 1;
            }
            '\n' => {
                pos += 1;
                line += 1;
                col = 1;
            }
            '#' => {
                while pos < bytes.len() && bytes[pos] != b'\n' {
                    pos += 1;
                }
            }
            '=' | ';' | ',' | ':' | '(' | ')' | '[' | ']' | '+' | '-' | '*' | '/' => {
                let kind = match c {
                    '=' => TokenKind::Equals,
                    ';' => TokenKind::Semi,
                    ',' => TokenKind::Comma,
                    ':' => TokenKind::Colon,
                    '(' => TokenKind::LParen,
                    ')' => TokenKind::RParen,
                    '[' => TokenKind::LBracket,
                    ']' => TokenKind::RBracket,
                    '+' => TokenKind::Plus,
                    '-' => TokenKind::Minus,
                    '*' => TokenKind::Star,
                    _ => TokenKind::Slash,
                };
                pos += 1;
                col += 1;
                tokens.push(Token { kind, span: span_at(start, pos, start_line, start_col) });
            }
            c if c.is_ascii_digit() => {
                while pos < bytes.len() && (bytes[pos] as char).is_ascii_digit() {
                    pos += 1;
                    col += 1;
                }
                if pos < bytes.len() && bytes[pos] == b'.' {
                    pos += 1;
                    col += 1;
                    if pos >= bytes.len() || !(bytes[pos] as char).is_ascii_digit() {
                        return Err(Diagnostic::new(
                            span_at(start, pos, start_line, start_col),
                            "expected digits after decimal point",
                        ));
                    }
                    while pos < bytes.len() && (bytes[pos] as char).is_ascii_digit() {
                        pos += 1;
                        col += 1;
                    }
                }
                if pos < bytes.len() && (bytes[pos] == b'e' || bytes[pos] == b'E') {
                    let mut probe = pos + 1;
                    if probe < bytes.len() && (bytes[probe] == b'+' || bytes[probe] == b'-') {
                        probe += 1;
                    }
                    if probe < bytes.len() && (bytes[probe] as char).is_ascii_digit() {
                        while probe < bytes.len() && (bytes[probe] as char).is_ascii_digit() {
                            probe += 1;
                        }
                        col += (probe - pos) as u32;
                        pos = probe;
                    }
                }
                let text = &source[start..pos];
                let value: f64 = text.parse().map_err(|_| {
                    Diagnostic::new(
                        span_at(start, pos, start_line, start_col),
                        format!("invalid number literal {text:?}"),
                    )
                })?;
                tokens.push(Token {
                    kind: TokenKind::Number(value),
                    span: span_at(start, pos, start_line, start_col),
                });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while pos < bytes.len() {
                    let c = bytes[pos] as char;
                    if c.is_ascii_alphanumeric() || c == '_' {
                        pos += 1;
                        col += 1;
                    } else {
                        break;
                    }
                }
                tokens.push(Token {
                    kind: TokenKind::Ident(source[start..pos].to_string()),
                    span: span_at(start, pos, start_line, start_col),
                });
            }
            other => {
                return Err(Diagnostic::new(
                    span_at(start, start + 1, start_line, start_col),
                    format!("unexpected character {other:?}"),
                ));
            }
        }
    }
    tokens.push(Token {
        kind: TokenKind::Eof,
        span: Span { start: bytes.len(), end: bytes.len(), line, col },
    });
    Ok(tokens)
}
