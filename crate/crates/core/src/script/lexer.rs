use super::{Diagnostic, Pos};

#[derive(Debug, Clone, PartialEq)]
pub enum Tok {
    Ident(String),
    Number(f64),
    Str(String),
    Hex([u8; 3]),
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Semi,
    Eq,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Number(n) => format!("number {n}"),
            Tok::Str(s) => format!("string {s:?}"),
            Tok::Hex(_) => "color literal".to_string(),
            Tok::LBrace => "`{`".to_string(),
            Tok::RBrace => "`}`".to_string(),
            Tok::LParen => "`(`".to_string(),
            Tok::RParen => "`)`".to_string(),
            Tok::Comma => "`,`".to_string(),
            Tok::Semi => "`;`".to_string(),
            Tok::Eq => "`=`".to_string(),
            Tok::Eof => "end of input".to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    src: &'a str,
    line: usize,
    col: usize,
}

impl Cursor<'_> {
    fn peek(&mut self) -> Option<char> {
        self.chars.peek().map(|&(_, c)| c)
    }

    fn bump(&mut self) -> Option<char> {
        let (_, c) = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn rest(&mut self) -> &str {
        match self.chars.peek() {
            Some(&(i, _)) => &self.src[i..],
            None => "",
        }
    }

    fn pos(&self) -> Pos {
        Pos {
            line: self.line,
            col: self.col,
        }
    }
}

/// `#` followed by exactly six hex digits and then a character that cannot
/// continue a word. Anything else starting with `#` is a comment.
fn hex_color(rest: &str) -> Option<[u8; 3]> {
    let body = rest.strip_prefix('#')?;
    let digits: String = body.chars().take(6).collect();
    if digits.len() != 6 || !digits.chars().all(|c| c.is_ascii_hexdigit()) {
        return None;
    }
    if body[6..]
        .chars()
        .next()
        .is_some_and(|c| c.is_alphanumeric() || c == '_')
    {
        return None;
    }
    let byte = |i: usize| u8::from_str_radix(&digits[i..i + 2], 16).ok();
    Some([byte(0)?, byte(2)?, byte(4)?])
}

pub fn lex(src: &str) -> Result<Vec<Token>, Diagnostic> {
    let mut cur = Cursor {
        chars: src.char_indices().peekable(),
        src,
        line: 1,
        col: 1,
    };
    let mut out = Vec::new();
    loop {
        let pos = cur.pos();
        let Some(c) = cur.peek() else {
            out.push(Token { tok: Tok::Eof, pos });
            return Ok(out);
        };
        let tok = match c {
            c if c.is_whitespace() => {
                cur.bump();
                continue;
            }
            '#' => {
                if let Some(rgb) = hex_color(cur.rest()) {
                    for _ in 0..7 {
                        cur.bump();
                    }
                    Tok::Hex(rgb)
                } else {
                    while cur.peek().is_some_and(|c| c != '\n') {
                        cur.bump();
                    }
                    continue;
                }
            }
            '{' | '}' | '(' | ')' | ',' | ';' | '=' => {
                cur.bump();
                match c {
                    '{' => Tok::LBrace,
                    '}' => Tok::RBrace,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ',' => Tok::Comma,
                    ';' => Tok::Semi,
                    _ => Tok::Eq,
                }
            }
            '"' => {
                cur.bump();
                let mut s = String::new();
                loop {
                    match cur.bump() {
                        None | Some('\n') => {
                            return Err(Diagnostic::new(pos, "unterminated string"));
                        }
                        Some('"') => break,
                        Some('\\') => match cur.bump() {
                            Some('"') => s.push('"'),
                            Some('\\') => s.push('\\'),
                            Some('n') => s.push('\n'),
                            _ => {
                                return Err(Diagnostic::new(pos, "invalid escape in string"));
                            }
                        },
                        Some(c) => s.push(c),
                    }
                }
                Tok::Str(s)
            }
            c if c.is_ascii_digit() || c == '-' || c == '.' => {
                let mut s = String::new();
                if c == '-' {
                    s.push('-');
                    cur.bump();
                }
                while cur.peek().is_some_and(|c| c.is_ascii_digit() || c == '.') {
                    s.push(cur.bump().unwrap());
                }
                // exponent only when digits follow, so `10s` stays a number
                // and a unit
                let rest = cur.rest();
                let mut exp = rest.chars();
                if matches!(exp.next(), Some('e' | 'E')) {
                    let tail: Vec<char> = exp.take(2).collect();
                    let digit_at = |i: usize| tail.get(i).is_some_and(|c| c.is_ascii_digit());
                    if digit_at(0) || (matches!(tail.first(), Some('+' | '-')) && digit_at(1)) {
                        s.push(cur.bump().unwrap());
                        if cur.peek().is_some_and(|c| c == '+' || c == '-') {
                            s.push(cur.bump().unwrap());
                        }
                        while cur.peek().is_some_and(|c| c.is_ascii_digit()) {
                            s.push(cur.bump().unwrap());
                        }
                    }
                }
                match s.parse::<f64>() {
                    Ok(n) if n.is_finite() => Tok::Number(n),
                    _ => return Err(Diagnostic::new(pos, format!("malformed number `{s}`"))),
                }
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut s = String::new();
                while cur.peek().is_some_and(|c| c.is_alphanumeric() || c == '_') {
                    s.push(cur.bump().unwrap());
                }
                Tok::Ident(s)
            }
            other => {
                return Err(Diagnostic::new(
                    pos,
                    format!("unexpected character `{other}`"),
                ));
            }
        };
        out.push(Token { tok, pos });
    }
}
