use super::{DslError, Pos};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Int(i64),
    Str(String),
    Punct(char),
}

#[derive(Debug, Clone)]
pub(crate) struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

pub(crate) fn lex(text: &str) -> Result<Vec<Token>, DslError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1, 1);
    let bump = |c: char, line: &mut usize, col: &mut usize| {
        if c == '\n' {
            *line += 1;
            *col = 1;
        } else {
            *col += 1;
        }
    };
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        if c.is_whitespace() {
            chars.next();
            bump(c, &mut line, &mut col);
        } else if c == '#' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                chars.next();
                bump(c, &mut line, &mut col);
            }
        } else if c == '"' {
            chars.next();
            bump(c, &mut line, &mut col);
            let mut s = String::new();
            loop {
                match chars.next() {
                    Some('"') => {
                        bump('"', &mut line, &mut col);
                        break;
                    }
                    Some(c) => {
                        bump(c, &mut line, &mut col);
                        s.push(c);
                    }
                    None => return Err(DslError::new(pos, "unterminated string")),
                }
            }
            out.push(Token { tok: Tok::Str(s), pos });
        } else if c.is_ascii_digit() || c == '-' || c == '+' {
            let mut s = String::new();
            s.push(c);
            chars.next();
            bump(c, &mut line, &mut col);
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                s.push(d);
                chars.next();
                bump(d, &mut line, &mut col);
            }
            if c.is_ascii_digit() && chars.peek().is_some_and(|d| d.is_alphabetic()) {
                // keywords such as `1h`
                while let Some(&d) = chars.peek() {
                    if !(d.is_alphanumeric() || d == '_') {
                        break;
                    }
                    s.push(d);
                    chars.next();
                    bump(d, &mut line, &mut col);
                }
                out.push(Token { tok: Tok::Ident(s), pos });
                continue;
            }
            let v = s.parse().map_err(|_| DslError::new(pos, format!("bad integer `{s}`")))?;
            out.push(Token { tok: Tok::Int(v), pos });
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !(d.is_alphanumeric() || d == '_') {
                    break;
                }
                s.push(d);
                chars.next();
                bump(d, &mut line, &mut col);
            }
            out.push(Token { tok: Tok::Ident(s), pos });
        } else if "{};=".contains(c) {
            chars.next();
            bump(c, &mut line, &mut col);
            out.push(Token { tok: Tok::Punct(c), pos });
        } else {
            return Err(DslError::new(pos, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}
