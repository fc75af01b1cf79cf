use std::collections::HashMap;

use super::lexer::{lex, Tok, Token};
use super::{Attaching, DslDocument, DslError, HandlebodyBlock, HandlebodyDef, Item, Name, Pos, TwoHandleDecl};
use crate::front::{FrontDiagram, FrontError, OneHandleId};

pub const COMMANDS: [&str; 7] = ["invariants", "defect", "whitehead", "reduce", "decompose", "corks", "render"];

/// Parses a document and checks that every name it uses is declared.
pub fn parse(text: &str) -> Result<DslDocument, DslError> {
    let tokens = lex(text)?;
    let mut p = Parser { tokens, at: 0, end: end_pos(text) };
    let mut items = Vec::new();
    while !p.done() {
        items.push(p.item()?);
    }
    let doc = DslDocument { items };
    check_references(&doc)?;
    Ok(doc)
}

fn end_pos(text: &str) -> Pos {
    let line = text.lines().count().max(1);
    let col = text.lines().last().map_or(0, |l| l.chars().count()) + 1;
    Pos { line, col }
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
    end: Pos,
}

impl Parser {
    fn done(&self) -> bool {
        self.at >= self.tokens.len()
    }

    fn next(&mut self, what: &str) -> Result<Token, DslError> {
        let t = self.tokens.get(self.at).cloned().ok_or_else(|| DslError::new(self.end, format!("expected {what}, found end of input")))?;
        self.at += 1;
        Ok(t)
    }

    fn peek_is(&self, tok: &Tok) -> bool {
        self.tokens.get(self.at).is_some_and(|t| &t.tok == tok)
    }

    fn peek_ident(&self, word: &str) -> bool {
        self.peek_is(&Tok::Ident(word.to_string()))
    }

    fn ident(&mut self, what: &str) -> Result<Name, DslError> {
        let t = self.next(what)?;
        match t.tok {
            Tok::Ident(s) => Ok(Name { text: s, pos: t.pos }),
            other => Err(DslError::new(t.pos, format!("expected {what}, found {}", describe(&other)))),
        }
    }

    fn keyword(&mut self, word: &str) -> Result<Pos, DslError> {
        let t = self.next(&format!("`{word}`"))?;
        match &t.tok {
            Tok::Ident(s) if s == word => Ok(t.pos),
            other => Err(DslError::new(t.pos, format!("expected `{word}`, found {}", describe(other)))),
        }
    }

    fn punct(&mut self, c: char) -> Result<(), DslError> {
        let t = self.next(&format!("`{c}`"))?;
        match t.tok {
            Tok::Punct(d) if d == c => Ok(()),
            other => Err(DslError::new(t.pos, format!("expected `{c}`, found {}", describe(&other)))),
        }
    }

    fn int(&mut self, what: &str) -> Result<(i64, Pos), DslError> {
        let t = self.next(what)?;
        match t.tok {
            Tok::Int(v) => Ok((v, t.pos)),
            other => Err(DslError::new(t.pos, format!("expected {what}, found {}", describe(&other)))),
        }
    }

    fn count(&mut self, what: &str, min: i64) -> Result<usize, DslError> {
        let (v, pos) = self.int(what)?;
        if v < min {
            return Err(DslError::new(pos, format!("{what} must be at least {min}, got {v}")));
        }
        Ok(v as usize)
    }

    fn string(&mut self, what: &str) -> Result<(String, Pos), DslError> {
        let t = self.next(what)?;
        match t.tok {
            Tok::Str(s) => Ok((s, t.pos)),
            other => Err(DslError::new(t.pos, format!("expected {what}, found {}", describe(&other)))),
        }
    }

    fn item(&mut self) -> Result<Item, DslError> {
        let head = self.ident("a declaration")?;
        match head.text.as_str() {
            "handlebody" => self.handlebody(),
            "decomposition" => {
                let name = self.ident("a decomposition name")?;
                self.punct('{')?;
                self.keyword("side1")?;
                let side1 = self.ident("a handlebody name")?;
                self.punct(';')?;
                self.keyword("side2")?;
                let side2 = self.ident("a handlebody name")?;
                self.punct(';')?;
                self.punct('}')?;
                Ok(Item::Decomposition { name, side1, side2 })
            }
            "cork" => {
                let name = self.ident("a cork name")?;
                self.punct('{')?;
                let mut parts = Vec::new();
                for key in ["N", "A1", "A2"] {
                    self.keyword(key)?;
                    parts.push(self.ident("a handlebody name")?);
                    self.punct(';')?;
                }
                self.punct('}')?;
                let a2 = parts.pop().expect("three parts");
                let a1 = parts.pop().expect("three parts");
                let n = parts.pop().expect("three parts");
                Ok(Item::Cork { name, n, a1, a2 })
            }
            "run" => {
                let command = self.ident("a command")?;
                if !COMMANDS.contains(&command.text.as_str()) {
                    return Err(DslError::new(command.pos, format!("unknown command `{}`", command.text)));
                }
                let target = self.ident("a target name")?;
                let mut params = Vec::new();
                while !self.peek_is(&Tok::Punct(';')) {
                    let key = self.ident("a parameter")?;
                    if !["n", "k", "budget", "seed"].contains(&key.text.as_str()) {
                        return Err(DslError::new(key.pos, format!("unknown parameter `{}`", key.text)));
                    }
                    let (v, _) = self.int("a parameter value")?;
                    params.push((key.text, v));
                }
                self.punct(';')?;
                Ok(Item::Run { command, target, params })
            }
            other => Err(DslError::new(head.pos, format!("unknown declaration `{other}`"))),
        }
    }

    fn handlebody(&mut self) -> Result<Item, DslError> {
        let name = self.ident("a handlebody name")?;
        if self.peek_is(&Tok::Punct('=')) {
            self.punct('=')?;
            let form = self.ident("a constructor")?;
            let def = match form.text.as_str() {
                "positron" => HandlebodyDef::Positron(self.count("positron size", 1)?),
                "pair" => HandlebodyDef::Pair(self.int("a framing")?.0),
                "unknot" => HandlebodyDef::Unknot(self.int("a framing")?.0),
                "sum" => HandlebodyDef::Sum(self.ident("a handlebody name")?, self.ident("a handlebody name")?),
                "reverse" => HandlebodyDef::Reverse(self.ident("a handlebody name")?),
                other => return Err(DslError::new(form.pos, format!("unknown constructor `{other}`"))),
            };
            self.punct(';')?;
            return Ok(Item::Handlebody { name, def });
        }
        self.punct('{')?;
        let mut block = HandlebodyBlock { one_handles: Vec::new(), front: None, two_handles: Vec::new(), orientation: 1 };
        let mut seen: HashMap<String, Pos> = HashMap::new();
        let declare = |n: &Name, seen: &mut HashMap<String, Pos>| match seen.insert(n.text.clone(), n.pos) {
            Some(prev) => Err(DslError::new(n.pos, format!("`{}` already declared at {prev}", n.text))),
            None => Ok(()),
        };
        while !self.peek_is(&Tok::Punct('}')) {
            let key = self.ident("a handlebody statement")?;
            match key.text.as_str() {
                "1h" => {
                    while !self.peek_is(&Tok::Punct(';')) {
                        let h = self.ident("a 1-handle name")?;
                        declare(&h, &mut seen)?;
                        block.one_handles.push(h);
                    }
                }
                "front" => {
                    if block.front.is_some() {
                        return Err(DslError::new(key.pos, "shared front given twice"));
                    }
                    let (text, pos) = self.string("a front word")?;
                    block.front = Some(front_in(&text, pos, &block.one_handles)?);
                }
                "2h" => {
                    let name = self.ident("a 2-handle name")?;
                    declare(&name, &mut seen)?;
                    self.keyword("framing")?;
                    let framing = self.int("a framing")?.0;
                    let attaching = if self.peek_ident("on") {
                        self.keyword("on")?;
                        Attaching::On(self.count("a component index", 0)?)
                    } else {
                        self.keyword("front")?;
                        let (text, pos) = self.string("a front word")?;
                        Attaching::Front(front_in(&text, pos, &block.one_handles)?)
                    };
                    let reversed = self.peek_ident("reversed");
                    if reversed {
                        self.keyword("reversed")?;
                    }
                    block.two_handles.push(TwoHandleDecl { name, framing, attaching, reversed });
                }
                "orientation" => {
                    let (v, pos) = self.int("+1 or -1")?;
                    if v != 1 && v != -1 {
                        return Err(DslError::new(pos, format!("orientation must be 1 or -1, got {v}")));
                    }
                    block.orientation = v as i8;
                }
                other => return Err(DslError::new(key.pos, format!("unknown handlebody statement `{other}`"))),
            }
            self.punct(';')?;
        }
        self.punct('}')?;
        Ok(Item::Handlebody { name, def: HandlebodyDef::Block(block) })
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Int(v) => format!("`{v}`"),
        Tok::Str(_) => "a string".into(),
        Tok::Punct(c) => format!("`{c}`"),
    }
}

/// Parses a front word; errors point at the offending token.
fn front_in(text: &str, pos: Pos, one_handles: &[Name]) -> Result<FrontDiagram, DslError> {
    let resolve = |s: &str| one_handles.iter().position(|h| h.text == s).map(OneHandleId);
    FrontDiagram::parse_with(text, resolve).map_err(|e| match e {
        FrontError::BadToken { token, position } => {
            let offset = token_offset(text, position);
            let at = Pos { line: pos.line, col: pos.col + 1 + offset };
            let hint = match token.split_once(':') {
                Some((_, h)) if !h.is_empty() && !one_handles.iter().any(|n| n.text == h) => {
                    format!("undeclared 1-handle `{h}` in token `{token}`")
                }
                _ => format!("bad front token `{token}`"),
            };
            DslError::new(at, hint)
        }
        other => DslError::new(pos, format!("invalid front: {other}")),
    })
}

fn token_offset(text: &str, index: usize) -> usize {
    let mut count = 0;
    let mut in_token = false;
    for (i, c) in text.chars().enumerate() {
        if c.is_whitespace() {
            in_token = false;
        } else if !in_token {
            if count == index {
                return i;
            }
            count += 1;
            in_token = true;
        }
    }
    0
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Handlebody,
    Decomposition,
    Cork,
}

fn check_references(doc: &DslDocument) -> Result<(), DslError> {
    let mut names: HashMap<&str, (Kind, Pos)> = HashMap::new();
    let want = |names: &HashMap<&str, (Kind, Pos)>, n: &Name, kind: Kind| -> Result<(), DslError> {
        match names.get(n.text.as_str()) {
            Some((k, _)) if *k == kind => Ok(()),
            Some(_) => Err(DslError::new(n.pos, format!("`{}` is not a {}", n.text, kind_word(kind)))),
            None => Err(DslError::new(n.pos, format!("unknown {} `{}`", kind_word(kind), n.text))),
        }
    };
    for item in &doc.items {
        match item {
            Item::Handlebody { def, .. } => match def {
                HandlebodyDef::Sum(a, b) => {
                    want(&names, a, Kind::Handlebody)?;
                    want(&names, b, Kind::Handlebody)?;
                }
                HandlebodyDef::Reverse(a) => want(&names, a, Kind::Handlebody)?,
                _ => {}
            },
            Item::Decomposition { side1, side2, .. } => {
                want(&names, side1, Kind::Handlebody)?;
                want(&names, side2, Kind::Handlebody)?;
            }
            Item::Cork { n, a1, a2, .. } => {
                for x in [n, a1, a2] {
                    want(&names, x, Kind::Handlebody)?;
                }
            }
            Item::Run { command, target, .. } => {
                let kind = match command.text.as_str() {
                    "decompose" => Kind::Decomposition,
                    "corks" => Kind::Cork,
                    _ => Kind::Handlebody,
                };
                want(&names, target, kind)?;
            }
        }
        if let Some(name) = item.name() {
            let kind = match item {
                Item::Handlebody { .. } => Kind::Handlebody,
                Item::Decomposition { .. } => Kind::Decomposition,
                _ => Kind::Cork,
            };
            if let Some((_, prev)) = names.insert(name.text.as_str(), (kind, name.pos)) {
                return Err(DslError::new(name.pos, format!("`{}` already declared at {prev}", name.text)));
            }
        }
    }
    Ok(())
}

fn kind_word(k: Kind) -> &'static str {
    match k {
        Kind::Handlebody => "handlebody",
        Kind::Decomposition => "decomposition",
        Kind::Cork => "cork",
    }
}
