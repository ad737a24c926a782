//! Finite group presentations and the algorithms run on them.
//!
//! Text format: a `gens:` line listing generator names and `rel:` lines with
//! relators. A relator line `rel: P = Q = R` contributes `P Q^-1` and `Q R^-1`.
//! Tokens are `NAME` or `NAME^-1`; the reader also accepts `NAME^k`,
//! parenthesised groups with exponents, and `1` for the empty word. Blank
//! lines and lines starting with `#` are skipped.

pub mod abelian;
pub mod brown;
pub mod extension;
pub mod rs;
pub mod snf;
pub mod tietze;
pub mod todd_coxeter;
pub mod word;

pub use word::{cyclic_normal_form, cyclic_reduce, free_reduce, Letter, Word};

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("invalid json presentation: {0}")]
    Json(String),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
    /// Set once a transformation was applied without a witness; the group may
    /// then differ from the one originally presented.
    pub extended: bool,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, PresentationError> {
        let p = Presentation { generators, relators, extended: false };
        p.check()?;
        Ok(p)
    }

    /// Every relator letter must be a declared generator, declared once.
    pub fn check(&self) -> Result<(), PresentationError> {
        let mut seen = BTreeSet::new();
        for g in &self.generators {
            if !seen.insert(g.as_str()) {
                return Err(PresentationError::DuplicateGenerator(g.clone()));
            }
        }
        for r in &self.relators {
            for l in &r.letters {
                if !seen.contains(l.gen.as_str()) {
                    return Err(PresentationError::UnknownGenerator(l.gen.clone()));
                }
            }
        }
        Ok(())
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn has_generator(&self, name: &str) -> bool {
        self.gen_index(name).is_some()
    }

    pub fn parse_text(src: &str) -> Result<Self, PresentationError> {
        let mut generators = Vec::new();
        let mut relators = Vec::new();
        for (i, raw) in src.lines().enumerate() {
            let line = raw.trim();
            let lineno = i + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("gens:") {
                for name in rest.split_whitespace() {
                    if !valid_name(name) {
                        return Err(PresentationError::Parse {
                            line: lineno,
                            msg: format!("bad generator name `{name}`"),
                        });
                    }
                    generators.push(name.to_string());
                }
            } else if let Some(rest) = line.strip_prefix("rel:") {
                let rels = parse_relation(rest).map_err(|msg| PresentationError::Parse { line: lineno, msg })?;
                relators.extend(rels);
            } else {
                return Err(PresentationError::Parse { line: lineno, msg: "expected `gens:` or `rel:`".into() });
            }
        }
        Presentation::new(generators, relators)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from("gens:");
        for g in &self.generators {
            s.push(' ');
            s.push_str(g);
        }
        s.push('\n');
        for r in &self.relators {
            s.push_str("rel: ");
            s.push_str(&r.to_string());
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let repr = PresentationJson {
            generators: self.generators.clone(),
            relators: self
                .relators
                .iter()
                .map(|r| r.letters.iter().map(|l| (l.gen.clone(), l.exp)).collect())
                .collect(),
        };
        serde_json::to_value(repr).expect("presentation serialises")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, PresentationError> {
        let repr: PresentationJson =
            serde_json::from_value(v.clone()).map_err(|e| PresentationError::Json(e.to_string()))?;
        let mut relators = Vec::new();
        for r in repr.relators {
            let mut letters = Vec::new();
            for (g, e) in r {
                if e != 1 && e != -1 {
                    return Err(PresentationError::Json(format!("exponent {e} is not ±1")));
                }
                letters.push(Letter::new(g, e));
            }
            relators.push(Word::from_letters(letters));
        }
        Presentation::new(repr.generators, relators)
    }

    /// Parse either the text or the json format.
    pub fn parse_any(src: &str) -> Result<Self, PresentationError> {
        if src.trim_start().starts_with('{') {
            let v: serde_json::Value = serde_json::from_str(src).map_err(|e| PresentationError::Json(e.to_string()))?;
            Presentation::from_json(&v)
        } else {
            Presentation::parse_text(src)
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

#[derive(Serialize, Deserialize)]
struct PresentationJson {
    generators: Vec<String>,
    relators: Vec<Vec<(String, i8)>>,
}

pub fn valid_name(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parse a word expression such as `(A2 U)^2 D2^-1`.
pub fn parse_word(src: &str) -> Result<Word, String> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks: &toks, pos: 0 };
    let w = p.expr()?;
    if p.pos != toks.len() {
        return Err(format!("unexpected `{}`", toks[p.pos]));
    }
    Ok(w)
}

/// Parse `P = Q = ...` into relators `P Q^-1, Q R^-1, ...`.
pub fn parse_relation(src: &str) -> Result<Vec<Word>, String> {
    let sides: Vec<Word> = src.split('=').map(parse_word).collect::<Result<_, _>>()?;
    if sides.len() == 1 {
        return Ok(sides);
    }
    Ok(sides.windows(2).map(|p| p[0].concat(&p[1].inverse())).collect())
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Name(String),
    One,
    Open,
    Close,
    Pow(i64),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Name(n) => write!(f, "{n}"),
            Tok::One => write!(f, "1"),
            Tok::Open => write!(f, "("),
            Tok::Close => write!(f, ")"),
            Tok::Pow(k) => write!(f, "^{k}"),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<Tok>, String> {
    let cs: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c == '(' {
            out.push(Tok::Open);
            i += 1;
        } else if c == ')' {
            out.push(Tok::Close);
            i += 1;
        } else if c == '^' {
            i += 1;
            let start = i;
            if i < cs.len() && cs[i] == '-' {
                i += 1;
            }
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = cs[start..i].iter().collect();
            let k: i64 = s.parse().map_err(|_| format!("bad exponent `^{s}`"))?;
            out.push(Tok::Pow(k));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < cs.len() && (cs[i].is_ascii_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Name(cs[start..i].iter().collect()));
        } else if c == '1' && !cs.get(i + 1).is_some_and(|d| d.is_ascii_digit()) {
            out.push(Tok::One);
            i += 1;
        } else {
            return Err(format!("unexpected character `{c}`"));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
}

impl Parser<'_> {
    fn expr(&mut self) -> Result<Word, String> {
        let mut w = Word::identity();
        while self.pos < self.toks.len() && self.toks[self.pos] != Tok::Close {
            let atom = match &self.toks[self.pos] {
                Tok::Name(n) => {
                    self.pos += 1;
                    Word::gen(n.clone())
                }
                Tok::One => {
                    self.pos += 1;
                    Word::identity()
                }
                Tok::Open => {
                    self.pos += 1;
                    let inner = self.expr()?;
                    if self.toks.get(self.pos) != Some(&Tok::Close) {
                        return Err("unbalanced parenthesis".into());
                    }
                    self.pos += 1;
                    inner
                }
                t => return Err(format!("unexpected `{t}`")),
            };
            let atom = match self.toks.get(self.pos) {
                Some(Tok::Pow(k)) => {
                    self.pos += 1;
                    atom.pow(*k)
                }
                _ => atom,
            };
            w = w.concat(&atom);
        }
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_sugar() {
        let p = Presentation::parse_text("# comment\ngens: A1 U\n\nrel: U A1 U^-1 = A1^-1\nrel: U U\n").unwrap();
        assert_eq!(p.generators, vec!["A1", "U"]);
        assert_eq!(p.relators[0].to_string(), "U A1 U^-1 A1");
        assert_eq!(p.relators[1].to_string(), "U U");
    }

    #[test]
    fn chains_and_powers() {
        let r = parse_relation("(A U)^2 = (D U)^2 = 1").unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(r[0].to_string(), "A U A U U^-1 D^-1 U^-1 D^-1");
        assert_eq!(r[1].to_string(), "D U D U");
        assert_eq!(parse_word("A^-2").unwrap().to_string(), "A^-1 A^-1");
    }

    #[test]
    fn text_and_json_roundtrip() {
        let p = Presentation::parse_text("gens: A1 U\nrel: A1 U^-1\nrel: U U\n").unwrap();
        assert_eq!(Presentation::parse_text(&p.to_text()).unwrap(), p);
        assert_eq!(Presentation::from_json(&p.to_json()).unwrap(), p);
        assert_eq!(
            p.to_json().to_string(),
            r#"{"generators":["A1","U"],"relators":[[["A1",1],["U",-1]],[["U",1],["U",1]]]}"#
        );
    }

    #[test]
    fn unknown_generator_rejected() {
        assert_eq!(
            Presentation::parse_text("gens: a\nrel: a b\n"),
            Err(PresentationError::UnknownGenerator("b".into()))
        );
        assert!(matches!(Presentation::parse_text("gens: a\nfoo\n"), Err(PresentationError::Parse { line: 2, .. })));
    }
}
