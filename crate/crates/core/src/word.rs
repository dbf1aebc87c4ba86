//! Text syntax for braid words.
//!
//! Tokens are separated by whitespace or `.`; each is `s<k>` (Artin
//! generator), `a(<t>,<s>)` (band generator), `D` (the Garside element) or
//! `1` (the identity), optionally followed by `^<int>`. Letters are
//! case-insensitive.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bkl::{band_generator_in_artin, BklMonoid};
use crate::element::{GroupElement, GroupOps, Token};
use crate::error::{Error, Result};
use crate::structure::{AtomId, Garside};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonoidKind {
    Artin,
    Bkl,
}

impl MonoidKind {
    pub fn name(self) -> &'static str {
        match self {
            MonoidKind::Artin => "artin",
            MonoidKind::Bkl => "bkl",
        }
    }
}

impl fmt::Display for MonoidKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonoidKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "artin" => Ok(MonoidKind::Artin),
            "bkl" => Ok(MonoidKind::Bkl),
            other => Err(format!("unknown monoid `{other}` (expected artin or bkl)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    Atom(AtomId),
    Delta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WordToken {
    pub letter: Letter,
    pub exponent: i64,
    /// 1-based column of the token in the source text.
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordExpr {
    pub monoid: MonoidKind,
    pub n: usize,
    pub tokens: Vec<WordToken>,
}

struct Lexer {
    chars: Vec<char>,
    pos: usize,
}

impl Lexer {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            column: self.column(),
            message: message.into(),
        })
    }

    fn skip_spaces(&mut self) {
        while self.peek().is_some_and(|c| c == ' ' || c == '\t') {
            self.pos += 1;
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_spaces();
        if self.peek() == Some(want) {
            self.pos += 1;
            Ok(())
        } else {
            self.error(format!("expected `{want}`"))
        }
    }

    fn number(&mut self) -> Result<i64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected a number");
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|_| Error::Parse {
            column: start + 1,
            message: "number too large".into(),
        })
    }

    fn signed(&mut self) -> Result<i64> {
        let neg = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let v = self.number()?;
        Ok(if neg { -v } else { v })
    }
}

fn is_separator(c: char) -> bool {
    c.is_whitespace() || c == '.'
}

/// Parses a word for the given presentation and strand count.
pub fn parse_word(text: &str, monoid: MonoidKind, n: usize) -> Result<WordExpr> {
    let mut lx = Lexer {
        chars: text.chars().collect(),
        pos: 0,
    };
    let bkl = match monoid {
        MonoidKind::Bkl => Some(BklMonoid::new(n)?),
        MonoidKind::Artin => None,
    };
    let mut tokens = Vec::new();
    loop {
        while lx.peek().is_some_and(is_separator) {
            lx.pos += 1;
        }
        let Some(c) = lx.peek() else { break };
        let column = lx.column();
        let letter = match c.to_ascii_lowercase() {
            's' if monoid == MonoidKind::Artin => {
                lx.pos += 1;
                let k = lx.number()?;
                if k < 1 || k as usize >= n {
                    return Err(Error::IndexOutOfRange {
                        column,
                        token: lx.chars[column - 1..lx.pos].iter().collect(),
                    });
                }
                Some(Letter::Atom(k as usize - 1))
            }
            'a' if monoid == MonoidKind::Bkl => {
                lx.pos += 1;
                lx.expect('(')?;
                lx.skip_spaces();
                let t = lx.number()?;
                lx.expect(',')?;
                lx.skip_spaces();
                let s = lx.number()?;
                lx.expect(')')?;
                let bkl = bkl.as_ref().expect("bkl structure");
                let id = (t >= 1 && s >= 1)
                    .then(|| bkl.atom_index(t as usize, s as usize))
                    .flatten();
                match id {
                    Some(id) => Some(Letter::Atom(id)),
                    None => {
                        return Err(Error::IndexOutOfRange {
                            column,
                            token: lx.chars[column - 1..lx.pos].iter().collect(),
                        })
                    }
                }
            }
            'd' => {
                lx.pos += 1;
                Some(Letter::Delta)
            }
            '1' => {
                lx.pos += 1;
                None
            }
            _ => return lx.error(format!("unexpected `{c}`")),
        };
        let mut exponent = 1;
        if lx.peek() == Some('^') {
            lx.pos += 1;
            exponent = lx.signed()?;
            if exponent == 0 {
                return Err(Error::ZeroExponent { column });
            }
        }
        if lx.peek().is_some_and(|c| !is_separator(c)) {
            return lx.error("expected a separator");
        }
        if let Some(letter) = letter {
            tokens.push(WordToken {
                letter,
                exponent,
                column,
            });
        }
    }
    Ok(WordExpr { monoid, n, tokens })
}

/// Evaluates a word in a structure matching its presentation and strand
/// count. The running product is normalized after every token.
pub fn evaluate<G: Garside + ?Sized>(g: &G, w: &WordExpr) -> Result<GroupElement<G::Simple>> {
    if g.name() != w.monoid.name() || g.strands() != w.n {
        return Err(Error::StructureMismatch);
    }
    let mut acc = GroupElement::identity();
    for tok in &w.tokens {
        match tok.letter {
            Letter::Delta => acc = g.multiply(&acc, &GroupElement::delta_power(tok.exponent)),
            Letter::Atom(x) => {
                let atom = g.atom(x);
                let step = if tok.exponent > 0 {
                    g.simple_element(&atom)
                } else {
                    // x⁻¹ = ∂x·Δ⁻¹
                    g.from_tokens(&[Token::Simple(g.right_complement(&atom)), Token::Delta(-1)])
                };
                for _ in 0..tok.exponent.unsigned_abs() {
                    acc = g.multiply(&acc, &step);
                }
            }
        }
    }
    Ok(acc)
}

/// Parses and evaluates in one step.
pub fn parse_element<G: Garside + ?Sized>(g: &G, text: &str) -> Result<GroupElement<G::Simple>> {
    let kind = MonoidKind::from_str(g.name()).map_err(|_| Error::StructureMismatch)?;
    evaluate(g, &parse_word(text, kind, g.strands())?)
}

/// Prints `D^p` followed by the atoms of the normal factors, with runs of
/// equal atoms collapsed into powers: `D^-1 s1^3 s2`. The identity prints
/// as `1`.
pub fn format_element<G: Garside + ?Sized>(g: &G, e: &GroupElement<G::Simple>) -> String {
    let (p, atoms) = g.atom_word(e);
    let mut parts = Vec::new();
    match p {
        0 => {}
        1 => parts.push("D".to_string()),
        p => parts.push(format!("D^{p}")),
    }
    let mut i = 0;
    while i < atoms.len() {
        let run = atoms[i..].iter().take_while(|&&x| x == atoms[i]).count();
        let tok = g.atom_token(atoms[i]);
        parts.push(if run == 1 { tok } else { format!("{tok}^{run}") });
        i += run;
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

/// Rewrites a band-generator word as an Artin-generator word for the same
/// braid. Every token of the result has exponent `±1`.
pub fn band_to_artin(w: &WordExpr) -> Result<WordExpr> {
    if w.monoid != MonoidKind::Bkl {
        return Err(Error::StructureMismatch);
    }
    let bkl = BklMonoid::new(w.n)?;
    let n = w.n;
    let mut tokens = Vec::new();
    let mut emit = |letters: &[(usize, i64)], exponent: i64, column: usize| {
        for _ in 0..exponent.unsigned_abs() {
            let mut seq: Vec<(usize, i64)> = letters.to_vec();
            if exponent < 0 {
                seq.reverse();
                seq.iter_mut().for_each(|l| l.1 = -l.1);
            }
            tokens.extend(seq.into_iter().map(|(k, e)| WordToken {
                letter: Letter::Atom(k - 1),
                exponent: e,
                column,
            }));
        }
    };
    for tok in &w.tokens {
        match tok.letter {
            Letter::Atom(x) => {
                let (t, s) = bkl.atom_pair(x);
                emit(&band_generator_in_artin(t, s), tok.exponent, tok.column);
            }
            Letter::Delta => {
                // δ = a(n,n-1)⋯a(2,1) = σ_{n-1}⋯σ_1
                let delta: Vec<(usize, i64)> = (1..n).rev().map(|k| (k, 1)).collect();
                emit(&delta, tok.exponent, tok.column);
            }
        }
    }
    Ok(WordExpr {
        monoid: MonoidKind::Artin,
        n,
        tokens,
    })
}

impl fmt::Display for WordExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bkl = (self.monoid == MonoidKind::Bkl).then(|| BklMonoid::new(self.n).ok()).flatten();
        let parts: Vec<String> = self
            .tokens
            .iter()
            .map(|t| {
                let base = match (t.letter, &bkl) {
                    (Letter::Delta, _) => "D".to_string(),
                    (Letter::Atom(x), Some(b)) => b.atom_token(x),
                    (Letter::Atom(x), None) => format!("s{}", x + 1),
                };
                if t.exponent == 1 {
                    base
                } else {
                    format!("{base}^{}", t.exponent)
                }
            })
            .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}
