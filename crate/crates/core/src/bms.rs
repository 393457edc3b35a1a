//! Bidirectional macro schemes and their conversion to equation systems.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ses::{Equation, Pin, Ses};
use crate::suffix::{longest_previous_factors, SuffixIndex};
use crate::text::Text;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phrase {
    Literal(u8),
    /// Copy of `w[src..src+len-1]`, 1-based.
    Copy {
        src: usize,
        len: usize,
    },
}

impl Phrase {
    #[inline]
    pub fn len(&self) -> usize {
        match *self {
            Phrase::Literal(_) => 1,
            Phrase::Copy { len, .. } => len,
        }
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bms {
    pub n: usize,
    pub phrases: Vec<Phrase>,
}

/// `tau[i - 1]` is where position `i` copies from, `None` for literals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionFn {
    pub tau: Vec<Option<usize>>,
}

impl Bms {
    pub fn new(phrases: Vec<Phrase>) -> Self {
        let n = phrases.iter().map(Phrase::len).sum();
        Self { n, phrases }
    }

    /// 1-based start of every phrase.
    pub fn starts(&self) -> Vec<usize> {
        let mut at = 1;
        self.phrases
            .iter()
            .map(|p| {
                let s = at;
                at += p.len();
                s
            })
            .collect()
    }

    pub fn check_structure(&self) -> Result<()> {
        let total: usize = self.phrases.iter().map(Phrase::len).sum();
        if total != self.n {
            return Err(Error::Inconsistent(format!(
                "phrase lengths sum to {total}, expected {}",
                self.n
            )));
        }
        for (k, p) in self.phrases.iter().enumerate() {
            if let Phrase::Copy { src, len } = *p {
                if len == 0 || src == 0 || src + len - 1 > self.n {
                    return Err(Error::Inconsistent(format!(
                        "phrase #{} copies ({src}, {len}) outside [1..{}]",
                        k + 1,
                        self.n
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn transition(&self) -> TransitionFn {
        let mut tau = Vec::with_capacity(self.n);
        for p in &self.phrases {
            match *p {
                Phrase::Literal(_) => tau.push(None),
                Phrase::Copy { src, len } => tau.extend((0..len).map(|q| Some(src + q))),
            }
        }
        TransitionFn { tau }
    }
}

/// Ok iff iterating the transition function from every position reaches a literal.
pub fn validate_bms(b: &Bms) -> Result<()> {
    b.check_structure()?;
    let tau = b.transition().tau;
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        White,
        Grey,
        Black,
    }
    let mut mark = vec![Mark::White; b.n];
    let mut path = Vec::new();
    for start in 0..b.n {
        let mut cur = start;
        while mark[cur] == Mark::White {
            mark[cur] = Mark::Grey;
            path.push(cur);
            match tau[cur] {
                Some(next) => cur = next - 1,
                None => break,
            }
        }
        if mark[cur] == Mark::Grey && tau[cur].is_some() {
            return Err(Error::InvalidScheme { pos: cur + 1 });
        }
        for p in path.drain(..) {
            mark[p] = Mark::Black;
        }
    }
    Ok(())
}

/// Literal `c` at `a` becomes the pin `(a, c)`; a copy `(p, l)` at `a`
/// becomes the equation `(a, p, l)`. The result has one constraint per phrase.
pub fn bms_to_ses(b: &Bms, w: &Text) -> Result<Ses> {
    validate_bms(b)?;
    if b.n != w.len() {
        return Err(Error::Inconsistent(format!(
            "scheme covers {} positions, text has {}",
            b.n,
            w.len()
        )));
    }
    let mut sys = Ses::new(b.n);
    for (p, a) in b.phrases.iter().zip(b.starts()) {
        match *p {
            Phrase::Literal(c) => {
                if w.at(a) != c {
                    return Err(Error::Inconsistent(format!(
                        "literal {c} at position {a} but the text holds {}",
                        w.at(a)
                    )));
                }
                sys.ch.push(Pin { pos: a, byte: c });
            }
            Phrase::Copy { src, len } => {
                if w.substring(a, len) != w.substring(src, len) {
                    return Err(Error::Inconsistent(format!(
                        "phrase at {a} differs from its source ({src}, {len})"
                    )));
                }
                sys.eq.push(Equation { i: a, j: src, len });
            }
        }
    }
    Ok(sys)
}

/// Greedy parse into longest previous factors; every pointer goes strictly left.
pub fn greedy_left_bms(w: &Text) -> Bms {
    let lpf = longest_previous_factors(&SuffixIndex::build(w));
    let mut phrases = Vec::new();
    let mut i = 0;
    while i < lpf.len() {
        let f = lpf[i];
        if f.len == 0 {
            phrases.push(Phrase::Literal(w.as_bytes()[i]));
            i += 1;
        } else {
            phrases.push(Phrase::Copy {
                src: f.src,
                len: f.len,
            });
            i += f.len;
        }
    }
    Bms::new(phrases)
}

/// One phrase per line: `L <byte>` or `C <src> <len>`.
pub fn render_bms(b: &Bms) -> String {
    let mut out = String::new();
    for p in &b.phrases {
        match *p {
            Phrase::Literal(c) => writeln!(out, "L {c}").unwrap(),
            Phrase::Copy { src, len } => writeln!(out, "C {src} {len}").unwrap(),
        }
    }
    out
}

pub fn parse_bms(s: &str) -> Result<Bms> {
    let bad = |line: usize, msg: &str| Error::Inconsistent(format!("line {line}: {msg}"));
    let mut phrases = Vec::new();
    for (k, line) in s.lines().enumerate() {
        let fields: Vec<&str> = line.split(' ').collect();
        let num = |f: &str| f.parse::<usize>().map_err(|_| bad(k + 1, "not a number"));
        match fields.as_slice() {
            ["L", c] => {
                let c = c
                    .parse::<u8>()
                    .map_err(|_| bad(k + 1, "byte out of range"))?;
                phrases.push(Phrase::Literal(c));
            }
            ["C", src, len] => phrases.push(Phrase::Copy {
                src: num(src)?,
                len: num(len)?,
            }),
            _ => return Err(bad(k + 1, "expected `L <byte>` or `C <src> <len>`")),
        }
    }
    let b = Bms::new(phrases);
    b.check_structure()?;
    Ok(b)
}
