//! Substring equation systems: data model, validation, solving and size metrics.

mod solve;
mod union_find;

use std::collections::{BTreeSet, HashSet};

pub use solve::solve;
pub use union_find::DisjointSets;

use crate::error::{Error, Result};

pub const DEFAULT_ALPHABET_SIZE: usize = 256;

/// `w[i..i+len-1] = w[j..j+len-1]`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Equation {
    pub i: usize,
    pub j: usize,
    pub len: usize,
}

/// `w[pos] = byte`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pin {
    pub pos: usize,
    pub byte: u8,
}

/// A system `(n, Eq, Ch)` over an unknown string of length `n`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Ses {
    pub n: usize,
    pub eq: Vec<Equation>,
    pub ch: Vec<Pin>,
}

impl Ses {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            eq: Vec::new(),
            ch: Vec::new(),
        }
    }

    /// The system pinning every position of `text`.
    pub fn all_literal(text: &[u8]) -> Self {
        Self {
            n: text.len(),
            eq: Vec::new(),
            ch: text
                .iter()
                .enumerate()
                .map(|(k, &byte)| Pin { pos: k + 1, byte })
                .collect(),
        }
    }

    /// `|Eq| + |Ch|`.
    pub fn size(&self) -> usize {
        self.eq.len() + self.ch.len()
    }

    /// `8|Eq| + |Ch|`.
    pub fn weighted_size(&self) -> usize {
        8 * self.eq.len() + self.ch.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        if n == 0 {
            return Err(Error::MalformedSystem("n must be at least 1".into()));
        }
        for (idx, e) in self.eq.iter().enumerate() {
            let ok = (1..=n).contains(&e.i)
                && (1..=n).contains(&e.j)
                && e.len >= 1
                && e.len <= n - e.i.max(e.j) + 1;
            if !ok {
                return Err(Error::MalformedSystem(format!(
                    "equation #{} ({}, {}, {}) violates 1 <= l <= n - max(i, j) + 1 with n = {}",
                    idx + 1,
                    e.i,
                    e.j,
                    e.len,
                    n
                )));
            }
        }
        let mut seen = HashSet::with_capacity(self.ch.len());
        for (idx, p) in self.ch.iter().enumerate() {
            if !(1..=n).contains(&p.pos) {
                return Err(Error::MalformedSystem(format!(
                    "pin #{} at position {} is outside [1..{}]",
                    idx + 1,
                    p.pos,
                    n
                )));
            }
            if !seen.insert(*p) {
                return Err(Error::MalformedSystem(format!(
                    "pin #{} ({}, {}) is duplicated",
                    idx + 1,
                    p.pos,
                    p.byte
                )));
            }
        }
        Ok(())
    }

    /// Checks every constraint directly against `text`.
    pub fn is_satisfied_by(&self, text: &[u8]) -> bool {
        text.len() == self.n
            && self
                .eq
                .iter()
                .all(|e| text[e.i - 1..e.i - 1 + e.len] == text[e.j - 1..e.j - 1 + e.len])
            && self.ch.iter().all(|p| text[p.pos - 1] == p.byte)
    }
}

/// A partition of `[1..n]`; `label(p)` is the smallest position in `p`'s class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    labels: Vec<usize>,
}

impl Partition {
    /// Relabels arbitrary class ids into the canonical smallest-member form.
    pub fn from_class_ids<T: Copy + Eq + std::hash::Hash>(ids: &[T]) -> Self {
        let mut first = std::collections::HashMap::new();
        let labels = ids
            .iter()
            .enumerate()
            .map(|(k, id)| *first.entry(*id).or_insert(k + 1))
            .collect();
        Self { labels }
    }

    /// Positions grouped by the byte they hold.
    pub fn by_character(text: &[u8]) -> Self {
        Self::from_class_ids(text)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    #[inline]
    pub fn label(&self, pos: usize) -> usize {
        self.labels[pos - 1]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn class_count(&self) -> usize {
        self.labels
            .iter()
            .enumerate()
            .filter(|&(k, &l)| l == k + 1)
            .count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Two pins in one class disagree; `first <= second`.
    Unsat {
        first: usize,
        second: usize,
    },
    /// The class of `free_pos` carries no pin.
    Ambiguous {
        free_pos: usize,
    },
    Unique(Vec<u8>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub classes: Partition,
    pub verdict: Verdict,
}

impl Solution {
    pub fn unique_text(&self) -> Option<&[u8]> {
        match &self.verdict {
            Verdict::Unique(t) => Some(t),
            _ => None,
        }
    }

    pub fn into_text(self) -> Result<Vec<u8>> {
        match self.verdict {
            Verdict::Unique(t) => Ok(t),
            Verdict::Unsat { first, second } => Err(Error::NotRepresenting(format!(
                "pins at positions {first} and {second} conflict"
            ))),
            Verdict::Ambiguous { free_pos } => Err(Error::NotRepresenting(format!(
                "position {free_pos} is not determined"
            ))),
        }
    }
}

/// Checks the alphabet parameter against the pinned bytes.
pub(crate) fn check_alphabet(sys: &Ses, alphabet_size: usize) -> Result<()> {
    if !(1..=256).contains(&alphabet_size) {
        return Err(Error::MalformedSystem(format!(
            "alphabet size {alphabet_size} is outside [1..256]"
        )));
    }
    let distinct: BTreeSet<u8> = sys.ch.iter().map(|p| p.byte).collect();
    if distinct.len() > alphabet_size {
        return Err(Error::MalformedSystem(format!(
            "{} distinct pinned bytes exceed alphabet size {}",
            distinct.len(),
            alphabet_size
        )));
    }
    Ok(())
}

/// The unique string represented by `sys`.
pub fn reconstruct(sys: &Ses) -> Result<Vec<u8>> {
    solve(sys, DEFAULT_ALPHABET_SIZE)?.into_text()
}

/// Pinned positions plus the four endpoints of every equation.
///
/// Any system representing `w` yields a string attractor of `w` this way.
pub fn attractor_from_ses(sys: &Ses) -> Result<BTreeSet<usize>> {
    solve(sys, DEFAULT_ALPHABET_SIZE)?.into_text()?;
    let mut out: BTreeSet<usize> = sys.ch.iter().map(|p| p.pos).collect();
    for e in &sys.eq {
        out.extend([e.i, e.i + e.len - 1, e.j, e.j + e.len - 1]);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eq(i: usize, j: usize, len: usize) -> Equation {
        Equation { i, j, len }
    }

    fn pin(pos: usize, byte: u8) -> Pin {
        Pin { pos, byte }
    }

    #[test]
    fn validate_bounds() {
        let ok = Ses {
            n: 3,
            eq: vec![eq(1, 2, 2)],
            ch: vec![pin(1, b'a')],
        };
        assert!(ok.validate().is_ok());
        let bad = Ses {
            n: 3,
            eq: vec![eq(2, 3, 2)],
            ch: vec![],
        };
        assert!(matches!(bad.validate(), Err(Error::MalformedSystem(_))));
        assert!(matches!(
            Ses::new(0).validate(),
            Err(Error::MalformedSystem(_))
        ));
        let zero_len = Ses {
            n: 3,
            eq: vec![eq(1, 1, 0)],
            ch: vec![],
        };
        assert!(zero_len.validate().is_err());
        let pin_oob = Ses {
            n: 2,
            eq: vec![],
            ch: vec![pin(3, b'a')],
        };
        assert!(pin_oob.validate().is_err());
        let dup = Ses {
            n: 2,
            eq: vec![],
            ch: vec![pin(1, b'a'), pin(1, b'a')],
        };
        assert!(dup.validate().is_err());
        let clash = Ses {
            n: 2,
            eq: vec![],
            ch: vec![pin(1, b'a'), pin(1, b'b')],
        };
        assert!(clash.validate().is_ok());
    }

    #[test]
    fn sizes() {
        let sys = Ses {
            n: 10,
            eq: vec![eq(1, 2, 1), eq(2, 3, 1), eq(3, 4, 1)],
            ch: vec![pin(1, 1), pin(5, 2), pin(6, 3)],
        };
        assert_eq!(sys.size(), 6);
        assert_eq!(sys.weighted_size(), 27);
        let lit = Ses::all_literal(b"hello");
        assert_eq!(lit.size(), 5);
        assert_eq!(lit.weighted_size(), 5);
    }

    #[test]
    fn attractor_of_small_system() {
        let sys = Ses {
            n: 4,
            eq: vec![eq(1, 2, 3)],
            ch: vec![pin(1, b'a')],
        };
        assert_eq!(
            attractor_from_ses(&sys).unwrap(),
            BTreeSet::from([1, 2, 3, 4])
        );
        let open = Ses {
            n: 2,
            eq: vec![],
            ch: vec![pin(1, b'a')],
        };
        assert!(matches!(
            attractor_from_ses(&open),
            Err(Error::NotRepresenting(_))
        ));
        let lit = Ses::all_literal(b"abc");
        assert_eq!(attractor_from_ses(&lit).unwrap(), BTreeSet::from([1, 2, 3]));
    }

    #[test]
    fn reconstruct_single_pin() {
        let sys = Ses {
            n: 1,
            eq: vec![],
            ch: vec![pin(1, b'x')],
        };
        assert_eq!(reconstruct(&sys).unwrap(), b"x");
    }

    #[test]
    fn partition_labels() {
        let p = Partition::by_character(b"abab\x00");
        assert_eq!(p.labels(), &[1, 2, 1, 2, 5]);
        assert_eq!(p.class_count(), 3);
    }
}
