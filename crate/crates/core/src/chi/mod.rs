//! Compression of a text into a substring equation system whose size is
//! bounded by the number of super-maximal right extensions.
//!
//! Pipeline: SREs of `w`, a compacted trie over their reversed bodies, one
//! equation per consecutive pair of trie entries (DFS order) sharing a
//! nonempty common suffix, and one pin per distinct byte at its leftmost
//! position.

mod trie;

use std::collections::HashSet;

pub use trie::{
    build_reverse_trie, plan_emission, EmissionPlan, EntryPair, ReverseCompactedTrie, TrieNode,
};

use crate::error::{Error, Result};
use crate::ses::{solve, Equation, Partition, Pin, Ses, Verdict, DEFAULT_ALPHABET_SIZE};
use crate::suffix::{compute_sre, SuffixIndex};
use crate::text::{Text, SENTINEL};

/// Largest raw input accepted by [`compress`].
pub const MAX_RAW_LEN: usize = (1 << 31) - 2;

/// Emits the system for `w` from its trie.
pub fn emit_ses(trie: &ReverseCompactedTrie, w: &Text) -> Ses {
    let plan = plan_emission(trie);
    let eq = plan
        .pairs
        .iter()
        .filter(|p| p.lca_depth >= 1)
        .map(|p| {
            let d = p.lca_depth;
            Equation {
                i: p.first_anchor + 1 - d,
                j: p.second_anchor + 1 - d,
                len: d,
            }
        })
        .collect();
    let ch = w
        .first_occurrences()
        .into_iter()
        .map(|(pos, byte)| Pin { pos, byte })
        .collect();
    Ses { n: w.len(), eq, ch }
}

/// A compressed text together with the measures computed along the way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Compressed {
    pub raw_len: usize,
    pub ses: Ses,
    /// Number of super-maximal right extensions of the terminated text.
    pub chi: usize,
    /// Distinct bytes of the terminated text.
    pub sigma: usize,
}

pub fn compress_text(w: &Text) -> Compressed {
    let idx = SuffixIndex::build(w);
    let records = compute_sre(&idx, w);
    drop(idx);
    let trie = build_reverse_trie(&records, w);
    let ses = emit_ses(&trie, w);
    Compressed {
        raw_len: w.raw_len(),
        chi: records.len(),
        sigma: w.alphabet().sigma(),
        ses,
    }
}

pub fn compress(raw: &[u8]) -> Result<Compressed> {
    if raw.len() > MAX_RAW_LEN {
        return Err(Error::TooLarge {
            len: raw.len(),
            limit: MAX_RAW_LEN,
        });
    }
    Ok(compress_text(&Text::attach_sentinel(raw)?))
}

/// Solves `sys` and strips the sentinel.
///
/// Besides uniqueness, checks everything [`compress`] guarantees about its
/// output: `n = raw_len + 1`, a lone trailing sentinel, and exactly one pin
/// per distinct byte.
pub fn decompress(sys: &Ses, raw_len: usize) -> Result<Vec<u8>> {
    sys.validate()?;
    if sys.n != raw_len + 1 {
        return Err(Error::Corrupted(format!(
            "length mismatch: n = {} but raw length is {}",
            sys.n, raw_len
        )));
    }
    let solution = solve(sys, DEFAULT_ALPHABET_SIZE)?;
    let mut text = match solution.verdict {
        Verdict::Unique(t) => t,
        Verdict::Unsat { first, second } => {
            return Err(Error::Corrupted(format!(
                "pins at positions {first} and {second} conflict"
            )))
        }
        Verdict::Ambiguous { free_pos } => {
            return Err(Error::Corrupted(format!(
                "position {free_pos} is undetermined"
            )))
        }
    };
    if text.pop() != Some(SENTINEL) {
        return Err(Error::Corrupted("missing trailing sentinel".into()));
    }
    if let Some(offset) = text.iter().position(|&b| b == SENTINEL) {
        return Err(Error::Corrupted(format!("sentinel at offset {offset}")));
    }
    let pinned: HashSet<u8> = sys.ch.iter().map(|p| p.byte).collect();
    let mut present = [false; 256];
    present[SENTINEL as usize] = true;
    for &b in &text {
        present[b as usize] = true;
    }
    let distinct = present.iter().filter(|&&p| p).count();
    if pinned.len() != sys.ch.len() || pinned.len() != distinct {
        return Err(Error::Corrupted(format!(
            "{} pins for {} distinct bytes",
            sys.ch.len(),
            distinct
        )));
    }
    Ok(text)
}

/// Position classes induced by the emitted system; they coincide with the
/// classes of equal characters.
pub fn position_equivalence_classes(w: &Text) -> Partition {
    let sys = compress_text(w).ses;
    solve(&sys, DEFAULT_ALPHABET_SIZE)
        .expect("emitted systems are well formed")
        .classes
}
