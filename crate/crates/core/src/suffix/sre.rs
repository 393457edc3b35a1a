use std::collections::BTreeSet;

use super::SuffixIndex;
use crate::text::Text;

/// One super-maximal right extension `xc`, located by its leftmost occurrence
/// `w[ext_pos - x_len ..= ext_pos]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SreRecord {
    /// 1-based position of the extending character `c`.
    pub ext_pos: usize,
    /// `|x|`; zero for single-character extensions.
    pub x_len: usize,
    pub ext_char: u8,
    /// `ext_pos - 1`: last position of the body `x`.
    pub anchor_pos: usize,
}

impl SreRecord {
    /// 1-based start of the leftmost occurrence of `xc`.
    #[inline]
    pub fn start(&self) -> usize {
        self.ext_pos - self.x_len
    }

    /// The extension `xc` itself.
    pub fn extension<'a>(&self, w: &'a Text) -> &'a [u8] {
        w.substring(self.start(), self.x_len + 1)
    }

    /// The body `x`.
    pub fn body<'a>(&self, w: &'a Text) -> &'a [u8] {
        w.substring(self.start(), self.x_len)
    }
}

type CharSet = [u64; 4];

#[inline]
fn singleton(c: u8) -> CharSet {
    let mut s = [0u64; 4];
    s[(c >> 6) as usize] |= 1 << (c & 63);
    s
}

#[inline]
fn disjoint(a: &CharSet, b: &CharSet) -> bool {
    a.iter().zip(b).all(|(x, y)| x & y == 0)
}

/// Summary of a finished subtree: the set of characters preceding its
/// suffixes (BWT letters) and its leftmost suffix start.
#[derive(Clone, Copy)]
struct Subtree {
    preceding: CharSet,
    min_start: u32,
    lb: u32,
}

struct Frame {
    depth: u32,
    lb: u32,
    first_child: usize,
}

/// Super-maximal right extensions of `w`, sorted by `ext_pos`.
///
/// For a branching node `x` and a child on `c`, `xc` is a right extension;
/// it is super-maximal exactly when no `ax` is itself branching on `c`,
/// i.e. when no character precedes suffixes both in the `c` child and in a
/// sibling. One bottom-up pass over the LCP intervals with 256-bit sets of
/// preceding characters decides every child.
pub fn compute_sre(idx: &SuffixIndex, w: &Text) -> Vec<SreRecord> {
    let t = w.as_bytes();
    let n = t.len();
    let (sa, lcp) = (idx.sa(), idx.lcp());
    let preceding = |r: usize| {
        let p = sa[r] as usize;
        if p == 0 {
            t[n - 1]
        } else {
            t[p - 1]
        }
    };

    let mut out = Vec::new();
    let mut frames = vec![Frame {
        depth: 0,
        lb: 0,
        first_child: 0,
    }];
    let mut pending: Vec<Subtree> = Vec::new();

    for r in 0..n {
        let mut last = Subtree {
            preceding: singleton(preceding(r)),
            min_start: sa[r],
            lb: r as u32,
        };
        let next_lcp = if r + 1 < n { lcp[r + 1] as i64 } else { -1 };
        while let Some(top) = frames.last() {
            if top.depth as i64 <= next_lcp {
                break;
            }
            let frame = frames.pop().unwrap();
            pending.push(last);
            last = close_node(&frame, &pending[frame.first_child..], t, &mut out);
            pending.truncate(frame.first_child);
        }
        let Some(top) = frames.last() else { break };
        if (top.depth as i64) < next_lcp {
            frames.push(Frame {
                depth: next_lcp as u32,
                lb: last.lb,
                first_child: pending.len(),
            });
        }
        pending.push(last);
    }

    out.sort_unstable();
    out
}

fn close_node(frame: &Frame, children: &[Subtree], t: &[u8], out: &mut Vec<SreRecord>) -> Subtree {
    let mut once = [0u64; 4];
    let mut multi = [0u64; 4];
    for child in children {
        for k in 0..4 {
            multi[k] |= once[k] & child.preceding[k];
            once[k] |= child.preceding[k];
        }
    }
    // Only n = 1 produces a single-child root.
    if children.len() >= 2 {
        let d = frame.depth as usize;
        for child in children {
            if disjoint(&child.preceding, &multi) {
                let start = child.min_start as usize;
                out.push(SreRecord {
                    ext_pos: start + d + 1,
                    x_len: d,
                    ext_char: t[start + d],
                    anchor_pos: start + d,
                });
            }
        }
    }
    Subtree {
        preceding: once,
        min_start: children.iter().map(|c| c.min_start).min().unwrap(),
        lb: frame.lb,
    }
}

pub fn chi(w: &Text) -> usize {
    compute_sre(&SuffixIndex::build(w), w).len()
}

/// End positions of the leftmost SRE occurrences.
pub fn smallest_suffixient_set(w: &Text) -> BTreeSet<usize> {
    compute_sre(&SuffixIndex::build(w), w)
        .iter()
        .map(|r| r.ext_pos)
        .collect()
}
