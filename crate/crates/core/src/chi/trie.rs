use crate::suffix::{RangeMin, SreRecord, SuffixIndex};
use crate::text::{Text, SENTINEL};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrieNode {
    pub parent: Option<usize>,
    pub edge_len: usize,
    pub string_depth: usize,
    /// Ascending by first byte of the edge label.
    pub children: Vec<usize>,
    /// SREs `xc` whose reversed body `x^R` spells this node, ascending by `c`.
    pub entries: Vec<SreRecord>,
    /// End of an occurrence of the node's reversed path string in `w`.
    pub witness_anchor: usize,
}

/// Compacted trie of `{ x^R : xc an SRE, |x| >= 1 }`; node 0 is the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReverseCompactedTrie {
    pub nodes: Vec<TrieNode>,
}

impl ReverseCompactedTrie {
    pub const ROOT: usize = 0;

    pub fn entry_count(&self) -> usize {
        self.nodes.iter().map(|v| v.entries.len()).sum()
    }

    /// Path string of `node` read from the root, i.e. `x^R`.
    pub fn path_string(&self, node: usize, w: &Text) -> Vec<u8> {
        let v = &self.nodes[node];
        let mut s = w
            .substring(v.witness_anchor + 1 - v.string_depth, v.string_depth)
            .to_vec();
        s.reverse();
        s
    }
}

/// Reverse of the raw text followed by the sentinel.
fn reversed_text(w: &Text) -> Vec<u8> {
    let mut rev: Vec<u8> = w.raw().iter().rev().copied().collect();
    rev.push(SENTINEL);
    rev
}

struct Locus {
    record: SreRecord,
    rank: usize,
    /// Left end of the suffix-array interval of `x^R` in the reversed text.
    interval_lb: usize,
}

/// Builds the trie by locating every `x^R` in the suffix array of the
/// reversed text: sorting loci by (interval start, depth) gives the trie's
/// preorder, and range-minimum LCPs give the branching depths.
pub fn build_reverse_trie(records: &[SreRecord], w: &Text) -> ReverseCompactedTrie {
    let mut nodes = vec![TrieNode {
        parent: None,
        edge_len: 0,
        string_depth: 0,
        children: Vec::new(),
        entries: Vec::new(),
        witness_anchor: 0,
    }];
    let with_body: Vec<SreRecord> = records.iter().copied().filter(|r| r.x_len >= 1).collect();
    if with_body.is_empty() {
        return ReverseCompactedTrie { nodes };
    }

    let n = w.len();
    let rev = SuffixIndex::from_bytes(&reversed_text(w));
    let rmq = RangeMin::new(rev.lcp());
    // common prefix length of the reversed-text suffixes at two ranks
    let lcp_between = |a: usize, b: usize| -> usize {
        if a == b {
            usize::MAX
        } else {
            rmq.min(a.min(b) + 1, a.max(b)) as usize
        }
    };

    let mut loci: Vec<Locus> = with_body
        .into_iter()
        .map(|record| {
            // w[anchor] is rev[n - anchor] (1-based), so x^R starts there
            let rank = rev.ranks()[n - record.anchor_pos - 1] as usize;
            let d = record.x_len as u32;
            let (mut lo, mut hi) = (0usize, rank);
            while lo < hi {
                let mid = (lo + hi) / 2;
                if rmq.min(mid + 1, rank) >= d {
                    hi = mid;
                } else {
                    lo = mid + 1;
                }
            }
            Locus {
                record,
                rank,
                interval_lb: lo,
            }
        })
        .collect();
    loci.sort_unstable_by_key(|l| (l.interval_lb, l.record.x_len, l.record.ext_char));

    let mut stack = vec![ReverseCompactedTrie::ROOT];
    for (k, locus) in loci.iter().enumerate() {
        let depth = locus.record.x_len;
        let shared = if k == 0 {
            0
        } else {
            let prev = &loci[k - 1];
            lcp_between(prev.rank, locus.rank)
                .min(prev.record.x_len)
                .min(depth)
        };

        let mut last = None;
        while nodes[*stack.last().unwrap()].string_depth > shared {
            last = stack.pop();
        }
        let top = *stack.last().unwrap();
        if nodes[top].string_depth < shared {
            let below = last.expect("a deeper node was popped");
            let mid = nodes.len();
            nodes.push(TrieNode {
                parent: Some(top),
                edge_len: 0,
                string_depth: shared,
                children: vec![below],
                entries: Vec::new(),
                witness_anchor: nodes[below].witness_anchor,
            });
            *nodes[top].children.last_mut().unwrap() = mid;
            nodes[below].parent = Some(mid);
            stack.push(mid);
        }

        let top = *stack.last().unwrap();
        if nodes[top].string_depth == depth {
            nodes[top].entries.push(locus.record);
        } else {
            let leaf = nodes.len();
            nodes.push(TrieNode {
                parent: Some(top),
                edge_len: 0,
                string_depth: depth,
                children: Vec::new(),
                entries: vec![locus.record],
                witness_anchor: locus.record.anchor_pos,
            });
            nodes[top].children.push(leaf);
            stack.push(leaf);
        }
    }

    for id in 1..nodes.len() {
        let parent = nodes[id].parent.unwrap();
        nodes[id].edge_len = nodes[id].string_depth - nodes[parent].string_depth;
    }
    ReverseCompactedTrie { nodes }
}

/// Consecutive DFS entries and the string depth of their lowest common ancestor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EntryPair {
    pub lca_depth: usize,
    pub first_anchor: usize,
    pub second_anchor: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmissionPlan {
    pub dfs_list: Vec<SreRecord>,
    pub pairs: Vec<EntryPair>,
}

/// Preorder listing of entries (node entries before children, children in
/// stored order) with the LCA depth of each consecutive pair.
pub fn plan_emission(trie: &ReverseCompactedTrie) -> EmissionPlan {
    let mut dfs_list = Vec::with_capacity(trie.entry_count());
    let mut pairs = Vec::with_capacity(trie.entry_count().saturating_sub(1));
    // shallowest depth touched since the previous entry was listed
    let mut shallowest = usize::MAX;
    let mut prev: Option<usize> = None;

    // (node, next child index)
    let mut stack = vec![(ReverseCompactedTrie::ROOT, 0usize)];
    let mut entered = true;
    while let Some(&mut (node, ref mut next)) = stack.last_mut() {
        let v = &trie.nodes[node];
        if entered {
            shallowest = shallowest.min(v.string_depth);
            for e in &v.entries {
                if let Some(a) = prev {
                    pairs.push(EntryPair {
                        lca_depth: shallowest,
                        first_anchor: a,
                        second_anchor: e.anchor_pos,
                    });
                }
                dfs_list.push(*e);
                prev = Some(e.anchor_pos);
                shallowest = v.string_depth;
            }
        }
        if *next < v.children.len() {
            let child = v.children[*next];
            *next += 1;
            stack.push((child, 0));
            entered = true;
        } else {
            stack.pop();
            if let Some(&(parent, _)) = stack.last() {
                shallowest = shallowest.min(trie.nodes[parent].string_depth);
            }
            entered = false;
        }
    }
    EmissionPlan { dfs_list, pairs }
}
