use std::collections::HashMap;

use super::{RangeMin, SreRecord, SuffixIndex};
use crate::text::Text;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeChild {
    Internal(usize),
    /// A single suffix, by 0-based rank.
    Leaf(usize),
}

/// Internal node of the suffix tree: a maximal LCP interval `[lb..=rb]` of ranks.
#[derive(Debug, Clone)]
pub struct TreeNode {
    pub lb: usize,
    pub rb: usize,
    pub depth: usize,
    pub parent: Option<usize>,
    /// Ordered by the first character below this node.
    pub children: Vec<TreeChild>,
    /// 1-based leftmost start among the suffixes in the interval.
    pub min_start: usize,
    pub suffix_link: Option<usize>,
}

/// Branching nodes of the suffix tree, derived from the suffix and LCP arrays.
#[derive(Debug, Clone)]
pub struct TreeView {
    pub nodes: Vec<TreeNode>,
    pub root: usize,
}

impl TreeView {
    pub fn build(idx: &SuffixIndex) -> Self {
        let n = idx.len();
        let (sa, lcp) = (idx.sa(), idx.lcp());
        struct Frame {
            depth: usize,
            lb: usize,
            first_child: usize,
        }
        let mut nodes: Vec<TreeNode> = Vec::new();
        let mut frames = vec![Frame {
            depth: 0,
            lb: 0,
            first_child: 0,
        }];
        let mut pending: Vec<TreeChild> = Vec::new();
        let min_start = |nodes: &[TreeNode], c: TreeChild| match c {
            TreeChild::Internal(id) => nodes[id].min_start,
            TreeChild::Leaf(r) => sa[r] as usize + 1,
        };

        for r in 0..n {
            let mut last = TreeChild::Leaf(r);
            let next_lcp = if r + 1 < n { lcp[r + 1] as i64 } else { -1 };
            while let Some(top) = frames.last() {
                if top.depth as i64 <= next_lcp {
                    break;
                }
                let frame = frames.pop().unwrap();
                pending.push(last);
                let children: Vec<TreeChild> = pending.drain(frame.first_child..).collect();
                let id = nodes.len();
                let ms = children
                    .iter()
                    .map(|&c| min_start(&nodes, c))
                    .min()
                    .unwrap();
                for &c in &children {
                    if let TreeChild::Internal(cid) = c {
                        nodes[cid].parent = Some(id);
                    }
                }
                nodes.push(TreeNode {
                    lb: frame.lb,
                    rb: r,
                    depth: frame.depth,
                    parent: None,
                    children,
                    min_start: ms,
                    suffix_link: None,
                });
                last = TreeChild::Internal(id);
            }
            if frames.is_empty() {
                break;
            }
            let top = frames.last().unwrap();
            if (top.depth as i64) < next_lcp {
                let lb = match last {
                    TreeChild::Internal(id) => nodes[id].lb,
                    TreeChild::Leaf(r) => r,
                };
                frames.push(Frame {
                    depth: next_lcp as usize,
                    lb,
                    first_child: pending.len(),
                });
            }
            pending.push(last);
        }
        let root = nodes.len() - 1;

        let mut view = Self { nodes, root };
        view.link(idx);
        view
    }

    fn link(&mut self, idx: &SuffixIndex) {
        let n = idx.len();
        let (sa, rank, lcp) = (idx.sa(), idx.ranks(), idx.lcp());
        let rmq = RangeMin::new(lcp);
        let by_interval: HashMap<(usize, usize), usize> = self
            .nodes
            .iter()
            .enumerate()
            .map(|(id, v)| ((v.lb, v.rb), id))
            .collect();
        for id in 0..self.nodes.len() {
            let v = &self.nodes[id];
            if v.depth == 0 {
                continue;
            }
            let target = v.depth - 1;
            if target == 0 {
                self.nodes[id].suffix_link = Some(self.root);
                continue;
            }
            let p = rank[sa[v.lb] as usize + 1] as usize;
            let q = rank[sa[v.rb] as usize + 1] as usize;
            let (lo, hi) = (p.min(q), p.max(q));
            // widen [lo..hi] to the maximal range whose adjacent LCPs stay >= target
            let (mut a, mut b) = (0usize, lo);
            while a < b {
                let mid = (a + b) / 2;
                if rmq.min(mid + 1, lo) >= target as u32 {
                    b = mid;
                } else {
                    a = mid + 1;
                }
            }
            let left = a;
            let (mut a, mut b) = (hi, n - 1);
            while a < b {
                let mid = (a + b).div_ceil(2);
                if rmq.min(hi + 1, mid) >= target as u32 {
                    a = mid;
                } else {
                    b = mid - 1;
                }
            }
            let right = a;
            self.nodes[id].suffix_link = by_interval.get(&(left, right)).copied();
            debug_assert!(self.nodes[id].suffix_link.is_some());
        }
    }

    /// First character below `node` on the edge to `child`.
    pub fn child_char(&self, idx: &SuffixIndex, w: &Text, node: usize, child: TreeChild) -> u8 {
        let d = self.nodes[node].depth;
        let start = match child {
            TreeChild::Internal(id) => self.nodes[id].min_start,
            TreeChild::Leaf(r) => idx.suffix_at(r),
        };
        w.at(start + d)
    }

    /// 1-based leftmost start of a child's subtree.
    pub fn child_min_start(&self, idx: &SuffixIndex, child: TreeChild) -> usize {
        match child {
            TreeChild::Internal(id) => self.nodes[id].min_start,
            TreeChild::Leaf(r) => idx.suffix_at(r),
        }
    }
}

/// SREs read off the suffix-link tree: `xc` with `x` a branching node is
/// super-maximal iff no node linking to `x` also branches on `c`.
pub fn sre_via_suffix_links(tree: &TreeView, idx: &SuffixIndex, w: &Text) -> Vec<SreRecord> {
    let mut branch_sets: Vec<[bool; 256]> = vec![[false; 256]; tree.nodes.len()];
    for (id, v) in tree.nodes.iter().enumerate() {
        for &c in &v.children {
            branch_sets[id][tree.child_char(idx, w, id, c) as usize] = true;
        }
    }
    let mut covered: Vec<[bool; 256]> = vec![[false; 256]; tree.nodes.len()];
    for (id, v) in tree.nodes.iter().enumerate() {
        if let Some(u) = v.suffix_link {
            for c in 0..256 {
                covered[u][c] |= branch_sets[id][c];
            }
        }
    }
    let mut out = Vec::new();
    for (id, v) in tree.nodes.iter().enumerate() {
        if v.children.len() < 2 {
            continue;
        }
        for &child in &v.children {
            let c = tree.child_char(idx, w, id, child);
            if !covered[id][c as usize] {
                let ext_pos = tree.child_min_start(idx, child) + v.depth;
                out.push(SreRecord {
                    ext_pos,
                    x_len: v.depth,
                    ext_char: c,
                    anchor_pos: ext_pos - 1,
                });
            }
        }
    }
    out.sort_unstable();
    out
}
