//! Suffix array, LCP and the derived suffix-tree view of a [`Text`].

mod rmq;
mod sais;
mod sre;
mod stats;
mod tree;

pub use rmq::RangeMin;
pub use sais::{lcp_array, suffix_array_bytes};
pub use sre::{chi, compute_sre, smallest_suffixient_set, SreRecord};
pub use stats::{bwt, bwt_run_count, greedy_lz_count, longest_previous_factors, PreviousFactor};
pub use tree::{sre_via_suffix_links, TreeChild, TreeNode, TreeView};

use crate::text::Text;

/// Suffix array with its inverse and LCP array.
///
/// Stored 0-based for compactness; accessors taking or returning text
/// positions use the crate-wide 1-based convention.
#[derive(Debug, Clone)]
pub struct SuffixIndex {
    sa: Vec<u32>,
    rank: Vec<u32>,
    lcp: Vec<u32>,
}

impl SuffixIndex {
    pub fn build(w: &Text) -> Self {
        Self::from_bytes(w.as_bytes())
    }

    pub(crate) fn from_bytes(s: &[u8]) -> Self {
        let sa = suffix_array_bytes(s);
        let mut rank = vec![0u32; s.len()];
        for (r, &p) in sa.iter().enumerate() {
            rank[p as usize] = r as u32;
        }
        let lcp = lcp_array(s, &sa, &rank);
        Self { sa, rank, lcp }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.sa.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.sa.is_empty()
    }

    /// 0-based suffix starts in lexicographic order.
    #[inline]
    pub fn sa(&self) -> &[u32] {
        &self.sa
    }

    /// 0-based rank of each 0-based suffix start.
    #[inline]
    pub fn ranks(&self) -> &[u32] {
        &self.rank
    }

    /// `lcp()[r]` = longest common prefix of suffixes at ranks `r - 1` and `r`.
    #[inline]
    pub fn lcp(&self) -> &[u32] {
        &self.lcp
    }

    /// 1-based start of the suffix at 0-based rank `r`.
    #[inline]
    pub fn suffix_at(&self, r: usize) -> usize {
        self.sa[r] as usize + 1
    }

    /// 0-based rank of the suffix starting at 1-based `pos`.
    #[inline]
    pub fn rank_of(&self, pos: usize) -> usize {
        self.rank[pos - 1] as usize
    }

    /// Suffix array as 1-based positions.
    pub fn positions(&self) -> Vec<usize> {
        self.sa.iter().map(|&p| p as usize + 1).collect()
    }
}

pub fn build_index(w: &Text) -> SuffixIndex {
    SuffixIndex::build(w)
}
