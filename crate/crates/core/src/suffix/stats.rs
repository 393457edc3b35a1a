use super::SuffixIndex;
use crate::text::Text;

/// BWT letters in rank order; the suffix starting at position 1 wraps to `w[n]`.
pub fn bwt(idx: &SuffixIndex, w: &Text) -> Vec<u8> {
    let t = w.as_bytes();
    idx.sa()
        .iter()
        .map(|&p| {
            if p == 0 {
                t[t.len() - 1]
            } else {
                t[p as usize - 1]
            }
        })
        .collect()
}

/// Number of maximal runs of equal letters in the BWT.
pub fn bwt_run_count(idx: &SuffixIndex, w: &Text) -> usize {
    let b = bwt(idx, w);
    1 + b.windows(2).filter(|p| p[0] != p[1]).count()
}

/// Longest factor starting at a position that also starts strictly earlier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PreviousFactor {
    pub len: usize,
    /// 1-based earlier start; meaningless when `len == 0`.
    pub src: usize,
}

/// Longest previous factor of every position, via previous/next smaller
/// suffix-array values and the LCP array. Entry `i - 1` describes position `i`.
pub fn longest_previous_factors(idx: &SuffixIndex) -> Vec<PreviousFactor> {
    let n = idx.len();
    let (sa, lcp) = (idx.sa(), idx.lcp());
    let mut out = vec![PreviousFactor { len: 0, src: 0 }; n];

    // (rank, lcp with the element below it on the stack)
    let mut stack: Vec<(usize, u32)> = Vec::new();
    let best = |out: &mut [PreviousFactor], r: usize, other: usize, h: u32| {
        let e = &mut out[sa[r] as usize];
        let src = sa[other] as usize + 1;
        if (h as usize) > e.len || (h as usize == e.len && h > 0 && src < e.src) {
            *e = PreviousFactor {
                len: h as usize,
                src,
            };
        }
    };

    for r in 0..n {
        let mut h = lcp[r];
        while let Some(&(top, below)) = stack.last() {
            if sa[top] < sa[r] {
                break;
            }
            stack.pop();
            h = h.min(below);
        }
        match stack.last() {
            Some(&(p, _)) => {
                best(&mut out, r, p, h);
                stack.push((r, h));
            }
            None => stack.push((r, 0)),
        }
    }
    stack.clear();
    for r in (0..n).rev() {
        let mut h = if r + 1 < n { lcp[r + 1] } else { 0 };
        while let Some(&(top, below)) = stack.last() {
            if sa[top] < sa[r] {
                break;
            }
            stack.pop();
            h = h.min(below);
        }
        match stack.last() {
            Some(&(p, _)) => {
                best(&mut out, r, p, h);
                stack.push((r, h));
            }
            None => stack.push((r, 0)),
        }
    }
    out
}

/// Factor count of the greedy parse where each factor is the longest prefix of
/// the remainder that also starts earlier (overlap allowed), else one literal.
pub fn greedy_lz_count(w: &Text) -> usize {
    let lpf = longest_previous_factors(&SuffixIndex::build(w));
    let mut i = 0;
    let mut count = 0;
    while i < lpf.len() {
        i += lpf[i].len.max(1);
        count += 1;
    }
    count
}
