use super::{check_alphabet, DisjointSets, Partition, Ses, Solution, Verdict};
use crate::error::Result;

/// Decides satisfiability and uniqueness of `sys` over an alphabet of
/// `alphabet_size` symbols.
///
/// Equations are split into two overlapping power-of-two blocks and merged in
/// one union-find per block width. Every non-root block of width `2^k` is then
/// pushed down as two `2^(k-1)` merges with its representative, so level 0
/// ends up holding the position partition. O((n + |Eq|) log n α(n)).
pub fn solve(sys: &Ses, alphabet_size: usize) -> Result<Solution> {
    sys.validate()?;
    check_alphabet(sys, alphabet_size)?;
    let n = sys.n;
    let top = (usize::BITS - 1 - n.leading_zeros()) as usize;

    let mut buckets: Vec<Vec<(u32, u32)>> = vec![Vec::new(); top + 1];
    for e in &sys.eq {
        if e.i == e.j {
            continue;
        }
        let k = (usize::BITS - 1 - e.len.leading_zeros()) as usize;
        let width = 1usize << k;
        let (i, j) = (e.i - 1, e.j - 1);
        buckets[k].push((i as u32, j as u32));
        if e.len != width {
            let shift = e.len - width;
            buckets[k].push(((i + shift) as u32, (j + shift) as u32));
        }
    }

    let mut carry: Vec<(u32, u32)> = Vec::new();
    for k in (1..=top).rev() {
        let mut pairs = std::mem::take(&mut buckets[k]);
        pairs.append(&mut carry);
        if pairs.is_empty() {
            continue;
        }
        let width = 1usize << k;
        let half = (width / 2) as u32;
        let mut ds = DisjointSets::new(n - width + 1);
        for (a, b) in pairs {
            ds.union(a as usize, b as usize);
        }
        for p in 0..ds.len() {
            let r = ds.find(p);
            if r != p {
                carry.push((p as u32, r as u32));
                carry.push((p as u32 + half, r as u32 + half));
            }
        }
    }

    let mut ds = DisjointSets::new(n);
    for (a, b) in buckets[0].drain(..).chain(carry.drain(..)) {
        ds.union(a as usize, b as usize);
    }
    let roots: Vec<usize> = (0..n).map(|p| ds.find(p)).collect();
    let classes = Partition::from_class_ids(&roots);

    Ok(Solution {
        verdict: decide(sys, &classes, alphabet_size),
        classes,
    })
}

fn decide(sys: &Ses, classes: &Partition, alphabet_size: usize) -> Verdict {
    let n = sys.n;
    let mut pins = sys.ch.clone();
    pins.sort_unstable();

    // first (smallest) pin of each class, indexed by label - 1
    let mut first: Vec<Option<(usize, u8)>> = vec![None; n];
    let mut conflicted = vec![false; n];
    let mut conflict: Option<(usize, usize)> = None;
    for p in &pins {
        let l = classes.label(p.pos) - 1;
        match first[l] {
            None => first[l] = Some((p.pos, p.byte)),
            Some((fp, fb)) if fb != p.byte && !conflicted[l] => {
                conflicted[l] = true;
                let cand = (fp, p.pos);
                if conflict.is_none_or(|c| cand < c) {
                    conflict = Some(cand);
                }
            }
            Some(_) => {}
        }
    }
    if let Some((first, second)) = conflict {
        return Verdict::Unsat { first, second };
    }

    let fill = pins.first().map_or(0, |p| p.byte);
    let mut text = Vec::with_capacity(n);
    for pos in 1..=n {
        match first[classes.label(pos) - 1] {
            Some((_, b)) => text.push(b),
            None if alphabet_size >= 2 => return Verdict::Ambiguous { free_pos: pos },
            None => text.push(fill),
        }
    }
    Verdict::Unique(text)
}
