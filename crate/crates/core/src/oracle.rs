//! Brute-force reference implementations used as ground truth in tests.
//!
//! Everything here is quadratic or worse and refuses inputs above a small cap.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ses::{Equation, Partition, Pin, Ses, Solution, Verdict};
use crate::text::Text;

pub const MAX_EXTENSION_TEXT: usize = 2000;
pub const MAX_SOLVE_N: usize = 500;
pub const MAX_SOLVE_EQUATIONS: usize = 500;
pub const MAX_ATTRACTOR_TEXT: usize = 500;

/// Distinct substrings of a fixed text, each stored as its leftmost
/// occurrence `(start, len)` with a 1-based start.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StringSet {
    pub items: BTreeSet<(usize, usize)>,
}

impl StringSet {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn contents(&self, w: &Text) -> BTreeSet<Vec<u8>> {
        self.items
            .iter()
            .map(|&(s, l)| w.substring(s, l).to_vec())
            .collect()
    }
}

fn cap(len: usize, limit: usize) -> Result<()> {
    if len > limit {
        Err(Error::TooLarge { len, limit })
    } else {
        Ok(())
    }
}

/// All `xc` such that `xc'` also occurs for some `c' != c` (`x` may be empty).
pub fn naive_right_extensions(w: &Text) -> Result<StringSet> {
    cap(w.len(), MAX_EXTENSION_TEXT)?;
    let t = w.as_bytes();
    let n = t.len();
    // x -> (c -> leftmost start of xc)
    let mut followers: HashMap<&[u8], BTreeMap<u8, usize>> = HashMap::new();
    for start in 0..n {
        for end in start..n {
            followers
                .entry(&t[start..end])
                .or_default()
                .entry(t[end])
                .or_insert(start);
        }
    }
    let mut items = BTreeSet::new();
    for (x, next) in &followers {
        if next.len() >= 2 {
            for &start in next.values() {
                items.insert((start + 1, x.len() + 1));
            }
        }
    }
    Ok(StringSet { items })
}

/// Right extensions that are not a proper suffix of another right extension.
pub fn naive_sre(w: &Text) -> Result<StringSet> {
    let re = naive_right_extensions(w)?;
    let strings: Vec<(&(usize, usize), &[u8])> = re
        .items
        .iter()
        .map(|it| (it, w.substring(it.0, it.1)))
        .collect();
    let items = strings
        .iter()
        .filter(|(_, s)| {
            !strings
                .iter()
                .any(|(_, other)| other.len() > s.len() && other.ends_with(s))
        })
        .map(|(it, _)| **it)
        .collect();
    Ok(StringSet { items })
}

fn check_positions(n: usize, set: &BTreeSet<usize>) -> Result<()> {
    match set.iter().find(|&&p| p == 0 || p > n) {
        Some(&pos) => Err(Error::PositionOutOfBounds { pos, n }),
        None => Ok(()),
    }
}

/// Whether every right extension is a suffix of some `w[1..j]`, `j` in `set`.
pub fn verify_suffixient(w: &Text, set: &BTreeSet<usize>) -> Result<bool> {
    check_positions(w.len(), set)?;
    let re = naive_right_extensions(w)?;
    let t = w.as_bytes();
    Ok(re.items.iter().all(|&(s, l)| {
        let x = &t[s - 1..s - 1 + l];
        set.iter().any(|&j| t[..j].ends_with(x))
    }))
}

/// End positions of the leftmost occurrences of the SREs.
pub fn naive_smallest_suffixient(w: &Text) -> Result<BTreeSet<usize>> {
    Ok(naive_sre(w)?
        .items
        .iter()
        .map(|&(s, l)| s + l - 1)
        .collect())
}

/// Reference solver: expands equations into single-position identities,
/// takes connected components by breadth-first search, then inspects pins
/// pairwise.
pub fn naive_ses_solve(sys: &Ses, alphabet_size: usize) -> Result<Solution> {
    let n = sys.n;
    cap(n, MAX_SOLVE_N)?;
    cap(sys.eq.len(), MAX_SOLVE_EQUATIONS)?;
    if n == 0 {
        return Err(Error::MalformedSystem("empty system".into()));
    }
    for e in &sys.eq {
        if e.i < 1 || e.j < 1 || e.len < 1 || e.i.max(e.j) + e.len - 1 > n {
            return Err(Error::MalformedSystem(format!("{e:?}")));
        }
    }
    let mut seen_pins = HashSet::new();
    for p in &sys.ch {
        if p.pos < 1 || p.pos > n || !seen_pins.insert(*p) {
            return Err(Error::MalformedSystem(format!("{p:?}")));
        }
    }
    let distinct: HashSet<u8> = sys.ch.iter().map(|p| p.byte).collect();
    if alphabet_size == 0 || alphabet_size > 256 || distinct.len() > alphabet_size {
        return Err(Error::MalformedSystem("alphabet".into()));
    }

    let mut adj = vec![Vec::new(); n + 1];
    for e in &sys.eq {
        for k in 0..e.len {
            adj[e.i + k].push(e.j + k);
            adj[e.j + k].push(e.i + k);
        }
    }
    let mut comp = vec![0usize; n + 1];
    for s in 1..=n {
        if comp[s] != 0 {
            continue;
        }
        comp[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if comp[v] == 0 {
                    comp[v] = s;
                    queue.push_back(v);
                }
            }
        }
    }
    let classes = Partition::from_class_ids(&comp[1..]);

    let mut conflict: Option<(usize, usize)> = None;
    for a in &sys.ch {
        for b in &sys.ch {
            if a.pos <= b.pos && a.byte != b.byte && comp[a.pos] == comp[b.pos] {
                let cand = (a.pos, b.pos);
                if conflict.is_none_or(|c| cand < c) {
                    conflict = Some(cand);
                }
            }
        }
    }
    let verdict = if let Some((first, second)) = conflict {
        Verdict::Unsat { first, second }
    } else {
        let pinned: HashMap<usize, u8> = sys.ch.iter().map(|p| (comp[p.pos], p.byte)).collect();
        let free = (1..=n).find(|&p| !pinned.contains_key(&comp[p]));
        match free {
            Some(free_pos) if alphabet_size >= 2 => Verdict::Ambiguous { free_pos },
            _ => {
                let fill = sys.ch.iter().min().map_or(0, |p| p.byte);
                Verdict::Unique(
                    (1..=n)
                        .map(|p| pinned.get(&comp[p]).copied().unwrap_or(fill))
                        .collect(),
                )
            }
        }
    };
    Ok(Solution { classes, verdict })
}

/// Whether every distinct substring has an occurrence covering a position of `set`.
pub fn naive_attractor_check(w: &Text, set: &BTreeSet<usize>) -> Result<bool> {
    cap(w.len(), MAX_ATTRACTOR_TEXT)?;
    check_positions(w.len(), set)?;
    let t = w.as_bytes();
    let n = t.len();
    // marked_before[i] = number of marked positions among 1..=i
    let mut marked_before = vec![0usize; n + 1];
    for i in 1..=n {
        marked_before[i] = marked_before[i - 1] + set.contains(&i) as usize;
    }
    let mut covered: HashMap<&[u8], bool> = HashMap::new();
    for start in 1..=n {
        for end in start..=n {
            let hit = marked_before[end] > marked_before[start - 1];
            *covered.entry(&t[start - 1..end]).or_insert(false) |= hit;
        }
    }
    Ok(covered.values().all(|&c| c))
}

/// A reproducible random system with `n <= max_n` and `|Eq| <= max_eq`.
///
/// Most equations are planted true equalities of a hidden random text and
/// most pins agree with it, so all three verdicts show up in a batch.
pub fn random_system(seed: u64, max_n: usize, max_eq: usize) -> Ses {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(1..=max_n);
    let sigma = rng.random_range(1..=3u8);
    let hidden: Vec<u8> = (0..n).map(|_| b'a' + rng.random_range(0..sigma)).collect();

    let mut eq = Vec::new();
    for _ in 0..rng.random_range(0..=max_eq) {
        let planted = rng.random_bool(0.8);
        for attempt in 0..20 {
            let len = rng.random_range(1..=n.min(16));
            let i = rng.random_range(1..=n - len + 1);
            let j = rng.random_range(1..=n - len + 1);
            if !planted || hidden[i - 1..i - 1 + len] == hidden[j - 1..j - 1 + len] || attempt == 19
            {
                eq.push(Equation { i, j, len });
                break;
            }
        }
    }

    let mut ch = Vec::new();
    let mut used = HashSet::new();
    let pins = rng.random_range(0..=n.div_ceil(3));
    for _ in 0..pins {
        let pos = rng.random_range(1..=n);
        let byte = if rng.random_bool(0.9) {
            hidden[pos - 1]
        } else {
            b'a' + rng.random_range(0..4)
        };
        if used.insert((pos, byte)) {
            ch.push(Pin { pos, byte });
        }
    }
    Ses { n, eq, ch }
}
