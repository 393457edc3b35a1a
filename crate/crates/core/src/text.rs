//! Sentinel-terminated texts and deterministic corpus generators.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// End-of-string marker appended to every text.
pub const SENTINEL: u8 = 0x00;

pub const MAX_THUE_MORSE_ORDER: usize = 24;
pub const MAX_FIBONACCI_ORDER: usize = 30;

/// A byte string whose last byte is the sentinel, which occurs nowhere else.
///
/// Positions handed out by the rest of the crate are 1-based: position `i`
/// refers to `as_bytes()[i - 1]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Text {
    data: Vec<u8>,
}

impl Text {
    /// Appends the sentinel to `raw`.
    pub fn attach_sentinel(raw: &[u8]) -> Result<Self> {
        if let Some(offset) = raw.iter().position(|&b| b == SENTINEL) {
            return Err(Error::SentinelCollision { offset });
        }
        let mut data = Vec::with_capacity(raw.len() + 1);
        data.extend_from_slice(raw);
        data.push(SENTINEL);
        Ok(Self { data })
    }

    /// Wraps bytes that already end in the sentinel.
    pub fn from_terminated(data: Vec<u8>) -> Result<Self> {
        match data.split_last() {
            Some((&SENTINEL, body)) => {
                if let Some(offset) = body.iter().position(|&b| b == SENTINEL) {
                    return Err(Error::SentinelCollision { offset });
                }
                Ok(Self { data })
            }
            _ => Err(Error::Corrupted("text is not sentinel-terminated".into())),
        }
    }

    /// Total length including the sentinel.
    #[inline]
    pub fn len(&self) -> usize {
        self.data.len()
    }

    /// Always false; a text holds at least the sentinel.
    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn raw_len(&self) -> usize {
        self.data.len() - 1
    }

    #[inline]
    pub fn as_bytes(&self) -> &[u8] {
        &self.data
    }

    /// The text without its sentinel.
    #[inline]
    pub fn raw(&self) -> &[u8] {
        &self.data[..self.data.len() - 1]
    }

    /// Byte at 1-based position `pos`.
    #[inline]
    pub fn at(&self, pos: usize) -> u8 {
        self.data[pos - 1]
    }

    /// `w[start..start+len-1]` with a 1-based start.
    #[inline]
    pub fn substring(&self, start: usize, len: usize) -> &[u8] {
        &self.data[start - 1..start - 1 + len]
    }

    pub fn alphabet(&self) -> Alphabet {
        let mut seen = [false; 256];
        for &b in &self.data {
            seen[b as usize] = true;
        }
        let present: BTreeSet<u8> = (0..=255u8).filter(|&b| seen[b as usize]).collect();
        Alphabet { present }
    }

    /// Leftmost 1-based position of every distinct byte, in ascending byte order.
    pub fn first_occurrences(&self) -> Vec<(usize, u8)> {
        let mut first = [usize::MAX; 256];
        for (i, &b) in self.data.iter().enumerate() {
            if first[b as usize] == usize::MAX {
                first[b as usize] = i + 1;
            }
        }
        (0..=255u8)
            .filter(|&b| first[b as usize] != usize::MAX)
            .map(|b| (first[b as usize], b))
            .collect()
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.data
    }
}

impl std::fmt::Debug for Text {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Text({:?})", String::from_utf8_lossy(&self.data))
    }
}

/// Distinct bytes of a text, sentinel included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    pub present: BTreeSet<u8>,
}

impl Alphabet {
    #[inline]
    pub fn sigma(&self) -> usize {
        self.present.len()
    }
}

/// The Thue-Morse word obtained by applying `a -> ab, b -> ba` to `a` `k` times.
pub fn thue_morse(k: usize) -> Result<Vec<u8>> {
    if k > MAX_THUE_MORSE_ORDER {
        return Err(Error::OutOfRange {
            value: k,
            max: MAX_THUE_MORSE_ORDER,
        });
    }
    // t[i] is 'b' exactly when i has odd popcount.
    Ok((0u32..1 << k)
        .map(|i| if i.count_ones() % 2 == 0 { b'a' } else { b'b' })
        .collect())
}

/// Fibonacci word: F_0 = b, F_1 = a, F_k = F_{k-1} F_{k-2}.
pub fn fibonacci_word(k: usize) -> Result<Vec<u8>> {
    if k > MAX_FIBONACCI_ORDER {
        return Err(Error::OutOfRange {
            value: k,
            max: MAX_FIBONACCI_ORDER,
        });
    }
    let (mut prev, mut cur) = (b"b".to_vec(), b"a".to_vec());
    if k == 0 {
        return Ok(prev);
    }
    for _ in 1..k {
        let mut next = cur.clone();
        next.extend_from_slice(&prev);
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// Letters used by [`random_text`] for an alphabet of `sigma` symbols.
///
/// Small alphabets use `a`, `b`, ...; larger ones use bytes `1..=sigma`.
pub fn random_alphabet(sigma: usize) -> Result<Vec<u8>> {
    match sigma {
        1..=26 => Ok((0..sigma as u8).map(|i| b'a' + i).collect()),
        27..=255 => Ok((1..=sigma as u8).collect()),
        _ => Err(Error::OutOfRange {
            value: sigma,
            max: 255,
        }),
    }
}

/// Uniform random sentinel-free bytes, reproducible from `seed`.
pub fn random_text(seed: u64, len: usize, sigma: usize) -> Result<Vec<u8>> {
    let letters = random_alphabet(sigma)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..len)
        .map(|_| letters[rng.random_range(0..letters.len())])
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sentinel_attachment() {
        let t = Text::attach_sentinel(b"").unwrap();
        assert_eq!(t.as_bytes(), b"\x00");
        assert_eq!(t.len(), 1);
        assert_eq!(t.raw_len(), 0);

        let t = Text::attach_sentinel(b"ab").unwrap();
        assert_eq!(t.as_bytes(), b"ab\x00");
        assert_eq!(t.len(), 3);

        assert_eq!(
            Text::attach_sentinel(b"a\x00b"),
            Err(Error::SentinelCollision { offset: 1 })
        );
    }

    #[test]
    fn alphabet_counts_sentinel() {
        let t = Text::attach_sentinel(b"abba").unwrap();
        assert_eq!(t.alphabet().sigma(), 3);
        assert_eq!(t.first_occurrences(), vec![(5, 0), (1, b'a'), (2, b'b')]);
        assert_eq!(Text::attach_sentinel(b"").unwrap().alphabet().sigma(), 1);
    }

    #[test]
    fn from_terminated_checks_sentinel() {
        assert!(Text::from_terminated(b"ab\x00".to_vec()).is_ok());
        assert!(Text::from_terminated(b"ab".to_vec()).is_err());
        assert!(Text::from_terminated(vec![]).is_err());
        assert!(Text::from_terminated(b"a\x00b\x00".to_vec()).is_err());
    }

    #[test]
    fn thue_morse_examples() {
        assert_eq!(thue_morse(0).unwrap(), b"a");
        assert_eq!(thue_morse(1).unwrap(), b"ab");
        assert_eq!(thue_morse(3).unwrap(), b"abbabaab");
        assert!(matches!(thue_morse(25), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn thue_morse_morphism_step() {
        for k in 0..12 {
            let cur = thue_morse(k).unwrap();
            let next = thue_morse(k + 1).unwrap();
            let image: Vec<u8> = cur
                .iter()
                .flat_map(|&c| if c == b'a' { *b"ab" } else { *b"ba" })
                .collect();
            assert_eq!(next, image);
            assert_eq!(cur.len(), 1 << k);
            if k >= 1 {
                let a = cur.iter().filter(|&&c| c == b'a').count();
                assert_eq!(2 * a, cur.len());
            }
        }
    }

    #[test]
    fn fibonacci_examples() {
        assert_eq!(fibonacci_word(0).unwrap(), b"b");
        assert_eq!(fibonacci_word(1).unwrap(), b"a");
        assert_eq!(fibonacci_word(3).unwrap(), b"aba");
        assert_eq!(fibonacci_word(5).unwrap(), b"abaababa");
        assert!(matches!(fibonacci_word(31), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn random_text_is_reproducible() {
        let a = random_text(7, 100, 4).unwrap();
        assert_eq!(a, random_text(7, 100, 4).unwrap());
        assert_ne!(a, random_text(8, 100, 4).unwrap());
        assert!(a.iter().all(|b| (b'a'..=b'd').contains(b)));
        assert!(random_text(1, 50, 200)
            .unwrap()
            .iter()
            .all(|&b| b != SENTINEL));
        assert!(random_text(1, 5, 0).is_err());
        assert!(random_text(1, 5, 256).is_err());
    }

    proptest! {
        #[test]
        fn strip_sentinel_is_identity(raw in proptest::collection::vec(1u8..=255, 0..64)) {
            let t = Text::attach_sentinel(&raw).unwrap();
            prop_assert_eq!(t.raw(), &raw[..]);
            prop_assert_eq!(*t.as_bytes().last().unwrap(), SENTINEL);
        }
    }
}
