//! Binary words over {0, 1}.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A finite word over the binary alphabet.
///
/// Words are ordered by the usual binary (shortlex) order: shorter words
/// first, equal lengths lexicographically with `0 < 1`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<bool>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        Word(bits)
    }

    pub fn zeros(n: usize) -> Self {
        Word(vec![false; n])
    }

    pub fn ones(n: usize) -> Self {
        Word(vec![true; n])
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count_ones(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    /// Prefixes the word with a single bit.
    pub fn prefixed(&self, bit: bool) -> Word {
        let mut bits = Vec::with_capacity(self.len() + 1);
        bits.push(bit);
        bits.extend_from_slice(&self.0);
        Word(bits)
    }

    /// Splits off the first bit, if any.
    pub fn split_first(&self) -> Option<(bool, Word)> {
        self.0
            .split_first()
            .map(|(&b, rest)| (b, Word(rest.to_vec())))
    }

    /// The `index`-th word in shortlex order: 0 ↦ ε, 1 ↦ "0", 2 ↦ "1", 3 ↦ "00", …
    pub fn from_index(index: u64) -> Word {
        // bijective base-2: write index+1 in binary and drop the leading 1
        let v = index as u128 + 1;
        let width = 127 - v.leading_zeros() as usize;
        Word((0..width).rev().map(|k| (v >> k) & 1 == 1).collect())
    }

    /// Inverse of [`Word::from_index`]; `None` when the index overflows `u64`.
    pub fn index(&self) -> Option<u64> {
        if self.len() >= 64 {
            return None;
        }
        let mut v: u64 = 1;
        for &b in &self.0 {
            v = (v << 1) | b as u64;
        }
        Some(v - 1)
    }

    /// Successor in shortlex order.
    pub fn successor(&self) -> Word {
        let mut bits = self.0.clone();
        for i in (0..bits.len()).rev() {
            if bits[i] {
                bits[i] = false;
            } else {
                bits[i] = true;
                return Word(bits);
            }
        }
        Word(vec![false; bits.len() + 1])
    }

    /// All words of length exactly `n`, in binary order.
    pub fn all_of_len(n: usize) -> impl Iterator<Item = Word> {
        std::iter::successors(Some(Word::zeros(n)), move |w| {
            let next = w.successor();
            (next.len() == n).then_some(next)
        })
    }

    /// All words of length at most `n`, in binary order.
    pub fn all_up_to(n: usize) -> impl Iterator<Item = Word> {
        (0..=n).flat_map(Word::all_of_len)
    }

    /// Interprets the word as a binary number (ε ↦ 0); saturates at `u64::MAX`.
    pub fn to_number(&self) -> u64 {
        self.0.iter().fold(0u64, |acc, &b| {
            acc.checked_mul(2)
                .and_then(|v| v.checked_add(b as u64))
                .unwrap_or(u64::MAX)
        })
    }

    /// Binary representation without leading zeros (0 ↦ "0").
    pub fn from_number(n: u64) -> Word {
        if n == 0 {
            return Word(vec![false]);
        }
        let width = 64 - n.leading_zeros() as usize;
        Word((0..width).rev().map(|k| (n >> k) & 1 == 1).collect())
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses a string of `0`/`1`; the empty string and `ε` denote the empty word.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "ε" {
            return Ok(Word::empty());
        }
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse(format!("invalid bit {other:?} in word"))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

impl From<&str> for Word {
    /// Panics on characters other than `0` and `1`; intended for literals.
    fn from(s: &str) -> Self {
        s.parse().expect("word literal must consist of 0 and 1")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shortlex_index_roundtrip() {
        for i in 0..2000u64 {
            let w = Word::from_index(i);
            assert_eq!(w.index(), Some(i));
            assert_eq!(Word::from_index(i).successor(), Word::from_index(i + 1));
        }
        assert_eq!(Word::from_index(0), Word::empty());
        assert_eq!(Word::from_index(3), Word::from("00"));
    }

    #[test]
    fn enumeration_is_ordered() {
        let all: Vec<_> = Word::all_up_to(4).collect();
        assert_eq!(all.len(), 31);
        assert!(all.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn numbers() {
        assert_eq!(Word::from("101").to_number(), 5);
        assert_eq!(Word::from_number(6), Word::from("110"));
        assert_eq!(Word::empty().to_number(), 0);
    }
}
