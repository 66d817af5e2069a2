//! Bitset subsets of a finite magma's element indices.
//!
//! A [`Subset`] remembers the size of its parent magma; operators refuse to
//! mix subsets of different widths. Widths up to 64 stay inline, larger
//! magmas (e.g. the function monoid on four points, 256 elements) spill to
//! extra words.

use crate::error::{Error, Result};
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::fmt;

type Words = SmallVec<[u64; 1]>;

/// A subset of `{0, .., n-1}` backed by a bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    n: usize,
    words: Words,
}

fn word_count(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

impl Subset {
    pub fn empty(n: usize) -> Self {
        Subset {
            n,
            words: smallvec::smallvec![0; word_count(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Subset::empty(n);
        for w in 0..s.words.len() {
            s.words[w] = !0u64;
        }
        s.mask_tail();
        s
    }

    pub fn singleton(n: usize, i: usize) -> Self {
        let mut s = Subset::empty(n);
        s.insert(i);
        s
    }

    pub fn from_indices(n: usize, indices: &[usize]) -> Self {
        let mut s = Subset::empty(n);
        for &i in indices {
            s.insert(i);
        }
        s
    }

    /// Low 64 bits interpreted little-endian; only valid for n <= 64.
    pub fn from_word(n: usize, bits: u64) -> Self {
        debug_assert!(n <= 64);
        let mut s = Subset::empty(n);
        s.words[0] = bits;
        s.mask_tail();
        s
    }

    fn mask_tail(&mut self) {
        let rem = self.n % 64;
        if rem != 0 {
            let last = self.words.len() - 1;
            self.words[last] &= (1u64 << rem) - 1;
        }
        if self.n == 0 {
            self.words[0] = 0;
        }
    }

    pub fn parent_size(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.n, "index {i} out of range for width {}", self.n);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.n {
            self.words[i / 64] &= !(1u64 << (i % 64));
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.n && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Set bits in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    fn zip_new(&self, other: &Subset, f: impl Fn(u64, u64) -> u64) -> Subset {
        debug_assert_eq!(self.n, other.n);
        let words = self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(&a, &b)| f(a, b))
            .collect();
        Subset { n: self.n, words }
    }

    pub fn union(&self, other: &Subset) -> Subset {
        self.zip_new(other, |a, b| a | b)
    }

    pub fn intersect(&self, other: &Subset) -> Subset {
        self.zip_new(other, |a, b| a & b)
    }

    pub fn minus(&self, other: &Subset) -> Subset {
        self.zip_new(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Subset {
        let mut s = Subset {
            n: self.n,
            words: self.words.iter().map(|&w| !w).collect(),
        };
        s.mask_tail();
        s
    }

    pub fn union_in_place(&mut self, other: &Subset) {
        debug_assert_eq!(self.n, other.n);
        for (a, &b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Subset) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(&a, &b)| a & b == 0)
    }

    /// Lexicographic order on the ascending index sequence, so `{0,5}` sorts
    /// before `{1,2}` and a set precedes its proper supersets. This is the
    /// canonical order used wherever a deterministic representative is
    /// needed (e.g. the canonical inverse).
    pub fn lex_cmp(&self, other: &Subset) -> Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
            }
        }
    }

    /// All `2^n` subsets of width `n` in ascending bit-pattern order.
    /// Only available for `n <= 24`; exhaustive scans beyond that are
    /// refused everywhere in this crate.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        assert!(n <= 24, "exhaustive subset enumeration capped at n = 24");
        (0u64..(1u64 << n)).map(move |bits| Subset::from_word(n, bits))
    }

    /// All subsets of `self` (including the empty set and `self`).
    pub fn subsets(&self) -> impl Iterator<Item = Subset> + '_ {
        let idx = self.indices();
        assert!(idx.len() <= 24, "subset powerset capped at 24 elements");
        (0u64..(1u64 << idx.len())).map(move |mask| {
            let mut s = Subset::empty(self.n);
            for (k, &i) in idx.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    s.insert(i);
                }
            }
            s
        })
    }

    /// Hex literal of the bit pattern, e.g. `{0,2,4}` prints as `0x15`.
    pub fn to_hex(&self) -> String {
        let mut digits = String::new();
        let mut seen_nonzero = false;
        for &w in self.words.iter().rev() {
            if seen_nonzero {
                digits.push_str(&format!("{w:016x}"));
            } else if w != 0 {
                digits.push_str(&format!("{w:x}"));
                seen_nonzero = true;
            }
        }
        if digits.is_empty() {
            digits.push('0');
        }
        format!("0x{digits}")
    }

    /// Parses either a sorted index list (`[0,2,4]`) or a hex bitstring
    /// (`0x15`) into a subset of width `n`.
    pub fn parse(n: usize, text: &str) -> Result<Subset> {
        let t = text.trim();
        if let Some(hex) = t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
            let mut s = Subset::empty(n);
            for (k, c) in hex.chars().rev().enumerate() {
                let d = c
                    .to_digit(16)
                    .ok_or_else(|| Error::Parse(format!("bad hex digit {c:?} in {t:?}")))?;
                for b in 0..4 {
                    if d >> b & 1 == 1 {
                        let i = k * 4 + b;
                        if i >= n {
                            return Err(Error::Parse(format!(
                                "bit {i} out of range for width {n}"
                            )));
                        }
                        s.insert(i);
                    }
                }
            }
            Ok(s)
        } else if t.starts_with('[') {
            let idx: Vec<usize> = serde_json::from_str(t)
                .map_err(|e| Error::Parse(format!("bad index list {t:?}: {e}")))?;
            for &i in &idx {
                if i >= n {
                    return Err(Error::Parse(format!("index {i} out of range for width {n}")));
                }
            }
            Ok(Subset::from_indices(n, &idx))
        } else {
            Err(Error::Parse(format!(
                "expected [i,j,..] or 0x..: got {t:?}"
            )))
        }
    }
}

impl serde::Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lex_cmp(other)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_ops() {
        let a = Subset::from_indices(6, &[0, 2, 4]);
        let b = Subset::from_indices(6, &[2, 3]);
        assert_eq!(a.len(), 3);
        assert_eq!(a.intersect(&b).indices(), vec![2]);
        assert_eq!(a.union(&b).indices(), vec![0, 2, 3, 4]);
        assert_eq!(a.minus(&b).indices(), vec![0, 4]);
        assert_eq!(a.complement().indices(), vec![1, 3, 5]);
        assert!(Subset::from_indices(6, &[2]).is_subset_of(&a));
        assert!(!a.is_disjoint(&b));
    }

    #[test]
    fn hex_round_trip() {
        let a = Subset::from_indices(6, &[0, 2, 4]);
        assert_eq!(a.to_hex(), "0x15");
        assert_eq!(Subset::parse(6, "0x15").unwrap(), a);
        assert_eq!(Subset::parse(6, "[0,2,4]").unwrap(), a);
        assert_eq!(Subset::full(6).to_hex(), "0x3f");
        assert_eq!(Subset::empty(6).to_hex(), "0x0");
    }

    #[test]
    fn wide_widths() {
        let mut s = Subset::empty(256);
        s.insert(0);
        s.insert(255);
        assert_eq!(s.len(), 2);
        assert_eq!(s.indices(), vec![0, 255]);
        assert_eq!(s.complement().len(), 254);
        let parsed = Subset::parse(256, &s.to_hex()).unwrap();
        assert_eq!(parsed, s);
    }

    #[test]
    fn lex_order() {
        let n = 6;
        let e = Subset::empty(n);
        let s05 = Subset::from_indices(n, &[0, 5]);
        let s12 = Subset::from_indices(n, &[1, 2]);
        let s0 = Subset::from_indices(n, &[0]);
        assert_eq!(e.lex_cmp(&s0), Ordering::Less);
        assert_eq!(s0.lex_cmp(&s05), Ordering::Less);
        assert_eq!(s05.lex_cmp(&s12), Ordering::Less);
    }

    proptest! {
        #[test]
        fn complement_involution(bits in 0u64..(1 << 12)) {
            let s = Subset::from_word(12, bits);
            prop_assert_eq!(s.complement().complement(), s);
        }

        #[test]
        fn hex_parse_inverse(bits in 0u64..(1 << 16)) {
            let s = Subset::from_word(16, bits);
            prop_assert_eq!(Subset::parse(16, &s.to_hex()).unwrap(), s);
        }

        #[test]
        fn union_intersect_laws(a in 0u64..(1 << 10), b in 0u64..(1 << 10)) {
            let x = Subset::from_word(10, a);
            let y = Subset::from_word(10, b);
            prop_assert_eq!(x.union(&y).intersect(&x), x.clone());
            prop_assert_eq!(x.minus(&y).intersect(&y).len(), 0);
        }
    }
}
