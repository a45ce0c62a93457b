//! Bit-packed binary words indexing cylinders and inverse branches.

use std::fmt;

/// A finite word `a = a_1 ... a_n` over `{0,1}`, packed into a `u64`.
///
/// The first letter is the most significant bit, so the integer order of
/// `bits` is the lexicographic order of words of equal length. The first
/// letter selects the coarse cylinder of the branch `g_a = g_{a_1} ∘ ... ∘
/// g_{a_n}` (the last letter is applied first).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    bits: u64,
    len: u32,
}

impl Word {
    pub const MAX_LEN: u32 = 64;

    /// The empty word (identity for concatenation).
    pub const EMPTY: Word = Word { bits: 0, len: 0 };

    pub fn new(bits: u64, len: u32) -> Word {
        assert!(len <= Self::MAX_LEN, "word length {len} exceeds 64");
        let bits = if len == 64 { bits } else { bits & ((1u64 << len) - 1) };
        Word { bits, len }
    }

    /// Parses a word from a string of `0`/`1` characters, first letter first.
    pub fn parse(s: &str) -> Word {
        let mut bits = 0u64;
        let mut len = 0u32;
        for c in s.chars() {
            match c {
                '0' => bits <<= 1,
                '1' => bits = (bits << 1) | 1,
                _ => panic!("invalid word character {c:?}"),
            }
            len += 1;
        }
        Word::new(bits, len)
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> u32 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Letter `a_j`, 1-indexed from the first letter.
    pub fn letter(&self, j: u32) -> u8 {
        assert!(j >= 1 && j <= self.len);
        ((self.bits >> (self.len - j)) & 1) as u8
    }

    /// Iterates letters from the last (applied first) to the first.
    pub fn letters_rev(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len).map(move |k| ((self.bits >> k) & 1) as u8)
    }

    /// Iterates letters from the first to the last.
    pub fn letters(&self) -> impl Iterator<Item = u8> + '_ {
        (1..=self.len).map(move |j| self.letter(j))
    }

    /// Concatenation `self · other` (associative; `EMPTY` is the identity).
    pub fn concat(&self, other: Word) -> Word {
        let len = self.len + other.len;
        assert!(len <= Self::MAX_LEN, "concatenation overflows 64 bits");
        Word {
            bits: (self.bits << other.len) | other.bits,
            len,
        }
    }

    /// The suffix `a_{j+1} ... a_n` obtained by dropping the first `j` letters.
    pub fn suffix(&self, j: u32) -> Word {
        assert!(j <= self.len);
        Word::new(self.bits, self.len - j)
    }

    /// The prefix `a_1 ... a_j`.
    pub fn prefix(&self, j: u32) -> Word {
        assert!(j <= self.len);
        Word {
            bits: self.bits >> (self.len - j),
            len: j,
        }
    }

    /// Lexicographic successor among words of the same length, if any.
    pub fn successor(&self) -> Option<Word> {
        let max = if self.len == 64 { u64::MAX } else { (1u64 << self.len) - 1 };
        if self.bits == max {
            None
        } else {
            Some(Word { bits: self.bits + 1, len: self.len })
        }
    }

    /// All words of length `n` in lexicographic order.
    pub fn all(n: u32) -> impl Iterator<Item = Word> {
        assert!(n < 40, "refusing to enumerate 2^{n} words eagerly");
        (0..(1u64 << n)).map(move |bits| Word { bits, len: n })
    }
}

impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "ε");
        }
        for j in 1..=self.len {
            write!(f, "{}", self.letter(j))?;
        }
        Ok(())
    }
}
