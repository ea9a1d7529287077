//! Free-group words over a basis of finite rank.
//!
//! Letters are signed generator indices: `+i` is generator `i`, `-i` its
//! inverse. Text I/O uses single characters, lowercase for generators and
//! uppercase for inverses. The alphabet starts `x y z` and continues with
//! `a b c d f g ...` (skipping `e`, which always denotes the identity).

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

const ALPHABET: &[u8] = b"xyzabcdfghijklmnopqrstuvw";

/// Largest rank with a text representation.
pub const MAX_TEXT_RANK: usize = ALPHABET.len();

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Basis {
    rank: usize,
}

impl Basis {
    pub fn new(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::RankTooSmall { rank, min: 1 });
        }
        Ok(Basis { rank })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// All letters `x, X, y, Y, ...` in canonical order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (1..=self.rank as i32).flat_map(|g| [Letter(g), Letter(-g)])
    }

    pub fn generators(&self) -> impl Iterator<Item = Letter> {
        (1..=self.rank as i32).map(Letter)
    }

    pub fn letter(&self, index: i64) -> Result<Letter> {
        if index == 0 || index.unsigned_abs() as usize > self.rank {
            return Err(Error::LetterOutOfRange {
                index,
                rank: self.rank,
            });
        }
        Ok(Letter(index as i32))
    }

    fn check(&self, other: &Basis) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::BasisMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }
}

/// A signed generator index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter(i32);

impl Letter {
    pub fn new(index: i32) -> Self {
        assert!(index != 0, "letter index must be nonzero");
        Letter(index)
    }

    pub fn index(self) -> i32 {
        self.0
    }

    /// Generator number, 1-based.
    pub fn generator(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_inverse(self) -> bool {
        self.0 < 0
    }

    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }

    pub fn to_char(self) -> char {
        let c = ALPHABET[self.generator() - 1] as char;
        if self.is_inverse() {
            c.to_ascii_uppercase()
        } else {
            c
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        let lower = c.to_ascii_lowercase();
        let pos = ALPHABET.iter().position(|&a| a as char == lower)? as i32 + 1;
        Some(if c.is_ascii_uppercase() {
            Letter(-pos)
        } else {
            Letter(pos)
        })
    }
}

// x < X < y < Y < ...
impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.generator(), self.is_inverse()).cmp(&(other.generator(), other.is_inverse()))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A freely reduced word. Ordered shortlex (length, then letters).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    basis: Basis,
    letters: Vec<Letter>,
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
            .then_with(|| self.basis.rank.cmp(&other.basis.rank))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Word {
    pub fn identity(basis: Basis) -> Self {
        Word {
            basis,
            letters: Vec::new(),
        }
    }

    /// Freely reduces a raw sequence of signed indices.
    pub fn reduce(basis: Basis, raw: &[i64]) -> Result<Self> {
        let letters = raw
            .iter()
            .map(|&i| basis.letter(i))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_letters(basis, letters))
    }

    /// Freely reduces a sequence of letters already known to be in range.
    pub fn from_letters(basis: Basis, letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            debug_assert!(l.generator() <= basis.rank);
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word {
            basis,
            letters: out,
        }
    }

    pub fn letter(basis: Basis, l: Letter) -> Self {
        Word {
            basis,
            letters: vec![l],
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    /// Signed-index view, mostly for tests and diagnostics.
    pub fn indices(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.index() as i64).collect()
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        self.basis.check(&other.basis)?;
        Ok(self.mul(other))
    }

    /// Product without the basis check; callers guarantee equal bases.
    pub(crate) fn mul(&self, other: &Word) -> Word {
        Self::from_letters(
            self.basis,
            self.letters.iter().chain(other.letters.iter()).copied(),
        )
    }

    /// `l · self`, freely reduced.
    pub fn left_mul(&self, l: Letter) -> Word {
        if self.letters.first() == Some(&l.inverse()) {
            Word {
                basis: self.basis,
                letters: self.letters[1..].to_vec(),
            }
        } else {
            let mut letters = Vec::with_capacity(self.letters.len() + 1);
            letters.push(l);
            letters.extend_from_slice(&self.letters);
            Word {
                basis: self.basis,
                letters,
            }
        }
    }

    /// `self · l`, freely reduced.
    pub fn right_mul(&self, l: Letter) -> Word {
        let mut letters = self.letters.clone();
        if letters.last() == Some(&l.inverse()) {
            letters.pop();
        } else {
            letters.push(l);
        }
        Word {
            basis: self.basis,
            letters,
        }
    }

    pub fn invert(&self) -> Word {
        Word {
            basis: self.basis,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Longest proper prefix (the parent in the Cayley tree rooted at the identity).
    pub fn parent(&self) -> Option<Word> {
        if self.letters.is_empty() {
            return None;
        }
        Some(Word {
            basis: self.basis,
            letters: self.letters[..self.letters.len() - 1].to_vec(),
        })
    }

    /// Returns `(core, conjugator)` with `self = conjugator · core · conjugator⁻¹`
    /// and `core` cyclically reduced.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let n = self.letters.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.letters[k] == self.letters[n - 1 - k].inverse() {
            k += 1;
        }
        let core = Word {
            basis: self.basis,
            letters: self.letters[k..n - k].to_vec(),
        };
        let conjugator = Word {
            basis: self.basis,
            letters: self.letters[..k].to_vec(),
        };
        (core, conjugator)
    }

    pub fn power(&self, exponent: i64) -> Word {
        let base = if exponent < 0 {
            self.invert()
        } else {
            self.clone()
        };
        (0..exponent.unsigned_abs()).fold(Word::identity(self.basis), |acc, _| acc.mul(&base))
    }

    /// Applies the homomorphism sending generator `i` to `images[i - 1]`.
    pub fn substitute(&self, images: &[Word]) -> Result<Word> {
        if images.len() != self.basis.rank {
            return Err(Error::BasisMismatch {
                left: self.basis.rank,
                right: images.len(),
            });
        }
        let target = match images.first() {
            Some(w) => w.basis,
            None => return Ok(self.clone()),
        };
        let mut out = Word::identity(target);
        for l in &self.letters {
            let img = &images[l.generator() - 1];
            target.check(&img.basis)?;
            out = if l.is_inverse() {
                out.mul(&img.invert())
            } else {
                out.mul(img)
            };
        }
        Ok(out)
    }

    /// Parses compact (`xyX`) or spaced (`x y x^-1`) syntax; `e` or `1` is the identity.
    /// Exponents `^n` apply to the preceding letter.
    pub fn parse(basis: Basis, text: &str) -> Result<Word> {
        let err = |message: String| Error::Parse { line: 0, message };
        let mut letters: Vec<Letter> = Vec::new();
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            i += 1;
            if c.is_whitespace() || c == '*' || c == '.' {
                continue;
            }
            if c == 'e' || c == '1' {
                continue;
            }
            let l = Letter::from_char(c)
                .filter(|l| l.generator() <= basis.rank)
                .ok_or_else(|| err(format!("unknown letter '{c}' for rank {}", basis.rank)))?;
            let mut exponent: i64 = 1;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let start = i;
                if i < chars.len() && (chars[i] == '-' || chars[i] == '+') {
                    i += 1;
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let token: String = chars[start..i].iter().collect();
                exponent = token
                    .parse()
                    .map_err(|_| err(format!("bad exponent '{token}'")))?;
            }
            let (l, count) = if exponent < 0 {
                (l.inverse(), exponent.unsigned_abs())
            } else {
                (l, exponent as u64)
            };
            letters.extend(std::iter::repeat_n(l, count as usize));
        }
        Ok(Word::from_letters(basis, letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}
