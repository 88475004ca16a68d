use std::fmt;
use std::hash::{Hash, Hasher};

use super::{Assignment, Literal, Polarity, VarId};

pub(crate) type CubeWords = Vec<u64>;

/// A conjunction of literals over distinct variables, or the contradiction ⊥.
///
/// Stored as two bitsets of equal length in one buffer: `fixed` marks the
/// variables the cube mentions, `positive` (a subset of `fixed`) marks those
/// that appear un-negated. Trailing zero words are trimmed so equal cubes
/// compare and hash equal.
#[derive(Clone, PartialEq, Eq)]
pub struct Cube {
    // fixed words, then positive words
    words: CubeWords,
    bottom: bool,
}

impl Cube {
    /// The empty conjunction (constant true).
    pub fn top() -> Cube {
        Cube {
            words: Vec::new(),
            bottom: false,
        }
    }

    /// The contradiction ⊥.
    pub fn bottom() -> Cube {
        Cube {
            words: Vec::new(),
            bottom: true,
        }
    }

    /// Repeated literals collapse; opposite polarities give ⊥.
    pub fn from_literals<I: IntoIterator<Item = Literal>>(literals: I) -> Cube {
        literals
            .into_iter()
            .fold(Cube::top(), |cube, lit| cube.with(lit))
    }

    /// The minterm of `asg`: every variable fixed to its assigned value.
    pub fn minterm(asg: &Assignment) -> Cube {
        let n = asg.n();
        let mut fixed = vec![!0u64; n.div_ceil(64)];
        if n % 64 != 0 {
            *fixed.last_mut().unwrap() = (1u64 << (n % 64)) - 1;
        }
        let positive = asg.words().to_vec();
        Cube::from_words(&fixed, &positive)
    }

    /// Builds from raw bitsets. `positive` must be a subset of `fixed`.
    pub(crate) fn from_words(fixed: &[u64], positive: &[u64]) -> Cube {
        debug_assert_eq!(fixed.len(), positive.len());
        debug_assert!(fixed.iter().zip(positive).all(|(f, p)| p & !f == 0));
        let w = fixed.iter().rposition(|&f| f != 0).map_or(0, |i| i + 1);
        let mut words = CubeWords::with_capacity(2 * w);
        words.extend_from_slice(&fixed[..w]);
        words.extend_from_slice(&positive[..w]);
        Cube {
            words,
            bottom: false,
        }
    }

    /// Builds from one buffer holding `fixed` then `positive`, trimming in
    /// place.
    /// Buffer for [`Cube::from_buffer`] with all of `A1..An` fixed positive.
    pub(crate) fn full_buffer(n: usize) -> CubeWords {
        let w = n.div_ceil(64);
        let mut words: CubeWords = vec![!0u64; 2 * w];
        if n % 64 != 0 {
            words[w - 1] = (1u64 << (n % 64)) - 1;
            words[2 * w - 1] = words[w - 1];
        }
        words
    }

    pub(crate) fn from_buffer(mut words: CubeWords) -> Cube {
        debug_assert!(words.len() % 2 == 0);
        let w = words.len() / 2;
        let keep = words[..w]
            .iter()
            .rposition(|&f| f != 0)
            .map_or(0, |i| i + 1);
        if keep < w {
            words.copy_within(w..w + keep, keep);
            words.truncate(2 * keep);
        }
        debug_assert!((0..keep).all(|i| words[keep + i] & !words[i] == 0));
        Cube {
            words,
            bottom: false,
        }
    }

    /// Conjoins one more literal.
    pub fn with(mut self, lit: Literal) -> Cube {
        if self.bottom {
            return self;
        }
        let bit = lit.var.bit();
        let (word, mask) = (bit / 64, 1u64 << (bit % 64));
        let w = self.width();
        if w <= word {
            let mut words: CubeWords = vec![0u64; 2 * (word + 1)];
            words[..w].copy_from_slice(self.fixed());
            words[word + 1..word + 1 + w].copy_from_slice(self.positive());
            self.words = words;
        }
        let w = self.width();
        let positive = lit.polarity == Polarity::Positive;
        if self.words[word] & mask != 0 {
            if (self.words[w + word] & mask != 0) != positive {
                return Cube::bottom();
            }
            return self;
        }
        self.words[word] |= mask;
        if positive {
            self.words[w + word] |= mask;
        }
        self
    }

    pub fn is_bottom(&self) -> bool {
        self.bottom
    }

    /// True for the empty conjunction.
    pub fn is_top(&self) -> bool {
        !self.bottom && self.words.is_empty()
    }

    /// Number of literals (0 for ⊥ and for the empty cube).
    pub fn len(&self) -> usize {
        self.fixed().iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn negative_count(&self) -> usize {
        self.fixed()
            .iter()
            .zip(self.positive())
            .map(|(f, p)| (f & !p).count_ones() as usize)
            .sum()
    }

    pub fn polarity(&self, var: VarId) -> Option<Polarity> {
        let bit = var.bit();
        let (word, mask) = (bit / 64, 1u64 << (bit % 64));
        match self.fixed().get(word) {
            Some(f) if f & mask != 0 => Some(if self.positive()[word] & mask != 0 {
                Polarity::Positive
            } else {
                Polarity::Negative
            }),
            _ => None,
        }
    }

    pub fn mentions(&self, var: VarId) -> bool {
        self.polarity(var).is_some()
    }

    /// Literals in ascending variable order.
    pub fn literals(&self) -> impl Iterator<Item = Literal> + '_ {
        set_bits(self.fixed()).map(move |bit| {
            let positive = (self.positive()[bit / 64] >> (bit % 64)) & 1 == 1;
            Literal::new(
                VarId::from_bit(bit),
                if positive {
                    Polarity::Positive
                } else {
                    Polarity::Negative
                },
            )
        })
    }

    /// Variables appearing negated, ascending.
    pub fn negative_vars(&self) -> impl Iterator<Item = VarId> + '_ {
        self.negative_bits().map(VarId::from_bit)
    }

    pub(crate) fn negative_bits(&self) -> impl Iterator<Item = usize> + '_ {
        self.fixed()
            .iter()
            .zip(self.positive())
            .enumerate()
            .flat_map(|(w, (f, p))| WordBits(f & !p).map(move |b| w * 64 + b))
    }

    pub fn max_var(&self) -> Option<VarId> {
        let last = self.fixed().last()?;
        let bit = (self.width() - 1) * 64 + 63 - last.leading_zeros() as usize;
        Some(VarId::from_bit(bit))
    }

    /// True if the cube fixes all of `A1..An` and nothing else.
    pub fn is_minterm(&self, n: usize) -> bool {
        !self.bottom
            && self.len() == n
            && self.max_var().map_or(n == 0, |v| v.index() as usize == n)
    }

    /// Some variable has opposite polarities in the two cubes.
    pub fn conflicts_with(&self, other: &Cube) -> bool {
        let w = self.width().min(other.width());
        let (fa, pa) = (&self.fixed()[..w], &self.positive()[..w]);
        let (fb, pb) = (&other.fixed()[..w], &other.positive()[..w]);
        (0..w).any(|i| fa[i] & fb[i] & (pa[i] ^ pb[i]) != 0)
    }

    /// Conjunction. ⊥ if either side is ⊥ or the cubes conflict.
    pub fn and(&self, other: &Cube) -> Cube {
        if self.bottom || other.bottom || self.conflicts_with(other) {
            return Cube::bottom();
        }
        let (long, short) = if self.width() >= other.width() {
            (self, other)
        } else {
            (other, self)
        };
        let (w, sw) = (long.width(), short.width());
        let mut words = long.words.clone();
        let (f, p) = words.split_at_mut(w);
        for i in 0..sw {
            f[i] |= short.words[i];
            p[i] |= short.words[sw + i];
        }
        Cube {
            words,
            bottom: false,
        }
    }

    /// Panics if the cube mentions a variable beyond `asg.n()`.
    pub fn is_satisfied_by(&self, asg: &Assignment) -> bool {
        if self.bottom {
            return false;
        }
        let words = asg.words();
        assert!(
            self.max_var()
                .map_or(true, |v| v.index() as usize <= asg.n()),
            "cube mentions variables beyond n = {}",
            asg.n()
        );
        self.fixed()
            .iter()
            .zip(self.positive())
            .zip(words)
            .all(|((f, p), a)| (a & f) == *p)
    }

    /// Row-coordinate masks for `n <= 64`: row `r` satisfies the cube iff
    /// `r & mask == value`.
    pub(crate) fn row_masks(&self, n: usize) -> (u64, u64) {
        debug_assert!(n <= 64 && !self.bottom);
        let mut mask = 0u64;
        let mut value = 0u64;
        for lit in self.literals() {
            let shift = n - lit.var.index() as usize;
            mask |= 1 << shift;
            if lit.is_positive() {
                value |= 1 << shift;
            }
        }
        (mask, value)
    }

    fn width(&self) -> usize {
        self.words.len() / 2
    }

    fn fixed(&self) -> &[u64] {
        &self.words[..self.width()]
    }

    fn positive(&self) -> &[u64] {
        &self.words[self.width()..]
    }

    pub(crate) fn fixed_words(&self) -> &[u64] {
        self.fixed()
    }

    pub(crate) fn positive_words(&self) -> &[u64] {
        self.positive()
    }
}

// Folds the words into one value before hashing; equal cubes fold equally.
impl Hash for Cube {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let mut acc = self.words.len() as u64 ^ u64::from(self.bottom) << 63;
        for w in &self.words {
            acc = (acc.rotate_left(23) ^ w).wrapping_mul(0x9e37_79b9_7f4a_7c15);
        }
        state.write_u64(acc);
    }
}

impl fmt::Display for Cube {
    /// `A1 A2' A4`; the empty cube prints `1`, ⊥ prints `⊥`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bottom {
            return f.write_str("⊥");
        }
        if self.is_top() {
            return f.write_str("1");
        }
        for (i, lit) in self.literals().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{lit}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cube({self})")
    }
}

impl FromIterator<Literal> for Cube {
    fn from_iter<I: IntoIterator<Item = Literal>>(iter: I) -> Cube {
        Cube::from_literals(iter)
    }
}

fn set_bits(words: &[u64]) -> SetBits<&[u64]> {
    SetBits::new(words)
}

/// Set bits of one word, ascending.
struct WordBits(u64);

impl Iterator for WordBits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(tz)
    }
}

/// Iterates the indices of set bits, ascending.
pub(crate) struct SetBits<W> {
    words: W,
    word: usize,
    current: u64,
}

impl<W: AsRef<[u64]>> SetBits<W> {
    pub(crate) fn new(words: W) -> Self {
        let current = words.as_ref().first().copied().unwrap_or(0);
        SetBits {
            words,
            word: 0,
            current,
        }
    }
}

impl<W: AsRef<[u64]>> Iterator for SetBits<W> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        let words = self.words.as_ref();
        loop {
            if self.current != 0 {
                let tz = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word * 64 + tz);
            }
            self.word += 1;
            self.current = *words.get(self.word)?;
        }
    }
}
