//! Index compositions and their iterated-integral word encoding.
//!
//! A [`Composition`] is the argument of a (possibly alternating) multiple
//! zeta value: an ordered list of exponents, innermost summation variable
//! first, where each entry may carry a bar marking the sign `(-1)^{k_j}` on
//! its summation variable. Unbarred admissible compositions correspond
//! one-to-one with words over the alphabet `{X, Y}` via the Kontsevich
//! encoding (`Y` for `dt/(1-t)`, `X` for `dt/t`), and duality is
//! reverse-and-swap on those words.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// One exponent of a composition, with its alternation flag.
///
/// `barred == true` means the corresponding summation variable `k_j`
/// contributes a factor `(-1)^{k_j}` to each term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexEntry {
    exponent: u32,
    barred: bool,
}

impl IndexEntry {
    /// A plain (unbarred) entry. Panics if `exponent == 0`.
    pub fn plain(exponent: u32) -> Self {
        Self::new(exponent, false)
    }

    /// A barred entry. Panics if `exponent == 0`.
    pub fn barred(exponent: u32) -> Self {
        Self::new(exponent, true)
    }

    pub fn new(exponent: u32, barred: bool) -> Self {
        assert!(exponent >= 1, "index entry exponent must be positive");
        Self { exponent, barred }
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn is_barred(&self) -> bool {
        self.barred
    }
}

impl fmt::Display for IndexEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.exponent)?;
        if self.barred {
            write!(f, "~")?;
        }
        Ok(())
    }
}

/// Weight, depth and height of a composition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Stats {
    pub weight: u32,
    pub depth: u32,
    pub height: u32,
}

/// Errors for composition-level operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompositionError {
    /// A composition must contain at least one entry.
    Empty,
    /// Barred entries have no iterated-integral word in this encoding.
    BarredNotEncodable,
    /// The word does not start with `Y` and end with `X`.
    NotAdmissibleWord,
}

impl fmt::Display for CompositionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompositionError::Empty => write!(f, "composition must be nonempty"),
            CompositionError::BarredNotEncodable => {
                write!(f, "barred entries cannot be encoded as words")
            }
            CompositionError::NotAdmissibleWord => {
                write!(f, "word must begin with Y and end with X")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for CompositionError {}

/// The argument of `zeta`/`zeta*`: an ordered, nonempty exponent list.
///
/// Entry 0 is the innermost summation variable, matching
/// `zeta(a_1, ..., a_r)` with `k_1 < ... < k_r`; the convergence constraint
/// therefore sits on the *last* entry.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    entries: Vec<IndexEntry>,
}

impl Composition {
    pub fn new(entries: Vec<IndexEntry>) -> Result<Self, CompositionError> {
        if entries.is_empty() {
            return Err(CompositionError::Empty);
        }
        Ok(Self { entries })
    }

    /// Convenience constructor for unbarred compositions.
    /// Panics on empty input or a zero exponent.
    pub fn plain(exponents: &[u32]) -> Self {
        assert!(!exponents.is_empty(), "composition must be nonempty");
        Self {
            entries: exponents.iter().map(|&e| IndexEntry::plain(e)).collect(),
        }
    }

    /// `({1}^m, tail)` — the height-one shape used throughout.
    pub fn height_one(m: u32, tail: u32) -> Self {
        let mut entries = Vec::with_capacity(m as usize + 1);
        for _ in 0..m {
            entries.push(IndexEntry::plain(1));
        }
        entries.push(IndexEntry::plain(tail));
        Self { entries }
    }

    pub fn entries(&self) -> &[IndexEntry] {
        &self.entries
    }

    pub fn depth(&self) -> u32 {
        self.entries.len() as u32
    }

    pub fn last(&self) -> IndexEntry {
        *self.entries.last().expect("composition is nonempty")
    }

    /// The nested series converges iff the outermost exponent is at least 2
    /// or the outermost variable alternates.
    pub fn is_admissible(&self) -> bool {
        let last = self.last();
        last.exponent() >= 2 || last.is_barred()
    }

    pub fn has_bars(&self) -> bool {
        self.entries.iter().any(|e| e.is_barred())
    }

    pub fn stats(&self) -> Stats {
        let weight = self.entries.iter().map(|e| e.exponent()).sum();
        let depth = self.depth();
        let height = self.entries.iter().filter(|e| e.exponent() > 1).count() as u32;
        Stats {
            weight,
            depth,
            height,
        }
    }

    /// Kontsevich encoding `Y X^{a_1 - 1} Y X^{a_2 - 1} ...`; the word length
    /// equals the weight. Only unbarred compositions have this form.
    pub fn encode_word(&self) -> Result<Word, CompositionError> {
        if self.has_bars() {
            return Err(CompositionError::BarredNotEncodable);
        }
        if !self.is_admissible() {
            return Err(CompositionError::NotAdmissibleWord);
        }
        let mut letters = Vec::with_capacity(self.stats().weight as usize);
        for entry in &self.entries {
            letters.push(Letter::Y);
            for _ in 1..entry.exponent() {
                letters.push(Letter::X);
            }
        }
        Ok(Word { letters })
    }

    /// Duality: reverse the encoding word, swap its letters, decode.
    /// An involution that preserves weight.
    pub fn dual(&self) -> Result<Composition, CompositionError> {
        let word = self.encode_word()?;
        word.reversed_swapped().decode()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for entry in &self.entries {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{entry}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parse error for the textual composition syntax.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseCompositionError {
    message: String,
}

impl ParseCompositionError {
    fn new(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseCompositionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid composition: {}", self.message)
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ParseCompositionError {}

impl FromStr for Composition {
    type Err = ParseCompositionError;

    /// Grammar: `INT("~")? ("," INT("~")?)*`, whitespace ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut entries = Vec::new();
        for raw in s.split(',') {
            let piece: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
            if piece.is_empty() {
                return Err(ParseCompositionError::new("empty entry"));
            }
            let (digits, barred) = match piece.strip_suffix('~') {
                Some(rest) => (rest, true),
                None => (piece.as_str(), false),
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(ParseCompositionError::new("entries must be positive integers"));
            }
            let exponent: u32 = digits
                .parse()
                .map_err(|_| ParseCompositionError::new("exponent out of range"))?;
            if exponent == 0 {
                return Err(ParseCompositionError::new("exponents must be at least 1"));
            }
            entries.push(IndexEntry::new(exponent, barred));
        }
        Composition::new(entries).map_err(|_| ParseCompositionError::new("empty composition"))
    }
}

/// Letters of the iterated-integral alphabet.
///
/// `Y` encodes `dt/(1-t)`, `X` encodes `dt/t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn swapped(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }
}

/// A word over `{X, Y}`; position 0 is the innermost integration variable.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    pub fn empty() -> Self {
        Self {
            letters: Vec::new(),
        }
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

    /// Words of admissible unbarred compositions begin with `Y` and end
    /// with `X`.
    pub fn is_admissible(&self) -> bool {
        self.letters.first() == Some(&Letter::Y) && self.letters.last() == Some(&Letter::X)
    }

    pub fn reversed_swapped(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.swapped()).collect(),
        }
    }

    /// Inverse of [`Composition::encode_word`].
    pub fn decode(&self) -> Result<Composition, CompositionError> {
        if !self.is_admissible() {
            return Err(CompositionError::NotAdmissibleWord);
        }
        let mut entries = Vec::new();
        let mut current: Option<u32> = None;
        for &letter in &self.letters {
            match letter {
                Letter::Y => {
                    if let Some(exp) = current.take() {
                        entries.push(IndexEntry::plain(exp));
                    }
                    current = Some(1);
                }
                Letter::X => {
                    // is_admissible guarantees a leading Y.
                    *current.as_mut().expect("word starts with Y") += 1;
                }
            }
        }
        if let Some(exp) = current {
            entries.push(IndexEntry::plain(exp));
        }
        Composition::new(entries)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for letter in &self.letters {
            match letter {
                Letter::X => write!(f, "X")?,
                Letter::Y => write!(f, "Y")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = ParseCompositionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut letters = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                'X' | 'x' => letters.push(Letter::X),
                'Y' | 'y' => letters.push(Letter::Y),
                c if c.is_whitespace() => {}
                _ => return Err(ParseCompositionError::new("words use letters X and Y only")),
            }
        }
        Ok(Word { letters })
    }
}
