//! Colors, color words and priority lists.
//!
//! A [`ColorWord`] names a node of a k-ary color tree by the sequence of edge
//! colors on its path from the root. Words are ordered lexicographically with
//! a proper prefix sorting before all of its extensions, which is exactly the
//! derived `Ord` of the underlying `Vec`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// An edge color, identified by its index in `0..k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Color(pub u32);

impl Color {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for Color {
    fn from(c: u32) -> Self {
        Color(c)
    }
}

/// A node of a color tree: the finite sequence of colors from the root.
///
/// The empty word is the root.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColorWord(Vec<Color>);

impl ColorWord {
    pub fn root() -> Self {
        ColorWord(Vec::new())
    }

    pub fn new(letters: Vec<Color>) -> Self {
        ColorWord(letters)
    }

    pub fn from_indices<I: IntoIterator<Item = u32>>(letters: I) -> Self {
        ColorWord(letters.into_iter().map(Color).collect())
    }

    pub fn letters(&self) -> &[Color] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<Color> {
        self.0.last().copied()
    }

    /// `self * ⟨c⟩`
    pub fn child(&self, c: Color) -> ColorWord {
        let mut letters = Vec::with_capacity(self.0.len() + 1);
        letters.extend_from_slice(&self.0);
        letters.push(c);
        ColorWord(letters)
    }

    pub fn parent(&self) -> Option<ColorWord> {
        if self.0.is_empty() {
            None
        } else {
            Some(ColorWord(self.0[..self.0.len() - 1].to_vec()))
        }
    }

    /// The prefix of length `len` (clamped to the word length).
    pub fn prefix(&self, len: usize) -> ColorWord {
        ColorWord(self.0[..len.min(self.0.len())].to_vec())
    }

    /// All prefixes of `self`, shortest first, including the empty word and `self`.
    pub fn prefixes(&self) -> impl Iterator<Item = ColorWord> + '_ {
        (0..=self.0.len()).map(move |l| ColorWord(self.0[..l].to_vec()))
    }

    pub fn is_prefix_of(&self, other: &ColorWord) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn is_proper_prefix_of(&self, other: &ColorWord) -> bool {
        self.0.len() < other.0.len() && self.is_prefix_of(other)
    }

    /// Prefix comparability: one of the two words extends the other.
    pub fn comparable(&self, other: &ColorWord) -> bool {
        self.is_prefix_of(other) || other.is_prefix_of(self)
    }
}

impl fmt::Display for ColorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(">")
    }
}

impl From<Vec<u32>> for ColorWord {
    fn from(v: Vec<u32>) -> Self {
        ColorWord::from_indices(v)
    }
}

/// Lexicographic comparison of two words; a proper prefix compares less than its extensions.
pub fn lex_compare(a: &ColorWord, b: &ColorWord) -> Ordering {
    a.cmp(b)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PriorityError {
    #[error("duplicate color {0} in priority list")]
    Duplicate(Color),
    #[error("color {color} out of range for k = {k}")]
    OutOfRange { color: Color, k: u32 },
}

/// A duplicate-free list of colors `⟨d₀, …, d_{h−1}⟩`, lowest priority first.
///
/// `d₀` is only used when the remaining colors cannot continue the visit; once
/// used it is rotated to the end, where it has the highest priority.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Color>", into = "Vec<Color>")]
pub struct PriorityList(Vec<Color>);

impl PriorityList {
    pub fn new(colors: Vec<Color>) -> Result<Self, PriorityError> {
        for (i, c) in colors.iter().enumerate() {
            if colors[..i].contains(c) {
                return Err(PriorityError::Duplicate(*c));
            }
        }
        Ok(PriorityList(colors))
    }

    /// Like [`PriorityList::new`] but also checks every color is below `k`.
    pub fn with_k(colors: Vec<Color>, k: u32) -> Result<Self, PriorityError> {
        if let Some(&color) = colors.iter().find(|c| c.0 >= k) {
            return Err(PriorityError::OutOfRange { color, k });
        }
        Self::new(colors)
    }

    pub fn from_indices<I: IntoIterator<Item = u32>>(colors: I) -> Result<Self, PriorityError> {
        Self::new(colors.into_iter().map(Color).collect())
    }

    /// `⟨0, 1, …, k−1⟩`
    pub fn standard(k: u32) -> Self {
        PriorityList((0..k).map(Color).collect())
    }

    pub fn colors(&self) -> &[Color] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, c: Color) -> bool {
        self.0.contains(&c)
    }

    /// The lowest-priority color `d₀`.
    pub fn lowest(&self) -> Option<Color> {
        self.0.first().copied()
    }

    /// `⟨d₁, …, d_{h−1}⟩`
    pub fn without_lowest(&self) -> PriorityList {
        PriorityList(self.0.iter().skip(1).copied().collect())
    }

    /// `⟨d₁, …, d_{h−1}, d₀⟩`
    pub fn rotated(&self) -> PriorityList {
        let mut v = self.0.clone();
        if !v.is_empty() {
            v.rotate_left(1);
        }
        PriorityList(v)
    }

    /// True when the list is a permutation of `0..k`.
    pub fn covers(&self, k: u32) -> bool {
        self.0.len() == k as usize && self.0.iter().all(|c| c.0 < k)
    }
}

impl TryFrom<Vec<Color>> for PriorityList {
    type Error = PriorityError;

    fn try_from(v: Vec<Color>) -> Result<Self, Self::Error> {
        PriorityList::new(v)
    }
}

impl From<PriorityList> for Vec<Color> {
    fn from(p: PriorityList) -> Self {
        p.0
    }
}
