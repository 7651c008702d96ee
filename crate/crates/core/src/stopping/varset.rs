//! Fixed-universe sets of variable indices, stored as packed 64-bit words.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

/// A set of variable indices over a fixed universe `[0, universe)`.
///
/// The universe is part of the value: binary operations insist both
/// operands share it, and [`VarSet::complement`] is taken against it.
/// Iteration is always in ascending index order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarSet {
    universe: usize,
    words: Vec<u64>,
}

impl VarSet {
    /// The empty set over `[0, universe)`.
    pub fn empty(universe: usize) -> Self {
        let n_words = universe.div_ceil(WORD_BITS);
        VarSet {
            universe,
            words: vec![0; n_words],
        }
    }

    /// The full set `{0, .., universe-1}`.
    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for w in &mut s.words {
            *w = u64::MAX;
        }
        s.mask_tail();
        s
    }

    /// Builds a set from indices, rejecting any index outside the universe.
    pub fn from_indices<I: IntoIterator<Item = usize>>(
        universe: usize,
        indices: I,
    ) -> Result<Self> {
        let mut s = Self::empty(universe);
        for i in indices {
            if i >= universe {
                return Err(Error::OutOfRange {
                    name: "variable index",
                    value: i,
                    min: 0,
                    max: universe.saturating_sub(1),
                });
            }
            s.words[i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
        }
        Ok(s)
    }

    /// Parses the text form: comma-separated indices, e.g. `"0,3,7"`.
    /// An empty (or all-whitespace) string is the empty set.
    pub fn parse(universe: usize, text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(Self::empty(universe));
        }
        let mut indices = Vec::new();
        for tok in trimmed.split(',') {
            let tok = tok.trim();
            let i: usize = tok
                .parse()
                .map_err(|_| Error::Invalid(format!("bad index {tok:?} in variable set")))?;
            indices.push(i);
        }
        Self::from_indices(universe, indices)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.universe);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(
            i < self.universe,
            "index {i} outside universe {}",
            self.universe
        );
        self.words[i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(
            i < self.universe,
            "index {i} outside universe {}",
            self.universe
        );
        self.words[i / WORD_BITS] &= !(1u64 << (i % WORD_BITS));
    }

    /// Set union. Panics if the universes differ.
    pub fn union(&self, other: &VarSet) -> VarSet {
        self.check_same_universe(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        VarSet {
            universe: self.universe,
            words,
        }
    }

    /// Set intersection. Panics if the universes differ.
    pub fn intersection(&self, other: &VarSet) -> VarSet {
        self.check_same_universe(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        VarSet {
            universe: self.universe,
            words,
        }
    }

    /// Complement against the universe.
    pub fn complement(&self) -> VarSet {
        let mut s = VarSet {
            universe: self.universe,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.mask_tail();
        s
    }

    /// True iff every member of `self` is in `other`.
    pub fn is_subset(&self, other: &VarSet) -> bool {
        self.check_same_universe(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    pub fn members(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Canonical text form: comma-separated ascending indices.
    pub fn to_text(&self) -> String {
        fmt_indices(self.iter())
    }

    fn check_same_universe(&self, other: &VarSet) {
        assert_eq!(
            self.universe, other.universe,
            "variable sets over different universes"
        );
    }

    fn mask_tail(&mut self) {
        let r = self.universe % WORD_BITS;
        if r != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << r) - 1;
            }
        }
    }
}

/// Formats indices as the comma-separated text form shared by all CLI output.
pub fn fmt_indices<I: IntoIterator<Item = usize>>(indices: I) -> String {
    let mut out = String::new();
    for (k, i) in indices.into_iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        out.push_str(&i.to_string());
    }
    out
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VarSet{{{}}}/{}", self.to_text(), self.universe)
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Serialize for VarSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_text())
    }
}
