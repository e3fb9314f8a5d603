//! Type-A Weyl groups as permutation groups.
//!
//! A [`WeylElement`] of `W(A_ℓ)` is a permutation of `{0, …, ℓ}` in one-line
//! notation; `s_i` swaps `i-1` and `i`. Simple indices are 1-based throughout.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rootsys::MAX_RANK;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    perm: Vec<u8>,
    length: usize,
}

fn inversions(perm: &[u8]) -> usize {
    let mut n = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                n += 1;
            }
        }
    }
    n
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement { perm: (0..=rank as u8).collect(), length: 0 }
    }

    pub fn from_perm(perm: Vec<u8>) -> Self {
        let length = inversions(&perm);
        WeylElement { perm, length }
    }

    /// `s_{w[0]} s_{w[1]} ⋯`
    pub fn from_word(rank: usize, word: &[usize]) -> Result<Self> {
        let mut perm: Vec<u8> = (0..=rank as u8).collect();
        for &i in word {
            if i == 0 || i > rank {
                return Err(Error::IndexOutOfRange { index: i, rank });
            }
            perm.swap(i - 1, i);
        }
        Ok(Self::from_perm(perm))
    }

    pub fn simple(rank: usize, i: usize) -> Result<Self> {
        Self::from_word(rank, &[i])
    }

    pub fn rank(&self) -> usize {
        self.perm.len() - 1
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn perm(&self) -> &[u8] {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Composition: `(self * other)(x) = self(other(x))`.
    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(self.rank(), other.rank(), "rank mismatch in Weyl product");
        Self::from_perm(other.perm.iter().map(|&x| self.perm[x as usize]).collect())
    }

    pub fn inverse(&self) -> WeylElement {
        let mut inv = vec![0u8; self.perm.len()];
        for (i, &x) in self.perm.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        WeylElement { perm: inv, length: self.length }
    }

    /// `s_i * self`
    pub fn left_mul_simple(&self, i: usize) -> WeylElement {
        let perm = self
            .perm
            .iter()
            .map(|&x| match x as usize {
                v if v == i - 1 => i as u8,
                v if v == i => (i - 1) as u8,
                _ => x,
            })
            .collect();
        Self::from_perm(perm)
    }

    /// `self * s_i`
    pub fn right_mul_simple(&self, i: usize) -> WeylElement {
        let mut perm = self.perm.clone();
        perm.swap(i - 1, i);
        Self::from_perm(perm)
    }

    /// `i` with `ℓ(s_i w) < ℓ(w)`.
    pub fn is_left_descent(&self, i: usize) -> bool {
        let pos = |v: usize| self.perm.iter().position(|&x| x as usize == v).unwrap();
        pos(i - 1) > pos(i)
    }

    /// `i` with `ℓ(w s_i) < ℓ(w)`.
    pub fn is_right_descent(&self, i: usize) -> bool {
        self.perm[i - 1] > self.perm[i]
    }

    /// Lexicographically least reduced word, stripping the smallest left
    /// descent at each step.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length);
        let mut w = self.clone();
        while !w.is_identity() {
            let i = (1..=w.rank()).find(|&i| w.is_left_descent(i)).unwrap();
            word.push(i);
            w = w.left_mul_simple(i);
        }
        word
    }

    /// Every reduced word, in lexicographic order.
    pub fn reduced_words(&self) -> Vec<Vec<usize>> {
        if self.is_identity() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in (1..=self.rank()).filter(|&i| self.is_left_descent(i)) {
            for mut tail in self.left_mul_simple(i).reduced_words() {
                tail.insert(0, i);
                out.push(tail);
            }
        }
        out
    }

    /// Subword criterion against the lexicographically least reduced word of `v`.
    pub fn bruhat_leq(&self, v: &WeylElement) -> bool {
        if self.length > v.length {
            return false;
        }
        if self.length == v.length {
            return self == v;
        }
        let word = v.reduced_word();
        let n = word.len();
        let rank = self.rank();
        (0u32..1 << n)
            .filter(|mask| mask.count_ones() as usize == self.length)
            .any(|mask| {
                let sub: Vec<usize> =
                    (0..n).filter(|k| mask & (1 << k) != 0).map(|k| word[k]).collect();
                WeylElement::from_word(rank, &sub).unwrap() == *self
            })
    }

    pub fn bruhat_lt(&self, v: &WeylElement) -> bool {
        self != v && self.bruhat_leq(v)
    }

    /// `S(v)`: the simple reflections occurring in a reduced word.
    pub fn support(&self) -> SimpleSubset {
        SimpleSubset::from_indices(self.rank(), self.reduced_word()).unwrap()
    }

    pub fn parse(rank: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "e" | "" => return Ok(Self::identity(rank)),
            "w0" => return Ok(longest_element(rank)),
            _ => {}
        }
        let word = s
            .split_whitespace()
            .map(|t| {
                t.trim_start_matches('s').parse::<usize>().map_err(|_| Error::Parse {
                    field: "w",
                    message: format!("bad simple index `{t}`"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_word(rank, &word).map_err(|e| Error::Parse { field: "w", message: e.to_string() })
    }

    /// `s1 s2`-style rendering, `e` for the identity.
    pub fn pretty(&self) -> String {
        if self.is_identity() {
            return "e".to_string();
        }
        self.reduced_word()
            .iter()
            .map(|i| format!("s{i}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Space-separated simple indices; `e` for the identity.
impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "e");
        }
        let word = self.reduced_word();
        for (k, i) in word.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl Serialize for WeylElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// A subset of the simple roots `{1, …, ℓ}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleSubset {
    rank: u8,
    mask: u32,
}

impl SimpleSubset {
    pub fn empty(rank: usize) -> Self {
        SimpleSubset { rank: rank as u8, mask: 0 }
    }

    pub fn full(rank: usize) -> Self {
        SimpleSubset { rank: rank as u8, mask: (1 << rank) - 1 }
    }

    pub fn from_mask(rank: usize, mask: u32) -> Self {
        debug_assert!(mask < 1 << rank);
        SimpleSubset { rank: rank as u8, mask }
    }

    pub fn from_indices(rank: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut mask = 0;
        for i in indices {
            if i == 0 || i > rank {
                return Err(Error::IndexOutOfRange { index: i, rank });
            }
            mask |= 1 << (i - 1);
        }
        Ok(SimpleSubset { rank: rank as u8, mask })
    }

    /// All `2^ℓ` subsets, ordered by mask.
    pub fn all(rank: usize) -> impl Iterator<Item = SimpleSubset> {
        (0u32..1 << rank).map(move |mask| SimpleSubset::from_mask(rank, mask))
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i <= self.rank() && self.mask & (1 << (i - 1)) != 0
    }

    pub fn indices(&self) -> Vec<usize> {
        (1..=self.rank()).filter(|&i| self.contains(i)).collect()
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.rank())
    }

    pub fn is_subset(&self, other: &SimpleSubset) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn parse(rank: usize, s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
        let indices = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>().map_err(|_| Error::Parse {
                    field: "subset",
                    message: format!("bad simple index `{t}`"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_indices(rank, indices)
    }
}

impl fmt::Display for SimpleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for SimpleSubset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.indices().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SimpleSubset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        // Rank is not recoverable from the index list alone; take the smallest
        // one that fits.
        let indices = Vec::<usize>::deserialize(deserializer)?;
        let rank = indices.iter().copied().max().unwrap_or(0).max(1);
        SimpleSubset::from_indices(rank, indices).map_err(serde::de::Error::custom)
    }
}

/// `w₀`, the reversal permutation.
pub fn longest_element(rank: usize) -> WeylElement {
    WeylElement::from_perm((0..=rank as u8).rev().collect())
}

/// Every element of `W(A_ℓ)`, ordered by length and then by reduced word.
pub fn all_elements(rank: usize) -> Vec<WeylElement> {
    assert!(rank <= MAX_RANK, "exhaustive enumeration is limited to rank {MAX_RANK}");
    generated_subgroup(&SimpleSubset::full(rank))
}

/// `W_I` by breadth-first search over the generators `s_i`, `i ∈ I`.
pub fn generated_subgroup(subset: &SimpleSubset) -> Vec<WeylElement> {
    let rank = subset.rank();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([WeylElement::identity(rank)]);
    seen.insert(WeylElement::identity(rank));
    while let Some(w) = queue.pop_front() {
        for i in subset.indices() {
            let next = w.right_mul_simple(i);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut all: Vec<WeylElement> = seen.into_iter().collect();
    all.sort_by_cached_key(|w| (w.length(), w.reduced_word()));
    all
}

/// `w_I`: reverses each maximal run of consecutive indices in `I`.
pub fn long_element(subset: &SimpleSubset) -> WeylElement {
    let rank = subset.rank();
    let mut perm: Vec<u8> = (0..=rank as u8).collect();
    let mut i = 1;
    while i <= rank {
        if subset.contains(i) {
            let start = i;
            while i <= rank && subset.contains(i) {
                i += 1;
            }
            perm[start - 1..i].reverse();
        } else {
            i += 1;
        }
    }
    WeylElement::from_perm(perm)
}

/// `W^J`: elements with no right descent in `J`, the shortest members of
/// their cosets `wW_J`.
pub fn min_coset_reps(subset: &SimpleSubset) -> Vec<WeylElement> {
    all_elements(subset.rank())
        .into_iter()
        .filter(|w| subset.indices().iter().all(|&j| !w.is_right_descent(j)))
        .collect()
}

/// `w_{0,J}`, the longest element of `W^J`.
pub fn longest_coset_rep(subset: &SimpleSubset) -> WeylElement {
    min_coset_reps(subset)
        .into_iter()
        .max_by_key(|w| w.length())
        .expect("W^J contains the identity")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParabolicBound {
    pub subset: SimpleSubset,
    pub element: WeylElement,
    /// No other bound `w_K ≤ v` lies strictly above `w_I` in Bruhat order.
    pub maximal: bool,
    /// `w_I` has the greatest length among all bounds.
    pub longest: bool,
}

/// Every `I` with `w_I ≤ v`, flagging those whose `w_I` is Bruhat-maximal
/// among them and those of greatest length.
pub fn parabolic_lower_bounds(v: &WeylElement) -> Vec<ParabolicBound> {
    let below: Vec<(SimpleSubset, WeylElement)> = SimpleSubset::all(v.rank())
        .map(|s| (s, long_element(&s)))
        .filter(|(_, w)| w.bruhat_leq(v))
        .collect();
    let top = below.iter().map(|(_, w)| w.length()).max().unwrap_or(0);
    below
        .iter()
        .map(|(s, w)| ParabolicBound {
            subset: *s,
            element: w.clone(),
            maximal: !below.iter().any(|(_, other)| w.bruhat_lt(other)),
            longest: w.length() == top,
        })
        .collect()
}
