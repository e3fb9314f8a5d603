//! The character ring `ℤ[X(T)]` and isobaric Demazure operators.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystemData, WeightVec};
use crate::weyl::WeylElement;

/// A finite integer combination of weights `Σ m_μ e^μ`. Zero multiplicities
/// are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Character {
    terms: BTreeMap<WeightVec, i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTerm {
    pub weight: Vec<i64>,
    pub mult: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct CharacterRepr {
    terms: Vec<CharacterTerm>,
}

impl Character {
    pub fn zero() -> Self {
        Character::default()
    }

    pub fn monomial(mu: WeightVec) -> Self {
        let mut c = Character::zero();
        c.add_term(mu, 1);
        c
    }

    pub fn add_term(&mut self, mu: WeightVec, mult: i64) {
        if mult == 0 {
            return;
        }
        match self.terms.entry(mu) {
            Entry::Vacant(slot) => {
                slot.insert(mult);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get().checked_add(mult).expect("multiplicity overflow");
                if sum == 0 {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&mut self, other: &Character) {
        for (mu, &m) in &other.terms {
            self.add_term(mu.clone(), m);
        }
    }

    pub fn multiplicity(&self, mu: &WeightVec) -> i64 {
        self.terms.get(mu).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeightVec, i64)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of multiplicities.
    pub fn dimension(&self) -> i64 {
        self.terms
            .values()
            .try_fold(0i64, |acc, &m| acc.checked_add(m))
            .expect("dimension overflow")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("characters always serialize")
    }
}

impl Serialize for Character {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CharacterRepr {
            terms: self
                .terms
                .iter()
                .map(|(w, &m)| CharacterTerm { weight: w.0.clone(), mult: m })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Character {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = CharacterRepr::deserialize(deserializer)?;
        let mut c = Character::zero();
        for t in repr.terms {
            c.add_term(WeightVec(t.weight), t.mult);
        }
        Ok(c)
    }
}

/// `D_i` on a single monomial `e^μ`, with `m = <μ, α_i^∨>`:
/// `m ≥ 0` gives the string `e^μ + e^{μ-α_i} + … + e^{μ-mα_i}`,
/// `m = -1` gives zero, and `m ≤ -2` gives `-(e^{μ+α_i} + … + e^{μ+(-m-1)α_i})`.
fn demazure_monomial(rs: &RootSystemData, mu: &WeightVec, i: usize, mult: i64, out: &mut Character) {
    let alpha = rs.simple_root_weight(i);
    let m = mu.coords()[i - 1];
    if m >= 0 {
        for k in 0..=m {
            out.add_term(mu.add_scaled(-k, &alpha), mult);
        }
    } else if m <= -2 {
        for k in 1..=(-m - 1) {
            out.add_term(mu.add_scaled(k, &alpha), -mult);
        }
    }
}

pub fn demazure_step(rs: &RootSystemData, f: &Character, i: usize) -> Result<Character> {
    rs.check_index(i)?;
    let mut out = Character::zero();
    for (mu, m) in f.terms() {
        rs.check_weight(mu)?;
        demazure_monomial(rs, mu, i, m, &mut out);
    }
    Ok(out)
}

/// `D_{γ_1} ⋯ D_{γ_n} e^λ` along an explicit word (applied right to left).
pub fn demazure_along_word(rs: &RootSystemData, word: &[usize], lambda: &WeightVec) -> Result<Character> {
    rs.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    word.iter()
        .rev()
        .try_fold(Character::monomial(lambda.clone()), |f, &i| demazure_step(rs, &f, i))
}

/// `ch H⁰(w, λ)`, computed along the lexicographically least reduced word of `w`.
pub fn demazure_character(rs: &RootSystemData, w: &WeylElement, lambda: &WeightVec) -> Result<Character> {
    if w.rank() != rs.rank {
        return Err(Error::RankMismatch { expected: rs.rank, found: w.rank() });
    }
    demazure_along_word(rs, &w.reduced_word(), lambda)
}

pub fn dimension(f: &Character) -> i64 {
    f.dimension()
}

/// Closed form `(λ₂+1)(2λ₁+λ₂+2)/2` for `dim H⁰(s_α s_β, λ)` in type `A₂`.
pub fn a2_demazure_dim_formula(lambda: &WeightVec) -> Result<i64> {
    if lambda.rank() != 2 {
        return Err(Error::RankMismatch { expected: 2, found: lambda.rank() });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    let (l1, l2) = (lambda.0[0], lambda.0[1]);
    let prod = (l2 + 1)
        .checked_mul(2 * l1 + l2 + 2)
        .expect("dimension overflow");
    Ok(prod / 2)
}
