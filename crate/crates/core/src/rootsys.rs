//! Root-system combinatorics.
//!
//! Weights are stored in the fundamental-weight basis (`coords[i] = <λ, α_i^∨>`),
//! roots in the simple-root basis. The two only meet through the Cartan matrix.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::WeylElement;

/// Largest rank whose Weyl group is enumerated exhaustively.
pub const MAX_RANK: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TypeLetter {
    A,
}

impl fmt::Display for TypeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeLetter::A => write!(f, "A"),
        }
    }
}

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVec(pub Vec<i64>);

impl RootVec {
    pub fn simple(rank: usize, index: usize) -> Self {
        let mut coeffs = vec![0; rank];
        coeffs[index - 1] = 1;
        RootVec(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c != 0)
    }

    pub fn neg(&self) -> Self {
        RootVec(self.0.iter().map(|c| -c).collect())
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Simple index `i` when this is `α_i`.
    pub fn simple_index(&self) -> Option<usize> {
        let mut found = None;
        for (i, &c) in self.0.iter().enumerate() {
            match c {
                0 => {}
                1 if found.is_none() => found = Some(i + 1),
                _ => return None,
            }
        }
        found
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVec(pub Vec<i64>);

impl WeightVec {
    pub fn new(coords: impl Into<Vec<i64>>) -> Self {
        WeightVec(coords.into())
    }

    pub fn zero(rank: usize) -> Self {
        WeightVec(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn checked_add(&self, other: &WeightVec) -> WeightVec {
        WeightVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("weight coordinate overflow"))
                .collect(),
        )
    }

    /// `self + k·other`
    pub fn add_scaled(&self, k: i64, other: &WeightVec) -> WeightVec {
        WeightVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| {
                    b.checked_mul(k)
                        .and_then(|kb| a.checked_add(kb))
                        .expect("weight coordinate overflow")
                })
                .collect(),
        )
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystemData {
    pub type_letter: TypeLetter,
    pub rank: usize,
    /// `cartan[i][j] = <α_i, α_j^∨>`
    pub cartan: Vec<Vec<i64>>,
    /// `(α_i, α_i) / 2` for each simple root.
    half_norms: Vec<i64>,
    /// Sorted by height, then lexicographically.
    pub positive_roots: Vec<RootVec>,
    pub coxeter_number: i64,
}

pub fn build_root_system(type_letter: TypeLetter, rank: usize) -> Result<RootSystemData> {
    if rank == 0 || rank > MAX_RANK {
        return Err(Error::UnsupportedRank { rank, max: MAX_RANK });
    }
    let (cartan, half_norms) = match type_letter {
        TypeLetter::A => {
            let cartan = (0..rank)
                .map(|i| {
                    (0..rank)
                        .map(|j| match i.abs_diff(j) {
                            0 => 2,
                            1 => -1,
                            _ => 0,
                        })
                        .collect()
                })
                .collect();
            (cartan, vec![1; rank])
        }
    };
    let mut rs = RootSystemData {
        type_letter,
        rank,
        cartan,
        half_norms,
        positive_roots: Vec::new(),
        coxeter_number: 0,
    };
    rs.positive_roots = rs.generate_positive_roots();
    let highest = rs.positive_roots.last().expect("rank >= 1").height();
    rs.coxeter_number = highest + 1;
    Ok(rs)
}

impl RootSystemData {
    pub fn parse_type(s: &str) -> Result<RootSystemData> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = match chars.next() {
            Some('A') | Some('a') => TypeLetter::A,
            _ => return Err(Error::UnsupportedType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnsupportedType(s.to_string()))?;
        build_root_system(letter, rank)
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.type_letter, self.rank)
    }

    /// `<β, α_i^∨>` for β in simple-root coordinates.
    fn root_pairing_simple(&self, beta: &[i64], i: usize) -> i64 {
        beta.iter()
            .enumerate()
            .map(|(j, &b)| b * self.cartan[j][i])
            .sum()
    }

    /// Positive roots by closure under simple root strings, processed by height.
    fn generate_positive_roots(&self) -> Vec<RootVec> {
        let rank = self.rank;
        let mut roots: Vec<RootVec> = (1..=rank).map(|i| RootVec::simple(rank, i)).collect();
        let mut layer = roots.clone();
        while !layer.is_empty() {
            let mut next: Vec<RootVec> = Vec::new();
            for beta in &layer {
                for i in 0..rank {
                    if beta.simple_index() == Some(i + 1) {
                        continue;
                    }
                    // p = how far down the α_i-string through β reaches.
                    let mut down = 0;
                    loop {
                        let mut c = beta.0.clone();
                        c[i] -= down + 1;
                        if roots.contains(&RootVec(c)) {
                            down += 1;
                        } else {
                            break;
                        }
                    }
                    let up = down - self.root_pairing_simple(&beta.0, i);
                    if up > 0 {
                        let mut c = beta.0.clone();
                        c[i] += 1;
                        let candidate = RootVec(c);
                        if !roots.contains(&candidate) && !next.contains(&candidate) {
                            next.push(candidate);
                        }
                    }
                }
            }
            roots.extend(next.iter().cloned());
            layer = next;
        }
        roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0)));
        roots
    }

    pub fn is_root(&self, alpha: &RootVec) -> bool {
        alpha.0.len() == self.rank
            && (self.positive_roots.contains(alpha) || self.positive_roots.contains(&alpha.neg()))
    }

    pub fn all_roots(&self) -> Vec<RootVec> {
        let mut all = self.positive_roots.clone();
        all.extend(self.positive_roots.iter().map(RootVec::neg));
        all
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank {
            Err(Error::IndexOutOfRange { index: i, rank: self.rank })
        } else {
            Ok(())
        }
    }

    pub fn check_weight(&self, lambda: &WeightVec) -> Result<()> {
        if lambda.rank() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: lambda.rank() });
        }
        Ok(())
    }

    /// `<λ, α^∨>` with `α^∨ = 2α/(α,α)` expanded in simple coroots.
    pub fn pairing(&self, lambda: &WeightVec, alpha: &RootVec) -> Result<i64> {
        self.check_weight(lambda)?;
        if !self.is_root(alpha) {
            return Err(Error::NotARoot(alpha.0.clone()));
        }
        // (λ, α_i) = λ_i d_i and (α, α)/2 = Σ a_i a_j (α_i, α_j) / 2.
        let lambda_dot: i64 = (0..self.rank)
            .map(|i| alpha.0[i] * lambda.0[i] * self.half_norms[i])
            .sum();
        let mut norm2 = 0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                norm2 += alpha.0[i] * alpha.0[j] * self.cartan[i][j] * self.half_norms[j];
            }
        }
        let half_norm = norm2 / 2;
        debug_assert_eq!(lambda_dot % half_norm, 0);
        Ok(lambda_dot / half_norm)
    }

    pub fn rho(&self) -> WeightVec {
        WeightVec(vec![1; self.rank])
    }

    /// The simple root `α_i` written in fundamental weights.
    pub fn simple_root_weight(&self, i: usize) -> WeightVec {
        WeightVec(self.cartan[i - 1].clone())
    }

    /// `s_i(λ) = λ - <λ, α_i^∨> α_i`
    pub fn reflect_weight(&self, lambda: &WeightVec, i: usize) -> WeightVec {
        let m = lambda.0[i - 1];
        lambda.add_scaled(-m, &self.simple_root_weight(i))
    }

    /// `s_i(β) = β - <β, α_i^∨> α_i`
    pub fn reflect_root(&self, beta: &RootVec, i: usize) -> RootVec {
        let m = self.root_pairing_simple(&beta.0, i - 1);
        let mut c = beta.0.clone();
        c[i - 1] -= m;
        RootVec(c)
    }

    /// `w(α)`, applying the reflections of a reduced word right to left.
    pub fn act_on_root(&self, w: &WeylElement, alpha: &RootVec) -> Result<RootVec> {
        if !self.is_root(alpha) {
            return Err(Error::NotARoot(alpha.0.clone()));
        }
        Ok(w.reduced_word()
            .iter()
            .rev()
            .fold(alpha.clone(), |beta, &i| self.reflect_root(&beta, i)))
    }

    /// Positive roots in the span of the simple roots indexed by `indices`.
    pub fn positive_roots_in(&self, mask: impl Fn(usize) -> bool) -> Vec<RootVec> {
        self.positive_roots
            .iter()
            .filter(|r| r.0.iter().enumerate().all(|(i, &c)| c == 0 || mask(i + 1)))
            .cloned()
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(rank: usize) -> RootSystemData {
        build_root_system(TypeLetter::A, rank).unwrap()
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(a(1).positive_roots, vec![RootVec(vec![1])]);
        assert_eq!(
            a(2).positive_roots,
            vec![RootVec(vec![1, 0]), RootVec(vec![0, 1]), RootVec(vec![1, 1])]
        );
        for l in 1..=4 {
            let rs = a(l);
            assert_eq!(rs.positive_roots.len(), l * (l + 1) / 2);
            assert!(rs.positive_roots.iter().all(RootVec::is_positive));
            assert_eq!(rs.coxeter_number, l as i64 + 1);
            for i in 0..l {
                assert_eq!(rs.cartan[i][i], 2);
            }
        }
    }

    #[test]
    fn unsupported_rank_is_rejected() {
        assert!(matches!(
            build_root_system(TypeLetter::A, 0),
            Err(Error::UnsupportedRank { .. })
        ));
        assert!(build_root_system(TypeLetter::A, 5).is_err());
        assert!(RootSystemData::parse_type("B2").is_err());
        assert!(RootSystemData::parse_type("Ax").is_err());
        assert_eq!(RootSystemData::parse_type("A3").unwrap().rank, 3);
    }

    #[test]
    fn pairing_examples() {
        let rs = a(2);
        let alpha = RootVec(vec![1, 0]);
        let high = RootVec(vec![1, 1]);
        assert_eq!(rs.pairing(&WeightVec::new([1, 0]), &alpha).unwrap(), 1);
        assert_eq!(rs.pairing(&rs.rho(), &high).unwrap(), 2);
        for p in [2i64, 3, 5, 7] {
            let lambda = WeightVec::new([p - 1, p - 1]);
            assert_eq!(rs.pairing(&lambda, &high).unwrap(), 2 * p - 2);
        }
        assert_eq!(
            rs.pairing(&WeightVec::new([1, 0]), &RootVec(vec![2, 1])),
            Err(Error::NotARoot(vec![2, 1]))
        );
        assert_eq!(rs.pairing(&WeightVec::new([1, 0]), &high.neg()).unwrap(), -1);
    }

    #[test]
    fn rho_pairs_to_one() {
        for l in 1..=4 {
            let rs = a(l);
            for i in 1..=l {
                assert_eq!(rs.pairing(&rs.rho(), &RootVec::simple(l, i)).unwrap(), 1);
            }
        }
    }

    #[test]
    fn reflection_examples() {
        let rs = a(2);
        assert_eq!(rs.reflect_weight(&WeightVec::new([1, 0]), 1), WeightVec::new([-1, 1]));
        assert_eq!(rs.reflect_weight(&WeightVec::new([0, 1]), 2), WeightVec::new([1, -1]));
        assert_eq!(rs.reflect_weight(&WeightVec::new([1, 0]), 2), WeightVec::new([1, 0]));
        assert_eq!(rs.reflect_weight(&WeightVec::new([0, 7]), 1), WeightVec::new([0, 7]));
    }

    #[test]
    fn act_on_root_examples() {
        let rs = a(2);
        let alpha = RootVec(vec![1, 0]);
        let beta = RootVec(vec![0, 1]);
        let e = WeylElement::identity(2);
        let s1 = WeylElement::from_word(2, &[1]).unwrap();
        assert_eq!(rs.act_on_root(&e, &alpha).unwrap(), alpha);
        assert_eq!(rs.act_on_root(&s1, &beta).unwrap(), RootVec(vec![1, 1]));
        assert_eq!(rs.act_on_root(&s1, &alpha).unwrap(), alpha.neg());
    }
}
