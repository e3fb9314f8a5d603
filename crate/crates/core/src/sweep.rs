//! Exhaustive sweeps over `(w, λ, p)` grids.
//!
//! With the `parallel` feature (default) sweeps fan out over rayon; without
//! it they run on plain iterators. Results come back in grid order either way.

use serde::Serialize;

use crate::charring::{a2_demazure_dim_formula, demazure_along_word, demazure_character};
use crate::error::Result;
use crate::rootsys::{RootSystemData, WeightVec};
use crate::supports::{
    concrete_support, g_saturate, parabolic_bounds, saturation_violations, Classification, OrbitLabel,
    PairOrder, SaturationViolation,
};
use crate::weyl::{all_elements, long_element, SimpleSubset, WeylElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

/// Order-preserving map over `items`.
pub fn map_ordered<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        Execution::Sequential => items.iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
    }
}

fn flatten_results<R>(chunks: Vec<Result<Vec<R>>>) -> Result<Vec<R>> {
    let mut out = Vec::new();
    for c in chunks {
        out.extend(c?);
    }
    Ok(out)
}

/// Dominant weights with every coordinate in `0..=lmax`, lexicographic.
pub fn dominant_grid(rank: usize, lmax: i64) -> Vec<WeightVec> {
    let mut grid = vec![Vec::new()];
    for _ in 0..rank {
        grid = grid
            .into_iter()
            .flat_map(|prefix: Vec<i64>| {
                (0..=lmax).map(move |c| {
                    let mut next = prefix.clone();
                    next.push(c);
                    next
                })
            })
            .collect();
    }
    grid.into_iter().map(WeightVec).collect()
}

fn grid_with_primes(rank: usize, lmax: i64, primes: &[u64]) -> Vec<(WeightVec, u64)> {
    let grid = dominant_grid(rank, lmax);
    primes
        .iter()
        .flat_map(|&p| grid.iter().map(move |l| (l.clone(), p)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridEntry {
    pub w: WeylElement,
    pub lambda: WeightVec,
    pub p: u64,
    pub classification: Classification,
}

/// Concrete classification of every `(w, λ, p)` (rank ≤ 2).
pub fn classification_grid(
    rs: &RootSystemData,
    lmax: i64,
    primes: &[u64],
    exec: Execution,
) -> Result<Vec<GridEntry>> {
    let elements = all_elements(rs.rank);
    let cells = grid_with_primes(rs.rank, lmax, primes);
    flatten_results(map_ordered(exec, &cells, |(lambda, p)| {
        elements
            .iter()
            .map(|w| {
                Ok(GridEntry {
                    w: w.clone(),
                    lambda: lambda.clone(),
                    p: *p,
                    classification: concrete_support(rs, w, lambda, *p)?,
                })
            })
            .collect()
    }))
}

pub fn saturation_sweep(
    rs: &RootSystemData,
    lmax: i64,
    primes: &[u64],
    order: PairOrder,
    exec: Execution,
) -> Result<Vec<SaturationViolation>> {
    let cells = grid_with_primes(rs.rank, lmax, primes);
    flatten_results(map_ordered(exec, &cells, |(lambda, p)| {
        saturation_violations(rs, *p, lambda, order)
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SandwichViolation {
    pub v: WeylElement,
    pub lambda: WeightVec,
    pub p: u64,
    pub lower: OrbitLabel,
    pub actual: OrbitLabel,
    pub upper: Option<OrbitLabel>,
}

/// Cases where `lower ≤ G·V(v) ≤ upper` fails.
pub fn sandwich_sweep(
    rs: &RootSystemData,
    lmax: i64,
    primes: &[u64],
    exec: Execution,
) -> Result<Vec<SandwichViolation>> {
    let elements = all_elements(rs.rank);
    let cells = grid_with_primes(rs.rank, lmax, primes);
    flatten_results(map_ordered(exec, &cells, |(lambda, p)| {
        let mut out = Vec::new();
        for v in &elements {
            let bounds = parabolic_bounds(rs, v, lambda, *p)?;
            let actual = g_saturate(concrete_support(rs, v, lambda, *p)?.variety);
            let upper_ok = bounds.upper.is_some_and(|u| actual <= u);
            if !(bounds.lower <= actual && upper_ok) {
                out.push(SandwichViolation {
                    v: v.clone(),
                    lambda: lambda.clone(),
                    p: *p,
                    lower: bounds.lower,
                    actual,
                    upper: bounds.upper,
                });
            }
        }
        Ok(out)
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionMismatch {
    pub w: WeylElement,
    pub lambda: WeightVec,
    pub operator: i64,
    pub closed_form: i64,
}

/// `(λ₁+1)(λ₂+1)(λ₁+λ₂+2)/2`
fn weyl_dimension_a2(lambda: &WeightVec) -> i64 {
    let (a, b) = (lambda.0[0], lambda.0[1]);
    (a + 1) * (b + 1) * (a + b + 2) / 2
}

/// Demazure dimensions in `A₂` against closed forms: `s_α s_β` against the
/// length-two formula, `w₀` against the Weyl dimension formula.
pub fn dimension_sweep(rs: &RootSystemData, lmax: i64, exec: Execution) -> Result<Vec<DimensionMismatch>> {
    let sab = WeylElement::from_word(2, &[1, 2])?;
    let w0 = long_element(&SimpleSubset::full(2));
    let grid = dominant_grid(2, lmax);
    flatten_results(map_ordered(exec, &grid, |lambda| {
        let mut out = Vec::new();
        for (w, closed_form) in [
            (&sab, a2_demazure_dim_formula(lambda)?),
            (&w0, weyl_dimension_a2(lambda)),
        ] {
            let operator = demazure_character(rs, w, lambda)?.dimension();
            if operator != closed_form {
                out.push(DimensionMismatch { w: w.clone(), lambda: lambda.clone(), operator, closed_form });
            }
        }
        Ok(out)
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WordMismatch {
    pub w: WeylElement,
    pub lambda: WeightVec,
    pub word: Vec<usize>,
}

/// Reduced words of the same element whose Demazure characters differ from
/// the canonical one.
pub fn word_independence_sweep(rs: &RootSystemData, lmax: i64, exec: Execution) -> Result<Vec<WordMismatch>> {
    let elements = all_elements(rs.rank);
    let grid = dominant_grid(rs.rank, lmax);
    flatten_results(map_ordered(exec, &grid, |lambda| {
        let mut out = Vec::new();
        for w in &elements {
            let canonical = demazure_character(rs, w, lambda)?;
            for word in w.reduced_words() {
                if demazure_along_word(rs, &word, lambda)? != canonical {
                    out.push(WordMismatch { w: w.clone(), lambda: lambda.clone(), word });
                }
            }
        }
        Ok(out)
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaFailure {
    pub v: WeylElement,
    pub subset: Option<SimpleSubset>,
    pub reason: &'static str,
}

/// `v ≤ w_{S(v)}` for all `v`, and `v ≤ w_I ⇒ S(v) ⊆ I, w_{S(v)} ≤ w_I`.
pub fn parabolic_lemma_check(rank: usize, exec: Execution) -> Vec<LemmaFailure> {
    let elements = all_elements(rank);
    let subsets: Vec<(SimpleSubset, WeylElement)> =
        SimpleSubset::all(rank).map(|s| (s, long_element(&s))).collect();
    map_ordered(exec, &elements, |v| {
        let mut out = Vec::new();
        let support = v.support();
        let w_support = long_element(&support);
        if !v.bruhat_leq(&w_support) {
            out.push(LemmaFailure { v: v.clone(), subset: None, reason: "v ≰ w_S(v)" });
        }
        for (s, wi) in &subsets {
            if v.bruhat_leq(wi) {
                if !support.is_subset(s) {
                    out.push(LemmaFailure { v: v.clone(), subset: Some(*s), reason: "S(v) ⊄ I" });
                }
                if !w_support.bruhat_leq(wi) {
                    out.push(LemmaFailure { v: v.clone(), subset: Some(*s), reason: "w_S(v) ≰ w_I" });
                }
            }
        }
        out
    })
    .into_iter()
    .flatten()
    .collect()
}
