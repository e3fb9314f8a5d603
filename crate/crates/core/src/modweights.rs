//! Modular weight data: `Φ_{λ,p}`, p-regularity, `J_λ`, and conjugation of
//! `Φ_{λ,p}` onto a subsystem spanned by simple roots.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{RootSystemData, RootVec, TypeLetter, WeightVec};
use crate::weyl::{all_elements, generated_subgroup, SimpleSubset, WeylElement};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn check_dominant(rs: &RootSystemData, lambda: &WeightVec) -> Result<()> {
    rs.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    Ok(())
}

/// `{ α ∈ Φ⁺ : <λ+ρ, α^∨> ≡ 0 (mod p) }`
pub fn phi_lambda_p(rs: &RootSystemData, lambda: &WeightVec, p: u64) -> Result<Vec<RootVec>> {
    check_prime(p)?;
    check_dominant(rs, lambda)?;
    let shifted = lambda.checked_add(&rs.rho());
    let mut out = Vec::new();
    for alpha in &rs.positive_roots {
        if rs.pairing(&shifted, alpha)?.rem_euclid(p as i64) == 0 {
            out.push(alpha.clone());
        }
    }
    Ok(out)
}

pub fn is_p_regular(rs: &RootSystemData, lambda: &WeightVec, p: u64) -> Result<bool> {
    Ok(phi_lambda_p(rs, lambda, p)?.is_empty())
}

/// `J_λ = { α_i : <λ, α_i^∨> = 0 }`
pub fn j_lambda(rs: &RootSystemData, lambda: &WeightVec) -> Result<SimpleSubset> {
    check_dominant(rs, lambda)?;
    SimpleSubset::from_indices(
        rs.rank,
        lambda.coords().iter().enumerate().filter(|(_, &c)| c == 0).map(|(i, _)| i + 1),
    )
}

/// Every prime is good for type A.
pub fn is_good_prime(rs: &RootSystemData, p: u64) -> bool {
    match rs.type_letter {
        TypeLetter::A => is_prime(p),
    }
}

/// If `x` carries `±phi_sub` onto `±Φ_I` for some `I`, returns that `I`.
fn conjugation_target(rs: &RootSystemData, x: &WeylElement, phi_sub: &[RootVec]) -> Option<SimpleSubset> {
    let image: BTreeSet<RootVec> = phi_sub
        .iter()
        .map(|a| {
            let b = rs.act_on_root(x, a).expect("phi_sub consists of roots");
            if b.is_positive() {
                b
            } else {
                b.neg()
            }
        })
        .collect();
    let subset =
        SimpleSubset::from_indices(rs.rank, image.iter().filter_map(RootVec::simple_index)).ok()?;
    let target: BTreeSet<RootVec> = rs.positive_roots_in(|i| subset.contains(i)).into_iter().collect();
    (image == target).then_some(subset)
}

fn best_conjugation(
    rs: &RootSystemData,
    phi_sub: &[RootVec],
    candidates: Vec<WeylElement>,
) -> Result<(WeylElement, SimpleSubset)> {
    for a in phi_sub {
        if !rs.is_root(a) {
            return Err(Error::NotARoot(a.0.clone()));
        }
    }
    candidates
        .into_iter()
        .filter_map(|x| conjugation_target(rs, &x, phi_sub).map(|s| (x, s)))
        .min_by_key(|(x, s)| (x.length(), s.indices(), x.reduced_word()))
        .ok_or(Error::NotConjugate)
}

/// Shortest `x ∈ W` with `x(±phi_sub) = ±Φ_I`. Ties go to the smallest `I`
/// (as a sorted index list), then to the lexicographically least reduced word.
pub fn conjugate_to_simple(rs: &RootSystemData, phi_sub: &[RootVec]) -> Result<(WeylElement, SimpleSubset)> {
    best_conjugation(rs, phi_sub, all_elements(rs.rank))
}

/// As [`conjugate_to_simple`], searching only `x ∈ W_I`, so that the target
/// `J` satisfies `J ⊆ I`.
pub fn conjugate_within(
    rs: &RootSystemData,
    phi_sub: &[RootVec],
    levi: &SimpleSubset,
) -> Result<(WeylElement, SimpleSubset)> {
    best_conjugation(rs, phi_sub, generated_subgroup(levi))
}

/// `(Φ_I)_{λ,p} = Φ_{λ,p} ∩ Φ_I`
pub fn phi_lambda_p_in(
    rs: &RootSystemData,
    lambda: &WeightVec,
    p: u64,
    levi: &SimpleSubset,
) -> Result<Vec<RootVec>> {
    let in_levi: BTreeSet<RootVec> = rs.positive_roots_in(|i| levi.contains(i)).into_iter().collect();
    Ok(phi_lambda_p(rs, lambda, p)?
        .into_iter()
        .filter(|a| in_levi.contains(a))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Conjugation {
    pub x: WeylElement,
    #[serde(rename = "I")]
    pub subset: SimpleSubset,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModularProfile {
    pub lambda: WeightVec,
    pub p: u64,
    pub phi_lambda_p: Vec<RootVec>,
    pub regular: bool,
    pub j_lambda: SimpleSubset,
    pub conjugation: Option<Conjugation>,
}

impl ModularProfile {
    pub fn compute(rs: &RootSystemData, lambda: &WeightVec, p: u64) -> Result<Self> {
        let phi = phi_lambda_p(rs, lambda, p)?;
        let conjugation = match conjugate_to_simple(rs, &phi) {
            Ok((x, subset)) => Some(Conjugation { x, subset }),
            Err(Error::NotConjugate) => None,
            Err(e) => return Err(e),
        };
        Ok(ModularProfile {
            lambda: lambda.clone(),
            p,
            regular: phi.is_empty(),
            phi_lambda_p: phi,
            j_lambda: j_lambda(rs, lambda)?,
            conjugation,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    fn rs(rank: usize) -> RootSystemData {
        build_root_system(TypeLetter::A, rank).unwrap()
    }

    fn wt(c: &[i64]) -> WeightVec {
        WeightVec::new(c.to_vec())
    }

    fn r(c: &[i64]) -> RootVec {
        RootVec(c.to_vec())
    }

    #[test]
    fn primes() {
        let ps: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn phi_examples() {
        let a2 = rs(2);
        assert_eq!(
            phi_lambda_p(&a2, &wt(&[2, 2]), 3).unwrap(),
            vec![r(&[1, 0]), r(&[0, 1]), r(&[1, 1])]
        );
        assert!(phi_lambda_p(&a2, &wt(&[1, 1]), 5).unwrap().is_empty());
        assert_eq!(phi_lambda_p(&a2, &wt(&[2, 0]), 3).unwrap(), vec![r(&[1, 0])]);
        assert_eq!(phi_lambda_p(&a2, &wt(&[1, 1]), 4), Err(Error::NotPrime(4)));
        assert!(matches!(phi_lambda_p(&a2, &wt(&[1, -1]), 3), Err(Error::NotDominant(_))));
    }

    #[test]
    fn regularity_examples() {
        let a2 = rs(2);
        assert!(is_p_regular(&a2, &wt(&[1, 1]), 5).unwrap());
        assert!(!is_p_regular(&a2, &wt(&[2, 2]), 3).unwrap());
        let a1 = rs(1);
        for p in [2u64, 3, 5, 7] {
            for l in 0..30i64 {
                let divides = (l + 1) % p as i64 == 0;
                assert_eq!(is_p_regular(&a1, &wt(&[l]), p).unwrap(), !divides);
            }
        }
    }

    #[test]
    fn j_lambda_examples() {
        let a2 = rs(2);
        assert_eq!(j_lambda(&a2, &wt(&[0, 0])).unwrap(), SimpleSubset::full(2));
        assert_eq!(
            j_lambda(&a2, &wt(&[3, 0])).unwrap(),
            SimpleSubset::from_indices(2, [2]).unwrap()
        );
        assert!(j_lambda(&a2, &wt(&[3, 4])).unwrap().is_empty());
    }

    #[test]
    fn good_primes_in_type_a() {
        assert!(is_good_prime(&rs(2), 2));
        assert!(is_good_prime(&rs(2), 3));
        assert!(is_good_prime(&rs(3), 5));
    }

    #[test]
    fn conjugation_examples() {
        let a2 = rs(2);
        let (x, i) = conjugate_to_simple(&a2, &[]).unwrap();
        assert!(x.is_identity() && i.is_empty());

        let (x, i) = conjugate_to_simple(&a2, &[r(&[1, 1])]).unwrap();
        assert_eq!(x, WeylElement::from_word(2, &[2]).unwrap());
        assert_eq!(i, SimpleSubset::from_indices(2, [1]).unwrap());
        assert_eq!(a2.act_on_root(&x, &r(&[1, 1])).unwrap(), r(&[1, 0]));

        let (x, i) = conjugate_to_simple(&a2, &[r(&[1, 0]), r(&[0, 1]), r(&[1, 1])]).unwrap();
        assert!(x.is_identity());
        assert!(i.is_full());
    }

    #[test]
    fn non_closed_subsets_do_not_conjugate() {
        // {α, β} without α+β is not a root subsystem.
        let a2 = rs(2);
        assert_eq!(
            conjugate_to_simple(&a2, &[r(&[1, 0]), r(&[0, 1])]),
            Err(Error::NotConjugate)
        );
    }

    #[test]
    fn phi_sizes_in_a2() {
        let a2 = rs(2);
        for p in [2u64, 3, 5, 7] {
            for l1 in 0..16i64 {
                for l2 in 0..16i64 {
                    let n = phi_lambda_p(&a2, &wt(&[l1, l2]), p).unwrap().len();
                    assert!([0, 1, 3].contains(&n));
                    let both = (l1 + 1) % p as i64 == 0 && (l2 + 1) % p as i64 == 0;
                    assert_eq!(n == 3, both, "λ=({l1},{l2}) p={p}");
                }
            }
        }
    }

    #[test]
    fn conjugation_round_trip() {
        for rank in 1..=3 {
            let system = rs(rank);
            let grid: Vec<Vec<i64>> = match rank {
                1 => (0..8).map(|a| vec![a]).collect(),
                2 => (0..8).flat_map(|a| (0..8).map(move |b| vec![a, b])).collect(),
                _ => (0..5)
                    .flat_map(|a| (0..5).flat_map(move |b| (0..5).map(move |c| vec![a, b, c])))
                    .collect(),
            };
            for p in [2u64, 3, 5] {
                for c in &grid {
                    let phi = phi_lambda_p(&system, &wt(c), p).unwrap();
                    let (x, i) = conjugate_to_simple(&system, &phi).unwrap();
                    let inv = x.inverse();
                    let back: BTreeSet<RootVec> = system
                        .positive_roots_in(|k| i.contains(k))
                        .iter()
                        .map(|a| {
                            let b = system.act_on_root(&inv, a).unwrap();
                            if b.is_positive() { b } else { b.neg() }
                        })
                        .collect();
                    let phi_set: BTreeSet<RootVec> = phi.into_iter().collect();
                    assert_eq!(back, phi_set);
                }
            }
        }
    }

    #[test]
    fn levi_restricted_conjugation() {
        let a2 = rs(2);
        let levi = SimpleSubset::from_indices(2, [1]).unwrap();
        for p in [3u64, 5] {
            let lambda = wt(&[p as i64 - 1, 4]);
            let phi = phi_lambda_p_in(&a2, &lambda, p, &levi).unwrap();
            assert_eq!(phi, vec![r(&[1, 0])]);
            let (x, j) = conjugate_within(&a2, &phi, &levi).unwrap();
            assert!(x.is_identity());
            assert_eq!(j, levi);
        }
    }

    #[test]
    fn profile_json() {
        let a2 = rs(2);
        let profile = ModularProfile::compute(&a2, &wt(&[1, 1]), 2).unwrap();
        assert!(!profile.regular);
        let json = serde_json::to_string(&profile).unwrap();
        assert_eq!(
            json,
            r#"{"lambda":[1,1],"p":2,"phi_lambda_p":[[1,0],[0,1],[1,1]],"regular":false,"j_lambda":[],"conjugation":{"x":"e","I":[1,2]}}"#
        );
    }
}
