//! Support varieties `V_{B₁}(H⁰(w, λ))`.
//!
//! In ranks 1 and 2 every answer is one of six B-stable subvarieties of the
//! nilradical `u = kX_α ⊕ kX_β ⊕ kX_{α+β}`. Higher ranks get symbolic answers
//! in the settled cases (`w = w_{0,J_λ}` and `w = w_I`) and a saturation-bound
//! report otherwise.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::modweights::{check_prime, conjugate_to_simple, conjugate_within, j_lambda, phi_lambda_p, phi_lambda_p_in};
use crate::rootsys::{RootSystemData, WeightVec};
use crate::weyl::{all_elements, long_element, longest_coset_rep, parabolic_lower_bounds, SimpleSubset, WeylElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymbolicVariety {
    /// `(G·u_I) ∩ N₁(u)`
    GSatIntersect(SimpleSubset),
    /// `(L_I·u_J) ∩ N₁(p_I)`, a `(P_I)₁`-support.
    LeviSatIntersect { levi: SimpleSubset, j: SimpleSubset },
    /// `N₁(u)` in the given rank.
    FullNullcone { rank: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarietyExpr {
    Zero,
    /// `k·X_{α+β}`
    LineHigh,
    /// `u_α = kX_α ⊕ kX_{α+β}`
    Ua,
    /// `u_β = kX_β ⊕ kX_{α+β}`
    Ub,
    UaUb,
    FullU,
    Symbolic(SymbolicVariety),
}

// Point classes of v = aX_α + bX_β + cX_{α+β}, one bit each.
const PT_ZERO: u8 = 1;
const PT_LINE: u8 = 1 << 1;
const PT_A: u8 = 1 << 2;
const PT_B: u8 = 1 << 3;
const PT_AB: u8 = 1 << 4;

impl VarietyExpr {
    pub const CONCRETE: [VarietyExpr; 6] = [
        VarietyExpr::Zero,
        VarietyExpr::LineHigh,
        VarietyExpr::Ua,
        VarietyExpr::Ub,
        VarietyExpr::UaUb,
        VarietyExpr::FullU,
    ];

    /// Which point classes the label contains; inclusion of labels is
    /// inclusion of these masks.
    fn point_classes(self) -> Option<u8> {
        Some(match self {
            VarietyExpr::Zero => PT_ZERO,
            VarietyExpr::LineHigh => PT_ZERO | PT_LINE,
            VarietyExpr::Ua => PT_ZERO | PT_LINE | PT_A,
            VarietyExpr::Ub => PT_ZERO | PT_LINE | PT_B,
            VarietyExpr::UaUb => PT_ZERO | PT_LINE | PT_A | PT_B,
            VarietyExpr::FullU => PT_ZERO | PT_LINE | PT_A | PT_B | PT_AB,
            VarietyExpr::Symbolic(_) => return None,
        })
    }

    pub fn is_concrete(self) -> bool {
        !matches!(self, VarietyExpr::Symbolic(_))
    }

    /// Inclusion; `None` when either side is symbolic.
    pub fn is_subset(self, other: VarietyExpr) -> Option<bool> {
        let (a, b) = (self.point_classes()?, other.point_classes()?);
        Some(a & !b == 0)
    }

    /// Exchanges the roles of α and β.
    pub fn swap_alpha_beta(self) -> VarietyExpr {
        match self {
            VarietyExpr::Ua => VarietyExpr::Ub,
            VarietyExpr::Ub => VarietyExpr::Ua,
            other => other,
        }
    }

    /// Whether `v = aX_α + bX_β + cX_{α+β}` lies in this variety.
    pub fn contains_point(self, a_nonzero: bool, b_nonzero: bool, c_nonzero: bool) -> Option<bool> {
        let class = b_stable_closure(a_nonzero, b_nonzero, c_nonzero).point_classes()?;
        let top = class & !(class >> 1);
        Some(self.point_classes()? & top != 0)
    }
}

impl PartialOrd for VarietyExpr {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self.is_subset(*other)?, other.is_subset(*self)?) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }
}

impl fmt::Display for VarietyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarietyExpr::Zero => write!(f, "0"),
            VarietyExpr::LineHigh => write!(f, "line[a+b]"),
            VarietyExpr::Ua => write!(f, "u_a"),
            VarietyExpr::Ub => write!(f, "u_b"),
            VarietyExpr::UaUb => write!(f, "u_a|u_b"),
            VarietyExpr::FullU => write!(f, "u"),
            VarietyExpr::Symbolic(SymbolicVariety::GSatIntersect(i)) => write!(f, "GSat(I={i})∩N1(u)"),
            VarietyExpr::Symbolic(SymbolicVariety::LeviSatIntersect { levi, j }) => {
                write!(f, "LSat(I={levi},J={j})∩N1(p_I)")
            }
            VarietyExpr::Symbolic(SymbolicVariety::FullNullcone { .. }) => write!(f, "N1(u)"),
        }
    }
}

impl std::str::FromStr for VarietyExpr {
    type Err = Error;

    /// Parses the concrete labels only.
    fn from_str(s: &str) -> Result<Self> {
        VarietyExpr::CONCRETE
            .iter()
            .copied()
            .find(|v| v.to_string() == s)
            .ok_or_else(|| Error::Parse { field: "variety", message: format!("unknown label `{s}`") })
    }
}

impl Serialize for VarietyExpr {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// G-saturations `G·V`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrbitLabel {
    ZeroOrbit,
    MinOrbitClosure,
    NilCone,
    /// `G·u_I`
    SymbolicGU(SimpleSubset),
}

impl OrbitLabel {
    fn level(self) -> Option<u8> {
        match self {
            OrbitLabel::ZeroOrbit => Some(0),
            OrbitLabel::MinOrbitClosure => Some(1),
            OrbitLabel::NilCone => Some(2),
            OrbitLabel::SymbolicGU(_) => None,
        }
    }

    /// Greatest lower bound, when the two labels are comparable.
    pub fn meet(self, other: OrbitLabel) -> Option<OrbitLabel> {
        match self.partial_cmp(&other)? {
            Ordering::Greater => Some(other),
            _ => Some(self),
        }
    }
}

impl PartialOrd for OrbitLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (OrbitLabel::SymbolicGU(a), OrbitLabel::SymbolicGU(b)) => {
                // u_I shrinks as I grows.
                if a == b {
                    Some(Ordering::Equal)
                } else if b.is_subset(a) {
                    Some(Ordering::Less)
                } else if a.is_subset(b) {
                    Some(Ordering::Greater)
                } else {
                    None
                }
            }
            _ => Some(self.level()?.cmp(&other.level()?)),
        }
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitLabel::ZeroOrbit => write!(f, "0"),
            OrbitLabel::MinOrbitClosure => write!(f, "Omin"),
            OrbitLabel::NilCone => write!(f, "N"),
            OrbitLabel::SymbolicGU(i) => write!(f, "G·u_I(I={i})"),
        }
    }
}

impl Serialize for OrbitLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// The case of the length-two classification that fired, stated for
/// `w = s_α s_β`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LengthTwoCase {
    /// `p ∤ λ₁+1, p ∤ λ₂+1, p ∤ λ₁+λ₂+2`
    ConditionA,
    /// `p ∤ λ₂+1, p ∤ 2λ₁+λ₂+2`
    ConditionB,
    /// `λ = (np−1, 0)`
    StringTop,
    /// `λ₂ ≠ 0` and neither condition holds.
    Proper,
    /// `p = 2`, `λ = (2n−1, 0)`
    TwoOdd,
    /// `p = 2`, `λ = (2n, 0)`
    TwoEven,
    /// `p = 2`, `λ₂ ≠ 0`
    TwoNonzero,
}

impl fmt::Display for LengthTwoCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LengthTwoCase::ConditionA => "p-regular (A)",
            LengthTwoCase::ConditionB => "p ∤ dim (B)",
            LengthTwoCase::StringTop => "λ=(np−1,0)",
            LengthTwoCase::Proper => "λ₂≠0, neither (A) nor (B)",
            LengthTwoCase::TwoOdd => "p=2, λ=(2n−1,0)",
            LengthTwoCase::TwoEven => "p=2, λ=(2n,0)",
            LengthTwoCase::TwoNonzero => "p=2, λ₂≠0",
        };
        f.write_str(s)
    }
}

/// Which rule produced a classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `w = e`, every λ.
    Identity,
    /// `w = s_i`; records whether `p ∣ <λ+ρ, α_i^∨>`.
    SimpleReflection { index: usize, divides: bool },
    /// `w = w₀` of `A₂`, resolved through `x(Φ_{λ,p}) = Φ_I`.
    LongestElement { subset: SimpleSubset },
    /// `w = s_α s_β` or (`swapped`) `s_β s_α`.
    LengthTwo { case: LengthTwoCase, swapped: bool },
    /// `w = w_{0,J_λ}`.
    LongestCosetRep { j: SimpleSubset, subset: SimpleSubset },
    /// `w = w_I`, reported at the `(P_I)₁` level.
    ParabolicLong { levi: SimpleSubset, j: SimpleSubset },
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::Identity => write!(f, "w=e: all λ"),
            Branch::SimpleReflection { index, divides } => {
                let rel = if *divides { "∣" } else { "∤" };
                write!(f, "w=s{index}: p {rel} λ{index}+1")
            }
            Branch::LongestElement { subset } => {
                write!(f, "w=w0: V_G1(H0(λ))∩N1(u), x(Φ_λ,p)=Φ_I with I={subset}")
            }
            Branch::LengthTwo { case, swapped } => {
                if *swapped {
                    write!(f, "w=s2 s1 (α↔β swap of s1 s2): case {case}")
                } else {
                    write!(f, "w=s1 s2: case {case}")
                }
            }
            Branch::LongestCosetRep { j, subset } => {
                write!(f, "w=w_0,J with J=J_λ={j}: (G·u_I)∩N1(u), I={subset}")
            }
            Branch::ParabolicLong { levi, j } => {
                write!(f, "w=w_I with I={levi}: (P_I)_1-support (L_I·u_J)∩N1(p_I), J={j}")
            }
        }
    }
}

impl Serialize for Branch {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub variety: VarietyExpr,
    pub branch: Branch,
}

#[derive(Debug, Clone)]
pub struct SupportQuery {
    pub rs: RootSystemData,
    pub p: u64,
    pub w: WeylElement,
    pub lambda: WeightVec,
}

impl SupportQuery {
    pub fn new(rs: RootSystemData, p: u64, w: WeylElement, lambda: WeightVec) -> Result<Self> {
        check_prime(p)?;
        rs.check_weight(&lambda)?;
        if w.rank() != rs.rank {
            return Err(Error::RankMismatch { expected: rs.rank, found: w.rank() });
        }
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.0.clone()));
        }
        Ok(SupportQuery { rs, p, w, lambda })
    }
}

fn divides(p: u64, n: i64) -> bool {
    n.rem_euclid(p as i64) == 0
}

fn validate(rs: &RootSystemData, w: &WeylElement, lambda: &WeightVec, p: u64) -> Result<()> {
    check_prime(p)?;
    rs.check_weight(lambda)?;
    if w.rank() != rs.rank {
        return Err(Error::RankMismatch { expected: rs.rank, found: w.rank() });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    Ok(())
}

/// `N₁(u)`: all of `u` in rank 1, and in rank 2 unless `p = 2`, where the
/// condition `v² = abX_{α+β} = 0` cuts it down to `u_α ∪ u_β`.
pub fn restricted_nullcone_u(rs: &RootSystemData, p: u64) -> VarietyExpr {
    match rs.rank {
        1 => VarietyExpr::FullU,
        2 if p == 2 => VarietyExpr::UaUb,
        2 => VarietyExpr::FullU,
        rank => VarietyExpr::Symbolic(SymbolicVariety::FullNullcone { rank }),
    }
}

/// Smallest B-stable label containing `aX_α + bX_β + cX_{α+β}`.
pub fn b_stable_closure(a_nonzero: bool, b_nonzero: bool, c_nonzero: bool) -> VarietyExpr {
    match (a_nonzero, b_nonzero, c_nonzero) {
        (true, true, _) => VarietyExpr::FullU,
        (true, false, _) => VarietyExpr::Ua,
        (false, true, _) => VarietyExpr::Ub,
        (false, false, true) => VarietyExpr::LineHigh,
        (false, false, false) => VarietyExpr::Zero,
    }
}

pub fn support_a1(rs: &RootSystemData, w: &WeylElement, lambda: &WeightVec, p: u64) -> Result<Classification> {
    if rs.rank != 1 {
        return Err(Error::RankMismatch { expected: 1, found: rs.rank });
    }
    validate(rs, w, lambda, p)?;
    if w.is_identity() {
        return Ok(Classification { variety: VarietyExpr::FullU, branch: Branch::Identity });
    }
    let divides = divides(p, lambda.0[0] + 1);
    let variety = if divides { VarietyExpr::Zero } else { VarietyExpr::FullU };
    Ok(Classification { variety, branch: Branch::SimpleReflection { index: 1, divides } })
}

/// `V_{B₁}(H⁰(s_α s_β, λ))` in `A₂`.
fn length_two_ab(l1: i64, l2: i64, p: u64) -> (VarietyExpr, LengthTwoCase) {
    if p == 2 {
        return match (l2, l1 % 2) {
            (0, 1) => (VarietyExpr::Ua, LengthTwoCase::TwoOdd),
            (0, _) => (VarietyExpr::UaUb, LengthTwoCase::TwoEven),
            _ => (VarietyExpr::UaUb, LengthTwoCase::TwoNonzero),
        };
    }
    let cond_a = !divides(p, l1 + 1) && !divides(p, l2 + 1) && !divides(p, l1 + l2 + 2);
    if cond_a {
        return (VarietyExpr::FullU, LengthTwoCase::ConditionA);
    }
    let cond_b = !divides(p, l2 + 1) && !divides(p, 2 * l1 + l2 + 2);
    if cond_b {
        return (VarietyExpr::FullU, LengthTwoCase::ConditionB);
    }
    if l2 == 0 {
        assert!(
            divides(p, l1 + 1),
            "length-two case split is not exhaustive at λ=({l1},0), p={p}"
        );
        (VarietyExpr::Ua, LengthTwoCase::StringTop)
    } else {
        (VarietyExpr::UaUb, LengthTwoCase::Proper)
    }
}

/// The length-two classifier; `s_β s_α` is obtained from `s_α s_β` by
/// swapping `λ₁ ↔ λ₂` and `u_α ↔ u_β`.
pub fn length_two(lambda: &WeightVec, p: u64, swapped: bool) -> Classification {
    let (l1, l2) = (lambda.0[0], lambda.0[1]);
    if swapped {
        let (v, case) = length_two_ab(l2, l1, p);
        Classification { variety: v.swap_alpha_beta(), branch: Branch::LengthTwo { case, swapped } }
    } else {
        let (v, case) = length_two_ab(l1, l2, p);
        Classification { variety: v, branch: Branch::LengthTwo { case, swapped } }
    }
}

/// Concrete value of `(G·u_I) ∩ N₁(u)` in rank ≤ 2. Rank-≤1 matrices in
/// `u ⊂ sl₃` are exactly `{ab = 0} = u_α ∪ u_β`.
fn resolve_gsat(rs: &RootSystemData, p: u64, subset: &SimpleSubset) -> VarietyExpr {
    if subset.is_full() {
        return VarietyExpr::Zero;
    }
    if subset.is_empty() {
        return restricted_nullcone_u(rs, p);
    }
    match rs.rank {
        2 => VarietyExpr::UaUb,
        _ => VarietyExpr::Symbolic(SymbolicVariety::GSatIntersect(*subset)),
    }
}

/// Resolves a symbolic `B₁`-support to a concrete label where possible.
/// `(P_I)₁`-supports are returned unchanged.
pub fn resolve(rs: &RootSystemData, p: u64, expr: VarietyExpr) -> VarietyExpr {
    match expr {
        VarietyExpr::Symbolic(SymbolicVariety::GSatIntersect(i)) => resolve_gsat(rs, p, &i),
        VarietyExpr::Symbolic(SymbolicVariety::FullNullcone { .. }) => restricted_nullcone_u(rs, p),
        other => other,
    }
}

pub fn support_a2(rs: &RootSystemData, w: &WeylElement, lambda: &WeightVec, p: u64) -> Result<Classification> {
    if rs.rank != 2 {
        return Err(Error::RankMismatch { expected: 2, found: rs.rank });
    }
    validate(rs, w, lambda, p)?;
    let nullcone = restricted_nullcone_u(rs, p);
    Ok(match w.reduced_word().as_slice() {
        [] => Classification { variety: nullcone, branch: Branch::Identity },
        [i] => {
            let index = *i;
            let divides = divides(p, lambda.0[index - 1] + 1);
            let variety = match (divides, index) {
                (false, _) => nullcone,
                (true, 1) => VarietyExpr::Ua,
                (true, _) => VarietyExpr::Ub,
            };
            Classification { variety, branch: Branch::SimpleReflection { index, divides } }
        }
        [1, 2] => length_two(lambda, p, false),
        [2, 1] => length_two(lambda, p, true),
        _ => {
            let phi = phi_lambda_p(rs, lambda, p)?;
            let (_, subset) = conjugate_to_simple(rs, &phi)?;
            let variety = match subset.len() {
                0 => nullcone,
                1 => VarietyExpr::UaUb,
                _ => VarietyExpr::Zero,
            };
            Classification { variety, branch: Branch::LongestElement { subset } }
        }
    })
}

/// Concrete support in ranks 1 and 2.
pub fn concrete_support(rs: &RootSystemData, w: &WeylElement, lambda: &WeightVec, p: u64) -> Result<Classification> {
    match rs.rank {
        1 => support_a1(rs, w, lambda, p),
        2 => support_a2(rs, w, lambda, p),
        rank => Err(Error::UnsupportedRank { rank, max: 2 }),
    }
}

/// `(G·u_I) ∩ N₁(u)` for `w = w_{0,J_λ}`, with `x(Φ_{λ,p}) = Φ_I`.
pub fn support_w0j_symbolic(rs: &RootSystemData, lambda: &WeightVec, p: u64) -> Result<VarietyExpr> {
    let phi = phi_lambda_p(rs, lambda, p)?;
    let (_, subset) = conjugate_to_simple(rs, &phi)?;
    Ok(VarietyExpr::Symbolic(SymbolicVariety::GSatIntersect(subset)))
}

/// `(L_I·u_J) ∩ N₁(p_I)` for `w = w_I`, with `x ∈ W_I` and
/// `x((Φ_I)_{λ,p}) = (Φ_I)_J`. This is a `(P_I)₁`-support.
pub fn support_wi_symbolic(
    rs: &RootSystemData,
    levi: &SimpleSubset,
    lambda: &WeightVec,
    p: u64,
) -> Result<VarietyExpr> {
    if levi.rank() != rs.rank {
        return Err(Error::RankMismatch { expected: rs.rank, found: levi.rank() });
    }
    let phi = phi_lambda_p_in(rs, lambda, p, levi)?;
    let (_, j) = conjugate_within(rs, &phi, levi)?;
    Ok(VarietyExpr::Symbolic(SymbolicVariety::LeviSatIntersect { levi: *levi, j }))
}

pub fn g_saturate(v: VarietyExpr) -> OrbitLabel {
    match v {
        VarietyExpr::Zero => OrbitLabel::ZeroOrbit,
        VarietyExpr::LineHigh | VarietyExpr::Ua | VarietyExpr::Ub | VarietyExpr::UaUb => {
            OrbitLabel::MinOrbitClosure
        }
        VarietyExpr::FullU => OrbitLabel::NilCone,
        VarietyExpr::Symbolic(SymbolicVariety::GSatIntersect(i)) => saturate_gu(i),
        VarietyExpr::Symbolic(SymbolicVariety::LeviSatIntersect { j, .. }) => saturate_gu(j),
        VarietyExpr::Symbolic(SymbolicVariety::FullNullcone { rank }) => {
            OrbitLabel::SymbolicGU(SimpleSubset::empty(rank))
        }
    }
}

fn saturate_gu(i: SimpleSubset) -> OrbitLabel {
    if i.is_full() {
        OrbitLabel::ZeroOrbit
    } else {
        OrbitLabel::SymbolicGU(i)
    }
}

/// How pairs `w₁ < w₂` are drawn for the monotonicity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairOrder {
    Bruhat,
    /// `w₂ = u·w₁` with `ℓ(w₂) = ℓ(u) + ℓ(w₁)`.
    LeftWeak,
}

impl PairOrder {
    pub fn lt(self, w1: &WeylElement, w2: &WeylElement) -> bool {
        match self {
            PairOrder::Bruhat => w1.bruhat_lt(w2),
            PairOrder::LeftWeak => {
                w1 != w2 && w2.mul(&w1.inverse()).length() + w1.length() == w2.length()
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SaturationViolation {
    pub w1: WeylElement,
    pub w2: WeylElement,
    pub lambda: WeightVec,
    pub p: u64,
    pub sat1: OrbitLabel,
    pub sat2: OrbitLabel,
}

impl fmt::Display for SaturationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "p={} λ={} w1={} < w2={} but G·V(w2)={} ⊄ G·V(w1)={}",
            self.p,
            self.lambda,
            self.w1.pretty(),
            self.w2.pretty(),
            self.sat2,
            self.sat1
        )
    }
}

/// Pairs `w₁ < w₂` where `G·V(w₂) ⊆ G·V(w₁)` fails.
pub fn saturation_violations(
    rs: &RootSystemData,
    p: u64,
    lambda: &WeightVec,
    order: PairOrder,
) -> Result<Vec<SaturationViolation>> {
    let elements = all_elements(rs.rank);
    let sats = elements
        .iter()
        .map(|w| Ok(g_saturate(concrete_support(rs, w, lambda, p)?.variety)))
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for (i, w1) in elements.iter().enumerate() {
        for (j, w2) in elements.iter().enumerate() {
            if order.lt(w1, w2) && sats[j].partial_cmp(&sats[i]).is_none_or(|o| o == Ordering::Greater) {
                out.push(SaturationViolation {
                    w1: w1.clone(),
                    w2: w2.clone(),
                    lambda: lambda.clone(),
                    p,
                    sat1: sats[i],
                    sat2: sats[j],
                });
            }
        }
    }
    Ok(out)
}

/// Whether `G·V(w₂) ⊆ G·V(w₁)` for every Bruhat pair `w₁ < w₂`.
pub fn check_saturation_monotone(rs: &RootSystemData, p: u64, lambda: &WeightVec) -> Result<bool> {
    Ok(saturation_violations(rs, p, lambda, PairOrder::Bruhat)?.is_empty())
}

/// `G·V_{B₁}(H⁰(w_I, λ))`: concrete in rank ≤ 2, `G·u_J` from the Levi
/// conjugation otherwise.
pub fn saturated_parabolic_support(
    rs: &RootSystemData,
    levi: &SimpleSubset,
    lambda: &WeightVec,
    p: u64,
) -> Result<OrbitLabel> {
    let w = long_element(levi);
    if rs.rank <= 2 {
        return Ok(g_saturate(concrete_support(rs, &w, lambda, p)?.variety));
    }
    Ok(g_saturate(support_wi_symbolic(rs, levi, lambda, p)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParabolicBounds {
    /// `S(v)`
    pub lower_subset: SimpleSubset,
    /// `G·V(w_{S(v)})`
    pub lower: OrbitLabel,
    /// `(I, G·V(w_I))` over the Bruhat-maximal `w_I ≤ v`.
    pub upper_terms: Vec<(SimpleSubset, OrbitLabel)>,
    /// Meet of `upper_terms`, when they are mutually comparable.
    pub upper: Option<OrbitLabel>,
}

pub fn parabolic_bounds(rs: &RootSystemData, v: &WeylElement, lambda: &WeightVec, p: u64) -> Result<ParabolicBounds> {
    validate(rs, v, lambda, p)?;
    let lower_subset = v.support();
    let lower = saturated_parabolic_support(rs, &lower_subset, lambda, p)?;
    let upper_terms = parabolic_lower_bounds(v)
        .into_iter()
        .filter(|b| b.maximal)
        .map(|b| Ok((b.subset, saturated_parabolic_support(rs, &b.subset, lambda, p)?)))
        .collect::<Result<Vec<_>>>()?;
    let upper = upper_terms
        .iter()
        .map(|(_, o)| Some(*o))
        .reduce(|a, b| a?.meet(b?))
        .flatten();
    Ok(ParabolicBounds { lower_subset, lower, upper_terms, upper })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SupportLevel {
    /// A `B₁`-support.
    Borel,
    /// A `(P_I)₁`-support.
    Parabolic(SimpleSubset),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    Concrete(Classification),
    Symbolic {
        variety: VarietyExpr,
        /// The concrete label the symbolic value reduces to, if any.
        resolved: Option<VarietyExpr>,
        level: SupportLevel,
        branch: Branch,
    },
    /// No settled rule applies; only the saturation sandwich is known.
    Unresolved { bounds: ParabolicBounds },
}

/// Dispatches a query: concrete classifiers in rank ≤ 2, symbolic rules for
/// `w_{0,J_λ}` and `w_I` in higher rank, bounds otherwise.
pub fn classify(query: &SupportQuery) -> Result<Outcome> {
    let SupportQuery { rs, p, w, lambda } = query;
    if rs.rank <= 2 {
        return Ok(Outcome::Concrete(concrete_support(rs, w, lambda, *p)?));
    }
    let j = j_lambda(rs, lambda)?;
    if *w == longest_coset_rep(&j) {
        let variety = support_w0j_symbolic(rs, lambda, *p)?;
        let VarietyExpr::Symbolic(SymbolicVariety::GSatIntersect(subset)) = variety else {
            unreachable!()
        };
        let resolved = Some(resolve(rs, *p, variety)).filter(|v| v.is_concrete());
        return Ok(Outcome::Symbolic {
            variety,
            resolved,
            level: SupportLevel::Borel,
            branch: Branch::LongestCosetRep { j, subset },
        });
    }
    if let Some(levi) = SimpleSubset::all(rs.rank).find(|s| long_element(s) == *w) {
        let variety = support_wi_symbolic(rs, &levi, lambda, *p)?;
        let VarietyExpr::Symbolic(SymbolicVariety::LeviSatIntersect { j, .. }) = variety else {
            unreachable!()
        };
        return Ok(Outcome::Symbolic {
            variety,
            resolved: None,
            level: SupportLevel::Parabolic(levi),
            branch: Branch::ParabolicLong { levi, j },
        });
    }
    Ok(Outcome::Unresolved { bounds: parabolic_bounds(rs, w, lambda, *p)? })
}
