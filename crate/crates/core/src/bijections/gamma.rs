//! The bijection `Γ` from indexed partitions `(λ, i)` with
//! `1 <= i <= mex(λ; r) + ω_r(λ)` to pairs `(α, β)` where `α` is
//! `(r+1)`-strict and in `β` only the largest part may have multiplicity not
//! divisible by `r + 1` (and it must not be), together with its extension
//! `Γ*` to `1 <= i <= mex(λ; r) + r - 1` using colored empty partitions.
//!
//! `Γ(λ, i)` conjugates `λ`, cuts `λ'` above its `i`-th part and applies
//! [`psi_pair`](super::psi_pair) to the upper and lower halves. When `λ` lies
//! in `P_r^+` and `i` reaches into the chain of `r` missing values at the mex,
//! the largest part of the lower half is `G(λ)`, the number of parts of `λ`
//! above the mex; if its remaining multiplicity is divisible by `r + 1`, a
//! further `r - (i - mex)` copies of `G(λ)` are moved across so that exactly
//! `r` copies sit in `α`.

use serde::Serialize;

use crate::bijections::pair_ops::{psi_with_moves, Move};
use crate::bijections::{codomain, require_r, BetaSide, IndexedPartition, PartitionPair};
use crate::error::BijectionError;
use crate::partition::Partition;

/// Which branch of `Γ` produced an image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GammaCase {
    /// `λ ∈ P_r^0`, `i <= mex`.
    P0Cut,
    /// `λ ∈ P_r^+`, `i < mex`.
    PlusBelowMex,
    /// `λ ∈ P_r^+`, `mex <= i`, multiplicity of `G(λ)` left in `β` is not
    /// divisible by `r + 1`.
    PlusChain,
    /// `λ ∈ P_r^+`, `mex <= i`, extra copies of `G(λ)` moved into `α`.
    PlusChainShifted,
    /// `Γ*` only: `λ ∈ P_r^0`, `i >= mex`, image `(λ', colored ∅)`.
    P0Colored,
}

/// Everything computed along the way to an image, kept for tracing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaStep {
    pub case: GammaCase,
    pub conjugate: Partition,
    pub cut_index: Option<usize>,
    pub moves: Vec<Move>,
    /// Copies of `G(λ)` moved in the shifted branch.
    pub shift: Option<Move>,
    pub output: PartitionPair,
}

fn checked_index(i: u32, max: u32) -> Result<(), BijectionError> {
    if i == 0 || i > max {
        return Err(BijectionError::IndexOutOfRange { i, max });
    }
    Ok(())
}

/// `Γ` with its intermediate values.
pub fn gamma_step(x: &IndexedPartition, r: u32) -> Result<GammaStep, BijectionError> {
    require_r(r, 1)?;
    let lambda = &x.lambda;
    let mex = lambda.mex(r);
    checked_index(x.i, mex + lambda.omega(r))?;
    Ok(gamma_unchecked(lambda, x.i, r, mex))
}

fn gamma_unchecked(lambda: &Partition, i: u32, r: u32, mex: u32) -> GammaStep {
    let conjugate = lambda.conjugate();
    let (up, down) = conjugate.split_at(i as usize - 1);
    let (mut alpha, mut beta, moves) = psi_with_moves(&up, &down, r);
    let mut shift = None;
    let case = if lambda.in_p0(r) {
        GammaCase::P0Cut
    } else if i < mex {
        GammaCase::PlusBelowMex
    } else {
        let g = lambda.g_stat(r);
        // P_r^+ has a part above its r-chain of missing values
        assert!(g > 0, "G(λ) vanishes on P_r^+ partition {lambda}");
        let k = conjugate.multiplicity(g);
        let offset = i - mex;
        debug_assert!(k > r && offset < r);
        debug_assert_eq!(beta.largest(), g);
        if !(k - offset).is_multiple_of(r + 1) {
            GammaCase::PlusChain
        } else {
            let copies = r - offset;
            beta = beta.with_copies(g, -i64::from(copies));
            alpha = alpha.with_copies(g, i64::from(copies));
            shift = Some(Move { value: g, copies });
            GammaCase::PlusChainShifted
        }
    };
    GammaStep {
        case,
        conjugate,
        cut_index: Some(i as usize),
        moves,
        shift,
        output: PartitionPair::new(alpha, beta),
    }
}

/// `Γ(λ, i)`.
pub fn gamma(x: &IndexedPartition, r: u32) -> Result<PartitionPair, BijectionError> {
    gamma_step(x, r).map(|s| s.output)
}

fn plain_beta<'a>(pair: &'a PartitionPair, map: &str) -> Result<&'a Partition, BijectionError> {
    pair.beta.as_partition().ok_or_else(|| {
        BijectionError::NotInCodomain(format!("{map} does not accept a colored empty β"))
    })
}

/// Inverse of [`gamma`].
///
/// `λ` is the conjugate of `α * β`. In every branch except the shifted one,
/// the upper half of the cut consists of the parts of `α` that are at least
/// the largest part of `β`, so `i - 1` is their number. In the shifted branch
/// that count is exactly `mex + r - 1`, one more than any unshifted branch can
/// produce, and `i` is then the unique value in `mex..mex+r` with
/// `i - mex ≡ k (mod r+1)`, `k` the multiplicity of `G(λ)` in `λ'`.
pub fn gamma_inv(pair: &PartitionPair, r: u32) -> Result<IndexedPartition, BijectionError> {
    require_r(r, 1)?;
    let beta = plain_beta(pair, "Γ⁻¹")?;
    if !codomain::is_mex_pair(&pair.alpha, beta, r) {
        return Err(BijectionError::NotInCodomain(format!(
            "({}, {beta}) violates the (r+1)-strict / top-multiplicity conditions for r={r}",
            pair.alpha
        )));
    }
    let conjugate = pair.alpha.concat(beta);
    let lambda = conjugate.conjugate();
    let mex = lambda.mex(r);
    let above = pair.alpha.parts_at_least(beta.largest()) as u32;
    let mut i = above + 1;
    if !lambda.in_p0(r) && !beta.is_empty() && i == mex + r {
        let k = conjugate.multiplicity(lambda.g_stat(r));
        let offset = k % (r + 1);
        if offset >= r {
            return Err(BijectionError::NotInCodomain(format!(
                "shifted image with multiplicity {k} of G(λ) has no preimage"
            )));
        }
        i = mex + offset;
    }
    checked_index(i, mex + lambda.omega(r))?;
    Ok(IndexedPartition::new(lambda, i))
}

/// `Γ*` with its intermediate values.
pub fn gamma_star_step(x: &IndexedPartition, r: u32) -> Result<GammaStep, BijectionError> {
    require_r(r, 1)?;
    let lambda = &x.lambda;
    let mex = lambda.mex(r);
    checked_index(x.i, mex + r - 1)?;
    if lambda.in_p0(r) && x.i >= mex {
        let conjugate = lambda.conjugate();
        return Ok(GammaStep {
            case: GammaCase::P0Colored,
            output: PartitionPair::colored(conjugate.clone(), x.i - mex + 1),
            conjugate,
            cut_index: None,
            moves: Vec::new(),
            shift: None,
        });
    }
    Ok(gamma_unchecked(lambda, x.i, r, mex))
}

/// `Γ*(λ, i)` for `1 <= i <= mex(λ; r) + r - 1`.
///
/// The image is emitted with `β` in the same orientation as [`gamma`]; see
/// [`PartitionPair::conjugate_beta`] for the generating-function orientation.
pub fn gamma_star(x: &IndexedPartition, r: u32) -> Result<PartitionPair, BijectionError> {
    gamma_star_step(x, r).map(|s| s.output)
}

/// Inverse of [`gamma_star`].
pub fn gamma_star_inv(pair: &PartitionPair, r: u32) -> Result<IndexedPartition, BijectionError> {
    require_r(r, 1)?;
    match pair.beta {
        BetaSide::ColoredEmpty(color) => {
            if color == 0 || color > r {
                return Err(BijectionError::NotInCodomain(format!(
                    "color {color} outside 1..={r}"
                )));
            }
            if !pair.alpha.is_strict(r + 1) {
                return Err(BijectionError::NotInCodomain(format!(
                    "α = {} is not {}-strict",
                    pair.alpha,
                    r + 1
                )));
            }
            let lambda = pair.alpha.conjugate();
            debug_assert!(lambda.in_p0(r));
            let i = lambda.mex(r) - 1 + color;
            Ok(IndexedPartition::new(lambda, i))
        }
        BetaSide::Partition(ref beta) => {
            if beta.is_empty() {
                return Err(BijectionError::NotInCodomain(
                    "Γ* images carry a colored empty β, not a plain one".into(),
                ));
            }
            gamma_inv(pair, r)
        }
    }
}
