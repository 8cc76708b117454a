//! The bijection `Δ` from indexed partitions `(λ, i)` with
//! `1 <= i <= ℓ(λ) - maex(λ; r) + Ω_r(λ)` to pairs `(α, β)` where `α` is
//! `(r+1)`-strict and every part of `β` above its smallest part has
//! multiplicity divisible by `r + 1`.
//!
//! `Δ(λ, i)` cuts `λ'` at position `ℓ(λ) + 2 - i` and hands the lower half
//! (as `α`) and the upper half (as `β`) to [`phi_pair`](super::phi_pair).

use crate::bijections::pair_ops::{phi_with_moves, Move};
use crate::bijections::{codomain, require_r, IndexedPartition, PartitionPair};
use crate::error::BijectionError;
use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaStep {
    pub conjugate: Partition,
    pub cut_index: usize,
    pub moves: Vec<Move>,
    pub output: PartitionPair,
}

/// Largest admissible index for `Δ`.
pub fn delta_bound(lambda: &Partition, r: u32) -> u32 {
    lambda.largest() - lambda.maex(r) + lambda.big_omega(r)
}

pub fn delta_step(x: &IndexedPartition, r: u32) -> Result<DeltaStep, BijectionError> {
    require_r(r, 1)?;
    let max = delta_bound(&x.lambda, r);
    if x.i == 0 || x.i > max {
        return Err(BijectionError::IndexOutOfRange { i: x.i, max });
    }
    let cut_index = (x.lambda.largest() + 2 - x.i) as usize;
    let conjugate = x.lambda.conjugate();
    let (up, down) = conjugate.split_at(cut_index - 1);
    let (alpha, beta, moves) = phi_with_moves(&down, &up, r);
    Ok(DeltaStep {
        conjugate,
        cut_index,
        moves,
        output: PartitionPair::new(alpha, beta),
    })
}

/// `Δ(λ, i)`.
pub fn delta(x: &IndexedPartition, r: u32) -> Result<PartitionPair, BijectionError> {
    delta_step(x, r).map(|s| s.output)
}

/// Inverse of [`delta`]: `λ` is the conjugate of `α * β`, and `i - 1` counts
/// the parts of `α` that are at most the smallest part of `β` (all of `α`
/// when `β` is empty).
pub fn delta_inv(pair: &PartitionPair, r: u32) -> Result<IndexedPartition, BijectionError> {
    require_r(r, 1)?;
    let beta = pair.beta.as_partition().ok_or_else(|| {
        BijectionError::NotInCodomain("Δ⁻¹ does not accept a colored empty β".into())
    })?;
    if !codomain::is_maex_pair(&pair.alpha, beta, r) {
        return Err(BijectionError::NotInCodomain(format!(
            "({}, {beta}) violates the (r+1)-strict / divisibility conditions for r={r}",
            pair.alpha
        )));
    }
    let lambda = pair.alpha.concat(beta).conjugate();
    let below = match beta.smallest() {
        None => pair.alpha.num_parts(),
        Some(s) => pair.alpha.parts_at_most(s),
    };
    let i = below as u32 + 1;
    let max = delta_bound(&lambda, r);
    if i > max {
        return Err(BijectionError::IndexOutOfRange { i, max });
    }
    Ok(IndexedPartition::new(lambda, i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn empty_partition() {
        let e = Partition::empty();
        let x = IndexedPartition::new(e.clone(), 1);
        assert_eq!(delta_bound(&e, 2), 1);
        assert_eq!(
            delta(&x, 2).unwrap(),
            PartitionPair::new(e.clone(), e.clone())
        );
        assert_eq!(delta_inv(&PartitionPair::new(e.clone(), e), 2).unwrap(), x);
    }

    #[test]
    fn hand_trace() {
        // λ = (3,1), r = 1: ℓ 3, maex 2, Ω 1, so i ∈ 1..=2.
        // λ' = (2,1,1). i = 1 cuts at 4: α = ∅ below, β = (2,1,1) above,
        // Φ keeps the 1s and moves the lone 2. i = 2 cuts at 3: α = (1),
        // β = (2,1), and again the 2 moves over.
        let x = IndexedPartition::new(p("[3,1]"), 1);
        assert_eq!(
            delta(&x, 1).unwrap(),
            PartitionPair::new(p("[2]"), p("[1,1]"))
        );
        let y = IndexedPartition::new(p("[3,1]"), 2);
        assert_eq!(
            delta(&y, 1).unwrap(),
            PartitionPair::new(p("[2,1]"), p("[1]"))
        );
        assert!(delta(&IndexedPartition::new(p("[3,1]"), 3), 1).is_err());
    }

    #[test]
    fn round_trip_small() {
        for r in 1..=3 {
            for n in 0..=10 {
                for lambda in enumerate(n) {
                    for i in 1..=delta_bound(&lambda, r) {
                        let x = IndexedPartition::new(lambda.clone(), i);
                        let out = delta(&x, r).unwrap();
                        assert!(codomain::is_maex_pair(
                            &out.alpha,
                            out.beta.as_partition().unwrap(),
                            r
                        ));
                        assert_eq!(delta_inv(&out, r).unwrap(), x, "r={r} {lambda} i={i}");
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_rejects_foreign_pairs() {
        assert!(delta_inv(&PartitionPair::new(p("[1,1]"), p("[1]")), 1).is_err());
        assert!(delta_inv(&PartitionPair::new(Partition::empty(), p("[2,1]")), 1).is_err());
        assert!(delta_inv(&PartitionPair::colored(Partition::empty(), 1), 1).is_err());
    }
}
