//! Brute-force accumulators over exhaustive enumeration. These use only the
//! partition primitives, never the bijections.

use serde::{Deserialize, Serialize};

use crate::enumerate::enumerate;
use crate::partition::Partition;

/// Statistics summed over all partitions of `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SigmaStat {
    /// `mex(λ; r)`.
    MexR,
    /// `mex(λ; r) + ω_r(λ)`.
    MexRPlusOmega,
    /// `mex(λ; r) + r - 1`.
    MexRPlusRm1,
    /// `ℓ(λ) - maex(λ; r) + Ω_r(λ)`.
    EllMinusMaexPlusOmega,
    /// Largest part `ℓ(λ)`.
    SigmaL,
    /// `maex(λ; r)`.
    SigmaMaex,
}

impl SigmaStat {
    pub fn value(self, lambda: &Partition, r: u32) -> u64 {
        let v = match self {
            SigmaStat::MexR => lambda.mex(r),
            SigmaStat::MexRPlusOmega => lambda.mex(r) + lambda.omega(r),
            SigmaStat::MexRPlusRm1 => lambda.mex(r) + r - 1,
            SigmaStat::EllMinusMaexPlusOmega => {
                lambda.largest() - lambda.maex(r) + lambda.big_omega(r)
            }
            SigmaStat::SigmaL => lambda.largest(),
            SigmaStat::SigmaMaex => lambda.maex(r),
        };
        u64::from(v)
    }
}

/// Sum of `stat` over every partition of `n`.
pub fn sigma_stat(n: u32, r: u32, stat: SigmaStat) -> u64 {
    assert!(r >= 1, "chain length must be positive");
    enumerate(n).map(|lambda| stat.value(&lambda, r)).sum()
}

/// Partition families indexed by `(r, j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// Exactly `j` parts divisible by `r`.
    E,
    /// Largest part occurring at least `r` times is `j`.
    L,
    /// Largest multiple of `r` occurs exactly `j` times.
    H,
    /// Smallest part occurring at least `r` times is `j`.
    S,
    /// Exactly `j` parts above the `(r-1)`-chain mex.
    MexAbove,
    /// In `P_{r-1}^+` with exactly `j` parts above the `(r-1)`-chain maex.
    MaexAbove,
}

impl Family {
    pub fn contains(self, lambda: &Partition, r: u32, j: u32) -> bool {
        let j = j as usize;
        match self {
            Family::E => lambda.count_multiples(r) as usize == j,
            Family::L => lambda.largest_repeating(r) as usize == j,
            Family::H => lambda.mult_of_largest_multiple(r) as usize == j,
            Family::S => lambda.smallest_repeating(r) as usize == j,
            Family::MexAbove => lambda.parts_above(lambda.mex(r - 1)) == j,
            Family::MaexAbove => {
                !lambda.in_p0(r - 1) && lambda.parts_above(lambda.maex(r - 1)) == j
            }
        }
    }
}

/// Number of partitions of `n` in `family` for parameters `(r, j)`.
pub fn count_family(n: u32, r: u32, j: u32, family: Family) -> u64 {
    assert!(r >= 2, "family counts need r >= 2");
    enumerate(n)
        .filter(|lambda| family.contains(lambda, r, j))
        .count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sums() {
        assert_eq!(sigma_stat(3, 1, SigmaStat::MexR), 6);
        for r in 1..=4 {
            assert_eq!(sigma_stat(0, r, SigmaStat::EllMinusMaexPlusOmega), 1);
        }
        assert_eq!(sigma_stat(1, 1, SigmaStat::SigmaL), 1);
        // partitions of 4 have largest parts 4,3,2,2,1
        assert_eq!(sigma_stat(4, 1, SigmaStat::SigmaL), 12);
    }

    #[test]
    fn worked_instance_counts_five() {
        assert_eq!(count_family(7, 3, 1, Family::MaexAbove), 5);
        assert_eq!(count_family(7, 3, 1, Family::S), 5);
        assert_eq!(count_family(7, 3, 1, Family::H), 5);
    }

    #[test]
    fn j_zero_multiples_are_regular_partitions() {
        for n in 0..=15 {
            let regular = enumerate(n).filter(|p| p.is_regular(3)).count() as u64;
            assert_eq!(count_family(n, 3, 0, Family::E), regular);
        }
    }

    #[test]
    fn families_partition_the_set() {
        for n in 0..=14u32 {
            let total = enumerate(n).count() as u64;
            for family in [Family::E, Family::L] {
                let sum: u64 = (0..=n).map(|j| count_family(n, 2, j, family)).sum();
                assert_eq!(sum, total);
            }
        }
    }
}
