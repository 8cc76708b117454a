//! Integer partitions and the excludant statistics defined on them.
//!
//! A [`Partition`] is stored as runs `(value, multiplicity)` with strictly
//! decreasing values and positive multiplicities. Most of the maps in
//! [`crate::bijections`] act on multiplicities modulo `r + 1`, so this is the
//! natural normal form; the weakly decreasing parts list is produced on
//! demand.
//!
//! Conventions used throughout the crate:
//!
//! * `largest()` of the empty partition is `0` and `smallest()` is `None`.
//! * Chain lengths `r` are positive. Statistics taking `r` panic on `r == 0`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::PartitionError;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    runs: Vec<(u32, u32)>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from weakly decreasing positive parts.
    pub fn new(parts: impl IntoIterator<Item = u32>) -> Result<Self, PartitionError> {
        let mut runs: Vec<(u32, u32)> = Vec::new();
        for p in parts {
            if p == 0 {
                return Err(PartitionError::ZeroPart);
            }
            match runs.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                Some((v, _)) if *v < p => {
                    return Err(PartitionError::NotDecreasing { prev: *v, next: p })
                }
                _ => runs.push((p, 1)),
            }
        }
        Ok(Self { runs })
    }

    /// Builds a partition from positive parts in any order.
    pub fn from_unsorted(parts: impl IntoIterator<Item = u32>) -> Result<Self, PartitionError> {
        let mut parts: Vec<u32> = parts.into_iter().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    /// Builds a partition from `(value, multiplicity)` pairs in any order.
    /// Repeated values are merged and zero multiplicities dropped.
    pub fn from_multiplicities(
        pairs: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Self, PartitionError> {
        let mut pairs: Vec<(u32, u32)> = pairs.into_iter().filter(|&(_, m)| m > 0).collect();
        if pairs.iter().any(|&(v, _)| v == 0) {
            return Err(PartitionError::ZeroPart);
        }
        pairs.sort_unstable_by_key(|&(v, _)| std::cmp::Reverse(v));
        let mut runs: Vec<(u32, u32)> = Vec::with_capacity(pairs.len());
        for (v, m) in pairs {
            match runs.last_mut() {
                Some((last, lm)) if *last == v => *lm += m,
                _ => runs.push((v, m)),
            }
        }
        Ok(Self { runs })
    }

    /// Runs are already normalized; used by internal builders.
    pub(crate) fn from_runs_unchecked(runs: Vec<(u32, u32)>) -> Self {
        debug_assert!(runs.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(runs.iter().all(|&(v, m)| v > 0 && m > 0));
        Self { runs }
    }

    /// `(value, multiplicity)` pairs with strictly decreasing values.
    pub fn runs(&self) -> &[(u32, u32)] {
        &self.runs
    }

    pub fn parts_iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.runs
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat_n(v, m as usize))
    }

    pub fn parts(&self) -> Vec<u32> {
        self.parts_iter().collect()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u64 {
        self.runs.iter().map(|&(v, m)| v as u64 * m as u64).sum()
    }

    /// Number of parts, counted with multiplicity.
    pub fn num_parts(&self) -> usize {
        self.runs.iter().map(|&(_, m)| m as usize).sum()
    }

    /// Largest part, `0` for the empty partition.
    pub fn largest(&self) -> u32 {
        self.runs.first().map_or(0, |&(v, _)| v)
    }

    pub fn smallest(&self) -> Option<u32> {
        self.runs.last().map(|&(v, _)| v)
    }

    pub fn multiplicity(&self, value: u32) -> u32 {
        self.runs
            .binary_search_by(|&(v, _)| value.cmp(&v))
            .map_or(0, |idx| self.runs[idx].1)
    }

    /// Number of parts strictly greater than `bound`.
    pub fn parts_above(&self, bound: u32) -> usize {
        self.runs
            .iter()
            .take_while(|&&(v, _)| v > bound)
            .map(|&(_, m)| m as usize)
            .sum()
    }

    /// Number of parts greater than or equal to `bound`.
    pub fn parts_at_least(&self, bound: u32) -> usize {
        match bound {
            0 => self.num_parts(),
            b => self.parts_above(b - 1),
        }
    }

    /// Number of parts less than or equal to `bound`.
    pub fn parts_at_most(&self, bound: u32) -> usize {
        self.num_parts() - self.parts_above(bound)
    }

    /// Copy with `copies` more (or, if negative, fewer) parts equal to `value`.
    ///
    /// Panics if that would leave a negative multiplicity.
    pub(crate) fn with_copies(&self, value: u32, copies: i64) -> Partition {
        let current = i64::from(self.multiplicity(value));
        let updated = current + copies;
        assert!(updated >= 0, "cannot remove {} copies of {value}", -copies);
        let mut pairs: Vec<(u32, u32)> = self
            .runs
            .iter()
            .copied()
            .filter(|&(v, _)| v != value)
            .collect();
        pairs.push((value, updated as u32));
        Partition::from_multiplicities(pairs).expect("values are positive")
    }

    /// Transpose of the Ferrers diagram.
    pub fn conjugate(&self) -> Partition {
        let mut runs = Vec::with_capacity(self.runs.len());
        let mut count = 0u32;
        let mut cumulative = Vec::with_capacity(self.runs.len());
        for &(_, m) in &self.runs {
            count += m;
            cumulative.push(count);
        }
        for idx in (0..self.runs.len()).rev() {
            let next = self.runs.get(idx + 1).map_or(0, |&(v, _)| v);
            runs.push((cumulative[idx], self.runs[idx].0 - next));
        }
        Partition { runs }
    }

    /// Multiset union of the parts of `self` and `other`.
    pub fn concat(&self, other: &Partition) -> Partition {
        let (a, b) = (&self.runs, &other.runs);
        let mut runs = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let next = match (a.get(i), b.get(j)) {
                (Some(&x), None) => {
                    i += 1;
                    x
                }
                (None, Some(&y)) => {
                    j += 1;
                    y
                }
                (Some(&x), Some(&y)) => match x.0.cmp(&y.0) {
                    Ordering::Greater => {
                        i += 1;
                        x
                    }
                    Ordering::Less => {
                        j += 1;
                        y
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (x.0, x.1 + y.1)
                    }
                },
                (None, None) => unreachable!(),
            };
            runs.push(next);
        }
        Partition { runs }
    }

    fn check_cut(&self, index: usize) -> Result<(), PartitionError> {
        let max = self.num_parts() + 1;
        if index == 0 || index > max {
            return Err(PartitionError::CutOutOfRange { index, max });
        }
        Ok(())
    }

    /// Parts above a horizontal cut: `(λ_1, …, λ_{index-1})`, with `index`
    /// 1-based in `1..=num_parts()+1`.
    pub fn cut_up(&self, index: usize) -> Result<Partition, PartitionError> {
        self.check_cut(index)?;
        Ok(self.split_at(index - 1).0)
    }

    /// Parts below a horizontal cut: `(λ_index, …, λ_last)`.
    pub fn cut_down(&self, index: usize) -> Result<Partition, PartitionError> {
        self.check_cut(index)?;
        Ok(self.split_at(index - 1).1)
    }

    /// Splits after the first `count` parts.
    pub(crate) fn split_at(&self, count: usize) -> (Partition, Partition) {
        let mut upper = Vec::new();
        let mut lower = Vec::new();
        let mut remaining = count;
        for &(v, m) in &self.runs {
            let take = remaining.min(m as usize) as u32;
            remaining -= take as usize;
            if take > 0 {
                upper.push((v, take));
            }
            if m > take {
                lower.push((v, m - take));
            }
        }
        (Partition { runs: upper }, Partition { runs: lower })
    }

    /// True when no part is divisible by `r`.
    pub fn is_regular(&self, r: u32) -> bool {
        self.runs.iter().all(|&(v, _)| v % r != 0)
    }

    /// True when every part occurs fewer than `r` times.
    pub fn is_strict(&self, r: u32) -> bool {
        self.runs.iter().all(|&(_, m)| m < r)
    }

    /// Smallest `k >= 1` such that none of `k, …, k + r - 1` is a part.
    pub fn mex(&self, r: u32) -> u32 {
        assert!(r >= 1, "chain length must be positive");
        let mut k = 1;
        for &(v, _) in self.runs.iter().rev() {
            if v >= k + r {
                break;
            }
            k = v + 1;
        }
        k
    }

    /// Largest `k < largest()` such that the positive integers
    /// `k, k-1, …, k-r+1` are all absent; `0` when there is none.
    pub fn maex(&self, r: u32) -> u32 {
        assert!(r >= 1, "chain length must be positive");
        // The topmost hole of length >= r between consecutive distinct values
        // (or between the smallest part and 0) holds the answer at its top.
        for (idx, &(hi, _)) in self.runs.iter().enumerate() {
            let lo = self.runs.get(idx + 1).map_or(0, |&(v, _)| v);
            if hi - lo > r {
                return hi - 1;
            }
        }
        0
    }

    /// Membership in `P_r^0`, the partitions whose successive gaps and
    /// smallest part are all at most `r`.
    pub fn in_p0(&self, r: u32) -> bool {
        assert!(r >= 1, "chain length must be positive");
        let gaps_ok = self.runs.windows(2).all(|w| w[0].0 - w[1].0 <= r);
        gaps_ok && self.smallest().is_none_or(|s| s <= r)
    }

    pub fn class(&self, r: u32) -> PartitionClass {
        if self.in_p0(r) {
            PartitionClass::Zero(r)
        } else {
            PartitionClass::Plus(r)
        }
    }

    pub fn in_class(&self, class: PartitionClass) -> bool {
        match class {
            PartitionClass::Zero(r) => self.in_p0(r),
            PartitionClass::Plus(r) => !self.in_p0(r),
        }
    }

    /// `0` on `P_r^0`, `r - 1` on `P_r^+`.
    pub fn omega(&self, r: u32) -> u32 {
        if self.in_p0(r) {
            0
        } else {
            r - 1
        }
    }

    /// `1` on `P_r^0`, `r` on `P_r^+`.
    pub fn big_omega(&self, r: u32) -> u32 {
        if self.in_p0(r) {
            1
        } else {
            r
        }
    }

    /// Largest part with multiplicity at least `r`, `0` if none.
    pub fn largest_repeating(&self, r: u32) -> u32 {
        self.runs
            .iter()
            .find(|&&(_, m)| m >= r)
            .map_or(0, |&(v, _)| v)
    }

    /// Smallest part with multiplicity at least `r`, `0` if none.
    pub fn smallest_repeating(&self, r: u32) -> u32 {
        self.runs
            .iter()
            .rev()
            .find(|&&(_, m)| m >= r)
            .map_or(0, |&(v, _)| v)
    }

    /// Number of parts divisible by `r`, with multiplicity.
    pub fn count_multiples(&self, r: u32) -> u32 {
        self.runs
            .iter()
            .filter(|&&(v, _)| v % r == 0)
            .map(|&(_, m)| m)
            .sum()
    }

    /// Multiplicity of the largest part divisible by `r`, `0` if none.
    pub fn mult_of_largest_multiple(&self, r: u32) -> u32 {
        self.runs
            .iter()
            .find(|&&(v, _)| v % r == 0)
            .map_or(0, |&(_, m)| m)
    }

    /// Number of parts exceeding the r-chain mex.
    pub fn g_stat(&self, r: u32) -> u32 {
        self.parts_above(self.mex(r)) as u32
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the parts list, so that `(3) > (2,1) > (1,1,1)`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts_iter().cmp(other.parts_iter())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (idx, p) in self.parts_iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses the canonical `[a,b,c]` form. Parts must already be weakly
/// decreasing; use [`parse_unsorted`] to accept any order.
impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Partition::new(parse_literal(s)?)
    }
}

/// Parses a bracketed literal and sorts the parts.
pub fn parse_unsorted(s: &str) -> Result<Partition, PartitionError> {
    Partition::from_unsorted(parse_literal(s)?)
}

fn parse_literal(s: &str) -> Result<Vec<u32>, PartitionError> {
    let malformed = || PartitionError::Malformed(s.to_string());
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(malformed)?
        .trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| tok.trim().parse::<u32>().map_err(|_| malformed()))
        .collect()
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `P_r^0` or its complement `P_r^+`, tagged with the chain length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PartitionClass {
    Zero(u32),
    Plus(u32),
}

impl PartitionClass {
    pub fn r(self) -> u32 {
        match self {
            PartitionClass::Zero(r) | PartitionClass::Plus(r) => r,
        }
    }
}

impl fmt::Display for PartitionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionClass::Zero(_) => f.write_str("P0"),
            PartitionClass::Plus(_) => f.write_str("P+"),
        }
    }
}

/// Integer-valued statistics, used for filtered enumeration and reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistic {
    Mex,
    Maex,
    NumParts,
    Largest,
    CountMultiples,
    MultOfLargestMultiple,
    LargestRepeating,
    SmallestRepeating,
    G,
    /// Parts above the r-chain mex.
    PartsAboveMex,
    /// Parts above the r-chain maex on `P_r^+`, `0` on `P_r^0`.
    PartsAboveMaex,
}

impl Statistic {
    pub fn eval(self, lambda: &Partition, r: u32) -> u64 {
        match self {
            Statistic::Mex => lambda.mex(r) as u64,
            Statistic::Maex => lambda.maex(r) as u64,
            Statistic::NumParts => lambda.num_parts() as u64,
            Statistic::Largest => lambda.largest() as u64,
            Statistic::CountMultiples => lambda.count_multiples(r) as u64,
            Statistic::MultOfLargestMultiple => lambda.mult_of_largest_multiple(r) as u64,
            Statistic::LargestRepeating => lambda.largest_repeating(r) as u64,
            Statistic::SmallestRepeating => lambda.smallest_repeating(r) as u64,
            Statistic::G => lambda.g_stat(r) as u64,
            Statistic::PartsAboveMex => lambda.parts_above(lambda.mex(r)) as u64,
            Statistic::PartsAboveMaex => match lambda.maex(r) {
                0 => 0,
                m => lambda.parts_above(m) as u64,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.iter().copied()).unwrap()
    }

    /// Transpose by counting, independent of the run-based conjugate.
    fn transpose_oracle(parts: &[u32]) -> Vec<u32> {
        let largest = parts.first().copied().unwrap_or(0);
        (1..=largest)
            .map(|j| parts.iter().filter(|&&x| x >= j).count() as u32)
            .collect()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 1]).conjugate(), p(&[2, 1, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        let expected = transpose_oracle(&[9, 6, 6, 6]);
        assert_eq!(expected, vec![4, 4, 4, 4, 4, 4, 1, 1, 1]);
        assert_eq!(p(&[9, 6, 6, 6]).conjugate().parts(), expected);
    }

    #[test]
    fn concat_examples() {
        let alpha = p(&[3, 3, 1, 1, 1]);
        let mu = p(&[5, 2, 2, 2, 1, 1]);
        assert_eq!(alpha.concat(&mu), p(&[5, 3, 3, 2, 2, 2, 1, 1, 1, 1, 1]));
        assert_eq!(alpha.concat(&Partition::empty()), alpha);
        assert_eq!(p(&[2]).concat(&p(&[2])), p(&[2, 2]));
    }

    #[test]
    fn cuts() {
        let lambda = p(&[5, 3, 2]);
        assert_eq!(lambda.cut_up(2).unwrap(), p(&[5]));
        assert_eq!(lambda.cut_down(2).unwrap(), p(&[3, 2]));
        assert_eq!(lambda.cut_up(1).unwrap(), Partition::empty());
        assert_eq!(p(&[4, 4, 1]).cut_down(4).unwrap(), Partition::empty());
        assert_eq!(
            lambda.cut_up(5),
            Err(PartitionError::CutOutOfRange { index: 5, max: 4 })
        );
        assert!(lambda.cut_down(0).is_err());
    }

    #[test]
    fn mex_examples() {
        for r in 1..5 {
            assert_eq!(Partition::empty().mex(r), 1);
        }
        assert_eq!(p(&[2, 1]).mex(2), 3);
        assert_eq!(p(&[5, 3, 2, 2, 1]).mex(2), 6);
        assert_eq!(p(&[7, 1]).mex(2), 2);
        assert_eq!(p(&[3, 1]).mex(1), 2);
    }

    #[test]
    fn maex_examples() {
        for r in 1..5 {
            assert_eq!(Partition::empty().maex(r), 0);
            assert_eq!(p(&[1, 1]).maex(r), 0);
        }
        assert_eq!(p(&[6, 1]).maex(2), 5);
        assert_eq!(p(&[7]).maex(2), 6);
        assert_eq!(p(&[3]).maex(3), 0);
        assert_eq!(p(&[4]).maex(3), 3);
    }

    #[test]
    fn weights_and_classes() {
        assert_eq!(Partition::empty().omega(3), 0);
        assert_eq!(Partition::empty().big_omega(3), 1);
        assert_eq!(p(&[7]).omega(2), 1);
        assert_eq!(p(&[7]).big_omega(2), 2);
        assert_eq!(p(&[3, 2, 1]).omega(3), 0);
        assert!(p(&[4, 1, 1, 1]).in_class(PartitionClass::Plus(2)));
        assert!(Partition::empty().in_class(PartitionClass::Zero(4)));
        assert!(p(&[3, 2, 1]).in_class(PartitionClass::Zero(1)));
    }

    #[test]
    fn repeating_and_multiples() {
        let nu = p(&[7, 4, 4, 4, 4, 4, 4, 3, 1, 1, 1, 1]);
        assert_eq!(nu.largest_repeating(3), 4);
        assert_eq!(p(&[4, 1, 1, 1]).smallest_repeating(3), 1);
        assert_eq!(p(&[2, 1]).largest_repeating(2), 0);
        assert_eq!(p(&[9, 7, 6, 6, 6, 1, 1, 1, 1]).count_multiples(3), 4);
        assert_eq!(p(&[6, 1]).mult_of_largest_multiple(3), 1);
        assert_eq!(Partition::empty().count_multiples(3), 0);
    }

    #[test]
    fn g_stat_examples() {
        assert_eq!(Partition::empty().g_stat(2), 0);
        assert_eq!(p(&[5, 3, 2, 2, 1]).g_stat(2), 0);
        assert_eq!(p(&[7, 1]).g_stat(2), 1);
    }

    #[test]
    fn literal_round_trip() {
        let lambda: Partition = "[7,4,4,4,4,4,4,3,1,1,1,1]".parse().unwrap();
        assert_eq!(lambda.to_string(), "[7,4,4,4,4,4,4,3,1,1,1,1]");
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(" [ 3, 1 ] ".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert!(matches!(
            "[1,3]".parse::<Partition>(),
            Err(PartitionError::NotDecreasing { prev: 1, next: 3 })
        ));
        assert!("[3,0]".parse::<Partition>().is_err());
        assert!("3,1".parse::<Partition>().is_err());
        assert!("[a]".parse::<Partition>().is_err());
        assert_eq!(parse_unsorted("[1,3,2]").unwrap(), p(&[3, 2, 1]));
    }

    #[test]
    fn from_multiplicities_merges() {
        let lambda = Partition::from_multiplicities([(1, 2), (3, 1), (1, 1), (2, 0)]).unwrap();
        assert_eq!(lambda, p(&[3, 1, 1, 1]));
        assert_eq!(lambda.multiplicity(1), 3);
        assert_eq!(lambda.multiplicity(2), 0);
    }

    #[test]
    fn ordering_is_lexicographic_on_parts() {
        assert!(p(&[3]) > p(&[2, 1]));
        assert!(p(&[2, 1]) > p(&[1, 1, 1]));
        assert!(p(&[2, 2]) > p(&[2, 1, 1]));
    }

    #[test]
    fn serde_uses_canonical_text() {
        let json = serde_json::to_string(&p(&[3, 1])).unwrap();
        assert_eq!(json, "\"[3,1]\"");
        let back: Partition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p(&[3, 1]));
    }
}
