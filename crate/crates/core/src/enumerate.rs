//! Exhaustive enumeration of the partitions of `n`.
//!
//! Partitions are produced in decreasing lexicographic order of their parts
//! lists, `(n), (n-1,1), …, (1^n)`, so that every report built on top of the
//! enumerator is byte-stable.

use crate::partition::{Partition, PartitionClass, Statistic};

/// Iterator over all partitions of `n`.
#[derive(Debug, Clone)]
pub struct Partitions {
    parts: Vec<u32>,
    done: bool,
}

impl Partitions {
    pub fn new(n: u32) -> Self {
        let parts = if n == 0 { Vec::new() } else { vec![n] };
        Self { parts, done: false }
    }

    fn advance(&mut self) {
        // Rightmost part larger than 1; every part after it is a 1.
        let Some(idx) = self.parts.iter().rposition(|&p| p > 1) else {
            self.done = true;
            return;
        };
        let mut remainder = (self.parts.len() - idx - 1) as u32 + 1;
        self.parts[idx] -= 1;
        let cap = self.parts[idx];
        self.parts.truncate(idx + 1);
        while remainder > 0 {
            let next = remainder.min(cap);
            self.parts.push(next);
            remainder -= next;
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let current = partition_from_sorted(&self.parts);
        self.advance();
        Some(current)
    }
}

fn partition_from_sorted(parts: &[u32]) -> Partition {
    let mut runs: Vec<(u32, u32)> = Vec::new();
    for &p in parts {
        match runs.last_mut() {
            Some((v, m)) if *v == p => *m += 1,
            _ => runs.push((p, 1)),
        }
    }
    Partition::from_runs_unchecked(runs)
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn enumerate(n: u32) -> Partitions {
    Partitions::new(n)
}

/// Restrictions accepted by [`enumerate_filtered`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Filter {
    /// No part divisible by `r`.
    Regular(u32),
    /// Every multiplicity below `r`.
    Strict(u32),
    Class(PartitionClass),
    /// The statistic evaluated at chain length `r` equals `value`.
    Statistic {
        stat: Statistic,
        r: u32,
        value: u64,
    },
}

impl Filter {
    pub fn matches(&self, lambda: &Partition) -> bool {
        match *self {
            Filter::Regular(r) => lambda.is_regular(r),
            Filter::Strict(r) => lambda.is_strict(r),
            Filter::Class(class) => lambda.in_class(class),
            Filter::Statistic { stat, r, value } => stat.eval(lambda, r) == value,
        }
    }
}

/// Partitions of `n` satisfying every filter in `filters`.
pub fn enumerate_filtered(n: u32, filters: &[Filter]) -> impl Iterator<Item = Partition> + '_ {
    enumerate(n).filter(move |lambda| filters.iter().all(|f| f.matches(lambda)))
}
