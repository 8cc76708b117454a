//! Membership checkers for the target sets of the bijections. They read the
//! defining conditions straight off the parts and never call the maps.

use crate::bijections::{BetaSide, PartitionPair};
use crate::partition::Partition;

fn counts(p: &Partition) -> Vec<(u32, u32)> {
    // Recount from the parts list instead of trusting the run form.
    let mut out: Vec<(u32, u32)> = Vec::new();
    for part in p.parts_iter() {
        match out.last_mut() {
            Some((v, c)) if *v == part => *c += 1,
            _ => out.push((part, 1)),
        }
    }
    out
}

fn strict(p: &Partition, modulus: u32) -> bool {
    counts(p).iter().all(|&(_, c)| c < modulus)
}

/// Every part occurs fewer than `r` times.
pub fn is_r_strict(p: &Partition, r: u32) -> bool {
    strict(p, r)
}

/// No part is divisible by `r`.
pub fn is_r_regular(p: &Partition, r: u32) -> bool {
    p.parts_iter().all(|x| x % r != 0)
}

/// `α` is `(r+1)`-strict; `β` is empty, or the multiplicity of its largest
/// part is not divisible by `r + 1` while all others are.
pub fn is_mex_pair(alpha: &Partition, beta: &Partition, r: u32) -> bool {
    let m = r + 1;
    if !strict(alpha, m) {
        return false;
    }
    match counts(beta).split_first() {
        None => true,
        Some((&(_, top), rest)) => top % m != 0 && rest.iter().all(|&(_, c)| c % m == 0),
    }
}

/// Target of `Γ*` in the orientation of the shifted mex generating function:
/// `α` is `(r+1)`-strict and `β` is either a colored empty partition with
/// color in `1..=r`, or a nonempty partition all of whose parts lie in one
/// nonzero residue class modulo `r + 1`.
pub fn is_shifted_mex_pair(pair: &PartitionPair, r: u32) -> bool {
    let m = r + 1;
    if !strict(&pair.alpha, m) {
        return false;
    }
    match &pair.beta {
        BetaSide::ColoredEmpty(c) => (1..=r).contains(c),
        BetaSide::Partition(beta) => {
            let parts = beta.parts();
            match parts.first() {
                None => false,
                Some(&first) => {
                    let class = first % m;
                    class != 0 && parts.iter().all(|&x| x % m == class)
                }
            }
        }
    }
}

/// `α` is `(r+1)`-strict and every part of `β` above its smallest part has
/// multiplicity divisible by `r + 1`.
pub fn is_maex_pair(alpha: &Partition, beta: &Partition, r: u32) -> bool {
    let m = r + 1;
    if !strict(alpha, m) {
        return false;
    }
    let c = counts(beta);
    c.iter()
        .take(c.len().saturating_sub(1))
        .all(|&(_, k)| k % m == 0)
}

/// Exactly `j` parts divisible by `r`.
pub fn in_e_family(pi: &Partition, r: u32, j: u32) -> bool {
    pi.parts_iter().filter(|&x| x % r == 0).count() as u32 == j
}

/// Largest part repeated at least `r` times is `j` (`0`: no such part).
pub fn in_l_family(pi: &Partition, r: u32, j: u32) -> bool {
    counts(pi)
        .iter()
        .find(|&&(_, c)| c >= r)
        .map_or(0, |&(v, _)| v)
        == j
}

/// The largest part divisible by `r` occurs exactly `j` times (`0`: none).
pub fn in_h_family(pi: &Partition, r: u32, j: u32) -> bool {
    counts(pi)
        .iter()
        .find(|&&(v, _)| v % r == 0)
        .map_or(0, |&(_, c)| c)
        == j
}

/// Smallest part repeated at least `r` times is `j` (`0`: no such part).
pub fn in_s_family(pi: &Partition, r: u32, j: u32) -> bool {
    counts(pi)
        .iter()
        .rev()
        .find(|&&(_, c)| c >= r)
        .map_or(0, |&(v, _)| v)
        == j
}
