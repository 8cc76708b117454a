//! Operators on pairs `(α, β)` that move surplus copies from `β` to `α`.
//!
//! Write each multiplicity of `β` as `q (r+1) + h` with `0 <= h <= r`. Both
//! operators move `h` copies of every value of `β` into `α`, except for one
//! value whose copies all stay: the largest value for [`psi_pair`], the
//! smallest for [`phi_pair`]. Afterwards every multiplicity in `β` is
//! divisible by `r + 1` except possibly at the retained value.

use serde::Serialize;

use crate::bijections::PartitionPair;
use crate::partition::Partition;

/// `copies` parts equal to `value` moved from `β` to `α`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Move {
    pub value: u32,
    pub copies: u32,
}

#[derive(Clone, Copy)]
enum Keep {
    Largest,
    Smallest,
}

fn apply(
    alpha: &Partition,
    beta: &Partition,
    r: u32,
    keep: Keep,
) -> (Partition, Partition, Vec<Move>) {
    let modulus = r + 1;
    let runs = beta.runs();
    let kept = match keep {
        Keep::Largest => 0,
        Keep::Smallest => runs.len().saturating_sub(1),
    };
    let mut moves = Vec::new();
    let mut remaining = Vec::with_capacity(runs.len());
    for (idx, &(v, m)) in runs.iter().enumerate() {
        let h = if idx == kept { 0 } else { m % modulus };
        if h > 0 {
            moves.push(Move {
                value: v,
                copies: h,
            });
        }
        remaining.push((v, m - h));
    }
    let moved = Partition::from_multiplicities(moves.iter().map(|mv| (mv.value, mv.copies)))
        .expect("positive");
    let beta = Partition::from_multiplicities(remaining).expect("positive");
    (alpha.concat(&moved), beta, moves)
}

pub(crate) fn psi_with_moves(
    alpha: &Partition,
    beta: &Partition,
    r: u32,
) -> (Partition, Partition, Vec<Move>) {
    apply(alpha, beta, r, Keep::Largest)
}

pub(crate) fn phi_with_moves(
    alpha: &Partition,
    beta: &Partition,
    r: u32,
) -> (Partition, Partition, Vec<Move>) {
    apply(alpha, beta, r, Keep::Smallest)
}

/// Keeps every copy of the largest part of `β`, moves the residues of the
/// other values into `α`.
pub fn psi_pair(alpha: &Partition, beta: &Partition, r: u32) -> PartitionPair {
    assert!(r >= 1);
    let (a, b, _) = psi_with_moves(alpha, beta, r);
    PartitionPair::new(a, b)
}

/// Keeps every copy of the smallest part of `β`, moves the residues of the
/// other values into `α`.
pub fn phi_pair(alpha: &Partition, beta: &Partition, r: u32) -> PartitionPair {
    assert!(r >= 1);
    let (a, b, _) = phi_with_moves(alpha, beta, r);
    PartitionPair::new(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Straightforward re-implementation on the parts list.
    fn psi_oracle(alpha: &[u32], beta: &[u32], r: u32, keep_largest: bool) -> (Vec<u32>, Vec<u32>) {
        let mut alpha = alpha.to_vec();
        let mut values: Vec<u32> = beta.to_vec();
        values.dedup();
        let keep = if keep_largest {
            values.first()
        } else {
            values.last()
        }
        .copied();
        let mut out_beta = Vec::new();
        for &v in &values {
            let count = beta.iter().filter(|&&x| x == v).count() as u32;
            let h = if Some(v) == keep { 0 } else { count % (r + 1) };
            alpha.extend(std::iter::repeat_n(v, h as usize));
            out_beta.extend(std::iter::repeat_n(v, (count - h) as usize));
        }
        alpha.sort_unstable_by(|a, b| b.cmp(a));
        (alpha, out_beta)
    }

    #[test]
    fn empty_pair_is_fixed() {
        let e = Partition::empty();
        assert_eq!(
            psi_pair(&e, &e, 2),
            PartitionPair::new(e.clone(), e.clone())
        );
        assert_eq!(
            phi_pair(&e, &e, 2),
            PartitionPair::new(e.clone(), e.clone())
        );
    }

    #[test]
    fn hand_traces() {
        let e = Partition::empty();
        assert_eq!(
            psi_pair(&e, &p("[3,3,3,2,2,1]"), 1),
            PartitionPair::new(p("[1]"), p("[3,3,3,2,2]"))
        );
        assert_eq!(
            phi_pair(&e, &p("[3,3,2,1]"), 1),
            PartitionPair::new(p("[2]"), p("[3,3,1]"))
        );
    }

    #[test]
    fn matches_oracle_and_keeps_divisibility_on_cuts() {
        for n in 0..=14 {
            for lambda in enumerate(n) {
                let parts = lambda.parts();
                for r in 1..=3u32 {
                    for cut in 1..=parts.len() + 1 {
                        let up = lambda.cut_up(cut).unwrap();
                        let down = lambda.cut_down(cut).unwrap();
                        let (a, b, moves) = psi_with_moves(&up, &down, r);
                        let (oa, ob) = psi_oracle(&up.parts(), &down.parts(), r, true);
                        assert_eq!((a.parts(), b.parts()), (oa, ob));
                        assert_eq!(a.weight() + b.weight(), lambda.weight());
                        assert!(moves.iter().all(|m| m.copies <= r));
                        // α stays (r+1)-strict when it sits on top of β, and β is
                        // divisible apart from its top value.
                        if up.is_strict(r + 1) && up.smallest().is_none_or(|s| s >= down.largest())
                        {
                            assert!(a.is_strict(r + 1), "{lambda} cut {cut} r {r}");
                        }
                        assert!(b.runs().iter().skip(1).all(|&(_, m)| m % (r + 1) == 0));

                        let (a, b, _) = phi_with_moves(&down, &up, r);
                        let (oa, ob) = psi_oracle(&down.parts(), &up.parts(), r, false);
                        assert_eq!((a.parts(), b.parts()), (oa, ob));
                        let runs = b.runs();
                        let body = &runs[..runs.len().saturating_sub(1)];
                        assert!(body.iter().all(|&(_, m)| m % (r + 1) == 0));
                    }
                }
            }
        }
    }
}
