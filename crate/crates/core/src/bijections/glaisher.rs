//! Glaisher's bijection between `r`-regular partitions (no part divisible by
//! `r`) and `r`-strict partitions (no part repeated `r` or more times).

use crate::bijections::require_r;
use crate::error::BijectionError;
use crate::partition::Partition;

/// Repeatedly merges `r` equal parts into one, until every multiplicity is
/// below `r`.
///
/// On run form this is the base-`r` expansion of each multiplicity: `v` with
/// multiplicity `sum_k d_k r^k` becomes `d_k` copies of `v r^k`.
pub fn glaisher_f(pi: &Partition, r: u32) -> Result<Partition, BijectionError> {
    require_r(r, 2)?;
    if let Some(&(part, _)) = pi.runs().iter().find(|&&(v, _)| v % r == 0) {
        return Err(BijectionError::NotRegular { part, r });
    }
    let mut pairs = Vec::new();
    for &(v, m) in pi.runs() {
        let (mut m, mut value) = (m, v);
        while m > 0 {
            if m % r > 0 {
                pairs.push((value, m % r));
            }
            m /= r;
            if m > 0 {
                value = value.checked_mul(r).expect("part size overflow");
            }
        }
    }
    Ok(Partition::from_multiplicities(pairs).expect("parts are positive"))
}

/// Repeatedly splits each multiple of `r` into `r` equal parts, until no part
/// is divisible by `r`.
pub fn glaisher_f_inv(pi: &Partition, r: u32) -> Result<Partition, BijectionError> {
    require_r(r, 2)?;
    if let Some(&(part, multiplicity)) = pi.runs().iter().find(|&&(_, m)| m >= r) {
        return Err(BijectionError::NotStrict {
            part,
            multiplicity,
            r,
        });
    }
    let pairs = pi.runs().iter().map(|&(w, m)| {
        let (mut v, mut copies) = (w, m);
        while v % r == 0 {
            v /= r;
            copies *= r;
        }
        (v, copies)
    });
    Ok(Partition::from_multiplicities(pairs).expect("parts are positive"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        assert_eq!(glaisher_f(&p("[7,1,1,1,1]"), 3).unwrap(), p("[7,3,1]"));
        assert_eq!(glaisher_f_inv(&p("[7,3,1]"), 3).unwrap(), p("[7,1,1,1,1]"));
    }

    #[test]
    fn empty_maps_to_empty() {
        assert_eq!(
            glaisher_f(&Partition::empty(), 2).unwrap(),
            Partition::empty()
        );
        assert_eq!(
            glaisher_f_inv(&Partition::empty(), 5).unwrap(),
            Partition::empty()
        );
    }

    #[test]
    fn odd_to_distinct() {
        // 1^7 -> 4 + 2 + 1
        assert_eq!(glaisher_f(&p("[1,1,1,1,1,1,1]"), 2).unwrap(), p("[4,2,1]"));
        assert_eq!(glaisher_f_inv(&p("[6,1]"), 2).unwrap(), p("[3,3,1]"));
    }

    #[test]
    fn precondition_violations_name_the_culprit() {
        assert_eq!(
            glaisher_f(&p("[6,1]"), 3),
            Err(BijectionError::NotRegular { part: 6, r: 3 })
        );
        assert_eq!(
            glaisher_f_inv(&p("[2,2,2,1]"), 3),
            Err(BijectionError::NotStrict {
                part: 2,
                multiplicity: 3,
                r: 3
            })
        );
        assert!(matches!(
            glaisher_f(&p("[1]"), 1),
            Err(BijectionError::InvalidR { .. })
        ));
    }
}
