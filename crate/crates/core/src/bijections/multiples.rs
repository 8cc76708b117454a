//! Maps that split off the parts divisible by `r`, send them through
//! conjugation, and recombine with Glaisher's map on the remaining parts.
//!
//! [`phi_r`] sends partitions with exactly `j` multiples of `r` to partitions
//! whose largest `r`-repeating part is `j`; [`cap_phi_r`] sends partitions
//! whose largest multiple of `r` occurs `j` times to partitions whose
//! smallest `r`-repeating part is `j`. Both apply the same construction
//! `f(π_o) * (π_r)'`; they differ in the family they are read on and in their
//! preconditions.

use crate::bijections::glaisher::{glaisher_f, glaisher_f_inv};
use crate::bijections::require_r;
use crate::error::BijectionError;
use crate::partition::Partition;

/// Splits `π` into `(π_o, π_r)`: parts not divisible by `r`, and multiples of
/// `r`.
pub(crate) fn split_multiples(pi: &Partition, r: u32) -> (Partition, Partition) {
    let (rest, multiples): (Vec<_>, Vec<_>) = pi.runs().iter().partition(|&&(v, _)| v % r != 0);
    (
        Partition::from_multiplicities(rest).expect("positive"),
        Partition::from_multiplicities(multiples).expect("positive"),
    )
}

/// Division-algorithm split of multiplicities `f_t = r q_t + s_t`, returning
/// `(ν_o, ν_r)` with `ν_o = (t^{s_t})` and `ν_r = (t^{r q_t})`.
pub(crate) fn split_multiplicities(nu: &Partition, r: u32) -> (Partition, Partition) {
    let rem = nu.runs().iter().map(|&(v, m)| (v, m % r));
    let full = nu.runs().iter().map(|&(v, m)| (v, r * (m / r)));
    (
        Partition::from_multiplicities(rem).expect("positive"),
        Partition::from_multiplicities(full).expect("positive"),
    )
}

fn forward(pi: &Partition, r: u32) -> Partition {
    let (rest, multiples) = split_multiples(pi, r);
    let merged = glaisher_f(&rest, r).expect("π_o is r-regular by construction");
    merged.concat(&multiples.conjugate())
}

fn backward(nu: &Partition, r: u32) -> Partition {
    let (rest, full) = split_multiplicities(nu, r);
    let kappa = glaisher_f_inv(&rest, r).expect("ν_o is r-strict by construction");
    kappa.concat(&full.conjugate())
}

/// `π ↦ f(π_o) * (π_r)'`. The number of multiples of `r` in `π` becomes the
/// largest `r`-repeating part of the image (`0` meaning none).
pub fn phi_r(pi: &Partition, r: u32) -> Result<Partition, BijectionError> {
    require_r(r, 2)?;
    Ok(forward(pi, r))
}

/// Inverse of [`phi_r`].
pub fn psi_r(nu: &Partition, r: u32) -> Result<Partition, BijectionError> {
    require_r(r, 2)?;
    Ok(backward(nu, r))
}

/// `π ↦ f(π_o) * (π_r)'` on partitions with at least one multiple of `r`.
/// The multiplicity of the largest multiple of `r` becomes the smallest
/// `r`-repeating part of the image.
pub fn cap_phi_r(pi: &Partition, r: u32) -> Result<Partition, BijectionError> {
    require_r(r, 2)?;
    if pi.count_multiples(r) == 0 {
        return Err(BijectionError::NoMultiple { r });
    }
    Ok(forward(pi, r))
}

/// Inverse of [`cap_phi_r`], on partitions with at least one `r`-repeating
/// part.
pub fn cap_psi_r(nu: &Partition, r: u32) -> Result<Partition, BijectionError> {
    require_r(r, 2)?;
    if nu.smallest_repeating(r) == 0 {
        return Err(BijectionError::NoRepeating { r });
    }
    Ok(backward(nu, r))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example_both_directions() {
        let pi = p("[9,7,6,6,6,1,1,1,1]");
        let nu = p("[7,4,4,4,4,4,4,3,1,1,1,1]");
        let (rest, multiples) = split_multiples(&pi, 3);
        assert_eq!(rest, p("[7,1,1,1,1]"));
        assert_eq!(multiples.conjugate(), p("[4,4,4,4,4,4,1,1,1]"));
        assert_eq!(phi_r(&pi, 3).unwrap(), nu);
        let (nu_o, nu_r) = split_multiplicities(&nu, 3);
        assert_eq!(nu_o, p("[7,3,1]"));
        assert_eq!(nu_r, p("[4,4,4,4,4,4,1,1,1]"));
        assert_eq!(psi_r(&nu, 3).unwrap(), pi);
    }

    #[test]
    fn empty_is_fixed() {
        assert_eq!(phi_r(&Partition::empty(), 4).unwrap(), Partition::empty());
        assert_eq!(psi_r(&Partition::empty(), 4).unwrap(), Partition::empty());
    }

    #[test]
    fn cap_phi_small_trace() {
        let image = cap_phi_r(&p("[6,1]"), 3).unwrap();
        assert_eq!(image, p("[1,1,1,1,1,1,1]"));
        assert_eq!(image.smallest_repeating(3), 1);
        assert_eq!(cap_psi_r(&image, 3).unwrap(), p("[6,1]"));
    }

    #[test]
    fn cap_maps_check_preconditions() {
        assert_eq!(
            cap_phi_r(&p("[5,1]"), 3),
            Err(BijectionError::NoMultiple { r: 3 })
        );
        assert_eq!(
            cap_psi_r(&p("[5,1,1]"), 3),
            Err(BijectionError::NoRepeating { r: 3 })
        );
    }
}
