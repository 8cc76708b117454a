use proptest::prelude::*;

use excludant::bijections::{
    cap_phi_r, cap_psi_r, codomain, delta, delta_inv, gamma, gamma_inv, gamma_star, gamma_star_inv,
    glaisher_f, glaisher_f_inv, phi_r, psi_r,
};
use excludant::{IndexedPartition, Partition};

fn partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len)
        .prop_map(|parts| Partition::from_unsorted(parts).unwrap())
}

/// Literal reading of the r-chain mex: first k whose window is empty.
fn mex_oracle(parts: &[u32], r: u32) -> u32 {
    (1..)
        .find(|&k| (k..k + r).all(|x| !parts.contains(&x)))
        .unwrap()
}

/// Literal reading of the r-chain maex: scan k downward from the largest
/// part minus one.
fn maex_oracle(parts: &[u32], r: u32) -> u32 {
    let top = parts.first().copied().unwrap_or(0);
    (r..top)
        .rev()
        .find(|&k| (k + 1 - r..=k).all(|x| !parts.contains(&x)))
        .unwrap_or(0)
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(p in partition(20, 20)) {
        let c = p.conjugate();
        prop_assert_eq!(c.conjugate(), p.clone());
        prop_assert_eq!(c.weight(), p.weight());
        prop_assert_eq!(c.largest() as usize, p.num_parts());
    }

    #[test]
    fn cut_then_concat_restores(p in partition(15, 15), pick in 0usize..100) {
        let i = pick % (p.num_parts() + 1) + 1;
        let up = p.cut_up(i).unwrap();
        let down = p.cut_down(i).unwrap();
        prop_assert_eq!(up.num_parts(), i - 1);
        prop_assert_eq!(up.concat(&down), p);
    }

    #[test]
    fn excludants_match_literal_scans(p in partition(25, 12), r in 1u32..5) {
        let parts = p.parts();
        prop_assert_eq!(p.mex(r), mex_oracle(&parts, r));
        prop_assert_eq!(p.maex(r), maex_oracle(&parts, r));
        prop_assert_eq!(p.maex(r) > 0, !p.in_p0(r));
        if p.in_p0(r) {
            prop_assert_eq!(p.mex(r), p.largest() + 1);
        }
    }

    #[test]
    fn glaisher_round_trip(p in partition(30, 12), r in 2u32..6) {
        let regular = Partition::from_unsorted(p.parts_iter().filter(|x| x % r != 0)).unwrap();
        let image = glaisher_f(&regular, r).unwrap();
        prop_assert!(codomain::is_r_strict(&image, r));
        prop_assert_eq!(glaisher_f_inv(&image, r).unwrap(), regular);
    }

    #[test]
    fn phi_moves_multiples_to_largest_repeating(p in partition(24, 14), r in 2u32..5) {
        let image = phi_r(&p, r).unwrap();
        prop_assert_eq!(image.weight(), p.weight());
        prop_assert!(codomain::in_l_family(&image, r, p.count_multiples(r)));
        prop_assert_eq!(psi_r(&image, r).unwrap(), p.clone());
        if p.count_multiples(r) > 0 {
            let image = cap_phi_r(&p, r).unwrap();
            prop_assert!(codomain::in_s_family(&image, r, p.mult_of_largest_multiple(r)));
            prop_assert_eq!(cap_psi_r(&image, r).unwrap(), p);
        }
    }

    #[test]
    fn indexed_maps_round_trip(p in partition(12, 14), r in 1u32..5, pick in 0u32..1000) {
        let bound = p.mex(r) + p.omega(r);
        let x = IndexedPartition::new(p.clone(), pick % bound + 1);
        let out = gamma(&x, r).unwrap();
        prop_assert!(codomain::is_mex_pair(&out.alpha, out.beta.as_partition().unwrap(), r));
        prop_assert_eq!(gamma_inv(&out, r).unwrap(), x);

        let bound = p.mex(r) + r - 1;
        let x = IndexedPartition::new(p.clone(), pick % bound + 1);
        let out = gamma_star(&x, r).unwrap();
        prop_assert!(codomain::is_shifted_mex_pair(&out.conjugate_beta(), r));
        prop_assert_eq!(gamma_star_inv(&out, r).unwrap(), x);

        let bound = p.largest() - p.maex(r) + p.big_omega(r);
        let x = IndexedPartition::new(p, pick % bound + 1);
        let out = delta(&x, r).unwrap();
        prop_assert!(codomain::is_maex_pair(&out.alpha, out.beta.as_partition().unwrap(), r));
        prop_assert_eq!(delta_inv(&out, r).unwrap(), x);
    }
}
