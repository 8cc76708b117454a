use std::time::Instant;

use crate::bijections::codomain::{
    in_e_family, in_h_family, in_l_family, in_s_family, is_maex_pair, is_mex_pair, is_r_regular,
    is_r_strict, is_shifted_mex_pair,
};
use crate::bijections::{
    cap_phi_r, cap_psi_r, delta, delta_inv, gamma, gamma_inv, gamma_star, gamma_star_inv,
    glaisher_f, glaisher_f_inv, phi_r, psi_r, IndexedPartition, MapId, PartitionPair,
};
use crate::enumerate::enumerate;
use crate::error::BijectionError;
use crate::partition::Partition;
use crate::verify::report::{Params, Record, VerificationReport};

/// Certifies `map` at chain length `r` on every input of weight at most
/// `n_max`.
///
/// Each weight `n` contributes three kinds of rows:
///
/// * `forward`: domain size against the number of domain elements whose image
///   has weight `n`, lies in the codomain, and maps back to the input;
/// * `backward`: codomain size against the number of codomain elements whose
///   preimage lies in the domain and maps forward to the element;
/// * `cardinality`: domain size against codomain size, each enumerated from
///   its own definition (per `j` for the family maps).
pub fn certify_bijection(
    map: MapId,
    r: u32,
    n_max: u32,
) -> Result<VerificationReport, BijectionError> {
    if r < map.min_r() {
        return Err(BijectionError::InvalidR {
            r,
            min: map.min_r(),
        });
    }
    let start = Instant::now();
    let mut recs = Vec::new();
    for n in 0..=n_max {
        match map {
            MapId::Glaisher | MapId::Phi | MapId::CapPhi => {
                certify_partition_map(map, r, n, &mut recs)
            }
            MapId::Gamma | MapId::GammaStar | MapId::Delta => {
                certify_indexed_map(map, r, n, &mut recs)
            }
        }
    }
    let params = Params {
        r: vec![r],
        j: vec![],
        order: None,
    };
    Ok(VerificationReport::build(
        &format!("bij-{map}"),
        params,
        n_max,
        recs,
        start,
    ))
}

/// Reads the fiber index `j` off a partition, `None` outside the set.
type FiberIndex = fn(&Partition, u32) -> Option<u32>;

fn certify_partition_map(map: MapId, r: u32, n: u32, recs: &mut Vec<Record>) {
    // Each map restricts to fibers indexed by j; `dom_j` and `cod_j` read the
    // index off an element of the domain and codomain.
    let (dom_j, cod_j): (FiberIndex, FiberIndex) = match map {
        MapId::Glaisher => (
            |p, r| is_r_regular(p, r).then_some(0),
            |p, r| is_r_strict(p, r).then_some(0),
        ),
        MapId::Phi => (
            |p, r| (0..=p.weight() as u32).find(|&j| in_e_family(p, r, j)),
            |p, r| (0..=p.weight() as u32).find(|&j| in_l_family(p, r, j)),
        ),
        _ => (
            |p, r| (1..=p.weight() as u32).find(|&j| in_h_family(p, r, j)),
            |p, r| (1..=p.weight() as u32).find(|&j| in_s_family(p, r, j)),
        ),
    };
    let forward = |p: &Partition| match map {
        MapId::Glaisher => glaisher_f(p, r),
        MapId::Phi => phi_r(p, r),
        _ => cap_phi_r(p, r),
    };
    let backward = |p: &Partition| match map {
        MapId::Glaisher => glaisher_f_inv(p, r),
        MapId::Phi => psi_r(p, r),
        _ => cap_psi_r(p, r),
    };

    let all: Vec<Partition> = enumerate(n).collect();
    let domain: Vec<(&Partition, u32)> = all
        .iter()
        .filter_map(|p| dom_j(p, r).map(|j| (p, j)))
        .collect();
    let codomain: Vec<(&Partition, u32)> = all
        .iter()
        .filter_map(|p| cod_j(p, r).map(|j| (p, j)))
        .collect();

    let fwd_ok = domain
        .iter()
        .filter(|&&(p, j)| {
            forward(p).is_ok_and(|img| {
                img.weight() == u64::from(n)
                    && cod_j(&img, r) == Some(j)
                    && backward(&img).is_ok_and(|back| &back == p)
            })
        })
        .count();
    let bwd_ok = codomain
        .iter()
        .filter(|&&(p, j)| {
            backward(p).is_ok_and(|pre| {
                dom_j(&pre, r) == Some(j) && forward(&pre).is_ok_and(|again| &again == p)
            })
        })
        .count();
    recs.push(Record::new(
        "forward",
        Some(r),
        None,
        n,
        domain.len() as i128,
        fwd_ok as i128,
    ));
    recs.push(Record::new(
        "backward",
        Some(r),
        None,
        n,
        codomain.len() as i128,
        bwd_ok as i128,
    ));

    let js: Vec<u32> = match map {
        MapId::Glaisher => vec![0],
        MapId::Phi => (0..=n).collect(),
        _ => (1..=n).collect(),
    };
    for j in js {
        let d = domain.iter().filter(|&&(_, k)| k == j).count();
        let c = codomain.iter().filter(|&&(_, k)| k == j).count();
        let j_field = (map != MapId::Glaisher).then_some(j);
        recs.push(Record::new(
            "cardinality",
            Some(r),
            j_field,
            n,
            d as i128,
            c as i128,
        ));
    }
}

/// Admissible indices for `λ` under each indexed map, from the statistics
/// alone.
fn index_bound(map: MapId, lambda: &Partition, r: u32) -> u32 {
    match map {
        MapId::Gamma => lambda.mex(r) + lambda.omega(r),
        MapId::GammaStar => lambda.mex(r) + r - 1,
        _ => lambda.largest() - lambda.maex(r) + lambda.big_omega(r),
    }
}

/// Every pair of total weight `n` in the target set of `map`, in the
/// orientation its membership checker expects.
fn target_pairs(map: MapId, r: u32, n: u32) -> Vec<PartitionPair> {
    let mut out = Vec::new();
    for k in 0..=n {
        let alphas: Vec<Partition> = enumerate(k).filter(|a| is_r_strict(a, r + 1)).collect();
        for beta in enumerate(n - k) {
            for alpha in &alphas {
                let keep = match map {
                    MapId::Gamma => is_mex_pair(alpha, &beta, r),
                    MapId::GammaStar => {
                        is_shifted_mex_pair(&PartitionPair::new(alpha.clone(), beta.clone()), r)
                    }
                    _ => is_maex_pair(alpha, &beta, r),
                };
                if keep {
                    out.push(PartitionPair::new(alpha.clone(), beta.clone()));
                }
            }
        }
        if map == MapId::GammaStar && k == n {
            for alpha in &alphas {
                for c in 1..=r {
                    out.push(PartitionPair::colored(alpha.clone(), c));
                }
            }
        }
    }
    out
}

fn certify_indexed_map(map: MapId, r: u32, n: u32, recs: &mut Vec<Record>) {
    let forward = |x: &IndexedPartition| match map {
        MapId::Gamma => gamma(x, r),
        MapId::GammaStar => gamma_star(x, r),
        _ => delta(x, r),
    };
    let backward = |p: &PartitionPair| match map {
        MapId::Gamma => gamma_inv(p, r),
        MapId::GammaStar => gamma_star_inv(p, r),
        _ => delta_inv(p, r),
    };
    // `Γ*` emits β conjugated relative to its target set.
    let orient = |p: PartitionPair| {
        if map == MapId::GammaStar {
            p.conjugate_beta()
        } else {
            p
        }
    };
    let member = |p: &PartitionPair| match (map, p.beta.as_partition()) {
        (MapId::GammaStar, _) => is_shifted_mex_pair(p, r),
        (MapId::Gamma, Some(b)) => is_mex_pair(&p.alpha, b, r),
        (MapId::Delta, Some(b)) => is_maex_pair(&p.alpha, b, r),
        _ => false,
    };

    let domain: Vec<IndexedPartition> = enumerate(n)
        .flat_map(|l| {
            (1..=index_bound(map, &l, r)).map(move |i| IndexedPartition::new(l.clone(), i))
        })
        .collect();
    let codomain = target_pairs(map, r, n);

    let fwd_ok = domain
        .iter()
        .filter(|x| {
            forward(x).is_ok_and(|img| {
                img.weight() == u64::from(n)
                    && member(&orient(img.clone()))
                    && backward(&img).is_ok_and(|back| &back == *x)
            })
        })
        .count();
    let bwd_ok = codomain
        .iter()
        .filter(|target| {
            let native = orient((*target).clone());
            backward(&native).is_ok_and(|pre| {
                pre.lambda.weight() == u64::from(n)
                    && (1..=index_bound(map, &pre.lambda, r)).contains(&pre.i)
                    && forward(&pre).is_ok_and(|again| again == native)
            })
        })
        .count();
    recs.push(Record::new(
        "forward",
        Some(r),
        None,
        n,
        domain.len() as i128,
        fwd_ok as i128,
    ));
    recs.push(Record::new(
        "backward",
        Some(r),
        None,
        n,
        codomain.len() as i128,
        bwd_ok as i128,
    ));
    recs.push(Record::new(
        "cardinality",
        Some(r),
        None,
        n,
        domain.len() as i128,
        codomain.len() as i128,
    ));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_map_certifies_on_small_weights() {
        for map in MapId::ALL {
            for r in map.min_r()..=map.min_r() + 1 {
                let report = certify_bijection(map, r, 8).unwrap();
                assert!(
                    report.passed,
                    "{map} r={r}: {:?}",
                    report.mismatches().next()
                );
            }
        }
    }

    #[test]
    fn rejects_small_r() {
        assert!(certify_bijection(MapId::Glaisher, 1, 3).is_err());
        assert!(certify_bijection(MapId::Gamma, 0, 3).is_err());
    }

    #[test]
    fn euler_instance_counts() {
        // odd parts vs distinct parts: 1,1,1,2,2,3,4,5,6,8,10
        let report = certify_bijection(MapId::Glaisher, 2, 10).unwrap();
        let sizes: Vec<i128> = report
            .records
            .iter()
            .filter(|rec| rec.check == "cardinality")
            .map(|rec| rec.lhs)
            .collect();
        assert_eq!(sizes, vec![1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10]);
    }
}
