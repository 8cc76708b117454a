//! JSON traces of single map applications, for debugging and the command
//! line.

use serde::Serialize;
use serde_json::Value;

use crate::bijections::delta::delta_step;
use crate::bijections::gamma::{gamma_star_step, gamma_step, GammaCase};
use crate::bijections::multiples::{split_multiples, split_multiplicities};
use crate::bijections::pair_ops::Move;
use crate::bijections::{
    cap_phi_r, cap_psi_r, delta_inv, gamma_inv, gamma_star_inv, glaisher_f, glaisher_f_inv, phi_r,
    psi_r, IndexedPartition, MapId, PartitionPair,
};
use crate::error::BijectionError;
use crate::partition::Partition;

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Intermediate {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjugate: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cut_index: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub moves: Vec<Move>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shift: Option<Move>,
    /// Named sub-partitions, in the order they were formed.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub pieces: Vec<(String, Partition)>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Trace {
    pub map: MapId,
    pub inverse: bool,
    pub r: u32,
    pub input: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<GammaCase>,
    pub intermediate: Intermediate,
    pub output: Value,
}

fn json<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("plain data serializes")
}

fn partition_trace(
    map: MapId,
    inverse: bool,
    r: u32,
    input: &Partition,
    pieces: Vec<(String, Partition)>,
    output: &Partition,
) -> Trace {
    Trace {
        map,
        inverse,
        r,
        input: json(input),
        case: None,
        intermediate: Intermediate {
            pieces,
            ..Intermediate::default()
        },
        output: json(output),
    }
}

/// Forward trace of one of the partition-to-partition maps.
pub fn trace_partition_map(map: MapId, pi: &Partition, r: u32) -> Result<Trace, BijectionError> {
    let out = match map {
        MapId::Glaisher => glaisher_f(pi, r)?,
        MapId::Phi => phi_r(pi, r)?,
        MapId::CapPhi => cap_phi_r(pi, r)?,
        _ => {
            return Err(BijectionError::NotInCodomain(format!(
                "{map} acts on indexed partitions"
            )))
        }
    };
    let pieces = match map {
        MapId::Glaisher => Vec::new(),
        _ => {
            let (rest, multiples) = split_multiples(pi, r);
            vec![
                ("pi_o".to_owned(), rest.clone()),
                ("pi_r".to_owned(), multiples.clone()),
                ("f(pi_o)".to_owned(), glaisher_f(&rest, r)?),
                ("pi_r'".to_owned(), multiples.conjugate()),
            ]
        }
    };
    Ok(partition_trace(map, false, r, pi, pieces, &out))
}

/// Inverse trace of one of the partition-to-partition maps.
pub fn trace_partition_map_inv(
    map: MapId,
    nu: &Partition,
    r: u32,
) -> Result<Trace, BijectionError> {
    let out = match map {
        MapId::Glaisher => glaisher_f_inv(nu, r)?,
        MapId::Phi => psi_r(nu, r)?,
        MapId::CapPhi => cap_psi_r(nu, r)?,
        _ => {
            return Err(BijectionError::NotInCodomain(format!(
                "{map} acts on indexed partitions"
            )))
        }
    };
    let pieces = match map {
        MapId::Glaisher => Vec::new(),
        _ => {
            let (rest, full) = split_multiplicities(nu, r);
            vec![("nu_o".to_owned(), rest), ("nu_r".to_owned(), full)]
        }
    };
    Ok(partition_trace(map, true, r, nu, pieces, &out))
}

/// Forward trace of `Γ`, `Γ*` or `Δ`.
pub fn trace_indexed_map(
    map: MapId,
    x: &IndexedPartition,
    r: u32,
) -> Result<Trace, BijectionError> {
    let (case, intermediate, output) = match map {
        MapId::Gamma | MapId::GammaStar => {
            let step = if map == MapId::Gamma {
                gamma_step(x, r)?
            } else {
                gamma_star_step(x, r)?
            };
            let intermediate = Intermediate {
                conjugate: Some(step.conjugate),
                cut_index: step.cut_index,
                moves: step.moves,
                shift: step.shift,
                pieces: Vec::new(),
            };
            (Some(step.case), intermediate, step.output)
        }
        MapId::Delta => {
            let step = delta_step(x, r)?;
            let intermediate = Intermediate {
                conjugate: Some(step.conjugate),
                cut_index: Some(step.cut_index),
                moves: step.moves,
                ..Intermediate::default()
            };
            (None, intermediate, step.output)
        }
        _ => {
            return Err(BijectionError::NotInCodomain(format!(
                "{map} acts on partitions"
            )))
        }
    };
    Ok(Trace {
        map,
        inverse: false,
        r,
        input: json(x),
        case,
        intermediate,
        output: json(&output),
    })
}

/// Inverse trace of `Γ`, `Γ*` or `Δ`.
pub fn trace_indexed_map_inv(
    map: MapId,
    pair: &PartitionPair,
    r: u32,
) -> Result<Trace, BijectionError> {
    let out = match map {
        MapId::Gamma => gamma_inv(pair, r)?,
        MapId::GammaStar => gamma_star_inv(pair, r)?,
        MapId::Delta => delta_inv(pair, r)?,
        _ => {
            return Err(BijectionError::NotInCodomain(format!(
                "{map} acts on partitions"
            )))
        }
    };
    let intermediate = Intermediate {
        conjugate: Some(out.lambda.conjugate()),
        ..Intermediate::default()
    };
    Ok(Trace {
        map,
        inverse: true,
        r,
        input: json(pair),
        case: None,
        intermediate,
        output: json(&out),
    })
}
