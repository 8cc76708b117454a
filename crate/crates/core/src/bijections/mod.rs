//! Constructive weight-preserving maps between partition families.
//!
//! * [`glaisher`]: merging `r` equal parts, between `r`-regular and
//!   `r`-strict partitions.
//! * [`multiples`]: the maps that send parts divisible by `r` through
//!   conjugation, relating counts of multiples of `r` to `r`-repeating parts.
//! * [`pair_ops`]: the two operators that move surplus copies (modulo `r+1`)
//!   from one side of a pair of partitions to the other.
//! * [`gamma`] and [`delta`]: bijections from indexed partitions `(λ, i)` to
//!   pairs `(α, β)`, realizing the mex and maex sum identities.
//! * [`codomain`]: membership checkers for every target set, written
//!   without reference to the maps.

pub mod codomain;
pub mod delta;
pub mod gamma;
pub mod glaisher;
pub mod multiples;
pub mod pair_ops;
pub mod trace;

use serde::{Deserialize, Serialize};

use crate::error::BijectionError;
use crate::partition::Partition;

pub use delta::{delta, delta_inv};
pub use gamma::{gamma, gamma_inv, gamma_star, gamma_star_inv, GammaCase};
pub use glaisher::{glaisher_f, glaisher_f_inv};
pub use multiples::{cap_phi_r, cap_psi_r, phi_r, psi_r};
pub use pair_ops::{phi_pair, psi_pair, Move};
pub use trace::{Intermediate, Trace};

/// The second component of a pair: a partition (possibly empty), or an empty
/// partition carrying one of `r` colors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "BetaRepr", into = "BetaRepr")]
pub enum BetaSide {
    Partition(Partition),
    ColoredEmpty(u32),
}

#[derive(Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum BetaRepr {
    Plain(Partition),
    Colored { empty_color: u32 },
}

impl From<BetaRepr> for BetaSide {
    fn from(repr: BetaRepr) -> Self {
        match repr {
            BetaRepr::Plain(p) => BetaSide::Partition(p),
            BetaRepr::Colored { empty_color } => BetaSide::ColoredEmpty(empty_color),
        }
    }
}

impl From<BetaSide> for BetaRepr {
    fn from(side: BetaSide) -> Self {
        match side {
            BetaSide::Partition(p) => BetaRepr::Plain(p),
            BetaSide::ColoredEmpty(c) => BetaRepr::Colored { empty_color: c },
        }
    }
}

impl BetaSide {
    pub fn as_partition(&self) -> Option<&Partition> {
        match self {
            BetaSide::Partition(p) => Some(p),
            BetaSide::ColoredEmpty(_) => None,
        }
    }

    pub fn color(&self) -> Option<u32> {
        match self {
            BetaSide::Partition(_) => None,
            BetaSide::ColoredEmpty(c) => Some(*c),
        }
    }

    pub fn weight(&self) -> u64 {
        self.as_partition().map_or(0, Partition::weight)
    }
}

/// An ordered pair `(α, β)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartitionPair {
    pub alpha: Partition,
    pub beta: BetaSide,
}

impl PartitionPair {
    pub fn new(alpha: Partition, beta: Partition) -> Self {
        Self {
            alpha,
            beta: BetaSide::Partition(beta),
        }
    }

    pub fn colored(alpha: Partition, color: u32) -> Self {
        Self {
            alpha,
            beta: BetaSide::ColoredEmpty(color),
        }
    }

    pub fn weight(&self) -> u64 {
        self.alpha.weight() + self.beta.weight()
    }

    /// Conjugates a plain `β`; a colored empty `β` is left as is.
    ///
    /// The maps in this crate emit `β` in the orientation used by
    /// [`gamma`]; the target set of [`gamma_star`] in its generating-function
    /// form ([`codomain::is_shifted_mex_pair`]) expects `β` conjugated.
    pub fn conjugate_beta(&self) -> Self {
        let beta = match &self.beta {
            BetaSide::Partition(p) => BetaSide::Partition(p.conjugate()),
            colored => colored.clone(),
        };
        Self {
            alpha: self.alpha.clone(),
            beta,
        }
    }
}

/// A partition together with an index `i >= 1`. The admissible range of `i`
/// depends on the map it is fed to.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndexedPartition {
    pub lambda: Partition,
    pub i: u32,
}

impl IndexedPartition {
    pub fn new(lambda: Partition, i: u32) -> Self {
        Self { lambda, i }
    }
}

/// Names of the maps, as used on the command line and in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MapId {
    Glaisher,
    Phi,
    CapPhi,
    Gamma,
    GammaStar,
    Delta,
}

impl MapId {
    pub const ALL: [MapId; 6] = [
        MapId::Glaisher,
        MapId::Phi,
        MapId::CapPhi,
        MapId::Gamma,
        MapId::GammaStar,
        MapId::Delta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MapId::Glaisher => "glaisher",
            MapId::Phi => "phi",
            MapId::CapPhi => "cap-phi",
            MapId::Gamma => "gamma",
            MapId::GammaStar => "gamma-star",
            MapId::Delta => "delta",
        }
    }

    /// Smallest chain length the map accepts.
    pub fn min_r(self) -> u32 {
        match self {
            MapId::Glaisher | MapId::Phi | MapId::CapPhi => 2,
            MapId::Gamma | MapId::GammaStar | MapId::Delta => 1,
        }
    }

    /// True for the maps on indexed partitions `(λ, i)`.
    pub fn is_indexed(self) -> bool {
        matches!(self, MapId::Gamma | MapId::GammaStar | MapId::Delta)
    }
}

impl std::fmt::Display for MapId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for MapId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MapId::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown map `{s}`"))
    }
}

pub(crate) fn require_r(r: u32, min: u32) -> Result<(), BijectionError> {
    if r < min {
        return Err(BijectionError::InvalidR { r, min });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn beta_serialization() {
        let plain = PartitionPair::new("[2]".parse().unwrap(), Partition::empty());
        assert_eq!(
            serde_json::to_string(&plain).unwrap(),
            r#"{"alpha":"[2]","beta":"[]"}"#
        );
        let colored = PartitionPair::colored(Partition::empty(), 3);
        let json = serde_json::to_string(&colored).unwrap();
        assert_eq!(json, r#"{"alpha":"[]","beta":{"empty_color":3}}"#);
        let back: PartitionPair = serde_json::from_str(&json).unwrap();
        assert_eq!(back, colored);
    }
}
