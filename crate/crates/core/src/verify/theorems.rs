use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::enumerate::enumerate;
use crate::partition::Partition;
use crate::qseries::gf;
use crate::qseries::{PowerSeries, QMonomial};
use crate::verify::report::{Params, Record, VerificationReport};
use crate::verify::stats::{Family, SigmaStat};

/// The identities the harness knows how to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    /// Sum of mex equals the coefficients of `(-q;q)_inf^2`.
    Thm1_4,
    /// Multiples of `r`, largest `r`-repeating part, parts above the
    /// `(r-1)`-chain mex: equinumerous.
    Thm1_5,
    /// Sum of `mex(λ; r) + r - 1`.
    Thm1_6,
    /// Sum of `mex(λ; r) + ω_r(λ)`.
    Thm1_7,
    /// Sum of largest part minus maex.
    Thm1_8,
    /// Largest multiple of `r` occurring `j` times, smallest `r`-repeating
    /// part `j`, `j` parts above the `(r-1)`-chain maex: equinumerous, with a
    /// product generating function.
    Thm1_10,
    /// Sum of `ℓ(λ) - maex(λ; r) + Ω_r(λ)`.
    Thm1_11,
    /// Specializations of the q-binomial theorem.
    QBinomial,
    /// Bivariate generating function of `P_r^+` by r-chain maex.
    Przq,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::Thm1_4,
        TheoremId::Thm1_5,
        TheoremId::Thm1_6,
        TheoremId::Thm1_7,
        TheoremId::Thm1_8,
        TheoremId::Thm1_10,
        TheoremId::Thm1_11,
        TheoremId::QBinomial,
        TheoremId::Przq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Thm1_4 => "thm-1.4",
            TheoremId::Thm1_5 => "thm-1.5",
            TheoremId::Thm1_6 => "thm-1.6",
            TheoremId::Thm1_7 => "thm-1.7",
            TheoremId::Thm1_8 => "thm-1.8",
            TheoremId::Thm1_10 => "thm-1.10",
            TheoremId::Thm1_11 => "thm-1.11",
            TheoremId::QBinomial => "q-binomial",
            TheoremId::Przq => "przq",
        }
    }

    /// Default `(r values, j values, n_max)`.
    pub fn defaults(self) -> (Vec<u32>, Vec<u32>, u32) {
        match self {
            TheoremId::Thm1_4 => (vec![1], vec![], 40),
            TheoremId::Thm1_5 => ((2..=5).collect(), (0..=5).collect(), 25),
            TheoremId::Thm1_6 | TheoremId::Thm1_7 | TheoremId::Thm1_11 => {
                ((1..=6).collect(), vec![], 30)
            }
            TheoremId::Thm1_8 => (vec![1], vec![], 30),
            TheoremId::Thm1_10 => ((2..=5).collect(), (1..=5).collect(), 25),
            TheoremId::QBinomial => (vec![], vec![], 60),
            TheoremId::Przq => ((1..=3).collect(), vec![], 20),
        }
    }

    /// Smallest admissible `r` and `j`.
    fn minimums(self) -> (u32, u32) {
        match self {
            TheoremId::Thm1_5 => (2, 0),
            TheoremId::Thm1_10 => (2, 1),
            _ => (1, 0),
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown theorem id `{s}`"))
    }
}

/// All partitions of every weight up to `n_max`, enumerated once.
struct Table(Vec<Vec<Partition>>);

impl Table {
    fn new(n_max: u32) -> Self {
        Table((0..=n_max).map(|n| enumerate(n).collect()).collect())
    }

    fn sum(&self, n: u32, r: u32, stat: SigmaStat) -> i128 {
        self.0[n as usize]
            .iter()
            .map(|l| i128::from(stat.value(l, r)))
            .sum()
    }

    fn count(&self, n: u32, f: impl Fn(&Partition) -> bool) -> i128 {
        self.0[n as usize].iter().filter(|l| f(l)).count() as i128
    }
}

fn coeff(series: &PowerSeries, n: u32) -> i128 {
    series
        .coeff(n as usize)
        .expect("series built to cover n_max")
}

/// Runs the comparisons for `id`.
///
/// `rs` and `js` fall back to [`TheoremId::defaults`] when empty; values
/// below the admissible minimum are an error. Series are expanded to
/// `max(order, n_max)`.
pub fn check_theorem(
    id: TheoremId,
    rs: &[u32],
    js: &[u32],
    n_max: u32,
    order: usize,
) -> Result<VerificationReport, String> {
    let start = Instant::now();
    let (default_rs, default_js, _) = id.defaults();
    let rs = if rs.is_empty() {
        default_rs
    } else {
        rs.to_vec()
    };
    let js = if js.is_empty() {
        default_js
    } else {
        js.to_vec()
    };
    let (min_r, min_j) = id.minimums();
    if let Some(&r) = rs.iter().find(|&&r| r < min_r) {
        return Err(format!("{id} needs r >= {min_r}, got {r}"));
    }
    if let Some(&j) = js.iter().find(|&&j| j < min_j) {
        return Err(format!("{id} needs j >= {min_j}, got {j}"));
    }
    let order = order.max(n_max as usize);
    let mut recs = Vec::new();
    let ns = 0..=n_max;

    match id {
        TheoremId::Thm1_4 => {
            let table = Table::new(n_max);
            let series = gf::gf_sigma_mex(order);
            for n in ns {
                recs.push(Record::new(
                    "sigma-mex",
                    None,
                    None,
                    n,
                    table.sum(n, 1, SigmaStat::MexR),
                    coeff(&series, n),
                ));
            }
        }
        TheoremId::Thm1_5 => {
            let table = Table::new(n_max);
            for &r in &rs {
                for &j in &js {
                    for n in ns.clone() {
                        let e = table.count(n, |l| Family::E.contains(l, r, j));
                        let l = table.count(n, |l| Family::L.contains(l, r, j));
                        let m = table.count(n, |l| Family::MexAbove.contains(l, r, j));
                        recs.push(Record::new("E=L", Some(r), Some(j), n, e, l));
                        recs.push(Record::new("E=mex-above", Some(r), Some(j), n, e, m));
                    }
                }
            }
        }
        TheoremId::Thm1_6 => {
            let table = Table::new(n_max);
            for &r in &rs {
                let shifted = gf::gf_mex_shifted_rhs(r, order);
                let plain = gf::gf_mexr3_rhs(r, order);
                for n in ns.clone() {
                    let lhs = table.sum(n, r, SigmaStat::MexRPlusRm1);
                    recs.push(Record::new(
                        "mex+r-1",
                        Some(r),
                        None,
                        n,
                        lhs,
                        coeff(&shifted, n),
                    ));
                    let lhs = table.sum(n, r, SigmaStat::MexR);
                    recs.push(Record::new("mex", Some(r), None, n, lhs, coeff(&plain, n)));
                }
            }
        }
        TheoremId::Thm1_7 => {
            let table = Table::new(n_max);
            for &r in &rs {
                let series = gf::gf_mexr2_rhs(r, order);
                // Same series rebuilt from the mex generating function:
                // mexr3 + (r-1)/(q;q)_inf - (r-1)(q^{r+1};q^{r+1})_inf/(q;q)_inf.
                let k = i128::from(r) - 1;
                let rebuilt = &(&gf::gf_mexr3_rhs(r, order) + &gf::gf_partitions(order).scale(k))
                    - &gf::gf_strict(r + 1, order).scale(k);
                for n in ns.clone() {
                    let lhs = table.sum(n, r, SigmaStat::MexRPlusOmega);
                    recs.push(Record::new(
                        "mex+omega",
                        Some(r),
                        None,
                        n,
                        lhs,
                        coeff(&series, n),
                    ));
                }
                for n in 0..=order as u32 {
                    recs.push(Record::new(
                        "via-mex-series",
                        Some(r),
                        None,
                        n,
                        coeff(&series, n),
                        coeff(&rebuilt, n),
                    ));
                }
            }
        }
        TheoremId::Thm1_8 => {
            let table = Table::new(n_max);
            let series = gf::gf_max1_rhs(order);
            let largest = gf::gf_sigma_largest(order);
            for n in ns {
                let sl = table.sum(n, 1, SigmaStat::SigmaL);
                let lhs = sl - table.sum(n, 1, SigmaStat::SigmaMaex);
                recs.push(Record::new(
                    "largest-minus-maex",
                    None,
                    None,
                    n,
                    lhs,
                    coeff(&series, n),
                ));
                recs.push(Record::new(
                    "sigma-largest",
                    None,
                    None,
                    n,
                    sl,
                    coeff(&largest, n),
                ));
            }
        }
        TheoremId::Thm1_10 => {
            let table = Table::new(n_max);
            for &r in &rs {
                for &j in &js {
                    let series = gf::gf_j_parts(r, j, order);
                    let h_series = gf::gf_largest_multiple_mult(r, j, order);
                    for n in ns.clone() {
                        let h = table.count(n, |l| Family::H.contains(l, r, j));
                        let s = table.count(n, |l| Family::S.contains(l, r, j));
                        let m = table.count(n, |l| Family::MaexAbove.contains(l, r, j));
                        recs.push(Record::new("H=S", Some(r), Some(j), n, h, s));
                        recs.push(Record::new("H=maex-above", Some(r), Some(j), n, h, m));
                        recs.push(Record::new(
                            "H=series",
                            Some(r),
                            Some(j),
                            n,
                            h,
                            coeff(&series, n),
                        ));
                        recs.push(Record::new(
                            "H=H-series",
                            Some(r),
                            Some(j),
                            n,
                            h,
                            coeff(&h_series, n),
                        ));
                    }
                }
            }
        }
        TheoremId::Thm1_11 => {
            let table = Table::new(n_max);
            for &r in &rs {
                let sum_form = gf::gf_maxr1_rhs(r, order);
                let product_form = gf::gf_maxr1_rhs_product(r, order);
                for n in ns.clone() {
                    let lhs = table.sum(n, r, SigmaStat::EllMinusMaexPlusOmega);
                    recs.push(Record::new(
                        "ell-maex+Omega",
                        Some(r),
                        None,
                        n,
                        lhs,
                        coeff(&sum_form, n),
                    ));
                }
                for n in 0..=order as u32 {
                    let (a, b) = (coeff(&sum_form, n), coeff(&product_form, n));
                    recs.push(Record::new("sum=product", Some(r), None, n, a, b));
                }
            }
        }
        TheoremId::QBinomial => {
            let cases: [(Option<QMonomial>, u32, &str); 6] = [
                (None, 1, "a=0,z=q"),
                (None, 2, "a=0,z=q^2"),
                (Some(QMonomial::q_pow(1)), 1, "a=q,z=q"),
                (Some(QMonomial::neg_q_pow(1)), 2, "a=-q,z=q^2"),
                (Some(QMonomial::q_pow(2)), 3, "a=q^2,z=q^3"),
                (Some(QMonomial::neg_q_pow(3)), 1, "a=-q^3,z=q"),
            ];
            for (a, d, label) in cases {
                let lhs = gf::q_binomial_lhs(a, d, order).map_err(|e| e.to_string())?;
                let rhs = gf::q_binomial_rhs(a, d, order).map_err(|e| e.to_string())?;
                for n in ns.clone() {
                    recs.push(Record::new(
                        label,
                        None,
                        None,
                        n,
                        coeff(&lhs, n),
                        coeff(&rhs, n),
                    ));
                }
            }
        }
        TheoremId::Przq => {
            let table = Table::new(n_max);
            let z_order = n_max as usize;
            for &r in &rs {
                let closed = gf::przq(r, z_order, order);
                let double = gf::przq_double_sum(r, z_order, order);
                let at_one = closed.at_z_one();
                for n in ns.clone() {
                    for m in 0..=n_max {
                        let count = table.count(n, |l| !l.in_p0(r) && l.maex(r) == m);
                        let c = closed
                            .coeff(m as usize, n as usize)
                            .expect("within truncation");
                        let d = double
                            .coeff(m as usize, n as usize)
                            .expect("within truncation");
                        recs.push(Record::new("maex=m", Some(r), Some(m), n, count, c));
                        recs.push(Record::new("double-sum", Some(r), Some(m), n, c, d));
                    }
                    let plus = table.count(n, |l| !l.in_p0(r));
                    recs.push(Record::new(
                        "z=1",
                        Some(r),
                        None,
                        n,
                        plus,
                        coeff(&at_one, n),
                    ));
                }
            }
        }
    }

    let params = Params {
        r: if matches!(id, TheoremId::QBinomial) {
            vec![]
        } else {
            rs
        },
        j: if matches!(id, TheoremId::Thm1_5 | TheoremId::Thm1_10) {
            js
        } else {
            vec![]
        },
        order: Some(order),
    };
    Ok(VerificationReport::build(
        id.name(),
        params,
        n_max,
        recs,
        start,
    ))
}
