//! Closed-form generating functions for the excludant statistics and the
//! partition families they are compared against.
//!
//! Every builder is a pure function of its parameters and the truncation
//! order. Infinite sums stop at the first index whose leading power of `q`
//! exceeds the order; infinite products stop at the first factor `1 - q^e`
//! with `e > order`.

use crate::error::SeriesError;
use crate::qseries::bivariate::BivariateSeries;
use crate::qseries::pochhammer::{
    poch_finite, poch_finite_inv, poch_inf, poch_inf_inv, pochhammer, pochhammer_inv, Length,
    QMonomial,
};
use crate::qseries::PowerSeries;

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 60;

/// `1 / (q;q)_inf`, the partition generating function.
pub fn gf_partitions(order: usize) -> PowerSeries {
    poch_inf_inv(1, 1, order)
}

/// `(-q;q)_inf^2`.
pub fn gf_sigma_mex(order: usize) -> PowerSeries {
    let distinct =
        pochhammer(QMonomial::neg_q_pow(1), 1, Length::Infinite, order).expect("base exponent 1");
    &distinct * &distinct
}

/// `(q^s;q^s)_inf / (q;q)_inf`: partitions in which every part occurs fewer
/// than `modulus` times.
pub fn gf_strict(modulus: u32, order: usize) -> PowerSeries {
    assert!(modulus >= 1);
    let mut out = poch_inf(modulus, modulus, order);
    for e in 1..=order {
        out.div_binomial(1, e);
    }
    out
}

/// `(q^{r+1};q^{r+1})_inf / (q;q)_inf * sum_{m=1}^{r} 1/(q^m;q^{r+1})_inf`,
/// the generating function of `mex(λ; r) + r - 1` summed over partitions.
pub fn gf_mex_shifted_rhs(r: u32, order: usize) -> PowerSeries {
    assert!(r >= 1);
    let inner = (1..=r).fold(PowerSeries::zero(order), |acc, m| {
        &acc + &poch_inf_inv(m, r + 1, order)
    });
    &gf_strict(r + 1, order) * &inner
}

/// `-(r-1)/(q;q)_inf + gf_mex_shifted_rhs(r)`, the generating function of
/// the r-chain mex summed over partitions.
pub fn gf_mexr3_rhs(r: u32, order: usize) -> PowerSeries {
    &gf_mex_shifted_rhs(r, order) - &gf_partitions(order).scale(i128::from(r) - 1)
}

/// `1 + sum_{n>=1} q^n (1 - q^{(s-1)n}) / ((1-q^n)(q^s;q^s)_n)`.
///
/// With `s = r + 1` this counts partitions whose largest part has
/// multiplicity not divisible by `s` while every other multiplicity is.
pub fn gf_largest_mult_nondivisible(modulus: u32, order: usize) -> PowerSeries {
    assert!(modulus >= 1);
    let s = modulus as usize;
    let mut out = PowerSeries::one(order);
    for n in 1..=order {
        let mut term = PowerSeries::monomial(1, n, order);
        term.mul_binomial(1, (s - 1) * n);
        term.div_binomial(1, n);
        let term = &term * &poch_finite_inv(modulus, modulus, n as u32, order);
        out = &out + &term;
    }
    out
}

/// `(q^{r+1};q^{r+1})_inf/(q;q)_inf * (1 + sum_{n>=1} q^n(1-q^{rn})/((1-q^n)(q^{r+1};q^{r+1})_n))`,
/// the generating function of `mex(λ; r) + ω_r(λ)`.
pub fn gf_mexr2_rhs(r: u32, order: usize) -> PowerSeries {
    assert!(r >= 1);
    &gf_strict(r + 1, order) * &gf_largest_mult_nondivisible(r + 1, order)
}

/// `1/(q;q)_inf * sum_{n>=1} q^n (q^2;q^2)_{n-1}`, the generating function of
/// `σL(n) - σmaex(n)`.
pub fn gf_max1_rhs(order: usize) -> PowerSeries {
    let mut sum = PowerSeries::zero(order);
    for n in 1..=order {
        let term = poch_finite(2, 2, n as u32 - 1, order).shift(n);
        sum = &sum + &term;
    }
    &gf_partitions(order) * &sum
}

/// `(q^{r+1};q^{r+1})_inf/(q;q)_inf + 1/(q;q)_inf * sum_{n>=1} q^n (q^{r+1};q^{r+1})_n / (1-q^n)`,
/// the generating function of `ℓ(λ) - maex(λ; r) + Ω_r(λ)`.
pub fn gf_maxr1_rhs(r: u32, order: usize) -> PowerSeries {
    assert!(r >= 1);
    let mut sum = PowerSeries::zero(order);
    for n in 1..=order {
        let mut term = poch_finite(r + 1, r + 1, n as u32, order).shift(n);
        term.div_binomial(1, n);
        sum = &sum + &term;
    }
    &gf_strict(r + 1, order) + &(&gf_partitions(order) * &sum)
}

/// Partitions where only the smallest part may have multiplicity not
/// divisible by `modulus`:
/// `1 + sum_{n>=1} q^n/(1-q^n) * 1/(q^{(n+1)s}; q^s)_inf`.
pub fn gf_smallest_mult_free(modulus: u32, order: usize) -> PowerSeries {
    assert!(modulus >= 1);
    let mut out = PowerSeries::one(order);
    for n in 1..=order {
        let mut term = PowerSeries::monomial(1, n, order);
        term.div_binomial(1, n);
        let tail_start = (n as u32 + 1) * modulus;
        if tail_start as usize <= order {
            term = &term * &poch_inf_inv(tail_start, modulus, order);
        }
        out = &out + &term;
    }
    out
}

/// The product form of [`gf_maxr1_rhs`]:
/// `gf_strict(r+1) * gf_smallest_mult_free(r+1)`.
pub fn gf_maxr1_rhs_product(r: u32, order: usize) -> PowerSeries {
    assert!(r >= 1);
    &gf_strict(r + 1, order) * &gf_smallest_mult_free(r + 1, order)
}

/// `1/(q;q)_inf * sum_{n>=1} q^n/(1-q^n)`, the generating function of the sum
/// of largest parts.
pub fn gf_sigma_largest(order: usize) -> PowerSeries {
    let mut sum = PowerSeries::zero(order);
    for n in 1..=order {
        let mut term = PowerSeries::monomial(1, n, order);
        term.div_binomial(1, n);
        sum = &sum + &term;
    }
    &gf_partitions(order) * &sum
}

/// `q^{jr}/(1-q^j) * 1/(q^{j+1};q)_inf * prod_{n=1}^{j-1} (1 + q^n + … + q^{n(r-1)})`:
/// partitions whose smallest r-repeating part is `j`.
pub fn gf_j_parts(r: u32, j: u32, order: usize) -> PowerSeries {
    assert!(r >= 2 && j >= 1);
    let lead = (j as usize) * (r as usize);
    let mut out = PowerSeries::monomial(1, lead, order);
    out.div_binomial(1, j as usize);
    out = &out * &poch_inf_inv(j + 1, 1, order);
    for n in 1..j as usize {
        let block = PowerSeries::from_fn(order, |k| i128::from(k % n == 0 && k / n < r as usize));
        out = &out * &block;
    }
    out
}

/// `(q^r;q^r)_inf/(q;q)_inf * sum_{k>=1} q^{krj} / (q^r;q^r)_{k-1}`: partitions
/// whose largest multiple of `r` occurs exactly `j` times.
pub fn gf_largest_multiple_mult(r: u32, j: u32, order: usize) -> PowerSeries {
    assert!(r >= 2 && j >= 1);
    let mut sum = PowerSeries::zero(order);
    for k in 1.. {
        let lead = (k * r * j) as usize;
        if lead > order {
            break;
        }
        let term = &PowerSeries::monomial(1, lead, order) * &poch_finite_inv(r, r, k - 1, order);
        sum = &sum + &term;
    }
    &gf_strict(r, order) * &sum
}

/// Left side of the q-binomial theorem, `sum_{n>=0} (a;q)_n / (q;q)_n z^n`,
/// specialized at `z = q^d`. `a = None` stands for `a = 0`.
pub fn q_binomial_lhs(
    a: Option<QMonomial>,
    d: u32,
    order: usize,
) -> Result<PowerSeries, SeriesError> {
    if d == 0 {
        return Err(SeriesError::InvalidParameter("z = q^d needs d >= 1".into()));
    }
    let mut out = PowerSeries::zero(order);
    for n in 0.. {
        let lead = (n * d) as usize;
        if lead > order {
            break;
        }
        let mut term = PowerSeries::monomial(1, lead, order);
        if let Some(a) = a {
            term = &term * &pochhammer(a, 1, Length::Finite(n), order)?;
        }
        term = &term * &poch_finite_inv(1, 1, n, order);
        out = &out + &term;
    }
    Ok(out)
}

/// Right side of the q-binomial theorem, `(az;q)_inf / (z;q)_inf` at `z = q^d`.
pub fn q_binomial_rhs(
    a: Option<QMonomial>,
    d: u32,
    order: usize,
) -> Result<PowerSeries, SeriesError> {
    if d == 0 {
        return Err(SeriesError::InvalidParameter("z = q^d needs d >= 1".into()));
    }
    let denominator = pochhammer_inv(QMonomial::q_pow(d), 1, Length::Infinite, order)?;
    Ok(match a {
        None => denominator,
        Some(a) => {
            let az = QMonomial {
                negative: a.negative,
                exp: a.exp + d,
            };
            &pochhammer(az, 1, Length::Infinite, order)? * &denominator
        }
    })
}

/// Bivariate generating function of partitions in `P_r^+` by r-chain maex:
/// `z^r sum_{n>=0} q^{(r+1)(n+1)} (q^{r+1};q^{r+1})_n / ((q;q)_n (z q^{n+1};q)_inf)`.
pub fn przq(r: u32, z_order: usize, q_order: usize) -> BivariateSeries {
    assert!(r >= 1);
    let s = r as usize + 1;
    let mut total = BivariateSeries::zero(z_order, q_order);
    for n in 0.. {
        let lead = s * (n + 1);
        if lead > q_order {
            break;
        }
        let mut q_part = poch_finite(r + 1, r + 1, n as u32, q_order).shift(lead);
        q_part = &q_part * &poch_finite_inv(1, 1, n as u32, q_order);
        let mut term = BivariateSeries::from_q_series(0, &q_part, z_order);
        for e in (n + 1)..=q_order {
            term.div_z_binomial(e);
        }
        total = total.add(&term);
    }
    total.shift_z(r as usize)
}

/// The double-sum form of [`przq`]:
/// `sum_{m>=r} sum_{l>=1} z^m q^{(m+1)l} / (q;q)_{m-r} * (q^{r+1};q^{r+1})_{l-1} / (q;q)_{l-1}`.
pub fn przq_double_sum(r: u32, z_order: usize, q_order: usize) -> BivariateSeries {
    assert!(r >= 1);
    let mut total = BivariateSeries::zero(z_order, q_order);
    for m in (r as usize)..=z_order {
        let mut row = PowerSeries::zero(q_order);
        for l in 1.. {
            let lead = (m + 1) * l;
            if lead > q_order {
                break;
            }
            let mut term = poch_finite(r + 1, r + 1, l as u32 - 1, q_order).shift(lead);
            term = &term * &poch_finite_inv(1, 1, l as u32 - 1, q_order);
            row = &row + &term;
        }
        if m > r as usize {
            row = &row * &poch_finite_inv(1, 1, (m - r as usize) as u32, q_order);
        }
        total = total.add(&BivariateSeries::from_q_series(m, &row, z_order));
    }
    total
}
