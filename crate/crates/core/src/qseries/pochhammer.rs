//! q-Pochhammer products `(a; q^k)_n` with `a = ±q^m`, and Gaussian
//! polynomials.

use crate::error::SeriesError;
use crate::qseries::PowerSeries;

/// The base `a = ±q^exp` of a Pochhammer symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QMonomial {
    pub negative: bool,
    pub exp: u32,
}

impl QMonomial {
    /// `a = q^exp`
    pub fn q_pow(exp: u32) -> Self {
        Self {
            negative: false,
            exp,
        }
    }

    /// `a = -q^exp`
    pub fn neg_q_pow(exp: u32) -> Self {
        Self {
            negative: true,
            exp,
        }
    }

    fn coeff(self) -> i128 {
        if self.negative {
            -1
        } else {
            1
        }
    }
}

/// Number of factors in a Pochhammer product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Length {
    Finite(u32),
    Infinite,
}

/// Exponents `a.exp + i*step` of the factors that can touch `q^0..=q^order`.
fn factor_exponents(
    a: QMonomial,
    step: u32,
    len: Length,
    order: usize,
) -> Result<impl Iterator<Item = usize>, SeriesError> {
    if step == 0 {
        return Err(SeriesError::InvalidParameter(
            "step must be positive".into(),
        ));
    }
    let count = match len {
        Length::Finite(n) => n as usize,
        Length::Infinite => {
            if a.exp == 0 {
                return Err(SeriesError::InvalidParameter(
                    "an infinite product needs a base exponent of at least 1".into(),
                ));
            }
            usize::MAX
        }
    };
    let (start, step) = (a.exp as usize, step as usize);
    // Factors with exponent above the order are 1 modulo q^{order+1}.
    // A finite product keeps its factor count; an exponent-0 factor is a constant.
    Ok((0..count)
        .map(move |i| start + i * step)
        .take_while(move |&e| e <= order || e == 0))
}

/// `(a; q^step)_len` truncated at `order`.
pub fn pochhammer(
    a: QMonomial,
    step: u32,
    len: Length,
    order: usize,
) -> Result<PowerSeries, SeriesError> {
    let mut out = PowerSeries::one(order);
    for e in factor_exponents(a, step, len, order)? {
        out.mul_binomial(a.coeff(), e);
    }
    Ok(out)
}

/// `1 / (a; q^step)_len` truncated at `order`; requires `a.exp >= 1`.
pub fn pochhammer_inv(
    a: QMonomial,
    step: u32,
    len: Length,
    order: usize,
) -> Result<PowerSeries, SeriesError> {
    if a.exp == 0 && len != Length::Finite(0) {
        return Err(SeriesError::InvalidParameter(
            "1/(±1; q)_n is not an integer power series".into(),
        ));
    }
    let mut out = PowerSeries::one(order);
    for e in factor_exponents(a, step, len, order)? {
        out.div_binomial(a.coeff(), e);
    }
    Ok(out)
}

/// `prod_{i<n} (1 - q^{m + i k})`.
pub fn poch_finite(m: u32, k: u32, n: u32, order: usize) -> PowerSeries {
    pochhammer(QMonomial::q_pow(m), k, Length::Finite(n), order).expect("k >= 1")
}

/// `prod_{i>=0} (1 - q^{m + i k})` for `m, k >= 1`.
pub fn poch_inf(m: u32, k: u32, order: usize) -> PowerSeries {
    pochhammer(QMonomial::q_pow(m), k, Length::Infinite, order).expect("m, k >= 1")
}

/// `1 / prod_{i<n} (1 - q^{m + i k})` for `m, k >= 1`.
pub fn poch_finite_inv(m: u32, k: u32, n: u32, order: usize) -> PowerSeries {
    pochhammer_inv(QMonomial::q_pow(m), k, Length::Finite(n), order).expect("m, k >= 1")
}

/// `1 / prod_{i>=0} (1 - q^{m + i k})` for `m, k >= 1`.
pub fn poch_inf_inv(m: u32, k: u32, order: usize) -> PowerSeries {
    pochhammer_inv(QMonomial::q_pow(m), k, Length::Infinite, order).expect("m, k >= 1")
}

/// The Gaussian polynomial `[n choose m]_q`, returned with truncation order
/// equal to its degree `m (n - m)`.
///
/// Computed as `(q;q)_n / ((q;q)_m (q;q)_{n-m})`; the quotient is multiplied
/// back against the full-degree numerator, so an inexact division is reported
/// rather than silently truncated.
pub fn gauss_binomial(n: u32, m: u32) -> Result<PowerSeries, SeriesError> {
    if m > n {
        return Err(SeriesError::InvalidParameter(format!(
            "need n >= m, got n={n}, m={m}"
        )));
    }
    let full = (n as usize) * (n as usize + 1) / 2;
    let degree = (m as usize) * ((n - m) as usize);
    let numerator = poch_finite(1, 1, n, full);
    let denominator = &poch_finite(1, 1, m, full) * &poch_finite(1, 1, n - m, full);
    let quotient = numerator.div(&denominator)?.truncate(degree);
    let padded = PowerSeries::from_fn(full, |k| quotient.coeffs().get(k).copied().unwrap_or(0));
    if &padded * &denominator != numerator {
        return Err(SeriesError::InexactDivision);
    }
    Ok(quotient)
}
