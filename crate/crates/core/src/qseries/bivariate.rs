use crate::error::SeriesError;
use crate::qseries::series::{add_exact, mul_exact};
use crate::qseries::PowerSeries;

/// Truncated series in two variables, `sum c[m][n] z^m q^n` for
/// `m <= z_order`, `n <= q_order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BivariateSeries {
    z_order: usize,
    q_order: usize,
    coeffs: Vec<i128>,
}

impl BivariateSeries {
    pub fn zero(z_order: usize, q_order: usize) -> Self {
        Self {
            z_order,
            q_order,
            coeffs: vec![0; (z_order + 1) * (q_order + 1)],
        }
    }

    pub fn one(z_order: usize, q_order: usize) -> Self {
        let mut s = Self::zero(z_order, q_order);
        s.coeffs[0] = 1;
        s
    }

    /// `z^m * series`, dropped entirely when `m > z_order`.
    pub fn from_q_series(m: usize, series: &PowerSeries, z_order: usize) -> Self {
        let mut s = Self::zero(z_order, series.order());
        if m <= z_order {
            for (n, &c) in series.coeffs().iter().enumerate() {
                *s.at_mut(m, n) = c;
            }
        }
        s
    }

    pub fn z_order(&self) -> usize {
        self.z_order
    }

    pub fn q_order(&self) -> usize {
        self.q_order
    }

    #[inline]
    fn idx(&self, m: usize, n: usize) -> usize {
        m * (self.q_order + 1) + n
    }

    #[inline]
    fn at_mut(&mut self, m: usize, n: usize) -> &mut i128 {
        let i = self.idx(m, n);
        &mut self.coeffs[i]
    }

    pub fn coeff(&self, m: usize, n: usize) -> Result<i128, SeriesError> {
        if m > self.z_order {
            return Err(SeriesError::BeyondTruncation {
                index: m,
                order: self.z_order,
            });
        }
        if n > self.q_order {
            return Err(SeriesError::BeyondTruncation {
                index: n,
                order: self.q_order,
            });
        }
        Ok(self.coeffs[self.idx(m, n)])
    }

    /// The coefficient of `z^m` as a series in `q`.
    pub fn z_coeff(&self, m: usize) -> Result<PowerSeries, SeriesError> {
        if m > self.z_order {
            return Err(SeriesError::BeyondTruncation {
                index: m,
                order: self.z_order,
            });
        }
        let start = self.idx(m, 0);
        Ok(PowerSeries::from_coeffs(
            self.coeffs[start..=start + self.q_order].to_vec(),
        ))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (zm, qn) = (
            self.z_order.min(other.z_order),
            self.q_order.min(other.q_order),
        );
        let mut out = Self::zero(zm, qn);
        for m in 0..=zm {
            for n in 0..=qn {
                *out.at_mut(m, n) =
                    add_exact(self.coeffs[self.idx(m, n)], other.coeffs[other.idx(m, n)]);
            }
        }
        out
    }

    /// Multiplies every `z`-row by a series in `q` alone.
    pub fn mul_q_series(&self, series: &PowerSeries) -> Self {
        let qn = self.q_order.min(series.order());
        let mut out = Self::zero(self.z_order, qn);
        for m in 0..=self.z_order {
            let row = self.z_coeff(m).expect("row in range").truncate(qn);
            let prod = &row * &series.truncate(qn);
            for (n, &c) in prod.coeffs().iter().enumerate() {
                *out.at_mut(m, n) = c;
            }
        }
        out
    }

    /// In-place division by `(1 - z q^e)`.
    pub fn div_z_binomial(&mut self, e: usize) {
        for m in 1..=self.z_order {
            for n in e..=self.q_order {
                let prev = self.coeffs[self.idx(m - 1, n - e)];
                if prev != 0 {
                    let i = self.idx(m, n);
                    self.coeffs[i] = add_exact(self.coeffs[i], prev);
                }
            }
        }
    }

    /// Multiplies by `z^k`.
    pub fn shift_z(&self, k: usize) -> Self {
        let mut out = Self::zero(self.z_order, self.q_order);
        for m in k..=self.z_order {
            for n in 0..=self.q_order {
                *out.at_mut(m, n) = self.coeffs[self.idx(m - k, n)];
            }
        }
        out
    }

    /// Sum of all `z`-rows, i.e. the specialization `z = 1`. Only meaningful
    /// when no term with `z`-degree above `z_order` contributes below
    /// `q^{q_order+1}`.
    pub fn at_z_one(&self) -> PowerSeries {
        PowerSeries::from_fn(self.q_order, |n| {
            (0..=self.z_order).fold(0, |acc, m| add_exact(acc, self.coeffs[self.idx(m, n)]))
        })
    }

    /// `d/dz` at `z = 1`: `sum_m m c[m][n]`.
    pub fn z_derivative_at_one(&self) -> PowerSeries {
        PowerSeries::from_fn(self.q_order, |n| {
            (0..=self.z_order).fold(0, |acc, m| {
                add_exact(acc, mul_exact(m as i128, self.coeffs[self.idx(m, n)]))
            })
        })
    }

    /// Rows of decimal strings, indexed `[m][n]`.
    pub fn to_decimal_strings(&self) -> Vec<Vec<String>> {
        (0..=self.z_order)
            .map(|m| {
                (0..=self.q_order)
                    .map(|n| self.coeffs[self.idx(m, n)].to_string())
                    .collect()
            })
            .collect()
    }
}
