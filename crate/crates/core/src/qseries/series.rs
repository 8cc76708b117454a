use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::SeriesError;

/// Truncated formal power series `c_0 + c_1 q + … + c_N q^N` with exact
/// integer coefficients.
///
/// Binary operations truncate to the smaller of the two orders. Coefficient
/// overflow aborts with a panic instead of wrapping.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<i128>,
}

#[inline]
pub(crate) fn add_exact(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("series coefficient overflow")
}

#[inline]
pub(crate) fn mul_exact(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("series coefficient overflow")
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![0; order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(1, 0, order)
    }

    /// `coeff * q^exp`, which is zero when `exp > order`.
    pub fn monomial(coeff: i128, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = coeff;
        }
        s
    }

    /// Series whose truncation order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<i128>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least the constant term"
        );
        Self { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> i128) -> Self {
        Self {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, index: usize) -> Result<i128, SeriesError> {
        self.coeffs
            .get(index)
            .copied()
            .ok_or(SeriesError::BeyondTruncation {
                index,
                order: self.order(),
            })
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn scale(&self, factor: i128) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|&c| mul_exact(c, factor)).collect(),
        }
    }

    /// Multiplies by `q^shift`.
    pub fn shift(&self, shift: usize) -> Self {
        Self::from_fn(self.order(), |k| {
            if k >= shift {
                self.coeffs[k - shift]
            } else {
                0
            }
        })
    }

    /// In-place multiplication by `(1 - a q^e)`.
    pub fn mul_binomial(&mut self, a: i128, e: usize) {
        if e == 0 {
            *self = self.scale(1 - a);
            return;
        }
        for k in (e..self.coeffs.len()).rev() {
            let t = mul_exact(a, self.coeffs[k - e]);
            self.coeffs[k] = add_exact(self.coeffs[k], -t);
        }
    }

    /// In-place division by `(1 - a q^e)` for `e >= 1`, i.e. multiplication by
    /// the geometric series `sum_i a^i q^{ie}`.
    pub fn div_binomial(&mut self, a: i128, e: usize) {
        assert!(e >= 1, "1 - a is not invertible in general");
        for k in e..self.coeffs.len() {
            let t = mul_exact(a, self.coeffs[k - e]);
            self.coeffs[k] = add_exact(self.coeffs[k], t);
        }
    }

    /// Multiplicative inverse; the constant term must be `±1`.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let c0 = self.coeffs[0];
        if c0 != 1 && c0 != -1 {
            return Err(SeriesError::NonUnitConstant(c0));
        }
        let n = self.order();
        let mut inv = vec![0i128; n + 1];
        inv[0] = c0;
        for k in 1..=n {
            let mut acc = 0i128;
            for i in 1..=k {
                if self.coeffs[i] != 0 {
                    acc = add_exact(acc, mul_exact(self.coeffs[i], inv[k - i]));
                }
            }
            // c0 * inv[k] = -acc and c0 = ±1
            inv[k] = mul_exact(-acc, c0);
        }
        Ok(Self { coeffs: inv })
    }

    /// `self / other`, computed as `self * other.invert()`.
    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        Ok(self * &other.invert()?)
    }

    /// Coefficients as decimal strings, the JSON exchange form.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl fmt::Display for PowerSeries {
    /// `c0 + c1*q + c2*q^2 + …`, every coefficient up to the order included.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*q")?,
                _ => write!(f, "{c}*q^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PowerSeries(O(q^{}): {:?})",
            self.order() + 1,
            self.coeffs
        )
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        PowerSeries::from_fn(order, |k| add_exact(self.coeffs[k], rhs.coeffs[k]))
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;

    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        PowerSeries::from_fn(order, |k| add_exact(self.coeffs[k], -rhs.coeffs[k]))
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![0i128; order + 1];
        for (i, &a) in self.coeffs[..=order].iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if b != 0 {
                    out[i + j] = add_exact(out[i + j], mul_exact(a, b));
                }
            }
        }
        PowerSeries { coeffs: out }
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;

    fn neg(self) -> PowerSeries {
        self.scale(-1)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for PowerSeries {
            type Output = PowerSeries;
            fn $method(self, rhs: PowerSeries) -> PowerSeries {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for PowerSeries {
    type Output = PowerSeries;

    fn neg(self) -> PowerSeries {
        -&self
    }
}
