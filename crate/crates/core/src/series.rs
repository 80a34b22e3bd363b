//! Truncated bivariate power series in `x` (charge) and `q` (weight).
//!
//! A [`BiSeries`] with orders `(R, N)` stores every coefficient of
//! `x^a q^b` for `0 <= a <= R`, `0 <= b <= N` in a dense row-major table.
//! Terms outside that rectangle are discarded by every operation, so all
//! operations commute with restriction to a smaller window.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::SeriesError;

/// Exact coefficient type shared by every series in the crate.
pub type Coefficient = BigInt;

/// Which value `x` is specialized to by [`BiSeries::specialize_x`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XSpecialization {
    /// `x = 1`: sum over charge at fixed weight.
    One,
    /// `x = q`: the term `x^a q^b` becomes `q^(a+b)`.
    Q,
}

/// Result of an `x` specialization, with the number of nonzero terms that
/// fell outside the q-window. The caller decides whether that matters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Specialized {
    pub series: BiSeries,
    pub dropped_terms: usize,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiSeries {
    x_order: usize,
    q_order: usize,
    coeffs: Vec<Coefficient>,
}

impl BiSeries {
    pub fn zero(x_order: usize, q_order: usize) -> Self {
        BiSeries {
            x_order,
            q_order,
            coeffs: vec![Coefficient::zero(); (x_order + 1) * (q_order + 1)],
        }
    }

    pub fn one(x_order: usize, q_order: usize) -> Self {
        let mut s = Self::zero(x_order, q_order);
        s.coeffs[0] = Coefficient::one();
        s
    }

    /// `c * x^a q^b`, or zero if the monomial lies outside the window.
    pub fn monomial(x_order: usize, q_order: usize, a: usize, b: usize, c: Coefficient) -> Self {
        let mut s = Self::zero(x_order, q_order);
        if a <= x_order && b <= q_order {
            *s.at_mut(a, b) = c;
        }
        s
    }

    /// Builds an `x`-free series from its q-coefficients; entries past
    /// `q_order` are ignored.
    pub fn from_q_coeffs<I, C>(x_order: usize, q_order: usize, coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<Coefficient>,
    {
        let mut s = Self::zero(x_order, q_order);
        for (b, c) in coeffs.into_iter().enumerate().take(q_order + 1) {
            *s.at_mut(0, b) = c.into();
        }
        s
    }

    /// Builds a series from `(a, b, c)` triples, summing repeated indices.
    pub fn from_terms<I>(x_order: usize, q_order: usize, terms: I) -> Result<Self, SeriesError>
    where
        I: IntoIterator<Item = (usize, usize, Coefficient)>,
    {
        let mut s = Self::zero(x_order, q_order);
        for (a, b, c) in terms {
            if a > x_order || b > q_order {
                return Err(SeriesError::TermOutOfRange {
                    a,
                    b,
                    x_order,
                    q_order,
                });
            }
            *s.at_mut(a, b) += c;
        }
        Ok(s)
    }

    pub fn x_order(&self) -> usize {
        self.x_order
    }

    pub fn q_order(&self) -> usize {
        self.q_order
    }

    pub fn orders(&self) -> (usize, usize) {
        (self.x_order, self.q_order)
    }

    #[inline]
    fn idx(&self, a: usize, b: usize) -> usize {
        a * (self.q_order + 1) + b
    }

    /// Coefficient of `x^a q^b`; zero outside the window.
    pub fn coeff(&self, a: usize, b: usize) -> Coefficient {
        if a <= self.x_order && b <= self.q_order {
            self.coeffs[self.idx(a, b)].clone()
        } else {
            Coefficient::zero()
        }
    }

    /// Borrowed coefficient; panics outside the window.
    pub fn at(&self, a: usize, b: usize) -> &Coefficient {
        assert!(
            a <= self.x_order && b <= self.q_order,
            "index ({a}, {b}) outside window"
        );
        &self.coeffs[self.idx(a, b)]
    }

    pub fn at_mut(&mut self, a: usize, b: usize) -> &mut Coefficient {
        assert!(
            a <= self.x_order && b <= self.q_order,
            "index ({a}, {b}) outside window"
        );
        let i = self.idx(a, b);
        &mut self.coeffs[i]
    }

    /// The q-series multiplying `x^a`.
    pub fn row(&self, a: usize) -> &[Coefficient] {
        let start = self.idx(a, 0);
        &self.coeffs[start..start + self.q_order + 1]
    }

    pub fn row_mut(&mut self, a: usize) -> &mut [Coefficient] {
        let start = self.idx(a, 0);
        let len = self.q_order + 1;
        &mut self.coeffs[start..start + len]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Nonzero terms in lexicographic `(a, b)` order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Coefficient)> + '_ {
        let width = self.q_order + 1;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (i / width, i % width, c))
    }

    /// Restriction to a window no larger than the current one.
    pub fn restrict(&self, x_order: usize, q_order: usize) -> Result<Self, SeriesError> {
        if x_order > self.x_order || q_order > self.q_order {
            return Err(SeriesError::WindowTooLarge {
                requested: (x_order, q_order),
                available: self.orders(),
            });
        }
        let mut out = Self::zero(x_order, q_order);
        for a in 0..=x_order {
            out.row_mut(a).clone_from_slice(&self.row(a)[..=q_order]);
        }
        Ok(out)
    }

    fn check_orders(&self, other: &Self) -> Result<(), SeriesError> {
        if self.orders() != other.orders() {
            return Err(SeriesError::OrderMismatch {
                left: self.orders(),
                right: other.orders(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_orders(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(BiSeries { coeffs, ..*self })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_orders(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(BiSeries { coeffs, ..*self })
    }

    /// Truncated product: every term with `a > R` or `b > N` is dropped.
    pub fn try_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_orders(other)?;
        let (r, n) = self.orders();
        let mut out = Self::zero(r, n);
        for (a1, b1, c1) in self.terms() {
            for a2 in 0..=(r - a1) {
                let src = other.row(a2);
                let dst_start = out.idx(a1 + a2, b1);
                for (b2, c2) in src[..=(n - b1)].iter().enumerate() {
                    if !c2.is_zero() {
                        out.coeffs[dst_start + b2] += c1 * c2;
                    }
                }
            }
        }
        Ok(out)
    }

    /// The substitution `x -> x q^m`: `x^a q^b` becomes `x^a q^(b + m a)`.
    ///
    /// Only forward shifts exist; `m` is unsigned.
    pub fn qshift(&self, m: usize) -> Self {
        let (r, n) = self.orders();
        let mut out = Self::zero(r, n);
        for a in 0..=r {
            let shift = m.saturating_mul(a);
            if shift > n {
                continue;
            }
            let src = self.row(a);
            out.row_mut(a)[shift..].clone_from_slice(&src[..=(n - shift)]);
        }
        out
    }

    /// Multiplication by the monomial `x^a0 q^b0`.
    pub fn mul_monomial(&self, a0: usize, b0: usize) -> Self {
        let (r, n) = self.orders();
        let mut out = Self::zero(r, n);
        if a0 > r || b0 > n {
            return out;
        }
        for a in 0..=(r - a0) {
            let src = self.row(a);
            out.row_mut(a + a0)[b0..].clone_from_slice(&src[..=(n - b0)]);
        }
        out
    }

    /// Sets `x = 1` or `x = q`, returning a series with `x_order = 0`.
    pub fn specialize_x(&self, mode: XSpecialization) -> Specialized {
        let n = self.q_order;
        let mut out = Self::zero(0, n);
        let mut dropped_terms = 0;
        for (a, b, c) in self.terms() {
            let target = match mode {
                XSpecialization::One => b,
                XSpecialization::Q => a + b,
            };
            if target <= n {
                out.coeffs[target] += c;
            } else {
                dropped_terms += 1;
            }
        }
        Specialized {
            series: out,
            dropped_terms,
        }
    }

    pub fn neg(&self) -> Self {
        BiSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            ..*self
        }
    }

    /// Coefficientwise `self <= other`.
    pub fn le_coefficientwise(&self, other: &Self) -> Result<bool, SeriesError> {
        self.check_orders(other)?;
        Ok(self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a <= b))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.sign() != num_bigint::Sign::Minus)
    }

    /// `(1 - q^m)^(-1) = 1 + q^m + q^(2m) + ...`, independent of `x`.
    pub fn invert_one_minus_q_power(
        m: usize,
        x_order: usize,
        q_order: usize,
    ) -> Result<Self, SeriesError> {
        if m == 0 {
            return Err(SeriesError::NotInvertible);
        }
        let mut s = Self::zero(x_order, q_order);
        for b in (0..=q_order).step_by(m) {
            *s.at_mut(0, b) = Coefficient::one();
        }
        Ok(s)
    }

    /// Multiplies by `(1 - q^m)^(-1)` in place of an explicit product with
    /// [`BiSeries::invert_one_minus_q_power`]: each row satisfies
    /// `out[b] = self[b] + out[b - m]`.
    pub fn div_one_minus_q_power(&self, m: usize) -> Result<Self, SeriesError> {
        if m == 0 {
            return Err(SeriesError::NotInvertible);
        }
        let mut out = self.clone();
        for a in 0..=self.x_order {
            let row = out.row_mut(a);
            for b in m..row.len() {
                let (lo, hi) = row.split_at_mut(b);
                hi[0] += &lo[b - m];
            }
        }
        Ok(out)
    }

    /// `1 - q^m` at the given orders.
    pub fn one_minus_q_power(m: usize, x_order: usize, q_order: usize) -> Self {
        let mut s = Self::one(x_order, q_order);
        if m <= q_order {
            *s.at_mut(0, m) -= 1;
        }
        s
    }
}

impl fmt::Debug for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiSeries[{}x{}](", self.x_order, self.q_order)?;
        fmt::Display::fmt(self, f)?;
        write!(f, ")")
    }
}

impl fmt::Display for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (a, b, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            if a > 0 {
                write!(f, "*x^{a}")?;
            }
            if b > 0 {
                write!(f, "*q^{b}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&BiSeries> for &BiSeries {
            type Output = BiSeries;

            /// Panics when the orders differ; use the `try_` form to get an error.
            fn $method(self, rhs: &BiSeries) -> BiSeries {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $trait<BiSeries> for BiSeries {
            type Output = BiSeries;

            fn $method(self, rhs: BiSeries) -> BiSeries {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&BiSeries> for BiSeries {
            type Output = BiSeries;

            fn $method(self, rhs: &BiSeries) -> BiSeries {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &BiSeries {
    type Output = BiSeries;

    fn neg(self) -> BiSeries {
        BiSeries::neg(self)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    x_order: usize,
    q_order: usize,
    terms: Vec<(usize, usize, String)>,
}

impl Serialize for BiSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesRepr {
            x_order: self.x_order,
            q_order: self.q_order,
            terms: self
                .terms()
                .map(|(a, b, c)| (a, b, c.to_string()))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BiSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;

        let repr = SeriesRepr::deserialize(deserializer)?;
        let mut out = BiSeries::zero(repr.x_order, repr.q_order);
        for (a, b, c) in repr.terms {
            if a > repr.x_order || b > repr.q_order {
                return Err(D::Error::custom(format!(
                    "term ({a}, {b}) outside window ({}, {})",
                    repr.x_order, repr.q_order
                )));
            }
            let value: Coefficient = c
                .parse()
                .map_err(|_| D::Error::custom(format!("invalid coefficient {c:?}")))?;
            let slot = out.at_mut(a, b);
            if !slot.is_zero() {
                return Err(D::Error::custom(format!("duplicate term ({a}, {b})")));
            }
            *slot = value;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_series(coeffs: &[i64], n: usize) -> BiSeries {
        BiSeries::from_q_coeffs(0, n, coeffs.iter().copied())
    }

    fn q_coeffs(s: &BiSeries) -> Vec<i64> {
        s.row(0).iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    // Plain convolution on i64 vectors, truncated to length `n + 1`.
    fn convolve(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
        let mut out = vec![0; n + 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                if i + j <= n {
                    out[i + j] += x * y;
                }
            }
        }
        out
    }

    #[test]
    fn zero_and_one() {
        let z = BiSeries::zero(2, 2);
        assert_eq!(z.coeffs.len(), 9);
        assert!(z.is_zero());
        let o = BiSeries::one(0, 0);
        assert_eq!(o.coeff(0, 0), 1.into());
        assert_eq!(BiSeries::one(3, 5).coeff(1, 1), 0.into());
    }

    #[test]
    fn one_is_multiplicative_identity() {
        let s = BiSeries::from_terms(
            2,
            3,
            [(0, 1, 3.into()), (1, 2, (-2).into()), (2, 3, 7.into())],
        )
        .unwrap();
        assert_eq!(&BiSeries::one(2, 3) * &s, s);
    }

    #[test]
    fn telescoping_geometric_sum() {
        let n = 7;
        let geom = q_series(&vec![1; n + 1], n);
        let one_minus_q = q_series(&[1, -1], n);
        assert_eq!(&one_minus_q * &geom, BiSeries::one(0, n));
    }

    #[test]
    fn three_factor_product_matches_convolution() {
        let oracle = [[1, -1].as_slice(), &[1, 0, -1], &[1, 0, 0, -1]]
            .iter()
            .fold(vec![1i64], |acc, f| convolve(&acc, f, 6));
        assert_eq!(oracle, vec![1, -1, -1, 0, 1, 1, -1]);
        let prod = (1..=3).fold(BiSeries::one(0, 6), |acc, m| {
            acc * BiSeries::one_minus_q_power(m, 0, 6)
        });
        assert_eq!(q_coeffs(&prod), oracle);
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let a = BiSeries::one(1, 2);
        let b = BiSeries::one(2, 2);
        assert!(matches!(
            a.try_mul(&b),
            Err(SeriesError::OrderMismatch { .. })
        ));
        assert!(a.try_add(&b).is_err());
    }

    #[test]
    #[should_panic(expected = "order mismatch")]
    fn operator_panics_on_mismatch() {
        let _ = &BiSeries::one(1, 2) + &BiSeries::one(1, 3);
    }

    #[test]
    fn qshift_examples() {
        let s = BiSeries::monomial(2, 9, 1, 1, 1.into());
        assert_eq!(s.qshift(0), s);
        assert_eq!(s.qshift(1), BiSeries::monomial(2, 9, 1, 2, 1.into()));
        let t = BiSeries::from_terms(2, 7, [(0, 0, 1.into()), (1, 1, 1.into()), (2, 4, 1.into())])
            .unwrap();
        // x^2 q^8 falls outside q-order 7
        let expected = BiSeries::from_terms(2, 7, [(0, 0, 1.into()), (1, 3, 1.into())]).unwrap();
        assert_eq!(t.qshift(2), expected);
    }

    #[test]
    fn mul_monomial_examples() {
        let s = BiSeries::from_terms(2, 3, [(0, 0, 1.into()), (1, 1, 1.into())]).unwrap();
        assert_eq!(s.mul_monomial(0, 0), s);
        assert_eq!(
            BiSeries::one(1, 2).mul_monomial(1, 1),
            BiSeries::monomial(1, 2, 1, 1, 1.into())
        );
        let expected = BiSeries::from_terms(2, 3, [(1, 1, 1.into()), (2, 2, 1.into())]).unwrap();
        assert_eq!(s.mul_monomial(1, 1), expected);
        assert!(s.mul_monomial(3, 0).is_zero());
    }

    #[test]
    fn geometric_inverse() {
        let g = BiSeries::invert_one_minus_q_power(1, 0, 4).unwrap();
        assert_eq!(q_coeffs(&g), vec![1, 1, 1, 1, 1]);
        let g = BiSeries::invert_one_minus_q_power(3, 0, 7).unwrap();
        assert_eq!(q_coeffs(&g), vec![1, 0, 0, 1, 0, 0, 1, 0]);
        for m in 1..6 {
            let inv = BiSeries::invert_one_minus_q_power(m, 2, 9).unwrap();
            assert_eq!(
                BiSeries::one_minus_q_power(m, 2, 9) * inv,
                BiSeries::one(2, 9)
            );
        }
        assert_eq!(
            BiSeries::invert_one_minus_q_power(0, 1, 1),
            Err(SeriesError::NotInvertible)
        );
    }

    #[test]
    fn in_place_division_matches_geometric_product() {
        let s = BiSeries::from_terms(
            2,
            9,
            [(0, 0, 1.into()), (1, 2, (-4).into()), (2, 5, 3.into())],
        )
        .unwrap();
        for m in 1..5 {
            let inv = BiSeries::invert_one_minus_q_power(m, 2, 9).unwrap();
            assert_eq!(s.div_one_minus_q_power(m).unwrap(), &s * &inv);
        }
        assert!(s.div_one_minus_q_power(0).is_err());
    }

    #[test]
    fn specializations() {
        let s = BiSeries::monomial(1, 3, 1, 1, 1.into());
        let one = s.specialize_x(XSpecialization::One);
        assert_eq!(one.series, BiSeries::monomial(0, 3, 0, 1, 1.into()));
        assert_eq!(one.dropped_terms, 0);
        let q = s.specialize_x(XSpecialization::Q);
        assert_eq!(q.series, BiSeries::monomial(0, 3, 0, 2, 1.into()));

        let edge = BiSeries::monomial(2, 3, 2, 3, 5.into());
        assert_eq!(edge.specialize_x(XSpecialization::Q).dropped_terms, 1);
    }

    #[test]
    fn restrict_and_window_errors() {
        let s = BiSeries::from_terms(2, 4, [(2, 4, 1.into()), (1, 1, 2.into())]).unwrap();
        let r = s.restrict(1, 2).unwrap();
        assert_eq!(r, BiSeries::monomial(1, 2, 1, 1, 2.into()));
        assert!(s.restrict(3, 4).is_err());
        assert!(BiSeries::from_terms(1, 1, [(2, 0, 1.into())]).is_err());
    }

    #[test]
    fn json_format() {
        let s = BiSeries::from_terms(1, 2, [(1, 2, (-3).into()), (0, 0, 1.into())]).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(
            json,
            r#"{"x_order":1,"q_order":2,"terms":[[0,0,"1"],[1,2,"-3"]]}"#
        );
        let back: BiSeries = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);

        assert!(serde_json::from_str::<BiSeries>(
            r#"{"x_order":0,"q_order":0,"terms":[[1,0,"1"]]}"#
        )
        .is_err());
        assert!(serde_json::from_str::<BiSeries>(
            r#"{"x_order":0,"q_order":0,"terms":[[0,0,"x"]]}"#
        )
        .is_err());
        assert!(serde_json::from_str::<BiSeries>(
            r#"{"x_order":0,"q_order":1,"terms":[[0,1,"1"],[0,1,"2"]]}"#
        )
        .is_err());
    }

    #[test]
    fn big_coefficients_stay_exact() {
        let big: Coefficient = "123456789012345678901234567890".parse().unwrap();
        let s = BiSeries::monomial(0, 2, 0, 1, big.clone());
        let sq = &s * &s;
        assert_eq!(sq.coeff(0, 2), &big * &big);
    }
}
