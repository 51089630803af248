//! Exact truncated bivariate power series and the counting equations.
//!
//! A [`TruncatedSeries`] stores, for each power of z up to a truncation
//! order N, a polynomial in t with exact 128-bit integer coefficients.
//! Coefficients of z-powers beyond N are unknown: asking for them is an
//! error, never a silent zero. Arithmetic results carry the minimum
//! truncation order of their inputs, and every coefficient operation is
//! overflow-checked.
//!
//! Two generating functions live here. The *peak series* has coefficient
//! of `t^k z^n` equal to the number of bargraphs with k peaks and
//! semiperimeter n; it satisfies the quadratic equation
//!
//! ```text
//! z(1-z) G^2 - (1 - 3z + z^2 + t z^3) G + t z^2 (1-z) = 0,
//! ```
//!
//! which [`solve_peak_gf`] solves by fixed-point iteration from 0 and
//! [`peak_gf_residual`] re-evaluates. The *diagonal series* re-indexes the
//! same counts by (semiperimeter - peaks, semiperimeter) and satisfies
//!
//! ```text
//! tz(1-tz) H^2 - (1 - 3tz + t^2 z^2 + t^2 z^3) H + t z^2 (1-tz) = 0.
//! ```
//!
//! It is always built directly from object counts — substituting 1/t is
//! not a power-series operation — and the two series are related by the
//! re-indexing check [`reindexing_agrees`]. Specialising the diagonal
//! series at z = 1 is likewise unsound on a z-truncation, so
//! [`diagonal_coefficients`] assembles that univariate series from
//! [`diagonal_count`], whose per-coefficient enumeration is finite.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::enumeration::{catalan, diagonal_count, peak_table, PeakTable};
use crate::error::SeriesError;

fn checked_add(a: i128, b: i128) -> Result<i128, SeriesError> {
    a.checked_add(b).ok_or(SeriesError::Overflow)
}

fn checked_mul(a: i128, b: i128) -> Result<i128, SeriesError> {
    a.checked_mul(b).ok_or(SeriesError::Overflow)
}

/// A polynomial in t with exact integer coefficients.
///
/// Unlike the z-direction of a [`TruncatedSeries`], polynomials are exact:
/// coefficients beyond the degree really are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<i128>,
}

impl Poly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i128) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: i128, power: usize) -> Self {
        let mut coeffs = vec![0; power + 1];
        coeffs[power] = c;
        Self::from_coeffs(coeffs)
    }

    /// Builds from coefficients indexed by power, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeff(&self, power: usize) -> i128 {
        self.coeffs.get(power).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lowest_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    /// Drops all powers above `max_degree`.
    pub fn truncated(&self, max_degree: usize) -> Poly {
        let end = self.coeffs.len().min(max_degree + 1);
        Self::from_coeffs(self.coeffs[..end].to_vec())
    }

    pub fn add(&self, other: &Poly) -> Result<Poly, SeriesError> {
        let mut coeffs = vec![0i128; self.coeffs.len().max(other.coeffs.len())];
        for (k, c) in coeffs.iter_mut().enumerate() {
            *c = checked_add(self.coeff(k), other.coeff(k))?;
        }
        Ok(Self::from_coeffs(coeffs))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly, SeriesError> {
        self.add(&other.scale(-1)?)
    }

    pub fn scale(&self, factor: i128) -> Result<Poly, SeriesError> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for &c in &self.coeffs {
            coeffs.push(checked_mul(c, factor)?);
        }
        Ok(Self::from_coeffs(coeffs))
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly, SeriesError> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut coeffs = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = checked_add(coeffs[i + j], checked_mul(a, b)?)?;
            }
        }
        Ok(Self::from_coeffs(coeffs))
    }
}

/// A bivariate series: exact t-polynomials for each z-power up to the
/// truncation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<Poly>, // one entry per z-power, 0..=order
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            coeffs: vec![Poly::zero(); order + 1],
        }
    }

    /// Builds a series from `(coefficient, t_power, z_power)` terms,
    /// reducing modulo `z^(order+1)`: terms with a z-power beyond the
    /// truncation order are dropped, which is the truncation itself.
    pub fn from_terms(
        order: usize,
        terms: &[(i128, usize, usize)],
    ) -> Result<Self, SeriesError> {
        let mut series = Self::zero(order);
        for &(coefficient, t_pow, z_pow) in terms {
            if z_pow > order {
                continue;
            }
            let term = Poly::monomial(coefficient, t_pow);
            series.coeffs[z_pow] = series.coeffs[z_pow].add(&term)?;
        }
        Ok(series)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The t-polynomial at `z^z_pow`; an error past the truncation order.
    pub fn z_coeff(&self, z_pow: usize) -> Result<&Poly, SeriesError> {
        self.coeffs.get(z_pow).ok_or(SeriesError::OrderExceeded {
            requested: z_pow,
            order: self.order,
        })
    }

    /// The integer coefficient of `t^t_pow z^z_pow`; an error past the
    /// truncation order.
    pub fn coeff(&self, t_pow: usize, z_pow: usize) -> Result<i128, SeriesError> {
        Ok(self.z_coeff(z_pow)?.coeff(t_pow))
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        let order = self.order.min(other.order);
        let mut coeffs = Vec::with_capacity(order + 1);
        for n in 0..=order {
            coeffs.push(self.coeffs[n].add(&other.coeffs[n])?);
        }
        Ok(Self { order, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        let order = self.order.min(other.order);
        let mut coeffs = Vec::with_capacity(order + 1);
        for n in 0..=order {
            coeffs.push(self.coeffs[n].sub(&other.coeffs[n])?);
        }
        Ok(Self { order, coeffs })
    }

    /// Convolution in z, polynomial product in t.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        let order = self.order.min(other.order);
        let mut coeffs = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = Poly::zero();
            for i in 0..=n {
                acc = acc.add(&self.coeffs[i].mul(&other.coeffs[n - i])?)?;
            }
            coeffs.push(acc);
        }
        Ok(Self { order, coeffs })
    }

    pub fn scale(&self, factor: i128) -> Result<Self, SeriesError> {
        let mut coeffs = Vec::with_capacity(self.order + 1);
        for poly in &self.coeffs {
            coeffs.push(poly.scale(factor)?);
        }
        Ok(Self {
            order: self.order,
            coeffs,
        })
    }

    /// Divides by a series whose constant term (the t-polynomial at z^0)
    /// is 1 or -1.
    pub fn div_unit(&self, divisor: &Self) -> Result<Self, SeriesError> {
        let lead = &divisor.coeffs[0];
        let sign = if *lead == Poly::one() {
            1
        } else if *lead == Poly::constant(-1) {
            -1
        } else {
            return Err(SeriesError::NonUnitDivisor);
        };
        let order = self.order.min(divisor.order);
        let mut quotient: Vec<Poly> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for i in 1..=n {
                acc = acc.sub(&divisor.coeffs[i].mul(&quotient[n - i])?)?;
            }
            quotient.push(acc.scale(sign)?);
        }
        Ok(Self {
            order,
            coeffs: quotient,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    /// The lowest z-power with a nonzero t-polynomial.
    pub fn lowest_nonzero_z(&self) -> Option<usize> {
        self.coeffs.iter().position(|p| !p.is_zero())
    }

    /// Reduces to a lower truncation order; raising the order is an error.
    pub fn truncated(&self, order: usize) -> Result<Self, SeriesError> {
        if order > self.order {
            return Err(SeriesError::OrderExceeded {
                requested: order,
                order: self.order,
            });
        }
        Ok(Self {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    /// Nonzero terms as `(z_power, t_power, coefficient)`, ordered by
    /// z-power then t-power.
    pub fn terms(&self) -> Vec<(usize, usize, i128)> {
        let mut terms = Vec::new();
        for (n, poly) in self.coeffs.iter().enumerate() {
            for (k, &c) in poly.coeffs().iter().enumerate() {
                if c != 0 {
                    terms.push((n, k, c));
                }
            }
        }
        terms
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, &(z, t, c)) in terms.iter().enumerate() {
            if i == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else if c < 0 {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let magnitude = c.unsigned_abs();
            let mut parts: Vec<String> = Vec::new();
            if magnitude != 1 || (t == 0 && z == 0) {
                parts.push(magnitude.to_string());
            }
            match t {
                0 => {}
                1 => parts.push("t".to_string()),
                k => parts.push(format!("t^{k}")),
            }
            match z {
                0 => {}
                1 => parts.push("z".to_string()),
                n => parts.push(format!("z^{n}")),
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            z: usize,
            t: usize,
            coeff: i128,
        }
        let terms: Vec<Term> = self
            .terms()
            .into_iter()
            .map(|(z, t, coeff)| Term { z, t, coeff })
            .collect();
        let mut state = serializer.serialize_struct("TruncatedSeries", 2)?;
        state.serialize_field("truncation_order", &self.order)?;
        state.serialize_field("terms", &terms)?;
        state.end()
    }
}

/// The peak series assembled from tabulated counts: the coefficient of
/// `t^k z^n` is the number of bargraphs with k peaks and semiperimeter n.
pub fn peak_gf_from_counts(table: &PeakTable) -> Result<TruncatedSeries, SeriesError> {
    let order = table.n_max() as usize;
    let mut series = TruncatedSeries::zero(order);
    for n in 2..=table.n_max() {
        let mut coeffs = vec![0i128; table.k_max() as usize + 1];
        for k in 1..=table.k_max() {
            coeffs[k as usize] = i128::from(table.count(n, k));
        }
        series.coeffs[n as usize] = Poly::from_coeffs(coeffs);
    }
    Ok(series)
}

/// The diagonal series assembled from the same counts with the exponent
/// pair re-indexed: a bargraph with k peaks and semiperimeter n contributes
/// to `t^(n-k) z^n`.
pub fn diagonal_gf_from_table(table: &PeakTable) -> Result<TruncatedSeries, SeriesError> {
    let order = table.n_max() as usize;
    let mut series = TruncatedSeries::zero(order);
    for n in 2..=table.n_max() {
        let mut coeffs = vec![0i128; n as usize];
        for k in 1..=table.k_max().min(n) {
            let count = table.count(n, k);
            if count > 0 {
                coeffs[(n - k) as usize] = i128::from(count);
            }
        }
        series.coeffs[n as usize] = Poly::from_coeffs(coeffs);
    }
    Ok(series)
}

/// Enumerates bargraphs up to semiperimeter `n_max` and builds the
/// diagonal series from the counts.
pub fn diagonal_gf_from_counts(n_max: u64) -> Result<TruncatedSeries, SeriesError> {
    diagonal_gf_from_table(&peak_table(n_max)?)
}

fn peak_equation_parts(
    order: usize,
) -> Result<(TruncatedSeries, TruncatedSeries, TruncatedSeries), SeriesError> {
    let quadratic = TruncatedSeries::from_terms(order, &[(1, 0, 1), (-1, 0, 2)])?;
    let linear =
        TruncatedSeries::from_terms(order, &[(1, 0, 0), (-3, 0, 1), (1, 0, 2), (1, 1, 3)])?;
    let constant = TruncatedSeries::from_terms(order, &[(1, 1, 2), (-1, 1, 3)])?;
    Ok((quadratic, linear, constant))
}

/// Solves the peak-series equation by fixed-point iteration from 0,
/// rewriting it as `G = (z(1-z) G^2 + t z^2 (1-z)) / (1 - 3z + z^2 + t z^3)`.
///
/// The divisor has constant term 1, and the iteration from 0 selects the
/// root of z-valuation 2, which is the counting series. Stabilising takes
/// at most `order` rounds; failing to stabilise indicates a bug and aborts.
pub fn solve_peak_gf(order: usize) -> Result<TruncatedSeries, SeriesError> {
    if order < 2 {
        return Err(SeriesError::OrderTooSmall { order, min: 2 });
    }
    let (quadratic, linear, constant) = peak_equation_parts(order)?;
    let mut series = TruncatedSeries::zero(order);
    for _ in 0..=order {
        let squared = series.mul(&series)?;
        let next = quadratic.mul(&squared)?.add(&constant)?.div_unit(&linear)?;
        if next == series {
            return Ok(series);
        }
        series = next;
    }
    Err(SeriesError::NoFixedPoint {
        iterations: order + 1,
    })
}

/// Left-hand side of the peak-series equation; identically zero exactly
/// when the series satisfies the equation to its truncation order.
pub fn peak_gf_residual(series: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    let (quadratic, linear, constant) = peak_equation_parts(series.order())?;
    quadratic
        .mul(&series.mul(series)?)?
        .sub(&linear.mul(series)?)?
        .add(&constant)
}

/// Left-hand side of the diagonal-series equation.
pub fn diagonal_gf_residual(series: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    let order = series.order();
    let quadratic = TruncatedSeries::from_terms(order, &[(1, 1, 1), (-1, 2, 2)])?;
    let linear =
        TruncatedSeries::from_terms(order, &[(1, 0, 0), (-3, 1, 1), (1, 2, 2), (1, 2, 3)])?;
    let constant = TruncatedSeries::from_terms(order, &[(1, 1, 2), (-1, 2, 3)])?;
    quadratic
        .mul(&series.mul(series)?)?
        .sub(&linear.mul(series)?)?
        .add(&constant)
}

/// Checks the re-indexing relation between the two series built from the
/// same counts: the coefficient of `t^k z^n` in the peak series must equal
/// the coefficient of `t^(n-k) z^n` in the diagonal series, with no
/// t-powers above n on either side.
pub fn reindexing_agrees(
    peak: &TruncatedSeries,
    diagonal: &TruncatedSeries,
) -> Result<bool, SeriesError> {
    let order = peak.order().min(diagonal.order());
    for n in 0..=order {
        let g = peak.z_coeff(n)?;
        let h = diagonal.z_coeff(n)?;
        if g.degree().is_some_and(|d| d > n) || h.degree().is_some_and(|d| d > n) {
            return Ok(false);
        }
        for k in 0..=n {
            if g.coeff(k) != h.coeff(n - k) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The univariate residual `t h(t)^2 - (1 - 2t) h(t) + t` modulo
/// `t^(len+1)`, where `h(t)` has the given coefficients at `t^1..=t^len`.
pub fn diagonal_quadratic_residual(coeffs: &[u64]) -> Result<Poly, SeriesError> {
    let mut h = vec![0i128; coeffs.len() + 1];
    for (i, &c) in coeffs.iter().enumerate() {
        h[i + 1] = i128::from(c);
    }
    let h = Poly::from_coeffs(h);
    let t = Poly::monomial(1, 1);
    let linear = Poly::from_coeffs(vec![1, -2]);
    let residual = t.mul(&h.mul(&h)?)?.sub(&linear.mul(&h)?)?.add(&t)?;
    Ok(residual.truncated(coeffs.len()))
}

/// The diagonal counts for m = 1..=m_max, checked two ways before being
/// returned: they must satisfy the quadratic congruence
/// `t h^2 - (1-2t) h + t = 0 (mod t^(m_max+1))` and must equal the Catalan
/// numbers coefficient by coefficient.
pub fn diagonal_coefficients(m_max: u64) -> Result<Vec<u64>, SeriesError> {
    let mut coeffs = Vec::with_capacity(m_max as usize);
    for m in 1..=m_max {
        coeffs.push(diagonal_count(m)?);
    }
    let residual = diagonal_quadratic_residual(&coeffs)?;
    if let Some(lowest) = residual.lowest_nonzero() {
        return Err(SeriesError::QuadraticCongruenceFailed { lowest });
    }
    for (i, &c) in coeffs.iter().enumerate() {
        let m = i as u64 + 1;
        let expected = catalan(m)?;
        if c != expected {
            return Err(SeriesError::DiagonalMismatch {
                m,
                diagonal: c,
                catalan: expected,
            });
        }
    }
    Ok(coeffs)
}
