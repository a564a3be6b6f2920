//! Dense univariate polynomials over [`Rational`].
//!
//! Coefficients are stored in ascending powers. The representation is
//! normalized: the leading coefficient is nonzero unless the polynomial is
//! identically zero, which is stored as the single coefficient `0`, so
//! `degree() == coefficients().len() - 1` always holds.

use crate::error::Result;
use crate::rational::Rational;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Dense polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    /// Builds a polynomial from ascending-power coefficients, trimming
    /// trailing zeros to restore the normalized form.
    pub fn from_coefficients(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map_or(false, Rational::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        RationalPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: vec![Rational::zero()] }
    }

    pub fn constant(c: Rational) -> Self {
        RationalPolynomial { coeffs: vec![c] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coefficient(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Exact term-by-term derivative.
    pub fn derivative(&self) -> RationalPolynomial {
        if self.degree() == 0 {
            return RationalPolynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(i as i64))
            .collect();
        RationalPolynomial::from_coefficients(coeffs)
    }

    /// Exact antiderivative with zero constant of integration.
    pub fn antiderivative(&self) -> RationalPolynomial {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            // i + 1 >= 1, so the division cannot fail
            coeffs.push(
                c.try_div(&Rational::from_integer((i + 1) as i64))
                    .expect("nonzero divisor"),
            );
        }
        RationalPolynomial::from_coefficients(coeffs)
    }

    /// Exact value of the definite integral over [0, 1]: sum of c_i/(i+1).
    pub fn integrate_unit_interval(&self) -> Rational {
        let mut acc = Rational::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc += &c
                .try_div(&Rational::from_integer((i + 1) as i64))
                .expect("nonzero divisor");
        }
        acc
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// Floating Horner evaluation (binary64).
    pub fn eval_f64(&self, t: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c.to_f64();
        }
        acc
    }

    /// Coefficients converted once to binary64, for hot evaluation loops.
    pub fn coefficients_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(Rational::to_f64).collect()
    }

    /// Multiplies every coefficient by a scalar.
    pub fn scale(&self, s: &Rational) -> RationalPolynomial {
        if s.is_zero() {
            return RationalPolynomial::zero();
        }
        RationalPolynomial {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// The polynomial with its constant term removed.
    pub fn without_constant_term(&self) -> RationalPolynomial {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] = Rational::zero();
        RationalPolynomial::from_coefficients(coeffs)
    }

    /// Coefficients of `p(1 - t)`, expanded exactly by the binomial theorem.
    pub fn compose_one_minus_t(&self) -> RationalPolynomial {
        let n = self.coeffs.len();
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // c * (1 - t)^i contributes c * C(i,j) * (-1)^j to t^j
            for j in 0..=i {
                let mut term = Rational::from_big(
                    crate::rational::binomial(i as u32, j as u32),
                    num::BigInt::from(1),
                )
                .expect("nonzero denominator");
                if j % 2 == 1 {
                    term = -term;
                }
                out[j] += &(c * &term);
            }
        }
        RationalPolynomial::from_coefficients(out)
    }
}

/// ASCII rendering in descending powers, e.g. `t^2 - t + 1/6`.
impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign_str, mag) = if c.is_positive() {
                (if first { "" } else { " + " }, c.clone())
            } else {
                (if first { "-" } else { " - " }, c.abs())
            };
            write!(f, "{sign_str}")?;
            let mag_is_one = mag == Rational::one();
            match (i, mag_is_one) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{mag}t^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl Add<&RationalPolynomial> for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.coefficient(i) + rhs.coefficient(i))
            .collect();
        RationalPolynomial::from_coefficients(coeffs)
    }
}

impl Sub<&RationalPolynomial> for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.coefficient(i) - rhs.coefficient(i))
            .collect();
        RationalPolynomial::from_coefficients(coeffs)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Parses ascending-power coefficient lists (used by tests and the table
/// dump reader); not a general expression parser.
pub fn poly_from_ratios(pairs: &[(i64, i64)]) -> Result<RationalPolynomial> {
    let coeffs = pairs
        .iter()
        .map(|&(n, d)| Rational::from_ratio(n, d))
        .collect::<Result<Vec<_>>>()?;
    Ok(RationalPolynomial::from_coefficients(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b2() -> RationalPolynomial {
        // t^2 - t + 1/6
        poly_from_ratios(&[(1, 6), (-1, 1), (1, 1)]).unwrap()
    }

    #[test]
    fn derivative_power_rule() {
        let d = b2().derivative();
        assert_eq!(d, poly_from_ratios(&[(-1, 1), (2, 1)]).unwrap());
        assert_eq!(
            RationalPolynomial::constant(Rational::one()).derivative(),
            RationalPolynomial::zero()
        );
        let b1 = poly_from_ratios(&[(-1, 2), (1, 1)]).unwrap();
        assert_eq!(b1.derivative(), RationalPolynomial::constant(Rational::one()));
    }

    #[test]
    fn unit_interval_integrals() {
        let b1 = poly_from_ratios(&[(-1, 2), (1, 1)]).unwrap();
        assert!(b1.integrate_unit_interval().is_zero());
        assert_eq!(
            RationalPolynomial::constant(Rational::one()).integrate_unit_interval(),
            Rational::one()
        );
        assert!(b2().integrate_unit_interval().is_zero());
    }

    #[test]
    fn exact_evaluation() {
        assert_eq!(b2().eval(&Rational::zero()), Rational::from_ratio(1, 6).unwrap());
        assert_eq!(b2().eval(&Rational::one()), Rational::from_ratio(1, 6).unwrap());
        let b1 = poly_from_ratios(&[(-1, 2), (1, 1)]).unwrap();
        assert!(b1.eval(&Rational::from_ratio(1, 2).unwrap()).is_zero());
    }

    #[test]
    fn float_evaluation_tracks_exact() {
        let p = poly_from_ratios(&[(3, 7), (-22, 5), (913, 11), (-1, 3)]).unwrap();
        for t in [-2.5, -1.0, 0.0, 0.37, 1.0, 3.25] {
            let exact = p.eval(&Rational::from_ratio((t * 100.0) as i64, 100).unwrap());
            let approx = p.eval_f64((t * 100.0).round() / 100.0);
            assert!((approx - exact.to_f64()).abs() <= 1e-12 * (1.0 + exact.to_f64().abs()));
        }
    }

    #[test]
    fn normalization_trims_leading_zeros() {
        let p = poly_from_ratios(&[(1, 2), (0, 1), (0, 1)]).unwrap();
        assert_eq!(p.degree(), 0);
        let z = poly_from_ratios(&[(0, 1), (0, 1)]).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.degree(), 0);
    }

    #[test]
    fn one_minus_t_composition() {
        // B_1(1-t) = (1-t) - 1/2 = -(t - 1/2)
        let b1 = poly_from_ratios(&[(-1, 2), (1, 1)]).unwrap();
        assert_eq!(b1.compose_one_minus_t(), -&b1);
        // B_2 is symmetric
        assert_eq!(b2().compose_one_minus_t(), b2());
    }

    #[test]
    fn display_matches_conventions() {
        assert_eq!(b2().to_string(), "t^2 - t + 1/6");
        let b1 = poly_from_ratios(&[(-1, 2), (1, 1)]).unwrap();
        assert_eq!(b1.to_string(), "t - 1/2");
        assert_eq!(RationalPolynomial::zero().to_string(), "0");
        let p = poly_from_ratios(&[(0, 1), (0, 1), (-2, 3)]).unwrap();
        assert_eq!(p.to_string(), "-2/3t^2");
    }
}
