use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use super::BiPoly;
use crate::error::{Error, Result};

/// Univariate polynomial with rational coefficients.
///
/// Used for characteristic and bad-colouring polynomials and for the
/// interpolation step of the exponential-formula computations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    terms: BTreeMap<u32, BigRational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0)
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(BigRational::from_integer(c.into()), 0)
    }

    pub fn monomial(c: BigRational, k: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(k, c);
        p
    }

    pub fn from_int_coeffs<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        let mut p = Self::zero();
        for (k, c) in coeffs.into_iter().enumerate() {
            p.add_term(k as u32, BigRational::from_integer(c.into()));
        }
        p
    }

    fn add_term(&mut self, k: u32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().copied().max().unwrap_or(0)
    }

    pub fn coeff(&self, k: u32) -> BigRational {
        self.terms.get(&k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigRational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn scale(&self, c: &BigRational) -> UniPoly {
        let mut out = UniPoly::zero();
        for (&k, d) in &self.terms {
            out.add_term(k, d * c);
        }
        out
    }

    pub fn eval(&self, v: &BigRational) -> BigRational {
        self.terms
            .iter()
            .map(|(&k, c)| c * Pow::pow(v, k))
            .fold(BigRational::zero(), |a, b| a + b)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Integer coefficient vector (index = exponent); fails when any
    /// coefficient is fractional.
    pub fn to_int_coeffs(&self) -> Result<Vec<BigInt>> {
        if !self.is_integral() {
            return Err(Error::NonExactDivision(
                "polynomial has non-integral coefficients".into(),
            ));
        }
        let mut v = vec![BigInt::zero(); self.degree() as usize + 1];
        for (&k, c) in &self.terms {
            v[k as usize] = c.to_integer();
        }
        Ok(v)
    }

    /// Embeds an integral polynomial into the first slot of a [`BiPoly`].
    pub fn to_bipoly_x(&self) -> Result<BiPoly> {
        let v = self.to_int_coeffs()?;
        Ok(BiPoly::from_terms(
            v.into_iter().enumerate().map(|(k, c)| (k as u32, 0, c)),
        ))
    }

    /// Reads a [`BiPoly`] with no second-variable dependence.
    pub fn from_bipoly_x(p: &BiPoly) -> Result<UniPoly> {
        let mut out = UniPoly::zero();
        for ((i, j), c) in p.terms() {
            if j != 0 {
                return Err(Error::InvalidParameters(
                    "polynomial depends on the second variable".into(),
                ));
            }
            out.add_term(i, BigRational::from_integer(c.clone()));
        }
        Ok(out)
    }

    /// Lagrange interpolation through `(xs[k], ys[k])`.
    pub fn interpolate(points: &[(BigRational, BigRational)]) -> Result<UniPoly> {
        let mut result = UniPoly::zero();
        for (k, (xk, yk)) in points.iter().enumerate() {
            let mut basis = UniPoly::one();
            let mut denom = BigRational::one();
            for (m, (xm, _)) in points.iter().enumerate() {
                if m == k {
                    continue;
                }
                if xm == xk {
                    return Err(Error::InvalidParameters("interpolation nodes must be distinct".into()));
                }
                basis = &basis * &(&UniPoly::var() - &UniPoly::monomial(xm.clone(), 0));
                denom *= xk - xm;
            }
            result = &result + &basis.scale(&(yk / denom));
        }
        Ok(result)
    }

    pub fn to_text_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, (&k, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if n == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            let mut factors = Vec::new();
            if !abs.is_one() || k == 0 {
                factors.push(abs.to_string());
            }
            match k {
                0 => {}
                1 => factors.push(var.to_string()),
                _ => factors.push(format!("{var}^{k}")),
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text_with("t"))
    }
}

impl<'a> Add<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for (&a, c) in &self.terms {
            for (&b, d) in &rhs.terms {
                out.add_term(a + b, c * d);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn interpolation_recovers_cubic() {
        // (t - 1)(t - 2)(t - 4)
        let f = |t: i64| (t - 1) * (t - 2) * (t - 4);
        let pts: Vec<_> = (0..4).map(|t| (r(t), r(f(t)))).collect();
        let p = UniPoly::interpolate(&pts).unwrap();
        assert_eq!(
            p.to_int_coeffs().unwrap(),
            vec![(-8).into(), 14.into(), (-7).into(), BigInt::one()]
        );
    }

    #[test]
    fn fractional_coefficients_are_rejected() {
        let p = UniPoly::monomial(BigRational::new(1.into(), 2.into()), 1);
        assert!(!p.is_integral());
        assert!(p.to_int_coeffs().is_err());
    }

    #[test]
    fn display() {
        let p = UniPoly::from_int_coeffs([0, 36, 18, 24, 0, 0, 3]);
        assert_eq!(p.to_string(), "3*t^6 + 24*t^3 + 18*t^2 + 36*t");
    }
}
