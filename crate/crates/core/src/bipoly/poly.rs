use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent pair `(i, j)` of the monomial `x^i y^j`.
pub type Exponents = (u32, u32);

/// Sparse polynomial in two indeterminates with arbitrary-precision integer
/// coefficients.
///
/// Zero coefficients are never stored, so structural equality of the term
/// maps is polynomial equality. The map is keyed lexicographically by
/// `(i, j)`; the largest key is the leading term used by [`BiPoly::exact_div`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn x() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term((i, j), c.into());
        p
    }

    /// Builds a polynomial from `(i, j, c)` triples; repeated exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (i, j, c) in terms {
            p.add_term((i, j), c.into());
        }
        p
    }

    /// `1 + x + ... + x^(k-1)`; zero when `k == 0`.
    pub fn geometric_x(k: u32) -> Self {
        Self::from_terms((0..k).map(|i| (i, 0, 1)))
    }

    /// `1 + y + ... + y^(k-1)`; zero when `k == 0`.
    pub fn geometric_y(k: u32) -> Self {
        Self::from_terms((0..k).map(|j| (0, j, 1)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Terms in lexicographic `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (Exponents, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn x_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.0).max().unwrap_or(0)
    }

    pub fn y_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.1).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.0 + e.1).max().unwrap_or(0)
    }

    pub fn leading_term(&self) -> Option<(Exponents, &BigInt)> {
        self.terms.last_key_value().map(|(e, c)| (*e, c))
    }

    pub(crate) fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn add_scaled_shifted(&mut self, other: &BiPoly, c: &BigInt, shift: Exponents) {
        for (&(i, j), d) in &other.terms {
            self.add_term((i + shift.0, j + shift.1), c * d);
        }
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> BiPoly {
        let c = c.into();
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(e, d)| (*e, d * &c)).collect(),
        }
    }

    /// Multiplies by the monomial `x^i y^j`.
    pub fn shift(&self, i: u32, j: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + i, b + j), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> BiPoly {
        let mut result = BiPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `T(y, x)`.
    pub fn swap_xy(&self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect(),
        }
    }

    /// Divides by `d`, which must divide `self` exactly in `Z[x, y]`.
    ///
    /// Long division with respect to the lexicographic order `x > y`. When
    /// `d | self` every reduction step is exact, so any failure to reduce the
    /// leading term proves non-divisibility.
    pub fn exact_div(&self, d: &BiPoly) -> Result<BiPoly> {
        let Some((dlead, dc)) = d.leading_term() else {
            return Err(Error::NonExactDivision("division by zero".into()));
        };
        if d.is_one() {
            return Ok(self.clone());
        }
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quot = BiPoly::zero();
        while let Some(((i, j), c)) = rem.leading_term() {
            if i < dlead.0 || j < dlead.1 {
                return Err(Error::NonExactDivision(format!(
                    "leading term x^{i}*y^{j} not divisible by x^{}*y^{}",
                    dlead.0, dlead.1
                )));
            }
            let (q, r) = num_integer::Integer::div_rem(c, &dc);
            if !r.is_zero() {
                return Err(Error::NonExactDivision(format!(
                    "coefficient {c} not divisible by {dc}"
                )));
            }
            let shift = (i - dlead.0, j - dlead.1);
            rem.add_scaled_shifted(d, &-&q, shift);
            quot.add_term(shift, q);
        }
        Ok(quot)
    }

    /// Evaluates at a rational point with the convention `0^0 = 1`.
    pub fn eval(&self, x0: &BigRational, y0: &BigRational) -> BigRational {
        let mut total = BigRational::zero();
        for (&(i, j), c) in &self.terms {
            let term = BigRational::from(c.clone()) * Pow::pow(x0, i) * Pow::pow(y0, j);
            total += term;
        }
        total
    }

    pub fn eval_int(&self, x0: &BigInt, y0: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * Pow::pow(x0, i) * Pow::pow(y0, j))
            .sum()
    }

    /// Polynomial substitution `self(xs, ys)`.
    pub fn compose(&self, xs: &BiPoly, ys: &BiPoly) -> BiPoly {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let ydeg = self.y_degree();
        let ypows = powers(ys, ydeg);
        // Horner in the first variable over the inner sums in the second.
        let xdeg = self.x_degree();
        let mut inner = vec![BiPoly::zero(); xdeg as usize + 1];
        for (&(i, j), c) in &self.terms {
            inner[i as usize].add_scaled_shifted(&ypows[j as usize], c, (0, 0));
        }
        let mut acc = BiPoly::zero();
        for q in inner.into_iter().rev() {
            acc = &(&acc * xs) + &q;
        }
        acc
    }

    /// Returns `clear_factor * self(x_num / x_den, y_num / y_den)` as an exact
    /// polynomial.
    ///
    /// With `(a, b)` the bidegree of `self`, the substituted expression is
    /// expanded over the common denominator `x_den^a * y_den^b`, multiplied by
    /// `clear_factor` and divided exactly. A wrong prefactor surfaces as
    /// [`Error::NonExactDivision`].
    pub fn subst_rational(
        &self,
        x_num: &BiPoly,
        x_den: &BiPoly,
        y_num: &BiPoly,
        y_den: &BiPoly,
        clear_factor: &BiPoly,
    ) -> Result<BiPoly> {
        if x_den.is_zero() || y_den.is_zero() {
            return Err(Error::NonExactDivision("zero denominator".into()));
        }
        if self.is_zero() {
            return Ok(BiPoly::zero());
        }
        let a = self.x_degree();
        let b = self.y_degree();
        let xn = powers(x_num, a);
        let xd = powers(x_den, a);
        let yn = powers(y_num, b);
        let yd = powers(y_den, b);
        let mut inner = vec![BiPoly::zero(); a as usize + 1];
        let ycache: Vec<BiPoly> = (0..=b as usize).map(|j| &yn[j] * &yd[b as usize - j]).collect();
        for (&(i, j), c) in &self.terms {
            inner[i as usize].add_scaled_shifted(&ycache[j as usize], c, (0, 0));
        }
        let mut numer = BiPoly::zero();
        for (i, q) in inner.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let xpart = &xn[i] * &xd[a as usize - i];
            numer += &(&xpart * q);
        }
        let numer = &numer * clear_factor;
        let denom = &xd[a as usize] * &yd[b as usize];
        numer.exact_div(&denom)
    }

    /// Coefficient list of the univariate polynomial in `y` obtained when `self`
    /// has no `x` dependence; `None` otherwise.
    pub fn as_univariate_y(&self) -> Option<Vec<BigInt>> {
        if self.terms.keys().any(|e| e.0 != 0) {
            return None;
        }
        let mut v = vec![BigInt::zero(); self.y_degree() as usize + 1];
        for (&(_, j), c) in &self.terms {
            v[j as usize] = c.clone();
        }
        Some(v)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

pub(crate) fn powers(p: &BiPoly, n: u32) -> Vec<BiPoly> {
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(BiPoly::one());
    for k in 1..=n as usize {
        let next = &out[k - 1] * p;
        out.push(next);
    }
    out
}

impl<'a> Add<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(mut self, rhs: BiPoly) -> BiPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&BiPoly> for BiPoly {
    fn add_assign(&mut self, rhs: &BiPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<'a> Sub<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(mut self, rhs: BiPoly) -> BiPoly {
        self -= &rhs;
        self
    }
}

impl SubAssign<&BiPoly> for BiPoly {
    fn sub_assign(&mut self, rhs: &BiPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let (small, large) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = BiPoly::zero();
        for (&e, c) in &small.terms {
            out.add_scaled_shifted(large, c, e);
        }
        out
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -self.clone()
    }
}

impl From<i64> for BiPoly {
    fn from(c: i64) -> Self {
        BiPoly::constant(c)
    }
}

impl std::iter::Sum for BiPoly {
    fn sum<I: Iterator<Item = BiPoly>>(iter: I) -> BiPoly {
        let mut acc = BiPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl std::iter::Product for BiPoly {
    fn product<I: Iterator<Item = BiPoly>>(iter: I) -> BiPoly {
        let mut acc = BiPoly::one();
        for p in iter {
            acc = &acc * &p;
        }
        acc
    }
}
