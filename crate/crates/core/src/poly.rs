//! Exact integer polynomials in `t` and rational series `N(t) / (1 - t)^e`.
//!
//! All arithmetic is checked: an overflow is reported as
//! [`Error::Overflow`] instead of wrapping.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A polynomial with `i64` coefficients, lowest degree first. The highest
/// stored coefficient is always nonzero; zero is the empty vector.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![1] }
    }

    /// `c * t^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        IntPolynomial::new(coeffs)
    }

    /// `(1 - t)^e`.
    pub fn one_minus_t_pow(e: usize) -> Result<Self> {
        let base = IntPolynomial::new(vec![1, -1]);
        let mut out = IntPolynomial::one();
        for _ in 0..e {
            out = out.mul(&base)?;
        }
        Ok(out)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| self.coeff(k).checked_add(other.coeff(k)).ok_or(Error::Overflow("polynomial addition")))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPolynomial::new(coeffs))
    }

    pub fn neg(&self) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.checked_neg().ok_or(Error::Overflow("polynomial negation")))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPolynomial { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg()?)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(IntPolynomial::zero());
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let term = a.checked_mul(b).ok_or(Error::Overflow("polynomial multiplication"))?;
                coeffs[i + j] =
                    coeffs[i + j].checked_add(term).ok_or(Error::Overflow("polynomial multiplication"))?;
            }
        }
        Ok(IntPolynomial::new(coeffs))
    }

    pub fn scale(&self, c: i64) -> Result<Self> {
        self.mul(&IntPolynomial::monomial(c, 0))
    }

    /// Sum of the coefficients.
    pub fn eval_at_one(&self) -> Result<i64> {
        self.coeffs
            .iter()
            .try_fold(0i64, |acc, &c| acc.checked_add(c))
            .ok_or(Error::Overflow("evaluation at t = 1"))
    }

    /// Divides by `(1 - t)` by synthetic division at `t = 1`, or returns
    /// `None` when the remainder `p(1)` is nonzero.
    pub fn div_one_minus_t(&self) -> Result<Option<Self>> {
        if self.is_zero() {
            return Ok(Some(IntPolynomial::zero()));
        }
        // p = (1 - t) q  gives  q_k = p_0 + ... + p_k.
        let mut quotient = Vec::with_capacity(self.coeffs.len() - 1);
        let mut running = 0i64;
        for &c in &self.coeffs {
            running = running.checked_add(c).ok_or(Error::Overflow("division by 1 - t"))?;
            quotient.push(running);
        }
        if quotient.pop() != Some(0) {
            return Ok(None);
        }
        Ok(Some(IntPolynomial::new(quotient)))
    }

    /// The first `len` power-series coefficients of `self / (1 - t)^e`.
    pub fn expand_over(&self, e: usize, len: usize) -> Result<Vec<i64>> {
        let mut series: Vec<i64> = (0..len).map(|k| self.coeff(k)).collect();
        for _ in 0..e {
            let mut running = 0i64;
            for c in series.iter_mut() {
                running = running.checked_add(*c).ok_or(Error::Overflow("series expansion"))?;
                *c = running;
            }
        }
        Ok(series)
    }
}

impl fmt::Display for IntPolynomial {
    /// `1 + 2*t - t^2`; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            first = false;
            match (k, mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{mag}*t")?,
                (_, 1) => write!(f, "t^{k}")?,
                _ => write!(f, "{mag}*t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `num(t) / (1 - t)^denom_exp`, kept in lowest terms.
///
/// Canonical form: the numerator does not vanish at `t = 1`, unless it is
/// zero (then `denom_exp` is 0) or `denom_exp` is already 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalSeries {
    num: IntPolynomial,
    denom_exp: usize,
}

impl RationalSeries {
    /// Builds and normalizes `num / (1 - t)^denom_exp`.
    pub fn new(num: IntPolynomial, denom_exp: usize) -> Result<Self> {
        RationalSeries { num, denom_exp }.normalize()
    }

    /// Like [`RationalSeries::new`] but accepts a negative exponent, whose
    /// factors are multiplied into the numerator.
    pub fn from_signed(num: IntPolynomial, denom_exp: i64) -> Result<Self> {
        if denom_exp < 0 {
            let extra = IntPolynomial::one_minus_t_pow(denom_exp.unsigned_abs() as usize)?;
            RationalSeries::new(num.mul(&extra)?, 0)
        } else {
            RationalSeries::new(num, denom_exp as usize)
        }
    }

    pub fn one() -> Self {
        RationalSeries { num: IntPolynomial::one(), denom_exp: 0 }
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denom_exp(&self) -> usize {
        self.denom_exp
    }

    pub fn normalize(self) -> Result<Self> {
        let RationalSeries { mut num, mut denom_exp } = self;
        if num.is_zero() {
            return Ok(RationalSeries { num, denom_exp: 0 });
        }
        while denom_exp > 0 {
            match num.div_one_minus_t()? {
                Some(q) => {
                    num = q;
                    denom_exp -= 1;
                }
                None => break,
            }
        }
        Ok(RationalSeries { num, denom_exp })
    }

    pub fn is_canonical(&self) -> bool {
        if self.num.is_zero() {
            return self.denom_exp == 0;
        }
        self.denom_exp == 0 || (self.num.eval_at_one() != Ok(0))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        RationalSeries::new(self.num.mul(&other.num)?, self.denom_exp + other.denom_exp)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let e = self.denom_exp.max(other.denom_exp);
        let a = self.num.mul(&IntPolynomial::one_minus_t_pow(e - self.denom_exp)?)?;
        let b = other.num.mul(&IntPolynomial::one_minus_t_pow(e - other.denom_exp)?)?;
        RationalSeries::new(a.add(&b)?, e)
    }

    /// First `len` coefficients of the power series.
    pub fn expand(&self, len: usize) -> Result<Vec<i64>> {
        self.num.expand_over(self.denom_exp, len)
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.denom_exp {
            0 => write!(f, "{}", self.num),
            1 => write!(f, "({})/(1 - t)", self.num),
            e => write!(f, "({})/(1 - t)^{e}", self.num),
        }
    }
}
