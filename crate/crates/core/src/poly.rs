//! Dense exact polynomials over `Z` and `Q`, and truncated power series over `Q`.
//!
//! Nothing in here touches floating point.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::perm::CycleType;

/// Polynomial with big-integer coefficients; `coeffs[i]` multiplies `z^i`.
///
/// Always normalized: no trailing zero coefficients, the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactPolynomial {
    coeffs: Vec<BigInt>,
}

impl ExactPolynomial {
    pub fn zero() -> Self {
        ExactPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ExactPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ExactPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c z^degree`.
    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// `1 + sign·z^k`, `sign = ±1`.
    pub fn one_plus(sign: i64, k: usize) -> Self {
        let mut p = Self::one();
        p.coeffs.resize(k + 1, BigInt::zero());
        p.coeffs[k] += sign;
        Self::from_coeffs(p.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, z: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * z + c)
    }

    /// `p(z^k)`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1);
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplies in place by `1 + z^k`.
    pub(crate) fn mul_one_plus_zk(&mut self, k: usize) {
        if self.is_zero() {
            return;
        }
        let old_len = self.coeffs.len();
        self.coeffs.resize(old_len + k, BigInt::zero());
        for i in (k..old_len + k).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - k];
        }
    }

    /// Exact division with remainder over `Z`.
    ///
    /// Fails if some quotient coefficient is not an integer, i.e. the leading
    /// coefficient of `divisor` does not divide the running remainder.
    pub fn div_rem(&self, divisor: &ExactPolynomial) -> Result<(ExactPolynomial, ExactPolynomial)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::InvalidInput("division by the zero polynomial".into()))?;
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for shift in (0..=nd - dd).rev() {
            let top = &rem[shift + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::Consistency(format!(
                    "quotient coefficient {top}/{lead} at z^{shift} is not an integer"
                )));
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &q * d;
            }
            quot[shift] = q;
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Quotient of an exact division; a nonzero remainder is an error.
    pub fn div_exact(&self, divisor: &ExactPolynomial) -> Result<ExactPolynomial> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Consistency(format!(
                "division of {self} by {divisor} leaves remainder {r}"
            )));
        }
        Ok(q)
    }
}

impl fmt::Debug for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactPolynomial({self})")
    }
}

impl fmt::Display for ExactPolynomial {
    /// Human form in ascending degree, e.g. `1 + z + 2*z^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{mag}*z")?,
                (_, true) => write!(f, "z^{i}")?,
                (_, false) => write!(f, "{mag}*z^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn add(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for ExactPolynomial {
    type Output = ExactPolynomial;
    fn add(mut self, rhs: ExactPolynomial) -> ExactPolynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&ExactPolynomial> for ExactPolynomial {
    fn add_assign(&mut self, rhs: &ExactPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Neg for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn neg(self) -> ExactPolynomial {
        ExactPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn sub(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn mul(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        poly_mul(self, rhs)
    }
}

impl Mul for ExactPolynomial {
    type Output = ExactPolynomial;
    fn mul(self, rhs: ExactPolynomial) -> ExactPolynomial {
        poly_mul(&self, &rhs)
    }
}

/// Schoolbook product.
pub fn poly_mul(a: &ExactPolynomial, b: &ExactPolynomial) -> ExactPolynomial {
    if a.is_zero() || b.is_zero() {
        return ExactPolynomial::zero();
    }
    let mut coeffs = vec![BigInt::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            coeffs[i + j] += x * y;
        }
    }
    ExactPolynomial::from_coeffs(coeffs)
}

/// `Π (1 + z^k)^e` over the given `(k, e)` pairs.
pub fn binomial_power(factors: &[(usize, usize)]) -> ExactPolynomial {
    let mut p = ExactPolynomial::one();
    for &(k, e) in factors {
        assert!(k >= 1, "factor 1 + z^0 is not allowed");
        for _ in 0..e {
            p.mul_one_plus_zk(k);
        }
    }
    p
}

/// `Π_k (1 - z^k)^{j_k}` for a cycle type.
pub fn cyclotomic_like_product(ct: &CycleType) -> ExactPolynomial {
    ct.nonzero().fold(ExactPolynomial::one(), |acc, (k, j)| {
        (0..j).fold(acc, |p, _| &p * &ExactPolynomial::one_plus(-1, k))
    })
}

/// Polynomial with rational coefficients, each in lowest terms.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// `self += c · p`.
    pub fn add_scaled(&mut self, c: &BigRational, p: &ExactPolynomial) {
        if self.coeffs.len() < p.coeffs().len() {
            self.coeffs.resize(p.coeffs().len(), BigRational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(p.coeffs()) {
            *a += c * BigRational::from_integer(b.clone());
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl From<&ExactPolynomial> for RationalPolynomial {
    fn from(p: &ExactPolynomial) -> Self {
        RationalPolynomial {
            coeffs: p.coeffs().iter().cloned().map(BigRational::from_integer).collect(),
        }
    }
}

impl fmt::Debug for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.coeffs.iter().map(|c| c.to_string()))
            .finish()
    }
}

/// Power series with rational coefficients, exact modulo `z^(cutoff+1)`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn zero(cutoff: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigRational::zero(); cutoff + 1],
        }
    }

    pub fn one(cutoff: usize) -> Self {
        let mut s = Self::zero(cutoff);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// Truncates or zero-pads `coeffs` to degree `cutoff`.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>, cutoff: usize) -> Self {
        coeffs.resize(cutoff + 1, BigRational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_integers(coeffs: &[BigInt], cutoff: usize) -> Self {
        Self::from_coeffs(coeffs.iter().cloned().map(BigRational::from_integer).collect(), cutoff)
    }

    pub fn from_polynomial(p: &ExactPolynomial, cutoff: usize) -> Self {
        Self::from_integers(p.coeffs(), cutoff)
    }

    pub fn cutoff(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    fn check_cutoff(&self, other: &TruncatedSeries) -> Result<()> {
        if self.cutoff() != other.cutoff() {
            return Err(Error::InvalidInput(format!(
                "series cutoffs differ: {} vs {}",
                self.cutoff(),
                other.cutoff()
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_cutoff(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_cutoff(other)?;
        let d = self.cutoff();
        let mut out = Self::zero(d);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=d - i].iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<TruncatedSeries> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::InvalidInput(
                "series with zero constant term is not invertible".into(),
            ));
        }
        let d = self.cutoff();
        let mut inv = Self::zero(d);
        inv.coeffs[0] = c0.recip();
        for k in 1..=d {
            let mut acc = BigRational::zero();
            for i in 1..=k {
                acc += &self.coeffs[i] * &inv.coeffs[k - i];
            }
            inv.coeffs[k] = -acc / c0;
        }
        Ok(inv)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_integer)
    }

    /// Integer coefficients, or `None` if any is fractional.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}] + O(z^{})", cs.join(", "), self.coeffs.len())
    }
}

/// `Π_k (1 - z^k)^{-j_k}` modulo `z^(cutoff+1)`.
pub fn series_inverse_product(ct: &CycleType, cutoff: usize) -> TruncatedSeries {
    TruncatedSeries::from_integers(&inverse_product_integers(ct, cutoff), cutoff)
}

/// Integer coefficients of `Π_k (1 - z^k)^{-j_k}` up to `cutoff`.
pub(crate) fn inverse_product_integers(ct: &CycleType, cutoff: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); cutoff + 1];
    c[0] = BigInt::one();
    for (k, j) in ct.nonzero() {
        for _ in 0..j {
            // multiply by 1/(1 - z^k): running sum with stride k
            for i in k..=cutoff {
                let (lo, hi) = c.split_at_mut(i);
                hi[0] += &lo[i - k];
            }
        }
    }
    c
}

/// Division of an accumulated group sum by the group order, where every
/// resulting coefficient must be an integer. A fractional coefficient is
/// reported as a consistency failure.
pub trait ScaleToInteger {
    type Output;
    fn scale_and_assert_integer(&self, divisor: &BigInt) -> Result<Self::Output>;
}

fn check_divisor(divisor: &BigInt) -> Result<()> {
    if divisor.is_zero() {
        return Err(Error::InvalidInput("divisor must be nonzero".into()));
    }
    Ok(())
}

impl ScaleToInteger for ExactPolynomial {
    type Output = ExactPolynomial;
    fn scale_and_assert_integer(&self, divisor: &BigInt) -> Result<ExactPolynomial> {
        check_divisor(divisor)?;
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            let (q, r) = c.div_rem(divisor);
            if !r.is_zero() {
                return Err(Error::Consistency(format!(
                    "coefficient of z^{i} is {c}/{divisor}, not an integer"
                )));
            }
            coeffs.push(q);
        }
        Ok(ExactPolynomial::from_coeffs(coeffs))
    }
}

fn rational_to_integer(i: usize, c: &BigRational, divisor: &BigInt) -> Result<BigInt> {
    let q = c / BigRational::from_integer(divisor.clone());
    if !q.is_integer() {
        return Err(Error::Consistency(format!(
            "coefficient of z^{i} is {q}, not an integer"
        )));
    }
    Ok(q.to_integer())
}

impl ScaleToInteger for RationalPolynomial {
    type Output = ExactPolynomial;
    fn scale_and_assert_integer(&self, divisor: &BigInt) -> Result<ExactPolynomial> {
        check_divisor(divisor)?;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| rational_to_integer(i, c, divisor))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExactPolynomial::from_coeffs(coeffs))
    }
}

impl ScaleToInteger for TruncatedSeries {
    type Output = TruncatedSeries;
    fn scale_and_assert_integer(&self, divisor: &BigInt) -> Result<TruncatedSeries> {
        check_divisor(divisor)?;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| rational_to_integer(i, c, divisor).map(BigRational::from_integer))
            .collect::<Result<Vec<_>>>()?;
        Ok(TruncatedSeries { coeffs })
    }
}
