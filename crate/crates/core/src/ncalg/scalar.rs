//! Coefficient fields.
//!
//! Everything above this module is written against [`Coefficient`]. The exact
//! default is [`GaussianRational`]; [`BigRational`] covers purely real tables
//! and `f64` is available for quick approximate runs.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Field of coefficients for moments, cumulants and state vectors.
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    /// Complex conjugate (identity on real fields).
    fn conj(&self) -> Self;

    /// Embeds `re + im·i`. Returns `None` when the field cannot hold the value.
    fn from_parts(re: &BigRational, im: &BigRational) -> Option<Self>;

    /// Real and imaginary parts. Exact for exact fields.
    fn to_parts(&self) -> (BigRational, BigRational);

    /// Compares real parts.
    fn cmp_real(&self, other: &Self) -> Ordering;

    fn is_real(&self) -> bool;

    fn from_integer(n: i64) -> Self {
        Self::from_parts(&BigRational::from_integer(n.into()), &BigRational::zero())
            .expect("every field embeds the integers")
    }

    fn from_rational(r: &BigRational) -> Self {
        Self::from_parts(r, &BigRational::zero()).expect("every field embeds the rationals")
    }

    /// `self^n` for `n >= 0`.
    fn powi(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc *= self.clone();
        }
        acc
    }
}

/// `a + b·i` with `a, b` exact rationals.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        GaussianRational { re, im: BigRational::zero() }
    }

    /// `num/den` as a real scalar. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::real(BigRational::new(num.into(), den.into()))
    }

    pub fn i() -> Self {
        GaussianRational { re: BigRational::zero(), im: BigRational::one() }
    }

    /// `|re|² + |im|²`.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Scales by a rational, keeping fast paths for real values.
    pub fn scale(&self, r: &BigRational) -> Self {
        GaussianRational {
            re: &self.re * r,
            im: if self.im.is_zero() { BigRational::zero() } else { &self.im * r },
        }
    }
}

fn mul_parts(a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
    match (a.im.is_zero(), b.im.is_zero()) {
        (true, true) => GaussianRational::real(&a.re * &b.re),
        (true, false) => GaussianRational::new(&a.re * &b.re, &a.re * &b.im),
        (false, true) => GaussianRational::new(&a.re * &b.re, &a.im * &b.re),
        (false, false) => GaussianRational::new(
            &a.re * &b.re - &a.im * &b.im,
            &a.re * &b.im + &a.im * &b.re,
        ),
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational::real(BigRational::one())
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl AddAssign for GaussianRational {
    fn add_assign(&mut self, rhs: Self) {
        self.re += rhs.re;
        if !rhs.im.is_zero() {
            self.im += rhs.im;
        }
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= rhs;
        self
    }
}

impl SubAssign for GaussianRational {
    fn sub_assign(&mut self, rhs: Self) {
        self.re -= rhs.re;
        if !rhs.im.is_zero() {
            self.im -= rhs.im;
        }
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        mul_parts(&self, &rhs)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        mul_parts(self, rhs)
    }
}

impl MulAssign for GaussianRational {
    fn mul_assign(&mut self, rhs: Self) {
        *self = mul_parts(self, &rhs);
    }
}

impl Div for GaussianRational {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero scalar");
        if rhs.im.is_zero() {
            return GaussianRational::new(&self.re / &rhs.re, &self.im / &rhs.re);
        }
        let n = rhs.norm_sqr();
        let num = mul_parts(&self, &rhs.conj());
        GaussianRational::new(num.re / &n, num.im / n)
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        GaussianRational::real(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<BigRational> for GaussianRational {
    fn from(r: BigRational) -> Self {
        GaussianRational::real(r)
    }
}

impl fmt::Display for GaussianRational {
    /// `p/q`, or `p/q + r/s i` when the imaginary part is nonzero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.im.is_negative() {
            write!(f, "{} - {} i", self.re, -&self.im)
        } else {
            write!(f, "{} + {} i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Coefficient for GaussianRational {
    fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -&self.im)
    }
    fn from_parts(re: &BigRational, im: &BigRational) -> Option<Self> {
        Some(GaussianRational::new(re.clone(), im.clone()))
    }
    fn to_parts(&self) -> (BigRational, BigRational) {
        (self.re.clone(), self.im.clone())
    }
    fn cmp_real(&self, other: &Self) -> Ordering {
        self.re.cmp(&other.re)
    }
    fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl Coefficient for BigRational {
    fn conj(&self) -> Self {
        self.clone()
    }
    fn from_parts(re: &BigRational, im: &BigRational) -> Option<Self> {
        im.is_zero().then(|| re.clone())
    }
    fn to_parts(&self) -> (BigRational, BigRational) {
        (self.clone(), BigRational::zero())
    }
    fn cmp_real(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }
    fn is_real(&self) -> bool {
        true
    }
}

impl Coefficient for f64 {
    fn conj(&self) -> Self {
        *self
    }
    fn from_parts(re: &BigRational, im: &BigRational) -> Option<Self> {
        if im.is_zero() {
            re.to_f64()
        } else {
            None
        }
    }
    fn to_parts(&self) -> (BigRational, BigRational) {
        (
            BigRational::from_float(*self).unwrap_or_else(BigRational::zero),
            BigRational::zero(),
        )
    }
    fn cmp_real(&self, other: &Self) -> Ordering {
        self.partial_cmp(other).unwrap_or(Ordering::Equal)
    }
    fn is_real(&self) -> bool {
        true
    }
}

/// Decimal rendering of a rational with `digits` significant fractional digits.
pub fn rational_to_decimal(r: &BigRational, digits: usize) -> String {
    let neg = r.is_negative();
    let abs = r.abs();
    let int = abs.numer() / abs.denom();
    let mut rem = abs.numer() % abs.denom();
    let mut out = String::new();
    if neg && !abs.is_zero() {
        out.push('-');
    }
    out.push_str(&int.to_string());
    if digits > 0 {
        out.push('.');
        let ten = BigInt::from(10);
        for _ in 0..digits {
            rem *= &ten;
            let d = &rem / abs.denom();
            rem %= abs.denom();
            out.push_str(&d.to_string());
        }
    }
    out
}
