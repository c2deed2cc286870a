//! Gaussian integers ℤ[i] and Gaussian rationals ℚ(i).

use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A Gaussian integer with overflow-checked machine arithmetic.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GInt {
    pub re: i64,
    pub im: i64,
}

impl GInt {
    pub const ZERO: GInt = GInt { re: 0, im: 0 };
    pub const ONE: GInt = GInt { re: 1, im: 0 };
    pub const I: GInt = GInt { re: 0, im: 1 };

    pub const fn new(re: i64, im: i64) -> Self {
        GInt { re, im }
    }

    pub fn real(re: i64) -> Self {
        GInt { re, im: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.re == 0 && self.im == 0
    }

    pub fn conj(&self) -> Self {
        GInt { re: self.re, im: -self.im }
    }

    /// True for 1, −1, i, −i.
    pub fn is_unit(&self) -> bool {
        self.re.abs() + self.im.abs() == 1
    }

    pub fn to_gauss_rat(self) -> GaussRat {
        GaussRat::new(
            BigRational::from_integer(BigInt::from(self.re)),
            BigRational::from_integer(BigInt::from(self.im)),
        )
    }

    /// Image in 𝔽_p under i ↦ `sqrt_m1` (a square root of −1 mod p).
    pub fn reduce_mod(&self, p: u64, sqrt_m1: u64) -> u64 {
        let pm = i128::from(p);
        let re = i128::from(self.re).rem_euclid(pm);
        let im = i128::from(self.im).rem_euclid(pm);
        ((re + im * i128::from(sqrt_m1)) % pm) as u64
    }
}

impl Add for GInt {
    type Output = GInt;
    fn add(self, o: GInt) -> GInt {
        GInt {
            re: self.re.checked_add(o.re).expect("GInt overflow"),
            im: self.im.checked_add(o.im).expect("GInt overflow"),
        }
    }
}

impl AddAssign for GInt {
    fn add_assign(&mut self, o: GInt) {
        *self = *self + o;
    }
}

impl Sub for GInt {
    type Output = GInt;
    fn sub(self, o: GInt) -> GInt {
        self + (-o)
    }
}

impl Neg for GInt {
    type Output = GInt;
    fn neg(self) -> GInt {
        GInt { re: -self.re, im: -self.im }
    }
}

impl Mul for GInt {
    type Output = GInt;
    fn mul(self, o: GInt) -> GInt {
        let m = |a: i64, b: i64| a.checked_mul(b).expect("GInt overflow");
        GInt {
            re: m(self.re, o.re).checked_sub(m(self.im, o.im)).expect("GInt overflow"),
            im: m(self.re, o.im).checked_add(m(self.im, o.re)).expect("GInt overflow"),
        }
    }
}

impl Mul<i64> for GInt {
    type Output = GInt;
    fn mul(self, k: i64) -> GInt {
        self * GInt::real(k)
    }
}

impl fmt::Debug for GInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (r, 0) => write!(f, "{r}"),
            (0, 1) => write!(f, "i"),
            (0, -1) => write!(f, "-i"),
            (0, i) => write!(f, "{i}i"),
            (r, i) if i < 0 => write!(f, "{r}-{}i", -i),
            (r, i) => write!(f, "{r}+{i}i"),
        }
    }
}

/// An element of ℚ(i).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn from_rational(re: BigRational) -> Self {
        GaussRat { re, im: BigRational::zero() }
    }

    pub fn conj(&self) -> Self {
        GaussRat { re: self.re.clone(), im: -&self.im }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn inv(&self) -> Self {
        let norm = &self.re * &self.re + &self.im * &self.im;
        GaussRat { re: &self.re / &norm, im: -&self.im / &norm }
    }

    /// The Gaussian integer, if both parts are integral.
    pub fn to_gint(&self) -> Option<GInt> {
        use num_traits::ToPrimitive;
        if self.re.is_integer() && self.im.is_integer() {
            Some(GInt::new(self.re.to_integer().to_i64()?, self.im.to_integer().to_i64()?))
        } else {
            None
        }
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl super::Field for GaussRat {
    fn zero() -> Self {
        GaussRat::from_rational(<BigRational as Zero>::zero())
    }
    fn one() -> Self {
        GaussRat::from_rational(<BigRational as One>::one())
    }
    fn is_zero(&self) -> bool {
        GaussRat::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        GaussRat { re: &self.re + &o.re, im: &self.im + &o.im }
    }
    fn sub(&self, o: &Self) -> Self {
        GaussRat { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    fn mul(&self, o: &Self) -> Self {
        GaussRat { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
    fn neg(&self) -> Self {
        GaussRat { re: -&self.re, im: -&self.im }
    }
    fn inv(&self) -> Self {
        GaussRat::inv(self)
    }
}
