//! Elements of ℚ/ℤ. A phase `q` stands for the angle `2πq` in ℝ/2πℤ.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_integer::Integer;

/// A rational number reduced into `[0, 1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Phase {
    num: i64,
    den: i64,
}

impl Phase {
    pub const ZERO: Phase = Phase { num: 0, den: 1 };

    /// The class of `num/den` modulo 1.
    ///
    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "phase with zero denominator");
        let (mut num, mut den) = if den < 0 { (-num, -den) } else { (num, den) };
        num = num.rem_euclid(den);
        let g = num.gcd(&den);
        if g > 1 {
            num /= g;
            den /= g;
        }
        Phase { num, den }
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// Additive order of the phase in ℚ/ℤ.
    pub fn order(&self) -> i64 {
        self.den
    }

    /// Representative numerator over a given denominator, if `self` lies in `(1/den)ℤ/ℤ`.
    pub fn over(&self, den: i64) -> Option<i64> {
        if den % self.den == 0 {
            Some(self.num * (den / self.den))
        } else {
            None
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        Phase::new(self.num.wrapping_mul(k.rem_euclid(self.den)), self.den)
    }
}

impl Default for Phase {
    fn default() -> Self {
        Phase::ZERO
    }
}

impl Add for Phase {
    type Output = Phase;
    fn add(self, rhs: Phase) -> Phase {
        let l = self.den.lcm(&rhs.den);
        Phase::new(self.num * (l / self.den) + rhs.num * (l / rhs.den), l)
    }
}

impl AddAssign for Phase {
    fn add_assign(&mut self, rhs: Phase) {
        *self = *self + rhs;
    }
}

impl Neg for Phase {
    type Output = Phase;
    fn neg(self) -> Phase {
        Phase::new(-self.num, self.den)
    }
}

impl Sub for Phase {
    type Output = Phase;
    fn sub(self, rhs: Phase) -> Phase {
        self + (-rhs)
    }
}

impl SubAssign for Phase {
    fn sub_assign(&mut self, rhs: Phase) {
        *self = *self - rhs;
    }
}

impl Mul<i64> for Phase {
    type Output = Phase;
    fn mul(self, rhs: i64) -> Phase {
        self.scale(rhs)
    }
}

impl Ord for Phase {
    fn cmp(&self, other: &Self) -> Ordering {
        (i128::from(self.num) * i128::from(other.den)).cmp(&(i128::from(other.num) * i128::from(self.den)))
    }
}

impl PartialOrd for Phase {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_into_unit_interval() {
        assert_eq!(Phase::new(5, 4), Phase::new(1, 4));
        assert_eq!(Phase::new(-1, 4), Phase::new(3, 4));
        assert_eq!(Phase::new(2, -4), Phase::new(1, 2));
        assert!(Phase::new(3, 3).is_zero());
    }

    #[test]
    fn arithmetic_mod_one() {
        let a = Phase::new(1, 3);
        let b = Phase::new(1, 6);
        assert_eq!(a + b, Phase::new(1, 2));
        assert_eq!(a - b - b, Phase::ZERO);
        assert_eq!(a * 3, Phase::ZERO);
        assert_eq!(Phase::new(1, 4).over(8), Some(2));
        assert_eq!(Phase::new(1, 4).over(6), None);
    }
}
