//! Exact arithmetic in cyclotomic fields ℚ(ζ_n).
//!
//! An element is stored in the power basis `1, ζ, …, ζ^{φ(n)-1}` of ℚ(ζ_n),
//! which makes the representation unique for a fixed conductor `n`. Binary
//! operations lift both operands to the least common conductor.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::{self, Write as _};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Phase;

/// Möbius function.
fn mobius(mut n: u64) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Coefficients (low degree first) of the n-th cyclotomic polynomial, via
/// Φ_n = ∏_{d|n} (x^d − 1)^{μ(n/d)}.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    let n = n as usize;
    let mut poly = vec![1i64];
    let mut divisors_neg = Vec::new();
    for d in 1..=n {
        if !n.is_multiple_of(d) {
            continue;
        }
        match mobius((n / d) as u64) {
            1 => {
                // multiply by (x^d − 1)
                let mut next = vec![0i64; poly.len() + d];
                for (i, &c) in poly.iter().enumerate() {
                    next[i + d] += c;
                    next[i] -= c;
                }
                poly = next;
            }
            -1 => divisors_neg.push(d),
            _ => {}
        }
    }
    for d in divisors_neg {
        // exact division by (x^d − 1): q_i = q_{i-d} − p_i read from the top.
        let deg = poly.len() - 1;
        let qdeg = deg - d;
        let mut q = vec![0i64; qdeg + 1];
        let mut rem = poly.clone();
        for i in (0..=qdeg).rev() {
            let c = rem[i + d];
            q[i] = c;
            rem[i + d] -= c;
            rem[i] += c;
        }
        debug_assert!(rem.iter().all(|&c| c == 0));
        poly = q;
    }
    poly
}

/// An element of ℚ(ζ_n) in the power basis.
#[derive(Clone)]
pub struct Cyclo {
    n: u32,
    coeffs: Vec<BigRational>,
}

fn ratio(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Cyclo {
    pub fn zero() -> Self {
        Cyclo { n: 1, coeffs: vec![BigRational::zero()] }
    }

    pub fn one() -> Self {
        Cyclo::from_rational(BigRational::one())
    }

    pub fn from_rational(q: BigRational) -> Self {
        Cyclo { n: 1, coeffs: vec![q] }
    }

    pub fn from_int(k: i64) -> Self {
        Cyclo::from_rational(ratio(k))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Cyclo::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// ζ_n^k with ζ_n = exp(2πi/n).
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n > 0);
        let k = k.rem_euclid(i64::from(n)) as usize;
        let mut full = vec![BigRational::zero(); n as usize];
        full[k] = BigRational::one();
        Cyclo::reduce_full(n, full)
    }

    /// exp(2πi q).
    pub fn from_phase(q: Phase) -> Self {
        Cyclo::root_of_unity(q.denom() as u32, q.numer())
    }

    /// Σ_k coeffs[k] ζ_n^k for an arbitrary-length exponent vector.
    pub fn from_exponent_coeffs(n: u32, coeffs: &[i64]) -> Self {
        let mut full = vec![BigRational::zero(); n as usize];
        for (k, &c) in coeffs.iter().enumerate() {
            full[k % n as usize] += ratio(c);
        }
        Cyclo::reduce_full(n, full)
    }

    fn reduce_full(n: u32, mut v: Vec<BigRational>) -> Self {
        let phi = cyclotomic_polynomial(n);
        let deg = phi.len() - 1;
        for i in (deg..v.len()).rev() {
            if v[i].is_zero() {
                continue;
            }
            let c = v[i].clone();
            for (j, &pj) in phi.iter().enumerate().take(deg) {
                if pj != 0 {
                    v[i - deg + j] -= &c * ratio(pj);
                }
            }
            v[i] = BigRational::zero();
        }
        v.truncate(deg.max(1));
        v.resize(deg.max(1), BigRational::zero());
        Cyclo { n, coeffs: v }
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Re-express in ℚ(ζ_m); `m` must be a multiple of the current conductor.
    pub fn lift(&self, m: u32) -> Self {
        if m == self.n {
            return self.clone();
        }
        assert!(m.is_multiple_of(self.n), "lift to a non-multiple conductor");
        let step = (m / self.n) as usize;
        let mut full = vec![BigRational::zero(); m as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            full[(j * step) % m as usize] += c;
        }
        Cyclo::reduce_full(m, full)
    }

    fn common(&self, other: &Self) -> (Cyclo, Cyclo) {
        let m = self.n.lcm(&other.n);
        (self.lift(m), other.lift(m))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_one())
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    /// Galois automorphism ζ ↦ ζ^a, `a` coprime to the conductor.
    pub fn galois(&self, a: i64) -> Self {
        let n = self.n as i64;
        let mut full = vec![BigRational::zero(); self.n as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                full[((j as i64) * a).rem_euclid(n) as usize] += c;
            }
        }
        Cyclo::reduce_full(self.n, full)
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Cyclo { n: self.n, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// Multiplicative inverse through the field norm. `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.as_rational() {
            return Some(Cyclo::from_rational(q.recip()));
        }
        let n = i64::from(self.n);
        let mut others = Cyclo::one();
        for a in 2..n {
            if a.gcd(&n) == 1 {
                others = &others * &self.galois(a);
            }
        }
        let norm = (self * &others).as_rational().expect("field norm is rational");
        Some(others.scale(&norm.recip()))
    }

    /// If this is a root of unity, its angle in ℚ/ℤ.
    pub fn as_root_of_unity(&self) -> Option<Phase> {
        let n = i64::from(self.n);
        // roots of unity in ℚ(ζ_n) are ±ζ_n^k; cover them with ζ_{2n}.
        let m = if n % 2 == 0 { n } else { 2 * n };
        let lifted = self.lift(m as u32);
        (0..m).map(|k| Phase::new(k, m)).find(|&p| Cyclo::from_phase(p) == lifted)
    }

    /// Power by a non-negative exponent.
    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Cyclo::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Lexicographic comparison of power-basis coefficients at a common conductor.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        let (a, b) = self.common(other);
        for (x, y) in a.coeffs.iter().zip(b.coeffs.iter()) {
            match x.cmp(y) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    /// Power-basis coefficients rendered as strings, index = exponent of ζ_n.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| alloc::format!("{}", c)).collect()
    }
}

impl Default for Cyclo {
    fn default() -> Self {
        Cyclo::zero()
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclo {}

impl<'a> Add<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &'a Cyclo) -> Cyclo {
        if self.n == rhs.n {
            return Cyclo { n: self.n, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() };
        }
        let (a, b) = self.common(rhs);
        &a + &b
    }
}

impl<'a> Sub<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &'a Cyclo) -> Cyclo {
        self + &(-rhs)
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo { n: self.n, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

impl<'a> Mul<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &'a Cyclo) -> Cyclo {
        if self.n == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.n == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        if self.n != rhs.n {
            let (a, b) = self.common(rhs);
            return &a * &b;
        }
        let mut full = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    full[i + j] += a * b;
                }
            }
        }
        Cyclo::reduce_full(self.n, full)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: Cyclo) -> Cyclo {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: &'a Cyclo) -> Cyclo {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// GAP-style rendering: `E(n)` is exp(2πi/n).
impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { "-" } else { "+" });
            }
            if j == 0 {
                let _ = write!(out, "{}", abs);
            } else {
                if !abs.is_one() {
                    let _ = write!(out, "{}*", abs);
                }
                if j == 1 {
                    let _ = write!(out, "E({})", self.n);
                } else {
                    let _ = write!(out, "E({})^{}", self.n, j);
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(15).len() as u64, euler_phi(15) + 1);
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for n in 2..13u32 {
            let mut s = Cyclo::zero();
            for k in 0..n {
                s = s + Cyclo::root_of_unity(n, i64::from(k));
            }
            assert!(s.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn mixed_conductors_and_inverse() {
        let i = Cyclo::root_of_unity(4, 1);
        let w = Cyclo::root_of_unity(3, 1);
        assert_eq!(&i * &i, Cyclo::from_int(-1));
        let x = &i + &w;
        let inv = x.inverse().unwrap();
        assert!((&x * &inv).is_one());
        assert_eq!(Cyclo::root_of_unity(6, 2), w);
        assert_eq!(w.conj(), Cyclo::root_of_unity(3, 2));
        assert_eq!(Cyclo::root_of_unity(12, 5).as_root_of_unity(), Some(Phase::new(5, 12)));
        assert_eq!(Cyclo::root_of_unity(3, 1).neg().as_root_of_unity(), Some(Phase::new(5, 6)));
        assert_eq!(Cyclo::from_int(2).as_root_of_unity(), None);
    }
}
