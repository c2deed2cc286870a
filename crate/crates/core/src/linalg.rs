//! Exact linear algebra: elimination over a [`Field`], over 𝔽_p, and Smith
//! normal form over ℤ.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::Field;

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let data: Vec<F> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), r * c, "ragged matrix");
        Matrix { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out: Matrix<F> = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).add(&a.mul(b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc = acc.add(&a.mul(x));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale(&self, s: &F) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.mul(s)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, c).inv();
            for j in c..self.cols {
                let v = self.get(r, j).mul(&inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let rv = self.get(r, j);
                    if rv.is_zero() {
                        continue;
                    }
                    let v = self.get(i, j).sub(&f.mul(rv));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Basis of the right null space.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = m.get(r, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, F::one());
        }
        let piv = aug.rref_in_place();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<F>]) -> Self {
        let rows = cols.first().map_or(0, Vec::len);
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }
}

/// Dimension of the span of a list of vectors.
pub fn span_dim<F: Field>(vectors: &[Vec<F>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_rows(vectors.to_vec()).rank()
}

/// Arithmetic and elimination over the prime field 𝔽_p.
pub mod modp {
    use alloc::vec;
    use alloc::vec::Vec;

    pub fn mul(a: u64, b: u64, p: u64) -> u64 {
        ((u128::from(a) * u128::from(b)) % u128::from(p)) as u64
    }

    pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
        let mut r = 1 % p;
        a %= p;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, a, p);
            }
            a = mul(a, a, p);
            e >>= 1;
        }
        r
    }

    pub fn inv(a: u64, p: u64) -> u64 {
        assert!(!a.is_multiple_of(p), "inverse of zero mod p");
        pow(a, p - 2, p)
    }

    pub fn from_i64(a: i64, p: u64) -> u64 {
        a.rem_euclid(p as i64) as u64
    }

    pub fn is_prime(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2;
        while d * d <= n {
            if n.is_multiple_of(d) {
                return false;
            }
            d += 1;
        }
        true
    }

    /// Smallest prime `p > lower` with `p ≡ 1 (mod m)`.
    pub fn prime_congruent_one(m: u64, lower: u64) -> u64 {
        let m = m.max(1);
        let mut p = (lower / m + 1) * m + 1;
        while !is_prime(p) {
            p += m;
        }
        p
    }

    pub fn primitive_root(p: u64) -> u64 {
        let mut factors = Vec::new();
        let mut m = p - 1;
        let mut d = 2;
        while d * d <= m {
            if m.is_multiple_of(d) {
                factors.push(d);
                while m.is_multiple_of(d) {
                    m /= d;
                }
            }
            d += 1;
        }
        if m > 1 {
            factors.push(m);
        }
        (2..p).find(|&g| factors.iter().all(|&q| pow(g, (p - 1) / q, p) != 1)).unwrap_or(1)
    }

    /// A square root of −1; requires p ≡ 1 (mod 4).
    pub fn sqrt_minus_one(p: u64) -> u64 {
        assert_eq!(p % 4, 1);
        pow(primitive_root(p), (p - 1) / 4, p)
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(m: &mut [Vec<u64>], p: u64) -> Vec<usize> {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(piv, r);
            let iv = inv(m[r][c], p);
            for x in m[r][c..].iter_mut() {
                *x = mul(*x, iv, p);
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i == r || row[c] == 0 {
                    continue;
                }
                let f = row[c];
                for j in c..cols {
                    if pivot_row[j] != 0 {
                        row[j] = (row[j] + p - mul(f, pivot_row[j], p)) % p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(m: &[Vec<u64>], p: u64) -> usize {
        let mut c = m.to_vec();
        rref(&mut c, p).len()
    }

    /// Basis of the right null space.
    pub fn kernel(m: &[Vec<u64>], cols: usize, p: u64) -> Vec<Vec<u64>> {
        let mut a = m.to_vec();
        let pivots = rref(&mut a, p);
        let mut is_pivot = vec![false; cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0u64; cols];
                v[free] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = (p - a[r][free]) % p;
                }
                v
            })
            .collect()
    }

    /// Characteristic polynomial det(xI − M), low degree first, by
    /// Faddeev–LeVerrier; needs `p > dim`.
    pub fn char_poly(m: &[Vec<u64>], p: u64) -> Vec<u64> {
        let n = m.len();
        assert!((n as u64) < p, "matrix too large for Faddeev-LeVerrier mod p");
        let mut coeffs = vec![0u64; n + 1];
        coeffs[n] = 1;
        // M_k = M (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k
        let mut mk: Vec<Vec<u64>> = vec![vec![0; n]; n];
        for k in 1..=n {
            let mut prev = mk.clone();
            for i in 0..n {
                prev[i][i] = (prev[i][i] + coeffs[n - k + 1]) % p;
            }
            let mut next = vec![vec![0u64; n]; n];
            for i in 0..n {
                for l in 0..n {
                    let a = m[i][l];
                    if a == 0 {
                        continue;
                    }
                    for j in 0..n {
                        next[i][j] = (next[i][j] + mul(a, prev[l][j], p)) % p;
                    }
                }
            }
            let tr = (0..n).fold(0u64, |acc, i| (acc + next[i][i]) % p);
            coeffs[n - k] = mul((p - tr) % p, inv(k as u64 % p, p), p);
            mk = next;
        }
        coeffs
    }

    pub fn eval_poly(coeffs: &[u64], x: u64, p: u64) -> u64 {
        coeffs.iter().rev().fold(0, |acc, &c| (mul(acc, x, p) + c) % p)
    }
}

/// Result of a Smith normal form computation: `u · a · v = diag`.
#[derive(Clone, Debug)]
pub struct Smith {
    /// Nonzero invariant factors, each dividing the next.
    pub invariants: Vec<BigInt>,
    pub u: Vec<Vec<BigInt>>,
    pub v: Vec<Vec<BigInt>>,
}

/// Integer arithmetic the Smith reduction needs. Machine integers report
/// overflow through `None`.
trait SnfInt: Clone + PartialEq {
    fn nil() -> Self;
    fn unit() -> Self;
    fn is_nil(&self) -> bool;
    fn abs_lt(&self, other: &Self) -> bool;
    fn is_unit(&self) -> bool;
    fn is_neg(&self) -> bool;
    fn neg(&self) -> Option<Self>;
    fn div_floor(&self, other: &Self) -> Self;
    fn divides(&self, other: &Self) -> bool;
    /// `self - q·x`
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl SnfInt for i128 {
    fn nil() -> Self {
        0
    }
    fn unit() -> Self {
        1
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn is_unit(&self) -> bool {
        self.unsigned_abs() == 1
    }
    fn is_neg(&self) -> bool {
        *self < 0
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn div_floor(&self, other: &Self) -> Self {
        Integer::div_floor(self, other)
    }
    fn divides(&self, other: &Self) -> bool {
        other % self == 0
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*x)?)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl SnfInt for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn is_neg(&self) -> bool {
        self.is_negative()
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn div_floor(&self, other: &Self) -> Self {
        Integer::div_floor(self, other)
    }
    fn divides(&self, other: &Self) -> bool {
        Zero::is_zero(&(other % self))
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        Some(self - q * x)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Smith normal form of an integer matrix with unimodular transforms.
pub fn smith_normal_form(a: &[Vec<BigInt>], cols: usize) -> Smith {
    let small: Option<Vec<Vec<i128>>> =
        a.iter().map(|row| row.iter().map(|x| i128::try_from(x).ok()).collect()).collect();
    if let Some(m) = small {
        if let Some(s) = smith_generic(m, cols) {
            return s;
        }
    }
    smith_generic(a.to_vec(), cols).expect("big integers do not overflow")
}

fn identity_matrix<T: SnfInt>(n: usize) -> Vec<Vec<T>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { T::unit() } else { T::nil() }).collect()).collect()
}

// row_b -= q * row_a
fn row_axpy<T: SnfInt>(m: &mut [Vec<T>], a: usize, b: usize, q: &T) -> Option<()> {
    let (src, dst) = if a < b {
        let (lo, hi) = m.split_at_mut(b);
        (&lo[a], &mut hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(a);
        (&hi[0], &mut lo[b])
    };
    for (x, s) in dst.iter_mut().zip(src.iter()) {
        if !s.is_nil() {
            *x = x.sub_mul(q, s)?;
        }
    }
    Some(())
}

// col_b -= q * col_a
fn col_axpy<T: SnfInt>(m: &mut [Vec<T>], a: usize, b: usize, q: &T) -> Option<()> {
    for row in m.iter_mut() {
        if !row[a].is_nil() {
            row[b] = row[b].sub_mul(q, &row[a])?;
        }
    }
    Some(())
}

fn swap_cols<T>(m: &mut [Vec<T>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

fn smith_generic<T: SnfInt>(mut m: Vec<Vec<T>>, cols: usize) -> Option<Smith> {
    let rows = m.len();
    let mut u: Vec<Vec<T>> = identity_matrix(rows);
    let mut v: Vec<Vec<T>> = identity_matrix(cols);
    let mut invariants = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // a unit pivot if there is one, else the smallest entry
        let mut best: Option<(usize, usize)> = None;
        'search: for i in t..rows {
            for j in t..cols {
                if m[i][j].is_nil() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| m[i][j].abs_lt(&m[bi][bj])) {
                    best = Some((i, j));
                    if m[i][j].is_unit() {
                        break 'search;
                    }
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        m.swap(t, bi);
        u.swap(t, bi);
        swap_cols(&mut m, t, bj);
        swap_cols(&mut v, t, bj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if m[i][t].is_nil() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                row_axpy(&mut m, t, i, &q)?;
                row_axpy(&mut u, t, i, &q)?;
                if !m[i][t].is_nil() {
                    m.swap(t, i);
                    u.swap(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if m[t][j].is_nil() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                col_axpy(&mut m, t, j, &q)?;
                col_axpy(&mut v, t, j, &q)?;
                if !m[t][j].is_nil() {
                    swap_cols(&mut m, t, j);
                    swap_cols(&mut v, t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            if m[t][t].is_unit() {
                break;
            }
            let pivot = m[t][t].clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !pivot.divides(&m[i][j])));
            match bad {
                Some(i) => {
                    let minus_one = T::unit().neg()?;
                    row_axpy(&mut m, i, t, &minus_one)?;
                    row_axpy(&mut u, i, t, &minus_one)?;
                }
                None => break,
            }
        }
        if m[t][t].is_neg() {
            for x in m[t].iter_mut() {
                *x = x.neg()?;
            }
            for x in u[t].iter_mut() {
                *x = x.neg()?;
            }
        }
        invariants.push(m[t][t].to_big());
        t += 1;
    }
    let big = |x: Vec<Vec<T>>| x.iter().map(|r| r.iter().map(SnfInt::to_big).collect()).collect();
    Some(Smith { invariants, u: big(u), v: big(v) })
}

/// Solves `a · x ≡ b (mod modulus)` over ℤ; returns a solution with entries in `[0, modulus)`.
pub fn solve_mod(a: &[Vec<BigInt>], cols: usize, b: &[BigInt], modulus: &BigInt) -> Option<Vec<BigInt>> {
    let s = smith_normal_form(a, cols);
    let ub: Vec<BigInt> =
        s.u.iter().map(|row| row.iter().zip(b).fold(BigInt::zero(), |acc, (x, y)| acc + x * y)).collect();
    let mut y = vec![BigInt::zero(); cols];
    for (i, rhs) in ub.iter().enumerate() {
        let rhs = rhs.mod_floor(modulus);
        match s.invariants.get(i) {
            Some(d) => {
                let g = d.gcd(modulus);
                if !(&rhs % &g).is_zero() {
                    return None;
                }
                let m = modulus / &g;
                let dg = (d / &g).mod_floor(&m);
                let inv = mod_inverse(&dg, &m)?;
                y[i] = ((&rhs / &g) * inv).mod_floor(&m);
            }
            None => {
                if !rhs.is_zero() {
                    return None;
                }
            }
        }
    }
    let x =
        s.v.iter()
            .map(|row| row.iter().zip(&y).fold(BigInt::zero(), |acc, (p, q)| acc + p * q).mod_floor(modulus))
            .collect();
    Some(x)
}

/// Order of the image of `(ℤ/m)^cols → (ℤ/m)^rows` given by `a`.
pub fn image_order_mod(a: &[Vec<BigInt>], cols: usize, modulus: &BigInt) -> BigInt {
    smith_normal_form(a, cols).invariants.iter().fold(BigInt::one(), |acc, d| acc * (modulus / d.gcd(modulus)))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    if m.is_one() {
        return Some(BigInt::zero());
    }
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn rational_rank_kernel_inverse() {
        let m = Matrix::from_rows(vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(1), q(0), q(1)]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.apply(&k[0]).iter().all(Field::is_zero));
        let a = Matrix::from_rows(vec![vec![q(2), q(1)], vec![q(1), q(1)]]);
        assert_eq!(a.mul(&a.inverse().unwrap()), Matrix::identity(2));
    }

    #[test]
    fn smith_form_of_small_matrix() {
        let a: Vec<Vec<BigInt>> = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect();
        let s = smith_normal_form(&a, 3);
        let inv: Vec<i64> = s.invariants.iter().map(|d| i64::try_from(d).unwrap()).collect();
        assert_eq!(inv, vec![2, 6, 12]);
    }

    #[test]
    fn congruence_solving() {
        // 2x ≡ 1 mod 4 has no solution; 2x ≡ 2 mod 4 does
        let a = vec![vec![BigInt::from(2)]];
        let m = BigInt::from(4);
        assert!(solve_mod(&a, 1, &[BigInt::from(1)], &m).is_none());
        let x = solve_mod(&a, 1, &[BigInt::from(2)], &m).unwrap();
        assert_eq!((BigInt::from(2) * &x[0]).mod_floor(&m), BigInt::from(2));
    }

    #[test]
    fn modp_charpoly_roots() {
        let p = 13;
        // [[2,1],[0,3]] has char poly (x-2)(x-3) = x^2 - 5x + 6
        let cp = modp::char_poly(&[vec![2, 1], vec![0, 3]], p);
        assert_eq!(cp, vec![6, p - 5, 1]);
        assert_eq!(modp::prime_congruent_one(6, 10), 13);
        let r = modp::sqrt_minus_one(13);
        assert_eq!(modp::mul(r, r, 13), 12);
    }
}
