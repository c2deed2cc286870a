//! Minkowski Clifford modules and the linear algebra of spin-3/2 fields.
//!
//! A model in dimension `n` consists of matrices `C_μ : S → S*` and
//! `C̃_μ : S* → S` with `C̃_μ C_ν + C̃_ν C_μ = 2 g^{μν}` and the same relation
//! on `S*`, for the metric `diag(+1, −1, …, −1)`. We take `C_0 = C̃_0 = I`
//! and `C̃_j = −C_j = A_j` for mutually anticommuting Pauli strings `A_j`
//! with an even number of `Y` factors, which makes every matrix symmetric.
//! The smallest number of qubits carrying `n − 1` such strings reproduces
//! the dimensions of the minimal real spinors.
//!
//! Ranks over ℚ(i) are certified by a sandwich: the rank modulo a prime
//! `p ≡ 1 (mod 4)` is a lower bound, and exactly verified kernel vectors give
//! the matching upper bound. When the two bounds disagree the rank is
//! recomputed by exact elimination over ℚ(i).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::linalg::{modp, Matrix};
use crate::scalar::{Field, GInt, GaussRat};

/// Largest dimension accepted by [`build_clifford`].
pub const DEFAULT_MAX_DIMENSION: usize = 12;

/// A Pauli string on `m` qubits: digit `q` of the base-4 code is the factor
/// on qubit `q` (0 = I, 1 = X, 2 = Y, 3 = Z), most significant first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pauli {
    qubits: u32,
    code: u64,
}

impl Pauli {
    fn factor(&self, q: u32) -> u64 {
        (self.code >> (2 * (self.qubits - 1 - q))) & 3
    }

    fn symmetric(&self) -> bool {
        (0..self.qubits).filter(|&q| self.factor(q) == 2).count() % 2 == 0
    }

    fn anticommutes(&self, other: &Pauli) -> bool {
        (0..self.qubits)
            .filter(|&q| {
                let (a, b) = (self.factor(q), other.factor(q));
                a != 0 && b != 0 && a != b
            })
            .count()
            % 2
            == 1
    }

    fn tensor(&self, other: &Pauli) -> Pauli {
        Pauli { qubits: self.qubits + other.qubits, code: (self.code << (2 * other.qubits)) | other.code }
    }

    fn matrix(&self) -> Vec<Vec<GInt>> {
        let single = |f: u64| -> [[GInt; 2]; 2] {
            let (z, o) = (GInt::ZERO, GInt::ONE);
            match f {
                0 => [[o, z], [z, o]],
                1 => [[z, o], [o, z]],
                2 => [[z, -GInt::I], [GInt::I, z]],
                _ => [[o, z], [z, -o]],
            }
        };
        let dim = 1usize << self.qubits;
        let mut out = vec![vec![GInt::ZERO; dim]; dim];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, v) in row.iter_mut().enumerate() {
                let mut acc = GInt::ONE;
                for q in 0..self.qubits {
                    let shift = self.qubits - 1 - q;
                    let (rb, cb) = ((r >> shift) & 1, (c >> shift) & 1);
                    acc = acc * single(self.factor(q))[rb][cb];
                    if acc.is_zero() {
                        break;
                    }
                }
                *v = acc;
            }
        }
        out
    }
}

/// `count` mutually anticommuting symmetric Pauli strings on as few qubits
/// as possible; the first such family in lexicographic order.
fn anticommuting_family(count: usize) -> Vec<Pauli> {
    if count > 9 {
        // period eight: tensor the family for count − 8 with a ninth string
        // that anticommutes with eight others on four qubits
        let nine = anticommuting_family(9);
        let (omega, rest) = nine.split_last().expect("nine strings");
        let lower = anticommuting_family(count - 8);
        let id_low = Pauli { qubits: lower[0].qubits, code: 0 };
        let mut out: Vec<Pauli> = lower.iter().map(|a| a.tensor(omega)).collect();
        out.extend(rest.iter().map(|b| id_low.tensor(b)));
        return out;
    }
    for qubits in 0..=4u32 {
        let candidates: Vec<Pauli> =
            (0..1u64 << (2 * qubits)).map(|code| Pauli { qubits, code }).filter(Pauli::symmetric).collect();
        let mut chosen = Vec::new();
        if extend_family(&candidates, 0, count, &mut chosen) {
            return chosen;
        }
    }
    unreachable!("nine anticommuting symmetric strings exist on four qubits")
}

fn extend_family(candidates: &[Pauli], start: usize, count: usize, chosen: &mut Vec<Pauli>) -> bool {
    if chosen.len() == count {
        return true;
    }
    for i in start..candidates.len() {
        let p = candidates[i];
        if chosen.iter().all(|q| p.anticommutes(q)) {
            chosen.push(p);
            if extend_family(candidates, i + 1, count, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

type GMat = Vec<Vec<GInt>>;

fn gmat_mul(a: &GMat, b: &GMat) -> GMat {
    let (r, k, c) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    let mut out = vec![vec![GInt::ZERO; c]; r];
    for i in 0..r {
        for l in 0..k {
            let x = a[i][l];
            if x.is_zero() {
                continue;
            }
            for j in 0..c {
                if !b[l][j].is_zero() {
                    out[i][j] += x * b[l][j];
                }
            }
        }
    }
    out
}

fn gmat_lin(terms: &[(i64, &GMat)], dim: usize) -> GMat {
    let mut out = vec![vec![GInt::ZERO; dim]; dim];
    for &(k, m) in terms {
        if k == 0 {
            continue;
        }
        for i in 0..dim {
            for j in 0..dim {
                if !m[i][j].is_zero() {
                    out[i][j] += m[i][j] * k;
                }
            }
        }
    }
    out
}

fn to_gauss(m: &GMat) -> Vec<Vec<GaussRat>> {
    m.iter().map(|row| row.iter().map(|v| v.to_gauss_rat()).collect()).collect()
}

/// Complexified spinor module of the Lorentz group in dimension `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordModel {
    pub n: usize,
    pub dim_s: usize,
    /// Diagonal of the (inverse) metric: `+1` then `n − 1` entries `−1`.
    pub metric: Vec<i64>,
    /// `gamma[μ] = c(e^μ) : S → S*`.
    pub gamma: Vec<GMat>,
    /// `gamma_tilde[μ] = c(e^μ) : S* → S`.
    pub gamma_tilde: Vec<GMat>,
}

pub fn build_clifford(n: usize) -> Result<CliffordModel> {
    build_clifford_bounded(n, DEFAULT_MAX_DIMENSION)
}

pub fn build_clifford_bounded(n: usize, max_n: usize) -> Result<CliffordModel> {
    if n < 2 || n > max_n {
        return Err(Error::DimensionOutOfRange(n));
    }
    let family = anticommuting_family(n - 1);
    let qubits = family[0].qubits;
    let dim_s = 1usize << qubits;
    let identity = Pauli { qubits, code: 0 }.matrix();
    let mut gamma = vec![identity.clone()];
    let mut gamma_tilde = vec![identity];
    for a in &family {
        let m = a.matrix();
        gamma.push(m.iter().map(|row| row.iter().map(|&v| -v).collect()).collect());
        gamma_tilde.push(m);
    }
    let metric = (0..n).map(|mu| if mu == 0 { 1 } else { -1 }).collect();
    let model = CliffordModel { n, dim_s, metric, gamma, gamma_tilde };
    if !model.check_clifford_relation() || !model.check_symmetric() {
        return Err(Error::RecognitionFailure(format!("Clifford relation fails in dimension {n}")));
    }
    Ok(model)
}

impl CliffordModel {
    /// `C̃_μ C_ν + C̃_ν C_μ = 2 g^{μν}` on `S` and `C_μ C̃_ν + C_ν C̃_μ = 2 g^{μν}`
    /// on `S*`, for all basis pairs.
    pub fn check_clifford_relation(&self) -> bool {
        let d = self.dim_s;
        for mu in 0..self.n {
            for nu in 0..self.n {
                let target = if mu == nu { 2 * self.metric[mu] } else { 0 };
                for (a, b) in [(&self.gamma_tilde, &self.gamma), (&self.gamma, &self.gamma_tilde)] {
                    let x = gmat_mul(&a[mu], &b[nu]);
                    let y = gmat_mul(&a[nu], &b[mu]);
                    for i in 0..d {
                        for j in 0..d {
                            let want = if i == j { GInt::real(target) } else { GInt::ZERO };
                            if x[i][j] + y[i][j] != want {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// The pairings `Γ`, `Γ̃` are symmetric bilinear forms.
    pub fn check_symmetric(&self) -> bool {
        self.gamma
            .iter()
            .chain(&self.gamma_tilde)
            .all(|m| (0..self.dim_s).all(|i| (0..self.dim_s).all(|j| m[i][j] == m[j][i])))
    }

    /// `⟨k, ℓ⟩ = g^{μν} k_μ ℓ_ν`.
    pub fn inner(&self, k: &[i64], l: &[i64]) -> i64 {
        (0..self.n).map(|mu| self.metric[mu] * k[mu] * l[mu]).sum()
    }

    fn c_int(&self, k: &[i64]) -> GMat {
        let terms: Vec<(i64, &GMat)> = k.iter().copied().zip(&self.gamma).collect();
        gmat_lin(&terms, self.dim_s)
    }

    fn c_tilde_int(&self, k: &[i64]) -> GMat {
        let terms: Vec<(i64, &GMat)> = k.iter().copied().zip(&self.gamma_tilde).collect();
        gmat_lin(&terms, self.dim_s)
    }
}

/// A covector with exact rational components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Covector(pub Vec<BigRational>);

impl Covector {
    pub fn from_ints(v: &[i64]) -> Self {
        Covector(v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
    }

    /// `(1, 1, 0, …, 0)`.
    pub fn canonical_null(n: usize) -> Self {
        let mut v = vec![0; n];
        v[0] = 1;
        if n > 1 {
            v[1] = 1;
        }
        Covector::from_ints(&v)
    }

    /// `(1, 0, …, 0)`.
    pub fn canonical_timelike(n: usize) -> Self {
        let mut v = vec![0; n];
        v[0] = 1;
        Covector::from_ints(&v)
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    pub fn norm_squared(&self) -> BigRational {
        self.0
            .iter()
            .enumerate()
            .fold(<BigRational as Zero>::zero(), |acc, (mu, x)| if mu == 0 { acc + x * x } else { acc - x * x })
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_null(&self) -> bool {
        Zero::is_zero(&self.norm_squared())
    }

    /// A positive multiple with coprime integer components; kernels and
    /// ranks of `c(k)`, `A_k` and `B_k` only depend on `k` up to scale.
    pub fn primitive_integral(&self) -> Result<Vec<i64>> {
        let lcm = self.0.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> =
            self.0.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let g = if g.is_zero() { BigInt::one() } else { g };
        ints.iter()
            .map(|x| {
                (x / &g).to_i64().filter(|v| v.abs() < 1 << 20).ok_or_else(|| {
                    Error::InvalidInput("covector components too large for exact rank computation".into())
                })
            })
            .collect()
    }
}

impl core::str::FromStr for Covector {
    type Err = Error;

    /// Comma-separated rationals such as `1,1,0,0` or `1/2,-3,0`.
    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|part| {
                let part = part.trim();
                let (num, den) = part.split_once('/').unwrap_or((part, "1"));
                let parse = |t: &str| {
                    t.trim().parse::<i64>().map_err(|_| Error::InvalidInput(format!("bad component `{part}`")))
                };
                let (num, den) = (parse(num)?, parse(den)?);
                if den == 0 {
                    return Err(Error::InvalidInput(format!("zero denominator in `{part}`")));
                }
                Ok(BigRational::new(BigInt::from(num), BigInt::from(den)))
            })
            .collect::<Result<Vec<_>>>()
            .map(Covector)
    }
}

/// `count` seeded random covectors with small rational components and
/// nonzero norm.
pub fn random_non_null_covectors(n: usize, count: usize, seed: u64) -> Vec<Covector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let v: Vec<BigRational> = (0..n)
            .map(|_| {
                let num = (rng.next_u32() % 41) as i64 - 20;
                let den = (rng.next_u32() % 9) as i64 + 1;
                BigRational::new(BigInt::from(num), BigInt::from(den))
            })
            .collect();
        let k = Covector(v);
        if !k.is_null() {
            out.push(k);
        }
    }
    out
}

/// `c(k) : S → S*` as an exact matrix.
pub fn c_of_k(m: &CliffordModel, k: &Covector) -> Result<Vec<Vec<GaussRat>>> {
    check_dim(m, k)?;
    let mut out = vec![vec![<GaussRat as Field>::zero(); m.dim_s]; m.dim_s];
    for (mu, x) in k.0.iter().enumerate() {
        if Zero::is_zero(x) {
            continue;
        }
        let xr = GaussRat::from_rational(x.clone());
        for i in 0..m.dim_s {
            for j in 0..m.dim_s {
                let g = m.gamma[mu][i][j];
                if !g.is_zero() {
                    out[i][j] = Field::add(&out[i][j], &Field::mul(&xr, &g.to_gauss_rat()));
                }
            }
        }
    }
    Ok(out)
}

fn check_dim(m: &CliffordModel, k: &Covector) -> Result<()> {
    if k.dimension() != m.n {
        return Err(Error::InvalidInput(format!(
            "covector has {} components, model dimension is {}",
            k.dimension(),
            m.n
        )));
    }
    Ok(())
}

/// `ct(k₁∧k₂∧k₃) = c(k₁)c(k₂)c(k₃) − ⟨k₁,k₂⟩c(k₃) + ⟨k₁,k₃⟩c(k₂) − ⟨k₂,k₃⟩c(k₁)`
/// restricted to `S → S*`.
#[cfg(test)]
fn ct(m: &CliffordModel, k1: &[i64], k2: &[i64], k3: &[i64]) -> GMat {
    let triple = gmat_mul(&gmat_mul(&m.c_int(k1), &m.c_tilde_int(k2)), &m.c_int(k3));
    let (c1, c2, c3) = (m.c_int(k1), m.c_int(k2), m.c_int(k3));
    gmat_lin(&[(1, &triple), (-m.inner(k1, k2), &c3), (m.inner(k1, k3), &c2), (-m.inner(k2, k3), &c1)], m.dim_s)
}

#[cfg(test)]
fn basis(n: usize, mu: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[mu] = 1;
    v
}

/// `B_k : V*⊗S → V⊗S*`, `B_k(e^ν⊗s) = Σ_μ e_μ ⊗ ct(e^μ∧k∧e^ν)s`, with row
/// `μ·d + a` and column `ν·d + b`.
fn b_matrix(m: &CliffordModel, k: &[i64]) -> GMat {
    let (n, d) = (m.n, m.dim_s);
    let mut out = vec![vec![GInt::ZERO; n * d]; n * d];
    // for μ ≠ ν the expansion of ct(e^μ∧k∧e^ν) reduces to
    // C_μ C̃(k) C_ν − g^{μμ}k_μ C_ν − g^{νν}k_ν C_μ
    let ctk = m.c_tilde_int(k);
    let right: Vec<GMat> = m.gamma.iter().map(|c| gmat_mul(&ctk, c)).collect();
    for mu in 0..n {
        for nu in 0..n {
            if mu == nu {
                continue;
            }
            let triple = gmat_mul(&m.gamma[mu], &right[nu]);
            let block = gmat_lin(
                &[(1, &triple), (-m.metric[mu] * k[mu], &m.gamma[nu]), (-m.metric[nu] * k[nu], &m.gamma[mu])],
                d,
            );
            for a in 0..d {
                for b in 0..d {
                    out[mu * d + a][nu * d + b] = block[a][b];
                }
            }
        }
    }
    out
}

/// `A_k : S → V*⊗S`, `s ↦ k⊗s`.
fn a_matrix(m: &CliffordModel, k: &[i64]) -> GMat {
    let (n, d) = (m.n, m.dim_s);
    let mut out = vec![vec![GInt::ZERO; d]; n * d];
    for mu in 0..n {
        for a in 0..d {
            out[mu * d + a][a] = GInt::real(k[mu]);
        }
    }
    out
}

const RANK_PRIMES_FROM: u64 = 1 << 31;

fn rank_mod_p(mat: &GMat, p: u64) -> usize {
    let r = modp::sqrt_minus_one(p);
    let mut reduced: Vec<Vec<u64>> = mat.iter().map(|row| row.iter().map(|v| v.reduce_mod(p, r)).collect()).collect();
    echelon_rank(&mut reduced, p)
}

/// Row echelon rank over 𝔽_p for `p < 2³²`, so products fit in a `u64`.
fn echelon_rank(m: &mut [Vec<u64>], p: u64) -> usize {
    debug_assert!(p < 1 << 32);
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(piv, rank);
        let iv = modp::inv(m[rank][c], p);
        let pivot: Vec<u64> = m[rank][c..].iter().map(|&x| x * iv % p).collect();
        for row in m[rank + 1..].iter_mut() {
            let f = row[c];
            if f == 0 {
                continue;
            }
            let nf = p - f;
            for (x, &y) in row[c..].iter_mut().zip(&pivot) {
                if y != 0 {
                    *x = (*x + nf * y) % p;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Image of a Gaussian rational in 𝔽_p, if no denominator vanishes there.
fn gauss_mod_p(x: &GaussRat, p: u64, r: u64) -> Option<u64> {
    let q = |v: &BigRational| -> Option<u64> {
        let pb = BigInt::from(p);
        let den = v.denom().mod_floor(&pb).to_u64()?;
        if den == 0 {
            return None;
        }
        let num = v.numer().mod_floor(&pb).to_u64()?;
        Some(modp::mul(num, modp::inv(den, p), p))
    };
    Some((q(&x.re)? + modp::mul(q(&x.im)?, r, p)) % p)
}

/// Linear independence over ℚ(i), shown by full rank modulo `p`.
fn independent_mod_p(vectors: &[Vec<GaussRat>], p: u64) -> bool {
    let r = modp::sqrt_minus_one(p);
    let reduced: Option<Vec<Vec<u64>>> =
        vectors.iter().map(|v| v.iter().map(|x| gauss_mod_p(x, p, r)).collect()).collect();
    reduced.is_some_and(|mut m| echelon_rank(&mut m, p) == vectors.len())
}

fn exact_rank(mat: &GMat) -> usize {
    if mat.is_empty() {
        return 0;
    }
    Matrix::from_rows(to_gauss(mat)).rank()
}

/// `M·v = 0` exactly for a vector of Gaussian rationals.
fn annihilates(mat: &GMat, v: &[GaussRat]) -> bool {
    // clear denominators, then accumulate exactly in big integers
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.re.denom()).lcm(x.im.denom()));
    let scale = BigRational::from_integer(lcm);
    let ints: Vec<(BigInt, BigInt)> =
        v.iter().map(|x| ((&x.re * &scale).to_integer(), (&x.im * &scale).to_integer())).collect();
    mat.iter().all(|row| {
        let (mut re, mut im) = (BigInt::zero(), BigInt::zero());
        for (m, (a, b)) in row.iter().zip(&ints) {
            if m.is_zero() || (a.is_zero() && b.is_zero()) {
                continue;
            }
            re += a * m.re - b * m.im;
            im += a * m.im + b * m.re;
        }
        re.is_zero() && im.is_zero()
    })
}

/// How a rank was established.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankCertificate {
    pub prime: u64,
    pub rank_mod_p: usize,
    /// Independent kernel vectors checked exactly.
    pub kernel_witnesses: usize,
    /// True when the bounds met; false when exact elimination was needed.
    pub sandwich: bool,
}

/// Rank of `mat`, given candidate kernel vectors of which the first
/// `trusted` are already known to be annihilated; the rest are checked here.
fn certified_rank(mat: &GMat, cols: usize, witnesses: &[Vec<GaussRat>], trusted: usize) -> (usize, RankCertificate) {
    let mut p = RANK_PRIMES_FROM;
    let mut best = 0;
    let mut upper = cols;
    let mut counted = 0;
    for attempt in 0..3 {
        p = modp::prime_congruent_one(4, p);
        if attempt == 0 {
            let verified = witnesses[trusted..].iter().all(|w| annihilates(mat, w));
            if verified && independent_mod_p(witnesses, p) {
                counted = witnesses.len();
                upper = cols - counted;
            }
        }
        best = best.max(rank_mod_p(mat, p));
        if best == upper {
            return (best, RankCertificate { prime: p, rank_mod_p: best, kernel_witnesses: counted, sandwich: true });
        }
    }
    let r = exact_rank(mat);
    (r, RankCertificate { prime: p, rank_mod_p: best, kernel_witnesses: counted, sandwich: false })
}

fn kernel_gauss(mat: &GMat, cols: usize) -> Vec<Vec<GaussRat>> {
    if mat.is_empty() {
        return (0..cols).map(|i| (0..cols).map(|j| gauss_int(i64::from(i == j))).collect()).collect();
    }
    Matrix::from_rows(to_gauss(mat)).kernel()
}

fn gauss_int(x: i64) -> GaussRat {
    GaussRat::from_rational(BigRational::from_integer(BigInt::from(x)))
}

/// Dimensions and verdicts at one covector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberReport {
    pub n: usize,
    pub k: Vec<String>,
    pub norm_squared: String,
    pub null: bool,
    pub dim_s: usize,
    /// `ker c(k) : S → S*`.
    pub dim_s_prime: usize,
    /// `ker c(k) : S* → S`.
    pub dim_s_double_prime: usize,
    /// `k^⊥ / k`, only for null `k`.
    pub dim_v_prime: Option<usize>,
    /// `ker(c' : V'⊗S' → S'')`, only for null `k`.
    pub dim_r_prime: Option<usize>,
    pub rank_a: usize,
    pub rank_b: usize,
    pub dim_ker_b: usize,
    /// `B_k ∘ A_k = 0` exactly.
    pub complex: bool,
    /// For `|k|² ≠ 0`: `ker B_k = im A_k`.
    pub part_i: Option<bool>,
    /// For null `k`: `dim(ker B_k / im A_k) = dim R'_k`.
    pub part_ii: Option<bool>,
    pub certificate: RankCertificate,
}

impl FiberReport {
    pub fn quotient_dim(&self) -> usize {
        self.dim_ker_b - self.rank_a
    }
}

/// A basis of `k^⊥` modulo `k` for null `k`, as integer covectors.
fn transverse_basis(m: &CliffordModel, k: &[i64]) -> Vec<Vec<i64>> {
    let n = m.n;
    // k^⊥ = kernel of ℓ ↦ Σ g^{μμ} k_μ ℓ_μ
    let row: Vec<BigRational> =
        (0..n).map(|mu| BigRational::from_integer(BigInt::from(m.metric[mu] * k[mu]))).collect();
    let perp = Matrix::from_rows(vec![row]).kernel();
    let kq: Vec<BigRational> = k.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect();
    let mut chosen: Vec<Vec<BigRational>> = vec![kq];
    let mut out = Vec::new();
    for v in perp {
        let mut trial = chosen.clone();
        trial.push(v.clone());
        if crate::linalg::span_dim(&trial) == trial.len() {
            chosen = trial;
            let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            out.push(
                v.iter()
                    .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer().to_i64().expect("small"))
                    .collect(),
            );
        }
    }
    out
}

pub fn fiber_report(m: &CliffordModel, k: &Covector) -> Result<FiberReport> {
    check_dim(m, k)?;
    if k.is_zero() {
        return Err(Error::ZeroCovector);
    }
    let (n, d) = (m.n, m.dim_s);
    let kint = k.primitive_integral()?;
    let null = k.is_null();
    let ck = m.c_int(&kint);
    let ctk = m.c_tilde_int(&kint);
    let s_prime = kernel_gauss(&ck, d);
    let dim_s_double_prime = d - exact_rank(&ctk);

    let a = a_matrix(m, &kint);
    let b = b_matrix(m, &kint);
    let complex = gmat_mul(&b, &a).iter().all(|row| row.iter().all(GInt::is_zero));
    // some k_μ ≠ 0, and that block of A_k is k_μ·I
    let rank_a = d;

    // kernel witnesses: the image of A_k, and for null k the lift of R'_k
    let mut witnesses: Vec<Vec<GaussRat>> =
        (0..d).map(|col| a.iter().map(|row| row[col].to_gauss_rat()).collect()).collect();
    let (dim_v_prime, dim_r_prime) = if null {
        let v_prime = transverse_basis(m, &kint);
        // c'(w_i ⊗ s_j) = c(w_i) s_j, columns indexed i·dim S' + j
        let mut cols: Vec<Vec<GaussRat>> = Vec::new();
        for w in &v_prime {
            let cw = to_gauss(&m.c_int(w));
            for s in &s_prime {
                cols.push(
                    (0..d)
                        .map(|r| {
                            (0..d).fold(<GaussRat as Field>::zero(), |acc, c| {
                                Field::add(&acc, &Field::mul(&cw[r][c], &s[c]))
                            })
                        })
                        .collect(),
                );
            }
        }
        let r_prime = if cols.is_empty() { Vec::new() } else { Matrix::from_columns(&cols).kernel() };
        for x in &r_prime {
            let mut lift = vec![<GaussRat as Field>::zero(); n * d];
            for (i, w) in v_prime.iter().enumerate() {
                for (j, s) in s_prime.iter().enumerate() {
                    let coeff = &x[i * s_prime.len() + j];
                    if Field::is_zero(coeff) {
                        continue;
                    }
                    for mu in 0..n {
                        if w[mu] == 0 {
                            continue;
                        }
                        let f = Field::mul(coeff, &gauss_int(w[mu]));
                        for bb in 0..d {
                            lift[mu * d + bb] = Field::add(&lift[mu * d + bb], &Field::mul(&f, &s[bb]));
                        }
                    }
                }
            }
            witnesses.push(lift);
        }
        (Some(v_prime.len()), Some(r_prime.len()))
    } else {
        (None, None)
    };
    let trusted = if complex { d } else { 0 };
    let (rank_b, certificate) = certified_rank(&b, n * d, &witnesses, trusted);
    let dim_ker_b = n * d - rank_b;
    let part_i = (!null).then_some(complex && dim_ker_b == rank_a);
    let part_ii = dim_r_prime.map(|r| complex && dim_ker_b - rank_a == r);
    Ok(FiberReport {
        n,
        k: k.0.iter().map(|x| format!("{x}")).collect(),
        norm_squared: format!("{}", k.norm_squared()),
        null,
        dim_s: d,
        dim_s_prime: s_prime.len(),
        dim_s_double_prime,
        dim_v_prime,
        dim_r_prime,
        rank_a,
        rank_b,
        dim_ker_b,
        complex,
        part_i,
        part_ii,
        certificate,
    })
}

/// The splitting `S* → V*⊗S`, `s ↦ (1/n) Σ_μ g_{μμ} e^μ ⊗ c̃(e^μ)s`, followed
/// by Clifford multiplication `V*⊗S → S*`, is the identity (checked exactly
/// as a matrix identity).
pub fn splitting_check(m: &CliffordModel) -> bool {
    let d = m.dim_s;
    // Σ_μ g_{μμ} C_μ C̃_μ must equal n·I
    let mut sum = vec![vec![GInt::ZERO; d]; d];
    for mu in 0..m.n {
        let prod = gmat_mul(&m.gamma[mu], &m.gamma_tilde[mu]);
        for i in 0..d {
            for j in 0..d {
                sum[i][j] += prod[i][j] * m.metric[mu];
            }
        }
    }
    (0..d).all(|i| (0..d).all(|j| sum[i][j] == if i == j { GInt::real(m.n as i64) } else { GInt::ZERO }))
}

/// Fiber dimensions of the bundles in each quantization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParticleContent {
    /// `R' ⊕ S'' ⊕ S' ⊕ S'`.
    pub first: Vec<(String, usize)>,
    /// `R'` alone.
    pub second: Vec<(String, usize)>,
    /// `R' ⊕ S'`.
    pub third: Vec<(String, usize)>,
}

pub fn particle_content(m: &CliffordModel) -> Result<ParticleContent> {
    let r = fiber_report(m, &Covector::canonical_null(m.n))?;
    let rp = ("R'".to_string(), r.dim_r_prime.unwrap_or(0));
    let sp = ("S'".to_string(), r.dim_s_prime);
    let spp = ("S''".to_string(), r.dim_s_double_prime);
    Ok(ParticleContent {
        first: vec![rp.clone(), spp, sp.clone(), sp.clone()],
        second: vec![rp.clone()],
        third: vec![rp, sp],
    })
}

/// Whether the dual spinor representation is equivalent to `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualType {
    SelfDual,
    DistinctDual,
}

impl DualType {
    /// Distinct duals occur exactly for `n ≡ 2, 6 (mod 8)`.
    pub fn for_dimension(n: usize) -> Self {
        if n % 4 == 2 {
            DualType::DistinctDual
        } else {
            DualType::SelfDual
        }
    }
}

/// A formal combination `T_ℂX + c` of the tangent bundle and trivial bundles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VirtualCoefficient {
    /// Exponent of the pfaffian of Dirac coupled to `T_ℂX` (always 1).
    pub tangent: i64,
    /// Net exponent of the uncoupled Dirac pfaffian.
    pub trivial: i64,
}

impl core::fmt::Display for VirtualCoefficient {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let sign = if self.trivial < 0 { '\u{2212}' } else { '+' };
        write!(f, "T_ℂX {sign} {}", self.trivial.abs())
    }
}

/// Net coefficient of the anomaly line `Pfaff(D_{E⊗T}) ⊗ Pfaff(D_E)^{−2} ⊗ Pfaff(D̃)^{−1}`.
/// With distinct duals `Pfaff(D̃)` is inverse to `Pfaff(D)`; with `S* ≅ S`
/// the two operators agree.
pub fn rs_virtual_coefficient(dual: DualType) -> VirtualCoefficient {
    let from_dual_pfaffian = match dual {
        DualType::SelfDual => -1,
        DualType::DistinctDual => 1,
    };
    VirtualCoefficient { tangent: 1, trivial: -2 + from_dual_pfaffian }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spinor_dimensions() {
        let dims: Vec<usize> = (2..=12).map(|n| build_clifford(n).unwrap().dim_s).collect();
        assert_eq!(dims, vec![1, 2, 4, 8, 8, 16, 16, 16, 16, 32, 64]);
        assert_eq!(build_clifford(1), Err(Error::DimensionOutOfRange(1)));
        assert_eq!(build_clifford(13), Err(Error::DimensionOutOfRange(13)));
    }

    #[test]
    fn null_covector_in_four_dimensions() {
        let m = build_clifford(4).unwrap();
        let r = fiber_report(&m, &Covector::canonical_null(4)).unwrap();
        assert_eq!((r.dim_s_prime, r.dim_v_prime, r.dim_r_prime), (2, Some(2), Some(2)));
        assert_eq!(r.quotient_dim(), 2);
        assert_eq!(r.part_ii, Some(true));
        assert!(r.certificate.sandwich);
        // the certified rank agrees with exact elimination
        assert_eq!(r.rank_b, exact_rank(&b_matrix(&m, &[1, 1, 0, 0])));
    }

    #[test]
    fn timelike_covector() {
        let m = build_clifford(4).unwrap();
        let r = fiber_report(&m, &Covector::canonical_timelike(4)).unwrap();
        assert_eq!((r.dim_ker_b, r.rank_a), (4, 4));
        assert_eq!(r.part_i, Some(true));
        assert_eq!(fiber_report(&m, &Covector::from_ints(&[0; 4])), Err(Error::ZeroCovector));
    }

    #[test]
    fn two_dimensional_exception() {
        let m = build_clifford(2).unwrap();
        let r = fiber_report(&m, &Covector::canonical_null(2)).unwrap();
        assert_eq!(r.dim_s_prime, 1);
    }

    #[test]
    fn ct_is_alternating() {
        let m = build_clifford(5).unwrap();
        let k = [2, 1, 0, -1, 3];
        for mu in 0..5 {
            for nu in 0..5 {
                let x = ct(&m, &basis(5, mu), &k, &basis(5, nu));
                let y = ct(&m, &basis(5, nu), &k, &basis(5, mu));
                assert!(x.iter().zip(&y).all(|(a, b)| a.iter().zip(b).all(|(p, q)| *p == -*q)));
            }
        }
    }

    #[test]
    fn b_blocks_expand_ct() {
        let m = build_clifford(6).unwrap();
        let k = [1, -2, 0, 3, 1, 1];
        let b = b_matrix(&m, &k);
        let d = m.dim_s;
        for mu in 0..6 {
            for nu in 0..6 {
                let block =
                    if mu == nu { vec![vec![GInt::ZERO; d]; d] } else { ct(&m, &basis(6, mu), &k, &basis(6, nu)) };
                for i in 0..d {
                    assert_eq!(&b[mu * d + i][nu * d..(nu + 1) * d], &block[i][..]);
                }
            }
        }
    }

    #[test]
    fn coefficients() {
        assert_eq!(rs_virtual_coefficient(DualType::for_dimension(10)).to_string(), "T_ℂX − 1");
        assert_eq!(rs_virtual_coefficient(DualType::for_dimension(11)).to_string(), "T_ℂX − 3");
    }
}
