//! Bar-resolution cochains with values in ℚ/ℤ, on a group and on an action
//! groupoid `S//G`.
//!
//! A value `q` stands for the angle `2πq`. Cochains are stored sparsely: only
//! nonzero values are kept.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::bounds::{pow_sat, Bounds};
use crate::error::{Error, Result};
use crate::group::{centralizer, FiniteGroup, GSet, Subgroup};
use crate::linalg::{image_order_mod, smith_normal_form, solve_mod};
use crate::scalar::Phase;

/// Mixed-radix index of a tuple of group elements.
fn tuple_index(n: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &g| acc * n + g)
}

fn tuple_from_index(n: usize, k: usize, mut idx: usize) -> Vec<usize> {
    let mut t = vec![0; k];
    for slot in t.iter_mut().rev() {
        *slot = idx % n;
        idx /= n;
    }
    t
}

fn count(n: usize, k: usize) -> usize {
    n.checked_pow(k as u32).expect("cochain index space overflows usize")
}

/// A k-cochain on a group with values in ℚ/ℤ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    group: Arc<FiniteGroup>,
    degree: usize,
    values: BTreeMap<usize, Phase>,
}

impl Cochain {
    pub fn zero(group: Arc<FiniteGroup>, degree: usize) -> Self {
        Cochain { group, degree, values: BTreeMap::new() }
    }

    /// Tabulates `f` over all k-tuples.
    pub fn from_fn(group: Arc<FiniteGroup>, degree: usize, mut f: impl FnMut(&[usize]) -> Phase) -> Self {
        let n = group.order();
        let mut values = BTreeMap::new();
        for idx in 0..count(n, degree) {
            let v = f(&tuple_from_index(n, degree, idx));
            if !v.is_zero() {
                values.insert(idx, v);
            }
        }
        Cochain { group, degree, values }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn get(&self, tuple: &[usize]) -> Phase {
        debug_assert_eq!(tuple.len(), self.degree);
        self.values.get(&tuple_index(self.group.order(), tuple)).copied().unwrap_or(Phase::ZERO)
    }

    pub fn set(&mut self, tuple: &[usize], v: Phase) {
        let idx = tuple_index(self.group.order(), tuple);
        if v.is_zero() {
            self.values.remove(&idx);
        } else {
            self.values.insert(idx, v);
        }
    }

    /// Nonzero entries in tuple order.
    pub fn nonzero(&self) -> impl Iterator<Item = (Vec<usize>, Phase)> + '_ {
        let (n, k) = (self.group.order(), self.degree);
        self.values.iter().map(move |(&i, &v)| (tuple_from_index(n, k, i), v))
    }

    /// All values in tuple order, for tight loops.
    pub fn dense(&self) -> Vec<Phase> {
        let mut out = vec![Phase::ZERO; count(self.group.order(), self.degree)];
        for (&i, &v) in &self.values {
            out[i] = v;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// True when every value with an identity argument vanishes.
    pub fn is_normalized(&self) -> bool {
        let e = self.group.identity();
        self.nonzero().all(|(t, _)| !t.contains(&e))
    }

    /// Least common denominator of the values.
    pub fn denominator(&self) -> i64 {
        self.values.values().fold(1, |acc, v| acc.lcm(&v.denom()))
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (&i, &v) in &other.values {
            let w = out.values.get(&i).copied().unwrap_or(Phase::ZERO) + v;
            if w.is_zero() {
                out.values.remove(&i);
            } else {
                out.values.insert(i, w);
            }
        }
        out
    }

    pub fn neg(&self) -> Cochain {
        Cochain {
            group: self.group.clone(),
            degree: self.degree,
            values: self.values.iter().map(|(&i, &v)| (i, -v)).collect(),
        }
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        self.add(&other.neg())
    }

    /// Pullback along the inclusion of a subgroup; the result lives on
    /// `sub.to_group()`.
    pub fn restrict(&self, sub: &Subgroup) -> Cochain {
        let h = Arc::new(sub.to_group());
        let els = sub.elements().to_vec();
        Cochain::from_fn(h, self.degree, |t| {
            let lifted: Vec<usize> = t.iter().map(|&i| els[i]).collect();
            self.get(&lifted)
        })
    }
}

/// Standard bar-resolution coboundary.
pub fn coboundary(c: &Cochain) -> Cochain {
    let g = c.group.clone();
    let k = c.degree;
    let dense = c.dense();
    let n = g.order();
    let at = |t: &[usize]| dense[tuple_index(n, t)];
    let mut buf = Vec::with_capacity(k);
    Cochain::from_fn(g.clone(), k + 1, |t| {
        let mut acc = at(&t[1..]);
        for i in 0..k {
            buf.clear();
            buf.extend_from_slice(&t[..i]);
            buf.push(g.mul(t[i], t[i + 1]));
            buf.extend_from_slice(&t[i + 2..]);
            let v = at(&buf);
            if i % 2 == 0 {
                acc -= v;
            } else {
                acc += v;
            }
        }
        let last = at(&t[..k]);
        if k.is_multiple_of(2) {
            acc -= last;
        } else {
            acc += last;
        }
        acc
    })
}

/// Outcome of a cocycle test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleCheck {
    pub is_cocycle: bool,
    /// First tuple, in canonical order, where the coboundary is nonzero.
    pub witness: Option<Vec<usize>>,
}

pub fn is_cocycle(c: &Cochain) -> CocycleCheck {
    let d = coboundary(c);
    let witness = d.nonzero().next().map(|(t, _)| t);
    CocycleCheck { is_cocycle: witness.is_none(), witness }
}

pub(crate) fn require_cocycle(c: &Cochain) -> Result<()> {
    match is_cocycle(c).witness {
        None => Ok(()),
        Some(witness) => Err(Error::NotACocycle { witness }),
    }
}

/// `θ_g(x, y) = ω(g,x,y) − ω(x, x⁻¹gx, y) + ω(x, y, (xy)⁻¹g(xy))`, defined for
/// all `x, y`; on the centralizer of `g` this is the transgressed 2-cocycle.
pub fn transgression_value(omega: &Cochain, g: usize, x: usize, y: usize) -> Phase {
    let grp = &omega.group;
    let xi = grp.inv(x);
    let xy = grp.mul(x, y);
    let gx = grp.conjugate(xi, g);
    let gxy = grp.conjugate(grp.inv(xy), g);
    omega.get(&[g, x, y]) - omega.get(&[x, gx, y]) + omega.get(&[x, y, gxy])
}

/// The transgressed 2-cocycle on the centralizer of `g`, which is returned
/// alongside (the cocycle lives on `centralizer.to_group()`).
pub fn transgress(omega: &Cochain, g: usize) -> Result<(Subgroup, Cochain)> {
    if omega.degree != 3 {
        return Err(Error::InvalidInput(format!("transgression needs a 3-cochain, got degree {}", omega.degree)));
    }
    require_cocycle(omega)?;
    Ok(transgress_unchecked(omega, g))
}

pub(crate) fn transgress_unchecked(omega: &Cochain, g: usize) -> (Subgroup, Cochain) {
    let z = centralizer(&omega.group, g);
    let els = z.elements().to_vec();
    let h = Arc::new(z.to_group());
    let theta = Cochain::from_fn(h, 2, |t| transgression_value(omega, g, els[t[0]], els[t[1]]));
    (z, theta)
}

/// ℤ/n standard 3-cocycle `ω_p(a,b,c) = (p/n²)·a·(b + c − ((b+c) mod n))` on
/// `FiniteGroup::cyclic(n)`.
pub fn cyclic_3_cocycle(n: usize, p: i64) -> Cochain {
    let g = Arc::new(FiniteGroup::cyclic(n));
    let ni = n as i64;
    Cochain::from_fn(g, 3, |t| {
        let (a, b, c) = (t[0] as i64, t[1] as i64, t[2] as i64);
        Phase::new(p * a * (b + c - (b + c) % ni), ni * ni)
    })
}

/// Solves `δμ = c` for μ; `None` if `c` is not a coboundary.
pub fn find_cobounding(c: &Cochain) -> Option<Cochain> {
    let g = c.group.clone();
    let n = g.order();
    let k = c.degree;
    if k == 0 {
        return if c.is_zero() { Some(Cochain::zero(g, 0)) } else { None };
    }
    let modulus = c.denominator() * n as i64;
    let normalized = c.is_normalized();
    let e = g.identity();
    let keep = |t: &[usize]| !normalized || !t.contains(&e);
    let unknowns: Vec<Vec<usize>> =
        (0..count(n, k - 1)).map(|i| tuple_from_index(n, k - 1, i)).filter(|t| keep(t)).collect();
    let col_of: BTreeMap<usize, usize> = unknowns.iter().enumerate().map(|(j, t)| (tuple_index(n, t), j)).collect();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for idx in 0..count(n, k) {
        let t = tuple_from_index(n, k, idx);
        if !keep(&t) {
            continue;
        }
        let mut row = vec![BigInt::zero(); unknowns.len()];
        for (sign, face) in faces(&g, &t) {
            if let Some(&j) = col_of.get(&tuple_index(n, &face)) {
                row[j] += sign;
            }
        }
        rows.push(row);
        rhs.push(BigInt::from(c.get(&t).over(modulus).expect("modulus is a multiple of every denominator")));
    }
    let x = solve_mod(&rows, unknowns.len(), &rhs, &BigInt::from(modulus))?;
    let mut mu = Cochain::zero(g, k - 1);
    for (t, v) in unknowns.iter().zip(x) {
        mu.set(t, Phase::new(v.to_i64().expect("reduced below modulus"), modulus));
    }
    debug_assert_eq!(coboundary(&mu), *c);
    Some(mu)
}

/// Signed faces of a bar-resolution simplex: `δc(t) = Σ sign·c(face)`.
fn faces(g: &FiniteGroup, t: &[usize]) -> Vec<(i64, Vec<usize>)> {
    let k1 = t.len();
    let mut out = Vec::with_capacity(k1 + 1);
    out.push((1, t[1..].to_vec()));
    for i in 0..k1 - 1 {
        let mut f = t[..i].to_vec();
        f.push(g.mul(t[i], t[i + 1]));
        f.extend_from_slice(&t[i + 2..]);
        out.push((if i % 2 == 0 { -1 } else { 1 }, f));
    }
    out.push((if k1.is_multiple_of(2) { 1 } else { -1 }, t[..k1 - 1].to_vec()));
    out
}

/// Order of `H^k(G; ℤ/m)` with representative cocycles generating it.
#[derive(Clone, Debug)]
pub struct CohomologyData {
    pub order: BigInt,
    pub representatives: Vec<Cochain>,
}

/// Integer matrix of δ on normalized cochains of degree k, with its columns
/// (degree-k tuples).
fn normalized_coboundary_matrix(g: &FiniteGroup, k: usize) -> (Vec<Vec<BigInt>>, Vec<Vec<usize>>) {
    let n = g.order();
    let e = g.identity();
    let norm = |d: usize| -> Vec<Vec<usize>> {
        (0..count(n, d)).map(|i| tuple_from_index(n, d, i)).filter(|t| !t.contains(&e)).collect()
    };
    let cols = norm(k);
    let col_of: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(j, t)| (tuple_index(n, t), j)).collect();
    let rows = norm(k + 1)
        .iter()
        .map(|t| {
            let mut row = vec![BigInt::zero(); cols.len()];
            if k > 0 {
                for (sign, face) in faces(g, t) {
                    if let Some(&j) = col_of.get(&tuple_index(n, &face)) {
                        row[j] += sign;
                    }
                }
            }
            row
        })
        .collect();
    (rows, cols)
}

pub fn cohomology_dimension(g: &Arc<FiniteGroup>, k: usize, m: u64) -> Result<CohomologyData> {
    cohomology_dimension_bounded(g, k, m, &Bounds::default())
}

pub fn cohomology_dimension_bounded(g: &Arc<FiniteGroup>, k: usize, m: u64, bounds: &Bounds) -> Result<CohomologyData> {
    let n = g.order() as u128;
    let rows = pow_sat(n.saturating_sub(1), k as u32 + 1);
    let cols = pow_sat(n.saturating_sub(1), k as u32);
    bounds.check_work("cohomology", rows.saturating_mul(cols).saturating_mul(cols.min(rows).max(1)))?;
    let modulus = BigInt::from(m);
    let (dk, cols_k) = normalized_coboundary_matrix(g, k);
    let a = cols_k.len();
    let im_k = image_order_mod(&dk, a, &modulus);
    let (dprev, prev_cols) = if k == 0 { (Vec::new(), Vec::new()) } else { normalized_coboundary_matrix(g, k - 1) };
    let im_prev = if k == 0 { BigInt::one() } else { image_order_mod(&dprev, prev_cols.len(), &modulus) };
    let ker_k = num_traits::pow(modulus.clone(), a) / &im_k;
    let order = &ker_k / &im_prev;

    // kernel generators of δ_k mod m from the Smith form, then greedy selection
    let s = smith_normal_form(&dk, a);
    let mut gens: Vec<Vec<BigInt>> = Vec::new();
    for j in 0..a {
        let scale = match s.invariants.get(j) {
            Some(d) => {
                let q = &modulus / d.gcd(&modulus);
                if q == modulus {
                    continue;
                }
                q
            }
            None => BigInt::one(),
        };
        gens.push(s.v.iter().map(|row| (&row[j] * &scale).mod_floor(&modulus)).collect());
    }
    // columns of the span so far: images of δ_{k−1}, then chosen representatives
    let mut span_cols: Vec<Vec<BigInt>> =
        (0..prev_cols.len()).map(|j| dprev.iter().map(|r| r[j].clone()).collect()).collect();
    let mut representatives = Vec::new();
    let mut reached = BigInt::one();
    for v in gens {
        if reached == order {
            break;
        }
        let in_span = !span_cols.is_empty() && {
            let mat: Vec<Vec<BigInt>> = (0..a).map(|i| span_cols.iter().map(|c| c[i].clone()).collect()).collect();
            solve_mod(&mat, span_cols.len(), &v, &modulus).is_some()
        };
        if in_span || v.iter().all(Zero::is_zero) {
            continue;
        }
        span_cols.push(v.clone());
        let mat: Vec<Vec<BigInt>> = (0..a).map(|i| span_cols.iter().map(|c| c[i].clone()).collect()).collect();
        reached = image_order_mod(&mat, span_cols.len(), &modulus) / &im_prev;
        let mut c = Cochain::zero(g.clone(), k);
        for (t, x) in cols_k.iter().zip(&v) {
            c.set(t, Phase::new(x.to_i64().expect("reduced below modulus"), m as i64));
        }
        representatives.push(c);
    }
    Ok(CohomologyData { order, representatives })
}

/// A k-cochain on the action groupoid `S//G`: values at `(s; g₁,…,g_k)`,
/// where `g_k` acts first on the source point `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantCochain {
    gset: Arc<GSet>,
    degree: usize,
    values: BTreeMap<(usize, usize), Phase>,
}

impl EquivariantCochain {
    pub fn zero(gset: Arc<GSet>, degree: usize) -> Self {
        EquivariantCochain { gset, degree, values: BTreeMap::new() }
    }

    pub fn from_fn(gset: Arc<GSet>, degree: usize, mut f: impl FnMut(usize, &[usize]) -> Phase) -> Self {
        let n = gset.group().order();
        let mut values = BTreeMap::new();
        for s in 0..gset.size() {
            for idx in 0..count(n, degree) {
                let v = f(s, &tuple_from_index(n, degree, idx));
                if !v.is_zero() {
                    values.insert((s, idx), v);
                }
            }
        }
        EquivariantCochain { gset, degree, values }
    }

    /// The same values at every point, from a group cochain.
    pub fn from_group_cochain(gset: Arc<GSet>, c: &Cochain) -> Self {
        let mut values = BTreeMap::new();
        for s in 0..gset.size() {
            for (&i, &v) in &c.values {
                values.insert((s, i), v);
            }
        }
        EquivariantCochain { gset, degree: c.degree, values }
    }

    /// Degree-1 cochain on `G/H` induced by a character of `H` given as a
    /// phase function on the parent group's elements of `H`:
    /// `B(c_i H; g) = χ(h)` where `g·c_i = c_j·h`.
    pub fn from_coset_character(h: &Subgroup, chi: impl Fn(usize) -> Phase) -> (Self, Vec<usize>) {
        let (set, reps) = GSet::cosets(h);
        let group = h.parent().clone();
        let set = Arc::new(set);
        let b = EquivariantCochain::from_fn(set.clone(), 1, |i, t| {
            let g = t[0];
            let j = set.act(g, i);
            let elt = group.mul(group.inv(reps[j]), group.mul(g, reps[i]));
            chi(elt)
        });
        (b, reps)
    }

    pub fn gset(&self) -> &Arc<GSet> {
        &self.gset
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn get(&self, s: usize, tuple: &[usize]) -> Phase {
        let idx = tuple_index(self.gset.group().order(), tuple);
        self.values.get(&(s, idx)).copied().unwrap_or(Phase::ZERO)
    }

    pub fn set(&mut self, s: usize, tuple: &[usize], v: Phase) {
        let idx = tuple_index(self.gset.group().order(), tuple);
        if v.is_zero() {
            self.values.remove(&(s, idx));
        } else {
            self.values.insert((s, idx), v);
        }
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (usize, Vec<usize>, Phase)> + '_ {
        let (n, k) = (self.gset.group().order(), self.degree);
        self.values.iter().map(move |(&(s, i), &v)| (s, tuple_from_index(n, k, i), v))
    }

    /// Values indexed `s·n^k + tuple index`.
    pub fn dense(&self) -> Vec<Phase> {
        let n = self.gset.group().order();
        let per = count(n, self.degree);
        let mut out = vec![Phase::ZERO; per * self.gset.size()];
        for (&(s, i), &v) in &self.values {
            out[s * per + i] = v;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn denominator(&self) -> i64 {
        self.values.values().fold(1, |acc, v| acc.lcm(&v.denom()))
    }

    pub fn is_normalized(&self) -> bool {
        let e = self.gset.group().identity();
        self.nonzero().all(|(_, t, _)| !t.contains(&e))
    }

    pub fn add(&self, other: &EquivariantCochain) -> EquivariantCochain {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (&key, &v) in &other.values {
            let w = out.values.get(&key).copied().unwrap_or(Phase::ZERO) + v;
            if w.is_zero() {
                out.values.remove(&key);
            } else {
                out.values.insert(key, w);
            }
        }
        out
    }
}

/// Coboundary on the action groupoid:
/// `δc(s; g₁..g_{k+1}) = c(s; g₂..) + Σᵢ (−1)^i c(s; ..gᵢg_{i+1}..) + (−1)^{k+1} c(g_{k+1}·s; g₁..g_k)`.
pub fn equivariant_coboundary(c: &EquivariantCochain) -> EquivariantCochain {
    let gs = c.gset.clone();
    let g = gs.group().clone();
    let n = g.order();
    let k = c.degree;
    let per = count(n, k);
    let dense = c.dense();
    let at = |s: usize, t: &[usize]| dense[s * per + tuple_index(n, t)];
    EquivariantCochain::from_fn(gs.clone(), k + 1, |s, t| {
        let mut acc = at(s, &t[1..]);
        let mut buf = Vec::with_capacity(k);
        for i in 0..k {
            buf.clear();
            buf.extend_from_slice(&t[..i]);
            buf.push(g.mul(t[i], t[i + 1]));
            buf.extend_from_slice(&t[i + 2..]);
            let v = at(s, &buf);
            if i % 2 == 0 {
                acc -= v;
            } else {
                acc += v;
            }
        }
        let last = at(gs.act(t[k], s), &t[..k]);
        if k.is_multiple_of(2) {
            acc -= last;
        } else {
            acc += last;
        }
        acc
    })
}

/// Cocycle test on the action groupoid; the witness is `(s, g₁, …)`.
pub fn is_equivariant_cocycle(c: &EquivariantCochain) -> CocycleCheck {
    let d = equivariant_coboundary(c);
    let witness = d.nonzero().next().map(|(s, t, _)| {
        let mut w = vec![s];
        w.extend(t);
        w
    });
    CocycleCheck { is_cocycle: witness.is_none(), witness }
}

pub(crate) fn require_equivariant_cocycle(c: &EquivariantCochain) -> Result<()> {
    match is_equivariant_cocycle(c).witness {
        None => Ok(()),
        Some(witness) => Err(Error::NotACocycle { witness }),
    }
}

/// Pullback of `B` to the stabilizer of `s`: `(h₁..h_k) ↦ B(s; h₁..h_k)`.
/// The cochain lives on `stabilizer.to_group()`.
pub fn restrict_equivariant(b: &EquivariantCochain, s: usize) -> (Subgroup, Cochain) {
    let stab = b.gset.stabilizer(s);
    let els = stab.elements().to_vec();
    let h = Arc::new(stab.to_group());
    let c = Cochain::from_fn(h, b.degree, |t| {
        let lifted: Vec<usize> = t.iter().map(|&i| els[i]).collect();
        b.get(s, &lifted)
    });
    (stab, c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coboundary_squares_to_zero_on_s3() {
        let g = Arc::new(FiniteGroup::symmetric(3));
        for k in 1..=2 {
            let c = Cochain::from_fn(g.clone(), k, |t| Phase::new(t.iter().map(|&x| x as i64 * 7 + 1).product(), 5));
            assert!(coboundary(&coboundary(&c)).is_zero());
        }
    }

    #[test]
    fn cyclic_cocycles_are_closed() {
        for n in 2..=4 {
            for p in 0..n as i64 {
                assert!(is_cocycle(&cyclic_3_cocycle(n, p)).is_cocycle);
            }
        }
    }

    #[test]
    fn small_cohomology_groups() {
        for n in 2..=5 {
            let g = Arc::new(FiniteGroup::cyclic(n));
            let h1 = cohomology_dimension(&g, 1, n as u64).unwrap();
            assert_eq!(h1.order, BigInt::from(n));
        }
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let h3 = cohomology_dimension(&z2, 3, 2).unwrap();
        assert_eq!(h3.order, BigInt::from(2));
        assert_eq!(h3.representatives.len(), 1);
        assert!(is_cocycle(&h3.representatives[0]).is_cocycle);
        let triv = Arc::new(FiniteGroup::cyclic(1));
        assert_eq!(cohomology_dimension(&triv, 2, 3).unwrap().order, BigInt::one());
    }

    #[test]
    fn cobounding_solution() {
        let g = Arc::new(FiniteGroup::cyclic(4));
        let mu = Cochain::from_fn(g.clone(), 1, |t| Phase::new(t[0] as i64 * t[0] as i64, 7));
        let c = coboundary(&mu);
        let found = find_cobounding(&c).unwrap();
        assert_eq!(coboundary(&found), c);
        let omega = cyclic_3_cocycle(2, 1);
        assert!(find_cobounding(&omega).is_none());
    }
}
