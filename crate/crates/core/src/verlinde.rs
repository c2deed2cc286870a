//! Modular data of the ω-twisted Drinfeld double of a finite group.
//!
//! Simples are pairs `(a, ρ)`: a conjugacy class representative and an
//! irreducible θ_a-projective representation of its centralizer, where θ_a is
//! the transgression of ω. The character of a simple on `P_g x` (x commuting
//! with g) is computed from the induced module, and
//! `S_XY = (1/|G|) Σ_{gh=hg} conj(ch_X(g,h)) conj(ch_Y(h,g))`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::cochain::{require_cocycle, transgress_unchecked, transgression_value, Cochain};
use crate::error::{Error, Result};
use crate::group::{conjugacy_classes, FiniteGroup, GSet};
use crate::projective::{projective_table_unchecked, ProjectiveCharacterTable};
use crate::scalar::Cyclo;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleSimple {
    /// Canonical (minimal) representative of the conjugacy class.
    pub representative: usize,
    /// Position of the class in `conjugacy_classes` order.
    pub class_index: usize,
    /// Row of the centralizer's projective character table.
    pub projective_index: usize,
    pub degree: u64,
    pub label: String,
}

impl DoubleSimple {
    /// Dimension of the simple module: class size times projective degree.
    pub fn dimension(&self, class_size: usize) -> u64 {
        class_size as u64 * self.degree
    }
}

struct ClassData {
    representative: usize,
    elements: Vec<usize>,
    centralizer: Vec<usize>,
    table: ProjectiveCharacterTable,
}

fn check_omega(omega: &Cochain) -> Result<()> {
    if omega.degree() != 3 {
        return Err(Error::InvalidInput(format!("expected a 3-cocycle, got degree {}", omega.degree())));
    }
    require_cocycle(omega)?;
    if !omega.is_normalized() {
        return Err(Error::InvalidInput("the 3-cocycle must be normalized".into()));
    }
    Ok(())
}

fn class_data(omega: &Cochain) -> Result<Vec<ClassData>> {
    let g = omega.group().clone();
    conjugacy_classes(&g)
        .into_iter()
        .map(|c| {
            let (z, theta) = transgress_unchecked(omega, c.representative);
            Ok(ClassData {
                representative: c.representative,
                elements: c.elements,
                centralizer: z.elements().to_vec(),
                table: projective_table_unchecked(&theta)?,
            })
        })
        .collect()
}

fn simples_of(g: &FiniteGroup, classes: &[ClassData]) -> Vec<DoubleSimple> {
    let mut out = Vec::new();
    for (ci, c) in classes.iter().enumerate() {
        for (pi, &d) in c.table.degrees.iter().enumerate() {
            out.push(DoubleSimple {
                representative: c.representative,
                class_index: ci,
                projective_index: pi,
                degree: d,
                label: format!("[{}]:{}", g.name(c.representative), pi),
            });
        }
    }
    out
}

pub fn double_simples(omega: &Cochain) -> Result<Vec<DoubleSimple>> {
    check_omega(omega)?;
    Ok(simples_of(omega.group(), &class_data(omega)?))
}

/// Rank of the Verlinde ring, which is the number of simples of the double.
pub fn k_theory_rank(omega: &Cochain) -> Result<usize> {
    Ok(double_simples(omega)?.len())
}

/// The twist restricted to a point stabilizer, for a transitive `S = G/H`:
/// the theory with target `G/H` is the theory of `H` with this cocycle.
pub fn reduce_to_stabilizer(set: &GSet, omega: &Cochain) -> Result<Cochain> {
    if set.orbits().len() != 1 {
        return Err(Error::InvalidInput("reduction needs a transitive G-set".into()));
    }
    Ok(omega.restrict(&set.stabilizer(0)))
}

#[derive(Clone, Debug, PartialEq)]
pub struct ModularData {
    pub rank: usize,
    pub simples: Vec<DoubleSimple>,
    pub s: Vec<Vec<Cyclo>>,
    /// Diagonal of T.
    pub t: Vec<Cyclo>,
    /// Σ_X dim(X)², which equals |G|².
    pub global_dimension: BigInt,
}

/// Exact checks of the modular relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularChecks {
    pub symmetric: bool,
    pub unitary: bool,
    /// `(ST)³ = λ S²` with `λ` a root of unity.
    pub st_cubed_proportional: bool,
    /// S² is a permutation matrix of order at most 2 fixing the unit.
    pub charge_conjugation: bool,
    pub t_finite_order: bool,
}

impl ModularChecks {
    pub fn all(&self) -> bool {
        self.symmetric && self.unitary && self.st_cubed_proportional && self.charge_conjugation && self.t_finite_order
    }
}

pub fn modular_data(omega: &Cochain) -> Result<ModularData> {
    check_omega(omega)?;
    let g = omega.group().clone();
    let n = g.order();
    let classes = class_data(omega)?;
    let simples = simples_of(&g, &classes);
    let r = simples.len();

    // transporters c with c·a·c⁻¹ = g for every g in each class
    let mut transporter: Vec<Option<usize>> = vec![None; n];
    for c in &classes {
        for y in 0..n {
            transporter[g.conjugate(y, c.representative)].get_or_insert(y);
        }
        transporter[c.representative] = Some(g.identity());
    }
    let transporter: Vec<usize> = transporter.into_iter().map(|t| t.expect("every element lies in a class")).collect();

    // ch[X][(g,h)] for all commuting pairs with g in X's class
    let mut ch: Vec<BTreeMap<(usize, usize), Cyclo>> = Vec::with_capacity(r);
    for x in &simples {
        let c = &classes[x.class_index];
        let chi = &c.table.characters[x.projective_index];
        let mut values = BTreeMap::new();
        for &gg in &c.elements {
            let cg = transporter[gg];
            let cgi = g.inv(cg);
            for h in 0..n {
                if !g.commute(gg, h) {
                    continue;
                }
                let z = g.mul(cgi, g.mul(h, cg));
                let local = c.centralizer.binary_search(&z).expect("conjugate lies in the centralizer");
                let phase = transgression_value(omega, gg, h, cg) - transgression_value(omega, gg, cg, z);
                values.insert((gg, h), &Cyclo::from_phase(phase) * &chi[local]);
            }
        }
        ch.push(values);
    }

    let inv_order = BigRational::new(BigInt::one(), BigInt::from(n));
    let mut s = vec![vec![Cyclo::zero(); r]; r];
    for a in 0..r {
        for b in a..r {
            let mut acc = Cyclo::zero();
            for (&(gg, h), v) in &ch[a] {
                if let Some(w) = ch[b].get(&(h, gg)) {
                    acc = acc + &(&v.conj() * &w.conj());
                }
            }
            let val = acc.scale(&inv_order);
            s[b][a] = val.clone();
            s[a][b] = val;
        }
    }

    let t = simples
        .iter()
        .map(|x| {
            let c = &classes[x.class_index];
            let chi = &c.table.characters[x.projective_index];
            let local_a = c.centralizer.binary_search(&c.representative).expect("a commutes with itself");
            let local_e = c.centralizer.binary_search(&g.identity()).expect("identity");
            &chi[local_a] * &chi[local_e].inverse().expect("nonzero degree")
        })
        .collect();

    let global_dimension = simples
        .iter()
        .map(|x| {
            let d = BigInt::from(x.dimension(classes[x.class_index].elements.len()));
            &d * &d
        })
        .sum();
    Ok(ModularData { rank: r, simples, s, t, global_dimension })
}

fn mat_mul(a: &[Vec<Cyclo>], b: &[Vec<Cyclo>]) -> Vec<Vec<Cyclo>> {
    let r = a.len();
    let mut out = vec![vec![Cyclo::zero(); r]; r];
    for i in 0..r {
        for k in 0..r {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..r {
                if !b[k][j].is_zero() {
                    out[i][j] = &out[i][j] + &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    out
}

impl ModularData {
    pub fn check(&self) -> ModularChecks {
        let r = self.rank;
        let s = &self.s;
        let symmetric = (0..r).all(|i| (0..r).all(|j| s[i][j] == s[j][i]));
        let s_dagger: Vec<Vec<Cyclo>> = (0..r).map(|i| (0..r).map(|j| s[j][i].conj()).collect()).collect();
        let id = |i: usize, j: usize| if i == j { Cyclo::one() } else { Cyclo::zero() };
        let unitary = mat_mul(s, &s_dagger)
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, v)| *v == id(i, j)));

        let s2 = mat_mul(s, s);
        let conj = self.charge_conjugation_from(&s2);
        let charge_conjugation = conj.as_ref().is_some_and(|c| c[0] == 0 && (0..r).all(|i| c[c[i]] == i));

        let st: Vec<Vec<Cyclo>> = (0..r).map(|i| (0..r).map(|j| &s[i][j] * &self.t[j]).collect()).collect();
        let st3 = mat_mul(&mat_mul(&st, &st), &st);
        let st_cubed_proportional =
            match (0..r).flat_map(|i| (0..r).map(move |j| (i, j))).find(|&(i, j)| !s2[i][j].is_zero()) {
                Some((i, j)) => {
                    let lambda = &st3[i][j] * &s2[i][j].inverse().expect("nonzero");
                    lambda.as_root_of_unity().is_some()
                        && (0..r).all(|a| (0..r).all(|b| st3[a][b] == &lambda * &s2[a][b]))
                }
                None => false,
            };
        let t_finite_order = self.t.iter().all(|v| v.as_root_of_unity().is_some());
        ModularChecks { symmetric, unitary, st_cubed_proportional, charge_conjugation, t_finite_order }
    }

    fn charge_conjugation_from(&self, s2: &[Vec<Cyclo>]) -> Option<Vec<usize>> {
        s2.iter()
            .map(|row| {
                let mut hit = None;
                for (j, v) in row.iter().enumerate() {
                    if v.is_one() && hit.is_none() {
                        hit = Some(j);
                    } else if !v.is_zero() {
                        return None;
                    }
                }
                hit
            })
            .collect()
    }

    /// Charge conjugation `X ↦ X̄` read off from S².
    pub fn charge_conjugation(&self) -> Option<Vec<usize>> {
        self.charge_conjugation_from(&mat_mul(&self.s, &self.s))
    }

    /// Multiplicative order of each T eigenvalue.
    pub fn t_orders(&self) -> Vec<i64> {
        self.t.iter().map(|v| v.as_root_of_unity().map_or(0, |p| p.order())).collect()
    }
}

/// Fusion coefficients `N_ab^c`, all non-negative integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerlindeRing {
    pub rank: usize,
    pub n: Vec<Vec<Vec<u64>>>,
    pub unit: usize,
}

/// Fusion rules from the Verlinde formula `N_ab^c = Σ_x S_ax S_bx conj(S_cx) / S_0x`.
pub fn fusion(m: &ModularData) -> Result<VerlindeRing> {
    if let Some(n) = fusion_integral(m) {
        return Ok(VerlindeRing { rank: m.rank, n: n?, unit: 0 });
    }
    fusion_rational(m)
}

/// `p mod Φ` in place for monic `Φ` of degree `d`, leaving `d` coefficients.
fn reduce_mod_monic(p: &mut Vec<i128>, phi: &[i64]) {
    let d = phi.len() - 1;
    for i in (d..p.len()).rev() {
        let c = p[i];
        if c != 0 {
            for (j, &f) in phi.iter().enumerate() {
                p[i - d + j] -= c * f as i128;
            }
        }
    }
    p.truncate(d);
}

fn poly_mul_acc(acc: &mut [i128], a: &[i128], b: &[i128], scale: i128) {
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let x = x * scale;
        for (j, &y) in b.iter().enumerate() {
            acc[i + j] += x * y;
        }
    }
}

/// The Verlinde sums in `ℤ[ζ_N]` with machine integers. Writing `A = |G|·S`
/// and `S_0x = d_x/|G|`, one has
/// `L·|G|²·N_ab^c = Σ_x (L/d_x)·A_ax·A_bx·conj(A_cx)` with `L = lcm d_x`.
/// Returns `None` when some entry is not integral after scaling or the sizes
/// risk overflow, in which case the rational path takes over.
fn fusion_integral(m: &ModularData) -> Option<Result<Vec<Vec<Vec<u64>>>>> {
    use num_integer::Integer;
    let r = m.rank;
    let order = m.global_dimension.sqrt();
    if &order * &order != m.global_dimension {
        return None;
    }
    let g = order.to_i128().filter(|&g| g <= 4096)?;
    let conductor = m.s.iter().flatten().fold(1u32, |acc, c| acc.lcm(&c.conductor()));
    let phi = crate::scalar::cyclotomic_polynomial(conductor);
    let deg = phi.len() - 1;
    let scale = BigRational::from_integer(order.clone());
    let integral = |c: &Cyclo| -> Option<Vec<i128>> {
        let lifted = c.scale(&scale).lift(conductor);
        let mut out = vec![0i128; deg];
        for (j, q) in lifted.coeffs().iter().enumerate() {
            if !q.is_integer() {
                return None;
            }
            out[j] = q.to_integer().to_i128()?;
        }
        Some(out)
    };
    let a: Vec<Vec<Vec<i128>>> =
        m.s.iter().map(|row| row.iter().map(integral).collect::<Option<_>>()).collect::<Option<_>>()?;
    let ac: Vec<Vec<Vec<i128>>> =
        m.s.iter().map(|row| row.iter().map(|c| integral(&c.conj())).collect::<Option<_>>()).collect::<Option<_>>()?;
    let dims: Vec<i128> = (0..r)
        .map(|x| a[0][x].iter().skip(1).all(|&v| v == 0).then_some(a[0][x][0]).filter(|&d| d > 0))
        .collect::<Option<_>>()?;
    let l = dims.iter().fold(1i128, |acc, d| acc.lcm(d));
    let bound = a.iter().flatten().flatten().map(|v| v.abs()).max().unwrap_or(0);
    // crude overflow guard on Σ_x (L/d_x)·|A|³ with deg² cross terms
    let worst = (bound as f64).powi(3) * (l as f64) * (r as f64) * (deg as f64).powi(2) * 4.0;
    if worst > 1e36 {
        return None;
    }
    let denom = l * g * g;
    let mut n = vec![vec![vec![0u64; r]; r]; r];
    for i in 0..r {
        for j in i..r {
            let w: Vec<Vec<i128>> = (0..r)
                .map(|x| {
                    let mut p = vec![0i128; 2 * deg];
                    poly_mul_acc(&mut p, &a[i][x], &a[j][x], l / dims[x]);
                    reduce_mod_monic(&mut p, &phi);
                    p
                })
                .collect();
            for k in 0..r {
                let mut acc = vec![0i128; 2 * deg];
                for x in 0..r {
                    poly_mul_acc(&mut acc, &w[x], &ac[k][x], 1);
                }
                reduce_mod_monic(&mut acc, &phi);
                let value = acc[0];
                let fail = || Some(Err(Error::NonIntegralFusion { a: i, b: j, c: k }));
                if acc[1..].iter().any(|&v| v != 0) || value < 0 || value % denom != 0 {
                    return fail();
                }
                let v = (value / denom) as u64;
                n[i][j][k] = v;
                n[j][i][k] = v;
            }
        }
    }
    Some(Ok(n))
}

fn fusion_rational(m: &ModularData) -> Result<VerlindeRing> {
    let r = m.rank;
    let s = &m.s;
    let inv0: Vec<Cyclo> = (0..r)
        .map(|x| s[0][x].inverse().ok_or_else(|| Error::InvalidInput(format!("S_0{x} vanishes"))))
        .collect::<Result<_>>()?;
    let sc: Vec<Vec<Cyclo>> = s.iter().map(|row| row.iter().map(Cyclo::conj).collect()).collect();
    let mut n = vec![vec![vec![0u64; r]; r]; r];
    for a in 0..r {
        for b in a..r {
            let w: Vec<Cyclo> = (0..r).map(|x| &(&s[a][x] * &s[b][x]) * &inv0[x]).collect();
            for c in 0..r {
                let v = (0..r).fold(Cyclo::zero(), |acc, x| acc + &(&w[x] * &sc[c][x]));
                let k = v
                    .as_integer()
                    .filter(|k| !k.is_negative())
                    .and_then(|k| k.to_u64())
                    .ok_or(Error::NonIntegralFusion { a, b, c })?;
                n[a][b][c] = k;
                n[b][a][c] = k;
            }
        }
    }
    Ok(VerlindeRing { rank: r, n, unit: 0 })
}

impl VerlindeRing {
    pub fn is_unital(&self) -> bool {
        (0..self.rank).all(|a| (0..self.rank).all(|c| self.n[self.unit][a][c] == u64::from(a == c)))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.rank).all(|a| (0..self.rank).all(|b| self.n[a][b] == self.n[b][a]))
    }

    /// `Σ_m N_ab^m N_mc^d = Σ_m N_bc^m N_am^d`.
    pub fn is_associative(&self) -> bool {
        let r = self.rank;
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    for d in 0..r {
                        let left: u64 = (0..r).map(|m| self.n[a][b][m] * self.n[m][c][d]).sum();
                        let right: u64 = (0..r).map(|m| self.n[b][c][m] * self.n[a][m][d]).sum();
                        if left != right {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Dual object: the unique `b` with `N_ab^0 = 1`.
    pub fn duals(&self) -> Option<Vec<usize>> {
        (0..self.rank)
            .map(|a| {
                let hits: Vec<usize> = (0..self.rank).filter(|&b| self.n[a][b][self.unit] != 0).collect();
                (hits.len() == 1 && self.n[a][hits[0]][self.unit] == 1).then(|| hits[0])
            })
            .collect()
    }

    /// A relabeling `p` with `other.n[p a][p b][p c] = self.n[a][b][c]`, if one exists.
    pub fn isomorphism(&self, other: &VerlindeRing) -> Option<Vec<usize>> {
        if self.rank != other.rank {
            return None;
        }
        let r = self.rank;
        let sig = |ring: &VerlindeRing, a: usize| {
            let mut row: Vec<u64> = (0..r).map(|c| ring.n[a][a][c]).collect();
            row.sort_unstable();
            let total: u64 = (0..r).flat_map(|b| (0..r).map(move |c| (b, c))).map(|(b, c)| ring.n[a][b][c]).sum();
            (row, total)
        };
        let sa: Vec<_> = (0..r).map(|a| sig(self, a)).collect();
        let sb: Vec<_> = (0..r).map(|a| sig(other, a)).collect();
        let mut perm = vec![usize::MAX; r];
        let mut used = vec![false; r];
        perm[self.unit] = other.unit;
        used[other.unit] = true;
        let order: Vec<usize> = (0..r).filter(|&a| a != self.unit).collect();
        if sa[self.unit] != sb[other.unit] {
            return None;
        }
        fn consistent(x: &VerlindeRing, y: &VerlindeRing, perm: &[usize], a: usize) -> bool {
            let placed: Vec<usize> = (0..perm.len()).filter(|&i| perm[i] != usize::MAX).collect();
            placed.iter().all(|&b| {
                placed.iter().all(|&c| {
                    x.n[a][b][c] == y.n[perm[a]][perm[b]][perm[c]]
                        && x.n[b][a][c] == y.n[perm[b]][perm[a]][perm[c]]
                        && x.n[b][c][a] == y.n[perm[b]][perm[c]][perm[a]]
                })
            })
        }
        fn search(
            x: &VerlindeRing,
            y: &VerlindeRing,
            order: &[usize],
            depth: usize,
            perm: &mut Vec<usize>,
            used: &mut Vec<bool>,
            sa: &[(Vec<u64>, u64)],
            sb: &[(Vec<u64>, u64)],
        ) -> bool {
            if depth == order.len() {
                return true;
            }
            let a = order[depth];
            for cand in 0..perm.len() {
                if used[cand] || sa[a] != sb[cand] {
                    continue;
                }
                perm[a] = cand;
                used[cand] = true;
                if consistent(x, y, perm, a) && search(x, y, order, depth + 1, perm, used, sa, sb) {
                    return true;
                }
                perm[a] = usize::MAX;
                used[cand] = false;
            }
            false
        }
        search(self, other, &order, 0, &mut perm, &mut used, &sa, &sb).then_some(perm)
    }
}

/// `Z(Σ_g × S¹) = Σ_x S_0x^{2−2g}`, the dimension of the state space on `Σ_g`.
pub fn z_sigma_times_circle(m: &ModularData, genus: u32) -> Result<Cyclo> {
    let mut total = Cyclo::zero();
    for x in 0..m.rank {
        let s0 = &m.s[0][x];
        let term = if genus == 0 {
            s0.pow(2)
        } else {
            s0.inverse().ok_or_else(|| Error::InvalidInput(format!("S_0{x} vanishes")))?.pow(2 * genus - 2)
        };
        total = total + &term;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::cyclic_3_cocycle;
    use alloc::sync::Arc;

    fn untwisted(g: FiniteGroup) -> Cochain {
        Cochain::zero(Arc::new(g), 3)
    }

    #[test]
    fn ranks() {
        assert_eq!(k_theory_rank(&untwisted(FiniteGroup::cyclic(1))).unwrap(), 1);
        assert_eq!(k_theory_rank(&untwisted(FiniteGroup::symmetric(3))).unwrap(), 8);
        assert_eq!(k_theory_rank(&cyclic_3_cocycle(2, 1)).unwrap(), 4);
        assert_eq!(k_theory_rank(&untwisted(FiniteGroup::cyclic(5))).unwrap(), 25);
    }

    #[test]
    fn integral_and_rational_fusion_agree() {
        for omega in [cyclic_3_cocycle(3, 1), Cochain::zero(Arc::new(FiniteGroup::symmetric(3)), 3)] {
            let m = modular_data(&omega).unwrap();
            let fast = fusion_integral(&m).expect("integral path applies").unwrap();
            assert_eq!(fast, fusion_rational(&m).unwrap().n);
        }
    }

    #[test]
    fn toric_code_and_double_semion() {
        let tc = modular_data(&untwisted(FiniteGroup::cyclic(2))).unwrap();
        let ds = modular_data(&cyclic_3_cocycle(2, 1)).unwrap();
        assert!(tc.check().all());
        assert!(ds.check().all());
        let mut tc_orders = tc.t_orders();
        tc_orders.sort_unstable();
        assert_eq!(tc_orders, vec![1, 1, 1, 2]);
        assert!(ds.t_orders().contains(&4));
        let (ftc, fds) = (fusion(&tc).unwrap(), fusion(&ds).unwrap());
        assert!(ftc.isomorphism(&fds).is_some());
        assert_eq!(z_sigma_times_circle(&tc, 2).unwrap(), Cyclo::from_int(16));
    }

    #[test]
    fn s3_untwisted() {
        let m = modular_data(&untwisted(FiniteGroup::symmetric(3))).unwrap();
        assert!(m.check().all());
        let f = fusion(&m).unwrap();
        assert!(f.is_unital() && f.is_commutative() && f.is_associative());
        assert_eq!(z_sigma_times_circle(&m, 1).unwrap(), Cyclo::from_int(8));
    }

    #[test]
    fn twisted_cyclic_three() {
        for p in 0..3 {
            let m = modular_data(&cyclic_3_cocycle(3, p)).unwrap();
            assert_eq!(m.rank, 9);
            assert!(m.check().all(), "p = {p}");
            assert!(fusion(&m).unwrap().is_associative());
        }
    }
}
