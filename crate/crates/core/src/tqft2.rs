//! One- and two-dimensional finite gauge theories.
//!
//! The circle algebra of the 2d theory is the centre of the twisted groupoid
//! algebra of `S//G`: basis `e_(s,g)` for arrows `s → g·s`, with
//! `e_(g·s,h) · e_(s,g) = exp(2πi B(s;h,g)) e_(s,hg)`. Its centre is spanned
//! by sums over orbits of loops `(s,g)`, `g·s = s`, whose automorphisms act
//! trivially on the line; the counit is `ε(x) = Σ_s x(s,e) / |G|`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cochain::{require_equivariant_cocycle, EquivariantCochain};
use crate::error::{Error, Result};
use crate::fields::FieldOnCircle;
use crate::group::{FiniteGroup, GSet};
use crate::linalg::Matrix;
use crate::scalar::{Cyclo, Phase};

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

/// Dimension and basis labels of a state space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSpaceDescr {
    pub dimension: usize,
    pub labels: Vec<String>,
    /// Scalars live in ℚ(ζ_conductor).
    pub conductor: u32,
}

/// Space of invariant sections of the line bundle on `S` defined by a
/// degree-1 cocycle: one dimension for each orbit whose stabilizer acts
/// trivially.
pub fn hilbert_1d(b: &EquivariantCochain) -> Result<HilbertSpaceDescr> {
    check_degree(b, 1)?;
    require_equivariant_cocycle(b)?;
    let set = b.gset();
    let mut labels = Vec::new();
    for orbit in set.orbits() {
        let s = orbit[0];
        if set.stabilizer(s).elements().iter().all(|&h| b.get(s, &[h]).is_zero()) {
            labels.push(format!("orbit of {s}"));
        }
    }
    Ok(HilbertSpaceDescr { dimension: labels.len(), labels, conductor: b.denominator() as u32 })
}

/// The two normalizations of the circle partition function of the 1d theory.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleValues {
    /// Σ over fields on the circle of the holonomy phase times `1/|Aut|`;
    /// equals the dimension of the state space.
    pub measured: Cyclo,
    /// Σ over orbits of Σ_{h ∈ H} χ(h), without the counting measure.
    pub display: Cyclo,
}

pub fn z_circle_1d(b: &EquivariantCochain) -> Result<CircleValues> {
    check_degree(b, 1)?;
    require_equivariant_cocycle(b)?;
    let set = b.gset();
    let n = set.group().order() as i64;
    let mut measured = Cyclo::zero();
    for s in 0..set.size() {
        for &h in set.stabilizer(s).elements() {
            measured = measured + Cyclo::from_phase(b.get(s, &[h])).scale(&rat(1, n));
        }
    }
    let mut display = Cyclo::zero();
    for orbit in set.orbits() {
        let s = orbit[0];
        for &h in set.stabilizer(s).elements() {
            display = display + Cyclo::from_phase(b.get(s, &[h]));
        }
    }
    Ok(CircleValues { measured, display })
}

fn check_degree(b: &EquivariantCochain, k: usize) -> Result<()> {
    if b.degree() != k {
        return Err(Error::InvalidInput(format!("expected a degree-{k} cocycle, got degree {}", b.degree())));
    }
    Ok(())
}

/// Phases of gauge transformations on the lines over loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineBundleData {
    pub objects: Vec<FieldOnCircle>,
    /// `phase[i][h]`: the line over object `i` is carried to the line over
    /// `h·i` with this phase.
    pub phase: Vec<Vec<Phase>>,
    /// Position in `objects` of `h·i`, as `target[i][h]`.
    pub target: Vec<Vec<usize>>,
}

impl LineBundleData {
    /// The character of `Aut(object)` on its line.
    pub fn holonomy_character(&self, i: usize) -> Vec<(usize, Phase)> {
        (0..self.phase[i].len()).filter(|&h| self.target[i][h] == i).map(|h| (h, self.phase[i][h])).collect()
    }
}

/// `φ_h(s,g) = B(s;h,g) + B(h·s; hg, h⁻¹) − B(s; h⁻¹, h)`: conjugating
/// `e_(s,g)` by `u_h = Σ_t e_(t,h)` gives `exp(2πi φ_h) e_(h·s, hgh⁻¹)`.
fn conjugation_phase(b: &EquivariantCochain, g: &FiniteGroup, set: &GSet, h: usize, s: usize, x: usize) -> Phase {
    let hi = g.inv(h);
    b.get(s, &[h, x]) + b.get(set.act(h, s), &[g.mul(h, x), hi]) - b.get(s, &[hi, h])
}

pub fn line_bundle(b: &EquivariantCochain) -> Result<LineBundleData> {
    check_degree(b, 2)?;
    require_equivariant_cocycle(b)?;
    if !b.is_normalized() {
        return Err(Error::InvalidInput("the 2-cocycle must be normalized".into()));
    }
    Ok(line_bundle_unchecked(b))
}

fn line_bundle_unchecked(b: &EquivariantCochain) -> LineBundleData {
    let set = b.gset().clone();
    let g = set.group().clone();
    let objects: Vec<FieldOnCircle> = (0..g.order())
        .flat_map(|x| {
            let set = &set;
            (0..set.size()).filter(move |&s| set.act(x, s) == s).map(move |s| FieldOnCircle { s, g: x })
        })
        .collect();
    let index: BTreeMap<FieldOnCircle, usize> = objects.iter().enumerate().map(|(i, &o)| (o, i)).collect();
    let mut phase = Vec::with_capacity(objects.len());
    let mut target = Vec::with_capacity(objects.len());
    for o in &objects {
        let mut ph = Vec::with_capacity(g.order());
        let mut tg = Vec::with_capacity(g.order());
        for h in 0..g.order() {
            ph.push(conjugation_phase(b, &g, &set, h, o.s, o.g));
            tg.push(index[&FieldOnCircle { s: set.act(h, o.s), g: g.conjugate(h, o.g) }]);
        }
        phase.push(ph);
        target.push(tg);
    }
    LineBundleData { objects, phase, target }
}

/// A commutative Frobenius algebra given by structure constants.
#[derive(Clone, Debug, PartialEq)]
pub struct FrobeniusAlgebra {
    pub dimension: usize,
    /// The representative loop of each basis element.
    pub labels: Vec<FieldOnCircle>,
    /// `structure[i][j][k] = c_ij^k` with `e_i e_j = Σ_k c_ij^k e_k`.
    pub structure: Vec<Vec<Vec<Cyclo>>>,
    pub unit: Vec<Cyclo>,
    pub counit: Vec<Cyclo>,
    /// `pairing[i][j] = ε(e_i e_j)`.
    pub pairing: Vec<Vec<Cyclo>>,
}

/// Results of checking the Frobenius algebra axioms on all basis triples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub commutative: bool,
    pub associative: bool,
    pub unital: bool,
    pub frobenius: bool,
    pub nondegenerate: bool,
}

impl AxiomReport {
    pub fn all(&self) -> bool {
        self.commutative && self.associative && self.unital && self.frobenius && self.nondegenerate
    }
}

impl FrobeniusAlgebra {
    pub fn multiply(&self, x: &[Cyclo], y: &[Cyclo]) -> Vec<Cyclo> {
        let d = self.dimension;
        let mut out = vec![Cyclo::zero(); d];
        for i in 0..d {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for k in 0..d {
                    let c = &self.structure[i][j][k];
                    if !c.is_zero() {
                        out[k] = &out[k] + &(&xy * c);
                    }
                }
            }
        }
        out
    }

    pub fn epsilon(&self, x: &[Cyclo]) -> Cyclo {
        x.iter().zip(&self.counit).fold(Cyclo::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Cyclo> {
        (0..self.dimension).map(|j| if i == j { Cyclo::one() } else { Cyclo::zero() }).collect()
    }

    /// Inverse of the pairing matrix.
    pub fn copairing(&self) -> Result<Vec<Vec<Cyclo>>> {
        if self.dimension == 0 {
            return Ok(Vec::new());
        }
        let inv = Matrix::from_rows(self.pairing.clone()).inverse().ok_or(Error::SingularPairing)?;
        Ok((0..self.dimension).map(|i| inv.row(i).to_vec()).collect())
    }

    /// `Σ_ij η^{ij} e_i e_j`.
    pub fn handle_element(&self) -> Result<Vec<Cyclo>> {
        let eta = self.copairing()?;
        let d = self.dimension;
        let mut h = vec![Cyclo::zero(); d];
        for i in 0..d {
            for j in 0..d {
                if eta[i][j].is_zero() {
                    continue;
                }
                for k in 0..d {
                    let c = &self.structure[i][j][k];
                    if !c.is_zero() {
                        h[k] = &h[k] + &(&eta[i][j] * c);
                    }
                }
            }
        }
        Ok(h)
    }

    pub fn check_axioms(&self) -> AxiomReport {
        let d = self.dimension;
        let c = &self.structure;
        let commutative = (0..d).all(|i| (0..d).all(|j| c[i][j] == c[j][i]));
        let mut associative = true;
        'outer: for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let left = self
                        .multiply(&self.multiply(&self.basis_vector(i), &self.basis_vector(j)), &self.basis_vector(k));
                    let right = self
                        .multiply(&self.basis_vector(i), &self.multiply(&self.basis_vector(j), &self.basis_vector(k)));
                    if left != right {
                        associative = false;
                        break 'outer;
                    }
                }
            }
        }
        let unital = (0..d).all(|i| self.multiply(&self.unit, &self.basis_vector(i)) == self.basis_vector(i));
        let pair = |x: &[Cyclo], y: &[Cyclo]| self.epsilon(&self.multiply(x, y));
        let mut frobenius = true;
        'frob: for i in 0..d {
            for j in 0..d {
                let xy = self.multiply(&self.basis_vector(i), &self.basis_vector(j));
                for k in 0..d {
                    let yz = self.multiply(&self.basis_vector(j), &self.basis_vector(k));
                    if pair(&xy, &self.basis_vector(k)) != pair(&self.basis_vector(i), &yz) {
                        frobenius = false;
                        break 'frob;
                    }
                }
            }
        }
        let nondegenerate = self.copairing().is_ok();
        AxiomReport { commutative, associative, unital, frobenius, nondegenerate }
    }
}

/// The circle algebra of the 2d theory defined by a normalized equivariant 2-cocycle.
pub fn frobenius_algebra(b: &EquivariantCochain) -> Result<FrobeniusAlgebra> {
    check_degree(b, 2)?;
    require_equivariant_cocycle(b)?;
    if !b.is_normalized() {
        return Err(Error::InvalidInput("the 2-cocycle must be normalized".into()));
    }
    let set = b.gset().clone();
    let g = set.group().clone();
    let n = g.order();
    let lines = line_bundle_unchecked(b);
    let nobj = lines.objects.len();

    // orbits of loops; the coefficient of each loop in its orbit's central element
    let mut orbit_of = vec![usize::MAX; nobj];
    let mut coefficient: Vec<Option<Phase>> = vec![None; nobj];
    let mut reps = Vec::new();
    for i in 0..nobj {
        if orbit_of[i] != usize::MAX {
            continue;
        }
        let regular = lines.holonomy_character(i).iter().all(|(_, p)| p.is_zero());
        let idx = reps.len();
        for h in 0..n {
            let t = lines.target[i][h];
            orbit_of[t] = idx;
            if regular {
                coefficient[t] = Some(lines.phase[i][h]);
            }
        }
        reps.push((i, regular));
    }
    let basis: Vec<usize> = reps.iter().filter(|(_, r)| *r).map(|(i, _)| *i).collect();
    let basis_of_orbit: BTreeMap<usize, usize> = basis.iter().enumerate().map(|(pos, &i)| (orbit_of[i], pos)).collect();
    let index: BTreeMap<FieldOnCircle, usize> = lines.objects.iter().enumerate().map(|(i, &o)| (o, i)).collect();
    let d = basis.len();
    let den = b.denominator().max(1);

    // c_ij^k = Σ_{y ∈ Stab(s_k)} z_i(s_k, g_k y⁻¹) z_j(s_k, y) exp(2πi B(s_k; g_k y⁻¹, y))
    let mut counts: Vec<Vec<Vec<Vec<i64>>>> = vec![vec![vec![Vec::new(); d]; d]; d];
    for (k, &rep) in basis.iter().enumerate() {
        let FieldOnCircle { s, g: gk } = lines.objects[rep];
        for y in 0..n {
            if set.act(y, s) != s {
                continue;
            }
            let x = g.mul(gk, g.inv(y));
            let li = index[&FieldOnCircle { s, g: x }];
            let lj = index[&FieldOnCircle { s, g: y }];
            let (Some(pi), Some(pj)) = (coefficient[li], coefficient[lj]) else { continue };
            let (i, j) = (basis_of_orbit[&orbit_of[li]], basis_of_orbit[&orbit_of[lj]]);
            let total = pi + pj + b.get(s, &[x, y]);
            let slot = &mut counts[i][j][k];
            if slot.is_empty() {
                slot.resize(den as usize, 0);
            }
            slot[total.over(den).expect("phases have denominators dividing the cocycle's") as usize] += 1;
        }
    }
    let structure: Vec<Vec<Vec<Cyclo>>> = counts
        .iter()
        .map(|row| {
            row.iter()
                .map(|col| {
                    col.iter()
                        .map(|v| if v.is_empty() { Cyclo::zero() } else { Cyclo::from_exponent_coeffs(den as u32, v) })
                        .collect()
                })
                .collect()
        })
        .collect();

    let mut unit = vec![Cyclo::zero(); d];
    let mut counit = vec![Cyclo::zero(); d];
    for (k, &rep) in basis.iter().enumerate() {
        let o = lines.objects[rep];
        if o.g == g.identity() {
            unit[k] = Cyclo::one();
            counit[k] = Cyclo::from_rational(rat(1, set.stabilizer(o.s).order() as i64));
        }
    }
    let mut alg = FrobeniusAlgebra {
        dimension: d,
        labels: basis.iter().map(|&i| lines.objects[i]).collect(),
        structure,
        unit,
        counit,
        pairing: Vec::new(),
    };
    alg.pairing = (0..d)
        .map(|i| (0..d).map(|j| alg.epsilon(&alg.multiply(&alg.basis_vector(i), &alg.basis_vector(j)))).collect())
        .collect();
    Ok(alg)
}

/// The algebra for `B + δA` predicted from the one for `B`: the basis element
/// at loop `ℓ` is rescaled by `exp(−2πi A(ℓ))`.
pub fn regauge(f: &FrobeniusAlgebra, a: &EquivariantCochain) -> FrobeniusAlgebra {
    let ph: Vec<Phase> = f.labels.iter().map(|l| a.get(l.s, &[l.g])).collect();
    let d = f.dimension;
    let structure = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    (0..d)
                        .map(|k| {
                            let c = &f.structure[i][j][k];
                            if c.is_zero() {
                                c.clone()
                            } else {
                                c * &Cyclo::from_phase(ph[i] + ph[j] - ph[k])
                            }
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let pairing =
        (0..d).map(|i| (0..d).map(|j| &f.pairing[i][j] * &Cyclo::from_phase(ph[i] + ph[j])).collect()).collect();
    FrobeniusAlgebra {
        dimension: d,
        labels: f.labels.clone(),
        structure,
        unit: f.unit.clone(),
        counit: f.counit.clone(),
        pairing,
    }
}

/// `Z(Σ_g) = ε(h^g)` with `h` the handle element.
pub fn z_surface_algebra(f: &FrobeniusAlgebra, genus: u32) -> Result<Cyclo> {
    let h = f.handle_element()?;
    let mut x = f.unit.clone();
    for _ in 0..genus {
        x = f.multiply(&x, &h);
    }
    Ok(f.epsilon(&x))
}

/// Both sides of the gluing law for `Σ_{g₁+g₂}` cut along a circle.
#[derive(Clone, Debug, PartialEq)]
pub struct Gluing {
    pub closed: Cyclo,
    pub glued: Cyclo,
}

impl Gluing {
    pub fn holds(&self) -> bool {
        self.closed == self.glued
    }
}

/// Compares `Z(Σ_{g₁+g₂})` with `Σ_ij η^{ij} ε_i(g₁) ε_j(g₂)`, where
/// `ε_i(g) = ε(h^g e_i)` is the genus-g amplitude with one boundary circle.
pub fn gluing_check(f: &FrobeniusAlgebra, g1: u32, g2: u32) -> Result<Gluing> {
    let h = f.handle_element()?;
    let eta = f.copairing()?;
    let power = |g: u32| {
        let mut x = f.unit.clone();
        for _ in 0..g {
            x = f.multiply(&x, &h);
        }
        x
    };
    let (p1, p2) = (power(g1), power(g2));
    let amp = |p: &[Cyclo]| -> Vec<Cyclo> {
        (0..f.dimension).map(|i| f.epsilon(&f.multiply(p, &f.basis_vector(i)))).collect()
    };
    let (a1, a2) = (amp(&p1), amp(&p2));
    let mut glued = Cyclo::zero();
    for i in 0..f.dimension {
        for j in 0..f.dimension {
            if !eta[i][j].is_zero() {
                glued = glued + &(&eta[i][j] * &(&a1[i] * &a2[j]));
            }
        }
    }
    let closed = z_surface_algebra(f, g1 + g2)?;
    Ok(Gluing { closed, glued })
}

/// Direct sum over fields of `exp(iS)/|Aut|`.
///
/// Untwisted theories use `Σ_s |Hom(π₁Σ_g, Stab s)| / |G|`, counted by a
/// convolution over commutator values. Twisted theories are summed directly
/// on the sphere and the torus; a commuting pair `(a, b)` at `s` has action
/// phase `B(s;a,b) − B(s;b,a)`.
pub fn z_surface_direct(b: &EquivariantCochain, genus: u32) -> Result<Cyclo> {
    check_degree(b, 2)?;
    let set = b.gset().clone();
    let g = set.group().clone();
    let n = g.order();
    if b.is_zero() {
        let mut total = BigInt::zero();
        for s in 0..set.size() {
            total += hom_count_surface(&g, set.stabilizer(s).elements(), genus);
        }
        return Ok(Cyclo::from_rational(BigRational::new(total, BigInt::from(n))));
    }
    require_equivariant_cocycle(b)?;
    match genus {
        0 => Ok(Cyclo::from_rational(rat(set.size() as i64, n as i64))),
        1 => {
            let den = b.denominator();
            let mut counts = vec![0i64; den as usize];
            for s in 0..set.size() {
                let stab = set.stabilizer(s);
                for &x in stab.elements() {
                    for &y in stab.elements() {
                        if g.commute(x, y) {
                            let p = b.get(s, &[x, y]) - b.get(s, &[y, x]);
                            counts[p.over(den).expect("denominator divides") as usize] += 1;
                        }
                    }
                }
            }
            Ok(Cyclo::from_exponent_coeffs(den as u32, &counts).scale(&rat(1, n as i64)))
        }
        _ => Err(Error::UnsupportedTwistedGenus(genus)),
    }
}

/// `|{(a₁,b₁,…): aᵢ,bᵢ ∈ H, ∏[aᵢ,bᵢ] = e}|` for a subgroup given by its elements.
pub fn hom_count_surface(g: &FiniteGroup, h: &[usize], genus: u32) -> BigInt {
    let n = g.order();
    let mut commutators = vec![0u64; n];
    for &a in h {
        for &b in h {
            commutators[g.commutator(a, b)] += 1;
        }
    }
    let mut dist = vec![BigInt::zero(); n];
    dist[g.identity()] = BigInt::one();
    for _ in 0..genus {
        let mut next = vec![BigInt::zero(); n];
        for (x, v) in dist.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            for (c, &k) in commutators.iter().enumerate() {
                if k > 0 {
                    next[g.mul(x, c)] += v * k;
                }
            }
        }
        dist = next;
    }
    dist[g.identity()].clone()
}

/// The untwisted theory on `S`.
pub fn untwisted(set: Arc<GSet>) -> EquivariantCochain {
    EquivariantCochain::zero(set, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Subgroup;

    fn s3_pure() -> EquivariantCochain {
        untwisted(Arc::new(GSet::point(Arc::new(FiniteGroup::symmetric(3)))))
    }

    #[test]
    fn s3_pure_gauge_values() {
        let f = frobenius_algebra(&s3_pure()).unwrap();
        assert_eq!(f.dimension, 3);
        assert!(f.check_axioms().all());
        assert_eq!(z_surface_algebra(&f, 0).unwrap(), Cyclo::from_frac(1, 6));
        assert_eq!(z_surface_algebra(&f, 1).unwrap(), Cyclo::from_int(3));
        assert_eq!(z_surface_algebra(&f, 2).unwrap(), Cyclo::from_int(81));
        assert_eq!(z_surface_direct(&s3_pure(), 2).unwrap(), Cyclo::from_int(81));
        assert!(gluing_check(&f, 1, 1).unwrap().holds());
    }

    #[test]
    fn free_action_gives_trivial_algebra() {
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let f = frobenius_algebra(&untwisted(Arc::new(GSet::regular(z2)))).unwrap();
        assert_eq!(f.dimension, 1);
        assert_eq!(f.unit, vec![Cyclo::one()]);
    }

    #[test]
    fn one_dimensional_theory_on_cosets() {
        let s3 = Arc::new(FiniteGroup::symmetric(3));
        let t = (0..6).find(|&g| s3.element_order(g) == 2).unwrap();
        let h = Subgroup::generated(&s3, &[t]);
        let sign = |x: usize| if x == s3.identity() { Phase::ZERO } else { Phase::new(1, 2) };
        let (b, _) = EquivariantCochain::from_coset_character(&h, sign);
        assert_eq!(hilbert_1d(&b).unwrap().dimension, 0);
        let v = z_circle_1d(&b).unwrap();
        assert!(v.measured.is_zero() && v.display.is_zero());
        let (b0, _) = EquivariantCochain::from_coset_character(&h, |_| Phase::ZERO);
        assert_eq!(hilbert_1d(&b0).unwrap().dimension, 1);
        let v0 = z_circle_1d(&b0).unwrap();
        assert_eq!((v0.measured, v0.display), (Cyclo::one(), Cyclo::from_int(2)));
    }

    #[test]
    fn alternating_twist_on_klein_four() {
        let v4 = Arc::new(FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)));
        let theta =
            crate::cochain::Cochain::from_fn(v4.clone(), 2, |t| Phase::new(((t[0] / 2) * (t[1] % 2)) as i64, 2));
        let b = EquivariantCochain::from_group_cochain(Arc::new(GSet::point(v4)), &theta);
        let f = frobenius_algebra(&b).unwrap();
        assert_eq!(f.dimension, 1);
        assert!(f.check_axioms().all());
        assert_eq!(z_surface_algebra(&f, 1).unwrap(), Cyclo::one());
        assert_eq!(z_surface_direct(&b, 1).unwrap(), Cyclo::one());
        assert_eq!(z_surface_algebra(&f, 2).unwrap(), Cyclo::from_int(4));
    }

    #[test]
    fn coboundary_shift_is_a_regauging() {
        let s3 = Arc::new(FiniteGroup::symmetric(3));
        let t = (0..6).find(|&g| s3.element_order(g) == 2).unwrap();
        let (set, _) = GSet::cosets(&Subgroup::generated(&s3, &[t]));
        let set = Arc::new(set);
        let a = EquivariantCochain::from_fn(set.clone(), 1, |s, x| {
            if x[0] == s3.identity() {
                Phase::ZERO
            } else {
                Phase::new((s + 2 * x[0]) as i64, 6)
            }
        });
        let b = untwisted(set).add(&crate::cochain::equivariant_coboundary(&a));
        let f0 = frobenius_algebra(&untwisted(b.gset().clone())).unwrap();
        let f1 = frobenius_algebra(&b).unwrap();
        assert_eq!(regauge(&f0, &a), f1);
        assert_eq!(z_surface_algebra(&f1, 2).unwrap(), z_surface_direct(&untwisted(b.gset().clone()), 2).unwrap());
    }
}
