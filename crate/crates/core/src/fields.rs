//! Groupoids of flat gauge fields with a section of the associated S-bundle.
//!
//! On a connected manifold with fundamental group π, a field is a
//! homomorphism π → G (given by generator images) together with a point of S
//! fixed by its image. Gauge transformations act by simultaneous conjugation
//! on holonomies and by the action on S.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::bounds::{pow_sat, Bounds};
use crate::error::Result;
use crate::group::{FiniteGroup, GSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FieldOnPoint {
    pub s: usize,
}

/// A point `s` with a holonomy `g` fixing it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FieldOnCircle {
    pub s: usize,
    pub g: usize,
}

/// Holonomies `(a₁, b₁, …, a_g, b_g)` with `∏[aᵢ, bᵢ] = e`, and a point fixed by all of them.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SurfaceField {
    pub genus: u32,
    pub holonomies: Vec<usize>,
    pub s: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PresentedManifoldField {
    pub holonomies: Vec<usize>,
    pub s: usize,
}

/// A finite presentation: relators are words in signed 1-based generator
/// indices, negative meaning inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: usize,
    pub relators: Vec<Vec<i64>>,
}

impl Presentation {
    /// π₁ of the closed oriented surface of the given genus.
    pub fn surface(genus: u32) -> Self {
        let g = genus as i64;
        let rel: Vec<i64> = (0..g).flat_map(|i| [2 * i + 1, 2 * i + 2, -(2 * i + 1), -(2 * i + 2)]).collect();
        Presentation { generators: 2 * genus as usize, relators: if genus == 0 { vec![] } else { vec![rel] } }
    }

    /// ℤ^k.
    pub fn free_abelian(k: usize) -> Self {
        let mut relators = Vec::new();
        for i in 1..=k as i64 {
            for j in i + 1..=k as i64 {
                relators.push(vec![i, j, -i, -j]);
            }
        }
        Presentation { generators: k, relators }
    }

    /// π₁(Σ_g × S¹): the surface group times a central ℤ (last generator).
    pub fn surface_times_circle(genus: u32) -> Self {
        let mut p = Presentation::surface(genus);
        let t = p.generators as i64 + 1;
        for i in 1..t {
            p.relators.push(vec![i, t, -i, -t]);
        }
        p.generators += 1;
        p
    }
}

/// Objects, automorphism groups and isomorphism classes of a field groupoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldGroupoid<O> {
    pub objects: Vec<O>,
    /// Elements of G fixing each object.
    pub automorphisms: Vec<Vec<usize>>,
    /// Isomorphism classes as sorted object lists, ordered by first object.
    pub classes: Vec<Vec<usize>>,
}

impl<O> FieldGroupoid<O> {
    /// Weight `1/|Aut|` of an object.
    pub fn counting_measure(&self, object: usize) -> BigRational {
        BigRational::new(BigInt::from(1), BigInt::from(self.automorphisms[object].len()))
    }

    /// Σ over isomorphism classes of `1/|Aut|`.
    pub fn cardinality(&self) -> BigRational {
        self.classes.iter().fold(BigRational::zero(), |acc, c| acc + self.counting_measure(c[0]))
    }

    pub fn class_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.objects.len()];
        for (i, c) in self.classes.iter().enumerate() {
            for &o in c {
                out[o] = i;
            }
        }
        out
    }
}

/// Builds the groupoid from objects and the gauge action on them.
fn groupoid<O: Ord + Clone>(g: &FiniteGroup, objects: Vec<O>, act: impl Fn(usize, &O) -> O) -> FieldGroupoid<O> {
    let index: BTreeMap<O, usize> = objects.iter().cloned().enumerate().map(|(i, o)| (o, i)).collect();
    let mut class_of = vec![usize::MAX; objects.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut automorphisms = Vec::with_capacity(objects.len());
    for (i, o) in objects.iter().enumerate() {
        let images: Vec<usize> = (0..g.order()).map(|h| index[&act(h, o)]).collect();
        automorphisms.push((0..g.order()).filter(|&h| images[h] == i).collect());
        if class_of[i] == usize::MAX {
            let mut members: Vec<usize> = images.clone();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                class_of[m] = classes.len();
            }
            classes.push(members);
        }
    }
    FieldGroupoid { objects, automorphisms, classes }
}

pub fn fields_on_point(set: &GSet) -> FieldGroupoid<FieldOnPoint> {
    let objects = (0..set.size()).map(|s| FieldOnPoint { s }).collect();
    groupoid(set.group(), objects, |h, o| FieldOnPoint { s: set.act(h, o.s) })
}

/// Objects `(s, g)` with `g·s = s`, ordered by holonomy then point.
pub fn fields_on_circle(set: &GSet) -> FieldGroupoid<FieldOnCircle> {
    let g = set.group();
    let objects = (0..g.order())
        .flat_map(|h| (0..set.size()).filter(move |&s| set.act(h, s) == s).map(move |s| FieldOnCircle { s, g: h }))
        .collect();
    groupoid(g, objects, |h, o| FieldOnCircle { s: set.act(h, o.s), g: g.conjugate(h, o.g) })
}

pub fn fields_on_surface(set: &GSet, genus: u32) -> Result<FieldGroupoid<SurfaceField>> {
    fields_on_surface_bounded(set, genus, &Bounds::default())
}

pub fn fields_on_surface_bounded(set: &GSet, genus: u32, bounds: &Bounds) -> Result<FieldGroupoid<SurfaceField>> {
    let g = set.group();
    let n = g.order() as u128;
    bounds.check_work("surface fields", pow_sat(n, 2 * genus).saturating_mul(set.size() as u128))?;
    let mut tuples = Vec::new();
    let mut cur = Vec::with_capacity(2 * genus as usize);
    surface_tuples(g, genus as usize, g.identity(), &mut cur, &mut tuples);
    let objects =
        attach_points(set, tuples).into_iter().map(|(holonomies, s)| SurfaceField { genus, holonomies, s }).collect();
    Ok(groupoid(g, objects, |h, o| SurfaceField {
        genus,
        holonomies: o.holonomies.iter().map(|&x| g.conjugate(h, x)).collect(),
        s: set.act(h, o.s),
    }))
}

/// Tuples with `prefix · ∏[aᵢ, bᵢ] = e`, in lexicographic order.
fn surface_tuples(g: &FiniteGroup, pairs_left: usize, prefix: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if pairs_left == 0 {
        if prefix == g.identity() {
            out.push(cur.clone());
        }
        return;
    }
    for a in 0..g.order() {
        for b in 0..g.order() {
            cur.push(a);
            cur.push(b);
            surface_tuples(g, pairs_left - 1, g.mul(prefix, g.commutator(a, b)), cur, out);
            cur.pop();
            cur.pop();
        }
    }
}

/// Pairs each holonomy tuple with every point it fixes.
fn attach_points(set: &GSet, tuples: Vec<Vec<usize>>) -> Vec<(Vec<usize>, usize)> {
    let mut out = Vec::new();
    for t in tuples {
        for s in 0..set.size() {
            if t.iter().all(|&x| set.act(x, s) == s) {
                out.push((t.clone(), s));
            }
        }
    }
    out
}

pub fn fields_on_presented_manifold(
    set: &GSet,
    presentation: &Presentation,
) -> Result<FieldGroupoid<PresentedManifoldField>> {
    fields_on_presented_manifold_bounded(set, presentation, &Bounds::default())
}

pub fn fields_on_presented_manifold_bounded(
    set: &GSet,
    presentation: &Presentation,
    bounds: &Bounds,
) -> Result<FieldGroupoid<PresentedManifoldField>> {
    let g = set.group();
    let k = presentation.generators;
    bounds.check_work(
        "presented manifold fields",
        pow_sat(g.order() as u128, k as u32).saturating_mul(set.size() as u128),
    )?;
    let tuples = homomorphisms(g, presentation);
    let objects = attach_points(set, tuples)
        .into_iter()
        .map(|(holonomies, s)| PresentedManifoldField { holonomies, s })
        .collect();
    Ok(groupoid(g, objects, |h, o| PresentedManifoldField {
        holonomies: o.holonomies.iter().map(|&x| g.conjugate(h, x)).collect(),
        s: set.act(h, o.s),
    }))
}

/// All generator images satisfying every relator, in lexicographic order.
pub fn homomorphisms(g: &FiniteGroup, presentation: &Presentation) -> Vec<Vec<usize>> {
    let k = presentation.generators;
    let n = g.order();
    let mut out = Vec::new();
    let mut t = vec![0usize; k];
    loop {
        if presentation.relators.iter().all(|r| g.eval_word(r, &t) == g.identity()) {
            out.push(t.clone());
        }
        // odometer increment, last position fastest
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < n {
                break;
            }
            t[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Subgroup;
    use alloc::sync::Arc;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn point_fields() {
        let s3 = Arc::new(FiniteGroup::symmetric(3));
        let pt = fields_on_point(&GSet::point(s3.clone()));
        assert_eq!((pt.objects.len(), pt.automorphisms[0].len()), (1, 6));
        let reg = fields_on_point(&GSet::regular(s3.clone()));
        assert_eq!((reg.objects.len(), reg.classes.len()), (6, 1));
        let t = (0..6).find(|&g| s3.element_order(g) == 2).unwrap();
        let (cos, _) = GSet::cosets(&Subgroup::generated(&s3, &[t]));
        let f = fields_on_point(&cos);
        assert_eq!(f.objects.len(), 3);
        assert!(f.automorphisms.iter().all(|a| a.len() == 2));
    }

    #[test]
    fn circle_fields_of_s3() {
        let s3 = Arc::new(FiniteGroup::symmetric(3));
        let f = fields_on_circle(&GSet::point(s3));
        assert_eq!(f.classes.len(), 3);
        let mut measures: Vec<BigRational> = f.classes.iter().map(|c| f.counting_measure(c[0])).collect();
        measures.sort();
        assert_eq!(measures, vec![q(1, 6), q(1, 3), q(1, 2)]);
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let free = fields_on_circle(&GSet::regular(z2));
        assert_eq!((free.objects.len(), free.classes.len()), (2, 1));
    }

    #[test]
    fn surface_and_presented_counts() {
        let s3 = Arc::new(FiniteGroup::symmetric(3));
        let pt = GSet::point(s3.clone());
        assert_eq!(fields_on_surface(&pt, 1).unwrap().objects.len(), 18);
        assert_eq!(fields_on_surface(&pt, 0).unwrap().objects.len(), 1);
        assert_eq!(fields_on_presented_manifold(&pt, &Presentation::free_abelian(3)).unwrap().objects.len(), 48);
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let g1 = fields_on_surface(&GSet::point(z2.clone()), 1).unwrap();
        assert_eq!((g1.objects.len(), g1.classes.len()), (4, 4));
        assert_eq!(g1.counting_measure(0), q(1, 2));
        let empty = Presentation { generators: 0, relators: vec![] };
        assert_eq!(fields_on_presented_manifold(&GSet::regular(z2), &empty).unwrap().objects.len(), 2);
    }
}
