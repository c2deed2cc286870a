//! Finite groups given by multiplication tables, finite G-sets, subgroups and
//! conjugacy classes.
//!
//! Elements are indices `0..n`. Groups built from permutations use the
//! convention `(a·b)(x) = a(b(x))`, so a permutation group acts on the left.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::bounds::Bounds;
use crate::error::{Error, Result};

/// Largest order for which associativity is checked on every triple.
const EXHAUSTIVE_ASSOCIATIVITY: usize = 512;
const SAMPLED_TRIPLES: usize = 200_000;

/// A validated finite group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    identity: usize,
    names: Option<Vec<String>>,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `x·g·x⁻¹`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(x, g), self.inv(x))
    }

    /// `a·b·a⁻¹·b⁻¹`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn pow(&self, g: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(g) } else { g };
        let mut acc = self.identity;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> usize {
        (0..self.n).fold(1, |acc, g| acc.lcm(&self.element_order(g)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, g: usize) -> String {
        match &self.names {
            Some(n) => n[g].clone(),
            None => format!("{g}"),
        }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n {
            return Err(Error::InvalidInput(format!("{} names for a group of order {}", names.len(), self.n)));
        }
        self.names = Some(names);
        Ok(self)
    }

    /// The multiplication table as rows.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|a| (0..self.n).map(|b| self.mul(a, b)).collect()).collect()
    }

    /// Evaluates a word of signed generator indices (`+i` is generator `i-1`,
    /// `-i` its inverse) on given generator images.
    pub fn eval_word(&self, word: &[i64], images: &[usize]) -> usize {
        word.iter().fold(self.identity, |acc, &w| {
            let g = images[(w.unsigned_abs() - 1) as usize];
            self.mul(acc, if w < 0 { self.inv(g) } else { g })
        })
    }

    /// Builds a group from a table already known to satisfy the axioms.
    pub(crate) fn from_table_unchecked(n: usize, table: Vec<u32>) -> Self {
        debug_assert_eq!(table.len(), n * n);
        let identity = (0..n).find(|&e| table[e * n..(e + 1) * n].iter().enumerate().all(|(x, &y)| x == y as usize));
        let identity = identity.expect("table has an identity");
        let inverse = (0..n)
            .map(|a| (0..n).find(|&x| table[a * n + x] as usize == identity).expect("inverse exists") as u32)
            .collect();
        FiniteGroup { n, table, inverse, identity, names: None }
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n * n).map(|i| ((i / n + i % n) % n) as u32).collect();
        Self::from_table_unchecked(n, table)
    }

    /// Dihedral group of order `2m`, as symmetries of an `m`-gon.
    pub fn dihedral(m: usize) -> Self {
        assert!(m >= 1);
        if m <= 2 {
            // the m-gon picture degenerates; use ℤ/2 or ℤ/2×ℤ/2
            return if m == 1 { Self::cyclic(2) } else { Self::direct_product(&Self::cyclic(2), &Self::cyclic(2)) };
        }
        let rot: Vec<usize> = (0..m).map(|i| (i + 1) % m).collect();
        let refl: Vec<usize> = (0..m).map(|i| (m - i) % m).collect();
        group_from_permutations(&[rot, refl], m).expect("dihedral generators").0
    }

    pub fn symmetric(m: usize) -> Self {
        let mut gens = Vec::new();
        if m >= 2 {
            gens.push((0..m).map(|i| (i + 1) % m).collect());
            let mut t: Vec<usize> = (0..m).collect();
            t.swap(0, 1);
            gens.push(t);
        }
        group_from_permutations(&gens, m.max(1)).expect("symmetric generators").0
    }

    pub fn alternating(m: usize) -> Self {
        let gens: Vec<Vec<usize>> = (2..m)
            .map(|k| {
                let mut p: Vec<usize> = (0..m).collect();
                p[0] = 1;
                p[1] = k;
                p[k] = 0;
                p
            })
            .collect();
        group_from_permutations(&gens, m.max(1)).expect("alternating generators").0
    }

    /// Quaternion group of order 8. Element `4s + u` is `(−1)^s · q_u` with
    /// `q = (1, i, j, k)`.
    pub fn quaternion() -> Self {
        // unit products q_a q_b = sign · q_c
        const UNIT: [[(u8, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let table: Vec<Vec<usize>> = (0..8)
            .map(|a| {
                (0..8)
                    .map(|b| {
                        let (s, c) = UNIT[a % 4][b % 4];
                        let sign = (a / 4 + b / 4 + s as usize) % 2;
                        4 * sign + c
                    })
                    .collect()
            })
            .collect();
        let names = ["1", "i", "j", "k", "-1", "-i", "-j", "-k"].iter().map(|s| String::from(*s)).collect();
        make_group(&table).expect("quaternion table").with_names(names).expect("eight names")
    }

    /// `G × H` with element `(g, h)` at index `g·|H| + h`.
    pub fn direct_product(g: &Self, h: &Self) -> Self {
        let (n, m) = (g.n, h.n);
        let nm = n * m;
        let table = (0..nm * nm)
            .map(|i| {
                let (a, b) = (i / nm, i % nm);
                (g.mul(a / m, b / m) * m + h.mul(a % m, b % m)) as u32
            })
            .collect();
        Self::from_table_unchecked(nm, table)
    }
}

/// Validates a multiplication table and locates its identity.
pub fn make_group(table: &[Vec<usize>]) -> Result<FiniteGroup> {
    make_group_seeded(table, 0)
}

/// As [`make_group`]; `seed` drives the associativity sample for orders above 512.
pub fn make_group_seeded(table: &[Vec<usize>], seed: u64) -> Result<FiniteGroup> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NotAGroup { reason: "empty table", witness: vec![] });
    }
    let mut flat = Vec::with_capacity(n * n);
    for (a, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotAGroup { reason: "table is not square", witness: vec![a] });
        }
        let mut seen = vec![false; n];
        for (b, &c) in row.iter().enumerate() {
            if c >= n {
                return Err(Error::NotAGroup { reason: "entry out of range", witness: vec![a, b] });
            }
            if seen[c] {
                return Err(Error::NotAGroup { reason: "row repeats an entry", witness: vec![a, b] });
            }
            seen[c] = true;
            flat.push(c as u32);
        }
    }
    for b in 0..n {
        let mut seen = vec![false; n];
        for a in 0..n {
            let c = flat[a * n + b] as usize;
            if seen[c] {
                return Err(Error::NotAGroup { reason: "column repeats an entry", witness: vec![a, b] });
            }
            seen[c] = true;
        }
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|x| flat[e * n + x] as usize == x && flat[x * n + e] as usize == x))
        .ok_or(Error::NotAGroup { reason: "no identity", witness: vec![] })?;
    let assoc = |a: usize, b: usize, c: usize| {
        let ab = flat[a * n + b] as usize;
        let bc = flat[b * n + c] as usize;
        flat[ab * n + c] == flat[a * n + bc]
    };
    if n <= EXHAUSTIVE_ASSOCIATIVITY {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if !assoc(a, b, c) {
                        return Err(Error::NotAGroup { reason: "associativity fails", witness: vec![a, b, c] });
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..SAMPLED_TRIPLES {
            let mut pick = || (rng.next_u64() % n as u64) as usize;
            let (a, b, c) = (pick(), pick(), pick());
            if !assoc(a, b, c) {
                return Err(Error::NotAGroup { reason: "associativity fails", witness: vec![a, b, c] });
            }
        }
    }
    // Latin rows guarantee a unique solution of a·x = e.
    let mut inverse = vec![0u32; n];
    for a in 0..n {
        let x = (0..n).find(|&x| flat[a * n + x] as usize == identity).expect("Latin row contains e");
        inverse[a] = x as u32;
    }
    Ok(FiniteGroup { n, table: flat, inverse, identity, names: None })
}

fn check_permutation(p: &[usize], degree: usize) -> Result<()> {
    if p.len() != degree {
        return Err(Error::NotAPermutation(format!("length {} on {} points", p.len(), degree)));
    }
    let mut seen = vec![false; degree];
    for &x in p {
        if x >= degree || seen[x] {
            return Err(Error::NotAPermutation(format!("{p:?} is not a bijection of 0..{degree}")));
        }
        seen[x] = true;
    }
    Ok(())
}

/// Closes permutations under composition; returns the abstract group with the
/// identity at index 0 together with its defining action.
pub fn group_from_permutations(generators: &[Vec<usize>], degree: usize) -> Result<(FiniteGroup, GSet)> {
    group_from_permutations_bounded(generators, degree, &Bounds::default())
}

pub fn group_from_permutations_bounded(
    generators: &[Vec<usize>],
    degree: usize,
    bounds: &Bounds,
) -> Result<(FiniteGroup, GSet)> {
    for g in generators {
        check_permutation(g, degree)?;
    }
    let compose = |a: &[usize], b: &[usize]| -> Vec<usize> { b.iter().map(|&x| a[x]).collect() };
    let id: Vec<usize> = (0..degree).collect();
    let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut elems: Vec<Vec<usize>> = vec![id.clone()];
    index.insert(id, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in generators {
            let p = compose(g, &elems[i]);
            if !index.contains_key(&p) {
                if elems.len() >= bounds.max_closure {
                    return Err(Error::GroupTooLarge { limit: bounds.max_closure });
                }
                index.insert(p.clone(), elems.len());
                queue.push_back(elems.len());
                elems.push(p);
            }
        }
    }
    let n = elems.len();
    if n > bounds.max_table {
        return Err(Error::SizeExceeded {
            what: "multiplication table",
            needed: (n as u128) * (n as u128),
            limit: (bounds.max_table as u128) * (bounds.max_table as u128),
        });
    }
    let mut table = vec![u32::MAX; n * n];
    for a in 0..n {
        for b in 0..n {
            if table[a * n + b] == u32::MAX {
                table[a * n + b] = index[&compose(&elems[a], &elems[b])] as u32;
            }
        }
    }
    let group = Arc::new(FiniteGroup::from_table_unchecked(n, table));
    let action = elems;
    let gset = GSet { group: group.clone(), size: degree, action };
    Ok((Arc::try_unwrap(group).unwrap_or_else(|g| (*g).clone()), gset))
}

/// A finite left G-set; `action[g][s]` is `g·s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GSet {
    group: Arc<FiniteGroup>,
    size: usize,
    action: Vec<Vec<usize>>,
}

impl GSet {
    pub fn new(group: Arc<FiniteGroup>, action: Vec<Vec<usize>>) -> Result<Self> {
        let n = group.order();
        if action.len() != n {
            return Err(Error::InvalidInput(format!("action has {} rows for a group of order {n}", action.len())));
        }
        let size = action.first().map_or(0, Vec::len);
        for row in &action {
            check_permutation(row, size)?;
        }
        for s in 0..size {
            if action[group.identity()][s] != s {
                return Err(Error::InvalidInput(format!("identity moves point {s}")));
            }
        }
        for g in 0..n {
            for h in 0..n {
                let gh = group.mul(g, h);
                if (0..size).any(|s| action[g][action[h][s]] != action[gh][s]) {
                    return Err(Error::InvalidInput(format!(
                        "action is not compatible with the product at ({g}, {h})"
                    )));
                }
            }
        }
        Ok(GSet { group, size, action })
    }

    /// The one-point G-set.
    pub fn point(group: Arc<FiniteGroup>) -> Self {
        let n = group.order();
        GSet { group, size: 1, action: vec![vec![0]; n] }
    }

    /// G acting on itself by left multiplication.
    pub fn regular(group: Arc<FiniteGroup>) -> Self {
        let n = group.order();
        let action = (0..n).map(|g| (0..n).map(|s| group.mul(g, s)).collect()).collect();
        GSet { group, size: n, action }
    }

    /// Left cosets `G/H`, numbered by their minimal element; returns the set and
    /// one representative per coset.
    pub fn cosets(h: &Subgroup) -> (Self, Vec<usize>) {
        let group = h.parent.clone();
        let n = group.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if coset_of[x] == usize::MAX {
                for &k in &h.elements {
                    coset_of[group.mul(x, k)] = reps.len();
                }
                reps.push(x);
            }
        }
        let action = (0..n).map(|g| reps.iter().map(|&r| coset_of[group.mul(g, r)]).collect()).collect();
        let size = reps.len();
        (GSet { group, size, action }, reps)
    }

    /// Disjoint union, points of `other` shifted by `self.size()`.
    pub fn disjoint_union(&self, other: &GSet) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::InvalidInput("disjoint union over different groups".into()));
        }
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| a.iter().copied().chain(b.iter().map(|&s| s + self.size)).collect())
            .collect();
        Ok(GSet { group: self.group.clone(), size: self.size + other.size, action })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn act(&self, g: usize, s: usize) -> usize {
        self.action[g][s]
    }

    pub fn action_rows(&self) -> &[Vec<usize>] {
        &self.action
    }

    pub fn stabilizer(&self, s: usize) -> Subgroup {
        let elements = (0..self.group.order()).filter(|&g| self.act(g, s) == s).collect();
        Subgroup { parent: self.group.clone(), elements }
    }

    /// Orbits as sorted point lists, ordered by their minimal point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size];
        let mut out = Vec::new();
        for s in 0..self.size {
            if seen[s] {
                continue;
            }
            let orbit: BTreeSet<usize> = (0..self.group.order()).map(|g| self.act(g, s)).collect();
            for &t in &orbit {
                seen[t] = true;
            }
            out.push(orbit.into_iter().collect());
        }
        out
    }

    /// Some `g` with `g·from = to`, if the points share an orbit.
    pub fn transporter(&self, from: usize, to: usize) -> Option<usize> {
        (0..self.group.order()).find(|&g| self.act(g, from) == to)
    }
}

/// A subgroup, stored as the sorted list of its elements in the parent.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    elements: Vec<usize>,
}

impl PartialOrd for FiniteGroup {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FiniteGroup {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        (self.n, &self.table).cmp(&(other.n, &other.table))
    }
}

impl Subgroup {
    /// The subgroup generated by `gens`.
    pub fn generated(parent: &Arc<FiniteGroup>, gens: &[usize]) -> Self {
        let mut set: BTreeSet<usize> = BTreeSet::from([parent.identity()]);
        let mut queue: VecDeque<usize> = VecDeque::from([parent.identity()]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = parent.mul(x, g);
                if set.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        Subgroup { parent: parent.clone(), elements: set.into_iter().collect() }
    }

    pub fn whole(parent: &Arc<FiniteGroup>) -> Self {
        Subgroup { parent: parent.clone(), elements: (0..parent.order()).collect() }
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    /// Position of a parent element in [`Subgroup::elements`].
    pub fn local_index(&self, g: usize) -> Option<usize> {
        self.elements.binary_search(&g).ok()
    }

    /// The subgroup as a group in its own right; local index `i` is parent
    /// element `elements()[i]`.
    pub fn to_group(&self) -> FiniteGroup {
        let m = self.elements.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &self.elements {
            for &b in &self.elements {
                table.push(self.local_index(self.parent.mul(a, b)).expect("subgroup is closed") as u32);
            }
        }
        FiniteGroup::from_table_unchecked(m, table)
    }
}

/// A conjugacy class with its canonical (minimal) representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub elements: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

/// Conjugation orbits, sorted by representative.
pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<ConjugacyClass> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let class: BTreeSet<usize> = (0..n).map(|y| g.conjugate(y, x)).collect();
        for &c in &class {
            seen[c] = true;
        }
        out.push(ConjugacyClass { representative: x, elements: class.into_iter().collect() });
    }
    out
}

/// `class_of[g]` = position of g's class in `classes`.
pub fn class_lookup(classes: &[ConjugacyClass], order: usize) -> Vec<usize> {
    let mut class_of = vec![0; order];
    for (i, c) in classes.iter().enumerate() {
        for &x in &c.elements {
            class_of[x] = i;
        }
    }
    class_of
}

pub fn centralizer(g: &Arc<FiniteGroup>, x: usize) -> Subgroup {
    let elements = (0..g.order()).filter(|&h| g.commute(h, x)).collect();
    Subgroup { parent: g.clone(), elements }
}

/// Every subgroup, sorted by order and then by element list.
pub fn all_subgroups(g: &Arc<FiniteGroup>) -> Vec<Subgroup> {
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut frontier = vec![vec![g.identity()]];
    found.insert(vec![g.identity()]);
    while let Some(h) = frontier.pop() {
        for x in 0..g.order() {
            if h.binary_search(&x).is_ok() {
                continue;
            }
            let mut gens = h.clone();
            gens.push(x);
            let k = Subgroup::generated(g, &gens).elements;
            if found.insert(k.clone()) {
                frontier.push(k);
            }
        }
    }
    let mut subs: Vec<Vec<usize>> = found.into_iter().collect();
    subs.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    subs.into_iter().map(|elements| Subgroup { parent: g.clone(), elements }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_z2_tables() {
        let t = make_group(&[vec![0]]).unwrap();
        assert_eq!((t.order(), t.identity()), (1, 0));
        let z2 = make_group(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(z2.identity(), 0);
        assert_eq!(z2.inv(1), 1);
    }

    #[test]
    fn identity_is_located_anywhere() {
        // ℤ/3 relabelled so that the identity is element 2
        let perm = [1usize, 2, 0];
        let mut table = vec![vec![0; 3]; 3];
        for a in 0..3 {
            for b in 0..3 {
                table[perm[a]][perm[b]] = perm[(a + b) % 3];
            }
        }
        assert_eq!(make_group(&table).unwrap().identity(), 1);
    }

    #[test]
    fn rejects_non_groups() {
        assert!(matches!(make_group(&[vec![0, 0], vec![1, 1]]), Err(Error::NotAGroup { .. })));
        // Latin square with identity 0 that fails associativity
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        match make_group(&t) {
            Err(Error::NotAGroup { reason, witness }) => {
                assert_eq!(reason, "associativity fails");
                assert_eq!(witness.len(), 3);
            }
            other => panic!("expected failure, got {other:?}"),
        }
    }

    #[test]
    fn permutation_closure() {
        let (g, s) = group_from_permutations(&[], 1).unwrap();
        assert_eq!((g.order(), s.size()), (1, 1));
        let (s3, set) = group_from_permutations(&[vec![1, 2, 0], vec![1, 0, 2]], 3).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(set.orbits().len(), 1);
        let (v4, _) = group_from_permutations(&[vec![1, 0, 3, 2], vec![2, 3, 0, 1]], 4).unwrap();
        assert_eq!(v4.order(), 4);
        assert!(matches!(group_from_permutations(&[vec![0, 0]], 2), Err(Error::NotAPermutation(_))));
    }

    #[test]
    fn classes_and_centralizers_of_s3() {
        let s3 = Arc::new(FiniteGroup::symmetric(3));
        let classes = conjugacy_classes(&s3);
        let mut sizes: Vec<usize> = classes.iter().map(ConjugacyClass::size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        for c in &classes {
            let order = s3.element_order(c.representative);
            let expected = match order {
                1 => 6,
                2 => 2,
                _ => 3,
            };
            assert_eq!(centralizer(&s3, c.representative).order(), expected);
        }
    }

    #[test]
    fn standard_groups() {
        assert_eq!(FiniteGroup::dihedral(4).order(), 8);
        assert!(!FiniteGroup::dihedral(4).is_abelian());
        assert_eq!(FiniteGroup::quaternion().exponent(), 4);
        assert_eq!(FiniteGroup::alternating(4).order(), 12);
        assert_eq!(FiniteGroup::symmetric(4).order(), 24);
        let s4 = Arc::new(FiniteGroup::symmetric(4));
        assert_eq!(all_subgroups(&s4).len(), 30);
    }

    #[test]
    fn coset_action() {
        let s3 = Arc::new(FiniteGroup::symmetric(3));
        let t = (0..6).find(|&g| s3.element_order(g) == 2).unwrap();
        let h = Subgroup::generated(&s3, &[t]);
        let (set, reps) = GSet::cosets(&h);
        assert_eq!((set.size(), reps.len()), (3, 3));
        for s in 0..3 {
            assert_eq!(set.stabilizer(s).order(), 2);
        }
    }
}
