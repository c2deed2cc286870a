//! Character tables by the Dixon–Schneider method, carried out entirely over a
//! prime field and lifted to exact cyclotomic values.
//!
//! The prime `p` is chosen with `p ≡ 1 (mod e)` (e the group exponent) and
//! `p > 2√|G|`, so that reduction mod `p` is faithful on character values and
//! degrees can be read off from their squares.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::group::{class_lookup, conjugacy_classes, ConjugacyClass, FiniteGroup};
use crate::linalg::modp;
use crate::scalar::Cyclo;
use num_bigint::BigInt;
use num_rational::BigRational;

/// Irreducible characters of a finite group.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacterTable {
    pub order: usize,
    pub classes: Vec<ConjugacyClass>,
    /// Class index of each group element.
    pub class_of: Vec<usize>,
    /// Rows are irreducibles, columns are classes.
    pub characters: Vec<Vec<Cyclo>>,
    pub degrees: Vec<u64>,
    /// All values lie in ℚ(ζ_conductor).
    pub conductor: u32,
}

impl CharacterTable {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// χ_i(g) for a group element `g`.
    pub fn value(&self, i: usize, g: usize) -> &Cyclo {
        &self.characters[i][self.class_of[g]]
    }

    /// ⟨χ, ψ⟩ = (1/|G|) Σ_g χ(g) conj(ψ(g)) for class functions given per class.
    pub fn inner_product(&self, chi: &[Cyclo], psi: &[Cyclo]) -> Cyclo {
        let mut acc = Cyclo::zero();
        for (j, c) in self.classes.iter().enumerate() {
            acc = acc + (&chi[j] * &psi[j].conj()).scale(&ratio(c.size() as i64, 1));
        }
        acc.scale(&ratio(1, self.order as i64))
    }
}

fn ratio(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

pub fn character_table(g: &FiniteGroup) -> Result<CharacterTable> {
    character_table_bounded(g, &Bounds::default())
}

pub fn character_table_bounded(g: &FiniteGroup, bounds: &Bounds) -> Result<CharacterTable> {
    if g.order() > bounds.max_chartable {
        return Err(Error::SizeExceeded {
            what: "character table",
            needed: g.order() as u128,
            limit: bounds.max_chartable as u128,
        });
    }
    character_table_unbounded(g)
}

pub(crate) fn character_table_unbounded(g: &FiniteGroup) -> Result<CharacterTable> {
    let n = g.order();
    let classes = conjugacy_classes(g);
    let class_of = class_lookup(&classes, n);
    let r = classes.len();
    let e = g.exponent() as u64;
    let id_class = class_of[g.identity()];

    // p ≡ 1 (mod e), p > 2√n, p > r (needed by Faddeev–LeVerrier)
    let mut lower = r as u64;
    while lower * lower <= 4 * n as u64 {
        lower += 1;
    }
    let p = modp::prime_congruent_one(e, lower);

    // class multiplication coefficients: a[j][k][l] = #{x ∈ C_j : x⁻¹z ∈ C_k}, z ∈ C_l
    let mut coeff = vec![vec![vec![0u64; r]; r]; r];
    for (l, cl) in classes.iter().enumerate() {
        let z = cl.representative;
        for x in 0..n {
            let y = g.mul(g.inv(x), z);
            coeff[class_of[x]][class_of[y]][l] += 1;
        }
    }

    let omegas = split_central_characters(&coeff, r, id_class, p)?;
    if omegas.len() != r {
        return Err(Error::RecognitionFailure(format!("found {} central characters for {r} classes", omegas.len())));
    }

    let inv_class: Vec<usize> = classes.iter().map(|c| class_of[g.inv(c.representative)]).collect();
    let sizes: Vec<u64> = classes.iter().map(|c| c.size() as u64).collect();
    let n_mod = n as u64 % p;

    // power maps: class of x^l for the class representative x
    let power_class: Vec<Vec<usize>> = classes
        .iter()
        .map(|c| {
            let mut out = Vec::with_capacity(e as usize);
            let mut y = g.identity();
            for _ in 0..e {
                out.push(class_of[y]);
                y = g.mul(y, c.representative);
            }
            out
        })
        .collect();

    let z = modp::pow(modp::primitive_root(p), (p - 1) / e, p);
    let inv_e = modp::inv(e % p, p);

    let mut rows: Vec<(u64, Vec<Cyclo>)> = Vec::with_capacity(r);
    for omega in omegas {
        // Σ_j ω_j ω_{j'} / |C_j| = n / d²
        let mut s = 0u64;
        for j in 0..r {
            let t = modp::mul(omega[j], omega[inv_class[j]], p);
            s = (s + modp::mul(t, modp::inv(sizes[j] % p, p), p)) % p;
        }
        if s == 0 {
            return Err(Error::RecognitionFailure("degenerate central character".into()));
        }
        let d_sq = modp::mul(n_mod, modp::inv(s, p), p);
        let d = (1..=n as u64)
            .take_while(|d| d * d <= n as u64)
            .find(|d| (d * d) % p == d_sq)
            .ok_or_else(|| Error::RecognitionFailure("no integral degree".into()))?;
        let chi_mod: Vec<u64> =
            (0..r).map(|j| modp::mul(modp::mul(omega[j], d % p, p), modp::inv(sizes[j] % p, p), p)).collect();

        let mut values = Vec::with_capacity(r);
        for j in 0..r {
            let mut mult = vec![0i64; e as usize];
            for (k, m) in mult.iter_mut().enumerate() {
                let mut acc = 0u64;
                for l in 0..e {
                    let zl = modp::pow(z, (p - 1) - ((k as u64 * l) % (p - 1)), p);
                    acc = (acc + modp::mul(chi_mod[power_class[j][l as usize]], zl, p)) % p;
                }
                let mk = modp::mul(acc, inv_e, p);
                if mk > d {
                    return Err(Error::RecognitionFailure(format!(
                        "eigenvalue multiplicity {mk} exceeds degree {d} in class {j}"
                    )));
                }
                *m = mk as i64;
            }
            if mult.iter().sum::<i64>() != d as i64 {
                return Err(Error::RecognitionFailure("multiplicities do not sum to the degree".into()));
            }
            values.push(Cyclo::from_exponent_coeffs(e as u32, &mult));
        }
        rows.push((d, values));
    }

    let total: u64 = rows.iter().map(|(d, _)| d * d).sum();
    if total != n as u64 {
        return Err(Error::RecognitionFailure(format!("degrees square-sum to {total}, not {n}")));
    }

    rows.sort_by(|(da, a), (db, b)| da.cmp(db).then_with(|| compare_rows(b, a)));
    // the trivial character leads its degree block
    if let Some(t) = rows.iter().position(|(_, v)| v.iter().all(Cyclo::is_one)) {
        let row = rows.remove(t);
        rows.insert(0, row);
    }
    let degrees = rows.iter().map(|(d, _)| *d).collect();
    let characters = rows.into_iter().map(|(_, v)| v).collect();
    Ok(CharacterTable { order: n, classes, class_of, characters, degrees, conductor: e as u32 })
}

pub(crate) fn compare_rows(a: &[Cyclo], b: &[Cyclo]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.lex_cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// Simultaneous eigenvectors of the class matrices, normalized to 1 at the
/// identity class.
fn split_central_characters(coeff: &[Vec<Vec<u64>>], r: usize, id_class: usize, p: u64) -> Result<Vec<Vec<u64>>> {
    // each space is an RREF basis (rows) with pivot columns
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r).map(|i| (0..r).map(|j| u64::from(i == j)).collect()).collect()];
    for mat in coeff.iter() {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            next.extend(split_space(mat, space, p)?);
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::RecognitionFailure("class matrices do not separate characters".into()));
    }
    spaces
        .into_iter()
        .map(|s| {
            let v = &s[0];
            let c = v[id_class];
            if c == 0 {
                return Err(Error::RecognitionFailure("eigenvector vanishes at the identity".into()));
            }
            let ic = modp::inv(c, p);
            Ok(v.iter().map(|&x| modp::mul(x, ic, p)).collect())
        })
        .collect()
}

/// Splits an invariant subspace of the column action `v ↦ M v` into eigenspaces.
fn split_space(mat: &[Vec<u64>], mut basis: Vec<Vec<u64>>, p: u64) -> Result<Vec<Vec<Vec<u64>>>> {
    let r = mat.len();
    let dim = basis.len();
    let pivots = modp::rref(&mut basis, p);
    // image of each basis vector, in basis coordinates (read at pivots)
    let images: Vec<Vec<u64>> = basis
        .iter()
        .map(|b| (0..r).map(|k| (0..r).fold(0, |acc, l| (acc + modp::mul(mat[k][l], b[l], p)) % p)).collect())
        .collect();
    // restricted matrix R with R[i][t] = coordinate t of M b_i; act on row vectors
    let restricted: Vec<Vec<u64>> = images.iter().map(|img| pivots.iter().map(|&c| img[c]).collect()).collect();
    let cp = modp::char_poly(&restricted, p);
    let roots: Vec<u64> = (0..p).filter(|&x| modp::eval_poly(&cp, x, p) == 0).collect();
    if roots.len() == 1 {
        return Ok(vec![basis]);
    }
    let mut out = Vec::new();
    let mut found = 0;
    for lambda in roots {
        // left null space of (R − λI): coefficient rows c with c·R = λc
        let shifted: Vec<Vec<u64>> = (0..dim)
            .map(|t| {
                (0..dim)
                    .map(|i| {
                        let v = restricted[i][t];
                        if i == t {
                            (v + p - lambda) % p
                        } else {
                            v
                        }
                    })
                    .collect()
            })
            .collect();
        let ker = modp::kernel(&shifted, dim, p);
        found += ker.len();
        let vectors: Vec<Vec<u64>> = ker
            .iter()
            .map(|c| (0..r).map(|x| (0..dim).fold(0, |acc, i| (acc + modp::mul(c[i], basis[i][x], p)) % p)).collect())
            .collect();
        out.push(vectors);
    }
    if found != dim {
        return Err(Error::RecognitionFailure("class matrix is not diagonalizable mod p".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::sync::Arc;

    #[test]
    fn small_tables() {
        let t = character_table(&FiniteGroup::cyclic(1)).unwrap();
        assert_eq!(t.characters, vec![vec![Cyclo::one()]]);
        let z2 = character_table(&FiniteGroup::cyclic(2)).unwrap();
        assert_eq!(z2.characters, vec![vec![Cyclo::one(), Cyclo::one()], vec![Cyclo::one(), Cyclo::from_int(-1)]]);
    }

    #[test]
    fn s3_table() {
        let s3 = Arc::new(FiniteGroup::symmetric(3));
        let t = character_table(&s3).unwrap();
        assert_eq!(t.degrees, vec![1, 1, 2]);
        assert!(t.characters[0].iter().all(Cyclo::is_one));
        for i in 0..3 {
            for j in 0..3 {
                let ip = t.inner_product(&t.characters[i], &t.characters[j]);
                assert_eq!(ip, Cyclo::from_int(i64::from(i == j)));
            }
        }
    }

    #[test]
    fn cyclic_five_has_nonrational_values() {
        let t = character_table(&FiniteGroup::cyclic(5)).unwrap();
        assert_eq!(t.num_classes(), 5);
        assert!(t.characters[1][1].as_rational().is_none());
        let sum = t.characters.iter().fold(Cyclo::zero(), |a, row| a + &row[1]);
        assert!(sum.is_zero());
    }
}
