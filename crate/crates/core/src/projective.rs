//! Projective characters for a 2-cocycle θ with values in ℚ/ℤ, using the
//! convention `ρ(h)ρ(k) = exp(2πi θ(h,k)) ρ(hk)`.
//!
//! θ is first shifted by the constant `θ(e,e)` to make it normalized. The
//! normalized cocycle of order `m` defines a central extension `ℤ/m ×_θ H`
//! whose irreducibles with central character `ζ_m` are the projective
//! irreducibles of `H`.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::chartable::{character_table_unbounded, compare_rows};
use crate::cochain::{require_cocycle, Cochain};
use crate::error::{Error, Result};
use crate::group::{class_lookup, conjugacy_classes, ConjugacyClass, FiniteGroup};
use crate::scalar::{Cyclo, Phase};

/// Irreducible θ-projective characters, tabulated per group element because
/// they are class functions only up to phases.
#[derive(Clone, Debug)]
pub struct ProjectiveCharacterTable {
    pub cocycle: Cochain,
    pub classes: Vec<ConjugacyClass>,
    pub class_of: Vec<usize>,
    /// Indices into `classes` of the θ-regular classes.
    pub regular_classes: Vec<usize>,
    /// `characters[i][h]` for every element `h`.
    pub characters: Vec<Vec<Cyclo>>,
    pub degrees: Vec<u64>,
}

impl ProjectiveCharacterTable {
    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }
}

/// `g` is θ-regular when `θ(x,g) = θ(g,x)` for every `x` commuting with `g`.
pub fn is_regular(theta: &Cochain, g: usize) -> bool {
    let grp = theta.group();
    (0..grp.order()).filter(|&x| grp.commute(x, g)).all(|x| theta.get(&[x, g]) == theta.get(&[g, x]))
}

pub fn projective_character_table(theta: &Cochain) -> Result<ProjectiveCharacterTable> {
    if theta.degree() != 2 {
        return Err(Error::InvalidInput(format!("projective table needs a 2-cocycle, got degree {}", theta.degree())));
    }
    require_cocycle(theta)?;
    projective_table_unchecked(theta)
}

pub(crate) fn projective_table_unchecked(theta: &Cochain) -> Result<ProjectiveCharacterTable> {
    let h = theta.group().clone();
    let n = h.order();
    let e = h.identity();
    let shift = theta.get(&[e, e]);
    let dense = theta.dense();
    let norm: Vec<Phase> = dense.iter().map(|&v| v - shift).collect();
    let m = norm.iter().fold(1i64, |acc, v| num_integer::lcm(acc, v.denom())) as usize;

    let ext = extension(&h, &norm, m);
    let table = character_table_unbounded(&ext)?;
    // the central generator (1, e)
    let z_class = table.class_of[(1 % m) * n + e];
    let zeta = Cyclo::root_of_unity(m as u32, 1);
    let phase = Cyclo::from_phase(shift);

    let mut rows: Vec<(u64, Vec<Cyclo>)> = table
        .characters
        .iter()
        .zip(&table.degrees)
        .filter(|(chi, &d)| chi[z_class] == zeta.scale(&num_rational::BigRational::from_integer(d.into())))
        .map(|(chi, &d)| (d, (0..n).map(|g| &phase * &chi[table.class_of[g]]).collect()))
        .collect();
    rows.sort_by(|(da, a), (db, b)| da.cmp(db).then_with(|| compare_rows(b, a)));

    let classes = conjugacy_classes(&h);
    let class_of = class_lookup(&classes, n);
    let regular_classes: Vec<usize> =
        (0..classes.len()).filter(|&i| is_regular(theta, classes[i].representative)).collect();
    let total: u64 = rows.iter().map(|(d, _)| d * d).sum();
    if total != n as u64 || rows.len() != regular_classes.len() {
        return Err(Error::RecognitionFailure(format!(
            "projective degrees square-sum to {total} with {} irreducibles and {} regular classes",
            rows.len(),
            regular_classes.len()
        )));
    }
    Ok(ProjectiveCharacterTable {
        cocycle: theta.clone(),
        classes,
        class_of,
        regular_classes,
        degrees: rows.iter().map(|(d, _)| *d).collect(),
        characters: rows.into_iter().map(|(_, v)| v).collect(),
    })
}

/// `ℤ/m ×_θ H`: `(a,h)(b,k) = (a + b + m·θ(h,k), hk)`, element `(a,h)` at `a·|H| + h`.
fn extension(h: &Arc<FiniteGroup>, theta: &[Phase], m: usize) -> FiniteGroup {
    let n = h.order();
    let size = m * n;
    let mut table = Vec::with_capacity(size * size);
    for x in 0..size {
        let (a, g) = (x / n, x % n);
        for y in 0..size {
            let (b, k) = (y / n, y % n);
            let t = theta[g * n + k].over(m as i64).expect("m is a multiple of every denominator") as usize;
            table.push((((a + b + t) % m) * n + h.mul(g, k)) as u32);
        }
    }
    FiniteGroup::from_table_unchecked(size, table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartable::character_table;
    use crate::cochain::coboundary;
    use alloc::vec;

    #[test]
    fn untwisted_matches_linear_table() {
        let s3 = Arc::new(FiniteGroup::symmetric(3));
        let p = projective_character_table(&Cochain::zero(s3.clone(), 2)).unwrap();
        let t = character_table(&s3).unwrap();
        assert_eq!(p.degrees, t.degrees);
        for (row, lin) in p.characters.iter().zip(&t.characters) {
            for g in 0..6 {
                assert_eq!(row[g], lin[t.class_of[g]]);
            }
        }
    }

    #[test]
    fn klein_four_alternating_cocycle() {
        let v4 = Arc::new(FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)));
        // θ((a1,b1),(a2,b2)) = a1·b2 / 2, index of (a,b) is 2a + b
        let theta = Cochain::from_fn(v4.clone(), 2, |t| Phase::new(((t[0] / 2) * (t[1] % 2)) as i64, 2));
        let p = projective_character_table(&theta).unwrap();
        assert_eq!(p.degrees, vec![2]);
        assert_eq!(p.regular_classes, vec![0]);
    }

    #[test]
    fn regauged_cyclic_table() {
        let z4 = Arc::new(FiniteGroup::cyclic(4));
        let mu = Cochain::from_fn(z4.clone(), 1, |t| Phase::new(t[0] as i64, 8));
        let theta = coboundary(&mu);
        let p = projective_character_table(&theta).unwrap();
        let t = character_table(&z4).unwrap();
        assert_eq!(p.degrees, vec![1; 4]);
        for row in &p.characters {
            let untwisted: Vec<Cyclo> = (0..4).map(|g| &row[g] * &Cyclo::from_phase(-mu.get(&[g]))).collect();
            assert!(t.characters.iter().any(|lin| (0..4).all(|g| lin[t.class_of[g]] == untwisted[g])));
        }
    }
}
