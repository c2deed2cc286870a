//! Cross-checks of the algebraic constructions against brute-force counts.

use std::sync::Arc;

use ftqft_core::chartable::character_table;
use ftqft_core::cochain::{cyclic_3_cocycle, Cochain};
use ftqft_core::fields::{fields_on_presented_manifold, fields_on_surface, homomorphisms, Presentation};
use ftqft_core::group::{FiniteGroup, GSet};
use ftqft_core::scalar::Cyclo;
use ftqft_core::tqft2::{frobenius_algebra, untwisted, z_surface_algebra, z_surface_direct};
use ftqft_core::verlinde::{modular_data, z_sigma_times_circle};
use num_bigint::BigInt;
use num_rational::BigRational;

fn small_groups() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("Z2", FiniteGroup::cyclic(2)),
        ("Z3", FiniteGroup::cyclic(3)),
        ("Z4", FiniteGroup::cyclic(4)),
        ("V4", FiniteGroup::dihedral(2)),
        ("S3", FiniteGroup::symmetric(3)),
        ("D4", FiniteGroup::dihedral(4)),
        ("Q8", FiniteGroup::quaternion()),
    ]
}

fn rational(c: &Cyclo) -> BigRational {
    c.as_rational().expect("untwisted values are rational")
}

#[test]
fn surface_values_match_enumerated_fields() {
    for (name, g) in small_groups() {
        let g = Arc::new(g);
        let b = untwisted(Arc::new(GSet::point(g.clone())));
        let f = frobenius_algebra(&b).unwrap();
        for genus in 0..=2 {
            let counted = fields_on_surface(&GSet::point(g.clone()), genus).unwrap().cardinality();
            let alg = rational(&z_surface_algebra(&f, genus).unwrap());
            assert_eq!(alg, counted, "{name} genus {genus}");
        }
    }
}

#[test]
fn s3_genus_two_is_81() {
    let g = Arc::new(FiniteGroup::symmetric(3));
    let pt = GSet::point(g.clone());
    let counted = fields_on_surface(&pt, 2).unwrap().cardinality();
    assert_eq!(counted, BigRational::from_integer(BigInt::from(81)));
    let direct = z_surface_direct(&untwisted(Arc::new(pt)), 2).unwrap();
    assert_eq!(direct, Cyclo::from_int(81));
}

#[test]
fn regular_set_gives_trivial_theory() {
    // a free transitive action gauges away completely
    let g = Arc::new(FiniteGroup::symmetric(3));
    let b = untwisted(Arc::new(GSet::regular(g)));
    let f = frobenius_algebra(&b).unwrap();
    assert_eq!(f.dimension, 1);
    for genus in 0..=3 {
        assert_eq!(z_surface_algebra(&f, genus).unwrap(), Cyclo::one());
    }
}

#[test]
fn torus_times_circle_counts_commuting_triples() {
    for (name, g) in small_groups() {
        let homs = homomorphisms(&g, &Presentation::free_abelian(3)).len();
        let expected = Cyclo::from_frac(homs as i64, g.order() as i64);
        let m = modular_data(&Cochain::zero(Arc::new(g), 3)).unwrap();
        assert_eq!(Cyclo::from_int(m.rank as i64), expected, "{name}");
        assert_eq!(z_sigma_times_circle(&m, 1).unwrap(), expected, "{name}");
    }
}

#[test]
fn higher_genus_times_circle_matches_fields() {
    for (name, g) in [("Z2", FiniteGroup::cyclic(2)), ("S3", FiniteGroup::symmetric(3))] {
        let g = Arc::new(g);
        let m = modular_data(&Cochain::zero(g.clone(), 3)).unwrap();
        let counted = fields_on_presented_manifold(&GSet::point(g), &Presentation::surface_times_circle(2))
            .unwrap()
            .cardinality();
        let z = rational(&z_sigma_times_circle(&m, 2).unwrap());
        assert_eq!(z, counted, "{name}");
    }
    let m = modular_data(&Cochain::zero(Arc::new(FiniteGroup::cyclic(2)), 3)).unwrap();
    assert_eq!(z_sigma_times_circle(&m, 2).unwrap(), Cyclo::from_int(16));
}

#[test]
fn twisted_cyclic_ranks_are_n_squared() {
    for n in 2..=5usize {
        for p in 0..n as i64 {
            let m = modular_data(&cyclic_3_cocycle(n, p)).unwrap();
            assert_eq!(m.rank, n * n);
            assert!(m.check().all(), "Z/{n} twist {p}");
        }
    }
}

#[test]
fn character_tables_are_orthonormal() {
    let groups = [
        FiniteGroup::symmetric(4),
        FiniteGroup::alternating(4),
        FiniteGroup::quaternion(),
        FiniteGroup::dihedral(6),
        FiniteGroup::alternating(5),
    ];
    for g in groups {
        let t = character_table(&g).unwrap();
        let r = t.num_classes();
        let square_sum: u64 = t.degrees.iter().map(|&d| d * d).sum();
        assert_eq!(square_sum, g.order() as u64);
        for i in 0..r {
            for j in 0..r {
                let ip = t.inner_product(&t.characters[i], &t.characters[j]);
                assert_eq!(ip, Cyclo::from_int((i == j) as i64));
            }
        }
    }
}
