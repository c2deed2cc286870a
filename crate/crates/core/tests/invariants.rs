use std::sync::Arc;

use ftqft_core::anomaly::anomaly_pipeline;
use ftqft_core::cochain::{coboundary, equivariant_coboundary, is_cocycle, Cochain, EquivariantCochain};
use ftqft_core::group::{FiniteGroup, GSet, Subgroup};
use ftqft_core::rarita::Covector;
use ftqft_core::scalar::Phase;
use ftqft_core::tqft2::{frobenius_algebra, regauge, untwisted, z_surface_algebra};
use proptest::prelude::*;

fn s3_on_three_points() -> Arc<GSet> {
    let g = Arc::new(FiniteGroup::symmetric(3));
    let t = (0..g.order()).find(|&x| g.element_order(x) == 2).unwrap();
    Arc::new(GSet::cosets(&Subgroup::generated(&g, &[t])).0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn phases_form_a_group(a in -50i64..50, b in -50i64..50, d1 in 1i64..30, d2 in 1i64..30) {
        let (x, y) = (Phase::new(a, d1), Phase::new(b, d2));
        prop_assert_eq!(x + y - y, x);
        prop_assert_eq!(x + (-x), Phase::ZERO);
        prop_assert_eq!(Phase::new(a + 7 * d1, d1), x);
        prop_assert_eq!(x * d1 , Phase::ZERO);
    }

    #[test]
    fn coboundaries_are_cocycles(vals in prop::collection::vec(0i64..6, 64)) {
        for g in [FiniteGroup::cyclic(4), FiniteGroup::dihedral(2), FiniteGroup::symmetric(3)] {
            let n = g.order();
            let c = Cochain::from_fn(Arc::new(g), 2, |t| Phase::new(vals[(t[0] * n + t[1]) % vals.len()], 6));
            prop_assert!(is_cocycle(&coboundary(&c)).is_cocycle);
        }
    }

    #[test]
    fn regauging_predicts_the_shifted_algebra(vals in prop::collection::vec(0i64..12, 18)) {
        let set = s3_on_three_points();
        let e = set.group().identity();
        // normalized, so that the shifted twist stays normalized too
        let a = EquivariantCochain::from_fn(set.clone(), 1, |s, t| {
            if t[0] == e { Phase::ZERO } else { Phase::new(vals[s * 6 + t[0]], 12) }
        });
        let b0 = untwisted(set);
        let b1 = b0.add(&equivariant_coboundary(&a));
        let f0 = frobenius_algebra(&b0).unwrap();
        let f1 = frobenius_algebra(&b1).unwrap();
        prop_assert!(f1.check_axioms().all());
        let predicted = regauge(&f0, &a);
        prop_assert_eq!(&predicted, &f1);
        for genus in 0..=2 {
            prop_assert_eq!(z_surface_algebra(&f0, genus).unwrap(), z_surface_algebra(&f1, genus).unwrap());
        }
    }

    #[test]
    fn covectors_round_trip_through_text(v in prop::collection::vec(-40i64..40, 1..12), d in 1i64..9) {
        let text: Vec<String> = v.iter().map(|x| format!("{x}/{d}")).collect();
        let k: Covector = text.join(",").parse().unwrap();
        prop_assert_eq!(k.dimension(), v.len());
        let reparsed: Covector = k.0.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(",").parse().unwrap();
        prop_assert_eq!(reparsed, k);
    }

    #[test]
    fn anomaly_rows_have_period_eight(n in 1u64..10_000) {
        let (a, b) = (anomaly_pipeline(n).unwrap(), anomaly_pipeline(n + 8).unwrap());
        prop_assert_eq!(a.row(), b.row());
        prop_assert_eq!(b.pushforward_degree, a.pushforward_degree - 8);
    }
}
