//! End-to-end acceptance run: one line per criterion, non-zero exit if any
//! criterion fails or overruns its time budget.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::sync::Arc;
use std::time::Instant;

use ftqft_core::anomaly::anomaly_pipeline;
use ftqft_core::chartable::character_table;
use ftqft_core::cochain::{
    cohomology_dimension, cyclic_3_cocycle, equivariant_coboundary, transgress, Cochain, EquivariantCochain,
};
use ftqft_core::fields::{fields_on_presented_manifold, fields_on_surface, homomorphisms, Presentation};
use ftqft_core::group::{all_subgroups, conjugacy_classes, FiniteGroup, GSet};
use ftqft_core::projective::projective_character_table;
use ftqft_core::rarita::{
    build_clifford, fiber_report, random_non_null_covectors, rs_virtual_coefficient, Covector, DualType,
};
use ftqft_core::scalar::{Cyclo, Phase};
use ftqft_core::tqft2::{
    frobenius_algebra, hilbert_1d, regauge, untwisted, z_circle_1d, z_surface_algebra, z_surface_direct,
};
use ftqft_core::verlinde::{fusion, modular_data, z_sigma_times_circle};
use serde_json::Value;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn ok<T, E: std::fmt::Debug>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| format!("{e:?}"))
}

/// Groups of order at most 24 from the standard families.
fn corpus() -> Vec<(String, FiniteGroup)> {
    let mut out: Vec<(String, FiniteGroup)> = (1..=12).map(|n| (format!("Z{n}"), FiniteGroup::cyclic(n))).collect();
    out.extend((2..=12).map(|m| (format!("D{}", 2 * m), FiniteGroup::dihedral(m))));
    out.push(("S3".into(), FiniteGroup::symmetric(3)));
    out.push(("Q8".into(), FiniteGroup::quaternion()));
    out.push(("A4".into(), FiniteGroup::alternating(4)));
    out.push(("S4".into(), FiniteGroup::symmetric(4)));
    out
}

fn path_integral() -> Outcome {
    let mut compared = 0;
    let mut enumerated = 0;
    for (name, g) in corpus() {
        let g = Arc::new(g);
        let b = untwisted(Arc::new(GSet::point(g.clone())));
        let f = ok(frobenius_algebra(&b))?;
        for genus in 0..=3u32 {
            let alg = ok(z_surface_algebra(&f, genus))?;
            let direct = ok(z_surface_direct(&b, genus))?;
            ensure!(alg.as_rational().is_some(), "{name} genus {genus}: {alg} is not rational");
            ensure!(alg == direct, "{name} genus {genus}: algebra {alg} vs direct {direct}");
            compared += 1;
            // brute-force enumeration of holonomies where it stays small
            if (g.order() as u64).pow(2 * genus) <= 400_000 {
                let counted = ok(fields_on_surface(&GSet::point(g.clone()), genus))?.cardinality();
                ensure!(
                    Cyclo::from_rational(counted.clone()) == alg,
                    "{name} genus {genus}: fields count {counted} vs {alg}"
                );
                enumerated += 1;
            }
        }
    }
    let s3 = Arc::new(FiniteGroup::symmetric(3));
    let z = ok(fields_on_surface(&GSet::point(s3), 2))?.cardinality();
    ensure!(z.to_string() == "81", "S3 genus 2 gave {z}");
    Ok(format!("{compared} exact comparisons, {enumerated} against enumeration, S3 genus 2 = 81"))
}

fn one_dimensional() -> Outcome {
    let s4 = Arc::new(FiniteGroup::symmetric(4));
    let mut cases = 0;
    for h in all_subgroups(&s4) {
        let local = character_table(&h.to_group()).map_err(|e| format!("{e:?}"))?;
        for (row, deg) in local.characters.iter().zip(&local.degrees) {
            if *deg != 1 {
                continue;
            }
            // a linear character is a homomorphism to roots of unity
            let phases: Vec<Phase> = (0..h.order())
                .map(|i| {
                    row[local.class_of[i]].as_root_of_unity().expect("linear characters take root-of-unity values")
                })
                .collect();
            let trivial = phases.iter().all(|p| p.is_zero());
            let (b, _) =
                EquivariantCochain::from_coset_character(&h, |x| phases[h.local_index(x).expect("element of H")]);
            let space = ok(hilbert_1d(&b))?;
            let z = ok(z_circle_1d(&b))?;
            let expected_dim = usize::from(trivial);
            let expected_display = if trivial { h.order() as i64 } else { 0 };
            ensure!(
                space.dimension == expected_dim,
                "|H| = {}: dimension {} for trivial = {trivial}",
                h.order(),
                space.dimension
            );
            ensure!(z.measured == Cyclo::from_int(expected_dim as i64), "|H| = {}: Z(S¹) = {}", h.order(), z.measured);
            ensure!(z.display == Cyclo::from_int(expected_display), "|H| = {}: displayed sum {}", h.order(), z.display);
            cases += 1;
        }
    }
    Ok(format!("{cases} (subgroup, character) pairs of S4"))
}

/// Deterministic normalized 1-cochain used to shift twists by a coboundary.
fn gauge(set: &Arc<GSet>, salt: usize) -> EquivariantCochain {
    let e = set.group().identity();
    EquivariantCochain::from_fn(set.clone(), 1, |s, t| {
        if t[0] == e {
            Phase::ZERO
        } else {
            Phase::new(((7 * s + 13 * t[0] + salt) % 6) as i64, 6)
        }
    })
}

fn frobenius_axioms() -> Outcome {
    let groups = [
        FiniteGroup::cyclic(2),
        FiniteGroup::cyclic(3),
        FiniteGroup::cyclic(4),
        FiniteGroup::dihedral(2),
        FiniteGroup::symmetric(3),
        FiniteGroup::dihedral(4),
        FiniteGroup::quaternion(),
    ];
    let mut instances = 0;
    let mut twisted_classes = 0;
    for g in groups {
        let g = Arc::new(g);
        let mut twists: Vec<Cochain> = vec![Cochain::zero(g.clone(), 2)];
        let h2 = ok(cohomology_dimension(&g, 2, 2))?;
        for rep in h2.representatives.into_iter().filter(|c| !c.is_zero()) {
            twists.push(rep);
        }
        twisted_classes += twists.len() - 1;
        let mut sets = vec![GSet::point(g.clone()), GSet::regular(g.clone())];
        sets.extend(all_subgroups(&g).iter().map(|h| GSet::cosets(h).0));
        for (i, set) in sets.into_iter().enumerate() {
            let set = Arc::new(set);
            for (j, omega) in twists.iter().enumerate() {
                let b = EquivariantCochain::from_group_cochain(set.clone(), omega);
                let f = ok(frobenius_algebra(&b))?;
                let axioms = f.check_axioms();
                ensure!(axioms.all(), "order {} set {i} twist {j}: {axioms:?}", g.order());
                let a = gauge(&set, i + j);
                let shifted = b.add(&equivariant_coboundary(&a));
                let f2 = ok(frobenius_algebra(&shifted))?;
                ensure!(f2.check_axioms().all(), "order {} set {i} twist {j}: shifted algebra fails", g.order());
                ensure!(regauge(&f, &a) == f2, "order {} set {i} twist {j}: regauge mismatch", g.order());
                for genus in 0..=3 {
                    ensure!(
                        ok(z_surface_algebra(&f, genus))? == ok(z_surface_algebra(&f2, genus))?,
                        "order {} set {i} twist {j}: genus {genus} not gauge invariant",
                        g.order()
                    );
                }
                instances += 1;
            }
        }
    }
    ensure!(instances >= 50, "only {instances} instances");
    Ok(format!("{instances} (G,S,B) instances, {twisted_classes} nonzero twist classes"))
}

/// Σ over classes of the number of projective irreps of the centralizer.
fn projective_count(omega: &Cochain) -> Result<usize, String> {
    let g = omega.group();
    let mut total = 0;
    for c in conjugacy_classes(g) {
        let (_, theta) = ok(transgress(omega, c.representative))?;
        total += ok(projective_character_table(&theta))?.len();
    }
    Ok(total)
}

fn verlinde_rank() -> Outcome {
    let mut cases: Vec<(String, Cochain, Option<usize>)> = vec![
        ("S3".into(), Cochain::zero(Arc::new(FiniteGroup::symmetric(3)), 3), Some(8)),
        ("Z2 untwisted".into(), cyclic_3_cocycle(2, 0), Some(4)),
        ("Z2 semion".into(), cyclic_3_cocycle(2, 1), Some(4)),
        ("Q8".into(), Cochain::zero(Arc::new(FiniteGroup::quaternion()), 3), None),
        ("D8".into(), Cochain::zero(Arc::new(FiniteGroup::dihedral(4)), 3), None),
    ];
    for n in 3..=8 {
        cases.push((format!("Z{n}"), cyclic_3_cocycle(n, 0), Some(n * n)));
    }
    for n in 3..=4 {
        for p in 1..n as i64 {
            cases.push((format!("Z{n} twist {p}"), cyclic_3_cocycle(n, p), Some(n * n)));
        }
    }
    for (name, omega, expected) in &cases {
        let m = ok(modular_data(omega))?;
        let independent = projective_count(omega)?;
        ensure!(m.rank == independent, "{name}: rank {} vs projective count {independent}", m.rank);
        if let Some(e) = expected {
            ensure!(m.rank == *e, "{name}: rank {} expected {e}", m.rank);
        }
        let checks = m.check();
        ensure!(checks.unitary, "{name}: S not unitary");
        ensure!(checks.st_cubed_proportional, "{name}: (ST)^3 not proportional to S^2");
        ensure!(checks.all(), "{name}: {checks:?}");
        let ring = ok(fusion(&m))?;
        ensure!(ring.is_unital() && ring.is_associative() && ring.is_commutative(), "{name}: fusion ring axioms");
    }
    let toric = ok(modular_data(&cyclic_3_cocycle(2, 0)))?;
    let semion = ok(modular_data(&cyclic_3_cocycle(2, 1)))?;
    let same_ring = ok(fusion(&toric))?.isomorphism(&ok(fusion(&semion))?).is_some();
    ensure!(same_ring, "toric code and double semion fusion rings differ");
    let (mut a, mut b) = (toric.t_orders(), semion.t_orders());
    a.sort_unstable();
    b.sort_unstable();
    ensure!(a != b, "T orders agree: {a:?}");
    Ok(format!("{} twisted doubles; T orders {a:?} vs {b:?}", cases.len()))
}

fn dimensional_consistency() -> Outcome {
    let mut cases: Vec<(String, Cochain)> = vec![
        ("S3".into(), Cochain::zero(Arc::new(FiniteGroup::symmetric(3)), 3)),
        ("Z2".into(), cyclic_3_cocycle(2, 0)),
        ("Q8".into(), Cochain::zero(Arc::new(FiniteGroup::quaternion()), 3)),
        ("D8".into(), Cochain::zero(Arc::new(FiniteGroup::dihedral(4)), 3)),
    ];
    for p in 1..3 {
        cases.push((format!("Z3 twist {p}"), cyclic_3_cocycle(3, p)));
    }
    cases.push(("Z2 semion".into(), cyclic_3_cocycle(2, 1)));
    let mut seen = Vec::new();
    for (name, omega) in &cases {
        let m = ok(modular_data(omega))?;
        let z = ok(z_sigma_times_circle(&m, 1))?;
        ensure!(z == Cyclo::from_int(m.rank as i64), "{name}: Z(T^3) = {z}, rank {}", m.rank);
        if omega.is_zero() {
            let g = omega.group();
            let counted = ok(fields_on_presented_manifold(&GSet::point(g.clone()), &Presentation::free_abelian(3)))?
                .cardinality();
            let homs = homomorphisms(g, &Presentation::free_abelian(3)).len();
            ensure!(Cyclo::from_rational(counted.clone()) == z, "{name}: fields {counted} vs {z}");
            ensure!(Cyclo::from_frac(homs as i64, g.order() as i64) == z, "{name}: |Hom|/|G| mismatch");
            seen.push(format!("{name}={z}"));
        }
    }
    ensure!(seen.contains(&"S3=8".to_string()) && seen.contains(&"Z2=4".to_string()), "values {seen:?}");
    Ok(seen.join(", "))
}

fn rarita_schwinger() -> Outcome {
    let expected = [(4usize, Some(2usize)), (6, None), (10, Some(56)), (11, Some(128))];
    let mut notes = Vec::new();
    for (n, quotient) in expected {
        let m = ok(build_clifford(n))?;
        let r = ok(fiber_report(&m, &Covector::canonical_null(n)))?;
        ensure!(r.complex, "n={n}: B∘A ≠ 0 at the null covector");
        ensure!(r.part_ii == Some(true), "n={n}: quotient {} vs R' {:?}", r.quotient_dim(), r.dim_r_prime);
        if let Some(q) = quotient {
            ensure!(r.quotient_dim() == q, "n={n}: quotient {} expected {q}", r.quotient_dim());
        }
        for (i, k) in random_non_null_covectors(n, 200, 2024 + n as u64).iter().enumerate() {
            let r = ok(fiber_report(&m, k))?;
            ensure!(r.complex && r.part_i == Some(true), "n={n}: random covector {i} ({:?}) fails part (i)", r.k);
        }
        notes.push(format!("n={n}:{}", r.quotient_dim()));
    }
    Ok(format!("null quotients {}, 200 random covectors each", notes.join(" ")))
}

fn pfaffian_bookkeeping() -> Outcome {
    let ten = rs_virtual_coefficient(DualType::for_dimension(10)).to_string();
    let eleven = rs_virtual_coefficient(DualType::for_dimension(11)).to_string();
    ensure!(DualType::for_dimension(10) == DualType::DistinctDual, "n=10 should have distinct duals");
    ensure!(ten == "T_ℂX − 1", "n=10 gave {ten}");
    ensure!(eleven == "T_ℂX − 3", "n=11 gave {eleven}");
    Ok(format!("n=10: {ten}; n=11: {eleven}"))
}

fn anomaly_table() -> Outcome {
    let fixture: Vec<Value> = ok(serde_json::from_str(include_str!("fixtures/anomaly_table.json")))?;
    ensure!(fixture.len() == 8, "fixture has {} rows", fixture.len());
    for row in &fixture {
        let n = row["n"].as_u64().ok_or("fixture row without n")?;
        // through the JSON report, so the serialized form is what gets compared
        let (code, out, err) = ftqft::cli::run(["ftqft", "anomaly", "--dim", &n.to_string()]);
        ensure!(code == 0, "anomaly --dim {n} exited {code}: {err}");
        let report: Value = ok(serde_json::from_str(&out))?;
        let r = &report["result"];
        ensure!(r["bundle_reality"] == row["reality"], "n={n}: reality {}", r["bundle_reality"]);
        ensure!(r["source_theory"] == row["source"], "n={n}: source {}", r["source_theory"]);
        ensure!(r["pipeline"] == row["pipeline"], "n={n}: pipeline {}", r["pipeline"]);
        ensure!(r["uses_difference_class"] == row["difference"], "n={n}: difference flag");
        ensure!(r["pushforward_degree"].as_i64() == Some(-(n as i64)), "n={n}: degree {}", r["pushforward_degree"]);
    }
    for n in 1..=64u64 {
        let (a, b) = (ok(anomaly_pipeline(n))?, ok(anomaly_pipeline(n + 8))?);
        ensure!(a.row() == b.row(), "period fails at n={n}");
        ensure!(b.pushforward_degree == a.pushforward_degree - 8, "degree shift fails at n={n}");
    }
    let four = ok(anomaly_pipeline(4))?;
    ensure!(four.note.is_some_and(|s| s.contains("determinant")), "n=4 note missing");
    Ok("8 rows match the fixture; period 8 holds up to n=64".into())
}

fn determinism() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_ftqft");
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data");
    let s3 = format!("{data}/s3.json");
    let z2 = format!("{data}/z2.json");
    let semion = format!("{data}/z2_semion.json");
    let invocations: Vec<Vec<String>> = vec![
        vec!["group".into(), "info".into(), "--group".into(), s3.clone()],
        vec!["chartable".into(), "--group".into(), s3.clone()],
        vec![
            "tqft".into(),
            "z".into(),
            "--dim".into(),
            "2".into(),
            "--genus".into(),
            "2".into(),
            "--group".into(),
            s3.clone(),
        ],
        vec!["frobenius".into(), "--group".into(), s3.clone()],
        vec!["verlinde".into(), "--group".into(), z2.clone(), "--omega".into(), semion],
        vec![
            "rs-verify".into(),
            "--dim".into(),
            "6".into(),
            "--random".into(),
            "5".into(),
            "--seed".into(),
            "17".into(),
        ],
        vec!["rs-content".into(), "--dim".into(), "10".into()],
        vec!["anomaly".into(), "--dim".into(), "4".into()],
    ];
    let run = |args: &[String]| -> Result<Vec<u8>, String> {
        let out = Command::new(exe).args(args).output().map_err(|e| e.to_string())?;
        ensure!(out.status.success(), "{args:?} exited {:?}", out.status.code());
        Ok(out.stdout)
    };
    for args in &invocations {
        let (a, b) = (run(args)?, run(args)?);
        ensure!(a == b, "{args:?} is not byte-identical across runs");
        ensure!(serde_json::from_slice::<Value>(&a).is_ok(), "{args:?} printed invalid JSON");
    }
    let tqft = run(&invocations[2])?;
    let report: Value = ok(serde_json::from_slice(&tqft))?;
    ensure!(report["result"]["z"] == "81", "tqft z reported {}", report["result"]["z"]);
    let mut other_seed = invocations[5].clone();
    *other_seed.last_mut().expect("seed value") = "18".into();
    ensure!(run(&other_seed)? != run(&invocations[5])?, "changing the seed did not change the sampled covectors");
    Ok(format!("{} invocations repeated byte-identically", invocations.len()))
}

fn main() {
    let criteria: [(&str, f64, fn() -> Outcome); 9] = [
        ("path-integral consistency", 60.0, path_integral),
        ("1d theory", 5.0, one_dimensional),
        ("Frobenius axioms", 120.0, frobenius_axioms),
        ("Verlinde rank", 60.0, verlinde_rank),
        ("3d/2d consistency", 30.0, dimensional_consistency),
        ("Rarita-Schwinger ranks", 120.0, rarita_schwinger),
        ("pfaffian coefficients", 1.0, pfaffian_bookkeeping),
        ("anomaly table", 1.0, anomaly_table),
        ("determinism", 60.0, determinism),
    ];
    let mut failures = 0;
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        let outcome = match outcome {
            Ok(detail) if secs > *budget => Err(format!("{detail}; took {secs:.1}s over a {budget}s budget")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS ({secs:.2}s) {detail}", i + 1),
            Err(reason) => {
                failures += 1;
                println!("criterion {} {name}: FAIL ({secs:.2}s) {reason}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
