//! Subcommand bodies. Each returns a JSON result plus a flat table for CSV.

use std::sync::Arc;

use ftqft_core::anomaly::anomaly_pipeline;
use ftqft_core::chartable::character_table_bounded;
use ftqft_core::cochain::{find_cobounding, is_cocycle, is_equivariant_cocycle, EquivariantCochain};
use ftqft_core::fields::{fields_on_presented_manifold_bounded, Presentation};
use ftqft_core::group::{conjugacy_classes, FiniteGroup, GSet};
use ftqft_core::rarita::{
    build_clifford, fiber_report, particle_content, random_non_null_covectors, rs_virtual_coefficient, splitting_check,
    Covector, DualType, FiberReport,
};
use ftqft_core::scalar::Cyclo;
use ftqft_core::tqft2::{
    frobenius_algebra, hilbert_1d, z_circle_1d, z_surface_algebra, z_surface_direct, FrobeniusAlgebra,
};
use ftqft_core::verlinde::{fusion, modular_data, reduce_to_stabilizer, z_sigma_times_circle};
use ftqft_core::{Bounds, Error};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::input::{LoadedCochain, LoadedGroup};
use crate::report::{Outcome, Table};

fn cyclo(c: &Cyclo) -> Value {
    Value::String(c.to_string())
}

fn cyclo_row(v: &[Cyclo]) -> Value {
    Value::Array(v.iter().map(cyclo).collect())
}

fn names(g: &FiniteGroup, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| g.name(x)).collect()
}

pub fn group_info(g: &LoadedGroup) -> Outcome {
    let grp = &g.group;
    let elements: Vec<Value> =
        (0..grp.order()).map(|x| json!({"index": x, "name": grp.name(x), "order": grp.element_order(x)})).collect();
    let mut table = Table::new(&["class", "representative", "size", "element_order"]);
    let classes: Vec<Value> = conjugacy_classes(grp)
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let rep = c.representative;
            table.push(vec![i.to_string(), grp.name(rep), c.size().to_string(), grp.element_order(rep).to_string()]);
            json!({"index": i, "representative": grp.name(rep), "size": c.size(), "element_order": grp.element_order(rep)})
        })
        .collect();
    let result = json!({
        "name": g.name,
        "order": grp.order(),
        "exponent": grp.exponent(),
        "abelian": grp.is_abelian(),
        "elements": elements,
        "classes": classes,
    });
    Outcome { result, table }
}

pub fn chartable(g: &LoadedGroup, bounds: &Bounds) -> Result<Outcome, CliError> {
    let grp = &g.group;
    let t = character_table_bounded(grp, bounds)?;
    let reps: Vec<String> = t.classes.iter().map(|c| grp.name(c.representative)).collect();
    let mut header = vec!["character".to_string(), "degree".to_string()];
    header.extend(reps.iter().cloned());
    let mut table = Table { header, rows: Vec::new() };
    for (i, row) in t.characters.iter().enumerate() {
        let mut r = vec![format!("X.{}", i + 1), t.degrees[i].to_string()];
        r.extend(row.iter().map(|c| c.to_string()));
        table.push(r);
    }
    let result = json!({
        "name": g.name,
        "order": t.order,
        "conductor": t.conductor,
        "classes": t.classes.iter().map(|c| json!({"representative": grp.name(c.representative), "size": c.size()})).collect::<Vec<_>>(),
        "degrees": t.degrees,
        "characters": t.characters.iter().map(|r| cyclo_row(r)).collect::<Vec<_>>(),
    });
    Ok(Outcome { result, table })
}

pub fn cocycle_check(g: &LoadedGroup, c: &LoadedCochain) -> Outcome {
    let grp = &g.group;
    let mut table = Table::new(&["property", "value"]);
    let result = match c {
        LoadedCochain::Group(c) => {
            let check = is_cocycle(c);
            let trivial = check.is_cocycle.then(|| find_cobounding(c).is_some());
            json!({
                "kind": "group",
                "degree": c.degree(),
                "normalized": c.is_normalized(),
                "denominator": c.denominator(),
                "cocycle": check.is_cocycle,
                "witness": check.witness.map(|w| names(grp, &w)),
                "cohomologically_trivial": trivial,
            })
        }
        LoadedCochain::Equivariant(c) => {
            let check = is_equivariant_cocycle(c);
            json!({
                "kind": "equivariant",
                "degree": c.degree(),
                "normalized": c.is_normalized(),
                "denominator": c.denominator(),
                "cocycle": check.is_cocycle,
                "witness": check.witness,
            })
        }
    };
    if let Value::Object(m) = &result {
        for (k, v) in m {
            let text = v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string());
            table.push(vec![k.clone(), text]);
        }
    }
    Outcome { result, table }
}

fn labels_json(f: &FrobeniusAlgebra, grp: &FiniteGroup) -> Vec<Value> {
    f.labels.iter().enumerate().map(|(i, l)| json!({"index": i, "point": l.s, "holonomy": grp.name(l.g)})).collect()
}

pub fn tqft_z_1d(b: &EquivariantCochain) -> Result<Outcome, CliError> {
    let h = hilbert_1d(b)?;
    let z = z_circle_1d(b)?;
    let mut table = Table::new(&["basis", "label"]);
    for (i, l) in h.labels.iter().enumerate() {
        table.push(vec![i.to_string(), l.clone()]);
    }
    let result = json!({
        "dimension": 1,
        "hilbert_dimension": h.dimension,
        "labels": h.labels,
        "conductor": h.conductor,
        "z_circle": cyclo(&z.measured),
        "z_circle_display": cyclo(&z.display),
    });
    Ok(Outcome { result, table })
}

pub fn tqft_z_2d(b: &EquivariantCochain, genus: u32) -> Result<Outcome, CliError> {
    let f = frobenius_algebra(b)?;
    let algebraic = z_surface_algebra(&f, genus)?;
    let direct = match z_surface_direct(b, genus) {
        Ok(v) => Some(v),
        Err(Error::UnsupportedTwistedGenus(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let agree = direct.as_ref().map(|d| *d == algebraic);
    let grp = b.gset().group();
    let mut table = Table::new(&["basis", "point", "holonomy"]);
    for l in labels_json(&f, grp) {
        table.push(vec![l["index"].to_string(), l["point"].to_string(), l["holonomy"].as_str().unwrap_or("").into()]);
    }
    let result = json!({
        "dimension": 2,
        "genus": genus,
        "state_space_dimension": f.dimension,
        "z": cyclo(&algebraic),
        "z_direct": direct.as_ref().map(cyclo),
        "agree": agree,
    });
    Ok(Outcome { result, table })
}

/// Groupoid cardinality of flat fields on a manifold given by a presentation of π₁.
pub fn fields_count(set: &Arc<GSet>, p: &Presentation, bounds: &Bounds) -> Result<Value, CliError> {
    let fields = fields_on_presented_manifold_bounded(set, p, bounds)?;
    Ok(json!({
        "objects": fields.objects.len(),
        "isomorphism_classes": fields.classes.len(),
        "cardinality": fields.cardinality().to_string(),
    }))
}

pub fn frobenius(b: &EquivariantCochain) -> Result<Outcome, CliError> {
    let f = frobenius_algebra(b)?;
    let grp = b.gset().group();
    let axioms = f.check_axioms();
    let mut structure = Vec::new();
    for (i, a) in f.structure.iter().enumerate() {
        for (j, bj) in a.iter().enumerate() {
            for (k, c) in bj.iter().enumerate() {
                if !c.is_zero() {
                    structure.push(json!([i, j, k, c.to_string()]));
                }
            }
        }
    }
    let z: Vec<Value> = (0..=3).map(|g| z_surface_algebra(&f, g).map(|v| cyclo(&v))).collect::<Result<_, _>>()?;
    let mut table = Table::new(&["basis", "point", "holonomy", "unit", "counit"]);
    for (i, l) in f.labels.iter().enumerate() {
        table.push(vec![i.to_string(), l.s.to_string(), grp.name(l.g), f.unit[i].to_string(), f.counit[i].to_string()]);
    }
    let result = json!({
        "dimension": f.dimension,
        "labels": labels_json(&f, grp),
        "structure_constants": structure,
        "unit": cyclo_row(&f.unit),
        "counit": cyclo_row(&f.counit),
        "pairing": f.pairing.iter().map(|r| cyclo_row(r)).collect::<Vec<_>>(),
        "axioms": {
            "commutative": axioms.commutative,
            "associative": axioms.associative,
            "unital": axioms.unital,
            "frobenius": axioms.frobenius,
            "nondegenerate": axioms.nondegenerate,
        },
        "z_genus_0_to_3": z,
    });
    Ok(Outcome { result, table })
}

pub fn verlinde(g: &LoadedGroup, omega: Option<LoadedCochain>, set: Option<&Arc<GSet>>) -> Result<Outcome, CliError> {
    let omega = match omega {
        Some(c) => c.into_group()?,
        None => ftqft_core::cochain::Cochain::zero(g.group.clone(), 3),
    };
    if omega.degree() != 3 {
        return Err(CliError::Parse(format!("the twist must have degree 3, got {}", omega.degree())));
    }
    let omega = match set {
        Some(s) => reduce_to_stabilizer(s, &omega)?,
        None => omega,
    };
    let grp = omega.group().clone();
    let m = modular_data(&omega)?;
    let ring = fusion(&m)?;
    let checks = m.check();
    let classes = conjugacy_classes(&grp);
    let mut nonzero = Vec::new();
    for a in 0..m.rank {
        for b in 0..m.rank {
            for c in 0..m.rank {
                let n = ring.n[a][b][c];
                if n != 0 {
                    nonzero.push(json!([a, b, c, n]));
                }
            }
        }
    }
    let mut table = Table::new(&["simple", "label", "class_representative", "degree", "dimension", "twist"]);
    let simples: Vec<Value> = m
        .simples
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let dim = x.dimension(classes[x.class_index].size());
            table.push(vec![
                i.to_string(),
                x.label.clone(),
                grp.name(x.representative),
                x.degree.to_string(),
                dim.to_string(),
                m.t[i].to_string(),
            ]);
            json!({
                "label": x.label,
                "class_representative": grp.name(x.representative),
                "degree": x.degree,
                "dimension": dim,
                "twist": cyclo(&m.t[i]),
            })
        })
        .collect();
    let result = json!({
        "group_order": grp.order(),
        "rank": m.rank,
        "global_dimension": m.global_dimension.to_string(),
        "simples": simples,
        "s": m.s.iter().map(|r| cyclo_row(r)).collect::<Vec<_>>(),
        "t": cyclo_row(&m.t),
        "t_orders": m.t_orders(),
        "checks": {
            "symmetric": checks.symmetric,
            "unitary": checks.unitary,
            "st_cubed_proportional": checks.st_cubed_proportional,
            "charge_conjugation": checks.charge_conjugation,
            "t_finite_order": checks.t_finite_order,
        },
        "charge_conjugation": m.charge_conjugation(),
        "fusion": {
            "unital": ring.is_unital(),
            "commutative": ring.is_commutative(),
            "associative": ring.is_associative(),
            "duals": ring.duals(),
            "nonzero": nonzero,
        },
        "z_torus_times_circle": cyclo(&z_sigma_times_circle(&m, 1)?),
    });
    Ok(Outcome { result, table })
}

fn fiber_json(r: &FiberReport) -> Value {
    json!({
        "k": r.k,
        "norm_squared": r.norm_squared,
        "null": r.null,
        "dim_s": r.dim_s,
        "dim_s_prime": r.dim_s_prime,
        "dim_s_double_prime": r.dim_s_double_prime,
        "dim_v_prime": r.dim_v_prime,
        "dim_r_prime": r.dim_r_prime,
        "rank_a": r.rank_a,
        "rank_b": r.rank_b,
        "dim_ker_b": r.dim_ker_b,
        "quotient_dim": r.quotient_dim(),
        "complex": r.complex,
        "part_i": r.part_i,
        "part_ii": r.part_ii,
        "certificate": {
            "prime": r.certificate.prime,
            "rank_mod_p": r.certificate.rank_mod_p,
            "kernel_witnesses": r.certificate.kernel_witnesses,
            "sandwich": r.certificate.sandwich,
        },
    })
}

fn fiber_holds(r: &FiberReport) -> bool {
    r.complex && r.part_i.unwrap_or(true) && r.part_ii.unwrap_or(true)
}

pub fn rs_verify(n: usize, ks: &[String], random: usize, seed: u64) -> Result<Outcome, CliError> {
    let m = build_clifford(n)?;
    let mut covectors = vec![Covector::canonical_null(n)];
    for k in ks {
        let k: Covector = k.parse()?;
        if k.dimension() != n {
            return Err(CliError::Parse(format!("covector has {} components, dimension is {n}", k.dimension())));
        }
        covectors.push(k);
    }
    covectors.extend(random_non_null_covectors(n, random, seed));
    let mut table = Table::new(&["k", "null", "dim_ker_b", "rank_a", "quotient_dim", "dim_r_prime", "holds"]);
    let mut reports = Vec::with_capacity(covectors.len());
    let mut all = true;
    for k in &covectors {
        let r = fiber_report(&m, k)?;
        let holds = fiber_holds(&r);
        all &= holds;
        table.push(vec![
            r.k.join(","),
            r.null.to_string(),
            r.dim_ker_b.to_string(),
            r.rank_a.to_string(),
            r.quotient_dim().to_string(),
            r.dim_r_prime.map(|d| d.to_string()).unwrap_or_default(),
            holds.to_string(),
        ]);
        reports.push(fiber_json(&r));
    }
    let result = json!({
        "n": n,
        "dim_s": m.dim_s,
        "clifford_relation": m.check_clifford_relation(),
        "symmetric": m.check_symmetric(),
        "splitting": splitting_check(&m),
        "random_covectors": random,
        "all_hold": all,
        "fibers": reports,
    });
    Ok(Outcome { result, table })
}

fn dual_name(d: DualType) -> &'static str {
    match d {
        DualType::SelfDual => "self_dual",
        DualType::DistinctDual => "distinct_dual",
    }
}

pub fn rs_content(n: usize) -> Result<Outcome, CliError> {
    let m = build_clifford(n)?;
    let content = particle_content(&m)?;
    let dual = DualType::for_dimension(n);
    let coefficient = rs_virtual_coefficient(dual);
    let pairs = |v: &[(String, usize)]| -> Value {
        Value::Array(v.iter().map(|(s, d)| json!({"bundle": s, "rank": d})).collect())
    };
    let mut table = Table::new(&["field", "bundle", "rank"]);
    for (field, list) in [("first", &content.first), ("second", &content.second), ("third", &content.third)] {
        for (s, d) in list {
            table.push(vec![field.into(), s.clone(), d.to_string()]);
        }
    }
    let result = json!({
        "n": n,
        "dim_s": m.dim_s,
        "splitting": splitting_check(&m),
        "content": {
            "first": pairs(&content.first),
            "second": pairs(&content.second),
            "third": pairs(&content.third),
        },
        "dual_type": dual_name(dual),
        "virtual_coefficient": coefficient.to_string(),
    });
    Ok(Outcome { result, table })
}

pub fn anomaly(n: u64) -> Result<Outcome, CliError> {
    let d = anomaly_pipeline(n)?;
    let mut table = Table::new(&["step", "group"]);
    for (i, s) in d.pipeline().iter().enumerate() {
        table.push(vec![i.to_string(), s.clone()]);
    }
    let result = json!({
        "n": d.n,
        "n_mod_8": d.n_mod_8,
        "bundle_reality": d.bundle_reality.symbol(),
        "source_theory": d.source_theory.symbol(),
        "source_group": d.source_group(),
        "pushforward_degree": d.pushforward_degree,
        "pushforward_group": d.pushforward_group(),
        "target_group": d.target_group.symbol(),
        "pipeline": d.pipeline(),
        "input_class": d.input_class(),
        "uses_difference_class": d.uses_difference_class,
        "note": d.note,
    });
    Ok(Outcome { result, table })
}
