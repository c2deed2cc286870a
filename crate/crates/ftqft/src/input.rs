//! JSON input formats for groups, G-sets, cochains and presentations.
//!
//! Every file is read once; its SHA-256 is kept so reports can record exactly
//! which bytes produced them.

use std::path::Path;
use std::sync::Arc;

use ftqft_core::cochain::{cyclic_3_cocycle, Cochain, EquivariantCochain};
use ftqft_core::fields::Presentation;
use ftqft_core::group::{group_from_permutations_bounded, make_group_seeded, FiniteGroup, GSet, Subgroup};
use ftqft_core::scalar::Phase;
use ftqft_core::Bounds;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::CliError;

#[derive(Clone, Debug, Serialize)]
pub struct InputRecord {
    pub role: &'static str,
    pub path: String,
    pub sha256: String,
}

pub struct Input {
    pub record: InputRecord,
    bytes: Vec<u8>,
}

impl Input {
    pub fn read(role: &'static str, path: &Path) -> Result<Self, CliError> {
        let bytes = std::fs::read(path).map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
        let sha256 = hex::encode(Sha256::digest(&bytes));
        Ok(Input { record: InputRecord { role, path: path.display().to_string(), sha256 }, bytes })
    }

    fn parse<T: for<'de> Deserialize<'de>>(&self) -> Result<T, CliError> {
        serde_json::from_slice(&self.bytes).map_err(|e| CliError::Parse(format!("{}: {e}", self.record.path)))
    }
}

/// An element given either by its index or by its printed name.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum ElemRef {
    Index(usize),
    Name(String),
}

#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(rename_all = "snake_case")]
enum Family {
    Cyclic,
    Dihedral,
    Symmetric,
    Alternating,
    Quaternion,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum GroupSpec {
    Permutations {
        generators: Vec<Vec<usize>>,
        degree: Option<usize>,
    },
    Table {
        table: Vec<Vec<usize>>,
    },
    Family {
        family: Family,
        #[serde(default)]
        n: usize,
    },
}

#[derive(Debug, Deserialize)]
struct GroupFile {
    name: Option<String>,
    #[serde(flatten)]
    spec: GroupSpec,
}

pub struct LoadedGroup {
    pub name: String,
    pub group: Arc<FiniteGroup>,
    /// The defining action, for groups given by permutations.
    pub natural: Option<Arc<GSet>>,
}

impl LoadedGroup {
    pub fn resolve(&self, r: &ElemRef) -> Result<usize, CliError> {
        let n = self.group.order();
        match r {
            ElemRef::Index(i) if *i < n => Ok(*i),
            ElemRef::Index(i) => Err(CliError::Parse(format!("element index {i} out of range for order {n}"))),
            ElemRef::Name(s) => (0..n)
                .find(|&g| self.group.name(g) == *s)
                .ok_or_else(|| CliError::Parse(format!("no element named {s:?}"))),
        }
    }
}

/// Cycle notation on points `0..degree`, with `()` for the identity.
fn cycle_name(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = p[x];
        }
        let parts: Vec<String> = cycle.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("({})", parts.join(" ")));
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

pub fn load_group(input: &Input, bounds: &Bounds, seed: u64) -> Result<LoadedGroup, CliError> {
    let file: GroupFile = input.parse()?;
    let name = file.name.unwrap_or_else(|| "G".into());
    match file.spec {
        GroupSpec::Permutations { generators, degree } => {
            let degree = degree.or_else(|| generators.first().map(Vec::len)).unwrap_or(0);
            let (group, natural) = group_from_permutations_bounded(&generators, degree, bounds)?;
            let rows = natural.action_rows().to_vec();
            let names = rows.iter().map(|p| cycle_name(p)).collect();
            let group = Arc::new(group.with_names(names)?);
            let natural = GSet::new(group.clone(), rows)?;
            Ok(LoadedGroup { name, group, natural: Some(Arc::new(natural)) })
        }
        GroupSpec::Table { table } => {
            let group = make_group_seeded(&table, seed)?;
            Ok(LoadedGroup { name, group: Arc::new(group), natural: None })
        }
        GroupSpec::Family { family, n } => {
            let needs_n = !matches!(family, Family::Quaternion);
            if needs_n && n == 0 {
                return Err(CliError::Parse("family groups need a positive \"n\"".into()));
            }
            let group = match family {
                Family::Cyclic => FiniteGroup::cyclic(n),
                Family::Dihedral => FiniteGroup::dihedral(n),
                Family::Symmetric => FiniteGroup::symmetric(n),
                Family::Alternating => FiniteGroup::alternating(n),
                Family::Quaternion => FiniteGroup::quaternion(),
            };
            Ok(LoadedGroup { name, group: Arc::new(group), natural: None })
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum GSetSpec {
    Point,
    Regular,
    Natural,
    Cosets { subgroup: Vec<ElemRef> },
    Action { action: Vec<Vec<usize>> },
}

pub fn load_gset(input: &Input, g: &LoadedGroup) -> Result<Arc<GSet>, CliError> {
    let spec: GSetSpec = input.parse()?;
    let set = match spec {
        GSetSpec::Point => GSet::point(g.group.clone()),
        GSetSpec::Regular => GSet::regular(g.group.clone()),
        GSetSpec::Natural => {
            return g
                .natural
                .clone()
                .ok_or_else(|| CliError::Parse("a natural action needs a permutation group".into()))
        }
        GSetSpec::Cosets { subgroup } => {
            let gens = subgroup.iter().map(|r| g.resolve(r)).collect::<Result<Vec<_>, _>>()?;
            GSet::cosets(&Subgroup::generated(&g.group, &gens)).0
        }
        GSetSpec::Action { action } => GSet::new(g.group.clone(), action)?,
    };
    Ok(Arc::new(set))
}

pub fn parse_phase(s: &str) -> Result<Phase, CliError> {
    let bad = || CliError::Parse(format!("bad phase {s:?}, expected a fraction like \"1/3\""));
    let (num, den) = match s.trim().split_once('/') {
        Some((a, b)) => (a.trim().parse::<i64>().map_err(|_| bad())?, b.trim().parse::<i64>().map_err(|_| bad())?),
        None => (s.trim().parse::<i64>().map_err(|_| bad())?, 1),
    };
    if den <= 0 {
        return Err(bad());
    }
    Ok(Phase::new(num, den))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Entry {
    point: Option<usize>,
    at: Vec<ElemRef>,
    phase: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CyclicSpec {
    p: i64,
    generator: ElemRef,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CochainFile {
    degree: usize,
    #[serde(default)]
    values: Vec<Entry>,
    cyclic: Option<CyclicSpec>,
}

/// A cochain on the group, or one on a G-set when entries name a point.
pub enum LoadedCochain {
    Group(Cochain),
    Equivariant(EquivariantCochain),
}

impl LoadedCochain {
    pub fn degree(&self) -> usize {
        match self {
            LoadedCochain::Group(c) => c.degree(),
            LoadedCochain::Equivariant(c) => c.degree(),
        }
    }

    /// View on `set`, pulling group cochains back along the map to a point.
    pub fn on_set(&self, set: &Arc<GSet>) -> EquivariantCochain {
        match self {
            LoadedCochain::Group(c) => EquivariantCochain::from_group_cochain(set.clone(), c),
            LoadedCochain::Equivariant(c) => c.clone(),
        }
    }

    pub fn into_group(self) -> Result<Cochain, CliError> {
        match self {
            LoadedCochain::Group(c) => Ok(c),
            LoadedCochain::Equivariant(_) => {
                Err(CliError::Parse("expected a group cochain without \"point\" entries".into()))
            }
        }
    }
}

/// Standard cyclic 3-cocycle transported along `k ↦ generator^k`.
fn cyclic_on(g: &LoadedGroup, generator: usize, p: i64) -> Result<Cochain, CliError> {
    let n = g.group.order();
    if g.group.element_order(generator) != n {
        return Err(CliError::Parse("\"cyclic\" needs a generator of the whole group".into()));
    }
    let standard = cyclic_3_cocycle(n, p);
    let mut exponent = vec![0usize; n];
    let mut x = g.group.identity();
    for k in 0..n {
        exponent[x] = k;
        x = g.group.mul(x, generator);
    }
    Ok(Cochain::from_fn(g.group.clone(), 3, |t| {
        let e: Vec<usize> = t.iter().map(|&a| exponent[a]).collect();
        standard.get(&e)
    }))
}

pub fn load_cochain(input: &Input, g: &LoadedGroup, set: Option<&Arc<GSet>>) -> Result<LoadedCochain, CliError> {
    let file: CochainFile = input.parse()?;
    let degree = file.degree;
    if let Some(c) = &file.cyclic {
        if degree != 3 || !file.values.is_empty() {
            return Err(CliError::Parse("\"cyclic\" describes a lone 3-cocycle".into()));
        }
        let generator = g.resolve(&c.generator)?;
        return Ok(LoadedCochain::Group(cyclic_on(g, generator, c.p)?));
    }
    let equivariant = file.values.iter().any(|e| e.point.is_some());
    if equivariant && file.values.iter().any(|e| e.point.is_none()) {
        return Err(CliError::Parse("either every entry names a point or none does".into()));
    }
    let mut parsed = Vec::with_capacity(file.values.len());
    for e in &file.values {
        if e.at.len() != degree {
            return Err(CliError::Parse(format!("entry has {} arguments, degree is {degree}", e.at.len())));
        }
        let at = e.at.iter().map(|r| g.resolve(r)).collect::<Result<Vec<_>, _>>()?;
        parsed.push((e.point, at, parse_phase(&e.phase)?));
    }
    if equivariant {
        let set = set.ok_or_else(|| CliError::Parse("entries with \"point\" need a --gset".into()))?;
        let mut c = EquivariantCochain::zero(set.clone(), degree);
        for (s, at, v) in parsed {
            let s = s.unwrap_or(0);
            if s >= set.size() {
                return Err(CliError::Parse(format!("point {s} outside the G-set")));
            }
            c.set(s, &at, v);
        }
        Ok(LoadedCochain::Equivariant(c))
    } else {
        let mut c = Cochain::zero(g.group.clone(), degree);
        for (_, at, v) in parsed {
            c.set(&at, v);
        }
        Ok(LoadedCochain::Group(c))
    }
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum PresentationSpec {
    Explicit { generators: usize, relators: Vec<Vec<i64>> },
    Surface { surface: u32 },
    SurfaceTimesCircle { surface_times_circle: u32 },
    FreeAbelian { free_abelian: usize },
}

pub fn load_presentation(input: &Input) -> Result<Presentation, CliError> {
    let p = match input.parse::<PresentationSpec>()? {
        PresentationSpec::Explicit { generators, relators } => {
            let limit = generators as i64;
            if relators.iter().flatten().any(|&x| x == 0 || x.abs() > limit) {
                return Err(CliError::Parse("relator letters must be ±1..±generators".into()));
            }
            Presentation { generators, relators }
        }
        PresentationSpec::Surface { surface } => Presentation::surface(surface),
        PresentationSpec::SurfaceTimesCircle { surface_times_circle } => {
            Presentation::surface_times_circle(surface_times_circle)
        }
        PresentationSpec::FreeAbelian { free_abelian } => Presentation::free_abelian(free_abelian),
    };
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_names() {
        assert_eq!(cycle_name(&[0, 1, 2]), "()");
        assert_eq!(cycle_name(&[1, 2, 0, 4, 3]), "(0 1 2)(3 4)");
    }

    #[test]
    fn phases() {
        assert_eq!(parse_phase("1/2").unwrap(), Phase::new(1, 2));
        assert_eq!(parse_phase(" -1 / 3").unwrap(), Phase::new(2, 3));
        assert_eq!(parse_phase("4").unwrap(), Phase::ZERO);
        assert!(parse_phase("1/0").is_err());
        assert!(parse_phase("half").is_err());
    }
}
