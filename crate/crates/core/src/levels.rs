//! Level stratification of a module with respect to a parabolic subgroup,
//! the Levi factors it induces in the ambient classical group, label
//! constraints for disconnected overgroups and central pairings.
//!
//! A weight `μ = δ - Σ d_i β_i` has level `Σ_{i ∉ S} d_i` and shape
//! `(d_i)_{i ∉ S}`, where `S` is the set of Levi nodes.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::characters::{decompose, kappa, weight_set, Character};
use crate::embed::FormType;
use crate::error::{Error, Result};
use crate::rootcore::{Family, RootSystem, SimpleType, Weight};

/// Simple roots of the Levi subgroup (1-based). Empty for a Borel subgroup.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LeviSubset {
    nodes: BTreeSet<usize>,
}

impl LeviSubset {
    pub fn borel() -> LeviSubset {
        LeviSubset::default()
    }

    pub fn new(rank: usize, nodes: &[usize]) -> Result<LeviSubset> {
        let set: BTreeSet<usize> = nodes.iter().copied().collect();
        if set.iter().any(|&i| i == 0 || i > rank) {
            return Err(Error::Contract(format!("Levi nodes must lie in 1..={}", rank)));
        }
        if set.len() == rank {
            return Err(Error::Contract(String::from("Levi subset must be proper")));
        }
        Ok(LeviSubset { nodes: set })
    }

    pub fn nodes(&self) -> &BTreeSet<usize> {
        &self.nodes
    }

    /// Nodes outside the Levi, ascending (1-based).
    pub fn complement(&self, rank: usize) -> Vec<usize> {
        (1..=rank).filter(|i| !self.nodes.contains(i)).collect()
    }

    pub fn is_borel(&self) -> bool {
        self.nodes.is_empty()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Level {
    pub weights: BTreeMap<Weight, u128>,
    pub shapes: BTreeSet<Vec<i64>>,
}

impl Level {
    pub fn dim(&self) -> u128 {
        self.weights.values().sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicLevels {
    pub delta: Weight,
    pub subset: LeviSubset,
    pub levels: Vec<Level>,
    pub ell: usize,
    pub half: usize,
}

impl ParabolicLevels {
    pub fn dims(&self) -> Vec<u128> {
        self.levels.iter().map(Level::dim).collect()
    }

    pub fn dim(&self) -> u128 {
        self.levels.iter().map(Level::dim).sum()
    }
}

pub fn level_decomposition(
    rs: &RootSystem,
    delta: &Weight,
    subset: &LeviSubset,
    ch: &Character,
) -> Result<ParabolicLevels> {
    rs.check(delta)?;
    let complement = subset.complement(rs.rank());
    let mut levels: Vec<Level> = Vec::new();
    for (mu, &m) in ch.iter() {
        let d = rs
            .integral_root_coords(&(delta - mu))
            .filter(|d| d.iter().all(|&x| x >= 0))
            .ok_or_else(|| Error::CorruptedCharacter(mu.to_string()))?;
        let shape: Vec<i64> = complement.iter().map(|&i| d[i - 1]).collect();
        let lev = shape.iter().sum::<i64>() as usize;
        if levels.len() <= lev {
            levels.resize(lev + 1, Level::default());
        }
        levels[lev].weights.insert(mu.clone(), m);
        levels[lev].shapes.insert(shape);
    }
    let ell = levels.len().saturating_sub(1);
    Ok(ParabolicLevels {
        delta: delta.clone(),
        subset: subset.clone(),
        levels,
        ell,
        half: ell / 2,
    })
}

/// Level of the lowest weight `w0(δ)`.
pub fn level_of_lowest(rs: &RootSystem, delta: &Weight, subset: &LeviSubset) -> Result<i64> {
    rs.check(delta)?;
    if !delta.is_dominant() {
        return Err(Error::NotDominant(delta.to_string()));
    }
    let low = rs.lowest_weight(delta);
    let d = rs
        .integral_root_coords(&(delta - &low))
        .expect("δ - w0(δ) lies in the root lattice");
    Ok(subset.complement(rs.rank()).iter().map(|&i| d[i - 1]).sum())
}

pub fn shapes(pl: &ParabolicLevels, i: usize) -> BTreeSet<Vec<i64>> {
    pl.levels.get(i).map(|l| l.shapes.clone()).unwrap_or_default()
}

/// Two or more shapes in one level force the level to be reducible for the
/// Levi subgroup. The converse does not hold.
pub fn level_reducible(pl: &ParabolicLevels, i: usize) -> bool {
    shapes(pl, i).len() >= 2
}

/// Number of composition factors of level `i` for the derived Levi
/// subgroup, by highest-weight extraction in characteristic zero.
pub fn level_factor_count(rs: &RootSystem, pl: &ParabolicLevels, i: usize) -> Result<u128> {
    let level = match pl.levels.get(i) {
        Some(l) => l,
        None => return Ok(0),
    };
    if pl.subset.is_borel() {
        return Ok(level.dim());
    }
    let nodes: Vec<usize> = pl.subset.nodes().iter().map(|i| i - 1).collect();
    let (levi, map) = rs.subsystem(&nodes)?;
    let complement = pl.subset.complement(rs.rank());
    let mut by_shape: BTreeMap<Vec<i64>, BTreeMap<Weight, u128>> = BTreeMap::new();
    for (mu, &m) in &level.weights {
        let d = rs
            .integral_root_coords(&(&pl.delta - mu))
            .ok_or_else(|| Error::CorruptedCharacter(mu.to_string()))?;
        let shape: Vec<i64> = complement.iter().map(|&i| d[i - 1]).collect();
        let local = Weight(map.iter().map(|&a| mu.0[a]).collect());
        *by_shape.entry(shape).or_default().entry(local).or_insert(0) += m;
    }
    let mut total = 0;
    for weights in by_shape.into_values() {
        let ch = Character::from_weights(levi.cartan_type().clone(), weights)?;
        total += kappa(&decompose(&levi, &ch)?);
    }
    Ok(total)
}

/// A simple factor of the Levi subgroup of the ambient classical group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviFactor {
    pub level: usize,
    pub kind: SimpleType,
    pub dim: u128,
    /// Ambient simple roots (1-based), in the Bourbaki order of `kind`.
    pub nodes: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviStructure {
    pub factors: Vec<LeviFactor>,
    pub has_a1: bool,
    pub a1_positions: Vec<usize>,
}

fn st(family: Family, rank: usize) -> SimpleType {
    SimpleType { family, rank }
}

pub fn levi_structure(pl: &ParabolicLevels, form: FormType) -> Result<LeviStructure> {
    levi_structure_from_dims(&pl.dims(), form)
}

/// Levi factors of the stabilizer in `Sp(W)` or `SO(W)` of the flag
/// built from the levels, given the level dimensions.
pub fn levi_structure_from_dims(dims: &[u128], form: FormType) -> Result<LeviStructure> {
    if form == FormType::None {
        return Err(Error::Contract(String::from(
            "Levi structure needs a self-dual module (symplectic or orthogonal)",
        )));
    }
    if dims.is_empty() {
        return Err(Error::Contract(String::from("no levels")));
    }
    let ell = dims.len() - 1;
    if (0..=ell).any(|i| dims[i] != dims[ell - i]) {
        return Err(Error::Contract(String::from("level dimensions are not symmetric")));
    }
    let mut factors = Vec::new();
    let mut start = 0usize;
    for (e, &d) in dims.iter().enumerate() {
        if 2 * e >= ell {
            break;
        }
        if d > 1 {
            factors.push(LeviFactor {
                level: e,
                kind: st(Family::A, d as usize - 1),
                dim: d,
                nodes: (start + 1..start + d as usize).collect(),
            });
        }
        start += d as usize;
    }
    if ell.is_multiple_of(2) {
        let e = ell / 2;
        let d = dims[e] as usize;
        let n = start + d / 2;
        let middle = |kind: SimpleType, nodes: Vec<usize>| LeviFactor {
            level: e,
            kind,
            dim: d as u128,
            nodes,
        };
        match form {
            FormType::Skew => {
                if d % 2 == 1 {
                    return Err(Error::Contract(String::from("odd middle level under a skew form")));
                }
                if d == 2 {
                    factors.push(middle(st(Family::A, 1), vec![n]));
                } else if d >= 4 {
                    factors.push(middle(st(Family::C, d / 2), (start + 1..=n).collect()));
                }
            }
            FormType::Symmetric => match d {
                0..=2 => {}
                3 => factors.push(middle(st(Family::A, 1), vec![n])),
                4 => {
                    factors.push(middle(st(Family::A, 1), vec![n - 1]));
                    factors.push(middle(st(Family::A, 1), vec![n]));
                }
                6 => factors.push(middle(st(Family::D, 3), vec![n - 2, n - 1, n])),
                _ if d % 2 == 1 => factors.push(middle(st(Family::B, (d - 1) / 2), (start + 1..=n).collect())),
                _ => factors.push(middle(st(Family::D, d / 2), (start + 1..=n).collect())),
            },
            FormType::None => unreachable!(),
        }
    }
    let a1_positions: Vec<usize> = factors
        .iter()
        .filter(|f| f.kind == st(Family::A, 1))
        .map(|f| f.nodes[0])
        .collect();
    Ok(LeviStructure {
        has_a1: !a1_positions.is_empty(),
        a1_positions,
        factors,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Extension {
    Two,
    Three,
    S3,
}

impl Extension {
    pub fn order(self) -> usize {
        match self {
            Extension::Two => 2,
            Extension::Three => 3,
            Extension::S3 => 6,
        }
    }
}

impl core::str::FromStr for Extension {
    type Err = Error;

    fn from_str(s: &str) -> Result<Extension> {
        match s.trim_start_matches('.') {
            "2" => Ok(Extension::Two),
            "3" => Ok(Extension::Three),
            "S3" | "s3" => Ok(Extension::S3),
            other => Err(Error::Contract(format!("unknown extension '{}'", other))),
        }
    }
}

impl core::fmt::Display for Extension {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Extension::Two => ".2",
            Extension::Three => ".3",
            Extension::S3 => ".S3",
        })
    }
}

/// Labels on every Levi node of the ambient group (1-based node → label).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pattern {
    pub case: String,
    pub labels: BTreeMap<usize, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintReport {
    pub extension: Extension,
    pub allowed_patterns: Vec<Pattern>,
}

/// Factors as the constraint tables see them: middle `D3` is read as `A3`
/// with nodes `(n-1, n-2, n)`.
fn as_type_a(f: &LeviFactor) -> Option<(usize, Vec<usize>)> {
    match (f.kind.family, f.kind.rank) {
        (Family::A, r) => Some((r, f.nodes.clone())),
        (Family::D, 3) => Some((3, vec![f.nodes[1], f.nodes[0], f.nodes[2]])),
        _ => None,
    }
}

pub fn ford_constraints(ls: &LeviStructure, extension: Extension) -> ConstraintReport {
    let all: Vec<usize> = ls.factors.iter().flat_map(|f| f.nodes.iter().copied()).collect();
    let pattern = |case: &str, set: &[(usize, i64)]| {
        let mut labels: BTreeMap<usize, i64> = all.iter().map(|&n| (n, 0)).collect();
        for &(n, v) in set {
            labels.insert(n, v);
        }
        Pattern {
            case: String::from(case),
            labels,
        }
    };
    let typed: Vec<(usize, Vec<usize>)> = ls.factors.iter().filter_map(as_type_a).collect();
    let a1s: Vec<usize> = typed.iter().filter(|(r, _)| *r == 1).map(|(_, n)| n[0]).collect();
    let of_rank = |k: usize| typed.iter().filter(move |(r, _)| *r == k).map(|(_, n)| n.clone());
    let mut out = Vec::new();
    match extension {
        Extension::Two => {
            for &a in &a1s {
                out.push(pattern("A1 natural", &[(a, 1)]));
            }
        }
        Extension::Three => {
            for &a in &a1s {
                out.push(pattern("A1 S2", &[(a, 2)]));
            }
            for n in of_rank(2) {
                out.push(pattern("A2 natural", &[(n[0], 1)]));
                out.push(pattern("A2 dual", &[(n[1], 1)]));
            }
        }
        Extension::S3 => {
            for n in of_rank(5) {
                out.push(pattern("i", &[(n[0], 1)]));
                out.push(pattern("i", &[(n[4], 1)]));
            }
            for n in of_rank(3) {
                out.push(pattern("ii", &[(n[1], 1)]));
            }
            for n in of_rank(2) {
                out.push(pattern("iii", &[(n[0], 2)]));
                out.push(pattern("iii", &[(n[1], 2)]));
            }
            for &a in &a1s {
                out.push(pattern("iv", &[(a, 5)]));
            }
            for n in of_rank(2) {
                for &a in &a1s {
                    out.push(pattern("v", &[(n[0], 1), (a, 1)]));
                    out.push(pattern("v", &[(n[1], 1), (a, 1)]));
                }
            }
            for &a in &a1s {
                for &b in &a1s {
                    if a != b {
                        out.push(pattern("vi", &[(a, 2), (b, 1)]));
                    }
                }
            }
            for f in ls.factors.iter().filter(|f| f.kind == st(Family::C, 3)) {
                out.push(pattern("vii", &[(f.nodes[0], 1)]));
            }
        }
    }
    ConstraintReport {
        extension,
        allowed_patterns: out,
    }
}

/// For each node `k` outside the Levi, the pairing of `μ` with the
/// cocharacter `det(A)·ω_k^∨` spanning the `k`-th direction of the connected
/// centre of the Levi subgroup.
pub fn central_pairing(rs: &RootSystem, subset: &LeviSubset, mu: &Weight) -> Result<Vec<i64>> {
    rs.check(mu)?;
    let inv = rs.inv_cartan_num();
    Ok(subset
        .complement(rs.rank())
        .into_iter()
        .map(|k| (0..rs.rank()).map(|i| mu.0[i] * inv[i][k - 1]).sum())
        .collect())
}

/// As [`central_pairing`] but with the smallest multiple of `ω_k^∨` that
/// pairs integrally with every weight.
pub fn central_pairing_minimal(rs: &RootSystem, subset: &LeviSubset, mu: &Weight) -> Result<Vec<i64>> {
    let inv = rs.inv_cartan_num();
    let den = rs.inv_cartan_den();
    let full = central_pairing(rs, subset, mu)?;
    Ok(subset
        .complement(rs.rank())
        .into_iter()
        .zip(full)
        .map(|(k, v)| {
            let g = (0..rs.rank()).fold(den, |g, i| g.gcd(&inv[i][k - 1]));
            v / g
        })
        .collect())
}

/// The implication "`V(μ)` has at least `r` distinct weights at Borel level
/// `a`" ⇒ "`V(δ)` has at least `r` at level `a + ht(δ - μ)`", checked by
/// counting both sides.
pub fn level_induction_bound(
    rs: &RootSystem,
    delta: &Weight,
    mu: &Weight,
    a: usize,
    r: usize,
    cap: usize,
) -> Result<bool> {
    if !rs.is_subdominant(mu, delta) {
        return Err(Error::Contract(format!("{} is not subdominant to {}", mu, delta)));
    }
    let b: i64 = rs
        .integral_root_coords(&(delta - mu))
        .expect("subdominant")
        .iter()
        .sum();
    let count = |hw: &Weight, lev: usize| -> Result<usize> {
        let ws = weight_set(rs, hw, cap)?;
        let pl = level_decomposition(rs, hw, &LeviSubset::borel(), &ws)?;
        Ok(pl.levels.get(lev).map_or(0, |l| l.weights.len()))
    };
    if count(mu, a)? < r {
        return Ok(true);
    }
    Ok(count(delta, a + b as usize)? >= r)
}

pub fn levels_to_string(pl: &ParabolicLevels) -> String {
    let dims: Vec<String> = pl.dims().iter().map(|d| d.to_string()).collect();
    dims.join(",")
}
