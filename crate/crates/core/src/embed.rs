//! Invariant forms, ambient classical groups and restriction of ambient
//! characters to a subgroup through a torus assignment.
//!
//! The natural module of the ambient group has weights `±ε_i` (and `0` for
//! type B). A torus assignment sends `ε_i` to a weight `θ_i` of the
//! subgroup; ambient weights are converted to doubled ε-coordinates so that
//! spin weights stay integral.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::characters::{weyl_character, Character};
use crate::error::{Error, Result};
use crate::levels::{level_decomposition, LeviSubset};
use crate::rootcore::{CartanType, Family, RootSystem, SimpleType, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormType {
    Symmetric,
    Skew,
    None,
}

impl fmt::Display for FormType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormType::Symmetric => "symmetric",
            FormType::Skew => "skew",
            FormType::None => "none",
        })
    }
}

impl core::str::FromStr for FormType {
    type Err = Error;

    fn from_str(s: &str) -> Result<FormType> {
        match s {
            "symmetric" | "orthogonal" => Ok(FormType::Symmetric),
            "skew" | "symplectic" => Ok(FormType::Skew),
            "none" => Ok(FormType::None),
            _ => Err(Error::Parse(format!("unknown form '{}'", s))),
        }
    }
}

/// `Σ_{β>0} <δ, β^∨>`, summed root by root.
pub fn coroot_sum(rs: &RootSystem, delta: &Weight) -> i64 {
    (0..rs.pos_roots().len()).map(|k| rs.coroot_pairing(delta, k)).sum()
}

/// `<δ, 2ρ^∨>` through the inverse Cartan matrix.
pub fn two_rho_check_pairing(rs: &RootSystem, delta: &Weight) -> i64 {
    let inv = rs.inv_cartan_num();
    let n = rs.rank();
    let num: i64 = (0..n)
        .map(|i| (0..n).map(|j| delta.0[i] * inv[i][j]).sum::<i64>())
        .sum();
    2 * num / rs.inv_cartan_den()
}

/// Type of the invariant bilinear form on `V(δ)`: none unless `V(δ)` is
/// self-dual, otherwise fixed by the parity of `Σ <δ, β^∨>`.
pub fn form_sign(rs: &RootSystem, delta: &Weight) -> Result<FormType> {
    rs.check(delta)?;
    if !delta.is_dominant() {
        return Err(Error::NotDominant(delta.to_string()));
    }
    if !rs.is_self_dual(delta) {
        return Ok(FormType::None);
    }
    if coroot_sum(rs, delta) % 2 == 0 {
        Ok(FormType::Symmetric)
    } else {
        Ok(FormType::Skew)
    }
}

/// The classical group preserving a form of the given type on a space of
/// dimension `dim`. At `p = 2` the quadratic type is not decided here.
pub fn ambient_group(dim: u128, form: FormType, p: u64) -> Result<SimpleType> {
    let d = dim as usize;
    let too_small = || Error::Contract(format!("no simple classical group for dim {} and form {}", dim, form));
    match form {
        FormType::None => SimpleType::new(Family::A, d.saturating_sub(1)).map_err(|_| too_small()),
        _ if p == 2 => Err(Error::UnknownAtP2(dim)),
        FormType::Skew => {
            if d % 2 == 1 {
                return Err(Error::Contract(format!("skew form on odd dimension {}", dim)));
            }
            SimpleType::new(Family::C, d / 2).map_err(|_| too_small())
        }
        FormType::Symmetric if d.is_multiple_of(2) => SimpleType::new(Family::D, d / 2).map_err(|_| too_small()),
        FormType::Symmetric => SimpleType::new(Family::B, (d - 1) / 2).map_err(|_| too_small()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingSpec {
    pub x_type: CartanType,
    pub delta: Weight,
    pub dim: u128,
    pub form: FormType,
    pub ambient: SimpleType,
    /// Images of `ε_1, …, ε_n`.
    pub theta: Vec<Weight>,
}

/// Weights of `ch` listed with multiplicity, sorted by level below `delta`
/// then by root coordinates.
fn sorted_weights(rs: &RootSystem, delta: &Weight, ch: &Character) -> Result<Vec<(usize, Weight)>> {
    let pl = level_decomposition(rs, delta, &LeviSubset::borel(), ch)?;
    let mut out = Vec::new();
    for (lev, level) in pl.levels.iter().enumerate() {
        let mut ws: Vec<(Vec<i64>, &Weight, u128)> = level
            .weights
            .iter()
            .map(|(w, &m)| (rs.integral_root_coords(&(delta - w)).expect("levelled"), w, m))
            .collect();
        ws.sort();
        for (_, w, m) in ws {
            for _ in 0..m {
                out.push((lev, w.clone()));
            }
        }
    }
    Ok(out)
}

/// Canonical assignment of subgroup weights to the ε-basis of the ambient
/// natural module. `form` is the form the ambient group preserves; with
/// `FormType::None` the ambient group is `SL(W)` and θ lists every weight.
pub fn torus_assignment(rs: &RootSystem, delta: &Weight, ch: &Character, form: FormType) -> Result<EmbeddingSpec> {
    let dim = ch.dim();
    let sorted = sorted_weights(rs, delta, ch)?;
    let ambient = ambient_group(dim, form, 0)?;
    let theta: Vec<Weight> = if form == FormType::None {
        sorted.into_iter().map(|(_, w)| w).collect()
    } else {
        let ell = sorted.last().map_or(0, |(l, _)| *l);
        let mut remaining: BTreeMap<Weight, u128> = ch.entries().clone();
        let take = |w: &Weight, remaining: &mut BTreeMap<Weight, u128>| -> Result<()> {
            for x in [w.clone(), -w] {
                let m = remaining
                    .get_mut(&x)
                    .filter(|m| **m > 0)
                    .ok_or_else(|| Error::Contract(format!("weight multiset is not symmetric at {}", x)))?;
                *m -= 1;
            }
            Ok(())
        };
        let mut theta = Vec::new();
        let mut zeros = 0u128;
        for (lev, w) in &sorted {
            if w.is_zero() {
                zeros += 1;
                continue;
            }
            if 2 * lev > ell || remaining.get(w).copied().unwrap_or(0) == 0 {
                continue;
            }
            take(w, &mut remaining)?;
            theta.push(w.clone());
        }
        let keep = match ambient.family {
            Family::B => zeros.saturating_sub(1) / 2,
            _ => zeros / 2,
        };
        for _ in 0..keep {
            theta.push(Weight::zero(rs.rank()));
        }
        if remaining.iter().any(|(w, &m)| m > 0 && !w.is_zero()) {
            return Err(Error::Contract(String::from("weight multiset is not negation-symmetric")));
        }
        theta
    };
    let want = match ambient.family {
        Family::A => ambient.rank + 1,
        _ => ambient.rank,
    };
    if theta.len() != want {
        return Err(Error::Contract(format!(
            "torus assignment has {} entries, ambient {} needs {}",
            theta.len(),
            ambient,
            want
        )));
    }
    Ok(EmbeddingSpec {
        x_type: rs.cartan_type().clone(),
        delta: delta.clone(),
        dim,
        form,
        ambient,
        theta,
    })
}

/// Doubled ε-coordinates of an ambient weight.
pub fn doubled_epsilon(ty: SimpleType, a: &Weight) -> Result<Vec<i64>> {
    let n = ty.rank;
    let tail = |j: usize, end: usize| -> i64 { a.0[j..end].iter().sum() };
    let out = match ty.family {
        Family::A => {
            let mut x: Vec<i64> = (0..n).map(|j| 2 * tail(j, n)).collect();
            x.push(0);
            x
        }
        Family::C => (0..n).map(|j| 2 * tail(j, n)).collect(),
        Family::B => (0..n).map(|j| 2 * tail(j, n - 1) + a.0[n - 1]).collect(),
        Family::D => {
            let mut x: Vec<i64> = (0..n - 1)
                .map(|j| 2 * tail(j.min(n - 2), n - 2) + a.0[n - 2] + a.0[n - 1])
                .collect();
            x.push(a.0[n - 1] - a.0[n - 2]);
            x
        }
        _ => return Err(Error::Contract(format!("{} is not a classical ambient group", ty))),
    };
    Ok(out)
}

fn restrict_weight(ty: SimpleType, a: &Weight, theta: &[Weight], x_rank: usize) -> Result<Weight> {
    let x = doubled_epsilon(ty, a)?;
    let mut acc = alloc::vec![0i64; x_rank];
    for (c, t) in x.iter().zip(theta) {
        for (s, v) in acc.iter_mut().zip(&t.0) {
            *s += c * v;
        }
    }
    if acc.iter().any(|v| v % 2 != 0) {
        return Err(Error::Contract(format!("weight {} restricts to a non-integral weight", a)));
    }
    Ok(Weight(acc.into_iter().map(|v| v / 2).collect()))
}

/// Restriction of an ambient character to the subgroup.
pub fn restrict(ambient: SimpleType, ch: &Character, spec: &EmbeddingSpec) -> Result<Character> {
    let x_rank = spec.x_type.rank();
    let mut out: BTreeMap<Weight, u128> = BTreeMap::new();
    for (w, &m) in ch.iter() {
        *out.entry(restrict_weight(ambient, w, &spec.theta, x_rank)?).or_insert(0) += m;
    }
    Character::from_weights(spec.x_type.clone(), out)
}

/// Restriction of the ambient irreducible `V_G(λ)`.
pub fn restrict_character(rs_g: &RootSystem, lambda: &Weight, spec: &EmbeddingSpec, cap: usize) -> Result<Character> {
    let g = rs_g
        .simple_type()
        .filter(|t| *t == spec.ambient)
        .ok_or_else(|| Error::Contract(format!("ambient {} does not match {}", rs_g.cartan_type(), spec.ambient)))?;
    let ch = weyl_character(rs_g, lambda, cap)?;
    restrict(g, &ch, spec)
}

/// Rows `(ambient node, restriction)` of the simple roots of the ambient
/// group.
pub fn root_restrictions(spec: &EmbeddingSpec) -> Vec<(usize, Weight)> {
    let t = &spec.theta;
    let n = t.len();
    let mut rows: Vec<(usize, Weight)> = (0..n - 1).map(|i| (i + 1, &t[i] - &t[i + 1])).collect();
    match spec.ambient.family {
        Family::C => rows.push((n, t[n - 1].scale(2))),
        Family::B => rows.push((n, t[n - 1].clone())),
        Family::D => rows.push((n, &t[n - 2] + &t[n - 1])),
        _ => {}
    }
    rows
}

/// Checks that for `Y` classical of rank `l` in `SL` of its natural module,
/// `λ_i` restricts with highest weight `δ_i` for `1 ≤ i ≤ l - 2`.
pub fn natural_embedding_check(y: SimpleType, cap: usize) -> Result<bool> {
    if !matches!(y.family, Family::B | Family::C | Family::D) {
        return Err(Error::Contract(format!("{} is not of type B, C or D", y)));
    }
    let rs = RootSystem::new(y);
    let nat = Weight::fundamental(y.rank, 1);
    let ch = weyl_character(&rs, &nat, cap)?;
    let spec = torus_assignment(&rs, &nat, &ch, FormType::None)?;
    let g = RootSystem::new(spec.ambient);
    for i in 1..=y.rank.saturating_sub(2).max(1) {
        let res = restrict_character(&g, &Weight::fundamental(g.rank(), i), &spec, cap)?;
        if highest_dominant(&rs, &res) != Some(Weight::fundamental(y.rank, i)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The dominant weight of greatest height in a character.
pub fn highest_dominant(rs: &RootSystem, ch: &Character) -> Option<Weight> {
    ch.iter()
        .filter(|(w, _)| w.is_dominant())
        .max_by_key(|(w, _)| {
            let h: i64 = rs.root_coords_scaled(w).iter().sum();
            (h, core::cmp::Reverse((*w).clone()))
        })
        .map(|(w, _)| w.clone())
}
