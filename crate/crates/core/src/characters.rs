//! Characteristic-zero characters: Freudenthal multiplicities, Weyl
//! dimensions, the character ring and highest-weight extraction.
//!
//! Every kernel works in integers. Inner products use the integer Gram
//! matrix of the root system: `(μ, β) = Σ c_i μ_i G_ii / 2` for `β = Σ c_i α_i`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::ToString;
use alloc::vec::Vec;
use core::cmp::Reverse;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::rootcore::{CartanType, Family, RootSystem, SimpleType, Weight};

/// Finite map weight → positive multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    ty: CartanType,
    entries: BTreeMap<Weight, u128>,
}

/// Highest weights with their multiplicities.
pub type Decomposition = BTreeMap<Weight, u128>;

impl Character {
    /// Builds a character, merging repeated weights and dropping zero
    /// multiplicities.
    pub fn from_weights<I>(ty: CartanType, weights: I) -> Result<Character>
    where
        I: IntoIterator<Item = (Weight, u128)>,
    {
        let rank = ty.rank();
        let mut entries = BTreeMap::new();
        for (w, m) in weights {
            if w.len() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    got: w.len(),
                });
            }
            if m > 0 {
                *entries.entry(w).or_insert(0) += m;
            }
        }
        Ok(Character { ty, entries })
    }

    pub fn trivial(rs: &RootSystem) -> Character {
        let mut entries = BTreeMap::new();
        entries.insert(Weight::zero(rs.rank()), 1);
        Character {
            ty: rs.cartan_type().clone(),
            entries,
        }
    }

    pub fn zero(ty: CartanType) -> Character {
        Character {
            ty,
            entries: BTreeMap::new(),
        }
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.ty
    }

    pub fn entries(&self) -> &BTreeMap<Weight, u128> {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &u128)> {
        self.entries.iter()
    }

    pub fn mult(&self, w: &Weight) -> u128 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    /// Number of distinct weights.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn dim(&self) -> u128 {
        self.entries.values().sum()
    }

    pub fn dual(&self) -> Character {
        Character {
            ty: self.ty.clone(),
            entries: self.entries.iter().map(|(w, &m)| (-w, m)).collect(),
        }
    }

    /// Direct sum.
    pub fn sum(&self, other: &Character) -> Result<Character> {
        same_system(self, other)?;
        let mut entries = self.entries.clone();
        for (w, &m) in &other.entries {
            *entries.entry(w.clone()).or_insert(0) += m;
        }
        Ok(Character {
            ty: self.ty.clone(),
            entries,
        })
    }

    /// Adams operation: every weight multiplied by `i`.
    pub fn adams(&self, i: i64) -> Character {
        Character {
            ty: self.ty.clone(),
            entries: self.entries.iter().map(|(w, &m)| (w.scale(i), m)).collect(),
        }
    }

    /// Sum of all weights counted with multiplicity (the weight of the
    /// top exterior power).
    pub fn determinant_weight(&self) -> Weight {
        let mut acc = Weight::zero(self.ty.rank());
        for (w, &m) in &self.entries {
            for (a, x) in acc.0.iter_mut().zip(&w.0) {
                *a += x * m as i64;
            }
        }
        acc
    }

    pub fn is_weyl_invariant(&self, rs: &RootSystem) -> bool {
        self.entries.iter().all(|(w, &m)| {
            (0..rs.rank()).all(|i| self.mult(&rs.reflect(w, i)) == m)
        })
    }

    /// Multiplicities of the dominant weights only.
    pub fn dominant_part(&self) -> BTreeMap<Weight, u128> {
        self.entries
            .iter()
            .filter(|(w, _)| w.is_dominant())
            .map(|(w, &m)| (w.clone(), m))
            .collect()
    }

    fn from_signed(ty: CartanType, map: BTreeMap<Weight, i128>) -> Result<Character> {
        let mut entries = BTreeMap::new();
        for (w, m) in map {
            if m < 0 {
                return Err(Error::NotACharacter {
                    weight: w.to_string(),
                    mult: m,
                });
            }
            if m > 0 {
                entries.insert(w, m as u128);
            }
        }
        Ok(Character { ty, entries })
    }
}

fn same_system(a: &Character, b: &Character) -> Result<()> {
    if a.ty != b.ty {
        return Err(Error::MixedSystems(a.ty.to_string(), b.ty.to_string()));
    }
    Ok(())
}

fn check_dominant(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    rs.check(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    Ok(())
}

/// Dominant weights `μ ≼ λ`, found by subtracting positive roots while
/// staying dominant, ordered by depth below `λ` then lexicographically.
pub fn dominant_weights_under(rs: &RootSystem, lambda: &Weight) -> Result<Vec<Weight>> {
    check_dominant(rs, lambda)?;
    let mut seen: BTreeSet<Weight> = BTreeSet::new();
    let mut stack = alloc::vec![lambda.clone()];
    seen.insert(lambda.clone());
    while let Some(mu) = stack.pop() {
        for beta in rs.root_labels() {
            let nu = &mu - beta;
            if nu.is_dominant() && !seen.contains(&nu) {
                seen.insert(nu.clone());
                stack.push(nu);
            }
        }
    }
    let mut out: Vec<(i64, Weight)> = seen
        .into_iter()
        .map(|mu| {
            let depth: i64 = rs.root_coords_scaled(&(lambda - &mu)).iter().sum();
            (depth, mu)
        })
        .collect();
    out.sort();
    Ok(out.into_iter().map(|(_, w)| w).collect())
}

/// `(λ - μ, λ + μ + 2ρ)` for `λ - μ` in the root lattice.
fn casimir_gap(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> i128 {
    let c = rs
        .integral_root_coords(&(lambda - mu))
        .expect("dominant weights under λ differ by roots");
    let g = rs.gram();
    (0..rs.rank())
        .map(|i| c[i] as i128 * (lambda.0[i] + mu.0[i] + 2) as i128 * (g[i][i] / 2) as i128)
        .sum()
}

/// Multiplicities of every dominant weight of `V(λ)` by Freudenthal's
/// recursion. The returned table is the memo for all further lookups.
pub fn dominant_multiplicities(rs: &RootSystem, lambda: &Weight) -> Result<BTreeMap<Weight, u128>> {
    let order = dominant_weights_under(rs, lambda)?;
    let mut memo: BTreeMap<Weight, u128> = BTreeMap::new();
    for mu in order {
        if &mu == lambda {
            memo.insert(mu, 1);
            continue;
        }
        let mut rhs: i128 = 0;
        for (k_root, beta) in rs.pos_roots().iter().enumerate() {
            let step = &rs.root_labels()[k_root];
            let mut nu = &mu + step;
            while let Some(&m) = memo.get(&rs.dominant_conjugate(&nu)) {
                rhs += rs.inner_with_root(&nu, beta) as i128 * m as i128;
                nu = &nu + step;
            }
        }
        let gap = casimir_gap(rs, lambda, &mu);
        let m = 2 * rhs / gap;
        debug_assert_eq!(2 * rhs % gap, 0);
        if m > 0 {
            memo.insert(mu, m as u128);
        }
    }
    Ok(memo)
}

/// Multiplicity of `μ` in the irreducible of highest weight `λ`.
pub fn freudenthal_multiplicity(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<u128> {
    rs.check(mu)?;
    let table = dominant_multiplicities(rs, lambda)?;
    Ok(table.get(&rs.dominant_conjugate(mu)).copied().unwrap_or(0))
}

fn expand(rs: &RootSystem, dominant: &BTreeMap<Weight, u128>, cap: usize) -> Result<Character> {
    let mut total: u128 = 0;
    for w in dominant.keys() {
        total = total.saturating_add(rs.orbit_size(w)?);
    }
    if total > cap as u128 {
        return Err(Error::CapExceeded { needed: total, cap });
    }
    let mut entries = BTreeMap::new();
    for (w, &m) in dominant {
        for x in rs.orbit_unchecked(w) {
            entries.insert(x, m);
        }
    }
    Ok(Character {
        ty: rs.cartan_type().clone(),
        entries,
    })
}

/// The weight set of `V(λ)`, every weight with multiplicity one.
pub fn weight_set(rs: &RootSystem, lambda: &Weight, cap: usize) -> Result<Character> {
    let dominant = dominant_weights_under(rs, lambda)?
        .into_iter()
        .map(|w| (w, 1))
        .collect();
    expand(rs, &dominant, cap)
}

pub fn weyl_character(rs: &RootSystem, lambda: &Weight, cap: usize) -> Result<Character> {
    let dominant = dominant_multiplicities(rs, lambda)?;
    expand(rs, &dominant, cap)
}

/// Rebuilds a character from a decomposition.
pub fn character_of(rs: &RootSystem, d: &Decomposition, cap: usize) -> Result<Character> {
    let mut dominant: BTreeMap<Weight, u128> = BTreeMap::new();
    for (hw, &k) in d {
        for (w, m) in dominant_multiplicities(rs, hw)? {
            *dominant.entry(w).or_insert(0) += k * m;
        }
    }
    expand(rs, &dominant, cap)
}

/// Weyl's product formula.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<u128> {
    check_dominant(rs, lambda)?;
    let shifted = lambda + rs.rho();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for k in 0..rs.pos_roots().len() {
        num *= BigUint::from(rs.coroot_pairing(&shifted, k) as u64);
        den *= BigUint::from(rs.coroot_pairing(rs.rho(), k) as u64);
    }
    (num / den).to_u128().ok_or(Error::Overflow("Weyl dimension"))
}

fn convolve(a: &BTreeMap<Weight, i128>, b: &BTreeMap<Weight, i128>) -> BTreeMap<Weight, i128> {
    let mut out: BTreeMap<Weight, i128> = BTreeMap::new();
    for (x, &m) in a {
        for (y, &n) in b {
            *out.entry(x + y).or_insert(0) += m * n;
        }
    }
    out.retain(|_, m| *m != 0);
    out
}

fn signed(c: &Character) -> BTreeMap<Weight, i128> {
    c.entries.iter().map(|(w, &m)| (w.clone(), m as i128)).collect()
}

fn check_product_size(a: usize, b: usize, cap: usize) -> Result<()> {
    let needed = a as u128 * b as u128;
    if needed > cap as u128 {
        return Err(Error::CapExceeded { needed, cap });
    }
    Ok(())
}

pub fn tensor(c1: &Character, c2: &Character, cap: usize) -> Result<Character> {
    same_system(c1, c2)?;
    check_product_size(c1.len(), c2.len(), cap)?;
    Character::from_signed(c1.ty.clone(), convolve(&signed(c1), &signed(c2)))
}

/// Newton recursion `k·P_k = Σ_{i=1..k} s^{i-1} ψ^i(c) P_{k-i}` with
/// `s = -1` for exterior and `s = 1` for symmetric powers.
fn newton_power(c: &Character, k: usize, alternating: bool, cap: usize) -> Result<Character> {
    let mut powers: Vec<BTreeMap<Weight, i128>> = Vec::with_capacity(k + 1);
    let mut one = BTreeMap::new();
    one.insert(Weight::zero(c.ty.rank()), 1i128);
    powers.push(one);
    let adams: Vec<BTreeMap<Weight, i128>> = (1..=k).map(|i| signed(&c.adams(i as i64))).collect();
    for j in 1..=k {
        let mut acc: BTreeMap<Weight, i128> = BTreeMap::new();
        for i in 1..=j {
            let prev = &powers[j - i];
            check_product_size(adams[i - 1].len(), prev.len(), cap)?;
            let sign = if alternating && i % 2 == 0 { -1 } else { 1 };
            for (w, m) in convolve(&adams[i - 1], prev) {
                *acc.entry(w).or_insert(0) += sign * m;
            }
        }
        let j128 = j as i128;
        let mut next = BTreeMap::new();
        for (w, m) in acc {
            if m % j128 != 0 {
                return Err(Error::NotACharacter {
                    weight: w.to_string(),
                    mult: m,
                });
            }
            if m != 0 {
                next.insert(w, m / j128);
            }
        }
        powers.push(next);
    }
    Character::from_signed(c.ty.clone(), powers.pop().expect("k+1 entries"))
}

fn nonnegative(k: i64) -> Result<usize> {
    if k < 0 {
        return Err(Error::Contract(alloc::format!("power index {} is negative", k)));
    }
    Ok(k as usize)
}

pub fn exterior_power(c: &Character, k: i64, cap: usize) -> Result<Character> {
    let k = nonnegative(k)?;
    let d = c.dim();
    if k as u128 > d {
        return Ok(Character::zero(c.ty.clone()));
    }
    if 2 * k as u128 > d {
        // Λ^k V ≅ Λ^{d-k}(V)* ⊗ Λ^d V
        let low = newton_power(c, (d - k as u128) as usize, true, cap)?;
        let det = c.determinant_weight();
        return Ok(Character {
            ty: c.ty.clone(),
            entries: low.entries.iter().map(|(w, &m)| (&det - w, m)).collect(),
        });
    }
    newton_power(c, k, true, cap)
}

pub fn symmetric_power(c: &Character, k: i64, cap: usize) -> Result<Character> {
    let k = nonnegative(k)?;
    newton_power(c, k, false, cap)
}

/// Highest-weight extraction. Picks the dominant weight highest above the
/// origin (ties lexicographically smallest), removes that many copies of its
/// irreducible, and repeats. Works on the dominant part only, after checking
/// the input is Weyl-invariant.
pub fn decompose(rs: &RootSystem, c: &Character) -> Result<Decomposition> {
    if c.ty != *rs.cartan_type() {
        return Err(Error::MixedSystems(c.ty.to_string(), rs.cartan_type().to_string()));
    }
    for (w, &m) in &c.entries {
        for i in 0..rs.rank() {
            let image = c.mult(&rs.reflect(w, i));
            if image != m {
                return Err(Error::NotACharacter {
                    weight: w.to_string(),
                    mult: image as i128 - m as i128,
                });
            }
        }
    }
    let height = |w: &Weight| -> i64 { rs.root_coords_scaled(w).iter().sum() };
    let mut work: BTreeMap<(Reverse<i64>, Weight), i128> = c
        .dominant_part()
        .into_iter()
        .map(|(w, m)| ((Reverse(height(&w)), w), m as i128))
        .collect();
    let mut out = Decomposition::new();
    while let Some(((_, top), k)) = work.iter().next().map(|(key, &k)| (key.clone(), k)) {
        if k < 0 {
            return Err(Error::NotACharacter {
                weight: top.to_string(),
                mult: k,
            });
        }
        for (mu, m) in dominant_multiplicities(rs, &top)? {
            let key = (Reverse(height(&mu)), mu);
            let e = work.entry(key.clone()).or_insert(0);
            *e -= k * m as i128;
            if *e == 0 {
                work.remove(&key);
            }
        }
        out.insert(top, k as u128);
    }
    Ok(out)
}

/// Number of factors counted with multiplicity.
pub fn kappa(d: &Decomposition) -> u128 {
    d.values().sum()
}

/// Multiplicity of `λ - (α_r + … + α_s)` in the irreducible `A_m`-module of
/// highest weight `aδ_i + bδ_j` in characteristic `p` (0 for zero).
#[allow(clippy::too_many_arguments)]
pub fn seitz86_multiplicity(
    m: usize,
    a: i64,
    b: i64,
    i: usize,
    j: usize,
    r: usize,
    s: usize,
    p: u64,
) -> Result<u64> {
    let ok = m >= 2 && a > 0 && b > 0 && 1 <= r && r <= i && i < j && j <= s && s <= m;
    if !ok {
        return Err(Error::Contract(alloc::format!(
            "need 1 <= r <= i < j <= s <= m and a, b > 0; got m={} a={} b={} i={} j={} r={} s={}",
            m, a, b, i, j, r, s
        )));
    }
    let gap = (j - i) as u64;
    let n = a + b + (j - i) as i64;
    if p > 0 && n % p as i64 == 0 {
        Ok(gap)
    } else {
        Ok(gap + 1)
    }
}

/// True for B, C, F at `p = 2` and G at `p = 3` when `λ` has support on
/// both a short and a long simple root.
pub fn tensor_decomposable_predicate(ty: SimpleType, p: u64, lambda: &Weight) -> bool {
    let special = matches!(
        (ty.family, p),
        (Family::B, 2) | (Family::C, 2) | (Family::F, 2) | (Family::G, 3)
    );
    if !special || lambda.len() != ty.rank {
        return false;
    }
    let rs = RootSystem::new(ty);
    let short = rs.short_nodes();
    let on_short = (1..=ty.rank).any(|i| lambda.0[i - 1] > 0 && short.contains(&i));
    let on_long = (1..=ty.rank).any(|i| lambda.0[i - 1] > 0 && !short.contains(&i));
    on_short && on_long
}

/// For a character of a product of `A_1` factors: the largest weight
/// multiplicity, a lower bound on the number of composition factors since
/// every irreducible of such a group (in any characteristic) has
/// one-dimensional weight spaces.
pub fn min_factors_rank_one(c: &Character) -> Result<u128> {
    if c.ty.factors.iter().any(|t| t.family != Family::A || t.rank != 1) {
        return Err(Error::Contract(alloc::format!(
            "{} is not a product of A1 factors",
            c.ty
        )));
    }
    Ok(c.entries.values().copied().max().unwrap_or(0))
}
