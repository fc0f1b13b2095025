//! Verification of irreducible triples, power tables and rank-one factor
//! bounds, all at characteristic zero, plus lookups into modular dimension
//! data supplied by the caller.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::characters::{
    decompose, exterior_power, kappa, min_factors_rank_one, symmetric_power, weyl_character, weyl_dimension,
    Character, Decomposition,
};
use crate::embed::{ambient_group, form_sign, restrict, torus_assignment, EmbeddingSpec, FormType};
use crate::levels::Extension;
use crate::rootcore::generated_group;
use crate::{CartanType, Error, Family, GraphAut, Result, RootSystem, SimpleType, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    ModularFixtureOnly,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::ModularFixtureOnly => "modular-fixture-only",
        })
    }
}

/// Named boolean checks, in the order they were made.
pub type Checks = Vec<(String, bool)>;

fn first_failure(checks: &Checks) -> Option<&str> {
    checks.iter().find(|(_, ok)| !ok).map(|(name, _)| name.as_str())
}

/// Modular dimension of `V_X(weight)` quoted from published tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimFixture {
    pub x_type: SimpleType,
    pub weight: Weight,
    pub p: u64,
    pub dim: u128,
    pub cite: String,
}

pub fn fixture_lookup<'a>(fixtures: &'a [DimFixture], ty: SimpleType, w: &Weight, p: u64) -> Result<&'a DimFixture> {
    fixtures
        .iter()
        .find(|f| f.x_type == ty && f.weight == *w && f.p == p)
        .ok_or_else(|| Error::MissingFixture(format!("{} {} p={}", ty, w, p)))
}

/// Every `p = 0` row must agree with the Weyl dimension formula.
pub fn check_fixtures(fixtures: &[DimFixture]) -> Result<()> {
    for f in fixtures {
        let rs = RootSystem::new(f.x_type);
        rs.check(&f.weight)?;
        if f.p == 0 {
            let d = weyl_dimension(&rs, &f.weight)?;
            if d != f.dim {
                return Err(Error::Contract(format!(
                    "fixture {} {} p=0 says {}, Weyl dimension is {}",
                    f.x_type, f.weight, f.dim, d
                )));
            }
        }
    }
    Ok(())
}

/// An inequality `factor · dim V_1 ≠ dim V` that rules out a prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exclusion {
    pub label: String,
    pub p: u64,
    pub lhs: u128,
    pub rhs: u128,
    /// True when `lhs != rhs`, i.e. the prime is excluded.
    pub excluded: bool,
}

fn fx(fixtures: &[DimFixture], ty: &str, w: &str, p: u64) -> Result<u128> {
    let ty: SimpleType = ty.parse()?;
    let w: Weight = w.parse()?;
    Ok(fixture_lookup(fixtures, ty, &w, p)?.dim)
}

/// The dimension inequalities that exclude small primes from the
/// `C10 ⊃ A5`, `D10 ⊃ A3` and `D14 ⊃ D4` configurations, together with the
/// characteristic-zero equalities that survive.
pub fn modular_exclusions(fixtures: &[DimFixture]) -> Result<Vec<Exclusion>> {
    let mut out = Vec::new();
    let mut push = |label: &str, p: u64, lhs: u128, rhs: u128| {
        out.push(Exclusion {
            label: label.to_string(),
            p,
            lhs,
            rhs,
            excluded: lhs != rhs,
        })
    };
    for p in [3, 0] {
        let v = fx(fixtures, "C10", "0,0,1,0,0,0,0,0,0,0", p)?;
        let v1 = fx(fixtures, "A5", "1,0,0,2,0", p)?;
        push("C10 λ3 vs 2·A5(δ1+2δ4)", p, 2 * v1, v);
    }
    let d10 = weyl_dimension(&RootSystem::new("D10".parse()?), &Weight::fundamental(10, 9))?;
    for p in [5, 7, 0] {
        let v1 = fx(fixtures, "A3", "3,1,1", p)?;
        push("D10 λ9 vs 2·A3(3δ1+δ2+δ3)", p, 2 * v1, d10);
    }
    let d14 = weyl_dimension(&RootSystem::new("D14".parse()?), &Weight::fundamental(14, 13))?;
    for p in [3, 5, 7, 0] {
        let v1 = fx(fixtures, "D4", "1,1,1,1", p)?;
        push("D14 λ13 vs 2·D4(δ1+δ2+δ3+δ4)", p, 2 * v1, d14);
    }
    Ok(out)
}

/// An irreducible triple `(G, X.F, V)` with `G` determined by `V_X(delta)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleSpec {
    pub name: String,
    pub x_type: SimpleType,
    pub delta: Weight,
    pub extension: Extension,
    pub generators: Vec<GraphAut>,
    /// Candidate ambient weights; spin pairs list both.
    pub lambdas: Vec<Weight>,
    pub expected_factors: Option<Decomposition>,
    pub expected_kappa: Option<u128>,
    pub p_conditions: String,
    /// The restriction is a sum of isomorphic modules.
    pub isomorphic_summands: bool,
    /// Fixture rows backing a row only visible in positive characteristic.
    pub modular: Option<Vec<(SimpleType, Weight, u64)>>,
    /// Form on `W` when the row lives at `p = 2`.
    pub modular_form: Option<FormType>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordReport {
    pub name: String,
    pub status: Status,
    pub lambda: Option<Weight>,
    pub ambient: Option<SimpleType>,
    pub factors: Decomposition,
    pub kappa: u128,
    pub dim: u128,
    pub factor_dims: Vec<u128>,
    pub checks: Checks,
    pub note: Option<String>,
}

impl CliffordReport {
    pub fn orbit_ok(&self) -> bool {
        self.check("orbit")
    }

    pub fn dims_ok(&self) -> bool {
        self.check("dims")
    }

    pub fn divisibility_ok(&self) -> bool {
        self.check("divisibility")
    }

    pub fn check(&self, name: &str) -> bool {
        self.checks.iter().any(|(n, ok)| n == name && *ok)
    }

    pub fn first_failure(&self) -> Option<&str> {
        first_failure(&self.checks)
    }
}

/// True if the keys of `d` form one orbit under `group`.
fn single_orbit(rs: &RootSystem, group: &[GraphAut], keys: &BTreeSet<Weight>) -> Result<bool> {
    let first = match keys.iter().next() {
        Some(w) => w,
        None => return Ok(false),
    };
    let mut orbit = BTreeSet::new();
    for g in group {
        orbit.insert(rs.apply_graph_aut(g, first)?);
    }
    Ok(orbit == *keys)
}

fn matches_up_to(rs: &RootSystem, group: &[GraphAut], got: &Decomposition, want: &Decomposition) -> Result<bool> {
    for g in group {
        let mut image = Decomposition::new();
        for (w, &m) in got {
            image.insert(rs.apply_graph_aut(g, w)?, m);
        }
        if image == *want {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Natural-module embedding of `X` through `V_X(delta)`, with the form
/// decided by the sign criterion (or supplied for `p = 2`).
pub fn triple_embedding(rs: &RootSystem, delta: &Weight, form: Option<FormType>, cap: usize) -> Result<EmbeddingSpec> {
    let ch = weyl_character(rs, delta, cap)?;
    let form = match form {
        Some(f) => f,
        None => form_sign(rs, delta)?,
    };
    torus_assignment(rs, delta, &ch, form)
}

fn modular_report(t: &TripleSpec, keys: &[(SimpleType, Weight, u64)], fixtures: &[DimFixture]) -> CliffordReport {
    let mut checks = Checks::new();
    let mut ambient = None;
    for (ty, w, p) in keys {
        let found = fixture_lookup(fixtures, *ty, w, *p);
        checks.push((format!("fixture {} {} p={}", ty, w, p), found.is_ok()));
        if let (Ok(f), true) = (found, *ty == t.x_type && *w == t.delta) {
            // dim W fixes the ambient group once the form is known
            if let Some(form) = t.modular_form {
                ambient = ambient_group(f.dim, form, 0).ok();
            }
        }
    }
    if let Some(g) = ambient {
        let rank_ok = t.lambdas.iter().all(|l| l.rank() == g.rank);
        checks.push((format!("ambient {}", g), rank_ok));
    }
    CliffordReport {
        name: t.name.clone(),
        status: Status::ModularFixtureOnly,
        lambda: None,
        ambient,
        factors: Decomposition::new(),
        kappa: 0,
        dim: 0,
        factor_dims: Vec::new(),
        checks,
        note: Some(String::from("modular: fixture-checked")),
    }
}

/// Builds the embedding, restricts each candidate `λ` and checks the
/// Clifford picture: expected factors, κ, a single orbit of the extension,
/// distinctness, dimension sum and divisibility.
pub fn clifford_check(t: &TripleSpec, fixtures: &[DimFixture], cap: usize) -> Result<CliffordReport> {
    if let Some(keys) = &t.modular {
        return Ok(modular_report(t, keys, fixtures));
    }
    let rs = RootSystem::new(t.x_type);
    let spec = triple_embedding(&rs, &t.delta, None, cap)?;
    let g = RootSystem::new(spec.ambient);
    let group = generated_group(rs.rank(), &t.generators);
    let mut best: Option<(Weight, Decomposition)> = None;
    for lambda in &t.lambdas {
        g.check(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let res = restrict(spec.ambient, &weyl_character(&g, lambda, cap)?, &spec)?;
        let d = decompose(&rs, &res)?;
        let hit = match &t.expected_factors {
            Some(want) => matches_up_to(&rs, &group, &d, want)?,
            None => true,
        };
        if hit || best.is_none() {
            best = Some((lambda.clone(), d));
        }
        if hit {
            break;
        }
    }
    let (lambda, factors) = best.ok_or_else(|| Error::Contract(format!("{} lists no ambient weight", t.name)))?;
    let k = kappa(&factors);
    let dim = weyl_dimension(&g, &lambda)?;
    let mut factor_dims = Vec::new();
    let mut total = 0u128;
    for (w, &m) in &factors {
        let d = weyl_dimension(&rs, w)?;
        factor_dims.push(d);
        total += m * d;
    }
    let keys: BTreeSet<Weight> = factors.keys().cloned().collect();
    let order = group.len() as u128;
    let distinct = factors.values().all(|&m| m == 1);

    let mut checks = Checks::new();
    if let Some(want) = &t.expected_factors {
        checks.push(("factors".into(), matches_up_to(&rs, &group, &factors, want)?));
    }
    if let Some(want) = t.expected_kappa {
        checks.push(("kappa".into(), k == want));
    }
    checks.push(("orbit".into(), single_orbit(&rs, &group, &keys)?));
    checks.push(("distinct".into(), distinct != t.isomorphic_summands));
    checks.push(("dims".into(), total == dim));
    checks.push(("divisibility".into(), k > 0 && order.is_multiple_of(k) && dim % k == 0));
    let status = if first_failure(&checks).is_none() {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(CliffordReport {
        name: t.name.clone(),
        status,
        lambda: Some(lambda),
        ambient: Some(spec.ambient),
        factors,
        kappa: k,
        dim,
        factor_dims,
        checks,
        note: t.isomorphic_summands.then(|| String::from("isomorphic summands: not an irreducible triple")),
    })
}

fn st(s: &str) -> SimpleType {
    s.parse().expect("static type")
}

fn wt(s: &str) -> Weight {
    s.parse().expect("static weight")
}

fn decomp(entries: &[(&str, u128)]) -> Decomposition {
    entries.iter().map(|(w, m)| (wt(w), *m)).collect()
}

/// The triples with `X.F` irreducible on `V` but `X` reducible or
/// irreducible as tabulated, plus the isomorphic-summand non-example.
pub fn clifford_rows() -> Vec<TripleSpec> {
    let a5 = RootSystem::new(st("A5"));
    let a3 = RootSystem::new(st("A3"));
    let a2 = RootSystem::new(st("A2"));
    let d4 = RootSystem::new(st("D4"));
    let flip = |rs: &RootSystem| GraphAut::flip(rs).expect("type A");
    let s3 = vec![
        GraphAut::triality(&d4).expect("D4"),
        GraphAut::new(&d4, vec![0, 1, 3, 2]).expect("D4"),
    ];
    let base = |name: &str, x: &str, delta: &str, ext: Extension, gens: Vec<GraphAut>, lambdas: &[Weight]| TripleSpec {
        name: name.to_string(),
        x_type: st(x),
        delta: wt(delta),
        extension: ext,
        generators: gens,
        lambdas: lambdas.to_vec(),
        expected_factors: None,
        expected_kappa: None,
        p_conditions: String::new(),
        isomorphic_summands: false,
        modular: None,
        modular_form: None,
    };
    let f = Weight::fundamental;

    let mut rows = Vec::new();
    let mut t = base("C10 > A5.2, λ3", "A5", "0,0,1,0,0", Extension::Two, vec![flip(&a5)], &[f(10, 3)]);
    t.expected_factors = Some(decomp(&[("1,0,0,2,0", 1), ("0,2,0,0,1", 1)]));
    t.expected_kappa = Some(2);
    t.p_conditions = "p != 2,3".into();
    rows.push(t);

    let mut t = base("C10 > A5.2, λ2", "A5", "0,0,1,0,0", Extension::Two, vec![flip(&a5)], &[f(10, 2)]);
    t.expected_factors = Some(decomp(&[("0,1,0,1,0", 1)]));
    t.expected_kappa = Some(1);
    t.p_conditions = "p != 2".into();
    rows.push(t);

    let mut t = base("D10 > A3.2, λ9/λ10", "A3", "0,2,0", Extension::Two, vec![flip(&a3)], &[f(10, 9), f(10, 10)]);
    t.expected_factors = Some(decomp(&[("3,1,1", 1), ("1,1,3", 1)]));
    t.expected_kappa = Some(2);
    t.p_conditions = "p != 2,3,5,7".into();
    rows.push(t);

    let mut t = base("B3 > A2.2, 2λ1", "A2", "1,1", Extension::Two, vec![flip(&a2)], &[wt("2,0,0")]);
    t.expected_factors = Some(decomp(&[("2,2", 1)]));
    t.expected_kappa = Some(1);
    t.p_conditions = "p = 3".into();
    t.modular = Some(vec![(st("A2"), wt("1,1"), 3)]);
    t.modular_form = Some(FormType::Symmetric);
    rows.push(t);

    let mut t = base("D7 > A3.2, λ6/λ7", "A3", "1,0,1", Extension::Two, vec![flip(&a3)], &[f(7, 6), f(7, 7)]);
    t.expected_factors = Some(decomp(&[("1,1,1", 1)]));
    t.expected_kappa = Some(1);
    t.p_conditions = "p = 2".into();
    t.modular = Some(vec![(st("A3"), wt("1,0,1"), 2)]);
    t.modular_form = Some(FormType::Symmetric);
    rows.push(t);

    let mut t = base("D13 > D4.Y, λ12/λ13", "D4", "0,1,0,0", Extension::S3, s3.clone(), &[f(13, 12), f(13, 13)]);
    t.expected_factors = Some(decomp(&[("1,1,1,1", 1)]));
    t.expected_kappa = Some(1);
    t.p_conditions = "p = 2, 1 != Y <= S3".into();
    t.modular = Some(vec![(st("D4"), wt("0,1,0,0"), 2)]);
    t.modular_form = Some(FormType::Symmetric);
    rows.push(t);

    let mut t = base("D14 > D4.S3, λ13/λ14", "D4", "0,1,0,0", Extension::S3, s3, &[f(14, 13), f(14, 14)]);
    t.expected_factors = Some(decomp(&[("1,1,1,1", 2)]));
    t.expected_kappa = Some(2);
    t.p_conditions = "p != 2,3,5,7".into();
    t.isomorphic_summands = true;
    rows.push(t);
    rows
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PowerKind {
    Exterior,
    Symmetric,
}

impl fmt::Display for PowerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PowerKind::Exterior => "Λ",
            PowerKind::Symmetric => "S",
        })
    }
}

/// `X.F < G` with `W|_X = V_X(delta)` and the power `Λ^k W` or `S^k W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerRow {
    pub g: SimpleType,
    pub x_type: CartanType,
    pub delta: Weight,
    pub generators: Vec<GraphAut>,
    pub kind: PowerKind,
    pub k: i64,
}

impl PowerRow {
    pub fn name(&self) -> String {
        let ext = match generated_group(self.x_type.rank(), &self.generators).len() {
            1 => String::new(),
            2 => String::from(".2"),
            3 => String::from(".3"),
            6 => String::from(".S3"),
            n => format!(".{}", n),
        };
        format!("{} > {}{}, {}^{}", self.g, self.x_type, ext, self.kind, self.k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerReport {
    pub name: String,
    pub status: Status,
    /// Composition factors of the power as a `G`-module.
    pub g_factors: Decomposition,
    /// For each `G`-factor, its decomposition over `X`.
    pub restricted: Vec<(Weight, Decomposition)>,
    pub checks: Checks,
    pub note: Option<String>,
}

fn ambient_form(g: SimpleType) -> FormType {
    match g.family {
        Family::A => FormType::None,
        Family::C => FormType::Skew,
        _ => FormType::Symmetric,
    }
}

fn power_row_inner(row: &PowerRow, cap: usize) -> Result<PowerReport> {
    let rx = RootSystem::of(&row.x_type);
    let rg = RootSystem::new(row.g);
    let form = ambient_form(row.g);
    let mut checks = Checks::new();
    if form != FormType::None {
        checks.push(("form".into(), form_sign(&rx, &row.delta)? == form));
    }
    let w = weyl_character(&rx, &row.delta, cap)?;
    let spec = torus_assignment(&rx, &row.delta, &w, form)?;
    if spec.ambient != row.g {
        return Err(Error::Contract(format!("V_X({}) embeds in {}, not {}", row.delta, spec.ambient, row.g)));
    }
    let nat = weyl_character(&rg, &Weight::fundamental(row.g.rank, 1), cap)?;
    let power = match row.kind {
        PowerKind::Exterior => exterior_power(&nat, row.k, cap)?,
        PowerKind::Symmetric => symmetric_power(&nat, row.k, cap)?,
    };
    let g_factors = decompose(&rg, &power)?;
    let group = generated_group(rx.rank(), &row.generators);
    let mut restricted = Vec::new();
    let mut irreducible = true;
    for lambda in g_factors.keys() {
        let ch = weyl_character(&rg, lambda, cap)?;
        let d = decompose(&rx, &restrict(row.g, &ch, &spec)?)?;
        let keys: BTreeSet<Weight> = d.keys().cloned().collect();
        let ok = d.values().all(|&m| m == 1) && single_orbit(&rx, &group, &keys)? && group.len().is_multiple_of(keys.len());
        irreducible &= ok;
        restricted.push((lambda.clone(), d));
    }
    checks.push(("single-orbit".into(), irreducible));
    let total: u128 = g_factors
        .iter()
        .map(|(l, &m)| weyl_dimension(&rg, l).map(|d| d * m))
        .sum::<Result<u128>>()?;
    checks.push(("dims".into(), total == power.dim()));
    let status = if first_failure(&checks).is_none() {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(PowerReport {
        name: row.name(),
        status,
        g_factors,
        restricted,
        checks,
        note: None,
    })
}

/// Checks that `X.F` acts irreducibly on every `G`-composition factor of the
/// power. Rows over the entry cap come back skipped.
pub fn verify_power_row(row: &PowerRow, cap: usize) -> Result<PowerReport> {
    match power_row_inner(row, cap) {
        Err(Error::CapExceeded { needed, cap }) => Ok(PowerReport {
            name: row.name(),
            status: Status::Skipped,
            g_factors: Decomposition::new(),
            restricted: Vec::new(),
            checks: Checks::new(),
            note: Some(format!("skipped: beyond desk scale (needs {}, cap {})", needed, cap)),
        }),
        other => other,
    }
}

fn product_type(t: &str, copies: usize) -> CartanType {
    CartanType {
        factors: vec![st(t); copies],
    }
}

/// Block permutation of a product of `copies` equal factors of rank `r`.
fn block_perm(r: usize, images: &[usize]) -> GraphAut {
    GraphAut {
        perm: images.iter().flat_map(|&b| (0..r).map(move |i| b * r + i)).collect(),
    }
}

/// Characteristic-zero rows of the exterior and symmetric power tables,
/// instantiated at small ranks where a row is a family.
pub fn power_rows() -> Vec<PowerRow> {
    let mut rows = Vec::new();
    let mut add = |g: String, x: CartanType, delta: Weight, gens: Vec<GraphAut>, kind: PowerKind, ks: &[i64]| {
        for &k in ks {
            rows.push(PowerRow {
                g: st(&g),
                x_type: x.clone(),
                delta: delta.clone(),
                generators: gens.clone(),
                kind,
                k,
            });
        }
    };
    let f = Weight::fundamental;
    let simple = |s: &str| CartanType::simple(st(s));
    let ext = PowerKind::Exterior;
    let sym = PowerKind::Symmetric;

    for l in 2..=3usize {
        let ks: Vec<i64> = (2..2 * l as i64).collect();
        add(format!("A{}", 2 * l), simple(&format!("B{}", l)), f(l, 1), vec![], ext, &ks);
    }
    for l in 4..=5usize {
        let x = format!("D{}", l);
        let swap = GraphAut::spin_swap(&RootSystem::new(st(&x))).expect("D");
        let ks: Vec<i64> = (2..2 * l as i64 - 1).collect();
        add(format!("A{}", 2 * l - 1), simple(&x), f(l, 1), vec![swap], ext, &ks);
    }
    for l in 2..=3usize {
        let n = (l + 1) * (l + 1) - 1;
        let mut delta = vec![0i64; 2 * l];
        delta[0] = 1;
        delta[l] = 1;
        let swap = block_perm(l, &[1, 0]);
        let x = product_type(&format!("A{}", l), 2);
        add(format!("A{}", n), x, Weight(delta), vec![swap], ext, &[2, n as i64 - 1]);
    }
    for l in 3..=5usize {
        let n = (l * l + l - 2) / 2;
        add(format!("A{}", n), simple(&format!("A{}", l)), f(l, 2), vec![], ext, &[2, n as i64 - 1]);
    }
    for l in 2..=4usize {
        let n = (l * l + 3 * l) / 2;
        add(format!("A{}", n), simple(&format!("A{}", l)), f(l, 1).scale(2), vec![], ext, &[2, n as i64 - 1]);
    }
    add("A26".into(), simple("E6"), f(6, 1), vec![], ext, &[2, 3, 4, 23, 24, 25]);
    add("A15".into(), simple("D5"), f(5, 5), vec![], ext, &[2, 3, 13, 14]);
    add("C28".into(), simple("E7"), f(7, 7), vec![], ext, &[2, 3, 4, 5]);
    add("C16".into(), simple("D6"), f(6, 6), vec![], ext, &[2, 3]);
    let a5 = RootSystem::new(st("A5"));
    add("C10".into(), simple("A5"), f(5, 3), vec![GraphAut::flip(&a5).expect("A")], ext, &[2, 3]);
    add("C7".into(), simple("C3"), f(3, 3), vec![], ext, &[2, 3]);
    add(
        "C4".into(),
        product_type("A1", 3),
        wt("1,1,1"),
        vec![block_perm(1, &[1, 0, 2]), block_perm(1, &[1, 2, 0])],
        ext,
        &[2, 3],
    );

    for l in 2..=4usize {
        add(format!("A{}", 2 * l - 1), simple(&format!("C{}", l)), f(l, 1), vec![], sym, &[2, 3, 4]);
    }
    add("B3".into(), simple("G2"), f(2, 1), vec![], sym, &[2]);
    rows
}

/// The `A_1`-restriction lemmas: each fixes `Y`, the ambient `SL(W)` and an
/// ordering of the weights of `W`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RankOneLemma {
    /// `A3 > A1`, `W|_Y = U ⊕ U`.
    A3TwoCopies,
    /// `A5 > A1`, `W|_Y = U ⊕ U ⊕ U`.
    A5ThreeCopies,
    /// `A8 > A1A1`, `W|_Y` irreducible of highest weight `2(η1+η2)`.
    A8DoubleTensor,
    /// `A3 > A1A1`, `W|_Y` irreducible of highest weight `η1+η2`.
    A3Tensor,
    /// `A7 > A1A1A1`, `W|_Y` irreducible of highest weight `η1+η2+η3`.
    A7TripleTensor,
}

impl RankOneLemma {
    pub const ALL: [RankOneLemma; 5] = [
        RankOneLemma::A3TwoCopies,
        RankOneLemma::A5ThreeCopies,
        RankOneLemma::A8DoubleTensor,
        RankOneLemma::A3Tensor,
        RankOneLemma::A7TripleTensor,
    ];

    pub fn ambient(self) -> SimpleType {
        st(match self {
            RankOneLemma::A3TwoCopies | RankOneLemma::A3Tensor => "A3",
            RankOneLemma::A5ThreeCopies => "A5",
            RankOneLemma::A8DoubleTensor => "A8",
            RankOneLemma::A7TripleTensor => "A7",
        })
    }

    /// Images of `ε_1, …, ε_{n+1}` in the weights of `Y`.
    pub fn embedding(self) -> EmbeddingSpec {
        let (x, theta): (CartanType, Vec<&str>) = match self {
            RankOneLemma::A3TwoCopies => (product_type("A1", 1), vec!["1", "-1", "1", "-1"]),
            RankOneLemma::A5ThreeCopies => (product_type("A1", 1), vec!["1", "-1", "1", "-1", "1", "-1"]),
            RankOneLemma::A8DoubleTensor => (
                product_type("A1", 2),
                vec!["2,2", "0,2", "2,0", "0,0", "-2,2", "2,-2", "-2,0", "0,-2", "-2,-2"],
            ),
            RankOneLemma::A3Tensor => (product_type("A1", 2), vec!["1,1", "1,-1", "-1,1", "-1,-1"]),
            RankOneLemma::A7TripleTensor => (
                product_type("A1", 3),
                vec!["1,1,1", "-1,1,1", "1,-1,1", "1,1,-1", "-1,-1,1", "-1,1,-1", "1,-1,-1", "-1,-1,-1"],
            ),
        };
        let theta: Vec<Weight> = theta.into_iter().map(wt).collect();
        let ambient = self.ambient();
        EmbeddingSpec {
            delta: theta[0].clone(),
            x_type: x,
            dim: theta.len() as u128,
            form: FormType::None,
            ambient,
            theta,
        }
    }

    /// Lower bound on the number of composition factors claimed for
    /// `V_G(λ)|_Y` at `p = 0`, or `None` when no hypothesis applies.
    pub fn claimed_bound(self, a: &Weight) -> Option<u128> {
        let a = |i: usize| a.0[i - 1];
        match self {
            RankOneLemma::A3TwoCopies => {
                if a(1) == 5 || (a(1), a(3)) == (1, 2) {
                    Some(7)
                } else if (a(1), a(3)) == (0, 2) || (a(1), a(3)) == (2, 0) || (a(1) == 0 && a(3) == 0) || a(1) * a(2) != 0
                {
                    Some(4)
                } else {
                    None
                }
            }
            RankOneLemma::A5ThreeCopies => {
                if a(1) >= 2 || a(2) != 0 || a(3) == 2 {
                    Some(7)
                } else if a(1) * a(3) != 0 {
                    Some(4)
                } else if a(1) != 0 || a(3) != 0 {
                    Some(3)
                } else {
                    None
                }
            }
            RankOneLemma::A8DoubleTensor => (a(2) != 0).then_some(3),
            RankOneLemma::A3Tensor => (a(1) != 0 && a(2) == 1 && a(3) == 0).then_some(3),
            RankOneLemma::A7TripleTensor => (a(2) != 0 || a(3) != 0).then_some(4),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankOneBound {
    /// Largest weight multiplicity of the restriction.
    pub computed: u128,
    pub claimed: Option<u128>,
}

impl RankOneBound {
    pub fn holds(&self) -> bool {
        self.claimed.is_none_or(|c| self.computed >= c)
    }
}

/// Restricts `V_G(λ)` (and its dual) along the lemma's embedding and
/// returns the smaller of the two multiplicity bounds.
pub fn rank_one_bound(lemma: RankOneLemma, lambda: &Weight, cap: usize) -> Result<RankOneBound> {
    let g = lemma.ambient();
    let rg = RootSystem::new(g);
    rg.check(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let spec = lemma.embedding();
    let ch = weyl_character(&rg, lambda, cap)?;
    let v = min_factors_rank_one(&restrict(g, &ch, &spec)?)?;
    let v_dual = min_factors_rank_one(&restrict(g, &ch.dual(), &spec)?)?;
    Ok(RankOneBound {
        computed: v.min(v_dual),
        claimed: if lambda.is_zero() { None } else { lemma.claimed_bound(lambda) },
    })
}

/// Characters of `X` built from a decomposition, used to double-check
/// restriction reports against the full weight multiset.
pub fn character_from_factors(rs: &RootSystem, d: &Decomposition, cap: usize) -> Result<Character> {
    crate::characters::character_of(rs, d, cap)
}

/// Number of distinct composition factors of a character.
pub fn distinct_factors(rs: &RootSystem, c: &Character) -> Result<usize> {
    Ok(decompose(rs, c)?.len())
}

/// Distinct `G`-factors of `Λ^k V_G(λ)`.
pub fn wedge_distinct_factors(rs: &RootSystem, lambda: &Weight, k: i64, cap: usize) -> Result<usize> {
    let v = weyl_character(rs, lambda, cap)?;
    distinct_factors(rs, &exterior_power(&v, k, cap)?)
}

/// The extension orders allowed for a `κ`: `κ` must divide `|F|`.
pub fn kappa_divides(ext: Extension, k: u128) -> bool {
    k > 0 && (ext.order() as u128).is_multiple_of(k)
}
