//! Root data, weight-lattice arithmetic, Weyl-group combinatorics and
//! diagram automorphisms. Node numbering follows Bourbaki; weights are
//! Dynkin-label vectors (coefficients on the fundamental weights).
//!
//! Simple roots carry an integer Gram matrix `G`; the Cartan matrix is
//! `A[i][j] = 2 G[i][j] / G[j][j]`, so the labels of `α_i` form row `i` of `A`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Deref, Neg, Sub};
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Family> {
        Some(match c {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<SimpleType> {
        let bound = match family {
            Family::A if rank < 1 => Some("A needs rank >= 1"),
            Family::B if rank < 2 => Some("B needs rank >= 2"),
            Family::C if rank < 2 => Some("C needs rank >= 2"),
            Family::D if rank < 3 => Some("D needs rank >= 3"),
            Family::E if !(6..=8).contains(&rank) => Some("E needs rank 6, 7 or 8"),
            Family::F if rank != 4 => Some("F needs rank 4"),
            Family::G if rank != 2 => Some("G needs rank 2"),
            _ => None,
        };
        match bound {
            Some(bound) => Err(Error::InvalidType {
                family: family.letter(),
                rank,
                bound,
            }),
            None => Ok(SimpleType { family, rank }),
        }
    }

    /// Number of positive roots.
    pub fn num_pos_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => [36, 63, 120][n - 6],
            Family::F => 24,
            Family::G => 6,
        }
    }

    fn gram(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut g = vec![vec![0i64; n]; n];
        let edge = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            g[i - 1][j - 1] = v;
            g[j - 1][i - 1] = v;
        };
        match self.family {
            Family::A => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                for i in 1..n {
                    edge(&mut g, i, i + 1, -1);
                }
            }
            Family::B => {
                for i in 0..n {
                    g[i][i] = 4;
                }
                g[n - 1][n - 1] = 2;
                for i in 1..n {
                    edge(&mut g, i, i + 1, -2);
                }
            }
            Family::C => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                g[n - 1][n - 1] = 4;
                for i in 1..n - 1 {
                    edge(&mut g, i, i + 1, -1);
                }
                edge(&mut g, n - 1, n, -2);
            }
            Family::D => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                for i in 1..n - 1 {
                    edge(&mut g, i, i + 1, -1);
                }
                edge(&mut g, n - 2, n, -1);
            }
            Family::E => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                edge(&mut g, 1, 3, -1);
                edge(&mut g, 2, 4, -1);
                for i in 3..n {
                    edge(&mut g, i, i + 1, -1);
                }
            }
            Family::F => {
                g[0][0] = 4;
                g[1][1] = 4;
                g[2][2] = 2;
                g[3][3] = 2;
                edge(&mut g, 1, 2, -2);
                edge(&mut g, 2, 3, -2);
                edge(&mut g, 3, 4, -1);
            }
            Family::G => {
                g[0][0] = 2;
                g[1][1] = 6;
                edge(&mut g, 1, 2, -3);
            }
        }
        g
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<SimpleType> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::Parse(format!("unknown type '{}'", s)))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("unknown type '{}'", s)))?;
        SimpleType::new(family, rank)
    }
}

/// A product of simple types, e.g. `A1xA1xA1`. Nodes are numbered
/// consecutively across the factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub factors: Vec<SimpleType>,
}

impl CartanType {
    pub fn simple(t: SimpleType) -> CartanType {
        CartanType { factors: vec![t] }
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|t| t.rank).sum()
    }

    pub fn as_simple(&self) -> Option<SimpleType> {
        match self.factors.as_slice() {
            [t] => Some(*t),
            _ => None,
        }
    }
}

impl From<SimpleType> for CartanType {
    fn from(t: SimpleType) -> CartanType {
        CartanType::simple(t)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{}", t)?;
        }
        Ok(())
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<CartanType> {
        let factors = s
            .split('x')
            .map(SimpleType::from_str)
            .collect::<Result<Vec<_>>>()?;
        if factors.is_empty() {
            return Err(Error::Parse(format!("unknown type '{}'", s)));
        }
        Ok(CartanType { factors })
    }
}

/// Integer Dynkin labels. Lexicographic order is the canonical order for
/// serialization.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Weight {
        Weight(vec![0; rank])
    }

    /// The fundamental weight of node `i` (1-based).
    pub fn fundamental(rank: usize, i: usize) -> Weight {
        let mut w = Weight::zero(rank);
        w.0[i - 1] = 1;
        w
    }

    pub fn from_slice(labels: &[i64]) -> Weight {
        Weight(labels.to_vec())
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Dominant with every label below `p`; `p = 0` means characteristic zero.
    pub fn is_restricted(&self, p: u64) -> bool {
        self.is_dominant() && (p == 0 || self.0.iter().all(|&x| (x as u64) < p))
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|x| x * k).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }
}

impl Deref for Weight {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", x)?;
        }
        Ok(())
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Weight> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad weight '{}'", s)))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

/// Exact rational coordinates on the simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootCoords(pub Vec<BigRational>);

impl RootCoords {
    pub fn from_integers(c: &[i64]) -> RootCoords {
        RootCoords(c.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
    }

    pub fn height(&self) -> BigRational {
        self.0.iter().fold(BigRational::zero(), |acc, x| acc + x)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    /// Integer coordinates, if every coordinate is integral and fits.
    pub fn to_integers(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None })
            .collect()
    }
}

/// Diagram automorphism, acting on labels by `(σ·w)_i = w_{perm[i]}`
/// (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphAut {
    pub perm: Vec<usize>,
}

impl GraphAut {
    pub fn identity(rank: usize) -> GraphAut {
        GraphAut {
            perm: (0..rank).collect(),
        }
    }

    /// Validates that `perm` is a permutation preserving the Cartan matrix.
    pub fn new(rs: &RootSystem, perm: Vec<usize>) -> Result<GraphAut> {
        let n = rs.rank();
        if perm.len() != n {
            return Err(Error::InvalidAutomorphism);
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidAutomorphism);
            }
            seen[p] = true;
        }
        for i in 0..n {
            for j in 0..n {
                if rs.cartan[perm[i]][perm[j]] != rs.cartan[i][j] {
                    return Err(Error::InvalidAutomorphism);
                }
            }
        }
        Ok(GraphAut { perm })
    }

    /// From 1-based images: `images[i-1] = j` means `(σ·w)_i = w_j`.
    pub fn from_images(rs: &RootSystem, images: &[usize]) -> Result<GraphAut> {
        if images.contains(&0) {
            return Err(Error::InvalidAutomorphism);
        }
        GraphAut::new(rs, images.iter().map(|j| j - 1).collect())
    }

    /// The involution of an A_m or E_6 diagram.
    pub fn flip(rs: &RootSystem) -> Result<GraphAut> {
        let t = rs.simple_type().ok_or(Error::InvalidAutomorphism)?;
        let n = t.rank;
        match (t.family, n) {
            (Family::A, _) => GraphAut::new(rs, (0..n).rev().collect()),
            (Family::E, 6) => GraphAut::new(rs, vec![5, 1, 4, 3, 2, 0]),
            _ => Err(Error::InvalidAutomorphism),
        }
    }

    /// The swap of the two spin nodes of D_m.
    pub fn spin_swap(rs: &RootSystem) -> Result<GraphAut> {
        let t = rs.simple_type().ok_or(Error::InvalidAutomorphism)?;
        if t.family != Family::D {
            return Err(Error::InvalidAutomorphism);
        }
        let n = t.rank;
        let mut p: Vec<usize> = (0..n).collect();
        p.swap(n - 2, n - 1);
        GraphAut::new(rs, p)
    }

    /// Triality of D_4 cycling the nodes 1, 3, 4: labels `(c1,c2,c3,c4)`
    /// go to `(c3,c2,c4,c1)`.
    pub fn triality(rs: &RootSystem) -> Result<GraphAut> {
        match rs.simple_type() {
            Some(SimpleType {
                family: Family::D,
                rank: 4,
            }) => GraphAut::new(rs, vec![2, 1, 3, 0]),
            _ => Err(Error::InvalidAutomorphism),
        }
    }

    pub fn compose(&self, other: &GraphAut) -> GraphAut {
        // (self ∘ other)·w: first other, then self.
        GraphAut {
            perm: self.perm.iter().map(|&i| other.perm[i]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn order(&self) -> usize {
        let mut g = self.clone();
        let mut k = 1;
        while !g.is_identity() {
            g = self.compose(&g);
            k += 1;
        }
        k
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        Weight(self.perm.iter().map(|&j| w.0[j]).collect())
    }
}

/// The group generated by a set of diagram automorphisms.
pub fn generated_group(rank: usize, gens: &[GraphAut]) -> Vec<GraphAut> {
    let mut group: BTreeSet<GraphAut> = BTreeSet::new();
    let mut frontier = vec![GraphAut::identity(rank)];
    while let Some(g) = frontier.pop() {
        if group.insert(g.clone()) {
            for s in gens {
                frontier.push(s.compose(&g));
            }
        }
    }
    group.into_iter().collect()
}

/// Immutable root datum.
#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: CartanType,
    rank: usize,
    gram: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    pos_roots: Vec<Vec<i64>>,
    root_labels: Vec<Weight>,
    coroots: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    rho: Weight,
    inv_num: Vec<Vec<i64>>,
    inv_den: i64,
    e_const: i64,
}

fn block_diag(blocks: &[Vec<Vec<i64>>]) -> Vec<Vec<i64>> {
    let n: usize = blocks.iter().map(|b| b.len()).sum();
    let mut m = vec![vec![0; n]; n];
    let mut off = 0;
    for b in blocks {
        for (i, row) in b.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m[off + i][off + j] = v;
            }
        }
        off += b.len();
    }
    m
}

/// Exact inverse of an integer matrix as (adjugate-style numerators, denominator).
fn exact_inverse(a: &[Vec<i64>]) -> (Vec<Vec<i64>>, i64) {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row
                .iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    let mut det = BigRational::one();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("Cartan matrices are invertible");
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for x in m[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..2 * n {
                    let v = &m[col][c] * &f;
                    m[r][c] -= v;
                }
            }
        }
    }
    let det = det.to_integer();
    let num = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (&m[i][n + j] * BigRational::from_integer(det.clone()))
                        .to_integer()
                        .to_i64()
                        .expect("inverse numerator fits")
                })
                .collect()
        })
        .collect();
    (num, det.to_i64().expect("determinant fits"))
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

impl RootSystem {
    pub fn new(t: SimpleType) -> RootSystem {
        RootSystem::of(&CartanType::simple(t))
    }

    pub fn product(types: &[SimpleType]) -> RootSystem {
        RootSystem::of(&CartanType {
            factors: types.to_vec(),
        })
    }

    pub fn of(ty: &CartanType) -> RootSystem {
        let blocks: Vec<_> = ty.factors.iter().map(|t| t.gram()).collect();
        let gram = block_diag(&blocks);
        let rank = gram.len();
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
            .collect();
        let min_norm = (0..rank).map(|i| gram[i][i]).min().unwrap_or(2);
        let symmetrizer: Vec<i64> = (0..rank).map(|i| gram[i][i] / min_norm).collect();
        let e_const = ty
            .factors
            .iter()
            .map(|t| {
                let g = t.gram();
                let hi = (0..t.rank).map(|i| g[i][i]).max().unwrap();
                let lo = (0..t.rank).map(|i| g[i][i]).min().unwrap();
                hi / lo
            })
            .max()
            .unwrap_or(1);
        let (inv_num, inv_den) = exact_inverse(&cartan);
        let mut rs = RootSystem {
            ty: ty.clone(),
            rank,
            gram,
            cartan,
            pos_roots: Vec::new(),
            root_labels: Vec::new(),
            coroots: Vec::new(),
            symmetrizer,
            rho: Weight(vec![1; rank]),
            inv_num,
            inv_den,
            e_const,
        };
        rs.build_roots();
        rs
    }

    fn build_roots(&mut self) {
        let n = self.rank;
        let mut set: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut layer: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                e
            })
            .collect();
        let mut all = Vec::new();
        while !layer.is_empty() {
            for r in &layer {
                set.insert(r.clone());
            }
            let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
            for r in &layer {
                for i in 0..n {
                    let pair: i64 = (0..n).map(|j| r[j] * self.cartan[j][i]).sum();
                    let mut p = 0;
                    let mut down = r.clone();
                    loop {
                        down[i] -= 1;
                        if set.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    if p - pair > 0 {
                        let mut up = r.clone();
                        up[i] += 1;
                        next.insert(up);
                    }
                }
            }
            all.append(&mut layer);
            layer = next.into_iter().collect();
        }
        all.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| a.cmp(b))
        });
        self.root_labels = all.iter().map(|c| self.from_root_coords(c)).collect();
        self.coroots = all
            .iter()
            .map(|c| {
                let norm = self.norm_of_coords(c);
                (0..n).map(|i| 2 * c[i] * (self.gram[i][i] / 2) / norm).collect()
            })
            .collect();
        self.pos_roots = all;
    }

    fn norm_of_coords(&self, c: &[i64]) -> i64 {
        let n = self.rank;
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += c[i] * self.gram[i][j] * c[j];
            }
        }
        s
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.ty
    }

    pub fn simple_type(&self) -> Option<SimpleType> {
        self.ty.as_simple()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// Positive roots in simple-root coordinates, sorted by (height, lex).
    pub fn pos_roots(&self) -> &[Vec<i64>] {
        &self.pos_roots
    }

    /// Dynkin labels of the positive roots, in `pos_roots` order.
    pub fn root_labels(&self) -> &[Weight] {
        &self.root_labels
    }

    /// Coroots in simple-coroot coordinates, in `pos_roots` order.
    pub fn coroots(&self) -> &[Vec<i64>] {
        &self.coroots
    }

    /// `d_i` with `cartan[i][j] * d_j == cartan[j][i] * d_i`.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn inv_cartan_num(&self) -> &[Vec<i64>] {
        &self.inv_num
    }

    pub fn inv_cartan_den(&self) -> i64 {
        self.inv_den
    }

    pub fn e_const(&self) -> i64 {
        self.e_const
    }

    /// Nodes (1-based) whose simple root is shorter than the longest root of
    /// its component. Empty for simply laced types.
    pub fn short_nodes(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut off = 0;
        for t in &self.ty.factors {
            let hi = (off..off + t.rank).map(|i| self.gram[i][i]).max().unwrap();
            out.extend((off..off + t.rank).filter(|&i| self.gram[i][i] < hi).map(|i| i + 1));
            off += t.rank;
        }
        out
    }

    pub fn check(&self, w: &Weight) -> Result<()> {
        if w.len() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: w.len(),
            });
        }
        Ok(())
    }

    pub fn parse_weight(&self, s: &str) -> Result<Weight> {
        let w: Weight = s.parse()?;
        self.check(&w)?;
        Ok(w)
    }

    /// Labels of the simple root `α_i` (0-based).
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight(self.cartan[i].clone())
    }

    pub fn from_root_coords(&self, c: &[i64]) -> Weight {
        Weight(
            (0..self.rank)
                .map(|j| (0..self.rank).map(|i| c[i] * self.cartan[i][j]).sum())
                .collect(),
        )
    }

    pub fn reflect(&self, w: &Weight, i: usize) -> Weight {
        let k = w.0[i];
        Weight(
            w.0.iter()
                .zip(&self.cartan[i])
                .map(|(x, a)| x - k * a)
                .collect(),
        )
    }

    /// `(w, β)` in Gram units, `β` given in simple-root coordinates.
    pub fn inner_with_root(&self, w: &Weight, c: &[i64]) -> i64 {
        (0..self.rank).map(|i| c[i] * w.0[i] * (self.gram[i][i] / 2)).sum()
    }

    /// `<w, β^∨>` for the positive root with index `k`.
    pub fn coroot_pairing(&self, w: &Weight, k: usize) -> i64 {
        self.coroots[k].iter().zip(&w.0).map(|(c, x)| c * x).sum()
    }

    /// Root coordinates multiplied by `inv_cartan_den`.
    pub fn root_coords_scaled(&self, w: &Weight) -> Vec<i64> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.inv_num[j][i] * w.0[j]).sum())
            .collect()
    }

    /// Solves `cartanᵀ · coords = labels` exactly.
    pub fn to_root_coords(&self, w: &Weight) -> RootCoords {
        let den = BigInt::from(self.inv_den);
        RootCoords(
            self.root_coords_scaled(w)
                .into_iter()
                .map(|x| BigRational::new(BigInt::from(x), den.clone()))
                .collect(),
        )
    }

    /// Root coordinates when they are all integers.
    pub fn integral_root_coords(&self, w: &Weight) -> Option<Vec<i64>> {
        let d = self.inv_den;
        self.root_coords_scaled(w)
            .into_iter()
            .map(|x| if x % d == 0 { Some(x / d) } else { None })
            .collect()
    }

    /// True iff `nu - mu` is a non-negative integral combination of simple roots.
    pub fn is_under(&self, mu: &Weight, nu: &Weight) -> bool {
        match self.integral_root_coords(&(nu - mu)) {
            Some(c) => c.iter().all(|&x| x >= 0),
            None => false,
        }
    }

    pub fn is_subdominant(&self, mu: &Weight, delta: &Weight) -> bool {
        mu.is_dominant() && self.is_under(mu, delta)
    }

    /// Reflect at the most negative label (smallest index on ties) until
    /// dominant.
    pub fn dominant_conjugate(&self, w: &Weight) -> Weight {
        let mut w = w.clone();
        loop {
            let mut best: Option<usize> = None;
            for (i, &x) in w.0.iter().enumerate() {
                if x < 0 && best.is_none_or(|b| x < w.0[b]) {
                    best = Some(i);
                }
            }
            match best {
                Some(i) => w = self.reflect(&w, i),
                None => return w,
            }
        }
    }

    /// `w0(λ)`.
    pub fn lowest_weight(&self, lambda: &Weight) -> Weight {
        -&self.dominant_conjugate(&-lambda)
    }

    pub fn is_self_dual(&self, lambda: &Weight) -> bool {
        self.lowest_weight(lambda) == -lambda
    }

    fn component_order(&self, comp: &[usize]) -> BigUint {
        let r = comp.len();
        let inside = |c: &Vec<i64>| (0..self.rank).all(|i| c[i] == 0 || comp.contains(&i));
        let n_roots = self.pos_roots.iter().filter(|c| inside(c)).count();
        let laced = comp.iter().all(|&i| self.gram[i][i] == self.gram[comp[0]][comp[0]]);
        let two_pow = |k: usize| BigUint::one() << k;
        if laced {
            if n_roots == r * (r + 1) / 2 {
                factorial(r + 1)
            } else if r >= 4 && n_roots == r * (r - 1) {
                two_pow(r - 1) * factorial(r)
            } else {
                match (r, n_roots) {
                    (6, 36) => BigUint::from(51_840u64),
                    (7, 63) => BigUint::from(2_903_040u64),
                    (8, 120) => BigUint::from(696_729_600u64),
                    _ => unreachable!("connected simply laced subdiagram"),
                }
            }
        } else {
            match (r, n_roots) {
                (2, 6) => BigUint::from(12u32),
                (4, 24) => BigUint::from(1152u32),
                _ if n_roots == r * r => two_pow(r) * factorial(r),
                _ => unreachable!("connected non-laced subdiagram"),
            }
        }
    }

    /// Order of the parabolic subgroup generated by the reflections in `nodes`
    /// (0-based).
    pub fn parabolic_order(&self, nodes: &[usize]) -> BigUint {
        let mut left: BTreeSet<usize> = nodes.iter().copied().collect();
        let mut order = BigUint::one();
        while let Some(&start) = left.iter().next() {
            let mut comp = vec![start];
            left.remove(&start);
            let mut k = 0;
            while k < comp.len() {
                let i = comp[k];
                let nbrs: Vec<usize> = left
                    .iter()
                    .copied()
                    .filter(|&j| self.cartan[i][j] != 0)
                    .collect();
                for j in nbrs {
                    left.remove(&j);
                    comp.push(j);
                }
                k += 1;
            }
            order *= self.component_order(&comp);
        }
        order
    }

    pub fn weyl_group_order(&self) -> BigUint {
        let all: Vec<usize> = (0..self.rank).collect();
        self.parabolic_order(&all)
    }

    /// `|W| / |W_J|`, `J` the zero-label nodes of the dominant weight `w`.
    pub fn orbit_size(&self, w: &Weight) -> Result<u128> {
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.to_string()));
        }
        let zeros: Vec<usize> = (0..self.rank).filter(|&i| w.0[i] == 0).collect();
        (self.weyl_group_order() / self.parabolic_order(&zeros))
            .to_u128()
            .ok_or(Error::Overflow("orbit size"))
    }

    /// The Weyl orbit of a dominant weight, refusing orbits above `cap`.
    pub fn weyl_orbit(&self, w: &Weight, cap: usize) -> Result<Vec<Weight>> {
        let size = self.orbit_size(w).unwrap_or(u128::MAX);
        if size > cap as u128 {
            return Err(Error::CapExceeded { needed: size, cap });
        }
        Ok(self.orbit_unchecked(w))
    }

    pub(crate) fn orbit_unchecked(&self, w: &Weight) -> Vec<Weight> {
        let mut out = vec![w.clone()];
        let mut layer: BTreeSet<Weight> = BTreeSet::new();
        layer.insert(w.clone());
        while !layer.is_empty() {
            let mut next = BTreeSet::new();
            for x in &layer {
                for i in 0..self.rank {
                    if x.0[i] > 0 {
                        next.insert(self.reflect(x, i));
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    pub fn apply_graph_aut(&self, sigma: &GraphAut, w: &Weight) -> Result<Weight> {
        self.check(w)?;
        if sigma.perm.len() != self.rank {
            return Err(Error::InvalidAutomorphism);
        }
        GraphAut::new(self, sigma.perm.clone())?;
        Ok(sigma.apply(w))
    }

    /// Number of positive roots of each height.
    pub fn roots_by_height(&self) -> BTreeMap<i64, usize> {
        let mut m = BTreeMap::new();
        for c in &self.pos_roots {
            *m.entry(c.iter().sum()).or_insert(0) += 1;
        }
        m
    }

    pub fn highest_root(&self) -> Vec<i64> {
        self.pos_roots.last().cloned().unwrap_or_default()
    }

    /// Connected components of the subdiagram on `nodes` (0-based), each
    /// sorted ascending.
    pub fn components(&self, nodes: &[usize]) -> Vec<Vec<usize>> {
        let mut left: BTreeSet<usize> = nodes.iter().copied().collect();
        let mut out = Vec::new();
        while let Some(&start) = left.iter().next() {
            left.remove(&start);
            let mut comp = vec![start];
            let mut k = 0;
            while k < comp.len() {
                let i = comp[k];
                let nbrs: Vec<usize> = left.iter().copied().filter(|&j| self.cartan[i][j] != 0).collect();
                for j in nbrs {
                    left.remove(&j);
                    comp.push(j);
                }
                k += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The root system spanned by the simple roots in `nodes` (0-based),
    /// with Bourbaki numbering on each factor. Returns the subsystem and
    /// the ambient node (0-based) of each of its nodes.
    pub fn subsystem(&self, nodes: &[usize]) -> Result<(RootSystem, Vec<usize>)> {
        if let Some(&bad) = nodes.iter().find(|&&i| i >= self.rank) {
            return Err(Error::Contract(format!("node {} outside rank {}", bad + 1, self.rank)));
        }
        let mut factors = Vec::new();
        let mut map = Vec::new();
        for comp in self.components(nodes) {
            let sub: Vec<Vec<i64>> = comp.iter().map(|&i| comp.iter().map(|&j| self.cartan[i][j]).collect()).collect();
            // prefer a match keeping the ambient order (B2 vs C2)
            let matches: Vec<(SimpleType, Vec<usize>)> = candidate_types(comp.len())
                .into_iter()
                .filter_map(|t| match_cartan(&sub, &RootSystem::new(t).cartan).map(|m| (t, m)))
                .collect();
            let found = matches
                .iter()
                .find(|(_, m)| m.windows(2).all(|w| w[0] < w[1]))
                .or_else(|| matches.first())
                .cloned();
            let (t, m) = found.ok_or_else(|| Error::Contract(String::from("unclassified subdiagram")))?;
            factors.push(t);
            map.extend(m.into_iter().map(|k| comp[k]));
        }
        if factors.is_empty() {
            return Err(Error::Contract(String::from("empty subsystem")));
        }
        Ok((RootSystem::of(&CartanType { factors }), map))
    }
}

pub fn height(rc: &RootCoords) -> BigRational {
    rc.height()
}

fn candidate_types(rank: usize) -> Vec<SimpleType> {
    [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G]
        .into_iter()
        .filter_map(|f| SimpleType::new(f, rank).ok())
        .collect()
}

/// Finds `map` with `sub[map[i]][map[j]] == target[i][j]`.
fn match_cartan(sub: &[Vec<i64>], target: &[Vec<i64>]) -> Option<Vec<usize>> {
    fn extend(sub: &[Vec<i64>], target: &[Vec<i64>], map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = map.len();
        if i == target.len() {
            return true;
        }
        for c in 0..sub.len() {
            if used[c] || sub[c][c] != target[i][i] {
                continue;
            }
            if (0..i).all(|j| sub[c][map[j]] == target[i][j] && sub[map[j]][c] == target[j][i]) {
                used[c] = true;
                map.push(c);
                if extend(sub, target, map, used) {
                    return true;
                }
                map.pop();
                used[c] = false;
            }
        }
        false
    }
    let mut map = Vec::new();
    let mut used = vec![false; sub.len()];
    if extend(sub, target, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}
