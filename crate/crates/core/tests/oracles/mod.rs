//! Independent closed forms and shared fixtures for the property and
//! acceptance suites.
#![allow(dead_code)]

use std::collections::BTreeSet;

use weylab_core::characters::weyl_character;
use weylab_core::embed::EmbeddingSpec;
use weylab_core::verify::{clifford_rows, power_rows, triple_embedding};
use weylab_core::{GraphAut, RootSystem, Weight, DEFAULT_CAP};

/// Cross-multiplied comparison of `to_root_coords(w)` against `num / den`.
pub fn coords_equal(rs: &RootSystem, w: &Weight, num: &[i64], den: i64) -> bool {
    let scaled = rs.root_coords_scaled(w);
    let d = rs.inv_cartan_den();
    scaled.iter().zip(num).all(|(s, n)| s * den == n * d)
}

pub fn flip_difference_a(m: usize, c: &[i64]) -> Vec<i64> {
    // (m+1)(μ2 − μ1) in root coordinates, summed over i ≤ k as in the closed form
    let k = m / 2;
    let mut out = vec![0i64; m];
    let cc = |i: usize| c[i - 1];
    for j in 1..k {
        let mut coef = 0;
        for i in 1..=j {
            coef += (i * (m - 2 * j + 1)) as i64 * (cc(m - i + 1) - cc(i));
        }
        for i in j + 1..=k {
            coef += (j * (m - 2 * i + 1)) as i64 * (cc(m - i + 1) - cc(i));
        }
        out[j - 1] += coef;
        out[m - j] -= coef;
    }
    let mut coef = 0;
    for i in 1..=k {
        coef += (i * (m - 2 * k + 1)) as i64 * (cc(m - i + 1) - cc(i));
    }
    out[k - 1] += coef;
    out[m - k] -= coef;
    out
}

/// Embeddings the table verifiers use, with a small enough ambient group to
/// sweep fundamental weights.
pub fn suite_embeddings() -> Vec<(RootSystem, EmbeddingSpec)> {
    let mut out = Vec::new();
    for t in clifford_rows() {
        if t.modular.is_some() {
            continue;
        }
        let rs = RootSystem::new(t.x_type);
        out.push((rs.clone(), triple_embedding(&rs, &t.delta, None, DEFAULT_CAP).unwrap()));
    }
    let mut seen = BTreeSet::new();
    for row in power_rows() {
        if row.g.rank > 10 || !seen.insert((row.g, row.x_type.clone())) {
            continue;
        }
        let rs = RootSystem::of(&row.x_type);
        let w = weyl_character(&rs, &row.delta, DEFAULT_CAP).unwrap();
        let form = match row.g.family {
            weylab_core::Family::A => weylab_core::embed::FormType::None,
            weylab_core::Family::C => weylab_core::embed::FormType::Skew,
            _ => weylab_core::embed::FormType::Symmetric,
        };
        out.push((rs.clone(), weylab_core::embed::torus_assignment(&rs, &row.delta, &w, form).unwrap()));
    }
    out
}

pub fn resign(spec: &EmbeddingSpec, perm: &[usize], signs: &[bool]) -> EmbeddingSpec {
    let mut out = spec.clone();
    out.theta = perm
        .iter()
        .zip(signs)
        .map(|(&k, &neg)| if neg { -&spec.theta[k] } else { spec.theta[k].clone() })
        .collect();
    out
}


/// Doubled difference μ2 − μ1 for the spin swap of D_m.
pub fn spin_difference_d(m: usize, c: &[i64]) -> Vec<i64> {
    let mut want = vec![0i64; m];
    want[m - 2] = c[m - 1] - c[m - 2];
    want[m - 1] = c[m - 2] - c[m - 1];
    want
}

/// Tripled difference μ1 − μ2 for the E6 flip.
pub fn flip_difference_e6(c: &[i64]) -> Vec<i64> {
    let x = 2 * c[0] + c[2] - c[4] - 2 * c[5];
    let y = c[0] + 2 * c[2] - 2 * c[4] - c[5];
    vec![x, 0, y, 0, -y, -x]
}

/// The five non-trivial D4 graph automorphisms, in the order matching
/// [`sigma_differences_d4`].
pub fn d4_sigmas(rs: &RootSystem) -> Vec<GraphAut> {
    let t = GraphAut::spin_swap(rs).unwrap();
    let s = GraphAut::triality(rs).unwrap();
    vec![t.clone(), t.compose(&s), s.compose(&t), s.compose(&s), s]
}

/// Doubled differences σ(μ) − μ for each of [`d4_sigmas`].
pub fn sigma_differences_d4(c: &[i64]) -> Vec<[i64; 4]> {
    let (c1, c3, c4) = (c[0], c[2], c[3]);
    vec![
        [0, 0, -(c3 - c4), c3 - c4],
        [c3 - c1, 0, -(c3 - c1), 0],
        [c4 - c1, 0, 0, -(c4 - c1)],
        [c4 - c1, 0, c1 - c3, c3 - c4],
        [c3 - c1, 0, c4 - c3, c1 - c4],
    ]
}
