//! `‖S‖²` and the rescaling factors `γ_S = ‖S‖/‖J_{π{S}}‖`.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::brick::{brick_map, sigma_checked};
use crate::combinatorics::bricks::s0;
use crate::combinatorics::reduction::{apply_step, inv_statistic, is_permissible_step};
use crate::combinatorics::{enumerate_rsyt, rank_function, Composition, Tableau};
use crate::error::Error;
use crate::json;

fn factor(d: i64) -> BigRational {
    BigRational::one() - BigRational::new(1.into(), (d * d).into())
}

/// `‖T‖² = Π_{i<j, c(i,T)−c(j,T) ≤ −2} (1 − 1/(c(i,T)−c(j,T))²)`, any shape.
pub fn norm_squared(t: &Tableau) -> BigRational {
    let c = t.content_vector();
    let mut acc = BigRational::one();
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            let d = c[i] - c[j];
            if d <= -2 {
                acc *= factor(d);
            }
        }
    }
    acc
}

/// `γ_S = Π_{i<j, β_i<β_j} (1 − 1/(c(i,S)−c(j,S))²)` with `β = β{S}`.
pub fn gamma_product(s: &Tableau, beta: &Composition) -> Result<BigRational, Error> {
    let c = s.content_vector();
    let mut acc = BigRational::one();
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            if beta.0[i] < beta.0[j] {
                let d = c[i] - c[j];
                if d == 0 {
                    return Err(Error::DivisionByZero);
                }
                acc *= factor(d);
            }
        }
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NormEntry {
    pub source: Tableau,
    pub inv: usize,
    #[serde(with = "json::rational")]
    pub norm_squared: BigRational,
    #[serde(with = "json::rational")]
    pub norm_squared_recursive: BigRational,
    #[serde(with = "json::rational")]
    pub gamma: BigRational,
    #[serde(with = "json::rational")]
    pub gamma_recursive: BigRational,
    /// `‖J_{π{S}}‖² = ‖S‖²/γ_S²`.
    #[serde(with = "json::rational")]
    pub jack_norm_squared: BigRational,
    /// Permissible steps into `S` from tableaux of larger `inv`; each one
    /// gives an independent recursive value.
    pub edges: usize,
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NormsReport {
    pub m: usize,
    pub k: usize,
    pub entries: Vec<NormEntry>,
    /// Every edge of the permissible-step graph gives the same recursive value.
    pub path_independent: bool,
    /// Product formulas agree with the recursions for every `S`.
    pub all_match: bool,
}

/// Both norms by product formula and by recursion from `S₀` over every
/// permissible step, processing tableaux by decreasing `inv`.
///
/// If `S` carries `i` in row 1 and `i+1` in row 2 with `col(i) > col(i+1)`,
/// then `S^{(i)}` has `‖S^{(i)}‖² = (1 − b²)‖S‖²`, `b = 1/(c(i,S) − c(i+1,S))`,
/// and `γ_{S^{(i)}}` is `γ_S` when `i`, `i+1` share a brick and `(1 − b²)γ_S`
/// otherwise.
pub fn norms_and_gamma(m: usize, k: usize) -> Result<NormsReport, Error> {
    let shape = sigma_checked(m, k)?;
    let mut all = enumerate_rsyt(&shape);
    all.sort_by_cached_key(|s| std::cmp::Reverse(inv_statistic(s)));
    let start = s0(m, k)?;
    debug_assert_eq!(all[0], start);

    let mut rec_norm: HashMap<Tableau, BigRational> = HashMap::new();
    let mut rec_gamma: HashMap<Tableau, BigRational> = HashMap::new();
    let mut edges: HashMap<Tableau, usize> = HashMap::new();
    let mut consistent: HashMap<Tableau, bool> = HashMap::new();
    rec_norm.insert(start.clone(), BigRational::one());
    rec_gamma.insert(start.clone(), BigRational::one());

    for s in &all {
        let (ns, gs) = match (rec_norm.get(s), rec_gamma.get(s)) {
            (Some(n), Some(g)) => (n.clone(), g.clone()),
            _ => return Err(Error::InvalidTableau(format!("{s:?} is not reached from S0 by permissible steps"))),
        };
        let pair = brick_map(s, m)?;
        for i in 1..s.n() {
            // steps down in inv: i in row 1, i+1 in row 2, col(i) > col(i+1)
            if !(s.row_of(i) == 1 && s.row_of(i + 1) == 2 && s.col_of(i) > s.col_of(i + 1)) {
                continue;
            }
            let lower = apply_step(s, i);
            if !lower.is_rsyt() {
                continue;
            }
            debug_assert!(is_permissible_step(&lower, i));
            let d = s.content(i) - s.content(i + 1);
            let f = factor(d);
            let n_low = &ns * &f;
            let same_brick = pair.beta.get(i) == pair.beta.get(i + 1);
            let g_low = if same_brick { gs.clone() } else { &gs * &f };

            let low_pair = brick_map(&lower, m)?;
            let label_ok = if same_brick {
                let r = rank_function(&pair.beta).apply(i);
                low_pair.beta == pair.beta && low_pair.tableau == pair.tableau.swapped(r, r + 1)
            } else {
                pair.beta.get(i) > pair.beta.get(i + 1) && low_pair.beta == pair.beta.swap(i) && low_pair.tableau == pair.tableau
            };

            *edges.entry(lower.clone()).or_insert(0) += 1;
            let ok = consistent.entry(lower.clone()).or_insert(true);
            *ok &= label_ok;
            match rec_norm.get(&lower) {
                Some(prev) => *ok &= *prev == n_low,
                None => {
                    rec_norm.insert(lower.clone(), n_low);
                }
            }
            match rec_gamma.get(&lower) {
                Some(prev) => *ok &= *prev == g_low,
                None => {
                    rec_gamma.insert(lower.clone(), g_low);
                }
            }
        }
    }

    let mut entries = Vec::with_capacity(all.len());
    for s in &all {
        let pair = brick_map(s, m)?;
        let gamma = gamma_product(s, &pair.beta)?;
        let norm = norm_squared(s);
        if gamma.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let jack_norm_squared = &norm / (&gamma * &gamma);
        entries.push(NormEntry {
            source: s.clone(),
            inv: inv_statistic(s),
            norm_squared_recursive: rec_norm[s].clone(),
            gamma_recursive: rec_gamma[s].clone(),
            norm_squared: norm,
            gamma,
            jack_norm_squared,
            edges: edges.get(s).copied().unwrap_or(0),
            consistent: consistent.get(s).copied().unwrap_or(true),
        });
    }
    entries.sort_by(|a, b| b.source.content_vector().cmp(&a.source.content_vector()));
    let path_independent = entries.iter().all(|e| e.consistent);
    let all_match = entries
        .iter()
        .all(|e| e.norm_squared == e.norm_squared_recursive && e.gamma == e.gamma_recursive);
    Ok(NormsReport { m, k, entries, path_independent, all_match })
}
