//! The brick map `S ↦ (β{S}, T{S})` from `Y(σ)` to labels for `τ`.

use serde::{Deserialize, Serialize};

use crate::combinatorics::bricks::{check_params, sigma};
use crate::combinatorics::{rank_function, Composition, Tableau};
use crate::error::Error;

/// `π{S} = (β{S}, T{S})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BrickPair {
    pub beta: Composition,
    pub tableau: Tableau,
}

/// Brick `B_ℓ` of `S` is the column block `mℓ < j ≤ m(ℓ+1)`. Reading its top
/// row as `n_1..n_m` and its bottom row as `n_{m+1}..n_{2m}`, the local rank
/// is `ρ_i = #{j : n_j ≤ n_i}`; then `β_{n_i} = ℓ` and rows `2ℓ+1`, `2ℓ+2` of
/// `T` hold `ρ_i + 2(k−1−ℓ)m`.
///
/// `S` need only be column-strict; an error is returned if the assembled `T`
/// is not reverse standard.
pub fn brick_map(s: &Tableau, m: usize) -> Result<BrickPair, Error> {
    let parts = s.shape().parts();
    if m == 0 || parts.len() != 2 || parts[0] != parts[1] || parts[0] % m != 0 {
        return Err(Error::ShapeMismatch(format!("brick map needs shape (mk,mk) with m={m}, got {}", s.shape())));
    }
    let k = parts[0] / m;
    check_params(m, k).map_err(|_| Error::ShapeMismatch(format!("need k >= 2, got shape {}", s.shape())))?;
    // column strictness is all the construction uses; the result must still be an RSYT
    if !s.is_column_strict() {
        return Err(Error::InvalidTableau(format!("{s:?} is not column-strict")));
    }
    let mut beta = vec![0u32; 2 * m * k];
    let mut rows = vec![vec![0usize; m]; 2 * k];
    for l in 0..k {
        let n: Vec<usize> = (1..=2)
            .flat_map(|r| (m * l + 1..=m * (l + 1)).map(move |c| (r, c)))
            .map(|(r, c)| s.entry(r, c))
            .collect();
        let offset = 2 * (k - 1 - l) * m;
        for (i, &ni) in n.iter().enumerate() {
            beta[ni - 1] = l as u32;
            let rho = n.iter().filter(|&&nj| nj <= ni).count();
            let (row, col) = if i < m { (2 * l, i) } else { (2 * l + 1, i - m) };
            rows[row][col] = rho + offset;
        }
    }
    let tableau = Tableau::rsyt(rows)?;
    Ok(BrickPair { beta: Composition(beta), tableau })
}

/// `(m+2)β_i + c(r_β(i), T) = c(i, S)` for every `i`.
pub fn fundamental_equation_holds(pair: &BrickPair, s: &Tableau, m: usize) -> bool {
    let r = rank_function(&pair.beta);
    (1..=s.n()).all(|i| (m as i64 + 2) * pair.beta.get(i) as i64 + pair.tableau.content(r.apply(i)) == s.content(i))
}

/// The shape `σ = (mk, mk)` checked against `m`, `k`.
pub(crate) fn sigma_checked(m: usize, k: usize) -> Result<crate::combinatorics::Partition, Error> {
    check_params(m, k)?;
    Ok(sigma(m, k))
}
