//! Exhaustive spectral-vector uniqueness checks and the pair tableau `X_{β,T}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::combinatorics::bricks::{check_params, lambda, s0, s_jn, t0};
use crate::combinatorics::{
    compare_order, distinct_permutations, enumerate_rsyt, rank_function, Composition, Order, Partition, Tableau,
};
use crate::error::Error;
use crate::json;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Collision {
    pub gamma: Composition,
    pub tableau: Tableau,
    /// `γ ⊴ β`; only these can obstruct the specialization of `J_{β,T}`.
    pub below: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Unique,
    Collisions,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UniquenessReport {
    pub beta: Composition,
    pub tableau: Tableau,
    #[serde(with = "json::rational")]
    pub kappa: BigRational,
    /// `ζ′_{β,T}` at `κ₀`.
    #[serde(with = "json::rational_vec")]
    pub spectral: Vec<BigRational>,
    /// Pairs `(γ, T′)` compared.
    pub enumerated: usize,
    /// Every other pair with the same spectral vector at `κ₀`.
    pub collisions: Vec<Collision>,
    /// `Unique` iff no colliding pair has `γ ⊴ β`.
    pub verdict: Verdict,
}

/// Values `γ_i/κ₀ + c(r_γ(i), T′)` for all `i`, with contents read from a
/// precomputed content vector.
fn spectral_at(gamma: &Composition, contents: &[i64], kappa0: &BigRational) -> Vec<BigRational> {
    let r = rank_function(gamma);
    (1..=gamma.len())
        .map(|i| BigRational::from_integer(BigInt::from(gamma.get(i))) / kappa0 + BigInt::from(contents[r.apply(i) - 1]))
        .collect()
}

/// Compares `ζ′_{β,T}` at `κ₀` against every `(γ, T′)` where `γ` runs over
/// all rearrangements of partitions of `|β|` dominated by `β⁺` and `T′` over
/// `Y(shape T)`.
pub fn uniqueness_oracle(beta: &Composition, t: &Tableau, kappa0: &BigRational) -> Result<UniquenessReport, Error> {
    if beta.len() != t.n() {
        return Err(Error::ShapeMismatch(format!("composition of length {} with tableau on {} entries", beta.len(), t.n())));
    }
    if kappa0 == &BigRational::from_integer(0.into()) {
        return Err(Error::BadParams("kappa must be nonzero".into()));
    }
    let n = beta.len();
    let top = beta.to_partition();
    let tableaux = enumerate_rsyt(t.shape());
    let contents: Vec<Vec<i64>> = tableaux.iter().map(Tableau::content_vector).collect();
    let target = spectral_at(beta, &t.content_vector(), kappa0);

    let mut enumerated = 0;
    let mut collisions = Vec::new();
    for mu in Partition::all_of(beta.degree() as usize, n) {
        if !mu.dominated_by(&top) {
            continue;
        }
        let mut padded: Vec<u32> = mu.parts().iter().map(|&p| p as u32).collect();
        padded.resize(n, 0);
        for g in distinct_permutations(&padded) {
            let gamma = Composition(g);
            for (tt, c) in tableaux.iter().zip(&contents) {
                enumerated += 1;
                if spectral_at(&gamma, c, kappa0) != target || (&gamma == beta && tt == t) {
                    continue;
                }
                let below = matches!(compare_order(&gamma, beta), Order::Below | Order::Equal);
                collisions.push(Collision { gamma: gamma.clone(), tableau: tt.clone(), below });
            }
        }
    }
    let verdict = if collisions.iter().any(|c| c.below) { Verdict::Collisions } else { Verdict::Unique };
    Ok(UniquenessReport {
        beta: beta.clone(),
        tableau: t.clone(),
        kappa: kappa0.clone(),
        spectral: target,
        enumerated,
        collisions,
        verdict,
    })
}

/// `(m+2)β_i + c(r_β(i), T)` for every `i`: the spectral vector at
/// `κ = 1/(m+2)` in integer form.
pub fn scaled_spectral(beta: &Composition, t: &Tableau, m: usize) -> Vec<i64> {
    let r = rank_function(beta);
    (1..=beta.len()).map(|i| (m as i64 + 2) * beta.get(i) as i64 + t.content(r.apply(i))).collect()
}

/// The four labels around `i₀ = 2m(k−s)`, each with its window over
/// `i₀−1..=i₀+2` and the matching values `v(·, i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariantRow {
    pub name: String,
    pub composition: Composition,
    pub window: Vec<u32>,
    pub v_window: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaVariants {
    pub m: usize,
    pub k: usize,
    pub s: usize,
    pub i0: usize,
    pub rows: Vec<VariantRow>,
    /// `v(α^{(u)}, ·)` equals the content vector of `S_{(u, ms)}`, `u = 1, 2`.
    pub matches_s_jn: [bool; 2],
    /// `v(β, i) = c(i, S₀)` away from the window, for all four rows.
    pub outside_window_is_s0: bool,
}

impl AlphaVariants {
    pub fn alpha(&self, u: usize) -> &Composition {
        &self.rows[u + 1].composition
    }
}

/// `α^{(1)} = s_{i₀+1}s_{i₀}λ` and `α^{(2)} = s_{i₀−1}s_{i₀}λ` with their
/// spectral windows.
pub fn alpha_variants(m: usize, k: usize, s: usize) -> Result<AlphaVariants, Error> {
    check_params(m, k)?;
    if s == 0 || s >= k {
        return Err(Error::BadParams(format!("need 1 <= s <= k-1, got s={s}, k={k}")));
    }
    let i0 = 2 * m * (k - s);
    let lam = lambda(m, k)?;
    let t = t0(m, k)?;
    let mid = lam.swap(i0);
    let a1 = mid.swap(i0 + 1);
    let a2 = mid.swap(i0 - 1);
    let s0c = s0(m, k)?.content_vector();
    let mut outside = true;
    let rows: Vec<VariantRow> = [("lambda", lam), ("s_i0 lambda", mid), ("alpha1", a1), ("alpha2", a2)]
        .into_iter()
        .map(|(name, c)| {
            let v = scaled_spectral(&c, &t, m);
            for i in (1..=v.len()).filter(|i| !(i0 - 1..=i0 + 2).contains(i)) {
                outside &= v[i - 1] == s0c[i - 1];
            }
            VariantRow {
                name: name.to_string(),
                window: c.0[i0 - 2..i0 + 2].to_vec(),
                v_window: v[i0 - 2..i0 + 2].to_vec(),
                composition: c,
            }
        })
        .collect();
    let ms = m * s;
    let matches = |u: usize| -> Result<bool, Error> {
        let target = s_jn(m, k, u, ms)?.content_vector();
        Ok(scaled_spectral(&rows[u + 1].composition, &t, m) == target)
    };
    let matches_s_jn = [matches(1)?, matches(2)?];
    Ok(AlphaVariants { m, k, s, i0, rows, matches_s_jn, outside_window_is_s0: outside })
}

/// `X_{β,T}`: the cell of `T` holding `i` carries `(i, β⁺_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairTableau {
    pub cells: Vec<Vec<(usize, u32)>>,
}

impl PairTableau {
    pub fn get(&self, row: usize, col: usize) -> (usize, u32) {
        self.cells[row - 1][col - 1]
    }
}

/// Builds `X_{β,T}` and checks that along rows and columns the first entries
/// decrease while the second entries weakly increase.
pub fn pair_tableau(beta: &Composition, t: &Tableau) -> Result<PairTableau, Error> {
    if beta.len() != t.n() {
        return Err(Error::ShapeMismatch(format!("composition of length {} with tableau on {} entries", beta.len(), t.n())));
    }
    let plus = beta.sorted_desc();
    let cells: Vec<Vec<(usize, u32)>> =
        t.rows().iter().map(|row| row.iter().map(|&i| (i, plus.get(i))).collect()).collect();
    for (r, row) in cells.iter().enumerate() {
        for (c, &(i, b)) in row.iter().enumerate() {
            // right and lower neighbours: smaller first entry, weakly larger second
            let ok = |(j, d): (usize, u32)| j < i && d >= b;
            if c + 1 < row.len() && !ok(row[c + 1]) {
                return Err(Error::OrderViolation(r + 1, c + 2));
            }
            if let Some(&below) = cells.get(r + 1).and_then(|nr| nr.get(c)) {
                if !ok(below) {
                    return Err(Error::OrderViolation(r + 2, c + 1));
                }
            }
        }
    }
    Ok(PairTableau { cells })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rational;

    #[test]
    fn lambda_unique_small() {
        let r = uniqueness_oracle(&lambda(1, 2).unwrap(), &t0(1, 2).unwrap(), &rational(1, 3)).unwrap();
        assert_eq!(r.verdict, Verdict::Unique);
        assert!(r.enumerated >= 6);
        let r = uniqueness_oracle(&lambda(1, 3).unwrap(), &t0(1, 3).unwrap(), &rational(1, 3)).unwrap();
        assert_eq!(r.verdict, Verdict::Unique);
    }

    #[test]
    fn generic_kappa_is_unique() {
        // at a transcendental-looking κ₀ nothing collides
        let t = Tableau::rsyt(vec![vec![4, 2], vec![3, 1]]).unwrap();
        let r = uniqueness_oracle(&Composition(vec![2, 0, 1, 0]), &t, &rational(7, 113)).unwrap();
        assert_eq!(r.verdict, Verdict::Unique);
        assert!(r.collisions.is_empty());
    }

    #[test]
    fn pair_tableau_of_zero() {
        let t = t0(1, 2).unwrap();
        let x = pair_tableau(&Composition::zero(4), &t).unwrap();
        assert!(x.cells.iter().flatten().all(|&(_, b)| b == 0));
        let x = pair_tableau(&lambda(1, 2).unwrap(), &t).unwrap();
        // T₀ = [[4],[3],[2],[1]] and λ⁺ = (1,1,0,0)
        let seconds: Vec<u32> = x.cells.iter().flatten().map(|&(_, b)| b).collect();
        assert_eq!(seconds, vec![0, 0, 1, 1]);
    }

    #[test]
    fn variants_small() {
        let v = alpha_variants(1, 2, 1).unwrap();
        assert_eq!(v.i0, 2);
        assert_eq!(v.rows[0].window, vec![1, 1, 0, 0]);
        assert!(alpha_variants(1, 2, 2).is_err());
    }
}
