//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

pub mod props;

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rectjack::combinatorics::{Composition, Partition, Tableau};
use rectjack::operators::cherednik;
use rectjack::poly::{Irrep, TermKey, VectorPoly};

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `C(2n, n)/(n+1)`
pub fn catalan(n: u64) -> u64 {
    let mut c: u64 = 1;
    for i in 0..n {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// Every bijective filling of `shape` whose rows and columns decrease, by
/// running through all `N!` fillings.
pub fn brute_force_rsyt(shape: &Partition) -> Vec<Tableau> {
    let n = shape.size();
    let mut perm: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    loop {
        let mut rows = Vec::new();
        let mut it = perm.iter();
        for &len in shape.parts() {
            rows.push(it.by_ref().take(len).copied().collect::<Vec<_>>());
        }
        let dec_rows = rows.iter().all(|r| r.windows(2).all(|w| w[0] > w[1]));
        let dec_cols = (1..rows.len()).all(|r| (0..rows[r].len()).all(|c| rows[r - 1][c] > rows[r][c]));
        if dec_rows && dec_cols {
            out.push(Tableau::from_rows(rows).unwrap());
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All compositions of `d` into `n` parts.
pub fn compositions(d: u32, n: usize) -> Vec<Composition> {
    fn rec(rem: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if slots == 1 {
            cur.push(rem);
            out.push(Composition(cur.clone()));
            cur.pop();
            return;
        }
        for a in 0..=rem {
            cur.push(a);
            rec(rem - a, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, n, &mut Vec::new(), &mut out);
    out
}

/// Basis of a reduced row echelon form of the null space of `rows` (each row
/// a dense vector over Q).
pub fn null_space(mut rows: Vec<Vec<BigRational>>, ncols: usize) -> Vec<Vec<BigRational>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); ncols];
            v[f] = BigRational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -rows[i][f].clone();
            }
            v
        })
        .collect()
}

/// The joint eigenspace of `U′_i = (U_i − 1)/κ₀`, `i = 1..N`, for the
/// eigenvalues `ζ′_{α,T}(i)` at `κ₀`, over the whole homogeneous space of
/// degree `|α|`. `U_i` is applied through its definition `D_i x_i − κΣ_{j<i}(i,j)`.
pub fn joint_eigenspace(alpha: &Composition, t: &Tableau, kappa0: &BigRational) -> (Arc<Irrep>, Vec<TermKey>, Vec<Vec<BigRational>>) {
    let irrep = Irrep::of(t.shape());
    let n = alpha.len();
    let keys: Vec<TermKey> = compositions(alpha.degree(), n)
        .into_iter()
        .flat_map(|g| (0..irrep.dim()).map(move |tt| TermKey::new(g.clone(), tt)))
        .collect();
    let index: std::collections::HashMap<&TermKey, usize> = keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let zeta = rectjack::jack::SpectralVector::of(alpha, t).unwrap().evaluate(kappa0).unwrap();
    let one = BigRational::one();
    let mut rows = Vec::new();
    for i in 1..=n {
        let mut block = vec![vec![BigRational::zero(); keys.len()]; keys.len()];
        for (c, key) in keys.iter().enumerate() {
            let e = VectorPoly::monomial(irrep.clone(), key.exp.clone(), key.tab, one.clone());
            let u = cherednik(i, &e, kappa0);
            // (U − 1)/κ₀ − ζ′ applied to the basis vector
            let img = u.sub(&e).unwrap().scale(&kappa0.recip()).sub(&e.scale(&zeta[i - 1])).unwrap();
            for (k, v) in img.terms() {
                block[index[k]][c] = v.clone();
            }
        }
        rows.extend(block);
    }
    let ns = null_space(rows, keys.len());
    (irrep, keys, ns)
}

/// Gram diagonal `d_T` of the `S_N`-invariant form on the seminormal basis of
/// `shape`, from `d_a M_{ab} = d_b M_{ba}` for every simple reflection `M`,
/// normalized to `1` at `top`. `None` if the solution is not unique.
pub fn invariant_gram(shape: &Partition, top: &Tableau) -> Option<Vec<(Tableau, BigRational)>> {
    let irrep = Irrep::of(shape);
    let d = irrep.dim();
    let mut rows = Vec::new();
    for i in 1..irrep.n() {
        let m = irrep.simple(i).to_dense();
        for a in 0..d {
            for b in a + 1..d {
                if m[a][b].is_zero() && m[b][a].is_zero() {
                    continue;
                }
                let mut row = vec![BigRational::zero(); d];
                row[a] = m[a][b].clone();
                row[b] = -m[b][a].clone();
                rows.push(row);
            }
        }
    }
    let ns = null_space(rows, d);
    if ns.len() != 1 {
        return None;
    }
    let v = &ns[0];
    let norm = v[irrep.index_of(top)?].clone();
    if norm.is_zero() {
        return None;
    }
    Some(irrep.tableaux().iter().cloned().zip(v.iter().map(|x| x / &norm)).collect())
}

/// `construct_jack` against the joint eigenspace: returns a description of
/// the first disagreement.
///
/// Checks, over Q(κ), `(U_i − 1)J = κζ′_i J` for all `i` and that the
/// coefficient of `x^α` is `τ(r_α⁻¹)T`; at `κ₀` checks that the joint
/// eigenspace of the `U′_i` over all of degree `|α|` is a line containing `J(κ₀)`.
pub fn jack_matches_oracle(alpha: &Composition, t: &Tableau, kappa0: &BigRational) -> Result<(), String> {
    use rectjack::combinatorics::rank_function;
    use rectjack::field::RatFunc;
    let j = rectjack::jack::construct_jack(alpha, t).map_err(|e| e.to_string())?;
    let kappa = RatFunc::kappa();
    let zeta = rectjack::jack::SpectralVector::of(alpha, t).unwrap().to_ratfuncs();
    for i in 1..=alpha.len() {
        let lhs = cherednik(i, &j.poly, &kappa).sub(&j.poly).unwrap();
        if lhs != j.poly.scale(&(kappa.clone() * &zeta[i - 1])) {
            return Err(format!("U'_{i} eigen equation fails over Q(kappa)"));
        }
    }
    let irrep = j.irrep().clone();
    let lead = irrep.matrix_of(&rank_function(alpha).inverse());
    for s in 0..irrep.dim() {
        let want = lead.column(irrep.index_of(t).unwrap()).iter().find(|(r, _)| *r == s).map(|(_, v)| v.clone());
        let got = j.poly.coeff(alpha, s).map(|c| c.as_rational().ok_or("leading coefficient depends on kappa".to_string()));
        let got = got.transpose()?;
        if want.filter(|v| !v.is_zero()) != got.filter(|v| !v.is_zero()) {
            return Err(format!("leading coefficient at tableau {s}"));
        }
    }
    let value = j.specialize(kappa0).map_err(|e| e.to_string())?;
    let (_, keys, ns) = joint_eigenspace(alpha, t, kappa0);
    if ns.len() != 1 {
        return Err(format!("joint eigenspace has dimension {}", ns.len()));
    }
    let dense: Vec<BigRational> =
        keys.iter().map(|k| value.coeff(&k.exp, k.tab).cloned().unwrap_or_else(BigRational::zero)).collect();
    let pivot = ns[0].iter().position(|x| !x.is_zero()).unwrap();
    let ratio = &dense[pivot] / &ns[0][pivot];
    if ratio.is_zero() || dense.iter().zip(&ns[0]).any(|(a, b)| *a != b * &ratio) {
        return Err("J(kappa0) is not on the eigenline".into());
    }
    if value.num_terms() != dense.iter().filter(|x| !x.is_zero()).count() {
        return Err("J(kappa0) leaves the homogeneous component".into());
    }
    Ok(())
}
