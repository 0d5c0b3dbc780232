//! The irreducible module `V_τ` in the seminormal basis of reverse standard tableaux.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{enumerate_rsyt, Partition, Perm, Tableau};

/// A sparse square matrix stored by columns: column `t` is the image of basis vector `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    cols: Vec<Vec<(usize, BigRational)>>,
}

impl SparseMatrix {
    pub fn identity(dim: usize) -> Self {
        SparseMatrix { cols: (0..dim).map(|t| vec![(t, BigRational::one())]).collect() }
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    /// Image of basis vector `t`, sorted by row.
    pub fn column(&self, t: usize) -> &[(usize, BigRational)] {
        &self.cols[t]
    }

    /// `self · other`
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        let dim = self.dim();
        let cols = other
            .cols
            .iter()
            .map(|col| {
                let mut acc = vec![BigRational::zero(); dim];
                for (k, v) in col {
                    for (r, w) in &self.cols[*k] {
                        acc[*r] += v * w;
                    }
                }
                acc.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        SparseMatrix { cols }
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        let dim = self.dim();
        let cols = (0..dim)
            .map(|t| {
                let mut acc = vec![BigRational::zero(); dim];
                for (r, v) in self.cols[t].iter().chain(&other.cols[t]) {
                    acc[*r] += v;
                }
                acc.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        SparseMatrix { cols }
    }

    /// Applies the matrix to a sparse vector given as `(index, coefficient)` pairs.
    pub fn apply(&self, v: &[(usize, BigRational)]) -> Vec<(usize, BigRational)> {
        let mut acc = vec![BigRational::zero(); self.dim()];
        for (k, c) in v {
            for (r, w) in &self.cols[*k] {
                acc[*r] += c * w;
            }
        }
        acc.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect()
    }

    /// Dense row-major form, for tests and diagnostics.
    pub fn to_dense(&self) -> Vec<Vec<BigRational>> {
        let dim = self.dim();
        let mut out = vec![vec![BigRational::zero(); dim]; dim];
        for (t, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                out[*r][t] = v.clone();
            }
        }
        out
    }
}

/// `V_τ` for one shape: the ordered tableau basis, content lookup, and cached
/// matrices of `τ(s_i)` and `τ((i,j))`.
pub struct Irrep {
    shape: Partition,
    n: usize,
    tableaux: Vec<Tableau>,
    index: HashMap<Vec<i64>, usize>,
    simple: Vec<SparseMatrix>,
    transpositions: Vec<OnceLock<SparseMatrix>>,
}

impl std::fmt::Debug for Irrep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Irrep{}", self.shape)
    }
}

impl PartialEq for Irrep {
    fn eq(&self, other: &Self) -> bool {
        self.shape == other.shape
    }
}

impl Eq for Irrep {}

impl Irrep {
    /// The shared module for `shape`, built once per process.
    pub fn of(shape: &Partition) -> Arc<Irrep> {
        static REGISTRY: OnceLock<Mutex<HashMap<Partition, Arc<Irrep>>>> = OnceLock::new();
        let reg = REGISTRY.get_or_init(Default::default);
        if let Some(ir) = reg.lock().expect("registry lock").get(shape) {
            return ir.clone();
        }
        let built = Arc::new(Irrep::build(shape));
        reg.lock().expect("registry lock").entry(shape.clone()).or_insert(built).clone()
    }

    fn build(shape: &Partition) -> Irrep {
        let n = shape.size();
        let tableaux = enumerate_rsyt(shape);
        let index: HashMap<Vec<i64>, usize> =
            tableaux.iter().enumerate().map(|(t, tab)| (tab.content_vector(), t)).collect();
        let simple = (1..n)
            .map(|i| {
                let cols = tableaux
                    .iter()
                    .enumerate()
                    .map(|(t, tab)| simple_column(i, t, tab, &index))
                    .collect();
                SparseMatrix { cols }
            })
            .collect();
        let transpositions = (0..n * n).map(|_| OnceLock::new()).collect();
        Irrep { shape: shape.clone(), n, tableaux, index, simple, transpositions }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// `N = |τ|`
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    pub fn tableau(&self, t: usize) -> &Tableau {
        &self.tableaux[t]
    }

    pub fn index_of(&self, tab: &Tableau) -> Option<usize> {
        if tab.shape() != &self.shape {
            return None;
        }
        self.index.get(&tab.content_vector()).copied()
    }

    pub fn index_of_contents(&self, contents: &[i64]) -> Option<usize> {
        self.index.get(contents).copied()
    }

    /// `τ(s_i)`, `1 ≤ i < N`.
    pub fn simple(&self, i: usize) -> &SparseMatrix {
        &self.simple[i - 1]
    }

    /// `τ((i,j))` for `i ≠ j`, via `(i,j) = s_{j−1}(i,j−1)s_{j−1}`.
    pub fn transposition(&self, i: usize, j: usize) -> &SparseMatrix {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        assert!(i >= 1 && i < j && j <= self.n, "transposition ({i},{j}) out of range");
        if j == i + 1 {
            return self.simple(i);
        }
        self.transpositions[(i - 1) * self.n + (j - 1)].get_or_init(|| {
            let s = self.simple(j - 1);
            s.mul(self.transposition(i, j - 1)).mul(s)
        })
    }

    /// `τ(w)` through a reduced word of `w`.
    pub fn matrix_of(&self, w: &Perm) -> SparseMatrix {
        let mut acc = SparseMatrix::identity(self.dim());
        for a in w.reduced_word() {
            acc = acc.mul(self.simple(a));
        }
        acc
    }
}

/// Column `t` of `τ(s_i)`: same row gives `T`, same column `−T`; otherwise with
/// `b = 1/(c(i,T) − c(i+1,T))` and `T'` the tableau with `i, i+1` swapped,
/// `bT + T'` when `b > 0` and `bT + (1 − b²)T'` when `b < 0`.
fn simple_column(i: usize, t: usize, tab: &Tableau, index: &HashMap<Vec<i64>, usize>) -> Vec<(usize, BigRational)> {
    if tab.row_of(i) == tab.row_of(i + 1) {
        return vec![(t, BigRational::one())];
    }
    if tab.col_of(i) == tab.col_of(i + 1) {
        return vec![(t, -BigRational::one())];
    }
    let diff = tab.content(i) - tab.content(i + 1);
    let b = BigRational::new(1.into(), diff.into());
    let mut swapped = tab.content_vector();
    swapped.swap(i - 1, i);
    let t2 = index[&swapped];
    let other = if b.is_positive() { BigRational::one() } else { BigRational::one() - &b * &b };
    let mut col = vec![(t, b), (t2, other)];
    col.sort_by_key(|(r, _)| *r);
    col
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rational;

    fn shape(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn example_two_by_two() {
        let ir = Irrep::of(&shape(&[2, 2]));
        let t = ir.index_of(&Tableau::rsyt(vec![vec![4, 3], vec![2, 1]]).unwrap()).unwrap();
        let t2 = ir.index_of(&Tableau::rsyt(vec![vec![4, 2], vec![3, 1]]).unwrap()).unwrap();
        assert_eq!(ir.simple(1).column(t), &[(t, rational(1, 1))]);
        assert_eq!(ir.simple(1).column(t2), &[(t2, rational(-1, 1))]);
        let col: HashMap<usize, BigRational> = ir.simple(2).column(t).iter().cloned().collect();
        assert_eq!(col[&t], rational(-1, 2));
        assert_eq!(col[&t2], rational(3, 4));
    }

    #[test]
    fn involution_and_braid() {
        for p in [&[3, 2][..], &[2, 2, 1], &[3, 1, 1], &[2, 2, 2, 2]] {
            let ir = Irrep::of(&shape(p));
            let id = SparseMatrix::identity(ir.dim());
            for i in 1..ir.n() {
                let s = ir.simple(i);
                assert_eq!(s.mul(s), id);
                if i + 1 < ir.n() {
                    let t = ir.simple(i + 1);
                    assert_eq!(s.mul(t).mul(s), t.mul(s).mul(t));
                }
            }
        }
    }

    #[test]
    fn jucys_murphy_diagonal() {
        let ir = Irrep::of(&shape(&[3, 2, 1]));
        for i in 1..=ir.n() {
            for (t, tab) in ir.tableaux().iter().enumerate() {
                let mut acc = vec![(t, BigRational::zero())];
                let e = vec![(t, BigRational::one())];
                for j in i + 1..=ir.n() {
                    let img = ir.transposition(i, j).apply(&e);
                    acc.extend(img);
                }
                let mut sum = vec![BigRational::zero(); ir.dim()];
                for (r, v) in acc {
                    sum[r] += v;
                }
                for (r, v) in sum.iter().enumerate() {
                    let want = if r == t { BigRational::from_integer(tab.content(i).into()) } else { BigRational::zero() };
                    assert_eq!(v, &want);
                }
            }
        }
    }

    #[test]
    fn matrix_of_matches_transposition() {
        let ir = Irrep::of(&shape(&[3, 2]));
        let w = Perm::transposition(1, 4, 5);
        assert_eq!(&ir.matrix_of(&w), ir.transposition(1, 4));
    }
}
