use std::fmt;

use crate::error::Error;

/// A permutation of `{1..N}` in one-line form. Products compose right to
/// left: `(u·v)(i) = u(v(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    // 0-indexed images
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n).collect() }
    }

    /// The simple reflection `s_i = (i, i+1)`, `1 ≤ i < n`.
    pub fn simple(i: usize, n: usize) -> Self {
        Perm::transposition(i, i + 1, n)
    }

    /// The transposition `(i, j)` (1-indexed).
    pub fn transposition(i: usize, j: usize, n: usize) -> Self {
        assert!(i >= 1 && j >= 1 && i <= n && j <= n, "transposition out of range");
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, j - 1);
        Perm { images }
    }

    /// From one-line notation with 1-indexed values.
    pub fn from_one_line(line: &[usize]) -> Result<Self, Error> {
        let n = line.len();
        let mut seen = vec![false; n];
        for &v in line {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::Parse(format!("{line:?} is not a permutation")));
            }
            seen[v - 1] = true;
        }
        Ok(Perm { images: line.iter().map(|v| v - 1).collect() })
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `w(i)`, 1-indexed.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self · other`
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len());
        Perm { images: other.images.iter().map(|&v| self.images[v]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Perm { images: inv }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.images[i] > self.images[j])
            .count()
    }

    /// A reduced word `[a₁, …, a_r]` with `self = s_{a₁} s_{a₂} ⋯ s_{a_r}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.images.clone();
        let mut pushed = Vec::new();
        // right-multiplying by s_i swaps positions i and i+1 and removes one inversion
        loop {
            let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) else {
                break;
            };
            w.swap(i, i + 1);
            pushed.push(i + 1);
        }
        pushed.reverse();
        pushed
    }

    /// `(w·v)_i = v_{w⁻¹(i)}` for any sequence `v`.
    pub fn act<T: Clone>(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.len());
        let mut out = v.to_vec();
        for (i, &wi) in self.images.iter().enumerate() {
            out[wi] = v[i].clone();
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}
