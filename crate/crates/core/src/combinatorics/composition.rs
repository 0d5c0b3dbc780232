use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::partition::Partition;
use super::perm::Perm;

/// An exponent vector `α ∈ ℕ₀^N`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(pub Vec<u32>);

/// Outcome of comparing two compositions in the ⊴ order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    /// `α ⊲ β`
    Below,
    /// `β ⊲ α`
    Above,
    Equal,
    Incomparable,
}

impl Composition {
    pub fn new(entries: Vec<u32>) -> Self {
        Composition(entries)
    }

    pub fn zero(n: usize) -> Self {
        Composition(vec![0; n])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `α_i`, 1-indexed.
    pub fn get(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    /// `|α|`
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Nonincreasing rearrangement `α⁺`, same length.
    pub fn sorted_desc(&self) -> Composition {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Composition(v)
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn to_partition(&self) -> Partition {
        let parts = self.sorted_desc().0.into_iter().map(|v| v as usize).collect();
        Partition::new(parts).expect("sorted")
    }

    /// `s_i α`: swap entries `i` and `i+1` (1-indexed).
    pub fn swap(&self, i: usize) -> Composition {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Composition(v)
    }

    /// `wα` with `(wα)_i = α_{w⁻¹(i)}`.
    pub fn permuted(&self, w: &Perm) -> Composition {
        Composition(w.act(&self.0))
    }

    /// Scales every entry by `n`.
    pub fn scaled(&self, n: u32) -> Composition {
        Composition(self.0.iter().map(|v| v * n).collect())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<u32>> for Composition {
    fn from(v: Vec<u32>) -> Self {
        Composition(v)
    }
}

/// `r_α(i) = #{j: α_j > α_i} + #{j ≤ i: α_j = α_i}`; satisfies `r_α α = α⁺`.
pub fn rank_function(alpha: &Composition) -> Perm {
    let a = &alpha.0;
    let line: Vec<usize> = (0..a.len())
        .map(|i| {
            let greater = a.iter().filter(|&&x| x > a[i]).count();
            let equal_before = a[..=i].iter().filter(|&&x| x == a[i]).count();
            greater + equal_before
        })
        .collect();
    Perm::from_one_line(&line).expect("rank function is a permutation")
}

/// `α ≼ β` in the partial-sum order (reflexive).
fn partial_sums_leq(a: &[u32], b: &[u32]) -> bool {
    let (mut sa, mut sb) = (0u64, 0u64);
    for (x, y) in a.iter().zip(b) {
        sa += *x as u64;
        sb += *y as u64;
        if sa > sb {
            return false;
        }
    }
    true
}

fn strictly_below(a: &Composition, b: &Composition) -> bool {
    if a == b {
        return false;
    }
    let (ap, bp) = (a.sorted_desc(), b.sorted_desc());
    if ap == bp {
        partial_sums_leq(&a.0, &b.0)
    } else {
        partial_sums_leq(&ap.0, &bp.0)
    }
}

/// Compares in the order `α ⊲ β ⟺ α⁺ ≺ β⁺, or α⁺ = β⁺ and α ≺ β`.
/// Compositions of different length or degree are incomparable.
pub fn compare_order(a: &Composition, b: &Composition) -> Order {
    if a.len() != b.len() || a.degree() != b.degree() {
        return Order::Incomparable;
    }
    if a == b {
        Order::Equal
    } else if strictly_below(a, b) {
        Order::Below
    } else if strictly_below(b, a) {
        Order::Above
    } else {
        Order::Incomparable
    }
}

/// All distinct rearrangements of `v`, in increasing lex order.
pub fn distinct_permutations(v: &[u32]) -> Vec<Vec<u32>> {
    let mut cur: Vec<u32> = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // next_permutation
    loop {
        let n = cur.len();
        if n < 2 {
            break;
        }
        let Some(i) = (0..n - 1).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
    out
}

type LowerCache = Mutex<HashMap<(Vec<u32>, usize), Arc<Vec<Composition>>>>;

/// Every composition of length `N` whose rearrangement is dominated by `α⁺`
/// (including the rearrangements of `α⁺` itself). Cached per `(α⁺, N)`.
fn dominated_rearrangements(alpha: &Composition) -> Arc<Vec<Composition>> {
    static CACHE: OnceLock<LowerCache> = OnceLock::new();
    let key = (alpha.sorted_desc().0, alpha.len());
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("cache lock").get(&key) {
        return v.clone();
    }
    let top = alpha.to_partition();
    let n = alpha.len();
    let mut all = Vec::new();
    for mu in Partition::all_of(top.size(), n) {
        if !mu.dominated_by(&top) {
            continue;
        }
        let mut padded: Vec<u32> = mu.parts().iter().map(|&p| p as u32).collect();
        padded.resize(n, 0);
        all.extend(distinct_permutations(&padded).into_iter().map(Composition));
    }
    all.sort();
    let all = Arc::new(all);
    cache.lock().expect("cache lock").insert(key, all.clone());
    all
}

/// `{γ : γ ⊴ α}`, sorted lexicographically.
pub fn lower_set(alpha: &Composition) -> Vec<Composition> {
    dominated_rearrangements(alpha)
        .iter()
        .filter(|g| matches!(compare_order(g, alpha), Order::Below | Order::Equal))
        .cloned()
        .collect()
}
