//! Bricks and the distinguished objects for `τ = (m^{2k})`, `σ = (mk, mk)`.

use super::composition::Composition;
use super::partition::Partition;
use super::tableau::Tableau;
use crate::error::Error;

/// Which of the two rectangular shapes a cell belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShapeKind {
    /// `σ = (mk, mk)`, bricks are column blocks.
    Sigma,
    /// `τ = (m^{2k})`, bricks are row pairs.
    Tau,
}

pub fn check_params(m: usize, k: usize) -> Result<(), Error> {
    if m < 1 || k < 2 {
        return Err(Error::BadShapeParams { m, k });
    }
    Ok(())
}

pub fn sigma(m: usize, k: usize) -> Partition {
    Partition::rectangle(2, m * k)
}

pub fn tau(m: usize, k: usize) -> Partition {
    Partition::rectangle(2 * k, m)
}

/// `S₀`: two rows, filled column by column with `2mk, 2mk−1, …, 1`.
pub fn s0(m: usize, k: usize) -> Result<Tableau, Error> {
    check_params(m, k)?;
    let n = m * k;
    let top = (1..=n).map(|c| 2 * n + 2 - 2 * c).collect();
    let bottom = (1..=n).map(|c| 2 * n + 1 - 2 * c).collect();
    Tableau::rsyt(vec![top, bottom])
}

/// `T₀`: the standard bricks stacked, largest entries on top.
pub fn t0(m: usize, k: usize) -> Result<Tableau, Error> {
    check_params(m, k)?;
    let mut rows = Vec::with_capacity(2 * k);
    for l in 0..k {
        let offset = 2 * (k - 1 - l) * m;
        rows.push((1..=m).map(|i| 2 * m + 2 - 2 * i + offset).collect());
        rows.push((1..=m).map(|i| 2 * m + 1 - 2 * i + offset).collect());
    }
    Tableau::rsyt(rows)
}

/// `λ = ((k−1)^{2m}, …, 1^{2m}, 0^{2m})`.
pub fn lambda(m: usize, k: usize) -> Result<Composition, Error> {
    check_params(m, k)?;
    Ok(Composition((0..k).rev().flat_map(|v| std::iter::repeat(v as u32).take(2 * m)).collect()))
}

/// The inv-maximal element `S_{(j,n)}` of `R_{j,n}`, `1 ≤ n < mk`.
pub fn s_jn(m: usize, k: usize, j: usize, n: usize) -> Result<Tableau, Error> {
    check_params(m, k)?;
    let cols = m * k;
    if !(1..=2).contains(&j) || n == 0 || n >= cols {
        return Err(Error::BadParams(format!("S_(j,n) needs j in {{1,2}} and 1 <= n < {cols}")));
    }
    let two = 2 * cols;
    let mut top: Vec<usize> = (1..=cols).map(|i| two + 2 - 2 * i).collect();
    let mut bottom: Vec<usize> = (1..=cols).map(|i| two + 1 - 2 * i).collect();
    let (a, b) = (n - 1, n);
    if j == 1 {
        top[a] = two - 2 * n + 1;
        top[b] = two - 2 * n + 2;
        bottom[a] = two - 2 * n;
        bottom[b] = two - 2 * n - 1;
    } else {
        top[a] = two - 2 * n + 2;
        top[b] = two - 2 * n + 1;
        bottom[a] = two - 2 * n - 1;
        bottom[b] = two - 2 * n;
    }
    Tableau::column_strict(vec![top, bottom])
}

/// Index `ℓ` of the brick `B_ℓ` containing the 1-indexed cell.
pub fn brick_of_cell(kind: ShapeKind, m: usize, cell: (usize, usize)) -> usize {
    match kind {
        ShapeKind::Sigma => (cell.1 - 1) / m,
        ShapeKind::Tau => (cell.0 - 1) / 2,
    }
}

/// Index of the brick holding entry `i` of `t`.
pub fn brick_of(i: usize, t: &Tableau, m: usize, kind: ShapeKind) -> usize {
    brick_of_cell(kind, m, t.position(i))
}
