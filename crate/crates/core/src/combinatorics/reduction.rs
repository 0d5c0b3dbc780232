//! Permissible steps on two-row tableaux and reduction to the inv-maximal
//! element of `Y(σ)` or `R_{j,n}`.

use super::tableau::Tableau;
use crate::error::Error;

/// `inv(S) = #{(a,b): a < b, row(a,S) < row(b,S)}`
pub fn inv_statistic(s: &Tableau) -> usize {
    let n = s.n();
    let mut count = 0;
    for a in 1..=n {
        for b in a + 1..=n {
            if s.row_of(a) < s.row_of(b) {
                count += 1;
            }
        }
    }
    count
}

/// `row(i) = 2`, `row(i+1) = 1` and `col(i) < col(i+1)`.
pub fn is_permissible_step(s: &Tableau, i: usize) -> bool {
    i >= 1
        && i < s.n()
        && s.row_of(i) == 2
        && s.row_of(i + 1) == 1
        && s.col_of(i) < s.col_of(i + 1)
}

/// `S^{(i)}`: entries `i` and `i+1` interchanged.
pub fn apply_step(s: &Tableau, i: usize) -> Tableau {
    s.swapped(i, i + 1)
}

fn is_two_row_rectangle(s: &Tableau) -> bool {
    let p = s.shape().parts();
    p.len() == 2 && p[0] == p[1]
}

/// Membership in `R_{j,n}`: `S` is column-strict and swapping the cells
/// `[j,n]` and `[j,n+1]` yields a reverse standard tableau.
pub fn in_r_class(s: &Tableau, j: usize, n: usize) -> bool {
    if !is_two_row_rectangle(s) || !(1..=2).contains(&j) || n == 0 || n >= s.shape().part(0) {
        return false;
    }
    s.is_column_strict() && s.swap_cells((j, n), (j, n + 1)).is_rsyt()
}

/// The `(j, n)` with `S ∈ R_{j,n}`, if `S` is column-strict but not reverse standard.
pub fn r_class_of(s: &Tableau) -> Option<(usize, usize)> {
    if s.is_rsyt() || !is_two_row_rectangle(s) {
        return None;
    }
    let cols = s.shape().part(0);
    (1..=2).flat_map(|j| (1..cols).map(move |n| (j, n))).find(|&(j, n)| in_r_class(s, j, n))
}

/// Indices `i` such that applying `s_i` left to right carries `S` to the
/// inv-maximal element of its class (`S₀` for reverse standard `S`,
/// `S_{(j,n)}` for `S ∈ R_{j,n}`). At every stage the largest permissible
/// index that keeps the tableau in its class is taken.
pub fn reduce_by_permissible_steps(s: &Tableau) -> Result<Vec<usize>, Error> {
    if !is_two_row_rectangle(s) {
        return Err(Error::NotReducible(s.shape().parts().to_vec()));
    }
    let in_class: Box<dyn Fn(&Tableau) -> bool> = if s.is_rsyt() {
        Box::new(|t: &Tableau| t.is_rsyt())
    } else if let Some((j, n)) = r_class_of(s) {
        Box::new(move |t: &Tableau| in_r_class(t, j, n))
    } else {
        return Err(Error::InvalidTableau(format!("{s:?} is neither reverse standard nor in any R_(j,n)")));
    };
    let mut cur = s.clone();
    let mut steps = Vec::new();
    loop {
        let next = (1..cur.n()).rev().find(|&i| is_permissible_step(&cur, i) && in_class(&apply_step(&cur, i)));
        match next {
            Some(i) => {
                cur = apply_step(&cur, i);
                steps.push(i);
            }
            None => return Ok(steps),
        }
    }
}
