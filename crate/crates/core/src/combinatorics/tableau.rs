use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::partition::Partition;
use crate::error::Error;

/// A filling of a Ferrers diagram by `1..N`, each used once.
///
/// Cells are 1-indexed `(row, col)`. Whether the filling is reverse standard
/// (rows and columns decreasing) or only column-strict is a predicate, not a
/// separate type; constructors [`Tableau::rsyt`] and
/// [`Tableau::column_strict`] validate the respective class.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
    // pos[i-1] = (row, col) of entry i
    pos: Vec<(usize, usize)>,
}

impl Tableau {
    /// Any bijective filling of a partition shape.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self, Error> {
        if rows.is_empty() {
            return Err(Error::InvalidTableau("no rows".into()));
        }
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidTableau("empty row".into()));
        }
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|_| Error::InvalidTableau("row lengths must be weakly decreasing".into()))?;
        let n = shape.size();
        let mut pos = vec![(0, 0); n];
        for (r, row) in rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                if e == 0 || e > n || pos[e - 1] != (0, 0) {
                    return Err(Error::InvalidTableau(format!("entries must be a bijection onto 1..{n}")));
                }
                pos[e - 1] = (r + 1, c + 1);
            }
        }
        Ok(Tableau { shape, rows, pos })
    }

    /// A reverse standard Young tableau.
    pub fn rsyt(rows: Vec<Vec<usize>>) -> Result<Self, Error> {
        let t = Self::from_rows(rows)?;
        if !t.is_rsyt() {
            return Err(Error::InvalidTableau(format!("{t:?} is not reverse standard")));
        }
        Ok(t)
    }

    /// A tableau whose columns (but not necessarily rows) decrease.
    pub fn column_strict(rows: Vec<Vec<usize>>) -> Result<Self, Error> {
        let t = Self::from_rows(rows)?;
        if !t.is_column_strict() {
            return Err(Error::InvalidTableau(format!("{t:?} is not column-strict")));
        }
        Ok(t)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.pos.len()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// `T[row, col]`, 1-indexed.
    pub fn entry(&self, row: usize, col: usize) -> usize {
        self.rows[row - 1][col - 1]
    }

    pub fn position(&self, i: usize) -> (usize, usize) {
        self.pos[i - 1]
    }

    pub fn row_of(&self, i: usize) -> usize {
        self.pos[i - 1].0
    }

    pub fn col_of(&self, i: usize) -> usize {
        self.pos[i - 1].1
    }

    /// `c(i,T) = col − row`
    pub fn content(&self, i: usize) -> i64 {
        let (r, c) = self.pos[i - 1];
        c as i64 - r as i64
    }

    pub fn content_vector(&self) -> Vec<i64> {
        (1..=self.n()).map(|i| self.content(i)).collect()
    }

    pub fn is_column_strict(&self) -> bool {
        (1..self.rows.len()).all(|r| self.rows[r].iter().zip(&self.rows[r - 1]).all(|(lo, hi)| lo < hi))
    }

    pub fn is_rsyt(&self) -> bool {
        self.is_column_strict() && self.rows.iter().all(|row| row.windows(2).all(|w| w[0] > w[1]))
    }

    /// The filling with entries `i` and `j` interchanged (no validity check).
    pub fn swapped(&self, i: usize, j: usize) -> Tableau {
        let mut t = self.clone();
        let (pi, pj) = (self.pos[i - 1], self.pos[j - 1]);
        t.rows[pi.0 - 1][pi.1 - 1] = j;
        t.rows[pj.0 - 1][pj.1 - 1] = i;
        t.pos[i - 1] = pj;
        t.pos[j - 1] = pi;
        t
    }

    /// The filling with the entries in cells `a` and `b` interchanged.
    pub fn swap_cells(&self, a: (usize, usize), b: (usize, usize)) -> Tableau {
        self.swapped(self.entry(a.0, a.1), self.entry(b.0, b.1))
    }
}

/// All reverse standard tableaux of `shape`, sorted by content vector in
/// descending lexicographic order.
pub fn enumerate_rsyt(shape: &Partition) -> Vec<Tableau> {
    let n = shape.size();
    if n == 0 {
        return vec![Tableau { shape: shape.clone(), rows: Vec::new(), pos: Vec::new() }];
    }
    let mut out = Vec::new();
    let mut fill: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    // place n, n-1, ..., 1 at addable cells inside the shape
    fn rec(next: usize, shape: &Partition, fill: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
        if next == 0 {
            out.push(Tableau::from_rows(fill.clone()).expect("valid filling"));
            return;
        }
        for r in 0..fill.len() {
            let len = fill[r].len();
            let fits_shape = len < shape.part(r);
            let fits_above = r == 0 || fill[r - 1].len() > len;
            if fits_shape && fits_above {
                fill[r].push(next);
                rec(next - 1, shape, fill, out);
                fill[r].pop();
            }
        }
    }
    rec(n, shape, &mut fill, &mut out);
    out.sort_by_cached_key(|t| std::cmp::Reverse(t.content_vector()));
    out
}

/// The unique reverse standard tableau with the given content vector, built
/// by inserting `N, N−1, …, 1` at the addable cell of the required content.
pub fn rsyt_from_contents(contents: &[i64]) -> Result<Tableau, Error> {
    let n = contents.len();
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for i in (1..=n).rev() {
        let c = contents[i - 1];
        // addable cells: end of each row (if shorter than the row above) and a new row
        let mut placed = false;
        for r in 0..=rows.len() {
            let len = rows.get(r).map_or(0, Vec::len);
            let addable = r == 0 || rows[r - 1].len() > len;
            if addable && (len as i64 + 1) - (r as i64 + 1) == c {
                if r == rows.len() {
                    rows.push(Vec::new());
                }
                rows[r].push(i);
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(Error::NoSuchTableau(contents.to_vec()));
        }
    }
    if rows.is_empty() {
        return Err(Error::NoSuchTableau(contents.to_vec()));
    }
    Tableau::rsyt(rows)
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// Aligned grid, one row per line.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.n().to_string().len();
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|e| format!("{e:>width$}")).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

/// Deserializes any bijective filling; callers check the tableau class.
impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<usize>>::deserialize(d)?;
        Tableau::from_rows(rows).map_err(serde::de::Error::custom)
    }
}
