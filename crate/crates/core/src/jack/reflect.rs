//! Action of a simple reflection on `J_{α,T}`.

use num_traits::{One, Signed};
use serde::Serialize;

use super::construct::{leading_vector, JackLabel, JackPolynomial};
use crate::combinatorics::rank_function;
use crate::error::Error;
use crate::field::RatFunc;
use crate::operators::cherednik_prime;

/// Which transformation rule applies to `s_i J_{α,T}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReflectionCase {
    /// `α_{i+1} > α_i`: `(s_i − b)J_{α,T} = J_{s_iα,T}`.
    Raise,
    /// `α_i > α_{i+1}`: `(s_i − b)J_{α,T} = (1 − b²)J_{s_iα,T}`.
    Lower,
    /// Equal parts, `j = r_α(i)` and `j+1` in one row: `s_iJ = J`.
    SameRow,
    /// Equal parts, `j` and `j+1` in one column: `s_iJ = −J`.
    SameColumn,
    /// Equal parts, `0 < b ≤ 1/2`: `(s_i − b)J_{α,T} = J_{α,T^{(j)}}`.
    SwapUp,
    /// Equal parts, `−1/2 ≤ b < 0`: `(s_i − b)J_{α,T} = (1 − b²)J_{α,T^{(j)}}`.
    SwapDown,
}

/// Outcome of applying `s_i`: the rule used, `b_{α,T}(i)`, and the polynomial
/// it produces (the input itself for the two eigenvector cases).
#[derive(Clone, Debug)]
pub struct Transformation {
    pub case: ReflectionCase,
    pub b: RatFunc,
    pub result: JackPolynomial,
}

fn verify_eigen(j: &JackPolynomial) -> Result<(), Error> {
    let kappa = RatFunc::kappa();
    let irrep = j.irrep();
    let t = irrep.index_of(&j.label.tableau).expect("shape");
    for (tt, q) in leading_vector(irrep, &j.label.alpha, t) {
        if j.poly.coeff(&j.label.alpha, tt) != Some(&RatFunc::from_rational(&q)) {
            return Err(Error::ClosureViolation(format!("leading term of J_{:?} is not normalized", j.label.alpha)));
        }
    }
    for i in 1..=j.poly.n() {
        let lhs = cherednik_prime(i, &j.poly, &kappa)?;
        if lhs != j.poly.scale(&j.spectral.get(i).value()) {
            return Err(Error::NotIsotypic(i));
        }
    }
    Ok(())
}

/// Applies `s_i` to `J_{α,T}` following the rule selected by `α_i` vs `α_{i+1}`
/// and, for equal parts, by the relative position of `j = r_α(i)` and `j+1` in
/// `T`. Every produced polynomial is checked against its own spectral vector.
pub fn apply_simple_reflection(i: usize, j: &JackPolynomial) -> Result<Transformation, Error> {
    let n = j.poly.n();
    if i == 0 || i >= n {
        return Err(Error::BadParams(format!("simple reflection index {i} out of range 1..{n}")));
    }
    let alpha = &j.label.alpha;
    let t = &j.label.tableau;
    let b = j.spectral.b_value(i)?;
    let si = j.poly.act_simple(i);
    let (ai, ai1) = (alpha.get(i), alpha.get(i + 1));
    let one_minus_b2 = RatFunc::one() - &(b.clone() * &b);

    let shifted = || si.sub(&j.poly.scale(&b)).expect("same shape");
    let build = |label: JackLabel, scale: Option<&RatFunc>| -> Result<JackPolynomial, Error> {
        let mut poly = shifted();
        if let Some(s) = scale {
            poly = poly.scale(&s.inverse()?);
        }
        let spectral = label.spectral();
        let out = JackPolynomial { label, poly, spectral };
        verify_eigen(&out)?;
        Ok(out)
    };

    let (case, result) = if ai1 > ai {
        (ReflectionCase::Raise, build(JackLabel::new(alpha.swap(i), t.clone())?, None)?)
    } else if ai > ai1 {
        (ReflectionCase::Lower, build(JackLabel::new(alpha.swap(i), t.clone())?, Some(&one_minus_b2))?)
    } else {
        let r = rank_function(alpha);
        let jj = r.apply(i);
        debug_assert_eq!(r.apply(i + 1), jj + 1);
        if t.row_of(jj) == t.row_of(jj + 1) {
            if si != j.poly {
                return Err(Error::ClosureViolation(format!("s_{i} J_{alpha:?} != J")));
            }
            (ReflectionCase::SameRow, j.clone())
        } else if t.col_of(jj) == t.col_of(jj + 1) {
            if si != j.poly.neg() {
                return Err(Error::ClosureViolation(format!("s_{i} J_{alpha:?} != -J")));
            }
            (ReflectionCase::SameColumn, j.clone())
        } else {
            let swapped = t.swapped(jj, jj + 1);
            if !swapped.is_rsyt() {
                return Err(Error::NotAnRsyt(jj, jj + 1));
            }
            let label = JackLabel::new(alpha.clone(), swapped)?;
            let positive = b.as_rational().expect("constant b for equal parts").is_positive();
            if positive {
                (ReflectionCase::SwapUp, build(label, None)?)
            } else {
                (ReflectionCase::SwapDown, build(label, Some(&one_minus_b2))?)
            }
        }
    };
    Ok(Transformation { case, b, result })
}
