//! Dunkl, Cherednik-Dunkl and Jucys-Murphy operators on `P_τ`.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::combinatorics::Composition;
use crate::error::Error;
use crate::field::Scalar;
use crate::poly::{Irrep, TermKey, VectorPoly};

/// Names one of the operators, for the CLI and diagnostics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OperatorKind {
    Dunkl,
    Cherednik,
    CherednikPrime,
    JucysMurphy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OperatorTag {
    pub kind: OperatorKind,
    pub index: usize,
}

impl fmt::Display for OperatorTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            OperatorKind::Dunkl => "D",
            OperatorKind::Cherednik => "U",
            OperatorKind::CherednikPrime => "U'",
            OperatorKind::JucysMurphy => "omega",
        };
        write!(f, "{name}_{}", self.index)
    }
}

impl OperatorTag {
    pub fn apply<C: Scalar>(&self, p: &VectorPoly<C>, kappa: &C) -> Result<VectorPoly<C>, Error> {
        if self.index == 0 || self.index > p.n() {
            return Err(Error::BadParams(format!("operator index {} out of range 1..={}", self.index, p.n())));
        }
        Ok(match self.kind {
            OperatorKind::Dunkl => dunkl(self.index, p, kappa),
            OperatorKind::Cherednik => cherednik(self.index, p, kappa),
            OperatorKind::CherednikPrime => cherednik_prime(self.index, p, kappa)?,
            OperatorKind::JucysMurphy => jucys_murphy(self.index, p),
        })
    }
}

/// `(x^γ − x^{(i,j)γ}) / (x_i − x_j)` as a list of `(exponent, ±1)`.
pub fn divided_difference(exp: &Composition, i: usize, j: usize) -> Vec<(Composition, i64)> {
    let (a, b) = (exp.get(i), exp.get(j));
    let (hi, lo, sign) = match a.cmp(&b) {
        std::cmp::Ordering::Equal => return Vec::new(),
        std::cmp::Ordering::Greater => (a, b, 1),
        std::cmp::Ordering::Less => (b, a, -1),
    };
    (0..hi - lo)
        .map(|t| {
            let mut e = exp.clone();
            e.0[i - 1] = hi - 1 - t;
            e.0[j - 1] = lo + t;
            (e, sign)
        })
        .collect()
}

/// `D_i`
pub fn dunkl<C: Scalar>(i: usize, p: &VectorPoly<C>, kappa: &C) -> VectorPoly<C> {
    let irrep = p.irrep().clone();
    let n = p.n();
    let mut out = VectorPoly::zero(irrep.clone());
    for (k, v) in p.terms() {
        let gi = k.exp.get(i);
        if gi > 0 {
            let mut e = k.exp.clone();
            e.0[i - 1] -= 1;
            out.add_term(TermKey::new(e, k.tab), &(v.clone() * &C::from_int(gi as i64)));
        }
        let kv = v.clone() * kappa;
        for j in (1..=n).filter(|&j| j != i) {
            let dd = divided_difference(&k.exp, i, j);
            if dd.is_empty() {
                continue;
            }
            for (r, w) in irrep.transposition(i, j).column(k.tab) {
                let kvw = kv.clone() * &C::from_rational(w);
                for (e, s) in &dd {
                    let c = if *s > 0 { kvw.clone() } else { -kvw.clone() };
                    out.add_term(TermKey::new(e.clone(), *r), &c);
                }
            }
        }
    }
    out
}

/// `x_i D_i`
pub fn x_dunkl<C: Scalar>(i: usize, p: &VectorPoly<C>, kappa: &C) -> VectorPoly<C> {
    dunkl(i, p, kappa).mul_x(i)
}

/// `ω_i = Σ_{j>i} (i,j)`; `ω_N = 0`.
pub fn jucys_murphy<C: Scalar>(i: usize, p: &VectorPoly<C>) -> VectorPoly<C> {
    let mut out = VectorPoly::zero(p.irrep().clone());
    for j in i + 1..=p.n() {
        out.add_scaled(&p.act_transposition(i, j), &C::one()).expect("same shape");
    }
    out
}

/// `U_i p = D_i(x_i p) − κ Σ_{j<i} (i,j) p`
pub fn cherednik<C: Scalar>(i: usize, p: &VectorPoly<C>, kappa: &C) -> VectorPoly<C> {
    let mut out = dunkl(i, &p.mul_x(i), kappa);
    let minus_kappa = -kappa.clone();
    for j in 1..i {
        out.add_scaled(&p.act_transposition(i, j), &minus_kappa).expect("same shape");
    }
    out
}

/// `U′_i = (1/κ) x_i D_i + ω_i`, expanded so that no division by `κ` touches
/// the difference terms.
pub fn cherednik_prime<C: Scalar>(i: usize, p: &VectorPoly<C>, kappa: &C) -> Result<VectorPoly<C>, Error> {
    let inv_kappa = kappa.inverse()?;
    let irrep = p.irrep().clone();
    let mut out = VectorPoly::zero(irrep.clone());
    for (k, v) in p.terms() {
        let gi = k.exp.get(i);
        if gi > 0 {
            out.add_term(k.clone(), &(v.clone() * &C::from_int(gi as i64) * &inv_kappa));
        }
        for (key, q) in difference_terms(&irrep, i, k) {
            out.add_term(key, &(v.clone() * &C::from_rational(&q)));
        }
    }
    Ok(out)
}

/// `Σ_{j≠i} x_i ∂_{ij}(x^γ) ⊗ τ((i,j))T + Σ_{j>i} x^{(i,j)γ} ⊗ τ((i,j))T`,
/// the `κ`-free part of `U′_i` applied to one basis element.
fn difference_terms(irrep: &Irrep, i: usize, k: &TermKey) -> Vec<(TermKey, BigRational)> {
    let n = irrep.n();
    let mut out = Vec::new();
    for j in (1..=n).filter(|&j| j != i) {
        let col = irrep.transposition(i, j).column(k.tab);
        for (mut e, s) in divided_difference(&k.exp, i, j) {
            e.0[i - 1] += 1;
            for (r, w) in col {
                out.push((TermKey::new(e.clone(), *r), if s > 0 { w.clone() } else { -w.clone() }));
            }
        }
        if j > i {
            let mut e = k.exp.clone();
            e.0.swap(i - 1, j - 1);
            for (r, w) in col {
                out.push((TermKey::new(e.clone(), *r), w.clone()));
            }
        }
    }
    out
}

/// Column of `κU′_i` at one basis element, as entries `a + bκ` with rational `a`, `b`.
pub fn kappa_u_prime_column(irrep: &Irrep, i: usize, k: &TermKey) -> Vec<(TermKey, BigRational, BigRational)> {
    let mut merged: std::collections::BTreeMap<TermKey, (BigRational, BigRational)> = Default::default();
    let gi = k.exp.get(i);
    if gi > 0 {
        merged.insert(k.clone(), (BigRational::from_integer(gi.into()), BigRational::zero()));
    }
    for (key, q) in difference_terms(irrep, i, k) {
        let e = merged.entry(key).or_insert_with(|| (BigRational::zero(), BigRational::zero()));
        e.1 += q;
    }
    merged
        .into_iter()
        .filter(|(_, (a, b))| !(a.is_zero() && b.is_zero()))
        .map(|(key, (a, b))| (key, a, b))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Partition;
    use crate::field::{rational, RatFunc};
    use num_traits::One;

    fn c(v: &[u32]) -> Composition {
        Composition(v.to_vec())
    }

    #[test]
    fn divided_difference_closed_form() {
        // (x1^3 − x2^3)/(x1 − x2) = x1^2 + x1 x2 + x2^2
        let dd = divided_difference(&c(&[3, 0]), 1, 2);
        assert_eq!(dd, vec![(c(&[2, 0]), 1), (c(&[1, 1]), 1), (c(&[0, 2]), 1)]);
        let dd = divided_difference(&c(&[1, 3]), 1, 2);
        assert_eq!(dd, vec![(c(&[2, 1]), -1), (c(&[1, 2]), -1)]);
        assert!(divided_difference(&c(&[2, 2]), 1, 2).is_empty());
    }

    #[test]
    fn constants_are_killed() {
        let irr = Irrep::of(&Partition::new(vec![2, 1]).unwrap());
        let p = VectorPoly::monomial(irr, c(&[0, 0, 0]), 1, RatFunc::one());
        for i in 1..=3 {
            assert!(dunkl(i, &p, &RatFunc::kappa()).is_zero());
        }
    }

    #[test]
    fn u_prime_on_constants_is_content() {
        let irr = Irrep::of(&Partition::new(vec![3, 2]).unwrap());
        let k = RatFunc::kappa();
        for t in 0..irr.dim() {
            let p = VectorPoly::monomial(irr.clone(), c(&[0; 5]), t, RatFunc::one());
            for i in 1..=5 {
                let ct = RatFunc::from_int(irr.tableau(t).content(i));
                assert_eq!(cherednik_prime(i, &p, &k).unwrap(), p.scale(&ct));
                let u = cherednik(i, &p, &k);
                assert_eq!(u, p.scale(&(RatFunc::one() + &(k.clone() * &ct))));
            }
        }
    }

    #[test]
    fn jucys_murphy_last_is_zero() {
        let irr = Irrep::of(&Partition::new(vec![2, 2]).unwrap());
        let p = VectorPoly::monomial(irr, c(&[1, 0, 2, 0]), 0, rational(1, 1));
        assert!(jucys_murphy(4, &p).is_zero());
    }

    #[test]
    fn kappa_column_matches_operator() {
        let irr = Irrep::of(&Partition::new(vec![2, 1]).unwrap());
        let k0 = rational(2, 7);
        let key = TermKey::new(c(&[2, 0, 1]), 1);
        let p = VectorPoly::monomial(irr.clone(), key.exp.clone(), key.tab, BigRational::one());
        let direct = cherednik_prime(2, &p, &k0).unwrap().scale(&k0);
        let mut assembled = VectorPoly::zero(irr.clone());
        for (kk, a, b) in kappa_u_prime_column(&irr, 2, &key) {
            assembled.add_term(kk, &(a + b * &k0));
        }
        assert_eq!(direct, assembled);
    }
}
