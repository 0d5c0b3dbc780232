//! Sparse elements of `P_τ = P ⊗ V_τ`.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;

use super::irrep::{Irrep, SparseMatrix};
use crate::combinatorics::{Composition, Perm};
use crate::error::Error;
use crate::field::{RatFunc, Scalar};

/// Basis label `x^exp ⊗ T_tab`, ordered graded-lexicographically on the
/// exponent and then by tableau index.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TermKey {
    pub exp: Composition,
    pub tab: usize,
}

impl TermKey {
    pub fn new(exp: Composition, tab: usize) -> Self {
        TermKey { exp, tab }
    }
}

impl Ord for TermKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exp
            .degree()
            .cmp(&other.exp.degree())
            .then_with(|| self.exp.cmp(&other.exp))
            .then_with(|| self.tab.cmp(&other.tab))
    }
}

impl PartialOrd for TermKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A vector-valued polynomial with coefficients in `C`; zero coefficients are never stored.
#[derive(Clone)]
pub struct VectorPoly<C> {
    irrep: Arc<Irrep>,
    terms: BTreeMap<TermKey, C>,
}

impl<C: Scalar> PartialEq for VectorPoly<C> {
    fn eq(&self, other: &Self) -> bool {
        self.irrep.shape() == other.irrep.shape() && self.terms == other.terms
    }
}

impl<C: Scalar> VectorPoly<C> {
    pub fn zero(irrep: Arc<Irrep>) -> Self {
        VectorPoly { irrep, terms: BTreeMap::new() }
    }

    /// `c · x^exp ⊗ T_tab`
    pub fn monomial(irrep: Arc<Irrep>, exp: Composition, tab: usize, c: C) -> Self {
        let mut p = Self::zero(irrep);
        p.add_term(TermKey::new(exp, tab), &c);
        p
    }

    /// `x^exp ⊗ v` for a rational vector `v ∈ V_τ`.
    pub fn from_vector(irrep: Arc<Irrep>, exp: &Composition, v: &[(usize, BigRational)]) -> Self {
        let mut p = Self::zero(irrep);
        for (t, q) in v {
            p.add_term(TermKey::new(exp.clone(), *t), &C::from_rational(q));
        }
        p
    }

    pub fn from_terms(irrep: Arc<Irrep>, terms: impl IntoIterator<Item = (TermKey, C)>) -> Self {
        let mut p = Self::zero(irrep);
        for (k, c) in terms {
            p.add_term(k, &c);
        }
        p
    }

    pub fn irrep(&self) -> &Arc<Irrep> {
        &self.irrep
    }

    pub fn n(&self) -> usize {
        self.irrep.n()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &Composition, tab: usize) -> Option<&C> {
        self.terms.get(&TermKey::new(exp.clone(), tab))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Distinct exponents `x^β` appearing with a nonzero vector coefficient.
    pub fn monomials(&self) -> BTreeSet<Composition> {
        self.terms.keys().map(|k| k.exp.clone()).collect()
    }

    pub fn num_monomials(&self) -> usize {
        self.monomials().len()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.exp.degree()).max()
    }

    /// `self += c · (basis element key)`
    pub fn add_term(&mut self, key: TermKey, c: &C) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(key.exp.len(), self.n());
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_shape(&self, other: &Self) -> Result<(), Error> {
        if self.irrep.shape() != other.irrep.shape() {
            return Err(Error::ShapeMismatch(format!("{} vs {}", self.irrep.shape(), other.irrep.shape())));
        }
        Ok(())
    }

    /// `self += c · other`
    pub fn add_scaled(&mut self, other: &Self, c: &C) -> Result<(), Error> {
        self.check_shape(other)?;
        if c.is_zero() {
            return Ok(());
        }
        let unit = c.is_one();
        for (k, v) in &other.terms {
            if unit {
                self.add_term(k.clone(), v);
            } else {
                self.add_term(k.clone(), &(v.clone() * c));
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        let mut out = self.clone();
        out.add_scaled(other, &C::one())?;
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        let mut out = self.clone();
        out.add_scaled(other, &-C::one())?;
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.irrep.clone());
        }
        VectorPoly {
            irrep: self.irrep.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v.clone() * c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        VectorPoly {
            irrep: self.irrep.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v.clone())).collect(),
        }
    }

    /// Multiplication by `x_i` (1-indexed).
    pub fn mul_x(&self, i: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| {
                let mut e = k.exp.clone();
                e.0[i - 1] += 1;
                (TermKey::new(e, k.tab), v.clone())
            })
            .collect();
        VectorPoly { irrep: self.irrep.clone(), terms }
    }

    /// Multiplication by the scalar monomial `c · x^exp`.
    pub fn mul_monomial(&self, exp: &Composition, c: &C) -> Self {
        let mut out = Self::zero(self.irrep.clone());
        for (k, v) in &self.terms {
            let e = Composition(k.exp.0.iter().zip(&exp.0).map(|(a, b)| a + b).collect());
            out.add_term(TermKey::new(e, k.tab), &(v.clone() * c));
        }
        out
    }

    /// Applies a matrix on `V_τ` to every vector coefficient.
    pub fn map_tableaux(&self, m: &SparseMatrix) -> Self {
        let mut out = Self::zero(self.irrep.clone());
        for (k, v) in &self.terms {
            for (r, w) in m.column(k.tab) {
                out.add_term(TermKey::new(k.exp.clone(), *r), &(v.clone() * &C::from_rational(w)));
            }
        }
        out
    }

    /// `p(xw)` on the scalar part only: `x^γ ↦ x^{wγ}`.
    pub fn permute_variables(&self, w: &Perm) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| (TermKey::new(k.exp.permuted(w), k.tab), v.clone()))
            .collect();
        VectorPoly { irrep: self.irrep.clone(), terms }
    }

    fn act_with(&self, w: &Perm, m: &SparseMatrix) -> Self {
        self.permute_variables(w).map_tableaux(m)
    }

    /// `w p(x) = τ(w) p(xw)`
    pub fn act(&self, w: &Perm) -> Self {
        self.act_with(w, &self.irrep.matrix_of(w))
    }

    /// Action of `s_i`.
    pub fn act_simple(&self, i: usize) -> Self {
        let ir = self.irrep.clone();
        self.act_with(&Perm::simple(i, self.n()), ir.simple(i))
    }

    /// Action of the transposition `(i,j)`.
    pub fn act_transposition(&self, i: usize, j: usize) -> Self {
        let ir = self.irrep.clone();
        self.act_with(&Perm::transposition(i, j, self.n()), ir.transposition(i, j))
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> VectorPoly<D> {
        VectorPoly::from_terms(self.irrep.clone(), self.terms.iter().map(|(k, v)| (k.clone(), f(v))))
    }

    /// Whether `self = c · other` for some scalar `c`; returns `c` (zero when `self` is zero).
    pub fn ratio_to(&self, other: &Self) -> Option<C> {
        if self.is_zero() {
            return Some(C::zero());
        }
        let (k, v) = other.terms.iter().next()?;
        let c = self.terms.get(k)?.clone() * &v.inverse().ok()?;
        if *self == other.scale(&c) {
            Some(c)
        } else {
            None
        }
    }
}

impl VectorPoly<RatFunc> {
    /// Evaluates every coefficient at `κ = κ₀`; a pole reports every offending exponent.
    pub fn specialize(&self, kappa0: &BigRational) -> Result<VectorPoly<BigRational>, Error> {
        let mut out = VectorPoly::zero(self.irrep.clone());
        let mut bad = BTreeSet::new();
        for (k, v) in &self.terms {
            match v.evaluate_at(kappa0) {
                Ok(q) => out.add_term(k.clone(), &q),
                Err(_) => {
                    bad.insert(k.exp.clone());
                }
            }
        }
        if bad.is_empty() {
            Ok(out)
        } else {
            Err(Error::PoleAtKappa { kappa: kappa0.clone(), exponents: bad.into_iter().collect() })
        }
    }
}

impl VectorPoly<BigRational> {
    pub fn to_ratfunc(&self) -> VectorPoly<RatFunc> {
        self.map_coeffs(RatFunc::from_rational)
    }
}

impl<C: Scalar> fmt::Debug for VectorPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<C: Scalar> fmt::Display for VectorPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (k, v)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({v})*x^{}@{:?}", k.exp, self.irrep.tableau(k.tab).content_vector())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Partition;
    use crate::field::rational;
    use num_traits::{One, Zero};

    fn ir(p: &[usize]) -> Arc<Irrep> {
        Irrep::of(&Partition::new(p.to_vec()).unwrap())
    }

    fn c(v: &[u32]) -> Composition {
        Composition(v.to_vec())
    }

    #[test]
    fn add_and_cancel() {
        let irr = ir(&[2, 1]);
        let p = VectorPoly::monomial(irr.clone(), c(&[1, 0, 2]), 0, rational(3, 2));
        let q = p.add(&p.neg()).unwrap();
        assert!(q.is_zero());
        let other = VectorPoly::<BigRational>::zero(ir(&[3]));
        assert!(matches!(p.add(&other), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn multiply_by_x() {
        let irr = ir(&[1, 1]);
        let p = VectorPoly::monomial(irr, c(&[0, 1]), 0, BigRational::one());
        let q = p.mul_x(1);
        assert_eq!(q.coeff(&c(&[1, 1]), 0), Some(&BigRational::one()));
    }

    #[test]
    fn simple_reflection_on_monomial() {
        let irr = ir(&[2, 1]);
        let p = VectorPoly::monomial(irr.clone(), c(&[1, 0, 0]), 0, BigRational::one());
        let q = p.act_simple(1);
        let expected = VectorPoly::from_vector(irr.clone(), &c(&[0, 1, 0]), irr.simple(1).column(0));
        assert_eq!(q, expected);
    }

    #[test]
    fn group_action_composes() {
        let irr = ir(&[2, 2]);
        let p = VectorPoly::monomial(irr.clone(), c(&[2, 1, 0, 0]), 1, rational(1, 3))
            .add(&VectorPoly::monomial(irr.clone(), c(&[0, 1, 1, 1]), 0, rational(-2, 1)))
            .unwrap();
        let u = Perm::from_one_line(&[2, 4, 1, 3]).unwrap();
        let v = Perm::from_one_line(&[3, 1, 4, 2]).unwrap();
        assert_eq!(p.act(&v).act(&u), p.act(&u.compose(&v)));
        assert_eq!(p.act(&Perm::identity(4)), p);
    }

    #[test]
    fn specialize_scales() {
        let irr = ir(&[2]);
        let p = VectorPoly::monomial(irr, c(&[1, 0]), 0, RatFunc::kappa());
        let q = p.specialize(&rational(1, 4)).unwrap();
        assert_eq!(q.coeff(&c(&[1, 0]), 0), Some(&rational(1, 4)));
        let r = p.scale(&RatFunc::kappa().inverse().unwrap()).scale(&RatFunc::zero());
        assert!(r.is_zero());
    }
}
