//! An invariant singular polynomial for `τ = (3,1,1)` at `κ = 1/2` that is a
//! combination of two Jack polynomials with equal spectral vectors.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::family::isotype_of;
use super::uniqueness::{uniqueness_oracle, Verdict};
use crate::combinatorics::{Composition, Tableau};
use crate::error::Error;
use crate::field::{format_rational, rational};
use crate::jack::construct_jack;
use crate::json;
use crate::operators::{cherednik_prime, dunkl};
use crate::poly::VectorPoly;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LabelSummary {
    pub alpha: Composition,
    pub tableau: Tableau,
    #[serde(with = "json::rational_vec")]
    pub spectral: Vec<BigRational>,
    pub pole_free: bool,
    pub singular: bool,
    pub invariant: bool,
    pub num_terms: usize,
    pub num_monomials: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct N5Report {
    #[serde(with = "json::rational")]
    pub kappa: BigRational,
    pub first: LabelSummary,
    pub second: LabelSummary,
    /// Coefficient `c` in `J_{α,T} + c J_{β,T′}`.
    pub combination_coefficient: i64,
    pub combination_singular: bool,
    pub combination_invariant: bool,
    /// `c_i` with `U′_i p = c_i p`, or `null`.
    pub combination_u_prime: Vec<Option<String>>,
    pub combination_isotype: Option<Tableau>,
    /// The oracle at `κ = 1/2` flags the two labels as colliding.
    pub uniqueness_fails: bool,
    pub passed: bool,
}

fn is_singular(p: &VectorPoly<BigRational>, kappa: &BigRational) -> bool {
    (1..=p.n()).all(|i| dunkl(i, p, kappa).is_zero())
}

fn is_invariant(p: &VectorPoly<BigRational>) -> bool {
    (1..p.n()).all(|i| &p.act_simple(i) == p)
}

pub fn example_n5() -> Result<N5Report, Error> {
    let kappa = rational(1, 2);
    let t = Tableau::rsyt(vec![vec![5, 4, 3], vec![2], vec![1]])?;
    let t2 = Tableau::rsyt(vec![vec![5, 3, 2], vec![4], vec![1]])?;
    let alpha = Composition(vec![3, 2, 0, 0, 0]);
    let beta = Composition(vec![1, 1, 2, 1, 0]);

    let summarize = |a: &Composition, tt: &Tableau| -> Result<(LabelSummary, Option<VectorPoly<BigRational>>), Error> {
        let j = construct_jack(a, tt)?;
        let spectral = j.spectral.evaluate(&kappa)?;
        let value = j.specialize(&kappa).ok();
        let s = LabelSummary {
            alpha: a.clone(),
            tableau: tt.clone(),
            spectral,
            pole_free: value.is_some(),
            singular: value.as_ref().is_some_and(|v| is_singular(v, &kappa)),
            invariant: value.as_ref().is_some_and(is_invariant),
            num_terms: j.poly.num_terms(),
            num_monomials: j.poly.num_monomials(),
        };
        Ok((s, value))
    };
    let (first, v1) = summarize(&alpha, &t)?;
    let (second, v2) = summarize(&beta, &t2)?;

    let c = 2;
    let (mut comb_singular, mut comb_invariant, mut u_prime, mut isotype) = (false, false, Vec::new(), None);
    if let (Some(v1), Some(v2)) = (&v1, &v2) {
        let p = v1.add(&v2.scale(&rational(c, 1)))?;
        comb_singular = !p.is_zero() && is_singular(&p, &kappa);
        comb_invariant = is_invariant(&p);
        for i in 1..=p.n() {
            u_prime.push(cherednik_prime(i, &p, &kappa)?.ratio_to(&p).map(|q| format_rational(&q)));
        }
        isotype = isotype_of(&p).ok();
    }
    let oracle = uniqueness_oracle(&alpha, &t, &kappa)?;
    let uniqueness_fails =
        oracle.verdict == Verdict::Collisions && oracle.collisions.iter().any(|c| c.gamma == beta && c.tableau == t2);

    let expected_u: Vec<Option<String>> = (1..=5).map(|i| Some((5 - i).to_string())).collect();
    let passed = first.pole_free
        && second.pole_free
        && first.spectral == second.spectral
        && !first.singular
        && !second.singular
        && !first.invariant
        && !second.invariant
        && comb_singular
        && comb_invariant
        && u_prime == expected_u
        && first.num_monomials == 100
        && uniqueness_fails;
    Ok(N5Report {
        kappa,
        first,
        second,
        combination_coefficient: c,
        combination_singular: comb_singular,
        combination_invariant: comb_invariant,
        combination_u_prime: u_prime,
        combination_isotype: isotype,
        uniqueness_fails,
        passed,
    })
}
