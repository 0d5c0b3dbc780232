//! Randomized operator identities, shared by the property tests and the
//! acceptance runner.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use rectjack::combinatorics::{Composition, Partition};
use rectjack::operators::{cherednik, dunkl, jucys_murphy};
use rectjack::poly::{Irrep, TermKey, VectorPoly};

/// A polynomial in `N ∈ 2..=5` variables of degree `≤ 3`, with values in a
/// random irreducible module, and a rational `κ`.
#[derive(Clone, Debug)]
pub struct Case {
    pub p: VectorPoly<BigRational>,
    pub kappa: BigRational,
}

pub fn arb_case() -> impl Strategy<Value = Case> {
    (2usize..=5)
        .prop_flat_map(|n| {
            let shapes = Partition::all_of(n, n);
            (Just(n), 0..shapes.len())
        })
        .prop_flat_map(|(n, si)| {
            let irrep = Irrep::of(&Partition::all_of(n, n)[si]);
            let dim = irrep.dim();
            let term = (prop::collection::vec(0..n, 0..=3), 0..dim, -9i64..=9, 1i64..=4);
            (Just(irrep), prop::collection::vec(term, 1..=4), -6i64..=6, 1i64..=5)
        })
        .prop_map(|(irrep, terms, kn, kd)| {
            let n = irrep.n();
            let mut p = VectorPoly::zero(irrep.clone());
            for (vars, tab, num, den) in terms {
                let mut exp = vec![0u32; n];
                for v in vars {
                    exp[v] += 1;
                }
                p.add_term(TermKey::new(Composition(exp), tab), &BigRational::new(BigInt::from(num), BigInt::from(den)));
            }
            Case { p, kappa: BigRational::new(BigInt::from(kn), BigInt::from(kd)) }
        })
}

pub fn dunkl_commute(c: &Case) -> Result<(), TestCaseError> {
    let n = c.p.n();
    for i in 1..=n {
        for j in i + 1..=n {
            let a = dunkl(i, &dunkl(j, &c.p, &c.kappa), &c.kappa);
            let b = dunkl(j, &dunkl(i, &c.p, &c.kappa), &c.kappa);
            prop_assert_eq!(a, b, "D_{} D_{}", i, j);
        }
    }
    Ok(())
}

pub fn cherednik_commute(c: &Case) -> Result<(), TestCaseError> {
    let n = c.p.n();
    for i in 1..=n {
        for j in i + 1..=n {
            let a = cherednik(i, &cherednik(j, &c.p, &c.kappa), &c.kappa);
            let b = cherednik(j, &cherednik(i, &c.p, &c.kappa), &c.kappa);
            prop_assert_eq!(a, b, "U_{} U_{}", i, j);
        }
    }
    Ok(())
}

/// `s_i U_i s_i = U_{i+1} + κ s_i`
pub fn cherednik_intertwine(c: &Case) -> Result<(), TestCaseError> {
    for i in 1..c.p.n() {
        let lhs = cherednik(i, &c.p.act_simple(i), &c.kappa).act_simple(i);
        let rhs = cherednik(i + 1, &c.p, &c.kappa).add(&c.p.act_simple(i).scale(&c.kappa)).unwrap();
        prop_assert_eq!(lhs, rhs, "i = {}", i);
    }
    Ok(())
}

/// `s_i² = 1`, `s_is_{i+1}s_i = s_{i+1}s_is_{i+1}` and `s_is_j = s_js_i` for `|i−j| ≥ 2`.
pub fn braid(c: &Case) -> Result<(), TestCaseError> {
    let n = c.p.n();
    let p = &c.p;
    for i in 1..n {
        prop_assert_eq!(&p.act_simple(i).act_simple(i), p);
        if i + 1 < n {
            let a = p.act_simple(i).act_simple(i + 1).act_simple(i);
            let b = p.act_simple(i + 1).act_simple(i).act_simple(i + 1);
            prop_assert_eq!(a, b, "braid at {}", i);
        }
        for j in i + 2..n {
            prop_assert_eq!(p.act_simple(i).act_simple(j), p.act_simple(j).act_simple(i));
        }
    }
    Ok(())
}

/// `τ(ω_i)T = c(i,T)T` on every basis tableau of the module of `c.p`.
pub fn jucys_murphy_contents(c: &Case) -> Result<(), TestCaseError> {
    let irrep = c.p.irrep();
    let zero = Composition::zero(irrep.n());
    for (t, tab) in irrep.tableaux().iter().enumerate() {
        let e = VectorPoly::monomial(irrep.clone(), zero.clone(), t, BigRational::from_integer(1.into()));
        for i in 1..=irrep.n() {
            let c_i = BigRational::from_integer(tab.content(i).into());
            prop_assert_eq!(jucys_murphy(i, &e), e.scale(&c_i), "omega_{} on {:?}", i, tab);
        }
    }
    Ok(())
}

pub type Property = fn(&Case) -> Result<(), TestCaseError>;

pub const SUITES: [(&str, Property); 5] = [
    ("D_i D_j = D_j D_i", dunkl_commute),
    ("U_i U_j = U_j U_i", cherednik_commute),
    ("s_i U_i s_i = U_{i+1} + kappa s_i", cherednik_intertwine),
    ("braid relations", braid),
    ("tau(omega_i) T = c(i,T) T", jucys_murphy_contents),
];
