mod common;

use common::props::{self, arb_case};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig { cases: 50, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn dunkl_operators_commute(c in arb_case()) {
        props::dunkl_commute(&c)?;
    }

    #[test]
    fn cherednik_operators_commute(c in arb_case()) {
        props::cherednik_commute(&c)?;
    }

    #[test]
    fn cherednik_intertwining(c in arb_case()) {
        props::cherednik_intertwine(&c)?;
    }

    #[test]
    fn braid_relations(c in arb_case()) {
        props::braid(&c)?;
    }

    #[test]
    fn jucys_murphy_acts_by_contents(c in arb_case()) {
        props::jucys_murphy_contents(&c)?;
    }

    /// `U′_i = (U_i − 1)/κ` for nonzero `κ`.
    #[test]
    fn u_prime_is_shifted_cherednik(c in arb_case()) {
        use num_traits::Zero;
        use rectjack::operators::{cherednik, cherednik_prime};
        prop_assume!(!c.kappa.is_zero());
        for i in 1..=c.p.n() {
            let lhs = cherednik_prime(i, &c.p, &c.kappa).unwrap().scale(&c.kappa);
            let rhs = cherednik(i, &c.p, &c.kappa).sub(&c.p).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    /// `s_i D_i s_i = D_{i+1}`
    #[test]
    fn dunkl_equivariance(c in arb_case()) {
        use rectjack::operators::dunkl;
        for i in 1..c.p.n() {
            let lhs = dunkl(i, &c.p.act_simple(i), &c.kappa).act_simple(i);
            prop_assert_eq!(lhs, dunkl(i + 1, &c.p, &c.kappa));
        }
    }
}
