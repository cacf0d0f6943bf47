//! Property tests for the polynomial ring: arithmetic laws, degree
//! additivity, substitution homomorphisms, and text-format round trips.

use std::sync::Arc;

use polycore::{MultiPoly, RationalFunction, VarSet, WeightedDegree};
use proptest::prelude::*;

fn ring() -> Arc<VarSet> {
    VarSet::new(&[("x2", 2), ("x3", 3), ("y1", 1)])
}

/// Arbitrary small polynomial over the fixed three-variable ring.
fn arb_poly() -> impl Strategy<Value = MultiPoly> {
    let term = (
        -20i64..=20,
        1i64..=6,
        prop::collection::vec(0u32..4, 3),
    );
    prop::collection::vec(term, 0..6).prop_map(|terms| {
        let vs = ring();
        MultiPoly::from_terms(
            &vs,
            terms
                .into_iter()
                .map(|(n, d, exps)| (exps, polycore::frac(n, d))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn add_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn mul_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn mul_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn mul_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn sub_self_is_zero(a in arb_poly()) {
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn wdeg_additive_under_mul(a in arb_poly(), b in arb_poly()) {
        // Top weighted degrees add: leading parts cannot cancel because the
        // coefficient ring is a domain.
        prop_assume!(!a.is_zero() && !b.is_zero());
        let da = a.wdeg_max().unwrap();
        let db = b.wdeg_max().unwrap();
        prop_assert_eq!((&a * &b).wdeg_max().unwrap(), da + db);
    }

    #[test]
    fn format_round_trips(a in arb_poly()) {
        let s = a.to_canonical_string();
        let back = MultiPoly::parse(a.vars(), &s).unwrap();
        // The canonical form is a fixed point of the round trip.
        prop_assert_eq!(back.to_canonical_string(), s.clone());
        prop_assert_eq!(a, back);
    }

    #[test]
    fn evaluation_is_ring_hom(a in arb_poly(), b in arb_poly()) {
        let pt = [polycore::frac(3, 2), polycore::rat(-1), polycore::frac(1, 3)];
        prop_assert_eq!((&a * &b).eval_rat(&pt), a.eval_rat(&pt) * b.eval_rat(&pt));
        prop_assert_eq!((&a + &b).eval_rat(&pt), a.eval_rat(&pt) + b.eval_rat(&pt));
    }

    #[test]
    fn substitution_is_ring_hom(a in arb_poly(), b in arb_poly()) {
        // Images in a fresh two-variable ring, chosen nontrivially.
        let tv = VarSet::new(&[("u", 1), ("v", 1)]);
        let images = [
            RationalFunction::new(
                MultiPoly::parse(&tv, "u + v").unwrap(),
                MultiPoly::parse(&tv, "v").unwrap(),
            ).unwrap(),
            RationalFunction::var(&tv, "u").unwrap(),
            RationalFunction::new(
                MultiPoly::parse(&tv, "1").unwrap(),
                MultiPoly::parse(&tv, "u + 1").unwrap(),
            ).unwrap(),
        ];
        let lhs = (&a * &b).substitute(&images).unwrap();
        let rhs = &a.substitute(&images).unwrap() * &b.substitute(&images).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
        prop_assume!(!b.is_zero());
        let prod = &a * &b;
        let q = prod.div_exact(&b).unwrap();
        prop_assert_eq!(q, a);
    }

    #[test]
    fn partial_satisfies_leibniz(a in arb_poly(), b in arb_poly()) {
        for i in 0..3 {
            let lhs = (&a * &b).partial(i);
            let rhs = &(&a.partial(i) * &b) + &(&a * &b.partial(i));
            prop_assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn homogeneous_product_degrees() {
    let vs = ring();
    let a = MultiPoly::parse(&vs, "x2*y1 + x3").unwrap();
    let b = MultiPoly::parse(&vs, "x2 + y1^2").unwrap();
    assert_eq!(
        a.weighted_degree().unwrap(),
        WeightedDegree::Homogeneous(3)
    );
    assert_eq!(
        (&a * &b).weighted_degree().unwrap(),
        WeightedDegree::Homogeneous(5)
    );
}
