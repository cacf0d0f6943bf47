//! Algebraic laws of truncated series arithmetic under random inputs.

use proptest::prelude::*;
use qmod::{eval_on_series, QSeries};
use polycore::{rat, MultiPoly, Rat, VarSet};

fn series(order: usize) -> impl Strategy<Value = QSeries> {
    prop::collection::vec((-9i64..=9, 1i64..=4), order + 1).prop_map(|pairs| {
        QSeries::new(
            pairs
                .into_iter()
                .map(|(p, q)| Rat::new(p.into(), q.into()))
                .collect(),
        )
    })
}

fn unit_series(order: usize) -> impl Strategy<Value = QSeries> {
    series(order).prop_map(|s| {
        let mut c = s.coeffs().to_vec();
        if c[0] == rat(0) {
            c[0] = rat(1);
        }
        QSeries::new(c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn ring_laws(a in series(12), b in series(12), c in series(12)) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn division_inverts_multiplication(a in series(12), b in unit_series(12)) {
        let q = a.mul(&b).div(&b).unwrap();
        prop_assert_eq!(q, a);
    }

    #[test]
    fn derivation_satisfies_leibniz(a in series(12), b in series(12)) {
        let lhs = a.mul(&b).qdq();
        let rhs = a.qdq().mul(&b).add(&a.mul(&b.qdq()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn spreading_is_a_ring_map(a in series(8), b in series(8), d in 2u64..=4) {
        let out = 8; // within reach: 8/d <= 8
        let lhs = a.mul(&b).spread(d, out).unwrap();
        let rhs = a.spread(d, out).unwrap().mul(&b.spread(d, out).unwrap());
        prop_assert_eq!(lhs, rhs);
        let sums = a.add(&b).spread(d, out).unwrap();
        let summed = a.spread(d, out).unwrap().add(&b.spread(d, out).unwrap());
        prop_assert_eq!(sums, summed);
    }

    #[test]
    fn valuation_shift_round_trips(a in series(10), k in 0usize..=5) {
        let shifted = a.mul_qpow(k);
        prop_assert_eq!(shifted.order(), a.order() + k);
        prop_assert_eq!(shifted.div_qpow(k).unwrap(), a.clone());
    }

    #[test]
    fn polynomial_evaluation_is_a_ring_map(
        a in series(10),
        b in series(10),
        ca in -5i64..=5,
        cb in -5i64..=5,
    ) {
        let vars = VarSet::new(&[("u", 1), ("w", 1)]);
        let u = MultiPoly::var(&vars, "u").unwrap();
        let w = MultiPoly::var(&vars, "w").unwrap();
        let p = &u.scale(&rat(ca)) + &w.scale(&rat(cb));
        let q = &(&u * &w) + &u.pow(2);
        let args = [a.clone(), b.clone()];
        let lhs = eval_on_series(&(&p * &q), &args).unwrap();
        let rhs = eval_on_series(&p, &args).unwrap().mul(&eval_on_series(&q, &args).unwrap());
        prop_assert_eq!(lhs, rhs);
        let sum_lhs = eval_on_series(&(&p + &q), &args).unwrap();
        let sum_rhs = eval_on_series(&p, &args).unwrap().add(&eval_on_series(&q, &args).unwrap());
        prop_assert_eq!(sum_lhs, sum_rhs);
    }
}
