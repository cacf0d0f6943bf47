//! End-to-end checks for the self-join construction: gluing two copies of a
//! three-variable field along a chart and reading the induced field off the
//! slice.  The two reproductions here (Ramanujan and Halphen) are the
//! backbone fixtures for everything downstream.

use polycore::{frac, rat, MultiPoly, Rat};
use vfield::{
    halphen, halphen_chart, halphen_quotient_expected, halphen_symbolic, modular_field_v,
    ramanujan, ramanujan_chart, self_join, ChartSpec, Error, HalphenY2, VectorField,
};

#[test]
fn ramanujan_self_join_reproduces_v() {
    let joined = self_join(&ramanujan(), &ramanujan_chart()).unwrap();
    let expected = modular_field_v();
    assert_eq!(joined.components(), expected.components());
}

#[test]
fn halphen_symbolic_self_join_matches_quotient_fixture() {
    let chart = halphen_chart(HalphenY2::default(), true);
    let joined = self_join(&halphen_symbolic(), &chart).unwrap();
    let expected = halphen_quotient_expected().unwrap();
    assert_eq!(joined.components(), expected.components());
}

/// The symbolic reproduction specialises: substituting rational parameter
/// values into the quotient fixture must agree with joining the rational
/// field directly.
#[test]
fn halphen_rational_parameters_match_specialised_fixture() {
    let triples: [[Rat; 3]; 5] = [
        [frac(1, 2), rat(-2), frac(3, 5)],
        [rat(0), rat(0), rat(0)],
        [rat(1), rat(2), rat(3)],
        [frac(-7, 3), frac(1, 6), rat(5)],
        [frac(2, 7), frac(-3, 4), frac(9, 2)],
    ];
    let symbolic_expected = halphen_quotient_expected().unwrap();
    for alphas in &triples {
        let chart = halphen_chart(HalphenY2::default(), false);
        let base = halphen(alphas[0].clone(), alphas[1].clone(), alphas[2].clone());
        let joined = self_join(&base, &chart).unwrap();
        let subs: Vec<(&str, Rat)> = vec![
            ("al1", alphas[0].clone()),
            ("al2", alphas[1].clone()),
            ("al3", alphas[2].clone()),
        ];
        for (got, sym) in joined
            .components()
            .iter()
            .zip(symbolic_expected.components())
        {
            let specialised = sym
                .subst_partial(&subs)
                .unwrap()
                .project(got.vars())
                .unwrap();
            assert_eq!(got, &specialised, "alphas = {alphas:?}");
        }
    }
}

/// The alternative y2 reading is a legitimate chart — the join goes through —
/// but it produces a different quotient system: the two charts differ by the
/// coordinate change y2 -> y2 - y1, and the joined fields are related by
/// exactly that change of variables.
#[test]
fn alternative_y2_reading_gives_a_different_system() {
    let chart = halphen_chart(HalphenY2::S3MinusS2, true);
    let joined = self_join(&halphen_symbolic(), &chart).unwrap();
    let fixture = halphen_quotient_expected().unwrap();
    assert_ne!(joined.components(), fixture.components());

    // Coordinates here (call them primed) satisfy y2 = y1 + y2'. Transport
    // the fixture: substitute y2 -> y1 + y2' in every component, and correct
    // the y2-component by the chain rule d(y2')/dtau = d(y2)/dtau - d(y1)/dtau.
    let vars = joined.vars().clone();
    let y1 = MultiPoly::var(&vars, "y1").unwrap();
    let y2 = MultiPoly::var(&vars, "y2").unwrap();
    let images: Vec<MultiPoly> = vars
        .names()
        .iter()
        .map(|n| {
            if n == "y2" {
                &y1 + &y2
            } else {
                MultiPoly::var(&vars, n).unwrap()
            }
        })
        .collect();
    let y1_idx = vars.index_of("y1").unwrap();
    for (i, name) in vars.names().iter().enumerate() {
        let transported = fixture.component(i).subst_polys(&images).unwrap();
        let got = if name == "y2" {
            joined.component(i) + joined.component(y1_idx)
        } else {
            joined.component(i).clone()
        };
        assert_eq!(got, transported, "component {name}");
    }
}

/// A chart whose images cannot be inverted on the slice (here: the inverse
/// sends both t1 and s1 to 0, so every denominator (t1-s1)^k collapses) must
/// be refused up front.
#[test]
fn degenerate_chart_is_rejected() {
    let good = ramanujan_chart();
    let broken = ChartSpec {
        slice: vec![("t1".into(), rat(0)), ("s1".into(), rat(0))],
        inverse: {
            let mut inv = good.inverse.clone();
            inv[0] = MultiPoly::zero(&good.source);
            inv
        },
        ..good
    };
    let err = self_join(&ramanujan(), &broken).unwrap_err();
    assert!(matches!(err, Error::ChartInvalid(_)), "got {err:?}");
}

/// The doubled translation field d/dt1 + d/ds1 is tangent to the fibers of
/// the Ramanujan chart (every image depends on t1 and s1 only through
/// t1 - s1), so it joins to the zero field.
#[test]
fn diagonal_translation_joins_to_zero() {
    let e = VectorField::parse(&vfield::t_ring(), &[("t1", "1")]).unwrap();
    let joined = self_join(&e, &ramanujan_chart()).unwrap();
    assert!(joined.components().iter().all(MultiPoly::is_zero));
}

/// A field that does not descend through the chart is reported as such:
/// d/dt2 moves x2 = t2/(t1-s1)^2 by 1/(t1-s1)^2, which slices to a
/// polynomial but does not pull back to the pre-slice expression.
#[test]
fn non_invariant_field_is_rejected() {
    let w = VectorField::parse(&vfield::t_ring(), &[("t2", "1")]).unwrap();
    let err = self_join(&w, &ramanujan_chart()).unwrap_err();
    assert!(
        matches!(
            err,
            Error::ChartNotInvariant(_) | Error::NotDivisorDivisible(_)
        ),
        "got {err:?}"
    );
}
