//! The named rings, fields, and charts of the modular-foliation setup.
//!
//! Everything here is hard-coded to match the displayed equations the rest
//! of the workspace tests against; no formula in this file is derived at
//! runtime.

use std::sync::Arc;

use polycore::{rat, MultiPoly, Rat, RationalFunction, VarSet};

use crate::chart::ChartSpec;
use crate::field::VectorField;
use crate::Result;

/// The `(t1,t2,t3)` ring with its natural weights 1,2,3.
pub fn t_ring() -> Arc<VarSet> {
    VarSet::new(&[("t1", 1), ("t2", 2), ("t3", 3)])
}

/// The degree-weighted chart ring `(x2,x3,y2,y3)`, weights 2,3,2,3.
pub fn chart_ring() -> Arc<VarSet> {
    VarSet::new(&[("x2", 2), ("x3", 3), ("y2", 2), ("y3", 3)])
}

/// The doubled ring `(t1,t2,t3,s1,s2,s3)`, weights 1,2,3,1,2,3.
pub fn join_ring() -> Arc<VarSet> {
    VarSet::new(&[
        ("t1", 1),
        ("t2", 2),
        ("t3", 3),
        ("s1", 1),
        ("s2", 2),
        ("s3", 3),
    ])
}

fn parse_field(vars: &Arc<VarSet>, pairs: &[(&str, &str)]) -> VectorField {
    VectorField::parse(vars, pairs).expect("builtin field source is well-formed")
}

/// Lowering element of the sl2 triple:
/// `f = -(t1^2 - t2/12) d/dt1 - (4 t1 t2 - 6 t3) d/dt2 - (6 t1 t3 - t2^2/3) d/dt3`.
pub fn eis_field_f() -> VectorField {
    parse_field(
        &t_ring(),
        &[
            ("t1", "-1*t1^2 + 1/12*t2"),
            ("t2", "-4*t1*t2 + 6*t3"),
            ("t3", "-6*t1*t3 + 1/3*t2^2"),
        ],
    )
}

/// Raising element: `e = d/dt1`.
pub fn eis_field_e() -> VectorField {
    parse_field(&t_ring(), &[("t1", "1")])
}

/// Grading element: `h = -2 t1 d/dt1 - 4 t2 d/dt2 - 6 t3 d/dt3`.
pub fn eis_field_h() -> VectorField {
    parse_field(
        &t_ring(),
        &[("t1", "-2*t1"), ("t2", "-4*t2"), ("t3", "-6*t3")],
    )
}

/// The Ramanujan field `R = -f`, the q d/dq system of the normalized
/// Eisenstein triple.
pub fn ramanujan() -> VectorField {
    eis_field_f().neg()
}

/// The quadratic field on the chart ring:
///
/// ```text
/// v = (2x2 - 6x3 + (1/6)(x2-y2)x2)      d/dx2
///   + (3x3 - (1/3)x2^2 + (1/4)(x2-y2)x3) d/dx3
///   - (2y2 - 6y3 + (1/6)(y2-x2)y2)      d/dy2
///   - (3y3 - (1/3)y2^2 + (1/4)(y2-x2)y3) d/dy3
/// ```
pub fn modular_field_v() -> VectorField {
    parse_field(
        &chart_ring(),
        &[
            ("x2", "2*x2 + -6*x3 + 1/6*x2^2 + -1/6*x2*y2"),
            ("x3", "3*x3 + -1/3*x2^2 + 1/4*x2*x3 + -1/4*y2*x3"),
            ("y2", "-2*y2 + 6*y3 + -1/6*y2^2 + 1/6*x2*y2"),
            ("y3", "-3*y3 + 1/3*y2^2 + -1/4*y2*y3 + 1/4*x2*y3"),
        ],
    )
}

/// The chart from the doubled `(t,s)` ring to `(x2,x3,y2,y3)`:
/// `x2 = t2/(t1-s1)^2, x3 = t3/(t1-s1)^3, y2 = s2/(s1-t1)^2,
///  y3 = s3/(s1-t1)^3`, divided out by `t1 - s1`, sliced at `t1=1, s1=0`.
pub fn ramanujan_chart() -> ChartSpec {
    let source = join_ring();
    let target = chart_ring();
    let rf = |num: &str, den: &str| -> RationalFunction {
        RationalFunction::new(
            MultiPoly::parse(&source, num).expect("chart image numerator"),
            MultiPoly::parse(&source, den).expect("chart image denominator"),
        )
        .expect("chart image")
    };
    // (t1-s1)^2 = t1^2 - 2 t1 s1 + s1^2; (t1-s1)^3 likewise; the s-block
    // images use (s1-t1)^k = (-(t1-s1))^k.
    let d2 = "t1^2 + -2*t1*s1 + s1^2";
    let d3 = "t1^3 + -3*t1^2*s1 + 3*t1*s1^2 + -1*s1^3";
    let d3neg = "-1*t1^3 + 3*t1^2*s1 + -3*t1*s1^2 + s1^3";
    let images = vec![
        rf("t2", d2),
        rf("t3", d3),
        rf("s2", d2),
        rf("s3", d3neg),
    ];
    let inv = |s: &str| MultiPoly::parse(&target, s).expect("inverse entry");
    ChartSpec {
        source: Arc::clone(&source),
        target: Arc::clone(&target),
        t_block: ["t1".into(), "t2".into(), "t3".into()],
        s_block: ["s1".into(), "s2".into(), "s3".into()],
        images,
        divisor: MultiPoly::parse(&source, "t1 + -1*s1").expect("divisor"),
        slice: vec![("t1".to_string(), rat(1)), ("s1".to_string(), rat(0))],
        inverse: vec![
            inv("1"),
            inv("x2"),
            inv("x3"),
            MultiPoly::zero(&target),
            inv("y2"),
            inv("-1*y3"),
        ],
    }
}

/// Unweighted `(t1,t2,t3)` ring for the Halphen system.
pub fn halphen_ring() -> Arc<VarSet> {
    VarSet::new(&[("t1", 1), ("t2", 1), ("t3", 1)])
}

/// `(t1,t2,t3,al1,al2,al3)`: Halphen ring with symbolic parameters.
pub fn halphen_symbolic_ring() -> Arc<VarSet> {
    VarSet::new(&[
        ("t1", 1),
        ("t2", 1),
        ("t3", 1),
        ("al1", 1),
        ("al2", 1),
        ("al3", 1),
    ])
}

/// Component pattern of the Halphen system for row `i` (1-based), with
/// `(ti, tj, tk)` a cyclic shift: `(1-ai)(ti tj + ti tk - tj tk) + ai ti^2`.
fn halphen_component(
    vars: &Arc<VarSet>,
    cyc: [&str; 3],
    alpha: &MultiPoly,
) -> MultiPoly {
    let p = |s: &str| MultiPoly::parse(vars, s).expect("halphen term");
    let (ti, tj, tk) = (cyc[0], cyc[1], cyc[2]);
    let mix = p(&format!("{ti}*{tj} + {ti}*{tk} + -1*{tj}*{tk}"));
    let sq = p(&format!("{ti}^2"));
    let one = MultiPoly::one(vars);
    // (1 - alpha) * mix + alpha * ti^2
    &(&(&one - alpha) * &mix) + &(alpha * &sq)
}

/// Halphen field with fixed rational parameters.
pub fn halphen(a1: Rat, a2: Rat, a3: Rat) -> VectorField {
    let vars = halphen_ring();
    let alphas = [
        MultiPoly::constant(&vars, a1),
        MultiPoly::constant(&vars, a2),
        MultiPoly::constant(&vars, a3),
    ];
    let cycles = [["t1", "t2", "t3"], ["t2", "t3", "t1"], ["t3", "t1", "t2"]];
    let components = cycles
        .iter()
        .zip(&alphas)
        .map(|(cyc, alpha)| halphen_component(&vars, *cyc, alpha))
        .collect();
    VectorField::new(&vars, components).expect("halphen components")
}

/// Halphen field with symbolic parameters `al1, al2, al3`.
pub fn halphen_symbolic() -> VectorField {
    let vars = halphen_symbolic_ring();
    let alpha = |name: &str| MultiPoly::var(&vars, name).expect("alpha var");
    let alphas = [alpha("al1"), alpha("al2"), alpha("al3")];
    let cycles = [["t1", "t2", "t3"], ["t2", "t3", "t1"], ["t3", "t1", "t2"]];
    let mut components: Vec<MultiPoly> = cycles
        .iter()
        .zip(&alphas)
        .map(|(cyc, alpha)| halphen_component(&vars, *cyc, alpha))
        .collect();
    components.extend(std::iter::repeat_with(|| MultiPoly::zero(&vars)).take(3));
    VectorField::new(&vars, components).expect("halphen components")
}

/// Which reading of the fourth chart function to use for the Halphen chart.
///
/// `S3MinusS2` is the form printed alongside the quotient system,
/// `y2 = (s3-s2)/(t1-s1)`; `S3MinusS1` is the symmetric alternative
/// `(s3-s1)/(t1-s1)` matching the pattern of the other three functions.
/// Both are valid quotient charts (they differ by the affine change
/// `y2 -> y2 - y1`), but only `S3MinusS1` reproduces the displayed
/// quotient system verbatim — the chart tests pin down both behaviors —
/// so `S3MinusS1` is the default used everywhere downstream.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalphenY2 {
    S3MinusS2,
    S3MinusS1,
}

impl Default for HalphenY2 {
    fn default() -> Self {
        HalphenY2::S3MinusS1
    }
}

/// The Halphen quotient chart to `(x1,x2,y1,y2)`:
/// `x1 = (t2-t1)/(s1-t1), x2 = (t3-t1)/(s1-t1), y1 = (s2-s1)/(t1-s1)`,
/// with `y2` per the chosen reading, divided out by `s1 - t1`, sliced at
/// `t1 = 0, s1 = 1`. `symbolic` adds the three parameter pass-throughs.
pub fn halphen_chart(y2: HalphenY2, symbolic: bool) -> ChartSpec {
    let mut src_pairs: Vec<(&str, i64)> = vec![
        ("t1", 1),
        ("t2", 1),
        ("t3", 1),
        ("s1", 1),
        ("s2", 1),
        ("s3", 1),
    ];
    let mut tgt_pairs: Vec<(&str, i64)> = vec![("x1", 1), ("x2", 1), ("y1", 1), ("y2", 1)];
    if symbolic {
        for a in ["al1", "al2", "al3"] {
            src_pairs.push((a, 1));
            tgt_pairs.push((a, 1));
        }
    }
    let source = VarSet::new(&src_pairs);
    let target = VarSet::new(&tgt_pairs);
    let rf = |num: &str, den: &str| -> RationalFunction {
        RationalFunction::new(
            MultiPoly::parse(&source, num).expect("chart image numerator"),
            MultiPoly::parse(&source, den).expect("chart image denominator"),
        )
        .expect("chart image")
    };
    let s1t1 = "s1 + -1*t1";
    let t1s1 = "t1 + -1*s1";
    let y2_num = match y2 {
        HalphenY2::S3MinusS2 => "s3 + -1*s2",
        HalphenY2::S3MinusS1 => "s3 + -1*s1",
    };
    let mut images = vec![
        rf("t2 + -1*t1", s1t1),
        rf("t3 + -1*t1", s1t1),
        rf("s2 + -1*s1", t1s1),
        rf(y2_num, t1s1),
    ];
    let inv = |s: &str| MultiPoly::parse(&target, s).expect("inverse entry");
    // Slice t1=0, s1=1: x1 = t2, x2 = t3, y1 = 1-s2 so s2 = 1-y1, and the
    // fourth inverse depends on the reading of y2.
    let s3_inverse = match y2 {
        HalphenY2::S3MinusS2 => inv("1 + -1*y1 + -1*y2"),
        HalphenY2::S3MinusS1 => inv("1 + -1*y2"),
    };
    let mut inverse = vec![
        MultiPoly::zero(&target),
        inv("x1"),
        inv("x2"),
        inv("1"),
        inv("1 + -1*y1"),
        s3_inverse,
    ];
    if symbolic {
        for a in ["al1", "al2", "al3"] {
            images.push(RationalFunction::var(&source, a).expect("alpha image"));
            inverse.push(MultiPoly::var(&target, a).expect("alpha inverse"));
        }
    }
    ChartSpec {
        source: Arc::clone(&source),
        target: Arc::clone(&target),
        t_block: ["t1".into(), "t2".into(), "t3".into()],
        s_block: ["s1".into(), "s2".into(), "s3".into()],
        images,
        divisor: MultiPoly::parse(&source, s1t1).expect("divisor"),
        slice: vec![("t1".to_string(), rat(0)), ("s1".to_string(), rat(1))],
        inverse,
    }
}

/// The `(a,b,c)` ring of the genus-two family, weights 2,3,4.
pub fn picard_ring() -> Arc<VarSet> {
    VarSet::new(&[("a", 2), ("b", 3), ("c", 4)])
}

/// The Picard field:
///
/// ```text
///   (2c - 24a^2 + 6ab + 6b)                 d/da
/// - (3c - 36a^2 + 36ab - 9b^2)              d/db
/// + (12ca + 12cb - 144a^3 + 36b^2)          d/dc
/// ```
pub fn picard_field() -> VectorField {
    parse_field(
        &picard_ring(),
        &[
            ("a", "2*c + -24*a^2 + 6*a*b + 6*b"),
            ("b", "-3*c + 36*a^2 + -36*a*b + 9*b^2"),
            ("c", "12*c*a + 12*c*b + -144*a^3 + 36*b^2"),
        ],
    )
}

/// Expected quotient system of the doubled Halphen field, as displayed:
///
/// ```text
/// x1' =  x1( al2 x1 + (2-al2-al1) x2 - (1-al1)(x1 x2 - y1 y2) - 1 )
/// x2' =  x2( al3 x2 + (2-al3-al1) x1 - (1-al1)(x1 x2 - y1 y2) - 1 )
/// y1' = -y1( al2 y1 + (2-al2-al1) y2 - (1-al1)(y1 y2 - x1 x2) - 1 )
/// y2' = -y2( al3 y2 + (2-al3-al1) y1 - (1-al1)(y1 y2 - x1 x2) - 1 )
/// ```
///
/// Returned over the symbolic chart target ring; used as the fixture the
/// self-join is compared against.
pub fn halphen_quotient_expected() -> Result<VectorField> {
    let vars = halphen_chart(HalphenY2::default(), true).target;
    let p = |s: &str| MultiPoly::parse(&vars, s).expect("fixture term");
    let one = MultiPoly::one(&vars);
    let al1 = p("al1");
    let own_x = p("x1*x2 + -1*y1*y2");
    let own_y = p("y1*y2 + -1*x1*x2");
    // lead * ( asq*lead + (2 - asq - al1)*partner - (1 - al1)*own - 1 )
    let row = |lead: &MultiPoly, partner: &MultiPoly, asq: &MultiPoly, own: &MultiPoly| {
        let two_minus = &(&p("2") - asq) - &al1;
        let one_minus = &one - &al1;
        let inner = &(&(&(asq * lead) + &(&two_minus * partner)) - &(&one_minus * own)) - &one;
        lead * &inner
    };
    let (x1, x2, y1, y2) = (p("x1"), p("x2"), p("y1"), p("y2"));
    let (al2, al3) = (p("al2"), p("al3"));
    let mut full = vec![
        row(&x1, &x2, &al2, &own_x),
        row(&x2, &x1, &al3, &own_x),
        row(&y1, &y2, &al2, &own_y).scale(&rat(-1)),
        row(&y2, &y1, &al3, &own_y).scale(&rat(-1)),
    ];
    full.extend(std::iter::repeat_with(|| MultiPoly::zero(&vars)).take(3));
    VectorField::new(&vars, full)
}

/// The discriminant pair on the chart ring: `27x3^2 - x2^3` and
/// `27y3^2 - y2^3`, whose zero sets the quadratic field is tangent to.
pub fn discriminants() -> (MultiPoly, MultiPoly) {
    let vars = chart_ring();
    (
        MultiPoly::parse(&vars, "27*x3^2 + -1*x2^3").expect("delta_1"),
        MultiPoly::parse(&vars, "27*y3^2 + -1*y2^3").expect("delta_2"),
    )
}
