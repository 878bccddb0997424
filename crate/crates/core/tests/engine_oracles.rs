use std::sync::Arc;

use flexion_core::canonical::{Canon, FlexionUnit};
use flexion_core::{EmptyClass, EvalContext, EvalError, Rat, RatGraph, RatWord, Scalar};

fn q(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

fn w(pairs: &[(i64, i64)]) -> RatWord {
    RatWord::from_ints(pairs)
}

#[test]
fn swap_pullback_on_a_concrete_word() {
    // (u1,u2,u3; v1,v2,v3) -> (v3, v2-v3, v1-v2; u1+u2+u3, u1+u2, u1)
    let got = w(&[(1, 10), (2, 20), (3, 50)]).swap_pullback();
    assert_eq!(got, w(&[(50, 6), (-30, 3), (-10, 1)]));
    assert_eq!(got.swap_pullback(), w(&[(1, 10), (2, 20), (3, 50)]));
}

#[test]
fn mu_expands_over_deconcatenations() {
    let mut g = RatGraph::new(3);
    let a = g.closed("A", EmptyClass::Group, Arc::new(|w: &RatWord| Some(Rat::from_int(w.len() as i64 + 1))));
    let b = g.closed("B", EmptyClass::Group, Arc::new(|w: &RatWord| Some(w.u_sum() + Rat::from_int(1))));
    let m = g.mu(a, b);
    let ctx = EvalContext::new(&g);
    // A(∅)B(w1w2) + A(w1)B(w2) + A(w1w2)B(∅) = 1·6 + 2·4 + 3·1
    assert_eq!(ctx.eval(m, &w(&[(2, 7), (3, 9)])).unwrap(), Rat::from_int(17));
}

#[test]
fn polar_constants_at_concrete_words() {
    let mut g = RatGraph::new(3);
    let c = Canon::build(&mut g, &FlexionUnit::polar());
    let ctx = EvalContext::new(&g);
    let word = w(&[(1, 2), (3, 5)]);
    assert_eq!(ctx.eval(c.oz, &word).unwrap(), q(1, 10));
    // es = Π 1/(u1+..+ui)
    assert_eq!(ctx.eval(c.es, &word).unwrap(), q(1, 4));
    assert_eq!(ctx.eval(c.es_product, &word).unwrap(), q(1, 4));
    // To at length 1 is O/2
    assert_eq!(ctx.eval(c.to_series, &w(&[(4, 3)])).unwrap(), q(1, 6));
    assert_eq!(ctx.eval(c.plain, &RatWord::empty()).unwrap(), Rat::from_int(1));
}

#[test]
fn division_by_zero_reports_word_and_path() {
    let mut g = RatGraph::new(3);
    let c = Canon::build(&mut g, &FlexionUnit::polar());
    let s = g.swap(c.oz);
    let ctx = EvalContext::new(&g);
    let err = ctx.eval(s, &w(&[(0, 1), (0, 2)])).unwrap_err();
    assert!(err.is_div_by_zero());
    match err {
        EvalError::DivByZero { path, word } => {
            assert!(!path.is_empty());
            assert!(word.contains('0'));
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn length_cap_is_enforced() {
    let mut g = RatGraph::new(2);
    let c = Canon::build(&mut g, &FlexionUnit::polar());
    let ctx = EvalContext::new(&g);
    let err = ctx.eval(c.oz, &w(&[(1, 1), (2, 2), (3, 3)])).unwrap_err();
    assert!(matches!(err, EvalError::LengthCap { len: 3, cap: 2 }));
}

#[test]
fn tripartite_relation_for_both_units() {
    let u = FlexionUnit::<Rat>::polar();
    assert!(u.check_tripartite_seeded(0, 64).is_ok());
    assert!(u.conjugate().check_tripartite_seeded(1, 64).is_ok());
}
