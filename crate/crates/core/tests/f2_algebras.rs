use etakit::f2ring::builtin::{self, Branch};
use etakit::f2ring::json::AlgebraDocument;
use etakit::f2ring::{F2Element, GradedHom, PresentedF2Algebra};
use proptest::prelude::*;

fn monomial_text(names: &[&str], exps: &[u8]) -> String {
    let parts: Vec<String> =
        names.iter().zip(exps).filter(|(_, &e)| e > 0).map(|(n, e)| format!("{n}^{e}")).collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn sd_expr() -> impl Strategy<Value = String> {
    prop::collection::vec(prop::collection::vec(0u8..4, 4), 1..5).prop_map(|terms| {
        terms.iter().map(|e| monomial_text(&["x", "y", "u", "P"], e)).collect::<Vec<_>>().join(" + ")
    })
}

/// A random element of degree `n` given by a bit mask over the basis.
fn element(a: &PresentedF2Algebra, n: u32, mask: u64) -> F2Element {
    let basis = a.graded_basis(n).unwrap();
    let mut e = F2Element::zero();
    for (i, m) in basis.iter().enumerate() {
        if mask >> (i % 64) & 1 == 1 {
            e.toggle(m.clone());
        }
    }
    e
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_idempotent_and_linear(e1 in sd_expr(), e2 in sd_expr()) {
        let a = builtin::sd();
        let p1 = a.parse(&e1).unwrap();
        let p2 = a.parse(&e2).unwrap();
        prop_assert_eq!(a.normal_form(&p1), p1.clone());
        prop_assert_eq!(a.parse(&a.format(&p1)).unwrap(), p1.clone());
        prop_assert_eq!(a.parse(&format!("{e1} + {e2}")).unwrap(), a.add(&p1, &p2));
        prop_assert_eq!(a.parse(&format!("({e1})*({e2})")).unwrap(), a.mul(&p1, &p2));
        let doubled = format!("{e1} + {e1}");
        prop_assert!(a.parse(&doubled).unwrap().is_zero());
    }

    #[test]
    fn homs_are_multiplicative(d1 in 1u32..12, d2 in 1u32..12, m1: u64, m2: u64, n in prop::sample::select(vec![4u32, 8])) {
        let sd = builtin::sd();
        let homs = [builtin::sd_to_d8(), builtin::sd_to_m(n, "Z^2 + Z*tau^2").unwrap(), builtin::sd_to_d8().then(&builtin::d8_to_v2()).unwrap()];
        let x = element(&sd, d1, m1);
        let y = element(&sd, d2, m2);
        for f in &homs {
            let t = f.target();
            prop_assert_eq!(f.apply(&sd.mul(&x, &y)), t.mul(&f.apply(&x), &f.apply(&y)));
            prop_assert_eq!(f.apply(&sd.add(&x, &y)), t.add(&f.apply(&x), &f.apply(&y)));
        }
    }

    #[test]
    fn cartan_formula(d1 in 1u32..9, d2 in 1u32..9, m1: u64, m2: u64, i in 0u32..6) {
        let s = builtin::sd_steenrod();
        let a = s.algebra().clone();
        let x = element(&a, d1, m1);
        let y = element(&a, d2, m2);
        let mut rhs = F2Element::zero();
        for j in 0..=i {
            rhs.add_assign(&a.mul(&s.sq(j, &x), &s.sq(i - j, &y)));
        }
        prop_assert_eq!(s.sq(i, &a.mul(&x, &y)), a.normal_form(&rhs));
    }
}

fn algebras() -> Vec<PresentedF2Algebra> {
    vec![builtin::sd(), builtin::d8(), builtin::v2(), builtin::m(4).unwrap(), builtin::m(8).unwrap(), builtin::lens(5).unwrap()]
}

#[test]
fn graded_dimensions_match_the_oracle_to_degree_40() {
    for a in algebras() {
        for n in 0..=40 {
            assert_eq!(a.graded_basis(n).unwrap().len(), a.oracle_dimension(n), "{} degree {n}", a.name());
        }
    }
}

#[test]
fn closed_form_dimensions() {
    // Poincaré series: 1/(1-t)^2 for V2, (n+1) for D8, and 2 in every
    // positive degree below the top for the bundle algebras.
    let (v2, d8, m4) = (builtin::v2(), builtin::d8(), builtin::m(4).unwrap());
    for n in 0..=20 {
        assert_eq!(v2.graded_basis(n).unwrap().len() as u32, n + 1);
        assert_eq!(d8.graded_basis(n).unwrap().len() as u32, n + 1);
    }
    for n in 1..8 {
        assert_eq!(m4.graded_basis(n).unwrap().len(), 2, "degree {n}");
    }
    assert_eq!(m4.graded_basis(8).unwrap().len(), 1);
    assert_eq!(m4.graded_basis(9).unwrap().len(), 0);
}

fn check_duality(f: &GradedHom, n: u32) {
    let src = f.source().graded_basis(n).unwrap();
    let tgt = f.target().graded_basis(n).unwrap();
    for t in tgt.iter() {
        let pushed = f.pushforward_dual(t).unwrap();
        for s in src.iter() {
            let image = f.apply(&F2Element::from_monomial(s.clone()));
            assert_eq!(image.contains(t), pushed.contains(s), "degree {n}");
        }
    }
}

#[test]
fn pushforward_is_the_transpose() {
    let homs = [builtin::sd_to_d8(), builtin::d8_to_v2(), builtin::sd_to_m(4, "Z^2 + Z*tau^2").unwrap()];
    for f in &homs {
        for n in 0..=16 {
            check_duality(f, n);
        }
    }
}

#[test]
fn documented_normal_forms() {
    let sd = builtin::sd();
    assert_eq!(sd.format(&sd.parse("y*u^3").unwrap()), "y^3*u*P");
    assert_eq!(sd.format(&sd.parse("x*u").unwrap()), "0");
}

#[test]
fn wu_and_stiefel_whitney_on_the_bundle_algebras() {
    for n in [4u32, 8] {
        let spin = builtin::m_steenrod(n, Branch::Spin).unwrap();
        let w = spin.stiefel_whitney().unwrap();
        assert!(w[1].is_zero() && w[2].is_zero());
        let other = builtin::m_steenrod(n, Branch::NonSpin).unwrap();
        let a = other.algebra();
        assert_eq!(a.format(&other.stiefel_whitney().unwrap()[1]), "tau");
    }
}

#[test]
fn json_presentations_round_trip() {
    let text = r#"{"name": "m4", "generators": [{"name": "sigma", "degree": 1}, {"name": "tau", "degree": 1}, {"name": "Z", "degree": 2}],
        "relations": ["sigma^2", "sigma*tau + tau^2", "Z^4"], "precedence": ["sigma", "tau", "Z"],
        "poincare": {"dimension": 8, "top": "Z^3*sigma*tau"}, "steenrod": {"Z": {"1": "Z*sigma"}}}"#;
    let doc = AlgebraDocument::from_json(text).unwrap();
    let again = AlgebraDocument::from_json(&doc.to_json()).unwrap();
    assert_eq!(doc, again);
    let (a, sq) = doc.load().unwrap();
    let builtin = builtin::m(4).unwrap();
    for n in 0..=8 {
        assert_eq!(a.graded_basis(n).unwrap().len(), builtin.graded_basis(n).unwrap().len());
    }
    assert!(sq.unwrap().stiefel_whitney().unwrap()[1].is_zero());
    assert!(AlgebraDocument::from_json(&text.replace("Z^4", "Z^^4")).unwrap().load().is_err());
}
