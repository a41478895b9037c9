use std::sync::Arc;

use etakit::exactnum::{rat, CyclotomicNumber, Rational};
use etakit::grouprep::{builtin_table, frobenius_schur, restrict_virtual, GroupTag, Inclusion, VirtualCharacter};
use proptest::prelude::*;

fn cyc(order: u32) -> impl Strategy<Value = CyclotomicNumber> {
    prop::collection::vec((-6i64..=6, 1i64..=4), 1..=order as usize)
        .prop_map(move |v| CyclotomicNumber::from_power_coeffs(order, v.into_iter().map(|(n, d)| rat(n, d)).collect()))
}

fn triple() -> impl Strategy<Value = (CyclotomicNumber, CyclotomicNumber, CyclotomicNumber)> {
    prop::sample::select(vec![4u32, 8, 12, 16]).prop_flat_map(|n| (cyc(n), cyc(n), cyc(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws((a, b, c) in triple()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
    }

    #[test]
    fn inverses((a, b, _) in triple()) {
        prop_assume!(!a.is_zero());
        let one = CyclotomicNumber::one(a.order());
        prop_assert_eq!(&a * &a.inverse().unwrap(), one);
        prop_assert_eq!(&a.checked_div(&a).unwrap(), &CyclotomicNumber::one(a.order()));
        prop_assert_eq!(&(&b * &a).checked_div(&a).unwrap(), &b);
    }

    #[test]
    fn automorphisms((a, b, _) in triple()) {
        prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
        prop_assert_eq!((&a + &b).galois(7), &a.galois(7) + &b.galois(7));
        prop_assert_eq!((&a * &b).galois(5), &a.galois(5) * &b.galois(5));
        let m = 2 * a.order();
        prop_assert_eq!((&a * &b).embed(m), &a.embed(m) * &b.embed(m));
    }

    #[test]
    fn display_round_trips((a, _, _) in triple()) {
        let back: CyclotomicNumber = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn restriction_is_additive(x in prop::collection::vec(-3i64..=3, 7), y in prop::collection::vec(-3i64..=3, 7)) {
        let sd = builtin_table(GroupTag::SD16).unwrap();
        let q8 = builtin_table(GroupTag::Q8).unwrap();
        let iota = Inclusion::new(q8, Arc::clone(&sd), &["s^2", "t*s"]).unwrap();
        let a = VirtualCharacter::new(Arc::clone(&sd), x).unwrap();
        let b = VirtualCharacter::new(Arc::clone(&sd), y).unwrap();
        let sum = restrict_virtual(&a.checked_add(&b).unwrap(), &iota).unwrap();
        let parts = restrict_virtual(&a, &iota).unwrap().checked_add(&restrict_virtual(&b, &iota).unwrap()).unwrap();
        prop_assert_eq!(sum, parts);
        let prod = restrict_virtual(&a.checked_mul(&b).unwrap(), &iota).unwrap();
        let prod_parts = restrict_virtual(&a, &iota).unwrap().checked_mul(&restrict_virtual(&b, &iota).unwrap()).unwrap();
        prop_assert_eq!(prod, prod_parts);
    }
}

const TAGS: [GroupTag; 7] =
    [GroupTag::Cyclic(2), GroupTag::Cyclic(8), GroupTag::Cyclic(12), GroupTag::V2, GroupTag::D8, GroupTag::Q8, GroupTag::SD16];

#[test]
fn row_and_column_orthogonality() {
    for tag in TAGS {
        let t = builtin_table(tag).unwrap();
        let n = t.field_order();
        for i in 0..t.len() {
            for j in 0..t.len() {
                let ip = t.inner_product(t.row(i), t.row(j));
                let want = CyclotomicNumber::from_integer(n, i64::from(i == j));
                assert_eq!(ip, want, "{tag} rows {i},{j}");
            }
        }
        let g = t.group();
        for a in 0..g.classes().len() {
            for b in 0..g.classes().len() {
                let mut s = CyclotomicNumber::zero(n);
                for i in 0..t.len() {
                    s = &s + &(t.value(i, a) * &t.value(i, b).conjugate());
                }
                let centralizer = (g.order() / g.classes()[a].size()) as i64;
                let want = CyclotomicNumber::from_integer(n, if a == b { centralizer } else { 0 });
                assert_eq!(s, want, "{tag} classes {a},{b}");
            }
        }
    }
}

#[test]
fn indicators_and_degrees() {
    let q8 = builtin_table(GroupTag::Q8).unwrap();
    let tau = VirtualCharacter::irreducible(Arc::clone(&q8), "tau").unwrap();
    assert_eq!(frobenius_schur(&tau).unwrap(), -1);
    assert_eq!(tau.virtual_dimension(), 2);
    let sd = builtin_table(GroupTag::SD16).unwrap();
    for (name, ind) in [("rho", 0), ("rho5", 0), ("rho2", 1), ("q8", 1)] {
        let chi = VirtualCharacter::irreducible(Arc::clone(&sd), name).unwrap();
        assert_eq!(frobenius_schur(&chi).unwrap(), ind, "{name}");
    }
    let degrees: i64 = (0..sd.len()).map(|i| sd.degree(i).pow(2)).sum();
    assert_eq!(degrees, 16);
}

#[test]
fn known_restrictions() {
    let sd = builtin_table(GroupTag::SD16).unwrap();
    let c8 = builtin_table(GroupTag::Cyclic(8)).unwrap();
    let q8 = builtin_table(GroupTag::Q8).unwrap();
    let s_in = Inclusion::new(c8, Arc::clone(&sd), &["s"]).unwrap();
    let q_in = Inclusion::new(q8, Arc::clone(&sd), &["s^2", "t*s"]).unwrap();
    let r = |e: &str, i: &Inclusion| restrict_virtual(&VirtualCharacter::parse(Arc::clone(&sd), e).unwrap(), i).unwrap().to_string();
    assert_eq!(r("rho", &s_in), "r1 + r3");
    assert_eq!(r("rho2", &q_in), "k1 + k3");
    assert_eq!(r("2 - rho", &q_in), "2*r0 - tau");
}

#[test]
fn rationals_are_lowest_terms() {
    let x: Rational = rat(6, -8);
    assert_eq!(x.to_string(), "-3/4");
}
