use proptest::prelude::*;

use super::*;
use crate::coeff::RationalFunction;

fn x(k: i8) -> UeaElement {
    Generator::x(k).into()
}

fn t(k: i8) -> UeaElement {
    Generator::t(k).into()
}

fn h() -> RationalFunction {
    RationalFunction::h()
}

fn c(n: i64) -> RationalFunction {
    RationalFunction::from_int(n)
}

fn word(letters: &[Generator]) -> UeaElement {
    normal_order(&[RawTerm::word(letters)])
}

#[test]
fn commutator_examples() {
    assert_eq!(
        commutator_table(Generator::x(1), Generator::x(-1)),
        UeaElement::scalar(h())
    );
    assert_eq!(
        commutator_table(Generator::t(1), Generator::t(1)),
        x(2).scale(&c(-2))
    );
    assert_eq!(commutator_table(Generator::x(1), Generator::t(-2)), t(-1));
}

#[test]
fn commutator_table_is_antisupersymmetric() {
    for a in PBW_ORDER {
        for b in PBW_ORDER {
            let ab = commutator_table(a, b);
            let ba = commutator_table(b, a);
            let s = -swap_sign(a, b);
            assert_eq!(ba, ab.scale(&c(s)), "[{b},{a}]");
        }
    }
}

#[test]
fn super_bracket_agrees_with_table() {
    for a in PBW_ORDER {
        for b in PBW_ORDER {
            let sb = super_bracket(&a.into(), &b.into()).unwrap();
            assert_eq!(sb, commutator_table(a, b), "[{a},{b}]");
        }
    }
}

#[test]
fn normal_order_examples() {
    let e = word(&[Generator::x(1), Generator::x(-1)]);
    let expect = &(-word(&[Generator::x(-1), Generator::x(1)])) + &UeaElement::scalar(h());
    assert_eq!(e, expect);

    // odd square of a tilde letter is half a diagonal bracket
    assert_eq!(word(&[Generator::t(-1), Generator::t(-1)]), x(-2));
    assert_eq!(word(&[Generator::t(1), Generator::t(1)]), -x(2));

    let f = 1 / (h() - 1);
    let raw = RawTerm {
        coeff: RationalFunction::one(),
        factors: vec![RawFactor::Gen(Generator::x(1)), RawFactor::Coeff(f)],
    };
    assert_eq!(normal_order(&[raw]), x(1).scale(&(1 / h())));
}

#[test]
fn normal_order_is_idempotent_on_normal_input() {
    let m = UeaMonomial::from_powers(&[
        (Generator::x(-1), 1),
        (Generator::t(-2), 2),
        (Generator::th(), 3),
        (Generator::x(2), 1),
    ]);
    assert_eq!(word(&m.letters()), UeaElement::monomial(m));
}

#[test]
fn kappa_from_bracket() {
    for n in 1..=6u32 {
        let lhs = super_bracket(&x(1), &x(-1).pow(n)).unwrap();
        let k = if n % 2 == 0 {
            c(n as i64 / 2)
        } else {
            h() - RationalFunction::from_frac((n as i64 - 1) / 2, 1)
        };
        assert_eq!(lhs, x(-1).pow(n - 1).scale(&k), "n = {n}");
    }
}

#[test]
fn right_bracket_by_lowering_vanishes_after_five() {
    let mut acc = t(2);
    for _ in 0..4 {
        acc = super_bracket(&acc, &x(-1)).unwrap();
        assert!(!acc.is_zero());
    }
    assert!(super_bracket(&acc, &x(-1)).unwrap().is_zero());
}

#[test]
fn theta_examples() {
    assert_eq!(theta(&x(2)), -x(-2));
    assert_eq!(theta(&x(1)), x(-1));
    assert_eq!(theta(&t(-1)), t(1));
    assert_eq!(theta(&t(-2)), -t(2));
    let f = UeaElement::scalar(1 / (h() - 3));
    assert_eq!(theta(&f), f);
}

#[test]
fn reduction_examples() {
    let e = word(&[Generator::x(-1), Generator::x(1)]);
    assert!(reduce_mod_i(&e).is_zero());
    assert_eq!(reduce_mod_i(&t(2)), t(2));
    let e = word(&[Generator::x(1), Generator::t(-1)]);
    assert_eq!(reduce_mod_i(&e), UeaElement::generator(Generator::th()));

    let e = word(&[Generator::x(-1), Generator::t(1), Generator::x(1)]);
    assert!(reduce_mod_ii(&e).is_zero());
    let e = word(&[Generator::t(-1), Generator::t(1)]);
    assert_eq!(reduce_mod_ii(&e), e);
    assert!(reduce_mod_ii(&word(&[Generator::t(1), Generator::t(1)])).is_zero());
}

#[test]
fn mixed_parity_is_rejected() {
    let mixed = &t(1) + &t(2);
    assert_eq!(super_bracket(&mixed, &x(1)), Err(crate::Error::MixedParity));
}

#[test]
fn jacobi_on_all_triples() {
    let gens: Vec<UeaElement> = PBW_ORDER.iter().map(|&g| g.into()).collect();
    for (ia, a) in gens.iter().enumerate() {
        for (ib, b) in gens.iter().enumerate() {
            let ab = super_bracket(a, b).unwrap();
            let sign = c(swap_sign(PBW_ORDER[ia], PBW_ORDER[ib]));
            for cc in &gens {
                let lhs = super_bracket(a, &super_bracket(b, cc).unwrap()).unwrap();
                let r1 = super_bracket(&ab, cc).unwrap();
                let r2 = super_bracket(b, &super_bracket(a, cc).unwrap()).unwrap();
                assert_eq!(lhs, &r1 + &r2.scale(&sign));
            }
        }
    }
}

fn letter() -> impl Strategy<Value = Generator> {
    (0usize..9).prop_map(Generator::from_index)
}

fn raw_term() -> impl Strategy<Value = RawTerm> {
    (
        prop::collection::vec(letter(), 0..=5),
        -3i64..=3,
        prop::option::of(-3i64..=3),
    )
        .prop_map(|(letters, k, pole)| {
            let mut t = RawTerm::word(&letters);
            t.coeff = RationalFunction::from_int(k);
            if let Some(p) = pole {
                // a coefficient in the middle of the word
                let at = letters.len() / 2;
                t.factors.insert(at, RawFactor::Coeff(1 / (h() - p)));
            }
            t
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn straightening_is_confluent(terms in prop::collection::vec(raw_term(), 1..3), seed in any::<u64>()) {
        let fast = normal_order(&terms);
        prop_assert_eq!(&normal_order_with(&terms, &mut Leftmost), &fast);
        prop_assert_eq!(&normal_order_with(&terms, &mut Rightmost), &fast);
        prop_assert_eq!(&normal_order_with(&terms, &mut RandomSites::new(seed)), &fast);
    }

    #[test]
    fn weight_and_parity_are_conserved(letters in prop::collection::vec(letter(), 0..=6)) {
        let weight: i64 = -letters.iter().map(|g| g.root() as i64).sum::<i64>();
        let parity = letters.iter().filter(|g| g.is_odd()).count() as u8 % 2;
        let e = word(&letters);
        for (m, _) in e.iter() {
            prop_assert_eq!(m.weight(), weight);
            prop_assert_eq!(m.parity(), parity);
        }
        let th = theta(&e);
        for (m, _) in th.iter() {
            prop_assert_eq!(m.weight(), -weight);
            prop_assert_eq!(m.parity(), parity);
        }
    }

    #[test]
    fn theta_is_an_involutive_anti_automorphism(a in raw_term(), b in raw_term()) {
        let u = normal_order(&[a]);
        let v = normal_order(&[b]);
        prop_assert_eq!(&theta(&theta(&u)), &u);
        prop_assert_eq!(theta(&u.mul(&v)), theta(&v).mul(&theta(&u)));
    }

    #[test]
    fn theta_preserves_ii(a in raw_term()) {
        let u = normal_order(&[a]);
        let lowered = x(-1).mul(&u);
        let raised = u.mul(&x(2));
        for e in [lowered, raised] {
            prop_assert!(reduce_mod_ii(&e).is_zero());
            prop_assert!(reduce_mod_ii(&theta(&e)).is_zero());
        }
    }
}
