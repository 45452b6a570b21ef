use proptest::prelude::*;

use super::*;
use crate::coeff::{QuadExt, Rational, RationalFunction};
use crate::projector::projected_generator;
use crate::uea::Generator;
use crate::zalg::{RelationCatalog, ZElement, ZGen};
use crate::Error;

fn q(n: i64, d: i64) -> QuadExt {
    QuadExt::rational(Rational::new(n.into(), d.into()))
}

fn rat(rows: &[Vec<(i64, i64)>]) -> Matrix {
    Matrix::from_rational_rows(rows)
}

#[test]
fn defining_brackets_hold() {
    for lambda in 0..=4 {
        assert!(irrep_bracket_defects(&IrrepData::new(lambda)).is_empty(), "lambda {lambda}");
    }
    assert!(poly_bracket_defects(&PolyModule::new(10)).is_empty());
}

#[test]
fn irrep_spectrum() {
    let v = IrrepData::new(2);
    assert_eq!(v.dim(), 5);
    let diag: Vec<QuadExt> = (0..5).map(|i| v.matrix(0).get(i, i).clone()).collect();
    assert_eq!(diag, [2, 1, 0, -1, -2].map(|m| q(m, 1)));
    assert_eq!((0..5).map(|i| v.parity(i)).collect::<Vec<_>>(), [0, 1, 0, 1, 0]);
}

#[test]
fn poly_truncation_overflow() {
    let p = PolyModule::new(3);
    assert_eq!(p.act(-1, 3), Err(Error::TruncationOverflow(3)));
    assert_eq!(p.act(1, 0), Ok(None));
    assert_eq!(p.act(0, 0), Ok(Some((0, q(1, 2)))));
}

#[test]
fn example_vectors() {
    let m = example_module(6);
    let [w1, w2] = example_basis(&m);
    let h = RationalFunction::h();
    assert_eq!(m.act_coeff(&h, &w1).unwrap(), w1.scale(&q(-1, 2)));
    assert_eq!(m.act_coeff(&h, &w2).unwrap(), w2.scale(&q(1, 2)));
    for v in [&w1, &w2] {
        assert!(m.act_generator(Generator::x(1), v).unwrap().is_zero());
        assert!(m.act_generator(Generator::x(2), v).unwrap().is_zero());
    }
}

#[test]
fn generators_shift_weights() {
    let m = TensorModule::new(8, 2);
    for g in crate::uea::PBW_ORDER {
        for idx in 0..m.dim() {
            let (k, _) = m.split(idx);
            if k > 5 {
                continue;
            }
            let mut v = m.zero();
            v.add_at(idx, &QuadExt::one());
            let out = m.act_generator(g, &v).unwrap();
            if let Some(w) = m.weight_of(&out) {
                assert_eq!(w, m.weight(idx) - g.root() as i64, "{g} on {idx}");
            }
        }
    }
}

#[test]
fn primitive_extraction() {
    let m = example_module(6);
    let prims = m.primitive_vectors(-1..=0).unwrap();
    assert_eq!(prims.len(), 2);
    assert!(same_span(&prims, &example_basis(&m)));

    let m0 = TensorModule::new(6, 0);
    let prims = m0.primitive_vectors(0..=0).unwrap();
    assert_eq!(prims, vec![m0.basis_vector(0, 0)]);
    assert!(m0.primitive_vectors(1..=4).unwrap().is_empty());
    assert!(m0.primitive_vectors(std::iter::empty()).unwrap().is_empty());

    assert!(matches!(
        example_module(6).primitive_vectors(6..=6),
        Err(Error::WindowNotClosed { needed: 7, trunc: 6, .. })
    ));
}

#[test]
fn projector_on_vectors() {
    let m = example_module(8);
    let [w1, w2] = example_basis(&m);
    assert_eq!(m.apply_projector(&w2).unwrap(), w2);
    assert_eq!(m.apply_projector(&w1).unwrap(), w1);
    for idx in m.weight_space(1) {
        let mut v = m.zero();
        v.add_at(idx, &QuadExt::one());
        let lowered = m.act_generator(Generator::x(-1), &v).unwrap();
        assert!(m.apply_projector(&lowered).unwrap().is_zero());
        let p = m.apply_projector(&v).unwrap();
        assert!(m.is_primitive(&p).unwrap());
    }
}

#[test]
fn rho_through_projected_generators() {
    let m = example_module(8);
    for w in example_basis(&m) {
        for g in ZGen::ALL {
            let direct = m.act_uea(&projected_generator(g.tilde()), &w).unwrap();
            assert_eq!(rho(&m, &g.into(), &w).unwrap(), direct, "{g}");
        }
    }
}

#[test]
fn rho_rejects_non_primitive() {
    let m = example_module(6);
    let v = m.basis_vector(1, 2);
    assert_eq!(rho(&m, &ZElement::one(), &v), Err(Error::NotPrimitive));
}

#[test]
fn example_matrices() {
    let r = example_rho(8).unwrap();
    assert_eq!(r.generator(ZGen::new(1)), &rat(&[vec![(0, 1), (2, 1)], vec![(0, 1), (0, 1)]]));
    assert_eq!(r.generator(ZGen::new(-1)), &rat(&[vec![(0, 1), (0, 1)], vec![(2, 1), (0, 1)]]));
    assert!(r.generator(ZGen::new(2)).is_zero());
    assert!(r.generator(ZGen::new(-2)).is_zero());
    assert_eq!(r.generator(ZGen::new(0)), &rat(&[vec![(3, 2), (0, 1)], vec![(0, 1), (9, 2)]]));
    let f = (RationalFunction::h() + 3) / (RationalFunction::h() - 2);
    assert_eq!(r.coeff(&f).unwrap(), rat(&[vec![(-1, 1), (0, 1)], vec![(0, 1), (-7, 3)]]));
    // independent of the truncation once the window is closed
    assert_eq!(example_rho(6).unwrap(), r);
}

#[test]
fn windowed_example_breaks_four_relations() {
    let r = example_rho(8).unwrap();
    for catalog in [RelationCatalog::standard(), RelationCatalog::from_oracle()] {
        let checks = check_rep_relations(&r, &catalog);
        assert_eq!(checks.len(), 14);
        let failing: Vec<&str> = checks.iter().filter(|c| !c.passed()).map(|c| c.label.as_str()).collect();
        assert_eq!(failing, ["E(2) <> E(-1)", "E(2) <> E(-2)", "E(1) <> E(-1)", "E(1) <> E(-2)"]);
        // by hand: rho(E1) rho(E-1) = diag(4, 0), while the right side at H = 1/2
        // is (-1 + 2) * 4 - 2 * 81/4 + 1/2 = -36
        let c = checks.iter().find(|c| c.label == "E(1) <> E(-1)").unwrap();
        assert_eq!(c.residual, Ok(rat(&[vec![(0, 1), (0, 1)], vec![(0, 1), (36, 1)]])));
    }
}

#[test]
fn full_primitive_space() {
    let m = example_module(8);
    let [w1, w2] = example_basis(&m);
    let w3 = example_top(&m);
    assert!(m.is_primitive(&w3).unwrap());
    let prims = m.primitive_vectors(-1..=6).unwrap();
    assert!(same_span(&prims, &[w1, w2, w3]));

    let r = example_rho_full(8).unwrap();
    assert_eq!(r.generator(ZGen::new(-2)), &rat(&[vec![(0, 1); 3], vec![(0, 1); 3], vec![(-2, 1), (0, 1), (0, 1)]]));
    assert_eq!(r.generator(ZGen::new(0)).get(2, 2), &q(-9, 2));
    assert!(check_rep_relations(&r, &RelationCatalog::from_oracle()).iter().all(|c| c.passed()));

    let stated = check_rep_relations(&r, &RelationCatalog::standard());
    let failing: Vec<&RepRelationCheck> = stated.iter().filter(|c| !c.passed()).collect();
    assert_eq!(failing.len(), 1);
    assert_eq!(failing[0].label, "E(2) <> E(-2)");
    // 8/((H-2) H (H+1) (H+2)) at H = 3/2, times rho(E(-2) E(2)) w3 = 4 w3
    let mut expect = Matrix::zeros(3, 3);
    expect.set(2, 2, q(-512, 105));
    assert_eq!(failing[0].residual, Ok(expect));
    assert_eq!(generated_algebra_dimension(&r), 9);
}

#[test]
fn larger_lambda_primitives_are_fixed_by_projector() {
    let m = TensorModule::new(9, 2);
    let prims = m.primitive_vectors(-2..=3).unwrap();
    assert!(!prims.is_empty());
    for p in &prims {
        assert_eq!(&m.apply_projector(p).unwrap(), p);
    }
    let r = RhoMatrices::compute(&m, &prims).unwrap();
    for c in check_rep_relations(&r, &RelationCatalog::from_oracle()) {
        assert!(c.passed(), "{}", c.label);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn projector_is_idempotent(coeffs in prop::collection::vec(-3i64..=3, 6), m in -1i64..=2) {
        let module = TensorModule::new(10, 1);
        let space = module.weight_space(m);
        let mut v = module.zero();
        for (&idx, &c) in space.iter().zip(&coeffs) {
            v.add_at(idx, &q(c, 1));
        }
        let once = module.apply_projector(&v).unwrap();
        prop_assert!(module.is_primitive(&once).unwrap());
        prop_assert_eq!(module.apply_projector(&once).unwrap(), once);
    }
}
