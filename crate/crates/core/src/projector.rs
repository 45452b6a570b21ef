//! Finite actions of the extremal projector of the diagonal osp(1|2).
//!
//! The projector `P = sum_n phi_n(H) X(-1)^n X(1)^n` is never built as a
//! series. Everything that needs it (the diamond product on `U/II` and the
//! projected generators) is a finite sum, because the iterated brackets
//! with `X(-1)` and `X(1)` are locally nilpotent.

use std::sync::{LazyLock, RwLock};

use crate::coeff::{rational, Polynomial, RationalFunction};
use crate::uea::{
    left_bracket_raising, reduce_mod_i, reduce_mod_ii, right_bracket_lowering, super_bracket,
    Generator, Kind, UeaElement,
};

/// Memo of `phi_n(H)`; grows on demand and may be shared between threads.
#[derive(Debug, Default)]
pub struct PhiTable {
    rows: RwLock<Vec<RationalFunction>>,
}

impl PhiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn phi(&self, n: usize) -> RationalFunction {
        if let Some(f) = self.rows.read().unwrap().get(n) {
            return f.clone();
        }
        let mut rows = self.rows.write().unwrap();
        if rows.is_empty() {
            rows.push(RationalFunction::one());
        }
        while rows.len() <= n {
            let k = rows.len();
            let sign = if k.is_multiple_of(2) { 1 } else { -1 };
            let kappa = RationalFunction::from_poly(kappa(k).shift(&rational(-1, 1)));
            let next = &(&rows[k - 1] * &RationalFunction::from_int(sign)) / &kappa;
            rows.push(next);
        }
        rows[n].clone()
    }

    /// Number of memoized rows.
    pub fn len(&self) -> usize {
        self.rows.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

static TABLE: LazyLock<PhiTable> = LazyLock::new(PhiTable::new);

/// `phi_n(H)`, from the shared table.
pub fn phi(n: usize) -> RationalFunction {
    TABLE.phi(n)
}

/// `kappa_n(H) = sum_{k<n} (-1)^k (H - k)`: `n/2` for even `n`,
/// `H - (n-1)/2` for odd `n`.
pub fn kappa(n: usize) -> Polynomial {
    if n.is_multiple_of(2) {
        Polynomial::constant(rational(n as i64 / 2, 1))
    } else {
        Polynomial::linear_root(rational((n as i64 - 1) / 2, 1))
    }
}

/// `kappa_n` read off from `[X(1), X(-1)^n] = kappa_n(H) X(-1)^(n-1)`.
pub fn kappa_from_bracket(n: usize) -> Polynomial {
    if n == 0 {
        return Polynomial::zero();
    }
    let lower = UeaElement::generator(Generator::x(-1));
    let lhs = super_bracket(&UeaElement::generator(Generator::x(1)), &lower.pow(n as u32))
        .expect("powers of X(-1) are homogeneous");
    let base = lower.pow(n as u32 - 1);
    let (m, c) = base.leading().expect("nonzero power");
    let ratio = &lhs.coeff(m) / c;
    assert_eq!(base.scale(&ratio), lhs, "bracket is not a multiple of X(-1)^(n-1)");
    assert!(ratio.is_polynomial());
    ratio.num().clone()
}

/// Iterated brackets `[X(1), ..]^n(v)` mod `I` until the first zero.
fn raising_chain(v: &UeaElement) -> Vec<UeaElement> {
    let mut out = Vec::new();
    let mut acc = reduce_mod_i(v);
    while !acc.is_zero() {
        let next = left_bracket_raising(&acc);
        out.push(acc);
        acc = next;
    }
    out
}

/// The diamond product on `U/II`:
/// `u <> v = sum_n [u, X(-1)]^n phi_n(H + n) [X(1), v]^n  mod II`.
///
/// Any representatives may be passed; the result is the pure tilde
/// representative.
pub fn diamond(u: &UeaElement, v: &UeaElement) -> UeaElement {
    // Both chains are built in step and stop at the first zero on either
    // side; the longer one is never needed past that point.
    let bound = 4 * u.max_degree() as usize + 1;
    let mut left = u.clone();
    let mut right = reduce_mod_i(v);
    let mut out = UeaElement::zero();
    let mut n = 0;
    while !left.is_zero() && !right.is_zero() {
        assert!(n < bound, "diamond series did not terminate within its bound");
        let middle = right.scale(&phi(n).shift(n as i64));
        out = &out + &reduce_mod_ii(&left.mul(&middle));
        left = right_bracket_lowering(&left);
        right = left_bracket_raising(&right);
        n += 1;
    }
    out
}

/// `P g + I` for a tilde generator `g`, as
/// `sum_n phi_n(H) X(-1)^n [X(1), g]^n`.
pub fn projected_generator(g: Generator) -> UeaElement {
    assert_eq!(g.kind(), Kind::Tilde, "projected generators come from tilde letters");
    let lower = UeaElement::generator(Generator::x(-1));
    let mut out = UeaElement::zero();
    let mut power = UeaElement::one();
    for (n, a) in raising_chain(&g.into()).into_iter().enumerate() {
        let term = power.mul(&a).scale(&phi(n));
        out = &out + &term;
        power = power.mul(&lower);
    }
    reduce_mod_i(&out)
}

/// One row of [`verify_projector_recursion`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecursionCheck {
    pub n: usize,
    pub residual: RationalFunction,
}

impl RecursionCheck {
    pub fn passed(&self) -> bool {
        self.residual.is_zero()
    }
}

/// `(-1)^n phi_n(H+1) + phi_{n+1}(H+1) kappa_{n+1}(H)` for `n < bound`;
/// every residual vanishes exactly when `X(1) P = 0`.
pub fn verify_projector_recursion(bound: usize) -> Vec<RecursionCheck> {
    (0..bound)
        .map(|n| {
            let sign = RationalFunction::from_int(if n % 2 == 0 { 1 } else { -1 });
            let a = &sign * &phi(n).shift(1);
            let b = &phi(n + 1).shift(1) * &RationalFunction::from_poly(kappa(n + 1));
            RecursionCheck { n, residual: &a + &b }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uea::{normal_order, RawFactor, RawTerm};

    fn rf(n: i64) -> RationalFunction {
        RationalFunction::from_int(n)
    }

    fn tilde(k: i8) -> Generator {
        if k == 0 {
            Generator::th()
        } else {
            Generator::t(k)
        }
    }

    fn word(letters: &[Generator]) -> UeaElement {
        normal_order(&[RawTerm::word(letters)])
    }

    fn g(k: i8) -> UeaElement {
        tilde(k).into()
    }

    #[test]
    fn phi_examples() {
        let h = RationalFunction::h();
        assert_eq!(phi(0), rf(1));
        assert_eq!(phi(1), &rf(-1) / &(&h - &rf(1)));
        assert_eq!(phi(2), phi(1));
        let p3 = &rf(1) / &(&(&h - &rf(2)) * &(&h - &rf(1)));
        assert_eq!(phi(3), p3);
        assert_eq!(phi(4), &p3 * &RationalFunction::from_frac(1, 2));
    }

    #[test]
    fn kappa_examples() {
        assert!(kappa(0).is_zero());
        assert_eq!(kappa(2), Polynomial::from_int(1));
        assert_eq!(kappa(5), Polynomial::linear_root(rational(2, 1)));
        assert_eq!(kappa(7).eval(&rational(10, 1)), rational(7, 1));
    }

    #[test]
    fn kappa_closed_form_matches_bracket() {
        for n in 0..=8 {
            assert_eq!(kappa(n), kappa_from_bracket(n), "n = {n}");
        }
    }

    #[test]
    fn recursion_holds() {
        let rows = verify_projector_recursion(12);
        assert_eq!(rows.len(), 12);
        assert!(rows.iter().all(RecursionCheck::passed));
    }

    #[test]
    fn local_table_agrees_with_shared() {
        let t = PhiTable::new();
        assert!(t.is_empty());
        assert_eq!(t.phi(6), phi(6));
        assert_eq!(t.len(), 7);
    }

    #[test]
    fn shared_table_is_thread_safe() {
        let handles: Vec<_> = (0..4)
            .map(|i| std::thread::spawn(move || phi(10 + i)))
            .collect();
        let got: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (i, f) in got.iter().enumerate() {
            assert_eq!(*f, PhiTable::new().phi(10 + i));
        }
    }

    fn x_minus_pow_times(n: u32, k: i8, coeff: RationalFunction) -> UeaElement {
        let mut letters = vec![Generator::x(-1); n as usize];
        letters.push(tilde(k));
        word(&letters).scale(&coeff)
    }

    #[test]
    fn projected_generators() {
        let p1 = phi(1);
        assert_eq!(projected_generator(tilde(2)), g(2));
        let expect = &g(1) + &x_minus_pow_times(1, 2, &rf(-2) * &p1);
        assert_eq!(projected_generator(tilde(1)), expect);
        let expect = &(&g(0) + &x_minus_pow_times(1, 1, p1.clone()))
            + &x_minus_pow_times(2, 2, &rf(-2) * &phi(2));
        assert_eq!(projected_generator(tilde(0)), expect);
        let expect = [
            g(-1),
            x_minus_pow_times(1, 0, p1.clone()),
            x_minus_pow_times(2, 1, phi(2)),
            x_minus_pow_times(3, 2, &rf(-2) * &phi(3)),
        ]
        .iter()
        .fold(UeaElement::zero(), |a, b| &a + b);
        assert_eq!(projected_generator(tilde(-1)), expect);
        let expect = [
            g(-2),
            x_minus_pow_times(1, -1, p1),
            x_minus_pow_times(2, 0, phi(2)),
            x_minus_pow_times(3, 1, phi(3)),
            x_minus_pow_times(4, 2, &rf(-2) * &phi(4)),
        ]
        .iter()
        .fold(UeaElement::zero(), |a, b| &a + b);
        assert_eq!(projected_generator(tilde(-2)), expect);
    }

    #[test]
    fn projected_generators_are_primitive() {
        for k in -2..=2 {
            let p = projected_generator(tilde(k));
            let raised = super_bracket(&Generator::x(1).into(), &p).unwrap();
            assert!(reduce_mod_i(&raised).is_zero(), "k = {k}");
            let raised = super_bracket(&Generator::x(2).into(), &p).unwrap();
            assert!(reduce_mod_i(&raised).is_zero(), "k = {k}");
        }
    }

    #[test]
    fn ordered_products() {
        let h = RationalFunction::h();
        let p1 = phi(1);
        let p1m = p1.shift(-1);
        for k in -2..=2 {
            assert_eq!(diamond(&g(k), &g(2)), word(&[tilde(k), tilde(2)]));
            assert_eq!(diamond(&g(-2), &g(k)), word(&[tilde(-2), tilde(k)]));
        }
        let expect = word(&[tilde(0), tilde(2)]).scale(&(&rf(2) / &h));
        assert_eq!(diamond(&g(1), &g(1)), expect);
        let expect = &word(&[tilde(0), tilde(1)]) + &word(&[tilde(-1), tilde(2)]).scale(&(&rf(-2) * &p1));
        assert_eq!(diamond(&g(0), &g(1)), expect);
        let expect = &word(&[tilde(-1), tilde(1)]) + &word(&[tilde(-2), tilde(2)]).scale(&(&rf(-4) * &p1m));
        assert_eq!(diamond(&g(-1), &g(1)), expect);
        let expect = [
            word(&[tilde(0), tilde(0)]),
            word(&[tilde(-1), tilde(1)]).scale(&p1),
            word(&[tilde(-2), tilde(2)]).scale(&(&rf(-4) * &phi(2))),
        ]
        .iter()
        .fold(UeaElement::zero(), |a, b| &a + b);
        assert_eq!(diamond(&g(0), &g(0)), expect);
        let expect = &word(&[tilde(-1), tilde(0)]) + &word(&[tilde(-2), tilde(1)]).scale(&(&rf(2) * &p1m));
        assert_eq!(diamond(&g(-1), &g(0)), expect);
        let expect = word(&[tilde(-2), tilde(0)]).scale(&(&rf(2) * &p1m));
        assert_eq!(diamond(&g(-1), &g(-1)), expect);
    }

    #[test]
    fn first_ordered_product_line() {
        // t(2) t(1) + [t(2), X(-1)] phi_1(H+1) [X(1), t(1)] with the
        // coefficient moved left across t(1)
        let expect = word(&[tilde(1), tilde(2)]).scale(&(&rf(1) + &(&rf(2) * &phi(1).shift(2))));
        assert_eq!(diamond(&g(2), &g(1)), expect);
    }

    #[test]
    fn unit_is_two_sided() {
        for k in -2..=2 {
            assert_eq!(diamond(&UeaElement::one(), &g(k)), g(k));
            assert_eq!(diamond(&g(k), &UeaElement::one()), g(k));
        }
    }

    #[test]
    fn associative_on_generator_triples() {
        for a in -2..=2 {
            for b in -2..=2 {
                for c in -2..=2 {
                    let l = diamond(&diamond(&g(a), &g(b)), &g(c));
                    let r = diamond(&g(a), &diamond(&g(b), &g(c)));
                    assert_eq!(l, r, "({a},{b},{c})");
                }
            }
        }
    }

    #[test]
    fn theta_anti_compatible() {
        use crate::uea::theta;
        for a in -2..=2 {
            for b in -2..=2 {
                let l = theta(&diamond(&g(a), &g(b)));
                let r = diamond(&theta(&g(b)), &theta(&g(a)));
                assert_eq!(reduce_mod_ii(&l), r, "({a},{b})");
            }
        }
    }

    #[test]
    fn coefficients_pass_through() {
        let f = &rf(1) / &(&RationalFunction::h() - &rf(3));
        let fu = UeaElement::scalar(f.clone());
        assert_eq!(diamond(&fu, &g(1)), g(1).scale(&f));
        let raw = RawTerm {
            coeff: RationalFunction::one(),
            factors: vec![RawFactor::Gen(tilde(1)), RawFactor::Coeff(f.clone())],
        };
        assert_eq!(diamond(&g(1), &fu), normal_order(&[raw]));
    }

    fn junk(w: &UeaElement) -> UeaElement {
        let m2 = word(&[Generator::x(-2)]);
        let p2 = word(&[Generator::x(2)]);
        let lt = word(&[Generator::x(-1), tilde(1)]);
        let tr = word(&[tilde(-1), Generator::x(1)]);
        [m2.mul(w), w.mul(&p2), lt.mul(w), w.mul(&tr)]
            .iter()
            .fold(UeaElement::zero(), |a, b| &a + b)
    }

    #[test]
    fn ii_representatives_do_not_matter() {
        for a in -2..=2 {
            for b in -2..=2 {
                let base = diamond(&g(a), &g(b));
                assert_eq!(diamond(&(&g(a) + &junk(&g(a))), &g(b)), base);
                assert_eq!(diamond(&g(a), &(&g(b) + &junk(&g(b)))), base);
            }
        }
    }
}
