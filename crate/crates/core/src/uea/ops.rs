use super::element::UeaElement;
use super::generator::{bracket, Bracket, Generator, Kind};
use super::monomial::{UeaMonomial, X_MINUS1, X_MINUS2, X_PLUS1, X_PLUS2};
use crate::coeff::RationalFunction;
use crate::error::{Error, Result};

/// `[a, b]` as an element; weight-zero diagonal results are the coefficient
/// polynomial `c*H`.
pub fn commutator_table(a: Generator, b: Generator) -> UeaElement {
    match bracket(a, b) {
        Bracket::Zero => UeaElement::zero(),
        Bracket::Cartan(c) => UeaElement::scalar(RationalFunction::h() * RationalFunction::constant(c)),
        Bracket::Letter(c, g) => UeaElement::term(RationalFunction::constant(c), UeaMonomial::from_generator(g)),
    }
}

/// `u v - (-1)^{|u||v|} v u` for parity-homogeneous `u`, `v`.
pub fn super_bracket(u: &UeaElement, v: &UeaElement) -> Result<UeaElement> {
    let pu = u.parity().ok_or(Error::MixedParity)?;
    let pv = v.parity().ok_or(Error::MixedParity)?;
    let uv = u.mul(v);
    let vu = v.mul(u);
    Ok(if pu & pv == 1 { &uv + &vu } else { &uv - &vu })
}

/// `[u, X(-1)]`, reduced modulo the right ideal generated by `X(-1)`, `X(-2)`.
///
/// `X(-1) u` lies in that ideal, so only `u X(-1)` is formed.
pub(crate) fn right_bracket_lowering(u: &UeaElement) -> UeaElement {
    reduce_mod_g_minus(&u.mul(&UeaElement::generator(Generator::x(-1))))
}

/// `[X(1), v]`, reduced modulo the left ideal `I`.
///
/// `v X(1)` lies in `I`, so only `X(1) v` is formed.
pub(crate) fn left_bracket_raising(v: &UeaElement) -> UeaElement {
    reduce_mod_i(&v.left_mul_generator(Generator::x(1)))
}

fn theta_generator(g: Generator) -> UeaElement {
    // theta(x_k) = -(-1)^{|x_k|} x_{-k}, identity on the Cartan part
    let image = match g.kind() {
        Kind::Tilde => Generator::t(-g.root()),
        Kind::Diagonal => Generator::x(-g.root()),
    };
    let sign = if g.root() == 0 || g.is_odd() { 1 } else { -1 };
    UeaElement::generator(image).scale(&RationalFunction::from_int(sign))
}

/// The involutive anti-automorphism `Theta(u v) = Theta(v) Theta(u)`,
/// fixing `H` and `th`.
pub fn theta(e: &UeaElement) -> UeaElement {
    let mut out = UeaElement::zero();
    for (m, f) in e.iter() {
        let mut acc = UeaElement::one();
        for g in m.letters() {
            acc = theta_generator(g).mul(&acc);
        }
        out = &out + &acc.scale_right(f);
    }
    out
}

/// Canonical representative of `e + I`, `I = U (C X(1) + C X(2))`.
pub fn reduce_mod_i(e: &UeaElement) -> UeaElement {
    e.retain(|m| m.exponents()[X_PLUS1] == 0 && m.exponents()[X_PLUS2] == 0)
}

/// Drops monomials in `(C X(-1) + C X(-2)) U`.
pub(crate) fn reduce_mod_g_minus(e: &UeaElement) -> UeaElement {
    e.retain(|m| m.exponents()[X_MINUS1] == 0 && m.exponents()[X_MINUS2] == 0)
}

/// Canonical representative of `e + II`: the pure tilde part.
pub fn reduce_mod_ii(e: &UeaElement) -> UeaElement {
    e.retain(UeaMonomial::is_pure_tilde)
}
