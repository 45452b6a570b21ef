//! Passage between ordered diamond monomials and tilde monomials in `U/II`.

use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use super::element::ZElement;
use super::monomial::{ZGen, ZMonomial};
use crate::projector::diamond;
use crate::uea::{reduce_mod_ii, UeaElement, UeaMonomial};

static EXPANSIONS: LazyLock<RwLock<HashMap<ZMonomial, UeaElement>>> =
    LazyLock::new(Default::default);
static LETTER_PRODUCTS: LazyLock<RwLock<HashMap<(ZGen, UeaMonomial), UeaElement>>> =
    LazyLock::new(Default::default);

/// `tilde(g) <> v`, one cached product per monomial of `v`.
///
/// The diamond is right-linear up to the usual coefficient shift:
/// `u <> f(H) v = f(H + root(u)) (u <> v)`.
fn letter_diamond(g: ZGen, v: &UeaElement) -> UeaElement {
    let letter = g.tilde();
    let shift = letter.root() as i64;
    let mut out = UeaElement::zero();
    for (m, f) in v.iter() {
        let hit = LETTER_PRODUCTS.read().unwrap().get(&(g, *m)).cloned();
        let prod = hit.unwrap_or_else(|| {
            let prod = diamond(&letter.into(), &UeaElement::monomial(*m));
            LETTER_PRODUCTS.write().unwrap().insert((g, *m), prod.clone());
            prod
        });
        out.add_assign_scaled(&prod, &f.shift(shift));
    }
    out
}

/// Tilde normal form of a diamond monomial, built right to left by single
/// letter diamond products.
pub fn z_monomial_to_tilde(m: &ZMonomial) -> UeaElement {
    if m.degree() <= 1 {
        return UeaElement::monomial(m.tilde());
    }
    if let Some(hit) = EXPANSIONS.read().unwrap().get(m) {
        return hit.clone();
    }
    let first = m.letters()[0];
    let rest = m.with_decremented(first.index());
    let out = letter_diamond(first, &z_monomial_to_tilde(&rest));
    EXPANSIONS.write().unwrap().insert(*m, out.clone());
    out
}

/// Pure tilde representative of the class of `z` in `U/II`.
pub fn z_to_tilde(z: &ZElement) -> UeaElement {
    let mut out = UeaElement::zero();
    for (m, f) in z.iter() {
        out.add_assign_scaled(&z_monomial_to_tilde(m), f);
    }
    out
}

/// Inverse of [`z_to_tilde`] by back-substitution. `u` may be any
/// representative; it is first reduced modulo `II`.
///
/// The expansion of a diamond monomial is its tilde twin plus terms that
/// come later in the monomial order, so peeling off the first tilde term
/// each round terminates.
pub fn tilde_to_z(u: &UeaElement) -> ZElement {
    let mut rest = reduce_mod_ii(u);
    let mut out = ZElement::zero();
    while let Some((m, c)) = rest.leading() {
        let zm = ZMonomial::from_tilde(m).expect("pure tilde after reduction");
        let c = c.clone();
        let lead = *m;
        rest = &rest - &z_monomial_to_tilde(&zm).scale(&c);
        debug_assert!(rest.coeff(&lead).is_zero(), "expansion of {zm} is not unit triangular");
        out.add_term(zm, c);
    }
    out
}

/// `u <> v` computed through the projector.
///
/// Each term `f * m` of `u` is applied to the tilde form of `v` one letter
/// at a time, right to left, each step a diamond product with a single
/// tilde letter. The diamond is associative on `U/II` and left-linear over
/// the Cartan coefficients, so this equals
/// `tilde_to_z(diamond(z_to_tilde(u), z_to_tilde(v)))` while keeping the
/// lowering chains short.
pub fn z_oracle_multiply(u: &ZElement, v: &ZElement) -> ZElement {
    let right = z_to_tilde(v);
    let mut out = UeaElement::zero();
    for (m, f) in u.iter() {
        let mut acc = right.clone();
        for g in m.letters().iter().rev() {
            acc = letter_diamond(*g, &acc);
        }
        out.add_assign_scaled(&acc, f);
    }
    tilde_to_z(&out)
}

/// How the expansion of `m` fails to be unit triangular, if it does:
/// `Some(reason)` when its first term is not `1 * tilde(m)` or some other
/// term precedes it.
pub fn triangularity_defect(m: &ZMonomial) -> Option<String> {
    let e = z_monomial_to_tilde(m);
    let twin = m.tilde();
    match e.leading() {
        None => Some(format!("{m} expands to zero")),
        Some((lead, _)) if *lead != twin => Some(format!("{m} leads with {lead}")),
        Some((_, c)) if !c.is_one() => Some(format!("{m} has leading coefficient {c}")),
        _ => None,
    }
}
