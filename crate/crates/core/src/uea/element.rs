use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{LazyLock, RwLock};

use super::generator::{bracket, swap_sign, Bracket, Generator};
use super::monomial::UeaMonomial;
use crate::coeff::{RationalFunction, Rational};

/// Finite sum of PBW monomials with rational-function coefficients in `H`
/// written on the left.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UeaElement {
    terms: BTreeMap<UeaMonomial, RationalFunction>,
}

impl UeaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(RationalFunction::one())
    }

    pub fn scalar(f: RationalFunction) -> Self {
        Self::term(f, UeaMonomial::one())
    }

    pub fn generator(g: Generator) -> Self {
        Self::term(RationalFunction::one(), UeaMonomial::from_generator(g))
    }

    pub fn monomial(m: UeaMonomial) -> Self {
        Self::term(RationalFunction::one(), m)
    }

    pub fn term(f: RationalFunction, m: UeaMonomial) -> Self {
        let mut e = Self::zero();
        e.add_term(m, f);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (UeaMonomial, RationalFunction)>) -> Self {
        let mut e = Self::zero();
        for (m, f) in terms {
            e.add_term(m, f);
        }
        e
    }

    pub fn add_term(&mut self, m: UeaMonomial, f: RationalFunction) {
        if f.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(f);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &f;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &Self, f: &RationalFunction) {
        for (m, g) in &other.terms {
            self.add_term(*m, f * g);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&UeaMonomial, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &UeaMonomial) -> RationalFunction {
        self.terms.get(m).cloned().unwrap_or_else(RationalFunction::zero)
    }

    pub fn leading(&self) -> Option<(&UeaMonomial, &RationalFunction)> {
        self.terms.iter().next()
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(UeaMonomial::degree).max().unwrap_or(0)
    }

    /// Common parity of all terms, `None` if mixed. The zero element counts
    /// as even.
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.keys().map(UeaMonomial::parity);
        let first = it.next().unwrap_or(0);
        it.all(|p| p == first).then_some(first)
    }

    /// Keeps only the terms whose monomial satisfies `keep`.
    pub fn retain(&self, mut keep: impl FnMut(&UeaMonomial) -> bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, f)| (*m, f.clone()))
                .collect(),
        }
    }

    /// `f(H) * self`.
    pub fn scale(&self, f: &RationalFunction) -> Self {
        if f.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, g)| (*m, f * g)).collect(),
        }
    }

    /// `self * f(H)`: the coefficient moves left past each monomial.
    pub fn scale_right(&self, f: &RationalFunction) -> Self {
        if f.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, g)| (*m, g * &f.shift(m.root_sum())))
                .collect(),
        }
    }

    /// `g * self` for a single letter `g`.
    pub fn left_mul_generator(&self, g: Generator) -> Self {
        let mut out = Self::zero();
        for (m, f) in &self.terms {
            let prod = letter_times_monomial(g.index(), m);
            out.add_assign_scaled(&prod, &f.shift(g.root() as i64));
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, f) in &self.terms {
            let shift = m1.root_sum();
            for (m2, g) in &rhs.terms {
                let c = f * &g.shift(shift);
                if m1.is_one() {
                    out.add_term(*m2, c);
                } else {
                    let prod = monomial_times_monomial(m1, m2);
                    out.add_assign_scaled(&prod, &c);
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

type LetterCache = RwLock<HashMap<(usize, UeaMonomial), UeaElement>>;
type PairCache = RwLock<HashMap<(UeaMonomial, UeaMonomial), UeaElement>>;

static LETTER_CACHE: LazyLock<LetterCache> = LazyLock::new(Default::default);
static PAIR_CACHE: LazyLock<PairCache> = LazyLock::new(Default::default);

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

fn from_bracket(b: Bracket, scale: &Rational, rest: &UeaMonomial) -> UeaElement {
    match b {
        Bracket::Zero => UeaElement::zero(),
        Bracket::Cartan(c) => UeaElement::term(
            RationalFunction::h() * RationalFunction::constant(c * scale),
            *rest,
        ),
        Bracket::Letter(c, g) => letter_times_monomial(g.index(), rest)
            .scale(&RationalFunction::constant(c * scale)),
    }
}

/// Normal form of `g_i * m` for a PBW monomial `m`.
///
/// Straightens by pulling the first letter `a` of `m` out to the left:
/// `g a rest = (-1)^{|g||a|} a (g rest) + [g, a] rest`, and
/// `g g rest = 1/2 [g, g] rest` for odd `g`.
pub(crate) fn letter_times_monomial(i: usize, m: &UeaMonomial) -> UeaElement {
    let first = match m.first_index() {
        Some(j) if j <= i => j,
        _ => return UeaElement::monomial(m.with_incremented(i)),
    };
    if let Some(hit) = LETTER_CACHE.read().unwrap().get(&(i, *m)) {
        return hit.clone();
    }
    let g = Generator::from_index(i);
    let result = if first == i {
        if g.is_odd() {
            let rest = m.with_decremented(i);
            from_bracket(bracket(g, g), &half(), &rest)
        } else {
            UeaElement::monomial(m.with_incremented(i))
        }
    } else {
        let a = Generator::from_index(first);
        let rest = m.with_decremented(first);
        let moved = letter_times_monomial(i, &rest);
        let mut out = moved.left_mul_generator(a);
        if swap_sign(g, a) < 0 {
            out = -out;
        }
        let br = from_bracket(bracket(g, a), &Rational::from_integer(1.into()), &rest);
        &out + &br
    };
    LETTER_CACHE
        .write()
        .unwrap()
        .insert((i, *m), result.clone());
    result
}

/// Normal form of `m1 * m2`.
pub(crate) fn monomial_times_monomial(m1: &UeaMonomial, m2: &UeaMonomial) -> UeaElement {
    if m1.is_one() {
        return UeaElement::monomial(*m2);
    }
    if let Some(hit) = PAIR_CACHE.read().unwrap().get(&(*m1, *m2)) {
        return hit.clone();
    }
    let mut acc = UeaElement::monomial(*m2);
    for g in m1.letters().into_iter().rev() {
        acc = acc.left_mul_generator(g);
    }
    PAIR_CACHE.write().unwrap().insert((*m1, *m2), acc.clone());
    acc
}

impl Add for &UeaElement {
    type Output = UeaElement;
    fn add(self, rhs: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        for (m, f) in &rhs.terms {
            out.add_term(*m, f.clone());
        }
        out
    }
}

impl Sub for &UeaElement {
    type Output = UeaElement;
    fn sub(self, rhs: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        for (m, f) in &rhs.terms {
            out.add_term(*m, -f);
        }
        out
    }
}

impl Neg for UeaElement {
    type Output = UeaElement;
    fn neg(self) -> UeaElement {
        UeaElement {
            terms: self.terms.into_iter().map(|(m, f)| (m, -f)).collect(),
        }
    }
}

impl Neg for &UeaElement {
    type Output = UeaElement;
    fn neg(self) -> UeaElement {
        -self.clone()
    }
}

impl Mul for &UeaElement {
    type Output = UeaElement;
    fn mul(self, rhs: &UeaElement) -> UeaElement {
        UeaElement::mul(self, rhs)
    }
}

impl Add for UeaElement {
    type Output = UeaElement;
    fn add(self, rhs: UeaElement) -> UeaElement {
        &self + &rhs
    }
}

impl Sub for UeaElement {
    type Output = UeaElement;
    fn sub(self, rhs: UeaElement) -> UeaElement {
        &self - &rhs
    }
}

impl From<Generator> for UeaElement {
    fn from(g: Generator) -> Self {
        Self::generator(g)
    }
}

impl From<RationalFunction> for UeaElement {
    fn from(f: RationalFunction) -> Self {
        Self::scalar(f)
    }
}

impl fmt::Debug for UeaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("({c}) {m}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
