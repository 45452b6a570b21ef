use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::{LazyLock, RwLock};

use super::catalog::RelationCatalog;
use super::monomial::{ZGen, ZMonomial};
use crate::coeff::RationalFunction;

/// Left `D^{-1}U(h)`-combination of ordered diamond monomials.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ZElement {
    terms: BTreeMap<ZMonomial, RationalFunction>,
}

impl ZElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(RationalFunction::one())
    }

    pub fn scalar(f: RationalFunction) -> Self {
        Self::term(f, ZMonomial::one())
    }

    pub fn gen(g: ZGen) -> Self {
        Self::term(RationalFunction::one(), ZMonomial::from_gen(g))
    }

    pub fn monomial(m: ZMonomial) -> Self {
        Self::term(RationalFunction::one(), m)
    }

    pub fn term(f: RationalFunction, m: ZMonomial) -> Self {
        let mut e = Self::zero();
        e.add_term(m, f);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (ZMonomial, RationalFunction)>) -> Self {
        let mut e = Self::zero();
        for (m, f) in terms {
            e.add_term(m, f);
        }
        e
    }

    pub fn add_term(&mut self, m: ZMonomial, f: RationalFunction) {
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

    pub fn iter(&self) -> impl Iterator<Item = (&ZMonomial, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &ZMonomial) -> RationalFunction {
        self.terms.get(m).cloned().unwrap_or_else(RationalFunction::zero)
    }

    pub fn leading(&self) -> Option<(&ZMonomial, &RationalFunction)> {
        self.terms.iter().next()
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(ZMonomial::degree).max().unwrap_or(0)
    }

    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.keys().map(ZMonomial::parity);
        let first = it.next().unwrap_or(0);
        it.all(|p| p == first).then_some(first)
    }

    /// `f(H) <> self`.
    pub fn scale(&self, f: &RationalFunction) -> Self {
        if f.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, g)| (*m, f * g)).collect(),
        }
    }

    /// `self <> f(H)`.
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

    /// The product in `Z`, straightened with the oracle-checked relations.
    pub fn mul(&self, rhs: &Self) -> Self {
        z_multiply(self, rhs)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

/// The product `u <> v` in `Z`, by straightening with the relation catalog.
pub fn z_multiply(u: &ZElement, v: &ZElement) -> ZElement {
    let mut out = ZElement::zero();
    for (m1, f) in &u.terms {
        let shift = m1.root_sum();
        for (m2, g) in &v.terms {
            let c = f * &g.shift(shift);
            if m1.is_one() {
                out.add_term(*m2, c);
            } else {
                out.add_assign_scaled(&monomial_times_monomial(m1, m2), &c);
            }
        }
    }
    out
}

type LetterCache = RwLock<HashMap<(usize, ZMonomial), ZElement>>;
type PairCache = RwLock<HashMap<(ZMonomial, ZMonomial), ZElement>>;

static LETTER_CACHE: LazyLock<LetterCache> = LazyLock::new(Default::default);
static PAIR_CACHE: LazyLock<PairCache> = LazyLock::new(Default::default);

fn rewrite_rules() -> &'static RelationCatalog {
    static RULES: LazyLock<RelationCatalog> = LazyLock::new(RelationCatalog::from_oracle);
    &RULES
}

fn left_mul_letter(i: usize, e: &ZElement) -> ZElement {
    let k = ZGen::from_index(i).root() as i64;
    let mut out = ZElement::zero();
    for (m, f) in &e.terms {
        out.add_assign_scaled(&letter_times_monomial(i, m), &f.shift(k));
    }
    out
}

/// `E_i <> m` in ordered form.
fn letter_times_monomial(i: usize, m: &ZMonomial) -> ZElement {
    let j = match m.first_index() {
        Some(j) if j < i || (j == i && ZGen::from_index(i).is_odd()) => j,
        _ => return ZElement::monomial(m.with_incremented(i)),
    };
    if let Some(hit) = LETTER_CACHE.read().unwrap().get(&(i, *m)) {
        return hit.clone();
    }
    let rule = rewrite_rules()
        .rule(ZGen::from_index(i), ZGen::from_index(j))
        .expect("every misordered pair has a rule");
    let rest = m.with_decremented(j);
    let mut out = ZElement::zero();
    for (mr, f) in &rule.terms {
        out.add_assign_scaled(&monomial_times_monomial(mr, &rest), f);
    }
    LETTER_CACHE.write().unwrap().insert((i, *m), out.clone());
    out
}

fn monomial_times_monomial(m1: &ZMonomial, m2: &ZMonomial) -> ZElement {
    if m1.is_one() {
        return ZElement::monomial(*m2);
    }
    if let Some(hit) = PAIR_CACHE.read().unwrap().get(&(*m1, *m2)) {
        return hit.clone();
    }
    let mut acc = ZElement::monomial(*m2);
    for g in m1.letters().into_iter().rev() {
        acc = left_mul_letter(g.index(), &acc);
    }
    PAIR_CACHE.write().unwrap().insert((*m1, *m2), acc.clone());
    acc
}

fn theta_gen(g: ZGen) -> ZElement {
    let sign = if g.root().abs() == 2 { -1 } else { 1 };
    ZElement::gen(ZGen::new(-g.root())).scale(&RationalFunction::from_int(sign))
}

/// The anti-automorphism induced on `Z`: `E(k) -> -E(-k)` for `k = +-2`,
/// `E(k) -> E(-k)` otherwise, fixing coefficients, reversing products.
pub fn z_theta(e: &ZElement) -> ZElement {
    let mut out = ZElement::zero();
    for (m, f) in &e.terms {
        let mut acc = ZElement::one();
        for g in m.letters() {
            acc = theta_gen(g).mul(&acc);
        }
        out = &out + &acc.scale_right(f);
    }
    out
}

impl Add for &ZElement {
    type Output = ZElement;
    fn add(self, rhs: &ZElement) -> ZElement {
        let mut out = self.clone();
        for (m, f) in &rhs.terms {
            out.add_term(*m, f.clone());
        }
        out
    }
}

impl Sub for &ZElement {
    type Output = ZElement;
    fn sub(self, rhs: &ZElement) -> ZElement {
        let mut out = self.clone();
        for (m, f) in &rhs.terms {
            out.add_term(*m, -f);
        }
        out
    }
}

impl Neg for ZElement {
    type Output = ZElement;
    fn neg(self) -> ZElement {
        ZElement {
            terms: self.terms.into_iter().map(|(m, f)| (m, -f)).collect(),
        }
    }
}

impl Neg for &ZElement {
    type Output = ZElement;
    fn neg(self) -> ZElement {
        -self.clone()
    }
}

impl Add for ZElement {
    type Output = ZElement;
    fn add(self, rhs: ZElement) -> ZElement {
        &self + &rhs
    }
}

impl Sub for ZElement {
    type Output = ZElement;
    fn sub(self, rhs: ZElement) -> ZElement {
        &self - &rhs
    }
}

impl From<ZGen> for ZElement {
    fn from(g: ZGen) -> Self {
        Self::gen(g)
    }
}

impl From<RationalFunction> for ZElement {
    fn from(f: RationalFunction) -> Self {
        Self::scalar(f)
    }
}

impl fmt::Debug for ZElement {
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
