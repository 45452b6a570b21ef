//! PBW normal ordering of raw products.
//!
//! [`normal_order`] goes through the memoized multiplication in
//! [`UeaElement::mul`]. [`normal_order_with`] is an independent word
//! rewriter that fixes one misordered site at a time, chosen by a
//! [`SiteChooser`]; it exists so that confluence can be checked against
//! arbitrary reduction orders.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::element::UeaElement;
use super::generator::{bracket, swap_sign, Bracket, Generator};
use super::monomial::UeaMonomial;
use crate::coeff::{Rational, RationalFunction};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RawFactor {
    Gen(Generator),
    Coeff(RationalFunction),
}

/// A scalar times an unordered product of letters and coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawTerm {
    pub coeff: RationalFunction,
    pub factors: Vec<RawFactor>,
}

impl RawTerm {
    pub fn word(letters: &[Generator]) -> Self {
        Self {
            coeff: RationalFunction::one(),
            factors: letters.iter().copied().map(RawFactor::Gen).collect(),
        }
    }

    /// Moves every coefficient to the far left, returning the combined
    /// coefficient and the bare word of letters.
    pub fn split(&self) -> (RationalFunction, Vec<Generator>) {
        let mut coeff = self.coeff.clone();
        let mut shift = 0i64;
        let mut letters = Vec::new();
        for f in &self.factors {
            match f {
                RawFactor::Gen(g) => {
                    shift += g.root() as i64;
                    letters.push(*g);
                }
                RawFactor::Coeff(c) => coeff = &coeff * &c.shift(shift),
            }
        }
        (coeff, letters)
    }
}

/// Normal form of a sum of raw products.
pub fn normal_order(terms: &[RawTerm]) -> UeaElement {
    let mut out = UeaElement::zero();
    for t in terms {
        let (coeff, letters) = t.split();
        let mut acc = UeaElement::scalar(coeff);
        for g in letters {
            acc = acc.mul(&UeaElement::generator(g));
        }
        out = &out + &acc;
    }
    out
}

/// Picks which misordered site of a word to rewrite next.
pub trait SiteChooser {
    fn choose(&mut self, sites: usize) -> usize;
}

/// Always rewrites the leftmost violation.
#[derive(Debug, Default, Clone, Copy)]
pub struct Leftmost;

impl SiteChooser for Leftmost {
    fn choose(&mut self, _sites: usize) -> usize {
        0
    }
}

/// Always rewrites the rightmost violation.
#[derive(Debug, Default, Clone, Copy)]
pub struct Rightmost;

impl SiteChooser for Rightmost {
    fn choose(&mut self, sites: usize) -> usize {
        sites - 1
    }
}

/// Rewrites a uniformly random violation.
#[derive(Debug, Clone)]
pub struct RandomSites(StdRng);

impl RandomSites {
    pub fn new(seed: u64) -> Self {
        Self(StdRng::seed_from_u64(seed))
    }
}

impl SiteChooser for RandomSites {
    fn choose(&mut self, sites: usize) -> usize {
        self.0.gen_range(0..sites)
    }
}

fn root_shift(word: &[Generator]) -> i64 {
    word.iter().map(|g| g.root() as i64).sum()
}

fn violations(word: &[Generator]) -> Vec<usize> {
    word.windows(2)
        .enumerate()
        .filter(|(_, w)| {
            let (a, b) = (w[0].index(), w[1].index());
            a > b || (a == b && w[0].is_odd())
        })
        .map(|(p, _)| p)
        .collect()
}

/// Normal form of a sum of raw products, straightening one adjacent pair at a
/// time in the order picked by `chooser`.
pub fn normal_order_with(terms: &[RawTerm], chooser: &mut dyn SiteChooser) -> UeaElement {
    let mut work: Vec<(RationalFunction, Vec<Generator>)> = terms.iter().map(RawTerm::split).collect();
    let mut out = UeaElement::zero();
    while let Some((coeff, word)) = work.pop() {
        if coeff.is_zero() {
            continue;
        }
        let sites = violations(&word);
        if sites.is_empty() {
            let powers: Vec<(Generator, u16)> = word.iter().map(|&g| (g, 1)).collect();
            out.add_term(UeaMonomial::from_powers(&powers), coeff);
            continue;
        }
        let p = sites[chooser.choose(sites.len())];
        let (a, b) = (word[p], word[p + 1]);
        let prefix = &word[..p];
        let suffix = &word[p + 2..];
        let same = a == b;
        if !same {
            let mut swapped = word.clone();
            swapped.swap(p, p + 1);
            let sign = RationalFunction::from_int(swap_sign(a, b));
            work.push((&coeff * &sign, swapped));
        }
        let scale = if same {
            Rational::new(1.into(), 2.into())
        } else {
            Rational::from_integer(1.into())
        };
        match bracket(a, b) {
            Bracket::Zero => {}
            Bracket::Cartan(c) => {
                let h = RationalFunction::h().shift(root_shift(prefix));
                let c = RationalFunction::constant(c * scale);
                let mut w = prefix.to_vec();
                w.extend_from_slice(suffix);
                work.push((&coeff * &(h * c), w));
            }
            Bracket::Letter(c, g) => {
                let mut w = prefix.to_vec();
                w.push(g);
                w.extend_from_slice(suffix);
                work.push((&coeff * &RationalFunction::constant(c * scale), w));
            }
        }
    }
    out
}
