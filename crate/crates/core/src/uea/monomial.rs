use std::cmp::Ordering;
use std::fmt;

use super::generator::Generator;

pub(crate) const X_MINUS2: usize = 0;
pub(crate) const X_MINUS1: usize = 1;
pub(crate) const X_PLUS1: usize = 7;
pub(crate) const X_PLUS2: usize = 8;

/// A PBW-ordered monomial `X(-2)^a X(-1)^b t(-2)^p t(-1)^q th^r t(1)^s
/// t(2)^t X(1)^d X(2)^e`, stored as an exponent per letter.
///
/// Odd letters have exponent at most one.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct UeaMonomial {
    exps: [u16; 9],
}

impl UeaMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_generator(g: Generator) -> Self {
        let mut m = Self::one();
        m.exps[g.index()] = 1;
        m
    }

    /// Panics if an odd letter gets an exponent above one.
    pub fn from_exponents(exps: [u16; 9]) -> Self {
        for (i, &e) in exps.iter().enumerate() {
            assert!(
                e <= 1 || !Generator::from_index(i).is_odd(),
                "odd letter {} with exponent {e}",
                Generator::from_index(i)
            );
        }
        Self { exps }
    }

    /// Builds a monomial from `(letter, exponent)` pairs in any order.
    pub fn from_powers(powers: &[(Generator, u16)]) -> Self {
        let mut exps = [0u16; 9];
        for &(g, e) in powers {
            exps[g.index()] += e;
        }
        Self::from_exponents(exps)
    }

    pub fn exponents(&self) -> &[u16; 9] {
        &self.exps
    }

    pub fn exponent(&self, g: Generator) -> u16 {
        self.exps[g.index()]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn parity(&self) -> u8 {
        self.powers()
            .filter(|(g, _)| g.is_odd())
            .map(|(_, e)| e as u8)
            .sum::<u8>()
            % 2
    }

    /// Sum of root indices; moving a coefficient `f(H)` from the right of
    /// this monomial to its left turns it into `f(H + root_sum)`.
    pub fn root_sum(&self) -> i64 {
        self.powers().map(|(g, e)| g.root() as i64 * e as i64).sum()
    }

    /// Eigenvalue shift of `H`: a letter of root `k` has weight `-k`.
    pub fn weight(&self) -> i64 {
        -self.root_sum()
    }

    pub fn is_pure_tilde(&self) -> bool {
        [X_MINUS2, X_MINUS1, X_PLUS1, X_PLUS2]
            .iter()
            .all(|&i| self.exps[i] == 0)
    }

    pub(crate) fn first_index(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e > 0)
    }

    pub(crate) fn with_incremented(mut self, i: usize) -> Self {
        self.exps[i] += 1;
        self
    }

    pub(crate) fn with_decremented(mut self, i: usize) -> Self {
        self.exps[i] -= 1;
        self
    }

    /// `(letter, exponent)` pairs with positive exponent, in PBW order.
    pub fn powers(&self) -> impl Iterator<Item = (Generator, u16)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (Generator::from_index(i), e))
    }

    /// Letters with multiplicity, in PBW order.
    pub fn letters(&self) -> Vec<Generator> {
        self.powers()
            .flat_map(|(g, e)| std::iter::repeat_n(g, e as usize))
            .collect()
    }
}

impl Ord for UeaMonomial {
    /// Higher degree first; within a degree, lexicographic on the exponent
    /// vector. For tilde monomials the first element of a diamond expansion
    /// is its leading term.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for UeaMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for UeaMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .powers()
            .map(|(g, e)| {
                if e == 1 {
                    g.token()
                } else {
                    format!("{}^{e}", g.token())
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for UeaMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}
