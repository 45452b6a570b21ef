use std::cmp::Ordering;
use std::fmt;

use crate::uea::{root_latex, Generator, UeaMonomial};

/// One of the five generators `E(k)` of the reduction algebra, `k` in
/// `-2..=2`; `E(k)` is the class of the tilde letter of root `k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZGen {
    root: i8,
}

impl ZGen {
    pub const ALL: [ZGen; 5] = [
        ZGen { root: -2 },
        ZGen { root: -1 },
        ZGen { root: 0 },
        ZGen { root: 1 },
        ZGen { root: 2 },
    ];

    pub fn new(root: i8) -> Self {
        assert!((-2..=2).contains(&root), "root {root} out of range");
        Self { root }
    }

    pub fn root(self) -> i8 {
        self.root
    }

    pub fn index(self) -> usize {
        (self.root + 2) as usize
    }

    pub fn from_index(i: usize) -> Self {
        Self::ALL[i]
    }

    pub fn is_odd(self) -> bool {
        self.root.abs() == 1
    }

    pub fn parity(self) -> u8 {
        self.is_odd() as u8
    }

    /// The tilde letter this generator is the class of.
    pub fn tilde(self) -> Generator {
        if self.root == 0 {
            Generator::th()
        } else {
            Generator::t(self.root)
        }
    }

    pub fn token(self) -> String {
        format!("E({})", self.root)
    }

    pub fn latex(self) -> String {
        if self.root == 0 {
            "\\bar{h}".to_string()
        } else {
            format!("\\bar{{x}}_{{{}}}", root_latex(self.root))
        }
    }
}

impl fmt::Display for ZGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

impl fmt::Debug for ZGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

/// An ordered diamond monomial `E(-2)^p <> E(-1)^q <> E(0)^r <> E(1)^s <>
/// E(2)^t` with `q, s <= 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ZMonomial {
    exps: [u16; 5],
}

impl ZMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_gen(g: ZGen) -> Self {
        let mut m = Self::one();
        m.exps[g.index()] = 1;
        m
    }

    /// Panics if `q` or `s` exceeds one.
    pub fn new(exps: [u16; 5]) -> Self {
        assert!(exps[1] <= 1 && exps[3] <= 1, "odd exponent above one in {exps:?}");
        Self { exps }
    }

    pub fn exponents(&self) -> &[u16; 5] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn parity(&self) -> u8 {
        ((self.exps[1] + self.exps[3]) % 2) as u8
    }

    pub fn root_sum(&self) -> i64 {
        self.powers().map(|(g, e)| g.root() as i64 * e as i64).sum()
    }

    pub fn weight(&self) -> i64 {
        -self.root_sum()
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

    pub fn powers(&self) -> impl Iterator<Item = (ZGen, u16)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (ZGen::from_index(i), e))
    }

    pub fn letters(&self) -> Vec<ZGen> {
        self.powers()
            .flat_map(|(g, e)| std::iter::repeat_n(g, e as usize))
            .collect()
    }

    /// The tilde monomial with the same exponents.
    pub fn tilde(&self) -> UeaMonomial {
        let powers: Vec<(Generator, u16)> = self.powers().map(|(g, e)| (g.tilde(), e)).collect();
        UeaMonomial::from_powers(&powers)
    }

    /// Inverse of [`ZMonomial::tilde`]; `None` unless `m` is pure tilde.
    pub fn from_tilde(m: &UeaMonomial) -> Option<Self> {
        if !m.is_pure_tilde() {
            return None;
        }
        let mut exps = [0u16; 5];
        for (g, e) in m.powers() {
            exps[(g.root() + 2) as usize] = e;
        }
        Some(Self { exps })
    }

    /// All monomials with `p, r, t <= even_max` and `q, s <= 1`.
    pub fn enumerate(even_max: u16) -> Vec<Self> {
        let mut out = Vec::new();
        for p in 0..=even_max {
            for q in 0..=1 {
                for r in 0..=even_max {
                    for s in 0..=1 {
                        for t in 0..=even_max {
                            out.push(Self { exps: [p, q, r, s, t] });
                        }
                    }
                }
            }
        }
        out
    }

    /// All monomials of total degree at most `max_degree`.
    pub fn up_to_degree(max_degree: u32) -> Vec<Self> {
        let mut out: Vec<Self> = Self::enumerate(max_degree as u16)
            .into_iter()
            .filter(|m| m.degree() <= max_degree)
            .collect();
        out.sort();
        out
    }
}

impl Ord for ZMonomial {
    /// Same shape as the tilde monomial order: higher degree first, then
    /// lexicographic on exponents.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for ZMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ZMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .powers()
            .map(|(g, e)| if e == 1 { g.token() } else { format!("{}^{e}", g.token()) })
            .collect();
        f.write_str(&parts.join(" <> "))
    }
}

impl fmt::Debug for ZMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}
