use std::fmt;

use crate::coeff::{rational, Rational};

/// Which copy of osp(1|2) inside osp(1|2) x osp(1|2) a root vector lives in:
/// the diagonal `x -> (x, x)` or the anti-diagonal complement `x -> (x, -x)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Kind {
    Diagonal,
    Tilde,
}

/// One of the nine PBW letters of the localized enveloping algebra.
///
/// The diagonal Cartan element `H` is not a letter: it lives in the
/// coefficient ring. The anti-diagonal Cartan element is `Generator::th()`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    kind: Kind,
    root: i8,
}

/// PBW order of the letters, lowest first.
pub const PBW_ORDER: [Generator; 9] = [
    Generator::x_unchecked(-2),
    Generator::x_unchecked(-1),
    Generator::t_unchecked(-2),
    Generator::t_unchecked(-1),
    Generator::t_unchecked(0),
    Generator::t_unchecked(1),
    Generator::t_unchecked(2),
    Generator::x_unchecked(1),
    Generator::x_unchecked(2),
];

pub const ROOTS: [i8; 5] = [-2, -1, 0, 1, 2];

impl Generator {
    const fn x_unchecked(root: i8) -> Self {
        Self {
            kind: Kind::Diagonal,
            root,
        }
    }

    const fn t_unchecked(root: i8) -> Self {
        Self {
            kind: Kind::Tilde,
            root,
        }
    }

    /// Diagonal root vector `X(k)`, `k` in `{-2, -1, 1, 2}`.
    pub fn x(root: i8) -> Self {
        assert!(matches!(root, -2 | -1 | 1 | 2), "no diagonal letter X({root})");
        Self::x_unchecked(root)
    }

    /// Anti-diagonal generator `t(k)`, `k` in `{-2, ..., 2}`; `t(0)` is `th`.
    pub fn t(root: i8) -> Self {
        assert!((-2..=2).contains(&root), "no tilde letter t({root})");
        Self::t_unchecked(root)
    }

    pub fn th() -> Self {
        Self::t_unchecked(0)
    }

    pub fn kind(self) -> Kind {
        self.kind
    }

    pub fn root(self) -> i8 {
        self.root
    }

    pub fn is_odd(self) -> bool {
        self.root.abs() == 1
    }

    pub fn parity(self) -> u8 {
        self.is_odd() as u8
    }

    pub fn is_tilde(self) -> bool {
        self.kind == Kind::Tilde
    }

    /// Position in the PBW order.
    pub fn index(self) -> usize {
        match (self.kind, self.root) {
            (Kind::Diagonal, -2) => 0,
            (Kind::Diagonal, -1) => 1,
            (Kind::Tilde, k) => (k + 4) as usize,
            (Kind::Diagonal, 1) => 7,
            (Kind::Diagonal, 2) => 8,
            _ => unreachable!("invalid generator"),
        }
    }

    pub fn from_index(i: usize) -> Self {
        PBW_ORDER[i]
    }

    /// Bit-exact text token: `X(-2)`, `t(1)`, `th`.
    pub fn token(self) -> String {
        match (self.kind, self.root) {
            (Kind::Tilde, 0) => "th".to_string(),
            (Kind::Tilde, k) => format!("t({k})"),
            (Kind::Diagonal, k) => format!("X({k})"),
        }
    }

    pub fn latex(self) -> String {
        let root = root_latex(self.root);
        match (self.kind, self.root) {
            (Kind::Tilde, 0) => "\\tilde{h}".to_string(),
            (Kind::Tilde, _) => format!("\\tilde{{x}}_{{{root}}}"),
            (Kind::Diagonal, _) => format!("X_{{{root}}}"),
        }
    }
}

pub(crate) fn root_latex(k: i8) -> &'static str {
    match k {
        -2 => "-2\\alpha",
        -1 => "-\\alpha",
        0 => "0",
        1 => "\\alpha",
        2 => "2\\alpha",
        _ => unreachable!(),
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

/// Super bracket `[x_a, x_b] = c * x_(a+b)` in osp(1|2), where `x_0 = h`.
/// Returns `None` when the bracket vanishes.
pub fn osp_bracket(a: i8, b: i8) -> Option<Rational> {
    if (a + b).abs() > 2 {
        return None;
    }
    let direct = match (a, b) {
        (0, k) => Some(if k == 0 { None } else { Some(rational(-k as i64, 1)) }),
        (1, 1) => Some(Some(rational(-2, 1))),
        (-1, -1) => Some(Some(rational(2, 1))),
        (1, -2) => Some(Some(rational(1, 1))),
        (-1, 2) => Some(Some(rational(1, 1))),
        (1, -1) => Some(Some(rational(1, 1))),
        (-2, 2) => Some(Some(rational(1, 1))),
        (1, 2) | (-1, -2) | (2, 2) | (-2, -2) => Some(None),
        _ => None,
    };
    match direct {
        Some(c) => c,
        None => {
            // [b, a] = -(-1)^{|a||b|} [a, b]
            let c = osp_bracket(b, a)?;
            let both_odd = a.abs() == 1 && b.abs() == 1;
            Some(if both_odd { c } else { -c })
        }
    }
}

/// Result of bracketing two letters in the big superalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bracket {
    Zero,
    /// `c * H`, landing in the coefficient ring.
    Cartan(Rational),
    /// `c * g` for a single letter `g`.
    Letter(Rational, Generator),
}

/// `[a, b]` in osp(1|2) x osp(1|2): brackets of two diagonal or two
/// anti-diagonal letters are diagonal, mixed brackets are anti-diagonal.
pub fn bracket(a: Generator, b: Generator) -> Bracket {
    let Some(c) = osp_bracket(a.root, b.root) else {
        return Bracket::Zero;
    };
    let kind = if a.kind == b.kind {
        Kind::Diagonal
    } else {
        Kind::Tilde
    };
    let root = a.root + b.root;
    match (kind, root) {
        (Kind::Diagonal, 0) => Bracket::Cartan(c),
        (kind, root) => Bracket::Letter(c, Generator { kind, root }),
    }
}

/// `(-1)^{|a||b|}`.
pub fn swap_sign(a: Generator, b: Generator) -> i64 {
    if a.is_odd() && b.is_odd() {
        -1
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pbw_indices_round_trip() {
        for (i, g) in PBW_ORDER.iter().enumerate() {
            assert_eq!(g.index(), i);
            assert_eq!(Generator::from_index(i), *g);
        }
    }

    #[test]
    fn osp_table_matches_defining_relations() {
        let q = |n| Some(rational(n, 1));
        assert_eq!(osp_bracket(0, 2), q(-2));
        assert_eq!(osp_bracket(0, -1), q(1));
        assert_eq!(osp_bracket(1, 1), q(-2));
        assert_eq!(osp_bracket(-1, -1), q(2));
        assert_eq!(osp_bracket(1, -2), q(1));
        assert_eq!(osp_bracket(-1, 2), q(1));
        assert_eq!(osp_bracket(1, -1), q(1));
        assert_eq!(osp_bracket(-2, 2), q(1));
        assert_eq!(osp_bracket(1, 2), None);
        assert_eq!(osp_bracket(-1, -2), None);
        // derived by antisupersymmetry
        assert_eq!(osp_bracket(2, -1), q(-1));
        assert_eq!(osp_bracket(-1, 1), q(1));
        assert_eq!(osp_bracket(2, -2), q(-1));
        assert_eq!(osp_bracket(1, 0), q(1));
    }

    #[test]
    fn mixed_copy_rules() {
        assert_eq!(
            bracket(Generator::x(1), Generator::x(-1)),
            Bracket::Cartan(rational(1, 1))
        );
        assert_eq!(
            bracket(Generator::t(1), Generator::t(1)),
            Bracket::Letter(rational(-2, 1), Generator::x(2))
        );
        assert_eq!(
            bracket(Generator::x(1), Generator::t(-2)),
            Bracket::Letter(rational(1, 1), Generator::t(-1))
        );
        assert_eq!(
            bracket(Generator::x(1), Generator::t(-1)),
            Bracket::Letter(rational(1, 1), Generator::th())
        );
        assert_eq!(
            bracket(Generator::t(2), Generator::t(-2)),
            Bracket::Cartan(rational(-1, 1))
        );
    }
}
