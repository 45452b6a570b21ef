//! Two-generator rewrite rules of `Z`.
//!
//! [`RelationCatalog::standard`] records the relations with their stated
//! coefficients. [`RelationCatalog::from_oracle`] regenerates the right-hand
//! sides from the projector; that is the catalog `z_multiply` straightens
//! with.

use super::convert::tilde_to_z;
use super::element::ZElement;
use super::monomial::{ZGen, ZMonomial};
use crate::coeff::RationalFunction;
use crate::projector::diamond;

/// `left.0 <> left.1 = right`, with `right` diamond ordered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub left: (ZGen, ZGen),
    pub right: ZElement,
}

impl Relation {
    /// `E(a) <> E(b)` as text.
    pub fn label(&self) -> String {
        format!("{} <> {}", self.left.0, self.left.1)
    }
}

/// The ten strictly misordered pairs and the two odd squares, in the order
/// they are listed in the presentation.
pub const PAIRS: [(i8, i8); 12] = [
    (2, 1),
    (1, 1),
    (-1, -1),
    (2, 0),
    (2, -1),
    (2, -2),
    (1, 0),
    (1, -1),
    (1, -2),
    (0, -1),
    (0, -2),
    (-1, -2),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCatalog {
    relations: Vec<Relation>,
}

fn g(k: i8) -> ZGen {
    ZGen::new(k)
}

fn mono(ks: &[i8]) -> ZMonomial {
    let mut exps = [0u16; 5];
    for &k in ks {
        exps[g(k).index()] += 1;
    }
    ZMonomial::new(exps)
}

fn build(terms: Vec<(RationalFunction, &[i8])>) -> ZElement {
    ZElement::from_terms(terms.into_iter().map(|(f, ks)| (mono(ks), f)))
}

impl RelationCatalog {
    /// The presentation with its coefficients as stated.
    pub fn standard() -> Self {
        let h = RationalFunction::h;
        let one = RationalFunction::one;
        let rhs = |a: i8, b: i8| -> ZElement {
            match (a, b) {
                (2, 1) => build(vec![(one() - 2 / (h() - 1), &[1, 2])]),
                (1, 1) => build(vec![(2 / h(), &[0, 2])]),
                (-1, -1) => build(vec![(-2 / (h() - 2), &[-2, 0])]),
                (2, 0) => build(vec![(one() - 2 / (h() + 1), &[0, 2])]),
                (2, -1) => build(vec![
                    (one() - 2 / (h() * (h() - 1)), &[-1, 2]),
                    (2 / (h() + 1), &[0, 1]),
                ]),
                (2, -2) => {
                    let num = h().pow(3) + h().pow(2) - 6 * h() + 4;
                    let den = (h() - 2) * (h() - 1) * h() * (h() + 1) * (h() + 2);
                    build(vec![
                        (one() + 2 * num / den, &[-2, 2]),
                        (-(h().pow(2) - h() - 1) / ((h() - 1) * h() * (h() + 1)), &[-1, 1]),
                        (1 / (h() + 1), &[0, 0]),
                        (-h().pow(2) / (h() + 1), &[]),
                    ])
                }
                (1, 0) => build(vec![(one() - 1 / h(), &[0, 1])]),
                (1, -1) => build(vec![
                    (-1 - 1 / (h() - 1), &[-1, 1]),
                    (4 * h() / ((h() - 1) * (h() - 2)), &[-2, 2]),
                    (-1 / h(), &[0, 0]),
                    (h(), &[]),
                ]),
                (1, -2) => build(vec![
                    (one() - 2 / ((h() - 1) * (h() - 2)), &[-2, 1]),
                    (-2 / h(), &[-1, 0]),
                ]),
                (0, -1) => build(vec![(one() - 1 / (h() - 1), &[-1, 0])]),
                (0, -2) => build(vec![(one() - 2 / (h() - 1), &[-2, 0])]),
                (-1, -2) => build(vec![(one() - 2 / (h() - 4), &[-2, -1])]),
                _ => unreachable!(),
            }
        };
        Self {
            relations: PAIRS
                .iter()
                .map(|&(a, b)| Relation {
                    left: (g(a), g(b)),
                    right: rhs(a, b),
                })
                .collect(),
        }
    }

    /// Right-hand sides recomputed as `tilde_to_z(diamond(a, b))`.
    pub fn from_oracle() -> Self {
        Self {
            relations: PAIRS
                .iter()
                .map(|&(a, b)| Relation {
                    left: (g(a), g(b)),
                    right: tilde_to_z(&diamond(&g(a).tilde().into(), &g(b).tilde().into())),
                })
                .collect(),
        }
    }

    pub fn from_relations(relations: Vec<Relation>) -> Self {
        Self { relations }
    }

    /// A copy with the rule for `rel.left` replaced by `rel`.
    pub fn with_relation(&self, rel: Relation) -> Self {
        let mut out = self.clone();
        match out.relations.iter_mut().find(|r| r.left == rel.left) {
            Some(slot) => *slot = rel,
            None => out.relations.push(rel),
        }
        out
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn rule(&self, a: ZGen, b: ZGen) -> Option<&ZElement> {
        self.relations
            .iter()
            .find(|r| r.left == (a, b))
            .map(|r| &r.right)
    }

    /// The catalog as the body of a LaTeX `align` environment.
    pub fn to_latex(&self) -> String {
        let rows: Vec<String> = self
            .relations
            .iter()
            .map(|r| {
                format!(
                    "{} \\diamond {} &= {}",
                    r.left.0.latex(),
                    r.left.1.latex(),
                    crate::cli_io::z_latex(&r.right)
                )
            })
            .collect();
        rows.join(" \\\\\n")
    }
}
