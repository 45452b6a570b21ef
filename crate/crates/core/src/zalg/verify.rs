use std::thread;

use super::catalog::{Relation, RelationCatalog};
use super::convert::{tilde_to_z, triangularity_defect, z_monomial_to_tilde, z_oracle_multiply, z_to_tilde};
use super::element::{z_multiply, z_theta, ZElement};
use super::monomial::{ZGen, ZMonomial};
use crate::coeff::RationalFunction;
use crate::projector::diamond;
use crate::uea::UeaElement;

/// Outcome of checking one relation family against the projector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub label: String,
    /// Right-hand side as stated, for the pair families.
    pub stated: Option<ZElement>,
    /// Right-hand side recomputed from the projector.
    pub discovered: Option<ZElement>,
    /// Tilde normal form of `lhs - stated rhs`.
    pub residual: UeaElement,
}

impl RelationCheck {
    pub fn passed(&self) -> bool {
        self.residual.is_zero()
    }
}

#[derive(Clone, Debug, Default)]
pub struct PresentationReport {
    pub max_exponent: u16,
    pub relations: Vec<RelationCheck>,
    pub pairs_checked: usize,
    pub pair_mismatches: Vec<(ZMonomial, ZMonomial)>,
    pub triangular_checked: usize,
    pub triangular_defects: Vec<String>,
}

impl PresentationReport {
    pub fn relations_passed(&self) -> bool {
        self.relations.iter().all(RelationCheck::passed)
    }

    pub fn passed(&self) -> bool {
        self.relations_passed() && self.pair_mismatches.is_empty() && self.triangular_defects.is_empty()
    }
}

fn sample_coefficients() -> Vec<RationalFunction> {
    let h = RationalFunction::h;
    vec![
        1 / (h() - 3),
        h().pow(2) - 2,
        (h() + 5) / (h() * (h() - 7)),
    ]
}

/// Coefficients commute with each other under the diamond product.
pub fn check_cartan_family() -> RelationCheck {
    let fs = sample_coefficients();
    let mut residual = UeaElement::zero();
    for f in &fs {
        for g in &fs {
            let (fu, gu) = (UeaElement::scalar(f.clone()), UeaElement::scalar(g.clone()));
            residual = &residual + &(&diamond(&fu, &gu) - &diamond(&gu, &fu));
        }
    }
    RelationCheck {
        label: "f(H) <> g(H) = g(H) <> f(H)".into(),
        stated: None,
        discovered: None,
        residual,
    }
}

/// `E(k) <> f(H) = f(H + k) <> E(k)` for every root `k != 0`.
pub fn check_shift_family() -> RelationCheck {
    let mut residual = UeaElement::zero();
    for k in [-2i8, -1, 1, 2] {
        let t: UeaElement = ZGen::new(k).tilde().into();
        for f in sample_coefficients() {
            let lhs = diamond(&t, &UeaElement::scalar(f.clone()));
            let rhs = diamond(&UeaElement::scalar(f.shift(k as i64)), &t);
            residual = &residual + &(&lhs - &rhs);
        }
    }
    RelationCheck {
        label: "E(k) <> f(H) = f(H+k) <> E(k)".into(),
        stated: None,
        discovered: None,
        residual,
    }
}

/// Checks one stated pair relation against the projector.
pub fn check_relation(rel: &Relation) -> RelationCheck {
    let (a, b) = rel.left;
    let lhs = diamond(&a.tilde().into(), &b.tilde().into());
    RelationCheck {
        label: rel.label(),
        stated: Some(rel.right.clone()),
        discovered: Some(tilde_to_z(&lhs)),
        residual: &lhs - &z_to_tilde(&rel.right),
    }
}

/// The two coefficient families followed by the twelve pair relations.
pub fn check_relations(catalog: &RelationCatalog) -> Vec<RelationCheck> {
    let mut out = vec![check_cartan_family(), check_shift_family()];
    out.extend(catalog.relations().iter().map(check_relation));
    out
}

/// The image of `a <> b = r` under the anti-automorphism, rewritten as
/// `a' <> b' = r'` with `a' = E(-b)`, `b' = E(-a)`.
pub fn theta_relation(rel: &Relation) -> Relation {
    let (a, b) = rel.left;
    let sign = |g: ZGen| if g.root().abs() == 2 { -1 } else { 1 };
    let s = RationalFunction::from_int(sign(a) * sign(b));
    Relation {
        left: (ZGen::new(-b.root()), ZGen::new(-a.root())),
        right: z_theta(&rel.right).scale(&s),
    }
}

fn workers() -> usize {
    thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

/// Pairs `(m1, m2)` from `monomials` on which `z_multiply` and the oracle
/// disagree. Work is split across threads.
pub fn oracle_mismatches(monomials: &[ZMonomial]) -> Vec<(ZMonomial, ZMonomial)> {
    let pairs: Vec<(ZMonomial, ZMonomial)> = monomials
        .iter()
        .flat_map(|&a| monomials.iter().map(move |&b| (a, b)))
        .collect();
    // warm the shared expansion cache so threads mostly read
    for m in monomials {
        z_monomial_to_tilde(m);
    }
    let chunk = pairs.len().div_ceil(workers()).max(1);
    thread::scope(|s| {
        let handles: Vec<_> = pairs
            .chunks(chunk)
            .map(|part| {
                s.spawn(move || {
                    part.iter()
                        .filter(|(a, b)| {
                            let (u, v) = (ZElement::monomial(*a), ZElement::monomial(*b));
                            z_multiply(&u, &v) != z_oracle_multiply(&u, &v)
                        })
                        .copied()
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().unwrap()).collect()
    })
}

/// Triangularity and round-trip failures among monomials up to `max_degree`.
pub fn triangularity_defects(max_degree: u32) -> (usize, Vec<String>) {
    let monomials = ZMonomial::up_to_degree(max_degree);
    let mut defects = Vec::new();
    for m in &monomials {
        if let Some(d) = triangularity_defect(m) {
            defects.push(d);
            continue;
        }
        let tilde = z_monomial_to_tilde(m);
        if tilde_to_z(&tilde) != ZElement::monomial(*m) {
            defects.push(format!("{m} does not round trip from tilde"));
        }
        let twin = UeaElement::monomial(m.tilde());
        if z_to_tilde(&tilde_to_z(&twin)) != twin {
            defects.push(format!("tilde twin of {m} does not round trip"));
        }
    }
    (monomials.len(), defects)
}

/// Relations, oracle agreement on ordered pairs with `p, r, t <=
/// max_exponent`, and triangularity up to degree `2 * max_exponent`.
pub fn verify_presentation(max_exponent: u16) -> PresentationReport {
    assert!(max_exponent >= 1, "max_exponent must be at least 1");
    let monomials = ZMonomial::enumerate(max_exponent);
    let (triangular_checked, triangular_defects) = triangularity_defects(2 * max_exponent as u32);
    PresentationReport {
        max_exponent,
        relations: check_relations(&RelationCatalog::standard()),
        pairs_checked: monomials.len() * monomials.len(),
        pair_mismatches: oracle_mismatches(&monomials),
        triangular_checked,
        triangular_defects,
    }
}
