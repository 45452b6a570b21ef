//! Word-level straightening in `Z`, one misordered site at a time.

use super::catalog::RelationCatalog;
use super::element::ZElement;
use super::monomial::{ZGen, ZMonomial};
use crate::coeff::RationalFunction;
use crate::uea::SiteChooser;

/// A coefficient on the left of an unordered diamond word.
pub type ZWord = (RationalFunction, Vec<ZGen>);

fn violations(word: &[ZGen]) -> Vec<usize> {
    word.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1] || (w[0] == w[1] && w[0].is_odd()))
        .map(|(p, _)| p)
        .collect()
}

/// Straightens a sum of words using `catalog`, rewriting the site picked by
/// `chooser` each step.
pub fn straighten_with(
    words: &[ZWord],
    catalog: &RelationCatalog,
    chooser: &mut dyn SiteChooser,
) -> ZElement {
    let mut work: Vec<ZWord> = words.to_vec();
    let mut out = ZElement::zero();
    while let Some((coeff, word)) = work.pop() {
        if coeff.is_zero() {
            continue;
        }
        let sites = violations(&word);
        if sites.is_empty() {
            let mut exps = [0u16; 5];
            for g in &word {
                exps[g.index()] += 1;
            }
            out.add_term(ZMonomial::new(exps), coeff);
            continue;
        }
        let p = sites[chooser.choose(sites.len())];
        let rule = catalog
            .rule(word[p], word[p + 1])
            .expect("every misordered pair has a rule");
        let shift: i64 = word[..p].iter().map(|g| g.root() as i64).sum();
        for (m, f) in rule.iter() {
            let mut w = word[..p].to_vec();
            w.extend(m.letters());
            w.extend_from_slice(&word[p + 2..]);
            work.push((&coeff * &f.shift(shift), w));
        }
    }
    out
}
