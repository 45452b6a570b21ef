//! Verification suites behind `ospz verify`.

use std::path::Path;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use super::render::{uea_text, z_text};
use crate::coeff::{QuadExt, Rational, RationalFunction};
use crate::projector::{diamond, kappa, kappa_from_bracket, phi, projected_generator, verify_projector_recursion};
use crate::rep::{
    check_rep_relations, example_basis, example_module, example_rho, example_rho_full, example_top,
    irrep_bracket_defects, is_irreducible, poly_bracket_defects, same_span, IrrepData, Matrix, RhoMatrices,
};
use crate::uea::{
    normal_order, normal_order_with, reduce_mod_ii, super_bracket, swap_sign, Generator, Leftmost, RandomSites,
    RawFactor, RawTerm, UeaElement, PBW_ORDER,
};
use crate::zalg::{
    check_relations, oracle_mismatches, tilde_to_z, theta_relation, triangularity_defects, z_multiply, z_theta,
    z_to_tilde, RelationCatalog, ZElement, ZGen, ZMonomial,
};

pub const REPORT_SCHEMA: &str = "ospz-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Projector,
    Lemmas,
    Relations,
    Presentation,
    Pbw,
    Rep,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Projector,
        Suite::Lemmas,
        Suite::Relations,
        Suite::Presentation,
        Suite::Pbw,
        Suite::Rep,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Projector => "projector",
            Suite::Lemmas => "lemmas",
            Suite::Relations => "relations",
            Suite::Presentation => "presentation",
            Suite::Pbw => "pbw",
            Suite::Rep => "rep",
            Suite::All => "all",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteOptions {
    /// Bound for the projector identities.
    pub n: usize,
    /// Exponent bound of the presentation sweep.
    pub max_exp: u16,
    /// Total degree bound of the PBW checks.
    pub degree: u32,
    /// Polynomial truncation of the representation.
    pub trunc: u32,
    /// First seed of the randomized checks.
    pub seed: u64,
    /// Number of seeds of the randomized checks.
    pub seeds: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            n: 10,
            max_exp: 1,
            degree: 4,
            trunc: 8,
            seed: 0,
            seeds: 100,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub actual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckRecord {
    fn new(name: impl Into<String>, passed: bool) -> Self {
        Self {
            name: name.into(),
            passed,
            expected: None,
            actual: None,
            detail: None,
        }
    }

    /// Compares two renderings; on failure both are kept.
    fn compare(name: impl Into<String>, expected: String, actual: String) -> Self {
        let passed = expected == actual;
        let mut c = Self::new(name, passed);
        if !passed {
            c.expected = Some(expected);
            c.actual = Some(actual);
        }
        c
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub schema: &'static str,
    pub suite: &'static str,
    pub options: SuiteOptions,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<CheckRecord>,
}

impl SuiteReport {
    fn new(suite: Suite, options: &SuiteOptions, checks: Vec<CheckRecord>) -> Self {
        let passed = checks.iter().filter(|c| c.passed).count();
        Self {
            schema: REPORT_SCHEMA,
            suite: suite.name(),
            options: options.clone(),
            passed,
            failed: checks.len() - passed,
            checks,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("[{}] {}\n", if c.passed { "pass" } else { "FAIL" }, c.name));
            if let Some(d) = &c.detail {
                out.push_str(&format!("       {d}\n"));
            }
            if let (Some(e), Some(a)) = (&c.expected, &c.actual) {
                out.push_str(&format!("       expected: {e}\n       actual:   {a}\n"));
            }
        }
        out.push_str(&format!(
            "{}: {}/{} passed\n",
            self.suite,
            self.passed,
            self.passed + self.failed
        ));
        out
    }
}

pub fn run_suite(suite: Suite, options: &SuiteOptions) -> SuiteReport {
    let checks = match suite {
        Suite::Projector => projector_checks(options),
        Suite::Lemmas => lemma_checks(),
        Suite::Relations => relation_checks(),
        Suite::Presentation => presentation_checks(options),
        Suite::Pbw => pbw_checks(options),
        Suite::Rep => rep_checks(options),
        Suite::All => Suite::EACH
            .iter()
            .flat_map(|&s| {
                run_suite(s, options).checks.into_iter().map(move |mut c| {
                    c.name = format!("{}: {}", s.name(), c.name);
                    c
                })
            })
            .collect(),
    };
    SuiteReport::new(suite, options, checks)
}

/// Compares `actual` with the golden file at `path`, or rewrites the file
/// when `UPDATE_GOLDEN=1`.
pub fn check_golden(path: &Path, actual: &str) -> Result<(), String> {
    if std::env::var("UPDATE_GOLDEN").as_deref() == Ok("1") {
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir).map_err(|e| e.to_string())?;
        }
        return std::fs::write(path, actual).map_err(|e| e.to_string());
    }
    let expected = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected == actual {
        Ok(())
    } else {
        Err(format!("{} differs from the golden copy", path.display()))
    }
}

fn h() -> RationalFunction {
    RationalFunction::h()
}

fn c(n: i64) -> RationalFunction {
    RationalFunction::from_int(n)
}

fn tilde(k: i8) -> Generator {
    if k == 0 {
        Generator::th()
    } else {
        Generator::t(k)
    }
}

fn word(letters: &[Generator]) -> UeaElement {
    normal_order(&[RawTerm::word(letters)])
}

fn tw(ks: &[i8]) -> UeaElement {
    word(&ks.iter().map(|&k| tilde(k)).collect::<Vec<_>>())
}

fn sum_u(items: Vec<UeaElement>) -> UeaElement {
    items.iter().fold(UeaElement::zero(), |a, b| a + b.clone())
}

fn ze(ks: &[i8]) -> ZElement {
    ks.iter().fold(ZElement::one(), |acc, &k| acc.mul(&ZGen::new(k).into()))
}

fn sum_z(items: Vec<ZElement>) -> ZElement {
    items.iter().fold(ZElement::zero(), |a, b| &a + b)
}

fn projector_checks(o: &SuiteOptions) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let p3 = 1 / ((h() - 2) * (h() - 1));
    let printed = [c(1), -1 / (h() - 1), -1 / (h() - 1), p3.clone(), p3 * RationalFunction::from_frac(1, 2)];
    for (n, f) in printed.iter().enumerate() {
        out.push(CheckRecord::compare(format!("phi_{n}"), f.to_string(), phi(n).to_string()));
    }
    for n in 0..=o.n {
        out.push(CheckRecord::compare(
            format!("kappa_{n} against [X(1), X(-1)^{n}]"),
            kappa(n).to_string(),
            kappa_from_bracket(n).to_string(),
        ));
    }
    for r in verify_projector_recursion(o.n) {
        out.push(CheckRecord::compare(
            format!("recursion n = {}", r.n),
            "0".into(),
            r.residual.to_string(),
        ));
    }
    out.extend(bracket_table_checks());
    out.extend(projected_generator_checks());
    out
}

/// Iterated brackets `[X(1), .]^j` and `[., X(-1)]^j` of each osp(1|2)
/// basis element, `h` written as the coefficient `H`.
fn bracket_table_checks() -> Vec<CheckRecord> {
    let elem = |coef: i64, root: i8| -> UeaElement {
        if root == 0 {
            UeaElement::scalar(c(coef) * h())
        } else {
            UeaElement::generator(Generator::x(root)).scale(&c(coef))
        }
    };
    // (centre root, right chain, left chain); (0, _) marks a vanishing entry
    type Chain = &'static [(i64, i8)];
    let rows: [(i8, Chain, Chain); 5] = [
        (-2, &[(1, -1), (1, 0), (1, 1), (-2, 2), (0, 0)], &[(0, 0)]),
        (-1, &[(1, 0), (1, 1), (-2, 2), (0, 0)], &[(2, -2), (0, 0)]),
        (0, &[(1, 1), (-2, 2), (0, 0)], &[(1, -1), (2, -2), (0, 0)]),
        (1, &[(-2, 2), (0, 0)], &[(1, 0), (1, -1), (2, -2), (0, 0)]),
        (2, &[(0, 0)], &[(-1, 1), (-1, 0), (-1, -1), (-2, -2), (0, 0)]),
    ];
    let raise = UeaElement::generator(Generator::x(1));
    let lower = UeaElement::generator(Generator::x(-1));
    let mut out = Vec::new();
    for (centre, right, left) in rows {
        let mut cur = elem(1, centre);
        let mut got = Vec::new();
        let mut want = Vec::new();
        for &(k, r) in right {
            cur = super_bracket(&raise, &cur).expect("homogeneous");
            got.push(uea_text(&cur));
            want.push(uea_text(&elem(k, r)));
        }
        let mut cur = elem(1, centre);
        for &(k, r) in left {
            cur = super_bracket(&cur, &lower).expect("homogeneous");
            got.push(uea_text(&cur));
            want.push(uea_text(&elem(k, r)));
        }
        let name = format!("bracket table row x({centre})");
        out.push(CheckRecord::compare(name, want.join(", "), got.join(", ")));
    }
    out
}

fn xm_times(n: usize, k: i8, coeff: RationalFunction) -> UeaElement {
    let mut letters = vec![Generator::x(-1); n];
    letters.push(tilde(k));
    word(&letters).scale(&coeff)
}

fn projected_generator_checks() -> Vec<CheckRecord> {
    let expected = [
        (2, sum_u(vec![tw(&[2])])),
        (1, sum_u(vec![tw(&[1]), xm_times(1, 2, -2 * phi(1))])),
        (0, sum_u(vec![tw(&[0]), xm_times(1, 1, phi(1)), xm_times(2, 2, -2 * phi(2))])),
        (
            -1,
            sum_u(vec![
                tw(&[-1]),
                xm_times(1, 0, phi(1)),
                xm_times(2, 1, phi(2)),
                xm_times(3, 2, -2 * phi(3)),
            ]),
        ),
        (
            -2,
            sum_u(vec![
                tw(&[-2]),
                xm_times(1, -1, phi(1)),
                xm_times(2, 0, phi(2)),
                xm_times(3, 1, phi(3)),
                xm_times(4, 2, -2 * phi(4)),
            ]),
        ),
    ];
    expected
        .into_iter()
        .map(|(k, e)| {
            CheckRecord::compare(
                format!("P {} mod I", tilde(k)),
                uea_text(&e),
                uea_text(&projected_generator(tilde(k))),
            )
        })
        .collect()
}

fn lemma_checks() -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let p1 = phi(1);
    let p1m = p1.shift(-1);
    let p1p = p1.shift(1);
    let g = |k: i8| -> UeaElement { tilde(k).into() };

    let mut any2 = (Vec::new(), Vec::new());
    let mut two_any = (Vec::new(), Vec::new());
    for k in -2..=2 {
        any2.0.push(uea_text(&reduce_mod_ii(&tw(&[k, 2]))));
        any2.1.push(uea_text(&diamond(&g(k), &g(2))));
        two_any.0.push(uea_text(&reduce_mod_ii(&tw(&[-2, k]))));
        two_any.1.push(uea_text(&diamond(&g(-2), &g(k))));
    }
    out.push(CheckRecord::compare("product y <> E(2)", any2.0.join("; "), any2.1.join("; ")));
    out.push(CheckRecord::compare("product E(-2) <> y", two_any.0.join("; "), two_any.1.join("; ")));

    let products: [(i8, i8, Vec<UeaElement>); 6] = [
        (1, 1, vec![tw(&[1, 1]), tw(&[0, 2]).scale(&(-2 * p1p.clone()))]),
        (0, 1, vec![tw(&[0, 1]), tw(&[-1, 2]).scale(&(-2 * p1.clone()))]),
        (-1, 1, vec![tw(&[-1, 1]), tw(&[-2, 2]).scale(&(-4 * p1m.clone()))]),
        (
            0,
            0,
            vec![tw(&[0, 0]), tw(&[-1, 1]).scale(&p1), tw(&[-2, 2]).scale(&(-4 * phi(2)))],
        ),
        (-1, 0, vec![tw(&[-1, 0]), tw(&[-2, 1]).scale(&(2 * p1m.clone()))]),
        (-1, -1, vec![tw(&[-1, -1]), tw(&[-2, 0]).scale(&(2 * p1m.clone()))]),
    ];
    for (a, b, terms) in products {
        out.push(CheckRecord::compare(
            format!("product E({a}) <> E({b})"),
            uea_text(&reduce_mod_ii(&sum_u(terms))),
            uea_text(&diamond(&g(a), &g(b))),
        ));
    }

    let mut any2 = (Vec::new(), Vec::new());
    let mut two_any = (Vec::new(), Vec::new());
    for k in -2..=2 {
        any2.0.push(z_text(&ze(&[k, 2])));
        any2.1.push(z_text(&tilde_to_z(&tw(&[k, 2]))));
        two_any.0.push(z_text(&ze(&[-2, k])));
        two_any.1.push(z_text(&tilde_to_z(&tw(&[-2, k]))));
    }
    out.push(CheckRecord::compare("inversion y t(2)", any2.0.join("; "), any2.1.join("; ")));
    out.push(CheckRecord::compare("inversion t(-2) y", two_any.0.join("; "), two_any.1.join("; ")));

    let zt = |f: RationalFunction, ks: &[i8]| ze(ks).scale(&f);
    let inversions: [(&[i8], Vec<ZElement>); 6] = [
        (&[1, 1], vec![ze(&[1, 1]), zt(2 * p1p.clone(), &[0, 2])]),
        (&[0, 1], vec![ze(&[0, 1]), zt(2 * p1.clone(), &[-1, 2])]),
        (&[-1, 1], vec![ze(&[-1, 1]), zt(4 * p1m.clone(), &[-2, 2])]),
        (
            &[0, 0],
            vec![
                ze(&[0, 0]),
                zt(-p1.clone(), &[-1, 1]),
                zt(4 * (phi(2) - &p1 * &p1m), &[-2, 2]),
            ],
        ),
        (&[-1, 0], vec![ze(&[-1, 0]), zt(-2 * p1m.clone(), &[-2, 1])]),
        (&[-1, -1], vec![ze(&[-1, -1]), zt(-2 * p1m.clone(), &[-2, 0])]),
    ];
    for (ks, terms) in inversions {
        let name = format!("inversion {}", ks.iter().map(|&k| tilde(k).token()).collect::<Vec<_>>().join(" "));
        out.push(CheckRecord::compare(
            name,
            uea_text(&reduce_mod_ii(&tw(ks))),
            uea_text(&z_to_tilde(&sum_z(terms))),
        ));
    }
    out
}

fn relation_checks() -> Vec<CheckRecord> {
    let stated = RelationCatalog::standard();
    let mut out: Vec<CheckRecord> = check_relations(&stated)
        .into_iter()
        .map(|r| {
            let mut rec = CheckRecord::new(r.label.clone(), r.passed());
            if !r.passed() {
                rec.expected = r.stated.as_ref().map(z_text);
                rec.actual = r.discovered.as_ref().map(z_text);
                rec.detail = Some(format!("tilde residual {}", uea_text(&r.residual)));
            }
            rec
        })
        .collect();
    let find = |a: i8, b: i8| {
        stated
            .relations()
            .iter()
            .find(|r| r.left == (ZGen::new(a), ZGen::new(b)))
            .expect("catalog pair")
    };
    let derived = theta_relation(find(2, -1));
    out.push(CheckRecord::compare(
        "Theta maps E(2) <> E(-1) to E(1) <> E(-2)",
        z_text(&find(1, -2).right),
        z_text(&derived.right),
    ));
    out
}

fn presentation_checks(o: &SuiteOptions) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let ms = ZMonomial::enumerate(o.max_exp);
    let bad = oracle_mismatches(&ms);
    let mut rec = CheckRecord::new(
        format!("z_multiply = oracle on {} ordered pairs (exponents <= {})", ms.len() * ms.len(), o.max_exp),
        bad.is_empty(),
    );
    if let Some((a, b)) = bad.first() {
        rec = rec.with_detail(format!("{} mismatches, first {a} * {b}", bad.len()));
    }
    out.push(rec);

    let gens: Vec<ZElement> = (-2..=2).map(|k| ZGen::new(k).into()).collect();
    let mut non_assoc = Vec::new();
    for a in &gens {
        for b in &gens {
            for c in &gens {
                if z_multiply(&z_multiply(a, b), c) != z_multiply(a, &z_multiply(b, c)) {
                    non_assoc.push(format!("{a:?} {b:?} {c:?}"));
                }
            }
        }
    }
    let mut rec = CheckRecord::new("associativity on 125 generator triples", non_assoc.is_empty());
    if !non_assoc.is_empty() {
        rec = rec.with_detail(non_assoc.join(", "));
    }
    out.push(rec);

    let mut theta_bad = Vec::new();
    for a in &gens {
        if z_theta(&z_theta(a)) != *a {
            theta_bad.push(format!("Theta^2 {a:?}"));
        }
        for b in &gens {
            if z_theta(&a.mul(b)) != z_theta(b).mul(&z_theta(a)) {
                theta_bad.push(format!("Theta({a:?} <> {b:?})"));
            }
        }
    }
    let mut rec = CheckRecord::new("Theta involutive and anti-multiplicative", theta_bad.is_empty());
    if !theta_bad.is_empty() {
        rec = rec.with_detail(theta_bad.join(", "));
    }
    out.push(rec);
    out
}

fn random_raw(rng: &mut StdRng) -> RawTerm {
    let len = rng.gen_range(2..=5);
    let mut factors = Vec::new();
    for _ in 0..len {
        factors.push(RawFactor::Gen(Generator::from_index(rng.gen_range(0..9))));
        if rng.gen_bool(0.25) {
            let a = rng.gen_range(-3i64..=3);
            factors.push(RawFactor::Coeff(1 / (h() - a) + rng.gen_range(-2i64..=2)));
        }
    }
    RawTerm {
        coeff: c(rng.gen_range(1..=4)),
        factors,
    }
}

fn pbw_checks(o: &SuiteOptions) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let (n, defects) = triangularity_defects(o.degree);
    let mut rec = CheckRecord::new(
        format!("unit triangular with round trip on {n} monomials of degree <= {}", o.degree),
        defects.is_empty(),
    );
    if !defects.is_empty() {
        rec = rec.with_detail(defects.join("; "));
    }
    out.push(rec);

    let mut diverged = Vec::new();
    let mut unconserved = Vec::new();
    for s in o.seed..o.seed + o.seeds {
        let mut rng = StdRng::seed_from_u64(s);
        let raw = random_raw(&mut rng);
        let reference = normal_order(std::slice::from_ref(&raw));
        let left = normal_order_with(std::slice::from_ref(&raw), &mut Leftmost);
        let random = normal_order_with(std::slice::from_ref(&raw), &mut RandomSites::new(s));
        if left != reference || random != reference {
            diverged.push(s);
        }
        let (_, letters) = raw.split();
        let weight: i64 = -letters.iter().map(|g| g.root() as i64).sum::<i64>();
        let parity = letters.iter().map(|g| g.parity()).sum::<u8>() % 2;
        if reference.iter().any(|(m, _)| m.weight() != weight || m.parity() != parity) {
            unconserved.push(s);
        }
    }
    let mut rec = CheckRecord::new(
        format!("straightening strategies agree on {} seeded words", o.seeds),
        diverged.is_empty(),
    );
    if !diverged.is_empty() {
        rec = rec.with_detail(format!("seeds {diverged:?}"));
    }
    out.push(rec);
    let mut rec = CheckRecord::new("weight and parity conserved", unconserved.is_empty());
    if !unconserved.is_empty() {
        rec = rec.with_detail(format!("seeds {unconserved:?}"));
    }
    out.push(rec);

    let gens: Vec<UeaElement> = PBW_ORDER.iter().map(|&g| g.into()).collect();
    let mut jacobi_bad = 0;
    for (ia, a) in gens.iter().enumerate() {
        for (ib, b) in gens.iter().enumerate() {
            let ab = super_bracket(a, b).expect("homogeneous");
            let sign = c(swap_sign(PBW_ORDER[ia], PBW_ORDER[ib]));
            for cc in &gens {
                let lhs = super_bracket(a, &super_bracket(b, cc).expect("homogeneous")).expect("homogeneous");
                let r1 = super_bracket(&ab, cc).expect("homogeneous");
                let r2 = super_bracket(b, &super_bracket(a, cc).expect("homogeneous")).expect("homogeneous");
                if lhs != &r1 + &r2.scale(&sign) {
                    jacobi_bad += 1;
                }
            }
        }
    }
    out.push(
        CheckRecord::new("Jacobi identity on 729 letter triples", jacobi_bad == 0)
            .with_detail(format!("{jacobi_bad} failures")),
    );
    out
}

fn q(n: i64, d: i64) -> QuadExt {
    QuadExt::rational(Rational::new(n.into(), d.into()))
}

fn rep_checks(o: &SuiteOptions) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let module = example_module(o.trunc);
    let basis = example_basis(&module);
    let window = module.primitive_vectors(-1..=0);
    let rec = match &window {
        Ok(prims) => CheckRecord::new("primitive vectors with H in {-1/2, 1/2} span w1, w2", same_span(prims, &basis)),
        Err(e) => CheckRecord::new("primitive vectors with H in {-1/2, 1/2} span w1, w2", false).with_detail(e.to_string()),
    };
    out.push(rec);
    out.push(CheckRecord::new(
        "V(1) and C[x] satisfy the osp(1|2) brackets",
        irrep_bracket_defects(&IrrepData::new(1)).is_empty() && poly_bracket_defects(module.poly()).is_empty(),
    ));

    match example_rho(o.trunc) {
        Err(e) => out.push(CheckRecord::new("rho on (w1, w2)", false).with_detail(e.to_string())),
        Ok(r) => {
            let rat = |rows: &[Vec<(i64, i64)>]| Matrix::from_rational_rows(rows);
            let zero = rat(&[vec![(0, 1), (0, 1)], vec![(0, 1), (0, 1)]]);
            let displays = [
                (1, rat(&[vec![(0, 1), (2, 1)], vec![(0, 1), (0, 1)]])),
                (-1, rat(&[vec![(0, 1), (0, 1)], vec![(2, 1), (0, 1)]])),
                (2, zero.clone()),
                (-2, zero),
                (0, rat(&[vec![(3, 2), (0, 1)], vec![(0, 1), (9, 2)]])),
            ];
            for (k, m) in displays {
                out.push(CheckRecord::compare(
                    format!("rho(E({k})) on (w1, w2)"),
                    m.to_string(),
                    r.generator(ZGen::new(k)).to_string(),
                ));
            }
            let f = (h() + 3) / (h() - 2);
            let diag = Matrix::diagonal(vec![q(-1, 1), q(-7, 3)]);
            out.push(CheckRecord::compare(
                "rho(f(H)) = diag(f(-1/2), f(1/2))",
                diag.to_string(),
                r.coeff(&f).map(|m| m.to_string()).unwrap_or_else(|e| e.to_string()),
            ));
            out.extend(rep_relation_records("(w1, w2)", &r, &RelationCatalog::standard()));
            out.push(CheckRecord::new("rho on (w1, w2) is irreducible", is_irreducible(&r)));
        }
    }

    let full = example_module(o.trunc.max(8));
    let mut all = basis.to_vec();
    all.push(example_top(&full));
    let rec = match full.primitive_vectors(-1..=(full.poly().trunc() as i64 - 1)) {
        Ok(prims) => CheckRecord::new(
            format!("all primitive vectors up to degree {} span w1, w2, w3", full.poly().trunc()),
            same_span(&prims, &all),
        ),
        Err(e) => CheckRecord::new("all primitive vectors", false).with_detail(e.to_string()),
    };
    out.push(rec);
    match example_rho_full(o.trunc.max(8)) {
        Err(e) => out.push(CheckRecord::new("rho on (w1, w2, w3)", false).with_detail(e.to_string())),
        Ok(r) => {
            out.extend(rep_relation_records("(w1, w2, w3)", &r, &RelationCatalog::from_oracle()));
            out.push(CheckRecord::new("rho on (w1, w2, w3) is irreducible", is_irreducible(&r)));
        }
    }
    out
}

fn rep_relation_records(space: &str, r: &RhoMatrices, catalog: &RelationCatalog) -> Vec<CheckRecord> {
    check_rep_relations(r, catalog)
        .into_iter()
        .map(|c| {
            let passed = c.passed();
            let rec = CheckRecord::new(format!("rho on {space}: {}", c.label), passed);
            match (&c.residual, passed) {
                (_, true) => rec,
                (Ok(m), false) => rec.with_detail(format!("residual {m}")),
                (Err(e), false) => rec.with_detail(e.clone()),
            }
        })
        .collect()
}
