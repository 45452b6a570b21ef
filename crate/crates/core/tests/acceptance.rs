//! Acceptance run: one line per criterion.
//!
//! Runs without the libtest harness so the lines always reach stdout. The
//! process fails only when a criterion outside `KNOWN_FAILURES` fails; the
//! known ones are still computed and printed as they come out.
//!
//! The exponent-2 presentation sweep takes a couple of minutes; set
//! `OSPZ_STRETCH=0` to skip it.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use ospz::cli_io::{parse_ratfunc, parse_uea, parse_z, uea_text, z_text};
use ospz::coeff::{Polynomial, QuadExt, Rational, RationalFunction};
use ospz::projector::{diamond, kappa, kappa_from_bracket, phi, projected_generator, verify_projector_recursion};
use ospz::rep::{check_rep_relations, is_irreducible, same_span, example_rho, Matrix, RhoMatrices, TensorModule};
use ospz::uea::{
    normal_order, normal_order_with, reduce_mod_ii, super_bracket, swap_sign, Generator, Leftmost, RandomSites,
    RawFactor, RawTerm, UeaElement, PBW_ORDER,
};
use ospz::zalg::{
    oracle_mismatches, theta_relation, tilde_to_z, triangularity_defects, z_monomial_to_tilde, z_multiply, z_theta,
    z_to_tilde, Relation, RelationCatalog, ZElement, ZGen, ZMonomial,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Criteria that fail on the values as stated; see the README.
const KNOWN_FAILURES: [u32; 2] = [7, 11];

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn u(s: &str) -> UeaElement {
    parse_uea(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn z(s: &str) -> ZElement {
    parse_z(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn rf(s: &str) -> RationalFunction {
    parse_ratfunc(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn gen_u(k: i8) -> UeaElement {
    if k == 0 {
        u("th")
    } else {
        u(&format!("t({k})"))
    }
}

fn ms(d: Duration) -> String {
    format!("{:.1} ms", d.as_secs_f64() * 1e3)
}

fn c1_phi_table() -> Outcome {
    let printed = ["1", "-1/(H-1)", "-1/(H-1)", "1/((H-2)*(H-1))", "1/(2*(H-2)*(H-1))"];
    let expected: Vec<RationalFunction> = printed.iter().map(|s| rf(s)).collect();
    let start = Instant::now();
    let got: Vec<RationalFunction> = (0..5).map(phi).collect();
    let took = start.elapsed();
    let bad: Vec<usize> = (0..5).filter(|&n| got[n] != expected[n]).collect();
    outcome(
        bad.is_empty() && took < Duration::from_millis(1),
        format!("phi_0..phi_4, mismatches {bad:?}, {}", ms(took)),
    )
}

fn c2_kappa() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in 0..=10usize {
        // sum_{k<n} (-1)^k (H - k), summed directly
        let mut direct = Polynomial::zero();
        for k in 0..n as i64 {
            let term = Polynomial::linear_root(Rational::from_integer(k.into()));
            direct = if k % 2 == 0 { &direct + &term } else { &direct - &term };
        }
        let bracket = kappa_from_bracket(n);
        if bracket != direct || kappa(n) != direct {
            bad.push(n);
        }
    }
    let took = start.elapsed();
    outcome(
        bad.is_empty() && took < Duration::from_secs(1),
        format!("n = 0..=10, mismatches {bad:?}, {}", ms(took)),
    )
}

fn c3_recursion() -> Outcome {
    let mut bad = Vec::new();
    for n in 0..=10usize {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let residual = phi(n).shift(1) * RationalFunction::from_int(sign)
            + phi(n + 1).shift(1) * RationalFunction::from(kappa(n + 1));
        if !residual.is_zero() {
            bad.push(n);
        }
    }
    let lib_zero = verify_projector_recursion(10).iter().all(|r| r.passed());
    outcome(bad.is_empty() && lib_zero, format!("n = 0..=10, nonzero at {bad:?}"))
}

fn c4_bracket_table() -> Outcome {
    // (centre, [x_a, .]^j for j = 1.., [., x_-a]^j for j = 1..)
    let rows: [(&str, &[&str], &[&str]); 5] = [
        ("X(-2)", &["X(-1)", "(H)", "X(1)", "-2 X(2)", "0"], &["0"]),
        ("X(-1)", &["(H)", "X(1)", "-2 X(2)", "0"], &["2 X(-2)", "0"]),
        ("(H)", &["X(1)", "-2 X(2)", "0"], &["X(-1)", "2 X(-2)", "0"]),
        ("X(1)", &["-2 X(2)", "0"], &["(H)", "X(-1)", "2 X(-2)", "0"]),
        ("X(2)", &["0"], &["-X(1)", "-(H)", "-X(-1)", "-2 X(-2)", "0"]),
    ];
    let raise = u("X(1)");
    let lower = u("X(-1)");
    let mut entries = 0;
    let mut bad = Vec::new();
    for (centre, right, left) in rows {
        let mut cur = u(centre);
        for (j, want) in right.iter().enumerate() {
            cur = super_bracket(&raise, &cur).expect("homogeneous");
            entries += 1;
            if cur != u(want) {
                bad.push(format!("[x_a, {centre}]^{}", j + 1));
            }
        }
        let mut cur = u(centre);
        for (j, want) in left.iter().enumerate() {
            cur = super_bracket(&cur, &lower).expect("homogeneous");
            entries += 1;
            if cur != u(want) {
                bad.push(format!("[{centre}, x_-a]^{}", j + 1));
            }
        }
    }
    outcome(bad.is_empty(), format!("{entries} entries, mismatches {bad:?}"))
}

fn c5_projected_generators() -> Outcome {
    let printed: [(i8, &str); 5] = [
        (2, "t(2)"),
        (1, "t(1) + (2/(H-1)) X(-1) t(2)"),
        (0, "th - (1/(H-1)) X(-1) t(1) + (2/(H-1)) X(-1)^2 t(2)"),
        (-1, "t(-1) - (1/(H-1)) X(-1) th - (1/(H-1)) X(-1)^2 t(1) - (2/((H-2)*(H-1))) X(-1)^3 t(2)"),
        (
            -2,
            "t(-2) - (1/(H-1)) X(-1) t(-1) - (1/(H-1)) X(-1)^2 th + (1/((H-2)*(H-1))) X(-1)^3 t(1) \
             - (1/((H-2)*(H-1))) X(-1)^4 t(2)",
        ),
    ];
    let mut bad = Vec::new();
    for (k, text) in printed {
        let g = if k == 0 { Generator::th() } else { Generator::t(k) };
        let got = projected_generator(g);
        if got != u(text) {
            bad.push(format!("k = {k}: {}", uea_text(&got)));
        }
    }
    outcome(bad.is_empty(), format!("5 formulas, mismatches {bad:?}"))
}

fn c6_lemmas() -> Outcome {
    let mut products = 0;
    let mut bad = Vec::new();
    // y <> x_2a and x_-2a <> y are the plain tilde products
    let mut any2 = true;
    let mut two_any = true;
    for k in -2..=2 {
        any2 &= diamond(&gen_u(k), &gen_u(2)) == reduce_mod_ii(&gen_u(k).mul(&gen_u(2)));
        two_any &= diamond(&gen_u(-2), &gen_u(k)) == reduce_mod_ii(&gen_u(-2).mul(&gen_u(k)));
    }
    for (name, ok) in [("y <> x_2a", any2), ("x_-2a <> y", two_any)] {
        products += 1;
        if !ok {
            bad.push(name.to_string());
        }
    }
    let ordered: [(i8, i8, &str); 6] = [
        (1, 1, "t(1) t(1) + (2/H) th t(2)"),
        (0, 1, "th t(1) + (2/(H-1)) t(-1) t(2)"),
        (-1, 1, "t(-1) t(1) + (4/(H-2)) t(-2) t(2)"),
        (0, 0, "th th - (1/(H-1)) t(-1) t(1) + (4/(H-1)) t(-2) t(2)"),
        (-1, 0, "t(-1) th - (2/(H-2)) t(-2) t(1)"),
        (-1, -1, "t(-1) t(-1) - (2/(H-2)) t(-2) th"),
    ];
    for (a, b, text) in ordered {
        products += 1;
        if diamond(&gen_u(a), &gen_u(b)) != reduce_mod_ii(&u(text)) {
            bad.push(format!("E({a}) <> E({b})"));
        }
    }

    let mut inversions = 0;
    let mut any2 = true;
    let mut two_any = true;
    for k in -2..=2 {
        let ek = ZElement::gen(ZGen::new(k));
        any2 &= tilde_to_z(&gen_u(k).mul(&gen_u(2))) == ek.mul(&z("E(2)"));
        two_any &= tilde_to_z(&gen_u(-2).mul(&gen_u(k))) == z("E(-2)").mul(&ek);
    }
    for (name, ok) in [("y x_2a", any2), ("x_-2a y", two_any)] {
        inversions += 1;
        if !ok {
            bad.push(format!("inversion {name}"));
        }
    }
    let inverted: [(&str, &str); 6] = [
        ("t(1) t(1)", "E(1) <> E(1) - (2/H) E(0) <> E(2)"),
        ("th t(1)", "E(0) <> E(1) - (2/(H-1)) E(-1) <> E(2)"),
        ("t(-1) t(1)", "E(-1) <> E(1) - (4/(H-2)) E(-2) <> E(2)"),
        (
            "th th",
            "E(0) <> E(0) + (1/(H-1)) E(-1) <> E(1) + (4*(-1/(H-1) - 1/((H-1)*(H-2)))) E(-2) <> E(2)",
        ),
        ("t(-1) th", "E(-1) <> E(0) + (2/(H-2)) E(-2) <> E(1)"),
        ("t(-1) t(-1)", "E(-1) <> E(-1) + (2/(H-2)) E(-2) <> E(0)"),
    ];
    for (tilde, diamond_side) in inverted {
        inversions += 1;
        if reduce_mod_ii(&u(tilde)) != z_to_tilde(&z(diamond_side)) {
            bad.push(format!("inversion {tilde}"));
        }
    }
    outcome(
        bad.is_empty() && products == 8 && inversions == 8,
        format!("{products} products, {inversions} inversions, failures {bad:?}"),
    )
}

/// The twelve pair relations as printed, `(a, b, right side)`.
const STATED: [(i8, i8, &str); 12] = [
    (2, 1, "(1 - 2/(H-1)) E(1) <> E(2)"),
    (1, 1, "(2/H) E(0) <> E(2)"),
    (-1, -1, "(-2/(H-2)) E(-2) <> E(0)"),
    (2, 0, "(1 - 2/(H+1)) E(0) <> E(2)"),
    (2, -1, "(1 - 2/(H*(H-1))) E(-1) <> E(2) + (2/(H+1)) E(0) <> E(1)"),
    (
        2,
        -2,
        "(1 + 2*(H^3 + H^2 - 6*H + 4)/((H-2)*(H-1)*H*(H+1)*(H+2))) E(-2) <> E(2) \
         - ((H^2 - H - 1)/((H-1)*H*(H+1))) E(-1) <> E(1) + (1/(H+1)) E(0) <> E(0) + (-H^2/(H+1))",
    ),
    (1, 0, "(1 - 1/H) E(0) <> E(1)"),
    (
        1,
        -1,
        "(-1 - 1/(H-1)) E(-1) <> E(1) + (4*H/((H-1)*(H-2))) E(-2) <> E(2) - (1/H) E(0) <> E(0) + (H)",
    ),
    (1, -2, "(1 - 2/((H-1)*(H-2))) E(-2) <> E(1) - (2/H) E(-1) <> E(0)"),
    (0, -1, "(1 - 1/(H-1)) E(-1) <> E(0)"),
    (0, -2, "(1 - 2/(H-1)) E(-2) <> E(0)"),
    (-1, -2, "(1 - 2/(H-4)) E(-2) <> E(-1)"),
];

fn stated_catalog() -> RelationCatalog {
    RelationCatalog::from_relations(
        STATED
            .iter()
            .map(|&(a, b, rhs)| Relation {
                left: (ZGen::new(a), ZGen::new(b)),
                right: z(rhs),
            })
            .collect(),
    )
}

fn c7_relations() -> Outcome {
    let start = Instant::now();
    let samples = [rf("(H^2 + 1)/(H - 3)"), rf("1/(H + 5)"), rf("2*H - 7")];
    let scalar = |f: &RationalFunction| UeaElement::scalar(f.clone());
    let mut passed = 0;
    let mut failed = Vec::new();

    let cartan = samples
        .iter()
        .all(|f| samples.iter().all(|g| diamond(&scalar(f), &scalar(g)) == diamond(&scalar(g), &scalar(f))));
    if cartan {
        passed += 1;
    } else {
        failed.push("f(H) <> g(H)".to_string());
    }
    let shift = [-2i8, -1, 1, 2].iter().all(|&k| {
        samples
            .iter()
            .all(|f| diamond(&gen_u(k), &scalar(f)) == diamond(&scalar(&f.shift(k as i64)), &gen_u(k)))
    });
    if shift {
        passed += 1;
    } else {
        failed.push("E(k) <> f(H)".to_string());
    }
    for (a, b, rhs) in STATED {
        let lhs = diamond(&gen_u(a), &gen_u(b));
        if lhs == z_to_tilde(&z(rhs)) {
            passed += 1;
        } else {
            failed.push(format!("E({a}) <> E({b}): oracle gives {}", z_text(&tilde_to_z(&lhs))));
        }
    }
    let took = start.elapsed();
    outcome(
        failed.is_empty() && took < Duration::from_secs(10),
        format!("{passed}/14 families, {}; failing: {}", ms(took), failed.join("; ")),
    )
}

fn c8_presentation(max_exp: u16, budget: Duration) -> Outcome {
    let monomials = ZMonomial::enumerate(max_exp);
    let pairs = monomials.len() * monomials.len();
    let start = Instant::now();
    let bad = oracle_mismatches(&monomials);
    let took = start.elapsed();
    outcome(
        bad.is_empty() && took < budget && (max_exp > 1 || pairs >= 576),
        format!("{pairs} pairs with exponents <= {max_exp}, {} mismatches, {:.1} s", bad.len(), took.as_secs_f64()),
    )
}

fn c9_triangularity() -> Outcome {
    let (checked, defects) = triangularity_defects(4);
    // direct look at each expansion: leading term is the tilde twin with
    // coefficient 1, and nothing precedes it
    let mut direct_bad = 0;
    for m in ZMonomial::up_to_degree(4) {
        let e = z_monomial_to_tilde(&m);
        match e.leading() {
            Some((lead, c)) if *lead == m.tilde() && c.is_one() => {}
            _ => direct_bad += 1,
        }
        if z_to_tilde(&tilde_to_z(&UeaElement::monomial(m.tilde()))) != UeaElement::monomial(m.tilde()) {
            direct_bad += 1;
        }
    }
    outcome(
        defects.is_empty() && direct_bad == 0,
        format!("{checked} monomials of degree <= 4, {} defects", defects.len() + direct_bad),
    )
}

fn c10_theta() -> Outcome {
    let gens: Vec<ZElement> = (-2..=2).map(|k| ZElement::gen(ZGen::new(k))).collect();
    let mut bad = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        if z_theta(&z_theta(a)) != *a {
            bad.push(format!("Theta^2 on E({})", i as i8 - 2));
        }
        for (j, b) in gens.iter().enumerate() {
            if z_theta(&z_multiply(a, b)) != z_multiply(&z_theta(b), &z_theta(a)) {
                bad.push(format!("Theta(E({}) <> E({}))", i as i8 - 2, j as i8 - 2));
            }
        }
    }
    let source = Relation {
        left: (ZGen::new(2), ZGen::new(-1)),
        right: z(STATED[4].2),
    };
    let derived = theta_relation(&source);
    let target = z(STATED[8].2);
    let derivation = derived.left == (ZGen::new(1), ZGen::new(-2)) && derived.right == target;
    if !derivation {
        bad.push(format!("derived E(1) <> E(-2) = {}", z_text(&derived.right)));
    }
    outcome(bad.is_empty(), format!("5 involutions, 25 pairs, derivation {derivation}; failures {bad:?}"))
}

fn q(n: i64, d: i64) -> QuadExt {
    QuadExt::rational(Rational::new(n.into(), d.into()))
}

fn c11_example() -> Outcome {
    let module = TensorModule::new(6, 1);
    // V(1) basis index i carries weight 1 - i: 0 -> v[1], 1 -> v[0], 2 -> v[-1]
    let w1 = module.basis_vector(0, 2);
    let mut w2 = module.basis_vector(0, 1);
    w2.add_at(module.index(1, 2), &QuadExt::sqrt2());
    let basis = [w1, w2];
    let extraction = match module.primitive_vectors(-1..=0) {
        Ok(p) => p.len() == 2 && same_span(&p, &basis),
        Err(_) => false,
    };
    let closed = RhoMatrices::compute(&module, &basis).is_ok();

    let mut notes = vec![format!("extraction {extraction}"), format!("span closed under Z {closed}")];
    let Ok(rho) = example_rho(6) else {
        return outcome(false, "rho could not be computed");
    };
    let m = |rows: &[[(i64, i64); 2]; 2]| {
        Matrix::from_rational_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    };
    let zero = m(&[[(0, 1), (0, 1)], [(0, 1), (0, 1)]]);
    let displays = [
        (1, m(&[[(0, 1), (2, 1)], [(0, 1), (0, 1)]])),
        (-1, m(&[[(0, 1), (0, 1)], [(2, 1), (0, 1)]])),
        (2, zero.clone()),
        (-2, zero),
        (0, m(&[[(3, 2), (0, 1)], [(0, 1), (9, 2)]])),
    ];
    let mut matrices = displays.iter().all(|(k, want)| rho.generator(ZGen::new(*k)) == want);
    let f = rf("(H + 3)/(H - 2)");
    // f(-1/2) = -1, f(1/2) = -7/3
    matrices &= rho.coeff(&f).ok() == Some(Matrix::diagonal(vec![q(-1, 1), q(-7, 3)]));
    notes.push(format!("displayed matrices {matrices}"));

    let mut catalog_checks = check_rep_relations(&rho, &stated_catalog());
    let failing: Vec<String> = catalog_checks
        .drain(..)
        .filter(|c| !c.passed())
        .map(|c| c.label)
        .collect();
    notes.push(format!("{}/14 relations hold, failing {failing:?}", 14 - failing.len()));
    let irreducible = is_irreducible(&rho);
    notes.push(format!("irreducible {irreducible}"));
    outcome(extraction && matrices && failing.is_empty() && irreducible, notes.join(", "))
}

fn random_word(rng: &mut StdRng) -> RawTerm {
    let len = rng.gen_range(2..=6);
    let mut factors = Vec::new();
    for _ in 0..len {
        factors.push(RawFactor::Gen(Generator::from_index(rng.gen_range(0..9))));
        if rng.gen_bool(0.3) {
            let a = rng.gen_range(-3i64..=3);
            factors.push(RawFactor::Coeff(RationalFunction::from_int(1) / (RationalFunction::h() - a)));
        }
    }
    RawTerm {
        coeff: RationalFunction::from_int(rng.gen_range(1..=5)),
        factors,
    }
}

fn c12_properties() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;

    let mut diverged = 0;
    let mut unconserved = 0;
    for seed in 0..100u64 {
        let mut rng = StdRng::seed_from_u64(1000 + seed);
        let raw = random_word(&mut rng);
        let reference = normal_order(std::slice::from_ref(&raw));
        let left = normal_order_with(std::slice::from_ref(&raw), &mut Leftmost);
        let random = normal_order_with(std::slice::from_ref(&raw), &mut RandomSites::new(seed));
        if left != reference || random != reference {
            diverged += 1;
        }
        let letters: Vec<Generator> = raw
            .factors
            .iter()
            .filter_map(|f| match f {
                RawFactor::Gen(g) => Some(*g),
                _ => None,
            })
            .collect();
        let weight = -letters.iter().map(|g| g.root() as i64).sum::<i64>();
        let parity = letters.iter().map(|g| g.parity()).sum::<u8>() % 2;
        if reference.iter().any(|(m, _)| m.weight() != weight || m.parity() != parity) {
            unconserved += 1;
        }
    }
    ok &= diverged == 0 && unconserved == 0;
    notes.push(format!("confluence 100 seeds, {diverged} diverged, {unconserved} unconserved"));

    let gens: Vec<ZElement> = (-2..=2).map(|k| ZElement::gen(ZGen::new(k))).collect();
    let mut non_assoc = 0;
    for a in &gens {
        for b in &gens {
            for c in &gens {
                if z_multiply(&z_multiply(a, b), c) != z_multiply(a, &z_multiply(b, c)) {
                    non_assoc += 1;
                }
            }
        }
    }
    ok &= non_assoc == 0;
    notes.push(format!("associativity 125 triples, {non_assoc} failures"));

    let letters: Vec<UeaElement> = PBW_ORDER.iter().map(|&g| UeaElement::generator(g)).collect();
    let mut jacobi = 0;
    let mut triples = 0;
    for (i, a) in letters.iter().enumerate() {
        for (j, b) in letters.iter().enumerate() {
            let sign = RationalFunction::from_int(swap_sign(PBW_ORDER[i], PBW_ORDER[j]));
            for c in &letters {
                triples += 1;
                let lhs = super_bracket(a, &super_bracket(b, c).unwrap()).unwrap();
                let r1 = super_bracket(&super_bracket(a, b).unwrap(), c).unwrap();
                let r2 = super_bracket(b, &super_bracket(a, c).unwrap()).unwrap();
                if lhs != &r1 + &r2.scale(&sign) {
                    jacobi += 1;
                }
            }
        }
    }
    ok &= jacobi == 0;
    notes.push(format!("Jacobi {triples} triples, {jacobi} failures"));
    outcome(ok, notes.join(", "))
}

type Criterion = (u32, &'static str, Box<dyn Fn() -> Outcome>);

fn main() -> ExitCode {
    let stretch = std::env::var("OSPZ_STRETCH").as_deref() != Ok("0");
    let criteria: Vec<Criterion> = vec![
        (1, "phi table", Box::new(c1_phi_table)),
        (2, "kappa against brackets", Box::new(c2_kappa)),
        (3, "projector recursion", Box::new(c3_recursion)),
        (4, "bracket table", Box::new(c4_bracket_table)),
        (5, "projected generators", Box::new(c5_projected_generators)),
        (6, "ordered products and inversions", Box::new(c6_lemmas)),
        (7, "relation families via the oracle", Box::new(c7_relations)),
        (8, "presentation against the oracle", Box::new(|| c8_presentation(1, Duration::MAX))),
        (9, "PBW triangularity", Box::new(c9_triangularity)),
        (10, "Theta", Box::new(c10_theta)),
        (11, "C[x] (x) C^{1|2} example", Box::new(c11_example)),
        (12, "property suites", Box::new(c12_properties)),
    ];
    let mut unexpected = Vec::new();
    for (n, name, run) in &criteria {
        let out = run();
        let mark = if out.passed { "PASS" } else { "FAIL" };
        println!("criterion {n:>2} [{mark}] {name}: {}", out.detail);
        if !out.passed && !KNOWN_FAILURES.contains(n) {
            unexpected.push(*n);
        }
        if *n == 8 {
            if stretch {
                let out = c8_presentation(2, Duration::from_secs(300));
                let mark = if out.passed { "PASS" } else { "FAIL" };
                println!("criterion  8 [{mark}] stretch sweep: {}", out.detail);
                if !out.passed {
                    unexpected.push(8);
                }
            } else {
                println!("criterion  8 [skip] stretch sweep: OSPZ_STRETCH=0");
            }
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: no failures outside the known set {KNOWN_FAILURES:?}");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected failures {unexpected:?}");
        ExitCode::FAILURE
    }
}
