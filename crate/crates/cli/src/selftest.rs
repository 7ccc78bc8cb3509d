//! The `addsep selftest` suites: fixture validity, oracle equivalence at
//! desk scale, cross-validation of the rank criterion against the link
//! criterion, decomposition round trips, and hereditary sampling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use addsep_core::{
    check_hereditary, decompose, evaluate, find_loop, good_via_links, is_good, linked_components,
    loop_functional, verify_loop, DecomposeOutcome, PointSet,
};

use crate::fixtures;
use crate::oracle::{brute_force_good, enumerate_product_subsets};
use crate::sampling::{
    random_bad_set, random_function, random_good_set, random_point_set_with_axes, SetShape,
};
use crate::schema;

/// Outcome of one suite.
#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl SuiteResult {
    fn pass(name: &str, detail: String) -> Self {
        SuiteResult {
            name: name.into(),
            passed: true,
            detail,
        }
    }

    fn fail(name: &str, detail: String) -> Self {
        SuiteResult {
            name: name.into(),
            passed: false,
            detail,
        }
    }

    fn check(name: &str, passed: bool, detail: String) -> Self {
        SuiteResult {
            name: name.into(),
            passed,
            detail,
        }
    }
}

/// Aggregate self-test report.
#[derive(Debug, Clone)]
pub struct SelftestReport {
    pub seed: u64,
    pub suites: Vec<SuiteResult>,
    pub passed: bool,
}

/// What to run and at which scale.
#[derive(Debug, Clone)]
pub struct SelftestConfig {
    pub seed: u64,
    /// Trial count for the randomized suites.
    pub trials: usize,
    /// Run only the exhaustive two-axis equivalence suite.
    pub exhaustive_n2: bool,
    /// Run only the hereditary suite, on this set.
    pub hereditary: Option<(String, PointSet)>,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig {
            seed: 1,
            trials: 100,
            exhaustive_n2: false,
            hereditary: None,
        }
    }
}

/// Runs the configured suites. With no selection flags, everything runs.
pub fn run(config: &SelftestConfig) -> SelftestReport {
    let selective = config.exhaustive_n2 || config.hereditary.is_some();
    let mut suites = Vec::new();
    if !selective {
        suites.push(fixtures_suite());
        suites.push(oracle_equivalence_suite(
            "oracle-equivalence-n3",
            &[2, 2, 2],
            6,
        ));
        suites.push(oracle_equivalence_suite("oracle-equivalence-n2", &[3, 3], 5));
        suites.push(links_rank_agreement_n2(config.seed, config.trials));
        suites.push(links_rank_agreement_n3_linked());
        suites.push(decompose_roundtrip_suite(config.seed, config.trials));
        suites.push(hereditary_suite(
            "axes-union(3,3,3)",
            &fixtures::axes_union(&[3, 3, 3]),
            config.trials,
            config.seed,
        ));
    } else {
        if config.exhaustive_n2 {
            suites.push(links_rank_agreement_n2(config.seed, config.trials));
        }
        if let Some((label, set)) = &config.hereditary {
            suites.push(hereditary_suite(label, set, config.trials, config.seed));
        }
    }
    let passed = suites.iter().all(|s| s.passed);
    SelftestReport {
        seed: config.seed,
        suites,
        passed,
    }
}

fn fixtures_suite() -> SuiteResult {
    let name = "fixtures";
    let (loop5, cert5) = fixtures::loop5();
    let (loop26, cert26) = fixtures::loop26();

    if !verify_loop(&cert5) || !verify_loop(&cert26) {
        return SuiteResult::fail(name, "stored loop certificate failed verification".into());
    }
    if find_loop(&loop5).as_ref() != Some(&cert5) {
        return SuiteResult::fail(name, "canonical loop of loop5 drifted".into());
    }
    let verdict26 = is_good(&loop26);
    if verdict26.rank != 25 || find_loop(&loop26).as_ref() != Some(&cert26) {
        return SuiteResult::fail(name, "loop26 is not the expected circuit".into());
    }
    let two = fixtures::two_components();
    let partition = match linked_components(&two) {
        Ok(p) => p,
        Err(e) => return SuiteResult::fail(name, format!("two-components: {e}")),
    };
    if partition.len() != 2
        || !partition.components().iter().all(|c| c.uniquely_linked())
        || is_good(&two).good
    {
        return SuiteResult::fail(name, "two-components fixture lost its paradox".into());
    }
    let union = fixtures::axes_union(&[2, 3, 4]);
    let verdict = is_good(&union);
    if !verdict.good || verdict.cardinality != 7 || verdict.bound != 7 {
        return SuiteResult::fail(name, "axes-union(2,3,4) verdict drifted".into());
    }
    let grid_cert = match find_loop(&fixtures::grid(2, 2)) {
        Some(c) => c,
        None => return SuiteResult::fail(name, "grid(2x2) lost its loop".into()),
    };
    if grid_cert
        .coefficients()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        != ["1", "-1", "-1", "1"]
    {
        return SuiteResult::fail(name, "grid(2x2) coefficients drifted".into());
    }
    // Every fixture round-trips through the document schema.
    for s in [&loop5, &loop26, &two, &union, &fixtures::grid(2, 2)] {
        let text = schema::point_set_to_value(s).to_string();
        match schema::parse_point_set(&text) {
            Ok(parsed) if &parsed == s => {}
            _ => return SuiteResult::fail(name, "schema round trip failed".into()),
        }
    }
    for c in [&cert5, &cert26] {
        let text = schema::certificate_to_value(c).to_string();
        match schema::parse_certificate(&text) {
            Ok(parsed) if &parsed == *c => {}
            _ => return SuiteResult::fail(name, "certificate round trip failed".into()),
        }
    }
    SuiteResult::pass(name, "5 fixtures verified and round-tripped".into())
}

fn oracle_equivalence_suite(name: &str, dims: &[usize], max_k: usize) -> SuiteResult {
    let sets = enumerate_product_subsets(dims, max_k);
    let mut mismatches = 0usize;
    for s in &sets {
        if is_good(s).good != brute_force_good(s, 6) {
            mismatches += 1;
        }
    }
    SuiteResult::check(
        name,
        mismatches == 0,
        format!(
            "{} instances, {} disagreement(s) between rank and brute force",
            sets.len(),
            mismatches
        ),
    )
}

fn links_rank_agreement_n2(seed: u64, trials: usize) -> SuiteResult {
    let name = "links-rank-agreement-n2";
    let mut checked = 0usize;
    for s in enumerate_product_subsets(&[3, 3], 5) {
        match good_via_links(&s) {
            Ok(via_links) if via_links == is_good(&s).good => checked += 1,
            Ok(_) => {
                return SuiteResult::fail(
                    name,
                    format!("criteria disagree on {:?}", s.points()),
                )
            }
            Err(e) => return SuiteResult::fail(name, format!("link criterion failed: {e}")),
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shape = SetShape::new(2, 30, 8);
    for _ in 0..trials {
        let s = random_point_set_with_axes(&mut rng, 2, shape);
        match good_via_links(&s) {
            Ok(via_links) if via_links == is_good(&s).good => checked += 1,
            Ok(_) => {
                return SuiteResult::fail(
                    name,
                    format!("criteria disagree on {:?}", s.points()),
                )
            }
            Err(e) => return SuiteResult::fail(name, format!("link criterion failed: {e}")),
        }
    }
    SuiteResult::pass(name, format!("{checked} two-axis sets, full agreement"))
}

fn links_rank_agreement_n3_linked() -> SuiteResult {
    let name = "links-rank-agreement-n3-linked";
    let mut checked = 0usize;
    for s in enumerate_product_subsets(&[2, 2, 2], 6) {
        let partition = match linked_components(&s) {
            Ok(p) => p,
            Err(e) => return SuiteResult::fail(name, format!("components failed: {e}")),
        };
        if partition.len() != 1 {
            continue;
        }
        match good_via_links(&s) {
            Ok(via_links) if via_links == is_good(&s).good => checked += 1,
            Ok(_) => {
                return SuiteResult::fail(
                    name,
                    format!("criteria disagree on {:?}", s.points()),
                )
            }
            Err(e) => return SuiteResult::fail(name, format!("link criterion failed: {e}")),
        }
    }
    SuiteResult::pass(name, format!("{checked} linked three-axis sets, full agreement"))
}

fn decompose_roundtrip_suite(seed: u64, trials: usize) -> SuiteResult {
    let name = "decompose-roundtrip";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shape = SetShape::new(4, 12, 6);
    for _ in 0..trials {
        let s = random_good_set(&mut rng, shape);
        let f = random_function(&mut rng, &s);
        match decompose(&s, &f) {
            Ok(DecomposeOutcome::Decomposed(d)) => {
                for p in s.points() {
                    if evaluate(&d, p).ok().as_ref() != f.get(p) {
                        return SuiteResult::fail(
                            name,
                            "decomposition failed to reproduce its function".into(),
                        );
                    }
                }
            }
            _ => {
                return SuiteResult::fail(name, "good set failed to decompose".into());
            }
        }
    }
    let bad_shape = SetShape::new(3, 10, 3);
    let mut obstructed = 0usize;
    let mut attempts = 0usize;
    while obstructed < trials {
        attempts += 1;
        if attempts > trials * 20 {
            return SuiteResult::fail(name, "could not reach the obstruction quota".into());
        }
        let s = random_bad_set(&mut rng, bad_shape);
        let f = random_function(&mut rng, &s);
        match decompose(&s, &f) {
            Ok(DecomposeOutcome::Obstructed(cert, functional)) => {
                let recomputed = loop_functional(&cert, &f);
                if !verify_loop(&cert)
                    || functional == 0.into()
                    || recomputed.ok() != Some(functional)
                {
                    return SuiteResult::fail(name, "obstruction certificate is unsound".into());
                }
                obstructed += 1;
            }
            Ok(DecomposeOutcome::Decomposed(_)) => {
                // A random function can still happen to respect every loop.
            }
            Err(e) => return SuiteResult::fail(name, format!("decompose errored: {e}")),
        }
    }
    SuiteResult::pass(
        name,
        format!("{trials} exact round trips, {obstructed} sound obstructions"),
    )
}

fn hereditary_suite(label: &str, s: &PointSet, trials: usize, seed: u64) -> SuiteResult {
    let name = "hereditary";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let subset_size = rng.gen_range(1..=s.len());
    match check_hereditary(s, trials, subset_size, seed) {
        Ok(report) if report.passed => SuiteResult::pass(
            name,
            format!(
                "{label}: {trials} random subsets of size {subset_size} all good"
            ),
        ),
        Ok(report) => SuiteResult::fail(
            name,
            format!(
                "{label}: subset {:?} is not good",
                report.counterexample.unwrap_or_default()
            ),
        ),
        Err(e) => SuiteResult::fail(name, format!("{label}: {e}")),
    }
}

/// JSON form of the report.
pub fn report_to_value(report: &SelftestReport) -> Value {
    json!({
        "seed": report.seed,
        "passed": report.passed,
        "suites": report
            .suites
            .iter()
            .map(|s| json!({"name": s.name, "passed": s.passed, "detail": s.detail}))
            .collect::<Vec<_>>(),
    })
}

/// Text form of the report, one line per suite.
pub fn report_to_text(report: &SelftestReport) -> String {
    let mut out = String::new();
    for s in &report.suites {
        let mark = if s.passed { "ok  " } else { "FAIL" };
        out.push_str(&format!("{mark} {:<32} {}\n", s.name, s.detail));
    }
    out.push_str(&format!(
        "{} (seed {})\n",
        if report.passed { "all suites passed" } else { "SELFTEST FAILED" },
        report.seed
    ));
    out
}
